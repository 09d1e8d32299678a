//! Block templates for the claimed decompositions of `M(2, L)` and `M(3, L)`.

use serde::Serialize;

use crate::curve::sym_power_poly;
use crate::ring::{GenusContext, MotivePoly, MotiveSeries};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Symmetric-power indices `(k₁, …, k_{r−1})`.
    pub indices: Vec<u32>,
    pub exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionTemplate {
    pub genus: u32,
    pub rank: u32,
    pub blocks: Vec<Block>,
}

impl DecompositionTemplate {
    /// Blocks `(k)` for `k ≤ g−2` with exponents `{k, 3g−3−2k}`, then `(g−1)` with `{g−1}`.
    pub fn rank2(g: u32) -> Self {
        let gi = g as i64;
        let mut blocks: Vec<Block> = (0..g - 1)
            .map(|k| Block {
                indices: vec![k],
                exponents: vec![k as i64, 3 * gi - 3 - 2 * k as i64],
            })
            .collect();
        blocks.push(Block {
            indices: vec![g - 1],
            exponents: vec![gi - 1],
        });
        DecompositionTemplate { genus: g, rank: 2, blocks }
    }

    /// Blocks `(k₁, k₂)` with `k₁ + k₂ < 2(g−1)`, then those with
    /// `k₁ + k₂ = 2(g−1)` and `k₁ < g−1`, each with exponents
    /// `{k₁ + 2k₂, 8g−8−2k₁−3k₂}`; finally `(g−1, g−1)` with `{3(g−1)}`.
    pub fn rank3(g: u32) -> Self {
        let gi = g as i64;
        let block = |k1: u32, k2: u32| Block {
            indices: vec![k1, k2],
            exponents: vec![
                k1 as i64 + 2 * k2 as i64,
                8 * gi - 8 - 2 * k1 as i64 - 3 * k2 as i64,
            ],
        };
        let top = 2 * (g - 1);
        let mut blocks = Vec::new();
        for s in 0..top {
            for k2 in 0..=s {
                blocks.push(block(s - k2, k2));
            }
        }
        for k1 in 0..g - 1 {
            blocks.push(block(k1, top - k1));
        }
        blocks.push(Block {
            indices: vec![g - 1, g - 1],
            exponents: vec![3 * (gi - 1)],
        });
        DecompositionTemplate { genus: g, rank: 3, blocks }
    }

    pub fn to_poly(&self) -> MotivePoly {
        let g = self.genus;
        let mut out = MotivePoly::zero();
        for b in &self.blocks {
            let class = b
                .indices
                .iter()
                .fold(MotivePoly::one(g), |acc, &k| acc.mul(&sym_power_poly(g, k)));
            for &e in &b.exponents {
                out.add_assign(&class.shift(e));
            }
        }
        out
    }

    pub fn to_series(&self, ctx: GenusContext) -> MotiveSeries {
        MotiveSeries::from_poly(ctx, &self.to_poly())
    }

    /// Dimension of the moduli space, `(r² − 1)(g − 1)`.
    pub fn top_degree(&self) -> i64 {
        (self.rank as i64 * self.rank as i64 - 1) * (self.genus as i64 - 1)
    }
}

pub fn rank2_decomposition(ctx: GenusContext) -> MotiveSeries {
    DecompositionTemplate::rank2(ctx.g()).to_series(ctx)
}

pub fn rank3_decomposition(ctx: GenusContext) -> MotiveSeries {
    DecompositionTemplate::rank3(ctx.g()).to_series(ctx)
}
