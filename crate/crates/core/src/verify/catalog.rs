//! Stable check identifiers and the identity each one verifies.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Needs the 𝕃-adic window to reach `8g − 8`.
    #[serde(skip)]
    pub(crate) rank3_adic: bool,
    /// Runs in the dimensional completion with rank-3 degrees.
    #[serde(skip)]
    pub(crate) rank3_dim: bool,
    #[serde(skip)]
    pub(crate) dimensional: bool,
}

const fn info(id: &'static str, anchor: &'static str) -> CheckInfo {
    CheckInfo { id, anchor, rank3_adic: false, rank3_dim: false, dimensional: false }
}

const fn adic3(id: &'static str, anchor: &'static str) -> CheckInfo {
    CheckInfo { rank3_adic: true, ..info(id, anchor) }
}

const fn dim(id: &'static str, anchor: &'static str, rank3: bool) -> CheckInfo {
    CheckInfo { dimensional: true, rank3_dim: rank3, ..info(id, anchor) }
}

pub const CATALOG: &[CheckInfo] = &[
    info("zeta-rationality", "(1−t)(1−𝕃t)Z(C,t) = Σ_{k=0}^{2g} λ^k h¹(C) t^k"),
    info("functional-equation", "λ^a h¹(C) = λ^{2g−a} h¹(C) ⊗ 𝕃^{a−g} for 0 ≤ a ≤ 2g"),
    info("symmpro", "h(C_k) = h(J)·Σ_{l=0}^{k−g} 𝕃^l + h(C_{2g−2−k})·𝕃^{k−g+1} for k ≥ g"),
    info(
        "deczeta-chow",
        "Z(C,𝕃^i) = Σ_{k<g} χ(C_k)𝕃^{ik} + Σ_{k≤g−2} χ(C_k)𝕃^{(2i+1)(g−1)−(i+1)k} + χ(J)𝕃^{ig}/((1−𝕃^i)(1−𝕃^{i+1}))",
    ),
    dim(
        "deczeta-var",
        "𝕃^{(2i−1)(g−1)}Z(C,𝕃^{−i}) = Σ_{k<g} [C_k]𝕃^{(i−1)k} + Σ_{k≤g−2} [C_k]𝕃^{(2i−1)(g−1)−ik} + [J]𝕃^{(i−1)g}/((𝕃^{i−1}−1)(𝕃^i−1))",
        false,
    ),
    info("motiviczeta-closed-form", "Z(C,𝕃^i) = (1+𝕃^i)^{h¹(C)}/((1−𝕃^i)(1−𝕃^{i+1}))"),
    info(
        "rank2",
        "χ(M(2,L)) = Z(C,𝕃) − χ(J)𝕃^g/((1−𝕃)(1−𝕃²)) = Σ_{k≤g−2} χ(C_k)(𝕃^k + 𝕃^{3g−3−2k}) + χ(C_{g−1})𝕃^{g−1}",
    ),
    adic3(
        "rank3",
        "χ(M(3,L)) = Z(C,𝕃)Z(C,𝕃²) − χ(Bun^un_{3,L}) = Σ χ(C_{k₁}×C_{k₂})(𝕃^{k₁+2k₂} + 𝕃^{8g−8−2k₁−3k₂}) + χ(C_{g−1}×C_{g−1})𝕃^{3g−3}",
    ),
    info(
        "rank3-x-identity",
        "four-term rational identity in x = x^{2k+g}(1−x^{g−1−k})(1−x^{4g−4−4k})/((1−x)(1−x²)) for 0 ≤ k ≤ g−2",
    ),
    adic3(
        "j-squared-cancellation",
        "(𝕃^{3g} − 𝕃^{3g−1}(1+𝕃)² + 𝕃^{3g−1}(1+𝕃+𝕃²))/((1−𝕃)(1−𝕃²)²(1−𝕃³)) = 0",
    ),
    adic3(
        "inversion-consistency",
        "Σ_{n₁+…+n_s=n} (−1)^{s−1} χ(J)^s/(1−𝕃)^{s−1} Π_j Π_{i<n_j} Z_i Π_{j<s} 1/(1−𝕃^{n_j+n_{j+1}}) 𝕃^{Σ_{i<j} n_i n_j (g−1) + Σ (n_i+n_{i+1})⟨−(n₁+…+n_i)d/n⟩}",
    ),
    dim("behrend-dhillon", "[Bun_{SL_r}] = 𝕃^{(r²−1)(g−1)} Π_{i=2}^{r} Z(C,𝕃^{−i})", true),
    dim("var-rank2", "[M(2,L)] = [Bun_{2,L}] − [J]𝕃^g/((𝕃−1)(𝕃²−1)) in the dimensional completion", false),
    CheckInfo {
        rank3_adic: true,
        ..dim("var-rank3", "[M(3,L)] = [Bun_{3,L}] − [Bun^un_{3,L}] with units 𝕃^i − 1", true)
    },
    dim("unstable-rank2-hn-sum", "[J]𝕃^g/(𝕃−1)·Σ_{d≥1} 𝕃^{−2d} = [J]𝕃^g/((𝕃−1)(𝕃²−1))", false),
    info("realize-poincare-rank2", "P_t(M(2,L)) = ((1+t³)^{2g} − t^{2g}(1+t)^{2g})/((1−t²)(1−t⁴))"),
    info("realize-hodge-consistency", "E(X; u=t, v=t) = P_t(X)"),
    info("count-cross-check", "#C_k(F_q) = [t^k] exp(Σ_j N_j t^j / j)"),
    adic3(
        "j-linear-term",
        "χ(J)-part of χ(M(3,L)) = χ(J)·Σ_{k≤g−2} χ(C_k)𝕃^{2k+g}(1−𝕃^{g−1−k})(1−𝕃^{4g−4−4k})/((1−𝕃)(1−𝕃²))",
    ),
];

pub fn lookup(id: &str) -> Option<(usize, &'static CheckInfo)> {
    CATALOG.iter().enumerate().find(|(_, c)| c.id == id)
}
