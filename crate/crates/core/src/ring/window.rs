use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Direction in which a completed series discards its tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Completion along the ideal (𝕃): exact from below, tail truncated toward +∞.
    Adic,
    /// Dimensional completion: exact from above, tail truncated toward −∞.
    Dimensional,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Adic => f.write_str("adic"),
            Mode::Dimensional => f.write_str("dimensional"),
        }
    }
}

/// Range of retained 𝕃-exponents, together with the completion it models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationWindow {
    pub e_min: i64,
    pub e_max: i64,
    pub mode: Mode,
}

impl TruncationWindow {
    pub fn new(e_min: i64, e_max: i64, mode: Mode) -> Result<Self> {
        if e_min > e_max {
            return Err(Error::InvalidWindow { e_min, e_max });
        }
        Ok(TruncationWindow { e_min, e_max, mode })
    }

    /// `[0, 10g + 10]`.
    pub fn default_adic(g: u32) -> Self {
        TruncationWindow {
            e_min: 0,
            e_max: 10 * g as i64 + 10,
            mode: Mode::Adic,
        }
    }

    /// `[−(10g + 10), r²(g − 1) + g]`, sized for rank-`r` moduli classes.
    pub fn default_dimensional(g: u32, rank: u32) -> Self {
        let g = g as i64;
        let r = rank as i64;
        TruncationWindow {
            e_min: -(10 * g + 10),
            e_max: r * r * (g - 1) + g,
            mode: Mode::Dimensional,
        }
    }

    pub fn contains(&self, e: i64) -> bool {
        self.e_min <= e && e <= self.e_max
    }
}

/// Genus of the curve plus the window every series in the computation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenusContext {
    g: u32,
    window: TruncationWindow,
}

impl GenusContext {
    pub fn new(g: i64, window: TruncationWindow) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g));
        }
        if window.e_min > window.e_max {
            return Err(Error::InvalidWindow {
                e_min: window.e_min,
                e_max: window.e_max,
            });
        }
        let g = u32::try_from(g).map_err(|_| Error::InvalidGenus(g))?;
        Ok(GenusContext { g, window })
    }

    pub fn adic(g: i64) -> Result<Self> {
        Self::new(g, TruncationWindow::default_adic(g.max(0) as u32))
    }

    pub fn dimensional(g: i64, rank: u32) -> Result<Self> {
        Self::new(g, TruncationWindow::default_dimensional(g.max(0) as u32, rank))
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn genus(&self) -> i64 {
        self.g as i64
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    pub fn mode(&self) -> Mode {
        self.window.mode
    }

    pub fn with_window(&self, window: TruncationWindow) -> Result<Self> {
        Self::new(self.g as i64, window)
    }
}
