//! Exact arithmetic in `Z[λ¹h¹, …, λ^g h¹]((𝕃))` under the two completions.

mod coeff;
mod poly;
mod series;
mod window;

pub use coeff::{CoeffPoly, LambdaMonomial};
pub use poly::MotivePoly;
pub use series::{compare_on_overlap, Comparison, MotiveSeries, UnitSign};
pub(crate) use series::coeff_json;
pub use window::{GenusContext, Mode, TruncationWindow};
