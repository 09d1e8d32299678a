//! Motivic classes attached to the curve itself.

mod checks;
mod classes;
mod zeta;

pub use checks::{
    check_dec_zeta, check_functional_equation, check_symmetric_power_decomposition,
    check_zeta_closed_form, check_zeta_rationality, symmetric_power_via_jacobian,
};
pub use classes::{
    binomial_h1_poly, binomial_h1_series, jacobian_class, jacobian_poly, sym_power_class,
    sym_power_poly,
};
pub use zeta::{
    dec_zeta_finite_adic, dec_zeta_rhs, zeta_at_lefschetz, zeta_closed_form, ZetaSeries,
};
