//! Bundle stacks, moduli classes of rank 2 and 3, their claimed
//! decompositions, and the inversion formula.

mod checks;
mod classes;
mod dimensional;
mod inversion;
mod template;

pub use checks::{
    check_j_linear_term, check_j_squared_cancellation, check_rank2, check_rank3,
    j_linear_closed_form, x_identity_all, x_identity_check,
};
pub use classes::{
    bgm_chi, bun_chi, m2_chi, m3_chi, unstable_rank2_chi, unstable_rank3_chi,
    unstable_rank3_reduced, unstable_rank3_terms, zeta_value,
};
pub use dimensional::{
    behrend_dhillon_bun, check_behrend_dhillon, check_unstable_rank2_hn_sum,
    lefschetz_cube_probe, unstable_rank2_var_closed, unstable_rank2_var_sum, var_rank2_check,
    var_rank3_check, L3_NOTE,
};
pub use inversion::{
    check_inversion_consistency, frac_part, inversion_formula, inversion_term, InversionSpec,
    INVERSION_NOTE,
};
pub use template::{rank2_decomposition, rank3_decomposition, Block, DecompositionTemplate};
