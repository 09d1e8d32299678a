mod common;

use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(input in common::genus_and_three_polys()) {
        common::ring_axioms(input)?;
    }

    #[test]
    fn duality_closure(input in common::duality_inputs()) {
        common::duality_closure(input)?;
    }

    #[test]
    fn unit_inverse(input in common::unit_inputs()) {
        common::unit_inverse(input)?;
    }

    #[test]
    fn window_soundness(input in common::window_inputs()) {
        common::window_soundness(input)?;
    }

    #[test]
    fn realization_homomorphism(input in common::homomorphism_inputs()) {
        common::realization_homomorphism(input)?;
    }
}
