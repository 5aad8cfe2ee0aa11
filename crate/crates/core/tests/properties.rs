//! Randomized algebraic identities; every property runs on at least 100
//! seeded instances.

mod common;

use proptest::prelude::*;

fn run(check: fn(u64) -> common::Check, seed: u64) -> Result<(), TestCaseError> {
    check(seed).map_err(|e| TestCaseError::fail(format!("seed {seed}: {e}")))
}

macro_rules! property {
    ($name:ident, $check:path) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]
            #[test]
            fn $name(seed in any::<u64>()) {
                run($check, seed)?;
            }
        }
    };
}

property!(ring_axioms, common::ring_axioms);
property!(qshift_homomorphism, common::qshift_homomorphism);
property!(substitution_homomorphisms, common::substitutions);
property!(normalize_round_trip, common::normalize_round_trip);
property!(gcd_divides_both, common::gcd_divides);
property!(symmetric_split_solves, common::symmetric_split);
property!(torus_associative_and_unital, common::torus_associative);
property!(sigma_automorphism, common::sigma_automorphism);
property!(epsilon_homomorphism, common::epsilon_homomorphism);
property!(faithful_action, common::faithful_action);
property!(reduce_contract, common::reduce_contract);
property!(diophantine_family, common::dio_family);
property!(bracket_linearity, common::bracket_linearity);
property!(grammar_round_trip, common::grammar_round_trip);
property!(cx_linearity, common::cx_linearity);
property!(symbolic_matches_pointwise, common::symbolic_matches_pointwise);
