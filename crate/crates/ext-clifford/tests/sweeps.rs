//! Module-invariant sweeps at their full stated sizes. These are the
//! slower exhaustive checks; the per-module unit tests cover the same
//! ground at smaller scale.

use ext_clifford::selftest::{
    closure_random_sweep, multiplicativity_exhaustive_sweep, periodicity_sweep,
    sign_consistency_sweep, signatures_up_to, SWEEP_SEED,
};
use ext_clifford::TensorList;

#[test]
fn blade_square_sign_consistent_up_to_12_generators() {
    let outcome = sign_consistency_sweep(12);
    assert_eq!(outcome.cases, 1820);
    assert_eq!(outcome.failures, 0, "{:?}", outcome.first_failure);
}

#[test]
fn profile_multiplicativity_exhaustive_up_to_10_generators() {
    let outcome = multiplicativity_exhaustive_sweep(10);
    assert_eq!(outcome.failures, 0, "{:?}", outcome.first_failure);
    // pairs (a, b) with |a| + |b| <= 10: sum over k of C(k+7, 7)
    assert_eq!(outcome.cases, 43758);
}

#[test]
fn closure_exhaustive_small_and_random_large() {
    // every pair and triple over tiny factors classifies to a valid label
    let small = signatures_up_to(2);
    let mut checked = 0u64;
    for &a in &small {
        for &b in &small {
            let pair = TensorList::new(vec![a, b]).unwrap();
            pair.classify().validate().unwrap();
            for &c in &small {
                let triple = TensorList::new(vec![a, b, c]).unwrap();
                let label = triple.classify();
                label.validate().unwrap();
                assert_eq!(label.log2_dim(), triple.total_generators());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 15 * 15 * 15);

    // randomized factor lists at the 12-generator cap
    let outcome = closure_random_sweep(500, 12, SWEEP_SEED);
    assert_eq!(outcome.failures, 0, "{:?}", outcome.first_failure);
}

#[test]
fn bott_periodicity_up_to_8() {
    let outcome = periodicity_sweep(8);
    assert_eq!(outcome.cases, 45);
    assert_eq!(outcome.failures, 0, "{:?}", outcome.first_failure);
}
