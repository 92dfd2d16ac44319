//! Property tests: algebra laws of the blade engine, classification
//! invariants, and parser round trips on randomly generated trees.

use num_rational::Rational64;
use proptest::prelude::*;

use ext_clifford::{
    classify, is_isomorphic, AlgebraExpr, Blade, ExtSignature, GeneratorSystem, IntMultivector,
    Multivector,
};

fn arb_signature(max: u32) -> impl Strategy<Value = ExtSignature> {
    (0..=max, 0..=max, 0..=max, 0..=max).prop_map(|(r, s, p, q)| ExtSignature::new(r, s, p, q))
}

/// Multivector over a fixed 4-generator system, with small coefficients.
fn arb_multivector() -> impl Strategy<Value = IntMultivector> {
    prop::collection::btree_map(0u64..16, -4i64..=4, 0..6)
        .prop_map(|terms| Multivector::from_terms(terms.into_iter().map(|(b, c)| (Blade(b), c))))
}

/// Expression trees restricted to the shapes the parser can produce
/// (tensors have at least two children).
fn arb_expr() -> impl Strategy<Value = AlgebraExpr> {
    let leaf = arb_signature(5).prop_map(AlgebraExpr::Atom);
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(AlgebraExpr::Tensor),
            (inner, 0..4u32).prop_map(|(e, n)| AlgebraExpr::Power(Box::new(e), n)),
        ]
    })
}

proptest! {
    #[test]
    fn mv_product_associative(
        x in arb_multivector(),
        y in arb_multivector(),
        z in arb_multivector(),
    ) {
        let sys = GeneratorSystem::from_signature(ExtSignature::new(1, 1, 1, 1));
        let left = sys.mv_product(&sys.mv_product(&x, &y), &z);
        let right = sys.mv_product(&x, &sys.mv_product(&y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mv_product_distributive(
        x in arb_multivector(),
        y in arb_multivector(),
        z in arb_multivector(),
    ) {
        let sys = GeneratorSystem::from_signature(ExtSignature::new(0, 1, 2, 1));
        let left = sys.mv_product(&x, &(&y + &z));
        let right = &sys.mv_product(&x, &y) + &sys.mv_product(&x, &z);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mv_rational_coefficients_agree_with_integers(
        x in arb_multivector(),
        y in arb_multivector(),
    ) {
        // the same product computed over Q must match the i64 result
        let sys = GeneratorSystem::from_signature(ExtSignature::new(1, 0, 2, 1));
        let lift = |mv: &IntMultivector| -> Multivector<Rational64> {
            Multivector::from_terms(
                mv.terms().map(|(b, &c)| (b, Rational64::from_integer(c))),
            )
        };
        let rational = sys.mv_product(&lift(&x), &lift(&y));
        let integer = sys.mv_product(&x, &y);
        prop_assert_eq!(lift(&integer), rational);
    }

    #[test]
    fn classify_label_is_valid(sig in arb_signature(40)) {
        let label = classify(sig);
        prop_assert!(label.validate().is_ok());
        prop_assert_eq!(label.log2_dim(), u64::from(sig.total_generators()));
    }

    #[test]
    fn isomorphism_reflexive_and_symmetric(
        a in arb_signature(12),
        b in arb_signature(12),
    ) {
        prop_assert!(is_isomorphic(a, a));
        prop_assert_eq!(is_isomorphic(a, b), is_isomorphic(b, a));
    }

    #[test]
    fn canonical_signature_preserves_class_and_size(sig in arb_signature(6)) {
        // the representative has the same label and the same generator count
        let label = classify(sig);
        let canonical = label.canonical_signature(false).unwrap();
        prop_assert_eq!(classify(canonical), label);
        prop_assert_eq!(canonical.total_generators(), sig.total_generators());
    }

    #[test]
    fn parse_print_round_trip(tree in arb_expr()) {
        let printed = tree.to_string();
        let reparsed = ext_clifford::parse(&printed).unwrap();
        prop_assert_eq!(reparsed, tree);
    }

    #[test]
    fn flatten_length_is_stable_under_reprint(tree in arb_expr()) {
        let printed = tree.to_string();
        let reparsed = ext_clifford::parse(&printed).unwrap();
        prop_assert_eq!(reparsed.flatten(), tree.flatten());
    }
}

#[test]
fn rational_coefficients_exact_value() {
    // (1/2 + 1/3 e1)^2 = 13/36 + 1/3 e1 in Cl(1,0)
    let sys = GeneratorSystem::from_signature(ExtSignature::clifford(1, 0));
    let half = Rational64::new(1, 2);
    let third = Rational64::new(1, 3);
    let x = Multivector::from_terms([(Blade(0), half), (Blade(1), third)]);
    let square = sys.mv_product(&x, &x);
    assert_eq!(square.coeff(Blade(0)), Rational64::new(13, 36));
    assert_eq!(square.coeff(Blade(1)), third);
}
