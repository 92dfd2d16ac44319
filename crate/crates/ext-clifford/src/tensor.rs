//! Tensor products of extended Clifford algebras.
//!
//! The class of extended Clifford algebras is closed under the tensor
//! product. Classification of a product is done at the invariant level:
//! dimensions and center exponents add over factors and trace signatures
//! multiply, so the label of a product is recovered from the combined
//! profile without constructing the product algebra. For small factor
//! lists the combination rules themselves are checkable against the blade
//! engine via [`TensorList::brute_system`].

use crate::blade::GeneratorSystem;
use crate::classify::{classify, AlgebraType, ClassLabel};
use crate::error::{Error, Result};
use crate::oracle::{InvariantProfile, DEFAULT_SWEEP_CAP};
use crate::signature::ExtSignature;

/// A nonempty ordered list of tensor factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorList {
    factors: Vec<ExtSignature>,
}

impl TensorList {
    pub fn new(factors: Vec<ExtSignature>) -> Result<TensorList> {
        if factors.is_empty() {
            return Err(Error::EmptyInput("tensor product needs at least one factor"));
        }
        Ok(TensorList { factors })
    }

    /// A single factor.
    pub fn singleton(sig: ExtSignature) -> TensorList {
        TensorList { factors: vec![sig] }
    }

    pub fn factors(&self) -> &[ExtSignature] {
        &self.factors
    }

    pub fn total_generators(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.total_generators()))
            .sum()
    }

    /// Predicted profile of the product; signatures multiply, so the
    /// result can exceed an `i64` for very long factor lists, in which
    /// case `TooLarge` is returned.
    pub fn profile(&self) -> Result<InvariantProfile> {
        let (log2_dim, log2_center, sig_sign, sig_exp) = self.profile_parts();
        let trace_sig = match sig_sign {
            0 => 0,
            _ if sig_exp >= 63 => {
                return Err(Error::TooLarge {
                    what: "trace signature exponent",
                    required: sig_exp,
                    cap: 62,
                })
            }
            s => i64::from(s) << sig_exp,
        };
        Ok(InvariantProfile::new(log2_dim, log2_center, trace_sig))
    }

    /// The combined profile in exponent form: dimension and center
    /// exponents, and the trace signature as (sign, exponent).
    fn profile_parts(&self) -> (u64, u64, i8, u64) {
        let mut log2_dim = 0u64;
        let mut log2_center = 0u64;
        let mut sig_sign = 1i8;
        let mut sig_exp = 0u64;
        for &factor in &self.factors {
            let label = classify(factor);
            log2_dim += label.log2_dim();
            log2_center += label.big_m;
            match label.kind {
                AlgebraType::III => sig_sign = 0,
                AlgebraType::I | AlgebraType::IV => {}
                AlgebraType::II | AlgebraType::V => sig_sign = -sig_sign,
            }
            // |trace| = 2^N for I/II and 2^(M+N) for IV/V
            sig_exp += match label.kind {
                AlgebraType::I | AlgebraType::II => label.big_n,
                AlgebraType::IV | AlgebraType::V => label.big_m + label.big_n,
                AlgebraType::III => 0,
            };
        }
        (log2_dim, log2_center, sig_sign, sig_exp)
    }

    /// Classify the tensor product. Equals
    /// `profile_to_label(self.profile())` but works at the exponent level,
    /// so it never overflows and never fails: the class of extended
    /// Clifford algebras is closed under the tensor product.
    pub fn classify(&self) -> ClassLabel {
        let (log2_dim, log2_center, sig_sign, _) = self.profile_parts();
        let big_m = log2_center;
        debug_assert!((log2_dim - big_m) % 2 == 0);
        let big_n = (log2_dim - big_m) / 2;
        let kind = match (sig_sign, big_m) {
            (0, _) => AlgebraType::III,
            (1, 0) => AlgebraType::I,
            (-1, 0) => AlgebraType::II,
            (1, _) => AlgebraType::IV,
            (-1, _) => AlgebraType::V,
            _ => unreachable!(),
        };
        let label = ClassLabel::new(kind, big_m, big_n);
        label
            .validate()
            .expect("tensor products of extended Clifford algebras stay in the class");
        label
    }

    /// One generator system for the whole product: within-factor
    /// relations per factor, all cross-factor pairs commuting. Mainly
    /// used to validate the profile combination rules by brute force.
    pub fn brute_system(&self) -> Result<GeneratorSystem> {
        self.brute_system_with_cap(DEFAULT_SWEEP_CAP)
    }

    pub fn brute_system_with_cap(&self, cap: usize) -> Result<GeneratorSystem> {
        let total = self.total_generators();
        if total > cap as u64 {
            return Err(Error::TooLarge {
                what: "tensor brute-force system",
                required: total,
                cap: cap as u64,
            });
        }
        let systems: Vec<GeneratorSystem> = self
            .factors
            .iter()
            .map(|&f| GeneratorSystem::from_signature(f))
            .collect();
        GeneratorSystem::tensor_of(&systems)
    }
}

/// Combine two profiles the way tensor products do: dimensions and
/// center exponents add, trace signatures multiply.
pub fn combine_profiles(a: InvariantProfile, b: InvariantProfile) -> Result<InvariantProfile> {
    let trace_sig = a
        .trace_sig
        .checked_mul(b.trace_sig)
        .ok_or(Error::TooLarge {
            what: "trace signature product",
            required: u64::MAX,
            cap: i64::MAX as u64,
        })?;
    Ok(InvariantProfile::new(
        a.log2_dim + b.log2_dim,
        a.log2_center + b.log2_center,
        trace_sig,
    ))
}

/// Normalize a tensor product of plain Clifford algebras Cl(p_i,q_i) to a
/// single extended signature. With m = the number of factors on an odd
/// number of generators: for m <= 1 the result is a plain Clifford
/// signature Cl(0,0|p,q) with p + q = sum of the n_i; for m >= 2 it is a
/// proper K(r,s) x Cl(p,q) representative. Either way the result carries
/// the label of the product.
pub fn normalize_clifford_tensor(factors: &[(u32, u32)]) -> Result<ExtSignature> {
    if factors.is_empty() {
        return Err(Error::EmptyInput("normalize_clifford_tensor needs factors"));
    }
    let odd = factors.iter().filter(|&&(p, q)| (p + q) % 2 == 1).count();
    let list = TensorList::new(
        factors
            .iter()
            .map(|&(p, q)| ExtSignature::clifford(p, q))
            .collect(),
    )?;
    list.classify().canonical_signature(odd <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::system_profile;

    fn cl(p: u32, q: u32) -> ExtSignature {
        ExtSignature::clifford(p, q)
    }

    fn list(factors: &[ExtSignature]) -> TensorList {
        TensorList::new(factors.to_vec()).unwrap()
    }

    #[test]
    fn profile_examples() {
        // H x H has the type-I profile (4, 0, +4)
        let hh = list(&[cl(0, 2), cl(0, 2)]);
        assert_eq!(hh.profile().unwrap(), InvariantProfile::new(4, 0, 4));
        // ... and brute force over the 16-blade combined system agrees
        let brute = system_profile(&hh.brute_system().unwrap()).unwrap();
        assert_eq!(brute, InvariantProfile::new(4, 0, 4));

        // the singleton R
        assert_eq!(
            TensorList::singleton(ExtSignature::new(0, 0, 0, 0)).profile().unwrap(),
            InvariantProfile::new(0, 0, 1)
        );

        // C x C
        let cc = list(&[cl(0, 1), cl(0, 1)]);
        assert_eq!(cc.profile().unwrap(), InvariantProfile::new(2, 2, 0));
        let brute = system_profile(&cc.brute_system().unwrap()).unwrap();
        assert_eq!(brute, InvariantProfile::new(2, 2, 0));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            list(&[cl(0, 2), cl(0, 2)]).classify(),
            ClassLabel::new(AlgebraType::I, 0, 2)
        );
        for k in 0..6 {
            let factors: Vec<ExtSignature> = std::iter::repeat_n(cl(1, 1), k).collect();
            let label = if factors.is_empty() {
                TensorList::singleton(ExtSignature::new(0, 0, 0, 0)).classify()
            } else {
                list(&factors).classify()
            };
            assert_eq!(label, ClassLabel::new(AlgebraType::I, 0, k as u64));
        }
        // (R + R) x C = C + C
        let dxc = list(&[cl(1, 0), cl(0, 1)]);
        assert_eq!(dxc.classify(), ClassLabel::new(AlgebraType::III, 2, 0));
        let brute = system_profile(&dxc.brute_system().unwrap()).unwrap();
        assert_eq!(brute, InvariantProfile::new(2, 2, 0));
    }

    #[test]
    fn classify_agrees_with_profile_route() {
        use crate::oracle::profile_to_label;
        let lists = [
            list(&[cl(0, 2), cl(0, 2)]),
            list(&[cl(0, 1), cl(3, 2)]),
            list(&[ExtSignature::new(2, 1, 1, 1), cl(1, 0)]),
            list(&[cl(0, 1), cl(0, 1), cl(0, 1)]),
            list(&[ExtSignature::commutative(0, 1), cl(4, 0), cl(0, 2)]),
        ];
        for l in lists {
            assert_eq!(profile_to_label(l.profile().unwrap()).unwrap(), l.classify());
        }
    }

    #[test]
    fn brute_system_shapes() {
        // two C factors: 2 generators, both square -1, commuting
        let sys = list(&[cl(0, 1), cl(0, 1)]).brute_system().unwrap();
        assert_eq!(sys.len(), 2);
        assert!(!sys.anticommutes(0, 1));
        assert_eq!(sys.square(0), crate::sign::Sign::Minus);

        // Cl(1,1) x Cl(1,1): two anticommuting 2-blocks, cross pairs commute
        let sys = list(&[cl(1, 1), cl(1, 1)]).brute_system().unwrap();
        assert_eq!(sys.len(), 4);
        assert!(sys.anticommutes(0, 1));
        assert!(sys.anticommutes(2, 3));
        for a in 0..2 {
            for b in 2..4 {
                assert!(!sys.anticommutes(a, b));
            }
        }
    }

    #[test]
    fn multiplicativity_exhaustive_small() {
        // profiles combine componentwise for all factor pairs with at
        // most 8 generators in total
        let mut sigs = Vec::new();
        for r in 0..=4u32 {
            for s in 0..=4 - r {
                for p in 0..=4 - r - s {
                    for q in 0..=4 - r - s - p {
                        sigs.push(ExtSignature::new(r, s, p, q));
                    }
                }
            }
        }
        for &a in &sigs {
            for &b in &sigs {
                if a.total_generators() + b.total_generators() > 8 {
                    continue;
                }
                let pair = list(&[a, b]);
                let brute = system_profile(&pair.brute_system().unwrap()).unwrap();
                let combined = combine_profiles(
                    crate::oracle::brute_profile(a).unwrap(),
                    crate::oracle::brute_profile(b).unwrap(),
                )
                .unwrap();
                assert_eq!(brute, combined, "{a} x {b}");
                assert_eq!(pair.profile().unwrap(), brute, "{a} x {b}");
            }
        }
    }

    #[test]
    fn order_independence() {
        let factors = [cl(0, 2), ExtSignature::new(1, 1, 0, 1), cl(3, 0), cl(1, 1)];
        let base = list(&factors).classify();
        // all rotations and a few swaps
        for rot in 0..factors.len() {
            let mut perm = factors.to_vec();
            perm.rotate_left(rot);
            assert_eq!(list(&perm).classify(), base);
        }
        let mut rev = factors.to_vec();
        rev.reverse();
        assert_eq!(list(&rev).classify(), base);
    }

    #[test]
    fn generator_count_bookkeeping() {
        let l = list(&[cl(0, 2), ExtSignature::new(2, 0, 1, 1), cl(1, 0)]);
        let label = l.classify();
        let canonical = label.canonical_signature(false).unwrap();
        assert_eq!(
            u64::from(canonical.total_generators()),
            l.total_generators()
        );
    }

    #[test]
    fn bott_periodicity_against_cartan() {
        // tensoring with Cl(1,1) adds one to p and q
        for p in 0..=8u32 {
            for q in 0..=8 - p {
                let label = list(&[cl(p, q), cl(1, 1)]).classify();
                assert_eq!(label, classify(cl(p + 1, q + 1)));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        // single even factor: unchanged
        assert_eq!(normalize_clifford_tensor(&[(1, 1)]).unwrap(), cl(1, 1));

        // C x C = K(0,1) x Cl(0,1): one commuting and one anticommuting
        // generator, both square -1
        let sig = normalize_clifford_tensor(&[(0, 1), (0, 1)]).unwrap();
        assert_eq!(sig, ExtSignature::new(0, 1, 0, 1));
        let direct = list(&[cl(0, 1), cl(0, 1)]);
        assert_eq!(classify(sig), direct.classify());
        assert_eq!(
            crate::oracle::brute_profile(sig).unwrap(),
            system_profile(&direct.brute_system().unwrap()).unwrap()
        );

        // one odd factor: a plain Clifford signature comes back
        let sig = normalize_clifford_tensor(&[(1, 0), (0, 2)]).unwrap();
        assert_eq!(sig, cl(0, 3));
        let label = list(&[cl(1, 0), cl(0, 2)]).classify();
        assert_eq!(label, ClassLabel::new(AlgebraType::V, 1, 1));
        assert_eq!(classify(sig), label);
        // the non-pure representative of the same class
        assert_eq!(classify(ExtSignature::new(1, 0, 0, 2)), label);

        assert!(matches!(
            normalize_clifford_tensor(&[]),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn normalize_m_rule() {
        // m <= 1 gives a pure Clifford signature with p + q = total;
        // m >= 2 gives a commuting part
        let pure = normalize_clifford_tensor(&[(2, 1), (1, 1), (2, 0)]).unwrap();
        assert_eq!((pure.r, pure.s), (0, 0));
        assert_eq!(pure.total_generators(), 7);

        let mixed = normalize_clifford_tensor(&[(1, 0), (0, 1), (1, 1)]).unwrap();
        assert!(mixed.r + mixed.s >= 1);
        assert_eq!(mixed.total_generators(), 4);
        let label = list(&[cl(1, 0), cl(0, 1), cl(1, 1)]).classify();
        assert_eq!(classify(mixed), label);
    }
}
