//! Verification sweeps: every classification claim checked against the
//! blade-engine oracle and the explicit matrix representations, over
//! exhaustively enumerated or seeded-random inputs. Each sweep returns a
//! deterministic case/failure count; callers (the CLI `selftest` command
//! and the acceptance tests) decide how to report the outcome.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::GeneratorSystem;
use crate::classify::{cartan_decompose, classify, AlgebraType, ClassLabel};
use crate::oracle::{brute_profile, profile_to_label, system_profile};
use crate::rep::{canonical_rep, regular_rep, verify_relations};
use crate::signature::ExtSignature;
use crate::tensor::{combine_profiles, TensorList};

/// Outcome of one sweep.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// Description of the first failing case, if any.
    pub first_failure: Option<String>,
}

impl SweepOutcome {
    fn new(name: &'static str) -> SweepOutcome {
        SweepOutcome {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// All signatures with total generator count at most `max_total`.
pub fn signatures_up_to(max_total: u32) -> Vec<ExtSignature> {
    let mut out = Vec::new();
    for r in 0..=max_total {
        for s in 0..=max_total - r {
            for p in 0..=max_total - r - s {
                for q in 0..=max_total - r - s - p {
                    out.push(ExtSignature::new(r, s, p, q));
                }
            }
        }
    }
    out
}

/// Master check of the theorem: for every signature up to the cap, the
/// brute-force profile recovers exactly the table's label.
pub fn theorem_agreement_sweep(max_total: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("theorem agreement (oracle vs table)");
    for sig in signatures_up_to(max_total) {
        let ok = match brute_profile(sig).map(profile_to_label) {
            Ok(Ok(label)) => label == classify(sig),
            _ => false,
        };
        outcome.check(ok, || format!("{sig}: oracle disagrees with the table"));
    }
    outcome
}

/// Center dimension law: the number of central blades is 2^M.
pub fn center_law_sweep(max_total: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("center dimension law |center| = 2^M");
    for sig in signatures_up_to(max_total) {
        let system = GeneratorSystem::from_signature(sig);
        let count = system.center_basis().len() as u64;
        let expected = 1u64 << sig.derived().big_m;
        outcome.check(count == expected, || {
            format!("{sig}: center count {count}, expected {expected}")
        });
    }
    outcome
}

/// The closed-form blade square sign agrees with the blade product.
pub fn sign_consistency_sweep(max_total: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("blade square sign closed form");
    for sig in signatures_up_to(max_total) {
        let system = GeneratorSystem::from_signature(sig);
        let ok = system.blades().all(|blade| {
            let (sign, rest) = system.blade_product(blade, blade);
            rest.0 == 0 && system.blade_square_sign(blade) == Ok(sign)
        });
        outcome.check(ok, || format!("{sig}: square-sign mismatch"));
    }
    outcome
}

/// Cartan decomposition check: the decomposition of Cl(p,q) carries the
/// label of Cl(p,q), and the brute profile of Cl(p,q) equals the brute
/// profile of the decomposition's combined generator system.
pub fn cartan_sweep(max_n: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("Cartan decomposition of Cl(p,q)");
    for p in 0..=max_n {
        for q in 0..=max_n - p {
            let sig = ExtSignature::clifford(p, q);
            let decomposition = cartan_decompose(p, q);
            let factors: Vec<ExtSignature> = decomposition
                .factors()
                .iter()
                .map(|f| f.signature())
                .collect();
            let list = if factors.is_empty() {
                TensorList::singleton(ExtSignature::new(0, 0, 0, 0))
            } else {
                TensorList::new(factors).expect("nonempty")
            };
            let ok = decomposition.label() == classify(sig)
                && decomposition.total_generators() == u64::from(p + q)
                && match (brute_profile(sig), list.brute_system().map(|s| system_profile(&s))) {
                    (Ok(direct), Ok(Ok(decomposed))) => direct == decomposed,
                    _ => false,
                };
            outcome.check(ok, || format!("Cl({p},{q}): decomposition mismatch"));
        }
    }
    outcome
}

/// Complexification check: for each n, the n+1 complexified Clifford
/// algebras Cl(0,1|p,n-p) share one label and one brute profile.
pub fn complexification_sweep(max_n: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("complexified algebras coincide");
    for n in 0..=max_n {
        let sigs: Vec<ExtSignature> =
            (0..=n).map(|p| ExtSignature::new(0, 1, p, n - p)).collect();
        let labels: Vec<ClassLabel> = sigs.iter().map(|&s| classify(s)).collect();
        let profiles: Vec<_> = sigs.iter().map(|&s| brute_profile(s)).collect();
        let ok = labels.windows(2).all(|w| w[0] == w[1])
            && profiles.iter().all(|p| p.is_ok())
            && profiles.windows(2).all(|w| w[0] == w[1]);
        outcome.check(ok, || format!("n = {n}: complexified algebras differ"));
    }
    outcome
}

/// Round trip: classify(canonical_signature(L)) = L for every valid
/// label with M, N up to the bound, with and without the pure-Clifford
/// preference.
pub fn canonical_roundtrip_sweep(max_mn: u64) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("canonical signature round trip");
    for kind in AlgebraType::ALL {
        for m in 0..=max_mn {
            for n in 0..=max_mn {
                let label = ClassLabel::new(kind, m, n);
                if label.validate().is_err() {
                    continue;
                }
                for pure in [false, true] {
                    let ok = label
                        .canonical_signature(pure)
                        .map(|sig| classify(sig) == label)
                        .unwrap_or(false);
                    outcome.check(ok, || format!("{label} (pure={pure}): round trip failed"));
                }
            }
        }
    }
    outcome
}

/// Multiplicativity of profiles over random factor pairs: dims and
/// centers add, trace signatures multiply, and the prediction matches
/// the brute profile of the combined system.
pub fn multiplicativity_random_sweep(pairs: usize, max_total: u32, seed: u64) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("tensor profile multiplicativity (random pairs)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut produced = 0;
    while produced < pairs {
        let a = random_signature(&mut rng, max_total);
        let b = random_signature(&mut rng, max_total);
        if a.total_generators() + b.total_generators() > u64::from(max_total) {
            continue;
        }
        produced += 1;
        outcome.check(pair_is_multiplicative(a, b), || {
            format!("{a} x {b}: profile combination mismatch")
        });
    }
    outcome
}

/// Multiplicativity over all factor pairs with a small total.
pub fn multiplicativity_exhaustive_sweep(max_total: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("tensor profile multiplicativity (exhaustive)");
    let sigs = signatures_up_to(max_total);
    for &a in &sigs {
        for &b in &sigs {
            if a.total_generators() + b.total_generators() > u64::from(max_total) {
                continue;
            }
            outcome.check(pair_is_multiplicative(a, b), || {
                format!("{a} x {b}: profile combination mismatch")
            });
        }
    }
    outcome
}

fn pair_is_multiplicative(a: ExtSignature, b: ExtSignature) -> bool {
    let list = TensorList::new(vec![a, b]).expect("two factors");
    let brute = match list.brute_system().map(|s| system_profile(&s)) {
        Ok(Ok(profile)) => profile,
        _ => return false,
    };
    let combined = match (brute_profile(a), brute_profile(b)) {
        (Ok(pa), Ok(pb)) => match combine_profiles(pa, pb) {
            Ok(c) => c,
            Err(_) => return false,
        },
        _ => return false,
    };
    brute == combined && list.profile() == Ok(brute)
}

/// Closure under the tensor product: random factor lists always classify
/// to a valid label, the label survives factor permutation, and the
/// canonical representative has the right generator count.
pub fn closure_random_sweep(lists: usize, max_total: u32, seed: u64) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("tensor closure (random factor lists)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..lists {
        let len = rng.gen_range(1..=4usize);
        let factors: Vec<ExtSignature> = (0..len)
            .map(|_| random_signature(&mut rng, max_total / len as u32))
            .collect();
        let list = TensorList::new(factors.clone()).expect("nonempty");
        let label = list.classify();
        let mut shuffled = factors.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        let permuted = TensorList::new(shuffled).expect("nonempty");
        let ok = label.validate().is_ok()
            && label.log2_dim() == list.total_generators()
            && permuted.classify() == label
            && label
                .canonical_signature(false)
                .map(|sig| u64::from(sig.total_generators()) == list.total_generators())
                .unwrap_or(false);
        outcome.check(ok, || format!("factors {factors:?}: closure violated"));
    }
    outcome
}

/// Cartan-Bott consistency: tensoring with Cl(1,1) shifts (p,q) by (1,1).
pub fn periodicity_sweep(max_n: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("Cl(1,1) tensor periodicity");
    for p in 0..=max_n {
        for q in 0..=max_n - p {
            let list = TensorList::new(vec![
                ExtSignature::clifford(p, q),
                ExtSignature::clifford(1, 1),
            ])
            .expect("two factors");
            let ok = list.classify() == classify(ExtSignature::clifford(p + 1, q + 1));
            outcome.check(ok, || format!("Cl({p},{q}) x Cl(1,1): periodicity broken"));
        }
    }
    outcome
}

/// Representation relations: every canonical representation with
/// M + 2N <= `max_label_dim` and every regular representation with at
/// most `max_regular` generators verifies exactly.
pub fn representation_sweep(max_label_dim: u64, max_regular: u32) -> SweepOutcome {
    let mut outcome = SweepOutcome::new("matrix representation relations");
    for kind in AlgebraType::ALL {
        for m in 0..=max_label_dim {
            for n in 0..=max_label_dim {
                let label = ClassLabel::new(kind, m, n);
                if label.validate().is_err() || label.log2_dim() > max_label_dim {
                    continue;
                }
                let ok = canonical_rep(label)
                    .map(|rep| verify_relations(&rep))
                    .unwrap_or(false);
                outcome.check(ok, || format!("canonical rep of {label}: relations fail"));
            }
        }
    }
    for sig in signatures_up_to(max_regular) {
        let system = GeneratorSystem::from_signature(sig);
        let ok = regular_rep(&system)
            .map(|rep| verify_relations(&rep))
            .unwrap_or(false);
        outcome.check(ok, || format!("regular rep of {sig}: relations fail"));
    }
    outcome
}

fn random_signature(rng: &mut ChaCha8Rng, max_total: u32) -> ExtSignature {
    let total = rng.gen_range(0..=max_total);
    let r = rng.gen_range(0..=total);
    let s = rng.gen_range(0..=total - r);
    let p = rng.gen_range(0..=total - r - s);
    let q = total - r - s - p;
    ExtSignature::new(r, s, p, q)
}

/// The full suite at a given generator cap. Used by the CLI `selftest`
/// command; deterministic for a fixed cap.
pub fn run_all(max_generators: u32) -> Vec<SweepOutcome> {
    let k = max_generators;
    vec![
        theorem_agreement_sweep(k),
        center_law_sweep(k.min(12)),
        sign_consistency_sweep(k.min(12)),
        cartan_sweep(k.min(8)),
        complexification_sweep(k.min(6)),
        canonical_roundtrip_sweep(6),
        multiplicativity_exhaustive_sweep(k.min(8)),
        multiplicativity_random_sweep(200, k.min(10), SWEEP_SEED),
        closure_random_sweep(200, k.min(12), SWEEP_SEED),
        periodicity_sweep(k.min(8)),
        representation_sweep(8, k.min(10)),
    ]
}

/// Seed for the randomized sweeps; fixed so selftest output is
/// reproducible.
pub const SWEEP_SEED: u64 = 0x5eed_c11f;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_universe_sizes() {
        // sum <= K over four nonnegative integers is C(K+4, 4)
        assert_eq!(signatures_up_to(0).len(), 1);
        assert_eq!(signatures_up_to(1).len(), 5);
        assert_eq!(signatures_up_to(2).len(), 15);
        assert_eq!(signatures_up_to(10).len(), 1001);
    }

    #[test]
    fn sweeps_pass_at_small_scale() {
        for outcome in run_all(6) {
            assert!(
                outcome.passed(),
                "{}: {} failures, first: {:?}",
                outcome.name,
                outcome.failures,
                outcome.first_failure
            );
        }
    }

    #[test]
    fn random_signature_respects_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            assert!(random_signature(&mut rng, 9).total_generators() <= 9);
        }
    }
}
