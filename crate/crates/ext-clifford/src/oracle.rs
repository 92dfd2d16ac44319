//! Brute-force isomorphism invariants.
//!
//! Three basis-independent quantities pin down the class of an extended
//! Clifford algebra: the dimension, the dimension of the center, and the
//! signature of the trace form Tr(L_x L_y) of the left-regular
//! representation. All three are computed here by direct enumeration over
//! blades, independently of the classification table, which makes the
//! module an oracle for the table.
//!
//! The trace form is diagonal on the blade basis: Tr(L_{e_A e_B}) vanishes
//! unless e_A e_B is proportional to the identity blade, i.e. unless
//! A = B. Its signature is therefore the plain sum of the squares of all
//! blades, an exact integer quantity.

use std::fmt;

use crate::blade::GeneratorSystem;
use crate::classify::{AlgebraType, ClassLabel};
use crate::error::{Error, Result};
use crate::signature::ExtSignature;

/// Default cap on the generator count for blade-square sweeps
/// (2^k blade squares per sweep).
pub const DEFAULT_SWEEP_CAP: usize = 20;

/// The independently computed invariant triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvariantProfile {
    /// log2 of the algebra dimension (the generator count).
    pub log2_dim: u64,
    /// log2 of the center dimension.
    pub log2_center: u64,
    /// Signature of the regular-representation trace form; always 0 or
    /// a signed power of two for these algebras.
    pub trace_sig: i64,
}

impl InvariantProfile {
    pub fn new(log2_dim: u64, log2_center: u64, trace_sig: i64) -> InvariantProfile {
        InvariantProfile {
            log2_dim,
            log2_center,
            trace_sig,
        }
    }
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(log2 dim {}, log2 center {}, trace signature {:+})",
            self.log2_dim, self.log2_center, self.trace_sig
        )
    }
}

/// Signature of the trace form: the number of blades squaring to +1 minus
/// the number squaring to -1. Works for arbitrary quasi-Clifford systems.
pub fn trace_form_signature(sys: &GeneratorSystem) -> Result<i64> {
    trace_form_signature_with_cap(sys, DEFAULT_SWEEP_CAP)
}

pub fn trace_form_signature_with_cap(sys: &GeneratorSystem, cap: usize) -> Result<i64> {
    if sys.len() > cap {
        return Err(Error::TooLarge {
            what: "trace-form sweep",
            required: sys.len() as u64,
            cap: cap as u64,
        });
    }
    let mut sig = 0i64;
    for blade in sys.blades() {
        sig += sys.square_sign(blade).as_i64();
    }
    Ok(sig)
}

/// The full invariant triple of an arbitrary generator system, by brute
/// force. The center of a quasi-Clifford algebra is spanned by blades and
/// the central blades form a group under symmetric difference, so the
/// center count is always a power of two.
pub fn system_profile(sys: &GeneratorSystem) -> Result<InvariantProfile> {
    system_profile_with_cap(sys, DEFAULT_SWEEP_CAP)
}

pub fn system_profile_with_cap(sys: &GeneratorSystem, cap: usize) -> Result<InvariantProfile> {
    let trace_sig = trace_form_signature_with_cap(sys, cap)?;
    let center = sys.center_basis().len() as u64;
    debug_assert!(center.is_power_of_two());
    Ok(InvariantProfile {
        log2_dim: sys.len() as u64,
        log2_center: center.ilog2() as u64,
        trace_sig,
    })
}

/// Brute-force profile of an extended Clifford algebra.
pub fn brute_profile(sig: ExtSignature) -> Result<InvariantProfile> {
    brute_profile_with_cap(sig, DEFAULT_SWEEP_CAP)
}

pub fn brute_profile_with_cap(sig: ExtSignature, cap: usize) -> Result<InvariantProfile> {
    if sig.total_generators() > cap as u64 {
        return Err(Error::TooLarge {
            what: "trace-form sweep",
            required: sig.total_generators(),
            cap: cap as u64,
        });
    }
    system_profile_with_cap(&GeneratorSystem::from_signature(sig), cap)
}

/// The profile a label predicts, derived from the per-factor profiles of
/// the type list (dimensions and center exponents add over tensor
/// factors, trace signatures multiply):
///
/// * I:   (2N,     0, +2^N)
/// * II:  (2N,     0, -2^N)
/// * III: (M + 2N, M, 0)
/// * IV:  (M + 2N, M, +2^(M+N))
/// * V:   (M + 2N, M, -2^(M+N))
///
/// These constants are validated against `brute_profile` by the test
/// suite rather than taken on faith.
pub fn predicted_profile(label: ClassLabel) -> Result<InvariantProfile> {
    label.validate()?;
    let (m, n) = (label.big_m, label.big_n);
    let pow2 = |e: u64| -> Result<i64> {
        if e >= 63 {
            Err(Error::TooLarge {
                what: "trace signature exponent",
                required: e,
                cap: 62,
            })
        } else {
            Ok(1i64 << e)
        }
    };
    let profile = match label.kind {
        AlgebraType::I => InvariantProfile::new(2 * n, 0, pow2(n)?),
        AlgebraType::II => InvariantProfile::new(2 * n, 0, -pow2(n)?),
        AlgebraType::III => InvariantProfile::new(m + 2 * n, m, 0),
        AlgebraType::IV => InvariantProfile::new(m + 2 * n, m, pow2(m + n)?),
        AlgebraType::V => InvariantProfile::new(m + 2 * n, m, -pow2(m + n)?),
    };
    Ok(profile)
}

/// Recover the label from a profile: M is the center exponent,
/// N = (log2_dim - M) / 2, and the type is read off the sign of the trace
/// signature. Rejects profiles that no extended Clifford algebra has.
pub fn profile_to_label(profile: InvariantProfile) -> Result<ClassLabel> {
    let inconsistent = |msg: String| Err(Error::InconsistentProfile(format!("{profile}: {msg}")));
    let m = profile.log2_center;
    if profile.log2_dim < m {
        return inconsistent("center exceeds the algebra".into());
    }
    if !(profile.log2_dim - m).is_multiple_of(2) {
        return inconsistent("log2_dim - log2_center must be even".into());
    }
    let n = (profile.log2_dim - m) / 2;
    let kind = match (profile.trace_sig.signum(), m) {
        (0, 0) => return inconsistent("trace signature 0 requires a nontrivial center".into()),
        (0, _) => AlgebraType::III,
        (1, 0) => AlgebraType::I,
        (-1, 0) => AlgebraType::II,
        (1, _) => AlgebraType::IV,
        (-1, _) => AlgebraType::V,
        _ => unreachable!(),
    };
    let label = ClassLabel::new(kind, m, n);
    if label.validate().is_err() {
        return inconsistent(format!("recovered label {label} is invalid"));
    }
    let expected = predicted_profile(label)?;
    if expected != profile {
        return inconsistent(format!("trace signature should be {}", expected.trace_sig));
    }
    Ok(label)
}

impl ExtSignature {
    /// Brute-force invariant profile (see [`brute_profile`]).
    pub fn brute_profile(self) -> Result<InvariantProfile> {
        brute_profile(self)
    }
}

impl ClassLabel {
    /// Predicted invariant profile (see [`predicted_profile`]).
    pub fn predicted_profile(self) -> Result<InvariantProfile> {
        predicted_profile(self)
    }
}
