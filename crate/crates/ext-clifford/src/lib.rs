//! Classification of extended Clifford algebras Cl(r,s|p,q).
//!
//! An extended Clifford algebra is the tensor product K(r,s) x Cl(p,q) of
//! a commutative generator algebra and a real Clifford algebra. Every
//! such algebra falls into one of five types, each a tensor product of
//! the building blocks Cl(1,1), Cl(0,2), Cl(1,0) and Cl(0,1), and the
//! triple (type, M, N) is a complete isomorphism invariant.
//!
//! The crate provides:
//!
//! * [`classify`]: the finite-table classification and the isomorphism
//!   decision, with canonical representative signatures and the Cartan
//!   decomposition of plain Cl(p,q);
//! * [`blade`]: exact bitmask blade arithmetic in arbitrary
//!   quasi-Clifford generator systems, with multivectors over any exact
//!   coefficient ring;
//! * [`oracle`]: brute-force isomorphism invariants (dimension, center,
//!   trace-form signature) that verify the table independently;
//! * [`tensor`]: classification and normalization of tensor products;
//! * [`rep`]: explicit integer matrix generators via Kronecker products,
//!   plus regular representations, with exact relation checking;
//! * [`expr`]: a parser and printer for algebra expressions such as
//!   `Cl(1,0)^3 * H`;
//! * [`selftest`]: the verification sweeps behind the CLI self-test.
//!
//! All arithmetic is exact: signs, integers and (for multivector
//! coefficients) any exact scalar ring such as `i64` or a rational type.

pub mod blade;
pub mod classify;
pub mod error;
pub mod expr;
pub mod oracle;
pub mod rep;
pub mod selftest;
pub mod sign;
pub mod signature;
pub mod tensor;

pub use blade::{Blade, Coeff, GeneratorSystem, Multivector, StructureTable};
pub use classify::{
    cartan_decompose, classify, is_isomorphic, reduce_commutative, AlgebraType, BaseFactor,
    CanonicalDecomposition, ClassLabel, OddFactor,
};
pub use error::{Error, Result};
pub use expr::{parse, AlgebraExpr, ParseError};
pub use oracle::{
    brute_profile, predicted_profile, profile_to_label, system_profile, trace_form_signature,
    InvariantProfile,
};
pub use rep::{base_rep, canonical_rep, regular_rep, verify_relations, IntMatrix, RepSet};
pub use sign::Sign;
pub use signature::{DerivedParams, ExtSignature, REAL};
pub use tensor::{combine_profiles, normalize_clifford_tensor, TensorList};

/// Multivector with 64-bit integer coefficients, the default exact
/// scalar type.
pub type IntMultivector = Multivector<i64>;
