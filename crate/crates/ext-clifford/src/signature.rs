//! Signatures of extended Clifford algebras and their derived parameters.
//!
//! An extended Clifford algebra Cl(r,s|p,q) is generated by r+s pairwise
//! commuting generators (r squaring to +1, s to -1) together with p+q
//! pairwise anticommuting generators (p squaring to +1, q to -1);
//! generators from different sets commute. Cl(0,0|p,q) is the ordinary
//! Clifford algebra Cl(p,q) and Cl(r,s|0,0) is the commutative algebra
//! K(r,s).

use std::fmt;

/// The quadruple (r,s|p,q) naming an extended Clifford algebra.
///
/// The algebra has dimension 2^(r+s+p+q) as a real vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtSignature {
    /// Commuting generators with square +1.
    pub r: u32,
    /// Commuting generators with square -1.
    pub s: u32,
    /// Anticommuting generators with square +1.
    pub p: u32,
    /// Anticommuting generators with square -1.
    pub q: u32,
}

/// The one-dimensional algebra R = Cl(0,0|0,0).
pub const REAL: ExtSignature = ExtSignature::new(0, 0, 0, 0);

impl ExtSignature {
    pub const fn new(r: u32, s: u32, p: u32, q: u32) -> ExtSignature {
        ExtSignature { r, s, p, q }
    }

    /// The plain Clifford algebra Cl(p,q) = Cl(0,0|p,q).
    pub const fn clifford(p: u32, q: u32) -> ExtSignature {
        ExtSignature::new(0, 0, p, q)
    }

    /// The commutative algebra K(r,s) = Cl(r,s|0,0).
    pub const fn commutative(r: u32, s: u32) -> ExtSignature {
        ExtSignature::new(r, s, 0, 0)
    }

    /// Total number of generators; log2 of the algebra dimension.
    pub fn total_generators(self) -> u64 {
        u64::from(self.r) + u64::from(self.s) + u64::from(self.p) + u64::from(self.q)
    }

    /// The derived parameters (m, n, M, N, t).
    pub fn derived(self) -> DerivedParams {
        let m = u64::from(self.r) + u64::from(self.s);
        let n = u64::from(self.p) + u64::from(self.q);
        let big_n = n / 2;
        let big_m = m + n % 2;
        // mathematical remainder, nonnegative even when p < q
        let t = (i64::from(self.p) - i64::from(self.q)).rem_euclid(8) as u8;
        DerivedParams {
            m,
            n,
            big_m,
            big_n,
            t,
        }
    }
}

impl fmt::Display for ExtSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ExtSignature { r, s, p, q } = *self;
        if r == 0 && s == 0 && p == 0 && q == 0 {
            write!(f, "R")
        } else if r == 0 && s == 0 {
            write!(f, "Cl({p},{q})")
        } else if p == 0 && q == 0 {
            write!(f, "K({r},{s})")
        } else {
            write!(f, "Cl({r},{s}|{p},{q})")
        }
    }
}

/// Parameters derived from a signature; M and N together with the type
/// form the complete isomorphism invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedParams {
    /// m = r + s, the number of commuting generators.
    pub m: u64,
    /// n = p + q, the number of anticommuting generators.
    pub n: u64,
    /// M = m + (n mod 2).
    pub big_m: u64,
    /// N = floor(n / 2).
    pub big_n: u64,
    /// t = (p - q) mod 8, in 0..=7.
    pub t: u8,
}
