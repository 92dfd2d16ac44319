//! Exact blade arithmetic in quasi-Clifford algebras.
//!
//! A generator system prescribes a square (+1 or -1) for each generator
//! and a symmetric commute/anticommute pattern for each pair. Products of
//! generators are *monomial*: the product of two basis blades is always a
//! single signed blade, so the whole algebra is determined by sign
//! bookkeeping on bitmasks. This is general enough to host any extended
//! Clifford algebra Cl(r,s|p,q) and tensor products of several such
//! algebras on one generator set.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::signature::ExtSignature;

/// Hard limit imposed by the bitmask representation.
pub const MAX_GENERATORS: usize = 63;

/// Default cap on the generator count for full structure-constant tables
/// (the table has 4^k entries).
pub const DEFAULT_TABLE_CAP: usize = 12;

/// A basis blade: a subset of generator indices, stored as a bitmask.
/// The blade is the product of its generators in increasing index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u64);

impl Blade {
    /// The empty blade, i.e. the identity element of the algebra.
    pub const ONE: Blade = Blade(0);

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    /// Number of generators in the blade.
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Generator indices in increasing order (0-based).
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Display for Blade {
    /// `1` for the empty blade, otherwise `e{i,j,...}` with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e{{")?;
        for (pos, i) in self.indices().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// A quasi-Clifford presentation: per-generator squares and a pairwise
/// commute/anticommute matrix.
///
/// The commutation matrix is stored as one bitmask per generator:
/// bit `b` of `anti[a]` is set iff `e_a e_b = -e_b e_a`. The matrix is
/// symmetric with a "commuting" diagonal. Systems are immutable after
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSystem {
    squares: Vec<Sign>,
    anti: Vec<u64>,
}

impl GeneratorSystem {
    /// System with no generators (the algebra R).
    pub fn empty() -> GeneratorSystem {
        GeneratorSystem {
            squares: Vec::new(),
            anti: Vec::new(),
        }
    }

    /// Build the two-block system of an extended Clifford algebra: first
    /// r+s generators commute with everything, the last p+q pairwise
    /// anticommute; squares are +1 for the first r (resp. first p) of each
    /// block and -1 for the rest.
    ///
    /// Panics beyond [`MAX_GENERATORS`]; the capped entry points check
    /// their size bounds before constructing a system.
    pub fn from_signature(sig: ExtSignature) -> GeneratorSystem {
        assert!(
            sig.total_generators() <= MAX_GENERATORS as u64,
            "at most {MAX_GENERATORS} generators"
        );
        let commuting = (sig.r + sig.s) as usize;
        let anticommuting = (sig.p + sig.q) as usize;
        let k = commuting + anticommuting;

        let mut squares = Vec::with_capacity(k);
        squares.extend(std::iter::repeat_n(Sign::Plus, sig.r as usize));
        squares.extend(std::iter::repeat_n(Sign::Minus, sig.s as usize));
        squares.extend(std::iter::repeat_n(Sign::Plus, sig.p as usize));
        squares.extend(std::iter::repeat_n(Sign::Minus, sig.q as usize));

        let block = if anticommuting == 0 {
            0
        } else {
            (u64::MAX >> (64 - anticommuting)) << commuting
        };
        let anti = (0..k)
            .map(|a| if block >> a & 1 == 1 { block & !(1 << a) } else { 0 })
            .collect();

        GeneratorSystem { squares, anti }
    }

    /// Build a system from an explicit commutation matrix. `eps[a][b]` is
    /// `Minus` iff generators a and b anticommute; the matrix must be
    /// square, symmetric, and `Plus` on the diagonal.
    pub fn from_eps(squares: Vec<Sign>, eps: &[Vec<Sign>]) -> Result<GeneratorSystem> {
        let k = squares.len();
        if k > MAX_GENERATORS {
            return Err(Error::TooLarge {
                what: "generator system",
                required: k as u64,
                cap: MAX_GENERATORS as u64,
            });
        }
        if eps.len() != k || eps.iter().any(|row| row.len() != k) {
            return Err(Error::Malformed("eps must be square and match the squares"));
        }
        for a in 0..k {
            if eps[a][a] != Sign::Plus {
                return Err(Error::Malformed("eps diagonal must be +1"));
            }
            for b in 0..a {
                if eps[a][b] != eps[b][a] {
                    return Err(Error::Malformed("eps must be symmetric"));
                }
            }
        }
        let anti = (0..k)
            .map(|a| {
                (0..k)
                    .filter(|&b| eps[a][b] == Sign::Minus)
                    .fold(0u64, |m, b| m | 1 << b)
            })
            .collect();
        Ok(GeneratorSystem { squares, anti })
    }

    /// Join several systems on one generator set: within-factor relations
    /// are kept and all cross-factor pairs commute, which is exactly the
    /// generator system of the tensor product of the factors.
    pub fn tensor_of(factors: &[GeneratorSystem]) -> Result<GeneratorSystem> {
        let k: usize = factors.iter().map(|f| f.len()).sum();
        if k > MAX_GENERATORS {
            return Err(Error::TooLarge {
                what: "tensor generator system",
                required: k as u64,
                cap: MAX_GENERATORS as u64,
            });
        }
        let mut squares = Vec::with_capacity(k);
        let mut anti = Vec::with_capacity(k);
        let mut offset = 0;
        for factor in factors {
            squares.extend_from_slice(&factor.squares);
            anti.extend(factor.anti.iter().map(|mask| mask << offset));
            offset += factor.len();
        }
        Ok(GeneratorSystem { squares, anti })
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// Number of basis blades, 2^k.
    pub fn blade_count(&self) -> u64 {
        1 << self.len()
    }

    pub fn square(&self, a: usize) -> Sign {
        self.squares[a]
    }

    pub fn anticommutes(&self, a: usize, b: usize) -> bool {
        self.anti[a] >> b & 1 == 1
    }

    /// The commutation factor eps[a][b].
    pub fn eps(&self, a: usize, b: usize) -> Sign {
        if self.anticommutes(a, b) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Bitmask of generators anticommuting with `a`.
    pub fn anti_mask(&self, a: usize) -> u64 {
        self.anti[a]
    }

    /// All blades, in mask order.
    pub fn blades(&self) -> impl Iterator<Item = Blade> {
        (0..self.blade_count()).map(Blade)
    }

    /// Product of two basis blades: `e_A e_B = sign * e_C` with
    /// C = A xor B. Moving each generator of B into sorted position
    /// contributes one commutation factor per distinct generator crossed,
    /// and one square factor per generator common to A and B.
    pub fn blade_product(&self, a: Blade, b: Blade) -> (Sign, Blade) {
        let mut swaps = 0u32;
        let mut sign = Sign::Plus;
        let mut bits = b.0;
        while bits != 0 {
            let g = bits.trailing_zeros();
            bits &= bits - 1;
            // generators of A above g that anticommute with g
            let above = if g == 63 { 0 } else { a.0 >> (g + 1) << (g + 1) };
            swaps += (above & self.anti[g as usize]).count_ones();
            if a.contains(g as usize) {
                sign *= self.squares[g as usize];
            }
        }
        (sign * Sign::from_parity(swaps), Blade(a.0 ^ b.0))
    }

    /// Sign of e_A^2 for arbitrary systems: one commutation factor per
    /// unordered anticommuting pair inside A, times the squares.
    pub(crate) fn square_sign(&self, a: Blade) -> Sign {
        let mut anti_pairs_twice = 0u32;
        let mut sign = Sign::Plus;
        for g in a.indices() {
            anti_pairs_twice += (self.anti[g] & a.0).count_ones();
            sign *= self.squares[g];
        }
        sign * Sign::from_parity(anti_pairs_twice / 2)
    }

    /// Closed-form sign of e_A^2 for two-block systems:
    /// (-1)^(k_a (k_a - 1) / 2) times the product of the squares, where
    /// k_a is the number of pairwise-anticommuting members of A.
    ///
    /// Fails with `UnsupportedSystem` if the commutation pattern is not
    /// the two-block one of an extended Clifford algebra.
    pub fn blade_square_sign(&self, a: Blade) -> Result<Sign> {
        let block = self.two_block_mask().ok_or(Error::UnsupportedSystem)?;
        let k_a = (a.0 & block).count_ones();
        let mut sign = Sign::from_parity(k_a * (k_a.saturating_sub(1)) / 2);
        for g in a.indices() {
            sign *= self.squares[g];
        }
        Ok(sign)
    }

    /// If the system consists of one set of mutually anticommuting
    /// generators with everything else central, returns the mask of the
    /// anticommuting set. Generator order does not matter.
    pub fn two_block_mask(&self) -> Option<u64> {
        let block: u64 = (0..self.len())
            .filter(|&a| self.anti[a] != 0)
            .fold(0, |m, a| m | 1 << a);
        for a in 0..self.len() {
            let expected = if block >> a & 1 == 1 { block & !(1 << a) } else { 0 };
            if self.anti[a] != expected {
                return None;
            }
        }
        Some(block)
    }

    /// Whether blade A commutes with every generator (equivalently, with
    /// the whole algebra). Per generator g this is the parity of the
    /// anticommuting members of A seen from g.
    pub fn blade_is_central(&self, a: Blade) -> bool {
        (0..self.len()).all(|g| (self.anti[g] & a.0).count_ones().is_multiple_of(2))
    }

    /// All central blades, in mask order. The center of a quasi-Clifford
    /// algebra is spanned by blades, so this is a basis of the center.
    pub fn center_basis(&self) -> Vec<Blade> {
        self.blades().filter(|&a| self.blade_is_central(a)).collect()
    }

    /// Full structure-constant table with the default cap on k.
    pub fn structure_constants(&self) -> Result<StructureTable> {
        self.structure_constants_with_cap(DEFAULT_TABLE_CAP)
    }

    /// Full structure-constant table: `table[A][B] = blade_product(A, B)`.
    /// The table has 4^k entries, so k is capped.
    pub fn structure_constants_with_cap(&self, cap: usize) -> Result<StructureTable> {
        if self.len() > cap {
            return Err(Error::TooLarge {
                what: "structure-constant table",
                required: self.len() as u64,
                cap: cap as u64,
            });
        }
        let count = self.blade_count();
        let mut signs = Vec::with_capacity((count * count) as usize);
        for a in 0..count {
            for b in 0..count {
                let (sign, _) = self.blade_product(Blade(a), Blade(b));
                signs.push(sign);
            }
        }
        Ok(StructureTable {
            generators: self.len(),
            signs,
        })
    }

    /// Bilinear extension of the blade product.
    pub fn mv_product<S: Coeff>(&self, x: &Multivector<S>, y: &Multivector<S>) -> Multivector<S> {
        let mut acc: BTreeMap<Blade, S> = BTreeMap::new();
        for (&a, ca) in &x.terms {
            for (&b, cb) in &y.terms {
                let (sign, c) = self.blade_product(a, b);
                let mut term = ca.clone() * cb.clone();
                if sign == Sign::Minus {
                    term = -term;
                }
                match acc.entry(c) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().clone() + term;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Multivector { terms: acc }
    }
}

/// Structure constants of a generator system. Only the signs are stored;
/// the result blade of a pair (A, B) is always A xor B.
#[derive(Debug, Clone)]
pub struct StructureTable {
    generators: usize,
    signs: Vec<Sign>,
}

impl StructureTable {
    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn blade_count(&self) -> u64 {
        1 << self.generators
    }

    /// The product `e_A e_B = sign * e_C`.
    pub fn entry(&self, a: Blade, b: Blade) -> (Sign, Blade) {
        let idx = (a.0 << self.generators) | b.0;
        (self.signs[idx as usize], Blade(a.0 ^ b.0))
    }

    /// Plain-text export, one row `A B sign C` per blade pair, with blades
    /// printed as sorted 1-based index lists like `[1,3]` (`[]` for the
    /// identity blade) and the sign printed as `+1` or `-1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in 0..self.blade_count() {
            for b in 0..self.blade_count() {
                let (sign, c) = self.entry(Blade(a), Blade(b));
                out.push_str(&format!(
                    "{} {} {} {}\n",
                    index_list(Blade(a)),
                    index_list(Blade(b)),
                    sign,
                    index_list(c)
                ));
            }
        }
        out
    }
}

/// `[1,3]`-style rendering of a blade as a sorted list of 1-based indices.
pub fn index_list(blade: Blade) -> String {
    let indices: Vec<String> = blade.indices().map(|i| (i + 1).to_string()).collect();
    format!("[{}]", indices.join(","))
}

/// Coefficient scalars for multivectors: any exact commutative ring
/// (i64, i128, arbitrary-precision rationals, ...). Floating point types
/// also satisfy these bounds but the engine is meant for exact scalars.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// A finite linear combination of blades with exact coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector<S> {
    terms: BTreeMap<Blade, S>,
}

impl<S: Coeff> Multivector<S> {
    pub fn zero() -> Multivector<S> {
        Multivector {
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(value: S) -> Multivector<S> {
        Multivector::from_terms([(Blade::ONE, value)])
    }

    /// The blade itself, with coefficient one.
    pub fn blade(blade: Blade) -> Multivector<S> {
        Multivector::from_terms([(blade, S::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Blade, S)>) -> Multivector<S> {
        let mut map: BTreeMap<Blade, S> = BTreeMap::new();
        for (blade, coeff) in terms {
            match map.entry(blade) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + coeff;
                    *e.get_mut() = sum;
                }
            }
        }
        map.retain(|_, v| !v.is_zero());
        Multivector { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a blade (zero if absent).
    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, factor: S) -> Multivector<S> {
        Multivector::from_terms(
            self.terms
                .iter()
                .map(|(&b, c)| (b, c.clone() * factor.clone())),
        )
    }
}

impl<S: Coeff> Add for &Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector::from_terms(
            self.terms
                .iter()
                .map(|(&b, c)| (b, c.clone()))
                .chain(rhs.terms.iter().map(|(&b, c)| (b, c.clone()))),
        )
    }
}

impl<S: Coeff> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        self + &(-rhs)
    }
}

impl<S: Coeff> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        Multivector {
            terms: self.terms.iter().map(|(&b, c)| (b, -c.clone())).collect(),
        }
    }
}
