//! Coefficient rings.
//!
//! The algorithms in this crate are written against a small tower of
//! traits mirroring the constructive hypotheses they need:
//!
//! * [`Ring`]: a discrete commutative ring (exact arithmetic and a zero test).
//! * [`StronglyDiscrete`]: ideal membership with explicit witnesses.
//! * [`Coherent`]: finite generating sets for syzygies of tuples, together
//!   with a way to express any syzygy over them.
//! * [`StrictBezout`]: the decomposition `b1 = d·b1'`, `b2 = d·b2'`,
//!   `c1·b1' + c2·b2' = 1`.
//!
//! Three exact backends implement all four: [`Integers`], [`Rationals`]
//! and [`IntegersMod`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

mod integers;
pub mod lattice;
mod modular;
mod rationals;

pub use integers::Integers;
pub use modular::IntegersMod;
pub use rationals::Rationals;

/// Which concrete backend a ring value is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => f.write_str("ZZ"),
            RingDescriptor::Rationals => f.write_str("QQ"),
            RingDescriptor::IntegersMod(n) => write!(f, "ZZ/{n}"),
        }
    }
}

/// A discrete commutative ring with unit.
///
/// Elements carry no reference to their ring; the ring value supplies the
/// operations. Every backend keeps elements in a canonical form so that
/// `==` is ring equality.
pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + Eq + fmt::Debug + fmt::Display;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the canonical map `ZZ -> R`.
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    /// `num/den` as an element, when the ring has such a fraction.
    ///
    /// Only the rationals accept fractions; the other backends return `None`
    /// even when `den` happens to be invertible.
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem> {
        let _ = (num, den);
        None
    }
}

/// Membership in finitely generated ideals, with witnesses.
pub trait StronglyDiscrete: Ring {
    /// Decides `c ∈ ⟨gens⟩`. On success returns coefficients `x` with
    /// `c = Σ gens[i]·x[i]`; `None` means `c` is not a member. An empty
    /// generator list generates the zero ideal.
    fn ideal_member(&self, c: &Self::Elem, gens: &[Self::Elem]) -> Option<Vec<Self::Elem>>;
}

/// A finite generating set of `Syz(a_1, …, a_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceCertificate<E> {
    /// Length `s` of the tuple the syzygies belong to.
    pub arity: usize,
    /// Nonzero generators, each of length `arity`.
    pub generators: Vec<Vec<E>>,
}

/// Raised when a vector is not in the span of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoSolution;

impl fmt::Display for NoSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("vector is not in the span of the certificate generators")
    }
}

impl core::error::Error for NoSolution {}

/// Coherence: syzygy modules of finite tuples are finitely generated.
pub trait Coherent: Ring {
    /// Generators of `Syz(a)`; zero generators are omitted.
    fn syzygy_generators(&self, a: &[Self::Elem]) -> CoherenceCertificate<Self::Elem>;

    /// Coefficients `c` with `v = Σ c_i · cert.generators[i]`.
    fn represent_syzygy(
        &self,
        v: &[Self::Elem],
        cert: &CoherenceCertificate<Self::Elem>,
    ) -> Result<Vec<Self::Elem>, NoSolution>;

    /// Generators of `Ann(a)`. An empty list means `Ann(a) = 0`.
    fn annihilator(&self, a: &Self::Elem) -> Vec<Self::Elem> {
        self.syzygy_generators(core::slice::from_ref(a))
            .generators
            .into_iter()
            .map(|mut g| g.swap_remove(0))
            .collect()
    }
}

/// Everything the algorithms above the ring layer need.
pub trait CoherentRing: StronglyDiscrete + Coherent {}

impl<R: StronglyDiscrete + Coherent> CoherentRing for R {}

/// `b1 = gcd·cofactor1`, `b2 = gcd·cofactor2`, `bezout1·cofactor1 + bezout2·cofactor2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutDecomposition<E> {
    pub gcd: E,
    pub cofactor1: E,
    pub cofactor2: E,
    pub bezout1: E,
    pub bezout2: E,
}

pub trait StrictBezout: Ring {
    fn strict_bezout_decompose(
        &self,
        b1: &Self::Elem,
        b2: &Self::Elem,
    ) -> BezoutDecomposition<Self::Elem>;
}

/// Raised by [`bezout_syzygies`] on a zero entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroEntry(pub usize);

impl fmt::Display for ZeroEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry {} of the tuple is zero", self.0 + 1)
    }
}

impl core::error::Error for ZeroEntry {}

/// Syzygies of a tuple of nonzero elements of a strict Bézout ring with
/// principal annihilators: the pair relations `a_{i,j}ε_i − a_{j,i}ε_j`
/// for `i < j`, then one annihilator relation `b_k ε_k` per index.
pub fn bezout_syzygies<R>(ring: &R, a: &[R::Elem]) -> Result<CoherenceCertificate<R::Elem>, ZeroEntry>
where
    R: StrictBezout + Coherent,
{
    if let Some(k) = a.iter().position(|x| ring.is_zero(x)) {
        return Err(ZeroEntry(k));
    }
    let s = a.len();
    let mut generators = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            let d = ring.strict_bezout_decompose(&a[i], &a[j]);
            let mut v = vec![ring.zero(); s];
            v[i] = d.cofactor2;
            v[j] = ring.neg(&d.cofactor1);
            generators.push(v);
        }
    }
    for (k, ak) in a.iter().enumerate() {
        for b in ring.annihilator(ak) {
            let mut v = vec![ring.zero(); s];
            v[k] = b;
            generators.push(v);
        }
    }
    generators.retain(|v| v.iter().any(|x| !ring.is_zero(x)));
    Ok(CoherenceCertificate {
        arity: s,
        generators,
    })
}

/// `Σ v_i · a_i`.
pub fn dot<R: Ring>(ring: &R, v: &[R::Elem], a: &[R::Elem]) -> R::Elem {
    v.iter()
        .zip(a)
        .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bezout_pair_for_four_six() {
        let cert = bezout_syzygies(&Integers, &z(&[4, 6])).unwrap();
        assert_eq!(cert.generators, vec![z(&[3, -2])]);
    }

    #[test]
    fn bezout_equal_units() {
        let cert = bezout_syzygies(&Integers, &z(&[1, 1])).unwrap();
        assert_eq!(cert.generators, vec![z(&[1, -1])]);
    }

    #[test]
    fn bezout_single_annihilator_mod_eight() {
        let r = IntegersMod::new(8);
        let cert = bezout_syzygies(&r, &[2]).unwrap();
        assert_eq!(cert.generators, vec![vec![4]]);
    }

    #[test]
    fn bezout_rejects_zero() {
        assert_eq!(
            bezout_syzygies(&Integers, &z(&[3, 0])),
            Err(ZeroEntry(1))
        );
    }

    #[test]
    fn descriptor_text() {
        assert_eq!(alloc::format!("{}", IntegersMod::new(8).descriptor()), "ZZ/8");
        assert_eq!(alloc::format!("{}", Rationals.descriptor()), "QQ");
    }
}
