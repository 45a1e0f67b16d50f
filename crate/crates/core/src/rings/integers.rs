use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::{ext_gcd, ColumnEchelon};
use super::{
    BezoutDecomposition, CoherenceCertificate, Coherent, NoSolution, Ring, RingDescriptor,
    StrictBezout, StronglyDiscrete,
};

/// The integers, with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
}

impl StronglyDiscrete for Integers {
    fn ideal_member(&self, c: &BigInt, gens: &[BigInt]) -> Option<Vec<BigInt>> {
        if c.is_zero() {
            return Some(vec![BigInt::zero(); gens.len()]);
        }
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        ColumnEchelon::new(cols, 1).solve(core::slice::from_ref(c))
    }
}

impl Coherent for Integers {
    fn syzygy_generators(&self, a: &[BigInt]) -> CoherenceCertificate<BigInt> {
        let cols = a.iter().map(|x| vec![x.clone()]).collect();
        CoherenceCertificate {
            arity: a.len(),
            generators: ColumnEchelon::new(cols, 1).kernel(),
        }
    }

    fn represent_syzygy(
        &self,
        v: &[BigInt],
        cert: &CoherenceCertificate<BigInt>,
    ) -> Result<Vec<BigInt>, NoSolution> {
        if v.len() != cert.arity {
            return Err(NoSolution);
        }
        ColumnEchelon::new(cert.generators.clone(), cert.arity)
            .solve(v)
            .ok_or(NoSolution)
    }
}

impl StrictBezout for Integers {
    fn strict_bezout_decompose(&self, b1: &BigInt, b2: &BigInt) -> BezoutDecomposition<BigInt> {
        integer_bezout(b1, b2)
    }
}

pub(super) fn integer_bezout(b1: &BigInt, b2: &BigInt) -> BezoutDecomposition<BigInt> {
    let (g, x, y) = ext_gcd(b1, b2);
    if g.is_zero() {
        return BezoutDecomposition {
            gcd: BigInt::zero(),
            cofactor1: BigInt::zero(),
            cofactor2: BigInt::one(),
            bezout1: BigInt::zero(),
            bezout2: BigInt::one(),
        };
    }
    BezoutDecomposition {
        cofactor1: b1.div_floor(&g),
        cofactor2: b2.div_floor(&g),
        gcd: g,
        bezout1: x,
        bezout2: y,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn addition_identity() {
        let a = BigInt::from(-17);
        assert_eq!(Integers.add(&a, &Integers.zero()), a);
    }

    #[test]
    fn membership_five_in_two_three() {
        let w = Integers.ideal_member(&5.into(), &z(&[2, 3])).unwrap();
        assert_eq!(&w[0] * 2 + &w[1] * 3, BigInt::from(5));
        assert!(Integers.ideal_member(&3.into(), &z(&[2])).is_none());
        assert!(Integers.ideal_member(&3.into(), &[]).is_none());
        assert_eq!(Integers.ideal_member(&0.into(), &[]), Some(vec![]));
    }

    #[test]
    fn annihilators_of_integers() {
        assert!(Integers.annihilator(&5.into()).is_empty());
        assert_eq!(Integers.annihilator(&0.into()), z(&[1]));
    }

    #[test]
    fn syzygies_six_fifteen() {
        let cert = Integers.syzygy_generators(&z(&[6, 15]));
        assert_eq!(cert.generators, vec![z(&[-5, 2])]);
        assert_eq!(Integers.represent_syzygy(&z(&[5, -2]), &cert), Ok(z(&[-1])));
    }

    #[test]
    fn syzygies_three_three_one() {
        let cert = Integers.syzygy_generators(&z(&[3, 3, 1]));
        assert_eq!(cert.generators, vec![z(&[-1, 1, 0]), z(&[-1, 0, 3])]);
        assert_eq!(
            Integers.represent_syzygy(&z(&[2, -3, 3]), &cert),
            Ok(z(&[-3, 1]))
        );
        assert_eq!(
            Integers.represent_syzygy(&z(&[-1, 1, 0]), &cert),
            Ok(z(&[1, 0]))
        );
        assert_eq!(
            Integers.represent_syzygy(&z(&[1, 0, 0]), &cert),
            Err(NoSolution)
        );
    }

    #[test]
    fn bezout_four_six() {
        let d = Integers.strict_bezout_decompose(&4.into(), &6.into());
        assert_eq!(d.gcd, BigInt::from(2));
        assert_eq!((d.cofactor1.clone(), d.cofactor2.clone()), (2.into(), 3.into()));
        assert_eq!(&d.bezout1 * &d.cofactor1 + &d.bezout2 * &d.cofactor2, BigInt::one());
    }

    #[test]
    fn bezout_zero_zero() {
        let d = Integers.strict_bezout_decompose(&0.into(), &0.into());
        assert_eq!(d.gcd, BigInt::zero());
        assert_eq!(d.cofactor1, BigInt::zero());
        assert_eq!(d.cofactor2, BigInt::one());
        assert_eq!(d.bezout2, BigInt::one());
    }
}
