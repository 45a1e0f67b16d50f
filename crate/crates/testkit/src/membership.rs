//! Ideal membership in the coefficient ring, by gcds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use syzcalc_core::rings::{Integers, IntegersMod, Rationals, Ring};

pub trait IdealOracle: Ring {
    /// `c ∈ ⟨gens⟩`.
    fn oracle_member(&self, c: &Self::Elem, gens: &[Self::Elem]) -> bool;
}

fn gcd_all<'a>(xs: impl Iterator<Item = &'a BigInt>) -> BigInt {
    xs.fold(BigInt::zero(), |g, x| g.gcd(x))
}

impl IdealOracle for Integers {
    fn oracle_member(&self, c: &BigInt, gens: &[BigInt]) -> bool {
        let g = gcd_all(gens.iter());
        if g.is_zero() {
            c.is_zero()
        } else {
            (c % &g).is_zero()
        }
    }
}

impl IdealOracle for Rationals {
    fn oracle_member(&self, c: &BigRational, gens: &[BigRational]) -> bool {
        c.is_zero() || gens.iter().any(|g| !g.is_zero())
    }
}

impl IdealOracle for IntegersMod {
    fn oracle_member(&self, c: &u64, gens: &[u64]) -> bool {
        let n = BigInt::from(self.modulus());
        let lifted: Vec<BigInt> = gens.iter().map(|&g| BigInt::from(g)).collect();
        let g = gcd_all(lifted.iter().chain(Some(&n)));
        (BigInt::from(*c) % g).is_zero()
    }
}
