use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::integers::integer_bezout;
use super::lattice::ColumnEchelon;
use super::{
    BezoutDecomposition, CoherenceCertificate, Coherent, NoSolution, Ring, RingDescriptor,
    StrictBezout, StronglyDiscrete,
};

/// `ZZ/nZZ` with residues kept in `[0, n)`.
///
/// Membership and syzygy questions are lifted to the integers by adjoining
/// the modulus to the generator list, then projected back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    n: u64,
}

impl IntegersMod {
    /// # Panics
    /// If `n < 2`.
    pub fn new(n: u64) -> Self {
        assert!(n >= 2, "modulus must be at least 2, got {n}");
        IntegersMod { n }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    fn lift(&self, a: u64) -> BigInt {
        BigInt::from(a)
    }

    fn reduce(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.n))
            .to_u64()
            .expect("residue fits the modulus")
    }

    /// Flips `v` to `-v` when that makes the first nonzero residue smaller.
    fn canonical_sign(&self, v: &mut [u64]) {
        if let Some(&first) = v.iter().find(|&&x| x != 0) {
            if self.n - first < first {
                for x in v.iter_mut() {
                    *x = self.neg(x);
                }
            }
        }
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegersMod(self.n)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.n - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }

    fn from_integer(&self, n: &BigInt) -> u64 {
        self.reduce(n)
    }
}

impl StronglyDiscrete for IntegersMod {
    fn ideal_member(&self, c: &u64, gens: &[u64]) -> Option<Vec<u64>> {
        if *c == 0 {
            return Some(vec![0; gens.len()]);
        }
        let mut cols: Vec<Vec<BigInt>> = gens.iter().map(|&g| vec![self.lift(g)]).collect();
        cols.push(vec![BigInt::from(self.n)]);
        let x = ColumnEchelon::new(cols, 1).solve(&[self.lift(*c)])?;
        Some(x[..gens.len()].iter().map(|v| self.reduce(v)).collect())
    }
}

impl Coherent for IntegersMod {
    fn syzygy_generators(&self, a: &[u64]) -> CoherenceCertificate<u64> {
        let s = a.len();
        let mut cols: Vec<Vec<BigInt>> = a.iter().map(|&x| vec![self.lift(x)]).collect();
        cols.push(vec![BigInt::from(self.n)]);
        let mut generators: Vec<Vec<u64>> = Vec::new();
        for k in ColumnEchelon::new(cols, 1).kernel() {
            let mut v: Vec<u64> = k[..s].iter().map(|x| self.reduce(x)).collect();
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            self.canonical_sign(&mut v);
            if !generators.contains(&v) {
                generators.push(v);
            }
        }
        CoherenceCertificate {
            arity: s,
            generators,
        }
    }

    fn represent_syzygy(
        &self,
        v: &[u64],
        cert: &CoherenceCertificate<u64>,
    ) -> Result<Vec<u64>, NoSolution> {
        let s = cert.arity;
        if v.len() != s {
            return Err(NoSolution);
        }
        // [generators | n·I] x = v over the integers
        let mut cols: Vec<Vec<BigInt>> = cert
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| self.lift(x)).collect())
            .collect();
        for i in 0..s {
            let mut col = vec![BigInt::zero(); s];
            col[i] = BigInt::from(self.n);
            cols.push(col);
        }
        let rhs: Vec<BigInt> = v.iter().map(|&x| self.lift(x)).collect();
        let x = ColumnEchelon::new(cols, s).solve(&rhs).ok_or(NoSolution)?;
        Ok(x[..cert.generators.len()]
            .iter()
            .map(|c| self.reduce(c))
            .collect())
    }
}

impl StrictBezout for IntegersMod {
    fn strict_bezout_decompose(&self, b1: &u64, b2: &u64) -> BezoutDecomposition<u64> {
        let d = integer_bezout(&self.lift(*b1), &self.lift(*b2));
        BezoutDecomposition {
            gcd: self.reduce(&d.gcd),
            cofactor1: self.reduce(&d.cofactor1),
            cofactor2: self.reduce(&d.cofactor2),
            bezout1: self.reduce(&d.bezout1),
            bezout2: self.reduce(&d.bezout2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_mod_eight() {
        let r = IntegersMod::new(8);
        assert_eq!(r.mul(&6, &3), 2);
        assert_eq!(r.from_integer(&BigInt::from(-3)), 5);
    }

    #[test]
    fn annihilators_mod_eight() {
        let r = IntegersMod::new(8);
        assert_eq!(r.annihilator(&2), vec![4]);
        assert_eq!(r.annihilator(&4), vec![2]);
        assert!(r.annihilator(&1).is_empty());
        assert!(r.annihilator(&3).is_empty());
        assert_eq!(r.annihilator(&0), vec![1]);
    }

    #[test]
    fn membership_two_in_six() {
        let r = IntegersMod::new(8);
        let w = r.ideal_member(&2, &[6]).unwrap();
        assert_eq!(r.mul(&w[0], &6), 2);
        assert!(r.ideal_member(&1, &[6]).is_none());
        assert!(r.ideal_member(&1, &[]).is_none());
    }

    #[test]
    fn pair_syzygy_two_one() {
        let r = IntegersMod::new(8);
        let cert = r.syzygy_generators(&[2, 1]);
        assert_eq!(cert.generators, vec![vec![1, 6]]);
    }

    #[test]
    fn represent_mod_eight() {
        let r = IntegersMod::new(8);
        let cert = r.syzygy_generators(&[2, 1]);
        // (3, 2) = 3·(1, 6) mod 8
        assert_eq!(r.represent_syzygy(&[3, 2], &cert), Ok(vec![3]));
        assert_eq!(r.represent_syzygy(&[1, 0], &cert), Err(NoSolution));
    }

    #[test]
    #[should_panic]
    fn rejects_modulus_one() {
        IntegersMod::new(1);
    }
}
