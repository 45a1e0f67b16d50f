use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{
    BezoutDecomposition, CoherenceCertificate, Coherent, NoSolution, Ring, RingDescriptor,
    StrictBezout, StronglyDiscrete,
};

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num.clone(), den.clone()))
    }
}

impl StronglyDiscrete for Rationals {
    fn ideal_member(&self, c: &BigRational, gens: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut x = vec![BigRational::zero(); gens.len()];
        if c.is_zero() {
            return Some(x);
        }
        let k = gens.iter().position(|g| !g.is_zero())?;
        x[k] = c / &gens[k];
        Some(x)
    }
}

impl Coherent for Rationals {
    fn syzygy_generators(&self, a: &[BigRational]) -> CoherenceCertificate<BigRational> {
        let s = a.len();
        let unit = |j: usize| {
            let mut v = vec![BigRational::zero(); s];
            v[j] = BigRational::one();
            v
        };
        let mut generators = Vec::new();
        match a.iter().position(|x| !x.is_zero()) {
            None => generators.extend((0..s).map(unit)),
            Some(k) => {
                for j in 0..s {
                    if j < k || a[j].is_zero() {
                        if j != k {
                            generators.push(unit(j));
                        }
                    } else if j > k {
                        let mut v = vec![BigRational::zero(); s];
                        v[k] = a[j].clone();
                        v[j] = -a[k].clone();
                        generators.push(v);
                    }
                }
            }
        }
        CoherenceCertificate {
            arity: s,
            generators,
        }
    }

    fn represent_syzygy(
        &self,
        v: &[BigRational],
        cert: &CoherenceCertificate<BigRational>,
    ) -> Result<Vec<BigRational>, NoSolution> {
        if v.len() != cert.arity {
            return Err(NoSolution);
        }
        solve_linear(&cert.generators, v, cert.arity).ok_or(NoSolution)
    }
}

/// Some `x` with `Σ x_i · cols[i] = b`, by Gaussian elimination.
fn solve_linear(cols: &[Vec<BigRational>], b: &[BigRational], rows: usize) -> Option<Vec<BigRational>> {
    let k = cols.len();
    // augmented row-major matrix [A | b]
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..k {
        let Some(p) = (pr..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pr, p);
        let inv = m[pr][c].recip();
        for v in m[pr].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != pr && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..=k {
                    let delta = &f * &m[pr][j];
                    m[r][j] -= delta;
                }
            }
        }
        pivots.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    if m[pr..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][k].clone();
    }
    Some(x)
}

impl StrictBezout for Rationals {
    fn strict_bezout_decompose(
        &self,
        b1: &BigRational,
        b2: &BigRational,
    ) -> BezoutDecomposition<BigRational> {
        let (zero, one) = (BigRational::zero(), BigRational::one());
        if !b1.is_zero() {
            BezoutDecomposition {
                gcd: b1.clone(),
                cofactor1: one.clone(),
                cofactor2: b2 / b1,
                bezout1: one,
                bezout2: zero,
            }
        } else if !b2.is_zero() {
            BezoutDecomposition {
                gcd: b2.clone(),
                cofactor1: zero.clone(),
                cofactor2: one.clone(),
                bezout1: zero,
                bezout2: one,
            }
        } else {
            BezoutDecomposition {
                gcd: zero.clone(),
                cofactor1: zero.clone(),
                cofactor2: one.clone(),
                bezout1: zero,
                bezout2: one,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn membership_in_field() {
        let w = Rationals.ideal_member(&q(1, 2), &[q(0, 1), q(3, 1)]).unwrap();
        assert_eq!(w, vec![q(0, 1), q(1, 6)]);
        assert!(Rationals.ideal_member(&q(1, 1), &[q(0, 1)]).is_none());
    }

    #[test]
    fn kernel_shape() {
        let a = [q(0, 1), q(2, 1), q(0, 1), q(3, 1)];
        let cert = Rationals.syzygy_generators(&a);
        assert_eq!(cert.generators.len(), 3);
        for g in &cert.generators {
            let s: BigRational = g.iter().zip(&a).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        let v = [q(5, 1), q(3, 1), q(7, 1), q(-2, 1)];
        let c = Rationals.represent_syzygy(&v, &cert).unwrap();
        let mut back = vec![q(0, 1); 4];
        for (ci, g) in c.iter().zip(&cert.generators) {
            for (b, gi) in back.iter_mut().zip(g) {
                *b += ci * gi;
            }
        }
        assert_eq!(back, v.to_vec());
        assert!(Rationals.represent_syzygy(&[q(1, 1), q(1, 1), q(0, 1), q(0, 1)], &cert).is_err());
    }

    #[test]
    fn fractions_accepted() {
        assert_eq!(Rationals.from_fraction(&3.into(), &6.into()), Some(q(1, 2)));
        assert_eq!(Rationals.from_fraction(&3.into(), &0.into()), None);
    }

    #[test]
    fn bezout_in_field() {
        let d = Rationals.strict_bezout_decompose(&q(2, 1), &q(3, 1));
        assert_eq!(&d.gcd * &d.cofactor2, q(3, 1));
        assert_eq!(&d.bezout1 * &d.cofactor1 + &d.bezout2 * &d.cofactor2, q(1, 1));
    }
}
