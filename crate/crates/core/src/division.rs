//! Division with remainder by a list of vectors.
//!
//! At each step the leading term `cM` of the running dividend is compared
//! with every divisor whose leading monomial divides `M`. If `c` lies in the
//! ideal of their leading coefficients, all of them are subtracted at once
//! with the witness coefficients; otherwise `cM` moves to the remainder.

use alloc::vec::Vec;
use core::fmt;

use crate::polynomials::{FreeModule, ModuleMonomial, Monomial, Poly, PolyVector, Term};
use crate::rings::StronglyDiscrete;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<E> {
    /// One scalar quotient per divisor.
    pub quotients: Vec<Poly<E>>,
    pub remainder: PolyVector<E>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisionError {
    /// Divisor at this (0-based) index is zero.
    ZeroDivisor(usize),
}

impl fmt::Display for DivisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisionError::ZeroDivisor(j) => write!(f, "divisor {} is zero", j + 1),
        }
    }
}

impl core::error::Error for DivisionError {}

/// Decides whether `c·M` lies in `⟨LT(h) : h ∈ divisors⟩`.
///
/// On success returns `(j, a_j, M / LM(h_j))` for each divisor used, with
/// `Σ a_j LC(h_j) = c`. Divisors must be nonzero.
pub fn lt_module_witness<R: StronglyDiscrete>(
    ring: &R,
    c: &R::Elem,
    m: &ModuleMonomial,
    divisors: &[PolyVector<R::Elem>],
) -> Option<Vec<(usize, R::Elem, Monomial)>> {
    let mut idx = Vec::new();
    let mut lcs = Vec::new();
    let mut quots = Vec::new();
    for (j, h) in divisors.iter().enumerate() {
        let lt = h.leading_term()?;
        if let Ok(q) = lt.monomial.quotient_of(m) {
            idx.push(j);
            lcs.push(lt.coeff.clone());
            quots.push(q);
        }
    }
    let a = ring.ideal_member(c, &lcs)?;
    Some(
        idx.into_iter()
            .zip(a)
            .zip(quots)
            .filter(|((_, aj), _)| !ring.is_zero(aj))
            .map(|((j, aj), q)| (j, aj, q))
            .collect(),
    )
}

pub fn divide<R: StronglyDiscrete>(
    module: &FreeModule<R>,
    u: &PolyVector<R::Elem>,
    divisors: &[PolyVector<R::Elem>],
) -> Result<DivisionResult<R::Elem>, DivisionError> {
    if let Some(j) = divisors.iter().position(|h| h.is_zero()) {
        return Err(DivisionError::ZeroDivisor(j));
    }
    let ring = module.ring();
    let mut quotient_terms: Vec<Vec<Term<R::Elem>>> = divisors.iter().map(|_| Vec::new()).collect();
    let mut remainder = Vec::new();
    let mut rest = u.clone();
    while let Some(lt) = rest.leading_term().cloned() {
        match lt_module_witness(ring, &lt.coeff, &lt.monomial, divisors) {
            Some(witness) => {
                let mut sub = module.zero();
                for (j, a, q) in witness {
                    sub = module.add(&sub, &module.scale_by_term(&divisors[j], &a, &q));
                    quotient_terms[j].push(Term::new(a, ModuleMonomial::new(q, 0)));
                }
                rest = module.sub(&rest, &sub);
                debug_assert!(rest
                    .leading_monomial()
                    .map_or(true, |m| module.compare(m, &lt.monomial).is_lt()));
            }
            None => {
                remainder.push(lt);
                rest = rest.tail();
            }
        }
    }
    let scalars = module.scalar_module();
    Ok(DivisionResult {
        quotients: quotient_terms.into_iter().map(|t| scalars.normalize(t)).collect(),
        remainder: module.normalize(remainder),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{ModuleOrder, MonomialOrder};
    use crate::rings::Integers;
    use alloc::vec;
    use num_bigint::BigInt;

    fn zz(n: usize) -> FreeModule<Integers> {
        FreeModule::new(Integers, n, 1, ModuleOrder::Top(MonomialOrder::grlex(n)))
    }

    fn poly(h: &FreeModule<Integers>, ts: &[(i64, &[u32])]) -> PolyVector<BigInt> {
        h.normalize(
            ts.iter()
                .map(|(c, e)| Term::new(BigInt::from(*c), ModuleMonomial::new(Monomial::new(e.to_vec()), 0)))
                .collect(),
        )
    }

    #[test]
    fn self_division() {
        let h = zz(2);
        let f = poly(&h, &[(2, &[1, 0]), (1, &[0, 1])]);
        let d = divide(&h, &f, core::slice::from_ref(&f)).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(d.quotients, vec![h.constant(BigInt::from(1))]);
    }

    #[test]
    fn no_partial_reduction() {
        let h = zz(1);
        let u = poly(&h, &[(3, &[1])]);
        let d = divide(&h, &u, &[poly(&h, &[(2, &[1])])]).unwrap();
        assert_eq!(d.remainder, u);
        assert!(d.quotients[0].is_zero());
    }

    #[test]
    fn reduces_with_third_divisor() {
        let h = zz(2);
        let u = poly(&h, &[(-2, &[0, 2])]);
        let gs = [
            poly(&h, &[(2, &[1, 0])]),
            poly(&h, &[(1, &[1, 0]), (1, &[0, 1])]),
            poly(&h, &[(2, &[0, 1])]),
        ];
        let d = divide(&h, &u, &gs).unwrap();
        assert!(d.remainder.is_zero());
        assert!(d.quotients[0].is_zero() && d.quotients[1].is_zero());
        assert_eq!(d.quotients[2], poly(&h, &[(-1, &[0, 1])]));
    }

    #[test]
    fn zero_dividend_and_zero_divisor() {
        let h = zz(1);
        let f = poly(&h, &[(1, &[1])]);
        let d = divide(&h, &h.zero(), core::slice::from_ref(&f)).unwrap();
        assert!(d.remainder.is_zero() && d.quotients[0].is_zero());
        assert_eq!(divide(&h, &f, &[f.clone(), h.zero()]), Err(DivisionError::ZeroDivisor(1)));
    }
}
