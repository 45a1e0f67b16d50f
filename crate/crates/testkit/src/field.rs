//! Textbook Buchberger over `QQ[X_1, …, X_n]`.
//!
//! All pairs, one divisor at a time, monic basis. Slow and simple on purpose.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use syzcalc_core::polynomials::PolyVector;

/// Orders with `X_1 > X_2 > … > X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl OracleOrder {
    pub fn compare(self, a: &[u32], b: &[u32]) -> Ordering {
        let da: u64 = a.iter().map(|&x| x as u64).sum();
        let db: u64 = b.iter().map(|&x| x as u64).sum();
        match self {
            OracleOrder::Lex => a.cmp(b),
            OracleOrder::Grlex => da.cmp(&db).then_with(|| a.cmp(b)),
            OracleOrder::Grevlex => da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// A polynomial as `exponents -> coefficient`, zeros absent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl QPoly {
    /// Reads a rank-one vector; positions are ignored.
    pub fn from_poly(u: &PolyVector<BigRational>) -> Self {
        let mut p = QPoly::default();
        for t in u.terms() {
            p.add_term(t.monomial.monomial.exponents().to_vec(), t.coeff.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn leading(&self, order: OracleOrder) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// `self - c X^e g`.
    fn sub_scaled(&mut self, c: &BigRational, e: &[u32], g: &QPoly) {
        for (ge, gc) in &g.terms {
            let m: Vec<u32> = ge.iter().zip(e).map(|(a, b)| a + b).collect();
            self.add_term(m, -(c * gc));
        }
    }

    fn monic(mut self, order: OracleOrder) -> Self {
        if let Some((_, c)) = self.leading(order) {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v = &*v * &inv;
            }
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minus(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

/// Full remainder of `f` on division by `basis`, first divisor wins.
pub fn field_reduce(f: &QPoly, basis: &[QPoly], order: OracleOrder) -> QPoly {
    let mut p = f.clone();
    let mut r = QPoly::default();
    while let Some((e, c)) = p.leading(order).map(|(e, c)| (e.clone(), c.clone())) {
        let hit = basis.iter().find_map(|g| {
            let (ge, gc) = g.leading(order)?;
            divides(ge, &e).then(|| (g, minus(&e, ge), &c / gc))
        });
        match hit {
            Some((g, q, coeff)) => p.sub_scaled(&coeff, &q, g),
            None => {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
    }
    r
}

fn s_polynomial(f: &QPoly, g: &QPoly, order: OracleOrder) -> QPoly {
    let (fe, fc) = f.leading(order).expect("nonzero");
    let (ge, gc) = g.leading(order).expect("nonzero");
    let l: Vec<u32> = fe.iter().zip(ge).map(|(a, b)| *a.max(b)).collect();
    let mut s = QPoly::default();
    s.sub_scaled(&-fc.recip(), &minus(&l, fe), f);
    s.sub_scaled(&gc.recip(), &minus(&l, ge), g);
    s
}

/// A Gröbner basis of the ideal generated by `gens`. Zero inputs are dropped;
/// an all-zero input gives an empty basis.
pub fn field_buchberger_oracle(gens: &[QPoly], order: OracleOrder) -> Vec<QPoly> {
    let mut basis: Vec<QPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.clone().monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = field_reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(order));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    basis
}

/// The constant polynomial `c`.
pub fn constant(nvars: usize, c: i64) -> QPoly {
    let mut p = QPoly::default();
    p.add_term(vec![0; nvars], BigRational::from_integer(c.into()));
    p
}

/// Builds a polynomial from `(coefficient, exponents)` pairs.
pub fn qpoly(terms: &[(i64, &[u32])]) -> QPoly {
    let mut p = QPoly::default();
    for (c, e) in terms {
        p.add_term(e.to_vec(), BigRational::from_integer((*c).into()));
    }
    p
}

pub fn is_unit_ideal(basis: &[QPoly]) -> bool {
    basis.iter().any(|g| g.terms.len() == 1 && g.terms.keys().all(|e| e.iter().all(|&x| x == 0)) && g.terms.values().all(|c| c.is_one()))
}
