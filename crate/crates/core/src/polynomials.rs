//! Sparse vectors in `R[X_1, …, X_n]^m`.
//!
//! A [`PolyVector`] is a list of [`Term`]s kept strictly decreasing under
//! the order of the [`FreeModule`] it belongs to. Values do not point back
//! to their module; every operation goes through the module so that the
//! ring and the order are always explicit. Scalar polynomials are vectors
//! of rank one ([`Poly`]).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Index;

use smallvec::SmallVec;

use crate::orders::{ModuleOrder, MonomialOrder};
use crate::rings::Ring;

/// An exponent vector `X^α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(SmallVec::from_vec(exponents))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// # Panics
    /// On exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<SmallVec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Index<usize> for Monomial {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `X^α e_i`. Positions are 0-based here and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub monomial: Monomial,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialError {
    NotDivisible,
    MixedPositions,
    Empty,
}

impl fmt::Display for MonomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialError::NotDivisible => "monomial does not divide",
            MonomialError::MixedPositions => "monomials sit in different positions",
            MonomialError::Empty => "lcm of an empty list",
        })
    }
}

impl core::error::Error for MonomialError {}

impl ModuleMonomial {
    pub fn new(monomial: Monomial, position: usize) -> Self {
        ModuleMonomial { monomial, position }
    }

    /// `X^γ · self`.
    pub fn times(&self, m: &Monomial) -> ModuleMonomial {
        ModuleMonomial::new(self.monomial.mul(m), self.position)
    }

    /// `self | other`: same position and exponentwise `<=`.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.position == other.position && self.monomial.divides(&other.monomial)
    }

    /// The ring monomial `other / self`.
    pub fn quotient_of(&self, other: &ModuleMonomial) -> Result<Monomial, MonomialError> {
        if self.position != other.position {
            return Err(MonomialError::NotDivisible);
        }
        self.monomial
            .quotient_of(&other.monomial)
            .ok_or(MonomialError::NotDivisible)
    }

    pub fn lcm<'a, I>(ms: I) -> Result<ModuleMonomial, MonomialError>
    where
        I: IntoIterator<Item = &'a ModuleMonomial>,
    {
        let mut it = ms.into_iter();
        let first = it.next().ok_or(MonomialError::Empty)?.clone();
        it.try_fold(first, |acc, m| {
            if m.position != acc.position {
                return Err(MonomialError::MixedPositions);
            }
            Ok(ModuleMonomial::new(acc.monomial.lcm(&m.monomial), acc.position))
        })
    }
}

impl fmt::Display for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e{}", self.monomial, self.position + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<E> {
    pub coeff: E,
    pub monomial: ModuleMonomial,
}

impl<E> Term<E> {
    pub fn new(coeff: E, monomial: ModuleMonomial) -> Self {
        Term { coeff, monomial }
    }
}

/// A normalized element of `R[X]^m`: nonzero coefficients, distinct
/// monomials, strictly decreasing. The zero vector has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector<E> {
    terms: Vec<Term<E>>,
}

/// A scalar polynomial: a vector of rank one.
pub type Poly<E> = PolyVector<E>;

impl<E> PolyVector<E> {
    pub fn zero() -> Self {
        PolyVector { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&ModuleMonomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Self
    where
        E: Clone,
    {
        PolyVector {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }
}

/// `mdeg`, with `mdeg(0) = -∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiDegree {
    NegInfinity,
    Finite(Monomial),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroVector;

impl fmt::Display for ZeroVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("the leading position of the zero vector is undefined")
    }
}

impl core::error::Error for ZeroVector {}

/// `LC`, `LM`, `LT` and `mdeg` of a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData<E> {
    pub lc: E,
    /// `None` for the zero vector.
    pub lt: Option<Term<E>>,
    pub mdeg: MultiDegree,
}

impl<E> LeadingData<E> {
    pub fn lm(&self) -> Option<&ModuleMonomial> {
        self.lt.as_ref().map(|t| &t.monomial)
    }

    /// `LP(u)`, 0-based.
    pub fn lp(&self) -> Result<usize, ZeroVector> {
        self.lm().map(|m| m.position).ok_or(ZeroVector)
    }
}

/// `R[X_1, …, X_n]^m` with a module order.
#[derive(Clone, Debug)]
pub struct FreeModule<R: Ring> {
    ring: R,
    nvars: usize,
    rank: usize,
    order: ModuleOrder,
}

impl<R: Ring> FreeModule<R> {
    /// # Panics
    /// If `rank == 0` or the order is on a different number of variables.
    pub fn new(ring: R, nvars: usize, rank: usize, order: ModuleOrder) -> Self {
        assert!(rank >= 1, "rank must be positive");
        assert_eq!(order.base().nvars(), nvars, "order and module disagree on variables");
        if let ModuleOrder::Schreyer(s) = &order {
            assert_eq!(s.leading.len(), rank, "Schreyer order needs one monomial per basis vector");
        }
        FreeModule {
            ring,
            nvars,
            rank,
            order,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn base_order(&self) -> &MonomialOrder {
        self.order.base()
    }

    /// `R[X]` with the base order of this module.
    pub fn scalar_module(&self) -> FreeModule<R> {
        FreeModule {
            ring: self.ring.clone(),
            nvars: self.nvars,
            rank: 1,
            order: ModuleOrder::Top(self.order.base().clone()),
        }
    }

    /// Same ring and variables, new rank and order.
    pub fn with_order(&self, rank: usize, order: ModuleOrder) -> FreeModule<R> {
        FreeModule::new(self.ring.clone(), self.nvars, rank, order)
    }

    pub fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn zero(&self) -> PolyVector<R::Elem> {
        PolyVector::zero()
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    /// The basis vector `e_i` (0-based).
    pub fn basis_vector(&self, i: usize) -> PolyVector<R::Elem> {
        self.monomial_vector(self.ring.one(), Monomial::one(self.nvars), i)
    }

    pub fn monomial_vector(&self, c: R::Elem, m: Monomial, position: usize) -> PolyVector<R::Elem> {
        self.normalize(alloc::vec![Term::new(c, ModuleMonomial::new(m, position))])
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.monomial_vector(c, Monomial::one(self.nvars), 0)
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn normalize(&self, mut raw: Vec<Term<R::Elem>>) -> PolyVector<R::Elem> {
        debug_assert!(raw
            .iter()
            .all(|t| t.monomial.position < self.rank && t.monomial.monomial.nvars() == self.nvars));
        raw.sort_by(|a, b| self.compare(&b.monomial, &a.monomial));
        let mut terms: Vec<Term<R::Elem>> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = self.ring.add(&last.coeff, &t.coeff);
                }
                _ => {
                    if let Some(last) = terms.last() {
                        if self.ring.is_zero(&last.coeff) {
                            terms.pop();
                        }
                    }
                    terms.push(t);
                }
            }
        }
        if let Some(last) = terms.last() {
            if self.ring.is_zero(&last.coeff) {
                terms.pop();
            }
        }
        PolyVector { terms }
    }

    /// Re-sorts a vector that was built under another order.
    pub fn resort(&self, u: &PolyVector<R::Elem>) -> PolyVector<R::Elem> {
        self.normalize(u.terms.clone())
    }

    pub fn add(&self, a: &PolyVector<R::Elem>, b: &PolyVector<R::Elem>) -> PolyVector<R::Elem> {
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (s, t) = (&a.terms[i], &b.terms[j]);
            match self.compare(&s.monomial, &t.monomial) {
                Ordering::Greater => {
                    terms.push(s.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(t.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.ring.add(&s.coeff, &t.coeff);
                    if !self.ring.is_zero(&c) {
                        terms.push(Term::new(c, s.monomial.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a.terms[i..]);
        terms.extend_from_slice(&b.terms[j..]);
        PolyVector { terms }
    }

    pub fn neg(&self, a: &PolyVector<R::Elem>) -> PolyVector<R::Elem> {
        PolyVector {
            terms: a
                .terms
                .iter()
                .map(|t| Term::new(self.ring.neg(&t.coeff), t.monomial.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, a: &PolyVector<R::Elem>, b: &PolyVector<R::Elem>) -> PolyVector<R::Elem> {
        self.add(a, &self.neg(b))
    }

    /// `c · X^γ · u`. Monomial orders are compatible with multiplication,
    /// so no re-sorting is needed; products that vanish in `R` are dropped.
    pub fn scale_by_term(
        &self,
        u: &PolyVector<R::Elem>,
        c: &R::Elem,
        m: &Monomial,
    ) -> PolyVector<R::Elem> {
        if self.ring.is_zero(c) {
            return PolyVector::zero();
        }
        PolyVector {
            terms: u
                .terms
                .iter()
                .filter_map(|t| {
                    let k = self.ring.mul(c, &t.coeff);
                    (!self.ring.is_zero(&k)).then(|| Term::new(k, t.monomial.times(m)))
                })
                .collect(),
        }
    }

    pub fn scale(&self, u: &PolyVector<R::Elem>, c: &R::Elem) -> PolyVector<R::Elem> {
        self.scale_by_term(u, c, &Monomial::one(self.nvars))
    }

    /// `g · u` for a scalar polynomial `g`.
    pub fn mul(&self, g: &Poly<R::Elem>, u: &PolyVector<R::Elem>) -> PolyVector<R::Elem> {
        let mut raw = Vec::with_capacity(g.len() * u.len());
        for s in &g.terms {
            for t in &u.terms {
                raw.push(Term::new(
                    self.ring.mul(&s.coeff, &t.coeff),
                    t.monomial.times(&s.monomial.monomial),
                ));
            }
        }
        self.normalize(raw)
    }

    /// `Σ g_i · u_i`.
    pub fn linear_combination<'a, I>(&self, pairs: I) -> PolyVector<R::Elem>
    where
        I: IntoIterator<Item = (&'a Poly<R::Elem>, &'a PolyVector<R::Elem>)>,
        R::Elem: 'a,
    {
        let mut raw = Vec::new();
        for (g, u) in pairs {
            for s in &g.terms {
                for t in &u.terms {
                    raw.push(Term::new(
                        self.ring.mul(&s.coeff, &t.coeff),
                        t.monomial.times(&s.monomial.monomial),
                    ));
                }
            }
        }
        self.normalize(raw)
    }

    pub fn leading_data(&self, u: &PolyVector<R::Elem>) -> LeadingData<R::Elem> {
        match u.leading_term() {
            None => LeadingData {
                lc: self.ring.zero(),
                lt: None,
                mdeg: MultiDegree::NegInfinity,
            },
            Some(t) => LeadingData {
                lc: t.coeff.clone(),
                mdeg: MultiDegree::Finite(t.monomial.monomial.clone()),
                lt: Some(t.clone()),
            },
        }
    }

    /// Builds `Σ g_i e_i` from its coordinates.
    pub fn from_components(&self, comps: &[Poly<R::Elem>]) -> PolyVector<R::Elem> {
        debug_assert_eq!(comps.len(), self.rank);
        let raw = comps
            .iter()
            .enumerate()
            .flat_map(|(i, g)| {
                g.terms
                    .iter()
                    .map(move |t| Term::new(t.coeff.clone(), ModuleMonomial::new(t.monomial.monomial.clone(), i)))
            })
            .collect();
        self.normalize(raw)
    }

    /// The coordinates of `u` as scalar polynomials.
    pub fn components(&self, u: &PolyVector<R::Elem>) -> Vec<Poly<R::Elem>> {
        let scalars = self.scalar_module();
        let mut raw: Vec<Vec<Term<R::Elem>>> = (0..self.rank).map(|_| Vec::new()).collect();
        for t in &u.terms {
            raw[t.monomial.position].push(Term::new(
                t.coeff.clone(),
                ModuleMonomial::new(t.monomial.monomial.clone(), 0),
            ));
        }
        raw.into_iter().map(|r| scalars.normalize(r)).collect()
    }

    /// Evaluates `Σ v_j f_j` for scalar coordinates `v` and vectors `f`.
    pub fn dot(&self, v: &[Poly<R::Elem>], f: &[PolyVector<R::Elem>]) -> PolyVector<R::Elem> {
        self.linear_combination(v.iter().zip(f))
    }
}
