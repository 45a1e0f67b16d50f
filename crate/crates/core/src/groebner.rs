//! Gröbner bases: the leading-term module, Buchberger's criterion and
//! the round-based completion procedure.
//!
//! A list `G` is a Gröbner basis when every S-list item of `G` has remainder
//! zero on division by `G`. Completion appends nonzero remainders until a
//! whole round adds nothing; this need not happen when the module of leading
//! terms is not finitely generated, so rounds are capped.

use alloc::vec::Vec;
use core::fmt;

use crate::division::{divide, lt_module_witness, DivisionError};
use crate::orders::ModuleOrder;
use crate::polynomials::{FreeModule, Monomial, Poly, PolyVector, Term};
use crate::rings::{CoherentRing, StrictBezout};
use crate::syzygies::{
    iterated_s_list, s_list_with, syzygies_of_terms, syzygies_of_terms_bezout, SyzygyError,
    SyzygyLabel, TermSyzygies, DEFAULT_LEVEL_SET_CAP,
};

pub const DEFAULT_MAX_ROUNDS: usize = 32;

/// Knobs shared by the completion, criterion and resolution routines.
pub struct GroebnerOptions<R: CoherentRing> {
    pub max_rounds: usize,
    pub level_set_cap: usize,
    pub term_syzygies: TermSyzygies<R>,
}

impl<R: CoherentRing> Clone for GroebnerOptions<R> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<R: CoherentRing> Copy for GroebnerOptions<R> {}

impl<R: CoherentRing> fmt::Debug for GroebnerOptions<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerOptions")
            .field("max_rounds", &self.max_rounds)
            .field("level_set_cap", &self.level_set_cap)
            .finish_non_exhaustive()
    }
}

impl<R: CoherentRing> Default for GroebnerOptions<R> {
    fn default() -> Self {
        GroebnerOptions {
            max_rounds: DEFAULT_MAX_ROUNDS,
            level_set_cap: DEFAULT_LEVEL_SET_CAP,
            term_syzygies: syzygies_of_terms,
        }
    }
}

impl<R: CoherentRing + StrictBezout> GroebnerOptions<R> {
    /// Uses only pair and annihilator syzygies of leading terms.
    pub fn bezout(mut self) -> Self {
        self.term_syzygies = syzygies_of_terms_bezout;
        self
    }
}

impl<R: CoherentRing> GroebnerOptions<R> {
    pub fn max_rounds(mut self, rounds: usize) -> Self {
        self.max_rounds = rounds;
        self
    }
}

/// A Gröbner basis together with how each element arose from the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<E> {
    pub elements: Vec<PolyVector<E>>,
    /// `elements[k] = Σ_j provenance[k][j] · input_j`.
    pub provenance: Vec<Vec<Poly<E>>>,
    pub order: ModuleOrder,
}

impl<E> GroebnerBasis<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerReport<E> {
    /// Rounds run, including the final one that added nothing.
    pub rounds: usize,
    /// Appended remainders in insertion order.
    pub added: Vec<PolyVector<E>>,
    pub terminated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerError<E> {
    ZeroInput(usize),
    Syzygy(SyzygyError),
    RoundLimitExceeded {
        partial: GroebnerBasis<E>,
        report: BuchbergerReport<E>,
    },
}

impl<E> fmt::Display for GroebnerError<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::ZeroInput(j) => write!(f, "generator {} is zero", j + 1),
            GroebnerError::Syzygy(e) => write!(f, "{e}"),
            GroebnerError::RoundLimitExceeded { report, .. } => write!(
                f,
                "no Gröbner basis after {} rounds ({} elements added)",
                report.rounds,
                report.added.len()
            ),
        }
    }
}

impl<E: fmt::Debug> core::error::Error for GroebnerError<E> {}

impl<E> From<SyzygyError> for GroebnerError<E> {
    fn from(e: SyzygyError) -> Self {
        GroebnerError::Syzygy(e)
    }
}

impl<E> From<DivisionError> for GroebnerError<E> {
    fn from(e: DivisionError) -> Self {
        match e {
            DivisionError::ZeroDivisor(j) => GroebnerError::ZeroInput(j),
        }
    }
}

/// Decides `T ∈ ⟨LT(G)⟩`; the witness lists `(j, a_j, LM(T)/LM(g_j))` with
/// `Σ a_j LC(g_j) = LC(T)`.
pub fn term_in_lt_module<R: CoherentRing>(
    module: &FreeModule<R>,
    t: &Term<R::Elem>,
    g: &[PolyVector<R::Elem>],
) -> Option<Vec<(usize, R::Elem, Monomial)>> {
    lt_module_witness(module.ring(), &t.coeff, &t.monomial, g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion<E> {
    Holds,
    /// The first S-list item with a nonzero remainder.
    Fails {
        label: Option<SyzygyLabel>,
        remainder: PolyVector<E>,
    },
}

impl<E> Criterion<E> {
    pub fn holds(&self) -> bool {
        matches!(self, Criterion::Holds)
    }
}

/// Buchberger's criterion: every S-list item of `g` divides to zero by `g`.
pub fn buchberger_criterion<R: CoherentRing>(
    module: &FreeModule<R>,
    g: &[PolyVector<R::Elem>],
    options: &GroebnerOptions<R>,
) -> Result<Criterion<R::Elem>, GroebnerError<R::Elem>> {
    if let Some(j) = g.iter().position(|h| h.is_zero()) {
        return Err(GroebnerError::ZeroInput(j));
    }
    for item in s_list_with(module, g, options.level_set_cap, options.term_syzygies)? {
        let r = divide(module, &item.vector, g)?.remainder;
        if !r.is_zero() {
            return Ok(Criterion::Fails {
                label: item.label,
                remainder: r,
            });
        }
    }
    Ok(Criterion::Holds)
}

fn unit_provenance<R: CoherentRing>(module: &FreeModule<R>, p: usize) -> Vec<Vec<Poly<R::Elem>>> {
    let scalars = module.scalar_module();
    (0..p)
        .map(|j| {
            (0..p)
                .map(|k| {
                    if j == k {
                        scalars.constant(module.ring().one())
                    } else {
                        scalars.zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `Σ_k c_k · prov_k`, coordinatewise.
fn combine_provenance<R: CoherentRing>(
    module: &FreeModule<R>,
    coeffs: &[Poly<R::Elem>],
    prov: &[Vec<Poly<R::Elem>>],
    width: usize,
) -> Vec<Poly<R::Elem>> {
    let scalars = module.scalar_module();
    (0..width)
        .map(|j| scalars.linear_combination(coeffs.iter().zip(prov).map(|(c, p)| (c, &p[j]))))
        .collect()
}

/// Completes `fs` to a Gröbner basis.
///
/// Each round forms the S-list of the current basis and divides every item
/// by the basis as it stands at that moment, so remainders appended earlier
/// in the same round already take part.
pub fn buchberger<R: CoherentRing>(
    module: &FreeModule<R>,
    fs: &[PolyVector<R::Elem>],
    options: &GroebnerOptions<R>,
) -> Result<(GroebnerBasis<R::Elem>, BuchbergerReport<R::Elem>), GroebnerError<R::Elem>> {
    if let Some(j) = fs.iter().position(|f| f.is_zero()) {
        return Err(GroebnerError::ZeroInput(j));
    }
    let width = fs.len();
    let scalars = module.scalar_module();
    let mut g = fs.to_vec();
    let mut prov = unit_provenance(module, width);
    let mut added = Vec::new();
    for round in 1..=options.max_rounds.max(1) {
        let items = s_list_with(module, &g, options.level_set_cap, options.term_syzygies)?;
        let before = g.len();
        for item in items {
            let item_prov = combine_provenance(module, &item.combination, &prov, width);
            let d = divide(module, &item.vector, &g)?;
            if d.remainder.is_zero() {
                continue;
            }
            let used = combine_provenance(module, &d.quotients, &prov, width);
            let r_prov = item_prov
                .iter()
                .zip(&used)
                .map(|(a, b)| scalars.sub(a, b))
                .collect();
            added.push(d.remainder.clone());
            g.push(d.remainder);
            prov.push(r_prov);
        }
        if g.len() == before {
            let basis = GroebnerBasis {
                elements: g,
                provenance: prov,
                order: module.order().clone(),
            };
            let report = BuchbergerReport {
                rounds: round,
                added,
                terminated: true,
            };
            return Ok((basis, report));
        }
    }
    Err(GroebnerError::RoundLimitExceeded {
        partial: GroebnerBasis {
            elements: g,
            provenance: prov,
            order: module.order().clone(),
        },
        report: BuchbergerReport {
            rounds: options.max_rounds.max(1),
            added,
            terminated: false,
        },
    })
}

/// Replaces each element by its remainder modulo the others, dropping
/// zeros, until a full pass changes nothing. Afterwards no term of an
/// element lies in the leading-term module of the others.
pub fn pseudo_reduce<R: CoherentRing>(
    module: &FreeModule<R>,
    basis: &GroebnerBasis<R::Elem>,
) -> GroebnerBasis<R::Elem> {
    let scalars = module.scalar_module();
    let mut g = basis.elements.clone();
    let mut prov = basis.provenance.clone();
    let width = prov.first().map_or(0, |p| p.len());
    loop {
        let mut changed = false;
        let mut l = 0;
        while l < g.len() {
            let others: Vec<PolyVector<R::Elem>> = g
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != l)
                .map(|(_, h)| h.clone())
                .collect();
            let other_prov: Vec<Vec<Poly<R::Elem>>> = prov
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != l)
                .map(|(_, p)| p.clone())
                .collect();
            let d = divide(module, &g[l], &others).expect("basis elements are nonzero");
            if d.remainder == g[l] {
                l += 1;
                continue;
            }
            changed = true;
            if d.remainder.is_zero() {
                g.remove(l);
                prov.remove(l);
                continue;
            }
            let used = combine_provenance(module, &d.quotients, &other_prov, width);
            prov[l] = prov[l]
                .iter()
                .zip(&used)
                .map(|(a, b)| scalars.sub(a, b))
                .collect();
            g[l] = d.remainder;
            l += 1;
        }
        if !changed {
            return GroebnerBasis {
                elements: g,
                provenance: prov,
                order: basis.order.clone(),
            };
        }
    }
}

/// Leading terms of `S^q(f)`, an ascending approximation of the module of
/// leading terms of `⟨f⟩`.
pub fn mlt_generators_up_to<R: CoherentRing>(
    module: &FreeModule<R>,
    q: usize,
    fs: &[PolyVector<R::Elem>],
    cap: usize,
) -> Result<Vec<Term<R::Elem>>, SyzygyError> {
    Ok(iterated_s_list(module, q, fs, cap)?
        .into_iter()
        .map(|item| item.vector.leading_term().cloned().expect("S-list items are nonzero"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::MonomialOrder;
    use crate::polynomials::ModuleMonomial;
    use crate::rings::{Integers, Rationals};
    use alloc::vec;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn zz() -> FreeModule<Integers> {
        FreeModule::new(Integers, 2, 1, ModuleOrder::Top(MonomialOrder::grlex(2)))
    }

    fn poly(h: &FreeModule<Integers>, ts: &[(i64, &[u32])]) -> PolyVector<BigInt> {
        h.normalize(
            ts.iter()
                .map(|(c, e)| Term::new(BigInt::from(*c), ModuleMonomial::new(Monomial::new(e.to_vec()), 0)))
                .collect(),
        )
    }

    fn two_x_x_plus_y(h: &FreeModule<Integers>) -> Vec<PolyVector<BigInt>> {
        vec![poly(h, &[(2, &[1, 0])]), poly(h, &[(1, &[1, 0]), (1, &[0, 1])])]
    }

    #[test]
    fn completes_two_generators() {
        let h = zz();
        let (gb, report) = buchberger(&h, &two_x_x_plus_y(&h), &GroebnerOptions::default()).unwrap();
        assert_eq!(gb.len(), 3);
        assert_eq!(report.rounds, 2);
        assert!(report.terminated);
        let y = gb.elements[2].clone();
        assert!(y == poly(&h, &[(2, &[0, 1])]) || y == poly(&h, &[(-2, &[0, 1])]));
        for (e, p) in gb.elements.iter().zip(&gb.provenance) {
            assert_eq!(&h.dot(p, &two_x_x_plus_y(&h)), e);
        }
        assert!(buchberger_criterion(&h, &gb.elements, &GroebnerOptions::default())
            .unwrap()
            .holds());
    }

    #[test]
    fn criterion_fails_with_witness() {
        let h = zz();
        match buchberger_criterion(&h, &two_x_x_plus_y(&h), &GroebnerOptions::default()).unwrap() {
            Criterion::Fails { remainder, .. } => {
                assert!(remainder == poly(&h, &[(2, &[0, 1])]) || remainder == poly(&h, &[(-2, &[0, 1])]))
            }
            Criterion::Holds => panic!("criterion should fail"),
        }
    }

    #[test]
    fn bezout_mode_agrees() {
        let h = zz();
        let opts = GroebnerOptions::default().bezout();
        let (gb, _) = buchberger(&h, &two_x_x_plus_y(&h), &opts).unwrap();
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn round_cap_reports_partial() {
        let h = zz();
        let opts = GroebnerOptions::default().max_rounds(1);
        match buchberger(&h, &two_x_x_plus_y(&h), &opts) {
            Err(GroebnerError::RoundLimitExceeded { partial, report }) => {
                assert_eq!(partial.len(), 3);
                assert!(!report.terminated);
            }
            other => panic!("expected round limit, got {other:?}"),
        }
    }

    #[test]
    fn membership_in_lt_module() {
        let h = zz();
        let g = vec![poly(&h, &[(2, &[1, 0])])];
        let t = Term::new(BigInt::from(1), ModuleMonomial::new(Monomial::new(vec![1, 0]), 0));
        assert!(term_in_lt_module(&h, &t, &g).is_none());
        let lt = g[0].leading_term().unwrap().clone();
        assert!(term_in_lt_module(&h, &lt, &g).is_some());
    }

    #[test]
    fn pseudo_reduction_over_rationals() {
        let h = FreeModule::new(Rationals, 2, 1, ModuleOrder::Top(MonomialOrder::lex(2)));
        let q = |c: i64, e: &[u32]| {
            Term::new(BigRational::from_integer(c.into()), ModuleMonomial::new(Monomial::new(e.to_vec()), 0))
        };
        let fs = vec![
            h.normalize(vec![q(1, &[1, 0]), q(1, &[0, 1])]),
            h.normalize(vec![q(1, &[0, 1])]),
        ];
        let (gb, _) = buchberger(&h, &fs, &GroebnerOptions::default()).unwrap();
        let red = pseudo_reduce(&h, &gb);
        assert_eq!(
            red.elements,
            vec![h.normalize(vec![q(1, &[1, 0])]), h.normalize(vec![q(1, &[0, 1])])]
        );
        for (e, p) in red.elements.iter().zip(&red.provenance) {
            assert_eq!(&h.dot(p, &fs), e);
        }
        let dup = vec![h.normalize(vec![q(1, &[1, 0])]); 2];
        let (gb, _) = buchberger(&h, &dup, &GroebnerOptions::default()).unwrap();
        assert_eq!(pseudo_reduce(&h, &gb).len(), 1);
    }

    #[test]
    fn mlt_chain() {
        let h = zz();
        let fs = two_x_x_plus_y(&h);
        let l0 = mlt_generators_up_to(&h, 0, &fs, 64).unwrap();
        let l1 = mlt_generators_up_to(&h, 1, &fs, 64).unwrap();
        assert_eq!(l0.len(), 2);
        assert_eq!(&l1[..2], &l0[..]);
        assert_eq!(l1.len(), 3);
    }
}
