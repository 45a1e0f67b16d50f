//! Syzygies of terms, S-lists and rewriting.
//!
//! For terms `a_1 M_1, …, a_p M_p`, every subset `E` of indices whose
//! monomials share a position (a position level set) contributes the
//! vectors `S^E_i` with `S^E_{i,j} = s^E_{i,j} · M^E / M_j` for `j ∈ E`,
//! where the `s^E_i` generate `Syz(a_j : j ∈ E)` and `M^E = lcm(M_j : j ∈ E)`.
//! Together they generate the syzygy module of the terms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::polynomials::{FreeModule, ModuleMonomial, Monomial, Poly, Term};
use crate::rings::{CoherentRing, NoSolution, Ring, StrictBezout};

mod rewrite;
mod slist;

pub use rewrite::{iterated_rewrite, rewrite_step, Decomposed, RewriteOutcome, RewriteState};
pub use slist::{iterated_s_list, s_list, s_list_with, SListItem};

/// A procedure producing generators of the syzygies of a list of terms,
/// grouped by level set: [`syzygies_of_terms`] or [`syzygies_of_terms_bezout`].
pub type TermSyzygies<R> = fn(
    &FreeModule<R>,
    &[Term<<R as Ring>::Elem>],
    usize,
) -> Result<Vec<LevelSetSyzygies<<R as Ring>::Elem>>, SyzygyError>;

/// Default bound on the number of position level sets enumerated.
pub const DEFAULT_LEVEL_SET_CAP: usize = 1 << 16;

/// A nonempty sorted set of 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// # Panics
    /// If `indices` is empty.
    pub fn new(mut indices: Vec<usize>) -> Self {
        assert!(!indices.is_empty(), "index sets are nonempty");
        indices.sort_unstable();
        indices.dedup();
        IndexSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, j) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        f.write_str("}")
    }
}

/// Names the vector `S^E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyzygyLabel {
    pub set: IndexSet,
    pub index: usize,
}

impl fmt::Display for SyzygyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}^{}", self.index + 1, self.set)
    }
}

/// An element of `R[X]^p` in coordinates over `ε_1, …, ε_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector<E> {
    pub entries: Vec<Poly<E>>,
    pub label: Option<SyzygyLabel>,
}

impl<E> SyzygyVector<E> {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// The syzygies contributed by one position level set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSetSyzygies<E> {
    pub set: IndexSet,
    /// `M^E`.
    pub lcm: ModuleMonomial,
    /// `s^E_i`, indexed like `set`.
    pub coefficients: Vec<Vec<E>>,
    /// `S^E_i`, one per entry of `coefficients`.
    pub vectors: Vec<SyzygyVector<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyzygyError {
    TooManyLevelSets { count: u128, cap: usize },
    /// Input at this index is zero.
    ZeroInput(usize),
    /// Rewriting was asked to continue although `LM(u)` already equals `aLM`.
    AlreadyLeading,
    Unrepresentable(NoSolution),
}

impl fmt::Display for SyzygyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyError::TooManyLevelSets { count, cap } => {
                write!(f, "{count} position level sets exceed the cap of {cap}")
            }
            SyzygyError::ZeroInput(j) => write!(f, "input {} is zero", j + 1),
            SyzygyError::AlreadyLeading => {
                f.write_str("the leading monomial of the sum already equals aLM")
            }
            SyzygyError::Unrepresentable(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SyzygyError {}

impl From<NoSolution> for SyzygyError {
    fn from(e: NoSolution) -> Self {
        SyzygyError::Unrepresentable(e)
    }
}

fn groups_by_position(ms: &[ModuleMonomial]) -> Vec<Vec<usize>> {
    let mut positions: Vec<usize> = ms.iter().map(|m| m.position).collect();
    positions.sort_unstable();
    positions.dedup();
    positions
        .into_iter()
        .map(|pos| (0..ms.len()).filter(|&j| ms[j].position == pos).collect())
        .collect()
}

/// All nonempty index sets whose monomials share a position, ordered by
/// size and then lexicographically.
pub fn position_level_sets(ms: &[ModuleMonomial], cap: usize) -> Result<Vec<IndexSet>, SyzygyError> {
    level_sets_up_to(ms, usize::MAX, cap)
}

fn level_sets_up_to(
    ms: &[ModuleMonomial],
    max_size: usize,
    cap: usize,
) -> Result<Vec<IndexSet>, SyzygyError> {
    let groups = groups_by_position(ms);
    let count: u128 = groups
        .iter()
        .map(|g| {
            let k = g.len().min(max_size);
            (1..=k).map(|r| binomial(g.len(), r)).fold(0u128, u128::saturating_add)
        })
        .fold(0, u128::saturating_add);
    if count > cap as u128 {
        return Err(SyzygyError::TooManyLevelSets { count, cap });
    }
    let mut sets = Vec::with_capacity(count as usize);
    for g in &groups {
        for r in 1..=g.len().min(max_size) {
            combinations(g, r, &mut |c| sets.push(IndexSet(c.to_vec())));
        }
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(sets)
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(n as u128 - i) / (i + 1);
    }
    acc
}

fn combinations(items: &[usize], r: usize, out: &mut impl FnMut(&[usize])) {
    fn go(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut impl FnMut(&[usize])) {
        if cur.len() == r {
            out(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, r, 0, &mut Vec::with_capacity(r), out)
}

/// Lifts coefficient syzygies `s` of `(a_j : j ∈ E)` to `S^E` vectors.
fn lift<R: CoherentRing>(
    module: &FreeModule<R>,
    terms: &[Term<R::Elem>],
    set: IndexSet,
    coefficients: Vec<Vec<R::Elem>>,
) -> LevelSetSyzygies<R::Elem> {
    let scalars = module.scalar_module();
    let ring = module.ring();
    let lcm = ModuleMonomial::lcm(set.indices().iter().map(|&j| &terms[j].monomial))
        .expect("level sets share a position");
    let shifts: Vec<Monomial> = set
        .indices()
        .iter()
        .map(|&j| terms[j].monomial.quotient_of(&lcm).expect("lcm is a multiple"))
        .collect();
    let mut kept = Vec::new();
    let mut vectors = Vec::new();
    for s in coefficients {
        if s.iter().all(|c| ring.is_zero(c)) {
            continue;
        }
        let mut entries = vec![scalars.zero(); terms.len()];
        for ((&j, c), shift) in set.indices().iter().zip(&s).zip(&shifts) {
            entries[j] = scalars.monomial_vector(c.clone(), shift.clone(), 0);
        }
        vectors.push(SyzygyVector {
            entries,
            label: Some(SyzygyLabel {
                set: set.clone(),
                index: vectors.len(),
            }),
        });
        kept.push(s);
    }
    LevelSetSyzygies {
        set,
        lcm,
        coefficients: kept,
        vectors,
    }
}

fn check_terms<R: CoherentRing>(module: &FreeModule<R>, terms: &[Term<R::Elem>]) -> Result<(), SyzygyError> {
    match terms.iter().position(|t| module.ring().is_zero(&t.coeff)) {
        Some(j) => Err(SyzygyError::ZeroInput(j)),
        None => Ok(()),
    }
}

/// `S^E_1, …, S^E_ℓ` for one level set `E`.
pub fn basic_syzygies_of_terms<R: CoherentRing>(
    module: &FreeModule<R>,
    terms: &[Term<R::Elem>],
    set: &IndexSet,
) -> Result<LevelSetSyzygies<R::Elem>, SyzygyError> {
    check_terms(module, terms)?;
    let a: Vec<R::Elem> = set.indices().iter().map(|&j| terms[j].coeff.clone()).collect();
    let cert = module.ring().syzygy_generators(&a);
    Ok(lift(module, terms, set.clone(), cert.generators))
}

/// The level-set syzygies of all position level sets, in enumeration order.
pub fn syzygies_of_terms<R: CoherentRing>(
    module: &FreeModule<R>,
    terms: &[Term<R::Elem>],
    cap: usize,
) -> Result<Vec<LevelSetSyzygies<R::Elem>>, SyzygyError> {
    check_terms(module, terms)?;
    let ms: Vec<ModuleMonomial> = terms.iter().map(|t| t.monomial.clone()).collect();
    position_level_sets(&ms, cap)?
        .into_iter()
        .map(|set| basic_syzygies_of_terms(module, terms, &set))
        .filter(|r| r.as_ref().map_or(true, |l| !l.vectors.is_empty()))
        .collect()
}

/// Strict Bézout variant: only pairs and singletons are visited, with the
/// pair relation `(b2', -b1')` and the annihilator of each coefficient.
pub fn syzygies_of_terms_bezout<R: CoherentRing + StrictBezout>(
    module: &FreeModule<R>,
    terms: &[Term<R::Elem>],
    cap: usize,
) -> Result<Vec<LevelSetSyzygies<R::Elem>>, SyzygyError> {
    check_terms(module, terms)?;
    let ring = module.ring();
    let ms: Vec<ModuleMonomial> = terms.iter().map(|t| t.monomial.clone()).collect();
    let mut out = Vec::new();
    for set in level_sets_up_to(&ms, 2, cap)? {
        let coefficients = match *set.indices() {
            [j] => ring
                .annihilator(&terms[j].coeff)
                .into_iter()
                .map(|b| vec![b])
                .collect(),
            [i, j] => {
                let d = ring.strict_bezout_decompose(&terms[i].coeff, &terms[j].coeff);
                vec![vec![d.cofactor2, ring.neg(&d.cofactor1)]]
            }
            _ => unreachable!("sets of size at most two"),
        };
        let l = lift(module, terms, set, coefficients);
        if !l.vectors.is_empty() {
            out.push(l);
        }
    }
    Ok(out)
}

/// All vectors of a level-set list, in order.
pub fn flatten<E: Clone>(levels: &[LevelSetSyzygies<E>]) -> Vec<SyzygyVector<E>> {
    levels.iter().flat_map(|l| l.vectors.iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{ModuleOrder, MonomialOrder};
    use crate::rings::{Integers, IntegersMod};
    use num_bigint::BigInt;

    fn mm(e: &[u32], pos: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(e.to_vec()), pos)
    }

    fn example_terms() -> (FreeModule<IntegersMod>, Vec<Term<u64>>) {
        let h = FreeModule::new(IntegersMod::new(8), 2, 2, ModuleOrder::Top(MonomialOrder::grlex(2)));
        let ts = vec![
            Term::new(2, mm(&[2, 1], 0)),
            Term::new(1, mm(&[1, 2], 0)),
            Term::new(4, mm(&[1, 0], 1)),
        ];
        (h, ts)
    }

    fn sets(v: &[&[usize]]) -> Vec<IndexSet> {
        v.iter().map(|s| IndexSet::new(s.to_vec())).collect()
    }

    #[test]
    fn level_sets_of_example() {
        let (_, ts) = example_terms();
        let ms: Vec<_> = ts.iter().map(|t| t.monomial.clone()).collect();
        assert_eq!(
            position_level_sets(&ms, DEFAULT_LEVEL_SET_CAP).unwrap(),
            sets(&[&[0], &[1], &[2], &[0, 1]])
        );
    }

    #[test]
    fn level_sets_rank_one() {
        let ms = vec![mm(&[1], 0), mm(&[2], 0), mm(&[3], 0)];
        assert_eq!(position_level_sets(&ms, 100).unwrap().len(), 7);
        assert_eq!(position_level_sets(&ms[..1], 100).unwrap(), sets(&[&[0]]));
        assert!(matches!(
            position_level_sets(&ms, 6),
            Err(SyzygyError::TooManyLevelSets { count: 7, cap: 6 })
        ));
    }

    #[test]
    fn level_set_count_saturates() {
        let ms: Vec<_> = (0..200).map(|e| mm(&[e], 0)).collect();
        assert!(matches!(
            position_level_sets(&ms, 1 << 16),
            Err(SyzygyError::TooManyLevelSets { count: u128::MAX, .. })
        ));
    }

    #[test]
    fn example_basic_syzygies() {
        let (h, ts) = example_terms();
        let s = h.scalar_module();
        let l = basic_syzygies_of_terms(&h, &ts, &IndexSet::new(vec![0, 1])).unwrap();
        assert_eq!(l.vectors.len(), 1);
        assert_eq!(
            l.vectors[0].entries,
            vec![
                s.monomial_vector(1, Monomial::new(vec![0, 1]), 0),
                s.monomial_vector(6, Monomial::new(vec![1, 0]), 0),
                s.zero()
            ]
        );
        let l3 = basic_syzygies_of_terms(&h, &ts, &IndexSet::new(vec![2])).unwrap();
        assert_eq!(l3.vectors[0].entries, vec![s.zero(), s.zero(), s.constant(2)]);
        let l2 = basic_syzygies_of_terms(&h, &ts, &IndexSet::new(vec![1])).unwrap();
        assert!(l2.vectors.is_empty());
    }

    #[test]
    fn example_all_syzygies() {
        let (h, ts) = example_terms();
        let levels = syzygies_of_terms(&h, &ts, DEFAULT_LEVEL_SET_CAP).unwrap();
        let vs = flatten(&levels);
        assert_eq!(vs.len(), 3);
        let s = h.scalar_module();
        let e = |v: &SyzygyVector<u64>| v.entries.clone();
        assert_eq!(e(&vs[0]), vec![s.constant(4), s.zero(), s.zero()]);
        assert_eq!(e(&vs[1]), vec![s.zero(), s.zero(), s.constant(2)]);
    }

    #[test]
    fn integer_pair_of_terms() {
        let h = FreeModule::new(Integers, 2, 1, ModuleOrder::Top(MonomialOrder::grlex(2)));
        let ts = vec![
            Term::new(BigInt::from(2), mm(&[1, 0], 0)),
            Term::new(BigInt::from(3), mm(&[0, 1], 0)),
        ];
        let vs = flatten(&syzygies_of_terms(&h, &ts, 16).unwrap());
        let s = h.scalar_module();
        assert_eq!(vs.len(), 1);
        assert_eq!(
            vs[0].entries,
            vec![
                s.monomial_vector(BigInt::from(-3), Monomial::new(vec![0, 1]), 0),
                s.monomial_vector(BigInt::from(2), Monomial::new(vec![1, 0]), 0)
            ]
        );
        let vb = flatten(&syzygies_of_terms_bezout(&h, &ts, 16).unwrap());
        assert_eq!(vb.len(), 1);
    }
}
