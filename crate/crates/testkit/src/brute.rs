//! Exhaustive syzygies of terms over `ZZ/n`.
//!
//! A syzygy of terms `a_j X^{α_j} e_{π_j}` splits into pieces, one per
//! module monomial `N`, where entry `j` is `c_j · N / M_j`. So enumerating
//! every coefficient vector in every piece with entry degree at most `d`
//! covers all syzygies of that degree. Span checks use the same split: the
//! piece of the span at `N` is the additive group generated by the pieces
//! of the generators whose degree divides `N`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use syzcalc_core::polynomials::{FreeModule, Monomial, PolyVector, Term};
use syzcalc_core::rings::IntegersMod;
use syzcalc_core::syzygies::SyzygyVector;

pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteForceError {
    /// The enumeration would visit more vectors than allowed.
    Explosion { needed: u128, cap: u128 },
    /// A generator is not homogeneous, so it has no single degree.
    Inhomogeneous(usize),
    WrongArity { expected: usize, got: usize },
}

impl fmt::Display for BruteForceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteForceError::Explosion { needed, cap } => {
                write!(f, "enumeration of {needed} vectors exceeds the cap of {cap}")
            }
            BruteForceError::Inhomogeneous(i) => write!(f, "generator {} is not homogeneous", i + 1),
            BruteForceError::WrongArity { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
        }
    }
}

impl std::error::Error for BruteForceError {}

type Key = (usize, Vec<u32>);

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minus(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn plus(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// All exponent vectors in `nvars` variables of total degree at most `d`.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; nvars]];
    for v in 0..nvars {
        let mut next = Vec::new();
        for e in &out {
            let used = degree(e);
            for k in 0..=(d - used) {
                let mut f = e.clone();
                f[v] = k;
                next.push(f);
            }
        }
        out = next;
    }
    out
}

fn term_key(t: &Term<u64>) -> Key {
    (t.monomial.position, t.monomial.monomial.exponents().to_vec())
}

/// Every nonzero syzygy of `terms` whose entries are terms of degree at most
/// `degree_bound` and that lives in a single piece.
///
/// Returns them piece by piece, pieces in ascending `(position, exponents)`,
/// coefficient vectors in lexicographic order.
pub fn brute_force_syzygies(
    module: &FreeModule<IntegersMod>,
    terms: &[Term<u64>],
    degree_bound: u32,
    cap: u128,
) -> Result<Vec<SyzygyVector<u64>>, BruteForceError> {
    let n = module.ring().modulus();
    let nvars = module.nvars();
    let keys: Vec<Key> = terms.iter().map(term_key).collect();

    let mut pieces: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    for (pos, m) in &keys {
        for g in monomials_up_to(nvars, degree_bound) {
            pieces.entry((*pos, plus(m, &g))).or_default();
        }
    }
    for (piece, support) in pieces.iter_mut() {
        for (j, (pos, m)) in keys.iter().enumerate() {
            if *pos == piece.0 && divides(m, &piece.1) && degree(&minus(&piece.1, m)) <= degree_bound {
                support.push(j);
            }
        }
    }

    let needed = pieces
        .values()
        .try_fold(0u128, |acc, s| {
            (n as u128).checked_pow(s.len() as u32).and_then(|c| acc.checked_add(c))
        })
        .unwrap_or(u128::MAX);
    if needed > cap {
        return Err(BruteForceError::Explosion { needed, cap });
    }

    let scalars = module.scalar_module();
    let mut out = Vec::new();
    for ((_, exps), support) in &pieces {
        let k = support.len();
        let mut c = vec![0u64; k];
        loop {
            // Advance like an odometer; the all-zero start is skipped.
            let mut i = k;
            while i > 0 {
                i -= 1;
                c[i] += 1;
                if c[i] < n {
                    break;
                }
                c[i] = 0;
            }
            if c.iter().all(|&x| x == 0) {
                break;
            }
            let sum = support
                .iter()
                .zip(&c)
                .fold(0u128, |acc, (&j, &cj)| (acc + cj as u128 * terms[j].coeff as u128) % n as u128);
            if sum != 0 {
                continue;
            }
            let mut entries: Vec<PolyVector<u64>> = (0..terms.len()).map(|_| scalars.zero()).collect();
            for (&j, &cj) in support.iter().zip(&c) {
                if cj != 0 {
                    let q = Monomial::new(minus(exps, &keys[j].1));
                    entries[j] = scalars.monomial_vector(cj, q, 0);
                }
            }
            out.push(SyzygyVector { entries, label: None });
        }
    }
    Ok(out)
}

/// The single piece `N` a syzygy of `terms` lives in, if it has one.
fn homogeneous_degree(terms: &[Term<u64>], v: &SyzygyVector<u64>) -> Option<Option<Key>> {
    let mut found: Option<Key> = None;
    for (e, t) in v.entries.iter().zip(terms) {
        for s in e.terms() {
            let k = (t.monomial.position, plus(s.monomial.monomial.exponents(), t.monomial.monomial.exponents()));
            match &found {
                Some(f) if *f != k => return None,
                _ => found = Some(k),
            }
        }
    }
    Some(found)
}

/// Splits `v` into its pieces: `N -> (j -> coefficient of N / M_j in v_j)`.
fn split(terms: &[Term<u64>], v: &SyzygyVector<u64>) -> BTreeMap<Key, BTreeMap<usize, u64>> {
    let mut out: BTreeMap<Key, BTreeMap<usize, u64>> = BTreeMap::new();
    for (j, (e, t)) in v.entries.iter().zip(terms).enumerate() {
        for s in e.terms() {
            let k = (t.monomial.position, plus(s.monomial.monomial.exponents(), t.monomial.monomial.exponents()));
            out.entry(k).or_default().insert(j, s.coeff);
        }
    }
    out
}

/// Decides whether `candidate` lies in the `ZZ/n[X]`-span of `generators`,
/// all read as syzygy-shaped vectors over `terms`.
///
/// Every generator must be homogeneous. The candidate need not be.
pub fn in_term_syzygy_span(
    ring: &IntegersMod,
    terms: &[Term<u64>],
    generators: &[SyzygyVector<u64>],
    candidate: &SyzygyVector<u64>,
    cap: u128,
) -> Result<bool, BruteForceError> {
    let n = ring.modulus();
    let p = terms.len();
    for v in generators.iter().chain(Some(candidate)) {
        if v.entries.len() != p {
            return Err(BruteForceError::WrongArity { expected: p, got: v.entries.len() });
        }
    }
    let mut graded = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        match homogeneous_degree(terms, g) {
            None => return Err(BruteForceError::Inhomogeneous(i)),
            Some(None) => {}
            Some(Some(k)) => graded.push((k, split(terms, g).into_values().next().unwrap_or_default())),
        }
    }

    for ((pos, exps), target) in split(terms, candidate) {
        let support: Vec<usize> = (0..p)
            .filter(|&j| terms[j].monomial.position == pos && divides(terms[j].monomial.monomial.exponents(), &exps))
            .collect();
        let size = (n as u128).checked_pow(support.len() as u32).unwrap_or(u128::MAX);
        if size > cap {
            return Err(BruteForceError::Explosion { needed: size, cap });
        }
        let project = |m: &BTreeMap<usize, u64>| -> Vec<u64> {
            support.iter().map(|j| m.get(j).copied().unwrap_or(0) % n).collect()
        };
        let gens: BTreeSet<Vec<u64>> = graded
            .iter()
            .filter(|((gp, ge), _)| *gp == pos && divides(ge, &exps))
            .map(|(_, m)| project(m))
            .filter(|w| w.iter().any(|&x| x != 0))
            .collect();
        let goal = project(&target);
        if !additive_closure_contains(n, &gens, &goal) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn additive_closure_contains(n: u64, gens: &BTreeSet<Vec<u64>>, goal: &[u64]) -> bool {
    let zero = vec![0u64; goal.len()];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::from([zero.clone()]);
    seen.insert(zero);
    while let Some(x) = queue.pop_front() {
        if x == goal {
            return true;
        }
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzcalc_core::orders::{ModuleOrder, MonomialOrder};
    use syzcalc_core::polynomials::ModuleMonomial;

    fn module(nvars: usize, rank: usize) -> FreeModule<IntegersMod> {
        FreeModule::new(IntegersMod::new(8), nvars, rank, ModuleOrder::Top(MonomialOrder::grlex(nvars)))
    }

    fn term(c: u64, e: &[u32], pos: usize) -> Term<u64> {
        Term::new(c, ModuleMonomial::new(Monomial::new(e.to_vec()), pos))
    }

    fn constants(h: &FreeModule<IntegersMod>, cs: &[u64]) -> SyzygyVector<u64> {
        let s = h.scalar_module();
        SyzygyVector {
            entries: cs.iter().map(|&c| if c == 0 { s.zero() } else { s.constant(c) }).collect(),
            label: None,
        }
    }

    #[test]
    fn unit_term_has_no_syzygies() {
        let h = module(1, 1);
        let found = brute_force_syzygies(&h, &[term(3, &[1], 0)], 3, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn two_and_four() {
        let h = module(1, 1);
        let ts = [term(2, &[0], 0), term(4, &[0], 0)];
        let found = brute_force_syzygies(&h, &ts, 0, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(found.contains(&constants(&h, &[2, 3])));
        // 2·c1 + 4·c2 ≡ 0 mod 8 has 16 solutions, 15 of them nonzero.
        assert_eq!(found.len(), 15);
    }

    #[test]
    fn span_of_two_and_four() {
        let h = module(1, 1);
        let ring = *h.ring();
        let ts = [term(2, &[0], 0), term(4, &[0], 0)];
        let gens = [constants(&h, &[4, 0]), constants(&h, &[2, 7])];
        for v in brute_force_syzygies(&h, &ts, 0, DEFAULT_ENUMERATION_CAP).unwrap() {
            assert!(in_term_syzygy_span(&ring, &ts, &gens, &v, DEFAULT_ENUMERATION_CAP).unwrap());
        }
        let lone = [constants(&h, &[4, 0])];
        assert!(!in_term_syzygy_span(&ring, &ts, &lone, &constants(&h, &[2, 3]), DEFAULT_ENUMERATION_CAP).unwrap());
    }

    #[test]
    fn explosion_guard() {
        let h = module(3, 1);
        let ts = [term(1, &[0, 0, 0], 0), term(1, &[1, 0, 0], 0), term(1, &[0, 1, 0], 0)];
        let err = brute_force_syzygies(&h, &ts, 6, 1000).unwrap_err();
        assert!(matches!(err, BruteForceError::Explosion { .. }));
    }
}
