use alloc::vec::Vec;

use super::{basic_syzygies_of_terms, IndexSet, SyzygyError, SyzygyVector};
use crate::polynomials::{FreeModule, ModuleMonomial, Poly, PolyVector, Term};
use crate::rings::CoherentRing;

/// A pair appended by a rewriting step: `coefficient · S^E_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposed<E> {
    /// `c_i · aLM / M^E`, the value `g` had when the pair was appended.
    pub coefficient: Poly<E>,
    /// `S^E_i` over the pairs present at that step.
    pub syzygy: SyzygyVector<E>,
}

/// An expression `u = Σ g_j f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteState<E> {
    pub pairs: Vec<(Poly<E>, PolyVector<E>)>,
    /// `None` for the starting pairs.
    pub origins: Vec<Option<Decomposed<E>>>,
}

impl<E: Clone> RewriteState<E> {
    pub fn new(pairs: Vec<(Poly<E>, PolyVector<E>)>) -> Self {
        let origins = pairs.iter().map(|_| None).collect();
        RewriteState { pairs, origins }
    }

    pub fn g(&self) -> Vec<Poly<E>> {
        self.pairs.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn f(&self) -> Vec<PolyVector<E>> {
        self.pairs.iter().map(|(_, f)| f.clone()).collect()
    }

    /// The appended pairs with a nonzero coefficient, in order.
    pub fn decomposition(&self) -> Vec<&Decomposed<E>> {
        self.origins
            .iter()
            .flatten()
            .filter(|d| !d.coefficient.is_zero())
            .collect()
    }

    pub fn sum<R: CoherentRing<Elem = E>>(&self, module: &FreeModule<R>) -> PolyVector<E> {
        module.linear_combination(self.pairs.iter().map(|(g, f)| (g, f)))
    }

    /// `aLM = sup LM(g_j)·LM(f_j)` over nonzero products and its index set.
    pub fn alm<R: CoherentRing<Elem = E>>(
        &self,
        module: &FreeModule<R>,
    ) -> Option<(ModuleMonomial, IndexSet)> {
        let mut best: Option<(ModuleMonomial, Vec<usize>)> = None;
        for (j, (g, f)) in self.pairs.iter().enumerate() {
            let (Some(lg), Some(lf)) = (g.leading_monomial(), f.leading_monomial()) else {
                continue;
            };
            let m = lf.times(&lg.monomial);
            match &mut best {
                Some((b, set)) => match module.compare(&m, b) {
                    core::cmp::Ordering::Greater => best = Some((m, alloc::vec![j])),
                    core::cmp::Ordering::Equal => set.push(j),
                    core::cmp::Ordering::Less => {}
                },
                None => best = Some((m, alloc::vec![j])),
            }
        }
        best.map(|(m, set)| (m, IndexSet::new(set)))
    }

    /// Whether `LM(u) < aLM`, i.e. another rewriting step applies.
    pub fn can_rewrite<R: CoherentRing<Elem = E>>(&self, module: &FreeModule<R>) -> bool {
        match self.alm(module) {
            None => false,
            Some((alm, _)) => self
                .sum(module)
                .leading_monomial()
                .map_or(true, |m| module.compare(m, &alm).is_lt()),
        }
    }
}

/// One rewriting step: the leading parts of the `g_j` on `E` form a
/// syzygy of the leading terms, which is expressed over the `S^E_i` and
/// traded for the new pairs `(c_i aLM/M^E, Σ_j S^E_{i,j} f_j)`.
pub fn rewrite_step<R: CoherentRing>(
    module: &FreeModule<R>,
    state: &RewriteState<R::Elem>,
) -> Result<RewriteState<R::Elem>, SyzygyError> {
    if !state.can_rewrite(module) {
        return Err(SyzygyError::AlreadyLeading);
    }
    let ring = module.ring();
    let scalars = module.scalar_module();
    let (alm, set) = state.alm(module).expect("checked above");
    let p = state.pairs.len();

    let lts: Vec<Term<R::Elem>> = state
        .pairs
        .iter()
        .map(|(_, f)| {
            f.leading_term()
                .cloned()
                .unwrap_or_else(|| Term::new(ring.one(), alm.clone()))
        })
        .collect();
    let basic = basic_syzygies_of_terms(module, &lts, &set)?;
    let b: Vec<R::Elem> = set
        .indices()
        .iter()
        .map(|&j| state.pairs[j].0.leading_term().expect("in E").coeff.clone())
        .collect();
    let cert = crate::rings::CoherenceCertificate {
        arity: set.len(),
        generators: basic.coefficients.clone(),
    };
    let c = ring.represent_syzygy(&b, &cert)?;
    let shift = basic.lcm.quotient_of(&alm).expect("aLM is a multiple of M^E");

    let mut next = state.clone();
    for &j in set.indices() {
        next.pairs[j].0 = next.pairs[j].0.tail();
    }
    for (ci, s) in c.into_iter().zip(basic.vectors) {
        let g = scalars.monomial_vector(ci, shift.clone(), 0);
        let f = module.linear_combination(
            set.indices()
                .iter()
                .map(|&j| (&s.entries[j], &state.pairs[j].1)),
        );
        debug_assert_eq!(s.entries.len(), p);
        next.pairs.push((g.clone(), f));
        next.origins.push(Some(Decomposed {
            coefficient: g,
            syzygy: s,
        }));
    }
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteOutcome<E> {
    /// Number of rewriting steps taken.
    pub steps: usize,
    pub state: RewriteState<E>,
    /// The nonzero `f`s of the final state.
    pub f_list: Vec<PolyVector<E>>,
}

/// Rewrites until `LM(u) = aLM`, which puts `LT(u)` in the module generated
/// by the leading terms of the final `f`s (or until `u` and every product vanish).
pub fn iterated_rewrite<R: CoherentRing>(
    module: &FreeModule<R>,
    pairs: Vec<(Poly<R::Elem>, PolyVector<R::Elem>)>,
) -> Result<RewriteOutcome<R::Elem>, SyzygyError> {
    if let Some(j) = pairs.iter().position(|(_, f)| f.is_zero()) {
        return Err(SyzygyError::ZeroInput(j));
    }
    let mut state = RewriteState::new(pairs);
    let mut steps = 0;
    while state.can_rewrite(module) {
        state = rewrite_step(module, &state)?;
        steps += 1;
    }
    let f_list = state
        .pairs
        .iter()
        .map(|(_, f)| f.clone())
        .filter(|f| !f.is_zero())
        .collect();
    Ok(RewriteOutcome {
        steps,
        state,
        f_list,
    })
}
