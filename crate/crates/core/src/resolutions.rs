//! Schreyer's syzygy algorithm and finite free resolutions.
//!
//! Given a Gröbner basis `f_1, …, f_p`, each `S^E_i` of the leading terms
//! yields `u^E_i = S^E_i − (q_1, …, q_p)` where the `q_j` are the quotients
//! of `Σ_j S^E_{i,j} f_j` on division by the basis. The `u^E_i` form a
//! Gröbner basis of `Syz(f)` for the Schreyer order induced by `LM(f)`, and
//! `LT(u^E_i) = s^E_{i,r} · M^E/M_r · ε_r` with `r` the first index of `E`
//! where `s^E_i` is nonzero.
//!
//! Iterating, with the basis reordered before each step so that the next
//! variable drops out of the leading terms, gives a resolution of length
//! at most `n + 1`.

use alloc::vec::Vec;
use core::fmt;

use crate::division::divide;
use crate::groebner::{buchberger, GroebnerError, GroebnerOptions};
use crate::orders::ModuleOrder;
use crate::polynomials::{FreeModule, ModuleMonomial, PolyVector, Term};
use crate::rings::CoherentRing;
use crate::syzygies::{SyzygyError, SyzygyLabel, SyzygyVector};

/// One `u^E_i` with the data entering its leading-term formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerSyzygy<E> {
    /// `u^E_i` as an element of the Schreyer-ordered module.
    pub vector: PolyVector<E>,
    pub label: SyzygyLabel,
    /// `s^E_i`, indexed like `label.set`.
    pub coefficients: Vec<E>,
    /// `M^E`.
    pub lcm: ModuleMonomial,
}

#[derive(Clone, Debug)]
pub struct SchreyerOutput<R: CoherentRing> {
    /// `R[X]^p` with the Schreyer order induced by the basis.
    pub module: FreeModule<R>,
    pub syzygies: Vec<SchreyerSyzygy<R::Elem>>,
}

impl<R: CoherentRing> SchreyerOutput<R> {
    pub fn vectors(&self) -> Vec<PolyVector<R::Elem>> {
        self.syzygies.iter().map(|s| s.vector.clone()).collect()
    }
}

/// The leading term predicted for a Schreyer syzygy: `s_r · M^E/M_r · ε_r`
/// with `r = min{j ∈ E : s_j ≠ 0}`. `leading` holds `LM(f_1), …, LM(f_p)`.
pub fn predicted_leading_term<R: CoherentRing>(
    ring: &R,
    syzygy: &SchreyerSyzygy<R::Elem>,
    leading: &[ModuleMonomial],
) -> Term<R::Elem> {
    let (k, r) = syzygy
        .label
        .set
        .indices()
        .iter()
        .enumerate()
        .find(|(k, _)| !ring.is_zero(&syzygy.coefficients[*k]))
        .map(|(k, &r)| (k, r))
        .expect("syzygies of terms are nonzero");
    let shift = leading[r]
        .quotient_of(&syzygy.lcm)
        .expect("M^E is a multiple of M_r");
    Term::new(syzygy.coefficients[k].clone(), ModuleMonomial::new(shift, r))
}

#[derive(Clone, Debug)]
pub enum ResolutionError<R: CoherentRing> {
    Groebner(GroebnerError<R::Elem>),
    Syzygy(SyzygyError),
    /// A combination of the basis left this nonzero remainder.
    NotAGroebnerBasis { remainder: PolyVector<R::Elem> },
    StageLimitExceeded { partial: Resolution<R> },
    /// A stage still has the named (0-based) variable in a leading term.
    EliminationFailed { stage: usize, variable: usize },
    /// Consecutive maps do not compose to zero at this stage.
    CompositionNonzero { stage: usize },
    /// More than `n + 1` stages were needed.
    TooLong { length: usize },
}

impl<R: CoherentRing> fmt::Display for ResolutionError<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolutionError::Groebner(e) => write!(f, "{e}"),
            ResolutionError::Syzygy(e) => write!(f, "{e}"),
            ResolutionError::NotAGroebnerBasis { .. } => {
                f.write_str("input is not a Gröbner basis: an S-list item has a nonzero remainder")
            }
            ResolutionError::StageLimitExceeded { partial } => {
                write!(f, "resolution incomplete after {} stages", partial.stages.len())
            }
            ResolutionError::EliminationFailed { stage, variable } => write!(
                f,
                "variable {} survives in the leading terms of stage {stage}",
                variable + 1
            ),
            ResolutionError::CompositionNonzero { stage } => {
                write!(f, "maps into stage {stage} do not compose to zero")
            }
            ResolutionError::TooLong { length } => {
                write!(f, "resolution of length {length} exceeds n + 1")
            }
        }
    }
}

impl<R: CoherentRing> core::error::Error for ResolutionError<R> {}

impl<R: CoherentRing> From<GroebnerError<R::Elem>> for ResolutionError<R> {
    fn from(e: GroebnerError<R::Elem>) -> Self {
        ResolutionError::Groebner(e)
    }
}

impl<R: CoherentRing> From<SyzygyError> for ResolutionError<R> {
    fn from(e: SyzygyError) -> Self {
        ResolutionError::Syzygy(e)
    }
}

/// Schreyer's syzygy algorithm on a Gröbner basis `g` of a submodule of `module`.
pub fn schreyer_syzygies<R: CoherentRing>(
    module: &FreeModule<R>,
    g: &[PolyVector<R::Elem>],
    options: &GroebnerOptions<R>,
) -> Result<SchreyerOutput<R>, ResolutionError<R>> {
    let lts: Vec<Term<R::Elem>> = g
        .iter()
        .enumerate()
        .map(|(j, f)| f.leading_term().cloned().ok_or(SyzygyError::ZeroInput(j)))
        .collect::<Result<_, _>>()?;
    let leading: Vec<ModuleMonomial> = lts.iter().map(|t| t.monomial.clone()).collect();
    let target = module.with_order(
        g.len(),
        ModuleOrder::schreyer(module.order().clone(), leading),
    );
    let scalars = module.scalar_module();
    let mut syzygies = Vec::new();
    for level in (options.term_syzygies)(module, &lts, options.level_set_cap)? {
        for (s, coefficients) in level.vectors.into_iter().zip(level.coefficients) {
            let combo = module.dot(&s.entries, g);
            let d = divide(module, &combo, g).map_err(GroebnerError::from)?;
            if !d.remainder.is_zero() {
                return Err(ResolutionError::NotAGroebnerBasis {
                    remainder: d.remainder,
                });
            }
            let entries: Vec<_> = s
                .entries
                .iter()
                .zip(&d.quotients)
                .map(|(a, q)| scalars.sub(a, q))
                .collect();
            syzygies.push(SchreyerSyzygy {
                vector: target.from_components(&entries),
                label: s.label.expect("syzygies of terms are labelled"),
                coefficients,
                lcm: level.lcm.clone(),
            });
        }
    }
    Ok(SchreyerOutput {
        module: target,
        syzygies,
    })
}

/// Generators of `Syz(h_1, …, h_p)` for an arbitrary generating list.
///
/// The Schreyer syzygies of a Gröbner basis `G` are pulled back along the
/// provenance matrix `A` (`G = A·h`), and the relations `e_j − B_j·A` are
/// added, where `B_j` are the quotients of `h_j` on division by `G`.
/// Zero relations are dropped.
pub fn syzygies_of_generators<R: CoherentRing>(
    module: &FreeModule<R>,
    h: &[PolyVector<R::Elem>],
    options: &GroebnerOptions<R>,
) -> Result<Vec<SyzygyVector<R::Elem>>, ResolutionError<R>> {
    let (gb, _) = buchberger(module, h, options)?;
    let schreyer = schreyer_syzygies(module, &gb.elements, options)?;
    let scalars = module.scalar_module();
    let p = h.len();
    // Σ_k w_k · A[k], coordinatewise over h
    let pull_back = |w: &[PolyVector<R::Elem>]| -> Vec<PolyVector<R::Elem>> {
        (0..p)
            .map(|j| scalars.linear_combination(w.iter().zip(&gb.provenance).map(|(c, a)| (c, &a[j]))))
            .collect()
    };
    let mut out = Vec::new();
    for s in &schreyer.syzygies {
        let entries = pull_back(&schreyer.module.components(&s.vector));
        out.push(SyzygyVector {
            entries,
            label: Some(s.label.clone()),
        });
    }
    for (j, hj) in h.iter().enumerate() {
        let d = divide(module, hj, &gb.elements).map_err(GroebnerError::from)?;
        debug_assert!(d.remainder.is_zero());
        let back = pull_back(&d.quotients);
        let mut entries: Vec<_> = back.iter().map(|b| scalars.neg(b)).collect();
        entries[j] = scalars.add(&entries[j], &scalars.constant(module.ring().one()));
        out.push(SyzygyVector {
            entries,
            label: None,
        });
    }
    out.retain(|v| !v.is_zero());
    Ok(out)
}

/// Within each leading position, sorts by descending degree in `variable`
/// (stably), leaving the slots of each position where they were.
/// Returns the new list and, for each new slot, the old index.
pub fn reorder_for_elimination<E: Clone>(
    g: &[PolyVector<E>],
    variable: usize,
) -> (Vec<PolyVector<E>>, Vec<usize>) {
    let lm = |k: usize| g[k].leading_monomial().expect("basis elements are nonzero");
    let mut perm: Vec<usize> = (0..g.len()).collect();
    let mut positions: Vec<usize> = (0..g.len()).map(|k| lm(k).position).collect();
    positions.sort_unstable();
    positions.dedup();
    for pos in positions {
        let slots: Vec<usize> = (0..g.len()).filter(|&k| lm(k).position == pos).collect();
        let mut members = slots.clone();
        members.sort_by(|&a, &b| lm(b).monomial[variable].cmp(&lm(a).monomial[variable]));
        for (slot, m) in slots.into_iter().zip(members) {
            perm[slot] = m;
        }
    }
    (perm.iter().map(|&k| g[k].clone()).collect(), perm)
}

#[derive(Clone, Debug)]
pub struct ResolutionStage<R: CoherentRing> {
    /// `F_k`.
    pub module: FreeModule<R>,
    /// Generators of the image of `F_{k+1} → F_k` (for the last stage: of `V`).
    pub generators: Vec<PolyVector<R::Elem>>,
    /// Variable eliminated from the leading terms of `generators`.
    pub eliminated: Option<usize>,
    /// `generators[i]` was at index `permutation[i]` before reordering.
    pub permutation: Vec<usize>,
}

/// `0 → F_q/V → F_{q−1} → ⋯ → F_0 → H_m/U → 0`.
#[derive(Clone, Debug)]
pub struct Resolution<R: CoherentRing> {
    /// Stage `k` carries `F_k`; the last one carries the generators of `V`.
    pub stages: Vec<ResolutionStage<R>>,
}

impl<R: CoherentRing> Resolution<R> {
    /// `q`.
    pub fn length(&self) -> usize {
        self.stages.len() - 1
    }

    /// Ranks of `F_0, …, F_q`.
    pub fn ranks(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.module.rank()).collect()
    }

    /// Generators of `V ⊂ F_q`; empty when `V = 0`.
    pub fn v_generators(&self) -> &[PolyVector<R::Elem>] {
        &self.stages.last().expect("at least one stage").generators
    }
}

fn highest_variable<E>(g: &[PolyVector<E>]) -> Option<usize> {
    g.iter()
        .filter_map(|u| u.leading_monomial())
        .flat_map(|m| {
            m.monomial
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
        })
        .max()
}

/// Drops elements whose leading monomial involves an eliminated variable
/// and whose leading term is already in the leading-term module of the rest.
fn prune<R: CoherentRing>(
    module: &FreeModule<R>,
    g: Vec<PolyVector<R::Elem>>,
    eliminated: &[usize],
) -> Vec<PolyVector<R::Elem>> {
    let mut g = g;
    let mut k = 0;
    while k < g.len() {
        let lt = g[k].leading_term().expect("nonzero").clone();
        let involved = eliminated.iter().any(|&v| lt.monomial.monomial[v] > 0);
        if involved {
            let others: Vec<_> = g
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, u)| u.clone())
                .collect();
            if crate::division::lt_module_witness(module.ring(), &lt.coeff, &lt.monomial, &others).is_some() {
                g.remove(k);
                continue;
            }
        }
        k += 1;
    }
    g
}

/// Builds a free resolution of `H_m / ⟨generators⟩`.
pub fn free_resolution<R: CoherentRing>(
    module: &FreeModule<R>,
    generators: &[PolyVector<R::Elem>],
    max_stage: usize,
    options: &GroebnerOptions<R>,
) -> Result<Resolution<R>, ResolutionError<R>> {
    let n = module.nvars();
    let (gb, _) = buchberger(module, generators, options)?;
    let mut stages: Vec<ResolutionStage<R>> = Vec::new();
    let mut current_module = module.clone();
    let mut current = gb.elements;
    let mut eliminated: Vec<usize> = Vec::new();
    let mut last_var: Option<usize> = None;
    let mut last_perm: Vec<usize> = (0..current.len()).collect();
    loop {
        let k = stages.len();
        let var = highest_variable(&current);
        if k >= 1 && (current.is_empty() || var.is_none()) {
            stages.push(ResolutionStage {
                module: current_module,
                generators: current,
                eliminated: last_var,
                permutation: last_perm,
            });
            break;
        }
        if k >= max_stage {
            stages.push(ResolutionStage {
                module: current_module,
                generators: current,
                eliminated: last_var,
                permutation: last_perm,
            });
            return Err(ResolutionError::StageLimitExceeded {
                partial: Resolution { stages },
            });
        }
        let (ordered, perm) = match var {
            Some(v) => reorder_for_elimination(&current, v),
            None => (current.clone(), (0..current.len()).collect()),
        };
        let composed: Vec<usize> = perm.iter().map(|&i| last_perm[i]).collect();
        let schreyer = schreyer_syzygies(&current_module, &ordered, options)?;
        if let Some(v) = var {
            eliminated.push(v);
        }
        let next = prune(&schreyer.module, schreyer.vectors(), &eliminated);
        for u in &next {
            let coords = schreyer.module.components(u);
            if !current_module.dot(&coords, &ordered).is_zero() {
                return Err(ResolutionError::CompositionNonzero { stage: k + 1 });
            }
            let lm = u.leading_monomial().expect("nonzero");
            if let Some(&v) = eliminated.iter().find(|&&v| lm.monomial[v] > 0) {
                return Err(ResolutionError::EliminationFailed {
                    stage: k + 1,
                    variable: v,
                });
            }
        }
        stages.push(ResolutionStage {
            module: current_module,
            generators: ordered,
            eliminated: last_var,
            permutation: composed,
        });
        current_module = schreyer.module;
        current = next;
        last_var = var;
        last_perm = (0..current.len()).collect();
        if stages.len() > n + 1 {
            return Err(ResolutionError::TooLong {
                length: stages.len(),
            });
        }
    }
    Ok(Resolution { stages })
}

/// Each vector of `g` as coordinates over `ε_1, …, ε_p` with its level-set label.
pub fn as_syzygy_vectors<R: CoherentRing>(output: &SchreyerOutput<R>) -> Vec<SyzygyVector<R::Elem>> {
    output
        .syzygies
        .iter()
        .map(|s| SyzygyVector {
            entries: output.module.components(&s.vector),
            label: Some(s.label.clone()),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::MonomialOrder;
    use crate::polynomials::Monomial;
    use crate::rings::{IntegersMod, Rationals};
    use alloc::vec;
    use num_rational::BigRational;

    fn mm(e: &[u32], pos: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(e.to_vec()), pos)
    }

    fn example() -> (FreeModule<IntegersMod>, Vec<PolyVector<u64>>) {
        let h = FreeModule::new(IntegersMod::new(8), 2, 2, ModuleOrder::Top(MonomialOrder::grlex(2)));
        let g = vec![
            h.normalize(vec![Term::new(2, mm(&[2, 1], 0))]),
            h.normalize(vec![Term::new(1, mm(&[1, 2], 0))]),
            h.normalize(vec![Term::new(4, mm(&[1, 0], 1))]),
        ];
        (h, g)
    }

    #[test]
    fn schreyer_on_terms() {
        let (h, g) = example();
        let out = schreyer_syzygies(&h, &g, &GroebnerOptions::default()).unwrap();
        assert_eq!(out.syzygies.len(), 3);
        let leading: Vec<_> = g.iter().map(|f| f.leading_monomial().unwrap().clone()).collect();
        for s in &out.syzygies {
            assert_eq!(
                s.vector.leading_term().unwrap(),
                &predicted_leading_term(h.ring(), s, &leading)
            );
        }
        let pair = &out.syzygies[2];
        assert_eq!(pair.vector.leading_term().unwrap(), &Term::new(1, mm(&[0, 1], 0)));
    }

    #[test]
    fn koszul_relation() {
        let h = FreeModule::new(Rationals, 2, 1, ModuleOrder::Top(MonomialOrder::grlex(2)));
        let one = BigRational::from_integer(1.into());
        let g = vec![
            h.monomial_vector(one.clone(), Monomial::new(vec![1, 0]), 0),
            h.monomial_vector(one, Monomial::new(vec![0, 1]), 0),
        ];
        let out = schreyer_syzygies(&h, &g, &GroebnerOptions::default()).unwrap();
        assert_eq!(out.syzygies.len(), 1);
        let lm = out.syzygies[0].vector.leading_monomial().unwrap();
        assert_eq!(lm, &mm(&[0, 1], 0));
    }

    #[test]
    fn reorder_example() {
        let (_, g) = example();
        let (ordered, perm) = reorder_for_elimination(&g, 1);
        assert_eq!(perm, vec![1, 0, 2]);
        assert_eq!(ordered[0], g[1]);
    }

    #[test]
    fn resolution_of_maximal_ideal() {
        let h = FreeModule::new(Rationals, 2, 1, ModuleOrder::Top(MonomialOrder::grlex(2)));
        let one = BigRational::from_integer(1.into());
        let g = vec![
            h.monomial_vector(one.clone(), Monomial::new(vec![1, 0]), 0),
            h.monomial_vector(one, Monomial::new(vec![0, 1]), 0),
        ];
        let res = free_resolution(&h, &g, 8, &GroebnerOptions::default()).unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 1]);
        assert_eq!(res.length(), 2);
        assert!(res.v_generators().is_empty());
    }

    #[test]
    fn resolution_of_example_mod_eight() {
        let (h, g) = example();
        let res = free_resolution(&h, &g, 8, &GroebnerOptions::default()).unwrap();
        assert!(res.length() <= 3);
        assert_eq!(res.ranks(), vec![2, 3, 3]);
        assert_eq!(res.v_generators().len(), 3);
        for u in res.v_generators() {
            assert!(u.leading_monomial().unwrap().monomial.is_one());
        }
    }
}
