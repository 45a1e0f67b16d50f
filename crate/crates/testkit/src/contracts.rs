//! Checkers for the postconditions of kernel routines.
//!
//! Identities are checked with the oracle arithmetic of this crate and
//! coefficient membership with [`IdealOracle`]. Each checker returns a
//! description of the first violation it finds.

use std::cmp::Ordering;

use syzcalc_core::division::{divide, DivisionResult};
use syzcalc_core::groebner::{buchberger_criterion, Criterion, GroebnerBasis, GroebnerOptions};
use syzcalc_core::polynomials::{FreeModule, ModuleMonomial, PolyVector};
use syzcalc_core::resolutions::{predicted_leading_term, Resolution, SchreyerOutput};
use syzcalc_core::rings::{CoherentRing, Ring};

use crate::{accumulate, oracle_dot, to_sparse, IdealOracle, Sparse};

fn add_sparse<R: Ring>(ring: &R, mut a: Sparse<R::Elem>, b: &Sparse<R::Elem>) -> Sparse<R::Elem> {
    for (k, c) in b {
        accumulate(ring, &mut a, k.clone(), c.clone());
    }
    a
}

/// Reconstruction `u = Σ q_j h_j + r`, the bound `LM(q_j)LM(h_j) ≤ LM(u)`,
/// and that no term of `r` lies in the leading-term module of the `h_j`.
pub fn check_division<R: IdealOracle>(
    module: &FreeModule<R>,
    u: &PolyVector<R::Elem>,
    divisors: &[PolyVector<R::Elem>],
    d: &DivisionResult<R::Elem>,
) -> Result<(), String> {
    let ring = module.ring();
    if d.quotients.len() != divisors.len() {
        return Err(format!("{} quotients for {} divisors", d.quotients.len(), divisors.len()));
    }
    let rebuilt = add_sparse(ring, oracle_dot(ring, &d.quotients, divisors), &to_sparse(ring, &d.remainder));
    if rebuilt != to_sparse(ring, u) {
        return Err("u != Σ q_j h_j + r".into());
    }
    for (j, (q, h)) in d.quotients.iter().zip(divisors).enumerate() {
        let (Some(lq), Some(lh)) = (q.leading_monomial(), h.leading_monomial()) else {
            continue;
        };
        let product = lh.times(&lq.monomial);
        match u.leading_monomial() {
            Some(lu) if module.compare(&product, lu) != Ordering::Greater => {}
            _ => return Err(format!("LM(q_{0})·LM(h_{0}) exceeds LM(u)", j + 1)),
        }
    }
    for t in d.remainder.terms() {
        let lcs: Vec<R::Elem> = divisors
            .iter()
            .filter_map(|h| h.leading_term())
            .filter(|lt| lt.monomial.divides(&t.monomial))
            .map(|lt| lt.coeff.clone())
            .collect();
        if ring.oracle_member(&t.coeff, &lcs) {
            return Err(format!("remainder term with coefficient {} is reducible", t.coeff));
        }
    }
    Ok(())
}

/// The criterion holds for `gb`, every input divides to zero, and the
/// provenance reproduces every element from the inputs.
pub fn check_groebner<R: CoherentRing + IdealOracle>(
    module: &FreeModule<R>,
    inputs: &[PolyVector<R::Elem>],
    gb: &GroebnerBasis<R::Elem>,
    options: &GroebnerOptions<R>,
) -> Result<(), String> {
    let ring = module.ring();
    match buchberger_criterion(module, &gb.elements, options) {
        Ok(Criterion::Holds) => {}
        Ok(Criterion::Fails { label, .. }) => return Err(format!("criterion fails at {label:?}")),
        Err(e) => return Err(format!("criterion errored: {e}")),
    }
    for (j, f) in inputs.iter().enumerate() {
        let d = divide(module, f, &gb.elements).map_err(|e| format!("division errored: {e:?}"))?;
        check_division(module, f, &gb.elements, &d)?;
        if !d.remainder.is_zero() {
            return Err(format!("input {} has a nonzero remainder", j + 1));
        }
    }
    for (k, (g, prov)) in gb.elements.iter().zip(&gb.provenance).enumerate() {
        if oracle_dot(ring, prov, inputs) != to_sparse(ring, g) {
            return Err(format!("provenance of element {} is wrong", k + 1));
        }
    }
    Ok(())
}

/// `LT(u^E_i) = s^E_{i,r} M^E/M_r ε_r` in the Schreyer order, and each
/// `u^E_i` is a syzygy of `g`.
pub fn check_schreyer<R: CoherentRing>(
    out: &SchreyerOutput<R>,
    g: &[PolyVector<R::Elem>],
) -> Result<(), String> {
    let ring = out.module.ring();
    let leading: Vec<ModuleMonomial> = g
        .iter()
        .map(|f| f.leading_monomial().cloned().ok_or("zero basis element"))
        .collect::<Result<_, _>>()?;
    for s in &out.syzygies {
        let predicted = predicted_leading_term(ring, s, &leading);
        if s.vector.leading_term() != Some(&predicted) {
            return Err(format!("LT of {} differs from the prediction", s.label));
        }
        if !oracle_dot(ring, &out.module.components(&s.vector), g).is_empty() {
            return Err(format!("{} is not a syzygy", s.label));
        }
    }
    Ok(())
}

/// Consecutive maps compose to zero and no eliminated variable survives in
/// the leading monomials of later stages. Returns the eliminated variables.
pub fn check_resolution<R: CoherentRing>(res: &Resolution<R>) -> Result<Vec<usize>, String> {
    let mut eliminated = Vec::new();
    for k in 1..res.stages.len() {
        let prev = &res.stages[k - 1];
        let stage = &res.stages[k];
        if stage.module.rank() != prev.generators.len() {
            return Err(format!("stage {k} has rank {} but maps onto {} generators", stage.module.rank(), prev.generators.len()));
        }
        if let Some(v) = stage.eliminated {
            eliminated.push(v);
        }
        let ring = stage.module.ring();
        for (i, u) in stage.generators.iter().enumerate() {
            let coords = stage.module.components(u);
            if !oracle_dot(ring, &coords, &prev.generators).is_empty() {
                return Err(format!("generator {} of stage {k} does not map to zero", i + 1));
            }
            let lm = u.leading_monomial().ok_or(format!("zero generator in stage {k}"))?;
            if let Some(v) = eliminated.iter().find(|&&v| lm.monomial[v] > 0) {
                return Err(format!("variable {} survives in stage {k}", v + 1));
            }
        }
    }
    Ok(eliminated)
}
