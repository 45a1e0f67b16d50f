//! Oracles for cross-checking `syzcalc-core`.
//!
//! Nothing here calls the kernel's division, syzygy or completion code.
//! Arithmetic runs on plain `BTreeMap`s keyed by exponent vectors, using only
//! the ring's elementwise `add` and `mul`. Kernel types appear only at the
//! boundary so tests can feed outputs straight in.

pub mod brute;
pub mod contracts;
pub mod field;
pub mod membership;
pub mod random;

use std::collections::BTreeMap;

use syzcalc_core::polynomials::{PolyVector, Term};
use syzcalc_core::rings::Ring;
use syzcalc_core::syzygies::SyzygyVector;

pub use brute::{brute_force_syzygies, in_term_syzygy_span, BruteForceError, DEFAULT_ENUMERATION_CAP};
pub use field::{field_buchberger_oracle, field_reduce, OracleOrder, QPoly};
pub use membership::IdealOracle;
pub use random::{InstanceBounds, RandomInstanceSpec};

/// A module element as `(position, exponents) -> coefficient`, zeros absent.
pub type Sparse<E> = BTreeMap<(usize, Vec<u32>), E>;

pub fn to_sparse<R: Ring>(ring: &R, u: &PolyVector<R::Elem>) -> Sparse<R::Elem> {
    let mut out = Sparse::new();
    for t in u.terms() {
        accumulate(ring, &mut out, key(t), t.coeff.clone());
    }
    out
}

fn key<E>(t: &Term<E>) -> (usize, Vec<u32>) {
    (t.monomial.position, t.monomial.monomial.exponents().to_vec())
}

fn accumulate<R: Ring>(ring: &R, acc: &mut Sparse<R::Elem>, k: (usize, Vec<u32>), c: R::Elem) {
    let sum = match acc.remove(&k) {
        Some(old) => ring.add(&old, &c),
        None => c,
    };
    if !ring.is_zero(&sum) {
        acc.insert(k, sum);
    }
}

/// `Σ_j v_j f_j`, computed term by term.
pub fn oracle_dot<R: Ring>(ring: &R, v: &[PolyVector<R::Elem>], fs: &[PolyVector<R::Elem>]) -> Sparse<R::Elem> {
    let mut acc = Sparse::new();
    for (vj, fj) in v.iter().zip(fs) {
        for a in vj.terms() {
            let ea = a.monomial.monomial.exponents();
            for b in fj.terms() {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(b.monomial.monomial.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                accumulate(ring, &mut acc, (b.monomial.position, exps), ring.mul(&a.coeff, &b.coeff));
            }
        }
    }
    acc
}

/// Exact check of `Σ_j v_j f_j = 0`. Length mismatch counts as failure.
pub fn verify_syzygy<R: Ring>(ring: &R, v: &SyzygyVector<R::Elem>, fs: &[PolyVector<R::Elem>]) -> bool {
    v.entries.len() == fs.len() && oracle_dot(ring, &v.entries, fs).is_empty()
}

/// `Σ_j v_j f_j == u`, for substitution identities.
pub fn verify_combination<R: Ring>(
    ring: &R,
    v: &[PolyVector<R::Elem>],
    fs: &[PolyVector<R::Elem>],
    u: &PolyVector<R::Elem>,
) -> bool {
    v.len() == fs.len() && oracle_dot(ring, v, fs) == to_sparse(ring, u)
}
