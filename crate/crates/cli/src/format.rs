//! Canonical text for vectors.
//!
//! Terms appear in the order the vector is stored in, which is the active
//! order of its module. A coefficient of 1 is dropped unless the term is a
//! bare constant. Exponents of 1 are dropped. The basis factor (`e3`, `s2`)
//! is written only when the rank exceeds 1. Factors are joined by `*`, terms
//! by ` + ` or ` - `, and the zero vector is `0`.

use std::fmt::Display;
use std::fmt::Write as _;

use syzcalc_core::polynomials::{ModuleMonomial, PolyVector, Term};

use crate::context::PolyContext;

pub fn format_monomial(m: &ModuleMonomial, ctx: &PolyContext) -> Vec<String> {
    let mut parts = Vec::new();
    for (v, &e) in ctx.vars.iter().zip(m.monomial.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    if ctx.rank > 1 {
        parts.push(format!("{}{}", ctx.basis.letter(), m.position + 1));
    }
    parts
}

/// The term without its sign, and whether it was negative.
fn unsigned_term<E: Display>(t: &Term<E>, ctx: &PolyContext) -> (bool, String) {
    let c = t.coeff.to_string();
    let (negative, magnitude) = match c.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, c),
    };
    let mut parts = format_monomial(&t.monomial, ctx);
    if magnitude != "1" || parts.is_empty() {
        parts.insert(0, magnitude);
    }
    (negative, parts.join("*"))
}

pub fn format_term<E: Display>(t: &Term<E>, ctx: &PolyContext) -> String {
    let (negative, body) = unsigned_term(t, ctx);
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

pub fn format_polynomial<E: Display>(u: &PolyVector<E>, ctx: &PolyContext) -> String {
    let mut out = String::new();
    for (k, t) in u.terms().iter().enumerate() {
        let (negative, body) = unsigned_term(t, ctx);
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let _ = write!(out, "{body}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
