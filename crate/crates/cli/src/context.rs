//! What a polynomial string means: ring, variables, rank, orders.

use std::fmt;

use syzcalc_core::orders::{BaseOrderKind, ModuleOrder, MonomialOrder};
use syzcalc_core::polynomials::FreeModule;
use syzcalc_core::rings::{CoherentRing, RingDescriptor, StrictBezout};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    Top,
    Pot,
}

/// Name of the free basis: `e` for the ambient module, `s` for syzygies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    E,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::S => 's',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyContext {
    pub ring: RingDescriptor,
    pub vars: Vec<String>,
    pub rank: usize,
    pub order: BaseOrderKind,
    pub module_order: ModuleOrderKind,
    pub basis: Basis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContextError(pub String);

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ContextError {}

pub fn parse_ring(text: &str) -> Result<RingDescriptor, ContextError> {
    let t = text.trim();
    match t {
        "ZZ" | "Z" => Ok(RingDescriptor::Integers),
        "QQ" | "Q" => Ok(RingDescriptor::Rationals),
        _ => {
            let n = t
                .strip_prefix("ZZ/")
                .or_else(|| t.strip_prefix("Z/"))
                .and_then(|n| n.trim().parse::<u64>().ok())
                .ok_or_else(|| ContextError(format!("unknown ring `{t}` (expected ZZ, QQ or ZZ/n)")))?;
            if n < 2 {
                return Err(ContextError(format!("modulus must be at least 2, got {n}")));
            }
            Ok(RingDescriptor::IntegersMod(n))
        }
    }
}

pub fn parse_order(text: &str) -> Result<BaseOrderKind, ContextError> {
    match text.trim() {
        "lex" => Ok(BaseOrderKind::Lex),
        "grlex" => Ok(BaseOrderKind::Grlex),
        "grevlex" => Ok(BaseOrderKind::Grevlex),
        t => Err(ContextError(format!("unknown order `{t}` (expected lex, grlex or grevlex)"))),
    }
}

pub fn order_name(k: BaseOrderKind) -> &'static str {
    match k {
        BaseOrderKind::Lex => "lex",
        BaseOrderKind::Grlex => "grlex",
        BaseOrderKind::Grevlex => "grevlex",
    }
}

pub fn parse_module_order(text: &str) -> Result<ModuleOrderKind, ContextError> {
    match text.trim() {
        "top" => Ok(ModuleOrderKind::Top),
        "pot" => Ok(ModuleOrderKind::Pot),
        t => Err(ContextError(format!("unknown module order `{t}` (expected top or pot)"))),
    }
}

pub fn module_order_name(k: ModuleOrderKind) -> &'static str {
    match k {
        ModuleOrderKind::Top => "top",
        ModuleOrderKind::Pot => "pot",
    }
}

fn valid_var(v: &str) -> bool {
    let mut cs = v.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `e3`, `s12` and the like.
pub fn is_basis_name(v: &str) -> bool {
    let mut cs = v.chars();
    matches!(cs.next(), Some('e' | 's')) && v.len() > 1 && cs.all(|c| c.is_ascii_digit())
}

/// `x, y , z` into names, rejecting duplicates and non-identifiers.
pub fn parse_vars(text: &str) -> Result<Vec<String>, ContextError> {
    let mut out: Vec<String> = Vec::new();
    for v in text.split(',').map(str::trim).filter(|v| !v.is_empty()) {
        if !valid_var(v) {
            return Err(ContextError(format!("`{v}` is not a valid variable name")));
        }
        if is_basis_name(v) {
            return Err(ContextError(format!("`{v}` is reserved for basis vectors")));
        }
        if out.iter().any(|w| w == v) {
            return Err(ContextError(format!("variable `{v}` listed twice")));
        }
        out.push(v.to_string());
    }
    Ok(out)
}

impl PolyContext {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn module_order(&self) -> ModuleOrder {
        let base = MonomialOrder::new(self.order, self.nvars());
        match self.module_order {
            ModuleOrderKind::Top => ModuleOrder::Top(base),
            ModuleOrderKind::Pot => ModuleOrder::Pot(base),
        }
    }

    pub fn module<R: Backend>(&self, ring: R) -> FreeModule<R> {
        FreeModule::new(ring, self.nvars(), self.rank, self.module_order())
    }

    /// The same variables and orders over a free module of another rank and basis.
    pub fn with_rank(&self, rank: usize, basis: Basis) -> PolyContext {
        PolyContext {
            rank,
            basis,
            ..self.clone()
        }
    }
}

/// The rings the CLI can drive.
pub trait Backend: CoherentRing + StrictBezout {}

impl<R: CoherentRing + StrictBezout> Backend for R {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings() {
        assert_eq!(parse_ring("ZZ/8").unwrap(), RingDescriptor::IntegersMod(8));
        assert_eq!(parse_ring(" QQ ").unwrap(), RingDescriptor::Rationals);
        assert!(parse_ring("ZZ/1").is_err());
        assert!(parse_ring("GF(4)").is_err());
    }

    #[test]
    fn vars() {
        assert_eq!(parse_vars("x, y,z").unwrap(), ["x", "y", "z"]);
        assert!(parse_vars("x,x").is_err());
        assert!(parse_vars("2x").is_err());
        assert!(parse_vars("x,e2").is_err());
        assert!(parse_vars("e,s").is_ok());
        assert!(parse_vars("").unwrap().is_empty());
    }
}
