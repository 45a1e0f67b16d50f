//! Monomial orders on `R[X]` and their extensions to free modules.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::polynomials::{ModuleMonomial, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrderKind {
    Lex,
    Grlex,
    Grevlex,
}

/// A monomial order on `R[X_1, …, X_n]`.
///
/// `priority[0]` is the index of the most significant variable; the default
/// priority `0, 1, …, n-1` makes `X_1 > X_2 > … > X_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: BaseOrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: BaseOrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    /// # Panics
    /// If `priority` is not a permutation of `0..priority.len()`.
    pub fn with_priority(kind: BaseOrderKind, priority: Vec<usize>) -> Self {
        let mut seen = alloc::vec![false; priority.len()];
        for &p in &priority {
            assert!(p < seen.len() && !seen[p], "variable priority is not a permutation");
            seen[p] = true;
        }
        MonomialOrder { kind, priority }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(BaseOrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(BaseOrderKind::Grlex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(BaseOrderKind::Grevlex, nvars)
    }

    pub fn kind(&self) -> BaseOrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let lex = || {
            self.priority
                .iter()
                .map(|&v| a[v].cmp(&b[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            BaseOrderKind::Lex => lex(),
            BaseOrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(lex),
            BaseOrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                self.priority
                    .iter()
                    .rev()
                    .map(|&v| b[v].cmp(&a[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}

/// Schreyer's order on `R[X]^p` induced by an order on the target module
/// and the leading monomials `LM(f_1), …, LM(f_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchreyerOrder {
    pub target: ModuleOrder,
    pub leading: Vec<ModuleMonomial>,
}

/// A monomial order on a free module `R[X]^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Term over position.
    Top(MonomialOrder),
    /// Position over term.
    Pot(MonomialOrder),
    Schreyer(Arc<SchreyerOrder>),
}

impl ModuleOrder {
    pub fn schreyer(target: ModuleOrder, leading: Vec<ModuleMonomial>) -> Self {
        ModuleOrder::Schreyer(Arc::new(SchreyerOrder { target, leading }))
    }

    /// The underlying order on ring monomials.
    pub fn base(&self) -> &MonomialOrder {
        match self {
            ModuleOrder::Top(o) | ModuleOrder::Pot(o) => o,
            ModuleOrder::Schreyer(s) => s.target.base(),
        }
    }

    /// `Greater` means `a > b`. Lower positions win ties under TOP and
    /// come first under POT.
    pub fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        match self {
            ModuleOrder::Top(o) => o
                .compare(&a.monomial, &b.monomial)
                .then_with(|| b.position.cmp(&a.position)),
            ModuleOrder::Pot(o) => b
                .position
                .cmp(&a.position)
                .then_with(|| o.compare(&a.monomial, &b.monomial)),
            ModuleOrder::Schreyer(s) => {
                let la = s.leading[a.position].times(&a.monomial);
                let lb = s.leading[b.position].times(&b.monomial);
                s.target
                    .compare(&la, &lb)
                    .then_with(|| b.position.cmp(&a.position))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mm(e: &[u32], pos: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(e.to_vec()), pos)
    }

    #[test]
    fn top_with_second_variable_first() {
        // X2 > X1
        let o = ModuleOrder::Top(MonomialOrder::with_priority(BaseOrderKind::Lex, vec![1, 0]));
        assert_eq!(o.compare(&mm(&[0, 1], 0), &mm(&[0, 1], 1)), Ordering::Greater);
        assert_eq!(o.compare(&mm(&[0, 1], 1), &mm(&[1, 0], 0)), Ordering::Greater);
    }

    #[test]
    fn pot_with_second_variable_first() {
        let o = ModuleOrder::Pot(MonomialOrder::with_priority(BaseOrderKind::Lex, vec![1, 0]));
        assert_eq!(o.compare(&mm(&[1, 0], 0), &mm(&[0, 1], 1)), Ordering::Greater);
        assert_eq!(o.compare(&mm(&[1, 0], 0), &mm(&[1, 0], 0)), Ordering::Equal);
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::grevlex(3);
        // x*z^2 vs y^3: same degree; last variable z: 2 vs 0, so y^3 is larger
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![0, 3, 0]);
        assert_eq!(o.compare(&a, &b), Ordering::Less);
        let g = MonomialOrder::grlex(3);
        assert_eq!(g.compare(&a, &b), Ordering::Greater);
    }

    #[test]
    fn schreyer_ties_favour_lower_index() {
        // leading monomials of (2X^2Y, 0), (XY^2, 0), (0, 4X)
        let target = ModuleOrder::Top(MonomialOrder::grlex(2));
        let s = ModuleOrder::schreyer(target, vec![mm(&[2, 1], 0), mm(&[1, 2], 0), mm(&[1, 0], 1)]);
        assert_eq!(s.compare(&mm(&[0, 1], 0), &mm(&[1, 0], 1)), Ordering::Greater);
        assert_eq!(s.compare(&mm(&[0, 0], 2), &mm(&[0, 0], 2)), Ordering::Equal);
        assert_eq!(s.compare(&mm(&[0, 0], 2), &mm(&[0, 0], 0)), Ordering::Less);
    }
}
