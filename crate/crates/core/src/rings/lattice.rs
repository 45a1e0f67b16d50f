//! Integer column echelon form with a unimodular transform.
//!
//! The same decomposition `A·U = H` answers both questions the integer
//! backends need: the trailing columns of `U` span the integer kernel of
//! `A`, and `H` is triangular enough to solve `A·x = b` by substitution.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended gcd with `g >= 0` and `a·x + b·y = g`.
///
/// When one argument divides the other the trivial cofactors are
/// returned, which keeps kernel vectors in the `(-b/g, a/g)` shape.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    if !a.is_zero() && b.is_multiple_of(a) {
        return (a.abs(), sign(a), BigInt::zero());
    }
    if !b.is_zero() && a.is_multiple_of(b) {
        return (b.abs(), BigInt::zero(), sign(b));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn sign(a: &BigInt) -> BigInt {
    if a.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// `A·U = H` with `U` unimodular and `H` in column echelon form.
///
/// Matrices are stored column-major: `h[c][r]`, `u[c][r]`.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    pivot_rows: Vec<usize>,
    rows: usize,
}

impl ColumnEchelon {
    /// Decomposes the `rows × columns.len()` matrix given by its columns.
    pub fn new(columns: Vec<Vec<BigInt>>, rows: usize) -> Self {
        let k = columns.len();
        let mut h = columns;
        debug_assert!(h.iter().all(|c| c.len() == rows));
        let mut u: Vec<Vec<BigInt>> = (0..k)
            .map(|c| {
                let mut col = vec![BigInt::zero(); k];
                col[c] = BigInt::one();
                col
            })
            .collect();
        let mut pivot_rows = Vec::new();
        let mut pc = 0;
        for row in 0..rows {
            if pc == k {
                break;
            }
            for j in pc + 1..k {
                if h[j][row].is_zero() {
                    continue;
                }
                if h[pc][row].is_zero() {
                    h.swap(pc, j);
                    u.swap(pc, j);
                    continue;
                }
                let a = h[pc][row].clone();
                let b = h[j][row].clone();
                let (g, x, y) = ext_gcd(&a, &b);
                let kb = -(&b / &g);
                let ka = &a / &g;
                combine(&mut h, pc, j, &x, &y, &kb, &ka);
                combine(&mut u, pc, j, &x, &y, &kb, &ka);
                debug_assert!(h[j][row].is_zero());
            }
            if !h[pc][row].is_zero() {
                if h[pc][row].is_negative() {
                    negate(&mut h[pc]);
                    negate(&mut u[pc]);
                }
                pivot_rows.push(row);
                pc += 1;
            }
        }
        ColumnEchelon {
            h,
            u,
            pivot_rows,
            rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// A basis of the integer kernel `{x : A·x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        self.u[self.rank()..].to_vec()
    }

    /// Some integer solution of `A·x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        debug_assert_eq!(b.len(), self.rows);
        let mut residual = b.to_vec();
        let mut y = Vec::with_capacity(self.rank());
        let mut next_pivot = 0;
        for row in 0..self.rows {
            if next_pivot < self.rank() && self.pivot_rows[next_pivot] == row {
                let col = &self.h[next_pivot];
                let (q, r) = residual[row].div_rem(&col[row]);
                if !r.is_zero() {
                    return None;
                }
                for (res, hv) in residual.iter_mut().zip(col).skip(row) {
                    *res -= &q * hv;
                }
                y.push(q);
                next_pivot += 1;
            } else if !residual[row].is_zero() {
                return None;
            }
        }
        let k = self.u.len();
        let mut x = vec![BigInt::zero(); k];
        for (coef, col) in y.iter().zip(&self.u) {
            if coef.is_zero() {
                continue;
            }
            for (xi, ui) in x.iter_mut().zip(col) {
                *xi += coef * ui;
            }
        }
        Some(x)
    }
}

// (col_p, col_j) <- (x·col_p + y·col_j, kb·col_p + ka·col_j)
fn combine(
    m: &mut [Vec<BigInt>],
    p: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    kb: &BigInt,
    ka: &BigInt,
) {
    let (left, right) = m.split_at_mut(j);
    let cp = &mut left[p];
    let cj = &mut right[0];
    for (vp, vj) in cp.iter_mut().zip(cj.iter_mut()) {
        let np = x * &*vp + y * &*vj;
        let nj = kb * &*vp + ka * &*vj;
        *vp = np;
        *vj = nj;
    }
}

fn negate(col: &mut [BigInt]) {
    for v in col {
        *v = -core::mem::take(v);
    }
}
