//! Smith normal form over the integers.
//!
//! For any integer matrix `M` this finds unimodular `U`, `V` with `U·M·V = D`,
//! where `D` is diagonal with nonnegative entries `d₁ | d₂ | … | d_r` followed
//! by zeros. The nonnegative divisibility-chain `D` is unique; `U` and `V` are not.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Result of [`smith_normal_form`]: `left · input · right = diagonal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntegerMatrix,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// The diagonal entries of `D`, including trailing zeros.
    pub fn invariants(&self) -> Vec<BigInt> {
        self.diagonal.diagonal_entries()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            if clear_column(&mut d, &mut u, t) && clear_row(&mut d, &mut v, t) {
                match find_non_multiple(&d, t) {
                    Some(i) => {
                        // Pull the offending row into the pivot row and retry.
                        let one = BigInt::from(1);
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                    None => break,
                }
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm {
        diagonal: d,
        left: u,
        right: v,
    }
}

fn min_abs_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Reduces entries below the pivot. Returns true when the column below the
/// pivot is already zero (nothing left to do), false if work was done.
fn clear_column(d: &mut IntegerMatrix, u: &mut IntegerMatrix, t: usize) -> bool {
    let mut clean = true;
    loop {
        let mut smallest: Option<usize> = None;
        for i in t + 1..d.rows() {
            if d[(i, t)].is_zero() {
                continue;
            }
            clean = false;
            let q = -d[(i, t)].div_floor(&d[(t, t)]);
            d.add_row_multiple(i, t, &q);
            u.add_row_multiple(i, t, &q);
            if !d[(i, t)].is_zero() && smallest.is_none_or(|s| d[(i, t)].abs() < d[(s, t)].abs()) {
                smallest = Some(i);
            }
        }
        match smallest {
            // A remainder is smaller than the pivot: make it the pivot.
            Some(i) => {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
            }
            None => return clean,
        }
    }
}

fn clear_row(d: &mut IntegerMatrix, v: &mut IntegerMatrix, t: usize) -> bool {
    let mut clean = true;
    loop {
        let mut smallest: Option<usize> = None;
        for j in t + 1..d.cols() {
            if d[(t, j)].is_zero() {
                continue;
            }
            clean = false;
            let q = -d[(t, j)].div_floor(&d[(t, t)]);
            d.add_col_multiple(j, t, &q);
            v.add_col_multiple(j, t, &q);
            if !d[(t, j)].is_zero() && smallest.is_none_or(|s| d[(t, j)].abs() < d[(t, s)].abs()) {
                smallest = Some(j);
            }
        }
        match smallest {
            Some(j) => {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
            }
            None => return clean,
        }
    }
}

fn find_non_multiple(d: &IntegerMatrix, t: usize) -> Option<usize> {
    let p = &d[(t, t)];
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(p)))
}
