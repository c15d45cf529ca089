use serde::Serialize;

use crate::error::{Error, Result};

/// A 2×2 integer matrix, row-major: `m[row][col]`.
pub type Matrix2 = [[i64; 2]; 2];

/// `u · m · v = diag(d[0], d[1])` with `u`, `v` unimodular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Snf {
    pub u: Matrix2,
    pub d: [i64; 2],
    pub v: Matrix2,
}

pub fn det(m: &Matrix2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn matmul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut c = [[0; 2]; 2];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn apply(m: &Matrix2, w: [i64; 2]) -> [i64; 2] {
    [m[0][0] * w[0] + m[0][1] * w[1], m[1][0] * w[0] + m[1][1] * w[1]]
}

/// Inverse of a unimodular matrix.
pub fn inverse_unimodular(m: &Matrix2) -> Option<Matrix2> {
    let d = det(m);
    if d.abs() != 1 {
        return None;
    }
    Some([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]])
}

const I: Matrix2 = [[1, 0], [0, 1]];

fn swap_rows(m: &mut Matrix2) {
    m.swap(0, 1);
}

fn swap_cols(m: &mut Matrix2) {
    for row in m.iter_mut() {
        row.swap(0, 1);
    }
}

/// row[dst] -= q * row[src]
fn row_op(m: &mut Matrix2, dst: usize, src: usize, q: i64) {
    for c in 0..2 {
        m[dst][c] -= q * m[src][c];
    }
}

/// col[dst] -= q * col[src]
fn col_op(m: &mut Matrix2, dst: usize, src: usize, q: i64) {
    for row in m.iter_mut() {
        row[dst] -= q * row[src];
    }
}

/// Smith normal form of a nonsingular 2×2 integer matrix.
pub fn smith_normal_form(m: &Matrix2) -> Result<Snf> {
    if det(m) == 0 {
        return Err(Error::InvalidArgument(format!("matrix {m:?} is singular")));
    }
    let (mut a, mut u, mut v) = (*m, I, I);
    loop {
        // Bring the entry of least absolute value to the pivot.
        let (mut bi, mut bj) = (0, 0);
        for i in 0..2 {
            for j in 0..2 {
                let x = a[i][j];
                if x != 0 && (a[bi][bj] == 0 || x.abs() < a[bi][bj].abs()) {
                    (bi, bj) = (i, j);
                }
            }
        }
        if bi == 1 {
            swap_rows(&mut a);
            swap_rows(&mut u);
        }
        if bj == 1 {
            swap_cols(&mut a);
            swap_cols(&mut v);
        }
        let p = a[0][0];
        let q_row = a[1][0].div_euclid(p);
        row_op(&mut a, 1, 0, q_row);
        row_op(&mut u, 1, 0, q_row);
        let q_col = a[0][1].div_euclid(p);
        col_op(&mut a, 1, 0, q_col);
        col_op(&mut v, 1, 0, q_col);
        if a[1][0] != 0 || a[0][1] != 0 {
            continue;
        }
        if a[1][1] % a[0][0] != 0 {
            // Fold the second row into the first and reduce again.
            row_op(&mut a, 0, 1, -1);
            row_op(&mut u, 0, 1, -1);
            continue;
        }
        break;
    }
    for i in 0..2 {
        if a[i][i] < 0 {
            for c in 0..2 {
                a[i][c] = -a[i][c];
                u[i][c] = -u[i][c];
            }
        }
    }
    Ok(Snf { u, d: [a[0][0], a[1][1]], v })
}
