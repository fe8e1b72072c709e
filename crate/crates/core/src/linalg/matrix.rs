use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::int::Int;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::default(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == &BigInt::default() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k] == BigInt::default() {
                match (k + 1..n).find(|&i| a[i][k] != BigInt::default()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::default(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        a[n - 1][n - 1].clone() * sign
    }

    pub(crate) fn to_int_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Int::from).collect())
            .collect()
    }

    pub(crate) fn from_int_rows(cols: usize, rows: Vec<Vec<Int>>) -> IntMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            entries.extend(r.into_iter().map(BigInt::from));
        }
        IntMatrix { rows: n, cols, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn row_sub_mul(rows: &mut [Vec<Int>], target: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x = x.sub_mul(q, y);
        }
    }
}

fn negate_row(row: &mut [Int]) {
    for x in row.iter_mut() {
        *x = x.neg();
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * M = H`. `H` is in row echelon form with positive pivots, entries
/// above each pivot reduced into `[0, pivot)`, zero rows at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a = m.to_int_rows();
    let mut u: Vec<Vec<Int>> = (0..nr)
        .map(|i| (0..nr).map(|j| if i == j { Int::ONE } else { Int::ZERO }).collect())
        .collect();

    let mut row = 0;
    for col in 0..nc {
        if row == nr {
            break;
        }
        loop {
            let pick = (row..nr)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].cmp_abs(&a[j][col]));
            let Some(p) = pick else { break };
            a.swap(row, p);
            u.swap(row, p);
            let mut clean = true;
            for i in row + 1..nr {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[row][col]);
                row_sub_mul(&mut a, i, row, &q);
                row_sub_mul(&mut u, i, row, &q);
                if !a[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            negate_row(&mut a[row]);
            negate_row(&mut u[row]);
        }
        for i in 0..row {
            let q = a[i][col].div_floor(&a[row][col]);
            row_sub_mul(&mut a, i, row, &q);
            row_sub_mul(&mut u, i, row, &q);
        }
        row += 1;
    }
    (IntMatrix::from_int_rows(nc, a), IntMatrix::from_int_rows(nr, u))
}

/// Diagonalization `P * M * Q = D` by unimodular `P`, `Q`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub p: IntMatrix,
    pub d: IntMatrix,
    pub q: IntMatrix,
    /// Nonzero diagonal entries of `D`, forming a divisibility chain.
    pub diagonal: Vec<BigInt>,
}

/// Invariant factors of `m`: the nonzero diagonal of its Smith normal form,
/// unit entries included.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.to_int_rows();
    snf_in_place(&mut a, m.cols(), None)
        .into_iter()
        .map(BigInt::from)
        .collect()
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a = m.to_int_rows();
    let mut p = IntMatrix::identity(nr).to_int_rows();
    let mut q = IntMatrix::identity(nc).to_int_rows();
    let diag = snf_in_place(&mut a, nc, Some((&mut p, &mut q)));
    SmithDecomposition {
        p: IntMatrix::from_int_rows(nr, p),
        d: IntMatrix::from_int_rows(nc, a),
        q: IntMatrix::from_int_rows(nc, q),
        diagonal: diag.into_iter().map(BigInt::from).collect(),
    }
}

/// Column operations are applied to `q` as row operations on its
/// transpose would be, so `q` is kept column-major-by-rows: `q[i][j]`.
fn col_sub_mul(a: &mut [Vec<Int>], target: usize, src: usize, qv: &Int) {
    if qv.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            row[target] = row[target].sub_mul(qv, &row[src]);
        }
    }
}

fn swap_cols(a: &mut [Vec<Int>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// In-place Smith normal form on a dense matrix with `nc` columns.
pub(crate) fn snf_in_place(
    a: &mut [Vec<Int>],
    nc: usize,
    mut transforms: Option<(&mut Vec<Vec<Int>>, &mut Vec<Vec<Int>>)>,
) -> Vec<Int> {
    let nr = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if a[i][j].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].cmp_abs(&a[bi][bj]).is_lt()) {
                    best = Some((i, j));
                    if a[i][j].cmp_abs(&Int::ONE).is_eq() {
                        break;
                    }
                }
            }
            if let Some((bi, bj)) = best {
                if a[bi][bj].cmp_abs(&Int::ONE).is_eq() {
                    break;
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        move_pivot(a, &mut transforms, t, pi, pj);

        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_sub_mul(a, i, t, &q);
                if let Some((p, _)) = transforms.as_mut() {
                    row_sub_mul(p, i, t, &q);
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_sub_mul(a, j, t, &q);
                if let Some((_, qm)) = transforms.as_mut() {
                    col_sub_mul(qm, j, t, &q);
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a smaller remainder appeared in row t or column t
                let mut best = (t, t);
                for i in t + 1..nr {
                    if !a[i][t].is_zero() && a[i][t].cmp_abs(&a[best.0][best.1]).is_lt() {
                        best = (i, t);
                    }
                }
                for j in t + 1..nc {
                    if !a[t][j].is_zero() && a[t][j].cmp_abs(&a[best.0][best.1]).is_lt() {
                        best = (t, j);
                    }
                }
                move_pivot(a, &mut transforms, t, best.0, best.1);
                continue;
            }
            let pivot = a[t][t].clone();
            let offender = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !pivot.divides(&a[i][j])));
            match offender {
                Some(i) => {
                    row_sub_mul(a, t, i, &Int::from(-1));
                    if let Some((p, _)) = transforms.as_mut() {
                        row_sub_mul(p, t, i, &Int::from(-1));
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            negate_row(&mut a[t]);
            if let Some((p, _)) = transforms.as_mut() {
                negate_row(&mut p[t]);
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    diag
}

fn move_pivot(
    a: &mut [Vec<Int>],
    transforms: &mut Option<(&mut Vec<Vec<Int>>, &mut Vec<Vec<Int>>)>,
    t: usize,
    pi: usize,
    pj: usize,
) {
    a.swap(t, pi);
    swap_cols(a, t, pj);
    if let Some((p, q)) = transforms.as_mut() {
        p.swap(t, pi);
        swap_cols(q, t, pj);
    }
}
