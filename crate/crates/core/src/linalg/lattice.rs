use num_bigint::BigInt;

use super::int::Int;
use super::invariants::GroupInvariants;
use super::matrix::{snf_in_place, IntMatrix};
use super::LinalgError;

const REDUCE_EVERY: usize = 16;

/// A sublattice of `Z^dim` kept in row echelon form, grown one vector at a
/// time.
///
/// Each stored row is indexed by its pivot column and holds only the tail
/// starting at that column. Pivots are positive.
#[derive(Debug, Clone)]
pub struct ZLattice {
    dim: usize,
    rows: Vec<Option<Vec<Int>>>,
    rank: usize,
    reduced: bool,
    /// Row replacements since the last size reduction.
    churn: usize,
}

impl ZLattice {
    pub fn new(dim: usize) -> Self {
        ZLattice {
            dim,
            rows: vec![None; dim],
            rank: 0,
            reduced: true,
            churn: 0,
        }
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        let mut l = ZLattice::new(m.cols());
        for r in 0..m.rows() {
            l.insert(m.row(r).iter().map(Int::from).collect());
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    /// Adds a dense vector of length `dim` to the generating set.
    pub fn insert(&mut self, mut v: Vec<Int>) {
        assert_eq!(v.len(), self.dim, "vector length differs from lattice dimension");
        if self.churn >= REDUCE_EVERY {
            self.reduce();
        }
        let mut c = 0;
        loop {
            while c < self.dim && v[c].is_zero() {
                c += 1;
            }
            if c == self.dim {
                return;
            }
            self.reduced = false;
            let Some(row) = self.rows[c].as_mut() else {
                let mut tail = v.split_off(c);
                if tail[0].is_negative() {
                    for x in tail.iter_mut() {
                        *x = x.neg();
                    }
                }
                self.rows[c] = Some(tail);
                self.rank += 1;
                self.note_churn();
                return;
            };
            loop {
                let q = v[c].div_floor(&row[0]);
                for (x, y) in v[c..].iter_mut().zip(row.iter()) {
                    if !y.is_zero() {
                        *x = x.sub_mul(&q, y);
                    }
                }
                if v[c].is_zero() {
                    break;
                }
                // remainder is smaller than the pivot: it takes its place
                for (x, y) in v[c..].iter_mut().zip(row.iter_mut()) {
                    std::mem::swap(x, y);
                }
                self.churn += 1;
            }
        }
    }

    /// Size-reduces the basis after enough row replacements, which keeps
    /// intermediate entries from growing between insertions.
    fn note_churn(&mut self) {
        self.churn += 1;
        if self.churn >= REDUCE_EVERY {
            self.reduce();
        }
    }

    /// Inserts a sparse vector given as `(column, value)` pairs.
    pub fn insert_sparse(&mut self, entries: &[(usize, Int)]) {
        if entries.is_empty() {
            return;
        }
        let mut v = vec![Int::ZERO; self.dim];
        for (c, x) in entries {
            v[*c] = v[*c].add(x);
        }
        self.insert(v);
    }

    /// Brings the basis to reduced Hermite form: entries above each pivot lie
    /// in `[0, pivot)`.
    pub fn reduce(&mut self) {
        if self.reduced {
            return;
        }
        let pivots = self.pivot_columns();
        for (idx, &c) in pivots.iter().enumerate() {
            let (head, tail) = self.rows.split_at_mut(c);
            let prow = tail[0].as_ref().expect("pivot row");
            for &c2 in &pivots[..idx] {
                let row = head[c2].as_mut().expect("pivot row");
                let off = c - c2;
                if row[off].is_zero() {
                    continue;
                }
                let q = row[off].div_floor(&prow[0]);
                if q.is_zero() {
                    continue;
                }
                for (x, y) in row[off..].iter_mut().zip(prow.iter()) {
                    if !y.is_zero() {
                        *x = x.sub_mul(&q, y);
                    }
                }
            }
        }
        self.reduced = true;
        self.churn = 0;
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| self.rows[c].is_some()).collect()
    }

    pub fn pivot(&self, col: usize) -> Option<&Int> {
        self.rows[col].as_ref().map(|r| &r[0])
    }

    /// Basis rows as dense vectors, ordered by pivot column.
    pub fn basis(&self) -> Vec<Vec<Int>> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(c, r)| {
                r.as_ref().map(|tail| {
                    let mut v = vec![Int::ZERO; c];
                    v.extend(tail.iter().cloned());
                    v
                })
            })
            .collect()
    }

    /// Basis rows as sparse `(column, value)` lists, ordered by pivot column.
    pub fn basis_sparse(&self) -> Vec<Vec<(usize, Int)>> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(c, r)| {
                r.as_ref().map(|tail| {
                    tail.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (c + j, x.clone()))
                        .collect()
                })
            })
            .collect()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_int_rows(self.dim, self.basis())
    }

    /// Columns `j` with `e_j` in the lattice.
    pub fn unit_columns(&mut self) -> Vec<usize> {
        self.reduce();
        let mut out = Vec::new();
        for c in 0..self.dim {
            let Some(row) = &self.rows[c] else { continue };
            if row[0].is_one() && row[1..].iter().all(Int::is_zero) {
                // reduced form guarantees no other row touches column c
                out.push(c);
            }
        }
        out
    }

    /// Coefficients of `v` in the basis (pivot order), or `None` when `v` is
    /// not in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank);
        for c in 0..self.dim {
            match &self.rows[c] {
                None => {
                    if !v[c].is_zero() {
                        return None;
                    }
                }
                Some(row) => {
                    if v[c].is_zero() {
                        coeffs.push(Int::ZERO);
                        continue;
                    }
                    if !row[0].divides(&v[c]) {
                        return None;
                    }
                    let q = v[c].div_floor(&row[0]);
                    for (x, y) in v[c..].iter_mut().zip(row.iter()) {
                        if !y.is_zero() {
                            *x = x.sub_mul(&q, y);
                        }
                    }
                    coeffs.push(q);
                }
            }
        }
        Some(coeffs)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    /// True when every basis row of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &ZLattice) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Structure of `self / sub`. Fails if `sub` is not contained in `self`.
    pub fn quotient(&self, sub: &ZLattice) -> Result<GroupInvariants, LinalgError> {
        if self.dim != sub.dim {
            return Err(LinalgError::ShapeMismatch(self.dim, sub.dim));
        }
        quotient_by_rows(self, sub.basis())
    }
}

fn quotient_by_rows(u: &ZLattice, rows: Vec<Vec<Int>>) -> Result<GroupInvariants, LinalgError> {
    let mut coords = Vec::with_capacity(rows.len());
    for (i, v) in rows.iter().enumerate() {
        match u.coordinates(v) {
            Some(c) => coords.push(c),
            None => return Err(LinalgError::ContainmentViolation { row: i }),
        }
    }
    let diag = snf_in_place(&mut coords, u.rank(), None);
    let factors: Vec<BigInt> = diag.into_iter().map(BigInt::from).collect();
    let rank = u.rank() - factors.len();
    Ok(GroupInvariants::from_invariant_factors(rank, factors))
}

/// Structure of `span(U rows) / span(V rows)` over Z.
pub fn lattice_quotient(u: &IntMatrix, v: &IntMatrix) -> Result<GroupInvariants, LinalgError> {
    if u.cols() != v.cols() {
        return Err(LinalgError::ShapeMismatch(u.cols(), v.cols()));
    }
    let lu = ZLattice::from_matrix(u);
    quotient_by_rows(&lu, v.to_int_rows())
}
