use super::int::Int;
use super::invariants::is_prime;
use super::matrix::IntMatrix;
use super::LinalgError;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= p - b {
        a - (p - b)
    } else {
        a + b
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// A subspace of `F_p^dim` in row echelon form with leading coefficients 1.
#[derive(Debug, Clone)]
pub struct FpSpace {
    p: u64,
    dim: usize,
    rows: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl FpSpace {
    pub fn new(dim: usize, p: u64) -> Result<Self, LinalgError> {
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FpSpace {
            p,
            dim,
            rows: vec![None; dim],
            rank: 0,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.dim
    }

    /// Adds a vector of residues; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.dim);
        let p = self.p;
        for x in v.iter_mut() {
            *x %= p;
        }
        let mut c = 0;
        loop {
            while c < self.dim && v[c] == 0 {
                c += 1;
            }
            if c == self.dim {
                return false;
            }
            match &self.rows[c] {
                Some(row) => {
                    let q = p - v[c];
                    for (x, y) in v[c..].iter_mut().zip(row.iter()) {
                        if *y != 0 {
                            *x = add_mod(*x, mul_mod(q, *y, p), p);
                        }
                    }
                }
                None => {
                    let mut tail = v.split_off(c);
                    let inv = inv_mod(tail[0], p);
                    for x in tail.iter_mut() {
                        *x = mul_mod(*x, inv, p);
                    }
                    self.rows[c] = Some(tail);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|x| x % p).collect();
        for c in 0..self.dim {
            if v[c] == 0 {
                continue;
            }
            let Some(row) = &self.rows[c] else { return false };
            let q = p - v[c];
            for (x, y) in v[c..].iter_mut().zip(row.iter()) {
                if *y != 0 {
                    *x = add_mod(*x, mul_mod(q, *y, p), p);
                }
            }
        }
        true
    }

    pub fn contains_sparse(&self, entries: &[(usize, Int)]) -> bool {
        let mut v = vec![0u64; self.dim];
        for (c, x) in entries {
            v[*c] = add_mod(v[*c], x.rem_u64(self.p), self.p);
        }
        self.contains(&v)
    }

    pub fn insert_sparse(&mut self, entries: &[(usize, Int)]) -> bool {
        if entries.is_empty() || self.is_full() {
            return false;
        }
        let mut v = vec![0u64; self.dim];
        for (c, x) in entries {
            v[*c] = add_mod(v[*c], x.rem_u64(self.p), self.p);
        }
        self.insert(v)
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
                        .filter(|(_, x)| **x != 0)
                        .map(|(j, x)| (c + j, Int::from(*x as i64)))
                        .collect()
                })
            })
            .collect()
    }
}

/// Rank of `m` over `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize, LinalgError> {
    let mut s = FpSpace::new(m.cols(), p)?;
    for r in 0..m.rows() {
        let v = m.row(r).iter().map(|x| Int::from(x).rem_u64(p)).collect();
        s.insert(v);
    }
    Ok(s.rank())
}
