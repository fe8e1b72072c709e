use std::collections::HashMap;

use crate::free_algebra::{monomials_of_multidegree, MultiDegree, Word};
use crate::linalg::Int;

/// Packs a word into a `u128` as base-`k+1` digits. Two words of equal length
/// get equal codes exactly when they are equal, and concatenation is
/// `code(u) * base^|v| + code(v)`.
#[derive(Debug, Clone)]
pub(crate) struct Codec {
    base: u128,
    powers: Vec<u128>,
}

impl Codec {
    pub fn new(k: usize) -> Self {
        let base = k as u128 + 1;
        let mut powers = vec![1u128];
        while let Some(next) = powers.last().unwrap().checked_mul(base) {
            powers.push(next);
        }
        Codec { base, powers }
    }

    /// Longest word length this codec can represent.
    pub fn max_len(&self) -> usize {
        self.powers.len().saturating_sub(1)
    }

    pub fn encode(&self, w: &Word) -> u128 {
        w.letters().iter().fold(0u128, |acc, &l| acc * self.base + l as u128)
    }

    pub fn concat(&self, u: u128, v: u128, v_len: usize) -> u128 {
        u * self.powers[v_len] + v
    }

    pub fn left(&self, g: u8, v: u128, v_len: usize) -> u128 {
        g as u128 * self.powers[v_len] + v
    }

    pub fn right(&self, v: u128, g: u8) -> u128 {
        v * self.base + g as u128
    }
}

/// A coordinate system for one multidegree: a list of words in lex order and
/// the inverse lookup from codes to positions.
#[derive(Debug, Clone)]
pub(crate) struct Coords {
    pub degree: MultiDegree,
    pub words: Vec<Word>,
    pub codes: Vec<u128>,
    pub index: HashMap<u128, usize>,
}

impl Coords {
    pub fn full(codec: &Codec, k: usize, d: &MultiDegree) -> Self {
        Coords::from_words(codec, d.clone(), monomials_of_multidegree(k, d))
    }

    pub fn from_words(codec: &Codec, degree: MultiDegree, words: Vec<Word>) -> Self {
        let codes: Vec<u128> = words.iter().map(|w| codec.encode(w)).collect();
        let index = codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Coords {
            degree,
            words,
            codes,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn len(&self) -> usize {
        self.degree.total() as usize
    }
}

/// Sparse integer vector: `(coordinate, value)` pairs, coordinates ascending,
/// no zero values.
pub(crate) type SparseVec = Vec<(usize, Int)>;

/// Sorts by coordinate and merges duplicates, dropping zeros.
pub(crate) fn normalize(mut v: Vec<(usize, Int)>) -> SparseVec {
    v.sort_unstable_by_key(|(c, _)| *c);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = lx.add(&x),
            _ => out.push((c, x)),
        }
        if out.last().is_some_and(|(_, x)| x.is_zero()) {
            out.pop();
        }
    }
    out
}

/// `x_g * v`, mapped from `src` into `dst`; words outside `dst` are dropped.
pub(crate) fn left_mul(codec: &Codec, g: u8, v: &SparseVec, src: &Coords, dst: &Coords) -> SparseVec {
    let n = src.len();
    let out = v
        .iter()
        .filter_map(|(c, x)| {
            let code = codec.left(g, src.codes[*c], n);
            dst.index.get(&code).map(|&j| (j, x.clone()))
        })
        .collect();
    normalize(out)
}

/// `v * x_g`, mapped from `src` into `dst`.
pub(crate) fn right_mul(codec: &Codec, g: u8, v: &SparseVec, src: &Coords, dst: &Coords) -> SparseVec {
    let out = v
        .iter()
        .filter_map(|(c, x)| {
            let code = codec.right(src.codes[*c], g);
            dst.index.get(&code).map(|&j| (j, x.clone()))
        })
        .collect();
    normalize(out)
}

/// `[m, v] = m v - v m` for a word `m` (given by code and length).
pub(crate) fn bracket_word(
    codec: &Codec,
    m: u128,
    m_len: usize,
    v: &SparseVec,
    src: &Coords,
    dst: &Coords,
) -> SparseVec {
    let n = src.len();
    let mut out = Vec::with_capacity(2 * v.len());
    for (c, x) in v {
        let w = src.codes[*c];
        if let Some(&j) = dst.index.get(&codec.concat(m, w, n)) {
            out.push((j, x.clone()));
        }
        if let Some(&j) = dst.index.get(&codec.concat(w, m, m_len)) {
            out.push((j, x.neg()));
        }
    }
    normalize(out)
}
