//! Words, multidegrees and homogeneous integer elements of the free
//! associative algebra `Z<x1, ..., xk>`.
//!
//! Words are compared lexicographically on their letter sequences with
//! `x1 < x2 < ...`. Within a fixed multidegree every word has the same
//! length, so this is also the order used for coordinates everywhere in the
//! crate.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use parse::parse_element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("inhomogeneous element: term of degree {found} does not match degree {expected}")]
    Inhomogeneous { expected: MultiDegree, found: MultiDegree },
    #[error("unknown generator x{index} at position {pos} (algebra has {gens} generators)")]
    UnknownGenerator { index: usize, pos: usize, gens: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(MultiDegree, MultiDegree),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// A monomial: a sequence of 1-based generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn multidegree(&self, k: usize) -> MultiDegree {
        let mut degrees = vec![0u32; k];
        for &l in &self.0 {
            degrees[l as usize - 1] += 1;
        }
        MultiDegree(degrees)
    }

    /// Lengths of maximal runs of the given generator.
    pub fn runs_of(&self, generator: u8) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0;
        for &l in &self.0 {
            if l == generator {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }
}

impl fmt::Display for Word {
    /// Canonical factor form, e.g. `x1^2*x2`. The empty word renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut e = 1;
            while i + e < self.0.len() && self.0[i + e] == l {
                e += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{l}^{e}")?;
            }
            i += e;
        }
        Ok(())
    }
}

/// Per-generator degree vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(degrees: Vec<u32>) -> Self {
        MultiDegree(degrees)
    }

    pub fn zero(k: usize) -> Self {
        MultiDegree(vec![0; k])
    }

    /// Unit degree of the 1-based generator `gen`.
    pub fn unit(k: usize, gen: usize) -> Self {
        let mut d = vec![0; k];
        d[gen - 1] = 1;
        MultiDegree(d)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn gens(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree in the 1-based generator `gen`.
    pub fn degree_in(&self, gen: usize) -> u32 {
        self.0[gen - 1]
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        assert_eq!(self.gens(), other.gens());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Component-wise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        assert_eq!(self.gens(), other.gens());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    /// Component-wise `self <= other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All degrees `e` with `0 <= e <= self` component-wise, in lex order.
    pub fn sub_degrees(&self) -> Vec<MultiDegree> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiDegree).collect()
    }

    /// Every multidegree in `k` generators with total degree exactly `total`.
    pub fn with_total(k: usize, total: u32) -> Vec<MultiDegree> {
        fn rec(k: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if prefix.len() + 1 == k {
                prefix.push(remaining);
                out.push(MultiDegree(prefix.clone()));
                prefix.pop();
                return;
            }
            for v in 0..=remaining {
                prefix.push(v);
                rec(k, remaining - v, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if total == 0 {
                out.push(MultiDegree(Vec::new()));
            }
            return out;
        }
        rec(k, total, &mut Vec::with_capacity(k), &mut out);
        out
    }

    /// Number of words of this multidegree (the multinomial coefficient).
    pub fn monomial_count(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut n: u128 = 0;
        for &d in &self.0 {
            for j in 1..=d as u128 {
                n += 1;
                acc = acc * n / j;
            }
        }
        acc
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// All words of multidegree `d` over `k` generators, in lexicographic order.
pub fn monomials_of_multidegree(k: usize, d: &MultiDegree) -> Vec<Word> {
    assert_eq!(k, d.gens(), "multidegree has {} entries, expected {k}", d.gens());
    fn rec(remaining: &mut [u32], prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(Word(prefix.clone()));
            return;
        }
        for g in 0..remaining.len() {
            if remaining[g] > 0 {
                remaining[g] -= 1;
                prefix.push(g as u8 + 1);
                rec(remaining, prefix, out);
                prefix.pop();
                remaining[g] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut remaining = d.0.clone();
    rec(&mut remaining, &mut Vec::with_capacity(d.total() as usize), &mut out);
    out
}

/// A homogeneous integer combination of words of one multidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element {
    degree: MultiDegree,
    terms: BTreeMap<Word, BigInt>,
}

impl Element {
    pub fn zero(degree: MultiDegree) -> Self {
        Element {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(k: usize, word: Word, coeff: BigInt) -> Self {
        let degree = word.multidegree(k);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Element { degree, terms }
    }

    /// The generator `x_gen` (1-based).
    pub fn generator(k: usize, gen: usize) -> Self {
        Element::monomial(k, Word(vec![gen as u8]), BigInt::one())
    }

    /// Builds an element from terms that must all share `degree`.
    pub fn from_terms<I>(degree: MultiDegree, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, BigInt)>,
    {
        let k = degree.gens();
        let mut e = Element::zero(degree);
        for (w, c) in terms {
            let wd = w.multidegree(k);
            if wd != e.degree {
                return Err(AlgebraError::Inhomogeneous {
                    expected: e.degree.clone(),
                    found: wd,
                });
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn gens(&self) -> usize {
        self.degree.gens()
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// True when the element is `±w` for a single word.
    pub fn as_unit_monomial(&self) -> Option<&Word> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, c) = self.terms.iter().next()?;
        (c.abs().is_one()).then_some(w)
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch(self.degree.clone(), other.degree.clone()));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            degree: self.degree.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Element {
        if s.is_zero() {
            return Element::zero(self.degree.clone());
        }
        Element {
            degree: self.degree.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }
}

/// Concatenation product, extended bilinearly.
pub fn multiply(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero(a.degree.add(&b.degree));
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    out
}

/// The commutator `ab - ba`.
pub fn bracket(a: &Element, b: &Element) -> Element {
    let ab = multiply(a, b);
    let ba = multiply(b, a);
    ab.try_sub(&ba).expect("both products have the same degree")
}

impl fmt::Display for Element {
    /// Canonical rendering: terms in word order, `x<i>^<e>` factors joined by `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient ring of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    PrimeField(u64),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Self, AlgebraError> {
        if crate::linalg::is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::PrimeField(p) => Some(*p),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| format!("unsupported ring `{s}` (expected Z or Fp:<p>)"))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| format!("unsupported ring `{s}` (expected Z or Fp:<p>)"))?;
        Ring::prime_field(p).map_err(|e| e.to_string())
    }
}

/// `k` generators over `ring` modulo homogeneous relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    gens: usize,
    ring: Ring,
    relations: Vec<Element>,
}

impl AlgebraPresentation {
    pub fn new(gens: usize, ring: Ring, relations: Vec<Element>) -> Result<Self, AlgebraError> {
        if let Ring::PrimeField(p) = ring {
            if !crate::linalg::is_prime(p) {
                return Err(AlgebraError::NotPrime(p));
            }
        }
        for r in &relations {
            if r.gens() != gens {
                return Err(AlgebraError::DegreeMismatch(
                    r.degree().clone(),
                    MultiDegree::zero(gens),
                ));
            }
        }
        Ok(AlgebraPresentation { gens, ring, relations })
    }

    /// Parses a comma-separated relation list such as `"x1^3,x2^7"`.
    pub fn parse(gens: usize, ring: Ring, relations: &str) -> Result<Self, AlgebraError> {
        let mut rels = Vec::new();
        for part in relations.split(',') {
            if part.trim().is_empty() {
                continue;
            }
            rels.push(parse_element(part, gens)?);
        }
        AlgebraPresentation::new(gens, ring, rels)
    }

    /// The free algebra over `Z`.
    pub fn free(gens: usize) -> Self {
        AlgebraPresentation {
            gens,
            ring: Ring::Integers,
            relations: Vec::new(),
        }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    /// Canonical relation strings, sorted.
    pub fn canonical_relations(&self) -> Vec<String> {
        let mut v: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        v.sort();
        v
    }

    /// Same generators and relations over another ring.
    pub fn with_ring(&self, ring: Ring) -> Self {
        AlgebraPresentation {
            gens: self.gens,
            ring,
            relations: self.relations.clone(),
        }
    }

    /// For `x1^m, x2^n`-type presentations on two generators, returns `(m, n)`.
    pub fn power_exponents(&self) -> Option<(u32, u32)> {
        if self.gens != 2 || self.relations.len() != 2 {
            return None;
        }
        let mut m = None;
        let mut n = None;
        for r in &self.relations {
            let w = r.as_unit_monomial()?;
            let letters = w.letters();
            if letters.is_empty() || letters.iter().any(|&l| l != letters[0]) {
                return None;
            }
            match letters[0] {
                1 => m = Some(letters.len() as u32),
                2 => n = Some(letters.len() as u32),
                _ => return None,
            }
        }
        Some((m?, n?))
    }
}
