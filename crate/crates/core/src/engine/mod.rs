//! Multigraded components of `N_i(A) = M_i(A) / M_{i+1}(A)`.
//!
//! Everything happens in free-algebra coordinates. For each multidegree `d`
//! the engine first finds the words `w` with `w ∈ I` (the relation ideal) and
//! drops those coordinates; what remains is a coordinate system for `A_d` up
//! to the residual ideal `I'(d)`, the image of `I(d)`. In those coordinates it
//! builds
//!
//! ```text
//! L'_1(d) = everything
//! L'_i(d) = span { [m, l] : m a surviving word of degree d', l in L'_{i-1}(d - d') }
//! J_i(d)  = I'(d) + sum_g ( [x_g, L'_{i-1}(d - e_g)] + x_g J_i(d - e_g) + J_i(d - e_g) x_g )
//! ```
//!
//! so that `J_i(d)` is the image of `(M_i + I)(d)`, and each component of
//! `N_i` is the quotient `J_i(d) / J_{i+1}(d)`. Brackets with single
//! generators suffice in `J_i` by the Leibniz rule
//! `[uv, l] = u[v, l] + [u, l]v`. For `i = 2` the same holds inside `L'_2`
//! itself, since `[uv, w] = [u, vw] + [v, wu]`.

mod coords;
mod span;
mod spanning;
mod table;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::free_algebra::{AlgebraPresentation, Element, MultiDegree, Ring, Word};
use crate::linalg::{Int, LinalgError, ZLattice};

use coords::{bracket_word, left_mul, normalize, right_mul, Codec, Coords, SparseVec};
use span::{quotient, Span};

pub use spanning::{hermite_basis, ideal_spanning_set, l_spanning_set, m_spanning_set, SpanningSet};
pub use table::{hilbert_series, BigradedTable, Cell, TableMeta};

/// Tag stored with cached results; bump it whenever computed tables could
/// change.
pub const ENGINE_VERSION: &str = "1";

/// Default cap on the number of free-algebra words in one component.
pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the series index i must be at least 1")]
    InvalidIndex,
    #[error("multidegree {found} does not have {expected} entries")]
    DegreeArity { expected: usize, found: MultiDegree },
    #[error("between 1 and 255 generators are supported, got {0}")]
    GeneratorCount(usize),
    #[error("variable {0} is out of range for {1} generators")]
    BadVariable(usize, usize),
    #[error("component {0} was not computed")]
    Incomplete(MultiDegree),
    #[error("table is over Z; dimensions need a prime field")]
    NotOverField,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Basis = Arc<Vec<SparseVec>>;

/// Memoizing evaluator for one presentation.
///
/// Lattices are built once per `(i, d)` and reused by every larger degree
/// that needs them. Components whose free-algebra dimension exceeds the
/// configured cap are reported as [`Cell::Blank`].
pub struct Engine {
    pres: AlgebraPresentation,
    k: usize,
    max_dim: usize,
    codec: Codec,
    /// `Some(words)` when every relation is `±w` for a word `w`: then the
    /// killed coordinates are exactly the words containing some `w`, and
    /// the residual ideal is zero.
    monomial_ideal: Option<Vec<Vec<u8>>>,
    coords: HashMap<MultiDegree, Arc<Coords>>,
    ideal_full: HashMap<MultiDegree, Arc<ZLattice>>,
    residual: HashMap<MultiDegree, Basis>,
    l_memo: HashMap<(usize, MultiDegree), Option<Basis>>,
    j_memo: HashMap<(usize, MultiDegree), Option<Arc<Span>>>,
}

impl Engine {
    pub fn new(pres: AlgebraPresentation) -> Result<Self, EngineError> {
        let k = pres.gens();
        if k == 0 || k > u8::MAX as usize {
            return Err(EngineError::GeneratorCount(k));
        }
        let monomial_ideal = pres
            .relations()
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.as_unit_monomial().map(|w| w.letters().to_vec()))
            .collect::<Option<Vec<_>>>();
        Ok(Engine {
            codec: Codec::new(k),
            pres,
            k,
            max_dim: DEFAULT_MAX_DIM,
            monomial_ideal,
            coords: HashMap::new(),
            ideal_full: HashMap::new(),
            residual: HashMap::new(),
            l_memo: HashMap::new(),
            j_memo: HashMap::new(),
        })
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.pres
    }

    pub fn ring(&self) -> Ring {
        self.pres.ring()
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    fn check_degree(&self, d: &MultiDegree) -> Result<(), EngineError> {
        if d.gens() != self.k {
            return Err(EngineError::DegreeArity {
                expected: self.k,
                found: d.clone(),
            });
        }
        Ok(())
    }

    /// True when the component at `d` is beyond the resource guard.
    pub fn exceeds_guard(&self, d: &MultiDegree) -> bool {
        d.monomial_count() > self.max_dim as u128 || d.total() as usize > self.codec.max_len()
    }

    fn predecessors(&self, d: &MultiDegree) -> Vec<(u8, MultiDegree)> {
        (1..=self.k)
            .filter_map(|g| d.checked_sub(&MultiDegree::unit(self.k, g)).map(|e| (g as u8, e)))
            .collect()
    }

    // ---- coordinates and the relation ideal ----

    fn coords(&mut self, d: &MultiDegree) -> Arc<Coords> {
        if let Some(c) = self.coords.get(d) {
            return c.clone();
        }
        let c = match &self.monomial_ideal {
            Some(rel_words) => {
                let words = crate::free_algebra::monomials_of_multidegree(self.k, d)
                    .into_iter()
                    .filter(|w| !rel_words.iter().any(|r| contains_factor(w.letters(), r)))
                    .collect();
                Arc::new(Coords::from_words(&self.codec, d.clone(), words))
            }
            None => {
                self.build_ideal(d);
                return self.coords[d].clone();
            }
        };
        self.coords.insert(d.clone(), c.clone());
        c
    }

    /// Basis of the residual ideal `I'(d)` in surviving coordinates.
    fn residual(&mut self, d: &MultiDegree) -> Basis {
        if self.monomial_ideal.is_some() {
            return Arc::new(Vec::new());
        }
        if !self.residual.contains_key(d) {
            self.build_ideal(d);
        }
        self.residual[d].clone()
    }

    /// General path: the full-coordinate lattice `I(d)`, its unit columns,
    /// and the projection of the remaining rows.
    fn build_ideal(&mut self, d: &MultiDegree) {
        if self.ideal_full.contains_key(d) {
            return;
        }
        let full = Coords::full(&self.codec, self.k, d);
        let mut lat = ZLattice::new(full.dim());
        for r in self.pres.relations() {
            if r.degree() == d {
                lat.insert_sparse(&element_to_sparse(&self.codec, r, &full));
            }
        }
        for (g, e) in self.predecessors(d) {
            self.build_ideal(&e);
            let prev = self.ideal_full[&e].clone();
            let src = Coords::full(&self.codec, self.k, &e);
            for row in prev.basis_sparse() {
                lat.insert_sparse(&left_mul(&self.codec, g, &row, &src, &full));
                lat.insert_sparse(&right_mul(&self.codec, g, &row, &src, &full));
            }
        }
        lat.reduce();
        let killed = lat.unit_columns();
        let mut remap = vec![usize::MAX; full.dim()];
        let mut words = Vec::new();
        let mut next = 0;
        let mut k_iter = killed.iter().peekable();
        for (c, w) in full.words.iter().enumerate() {
            if k_iter.peek() == Some(&&c) {
                k_iter.next();
                continue;
            }
            remap[c] = next;
            next += 1;
            words.push(w.clone());
        }
        let mut residual = Vec::new();
        for row in lat.basis_sparse() {
            let projected: SparseVec = row
                .into_iter()
                .filter(|(c, _)| remap[*c] != usize::MAX)
                .map(|(c, x)| (remap[c], x))
                .collect();
            let projected = normalize(projected);
            if !projected.is_empty() {
                residual.push(projected);
            }
        }
        self.coords
            .insert(d.clone(), Arc::new(Coords::from_words(&self.codec, d.clone(), words)));
        self.residual.insert(d.clone(), Arc::new(residual));
        self.ideal_full.insert(d.clone(), Arc::new(lat));
    }

    /// Words of degree `d` that are not in the relation ideal, in lex order.
    pub fn surviving_words(&mut self, d: &MultiDegree) -> Result<Vec<Word>, EngineError> {
        self.check_degree(d)?;
        Ok(self.coords(d).words.clone())
    }

    // ---- L and M ----

    fn l_basis(&mut self, i: usize, d: &MultiDegree) -> Option<Basis> {
        let key = (i, d.clone());
        if let Some(b) = self.l_memo.get(&key) {
            return b.clone();
        }
        let out = self.compute_l(i, d);
        self.l_memo.insert(key, out.clone());
        out
    }

    fn compute_l(&mut self, i: usize, d: &MultiDegree) -> Option<Basis> {
        if self.exceeds_guard(d) {
            return None;
        }
        let dst = self.coords(d);
        if i == 1 {
            let unit = (0..dst.dim()).map(|c| vec![(c, Int::ONE)]).collect();
            return Some(Arc::new(unit));
        }
        if (d.total() as usize) < i {
            return Some(Arc::new(Vec::new()));
        }
        let mut span = Span::new(self.ring(), dst.dim());
        if i == 2 {
            for (g, e) in self.predecessors(d) {
                let src = self.coords(&e);
                for c in 0..src.dim() {
                    let v = vec![(c, Int::ONE)];
                    span.insert(&bracket_word(&self.codec, g as u128, 1, &v, &src, &dst));
                    if span.is_everything() {
                        break;
                    }
                }
            }
        } else {
            for d1 in d.sub_degrees() {
                let (t1, t) = (d1.total(), d.total());
                if t1 == 0 || t1 == t {
                    continue;
                }
                let rest = d.checked_sub(&d1).expect("sub-degree");
                if (rest.total() as usize) < i - 1 {
                    continue;
                }
                let inner = self.l_basis(i - 1, &rest)?;
                if inner.is_empty() {
                    continue;
                }
                let ms = self.coords(&d1);
                let src = self.coords(&rest);
                for &m in &ms.codes {
                    for l in inner.iter() {
                        span.insert(&bracket_word(&self.codec, m, t1 as usize, l, &src, &dst));
                    }
                }
            }
        }
        span.finish();
        Some(Arc::new(span.basis()))
    }

    fn j_span(&mut self, i: usize, d: &MultiDegree) -> Option<Arc<Span>> {
        let key = (i, d.clone());
        if let Some(s) = self.j_memo.get(&key) {
            return s.clone();
        }
        let out = self.compute_j(i, d).map(Arc::new);
        self.j_memo.insert(key, out.clone());
        out
    }

    fn compute_j(&mut self, i: usize, d: &MultiDegree) -> Option<Span> {
        if self.exceeds_guard(d) {
            return None;
        }
        let dst = self.coords(d);
        let ring = self.ring();
        if i == 1 {
            return Some(Span::full(ring, dst.dim()));
        }
        let mut span = Span::new(ring, dst.dim());
        span.absorb(&self.residual(d));
        for (g, e) in self.predecessors(d) {
            if span.is_everything() {
                break;
            }
            let src = self.coords(&e);
            for l in self.l_basis(i - 1, &e)?.iter() {
                span.insert(&bracket_word(&self.codec, g as u128, 1, l, &src, &dst));
            }
            let prev = self.j_span(i, &e)?;
            for row in prev.basis() {
                span.insert(&left_mul(&self.codec, g, &row, &src, &dst));
                span.insert(&right_mul(&self.codec, g, &row, &src, &dst));
            }
        }
        span.finish();
        Some(span)
    }

    /// A basis of the image of `M_i + I` at degree `d`, lifted to free-algebra
    /// elements (killed words are omitted: they lie in `I`). `None` when the
    /// component is beyond the resource guard.
    pub fn m_basis(&mut self, i: usize, d: &MultiDegree) -> Result<Option<Vec<Element>>, EngineError> {
        self.check_degree(d)?;
        if i == 0 {
            return Err(EngineError::InvalidIndex);
        }
        let Some(span) = self.j_span(i, d) else {
            return Ok(None);
        };
        let coords = self.coords(d);
        let out = span
            .basis()
            .into_iter()
            .map(|row| {
                Element::from_terms(
                    d.clone(),
                    row.into_iter().map(|(c, x)| (coords.words[c].clone(), x.to_bigint())),
                )
                .expect("basis words share the degree")
            })
            .collect();
        Ok(Some(out))
    }

    /// Prepares the lattices `J_i(d)` and `J_{i+1}(d)` for later reads.
    fn prepare(&mut self, i: usize, d: &MultiDegree) -> Option<(Arc<Span>, Arc<Span>)> {
        let top = self.j_span(i, d)?;
        let sub = self.j_span(i + 1, d)?;
        Some((top, sub))
    }

    /// The component of `N_i` at multidegree `d`.
    pub fn component(&mut self, i: usize, d: &MultiDegree) -> Result<Cell, EngineError> {
        self.check_degree(d)?;
        if i == 0 {
            return Err(EngineError::InvalidIndex);
        }
        match self.prepare(i, d) {
            None => Ok(Cell::Blank),
            Some((top, sub)) => Ok(quotient(&top, &sub)?),
        }
    }

    /// Every component of `N_i` with total degree at most `bound`.
    ///
    /// Lattices are built sequentially in increasing degree; the quotients are
    /// then taken in parallel.
    pub fn table(&mut self, i: usize, bound: u32) -> Result<BigradedTable, EngineError> {
        if i == 0 {
            return Err(EngineError::InvalidIndex);
        }
        let degrees: Vec<MultiDegree> = (0..=bound).flat_map(|t| MultiDegree::with_total(self.k, t)).collect();
        let prepared: Vec<(MultiDegree, Option<(Arc<Span>, Arc<Span>)>)> = degrees
            .into_iter()
            .map(|d| {
                let p = self.prepare(i, &d);
                (d, p)
            })
            .collect();
        let cells = prepared
            .into_par_iter()
            .map(|(d, p)| {
                let cell = match p {
                    None => Cell::Blank,
                    Some((top, sub)) => quotient(&top, &sub)?,
                };
                Ok((d, cell))
            })
            .collect::<Result<_, LinalgError>>()?;
        Ok(BigradedTable {
            meta: TableMeta {
                ring: self.ring(),
                gens: self.k,
                relations: self.pres.canonical_relations(),
                i,
                bound,
            },
            cells,
        })
    }
}

fn contains_factor(word: &[u8], factor: &[u8]) -> bool {
    factor.len() <= word.len() && word.windows(factor.len()).any(|w| w == factor)
}

fn element_to_sparse(codec: &Codec, e: &Element, coords: &Coords) -> SparseVec {
    let v = e
        .terms()
        .iter()
        .map(|(w, c)| (coords.index[&codec.encode(w)], Int::from(c)))
        .collect();
    normalize(v)
}

/// The component of `N_i(A)` at multidegree `d`.
pub fn n_component(pres: &AlgebraPresentation, i: usize, d: &MultiDegree) -> Result<Cell, EngineError> {
    Engine::new(pres.clone())?.component(i, d)
}

/// All components of `N_i(A)` with total degree at most `bound`.
pub fn n_table(pres: &AlgebraPresentation, i: usize, bound: u32) -> Result<BigradedTable, EngineError> {
    Engine::new(pres.clone())?.table(i, bound)
}
