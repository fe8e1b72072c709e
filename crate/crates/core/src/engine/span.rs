use crate::free_algebra::Ring;
use crate::linalg::{FpSpace, Int, LinalgError, ZLattice};

use super::coords::SparseVec;
use super::table::Cell;

/// A span inside one coordinate system: a Z-lattice or an F_p-subspace.
#[derive(Debug, Clone)]
pub(crate) enum Span {
    Z(ZLattice),
    Fp(FpSpace),
}

impl Span {
    pub fn new(ring: Ring, dim: usize) -> Self {
        match ring {
            Ring::Integers => Span::Z(ZLattice::new(dim)),
            Ring::PrimeField(p) => Span::Fp(FpSpace::new(dim, p).expect("ring prime checked at construction")),
        }
    }

    pub fn full(ring: Ring, dim: usize) -> Self {
        let mut s = Span::new(ring, dim);
        for c in 0..dim {
            s.insert(&vec![(c, Int::ONE)]);
        }
        s
    }

    /// True when no insertion can change the span any more.
    pub fn is_everything(&self) -> bool {
        match self {
            Span::Z(l) => l.rank() == l.dim() && (0..l.dim()).all(|c| l.pivot(c).is_some_and(Int::is_one)),
            Span::Fp(s) => s.is_full(),
        }
    }

    pub fn insert(&mut self, v: &SparseVec) {
        if v.is_empty() {
            return;
        }
        match self {
            Span::Z(l) => l.insert_sparse(v),
            Span::Fp(s) => {
                s.insert_sparse(v);
            }
        }
    }

    pub fn absorb(&mut self, other: &[SparseVec]) {
        for v in other {
            self.insert(v);
        }
    }

    /// Finishes construction: reduces a lattice to Hermite form so that
    /// stored bases are canonical.
    pub fn finish(&mut self) {
        if let Span::Z(l) = self {
            l.reduce();
        }
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        match self {
            Span::Z(l) => l.basis_sparse(),
            Span::Fp(s) => s.basis_sparse(),
        }
    }
}

/// Structure of `top / sub`.
pub(crate) fn quotient(top: &Span, sub: &Span) -> Result<Cell, LinalgError> {
    match (top, sub) {
        (Span::Z(u), Span::Z(v)) => u.quotient(v).map(Cell::Group),
        (Span::Fp(u), Span::Fp(v)) => {
            if let Some(row) = v.basis_sparse().iter().position(|b| !u.contains_sparse(b)) {
                return Err(LinalgError::ContainmentViolation { row });
            }
            Ok(Cell::Dimension((u.rank() - v.rank()) as u64))
        }
        _ => unreachable!("spans over different rings"),
    }
}
