//! Literal spanning sets of `L_i`, `M_i` and the relation ideal, as lists of
//! free-algebra elements. These follow the definitions directly and are meant
//! for small degrees and cross-checks; [`super::Engine`] is the fast route.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::free_algebra::{bracket, monomials_of_multidegree, multiply, Element, MultiDegree, Word};
use crate::linalg::{Int, IntMatrix, ZLattice};

/// Homogeneous vectors of one degree, with the monomial order used for
/// coordinates.
#[derive(Debug, Clone)]
pub struct SpanningSet {
    pub degree: MultiDegree,
    pub vectors: Vec<Element>,
    pub basis_order: Vec<Word>,
}

impl SpanningSet {
    fn new(k: usize, degree: MultiDegree, vectors: Vec<Element>) -> Self {
        let basis_order = monomials_of_multidegree(k, &degree);
        SpanningSet {
            degree,
            vectors,
            basis_order,
        }
    }

    /// Coordinate matrix, one row per vector, columns in `basis_order`.
    pub fn coordinate_matrix(&self) -> IntMatrix {
        let index: HashMap<&Word, usize> = self.basis_order.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut m = IntMatrix::zeros(self.vectors.len(), self.basis_order.len());
        for (r, v) in self.vectors.iter().enumerate() {
            for (w, c) in v.terms() {
                m.set(r, index[w], c.clone());
            }
        }
        m
    }

    /// The Z-span of the vectors.
    pub fn lattice(&self) -> ZLattice {
        let mut l = ZLattice::from_matrix(&self.coordinate_matrix());
        l.reduce();
        l
    }

    pub fn extend(&mut self, other: SpanningSet) {
        assert_eq!(self.degree, other.degree);
        self.vectors.extend(other.vectors);
    }
}

fn monomial_elements(k: usize, d: &MultiDegree) -> Vec<Element> {
    monomials_of_multidegree(k, d)
        .into_iter()
        .map(|w| Element::monomial(k, w, BigInt::one()))
        .collect()
}

fn l_rec(i: usize, d: &MultiDegree, k: usize, memo: &mut HashMap<(usize, MultiDegree), Vec<Element>>) -> Vec<Element> {
    if let Some(v) = memo.get(&(i, d.clone())) {
        return v.clone();
    }
    let out = if i == 1 {
        monomial_elements(k, d)
    } else {
        let mut out = Vec::new();
        for d1 in d.sub_degrees() {
            if d1.total() == 0 || d1 == *d {
                continue;
            }
            let rest = d.checked_sub(&d1).expect("sub-degree");
            let inner = l_rec(i - 1, &rest, k, memo);
            for m in monomial_elements(k, &d1) {
                for l in &inner {
                    out.push(bracket(&m, l));
                }
            }
        }
        out
    };
    memo.insert((i, d.clone()), out.clone());
    out
}

/// Spanning set of `L_i` at degree `d`: all monomials for `i = 1`, otherwise
/// every `[m, l]` with `m` a monomial of positive degree `d'` and `l` from
/// the spanning set of `L_{i-1}` at `d - d'`. Redundant and zero vectors are
/// kept.
pub fn l_spanning_set(i: usize, d: &MultiDegree, k: usize) -> SpanningSet {
    assert!(i >= 1, "i must be positive");
    let vectors = l_rec(i, d, k, &mut HashMap::new());
    SpanningSet::new(k, d.clone(), vectors)
}

/// All `u l v` with `u, v` monomials (possibly empty) and `l` from the
/// spanning set of `L_i`, over every split of `d`.
pub fn m_spanning_set(i: usize, d: &MultiDegree, k: usize) -> SpanningSet {
    assert!(i >= 1, "i must be positive");
    let mut memo = HashMap::new();
    let mut vectors = Vec::new();
    for du in d.sub_degrees() {
        let after_u = d.checked_sub(&du).expect("sub-degree");
        for dl in after_u.sub_degrees() {
            if dl.total() == 0 {
                continue;
            }
            let dv = after_u.checked_sub(&dl).expect("sub-degree");
            let ls = l_rec(i, &dl, k, &mut memo);
            if ls.iter().all(Element::is_zero) {
                continue;
            }
            let us = monomial_elements(k, &du);
            let vs = monomial_elements(k, &dv);
            for u in &us {
                for l in &ls {
                    let ul = multiply(u, l);
                    for v in &vs {
                        vectors.push(multiply(&ul, v));
                    }
                }
            }
        }
    }
    SpanningSet::new(k, d.clone(), vectors)
}

/// All `u f v` with `u, v` monomials and `f` a relation, over every split of
/// `d`.
pub fn ideal_spanning_set(relations: &[Element], d: &MultiDegree, k: usize) -> SpanningSet {
    let mut vectors = Vec::new();
    for f in relations {
        let Some(rest) = d.checked_sub(f.degree()) else {
            continue;
        };
        for du in rest.sub_degrees() {
            let dv = rest.checked_sub(&du).expect("sub-degree");
            for u in monomial_elements(k, &du) {
                let uf = multiply(&u, f);
                for v in monomial_elements(k, &dv) {
                    vectors.push(multiply(&uf, &v));
                }
            }
        }
    }
    SpanningSet::new(k, d.clone(), vectors)
}

/// Reduced Hermite basis of a lattice as dense rows; two lattices are equal
/// exactly when these agree.
pub fn hermite_basis(l: &mut ZLattice) -> Vec<Vec<Int>> {
    l.reduce();
    l.basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::parse_element;

    fn deg(a: u32, b: u32) -> MultiDegree {
        MultiDegree::new(vec![a, b])
    }

    fn lattice_of(elems: &[&str], d: &MultiDegree) -> ZLattice {
        let vectors = elems.iter().map(|s| parse_element(s, 2).unwrap()).collect();
        SpanningSet::new(2, d.clone(), vectors).lattice()
    }

    #[test]
    fn l2_at_11_is_y() {
        let mut s = l_spanning_set(2, &deg(1, 1), 2).lattice();
        let mut y = lattice_of(&["x1*x2 - x2*x1"], &deg(1, 1));
        assert_eq!(hermite_basis(&mut s), hermite_basis(&mut y));
    }

    #[test]
    fn l2_at_20_vanishes() {
        let s = l_spanning_set(2, &deg(2, 0), 2);
        assert!(s.vectors.iter().all(Element::is_zero));
        assert_eq!(s.lattice().rank(), 0);
    }

    #[test]
    fn l3_at_21_is_z1() {
        let mut s = l_spanning_set(3, &deg(2, 1), 2).lattice();
        let z1 = bracket(&Element::generator(2, 1), &parse_element("x1*x2 - x2*x1", 2).unwrap());
        let mut z = SpanningSet::new(2, deg(2, 1), vec![z1]).lattice();
        assert_eq!(hermite_basis(&mut s), hermite_basis(&mut z));
    }

    #[test]
    fn m2_examples() {
        let mut m = m_spanning_set(2, &deg(1, 1), 2).lattice();
        let mut l = l_spanning_set(2, &deg(1, 1), 2).lattice();
        assert_eq!(hermite_basis(&mut m), hermite_basis(&mut l));
        let m21 = m_spanning_set(2, &deg(2, 1), 2);
        assert_eq!(m21.basis_order.len(), 3);
        let mut got = m21.lattice();
        let mut want = lattice_of(&["x1*x1*x2 - x1*x2*x1", "x1*x2*x1 - x2*x1*x1"], &deg(2, 1));
        assert_eq!(got.rank(), 2);
        assert_eq!(hermite_basis(&mut got), hermite_basis(&mut want));
        assert_eq!(m_spanning_set(3, &deg(1, 1), 2).lattice().rank(), 0);
    }

    #[test]
    fn ideal_examples() {
        let rels = vec![parse_element("x1^3", 2).unwrap()];
        assert_eq!(ideal_spanning_set(&rels, &deg(3, 0), 2).lattice().rank(), 1);
        assert!(ideal_spanning_set(&rels, &deg(2, 0), 2).vectors.is_empty());
        let rels = vec![parse_element("x1^3", 2).unwrap(), parse_element("x2^4", 2).unwrap()];
        let s = ideal_spanning_set(&rels, &deg(3, 1), 2);
        assert_eq!(s.basis_order.len(), 4);
        assert_eq!(s.lattice().rank(), 2);
    }
}
