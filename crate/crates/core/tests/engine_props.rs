mod common;

use lcsq::engine::{
    hermite_basis, ideal_spanning_set, l_spanning_set, m_spanning_set, n_component, n_table, Cell, Engine, SpanningSet,
};
use lcsq::free_algebra::{
    bracket, monomials_of_multidegree, multiply, parse_element, AlgebraPresentation, Element, MultiDegree, Ring,
};
use lcsq::linalg::{GroupInvariants, Int, IntMatrix, ZLattice};
use num_bigint::BigInt;

fn deg(a: u32, b: u32) -> MultiDegree {
    MultiDegree::new(vec![a, b])
}

fn pres(ring: Ring, rels: &str) -> AlgebraPresentation {
    AlgebraPresentation::parse(2, ring, rels).unwrap()
}

fn group(rank: usize, torsion: &[u64]) -> Cell {
    Cell::Group(GroupInvariants::from_torsion(
        rank,
        torsion.iter().map(|&t| BigInt::from(t)),
    ))
}

fn spanning(k: usize, d: &MultiDegree, vectors: Vec<Element>) -> SpanningSet {
    SpanningSet {
        degree: d.clone(),
        vectors,
        basis_order: monomials_of_multidegree(k, d),
    }
}

/// The lattice the engine uses for `M_i + I` at `d`, in full free-algebra
/// coordinates: its lifted basis plus the words it dropped as lying in `I`.
fn engine_lattice(engine: &mut Engine, i: usize, d: &MultiDegree) -> ZLattice {
    let k = engine.presentation().gens();
    let mut vectors = engine.m_basis(i, d).unwrap().expect("inside the guard");
    let surviving = engine.surviving_words(d).unwrap();
    for w in monomials_of_multidegree(k, d) {
        if !surviving.contains(&w) {
            vectors.push(Element::monomial(k, w, BigInt::from(1)));
        }
    }
    spanning(k, d, vectors).lattice()
}

/// `M_i + I` at `d` straight from the definitions.
fn literal_lattice(p: &AlgebraPresentation, i: usize, d: &MultiDegree) -> ZLattice {
    let k = p.gens();
    let mut s = m_spanning_set(i, d, k);
    s.extend(ideal_spanning_set(p.relations(), d, k));
    s.lattice()
}

#[test]
fn component_examples() {
    let z = Ring::Integers;
    assert_eq!(
        n_component(&pres(z, "x1^3,x2^7"), 2, &deg(3, 1)).unwrap(),
        group(0, &[3])
    );
    assert_eq!(
        n_component(&pres(z, "x1^4,x2^6"), 2, &deg(4, 6)).unwrap(),
        group(0, &[2])
    );
    assert_eq!(
        n_component(&pres(z, "x1^3,x2^4"), 3, &deg(3, 4)).unwrap(),
        group(1, &[3, 4])
    );
    let f3 = Ring::PrimeField(3);
    assert_eq!(
        n_component(&pres(f3, "x1^3,x2^4"), 3, &deg(3, 2)).unwrap(),
        Cell::Dimension(3)
    );
    for j in 0..6 {
        assert!(n_component(&pres(z, "x1^3,x2^7"), 2, &deg(0, j)).unwrap().is_zero());
    }
}

#[test]
fn one_generator_algebra_is_commutative() {
    let p = AlgebraPresentation::parse(1, Ring::Integers, "").unwrap();
    for i in 2..4 {
        let t = n_table(&p, i, 6).unwrap();
        assert!(t.cells.values().all(Cell::is_zero));
    }
}

#[test]
fn commutative_quotient_has_no_higher_terms() {
    let p = pres(Ring::Integers, "x1*x2 - x2*x1");
    for i in 2..4 {
        let t = n_table(&p, i, 6).unwrap();
        assert!(t.cells.values().all(Cell::is_zero), "N_{i}");
    }
    let n1 = n_table(&p, 1, 4).unwrap();
    for t in 0..=4u32 {
        for a in 0..=t {
            assert_eq!(n1.at(a, t - a), Some(&group(1, &[])), "N_1 at ({a},{})", t - a);
        }
    }
}

#[test]
fn transposing_generators_transposes_tables() {
    for ring in [Ring::Integers, Ring::PrimeField(2), Ring::PrimeField(3)] {
        for (m, n) in [(2, 3), (3, 4), (2, 5)] {
            for i in 2..=3 {
                let a = n_table(&pres(ring, &format!("x1^{m},x2^{n}")), i, 8).unwrap();
                let b = n_table(&pres(ring, &format!("x1^{n},x2^{m}")), i, 8).unwrap();
                assert_eq!(a.transpose().cells, b.cells, "{ring} ({m},{n}) N_{i}");
            }
        }
    }
}

#[test]
fn support_of_n2_and_n3() {
    for m in 2..=4u32 {
        for n in 2..=4u32 {
            let p = pres(Ring::Integers, &format!("x1^{m},x2^{n}"));
            let n2 = n_table(&p, 2, m + n + 2).unwrap();
            for (d, c) in &n2.cells {
                if d.degree_in(1) > m || d.degree_in(2) > n {
                    assert!(c.is_zero(), "N2 ({m},{n}) at {d}: {c:?}");
                }
            }
            if m >= 3 && n >= 3 {
                let n3 = n_table(&p, 3, m + n + 3).unwrap();
                for (d, c) in &n3.cells {
                    if d.degree_in(1) > m + 1 || d.degree_in(2) > n + 1 {
                        assert!(c.is_zero(), "N3 ({m},{n}) at {d}: {c:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn engine_agrees_with_literal_spans() {
    let presentations = [
        AlgebraPresentation::free(2),
        pres(Ring::Integers, "x1^2,x2^3"),
        pres(Ring::Integers, "x1*x2 + x2*x1"),
        pres(Ring::Integers, "x1^2*x2 - 2*x2*x1^2, x2^2"),
        pres(Ring::Integers, "x1*x2*x1 - x2*x1^2 + 3*x1^2*x2"),
    ];
    for p in &presentations {
        let mut engine = Engine::new(p.clone()).unwrap();
        for t in 1..=5u32 {
            for d in MultiDegree::with_total(2, t) {
                for i in 1..=4 {
                    let mut fast = engine_lattice(&mut engine, i, &d);
                    let mut slow = literal_lattice(p, i, &d);
                    assert_eq!(
                        hermite_basis(&mut fast),
                        hermite_basis(&mut slow),
                        "M_{i} + I at {d} for {:?}",
                        p.canonical_relations()
                    );
                }
            }
        }
    }
}

#[test]
fn components_agree_with_literal_quotients() {
    let presentations = [
        pres(Ring::Integers, "x1*x2 + x2*x1"),
        pres(Ring::Integers, "x1^2*x2 - 2*x2*x1^2, x2^2"),
        pres(Ring::Integers, "x1^3, x2^2"),
    ];
    for p in &presentations {
        let mut engine = Engine::new(p.clone()).unwrap();
        for t in 1..=5u32 {
            for d in MultiDegree::with_total(2, t) {
                for i in 1..=3 {
                    let top = literal_lattice(p, i, &d);
                    let sub = literal_lattice(p, i + 1, &d);
                    let want = Cell::Group(top.quotient(&sub).unwrap());
                    assert_eq!(engine.component(i, &d).unwrap(), want, "N_{i} at {d}");
                }
            }
        }
    }
}

#[test]
fn spanning_set_examples() {
    let y = parse_element("x1*x2 - x2*x1", 2).unwrap();
    let mut l2 = l_spanning_set(2, &deg(1, 1), 2).lattice();
    let mut want = spanning(2, &deg(1, 1), vec![y.clone()]).lattice();
    assert_eq!(hermite_basis(&mut l2), hermite_basis(&mut want));
    assert_eq!(l_spanning_set(2, &deg(2, 0), 2).lattice().rank(), 0);
    let z1 = bracket(&Element::generator(2, 1), &y);
    let mut l3 = l_spanning_set(3, &deg(2, 1), 2).lattice();
    let mut want = spanning(2, &deg(2, 1), vec![z1]).lattice();
    assert_eq!(hermite_basis(&mut l3), hermite_basis(&mut want));
    assert_eq!(m_spanning_set(2, &deg(2, 1), 2).lattice().rank(), 2);
    assert_eq!(m_spanning_set(3, &deg(1, 1), 2).lattice().rank(), 0);
    let rels = [parse_element("x1^3", 2).unwrap(), parse_element("x2^4", 2).unwrap()];
    assert_eq!(ideal_spanning_set(&rels, &deg(3, 1), 2).lattice().rank(), 2);
}

/// `M_3 M_j` lies in `M_{j+2}` in the free algebra, checked on bases.
#[test]
fn product_of_lcs_ideals() {
    let mut engine = Engine::new(AlgebraPresentation::free(2)).unwrap();
    for j in 1..=3usize {
        for t1 in 3..=6u32 {
            for t2 in 1..=(7 - t1) {
                for d1 in MultiDegree::with_total(2, t1) {
                    let m3 = engine.m_basis(3, &d1).unwrap().unwrap();
                    for d2 in MultiDegree::with_total(2, t2) {
                        let mj = engine.m_basis(j, &d2).unwrap().unwrap();
                        let d = d1.add(&d2);
                        let target = engine_lattice(&mut engine, j + 2, &d);
                        let index: std::collections::HashMap<_, _> = monomials_of_multidegree(2, &d)
                            .into_iter()
                            .enumerate()
                            .map(|(i, w)| (w, i))
                            .collect();
                        for a in &m3 {
                            for b in &mj {
                                let prod = multiply(a, b);
                                let mut v = vec![Int::ZERO; index.len()];
                                for (w, c) in prod.terms() {
                                    v[index[w]] = Int::from(c);
                                }
                                assert!(target.contains(&v), "M3({d1}) M{j}({d2}) escapes M{}", j + 2);
                            }
                        }
                    }
                }
            }
        }
    }
}

fn pow_x1(e: usize) -> Element {
    let mut acc = Element::monomial(2, lcsq::free_algebra::Word::empty(), BigInt::from(1));
    for _ in 0..e {
        acc = multiply(&acc, &Element::generator(2, 1));
    }
    acc
}

/// From `x1^m = 0`: `m x1^{m-1} y - binom(m, 2) x1^{m-2} z1` lies in
/// `M_4 + I` at degree `(m, 1)`.
#[test]
fn power_relation_in_m4_quotient() {
    let x1 = Element::generator(2, 1);
    let y = bracket(&x1, &Element::generator(2, 2));
    let z1 = bracket(&x1, &y);
    for m in 2..=6usize {
        let p = pres(Ring::Integers, &format!("x1^{m},x2^5"));
        let mut engine = Engine::new(p).unwrap();
        let d = deg(m as u32, 1);
        let target = engine_lattice(&mut engine, 4, &d);
        let coords = |e: &Element| -> Vec<Int> {
            let sp = spanning(2, &d, vec![e.clone()]);
            let mat: IntMatrix = sp.coordinate_matrix();
            mat.row(0).iter().map(Int::from).collect()
        };
        let a = multiply(&pow_x1(m - 1), &y).scale(&BigInt::from(m));
        let b = multiply(&pow_x1(m - 2), &z1).scale(&BigInt::from(m * (m - 1) / 2));
        let minus = a.try_sub(&b).unwrap();
        assert!(target.contains(&coords(&minus)), "m = {m}");
        // The same relation with y moved to the right of the power.
        let right = multiply(&y, &pow_x1(m - 1))
            .scale(&BigInt::from(m))
            .try_add(&b)
            .unwrap();
        assert!(target.contains(&coords(&right)), "m = {m}");
        // x1^{m-2} z1 generates a free summand, so the sign matters.
        let plus = a.try_add(&b).unwrap();
        assert!(!target.contains(&coords(&plus)), "m = {m}");
    }
}

#[test]
fn field_dimension_bounds_free_rank() {
    let z = n_table(&pres(Ring::Integers, "x1^3,x2^4"), 3, 9).unwrap();
    for p in [2u64, 3, 5, 7] {
        let fp = n_table(&pres(Ring::PrimeField(p), "x1^3,x2^4"), 3, 9).unwrap();
        for (d, c) in &z.cells {
            let rank = c.group().unwrap().rank as u64;
            let dim = fp.get(d).unwrap().dimension().unwrap();
            assert!(dim >= rank, "F_{p} at {d}: {dim} < {rank}");
            if p >= 5 {
                assert_eq!(dim, rank, "F_{p} at {d}");
            }
        }
    }
}

#[test]
fn guard_leaves_blanks() {
    let p = pres(Ring::Integers, "x1^3,x2^7");
    let t = Engine::new(p).unwrap().with_max_dim(10).table(2, 6).unwrap();
    assert!(t.blank_count() > 0);
    for (d, c) in &t.cells {
        assert_eq!(c.is_blank(), d.monomial_count() > 10, "{d}");
    }
}

/// Every printed table, over its printed range.
#[test]
fn published_tables_reproduced() {
    use common::{parse_published, published};
    let cases: [(&[&str], Ring, &str, usize); 8] = [
        (&published::N2_3_7, Ring::Integers, "x1^3,x2^7", 2),
        (&published::N2_4_6, Ring::Integers, "x1^4,x2^6", 2),
        (&published::N3_3_4, Ring::Integers, "x1^3,x2^4", 3),
        (&published::N3_3_4_F3, Ring::PrimeField(3), "x1^3,x2^4", 3),
        (&published::N3_7_7, Ring::Integers, "x1^7,x2^7", 3),
        (&published::N3_7_7_F7, Ring::PrimeField(7), "x1^7,x2^7", 3),
        (&published::N3_8_8, Ring::Integers, "x1^8,x2^8", 3),
        (&published::N3_8_9, Ring::Integers, "x1^8,x2^9", 3),
    ];
    for (rows, ring, rels, i) in cases {
        let want = parse_published(rows, ring != Ring::Integers);
        let bound = want.keys().map(MultiDegree::total).max().unwrap();
        let got = n_table(&pres(ring, rels), i, bound).unwrap();
        assert_eq!(got.cells.len(), want.len(), "{ring} {rels}");
        for (d, c) in &want {
            assert_eq!(got.get(d), Some(c), "N_{i} of {ring} {rels} at {d}");
        }
    }
}
