//! Oracles and published data shared by the integration tests.
#![allow(dead_code)]

pub mod published;

use std::collections::{BTreeMap, HashSet};

use lcsq::engine::Cell;
use lcsq::free_algebra::MultiDegree;
use lcsq::linalg::{GroupInvariants, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

pub fn matrix(max: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-entry..=entry, c), r)
            .prop_map(move |rows| IntMatrix::from_rows(c, &rows))
    })
}

pub fn det_i64(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => unreachable!(),
    }
}

/// Adjugate, so that `m * adj(m) = det(m) * I`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = sign * det_i64(&minor);
        }
    }
    adj
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum())
                .collect()
        })
        .collect()
}

/// Element-order histogram of a finite abelian group, by brute force over
/// the cyclic factors.
pub fn order_histogram(factors: &[i64]) -> BTreeMap<i64, usize> {
    let mut hist = BTreeMap::new();
    let total: i64 = factors.iter().product();
    for idx in 0..total {
        let mut rest = idx;
        let mut order = 1i64;
        for &d in factors {
            let x = rest % d;
            rest /= d;
            order = order.lcm(&(d / x.gcd(&d)));
        }
        *hist.entry(order).or_default() += 1;
    }
    hist
}

/// Element-order histogram of `span(U) / span(V)` for full-rank square `U`
/// and `V = C U`, by enumerating cosets. A vector `x` lies in `span(V)`
/// exactly when `x adj(V) = 0 mod det V`, which gives each coset a key.
pub fn coset_histogram(u: &[Vec<i64>], v: &[Vec<i64>], index: i64) -> BTreeMap<i64, usize> {
    let n = u.len();
    let det = det_i64(v).abs();
    let adj = adjugate(v);
    let key = |x: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|i| x[i] * adj[i][j]).sum::<i64>().rem_euclid(det))
            .collect()
    };
    let mut cosets = HashSet::new();
    let mut coeffs = vec![0i64; n];
    loop {
        let x: Vec<i64> = (0..n).map(|j| (0..n).map(|i| coeffs[i] * u[i][j]).sum()).collect();
        cosets.insert(key(&x));
        let mut i = 0;
        while i < n {
            coeffs[i] += 1;
            if coeffs[i] < index {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut hist = BTreeMap::new();
    for k in &cosets {
        let order = (1..=index)
            .find(|&t| k.iter().all(|&c| (c * t) % det == 0))
            .expect("coset order divides the index");
        *hist.entry(order).or_default() += 1;
    }
    hist
}

pub fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    square_in(n, 4)
}

pub fn square_in(n: usize, entry: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-entry..=entry, n), n).prop_filter("nonsingular", |m| det_i64(m) != 0)
}

/// One published cell: `{\tiny $0$ }` is zero, `$R$` a rank, and an optional
/// `$(a \cdot b^{k})$` suffix lists elementary divisors. Empty cells were
/// not computed.
fn parse_cell(src: &str, over_field: bool) -> Option<Cell> {
    let src = src.trim();
    if src.trim_matches('$').trim().is_empty() {
        return None;
    }
    let (rank_part, torsion_part) = match src.find("$(") {
        Some(i) => (&src[..i], Some(&src[i + 2..src.rfind(")$").expect("closing torsion")])),
        None => (src, None),
    };
    let rank: usize = if rank_part.contains("\\tiny") {
        0
    } else {
        let start = rank_part.find('$').expect("rank") + 1;
        let end = start + rank_part[start..].find('$').expect("rank");
        rank_part[start..end].trim().parse().expect("rank")
    };
    let mut torsion = Vec::new();
    for term in torsion_part.into_iter().flat_map(|t| t.split("\\cdot")) {
        let term = term.trim();
        let (base, exp) = match term.split_once("^{") {
            Some((b, e)) => (b, e.trim_end_matches('}').parse::<usize>().expect("exponent")),
            None => (term, 1),
        };
        let base: u64 = base.parse().expect("torsion base");
        torsion.extend(std::iter::repeat_n(BigInt::from(base), exp));
    }
    Some(if over_field {
        assert!(torsion.is_empty());
        Cell::Dimension(rank as u64)
    } else {
        Cell::Group(GroupInvariants::from_torsion(rank, torsion))
    })
}

/// Cells of a published LaTeX table, given its body rows `$a$ & ... \\ \hline`.
/// Row labels are the degree in `x1`, columns the degree in `x2`.
pub fn parse_published(rows: &[&str], over_field: bool) -> BTreeMap<MultiDegree, Cell> {
    let mut out = BTreeMap::new();
    for row in rows {
        let body = row.trim().trim_end_matches("\\hline").trim().trim_end_matches("\\\\");
        let mut fields = body.split('&');
        let label = fields.next().expect("row label").trim().trim_matches('$');
        let label = label.trim_start_matches('(').split(',').next().unwrap();
        let a: u32 = label.parse().expect("row label");
        for (b, field) in fields.enumerate() {
            if let Some(c) = parse_cell(field, over_field) {
                out.insert(MultiDegree::new(vec![a, b as u32]), c);
            }
        }
    }
    out
}
