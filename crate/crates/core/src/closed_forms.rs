//! Closed-form predictions for `N_2` and `N_3` of `Z<x1, x2>/(x1^m, x2^n)`,
//! the rank-plus-torsion prediction of F_p dimensions from a Z table, and a
//! cell-by-cell diff against computed tables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{BigradedTable, Cell};
use crate::free_algebra::{MultiDegree, Ring};
use crate::linalg::{is_prime, GroupInvariants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("no closed form for (m, n) = ({m}, {n}): {reason}")]
    Regime { m: u32, n: u32, reason: &'static str },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("expected a table over Z, got one over {0}")]
    NotOverIntegers(Ring),
}

/// `k` for odd `k`, `k / 2` for even `k`.
pub fn f(k: u64) -> u64 {
    if k.is_multiple_of(2) {
        k / 2
    } else {
        k
    }
}

/// Where a prediction makes claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// Every degree `d <= corner` componentwise; unlisted cells are zero.
    Box(MultiDegree),
    /// Exactly the listed cells.
    Listed,
}

/// A predicted table. Z predictions hold [`Cell::Group`] entries, F_p
/// predictions [`Cell::Dimension`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedTable {
    pub label: String,
    pub region: Region,
    pub cells: BTreeMap<MultiDegree, Cell>,
}

impl PredictedTable {
    fn boxed(label: String, corner: MultiDegree) -> Self {
        PredictedTable {
            label,
            region: Region::Box(corner),
            cells: BTreeMap::new(),
        }
    }

    fn put(&mut self, a: u32, b: u32, rank: usize, torsion: &[u64]) {
        let g = GroupInvariants::from_torsion(rank, torsion.iter().map(|&t| BigInt::from(t)));
        if !g.is_trivial() {
            self.cells.insert(MultiDegree::new(vec![a, b]), Cell::Group(g));
        }
    }

    pub fn covers(&self, d: &MultiDegree) -> bool {
        match &self.region {
            Region::Box(corner) => d.gens() == corner.gens() && d.le(corner),
            Region::Listed => self.cells.contains_key(d),
        }
    }

    /// The predicted cell at `d`, or `None` outside the region.
    pub fn predicted(&self, d: &MultiDegree) -> Option<Cell> {
        if !self.covers(d) {
            return None;
        }
        Some(
            self.cells
                .get(d)
                .cloned()
                .unwrap_or_else(|| Cell::Group(GroupInvariants::trivial())),
        )
    }

    /// Swaps the two generators.
    pub fn transpose(&self) -> PredictedTable {
        let flip = |d: &MultiDegree| MultiDegree::new(vec![d.degree_in(2), d.degree_in(1)]);
        PredictedTable {
            label: format!("{} (transposed)", self.label),
            region: match &self.region {
                Region::Box(c) => Region::Box(flip(c)),
                Region::Listed => Region::Listed,
            },
            cells: self.cells.iter().map(|(d, c)| (flip(d), c.clone())).collect(),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Predicted `N_2` of `Z<x1, x2>/(x1^m, x2^n)`, for `m, n >= 1`.
pub fn predict_n2(m: u32, n: u32) -> Result<PredictedTable, ClosedFormError> {
    if m == 0 || n == 0 {
        return Err(ClosedFormError::Regime {
            m,
            n,
            reason: "exponents must be positive",
        });
    }
    let (mm, nn) = (m as u64, n as u64);
    let mut t = PredictedTable::boxed(
        format!("N2 closed form, (m, n) = ({m}, {n})"),
        MultiDegree::new(vec![m, n]),
    );
    for i in 1..m {
        for j in 1..n {
            t.put(i, j, 1, &[]);
        }
    }
    for j in 1..n {
        t.put(m, j, 0, &[mm]);
    }
    for i in 1..m {
        t.put(i, n, 0, &[nn]);
    }
    t.put(m, n, 0, &[gcd(mm, nn)]);
    Ok(t)
}

/// Predicted `N_3` of `Z<x1, x2>/(x1^m, x2^n)`, for `m, n >= 3`.
pub fn predict_n3(m: u32, n: u32) -> Result<PredictedTable, ClosedFormError> {
    if m < 3 || n < 3 {
        return Err(ClosedFormError::Regime {
            m,
            n,
            reason: "the N3 closed form needs m, n >= 3; compute small cases directly",
        });
    }
    let (mm, nn) = (m as u64, n as u64);
    let g = gcd(mm, nn);
    let mut t = PredictedTable::boxed(
        format!("N3 closed form, (m, n) = ({m}, {n})"),
        MultiDegree::new(vec![m + 1, n + 1]),
    );
    for j in 2..=n {
        t.put(1, j, 1, &[]);
    }
    t.put(1, n + 1, 0, &[f(nn)]);
    for i in 2..m {
        t.put(i, 1, 1, &[]);
        for j in 2..n {
            t.put(i, j, 3, &[]);
        }
        t.put(i, n, 2, &[nn]);
        t.put(i, n + 1, 0, &[nn, f(nn)]);
    }
    t.put(m, 1, 1, &[]);
    for j in 2..n {
        t.put(m, j, 2, &[mm]);
    }
    t.put(m, n, 0, &[mm, nn]);
    t.put(m, n + 1, 0, &[f(nn), g]);
    t.put(m + 1, 1, 0, &[f(mm)]);
    for j in 2..n {
        t.put(m + 1, j, 0, &[mm, f(mm)]);
    }
    t.put(m + 1, n, 0, &[f(mm), g]);
    t.put(m + 1, n + 1, 0, &[g]);
    Ok(t)
}

/// Predicted F_p dimensions from a Z table: the free rank plus one for each
/// elementary divisor sharing a factor with `p`. Blank cells are skipped.
pub fn predict_fp_from_z(z_table: &BigradedTable, p: u64) -> Result<PredictedTable, ClosedFormError> {
    if !is_prime(p) {
        return Err(ClosedFormError::NotPrime(p));
    }
    if z_table.meta.ring != Ring::Integers {
        return Err(ClosedFormError::NotOverIntegers(z_table.meta.ring));
    }
    let bp = BigInt::from(p);
    let cells = z_table
        .cells
        .iter()
        .filter_map(|(d, c)| {
            let g = c.group()?;
            let extra = g.elementary_divisors().iter().filter(|e| !e.gcd(&bp).is_one()).count();
            Some((d.clone(), Cell::Dimension((g.rank + extra) as u64)))
        })
        .collect();
    Ok(PredictedTable {
        label: format!("F_{p} dimensions predicted from the Z table"),
        region: Region::Listed,
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffStatus {
    Match,
    Mismatch { predicted: Cell, computed: Cell },
    NotComputed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub degree: MultiDegree,
    pub status: DiffStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub label: String,
    pub entries: Vec<DiffEntry>,
    pub matches: usize,
    pub mismatches: usize,
    pub not_computed: usize,
}

impl DiffReport {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }

    pub fn mismatched_degrees(&self) -> Vec<MultiDegree> {
        self.entries
            .iter()
            .filter(|e| matches!(e.status, DiffStatus::Mismatch { .. }))
            .map(|e| e.degree.clone())
            .collect()
    }
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Group(g) => g.to_string(),
        Cell::Dimension(d) => d.to_string(),
        Cell::Blank => "blank".into(),
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.label)?;
        for e in &self.entries {
            if let DiffStatus::Mismatch { predicted, computed } = &e.status {
                writeln!(
                    f,
                    "  mismatch at {}: predicted {}, computed {}",
                    e.degree,
                    cell_text(predicted),
                    cell_text(computed)
                )?;
            }
        }
        write!(
            f,
            "{} match, {} mismatch, {} not computed",
            self.matches, self.mismatches, self.not_computed
        )
    }
}

/// Compares every computed cell inside the prediction's region. Region cells
/// that are blank or beyond the computed bound are reported as not computed.
pub fn diff_tables(computed: &BigradedTable, predicted: &PredictedTable) -> DiffReport {
    let mut entries = Vec::new();
    for (d, c) in &computed.cells {
        let Some(want) = predicted.predicted(d) else {
            continue;
        };
        let status = if c.is_blank() {
            DiffStatus::NotComputed
        } else if same_cell(c, &want) {
            DiffStatus::Match
        } else {
            DiffStatus::Mismatch {
                predicted: want,
                computed: c.clone(),
            }
        };
        entries.push(DiffEntry {
            degree: d.clone(),
            status,
        });
    }
    let beyond: Vec<MultiDegree> = match &predicted.region {
        Region::Box(corner) => corner
            .sub_degrees()
            .into_iter()
            .filter(|d| !computed.cells.contains_key(d))
            .collect(),
        Region::Listed => predicted
            .cells
            .keys()
            .filter(|d| !computed.cells.contains_key(*d))
            .cloned()
            .collect(),
    };
    entries.extend(beyond.into_iter().map(|degree| DiffEntry {
        degree,
        status: DiffStatus::NotComputed,
    }));
    entries.sort_by(|a, b| a.degree.cmp(&b.degree));
    let count = |pred: fn(&DiffStatus) -> bool| entries.iter().filter(|e| pred(&e.status)).count();
    DiffReport {
        label: format!(
            "{} vs computed N{} over {}",
            predicted.label, computed.meta.i, computed.meta.ring
        ),
        matches: count(|s| matches!(s, DiffStatus::Match)),
        mismatches: count(|s| matches!(s, DiffStatus::Mismatch { .. })),
        not_computed: count(|s| matches!(s, DiffStatus::NotComputed)),
        entries,
    }
}

fn same_cell(a: &Cell, b: &Cell) -> bool {
    match (a, b) {
        (Cell::Group(x), Cell::Group(y)) => x.is_isomorphic(y),
        (Cell::Dimension(x), Cell::Dimension(y)) => x == y,
        _ => false,
    }
}

/// Turns a prediction into a table shaped like a computed one, so that it
/// can be diffed against itself or rendered by the emitters.
pub fn as_table(pred: &PredictedTable, meta: crate::engine::TableMeta) -> BigradedTable {
    let mut t = BigradedTable::new(meta);
    let degrees: Vec<MultiDegree> = match &pred.region {
        Region::Box(corner) => corner.sub_degrees(),
        Region::Listed => pred.cells.keys().cloned().collect(),
    };
    for d in degrees {
        if d.total() <= t.meta.bound {
            let c = pred.predicted(&d).expect("degree inside region");
            t.cells.insert(d, c);
        }
    }
    t
}
