use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::free_algebra::{MultiDegree, Ring};
use crate::linalg::GroupInvariants;

use super::EngineError;

/// One multigraded component of `N_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cell {
    /// Abelian group, for tables over Z.
    Group(GroupInvariants),
    /// Vector-space dimension, for tables over F_p.
    Dimension(u64),
    /// Inside the requested range but skipped by the resource guard.
    Blank,
}

impl Cell {
    pub fn is_blank(&self) -> bool {
        matches!(self, Cell::Blank)
    }

    /// True for a computed zero group or zero space.
    pub fn is_zero(&self) -> bool {
        match self {
            Cell::Group(g) => g.is_trivial(),
            Cell::Dimension(d) => *d == 0,
            Cell::Blank => false,
        }
    }

    pub fn group(&self) -> Option<&GroupInvariants> {
        match self {
            Cell::Group(g) => Some(g),
            _ => None,
        }
    }

    pub fn dimension(&self) -> Option<u64> {
        match self {
            Cell::Dimension(d) => Some(*d),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub ring: Ring,
    pub gens: usize,
    /// Canonical relation strings, sorted.
    pub relations: Vec<String>,
    pub i: usize,
    /// Largest total degree computed.
    pub bound: u32,
}

/// The components of `N_i` for every multidegree of total degree at most
/// `meta.bound`. Degrees past the bound are absent, not zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedTable {
    pub meta: TableMeta,
    #[serde(with = "cell_list")]
    pub cells: BTreeMap<MultiDegree, Cell>,
}

mod cell_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        degree: MultiDegree,
        cell: Cell,
    }

    pub fn serialize<S: Serializer>(cells: &BTreeMap<MultiDegree, Cell>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = cells
            .iter()
            .map(|(d, c)| Entry {
                degree: d.clone(),
                cell: c.clone(),
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<MultiDegree, Cell>, D::Error> {
        let v: Vec<Entry> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|e| (e.degree, e.cell)).collect())
    }
}

impl BigradedTable {
    pub fn new(meta: TableMeta) -> Self {
        BigradedTable {
            meta,
            cells: BTreeMap::new(),
        }
    }

    pub fn get(&self, d: &MultiDegree) -> Option<&Cell> {
        self.cells.get(d)
    }

    /// Two-generator lookup by `(deg x1, deg x2)`.
    pub fn at(&self, a: u32, b: u32) -> Option<&Cell> {
        self.cells.get(&MultiDegree::new(vec![a, b]))
    }

    pub fn blank_count(&self) -> usize {
        self.cells.values().filter(|c| c.is_blank()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.blank_count() == 0
    }

    /// Sum of all cell dimensions; `None` for tables over Z or with blanks.
    pub fn total_dimension(&self) -> Option<u64> {
        self.cells.values().map(Cell::dimension).sum()
    }

    /// Swaps the roles of the two generators.
    pub fn transpose(&self) -> BigradedTable {
        assert_eq!(self.meta.gens, 2, "transpose needs two generators");
        let cells = self
            .cells
            .iter()
            .map(|(d, c)| (MultiDegree::new(vec![d.degree_in(2), d.degree_in(1)]), c.clone()))
            .collect();
        BigradedTable {
            meta: self.meta.clone(),
            cells,
        }
    }
}

/// Coefficient list `c_a = sum of dimensions of cells whose degree in
/// `variable` (1-based) is `a``, for `a = 0 ..= max_power` (default: the
/// table bound). Trailing zeros are trimmed, so the empty table gives `[]`.
pub fn hilbert_series(table: &BigradedTable, variable: usize, max_power: Option<u32>) -> Result<Vec<u64>, EngineError> {
    if variable == 0 || variable > table.meta.gens {
        return Err(EngineError::BadVariable(variable, table.meta.gens));
    }
    let top = max_power.unwrap_or(table.meta.bound);
    let mut coeffs = vec![0u64; top as usize + 1];
    for (d, cell) in &table.cells {
        let a = d.degree_in(variable);
        if a > top {
            continue;
        }
        match cell {
            Cell::Dimension(n) => coeffs[a as usize] += n,
            Cell::Blank => return Err(EngineError::Incomplete(d.clone())),
            Cell::Group(_) => return Err(EngineError::NotOverField),
        }
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}
