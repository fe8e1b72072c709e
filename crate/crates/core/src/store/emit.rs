//! Text, CSV and LaTeX renderings of a [`BigradedTable`].
//!
//! Cells follow the printed `R, (T)` convention: the free rank, then the
//! torsion in parentheses as prime powers joined by `·` with exponents for
//! repeats (`(2 · 3^{2})`). Trivial computed cells print as a small zero and
//! uncomputed cells stay blank.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::engine::{BigradedTable, Cell, TableMeta};
use crate::free_algebra::{MultiDegree, Ring};
use crate::linalg::GroupInvariants;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("line {line}: {msg}")]
    Csv { line: usize, msg: String },
}

pub fn emit(table: &BigradedTable, format: Format) -> String {
    match format {
        Format::Text => to_text(table),
        Format::Csv => to_csv(table),
        Format::Latex => to_latex(table),
    }
}

/// Plain-text cell: `0` for trivial, `R`, `R (T)`, empty for blank.
pub fn cell_text(cell: &Cell) -> String {
    match cell {
        Cell::Blank => String::new(),
        Cell::Dimension(d) => d.to_string(),
        Cell::Group(g) => g.to_string(),
    }
}

pub fn cell_latex(cell: &Cell) -> String {
    const SMALL_ZERO: &str = "{\\tiny $0$ }";
    match cell {
        Cell::Blank => String::new(),
        Cell::Dimension(0) => SMALL_ZERO.into(),
        Cell::Dimension(d) => format!("${d}$"),
        Cell::Group(g) => {
            let rank = if g.rank == 0 {
                SMALL_ZERO.to_string()
            } else {
                format!("${}$", g.rank)
            };
            if g.has_torsion() {
                format!("{rank}{{  $({})$}}", g.torsion_label(" \\cdot "))
            } else {
                rank
            }
        }
    }
}

fn title(meta: &TableMeta) -> String {
    let ring = match meta.ring {
        Ring::Integers => "Z".to_string(),
        Ring::PrimeField(p) => format!("F_{p}"),
    };
    let gens: Vec<String> = (1..=meta.gens).map(|g| format!("x{g}")).collect();
    let mut algebra = format!("{ring}<{}>", gens.join(", "));
    if !meta.relations.is_empty() {
        algebra.push_str(&format!("/({})", meta.relations.join(", ")));
    }
    format!("N_{} of {algebra}, total degree <= {}", meta.i, meta.bound)
}

pub fn to_text(table: &BigradedTable) -> String {
    let mut out = String::new();
    writeln!(out, "{}", title(&table.meta)).unwrap();
    if table.meta.gens != 2 {
        for (d, c) in &table.cells {
            writeln!(out, "{d}: {}", cell_text(c)).unwrap();
        }
        return out;
    }
    let b = table.meta.bound;
    let mut grid = vec![vec![String::new(); b as usize + 2]; b as usize + 2];
    grid[0][0] = "(a,b)".into();
    for t in 0..=b {
        grid[0][t as usize + 1] = t.to_string();
        grid[t as usize + 1][0] = t.to_string();
    }
    for (d, c) in &table.cells {
        grid[d.degree_in(1) as usize + 1][d.degree_in(2) as usize + 1] = cell_text(c);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}", w = *w))
            .collect();
        writeln!(out, "{}", line.join(" | ").trim_end()).unwrap();
    }
    out
}

pub fn to_latex(table: &BigradedTable) -> String {
    let mut out = String::new();
    let meta = &table.meta;
    let b = meta.bound as usize;
    writeln!(out, "\\begin{{table}} [H]").unwrap();
    writeln!(out, "\\footnotesize").unwrap();
    writeln!(out, "\\caption{{{}}}", latex_caption(meta)).unwrap();
    if meta.gens != 2 {
        writeln!(out, "\\begin{{tabular}}{{|l|l|}}\n\\hline").unwrap();
        for (d, c) in &table.cells {
            writeln!(out, "${d}$ & {} \\\\ \\hline", cell_latex(c)).unwrap();
        }
    } else {
        writeln!(out, "\\begin{{tabular}} {{|l||{}}}", "l|".repeat(b + 1)).unwrap();
        writeln!(out, "\\hline").unwrap();
        let header: Vec<String> = (0..=b).map(|t| format!("${t}$")).collect();
        writeln!(out, "$(m,n)$ & {} \\\\ \\hline \\hline", header.join(" & ")).unwrap();
        for a in 0..=b as u32 {
            let cells: Vec<String> = (0..=b as u32)
                .map(|c| table.at(a, c).map(cell_latex).unwrap_or_default())
                .collect();
            writeln!(out, "${a}$ &{} \\\\ \\hline", cells.join(" & ")).unwrap();
        }
    }
    writeln!(out, "\\end{{tabular}}").unwrap();
    writeln!(out, "\\end{{table}}").unwrap();
    out
}

fn latex_caption(meta: &TableMeta) -> String {
    let ring = match meta.ring {
        Ring::Integers => "\\mathbb{Z}".to_string(),
        Ring::PrimeField(p) => format!("\\mathbb{{Z}}_{{{p}}}"),
    };
    let gens: Vec<String> = (1..=meta.gens).map(|g| format!("x_{g}")).collect();
    let rels: Vec<String> = meta
        .relations
        .iter()
        .map(|r| r.replace('*', "").replace('x', "x_"))
        .collect();
    format!(
        "$N_{}:\\ {ring} \\langle {} \\rangle /({})$",
        meta.i,
        gens.join(","),
        rels.join(",")
    )
}

pub fn to_csv(table: &BigradedTable) -> String {
    let mut out = format!("# {}\n", serde_json::to_string(&table.meta).expect("meta serializes"));
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=table.meta.gens).map(|g| format!("deg_x{g}")).collect();
    header.extend(["rank".to_string(), "torsion".to_string()]);
    w.write_record(&header).expect("in-memory write");
    for (d, c) in &table.cells {
        let mut record: Vec<String> = d.degrees().iter().map(u32::to_string).collect();
        let (rank, torsion) = match c {
            Cell::Blank => (String::new(), String::new()),
            Cell::Dimension(n) => (n.to_string(), String::new()),
            Cell::Group(g) => (
                g.rank.to_string(),
                g.elementary_divisors()
                    .iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
            ),
        };
        record.extend([rank, torsion]);
        w.write_record(&record).expect("in-memory write");
    }
    let body = w.into_inner().expect("in-memory flush");
    out.push_str(std::str::from_utf8(&body).expect("csv output is utf-8"));
    out
}

/// Parses the output of [`to_csv`]: a `#` line with the table metadata as
/// JSON, a header, then one record per cell.
pub fn parse_csv(src: &str) -> Result<BigradedTable, EmitError> {
    let err = |line: usize, msg: String| EmitError::Csv { line, msg };
    let first = src.lines().next().unwrap_or_default();
    let meta_json = first
        .strip_prefix('#')
        .ok_or_else(|| err(1, "missing metadata line".into()))?;
    let meta: TableMeta = serde_json::from_str(meta_json.trim()).map_err(|e| err(1, e.to_string()))?;
    let mut table = BigradedTable::new(meta);
    let k = table.meta.gens;
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(src.as_bytes());
    for rec in reader.records() {
        let rec = rec.map_err(|e| err(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() != k + 2 {
            return Err(err(line, format!("expected {} fields, got {}", k + 2, rec.len())));
        }
        let degs = (0..k)
            .map(|j| rec[j].parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(line, e.to_string()))?;
        let (rank, torsion) = (&rec[k], &rec[k + 1]);
        let cell = if rank.is_empty() {
            Cell::Blank
        } else {
            let r: usize = rank
                .parse()
                .map_err(|e: std::num::ParseIntError| err(line, e.to_string()))?;
            match table.meta.ring {
                Ring::PrimeField(_) => Cell::Dimension(r as u64),
                Ring::Integers => {
                    let orders = torsion
                        .split(';')
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse::<BigInt>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| err(line, e.to_string()))?;
                    if orders.iter().any(|o| o <= &BigInt::from(0)) {
                        return Err(err(line, "torsion orders must be positive".into()));
                    }
                    Cell::Group(GroupInvariants::from_torsion(r, orders))
                }
            }
        };
        table.cells.insert(MultiDegree::new(degs), cell);
    }
    Ok(table)
}
