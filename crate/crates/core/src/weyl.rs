//! Divided-power operators over `F_p` on truncated polynomial modules
//! `k[x]/(x^{p^n})`, and numeric checks of dimension and Hilbert-series
//! divisibility on computed tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{hilbert_series, BigradedTable, Cell, EngineError};
use crate::free_algebra::{parse_element, AlgebraError, Ring};
use crate::linalg::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("module size p^n = {p}^{n} is too large")]
    TooLarge { p: u64, n: u32 },
    #[error("D_{j} is not defined on k[x]/(x^{size})")]
    InvalidOperator { j: u64, size: u64 },
    #[error("operands live on different modules")]
    ModuleMismatch,
    #[error("{0}")]
    OutOfScope(String),
    #[error("table must be over a prime field")]
    NotOverField,
    #[error("expected {expected} exponents, got {found}")]
    ExponentCount { expected: usize, found: usize },
    #[error("relation `{relation}` is not a polynomial in x{gen}^{power}")]
    NotPowerRelation { relation: String, gen: usize, power: u64 },
    #[error("table is incomplete: {0}")]
    Incomplete(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn module_size(p: u64, n: u32) -> Result<usize, WeylError> {
    if !is_prime(p) {
        return Err(WeylError::NotPrime(p));
    }
    match p.checked_pow(n) {
        Some(s) if s <= 1 << 16 => Ok(s as usize),
        _ => Err(WeylError::TooLarge { p, n }),
    }
}

/// `binom(m, r) mod p` as the product of digit-wise binomials in base `p`.
pub fn lucas_binomial(mut m: u64, mut r: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while r > 0 || m > 0 {
        let (mi, ri) = (m % p, r % p);
        if ri > mi {
            return 0;
        }
        acc = acc * small_binomial(mi, ri, p) % p;
        m /= p;
        r /= p;
    }
    acc % p
}

fn small_binomial(m: u64, r: u64, p: u64) -> u64 {
    // m < p, so every factor below is a unit mod p
    let mut num = 1u64;
    let mut den = 1u64;
    for t in 0..r {
        num = num * ((m - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    num * inv(den, p) % p
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn factorial_mod(a: u64, p: u64) -> u64 {
    (1..=a).fold(1u64, |acc, t| acc * (t % p) % p)
}

/// An element of `k[x]/(x^{p^n})` with `k = F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    p: u64,
    n: u32,
    coeffs: Vec<u64>,
}

impl TruncatedPoly {
    /// Coefficients beyond `x^{p^n - 1}` must be absent; values are reduced
    /// mod `p`.
    pub fn new(p: u64, n: u32, mut coeffs: Vec<u64>) -> Result<Self, WeylError> {
        let size = module_size(p, n)?;
        if coeffs.len() > size {
            return Err(WeylError::OutOfScope(format!(
                "{} coefficients do not fit in k[x]/(x^{size})",
                coeffs.len()
            )));
        }
        coeffs.resize(size, 0);
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        Ok(TruncatedPoly { p, n, coeffs })
    }

    pub fn zero(p: u64, n: u32) -> Result<Self, WeylError> {
        TruncatedPoly::new(p, n, Vec::new())
    }

    /// The basis vector `x^a`.
    pub fn monomial(p: u64, n: u32, a: usize) -> Result<Self, WeylError> {
        let mut v = TruncatedPoly::zero(p, n)?;
        if a >= v.coeffs.len() {
            return Err(WeylError::OutOfScope(format!(
                "x^{a} is zero in k[x]/(x^{})",
                v.coeffs.len()
            )));
        }
        v.coeffs[a] = 1;
        Ok(v)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(a, c)| match a {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{a}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Operators of the divided-power Weyl algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DividedPowerOp {
    MultiplyByX,
    /// `D_j = D^j / j!`, acting by `x^a -> binom(a, j) x^{a-j}`.
    Divided(u64),
    /// Product `A_1 A_2 ... A_r`: the rightmost factor acts first.
    Compose(Vec<DividedPowerOp>),
}

impl DividedPowerOp {
    pub fn compose(ops: Vec<DividedPowerOp>) -> Self {
        DividedPowerOp::Compose(ops)
    }

    /// `x^e` as a composite.
    pub fn x_power(e: usize) -> Self {
        DividedPowerOp::Compose(vec![DividedPowerOp::MultiplyByX; e])
    }
}

/// Applies `op` to `v`.
pub fn apply(op: &DividedPowerOp, v: &TruncatedPoly) -> Result<TruncatedPoly, WeylError> {
    let size = v.size();
    let p = v.p;
    match op {
        DividedPowerOp::MultiplyByX => {
            let mut out = vec![0; size];
            out[1..].copy_from_slice(&v.coeffs[..size - 1]);
            Ok(TruncatedPoly {
                coeffs: out,
                ..v.clone()
            })
        }
        DividedPowerOp::Divided(j) => {
            let j = *j;
            if j >= size as u64 {
                return Err(WeylError::InvalidOperator { j, size: size as u64 });
            }
            let j = j as usize;
            let mut out = vec![0; size];
            for a in j..size {
                if v.coeffs[a] != 0 {
                    out[a - j] = v.coeffs[a] * lucas_binomial(a as u64, j as u64, p) % p;
                }
            }
            Ok(TruncatedPoly {
                coeffs: out,
                ..v.clone()
            })
        }
        DividedPowerOp::Compose(ops) => {
            let mut cur = v.clone();
            for o in ops.iter().rev() {
                cur = apply(o, &cur)?;
            }
            Ok(cur)
        }
    }
}

/// Square matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    size: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(p: u64, size: usize) -> Self {
        FpMatrix {
            p,
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(p: u64, size: usize) -> Self {
        let mut m = FpMatrix::zero(p, size);
        for i in 0..size {
            m.data[i * size + i] = 1 % p;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.size + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, s: u64) -> FpMatrix {
        let p = self.p;
        FpMatrix {
            data: self.data.iter().map(|&x| x * (s % p) % p).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &FpMatrix) -> FpMatrix {
        let p = self.p;
        FpMatrix {
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| (a + p - b) % p).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.size, o.size);
        let (n, p) = (self.size, self.p);
        let mut out = FpMatrix::zero(p, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = o.data[k * n + j];
                    if b != 0 {
                        let slot = &mut out.data[i * n + j];
                        *slot = (*slot + a * b) % p;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// `ab - ba`.
pub fn commutator(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    a.mul(b).sub(&b.mul(a))
}

/// Matrix of `op` on `k[x]/(x^{p^n})`; column `a` is the image of `x^a`.
pub fn operator_matrix(op: &DividedPowerOp, p: u64, n: u32) -> Result<FpMatrix, WeylError> {
    let size = module_size(p, n)?;
    match op {
        DividedPowerOp::Compose(ops) => {
            let mut acc = FpMatrix::identity(p, size);
            for o in ops {
                acc = acc.mul(&operator_matrix(o, p, n)?);
            }
            Ok(acc)
        }
        _ => {
            let mut m = FpMatrix::zero(p, size);
            for a in 0..size {
                let image = apply(op, &TruncatedPoly::monomial(p, n, a)?)?;
                for (b, &c) in image.coeffs.iter().enumerate() {
                    m.data[b * size + a] = c;
                }
            }
            Ok(m)
        }
    }
}

fn d_matrix(j: u64, p: u64, n: u32) -> Result<FpMatrix, WeylError> {
    operator_matrix(&DividedPowerOp::Divided(j), p, n)
}

/// Outcome of one operator identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status}  {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, "  ({})", self.detail)?;
        }
        Ok(())
    }
}

fn report(name: String, passed: bool, detail: String) -> CheckReport {
    CheckReport { name, passed, detail }
}

/// `D_j D_r = binom(j + r, j) D_{j+r}` on `k[x]/(x^{p^n})`, for `j + r < p^n`.
pub fn verify_composition(j: u64, r: u64, p: u64, n: u32) -> Result<CheckReport, WeylError> {
    let lhs = d_matrix(j, p, n)?.mul(&d_matrix(r, p, n)?);
    let c = lucas_binomial(j + r, j, p);
    let rhs = d_matrix(j + r, p, n)?.scale(c);
    Ok(report(
        format!("D_{j} D_{r} = binom({}, {j}) D_{} (p={p}, n={n})", j + r, j + r),
        lhs == rhs,
        format!("binomial = {c} mod {p}"),
    ))
}

/// `C D_a = prod_s (D_{p^s})^{a_s}` where `a = sum a_s p^s` and
/// `C = prod a_s!`, as operators on `k[x]/(x^{p^n})`.
pub fn verify_decomposition(a: u64, p: u64, n: u32) -> Result<CheckReport, WeylError> {
    let size = module_size(p, n)? as u64;
    if a >= size {
        return Err(WeylError::InvalidOperator { j: a, size });
    }
    let mut digits = Vec::new();
    let mut rest = a;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    let c = digits.iter().fold(1u64, |acc, &d| acc * factorial_mod(d, p) % p);
    let mut rhs = FpMatrix::identity(p, size as usize);
    let mut ps = 1u64;
    for &d in &digits {
        rhs = rhs.mul(&d_matrix(ps, p, n)?.pow(d));
        ps *= p;
    }
    let lhs = d_matrix(a, p, n)?.scale(c);
    Ok(report(
        format!("C D_{a} = prod (D_(p^s))^(a_s) (p={p}, n={n})"),
        lhs == rhs && c != 0,
        format!("digits {digits:?}, C = {c}"),
    ))
}

/// `(D_j)^p = 0` on `k[x]/(x^{p^n})`, for `1 <= j < p^n`.
pub fn verify_nilpotent(j: u64, p: u64, n: u32) -> Result<CheckReport, WeylError> {
    if j == 0 {
        return Err(WeylError::OutOfScope(
            "D_0 is the identity; nilpotence concerns j >= 1".into(),
        ));
    }
    let m = d_matrix(j, p, n)?;
    Ok(report(
        format!("(D_{j})^{p} = 0 (p={p}, n={n})"),
        m.pow(p).is_zero(),
        String::new(),
    ))
}

/// `[D_{p^i}, x^{p^n}] = 0` for every `i < n`, tested on `k[x]/(x^{p^{n+1}})`
/// where `x^{p^n}` acts nontrivially.
pub fn verify_central(p: u64, n: u32) -> Result<CheckReport, WeylError> {
    if n == 0 {
        return Err(WeylError::OutOfScope("centrality needs n >= 1".into()));
    }
    let size = module_size(p, n + 1)?;
    let x = operator_matrix(&DividedPowerOp::MultiplyByX, p, n + 1)?;
    let xpn = x.pow(p.pow(n));
    debug_assert!(!xpn.is_zero() && size > p.pow(n) as usize);
    let mut failures = Vec::new();
    for i in 0..n {
        let d = d_matrix(p.pow(i), p, n + 1)?;
        if !commutator(&d, &xpn).is_zero() {
            failures.push(format!("D_{}", p.pow(i)));
        }
    }
    Ok(report(
        format!("[D_(p^i), x^{}] = 0 for i < {n} on k[x]/(x^{size}) (p={p})", p.pow(n)),
        failures.is_empty(),
        if failures.is_empty() {
            String::new()
        } else {
            format!("non-central: {}", failures.join(", "))
        },
    ))
}

/// `[D_1, x] = 1` on `k[x]/(x^{p^n})`.
pub fn verify_weyl_relation(p: u64, n: u32) -> Result<CheckReport, WeylError> {
    let d1 = d_matrix(1, p, n)?;
    let x = operator_matrix(&DividedPowerOp::MultiplyByX, p, n)?;
    let size = d1.size();
    Ok(report(
        format!("[D_1, x] = 1 (p={p}, n={n})"),
        commutator(&d1, &x) == FpMatrix::identity(p, size),
        String::new(),
    ))
}

/// Every operator identity for one `(p, n)`: composition law, decomposition,
/// nilpotence, centrality and the Weyl relation.
pub fn weyl_suite(p: u64, n: u32) -> Result<Vec<CheckReport>, WeylError> {
    let size = module_size(p, n)? as u64;
    let mut out = Vec::new();
    for j in 0..size {
        for r in 0..size - j {
            out.push(verify_composition(j, r, p, n)?);
        }
    }
    for a in 0..size {
        out.push(verify_decomposition(a, p, n)?);
    }
    for j in 1..size {
        out.push(verify_nilpotent(j, p, n)?);
    }
    if n >= 1 {
        out.push(verify_central(p, n)?);
    }
    out.push(verify_weyl_relation(p, n)?);
    Ok(out)
}

// ---- dimension and series divisibility ----

/// True when the two outermost total-degree bands of `table` are zero and no
/// cell is blank: the computed range has visibly run past the support.
pub fn appears_complete(table: &BigradedTable) -> bool {
    let b = table.meta.bound;
    table
        .cells
        .iter()
        .all(|(d, c)| !c.is_blank() && (d.total() + 1 < b || c.is_zero()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub p: u64,
    pub exps: Vec<u32>,
    pub total: u64,
    pub modulus: u64,
    pub quotient: u64,
    pub remainder: u64,
    pub passed: bool,
}

impl fmt::Display for DivisibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{status}  total dimension {} = {} * {} + {} (p = {}, exps = {:?})",
            self.total, self.modulus, self.quotient, self.remainder, self.p, self.exps
        )
    }
}

/// Checks that every run of `x_j` in every relation word has length
/// divisible by `p^{n_j}`.
pub fn check_power_relations(relations: &[String], gens: usize, p: u64, exps: &[u32]) -> Result<(), WeylError> {
    if exps.len() != gens {
        return Err(WeylError::ExponentCount {
            expected: gens,
            found: exps.len(),
        });
    }
    for rel in relations {
        let e = parse_element(rel, gens)?;
        for (j, &nj) in exps.iter().enumerate() {
            let power = p.pow(nj);
            for w in e.terms().keys() {
                if w.runs_of(j as u8 + 1)
                    .iter()
                    .any(|&r| !(r as u64).is_multiple_of(power))
                {
                    return Err(WeylError::NotPowerRelation {
                        relation: rel.clone(),
                        gen: j + 1,
                        power,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Total dimension of an F_p table modulo `p^{sum n_j}`.
pub fn check_dim_divisibility(table: &BigradedTable, exps: &[u32]) -> Result<DivisibilityReport, WeylError> {
    let Ring::PrimeField(p) = table.meta.ring else {
        return Err(WeylError::NotOverField);
    };
    check_power_relations(&table.meta.relations, table.meta.gens, p, exps)?;
    if !appears_complete(table) {
        return Err(WeylError::Incomplete(format!(
            "components at total degree {} or {} are blank or nonzero; raise the degree bound",
            table.meta.bound.saturating_sub(1),
            table.meta.bound
        )));
    }
    let total = table.total_dimension().ok_or(WeylError::NotOverField)?;
    let modulus = p.pow(exps.iter().sum());
    Ok(DivisibilityReport {
        p,
        exps: exps.to_vec(),
        total,
        modulus,
        quotient: total / modulus,
        remainder: total % modulus,
        passed: total % modulus == 0,
    })
}

/// Result of dividing a series by `1 + X + ... + X^{q-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDivision {
    pub divisor_degree: u64,
    pub quotient: Vec<i128>,
    pub remainder_zero: bool,
    pub nonnegative: bool,
    /// Whether only a prefix of the series was known.
    pub truncated: bool,
}

impl SeriesDivision {
    pub fn success(&self) -> bool {
        self.remainder_zero && self.nonnegative
    }
}

impl fmt::Display for SeriesDivision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.success() { "pass" } else { "FAIL" };
        write!(f, "{status}  quotient {}", render_series(&self.quotient))?;
        if self.truncated {
            write!(f, " + O(X^{})", self.quotient.len())?;
        }
        if !self.remainder_zero {
            write!(f, ", nonzero remainder")?;
        }
        if !self.nonnegative {
            write!(f, ", negative coefficient")?;
        }
        Ok(())
    }
}

pub fn render_series<T: fmt::Display + PartialEq + Default>(coeffs: &[T]) -> String {
    let zero = T::default();
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != zero)
        .map(|(a, c)| match a {
            0 => c.to_string(),
            1 => format!("{c}X"),
            _ => format!("{c}X^{a}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn divisor_len(p: u64, exps: &[u32], variable: usize) -> Result<u64, WeylError> {
    if variable == 0 || variable > exps.len() {
        return Err(WeylError::Engine(EngineError::BadVariable(variable, exps.len())));
    }
    Ok(p.pow(exps[variable - 1]))
}

/// Exact polynomial division of `series` by `1 + X + ... + X^{p^{n_v} - 1}`,
/// where `n_v = exps[variable - 1]`.
pub fn series_divide(series: &[u64], p: u64, exps: &[u32], variable: usize) -> Result<SeriesDivision, WeylError> {
    let q = divisor_len(p, exps, variable)? as usize;
    let mut rem: Vec<i128> = series.iter().map(|&c| c as i128).collect();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    let mut quotient = Vec::new();
    if rem.len() >= q {
        quotient = vec![0i128; rem.len() - q + 1];
        for a in (0..quotient.len()).rev() {
            let c = rem[a + q - 1];
            quotient[a] = c;
            for t in 0..q {
                rem[a + t] -= c;
            }
        }
    }
    let remainder_zero = rem.iter().all(|&c| c == 0);
    Ok(SeriesDivision {
        divisor_degree: q as u64 - 1,
        nonnegative: quotient.iter().all(|&c| c >= 0),
        quotient,
        remainder_zero,
        truncated: false,
    })
}

/// Power-series division when only the first `series.len()` coefficients
/// are known. The quotient is determined up to the same order.
pub fn series_divide_truncated(
    series: &[u64],
    p: u64,
    exps: &[u32],
    variable: usize,
) -> Result<SeriesDivision, WeylError> {
    let q = divisor_len(p, exps, variable)? as usize;
    let s: Vec<i128> = series.iter().map(|&c| c as i128).collect();
    let mut quotient = vec![0i128; s.len()];
    for a in 0..s.len() {
        let lower: i128 = (a.saturating_sub(q - 1)..a).map(|t| quotient[t]).sum();
        quotient[a] = s[a] - lower;
    }
    Ok(SeriesDivision {
        divisor_degree: q as u64 - 1,
        nonnegative: quotient.iter().all(|&c| c >= 0),
        quotient,
        remainder_zero: true,
        truncated: true,
    })
}

/// Length of the prefix of the series in `variable` whose coefficients can
/// no longer change: every row up to it has a zero cell at the bound.
pub fn settled_prefix(table: &BigradedTable, variable: usize) -> usize {
    let b = table.meta.bound;
    let mut len = 0;
    for a in 0..=b {
        let settled = table
            .cells
            .iter()
            .filter(|(d, _)| d.degree_in(variable) == a)
            .all(|(d, c)| !c.is_blank() && (d.total() < b || c.is_zero()));
        if !settled {
            break;
        }
        len = a as usize + 1;
    }
    len
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub variable: usize,
    pub series: Vec<u64>,
    pub division: SeriesDivision,
    /// Each known coefficient is divisible by `p^{n_v}`.
    pub coefficients_divisible: bool,
}

impl HilbertReport {
    pub fn passed(&self) -> bool {
        self.division.success()
    }
}

impl fmt::Display for HilbertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let series: Vec<i128> = self.series.iter().map(|&c| c as i128).collect();
        write!(f, "series in x{}: {}", self.variable, render_series(&series))?;
        if self.division.truncated {
            write!(f, " + O(X^{})", self.series.len())?;
        }
        write!(f, "\n{}", self.division)
    }
}

/// Hilbert series of an F_p table in one variable, divided by
/// `1 + X + ... + X^{p^{n_v} - 1}`. When the table does not visibly cover
/// the whole support, only the settled prefix is used.
pub fn check_hilbert(table: &BigradedTable, variable: usize, exps: &[u32]) -> Result<HilbertReport, WeylError> {
    let Ring::PrimeField(p) = table.meta.ring else {
        return Err(WeylError::NotOverField);
    };
    if table.cells.values().any(|c| matches!(c, Cell::Group(_))) {
        return Err(WeylError::NotOverField);
    }
    let series = hilbert_series(table, variable, None)?;
    let power = divisor_len(p, exps, variable)?;
    let (series, division) = if appears_complete(table) {
        let d = series_divide(&series, p, exps, variable)?;
        (series, d)
    } else {
        let len = settled_prefix(table, variable);
        if len == 0 {
            return Err(WeylError::Incomplete(
                "no settled coefficient; raise the degree bound".into(),
            ));
        }
        let mut prefix = series;
        prefix.resize(len, 0);
        let d = series_divide_truncated(&prefix, p, exps, variable)?;
        (prefix, d)
    };
    Ok(HilbertReport {
        variable,
        coefficients_divisible: series.iter().all(|&c| c % power == 0),
        series,
        division,
    })
}
