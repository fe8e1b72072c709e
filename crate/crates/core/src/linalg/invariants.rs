use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Free rank plus torsion invariant factors `d1 | d2 | ... | dr`, all `> 1`.
///
/// Invariant factor chains are canonical, so two values are isomorphic as
/// abelian groups exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl GroupInvariants {
    pub fn trivial() -> Self {
        GroupInvariants {
            rank: 0,
            factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        GroupInvariants {
            rank,
            factors: Vec::new(),
        }
    }

    /// From an arbitrary list of cyclic orders `Z_{n1} + Z_{n2} + ...`.
    /// Orders equal to 1 are dropped; zero or negative orders are rejected.
    pub fn from_torsion<I>(rank: usize, orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let mut by_prime: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for o in orders {
            let o: BigInt = o.into();
            assert!(o.is_positive(), "cyclic order must be positive, got {o}");
            for (p, e) in factorize(&o) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        // factors[len-1] collects the largest power of each prime, and so on down.
        let mut factors = vec![BigInt::one(); len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                factors[len - 1 - i] *= num_traits::pow(p.clone(), e as usize);
            }
        }
        GroupInvariants { rank, factors }
    }

    /// From a list already forming a divisibility chain (as produced by a
    /// Smith normal form); unit entries are stripped.
    pub fn from_invariant_factors(rank: usize, factors: Vec<BigInt>) -> Self {
        let factors: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        GroupInvariants { rank, factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.factors.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        !self.factors.is_empty()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.factors.iter().product()
    }

    /// Prime-power multiset of the torsion, sorted ascending by value.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self
            .factors
            .iter()
            .flat_map(|d| factorize(d).into_iter())
            .map(|(p, e)| num_traits::pow(p, e as usize))
            .collect();
        out.sort();
        out
    }

    pub fn is_isomorphic(&self, other: &GroupInvariants) -> bool {
        self == other
    }

    /// Torsion in the printed `R, (T)` style, e.g. `3 · 4` or `3^{2}`.
    pub fn torsion_label(&self, sep: &str) -> String {
        let divs = self.elementary_divisors();
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < divs.len() {
            let mut j = i;
            while j < divs.len() && divs[j] == divs[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(divs[i].to_string());
            } else {
                parts.push(format!("{}^{{{}}}", divs[i], j - i));
            }
            i = j;
        }
        parts.join(sep)
    }
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.has_torsion() {
            return write!(f, "{}", self.rank);
        }
        write!(f, "{} ({})", self.rank, self.torsion_label(" · "))
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let n = n.abs();
    if let Some(small) = n.to_u64() {
        return factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if rest > BigInt::one() {
        out.push((rest, 1));
    }
    out
}

pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && factorize_u64(p) == vec![(p, 1)]
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
