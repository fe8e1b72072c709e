use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer that stays inline while it fits in an `i64`.
///
/// Always normalized: `Big` never holds a value representable as `i64`, so
/// the derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    pub fn from_bigint(b: BigInt) -> Int {
        match b.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(Box::new(b)),
        }
    }

    fn from_i128(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(Box::new(BigInt::from(v))),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(s) => BigInt::from(*s),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(s) => s.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(s) => match s.checked_neg() {
                Some(v) => Int::Small(v),
                None => Int::from_bigint(-BigInt::from(*s)),
            },
            Int::Big(b) => Int::from_bigint(-(**b).clone()),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
            return Int::from_i128(*a as i128 + *b as i128);
        }
        Int::from_bigint(self.to_bigint() + o.to_bigint())
    }

    pub fn sub(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
            return Int::from_i128(*a as i128 - *b as i128);
        }
        Int::from_bigint(self.to_bigint() - o.to_bigint())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
            return Int::from_i128(*a as i128 * *b as i128);
        }
        Int::from_bigint(self.to_bigint() * o.to_bigint())
    }

    /// `self - q * r`, the inner-loop operation of every elimination.
    pub fn sub_mul(&self, q: &Int, r: &Int) -> Int {
        if let (Int::Small(a), Int::Small(qq), Int::Small(rr)) = (self, q, r) {
            if let Some(v) = qq.checked_mul(*rr).and_then(|p| a.checked_sub(p)) {
                return Int::Small(v);
            }
            return Int::from_i128(*a as i128 - (*qq as i128) * (*rr as i128));
        }
        Int::from_bigint(self.to_bigint() - q.to_bigint() * r.to_bigint())
    }

    /// Floor division.
    pub fn div_floor(&self, o: &Int) -> Int {
        assert!(!o.is_zero(), "division by zero");
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if !(*a == i64::MIN && *b == -1) {
                return Int::Small(Integer::div_floor(a, b));
            }
        }
        Int::from_bigint(Integer::div_floor(&self.to_bigint(), &o.to_bigint()))
    }

    /// Remainder with the sign of the divisor (pairs with `div_floor`).
    pub fn mod_floor(&self, o: &Int) -> Int {
        assert!(!o.is_zero(), "division by zero");
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if *b != -1 {
                return Int::Small(Integer::mod_floor(a, b));
            }
            return Int::ZERO;
        }
        Int::from_bigint(Integer::mod_floor(&self.to_bigint(), &o.to_bigint()))
    }

    pub fn divides(&self, o: &Int) -> bool {
        if self.is_zero() {
            return o.is_zero();
        }
        o.mod_floor(self).is_zero()
    }

    pub fn cmp_abs(&self, o: &Int) -> Ordering {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_bigint().abs().cmp(&o.to_bigint().abs()),
        }
    }

    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => {
                Int::from_bigint(BigInt::from(Integer::gcd(&(*a as i128), &(*b as i128))))
            }
            _ => Int::from_bigint(self.to_bigint().gcd(&o.to_bigint())),
        }
    }

    /// Residue in `[0, p)` for a small positive modulus.
    pub fn rem_u64(&self, p: u64) -> u64 {
        match self {
            Int::Small(s) => (*s as i128).rem_euclid(p as i128) as u64,
            Int::Big(b) => b.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits"),
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<&BigInt> for Int {
    fn from(v: &BigInt) -> Self {
        Int::from_bigint(v.clone())
    }
}

impl From<Int> for BigInt {
    fn from(v: Int) -> Self {
        match v {
            Int::Small(s) => BigInt::from(s),
            Int::Big(b) => *b,
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(s) => write!(f, "{s}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
    }
}

impl std::ops::Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int::add(&self, &rhs)
    }
}

impl std::ops::Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let big = Int::Small(i64::MAX).add(&Int::ONE);
        assert!(matches!(big, Int::Big(_)));
        let back = big.sub(&Int::ONE);
        assert_eq!(back, Int::Small(i64::MAX));
        let sq = Int::Small(1 << 40).mul(&Int::Small(1 << 40));
        assert_eq!(sq.to_bigint(), BigInt::from(1i128 << 80));
        assert_eq!(Int::Small(i64::MIN).neg().to_bigint(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn floor_semantics() {
        assert_eq!(Int::from(-7).div_floor(&Int::from(2)), Int::from(-4));
        assert_eq!(Int::from(-7).mod_floor(&Int::from(2)), Int::from(1));
        assert!(Int::from(3).divides(&Int::from(-9)));
        assert!(!Int::from(0).divides(&Int::from(1)));
    }

    proptest! {
        #[test]
        fn agrees_with_bigint(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let (ia, ib, ic) = (Int::from(a), Int::from(b), Int::from(c));
            let (ba, bb, bc) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
            prop_assert_eq!(ia.add(&ib).to_bigint(), &ba + &bb);
            prop_assert_eq!(ia.sub(&ib).to_bigint(), &ba - &bb);
            prop_assert_eq!(ia.mul(&ib).to_bigint(), &ba * &bb);
            prop_assert_eq!(ia.sub_mul(&ib, &ic).to_bigint(), &ba - &bb * &bc);
            if b != 0 {
                prop_assert_eq!(ia.div_floor(&ib).to_bigint(), Integer::div_floor(&ba, &bb));
                prop_assert_eq!(ia.mod_floor(&ib).to_bigint(), Integer::mod_floor(&ba, &bb));
            }
            prop_assert_eq!(ia.gcd(&ib).to_bigint(), ba.gcd(&bb));
            prop_assert_eq!(ia.cmp_abs(&ib), ba.abs().cmp(&bb.abs()));
        }
    }
}
