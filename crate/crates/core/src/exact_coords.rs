//! Exact coordinates: big rationals and the symbolic infinitesimal offset.
//!
//! An [`EpsCoord`] is `base + eps * ε` for a positive infinitesimal `ε`.
//! Nothing here ever picks a numeric value for `ε`; that only happens when a
//! codeword is decoded back into geometry.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a decimal literal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("bad number `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Formats a rational as `p` or `p/q`, the form `parse_rational` reads back.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `⌊r⌋` as a big integer.
pub fn floor_int(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil_int(r: &Rational) -> BigInt {
    -(-r.numer()).div_floor(r.denom())
}

/// A point of the coordinate set `{x + m, x + m ± ε}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsCoord {
    pub base: Rational,
    pub eps: i8,
}

impl EpsCoord {
    pub fn new(base: Rational, eps: i8) -> Self {
        debug_assert!((-1..=1).contains(&eps));
        EpsCoord { base, eps }
    }

    pub fn exact(base: Rational) -> Self {
        EpsCoord { base, eps: 0 }
    }

    pub fn plus_eps(&self) -> Self {
        EpsCoord::new(self.base.clone(), self.eps + 1)
    }

    pub fn minus_eps(&self) -> Self {
        EpsCoord::new(self.base.clone(), self.eps - 1)
    }

    pub fn shift(&self, k: &BigInt) -> Self {
        EpsCoord { base: &self.base + Rational::from_integer(k.clone()), eps: self.eps }
    }

    /// Substitutes a concrete value for `ε`.
    pub fn materialize(&self, eps_num: &Rational) -> Rational {
        &self.base + eps_num * int(self.eps as i64)
    }
}

impl Ord for EpsCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base.cmp(&other.base).then(self.eps.cmp(&other.eps))
    }
}

impl PartialOrd for EpsCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EpsCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.base))?;
        match self.eps {
            1 => write!(f, "+eps"),
            -1 => write!(f, "-eps"),
            _ => Ok(()),
        }
    }
}

impl FromStr for EpsCoord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(b) = s.strip_suffix("+eps") {
            Ok(EpsCoord::new(parse_rational(b)?, 1))
        } else if let Some(b) = s.strip_suffix("-eps") {
            Ok(EpsCoord::new(parse_rational(b)?, -1))
        } else {
            Ok(EpsCoord::exact(parse_rational(s)?))
        }
    }
}

/// Difference of two coordinates, `d + c·ε` with `c ∈ [-2, 2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsDiff {
    pub d: Rational,
    pub c: i8,
}

impl Ord for EpsDiff {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d.cmp(&other.d).then(self.c.cmp(&other.c))
    }
}

impl PartialOrd for EpsDiff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl EpsDiff {
    /// `self <= 1` with `ε` infinitesimal.
    pub fn at_most_one(&self) -> bool {
        *self <= EpsDiff { d: Rational::one(), c: 0 }
    }
}

impl<'a> Sub<&'a EpsCoord> for &'a EpsCoord {
    type Output = EpsDiff;
    fn sub(self, rhs: &'a EpsCoord) -> EpsDiff {
        EpsDiff { d: &self.base - &rhs.base, c: self.eps - rhs.eps }
    }
}

impl<'a> Add<&'a BigInt> for &'a EpsCoord {
    type Output = EpsCoord;
    fn add(self, k: &'a BigInt) -> EpsCoord {
        self.shift(k)
    }
}

pub fn compare(a: &EpsCoord, b: &EpsCoord) -> Ordering {
    a.cmp(b)
}

/// `⌊a − b⌋` under the infinitesimal semantics.
pub fn floor_diff(a: &EpsCoord, b: &EpsCoord) -> BigInt {
    let diff = a - b;
    let f = floor_int(&diff.d);
    if diff.c < 0 && diff.d.is_integer() {
        f - 1
    } else {
        f
    }
}

/// `⌈a − b⌉ = −⌊b − a⌋`.
pub fn ceil_diff(a: &EpsCoord, b: &EpsCoord) -> BigInt {
    -floor_diff(b, a)
}

/// Smallest positive gap in a set of rationals, if there is one.
pub fn min_positive_gap<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    let mut v: Vec<&Rational> = values.into_iter().collect();
    v.sort();
    v.dedup();
    v.windows(2).map(|w| w[1] - w[0]).filter(|g| g.is_positive()).min()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: i64, d: i64, eps: i8) -> EpsCoord {
        EpsCoord::new(rat(n, d), eps)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&e(1, 2, 1), &e(1, 2, 0)), Ordering::Greater);
        assert_eq!(compare(&e(4, 5, 1), &e(1, 1, 0)), Ordering::Less);
        assert_eq!(compare(&e(1, 1, 1), &e(1, 1, 0)), Ordering::Greater);
    }

    #[test]
    fn floor_and_ceil_examples() {
        assert_eq!(floor_diff(&e(5, 2, 0), &e(6, 5, 0)), BigInt::from(1));
        assert_eq!(floor_diff(&e(3, 1, 1), &e(0, 1, 0)), BigInt::from(3));
        assert_eq!(floor_diff(&e(3, 1, -1), &e(0, 1, 0)), BigInt::from(2));
        assert_eq!(ceil_diff(&e(5, 2, 0), &e(6, 5, 0)), BigInt::from(2));
        assert_eq!(ceil_diff(&e(3, 1, 0), &e(3, 1, 0)), BigInt::from(0));
        assert_eq!(ceil_diff(&e(3, 1, 1), &e(0, 1, 0)), BigInt::from(4));
    }

    #[test]
    fn length_tests_against_one() {
        let zero = e(0, 1, 0);
        assert!(!(&e(1, 1, 1) - &zero).at_most_one());
        assert!((&e(1, 1, 0) - &zero).at_most_one());
        assert!((&e(1, 1, -1) - &zero).at_most_one());
        assert!((&e(4, 5, 1) - &zero).at_most_one());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let c: EpsCoord = "5/2-eps".parse().unwrap();
        assert_eq!(c, e(5, 2, -1));
        assert_eq!(c.to_string(), "5/2-eps");
    }
}
