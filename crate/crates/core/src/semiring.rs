//! Elements of the extended tropical semiring.
//!
//! `T` holds three kinds of values: real elements `a`, ghost elements `a^ν`
//! and `-inf`. Addition is the order maximum except that two equal
//! magnitudes collapse to a ghost (`a ⊕ a = a^ν`); multiplication adds
//! magnitudes and is ghost-absorbing. Magnitudes are exact rationals so the
//! tie rule is decided without tolerance.
//!
//! Text form: `q` for a real, `qg` for a ghost, `-inf`, where `q` is an
//! integer, a `p/q` fraction or a finite decimal such as `1.25`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, TropError};

/// Exact magnitude type.
pub type Rational = BigRational;

/// An element of the extended tropical semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropScalar {
    NegInf,
    Real(Rational),
    Ghost(Rational),
}

/// An element of the max-plus semiring `(R ∪ {-inf}, max, +)`, the image of
/// [`TropScalar::realize`].
///
/// Variant order makes the derived `Ord` the usual order with `-inf` least.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxPlusScalar {
    NegInf,
    Finite(Rational),
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

impl TropScalar {
    /// The multiplicative unit `0`.
    pub fn one() -> Self {
        TropScalar::Real(Rational::zero())
    }

    /// The additive zero `-inf`.
    pub fn zero() -> Self {
        TropScalar::NegInf
    }

    pub fn real(n: i64) -> Self {
        TropScalar::Real(rational(n))
    }

    pub fn ghost_of(n: i64) -> Self {
        TropScalar::Ghost(rational(n))
    }

    pub fn magnitude(&self) -> Option<&Rational> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Real(a) | TropScalar::Ghost(a) => Some(a),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    /// True for finite, non-ghost values.
    pub fn is_real(&self) -> bool {
        matches!(self, TropScalar::Real(_))
    }

    /// Membership in the ghost part, which contains `-inf`.
    pub fn is_ghost(&self) -> bool {
        !self.is_real()
    }

    /// The ghost map ν.
    pub fn ghost(&self) -> Self {
        match self {
            TropScalar::Real(a) => TropScalar::Ghost(a.clone()),
            other => other.clone(),
        }
    }

    /// The projection π onto max-plus.
    pub fn realize(&self) -> MaxPlusScalar {
        match self.magnitude() {
            Some(a) => MaxPlusScalar::Finite(a.clone()),
            None => MaxPlusScalar::NegInf,
        }
    }

    /// `x ⊕ y`.
    pub fn oplus(&self, other: &Self) -> Self {
        match (self.magnitude(), other.magnitude()) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Greater => self.clone(),
                Ordering::Less => other.clone(),
                Ordering::Equal => TropScalar::Ghost(a.clone()),
            },
        }
    }

    /// `x ⊙ y`.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::NegInf, _) | (_, TropScalar::NegInf) => TropScalar::NegInf,
            (TropScalar::Real(a), TropScalar::Real(b)) => TropScalar::Real(a + b),
            _ => {
                let a = self.magnitude().expect("finite");
                let b = other.magnitude().expect("finite");
                TropScalar::Ghost(a + b)
            }
        }
    }

    /// `x / y`; a ghost on either side yields a ghost.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let b = other.magnitude().ok_or(TropError::DivisionByNegInf)?;
        Ok(match self {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Real(a) if other.is_real() => TropScalar::Real(a - b),
            TropScalar::Real(a) | TropScalar::Ghost(a) => TropScalar::Ghost(a - b),
        })
    }

    /// Lifts a max-plus value back into `T` as a real element.
    pub fn from_max_plus(x: &MaxPlusScalar) -> Self {
        match x {
            MaxPlusScalar::NegInf => TropScalar::NegInf,
            MaxPlusScalar::Finite(a) => TropScalar::Real(a.clone()),
        }
    }
}

/// `x ⊕ y`.
pub fn add(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x.oplus(y)
}

/// `x ⊙ y`.
pub fn mul(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x.otimes(y)
}

/// `x / y`, undefined for `y = -inf`.
pub fn div(x: &TropScalar, y: &TropScalar) -> Result<TropScalar> {
    x.checked_div(y)
}

pub fn compare(x: &TropScalar, y: &TropScalar) -> Ordering {
    x.cmp(y)
}

pub fn ghost(x: &TropScalar) -> TropScalar {
    x.ghost()
}

pub fn realize(x: &TropScalar) -> MaxPlusScalar {
    x.realize()
}

pub fn is_ghost(x: &TropScalar) -> bool {
    x.is_ghost()
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.magnitude(), other.magnitude()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a
                .cmp(b)
                .then_with(|| self.is_ghost().cmp(&other.is_ghost())),
        }
    }
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for TropScalar {
    type Output = TropScalar;
    fn add(self, rhs: Self) -> Self {
        self.oplus(&rhs)
    }
}

impl<'a> Add<&'a TropScalar> for &'a TropScalar {
    type Output = TropScalar;
    fn add(self, rhs: &'a TropScalar) -> TropScalar {
        self.oplus(rhs)
    }
}

impl Mul for TropScalar {
    type Output = TropScalar;
    fn mul(self, rhs: Self) -> Self {
        self.otimes(&rhs)
    }
}

impl<'a> Mul<&'a TropScalar> for &'a TropScalar {
    type Output = TropScalar;
    fn mul(self, rhs: &'a TropScalar) -> TropScalar {
        self.otimes(rhs)
    }
}

impl std::iter::Sum for TropScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(TropScalar::NegInf, |acc, x| acc.oplus(&x))
    }
}

impl std::iter::Product for TropScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(TropScalar::one(), |acc, x| acc.otimes(&x))
    }
}

impl MaxPlusScalar {
    pub fn finite(n: i64) -> Self {
        MaxPlusScalar::Finite(rational(n))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, MaxPlusScalar::NegInf)
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            MaxPlusScalar::NegInf => None,
            MaxPlusScalar::Finite(a) => Some(a),
        }
    }

    /// Max-plus addition.
    pub fn max_with(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    /// Max-plus multiplication.
    pub fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (MaxPlusScalar::Finite(a), MaxPlusScalar::Finite(b)) => MaxPlusScalar::Finite(a + b),
            _ => MaxPlusScalar::NegInf,
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, a: &Rational) -> fmt::Result {
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::Real(a) => write_rational(f, a),
            TropScalar::Ghost(a) => {
                write_rational(f, a)?;
                f.write_str("g")
            }
        }
    }
}

impl fmt::Display for MaxPlusScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlusScalar::NegInf => f.write_str("-inf"),
            MaxPlusScalar::Finite(a) => write_rational(f, a),
        }
    }
}

fn bad(token: &str, reason: &'static str) -> TropError {
    TropError::ParseScalar {
        token: token.to_string(),
        reason,
    }
}

fn parse_integer(token: &str, digits: &str) -> Result<BigInt> {
    let unsigned = digits.strip_prefix(['-', '+']).unwrap_or(digits);
    if unsigned.is_empty() || !unsigned.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(token, "expected decimal digits"));
    }
    digits
        .trim_start_matches('+')
        .parse::<BigInt>()
        .map_err(|_| bad(token, "expected decimal digits"))
}

/// Parses an exact magnitude: `n`, `p/q` or a decimal `d.ddd`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    if let Some((p, q)) = token.split_once('/') {
        let p = parse_integer(token, p)?;
        let q = parse_integer(token, q)?;
        if q.is_zero() {
            return Err(bad(token, "zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(token, "malformed decimal fraction"));
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let whole = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            parse_integer(token, int_digits)?
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let frac: BigInt = frac_part.parse().map_err(|_| bad(token, "malformed decimal"))?;
        let mut value = Rational::new(whole * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    parse_integer(token, token).map(Rational::from_integer)
}

impl FromStr for TropScalar {
    type Err = TropError;

    fn from_str(token: &str) -> Result<Self> {
        if token == "-inf" {
            return Ok(TropScalar::NegInf);
        }
        if token.is_empty() {
            return Err(bad(token, "empty token"));
        }
        match token.strip_suffix('g') {
            Some(body) => parse_rational(body).map(TropScalar::Ghost),
            None => parse_rational(token).map(TropScalar::Real),
        }
    }
}

/// Lowest common denominator of a set of magnitudes.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| {
        num_integer::Integer::lcm(&acc, v.denom())
    })
}

pub(crate) fn abs_max<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}
