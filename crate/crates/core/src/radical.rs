//! Exact arithmetic over finite sums of rational multiples of square roots.
//!
//! A [`RadicalSum`] is a value of the form `q1*sqrt(r1) + ... + qk*sqrt(rk)`
//! where every coefficient `qi` is a nonzero rational and every radicand `ri`
//! is a distinct square-free positive integer, stored in increasing order.
//! This canonical form is unique: square roots of distinct square-free
//! integers are linearly independent over the rationals, so two sums denote
//! the same real number exactly when their term lists coincide. Equality is
//! therefore structural, and ordering is decided by refining an enclosing
//! interval of the difference until it separates from zero, which is
//! guaranteed to happen for distinct values.
//!
//! Radicands are bounded to `u64` after square-free reduction; coefficients
//! are arbitrary-precision rationals so that family formulas stay exact for
//! large parameters.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Arbitrary-precision rational number; always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Error from [`RadicalSum::sqrt_integer`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RadicalError {
    /// The radicand of a square root must be a positive integer.
    #[error("radicand must be a positive integer")]
    ZeroRadicand,
}

/// Error from parsing the textual rendering of a [`RadicalSum`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRadicalError {
    #[error("unexpected character at byte {0}")]
    UnexpectedChar(usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("radicand at byte {0} does not fit in 64 bits")]
    RadicandTooLarge(usize),
    #[error("zero denominator at byte {0}")]
    ZeroDenominator(usize),
    #[error("radicand must be positive at byte {0}")]
    ZeroRadicand(usize),
}

/// An exact sum `q1*sqrt(r1) + ... + qk*sqrt(rk)` in canonical form.
///
/// Invariants: radicands are square-free, pairwise distinct and kept in
/// increasing order; no coefficient is zero. The empty sum represents 0.
/// A rational value is a single term with radicand 1.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RadicalSum {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalSum {
    /// The zero value (empty sum).
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A rational value, stored as a coefficient on radicand 1.
    pub fn from_rational(q: BigRational) -> Self {
        let mut sum = Self::zero();
        sum.push_term(1, q);
        sum
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact square root of a positive integer: writes `n = s^2 * r` with
    /// `r` square-free and returns `s*sqrt(r)`.
    ///
    /// Rejects `n = 0`.
    pub fn sqrt_integer(n: u64) -> Result<Self, RadicalError> {
        if n == 0 {
            return Err(RadicalError::ZeroRadicand);
        }
        let (square_part, radicand) = squarefree_split(n);
        let mut sum = Self::zero();
        sum.push_term(
            radicand,
            BigRational::from_integer(BigInt::from(square_part)),
        );
        Ok(sum)
    }

    /// Every coefficient multiplied by `q`; scaling by zero yields the
    /// empty sum.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&r, c)| (r, c * q)).collect();
        Self { terms }
    }

    /// Iterates over `(radicand, coefficient)` pairs in increasing
    /// radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&r, c)| (r, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of radicand 1, i.e. the rational part of the sum.
    pub fn rational_part(&self) -> BigRational {
        self.terms
            .get(&1)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// True when the sum has no irrational terms.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&r| r == 1)
    }

    /// True exactly when the value is a positive integer: a single term
    /// with radicand 1 whose coefficient is a positive integer.
    pub fn is_positive_integer(&self) -> bool {
        self.as_positive_integer().is_some()
    }

    /// The value as a positive integer, when it is one.
    pub fn as_positive_integer(&self) -> Option<BigUint> {
        if self.terms.len() != 1 {
            return None;
        }
        let coeff = self.terms.get(&1)?;
        if coeff.is_integer() && coeff.is_positive() {
            Some(coeff.to_integer().to_biguint().expect("positive"))
        } else {
            None
        }
    }

    /// Decimal rendering with absolute error below `10^-digits`.
    /// Deterministic for a fixed input.
    pub fn to_decimal(&self, digits: u32) -> String {
        let pow = BigInt::from(10u8).pow(digits);
        let rounded: BigInt = if self.is_rational() {
            round_scaled(&self.rational_part(), &pow)
        } else {
            // The value is irrational, so value*10^digits + 1/2 is never an
            // integer and the two endpoint roundings eventually agree.
            let mut bits = 64;
            loop {
                let (lo, hi) = self.eval_interval(bits);
                let a = round_scaled(&lo, &pow);
                let b = round_scaled(&hi, &pow);
                if a == b {
                    break a;
                }
                bits *= 2;
            }
        };
        let sign = if rounded.is_negative() { "-" } else { "" };
        let magnitude = rounded.magnitude();
        let (int_part, frac_part) = magnitude.div_rem(pow.magnitude());
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{frac:0>width$}",
                frac = frac_part.to_string(),
                width = digits as usize
            )
        }
    }

    /// Rational interval `[lo, hi]` containing the value, with each square
    /// root evaluated to `bits` fractional bits.
    fn eval_interval(&self, bits: u32) -> (BigRational, BigRational) {
        let denom = BigInt::from(BigUint::one() << bits);
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (&r, coeff) in &self.terms {
            if r == 1 {
                lo += coeff;
                hi += coeff;
                continue;
            }
            let root = (BigUint::from(r) << (2 * bits)).sqrt();
            let below = BigRational::new(BigInt::from(root.clone()), denom.clone());
            let above = BigRational::new(BigInt::from(root + BigUint::one()), denom.clone());
            if coeff.is_positive() {
                lo += coeff * &below;
                hi += coeff * &above;
            } else {
                lo += coeff * &above;
                hi += coeff * &below;
            }
        }
        (lo, hi)
    }

    fn push_term(&mut self, radicand: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// `floor(x * pow + 1/2)`, exactly.
fn round_scaled(x: &BigRational, pow: &BigInt) -> BigInt {
    let scaled = x * BigRational::from_integer(pow.clone())
        + BigRational::new(BigInt::one(), BigInt::from(2));
    scaled.floor().to_integer()
}

/// Splits `n = s^2 * r` with `r` square-free; returns `(s, r)`.
/// Trial division is adequate here: radicands stay small in practice.
fn squarefree_split(n: u64) -> (u64, u64) {
    let mut rem = n;
    let mut outside = 1u64;
    let mut d = 2u64;
    while d <= rem / d {
        let dd = d * d;
        while rem.is_multiple_of(dd) {
            rem /= dd;
            outside *= d;
        }
        d += 1;
    }
    (outside, rem)
}

impl Ord for RadicalSum {
    /// Total order on the real numbers the sums denote.
    ///
    /// Equality is decided structurally (canonical forms are unique), never
    /// numerically. For distinct forms the difference is a nonzero real, so
    /// interval refinement at doubling precision must eventually separate
    /// it from zero.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.terms == other.terms {
            return Ordering::Equal;
        }
        let diff = self - other;
        let mut bits = 64;
        loop {
            let (lo, hi) = diff.eval_interval(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }
}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (&r, c) in &rhs.terms {
            self.push_term(r, c.clone());
        }
    }
}

impl SubAssign<&RadicalSum> for RadicalSum {
    fn sub_assign(&mut self, rhs: &RadicalSum) {
        for (&r, c) in &rhs.terms {
            self.push_term(r, -c.clone());
        }
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(mut self, rhs: RadicalSum) -> RadicalSum {
        self -= &rhs;
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        let terms = self.terms.iter().map(|(&r, c)| (r, -c)).collect();
        RadicalSum { terms }
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -&self
    }
}

/// Renders radical terms in increasing radicand order, with the rational
/// part (radicand 1) printed last as a bare rational, e.g.
/// `2*sqrt(2) + 3*sqrt(5) + 10`. [`FromStr`] parses this grammar back,
/// round-trip exact.
impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<(u64, &BigRational)> = self
            .terms
            .iter()
            .filter(|&(&r, _)| r != 1)
            .map(|(&r, c)| (r, c))
            .collect();
        if let Some(q) = self.terms.get(&1) {
            parts.push((1, q));
        }
        for (i, (radicand, coeff)) in parts.iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.abs();
            if *radicand == 1 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "sqrt({radicand})")?;
            } else {
                write!(f, "{magnitude}*sqrt({radicand})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalSum({self})")
    }
}

impl FromStr for RadicalSum {
    type Err = ParseRadicalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<RadicalSum, ParseRadicalError> {
        let mut total = RadicalSum::zero();
        self.skip_ws();
        let mut negative = self.eat(b'-');
        loop {
            self.skip_ws();
            let term = self.term()?;
            if negative {
                total -= &term;
            } else {
                total += &term;
            }
            self.skip_ws();
            if self.pos == self.bytes.len() {
                return Ok(total);
            }
            negative = match self.bytes[self.pos] {
                b'+' => false,
                b'-' => true,
                _ => return Err(ParseRadicalError::UnexpectedChar(self.pos)),
            };
            self.pos += 1;
        }
    }

    /// One unsigned term: `sqrt(r)`, `q`, or `q*sqrt(r)`.
    fn term(&mut self) -> Result<RadicalSum, ParseRadicalError> {
        if self.peek_sqrt() {
            let (radicand, at) = self.sqrt()?;
            return RadicalSum::sqrt_integer(radicand)
                .map_err(|_| ParseRadicalError::ZeroRadicand(at));
        }
        let coeff = self.rational()?;
        self.skip_ws();
        if self.eat(b'*') {
            self.skip_ws();
            let (radicand, at) = self.sqrt()?;
            let root = RadicalSum::sqrt_integer(radicand)
                .map_err(|_| ParseRadicalError::ZeroRadicand(at))?;
            Ok(root.scale(&coeff))
        } else {
            Ok(RadicalSum::from_rational(coeff))
        }
    }

    fn rational(&mut self) -> Result<BigRational, ParseRadicalError> {
        let numer = self.digits()?;
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(ParseRadicalError::ZeroDenominator(at));
            }
            Ok(BigRational::new(numer.into(), denom.into()))
        } else {
            Ok(BigRational::from_integer(numer.into()))
        }
    }

    /// `sqrt ( <uint> )`; the radicand is normalized by the caller, so
    /// non-square-free inputs such as `sqrt(8)` are accepted.
    fn sqrt(&mut self) -> Result<(u64, usize), ParseRadicalError> {
        for expected in *b"sqrt(" {
            if !self.eat(expected) {
                return Err(self.unexpected());
            }
        }
        self.skip_ws();
        let at = self.pos;
        let value = self.digits()?;
        let radicand = value
            .to_u64()
            .ok_or(ParseRadicalError::RadicandTooLarge(at))?;
        self.skip_ws();
        if !self.eat(b')') {
            return Err(self.unexpected());
        }
        Ok((radicand, at))
    }

    fn digits(&mut self) -> Result<BigUint, ParseRadicalError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected());
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit string"))
    }

    fn peek_sqrt(&self) -> bool {
        self.bytes[self.pos..].starts_with(b"sqrt")
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.pos < self.bytes.len() && self.bytes[self.pos] == byte {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn unexpected(&self) -> ParseRadicalError {
        if self.pos == self.bytes.len() {
            ParseRadicalError::UnexpectedEnd
        } else {
            ParseRadicalError::UnexpectedChar(self.pos)
        }
    }
}
