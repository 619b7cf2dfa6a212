//! Exact scalars for the max-plus semifield (ℝ ∪ {−∞}, ⊕ = max, ⊗ = +).
//!
//! The module defines:
//!
//! * [`Semifield`] — the abstract interface every scalar instance satisfies:
//!   idempotent addition ⊕, multiplication ⊗, the neutral elements 𝟘 and 𝟙,
//!   inversion of non-𝟘 elements, exact rational powers, and the canonical
//!   order a ≤ b ⇔ a ⊕ b = b.
//! * [`TropScalar`] — the canonical max-plus instance over exact rationals,
//!   with −∞ as 𝟘 and 0 as 𝟙. All arithmetic is exact; there is no floating
//!   point anywhere.
//! * [`MinPlusScalar`] — a min-plus sibling (+∞ as 𝟘) used by the generic
//!   matrix layer's tests to ensure nothing silently assumes `max`.
//!
//! Scalar text syntax, shared by all file formats: an optional sign followed
//! by digits (`3`, `-1`), a fraction of two such integers (`5/2`, `-7/3`), or
//! the literal `-inf` for 𝟘. Decimal notation is rejected. Rendering always
//! produces the canonical reduced form, so parse ∘ render is the identity.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// The abstract semifield interface
// ---------------------------------------------------------------------------

/// An idempotent semifield scalar.
///
/// Laws (all tested, for every instance):
///
/// * ⊕ is associative, commutative, and idempotent with neutral element 𝟘;
/// * ⊗ is associative and commutative with neutral element 𝟙, distributes
///   over ⊕, and 𝟘 absorbs: a ⊗ 𝟘 = 𝟘;
/// * every a ≠ 𝟘 has an inverse: a ⊗ inv(a) = 𝟙;
/// * the canonical order a ≤ b ⇔ a ⊕ b = b is total, ⊕/⊗ are monotone in it,
///   and inversion is antitone on non-𝟘 elements.
pub trait Semifield: Clone + Eq + Hash + fmt::Debug + 'static {
    /// The additive neutral element 𝟘 (absorbing for ⊗).
    fn zero() -> Self;

    /// The multiplicative neutral element 𝟙.
    fn one() -> Self;

    /// Idempotent addition ⊕.
    #[must_use]
    fn add(&self, rhs: &Self) -> Self;

    /// Multiplication ⊗.
    #[must_use]
    fn mul(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse.
    ///
    /// # Errors
    ///
    /// Fails with [`Error::BottomInverse`] on 𝟘.
    fn inv(&self) -> Result<Self>;

    /// Exact rational power: `pow(a, q)` scales the underlying value by `q`.
    ///
    /// `pow(a, 0) = 𝟙` for a ≠ 𝟘, and `pow(𝟘, q) = 𝟘` for every positive
    /// exponent `q` (the q-th root of 𝟘 is 𝟘).
    ///
    /// # Errors
    ///
    /// Fails with [`Error::BottomPower`] on 𝟘 with a non-positive exponent.
    fn pow(&self, exponent: &BigRational) -> Result<Self>;

    /// The canonical order: a ≤ b ⇔ a ⊕ b = b.
    ///
    /// The provided implementation is the definition itself; instances may
    /// override it with an equivalent direct comparison.
    fn le(&self, rhs: &Self) -> bool {
        self.add(rhs) == *rhs
    }

    /// Whether this is the additive neutral element 𝟘.
    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Whether this is the multiplicative neutral element 𝟙.
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Strict canonical order.
    fn lt(&self, rhs: &Self) -> bool {
        self.le(rhs) && self != rhs
    }

    /// Reversed canonical order, `a ≥ b`.
    fn ge(&self, rhs: &Self) -> bool {
        rhs.le(self)
    }

    /// Reversed strict canonical order, `a > b`.
    fn gt(&self, rhs: &Self) -> bool {
        rhs.lt(self)
    }

    /// The canonical order as an [`Ordering`], for sorting.
    ///
    /// This is intentionally the only comparator the crate exposes: scalars
    /// do not implement [`Ord`], so every comparison goes through the
    /// semifield order (for min-plus that order is the reverse of the
    /// numeric one).
    fn cmp_order(&self, rhs: &Self) -> Ordering {
        if self == rhs {
            Ordering::Equal
        } else if self.le(rhs) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

// ---------------------------------------------------------------------------
// Max-plus scalars
// ---------------------------------------------------------------------------

/// A max-plus scalar: −∞ ([`TropScalar::Bottom`]) or an exact rational.
///
/// ⊕ is `max`, ⊗ is `+`, 𝟘 is −∞, 𝟙 is 0, inversion is negation, and
/// `pow(a, q)` is the scaling `a · q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TropScalar {
    /// The additive neutral element 𝟘 = −∞.
    Bottom,
    /// A finite, exact rational value.
    Finite(BigRational),
}

impl TropScalar {
    /// The zero element −∞.
    #[must_use]
    pub fn bottom() -> Self {
        TropScalar::Bottom
    }

    /// A finite scalar from an exact rational.
    #[must_use]
    pub fn finite(value: BigRational) -> Self {
        TropScalar::Finite(value)
    }

    /// A finite scalar from an integer.
    #[must_use]
    pub fn from_int(value: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    /// A finite scalar from a numerator/denominator pair, reduced.
    ///
    /// # Panics
    ///
    /// Panics if `den` is zero.
    #[must_use]
    pub fn ratio(num: i64, den: i64) -> Self {
        TropScalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Whether this scalar is −∞.
    #[must_use]
    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    /// The underlying rational of a finite scalar.
    #[must_use]
    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(value) => Some(value),
        }
    }
}

impl Semifield for TropScalar {
    fn zero() -> Self {
        TropScalar::Bottom
    }

    fn one() -> Self {
        TropScalar::Finite(BigRational::zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (TropScalar::Bottom, other) | (other, TropScalar::Bottom) => other.clone(),
            (TropScalar::Finite(a), TropScalar::Finite(b)) => {
                TropScalar::Finite(a.max(b).clone())
            }
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (TropScalar::Bottom, _) | (_, TropScalar::Bottom) => TropScalar::Bottom,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
        }
    }

    fn inv(&self) -> Result<Self> {
        match self {
            TropScalar::Bottom => Err(Error::BottomInverse),
            TropScalar::Finite(value) => Ok(TropScalar::Finite(-value)),
        }
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        match self {
            TropScalar::Bottom => {
                if exponent.is_positive() {
                    Ok(TropScalar::Bottom)
                } else {
                    Err(Error::BottomPower {
                        exponent: exponent.clone(),
                    })
                }
            }
            TropScalar::Finite(value) => Ok(TropScalar::Finite(value * exponent)),
        }
    }

    fn le(&self, rhs: &Self) -> bool {
        self.cmp_order(rhs) != Ordering::Greater
    }

    /// direct comparison: −∞ is least, finite values compare as rationals,
    /// which coincides with a ≤ b ⇔ max(a, b) = b.
    fn cmp_order(&self, rhs: &Self) -> Ordering {
        match (self, rhs) {
            (TropScalar::Bottom, TropScalar::Bottom) => Ordering::Equal,
            (TropScalar::Bottom, TropScalar::Finite(_)) => Ordering::Less,
            (TropScalar::Finite(_), TropScalar::Bottom) => Ordering::Greater,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            // `BigRational` renders the reduced form: `p` when the denominator
            // is one, `p/q` otherwise, with the sign on the numerator.
            TropScalar::Finite(value) => write!(f, "{value}"),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        parse_token(token)
    }
}

/// Parses one scalar token: `-inf`, an integer, or a fraction `p/q`.
fn parse_token(token: &str) -> Result<TropScalar> {
    let invalid = || Error::InvalidScalar {
        token: token.to_owned(),
    };
    if token == "-inf" {
        return Ok(TropScalar::Bottom);
    }
    let (num_text, den_text) = match token.split_once('/') {
        Some((num, den)) => (num, Some(den)),
        None => (token, None),
    };
    let numerator = parse_signed_integer(num_text).ok_or_else(invalid)?;
    let denominator = match den_text {
        None => BigInt::one(),
        Some(text) => {
            let value = parse_unsigned_integer(text).ok_or_else(invalid)?;
            if value.is_zero() {
                return Err(invalid());
            }
            value
        }
    };
    Ok(TropScalar::Finite(BigRational::new(numerator, denominator)))
}

/// Parses `-?[0-9]+` exactly; rejects `+`, whitespace, and empty digits.
fn parse_signed_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    let magnitude = parse_unsigned_integer(digits)?;
    Some(if text.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

/// Parses `[0-9]+` exactly.
fn parse_unsigned_integer(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse::<BigInt>().ok()
}

// ---------------------------------------------------------------------------
// Min-plus scalars (second instance, used by genericity tests)
// ---------------------------------------------------------------------------

/// A min-plus scalar: +∞ ([`MinPlusScalar::Top`]) or an exact rational.
///
/// ⊕ is `min`, ⊗ is `+`, 𝟘 is +∞, 𝟙 is 0. The canonical semifield order is
/// the *reverse* of the numeric order (a ⊕ b = b ⇔ min(a, b) = b ⇔ b ≤ a
/// numerically), which is exactly why the matrix layer must only ever compare
/// through [`Semifield::le`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MinPlusScalar {
    /// The additive neutral element 𝟘 = +∞.
    Top,
    /// A finite, exact rational value.
    Finite(BigRational),
}

impl MinPlusScalar {
    /// A finite scalar from an integer.
    #[must_use]
    pub fn from_int(value: i64) -> Self {
        MinPlusScalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }
}

impl Semifield for MinPlusScalar {
    fn zero() -> Self {
        MinPlusScalar::Top
    }

    fn one() -> Self {
        MinPlusScalar::Finite(BigRational::zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (MinPlusScalar::Top, other) | (other, MinPlusScalar::Top) => other.clone(),
            (MinPlusScalar::Finite(a), MinPlusScalar::Finite(b)) => {
                MinPlusScalar::Finite(a.min(b).clone())
            }
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (MinPlusScalar::Top, _) | (_, MinPlusScalar::Top) => MinPlusScalar::Top,
            (MinPlusScalar::Finite(a), MinPlusScalar::Finite(b)) => MinPlusScalar::Finite(a + b),
        }
    }

    fn inv(&self) -> Result<Self> {
        match self {
            MinPlusScalar::Top => Err(Error::BottomInverse),
            MinPlusScalar::Finite(value) => Ok(MinPlusScalar::Finite(-value)),
        }
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        match self {
            MinPlusScalar::Top => {
                if exponent.is_positive() {
                    Ok(MinPlusScalar::Top)
                } else {
                    Err(Error::BottomPower {
                        exponent: exponent.clone(),
                    })
                }
            }
            MinPlusScalar::Finite(value) => Ok(MinPlusScalar::Finite(value * exponent)),
        }
    }

    fn le(&self, rhs: &Self) -> bool {
        // a ≤ b ⇔ min(a, b) = b: +∞ is the least element, finite values
        // compare in reverse numeric order.
        match (self, rhs) {
            (MinPlusScalar::Top, _) => true,
            (MinPlusScalar::Finite(_), MinPlusScalar::Top) => false,
            (MinPlusScalar::Finite(a), MinPlusScalar::Finite(b)) => b <= a,
        }
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: i64) -> TropScalar {
        TropScalar::from_int(v)
    }

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    // -- max-plus arithmetic ------------------------------------------------

    #[test]
    fn add_is_max_with_bottom_neutral() {
        assert_eq!(fin(3).add(&fin(5)), fin(5));
        assert_eq!(fin(5).add(&fin(3)), fin(5));
        assert_eq!(TropScalar::Bottom.add(&fin(-7)), fin(-7));
        assert_eq!(fin(-7).add(&TropScalar::Bottom), fin(-7));
        assert_eq!(
            TropScalar::Bottom.add(&TropScalar::Bottom),
            TropScalar::Bottom
        );
    }

    #[test]
    fn mul_is_plus_with_absorbing_bottom() {
        assert_eq!(fin(3).mul(&fin(5)), fin(8));
        assert_eq!(fin(-2).mul(&fin(2)), TropScalar::one());
        assert_eq!(TropScalar::Bottom.mul(&fin(100)), TropScalar::Bottom);
        assert_eq!(fin(100).mul(&TropScalar::Bottom), TropScalar::Bottom);
    }

    #[test]
    fn exact_rational_arithmetic() {
        let a = TropScalar::ratio(1, 3);
        let b = TropScalar::ratio(1, 6);
        assert_eq!(a.mul(&b), TropScalar::ratio(1, 2));
        assert_eq!(a.add(&b), a);
    }

    #[test]
    fn inv_negates_and_rejects_bottom() {
        assert_eq!(fin(4).inv().unwrap(), fin(-4));
        assert_eq!(TropScalar::ratio(-2, 3).inv().unwrap(), TropScalar::ratio(2, 3));
        assert_eq!(TropScalar::Bottom.inv(), Err(Error::BottomInverse));
    }

    #[test]
    fn pow_scales_by_the_exponent() {
        assert_eq!(fin(4).pow(&q(1, 2)).unwrap(), fin(2));
        assert_eq!(fin(3).pow(&q(-1, 1)).unwrap(), fin(-3));
        assert_eq!(fin(5).pow(&q(0, 1)).unwrap(), TropScalar::one());
        assert_eq!(TropScalar::ratio(3, 2).pow(&q(2, 1)).unwrap(), fin(3));
    }

    #[test]
    fn pow_of_bottom_needs_a_positive_exponent() {
        assert_eq!(
            TropScalar::Bottom.pow(&q(1, 3)).unwrap(),
            TropScalar::Bottom
        );
        assert_eq!(TropScalar::Bottom.pow(&q(5, 1)).unwrap(), TropScalar::Bottom);
        assert!(matches!(
            TropScalar::Bottom.pow(&q(0, 1)),
            Err(Error::BottomPower { .. })
        ));
        assert!(matches!(
            TropScalar::Bottom.pow(&q(-2, 1)),
            Err(Error::BottomPower { .. })
        ));
    }

    // -- order --------------------------------------------------------------

    #[test]
    fn canonical_order_matches_numeric_order() {
        assert!(TropScalar::Bottom.le(&fin(-100)));
        assert!(fin(-1).le(&fin(0)));
        assert!(fin(2).le(&fin(2)));
        assert!(!fin(3).le(&fin(2)));
        assert!(fin(3).gt(&fin(2)));
        assert!(TropScalar::Bottom.lt(&fin(0)));
    }

    #[test]
    fn le_override_agrees_with_definitional_default() {
        let values = [
            TropScalar::Bottom,
            fin(-3),
            TropScalar::ratio(-1, 2),
            TropScalar::one(),
            TropScalar::ratio(7, 3),
            fin(5),
        ];
        for a in &values {
            for b in &values {
                assert_eq!(a.le(b), a.add(b) == *b, "le({a}, {b})");
            }
        }
    }

    #[test]
    fn cmp_order_sorts_bottom_first() {
        let mut values = vec![fin(1), TropScalar::Bottom, fin(-2), TropScalar::ratio(1, 2)];
        values.sort_by(|a, b| a.cmp_order(b));
        assert_eq!(
            values,
            vec![TropScalar::Bottom, fin(-2), TropScalar::ratio(1, 2), fin(1)]
        );
    }

    // -- parsing and rendering ----------------------------------------------

    #[test]
    fn parses_integers_fractions_and_bottom() {
        assert_eq!("3".parse::<TropScalar>().unwrap(), fin(3));
        assert_eq!("-1".parse::<TropScalar>().unwrap(), fin(-1));
        assert_eq!("5/2".parse::<TropScalar>().unwrap(), TropScalar::ratio(5, 2));
        assert_eq!(
            "-7/3".parse::<TropScalar>().unwrap(),
            TropScalar::ratio(-7, 3)
        );
        assert_eq!("-inf".parse::<TropScalar>().unwrap(), TropScalar::Bottom);
        assert_eq!(
            "4/6".parse::<TropScalar>().unwrap(),
            TropScalar::ratio(2, 3),
            "fractions reduce on construction",
        );
    }

    #[test]
    fn rejects_malformed_tokens() {
        for token in [
            "", "+3", "3.5", "inf", "+inf", "--2", "1/", "/2", "1/0", "1/-2", "a", "1 2", "2/+3",
            "-", "7/2/3",
        ] {
            let parsed = token.parse::<TropScalar>();
            assert_eq!(
                parsed,
                Err(Error::InvalidScalar {
                    token: token.to_owned()
                }),
                "token `{token}` must be rejected",
            );
        }
    }

    #[test]
    fn rendering_round_trips() {
        let values = [
            TropScalar::Bottom,
            fin(0),
            fin(-17),
            fin(42),
            TropScalar::ratio(5, 2),
            TropScalar::ratio(-7, 3),
            TropScalar::ratio(10, 4),
        ];
        for value in &values {
            let text = value.to_string();
            assert_eq!(&text.parse::<TropScalar>().unwrap(), value, "render `{text}`");
        }
        assert_eq!(TropScalar::Bottom.to_string(), "-inf");
        assert_eq!(TropScalar::ratio(10, 4).to_string(), "5/2");
        assert_eq!(fin(-3).to_string(), "-3");
    }

    // -- min-plus instance ---------------------------------------------------

    #[test]
    fn min_plus_add_is_min_with_top_neutral() {
        let a = MinPlusScalar::from_int(3);
        let b = MinPlusScalar::from_int(5);
        assert_eq!(a.add(&b), a);
        assert_eq!(MinPlusScalar::Top.add(&b), b);
        assert_eq!(a.mul(&b), MinPlusScalar::from_int(8));
        assert_eq!(MinPlusScalar::Top.mul(&a), MinPlusScalar::Top);
    }

    #[test]
    fn min_plus_canonical_order_reverses_numeric_order() {
        let a = MinPlusScalar::from_int(3);
        let b = MinPlusScalar::from_int(5);
        // min(3, 5) = 3, so 5 ≤ 3 in the canonical order.
        assert!(b.le(&a));
        assert!(!a.le(&b));
        assert!(MinPlusScalar::Top.le(&a));
        // The definitional default agrees.
        for x in [&MinPlusScalar::Top, &a, &b] {
            for y in [&MinPlusScalar::Top, &a, &b] {
                assert_eq!(x.le(y), x.add(y) == *y);
            }
        }
    }

    #[test]
    fn min_plus_inv_and_one() {
        let a = MinPlusScalar::from_int(3);
        assert_eq!(a.mul(&a.inv().unwrap()), MinPlusScalar::one());
        assert_eq!(MinPlusScalar::Top.inv(), Err(Error::BottomInverse));
    }
}
