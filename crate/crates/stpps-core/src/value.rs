//! Exact scalar values with a symbolic cardinality-perturbation tier.
//!
//! All correctness-relevant arithmetic in this crate is exact: scalars are
//! arbitrary-precision rationals ([`Rat`]). On top of the rational base, a
//! [`Value`] carries a second rational coefficient `eps_card` of a symbolic
//! infinitesimal ε_card, ordered lexicographically below every positive
//! rational. This realizes the cardinality perturbation f ± ε·c (where
//! c(A) = ε for every nonempty A) symbolically: minimizing the pair
//! (base, eps_card) lexicographically finds, among the minimizers of the
//! base value, one of extremal cardinality — with no "sufficiently small ε"
//! bit-complexity caveats.
//!
//! The order is total and compatible with addition, so `Value` can be used
//! directly as the objective of every minimization routine in the crate.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds a rational from an integer numerator/denominator pair.
///
/// # Panics
/// Panics if `den == 0`.
#[must_use]
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds a rational from an integer.
#[must_use]
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parses a rational from text: either an integer `"p"` or a fraction
/// `"p/q"`, with optional sign on the numerator.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {text:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {text:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational: {text:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Formats a rational as `"p"` or `"p/q"` in lowest terms.
#[must_use]
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Greatest common divisor of two nonnegative rationals:
/// gcd(a/b, c/d) = gcd(a·d, c·b) / (b·d), the largest rational dividing
/// both into integers. `gcd(x, 0) = x`.
#[must_use]
pub fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    let a = a.abs();
    let b = b.abs();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    let num = num::integer::gcd(a.numer() * b.denom(), b.numer() * a.denom());
    Rat::new(num, a.denom() * b.denom())
}

/// Exact scalar with a symbolic infinitesimal tier.
///
/// Ordered lexicographically on `(base, eps_card)`; addition, subtraction,
/// negation and scaling by a rational act componentwise. The tier coefficient
/// is nonzero only while a cardinality perturbation is active; plain values
/// have `eps_card = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Value {
    /// Rational base value.
    pub base: Rat,
    /// Coefficient of the symbolic infinitesimal ε_card.
    pub eps_card: Rat,
}

impl Value {
    /// The zero value.
    #[must_use]
    pub fn zero() -> Self {
        Value {
            base: Rat::zero(),
            eps_card: Rat::zero(),
        }
    }

    /// A pure rational value with no infinitesimal component.
    #[must_use]
    pub fn from_rat(base: Rat) -> Self {
        Value {
            base,
            eps_card: Rat::zero(),
        }
    }

    /// A value with both components given.
    #[must_use]
    pub fn with_tier(base: Rat, eps_card: Rat) -> Self {
        Value { base, eps_card }
    }

    /// True iff the infinitesimal component is zero.
    #[must_use]
    pub fn is_pure(&self) -> bool {
        self.eps_card.is_zero()
    }

    /// Drops the infinitesimal component, keeping the rational base.
    #[must_use]
    pub fn strip_tier(&self) -> Self {
        Value::from_rat(self.base.clone())
    }

    /// Scales both components by a rational factor.
    #[must_use]
    pub fn scale(&self, factor: &Rat) -> Self {
        Value {
            base: &self.base * factor,
            eps_card: &self.eps_card * factor,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .cmp(&other.base)
            .then_with(|| self.eps_card.cmp(&other.eps_card))
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value {
            base: self.base + rhs.base,
            eps_card: self.eps_card + rhs.eps_card,
        }
    }
}

impl<'a> Add<&'a Value> for Value {
    type Output = Value;
    fn add(self, rhs: &'a Value) -> Value {
        Value {
            base: self.base + &rhs.base,
            eps_card: self.eps_card + &rhs.eps_card,
        }
    }
}

impl AddAssign<&Value> for Value {
    fn add_assign(&mut self, rhs: &Value) {
        self.base += &rhs.base;
        self.eps_card += &rhs.eps_card;
    }
}

impl Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value {
            base: self.base - rhs.base,
            eps_card: self.eps_card - rhs.eps_card,
        }
    }
}

impl<'a> Sub<&'a Value> for Value {
    type Output = Value;
    fn sub(self, rhs: &'a Value) -> Value {
        Value {
            base: self.base - &rhs.base,
            eps_card: self.eps_card - &rhs.eps_card,
        }
    }
}

impl SubAssign<&Value> for Value {
    fn sub_assign(&mut self, rhs: &Value) {
        self.base -= &rhs.base;
        self.eps_card -= &rhs.eps_card;
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value {
            base: -self.base,
            eps_card: -self.eps_card,
        }
    }
}

impl Mul<&Rat> for &Value {
    type Output = Value;
    fn mul(self, rhs: &Rat) -> Value {
        self.scale(rhs)
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps_card.is_zero() {
            write!(f, "{}", format_rat(&self.base))
        } else {
            write!(
                f,
                "{} + {}ε",
                format_rat(&self.base),
                format_rat(&self.eps_card)
            )
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for text in ["3", "-7", "25/48", "-3/8", "0"] {
            let r = parse_rat(text).unwrap();
            assert_eq!(format_rat(&r), text);
        }
        assert_eq!(format_rat(&parse_rat("18/48").unwrap()), "3/8");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn gcd_of_rationals() {
        assert_eq!(rat_gcd(&rat(1, 2), &rat(1, 3)), rat(1, 6));
        assert_eq!(rat_gcd(&rat(25, 48), &rat(3, 8)), rat(1, 48));
        assert_eq!(rat_gcd(&rat(0, 1), &rat(5, 7)), rat(5, 7));
        assert_eq!(rat_gcd(&rat(4, 1), &rat(6, 1)), rat(2, 1));
    }

    #[test]
    fn lexicographic_order() {
        let a = Value::with_tier(rat_int(1), rat_int(100));
        let b = Value::with_tier(rat_int(2), rat_int(-100));
        assert!(a < b, "base dominates the tier");
        let c = Value::with_tier(rat_int(1), rat_int(-1));
        assert!(c < a, "ties on base fall through to the tier");
    }

    #[test]
    fn order_compatible_with_addition() {
        // a < b implies a + c < b + c, over a deterministic sample grid.
        let grid: Vec<Value> = (-3..=3)
            .flat_map(|p| (-2..=2).map(move |q| Value::with_tier(rat(p, 2), rat_int(q))))
            .collect();
        for a in &grid {
            for b in &grid {
                if a < b {
                    for c in &grid {
                        assert!(a.clone() + c < b.clone() + c);
                    }
                }
            }
        }
    }

    #[test]
    fn componentwise_arithmetic() {
        let a = Value::with_tier(rat(1, 2), rat_int(3));
        let b = Value::with_tier(rat(1, 3), rat_int(-1));
        let s = a.clone() + b.clone();
        assert_eq!(s.base, rat(5, 6));
        assert_eq!(s.eps_card, rat_int(2));
        let d = a.clone() - b;
        assert_eq!(d.base, rat(1, 6));
        assert_eq!(d.eps_card, rat_int(4));
        let scaled = a.scale(&rat_int(2));
        assert_eq!(scaled.base, rat_int(1));
        assert_eq!(scaled.eps_card, rat_int(6));
        assert_eq!(-Value::from_rat(rat_int(5)), Value::from_rat(rat_int(-5)));
    }
}
