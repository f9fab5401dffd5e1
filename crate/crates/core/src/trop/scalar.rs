//! Scalars of the max-plus semiring `(R ∪ {-inf}, max, +)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{format_rat, parse_rat, rat_int, Rat};

/// An element of `R ∪ {-inf}` with the laws `a ⊕ b = max(a, b)` and
/// `a ⊙ b = a + b`.  The bottom element `-inf` is the tropical zero
/// (neutral for ⊕, absorbing for ⊙) and `0` is the tropical one.
///
/// `-inf` is a distinct variant, never a sentinel rational; the derived
/// order puts it strictly below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    NegInf,
    Finite(Rat),
}

impl TropScalar {
    /// Tropical zero, `-inf`.
    pub fn zero() -> Self {
        TropScalar::NegInf
    }

    /// Tropical one, `0`.
    pub fn one() -> Self {
        TropScalar::Finite(Rat::from_integer(0.into()))
    }

    pub fn finite(r: Rat) -> Self {
        TropScalar::Finite(r)
    }

    pub fn from_int(n: i64) -> Self {
        TropScalar::Finite(rat_int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Finite(r) => Some(r),
        }
    }

    /// Tropical addition, `max(a, b)`.
    pub fn add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    /// Tropical multiplication, `a + b`, with `-inf` absorbing.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::NegInf,
        }
    }

    /// Classical negation of a finite value; `-inf` has no tropical inverse.
    pub fn neg(&self) -> Option<Self> {
        self.as_rat().map(|r| TropScalar::Finite(-r))
    }

    /// `a ⊙ x ⊙ ... ⊙ x` with `k` copies of `x` absent, i.e. `k * x`
    /// classically; `0 * (-inf) = 0` by the empty-product convention.
    pub fn mul_by_int(&self, k: usize) -> Self {
        if k == 0 {
            return TropScalar::one();
        }
        match self {
            TropScalar::NegInf => TropScalar::NegInf,
            TropScalar::Finite(r) => TropScalar::Finite(r * rat_int(k as i64)),
        }
    }

    pub fn sum<'a>(values: impl IntoIterator<Item = &'a TropScalar>) -> Self {
        values
            .into_iter()
            .fold(TropScalar::zero(), |acc, v| acc.add(v))
    }

    pub fn product<'a>(values: impl IntoIterator<Item = &'a TropScalar>) -> Self {
        let mut acc = TropScalar::one();
        for v in values {
            if acc.is_neg_inf() {
                return acc;
            }
            acc = acc.mul(v);
        }
        acc
    }

    /// Parses `"-inf"` or any rational/decimal literal.
    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.eq_ignore_ascii_case("-inf") {
            Ok(TropScalar::NegInf)
        } else {
            Ok(TropScalar::Finite(parse_rat(trimmed)?))
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Finite(r) => write!(f, "{}", format_rat(r)),
        }
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::from_int(n)
    }
}

impl From<Rat> for TropScalar {
    fn from(r: Rat) -> Self {
        TropScalar::Finite(r)
    }
}

#[allow(unused)]
pub fn parse_trop(s: &str) -> Result<TropScalar> {
    TropScalar::parse(s).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("tropical scalar: {m}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn add_is_max() {
        assert_eq!(
            TropScalar::from_int(3).add(&TropScalar::from_int(5)),
            TropScalar::from_int(5)
        );
        assert_eq!(
            TropScalar::NegInf.add(&TropScalar::from_int(-7)),
            TropScalar::from_int(-7)
        );
        // idempotency
        assert_eq!(
            TropScalar::from_int(2).add(&TropScalar::from_int(2)),
            TropScalar::from_int(2)
        );
    }

    #[test]
    fn mul_is_plus_with_absorbing_bottom() {
        assert_eq!(
            TropScalar::from_int(3).mul(&TropScalar::from_int(5)),
            TropScalar::from_int(8)
        );
        assert_eq!(
            TropScalar::NegInf.mul(&TropScalar::from_int(5)),
            TropScalar::NegInf
        );
        assert_eq!(
            TropScalar::one().mul(&TropScalar::finite(rat(1, 2))),
            TropScalar::finite(rat(1, 2))
        );
    }

    #[test]
    fn order_puts_bottom_first() {
        assert!(TropScalar::NegInf < TropScalar::from_int(-1_000_000));
        assert!(TropScalar::finite(rat(1, 3)) < TropScalar::finite(rat(1, 2)));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(TropScalar::parse("-inf").unwrap(), TropScalar::NegInf);
        assert_eq!(
            TropScalar::parse("3/4").unwrap(),
            TropScalar::finite(rat(3, 4))
        );
        assert_eq!(TropScalar::parse("-0.5").unwrap().to_string(), "-1/2");
        assert_eq!(TropScalar::NegInf.to_string(), "-inf");
    }
}
