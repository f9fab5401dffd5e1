//! Arbitrary-precision rational scalars and exact decimal parsing.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; every scalar in the toolkit is one of these
/// (or the distinguished tropical bottom element).
pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, integers, and decimal literals exactly (`"0.1"` is 1/10,
/// never a float).
pub fn parse_rat(input: &str) -> Result<Rat> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let (sign, body) = match s.as_bytes()[0] {
        b'-' => (-1, &s[1..]),
        b'+' => (1, &s[1..]),
        _ => (1, s),
    };
    let body = body.trim();
    if body.is_empty() {
        return Err(Error::Parse(format!("bad rational literal {input:?}")));
    }
    let value = if let Some((p, q)) = body.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {input:?}")))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {input:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {input:?}")));
        }
        Rat::new(p, q)
    } else if let Some((int, frac)) = body.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal {input:?}")))?;
        let den = BigInt::from(10u8).pow(frac.len() as u32);
        Rat::new(num, den)
    } else {
        let n: BigInt = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer literal {input:?}")))?;
        Rat::from_integer(n)
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Renders a rational as `p` or `p/q` (the form `parse_rat` reads back).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rat("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rat(" +2/4 ").unwrap(), rat(1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn format_round_trips() {
        for r in [rat_int(0), rat(22, 7), rat(-5, 4), rat_int(-12)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
    }
}
