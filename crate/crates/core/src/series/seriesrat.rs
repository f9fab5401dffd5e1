//! The ordered field of quotients of generalized polynomials: the concrete
//! computational model of the nonarchimedean series field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rat};
use crate::series::genpoly::{parse_poly_or_quotient, GenPoly};
use crate::trop::TropScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// `num / den` with `den != 0`.  The canonical form divides the pair by
/// their common monomial factor and keeps the denominator's leading
/// coefficient positive, so the sign of an element is the sign of the
/// numerator's leading coefficient.
#[derive(Clone, Debug)]
pub struct SeriesRat {
    num: GenPoly,
    den: GenPoly,
}

impl SeriesRat {
    pub fn new(num: GenPoly, den: GenPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(mut num: GenPoly, mut den: GenPoly) -> Self {
        if num.is_zero() {
            return SeriesRat {
                num: GenPoly::zero(),
                den: GenPoly::one(),
            };
        }
        let shift = {
            let nt = num.trailing().unwrap().0;
            let dt = den.trailing().unwrap().0;
            if nt <= dt { nt.clone() } else { dt.clone() }
        };
        if shift != rat_int(0) {
            let unit = rat_int(1);
            let back = -&shift;
            num = num.mul_monomial(&unit, &back);
            den = den.mul_monomial(&unit, &back);
        }
        if den.sign() < 0 {
            num = num.neg();
            den = den.neg();
        }
        SeriesRat { num, den }
    }

    pub fn from_poly(p: GenPoly) -> Self {
        SeriesRat {
            num: p,
            den: GenPoly::one(),
        }
    }

    pub fn zero() -> Self {
        SeriesRat::from_poly(GenPoly::zero())
    }

    pub fn one() -> Self {
        SeriesRat::from_poly(GenPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        SeriesRat::from_poly(GenPoly::constant(c))
    }

    /// `c * t^e`.
    pub fn monomial(coeff: Rat, exp: Rat) -> Self {
        SeriesRat::from_poly(GenPoly::monomial(coeff, exp))
    }

    /// `t^e`.
    pub fn t_pow(exp: Rat) -> Self {
        SeriesRat::from_poly(GenPoly::t_pow(exp))
    }

    pub fn num(&self) -> &GenPoly {
        &self.num
    }

    pub fn den(&self) -> &GenPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `val(num) - val(den)`; `-inf` for zero.
    pub fn valuation(&self) -> TropScalar {
        match (self.num.leading(), self.den.leading()) {
            (Some((en, _)), Some((ed, _))) => TropScalar::Finite(en - ed),
            _ => TropScalar::NegInf,
        }
    }

    pub fn sign(&self) -> Sign {
        debug_assert!(self.den.sign() > 0, "canonical form keeps den positive");
        match self.num.sign() {
            0 => Sign::Zero,
            s if s > 0 => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sign() != Sign::Negative
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        SeriesRat::canonical(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        SeriesRat::canonical(num, &self.den * &other.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        SeriesRat::canonical(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        SeriesRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SeriesRat::canonical(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        SeriesRat::one().checked_div(self)
    }

    /// Total order of the real closed field: `a > b` iff `a - b` is positive.
    pub fn cmp_order(&self, other: &Self) -> Ordering {
        // ad vs cb is valid because canonical denominators are positive
        let left = &self.num * &other.den;
        let right = &other.num * &self.den;
        match left.sub(&right).sign() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Substitutes `t := base^scale` in numerator and denominator; `None`
    /// if an exponent does not clear or the denominator vanishes there.
    pub fn eval_scaled(&self, base: &Rat, scale: i64) -> Option<Rat> {
        let n = self.num.eval_scaled(base, scale)?;
        let d = self.den.eval_scaled(base, scale)?;
        if d == rat_int(0) {
            return None;
        }
        Some(n / d)
    }
}

impl PartialEq for SeriesRat {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for SeriesRat {}

impl PartialOrd for SeriesRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_order(other))
    }
}

impl Ord for SeriesRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_order(other)
    }
}

impl Add for &SeriesRat {
    type Output = SeriesRat;
    fn add(self, rhs: &SeriesRat) -> SeriesRat {
        SeriesRat::add(self, rhs)
    }
}

impl Sub for &SeriesRat {
    type Output = SeriesRat;
    fn sub(self, rhs: &SeriesRat) -> SeriesRat {
        SeriesRat::sub(self, rhs)
    }
}

impl Mul for &SeriesRat {
    type Output = SeriesRat;
    fn mul(self, rhs: &SeriesRat) -> SeriesRat {
        SeriesRat::mul(self, rhs)
    }
}

impl Div for &SeriesRat {
    type Output = SeriesRat;
    fn div(self, rhs: &SeriesRat) -> SeriesRat {
        self.checked_div(rhs).expect("division by zero series")
    }
}

impl Neg for &SeriesRat {
    type Output = SeriesRat;
    fn neg(self) -> SeriesRat {
        SeriesRat::neg(self)
    }
}

impl fmt::Display for SeriesRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for SeriesRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = parse_poly_or_quotient(s)?;
        SeriesRat::new(num, den)
    }
}
