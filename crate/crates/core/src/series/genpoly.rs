//! Generalized polynomials in `t`: finite sums of `c * t^e` with rational
//! coefficients and rational exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rat, parse_rat, rat_int, Rat};
use crate::trop::TropScalar;

/// A finite map exponent -> coefficient; no stored coefficient is zero and
/// the zero polynomial is the empty map.  The valuation is the largest
/// exponent present, the sign is the sign of its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<Rat, Rat>,
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly::default()
    }

    pub fn one() -> Self {
        GenPoly::constant(rat_int(1))
    }

    pub fn constant(c: Rat) -> Self {
        GenPoly::monomial(c, rat_int(0))
    }

    pub fn monomial(coeff: Rat, exp: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        GenPoly { terms }
    }

    /// `t^e`.
    pub fn t_pow(exp: Rat) -> Self {
        GenPoly::monomial(rat_int(1), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&rat_int(0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    /// Largest exponent and its coefficient.
    pub fn leading(&self) -> Option<(&Rat, &Rat)> {
        self.terms.last_key_value()
    }

    /// Smallest exponent and its coefficient.
    pub fn trailing(&self) -> Option<(&Rat, &Rat)> {
        self.terms.first_key_value()
    }

    /// Valuation: the largest exponent, `-inf` for zero.
    pub fn valuation(&self) -> TropScalar {
        match self.leading() {
            Some((e, _)) => TropScalar::Finite(e.clone()),
            None => TropScalar::NegInf,
        }
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn sign(&self) -> i32 {
        self.leading()
            .map(|(_, c)| crate::rational::rat_sign(c))
            .unwrap_or(0)
    }

    fn insert_add(&mut self, exp: Rat, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), &(-c));
        }
        out
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, coeff: &Rat, exp: &Rat) -> GenPoly {
        if coeff.is_zero() {
            return GenPoly::zero();
        }
        GenPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &Rat) -> GenPoly {
        self.mul_monomial(coeff, &rat_int(0))
    }

    /// Exact division: returns `Some(q)` with `self = q * divisor` when the
    /// division leaves no remainder, `None` otherwise.  Used by the
    /// fraction-free determinant, where the identity guarantees exactness.
    pub fn exact_div(&self, divisor: &GenPoly) -> Option<GenPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(GenPoly::zero());
        }
        let (g_lead_exp, g_lead_coeff) = {
            let (e, c) = divisor.leading().unwrap();
            (e.clone(), c.clone())
        };
        let g_trail = divisor.trailing().unwrap().0.clone();
        // In an exact quotient every quotient exponent is at least
        // trail(f) - trail(g); falling below proves inexactness.
        let bound = self.trailing().unwrap().0 - &g_trail;
        let mut rem = self.clone();
        let mut quotient = GenPoly::zero();
        while let Some((r_exp, r_coeff)) = rem.leading() {
            let q_exp = r_exp - &g_lead_exp;
            if q_exp < bound {
                return None;
            }
            let q_coeff = r_coeff / &g_lead_coeff;
            let term = GenPoly::monomial(q_coeff, q_exp);
            rem = rem.sub(&term.mul(divisor));
            quotient = quotient.add(&term);
        }
        Some(quotient)
    }

    /// Substitutes `t := base^scale`; exact when every exponent times
    /// `scale` is an integer, so passing the lcm of the exponent
    /// denominators makes any finite support evaluable.
    pub fn eval_scaled(&self, base: &Rat, scale: i64) -> Option<Rat> {
        let mut acc = rat_int(0);
        for (e, c) in &self.terms {
            let scaled = e * rat_int(scale);
            if !scaled.denom().is_one() {
                return None;
            }
            acc += c * rat_big_pow(base, scaled.numer())?;
        }
        Some(acc)
    }
}

/// `base^exp` for a BigInt exponent; `None` on `0^negative`.
fn rat_big_pow(base: &Rat, exp: &BigInt) -> Option<Rat> {
    if exp.is_zero() {
        return Some(rat_int(1));
    }
    if base.is_zero() {
        return if exp.is_negative() {
            None
        } else {
            Some(rat_int(0))
        };
    }
    let mut e = exp.magnitude().clone();
    let mut acc = Rat::from_integer(1.into());
    let mut sq = base.clone();
    let one = num_bigint::BigUint::from(1u8);
    while !e.is_zero() {
        if (&e & &one) == one {
            acc *= &sq;
        }
        sq = &sq * &sq;
        e >>= 1;
    }
    Some(if exp.is_negative() { acc.recip() } else { acc })
}

impl Add for &GenPoly {
    type Output = GenPoly;
    fn add(self, rhs: &GenPoly) -> GenPoly {
        GenPoly::add(self, rhs)
    }
}

impl Sub for &GenPoly {
    type Output = GenPoly;
    fn sub(self, rhs: &GenPoly) -> GenPoly {
        GenPoly::sub(self, rhs)
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;
    fn mul(self, rhs: &GenPoly) -> GenPoly {
        GenPoly::mul(self, rhs)
    }
}

impl Neg for &GenPoly {
    type Output = GenPoly;
    fn neg(self) -> GenPoly {
        GenPoly::neg(self)
    }
}

fn format_exponent(e: &Rat) -> String {
    if e.denom().is_one() {
        e.numer().to_string()
    } else {
        format!("({})", format_rat(e))
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // leading term first
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{}", format_rat(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rat(&mag))?;
                }
                if e.is_one() {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", format_exponent(e))?;
                }
            }
        }
        Ok(())
    }
}

// --- parsing -------------------------------------------------------------

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        let mut seen_slash = false;
        let mut seen_dot = false;
        while let Some(&b) = self.bytes.get(self.pos) {
            match b {
                b'0'..=b'9' => self.pos += 1,
                b'.' if !seen_dot && !seen_slash => {
                    seen_dot = true;
                    self.pos += 1;
                }
                b'/' if !seen_slash && !seen_dot => {
                    seen_slash = true;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        if self.pos == start {
            return Err(Error::Parse(format!(
                "expected a number at byte {} of series literal",
                self.pos
            )));
        }
        parse_rat(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    /// Exponent after `^`: optionally parenthesized, optionally signed.
    fn exponent(&mut self) -> Result<Rat> {
        if self.eat(b'(') {
            let sign = if self.eat(b'-') { -1 } else { 1 };
            let n = self.number()?;
            if !self.eat(b')') {
                return Err(Error::Parse("unclosed exponent parenthesis".into()));
            }
            Ok(if sign < 0 { -n } else { n })
        } else {
            let sign = if self.eat(b'-') { -1 } else { 1 };
            let n = self.number()?;
            Ok(if sign < 0 { -n } else { n })
        }
    }

    /// One term: `coeff`, `coeff * t^e`, `coeff t^e` or `t^e`.
    fn term(&mut self) -> Result<(Rat, Rat)> {
        let coeff = match self.peek() {
            Some(b't') => rat_int(1),
            _ => {
                let c = self.number()?;
                self.eat(b'*');
                c
            }
        };
        if self.eat(b't') {
            let exp = if self.eat(b'^') {
                self.exponent()?
            } else {
                rat_int(1)
            };
            Ok((coeff, exp))
        } else {
            Ok((coeff, rat_int(0)))
        }
    }

    fn poly(&mut self) -> Result<GenPoly> {
        let mut out = GenPoly::zero();
        let mut sign: i32 = 1;
        if self.eat(b'-') {
            sign = -1;
        } else {
            self.eat(b'+');
        }
        loop {
            let (coeff, exp) = self.term()?;
            let signed = if sign < 0 { -coeff } else { coeff };
            out.insert_add(exp, &signed);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

impl FromStr for GenPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenPoly> {
        let mut sc = Scanner::new(s);
        let p = sc.poly()?;
        if !sc.at_end() {
            return Err(Error::Parse(format!(
                "trailing input in series literal {s:?}"
            )));
        }
        Ok(p)
    }
}

/// Parses a whole polynomial enclosed in parentheses starting at `sc`.
fn parse_paren_poly(sc: &mut Scanner<'_>) -> Result<GenPoly> {
    if !sc.eat(b'(') {
        return Err(Error::Parse("expected '('".into()));
    }
    let p = sc.poly()?;
    if !sc.eat(b')') {
        return Err(Error::Parse("expected ')'".into()));
    }
    Ok(p)
}

/// Parses either a bare polynomial or a quotient `"(num)/(den)"`.
pub(crate) fn parse_poly_or_quotient(s: &str) -> Result<(GenPoly, GenPoly)> {
    let trimmed = s.trim();
    if trimmed.starts_with('(') {
        let mut sc = Scanner::new(trimmed);
        let num = parse_paren_poly(&mut sc)?;
        if sc.eat(b'/') {
            let den = parse_paren_poly(&mut sc)?;
            if !sc.at_end() {
                return Err(Error::Parse(format!("trailing input in {s:?}")));
            }
            return Ok((num, den));
        }
        if sc.at_end() {
            return Ok((num, GenPoly::one()));
        }
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok((trimmed.parse()?, GenPoly::one()))
}
