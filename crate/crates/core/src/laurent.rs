//! Integer Laurent polynomials in `v = u^{1/2}`.
//!
//! A term `c * v^k` stands for `c * u^{k/2}`, so half-integer powers of `u`
//! are plain integer exponents here. Coefficients are arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exponent in units of `u^{1/2}`.
pub type HalfExp = i32;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<HalfExp, BigInt>,
}

/// Degree of a Laurent polynomial in `u`, in half-integer units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    MinusInfinity,
    /// `HalfUnits(k)` is degree `k/2` in `u`.
    HalfUnits(HalfExp),
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^k`.
    pub fn monomial(coeff: impl Into<BigInt>, half_exp: HalfExp) -> Self {
        let mut p = Self::zero();
        p.add_term(half_exp, coeff.into());
        p
    }

    /// `c * u^k`.
    pub fn u_pow(coeff: impl Into<BigInt>, u_exp: i32) -> Self {
        Self::monomial(coeff, 2 * u_exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `u`.
    pub fn u() -> Self {
        Self::u_pow(1, 1)
    }

    /// Polynomial in `u` from ascending integer coefficients.
    pub fn from_u_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(2 * i as HalfExp, c.into());
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (HalfExp, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, half_exp: HalfExp) -> BigInt {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (HalfExp, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn add_term(&mut self, half_exp: HalfExp, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(half_exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&half_exp);
        }
    }

    /// Exponent negation `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(k) => Degree::HalfUnits(*k),
            None => Degree::MinusInfinity,
        }
    }

    pub fn low_degree(&self) -> Degree {
        match self.terms.keys().next() {
            Some(k) => Degree::HalfUnits(*k),
            None => Degree::MinusInfinity,
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, half_exp: HalfExp) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k + half_exp, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Terms whose exponent satisfies `keep`.
    pub fn filter_exponents(&self, keep: impl Fn(HalfExp) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(**k))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// True when every exponent is a nonnegative integer power of `u`.
    pub fn is_polynomial_in_u(&self) -> bool {
        self.terms.keys().all(|k| *k >= 0 && k % 2 == 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// `c0 + c1*v + c2*v^2`, exponents ascending, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{k}"),
            };
            match (var.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&var)?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`; whitespace is optional and
    /// repeated exponents are summed.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // Split into signed terms; a '-' directly after '^' belongs to the exponent.
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'+') => (1, &piece[1..]),
                Some(b'-') => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coeff_str, var) = match body.find('v') {
                Some(pos) => {
                    let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    if pos > 0 && !body[..pos].ends_with('*') {
                        return Err(bad("expected '*' before v"));
                    }
                    (c, Some(&body[pos + 1..]))
                }
                None => (body, None),
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|_| bad("bad coefficient"))?
            };
            let exp = match var {
                None => 0,
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .ok_or_else(|| bad("expected '^'"))?
                    .parse::<HalfExp>()
                    .map_err(|_| bad("bad exponent"))?,
            };
            out.add_term(exp, coeff * sign);
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
