//! Exact Gaussian rationals `a + b i` with `a, b` in Q.
//!
//! Serialized as `"a/b"` or `"a/b+c/d*i"`; integer parts print without a
//! denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat(pub Complex<BigRational>);

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat(Complex::new(re, im))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn re(&self) -> &BigRational {
        &self.0.re
    }

    pub fn im(&self) -> &BigRational {
        &self.0.im
    }

    pub fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }

    /// Real part integral and imaginary part zero.
    pub fn is_integer(&self) -> bool {
        self.0.im.is_zero() && self.0.re.is_integer()
    }

    /// Real, integral and strictly positive.
    pub fn is_positive_integer(&self) -> bool {
        self.is_integer() && self.0.re.is_positive()
    }

    pub fn is_real(&self) -> bool {
        self.0.im.is_zero()
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        GaussRat(Complex::new(&self.0.re * &k, &self.0.im * &k))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(GaussRat(Complex::<BigRational>::one() / self.0.clone()))
        }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat(&self.0 + &rhs.0)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat(&self.0 - &rhs.0)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat(&self.0 * &rhs.0)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat(-self.0.clone())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (&self.0.re, &self.0.im);
        if im.is_zero() {
            return write!(f, "{re}");
        }
        let sign = if im.is_negative() { '-' } else { '+' };
        write!(f, "{re}{sign}{}*i", im.abs())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    /// Accepts `re`, `im*i`, `re+im*i`, `re-im*i`, and `i`/`-i` shorthands.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussRat::real(parse_rational(&t)?));
        };
        // Split real and imaginary parts at the last sign that is not leading.
        let split = body
            .char_indices()
            .rev()
            .find(|(i, c)| *i > 0 && (*c == '+' || *c == '-'))
            .map(|(i, _)| i);
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im_str = im_str.strip_suffix('*').unwrap_or(im_str);
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(GaussRat::new(parse_rational(re_str)?, im))
    }
}

impl serde::Serialize for GaussRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for GaussRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(GaussRat::from_int(n)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Parses a comma-separated vector of Gaussian rationals.
pub fn parse_vector(s: &str) -> Result<Vec<GaussRat>, Error> {
    s.split(',').map(str::parse).collect()
}

/// Exact Gaussian elimination. Solves `a x = b` and returns a particular
/// solution plus a basis of the null space, or `None` if inconsistent.
pub fn solve_affine(a: &[Vec<GaussRat>], b: &[GaussRat]) -> Option<(Vec<GaussRat>, Vec<Vec<GaussRat>>)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<GaussRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![GaussRat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let null = free
        .iter()
        .map(|&fc| {
            let mut v = vec![GaussRat::zero(); cols];
            v[fc] = GaussRat::from_int(1);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -&m[i][fc];
            }
            v
        })
        .collect();
    Some((x, null))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["3/2", "-1", "0", "1/2+1*i", "1/2-3/4*i", "0+2*i"] {
            let g: GaussRat = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("i".parse::<GaussRat>().unwrap(), GaussRat::new(BigRational::zero(), BigRational::one()));
        assert_eq!("-i".parse::<GaussRat>().unwrap(), GaussRat::new(BigRational::zero(), -BigRational::one()));
        assert_eq!("1/2+i".parse::<GaussRat>().unwrap().to_string(), "1/2+1*i");
        assert_eq!("4/2".parse::<GaussRat>().unwrap(), GaussRat::from_int(2));
        assert!("1/0".parse::<GaussRat>().is_err());
        assert!("x".parse::<GaussRat>().is_err());
    }

    #[test]
    fn integrality() {
        assert!(GaussRat::from_int(2).is_integer());
        assert!(!GaussRat::ratio(3, 2).is_integer());
        assert!(!"2+1*i".parse::<GaussRat>().unwrap().is_integer());
        assert!("2+0*i".parse::<GaussRat>().unwrap().is_integer());
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![GaussRat::from_int(1), GaussRat::from_int(1)]];
        let (x, null) = solve_affine(&a, &[GaussRat::from_int(2)]).unwrap();
        assert_eq!(&x[0] + &x[1], GaussRat::from_int(2));
        assert_eq!(null.len(), 1);
        let a = vec![vec![GaussRat::from_int(0)]];
        assert!(solve_affine(&a, &[GaussRat::from_int(1)]).is_none());
    }
}
