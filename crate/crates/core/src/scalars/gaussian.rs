use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::impl_ops_via_ref;
use crate::scalars::traits::{ExactDiv, Field, GaussianAlgebra, Scalar};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element re + im*i of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Gaussian::new(rat(n, d), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Gaussian::new(r, Rational::zero())
    }

    /// `(a/b) + (c/d) i`.
    pub fn complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        Gaussian::new(rat(a, b), rat(c, d))
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Square root inside Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Gaussian> {
        if self.is_zero() {
            return Some(Gaussian::zero());
        }
        // (x + yi)^2 = re + im i, x^2 = (re + |z|)/2, y^2 = (|z| - re)/2.
        let modulus = rational_sqrt(&self.norm())?;
        let x2 = (&self.re + &modulus) / Rational::from_integer(2.into());
        let y2 = (&modulus - &self.re) / Rational::from_integer(2.into());
        let x = rational_sqrt(&x2)?;
        let mut y = rational_sqrt(&y2)?;
        if x.is_zero() {
            // pure imaginary root: (yi)^2 = -y^2 = re
            let cand = Gaussian::new(Rational::zero(), y);
            return (cand.clone() * &cand == *self).then_some(cand);
        }
        if (Rational::from_integer(2.into()) * &x * &y) != self.im {
            y = -y;
        }
        let cand = Gaussian::new(x, y);
        (cand.clone() * &cand == *self).then_some(cand)
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn g_add(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian::new(&a.re + &b.re, &a.im + &b.im)
}
fn g_sub(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian::new(&a.re - &b.re, &a.im - &b.im)
}
fn g_mul(a: &Gaussian, b: &Gaussian) -> Gaussian {
    if a.im.is_zero() && b.im.is_zero() {
        return Gaussian::new(&a.re * &b.re, Rational::zero());
    }
    Gaussian::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
}
fn g_neg(a: &Gaussian) -> Gaussian {
    Gaussian::new(-a.re.clone(), -a.im.clone())
}
impl_ops_via_ref!(Gaussian, g_add, g_sub, g_mul, g_neg);

impl Scalar for Gaussian {
    fn zero() -> Self {
        Gaussian::default_zero()
    }
    fn one() -> Self {
        Gaussian::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        Gaussian::from_int(n)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Gaussian {
    fn default_zero() -> Self {
        Gaussian::new(Rational::zero(), Rational::zero())
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl ExactDiv for Gaussian {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.div(other).ok()
    }
}

impl GaussianAlgebra for Gaussian {
    fn from_gaussian(g: &Gaussian) -> Self {
        g.clone()
    }
}

impl From<i64> for Gaussian {
    fn from(n: i64) -> Self {
        Gaussian::from_int(n)
    }
}

fn fmt_imag(m: &Rational) -> String {
    if m.is_one() {
        "i".to_string()
    } else if *m == -Rational::one() {
        "-i".to_string()
    } else {
        format!("{m}*i")
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}", fmt_imag(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}", self.re, fmt_imag(&-self.im.clone()))
                } else {
                    write!(f, "{}+{}", self.re, fmt_imag(&self.im))
                }
            }
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Gaussian {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn here(&self) -> usize {
        self.pos + self.offset
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.here(),
            message: message.to_string(),
        }
    }

    fn nat(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).ok()?;
        BigInt::from_str(digits).ok()
    }

    /// nat ('/' nat)?
    fn fraction(&mut self) -> Result<Option<Rational>> {
        let Some(n) = self.nat() else {
            return Ok(None);
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dpos = self.here();
            let d = self.nat().ok_or_else(|| self.err("expected denominator"))?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator { position: dpos });
            }
            return Ok(Some(Rational::new(n, d)));
        }
        Ok(Some(Rational::from_integer(n)))
    }

    /// Parses `mag? '*'? 'i'` after an optional magnitude has been read.
    fn imag_suffix(&mut self, mag: Option<Rational>) -> Result<Rational> {
        let had_mag = mag.is_some();
        if had_mag && self.peek() == Some(b'*') {
            self.pos += 1;
        }
        if self.peek() != Some(b'i') {
            return Err(self.err("expected 'i'"));
        }
        self.pos += 1;
        Ok(mag.unwrap_or_else(Rational::one))
    }
}

/// Parses a Gaussian rational literal such as `3/5+2/7*i`, `-i`, `2i` or `0/1`.
pub fn parse_scalar(text: &str) -> Result<Gaussian> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    let mut c = Cursor {
        bytes: body.as_bytes(),
        pos: 0,
        offset: trimmed_start,
    };
    if body.is_empty() {
        return Err(c.err("empty literal"));
    }
    let mut sign = Rational::one();
    match c.peek() {
        Some(b'-') => {
            sign = -sign;
            c.pos += 1;
        }
        Some(b'+') => c.pos += 1,
        _ => {}
    }
    let first = c.fraction()?;
    let value = match c.peek() {
        Some(b'*') | Some(b'i') => {
            let m = c.imag_suffix(first)?;
            Gaussian::new(Rational::zero(), sign * m)
        }
        None => {
            let r = first.ok_or_else(|| c.err("expected a number or 'i'"))?;
            Gaussian::new(sign * r, Rational::zero())
        }
        Some(b'+') | Some(b'-') => {
            let r = first.ok_or_else(|| c.err("expected a number"))?;
            let isign = if c.peek() == Some(b'-') {
                -Rational::one()
            } else {
                Rational::one()
            };
            c.pos += 1;
            let mag = c.fraction()?;
            let m = c.imag_suffix(mag)?;
            Gaussian::new(sign * r, isign * m)
        }
        Some(_) => return Err(c.err("unexpected character")),
    };
    if c.pos != body.len() {
        return Err(c.err("trailing characters"));
    }
    Ok(value)
}

pub fn format_scalar(g: &Gaussian) -> String {
    g.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_literals() {
        assert_eq!(
            parse_scalar("3/5+2/7*i").unwrap(),
            Gaussian::complex(3, 5, 2, 7)
        );
        assert_eq!(parse_scalar("-i").unwrap(), Gaussian::complex(0, 1, -1, 1));
        assert_eq!(parse_scalar("0/1").unwrap(), Gaussian::zero());
        assert_eq!(parse_scalar("2i").unwrap(), Gaussian::complex(0, 1, 2, 1));
        assert_eq!(parse_scalar(" -1/5 ").unwrap(), Gaussian::from_ratio(-1, 5));
        assert_eq!(parse_scalar("1-i").unwrap(), Gaussian::complex(1, 1, -1, 1));
    }

    #[test]
    fn rejects_bad_literals_with_position() {
        assert_eq!(
            parse_scalar("1/0").unwrap_err(),
            Error::ZeroDenominator { position: 2 }
        );
        match parse_scalar("3/5+x").unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 4),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/").is_err());
        assert!(parse_scalar("1ii").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(Gaussian::complex(3, 5, 2, 7).to_string(), "3/5+2/7*i");
        assert_eq!(Gaussian::complex(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(Gaussian::complex(7, 25, -24, 25).to_string(), "7/25-24/25*i");
        assert_eq!(Gaussian::zero().to_string(), "0");
    }

    #[test]
    fn square_roots() {
        assert_eq!(Gaussian::from_ratio(-1, 4).sqrt(), Some(Gaussian::complex(0, 1, 1, 2)));
        assert_eq!(Gaussian::complex(0, 1, 2, 1).sqrt(), Some(Gaussian::complex(1, 1, 1, 1)));
        assert_eq!(Gaussian::from_int(7).sqrt(), None);
        let z = Gaussian::complex(-7, 1, 24, 1);
        let r = z.sqrt().unwrap();
        assert_eq!(r.clone() * &r, z);
    }
}
