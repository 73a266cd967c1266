//! arithmetic mod a prime p ≡ 1 (mod 4), with i mapped to the smallest root of -1.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::impl_ops_via_ref;
use crate::scalars::poly::{Monomial, MultiPoly};
use crate::scalars::traits::{Field, Scalar};
use crate::scalars::{Gaussian, Rational};

pub const DEFAULT_PRIME: u64 = 65537;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    sqrt_minus_one: u64,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p % 4 != 1 || p >= (1 << 62) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let g = (2..p)
            .find(|&g| powmod(g, (p - 1) / 2, p) == p - 1)
            .expect("quadratic non-residue exists");
        let x = powmod(g, (p - 1) / 4, p);
        Ok(PrimeField { p, sqrt_minus_one: x.min(p - x) })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn sqrt_minus_one(&self) -> u64 {
        self.sqrt_minus_one
    }

    pub fn element(&self, v: u64) -> Fp {
        Fp { value: v % self.p, modulus: self.p }
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn reduce_rational(&self, r: &Rational) -> Result<Fp> {
        let d = self.reduce_int(r.denom());
        if d == 0 {
            return Err(Error::NotIntegralModP(r.to_string()));
        }
        let n = self.reduce_int(r.numer());
        Ok(self.element(mulmod(n, powmod(d, self.p - 2, self.p), self.p)))
    }

    pub fn reduce(&self, g: &Gaussian) -> Result<Fp> {
        let re = self.reduce_rational(&g.re)?;
        let im = self.reduce_rational(&g.im)?;
        Ok(re + im * self.element(self.sqrt_minus_one))
    }

    pub fn reduce_poly(&self, f: &MultiPoly) -> Result<BTreeMap<Monomial, Fp>> {
        let mut out = BTreeMap::new();
        for (m, c) in f.terms() {
            let r = self.reduce(c)?;
            if !r.is_zero() {
                out.insert(m.clone(), r);
            }
        }
        Ok(out)
    }
}

/// Residue mod `modulus`. A zero modulus marks an integer constant (held as i64)
/// not yet tied to a prime; it is bound on first contact with a reduced value.
#[derive(Clone, Copy)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn bind(&self, p: u64) -> u64 {
        if self.modulus == 0 {
            (self.value as i64).rem_euclid(p as i64) as u64
        } else {
            self.value
        }
    }

    fn pair(a: &Fp, b: &Fp) -> Option<(u64, u64, u64)> {
        let p = match (a.modulus, b.modulus) {
            (0, 0) => return None,
            (0, p) | (p, 0) => p,
            (p, q) => {
                assert_eq!(p, q, "mixing residues of different primes");
                p
            }
        };
        Some((a.bind(p), b.bind(p), p))
    }
}

fn unbound(v: i64) -> Fp {
    Fp { value: v as u64, modulus: 0 }
}

fn fp_add(a: &Fp, b: &Fp) -> Fp {
    match Fp::pair(a, b) {
        Some((x, y, p)) => Fp { value: (x + y) % p, modulus: p },
        None => unbound((a.value as i64).checked_add(b.value as i64).expect("overflow")),
    }
}
fn fp_neg(a: &Fp) -> Fp {
    if a.modulus == 0 {
        unbound(-(a.value as i64))
    } else {
        Fp { value: (a.modulus - a.value) % a.modulus, modulus: a.modulus }
    }
}
fn fp_sub(a: &Fp, b: &Fp) -> Fp {
    fp_add(a, &fp_neg(b))
}
fn fp_mul(a: &Fp, b: &Fp) -> Fp {
    match Fp::pair(a, b) {
        Some((x, y, p)) => Fp { value: mulmod(x, y, p), modulus: p },
        None => unbound((a.value as i64).checked_mul(b.value as i64).expect("overflow")),
    }
}
impl_ops_via_ref!(Fp, fp_add, fp_sub, fp_mul, fp_neg);

impl PartialEq for Fp {
    fn eq(&self, o: &Self) -> bool {
        match Fp::pair(self, o) {
            Some((x, y, _)) => x == y,
            None => self.value == o.value,
        }
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        unbound(0)
    }
    fn one() -> Self {
        unbound(1)
    }
    fn from_i64(n: i64) -> Self {
        unbound(n)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl Field for Fp {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.modulus == 0 {
            return match self.value as i64 {
                1 | -1 => Ok(*self),
                v => Err(Error::NotInvertible(format!("{v} (no prime bound)"))),
            };
        }
        Ok(Fp { value: powmod(self.value, self.modulus - 2, self.modulus), modulus: self.modulus })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value as i64)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value as i64)
        } else {
            write!(f, "{} (mod {})", self.value, self.modulus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let i = f.element(f.sqrt_minus_one());
        assert_eq!(i * i, -Fp::one());
        assert_eq!(f.sqrt_minus_one(), 256);
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(PrimeField::new(7), Err(Error::InvalidPrime(7)));
        assert_eq!(PrimeField::new(65535), Err(Error::InvalidPrime(65535)));
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn reduce_rationals() {
        let f = PrimeField::new(13).unwrap();
        let x = f.reduce(&Gaussian::from_ratio(1, 5)).unwrap();
        assert_eq!(x * f.element(5), Fp::one());
        assert!(f.reduce(&Gaussian::from_ratio(1, 13)).is_err());
        assert_eq!(x.modulus(), 13);
    }

    #[test]
    fn unbound_constants_bind() {
        let f = PrimeField::new(13).unwrap();
        let x = -Fp::one() + f.element(3);
        assert_eq!(x.value(), 2);
        assert_eq!(x.modulus(), 13);
    }
}
