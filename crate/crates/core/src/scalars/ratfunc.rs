//! quotients of multivariate polynomials; equality by cross-multiplication.
//!
//! Simplification is best-effort: monomial content, exact division in
//! either direction and univariate gcds. No general multivariate gcd.

use std::fmt;

use crate::error::{Error, Result};
use crate::impl_ops_via_ref;
use crate::scalars::poly::{MultiPoly, VarNames};
use crate::scalars::traits::{ExactDiv, Field, GaussianAlgebra, Scalar};
use crate::scalars::Gaussian;

#[derive(Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction { num: p, den: MultiPoly::one() }
    }

    pub fn var(i: usize, names: &VarNames) -> Self {
        Self::from_poly(MultiPoly::var(i, names))
    }

    pub fn vars(names: &VarNames) -> Vec<Self> {
        (0..names.len()).map(|i| Self::var(i, names)).collect()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<MultiPoly> {
        let c = self.den.constant_value()?;
        Some(self.num.scale(&c.inv().ok()?))
    }

    pub fn constant_value(&self) -> Option<Gaussian> {
        self.as_polynomial()?.constant_value()
    }

    pub fn eval(&self, point: &[Gaussian]) -> Result<Gaussian> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.num.eval(point).div(&d)
    }

    /// Substitutes rational functions for variables (by index).
    pub fn substitute_all(&self, values: &[Option<RationalFunction>]) -> Result<Self> {
        let map = |p: &MultiPoly| -> RationalFunction {
            let mut acc = RationalFunction::zero();
            for (m, c) in p.terms() {
                let mut t = RationalFunction::from_gaussian(c);
                let mut rest = m.exponents().to_vec();
                for (i, v) in values.iter().enumerate() {
                    if let Some(v) = v {
                        let e = m.exp(i);
                        if e > 0 {
                            t = t * &v.pow(e as u32);
                            rest[i] = 0;
                        }
                    }
                }
                let mono = crate::scalars::Monomial::new(rest);
                t = t * &RationalFunction::from_poly(MultiPoly::term(mono, Gaussian::one()));
                acc = acc + &t;
            }
            acc
        };
        map(&self.num).div(&map(&self.den))
    }

    fn normalized(mut num: MultiPoly, mut den: MultiPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: MultiPoly::one() };
        }
        if let Some(c) = den.constant_value() {
            let ci = c.inv().expect("nonzero constant");
            return RationalFunction { num: num.scale(&ci), den: MultiPoly::one() };
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            num = num.div_monomial(&g).unwrap();
            den = den.div_monomial(&g).unwrap();
        }
        if let Some(q) = num.div_exact(&den) {
            return RationalFunction { num: q, den: MultiPoly::one() };
        }
        if let Some(q) = den.div_exact(&num) {
            return Self::make_monic(MultiPoly::one(), q);
        }
        if let Some(g) = num.univariate_gcd(&den) {
            if !g.is_constant() {
                num = num.div_exact(&g).unwrap();
                den = den.div_exact(&g).unwrap();
            }
        }
        Self::make_monic(num, den)
    }

    fn make_monic(num: MultiPoly, den: MultiPoly) -> Self {
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let li = lc.inv().unwrap();
        RationalFunction { num: num.scale(&li), den: den.scale(&li) }
    }
}

fn rf_add(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    if a.num.is_zero() {
        return b.clone();
    }
    if b.num.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        return RationalFunction::normalized(a.num.clone() + &b.num, a.den.clone());
    }
    if let Some(k) = a.den.div_exact(&b.den) {
        return RationalFunction::normalized(a.num.clone() + &(b.num.clone() * &k), a.den.clone());
    }
    if let Some(k) = b.den.div_exact(&a.den) {
        return RationalFunction::normalized(a.num.clone() * &k + &b.num, b.den.clone());
    }
    RationalFunction::normalized(
        a.num.clone() * &b.den + &(b.num.clone() * &a.den),
        a.den.clone() * &b.den,
    )
}
fn rf_neg(a: &RationalFunction) -> RationalFunction {
    RationalFunction { num: -a.num.clone(), den: a.den.clone() }
}
fn rf_sub(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    rf_add(a, &rf_neg(b))
}
fn rf_mul(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    if a.num.is_zero() || b.num.is_zero() {
        return RationalFunction::zero();
    }
    let (mut an, mut ad) = (a.num.clone(), a.den.clone());
    let (mut bn, mut bd) = (b.num.clone(), b.den.clone());
    if !bd.is_constant() {
        if let Some(q) = an.div_exact(&bd) {
            an = q;
            bd = MultiPoly::one();
        }
    }
    if !ad.is_constant() {
        if let Some(q) = bn.div_exact(&ad) {
            bn = q;
            ad = MultiPoly::one();
        }
    }
    RationalFunction::normalized(an * &bn, ad * &bd)
}
impl_ops_via_ref!(RationalFunction, rf_add, rf_sub, rf_mul, rf_neg);

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.clone() * &o.den == o.num.clone() * &self.den
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl GaussianAlgebra for RationalFunction {
    fn from_gaussian(g: &Gaussian) -> Self {
        Self::from_poly(MultiPoly::constant(g.clone()))
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

fn paren(p: &MultiPoly, strict: bool) -> String {
    let s = p.to_string();
    if p.num_terms() > 1 || (strict && s.contains(['*', '/'])) {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", paren(&self.num, false), paren(&self.den, true))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::var_names;

    #[test]
    fn cancels_and_compares() {
        let n = var_names(&["a", "b"]);
        let (a, b) = (RationalFunction::var(0, &n), RationalFunction::var(1, &n));
        let x = (a.clone() * &a - b.clone() * &b).div(&(a.clone() - &b)).unwrap();
        assert_eq!(x, a.clone() + &b);
        assert!(x.is_polynomial());
        let y = a.div(&b).unwrap() + b.div(&a).unwrap();
        assert_eq!(y.to_string(), "(a^2 + b^2)/(a*b)");
        assert_eq!(y.clone() - &y, RationalFunction::zero());
    }

    #[test]
    fn shared_power_denominators() {
        let n = var_names(&["u", "v"]);
        let (u, v) = (RationalFunction::var(0, &n), RationalFunction::var(1, &n));
        let d = RationalFunction::one() + &(u.clone() * &v);
        let t = (u.clone() + &v).div(&d).unwrap();
        let s = t.clone() * &t + &t;
        assert_eq!(s.denom().total_degree(), Some(4));
    }
}
