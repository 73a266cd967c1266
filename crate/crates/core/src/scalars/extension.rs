//! radical extension towers: `F[t1..tk] / (tj^nj - rj)` with radicands in the base.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::traits::{Field, GaussianAlgebra, Scalar};
use crate::scalars::Gaussian;

#[derive(Debug, PartialEq)]
pub struct Tower<F> {
    symbols: Vec<String>,
    powers: Vec<usize>,
    radicands: Vec<F>,
}

impl<F: Field> Tower<F> {
    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn degree(&self) -> usize {
        self.powers.iter().product()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn radicand(&self, j: usize) -> &F {
        &self.radicands[j]
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        self.powers
            .iter()
            .map(|&n| {
                let e = idx % n;
                idx /= n;
                e
            })
            .collect()
    }

    fn index(&self, exps: &[usize]) -> usize {
        let mut idx = 0;
        let mut stride = 1;
        for (e, &n) in exps.iter().zip(&self.powers) {
            idx += e * stride;
            stride *= n;
        }
        idx
    }

    fn is_prefix_of(&self, o: &Tower<F>) -> bool {
        self.symbols.len() <= o.symbols.len()
            && self.symbols[..] == o.symbols[..self.symbols.len()]
            && self.powers[..] == o.powers[..self.powers.len()]
    }
}

/// Adjoins `symbol` with `symbol^n = radicand` on top of `base` (or on the ground field).
pub fn adjoin_root<F: Field>(
    base: Option<&Arc<Tower<F>>>,
    symbol: &str,
    n: usize,
    radicand: F,
) -> Result<Arc<Tower<F>>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("root degree {n} < 2")));
    }
    if radicand.is_zero() {
        return Err(Error::InvalidInput(format!("radicand of {symbol} is zero")));
    }
    let mut t = match base {
        Some(b) => Tower {
            symbols: b.symbols.clone(),
            powers: b.powers.clone(),
            radicands: b.radicands.clone(),
        },
        None => Tower { symbols: vec![], powers: vec![], radicands: vec![] },
    };
    if t.symbols.iter().any(|s| s == symbol) {
        return Err(Error::InvalidInput(format!("symbol {symbol} already adjoined")));
    }
    t.symbols.push(symbol.to_string());
    t.powers.push(n);
    t.radicands.push(radicand);
    Ok(Arc::new(t))
}

pub fn adjoin_fourth_root<F: Field>(
    base: Option<&Arc<Tower<F>>>,
    symbol: &str,
    radicand: F,
) -> Result<Arc<Tower<F>>> {
    adjoin_root(base, symbol, 4, radicand)
}

/// Element of a radical tower. `tower == None` marks a ground-field constant.
#[derive(Clone)]
pub struct ExtensionElement<F> {
    tower: Option<Arc<Tower<F>>>,
    coeffs: Vec<F>,
}

impl<F: Field> ExtensionElement<F> {
    pub fn constant(c: F) -> Self {
        ExtensionElement { tower: None, coeffs: vec![c] }
    }

    pub fn generator(tower: &Arc<Tower<F>>, j: usize) -> Self {
        let mut e = vec![0; tower.len()];
        e[j] = 1;
        Self::monomial(tower, &e, F::one())
    }

    pub fn generator_named(tower: &Arc<Tower<F>>, symbol: &str) -> Self {
        let j = tower.symbols.iter().position(|s| s == symbol).expect("unknown symbol");
        Self::generator(tower, j)
    }

    pub fn monomial(tower: &Arc<Tower<F>>, exps: &[usize], c: F) -> Self {
        let mut coeffs = vec![F::zero(); tower.degree()];
        let mut red = c;
        let mut e = exps.to_vec();
        for (j, x) in e.iter_mut().enumerate() {
            while *x >= tower.powers[j] {
                *x -= tower.powers[j];
                red = red * &tower.radicands[j];
            }
        }
        coeffs[tower.index(&e)] = red;
        ExtensionElement { tower: Some(tower.clone()), coeffs }
    }

    pub fn tower(&self) -> Option<&Arc<Tower<F>>> {
        self.tower.as_ref()
    }

    /// Coordinates in the monomial basis of `tower` (which must contain this element's tower).
    pub fn components(&self, tower: &Arc<Tower<F>>) -> Vec<F> {
        let mut out = vec![F::zero(); tower.degree()];
        if let Some(t) = &self.tower {
            assert!(t.is_prefix_of(tower), "element lives in an unrelated tower");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        out
    }

    /// Exponent vectors of the basis monomials of `tower`.
    pub fn basis_exponents(tower: &Arc<Tower<F>>) -> Vec<Vec<usize>> {
        (0..tower.degree()).map(|i| tower.exponents(i)).collect()
    }

    pub fn base_value(&self) -> Option<F> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn common_tower(&self, o: &Self) -> Option<Arc<Tower<F>>> {
        match (&self.tower, &o.tower) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || b.is_prefix_of(a) {
                    Some(a.clone())
                } else if a.is_prefix_of(b) {
                    Some(b.clone())
                } else {
                    panic!("incompatible extension towers")
                }
            }
        }
    }

    fn padded(&self, n: usize) -> Vec<F> {
        let mut v = self.coeffs.clone();
        v.resize(n, F::zero());
        v
    }

    fn zip_with(&self, o: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        let tower = self.common_tower(o);
        let n = tower.as_ref().map_or(1, |t| t.degree());
        let (a, b) = (self.padded(n), o.padded(n));
        ExtensionElement { tower, coeffs: a.iter().zip(&b).map(|(x, y)| f(x, y)).collect() }
    }

    fn product(&self, o: &Self) -> Self {
        let Some(tower) = self.common_tower(o) else {
            return Self::constant(self.coeffs[0].clone() * &o.coeffs[0]);
        };
        let n = tower.degree();
        let mut out = vec![F::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ei = tower.exponents(i);
            for (j, y) in o.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let ej = tower.exponents(j);
                let mut c = x.clone() * y;
                let mut e = vec![0; tower.len()];
                for k in 0..tower.len() {
                    let s = ei[k] + ej[k];
                    if s >= tower.powers[k] {
                        e[k] = s - tower.powers[k];
                        c = c * &tower.radicands[k];
                    } else {
                        e[k] = s;
                    }
                }
                let idx = tower.index(&e);
                out[idx] = out[idx].clone() + &c;
            }
        }
        ExtensionElement { tower: Some(tower), coeffs: out }
    }

    fn nonzero_terms(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    fn solve_inverse(&self, tower: &Arc<Tower<F>>) -> Result<Self> {
        let n = tower.degree();
        // column k holds self * basis_k
        let mut m: Vec<Vec<F>> = vec![vec![F::zero(); n + 1]; n];
        for k in 0..n {
            let b = Self::monomial(tower, &tower.exponents(k), F::one());
            let col = self.product(&b).padded(n);
            for (r, v) in col.into_iter().enumerate() {
                m[r][k] = v;
            }
        }
        m[0][n] = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Err(Error::NotInvertible(self.to_string()));
            };
            m.swap(col, p);
            let inv = m[col][col].inv()?;
            for x in m[col].iter_mut() {
                *x = x.clone() * &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = x.clone() - &(f.clone() * y);
                    }
                }
            }
        }
        Ok(ExtensionElement {
            tower: Some(tower.clone()),
            coeffs: m.into_iter().map(|row| row[n].clone()).collect(),
        })
    }
}

impl<F: Field> PartialEq for ExtensionElement<F> {
    fn eq(&self, o: &Self) -> bool {
        let n = self.coeffs.len().max(o.coeffs.len());
        self.padded(n) == o.padded(n)
    }
}

impl<F: Field> Add for ExtensionElement<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.zip_with(&o, |x, y| x.clone() + y)
    }
}
impl<'a, F: Field> Add<&'a ExtensionElement<F>> for ExtensionElement<F> {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        self.zip_with(o, |x, y| x.clone() + y)
    }
}
impl<F: Field> Sub for ExtensionElement<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.zip_with(&o, |x, y| x.clone() - y)
    }
}
impl<'a, F: Field> Sub<&'a ExtensionElement<F>> for ExtensionElement<F> {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        self.zip_with(o, |x, y| x.clone() - y)
    }
}
impl<F: Field> Mul for ExtensionElement<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.product(&o)
    }
}
impl<'a, F: Field> Mul<&'a ExtensionElement<F>> for ExtensionElement<F> {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        self.product(o)
    }
}
impl<F: Field> Neg for ExtensionElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        ExtensionElement { tower: self.tower, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Scalar for ExtensionElement<F> {
    fn zero() -> Self {
        Self::constant(F::zero())
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<F: Field> Field for ExtensionElement<F> {
    fn inv(&self) -> Result<Self> {
        let terms = self.nonzero_terms();
        let Some(tower) = self.tower.clone() else {
            return Ok(Self::constant(self.coeffs[0].inv()?));
        };
        match terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [i] => {
                // c t^e has inverse c^-1 prod t_j^(n_j - e_j) / r_j
                let e = tower.exponents(*i);
                let mut c = self.coeffs[*i].inv()?;
                let mut inv_e = vec![0; tower.len()];
                for j in 0..tower.len() {
                    if e[j] > 0 {
                        inv_e[j] = tower.powers[j] - e[j];
                        c = c * &tower.radicands[j].inv()?;
                    }
                }
                Ok(Self::monomial(&tower, &inv_e, c))
            }
            _ => self.solve_inverse(&tower),
        }
    }
}

impl<F: Field + GaussianAlgebra> GaussianAlgebra for ExtensionElement<F> {
    fn from_gaussian(g: &Gaussian) -> Self {
        Self::constant(F::from_gaussian(g))
    }
}

fn needs_parens(s: &str) -> bool {
    s.trim_start_matches('-').contains(['+', '-', ' ', '/'])
}

impl<F: Field> fmt::Display for ExtensionElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(tower) = &self.tower else {
            return write!(f, "{}", self.coeffs[0]);
        };
        let mut parts = Vec::new();
        for i in self.nonzero_terms() {
            let e = tower.exponents(i);
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| {
                    if x == 1 {
                        tower.symbols[j].clone()
                    } else {
                        format!("{}^{}", tower.symbols[j], x)
                    }
                })
                .collect();
            let c = self.coeffs[i].to_string();
            let term = if mono.is_empty() {
                c
            } else if self.coeffs[i].is_one() {
                mono.join("*")
            } else if needs_parens(&c) {
                format!("({c})*{}", mono.join("*"))
            } else {
                format!("{c}*{}", mono.join("*"))
            };
            parts.push(term);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<F: Field> fmt::Debug for ExtensionElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = ExtensionElement<Gaussian>;

    #[test]
    fn unit_root_inverse() {
        let t = adjoin_fourth_root(None, "t", Gaussian::one()).unwrap();
        let x = E::generator(&t, 0);
        assert_eq!(x.clone() * &x.pow(3), E::one());
        assert_eq!(x.inv().unwrap(), x.pow(3));
    }

    #[test]
    fn zero_divisor_detected() {
        let t = adjoin_fourth_root(None, "q", Gaussian::from_int(9)).unwrap();
        let q = E::generator(&t, 0);
        let q2 = q.clone() * &q;
        let three = E::from_i64(3);
        assert!((q2.clone() - &three) * &(q2.clone() + &three) == E::zero());
        assert!(matches!((q2 - &three).inv(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn monomial_inverse() {
        let t = adjoin_fourth_root(None, "q", Gaussian::from_int(2)).unwrap();
        let q = E::generator(&t, 0);
        let expect = q.pow(3) * &E::from_gaussian(&Gaussian::from_ratio(1, 2));
        assert_eq!(q.inv().unwrap(), expect);
        let general = (q.clone() + E::one()).inv().unwrap();
        assert_eq!(general * &(q + E::one()), E::one());
    }

    #[test]
    fn towers_compose() {
        let t1 = adjoin_root(None, "u", 2, Gaussian::from_int(7)).unwrap();
        let t2 = adjoin_root(Some(&t1), "v", 2, Gaussian::from_int(-1)).unwrap();
        let u = E::generator(&t1, 0);
        let v = E::generator(&t2, 1);
        let w = u.clone() * &v;
        assert_eq!(w.clone() * &w, E::from_i64(-7));
        assert_eq!(w.to_string(), "u*v");
    }
}
