//! sparse multivariate polynomials over Q(i), graded-lex order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::impl_ops_via_ref;
use crate::scalars::traits::{ExactDiv, Field, GaussianAlgebra, Scalar};
use crate::scalars::Gaussian;

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(mut exps: Vec<u16>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize, e: u16) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = e;
        Monomial::new(v)
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let n = self.0.len().max(o.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= o.exp(i))
    }

    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        if !d.divides(self) {
            return None;
        }
        Some(Monomial::new(
            (0..self.0.len()).map(|i| self.exp(i) - d.exp(i)).collect(),
        ))
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let n = self.0.len().min(o.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).min(o.exp(i))).collect())
    }

    /// Splits off the exponents of the listed variables.
    pub fn split(&self, vars: &[usize]) -> (Monomial, Monomial) {
        let mut kept = self.0.clone();
        let mut taken = vec![0u16; self.0.len()];
        for &v in vars {
            if v < kept.len() {
                taken[v] = kept[v];
                kept[v] = 0;
            }
        }
        (Monomial::new(kept), Monomial::new(taken))
    }

    /// All monomials of total degree `d` in variables `vars`.
    pub fn all_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
        fn rec(vars: &[usize], d: u32, cur: &mut Vec<(usize, u16)>, out: &mut Vec<Monomial>) {
            if vars.len() == 1 {
                cur.push((vars[0], d as u16));
                let n = cur.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
                let mut e = vec![0u16; n];
                for &(v, x) in cur.iter() {
                    e[v] += x;
                }
                out.push(Monomial::new(e));
                cur.pop();
                return;
            }
            for k in (0..=d).rev() {
                cur.push((vars[0], k as u16));
                rec(&vars[1..], d - k, cur, out);
                cur.pop();
            }
        }
        if vars.is_empty() {
            return if d == 0 { vec![Monomial::one()] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(vars, d, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&o.exp(i)) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub type VarNames = Arc<Vec<String>>;

pub fn var_names(names: &[&str]) -> VarNames {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Polynomial over Q(i). Variable names are carried only for display.
#[derive(Clone, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Gaussian>,
    names: Option<VarNames>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms
    }
}

impl MultiPoly {
    pub fn constant(c: Gaussian) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms, names: None }
    }

    pub fn var(i: usize, names: &VarNames) -> Self {
        MultiPoly::term(Monomial::var(i, 1), Gaussian::one()).with_names(names)
    }

    /// The variables `0..names.len()` in order.
    pub fn vars(names: &VarNames) -> Vec<MultiPoly> {
        (0..names.len()).map(|i| MultiPoly::var(i, names)).collect()
    }

    pub fn term(m: Monomial, c: Gaussian) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms, names: None }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Gaussian)>) -> Self {
        let mut p = MultiPoly::default();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn with_names(mut self, names: &VarNames) -> Self {
        self.names = Some(names.clone());
        self
    }

    pub fn names(&self) -> Option<&VarNames> {
        self.names.as_ref()
    }

    fn merged_names(&self, o: &Self) -> Option<VarNames> {
        match (&self.names, &o.names) {
            (Some(a), Some(b)) => Some(if a.len() >= b.len() { a.clone() } else { b.clone() }),
            (Some(a), None) => Some(a.clone()),
            (None, b) => b.clone(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Gaussian)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Gaussian {
        self.terms.get(m).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Gaussian)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Gaussian> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = None;
        self.terms.keys().all(|m| {
            let md = m.degree();
            *d.get_or_insert(md) == md
        })
    }

    /// Degree in the listed variables, if every term has the same one.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<u32> {
        let mut d = None;
        for m in self.terms.keys() {
            let md: u32 = vars.iter().map(|&v| m.exp(v) as u32).sum();
            if *d.get_or_insert(md) != md {
                return None;
            }
        }
        d
    }

    pub fn variables_used(&self) -> Vec<usize> {
        let mut used = Vec::new();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 && !used.contains(&i) {
                    used.push(i);
                }
            }
        }
        used.sort();
        used
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return MultiPoly { terms: BTreeMap::new(), names: self.names.clone() };
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c)).collect(),
            names: self.names.clone(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Gaussian) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.mul(mono), x.clone() * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
            names: self.names.clone(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn div_monomial(&self, mono: &Monomial) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            out.insert(m.div(mono)?, c.clone());
        }
        Some(MultiPoly { terms: out, names: self.names.clone() })
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> Self {
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        let mut out = MultiPoly { terms: BTreeMap::new(), names: self.merged_names(value) };
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().clone() * value;
                powers.push(next);
            }
            let mut rest = m.0.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            let t = powers[e].mul_monomial(&Monomial::new(rest), c);
            out = out + &t;
        }
        out
    }

    /// Simultaneous substitution of every variable `i` by `values[i]` (others kept).
    pub fn substitute_all(&self, values: &[Option<MultiPoly>]) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            let mut rest = m.0.clone();
            for (i, val) in values.iter().enumerate() {
                if let Some(v) = val {
                    let e = m.exp(i);
                    if e > 0 {
                        t = t * &v.pow(e as u32);
                        rest[i] = 0;
                    }
                }
            }
            out = out + &t.mul_monomial(&Monomial::new(rest), &Gaussian::one());
        }
        if let Some(n) = &self.names {
            out.names.get_or_insert_with(|| n.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Gaussian]) -> Gaussian {
        let mut acc = Gaussian::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t * &point[i].pow(e as u32);
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// Groups terms by their part outside `coef_vars`; the values are polynomials in `coef_vars`.
    pub fn split_coefficients(&self, coef_vars: &[usize]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (kept, taken) = m.split(coef_vars);
            out.entry(kept).or_default().add_term(taken, c.clone());
        }
        for p in out.values_mut() {
            p.names = self.names.clone();
        }
        out
    }

    /// Division with remainder by a polynomial in one variable `v` (both univariate in `v`).
    fn univariate_rem(&self, d: &MultiPoly) -> MultiPoly {
        let (ld, lc) = d.leading().expect("nonzero divisor");
        let (ld, lc) = (ld.clone(), lc.clone());
        let mut r = self.clone();
        while let Some((lm, c)) = r.leading() {
            let Some(q) = lm.div(&ld) else { break };
            let coef = c.clone() * &lc.inv().unwrap();
            r = r - d.mul_monomial(&q, &coef);
        }
        r
    }

    /// Monic gcd when both polynomials involve at most one (common) variable.
    pub fn univariate_gcd(&self, o: &MultiPoly) -> Option<MultiPoly> {
        let mut used = self.variables_used();
        for v in o.variables_used() {
            if !used.contains(&v) {
                used.push(v);
            }
        }
        if used.len() > 1 {
            return None;
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.univariate_rem(&b);
            a = b;
            b = r;
        }
        Some(a.monic())
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let n = Some(Arc::new(names.to_vec()));
        MultiPoly { terms: self.terms.clone(), names: n }.to_string()
    }
}

fn p_add(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (big, small) = if a.terms.len() >= b.terms.len() { (a, b) } else { (b, a) };
    let mut out = big.clone();
    for (m, c) in &small.terms {
        out.add_term(m.clone(), c.clone());
    }
    out.names = a.merged_names(b);
    out
}
fn p_sub(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(m.clone(), -c.clone());
    }
    out.names = a.merged_names(b);
    out
}
fn p_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly { terms: BTreeMap::new(), names: a.merged_names(b) };
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            out.add_term(ma.mul(mb), ca.clone() * cb);
        }
    }
    out
}
fn p_neg(a: &MultiPoly) -> MultiPoly {
    MultiPoly {
        terms: a.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        names: a.names.clone(),
    }
}
impl_ops_via_ref!(MultiPoly, p_add, p_sub, p_mul, p_neg);

impl Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn one() -> Self {
        MultiPoly::constant(Gaussian::one())
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(Gaussian::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl GaussianAlgebra for MultiPoly {
    fn from_gaussian(g: &Gaussian) -> Self {
        MultiPoly::constant(g.clone())
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv().ok()?));
        }
        let (ld, lc) = d.leading().unwrap();
        let (ld, lcinv) = (ld.clone(), lc.inv().ok()?);
        let mut q = MultiPoly { terms: BTreeMap::new(), names: self.merged_names(d) };
        let mut r = self.clone();
        while let Some((lm, c)) = r.leading() {
            let m = lm.div(&ld)?;
            let coef = c.clone() * &lcinv;
            r = r - d.mul_monomial(&m, &coef);
            q.add_term(m, coef);
        }
        Some(q)
    }
}

fn fmt_coeff_term(c: &Gaussian, m: &Monomial, names: Option<&VarNames>, first: bool) -> String {
    let mono = fmt_monomial(m, names);
    let (neg, mag) = if c.is_real() && c.re.is_negative() {
        (true, -c.clone())
    } else {
        (false, c.clone())
    };
    let coef = if mag.is_one() && !mono.is_empty() {
        String::new()
    } else if mag.is_real() || (mag.re.is_zero() && mono.is_empty()) {
        mag.to_string()
    } else {
        format!("({mag})")
    };
    let body = match (coef.is_empty(), mono.is_empty()) {
        (true, _) => mono,
        (false, true) => coef,
        (false, false) => format!("{coef}*{mono}"),
    };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

fn fmt_monomial(m: &Monomial, names: Option<&VarNames>) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names
            .and_then(|n| n.get(i).cloned())
            .unwrap_or_else(|| format!("t{i}"));
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            s.push_str(&fmt_coeff_term(c, m, self.names.as_ref(), k == 0));
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (MultiPoly, MultiPoly) {
        let n = var_names(&["x", "y"]);
        (MultiPoly::var(0, &n), MultiPoly::var(1, &n))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![1, 1]);
        let c = Monomial::new(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
        assert_eq!(Monomial::all_of_degree(&[0, 1, 2], 2).len(), 6);
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let f = (x.clone() + &y) * &(x.clone() - &y);
        assert_eq!(f.div_exact(&(x.clone() - &y)), Some(x.clone() + &y));
        assert_eq!(f.div_exact(&(x.clone() + MultiPoly::one())), None);
    }

    #[test]
    fn display() {
        let (x, y) = xy();
        let f = x.clone() * &x - y.scale(&Gaussian::from_ratio(3, 5)) + MultiPoly::imag_unit();
        assert_eq!(f.to_string(), "x^2 - 3/5*y + i");
    }

    #[test]
    fn univariate_gcd() {
        let (x, _) = xy();
        let one = MultiPoly::one();
        let a = (x.clone() + &one) * &(x.clone() - &one);
        let b = (x.clone() + &one) * &x;
        assert_eq!(a.univariate_gcd(&b), Some(x.clone() + &one));
    }

    #[test]
    fn substitution() {
        let (x, y) = xy();
        let f = x.clone() * &y;
        let g = f.substitute(1, &(x.clone() + MultiPoly::one()));
        assert_eq!(g, x.clone() * &x + &x);
    }
}
