//! the free algebra on four generators.
//!
//! Words are ordered by length, then lexicographically with the first letter
//! most significant, so the degree-n coefficient vector of a word
//! `x_{i1}...x_{in}` sits at index `i1*4^(n-1) + ... + in`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Scalar;

pub const NGENS: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: &[u8]) -> Self {
        assert!(letters.iter().all(|&l| (l as usize) < NGENS), "generator index out of range");
        Word(letters.to_vec())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn push(&self, g: u8) -> Word {
        let mut v = self.0.clone();
        v.push(g);
        Word(v)
    }

    /// Position in the lex-ordered basis of its degree.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * NGENS + l as usize)
    }

    pub fn from_index(mut idx: usize, n: usize) -> Word {
        let mut v = vec![0u8; n];
        for slot in v.iter_mut().rev() {
            *slot = (idx % NGENS) as u8;
            idx /= NGENS;
        }
        Word(v)
    }

    pub fn all_of_degree(n: usize) -> impl Iterator<Item = Word> {
        (0..NGENS.pow(n as u32)).map(move |i| Word::from_index(i, n))
    }

    pub fn render(&self, names: &[&str; NGENS]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|&l| names[l as usize]).collect::<Vec<_>>().join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&GEN_NAMES_X))
    }
}

pub const GEN_NAMES_X: [&str; NGENS] = ["x0", "x1", "x2", "x3"];
pub const GEN_NAMES_CHL: [&str; NGENS] = ["x1", "x2", "x3", "x4"];
pub const GEN_NAMES_Z: [&str; NGENS] = ["z0", "z1", "z2", "z3"];

/// A noncommutative polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct FreeElement<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for FreeElement<S> {
    fn default() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> FreeElement<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(i: usize) -> Self {
        Self::monomial(Word::new(&[i as u8]), S::one())
    }

    pub fn gens() -> [Self; NGENS] {
        [Self::gen(0), Self::gen(1), Self::gen(2), Self::gen(3)]
    }

    pub fn scalar(c: S) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreeElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut f = Self::zero();
        for (w, c) in it {
            f.add_term(w, c);
        }
        f
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Common degree of all terms, `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn homogeneous_part(&self, n: usize) -> Self {
        FreeElement {
            terms: self.terms.iter().filter(|(w, _)| w.len() == n).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c)))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FreeElement<T> {
        FreeElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<FreeElement<T>, E> {
        let mut out = FreeElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        FreeElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.concat(b), x.clone() * y);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::scalar(S::one()), |acc, _| acc.mul(self))
    }

    /// `[f, g] = fg - gf`
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// `{f, g} = fg + gf`
    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    /// Ring endomorphism sending `x_j` to `sum_k m[k][j] x_k` (column `j` is the image of `x_j`).
    pub fn apply_linear(&self, m: &[Vec<S>]) -> Self {
        let images: Vec<FreeElement<S>> = (0..NGENS)
            .map(|j| Self::from_terms((0..NGENS).map(|k| (Word::new(&[k as u8]), m[k][j].clone()))))
            .collect();
        self.substitute(&images)
    }

    /// Ring endomorphism sending `x_j` to `images[j]`.
    pub fn substitute(&self, images: &[FreeElement<S>]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut t = Self::scalar(c.clone());
            for &l in w.letters() {
                t = t.mul(&images[l as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Dense coefficients of the degree-`n` part in lex word order.
    pub fn coefficient_vector(&self, n: usize) -> Vec<S> {
        let mut v = vec![S::zero(); NGENS.pow(n as u32)];
        for (w, c) in &self.terms {
            if w.len() == n {
                v[w.index()] = c.clone();
            }
        }
        v
    }

    pub fn from_coefficient_vector(v: &[S], n: usize) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (Word::from_index(i, n), c.clone())))
    }

    pub fn render(&self, names: &[&str; NGENS]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-', ' ']) => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let mag = if mag.contains(['+', '-', ' ']) { format!("({mag})") } else { mag };
            let body = match (mag.as_str(), w.is_empty()) {
                ("1", false) => w.render(names),
                (_, true) => mag,
                _ => format!("{mag}*{}", w.render(names)),
            };
            match (k == 0, neg) {
                (true, false) => out.push_str(&body),
                (true, true) => out.push_str(&format!("-{body}")),
                (false, false) => out.push_str(&format!(" + {body}")),
                (false, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for FreeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&GEN_NAMES_X))
    }
}

impl<S: Scalar> fmt::Debug for FreeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Image of a relation row (coefficients on `x_k x_j` at index `4k + j`) as an element.
pub fn element_from_row<S: Scalar>(row: &[S]) -> FreeElement<S> {
    FreeElement::from_coefficient_vector(row, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gaussian;

    type F = FreeElement<Gaussian>;

    #[test]
    fn word_indexing() {
        assert_eq!(Word::new(&[0, 1]).index(), 1);
        assert_eq!(Word::new(&[3, 2]).index(), 14);
        assert_eq!(Word::from_index(14, 2), Word::new(&[3, 2]));
    }

    #[test]
    fn relation_vector() {
        let x = F::gens();
        let f = x[0].commutator(&x[1]).sub(&x[2].anticommutator(&x[3]).scale(&Gaussian::from_int(4)));
        let v = f.coefficient_vector(2);
        let nz: Vec<(usize, String)> =
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_string())).collect();
        assert_eq!(
            nz,
            vec![(1, "1".into()), (4, "-1".into()), (11, "-4".into()), (14, "-4".into())]
        );
    }

    #[test]
    fn render_uses_names() {
        let x = F::gens();
        let f = x[0].mul(&x[1]).sub(&x[2].scale(&Gaussian::i()));
        assert_eq!(f.render(&GEN_NAMES_CHL), "-i*x3 + x1*x2");
    }
}
