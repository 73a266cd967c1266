//! degree-truncated computations in T(V)/(R).
//!
//! [`GradedAlgebra`] builds normal forms one degree at a time. Writing `N_n`
//! for the normal words of degree `n`, the quotient in degree `n` is
//! `(A_{n-1} ⊗ V) / span{ Σ r_kj · nf(u x_k) ⊗ x_j : u ∈ N_{n-2}, r ∈ R }`,
//! so each step only needs an echelon form with `4·dim A_{n-1}` columns.
//! Pivots are the lex-smallest words; the normal words are the complement of
//! the leading words of the ideal, exactly as for a full row reduction of the
//! degree-`n` slice (see [`ideal_slice`], used as the oracle in tests).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, Word, NGENS};
use crate::linalg::{Echelon, SparseVec};
use crate::presentations::{RelationSpace, ROW_LEN};
use crate::scalars::{Field, Fp, Gaussian, Monomial, MultiPoly, PrimeField, Scalar};

pub const DEFAULT_DEGREE_CAP: usize = 7;
pub const DEGREE_CAP_ENV: &str = "QUADRALAB_DEGREE_CAP";

/// Largest degree a computation may reach; `None` disables the guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCap(pub Option<usize>);

impl DegreeCap {
    /// Default cap, overridden by `QUADRALAB_DEGREE_CAP` when it parses.
    pub fn from_env() -> Self {
        let cap = std::env::var(DEGREE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_DEGREE_CAP);
        DegreeCap(Some(cap))
    }

    pub fn unlimited() -> Self {
        DegreeCap(None)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.0 {
            Some(cap) if n > cap => Err(Error::DegreeCapExceeded { requested: n, cap }),
            _ => Ok(()),
        }
    }
}

impl Default for DegreeCap {
    fn default() -> Self {
        DegreeCap(Some(DEFAULT_DEGREE_CAP))
    }
}

struct Level<F> {
    normal: Vec<Word>,
    /// column `4*pos(u) + j` of `N_{n-1} × V` to its position in `normal`, if not a pivot
    col_normal: Vec<Option<usize>>,
    echelon: Echelon<F>,
    cache: HashMap<Word, SparseVec<F>>,
}

pub struct GradedAlgebra<F> {
    relations: Vec<Vec<F>>,
    levels: Vec<Level<F>>,
    cap: DegreeCap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Centrality {
    pub central: bool,
    /// first generator index `g` with `[z, x_g]` outside the ideal
    pub failing_generator: Option<usize>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(relations: Vec<Vec<F>>, cap: DegreeCap) -> Self {
        assert!(relations.iter().all(|r| r.len() == ROW_LEN));
        let level0 = Level {
            normal: vec![Word::empty()],
            col_normal: vec![Some(0)],
            echelon: Echelon::new(1, true),
            cache: HashMap::new(),
        };
        let level1 = Level {
            normal: (0..NGENS as u8).map(|g| Word::new(&[g])).collect(),
            col_normal: (0..NGENS).map(Some).collect(),
            echelon: Echelon::new(NGENS, true),
            cache: HashMap::new(),
        };
        GradedAlgebra { relations, levels: vec![level0, level1], cap }
    }

    pub fn from_space(rel: &RelationSpace<F>, cap: DegreeCap) -> Self {
        Self::new(rel.rows().to_vec(), cap)
    }

    pub fn cap(&self) -> DegreeCap {
        self.cap
    }

    /// Builds levels up to degree `n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        self.cap.check(n)?;
        while self.levels.len() <= n {
            self.push_level()?;
        }
        Ok(())
    }

    fn push_level(&mut self) -> Result<()> {
        let n = self.levels.len();
        let prev_len = self.levels[n - 1].normal.len();
        let ncols = NGENS * prev_len;
        let mut echelon = Echelon::new(ncols, true);
        let base: Vec<Word> = self.levels[n - 2].normal.clone();
        for u in &base {
            let images: Vec<SparseVec<F>> = (0..NGENS as u8).map(|k| self.nf_word(n - 1, &u.push(k))).collect();
            for r in self.relations.clone() {
                let mut row: SparseVec<F> = BTreeMap::new();
                for k in 0..NGENS {
                    for j in 0..NGENS {
                        let c = &r[NGENS * k + j];
                        if c.is_zero() {
                            continue;
                        }
                        for (&p, x) in &images[k] {
                            let col = NGENS * p + j;
                            let v = row.remove(&col).unwrap_or_else(F::zero) + &(c.clone() * x);
                            if !v.is_zero() {
                                row.insert(col, v);
                            }
                        }
                    }
                }
                echelon.insert(row)?;
            }
        }
        let prev = &self.levels[n - 1].normal;
        let mut normal = Vec::new();
        let mut col_normal = vec![None; ncols];
        for (col, slot) in col_normal.iter_mut().enumerate() {
            if !echelon.is_pivot(col) {
                *slot = Some(normal.len());
                normal.push(prev[col / NGENS].push((col % NGENS) as u8));
            }
        }
        self.levels.push(Level { normal, col_normal, echelon, cache: HashMap::new() });
        Ok(())
    }

    /// Normal form of a word, as coefficients on the normal words of its degree.
    fn nf_word(&mut self, n: usize, w: &Word) -> SparseVec<F> {
        if n == 0 {
            return [(0, F::one())].into_iter().collect();
        }
        if let Some(v) = self.levels[n].cache.get(w) {
            return v.clone();
        }
        let (prefix, last) = (Word(w.0[..n - 1].to_vec()), w.0[n - 1] as usize);
        let pv = self.nf_word(n - 1, &prefix);
        let level = &self.levels[n];
        let v: SparseVec<F> = pv.into_iter().map(|(p, c)| (NGENS * p + last, c)).collect();
        let red = level.echelon.reduce(v);
        let out: SparseVec<F> = red
            .into_iter()
            .map(|(col, c)| (level.col_normal[col].expect("reduced vectors avoid pivots"), c))
            .collect();
        self.levels[n].cache.insert(w.clone(), out.clone());
        out
    }

    pub fn dim(&mut self, n: usize) -> Result<usize> {
        self.extend_to(n)?;
        Ok(self.levels[n].normal.len())
    }

    /// `[dim A_0, ..., dim A_n]`
    pub fn hilbert(&mut self, n: usize) -> Result<Vec<usize>> {
        self.extend_to(n)?;
        Ok((0..=n).map(|d| self.levels[d].normal.len()).collect())
    }

    pub fn normal_words(&mut self, n: usize) -> Result<Vec<Word>> {
        self.extend_to(n)?;
        Ok(self.levels[n].normal.clone())
    }

    /// Leading (lex-smallest) words of the ideal in degree `n`.
    pub fn leading_words(&mut self, n: usize) -> Result<Vec<Word>> {
        let normal = self.normal_words(n)?;
        Ok(Word::all_of_degree(n).filter(|w| normal.binary_search(w).is_err()).collect())
    }

    fn check_homogeneous(f: &FreeElement<F>) -> Result<Option<usize>> {
        if !f.is_homogeneous() {
            return Err(Error::InvalidInput(format!("{f} is not homogeneous")));
        }
        Ok(f.degree())
    }

    /// Coordinates of `f + I` on the normal words of its degree.
    pub fn normal_form_vector(&mut self, f: &FreeElement<F>) -> Result<(usize, SparseVec<F>)> {
        let Some(n) = Self::check_homogeneous(f)? else {
            return Ok((0, BTreeMap::new()));
        };
        self.extend_to(n)?;
        let mut acc: SparseVec<F> = BTreeMap::new();
        for (w, c) in f.terms() {
            let v = self.nf_word(n, w);
            crate::linalg::axpy(&mut acc, c, &v);
        }
        Ok((n, acc))
    }

    /// The representative of `f + I` supported on normal words.
    pub fn normal_form(&mut self, f: &FreeElement<F>) -> Result<FreeElement<F>> {
        let (n, v) = self.normal_form_vector(f)?;
        let normal = &self.levels[n].normal;
        Ok(FreeElement::from_terms(v.into_iter().map(|(p, c)| (normal[p].clone(), c))))
    }

    pub fn in_ideal(&mut self, f: &FreeElement<F>) -> Result<bool> {
        Ok(self.normal_form_vector(f)?.1.is_empty())
    }

    /// Whether the homogeneous element `z` commutes with every generator modulo the ideal.
    pub fn is_central(&mut self, z: &FreeElement<F>) -> Result<Centrality> {
        let m = Self::check_homogeneous(z)?.unwrap_or(0);
        self.cap.check(m + 1)?;
        for (g, x) in FreeElement::<F>::gens().iter().enumerate() {
            if !self.in_ideal(&z.commutator(x))? {
                return Ok(Centrality { central: false, failing_generator: Some(g) });
            }
        }
        Ok(Centrality { central: true, failing_generator: None })
    }
}

/// Full spanning set of the degree-`n` ideal slice with its echelon form.
pub struct IdealSlice<F> {
    pub degree: usize,
    pub rows: Vec<SparseVec<F>>,
    pub echelon: Echelon<F>,
}

impl<F: Field> IdealSlice<F> {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn pivot_words(&self) -> Vec<Word> {
        self.echelon.pivots().map(|p| Word::from_index(p, self.degree)).collect()
    }

    pub fn contains(&self, f: &FreeElement<F>) -> bool {
        let v = crate::linalg::sparse_from_dense(&f.coefficient_vector(self.degree));
        self.echelon.contains(&v)
    }
}

/// Rows `u ⊗ r ⊗ v` for all words `u, v` with `|u| + |v| = n - 2`, in a fixed order.
pub fn spanning_rows<S: Scalar>(relations: &[Vec<S>], n: usize) -> Vec<SparseVec<S>> {
    assert!(n >= 2);
    let mut out = Vec::new();
    for a in 0..=n - 2 {
        let b = n - 2 - a;
        let shift = NGENS.pow(b as u32);
        for u in 0..NGENS.pow(a as u32) {
            for r in relations {
                for v in 0..shift {
                    let row: SparseVec<S> = r
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(idx, c)| ((u * ROW_LEN + idx) * shift + v, c.clone()))
                        .collect();
                    out.push(row);
                }
            }
        }
    }
    out
}

/// Brute-force ideal slice in degree `n` (4^n columns).
pub fn ideal_slice<F: Field>(rel: &RelationSpace<F>, n: usize, cap: DegreeCap) -> Result<IdealSlice<F>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("ideal slices start in degree 2, got {n}")));
    }
    cap.check(n)?;
    let rows = spanning_rows(rel.rows(), n);
    let mut echelon = Echelon::new(NGENS.pow(n as u32), true);
    for r in &rows {
        echelon.insert(r.clone())?;
    }
    Ok(IdealSlice { degree: n, rows, echelon })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Backend {
    Exact,
    Modular { p: u64 },
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => write!(f, "exact"),
            Backend::Modular { p } => write!(f, "modular p={p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub dims: Vec<usize>,
    pub backend: Backend,
    /// Modular dimensions can only exceed the exact ones (ranks drop mod p).
    pub upper_bound_only: bool,
}

/// Reduces relation rows over Q(i) modulo a prime (with a chosen square root of -1).
pub fn reduce_rows(rows: &[Vec<Gaussian>], field: &PrimeField) -> Result<Vec<Vec<Fp>>> {
    rows.iter().map(|r| r.iter().map(|c| field.reduce(c)).collect()).collect()
}

pub fn hilbert_function(
    rel: &RelationSpace<Gaussian>,
    n: usize,
    backend: Backend,
    cap: DegreeCap,
) -> Result<HilbertProfile> {
    cap.check(n)?;
    let dims = match backend {
        Backend::Exact => GradedAlgebra::from_space(rel, cap).hilbert(n)?,
        Backend::Modular { p } => {
            let field = PrimeField::new(p)?;
            GradedAlgebra::new(reduce_rows(rel.rows(), &field)?, cap).hilbert(n)?
        }
    };
    Ok(HilbertProfile { dims, backend, upper_bound_only: matches!(backend, Backend::Modular { .. }) })
}

/// A polynomial certificate `target = Σ coeffs[i] · rows[i]`.
#[derive(Clone, Debug)]
pub struct PolyCertificate {
    pub coefficients: Vec<(usize, MultiPoly)>,
}

impl PolyCertificate {
    /// Recombines the certificate; `None` coordinates are zero.
    pub fn recombine(&self, rows: &[SparseVec<MultiPoly>]) -> SparseVec<MultiPoly> {
        let mut acc: SparseVec<MultiPoly> = BTreeMap::new();
        for (i, c) in &self.coefficients {
            crate::linalg::axpy(&mut acc, c, &rows[*i]);
        }
        acc
    }
}

/// Searches for polynomial coefficients of total degree `cert_degree` in the
/// parameter variables with `target = Σ c_i rows_i`. Entries are polynomials
/// in the parameters only; the search is a linear system over Q(i).
pub fn polynomial_certificate(
    rows: &[SparseVec<MultiPoly>],
    target: &SparseVec<MultiPoly>,
    params: &[usize],
    cert_degree: u32,
) -> Result<Option<PolyCertificate>> {
    let mut columns: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut col_of = |k: usize, m: Monomial| -> usize {
        let next = columns.len();
        *columns.entry((k, m)).or_insert(next)
    };
    let flatten = |v: &SparseVec<MultiPoly>, shift: &Monomial, col_of: &mut dyn FnMut(usize, Monomial) -> usize| {
        let mut out: Vec<(usize, Gaussian)> = Vec::new();
        for (&k, p) in v {
            for (m, c) in p.terms() {
                out.push((col_of(k, m.mul(shift)), c.clone()));
            }
        }
        out
    };
    let monos = Monomial::all_of_degree(params, cert_degree);
    let mut unknowns = Vec::new();
    let mut raw_rows = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for m in &monos {
            raw_rows.push(flatten(r, m, &mut col_of));
            unknowns.push((i, m.clone()));
        }
    }
    let t = flatten(target, &Monomial::one(), &mut col_of);
    // tags live past every real column
    let limit = columns.len();
    let mut ech: Echelon<Gaussian> = Echelon::new(limit, false);
    for (u, entries) in raw_rows.into_iter().enumerate() {
        let mut row: SparseVec<Gaussian> = BTreeMap::new();
        for (c, x) in entries {
            let v = row.remove(&c).unwrap_or_else(Gaussian::zero) + &x;
            if !v.is_zero() {
                row.insert(c, v);
            }
        }
        if row.is_empty() {
            continue;
        }
        row.insert(limit + u, Gaussian::one());
        ech.insert(row)?;
    }
    let mut tv: SparseVec<Gaussian> = BTreeMap::new();
    for (c, x) in t {
        let v = tv.remove(&c).unwrap_or_else(Gaussian::zero) + &x;
        if !v.is_zero() {
            tv.insert(c, v);
        }
    }
    let red = ech.reduce(tv);
    if red.range(..limit).next().is_some() {
        return Ok(None);
    }
    let mut coeffs: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    for (&tag, c) in red.range(limit..) {
        let (i, m) = &unknowns[tag - limit];
        let e = coeffs.entry(*i).or_insert_with(MultiPoly::zero);
        *e = e.clone() + &MultiPoly::term(m.clone(), -c.clone());
    }
    Ok(Some(PolyCertificate { coefficients: coeffs.into_iter().filter(|(_, p)| !p.is_zero()).collect() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{chl_relations, sklyanin_relations};

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn incremental_matches_brute_force() {
        let rel = sklyanin_relations(&g(2), &g(3), &g(5));
        let mut alg = GradedAlgebra::from_space(&rel, DegreeCap::default());
        for n in 2..=4 {
            let slice = ideal_slice(&rel, n, DegreeCap::default()).unwrap();
            let lead = alg.leading_words(n).unwrap();
            assert_eq!(slice.pivot_words(), lead, "degree {n}");
        }
    }

    #[test]
    fn polynomial_ring_dims() {
        let rel = chl_relations(&g(1), &g(-1), &g(0), &g(0)).unwrap();
        let mut alg = GradedAlgebra::from_space(&rel, DegreeCap::default());
        assert_eq!(alg.hilbert(4).unwrap(), vec![1, 4, 10, 20, 35]);
    }

    #[test]
    fn cap_is_enforced() {
        let rel = sklyanin_relations(&g(2), &g(3), &g(5));
        let mut alg = GradedAlgebra::from_space(&rel, DegreeCap(Some(3)));
        assert!(matches!(alg.dim(4), Err(Error::DegreeCapExceeded { requested: 4, cap: 3 })));
    }
}
