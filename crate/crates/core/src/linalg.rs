//! exact linear algebra: sparse incremental echelon forms, dense helpers,
//! fraction-free rank over domains.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalars::{ExactDiv, Field, Scalar};

pub type SparseVec<F> = BTreeMap<usize, F>;

pub fn sparse_from_dense<F: Scalar>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse<F: Scalar>(v: &SparseVec<F>, n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

/// `v += c * w`
pub fn axpy<F: Scalar>(v: &mut SparseVec<F>, c: &F, w: &SparseVec<F>) {
    for (&k, x) in w {
        let t = c.clone() * x;
        match v.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !t.is_zero() {
                    e.insert(t);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &t;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

pub fn scale_sparse<F: Scalar>(v: &SparseVec<F>, c: &F) -> SparseVec<F> {
    v.iter()
        .map(|(&k, x)| (k, x.clone() * c))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Row-echelon basis built one vector at a time. Pivots are the smallest
/// column index of each row; columns at or beyond `limit` never become
/// pivots (they can carry bookkeeping tags). With `reduced`, rows are kept
/// in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
    limit: usize,
    reduced: bool,
}

impl<F: Field> Echelon<F> {
    pub fn new(limit: usize, reduced: bool) -> Self {
        Echelon { rows: BTreeMap::new(), limit, reduced }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<F>> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec<F>)> {
        self.rows.iter()
    }

    /// Reduces `v` against the basis; the result has no pivot-column entries below `limit`.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..self.limit)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(&k, x)| (k, x.clone()));
            let Some((k, c)) = next else { break };
            axpy(&mut v, &(-c), &self.rows[&k]);
            cursor = k + 1;
        }
        v
    }

    /// Inserts `v`; returns the new pivot, or `None` if `v` was dependent.
    pub fn insert(&mut self, v: SparseVec<F>) -> Result<Option<usize>> {
        let r = self.reduce(v);
        let Some((&p, c)) = r.range(..self.limit).next() else {
            return Ok(None);
        };
        let r = scale_sparse(&r, &c.inv()?);
        if self.reduced {
            let touched: Vec<usize> = self
                .rows
                .iter()
                .filter(|(_, row)| row.contains_key(&p))
                .map(|(&k, _)| k)
                .collect();
            for k in touched {
                let row = self.rows.get_mut(&k).unwrap();
                let f = -row[&p].clone();
                axpy(row, &f, &r);
            }
        }
        self.rows.insert(p, r);
        Ok(Some(p))
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).range(..self.limit).next().is_none()
    }
}

pub fn echelon_of<F: Field>(rows: &[Vec<F>], reduced: bool) -> Result<Echelon<F>> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut e = Echelon::new(n, reduced);
    for r in rows {
        e.insert(sparse_from_dense(r))?;
    }
    Ok(e)
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> Result<usize> {
    Ok(echelon_of(rows, false)?.rank())
}

/// Reduced row-echelon form as dense rows (pivot order).
pub fn rref<F: Field>(rows: &[Vec<F>], ncols: usize) -> Result<Vec<Vec<F>>> {
    let mut e = Echelon::new(ncols, true);
    for r in rows {
        e.insert(sparse_from_dense(r))?;
    }
    Ok(e.rows().map(|(_, r)| dense_from_sparse(r, ncols)).collect())
}

/// Basis of `{x : rows * x = 0}`.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Result<Vec<Vec<F>>> {
    let mut e = Echelon::new(ncols, true);
    for r in rows {
        e.insert(sparse_from_dense(r))?;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !e.is_pivot(*c)) {
        let mut x = vec![F::zero(); ncols];
        x[free] = F::one();
        for (&p, row) in e.rows() {
            if let Some(v) = row.get(&free) {
                x[p] = -v.clone();
            }
        }
        out.push(x);
    }
    Ok(out)
}

pub fn rowspace_contains<F: Field>(rows: &[Vec<F>], v: &[F]) -> Result<bool> {
    let e = echelon_of(rows, false)?;
    Ok(e.contains(&sparse_from_dense(v)))
}

pub fn rowspace_eq<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Result<bool> {
    let n = a.first().or(b.first()).map_or(0, |r| r.len());
    Ok(rref(a, n)? == rref(b, n)?)
}

/// Solves `m x = b` for square invertible `m`.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Result<Option<Vec<F>>> {
    let n = m.len();
    let rows: Vec<SparseVec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut v = sparse_from_dense(row);
            if !bi.is_zero() {
                v.insert(n, bi.clone());
            }
            v
        })
        .collect();
    let mut e = Echelon::new(n, true);
    for r in rows {
        if e.insert(r)?.is_none() {
            return Ok(None);
        }
    }
    if e.rank() < n {
        return Ok(None);
    }
    Ok(Some(
        (0..n)
            .map(|i| e.row(i).and_then(|r| r.get(&n)).cloned().unwrap_or_else(F::zero))
            .collect(),
    ))
}

pub fn mat_mul<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(F::zero(), |acc, (x, brow)| acc + &(x.clone() * &brow[j]))
                })
                .collect()
        })
        .collect()
}

pub fn transpose<F: Clone>(a: &[Vec<F>]) -> Vec<Vec<F>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn identity<F: Scalar>(n: usize) -> Vec<Vec<F>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

pub fn inverse<F: Field>(a: &[Vec<F>]) -> Result<Option<Vec<Vec<F>>>> {
    let n = a.len();
    let mut cols = Vec::new();
    for j in 0..n {
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        match solve(a, &e)? {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(transpose(&cols)))
}

/// Determinant by cofactor expansion along the first row (small matrices over rings).
pub fn det<F: Scalar>(a: &[Vec<F>]) -> F {
    let n = a.len();
    match n {
        0 => F::one(),
        1 => a[0][0].clone(),
        2 => a[0][0].clone() * &a[1][1] - a[0][1].clone() * &a[1][0],
        _ => {
            let mut acc = F::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<F>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = a[0][j].clone() * &det(&minor);
                acc = if j % 2 == 0 { acc + &t } else { acc - &t };
            }
            acc
        }
    }
}

/// Rank over an integral domain by fraction-free (Bareiss) elimination.
pub fn rank_fraction_free<D: ExactDiv>(rows: &[Vec<D>]) -> usize {
    let mut m: Vec<Vec<D>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = D::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let t = m[r][c].clone() * &m[i][j] - m[i][c].clone() * &m[r][j];
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = D::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gaussian;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)], vec![g(0), g(1), g(1)]];
        assert_eq!(rank(&rows).unwrap(), 2);
        let ns = nullspace(&rows, 3).unwrap();
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&ns[0]).fold(g(0), |a, (x, y)| a + &(x.clone() * y));
            assert_eq!(dot, g(0));
        }
        assert_eq!(rank_fraction_free(&rows), 2);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = vec![vec![g(2), g(1)], vec![g(7), g(4)]];
        assert_eq!(det(&m), g(1));
        let inv = inverse(&m).unwrap().unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
    }

    #[test]
    fn tags_never_pivot() {
        let mut e: Echelon<Gaussian> = Echelon::new(2, false);
        let v: SparseVec<Gaussian> = [(0, g(1)), (2, g(1))].into_iter().collect();
        let w: SparseVec<Gaussian> = [(0, g(2)), (3, g(1))].into_iter().collect();
        assert_eq!(e.insert(v).unwrap(), Some(0));
        assert_eq!(e.insert(w).unwrap(), None);
    }
}
