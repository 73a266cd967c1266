//! membership of a homogeneous polynomial in a homogeneous ideal, one degree at a time.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::scalars::poly::{Monomial, MultiPoly};
use crate::scalars::ratfunc::RationalFunction;
use crate::scalars::Scalar;

/// One summand `coefficient * monomial * generators[generator]` of a certificate.
#[derive(Clone, Debug)]
pub struct CertificateTerm {
    pub generator: usize,
    pub monomial: Monomial,
    pub coefficient: RationalFunction,
}

#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub certificate: Vec<CertificateTerm>,
}

impl Membership {
    /// Rebuilds `sum coefficient * monomial * generator` as a polynomial in all variables.
    /// Coefficients must be polynomial in the parameters for this to succeed.
    pub fn recombine(&self, generators: &[MultiPoly]) -> Option<MultiPoly> {
        let mut acc = MultiPoly::zero();
        for t in &self.certificate {
            let c = t.coefficient.as_polynomial()?;
            let m = MultiPoly::term(t.monomial.clone(), crate::scalars::Gaussian::one());
            acc = acc + &(c * &m * &generators[t.generator]);
        }
        Some(acc)
    }
}

fn x_degree(p: &MultiPoly, coef_vars: &[usize]) -> Result<Option<u32>> {
    let parts = p.split_coefficients(coef_vars);
    let mut d = None;
    for m in parts.keys() {
        let md = m.degree();
        if *d.get_or_insert(md) != md {
            return Err(Error::InvalidInput(format!("{p} is not homogeneous")));
        }
    }
    Ok(d)
}

/// Decides whether `f` lies in the ideal generated by `generators`, working in
/// the degree of `f` (which must not exceed `degree`). Variables listed in
/// `coef_vars` are treated as parameters: coefficients live in Q(i)(params).
pub fn ideal_slice_membership(
    f: &MultiPoly,
    generators: &[MultiPoly],
    degree: u32,
    coef_vars: &[usize],
) -> Result<Membership> {
    let Some(df) = x_degree(f, coef_vars)? else {
        return Ok(Membership { member: true, certificate: vec![] });
    };
    if df > degree {
        return Err(Error::InvalidInput(format!(
            "degree of f ({df}) exceeds the slice degree {degree}"
        )));
    }
    let mut nvars = 0;
    for p in generators.iter().chain(std::iter::once(f)) {
        if let Some(&m) = p.variables_used().last() {
            nvars = nvars.max(m + 1);
        }
    }
    let x_vars: Vec<usize> = (0..nvars).filter(|v| !coef_vars.contains(v)).collect();

    let mut columns: BTreeMap<Monomial, usize> = BTreeMap::new();
    for m in Monomial::all_of_degree(&x_vars, df) {
        let k = columns.len();
        columns.insert(m, k);
    }
    let ncols = columns.len();
    let to_vec = |p: &MultiPoly, shift: &Monomial| -> SparseVec<RationalFunction> {
        p.split_coefficients(coef_vars)
            .into_iter()
            .map(|(m, c)| (columns[&m.mul(shift)], RationalFunction::from_poly(c)))
            .collect()
    };

    let mut unknowns = Vec::new();
    let mut ech: Echelon<RationalFunction> = Echelon::new(ncols, false);
    for (gi, g) in generators.iter().enumerate() {
        let Some(dg) = x_degree(g, coef_vars)? else { continue };
        if dg > df {
            continue;
        }
        for m in Monomial::all_of_degree(&x_vars, df - dg) {
            let mut row = to_vec(g, &m);
            row.insert(ncols + unknowns.len(), RationalFunction::one());
            unknowns.push((gi, m));
            ech.insert(row)?;
        }
    }
    let reduced = ech.reduce(to_vec(f, &Monomial::one()));
    let member = reduced.range(..ncols).next().is_none();
    let certificate = if member {
        reduced
            .range(ncols..)
            .map(|(&k, c)| {
                let (generator, monomial) = unknowns[k - ncols].clone();
                CertificateTerm { generator, monomial, coefficient: -c.clone() }
            })
            .collect()
    } else {
        vec![]
    };
    Ok(Membership { member, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::var_names;

    #[test]
    fn principal_ideal() {
        let n = var_names(&["a", "b", "c", "d"]);
        let v = MultiPoly::vars(&n);
        let g = v[0].clone() * &v[2] + v[1].clone() * &v[3];
        let m = ideal_slice_membership(&g, std::slice::from_ref(&g), 2, &[]).unwrap();
        assert!(m.member);
        assert_eq!(m.recombine(std::slice::from_ref(&g)).unwrap(), g);
    }

    #[test]
    fn non_member() {
        let n = var_names(&["x0", "x1"]);
        let v = MultiPoly::vars(&n);
        let f = v[0].clone() * &v[0] + v[1].clone() * &v[1];
        assert!(!ideal_slice_membership(&f, &[v[0].clone()], 2, &[]).unwrap().member);
    }
}
