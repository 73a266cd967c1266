//! quadratic presentations on four generators: Sklyanin algebras A(α,β,γ),
//! the algebras R(a,b,c,d) in both generating sets, and invariants of their
//! relation spaces.
//!
//! A relation row has 16 entries; entry `4k + j` is the coefficient of the
//! word `x_k x_j`.

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, GEN_NAMES_CHL, GEN_NAMES_X, GEN_NAMES_Z, NGENS};
use crate::linalg::{self, sparse_from_dense, Echelon};
use crate::scalars::{Field, Gaussian, GaussianAlgebra, Scalar};

pub const ROW_LEN: usize = NGENS * NGENS;

#[derive(Clone, Debug)]
pub struct RelationSpace<F> {
    rows: Vec<Vec<F>>,
    label: String,
    names: [&'static str; NGENS],
}

impl<F: Field> RelationSpace<F> {
    /// Builds a relation space, rejecting row sets of rank below six.
    pub fn from_rows(rows: Vec<Vec<F>>, label: &str, names: [&'static str; NGENS]) -> Result<Self> {
        assert!(rows.iter().all(|r| r.len() == ROW_LEN), "relation rows have 16 entries");
        let rank = linalg::rank(&rows)?;
        if rank < 6 {
            return Err(Error::DegeneratePresentation {
                rank,
                detail: format!("{label} has dependent relations"),
            });
        }
        Ok(RelationSpace { rows, label: label.to_string(), names })
    }

    pub fn from_elements(elems: &[FreeElement<F>], label: &str, names: [&'static str; NGENS]) -> Result<Self> {
        Self::from_rows(elems.iter().map(|e| e.coefficient_vector(2)).collect(), label, names)
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn names(&self) -> &[&'static str; NGENS] {
        &self.names
    }

    pub fn elements(&self) -> Vec<FreeElement<F>> {
        self.rows.iter().map(|r| FreeElement::from_coefficient_vector(r, 2)).collect()
    }

    pub fn echelon(&self) -> Result<Echelon<F>> {
        linalg::echelon_of(&self.rows, true)
    }

    pub fn contains(&self, row: &[F]) -> Result<bool> {
        linalg::rowspace_contains(&self.rows, row)
    }

    pub fn contains_element(&self, f: &FreeElement<F>) -> Result<bool> {
        if !f.homogeneous_part(2).sub(f).is_zero() {
            return Ok(false);
        }
        self.contains(&f.coefficient_vector(2))
    }

    pub fn same_span(&self, other: &[Vec<F>]) -> Result<bool> {
        linalg::rowspace_eq(&self.rows, other)
    }

    /// Rows of the relations after the substitution `x_j -> sum_k m[k][j] x_k`.
    pub fn substituted_rows(&self, m: &[Vec<F>]) -> Vec<Vec<F>> {
        self.elements().iter().map(|e| e.apply_linear(m).coefficient_vector(2)).collect()
    }

    pub fn render(&self) -> Vec<String> {
        self.elements().iter().map(|e| e.render(&self.names)).collect()
    }
}

fn gens<F: Field>() -> [FreeElement<F>; NGENS] {
    FreeElement::gens()
}

/// `c_i = [x0,xi] - α_i {xj,xk}` for the cyclic triples `(i,j,k)`.
pub fn sklyanin_c<S: Scalar>(alphas: &[S; 3]) -> [FreeElement<S>; 3] {
    let x = FreeElement::<S>::gens();
    std::array::from_fn(|t| {
        let (i, j, k) = CYCLIC[t];
        x[0].commutator(&x[i]).sub(&x[j].anticommutator(&x[k]).scale(&alphas[t]))
    })
}

/// `a_i = {x0,xi} - [xj,xk]`.
pub fn sklyanin_a<S: Scalar>() -> [FreeElement<S>; 3] {
    let x = FreeElement::<S>::gens();
    std::array::from_fn(|t| {
        let (i, j, k) = CYCLIC[t];
        x[0].anticommutator(&x[i]).sub(&x[j].commutator(&x[k]))
    })
}

pub const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// Relations of A(α,β,γ), in the order c1, c2, c3, a1, a2, a3.
pub fn sklyanin_relations<F: Field>(alpha: &F, beta: &F, gamma: &F) -> RelationSpace<F> {
    let alphas = [alpha.clone(), beta.clone(), gamma.clone()];
    let mut elems: Vec<FreeElement<F>> = sklyanin_c(&alphas).to_vec();
    elems.extend(sklyanin_a::<F>());
    let label = format!("A({alpha}, {beta}, {gamma})");
    RelationSpace::from_elements(&elems, &label, GEN_NAMES_X).expect("Sklyanin relations always have rank 6")
}

fn w<S: Scalar>(c: &S, i: usize, j: usize) -> FreeElement<S> {
    let x = FreeElement::<S>::gens();
    x[i].mul(&x[j]).scale(c)
}

/// R1..R6 of R(a,b,c,d) as elements, generators x1..x4 stored as indices 0..3.
pub fn chl_elements<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> [FreeElement<S>; 6] {
    let (x1, x2, x3, x4) = (0, 1, 2, 3);
    let sum = |ts: Vec<FreeElement<S>>| ts.into_iter().fold(FreeElement::zero(), |acc, t| acc.add(&t));
    [
        sum(vec![w(a, x4, x3), w(b, x3, x4), w(c, x3, x2), w(d, x4, x1)]),
        sum(vec![w(a, x3, x2), w(b, x2, x3), w(c, x4, x3), w(d, x1, x2)]),
        sum(vec![w(a, x2, x1), w(b, x1, x2), w(c, x1, x4), w(d, x2, x3)]),
        sum(vec![w(a, x1, x4), w(b, x4, x1), w(c, x2, x1), w(d, x3, x4)]),
        sum(vec![w(a, x3, x1), w(&-a.clone(), x1, x3), w(c, x4, x4), w(&-c.clone(), x2, x2)]),
        sum(vec![w(b, x4, x2), w(&-b.clone(), x2, x4), w(d, x3, x3), w(&-d.clone(), x1, x1)]),
    ]
}

/// Relations R1..R6 of R(a,b,c,d).
pub fn chl_relations<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<RelationSpace<F>> {
    RelationSpace::from_elements(&chl_elements(a, b, c, d), &format!("R({a}, {b}, {c}, {d})"), GEN_NAMES_CHL)
}

/// Coefficients `(lhs, rhs)` of the six z-relations `lhs·P = rhs·Q`, in the
/// order c1, c2, a1, a2, c3, a3 (so `lhs` runs through κ1, κ2, λ1, λ2, κ3, λ3).
pub fn chl_z_coefficients<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> [(S, S); 6] {
    let s = |sa: i64, sb: i64, sc: i64, sd: i64| {
        S::from_i64(sa) * a + &(S::from_i64(sb) * b) + &(S::from_i64(sc) * c) + &(S::from_i64(sd) * d)
    };
    [
        (s(1, -1, -1, 1), s(-1, -1, 1, 1)),
        (s(-1, 1, 1, 1), s(1, 1, -1, 1)),
        (s(1, 1, 1, 1), s(1, -1, 1, -1)),
        (s(1, 1, 1, -1), s(-1, 1, -1, -1)),
        (b.clone(), d.clone()),
        (c.clone(), a.clone()),
    ]
}

/// The z-relations as elements, in the order of [`chl_z_coefficients`].
pub fn chl_z_elements<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> [FreeElement<S>; 6] {
    let z = FreeElement::<S>::gens();
    let co = chl_z_coefficients(a, b, c, d);
    let com = |i: usize, j: usize| z[i].commutator(&z[j]);
    let anti = |i: usize, j: usize| z[i].anticommutator(&z[j]);
    let pairs = [
        (com(0, 1), anti(2, 3)),
        (com(0, 2), anti(3, 1)),
        (anti(0, 1), com(2, 3)),
        (anti(0, 2), com(3, 1)),
        (com(0, 3), anti(1, 2)),
        (anti(0, 3), com(1, 2)),
    ];
    std::array::from_fn(|t| pairs[t].0.scale(&co[t].0).sub(&pairs[t].1.scale(&co[t].1)))
}

/// Relations of R(a,b,c,d) in the generators z0..z3.
pub fn chl_z_relations<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<RelationSpace<F>> {
    RelationSpace::from_elements(&chl_z_elements(a, b, c, d), &format!("R_z({a}, {b}, {c}, {d})"), GEN_NAMES_Z)
}

/// Substitution `x1 = z1+z2, x2 = z0+z3, x3 = z1-z2, x4 = z0-z3` (column j = image of the j-th x).
pub fn chl_x_to_z<F: Field>() -> Vec<Vec<F>> {
    let (o, z, m) = (F::one(), F::zero(), -F::one());
    vec![
        vec![z.clone(), o.clone(), z.clone(), o.clone()],
        vec![o.clone(), z.clone(), o.clone(), z.clone()],
        vec![o.clone(), z.clone(), m.clone(), z.clone()],
        vec![z.clone(), o.clone(), z.clone(), m],
    ]
}

/// Parameters of the Sklyanin algebra isomorphic to R(a,b,c,d) on the quadric ac+bd=0.
#[derive(Clone, Debug, PartialEq)]
pub struct ChlSklyaninData<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub mu: [F; 3],
    pub nu: [F; 3],
    pub sum_plus_product: F,
}

/// Nonvanishing factors required by the correspondence, with their names.
pub fn chl_genericity_factors<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Vec<(&'static str, F)> {
    let p = a.clone() + b;
    let q = a.clone() - b;
    let r = c.clone() + d;
    let s = c.clone() - d;
    vec![
        ("a", a.clone()),
        ("b", b.clone()),
        ("c", c.clone()),
        ("d", d.clone()),
        ("p+r", p.clone() + &r),
        ("p-r", p.clone() - &r),
        ("p+s", p.clone() + &s),
        ("p-s", p.clone() - &s),
        ("q+r", q.clone() + &r),
        ("q-r", q.clone() - &r),
        ("q+s", q.clone() + &s),
        ("q-s", q - &s),
    ]
}

pub fn chl_to_sklyanin_params<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<ChlSklyaninData<F>> {
    let quadric = a.clone() * c + &(b.clone() * d);
    if !quadric.is_zero() {
        return Err(Error::PreconditionViolated(format!("ac+bd = {quadric} is nonzero")));
    }
    let vanishing: Vec<&str> = chl_genericity_factors(a, b, c, d)
        .into_iter()
        .filter(|(_, v)| v.is_zero())
        .map(|(n, _)| n)
        .collect();
    if !vanishing.is_empty() {
        return Err(Error::PreconditionViolated(format!("{} = 0", vanishing.join(", "))));
    }
    let p = a.clone() + b;
    let q = a.clone() - b;
    let r = c.clone() + d;
    let s = c.clone() - d;
    let mu = [
        (r.clone() - &p).div(&(q.clone() - &s))?,
        (p.clone() - &s).div(&(r.clone() - &q))?,
        d.div(b)?,
    ];
    let nu = [
        (q.clone() + &s).div(&(p.clone() + &r))?,
        (q.clone() + &r).div(&(p.clone() + &s))?,
        a.div(c)?,
    ];
    let sq = |x: &F| x.clone() * x;
    let alpha = (sq(&r) - &sq(&p)).div(&(sq(&q) - &sq(&s)))?;
    let beta = (sq(&p) - &sq(&s)).div(&(sq(&r) - &sq(&q)))?;
    let gamma = (c.clone() * d).div(&(a.clone() * b))?;
    let spp = alpha.clone() + &beta + &gamma + &(alpha.clone() * &beta * &gamma);
    Ok(ChlSklyaninData { alpha, beta, gamma, mu, nu, sum_plus_product: spp })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SklyaninLine {
    /// a + i d = c + i b = 0
    L1,
    /// a - i d = c - i b = 0
    L2,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ChlClass {
    OffQuadric { ac_plus_bd: Gaussian },
    Degenerate { vanishing: Vec<String> },
    GenericQuadric { alpha: Gaussian, beta: Gaussian, gamma: Gaussian },
    SklyaninLocus { line: SklyaninLine, alpha: Option<Gaussian>, excluded: bool },
}

/// Scales a nonzero point so that its first nonzero coordinate is one.
pub fn normalize_projective<F: Field>(v: &[F]) -> Result<Vec<F>> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidInput("the zero vector is not a projective point".into()))?;
    let inv = lead.inv()?;
    Ok(v.iter().map(|x| x.clone() * &inv).collect())
}

/// Alpha of the Sklyanin algebra A(α,1,-1) attached to a point of ℓ1 or ℓ2.
pub fn sklyanin_locus_alpha(line: SklyaninLine, b: &Gaussian, d: &Gaussian) -> Result<Gaussian> {
    let i = Gaussian::i();
    let u = b.clone() + d + &(i.clone() * b) - &(i.clone() * d);
    let v = b.clone() + d - &(i.clone() * b) + &(i * d);
    let (num, den) = match line {
        SklyaninLine::L1 => (u, v),
        SklyaninLine::L2 => (v, u),
    };
    if den.is_zero() {
        return Err(Error::PreconditionViolated("b+d∓i(b-d) = 0".into()));
    }
    (num.clone() * &num).div(&(den.clone() * &den))
}

pub fn classify_chl(abcd: &[Gaussian; 4]) -> Result<ChlClass> {
    let [a, b, c, d] = abcd;
    if abcd.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("(0,0,0,0) is not a point of P^3".into()));
    }
    let quadric = a.clone() * c + &(b.clone() * d);
    if !quadric.is_zero() {
        return Ok(ChlClass::OffQuadric { ac_plus_bd: quadric });
    }
    let i = Gaussian::i();
    let on_l1 = (a.clone() + &(i.clone() * d)).is_zero() && (c.clone() + &(i.clone() * b)).is_zero();
    let on_l2 = (a.clone() - &(i.clone() * d)).is_zero() && (c.clone() - &(i * b)).is_zero();
    let vanishing: Vec<String> = chl_genericity_factors(a, b, c, d)
        .into_iter()
        .filter(|(_, v)| v.is_zero())
        .map(|(n, _)| n.to_string())
        .collect();
    if on_l1 || on_l2 {
        let line = if on_l1 { SklyaninLine::L1 } else { SklyaninLine::L2 };
        let excluded = !vanishing.is_empty();
        let alpha = if excluded { None } else { Some(sklyanin_locus_alpha(line, b, d)?) };
        return Ok(ChlClass::SklyaninLocus { line, alpha, excluded });
    }
    if !vanishing.is_empty() {
        return Ok(ChlClass::Degenerate { vanishing });
    }
    let data = chl_to_sklyanin_params(a, b, c, d)?;
    Ok(ChlClass::GenericQuadric { alpha: data.alpha, beta: data.beta, gamma: data.gamma })
}

/// Points of ℓ1 ∪ ℓ2 where one of the genericity factors vanishes, normalized.
/// Each factor is linear along the line, so it vanishes at exactly one point.
pub fn excluded_points() -> Vec<(SklyaninLine, Vec<Gaussian>)> {
    let i = Gaussian::i();
    let (o, z) = (Gaussian::one(), Gaussian::zero());
    let mut out: Vec<(SklyaninLine, Vec<Gaussian>)> = Vec::new();
    for (line, sign) in [(SklyaninLine::L1, -Gaussian::one()), (SklyaninLine::L2, Gaussian::one())] {
        let s = sign * &i;
        // (a,b,c,d) = b*(0,1,s,0) + d*(s,0,0,1)
        let eb = [z.clone(), o.clone(), s.clone(), z.clone()];
        let ed = [s.clone(), z.clone(), z.clone(), o.clone()];
        let fb = chl_genericity_factors(&eb[0], &eb[1], &eb[2], &eb[3]);
        let fd = chl_genericity_factors(&ed[0], &ed[1], &ed[2], &ed[3]);
        for ((_, vb), (_, vd)) in fb.iter().zip(&fd) {
            let (b, d) = (vd.clone(), -vb.clone());
            let pt: Vec<Gaussian> = (0..4).map(|k| b.clone() * &eb[k] + &(d.clone() * &ed[k])).collect();
            let Ok(pt) = normalize_projective(&pt) else { continue };
            if !out.iter().any(|(l, p)| *l == line && *p == pt) {
                out.push((line, pt));
            }
        }
    }
    out
}

/// Finds `t` with `target - t*basis` in the relation span.
fn solve_proportional<F: Field>(ech: &Echelon<F>, target: &FreeElement<F>, basis: &FreeElement<F>) -> Result<F> {
    let t = ech.reduce(sparse_from_dense(&target.coefficient_vector(2)));
    let b = ech.reduce(sparse_from_dense(&basis.coefficient_vector(2)));
    let Some((&k, bk)) = b.iter().next() else {
        return Err(Error::NoUniqueSolution(format!("{basis} lies in the relation span")));
    };
    let tk = t.get(&k).cloned().unwrap_or_else(F::zero);
    let lambda = tk.div(bk)?;
    let mut resid = t;
    linalg::axpy(&mut resid, &-lambda.clone(), &b);
    if !resid.is_empty() {
        return Err(Error::NoUniqueSolution(format!("{target} is not a multiple of {basis} modulo the relations")));
    }
    Ok(lambda)
}

/// The angle invariant ⟨p,q,r,s⟩ = (μ1ν1, μ2ν2, μ3ν3) where
/// [xp,xq] = μ1{xr,xs}, ν1{xp,xq} = [xr,xs],
/// [xp,xr] = μ2{xs,xq}, ν2{xp,xr} = [xs,xq],
/// [xp,xs] = μ3{xq,xr}, ν3{xp,xs} = [xq,xr] hold modulo the relations.
pub fn angle_invariant<F: Field>(rel: &RelationSpace<F>, perm: [usize; 4]) -> Result<[F; 3]> {
    let mut seen = [false; 4];
    for &x in &perm {
        if x >= 4 || seen[x] {
            return Err(Error::InvalidInput(format!("{perm:?} is not a permutation of 0..3")));
        }
        seen[x] = true;
    }
    let ech = rel.echelon()?;
    let x = gens::<F>();
    let [p, q, r, s] = perm;
    let triples = [(q, r, s), (r, s, q), (s, q, r)];
    let mut out = Vec::new();
    for (u, v, w) in triples {
        let mu = solve_proportional(&ech, &x[p].commutator(&x[u]), &x[v].anticommutator(&x[w]))?;
        let nu = solve_proportional(&ech, &x[v].commutator(&x[w]), &x[p].anticommutator(&x[u]))?;
        out.push(mu * &nu);
    }
    Ok([out[0].clone(), out[1].clone(), out[2].clone()])
}

/// Index of `x_i x_j` (i <= j) in the 10-dimensional space of commutative quadrics.
pub fn sym2_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    (0..i).map(|k| NGENS - k).sum::<usize>() + (j - i)
}

pub const SYM2_DIM: usize = 10;

#[derive(Clone, Debug)]
pub struct CommutativeQuotient<F> {
    /// reduced row-echelon basis of the symmetrized relations
    pub basis: Vec<Vec<F>>,
    pub dim: usize,
}

/// Image of the relations in the symmetric square (the degree-two part of the
/// ideal cutting out the largest commutative quotient).
pub fn commutative_quotient_deg2<F: Field>(rel: &RelationSpace<F>) -> Result<CommutativeQuotient<F>> {
    let sym: Vec<Vec<F>> = rel
        .rows()
        .iter()
        .map(|r| {
            let mut v = vec![F::zero(); SYM2_DIM];
            for k in 0..NGENS {
                for j in 0..NGENS {
                    let idx = sym2_index(k, j);
                    v[idx] = v[idx].clone() + &r[NGENS * k + j];
                }
            }
            v
        })
        .collect();
    let basis = linalg::rref(&sym, SYM2_DIM)?;
    let dim = basis.len();
    Ok(CommutativeQuotient { basis, dim })
}

/// `x0 -> x0, x_i -> x_{i+1}` (indices mod 3 on 1..3).
pub fn cyclic_shift_map<F: Field>() -> Vec<Vec<F>> {
    let mut m = vec![vec![F::zero(); 4]; 4];
    m[0][0] = F::one();
    m[2][1] = F::one();
    m[3][2] = F::one();
    m[1][3] = F::one();
    m
}

/// `x0 -> x0, x1 -> -x1, x2 -> x3, x3 -> x2`.
pub fn sign_swap_map<F: Field>() -> Vec<Vec<F>> {
    let mut m = vec![vec![F::zero(); 4]; 4];
    m[0][0] = F::one();
    m[1][1] = -F::one();
    m[3][2] = F::one();
    m[2][3] = F::one();
    m
}

/// Whether the images `φ(x_j)` in the algebra presented by `source` satisfy
/// exactly the relations of `target`: span φ(R_target) = span R_source.
pub fn substitution_realizes<F: Field>(
    m: &[Vec<F>],
    source: &RelationSpace<F>,
    target: &RelationSpace<F>,
) -> Result<bool> {
    source.same_span(&target.substituted_rows(m))
}

/// Whether `x_i -> x_{i+1}` and `x1 -> -x1, x2 <-> x3` realize A(α,β,γ)
/// as A(β,γ,α) and A(-α,-γ,-β) respectively.
pub fn isomorphism_substitutions<F: Field>(alpha: &F, beta: &F, gamma: &F) -> Result<[bool; 2]> {
    let src = sklyanin_relations(alpha, beta, gamma);
    let cyc = sklyanin_relations(beta, gamma, alpha);
    let swapped = sklyanin_relations(&-alpha.clone(), &-gamma.clone(), &-beta.clone());
    Ok([
        substitution_realizes(&cyclic_shift_map(), &src, &cyc)?,
        substitution_realizes(&sign_swap_map(), &src, &swapped)?,
    ])
}

/// All 24 permutations of `0..4` in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for p in 0..4 {
        for q in (0..4).filter(|&q| q != p) {
            for r in (0..4).filter(|&r| r != p && r != q) {
                out.push([p, q, r, 6 - p - q - r]);
            }
        }
    }
    out
}

pub fn parse_gaussians<F: GaussianAlgebra>(xs: &[Gaussian]) -> Vec<F> {
    xs.iter().map(F::from_gaussian).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gaussian;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn sklyanin_row_one() {
        let r = sklyanin_relations(&g(4), &g(9), &g(25));
        assert_eq!(r.rows()[0][11], g(-4));
        assert_eq!(r.rows()[0][1], g(1));
        assert_eq!(r.rows()[0][4], g(-1));
    }

    #[test]
    fn chl_degenerate_and_commutative() {
        assert!(matches!(
            chl_relations(&g(0), &g(0), &g(1), &g(0)),
            Err(Error::DegeneratePresentation { .. })
        ));
        let r = chl_relations(&g(1), &g(-1), &g(0), &g(0)).unwrap();
        let x = FreeElement::<Gaussian>::gens();
        for i in 0..4 {
            for j in 0..4 {
                assert!(r.contains_element(&x[i].commutator(&x[j])).unwrap());
            }
        }
    }

    #[test]
    fn chl_params_fixture() {
        let d = chl_to_sklyanin_params(&g(1), &g(2), &g(-4), &g(2)).unwrap();
        assert_eq!(d.alpha, Gaussian::from_ratio(1, 7));
        assert_eq!(d.beta, g(-9));
        assert_eq!(d.gamma, g(-4));
        assert_eq!(d.sum_plus_product, Gaussian::from_ratio(-54, 7));
        match chl_to_sklyanin_params(&g(1), &g(2), &g(-2), &g(1)) {
            Err(Error::PreconditionViolated(msg)) => assert!(msg.contains("p+s"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn excluded_points_listed() {
        let pts = excluded_points();
        assert_eq!(pts.len(), 12);
        let i = Gaussian::i();
        let listed = [
            vec![g(0), g(1), -i.clone(), g(0)],
            vec![g(1), g(0), g(0), i.clone()],
            vec![g(1), -i.clone(), g(-1), i.clone()],
        ];
        for p in &listed {
            assert!(pts.iter().any(|(l, q)| *l == SklyaninLine::L1 && q == p), "{p:?}");
        }
        for (l, p) in &pts {
            let arr = [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()];
            match classify_chl(&arr).unwrap() {
                ChlClass::SklyaninLocus { line, excluded, .. } => assert!(excluded && line == *l),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn sym2_indexing() {
        let all: Vec<usize> = (0..4).flat_map(|i| (i..4).map(move |j| sym2_index(i, j))).collect();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
    }
}
