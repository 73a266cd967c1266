//! the zero locus Γ ⊂ P³×P³ of the Sklyanin-type relations.
//!
//! Polynomials here live in `Q(i)[x0,x1,x2,x3,α,β,γ]` (variables 0..=6), so
//! the same code serves numeric parameters (substituted constants) and
//! symbolic ones. Points are over Q(i); square roots `a,b,c` of `α,β,γ` are
//! explicit inputs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, NGENS};
use crate::linalg;
use crate::presentations::{sklyanin_a, sklyanin_c, sklyanin_relations, ROW_LEN};
use crate::scalars::{
    ideal_slice_membership, var_names, Field, Gaussian, GaussianAlgebra, Membership, Monomial, MultiPoly,
    RationalFunction, Scalar, VarNames,
};

pub const X_VARS: [usize; 4] = [0, 1, 2, 3];
pub const PARAM_VARS: [usize; 3] = [4, 5, 6];

pub fn geometry_names() -> VarNames {
    var_names(&["x0", "x1", "x2", "x3", "alpha", "beta", "gamma"])
}

/// `(α, β, γ)` as polynomials: either constants or the variables 4, 5, 6.
#[derive(Clone, Debug)]
pub struct ParamPolys(pub [MultiPoly; 3]);

impl ParamPolys {
    pub fn symbolic() -> Self {
        let n = geometry_names();
        ParamPolys(PARAM_VARS.map(|v| MultiPoly::var(v, &n)))
    }

    pub fn numeric(alpha: &Gaussian, beta: &Gaussian, gamma: &Gaussian) -> Self {
        ParamPolys([alpha, beta, gamma].map(|g| MultiPoly::constant(g.clone())))
    }

    /// `α+β+γ+αβγ`
    pub fn sigma_pi(&self) -> MultiPoly {
        let [a, b, c] = &self.0;
        a.clone() + b + c + &(a.clone() * b * c)
    }
}

fn x(i: usize) -> MultiPoly {
    MultiPoly::var(i, &geometry_names())
}

fn k(n: i64) -> MultiPoly {
    MultiPoly::from_i64(n)
}

/// Matrix whose entries are linear forms in x0..x3.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFormMatrix {
    pub entries: Vec<Vec<MultiPoly>>,
}

impl LinearFormMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn transpose(&self) -> Self {
        LinearFormMatrix { entries: linalg::transpose(&self.entries) }
    }

    /// Determinant of the 4×4 block left after deleting rows `i < j` (1-based).
    pub fn minor_deleting_rows(&self, i: usize, j: usize) -> MultiPoly {
        assert!(1 <= i && i < j && j <= self.nrows());
        let block: Vec<Vec<MultiPoly>> = (1..=self.nrows())
            .filter(|&r| r != i && r != j)
            .map(|r| self.entries[r - 1].clone())
            .collect();
        linalg::det(&block)
    }

    pub fn minor_deleting_cols(&self, i: usize, j: usize) -> MultiPoly {
        self.transpose().minor_deleting_rows(i, j)
    }

    pub fn eval(&self, point: &[Gaussian]) -> Vec<Vec<Gaussian>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(point)).collect()).collect()
    }
}

/// The 6×4 matrix with `M x^T = 0` encoding the relations.
pub fn matrix_m(p: &ParamPolys) -> LinearFormMatrix {
    let [al, be, ga] = &p.0;
    let n = |v: MultiPoly| -v;
    let entries = vec![
        vec![n(x(1)), x(0), n(al.clone() * &x(3)), n(al.clone() * &x(2))],
        vec![n(x(2)), n(be.clone() * &x(3)), x(0), n(be.clone() * &x(1))],
        vec![n(x(3)), n(ga.clone() * &x(2)), n(ga.clone() * &x(1)), x(0)],
        vec![n(x(3)), n(x(2)), x(1), n(x(0))],
        vec![n(x(1)), n(x(0)), n(x(3)), x(2)],
        vec![n(x(2)), x(3), n(x(0)), n(x(1))],
    ];
    LinearFormMatrix { entries }
}

/// The 4×6 matrix with `x M' = 0` encoding the relations.
pub fn matrix_m_prime(p: &ParamPolys) -> LinearFormMatrix {
    let [al, be, ga] = &p.0;
    let n = |v: MultiPoly| -v;
    let entries = vec![
        vec![n(x(1)), n(x(2)), n(x(3)), n(x(3)), n(x(1)), n(x(2))],
        vec![x(0), be.clone() * &x(3), ga.clone() * &x(2), x(2), n(x(0)), n(x(3))],
        vec![al.clone() * &x(3), x(0), ga.clone() * &x(1), n(x(1)), x(3), n(x(0))],
        vec![al.clone() * &x(2), be.clone() * &x(1), x(0), n(x(0)), n(x(2)), x(1)],
    ];
    LinearFormMatrix { entries }
}

fn linear_coeffs(f: &MultiPoly) -> [MultiPoly; 4] {
    let parts = f.split_coefficients(&PARAM_VARS);
    X_VARS.map(|v| parts.get(&Monomial::var(v, 1)).cloned().unwrap_or_else(MultiPoly::zero))
}

/// Relation rows read off `M x^T`: the word `x_j x_k` gets the `x_j`-coefficient of `M[r][k]`.
pub fn rows_from_m(m: &LinearFormMatrix) -> Vec<Vec<MultiPoly>> {
    m.entries
        .iter()
        .map(|row| {
            let mut out = vec![MultiPoly::zero(); ROW_LEN];
            for (kk, e) in row.iter().enumerate() {
                for (j, c) in linear_coeffs(e).into_iter().enumerate() {
                    out[NGENS * j + kk] = out[NGENS * j + kk].clone() + &c;
                }
            }
            out
        })
        .collect()
}

/// Relation rows read off `x M'`: the word `x_j x_k` gets the `x_k`-coefficient of `M'[j][col]`.
pub fn rows_from_m_prime(m: &LinearFormMatrix) -> Vec<Vec<MultiPoly>> {
    (0..m.ncols())
        .map(|col| {
            let mut out = vec![MultiPoly::zero(); ROW_LEN];
            for j in 0..NGENS {
                for (kk, c) in linear_coeffs(&m.entries[j][col]).into_iter().enumerate() {
                    out[NGENS * j + kk] = out[NGENS * j + kk].clone() + &c;
                }
            }
            out
        })
        .collect()
}

/// Rows `(c1, c2, c3, -a3, -a1, -a2)` expected from `M`, and `(-c1, -c2, -c3, -a3, -a1, -a2)` from `M'`.
pub fn expected_matrix_rows(p: &ParamPolys) -> (Vec<Vec<MultiPoly>>, Vec<Vec<MultiPoly>>) {
    let c = sklyanin_c(&p.0);
    let a = sklyanin_a::<MultiPoly>();
    let v = |f: &FreeElement<MultiPoly>| f.coefficient_vector(2);
    let m_rows = vec![v(&c[0]), v(&c[1]), v(&c[2]), v(&a[2].neg()), v(&a[0].neg()), v(&a[1].neg())];
    let mp_rows = vec![
        v(&c[0].neg()),
        v(&c[1].neg()),
        v(&c[2].neg()),
        v(&a[2].neg()),
        v(&a[0].neg()),
        v(&a[1].neg()),
    ];
    (m_rows, mp_rows)
}

/// `q, q1, q2, q3`
pub fn quadrics(p: &ParamPolys) -> [MultiPoly; 4] {
    let [al, be, ga] = &p.0;
    let sq = |i: usize| x(i).clone() * &x(i);
    let combo = |c: [MultiPoly; 4]| {
        c.iter().enumerate().fold(MultiPoly::zero(), |acc, (i, ci)| acc + &(ci.clone() * &sq(i)))
    };
    [
        combo([k(1), k(1), k(1), k(1)]),
        combo([k(1), -(be.clone() * ga), -ga.clone(), be.clone()]),
        combo([k(1), ga.clone(), -(al.clone() * ga), -al.clone()]),
        combo([k(1), -be.clone(), al.clone(), -(al.clone() * be)]),
    ]
}

/// Determinant of the 4×4 matrix of coefficients of `x_i^2` in `q, q1, q2, q3`.
pub fn quadric_det(p: &ParamPolys) -> MultiPoly {
    let rows: Vec<Vec<MultiPoly>> = quadrics(p)
        .iter()
        .map(|q| {
            let parts = q.split_coefficients(&PARAM_VARS);
            X_VARS.iter().map(|&v| parts.get(&Monomial::var(v, 2)).cloned().unwrap_or_default()).collect()
        })
        .collect();
    linalg::det(&rows)
}

/// All 15 row-deleted minors `h_ij` of `M`, keyed by `(i, j)` with `1 <= i < j <= 6`.
pub fn minors_h(p: &ParamPolys) -> BTreeMap<(usize, usize), MultiPoly> {
    let m = matrix_m(p);
    pairs().map(|(i, j)| ((i, j), m.minor_deleting_rows(i, j))).collect()
}

/// All 15 column-deleted minors `g_ij` of `M'`.
pub fn minors_g(p: &ParamPolys) -> BTreeMap<(usize, usize), MultiPoly> {
    let m = matrix_m_prime(p);
    pairs().map(|(i, j)| ((i, j), m.minor_deleting_cols(i, j))).collect()
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (1..=6).flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
}

/// The stated shape of each `h_ij`, up to a nonzero scalar.
pub fn stated_h_factorizations(p: &ParamPolys) -> BTreeMap<(usize, usize), MultiPoly> {
    let [al, be, ga] = &p.0;
    let [q, q1, q2, q3] = quadrics(p);
    let xx = |i: usize, j: usize| x(i) * &x(j);
    let sq = |i: usize| x(i) * &x(i);
    let f = |lhs: MultiPoly, c: &MultiPoly, rhs: MultiPoly, q: &MultiPoly| (lhs + &(c.clone() * &rhs)) * q;
    let mut m = BTreeMap::new();
    m.insert((2, 3), f(xx(0, 1), &-al.clone(), xx(2, 3), &q));
    m.insert((4, 6), f(xx(0, 1), al, xx(2, 3), &q1));
    m.insert((2, 4), f(xx(0, 1), &k(-1), xx(2, 3), &q2));
    m.insert((3, 6), f(xx(0, 1), &k(1), xx(2, 3), &q3));
    m.insert((1, 3), f(xx(0, 2), &-be.clone(), xx(1, 3), &q));
    m.insert((1, 4), f(xx(0, 2), &k(1), xx(1, 3), &q1));
    m.insert((4, 5), f(xx(0, 2), be, xx(1, 3), &q2));
    m.insert((3, 5), f(xx(0, 2), &k(-1), xx(1, 3), &q3));
    m.insert((1, 2), f(xx(0, 3), &-ga.clone(), xx(1, 2), &q));
    m.insert((1, 6), f(xx(0, 3), &k(-1), xx(1, 2), &q1));
    m.insert((2, 5), f(xx(0, 3), &k(1), xx(1, 2), &q2));
    m.insert((5, 6), f(xx(0, 3), ga, xx(1, 2), &q3));
    m.insert((3, 4), (al.clone() * be * &sq(3) - &sq(0)) * &q + &((sq(0) + &sq(3)) * &q3));
    m.insert((2, 6), (al.clone() * ga * &sq(2) - &sq(0)) * &q + &((sq(0) + &sq(2)) * &q2));
    m.insert((1, 5), (be.clone() * ga * &sq(1) - &sq(0)) * &q + &((sq(0) + &sq(1)) * &q1));
    m
}

/// The displayed expanded forms of `h_34, h_26, h_15` (first lines of each display).
pub fn stated_h_expanded(p: &ParamPolys) -> BTreeMap<(usize, usize), MultiPoly> {
    let [al, be, ga] = &p.0;
    let sq = |i: usize| x(i) * &x(i);
    let mut m = BTreeMap::new();
    m.insert(
        (3, 4),
        (al.clone() * be * &sq(3) - &sq(0)) * &(sq(1) + &sq(2))
            + &((al.clone() * &sq(2) - &(be.clone() * &sq(1))) * &(sq(0) + &sq(3))),
    );
    m.insert(
        (2, 6),
        (al.clone() * ga * &sq(2) - &sq(0)) * &(sq(1) + &sq(3))
            + &((ga.clone() * &sq(1) - &(al.clone() * &sq(3))) * &(sq(0) + &sq(2))),
    );
    m.insert(
        (1, 5),
        (be.clone() * ga * &sq(1) - &sq(0)) * &(sq(2) + &sq(3))
            + &((be.clone() * &sq(3) - &(ga.clone() * &sq(2))) * &(sq(0) + &sq(1))),
    );
    m
}

/// `λ` with `f = λ·g`, where `λ` may depend on the parameters but not on x; `None` if none exists.
pub fn proportionality(f: &MultiPoly, g: &MultiPoly) -> Option<RationalFunction> {
    if g.is_zero() {
        return f.is_zero().then(RationalFunction::zero);
    }
    let fp = f.split_coefficients(&PARAM_VARS);
    let gp = g.split_coefficients(&PARAM_VARS);
    let (lead, gl) = gp.iter().next_back()?;
    let fl = fp.get(lead).cloned().unwrap_or_default();
    // f * gl == fl * g, coefficientwise in x
    let lhs = f.clone() * gl;
    let rhs = fl.clone() * g;
    if lhs != rhs {
        return None;
    }
    RationalFunction::new(fl, gl.clone()).ok()
}

/// `f(-x0, x1, x2, x3)`
pub fn negate_x0(f: &MultiPoly) -> MultiPoly {
    let mut vals: Vec<Option<MultiPoly>> = vec![None; 7];
    vals[0] = Some(-x(0));
    f.substitute_all(&vals)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorCheck {
    pub pair: (usize, usize),
    pub holds: bool,
    /// `h_ij / stated`, rendered
    pub scalar: Option<String>,
}

/// Compares each minor with its stated factorization, and each `g_ij` with `h_ij(-x0, ..)`.
pub fn verify_minor_factorizations(p: &ParamPolys) -> (Vec<MinorCheck>, Vec<MinorCheck>) {
    let h = minors_h(p);
    let g = minors_g(p);
    let stated = stated_h_factorizations(p);
    let check = |pair: (usize, usize), f: &MultiPoly, e: &MultiPoly| {
        let lam = proportionality(f, e).filter(|l| !l.is_zero());
        MinorCheck { pair, holds: lam.is_some(), scalar: lam.map(|l| l.to_string()) }
    };
    let hs = stated.iter().map(|(&pair, e)| check(pair, &h[&pair], e)).collect();
    let gs = g.iter().map(|(&pair, gij)| check(pair, gij, &negate_x0(&h[&pair]))).collect();
    (hs, gs)
}

/// Normalized point of P³ over Q(i) (first nonzero coordinate is one).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(Vec<Gaussian>);

impl ProjectivePoint {
    pub fn new(coords: &[Gaussian]) -> Result<Self> {
        if coords.len() != 4 {
            return Err(Error::InvalidInput(format!("expected 4 coordinates, got {}", coords.len())));
        }
        Ok(ProjectivePoint(crate::presentations::normalize_projective(coords)?))
    }

    pub fn coords(&self) -> &[Gaussian] {
        &self.0
    }

    /// `⊖(ξ0, ξ1, ξ2, ξ3) = (-ξ0, ξ1, ξ2, ξ3)`
    pub fn ominus(&self) -> Self {
        let mut c = self.0.clone();
        c[0] = -c[0].clone();
        ProjectivePoint::new(&c).unwrap()
    }

    /// Image under a coordinate map `ξ -> m ξ`.
    pub fn transform(&self, m: &[Vec<Gaussian>]) -> Result<Self> {
        let col: Vec<Vec<Gaussian>> = self.0.iter().map(|c| vec![c.clone()]).collect();
        let img: Vec<Gaussian> = linalg::mat_mul(m, &col).into_iter().map(|r| r[0].clone()).collect();
        ProjectivePoint::new(&img)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    Infinity,
    Zero,
    One,
    Two,
    Three,
}

impl Stratum {
    pub const ALL: [Stratum; 5] = [Stratum::Infinity, Stratum::Zero, Stratum::One, Stratum::Two, Stratum::Three];

    pub fn label(&self) -> &'static str {
        match self {
            Stratum::Infinity => "P_inf",
            Stratum::Zero => "P_0",
            Stratum::One => "P_1",
            Stratum::Two => "P_2",
            Stratum::Three => "P_3",
        }
    }
}

/// Sign automorphism `γ_i` (diagonal; `i` in 1..=3). Row `k` of the result is the image coordinate.
pub fn gamma_matrix<S: Scalar>(i: usize) -> Vec<Vec<S>> {
    assert!((1..=3).contains(&i));
    let signs: [i64; 4] = match i {
        1 => [1, 1, -1, -1],
        2 => [1, -1, 1, -1],
        _ => [1, -1, -1, 1],
    };
    (0..4).map(|r| (0..4).map(|c| if r == c { S::from_i64(signs[r]) } else { S::zero() }).collect()).collect()
}

/// The five columns of the 20-point table as raw coordinate tuples, in
/// the order P_inf, P_0, P_1, P_2, P_3; within a column, top to bottom.
pub fn point_table_entries<S: GaussianAlgebra>(a: &S, b: &S, c: &S) -> Vec<[[S; 4]; 4]> {
    let i = S::imag_unit();
    let o = S::one();
    let z = S::zero();
    let n = |v: &S| -v.clone();
    let abc = a.clone() * b * c;
    let ia = i.clone() * a;
    let ib = i.clone() * b;
    let ic = i.clone() * c;
    vec![
        [
            [o.clone(), z.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone(), z.clone()],
            [z.clone(), z.clone(), o.clone(), z.clone()],
            [z.clone(), z.clone(), z.clone(), o.clone()],
        ],
        [
            [abc.clone(), a.clone(), b.clone(), c.clone()],
            [abc.clone(), a.clone(), n(b), n(c)],
            [abc.clone(), n(a), b.clone(), n(c)],
            [abc, n(a), n(b), c.clone()],
        ],
        [
            [a.clone(), n(&ia), n(&i), n(&o)],
            [a.clone(), n(&ia), i.clone(), o.clone()],
            [a.clone(), ia.clone(), n(&i), o.clone()],
            [a.clone(), ia, i.clone(), n(&o)],
        ],
        [
            [b.clone(), n(&o), n(&ib), n(&i)],
            [b.clone(), n(&o), ib.clone(), i.clone()],
            [b.clone(), o.clone(), n(&ib), i.clone()],
            [b.clone(), o.clone(), ib, n(&i)],
        ],
        [
            [c.clone(), n(&i), n(&o), n(&ic)],
            [c.clone(), n(&i), o.clone(), ic.clone()],
            [c.clone(), i.clone(), n(&o), ic.clone()],
            [c.clone(), i, o, n(&ic)],
        ],
    ]
}

#[derive(Clone, Debug)]
pub struct PointTable {
    pub columns: Vec<(Stratum, Vec<ProjectivePoint>)>,
}

impl PointTable {
    pub fn points(&self) -> impl Iterator<Item = (Stratum, &ProjectivePoint)> {
        self.columns.iter().flat_map(|(s, pts)| pts.iter().map(move |p| (*s, p)))
    }

    pub fn stratum_of(&self, p: &ProjectivePoint) -> Option<Stratum> {
        self.points().find(|(_, q)| *q == p).map(|(s, _)| s)
    }

    pub fn column(&self, s: Stratum) -> &[ProjectivePoint] {
        &self.columns.iter().find(|(t, _)| *t == s).unwrap().1
    }
}

pub fn point_table(a: &Gaussian, b: &Gaussian, c: &Gaussian) -> Result<PointTable> {
    if (a.clone() * b * c).is_zero() {
        return Err(Error::DegenerateParameters("abc = 0".into()));
    }
    let raw = point_table_entries(a, b, c);
    let mut columns = Vec::new();
    for (s, col) in Stratum::ALL.iter().zip(raw) {
        let pts = col.iter().map(|p| ProjectivePoint::new(p)).collect::<Result<Vec<_>>>()?;
        columns.push((*s, pts));
    }
    Ok(PointTable { columns })
}

/// `θ(p)`: `p` on P_inf, `⊖p` on P_0, `⊖γ_i(p)` on P_i.
pub fn theta(table: &PointTable, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    let s = table
        .stratum_of(p)
        .ok_or_else(|| Error::InvalidInput(format!("{p} is not one of the 20 points")))?;
    Ok(match s {
        Stratum::Infinity => p.clone(),
        Stratum::Zero => p.ominus(),
        Stratum::One => p.transform(&gamma_matrix(1))?.ominus(),
        Stratum::Two => p.transform(&gamma_matrix(2))?.ominus(),
        Stratum::Three => p.transform(&gamma_matrix(3))?.ominus(),
    })
}

pub fn gamma_graph(table: &PointTable) -> Result<Vec<(ProjectivePoint, ProjectivePoint)>> {
    table.points().map(|(_, p)| Ok((p.clone(), theta(table, p)?))).collect()
}

/// Value of the (1,1)-form with row `r` at `(p, p')`: `Σ r[4k+j] p_k p'_j`.
pub fn eval_form<F: Field>(row: &[F], p: &[F], pp: &[F]) -> F {
    let mut acc = F::zero();
    for kk in 0..NGENS {
        for j in 0..NGENS {
            acc = acc + &(row[NGENS * kk + j].clone() * &p[kk] * &pp[j]);
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub distinct_points: usize,
    pub points_distinct: bool,
    /// `(pair index, relation index)` where a form failed to vanish
    pub form_failures: Vec<(usize, usize)>,
    pub kernel_dim: usize,
    pub kernel_equals_relations: bool,
    /// `(h or g, i, j, pair index)` where a minor failed to vanish
    pub minor_failures: Vec<(char, usize, usize, usize)>,
}

impl GammaReport {
    pub fn all_pass(&self) -> bool {
        self.points_distinct
            && self.form_failures.is_empty()
            && self.kernel_dim == 6
            && self.kernel_equals_relations
            && self.minor_failures.is_empty()
    }
}

pub fn verify_gamma(params: &[Gaussian; 3], roots: &[Gaussian; 3]) -> Result<GammaReport> {
    let [al, be, ga] = params;
    if (al.clone() * be * ga).is_zero() {
        return Err(Error::DegenerateParameters("αβγ = 0".into()));
    }
    let sp = al.clone() + be + ga + &(al.clone() * be * ga);
    if sp.is_zero() {
        return Err(Error::PreconditionViolated("α+β+γ+αβγ = 0: Γ is not finite".into()));
    }
    for (r, v) in roots.iter().zip(params) {
        if r.clone() * r != *v {
            return Err(Error::PreconditionViolated(format!("{r}^2 != {v}")));
        }
    }
    let table = point_table(&roots[0], &roots[1], &roots[2])?;
    let graph = gamma_graph(&table)?;
    let uniq: std::collections::HashSet<&ProjectivePoint> = graph.iter().map(|(p, _)| p).collect();

    let rel = sklyanin_relations(al, be, ga);
    let mut form_failures = Vec::new();
    for (pi, (p, pp)) in graph.iter().enumerate() {
        for (ri, row) in rel.rows().iter().enumerate() {
            if !eval_form(row, p.coords(), pp.coords()).is_zero() {
                form_failures.push((pi, ri));
            }
        }
    }

    let eval_rows: Vec<Vec<Gaussian>> = graph
        .iter()
        .map(|(p, pp)| {
            (0..ROW_LEN).map(|idx| p.coords()[idx / NGENS].clone() * &pp.coords()[idx % NGENS]).collect()
        })
        .collect();
    let kernel = linalg::nullspace(&eval_rows, ROW_LEN)?;
    let kernel_equals_relations = linalg::rowspace_eq(&kernel, rel.rows())?;

    let pp = ParamPolys::numeric(al, be, ga);
    let h = minors_h(&pp);
    let g = minors_g(&pp);
    let mut minor_failures = Vec::new();
    let full = |pt: &ProjectivePoint| {
        let mut v = pt.coords().to_vec();
        v.extend([al.clone(), be.clone(), ga.clone()]);
        v
    };
    for (pi, (p, q)) in graph.iter().enumerate() {
        for (&(i, j), f) in &h {
            if !f.eval(&full(p)).is_zero() {
                minor_failures.push(('h', i, j, pi));
            }
        }
        for (&(i, j), f) in &g {
            if !f.eval(&full(q)).is_zero() {
                minor_failures.push(('g', i, j, pi));
            }
        }
    }
    Ok(GammaReport {
        distinct_points: uniq.len(),
        points_distinct: uniq.len() == 20,
        form_failures,
        kernel_dim: kernel.len(),
        kernel_equals_relations,
        minor_failures,
    })
}

/// The three quadrics `x0x1 - λ²x2x3, x0x2 - μ²x1x3, x0x3 - ν²x1x2` with numeric `λ, μ, ν`.
pub fn eight_point_quadrics(l: &Gaussian, m: &Gaussian, n: &Gaussian) -> [MultiPoly; 3] {
    let c = |v: &Gaussian| MultiPoly::constant(v.clone() * v);
    [
        x(0) * &x(1) - &(c(l) * &x(2) * &x(3)),
        x(0) * &x(2) - &(c(m) * &x(1) * &x(3)),
        x(0) * &x(3) - &(c(n) * &x(1) * &x(2)),
    ]
}

pub fn eight_points(l: &Gaussian, m: &Gaussian, n: &Gaussian) -> Result<Vec<ProjectivePoint>> {
    if (l.clone() * m * n).is_zero() {
        return Err(Error::DegenerateParameters("λμν = 0".into()));
    }
    let lmn = l.clone() * m * n;
    let (o, z) = (Gaussian::one(), Gaussian::zero());
    let neg = |v: &Gaussian| -v.clone();
    let raw = vec![
        vec![z.clone(), o.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), o.clone(), z.clone()],
        vec![lmn.clone(), l.clone(), m.clone(), n.clone()],
        vec![lmn.clone(), neg(l), neg(m), n.clone()],
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z, o],
        vec![lmn.clone(), neg(l), m.clone(), neg(n)],
        vec![lmn, l.clone(), neg(m), neg(n)],
    ];
    let qs = eight_point_quadrics(l, m, n);
    let mut out = Vec::new();
    for p in raw {
        let pt = ProjectivePoint::new(&p)?;
        let mut full = pt.coords().to_vec();
        full.extend(std::iter::repeat_n(Gaussian::zero(), 3));
        if let Some(q) = qs.iter().find(|q| !q.eval(&full).is_zero()) {
            return Err(Error::InvalidInput(format!("{pt} is not on {q}")));
        }
        out.push(pt);
    }
    Ok(out)
}

fn check_curve_alpha(alpha: &Gaussian) -> Result<()> {
    if alpha.is_zero() || alpha.is_one() || (-alpha.clone()).is_one() {
        return Err(Error::PreconditionViolated(format!("α = {alpha} lies in {{0, 1, -1}}")));
    }
    Ok(())
}

/// `x0²+x1²+x2²+x3²` and `x0²-x1²+αx2²-αx3²` with `α` given as a polynomial.
pub fn curve_e_quadrics(alpha: &MultiPoly) -> [MultiPoly; 2] {
    let sq = |i: usize| x(i) * &x(i);
    [
        sq(0) + &sq(1) + &sq(2) + &sq(3),
        sq(0) - &sq(1) + &(alpha.clone() * &sq(2)) - &(alpha.clone() * &sq(3)),
    ]
}

pub fn on_curve_e(alpha: &Gaussian, p: &ProjectivePoint) -> Result<bool> {
    check_curve_alpha(alpha)?;
    let mut full = p.coords().to_vec();
    full.extend([Gaussian::zero(), Gaussian::zero(), Gaussian::zero()]);
    Ok(curve_e_quadrics(&MultiPoly::constant(alpha.clone())).iter().all(|q| q.eval(&full).is_zero()))
}

/// `σ(x0, x1, x2, x3) = (x1, x0, x3, -x2)` as a coordinate matrix.
pub fn sigma_matrix<S: Scalar>() -> Vec<Vec<S>> {
    let mut m = vec![vec![S::zero(); 4]; 4];
    m[0][1] = S::one();
    m[1][0] = S::one();
    m[2][3] = S::one();
    m[3][2] = -S::one();
    m
}

/// Smallest `k >= 1` with `m^k` a scalar matrix.
pub fn projective_order<F: Field>(m: &[Vec<F>], max: usize) -> Option<usize> {
    let mut pow = m.to_vec();
    for k in 1..=max {
        let c = pow[0][0].clone();
        let scalar = !c.is_zero()
            && (0..pow.len()).all(|r| (0..pow.len()).all(|s| pow[r][s] == if r == s { c.clone() } else { F::zero() }));
        if scalar {
            return Some(k);
        }
        pow = linalg::mat_mul(&pow, m);
    }
    None
}

/// Membership certificates showing each entry of `M(x)·σ(x)^T` (for `A(α,1,-1)`,
/// `α` symbolic) lies in the ideal of the two quadrics of E.
pub fn sigma_certificates() -> Result<Vec<Membership>> {
    let alpha = MultiPoly::var(4, &geometry_names());
    let params = ParamPolys([alpha.clone(), k(1), k(-1)]);
    let m = matrix_m(&params);
    let sig: Vec<MultiPoly> = vec![x(1), x(0), x(3), -x(2)];
    let gens = curve_e_quadrics(&alpha);
    m.entries
        .iter()
        .map(|row| {
            let f = row.iter().zip(&sig).fold(MultiPoly::zero(), |acc, (e, s)| acc + &(e.clone() * s));
            ideal_slice_membership(&f, &gens, 4, &[4])
        })
        .collect()
}

/// Whether each `h_ij` lies in the ideal `(q, q1)` in degree 4 (numeric parameters).
pub fn minors_in_q_q1(p: &ParamPolys) -> Result<Vec<((usize, usize), bool)>> {
    let [q, q1, _, _] = quadrics(p);
    minors_h(p)
        .into_iter()
        .map(|(pair, h)| Ok((pair, ideal_slice_membership(&h, &[q.clone(), q1.clone()], 4, &[])?.member)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn matrices_encode_relations() {
        let p = ParamPolys::symbolic();
        let (em, emp) = expected_matrix_rows(&p);
        assert_eq!(rows_from_m(&matrix_m(&p)), em);
        assert_eq!(rows_from_m_prime(&matrix_m_prime(&p)), emp);
    }

    #[test]
    fn quadric_det_numeric() {
        let p = ParamPolys::numeric(&g(4), &g(9), &g(25));
        assert_eq!(quadric_det(&p).constant_value(), Some(g(-879844)));
    }

    #[test]
    fn theta_fixtures() {
        let t = point_table(&g(2), &g(3), &g(5)).unwrap();
        let e0 = ProjectivePoint::new(&[g(1), g(0), g(0), g(0)]).unwrap();
        assert_eq!(theta(&t, &e0).unwrap(), e0);
        let p = ProjectivePoint::new(&[g(30), g(2), g(3), g(5)]).unwrap();
        assert_eq!(theta(&t, &p).unwrap(), ProjectivePoint::new(&[g(-30), g(2), g(3), g(5)]).unwrap());
    }
}
