//! Degree-two central elements and the free-algebra identities behind them.
//!
//! Numeric centrality goes through [`GradedAlgebra::is_central`]. Symbolic
//! centrality over Q(i)(a,b,c,d) is certified by explicit polynomial
//! combinations `[x_g, Z] = Σ p·(x_m r) + Σ p'·(r x_m)` found by
//! [`polynomial_certificate`]; the certificate is recombined and compared.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, NGENS};
use crate::graded::{polynomial_certificate, Centrality, DegreeCap, GradedAlgebra, PolyCertificate};
use crate::linalg::{self, sparse_from_dense, SparseVec};
use crate::presentations::{
    chl_elements, chl_relations, chl_to_sklyanin_params, chl_x_to_z, chl_z_elements, chl_z_relations, sklyanin_a,
    sklyanin_c, sklyanin_relations, RelationSpace, CYCLIC,
};
use crate::scalars::{
    ideal_slice_membership, var_names, ExactDiv, ExtensionElement, Field, Gaussian, MultiPoly, RationalFunction, Scalar,
};
use crate::symmetry::{chl_psi, ChlPsi, Q3Convention};

/// A homogeneous quadratic element together with the algebra it lives in.
#[derive(Clone, Debug)]
pub struct CentralCandidate<F: Field> {
    pub element: FreeElement<F>,
    pub context: RelationSpace<F>,
    pub label: String,
}

impl<F: Field> CentralCandidate<F> {
    fn new(element: FreeElement<F>, context: RelationSpace<F>, label: &str) -> Self {
        debug_assert_eq!(element.degree(), Some(2));
        CentralCandidate { element, context, label: label.to_string() }
    }

    /// Exact degree-3 membership of every `[Z, x_g]`.
    pub fn certify(&self) -> Result<Centrality> {
        GradedAlgebra::from_space(&self.context, DegreeCap::default()).is_central(&self.element)
    }

    pub fn render(&self) -> String {
        self.element.render(self.context.names())
    }
}

fn diagonal<S: Scalar>(w: &[S; NGENS]) -> FreeElement<S> {
    let x = FreeElement::<S>::gens();
    (0..NGENS).fold(FreeElement::zero(), |acc, i| acc.add(&x[i].mul(&x[i]).scale(&w[i])))
}

fn sum_plus_product<F: Scalar>(al: &F, be: &F, ga: &F) -> F {
    al.clone() + be + ga + &(al.clone() * be * ga)
}

/// `Ω0 = -x0² + x1² + x2² + x3²` and `Ω1 = x0² + βγ x1² - γ x2² + β x3²`.
pub fn sklyanin_central_pair<F: Field>(
    alpha: &F,
    beta: &F,
    gamma: &F,
) -> Result<(CentralCandidate<F>, CentralCandidate<F>)> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if v.is_zero() || *v == F::one() || *v == -F::one() {
            return Err(Error::PreconditionViolated(format!("{name} = {v} lies in {{0, 1, -1}}")));
        }
    }
    let s = sum_plus_product(alpha, beta, gamma);
    if !s.is_zero() {
        return Err(Error::PreconditionViolated(format!("alpha+beta+gamma+alpha*beta*gamma = {s} is nonzero")));
    }
    let rel = sklyanin_relations(alpha, beta, gamma);
    let o = F::one();
    let omega0 = diagonal(&[-o.clone(), o.clone(), o.clone(), o.clone()]);
    let omega1 = diagonal(&[o, beta.clone() * gamma, -gamma.clone(), beta.clone()]);
    Ok((CentralCandidate::new(omega0, rel.clone(), "Omega0"), CentralCandidate::new(omega1, rel, "Omega1")))
}

/// `ψ1(Ω0) = λ·Ω1` over Q(i)(a,b,c) for A(a²,b²,c²); returns `λ` when it exists.
pub fn psi1_omega_ratio() -> Result<Option<RationalFunction>> {
    let names = var_names(&["a", "b", "c"]);
    let r = RationalFunction::vars(&names);
    let roots = [r[0].clone(), r[1].clone(), r[2].clone()];
    let sq = |v: &RationalFunction| v.clone() * v;
    let (be, ga) = (sq(&r[1]), sq(&r[2]));
    let o = RationalFunction::one();
    let omega0 = diagonal(&[-o.clone(), o.clone(), o.clone(), o.clone()]);
    let omega1 = diagonal(&[o, be.clone() * &ga, -ga.clone(), be]);
    let image = crate::symmetry::psi(1, &roots)?.apply(&omega0);
    let x00 = crate::freealg::Word::new(&[0, 0]);
    let lambda = image.coeff(&x00).div(&omega1.coeff(&x00))?;
    Ok((image == omega1.scale(&lambda)).then_some(lambda))
}

/// `x0², x1², x2², x3²` in A(α,β,γ). No precondition: whether they are
/// central is what [`CentralCandidate::certify`] decides.
pub fn square_candidates<F: Field>(alpha: &F, beta: &F, gamma: &F) -> [CentralCandidate<F>; NGENS] {
    let rel = sklyanin_relations(alpha, beta, gamma);
    let x = FreeElement::<F>::gens();
    std::array::from_fn(|i| CentralCandidate::new(x[i].mul(&x[i]), rel.clone(), &format!("x{i}^2")))
}

/// `Z1` in the generators x1..x4 and in z0..z3.
pub struct Z1Forms<F: Field> {
    pub x_form: CentralCandidate<F>,
    pub z_form: CentralCandidate<F>,
    /// Coefficients of `z0², z1², z2², z3²`.
    pub z_coefficients: [F; NGENS],
}

impl<F: Field> Z1Forms<F> {
    /// The z-form is the x-form rewritten through the basis change.
    pub fn forms_agree(&self) -> bool {
        self.x_form.element.apply_linear(&chl_x_to_z::<F>()) == self.z_form.element
    }
}

pub fn chl_z1_x_element<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> FreeElement<S> {
    let x = FreeElement::<S>::gens();
    x[0].anticommutator(&x[2])
        .scale(a)
        .add(&x[1].anticommutator(&x[3]).scale(b))
        .add(&x[1].mul(&x[1]).add(&x[3].mul(&x[3])).scale(c))
        .add(&x[0].mul(&x[0]).add(&x[2].mul(&x[2])).scale(d))
}

pub fn chl_z1_z_coefficients<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> [S; NGENS] {
    let two = S::from_i64(2);
    [
        two.clone() * &(b.clone() + c),
        two.clone() * &(a.clone() + d),
        two.clone() * &(d.clone() - a),
        two * &(c.clone() - b),
    ]
}

pub fn chl_z1<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<Z1Forms<F>> {
    if [a, b, c, d].iter().all(|v| v.is_zero()) {
        return Err(Error::InvalidInput("(a,b,c,d) must be nonzero".into()));
    }
    let z_coefficients = chl_z1_z_coefficients(a, b, c, d);
    Ok(Z1Forms {
        x_form: CentralCandidate::new(chl_z1_x_element(a, b, c, d), chl_relations(a, b, c, d)?, "Z1"),
        z_form: CentralCandidate::new(diagonal(&z_coefficients), chl_z_relations(a, b, c, d)?, "Z1"),
        z_coefficients,
    })
}

/// Per-generator outcome of a symbolic certificate search.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicCentrality {
    pub label: String,
    pub certificate_degree: u32,
    /// A certificate was found and recombines to `[x_g, Z]`, per generator.
    pub certified: [bool; NGENS],
    /// Number of nonzero certificate coefficients, per generator.
    pub certificate_terms: [usize; NGENS],
}

impl SymbolicCentrality {
    pub fn central(&self) -> bool {
        self.certified.iter().all(|&b| b)
    }
}

/// Searches, per generator, for polynomial coefficients of degree
/// `cert_degree` in `params` expressing `[x_g, z]` through the padded relations.
pub fn certify_central_symbolic(
    label: &str,
    relations: &[FreeElement<MultiPoly>],
    z: &FreeElement<MultiPoly>,
    params: &[usize],
    cert_degree: u32,
) -> Result<SymbolicCentrality> {
    let n = z.degree().ok_or_else(|| Error::InvalidInput(format!("{label} is not homogeneous")))? + 1;
    let x = FreeElement::<MultiPoly>::gens();
    let mut rows: Vec<SparseVec<MultiPoly>> = Vec::new();
    for r in relations {
        for m in &x {
            rows.push(sparse_from_dense(&m.mul(r).coefficient_vector(n)));
            rows.push(sparse_from_dense(&r.mul(m).coefficient_vector(n)));
        }
    }
    let mut certified = [false; NGENS];
    let mut certificate_terms = [0; NGENS];
    for g in 0..NGENS {
        let target = sparse_from_dense(&x[g].commutator(z).coefficient_vector(n));
        if let Some(cert) = polynomial_certificate(&rows, &target, params, cert_degree)? {
            certified[g] = recombines(&cert, &rows, &target);
            certificate_terms[g] = cert.coefficients.len();
        }
    }
    Ok(SymbolicCentrality { label: label.to_string(), certificate_degree: cert_degree, certified, certificate_terms })
}

fn recombines(cert: &PolyCertificate, rows: &[SparseVec<MultiPoly>], target: &SparseVec<MultiPoly>) -> bool {
    let mut diff = cert.recombine(rows);
    linalg::axpy(&mut diff, &-MultiPoly::one(), target);
    diff.values().all(|p| p.is_zero())
}

fn abcd_polys() -> [MultiPoly; 4] {
    let names = var_names(&["a", "b", "c", "d"]);
    std::array::from_fn(|i| MultiPoly::var(i, &names))
}

/// Z1 central over Q(i)(a,b,c,d), in both generating sets.
pub fn chl_z1_symbolic() -> Result<[SymbolicCentrality; 2]> {
    let [a, b, c, d] = abcd_polys();
    let xs = certify_central_symbolic("Z1 (x-form)", &chl_elements(&a, &b, &c, &d), &chl_z1_x_element(&a, &b, &c, &d), &[0, 1, 2, 3], 0)?;
    let zs = certify_central_symbolic(
        "Z1 (z-form)",
        &chl_z_elements(&a, &b, &c, &d),
        &diagonal(&chl_z1_z_coefficients(&a, &b, &c, &d)),
        &[0, 1, 2, 3],
        0,
    )?;
    Ok([xs, zs])
}

/// `Z2 = ψ(Z1/2)` over `F(q2, q3)`, next to the displayed closed formula.
pub struct Z2Data<F: Field> {
    pub psi: ChlPsi<F>,
    pub z2: FreeElement<ExtensionElement<F>>,
    pub printed: FreeElement<ExtensionElement<F>>,
}

impl<F: Field> Z2Data<F> {
    pub fn matches_printed_formula(&self) -> bool {
        self.z2 == self.printed
    }

    /// Coefficient of `z0²` in `Z2`.
    pub fn z0_coefficient(&self) -> ExtensionElement<F> {
        self.z2.coeff(&crate::freealg::Word::new(&[0, 0]))
    }

    /// `Z2` split along the basis `q2^e2 q3^e3` of `F(q2,q3)` over `F`.
    pub fn components(&self) -> Vec<(Vec<usize>, FreeElement<F>)> {
        self.psi.components(&self.z2)
    }

    pub fn printed_components(&self) -> Vec<(Vec<usize>, FreeElement<F>)> {
        self.psi.components(&self.printed)
    }
}

pub fn chl_z2<F: Field>(a: &F, b: &F, c: &F, d: &F, convention: Q3Convention) -> Result<Z2Data<F>> {
    let psi = chl_psi(a, b, c, d, convention)?;
    let half = F::one().div(&F::from_i64(2))?;
    let z1 = diagonal(&chl_z1_z_coefficients(a, b, c, d)).scale(&half);
    let z2 = psi.apply(&z1);
    let [t0, t1, t2, t3] = psi.taus.clone();
    let lift = |v: F| ExtensionElement::constant(v);
    // (q2q3)^-2 = τ1², (q2q3)² = τ0², (q2/q3)² = τ2², (q3/q2)² = τ3²
    let printed = diagonal(&[
        lift(a.clone() + d) * &t1 * &t1,
        lift(b.clone() + c) * &t0 * &t0,
        lift(c.clone() - b) * &t2 * &t2,
        lift(d.clone() - a) * &t3 * &t3,
    ]);
    Ok(Z2Data { psi, z2, printed })
}

/// Every q-monomial component of `el` is central in the algebra over F.
pub fn components_central<F: Field>(rel: &RelationSpace<F>, parts: &[(Vec<usize>, FreeElement<F>)]) -> Result<bool> {
    let mut alg = GradedAlgebra::from_space(rel, DegreeCap::default());
    for (_, p) in parts {
        if !alg.is_central(p)?.central {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplies through by a common denominator so that all coefficients are polynomials.
pub fn clear_denominators(f: &FreeElement<RationalFunction>) -> FreeElement<MultiPoly> {
    let mut dens: Vec<MultiPoly> = f.terms().map(|(_, c)| c.denom().clone()).collect();
    dens.sort_by_key(|d| std::cmp::Reverse(d.total_degree().unwrap_or(0)));
    let mut l = MultiPoly::one();
    for d in dens {
        if l.div_exact(&d).is_none() {
            l = l * &d;
        }
    }
    let mut cleared: Vec<(crate::freealg::Word, MultiPoly)> = f
        .terms()
        .map(|(w, c)| (w.clone(), c.numer().clone() * &l.div_exact(c.denom()).expect("common denominator is a multiple")))
        .collect();
    // strip common factors: the denominators, then linear forms with 0/±1 coefficients
    let mut factors: Vec<MultiPoly> = f.terms().map(|(_, c)| c.denom().clone()).filter(|d| !d.is_constant()).collect();
    let nvars = cleared.iter().filter_map(|(_, c)| c.variables_used().last().copied()).max().map_or(0, |m| m + 1);
    for code in 1..3usize.pow(nvars as u32) {
        let eps: Vec<i64> = (0..nvars).map(|v| (code / 3usize.pow(v as u32) % 3) as i64 - 1).collect();
        if eps.iter().find(|&&e| e != 0) == Some(&1) {
            factors.push(MultiPoly::from_terms(eps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(v, &e)| {
                (crate::scalars::Monomial::var(v, 1), Gaussian::from_int(e))
            })));
        }
    }
    for d in &factors {
        while let Some(q) = cleared.iter().map(|(_, c)| c.div_exact(d)).collect::<Option<Vec<_>>>() {
            cleared.iter_mut().zip(q).for_each(|(t, c)| t.1 = c);
        }
    }
    FreeElement::from_terms(cleared)
}

/// Z2 = ψ(Z1/2) over Q(i)(a,b,c,d)(q2,q3): each q-component, with
/// denominators cleared, gets a polynomial centrality certificate.
pub fn chl_z2_symbolic() -> Result<Vec<SymbolicCentrality>> {
    let names = var_names(&["a", "b", "c", "d"]);
    let v = RationalFunction::vars(&names);
    let data = chl_z2(&v[0], &v[1], &v[2], &v[3], Q3Convention::SignCorrected)?;
    let [a, b, c, d] = abcd_polys();
    let rels = chl_z_elements(&a, &b, &c, &d);
    let mut out = Vec::new();
    for (exps, part) in data.components() {
        let cleared = clear_denominators(&part);
        let degs: Vec<u32> = cleared.terms().filter_map(|(_, c)| c.homogeneous_degree_in(&[0, 1, 2, 3])).collect();
        let deg = *degs.first().ok_or_else(|| Error::InvalidInput("empty component".into()))?;
        if degs.len() != cleared.num_terms() || degs.iter().any(|&e| e != deg) || deg == 0 {
            return Err(Error::InvalidInput("Z2 component is not homogeneous in a,b,c,d".into()));
        }
        let label = format!("Z2 component q2^{} q3^{}", exps[0], exps[1]);
        out.push(certify_central_symbolic(&label, &rels, &cleared, &[0, 1, 2, 3], deg - 1)?);
    }
    Ok(out)
}

/// A displayed free-algebra identity and its residual.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

fn check<S: Scalar>(name: String, lhs: &FreeElement<S>, rhs: &FreeElement<S>) -> IdentityCheck {
    let r = lhs.sub(rhs);
    IdentityCheck { name, holds: r.is_zero(), residual: (!r.is_zero()).then(|| r.to_string()) }
}

fn anti<S: Scalar>(x: &FreeElement<S>, y: &FreeElement<S>) -> FreeElement<S> {
    x.anticommutator(y)
}

fn com<S: Scalar>(x: &FreeElement<S>, y: &FreeElement<S>) -> FreeElement<S> {
    x.commutator(y)
}

/// The four identity families behind the centrality of the squares, for each
/// cyclic `(i,j,k)`, over Q(i)[α1,α2,α3]. Families 3 and 4 are in corrected
/// form; see [`displayed_square_families`].
pub fn square_identities() -> Vec<IdentityCheck> {
    square_families(false)
}

/// Families 3 and 4 with the signs and coefficients as usually displayed,
/// which do not hold in the free algebra.
pub fn displayed_square_families() -> Vec<IdentityCheck> {
    square_families(true).into_iter().filter(|c| c.name.contains("family 3") || c.name.contains("family 4")).collect()
}

fn square_families(displayed: bool) -> Vec<IdentityCheck> {
    let names = var_names(&["alpha1", "alpha2", "alpha3"]);
    let al: [MultiPoly; 3] = std::array::from_fn(|t| MultiPoly::var(t, &names));
    let cs = sklyanin_c(&al);
    let as_ = sklyanin_a::<MultiPoly>();
    let x = FreeElement::<MultiPoly>::gens();
    let one = MultiPoly::one();
    let sp = sum_plus_product(&al[0], &al[1], &al[2]);
    let mut out = Vec::new();
    for &(i, j, k) in &CYCLIC {
        let (ai, aj, ak) = (&al[i - 1], &al[j - 1], &al[k - 1]);
        let (ci, cj, ck) = (&cs[i - 1], &cs[j - 1], &cs[k - 1]);
        let (a_i, a_j, a_k) = (&as_[i - 1], &as_[j - 1], &as_[k - 1]);
        let (xi, xj, xk, x0) = (&x[i], &x[j], &x[k], &x[0]);
        let ajk1 = aj.clone() * ak + &one;
        let sign = |v: MultiPoly| if displayed { -v } else { v };

        let lhs1 = anti(xi, ci)
            .scale(&(aj.clone() + ak))
            .sub(&com(xi, a_i).scale(&(ai.clone() * &ajk1)))
            .sub(&anti(xj, cj).add(&com(xj, a_j)).scale(&(ai.clone() * &(ak.clone() + &one))))
            .add(&anti(xk, ck).add(&com(xk, a_k)).scale(&(ai.clone() * &(aj.clone() - &one))));
        out.push(check(format!("squares family 1 ({i},{j},{k})"), &lhs1, &com(x0, &xi.mul(xi)).scale(&sp)));

        let lhs2 = anti(xj, a_i)
            .scale(&(aj.clone() + ak))
            .add(&com(xj, ci).scale(&ajk1))
            .sub(&anti(xi, a_j).scale(aj).add(&com(xi, cj)).scale(&(ak.clone() + &one)))
            .add(&com(x0, a_k).sub(&anti(x0, ck)).scale(&(aj.clone() - &one)));
        out.push(check(format!("squares family 2 ({i},{j},{k})"), &lhs2, &com(xk, &xj.mul(xj)).scale(&sp)));

        let ci_coef = if displayed { ai.clone() * &ajk1 } else { ai.clone() * ak + &one };
        let lhs3 = anti(xi, a_j)
            .scale(&(ai.clone() + ak))
            .sub(&com(xi, cj).scale(&ci_coef))
            .add(&anti(x0, ck).sub(&com(x0, a_k)).scale(&(ai.clone() + &one)))
            .add(&anti(xj, a_i).scale(ai).sub(&com(xj, ci)).scale(&sign(ak.clone() - &one)));
        out.push(check(format!("squares family 3 ({i},{j},{k})"), &lhs3, &com(xk, &xi.mul(xi)).scale(&-sp.clone())));

        let lhs4 = anti(x0, ci)
            .scale(&sign(aj.clone() + ak))
            .add(&com(x0, a_i).scale(&sign(ai.clone() * &ajk1)))
            .add(&anti(xk, a_j).scale(aj).sub(&com(xk, cj)).scale(&(ai.clone() * &(ak.clone() + &one))))
            .add(&anti(xj, a_k).scale(ak).add(&com(xj, ck)).scale(&sign(-(ai.clone() * &(aj.clone() - &one)))));
        out.push(check(format!("squares family 4 ({i},{j},{k})"), &lhs4, &com(xi, &x0.mul(x0)).scale(&-sp.clone())));
    }
    out
}

/// The two combinations behind the centrality of `-x0²+x1²+x2²+x3²`, over
/// Q(i)(α1,α2) with `α3 = -(α1+α2)/(1+α1α2)`.
pub fn sklyanin_center_identities() -> Result<Vec<IdentityCheck>> {
    let names = var_names(&["alpha1", "alpha2"]);
    let a1 = RationalFunction::var(0, &names);
    let a2 = RationalFunction::var(1, &names);
    let one = RationalFunction::one();
    let a3 = -(a1.clone() + &a2).div(&(one.clone() + &(a1.clone() * &a2)))?;
    debug_assert!(sum_plus_product(&a1, &a2, &a3).is_zero());
    let al = [a1.clone(), a2.clone(), a3.clone()];
    let cs = sklyanin_c(&al);
    let as_ = sklyanin_a::<RationalFunction>();
    let x = FreeElement::<RationalFunction>::gens();
    let sq = |i: usize| x[i].mul(&x[i]);

    let lhs1 = anti(&x[1], &cs[0])
        .scale(&(one.clone() + &(a2.clone() * &a3)))
        .add(&com(&x[1], &as_[0]).scale(&(a2.clone() * &a3)))
        .add(&anti(&x[2], &cs[1]).scale(&(one.clone() + &a3)))
        .add(&com(&x[2], &as_[1]).scale(&a3))
        .add(&anti(&x[3], &cs[2]).scale(&(one.clone() - &a2)))
        .sub(&com(&x[3], &as_[2]).scale(&a2));
    let rhs1 = com(&x[0], &sq(1).add(&sq(2)).add(&sq(3)));

    let omega0 = sq(1).add(&sq(2)).add(&sq(3)).sub(&sq(0));
    let lhs2 = anti(&x[0], &cs[0])
        .add(&com(&x[0], &as_[0]).scale(&a1))
        .scale(&(one.clone() + &a2))
        .add(&com(&x[3], &cs[1]).scale(&(one.clone() - &a1)))
        .add(&anti(&x[3], &as_[1]).scale(&(one.clone() + &a1 + &(RationalFunction::from_i64(2) * &a1 * &a2))))
        .sub(&com(&x[2], &cs[2]).add(&anti(&x[2], &as_[2])).scale(&(one.clone() + &(a1.clone() * &a2))));
    let rhs2 = com(&x[1], &omega0).scale(&((one.clone() + &a1) * &(one + &a2)));
    Ok(vec![
        check("center pair identity for [x0, x1^2+x2^2+x3^2]".into(), &lhs1, &rhs1),
        check("center pair identity for [x1, -x0^2+x1^2+x2^2+x3^2]".into(), &lhs2, &rhs2),
    ])
}

/// With every `α_i = 0`, `{x_i, c_i} = [x0, x_i²]`.
pub fn degenerate_anticommutator_identity() -> Vec<IdentityCheck> {
    let cs = sklyanin_c(&[Gaussian::zero(), Gaussian::zero(), Gaussian::zero()]);
    let x = FreeElement::<Gaussian>::gens();
    (1..=3)
        .map(|i| check(format!("{{x{i}, c{i}}} at zero parameters"), &anti(&x[i], &cs[i - 1]), &com(&x[0], &x[i].mul(&x[i]))))
        .collect()
}

/// `[z0, Z1]` as the stated combination of the z-relations, over Q(i)[a,b,c,d].
pub fn z1_commutator_identity() -> IdentityCheck {
    let [a, b, c, d] = abcd_polys();
    // order c1, c2, a1, a2, c3, a3
    let r = chl_z_elements(&a, &b, &c, &d);
    let z = FreeElement::<MultiPoly>::gens();
    let two = MultiPoly::from_i64(2);
    let lhs = com(&z[0], &diagonal(&chl_z1_z_coefficients(&a, &b, &c, &d)));
    let rhs = anti(&z[1], &r[0])
        .sub(&com(&z[1], &r[2]))
        .add(&anti(&z[2], &r[1]))
        .add(&com(&z[2], &r[3]))
        .sub(&anti(&z[3], &r[4]).scale(&two))
        .sub(&com(&z[3], &r[5]).scale(&two));
    check("[z0, Z1] as a combination of the z-relations".into(), &lhs, &rhs)
}

/// All free-algebra identities of the central-element proofs.
pub fn proof_identity_suite() -> Result<Vec<IdentityCheck>> {
    let mut out = square_identities();
    out.extend(sklyanin_center_identities()?);
    out.extend(degenerate_anticommutator_identity());
    out.push(z1_commutator_identity());
    Ok(out)
}

/// A relabeling of z's and parameters used to transport `[z0, Z1] = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct RelabelingCheck {
    pub name: String,
    pub preserves_relations: bool,
    pub fixes_z1: bool,
}

/// `(z0↔z1, z2↔z3, a↔b, c↔d)` and `(z0↔z3, z1↔z2, a↔-a, b↔-b)`, symbolically.
pub fn z1_relabelings() -> Result<Vec<RelabelingCheck>> {
    let names = var_names(&["a", "b", "c", "d"]);
    let v = RationalFunction::vars(&names);
    let (a, b, c, d) = (&v[0], &v[1], &v[2], &v[3]);
    let perm = |p: [usize; 4]| -> Vec<Vec<RationalFunction>> {
        let mut m = vec![vec![RationalFunction::zero(); 4]; 4];
        for (j, &t) in p.iter().enumerate() {
            m[t][j] = RationalFunction::one();
        }
        m
    };
    let cases = [
        ("z0<->z1, z2<->z3, a<->b, c<->d", perm([1, 0, 3, 2]), [b.clone(), a.clone(), d.clone(), c.clone()]),
        ("z0<->z3, z1<->z2, a<->-a, b<->-b", perm([3, 2, 1, 0]), [-a.clone(), -b.clone(), c.clone(), d.clone()]),
    ];
    let base = chl_z_relations(a, b, c, d)?;
    let z1 = diagonal(&chl_z1_z_coefficients(a, b, c, d));
    let mut out = Vec::new();
    for (name, m, p) in cases {
        let target = chl_z_relations(&p[0], &p[1], &p[2], &p[3])?;
        let z1t = diagonal(&chl_z1_z_coefficients(&p[0], &p[1], &p[2], &p[3]));
        out.push(RelabelingCheck {
            name: name.to_string(),
            preserves_relations: target.same_span(&base.substituted_rows(&m))?,
            fixes_z1: z1.apply_linear(&m) == z1t,
        });
    }
    Ok(out)
}

/// Polynomial identities from the correspondence between R(a,b,c,d) and A(α,β,γ).
#[derive(Clone, Debug, Serialize)]
pub struct ChlIdentityReport {
    /// `ab r² + ab s² + cd p² + cd q² = 2(ac+bd)(ad+bc)`.
    pub first_identity: IdentityCheckPoly,
    /// `(q²-s²)(r²-q²)ab(α+β+γ+αβγ) - 2(ab+cd)(p²q²-r²s²) ∈ (ac+bd)`.
    pub second_identity_in_ideal: bool,
    pub second_identity_cofactor: Option<String>,
    /// Both sides of the second identity at (1,2,-4,2).
    pub sample_point_sides: (String, String),
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheckPoly {
    pub holds: bool,
    pub residual: String,
}

pub fn chl_identity_checks() -> Result<ChlIdentityReport> {
    let [a, b, c, d] = abcd_polys();
    let (p, q) = (a.clone() + &b, a.clone() - &b);
    let (r, s) = (c.clone() + &d, c.clone() - &d);
    let two = MultiPoly::from_i64(2);
    let sqr = |x: &MultiPoly| x.clone() * x;
    let (ab, cd) = (a.clone() * &b, c.clone() * &d);
    let first_l = ab.clone() * &sqr(&r) + &(ab.clone() * &sqr(&s)) + &(cd.clone() * &sqr(&p)) + &(cd.clone() * &sqr(&q));
    let first_r = two.clone() * &(a.clone() * &c + &(b.clone() * &d)) * &(a.clone() * &d + &(b.clone() * &c));
    let first_res = first_l - &first_r;

    // (q²-s²)(r²-q²)ab·(α+β+γ+αβγ) with denominators cleared
    let (p2, q2, r2, s2) = (sqr(&p), sqr(&q), sqr(&r), sqr(&s));
    let lhs = (r2.clone() - &p2) * &(r2.clone() - &q2) * &ab
        + &((p2.clone() - &s2) * &(q2.clone() - &s2) * &ab)
        + &((q2.clone() - &s2) * &(r2.clone() - &q2) * &cd)
        + &((r2.clone() - &p2) * &(p2.clone() - &s2) * &cd);
    let rhs = two * &(ab + &cd) * &(p2 * &q2 - &(r2 * &s2));
    let diff = lhs.clone() - &rhs;
    let quadric = a.clone() * &c + &(b.clone() * &d);
    let deg = diff.total_degree().unwrap_or(0);
    let m = ideal_slice_membership(&diff, std::slice::from_ref(&quadric), deg, &[])?;
    let cofactor = m.member.then(|| diff.div_exact(&quadric).map(|k| k.to_string())).flatten();
    let point = [1, 2, -4, 2].map(Gaussian::from_int);
    Ok(ChlIdentityReport {
        first_identity: IdentityCheckPoly { holds: first_res.is_zero(), residual: first_res.to_string() },
        second_identity_in_ideal: m.member && m.recombine(&[quadric]).is_some_and(|f| f == diff),
        second_identity_cofactor: cofactor,
        sample_point_sides: (lhs.eval(&point).to_string(), rhs.eval(&point).to_string()),
    })
}

/// Sanity link to the parameter map: Σ+Π at a point, for reports.
pub fn chl_sum_plus_product(abcd: &[Gaussian; 4]) -> Result<Gaussian> {
    Ok(chl_to_sklyanin_params(&abcd[0], &abcd[1], &abcd[2], &abcd[3])?.sum_plus_product)
}

/// An assignment `(Y+, Y-, K, K')` of degree-one elements.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorAssignment {
    pub y_plus: String,
    pub y_minus: String,
    pub k: String,
    pub k_prime: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSearchReport {
    pub alpha: String,
    pub candidates_per_generator: usize,
    /// The literal assignment `Y± = x0 ± x1, K = x0 + x1, K' = x0 - x1`.
    pub literal_is_basis: bool,
    pub literal_relations_hold: [bool; 6],
    pub solutions: Vec<GeneratorAssignment>,
}

/// Searches `x_p + u x_q` (`p < q`, `u ∈ {1,-1,i,-i}`) for bases `Y+, Y-, K, K'`
/// of A(α,1,-1)_1 with `KY± = ∓iY±K`, `K'Y± = ±iY±K'`, `[Y+,Y-] = i(K'²-K²)`
/// and `[K,K'] = iα(Y+²-Y-²)`. All six relations are quadratic, so membership
/// in the degree-2 relation space decides them.
pub fn uqsl2_generator_search(alpha: &Gaussian) -> Result<GeneratorSearchReport> {
    if alpha.is_zero() || *alpha == Gaussian::one() || *alpha == -Gaussian::one() {
        return Err(Error::PreconditionViolated(format!("alpha = {alpha} lies in {{0, 1, -1}}")));
    }
    let rel = sklyanin_relations(alpha, &Gaussian::one(), &-Gaussian::one());
    let ech = rel.echelon()?;
    let i = Gaussian::i();
    let units = [Gaussian::one(), -Gaussian::one(), i.clone(), -i.clone()];
    let mut cands: Vec<Vec<Gaussian>> = Vec::new();
    for p in 0..NGENS {
        for q in p + 1..NGENS {
            for u in &units {
                let mut v = vec![Gaussian::zero(); NGENS];
                v[p] = Gaussian::one();
                v[q] = u.clone();
                cands.push(v);
            }
        }
    }
    let n = cands.len();
    // normal forms of products u·v modulo the relations
    let nf = |u: &[Gaussian], v: &[Gaussian]| -> SparseVec<Gaussian> {
        let mut row = vec![Gaussian::zero(); NGENS * NGENS];
        for k in 0..NGENS {
            for j in 0..NGENS {
                row[k * NGENS + j] = u[k].clone() * &v[j];
            }
        }
        ech.reduce(sparse_from_dense(&row))
    };
    let prod: Vec<Vec<SparseVec<Gaussian>>> = cands.iter().map(|u| cands.iter().map(|v| nf(u, v)).collect()).collect();
    let lin = |terms: &[(&SparseVec<Gaussian>, Gaussian)]| -> bool {
        let mut acc: SparseVec<Gaussian> = Default::default();
        for (v, c) in terms {
            linalg::axpy(&mut acc, c, v);
        }
        acc.is_empty()
    };
    let one = Gaussian::one();
    let ia = i.clone() * alpha;
    let relations = |yp: usize, ym: usize, k: usize, kp: usize| -> [bool; 6] {
        [
            lin(&[(&prod[k][yp], one.clone()), (&prod[yp][k], i.clone())]),
            lin(&[(&prod[k][ym], one.clone()), (&prod[ym][k], -i.clone())]),
            lin(&[(&prod[kp][yp], one.clone()), (&prod[yp][kp], -i.clone())]),
            lin(&[(&prod[kp][ym], one.clone()), (&prod[ym][kp], i.clone())]),
            lin(&[
                (&prod[yp][ym], one.clone()),
                (&prod[ym][yp], -one.clone()),
                (&prod[kp][kp], -i.clone()),
                (&prod[k][k], i.clone()),
            ]),
            lin(&[
                (&prod[k][kp], one.clone()),
                (&prod[kp][k], -one.clone()),
                (&prod[yp][yp], -ia.clone()),
                (&prod[ym][ym], ia.clone()),
            ]),
        ]
    };
    let is_basis = |ids: [usize; 4]| -> bool {
        let m: Vec<Vec<Gaussian>> = ids.iter().map(|&t| cands[t].clone()).collect();
        !linalg::det(&m).is_zero()
    };
    let render = |t: usize| FreeElement::from_terms(
        cands[t].iter().enumerate().map(|(g, c)| (crate::freealg::Word::new(&[g as u8]), c.clone())),
    )
    .to_string();

    let mut solutions = Vec::new();
    for k in 0..n {
        for yp in 0..n {
            if !lin(&[(&prod[k][yp], one.clone()), (&prod[yp][k], i.clone())]) {
                continue;
            }
            for ym in 0..n {
                if !lin(&[(&prod[k][ym], one.clone()), (&prod[ym][k], -i.clone())]) {
                    continue;
                }
                for kp in 0..n {
                    if relations(yp, ym, k, kp).iter().all(|&b| b) && is_basis([yp, ym, k, kp]) {
                        solutions.push(GeneratorAssignment {
                            y_plus: render(yp),
                            y_minus: render(ym),
                            k: render(k),
                            k_prime: render(kp),
                        });
                    }
                }
            }
        }
    }
    // x0+x1 and x0-x1 are candidates 0 and 1
    Ok(GeneratorSearchReport {
        alpha: alpha.to_string(),
        candidates_per_generator: n,
        literal_is_basis: is_basis([0, 1, 0, 1]),
        literal_relations_hold: relations(0, 1, 0, 1),
        solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn omega1_formula() {
        let (_, o1) = sklyanin_central_pair(&g(2), &g(-3), &Gaussian::from_ratio(-1, 5)).unwrap();
        assert_eq!(o1.render(), "x0*x0 + 3/5*x1*x1 + 1/5*x2*x2 - 3*x3*x3");
    }

    #[test]
    fn pair_rejects_generic_parameters() {
        assert!(matches!(sklyanin_central_pair(&g(2), &g(3), &g(5)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn z1_sample_coefficients() {
        let z = chl_z1(&g(1), &g(2), &g(-4), &g(2)).unwrap();
        assert_eq!(z.z_coefficients, [g(-4), g(6), g(2), g(-12)]);
        assert!(z.forms_agree());
    }

    #[test]
    fn psi1_sends_omega0_to_minus_omega1() {
        assert_eq!(psi1_omega_ratio().unwrap(), Some(-RationalFunction::one()));
    }

    #[test]
    fn z1_identity_holds() {
        assert!(z1_commutator_identity().holds);
    }
}
