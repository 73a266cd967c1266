//! Graded automorphisms: the Heisenberg generators ψ1, ψ2, ψ3 of the Sklyanin
//! algebras and their contragredient action on points, the sign automorphisms
//! γ1, γ2, γ3, Sklyanin's criterion for permutation-type maps, orbits of the
//! 20 special points, and the order-4 automorphism ψ of R(a,b,c,d).
//!
//! Matrices use the column convention of [`FreeElement::apply_linear`]:
//! column `j` holds the image of `x_j`. Point coordinates transform as
//! `ξ -> m ξ` with the contragredient matrix `(m^-1)^T`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{FreeElement, NGENS};
use crate::geometry::{gamma_matrix, point_table, PointTable, ProjectivePoint, Stratum};
use crate::linalg;
use crate::presentations::{chl_z_relations, sklyanin_relations, RelationSpace, CYCLIC};
use crate::scalars::{adjoin_root, ExtensionElement, Field, Gaussian, GaussianAlgebra, Scalar, Tower};

#[derive(Clone, Debug)]
pub struct LinearAutomorphism<F: Field> {
    matrix: Vec<Vec<F>>,
    label: String,
}

impl<F: Field> LinearAutomorphism<F> {
    pub fn new(matrix: Vec<Vec<F>>, label: &str) -> Result<Self> {
        if matrix.len() != NGENS || matrix.iter().any(|r| r.len() != NGENS) {
            return Err(Error::InvalidInput(format!("{label}: expected a 4x4 matrix")));
        }
        if linalg::det(&matrix).is_zero() {
            return Err(Error::SingularMatrix(label.to_string()));
        }
        Ok(LinearAutomorphism { matrix, label: label.to_string() })
    }

    /// `x_j -> coeffs[j] · x_{targets[j]}`.
    pub fn monomial(targets: [usize; NGENS], coeffs: [F; NGENS], label: &str) -> Result<Self> {
        let mut m = vec![vec![F::zero(); NGENS]; NGENS];
        for (j, c) in coeffs.into_iter().enumerate() {
            m[targets[j]][j] = c;
        }
        Self::new(m, label)
    }

    pub fn identity() -> Self {
        LinearAutomorphism { matrix: linalg::identity(NGENS), label: "id".into() }
    }

    pub fn matrix(&self) -> &[Vec<F>] {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        LinearAutomorphism {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            label: format!("{}*{}", self.label, other.label),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = linalg::inverse(&self.matrix)?.ok_or_else(|| Error::SingularMatrix(self.label.clone()))?;
        Ok(LinearAutomorphism { matrix: inv, label: format!("{}^-1", self.label) })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = LinearAutomorphism { matrix: linalg::mat_mul(&acc.matrix, &self.matrix), label: String::new() };
        }
        acc.with_label(&format!("{}^{n}", self.label))
    }

    pub fn scaled(&self, c: &F) -> Self {
        LinearAutomorphism {
            matrix: self.matrix.iter().map(|r| r.iter().map(|x| x.clone() * c).collect()).collect(),
            label: format!("{c}*{}", self.label),
        }
    }

    pub fn apply(&self, f: &FreeElement<F>) -> FreeElement<F> {
        f.apply_linear(&self.matrix)
    }

    /// Image of a relation row under `φ⊗φ`.
    pub fn apply_row(&self, row: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); NGENS * NGENS];
        for (idx, r) in row.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let (k, j) = (idx / NGENS, idx % NGENS);
            for p in 0..NGENS {
                if self.matrix[p][k].is_zero() {
                    continue;
                }
                for q in 0..NGENS {
                    let t = self.matrix[p][k].clone() * &self.matrix[q][j] * r;
                    out[p * NGENS + q] = out[p * NGENS + q].clone() + &t;
                }
            }
        }
        out
    }

    /// `Some(c)` when `self = c · other`.
    pub fn ratio_to(&self, other: &Self) -> Option<F> {
        let mut ratio: Option<F> = None;
        for (r, s) in self.matrix.iter().zip(&other.matrix) {
            for (x, y) in r.iter().zip(s) {
                match (x.is_zero(), y.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let q = x.div(y).ok()?;
                        match &ratio {
                            None => ratio = Some(q),
                            Some(c) if *c == q => {}
                            Some(_) => return None,
                        }
                    }
                    _ => return None,
                }
            }
        }
        ratio
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity::<F>(NGENS)
    }

    /// The induced action `(m^-1)^T` on coordinates of points of P(V*).
    pub fn contragredient(&self) -> Result<Vec<Vec<F>>> {
        Ok(linalg::transpose(self.inverse()?.matrix()))
    }
}

/// Whether `φ` maps the relation space onto itself.
pub fn preserves_relations<F: Field>(phi: &LinearAutomorphism<F>, rel: &RelationSpace<F>) -> Result<bool> {
    let imgs: Vec<Vec<F>> = rel.rows().iter().map(|r| phi.apply_row(r)).collect();
    rel.same_span(&imgs)
}

/// `ψ_i` for `i` in 1..=3, acting on A(a², b², c²): with `(i,j,k)` cyclic,
/// `x0 -> a_j a_k x_i`, `x_i -> -i x0`, `x_j -> -i a_j x_k`, `x_k -> -a_k x_j`.
pub fn psi<F: Field + GaussianAlgebra>(i: usize, roots: &[F; 3]) -> Result<LinearAutomorphism<F>> {
    let (i, j, k) = cyclic_triple(i)?;
    let (aj, ak) = (&roots[j - 1], &roots[k - 1]);
    let im = F::imag_unit();
    let mut targets = [0; NGENS];
    let mut coeffs: [F; NGENS] = std::array::from_fn(|_| F::zero());
    targets[0] = i;
    coeffs[0] = aj.clone() * ak;
    targets[i] = 0;
    coeffs[i] = -im.clone();
    targets[j] = k;
    coeffs[j] = -(im * aj);
    targets[k] = j;
    coeffs[k] = -ak.clone();
    LinearAutomorphism::monomial(targets, coeffs, &format!("psi{i}"))
}

fn cyclic_triple(i: usize) -> Result<(usize, usize, usize)> {
    CYCLIC
        .iter()
        .copied()
        .find(|t| t.0 == i)
        .ok_or_else(|| Error::InvalidInput(format!("index {i} is not in 1..=3")))
}

/// The contragredient table exactly as printed: row `j` of the result holds
/// the new `ξ_j` as a multiple of one old coordinate.
pub fn contragredient_table_literal<F: Field + GaussianAlgebra>(i: usize, roots: &[F; 3]) -> Result<Vec<Vec<F>>> {
    let [a, b, c] = roots.clone();
    let im = F::imag_unit();
    let inv = |x: &F| x.inv();
    let mut m = vec![vec![F::zero(); NGENS]; NGENS];
    let entries: Vec<(usize, usize, F)> = match i {
        1 => vec![(0, 1, im.clone()), (1, 0, inv(&(b.clone() * &c))?), (2, 3, -inv(&c)?), (3, 2, im * &inv(&b)?)],
        2 => vec![(0, 2, im.clone()), (1, 3, im * &inv(&c)?), (2, 0, inv(&(a.clone() * &c))?), (3, 1, -inv(&a)?)],
        3 => vec![
            (0, 3, im.clone()),
            (1, 2, -(im.clone() * &inv(&b)?)),
            (2, 1, im * &inv(&a)?),
            (3, 0, inv(&(a * &b))?),
        ],
        _ => return Err(Error::InvalidInput(format!("index {i} is not in 1..=3"))),
    };
    for (r, col, v) in entries {
        m[r][col] = v;
    }
    Ok(m)
}

/// `γ_i` (sign changes on the two generators other than `x0, x_i`).
pub fn gamma<F: Field>(i: usize) -> LinearAutomorphism<F> {
    LinearAutomorphism { matrix: gamma_matrix(i), label: format!("gamma{i}") }
}

/// Map `x0 -> λ0 x_i, x_i -> λ_i x0, x_j -> λ_j x_k, x_k -> λ_k x_j`.
/// `lambdas` is `[λ0, λ_i, λ_j, λ_k]`.
pub fn criterion_map<F: Field>(lambdas: &[F; 4], i: usize) -> Result<LinearAutomorphism<F>> {
    let (i, j, k) = cyclic_triple(i)?;
    let mut targets = [0; NGENS];
    let mut coeffs: [F; NGENS] = std::array::from_fn(|_| F::zero());
    for (slot, (src, dst)) in [(0, i), (i, 0), (j, k), (k, j)].into_iter().enumerate() {
        targets[src] = dst;
        coeffs[src] = lambdas[slot].clone();
    }
    LinearAutomorphism::monomial(targets, coeffs, &format!("lambda-map{i}"))
}

/// Sklyanin's three ratio conditions for [`criterion_map`] on A(α1,α2,α3).
pub fn sklyanin_criterion<F: Field>(lambdas: &[F; 4], alphas: &[F; 3], i: usize) -> Result<bool> {
    if lambdas.iter().any(|l| l.is_zero()) {
        return Err(Error::InvalidInput("every λ must be nonzero".into()));
    }
    let (_, j, k) = cyclic_triple(i)?;
    let [l0, li, lj, lk] = lambdas.clone();
    let r1 = (l0.clone() * &li).div(&(lj.clone() * &lk))?;
    let r2 = (l0.clone() * &lj).div(&(lk.clone() * &li))?;
    let r3 = (l0 * &lk).div(&(li * &lj))?;
    Ok(r1 == -F::one() && r2 == -alphas[j - 1].clone() && r3 == alphas[k - 1])
}

#[derive(Clone, Debug, Serialize)]
pub struct HeisenbergReport {
    /// `ψ_iψ_j = i·ψ_jψ_i` for `(i,j)` = (1,2), (2,3), (3,1).
    pub commutators: [bool; 3],
    /// `ψ_i² = -i a_j a_k γ_i`.
    pub squares: [bool; 3],
    pub psi_preserve_relations: [bool; 3],
    pub gamma_preserve_relations: [bool; 3],
    /// `γ1γ2 = γ3`.
    pub gamma_product: bool,
    pub gamma_group_order: usize,
    /// `ε_i² = γ_i` and `ε_i⁴ = id` with `ε_i = ν_i⁻¹ψ_i`.
    pub epsilon_squares: [bool; 3],
    pub epsilon_fourth_powers: [bool; 3],
    /// The square roots used: `ν_i² = -i a_j a_k`.
    pub nu: [String; 3],
}

impl HeisenbergReport {
    pub fn all_pass(&self) -> bool {
        self.commutators
            .iter()
            .chain(&self.squares)
            .chain(&self.psi_preserve_relations)
            .chain(&self.gamma_preserve_relations)
            .chain(&self.epsilon_squares)
            .chain(&self.epsilon_fourth_powers)
            .all(|&b| b)
            && self.gamma_product
            && self.gamma_group_order == 4
    }
}

pub fn heisenberg_checks(roots: &[Gaussian; 3]) -> Result<HeisenbergReport> {
    if roots.iter().any(|r| r.is_zero()) {
        return Err(Error::PreconditionViolated("abc = 0".into()));
    }
    let rel = sklyanin_relations(&sq(&roots[0]), &sq(&roots[1]), &sq(&roots[2]));
    let psis = [psi(1, roots)?, psi(2, roots)?, psi(3, roots)?];
    let gammas: [LinearAutomorphism<Gaussian>; 3] = [gamma(1), gamma(2), gamma(3)];
    let i = Gaussian::i();

    let commutators = [(0, 1), (1, 2), (2, 0)]
        .map(|(p, q)| psis[p].compose(&psis[q]).ratio_to(&psis[q].compose(&psis[p])) == Some(i.clone()));
    let squares: [bool; 3] = std::array::from_fn(|t| {
        let (_, j, k) = CYCLIC[t];
        let c = -(i.clone() * &roots[j - 1] * &roots[k - 1]);
        psis[t].pow(2).ratio_to(&gammas[t]) == Some(c)
    });
    let psi_preserve_relations = try_map3(|t| preserves_relations(&psis[t], &rel))?;
    let gamma_preserve_relations = try_map3(|t| preserves_relations(&gammas[t], &rel))?;
    let gamma_product = gammas[0].compose(&gammas[1]).matrix() == gammas[2].matrix();
    let gamma_group_order = group_closure(&gammas.iter().map(|g| g.matrix().to_vec()).collect::<Vec<_>>(), false)?.len();

    // ε_i = ν_i⁻¹ψ_i over Q(i)(ν1, ν2, ν3)
    let mut tower: Option<Arc<Tower<Gaussian>>> = None;
    let mut nus = Vec::new();
    for (t, &(_, j, k)) in CYCLIC.iter().enumerate() {
        let radicand = -(i.clone() * &roots[j - 1] * &roots[k - 1]);
        let name = format!("nu{}", t + 1);
        let tw = adjoin_root(tower.as_ref(), &name, 2, radicand)?;
        nus.push(ExtensionElement::generator_named(&tw, &name));
        tower = Some(tw);
    }
    let lift = |m: &LinearAutomorphism<Gaussian>| -> LinearAutomorphism<ExtensionElement<Gaussian>> {
        LinearAutomorphism {
            matrix: m.matrix().iter().map(|r| r.iter().map(|x| ExtensionElement::constant(x.clone())).collect()).collect(),
            label: m.label().to_string(),
        }
    };
    let mut epsilon_squares = [false; 3];
    let mut epsilon_fourth_powers = [false; 3];
    for t in 0..3 {
        let eps = lift(&psis[t]).scaled(&nus[t].inv()?);
        epsilon_squares[t] = eps.pow(2).matrix() == lift(&gammas[t]).matrix();
        epsilon_fourth_powers[t] = eps.pow(4).is_identity();
    }
    let nu = std::array::from_fn(|t| {
        let (_, j, k) = CYCLIC[t];
        format!("sqrt({})", -(i.clone() * &roots[j - 1] * &roots[k - 1]))
    });
    Ok(HeisenbergReport {
        commutators,
        squares,
        psi_preserve_relations,
        gamma_preserve_relations,
        gamma_product,
        gamma_group_order,
        epsilon_squares,
        epsilon_fourth_powers,
        nu,
    })
}

fn sq(x: &Gaussian) -> Gaussian {
    x.clone() * x
}

fn try_map3(f: impl Fn(usize) -> Result<bool>) -> Result<[bool; 3]> {
    Ok([f(0)?, f(1)?, f(2)?])
}

fn normalize_matrix(m: &[Vec<Gaussian>]) -> Result<Vec<Gaussian>> {
    let flat: Vec<Gaussian> = m.iter().flatten().cloned().collect();
    crate::presentations::normalize_projective(&flat)
}

/// Closure of the group generated by `gens`, as matrices (or as projective
/// classes when `projective` is set). Breadth first, in generation order.
pub fn group_closure(gens: &[Vec<Vec<Gaussian>>], projective: bool) -> Result<Vec<Vec<Vec<Gaussian>>>> {
    const LIMIT: usize = 4096;
    let key = |m: &Vec<Vec<Gaussian>>| -> Result<Vec<Gaussian>> {
        if projective {
            normalize_matrix(m)
        } else {
            Ok(m.iter().flatten().cloned().collect())
        }
    };
    let id: Vec<Vec<Gaussian>> = linalg::identity(NGENS);
    let mut seen = HashSet::new();
    seen.insert(key(&id)?);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let n = linalg::mat_mul(g, &m);
            if seen.insert(key(&n)?) {
                if out.len() >= LIMIT {
                    return Err(Error::InvalidInput(format!("group closure exceeds {LIMIT} elements")));
                }
                out.push(n.clone());
                queue.push_back(n);
            }
        }
    }
    Ok(out)
}

/// Orbits of `points` under the group generated by `gens` acting on coordinates.
/// Orbits are listed in order of their first input point; each orbit is in BFS order.
pub fn orbits(points: &[ProjectivePoint], gens: &[Vec<Vec<Gaussian>>]) -> Result<Vec<Vec<ProjectivePoint>>> {
    const LIMIT: usize = 4096;
    let mut assigned: HashSet<ProjectivePoint> = HashSet::new();
    let mut out = Vec::new();
    for p in points {
        if assigned.contains(p) {
            continue;
        }
        let mut orbit = vec![p.clone()];
        assigned.insert(p.clone());
        let mut queue = VecDeque::from([p.clone()]);
        while let Some(q) = queue.pop_front() {
            for g in gens {
                let r = q.transform(g)?;
                if assigned.insert(r.clone()) {
                    if orbit.len() >= LIMIT {
                        return Err(Error::InvalidInput(format!("orbit exceeds {LIMIT} points")));
                    }
                    orbit.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
        out.push(orbit);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PointSymmetryReport {
    /// Printed contragredient rows agree with `(ψ_i^-1)^T`, per `i`.
    pub table_matches_contragredient: [bool; 3],
    /// `ψ_i` permutes the 20 points, per `i` (using `(ψ_i^-1)^T`).
    pub psi_preserve_points: [bool; 3],
    /// `ψ_i(abc, a, b, c)` equals the displayed image, per `i`.
    pub displayed_images: [bool; 3],
    /// Orbit sizes of the 16 points off P_inf under ψ1, ψ2, ψ3.
    pub psi_orbit_sizes: Vec<usize>,
    /// Orbit sizes of P_inf under the γ's.
    pub gamma_orbit_sizes_infinity: Vec<usize>,
    /// Orbit sizes of P_1 under the γ's.
    pub gamma_orbit_sizes_p1: Vec<usize>,
    /// Size of the image of ⟨ψ1,ψ2,ψ3⟩ in PGL(V*).
    pub projective_group_order: usize,
    /// Number of distinct permutations of the 16 points induced by that group.
    pub permutation_group_order: usize,
    /// No nonidentity γ fixes a point of the 16.
    pub gammas_fixed_point_free: bool,
}

impl PointSymmetryReport {
    pub fn all_pass(&self) -> bool {
        self.psi_preserve_points.iter().all(|&b| b)
            && self.displayed_images.iter().all(|&b| b)
            && self.psi_orbit_sizes == [16]
            && self.gamma_orbit_sizes_infinity == [1, 1, 1, 1]
            && self.gamma_orbit_sizes_p1 == [4]
            && self.projective_group_order == 16
            && self.permutation_group_order == 16
            && self.gammas_fixed_point_free
    }
}

/// The point action of the ψ's and γ's on the 20-point table at roots `(a, b, c)`.
pub fn point_symmetries(roots: &[Gaussian; 3]) -> Result<PointSymmetryReport> {
    let table = point_table(&roots[0], &roots[1], &roots[2])?;
    let psis = [psi(1, roots)?, psi(2, roots)?, psi(3, roots)?];
    let contra: Vec<Vec<Vec<Gaussian>>> = psis.iter().map(|p| p.contragredient()).collect::<Result<_>>()?;
    let table_matches_contragredient = try_map3(|t| {
        let lit = contragredient_table_literal(t + 1, roots)?;
        Ok(lit == contra[t])
    })?;
    let all: Vec<ProjectivePoint> = table.points().map(|(_, p)| p.clone()).collect();
    let psi_preserve_points = try_map3(|t| maps_into(&table, &all, &contra[t]))?;

    let [a, b, c] = roots.clone();
    let abc = a.clone() * &b * &c;
    let base = ProjectivePoint::new(&[abc, a.clone(), b.clone(), c.clone()])?;
    let i = Gaussian::i();
    let o = Gaussian::one();
    let expected = [
        vec![a.clone(), -(i.clone() * &a), i.clone(), o.clone()],
        vec![b.clone(), o.clone(), -(i.clone() * &b), i.clone()],
        vec![c.clone(), i.clone(), o, -(i * &c)],
    ];
    let displayed_images = try_map3(|t| Ok(base.transform(&contra[t])? == ProjectivePoint::new(&expected[t])?))?;

    let finite: Vec<ProjectivePoint> =
        table.points().filter(|(s, _)| *s != Stratum::Infinity).map(|(_, p)| p.clone()).collect();
    let psi_orbit_sizes = orbits(&finite, &contra)?.iter().map(Vec::len).collect();
    let gms: Vec<Vec<Vec<Gaussian>>> = (1..=3).map(gamma_matrix).collect();
    let gamma_orbit_sizes_infinity = orbits(table.column(Stratum::Infinity), &gms)?.iter().map(Vec::len).collect();
    let gamma_orbit_sizes_p1 = orbits(table.column(Stratum::One), &gms)?.iter().map(Vec::len).collect();

    let group = group_closure(&contra, true)?;
    let mut perms = HashSet::new();
    for g in &group {
        let perm: Vec<ProjectivePoint> = finite.iter().map(|p| p.transform(g)).collect::<Result<_>>()?;
        perms.insert(perm);
    }
    let mut gammas_fixed_point_free = true;
    for g in &gms {
        for p in &finite {
            if p.transform(g)? == *p {
                gammas_fixed_point_free = false;
            }
        }
    }
    Ok(PointSymmetryReport {
        table_matches_contragredient,
        psi_preserve_points,
        displayed_images,
        psi_orbit_sizes,
        gamma_orbit_sizes_infinity,
        gamma_orbit_sizes_p1,
        projective_group_order: group.len(),
        permutation_group_order: perms.len(),
        gammas_fixed_point_free,
    })
}

fn maps_into(table: &PointTable, pts: &[ProjectivePoint], m: &[Vec<Gaussian>]) -> Result<bool> {
    for p in pts {
        if table.stratum_of(&p.transform(m)?).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How the fourth root `q3` is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Q3Convention {
    /// `q3⁴ = ρ3` as printed.
    AsPrinted,
    /// `q3⁴ = -ρ3`, which makes the third ratio condition hold.
    SignCorrected,
}

/// `(ρ2, ρ3)`; the error names the vanishing denominator.
pub fn chl_rho<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<(F, F)> {
    let s = |sa: i64, sb: i64, sc: i64, sd: i64| {
        F::from_i64(sa) * a + &(F::from_i64(sb) * b) + &(F::from_i64(sc) * c) + &(F::from_i64(sd) * d)
    };
    let (d1, d2) = (s(-1, 1, 1, 1), s(1, 1, 1, -1));
    for (name, v) in [("-a+b+c+d", &d1), ("a+b+c-d", &d2), ("bc", &(b.clone() * c))] {
        if v.is_zero() {
            return Err(Error::PreconditionViolated(format!("denominator {name} vanishes")));
        }
    }
    let rho2 = (s(1, 1, -1, 1) * &s(-1, 1, -1, -1)).div(&(d1 * &d2))?;
    let rho3 = (d.clone() * a).div(&(b.clone() * c))?;
    Ok((rho2, rho3))
}

/// The automorphism `z0 -> τ0 z1, z1 -> τ1 z0, z2 -> τ2 z3, z3 -> τ3 z2` over `F(q2, q3)`.
#[derive(Clone)]
pub struct ChlPsi<F: Field> {
    pub tower: Arc<Tower<F>>,
    pub map: LinearAutomorphism<ExtensionElement<F>>,
    pub rho2: F,
    pub rho3: F,
    pub taus: [ExtensionElement<F>; 4],
    pub convention: Q3Convention,
}

pub fn chl_psi<F: Field>(a: &F, b: &F, c: &F, d: &F, convention: Q3Convention) -> Result<ChlPsi<F>> {
    let (rho2, rho3) = chl_rho(a, b, c, d)?;
    if rho2.is_zero() || rho3.is_zero() {
        return Err(Error::PreconditionViolated("ρ2ρ3 = 0, so ψ is not invertible".into()));
    }
    let r3 = match convention {
        Q3Convention::AsPrinted => rho3.clone(),
        Q3Convention::SignCorrected => -rho3.clone(),
    };
    let t2 = adjoin_root(None, "q2", 4, rho2.clone())?;
    let tower = adjoin_root(Some(&t2), "q3", 4, r3)?;
    let q2 = ExtensionElement::generator_named(&tower, "q2");
    let q3 = ExtensionElement::generator_named(&tower, "q3");
    let taus = [
        -(q2.clone() * &q3),
        (q2.clone() * &q3).inv()?,
        q2.clone() * &q3.inv()?,
        q3.clone() * &q2.inv()?,
    ];
    let map = LinearAutomorphism::monomial([1, 0, 3, 2], taus.clone(), "psi")?;
    Ok(ChlPsi { tower, map, rho2, rho3, taus, convention })
}

impl<F: Field> ChlPsi<F> {
    pub fn lift(&self, f: &FreeElement<F>) -> FreeElement<ExtensionElement<F>> {
        f.map_coeffs(|c| ExtensionElement::constant(c.clone()))
    }

    pub fn apply(&self, f: &FreeElement<F>) -> FreeElement<ExtensionElement<F>> {
        self.map.apply(&self.lift(f))
    }

    /// Splits an element over `F(q2, q3)` into its components on the monomials `q2^e2 q3^e3`.
    pub fn components(&self, f: &FreeElement<ExtensionElement<F>>) -> Vec<(Vec<usize>, FreeElement<F>)> {
        let exps = ExtensionElement::basis_exponents(&self.tower);
        let mut parts: Vec<FreeElement<F>> = vec![FreeElement::zero(); exps.len()];
        for (w, c) in f.terms() {
            for (t, x) in c.components(&self.tower).into_iter().enumerate() {
                parts[t].add_term(w.clone(), x);
            }
        }
        exps.into_iter().zip(parts).filter(|(_, p)| !p.is_zero()).collect()
    }

    /// ψ maps the span of `rel` (defined over F) into itself: every
    /// q-monomial component of every image lies in the F-span.
    pub fn preserves(&self, rel: &RelationSpace<F>) -> Result<bool> {
        for e in rel.elements() {
            for (_, part) in self.components(&self.apply(&e)) {
                if !rel.contains_element(&part)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn fourth_power_is_identity(&self) -> bool {
        self.map.pow(4).is_identity()
    }

    /// `ψ²(z0) = -z0`.
    pub fn square_negates_z0(&self) -> bool {
        let z0 = FreeElement::<ExtensionElement<F>>::gen(0);
        self.map.pow(2).apply(&z0) == z0.neg()
    }

    /// The three ratio conditions on the τ's.
    pub fn tau_ratios(&self) -> Result<[ExtensionElement<F>; 3]> {
        let [t0, t1, t2, t3] = self.taus.clone();
        Ok([
            (t0.clone() * &t1).div(&(t2.clone() * &t3))?,
            (t0.clone() * &t2).div(&(t3.clone() * &t1))?,
            (t0 * &t3).div(&(t1 * &t2))?,
        ])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChlPsiReport {
    pub convention: Q3Convention,
    pub rho2: String,
    pub rho3: String,
    pub preserves_relations: bool,
    pub fourth_power_identity: bool,
    pub square_negates_z0: bool,
}

pub fn chl_psi_report<F: Field>(a: &F, b: &F, c: &F, d: &F, convention: Q3Convention) -> Result<ChlPsiReport> {
    let psi = chl_psi(a, b, c, d, convention)?;
    let rel = chl_z_relations(a, b, c, d)?;
    Ok(ChlPsiReport {
        convention,
        rho2: psi.rho2.to_string(),
        rho3: psi.rho3.to_string(),
        preserves_relations: psi.preserves(&rel)?,
        fourth_power_identity: psi.fourth_power_is_identity(),
        square_negates_z0: psi.square_negates_z0(),
    })
}

/// Permutation of `points` induced by `m`, as indices; `None` if some image leaves the set.
pub fn induced_permutation(points: &[ProjectivePoint], m: &[Vec<Gaussian>]) -> Result<Option<Vec<usize>>> {
    let index: HashMap<&ProjectivePoint, usize> = points.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        match index.get(&p.transform(m)?) {
            Some(&k) => out.push(k),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> Gaussian {
        Gaussian::from_int(n)
    }

    #[test]
    fn psi_one_preserves_relations() {
        let roots = [g(2), g(3), g(5)];
        let rel = sklyanin_relations(&g(4), &g(9), &g(25));
        assert!(preserves_relations(&psi(1, &roots).unwrap(), &rel).unwrap());
        let swap = LinearAutomorphism::monomial([1, 0, 2, 3], [g(1), g(1), g(1), g(1)], "swap").unwrap();
        assert!(!preserves_relations(&swap, &sklyanin_relations(&g(2), &g(3), &g(5))).unwrap());
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = vec![vec![g(0); 4]; 4];
        assert!(matches!(LinearAutomorphism::new(m, "zero"), Err(Error::SingularMatrix(_))));
    }

    #[test]
    fn criterion_matches_table_column() {
        let (a, b, c) = (g(2), g(3), g(5));
        let i = Gaussian::i();
        let lambdas = [b.clone() * &c, -i.clone(), -(i * &b), -c.clone()];
        let alphas = [g(4), g(9), g(25)];
        assert!(sklyanin_criterion(&lambdas, &alphas, 1).unwrap());
        assert!(!sklyanin_criterion(&[g(1), g(1), g(1), g(1)], &alphas, 1).unwrap());
        let _ = a;
    }

    #[test]
    fn rho_at_sample_point() {
        let (r2, r3) = chl_rho(&g(1), &g(2), &g(-4), &g(2)).unwrap();
        assert_eq!(r2, g(9));
        assert_eq!(r3, Gaussian::from_ratio(-1, 4));
        let err = chl_rho(&g(1), &g(0), &g(1), &g(1)).unwrap_err();
        assert!(err.to_string().contains("bc"));
    }
}
