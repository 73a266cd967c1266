//! Command-line front end. Every subcommand produces a report with a list of
//! named checks; the exit code is 0 when all pass, 1 when one fails and 2 on
//! invalid input.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::center::{
    chl_identity_checks, chl_z1, chl_z1_symbolic, chl_z2, chl_z2_symbolic, components_central,
    displayed_square_families, proof_identity_suite, sklyanin_central_pair, square_candidates, z1_relabelings,
    CentralCandidate,
};
use crate::error::{Error, Result};
use crate::geometry::{
    gamma_graph, minors_in_q_q1, point_table, quadric_det, verify_gamma, verify_minor_factorizations, ParamPolys,
};
use crate::graded::{hilbert_function, Backend, DegreeCap};
use crate::presentations::{
    angle_invariant, chl_to_sklyanin_params, chl_z_relations, classify_chl, isomorphism_substitutions,
    normalize_projective, permutations4, sklyanin_relations, ChlClass,
};
use crate::scalars::{parse_scalar, var_names, Field, Gaussian, RationalFunction, Scalar};
use crate::selftest;
use crate::symmetry::{chl_psi_report, heisenberg_checks, point_symmetries, Q3Convention};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(name = "quadralab", version, about = "Exact checks for four-dimensional Sklyanin algebras and the CHL family")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Ignore the degree cap (default 7, or QUADRALAB_DEGREE_CAP).
    #[arg(long, global = true)]
    pub force: bool,
    /// Seed for the randomized checks of `selftest`.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SklyaninArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: String,
}

#[derive(Args, Debug, Clone)]
pub struct OptionalSklyaninArgs {
    #[arg(long, allow_hyphen_values = true, requires_all = ["beta", "gamma"])]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha", "gamma"])]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha", "beta"])]
    pub gamma: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Hilbert function of A(α,β,γ) up to a degree.
    Hilbert {
        #[command(flatten)]
        params: SklyaninArgs,
        #[arg(long)]
        degree: usize,
        /// Rank computations modulo this prime (≡ 1 mod 4) instead of over Q(i).
        #[arg(long)]
        mod_p: Option<u64>,
    },
    /// Degree-two central elements of A(α,β,γ) or R(a,b,c,d).
    Center {
        #[command(flatten)]
        params: OptionalSklyaninArgs,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["alpha", "beta", "gamma"])]
        abcd: Option<String>,
        /// Certify Z1 and Z2 over Q(i)(a,b,c,d) instead of at a point.
        #[arg(long)]
        symbolic: bool,
    },
    /// The 20 points of the point scheme for square roots (a,b,c).
    Points {
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
    },
    /// Checks the 20-point graph against the relations of A(α,β,γ).
    VerifyGamma {
        #[command(flatten)]
        params: SklyaninArgs,
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
    },
    /// The 15 maximal minors and their stated factorizations.
    Minors {
        #[command(flatten)]
        params: OptionalSklyaninArgs,
    },
    /// Heisenberg automorphisms for roots (a,b,c), or the CHL ψ for (a,b,c,d).
    Autos {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "abcd")]
        abc: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        abcd: Option<String>,
        /// CHL ψ over Q(i)(a,b,c,d).
        #[arg(long)]
        symbolic: bool,
    },
    /// The CHL family R(a,b,c,d).
    Chl {
        #[command(subcommand)]
        action: ChlCommand,
    },
    /// Free-algebra and polynomial identities behind the central elements.
    Identities,
    /// Angle invariants over all 24 permutations and the isomorphism substitutions.
    IsoInvariants {
        #[command(flatten)]
        params: OptionalSklyaninArgs,
    },
    /// Runs the acceptance suite.
    Selftest {
        /// Number of samples in the randomized sweep.
        #[arg(long, default_value_t = 24)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ChlCommand {
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        abcd: String,
    },
    Params {
        #[arg(long, allow_hyphen_values = true)]
        abcd: String,
    },
    Center {
        #[arg(long, allow_hyphen_values = true)]
        abcd: Option<String>,
        #[arg(long)]
        symbolic: bool,
    },
}

/// A report body: parameters echoed as literals, named checks and free-form data.
pub struct Report {
    pub command: &'static str,
    pub backend: String,
    pub params: Map<String, Value>,
    pub checks: Vec<(String, bool)>,
    pub result: Value,
}

impl Report {
    fn new(command: &'static str, backend: &str) -> Self {
        Report { command, backend: backend.to_string(), params: Map::new(), checks: Vec::new(), result: Value::Null }
    }

    fn param(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "backend": self.backend,
            "params": self.params,
            "checks": self.checks.iter().map(|(n, ok)| json!({"name": n, "pass": ok})).collect::<Vec<_>>(),
            "pass": self.pass(),
            "result": self.result,
        })
    }
}

/// Exit code and the text destined for stdout and stderr.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(config: &RunConfig) -> Outcome {
    match build_report(config) {
        Ok(report) => {
            let code = if report.pass() { EXIT_PASS } else { EXIT_CHECK_FAILED };
            let failed: Vec<&str> = report.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            let stderr = if failed.is_empty() { String::new() } else { format!("failed checks: {}\n", failed.join("; ")) };
            Outcome { code, stdout: render(&report.to_json(), config.format), stderr }
        }
        Err(e) => Outcome { code: EXIT_INVALID_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Parses arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_PASS };
        }
    };
    let out = run(&config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n",
        Format::Table => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            lines.iter().map(|(k, v)| format!("{k:width$}  {v}\n")).collect()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            a.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out))
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn scalar(text: &str) -> Result<Gaussian> {
    parse_scalar(text)
}

fn scalars<const N: usize>(name: &str, text: &str) -> Result<[Gaussian; N]> {
    let parts: Vec<Gaussian> = text.split(',').map(scalar).collect::<Result<_>>()?;
    let n = parts.len();
    parts.try_into().map_err(|_| Error::InvalidInput(format!("--{name} expects {N} comma-separated values, got {n}")))
}

fn strings(xs: &[Gaussian]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn sklyanin(p: &SklyaninArgs) -> Result<[Gaussian; 3]> {
    Ok([scalar(&p.alpha)?, scalar(&p.beta)?, scalar(&p.gamma)?])
}

fn optional_sklyanin(p: &OptionalSklyaninArgs) -> Result<Option<[Gaussian; 3]>> {
    match (&p.alpha, &p.beta, &p.gamma) {
        (Some(a), Some(b), Some(c)) => Ok(Some([scalar(a)?, scalar(b)?, scalar(c)?])),
        (None, None, None) => Ok(None),
        _ => Err(Error::InvalidInput("--alpha, --beta and --gamma go together".into())),
    }
}

fn echo_sklyanin(r: &mut Report, p: &[Gaussian; 3]) {
    r.param("alpha", p[0].to_string()).param("beta", p[1].to_string()).param("gamma", p[2].to_string());
}

fn build_report(config: &RunConfig) -> Result<Report> {
    let cap = if config.force { DegreeCap::unlimited() } else { DegreeCap::from_env() };
    match &config.command {
        Command::Hilbert { params, degree, mod_p } => hilbert_report(&sklyanin(params)?, *degree, *mod_p, cap),
        Command::Center { params, abcd, symbolic } => match (optional_sklyanin(params)?, abcd, symbolic) {
            (Some(p), None, false) => sklyanin_center_report(&p),
            (None, _, true) => chl_center_symbolic_report(),
            (None, Some(abcd), false) => chl_center_report(&scalars::<4>("abcd", abcd)?),
            _ => Err(Error::InvalidInput("give --alpha/--beta/--gamma, --abcd, or --symbolic".into())),
        },
        Command::Points { abc } => points_report(&scalars::<3>("abc", abc)?),
        Command::VerifyGamma { params, abc } => verify_gamma_report(&sklyanin(params)?, &scalars::<3>("abc", abc)?),
        Command::Minors { params } => minors_report(optional_sklyanin(params)?),
        Command::Autos { abc, abcd, symbolic } => match (abc, abcd, symbolic) {
            (Some(abc), None, false) => heisenberg_report(&scalars::<3>("abc", abc)?),
            (None, _, true) => chl_psi_symbolic_report(),
            (None, Some(abcd), false) => chl_psi_numeric_report(&scalars::<4>("abcd", abcd)?),
            _ => Err(Error::InvalidInput("give --abc, --abcd, or --symbolic".into())),
        },
        Command::Chl { action } => match action {
            ChlCommand::Classify { abcd } => chl_classify_report(&scalars::<4>("abcd", abcd)?),
            ChlCommand::Params { abcd } => chl_params_report(&scalars::<4>("abcd", abcd)?),
            ChlCommand::Center { abcd: _, symbolic: true } => chl_center_symbolic_report(),
            ChlCommand::Center { abcd: Some(abcd), symbolic: false } => chl_center_report(&scalars::<4>("abcd", abcd)?),
            ChlCommand::Center { abcd: None, symbolic: false } => {
                Err(Error::InvalidInput("chl center needs --abcd or --symbolic".into()))
            }
        },
        Command::Identities => identities_report(),
        Command::IsoInvariants { params } => match optional_sklyanin(params)? {
            Some(p) => {
                let mut r = iso_report(&p[0], &p[1], &p[2])?;
                echo_sklyanin(&mut r, &p);
                Ok(r)
            }
            None => {
                let v = RationalFunction::vars(&var_names(&["alpha", "beta", "gamma"]));
                let mut r = iso_report(&v[0], &v[1], &v[2])?;
                r.backend = "exact over Q(i)(alpha,beta,gamma)".into();
                Ok(r)
            }
        },
        Command::Selftest { samples } => selftest_report(config.seed, *samples),
    }
}

fn hilbert_report(p: &[Gaussian; 3], degree: usize, mod_p: Option<u64>, cap: DegreeCap) -> Result<Report> {
    let backend = mod_p.map_or(Backend::Exact, |p| Backend::Modular { p });
    let profile = hilbert_function(&sklyanin_relations(&p[0], &p[1], &p[2]), degree, backend, cap)?;
    let mut r = Report::new("hilbert", &backend.to_string());
    echo_sklyanin(&mut r, p);
    r.param("degree", degree);
    r.result = json!({ "dims": profile.dims, "upper_bound_only": profile.upper_bound_only });
    Ok(r)
}

fn candidate_json(c: &CentralCandidate<Gaussian>, expected: Option<bool>, r: &mut Report) -> Result<Value> {
    let cert = c.certify()?;
    if let Some(e) = expected {
        r.check(format!("{} central: {e}", c.label), cert.central == e);
    }
    Ok(json!({
        "label": c.label,
        "element": c.render(),
        "central": cert.central,
        "failing_generator": cert.failing_generator,
    }))
}

fn sklyanin_center_report(p: &[Gaussian; 3]) -> Result<Report> {
    let [al, be, ga] = p;
    let mut r = Report::new("center", "exact");
    echo_sklyanin(&mut r, p);
    let sp = al.clone() + be + ga + &(al.clone() * be * ga);
    let product_nonzero = !(al.clone() * be * ga).is_zero();
    let mut out = Vec::new();
    if sp.is_zero() {
        let (o0, o1) = sklyanin_central_pair(al, be, ga)?;
        out.push(candidate_json(&o0, Some(true), &mut r)?);
        out.push(candidate_json(&o1, Some(true), &mut r)?);
    }
    for c in square_candidates(al, be, ga) {
        let expected = (product_nonzero && !sp.is_zero()).then_some(true);
        out.push(candidate_json(&c, expected, &mut r)?);
    }
    r.result = json!({ "sum_plus_product": sp.to_string(), "candidates": out });
    Ok(r)
}

fn chl_center_report(abcd: &[Gaussian; 4]) -> Result<Report> {
    let [a, b, c, d] = abcd;
    let mut r = Report::new("center", "exact");
    r.param("abcd", strings(abcd));
    let z1 = chl_z1(a, b, c, d)?;
    r.check("Z1 forms agree", z1.forms_agree());
    let x = candidate_json(&z1.x_form, Some(true), &mut r)?;
    let z = candidate_json(&z1.z_form, Some(true), &mut r)?;
    let z2 = match (chl_z2(a, b, c, d, Q3Convention::SignCorrected), chl_z2(a, b, c, d, Q3Convention::AsPrinted)) {
        (Ok(fixed), Ok(literal)) => {
            let rel = chl_z_relations(a, b, c, d)?;
            let central = components_central(&rel, &fixed.components())?;
            let displayed = components_central(&rel, &literal.printed_components())?;
            r.check("psi(Z1)/2 central (q3^4 = -rho3)", central);
            r.check("displayed Z2 formula equals psi(Z1)/2", literal.matches_printed_formula());
            r.check("displayed Z2 formula central (q3^4 = rho3)", displayed);
            json!({
                "psi_z1_half": fixed.z2.to_string(),
                "psi_z1_half_central": central,
                "displayed_formula": literal.printed.to_string(),
                "displayed_formula_central": displayed,
            })
        }
        (Err(e), _) | (_, Err(e)) => json!({ "unavailable": e.to_string() }),
    };
    r.result = json!({ "z1_x_form": x, "z1_z_form": z, "z2": z2 });
    Ok(r)
}

fn chl_center_symbolic_report() -> Result<Report> {
    let mut r = Report::new("center", "exact over Q(i)(a,b,c,d)");
    r.param("abcd", "symbolic");
    let z1 = chl_z1_symbolic()?;
    let z2 = chl_z2_symbolic()?;
    for s in z1.iter().chain(&z2) {
        r.check(format!("{} central", s.label), s.central());
    }
    r.result = json!({ "z1": z1, "z2_psi_z1_half_q3_sign_corrected": z2 });
    Ok(r)
}

fn points_report(abc: &[Gaussian; 3]) -> Result<Report> {
    let table = point_table(&abc[0], &abc[1], &abc[2])?;
    let mut r = Report::new("points", "exact");
    r.param("abc", strings(abc));
    let mut strata = Map::new();
    for (s, p) in table.points() {
        strata
            .entry(s.label().to_string())
            .or_insert_with(|| Value::Array(vec![]))
            .as_array_mut()
            .expect("array")
            .push(json!(p.to_strings()));
    }
    let graph = gamma_graph(&table)?;
    let distinct: std::collections::HashSet<_> = graph.iter().map(|(p, _)| p.clone()).collect();
    r.check("20 distinct points", distinct.len() == 20);
    r.result = json!({
        "strata": strata,
        "theta": graph.iter().map(|(p, t)| json!([p.to_strings(), t.to_strings()])).collect::<Vec<_>>(),
    });
    Ok(r)
}

fn verify_gamma_report(p: &[Gaussian; 3], abc: &[Gaussian; 3]) -> Result<Report> {
    let report = verify_gamma(p, abc)?;
    let mut r = Report::new("verify-gamma", "exact");
    echo_sklyanin(&mut r, p);
    r.param("abc", strings(abc));
    r.check("points pairwise distinct", report.points_distinct);
    r.check("relation forms vanish on the graph", report.form_failures.is_empty());
    r.check("evaluation kernel equals R (dimension 6)", report.kernel_dim == 6 && report.kernel_equals_relations);
    r.check("minors vanish at every point", report.minor_failures.is_empty());
    r.result = serde_json::to_value(&report).expect("serializable");
    Ok(r)
}

fn minors_report(p: Option<[Gaussian; 3]>) -> Result<Report> {
    let (polys, backend) = match &p {
        Some(p) => (ParamPolys::numeric(&p[0], &p[1], &p[2]), "exact"),
        None => (ParamPolys::symbolic(), "exact over Q(i)(alpha,beta,gamma)"),
    };
    let mut r = Report::new("minors", backend);
    match &p {
        Some(p) => echo_sklyanin(&mut r, p),
        None => {
            r.param("alpha", "symbolic");
        }
    }
    let (hs, gs) = verify_minor_factorizations(&polys);
    r.check("h minors match stated factorizations", hs.iter().all(|c| c.holds));
    r.check("g minors equal h minors with x0 negated", gs.iter().all(|c| c.holds));
    let sp = polys.sigma_pi();
    r.check("quadric determinant = -(sum+product)^2", quadric_det(&polys) == -(sp.clone() * &sp));
    let mut result = json!({ "h": hs, "g": gs, "quadric_det": quadric_det(&polys).to_string() });
    if p.is_some() {
        let memb = minors_in_q_q1(&polys)?;
        result["h_in_q_q1"] = json!(memb.iter().map(|((i, j), m)| json!({"pair": [i, j], "member": m})).collect::<Vec<_>>());
    }
    r.result = result;
    Ok(r)
}

fn heisenberg_report(abc: &[Gaussian; 3]) -> Result<Report> {
    let h = heisenberg_checks(abc)?;
    let p = point_symmetries(abc)?;
    let mut r = Report::new("autos", "exact");
    r.param("abc", strings(abc));
    r.check("Heisenberg relations", h.all_pass());
    r.check("point symmetries and orbits", p.all_pass());
    r.result = json!({ "heisenberg": h, "points": p });
    Ok(r)
}

fn chl_psi_numeric_report(abcd: &[Gaussian; 4]) -> Result<Report> {
    let mut r = Report::new("autos", "exact");
    r.param("abcd", strings(abcd));
    let [a, b, c, d] = abcd;
    chl_psi_body(&mut r, a, b, c, d)?;
    Ok(r)
}

fn chl_psi_symbolic_report() -> Result<Report> {
    let mut r = Report::new("autos", "exact over Q(i)(a,b,c,d)");
    r.param("abcd", "symbolic");
    let v = RationalFunction::vars(&var_names(&["a", "b", "c", "d"]));
    chl_psi_body(&mut r, &v[0], &v[1], &v[2], &v[3])?;
    Ok(r)
}

fn chl_psi_body<F: Field>(r: &mut Report, a: &F, b: &F, c: &F, d: &F) -> Result<()> {
    let literal = chl_psi_report(a, b, c, d, Q3Convention::AsPrinted)?;
    let fixed = chl_psi_report(a, b, c, d, Q3Convention::SignCorrected)?;
    r.check("psi^4 = id", literal.fourth_power_identity && fixed.fourth_power_identity);
    r.check("psi^2(z0) = -z0", literal.square_negates_z0 && fixed.square_negates_z0);
    r.check("psi preserves the z-relations (q3^4 = rho3)", literal.preserves_relations);
    r.check("psi preserves the z-relations (q3^4 = -rho3)", fixed.preserves_relations);
    r.result = json!({ "as_printed": literal, "sign_corrected": fixed });
    Ok(())
}

fn class_json(c: &ChlClass) -> Value {
    match c {
        ChlClass::OffQuadric { ac_plus_bd } => json!({ "class": "OffQuadric", "ac_plus_bd": ac_plus_bd.to_string() }),
        ChlClass::Degenerate { vanishing } => json!({ "class": "Degenerate", "vanishing": vanishing }),
        ChlClass::GenericQuadric { alpha, beta, gamma } => json!({
            "class": "GenericQuadric",
            "alpha": alpha.to_string(),
            "beta": beta.to_string(),
            "gamma": gamma.to_string(),
        }),
        ChlClass::SklyaninLocus { line, alpha, excluded } => json!({
            "class": "SklyaninLocus",
            "line": line,
            "alpha": alpha.as_ref().map(|a| a.to_string()),
            "excluded": excluded,
        }),
    }
}

fn chl_classify_report(abcd: &[Gaussian; 4]) -> Result<Report> {
    let cls = classify_chl(abcd)?;
    let mut r = Report::new("chl classify", "exact");
    r.param("abcd", strings(abcd));
    let mut result = class_json(&cls);
    result["normalized"] = json!(strings(&normalize_projective(abcd)?));
    r.result = result;
    Ok(r)
}

fn chl_params_report(abcd: &[Gaussian; 4]) -> Result<Report> {
    let [a, b, c, d] = abcd;
    let data = chl_to_sklyanin_params(a, b, c, d)?;
    let mut r = Report::new("chl params", "exact");
    r.param("abcd", strings(abcd));
    let alphas = [&data.alpha, &data.beta, &data.gamma];
    for (t, (mu, nu)) in data.mu.iter().zip(&data.nu).enumerate() {
        let n = t + 1;
        r.check(format!("alpha{n} = mu{n}/nu{n}"), mu.div(nu)? == *alphas[t]);
    }
    r.result = json!({
        "alpha": data.alpha.to_string(),
        "beta": data.beta.to_string(),
        "gamma": data.gamma.to_string(),
        "mu": strings(&data.mu),
        "nu": strings(&data.nu),
        "sum_plus_product": data.sum_plus_product.to_string(),
    });
    Ok(r)
}

fn identities_report() -> Result<Report> {
    let mut r = Report::new("identities", "exact over Q(i)[parameters]");
    let suite = proof_identity_suite()?;
    let displayed = displayed_square_families();
    for c in suite.iter() {
        r.check(c.name.clone(), c.holds);
    }
    for c in &displayed {
        r.check(format!("{} (as displayed)", c.name), c.holds);
    }
    let relabel = z1_relabelings()?;
    for c in &relabel {
        r.check(format!("relabeling {}", c.name), c.preserves_relations && c.fixes_z1);
    }
    let chl = chl_identity_checks()?;
    r.check("CHL first identity", chl.first_identity.holds);
    r.check("CHL second identity modulo (ac+bd)", chl.second_identity_in_ideal);
    r.result = json!({
        "identities": suite,
        "displayed_square_families": displayed,
        "z1_relabelings": relabel,
        "chl": chl,
    });
    Ok(r)
}

fn iso_report<F: Field>(al: &F, be: &F, ga: &F) -> Result<Report> {
    let mut r = Report::new("iso-invariants", "exact");
    let rel = sklyanin_relations(al, be, ga);
    let mut table = Map::new();
    let mut invariants = std::collections::BTreeMap::new();
    for perm in permutations4() {
        let key = perm.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let v = match angle_invariant(&rel, perm) {
            Ok(l) => {
                invariants.insert(perm, l.clone());
                json!(l.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            }
            Err(e) => json!({ "error": e.to_string() }),
        };
        table.insert(key, v);
    }
    let expect = |perm: [usize; 4], want: [F; 3]| invariants.get(&perm) == Some(&want);
    r.check("<0,1,2,3> = (alpha, beta, gamma)", expect([0, 1, 2, 3], [al.clone(), be.clone(), ga.clone()]));
    r.check("<0,1,3,2> = (-alpha, -gamma, -beta)", expect([0, 1, 3, 2], [-al.clone(), -ga.clone(), -be.clone()]));
    let shift_ok = invariants.iter().all(|(&[p, q, s, t], l)| {
        invariants.get(&[p, s, t, q]).is_none_or(|m| *m == [l[1].clone(), l[2].clone(), l[0].clone()])
    });
    r.check("cyclic shift rule <p,r,s,q> = (l2,l3,l1)", shift_ok);
    let [cyc, sign] = isomorphism_substitutions(al, be, ga)?;
    r.check("x_i -> x_(i+1) realizes A(beta,gamma,alpha)", cyc);
    r.check("x1 -> -x1, x2 <-> x3 realizes A(-alpha,-gamma,-beta)", sign);
    r.result = json!({ "angle_invariants": table });
    Ok(r)
}

fn selftest_report(seed: u64, samples: usize) -> Result<Report> {
    let mut r = Report::new("selftest", "exact; modular p=65537 for A2");
    r.param("seed", seed).param("samples", samples);
    let mut results = selftest::run_all();
    results.push(selftest::run_criterion("R", || selftest::randomized_criterion_sweep(seed, samples)));
    for c in &results {
        r.check(c.line(), c.pass);
    }
    r.result = json!(results);
    Ok(r)
}
