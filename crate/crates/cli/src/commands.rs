//! The verbs. Each returns the rendered artifact and whether everything it
//! checked agreed.

use std::fs;
use std::path::PathBuf;

use num_traits::{ToPrimitive, Zero};
use qhopf::bundles::{growth_scan, Side};
use qhopf::calculus::Geometry;
use qhopf::checks::{self, CheckOutcome};
use qhopf::conventions::{scalar_matter_polynomials, Conventions};
use qhopf::sphere::BaseForm;
use qhopf::yang_mills::{probe_family, standard_solutions, winding_potential, Displacement, YmsmTriple};
use qhopf::{AlgebraElement, Monomial, ScalarQ};
use serde::Serialize;
use serde_json::json;

use crate::config::{Command, Format, Mode, QValue, RunConfig, Suite};
use crate::render;
use crate::report::{build_spectral_report, SpectralReport};
use crate::CliError;

/// Environment variable naming the directory for cached spectral reports.
pub const CACHE_ENV: &str = "QHOPF_CACHE_DIR";

/// Bumped whenever the cached report layout changes.
const CACHE_VERSION: u32 = 1;

pub struct Outcome {
    pub text: String,
    /// False when any verification mismatched.
    pub ok: bool,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    match cfg.command {
        Command::Spectrum => spectrum(cfg),
        Command::Table => table(cfg),
        Command::Verify(suite) => verify(cfg, suite),
        Command::YmCheck => ym_check(cfg),
        Command::Haar => haar(cfg),
        Command::Conventions => conventions(cfg),
    }
}

fn cache_path(cfg: &RunConfig) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let mode = match cfg.mode {
        Mode::Exact => "exact",
        Mode::Numeric => "numeric",
    };
    let sides = format!("{:?}", cfg.sides).to_lowercase();
    let qs: Vec<String> = cfg.q_values.iter().map(|q| q.to_string().replace('/', "_")).collect();
    let name = format!(
        "spectrum-v{CACHE_VERSION}-{mode}-n{}_{}-N{}-b{}-{sides}-q{}.json",
        cfg.n_range.lo,
        cfg.n_range.hi,
        cfg.filtration,
        cfg.buffer,
        qs.join(",")
    );
    Some(PathBuf::from(dir).join(name))
}

/// Builds the spectral report, going through the cache directory when one
/// is configured. Unreadable cache entries are recomputed.
pub fn spectral_report(cfg: &RunConfig) -> Result<SpectralReport, CliError> {
    let path = cache_path(cfg);
    if let Some(p) = &path {
        if let Ok(text) = fs::read_to_string(p) {
            if let Ok(r) = serde_json::from_str::<SpectralReport>(&text) {
                return Ok(r);
            }
        }
    }
    let report = build_spectral_report(cfg)?;
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir)?;
        }
        fs::write(p, serde_json::to_string(&report)?)?;
    }
    Ok(report)
}

fn spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let report = spectral_report(cfg)?;
    let text = match cfg.format {
        Format::Csv => render::spectrum_csv(&report)?,
        Format::Json => render::spectrum_json(&report)?,
        Format::Latex => render::spectrum_latex(&report)?,
    };
    Ok(Outcome { text, ok: report.mismatches() == 0 })
}

fn table(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let report = spectral_report(cfg)?;
    let text = match cfg.format {
        Format::Csv => render::table_csv(&report)?,
        Format::Json => render::table_json(&report)?,
        Format::Latex => render::table_latex(&report),
    };
    Ok(Outcome { text, ok: report.mismatches() == 0 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented expected failure that failed.
    Xfail,
    /// A documented expected failure that unexpectedly passed.
    Xpass,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::Xfail)
    }

    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Xfail => "xfail",
            Status::Xpass => "xpass",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

fn row(suite: &'static str, c: CheckOutcome) -> VerifyRow {
    VerifyRow { suite, name: c.name, status: if c.passed { Status::Pass } else { Status::Fail }, detail: c.detail }
}

fn expected_failure(suite: &'static str, c: CheckOutcome) -> VerifyRow {
    VerifyRow { suite, name: c.name, status: if c.passed { Status::Xpass } else { Status::Xfail }, detail: c.detail }
}

fn outcome(name: &str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.to_string(), passed, detail: detail.into() }
}

fn guarded(name: &str, f: impl FnOnce() -> Result<CheckOutcome, CliError>) -> CheckOutcome {
    f().unwrap_or_else(|e| outcome(name, false, format!("error: {e}")))
}

const SAMPLE_SEED: u64 = 0x5eed;

fn algebra_suite(out: &mut Vec<VerifyRow>) -> Result<(), CliError> {
    let geo = Conventions::standard()?.exact_geometry();
    let g = geo.group();
    out.push(row("algebra", checks::confluence(g, 8)));
    for c in checks::hopf_axioms(g, 5) {
        out.push(row("algebra", c));
    }
    out.push(row("algebra", checks::haar_invariance(g, 6)));
    out.push(row("algebra", CheckOutcome::from_result("generator identities", checks::generators(g, 6))));
    for q in ["1/2", "-1/2", "9/10"] {
        let q: QValue = q.parse().map_err(CliError::Config)?;
        out.push(row("algebra", checks::gram_positivity(&q.value, 3)));
    }
    Ok(())
}

fn geometry_suite(out: &mut Vec<VerifyRow>) -> Result<(), CliError> {
    let conv = Conventions::standard()?;
    let geo = conv.exact_geometry();
    let curvature = (ScalarQ::from_int(1) + ScalarQ::q_pow(2)) * ScalarQ::q();
    out.push(row(
        "geometry",
        guarded("canonical curvature", || {
            let r = geo.curvature(&BaseForm::zero(1))?;
            let expected = BaseForm::dvol().scale(&curvature);
            let flat = geo.codifferential_left(&r)?.is_zero();
            Ok(outcome("canonical curvature", r == expected && flat, format!("R = {}, d*R = 0: {flat}", r.dvol_coefficient()?)))
        }),
    ));
    out.push(row(
        "geometry",
        guarded("scalar Laplacian eigenvalue", || {
            let lam = (ScalarQ::from_int(1) + ScalarQ::q_pow(2)).pow(2) * ScalarQ::from_ratio(1, 2);
            let polys = scalar_matter_polynomials(geo.group());
            let mut fails = 0;
            for p in &polys {
                if geo.laplacian0(p)? != p.scale(&lam) {
                    fails += 1;
                }
            }
            Ok(outcome("scalar Laplacian eigenvalue", fails == 0, format!("{fails} failures out of {}", polys.len())))
        }),
    ));
    out.push(row("geometry", CheckOutcome::from_result("d squared", checks::d_squared(&*geo, 5))));
    out.push(row("geometry", CheckOutcome::from_result("Stokes", checks::stokes(&*geo, 200, 6, SAMPLE_SEED))));
    out.push(row(
        "geometry",
        CheckOutcome::from_result("codifferential adjointness", checks::codifferential_adjointness(&*geo, 40, 5, SAMPLE_SEED)),
    ));
    out.push(row("geometry", CheckOutcome::from_result("star_L squared", checks::hodge_square(&*geo, 60, 5, SAMPLE_SEED))));
    out.push(row(
        "geometry",
        guarded("regular displacements", || {
            let s = geo.regular_qpc_solver(8)?;
            Ok(outcome(
                "regular displacements",
                s.solutions.is_empty(),
                format!("{} nonzero solutions; {} unknowns, {} equations", s.solutions.len(), s.unknowns, s.equations),
            ))
        }),
    ));
    let gauge = &conv.report.gauge;
    out.push(row(
        "geometry",
        outcome(
            "gauge calibration",
            gauge.validated,
            format!("constant {} fixed at n = {}, validated at {:?}", gauge.constant, gauge.fixed_at, gauge.validated_at),
        ),
    ));
    Ok(())
}

fn tables_suite(cfg: &RunConfig, out: &mut Vec<VerifyRow>) -> Result<(), CliError> {
    let report = spectral_report(cfg)?;
    out.push(row(
        "tables",
        outcome(
            "spectra against closed forms",
            report.mismatches() == 0 && !report.is_empty(),
            format!("{} mismatches out of {} eigenvalues, n in {}, N = {}", report.mismatches(), report.len(), cfg.n_range, cfg.filtration),
        ),
    ));
    let geo = Conventions::standard()?.exact_geometry();
    out.push(row(
        "tables",
        guarded("left Laplacian self-commutes", || {
            let mut fails = 0;
            for n in -2..=2 {
                let m = AlgebraElement::monomial(qhopf::bundles::commutation_witness_monomial(n));
                if !geo.commutator(Side::Left, Side::Left, n, &m)?.is_zero() {
                    fails += 1;
                }
            }
            Ok(outcome("left Laplacian self-commutes", fails == 0, format!("{fails} failures out of 5")))
        }),
    ));
    // Documented expected failure: with these conventions the witnesses lie
    // in a common eigenbasis, so the commutator vanishes on them.
    out.push(expected_failure(
        "tables",
        guarded("left/right non-commutation", || {
            let mut nonzero = 0;
            for n in -2..=2 {
                if !geo.commutation_witness(n)?.is_zero() {
                    nonzero += 1;
                }
            }
            Ok(outcome("left/right non-commutation", nonzero == 5, format!("{nonzero} of 5 witnesses nonzero")))
        }),
    ));
    let mut flat = Vec::new();
    for n in -4..=4 {
        if !growth_scan(n, 0.5, 8)?.strictly_increasing {
            flat.push(n);
        }
    }
    out.push(row(
        "tables",
        outcome("row 5 growth in m", flat.is_empty(), format!("q = 1/2, m up to 8, n in -4..4; not increasing for {flat:?}")),
    ));
    Ok(())
}

fn ym_suite(out: &mut Vec<VerifyRow>) -> Result<(), CliError> {
    let conv = Conventions::standard()?;
    let geo = conv.exact_geometry();
    let q = ScalarQ::q();
    out.push(row(
        "yang-mills",
        guarded("matter equations", || {
            let mut fails = 0;
            for n in 1..=4 {
                for t in standard_solutions(&q, n)? {
                    let (l, r) = geo.ymsm_matter_residual(&t)?;
                    fails += (!l.is_zero() || !r.is_zero()) as usize;
                }
            }
            Ok(outcome("matter equations", fails == 0, format!("{fails} failures out of 8 triples, n in 1..4")))
        }),
    ));
    out.push(row(
        "yang-mills",
        guarded("gauge equation", || {
            let probes = probe_family::<ScalarQ>(qhopf::conventions::PROBE_LENGTH);
            let mut fails = 0;
            for n in 1..=3 {
                for t in standard_solutions(&q, n)? {
                    fails += geo.gauge_scan(&t, &probes, &conv.gauge_constant)?.iter().filter(|r| !r.is_zero()).count();
                }
            }
            Ok(outcome("gauge equation", fails == 0, format!("{fails} nonzero residuals over {} probes, n in 1..3", probes.len())))
        }),
    ));
    out.push(row(
        "yang-mills",
        guarded("gauge equation detects perturbation", || {
            let probes = probe_family::<ScalarQ>(qhopf::conventions::PROBE_LENGTH);
            let t = perturbed_triple(&q)?;
            let nonzero = geo.gauge_scan(&t, &probes, &conv.gauge_constant)?.iter().filter(|r| !r.is_zero()).count();
            Ok(outcome("gauge equation detects perturbation", nonzero > 0, format!("{nonzero} nonzero residuals")))
        }),
    ));
    out.push(row(
        "yang-mills",
        guarded("characterization", || {
            let family = ym_family(&*geo)?;
            let mut fails = 0;
            for (_, d) in &family {
                let ym = geo.ym_residual(d)?.is_zero();
                let closed = geo.base_d(&d.lam_of_sigma)?.is_zero();
                let prim = geo.find_primitive(&d.lam_of_sigma, 4).is_ok();
                fails += !(ym == closed && closed == prim) as usize;
            }
            Ok(outcome("characterization", fails == 0, format!("{fails} disagreements out of {}", family.len())))
        }),
    ));
    let near_one = 0.999;
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        worst = worst.max((winding_potential(&near_one, n) - n as f64).abs());
    }
    // Documented expected failure: the potential tends to n/2, not n.
    out.push(expected_failure(
        "yang-mills",
        outcome("winding potential limit", worst <= 1e-2, format!("max |V' - n| = {worst:.4} at q = 0.999, n <= 5")),
    ));
    Ok(())
}

/// `T1 = alpha^n + gamma^n` against `T2 = alpha*^n`, which solves neither
/// equation.
pub fn perturbed_triple(q: &ScalarQ) -> Result<YmsmTriple<ScalarQ>, CliError> {
    let n = 2;
    let t1 = &AlgebraElement::monomial(Monomial::new(n, 0, 0)) + &AlgebraElement::monomial(Monomial::new(0, n as u32, 0));
    let t2 = AlgebraElement::monomial(Monomial::new(-n, 0, 0));
    Ok(YmsmTriple::new(Displacement::zero(), n, t1, t2, winding_potential(q, n))?)
}

/// Named displacements for the Yang-Mills report: the canonical connection,
/// two exact displacements and two that are not closed.
fn ym_family(geo: &Geometry<ScalarQ>) -> Result<Vec<(String, Displacement<ScalarQ>)>, CliError> {
    let exact = |p: AlgebraElement<ScalarQ>| -> Result<Displacement<ScalarQ>, CliError> {
        let (x, y) = geo.horizontal_d(&p);
        Ok(Displacement::new(BaseForm::grade1(x, y)?)?)
    };
    let unit = |slot, m| -> Result<Displacement<ScalarQ>, CliError> {
        Ok(Displacement::new(qhopf::calculus::unit_displacement(slot, m)?)?)
    };
    Ok(vec![
        ("canonical".into(), Displacement::zero()),
        ("d(gamma gamma*)".into(), exact(AlgebraElement::monomial(Monomial::new(0, 1, 1)))?),
        ("d(alpha gamma*)".into(), exact(AlgebraElement::monomial(Monomial::new(1, 0, 1)))?),
        ("alpha^2 eta_-".into(), unit(qhopf::calculus::MINUS, Monomial::new(2, 0, 0))?),
        ("gamma*^2 eta_+".into(), unit(qhopf::calculus::PLUS, Monomial::new(0, 0, 2))?),
    ])
}

fn verify(cfg: &RunConfig, suite: Suite) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Algebra {
        algebra_suite(&mut rows)?;
    }
    if all || suite == Suite::Geometry {
        geometry_suite(&mut rows)?;
    }
    if all || suite == Suite::Tables {
        tables_suite(cfg, &mut rows)?;
    }
    if all || suite == Suite::YangMills {
        ym_suite(&mut rows)?;
    }
    let ok = rows.iter().all(|r| r.status.is_ok());
    let pairs: Vec<(String, String)> =
        rows.iter().map(|r| (format!("{}: {}", r.suite, r.name), format!("{} ({})", r.status.name(), r.detail))).collect();
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&json!({ "ok": ok, "checks": rows }))? + "\n",
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["suite", "check", "status", "detail"])?;
            for r in &rows {
                w.write_record([r.suite, &r.name, r.status.name(), &r.detail])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("utf-8")
        }
        Format::Latex => render::pairs_latex(["check", "status"], &pairs),
    };
    Ok(Outcome { text, ok })
}

/// `<R, R>` of each component of a Yang-Mills residual, which vanishes
/// exactly when the component does.
fn residual_norms(geo: &Geometry<ScalarQ>, d: &Displacement<ScalarQ>) -> Result<[ScalarQ; 2], CliError> {
    let r = geo.ym_residual(d)?;
    Ok([geo.global_inner(&r.left, &r.left)?, geo.global_inner(&r.right, &r.right)?])
}

fn ym_check(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let conv = Conventions::standard()?;
    let geo = conv.exact_geometry();
    let q = ScalarQ::q();
    let mut ok = true;
    let mut connections = Vec::new();
    for (name, d) in ym_family(&geo)? {
        let norms = residual_norms(&geo, &d)?;
        let vanishes = norms.iter().all(|n| n.is_zero());
        let primitive = geo.find_primitive(&d.lam_of_sigma, cfg.filtration.max(2)).ok();
        let primitive_found = primitive.is_some();
        ok &= vanishes == primitive_found;
        connections.push(json!({
            "displacement": name,
            "ym_residual_norms": norms.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            "primitive_found": primitive_found,
            "primitive": primitive,
        }));
    }
    let probes = probe_family::<ScalarQ>(qhopf::conventions::PROBE_LENGTH);
    let mut triples = Vec::new();
    let ns: Vec<i32> = cfg.n_range.values().into_iter().filter(|n| *n >= 1).collect();
    for n in ns {
        for (family, t) in ["alpha", "gamma"].into_iter().zip(standard_solutions(&q, n)?) {
            let (l, r) = geo.ymsm_matter_residual(&t)?;
            let gauge = geo.gauge_scan(&t, &probes, &conv.gauge_constant)?;
            let gauge_residual_max = gauge.iter().filter(|g| !g.is_zero()).count();
            ok &= l.is_zero() && r.is_zero() && gauge_residual_max == 0;
            triples.push(triple_json(family, &t, &l, &r, &gauge));
        }
    }
    let t = perturbed_triple(&q)?;
    let (l, r) = geo.ymsm_matter_residual(&t)?;
    let gauge = geo.gauge_scan(&t, &probes, &conv.gauge_constant)?;
    let perturbed = triple_json("perturbed", &t, &l, &r, &gauge);
    ok &= gauge.iter().any(|g| !g.is_zero());
    let report = json!({
        "calibration": &conv.report.gauge,
        "probes": probes.len(),
        "connections": connections,
        "triples": triples,
        "perturbed": perturbed,
    });
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Csv | Format::Latex => {
            let mut pairs = Vec::new();
            for c in report["connections"].as_array().into_iter().flatten() {
                pairs.push((format!("connection {}", c["displacement"].as_str().unwrap_or("")), c["ym_residual_norms"].to_string()));
            }
            for t in report["triples"].as_array().into_iter().flatten() {
                pairs.push((
                    format!("triple {} n={}", t["family"].as_str().unwrap_or(""), t["n"]),
                    format!("matter {} gauge_max {}", t["ymsm_matter_residuals"], t["gauge_residual_max"]),
                ));
            }
            if cfg.format == Format::Csv {
                render::pairs_csv(["item", "value"], &pairs)?
            } else {
                render::pairs_latex(["item", "value"], &pairs)
            }
        }
    };
    Ok(Outcome { text, ok })
}

/// The gauge residual with the largest canonical text is reported; over
/// Q(q) there is no ordering, so `gauge_residual_max` is `"0"` exactly when
/// every probe vanishes.
fn triple_json(
    family: &str,
    t: &YmsmTriple<ScalarQ>,
    l: &AlgebraElement<ScalarQ>,
    r: &AlgebraElement<ScalarQ>,
    gauge: &[ScalarQ],
) -> serde_json::Value {
    let nonzero: Vec<&ScalarQ> = gauge.iter().filter(|g| !g.is_zero()).collect();
    let max = nonzero.iter().map(|g| g.to_string()).max_by_key(|s| (s.len(), s.clone())).unwrap_or_else(|| "0".into());
    json!({
        "family": family,
        "n": t.n,
        "t1": t.t1,
        "t2": t.t2,
        "vprime": t.vprime,
        "ymsm_matter_residuals": [l.to_string(), r.to_string()],
        "gauge_residual_max": max,
        "gauge_nonzero_probes": nonzero.len(),
    })
}

/// `h((gamma gamma*)^k) = (1 - q^2) / (1 - q^{2k+2})`.
pub fn haar_oracle(k: u32) -> ScalarQ {
    let one = ScalarQ::from_int(1);
    (one.clone() - ScalarQ::q_pow(2)) / (one - ScalarQ::q_pow(2 * k as i32 + 2))
}

fn haar(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let g = Conventions::standard()?.exact_geometry().group_arc();
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 0..=cfg.filtration {
        let computed = g.haar_gamma_power(k);
        let oracle = haar_oracle(k);
        let matched = computed == oracle;
        ok &= matched;
        let mut samples = Vec::new();
        for q in &cfg.q_values {
            let v = computed.evaluate_rational(&q.value)?.to_f64().unwrap_or(f64::NAN);
            samples.push((q.to_string(), v));
        }
        rows.push((k, computed, oracle, matched, samples));
    }
    let text = match cfg.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(k, c, o, m, s)| {
                    json!({
                        "monomial": Monomial::new(0, *k, *k),
                        "k": k,
                        "computed": c,
                        "closed_form": o,
                        "match": m,
                        "samples": s.iter().map(|(q, v)| json!({"q": q, "value": v})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({ "haar": v }))? + "\n"
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            let mut header = vec!["k".to_string(), "monomial".into(), "computed".into(), "closed_form".into(), "match".into()];
            header.extend(cfg.q_values.iter().map(|q| format!("h@q={q}")));
            w.write_record(&header)?;
            for (k, c, o, m, s) in &rows {
                let mut rec = vec![k.to_string(), Monomial::new(0, *k, *k).to_string(), c.to_string(), o.to_string(), m.to_string()];
                rec.extend(s.iter().map(|(_, v)| format!("{v:.12e}")));
                w.write_record(&rec)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("utf-8")
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{|c|c|c|}\n\\hline\n$k$ & $h((\\gamma\\gamma^*)^k)$ & match \\\\\\hline\n");
            for (k, c, _, m, _) in &rows {
                out.push_str(&format!("${k}$ & ${}$ & {} \\\\\\hline\n", c.to_latex(), if *m { r"\checkmark" } else { r"\texttimes" }));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    };
    Ok(Outcome { text, ok })
}

fn conventions(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let conv = Conventions::standard()?;
    let report = &conv.report;
    let ok = report.gauge.validated;
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Csv | Format::Latex => {
            let value = serde_json::to_value(report)?;
            let mut pairs = Vec::new();
            flatten("", &value, &mut pairs);
            if cfg.format == Format::Csv {
                render::pairs_csv(["key", "value"], &pairs)?
            } else {
                render::pairs_latex(["key", "value"], &pairs)
            }
        }
    };
    Ok(Outcome { text, ok })
}

fn flatten(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
    use serde_json::Value;
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                out.push((join(&i.to_string()), scalar_text(x)));
            }
        }
        other => out.push((prefix.to_string(), scalar_text(other))),
    }
}

fn scalar_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
