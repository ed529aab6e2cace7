//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 9 and 11 carry documented expected failures. They print FAIL;
//! the run exits 0 when every other criterion passes and neither expected
//! failure unexpectedly passes.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};
use qhopf::bundles::{closed_form, commutation_witness_monomial, generator_set, growth_scan, verify_generators, Side};
use qhopf::checks;
use qhopf::conventions::{scalar_matter_polynomials, Conventions, PROBE_LENGTH};
use qhopf::sphere::BaseForm;
use qhopf::yang_mills::{probe_family, standard_solutions, winding_potential};
use qhopf::{AlgebraElement, Monomial, ScalarQ};

#[derive(Clone, Copy, PartialEq)]
enum Expect {
    Pass,
    Fail,
}

struct Line {
    id: u8,
    passed: bool,
    expect: Expect,
    detail: String,
}

impl Line {
    fn ok(&self) -> bool {
        match self.expect {
            Expect::Pass => self.passed,
            Expect::Fail => !self.passed,
        }
    }
}

fn qp(e: i32) -> ScalarQ {
    ScalarQ::q_pow(e)
}

type Run = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Criteria 1 and 2 share one assembly.
fn tables() -> Result<[(bool, String); 2], String> {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let ns: Vec<i32> = (-4..=4).collect();
    let blocks = geo.spectral_blocks(&ns, 4, &[Side::Left, Side::Right], 2).map_err(err)?;
    let mut out = [(0usize, 0usize), (0, 0)];
    let mut eigenvector_ok = false;
    for b in &blocks {
        let slot = match b.side {
            Side::Left => 0,
            Side::Right => 1,
        };
        for pair in geo.spectrum(b).map_err(err)? {
            out[slot].0 += 1;
            if pair.eigenvalue != closed_form(b.side, pair.leading) {
                out[slot].1 += 1;
            }
            if b.side == Side::Right && pair.leading == Monomial::new(1, 1, 1) {
                let c = qp(4) + ScalarQ::from_int(2) * qp(2) + qp(-2) + ScalarQ::from_int(3);
                let d = qp(4) + ScalarQ::from_int(2) * qp(2) + qp(-2) + ScalarQ::from_int(2);
                let reference = AlgebraElement::from_terms([
                    (Monomial::new(1, 0, 0), -(c.clone() * (ScalarQ::one() + qp(2)) / d)),
                    (Monomial::new(1, 1, 1), c.clone()),
                ]);
                eigenvector_ok = pair.eigenvector.scale(&c) == reference;
            }
        }
    }
    let left = (out[0].1 == 0 && out[0].0 > 0, format!("{} eigenvalues, {} mismatches", out[0].0, out[0].1));
    let right = (
        out[1].1 == 0 && out[1].0 > 0 && eigenvector_ok,
        format!("{} eigenvalues, {} mismatches, reference eigenvector {}", out[1].0, out[1].1, if eigenvector_ok { "matches" } else { "differs" }),
    );
    Ok([left, right])
}

fn curvature() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let r = geo.curvature(&BaseForm::zero(1)).map_err(err)?;
    let expect = BaseForm::grade2(AlgebraElement::scalar((ScalarQ::one() + qp(2)) * ScalarQ::q())).map_err(err)?;
    let flat = geo.codifferential_left(&r).map_err(err)?.is_zero();
    Ok((r == expect && flat, format!("R = ({}) dvol, d*R vanishes: {flat}", r.dvol_coefficient().map_err(err)?)))
}

fn scalar_matter() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let lam = (ScalarQ::one() + qp(2)).pow(2) * ScalarQ::from_ratio(1, 2);
    let mut fails = 0;
    for p in scalar_matter_polynomials(geo.group()) {
        if geo.laplacian0(&p).map_err(err)? != p.scale(&lam) {
            fails += 1;
        }
    }
    Ok((fails == 0, format!("{fails} of 3 polynomials off the eigenvalue")))
}

fn ymsm() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let q = ScalarQ::q();
    let mut matter_fails = 0;
    for n in 1..=4 {
        for t in standard_solutions(&q, n).map_err(err)? {
            let (l, r) = geo.ymsm_matter_residual(&t).map_err(err)?;
            matter_fails += (!l.is_zero() || !r.is_zero()) as usize;
        }
    }
    let probes = probe_family::<ScalarQ>(PROBE_LENGTH);
    let cal = geo.calibrate_gauge(&probes).map_err(err)?;
    let mut gauge_fails = 0;
    for n in [1, 2, 3] {
        for t in standard_solutions(&q, n).map_err(err)? {
            gauge_fails += geo.gauge_scan(&t, &probes, &cal.constant).map_err(err)?.iter().filter(|r| !r.is_zero()).count();
        }
    }
    Ok((
        matter_fails == 0 && gauge_fails == 0,
        format!(
            "matter: {matter_fails} failing triples (n in 1..4); gauge: constant {} fixed at n = 1, {gauge_fails} nonzero over {} probes at n = 1, 2, 3",
            cal.constant,
            probes.len()
        ),
    ))
}

fn regular() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let mut found = Vec::new();
    for len in [2, 4, 6, 8] {
        found.push(geo.regular_qpc_solver(len).map_err(err)?.solutions.len());
    }
    Ok((found.iter().all(|n| *n == 0), format!("nonzero solutions at degree 2, 4, 6, 8: {found:?}")))
}

fn generators() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let mut fails = Vec::new();
    for n in -6..=6 {
        if !verify_generators(geo.group(), &generator_set(n)).map_err(err)?.passed() {
            fails.push(n);
        }
    }
    Ok((fails.is_empty(), format!("failing n: {fails:?}")))
}

fn stokes_haar() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let s = checks::stokes(&*geo, 200, 6, 8).map_err(err)?;
    let h = checks::haar_invariance(geo.group(), 6);
    Ok((s.passed && h.passed, format!("Stokes: {}; Haar invariance: {}", s.detail, h.detail)))
}

/// Expected failure: the witnesses vanish. The self-commutator sanity part
/// must still hold, otherwise the criterion fails for a different reason.
fn non_commutation() -> Result<(bool, bool, String), String> {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let mut nonzero = 0;
    let mut sanity = true;
    for n in -2..=2 {
        if !geo.commutation_witness(n).map_err(err)?.is_zero() {
            nonzero += 1;
        }
        let w = AlgebraElement::monomial(commutation_witness_monomial(n));
        sanity &= geo.commutator(Side::Left, Side::Left, n, &w).map_err(err)?.is_zero();
    }
    Ok((nonzero == 5, sanity, format!("{nonzero} of 5 witnesses nonzero; [L, L] = 0: {sanity}")))
}

fn structural() -> Run {
    let geo = Conventions::standard().map_err(err)?.exact_geometry();
    let g = geo.group();
    let mut outcomes = vec![checks::confluence(g, 8)];
    outcomes.extend(checks::hopf_axioms(g, 5));
    outcomes.push(checks::d_squared(&*geo, 5).map_err(err)?);
    outcomes.push(checks::codifferential_adjointness(&*geo, 60, 5, 10).map_err(err)?);
    outcomes.push(checks::hodge_square(&*geo, 60, 5, 10).map_err(err)?);
    for (n, d) in [(1, 2), (-1, 2), (9, 10)] {
        outcomes.push(checks::gram_positivity(&BigRational::new(n.into(), d.into()), 3));
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
    Ok((failed.is_empty(), format!("{} checks, failing: {failed:?}", outcomes.len())))
}

/// Returns (potential half, growth half, detail).
fn classical_limit() -> Result<(bool, bool, String), String> {
    let mut worst: f64 = 0.0;
    for n in 1..=5 {
        worst = worst.max((winding_potential(&0.999f64, n) - n as f64).abs());
    }
    let mut flat = Vec::new();
    for n in -4..=4 {
        if !growth_scan(n, 0.5, 8).map_err(err)?.strictly_increasing {
            flat.push(n);
        }
    }
    Ok((
        worst <= 1e-2,
        flat.is_empty(),
        format!("max |V' - n| = {worst:.4} at q = 0.999 (tends to n/2); row 5 increasing to m = 8 at q = 1/2 except n in {flat:?}"),
    ))
}

fn line(id: u8, r: Run) -> Line {
    match r {
        Ok((passed, detail)) => Line { id, passed, expect: Expect::Pass, detail },
        Err(e) => Line { id, passed: false, expect: Expect::Pass, detail: format!("error: {e}") },
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut lines = Vec::new();
    match tables() {
        Ok([l, r]) => {
            lines.push(line(1, Ok(l)));
            lines.push(line(2, Ok(r)));
        }
        Err(e) => {
            lines.push(line(1, Err(e.clone())));
            lines.push(line(2, Err(e)));
        }
    }
    lines.push(line(3, curvature()));
    lines.push(line(4, scalar_matter()));
    lines.push(line(5, ymsm()));
    lines.push(line(6, regular()));
    lines.push(line(7, generators()));
    lines.push(line(8, stokes_haar()));
    lines.push(match non_commutation() {
        // a broken sanity check is a real failure, reported as expected to pass
        Ok((_, false, d)) => Line { id: 9, passed: false, expect: Expect::Pass, detail: d },
        Ok((witnesses, true, d)) => Line { id: 9, passed: witnesses, expect: Expect::Fail, detail: d },
        Err(e) => line(9, Err(e)),
    });
    lines.push(line(10, structural()));
    lines.push(match classical_limit() {
        Ok((_, false, d)) => Line { id: 11, passed: false, expect: Expect::Pass, detail: d },
        Ok((potential, true, d)) => Line { id: 11, passed: potential, expect: Expect::Fail, detail: d },
        Err(e) => line(11, Err(e)),
    });

    for l in &lines {
        let verdict = if l.passed { "PASS" } else { "FAIL" };
        let note = match (l.expect, l.passed) {
            (Expect::Fail, false) => " (expected failure)",
            (Expect::Fail, true) => " (unexpected pass of an expected failure)",
            _ => "",
        };
        println!("criterion {:>2}: {verdict}{note}: {}", l.id, l.detail);
    }
    let ok = lines.iter().all(Line::ok);
    println!("acceptance: {} in {:.1?}", if ok { "ok" } else { "FAILED" }, start.elapsed());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
