//! Calibration of the calculus conventions and the shared geometry
//! constructors.
//!
//! The raw germ quotient fixes the invariant 1-forms only up to scale. The
//! scales of `eta_-` and `eta_+` are found by a finite search; `eta_0` is tied
//! to the circle calculus. The codifferential factors are then fixed by
//! adjointness.

use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::bundles::Side;
use crate::calculus::{
    listed_ideal, omega2_dimension, CalculusTables, CircleCalculus, GermsData, Geometry, MINUS, PLUS, ZERO,
};
use crate::quantum_group::{AlgebraElement, Monomial};
use crate::sphere::BaseForm;
use crate::yang_mills::{probe_family, standard_solutions};
use crate::{Error, ExactGroup, QuantumGroup, Result, Scalar, ScalarQ};

pub type ExactGeometry = Geometry<ScalarQ>;
pub type RationalGeometry = Geometry<BigRational>;
pub type NumericGeometry = Geometry<f64>;

/// Word length bound of the displacement probes standing in for "all lambda".
pub const PROBE_LENGTH: u32 = 4;

/// Largest `|i|` in the `q^i` scale lattice.
pub const SCALE_LATTICE_RADIUS: i32 = 2;

/// The calibrated conventions, with the exact geometry they define.
pub struct Conventions {
    pub data: GermsData,
    pub tables: CalculusTables<ScalarQ>,
    /// `s_k` in `d^* = s_k star_L d star_L`.
    pub codiff_factors: [BigRational; 2],
    pub report: ConventionReport,
    /// Relative constant between the two terms of the gauge equation.
    pub gauge_constant: ScalarQ,
    geometry: Arc<ExactGeometry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StageCount {
    pub stage: &'static str,
    pub survivors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConventionReport {
    pub ideal: Vec<String>,
    pub quotient_dims: Vec<(u32, usize)>,
    pub omega2_dims: Vec<(u32, usize)>,
    /// `dim Omega^2_inv` for the ideal with `alpha + q^2 alpha*`.
    pub listed_ideal_omega2_dim: usize,
    pub candidates: usize,
    pub stages: Vec<StageCount>,
    /// `c_-, c_0, c_+` with `eta_i = c_i [rep_i]`.
    pub scales: [String; 3],
    pub codiff_factors: [String; 2],
    pub germs: Vec<String>,
    pub wedge: Vec<String>,
    pub d_eta: Vec<String>,
    pub form_star: Vec<String>,
    pub kappa: [String; 2],
    pub reconstructions: Vec<&'static str>,
    pub gauge: GaugeStatus,
}

/// Outcome of the one-time calibration of the gauge equation.
#[derive(Clone, Debug, Serialize)]
pub struct GaugeStatus {
    pub constant: String,
    pub fixed_at: i32,
    pub probes: usize,
    pub validated_at: Vec<i32>,
    pub validated: bool,
}

const RECONSTRUCTIONS: &[&str] = &[
    "right covariant derivative: star conjugate of the left one on the conjugate bundle",
    "right Hodge operator: star_R(phi) = (star_L(phi*))*",
    "form star derived from pi(a)* = -pi(kappa(a)*)",
    "bundle 1-form pairing computed through the generator columns",
    "displacement coupling K(T) = c_n T lambda(varsigma), c_n the circle germ of z^n",
];

const FORM_NAMES: [&str; 3] = ["eta_-", "eta_0", "eta_+"];
const TWO_NAMES: [&str; 3] = ["dvol", "eta_- eta_0", "eta_0 eta_+"];

fn render_combo(coeffs: &[ScalarQ; 3], names: &[&str; 3]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("({c}) {n}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn mono(a: i32, k: u32, l: u32) -> AlgebraElement<ScalarQ> {
    AlgebraElement::monomial(Monomial::new(a, k, l))
}

/// The three degree-0 polynomials spanning the lowest nonzero eigenspace of
/// the scalar Laplacian.
pub fn scalar_matter_polynomials<S: Scalar>(g: &QuantumGroup<S>) -> [AlgebraElement<S>; 3] {
    let mut p = AlgebraElement::one();
    p.add_term(Monomial::new(0, 1, 1), -(S::one() + g.qp(2)));
    [p, AlgebraElement::monomial(Monomial::new(1, 0, 1)), AlgebraElement::monomial(Monomial::new(-1, 1, 0))]
}

/// Sample pairs for the codifferential sign on grades 1 and 2.
pub fn adjointness_samples<S: Scalar>(geo: &Geometry<S>) -> Result<[Vec<(BaseForm<S>, BaseForm<S>)>; 2]> {
    let funcs: Vec<AlgebraElement<S>> = [(1, 0, 1), (0, 1, 1), (-1, 1, 0), (2, 0, 2), (1, 1, 2)]
        .iter()
        .map(|&(a, k, l)| AlgebraElement::monomial(Monomial::new(a, k, l)))
        .collect();
    let mut g1 = Vec::new();
    for f in &funcs {
        for h in &funcs {
            let psi = geo.base_d(&BaseForm::grade0(h.clone())?)?;
            g1.push((BaseForm::grade0(f.clone())?, psi));
        }
    }
    let ones: Vec<BaseForm<S>> = [((2, 0, 0), (0, 0, 0)), ((1, 1, 0), (0, 0, 2)), ((0, 0, 0), (-1, 0, 1)), ((2, 1, 1), (-2, 0, 0))]
        .iter()
        .map(|&((a, k, l), (b, m, n))| {
            let x = if (a, k, l) == (0, 0, 0) { AlgebraElement::zero() } else { AlgebraElement::monomial(Monomial::new(a, k, l)) };
            let y = if (b, m, n) == (0, 0, 0) { AlgebraElement::zero() } else { AlgebraElement::monomial(Monomial::new(b, m, n)) };
            BaseForm::grade1(x, y)
        })
        .collect::<Result<_>>()?;
    let mut g2 = Vec::new();
    for w in &ones {
        for v in &ones {
            let dv = geo.base_d(v)?;
            g2.push((w.clone(), dv));
        }
    }
    Ok([g1, g2])
}

struct Candidate {
    scales: [ScalarQ; 3],
    tables: CalculusTables<ScalarQ>,
}

impl Conventions {
    /// The calibrated conventions, computed once per process.
    pub fn standard() -> Result<&'static Conventions> {
        static CELL: OnceLock<Result<Conventions>> = OnceLock::new();
        CELL.get_or_init(Conventions::calibrate).as_ref().map_err(Clone::clone)
    }

    pub fn calibrate() -> Result<Conventions> {
        let group = Arc::new(ExactGroup::new(ScalarQ::q()));
        let data = GermsData::adopted(&group)?;
        let listed = GermsData::derive(&group, listed_ideal(&group), 2)?;
        let listed_ideal_omega2_dim = omega2_dimension(&group, &listed);
        let c0 = CircleCalculus::derive().germ_z;

        // Overall (eta_-, eta_+) -> (-eta_-, -eta_+) is a symmetry of every
        // check below, so c_- is taken positive.
        let r = SCALE_LATTICE_RADIUS;
        let powers: Vec<i32> = (-r..=r).collect();
        let mut lattice = Vec::new();
        for &i in &powers {
            for &j in &powers {
                for sign in [1, -1] {
                    lattice.push([ScalarQ::q_pow(i), c0.clone(), ScalarQ::q_pow(j) * ScalarQ::from_int(sign)]);
                }
            }
        }
        let candidates = lattice.len();
        let mut stages = Vec::new();

        let curvature = (ScalarQ::from_int(1) + ScalarQ::q_pow(2)) * ScalarQ::q();
        let mut alive = Vec::new();
        for scales in lattice {
            let tables = CalculusTables::derive(&group, &data, scales.clone())?;
            let d0 = &tables.d_eta[ZERO];
            if d0[0] == curvature && d0[1].is_zero() && d0[2].is_zero() {
                alive.push(Candidate { scales, tables });
            }
        }
        stages.push(StageCount { stage: "curvature normalisation", survivors: alive.len() });

        let mut with_signs = Vec::new();
        for c in alive {
            let one = ScalarQ::from_int(1);
            let probe = Geometry::from_tables(group.clone(), c.tables.clone(), [one.clone(), one]);
            let samples = adjointness_samples(&probe)?;
            let s1 = probe.adjointness_factor(1, &samples[0]).ok().and_then(|s| s.as_rational());
            let s2 = probe.adjointness_factor(2, &samples[1]).ok().and_then(|s| s.as_rational());
            if let (Some(s1), Some(s2)) = (s1, s2) {
                with_signs.push((c, [s1, s2]));
            }
        }
        stages.push(StageCount { stage: "codifferential adjointness", survivors: with_signs.len() });

        let expected = (ScalarQ::from_int(1) + ScalarQ::q_pow(2)).pow(2) * ScalarQ::from_ratio(1, 2);
        let mut geos = Vec::new();
        for (c, signs) in with_signs {
            let factors = signs.clone().map(ScalarQ::from_rational);
            let geo = Geometry::from_tables(group.clone(), c.tables.clone(), factors);
            let ok = scalar_matter_polynomials(&group).iter().all(|p| {
                geo.laplacian0(p).map(|v| v == p.scale(&expected)).unwrap_or(false)
            });
            if ok {
                geos.push((c, signs, geo));
            }
        }
        stages.push(StageCount { stage: "scalar Laplacian eigenvalue", survivors: geos.len() });

        let half = ScalarQ::from_ratio(1, 2);
        let rows: [(i32, AlgebraElement<ScalarQ>, ScalarQ); 2] =
            [(1, mono(1, 0, 0), half.clone() * ScalarQ::q_pow(4)), (-1, mono(-1, 0, 0), half)];
        let mut finals = Vec::new();
        for (c, signs, geo) in geos {
            let ok = rows.iter().all(|(n, s, lam)| {
                geo.apply_laplacian(Side::Left, *n, s).map(|v| v == s.scale(lam)).unwrap_or(false)
            });
            if ok {
                finals.push((c, signs, geo));
            }
        }
        stages.push(StageCount { stage: "bundle Laplacian on alpha, alpha*", survivors: finals.len() });

        if finals.len() != 1 {
            return Err(Error::Convention(format!("calibration left {} candidates: {stages:?}", finals.len())));
        }
        let (c, codiff_factors, geo) = finals.pop().expect("one survivor");
        let t = &c.tables;
        let mut wedge = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                wedge.push(format!("{} {} = {}", FORM_NAMES[i], FORM_NAMES[j], render_combo(&t.wedge[i][j], &TWO_NAMES)));
            }
        }
        let kappa = geo.kappa();
        let probes = probe_family::<ScalarQ>(PROBE_LENGTH);
        let cal = geo.calibrate_gauge(&probes)?;
        let validated_at = vec![2, 3];
        let mut validated = true;
        for &n in &validated_at {
            for t in standard_solutions(&ScalarQ::q(), n)? {
                validated &= geo.gauge_scan(&t, &probes, &cal.constant)?.iter().all(|r| r.is_zero());
            }
        }
        let gauge = GaugeStatus { constant: cal.constant.to_string(), fixed_at: cal.fixed_at, probes: cal.probes, validated_at, validated };
        let report = ConventionReport {
            ideal: data.ideal_generators.iter().map(|g| g.to_string()).collect(),
            quotient_dims: data.quotient_dims.clone(),
            omega2_dims: t.omega2_dims.clone(),
            listed_ideal_omega2_dim,
            candidates,
            stages,
            scales: [c.scales[MINUS].to_string(), c.scales[ZERO].to_string(), c.scales[PLUS].to_string()],
            codiff_factors: [codiff_factors[0].to_string(), codiff_factors[1].to_string()],
            germs: crate::Generator::ALL
                .iter()
                .map(|g| format!("pi({g}) = {}", render_combo(&t.germs[g.index()], &FORM_NAMES)))
                .collect(),
            wedge,
            d_eta: (0..3).map(|j| format!("d {} = {}", FORM_NAMES[j], render_combo(&t.d_eta[j], &TWO_NAMES))).collect(),
            form_star: (0..3).map(|j| format!("{}* = {}", FORM_NAMES[j], render_combo(&t.star1[j], &FORM_NAMES))).collect(),
            kappa: [kappa[0].to_string(), kappa[1].to_string()],
            reconstructions: RECONSTRUCTIONS.to_vec(),
            gauge,
        };
        Ok(Conventions { data, tables: c.tables, codiff_factors, report, gauge_constant: cal.constant, geometry: Arc::new(geo) })
    }

    /// The exact geometry over Q(q). Shared; its caches persist.
    pub fn exact_geometry(&self) -> Arc<ExactGeometry> {
        self.geometry.clone()
    }

    /// A fresh geometry at a specific value of q.
    pub fn geometry_at<S: Scalar>(&self, q: S) -> Result<Geometry<S>> {
        let tables = self.tables.eval_in(&q)?;
        let factors = self.codiff_factors.clone().map(|r| S::from_rational(&r));
        Ok(Geometry::from_tables(Arc::new(QuantumGroup::new(q)), tables, factors))
    }
}

/// Shorthand for the exact geometry of the standard conventions.
pub fn exact_geometry() -> Result<Arc<ExactGeometry>> {
    Ok(Conventions::standard()?.exact_geometry())
}

pub fn geometry_at<S: Scalar>(q: S) -> Result<Geometry<S>> {
    Conventions::standard()?.geometry_at(q)
}
