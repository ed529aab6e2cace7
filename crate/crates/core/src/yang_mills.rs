//! Yang-Mills and Yang-Mills-scalar-matter equations on the Hopf
//! fibration, as residuals.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bundles::{BundleForm, Side};
use crate::calculus::{unit_displacement, Geometry, MINUS, PLUS};
use crate::linalg::Matrix;
use crate::quantum_group::{AlgebraElement, Monomial};
use crate::sphere::BaseForm;
use crate::{Error, Result, Scalar};

/// A connection `omega^c + lambda`, stored through `lambda(varsigma)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Displacement<S: Scalar> {
    pub lam_of_sigma: BaseForm<S>,
}

impl<S: Scalar> Displacement<S> {
    pub fn new(lam: BaseForm<S>) -> Result<Self> {
        if lam.grade() != 1 {
            return Err(Error::Grade { expected: 1, got: lam.grade() });
        }
        lam.validate()?;
        Ok(Displacement { lam_of_sigma: lam })
    }

    /// The canonical connection.
    pub fn zero() -> Self {
        Displacement { lam_of_sigma: BaseForm::zero(1) }
    }

    pub fn is_zero(&self) -> bool {
        self.lam_of_sigma.is_zero()
    }
}

/// `(omega, T1, T2)` with `deg T1 = n`, `deg T2 = -n` and a constant `V'`.
#[derive(Clone, Debug)]
pub struct YmsmTriple<S: Scalar> {
    pub omega: Displacement<S>,
    pub n: i32,
    pub t1: AlgebraElement<S>,
    pub t2: AlgebraElement<S>,
    pub vprime: S,
}

impl<S: Scalar> YmsmTriple<S> {
    pub fn new(omega: Displacement<S>, n: i32, t1: AlgebraElement<S>, t2: AlgebraElement<S>, vprime: S) -> Result<Self> {
        if !t1.has_degree(n) {
            return Err(Error::Degree(format!("T1 must have degree {n}, got {t1}")));
        }
        if !t2.has_degree(-n) {
            return Err(Error::Degree(format!("T2 must have degree {}, got {t2}", -n)));
        }
        Ok(YmsmTriple { omega, n, t1, t2, vprime })
    }
}

/// `d^{*L} R(varsigma)` and `d^{*R} (R(varsigma)*)`.
#[derive(Clone, Debug)]
pub struct YmResidual<S: Scalar> {
    pub left: BaseForm<S>,
    pub right: BaseForm<S>,
}

impl<S: Scalar> YmResidual<S> {
    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }
}

/// Single-monomial displacements: `m eta_-` with `deg m = 2` and `m eta_+`
/// with `deg m = -2`, word length at most `max_length`.
pub fn probe_family<S: Scalar>(max_length: u32) -> Vec<Displacement<S>> {
    let mut out = Vec::new();
    for (slot, deg) in [(MINUS, 2), (PLUS, -2)] {
        for m in Monomial::of_degree(deg, max_length) {
            let lam = unit_displacement(slot, m).expect("degree-correct by construction");
            out.push(Displacement { lam_of_sigma: lam });
        }
    }
    out
}

/// The relative constant between the two terms of the gauge equation.
#[derive(Clone, Debug, Serialize)]
pub struct GaugeCalibration<S> {
    pub fixed_at: i32,
    pub constant: S,
    pub probes: usize,
}

impl<S: Scalar> Geometry<S> {
    pub fn ym_residual(&self, d: &Displacement<S>) -> Result<YmResidual<S>> {
        let r = self.curvature(&d.lam_of_sigma)?;
        let left = self.codifferential_left(&r)?;
        let right = self.codifferential_right(&self.form_star(&r)?)?;
        Ok(YmResidual { left, right })
    }

    /// Derivative of the Yang-Mills functional at `omega^c + d` in the
    /// direction `dprime`.
    pub fn ym_variation(&self, d: &Displacement<S>, dprime: &Displacement<S>) -> Result<S> {
        let a = self.base_d(&dprime.lam_of_sigma)?;
        let b = self.base_d(&d.lam_of_sigma)?;
        let h = S::one() / S::from_i64(2);
        Ok(-(h * self.global_inner(&a, &b)?))
    }

    /// Solves `d p = closed` over the degree-0 monomials of word length at
    /// most `filtration` (constants excluded).
    pub fn find_primitive(&self, closed: &BaseForm<S>, filtration: u32) -> Result<AlgebraElement<S>> {
        if closed.grade() != 1 {
            return Err(Error::Grade { expected: 1, got: closed.grade() });
        }
        if !self.base_d(closed)?.is_zero() {
            return Err(Error::Invalid("form is not closed".into()));
        }
        if closed.is_zero() {
            return Ok(AlgebraElement::zero());
        }
        let unknowns: Vec<Monomial> = Monomial::of_degree(0, filtration).into_iter().filter(|m| !m.is_one()).collect();
        let mut rows: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut entries = Vec::new();
        for (col, m) in unknowns.iter().enumerate() {
            let (x, y) = self.horizontal_d(&AlgebraElement::monomial(*m));
            for (slot, comp) in [(MINUS, &x), (PLUS, &y)] {
                for (mono, c) in comp.iter() {
                    let n = rows.len();
                    let r = *rows.entry((slot, *mono)).or_insert(n);
                    entries.push((r, col, c.clone()));
                }
            }
        }
        let (cx, cy) = closed.components()?;
        for (slot, comp) in [(MINUS, cx), (PLUS, cy)] {
            for (mono, _) in comp.iter() {
                if !rows.contains_key(&(slot, *mono)) {
                    return Err(Error::IncreaseFiltration(filtration));
                }
            }
        }
        let mut a: Matrix<S> = Matrix::zeros(rows.len(), unknowns.len());
        for (r, c, v) in entries {
            a[(r, c)] = a[(r, c)].clone() + v;
        }
        let mut b = vec![S::zero(); rows.len()];
        for ((slot, mono), &r) in &rows {
            let comp = if *slot == MINUS { cx } else { cy };
            b[r] = comp.coeff(mono);
        }
        let sol = a.solve(&b).ok_or(Error::IncreaseFiltration(filtration))?;
        let p = AlgebraElement::from_terms(unknowns.iter().zip(sol).filter(|(_, c)| !c.is_negligible()).map(|(m, c)| (*m, c)));
        Ok(p)
    }

    /// Left-hand sides of the matter equations with constant `V'`, using the
    /// canonical connection.
    pub fn ymsm_matter_residual(&self, t: &YmsmTriple<S>) -> Result<(AlgebraElement<S>, AlgebraElement<S>)> {
        let l = self.apply_laplacian(Side::Left, t.n, &t.t1)?;
        let r = self.apply_laplacian(Side::Right, -t.n, &t.t2)?;
        Ok((&l - &t.t1.scale(&t.vprime), &r - &t.t2.scale(&t.vprime)))
    }

    /// `K(T) = c_n T lambda(varsigma)` for a section of degree `n`.
    pub fn coupled_form(&self, n: i32, t: &AlgebraElement<S>, probe: &Displacement<S>) -> Result<BundleForm<S>> {
        let (x, y) = probe.lam_of_sigma.components()?;
        let c = self.tables().circle.coupling(n);
        let g = self.group();
        Ok(BundleForm { x: g.mul(t, x).scale(&c), y: g.mul(t, y).scale(&c) })
    }

    /// The two pairings of the gauge equation, before calibration:
    /// `<K(T1) | nabla T1>_L` and the right pairing of `K^(T2)` with
    /// `nabla^ T2`, computed on the conjugate bundle.
    pub fn gauge_terms(&self, t: &YmsmTriple<S>, probe: &Displacement<S>) -> Result<(S, S)> {
        let n = t.n;
        let k1 = self.coupled_form(n, &t.t1, probe)?;
        let left = self.bundle_inner(n, &k1, &self.nabla_left(n, &t.t1, None)?)?;
        let t2s = self.group().star(&t.t2);
        let k2 = self.coupled_form(n, &t2s, probe)?;
        let right = self.bundle_inner(n, &k2, &self.nabla_left(n, &t2s, None)?)?;
        Ok((left, right))
    }

    pub fn ymsm_gauge_residual(&self, t: &YmsmTriple<S>, probe: &Displacement<S>, calibration: &S) -> Result<S> {
        let (l, r) = self.gauge_terms(t, probe)?;
        Ok(l - calibration.clone() * r)
    }

    /// Fixes the relative constant on the `n = 1` solution `(alpha, alpha*)`.
    pub fn calibrate_gauge(&self, probes: &[Displacement<S>]) -> Result<GaugeCalibration<S>> {
        let t = YmsmTriple::new(
            Displacement::zero(),
            1,
            AlgebraElement::monomial(Monomial::new(1, 0, 0)),
            AlgebraElement::monomial(Monomial::new(-1, 0, 0)),
            S::zero(),
        )?;
        let pairs: Vec<(S, S)> = probes.par_iter().map(|p| self.gauge_terms(&t, p)).collect::<Result<_>>()?;
        let mut constant: Option<S> = None;
        for (l, r) in &pairs {
            if r.is_negligible() {
                if !l.is_negligible() {
                    return Err(Error::Convention("gauge terms cannot be balanced by a constant".into()));
                }
                continue;
            }
            let c = l.clone() / r.clone();
            match &constant {
                None => constant = Some(c),
                Some(k) if !(k.clone() - c.clone()).is_negligible() => {
                    return Err(Error::Convention(format!("gauge ratio varies over probes: {k:?} vs {c:?}")));
                }
                _ => {}
            }
        }
        let constant = constant.ok_or_else(|| Error::Convention("every probe pairing vanished at n = 1".into()))?;
        Ok(GaugeCalibration { fixed_at: 1, constant, probes: probes.len() })
    }

    /// Gauge residuals over a probe family, in probe order.
    pub fn gauge_scan(&self, t: &YmsmTriple<S>, probes: &[Displacement<S>], calibration: &S) -> Result<Vec<S>> {
        probes.par_iter().map(|p| self.ymsm_gauge_residual(t, p, calibration)).collect()
    }
}

/// `V' = 1/2 q^4 [n]`.
pub fn winding_potential<S: Scalar>(q: &S, n: i32) -> S {
    let q2 = q.clone() * q.clone();
    let mut qn = S::zero();
    let mut p = S::one();
    for _ in 0..n.max(0) {
        qn = qn + p.clone();
        p = p * q2.clone();
    }
    q2.clone() * q2 * qn / S::from_i64(2)
}

/// The standard solutions `(alpha^n, alpha*^n)` and `(gamma^n, gamma*^n)`.
pub fn standard_solutions<S: Scalar>(q: &S, n: i32) -> Result<[YmsmTriple<S>; 2]> {
    let m = n.unsigned_abs();
    let v = winding_potential(q, n);
    let a = YmsmTriple::new(
        Displacement::zero(),
        n,
        AlgebraElement::monomial(Monomial::new(n, 0, 0)),
        AlgebraElement::monomial(Monomial::new(-n, 0, 0)),
        v.clone(),
    )?;
    let g = YmsmTriple::new(
        Displacement::zero(),
        n,
        AlgebraElement::monomial(Monomial::new(0, m, 0)),
        AlgebraElement::monomial(Monomial::new(0, 0, m)),
        v,
    )?;
    Ok([a, g])
}
