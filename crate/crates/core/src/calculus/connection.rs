//! Connections on the Hopf fibration: curvature of `omega^c + lambda` and the
//! search for regular displacements.

use std::collections::BTreeMap;

use super::forms::TotalForm1;
use super::geometry::Geometry;
use super::tables::{MINUS, PLUS, ZERO};
use crate::linalg::Matrix;
use crate::quantum_group::{AlgebraElement, Generator, Monomial};
use crate::sphere::BaseForm;
use crate::{Error, Result, Scalar};

/// Result of the regular-displacement search.
#[derive(Clone, Debug)]
pub struct RegularSolutions<S: Scalar> {
    pub max_length: u32,
    pub unknowns: usize,
    pub equations: usize,
    pub solutions: Vec<BaseForm<S>>,
}

impl<S: Scalar> Geometry<S> {
    /// `R(varsigma)` for the canonical connection, as a base 2-form.
    pub fn canonical_curvature(&self) -> Result<BaseForm<S>> {
        let d0 = &self.tables().d_eta[ZERO];
        if !d0[1].is_negligible() || !d0[2].is_negligible() {
            return Err(Error::Convention("d eta_0 has vertical parts".into()));
        }
        BaseForm::grade2(AlgebraElement::scalar(d0[0].clone()))
    }

    /// `R(varsigma) = d eta_0 + d lambda(varsigma)`. The structure group is
    /// abelian with trivial embedded differential, so there is no
    /// quadratic term.
    pub fn curvature(&self, lam: &BaseForm<S>) -> Result<BaseForm<S>> {
        if lam.grade() != 1 {
            return Err(Error::Grade { expected: 1, got: lam.grade() });
        }
        self.canonical_curvature()?.add(&self.base_d(lam)?)
    }

    /// `lambda g - q^{-2 deg g} g lambda` for a generator `g`; vanishes for
    /// all four generators exactly when `omega^c + lambda` is regular.
    pub fn regularity_defect(&self, lam: &BaseForm<S>, g: Generator) -> Result<TotalForm1<S>> {
        let (x, y) = lam.components()?;
        let t = self.to_total1(x, y);
        let ge = self.group().generator(g);
        let right = self.right_mul1(&t, &ge);
        let left = self.left_mul1(&ge, &t).scale(&self.qp(-2 * g.degree()));
        Ok(right.sub(&left))
    }

    /// All displacements `x eta_- + y eta_+` with coefficient monomials of
    /// word length at most `max_length` that satisfy the regularity
    /// constraints.
    pub fn regular_qpc_solver(&self, max_length: u32) -> Result<RegularSolutions<S>> {
        if max_length < 2 {
            return Err(Error::Invalid("max_total_degree must be at least 2".into()));
        }
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for m in Monomial::of_degree(2, max_length) {
            unknowns.push((MINUS, m));
        }
        for m in Monomial::of_degree(-2, max_length) {
            unknowns.push((PLUS, m));
        }
        let mut rows: BTreeMap<(usize, usize, Monomial), usize> = BTreeMap::new();
        let mut entries: Vec<(usize, usize, S)> = Vec::new();
        for (col, &(slot, m)) in unknowns.iter().enumerate() {
            let lam = unit_displacement(slot, m)?;
            for g in Generator::ALL {
                let defect = self.regularity_defect(&lam, g)?;
                for (i, comp) in defect.c.iter().enumerate() {
                    for (mono, c) in comp.iter() {
                        let n = rows.len();
                        let r = *rows.entry((g.index(), i, *mono)).or_insert(n);
                        entries.push((r, col, c.clone()));
                    }
                }
            }
        }
        let mut a: Matrix<S> = Matrix::zeros(rows.len(), unknowns.len());
        for (r, c, v) in entries {
            a[(r, c)] = a[(r, c)].clone() + v;
        }
        let mut solutions = Vec::new();
        for v in a.nullspace() {
            let mut x = AlgebraElement::zero();
            let mut y = AlgebraElement::zero();
            for (c, &(slot, m)) in v.iter().zip(&unknowns) {
                if c.is_negligible() {
                    continue;
                }
                if slot == MINUS {
                    x.add_term(m, c.clone());
                } else {
                    y.add_term(m, c.clone());
                }
            }
            solutions.push(BaseForm::grade1(x, y)?);
        }
        Ok(RegularSolutions { max_length, unknowns: unknowns.len(), equations: rows.len(), solutions })
    }
}

/// `m eta_-` (slot `MINUS`) or `m eta_+` (slot `PLUS`).
pub fn unit_displacement<S: Scalar>(slot: usize, m: Monomial) -> Result<BaseForm<S>> {
    let e = AlgebraElement::monomial(m);
    match slot {
        MINUS => BaseForm::grade1(e, AlgebraElement::zero()),
        PLUS => BaseForm::grade1(AlgebraElement::zero(), e),
        _ => Err(Error::Invalid(format!("no horizontal slot {slot}"))),
    }
}
