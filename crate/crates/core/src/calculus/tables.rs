//! Derivation of the calculus tables over Q(q).
//!
//! Everything here is computed once, exactly, and then evaluated into the
//! working scalar field by [`CalculusTables::eval_in`].

use num_traits::Zero;
use serde::Serialize;

use super::germs::{adopted_ideal, GermQuotient};
use super::maps::GermMaps;
use crate::linalg::Matrix;
use crate::quantum_group::{AlgebraElement, Generator, Monomial, QuantumGroup};
use crate::{Error, Result, Scalar, ScalarQ};

pub const MINUS: usize = 0;
pub const ZERO: usize = 1;
pub const PLUS: usize = 2;

/// Invariant 2-form basis as index pairs into `eta_i ^ eta_j`:
/// `dvol = eta_- eta_+`, then the two vertical forms `eta_- eta_0`, `eta_0 eta_+`.
pub const TWO_FORM_BASIS: [(usize, usize); 3] = [(MINUS, PLUS), (MINUS, ZERO), (ZERO, PLUS)];

/// Coset representatives `gamma*`, `alpha - 1`, `gamma` of the three classes.
pub fn representatives<S: Scalar>() -> [AlgebraElement<S>; 3] {
    let mut a = AlgebraElement::monomial(Monomial::new(1, 0, 0));
    a.add_term(Monomial::ONE, -S::one());
    [AlgebraElement::monomial(Monomial::new(0, 0, 1)), a, AlgebraElement::monomial(Monomial::new(0, 1, 0))]
}

/// Germ quotient data before normalisation of the basis.
pub struct GermsData {
    pub ideal_generators: Vec<AlgebraElement<ScalarQ>>,
    pub basis_choice: [AlgebraElement<ScalarQ>; 3],
    /// `(D, dim (ker eps)/R)` for each filtration that was checked.
    pub quotient_dims: Vec<(u32, usize)>,
    /// Class coordinates of each generator, indexed by `Generator::index`.
    pub raw_germs: [[ScalarQ; 3]; 4],
    /// `raw_circ[g][j][i]`: coordinate `i` of the class of `rep_j * g`.
    pub raw_circ: [[[ScalarQ; 3]; 3]; 4],
    pub quotient: GermQuotient<ScalarQ>,
}

impl GermsData {
    pub fn derive(group: &QuantumGroup<ScalarQ>, ideal: Vec<AlgebraElement<ScalarQ>>, filtration: u32) -> Result<Self> {
        if let Some(r) = ideal.iter().find(|r| !r.counit().is_zero()) {
            return Err(Error::Convention(format!("ideal generator {r} is not in ker eps")));
        }
        let mut quotient_dims = Vec::new();
        let mut last = None;
        for d in 2..=filtration.max(2) {
            let qt = GermQuotient::build(group, &ideal, d);
            quotient_dims.push((d, qt.dimension()));
            if qt.dimension() != 3 {
                return Err(Error::Convention(format!("quotient dimension {} at filtration {d}", qt.dimension())));
            }
            last = Some(qt);
        }
        let quotient = last.expect("at least one filtration");
        let reps = representatives::<ScalarQ>();
        let mut raw_germs: [[ScalarQ; 3]; 4] = Default::default();
        let mut raw_circ: [[[ScalarQ; 3]; 3]; 4] = Default::default();
        for g in Generator::ALL {
            let ge = group.generator(g);
            raw_germs[g.index()] = quotient.reduce(&ge)?;
            for (j, rep) in reps.iter().enumerate() {
                raw_circ[g.index()][j] = quotient.reduce(&group.mul(rep, &ge))?;
            }
        }
        Ok(GermsData { ideal_generators: ideal, basis_choice: reps, quotient_dims, raw_germs, raw_circ, quotient })
    }

    pub fn adopted(group: &QuantumGroup<ScalarQ>) -> Result<Self> {
        Self::derive(group, adopted_ideal(group), 4)
    }
}

/// The 1D calculus on U(1): `varsigma = pi'(z - z*)`.
#[derive(Clone, Debug, Serialize)]
pub struct CircleCalculus<S> {
    /// Coefficient of `varsigma` in `pi'(z)`.
    pub germ_z: S,
    pub germ_zstar: S,
    /// `varsigma o z = circ_z varsigma`.
    pub circ_z: S,
    pub circ_zstar: S,
}

impl CircleCalculus<ScalarQ> {
    /// Solves `pi'(z z*) = 0` and `pi'(z - z*) = varsigma` given the twists.
    pub fn derive() -> Self {
        let circ_z = ScalarQ::q_pow(-2);
        let circ_zstar = ScalarQ::q_pow(2);
        // pi'(z z*) = pi'(z*) + circ_zstar pi'(z) = 0
        let germ_z = (ScalarQ::from_int(1) + circ_zstar.clone()).recip().expect("1 + q^2 != 0");
        let germ_zstar = -(circ_zstar.clone() * germ_z.clone());
        CircleCalculus { germ_z, germ_zstar, circ_z, circ_zstar }
    }
}

impl<S: Scalar> CircleCalculus<S> {
    /// `varsigma`-coordinate of `pi'(z^n)`; negative `n` means `z*^{|n|}`.
    pub fn coupling(&self, n: i32) -> S {
        let (g, c) = if n >= 0 { (&self.germ_z, &self.circ_z) } else { (&self.germ_zstar, &self.circ_zstar) };
        let mut acc = S::zero();
        for _ in 0..n.unsigned_abs() {
            acc = g.clone() + c.clone() * acc;
        }
        acc
    }

    pub fn eval_in<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<CircleCalculus<T>> {
        Ok(CircleCalculus { germ_z: f(&self.germ_z)?, germ_zstar: f(&self.germ_zstar)?, circ_z: f(&self.circ_z)?, circ_zstar: f(&self.circ_zstar)? })
    }
}

/// Normalised calculus tables.
#[derive(Clone, Debug)]
pub struct CalculusTables<S> {
    /// `eta_i = [rep_i] / scales[i]`.
    pub scales: [S; 3],
    /// `lambda_i(g)`.
    pub germs: [[S; 3]; 4],
    /// `circ[g][j][i]`: `eta_j o g = sum_i circ[g][j][i] eta_i`.
    pub circ: [[[S; 3]; 3]; 4],
    /// `wedge[i][j]`: coordinates of `eta_i ^ eta_j` in [`TWO_FORM_BASIS`].
    pub wedge: [[[S; 3]; 3]; 3],
    /// `d_eta[j]`: coordinates of `d eta_j`.
    pub d_eta: [[S; 3]; 3],
    /// `star1[j]`: coordinates of `eta_j*`.
    pub star1: [[S; 3]; 3],
    pub circle: CircleCalculus<S>,
    /// `(relation word length, dim Omega^2_inv)`.
    pub omega2_dims: Vec<(u32, usize)>,
}

fn zero3<S: Scalar>() -> [S; 3] {
    std::array::from_fn(|_| S::zero())
}

/// Reduction of `Omega^1_inv (x) Omega^1_inv` modulo the quadratic relations.
pub struct TwoFormQuotient<S: Scalar> {
    rows: Matrix<S>,
    pivots: Vec<usize>,
    pub dimension: usize,
}

impl<S: Scalar> TwoFormQuotient<S> {
    /// Relations `sum lambda(x_(1)) (x) lambda(x_(2))` for `x = r m`, with `m`
    /// of length at most `word_len`.
    pub fn build(group: &QuantumGroup<S>, maps: &GermMaps<S>, ideal: &[AlgebraElement<S>], word_len: u32) -> Self {
        let mut rels: Vec<Vec<S>> = Vec::new();
        for r in ideal {
            for m in Monomial::all_up_to(word_len) {
                let x = group.mul(r, &AlgebraElement::monomial(m));
                let mut v = vec![S::zero(); 9];
                for ((a, b), c) in group.coproduct(&x).terms() {
                    let la = maps.lambda_monomial(*a);
                    let lb = maps.lambda_monomial(*b);
                    for i in 0..3 {
                        if la[i].is_zero() {
                            continue;
                        }
                        for j in 0..3 {
                            if !lb[j].is_zero() {
                                v[3 * i + j] = v[3 * i + j].clone() + c.clone() * la[i].clone() * lb[j].clone();
                            }
                        }
                    }
                }
                if v.iter().any(|x| !x.is_negligible()) {
                    rels.push(v);
                }
            }
        }
        let basis_cols: Vec<usize> = TWO_FORM_BASIS.iter().map(|&(i, j)| 3 * i + j).collect();
        let mut order: Vec<usize> = (0..9).filter(|c| !basis_cols.contains(c)).collect();
        order.extend(&basis_cols);
        let mut rows = if rels.is_empty() { Matrix::zeros(0, 9) } else { Matrix::from_rows(rels) };
        let pivots = rows.rref_with_order(&order);
        TwoFormQuotient { dimension: 9 - pivots.len(), rows, pivots }
    }

    /// Coordinates of `sum v[3i+j] eta_i eta_j` in the basis, or an error if
    /// the basis forms are not independent.
    pub fn reduce(&self, v: &[S]) -> Result<[S; 3]> {
        let basis_cols: Vec<usize> = TWO_FORM_BASIS.iter().map(|&(i, j)| 3 * i + j).collect();
        if self.dimension != 3 || self.pivots.iter().any(|p| basis_cols.contains(p)) {
            return Err(Error::Convention(format!("Omega^2_inv has dimension {} with pivots {:?}", self.dimension, self.pivots)));
        }
        let mut v = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..9 {
                let x = &self.rows[(r, j)];
                if !x.is_zero() {
                    v[j] = v[j].clone() - f.clone() * x.clone();
                }
            }
        }
        Ok(std::array::from_fn(|b| v[basis_cols[b]].clone()))
    }
}

impl CalculusTables<ScalarQ> {
    /// Normalises the raw germ data with `scales` and derives the 2-form
    /// relations, `d eta_j` and the invariant form star.
    pub fn derive(group: &QuantumGroup<ScalarQ>, data: &GermsData, scales: [ScalarQ; 3]) -> Result<Self> {
        let mut germs: [[ScalarQ; 3]; 4] = Default::default();
        let mut circ: [[[ScalarQ; 3]; 3]; 4] = Default::default();
        for g in 0..4 {
            for i in 0..3 {
                germs[g][i] = scales[i].clone() * data.raw_germs[g][i].clone();
                for j in 0..3 {
                    circ[g][j][i] = scales[i].clone() * data.raw_circ[g][j][i].clone() / scales[j].clone();
                }
            }
        }
        let maps = GermMaps::new(&germs, &circ);
        let mut omega2_dims = Vec::new();
        let mut two = None;
        for len in 1..=2 {
            let t = TwoFormQuotient::build(group, &maps, &data.ideal_generators, len);
            omega2_dims.push((len, t.dimension));
            two = Some(t);
        }
        let two = two.expect("built");
        let mut wedge: [[[ScalarQ; 3]; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut v = vec![ScalarQ::from_int(0); 9];
                v[3 * i + j] = ScalarQ::from_int(1);
                wedge[i][j] = two.reduce(&v)?;
            }
        }
        let reps = representatives::<ScalarQ>();
        let mut d_eta: [[ScalarQ; 3]; 3] = Default::default();
        let mut star1: [[ScalarQ; 3]; 3] = Default::default();
        for j in 0..3 {
            // Maurer-Cartan: d pi(a) = -pi(a_(1)) ^ pi(a_(2))
            let mut acc = zero3::<ScalarQ>();
            for ((a, b), c) in group.coproduct(&reps[j]).terms() {
                let la = maps.lambda_monomial(*a);
                let lb = maps.lambda_monomial(*b);
                for u in 0..3 {
                    for v in 0..3 {
                        let f = c.clone() * la[u].clone() * lb[v].clone();
                        if f.is_zero() {
                            continue;
                        }
                        for t in 0..3 {
                            acc[t] = acc[t].clone() - f.clone() * wedge[u][v][t].clone();
                        }
                    }
                }
            }
            d_eta[j] = acc.map(|x| x / scales[j].clone());
            // pi(a)* = -pi(kappa(a)*)
            let st = group.star(&group.antipode(&reps[j]));
            star1[j] = maps.lambda(&st).map(|x| -x / scales[j].clone());
        }
        Ok(CalculusTables { scales, germs, circ, wedge, d_eta, star1, circle: CircleCalculus::derive(), omega2_dims })
    }

    pub fn eval_in<T: Scalar>(&self, q: &T) -> Result<CalculusTables<T>> {
        let f = |x: &ScalarQ| -> Result<T> { Ok(x.eval_in(q)?) };
        let a3 = |a: &[ScalarQ; 3]| -> Result<[T; 3]> { Ok([f(&a[0])?, f(&a[1])?, f(&a[2])?]) };
        let a33 = |a: &[[ScalarQ; 3]; 3]| -> Result<[[T; 3]; 3]> { Ok([a3(&a[0])?, a3(&a[1])?, a3(&a[2])?]) };
        Ok(CalculusTables {
            scales: a3(&self.scales)?,
            germs: [a3(&self.germs[0])?, a3(&self.germs[1])?, a3(&self.germs[2])?, a3(&self.germs[3])?],
            circ: [a33(&self.circ[0])?, a33(&self.circ[1])?, a33(&self.circ[2])?, a33(&self.circ[3])?],
            wedge: [a33(&self.wedge[0])?, a33(&self.wedge[1])?, a33(&self.wedge[2])?],
            d_eta: a33(&self.d_eta)?,
            star1: a33(&self.star1)?,
            circle: self.circle.eval_in(f)?,
            omega2_dims: self.omega2_dims.clone(),
        })
    }
}

/// Dimension of `Omega^2_inv` for an ideal, with unit scales.
pub fn omega2_dimension(group: &QuantumGroup<ScalarQ>, data: &GermsData) -> usize {
    let maps = GermMaps::new(&data.raw_germs, &data.raw_circ);
    TwoFormQuotient::build(group, &maps, &data.ideal_generators, 2).dimension
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_coupling_is_a_geometric_sum() {
        let c = CircleCalculus::derive();
        let q = ScalarQ::q();
        let one = ScalarQ::from_int(1);
        assert_eq!(c.germ_z.clone() - c.germ_zstar.clone(), one);
        for n in 1..6 {
            let mut s = ScalarQ::from_int(0);
            for j in 0..n {
                s = s + q.pow(-2 * j);
            }
            assert_eq!(c.coupling(n), s / (one.clone() + q.pow(2)));
        }
    }
}
