use serde::Serialize;

use crate::coefficients::q_binomial;
use crate::quantum_group::{AlgebraElement, Monomial, QuantumGroup};
use crate::{Result, Scalar, ScalarQ};

/// Column data generating the degree-`n` sections.
///
/// Only the squares of the q-binomial coefficients are stored.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSet {
    pub n: i32,
    pub squared_coeffs: Vec<ScalarQ>,
    pub monomials: Vec<Monomial>,
    pub z: Vec<ScalarQ>,
}

/// `n >= 0`: `alpha^{n-k} gamma^k` with `binom_{q^-2}(n, k)` and `Z = q^{2k}`.
/// `n < 0`: `alpha*^{N-k} gamma*^k` with `binom_{q^2}(N, k) q^{2k}` and `Z = q^{-2k}`.
pub fn generator_set(n: i32) -> GeneratorSet {
    let big_n = n.unsigned_abs();
    let mut squared_coeffs = Vec::new();
    let mut monomials = Vec::new();
    let mut z = Vec::new();
    for k in 0..=big_n {
        let ki = k as i32;
        if n >= 0 {
            squared_coeffs.push(q_binomial(big_n, k, &ScalarQ::q_pow(-2)));
            monomials.push(Monomial::new(n - ki, k, 0));
            z.push(ScalarQ::q_pow(2 * ki));
        } else {
            squared_coeffs.push(q_binomial(big_n, k, &ScalarQ::q_pow(2)) * ScalarQ::q_pow(2 * ki));
            monomials.push(Monomial::new(-(big_n as i32) + ki, 0, k));
            z.push(ScalarQ::q_pow(-2 * ki));
        }
    }
    GeneratorSet { n, squared_coeffs, monomials, z }
}

impl GeneratorSet {
    /// `(b_k, m_k, Z_k)` evaluated at q.
    pub fn eval_in<S: Scalar>(&self, q: &S) -> Result<Vec<(S, Monomial, S)>> {
        let mut out = Vec::with_capacity(self.monomials.len());
        for k in 0..self.monomials.len() {
            out.push((self.squared_coeffs[k].eval_in(q)?, self.monomials[k], self.z[k].eval_in(q)?));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub n: i32,
    /// `sum_k b_k m_k* m_k = 1`
    pub unitarity: bool,
    /// `sum_k Z_k b_k m_k m_k* = 1`
    pub z_weighted: bool,
}

impl GeneratorReport {
    pub fn passed(&self) -> bool {
        self.unitarity && self.z_weighted
    }
}

pub fn verify_generators<S: Scalar>(group: &QuantumGroup<S>, set: &GeneratorSet) -> Result<GeneratorReport> {
    let mut left = AlgebraElement::zero();
    let mut right = AlgebraElement::zero();
    for (b, m, z) in set.eval_in(group.q())? {
        let me = AlgebraElement::monomial(m);
        let ms = group.star(&me);
        left.add_scaled(&group.mul(&ms, &me), &b);
        right.add_scaled(&group.mul(&me, &ms), &(z * b));
    }
    let one = AlgebraElement::one();
    Ok(GeneratorReport { n: set.n, unitarity: (&left - &one).is_zero(), z_weighted: (&right - &one).is_zero() })
}
