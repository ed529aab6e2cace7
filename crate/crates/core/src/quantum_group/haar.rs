//! The Haar state, derived from left invariance.
//!
//! `h` vanishes off the monomials `(gamma gamma*)^k`; the values
//! `h_k = h((gamma gamma*)^k)` are found by solving
//! `(h (x) id) phi((gamma gamma*)^j) = h_j 1` for `j = 1, 2, ...`.

use std::collections::BTreeMap;

use super::element::AlgebraElement;
use super::group::QuantumGroup;
use super::monomial::Monomial;
use crate::linalg::Matrix;
use crate::Scalar;

impl<S: Scalar> QuantumGroup<S> {
    /// `h((gamma gamma*)^k)`.
    pub fn haar_gamma_power(&self, k: u32) -> S {
        if let Some(v) = self.haar_values.read().get(k as usize) {
            return v.clone();
        }
        let target = (k as usize + 1).max(2 * self.haar_values.read().len());
        let solved = self.solve_haar(target as u32 - 1);
        let mut w = self.haar_values.write();
        if w.len() < solved.len() {
            *w = solved;
        }
        w[k as usize].clone()
    }

    /// Solves the invariance system for `h_1 .. h_kmax`.
    pub fn solve_haar(&self, kmax: u32) -> Vec<S> {
        let mut m = kmax.max(1);
        loop {
            // Row per (j, second-leg monomial); column i-1 for unknown h_i.
            let mut rows: Vec<(BTreeMap<u32, S>, S)> = Vec::new();
            let mut max_index = 0;
            for j in 1..=m {
                let t = self.coproduct_truncated(Monomial::new(0, j, j), 2);
                let mut eqs: BTreeMap<Monomial, (BTreeMap<u32, S>, S)> = BTreeMap::new();
                for ((m1, m2), c) in t.terms() {
                    if m1.a_power != 0 || m1.k != m1.l {
                        continue;
                    }
                    let e = eqs.entry(*m2).or_insert_with(|| (BTreeMap::new(), S::zero()));
                    if m1.k == 0 {
                        e.1 = e.1.clone() - c.clone();
                    } else {
                        max_index = max_index.max(m1.k);
                        let slot = e.0.entry(m1.k).or_insert_with(S::zero);
                        *slot = slot.clone() + c.clone();
                    }
                }
                let e = eqs.entry(Monomial::ONE).or_insert_with(|| (BTreeMap::new(), S::zero()));
                let slot = e.0.entry(j).or_insert_with(S::zero);
                *slot = slot.clone() - S::one();
                rows.extend(eqs.into_values());
            }
            if max_index > m {
                m = max_index;
                continue;
            }
            let a = Matrix::from_fn(rows.len(), m as usize, |r, c| rows[r].0.get(&(c as u32 + 1)).cloned().unwrap_or_else(S::zero));
            let b: Vec<S> = rows.iter().map(|r| r.1.clone()).collect();
            let x = a.solve(&b).expect("Haar invariance system is consistent");
            let ns = a.nullspace();
            let determined = (0..kmax as usize).all(|i| ns.iter().all(|v| v[i].is_negligible()));
            if !determined {
                m += 2;
                continue;
            }
            let mut out = vec![S::one()];
            out.extend(x.into_iter().take(kmax as usize));
            return out;
        }
    }

    pub fn haar_monomial(&self, m: &Monomial) -> S {
        if m.a_power != 0 || m.k != m.l {
            return S::zero();
        }
        self.haar_gamma_power(m.k)
    }

    pub fn haar(&self, x: &AlgebraElement<S>) -> S {
        x.iter().fold(S::zero(), |acc, (m, c)| acc + c.clone() * self.haar_monomial(m))
    }

    /// `(h (x) id) phi(x)`
    pub fn haar_left_leg(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let t = self.coproduct(x);
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in t.terms() {
            let h = self.haar_monomial(a);
            if !h.is_negligible() {
                out.add_term(*b, c.clone() * h);
            }
        }
        out
    }

    /// `(id (x) h) phi(x)`
    pub fn haar_right_leg(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let t = self.coproduct(x);
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in t.terms() {
            let h = self.haar_monomial(b);
            if !h.is_negligible() {
                out.add_term(*a, c.clone() * h);
            }
        }
        out
    }
}
