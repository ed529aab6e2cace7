//! The germs map and the right action on invariant forms, extended from
//! generator tables by the recursion `pi(ab) = eps(a) pi(b) + pi(a) o b`.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::quantum_group::{AlgebraElement, Generator, Monomial};
use crate::Scalar;

/// `rho(b) = [[eps(b), lambda(b)], [0, f(b)]]`, a 4x4 scalar matrix.
/// `rho(ab) = rho(a) rho(b)`.
pub type Rho<S> = [[S; 4]; 4];

pub(crate) fn rho_identity<S: Scalar>() -> Rho<S> {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { S::one() } else { S::zero() }))
}

pub(crate) fn rho_mul<S: Scalar>(a: &Rho<S>, b: &Rho<S>) -> Rho<S> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(S::zero(), |acc, k| {
            if a[i][k].is_zero() || b[k][j].is_zero() {
                acc
            } else {
                acc + a[i][k].clone() * b[k][j].clone()
            }
        }))
    })
}

/// Germs `lambda_i(g)` and twists `f_ji(g)` (with `eta_j o g = sum_i f_ji(g) eta_i`)
/// on generators, extended multiplicatively.
pub struct GermMaps<S: Scalar> {
    gens: [Rho<S>; 4],
    memo: RwLock<HashMap<Monomial, Arc<Rho<S>>>>,
}

impl<S: Scalar> GermMaps<S> {
    pub fn new(germs: &[[S; 3]; 4], circ: &[[[S; 3]; 3]; 4]) -> Self {
        let gens = std::array::from_fn(|g| {
            let mut r = rho_identity::<S>();
            r[0][0] = AlgebraElement::<S>::monomial(Generator::ALL[g].monomial()).counit();
            for i in 0..3 {
                r[0][1 + i] = germs[g][i].clone();
                for j in 0..3 {
                    r[1 + j][1 + i] = circ[g][j][i].clone();
                }
            }
            r
        });
        GermMaps { gens, memo: RwLock::new(HashMap::new()) }
    }

    pub fn generator(&self, g: Generator) -> &Rho<S> {
        &self.gens[g.index()]
    }

    pub fn rho(&self, m: Monomial) -> Arc<Rho<S>> {
        if let Some(r) = self.memo.read().get(&m) {
            return r.clone();
        }
        let r = match m.split_last() {
            None => rho_identity(),
            Some((prefix, g)) => rho_mul(&self.rho(prefix), self.generator(g)),
        };
        self.memo.write().entry(m).or_insert_with(|| Arc::new(r)).clone()
    }

    /// Coordinates of `pi(x)`.
    pub fn lambda(&self, x: &AlgebraElement<S>) -> [S; 3] {
        let mut out: [S; 3] = std::array::from_fn(|_| S::zero());
        for (m, c) in x.iter() {
            let r = self.rho(*m);
            for i in 0..3 {
                if !r[0][1 + i].is_zero() {
                    out[i] = out[i].clone() + c.clone() * r[0][1 + i].clone();
                }
            }
        }
        out
    }

    pub fn lambda_monomial(&self, m: Monomial) -> [S; 3] {
        let r = self.rho(m);
        std::array::from_fn(|i| r[0][1 + i].clone())
    }

    /// `theta o x` for an invariant form with coordinates `theta`.
    pub fn circ(&self, theta: &[S; 3], x: &AlgebraElement<S>) -> [S; 3] {
        let mut out: [S; 3] = std::array::from_fn(|_| S::zero());
        for (m, c) in x.iter() {
            let r = self.rho(*m);
            for j in 0..3 {
                if theta[j].is_zero() {
                    continue;
                }
                for i in 0..3 {
                    if !r[1 + j][1 + i].is_zero() {
                        out[i] = out[i].clone() + c.clone() * theta[j].clone() * r[1 + j][1 + i].clone();
                    }
                }
            }
        }
        out
    }
}
