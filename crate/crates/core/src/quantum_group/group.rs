use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use super::element::{AlgebraElement, TensorElement};
use super::monomial::{Generator, Monomial};
use crate::Scalar;

const POW_OFFSET: i32 = 96;

/// The Hopf *-algebra SU_q(2) at a fixed value of q in the field `S`.
///
/// Products and coproducts of monomials are memoised; the caches are
/// filled idempotently and may be shared between threads.
pub struct QuantumGroup<S: Scalar> {
    q: S,
    powers: Vec<S>,
    mul_cache: RwLock<HashMap<(Monomial, Monomial), Arc<AlgebraElement<S>>>>,
    coprod_cache: RwLock<HashMap<Monomial, Arc<TensorElement<S>>>>,
    pub(super) haar_values: RwLock<Vec<S>>,
}

impl<S: Scalar> QuantumGroup<S> {
    pub fn new(q: S) -> Self {
        let mut powers = Vec::with_capacity(2 * POW_OFFSET as usize + 1);
        for e in -POW_OFFSET..=POW_OFFSET {
            powers.push(q.powi(e));
        }
        QuantumGroup {
            q,
            powers,
            mul_cache: RwLock::new(HashMap::new()),
            coprod_cache: RwLock::new(HashMap::new()),
            haar_values: RwLock::new(vec![S::one()]),
        }
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    /// `q^e`
    pub fn qp(&self, e: i32) -> S {
        if e.abs() <= POW_OFFSET {
            self.powers[(e + POW_OFFSET) as usize].clone()
        } else {
            self.q.powi(e)
        }
    }

    /// Right multiplication of a monomial by one generator.
    fn mul_gen(&self, m: Monomial, g: Generator, c: S, out: &mut AlgebraElement<S>) {
        let Monomial { a_power: a, k, l } = m;
        match g {
            Generator::Gamma => out.add_term(Monomial::new(a, k + 1, l), c),
            Generator::GammaStar => out.add_term(Monomial::new(a, k, l + 1), c),
            Generator::Alpha => {
                let c = c * self.qp(-((k + l) as i32));
                if a >= 0 {
                    out.add_term(Monomial::new(a + 1, k, l), c);
                } else {
                    out.add_term(Monomial::new(a + 1, k, l), c.clone());
                    out.add_term(Monomial::new(a + 1, k + 1, l + 1), -c);
                }
            }
            Generator::AlphaStar => {
                let c = c * self.qp((k + l) as i32);
                if a <= 0 {
                    out.add_term(Monomial::new(a - 1, k, l), c);
                } else {
                    out.add_term(Monomial::new(a - 1, k, l), c.clone());
                    out.add_term(Monomial::new(a - 1, k + 1, l + 1), -(c * self.qp(2)));
                }
            }
        }
    }

    /// Right multiplication of an element by a generator.
    pub fn mul_generator(&self, x: &AlgebraElement<S>, g: Generator) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            self.mul_gen(*m, g, c.clone(), &mut out);
        }
        out
    }

    /// PBW normal form of `c * g_1 g_2 ... g_r`.
    pub fn normal_form(&self, word: &[Generator], c: S) -> AlgebraElement<S> {
        let mut acc = AlgebraElement::scalar(c);
        for &g in word {
            acc = self.mul_generator(&acc, g);
        }
        acc
    }

    pub fn mono_mul(&self, a: Monomial, b: Monomial) -> Arc<AlgebraElement<S>> {
        if let Some(v) = self.mul_cache.read().get(&(a, b)) {
            return v.clone();
        }
        let mut acc = AlgebraElement::monomial(a);
        let alpha = if b.a_power >= 0 { Generator::Alpha } else { Generator::AlphaStar };
        for _ in 0..b.a_power.unsigned_abs() {
            acc = self.mul_generator(&acc, alpha);
        }
        let shifted = AlgebraElement::from_terms(acc.iter().map(|(m, c)| (Monomial::new(m.a_power, m.k + b.k, m.l + b.l), c.clone())));
        let v = Arc::new(shifted);
        self.mul_cache.write().entry((a, b)).or_insert(v).clone()
    }

    pub fn mul(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (ma, ca) in x.iter() {
            for (mb, cb) in y.iter() {
                let p = self.mono_mul(*ma, *mb);
                out.add_scaled(&p, &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn product(&self, xs: &[&AlgebraElement<S>]) -> AlgebraElement<S> {
        let mut acc = AlgebraElement::one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn generator(&self, g: Generator) -> AlgebraElement<S> {
        AlgebraElement::monomial(g.monomial())
    }

    pub fn star_monomial(&self, m: Monomial) -> Arc<AlgebraElement<S>> {
        self.mono_mul(Monomial::new(0, m.l, m.k), Monomial::new(-m.a_power, 0, 0))
    }

    /// The involution. Scalars are real, so coefficients are unchanged.
    pub fn star(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.star_monomial(*m), c);
        }
        out
    }

    pub fn counit(&self, x: &AlgebraElement<S>) -> S {
        x.counit()
    }

    pub fn antipode_generator(&self, g: Generator) -> AlgebraElement<S> {
        match g {
            Generator::Alpha => self.generator(Generator::AlphaStar),
            Generator::AlphaStar => self.generator(Generator::Alpha),
            Generator::Gamma => AlgebraElement::term(Monomial::new(0, 1, 0), -self.qp(1)),
            Generator::GammaStar => AlgebraElement::term(Monomial::new(0, 0, 1), -self.qp(-1)),
        }
    }

    /// The antipode, an antihomomorphism.
    pub fn antipode(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            let mut acc = AlgebraElement::one();
            for g in m.word().into_iter().rev() {
                acc = self.mul(&acc, &self.antipode_generator(g));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn coproduct_generator(&self, g: Generator) -> TensorElement<S> {
        let a = Monomial::new(1, 0, 0);
        let ast = Monomial::new(-1, 0, 0);
        let c = Monomial::new(0, 1, 0);
        let cst = Monomial::new(0, 0, 1);
        let mut t = TensorElement::zero();
        match g {
            Generator::Alpha => {
                t.add_term(a, a, S::one());
                t.add_term(cst, c, -self.qp(1));
            }
            Generator::AlphaStar => {
                t.add_term(ast, ast, S::one());
                t.add_term(c, cst, -self.qp(1));
            }
            Generator::Gamma => {
                t.add_term(c, a, S::one());
                t.add_term(ast, c, S::one());
            }
            Generator::GammaStar => {
                t.add_term(cst, ast, S::one());
                t.add_term(a, cst, S::one());
            }
        }
        t
    }

    pub fn tensor_mul(&self, x: &TensorElement<S>, y: &TensorElement<S>) -> TensorElement<S> {
        self.tensor_mul_truncated(x, y, u32::MAX)
    }

    /// Tensor product, dropping terms whose second leg has `k + l` above
    /// the bound. Right multiplication never lowers `k` or `l`, so the
    /// surviving coefficients are exact.
    pub fn tensor_mul_truncated(&self, x: &TensorElement<S>, y: &TensorElement<S>, max_kl: u32) -> TensorElement<S> {
        let mut out = TensorElement::zero();
        for ((a1, b1), c1) in x.terms() {
            for ((a2, b2), c2) in y.terms() {
                let right = self.mono_mul(*b1, *b2);
                if right.iter().all(|(m, _)| m.k + m.l > max_kl) {
                    continue;
                }
                let left = self.mono_mul(*a1, *a2);
                let c = c1.clone() * c2.clone();
                for (ml, vl) in left.iter() {
                    for (mr, vr) in right.iter() {
                        if mr.k + mr.l > max_kl {
                            continue;
                        }
                        out.add_term(*ml, *mr, c.clone() * vl.clone() * vr.clone());
                    }
                }
            }
        }
        out
    }

    pub fn coproduct_monomial(&self, m: Monomial) -> Arc<TensorElement<S>> {
        if let Some(v) = self.coprod_cache.read().get(&m) {
            return v.clone();
        }
        let t = match m.split_last() {
            None => TensorElement::pure(Monomial::ONE, Monomial::ONE, S::one()),
            Some((prefix, g)) => self.tensor_mul(&self.coproduct_monomial(prefix), &self.coproduct_generator(g)),
        };
        let v = Arc::new(t);
        self.coprod_cache.write().entry(m).or_insert(v).clone()
    }

    pub fn coproduct(&self, x: &AlgebraElement<S>) -> TensorElement<S> {
        let mut out = TensorElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.coproduct_monomial(*m), c);
        }
        out
    }

    /// Coproduct keeping only second legs with `k + l <= max_kl`.
    pub fn coproduct_truncated(&self, m: Monomial, max_kl: u32) -> TensorElement<S> {
        let mut acc = TensorElement::pure(Monomial::ONE, Monomial::ONE, S::one());
        for g in m.word() {
            acc = self.tensor_mul_truncated(&acc, &self.coproduct_generator(g), max_kl);
        }
        acc
    }

    /// Applies `f (x) g` and multiplies the legs.
    pub fn contract(
        &self,
        t: &TensorElement<S>,
        f: impl Fn(&Monomial) -> AlgebraElement<S>,
        g: impl Fn(&Monomial) -> AlgebraElement<S>,
    ) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in t.terms() {
            out.add_scaled(&self.mul(&f(a), &g(b)), c);
        }
        out
    }

    /// Applies `x (x) y -> x * y` after mapping the legs.
    pub fn tensor_map(
        &self,
        t: &TensorElement<S>,
        f: impl Fn(&Monomial) -> AlgebraElement<S>,
        g: impl Fn(&Monomial) -> AlgebraElement<S>,
    ) -> TensorElement<S> {
        let mut out = TensorElement::zero();
        for ((a, b), c) in t.terms() {
            let fa = f(a);
            let gb = g(b);
            for (ma, va) in fa.iter() {
                for (mb, vb) in gb.iter() {
                    out.add_term(*ma, *mb, c.clone() * va.clone() * vb.clone());
                }
            }
        }
        out
    }

    /// Number of memoised monomial products (diagnostics).
    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.mul_cache.read().len(), self.coprod_cache.read().len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ScalarQ;
    use num_traits::One;

    fn g() -> QuantumGroup<ScalarQ> {
        QuantumGroup::new(ScalarQ::q())
    }

    fn mono(a: i32, k: u32, l: u32) -> AlgebraElement<ScalarQ> {
        AlgebraElement::monomial(Monomial::new(a, k, l))
    }

    #[test]
    fn relations() {
        let g = g();
        use Generator::*;
        assert_eq!(g.normal_form(&[AlphaStar, Alpha], ScalarQ::one()), &mono(0, 0, 0) - &mono(0, 1, 1));
        assert_eq!(g.normal_form(&[Gamma, Alpha], ScalarQ::one()), mono(1, 1, 0).scale(&ScalarQ::q_pow(-1)));
        assert_eq!(g.normal_form(&[], ScalarQ::one()), AlgebraElement::one());
        let aa = g.normal_form(&[Alpha, AlphaStar], ScalarQ::one());
        assert_eq!(aa, &mono(0, 0, 0) - &mono(0, 1, 1).scale(&ScalarQ::q_pow(2)));
    }

    #[test]
    fn star_example() {
        let g = g();
        assert_eq!(g.star(&mono(1, 0, 1)), mono(-1, 1, 0).scale(&ScalarQ::q()));
    }

    #[test]
    fn square_of_alpha_alpha_star() {
        let g = g();
        let x = g.mul(&mono(1, 0, 0), &mono(-1, 0, 0));
        let sq = g.mul(&x, &x);
        let expect = AlgebraElement::from_terms([
            (Monomial::ONE, ScalarQ::one()),
            (Monomial::new(0, 1, 1), ScalarQ::from_int(-2) * ScalarQ::q_pow(2)),
            (Monomial::new(0, 2, 2), ScalarQ::q_pow(4)),
        ]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn coproduct_and_antipode_of_generators() {
        let g = g();
        let t = g.coproduct(&mono(1, 0, 0));
        assert_eq!(t.len(), 2);
        assert_eq!(g.antipode(&mono(0, 1, 0)), mono(0, 1, 0).scale(&-ScalarQ::q()));
    }
}
