//! Structural verification suites shared by the command line and the tests.
//!
//! Every check returns a [`CheckOutcome`] rather than panicking, so callers
//! can report all failures at once.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bundles::{generator_set, verify_generators};
use crate::calculus::Geometry;
use crate::linalg::{is_positive_definite, Matrix};
use crate::quantum_group::{AlgebraElement, Generator, Monomial, QuantumGroup};
use crate::sphere::BaseForm;
use crate::{Result, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, failures: usize, total: usize) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: failures == 0 && total > 0,
            detail: format!("{failures} failures out of {total}"),
        }
    }

    pub fn from_result(name: &str, r: Result<CheckOutcome>) -> Self {
        r.unwrap_or_else(|e| CheckOutcome { name: name.to_string(), passed: false, detail: format!("error: {e}") })
    }
}

/// All words in the four generators of length at most `max_len`.
fn words(max_len: u32) -> Vec<Vec<Generator>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 4);
        for w in &frontier {
            for g in Generator::ALL {
                let mut v: Vec<Generator> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Left-to-right and right-to-left reduction of every word agree.
pub fn confluence<S: Scalar>(g: &QuantumGroup<S>, max_len: u32) -> CheckOutcome {
    let all = words(max_len);
    let failures = all
        .par_iter()
        .filter(|w| {
            let left = g.normal_form(w, S::one());
            let mut right = AlgebraElement::one();
            for &x in w.iter().rev() {
                right = g.mul(&g.generator(x), &right);
            }
            left != right
        })
        .count();
    CheckOutcome::new("rewrite confluence", failures, all.len())
}

type Triple<S> = BTreeMap<(Monomial, Monomial, Monomial), S>;

fn add3<S: Scalar>(t: &mut Triple<S>, key: (Monomial, Monomial, Monomial), c: S) {
    let v = t.entry(key).or_insert_with(S::zero);
    *v = v.clone() + c;
    if v.is_negligible() {
        t.remove(&key);
    }
}

fn coassociativity<S: Scalar>(g: &QuantumGroup<S>, m: Monomial) -> bool {
    let d = g.coproduct_monomial(m);
    let mut left: Triple<S> = BTreeMap::new();
    let mut right: Triple<S> = BTreeMap::new();
    for ((a, b), c) in d.terms() {
        for ((a1, a2), c1) in g.coproduct_monomial(*a).terms() {
            add3(&mut left, (*a1, *a2, *b), c.clone() * c1.clone());
        }
        for ((b1, b2), c2) in g.coproduct_monomial(*b).terms() {
            add3(&mut right, (*a, *b1, *b2), c.clone() * c2.clone());
        }
    }
    left == right
}

/// Coassociativity, counit, antipode, multiplicativity of the coproduct and
/// its compatibility with the star, on all monomials of length at most
/// `filtration`.
pub fn hopf_axioms<S: Scalar>(g: &QuantumGroup<S>, filtration: u32) -> Vec<CheckOutcome> {
    let monos = Monomial::all_up_to(filtration);
    let count = |pred: &(dyn Fn(Monomial) -> bool + Sync)| monos.par_iter().filter(|m| !pred(**m)).count();
    let coassoc = count(&|m| coassociativity(g, m));
    let counit = count(&|m| {
        let d = g.coproduct_monomial(m);
        let l = g.contract(&d, |a| AlgebraElement::scalar(AlgebraElement::<S>::monomial(*a).counit()), |b| AlgebraElement::monomial(*b));
        let r = g.contract(&d, |a| AlgebraElement::monomial(*a), |b| AlgebraElement::scalar(AlgebraElement::<S>::monomial(*b).counit()));
        let e = AlgebraElement::monomial(m);
        l == e && r == e
    });
    let antipode = count(&|m| {
        let d = g.coproduct_monomial(m);
        let eps = AlgebraElement::scalar(AlgebraElement::<S>::monomial(m).counit());
        let l = g.contract(&d, |a| g.antipode(&AlgebraElement::monomial(*a)), |b| AlgebraElement::monomial(*b));
        let r = g.contract(&d, |a| AlgebraElement::monomial(*a), |b| g.antipode(&AlgebraElement::monomial(*b)));
        l == eps && r == eps
    });
    let shorter: Vec<Monomial> = Monomial::all_up_to(filtration.saturating_sub(1));
    let mult_fail = shorter
        .par_iter()
        .map(|m| {
            Generator::ALL
                .iter()
                .filter(|&&x| {
                    let gx = g.generator(x);
                    let em = AlgebraElement::monomial(*m);
                    let lhs = g.coproduct(&g.mul(&gx, &em));
                    let rhs = g.tensor_mul(&g.coproduct_generator(x), &g.coproduct_monomial(*m));
                    lhs != rhs
                })
                .count()
        })
        .sum();
    let star = count(&|m| {
        let lhs = g.coproduct(&g.star_monomial(m));
        let rhs = g.tensor_map(&g.coproduct_monomial(m), |a| g.star_monomial(*a).as_ref().clone(), |b| g.star_monomial(*b).as_ref().clone());
        lhs == rhs
    });
    vec![
        CheckOutcome::new("coassociativity", coassoc, monos.len()),
        CheckOutcome::new("counit", counit, monos.len()),
        CheckOutcome::new("antipode", antipode, monos.len()),
        CheckOutcome::new("coproduct multiplicative", mult_fail, shorter.len() * 4),
        CheckOutcome::new("coproduct star-compatible", star, monos.len()),
    ]
}

/// `d^2 = 0` on total forms built from every monomial of length at most
/// `max_len`, and on the base complex for degree-0 monomials.
pub fn d_squared<S: Scalar>(geo: &Geometry<S>, max_len: u32) -> Result<CheckOutcome> {
    let monos = Monomial::all_up_to(max_len);
    let total = monos.par_iter().filter(|m| !geo.d1(&geo.differential(&AlgebraElement::monomial(**m))).is_zero()).count();
    let base: Vec<Monomial> = Monomial::of_degree(0, max_len);
    let mut base_fail = 0;
    for m in &base {
        let f = BaseForm::grade0(AlgebraElement::monomial(*m))?;
        if !geo.base_d(&geo.base_d(&f)?)?.is_zero() {
            base_fail += 1;
        }
    }
    Ok(CheckOutcome::new("d^2 = 0", total + base_fail, monos.len() + base.len()))
}

/// A homogeneous element of the given degree with `terms` random monomials
/// of length at most `max_len` and small integer coefficients.
pub fn random_homogeneous<S: Scalar>(rng: &mut impl Rng, degree: i32, max_len: u32, terms: usize) -> AlgebraElement<S> {
    let pool = Monomial::of_degree(degree, max_len);
    let mut out = AlgebraElement::zero();
    if pool.is_empty() {
        return out;
    }
    for _ in 0..terms {
        let m = pool[rng.gen_range(0..pool.len())];
        let mut c = rng.gen_range(-5i64..=5);
        if c == 0 {
            c = 1;
        }
        out.add_term(m, S::from_i64(c));
    }
    out
}

/// A random degree-correct base form of the given grade.
pub fn random_base_form<S: Scalar>(rng: &mut impl Rng, grade: u8, max_len: u32) -> Result<BaseForm<S>> {
    let terms = rng.gen_range(1..=3);
    match grade {
        0 => BaseForm::grade0(random_homogeneous(rng, 0, max_len, terms)),
        1 => {
            let x = random_homogeneous(rng, 2, max_len, terms);
            let ty = rng.gen_range(0..=2);
            let y = random_homogeneous(rng, -2, max_len, ty);
            BaseForm::grade1(x, y)
        }
        _ => BaseForm::grade2(random_homogeneous(rng, 0, max_len, terms)),
    }
}

/// Stokes: the integral of an exact 2-form vanishes.
pub fn stokes<S: Scalar>(geo: &Geometry<S>, samples: usize, max_len: u32, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forms: Vec<BaseForm<S>> = (0..samples).map(|_| random_base_form(&mut rng, 1, max_len)).collect::<Result<_>>()?;
    let fails: Vec<bool> = forms
        .par_iter()
        .map(|phi| Ok(!geo.integral(&geo.base_d(phi)?)?.is_negligible()))
        .collect::<Result<_>>()?;
    Ok(CheckOutcome::new("Stokes", fails.iter().filter(|f| **f).count(), samples))
}

/// Left and right invariance of the Haar state on all monomials of length
/// at most `max_len`.
pub fn haar_invariance<S: Scalar>(g: &QuantumGroup<S>, max_len: u32) -> CheckOutcome {
    let monos = Monomial::all_up_to(max_len);
    let fails = monos
        .par_iter()
        .filter(|m| {
            let x = AlgebraElement::monomial(**m);
            let h = AlgebraElement::scalar(g.haar(&x));
            g.haar_left_leg(&x) != h || g.haar_right_leg(&x) != h
        })
        .count();
    CheckOutcome::new("Haar invariance", fails, monos.len())
}

/// Generator identities for `|n| <= max_n`.
pub fn generators<S: Scalar>(g: &QuantumGroup<S>, max_n: i32) -> Result<CheckOutcome> {
    let mut fails = 0;
    let mut total = 0;
    for n in -max_n..=max_n {
        let r = verify_generators(g, &generator_set(n))?;
        total += 1;
        if !r.passed() {
            fails += 1;
        }
    }
    Ok(CheckOutcome::new("generator identities", fails, total))
}

/// `<d phi | psi> = <phi | d* psi>` on random pairs, for both codifferential
/// grades.
pub fn codifferential_adjointness<S: Scalar>(geo: &Geometry<S>, samples: usize, max_len: u32, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..samples {
        let k = 1 + (i % 2) as u8;
        pairs.push((random_base_form::<S>(&mut rng, k - 1, max_len)?, random_base_form::<S>(&mut rng, k, max_len)?));
    }
    let fails: Vec<bool> = pairs
        .par_iter()
        .map(|(phi, psi)| {
            let lhs = geo.global_inner(&geo.base_d(phi)?, psi)?;
            let rhs = geo.global_inner(phi, &geo.codifferential_left(psi)?)?;
            Ok(!(lhs - rhs).is_negligible())
        })
        .collect::<Result<_>>()?;
    Ok(CheckOutcome::new("codifferential adjointness", fails.iter().filter(|f| **f).count(), samples))
}

/// `star_L^2` is the identity on grades 0 and 2 and `-1/4` on grade 1.
pub fn hodge_square<S: Scalar>(geo: &Geometry<S>, samples: usize, max_len: u32, seed: u64) -> Result<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quarter = -(S::one() / S::from_i64(4));
    let mut fails = 0;
    for i in 0..samples {
        let k = (i % 3) as u8;
        let phi = random_base_form::<S>(&mut rng, k, max_len)?;
        let twice = geo.hodge_left(&geo.hodge_left(&phi)?)?;
        let expected = if k == 1 { phi.scale(&quarter) } else { phi };
        if !twice.sub(&expected)?.is_zero() {
            fails += 1;
        }
    }
    Ok(CheckOutcome::new("star_L squared", fails, samples))
}

/// Positive definiteness of `h(m_i m_j*)` on the monomials of length at
/// most `max_len`, at a rational `q`.
pub fn gram_positivity(q: &BigRational, max_len: u32) -> CheckOutcome {
    let g = QuantumGroup::new(q.clone());
    let monos = Monomial::all_up_to(max_len);
    let gram = Matrix::from_fn(monos.len(), monos.len(), |i, j| {
        g.haar(&g.mul(&AlgebraElement::monomial(monos[i]), &g.star_monomial(monos[j])))
    });
    let ok = is_positive_definite(&gram);
    CheckOutcome {
        name: format!("Gram positivity at q = {q}"),
        passed: ok,
        detail: format!("{} x {} Gram matrix", monos.len(), monos.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ScalarQ;

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(words(0).len(), 1);
        assert_eq!(words(2).len(), 1 + 4 + 16);
    }

    #[test]
    fn random_forms_are_degree_correct() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..3 {
            for _ in 0..20 {
                random_base_form::<ScalarQ>(&mut rng, k, 5).unwrap().validate().unwrap();
            }
        }
    }

    #[test]
    fn confluence_short_words() {
        let g = QuantumGroup::new(ScalarQ::q());
        assert!(confluence(&g, 4).passed);
    }

    #[test]
    fn gram_positive_at_half() {
        assert!(gram_positivity(&BigRational::new(1.into(), 2.into()), 2).passed);
    }
}
