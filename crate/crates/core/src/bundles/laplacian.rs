//! Covariant derivatives on the associated bundles and their Laplacians,
//! assembled by the Gram-adjoint method.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generators::generator_set;
use crate::calculus::{Geometry, TotalForm1};
use crate::linalg::Matrix;
use crate::quantum_group::{AlgebraElement, Monomial};
use crate::sphere::BaseForm;
use crate::{Error, Result, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Bundle-valued 1-form `x eta_- + y eta_+` for sections of degree `n`
/// (so `deg x = n + 2`, `deg y = n - 2` on the left side).
#[derive(Clone, Debug, PartialEq)]
pub struct BundleForm<S: Scalar> {
    pub x: AlgebraElement<S>,
    pub y: AlgebraElement<S>,
}

impl<S: Scalar> BundleForm<S> {
    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// First monomial of the `(n, a)` chain `alpha^a gamma^{k0+j} gamma*^{l0+j}`.
pub fn chain_start(n: i32, a: i32) -> (u32, u32) {
    let d = n - a;
    (d.max(0) as u32, (-d).max(0) as u32)
}

pub fn chain_monomial(n: i32, a: i32, j: u32) -> Monomial {
    let (k0, l0) = chain_start(n, a);
    Monomial::new(a, k0 + j, l0 + j)
}

/// Assembled Laplacian on the degree-`n` monomials with `|a|, k, l <= N`.
///
/// The matrix is block diagonal in `a`; column `j` holds the image of
/// `basis[j]`.
#[derive(Clone, Debug)]
pub struct SpectralBlock<S: Scalar> {
    pub n: i32,
    pub side: Side,
    pub filtration: u32,
    pub buffer: u32,
    pub basis: Vec<Monomial>,
    pub matrix: Matrix<S>,
    /// `(a, first index, length)` of each chain.
    pub chains: Vec<(i32, usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct EigenPair<S: Scalar> {
    pub leading: Monomial,
    pub eigenvalue: S,
    /// Back-substituted eigenvector, leading coefficient 1.
    pub eigenvector: AlgebraElement<S>,
}

impl<S: Scalar> Geometry<S> {
    /// `D(s) + c_n s lambda(varsigma)`.
    pub fn nabla_left(&self, n: i32, s: &AlgebraElement<S>, lam: Option<&BaseForm<S>>) -> Result<BundleForm<S>> {
        if !s.has_degree(n) {
            return Err(Error::Degree(format!("section must have degree {n}, got {s}")));
        }
        let (mut x, mut y) = self.horizontal_d(s);
        if let Some(lam) = lam {
            let (lx, ly) = lam.components()?;
            let c = self.tables().circle.coupling(n);
            let g = self.group();
            x = &x + &g.mul(s, lx).scale(&c);
            y = &y + &g.mul(s, ly).scale(&c);
        }
        Ok(BundleForm { x, y })
    }

    /// Star conjugate of [`Geometry::nabla_left`] on `s*`.
    pub fn nabla_right(&self, n: i32, s: &AlgebraElement<S>, lam: Option<&BaseForm<S>>) -> Result<BundleForm<S>> {
        if !s.has_degree(n) {
            return Err(Error::Degree(format!("section must have degree {n}, got {s}")));
        }
        let lam_star = match lam {
            Some(l) => Some(self.form_star(l)?),
            None => None,
        };
        let inner = self.nabla_left(-n, &self.group().star(s), lam_star.as_ref())?;
        Ok(self.bundle_form_star(&inner))
    }

    pub fn bundle_form_star(&self, phi: &BundleForm<S>) -> BundleForm<S> {
        let t = self.star1(&self.to_total1(&phi.x, &phi.y));
        BundleForm { x: t.c[0].clone(), y: t.c[2].clone() }
    }

    pub fn section_inner(&self, side: Side, s: &AlgebraElement<S>, t: &AlgebraElement<S>) -> S {
        let g = self.group();
        match side {
            Side::Left => g.haar(&g.mul(s, &g.star(t))),
            Side::Right => g.haar(&g.mul(&g.star(s), t)),
        }
    }

    /// `phi m_k*` for each generator, as base 1-forms with weights `b_k`.
    fn localise(&self, n: i32, phi: &BundleForm<S>) -> Result<Vec<(S, BaseForm<S>)>> {
        let set = generator_set(n);
        let mut out = Vec::new();
        for (b, m, _) in set.eval_in(self.q())? {
            let ms = self.group().star(&AlgebraElement::monomial(m));
            let t: TotalForm1<S> = self.right_mul1(&self.to_total1(&phi.x, &phi.y), &ms);
            if !t.c[1].is_zero() {
                return Err(Error::Convention("bundle form acquired a vertical part".into()));
            }
            out.push((b, BaseForm::grade1(t.c[0].clone(), t.c[2].clone())?));
        }
        Ok(out)
    }

    fn localised_inner(&self, a: &[(S, BaseForm<S>)], b: &[(S, BaseForm<S>)]) -> Result<S> {
        let mut acc = S::zero();
        for ((w, f), (_, g)) in a.iter().zip(b) {
            acc = acc + w.clone() * self.global_inner(f, g)?;
        }
        Ok(acc)
    }

    /// Pairing of degree-`n` bundle-valued 1-forms, computed through the
    /// generators: `sum_k b_k <phi m_k*, psi m_k*>`.
    pub fn bundle_inner(&self, n: i32, phi: &BundleForm<S>, psi: &BundleForm<S>) -> Result<S> {
        self.localised_inner(&self.localise(n, phi)?, &self.localise(n, psi)?)
    }

    /// The right pairing, `<phi*, psi*>` on the conjugate bundle.
    pub fn bundle_inner_right(&self, n: i32, phi: &BundleForm<S>, psi: &BundleForm<S>) -> Result<S> {
        self.bundle_inner(-n, &self.bundle_form_star(phi), &self.bundle_form_star(psi))
    }

    /// Left Laplacian on the chain `(n, a)` with `j = 0..=jmax`.
    pub fn left_chain_matrix(&self, n: i32, a: i32, jmax: u32) -> Result<Arc<Matrix<S>>> {
        if let Some(m) = self.blocks.read().get(&(n, a)) {
            if m.rows() > jmax as usize {
                return Ok(Arc::new(submatrix(m, jmax as usize + 1)));
            }
        }
        let size = jmax as usize + 1;
        let basis: Vec<AlgebraElement<S>> = (0..=jmax).map(|j| AlgebraElement::monomial(chain_monomial(n, a, j))).collect();
        let gram = Matrix::from_fn(size, size, |i, j| self.section_inner(Side::Left, &basis[i], &basis[j]));
        let mut loc = Vec::with_capacity(size);
        for b in &basis {
            loc.push(self.localise(n, &self.nabla_left(n, b, None)?)?);
        }
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            for j in i..size {
                let v = self.localised_inner(&loc[i], &loc[j])?;
                m[(j, i)] = v.clone();
                m[(i, j)] = v;
            }
        }
        let ginv = gram.inverse().ok_or(Error::SingularGram { n })?;
        let x = Arc::new(m.mul(&ginv).transpose());
        let mut w = self.blocks.write();
        let keep = w.get(&(n, a)).is_some_and(|old| old.rows() >= size);
        if !keep {
            w.insert((n, a), x.clone());
        }
        Ok(x)
    }

    /// Chain matrix on either side. The right operator is
    /// `s -> (Delta_{-n}(s*))*`.
    pub fn chain_matrix(&self, side: Side, n: i32, a: i32, jmax: u32) -> Result<Matrix<S>> {
        match side {
            Side::Left => Ok((*self.left_chain_matrix(n, a, jmax)?).clone()),
            Side::Right => {
                let inner = self.left_chain_matrix(-n, -a, jmax)?;
                let g = self.group();
                let c: Vec<S> = (0..=jmax)
                    .map(|j| {
                        let m = chain_monomial(n, a, j);
                        let st = g.star_monomial(m);
                        st.coeff(&chain_monomial(-n, -a, j))
                    })
                    .collect();
                let size = jmax as usize + 1;
                Ok(Matrix::from_fn(size, size, |i, j| c[j].clone() * inner[(i, j)].clone() / c[i].clone()))
            }
        }
    }

    pub fn laplacian_matrix(&self, n: i32, filtration: u32, side: Side, buffer: u32) -> Result<SpectralBlock<S>> {
        let nn = filtration as i32;
        let mut basis = Vec::new();
        let mut chains = Vec::new();
        let mut mats = Vec::new();
        for a in -nn..=nn {
            let (k0, l0) = chain_start(n, a);
            if k0.max(l0) > filtration {
                continue;
            }
            let jmax = filtration - k0.max(l0);
            let big = self.chain_matrix(side, n, a, jmax + buffer)?;
            let m = submatrix(&big, jmax as usize + 1);
            chains.push((a, basis.len(), jmax as usize + 1));
            basis.extend((0..=jmax).map(|j| chain_monomial(n, a, j)));
            mats.push(m);
        }
        let size = basis.len();
        let mut matrix = Matrix::zeros(size, size);
        for ((_, start, len), m) in chains.iter().zip(&mats) {
            for i in 0..*len {
                for j in 0..*len {
                    matrix[(start + i, start + j)] = m[(i, j)].clone();
                }
            }
        }
        Ok(SpectralBlock { n, side, filtration, buffer, basis, matrix, chains })
    }

    /// Assembles the blocks for every `n` in `ns` and every side, computing
    /// the underlying chains in parallel.
    pub fn spectral_blocks(&self, ns: &[i32], filtration: u32, sides: &[Side], buffer: u32) -> Result<Vec<SpectralBlock<S>>> {
        let nn = filtration as i32;
        let mut keys: Vec<(i32, i32, u32)> = Vec::new();
        for &n in ns {
            for a in -nn..=nn {
                let (k0, l0) = chain_start(n, a);
                if k0.max(l0) > filtration {
                    continue;
                }
                let jmax = filtration - k0.max(l0) + buffer;
                for &side in sides {
                    let key = match side {
                        Side::Left => (n, a, jmax),
                        Side::Right => (-n, -a, jmax),
                    };
                    if !keys.contains(&key) {
                        keys.push(key);
                    }
                }
            }
        }
        // Longest chains first for a better spread over the pool.
        keys.sort_by_key(|&(n, a, j)| std::cmp::Reverse(chain_monomial(n, a, j).length()));
        keys.par_iter().try_for_each(|&(n, a, j)| self.left_chain_matrix(n, a, j).map(|_| ()))?;
        let mut out = Vec::new();
        for &n in ns {
            for &side in sides {
                out.push(self.laplacian_matrix(n, filtration, side, buffer)?);
            }
        }
        Ok(out)
    }

    /// Applies the side's Laplacian to a degree-`n` section.
    pub fn apply_laplacian(&self, side: Side, n: i32, s: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        if !s.has_degree(n) {
            return Err(Error::Degree(format!("section must have degree {n}, got {s}")));
        }
        let mut by_chain: BTreeMap<i32, Vec<(u32, S)>> = BTreeMap::new();
        for (m, c) in s.iter() {
            let (k0, _) = chain_start(n, m.a_power);
            by_chain.entry(m.a_power).or_default().push((m.k - k0, c.clone()));
        }
        let mut out = AlgebraElement::zero();
        for (a, terms) in by_chain {
            let jmax = terms.iter().map(|t| t.0).max().unwrap_or(0);
            let x = self.chain_matrix(side, n, a, jmax)?;
            for (j, c) in terms {
                for i in 0..=jmax as usize {
                    let v = &x[(i, j as usize)];
                    if !v.is_negligible() {
                        out.add_term(chain_monomial(n, a, i as u32), c.clone() * v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Eigenvalues on the diagonal and eigenvectors by back-substitution.
    pub fn spectrum(&self, block: &SpectralBlock<S>) -> Result<Vec<EigenPair<S>>> {
        let mut out = Vec::new();
        for &(a, start, len) in &block.chains {
            let x = |i: usize, j: usize| block.matrix[(start + i, start + j)].clone();
            // Floating blocks carry rounding below the diagonal; measure it
            // against the size of the chain.
            let scale = (0..len)
                .flat_map(|i| (0..len).map(move |j| (i, j)))
                .filter_map(|(i, j)| x(i, j).approx())
                .fold(0.0f64, |m, v| m.max(v.abs()));
            let below = |v: &S| match v.approx() {
                Some(f) if !S::EXACT => f.abs() <= 1e-8 * scale.max(1.0),
                _ => v.is_negligible(),
            };
            for i in 0..len {
                for j in 0..i {
                    if !below(&x(i, j)) {
                        return Err(Error::NotTriangular(format!("n = {}, a = {a}, entry ({i}, {j})", block.n)));
                    }
                }
            }
            for j in 0..len {
                let lam = x(j, j);
                let mut v = vec![S::zero(); j + 1];
                v[j] = S::one();
                for i in (0..j).rev() {
                    let mut acc = S::zero();
                    for t in i + 1..=j {
                        acc = acc + x(i, t) * v[t].clone();
                    }
                    let den = x(i, i) - lam.clone();
                    if den.is_negligible() {
                        if acc.is_negligible() {
                            continue;
                        }
                        return Err(Error::NotTriangular(format!("repeated eigenvalue in chain a = {a}")));
                    }
                    v[i] = -acc / den;
                }
                let eigenvector = AlgebraElement::from_terms(v.into_iter().enumerate().map(|(i, c)| (block.basis[start + i], c)));
                out.push(EigenPair { leading: block.basis[start + j], eigenvalue: lam, eigenvector });
            }
        }
        Ok(out)
    }

    /// `[Delta_L, Delta_R] w` for a degree-`n` section.
    pub fn commutator(&self, first: Side, second: Side, n: i32, w: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let ab = self.apply_laplacian(first, n, &self.apply_laplacian(second, n, w)?)?;
        let ba = self.apply_laplacian(second, n, &self.apply_laplacian(first, n, w)?)?;
        Ok(&ab - &ba)
    }
}

fn submatrix<S: Scalar>(m: &Matrix<S>, size: usize) -> Matrix<S> {
    Matrix::from_fn(size, size, |i, j| m[(i, j)].clone())
}

/// The witness sections for the non-commutation check.
pub fn commutation_witness_monomial(n: i32) -> Monomial {
    match n.signum() {
        1 => Monomial::new(n, 1, 1),
        -1 => Monomial::new(n, 1, 1),
        _ => Monomial::new(1, 1, 2),
    }
}

impl<S: Scalar> Geometry<S> {
    /// `[Delta_L, Delta_R]` applied to the witness for winding `n`.
    pub fn commutation_witness(&self, n: i32) -> Result<AlgebraElement<S>> {
        let w = AlgebraElement::monomial(commutation_witness_monomial(n));
        self.commutator(Side::Left, Side::Right, n, &w)
    }
}
