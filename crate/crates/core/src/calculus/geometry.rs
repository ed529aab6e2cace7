use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use super::forms::{InvariantForm, TotalForm1, TotalForm2};
use super::maps::GermMaps;
use super::tables::{CalculusTables, TWO_FORM_BASIS};
use crate::linalg::Matrix;
use crate::quantum_group::{AlgebraElement, Generator, Monomial, QuantumGroup};
use crate::Scalar;

/// Derivative data of a monomial `m`, read off `E(m) = (id (x) rho) phi(m)`:
/// `d[i] = m_(1) lambda_i(m_(2))` and `twist[j][i] = m_(1) f_ji(m_(2))`, so that
/// `eta_j b = sum_i twist[j][i](b) eta_i`.
pub struct Jet<S: Scalar> {
    pub d: [AlgebraElement<S>; 3],
    pub twist: [[AlgebraElement<S>; 3]; 3],
}

type EMatrix<S> = [[AlgebraElement<S>; 4]; 4];

pub(crate) type BlockKey = (i32, i32);

/// SU_q(2) with its 3D calculus at a fixed value of q.
///
/// This is the context object for everything geometric: derivatives, forms,
/// the sphere complex and the bundle Laplacians.
pub struct Geometry<S: Scalar> {
    group: Arc<QuantumGroup<S>>,
    tables: CalculusTables<S>,
    maps: GermMaps<S>,
    pub(crate) codiff: [S; 2],
    gen_e: [EMatrix<S>; 4],
    jets: RwLock<HashMap<Monomial, Arc<Jet<S>>>>,
    pub(crate) blocks: RwLock<HashMap<BlockKey, Arc<Matrix<S>>>>,
}

impl<S: Scalar> Geometry<S> {
    pub fn from_tables(group: Arc<QuantumGroup<S>>, tables: CalculusTables<S>, codiff: [S; 2]) -> Self {
        let maps = GermMaps::new(&tables.germs, &tables.circ);
        let gen_e = Generator::ALL.map(|g| {
            let t = group.coproduct_generator(g);
            std::array::from_fn(|r| {
                std::array::from_fn(|s| {
                    let mut e = AlgebraElement::zero();
                    for ((x, y), c) in t.terms() {
                        let rho = maps.rho(*y);
                        if !rho[r][s].is_zero() {
                            e.add_term(*x, c.clone() * rho[r][s].clone());
                        }
                    }
                    e
                })
            })
        });
        Geometry {
            group,
            tables,
            maps,
            codiff,
            gen_e,
            jets: RwLock::new(HashMap::new()),
            blocks: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &QuantumGroup<S> {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<QuantumGroup<S>> {
        self.group.clone()
    }

    pub fn tables(&self) -> &CalculusTables<S> {
        &self.tables
    }

    pub fn maps(&self) -> &GermMaps<S> {
        &self.maps
    }

    pub fn q(&self) -> &S {
        self.group.q()
    }

    pub fn qp(&self, e: i32) -> S {
        self.group.qp(e)
    }

    /// `s_1, s_2` in `d^* = s_k star d star` on grades 1 and 2.
    pub fn codifferential_factors(&self) -> &[S; 2] {
        &self.codiff
    }

    pub fn jet(&self, m: Monomial) -> Arc<Jet<S>> {
        if let Some(j) = self.jets.read().get(&m) {
            return j.clone();
        }
        let jet = match m.split_last() {
            None => Jet {
                d: std::array::from_fn(|_| AlgebraElement::zero()),
                twist: std::array::from_fn(|j| std::array::from_fn(|i| if i == j { AlgebraElement::one() } else { AlgebraElement::zero() })),
            },
            Some((prefix, g)) => {
                let pj = self.jet(prefix);
                let e = &self.gen_e[g.index()];
                let p = AlgebraElement::monomial(prefix);
                let g = &*self.group;
                let d = std::array::from_fn(|i| {
                    let mut acc = g.mul(&p, &e[0][1 + i]);
                    for j in 0..3 {
                        if !pj.d[j].is_zero() && !e[1 + j][1 + i].is_zero() {
                            acc = &acc + &g.mul(&pj.d[j], &e[1 + j][1 + i]);
                        }
                    }
                    acc
                });
                let twist = std::array::from_fn(|j| {
                    std::array::from_fn(|i| {
                        let mut acc = AlgebraElement::zero();
                        for k in 0..3 {
                            if !pj.twist[j][k].is_zero() && !e[1 + k][1 + i].is_zero() {
                                acc = &acc + &g.mul(&pj.twist[j][k], &e[1 + k][1 + i]);
                            }
                        }
                        acc
                    })
                });
                Jet { d, twist }
            }
        };
        self.jets.write().entry(m).or_insert_with(|| Arc::new(jet)).clone()
    }

    /// `d_i x = x_(1) lambda_i(x_(2))`.
    pub fn partial(&self, i: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.jet(*m).d[i], c);
        }
        out
    }

    /// `F_ji(x)`, the coefficient in `eta_j x = sum_i F_ji(x) eta_i`.
    pub fn twist(&self, j: usize, i: usize, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.jet(*m).twist[j][i], c);
        }
        out
    }

    pub fn differential(&self, x: &AlgebraElement<S>) -> TotalForm1<S> {
        let mut out = TotalForm1::zero();
        for (m, c) in x.iter() {
            let j = self.jet(*m);
            for i in 0..3 {
                out.c[i].add_scaled(&j.d[i], c);
            }
        }
        out
    }

    /// Coordinates of `pi(x)`.
    pub fn lambda_functionals(&self, x: &AlgebraElement<S>) -> [S; 3] {
        self.maps.lambda(x)
    }

    pub fn germs(&self, x: &AlgebraElement<S>) -> InvariantForm<S> {
        InvariantForm { c: self.maps.lambda(x) }
    }

    pub fn circ(&self, theta: &InvariantForm<S>, b: &AlgebraElement<S>) -> InvariantForm<S> {
        InvariantForm { c: self.maps.circ(&theta.c, b) }
    }

    pub fn left_mul1(&self, a: &AlgebraElement<S>, phi: &TotalForm1<S>) -> TotalForm1<S> {
        TotalForm1 { c: std::array::from_fn(|i| self.group.mul(a, &phi.c[i])) }
    }

    pub fn right_mul1(&self, phi: &TotalForm1<S>, b: &AlgebraElement<S>) -> TotalForm1<S> {
        let mut out = TotalForm1::zero();
        for j in 0..3 {
            if phi.c[j].is_zero() {
                continue;
            }
            for i in 0..3 {
                let t = self.twist(j, i, b);
                if !t.is_zero() {
                    out.c[i] = &out.c[i] + &self.group.mul(&phi.c[j], &t);
                }
            }
        }
        out
    }

    /// `x eta_i eta_j` reduced to the 2-form basis.
    fn wedge_pair(&self, i: usize, j: usize, x: &AlgebraElement<S>, out: &mut TotalForm2<S>) {
        for t in 0..3 {
            let w = &self.tables.wedge[i][j][t];
            if !w.is_zero() {
                out.c[t].add_scaled(x, w);
            }
        }
    }

    pub fn wedge(&self, a: &TotalForm1<S>, b: &TotalForm1<S>) -> TotalForm2<S> {
        let mut out = TotalForm2::zero();
        for i in 0..3 {
            if a.c[i].is_zero() {
                continue;
            }
            // a_i eta_i b_j eta_j = a_i F_ik(b_j) eta_k eta_j
            for j in 0..3 {
                if b.c[j].is_zero() {
                    continue;
                }
                for k in 0..3 {
                    let t = self.twist(i, k, &b.c[j]);
                    if !t.is_zero() {
                        let x = self.group.mul(&a.c[i], &t);
                        self.wedge_pair(k, j, &x, &mut out);
                    }
                }
            }
        }
        out
    }

    /// Exterior derivative of a total 1-form.
    pub fn d1(&self, phi: &TotalForm1<S>) -> TotalForm2<S> {
        let mut out = TotalForm2::zero();
        for i in 0..3 {
            if phi.c[i].is_zero() {
                continue;
            }
            for k in 0..3 {
                let p = self.partial(k, &phi.c[i]);
                if !p.is_zero() {
                    self.wedge_pair(k, i, &p, &mut out);
                }
            }
            for t in 0..3 {
                let v = &self.tables.d_eta[i][t];
                if !v.is_zero() {
                    out.c[t].add_scaled(&phi.c[i], v);
                }
            }
        }
        out
    }

    pub fn right_mul2(&self, w: &TotalForm2<S>, x: &AlgebraElement<S>) -> TotalForm2<S> {
        let mut out = TotalForm2::zero();
        for (b, &(i, j)) in TWO_FORM_BASIS.iter().enumerate() {
            if w.c[b].is_zero() {
                continue;
            }
            for l in 0..3 {
                let fjl = self.twist(j, l, x);
                if fjl.is_zero() {
                    continue;
                }
                for k in 0..3 {
                    let fik = self.twist(i, k, &fjl);
                    if !fik.is_zero() {
                        let y = self.group.mul(&w.c[b], &fik);
                        self.wedge_pair(k, l, &y, &mut out);
                    }
                }
            }
        }
        out
    }

    /// The *-structure on 1-forms, `(x eta_i)* = eta_i* x*`.
    pub fn star1(&self, phi: &TotalForm1<S>) -> TotalForm1<S> {
        let mut out = TotalForm1::zero();
        for i in 0..3 {
            if phi.c[i].is_zero() {
                continue;
            }
            let cs = self.group.star(&phi.c[i]);
            for j in 0..3 {
                let s = &self.tables.star1[i][j];
                if s.is_zero() {
                    continue;
                }
                for k in 0..3 {
                    let t = self.twist(j, k, &cs);
                    out.c[k].add_scaled(&t, s);
                }
            }
        }
        out
    }

    /// Coordinates of `(eta_i eta_j)* = -eta_j* eta_i*`.
    fn star_invariant2(&self, i: usize, j: usize) -> [S; 3] {
        let mut acc: [S; 3] = std::array::from_fn(|_| S::zero());
        let st = &self.tables.star1;
        for u in 0..3 {
            for v in 0..3 {
                let f = st[j][u].clone() * st[i][v].clone();
                if f.is_zero() {
                    continue;
                }
                for t in 0..3 {
                    acc[t] = acc[t].clone() - f.clone() * self.tables.wedge[u][v][t].clone();
                }
            }
        }
        acc
    }

    pub fn star2(&self, w: &TotalForm2<S>) -> TotalForm2<S> {
        let mut out = TotalForm2::zero();
        for (b, &(i, j)) in TWO_FORM_BASIS.iter().enumerate() {
            if w.c[b].is_zero() {
                continue;
            }
            let inv = self.star_invariant2(i, j);
            let mut form = TotalForm2::zero();
            for t in 0..3 {
                form.c[t] = AlgebraElement::scalar(inv[t].clone());
            }
            out = out.add(&self.right_mul2(&form, &self.group.star(&w.c[b])));
        }
        out
    }
}
