//! The graded calculus on the quantum sphere: base forms, d, the quantum
//! integral, the metric pairings, Hodge operators and codifferentials.

use std::fmt;

use serde::Serialize;

use crate::calculus::{Geometry, TotalForm1, TotalForm2, MINUS, PLUS};
use crate::quantum_group::AlgebraElement;
use crate::{Error, Result, Scalar};

/// A form on the quantum sphere.
///
/// Grade 1 is `x eta_- + y eta_+` with `deg x = 2`, `deg y = -2`; grade 2 is
/// `p dvol` with `dvol = eta_- eta_+`.
#[derive(Clone, PartialEq, Serialize)]
pub enum BaseForm<S: Scalar> {
    Zero(AlgebraElement<S>),
    One { x: AlgebraElement<S>, y: AlgebraElement<S> },
    Two(AlgebraElement<S>),
}

fn check_degree<S: Scalar>(what: &str, a: &AlgebraElement<S>, n: i32) -> Result<()> {
    if a.has_degree(n) {
        Ok(())
    } else {
        Err(Error::Degree(format!("{what} must have degree {n}, got {a}")))
    }
}

impl<S: Scalar> BaseForm<S> {
    pub fn grade0(f: AlgebraElement<S>) -> Result<Self> {
        check_degree("function", &f, 0)?;
        Ok(BaseForm::Zero(f))
    }

    pub fn grade1(x: AlgebraElement<S>, y: AlgebraElement<S>) -> Result<Self> {
        check_degree("eta_- coefficient", &x, 2)?;
        check_degree("eta_+ coefficient", &y, -2)?;
        Ok(BaseForm::One { x, y })
    }

    pub fn grade2(p: AlgebraElement<S>) -> Result<Self> {
        check_degree("dvol coefficient", &p, 0)?;
        Ok(BaseForm::Two(p))
    }

    pub fn zero(grade: u8) -> Self {
        match grade {
            0 => BaseForm::Zero(AlgebraElement::zero()),
            1 => BaseForm::One { x: AlgebraElement::zero(), y: AlgebraElement::zero() },
            _ => BaseForm::Two(AlgebraElement::zero()),
        }
    }

    pub fn dvol() -> Self {
        BaseForm::Two(AlgebraElement::one())
    }

    pub fn grade(&self) -> u8 {
        match self {
            BaseForm::Zero(_) => 0,
            BaseForm::One { .. } => 1,
            BaseForm::Two(_) => 2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BaseForm::Zero(a) | BaseForm::Two(a) => a.is_zero(),
            BaseForm::One { x, y } => x.is_zero() && y.is_zero(),
        }
    }

    /// Re-checks the degree constraints.
    pub fn validate(&self) -> Result<()> {
        match self {
            BaseForm::Zero(a) => check_degree("function", a, 0),
            BaseForm::One { x, y } => {
                check_degree("eta_- coefficient", x, 2)?;
                check_degree("eta_+ coefficient", y, -2)
            }
            BaseForm::Two(p) => check_degree("dvol coefficient", p, 0),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        match self {
            BaseForm::Zero(a) => BaseForm::Zero(a.scale(c)),
            BaseForm::One { x, y } => BaseForm::One { x: x.scale(c), y: y.scale(c) },
            BaseForm::Two(p) => BaseForm::Two(p.scale(c)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (BaseForm::Zero(a), BaseForm::Zero(b)) => BaseForm::Zero(a + b),
            (BaseForm::One { x, y }, BaseForm::One { x: u, y: v }) => BaseForm::One { x: x + u, y: y + v },
            (BaseForm::Two(a), BaseForm::Two(b)) => BaseForm::Two(a + b),
            _ => return Err(Error::Grade { expected: self.grade(), got: other.grade() }),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    fn as_grade0(&self) -> Result<&AlgebraElement<S>> {
        match self {
            BaseForm::Zero(a) => Ok(a),
            _ => Err(Error::Grade { expected: 0, got: self.grade() }),
        }
    }

    fn as_grade2(&self) -> Result<&AlgebraElement<S>> {
        match self {
            BaseForm::Two(a) => Ok(a),
            _ => Err(Error::Grade { expected: 2, got: self.grade() }),
        }
    }

    pub fn function(&self) -> Result<&AlgebraElement<S>> {
        self.as_grade0()
    }

    pub fn dvol_coefficient(&self) -> Result<&AlgebraElement<S>> {
        self.as_grade2()
    }

    pub fn components(&self) -> Result<(&AlgebraElement<S>, &AlgebraElement<S>)> {
        match self {
            BaseForm::One { x, y } => Ok((x, y)),
            _ => Err(Error::Grade { expected: 1, got: self.grade() }),
        }
    }
}

impl<S: Scalar> fmt::Debug for BaseForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseForm::Zero(a) => write!(f, "{a}"),
            BaseForm::One { x, y } => write!(f, "({x}) eta_- + ({y}) eta_+"),
            BaseForm::Two(p) => write!(f, "({p}) dvol"),
        }
    }
}

impl<S: Scalar> Geometry<S> {
    pub(crate) fn to_total1(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> TotalForm1<S> {
        TotalForm1::new(x.clone(), AlgebraElement::zero(), y.clone())
    }

    fn from_total1(&self, t: &TotalForm1<S>) -> Result<BaseForm<S>> {
        if !t.c[1].is_zero() {
            return Err(Error::Convention(format!("1-form has a vertical part {}", t.c[1])));
        }
        BaseForm::grade1(t.c[MINUS].clone(), t.c[PLUS].clone())
    }

    fn from_total2(&self, t: &TotalForm2<S>) -> Result<BaseForm<S>> {
        if !t.is_horizontal() {
            return Err(Error::Convention(format!("2-form has vertical parts {:?}", t)));
        }
        BaseForm::grade2(t.c[0].clone())
    }

    /// The horizontal derivative `D(a) = d_- a eta_- + d_+ a eta_+`.
    pub fn horizontal_d(&self, a: &AlgebraElement<S>) -> (AlgebraElement<S>, AlgebraElement<S>) {
        (self.partial(MINUS, a), self.partial(PLUS, a))
    }

    pub fn base_d(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        phi.validate()?;
        match phi {
            BaseForm::Zero(f) => {
                let (x, y) = self.horizontal_d(f);
                BaseForm::grade1(x, y)
            }
            BaseForm::One { x, y } => self.from_total2(&self.d1(&self.to_total1(x, y))),
            BaseForm::Two(_) => Ok(BaseForm::zero(2)),
        }
    }

    /// `kappa_-`, `kappa_+` in `d(x eta_- + y eta_+) = (kappa_+ d_+ x + kappa_- d_- y) dvol`,
    /// read off the 2-form relations.
    pub fn kappa(&self) -> [S; 2] {
        let w = &self.tables().wedge;
        [w[MINUS][PLUS][0].clone(), w[PLUS][MINUS][0].clone()]
    }

    /// `p dvol -> h(p)`.
    pub fn integral(&self, phi: &BaseForm<S>) -> Result<S> {
        Ok(self.group().haar(phi.as_grade2()?))
    }

    pub fn metric(&self, phi: &BaseForm<S>, psi: &BaseForm<S>) -> Result<AlgebraElement<S>> {
        let g = self.group();
        Ok(match (phi, psi) {
            (BaseForm::Zero(a), BaseForm::Zero(b)) | (BaseForm::Two(a), BaseForm::Two(b)) => g.mul(a, &g.star(b)),
            (BaseForm::One { x: xh, y: yh }, BaseForm::One { x, y }) => {
                let mut m = g.mul(xh, &g.star(x)).scale(&self.qp(2));
                m = &m + &g.mul(yh, &g.star(y));
                m.scale(&(S::one() / S::from_i64(2)))
            }
            _ => return Err(Error::Grade { expected: phi.grade(), got: psi.grade() }),
        })
    }

    pub fn global_inner(&self, phi: &BaseForm<S>, psi: &BaseForm<S>) -> Result<S> {
        Ok(self.group().haar(&self.metric(phi, psi)?))
    }

    /// The *-structure on base forms, inherited from the total space.
    pub fn form_star(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        match phi {
            BaseForm::Zero(a) => Ok(BaseForm::Zero(self.group().star(a))),
            BaseForm::One { x, y } => self.from_total1(&self.star1(&self.to_total1(x, y))),
            BaseForm::Two(p) => {
                let mut t = TotalForm2::zero();
                t.c[0] = p.clone();
                self.from_total2(&self.star2(&t))
            }
        }
    }

    pub fn hodge_left(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        let g = self.group();
        phi.validate()?;
        Ok(match phi {
            BaseForm::Zero(p) => BaseForm::Two(g.star(p)),
            BaseForm::Two(p) => BaseForm::Zero(g.star(p)),
            BaseForm::One { x, y } => {
                let h = S::one() / S::from_i64(2);
                BaseForm::One { x: g.star(y).scale(&-h.clone()), y: g.star(x).scale(&h) }
            }
        })
    }

    /// `star_R phi = (star_L (phi*))*`.
    pub fn hodge_right(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        self.form_star(&self.hodge_left(&self.form_star(phi)?)?)
    }

    fn codifferential_with(&self, phi: &BaseForm<S>, hodge: impl Fn(&BaseForm<S>) -> Result<BaseForm<S>>) -> Result<BaseForm<S>> {
        let k = phi.grade();
        if k == 0 {
            return Err(Error::Grade { expected: 1, got: 0 });
        }
        let s = self.codiff[k as usize - 1].clone();
        Ok(hodge(&self.base_d(&hodge(phi)?)?)?.scale(&s))
    }

    pub fn codifferential_left(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        self.codifferential_with(phi, |f| self.hodge_left(f))
    }

    pub fn codifferential_right(&self, phi: &BaseForm<S>) -> Result<BaseForm<S>> {
        self.codifferential_with(phi, |f| self.hodge_right(f))
    }

    pub fn laplacian0(&self, p: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let lap = self.codifferential_left(&self.base_d(&BaseForm::grade0(p.clone())?)?)?;
        Ok(lap.as_grade0()?.clone())
    }

    /// Finds the constant `s` with `<d phi, psi> = s <phi, star d star psi>`
    /// on the samples.
    pub fn adjointness_factor(&self, grade: u8, samples: &[(BaseForm<S>, BaseForm<S>)]) -> Result<S> {
        let mut found: Option<S> = None;
        for (phi, psi) in samples {
            if phi.grade() + 1 != grade || psi.grade() != grade {
                return Err(Error::Grade { expected: grade, got: psi.grade() });
            }
            let lhs = self.global_inner(&self.base_d(phi)?, psi)?;
            let hl = |f: &BaseForm<S>| self.hodge_left(f);
            let rhs = self.global_inner(phi, &hl(&self.base_d(&hl(psi)?)?)?)?;
            if rhs.is_negligible() {
                if !lhs.is_negligible() {
                    return Err(Error::Convention("d has no adjoint of the form s star d star".into()));
                }
                continue;
            }
            let s = lhs / rhs;
            match &found {
                None => found = Some(s),
                Some(t) if !(t.clone() - s.clone()).is_negligible() => {
                    return Err(Error::Convention(format!("adjointness ratio is not constant: {t:?} vs {s:?}")))
                }
                _ => {}
            }
        }
        found.ok_or_else(|| Error::Convention("no informative adjointness sample".into()))
    }
}
