use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use super::laurent::{rational_to_f64, LaurentPoly};
use super::parse::{parse_scalar, ParseError};
use crate::error::CoeffError;

/// Element of the rational function field Q(q).
///
/// Canonical form: numerator and denominator coprime, denominator monic
/// with lowest exponent 0. Two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarQ {
    /// The deformation parameter q.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i32) -> Self {
        ScalarQ { num: LaurentPoly::q_pow(e), den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        ScalarQ { num: LaurentPoly::from_int(c), den: LaurentPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        ScalarQ { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ScalarQ { num: p, den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        normalize(num, den)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() && (self.num.is_zero() || (self.num.span() == 1 && self.num.min_exp() == 0)) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: i32) -> Self {
        if let Some((c, x)) = self.num.as_monomial() {
            if self.den.is_one() {
                let cc = if e >= 0 { num_traits::pow(c, e as usize) } else { num_traits::pow(c.recip(), (-e) as usize) };
                return ScalarQ { num: LaurentPoly::monomial(cc, x * e), den: LaurentPoly::one() };
            }
        }
        let base = if e < 0 { self.recip().expect("zero to a negative power") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Substitutes q -> q^k.
    pub fn substitute_power(&self, k: i32) -> Self {
        normalize(self.num.substitute_power(k), self.den.substitute_power(k)).expect("nonzero denominator")
    }

    /// Value at a rational point.
    pub fn evaluate_rational(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        if q0.is_zero() && (self.num.min_exp() < 0) {
            return Err(CoeffError::Pole(q0.to_string()));
        }
        let d = self.den.eval_rational(q0);
        if d.is_zero() {
            return Err(CoeffError::Pole(q0.to_string()));
        }
        Ok(self.num.eval_rational(q0) / d)
    }

    /// Value at a floating-point point.
    pub fn evaluate_f64(&self, q0: f64) -> Result<f64, CoeffError> {
        let d = self.den.eval_f64(q0);
        if d == 0.0 || !d.is_finite() {
            return Err(CoeffError::Pole(q0.to_string()));
        }
        Ok(self.num.eval_f64(q0) / d)
    }

    /// Evaluates inside another scalar field at the given value of q.
    pub fn eval_in<S: crate::Scalar>(&self, q: &S) -> Result<S, CoeffError> {
        let ev = |p: &LaurentPoly| -> S {
            let mut acc = S::zero();
            for (e, c) in p.terms() {
                acc = acc + S::from_rational(c) * q.powi(e);
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(CoeffError::Pole(format!("{q:?}")));
        }
        Ok(ev(&self.num) / d)
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> Result<ScalarQ, CoeffError> {
    if den.is_zero() {
        return Err(CoeffError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(ScalarQ { num, den: LaurentPoly::one() });
    }
    let s = den.min_exp();
    let den = den.shift(-s);
    let num = num.shift(-s);
    if let Some((c, _)) = den.as_monomial() {
        return Ok(ScalarQ { num: num.scale(&c.recip()), den: LaurentPoly::one() });
    }
    let t = num.min_exp();
    let mut n0 = num.shift(-t);
    let mut d0 = den;
    let g = LaurentPoly::poly_gcd(&n0, &d0);
    if g.span() > 1 {
        n0 = n0.exact_div(&g);
        d0 = d0.exact_div(&g);
    }
    let lc = d0.leading_coeff().recip();
    Ok(ScalarQ { num: n0.scale(&lc).shift(t), den: d0.scale(&lc) })
}

impl Default for ScalarQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for ScalarQ {
    fn zero() -> Self {
        ScalarQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ScalarQ {
    fn one() -> Self {
        ScalarQ { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
}

impl<'a> Add<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.den == rhs.den {
            if self.den.is_one() {
                return ScalarQ { num: &self.num + &rhs.num, den: LaurentPoly::one() };
            }
            return normalize(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: only gcds of the smaller pieces are needed when both
        // operands are already reduced.
        let g = LaurentPoly::poly_gcd(&self.den, &rhs.den);
        if g.span() == 1 {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if n.is_zero() {
                return ScalarQ::zero();
            }
            return ScalarQ { num: n, den: &self.den * &rhs.den };
        }
        let b1 = self.den.exact_div(&g);
        let d1 = rhs.den.exact_div(&g);
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return ScalarQ::zero();
        }
        let shift = t.min_exp();
        let t0 = t.shift(-shift);
        let g2 = LaurentPoly::poly_gcd(&t0, &g);
        if g2.span() == 1 {
            return ScalarQ { num: t, den: &b1 * &rhs.den };
        }
        ScalarQ { num: t0.exact_div(&g2).shift(shift), den: &b1 * &rhs.den.exact_div(&g2) }
    }
}

impl<'a> Sub<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        normalize(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Div<&'a ScalarQ> for &'a ScalarQ {
    type Output = ScalarQ;
    /// Panics on division by zero; use [`ScalarQ::checked_div`] to recover.
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        self.checked_div(rhs).expect("ScalarQ division by zero")
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: ScalarQ) -> ScalarQ { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: &ScalarQ) -> ScalarQ { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

/// Q(q) is a field, so the remainder is always zero.
impl Rem for ScalarQ {
    type Output = ScalarQ;
    fn rem(self, _rhs: ScalarQ) -> ScalarQ {
        ScalarQ::zero()
    }
}

impl Num for ScalarQ {
    type FromStrRadixErr = ParseError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ParseError> {
        if radix != 10 {
            return Err(ParseError { pos: 0, msg: format!("unsupported radix {radix}") });
        }
        parse_scalar(s)
    }
}

impl FromStr for ScalarQ {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_scalar(s)
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for ScalarQ {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ScalarQ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

impl ScalarQ {
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }

    pub fn to_f64_at(&self, q0: f64) -> Option<f64> {
        self.evaluate_f64(q0).ok()
    }

    /// Numerical value when the element is a rational constant.
    pub fn constant_f64(&self) -> Option<f64> {
        self.as_rational().map(|c| rational_to_f64(&c))
    }
}
