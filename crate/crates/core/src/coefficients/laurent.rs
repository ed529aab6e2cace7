use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^(low + i)`. The
/// first and last entries are nonzero, the zero polynomial has no entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * q^e`
    pub fn monomial(c: BigRational, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: e, coeffs: vec![c] }
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c, e);
        }
        acc
    }

    fn from_dense(low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly { low: low + lead_zeros as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient. Zero for the zero polynomial.
    pub fn min_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Number of stored coefficients (span of exponents).
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn trailing_coeff(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    /// A single term `c q^e`?
    pub fn as_monomial(&self) -> Option<(BigRational, i32)> {
        if self.coeffs.len() == 1 {
            Some((self.coeffs[0].clone(), self.low))
        } else {
            None
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes q -> q^k (k may be negative).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Division with remainder as ordinary polynomials.
    ///
    /// Both operands must have `min_exp() >= 0`; `divisor` must be nonzero.
    pub fn poly_divrem(&self, divisor: &Self) -> (Self, Self) {
        debug_assert!(self.is_zero() || self.low >= 0);
        debug_assert!(divisor.low >= 0 && !divisor.is_zero());
        if self.is_zero() || self.max_exp() < divisor.max_exp() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.dense_from_zero();
        let d = divisor.dense_from_zero();
        let dd = d.len() - 1;
        let lc_inv = d[dd].recip();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = &rem[top] * &lc_inv;
            let shift = top - dd;
            for (k, dk) in d.iter().enumerate() {
                if !dk.is_zero() {
                    rem[shift + k] -= &c * dk;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Self::from_dense(0, quot), Self::from_dense(0, rem))
    }

    /// Coefficients from exponent 0 up to `max_exp()`; requires `min_exp() >= 0`.
    fn dense_from_zero(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// `(c, p)` with `self = c * p`, `p` a primitive integer polynomial with
    /// positive leading coefficient, dense from exponent 0.
    fn primitive_int(&self) -> (BigRational, Vec<BigInt>) {
        let dense = self.dense_from_zero();
        let mut l = BigInt::one();
        for c in &dense {
            if !c.is_zero() {
                l = l.lcm(c.denom());
            }
        }
        let ints: Vec<BigInt> = dense.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let (cont, prim) = int_primitive(ints);
        (BigRational::new(cont, l), prim)
    }

    fn from_ints(v: &[BigInt]) -> Self {
        Self::from_dense(0, v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Monic gcd as ordinary polynomials (inputs with `min_exp() >= 0`).
    pub(crate) fn poly_gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        let (_, pa) = a.primitive_int();
        let (_, pb) = b.primitive_int();
        Self::from_ints(&int_poly_gcd(pa, pb)).make_monic()
    }

    /// Exact quotient by a divisor known to divide `self` (ordinary
    /// polynomials). Works over the integers after removing contents.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ca, pa) = self.primitive_int();
        let (cb, pb) = divisor.primitive_int();
        let q = int_exact_div(pa, &pb);
        Self::from_ints(&q).scale(&(ca / cb))
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&(BigRational::one() / lc))
    }

    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += c * pow_rational(q, e);
        }
        acc
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.terms().map(|(e, c)| rational_to_f64(c) * q.powi(e)).sum()
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Content and primitive part, with the primitive part's leading
/// coefficient made positive.
fn int_primitive(mut v: Vec<BigInt>) -> (BigInt, Vec<BigInt>) {
    trim(&mut v);
    let mut g = BigInt::zero();
    for c in &v {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return (BigInt::zero(), v);
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    (g, v)
}

/// Pseudo-remainder of `a` by `b`, made primitive.
fn int_prem_primitive(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db && !a.is_empty() {
        let top = a.len() - 1;
        let la = a[top].clone();
        let shift = top - db;
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                a[shift + k] -= &la * bk;
            }
        }
        trim(&mut a);
        a = int_primitive(a).1;
    }
    a
}

/// Primitive gcd of two primitive integer polynomials.
fn int_poly_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = int_prem_primitive(a, &b);
        a = b;
        b = r;
    }
    int_primitive(a).1
}

/// Exact quotient of integer polynomials.
fn int_exact_div(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if a.len() <= db {
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for top in (db..a.len()).rev() {
        if a[top].is_zero() {
            continue;
        }
        let c = &a[top] / &b[db];
        let shift = top - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                a[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
    }
    debug_assert!(a.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

pub(crate) fn pow_rational(q: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    let base = if e < 0 { q.recip() } else { q.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().max(rhs.max_exp());
        let mut out = vec![BigRational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_dense(low, out)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = rhs.as_monomial() {
            return self.scale(&c).shift(e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return rhs.scale(&c).shift(e);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, out)
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms `c*q^e` in ascending exponent order, e.g.
/// `-1/2*q^-2 + 3 + q^4`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let qe = if e == 1 { "q".to_string() } else { format!("q^{e}") };
            if e == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{qe}")?;
            } else {
                write!(f, "{}*{qe}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// LaTeX rendering in the same term order as the canonical text.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                out.push_str(if i == 0 { "-" } else { " - " });
            } else if i > 0 {
                out.push_str(" + ");
            }
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            let qe = match e {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{{{e}}}"),
            };
            if e == 0 {
                out.push_str(&coeff);
            } else if mag.is_one() {
                out.push_str(&qe);
            } else {
                out.push_str(&coeff);
                out.push_str(&qe);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn cancellation_trims_both_ends() {
        let a = p(&[(-1, 1), (0, 2), (3, 1)]);
        let b = p(&[(-1, -1), (3, -1)]);
        let s = &a + &b;
        assert_eq!(s, p(&[(0, 2)]));
        assert_eq!(s.min_exp(), 0);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_and_divrem() {
        let a = p(&[(0, 1), (2, 1)]);
        let b = p(&[(0, 1), (2, -1)]);
        let ab = &a * &b;
        assert_eq!(ab, p(&[(0, 1), (4, -1)]));
        let (qt, r) = ab.poly_divrem(&b);
        assert_eq!(qt, a);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[(0, 2), (2, 2)]);
        let b = &a * &p(&[(0, 1), (1, 3)]);
        assert_eq!(LaurentPoly::poly_gcd(&a, &b), p(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(-2, -1), (0, 3), (4, 1)]).to_string(), "-q^-2 + 3 + q^4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
