use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::Scalar;

/// Homogeneity of an element with respect to the U(1) grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Homogeneity {
    Zero,
    Degree(i32),
    Mixed,
}

/// Finite linear combination of PBW monomials.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for AlgebraElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn scalar(c: S) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_negligible() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let v = old + c;
                if !v.is_negligible() {
                    self.terms.insert(m, v);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (m, v) in &other.terms {
            self.add_term(*m, v.clone() * c.clone());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, S> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_negligible() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())))
    }

    pub fn degree(&self) -> Homogeneity {
        let mut it = self.terms.keys().map(|m| m.degree());
        let Some(d) = it.next() else { return Homogeneity::Zero };
        if it.all(|e| e == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::Mixed
        }
    }

    /// True when zero or homogeneous of degree `n`.
    pub fn has_degree(&self, n: i32) -> bool {
        matches!(self.degree(), Homogeneity::Zero) || self.degree() == Homogeneity::Degree(n)
    }

    /// Decomposition into U(1)-weight components.
    pub fn coaction(&self) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().add_term(*m, c.clone());
        }
        out
    }

    /// Membership in the quantum sphere (all weights vanish except 0).
    pub fn in_sphere(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Counit: `eps(alpha) = eps(alpha*) = 1`, `eps(gamma) = eps(gamma*) = 0`.
    pub fn counit(&self) -> S {
        self.terms.iter().filter(|(m, _)| m.k == 0 && m.l == 0).fold(S::zero(), |acc, (_, c)| acc + c.clone())
    }

    pub fn max_length(&self) -> u32 {
        self.terms.keys().map(|m| m.length()).max().unwrap_or(0)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlgebraElement<T> {
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Largest monomial in the (a_power, k, l) order.
    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }
}

impl<S: Scalar> Add for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn add(self, rhs: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn sub(self, rhs: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Neg for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> AlgebraElement<S> {
        AlgebraElement { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})*{}", c.render(), m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord<S> {
    a_power: i32,
    k: u32,
    l: u32,
    coeff: S,
}

/// JSON form: list of `{a_power, k, l, coeff}` in ascending monomial order.
impl<S: Scalar + Serialize> Serialize for AlgebraElement<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermRecord { a_power: m.a_power, k: m.k, l: m.l, coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for AlgebraElement<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let recs: Vec<TermRecord<S>> = Vec::deserialize(d)?;
        Ok(Self::from_terms(recs.into_iter().map(|r| (Monomial::new(r.a_power, r.k, r.l), r.coeff))))
    }
}

/// Element of the algebraic tensor square.
#[derive(Clone, PartialEq)]
pub struct TensorElement<S> {
    terms: BTreeMap<(Monomial, Monomial), S>,
}

impl<S: Scalar> Default for TensorElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn pure(a: Monomial, b: Monomial, c: S) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, c);
        t
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: S) {
        if c.is_negligible() {
            return;
        }
        let key = (a, b);
        match self.terms.remove(&key) {
            Some(old) => {
                let v = old + c;
                if !v.is_negligible() {
                    self.terms.insert(key, v);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for ((a, b), v) in &other.terms {
            self.add_term(*a, *b, v.clone() * c.clone());
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> fmt::Debug for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({})*{} (x) {}", c.render(), a, b)).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}
