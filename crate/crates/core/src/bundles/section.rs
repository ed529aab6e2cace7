use crate::quantum_group::AlgebraElement;
use crate::{Error, Result, Scalar};

/// A section of the associated bundle of winding `n`: a degree-`n` element.
#[derive(Clone, Debug, PartialEq)]
pub struct Section<S: Scalar> {
    n: i32,
    value: AlgebraElement<S>,
}

impl<S: Scalar> Section<S> {
    pub fn new(n: i32, value: AlgebraElement<S>) -> Result<Self> {
        if !value.has_degree(n) {
            return Err(Error::Degree(format!("section of winding {n} cannot hold {value}")));
        }
        Ok(Section { n, value })
    }

    pub fn n(&self) -> i32 {
        self.n
    }

    pub fn value(&self) -> &AlgebraElement<S> {
        &self.value
    }

    pub fn into_value(self) -> AlgebraElement<S> {
        self.value
    }
}
