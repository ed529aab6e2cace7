//! Dense linear algebra over a [`Scalar`] field.

use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<S> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                if self[(i, k)].is_zero() || rhs[(k, j)].is_zero() {
                    continue;
                }
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_negligible())
    }

    /// Reduced row echelon form in place. Columns are visited in `order`.
    /// Returns the pivot columns (one per nonzero row, top to bottom).
    pub fn rref_with_order(&mut self, order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == self.rows {
                break;
            }
            let mut best = None;
            let mut best_score = 0.0;
            for i in r..self.rows {
                let s = self[(i, c)].pivot_score();
                if s > best_score {
                    best_score = s;
                    best = Some(i);
                    if S::EXACT {
                        break;
                    }
                }
            }
            let Some(p) = best else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inverse().expect("nonzero pivot");
            for j in 0..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = self[(r, j)].clone() * inv.clone();
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let before = self[(i, j)].clone();
                    let v = before.clone() - f.clone() * self[(r, j)].clone();
                    self[(i, j)] = if cancels(&before, &v) { S::zero() } else { v };
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let order: Vec<usize> = (0..n).collect();
        let piv = aug.rref_with_order(&order);
        if piv.len() < n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Solves `self * x = b`. Returns a particular solution with free
    /// variables set to zero, or `None` when inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let order: Vec<usize> = (0..self.cols + 1).collect();
        let piv = aug.rref_with_order(&order);
        if piv.contains(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let piv = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (r, &c) in piv.iter().enumerate() {
                    v[c] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Maps every entry through `f`.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Exact positive-definiteness test by symmetric elimination (all pivots
/// strictly positive).
/// Exact types compare with zero; floating types flag a result that lost
/// all significant digits relative to the value it was computed from.
fn cancels<S: Scalar>(before: &S, after: &S) -> bool {
    if S::EXACT {
        return after.is_zero();
    }
    match (before.approx(), after.approx()) {
        (Some(b), Some(a)) => a.abs() <= 1e-13 * b.abs().max(f64::MIN_POSITIVE),
        _ => after.is_negligible(),
    }
}

pub fn is_positive_definite(m: &Matrix<num_rational::BigRational>) -> bool {
    use num_traits::{Signed, Zero};
    let n = m.rows();
    let mut a = m.clone();
    for k in 0..n {
        let p = a[(k, k)].clone();
        if !p.is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = a[(i, k)].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                a[(i, j)] = v;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ScalarQ;
    use num_traits::{One, Zero};

    #[test]
    fn inverse_over_rational_functions() {
        let q = ScalarQ::q();
        let m = Matrix::from_rows(vec![vec![q.clone(), ScalarQ::one()], vec![ScalarQ::zero(), q.clone()]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn solve_and_nullspace() {
        let m: Matrix<f64> = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0]]);
        assert!(m.solve(&[1.0, 3.0]).is_none());
        let x = m.solve(&[1.0, 2.0]).unwrap();
        assert!((x[0] + 2.0 * x[1] - 1.0).abs() < 1e-12);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!((ns[0][0] + 2.0 * ns[0][1]).abs() < 1e-12);
    }
}
