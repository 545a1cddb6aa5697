//! Dense d-by-d matrices over the coefficient field.
//!
//! Matrices are the (noncommutative) coefficient objects of the model
//! ring. Inversion is Gauss-Jordan with partial pivoting; in exact mode
//! the pivot choice is any nonzero entry, in float mode the largest.

use crate::coeff::Coefficient;
use crate::error::{NcError, Result};

/// Row-major d-by-d matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T: Coefficient> {
    pub dim: usize,
    data: Vec<T>,
}

impl<T: Coefficient> std::fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mat{:?}", self.rows_debug())
    }
}

impl<T: Coefficient> Mat<T> {
    pub fn zero(dim: usize) -> Self {
        Mat { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, T::one());
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(dim: usize, c: T) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "ragged matrix rows");
            data.extend(r);
        }
        Mat { dim, data }
    }

    fn rows_debug(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| format!("{}", self.get(i, j))).collect())
            .collect()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Mat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Mat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat { dim: self.dim, data: self.data.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Mat { dim: self.dim, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Max entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|a| a.magnitude()).fold(0.0, f64::max)
    }

    /// Gauss-Jordan inverse. Err(NonInvertibleConstantTerm) when singular.
    pub fn inv(&self) -> Result<Self> {
        let d = self.dim;
        let mut a = self.clone();
        let mut b = Self::identity(d);
        for col in 0..d {
            // pivot search: first nonzero in exact mode, largest in float.
            let mut piv = None;
            let mut best = 0.0_f64;
            for r in col..d {
                let m = a.get(r, col).magnitude();
                if !a.get(r, col).is_zero() {
                    if T::EXACT {
                        piv = Some(r);
                        break;
                    } else if m > best {
                        best = m;
                        piv = Some(r);
                    }
                }
            }
            let piv = piv.ok_or(NcError::NonInvertibleConstantTerm)?;
            if piv != col {
                for j in 0..d {
                    let x = a.get(col, j).clone();
                    a.set(col, j, a.get(piv, j).clone());
                    a.set(piv, j, x);
                    let y = b.get(col, j).clone();
                    b.set(col, j, b.get(piv, j).clone());
                    b.set(piv, j, y);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..d {
                a.set(col, j, a.get(col, j).div(&p));
                b.set(col, j, b.get(col, j).div(&p));
            }
            for r in 0..d {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..d {
                    let x = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, x);
                    let y = b.get(r, j).sub(&f.mul(b.get(col, j)));
                    b.set(r, j, y);
                }
            }
        }
        Ok(b)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.dim {
            s = s.add(self.get(i, i));
        }
        s
    }
}
