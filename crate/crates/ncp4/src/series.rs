//! Truncated matrix-valued power series in a central variable t.
//!
//! An element stores matrix coefficients `c[0..=N]` representing
//! `sum c[k] t^k + O(t^{N+1})`; `N = coeffs.len() - 1` is the *reliable
//! order* of the element. Truncation-order bookkeeping:
//!
//! - addition / multiplication keep the minimum of the two orders,
//! - differentiation drops the order by one,
//! - inversion and antiderivative-free ops keep the order.
//!
//! The variable t itself is central: its single nonzero coefficient is a
//! scalar multiple of the identity, so it commutes with everything.

use crate::coeff::Coefficient;
use crate::error::{NcError, Result};
use crate::mat::Mat;

/// Matrix power series truncated at `t^order`.
#[derive(Clone, PartialEq)]
pub struct Series<T: Coefficient> {
    pub dim: usize,
    /// coeffs[k] is the matrix coefficient of t^k; len = order + 1.
    pub coeffs: Vec<Mat<T>>,
}

impl<T: Coefficient> std::fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Series(dim={}, order={})", self.dim, self.order())
    }
}

impl<T: Coefficient> Series<T> {
    pub fn zero(dim: usize, order: usize) -> Self {
        Series { dim, coeffs: vec![Mat::zero(dim); order + 1] }
    }

    pub fn one(dim: usize, order: usize) -> Self {
        let mut s = Self::zero(dim, order);
        s.coeffs[0] = Mat::identity(dim);
        s
    }

    /// The central variable t (scalar identity at degree one).
    pub fn var(dim: usize, order: usize) -> Self {
        let mut s = Self::zero(dim, order);
        if order >= 1 {
            s.coeffs[1] = Mat::identity(dim);
        }
        s
    }

    /// Constant series with given matrix value.
    pub fn constant(m: Mat<T>, order: usize) -> Self {
        let dim = m.dim;
        let mut s = Self::zero(dim, order);
        s.coeffs[0] = m;
        s
    }

    /// Constant scalar multiple of the identity.
    pub fn scalar(dim: usize, c: T, order: usize) -> Self {
        Self::constant(Mat::scalar(dim, c), order)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Mat<T>>) -> Self {
        assert!(!coeffs.is_empty());
        for c in &coeffs {
            assert_eq!(c.dim, dim);
        }
        Series { dim, coeffs }
    }

    /// Reliable truncation order N.
    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Mat<T> {
        &self.coeffs[k]
    }

    /// Drop coefficients above `order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Series { dim: self.dim, coeffs: self.coeffs[..=n].to_vec() }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(NcError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_dims(other).expect("series dimension mismatch");
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        Series { dim: self.dim, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_dims(other).expect("series dimension mismatch");
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
            .collect();
        Series { dim: self.dim, coeffs }
    }

    pub fn neg(&self) -> Self {
        Series { dim: self.dim, coeffs: self.coeffs.iter().map(Mat::neg).collect() }
    }

    /// Cauchy product; the result keeps the minimum reliable order.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_dims(other).expect("series dimension mismatch");
        let n = self.order().min(other.order());
        let mut coeffs = vec![Mat::zero(self.dim); n + 1];
        for k in 0..=n {
            for i in 0..=k {
                if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                    continue;
                }
                coeffs[k] = coeffs[k].add(&self.coeffs[i].mul(&other.coeffs[k - i]));
            }
        }
        Series { dim: self.dim, coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Series { dim: self.dim, coeffs: self.coeffs.iter().map(|m| m.scale(c)).collect() }
    }

    /// d/dt; the reliable order drops by one.
    pub fn deriv(&self) -> Self {
        if self.order() == 0 {
            // derivative of a constant-only view: zero with the same order.
            return Series::zero(self.dim, 0);
        }
        let coeffs = (1..=self.order())
            .map(|k| self.coeffs[k].scale(&T::from_int(k as i64)))
            .collect();
        Series { dim: self.dim, coeffs }
    }

    /// Two-sided inverse; requires an invertible constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .inv()
            .map_err(|_| NcError::NonInvertibleConstantTerm)?;
        let n = self.order();
        let mut out = vec![Mat::zero(self.dim); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            // B_k = -C0^{-1} * sum_{j=1..k} C_j B_{k-j}
            let mut acc = Mat::zero(self.dim);
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = c0_inv.mul(&acc).neg();
        }
        Ok(Series { dim: self.dim, coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Mat::is_zero)
    }

    /// Max entry magnitude over all stored coefficients.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(Mat::max_norm).fold(0.0, f64::max)
    }

    /// Smallest k with a coefficient of magnitude above `tol`; `None`
    /// means the whole stored range vanishes.
    pub fn vanishing_order(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().position(|c| c.max_norm() > tol)
    }

    /// Order through which the series vanishes (order+1 when all zero).
    pub fn zero_through(&self, tol: f64) -> usize {
        self.vanishing_order(tol).unwrap_or(self.order() + 1)
    }
}

/// Commutator ab - ba.
pub fn commutator<T: Coefficient>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    a.mul(b).sub(&b.mul(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rat;

    fn geo(order: usize) -> Series<Rat> {
        // 1/(1 - t) = 1 + t + t^2 + ...
        Series::one(1, order).sub(&Series::var(1, order)).inv().unwrap()
    }

    #[test]
    fn geometric_inverse() {
        let g = geo(8);
        for k in 0..=8 {
            assert_eq!(*g.coeff(k).get(0, 0), Rat::from_int(1));
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let mut s: Series<Rat> = Series::one(2, 6);
        s.coeffs[1] = Mat::from_rows(vec![
            vec![Rat::from_int(2), Rat::from_int(1)],
            vec![Rat::from_int(-1), Rat::from_int(3)],
        ]);
        s.coeffs[2] = Mat::from_rows(vec![
            vec![Rat::from_int(0), Rat::from_int(5)],
            vec![Rat::from_int(1), Rat::from_int(0)],
        ]);
        let si = s.inv().unwrap();
        assert!(s.mul(&si).sub(&Series::one(2, 6)).is_zero());
        assert!(si.mul(&s).sub(&Series::one(2, 6)).is_zero());
    }

    #[test]
    fn deriv_drops_order() {
        let s: Series<Rat> = Series::var(1, 5);
        let d = s.deriv();
        assert_eq!(d.order(), 4);
        assert_eq!(*d.coeff(0).get(0, 0), Rat::from_int(1));
    }

    #[test]
    fn t_is_central() {
        let t: Series<Rat> = Series::var(2, 5);
        let mut s: Series<Rat> = Series::one(2, 5);
        s.coeffs[1] = Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(2)],
            vec![Rat::from_int(3), Rat::from_int(4)],
        ]);
        assert!(commutator(&t, &s).is_zero());
    }

    #[test]
    fn mul_keeps_min_order() {
        let a: Series<Rat> = Series::one(1, 7);
        let b: Series<Rat> = Series::one(1, 4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.add(&b).order(), 4);
    }

    #[test]
    fn leibniz_rule() {
        let t: Series<Rat> = Series::var(1, 6);
        let a = Series::one(1, 6).add(&t.mul(&t));
        let b = Series::one(1, 6).sub(&t).inv().unwrap();
        let lhs = a.mul(&b).deriv();
        let rhs = a.deriv().mul(&b).add(&a.mul(&b.deriv()));
        assert!(lhs.sub(&rhs).is_zero());
    }
}
