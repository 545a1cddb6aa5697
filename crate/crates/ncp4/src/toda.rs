//! Noncommutative Toda lattice built from two seed series.
//!
//! From seeds k1, km1 (kappa_1, kappa_{-1}) two generating sequences are
//! produced by the recursions
//!
//!   a_0 = k1,   a_n = a_{n-1}' + sum_{i+j=n-2} a_i km1 a_j,
//!   b_0 = km1,  b_n = b_{n-1}' + sum_{i+j=n-2} b_i k1 b_j,
//!
//! and the lattice variables are Hankel quasideterminants of those
//! sequences: theta_{p+1} is the (p,p) quasideterminant of the
//! (p+1)-square Hankel matrix of the a's, eta_{-p-1} likewise for the
//! b's. Edge values: theta_0 = km1^{-1}, eta_0 = k1^{-1} = theta_1^{-1},
//! and eta_1 := theta_2^{-1} (so the eta chain continues the theta chain
//! across index zero; with this convention residual_eta(0) is minus
//! residual_theta(1)).

use crate::coeff::Coefficient;
use crate::error::Result;
use crate::qdet::{det_scalar, hankel, quasidet};
use crate::series::Series;

/// Toda chain generated by the pair (kappa_1, kappa_{-1}).
#[derive(Clone)]
pub struct TodaChain<T: Coefficient> {
    pub kappa1: Series<T>,
    pub kappa_m1: Series<T>,
}

impl<T: Coefficient> TodaChain<T> {
    pub fn new(kappa1: Series<T>, kappa_m1: Series<T>) -> Self {
        assert_eq!(kappa1.dim, kappa_m1.dim);
        TodaChain { kappa1, kappa_m1 }
    }

    /// First `len` terms of the a-sequence.
    pub fn a_seq(&self, len: usize) -> Vec<Series<T>> {
        gen_seq(&self.kappa1, &self.kappa_m1, len)
    }

    /// First `len` terms of the b-sequence.
    pub fn b_seq(&self, len: usize) -> Vec<Series<T>> {
        gen_seq(&self.kappa_m1, &self.kappa1, len)
    }

    /// theta_n for n >= 0.
    pub fn theta(&self, n: usize) -> Result<Series<T>> {
        if n == 0 {
            return self.kappa_m1.inv();
        }
        let seq = self.a_seq(2 * n - 1);
        quasidet(&hankel(&seq, n)?, n - 1, n - 1)
    }

    /// eta_m for m <= 1.
    pub fn eta(&self, m: i64) -> Result<Series<T>> {
        match m {
            1 => self.theta(2)?.inv(),
            0 => self.kappa1.inv(),
            _ => {
                let p = (-m - 1) as usize;
                let seq = self.b_seq(2 * p + 1);
                quasidet(&hankel(&seq, p + 1)?, p, p)
            }
        }
    }

    /// theta_0 .. theta_{n_max}, computing the generating sequence once.
    pub fn thetas(&self, n_max: usize) -> Result<Vec<Series<T>>> {
        let mut out = vec![self.kappa_m1.inv()?];
        if n_max >= 1 {
            let seq = self.a_seq(2 * n_max - 1);
            for n in 1..=n_max {
                out.push(quasidet(&hankel(&seq[..2 * n - 1], n)?, n - 1, n - 1)?);
            }
        }
        Ok(out)
    }

    /// eta_1, eta_0, eta_{-1}, .. eta_{m_min} (index k holds eta_{1-k}),
    /// computing the generating sequence once.
    pub fn etas(&self, m_min: i64) -> Result<Vec<Series<T>>> {
        assert!(m_min <= 1);
        let mut out = vec![self.theta(2)?.inv()?];
        if m_min <= 0 {
            out.push(self.kappa1.inv()?);
        }
        if m_min <= -1 {
            let p_max = (-m_min - 1) as usize;
            let seq = self.b_seq(2 * p_max + 1);
            for p in 0..=p_max {
                out.push(quasidet(&hankel(&seq[..2 * p + 1], p + 1)?, p, p)?);
            }
        }
        Ok(out)
    }

    fn theta_residual_from(prev: &Series<T>, cur: &Series<T>, next: &Series<T>) -> Result<Series<T>> {
        let cur_inv = cur.inv()?;
        Ok(cur
            .deriv()
            .mul(&cur_inv)
            .deriv()
            .sub(&next.mul(&cur_inv))
            .add(&cur.mul(&prev.inv()?)))
    }

    fn eta_residual_from(prev: &Series<T>, cur: &Series<T>, next: &Series<T>) -> Result<Series<T>> {
        let cur_inv = cur.inv()?;
        Ok(cur_inv
            .mul(&cur.deriv())
            .deriv()
            .sub(&cur_inv.mul(prev))
            .add(&next.inv()?.mul(cur)))
    }

    /// Lattice residual (theta_n' theta_n^{-1})' - theta_{n+1} theta_n^{-1}
    /// + theta_n theta_{n-1}^{-1}, for n >= 1.
    pub fn residual_theta(&self, n: usize) -> Result<Series<T>> {
        assert!(n >= 1);
        Self::theta_residual_from(&self.theta(n - 1)?, &self.theta(n)?, &self.theta(n + 1)?)
    }

    /// Residuals for n = 1 ..= n_max with each theta computed once.
    pub fn residual_theta_range(&self, n_max: usize) -> Result<Vec<Series<T>>> {
        assert!(n_max >= 1);
        let th = self.thetas(n_max + 1)?;
        (1..=n_max)
            .map(|n| Self::theta_residual_from(&th[n - 1], &th[n], &th[n + 1]))
            .collect()
    }

    /// Lattice residual (eta_m^{-1} eta_m')' - eta_m^{-1} eta_{m-1}
    /// + eta_{m+1}^{-1} eta_m, for m <= 0.
    pub fn residual_eta(&self, m: i64) -> Result<Series<T>> {
        assert!(m <= 0);
        Self::eta_residual_from(&self.eta(m - 1)?, &self.eta(m)?, &self.eta(m + 1)?)
    }

    /// Residuals for m = 0 down to m_min with each eta computed once.
    pub fn residual_eta_range(&self, m_min: i64) -> Result<Vec<Series<T>>> {
        assert!(m_min <= 0);
        let et = self.etas(m_min - 1)?; // et[k] = eta_{1-k}
        (m_min..=0)
            .rev()
            .map(|m| {
                let k = (1 - m) as usize;
                Self::eta_residual_from(&et[k + 1], &et[k], &et[k - 1])
            })
            .collect()
    }

    /// Scalar tau function kappa_n (dim-1 chains only): Hankel
    /// determinant of the a's for n > 0, of the b's for n < 0, one at 0.
    pub fn kappa_scalar(&self, n: i64) -> Result<Series<T>> {
        assert_eq!(self.kappa1.dim, 1, "kappa_scalar is dim-1 only");
        if n == 0 {
            let ord = self.kappa1.order().min(self.kappa_m1.order());
            return Ok(Series::one(1, ord));
        }
        let p = n.unsigned_abs() as usize;
        let seq = if n > 0 { self.a_seq(2 * p - 1) } else { self.b_seq(2 * p - 1) };
        Ok(det_scalar(&hankel(&seq, p)?))
    }
}

fn gen_seq<T: Coefficient>(seed: &Series<T>, other: &Series<T>, len: usize) -> Vec<Series<T>> {
    let mut out: Vec<Series<T>> = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    out.push(seed.clone());
    for n in 1..len {
        let mut next = out[n - 1].deriv();
        if n >= 2 {
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                next = next.add(&out[i].mul(other).mul(&out[j]));
            }
        }
        out.push(next);
    }
    out
}

/// Solve the coupled second-order seed equations
///
///   k1''  = -t k1' - 2 k1 km1 k1 - (a0 - a1) k1
///   km1'' =  km1' t - 2 km1 k1 km1 - (a0 - a1 - 2) km1
///
/// order by order from matrix initial data (value, derivative) for each
/// seed, up to truncation order `order`.
pub fn solve_kappa_conditions<T: Coefficient>(
    k1_0: crate::mat::Mat<T>,
    k1_1: crate::mat::Mat<T>,
    km1_0: crate::mat::Mat<T>,
    km1_1: crate::mat::Mat<T>,
    alpha0: T,
    alpha1: T,
    order: usize,
) -> (Series<T>, Series<T>) {
    use crate::mat::Mat;
    let d = k1_0.dim;
    let mut c1: Vec<Mat<T>> = vec![k1_0, k1_1];
    let mut cm: Vec<Mat<T>> = vec![km1_0, km1_1];
    let lam1 = alpha0.sub(&alpha1); // coefficient on k1
    let lam2 = lam1.sub(&T::from_int(2)); // coefficient on km1
    for k in 0..order.saturating_sub(1) {
        // coefficient k of each right hand side; products run over i+j+l=k
        let mut conv1 = Mat::zero(d);
        let mut conv2 = Mat::zero(d);
        for i in 0..=k {
            for j in 0..=(k - i) {
                let l = k - i - j;
                conv1 = conv1.add(&c1[i].mul(&cm[j]).mul(&c1[l]));
                conv2 = conv2.add(&cm[i].mul(&c1[j]).mul(&cm[l]));
            }
        }
        // [t^k](t k1') = k * c1[k]
        let t_k1p = c1[k].scale(&T::from_int(k as i64));
        let t_kmp = cm[k].scale(&T::from_int(k as i64));
        let rhs1 = t_k1p
            .neg()
            .sub(&conv1.scale(&T::from_int(2)))
            .sub(&c1[k].scale(&lam1));
        let rhs2 = t_kmp
            .sub(&conv2.scale(&T::from_int(2)))
            .sub(&cm[k].scale(&lam2));
        let denom = T::from_int(((k + 2) * (k + 1)) as i64);
        c1.push(rhs1.scale(&T::one().div(&denom)));
        cm.push(rhs2.scale(&T::one().div(&denom)));
    }
    c1.truncate(order + 1);
    cm.truncate(order + 1);
    (Series::from_coeffs(d, c1), Series::from_coeffs(d, cm))
}

/// Residuals of the two seed equations for a given pair, for checking
/// that external seeds satisfy them.
pub fn kappa_condition_residuals<T: Coefficient>(
    k1: &Series<T>,
    km1: &Series<T>,
    alpha0: &T,
    alpha1: &T,
) -> (Series<T>, Series<T>) {
    let d = k1.dim;
    let ord = k1.order().min(km1.order());
    let t = Series::var(d, ord);
    let lam1 = alpha0.sub(alpha1);
    let lam2 = lam1.sub(&T::from_int(2));
    let r1 = k1
        .deriv()
        .deriv()
        .add(&t.mul(&k1.deriv()))
        .add(&k1.mul(km1).mul(k1).scale(&T::from_int(2)))
        .add(&k1.scale(&lam1));
    let r2 = km1
        .deriv()
        .deriv()
        .sub(&km1.deriv().mul(&t))
        .add(&km1.mul(k1).mul(km1).scale(&T::from_int(2)))
        .add(&km1.scale(&lam2));
    (r1, r2)
}

/// Dim-1 extra seed condition
///
///   km1' k1' + t (km1' k1 - km1 k1') + km1^2 k1^2
///     - (t^2 - a0 + a1 + 1) km1 k1 - a1 (a0 - 1) = 0.
pub fn scalar_third_condition_residual<T: Coefficient>(
    k1: &Series<T>,
    km1: &Series<T>,
    alpha0: &T,
    alpha1: &T,
) -> Series<T> {
    assert_eq!(k1.dim, 1);
    let ord = k1.order().min(km1.order());
    let t = Series::var(1, ord);
    let prod = km1.mul(k1);
    let c = alpha0
        .neg()
        .add(alpha1)
        .add(&T::from_int(1)); // -(a0) + a1 + 1 added to t^2 below
    let poly = t.mul(&t).add(&Series::scalar(1, c, ord));
    km1.deriv()
        .mul(&k1.deriv())
        .add(&t.mul(&km1.deriv().mul(k1).sub(&km1.mul(&k1.deriv()))))
        .add(&prod.mul(&prod))
        .sub(&poly.mul(&prod))
        .sub(&Series::scalar(
            1,
            alpha1.mul(&alpha0.sub(&T::from_int(1))),
            ord,
        ))
}

/// Solve the dim-1 third condition at t = 0 for km1'(0), given the other
/// three scalar initial values (k1'(0) must be nonzero).
pub fn solve_scalar_km1_prime<T: Coefficient>(
    k1_0: &T,
    k1_1: &T,
    km1_0: &T,
    alpha0: &T,
    alpha1: &T,
) -> T {
    let prod = km1_0.mul(k1_0);
    let c = alpha0.neg().add(alpha1).add(&T::from_int(1));
    let rhs = alpha1
        .mul(&alpha0.sub(&T::from_int(1)))
        .sub(&prod.mul(&prod))
        .add(&c.mul(&prod));
    // residual at t=0: km1'(0) k1'(0) + prod^2 - c*prod - a1(a0-1) = 0
    rhs.div(k1_1)
}
