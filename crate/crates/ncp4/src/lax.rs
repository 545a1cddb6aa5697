//! Lax pairs for the a=1 flow and their zero-curvature residuals.
//!
//! A Lax operator is a Laurent polynomial in a spectral variable whose
//! coefficients are structural matrices with series entries. The
//! compatibility condition checked here is
//!
//!   d/dt A - d/lambda B - (B A - A B) = 0,
//!
//! evaluated per spectral exponent. Two realizations are provided: a
//! 3-by-3 pair (blocks at lambda^0 and lambda^{-1} against lambda^1 and
//! lambda^0) and a reduced 2-by-2 pair obtained by fixing beta2 = -1.

use crate::coeff::Coefficient;
use crate::error::Result;
use crate::painleve::P4State;
use crate::series::Series;
use std::collections::BTreeMap;

/// Laurent polynomial in the spectral variable; each exponent maps to a
/// `size`-square matrix of series.
#[derive(Clone)]
pub struct LambdaMatrix<T: Coefficient> {
    pub size: usize,
    pub blocks: BTreeMap<i32, Vec<Vec<Series<T>>>>,
}

impl<T: Coefficient> LambdaMatrix<T> {
    pub fn new(size: usize) -> Self {
        LambdaMatrix { size, blocks: BTreeMap::new() }
    }

    /// Insert a whole block at a spectral exponent.
    pub fn set_block(&mut self, exp: i32, rows: Vec<Vec<Series<T>>>) {
        assert_eq!(rows.len(), self.size);
        for r in &rows {
            assert_eq!(r.len(), self.size);
        }
        self.blocks.insert(exp, rows);
    }

    fn zero_block(&self, dim: usize, order: usize) -> Vec<Vec<Series<T>>> {
        vec![vec![Series::zero(dim, order); self.size]; self.size]
    }

    fn any_entry(&self) -> &Series<T> {
        self.blocks.values().next().unwrap().first().unwrap().first().unwrap()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let probe = self.any_entry();
        let (dim, order) = (probe.dim, probe.order());
        let mut out = LambdaMatrix::new(self.size);
        let exps: Vec<i32> = self
            .blocks
            .keys()
            .chain(other.blocks.keys())
            .copied()
            .collect();
        for e in exps {
            if out.blocks.contains_key(&e) {
                continue;
            }
            let mut blk = self.zero_block(dim, order);
            for src in [self.blocks.get(&e), other.blocks.get(&e)].into_iter().flatten() {
                for i in 0..self.size {
                    for j in 0..self.size {
                        blk[i][j] = blk[i][j].add(&src[i][j]);
                    }
                }
            }
            out.blocks.insert(e, blk);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = LambdaMatrix::new(self.size);
        for (&e, blk) in &self.blocks {
            out.blocks
                .insert(e, blk.iter().map(|r| r.iter().map(Series::neg).collect()).collect());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product with convolution over spectral exponents.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let probe = self.any_entry();
        let (dim, order) = (probe.dim, probe.order().min(other.any_entry().order()));
        let mut out = LambdaMatrix::new(self.size);
        for (&e1, b1) in &self.blocks {
            for (&e2, b2) in &other.blocks {
                let e = e1 + e2;
                let entry = out.blocks.entry(e).or_insert_with(|| {
                    vec![vec![Series::zero(dim, order); self.size]; self.size]
                });
                for i in 0..self.size {
                    for k in 0..self.size {
                        if b1[i][k].is_zero() {
                            continue;
                        }
                        for j in 0..self.size {
                            entry[i][j] = entry[i][j].add(&b1[i][k].mul(&b2[k][j]));
                        }
                    }
                }
            }
        }
        out
    }

    /// Entrywise t-derivative (series order drops by one).
    pub fn deriv_t(&self) -> Self {
        let mut out = LambdaMatrix::new(self.size);
        for (&e, blk) in &self.blocks {
            out.blocks.insert(
                e,
                blk.iter().map(|r| r.iter().map(Series::deriv).collect()).collect(),
            );
        }
        out
    }

    /// Derivative in the spectral variable: the block at exponent e
    /// contributes e times itself at exponent e - 1.
    pub fn deriv_lambda(&self) -> Self {
        let mut out = LambdaMatrix::new(self.size);
        for (&e, blk) in &self.blocks {
            if e == 0 {
                continue;
            }
            let c = T::from_int(e as i64);
            out.blocks.insert(
                e - 1,
                blk.iter()
                    .map(|r| r.iter().map(|s| s.scale(&c)).collect())
                    .collect(),
            );
        }
        out
    }

    /// Truncate every entry to `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = LambdaMatrix::new(self.size);
        for (&e, blk) in &self.blocks {
            out.blocks.insert(
                e,
                blk.iter()
                    .map(|r| r.iter().map(|s| s.truncate(order)).collect())
                    .collect(),
            );
        }
        out
    }

    pub fn max_norm(&self) -> f64 {
        self.blocks
            .values()
            .flatten()
            .flatten()
            .map(Series::max_norm)
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().flatten().flatten().all(Series::is_zero)
    }

    /// Minimum zero-through order over all entries and exponents.
    pub fn zero_through(&self, tol: f64) -> usize {
        self.blocks
            .values()
            .flatten()
            .flatten()
            .map(|s| s.zero_through(tol))
            .min()
            .unwrap_or(0)
    }
}

/// d/dt A - d/lambda B - (B A - A B), truncated to the common reliable
/// order after differentiation.
pub fn zero_curvature_residual<T: Coefficient>(
    a: &LambdaMatrix<T>,
    b: &LambdaMatrix<T>,
) -> LambdaMatrix<T> {
    let ord = a
        .any_entry()
        .order()
        .min(b.any_entry().order())
        .saturating_sub(1);
    a.deriv_t()
        .sub(&b.deriv_lambda())
        .sub(&b.mul(a).sub(&a.mul(b)))
        .truncate(ord)
}

/// The three lattice parameters (beta0, beta1, beta2) matching a state's
/// parameter triple, with beta2 freely chosen:
/// beta1 = beta2 + alpha2, beta0 = beta1 + alpha1.
pub fn beta_from_alpha<T: Coefficient>(alpha: &[T; 3], beta2: &T) -> [T; 3] {
    let beta1 = beta2.add(&alpha[2]);
    let beta0 = beta1.add(&alpha[1]);
    [beta0, beta1, beta2.clone()]
}

/// Parameters of the n-th lattice point recovered from the betas:
/// alpha0 = 1 + beta2 - beta0 - n, alpha1 = beta0 - beta1 + n,
/// alpha2 = beta1 - beta2.
pub fn alpha_from_beta<T: Coefficient>(beta: &[T; 3], n: i64) -> [T; 3] {
    [
        T::one().add(&beta[2]).sub(&beta[0]).sub(&T::from_int(n)),
        beta[0].sub(&beta[1]).add(&T::from_int(n)),
        beta[1].sub(&beta[2]),
    ]
}

/// 3-by-3 pair: A = A0 + A_{-1} lambda^{-1}, B = B1 lambda + B0 with
///
///   A0 = [[0,1,f0],[0,0,1],[0,0,0]],
///   A_{-1} = [[b0,0,0],[f1,b1,0],[1,f2,b2]],
///   B1 = E_{13},
///   B0 = [[-f2,0,0],[1,-f0,0],[0,1,-f1]].
pub fn ny_pair<T: Coefficient>(
    st: &P4State<T>,
    beta2: &T,
) -> Result<(LambdaMatrix<T>, LambdaMatrix<T>)> {
    let dim = st.dim();
    let ord = st.order();
    let z = || Series::zero(dim, ord);
    let one = || Series::one(dim, ord);
    let sc = |c: &T| Series::scalar(dim, c.clone(), ord);
    let [b0, b1, b2] = beta_from_alpha(&st.alpha, beta2);
    let [f0, f1, f2] = st.f.clone();

    let mut a = LambdaMatrix::new(3);
    a.set_block(
        0,
        vec![
            vec![z(), one(), f0.clone()],
            vec![z(), z(), one()],
            vec![z(), z(), z()],
        ],
    );
    a.set_block(
        -1,
        vec![
            vec![sc(&b0), z(), z()],
            vec![f1.clone(), sc(&b1), z()],
            vec![one(), f2.clone(), sc(&b2)],
        ],
    );

    let mut b = LambdaMatrix::new(3);
    b.set_block(
        1,
        vec![
            vec![z(), z(), one()],
            vec![z(), z(), z()],
            vec![z(), z(), z()],
        ],
    );
    b.set_block(
        0,
        vec![
            vec![f2.neg(), z(), z()],
            vec![one(), f0.neg(), z()],
            vec![z(), one(), f1.neg()],
        ],
    );
    Ok((a, b))
}

/// Reduced 2-by-2 pair at beta2 = -1:
///
///   A = P mu + Q + R mu^{-1}, B = P mu + S, with P = E_{11},
///   Q = [[f0+f1+f2, -f1 f2 + (b1+1)], [1, 0]],
///   R = [[f2 f1 + (b0+1), -f2 f1 f2 - (b0-b1) f2], [f1, -f1 f2 + (b1+1)]],
///   S = [[0, -f1 f2 + (b1+1)], [1, -f0-f2]].
pub fn jm_pair<T: Coefficient>(
    st: &P4State<T>,
) -> Result<(LambdaMatrix<T>, LambdaMatrix<T>)> {
    let dim = st.dim();
    let ord = st.order();
    let z = || Series::zero(dim, ord);
    let one = || Series::one(dim, ord);
    let sc = |c: &T| Series::scalar(dim, c.clone(), ord);
    let beta2 = T::from_int(-1);
    let [b0, b1, _] = beta_from_alpha(&st.alpha, &beta2);
    let [f0, f1, f2] = st.f.clone();
    let q01 = f1.mul(&f2).neg().add(&sc(&b1.add(&T::one())));

    let p_block = vec![vec![one(), z()], vec![z(), z()]];
    let mut a = LambdaMatrix::new(2);
    a.set_block(1, p_block.clone());
    a.set_block(
        0,
        vec![
            vec![f0.add(&f1).add(&f2), q01.clone()],
            vec![one(), z()],
        ],
    );
    a.set_block(
        -1,
        vec![
            vec![
                f2.mul(&f1).add(&sc(&b0.add(&T::one()))),
                f2.mul(&f1).mul(&f2).neg().sub(&f2.scale(&b0.sub(&b1))),
            ],
            vec![f1.clone(), q01.clone()],
        ],
    );

    let mut b = LambdaMatrix::new(2);
    b.set_block(1, p_block);
    b.set_block(
        0,
        vec![
            vec![z(), q01],
            vec![one(), f0.add(&f2).neg()],
        ],
    );
    Ok((a, b))
}
