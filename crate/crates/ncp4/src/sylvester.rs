//! Sylvester-type equation a x + x b = s over the truncated series ring.
//!
//! Solved order by order: the degree-zero slice is a d^2-by-d^2 linear
//! system; higher slices reuse its factorization with a corrected right
//! hand side. The degree-zero operator is singular exactly when some
//! eigenvalue of a(0) equals the negative of an eigenvalue of b(0); that
//! case is reported as `SpectralCollision`.

use crate::coeff::Coefficient;
use crate::error::{NcError, Result};
use crate::mat::Mat;
use crate::series::Series;

/// Solve the dense n-by-n system M x = rhs in place; None when singular.
fn solve_linear<T: Coefficient>(mut m: Vec<Vec<T>>, mut rhs: Vec<T>) -> Option<Vec<T>> {
    let n = rhs.len();
    for col in 0..n {
        let mut piv = None;
        let mut best = 0.0_f64;
        for r in col..n {
            if !m[r][col].is_zero() {
                if T::EXACT {
                    piv = Some(r);
                    break;
                }
                let mag = m[r][col].magnitude();
                if mag > best {
                    best = mag;
                    piv = Some(r);
                }
            }
        }
        let piv = piv?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let p = m[col][col].clone();
        for j in col..n {
            m[col][j] = m[col][j].div(&p);
        }
        rhs[col] = rhs[col].div(&p);
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in col..n {
                m[r][j] = m[r][j].sub(&f.mul(&m[col][j]));
            }
            rhs[r] = rhs[r].sub(&f.mul(&rhs[col]));
        }
    }
    Some(rhs)
}

/// Solve a x + x b = s for x, to the common reliable order of the inputs.
pub fn sylvester_solve<T: Coefficient>(
    a: &Series<T>,
    b: &Series<T>,
    s: &Series<T>,
) -> Result<Series<T>> {
    let d = a.dim;
    if b.dim != d || s.dim != d {
        return Err(NcError::DimensionMismatch(d, b.dim.max(s.dim)));
    }
    let n = a.order().min(b.order()).min(s.order());

    // Degree-zero operator M[(i,j),(k,l)] = a0[i,k] d_{jl} + b0[l,j] d_{ik}.
    let a0 = a.coeff(0);
    let b0 = b.coeff(0);
    let nn = d * d;
    let mut m = vec![vec![T::zero(); nn]; nn];
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            for k in 0..d {
                m[row][k * d + j] = m[row][k * d + j].add(a0.get(i, k));
            }
            for l in 0..d {
                m[row][i * d + l] = m[row][i * d + l].add(b0.get(l, j));
            }
        }
    }

    let mut out = vec![Mat::zero(d); n + 1];
    for k in 0..=n {
        // rhs_k = s_k - sum_{j=1..k} (a_j x_{k-j} + x_{k-j} b_j)
        let mut rhs_mat = s.coeff(k).clone();
        for j in 1..=k {
            rhs_mat = rhs_mat.sub(&a.coeff(j).mul(&out[k - j]));
            rhs_mat = rhs_mat.sub(&out[k - j].mul(b.coeff(j)));
        }
        let mut rhs = Vec::with_capacity(nn);
        for i in 0..d {
            for j in 0..d {
                rhs.push(rhs_mat.get(i, j).clone());
            }
        }
        let x = solve_linear(m.clone(), rhs).ok_or(NcError::SpectralCollision)?;
        let mut xm = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                xm.set(i, j, x[i * d + j].clone());
            }
        }
        out[k] = xm;
    }
    Ok(Series::from_coeffs(d, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rat;

    #[test]
    fn recovers_known_solution() {
        // pick x, compute s = a x + x b, solve back
        let t: Series<Rat> = Series::var(2, 6);
        let mut a = Series::one(2, 6);
        a.coeffs[0] = Mat::from_rows(vec![
            vec![Rat::from_int(2), Rat::from_int(1)],
            vec![Rat::from_int(0), Rat::from_int(3)],
        ]);
        let a = a.add(&t);
        let mut b = Series::one(2, 6);
        b.coeffs[1] = Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(-1)],
            vec![Rat::from_int(2), Rat::from_int(0)],
        ]);
        let mut x = Series::zero(2, 6);
        x.coeffs[0] = Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(4)],
            vec![Rat::from_int(-2), Rat::from_int(5)],
        ]);
        x.coeffs[2] = Mat::identity(2);
        let s = a.mul(&x).add(&x.mul(&b));
        let got = sylvester_solve(&a, &b, &s).unwrap();
        assert!(got.sub(&x).is_zero());
    }

    #[test]
    fn spectral_collision_detected() {
        // a0 = diag(1,-1), b0 = diag(1,-1): eigenvalue 1 of a meets -(-1) of b
        let a: Series<Rat> = Series::constant(
            Mat::from_rows(vec![
                vec![Rat::from_int(1), Rat::from_int(0)],
                vec![Rat::from_int(0), Rat::from_int(-1)],
            ]),
            4,
        );
        let s: Series<Rat> = Series::one(2, 4);
        assert_eq!(
            sylvester_solve(&a, &a, &s).unwrap_err(),
            NcError::SpectralCollision
        );
    }
}
