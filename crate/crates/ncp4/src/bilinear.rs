//! Hirota bilinear forms for the dim-1 tau layer.
//!
//! D_t^n f.g = sum_k (-1)^k C(n,k) f^{(n-k)} g^{(k)}. The module checks
//! three families of identities for scalar chains:
//!
//! - the Hankel determinant recursion
//!   kappa_{n+1} kappa_{n-1} = kappa_n'' kappa_n - (kappa_n')^2
//!   + kappa_{-1} kappa_1 kappa_n^2, valid for every seed pair;
//! - the ladder form
//!   (D_t^2 - t D_t + 2 kappa_{-1} kappa_1 + (alpha0 - alpha1 + 2n))
//!   kappa_n . kappa_{n+1} = 0, valid when the seeds solve their
//!   second-order conditions;
//! - the tau-pair form written through logarithmic derivatives h_i of
//!   tau functions attached to a zero-integral flow solution.

use crate::coeff::Coefficient;
use crate::painleve::P4State;
use crate::series::Series;

fn binomial(n: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for i in 0..k as i64 {
        acc = acc * (n as i64 - i) / (i + 1);
    }
    acc
}

/// Hirota derivative D_t^n f.g.
pub fn hirota<T: Coefficient>(n: u32, f: &Series<T>, g: &Series<T>) -> Series<T> {
    let mut fd: Vec<Series<T>> = vec![f.clone()];
    let mut gd: Vec<Series<T>> = vec![g.clone()];
    for _ in 0..n {
        fd.push(fd.last().unwrap().deriv());
        gd.push(gd.last().unwrap().deriv());
    }
    let mut acc: Option<Series<T>> = None;
    for k in 0..=n {
        let c = binomial(n, k) * if k % 2 == 1 { -1 } else { 1 };
        let term = fd[(n - k) as usize].mul(&gd[k as usize]).scale(&T::from_int(c));
        acc = Some(match acc {
            Some(a) => a.truncate(term.order()).add(&term),
            None => term,
        });
    }
    acc.unwrap_or_else(|| f.mul(g))
}

/// Residual of the determinant recursion around kappa_n:
/// (1/2) D_t^2 kappa_n . kappa_n + kappa_{-1} kappa_1 kappa_n^2
/// - kappa_{n+1} kappa_{n-1}.
pub fn kappa_recursion_residual<T: Coefficient>(
    seed_product: &Series<T>,
    prev: &Series<T>,
    cur: &Series<T>,
    next: &Series<T>,
) -> Series<T> {
    let d2 = hirota(2, cur, cur).scale(&T::from_ratio(1, 2));
    let ord = d2.order().min(prev.order()).min(next.order());
    d2.truncate(ord)
        .add(&seed_product.mul(cur).mul(cur).truncate(ord))
        .sub(&next.mul(prev).truncate(ord))
}

/// Residual of the ladder form:
/// (D_t^2 - t D_t + 2 kappa_{-1} kappa_1 + (alpha0 - alpha1 + 2n))
/// kappa_n . kappa_{n+1}.
pub fn kappa_ladder_residual<T: Coefficient>(
    seed_product: &Series<T>,
    cur: &Series<T>,
    next: &Series<T>,
    alpha0: &T,
    alpha1: &T,
    n: i64,
) -> Series<T> {
    let d2 = hirota(2, cur, next);
    let d1 = hirota(1, cur, next);
    let ord = d2.order().min(d1.order().saturating_sub(1));
    let t = Series::var(cur.dim, ord);
    let c = alpha0.sub(alpha1).add(&T::from_int(2 * n));
    let pot = seed_product
        .scale(&T::from_int(2))
        .truncate(ord)
        .add(&Series::scalar(cur.dim, c, ord));
    d2.truncate(ord)
        .sub(&t.mul(&d1.truncate(ord)))
        .add(&pot.mul(&cur.mul(next).truncate(ord)))
}

/// The three dim-1 Hamiltonians h_i of a state, sharing the cubic
/// f0 f1 f2 and differing in the linear part.
pub fn tau_hamiltonians<T: Coefficient>(st: &P4State<T>) -> [Series<T>; 3] {
    assert_eq!(st.dim(), 1, "tau layer is dim-1 only");
    let ord = st.order();
    let cube = st.f[0].mul(&st.f[1]).mul(&st.f[2]);
    let [a0, a1, a2] = st.alpha.clone();
    let third = T::from_ratio(1, 3);
    let lin = |c0: T, c1: T, c2: T| {
        st.f[0]
            .scale(&c0.mul(&third))
            .add(&st.f[1].scale(&c1.mul(&third)))
            .add(&st.f[2].scale(&c2.mul(&third)))
    };
    [
        cube.add(&lin(
            a1.sub(&a2),
            a1.add(&a2.mul(&T::from_int(2))),
            a1.mul(&T::from_int(2)).add(&a2).neg(),
        ))
        .truncate(ord),
        cube.add(&lin(
            a2.mul(&T::from_int(2)).add(&a0).neg(),
            a2.sub(&a0),
            a2.add(&a0.mul(&T::from_int(2))),
        ))
        .truncate(ord),
        cube.add(&lin(
            a0.add(&a1.mul(&T::from_int(2))),
            a0.mul(&T::from_int(2)).add(&a1).neg(),
            a0.sub(&a1),
        ))
        .truncate(ord),
    ]
}

/// Residual of the tau-pair identity for logarithmic derivatives
/// (h_i, h_j) of tau_i, tau_j:
///
///   h_i' + h_i^2 - 2 h_i h_j + h_j' + h_j^2 + t (h_i - h_j) / 3
///   - 2 t^2 / 9 + (alpha_i - alpha_j) / 3.
pub fn tau_pair_residual<T: Coefficient>(
    h_i: &Series<T>,
    h_j: &Series<T>,
    alpha_i: &T,
    alpha_j: &T,
) -> Series<T> {
    let ord = h_i.order().min(h_j.order()).saturating_sub(1);
    let t = Series::var(1, ord);
    h_i.deriv()
        .truncate(ord)
        .add(&h_i.mul(h_i).truncate(ord))
        .sub(&h_i.mul(h_j).scale(&T::from_int(2)).truncate(ord))
        .add(&h_j.deriv().truncate(ord))
        .add(&h_j.mul(h_j).truncate(ord))
        .add(&t.mul(&h_i.sub(h_j).truncate(ord)).scale(&T::from_ratio(1, 3)))
        .sub(&t.mul(&t).scale(&T::from_ratio(2, 9)))
        .add(&Series::scalar(1, alpha_i.sub(alpha_j).mul(&T::from_ratio(1, 3)), ord))
}

/// All three tau-pair residuals (0,1), (1,2), (2,0) of a dim-1 state
/// with vanishing first integral.
pub fn tau_pair_residuals<T: Coefficient>(st: &P4State<T>) -> [Series<T>; 3] {
    let h = tau_hamiltonians(st);
    std::array::from_fn(|i| {
        let j = (i + 1) % 3;
        tau_pair_residual(&h[i], &h[j], &st.alpha[i], &st.alpha[j])
    })
}
