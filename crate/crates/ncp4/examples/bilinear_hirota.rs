//! Bilinear layer: Hirota derivative operators, the determinant
//! recursion for the scalar kappa ladder, its bilinear ladder form,
//! and pairwise identities for the three tau-type Hamiltonians.

use ncp4::bilinear::{hirota, kappa_ladder_residual, kappa_recursion_residual, tau_pair_residuals};
use ncp4::painleve::p4_solve_series;
use ncp4::toda::{solve_kappa_conditions, solve_scalar_km1_prime, TodaChain};
use ncp4::{Mat, Rat, Series};
use ncp4::coeff::Coefficient;

fn main() {
    let order = 12;
    let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];

    // D_t^1 is antisymmetric, so D f . f = 0
    let f = Series::one(1, order)
        .add(&Series::var(1, order).scale(&Rat::from_int(3)))
        .inv()
        .unwrap();
    println!("D f.f norm: {}", hirota(1, &f, &f).max_norm());

    // determinant recursion: any seed pair gives a kappa ladder
    // satisfying the bilinear recursion in both directions
    let chain = TodaChain::new(
        Series::one(1, order).add(&Series::var(1, order)),
        Series::one(1, order)
            .sub(&Series::var(1, order).scale(&Rat::from_ratio(1, 2)))
            .inv()
            .unwrap()
            .scale(&Rat::from_int(2)),
    );
    let prod = chain.kappa_m1.mul(&chain.kappa1);
    for n in -2i64..=2 {
        let r = kappa_recursion_residual(
            &prod,
            &chain.kappa_scalar(n - 1).unwrap(),
            &chain.kappa_scalar(n).unwrap(),
            &chain.kappa_scalar(n + 1).unwrap(),
        );
        println!("determinant recursion at level {n}: residual {}", r.max_norm());
    }

    // ladder form needs seeds solving the second-order conditions
    let k1_0 = Rat::from_int(1);
    let k1_1 = Rat::from_int(1);
    let km1_0 = Rat::from_int(2);
    let km1_1 = solve_scalar_km1_prime(&k1_0, &k1_1, &km1_0, &alpha[0], &alpha[1]);
    let (k1, km1) = solve_kappa_conditions(
        Mat::scalar(1, k1_0),
        Mat::scalar(1, k1_1),
        Mat::scalar(1, km1_0),
        Mat::scalar(1, km1_1),
        alpha[0].clone(),
        alpha[1].clone(),
        order,
    );
    let solved = TodaChain::new(k1.clone(), km1.clone());
    let prod = km1.mul(&k1);
    for n in 0i64..=1 {
        let r = kappa_ladder_residual(
            &prod,
            &solved.kappa_scalar(n).unwrap(),
            &solved.kappa_scalar(n + 1).unwrap(),
            &alpha[0],
            &alpha[1],
            n,
        );
        println!("bilinear ladder at level {n}: residual {}", r.max_norm());
    }

    // tau-type Hamiltonian pair identities on a zero-integral solution
    let st = p4_solve_series(
        [
            Mat::scalar(1, Rat::from_int(1)),
            Mat::scalar(1, Rat::from_int(2)),
            Mat::scalar(1, Rat::from_int(-3)),
        ],
        alpha,
        &Rat::from_int(1),
        order,
    );
    for (k, r) in tau_pair_residuals(&st).iter().enumerate() {
        println!("tau pair identity {k}: residual {}", r.max_norm());
    }
}
