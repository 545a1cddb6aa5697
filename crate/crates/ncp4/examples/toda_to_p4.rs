//! From Toda chain data to Painleve IV solutions. Two seed series
//! solving a pair of second-order conditions generate theta/eta
//! lattices; each lattice point yields a candidate solution triple.
//! At matrix level, one flow equation holds automatically and another
//! reduces to an explicit constraint; in the scalar case a third seed
//! condition closes the system and f2 satisfies the familiar
//! single-function fourth Painleve equation.

use ncp4::painleve::{
    eta_constraint_residual, p4_from_eta, p4_from_theta, scalar_p4_residual,
    theta_constraint_residual,
};
use ncp4::toda::{solve_kappa_conditions, solve_scalar_km1_prime, TodaChain};
use ncp4::{Mat, Rat};
use ncp4::coeff::Coefficient;

fn main() {
    let order = 12;
    let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];

    // --- matrix-valued seeds (dim 2) -------------------------------
    let (k1, km1) = solve_kappa_conditions(
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(1)],
            vec![Rat::from_int(0), Rat::from_int(1)],
        ]),
        Mat::identity(2),
        Mat::from_rows(vec![
            vec![Rat::from_int(2), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]),
        Mat::from_rows(vec![
            vec![Rat::from_int(-2), Rat::from_int(0)],
            vec![Rat::from_int(-1), Rat::from_int(-2)],
        ]),
        alpha[0].clone(),
        alpha[1].clone(),
        order,
    );
    let chain = TodaChain::new(k1, km1);

    let st = p4_from_theta(&chain, &alpha, 0).unwrap();
    let r = st.residuals(&Rat::from_int(1));
    let keep = st.order().saturating_sub(1);
    println!("theta branch, lattice point 0:");
    println!("  automatic equation residual: {}", r[2].max_norm());
    let c = theta_constraint_residual(&st);
    let link = r[1].truncate(keep).sub(&c.truncate(keep));
    println!("  remaining equation equals the constraint: residual {}", link.max_norm());

    let st = p4_from_eta(&chain, &alpha, 0).unwrap();
    let r = st.residuals(&Rat::from_int(1));
    let keep = st.order().saturating_sub(1);
    let c = eta_constraint_residual(&st);
    println!("eta branch, lattice point 0:");
    println!("  automatic equation residual: {}", r[2].max_norm());
    println!(
        "  remaining equation equals the constraint: residual {}",
        r[0].truncate(keep).sub(&c.truncate(keep)).max_norm()
    );

    // --- scalar seeds with the third condition ---------------------
    let k1_0 = Rat::from_int(1);
    let k1_1 = Rat::from_int(2);
    let km1_0 = Rat::from_int(-1);
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
    let chain = TodaChain::new(k1, km1);
    println!("scalar seeds with the closing condition:");
    for lat in [0i64, 1] {
        let st = p4_from_theta(&chain, &alpha, lat).unwrap();
        let worst = st
            .residuals(&Rat::from_int(1))
            .iter()
            .map(|r| r.max_norm())
            .fold(0.0, f64::max);
        let y = scalar_p4_residual(&st.f[2], &alpha, lat).unwrap();
        println!(
            "  lattice point {lat}: full flow residual {worst}, single-function residual {}",
            y.max_norm()
        );
    }
}
