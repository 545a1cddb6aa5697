//! Arithmetic in the ring of matrix-coefficient truncated power series:
//! exact inversion, the derivation, and centrality of the variable.

use ncp4::{Mat, Rat, Series};
use ncp4::coeff::Coefficient;
use ncp4::series::commutator;

fn main() {
    let dim = 2;
    let order = 8;

    // a = A0 + A1 t with an invertible constant term
    let a0 = Mat::from_rows(vec![
        vec![Rat::from_int(1), Rat::from_int(2)],
        vec![Rat::from_int(0), Rat::from_int(1)],
    ]);
    let a1 = Mat::from_rows(vec![
        vec![Rat::from_int(3), Rat::from_int(-1)],
        vec![Rat::from_int(1), Rat::from_int(0)],
    ]);
    let a = Series::constant(a0, order).add(&Series::var(dim, order).mul(&Series::constant(a1, order)));

    let ai = a.inv().expect("constant term is invertible");
    let left = ai.mul(&a).sub(&Series::one(dim, order));
    let right = a.mul(&ai).sub(&Series::one(dim, order));
    println!("two-sided inverse residuals: {} / {}", left.max_norm(), right.max_norm());

    // Leibniz rule for the derivation d/dt
    let b = ai.mul(&a.add(&Series::one(dim, order)));
    let leibniz = a.mul(&b).deriv().sub(&a.deriv().mul(&b)).sub(&a.mul(&b.deriv()));
    println!("Leibniz residual (order {}): {}", leibniz.order(), leibniz.max_norm());

    // t commutes with every series even though matrices do not commute
    let central = commutator(&Series::var(dim, order), &a);
    println!("[t, a] norm: {}", central.max_norm());
    println!(
        "[a, b] norm (matrices genuinely noncommutative): {}",
        commutator(&a, &b).max_norm()
    );
}
