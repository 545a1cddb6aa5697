//! Hamiltonian formulation with noncommutative variables: the cubic
//! Hamiltonian written in the solution triple agrees with its form in
//! canonical variables (q, p, t), the canonical equations hold on
//! zero-integral solutions, and directional derivatives match cyclic
//! gradients under the trace.

use ncp4::ham::{
    canonical_residuals, hamiltonian_f, hamiltonian_qpt, scalar_poisson_residuals, state_bindings,
    Sym,
};
use ncp4::painleve::p4_solve_series;
use ncp4::{Mat, Rat, Series};
use ncp4::coeff::Coefficient;

fn main() {
    let dim = 2;
    let order = 10;
    let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];

    // zero-integral initial data: f0 + f1 + f2 = 0, so the combination
    // f0 + f1 + f2 equals t along the flow
    let f0 = Mat::from_rows(vec![
        vec![Rat::from_int(1), Rat::from_int(1)],
        vec![Rat::from_int(0), Rat::from_int(2)],
    ]);
    let f1 = Mat::from_rows(vec![
        vec![Rat::from_int(0), Rat::from_int(1)],
        vec![Rat::from_int(1), Rat::from_int(0)],
    ]);
    let f2 = f0.add(&f1).neg();
    let st = p4_solve_series([f0, f1, f2], alpha.clone(), &Rat::from_int(1), order);
    let assign = state_bindings(&st);

    let a0 = Rat::from_ratio(2, 3);
    let a1 = Rat::from_ratio(1, 3);
    let hf = hamiltonian_f(&a0, &a1, &alpha).eval(&assign, dim, order);
    let hq = hamiltonian_qpt(&a0, &a1, &alpha).eval(&assign, dim, order);
    println!("two Hamiltonian forms agree: residual {}", hf.sub(&hq).max_norm());

    let (rq, rp) = canonical_residuals(&st, &Rat::from_int(1), &Rat::from_int(1));
    println!("canonical equation for q: residual {}", rq.max_norm());
    println!("canonical equation for p: residual {}", rp.max_norm());

    // trace oracle: tr(dH[E]) = tr(E * cyclic gradient)
    let h = hamiltonian_qpt(&Rat::from_int(1), &Rat::from_int(1), &alpha);
    let e = Series::constant(
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(-1)],
            vec![Rat::from_int(2), Rat::from_int(0)],
        ]),
        order,
    );
    for x in [Sym::Q, Sym::P, Sym::T] {
        let dir = h.eval_directional(x, &e, &assign, dim, order);
        let grad = e.mul(&h.cyclic_grad(x).eval(&assign, dim, order));
        let worst = dir
            .coeffs
            .iter()
            .zip(&grad.coeffs)
            .map(|(l, r)| l.trace().sub(&r.trace()).magnitude())
            .fold(0.0, f64::max);
        println!("trace-gradient oracle for {x:?}: residual {worst}");
    }

    // scalar Poisson structure reproduces the flow
    let st1 = p4_solve_series(
        [
            Mat::scalar(1, Rat::from_int(2)),
            Mat::scalar(1, Rat::from_int(-1)),
            Mat::scalar(1, Rat::from_int(-1)),
        ],
        alpha,
        &Rat::from_int(1),
        order,
    );
    let worst = scalar_poisson_residuals(&st1)
        .iter()
        .map(|r| r.max_norm())
        .fold(0.0, f64::max);
    println!("scalar Poisson-bracket flow residual: {worst}");
}
