//! Series-valued Sylvester equations a x + x b = s are solved order by
//! order whenever the constant terms have no opposite eigenvalue pair;
//! a genuine collision is reported rather than producing garbage.

use ncp4::error::NcError;
use ncp4::sylvester::sylvester_solve;
use ncp4::{Mat, Rat, Series};
use ncp4::coeff::Coefficient;

fn main() {
    let order = 8;
    let a = Series::constant(
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(1)],
            vec![Rat::from_int(0), Rat::from_int(2)],
        ]),
        order,
    )
    .add(&Series::var(2, order));
    let b = Series::constant(
        Mat::from_rows(vec![
            vec![Rat::from_int(3), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]),
        order,
    );
    let s = Series::constant(
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(-2)],
            vec![Rat::from_int(4), Rat::from_int(1)],
        ]),
        order,
    )
    .add(&Series::var(2, order).scale(&Rat::from_int(5)));

    let x = sylvester_solve(&a, &b, &s).unwrap();
    let r = a.mul(&x).add(&x.mul(&b)).sub(&s);
    println!("a x + x b = s residual: {}", r.max_norm());

    // spectra of diag(1,-1) and diag(1,-1) collide: 1 + (-1) = 0
    let c = Series::constant(
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(0)],
            vec![Rat::from_int(0), Rat::from_int(-1)],
        ]),
        order,
    );
    match sylvester_solve(&c, &c, &s) {
        Err(NcError::SpectralCollision) => println!("spectral collision detected as expected"),
        other => println!("unexpected outcome: {other:?}"),
    }
}
