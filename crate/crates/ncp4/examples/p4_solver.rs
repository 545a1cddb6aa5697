//! Order-by-order series solver for the symmetric three-component
//! Painleve IV system with matrix unknowns, including the
//! one-parameter interpolation of orderings and the first integral.

use ncp4::painleve::p4_solve_series;
use ncp4::{Mat, Rat};
use ncp4::coeff::Coefficient;

fn main() {

    let order = 12;
    let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];

    let init = [
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(2)],
            vec![Rat::from_int(0), Rat::from_int(-1)],
        ]),
        Mat::from_rows(vec![
            vec![Rat::from_int(0), Rat::from_int(1)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]),
        Mat::from_rows(vec![
            vec![Rat::from_int(2), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]),
    ];

    let st = p4_solve_series(init.clone(), alpha.clone(), &Rat::from_int(1), order);
    for (i, r) in st.residuals(&Rat::from_int(1)).iter().enumerate() {
        println!("flow equation {i}: residual {} through order {}", r.max_norm(), r.order());
    }

    // f0 + f1 + f2 - t is a first integral when the parameters sum to 1
    let drift = st.first_integral().deriv();
    println!("first-integral drift: {}", drift.max_norm());

    // same initial data under the ordering-interpolated flow, a = 1/2
    let a = Rat::from_ratio(1, 2);
    let st2 = p4_solve_series(init, alpha, &a, order);
    let worst = st2
        .residuals(&a)
        .iter()
        .map(|r| r.max_norm())
        .fold(0.0, f64::max);
    println!("interpolated flow (a = 1/2) worst residual: {worst}");
}
