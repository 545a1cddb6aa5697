//! Backlund transformations: three reflections and a cyclic shift
//! generate an affine Weyl symmetry of the symmetric Painleve IV
//! system. Reflections are involutions, transformed solutions still
//! solve the system, and composed translations shift the parameters
//! by integers.

use ncp4::painleve::{apply, apply_word, p4_solve_series, BTransform, T1, T2, T3};
use ncp4::{Mat, Rat};
use ncp4::coeff::Coefficient;

fn main() {

    let order = 10;
    let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];
    // invertible initial matrices so that f_i^{-1} exists
    let init = [
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(1)],
            vec![Rat::from_int(0), Rat::from_int(1)],
        ]),
        Mat::from_rows(vec![
            vec![Rat::from_int(2), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(1)],
        ]),
        Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(0)],
            vec![Rat::from_int(1), Rat::from_int(-1)],
        ]),
    ];
    let st = p4_solve_series(init, alpha, &Rat::from_int(1), order);

    for op in [BTransform::S0, BTransform::S1, BTransform::S2, BTransform::Pi] {
        let tr = apply(op, &st).unwrap();
        let worst = tr
            .residuals(&Rat::from_int(1))
            .iter()
            .map(|r| r.max_norm())
            .fold(0.0, f64::max);
        println!(
            "{op:?}: transformed parameters ({}, {}, {}), worst flow residual {worst}",
            tr.alpha[0], tr.alpha[1], tr.alpha[2]
        );
    }

    let s1 = apply(BTransform::S1, &st).unwrap();
    let back = apply(BTransform::S1, &s1).unwrap();
    let inv = (0..3)
        .map(|i| back.f[i].sub(&st.f[i]).max_norm())
        .fold(0.0, f64::max);
    println!("s1 applied twice returns the solution: residual {inv}");

    let t1 = apply_word(&T1, &st).unwrap();
    println!(
        "translation T1 parameter action: ({}, {}, {}) -> ({}, {}, {})",
        st.alpha[0], st.alpha[1], st.alpha[2], t1.alpha[0], t1.alpha[1], t1.alpha[2]
    );
    let round = apply_word(&T3, &apply_word(&T2, &t1).unwrap()).unwrap();
    let drift = (0..3)
        .map(|i| round.f[i].sub(&st.f[i]).max_norm())
        .fold(0.0, f64::max);
    println!("T3 T2 T1 is the identity: residual {drift}");
}
