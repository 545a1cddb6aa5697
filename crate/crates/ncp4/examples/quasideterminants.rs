//! Quasideterminants over the series ring, checked against the
//! classical determinant ratio in the commutative (dim-1) case, and
//! the vanishing law for almost-Hankel corner quasideterminants.

use ncp4::qdet::{almost_hankel_qdet, det_scalar, quasidet, RingMatrix};
use ncp4::{Rat, Series};
use ncp4::coeff::Coefficient;

fn geometric(order: usize, s: i64, c: i64) -> Series<Rat> {
    // s / (1 - c t)
    let one = Series::one(1, order);
    let lin = one.sub(&Series::var(1, order).scale(&Rat::from_int(c)));
    lin.inv().unwrap().scale(&Rat::from_int(s))
}

fn main() {
    let order = 8;
    let x = RingMatrix::from_rows(vec![
        vec![geometric(order, 1, 1), geometric(order, 2, 2), geometric(order, 3, 3)],
        vec![geometric(order, -1, -1), geometric(order, 1, 1), geometric(order, 2, 2)],
        vec![geometric(order, 2, 2), geometric(order, -2, -2), geometric(order, 1, 1)],
    ]);

    // In the commutative case |X|_{ij} * det(minor) = (-1)^{i+j} det(X).
    let full = det_scalar(&x);
    for (i, j) in [(0, 0), (1, 2), (2, 1)] {
        let q = quasidet(&x, i, j).unwrap();
        let minor = det_scalar(&x.minor(i, j));
        let mut expect = full.clone();
        if (i + j) % 2 == 1 {
            expect = expect.neg();
        }
        let r = q.mul(&minor).sub(&expect);
        println!("ratio identity at ({i},{j}): residual {}", r.max_norm());
    }

    // Almost-Hankel matrix with a repeated row: the corner
    // quasideterminant vanishes identically.
    let seq: Vec<Series<Rat>> = (0..6).map(|k| geometric(order, k + 1, k - 2)).collect();
    let q = almost_hankel_qdet(&seq, 2, 1, 3).unwrap();
    println!("repeated-row corner quasideterminant norm: {}", q.max_norm());
}
