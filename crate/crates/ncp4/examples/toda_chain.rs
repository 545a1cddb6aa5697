//! Noncommutative Toda chain built from two seed series: the theta and
//! eta lattices of Hankel quasideterminants satisfy the chain equations
//! on both sides, and the two half-lattices agree where they cross.

use ncp4::toda::TodaChain;
use ncp4::{Mat, Rat, Series};
use ncp4::coeff::Coefficient;

fn main() {
    let dim = 2;
    let order = 12;

    let k1 = Series::from_coeffs(
        dim,
        (0..=order)
            .map(|k| {
                Mat::from_rows(vec![
                    vec![Rat::from_int(1 + k as i64 % 3), Rat::from_int(1)],
                    vec![Rat::from_int(k as i64 % 2), Rat::from_int(1)],
                ])
            })
            .collect(),
    );
    let km1 = Series::from_coeffs(
        dim,
        (0..=order)
            .map(|k| {
                Mat::from_rows(vec![
                    vec![Rat::from_int(2), Rat::from_int(-(k as i64 % 2))],
                    vec![Rat::from_int(1), Rat::from_int(1 + k as i64 % 2)],
                ])
            })
            .collect(),
    );
    let chain = TodaChain::new(k1, km1);

    for n in 1..=2 {
        let r = chain.residual_theta(n).unwrap();
        println!(
            "theta chain equation at level {n}: residual {} through order {}",
            r.max_norm(),
            r.order()
        );
    }
    for m in [0i64, -1] {
        let r = chain.residual_eta(m).unwrap();
        println!(
            "eta chain equation at level {m}: residual {} through order {}",
            r.max_norm(),
            r.order()
        );
    }

    // The eta equation at level 0 is the negative of the theta equation
    // at level 1, so the two lattices are consistent at the crossover.
    let re = chain.residual_eta(0).unwrap();
    let rt = chain.residual_theta(1).unwrap();
    let ord = re.order().min(rt.order());
    let cross = re.truncate(ord).add(&rt.truncate(ord));
    println!("crossover consistency residual: {}", cross.max_norm());
}
