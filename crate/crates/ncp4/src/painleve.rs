//! The symmetric noncommutative Painleve IV system and its Backlund
//! transformations.
//!
//! State: three matrix series f0, f1, f2 and three scalar parameters
//! alpha0..2. The flow (indices mod 3, interpolation parameter a):
//!
//!   f_i' = a f_i f_{i+1} + (1-a) f_{i+1} f_i
//!        - a f_{i+2} f_i - (1-a) f_i f_{i+2} + alpha_i
//!
//! At a = 1 this is the product ordering used everywhere else in the
//! crate. When alpha0+alpha1+alpha2 = 1 the combination f0+f1+f2-t is a
//! first integral.

use crate::coeff::Coefficient;
use crate::error::{NcError, Result};
use crate::mat::Mat;
use crate::series::Series;

/// A solution candidate: three series and the parameter triple.
#[derive(Clone)]
pub struct P4State<T: Coefficient> {
    pub f: [Series<T>; 3],
    pub alpha: [T; 3],
}

impl<T: Coefficient> P4State<T> {
    pub fn dim(&self) -> usize {
        self.f[0].dim
    }

    pub fn order(&self) -> usize {
        self.f.iter().map(Series::order).min().unwrap()
    }

    /// alpha0 + alpha1 + alpha2.
    pub fn alpha_sum(&self) -> T {
        self.alpha[0].add(&self.alpha[1]).add(&self.alpha[2])
    }

    /// Right hand sides at interpolation parameter `a`.
    pub fn rhs(&self, a: &T) -> [Series<T>; 3] {
        let one_minus_a = T::one().sub(a);
        std::array::from_fn(|i| {
            let fi = &self.f[i];
            let fj = &self.f[(i + 1) % 3];
            let fk = &self.f[(i + 2) % 3];
            fi.mul(fj)
                .scale(a)
                .add(&fj.mul(fi).scale(&one_minus_a))
                .sub(&fk.mul(fi).scale(a))
                .sub(&fi.mul(fk).scale(&one_minus_a))
                .add(&Series::scalar(self.dim(), self.alpha[i].clone(), self.order()))
        })
    }

    /// f_i' - rhs_i for each i; all three vanish on solutions.
    pub fn residuals(&self, a: &T) -> [Series<T>; 3] {
        let rhs = self.rhs(a);
        std::array::from_fn(|i| self.f[i].deriv().sub(&rhs[i]))
    }

    /// First integral f0 + f1 + f2 - t.
    pub fn first_integral(&self) -> Series<T> {
        let t = Series::var(self.dim(), self.order());
        self.f[0].add(&self.f[1]).add(&self.f[2]).sub(&t)
    }
}

/// Solve the flow as a power series from matrix initial values.
pub fn p4_solve_series<T: Coefficient>(
    init: [Mat<T>; 3],
    alpha: [T; 3],
    a: &T,
    order: usize,
) -> P4State<T> {
    let dim = init[0].dim;
    let mut coeffs: [Vec<Mat<T>>; 3] = init.map(|m| {
        let mut v = Vec::with_capacity(order + 1);
        v.push(m);
        v
    });
    for k in 0..order {
        // state truncated at order k; rhs coefficient k depends only on
        // f-coefficients up to k
        let state = P4State {
            f: std::array::from_fn(|i| Series::from_coeffs(dim, coeffs[i].clone())),
            alpha: alpha.clone(),
        };
        let rhs = state.rhs(a);
        let inv = T::one().div(&T::from_int((k + 1) as i64));
        for i in 0..3 {
            coeffs[i].push(rhs[i].coeff(k).scale(&inv));
        }
    }
    P4State {
        f: coeffs.map(|c| Series::from_coeffs(dim, c)),
        alpha,
    }
}

/// Generators of the extended affine Weyl group action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BTransform {
    S0,
    S1,
    S2,
    Pi,
}

/// Apply one generator. The reflections s_i need f_i invertible unless
/// alpha_i is zero, in which case they act trivially on the f's.
pub fn apply<T: Coefficient>(op: BTransform, st: &P4State<T>) -> Result<P4State<T>> {
    let [a0, a1, a2] = st.alpha.clone();
    let [f0, f1, f2] = st.f.clone();
    match op {
        BTransform::Pi => Ok(P4State {
            f: [f1, f2, f0],
            alpha: [a1, a2, a0],
        }),
        BTransform::S0 => reflect(0, st),
        BTransform::S1 => reflect(1, st),
        BTransform::S2 => reflect(2, st),
    }
}

fn reflect<T: Coefficient>(i: usize, st: &P4State<T>) -> Result<P4State<T>> {
    let ai = st.alpha[i].clone();
    let j = (i + 1) % 3;
    let k = (i + 2) % 3;
    let mut alpha = st.alpha.clone();
    alpha[i] = ai.neg();
    alpha[j] = st.alpha[j].add(&ai);
    alpha[k] = st.alpha[k].add(&ai);
    let mut f = st.f.clone();
    if !ai.is_zero() {
        let shift = st.f[i]
            .inv()
            .map_err(|_| NcError::NonInvertiblePivot(i))?
            .scale(&ai);
        f[j] = st.f[j].add(&shift);
        f[k] = st.f[k].sub(&shift);
    }
    Ok(P4State { f, alpha })
}

/// Apply a word of generators left to right.
pub fn apply_word<T: Coefficient>(word: &[BTransform], st: &P4State<T>) -> Result<P4State<T>> {
    let mut cur = st.clone();
    for &op in word {
        cur = apply(op, &cur)?;
    }
    Ok(cur)
}

/// Translation words: T1 shifts (alpha0, alpha1) by (+1, -1), T2 shifts
/// (alpha1, alpha2) by (+1, -1), T3 shifts (alpha2, alpha0) by (+1, -1);
/// T1 T2 T3 = id.
pub const T1: [BTransform; 3] = [BTransform::Pi, BTransform::S2, BTransform::S1];
pub const T2: [BTransform; 3] = [BTransform::S1, BTransform::Pi, BTransform::S2];
pub const T3: [BTransform; 3] = [BTransform::S2, BTransform::S1, BTransform::Pi];

/// Build a P4 state from the positive half of a Toda chain at lattice
/// index n:
///
///   f2 = theta_{n+1}' theta_{n+1}^{-1} + t,
///   f1 solves f2 f1 + f1 f2 = 2 (theta_{n+1} theta_n^{-1} - (alpha1 - n)),
///   f0 = t - f1 - f2,
///
/// with effective parameters (alpha0 + n, alpha1 - n, alpha2). The state
/// solves the a=1 flow when the chain seeds satisfy the seed equations.
pub fn p4_from_theta<T: Coefficient>(
    chain: &crate::toda::TodaChain<T>,
    alpha: &[T; 3],
    n: i64,
) -> Result<P4State<T>> {
    assert!(n >= 0);
    let dim = chain.kappa1.dim;
    let th_n = chain.theta(n as usize)?;
    let th_n1 = chain.theta(n as usize + 1)?;
    let ord = th_n1.order().saturating_sub(1).min(th_n.order());
    let t = Series::var(dim, ord);
    let f2 = th_n1.deriv().mul(&th_n1.inv()?).truncate(ord).add(&t);
    let shift = alpha[1].sub(&T::from_int(n));
    let f1_sym = th_n1
        .mul(&th_n.inv()?)
        .truncate(ord)
        .sub(&Series::scalar(dim, shift, ord));
    let f1 = crate::sylvester::sylvester_solve(&f2, &f2, &f1_sym.scale(&T::from_int(2)))?;
    let f0 = t.sub(&f1).sub(&f2);
    Ok(P4State {
        f: [f0, f1, f2],
        alpha: [
            alpha[0].add(&T::from_int(n)),
            alpha[1].sub(&T::from_int(n)),
            alpha[2].clone(),
        ],
    })
}

/// Mirror construction from the negative half at index m (m <= 0):
///
///   f2 = -eta_{m-1}^{-1} eta_{m-1}' + t,
///   f0 solves f2 f0 + f0 f2 = 2 (eta_m^{-1} eta_{m-1} + (alpha0 + m - 1)),
///   f1 = t - f0 - f2,
///
/// with effective parameters (alpha0 + m - 1, alpha1 - m + 1, alpha2).
pub fn p4_from_eta<T: Coefficient>(
    chain: &crate::toda::TodaChain<T>,
    alpha: &[T; 3],
    m: i64,
) -> Result<P4State<T>> {
    assert!(m <= 0);
    let dim = chain.kappa1.dim;
    let e_prev = chain.eta(m - 1)?;
    let e_cur = chain.eta(m)?;
    let ord = e_prev.order().saturating_sub(1).min(e_cur.order());
    let t = Series::var(dim, ord);
    let f2 = e_prev.inv()?.mul(&e_prev.deriv()).truncate(ord).neg().add(&t);
    let shift = alpha[0].add(&T::from_int(m - 1));
    let f0_sym = e_cur
        .inv()?
        .mul(&e_prev)
        .truncate(ord)
        .add(&Series::scalar(dim, shift, ord));
    let f0 = crate::sylvester::sylvester_solve(&f2, &f2, &f0_sym.scale(&T::from_int(2)))?;
    let f1 = t.sub(&f0).sub(&f2);
    Ok(P4State {
        f: [f0, f1, f2],
        alpha: [
            alpha[0].add(&T::from_int(m - 1)),
            alpha[1].sub(&T::from_int(m - 1)),
            alpha[2].clone(),
        ],
    })
}

/// Hypothesis residual for [`p4_from_theta`]: the second-order condition
/// theta_{n+1}'' + t theta_{n+1}' + 2 theta_{n+1} theta_n^{-1} theta_{n+1}
/// + (alpha0 - alpha1 + 2n) theta_{n+1}.
pub fn theta_condition_residual<T: Coefficient>(
    chain: &crate::toda::TodaChain<T>,
    alpha: &[T; 3],
    n: i64,
) -> Result<Series<T>> {
    assert!(n >= 0);
    let th_n = chain.theta(n as usize)?;
    let th = chain.theta(n as usize + 1)?;
    let ord = th.order().saturating_sub(2).min(th_n.order());
    let t = Series::var(th.dim, ord);
    let c = alpha[0].sub(&alpha[1]).add(&T::from_int(2 * n));
    Ok(th
        .deriv()
        .deriv()
        .truncate(ord)
        .add(&t.mul(&th.deriv()))
        .add(&th.mul(&th_n.inv()?).mul(&th).scale(&T::from_int(2)).truncate(ord))
        .add(&th.scale(&c).truncate(ord)))
}

/// Hypothesis residual for [`p4_from_eta`]:
/// eta_{m-1}'' - eta_{m-1}' t + 2 eta_{m-1} eta_m^{-1} eta_{m-1}
/// + (alpha0 - alpha1 + 2(m-1)) eta_{m-1}.
pub fn eta_condition_residual<T: Coefficient>(
    chain: &crate::toda::TodaChain<T>,
    alpha: &[T; 3],
    m: i64,
) -> Result<Series<T>> {
    assert!(m <= 0);
    let e_cur = chain.eta(m)?;
    let e = chain.eta(m - 1)?;
    let ord = e.order().saturating_sub(2).min(e_cur.order());
    let t = Series::var(e.dim, ord);
    let c = alpha[0].sub(&alpha[1]).add(&T::from_int(2 * (m - 1)));
    Ok(e
        .deriv()
        .deriv()
        .truncate(ord)
        .sub(&e.deriv().mul(&t))
        .add(&e.mul(&e_cur.inv()?).mul(&e).scale(&T::from_int(2)).truncate(ord))
        .add(&e.scale(&c).truncate(ord)))
}

/// Quadratic constraint satisfied by the positive construction:
/// f1' - (f1^2 + f1 f2 + f2 f1 - t f1 + (alpha1 - n)). Here `alpha1`
/// is the *effective* second parameter of the state, so the constant is
/// read off the state itself.
pub fn theta_constraint_residual<T: Coefficient>(st: &P4State<T>) -> Series<T> {
    let [_, f1, f2] = &st.f;
    let dim = st.dim();
    let ord = st.order();
    let t = Series::var(dim, ord);
    f1.deriv().sub(
        &f1.mul(f1)
            .add(&f1.mul(f2))
            .add(&f2.mul(f1))
            .sub(&t.mul(f1))
            .add(&Series::scalar(dim, st.alpha[1].clone(), ord)),
    )
}

/// Quadratic constraint satisfied by the negative construction:
/// f0' + f0^2 + f0 f2 + f2 f0 - f0 t - alpha0 (effective).
pub fn eta_constraint_residual<T: Coefficient>(st: &P4State<T>) -> Series<T> {
    let [f0, _, f2] = &st.f;
    let dim = st.dim();
    let ord = st.order();
    let t = Series::var(dim, ord);
    f0.deriv()
        .add(&f0.mul(f0))
        .add(&f0.mul(f2))
        .add(&f2.mul(f0))
        .sub(&f0.mul(&t))
        .sub(&Series::scalar(dim, st.alpha[0].clone(), ord))
}

/// Dim-1 fourth Painleve residual in the single-function form
///
///   y'' - y^{-1}(y')^2 / 2 - 3 y^3 / 2 + 2 t y^2
///      - (t^2/2 + a0 - a1 + 2n) y + a2^2 y^{-1} / 2
pub fn scalar_p4_residual<T: Coefficient>(
    y: &Series<T>,
    alpha: &[T; 3],
    n: i64,
) -> Result<Series<T>> {
    assert_eq!(y.dim, 1);
    let ord = y.order();
    let t = Series::var(1, ord);
    let y_inv = y.inv()?;
    let yp = y.deriv();
    let half = T::from_ratio(1, 2);
    let lin = alpha[0]
        .sub(&alpha[1])
        .add(&T::from_int(2 * n));
    let lin_term = t
        .mul(&t)
        .scale(&half)
        .add(&Series::scalar(1, lin, ord))
        .mul(y);
    let r = y
        .deriv()
        .deriv()
        .sub(&y_inv.mul(&yp).mul(&yp).scale(&half))
        .sub(&y.mul(y).mul(y).scale(&T::from_ratio(3, 2)))
        .add(&t.mul(y).mul(y).scale(&T::from_int(2)))
        .sub(&lin_term)
        .add(&y_inv.scale(&alpha[2].mul(&alpha[2]).mul(&half)));
    Ok(r)
}

/// Dim-1 auxiliary pair: z' + y^{-1} z^2 + (a2 - y^2) y^{-1} z
/// - (a1 + a2 - n) y.
pub fn scalar_z_residual<T: Coefficient>(
    y: &Series<T>,
    z: &Series<T>,
    alpha: &[T; 3],
    n: i64,
) -> Result<Series<T>> {
    assert_eq!(y.dim, 1);
    let ord = y.order().min(z.order());
    let y_inv = y.inv()?;
    let c = alpha[1].add(&alpha[2]).sub(&T::from_int(n));
    let mid = Series::scalar(1, alpha[2].clone(), ord).sub(&y.mul(y));
    Ok(z
        .deriv()
        .add(&y_inv.mul(z).mul(z))
        .add(&mid.mul(&y_inv).mul(z))
        .sub(&y.scale(&c)))
}

/// Dim-1 Riccati link: y' + y^2 + 2z - t y + a2.
pub fn scalar_riccati_residual<T: Coefficient>(
    y: &Series<T>,
    z: &Series<T>,
    alpha: &[T; 3],
) -> Series<T> {
    assert_eq!(y.dim, 1);
    let ord = y.order().min(z.order());
    let t = Series::var(1, ord);
    y.deriv()
        .add(&y.mul(y))
        .add(&z.scale(&T::from_int(2)))
        .sub(&t.mul(y))
        .add(&Series::scalar(1, alpha[2].clone(), ord))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rat;

    fn alphas(a: i64, b: i64) -> [Rat; 3] {
        // normalized so the sum is one
        [
            Rat::from_ratio(a, 6),
            Rat::from_ratio(b, 6),
            Rat::from_ratio(6 - a - b, 6),
        ]
    }

    fn solve_sample(dim: usize, order: usize) -> P4State<Rat> {
        let init = [
            Mat::from_rows(
                (0..dim)
                    .map(|i| (0..dim).map(|j| Rat::from_int(((i + 2 * j) % 3) as i64 + 1)).collect())
                    .collect(),
            ),
            Mat::scalar(dim, Rat::from_int(-1)),
            Mat::identity(dim),
        ];
        p4_solve_series(init, alphas(2, 3), &Rat::from_int(1), order)
    }

    #[test]
    fn solver_satisfies_flow() {
        for dim in [1, 2] {
            let st = solve_sample(dim, 10);
            for r in st.residuals(&Rat::from_int(1)) {
                // residual order is one less than the state order
                assert!(r.is_zero(), "dim={dim}");
            }
        }
    }

    #[test]
    fn first_integral_constant() {
        let st = solve_sample(2, 10);
        assert!(st.first_integral().deriv().is_zero());
    }

    #[test]
    fn general_a_flow() {
        let a = Rat::from_ratio(1, 3);
        let init = [
            Mat::scalar(2, Rat::from_int(1)),
            Mat::from_rows(vec![
                vec![Rat::from_int(0), Rat::from_int(1)],
                vec![Rat::from_int(-1), Rat::from_int(2)],
            ]),
            Mat::scalar(2, Rat::from_int(-2)),
        ];
        let st = p4_solve_series(init, alphas(1, 1), &a, 8);
        for r in st.residuals(&a) {
            assert!(r.is_zero());
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let st = solve_sample(2, 10);
        for op in [BTransform::S0, BTransform::S1, BTransform::S2] {
            let twice = apply(op, &apply(op, &st).unwrap()).unwrap();
            for i in 0..3 {
                assert!(twice.f[i].sub(&st.f[i]).is_zero());
                assert_eq!(twice.alpha[i], st.alpha[i]);
            }
        }
    }

    #[test]
    fn pi_cubed_is_identity() {
        let st = solve_sample(1, 6);
        let thrice = apply_word(&[BTransform::Pi; 3], &st).unwrap();
        for i in 0..3 {
            assert!(thrice.f[i].sub(&st.f[i]).is_zero());
        }
    }

    #[test]
    fn backlund_preserves_solutions() {
        // covariance: transformed state solves the flow with its new alphas
        let st = solve_sample(2, 12);
        for op in [BTransform::S0, BTransform::S1, BTransform::S2, BTransform::Pi] {
            let tr = apply(op, &st).unwrap();
            for r in tr.residuals(&Rat::from_int(1)) {
                assert!(r.is_zero(), "op {op:?}");
            }
        }
    }

    #[test]
    fn translation_alpha_actions() {
        let st = solve_sample(1, 6);
        let t1 = apply_word(&T1, &st).unwrap();
        assert_eq!(t1.alpha[0], st.alpha[0].add(&Rat::from_int(1)));
        assert_eq!(t1.alpha[1], st.alpha[1].sub(&Rat::from_int(1)));
        assert_eq!(t1.alpha[2], st.alpha[2]);
        let t2 = apply_word(&T2, &st).unwrap();
        assert_eq!(t2.alpha[1], st.alpha[1].add(&Rat::from_int(1)));
        assert_eq!(t2.alpha[2], st.alpha[2].sub(&Rat::from_int(1)));
        let t3 = apply_word(&T3, &st).unwrap();
        assert_eq!(t3.alpha[2], st.alpha[2].add(&Rat::from_int(1)));
        assert_eq!(t3.alpha[0], st.alpha[0].sub(&Rat::from_int(1)));
        // product of the three translations fixes alpha
        let all = apply_word(&T3, &apply_word(&T2, &t1).unwrap()).unwrap();
        for i in 0..3 {
            assert_eq!(all.alpha[i], st.alpha[i]);
        }
    }

    #[test]
    fn toda_bridge_matrix() {
        use crate::toda::{solve_kappa_conditions, TodaChain};
        let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];
        let order = 12;
        let (k1, km1) = solve_kappa_conditions(
            Mat::from_rows(vec![
                vec![Rat::from_int(1), Rat::from_int(1)],
                vec![Rat::from_int(0), Rat::from_int(1)],
            ]),
            Mat::scalar(2, Rat::from_int(1)),
            Mat::from_rows(vec![
                vec![Rat::from_int(2), Rat::from_int(0)],
                vec![Rat::from_int(1), Rat::from_int(1)],
            ]),
            // derivative chosen so -km1(0)^{-1} km1'(0) = diag(1,2):
            // keeps the eta-side Sylvester operator nonsingular
            Mat::from_rows(vec![
                vec![Rat::from_int(-2), Rat::from_int(0)],
                vec![Rat::from_int(-1), Rat::from_int(-2)],
            ]),
            alpha[0].clone(),
            alpha[1].clone(),
            order,
        );
        let chain = TodaChain::new(k1, km1);
        // conditional structure: the f2 equation is automatic once the
        // seed conditions hold; the remaining residuals reduce to the
        // quadratic constraint (zero only under extra conditions).
        for n in [0i64, 1] {
            let hyp = theta_condition_residual(&chain, &alpha, n).unwrap();
            assert!(hyp.is_zero(), "theta condition n={n}");
            let st = p4_from_theta(&chain, &alpha, n).unwrap();
            let r = st.residuals(&Rat::from_int(1));
            let keep = st.order().saturating_sub(2);
            assert!(r[2].truncate(keep).is_zero(), "automatic f2 eq, n={n}");
            let c = theta_constraint_residual(&st);
            assert!(r[1].truncate(keep).sub(&c.truncate(keep)).is_zero());
            assert!(r[0].truncate(keep).add(&r[1].truncate(keep)).add(&r[2].truncate(keep)).is_zero());
        }
        for m in [0i64, -1] {
            let hyp = eta_condition_residual(&chain, &alpha, m).unwrap();
            assert!(hyp.is_zero(), "eta condition m={m}");
            let st = p4_from_eta(&chain, &alpha, m).unwrap();
            let r = st.residuals(&Rat::from_int(1));
            let keep = st.order().saturating_sub(2);
            assert!(r[2].truncate(keep).is_zero(), "automatic f2 eq, m={m}");
            let c = eta_constraint_residual(&st);
            assert!(r[0].truncate(keep).sub(&c.truncate(keep)).is_zero());
            assert!(r[0].truncate(keep).add(&r[1].truncate(keep)).add(&r[2].truncate(keep)).is_zero());
        }
    }

    #[test]
    fn scalar_single_function_form() {
        use crate::toda::{solve_kappa_conditions, solve_scalar_km1_prime, TodaChain};
        let alpha = [Rat::from_ratio(1, 2), Rat::from_ratio(1, 3), Rat::from_ratio(1, 6)];
        let order = 12;
        let k1_0 = Rat::from_int(1);
        let k1_1 = Rat::from_int(2);
        let km1_0 = Rat::from_int(1);
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
        for n in [0i64, 1] {
            let st = p4_from_theta(&chain, &alpha, n).unwrap();
            let keep = st.order().saturating_sub(2);
            // with all three dim-1 seed conditions the constraint holds,
            // so the full flow is satisfied
            assert!(theta_constraint_residual(&st).truncate(keep).is_zero());
            for r in st.residuals(&Rat::from_int(1)) {
                assert!(r.truncate(keep).is_zero(), "full flow n={n}");
            }
            let y = &st.f[2];
            let r = scalar_p4_residual(y, &alpha, n).unwrap();
            assert!(r.truncate(keep).is_zero(), "single-function form n={n}");
        }
    }

    #[test]
    fn braid_relation_s0_s1() {
        // (s0 s1)^3 = id on parameters (affine A2 Weyl relation)
        let st = solve_sample(1, 8);
        let word = [BTransform::S0, BTransform::S1];
        let mut cur = st.clone();
        for _ in 0..3 {
            cur = apply_word(&word, &cur).unwrap();
        }
        for i in 0..3 {
            assert_eq!(cur.alpha[i], st.alpha[i]);
        }
    }
}
