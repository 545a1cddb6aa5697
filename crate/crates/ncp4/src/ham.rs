//! Word-polynomial Hamiltonian layer.
//!
//! Polynomials in noncommuting symbols (f0, f1, f2 or canonical q, p, t)
//! with scalar coefficients. For a word w = u x v the cyclic gradient
//! with respect to x collects v u; canonical equations use q' = -grad_p H,
//! p' = grad_q H. The symbol t is bound to f0 + f1 + f2 on evaluation, so
//! the canonical equations hold on flow solutions whose first integral is
//! a scalar multiple of the identity.

use crate::coeff::Coefficient;
use crate::painleve::P4State;
use crate::series::Series;
use std::collections::BTreeMap;

/// Noncommuting generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sym {
    F0,
    F1,
    F2,
    Q,
    P,
    T,
}

/// Linear combination of words in the generators.
#[derive(Clone, Debug)]
pub struct WordPoly<T: Coefficient> {
    pub terms: BTreeMap<Vec<Sym>, T>,
}

impl<T: Coefficient> WordPoly<T> {
    pub fn zero() -> Self {
        WordPoly { terms: BTreeMap::new() }
    }

    pub fn word(w: &[Sym], c: T) -> Self {
        let mut p = Self::zero();
        p.push(w.to_vec(), c);
        p
    }

    fn push(&mut self, w: Vec<Sym>, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(T::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            // re-borrow to remove; key reconstruction is cheap here
            let key: Vec<Vec<Sym>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&T::from_int(-1)))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.push(w.clone(), v.mul(c));
        }
        out
    }

    /// Cyclic gradient with respect to `x`: each occurrence w = u x v
    /// contributes the word v u.
    pub fn cyclic_grad(&self, x: Sym) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            for k in 0..w.len() {
                if w[k] != x {
                    continue;
                }
                let mut vu: Vec<Sym> = w[k + 1..].to_vec();
                vu.extend_from_slice(&w[..k]);
                out.push(vu, c.clone());
            }
        }
        out
    }

    /// Evaluate with the given symbol assignment.
    pub fn eval(&self, assign: &BTreeMap<Sym, Series<T>>, dim: usize, order: usize) -> Series<T> {
        let mut acc = Series::zero(dim, order);
        for (w, c) in &self.terms {
            let mut term = Series::one(dim, order);
            for s in w {
                term = term.mul(&assign[s]);
            }
            acc = acc.truncate(term.order()).add(&term.scale(c));
        }
        acc
    }

    /// Directional derivative with respect to `x` in direction `e`:
    /// sum over occurrences of the word with that occurrence replaced.
    pub fn eval_directional(
        &self,
        x: Sym,
        e: &Series<T>,
        assign: &BTreeMap<Sym, Series<T>>,
        dim: usize,
        order: usize,
    ) -> Series<T> {
        let mut acc = Series::zero(dim, order);
        for (w, c) in &self.terms {
            for k in 0..w.len() {
                if w[k] != x {
                    continue;
                }
                let mut term = Series::one(dim, order);
                for (pos, s) in w.iter().enumerate() {
                    term = term.mul(if pos == k { e } else { &assign[s] });
                }
                acc = acc.truncate(term.order()).add(&term.scale(c));
            }
        }
        acc
    }
}

fn third<T: Coefficient>(n: i64) -> T {
    T::from_ratio(n, 3)
}

/// Hamiltonian in the symmetric variables for interpolation parameters
/// (a0, a1):
///
///   a0 f0f1f2 + (2-a0-a1) f1f2f0 + a1 f2f0f1 - (1-a1) f1f0f2
///   + (1-a0-a1) f0f2f1 - (1-a0) f2f1f0
///   + (alpha1-alpha2)/3 f0 + (alpha1+2alpha2)/3 f1 - (2alpha1+alpha2)/3 f2
pub fn hamiltonian_f<T: Coefficient>(a0: &T, a1: &T, alpha: &[T; 3]) -> WordPoly<T> {
    use Sym::{F0, F1, F2};
    let one = T::one();
    let mut h = WordPoly::word(&[F0, F1, F2], a0.clone());
    h = h.add(&WordPoly::word(
        &[F1, F2, F0],
        T::from_int(2).sub(a0).sub(a1),
    ));
    h = h.add(&WordPoly::word(&[F2, F0, F1], a1.clone()));
    h = h.add(&WordPoly::word(&[F1, F0, F2], one.sub(a1).neg()));
    h = h.add(&WordPoly::word(&[F0, F2, F1], one.sub(a0).sub(a1)));
    h = h.add(&WordPoly::word(&[F2, F1, F0], one.sub(a0).neg()));
    h = h.add(&WordPoly::word(&[F0], third::<T>(1).mul(&alpha[1].sub(&alpha[2]))));
    h = h.add(&WordPoly::word(
        &[F1],
        third::<T>(1).mul(&alpha[1].add(&alpha[2].mul(&T::from_int(2)))),
    ));
    h = h.add(&WordPoly::word(
        &[F2],
        third::<T>(1)
            .mul(&alpha[1].mul(&T::from_int(2)).add(&alpha[2]))
            .neg(),
    ));
    h
}

/// The same Hamiltonian rewritten in canonical words q = f1, p = f2,
/// t = f0 + f1 + f2.
pub fn hamiltonian_qpt<T: Coefficient>(a0: &T, a1: &T, alpha: &[T; 3]) -> WordPoly<T> {
    use Sym::{P, Q, T as Tt};
    let one = T::one();
    let m = |w: &[Sym], c: T| WordPoly::word(w, c);
    let oma0 = one.sub(a0); // 1 - a0
    let oma1 = one.sub(a1);
    let oma01 = one.sub(a0).sub(a1);
    m(&[P, P, Q], oma0.neg())
        .add(&m(&[P, Q, P], one.sub(&a0.mul(&T::from_int(2)))))
        .add(&m(&[Q, P, P], oma0.neg()))
        .add(&m(&[Q, Q, P], oma01.clone()))
        .add(&m(
            &[Q, P, Q],
            T::from_int(3)
                .sub(&a0.mul(&T::from_int(2)))
                .sub(&a1.mul(&T::from_int(2)))
                .neg(),
        ))
        .add(&m(&[P, Q, Q], oma01.clone()))
        .add(&m(&[Tt, P, Q], oma01))
        .add(&m(&[P, Tt, Q], a1.clone()))
        .add(&m(&[P, Q, Tt], oma0.neg()))
        .add(&m(&[Q, P, Tt], T::from_int(2).sub(a0).sub(a1)))
        .add(&m(&[Q, Tt, P], oma1.neg()))
        .add(&m(&[Tt, Q, P], a0.clone()))
        .add(&m(&[P], alpha[1].neg()))
        .add(&m(&[Q], alpha[2].clone()))
        .add(&m(&[Tt], third::<T>(1).mul(&alpha[1].sub(&alpha[2]))))
}

/// Symbol bindings for a state: f's as given, q = f1, p = f2,
/// t = f0 + f1 + f2.
pub fn state_bindings<T: Coefficient>(st: &P4State<T>) -> BTreeMap<Sym, Series<T>> {
    let mut m = BTreeMap::new();
    m.insert(Sym::F0, st.f[0].clone());
    m.insert(Sym::F1, st.f[1].clone());
    m.insert(Sym::F2, st.f[2].clone());
    m.insert(Sym::Q, st.f[1].clone());
    m.insert(Sym::P, st.f[2].clone());
    m.insert(Sym::T, st.f[0].add(&st.f[1]).add(&st.f[2]));
    m
}

/// Residuals of the canonical system q' = -grad_p H, p' = grad_q H for a
/// flow solution. Exact zeros require the state's first integral to be a
/// scalar multiple of the identity.
pub fn canonical_residuals<T: Coefficient>(
    st: &P4State<T>,
    a0: &T,
    a1: &T,
) -> (Series<T>, Series<T>) {
    let h = hamiltonian_qpt(a0, a1, &st.alpha);
    let assign = state_bindings(st);
    let dim = st.dim();
    let ord = st.order();
    let dq = h.cyclic_grad(Sym::Q).eval(&assign, dim, ord);
    let dp = h.cyclic_grad(Sym::P).eval(&assign, dim, ord);
    let rq = st.f[1].deriv().add(&dp.truncate(ord.saturating_sub(1)));
    let rp = st.f[2].deriv().sub(&dq.truncate(ord.saturating_sub(1)));
    (rq, rp)
}

/// Dim-1 Poisson form with bracket {f_i, f_j} = u_{ij},
/// U = [[0,1,-1],[-1,0,1],[1,-1,0]]: residuals of
/// f0' = {H, f0} + 1, f1' = {H, f1}, f2' = {H, f2}.
pub fn scalar_poisson_residuals<T: Coefficient>(st: &P4State<T>) -> [Series<T>; 3] {
    assert_eq!(st.dim(), 1, "Poisson layer is dim-1 only");
    let one = T::one();
    let h = hamiltonian_f(&one, &one, &st.alpha);
    let assign = state_bindings(st);
    let ord = st.order();
    let u: [[i64; 3]; 3] = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]];
    let grads = [
        h.cyclic_grad(Sym::F0).eval(&assign, 1, ord),
        h.cyclic_grad(Sym::F1).eval(&assign, 1, ord),
        h.cyclic_grad(Sym::F2).eval(&assign, 1, ord),
    ];
    std::array::from_fn(|i| {
        // {H, f_i} = sum_j grad_j H * u_{j i}
        let mut br = Series::zero(1, ord);
        for j in 0..3 {
            if u[j][i] != 0 {
                br = br.add(&grads[j].scale(&T::from_int(u[j][i])));
            }
        }
        if i == 0 {
            br = br.add(&Series::one(1, ord));
        }
        st.f[i].deriv().sub(&br.truncate(ord.saturating_sub(1)))
    })
}
