//! Free, Boolean, monotone and two-state free convolutions and their powers.
//!
//! Powers accept any coefficient, so `t` may be a rational or the formal
//! parameter of `ℚ[t]`.

use crate::functional::MomentFunctional;
use crate::series::{Coeff, InfLaurent};
use crate::transforms::{
    eta_from_f, eta_from_moments, f_at_infinity, moments_from_eta, moments_from_r, r_from_moments,
    tilde_from_two_state_r, two_state_r, TwoStatePair,
};

/// `μ ⊞ ν`: free cumulants add.
pub fn free_convolve<R: Coeff>(a: &MomentFunctional<R>, b: &MomentFunctional<R>) -> MomentFunctional<R> {
    let r = r_from_moments(a).add(&r_from_moments(b));
    moments_from_r(&r, r.order())
}

/// `μ^{⊞t}`: free cumulants scale by `t`.
pub fn free_power<R: Coeff>(a: &MomentFunctional<R>, t: &R) -> MomentFunctional<R> {
    moments_from_r(&r_from_moments(a).scale(t), a.order())
}

/// `μ ⊎ ν`: Boolean cumulants add.
pub fn boolean_convolve<R: Coeff>(a: &MomentFunctional<R>, b: &MomentFunctional<R>) -> MomentFunctional<R> {
    let eta = eta_from_moments(a).add(&eta_from_moments(b));
    moments_from_eta(&eta, eta.order())
}

/// `μ^{⊎t}`: Boolean cumulants scale by `t`.
pub fn boolean_power<R: Coeff>(a: &MomentFunctional<R>, t: &R) -> MomentFunctional<R> {
    moments_from_eta(&eta_from_moments(a).scale(t), a.order())
}

/// `F_μ ∘ F_ν` as `F_ν + (F_μ - z) ∘ F_ν`.
pub fn compose_f<R: Coeff>(f_outer: &InfLaurent<R>, f_inner: &InfLaurent<R>) -> InfLaurent<R> {
    let d = f_outer.sub(&InfLaurent::identity(f_outer.order()));
    let shifted = d.compose(f_inner).expect("F-expansions are monic");
    f_inner.add(&shifted)
}

/// `μ ▷ ν` with `F_{μ▷ν} = F_μ ∘ F_ν`.
pub fn monotone_convolve<R: Coeff>(a: &MomentFunctional<R>, b: &MomentFunctional<R>) -> MomentFunctional<R> {
    let f = compose_f(&f_at_infinity(a), &f_at_infinity(b));
    let eta = eta_from_f(&f).expect("F-expansions are monic");
    moments_from_eta(&eta, eta.order())
}

/// `(μ̃, μ) ⊞_c (ν̃, ν)`: two-state transforms add, bases convolve freely.
pub fn two_state_convolve<R: Coeff>(p: &TwoStatePair<R>, q: &TwoStatePair<R>) -> TwoStatePair<R> {
    let base = free_convolve(&p.base, &q.base);
    let rt = two_state_r(p).add(&two_state_r(q));
    let tilde = tilde_from_two_state_r(&rt, &base);
    TwoStatePair { base: base.truncate(tilde.order()), tilde }
}

/// `(μ̃, μ)^{⊞_c t}`: both transforms scale by `t`.
pub fn two_state_power<R: Coeff>(p: &TwoStatePair<R>, t: &R) -> TwoStatePair<R> {
    let base = free_power(&p.base, t);
    let tilde = tilde_from_two_state_r(&two_state_r(p).scale(t), &base);
    TwoStatePair { tilde, base }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::{bernoulli_sym, family, free_meixner, semicircular};
    use crate::oracle;
    use crate::series::{int, rat, Poly, Rational};

    type Q = Rational;
    type P = Poly<Q>;

    fn delta(b: Q, n: usize) -> MomentFunctional<Q> {
        MomentFunctional::point_mass(&b, n)
    }

    fn arcsine(n: usize) -> MomentFunctional<Q> {
        family("arcsine", &[int(1)], n).unwrap()
    }

    fn sample(n: usize) -> MomentFunctional<Q> {
        let xs = [rat(1, 2), int(2), rat(-1, 3), int(5), int(0), rat(7, 4), int(-2), int(1), rat(3, 5), int(4)];
        MomentFunctional::new(xs[..n].to_vec())
    }

    #[test]
    fn free_examples() {
        assert_eq!(free_convolve(&delta(int(2), 6), &delta(rat(1, 3), 6)), delta(rat(7, 3), 6));
        let s = free_convolve(&semicircular(&int(1), &int(2), 8), &semicircular(&rat(-1, 2), &int(3), 8));
        assert_eq!(s, semicircular(&rat(1, 2), &int(5), 8));
        let (b, c) = (int(1), rat(-1, 2));
        let m = free_convolve(&free_meixner(&b, &c, &int(1), &int(2), 10), &free_meixner(&b, &c, &int(3), &rat(1, 3), 10));
        assert_eq!(m, free_meixner(&b, &c, &int(4), &rat(7, 3), 10));
    }

    #[test]
    fn free_power_examples() {
        assert_eq!(free_power(&bernoulli_sym::<Q>(10), &int(2)), arcsine(10));
        let sc: MomentFunctional<P> = semicircular(&P::zero(), &P::one(), 6);
        let t = P::var();
        let st = free_power(&sc, &t);
        assert_eq!(st.moment(4), t.pow(2).scale(&int(2)));
        let kappa: Vec<P> = (1..=6).map(|n| P::from_int(i64::from(n == 2))).collect();
        assert_eq!(st, oracle::moments_from_free_cumulants(&kappa, &t, 6).unwrap());
        assert_eq!(free_power(&sample(8), &int(1)), sample(8));
    }

    #[test]
    fn boolean_examples() {
        let b2 = boolean_power(&bernoulli_sym::<Q>(4), &int(2));
        assert_eq!(b2.moment(2), int(2));
        assert_eq!(b2.moment(4), int(4));
        assert_eq!(boolean_convolve(&delta(int(2), 5), &delta(int(-5), 5)), delta(int(-3), 5));
        assert_eq!(boolean_power(&sample(8), &int(1)), sample(8));
    }

    #[test]
    fn monotone_examples() {
        let sc = semicircular(&int(0), &int(1), 12);
        assert_eq!(monotone_convolve(&bernoulli_sym(12), &sc), arcsine(12));
        assert_eq!(monotone_convolve(&sample(8), &MomentFunctional::delta0(8)), sample(8));
        assert_eq!(monotone_convolve(&delta(int(2), 6), &delta(rat(1, 2), 6)), delta(rat(5, 2), 6));
        let (b, c, beta, gamma, beta2, gamma2) = (rat(1, 2), int(-1), int(2), int(3), rat(-1, 3), int(1));
        let lhs = monotone_convolve(
            &free_meixner(&b, &c, &beta, &gamma, 10),
            &free_meixner(&(&b + &beta), &(&c + &gamma), &beta2, &gamma2, 10),
        );
        assert_eq!(lhs, free_meixner(&b, &c, &(&beta + &beta2), &(&gamma + &gamma2), 10));
    }

    #[test]
    fn monotone_is_associative_not_commutative() {
        let a = bernoulli_sym::<Q>(8);
        let b = semicircular(&int(1), &int(1), 8);
        let c = sample(8);
        let left = monotone_convolve(&monotone_convolve(&a, &b), &c);
        let right = monotone_convolve(&a, &monotone_convolve(&b, &c));
        assert_eq!(left, right);
        assert_ne!(monotone_convolve(&a, &b), monotone_convolve(&b, &a));
    }

    #[test]
    fn variances_and_means_add() {
        let a = sample(6);
        let b = semicircular(&int(3), &rat(2, 7), 6);
        let (ma, va) = a.mean_var();
        let (mb, vb) = b.mean_var();
        for c in [free_convolve(&a, &b), boolean_convolve(&a, &b), monotone_convolve(&a, &b)] {
            assert_eq!(c.mean_var(), (&ma + &mb, &va + &vb));
        }
    }

    #[test]
    fn two_state_examples() {
        let mu = sample(8);
        let nu = semicircular(&int(1), &rat(1, 2), 8);
        let d0 = MomentFunctional::delta0(8);
        let p = TwoStatePair::new(mu.clone(), d0.clone()).unwrap();
        let q = TwoStatePair::new(nu.clone(), d0.clone()).unwrap();
        assert_eq!(two_state_convolve(&p, &q), TwoStatePair::new(boolean_convolve(&mu, &nu), d0).unwrap());
        let both = free_convolve(&mu, &nu);
        let diag = two_state_convolve(&TwoStatePair::diagonal(mu.clone()), &TwoStatePair::diagonal(nu.clone()));
        assert_eq!(diag, TwoStatePair::diagonal(both));
        let dp = TwoStatePair::new(delta(int(1), 6), delta(int(2), 6)).unwrap();
        let dq = TwoStatePair::new(delta(rat(1, 2), 6), delta(int(-1), 6)).unwrap();
        assert_eq!(two_state_convolve(&dp, &dq), TwoStatePair::new(delta(rat(3, 2), 6), delta(int(1), 6)).unwrap());
    }

    #[test]
    fn two_state_power_law() {
        let p = TwoStatePair::new(sample(6), semicircular(&int(1), &int(2), 6)).unwrap();
        let two = two_state_power(&p, &int(2));
        assert_eq!(two, two_state_convolve(&p, &p));
        assert_eq!(two_state_power(&p, &int(1)), p);
    }
}
