//! Moment, R-, η-, F- and φ-transforms, single and two-state.
//!
//! The R-transform is computed by a triangular recursion. A second route goes
//! through series reversion of the F-expansion and shares no code with it.

use crate::error::{Error, Result};
use crate::functional::MomentFunctional;
use crate::series::{Coeff, InfLaurent, Series};

/// `(μ̃, μ)`, sharing one order.
#[derive(Clone, PartialEq, Debug)]
pub struct TwoStatePair<R> {
    pub tilde: MomentFunctional<R>,
    pub base: MomentFunctional<R>,
}

impl<R: Coeff> TwoStatePair<R> {
    pub fn new(tilde: MomentFunctional<R>, base: MomentFunctional<R>) -> Result<Self> {
        if tilde.order() != base.order() {
            return Err(Error::ShapeMismatch);
        }
        Ok(TwoStatePair { tilde, base })
    }

    /// `(μ, μ)`.
    pub fn diagonal(mu: MomentFunctional<R>) -> Self {
        TwoStatePair { tilde: mu.clone(), base: mu }
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> TwoStatePair<S> {
        TwoStatePair { tilde: self.tilde.map(&f), base: self.base.map(&f) }
    }
}

/// `M(z) = Σ m_n z^n`.
pub fn m_series<R: Coeff>(mf: &MomentFunctional<R>) -> Series<R> {
    mf.m_series()
}

/// `z(1 + M(z))`.
fn z_one_plus_m<R: Coeff>(mf: &MomentFunctional<R>) -> Series<R> {
    let mut m = mf.m_series();
    m.set_coeff(0, R::one());
    m.shift_up(1).truncate(mf.order())
}

/// The series `S` with zero constant term and `S(p(z)) = target(z)`, for
/// `p = z + O(z^2)`, solved one degree at a time.
fn solve_substitution<R: Coeff>(target: &Series<R>, p: &Series<R>) -> Series<R> {
    let n = target.order().min(p.order());
    let mut out = Series::zero(n);
    // powers[k] = p^k, built as needed
    let mut power = Series::one(n);
    let mut acc = Series::zero(n);
    for k in 1..=n {
        power = power.mul(p);
        // [z^k] of Σ_{j<k} s_j p^j is final once s_1..s_{k-1} are known; p^k starts with z^k
        let s_k = target.coeff(k).sub(acc.coeff(k));
        acc = acc.add(&power.scale(&s_k));
        out.set_coeff(k, s_k);
    }
    out
}

/// Free cumulants as the series `R(z) = Σ κ_n z^n`, from `R(z(1 + M(z))) = M(z)`.
pub fn r_from_moments<R: Coeff>(mf: &MomentFunctional<R>) -> Series<R> {
    solve_substitution(&mf.m_series(), &z_one_plus_m(mf))
}

/// Inverse of [`r_from_moments`]: iterate `M ← R(z(1 + M))`, gaining one exact
/// coefficient per pass.
pub fn moments_from_r<R: Coeff>(r: &Series<R>, order: usize) -> MomentFunctional<R> {
    let n = order.min(r.order());
    let mut r = r.truncate(n);
    r.set_coeff(0, R::zero());
    let mut mf = MomentFunctional::delta0(n);
    for _ in 0..n {
        let m = r.compose(&z_one_plus_m(&mf)).expect("z(1 + M) has zero constant term");
        mf = MomentFunctional::from_m_series(&m);
    }
    mf
}

/// Boolean cumulants as `η = M(1 + M)^{-1}`.
pub fn eta_from_moments<R: Coeff>(mf: &MomentFunctional<R>) -> Series<R> {
    let m = mf.m_series();
    let one_plus = Series::one(m.order()).add(&m);
    m.mul(&one_plus.reciprocal().expect("1 + M is a unit"))
}

/// `M = η(1 - η)^{-1}`; the constant term of `η` is ignored.
pub fn moments_from_eta<R: Coeff>(eta: &Series<R>, order: usize) -> MomentFunctional<R> {
    let mut e = eta.truncate(order);
    e.set_coeff(0, R::zero());
    let one_minus = Series::one(e.order()).sub(&e);
    MomentFunctional::from_m_series(&e.mul(&one_minus.reciprocal().expect("1 - η is a unit")))
}

/// `F(z) = z - η_1 - η_2/z - ... - η_N/z^{N-1}`.
pub fn f_at_infinity<R: Coeff>(mf: &MomentFunctional<R>) -> InfLaurent<R> {
    let eta = eta_from_moments(mf);
    f_from_eta(&eta)
}

/// F-expansion from η-coefficients.
pub fn f_from_eta<R: Coeff>(eta: &Series<R>) -> InfLaurent<R> {
    InfLaurent::monic(eta.tail().iter().map(Coeff::neg).collect())
}

/// Inverse of [`f_from_eta`]: `η_{k+1} = -c_k`.
pub fn eta_from_f<R: Coeff>(f: &InfLaurent<R>) -> Result<Series<R>> {
    if !f.top().is_one() {
        return Err(Error::LaurentDomain);
    }
    Ok(Series::from_tail(f.descending().iter().map(Coeff::neg).collect()))
}

/// `G(z) = Σ_{n≥0} m_n z^{-n-1}`, known to `z^{-N-1}`.
pub fn g_at_infinity<R: Coeff>(mf: &MomentFunctional<R>) -> InfLaurent<R> {
    let mut desc = vec![R::zero()];
    desc.extend((0..=mf.order()).map(|n| mf.moment(n)));
    InfLaurent::new(R::zero(), desc)
}

/// Moments read off a Cauchy transform expansion.
pub fn moments_from_g<R: Coeff>(g: &InfLaurent<R>) -> Result<MomentFunctional<R>> {
    if !g.top().is_zero() || !g.coeff(0).is_zero() || g.order() < 1 || !g.coeff(1).is_one() {
        return Err(Error::LaurentDomain);
    }
    Ok(MomentFunctional::new(g.descending()[2..].to_vec()))
}

/// Descending series with `c_k = s_{k+1}`, i.e. `s(w)/w` at `w = 1/z`.
fn descending_from_series<R: Coeff>(s: &Series<R>) -> InfLaurent<R> {
    InfLaurent::new(R::zero(), s.tail().to_vec())
}

/// `φ(z) = Σ_{n≥1} κ_n z^{-(n-1)}`.
pub fn voiculescu_phi<R: Coeff>(mf: &MomentFunctional<R>) -> InfLaurent<R> {
    descending_from_series(&r_from_moments(mf))
}

/// `R(w) = w φ(1/w)`, the inverse of [`voiculescu_phi`]'s packaging.
pub fn r_from_phi<R: Coeff>(phi: &InfLaurent<R>) -> Result<Series<R>> {
    if !phi.top().is_zero() {
        return Err(Error::LaurentDomain);
    }
    Ok(Series::from_tail(phi.descending().to_vec()))
}

/// `φ = F^{⟨-1⟩}(z) - z` computed by reversion.
///
/// With `f(w) = 1/F(1/w)` and `g = f^{⟨-1⟩}`, `F^{⟨-1⟩}(1/w) = 1/g(w)`, so
/// `R(w) = w/g(w) - 1`.
pub fn phi_by_reversion<R: Coeff>(mf: &MomentFunctional<R>) -> Result<InfLaurent<R>> {
    let f_inf = f_at_infinity(mf);
    let mut bracket = vec![R::one()];
    bracket.extend(f_inf.descending().iter().cloned());
    let f = Series::new(bracket).reciprocal()?.shift_up(1);
    let g = f.reversion()?;
    let mut r = g.shift_down(1)?.reciprocal()?;
    r.set_coeff(0, r.coeff(0).sub(&R::one()));
    Ok(descending_from_series(&r.truncate(mf.order())))
}

/// `R̃` from `η^{μ̃}(z) = R̃(z(1 + M^μ(z))) (1 + M^μ(z))^{-1}`.
pub fn two_state_r<R: Coeff>(pair: &TwoStatePair<R>) -> Series<R> {
    let mut one_plus = pair.base.m_series();
    one_plus.set_coeff(0, R::one());
    let target = eta_from_moments(&pair.tilde).mul(&one_plus);
    solve_substitution(&target, &z_one_plus_m(&pair.base))
}

/// The `μ̃` for which [`two_state_r`] of `(μ̃, base)` is `r`.
pub fn tilde_from_two_state_r<R: Coeff>(r: &Series<R>, base: &MomentFunctional<R>) -> MomentFunctional<R> {
    let n = r.order().min(base.order());
    let mut r = r.truncate(n);
    r.set_coeff(0, R::zero());
    let base = base.truncate(n);
    let mut one_plus = base.m_series();
    one_plus.set_coeff(0, R::one());
    let sub = r.compose(&z_one_plus_m(&base)).expect("z(1 + M) has zero constant term");
    let eta = sub.mul(&one_plus.reciprocal().expect("1 + M is a unit"));
    moments_from_eta(&eta, n)
}

/// `φ_{μ̃,μ}(z) = Σ R̃_n z^{-(n-1)}`.
pub fn two_state_phi<R: Coeff>(pair: &TwoStatePair<R>) -> InfLaurent<R> {
    descending_from_series(&two_state_r(pair))
}
