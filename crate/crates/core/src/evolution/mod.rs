//! Shift operators, Bercovici–Pata maps, subordination and semigroup builders.

pub mod catalog;
mod pde;

pub use pde::{canonical_phi, cauchy_evolution_residual, pde_residual, BracketSign, PdeResidual};

use crate::convolution::{boolean_convolve, boolean_power, free_power, monotone_convolve};
use crate::error::{Error, Result};
use crate::functional::{
    jacobi_all, moments_from_jacobi, strip_eta, CanonicalTriple, JacobiParams, MomentFunctional,
};
use crate::series::{Coeff, Series};
use crate::transforms::{
    eta_from_moments, moments_from_eta, moments_from_r, r_from_moments, tilde_from_two_state_r, TwoStatePair,
};

/// `η^{Φ[ν]}(w) = w^2 (1 + M^ν(w))`, without the Jacobi cross-check.
pub(crate) fn phi_transform<R: Coeff>(nu: &MomentFunctional<R>) -> MomentFunctional<R> {
    let mut one_plus = nu.m_series();
    one_plus.set_coeff(0, R::one());
    moments_from_eta(&one_plus.shift_up(2), nu.order() + 2)
}

/// `𝒥` by `m_k = η_{k+2}/γ`, without the Jacobi cross-check.
pub(crate) fn strip_transform<R: Coeff>(mu: &MomentFunctional<R>) -> Result<MomentFunctional<R>> {
    if mu.order() < 2 {
        return Err(Error::BadParam("stripping needs order at least 2".into()));
    }
    let eta = eta_from_moments(mu);
    let gamma = eta.coeff(2).clone();
    if gamma.is_zero() {
        return Err(Error::ZeroVariance);
    }
    strip_eta(&eta, &gamma)
}

/// Moments of Jacobi parameters transformed by `shift`, as far as they are determined.
fn jacobi_route<R: Coeff>(
    mu: &MomentFunctional<R>,
    shift: impl Fn(&JacobiParams<R>) -> Option<JacobiParams<R>>,
    max_order: usize,
) -> Option<MomentFunctional<R>> {
    let j = shift(&jacobi_all(mu).ok()?)?;
    let order = if j.is_terminated() { max_order } else { (2 * j.betas().len()).min(max_order) };
    if order == 0 {
        return None;
    }
    moments_from_jacobi(&j, order).ok()
}

fn agree<R: Coeff>(a: &MomentFunctional<R>, b: Option<MomentFunctional<R>>, what: &'static str) -> Result<()> {
    match b {
        Some(b) if a.truncate(b.order()) != b => Err(Error::RouteMismatch(what)),
        _ => Ok(()),
    }
}

/// `Φ[ν]`, of order `N + 2`, with `F_{Φ[ν]}(z) = z - G_ν(z)`.
///
/// Also computed as the Jacobi right shift when the Jacobi parameters of `ν` exist.
pub fn phi_map<R: Coeff>(nu: &MomentFunctional<R>) -> Result<MomentFunctional<R>> {
    let out = phi_transform(nu);
    agree(&out, jacobi_route(nu, |j| Some(j.right_shift()), out.order()), "Phi: transform vs Jacobi right shift")?;
    Ok(out)
}

/// Coefficient stripping `𝒥[μ]`, of order `N - 2`, with `F_μ(z) = z - β - γ G_{𝒥[μ]}(z)`.
///
/// Also computed as the Jacobi left shift when the Jacobi parameters exist.
pub fn strip<R: Coeff>(mu: &MomentFunctional<R>) -> Result<MomentFunctional<R>> {
    let out = strip_transform(mu)?;
    if out.order() > 0 {
        agree(&out, jacobi_route(mu, JacobiParams::left_shift, out.order()), "J: transform vs Jacobi left shift")?;
    }
    Ok(out)
}

/// `𝔅[μ]`: `R^{𝔅[μ]} = η^μ`.
pub fn bp<R: Coeff>(mu: &MomentFunctional<R>) -> MomentFunctional<R> {
    moments_from_r(&eta_from_moments(mu), mu.order())
}

/// `𝔅^{-1}[μ]`: `η = R^μ`.
pub fn bp_inverse<R: Coeff>(mu: &MomentFunctional<R>) -> MomentFunctional<R> {
    moments_from_eta(&r_from_moments(mu), mu.order())
}

/// `𝔅_t[μ] = (μ^{⊞(1+t)})^{⊎1/(1+t)}`, dividing the Boolean cumulants by `1 + t` exactly.
pub fn belinschi_nica<R: Coeff>(mu: &MomentFunctional<R>, t: &R) -> Result<MomentFunctional<R>> {
    let s = R::one().add(t);
    let eta = eta_from_moments(&free_power(mu, &s));
    let divided = eta
        .coeffs()
        .iter()
        .map(|c| c.try_div(&s).ok_or(Error::NotDivisible("1 + t")))
        .collect::<Result<Vec<_>>>()?;
    Ok(moments_from_eta(&Series::new(divided), mu.order()))
}

/// `S(z(1 + M(z))) (1 + M(z))^{-1}` for the moment series `M` of `nu`.
fn subordinate_series<R: Coeff>(s: &Series<R>, nu: &MomentFunctional<R>) -> Series<R> {
    let n = s.order().min(nu.order());
    let nu = nu.truncate(n);
    let mut one_plus = nu.m_series();
    one_plus.set_coeff(0, R::one());
    let p = one_plus.shift_up(1).truncate(n);
    let sub = s.truncate(n).compose(&p).expect("z(1 + M) has zero constant term");
    sub.mul(&one_plus.reciprocal().expect("1 + M is a unit"))
}

/// `μ ⊳ ν`: `R^{μ⊳ν}(z) = R^μ(z(1 + M^ν)) (1 + M^ν)^{-1}`.
pub fn subordination<R: Coeff>(mu: &MomentFunctional<R>, nu: &MomentFunctional<R>) -> MomentFunctional<R> {
    let r = subordinate_series(&r_from_moments(mu), nu);
    moments_from_r(&r, r.order())
}

/// The `μ` with `μ ⊳ ν = λ`.
///
/// Uses `1 + M^{μ⊞ν}(z) = (1 + M^λ(z))(1 + M^ν(z(1 + M^λ(z))))` and then
/// `R^μ = R^{μ⊞ν} - R^ν`.
pub fn subordination_inverse<R: Coeff>(lambda: &MomentFunctional<R>, nu: &MomentFunctional<R>) -> MomentFunctional<R> {
    let n = lambda.order().min(nu.order());
    let (lambda, nu) = (lambda.truncate(n), nu.truncate(n));
    let mut one_l = lambda.m_series();
    one_l.set_coeff(0, R::one());
    let mut one_nu = nu.m_series();
    one_nu.set_coeff(0, R::one());
    let p = one_l.shift_up(1).truncate(n);
    let one_sum = one_l.mul(&one_nu.compose(&p).expect("z(1 + M) has zero constant term"));
    let sum = MomentFunctional::from_m_series(&one_sum);
    let r = r_from_moments(&sum).sub(&r_from_moments(&nu));
    moments_from_r(&r, n)
}

/// `Φ[μ, ν] = 𝔅^{-1}[μ ⊳ ν]`.
pub fn phi2<R: Coeff>(mu: &MomentFunctional<R>, nu: &MomentFunctional<R>) -> MomentFunctional<R> {
    bp_inverse(&subordination(mu, nu))
}

/// `t(β w + γ w^2 (1 + M^ρ(w)))`, of order `min(order, ord ρ + 2)`.
fn maassen_series<R: Coeff>(triple: &CanonicalTriple<R>, t: &R, order: usize) -> Series<R> {
    let order = match &triple.rho {
        Some(rho) if !triple.gamma.is_zero() => order.min(rho.order() + 2),
        _ => order,
    };
    let mut c = vec![R::zero(); order + 1];
    if order >= 1 {
        c[1] = triple.beta.mul(t);
    }
    if !triple.gamma.is_zero() {
        let gt = triple.gamma.mul(t);
        let rho = triple.rho.as_ref().expect("gamma != 0 carries rho");
        for (k, slot) in c.iter_mut().enumerate().skip(2) {
            *slot = gt.mul(&rho.moment(k - 2));
        }
    }
    Series::new(c)
}

/// The free convolution semigroup of a canonical triple at time `t`:
/// `κ_1 = tβ`, `κ_{n+2} = tγ m_n(ρ)`.
pub fn maassen_semigroup<R: Coeff>(triple: &CanonicalTriple<R>, t: &R, order: usize) -> MomentFunctional<R> {
    let r = maassen_series(triple, t, order);
    moments_from_r(&r, r.order())
}

/// The canonical triple of `μ = μ_1`: `β = κ_1`, `γ = κ_2`, `m_n(ρ) = κ_{n+2}/γ`.
pub fn triple_from_semigroup<R: Coeff>(mu: &MomentFunctional<R>) -> Result<CanonicalTriple<R>> {
    if mu.order() < 2 {
        return Err(Error::BadParam("canonical triple needs order at least 2".into()));
    }
    let r = r_from_moments(mu);
    let beta = r.coeff(1).clone();
    let gamma = r.coeff(2).clone();
    if gamma.is_zero() {
        if r.coeffs()[3..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotASemigroup);
        }
        return Ok(CanonicalTriple::drift(beta));
    }
    let rho = r.coeffs()[3..]
        .iter()
        .map(|c| c.try_div(&gamma).ok_or(Error::NotDivisible("variance")))
        .collect::<Result<Vec<_>>>()?;
    Ok(CanonicalTriple { beta, gamma, rho: Some(MomentFunctional::new(rho)) })
}

/// Both constructions of the two-state semigroup of `(rel, base)` at time `t`.
///
/// The first comes from the two-state transform `t(β̃ w + γ̃ w^2 (1 + M^{ρ̃}))`,
/// the second is `δ_{β̃t} ⊎ Φ[ρ̃ ▷ μ_t]^{⊎γ̃t}`.
pub fn two_state_semigroup_routes<R: Coeff>(
    rel: &CanonicalTriple<R>,
    base: &CanonicalTriple<R>,
    t: &R,
    order: usize,
) -> (TwoStatePair<R>, MomentFunctional<R>) {
    let mu_t = maassen_semigroup(base, t, order);
    let rt = maassen_series(rel, t, mu_t.order());
    let tilde = tilde_from_two_state_r(&rt, &mu_t);
    let n = tilde.order();
    let pair = TwoStatePair { base: mu_t.truncate(n), tilde };

    let drift = MomentFunctional::point_mass(&rel.beta.mul(t), n);
    let route_b = match &rel.rho {
        Some(rho) if !rel.gamma.is_zero() && n >= 2 => {
            let inner = monotone_convolve(&rho.truncate(n - 2), &pair.base.truncate(n - 2));
            boolean_convolve(&drift, &boolean_power(&phi_transform(&inner), &rel.gamma.mul(t)))
        }
        _ => drift,
    };
    (pair, route_b)
}

/// The two-state free convolution semigroup with relative triple `rel` over the
/// free semigroup of `base`, at time `t`. Fails if the two constructions disagree.
pub fn two_state_semigroup<R: Coeff>(
    rel: &CanonicalTriple<R>,
    base: &CanonicalTriple<R>,
    t: &R,
    order: usize,
) -> Result<TwoStatePair<R>> {
    let (pair, b) = two_state_semigroup_routes(rel, base, t, order);
    if pair.tilde != b {
        return Err(Error::RouteMismatch("two-state semigroup: transform vs Boolean/monotone formula"));
    }
    Ok(pair)
}
