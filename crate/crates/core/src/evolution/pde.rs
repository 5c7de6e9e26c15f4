//! Evolution equations of two-state semigroups as exact residuals over `R[t]`.

use super::{strip_transform, two_state_semigroup};
use crate::error::{Error, Result};
use crate::functional::CanonicalTriple;
use crate::series::{Coeff, InfLaurent, Poly};
use crate::transforms::{f_at_infinity, g_at_infinity};

/// `β + γ G_ρ(z)`, the Voiculescu transform at time one of a canonical triple.
pub fn canonical_phi<R: Coeff>(triple: &CanonicalTriple<R>, order: usize) -> InfLaurent<R> {
    let mut desc = vec![R::zero(); order + 1];
    desc[0] = triple.beta.clone();
    if let Some(rho) = triple.rho.as_ref().filter(|_| !triple.gamma.is_zero()) {
        let n = order.min(rho.order() + 1);
        desc.truncate(n + 1);
        for (k, slot) in desc.iter_mut().enumerate().skip(1) {
            *slot = triple.gamma.mul(&rho.moment(k - 1));
        }
    }
    InfLaurent::new(R::zero(), desc)
}

/// Residuals of
/// `∂_t F_{μ̃_t} = φ_μ(F_{μ_t}) - φ_{μ̃,μ}(F_{μ_t}) - φ_μ(F_{μ_t}) ∂_z F_{μ̃_t}` (`tilde`)
/// and `∂_t F_{μ_t} = -φ_μ(F_{μ_t}) ∂_z F_{μ_t}` (`base`).
#[derive(Clone, Debug, PartialEq)]
pub struct PdeResidual<R> {
    pub tilde: InfLaurent<R>,
    pub base: InfLaurent<R>,
}

/// Builds the two-state semigroup of `(rel, base)` over `R[t]` and returns both
/// residuals, which vanish identically.
pub fn pde_residual<R: Coeff>(
    rel: &CanonicalTriple<R>,
    base: &CanonicalTriple<R>,
    order: usize,
) -> Result<PdeResidual<Poly<R>>> {
    let lift = |tr: &CanonicalTriple<R>| tr.map(|c| Poly::constant(c.clone()));
    let (rel_t, base_t) = (lift(rel), lift(base));
    let pair = two_state_semigroup(&rel_t, &base_t, &Poly::var(), order)?;
    let f_tilde = f_at_infinity(&pair.tilde);
    let f = f_at_infinity(&pair.base);
    let a = canonical_phi(&base_t, order).compose(&f)?;
    let a_tilde = canonical_phi(&rel_t, order).compose(&f)?;

    let base_res = f.t_derivative().add(&a.mul(&f.derivative())?);
    let tilde_res = f_tilde.t_derivative().sub(&a).add(&a_tilde).add(&a.mul(&f_tilde.derivative())?);
    Ok(PdeResidual { tilde: tilde_res, base: base_res })
}

/// Sign of the `γ̃ G_{ν̃_t}` term inside the bracket of the `∂_t G` equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketSign {
    /// `β + γG_{ν_t} - β̃ - γ̃G_{ν̃_t}`, from substituting `G = 1/F`.
    Derived,
    /// `β + γG_{ν_t} - β̃ + γ̃G_{ν̃_t}`.
    Printed,
}

/// Residual of
/// `∂_t G_{μ̃_t} + (β + γG_{ν_t} - β̃ ∓ γ̃G_{ν̃_t}) G_{μ̃_t}^2 + (β + γG_{ν_t}) ∂_z G_{μ̃_t}`
/// with `ν_t = 𝒥[μ_t]` and `ν̃_t = 𝒥[μ̃_t]`.
///
/// With [`BracketSign::Derived`] it vanishes identically.
pub fn cauchy_evolution_residual<R: Coeff>(
    rel: &CanonicalTriple<R>,
    base: &CanonicalTriple<R>,
    order: usize,
    sign: BracketSign,
) -> Result<InfLaurent<Poly<R>>> {
    if rel.gamma.is_zero() || base.gamma.is_zero() {
        return Err(Error::ZeroVariance);
    }
    let lift = |tr: &CanonicalTriple<R>| tr.map(|c| Poly::constant(c.clone()));
    let (rel_t, base_t) = (lift(rel), lift(base));
    let pair = two_state_semigroup(&rel_t, &base_t, &Poly::var(), order)?;
    let g_tilde = g_at_infinity(&pair.tilde);
    let g_nu = g_at_infinity(&strip_transform(&pair.base)?);
    let g_nu_tilde = g_at_infinity(&strip_transform(&pair.tilde)?);

    let n = g_nu.order();
    let drift = InfLaurent::constant(base_t.beta.clone(), n).add(&g_nu.scale(&base_t.gamma));
    let rel_part = InfLaurent::constant(rel_t.beta.clone(), n);
    let rel_g = g_nu_tilde.scale(&rel_t.gamma);
    let bracket = match sign {
        BracketSign::Derived => drift.sub(&rel_part).sub(&rel_g),
        BracketSign::Printed => drift.sub(&rel_part).add(&rel_g),
    };
    let g2 = g_tilde.mul(&g_tilde)?;
    Ok(g_tilde.t_derivative().add(&bracket.mul(&g2)?).add(&drift.mul(&g_tilde.derivative())?))
}

/// `-G_{μ̃_t}^2` times the first residual of [`pde_residual`]; equals the
/// derived-sign Cauchy residual whenever `φ_μ∘F_{μ_t} = β + γG_{ν_t}` and its
/// two-state analogue hold.
pub fn cauchy_from_pde<R: Coeff>(
    rel: &CanonicalTriple<R>,
    base: &CanonicalTriple<R>,
    order: usize,
) -> Result<InfLaurent<Poly<R>>> {
    let res = pde_residual(rel, base, order)?;
    let lift = |tr: &CanonicalTriple<R>| tr.map(|c| Poly::constant(c.clone()));
    let pair = two_state_semigroup(&lift(rel), &lift(base), &Poly::var(), order)?;
    let g = g_at_infinity(&pair.tilde);
    Ok(g.mul(&g)?.mul(&res.tilde)?.neg())
}
