//! Functionals on non-commuting polynomials in `x_1..x_d` and their transforms,
//! as word-indexed series in non-commuting `z_1..z_d`.
//!
//! Substitution always places `(1 + M)` to the right of each letter:
//! `z_i ↦ z_i (1 + M)`.

pub mod catalog;
mod series;

use std::collections::BTreeMap;
use std::fmt;

pub use catalog::{nc_verify, NC_CATALOG};
pub use series::{NCSeries, Word};

use crate::error::{Error, Result};
use crate::functional::MomentFunctional;
use crate::series::{Coeff, Series};

/// Unital functional: moments `μ[x_u]` for words `1 ≤ |u| ≤ order`; the empty
/// word is `1` implicitly. Zero moments are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NCFunctional<R> {
    d: usize,
    order: usize,
    m: BTreeMap<Word, R>,
}

impl<R: Coeff> NCFunctional<R> {
    pub fn new(d: usize, order: usize, moments: impl IntoIterator<Item = (Word, R)>) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (w, c) in moments {
            if w.is_empty() {
                if !c.is_one() {
                    return Err(Error::BadParam("the empty-word moment must be 1".into()));
                }
                continue;
            }
            if w.len() > order || w.letters().iter().any(|&i| i as usize >= d) {
                return Err(Error::BadParam(format!("word {w} outside d = {d}, order {order}")));
            }
            if !c.is_zero() {
                m.insert(w, c);
            }
        }
        Ok(NCFunctional { d, order, m })
    }

    /// `δ_β[x_u] = β_{u(1)} ⋯ β_{u(k)}`.
    pub fn delta(beta: &[R], order: usize) -> Self {
        let d = beta.len();
        let m = Word::all(d, order).into_iter().map(|w| {
            let c = w.letters().iter().fold(R::one(), |acc, &i| acc.mul(&beta[i as usize]));
            (w, c)
        });
        Self::new(d, order, m).expect("words are in range")
    }

    pub fn delta0(d: usize, order: usize) -> Self {
        Self::delta(&vec![R::zero(); d], order)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moment(&self, w: &Word) -> R {
        if w.is_empty() {
            return R::one();
        }
        self.m.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn moments(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.m.iter()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let m = self.m.iter().filter(|(w, _)| w.len() <= order).map(|(w, c)| (w.clone(), c.clone()));
        NCFunctional { d: self.d, order, m: m.collect() }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> NCFunctional<S> {
        NCFunctional::new(self.d, self.order, self.m.iter().map(|(w, c)| (w.clone(), f(c)))).expect("same shape")
    }

    /// `M^μ(z) = Σ_{u ≠ ∅} μ[x_u] z_u`.
    pub fn m_series(&self) -> NCSeries<R> {
        NCSeries::from_map(self.d, self.order, self.m.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    /// Reads the moments off `M`, ignoring any constant term.
    pub fn from_m_series(m: &NCSeries<R>) -> Self {
        let moments = m.terms().filter(|(w, _)| !w.is_empty()).map(|(w, c)| (w.clone(), c.clone()));
        Self::new(m.d(), m.order(), moments).expect("series words are in range")
    }

    /// The `d = 1` functional with the same moments.
    pub fn from_single(mf: &MomentFunctional<R>) -> Self {
        let m = (1..=mf.order()).map(|k| (Word(vec![0; k]), mf.moment(k)));
        Self::new(1, mf.order(), m).expect("one letter")
    }

    pub fn to_single(&self) -> Result<MomentFunctional<R>> {
        if self.d != 1 {
            return Err(Error::ShapeMismatch);
        }
        Ok(MomentFunctional::new((1..=self.order).map(|k| self.moment(&Word(vec![0; k]))).collect()))
    }
}

impl<R: Coeff> fmt::Display for NCFunctional<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.m.iter().map(|(w, c)| format!("{w}: {c}")).collect();
        write!(f, "[{}]", terms.join(", "))
    }
}

fn one<R: Coeff>(s: &NCSeries<R>) -> NCSeries<R> {
    NCSeries::one(s.d(), s.order())
}

/// `z_i ↦ z_i (1 + M)` for each letter.
fn right_subs<R: Coeff>(m: &NCSeries<R>) -> Vec<NCSeries<R>> {
    let one_m = one(m).add(m);
    (0..m.d() as u8).map(|i| NCSeries::var(i, m.d(), m.order()).mul(&one_m)).collect()
}

fn subst<R: Coeff>(a: &NCSeries<R>, subs: &[NCSeries<R>]) -> NCSeries<R> {
    a.substitute(subs).expect("substitutions z_i(1 + M) have no constant term")
}

fn inv<R: Coeff>(s: &NCSeries<R>) -> NCSeries<R> {
    s.reciprocal().expect("constant term 1")
}

/// Solves `X(z_i(1 + M)) = target` word length by word length.
fn solve_substitution<R: Coeff>(target: &NCSeries<R>, m: &NCSeries<R>) -> NCSeries<R> {
    let subs = right_subs(m);
    let mut x = target.clone();
    for _ in 1..target.order() {
        x = x.add(&target.sub(&subst(&x, &subs)));
    }
    x
}

/// The R-transform: `R(z_i(1 + M)) = M`.
pub fn nc_r<R: Coeff>(mu: &NCFunctional<R>) -> NCSeries<R> {
    let m = mu.m_series();
    solve_substitution(&m, &m)
}

/// Inverse of [`nc_r`], iterating `M ← R(z_i(1 + M))`.
pub fn nc_moments_from_r<R: Coeff>(r: &NCSeries<R>, order: usize) -> NCFunctional<R> {
    let r = r.truncate(order);
    let mut m = NCSeries::zero(r.d(), r.order());
    for _ in 0..r.order() {
        m = subst(&r, &right_subs(&m));
    }
    NCFunctional::from_m_series(&m)
}

/// `η = (1 + M)^{-1} M`.
pub fn nc_eta<R: Coeff>(mu: &NCFunctional<R>) -> NCSeries<R> {
    let m = mu.m_series();
    inv(&one(&m).add(&m)).mul(&m)
}

/// `1 + M = (1 - η)^{-1}`.
pub fn nc_moments_from_eta<R: Coeff>(eta: &NCSeries<R>, order: usize) -> NCFunctional<R> {
    let eta = eta.truncate(order);
    let mut e = eta.clone();
    e.set(Word::empty(), R::zero());
    NCFunctional::from_m_series(&inv(&one(&e).sub(&e)))
}

/// `R^{μ̃,μ}` with `η^{μ̃} = R^{μ̃,μ}(z_i(1 + M^μ)) (1 + M^μ)^{-1}`.
pub fn nc_two_state_r<R: Coeff>(tilde: &NCFunctional<R>, base: &NCFunctional<R>) -> NCSeries<R> {
    let order = tilde.order().min(base.order());
    let m = base.truncate(order).m_series();
    let target = nc_eta(&tilde.truncate(order)).mul(&one(&m).add(&m));
    solve_substitution(&target, &m)
}

/// `μ̃` from its two-state R-transform relative to `base`.
pub fn nc_tilde_from_two_state_r<R: Coeff>(r: &NCSeries<R>, base: &NCFunctional<R>) -> NCFunctional<R> {
    let order = r.order().min(base.order());
    let m = base.truncate(order).m_series();
    let eta = subst(&r.truncate(order), &right_subs(&m)).mul(&inv(&one(&m).add(&m)));
    nc_moments_from_eta(&eta, order)
}

/// `Φ[ν]`: `η = Σ_i z_i (1 + M^ν) z_i`, two orders above `ν`.
pub fn nc_phi<R: Coeff>(nu: &NCFunctional<R>) -> NCFunctional<R> {
    let order = nu.order() + 2;
    nc_moments_from_eta(&phi_eta(nu, order), order)
}

fn phi_eta<R: Coeff>(nu: &NCFunctional<R>, order: usize) -> NCSeries<R> {
    let (d, m) = (nu.d(), nu.m_series());
    let m = NCSeries::from_map(d, order, m.terms().map(|(w, c)| (w.clone(), c.clone())));
    let one_m = one(&m).add(&m);
    (0..d as u8).fold(NCSeries::zero(d, order), |acc, i| {
        let z = NCSeries::var(i, d, order);
        acc.add(&z.mul(&one_m).mul(&z))
    })
}

/// `𝔅[μ]`: `R^{𝔅[μ]} = η^μ`.
pub fn nc_bp<R: Coeff>(mu: &NCFunctional<R>) -> NCFunctional<R> {
    nc_moments_from_r(&nc_eta(mu), mu.order())
}

pub fn nc_bp_inverse<R: Coeff>(lambda: &NCFunctional<R>) -> NCFunctional<R> {
    nc_moments_from_eta(&nc_r(lambda), lambda.order())
}

/// `μ ⊳ ν`: `R^{μ⊳ν} = R^μ(z_i(1 + M^ν)) (1 + M^ν)^{-1}`.
pub fn nc_subordination<R: Coeff>(mu: &NCFunctional<R>, nu: &NCFunctional<R>) -> NCFunctional<R> {
    let order = mu.order().min(nu.order());
    let m = nu.truncate(order).m_series();
    let r = subst(&nc_r(&mu.truncate(order)), &right_subs(&m)).mul(&inv(&one(&m).add(&m)));
    nc_moments_from_r(&r, order)
}

/// The `μ` with `μ ⊳ ν = λ`, from
/// `1 + M^{μ⊞ν} = (1 + M^λ)(1 + M^ν(z_i(1 + M^λ)))`.
pub fn nc_subordination_inverse<R: Coeff>(lambda: &NCFunctional<R>, nu: &NCFunctional<R>) -> NCFunctional<R> {
    let order = lambda.order().min(nu.order());
    let ml = lambda.truncate(order).m_series();
    let mn = nu.truncate(order).m_series();
    let sum = one(&ml).add(&ml).mul(&one(&mn).add(&subst(&mn, &right_subs(&ml))));
    let sum = NCFunctional::from_m_series(&sum);
    nc_moments_from_r(&nc_r(&sum).sub(&nc_r(&nu.truncate(order))), order)
}

pub fn nc_free_convolve<R: Coeff>(a: &NCFunctional<R>, b: &NCFunctional<R>) -> NCFunctional<R> {
    let order = a.order().min(b.order());
    nc_moments_from_r(&nc_r(a).add(&nc_r(b)), order)
}

pub fn nc_free_power<R: Coeff>(a: &NCFunctional<R>, t: &R) -> NCFunctional<R> {
    nc_moments_from_r(&nc_r(a).scale(t), a.order())
}

pub fn nc_boolean_convolve<R: Coeff>(a: &NCFunctional<R>, b: &NCFunctional<R>) -> NCFunctional<R> {
    let order = a.order().min(b.order());
    nc_moments_from_eta(&nc_eta(a).add(&nc_eta(b)), order)
}

pub fn nc_boolean_power<R: Coeff>(a: &NCFunctional<R>, t: &R) -> NCFunctional<R> {
    nc_moments_from_eta(&nc_eta(a).scale(t), a.order())
}

/// `t β·z + t γ Σ_i z_i (1 + M^ρ) z_i`.
pub fn nc_maassen_two_state_r<R: Coeff>(beta: &[R], gamma: &R, rho: &NCFunctional<R>, t: &R, order: usize) -> NCSeries<R> {
    let d = beta.len();
    let lin = NCSeries::from_map(d, order, beta.iter().enumerate().map(|(i, b)| (Word::letter(i as u8), b.clone())));
    lin.add(&phi_eta(rho, order).scale(gamma)).scale(t)
}

/// One-letter series of a single-variable power series.
pub fn nc_from_series<R: Coeff>(s: &Series<R>) -> NCSeries<R> {
    NCSeries::from_map(1, s.order(), (0..=s.order()).map(|k| (Word(vec![0; k]), s.coeff(k).clone())))
}
