//! Truncated moment functionals, Jacobi parameters and the named families.

use std::fmt;

use crate::error::{Error, Result};
use crate::series::{Coeff, Poly, Rational, Series};
use crate::transforms;

/// A unital linear functional known through `m_1..m_N`; `m_0 = 1` is implicit.
///
/// No positivity is assumed.
#[derive(Clone, PartialEq, Debug)]
pub struct MomentFunctional<R> {
    m: Vec<R>,
}

impl<R: Coeff> MomentFunctional<R> {
    /// From `m_1..m_N`.
    pub fn new(m: Vec<R>) -> Self {
        MomentFunctional { m }
    }

    /// `δ_b` to order `N`.
    pub fn point_mass(b: &R, order: usize) -> Self {
        let mut m = Vec::with_capacity(order);
        let mut p = R::one();
        for _ in 0..order {
            p = p.mul(b);
            m.push(p.clone());
        }
        MomentFunctional { m }
    }

    /// `δ_0`.
    pub fn delta0(order: usize) -> Self {
        MomentFunctional { m: vec![R::zero(); order] }
    }

    pub fn order(&self) -> usize {
        self.m.len()
    }

    /// `m_n`, with `m_0 = 1`.
    ///
    /// Panics beyond the order.
    pub fn moment(&self, n: usize) -> R {
        if n == 0 {
            R::one()
        } else {
            self.m[n - 1].clone()
        }
    }

    /// `m_1..m_N`.
    pub fn moments(&self) -> &[R] {
        &self.m
    }

    pub fn truncate(&self, order: usize) -> Self {
        MomentFunctional { m: self.m[..order.min(self.order())].to_vec() }
    }

    /// `(β, γ) = (m_1, m_2 - m_1^2)`.
    ///
    /// Panics below order 2.
    pub fn mean_var(&self) -> (R, R) {
        let b = self.moment(1);
        let g = self.moment(2).sub(&b.mul(&b));
        (b, g)
    }

    /// Moment generating series `M(z) = Σ_{n≥1} m_n z^n`, constant term 0.
    pub fn m_series(&self) -> Series<R> {
        Series::from_tail(self.m.clone())
    }

    /// Reads `m_1..m_N` off `c_1..c_N` of a series; the constant term is ignored.
    pub fn from_m_series(s: &Series<R>) -> Self {
        MomentFunctional { m: s.tail().to_vec() }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> MomentFunctional<S> {
        MomentFunctional { m: self.m.iter().map(f).collect() }
    }

    /// Same functional with moments in `R[t]`.
    pub fn to_poly(&self) -> MomentFunctional<Poly<R>> {
        self.map(|c| Poly::constant(c.clone()))
    }
}

impl<R: Coeff> MomentFunctional<Poly<R>> {
    pub fn eval_param(&self, x: &R) -> MomentFunctional<R> {
        self.map(|c| c.eval(x))
    }

    pub fn t_derivative(&self) -> Self {
        self.map(Poly::derivative)
    }
}

impl MomentFunctional<Rational> {
    /// Embed constant moments into `ℚ[t]`.
    pub fn lift(&self) -> MomentFunctional<Poly<Rational>> {
        self.to_poly()
    }
}

impl<R: Coeff> fmt::Display for MomentFunctional<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// What follows the explicitly stored Jacobi levels.
#[derive(Clone, PartialEq, Debug)]
pub enum JacobiTail<R> {
    /// Nothing is known beyond the stored levels.
    Open,
    /// The last stored `γ` is zero and the fraction ends there.
    Terminated,
    /// Every further level is `(beta, gamma)`.
    Constant { beta: R, gamma: R },
}

/// Jacobi parameters `(β_0, β_1, ...; γ_0, γ_1, ...)`.
#[derive(Clone, PartialEq, Debug)]
pub struct JacobiParams<R> {
    betas: Vec<R>,
    gammas: Vec<R>,
    tail: JacobiTail<R>,
}

impl<R: Coeff> JacobiParams<R> {
    /// Explicit levels and a tail.
    pub fn new(betas: Vec<R>, gammas: Vec<R>, tail: JacobiTail<R>) -> Result<Self> {
        if betas.len() != gammas.len() {
            return Err(Error::BadParam("betas and gammas differ in length".into()));
        }
        if tail == JacobiTail::Terminated && !gammas.last().is_some_and(Coeff::is_zero) {
            return Err(Error::BadParam("terminated Jacobi parameters must end with gamma = 0".into()));
        }
        Ok(JacobiParams { betas, gammas, tail })
    }

    /// Terminated parameters: the final `γ` is set to zero.
    pub fn terminated(betas: Vec<R>, mut gammas: Vec<R>) -> Result<Self> {
        if gammas.len() + 1 != betas.len() {
            return Err(Error::BadParam("terminated parameters need one more beta than gammas".into()));
        }
        gammas.push(R::zero());
        Self::new(betas, gammas, JacobiTail::Terminated)
    }

    pub fn betas(&self) -> &[R] {
        &self.betas
    }

    pub fn gammas(&self) -> &[R] {
        &self.gammas
    }

    pub fn tail(&self) -> &JacobiTail<R> {
        &self.tail
    }

    pub fn is_terminated(&self) -> bool {
        self.tail == JacobiTail::Terminated
    }

    /// `(β_h, γ_h)`, or `None` when level `h` is unknown.
    pub fn level(&self, h: usize) -> Option<(R, R)> {
        if h < self.betas.len() {
            return Some((self.betas[h].clone(), self.gammas[h].clone()));
        }
        match &self.tail {
            JacobiTail::Open => None,
            JacobiTail::Terminated => Some((R::zero(), R::zero())),
            JacobiTail::Constant { beta, gamma } => Some((beta.clone(), gamma.clone())),
        }
    }

    /// Levels `0..depth` materialized, keeping the tail only if nothing was cut.
    pub fn expand(&self, depth: usize) -> Result<Self> {
        let mut betas = Vec::with_capacity(depth);
        let mut gammas = Vec::with_capacity(depth);
        for h in 0..depth {
            let (b, g) = self.level(h).ok_or(Error::JacobiDepth {
                order: 2 * depth,
                needed: depth,
                available: self.betas.len(),
            })?;
            betas.push(b);
            gammas.push(g);
            if self.is_terminated() && h + 1 == self.betas.len() {
                return Self::new(betas, gammas, JacobiTail::Terminated);
            }
        }
        Self::new(betas, gammas, JacobiTail::Open)
    }

    /// `J(Φ[μ]) = (0, β_0, β_1, ...; 1, γ_0, γ_1, ...)`.
    pub fn right_shift(&self) -> Self {
        let mut betas = vec![R::zero()];
        betas.extend(self.betas.iter().cloned());
        let mut gammas = vec![R::one()];
        gammas.extend(self.gammas.iter().cloned());
        JacobiParams { betas, gammas, tail: self.tail.clone() }
    }

    /// Drops level 0; `None` when nothing is left to shift out.
    pub fn left_shift(&self) -> Option<Self> {
        if self.betas.is_empty() {
            return match &self.tail {
                JacobiTail::Constant { .. } => Some(self.clone()),
                _ => None,
            };
        }
        if self.is_terminated() && self.betas.len() == 1 {
            return None;
        }
        Some(JacobiParams {
            betas: self.betas[1..].to_vec(),
            gammas: self.gammas[1..].to_vec(),
            tail: self.tail.clone(),
        })
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> JacobiParams<S> {
        JacobiParams {
            betas: self.betas.iter().map(&f).collect(),
            gammas: self.gammas.iter().map(&f).collect(),
            tail: match &self.tail {
                JacobiTail::Open => JacobiTail::Open,
                JacobiTail::Terminated => JacobiTail::Terminated,
                JacobiTail::Constant { beta, gamma } => JacobiTail::Constant { beta: f(beta), gamma: f(gamma) },
            },
        }
    }
}

impl<R: Coeff> fmt::Display for JacobiParams<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, xs: &[R], rep: Option<&R>| -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            if let Some(r) = rep {
                write!(f, ", {r}, ...")?;
            }
            Ok(())
        };
        let (rb, rg) = match &self.tail {
            JacobiTail::Constant { beta, gamma } => (Some(beta), Some(gamma)),
            _ => (None, None),
        };
        write!(f, "(")?;
        list(f, &self.betas, rb)?;
        write!(f, "; ")?;
        list(f, &self.gammas, rg)?;
        write!(f, ")")?;
        if self.is_terminated() {
            write!(f, " terminated")?;
        }
        Ok(())
    }
}

/// `(β, γ, ρ)` with `ρ` present exactly when `γ ≠ 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct CanonicalTriple<R> {
    pub beta: R,
    pub gamma: R,
    pub rho: Option<MomentFunctional<R>>,
}

impl<R: Coeff> CanonicalTriple<R> {
    pub fn new(beta: R, gamma: R, rho: Option<MomentFunctional<R>>) -> Result<Self> {
        if gamma.is_zero() != rho.is_none() {
            return Err(Error::MalformedTriple);
        }
        Ok(CanonicalTriple { beta, gamma, rho })
    }

    /// `(β, 0, ·)`.
    pub fn drift(beta: R) -> Self {
        CanonicalTriple { beta, gamma: R::zero(), rho: None }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> CanonicalTriple<S> {
        CanonicalTriple {
            beta: f(&self.beta),
            gamma: f(&self.gamma),
            rho: self.rho.as_ref().map(|r| r.map(&f)),
        }
    }
}

/// Moments `m_1..m_N` by summing weighted Motzkin paths.
///
/// Up steps weigh 1, a flat step at height `h` weighs `β_h`, a down step from
/// `h + 1` to `h` weighs `γ_h`.
pub fn moments_from_jacobi<R: Coeff>(j: &JacobiParams<R>, order: usize) -> Result<MomentFunctional<R>> {
    let needed = order.div_ceil(2);
    let depth_err = || Error::JacobiDepth { order, needed, available: j.betas.len() };
    let max_h = order / 2;
    let mut beta = Vec::with_capacity(max_h + 1);
    let mut gamma = Vec::with_capacity(max_h + 1);
    for h in 0..=max_h {
        match j.level(h) {
            Some((b, g)) => {
                beta.push(b);
                gamma.push(g);
            }
            None => break,
        }
    }
    // v[h] = weight of paths of length i from 0 to h; heights above N - i cannot return
    let mut v = vec![R::one()];
    let mut m = Vec::with_capacity(order);
    for i in 0..order {
        let cap = (i + 1).min(order - i - 1);
        let mut next = Vec::with_capacity(cap + 1);
        for h in 0..=cap {
            let mut acc = R::zero();
            if h >= 1 && h - 1 < v.len() {
                acc = acc.add(&v[h - 1]);
            }
            if h < v.len() && !v[h].is_zero() {
                let b = beta.get(h).ok_or_else(depth_err)?;
                acc = acc.add(&b.mul(&v[h]));
            }
            if h + 1 < v.len() && !v[h + 1].is_zero() {
                let g = gamma.get(h).ok_or_else(depth_err)?;
                acc = acc.add(&g.mul(&v[h + 1]));
            }
            next.push(acc);
        }
        v = next;
        m.push(v[0].clone());
    }
    Ok(MomentFunctional::new(m))
}

/// Jacobi levels `0..=depth` by repeated coefficient stripping.
///
/// Needs `order ≥ 2(depth + 1)`. A vanishing `γ_j` ends the fraction, which is
/// only consistent when every deeper Boolean cumulant vanishes too.
pub fn jacobi_from_moments<R: Coeff>(mf: &MomentFunctional<R>, depth: usize) -> Result<JacobiParams<R>> {
    if mf.order() < 2 * (depth + 1) {
        return Err(Error::BadParam(format!(
            "Jacobi depth {depth} needs order {}, functional has order {}",
            2 * (depth + 1),
            mf.order()
        )));
    }
    let mut betas = Vec::new();
    let mut gammas = Vec::new();
    let mut cur = mf.clone();
    for level in 0..=depth {
        let eta = transforms::eta_from_moments(&cur);
        let (b, g) = (eta.coeff(1).clone(), eta.coeff(2).clone());
        betas.push(b);
        gammas.push(g.clone());
        if g.is_zero() {
            if eta.tail()[2..].iter().any(|c| !c.is_zero()) {
                return Err(Error::NoJacobiRepresentation { level });
            }
            return JacobiParams::new(betas, gammas, JacobiTail::Terminated);
        }
        if level < depth {
            cur = strip_eta(&eta, &g)?;
        }
    }
    JacobiParams::new(betas, gammas, JacobiTail::Open)
}

/// Deepest Jacobi parameters the moments determine.
pub fn jacobi_all<R: Coeff>(mf: &MomentFunctional<R>) -> Result<JacobiParams<R>> {
    let depth = (mf.order() / 2).checked_sub(1).ok_or(Error::BadParam("order below 2".into()))?;
    jacobi_from_moments(mf, depth)
}

/// `m_k = η_{k+2} / γ`.
pub(crate) fn strip_eta<R: Coeff>(eta: &Series<R>, gamma: &R) -> Result<MomentFunctional<R>> {
    let m = eta.coeffs()[3..]
        .iter()
        .map(|c| c.try_div(gamma).ok_or(Error::NotDivisible("variance")))
        .collect::<Result<Vec<_>>>()?;
    Ok(MomentFunctional::new(m))
}

/// Jacobi pattern of a named family; parameter counts are checked.
pub fn family_jacobi<R: Coeff>(name: &str, params: &[R]) -> Result<JacobiParams<R>> {
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::BadParam(format!("family `{name}` takes {n} parameters, got {}", params.len())))
        }
    };
    let meixner = |b: &R, c: &R, beta: &R, gamma: &R| JacobiParams {
        betas: vec![beta.clone()],
        gammas: vec![gamma.clone()],
        tail: JacobiTail::Constant { beta: b.add(beta), gamma: c.add(gamma) },
    };
    let z = R::zero();
    match name {
        "free_meixner" => {
            arity(4)?;
            Ok(meixner(&params[0], &params[1], &params[2], &params[3]))
        }
        "semicircular" => {
            arity(2)?;
            Ok(meixner(&z, &z, &params[0], &params[1]))
        }
        "point_mass" => {
            arity(1)?;
            JacobiParams::terminated(vec![params[0].clone()], vec![])
        }
        "bernoulli_sym" => {
            arity(0)?;
            Ok(meixner(&z, &R::from_int(-1), &z, &R::one()))
        }
        "arcsine" => {
            arity(1)?;
            let g = &params[0];
            Ok(meixner(&z, &g.neg(), &z, &g.add(g)))
        }
        "free_poisson" => {
            arity(3)?;
            Ok(meixner(&params[0], &z, &params[1], &params[2]))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Moments of a named family to order `N`.
pub fn family<R: Coeff>(name: &str, params: &[R], order: usize) -> Result<MomentFunctional<R>> {
    if order == 0 {
        return Err(Error::BadParam("order must be at least 1".into()));
    }
    moments_from_jacobi(&family_jacobi(name, params)?, order)
}

/// Free Meixner `μ_{b,c,β,γ}`.
pub fn free_meixner<R: Coeff>(b: &R, c: &R, beta: &R, gamma: &R, order: usize) -> MomentFunctional<R> {
    family("free_meixner", &[b.clone(), c.clone(), beta.clone(), gamma.clone()], order).expect("constant tail")
}

/// Semicircular `σ_{β,γ}`.
pub fn semicircular<R: Coeff>(beta: &R, gamma: &R, order: usize) -> MomentFunctional<R> {
    free_meixner(&R::zero(), &R::zero(), beta, gamma, order)
}

/// `½(δ_{-1} + δ_1)`.
pub fn bernoulli_sym<R: Coeff>(order: usize) -> MomentFunctional<R> {
    free_meixner(&R::zero(), &R::from_int(-1), &R::zero(), &R::one(), order)
}

pub fn mean_var<R: Coeff>(mf: &MomentFunctional<R>) -> (R, R) {
    mf.mean_var()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::series::{int, rat};

    type Q = Rational;

    fn mf(xs: &[i64]) -> MomentFunctional<Q> {
        MomentFunctional::new(xs.iter().map(|&x| int(x)).collect())
    }

    fn jac(b: &[i64], g: &[i64], tail: JacobiTail<Q>) -> JacobiParams<Q> {
        JacobiParams::new(b.iter().map(|&x| int(x)).collect(), g.iter().map(|&x| int(x)).collect(), tail).unwrap()
    }

    #[test]
    fn point_mass_from_jacobi() {
        let j = JacobiParams::terminated(vec![int(3)], vec![]).unwrap();
        assert_eq!(moments_from_jacobi(&j, 4).unwrap(), mf(&[3, 9, 27, 81]));
    }

    #[test]
    fn semicircle_and_arcsine_from_jacobi() {
        let sc = jac(&[], &[], JacobiTail::Constant { beta: int(0), gamma: int(1) });
        let m = moments_from_jacobi(&sc, 6).unwrap();
        let kappa: Vec<Q> = (1..=6).map(|n| int(i64::from(n == 2))).collect();
        assert_eq!(m, oracle::moments_from_free_cumulants(&kappa, &int(1), 6).unwrap());

        let arc = jac(&[0], &[2], JacobiTail::Constant { beta: int(0), gamma: int(1) });
        let m = moments_from_jacobi(&arc, 6).unwrap();
        assert_eq!(m, mf(&[0, 2, 0, 6, 0, 20]));
        // Bernoulli has κ = (0, 1, 0, -1, 0, 2); doubling them gives the arcsine law
        let b = oracle::free_cumulants_oracle(&bernoulli_sym::<Q>(6)).unwrap();
        let doubled: Vec<Q> = b.iter().map(|c| c * int(2)).collect();
        assert_eq!(oracle::moments_from_free_cumulants(&doubled, &int(1), 6).unwrap(), m);
    }

    #[test]
    fn depth_error() {
        let j = jac(&[0, 0], &[1, 1], JacobiTail::Open);
        assert!(moments_from_jacobi(&j, 4).is_ok());
        assert!(matches!(moments_from_jacobi(&j, 6), Err(Error::JacobiDepth { .. })));
    }

    #[test]
    fn jacobi_of_bernoulli_terminates() {
        let j = jacobi_from_moments(&mf(&[0, 1, 0, 1]), 1).unwrap();
        assert_eq!(j, jac(&[0, 0], &[1, 0], JacobiTail::Terminated));
        assert_eq!(moments_from_jacobi(&j, 4).unwrap(), mf(&[0, 1, 0, 1]));
    }

    #[test]
    fn no_jacobi_representation() {
        assert_eq!(jacobi_from_moments(&mf(&[0, 0, 0, 1]), 1), Err(Error::NoJacobiRepresentation { level: 0 }));
    }

    #[test]
    fn meixner_jacobi_display() {
        let (b, c, beta, gamma) = (rat(1, 2), int(-3), int(2), rat(5, 3));
        let m = free_meixner(&b, &c, &beta, &gamma, 12);
        let j = jacobi_from_moments(&m, 5).unwrap();
        let bb = &b + &beta;
        let cc = &c + &gamma;
        let mut betas = vec![beta.clone()];
        let mut gammas = vec![gamma.clone()];
        betas.extend(std::iter::repeat_n(bb, 5));
        gammas.extend(std::iter::repeat_n(cc, 5));
        assert_eq!(j, JacobiParams::new(betas, gammas, JacobiTail::Open).unwrap());
    }

    #[test]
    fn family_examples() {
        assert_eq!(family::<Q>("semicircular", &[int(0), int(1)], 6).unwrap(), mf(&[0, 1, 0, 2, 0, 5]));
        assert_eq!(family::<Q>("bernoulli_sym", &[], 6).unwrap(), mf(&[0, 1, 0, 1, 0, 1]));
        assert_eq!(family::<Q>("free_meixner", &[int(0), int(1), int(0), int(1)], 4).unwrap(), mf(&[0, 1, 0, 3]));
        assert_eq!(family::<Q>("arcsine", &[int(1)], 4).unwrap(), mf(&[0, 2, 0, 6]));
        assert_eq!(family::<Q>("point_mass", &[int(2)], 3).unwrap(), mf(&[2, 4, 8]));
        // free Poisson with rate 1, jump 1: Narayana sums 1, 2, 5, 14
        assert_eq!(family::<Q>("free_poisson", &[int(1), int(1), int(1)], 4).unwrap(), mf(&[1, 2, 5, 14]));
        assert_eq!(family::<Q>("gauss", &[], 4), Err(Error::UnknownFamily("gauss".into())));
        assert!(matches!(family::<Q>("arcsine", &[], 4), Err(Error::BadParam(_))));
    }

    #[test]
    fn mean_var_examples() {
        assert_eq!(mean_var(&MomentFunctional::point_mass(&int(3), 4)), (int(3), int(0)));
        let s = semicircular(&rat(1, 3), &int(4), 4);
        assert_eq!(mean_var(&s), (rat(1, 3), int(4)));
        assert_eq!(mean_var(&bernoulli_sym::<Q>(2)), (int(0), int(1)));
        let m = free_meixner(&int(5), &rat(-1, 2), &int(0), &int(1), 4);
        assert_eq!(mean_var(&m), (int(0), int(1)));
    }

    #[test]
    fn negative_gamma_round_trip() {
        let j = jac(&[1, -2, 0, 3], &[-1, 2, -5, 7], JacobiTail::Open);
        let m = moments_from_jacobi(&j, 8).unwrap();
        assert_eq!(jacobi_from_moments(&m, 3).unwrap(), j);
    }

    #[test]
    fn shifts() {
        let j = jac(&[1, 2], &[3, 4], JacobiTail::Open);
        let r = j.right_shift();
        assert_eq!(r, jac(&[0, 1, 2], &[1, 3, 4], JacobiTail::Open));
        assert_eq!(r.left_shift().unwrap(), j);
        let pm = JacobiParams::terminated(vec![int(0)], vec![]).unwrap();
        assert!(pm.left_shift().is_none());
    }

    #[test]
    fn triple_invariant() {
        assert_eq!(CanonicalTriple::<Q>::new(int(0), int(1), None), Err(Error::MalformedTriple));
        assert_eq!(
            CanonicalTriple::new(int(0), int(0), Some(MomentFunctional::<Q>::delta0(3))),
            Err(Error::MalformedTriple)
        );
        assert!(CanonicalTriple::new(int(0), int(1), Some(MomentFunctional::<Q>::delta0(3))).is_ok());
    }
}
