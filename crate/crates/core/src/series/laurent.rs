//! Expansions at infinity, `a z + c_0 + c_1/z + ... + c_N/z^N + O(z^{-N-1})`.
//!
//! F-transforms have `a = 1`; Voiculescu transforms and Cauchy transforms have
//! `a = 0`. Higher positive powers of `z` are not representable.

use std::fmt;

use super::coeff::{Coeff, Poly};
use super::trunc::Series;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct InfLaurent<R> {
    top: R,
    // desc[k] is the coefficient of z^{-k}, k = 0..=order
    desc: Vec<R>,
}

impl<R: Coeff> InfLaurent<R> {
    /// From the `z` coefficient and `c_0..c_N`.
    ///
    /// Panics on an empty descending list.
    pub fn new(top: R, desc: Vec<R>) -> Self {
        assert!(!desc.is_empty(), "an expansion at infinity needs its constant term");
        InfLaurent { top, desc }
    }

    /// A series with no `z` term, given as a power series in `w = 1/z`.
    pub fn from_series_in_inverse(s: &Series<R>) -> Self {
        InfLaurent { top: R::zero(), desc: s.coeffs().to_vec() }
    }

    /// `z + c_0 + ...` from its descending coefficients.
    pub fn monic(desc: Vec<R>) -> Self {
        Self::new(R::one(), desc)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut desc = vec![R::zero(); order + 1];
        desc[0] = c;
        InfLaurent { top: R::zero(), desc }
    }

    /// The identity `z`, exact at every order.
    pub fn identity(order: usize) -> Self {
        InfLaurent { top: R::one(), desc: vec![R::zero(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.desc.len() - 1
    }

    /// Coefficient of `z`.
    pub fn top(&self) -> &R {
        &self.top
    }

    /// Coefficient of `z^{-k}`.
    pub fn coeff(&self, k: usize) -> &R {
        assert!(k <= self.order(), "coefficient of z^-{k} unknown beyond order {}", self.order());
        &self.desc[k]
    }

    pub fn descending(&self) -> &[R] {
        &self.desc
    }

    /// The descending part `c_0 + c_1 w + ...` as a power series in `w = 1/z`.
    pub fn descending_series(&self) -> Series<R> {
        Series::new(self.desc.clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        InfLaurent { top: self.top.clone(), desc: self.desc[..=order.min(self.order())].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.desc.iter().all(Coeff::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        InfLaurent {
            top: self.top.add(&rhs.top),
            desc: (0..=n).map(|k| self.desc[k].add(&rhs.desc[k])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(Coeff::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Product of two expansions without `z` terms.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if !self.top.is_zero() || !rhs.top.is_zero() {
            return Err(Error::LaurentProduct);
        }
        let p = self.descending_series().mul(&rhs.descending_series());
        Ok(Self::from_series_in_inverse(&p))
    }

    /// Multiplicative inverse, when the result again has no power of `z` above one.
    ///
    /// Inverting `z + ...` gains two orders; inverting `c/z + ...` loses two.
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.top.is_zero() {
            // z (top + c_0 w + c_1 w^2 + ...)
            let mut inner = vec![self.top.clone()];
            inner.extend(self.desc.iter().cloned());
            let inv = Series::new(inner).reciprocal()?;
            let mut desc = vec![R::zero()];
            desc.extend(inv.coeffs().iter().cloned());
            return Ok(InfLaurent { top: R::zero(), desc });
        }
        if !self.desc[0].is_zero() {
            let inv = self.descending_series().reciprocal()?;
            return Ok(Self::from_series_in_inverse(&inv));
        }
        if self.order() >= 1 && !self.desc[1].is_zero() {
            // w (c_1 + c_2 w + ...)
            let inv = Series::new(self.desc[1..].to_vec()).reciprocal()?;
            let c = inv.coeffs();
            return Ok(InfLaurent { top: c[0].clone(), desc: c[1..].to_vec() });
        }
        Err(Error::NotInvertible)
    }

    /// Formal substitution `self(inner(z))` for `self` without a `z` term and
    /// `inner = z + c_0 + O(1/z)`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !self.top.is_zero() || !inner.top.is_one() {
            return Err(Error::LaurentDomain);
        }
        // 1/inner = w (1 + c_0 w + c_1 w^2 + ...)^{-1}, valuation one in w
        let mut bracket = vec![R::one()];
        bracket.extend(inner.desc.iter().cloned());
        let recip = Series::new(bracket).reciprocal()?.shift_up(1);
        let out = self.descending_series().compose(&recip)?;
        Ok(Self::from_series_in_inverse(&out))
    }

    /// `∂_z`; the known order grows by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut desc = Vec::with_capacity(n + 2);
        desc.push(self.top.clone());
        desc.push(R::zero());
        for k in 2..=n + 1 {
            desc.push(self.desc[k - 1].mul(&R::from_int(-((k - 1) as i64))));
        }
        InfLaurent { top: R::zero(), desc }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> InfLaurent<S> {
        InfLaurent { top: f(&self.top), desc: self.desc.iter().map(f).collect() }
    }
}

impl<R: Coeff> InfLaurent<Poly<R>> {
    /// Termwise `∂_t`.
    pub fn t_derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    pub fn eval_param(&self, x: &R) -> InfLaurent<R> {
        self.map(|c| c.eval(x))
    }
}

impl<R: Coeff> fmt::Display for InfLaurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |f: &mut fmt::Formatter<'_>, c: &R| {
            if c.as_rational().is_some() {
                write!(f, "{c}")
            } else {
                write!(f, "({c})")
            }
        };
        let mut first = true;
        if !self.top.is_zero() {
            if !self.top.is_one() {
                term(f, &self.top)?;
                write!(f, "*")?;
            }
            write!(f, "z")?;
            first = false;
        }
        for (k, c) in self.desc.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            term(f, c)?;
            match k {
                0 => {}
                1 => write!(f, "/z")?,
                _ => write!(f, "/z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^-{})", self.order() + 1)
    }
}
