//! Truncated power series `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`.
//!
//! The order `N` is the highest degree known exactly. Binary operations return
//! the minimum of the operand orders and never pad with zeros.

use std::fmt;

use super::coeff::{Coeff, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R> {
    // degrees 0..=order, never empty
    coeffs: Vec<R>,
}

impl<R: Coeff> Series<R> {
    /// Series from `c_0..c_N`; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        Series { coeffs }
    }

    /// Series with zero constant term from `c_1..c_N`.
    pub fn from_tail(tail: Vec<R>) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(R::zero());
        coeffs.extend(tail);
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `z`.
    pub fn var(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn monomial(c: R, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^k`.
    ///
    /// Panics when `k` exceeds the order, since that coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &R {
        assert!(k <= self.order(), "coefficient of z^{k} unknown beyond order {}", self.order());
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `c_1..c_N`.
    pub fn tail(&self) -> &[R] {
        &self.coeffs[1..]
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Lowest degree with a non-zero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(Coeff::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series { coeffs: out }
    }

    /// Multiply by `z^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divide by `z^k`, requiring the first `k` coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible("power of z"));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = R::one().try_div(&self.coeffs[0]).ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Series { coeffs: out })
    }

    /// `self ∘ inner`, where `inner` has zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        // Horner in the truncated ring
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse `b` with `self ∘ b = b ∘ self = z`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::CompositionDomain);
        }
        let inv1 = R::one().try_div(&self.coeffs[1]).ok_or(Error::NonInvertibleComposition)?;
        let n = self.order();
        // self = c_1 z + h(z); solve b = (z - h(b)) / c_1, one new coefficient per pass
        let mut h = self.clone();
        h.coeffs[1] = R::zero();
        let z = Series::var(n);
        let mut b = z.scale(&inv1);
        for _ in 1..n {
            b = z.sub(&h.compose(&b)?).scale(&inv1);
        }
        Ok(b)
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Coeff> Series<Poly<R>> {
    /// Termwise `∂_t` on coefficients in a polynomial ring.
    pub fn t_derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    /// Specialize the formal parameter to a value.
    pub fn eval_param(&self, x: &R) -> Series<R> {
        self.map(|c| c.eval(x))
    }
}

impl Series<Rational> {
    /// Embed into `ℚ[t]` as constants.
    pub fn to_poly(&self) -> Series<Poly<Rational>> {
        self.map(|c| Poly::constant(c.clone()))
    }
}

impl<R: Coeff> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let simple = |c: &R| c.as_rational().is_some();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if simple(c) {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
            }
            match k {
                0 => {}
                1 => write!(f, "*z")?,
                _ => write!(f, "*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::coeff::{int, rat};

    type S = Series<Rational>;

    fn s(cs: &[i64]) -> S {
        S::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn add_and_mul_examples() {
        // z + z^2
        assert_eq!(s(&[0, 1, 0]).add(&s(&[0, 0, 1])), s(&[0, 1, 1]));
        // (z + z^2) z = z^2 + z^3
        assert_eq!(s(&[0, 1, 1, 0]).mul(&s(&[0, 1, 0, 0])), s(&[0, 0, 1, 1]));
        // (z - z^3)(z + z^3) = z^2 at order 4
        assert_eq!(s(&[0, 1, 0, -1, 0]).mul(&s(&[0, 1, 0, 1, 0])), s(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn mixed_orders_take_minimum() {
        let a = s(&[1, 1, 1, 1, 1, 1]);
        let b = s(&[1, 2, 3]);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.compose(&s(&[0, 1, 1])).unwrap().order(), 2);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, 1, 0, 0]).reciprocal().unwrap(), s(&[1, -1, 1, -1]));
        assert_eq!(s(&[1]).reciprocal().unwrap(), s(&[1]));
        let a = s(&[1, 0, 1, 0, 0, 0, 0]);
        let inv = a.reciprocal().unwrap();
        assert_eq!(inv, s(&[1, 0, -1, 0, 1, 0, -1]));
        assert_eq!(a.mul(&inv), S::one(6));
        assert_eq!(s(&[0, 1]).reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn compose_examples() {
        let sample = s(&[0, 3, -1, 2, 5]);
        assert_eq!(S::var(4).compose(&sample).unwrap(), sample);
        // z^2 ∘ (z + z^2) = z^2 + 2z^3 + z^4
        assert_eq!(s(&[0, 0, 1, 0, 0]).compose(&s(&[0, 1, 1, 0, 0])).unwrap(), s(&[0, 0, 1, 2, 1]));
        assert_eq!(s(&[0, 1]).compose(&s(&[1, 1])), Err(Error::CompositionDomain));
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(S::var(5).reversion().unwrap(), S::var(5));
        let a = s(&[0, 1, 1, 0, 0]);
        let b = a.reversion().unwrap();
        assert_eq!(b, s(&[0, 1, -1, 2, -5]));
        assert_eq!(a.compose(&b).unwrap(), S::var(4));
        assert_eq!(b.compose(&a).unwrap(), S::var(4));
        let two_z = s(&[0, 2, 0]);
        assert_eq!(two_z.reversion().unwrap(), S::new(vec![int(0), rat(1, 2), int(0)]));
        assert_eq!(s(&[0, 0, 1]).reversion(), Err(Error::NonInvertibleComposition));
    }

    #[test]
    fn t_derivative_example() {
        // ∂_t (t^2 z + t) = 2t z + 1
        let t = Poly::<Rational>::var();
        let a = Series::new(vec![t.clone(), t.mul(&t)]);
        let d = a.t_derivative();
        assert_eq!(d, Series::new(vec![Poly::one(), t.scale(&int(2))]));
    }

    #[test]
    fn shifts() {
        let a = s(&[0, 0, 3, 4]);
        assert_eq!(a.shift_down(2).unwrap(), s(&[3, 4]));
        assert!(a.shift_down(3).is_err());
        assert_eq!(s(&[3, 4]).shift_up(2), a);
    }
}
