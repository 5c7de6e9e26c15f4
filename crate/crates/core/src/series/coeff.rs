//! Exact coefficient rings.
//!
//! Two instances matter in practice: [`Rational`] (arbitrary precision ℚ) and
//! [`Poly<Rational>`], polynomials in a formal parameter `t`. Because `Poly` is
//! generic over its own coefficients, `Poly<Poly<Rational>>` gives two formal
//! parameters when a check needs them.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Build a rational from a small numerator/denominator pair.
///
/// Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A commutative ring with exact arithmetic.
///
/// `try_div` is exact division: it returns `None` unless `self = q * rhs` for some `q`
/// in the ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Canonical embedding ℚ → R.
    fn from_rational(q: &Rational) -> Self;
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    /// `Some(q)` when the element is a constant of the base field.
    fn as_rational(&self) -> Option<Rational>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Nesting depth of formal parameters (0 for ℚ).
    fn depth() -> usize;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn depth() -> usize {
        0
    }
}

/// Dense univariate polynomial with coefficients in `R`, lowest degree first.
///
/// Never stores trailing zeros, so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The formal parameter itself.
    pub fn var() -> Self {
        Poly { coeffs: vec![R::zero(), R::one()] }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from_int(k as i64)))
                .collect(),
        )
    }

    fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&rhs.coeff(k))).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(Coeff::neg).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    /// Long division; succeeds only when the remainder vanishes.
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        let dd = rhs.degree()?;
        let lead = &rhs.coeffs[dd];
        let Some(nd) = self.degree() else {
            return Some(Self::zero());
        };
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.try_div(lead)?;
            for (j, c) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(c));
            }
            quot[k] = q;
        }
        if rem.iter().all(Coeff::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            self.coeff(0).as_rational()
        } else {
            None
        }
    }

    fn depth() -> usize {
        R::depth() + 1
    }
}

/// Variable names by nesting depth: `Poly<Rational>` prints in `t`, the outer
/// parameter of `Poly<Poly<Rational>>` in `s`.
fn var_name(depth: usize) -> &'static str {
    match depth {
        1 => "t",
        2 => "s",
        3 => "u",
        _ => "v",
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let var = var_name(Self::depth());
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let simple = c.as_rational().is_some();
            match (k, simple) {
                (0, _) => write!(f, "{c}")?,
                (_, true) if c.is_one() => {}
                (_, true) => write!(f, "{c}*")?,
                (_, false) => write!(f, "({c})*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rational>;

    fn p(cs: &[i64]) -> P {
        P::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn poly_trims_trailing_zeros() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 1]).sub(&p(&[0, 1])), p(&[1]));
    }

    #[test]
    fn poly_exact_division() {
        // (1 + t)(2 - t + t^2) = 2 + t + 0 t^2 + t^3
        let a = p(&[1, 1]);
        let b = p(&[2, -1, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[2, 1, 0, 1]));
        assert_eq!(prod.try_div(&a), Some(b.clone()));
        assert_eq!(prod.try_div(&b), Some(a));
        assert_eq!(p(&[1, 0, 1]).try_div(&p(&[1, 1])), None);
        assert_eq!(p(&[1]).try_div(&P::zero()), None);
        assert_eq!(P::zero().try_div(&p(&[3, 1])), Some(P::zero()));
    }

    #[test]
    fn nested_division_over_two_parameters() {
        type PP = Poly<P>;
        let s = PP::constant(P::var());
        let t = PP::var();
        let one_plus_s = PP::one().add(&s);
        let x = t.mul(&one_plus_s).add(&one_plus_s.mul(&one_plus_s));
        assert_eq!(x.try_div(&one_plus_s), Some(t.add(&one_plus_s)));
        assert_eq!(t.try_div(&one_plus_s), None);
    }

    #[test]
    fn eval_and_derivative() {
        let a = p(&[1, 0, 2]); // 1 + 2t^2
        assert_eq!(a.eval(&int(3)), int(19));
        assert_eq!(a.derivative(), p(&[0, 4]));
        assert_eq!(a.to_string(), "1 + 2*t^2");
        assert_eq!(P::var().pow(3), p(&[0, 0, 0, 1]));
    }
}
