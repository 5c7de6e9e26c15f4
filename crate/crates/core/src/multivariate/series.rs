use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::series::Coeff;

/// A word `u(1)…u(k)` over letters `0..d`, displayed one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u8) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words of length `1..=order` over `d` letters, shortest first.
    pub fn all(d: usize, order: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut layer = vec![Word::empty()];
        for _ in 0..order {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| (0..d as u8).map(move |i| w.concat(&Word::letter(i))))
                .collect();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

// shortest first, then lexicographic
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &i in &self.0 {
            write!(f, "z{}", i + 1)?;
        }
        Ok(())
    }
}

/// Non-commutative power series in `z_1..z_d`, truncated at word length `order`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NCSeries<R> {
    d: usize,
    order: usize,
    coeffs: BTreeMap<Word, R>,
}

impl<R: Coeff> NCSeries<R> {
    pub fn zero(d: usize, order: usize) -> Self {
        NCSeries { d, order, coeffs: BTreeMap::new() }
    }

    pub fn one(d: usize, order: usize) -> Self {
        Self::constant(R::one(), d, order)
    }

    pub fn constant(c: R, d: usize, order: usize) -> Self {
        let mut s = Self::zero(d, order);
        s.set(Word::empty(), c);
        s
    }

    /// The variable `z_{i+1}`.
    pub fn var(i: u8, d: usize, order: usize) -> Self {
        let mut s = Self::zero(d, order);
        s.set(Word::letter(i), R::one());
        s
    }

    pub fn from_map(d: usize, order: usize, coeffs: impl IntoIterator<Item = (Word, R)>) -> Self {
        let mut s = Self::zero(d, order);
        for (w, c) in coeffs {
            if w.len() <= order {
                s.set(w, c);
            }
        }
        s
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, w: &Word) -> R {
        self.coeffs.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.coeffs.iter()
    }

    pub fn set(&mut self, w: Word, c: R) {
        assert!(w.len() <= self.order && w.letters().iter().all(|&i| (i as usize) < self.d), "word {w} out of range");
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    fn accumulate(&mut self, w: Word, c: R) {
        if w.len() > self.order {
            return;
        }
        let sum = self.coeff(&w).add(&c);
        self.set(w, sum);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let coeffs = self.coeffs.iter().filter(|(w, _)| w.len() <= order).map(|(w, c)| (w.clone(), c.clone()));
        NCSeries { d: self.d, order, coeffs: coeffs.collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.d, other.d, "alphabet size mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.truncate(self.order.min(other.order));
        for (w, c) in &other.coeffs {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    fn map_coeffs(&self, f: impl Fn(&R) -> R) -> Self {
        NCSeries::from_map(self.d, self.order, self.coeffs.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> NCSeries<S> {
        NCSeries::from_map(self.d, self.order, self.coeffs.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.d, order);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.len() + v.len() <= order {
                    out.accumulate(u.concat(v), a.mul(b));
                }
            }
        }
        out
    }

    /// Two-sided inverse; the empty-word coefficient must be invertible.
    pub fn reciprocal(&self) -> Result<Self> {
        let c = self.coeff(&Word::empty());
        let c_inv = R::one().try_div(&c).ok_or(Error::NotInvertible)?;
        // b = c⁻¹ Σ_k (-(a - c)c⁻¹)^k
        let step = self.sub(&Self::constant(c.clone(), self.d, self.order)).scale(&c_inv.neg());
        let mut out = Self::one(self.d, self.order);
        let mut power = Self::one(self.d, self.order);
        for _ in 0..self.order {
            power = power.mul(&step);
            out = out.add(&power);
        }
        Ok(out.scale(&c_inv))
    }

    /// Replaces each letter `z_i` of every word by `subs[i]`, expanding the
    /// products in order. Each `subs[i]` must have zero constant term.
    pub fn substitute(&self, subs: &[NCSeries<R>]) -> Result<Self> {
        if subs.len() != self.d {
            return Err(Error::ShapeMismatch);
        }
        if subs.iter().any(|s| !s.coeff(&Word::empty()).is_zero()) {
            return Err(Error::CompositionDomain);
        }
        let order = subs.iter().fold(self.order, |n, s| n.min(s.order));
        let mut cache: HashMap<Word, NCSeries<R>> = HashMap::new();
        cache.insert(Word::empty(), Self::one(self.d, order));
        let mut out = Self::zero(self.d, order);
        for (w, c) in &self.coeffs {
            if w.len() > order {
                continue;
            }
            // words iterate shortest first, so every proper prefix is cached
            let prod = prefix_product(&mut cache, w, subs);
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }
}

fn prefix_product<R: Coeff>(cache: &mut HashMap<Word, NCSeries<R>>, w: &Word, subs: &[NCSeries<R>]) -> NCSeries<R> {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let (last, init) = w.letters().split_last().expect("empty word is cached");
    let head = prefix_product(cache, &Word(init.to_vec()), subs);
    let p = head.mul(&subs[*last as usize]);
    cache.insert(w.clone(), p.clone());
    p
}

impl<R: Coeff> fmt::Display for NCSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(w, c)| format!("({c}) {w}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;
    use crate::series::{int, Rational, Series};

    type S = NCSeries<Rational>;

    #[test]
    fn word_order_and_count() {
        assert_eq!(Word::all(2, 6).len(), 126);
        let w = Word::all(2, 2);
        assert_eq!(w[0], Word(vec![0]));
        assert_eq!(w[2], Word(vec![0, 0]));
        assert_eq!(Word(vec![0, 1]).to_string(), "z1z2");
    }

    #[test]
    fn product_is_noncommutative() {
        let z1 = S::var(0, 2, 4);
        let z2 = S::var(1, 2, 4);
        assert_eq!(z1.mul(&z2).coeff(&Word(vec![0, 1])), int(1));
        assert_ne!(z1.mul(&z2), z2.mul(&z1));
    }

    #[test]
    fn reciprocal() {
        let a = S::one(1, 4).add(&S::var(0, 1, 4));
        let inv = a.reciprocal().unwrap();
        for k in 0..=4 {
            assert_eq!(inv.coeff(&Word(vec![0; k])), int(if k % 2 == 0 { 1 } else { -1 }));
        }
        let mut s = Sampler::new(4);
        let m = S::from_map(2, 5, Word::all(2, 5).into_iter().map(|w| (w, s.rational())));
        let one_m = S::one(2, 5).add(&m);
        let inv = one_m.reciprocal().unwrap();
        assert_eq!(one_m.mul(&inv), S::one(2, 5));
        assert_eq!(inv.mul(&one_m), S::one(2, 5));
        assert_eq!(m.mul(&inv), inv.mul(&m));
        assert_eq!(S::zero(2, 3).reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn substitution() {
        let (z1, z2) = (S::var(0, 2, 4), S::var(1, 2, 4));
        let a = z1.mul(&z2);
        assert_eq!(a.substitute(&[z1.clone(), z2.clone()]).unwrap(), a);
        let sub = z1.mul(&S::one(2, 4).add(&z2));
        assert_eq!(z1.substitute(&[sub, z2.clone()]).unwrap(), z1.add(&z1.mul(&z2)));
        let bad = S::one(2, 4);
        assert_eq!(z1.substitute(&[bad, z2]), Err(Error::CompositionDomain));
    }

    #[test]
    fn one_letter_substitution_is_composition() {
        let mut s = Sampler::new(9);
        let a: Vec<Rational> = (0..7).map(|_| s.rational()).collect();
        let mut b: Vec<Rational> = (0..7).map(|_| s.rational()).collect();
        b[0] = int(0);
        let word = |k: usize| Word(vec![0; k]);
        let to_nc = |v: &[Rational]| S::from_map(1, 6, v.iter().enumerate().map(|(k, c)| (word(k), c.clone())));
        let composed = Series::new(a.clone()).compose(&Series::new(b.clone())).unwrap();
        let nc = to_nc(&a).substitute(&[to_nc(&b)]).unwrap();
        for k in 0..=6 {
            assert_eq!(&nc.coeff(&word(k)), composed.coeff(k));
        }
    }
}
