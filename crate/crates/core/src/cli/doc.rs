//! JSON documents. Rationals are strings `"p/q"` in lowest terms (`"p"` when
//! `q = 1`); coefficients in `ℚ[t]` are arrays of such strings by ascending degree.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functional::{family, moments_from_jacobi, CanonicalTriple, JacobiParams, JacobiTail, MomentFunctional};
use crate::multivariate::{NCFunctional, NCSeries, Word};
use crate::series::{Coeff, Poly, Rational, Series};
use crate::transforms::TwoStatePair;

pub type Q = Rational;
pub type P = Poly<Q>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Rat(String),
    Poly(Vec<String>),
}

impl Value {
    pub fn parse(&self) -> Result<P> {
        match self {
            Value::Rat(s) => Ok(P::constant(parse_rational(s)?)),
            Value::Poly(v) => Ok(P::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?)),
        }
    }

    pub fn emit(p: &P) -> Self {
        match p.degree() {
            None => Value::Rat("0".into()),
            Some(0) => Value::Rat(p.coeff(0).to_string()),
            Some(_) => Value::Poly(p.coeffs().iter().map(|c| c.to_string()).collect()),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|_| Error::BadParam(format!("not a rational: `{s}`")))
}

fn parse_all(v: &[Value]) -> Result<Vec<P>> {
    v.iter().map(Value::parse).collect()
}

fn emit_all(v: &[P]) -> Vec<Value> {
    v.iter().map(Value::emit).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum TailDoc {
    Open,
    Terminated,
    Constant { beta: Value, gamma: Value },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FunctionalDoc {
    Moments { order: usize, moments: Vec<Value> },
    Jacobi { order: usize, betas: Vec<Value>, gammas: Vec<Value>, tail: TailDoc },
    Family { order: usize, name: String, params: Vec<Value> },
    Pair { order: usize, tilde: Vec<Value>, base: Vec<Value> },
    Triple { order: usize, beta: Value, gamma: Value, rho: Option<Vec<Value>> },
    /// Coefficients `c_0..c_N` of a transform series.
    Series { order: usize, name: String, coeffs: Vec<Value> },
    /// Multivariate moments keyed by one-based letters joined with commas.
    Nc { order: usize, d: usize, moments: BTreeMap<String, Value> },
    /// Multivariate transform series; the empty word is keyed `""`.
    #[serde(rename = "ncseries")]
    NcSeries { order: usize, d: usize, name: String, coeffs: BTreeMap<String, Value> },
}

impl FunctionalDoc {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadParam(format!("invalid document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn order(&self) -> usize {
        match self {
            FunctionalDoc::Moments { order, .. }
            | FunctionalDoc::Jacobi { order, .. }
            | FunctionalDoc::Family { order, .. }
            | FunctionalDoc::Pair { order, .. }
            | FunctionalDoc::Triple { order, .. }
            | FunctionalDoc::Series { order, .. }
            | FunctionalDoc::Nc { order, .. }
            | FunctionalDoc::NcSeries { order, .. } => *order,
        }
    }

    pub fn moments(mf: &MomentFunctional<P>) -> Self {
        FunctionalDoc::Moments { order: mf.order(), moments: emit_all(mf.moments()) }
    }

    pub fn jacobi(j: &JacobiParams<P>, order: usize) -> Self {
        let tail = match j.tail() {
            JacobiTail::Open => TailDoc::Open,
            JacobiTail::Terminated => TailDoc::Terminated,
            JacobiTail::Constant { beta, gamma } => TailDoc::Constant { beta: Value::emit(beta), gamma: Value::emit(gamma) },
        };
        FunctionalDoc::Jacobi { order, betas: emit_all(j.betas()), gammas: emit_all(j.gammas()), tail }
    }

    pub fn pair(p: &TwoStatePair<P>) -> Self {
        FunctionalDoc::Pair { order: p.order(), tilde: emit_all(p.tilde.moments()), base: emit_all(p.base.moments()) }
    }

    pub fn triple(t: &CanonicalTriple<P>) -> Self {
        let order = t.rho.as_ref().map_or(0, |r| r.order() + 2);
        FunctionalDoc::Triple {
            order,
            beta: Value::emit(&t.beta),
            gamma: Value::emit(&t.gamma),
            rho: t.rho.as_ref().map(|r| emit_all(r.moments())),
        }
    }

    pub fn series(name: &str, s: &Series<P>) -> Self {
        FunctionalDoc::Series { order: s.order(), name: name.to_string(), coeffs: emit_all(s.coeffs()) }
    }

    pub fn nc(f: &NCFunctional<P>) -> Self {
        let moments = f.moments().map(|(w, c)| (word_key(w), Value::emit(c))).collect();
        FunctionalDoc::Nc { order: f.order(), d: f.d(), moments }
    }

    pub fn nc_series(name: &str, s: &NCSeries<P>) -> Self {
        let coeffs = s.terms().map(|(w, c)| (word_key(w), Value::emit(c))).collect();
        FunctionalDoc::NcSeries { order: s.order(), d: s.d(), name: name.to_string(), coeffs }
    }

    /// A single functional at `order` (families and Jacobi documents are
    /// materialized; moment lists are truncated).
    pub fn to_functional(&self, order: usize) -> Result<MomentFunctional<P>> {
        match self {
            FunctionalDoc::Moments { moments, .. } => {
                let m = MomentFunctional::new(parse_all(moments)?);
                if m.order() < order {
                    return Err(Error::BadParam(format!("document has {} moments, order {order} requested", m.order())));
                }
                Ok(m.truncate(order))
            }
            FunctionalDoc::Family { name, params, .. } => family(&canonical_family(name), &parse_all(params)?, order),
            FunctionalDoc::Jacobi { .. } => moments_from_jacobi(&self.to_jacobi()?, order),
            _ => Err(Error::BadParam("expected a moments, family or jacobi document".into())),
        }
    }

    pub fn to_jacobi(&self) -> Result<JacobiParams<P>> {
        let FunctionalDoc::Jacobi { betas, gammas, tail, .. } = self else {
            return Err(Error::BadParam("expected a jacobi document".into()));
        };
        let tail = match tail {
            TailDoc::Open => JacobiTail::Open,
            TailDoc::Terminated => JacobiTail::Terminated,
            TailDoc::Constant { beta, gamma } => JacobiTail::Constant { beta: beta.parse()?, gamma: gamma.parse()? },
        };
        JacobiParams::new(parse_all(betas)?, parse_all(gammas)?, tail)
    }

    pub fn to_pair(&self, order: usize) -> Result<TwoStatePair<P>> {
        let FunctionalDoc::Pair { tilde, base, .. } = self else {
            return Err(Error::BadParam("expected a pair document".into()));
        };
        let (tilde, base) = (MomentFunctional::new(parse_all(tilde)?), MomentFunctional::new(parse_all(base)?));
        if tilde.order() < order || base.order() < order {
            return Err(Error::BadParam(format!("pair has fewer than {order} moments")));
        }
        TwoStatePair::new(tilde.truncate(order), base.truncate(order))
    }

    pub fn to_triple(&self) -> Result<CanonicalTriple<P>> {
        let FunctionalDoc::Triple { beta, gamma, rho, .. } = self else {
            return Err(Error::BadParam("expected a triple document".into()));
        };
        let rho = rho.as_ref().map(|r| parse_all(r).map(MomentFunctional::new)).transpose()?;
        CanonicalTriple::new(beta.parse()?, gamma.parse()?, rho)
    }

    pub fn to_nc(&self) -> Result<NCFunctional<P>> {
        let FunctionalDoc::Nc { order, d, moments } = self else {
            return Err(Error::BadParam("expected an nc document".into()));
        };
        let mut entries = Vec::with_capacity(moments.len());
        for (key, v) in moments {
            let letters = key
                .split(',')
                .map(|s| match s.trim().parse::<u8>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(Error::BadParam(format!("bad word `{key}`"))),
                })
                .collect::<Result<Vec<u8>>>()?;
            entries.push((Word(letters), v.parse()?));
        }
        NCFunctional::new(*d, *order, entries)
    }
}

fn word_key(w: &Word) -> String {
    let letters: Vec<String> = w.letters().iter().map(|i| (i + 1).to_string()).collect();
    letters.join(",")
}

/// Accepts the short names used on the command line.
pub fn canonical_family(name: &str) -> String {
    match name {
        "bernoulli" => "bernoulli_sym".into(),
        "semicircle" => "semicircular".into(),
        "meixner" => "free_meixner".into(),
        "poisson" => "free_poisson".into(),
        "delta" => "point_mass".into(),
        other => other.to_string(),
    }
}

/// Parameters for the short family names that take none on the command line.
pub fn default_family_params(name: &str) -> Vec<Q> {
    match name {
        "semicircular" => vec![Q::zero(), Q::one()],
        "arcsine" => vec![Q::one()],
        "point_mass" => vec![Q::zero()],
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    #[test]
    fn rational_encoding() {
        assert_eq!(Value::emit(&P::constant(rat(6, 4))), Value::Rat("3/2".into()));
        assert_eq!(Value::emit(&P::constant(int(-3))), Value::Rat("-3".into()));
        assert_eq!(Value::emit(&P::var()), Value::Poly(vec!["0".into(), "1".into()]));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn round_trip_and_unknown_fields() {
        let m = MomentFunctional::new(vec![P::constant(rat(1, 2)), P::new(vec![int(1), int(-2)])]);
        let doc = FunctionalDoc::moments(&m);
        let back = FunctionalDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_functional(2).unwrap(), m);
        assert!(FunctionalDoc::from_json(r#"{"type":"moments","order":1,"moments":["1"],"extra":1}"#).is_err());
        let tail = r#"{"type":"jacobi","order":4,"betas":[],"gammas":[],"tail":{"constant":{"beta":"0","gamma":"1"}}}"#;
        let j = FunctionalDoc::from_json(tail).unwrap();
        assert_eq!(j.to_functional(4).unwrap().moment(4), P::constant(int(2)));
    }
}
