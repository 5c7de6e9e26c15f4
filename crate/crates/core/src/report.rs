//! Outcome of an identity check: labelled comparisons and their residuals.

use std::fmt;

use serde::Serialize;

use crate::functional::{JacobiParams, MomentFunctional};
use crate::series::{Coeff, InfLaurent, Series};

/// One comparison. `residual` lists every coefficient where the two sides differ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub residual: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn compare<T: Residual>(label: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Check { label: label.into(), residual: lhs.residual(rhs) }
    }

    /// A value that must vanish identically.
    pub fn zero<T: Residual>(label: impl Into<String>, value: &T) -> Self {
        Check { label: label.into(), residual: value.nonzero_terms() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub order: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: &str, order: usize) -> Self {
        Report { name: name.to_string(), order, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn verified(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.verified() { "verified" } else { "FAILED" };
        writeln!(f, "{} (order {}): {status}", self.name, self.order)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed() { "ok" } else { "FAIL" }, c.label)?;
            for r in &c.residual {
                writeln!(f, "      {r}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Coefficientwise difference, reported on the common known range.
pub trait Residual {
    fn residual(&self, other: &Self) -> Vec<String>;
    fn nonzero_terms(&self) -> Vec<String>;
}

fn diff_lists<R: Coeff>(a: &[R], b: &[R], name: impl Fn(usize) -> String) -> Vec<String> {
    a.iter()
        .zip(b)
        .enumerate()
        .filter_map(|(k, (x, y))| {
            let d = x.sub(y);
            (!d.is_zero()).then(|| format!("{}: {x} vs {y} (difference {d})", name(k)))
        })
        .collect()
}

fn nonzero<R: Coeff>(a: &[R], name: impl Fn(usize) -> String) -> Vec<String> {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{} = {c}", name(k)))
        .collect()
}

impl<R: Coeff> Residual for MomentFunctional<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        diff_lists(self.moments(), other.moments(), |k| format!("m_{}", k + 1))
    }
    fn nonzero_terms(&self) -> Vec<String> {
        nonzero(self.moments(), |k| format!("m_{}", k + 1))
    }
}

impl<R: Coeff> Residual for Series<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        diff_lists(self.coeffs(), other.coeffs(), |k| format!("[z^{k}]"))
    }
    fn nonzero_terms(&self) -> Vec<String> {
        nonzero(self.coeffs(), |k| format!("[z^{k}]"))
    }
}

impl<R: Coeff> Residual for InfLaurent<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        let mut out = diff_lists(std::slice::from_ref(self.top()), std::slice::from_ref(other.top()), |_| "[z]".into());
        out.extend(diff_lists(self.descending(), other.descending(), |k| format!("[z^-{k}]")));
        out
    }
    fn nonzero_terms(&self) -> Vec<String> {
        let mut out = nonzero(std::slice::from_ref(self.top()), |_| "[z]".into());
        out.extend(nonzero(self.descending(), |k| format!("[z^-{k}]")));
        out
    }
}

impl<R: Coeff> Residual for JacobiParams<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        let mut out = diff_lists(self.betas(), other.betas(), |k| format!("beta_{k}"));
        out.extend(diff_lists(self.gammas(), other.gammas(), |k| format!("gamma_{k}")));
        if self.betas().len() != other.betas().len() || self.is_terminated() != other.is_terminated() {
            out.push(format!("shape: {self} vs {other}"));
        }
        out
    }
    fn nonzero_terms(&self) -> Vec<String> {
        let mut out = nonzero(self.betas(), |k| format!("beta_{k}"));
        out.extend(nonzero(self.gammas(), |k| format!("gamma_{k}")));
        out
    }
}
