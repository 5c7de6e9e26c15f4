//! Identity checks for the multivariate transforms.

use super::{
    nc_boolean_power, nc_bp, nc_eta, nc_free_convolve, nc_free_power, nc_from_series, nc_maassen_two_state_r, nc_phi,
    nc_r, nc_subordination, nc_subordination_inverse, nc_tilde_from_two_state_r, nc_two_state_r, right_subs, subst,
    NCFunctional, NCSeries, Word,
};
use crate::convolution::{boolean_convolve, free_convolve, free_power};
use crate::error::{Error, Result};
use crate::evolution::catalog::{jacobi_checks, Inputs, Params};
use crate::evolution::{bp, maassen_semigroup, phi_map, strip, subordination, subordination_inverse};
use crate::functional::{free_meixner, semicircular, CanonicalTriple, JacobiParams, JacobiTail, MomentFunctional};
use crate::report::{Check, Report, Residual};
use crate::series::{Coeff, Poly, Rational};
use crate::transforms::{eta_from_moments, r_from_moments, two_state_r, TwoStatePair};

type Q = Rational;
type P = Poly<Q>;

/// Entries with their default alphabet size.
pub const NC_CATALOG: &[(&str, usize, &str)] = &[
    ("composition", 2, "1 + M^{mu ⊞ nu} = (1 + M^{mu ⊳ nu})(1 + M^nu(z_i(1 + M^{mu ⊳ nu})))"),
    ("final-prop", 2, "mu~_t = delta_{t beta~} ⊎ Phi[rho~ ⊞ tau^{⊞t}]^{⊎ gamma~ t} with mu = tau ⊳ rho~"),
    ("recover-tau", 1, "tau = inverse subordination of mu by rho~ for the two-state free Meixner semigroup"),
    ("reduction", 1, "one-letter transforms agree with the single-variable ones"),
];

/// Runs one multivariate entry; `d` defaults per [`NC_CATALOG`].
pub fn nc_verify(name: &str, d: Option<usize>, params: &Params, order: usize) -> Result<Report> {
    let default_d = NC_CATALOG
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, d, _)| *d)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    let d = d.unwrap_or(default_d);
    if d == 0 || d > 9 {
        return Err(Error::BadParam("d must be between 1 and 9".into()));
    }
    if order < 4 {
        return Err(Error::BadParam("verification needs order at least 4".into()));
    }
    if (name == "recover-tau" || name == "reduction") && d != 1 {
        return Err(Error::BadParam(format!("{name} runs with d = 1")));
    }
    let mut inp = Inputs::new(params, name);
    let mut report = match name {
        "composition" => composition(&mut inp, d, order)?,
        "final-prop" => final_prop(&mut inp, d, order)?,
        "recover-tau" => recover_tau(&mut inp, order)?,
        _ => reduction(&mut inp, order)?,
    };
    inp.check_unused()?;
    report.name = format!("nc {name} (d = {d})");
    let mut notes = inp.report(name, order).notes;
    notes.append(&mut report.notes);
    report.notes = notes;
    Ok(report)
}

fn diff<R: Coeff>(a: impl Iterator<Item = (Word, R)>, b: impl Fn(&Word) -> R) -> Vec<String> {
    a.filter_map(|(w, x)| {
        let y = b(&w);
        let dlt = x.sub(&y);
        (!dlt.is_zero()).then(|| format!("[{w}]: {x} vs {y} (difference {dlt})"))
    })
    .collect()
}

fn all_words(d: usize, order: usize) -> impl Iterator<Item = Word> {
    std::iter::once(Word::empty()).chain(Word::all(d, order))
}

impl<R: Coeff> Residual for NCSeries<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        let n = self.order().min(other.order());
        let mut out = diff(all_words(self.d(), n).map(|w| (w.clone(), self.coeff(&w))), |w| other.coeff(w));
        if self.d() != other.d() {
            out.push(format!("alphabet sizes {} vs {}", self.d(), other.d()));
        }
        out
    }
    fn nonzero_terms(&self) -> Vec<String> {
        self.terms().map(|(w, c)| format!("[{w}] = {c}")).collect()
    }
}

impl<R: Coeff> Residual for NCFunctional<R> {
    fn residual(&self, other: &Self) -> Vec<String> {
        let n = self.order().min(other.order());
        let mut out = diff(Word::all(self.d(), n).into_iter().map(|w| (w.clone(), self.moment(&w))), |w| other.moment(w));
        if self.d() != other.d() {
            out.push(format!("alphabet sizes {} vs {}", self.d(), other.d()));
        }
        out
    }
    fn nonzero_terms(&self) -> Vec<String> {
        self.moments().map(|(w, c)| format!("m[{w}] = {c}")).collect()
    }
}

fn random_nc(inp: &mut Inputs, name: &str, d: usize, order: usize) -> NCFunctional<Q> {
    let words = Word::all(d, order);
    let m: Vec<(Word, Q)> = words.into_iter().map(|w| (w, inp.sampler().rational())).collect();
    let f = NCFunctional::new(d, order, m).expect("words in range");
    inp.record(format!("{name} = {f}"));
    f
}

fn composition(inp: &mut Inputs, d: usize, n: usize) -> Result<Report> {
    let mu = random_nc(inp, "mu", d, n);
    let nu = random_nc(inp, "nu", d, n);
    let mut r = Report::new("", n);
    let lambda = nc_subordination(&mu, &nu);
    let sum = nc_free_convolve(&mu, &nu).m_series();
    let (ml, mn) = (lambda.m_series(), nu.m_series());
    let one = NCSeries::one(d, n);
    let lhs = one.add(&sum);
    let rhs = one.add(&ml).mul(&one.add(&subst(&mn, &right_subs(&ml))));
    r.push(Check::compare("1 + M^{mu ⊞ nu} = (1 + M^{mu ⊳ nu})(1 + M^nu(z_i(1 + M^{mu ⊳ nu})))", &lhs, &rhs));
    r.push(Check::compare("inverse subordination recovers mu", &nc_subordination_inverse(&lambda, &nu), &mu));
    let beta: Vec<Q> = (0..d).map(|_| inp.sampler().rational()).collect();
    let delta = NCFunctional::delta(&beta, n);
    r.push(Check::compare("delta_a ⊳ mu = delta_a", &nc_subordination(&delta, &mu), &delta));
    r.push(Check::compare("mu ⊳ delta_0 = mu", &nc_subordination(&mu, &NCFunctional::delta0(d, n)), &mu));
    r.push(Check::compare("mu ⊳ mu = B[mu]", &nc_subordination(&mu, &mu), &nc_bp(&mu)));
    Ok(r)
}

/// `μ̃_t` from its two-state R-transform, and `δ_{tβ̃} ⊎ Φ[ρ̃ ⊞ τ^{⊞t}]^{⊎γ̃t}`.
fn final_prop_sides(
    beta: &[Q],
    gamma: &Q,
    rho: &NCFunctional<Q>,
    tau: &NCFunctional<Q>,
    n: usize,
) -> (NCFunctional<P>, NCFunctional<P>, NCFunctional<P>) {
    let up = |f: &NCFunctional<Q>| f.map(|c| P::constant(c.clone()));
    let t = P::var();
    let beta_p: Vec<P> = beta.iter().map(|b| P::constant(b.clone())).collect();
    let gamma_p = P::constant(gamma.clone());
    let (rho_p, tau_p) = (up(rho), up(tau));
    let mu = nc_subordination(&tau_p, &rho_p.truncate(n));
    let mu_t = nc_free_power(&mu, &t);
    let rt = nc_maassen_two_state_r(&beta_p, &gamma_p, &rho_p.truncate(n - 2), &t, n);
    let tilde = nc_tilde_from_two_state_r(&rt, &mu_t);
    let inner = nc_free_convolve(&rho_p.truncate(n - 2), &nc_free_power(&tau_p.truncate(n - 2), &t));
    let tb: Vec<P> = beta_p.iter().map(|b| b.mul(&t)).collect();
    let rhs = super::nc_boolean_convolve(&NCFunctional::delta(&tb, n), &nc_boolean_power(&nc_phi(&inner), &gamma_p.mul(&t)));
    (tilde, rhs, mu_t)
}

fn final_prop(inp: &mut Inputs, d: usize, n: usize) -> Result<Report> {
    let rho = random_nc(inp, "rho_tilde", d, n);
    let tau = random_nc(inp, "tau", d, n);
    let beta: Vec<Q> = (0..d).map(|i| inp.q(&format!("beta_tilde{}", i + 1))).collect::<Result<_>>()?;
    let gamma = inp.nonzero("gamma_tilde")?;
    let mut r = Report::new("", n);
    let (tilde, rhs, mu_t) = final_prop_sides(&beta, &gamma, &rho, &tau, n);
    r.push(Check::compare("mu~_t = delta_{t beta~} ⊎ Phi[rho~ ⊞ tau^{⊞t}]^{⊎ gamma~ t} (formal t)", &tilde, &rhs));
    let t = P::var();
    let up = |f: &NCFunctional<Q>| f.map(|c| P::constant(c.clone()));
    let lhs = nc_subordination(&nc_free_power(&up(&tau), &t), &up(&rho));
    r.push(Check::compare("mu_t = tau^{⊞t} ⊳ rho~", &mu_t, &lhs));
    Ok(r)
}

fn recover_tau(inp: &mut Inputs, n: usize) -> Result<Report> {
    let b_t = inp.q("b_tilde")?;
    let c_t = inp.nonzero("c_tilde")?;
    let b = inp.q("b")?;
    let c = inp.q("c")?;
    let beta = inp.q("beta")?;
    let gamma = inp.nonzero("gamma")?;
    let beta_t = inp.q("beta_tilde")?;
    let gamma_t = inp.nonzero("gamma_tilde")?;
    let mut r = Report::new("", n);

    let base = CanonicalTriple { beta: beta.clone(), gamma: gamma.clone(), rho: Some(semicircular(&b, &c, n)) };
    let mu = maassen_semigroup(&base, &Q::one(), n);
    let rho_tilde = free_meixner(&(&b - &b_t), &(&c - &c_t), &b_t, &c_t, n);
    let tau_nc = nc_subordination_inverse(&NCFunctional::from_single(&mu), &NCFunctional::from_single(&rho_tilde));
    let tau = tau_nc.to_single()?;
    let display = JacobiParams::new(
        vec![beta.clone()],
        vec![gamma.clone()],
        JacobiTail::Constant { beta: &(&beta + &b) - &b_t, gamma: &(&gamma + &c) - &c_t },
    )?;
    jacobi_checks(&mut r, "J(tau) = (beta, beta+b-b~, ...; gamma, gamma+c-c~, ...)", &tau, &display)?;
    r.push(Check::compare("tau ⊳ rho~ = mu", &subordination(&tau, &rho_tilde), &mu));
    let u = &b_t - &(&beta * &c_t / &gamma);
    let omega = free_convolve(&MomentFunctional::point_mass(&-&u, n), &rho_tilde);
    r.push(Check::compare("tau = omega^{⊞gamma/c~}", &tau, &free_power(&omega, &(&gamma / &c_t))));

    // the two-state semigroup of (β̃, γ̃, ρ̃) over μ_t, built at d = 1
    let (tilde, rhs, _) = final_prop_sides(&[beta_t], &gamma_t, &NCFunctional::from_single(&rho_tilde), &tau_nc, n);
    r.push(Check::compare("mu~_t = delta_{t beta~} ⊎ Phi[rho~ ⊞ tau^{⊞t}]^{⊎ gamma~ t}", &tilde, &rhs));
    let t = P::var();
    let stripped = strip(&tilde.to_single()?)?;
    let lift = |m: &MomentFunctional<Q>| m.map(|c| P::constant(c.clone()));
    let expected = free_convolve(&lift(&rho_tilde.truncate(n - 2)), &free_power(&lift(&tau.truncate(n - 2)), &t));
    r.push(Check::compare("J[mu~_t] = rho~ ⊞ tau^{⊞t}", &stripped, &expected));
    let cp = |q: &Q| P::constant(q.clone());
    let j_strip = JacobiParams::new(
        vec![cp(&b_t).add(&cp(&beta).mul(&t))],
        vec![cp(&c_t).add(&cp(&gamma).mul(&t))],
        JacobiTail::Constant { beta: cp(&b).add(&cp(&beta).mul(&t)), gamma: cp(&c).add(&cp(&gamma).mul(&t)) },
    )?;
    jacobi_checks(&mut r, "J(J[mu~_t]) = (b~+beta t, b+beta t, ...; c~+gamma t, c+gamma t, ...)", &stripped, &j_strip)?;
    Ok(r)
}

fn reduction(inp: &mut Inputs, n: usize) -> Result<Report> {
    let a = inp.mf("mu", n)?;
    let b = inp.mf("nu", n)?;
    let mut r = Report::new("", n);
    let (na, nb) = (NCFunctional::from_single(&a), NCFunctional::from_single(&b));
    let single = |f: NCFunctional<Q>| f.to_single().expect("one letter");
    r.push(Check::compare("R-transform", &nc_r(&na), &nc_from_series(&r_from_moments(&a))));
    r.push(Check::compare("eta-transform", &nc_eta(&na), &nc_from_series(&eta_from_moments(&a))));
    let pair = TwoStatePair::new(a.clone(), b.clone())?;
    r.push(Check::compare("two-state R-transform", &nc_two_state_r(&na, &nb), &nc_from_series(&two_state_r(&pair))));
    r.push(Check::compare("free convolution", &single(nc_free_convolve(&na, &nb)), &free_convolve(&a, &b)));
    r.push(Check::compare("Boolean convolution", &single(super::nc_boolean_convolve(&na, &nb)), &boolean_convolve(&a, &b)));
    r.push(Check::compare("Bercovici-Pata", &single(nc_bp(&na)), &bp(&a)));
    r.push(Check::compare("subordination", &single(nc_subordination(&na, &nb)), &subordination(&a, &b)));
    r.push(Check::compare("inverse subordination", &single(nc_subordination_inverse(&na, &nb)), &subordination_inverse(&a, &b)));
    let small = a.truncate(n - 2);
    r.push(Check::compare("Phi", &single(nc_phi(&NCFunctional::from_single(&small))), &phi_map(&small)?));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    #[test]
    fn entries_verify() {
        for (name, _, _) in NC_CATALOG {
            let rep = nc_verify(name, None, &Params::with_seed(2), 6).unwrap();
            assert!(rep.verified(), "{rep}");
        }
        let rep = nc_verify("composition", Some(3), &Params::with_seed(4), 5).unwrap();
        assert!(rep.verified(), "{rep}");
    }

    #[test]
    fn recover_tau_meixner() {
        let p = Params::with_seed(0)
            .scalar("b_tilde", int(1))
            .scalar("c_tilde", int(2))
            .scalar("b", int(0))
            .scalar("c", int(1))
            .scalar("beta", int(3))
            .scalar("gamma", int(1))
            .scalar("beta_tilde", int(0))
            .scalar("gamma_tilde", int(1));
        let rep = nc_verify("recover-tau", None, &p, 8).unwrap();
        assert!(rep.verified(), "{rep}");
    }

    #[test]
    fn bad_requests() {
        assert!(matches!(nc_verify("x", None, &Params::default(), 6), Err(Error::UnknownIdentity(_))));
        assert!(matches!(nc_verify("recover-tau", Some(2), &Params::default(), 6), Err(Error::BadParam(_))));
    }
}
