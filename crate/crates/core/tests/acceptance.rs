//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use freecalc::cli;
use freecalc::convolution::{free_power, monotone_convolve};
use freecalc::evolution::catalog::{verify, Params};
use freecalc::evolution::{cauchy_evolution_residual, maassen_semigroup, pde_residual, subordination_inverse, BracketSign};
use freecalc::functional::{family, free_meixner, jacobi_from_moments, moments_from_jacobi, semicircular, CanonicalTriple, JacobiParams, JacobiTail, MomentFunctional};
use freecalc::multivariate::{nc_subordination_inverse, nc_verify, NCFunctional};
use freecalc::oracle::{boolean_cumulants_oracle, free_cumulants_oracle, moments_from_free_cumulants};
use freecalc::random::Sampler;
use freecalc::report::Report;
use freecalc::series::{int, Coeff, Poly, Rational};
use freecalc::transforms::{eta_from_moments, r_from_moments};

type Q = Rational;
type P = Poly<Q>;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

/// `m_n = (J^n)_{00}` for the tridiagonal matrix with `β_k` on the diagonal,
/// ones above and `γ_k` below.
fn matrix_moments(betas: &[Q], gammas: &[Q], order: usize) -> Vec<Q> {
    let size = betas.len();
    let mut row = vec![Q::zero(); size];
    row[0] = Q::one();
    let mut out = Vec::with_capacity(order);
    for _ in 0..order {
        let mut next = vec![Q::zero(); size];
        for (k, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[k] += v * &betas[k];
            if k + 1 < size {
                next[k + 1] += v * &gammas[k];
            }
            if k > 0 {
                next[k - 1] += v.clone();
            }
        }
        row = next;
        out.push(row[0].clone());
    }
    out
}

fn constant_levels(first: (&Q, &Q), rest: (&Q, &Q), size: usize) -> (Vec<Q>, Vec<Q>) {
    let mut betas = vec![first.0.clone()];
    let mut gammas = vec![first.1.clone()];
    betas.resize(size, rest.0.clone());
    gammas.resize(size, rest.1.clone());
    (betas, gammas)
}

fn catalog_runs(name: &str, seeds: std::ops::Range<u64>, order: usize, extra: impl Fn(Params) -> Params) -> Result<Vec<Report>, String> {
    seeds
        .map(|s| verify(name, &extra(Params::with_seed(s)), order).map_err(|e| format!("{name} seed {s}: {e}")))
        .collect()
}

fn failures(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.verified())
        .map(|r| {
            let bad: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.label.as_str()).collect();
            format!("{}: {}", r.name, bad.join("; "))
        })
        .collect()
}

fn summarize(reports: Result<Vec<Report>, String>, what: &str) -> Outcome {
    match reports {
        Err(e) => fail(e),
        Ok(rs) => {
            let bad = failures(&rs);
            let checks: usize = rs.iter().map(|r| r.checks.len()).sum();
            if bad.is_empty() {
                pass(format!("{what}: {} instances, {checks} checks", rs.len()))
            } else {
                fail(bad.join(" | "))
            }
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(101);
    for i in 0..50 {
        let mu = s.functional(10);
        let (Ok(kf), Ok(kb)) = (free_cumulants_oracle(&mu), boolean_cumulants_oracle(&mu)) else {
            return fail("oracle failed");
        };
        if r_from_moments(&mu).tail() != kf.as_slice() {
            return fail(format!("free cumulants differ on instance {i}: {mu}"));
        }
        if eta_from_moments(&mu).tail() != kb.as_slice() {
            return fail(format!("Boolean cumulants differ on instance {i}: {mu}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return fail(format!("took {elapsed:?}"));
    }
    pass(format!("50 functionals, order 10, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut s = Sampler::new(202);
    let mut negative = 0;
    for i in 0..50 {
        let betas: Vec<Q> = (0..7).map(|_| s.rational()).collect();
        let gammas: Vec<Q> = (0..7).map(|_| s.nonzero()).collect();
        negative += gammas[..6].iter().filter(|g| **g < Q::zero()).count();
        let j = JacobiParams::new(betas[..6].to_vec(), gammas[..6].to_vec(), JacobiTail::Open).unwrap();
        let Ok(m) = moments_from_jacobi(&j, 12) else { return fail(format!("instance {i}: moments failed")) };
        if m.moments() != matrix_moments(&betas, &gammas, 12).as_slice() {
            return fail(format!("instance {i}: moments differ from the matrix oracle"));
        }
        match jacobi_from_moments(&m, 5) {
            Ok(back) if back.betas() == &betas[..6] && back.gammas() == &gammas[..6] => {}
            _ => return fail(format!("instance {i}: Jacobi parameters not recovered")),
        }
        // and from arbitrary quasi-definite moments
        let mu = loop {
            let mu = s.functional(12);
            if jacobi_from_moments(&mu, 5).is_ok_and(|j| j.gammas().len() == 6 && j.gammas().iter().all(|g| !g.is_zero())) {
                break mu;
            }
        };
        let back = jacobi_from_moments(&mu, 5).and_then(|j| moments_from_jacobi(&j, 12));
        if back.as_ref() != Ok(&mu) {
            return fail(format!("instance {i}: moments {mu} not recovered"));
        }
    }
    if negative == 0 {
        return fail("no negative gamma drawn");
    }
    for i in 0..10 {
        let (b, c, beta, gamma) = loop {
            let q = (s.rational(), s.rational(), s.rational(), s.nonzero());
            if !(&q.1 + &q.3).is_zero() {
                break q;
            }
        };
        let m = free_meixner(&b, &c, &beta, &gamma, 12);
        let (betas, gammas) = constant_levels((&beta, &gamma), (&(&b + &beta), &(&c + &gamma)), 7);
        if m.moments() != matrix_moments(&betas, &gammas, 12).as_slice() {
            return fail(format!("Meixner {i}: moments differ from the matrix oracle"));
        }
        match jacobi_from_moments(&m, 5) {
            Ok(j) if j.betas() == &betas[..6] && j.gammas() == &gammas[..6] => {}
            _ => return fail(format!("Meixner {i}: display not reproduced")),
        }
    }
    pass(format!("50 round trips at depth 6 ({negative} negative gammas), 10 free Meixner displays"))
}

fn criterion_3() -> Outcome {
    let zero = |p: Params, s: u64| if s.is_multiple_of(4) { p.scalar("gamma", Q::zero()) } else { p };
    let runs: Result<Vec<Report>, String> =
        (0..20).map(|s| verify("free-evolution", &zero(Params::with_seed(s), s), 10).map_err(|e| e.to_string())).collect();
    if let Ok(rs) = &runs {
        let zeros = rs.iter().filter(|r| r.notes.iter().any(|n| n.starts_with("gamma = 0"))).count();
        if zeros == 0 {
            return fail("gamma = 0 branch not exercised");
        }
    }
    summarize(runs, "20 triples with formal t, order 10, 5 with gamma = 0")
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for name in ["bn-mean", "monotone-lemma", "prop-equiv-b"] {
        let o = summarize(catalog_runs(name, 0..20, 10, |p| p), name);
        if !o.ok {
            return o;
        }
        parts.push(o.detail);
    }
    // independent of the catalog: route A against the Maassen semigroup
    let mut s = Sampler::new(404);
    for i in 0..20 {
        let base = s.triple_any(8);
        let t = P::var();
        let lift = |tr: &CanonicalTriple<Q>| CanonicalTriple { beta: P::constant(tr.beta.clone()), gamma: P::constant(tr.gamma.clone()), rho: tr.rho.as_ref().map(|r| r.map(|c| P::constant(c.clone()))) };
        let mu_t = maassen_semigroup(&lift(&base), &t, 10);
        let kappa = r_from_moments(&maassen_semigroup(&base, &Q::one(), 10)).tail().iter().map(|c| P::constant(c.clone())).collect::<Vec<_>>();
        if moments_from_free_cumulants(&kappa, &t, 10).as_ref() != Ok(&mu_t) {
            return fail(format!("Maassen semigroup {i} is not the free power of its time-1 law"));
        }
    }
    parts.push("20 Maassen semigroups against the partition oracle".into());
    pass(parts.join(", "))
}

fn criterion_5() -> Outcome {
    let runs = catalog_runs("thm-b", 0..4, 10, |p| p);
    if let Ok(rs) = &runs {
        let pairs = rs.iter().flat_map(|r| &r.checks).filter(|c| c.label.starts_with("semigroup law at s =")).count();
        if pairs < 10 * rs.len() {
            return fail(format!("only {pairs} rational (s, t) pairs checked"));
        }
    }
    summarize(runs, "4 random (omega, rho~, p), formal s, t and 5 rational pairs each, order 10")
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for name in ["meixner-subord", "meixner-monotone", "meixner-semigroup"] {
        let o = summarize(catalog_runs(name, 0..5, 12, |p| p), name);
        if !o.ok {
            return o;
        }
        parts.push(o.detail);
    }
    // central binomials for the arcsine law
    let bern = family("bernoulli_sym", &[], 12).unwrap();
    let sc = semicircular(&Q::zero(), &Q::one(), 12);
    let arcsine: Vec<Q> = (1..=12)
        .map(|n| if n % 2 == 1 { Q::zero() } else { (0..n / 2).fold(Q::one(), |acc, k| acc * int((n - k) as i64) / int((k + 1) as i64)) })
        .collect();
    if monotone_convolve(&bern, &sc).moments() != arcsine.as_slice() {
        return fail("Bernoulli ▷ Semicircle is not (0, 2, 0, 6, 0, 20, ...)");
    }
    // μ_{b,c}^{⊞2} from doubled free cumulants
    let mut s = Sampler::new(606);
    for _ in 0..5 {
        let (b, c) = (s.rational(), s.rational());
        let m = free_meixner(&b, &c, &Q::zero(), &Q::one(), 12);
        let lhs = monotone_convolve(&m, &free_meixner(&b, &(&c + &Q::one()), &Q::zero(), &Q::one(), 12));
        let kappa = free_cumulants_oracle(&m).unwrap();
        if moments_from_free_cumulants(&kappa, &int(2), 12).as_ref() != Ok(&lhs) || free_power(&m, &int(2)) != lhs {
            return fail(format!("mu_(b,c) ▷ mu_(b,c+1) != mu_(b,c)^(⊞2) for b = {b}, c = {c}"));
        }
    }
    parts.push("Bernoulli ▷ Semicircle = Arcsine and 5 monotone squares against the oracle".into());
    pass(parts.join(", "))
}

fn criterion_7() -> Outcome {
    for name in ["pde", "cauchy-evolution"] {
        let runs = catalog_runs(name, 0..10, 8, |p| p);
        if let Ok(rs) = &runs {
            if name == "pde" && !rs.iter().all(|r| r.notes.iter().any(|n| n.starts_with("bracket sign"))) {
                return fail("sign resolution missing from the report");
            }
        }
        let o = summarize(runs, name);
        if !o.ok {
            return o;
        }
    }
    let mut s = Sampler::new(707);
    let mut printed_nonzero = 0;
    for i in 0..10 {
        let (rel, base) = (s.triple(6), s.triple(6));
        let Ok(res) = pde_residual(&rel, &base, 8) else { return fail(format!("instance {i}: residual failed")) };
        if !res.tilde.is_zero() || !res.base.is_zero() {
            return fail(format!("instance {i}: F residual non-zero"));
        }
        match cauchy_evolution_residual(&rel, &base, 8, BracketSign::Derived) {
            Ok(r) if r.is_zero() => {}
            _ => return fail(format!("instance {i}: G residual non-zero")),
        }
        if cauchy_evolution_residual(&rel, &base, 8, BracketSign::Printed).map(|r| !r.is_zero()).unwrap_or(false) {
            printed_nonzero += 1;
        }
    }
    pass(format!("10 triple-pairs, order 8, zero residuals; the other bracket sign fails on {printed_nonzero}/10 and is noted in the report"))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for name in ["composition", "final-prop"] {
        let runs: Result<Vec<Report>, String> = (0..10).map(|s| nc_verify(name, Some(2), &Params::with_seed(s), 6).map_err(|e| e.to_string())).collect();
        let o = summarize(runs, &format!("{name} at d = 2, N = 6"));
        if !o.ok {
            return o;
        }
        parts.push(o.detail);
    }
    for name in ["reduction", "recover-tau"] {
        let runs: Result<Vec<Report>, String> = (0..10).map(|s| nc_verify(name, Some(1), &Params::with_seed(s), 8).map_err(|e| e.to_string())).collect();
        let o = summarize(runs, name);
        if !o.ok {
            return o;
        }
        parts.push(o.detail);
    }
    // J(tau) against the matrix oracle, with tau from the multivariate path
    let mut s = Sampler::new(808);
    for i in 0..10 {
        let (b_t, c_t, b, c, beta, gamma) = (s.rational(), s.nonzero(), s.rational(), s.rational(), s.rational(), s.nonzero());
        let base = CanonicalTriple { beta: beta.clone(), gamma: gamma.clone(), rho: Some(semicircular(&b, &c, 10)) };
        let mu = maassen_semigroup(&base, &Q::one(), 10);
        let rho_tilde = free_meixner(&(&b - &b_t), &(&c - &c_t), &b_t, &c_t, 10);
        let tau = nc_subordination_inverse(&NCFunctional::from_single(&mu), &NCFunctional::from_single(&rho_tilde)).to_single().unwrap();
        let (betas, gammas) = constant_levels((&beta, &gamma), (&(&(&beta + &b) - &b_t), &(&(&gamma + &c) - &c_t)), 6);
        if tau.moments() != matrix_moments(&betas, &gammas, 10).as_slice() || subordination_inverse(&mu, &rho_tilde) != tau {
            return fail(format!("instance {i}: J(tau) display not reproduced"));
        }
    }
    parts.push("J(tau) display for 10 parameter sets".into());
    pass(parts.join(", "))
}

fn criterion_9() -> Outcome {
    let o = summarize(catalog_runs("counterexample-r", 0..1, 10, |p| p), "symbolic series");
    if !o.ok {
        return o;
    }
    // κ_{2k+2} = (-1)^k C_k ε^{2k+2}
    let eps = P::var();
    let moments: Vec<P> = (1..=10).map(|n| if n % 2 == 1 { P::zero() } else { eps.pow(n as u32) }).collect();
    let kappa = free_cumulants_oracle(&MomentFunctional::new(moments)).unwrap();
    let mut catalan = Q::one();
    for k in 0..5usize {
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        let expected = eps.pow((2 * k + 2) as u32).scale(&(&sign * &catalan));
        if !kappa[2 * k].is_zero() || kappa[2 * k + 1] != expected {
            return fail(format!("cumulant {} is {}", 2 * k + 2, kappa[2 * k + 1]));
        }
        catalan = catalan * int(2 * (2 * k as i64 + 1)) / int(k as i64 + 2);
    }
    pass(format!("{}, and the partition oracle in formal epsilon", o.detail))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(["freecalc", "verify", "all"], &mut out, &mut err);
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out);
    if code != 0 {
        return fail(format!("exit {code}: {}", String::from_utf8_lossy(&err)));
    }
    if elapsed > Duration::from_secs(120) {
        return fail(format!("took {elapsed:?}"));
    }
    if !text.contains("\"verified\": true") {
        return fail("output does not report verified");
    }
    pass(format!("exit 0 in {elapsed:.2?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("transform/oracle equivalence", criterion_1),
        ("Jacobi calculus", criterion_2),
        ("free evolution of a canonical triple", criterion_3),
        ("Belinschi-Nica mean, monotone lemma, two-state construction", criterion_4),
        ("two-state free evolution semigroup law", criterion_5),
        ("free Meixner suite", criterion_6),
        ("evolution equations for F and G", criterion_7),
        ("multivariate identities", criterion_8),
        ("counterexample series", criterion_9),
        ("verify all", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        failed += usize::from(!o.ok);
        println!("criterion {:2} {} {name} ({:.1?}): {}", i + 1, if o.ok { "PASS" } else { "FAIL" }, start.elapsed(), o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
