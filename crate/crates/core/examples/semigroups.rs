//! Free convolution semigroups from canonical triples and two-state semigroups
//! built from a relative triple, as polynomials in t.

use freecalc::evolution::{maassen_semigroup, strip, triple_from_semigroup, two_state_semigroup};
use freecalc::functional::{bernoulli_sym, jacobi_all, CanonicalTriple, MomentFunctional};
use freecalc::series::{int, Coeff, Poly, Rational};

fn main() {
    type P = Poly<Rational>;
    let c = |q: i64| P::constant(int(q));
    let t = P::var();
    let sigma = MomentFunctional::<P>::delta0(6);
    let base = CanonicalTriple::new(c(1), c(2), Some(sigma)).unwrap();
    let mu_t = maassen_semigroup(&base, &t, 8);
    println!("mu_t moments:");
    for (k, m) in mu_t.moments().iter().enumerate() {
        println!("  m_{} = {m}", k + 1);
    }
    let mu_1 = maassen_semigroup(&base.map(|p| p.coeff(0).clone()), &Rational::one(), 8);
    println!("recovered triple at t = 1: beta {}, gamma {}", triple_from_semigroup(&mu_1).unwrap().beta, triple_from_semigroup(&mu_1).unwrap().gamma);

    let rel = CanonicalTriple::new(c(0), c(1), Some(bernoulli_sym(6))).unwrap();
    let pair = two_state_semigroup(&rel, &base, &t, 8).unwrap();
    println!("J of the first component: {}", jacobi_all(&pair.tilde).unwrap());
    println!("J[first component] moments: {}", strip(&pair.tilde).unwrap());
}
