//! The maps Φ, 𝒥 (coefficient stripping), 𝔅, 𝔅_t and the subordination
//! distribution, with a formal time parameter where it applies.

use freecalc::evolution::{belinschi_nica, bp, bp_inverse, phi_map, strip, subordination, subordination_inverse};
use freecalc::functional::{bernoulli_sym, free_meixner, jacobi_all, semicircular};
use freecalc::series::{int, Poly, Rational};

fn main() {
    let b = bernoulli_sym::<Rational>(8);
    let phi = phi_map(&b).unwrap();
    println!("Phi[Bernoulli]      {} with Jacobi {}", phi, jacobi_all(&phi).unwrap());
    println!("J[Phi[Bernoulli]]   {}", strip(&phi).unwrap());
    println!("B[Bernoulli]        {}", bp(&b));
    assert_eq!(bp_inverse(&bp(&b)), b);

    // B_t on a free Meixner law, t formal
    let p = |q: i64| Poly::constant(int(q));
    let m = free_meixner(&p(0), &p(1), &p(1), &p(2), 8);
    let t = Poly::var();
    let bt = belinschi_nica(&m, &t).unwrap();
    println!("B_t[mu_(0,1,1,2)]    Jacobi {}", jacobi_all(&bt).unwrap());

    let s = semicircular(&int(0), &int(1), 8);
    let lam = subordination(&b, &s);
    println!("Bernoulli ⊳ sigma   {lam}");
    assert_eq!(subordination_inverse(&lam, &s), b);
    println!("strip of delta_0: {:?}", strip(&freecalc::functional::MomentFunctional::<Rational>::delta0(4)).unwrap_err());
}
