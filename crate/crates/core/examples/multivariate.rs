//! Functionals in two non-commuting variables: R- and η-transforms, Φ, 𝔅 and
//! the subordination distribution with its inverse.

use freecalc::multivariate::{nc_bp, nc_eta, nc_free_convolve, nc_phi, nc_r, nc_subordination, nc_subordination_inverse, NCFunctional, Word};
use freecalc::series::{int, rat, Rational};

fn main() {
    let w = |v: &[u8]| Word(v.to_vec());
    let mu = NCFunctional::<Rational>::new(2, 4, [(w(&[0]), int(1)), (w(&[0, 1]), rat(1, 2)), (w(&[1, 0]), rat(-1, 2)), (w(&[1, 1]), int(2))]).unwrap();
    let nu = NCFunctional::delta(&[int(1), int(-1)], 4);
    println!("mu            {mu}");
    println!("R^mu          {}", nc_r(&mu));
    println!("eta^mu        {}", nc_eta(&mu));
    println!("mu ⊞ nu       {}", nc_free_convolve(&mu, &nu));
    println!("B[mu]         {}", nc_bp(&mu));
    println!("Phi[delta_0]  {}", nc_phi(&NCFunctional::<Rational>::delta0(2, 2)));
    let lam = nc_subordination(&mu, &nu);
    println!("mu ⊳ nu       {lam}");
    assert_eq!(nc_subordination_inverse(&lam, &nu), mu);
}
