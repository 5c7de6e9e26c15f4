//! The transforms of one functional: moment series, free and Boolean cumulants,
//! F and G at infinity, and the Voiculescu transform computed two ways.

use freecalc::functional::family;
use freecalc::series::int;
use freecalc::transforms::{eta_from_moments, f_at_infinity, g_at_infinity, moments_from_r, phi_by_reversion, r_from_moments, voiculescu_phi};

fn main() {
    let mu = family("free_poisson", &[int(1), int(1), int(1)], 8).unwrap();
    println!("moments            {mu}");
    println!("free cumulants     {}", show(r_from_moments(&mu).tail()));
    println!("Boolean cumulants  {}", show(eta_from_moments(&mu).tail()));
    println!("F at infinity      {}", show(f_at_infinity(&mu).descending()));
    println!("G at infinity      {}", show(g_at_infinity(&mu).descending()));
    let phi = voiculescu_phi(&mu);
    assert_eq!(phi, phi_by_reversion(&mu).unwrap());
    println!("phi                {}", show(phi.descending()));
    assert_eq!(moments_from_r(&r_from_moments(&mu), 8), mu);
}

fn show<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
