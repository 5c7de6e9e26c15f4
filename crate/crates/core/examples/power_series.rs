//! Truncated power series over ℚ and ℚ[t]: products, composition, reversion,
//! and Laurent expansions at infinity.

use freecalc::series::{int, rat, Coeff, InfLaurent, Poly, Series};

fn main() {
    let n = 8;
    // 1/(1 - z) and its square
    let geom = Series::new((0..=n).map(|_| int(1)).collect::<Vec<_>>()).mul(&Series::one(n));
    println!("1/(1-z)      = {}", show(geom.coeffs()));
    println!("1/(1-z)^2    = {}", show(geom.mul(&geom).coeffs()));

    // z/(1 - z) reverts to z/(1 + z)
    let f = geom.shift_up(1).truncate(n);
    let g = f.reversion().unwrap();
    println!("reversion    = {}", show(g.coeffs()));
    println!("f(g(z))      = {}", show(f.compose(&g).unwrap().coeffs()));

    // coefficients in ℚ[t]: exp-like series with a formal parameter
    let t = Poly::<freecalc::series::Rational>::var();
    let s = Series::new(vec![Poly::one(), t.clone(), t.mul(&t).scale(&rat(1, 2))]);
    println!("series in t  = {}", show(s.coeffs()));
    println!("d/dt         = {}", show(s.t_derivative().coeffs()));

    // F(z) = z - 1/z has reciprocal G(z) = 1/z + 1/z^3 + 2/z^5 + ...
    let f = InfLaurent::new(int(1), vec![int(0), int(-1), int(0), int(0), int(0), int(0)]);
    let g = f.reciprocal().unwrap();
    println!("1/(z - 1/z)  = {}", show(g.descending()));
}

fn show<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
