//! Residuals of the evolution equations for F and G of a two-state semigroup,
//! including both signs of the bracket term.

use freecalc::evolution::{cauchy_evolution_residual, pde_residual, BracketSign};
use freecalc::functional::{CanonicalTriple, MomentFunctional};
use freecalc::series::{int, rat, Coeff};

fn main() {
    let rel = CanonicalTriple::new(rat(1, 2), int(2), Some(MomentFunctional::new(vec![int(1), int(3), rat(-1, 2), int(0), int(2), int(1)]))).unwrap();
    let base = CanonicalTriple::new(int(-1), rat(1, 3), Some(MomentFunctional::new(vec![int(0), int(1), int(2), int(-1), int(0), int(4)]))).unwrap();
    let res = pde_residual(&rel, &base, 8).unwrap();
    println!("F equation residuals vanish: {} {}", res.tilde.is_zero(), res.base.is_zero());
    for sign in [BracketSign::Derived, BracketSign::Printed] {
        let r = cauchy_evolution_residual(&rel, &base, 8, sign).unwrap();
        let first = r.descending().iter().position(|c| !c.is_zero());
        println!("G equation, {sign:?} sign: zero = {}, first non-zero term z^-{first:?}", r.is_zero());
    }
}
