//! Moments and Jacobi parameters, in both directions, for named families and
//! for functionals that are not positive.

use freecalc::functional::{family, free_meixner, jacobi_all, jacobi_from_moments, moments_from_jacobi, JacobiParams, JacobiTail};
use freecalc::series::{int, rat};

fn main() {
    for (name, params) in [("semicircular", vec![int(0), int(1)]), ("bernoulli_sym", vec![]), ("arcsine", vec![int(1)]), ("free_poisson", vec![int(1), int(1), int(1)])] {
        let m = family(name, &params, 8).unwrap();
        println!("{name:14} {m}");
    }

    let m = free_meixner(&int(1), &rat(1, 2), &int(-2), &int(3), 12);
    let j = jacobi_from_moments(&m, 5).unwrap();
    println!("free Meixner (b, c, beta, gamma) = (1, 1/2, -2, 3): {j}");

    // negative gammas are fine: the functional is quasi-definite, not positive
    let j = JacobiParams::new(vec![int(1), int(0)], vec![int(-2), rat(1, 3)], JacobiTail::Constant { beta: int(2), gamma: int(-1) }).unwrap();
    let m = moments_from_jacobi(&j, 12).unwrap();
    println!("moments {m}");
    println!("recovered {}", jacobi_all(&m).unwrap());

    // a point mass terminates after one level
    let delta = family("point_mass", &[int(3)], 6).unwrap();
    println!("delta_3 {}", jacobi_all(&delta).unwrap());
}
