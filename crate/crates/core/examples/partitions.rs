//! The partition oracle: non-crossing and interval partitions, and cumulants
//! as explicit sums over them.

use freecalc::functional::family;
use freecalc::oracle::{boolean_cumulants_oracle, enumerate_interval, enumerate_nc, free_cumulants_oracle, moments_from_free_cumulants};
use freecalc::series::int;
use freecalc::transforms::{eta_from_moments, r_from_moments};

fn main() {
    for n in 1..=8 {
        println!("n = {n}: {} non-crossing, {} interval", enumerate_nc(n).unwrap().len(), enumerate_interval(n).unwrap().len());
    }
    let nc4 = enumerate_nc(4).unwrap();
    println!("non-crossing partitions of 4: {:?}", nc4.iter().map(|p| p.blocks().to_vec()).collect::<Vec<_>>());

    let mu = family("arcsine", &[int(1)], 10).unwrap();
    let kappa = free_cumulants_oracle(&mu).unwrap();
    assert_eq!(kappa, r_from_moments(&mu).tail());
    println!("arcsine free cumulants    {}", show(&kappa));
    let b = boolean_cumulants_oracle(&mu).unwrap();
    assert_eq!(b, eta_from_moments(&mu).tail());
    println!("arcsine Boolean cumulants {}", show(&b));

    // semicircle: only kappa_2 = 1
    let kappa = [int(0), int(1), int(0), int(0), int(0), int(0)];
    println!("Catalan numbers           {}", moments_from_free_cumulants(&kappa, &int(1), 6).unwrap());
}

fn show<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
