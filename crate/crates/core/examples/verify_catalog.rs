//! Runs every identity in the catalog with seeded random parameters and prints
//! the reports. Pass a seed as the first argument.

use freecalc::evolution::catalog::{verify, Params, CATALOG};
use freecalc::multivariate::{nc_verify, NC_CATALOG};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let params = Params::with_seed(seed);
    let mut failed = 0;
    for (name, _) in CATALOG {
        let r = verify(name, &params, 8).unwrap();
        failed += usize::from(!r.verified());
        print!("{r}");
    }
    for (name, _, _) in NC_CATALOG {
        let r = nc_verify(name, None, &params, 5).unwrap();
        failed += usize::from(!r.verified());
        print!("{r}");
    }
    println!("{failed} failed");
}
