use num_bigint::BigInt;
use proptest::prelude::*;

use freecalc::convolution::{boolean_convolve, free_convolve, free_power, monotone_convolve};
use freecalc::evolution::{bp, bp_inverse, phi_map, strip, subordination, subordination_inverse};
use freecalc::functional::{jacobi_from_moments, moments_from_jacobi, MomentFunctional};
use freecalc::series::{Coeff, Rational};
use freecalc::transforms::{eta_from_moments, moments_from_eta, moments_from_r, r_from_moments};

type Q = Rational;

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Q::new(BigInt::from(p), BigInt::from(q)))
}

fn functional(order: usize) -> impl Strategy<Value = MomentFunctional<Q>> {
    prop::collection::vec(rational(), order).prop_map(MomentFunctional::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transforms_invert(mu in functional(8)) {
        prop_assert_eq!(moments_from_r(&r_from_moments(&mu), 8), mu.clone());
        prop_assert_eq!(moments_from_eta(&eta_from_moments(&mu), 8), mu);
    }

    #[test]
    fn free_and_boolean_commute(a in functional(7), b in functional(7)) {
        prop_assert_eq!(free_convolve(&a, &b), free_convolve(&b, &a));
        prop_assert_eq!(boolean_convolve(&a, &b), boolean_convolve(&b, &a));
    }

    #[test]
    fn monotone_is_associative(a in functional(6), b in functional(6), c in functional(6)) {
        prop_assert_eq!(monotone_convolve(&monotone_convolve(&a, &b), &c), monotone_convolve(&a, &monotone_convolve(&b, &c)));
    }

    #[test]
    fn free_powers_add(mu in functional(7), s in rational(), t in rational()) {
        let lhs = free_convolve(&free_power(&mu, &s), &free_power(&mu, &t));
        prop_assert_eq!(lhs, free_power(&mu, &(&s + &t)));
    }

    #[test]
    fn bercovici_pata_inverts(mu in functional(8)) {
        prop_assert_eq!(bp_inverse(&bp(&mu)), mu);
    }

    #[test]
    fn subordination_inverts(mu in functional(7), nu in functional(7)) {
        prop_assert_eq!(subordination_inverse(&subordination(&mu, &nu), &nu), mu.clone());
        // ν ▷ (μ ⊳ ν) = μ ⊞ ν
        prop_assert_eq!(monotone_convolve(&nu, &subordination(&mu, &nu)), free_convolve(&mu, &nu));
    }

    #[test]
    fn strip_undoes_phi(mu in functional(6)) {
        prop_assert_eq!(strip(&phi_map(&mu).unwrap()).unwrap(), mu);
    }

    #[test]
    fn jacobi_round_trip(mu in functional(8)) {
        if let Ok(j) = jacobi_from_moments(&mu, 3) {
            if j.gammas().len() == 4 && j.gammas().iter().all(|g| !g.is_zero()) {
                prop_assert_eq!(moments_from_jacobi(&j, 8).unwrap(), mu);
            }
        }
    }
}
