//! Free, Boolean, monotone and two-state free convolutions and powers.

use freecalc::convolution::{boolean_convolve, boolean_power, free_convolve, free_power, monotone_convolve, two_state_convolve};
use freecalc::functional::{bernoulli_sym, family, semicircular};
use freecalc::series::{int, rat, Rational};
use freecalc::transforms::TwoStatePair;

fn main() {
    let n = 10;
    let b = bernoulli_sym::<Rational>(n);
    let s = semicircular(&int(0), &int(1), n);

    println!("Bernoulli ⊞ Bernoulli   {}", free_convolve(&b, &b));
    println!("arcsine                 {}", family("arcsine", &[int(1)], n).unwrap());
    println!("Bernoulli ▷ semicircle  {}", monotone_convolve(&b, &s));
    println!("semicircle ⊎ semicircle {}", boolean_convolve(&s, &s));
    println!("semicircle^(⊞1/2)       {}", free_power(&s, &rat(1, 2)));
    println!("Bernoulli^(⊎3)          {}", boolean_power(&b, &int(3)));

    let pair = TwoStatePair::new(b.clone(), s.clone()).unwrap();
    let sum = two_state_convolve(&pair, &pair);
    println!("(Bernoulli, sigma) ⊞_c (Bernoulli, sigma):");
    println!("  first   {}", sum.tilde);
    println!("  second  {}", sum.base);
}
