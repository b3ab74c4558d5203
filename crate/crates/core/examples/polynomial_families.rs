//! The operator polynomials p_m, q_m and the Fibonacci / Lucas families,
//! with their closed forms.
//!
//!     cargo run --example polynomial_families

use binsum::exact::{int, ratio};
use binsum::polyfam::{
    fib_poly, fib_poly_closed, lucas_poly, lucas_poly_closed, p_poly, pretty_bivariate, q_poly,
    specialize_s,
};

fn main() {
    let (a, b) = (int(-1), int(0));
    println!("a = {a}, b = {b}");
    for m in 0..=5 {
        println!(
            "  p_{m} = {:<28} q_{m} = {}",
            p_poly(m, &a, &b).to_string(),
            q_poly(m, &a, &b)
        );
    }

    let (a, b) = (ratio(1, 2), int(3));
    println!("\na = {a}, b = {b}");
    for m in 0..=3 {
        println!("  p_{m} = {}", p_poly(m, &a, &b));
    }

    println!("\nclosed forms in x and s");
    for n in 1..=6 {
        println!(
            "  F_{n} = {:<32} L_{n} = {}",
            pretty_bivariate(&fib_poly_closed(n)),
            pretty_bivariate(&lucas_poly_closed(n))
        );
    }

    let s = int(-1);
    println!("\nat s = -1, closed form against recurrence");
    for n in 1..=6 {
        let same = specialize_s(&fib_poly_closed(n), &s) == fib_poly(n, &s)
            && specialize_s(&lucas_poly_closed(n), &s) == lucas_poly(n, &s);
        println!(
            "  n={n}: F = {}, L = {}, agree: {same}",
            fib_poly(n, &s),
            lucas_poly(n, &s)
        );
    }

    let one = int(1);
    let fib: Vec<String> = (0..12)
        .map(|n| fib_poly(n, &one).eval(&one).to_string())
        .collect();
    let lucas: Vec<String> = (0..12)
        .map(|n| lucas_poly(n, &one).eval(&one).to_string())
        .collect();
    println!("\nF_n(1, 1): {}", fib.join(", "));
    println!("L_n(1, 1): {}", lucas.join(", "));
}
