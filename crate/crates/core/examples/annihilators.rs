//! Applies the annihilating operators to the binomial sums, including the
//! symbolic eigenvalue z + 1/z.
//!
//!     cargo run --example annihilators

use binsum::exact::{int, LaurentPoly, Rational};
use binsum::polyfam::{fib_poly, lucas_poly};
use binsum::sums::{a_signed, a_symbolic};
use binsum::verify::{
    apply_shift_poly, theorem3_operator, verify_theorem1, verify_theorem2, verify_theorem3,
};

fn main() {
    let s = int(-1);
    let m = 3;
    let op = &fib_poly(m + 1, &s) - &fib_poly(m, &s);
    let seq = |n: usize| Rational::from_integer(a_signed(n as u64, 2 * m as u64 + 1, 2));
    let applied: Vec<String> = (0..8)
        .map(|n| apply_shift_poly(&op, &seq, n).to_string())
        .collect();
    println!("({op}) a(n, 7, 2) for n = 0..8: {}", applied.join(" "));

    let op = lucas_poly(2, &s);
    let seq = |n: usize| Rational::from_integer(a_signed(n as u64, 4, 0));
    let applied: Vec<String> = (0..8)
        .map(|n| apply_shift_poly(&op, &seq, n).to_string())
        .collect();
    println!("({op}) a(n, 4, 0) for n = 0..8: {}", applied.join(" "));

    let op = theorem3_operator(2);
    let seq = |n: usize| a_symbolic(n as u64, 2, 1);
    println!("\noperator with Laurent coefficients: {op}");
    for n in 0..4 {
        let value: LaurentPoly = apply_shift_poly(&op, &seq, n);
        println!(
            "  n={n}: a(n, 2, 1, z) = {:<40} result = {value}",
            seq(n).to_string()
        );
    }

    for report in [
        verify_theorem1(8, 40, -20..=20),
        verify_theorem2(8, 40, -20..=20),
        verify_theorem3(6, 30, -12..=12),
    ] {
        println!(
            "{:<5} passed={} cases={} [{}]",
            report.suite, report.passed, report.cases, report.grid
        );
    }
}
