//! Evaluates a(n, m, k, z) symbolically and at rational z, and shows the
//! shift law a(n, m, k + m, z) = z a(n, m, k, z).
//!
//!     cargo run --example binomial_sums

use binsum::exact::{int, ratio, LaurentPoly};
use binsum::sums::{a_signed, a_symbolic, a_value, j_support, SumSpec};

fn main() {
    for (n, m, k) in [(0, 1, 0), (1, 1, 0), (4, 3, 1), (6, 4, -2)] {
        println!(
            "a({n}, {m}, {k}, z) = {}    (j in {:?})",
            a_symbolic(n, m, k),
            j_support(n, m, k)
        );
    }

    let spec = SumSpec::numeric(7, 3, 2, ratio(-3, 2)).expect("valid");
    println!("\na(7, 3, 2, -3/2) = {}", a_value(&spec));
    println!(
        "same via evaluation: {}",
        a_symbolic(7, 3, 2).eval(&ratio(-3, 2)).expect("z != 0")
    );

    let (n, m, k) = (5, 3, 1);
    let lhs = a_symbolic(n, m, k + m as i64);
    let rhs = &LaurentPoly::z() * &a_symbolic(n, m, k);
    println!("\na({n}, {m}, {}, z) = {lhs}", k + m as i64);
    println!("z * a({n}, {m}, {k}, z) = {rhs}");
    println!("shift law holds: {}", lhs == rhs);

    println!(
        "\na(n, 4, 0) at z = -1: {:?}",
        (0..12)
            .map(|n| a_signed(n, 4, 0).to_string())
            .collect::<Vec<_>>()
    );
    match SumSpec::numeric(1, 5, 0, int(0)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("z = 0 rejected: {e}"),
    }
}
