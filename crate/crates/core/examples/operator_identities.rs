//! Runs the kernel-level operator identities: p_m(E) and q_m(E) applied to
//! s(0, k, a, b), and the periodic sum with period 2m + 1.
//!
//!     cargo run --example operator_identities

use binsum::exact::ratio;
use binsum::kernel::KernelParams;
use binsum::verify::{
    corollary4_left, default_params, lemma1_left, lemma2_left, verify_corollary4_grid,
    verify_lemma1, verify_lemma2,
};

fn main() {
    let p = KernelParams::from_ints(-1, 0);
    let row: Vec<String> = (-4..=4)
        .map(|k| lemma1_left(2, &p, k).to_string())
        .collect();
    println!("(E^2 - E - 1) s(0, k) for k = -4..4: {}", row.join(" "));
    let row: Vec<String> = (-4..=4)
        .map(|k| lemma2_left(3, &p, k).to_string())
        .collect();
    println!("q_3(E, -1, 0) s(0, k) for k = -4..4: {}", row.join(" "));
    let row: Vec<String> = (-3..=3)
        .map(|k| lemma2_left(0, &p, k).to_string())
        .collect();
    println!(
        "q_0(E) s(0, k) for k = -3..3 (2 at k = 0): {}",
        row.join(" ")
    );

    let odd = KernelParams::new(ratio(3, 2), ratio(-1, 3));
    let sums: Vec<String> = (-6..=6)
        .map(|k| corollary4_left(3, &odd, k).to_string())
        .collect();
    println!(
        "periodic sums for a = 3/2, b = -1/3, m = 3: {}",
        sums.join(" ")
    );

    let params = default_params();
    for report in [
        verify_lemma1(12, &params, 5),
        verify_corollary4_grid(8, &params, 30),
        verify_lemma2(12, &params, 5),
    ] {
        println!(
            "{:<11} passed={} cases={} [{}]",
            report.suite, report.passed, report.cases, report.grid
        );
    }
}
