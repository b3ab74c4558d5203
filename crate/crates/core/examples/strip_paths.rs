//! Counts lattice paths confined to the strip -m-1 < y < m and compares
//! them with a(n, 2m + 1, 0).
//!
//!     cargo run --example strip_paths

use binsum::sums::a_signed;
use binsum::verify::lattice_path_count;

fn main() {
    for m in 1..=4usize {
        let counts: Vec<String> = (0..=14)
            .map(|n| lattice_path_count(n, m).to_string())
            .collect();
        let agree = (0..=24).all(|n| {
            num_bigint::BigInt::from(lattice_path_count(n, m))
                == a_signed(n as u64, 2 * m as u64 + 1, 0)
        });
        println!(
            "m = {m}: {}  (= a(n, {}, 0) for n <= 24: {agree})",
            counts.join(" "),
            2 * m + 1
        );
    }
}
