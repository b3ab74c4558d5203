//! a(n, 5, k) is F_{n+1}, F_n, 0 or a negated copy depending on k mod 10.
//!
//!     cargo run --example schur_classes

use binsum::sums::{a_signed, schur_classify, SchurFormula};

fn main() {
    for k in 0..10 {
        let class = schur_classify(k);
        let form = match class.formula {
            SchurFormula::NextFibonacci => "F_{n+1}".to_string(),
            SchurFormula::Fibonacci => "F_n".to_string(),
            SchurFormula::Zero => "0".to_string(),
            SchurFormula::NegatedShift { base_residue } => {
                format!("-a(n, 5, k') with k' = {base_residue} mod 10")
            }
        };
        let values: Vec<String> = (0..10).map(|n| a_signed(n, 5, k).to_string()).collect();
        let ok = (0..=60).all(|n| a_signed(n, 5, k) == class.value(n));
        println!(
            "k = {k}: {form:<32} {}  matches n <= 60: {ok}",
            values.join(" ")
        );
    }
    println!("\na(60, 5, 0) = {}", a_signed(60, 5, 0));
}
