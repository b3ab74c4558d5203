//! Builds kernel tables s(n, k, a, b) and shows how t(n, k) and v(n, k)
//! split into differences and sums of kernel entries.
//!
//!     cargo run --example kernel_table

use binsum::exact::Rational;
use binsum::kernel::{t_value, v_value, KernelParams, KernelTable};

fn show(table: &KernelTable) {
    let p = table.params();
    println!("s(n, k, {}, {})", p.a, p.b);
    let depth = table.depth() as i64;
    for row in table.rows() {
        let cells: Vec<String> = (-depth..=depth)
            .map(|k| format!("{:>5}", row.get(k).to_string()))
            .collect();
        println!(
            "  n={:<2}{}   row sum {}",
            row.n(),
            cells.join(""),
            row.sum()
        );
    }
    println!();
}

fn main() {
    show(&KernelTable::build(KernelParams::from_ints(-1, 0), 4));
    show(&KernelTable::build(KernelParams::from_ints(2, -3), 3));

    let mut minus = KernelTable::new(KernelParams::from_ints(-1, 0));
    let mut plus = KernelTable::new(KernelParams::from_ints(1, 0));
    println!(" n  k   t(n,k)  s(n,k)-s(n,k-1)   v(n,k)  s(n,k)+s(n,k-1)");
    for n in [3usize, 6] {
        for k in -2..=3i64 {
            let t_split: Rational = minus.value(n, k) - minus.value(n, k - 1);
            let v_split: Rational = plus.value(n, k) + plus.value(n, k - 1);
            println!(
                "{n:>2} {k:>2} {:>8} {:>16} {:>8} {:>16}",
                t_value(n, k),
                t_split,
                v_value(n, k),
                v_split
            );
        }
    }
}
