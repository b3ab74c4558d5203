use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ReportBuilder, VerificationReport};
use crate::sums::a_signed;

/// Paths from the origin with `floor(n/2)` steps `(1, 1)` and
/// `floor((n+1)/2)` steps `(1, -1)`, in any order, whose heights all stay
/// strictly inside `-m-1 < y < m`.
pub fn lattice_path_count(n: usize, m: usize) -> BigUint {
    assert!(m >= 1, "strip half-width m must be at least 1");
    let ups = n / 2;
    let downs = n.div_ceil(2);
    let inside = |u: usize, d: usize| {
        let y = u as i64 - d as i64;
        -(m as i64) - 1 < y && y < m as i64
    };
    // ways[u][d]: paths using u up-steps and d down-steps so far
    let mut ways = vec![vec![BigUint::zero(); downs + 1]; ups + 1];
    ways[0][0] = BigUint::one();
    for u in 0..=ups {
        for d in 0..=downs {
            if (u, d) == (0, 0) {
                continue;
            }
            if !inside(u, d) {
                continue;
            }
            let mut acc = BigUint::zero();
            if u > 0 {
                acc += &ways[u - 1][d];
            }
            if d > 0 {
                acc += &ways[u][d - 1];
            }
            ways[u][d] = acc;
        }
    }
    ways[ups][downs].clone()
}

/// `lattice_path_count(n, m) = a(n, 2m+1, 0)` for `n <= n_max`, `1 <= m <= m_max`.
pub fn verify_paths(n_max: usize, m_max: usize) -> VerificationReport {
    let grid = format!("0 <= n <= {n_max}, 1 <= m <= {m_max}");
    let mut report = ReportBuilder::new("paths", grid);
    for m in 1..=m_max {
        for n in 0..=n_max {
            let expected = a_signed(n as u64, 2 * m as u64 + 1, 0);
            let actual = lattice_path_count(n, m).into();
            report.check(|| format!("n={n} m={m}"), &expected, &actual);
        }
    }
    report.finish()
}
