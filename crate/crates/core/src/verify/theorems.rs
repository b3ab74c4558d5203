use std::ops::RangeInclusive;

use num_traits::Zero;

use super::{apply_shift_poly, ReportBuilder, VerificationReport};
use crate::exact::{ceil_div, floor_div, int, LaurentPoly, Rational, XPoly};
use crate::kernel::{KernelParams, KernelTable};
use crate::polyfam::{fib_poly, lucas_poly};
use crate::sums::{a_signed, a_symbolic, schur_classify};

fn signed_sequence(n_max: usize, modulus: u64, k: i64) -> Vec<Rational> {
    (0..=n_max)
        .map(|n| Rational::from_integer(a_signed(n as u64, modulus, k)))
        .collect()
}

/// Checks that `op(m)` annihilates `n -> values[n]` for `0 <= n <= n_max - deg`.
fn check_annihilates<R>(
    report: &mut ReportBuilder,
    op: &XPoly<R>,
    values: &[R],
    tag: impl Fn(usize) -> String,
) where
    R: crate::exact::Coefficient + std::fmt::Display,
{
    let order = op.degree().unwrap_or(0);
    let zero = R::zero();
    for n in 0..values.len().saturating_sub(order) {
        let actual = apply_shift_poly(op, &|i: usize| values[i].clone(), n);
        report.check(|| tag(n), &zero, &actual);
    }
}

/// `(F_{m+1}(E, -1) - F_m(E, -1)) a(n, 2m+1, k) = 0` for `1 <= m <= m_max`,
/// `0 <= n <= n_max - m`, `k` in range.
pub fn verify_theorem1(
    m_max: usize,
    n_max: usize,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("1 <= m <= {m_max}, 0 <= n <= {n_max} - m, k in {k_range:?}");
    let mut report = ReportBuilder::new("thm1", grid);
    let s = int(-1);
    for m in 1..=m_max {
        let op = &fib_poly(m + 1, &s) - &fib_poly(m, &s);
        let modulus = 2 * m as u64 + 1;
        for k in k_range.clone() {
            let values = signed_sequence(n_max, modulus, k);
            check_annihilates(&mut report, &op, &values, |n| format!("m={m} k={k} n={n}"));
        }
    }
    report.finish()
}

/// `L_m(E, -1) a(n, 2m, k) = 0` over the same grid shape as [`verify_theorem1`].
pub fn verify_theorem2(
    m_max: usize,
    n_max: usize,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("1 <= m <= {m_max}, 0 <= n <= {n_max} - m, k in {k_range:?}");
    let mut report = ReportBuilder::new("thm2", grid);
    let s = int(-1);
    for m in 1..=m_max {
        let op = lucas_poly(m, &s);
        let modulus = 2 * m as u64;
        for k in k_range.clone() {
            let values = signed_sequence(n_max, modulus, k);
            check_annihilates(&mut report, &op, &values, |n| format!("m={m} k={k} n={n}"));
        }
    }
    report.finish()
}

/// `L_m(x, -1) - (z + 1/z)` with coefficients in `Q[z, 1/z]`.
pub fn theorem3_operator(m: usize) -> XPoly<LaurentPoly> {
    let lifted = lucas_poly(m, &int(-1)).map_coeffs(|c| LaurentPoly::constant(c.clone()));
    &lifted - &XPoly::constant(LaurentPoly::z_plus_inverse())
}

/// `(L_m(E, -1) - (z + 1/z)) a(n, m, k, z) = 0` in `Q[z, 1/z]`.
pub fn verify_theorem3(
    m_max: usize,
    n_max: usize,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("symbolic z, 1 <= m <= {m_max}, 0 <= n <= {n_max} - m, k in {k_range:?}");
    let mut report = ReportBuilder::new("thm3", grid);
    for m in 1..=m_max {
        let op = theorem3_operator(m);
        for k in k_range.clone() {
            let values: Vec<LaurentPoly> = (0..=n_max)
                .map(|n| a_symbolic(n as u64, m as u64, k))
                .collect();
            check_annihilates(&mut report, &op, &values, |n| format!("m={m} k={k} n={n}"));
        }
    }
    report.finish()
}

/// `a(n, m, k + m, z) = z a(n, m, k, z)` symbolically.
pub fn verify_shift_law(
    m_max: usize,
    n_max: usize,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("symbolic z, 1 <= m <= {m_max}, 0 <= n <= {n_max}, k in {k_range:?}");
    let mut report = ReportBuilder::new("shift", grid);
    for m in 1..=m_max as u64 {
        for n in 0..=n_max as u64 {
            for k in k_range.clone() {
                let expected = a_symbolic(n, m, k).shift(1);
                let actual = a_symbolic(n, m, k + m as i64);
                report.check(|| format!("m={m} n={n} k={k}"), &expected, &actual);
            }
        }
    }
    report.finish()
}

/// Residue-class closed forms of `a(n, 5, k)` and the sign flip
/// `a(n, 5, k + 5) = -a(n, 5, k)`.
pub fn verify_schur(n_max: u64, k_range: RangeInclusive<i64>) -> VerificationReport {
    let grid = format!("0 <= n <= {n_max}, k in {k_range:?}");
    let mut report = ReportBuilder::new("schur", grid);
    for n in 0..=n_max {
        for k in k_range.clone() {
            let actual = a_signed(n, 5, k);
            let class = schur_classify(k);
            report.check(
                || format!("n={n} k={k} class={:?}", class.formula),
                &class.value(n),
                &actual,
            );
            let shifted = a_signed(n, 5, k + 5);
            report.check(|| format!("n={n} k={k} sign flip"), &-actual, &shifted);
        }
    }
    report.finish()
}

/// Re-derives `a(n, 2m, k)` from kernel entries with `(a, b) = (1, 0)`:
///
/// ```text
/// sum_j (s(n, k - 4mj) - s(n, k - 2m - 4mj))
///   + sum_j (s(n, k - 1 - 4mj) - s(n, k - 1 - 2m - 4mj))
/// ```
pub fn verify_theorem2_decomposition(
    m_max: usize,
    n_max: usize,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("1 <= m <= {m_max}, 0 <= n <= {n_max}, k in {k_range:?}");
    let mut report = ReportBuilder::new("thm2-decomposition", grid);
    let table = KernelTable::build(KernelParams::from_ints(1, 0), n_max);
    for m in 1..=m_max as i64 {
        let period = 4 * m;
        for n in 0..=n_max {
            let n_i = n as i64;
            for k in k_range.clone() {
                let lo = floor_div(k - 1 - 2 * m - n_i, period);
                let hi = ceil_div(k + n_i, period);
                let s = |kk: i64| table.get(n, kk);
                let sum = (lo..=hi).fold(Rational::zero(), |acc, j| {
                    let base = k - period * j;
                    acc + s(base) - s(base - 2 * m) + s(base - 1) - s(base - 1 - 2 * m)
                });
                let expected = Rational::from_integer(a_signed(n as u64, 2 * m as u64, k));
                report.check(|| format!("m={m} n={n} k={k}"), &expected, &sum);
            }
        }
    }
    report.finish()
}
