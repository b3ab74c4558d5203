use std::ops::RangeInclusive;

use num_traits::Zero;

use super::{apply_shift_poly, ReportBuilder, VerificationReport};
use crate::exact::{ceil_div, floor_div, int, pow, Rational, XPoly};
use crate::kernel::{KernelParams, KernelTable};
use crate::polyfam::{Family, PolyFamilyCache};

fn describe(params: &[KernelParams]) -> String {
    let list: Vec<String> = params
        .iter()
        .map(|p| format!("({}, {})", p.a, p.b))
        .collect();
    format!("(a, b) in {{{}}}", list.join(", "))
}

/// `r(E) s(0, k, a, b) = sum_i r_i s(i, k, a, b)`.
fn operator_on_row_zero(op: &XPoly<Rational>, table: &mut KernelTable, k: i64) -> Rational {
    if let Some(d) = op.degree() {
        table.extend_to(d);
    }
    let table = &*table;
    apply_shift_poly(op, &|i: usize| table.get(i, k), 0)
}

fn iverson(cond: bool) -> Rational {
    int(cond as i64)
}

/// Left side `p_m(E, a, b) s(0, k, a, b)`.
pub fn lemma1_left(m: usize, params: &KernelParams, k: i64) -> Rational {
    let op = crate::polyfam::p_poly(m, &params.a, &params.b);
    operator_on_row_zero(&op, &mut KernelTable::new(params.clone()), k)
}

/// Left side `q_m(E, a, b) s(0, k, a, b)`.
pub fn lemma2_left(m: usize, params: &KernelParams, k: i64) -> Rational {
    let op = crate::polyfam::q_poly(m, &params.a, &params.b);
    operator_on_row_zero(&op, &mut KernelTable::new(params.clone()), k)
}

/// Checks `p_m(E, a, b) s(0, k, a, b) = a^m [|k| <= m]` for
/// `0 <= m <= m_max`, `|k| <= m + k_margin`.
pub fn verify_lemma1(m_max: usize, params: &[KernelParams], k_margin: i64) -> VerificationReport {
    let grid = format!(
        "{}, 0 <= m <= {m_max}, |k| <= m + {k_margin}",
        describe(params)
    );
    let mut report = ReportBuilder::new("lemma1", grid);
    for p in params {
        let mut table = KernelTable::build(p.clone(), m_max);
        let mut family = PolyFamilyCache::new(Family::P {
            a: p.a.clone(),
            b: p.b.clone(),
        });
        for m in 0..=m_max {
            let op = family.get(m).clone();
            let bound = m as i64 + k_margin;
            for k in -bound..=bound {
                let expected = pow(&p.a, m) * iverson(k.abs() <= m as i64);
                let actual = operator_on_row_zero(&op, &mut table, k);
                report.check(
                    || format!("a={} b={} m={m} k={k}", p.a, p.b),
                    &expected,
                    &actual,
                );
            }
        }
    }
    report.finish()
}

/// `sum_j p_m(E, a, b) s(0, k - (2m+1) j, a, b)` over every `j` whose
/// shifted index can reach a nonzero entry of rows `0..=m`.
pub fn corollary4_left(m: usize, params: &KernelParams, k: i64) -> Rational {
    let op = crate::polyfam::p_poly(m, &params.a, &params.b);
    let mut table = KernelTable::build(params.clone(), m);
    corollary4_sum(&op, &mut table, m, k)
}

fn corollary4_sum(op: &XPoly<Rational>, table: &mut KernelTable, m: usize, k: i64) -> Rational {
    let (m_i, period) = (m as i64, 2 * m as i64 + 1);
    let lo = floor_div(k - m_i, period);
    let hi = ceil_div(k + m_i, period);
    (lo..=hi).fold(Rational::zero(), |acc, j| {
        acc + operator_on_row_zero(op, table, k - period * j)
    })
}

/// Checks `sum_j p_m(E, a, b) s(0, k - (2m+1) j, a, b) = a^m` for each `k`.
pub fn verify_corollary4(
    m: usize,
    params: &KernelParams,
    k_range: RangeInclusive<i64>,
) -> VerificationReport {
    let grid = format!("a={} b={} m={m} k in {k_range:?}", params.a, params.b);
    let mut report = ReportBuilder::new("corollary4", grid);
    let op = crate::polyfam::p_poly(m, &params.a, &params.b);
    let mut table = KernelTable::build(params.clone(), m);
    let expected = pow(&params.a, m);
    for k in k_range {
        let actual = corollary4_sum(&op, &mut table, m, k);
        report.check(
            || format!("a={} b={} m={m} k={k}", params.a, params.b),
            &expected,
            &actual,
        );
    }
    report.finish()
}

/// [`verify_corollary4`] over `0 <= m <= m_max` and every parameter pair.
pub fn verify_corollary4_grid(
    m_max: usize,
    params: &[KernelParams],
    k_max: i64,
) -> VerificationReport {
    let grid = format!("{}, 0 <= m <= {m_max}, |k| <= {k_max}", describe(params));
    let shards = params
        .iter()
        .flat_map(|p| (0..=m_max).map(move |m| verify_corollary4(m, p, -k_max..=k_max)));
    VerificationReport::merge("corollary4", &grid, shards)
}

/// Checks `q_m(E, a, b) s(0, k, a, b) = a^m [|k| = m]` for
/// `1 <= m <= m_max`, `|k| <= m + k_margin`. The identity does not hold at
/// `m = 0`, where the left side is `2 [k = 0]`.
pub fn verify_lemma2(m_max: usize, params: &[KernelParams], k_margin: i64) -> VerificationReport {
    let grid = format!(
        "{}, 1 <= m <= {m_max}, |k| <= m + {k_margin}",
        describe(params)
    );
    let mut report = ReportBuilder::new("lemma2", grid);
    for p in params {
        let mut table = KernelTable::build(p.clone(), m_max);
        let mut family = PolyFamilyCache::new(Family::Q {
            a: p.a.clone(),
            b: p.b.clone(),
        });
        for m in 1..=m_max {
            let op = family.get(m).clone();
            let bound = m as i64 + k_margin;
            for k in -bound..=bound {
                let expected = pow(&p.a, m) * iverson(k.abs() == m as i64);
                let actual = operator_on_row_zero(&op, &mut table, k);
                report.check(
                    || format!("a={} b={} m={m} k={k}", p.a, p.b),
                    &expected,
                    &actual,
                );
            }
        }
    }
    report.finish()
}

/// Structural checks on kernel tables up to row `n_max`: every entry in
/// `-n-1 ..= n+1` re-derived from the previous row (which also pins the
/// support to `[-n, n]`), symmetry `s(n, -k) = s(n, k)`, and row sums
/// `(2a + b)^n`.
pub fn verify_kernel_invariants(params: &[KernelParams], n_max: usize) -> VerificationReport {
    let grid = format!("{}, 0 <= n <= {n_max}", describe(params));
    let mut report = ReportBuilder::new("kernel", grid);
    for p in params {
        let table = KernelTable::build(p.clone(), n_max);
        let tag = |n: usize| format!("a={} b={} n={n}", p.a, p.b);
        report.check(|| tag(0), &int(1), &table.get(0, 0));
        for n in 0..=n_max {
            let n_i = n as i64;
            if n > 0 {
                for k in -n_i - 1..=n_i + 1 {
                    let expected = &p.a * table.get(n - 1, k - 1)
                        + &p.b * table.get(n - 1, k)
                        + &p.a * table.get(n - 1, k + 1);
                    report.check(
                        || format!("{} k={k} recurrence", tag(n)),
                        &expected,
                        &table.get(n, k),
                    );
                }
            }
            for k in 1..=n_i + 1 {
                report.check(
                    || format!("{} k={k} symmetry", tag(n)),
                    &table.get(n, k),
                    &table.get(n, -k),
                );
            }
            let row_sum = pow(&(int(2) * &p.a + &p.b), n);
            report.check(
                || format!("{} row sum", tag(n)),
                &row_sum,
                &table.row(n).expect("built").sum(),
            );
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn lemma1_examples() {
        let p = KernelParams::from_ints(-1, 0);
        assert_eq!(lemma1_left(2, &p, 0), int(1));
        assert_eq!(lemma1_left(2, &p, 3), int(0));
        let q = KernelParams::new(ratio(5, 2), int(-7));
        assert_eq!(lemma1_left(0, &q, 0), int(1));
    }

    #[test]
    fn lemma1_with_a_zero_uses_zero_to_the_zero() {
        let p = KernelParams::from_ints(0, 4);
        let r = verify_lemma1(6, &[p], 3);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn corollary4_examples() {
        let p = KernelParams::from_ints(-1, 0);
        let r = verify_corollary4(2, &p, -10..=10);
        assert!(r.passed);
        assert_eq!(r.cases, 21);
        assert_eq!(
            corollary4_left(0, &KernelParams::from_ints(1, 0), 13),
            int(1)
        );
        assert_eq!(
            corollary4_left(1, &KernelParams::from_ints(2, 1), 0),
            int(2)
        );
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(lemma2_left(1, &KernelParams::from_ints(-1, 0), 1), int(-1));
        assert_eq!(lemma2_left(2, &KernelParams::from_ints(1, 0), 0), int(0));
        assert_eq!(lemma2_left(2, &KernelParams::from_ints(1, 0), 2), int(1));
    }

    #[test]
    fn lemma2_fails_at_m_zero() {
        let p = KernelParams::from_ints(3, -1);
        for k in -4..=4 {
            assert_eq!(lemma2_left(0, &p, k), int(2 * (k == 0) as i64));
        }
    }

    #[test]
    fn broken_identity_is_reported() {
        // p_3(E) s(0, 0) is a^3 = 8, not a^2
        let p = KernelParams::from_ints(2, 0);
        let mut table = KernelTable::build(p.clone(), 3);
        let op = crate::polyfam::p_poly(3, &p.a, &p.b);
        let got = operator_on_row_zero(&op, &mut table, 0);
        assert_eq!(got, int(8));
        assert_ne!(got, int(4));
    }

    #[test]
    fn kernel_invariants_small() {
        let r = verify_kernel_invariants(
            &[
                KernelParams::from_ints(2, -3),
                KernelParams::new(ratio(1, 3), int(0)),
            ],
            12,
        );
        assert!(r.passed, "{:?}", r.failures);
    }
}
