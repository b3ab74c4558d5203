//! Kernel tables `s(n, k, a, b)`, built row by row from
//!
//! ```text
//! s(0, k) = [k = 0]
//! s(n, k) = a s(n-1, k-1) + b s(n-1, k) + a s(n-1, k+1)
//! ```
//!
//! together with the integer sequences `t(n, k)` and `v(n, k)` that
//! decompose into differences and sums of kernel entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::exact::{binomial, floor_div, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelParams {
    pub a: Rational,
    pub b: Rational,
}

impl KernelParams {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        )
    }
}

/// Row `n` of a kernel table. Entries are stored densely for
/// `k = -n ..= n`; everything outside is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRow {
    n: usize,
    values: Vec<Rational>,
}

impl KernelRow {
    fn initial() -> Self {
        Self {
            n: 0,
            values: vec![Rational::from_integer(1.into())],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn offset(&self) -> i64 {
        -(self.n as i64)
    }

    /// `s(n, k)`; zero for `|k| > n`.
    pub fn get(&self, k: i64) -> Rational {
        self.get_ref(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn get_ref(&self, k: i64) -> Option<&Rational> {
        let idx = k - self.offset();
        if idx < 0 {
            return None;
        }
        self.values.get(idx as usize)
    }

    /// `(k, s(n, k))` for `k = -n ..= n`, zeros included.
    pub fn entries(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        let off = self.offset();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (off + i as i64, v))
    }

    /// `(k, s(n, k))` for nonzero entries only.
    pub fn support(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.entries().filter(|(_, v)| !v.is_zero())
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    fn next(&self, params: &KernelParams) -> Self {
        let n = self.n + 1;
        let lo = -(n as i64);
        let values = (0..2 * n + 1)
            .map(|i| {
                let k = lo + i as i64;
                let mut acc = Rational::zero();
                if let Some(v) = self.get_ref(k - 1) {
                    acc += &params.a * v;
                }
                if let Some(v) = self.get_ref(k) {
                    acc += &params.b * v;
                }
                if let Some(v) = self.get_ref(k + 1) {
                    acc += &params.a * v;
                }
                acc
            })
            .collect();
        Self { n, values }
    }
}

/// Rows `0 ..= N` of `s(n, k, a, b)`, grown on demand.
///
/// Readers that only hold `&KernelTable` see a fixed set of rows; use
/// [`KernelTable::build`] to pre-build to a known depth before sharing.
#[derive(Clone, Debug)]
pub struct KernelTable {
    params: KernelParams,
    rows: Vec<KernelRow>,
}

impl KernelTable {
    pub fn new(params: KernelParams) -> Self {
        Self {
            params,
            rows: vec![KernelRow::initial()],
        }
    }

    pub fn build(params: KernelParams, n_max: usize) -> Self {
        let mut table = Self::new(params);
        table.extend_to(n_max);
        table
    }

    pub fn params(&self) -> &KernelParams {
        &self.params
    }

    /// Largest row index currently built.
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let next = self
                .rows
                .last()
                .expect("row 0 always present")
                .next(&self.params);
            self.rows.push(next);
        }
    }

    /// Row `n`, extending the table if needed.
    pub fn row_mut(&mut self, n: usize) -> &KernelRow {
        self.extend_to(n);
        &self.rows[n]
    }

    /// Row `n` if already built.
    pub fn row(&self, n: usize) -> Option<&KernelRow> {
        self.rows.get(n)
    }

    pub fn rows(&self) -> &[KernelRow] {
        &self.rows
    }

    /// `s(n, k, a, b)`, extending the table if needed.
    pub fn value(&mut self, n: usize, k: i64) -> Rational {
        self.row_mut(n).get(k)
    }

    /// `s(n, k, a, b)` from the rows already built. Panics if row `n` is not
    /// built yet.
    pub fn get(&self, n: usize, k: i64) -> Rational {
        self.rows
            .get(n)
            .unwrap_or_else(|| panic!("kernel row {n} not built (depth {})", self.depth()))
            .get(k)
    }
}

/// Row `n` of `s(·, ·, a, b)`.
pub fn kernel_row(params: &KernelParams, n: usize) -> KernelRow {
    let mut row = KernelRow::initial();
    for _ in 0..n {
        row = row.next(params);
    }
    row
}

/// `s(n, k, a, b)`.
pub fn kernel_value(params: &KernelParams, n: usize, k: i64) -> Rational {
    if k.unsigned_abs() > n as u64 {
        return Rational::zero();
    }
    kernel_row(params, n).get(k)
}

/// `t(n, k) = (-1)^k C(n, floor((n + k) / 2))`.
pub fn t_value(n: usize, k: i64) -> BigInt {
    let c = v_value(n, k);
    if k.is_odd() {
        -c
    } else {
        c
    }
}

/// `v(n, k) = C(n, floor((n + k) / 2))`.
pub fn v_value(n: usize, k: i64) -> BigInt {
    binomial(n as u64, floor_div(n as i64 + k, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn row_map(row: &KernelRow) -> Vec<(i64, Rational)> {
        row.support().map(|(k, v)| (k, v.clone())).collect()
    }

    #[test]
    fn first_rows_for_minus_one_zero() {
        let p = KernelParams::from_ints(-1, 0);
        assert_eq!(row_map(&kernel_row(&p, 0)), vec![(0, int(1))]);
        assert_eq!(
            row_map(&kernel_row(&p, 1)),
            vec![(-1, int(-1)), (1, int(-1))]
        );
        assert_eq!(
            row_map(&kernel_row(&p, 2)),
            vec![(-2, int(1)), (0, int(2)), (2, int(1))]
        );
    }

    #[test]
    fn row_zero_for_any_params() {
        let p = KernelParams::new(crate::exact::ratio(7, 3), int(-5));
        assert_eq!(row_map(&kernel_row(&p, 0)), vec![(0, int(1))]);
    }

    /// Number of ±1 walks of length n from 0 ending at k.
    fn walk_count(n: usize, k: i64) -> i64 {
        let mut counts = std::collections::HashMap::from([(0i64, 1i64)]);
        for _ in 0..n {
            let mut next = std::collections::HashMap::new();
            for (&h, &c) in &counts {
                *next.entry(h + 1).or_insert(0) += c;
                *next.entry(h - 1).or_insert(0) += c;
            }
            counts = next;
        }
        counts.get(&k).copied().unwrap_or(0)
    }

    #[test]
    fn values() {
        assert_eq!(walk_count(4, 0), 6);
        assert_eq!(
            kernel_value(&KernelParams::from_ints(1, 0), 4, 0),
            int(walk_count(4, 0))
        );
        assert_eq!(kernel_value(&KernelParams::from_ints(-1, 0), 2, 0), int(2));
        assert_eq!(kernel_value(&KernelParams::from_ints(2, 3), 1, 0), int(3));
        assert_eq!(kernel_value(&KernelParams::from_ints(2, 3), 1, 2), int(0));
    }

    #[test]
    fn a_zero_degenerates_to_powers_of_b() {
        let mut t = KernelTable::new(KernelParams::from_ints(0, 3));
        for n in 0..8 {
            assert_eq!(t.value(n, 0), int(3i64.pow(n as u32)));
            assert_eq!(t.value(n, 1), int(0));
        }
    }

    #[test]
    fn table_grows_on_demand() {
        let mut t = KernelTable::new(KernelParams::from_ints(1, 1));
        assert_eq!(t.depth(), 0);
        assert!(t.row(3).is_none());
        // trinomial coefficients: 1, 3, 6, 7, 6, 3, 1
        assert_eq!(t.value(3, 0), int(7));
        assert_eq!(t.depth(), 3);
        assert_eq!(t.get(3, -2), int(3));
        assert_eq!(t.get(3, 9), int(0));
    }

    #[test]
    #[should_panic(expected = "not built")]
    fn get_beyond_depth_panics() {
        KernelTable::new(KernelParams::from_ints(1, 0)).get(2, 0);
    }

    #[test]
    fn t_and_v_examples() {
        assert_eq!(t_value(0, 0), BigInt::from(1));
        assert_eq!(t_value(0, 1), BigInt::from(-1));
        assert_eq!(t_value(0, 5), BigInt::from(0));
        assert_eq!(t_value(0, -1), BigInt::from(0));
        assert_eq!(t_value(2, 0), binomial(2, 1));
        assert_eq!(v_value(0, 0), BigInt::from(1));
        assert_eq!(v_value(0, 1), BigInt::from(1));
        assert_eq!(v_value(0, 2), BigInt::from(0));
        assert_eq!(v_value(0, -1), BigInt::from(0));
        assert_eq!(v_value(3, 0), binomial(3, 1));
    }

    #[test]
    fn t_recurrence() {
        for n in 1..=40usize {
            for k in -(n as i64) - 3..=(n as i64) + 3 {
                assert_eq!(
                    t_value(n, k),
                    -t_value(n - 1, k - 1) - t_value(n - 1, k + 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn t_and_v_decompose_into_kernel_entries() {
        let mut minus = KernelTable::build(KernelParams::from_ints(-1, 0), 40);
        let mut plus = KernelTable::build(KernelParams::from_ints(1, 0), 40);
        for n in 0..=40usize {
            let n_i = n as i64;
            for k in -n_i - 2..=n_i + 2 {
                let t = minus.value(n, k) - minus.value(n, k - 1);
                assert_eq!(Rational::from_integer(t_value(n, k)), t, "t n={n} k={k}");
                let v = plus.value(n, k) + plus.value(n, k - 1);
                assert_eq!(Rational::from_integer(v_value(n, k)), v, "v n={n} k={k}");
            }
        }
    }
}
