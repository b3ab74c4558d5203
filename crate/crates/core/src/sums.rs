//! The binomial sums
//!
//! ```text
//! a(n, m, k, z) = sum_{j in Z} z^j C(n, floor((n - m j + k) / 2))
//! ```
//!
//! evaluated exactly, either symbolically in `z` (a [`LaurentPoly`]) or at a
//! nonzero rational `z`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, ceil_div, floor_div, LaurentPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZMode {
    Symbolic,
    Numeric(Rational),
}

/// A validated point `(n, m, k, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSpec {
    n: u64,
    m: u64,
    k: i64,
    z: ZMode,
}

impl SumSpec {
    pub fn new(n: u64, m: u64, k: i64, z: ZMode) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if matches!(&z, ZMode::Numeric(v) if v.is_zero()) {
            return Err(Error::ZeroParameter);
        }
        Ok(Self { n, m, k, z })
    }

    pub fn symbolic(n: u64, m: u64, k: i64) -> Result<Self> {
        Self::new(n, m, k, ZMode::Symbolic)
    }

    pub fn numeric(n: u64, m: u64, k: i64, z: Rational) -> Result<Self> {
        Self::new(n, m, k, ZMode::Numeric(z))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn z(&self) -> &ZMode {
        &self.z
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumValue {
    Symbolic(LaurentPoly),
    Numeric(Rational),
}

impl fmt::Display for SumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumValue::Symbolic(p) => p.fmt(f),
            SumValue::Numeric(r) => r.fmt(f),
        }
    }
}

/// Binomial lower index `floor((n - m j + k) / 2)` of the `j`-th term.
fn lower_index(n: u64, m: u64, k: i64, j: i64) -> i64 {
    floor_div(n as i64 - m as i64 * j + k, 2)
}

/// The `j` whose term can be nonzero, i.e. `0 <= floor((n - m j + k)/2) <= n`.
/// Always a contiguous (possibly empty) ascending range.
pub fn j_support(n: u64, m: u64, k: i64) -> Vec<i64> {
    assert!(m >= 1, "modulus must be at least 1");
    let (n_i, m_i) = (n as i64, m as i64);
    // 0 <= n - m j + k <= 2n + 1
    let hi = floor_div(n_i + k, m_i);
    let lo = ceil_div(k - n_i - 1, m_i);
    (lo..=hi)
        .filter(|&j| (0..=n_i).contains(&lower_index(n, m, k, j)))
        .collect()
}

fn terms(n: u64, m: u64, k: i64) -> impl Iterator<Item = (i64, BigInt)> {
    j_support(n, m, k)
        .into_iter()
        .map(move |j| (j, binomial(n, lower_index(n, m, k, j))))
}

/// `a(n, m, k, z)` as a Laurent polynomial in `z`.
pub fn a_symbolic(n: u64, m: u64, k: i64) -> LaurentPoly {
    LaurentPoly::from_terms(terms(n, m, k).map(|(j, c)| (j, Rational::from_integer(c))))
}

/// `a(n, m, k, z0)` for a nonzero rational `z0`.
pub fn a_numeric(n: u64, m: u64, k: i64, z0: &Rational) -> Result<Rational> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if z0.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let inv = z0.recip();
    let mut acc = Rational::zero();
    for (j, c) in terms(n, m, k) {
        let zj = if j >= 0 {
            num_traits::pow(z0.clone(), j as usize)
        } else {
            num_traits::pow(inv.clone(), j.unsigned_abs() as usize)
        };
        acc += Rational::from_integer(c) * zj;
    }
    Ok(acc)
}

pub fn a_value(spec: &SumSpec) -> SumValue {
    match &spec.z {
        ZMode::Symbolic => SumValue::Symbolic(a_symbolic(spec.n, spec.m, spec.k)),
        ZMode::Numeric(z0) => {
            SumValue::Numeric(a_numeric(spec.n, spec.m, spec.k, z0).expect("SumSpec is validated"))
        }
    }
}

/// `a(n, m, k, -1)`, summed directly over the integers.
pub fn a_signed(n: u64, m: u64, k: i64) -> BigInt {
    terms(n, m, k)
        .map(|(j, c)| if j.is_odd() { -c } else { c })
        .sum()
}

/// Fibonacci numbers by the integer recurrence `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurFormula {
    /// `a(n, 5, k) = F_{n+1}`
    NextFibonacci,
    /// `a(n, 5, k) = F_n`
    Fibonacci,
    Zero,
    /// `a(n, 5, k) = -a(n, 5, k + 5)`, with `base_residue = (k + 5) mod 10`.
    NegatedShift {
        base_residue: u8,
    },
}

/// Closed form of `a(n, 5, k)` for one residue class of `k` mod 10.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchurClass {
    pub residue: u8,
    pub formula: SchurFormula,
}

impl SchurClass {
    pub fn value(&self, n: u64) -> BigInt {
        match self.formula {
            SchurFormula::NextFibonacci => fibonacci(n + 1),
            SchurFormula::Fibonacci => fibonacci(n),
            SchurFormula::Zero => BigInt::zero(),
            SchurFormula::NegatedShift { base_residue } => {
                -schur_classify(base_residue as i64).value(n)
            }
        }
    }
}

pub fn schur_classify(k: i64) -> SchurClass {
    let residue = k.rem_euclid(10) as u8;
    let formula = match residue {
        0 | 1 => SchurFormula::NextFibonacci,
        2 | 9 => SchurFormula::Fibonacci,
        3 | 8 => SchurFormula::Zero,
        r => SchurFormula::NegatedShift {
            base_residue: (r + 5) % 10,
        },
    };
    SchurClass { residue, formula }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    /// Sums over a wide window of j without any support reasoning.
    fn brute_terms(n: u64, m: u64, k: i64) -> Vec<(i64, BigInt)> {
        let w = 4 * (n as i64 + k.abs() + 2);
        (-w..=w)
            .map(|j| (j, binomial(n, floor_div(n as i64 - m as i64 * j + k, 2))))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    #[test]
    fn support_examples() {
        assert_eq!(j_support(0, 1, 0), vec![-1, 0]);
        assert!(j_support(0, 5, 3).is_empty());
        assert_eq!(j_support(4, 100, 0), vec![0]);
    }

    #[test]
    fn support_is_exact_and_bounded() {
        for n in 0..=14u64 {
            for m in 1..=7u64 {
                for k in -15..=15 {
                    let js = j_support(n, m, k);
                    let brute: Vec<i64> =
                        brute_terms(n, m, k).into_iter().map(|(j, _)| j).collect();
                    assert_eq!(js, brute, "n={n} m={m} k={k}");
                    assert!(js.windows(2).all(|w| w[1] == w[0] + 1));
                    assert!(js.len() as u64 <= (2 * n + 1) / m + 1);
                }
            }
        }
    }

    #[test]
    fn value_examples() {
        assert_eq!(a_numeric(4, 5, 0, &int(-1)).unwrap(), int(5));
        assert_eq!(
            a_symbolic(0, 1, 0),
            LaurentPoly::from_terms([(0, int(1)), (-1, int(1))])
        );
        assert_eq!(
            a_symbolic(1, 1, 0),
            LaurentPoly::from_terms([(1, int(1)), (0, int(1)), (-1, int(1)), (-2, int(1))])
        );
    }

    #[test]
    fn signed_examples() {
        assert_eq!(a_signed(2, 5, 0), BigInt::from(2));
        // j = 0 gives C(3,1) = 3, j = -1 gives -C(3,3) = -1
        assert_eq!(
            brute_terms(3, 4, 0),
            vec![(-1, BigInt::from(1)), (0, BigInt::from(3))]
        );
        assert_eq!(a_signed(3, 4, 0), BigInt::from(2));
        assert_eq!(a_signed(0, 5, 3), BigInt::from(0));
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(SumSpec::numeric(1, 5, 0, int(0)), Err(Error::ZeroParameter));
        assert_eq!(SumSpec::symbolic(1, 0, 0), Err(Error::ZeroModulus));
        assert_eq!(a_numeric(1, 5, 0, &int(0)), Err(Error::ZeroParameter));
    }

    #[test]
    fn numeric_is_symbolic_evaluated() {
        for z0 in [int(-1), int(1), int(2), ratio(-3, 2)] {
            for n in 0..=12u64 {
                for m in 1..=5u64 {
                    for k in -6..=6 {
                        let spec = SumSpec::numeric(n, m, k, z0.clone()).unwrap();
                        let SumValue::Numeric(v) = a_value(&spec) else {
                            unreachable!()
                        };
                        assert_eq!(v, a_symbolic(n, m, k).eval(&z0).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn fibonacci_numbers() {
        let first: Vec<BigInt> = (0..10).map(fibonacci).collect();
        let expected: Vec<BigInt> = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(first, expected);
        assert_eq!(fibonacci(61).to_string(), "2504730781961");
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_classify(11).formula, SchurFormula::NextFibonacci);
        assert_eq!(schur_classify(9).formula, SchurFormula::Fibonacci);
        let c = schur_classify(-2);
        assert_eq!((c.residue, c.formula), (8, SchurFormula::Zero));
        assert_eq!(
            schur_classify(4).formula,
            SchurFormula::NegatedShift { base_residue: 9 }
        );
        assert_eq!(schur_classify(4).value(5), -fibonacci(5));
        assert_eq!(schur_classify(6).value(5), -fibonacci(6));
    }
}
