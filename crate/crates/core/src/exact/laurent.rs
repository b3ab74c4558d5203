use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Element of `Q[z, 1/z]`, stored sparsely as exponent -> coefficient.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `z + 1/z`.
    pub fn z_plus_inverse() -> Self {
        Self::from_terms([(1, Rational::one()), (-1, Rational::one())])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Exact value at `z = z0`. Rejects `z0 = 0`.
    pub fn eval(&self, z0: &Rational) -> Result<Rational> {
        if z0.is_zero() {
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(z0.clone(), e as usize)
            } else {
                num_traits::pow(z0.recip(), e.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentPoly {
    /// Descending powers, e.g. `z^2 + 2 + z^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn zi() -> LaurentPoly {
        LaurentPoly::monomial(int(1), -1)
    }

    #[test]
    fn monomial_shift_product() {
        let p = LaurentPoly::z() + LaurentPoly::one();
        let expected = LaurentPoly::from_terms([(0, int(1)), (-1, int(1))]);
        assert_eq!(&p * &zi(), expected);
    }

    #[test]
    fn square_of_z_plus_inverse() {
        let c = LaurentPoly::z_plus_inverse();
        let expected = LaurentPoly::from_terms([(2, int(1)), (0, int(2)), (-2, int(1))]);
        assert_eq!(&c * &c, expected);
    }

    #[test]
    fn product_with_zero_is_zero() {
        let p = LaurentPoly::from_terms([(3, ratio(2, 3)), (-4, int(-1))]);
        assert!((&p * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn no_zero_coefficients_after_cancellation() {
        let p = LaurentPoly::z_plus_inverse();
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.len(), 0);
        let mut q = LaurentPoly::z();
        q.add_term(1, int(-1));
        assert!(q.is_empty());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::one() + zi();
        assert_eq!(p.eval(&int(-1)).unwrap(), int(0));
        assert_eq!(
            LaurentPoly::z_plus_inverse().eval(&int(2)).unwrap(),
            ratio(5, 2)
        );
        assert_eq!(
            LaurentPoly::monomial(int(1), 5).eval(&int(1)).unwrap(),
            int(1)
        );
        assert_eq!(p.eval(&int(0)), Err(Error::ZeroEvaluation));
    }

    #[test]
    fn display() {
        let c = LaurentPoly::z_plus_inverse();
        assert_eq!((&c * &c).to_string(), "z^2 + 2 + z^-2");
        let p = LaurentPoly::from_terms([(1, ratio(-3, 2)), (0, int(1)), (-1, int(-1))]);
        assert_eq!(p.to_string(), "-3/2*z + 1 - z^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exponent_bounds_add_under_multiplication() {
        let p = LaurentPoly::from_terms([(-2, int(1)), (3, int(4))]);
        let q = LaurentPoly::from_terms([(-1, int(5)), (2, ratio(1, 7))]);
        let r = &p * &q;
        assert_eq!(r.min_exp(), Some(-3));
        assert_eq!(r.max_exp(), Some(5));
    }
}
