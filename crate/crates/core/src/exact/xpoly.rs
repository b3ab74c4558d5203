use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Coefficient;

/// Dense univariate polynomial `c_0 + c_1 x + ... + c_d x^d`.
///
/// The leading coefficient is nonzero unless the polynomial is zero, in
/// which case the coefficient list is empty. Applied as `p(E)` it becomes
/// a shift operator (see [`crate::verify::apply_shift_poly`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> XPoly<R> {
    /// From coefficients in ascending degree; trailing zeros are trimmed.
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation at `x = at`.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Applies `f` to every coefficient (e.g. to change the coefficient ring).
    pub fn map_coeffs<S: Coefficient>(&self, f: impl FnMut(&R) -> S) -> XPoly<S> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Human-readable form in descending powers of `var`, with a custom
    /// coefficient renderer.
    pub fn to_pretty_with(&self, var: &str, render: impl Fn(&R) -> String) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let minus_one = -R::one();
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}^{d}"),
            };
            let term = if deg > 0 && c.is_one() {
                power
            } else if deg > 0 && *c == minus_one {
                format!("-{power}")
            } else {
                let cs = render(c);
                let cs = if cs.trim_start_matches('-').contains(' ') {
                    format!("({cs})")
                } else {
                    cs
                };
                if deg == 0 {
                    cs
                } else {
                    format!("{cs}*{power}")
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

impl<R: Coefficient + fmt::Display> XPoly<R> {
    pub fn to_pretty(&self, var: &str) -> String {
        self.to_pretty_with(var, |c| c.to_string())
    }
}

impl<R: Coefficient + fmt::Display> fmt::Display for XPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty("x"))
    }
}

impl<R: Coefficient> Zero for XPoly<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coefficient> One for XPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Coefficient> Add<&XPoly<R>> for &XPoly<R> {
    type Output = XPoly<R>;

    fn add(self, rhs: &XPoly<R>) -> XPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Coefficient> Sub<&XPoly<R>> for &XPoly<R> {
    type Output = XPoly<R>;

    fn sub(self, rhs: &XPoly<R>) -> XPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Coefficient> Mul<&XPoly<R>> for &XPoly<R> {
    type Output = XPoly<R>;

    fn mul(self, rhs: &XPoly<R>) -> XPoly<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return XPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let slot = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = slot + a.clone() * b.clone();
            }
        }
        XPoly::new(out)
    }
}

impl<R: Coefficient> Neg for &XPoly<R> {
    type Output = XPoly<R>;

    fn neg(self) -> XPoly<R> {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<R: Coefficient> Neg for XPoly<R> {
    type Output = XPoly<R>;

    fn neg(self) -> XPoly<R> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl<R: Coefficient> $tr<XPoly<R>> for XPoly<R> {
            type Output = XPoly<R>;
            fn $method(self, rhs: XPoly<R>) -> XPoly<R> {
                (&self).$method(&rhs)
            }
        }
        impl<R: Coefficient> $tr<&XPoly<R>> for XPoly<R> {
            type Output = XPoly<R>;
            fn $method(self, rhs: &XPoly<R>) -> XPoly<R> {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio, LaurentPoly, Rational};

    fn xp(c: &[i64]) -> XPoly<Rational> {
        XPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn unit_multiplication() {
        let b = ratio(3, 4);
        let p = XPoly::new(vec![-b.clone(), int(1)]);
        assert_eq!(&p * &XPoly::one(), p);
    }

    #[test]
    fn x_squared_minus_two() {
        let x = XPoly::<Rational>::x();
        let two = XPoly::constant(int(2));
        assert_eq!(&(&x * &x) - &two, xp(&[-2, 0, 1]));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let p = xp(&[1, -4, 0, 7]);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = xp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
    }

    #[test]
    fn degrees_add_over_integral_domain() {
        let p = xp(&[1, 2, 3]);
        let q = xp(&[0, 0, -1, 5]);
        assert_eq!((&p * &q).degree(), Some(5));
    }

    #[test]
    fn laurent_coefficients() {
        let c = LaurentPoly::z_plus_inverse();
        let p: XPoly<LaurentPoly> = XPoly::new(vec![-c.clone(), LaurentPoly::one()]);
        // (x - c)(x + c) = x^2 - c^2
        let q = XPoly::new(vec![c.clone(), LaurentPoly::one()]);
        let prod = &p * &q;
        assert_eq!(prod.coeff(1), LaurentPoly::zero());
        assert_eq!(prod.coeff(0), -(&c * &c));
        assert!(prod.is_monic());
    }

    #[test]
    fn horner_eval() {
        let p = xp(&[-1, -1, 1]);
        assert_eq!(p.eval(&int(2)), int(1));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(-5, 4));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(xp(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(xp(&[2]).to_string(), "2");
        assert_eq!(XPoly::<Rational>::zero().to_string(), "0");
        assert_eq!(xp(&[0, 3, -2]).to_string(), "-2*x^2 + 3*x");
        let nested: XPoly<XPoly<Rational>> =
            XPoly::new(vec![xp(&[0, 0, 1]), XPoly::zero(), xp(&[0, 3])]);
        let s = nested.to_pretty_with("x", |c| c.to_pretty("s"));
        assert_eq!(s, "3*s*x^2 + s^2");
    }
}
