//! Polynomial families used as shift operators.
//!
//! `p_m` and `q_m` share the recurrence `r_m = (x - b) r_{m-1} - a^2 r_{m-2}`
//! and differ only in their initial values (`1, x + a - b` versus
//! `2, x - b`). Fibonacci and Lucas polynomials share
//! `r_n = x r_{n-1} + s r_{n-2}` with initial values `0, 1` and `2, x`.

use num_traits::{One, Zero};

use crate::exact::{binomial, Rational, XPoly};

/// Polynomial in `x` whose coefficients are polynomials in `s`.
pub type BivariatePoly = XPoly<XPoly<Rational>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    P { a: Rational, b: Rational },
    Q { a: Rational, b: Rational },
    Fibonacci { s: Rational },
    Lucas { s: Rational },
}

impl Family {
    fn initial(&self) -> [XPoly<Rational>; 2] {
        let x = XPoly::x();
        match self {
            Family::P { a, b } => [XPoly::one(), &x + &XPoly::constant(a - b)],
            Family::Q { b, .. } => [
                XPoly::constant(Rational::from_integer(2.into())),
                &x - &XPoly::constant(b.clone()),
            ],
            Family::Fibonacci { .. } => [XPoly::zero(), XPoly::one()],
            Family::Lucas { .. } => [XPoly::constant(Rational::from_integer(2.into())), x],
        }
    }

    /// `(c1, c2)` with `r_n = c1 r_{n-1} + c2 r_{n-2}`.
    fn step(&self) -> (XPoly<Rational>, Rational) {
        match self {
            Family::P { a, b } | Family::Q { a, b } => {
                (XPoly::new(vec![-b.clone(), Rational::one()]), -(a * a))
            }
            Family::Fibonacci { s } | Family::Lucas { s } => (XPoly::x(), s.clone()),
        }
    }

    /// Degree of the `n`-th member; `None` when it is the zero polynomial.
    pub fn expected_degree(&self, n: usize) -> Option<usize> {
        match self {
            Family::Fibonacci { .. } => n.checked_sub(1),
            _ => Some(n),
        }
    }
}

/// Memoized members of one family at fixed parameters.
#[derive(Clone, Debug)]
pub struct PolyFamilyCache {
    family: Family,
    step: (XPoly<Rational>, Rational),
    entries: Vec<XPoly<Rational>>,
}

impl PolyFamilyCache {
    pub fn new(family: Family) -> Self {
        let step = family.step();
        let entries = family.initial().to_vec();
        Self {
            family,
            step,
            entries,
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[XPoly<Rational>] {
        &self.entries
    }

    pub fn get(&mut self, n: usize) -> &XPoly<Rational> {
        while self.entries.len() <= n {
            let len = self.entries.len();
            let (c1, c2) = &self.step;
            let next = &(c1 * &self.entries[len - 1]) + &self.entries[len - 2].scalar_mul(c2);
            self.entries.push(next);
        }
        &self.entries[n]
    }
}

fn member(family: Family, n: usize) -> XPoly<Rational> {
    PolyFamilyCache::new(family).get(n).clone()
}

/// `p_m(x, a, b)`: monic of degree `m`.
pub fn p_poly(m: usize, a: &Rational, b: &Rational) -> XPoly<Rational> {
    member(
        Family::P {
            a: a.clone(),
            b: b.clone(),
        },
        m,
    )
}

/// `q_m(x, a, b)`: monic of degree `m` for `m >= 1`, `q_0 = 2`.
pub fn q_poly(m: usize, a: &Rational, b: &Rational) -> XPoly<Rational> {
    member(
        Family::Q {
            a: a.clone(),
            b: b.clone(),
        },
        m,
    )
}

/// Fibonacci polynomial `F_n(x, s)`.
pub fn fib_poly(n: usize, s: &Rational) -> XPoly<Rational> {
    member(Family::Fibonacci { s: s.clone() }, n)
}

/// Lucas polynomial `L_n(x, s)`.
pub fn lucas_poly(n: usize, s: &Rational) -> XPoly<Rational> {
    member(Family::Lucas { s: s.clone() }, n)
}

/// `F_n(x, s) = sum_k C(n-1-k, k) s^k x^(n-2k-1)` as a polynomial in both
/// `x` and `s`. Requires `n >= 1`.
pub fn fib_poly_closed(n: usize) -> BivariatePoly {
    assert!(n >= 1, "closed Fibonacci form needs n >= 1");
    let mut coeffs = vec![XPoly::zero(); n];
    for k in 0..=(n - 1) / 2 {
        let c = Rational::from_integer(binomial((n - 1 - k) as u64, k as i64));
        coeffs[n - 2 * k - 1] = XPoly::monomial(c, k);
    }
    XPoly::new(coeffs)
}

/// `L_n(x, s) = sum_k C(n-k, k) n/(n-k) s^k x^(n-2k)`, computed with the
/// rational weight as written. Requires `n >= 1`.
pub fn lucas_poly_closed(n: usize) -> BivariatePoly {
    assert!(n >= 1, "closed Lucas form needs n >= 1");
    let mut coeffs = vec![XPoly::zero(); n + 1];
    for k in 0..=n / 2 {
        let weight = Rational::new((n as i64).into(), ((n - k) as i64).into());
        let c = Rational::from_integer(binomial((n - k) as u64, k as i64)) * weight;
        coeffs[n - 2 * k] = XPoly::monomial(c, k);
    }
    let poly = XPoly::new(coeffs);
    assert!(
        poly.coeffs()
            .iter()
            .all(|c| c.coeffs().iter().all(Rational::is_integer)),
        "Lucas closed form produced a non-integer coefficient at n = {n}"
    );
    poly
}

/// Substitutes a value for `s`.
pub fn specialize_s(poly: &BivariatePoly, s: &Rational) -> XPoly<Rational> {
    poly.map_coeffs(|c| c.eval(s))
}

/// Renders a bivariate polynomial as e.g. `x^4 + 3*s*x^2 + s^2`.
pub fn pretty_bivariate(poly: &BivariatePoly) -> String {
    poly.to_pretty_with("x", |c| c.to_pretty("s"))
}
