//! JSON forms of exact values: a rational is the string `"p/q"` (or `"p"`),
//! a Laurent polynomial is an array of `[exponent, "p/q"]` pairs in
//! ascending exponent order, and an `XPoly` is the array of its
//! coefficients from degree 0 upward.

use serde_json::Value;

use super::{format_rational, parse_rational, Coefficient, LaurentPoly, Rational, XPoly};
use crate::error::{Error, Result};

pub trait JsonValue: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

impl JsonValue for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            other => Err(Error::Json(format!(
                "expected rational string, got {other}"
            ))),
        }
    }
}

impl JsonValue for LaurentPoly {
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| Value::Array(vec![Value::from(e), c.to_json()]))
                .collect(),
        )
    }

    fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Json(format!("expected array of terms, got {value}")))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            match item.as_array().map(Vec::as_slice) {
                Some([e, c]) => {
                    let e = e
                        .as_i64()
                        .ok_or_else(|| Error::Json(format!("bad exponent {e}")))?;
                    terms.push((e, Rational::from_json(c)?));
                }
                _ => {
                    return Err(Error::Json(format!(
                        "expected [exponent, coefficient], got {item}"
                    )))
                }
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl<R: Coefficient + JsonValue> JsonValue for XPoly<R> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(JsonValue::to_json).collect())
    }

    fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Json(format!("expected coefficient array, got {value}")))?;
        let coeffs = items.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
        Ok(XPoly::new(coeffs))
    }
}
