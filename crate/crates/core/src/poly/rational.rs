use std::fmt;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// A quotient `numerator / denominator` with a nonzero denominator.
///
/// No cancellation is performed; the pair is kept exactly as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if !numerator.ring().same_space(denominator.ring()) {
            return Err(Error::RingMismatch);
        }
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn polynomial(numerator: Polynomial) -> Self {
        let denominator = Polynomial::one(numerator.ring());
        RationalFunction { numerator, denominator }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn has_trivial_denominator(&self) -> bool {
        self.denominator.is_one()
    }

    /// Both parts are single terms (a Laurent monomial up to scalars).
    pub fn is_monomial_quotient(&self) -> bool {
        self.numerator.len() <= 1 && self.denominator.len() == 1
    }

    /// `Some(f(x) / g(x))`, or `None` where the denominator vanishes.
    pub fn evaluate_raw(&self, point: &[u32]) -> Option<u32> {
        let field = self.numerator.ring().field();
        let g = self.denominator.evaluate_raw(point);
        if g == 0 {
            return None;
        }
        let f = self.numerator.evaluate_raw(point);
        Some(field.mul(f, field.inv(g).expect("nonzero")))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_trivial_denominator() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}
