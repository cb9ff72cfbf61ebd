//! Exact rationals in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactRational<C: Coefficient>(Ratio<C>);

impl<C: Coefficient> ExactRational<C> {
    /// Reduces `num / den` to lowest terms with a positive denominator.
    pub fn new(num: C, den: C) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(Ratio::new(num, den)))
    }

    pub fn from_integer(n: C) -> Self {
        ExactRational(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        ExactRational(Ratio::zero())
    }

    pub fn one() -> Self {
        ExactRational(Ratio::one())
    }

    pub fn numerator(&self) -> &C {
        self.0.numer()
    }

    pub fn denominator(&self) -> &C {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl<C: Coefficient> Add for ExactRational<C> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl<C: Coefficient> Mul for ExactRational<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        ExactRational(self.0 * rhs.0)
    }
}

impl<C: Coefficient> Div for ExactRational<C> {
    type Output = Self;

    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Self) -> Self {
        ExactRational(self.0 / rhs.0)
    }
}

/// Renders `num/den`, or just `num` when the denominator is 1.
impl<C: Coefficient> fmt::Display for ExactRational<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
