//! The coefficient ring every polynomial and rational in this crate is built over.
//!
//! Any signed integer type with exact division works. [`num_bigint::BigInt`] is the
//! production choice; `i64` and `i128` are handy for small orders and for tests,
//! but overflow once coefficients outgrow the machine word (around r ≈ 20 for
//! `i128`).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Signed integer scalar with exact division and conversion from machine integers.
pub trait Coefficient:
    Integer + Signed + Clone + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
    /// Converts a machine integer; panics if the value does not fit the type.
    fn from_i128_exact(value: i128) -> Self {
        Self::from_i128(value)
            .unwrap_or_else(|| panic!("{value} does not fit the coefficient type"))
    }

    /// Converts a count; panics if the value does not fit the type.
    fn from_u64_exact(value: u64) -> Self {
        Self::from_u64(value).unwrap_or_else(|| panic!("{value} does not fit the coefficient type"))
    }

    /// Exact conversion to [`BigInt`], used for serialization.
    fn to_bigint(&self) -> BigInt;
}

impl Coefficient for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

macro_rules! impl_machine_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
        }
    )*};
}

impl_machine_coefficient!(i32, i64, i128);

/// `n!` in the coefficient type.
pub fn factorial<C: Coefficient>(n: usize) -> C {
    (1..=n).fold(C::one(), |acc, i| {
        acc * C::from_usize(i).expect("usize fits coefficient")
    })
}

/// Small helper for `usize -> C`.
pub(crate) fn coeff<C: Coefficient>(n: usize) -> C {
    C::from_usize(n).expect("usize fits coefficient")
}

pub(crate) fn coeff_i64<C: Coefficient>(n: i64) -> C {
    C::from_i64(n).expect("i64 fits coefficient")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<i64>(0), 1);
        assert_eq!(factorial::<i64>(5), 120);
        assert_eq!(factorial::<BigInt>(13), BigInt::from(6_227_020_800u64));
    }

    #[test]
    fn factorial_exceeds_u64() {
        let f: BigInt = factorial(25);
        assert_eq!(f.to_string(), "15511210043330985984000000");
    }
}
