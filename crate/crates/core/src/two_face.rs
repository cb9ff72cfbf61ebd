//! Rooted hypermaps with two faces.
//!
//! With `ξ = (0..a-1)(a..a+b-1)` and `a = r - b`, the polynomial
//! `P_{a,b} - P_a P_b` keeps exactly the permutations joining the two faces
//! (a `σ` that fixes both blocks setwise contributes `P_a P_b`). Rotating the
//! unrooted second face acts freely on those, so each class has size `b`:
//!
//! ```text
//! Σ_{e,v} h_r^(2)(e, v) m^e n^v = Σ_{b=1}^{r-1} (P_{r-b,b} - P_{r-b} P_b) / b
//! ```

use crate::closed_form::closed_form_p;
use crate::error::{Error, Result};
use crate::oracle::{enumerate_histogram, enumerate_p_multi, EnumOptions, FaceShape, Selection};
use crate::poly::BivarPoly;
use crate::scalar::{coeff, factorial, Coefficient};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFaceResult<C> {
    pub r: usize,
    pub gf: BivarPoly<C>,
    /// `gf` at `m = n = 1`.
    pub total: C,
}

fn require_two(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "two-face hypermaps need at least 2 darts, got r = {r}"
        )));
    }
    Ok(())
}

/// Generating polynomial of two-face rooted hypermaps with `r` darts.
///
/// `P_{r-b,b}` comes from enumeration; the one-face factors from the closed form.
pub fn two_face_gf<C: Coefficient>(r: usize, opts: &EnumOptions) -> Result<TwoFaceResult<C>> {
    require_two(r)?;
    opts.check(r)?;
    let one_face: Vec<BivarPoly<C>> = (1..r).map(closed_form_p::<C>).collect::<Result<_>>()?;
    let mut gf = BivarPoly::zero();
    for b in 1..r {
        let a = r - b;
        let joined = enumerate_p_multi::<C>(&FaceShape::two_face(a, b)?, opts)?;
        let disjoint = &one_face[a - 1] * &one_face[b - 1];
        gf += &(joined - disjoint).div_exact(&coeff(b))?;
    }
    let total = gf.coefficient_sum();
    Ok(TwoFaceResult { r, gf, total })
}

/// `Σ_{b=1}^{r-1} (r! - b!(r-b)!) / b`, without enumeration.
pub fn two_face_total<C: Coefficient>(r: usize) -> Result<C> {
    require_two(r)?;
    let r_fact: C = factorial(r);
    let mut total = C::zero();
    for b in 1..r {
        let diff = r_fact.clone() - factorial::<C>(b) * factorial::<C>(r - b);
        let (q, rem) = diff.div_rem(&coeff(b));
        if !rem.is_zero() {
            return Err(Error::NotDivisible {
                e: 0,
                v: 0,
                coeff: diff.to_string(),
                divisor: b.to_string(),
            });
        }
        total = total + q;
    }
    Ok(total)
}

/// Independent ground truth: enumerate only the `σ` for which `⟨ξ_{a,b}, σ⟩`
/// is transitive and divide each split's polynomial by `b`.
pub fn connected_two_face_oracle<C: Coefficient>(
    r: usize,
    opts: &EnumOptions,
) -> Result<BivarPoly<C>> {
    require_two(r)?;
    opts.check(r)?;
    let mut gf = BivarPoly::zero();
    for b in 1..r {
        let shape = FaceShape::two_face(r - b, b)?;
        let connected: BivarPoly<C> =
            enumerate_histogram(&shape, Selection::Transitive, opts)?.into_poly();
        gf += &connected.div_exact(&coeff(b))?;
    }
    Ok(gf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = BivarPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn gf(r: usize) -> TwoFaceResult<BigInt> {
        two_face_gf(r, &EnumOptions::default()).unwrap()
    }

    #[test]
    fn two_darts() {
        let res = gf(2);
        assert_eq!(res.gf, p("m*n"));
        assert_eq!(res.total, BigInt::from(1));
        assert_eq!(
            connected_two_face_oracle::<BigInt>(2, &EnumOptions::default()).unwrap(),
            p("m*n")
        );
    }

    #[test]
    fn frozen_polynomials() {
        // Independent Python brute force.
        assert_eq!(gf(3).gf, p("3*m^2*n + 3*m*n^2"));
        assert_eq!(gf(4).gf, p("6*m^3*n + 17*m^2*n^2 + 6*m*n^3 + 5*m*n"));
        assert_eq!(
            gf(6).gf,
            p(
                "15*m^5*n + 135*m^4*n^2 + 262*m^3*n^3 + 175*m^3*n + 135*m^2*n^4 \
               + 456*m^2*n^2 + 15*m*n^5 + 175*m*n^3 + 84*m*n"
            )
        );
    }

    #[test]
    fn totals() {
        assert_eq!(gf(3).total, BigInt::from(6));
        assert_eq!(gf(4).total, BigInt::from(34));
        assert_eq!(two_face_total::<BigInt>(2).unwrap(), BigInt::from(1));
        assert_eq!(two_face_total::<BigInt>(3).unwrap(), BigInt::from(6));
        assert_eq!(two_face_total::<BigInt>(5).unwrap(), BigInt::from(210));
        assert_eq!(two_face_total::<BigInt>(6).unwrap(), BigInt::from(1452));
    }

    #[test]
    fn oracle_agrees_with_subtraction() {
        for r in 2..=6 {
            let oracle = connected_two_face_oracle::<BigInt>(r, &EnumOptions::default()).unwrap();
            assert_eq!(oracle, gf(r).gf, "r = {r}");
            assert_eq!(
                oracle.coefficient_sum(),
                two_face_total::<BigInt>(r).unwrap()
            );
        }
    }

    #[test]
    fn rejects_small_and_large_r() {
        assert!(two_face_gf::<BigInt>(1, &EnumOptions::default()).is_err());
        assert!(two_face_total::<BigInt>(1).is_err());
        let tight = EnumOptions {
            ceiling: 5,
            ..EnumOptions::default()
        };
        assert!(matches!(
            two_face_gf::<BigInt>(6, &tight),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(connected_two_face_oracle::<BigInt>(6, &tight).is_err());
    }
}
