//! Three-term recurrence for `P_r(m, n)` and its telescoping certificate.
//!
//! ```text
//! (r+3) P_{r+2} = (2r+3)(m+n) P_{r+1} + r[(r+1)^2 - (m-n)^2] P_r,   r >= 1
//! ```
//!
//! starting from `P_1 = mn` and `P_2 = mn(m+n)`. The certificate `G(r, k)`
//! witnesses the recurrence termwise on the hypergeometric summand `F(r, k)`
//! of the closed form. Both sides are multiplied by `(r+2)!` so the identity
//! is checked over integer polynomials.

use crate::closed_form::{binomial, rising_ratio};
use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::scalar::{coeff, coeff_i64, Coefficient};

/// Two consecutive polynomials `(P_{r-1}, P_r)` with `r = r_current`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceState<C> {
    r_current: usize,
    p_prev: BivarPoly<C>,
    p_curr: BivarPoly<C>,
}

/// State at `r = 2` holding `P_1 = mn` and `P_2 = m^2 n + m n^2`.
pub fn recursion_init<C: Coefficient>() -> RecurrenceState<C> {
    let mn = BivarPoly::monomial(C::one(), 1, 1);
    let p2 = &mn * &(BivarPoly::m() + BivarPoly::n());
    RecurrenceState {
        r_current: 2,
        p_prev: mn,
        p_curr: p2,
    }
}

impl<C: Coefficient> RecurrenceState<C> {
    pub fn r_current(&self) -> usize {
        self.r_current
    }

    /// `P_{r-1}`
    pub fn p_prev(&self) -> &BivarPoly<C> {
        &self.p_prev
    }

    /// `P_r`
    pub fn p_curr(&self) -> &BivarPoly<C> {
        &self.p_curr
    }

    /// Advances to `r + 1`.
    pub fn step(&self) -> Result<Self> {
        let r = self.r_current - 1;
        let m_plus_n = BivarPoly::m() + BivarPoly::n();
        let m_minus_n = BivarPoly::m() - BivarPoly::n();
        let r_plus_one_sq: C = coeff((r + 1) * (r + 1));
        let bracket = BivarPoly::constant(r_plus_one_sq) - &m_minus_n * &m_minus_n;
        let next = (&m_plus_n * &self.p_curr).scale(&coeff(2 * r + 3))
            + (&bracket * &self.p_prev).scale(&coeff(r));
        let next = next.div_exact(&coeff(r + 3))?;
        Ok(RecurrenceState {
            r_current: self.r_current + 1,
            p_prev: self.p_curr.clone(),
            p_curr: next,
        })
    }
}

/// `P_r` built by stepping the recurrence from the initial cases.
pub fn recursion_p<C: Coefficient>(r: usize) -> Result<BivarPoly<C>> {
    match r {
        0 => Err(Error::InvalidArgument("r must be at least 1".into())),
        1 => Ok(recursion_init::<C>().p_prev),
        _ => {
            let mut state = recursion_init::<C>();
            while state.r_current < r {
                state = state.step()?;
            }
            Ok(state.p_curr)
        }
    }
}

/// Yields `(r, P_r)` for `r = 1, 2, 3, ...` in one pass of the recurrence.
#[derive(Clone, Debug)]
pub struct RecursionStream<C> {
    state: RecurrenceState<C>,
    next_r: usize,
}

pub fn recursion_stream<C: Coefficient>() -> RecursionStream<C> {
    RecursionStream {
        state: recursion_init(),
        next_r: 1,
    }
}

impl<C: Coefficient> Iterator for RecursionStream<C> {
    type Item = Result<(usize, BivarPoly<C>)>;

    fn next(&mut self) -> Option<Self::Item> {
        let r = self.next_r;
        self.next_r += 1;
        match r {
            1 => Some(Ok((1, self.state.p_prev.clone()))),
            2 => Some(Ok((2, self.state.p_curr.clone()))),
            _ => match self.state.step() {
                Ok(next) => {
                    self.state = next;
                    Some(Ok((r, self.state.p_curr.clone())))
                }
                Err(e) => Some(Err(e)),
            },
        }
    }
}

/// The degree-3 factor of the certificate,
///
/// ```text
/// k^2 r - 3 k r^2 - mnr + 2r^3 + k^2 + km + kn - 7kr - 3mn - mr - nr
///     + 7r^2 - 4k - m - n + 8r + 3
/// ```
///
/// as a polynomial in `m` and `n`.
pub fn certificate_bracket<C: Coefficient>(r: i64, k: i64) -> BivarPoly<C> {
    let constant = k * k * r - 3 * k * r * r + 2 * r * r * r + k * k - 7 * k * r + 7 * r * r
        - 4 * k
        + 8 * r
        + 3;
    let linear = k - r - 1;
    let mixed = -r - 3;
    BivarPoly::from_terms([
        (0, 0, coeff_i64(constant)),
        (1, 0, coeff_i64(linear)),
        (0, 1, coeff_i64(linear)),
        (1, 1, coeff_i64(mixed)),
    ])
}

/// `s! · F(s, k)`, the closed-form summand with its `1/s!` cleared; zero
/// unless `0 <= k < s`.
pub fn summand_cleared<C: Coefficient>(s: usize, k: i64) -> BivarPoly<C> {
    if k < 0 || k >= s as i64 {
        return BivarPoly::zero();
    }
    let rising = rising_ratio::<C>(k, s);
    let weight: C = binomial(s as i64 - 1, k);
    let weight = if k % 2 == 0 { weight } else { -weight };
    BivarPoly::outer(rising.coeffs(), rising.coeffs()).scale(&weight)
}

/// `(r+2)! · G(r, k)`; zero unless `1 <= k <= r+1`.
///
/// The factorial quotients `(x+r-k)!/(x-k-1)!` expand to the `r+1` consecutive
/// factors `(x-k)(x-k+1)...(x-k+r)`.
pub fn certificate_cleared<C: Coefficient>(r: usize, k: i64) -> BivarPoly<C> {
    let ri = r as i64;
    if k < 1 || k > ri + 1 {
        return BivarPoly::zero();
    }
    let rising = rising_ratio::<C>(k, r + 1);
    let weight: C = binomial(ri, k - 1);
    let weight = if k % 2 == 0 { weight } else { -weight };
    let quotients = BivarPoly::outer(rising.coeffs(), rising.coeffs());
    (&quotients * &certificate_bracket(ri, k)).scale(&weight)
}

/// Left side of the termwise identity, times `(r+2)!`:
/// `(r+3)F(r+2,k) - (2r+3)(m+n)F(r+1,k) + r[(m-n)^2 - (r+1)^2]F(r,k)`.
pub fn certificate_lhs<C: Coefficient>(r: usize, k: i64) -> BivarPoly<C> {
    let m_plus_n = BivarPoly::m() + BivarPoly::n();
    let m_minus_n = BivarPoly::m() - BivarPoly::n();
    let bracket = &m_minus_n * &m_minus_n - BivarPoly::constant(coeff((r + 1) * (r + 1)));
    // (r+2)!/(r+2)! = 1, (r+2)!/(r+1)! = r+2, (r+2)!/r! = (r+1)(r+2)
    let top = summand_cleared::<C>(r + 2, k).scale(&coeff(r + 3));
    let middle = (&m_plus_n * &summand_cleared(r + 1, k)).scale(&coeff((2 * r + 3) * (r + 2)));
    let bottom = (&bracket * &summand_cleared(r, k)).scale(&coeff(r * (r + 1) * (r + 2)));
    top - middle + bottom
}

/// Checks `LHS(r, k) = G(r, k+1) - G(r, k)` as an exact polynomial identity.
pub fn verify_certificate<C: Coefficient>(r: usize, k: i64) -> bool {
    let rhs = certificate_cleared::<C>(r, k + 1) - certificate_cleared(r, k);
    certificate_lhs::<C>(r, k) == rhs
}

/// Checks that `Σ_{k=0}^{r+1} [G(r, k+1) - G(r, k)]` is the zero polynomial.
pub fn telescoping_check<C: Coefficient>(r: usize) -> bool {
    let mut total = BivarPoly::<C>::zero();
    for k in 0..=(r as i64 + 1) {
        total += &(certificate_cleared::<C>(r, k + 1) - certificate_cleared(r, k));
    }
    total.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = BivarPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    /// Literal transcription of the bracket, term by term.
    fn bracket_literal(r: i64, k: i64, m: i64, n: i64) -> i64 {
        k * k * r - 3 * k * r * r - m * n * r + 2 * r * r * r + k * k + k * m + k * n
            - 7 * k * r
            - 3 * m * n
            - m * r
            - n * r
            + 7 * r * r
            - 4 * k
            - m
            - n
            + 8 * r
            + 3
    }

    #[test]
    fn bracket_hand_expanded_points() {
        let eval = |r: i64, k: i64, m: i64, n: i64| certificate_bracket::<i64>(r, k).eval(&m, &n);
        // Worked by hand from the printed expression.
        assert_eq!(eval(1, 0, 0, 0), 20);
        assert_eq!(eval(2, 1, 3, 5), -55);
        assert_eq!(eval(3, 2, 1, 1), 46);
        for (r, k, m, n) in [(1, 0, 0, 0), (2, 1, 3, 5), (3, 2, 1, 1), (5, 4, -2, 7)] {
            assert_eq!(eval(r, k, m, n), bracket_literal(r, k, m, n));
        }
    }

    #[test]
    fn initial_state() {
        let s = recursion_init::<BigInt>();
        assert_eq!(s.p_prev(), &p("m*n"));
        assert_eq!(s.p_curr(), &p("m^2*n + m*n^2"));
        assert_eq!(s.r_current(), 2);
    }

    #[test]
    fn steps() {
        let s3 = recursion_init::<BigInt>().step().unwrap();
        assert_eq!(s3.r_current(), 3);
        assert_eq!(s3.p_curr(), &p("m^3*n + 3*m^2*n^2 + m*n^3 + m*n"));
        let s4 = s3.step().unwrap();
        let one = BigInt::from(1);
        assert_eq!(s4.p_curr().eval(&one, &one), BigInt::from(24));
        assert_eq!(s4.p_prev(), s3.p_curr());
    }

    #[test]
    fn recursion_matches_closed_form_to_twenty() {
        let mut stream = recursion_stream::<BigInt>();
        for r in 1..=20 {
            let (idx, poly) = stream.next().unwrap().unwrap();
            assert_eq!(idx, r);
            assert_eq!(
                poly,
                crate::closed_form::closed_form_p::<BigInt>(r).unwrap(),
                "r = {r}"
            );
            assert_eq!(poly, recursion_p::<BigInt>(r).unwrap());
        }
        assert!(recursion_p::<BigInt>(0).is_err());
    }

    #[test]
    fn certificate_small() {
        assert!(verify_certificate::<BigInt>(1, 0));
        assert!(certificate_lhs::<BigInt>(3, 5).is_zero());
        assert!(certificate_cleared::<BigInt>(3, 5).is_zero());
        assert!(certificate_cleared::<BigInt>(3, 6).is_zero());
        assert!(verify_certificate::<BigInt>(3, 5));
        for r in 1..=8 {
            for k in -1..=(r as i64 + 2) {
                assert!(verify_certificate::<BigInt>(r, k), "r = {r}, k = {k}");
            }
        }
    }

    #[test]
    fn certificate_is_not_vacuous() {
        assert!(!certificate_cleared::<BigInt>(1, 1).is_zero());
        assert!(!certificate_lhs::<BigInt>(2, 1).is_zero());
        // A corrupted bracket must break the identity.
        let broken = certificate_cleared::<BigInt>(2, 2) + P::monomial(BigInt::from(1), 0, 0);
        let rhs = broken - certificate_cleared(2, 1);
        assert_ne!(certificate_lhs::<BigInt>(2, 1), rhs);
    }

    #[test]
    fn summing_the_lhs_gives_the_recurrence() {
        for r in 1..=6usize {
            let total = (-1..=(r as i64 + 2)).fold(P::zero(), |acc, k| acc + certificate_lhs(r, k));
            assert!(total.is_zero(), "r = {r}");
        }
    }

    #[test]
    fn telescoping() {
        for r in [1, 2, 6] {
            assert!(telescoping_check::<BigInt>(r));
        }
    }
}
