//! Sparse bivariate polynomials in the formal variables `m` (edges) and `n` (vertices).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Sparse polynomial `Σ c · m^e · n^v` with exact signed coefficients.
///
/// Zero coefficients are never stored, so structural equality of the term maps
/// is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coefficient> Default for BivarPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> BivarPoly<C> {
    pub fn zero() -> Self {
        BivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · m^e · n^v`
    pub fn monomial(c: C, e: u32, v: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, v, c);
        p
    }

    /// The variable `m`.
    pub fn m() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    /// The variable `n`.
    pub fn n() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// Builds a polynomial from `(e, v, c)` triples, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, v, c) in terms {
            p.add_term(e, v, c);
        }
        p
    }

    /// Outer product `a(m) · b(n)` of two univariate coefficient vectors,
    /// indexed by exponent.
    pub fn outer(in_m: &[C], in_n: &[C]) -> Self {
        let mut p = Self::zero();
        for (e, a) in in_m.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (v, b) in in_n.iter().enumerate() {
                if !b.is_zero() {
                    p.add_term(e as u32, v as u32, a.clone() * b.clone());
                }
            }
        }
        p
    }

    /// Univariate polynomial in `m` from coefficients indexed by exponent.
    pub fn univariate_m(coeffs: &[C]) -> Self {
        Self::outer(coeffs, &[C::one()])
    }

    /// Univariate polynomial in `n` from coefficients indexed by exponent.
    pub fn univariate_n(coeffs: &[C]) -> Self {
        Self::outer(&[C::one()], coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m^e n^v` (zero when absent).
    pub fn coeff(&self, e: u32, v: u32) -> C {
        self.terms.get(&(e, v)).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order: `e` descending, then `v` descending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &C)> + '_ {
        self.terms.iter().rev().map(|(&(e, v), c)| (e, v, c))
    }

    /// Adds `c · m^e n^v` in place, pruning a cancelled term.
    pub fn add_term(&mut self, e: u32, v: u32, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((e, v)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&key, c)| (key, c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Termwise exact quotient by a positive integer.
    pub fn div_exact(&self, d: &C) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "exact divisor must be positive, got {d}"
            )));
        }
        let mut terms = BTreeMap::new();
        for (&(e, v), c) in &self.terms {
            let (q, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::NotDivisible {
                    e,
                    v,
                    coeff: c.to_string(),
                    divisor: d.to_string(),
                });
            }
            terms.insert((e, v), q);
        }
        Ok(BivarPoly { terms })
    }

    /// Exact value at `m = m0`, `n = n0`.
    pub fn eval(&self, m0: &C, n0: &C) -> C {
        let (max_e, max_v) = self.max_exponents();
        let m_pow = powers(m0, max_e);
        let n_pow = powers(n0, max_v);
        self.terms.iter().fold(C::zero(), |acc, (&(e, v), c)| {
            acc + c.clone() * m_pow[e as usize].clone() * n_pow[v as usize].clone()
        })
    }

    /// The polynomial with the roles of `m` and `n` exchanged.
    pub fn swap_vars(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(e, v), c)| ((v, e), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `n = 1`, returning the coefficients in `m` indexed by exponent.
    pub fn at_n_one(&self) -> Vec<C> {
        if self.is_zero() {
            return Vec::new();
        }
        let (max_e, _) = self.max_exponents();
        let mut out = vec![C::zero(); max_e as usize + 1];
        for (&(e, _), c) in &self.terms {
            out[e as usize] = out[e as usize].clone() + c.clone();
        }
        out
    }

    /// Largest exponent of `m` and of `n` appearing in any term.
    pub fn max_exponents(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(me, mv), &(e, v)| (me.max(e), mv.max(v)))
    }

    /// Sum of all coefficients, i.e. the value at `(1, 1)`.
    pub fn coefficient_sum(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Converts the coefficients to another scalar type.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> BivarPoly<D> {
        BivarPoly::from_terms(self.terms.iter().map(|(&(e, v), c)| (e, v, f(c))))
    }
}

fn powers<C: Coefficient>(x: &C, max: u32) -> Vec<C> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(C::one());
    for i in 1..=max as usize {
        let next = out[i - 1].clone() * x.clone();
        out.push(next);
    }
    out
}

impl<C: Coefficient> AddAssign<&BivarPoly<C>> for BivarPoly<C> {
    fn add_assign(&mut self, rhs: &BivarPoly<C>) {
        for (&(e, v), c) in &rhs.terms {
            self.add_term(e, v, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&BivarPoly<C>> for BivarPoly<C> {
    fn sub_assign(&mut self, rhs: &BivarPoly<C>) {
        for (&(e, v), c) in &rhs.terms {
            self.add_term(e, v, -c.clone());
        }
    }
}

impl<C: Coefficient> Add for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn add(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn add(mut self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn sub(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn sub(mut self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn neg(self) -> BivarPoly<C> {
        BivarPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn mul(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = BivarPoly::zero();
        for (&(e1, v1), a) in &self.terms {
            for (&(e2, v2), b) in &rhs.terms {
                out.add_term(e1 + e2, v1 + v2, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn mul(self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: u32, v: u32) -> fmt::Result {
    let mut first = true;
    for (name, exp) in [("m", e), ("n", v)] {
        if exp == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if exp == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{exp}")?;
        }
    }
    Ok(())
}

/// Canonical rendering, e.g. `m^3*n + 3*m^2*n^2 + m*n^3 + m*n`.
impl<C: Coefficient> fmt::Display for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, v, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if e == 0 && v == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, e, v)?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> FromStr for BivarPoly<C> {
    type Err = Error;

    /// Parses the canonical rendering (term order and spacing are not enforced).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (e, v, c) = parse_term::<C>(&body[..end])?;
            out.add_term(e, v, if negative { -c } else { c });
            rest = &body[end..];
        }
        Ok(out)
    }
}

fn parse_term<C: Coefficient>(term: &str) -> Result<(u32, u32, C)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut c = C::one();
    let (mut e, mut v) = (0u32, 0u32);
    for factor in term.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, x)) => (
                b,
                x.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        match base {
            "m" => e += exp,
            "n" => v += exp,
            digits if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                if exp != 1 {
                    return Err(Error::Parse(format!("exponent on constant {factor:?}")));
                }
                let k = digits
                    .parse::<C>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {digits:?}")))?;
                c = c * k;
            }
            _ => return Err(Error::Parse(format!("unexpected factor {factor:?}"))),
        }
    }
    Ok((e, v, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = BivarPoly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn mn() -> P {
        P::monomial(BigInt::from(1), 1, 1)
    }

    #[test]
    fn additive_inverse_is_empty() {
        let sum = &mn() + &(-mn());
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn add_disjoint_and_doubling() {
        assert_eq!(&mn() + &p("m^2*n^2"), p("m^2*n^2 + m*n"));
        assert_eq!(&mn() + &mn(), p("2*m*n"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&mn() * &(P::m() + P::n()), p("m^2*n + m*n^2"));
        assert_eq!(&mn() * &P::one(), mn());
        assert_eq!((P::m() - P::n()) * (P::m() + P::n()), p("m^2 - n^2"));
    }

    #[test]
    fn div_exact_examples() {
        let q = p("4*m^2*n^2 + 2*m*n").div_exact(&BigInt::from(2)).unwrap();
        assert_eq!(q, p("2*m^2*n^2 + m*n"));
        assert_eq!(p("6*m*n").div_exact(&BigInt::from(6)).unwrap(), mn());
    }

    #[test]
    fn div_exact_reports_remainder() {
        let err = p("3*m*n + 2").div_exact(&BigInt::from(2)).unwrap_err();
        assert_eq!(
            err,
            Error::NotDivisible {
                e: 1,
                v: 1,
                coeff: "3".into(),
                divisor: "2".into()
            }
        );
        assert!(p("m").div_exact(&BigInt::from(0)).is_err());
    }

    #[test]
    fn eval_examples() {
        let one = BigInt::from(1);
        assert_eq!(p("m^2*n + m*n^2").eval(&one, &one), BigInt::from(2));
        assert_eq!(
            p("m^3*n + 3*m^2*n^2 + m*n^3 + m*n").eval(&one, &one),
            BigInt::from(6)
        );
        assert_eq!(
            P::zero().eval(&BigInt::from(5), &BigInt::from(7)),
            BigInt::from(0)
        );
        assert_eq!(
            p("m^2 - n").eval(&BigInt::from(3), &BigInt::from(2)),
            BigInt::from(7)
        );
    }

    #[test]
    fn canonical_rendering() {
        let poly = p("m*n + m*n^3 + 3*m^2*n^2 + m^3*n");
        assert_eq!(poly.to_string(), "m^3*n + 3*m^2*n^2 + m*n^3 + m*n");
        assert_eq!(p("-m^2 + 1 - 2*n").to_string(), "-m^2 - 2*n + 1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::constant(BigInt::from(-4)).to_string(), "-4");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<P>().is_err());
        assert!("m*x".parse::<P>().is_err());
        assert!("m^".parse::<P>().is_err());
        assert!("m + ".parse::<P>().is_err());
    }

    #[test]
    fn n_one_marginal() {
        let poly = p("m^3*n + 3*m^2*n^2 + m*n^3 + m*n");
        let expected: Vec<BigInt> = [0, 2, 3, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(poly.at_n_one(), expected);
    }

    #[test]
    fn works_over_machine_integers() {
        let a: BivarPoly<i64> = "2*m + n".parse().unwrap();
        let b: BivarPoly<i64> = "m - 3*n".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "2*m^2 - 5*m*n - 3*n^2");
    }
}
