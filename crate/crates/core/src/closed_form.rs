//! Polynomial-time construction of `P_r(m, n)` from the closed hypergeometric sum
//!
//! ```text
//! P_r(m, n) = 1/r! · Σ_{k=0}^{r-1} (-1)^k C(r-1, k) · (m-k)^{(r)} · (n-k)^{(r)}
//! ```
//!
//! where `x^{(r)} = x (x+1) ... (x+r-1)` is the rising factorial. Gamma quotients
//! are never evaluated as such: the product form stays polynomial at the
//! integer points where the gammas have poles, and its vanishing factor is what
//! truncates the sum once `k >= m`.

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::ExactRational;
use crate::scalar::{coeff, coeff_i64, factorial, Coefficient};

/// `∏_{j=0}^{length-1} (x - base_shift + j)`, expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RisingFactorialPoly<C> {
    base_shift: i64,
    length: usize,
    /// Coefficients by ascending degree; `coeffs[length] == 1`.
    coeffs: Vec<C>,
}

impl<C: Coefficient> RisingFactorialPoly<C> {
    pub fn base_shift(&self) -> i64 {
        self.base_shift
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn degree(&self) -> usize {
        self.length
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Value at the integer `x`.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn in_m(&self) -> BivarPoly<C> {
        BivarPoly::univariate_m(&self.coeffs)
    }

    pub fn in_n(&self) -> BivarPoly<C> {
        BivarPoly::univariate_n(&self.coeffs)
    }
}

/// The monic degree-`length` polynomial `(x-k)(x-k+1)...(x-k+length-1)`,
/// i.e. `Γ(x+length-k)/Γ(x-k)` with its removable poles filled in.
pub fn rising_ratio<C: Coefficient>(k: i64, length: usize) -> RisingFactorialPoly<C> {
    let mut coeffs = vec![C::one()];
    for j in 0..length as i64 {
        // multiply by (x + shift)
        let shift: C = coeff_i64(j - k);
        let mut next = vec![C::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] = next[d + 1].clone() + c.clone();
            next[d] = next[d].clone() + c.clone() * shift.clone();
        }
        coeffs = next;
    }
    RisingFactorialPoly {
        base_shift: k,
        length,
        coeffs,
    }
}

/// Row `n` of Pascal's triangle, built by the additive recurrence.
pub fn pascal_row<C: Coefficient>(n: usize) -> Vec<C> {
    let mut row = vec![C::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(C::one());
        for pair in row.windows(2) {
            next.push(pair[0].clone() + pair[1].clone());
        }
        next.push(C::one());
        row = next;
    }
    row
}

/// `C(n, k)`, zero outside `0..=n`.
pub fn binomial<C: Coefficient>(n: i64, k: i64) -> C {
    if n < 0 || k < 0 || k > n {
        return C::zero();
    }
    pascal_row::<C>(n as usize).swap_remove(k as usize)
}

fn require_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidArgument(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `r! · P_r(m, n)`: the signed sum before the final exact division.
pub fn closed_form_numerator<C: Coefficient>(r: usize) -> Result<BivarPoly<C>> {
    require_positive("r", r)?;
    let binomials = pascal_row::<C>(r - 1);
    let mut sum = BivarPoly::zero();
    for (k, weight) in binomials.into_iter().enumerate() {
        let rising = rising_ratio::<C>(k as i64, r);
        let term = BivarPoly::outer(rising.coeffs(), rising.coeffs());
        let weight = if k % 2 == 0 { weight } else { -weight };
        sum += &term.scale(&weight);
    }
    Ok(sum)
}

/// `P_r(m, n)` from the closed form.
pub fn closed_form_p<C: Coefficient>(r: usize) -> Result<BivarPoly<C>> {
    closed_form_numerator::<C>(r)?.div_exact(&factorial(r))
}

/// Unsigned Stirling numbers of the first kind `[c_r(1), ..., c_r(r)]`: the
/// coefficients of `m (m+1) ... (m+r-1)`.
pub fn stirling_row<C: Coefficient>(r: usize) -> Result<Vec<C>> {
    require_positive("r", r)?;
    let mut coeffs = rising_ratio::<C>(0, r).coeffs;
    coeffs.remove(0);
    Ok(coeffs)
}

/// `x (x+1) ... (x+len-1)` as a number.
fn rising_value<C: Coefficient>(x: &C, len: usize) -> C {
    (0..len).fold(C::one(), |acc, j| acc * (x.clone() + coeff(j)))
}

fn check_moment_args(m: usize, n: usize, r: usize) -> Result<()> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    require_positive("r", r)
}

/// Mean of `Tr[(ρ_A)^r]` over random pure states of an `m × n` bipartite
/// system: `P_r(m, n) / (mn (mn+1) ... (mn+r-1))`.
pub fn avg_trace_power<C: Coefficient>(m: usize, n: usize, r: usize) -> Result<ExactRational<C>> {
    check_moment_args(m, n, r)?;
    let poly = closed_form_p::<C>(r)?;
    avg_trace_power_from(&poly, m, n, r)
}

/// As [`avg_trace_power`], reusing an already computed `P_r`.
pub fn avg_trace_power_from<C: Coefficient>(
    p_r: &BivarPoly<C>,
    m: usize,
    n: usize,
    r: usize,
) -> Result<ExactRational<C>> {
    check_moment_args(m, n, r)?;
    let value = p_r.eval(&coeff(m), &coeff(n));
    ExactRational::new(value, rising_value(&coeff(m * n), r))
}

/// The same moment through the `m`-truncated sum
///
/// ```text
/// Γ(mn)/(r Γ(mn+r)) · Σ_{k=0}^{m-1} (-1)^k Γ(m+r-k) Γ(n+r-k) / (k! Γ(r-k) Γ(m-k) Γ(n-k))
/// ```
///
/// with `1/Γ` at non-positive integers taken as zero. Used to cross-check
/// [`avg_trace_power`].
pub fn avg_trace_power_alt<C: Coefficient>(
    m: usize,
    n: usize,
    r: usize,
) -> Result<ExactRational<C>> {
    check_moment_args(m, n, r)?;
    let mut sum = ExactRational::zero();
    // 1/Γ(r-k) vanishes for k >= r.
    for k in 0..m.min(r) {
        let gm = rising_value::<C>(&coeff(m - k), r);
        // Γ(n+r-k)/Γ(n-k) as a product; it contains a zero factor when n <= k.
        let gn = rising_ratio::<C>(k as i64, r).eval(&coeff(n));
        let num = if k % 2 == 0 { gm * gn } else { -(gm * gn) };
        let den = factorial::<C>(k) * factorial::<C>(r - k - 1);
        sum = sum + ExactRational::new(num, den)?;
    }
    let prefactor = ExactRational::new(C::one(), coeff::<C>(r) * rising_value(&coeff(m * n), r))?;
    Ok(sum * prefactor)
}
