//! Exact generating polynomials for rooted hypermaps with one or two faces.
//!
//! `P_r(m, n) = Σ h_r(e, v) m^e n^v` counts rooted one-face hypermaps with `r`
//! darts by edges `e` and vertices `v`. Three independent routes compute it:
//!
//! * [`oracle`]: brute force over `Sym_r`, `O(r · r!)`;
//! * [`closed_form`]: the alternating binomial sum of rising factorials;
//! * [`recursion`]: the three-term recurrence, with its telescoping certificate.
//!
//! [`two_face`] extends the count to two faces. All arithmetic is exact and
//! generic over the coefficient ring (see [`Coefficient`]); the aliases below
//! fix it to [`BigInt`].

pub mod closed_form;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod recursion;
pub mod scalar;
pub mod table;
pub mod two_face;

pub use num_bigint::BigInt;

pub use closed_form::{
    avg_trace_power, avg_trace_power_alt, closed_form_p, rising_ratio, stirling_row,
    RisingFactorialPoly,
};
pub use error::{Error, Result};
pub use oracle::{
    coefficient_table, enumerate_p, enumerate_p_multi, genus_tabulate, EnumOptions, FaceShape,
};
pub use perm::{is_transitive, permutations, CycleProfile, Permutation};
pub use poly::BivarPoly;
pub use rational::ExactRational;
pub use recursion::{
    recursion_init, recursion_p, recursion_stream, telescoping_check, verify_certificate,
    RecurrenceState,
};
pub use scalar::{factorial, Coefficient};
pub use table::{CoeffRow, CoeffTable};
pub use two_face::{connected_two_face_oracle, two_face_gf, two_face_total, TwoFaceResult};

/// Polynomial with arbitrary-precision coefficients.
pub type Poly = BivarPoly<BigInt>;
/// Polynomial with 128-bit coefficients; exact until coefficients overflow.
pub type Poly128 = BivarPoly<i128>;
/// Arbitrary-precision rational.
pub type Rational = ExactRational<BigInt>;
pub type TwoFace = TwoFaceResult<BigInt>;
