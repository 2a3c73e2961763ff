//! Exact computation of Bernoulli numbers and the objects built from them.
//!
//! Three independent routes to `B_n` are provided:
//!
//! * the binomial recurrence `sum_{k<n} C(n,k) B_k = 0` ([`bernoulli::bernoulli_recurrence`]),
//! * the explicit double sum over signed binomials ([`bernoulli::bernoulli_double_sum`]),
//! * the zeta-function route, which computes a single `B_2k` directly from
//!   `2 (2k)! zeta(2k) / (2 pi)^(2k)` and rounds it onto the denominator given by
//!   the Clausen-von Staudt theorem ([`zeta::bernoulli_zeta`]).
//!
//! On top of these sit Faulhaber power sums, exact series coefficients for
//! `x/(e^x - 1)`, `coth`, `cot`, `tanh` and `tan`, and a Kummer-criterion scan
//! for irregular primes.
//!
//! All values use the convention `B_1 = -1/2`.

pub mod bernoulli;
pub mod error;
pub mod faulhaber;
pub mod irregular;
pub mod numeric;
pub mod series;
pub mod staudt_clausen;
pub mod zeta;

pub use bernoulli::{
    bernoulli_double_sum, bernoulli_recurrence, bernoulli_table, check_identity_6k, BernoulliTable,
};
pub use error::{Error, Result};
pub use faulhaber::{power_sum_exclusive, power_sum_inclusive, power_sum_poly, PowerSumPoly};
pub use irregular::{
    irregular_primes_up_to, is_regular, numerator_mod_p, IrregularPair, Regularity,
};

pub use numeric::{binomial, factorial, fixed_from_rational, primes_up_to, FixedReal, Rational};
pub use series::{evaluate_truncated, expansion_coeff, FunctionTag};

pub use staudt_clausen::{
    reconstruct_from_approx, sc_denominator, sc_fractional_part, FractionalPart,
};
pub use zeta::{
    bernoulli_estimate, bernoulli_zeta, pi_fixed, plan_precision, zeta_even, PrecisionPlan,
};
