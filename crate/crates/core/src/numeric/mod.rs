//! Integer, rational and fixed-point arithmetic shared by every other module.
//!
//! Integers and rationals are `num-bigint` / `num-rational` types. Rationals
//! are always kept in lowest terms with a positive denominator; their text
//! form is `num/den`, with the denominator dropped when it is 1.

mod combinatorics;
mod fixed;
mod primes;
mod rational;

pub use combinatorics::{binomial, binomial_row, factorial};
pub use fixed::{fixed_from_rational, round_div_half_even, FixedReal};
pub use primes::{is_prime, primes_up_to};
pub use rational::{parse_rational, rational_from_ints, Rational};

pub use num_bigint::BigInt;
