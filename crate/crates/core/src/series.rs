//! Exact Taylor (and Laurent) coefficients driven by Bernoulli numbers:
//!
//! | tag           | function          | coefficient of `x^m`                               |
//! |---------------|-------------------|----------------------------------------------------|
//! | `exp_gen`     | `x / (e^x - 1)`   | `B_m / m!`                                         |
//! | `x_coth_half` | `(x/2) coth(x/2)` | `B_m / m!` for even `m`, else 0                    |
//! | `coth`        | `coth x`          | `2^(2n) B_2n / (2n)!`, `m = 2n - 1`                 |
//! | `cot`         | `cot x`           | `(-1)^n 2^(2n) B_2n / (2n)!`                        |
//! | `tanh`        | `tanh x`          | `2^(2n) (2^(2n) - 1) B_2n / (2n)!`                  |
//! | `tan`         | `tan x`           | `(-1)^n 2^(2n) (1 - 2^(2n)) B_2n / (2n)!`           |
//!
//! Powers of two coming from the `(2x)` substitutions are folded into the
//! coefficients. `coth` and `cot` start at the `x^-1` term, whose coefficient is 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_table, BernoulliTable};
use crate::error::{Error, Result};
use crate::numeric::{factorial, fixed_from_rational, FixedReal, Rational};
use crate::zeta::pi_fixed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionTag {
    ExpGen,
    XCothHalf,
    Coth,
    Cot,
    Tanh,
    Tan,
}

impl FunctionTag {
    pub const ALL: [FunctionTag; 6] = [
        FunctionTag::ExpGen,
        FunctionTag::XCothHalf,
        FunctionTag::Coth,
        FunctionTag::Cot,
        FunctionTag::Tanh,
        FunctionTag::Tan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionTag::ExpGen => "exp_gen",
            FunctionTag::XCothHalf => "x_coth_half",
            FunctionTag::Coth => "coth",
            FunctionTag::Cot => "cot",
            FunctionTag::Tanh => "tanh",
            FunctionTag::Tan => "tan",
        }
    }

    /// Lowest power of `x` with a coefficient.
    pub fn min_order(self) -> i64 {
        match self {
            FunctionTag::Coth | FunctionTag::Cot => -1,
            _ => 0,
        }
    }

    /// Largest Bernoulli index needed for orders up to `max_order`.
    fn bernoulli_index(self, max_order: i64) -> u32 {
        let idx = match self {
            FunctionTag::ExpGen | FunctionTag::XCothHalf => max_order,
            _ => max_order + 1,
        };
        u32::try_from(idx.max(0)).expect("order too large")
    }

    // The series converge for |x| below this multiple of pi/2.
    fn radius_in_half_pi(self) -> u32 {
        match self {
            FunctionTag::ExpGen => 4,
            FunctionTag::XCothHalf | FunctionTag::Coth | FunctionTag::Cot => 2,
            FunctionTag::Tanh | FunctionTag::Tan => 1,
        }
    }
}

impl fmt::Display for FunctionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown function tag {s:?}")))
    }
}

fn check_order(tag: FunctionTag, m: i64) -> Result<()> {
    if m < tag.min_order() {
        return Err(Error::OrderOutOfDomain {
            tag: tag.name(),
            order: m,
        });
    }
    Ok(())
}

pub(crate) fn coeff_from_table(
    tag: FunctionTag,
    m: i64,
    table: &BernoulliTable,
) -> Result<Rational> {
    check_order(tag, m)?;
    let idx = tag.bernoulli_index(m);
    let b = &table[idx];
    let c = match tag {
        FunctionTag::ExpGen => b / factorial(m as u64),
        FunctionTag::XCothHalf => {
            if m % 2 == 1 {
                Rational::zero()
            } else {
                b / factorial(m as u64)
            }
        }
        _ => {
            // odd functions (coth and cot have their x^-1 pole term)
            if m.rem_euclid(2) == 0 {
                return Ok(Rational::zero());
            }
            let two_n = idx;
            let n = two_n / 2;
            let four_n: BigInt = BigInt::one() << two_n;
            let base = b * &four_n / factorial(u64::from(two_n));
            let negate = n % 2 == 1;
            match tag {
                FunctionTag::Coth => base,
                FunctionTag::Cot => signed(base, negate),
                FunctionTag::Tanh => base * (four_n - 1),
                FunctionTag::Tan => signed(base * (BigInt::one() - four_n), negate),
                FunctionTag::ExpGen | FunctionTag::XCothHalf => unreachable!(),
            }
        }
    };
    Ok(c)
}

fn signed(q: Rational, negate: bool) -> Rational {
    if negate {
        -q
    } else {
        q
    }
}

/// Exact coefficient of `x^m` in the expansion named by `tag`.
///
/// Orders below [`FunctionTag::min_order`] are rejected. Orders the function's
/// parity rules out are accepted and give 0.
pub fn expansion_coeff(tag: FunctionTag, m: i64) -> Result<Rational> {
    check_order(tag, m)?;
    let table = bernoulli_table(tag.bernoulli_index(m));
    coeff_from_table(tag, m, &table)
}

/// `(m, coeff)` for every order from the tag's lowest up to `max_order`,
/// sharing one Bernoulli table.
pub fn expansion_coeffs(tag: FunctionTag, max_order: i64) -> Result<Vec<(i64, Rational)>> {
    check_order(tag, max_order)?;
    let table = bernoulli_table(tag.bernoulli_index(max_order));
    (tag.min_order()..=max_order)
        .map(|m| coeff_from_table(tag, m, &table).map(|c| (m, c)))
        .collect()
}

/// Partial sum of the expansion through `x^order`, at the scale of `x`.
///
/// `x` must lie strictly inside the disc of convergence: `|x| < pi/2` for
/// `tan`/`tanh`, `|x| < pi` for `cot`/`coth`/`x_coth_half`, `|x| < 2 pi` for
/// `exp_gen`. `cot` and `coth` also reject `x = 0`.
pub fn evaluate_truncated(tag: FunctionTag, x: &FixedReal, order: i64) -> Result<FixedReal> {
    if order < 1 {
        return Err(Error::OrderOutOfDomain {
            tag: tag.name(),
            order,
        });
    }
    let s = x.scale_bits();
    let radius = pi_fixed(s + 8)
        .mul_int(&BigInt::from(tag.radius_in_half_pi()))
        .div_int(&BigInt::from(2));
    let outside = x.abs().cmp_value(&radius) != std::cmp::Ordering::Less;
    let pole = tag.min_order() < 0 && x.is_zero();
    if outside || pole {
        return Err(Error::OutsideDomain { tag: tag.name() });
    }

    let w = s + 16 + (64 - order.leading_zeros());
    let xw = x.rescale(w);
    let mut power = if tag.min_order() < 0 {
        &FixedReal::from_integer(1, w) / &xw
    } else {
        FixedReal::from_integer(1, w)
    };
    let mut sum = FixedReal::zero(w);
    for (_, c) in expansion_coeffs(tag, order)? {
        if !c.is_zero() {
            sum = &sum + &(&fixed_from_rational(&c, w) * &power);
        }
        power = &power * &xw;
    }
    Ok(sum.rescale(s))
}
