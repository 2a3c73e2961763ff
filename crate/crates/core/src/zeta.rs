//! pi, e and zeta at even arguments in binary fixed point, the asymptotic
//! size of `B_2k`, and direct computation of a single `B_2k` from
//!
//! ```text
//! B_2k = (-1)^(k-1) * 2 (2k)! * zeta(2k) / (2 pi)^(2k)
//! ```
//!
//! rounded onto the Clausen-von Staudt denominator. No smaller Bernoulli
//! number is needed, so distinct indices can be computed independently.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::even_index_sign;
use crate::error::{Error, Result};
use crate::numeric::{factorial, round_div_half_even, FixedReal, Rational};
use crate::staudt_clausen::{reconstruct_from_approx, sc_denominator};

/// Extra bits carried by [`plan_precision`] on top of the digit budget.
pub const DEFAULT_GUARD_BITS: u32 = 32;

fn bit_length(n: u64) -> u32 {
    64 - n.leading_zeros()
}

fn check_index(two_k: u64) -> Result<()> {
    if two_k < 2 || !two_k.is_multiple_of(2) {
        return Err(Error::InvalidEvenIndex(two_k));
    }
    Ok(())
}

// sum_j (-1)^j / ((2j+1) x^(2j+1)) with truncating steps, as a mantissa at `scale`.
// Each step loses under one ulp.
fn arctan_inv(x: u64, scale: u32) -> BigInt {
    let x_sq = BigInt::from(x) * x;
    let mut power = (BigInt::one() << scale) / x;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x_sq;
        j += 1;
    }
    sum
}

/// pi via Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
///
/// The result is within `2^-scale_bits` of pi (one rounding plus less than
/// half an ulp of accumulated truncation).
pub fn pi_fixed(scale_bits: u32) -> FixedReal {
    let guard = bit_length(u64::from(scale_bits)) + 8;
    let w = scale_bits + guard;
    let m = arctan_inv(5, w) * 16 - arctan_inv(239, w) * 4;
    FixedReal::new(m, w).rescale(scale_bits)
}

/// Euler's number from `sum 1/n!`.
pub fn euler_e(scale_bits: u32) -> FixedReal {
    let guard = bit_length(u64::from(scale_bits)) + 8;
    let w = scale_bits + guard;
    let mut term = BigInt::one() << w;
    let mut sum = term.clone();
    let mut n = 1u64;
    while !term.is_zero() {
        term /= n;
        sum += &term;
        n += 1;
    }
    FixedReal::new(sum, w).rescale(scale_bits)
}

/// `zeta(two_k)` to within `2^-scale_bits`.
///
/// Large arguments use the direct sum `sum n^-2k`, truncated once the tail
/// bound `N^(1-2k)/(2k-1)` drops below `2^(-scale_bits-2)`. When that would
/// need more terms than Borwein's accelerated alternating series (small
/// `2k` at high precision), the latter is used instead.
pub fn zeta_even(two_k: u64, scale_bits: u32) -> Result<FixedReal> {
    check_index(two_k)?;
    let borwein_terms = borwein_term_count(scale_bits);
    // log2 of the direct-sum cutoff, ignoring the (2k-1) factor in the tail bound
    let direct_log2 = f64::from(scale_bits + 2) / (two_k - 1) as f64;
    if direct_log2 < 40.0 && direct_log2.exp2() <= borwein_terms as f64 {
        Ok(zeta_direct(two_k, scale_bits))
    } else {
        Ok(zeta_borwein(two_k, scale_bits))
    }
}

pub(crate) fn zeta_direct(two_k: u64, scale_bits: u32) -> FixedReal {
    let exp = usize::try_from(two_k).expect("index fits in usize");
    let tail_exp = exp - 1;
    // tail after N terms is below 2^-(s+2) once N^(2k-1) (2k-1) > 2^(s+2)
    let tail_target: BigInt = BigInt::one() << (scale_bits + 2);
    let mut n = 1u64;
    loop {
        let bound = num_traits::pow(BigInt::from(n), tail_exp) * (two_k - 1);
        if bound > tail_target {
            break;
        }
        n += 1;
    }
    let guard = bit_length(n) + 4;
    let w = scale_bits + guard;
    let one: BigInt = BigInt::one() << w;
    let sum = (1..=n).fold(BigInt::zero(), |acc, j| {
        acc + round_div_half_even(&one, &num_traits::pow(BigInt::from(j), exp))
    });
    FixedReal::new(sum, w).rescale(scale_bits)
}

fn borwein_term_count(scale_bits: u32) -> u64 {
    // truncation error <= 6 / (3 + sqrt 8)^n; log2(3 + sqrt 8) > 2.54
    ((f64::from(scale_bits) + 6.0) / 2.54).ceil() as u64 + 1
}

/// Borwein's algorithm: `eta(s) = -1/d_n sum_{j<n} (-1)^j (d_j - d_n) / (j+1)^s`
/// with integer weights `d_j`, then `zeta(s) = eta(s) / (1 - 2^(1-s))`.
pub(crate) fn zeta_borwein(two_k: u64, scale_bits: u32) -> FixedReal {
    let n = borwein_term_count(scale_bits);
    // d_j = sum_{i<=j} t_i, t_i = n (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut t = BigInt::one();
    let mut acc = BigInt::one();
    d.push(acc.clone());
    for i in 0..n {
        t = t * (2 * (n + i) * (n - i)) / ((2 * i + 1) * (i + 1));
        acc += &t;
        d.push(acc.clone());
    }
    let d_n = &d[n as usize];

    let guard = bit_length(n) + 6;
    let w = scale_bits + guard;
    let one: BigInt = BigInt::one() << w;
    let exp = usize::try_from(two_k).expect("index fits in usize");
    let mut s = BigInt::zero();
    for j in 0..n {
        let u = round_div_half_even(&one, &num_traits::pow(BigInt::from(j + 1), exp));
        let term = (d_n - &d[j as usize]) * u;
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    let eta = round_div_half_even(&s, d_n);
    // zeta = eta * 2^(2k-1) / (2^(2k-1) - 1)
    let p: BigInt = BigInt::one() << (two_k - 1);
    let zeta = round_div_half_even(&(eta * &p), &(p - 1));
    FixedReal::new(zeta, w).rescale(scale_bits)
}

/// Signed asymptotic estimate `(-1)^(k-1) 4 (k / (pi e))^(2k) sqrt(pi k)`
/// at scale 64.
pub fn bernoulli_estimate(two_k: u64) -> Result<FixedReal> {
    check_index(two_k)?;
    const OUT_SCALE: u32 = 64;
    let k = two_k / 2;
    let exp = u32::try_from(two_k).expect("index too large for the estimate");
    let w = OUT_SCALE + 32 + 2 * bit_length(two_k);
    let pi = pi_fixed(w);
    let e = euler_e(w);
    let k_fixed = FixedReal::from_integer(k, w);
    let base = &k_fixed / &(&pi * &e);
    let root = pi.mul_int(&BigInt::from(k)).sqrt();
    let magnitude = (&base.powi(exp) * &root).mul_int(&BigInt::from(4));
    let est = magnitude.rescale(OUT_SCALE);
    Ok(if even_index_sign(two_k) < 0 {
        -est
    } else {
        est
    })
}

/// Working precision for the direct zeta computation of one `B_2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionPlan {
    pub two_k: u64,
    /// Predicted decimal length of the reduced numerator.
    pub estimated_decimal_digits: u64,
    pub working_scale_bits: u32,
    pub guard_bits: u32,
}

impl PrecisionPlan {
    /// Bits needed to resolve `estimated_decimal_digits` decimal digits.
    pub fn digit_bits(&self) -> u32 {
        digits_to_bits(self.estimated_decimal_digits)
    }

    /// The same plan with a different guard allowance.
    pub fn with_guard_bits(&self, guard_bits: u32) -> Self {
        Self {
            working_scale_bits: self.working_scale_bits - self.guard_bits + guard_bits,
            guard_bits,
            ..*self
        }
    }
}

fn digits_to_bits(digits: u64) -> u32 {
    // ceil(digits * log2 10), with log2 10 < 3.32193
    let bits = (digits * 332_193).div_ceil(100_000);
    u32::try_from(bits).expect("precision plan overflows u32 bits")
}

/// Digit budget `ceil(log10 |estimate|) + ceil(log10 D) + 1`, with working bits
/// covering those digits plus [`DEFAULT_GUARD_BITS`] and the
/// `log2(2k)` bits that the power `(2 pi)^(2k)` amplifies errors by.
pub fn plan_precision(two_k: u64) -> Result<PrecisionPlan> {
    let est = bernoulli_estimate(two_k)?;
    let den = sc_denominator(two_k)?;
    let den_fixed = FixedReal::from_integer(den, 0);
    let magnitude = est.ceil_log10_abs().unwrap_or(0);
    let den_digits = den_fixed.ceil_log10_abs().unwrap_or(0);
    let digits = (magnitude + den_digits + 1).max(1) as u64;
    let guard_bits = DEFAULT_GUARD_BITS;
    let working_scale_bits = digits_to_bits(digits) + guard_bits + bit_length(two_k) + 2;
    Ok(PrecisionPlan {
        two_k,
        estimated_decimal_digits: digits,
        working_scale_bits,
        guard_bits,
    })
}

/// Approximation of `B_2k` from the zeta relation at the plan's working scale.
pub fn bernoulli_zeta_approx(plan: &PrecisionPlan) -> Result<FixedReal> {
    let two_k = plan.two_k;
    check_index(two_k)?;
    let exp = u32::try_from(two_k).expect("index too large");
    let w = plan.working_scale_bits;
    let two_pi = pi_fixed(w).mul_int(&BigInt::from(2));
    let denominator = two_pi.powi(exp);
    let numerator = zeta_even(two_k, w)?.mul_int(&(factorial(two_k) * 2));
    let value = &numerator / &denominator;
    Ok(if even_index_sign(two_k) < 0 {
        -value
    } else {
        value
    })
}

/// Exact `B_2k` by the zeta method under an explicit plan.
pub fn bernoulli_zeta_with_plan(plan: &PrecisionPlan) -> Result<Rational> {
    let approx = bernoulli_zeta_approx(plan)?;
    reconstruct_from_approx(plan.two_k, &approx)
}

/// Exact `B_2k` computed directly, without any smaller Bernoulli number.
///
/// Fails with [`Error::ReconstructionFailed`] if the planned precision was
/// not enough; retrying with more guard bits via
/// [`bernoulli_zeta_with_plan`] is the recourse.
pub fn bernoulli_zeta(two_k: u64) -> Result<Rational> {
    bernoulli_zeta_with_plan(&plan_precision(two_k)?)
}
