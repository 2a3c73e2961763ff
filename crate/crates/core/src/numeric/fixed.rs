use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Arbitrary-precision binary fixed-point number: `mantissa * 2^(-scale_bits)`.
///
/// Binary operations produce a result at the larger of the two operand
/// scales. Addition, subtraction and negation are exact; multiplication,
/// division and square roots round half-to-even, so each costs at most half
/// an ulp (one ulp for [`FixedReal::sqrt`]).
///
/// Equality is structural: `1/2` at scale 1 and at scale 8 are different
/// values of this type. Use [`FixedReal::cmp_value`] to compare numerically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedReal {
    mantissa: BigInt,
    scale_bits: u32,
}

/// `round(n / d)` with ties to even. `d` must be positive.
pub fn round_div_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_mod_floor(d);
    let twice: BigInt = r << 1u32;
    match twice.cmp(d) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

fn round_shr_half_even(n: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return n.clone();
    }
    round_div_half_even(n, &(BigInt::one() << bits))
}

/// Nearest fixed-point value to `q` at the given scale (ties to even).
pub fn fixed_from_rational(q: &Rational, scale_bits: u32) -> FixedReal {
    let shifted: BigInt = q.numer() << scale_bits;
    FixedReal {
        mantissa: round_div_half_even(&shifted, q.denom()),
        scale_bits,
    }
}

impl FixedReal {
    pub fn new(mantissa: BigInt, scale_bits: u32) -> Self {
        Self {
            mantissa,
            scale_bits,
        }
    }

    pub fn zero(scale_bits: u32) -> Self {
        Self::new(BigInt::zero(), scale_bits)
    }

    pub fn from_integer(n: impl Into<BigInt>, scale_bits: u32) -> Self {
        Self::new(n.into() << scale_bits, scale_bits)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale_bits(&self) -> u32 {
        self.scale_bits
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// The exact value as a rational.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.scale_bits)
    }

    /// Re-expresses the value at another scale, rounding when the scale shrinks.
    pub fn rescale(&self, scale_bits: u32) -> Self {
        let mantissa = match scale_bits.cmp(&self.scale_bits) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (scale_bits - self.scale_bits),
            Ordering::Less => round_shr_half_even(&self.mantissa, self.scale_bits - scale_bits),
        };
        Self::new(mantissa, scale_bits)
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let s = self.scale_bits.max(other.scale_bits);
        (
            &self.mantissa << (s - self.scale_bits),
            &other.mantissa << (s - other.scale_bits),
            s,
        )
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.scale_bits)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }

    /// Exact product with an integer.
    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::new(&self.mantissa * k, self.scale_bits)
    }

    /// Quotient by a non-zero integer, rounded to this scale.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "FixedReal division by zero");
        let (n, d) = if k.is_negative() {
            (-&self.mantissa, -k)
        } else {
            (self.mantissa.clone(), k.clone())
        };
        Self::new(round_div_half_even(&n, &d), self.scale_bits)
    }

    /// Integer power, evaluated with internal guard bits and rounded once.
    pub fn powi(&self, exp: u32) -> Self {
        let s = self.scale_bits;
        if exp == 0 {
            return Self::from_integer(1, s);
        }
        let guard = 2 * (32 - exp.leading_zeros()) + 8;
        let base = self.rescale(s + guard);
        let mut acc = Self::from_integer(1, s + guard);
        let mut e = exp;
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = &sq * &sq;
        }
        acc.rescale(s)
    }

    /// Square root of a non-negative value at this scale (within one ulp).
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative FixedReal");
        let s = self.scale_bits;
        // sqrt(m 2^-s) = sqrt(m 2^(s+2)) 2^-(s+1)
        let r: BigInt = (&self.mantissa << (s + 2)).sqrt();
        Self::new(round_shr_half_even(&r, 1), s)
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.mantissa.div_floor(&(BigInt::one() << self.scale_bits))
    }

    /// Nearest integer, ties to even.
    pub fn round(&self) -> BigInt {
        round_shr_half_even(&self.mantissa, self.scale_bits)
    }

    /// `ceil(log10 |x|)`, computed exactly; `None` for zero.
    pub fn ceil_log10_abs(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let m = self.mantissa.abs();
        let one: BigInt = BigInt::one() << self.scale_bits;
        // smallest e with |x| <= 10^e
        let mut e: i64 = 0;
        if m > one {
            let mut p = BigInt::from(10) << self.scale_bits;
            e = 1;
            while m > p {
                p *= 10;
                e += 1;
            }
        } else {
            let mut scaled = m * 10;
            while scaled <= one {
                scaled *= 10;
                e -= 1;
            }
        }
        Some(e)
    }

    /// Decimal rendering with `digits` fractional digits (rounded half-to-even),
    /// followed by the digit count, e.g. `3.141592653589793238 (18 digits)`.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!("{} ({digits} digits)", self.decimal_digits(digits))
    }

    fn decimal_digits(&self, digits: usize) -> String {
        let pow10 = num_traits::pow(BigInt::from(10), digits);
        let scaled = round_shr_half_even(&(self.mantissa.abs() * &pow10), self.scale_bits);
        let (int_part, frac_part) = scaled.div_rem(&pow10);
        let sign = if self.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            return format!("{sign}{int_part}");
        }
        format!("{sign}{int_part}.{:0>digits$}", frac_part.to_string())
    }

    /// Number of decimal fractional digits that the binary scale resolves.
    pub fn significant_decimal_digits(&self) -> usize {
        // floor(scale * log10(2)), with log10(2) < 30103/100000
        (u64::from(self.scale_bits) * 30103 / 100_000) as usize
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits();
        let drop = bits.saturating_sub(60);
        let top = &self.mantissa >> drop;
        let top = i64::try_from(top).unwrap_or(0) as f64;
        top * 2f64.powi(drop as i32 - self.scale_bits as i32)
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

impl fmt::Display for FixedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| self.significant_decimal_digits());
        f.write_str(&self.decimal_digits(digits))
    }
}

impl Add for &FixedReal {
    type Output = FixedReal;
    fn add(self, rhs: &FixedReal) -> FixedReal {
        let (a, b, s) = self.aligned(rhs);
        FixedReal::new(a + b, s)
    }
}

impl Sub for &FixedReal {
    type Output = FixedReal;
    fn sub(self, rhs: &FixedReal) -> FixedReal {
        let (a, b, s) = self.aligned(rhs);
        FixedReal::new(a - b, s)
    }
}

impl Mul for &FixedReal {
    type Output = FixedReal;
    fn mul(self, rhs: &FixedReal) -> FixedReal {
        let s = self.scale_bits.max(rhs.scale_bits);
        let drop = self.scale_bits + rhs.scale_bits - s;
        let product = &self.mantissa * &rhs.mantissa;
        FixedReal::new(round_shr_half_even(&product, drop), s)
    }
}

impl Div for &FixedReal {
    type Output = FixedReal;
    fn div(self, rhs: &FixedReal) -> FixedReal {
        assert!(!rhs.is_zero(), "FixedReal division by zero");
        let s = self.scale_bits.max(rhs.scale_bits);
        // (a 2^-sa) / (b 2^-sb) = (a 2^(s + sb - sa) / b) 2^-s
        let num: BigInt = &self.mantissa << (s + rhs.scale_bits - self.scale_bits);
        let (num, den) = if rhs.is_negative() {
            (-num, -&rhs.mantissa)
        } else {
            (num, rhs.mantissa.clone())
        };
        FixedReal::new(round_div_half_even(&num, &den), s)
    }
}

impl Neg for &FixedReal {
    type Output = FixedReal;
    fn neg(self) -> FixedReal {
        FixedReal::new(-&self.mantissa, self.scale_bits)
    }
}

impl Neg for FixedReal {
    type Output = FixedReal;
    fn neg(self) -> FixedReal {
        FixedReal::new(-self.mantissa, self.scale_bits)
    }
}
