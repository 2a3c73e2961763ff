//! Denominators and fractional parts of `B_2k` from the Clausen-von Staudt
//! theorem: `B_2k + sum_{(p-1) | 2k} 1/p` is an integer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{is_prime, round_div_half_even, FixedReal, Rational};

/// A value in `[0, 1)`: the residue of some `B_2k` modulo 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPart(Rational);

impl FractionalPart {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    /// `x - floor(x)`.
    pub fn of(x: &Rational) -> Self {
        FractionalPart(x - x.floor())
    }
}

impl fmt::Display for FractionalPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_index(two_k: u64) -> Result<()> {
    if two_k < 2 || !two_k.is_multiple_of(2) {
        return Err(Error::InvalidEvenIndex(two_k));
    }
    Ok(())
}

/// Primes `p` with `(p - 1) | two_k`, increasing.
pub fn staudt_primes(two_k: u64) -> Result<Vec<u64>> {
    check_index(two_k)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= two_k {
        if two_k.is_multiple_of(d) {
            small.push(d);
            if d * d != two_k {
                large.push(two_k / d);
            }
        }
        d += 1;
    }
    Ok(small
        .into_iter()
        .chain(large.into_iter().rev())
        .map(|d| d + 1)
        .filter(|&p| is_prime(p))
        .collect())
}

/// Reduced denominator of `B_two_k`: the product of the primes `p` with `(p - 1) | two_k`.
pub fn sc_denominator(two_k: u64) -> Result<BigInt> {
    Ok(staudt_primes(two_k)?
        .into_iter()
        .fold(BigInt::one(), |acc, p| acc * p))
}

/// `sum_{(p-1) | two_k} 1/p`.
fn reciprocal_prime_sum(two_k: u64) -> Result<Rational> {
    Ok(staudt_primes(two_k)?
        .into_iter()
        .fold(Rational::zero(), |acc, p| {
            acc + Rational::new(BigInt::one(), BigInt::from(p))
        }))
}

/// `B_two_k mod 1`, derived from `B_two_k = integer - sum 1/p`.
pub fn sc_fractional_part(two_k: u64) -> Result<FractionalPart> {
    let s = reciprocal_prime_sum(two_k)?;
    Ok(FractionalPart::of(&-s))
}

/// Recovers the exact `B_two_k` from a real approximation whose error is
/// below `1/(2D)`, where `D = sc_denominator(two_k)`.
///
/// The numerator is `round(approx * D)`. The result is rejected unless it
/// lies strictly inside the rounding margin and carries the residue mod 1
/// that the Clausen-von Staudt theorem prescribes.
pub fn reconstruct_from_approx(two_k: u64, approx: &FixedReal) -> Result<Rational> {
    let den = sc_denominator(two_k)?;
    let one: BigInt = BigInt::one() << approx.scale_bits();
    let scaled = approx.mantissa() * &den;
    let numer = round_div_half_even(&scaled, &one);

    // |approx - numer/D| < 1/(2D)  <=>  2 |approx.m * D - numer * 2^s| < 2^s
    let miss: BigInt = (scaled - &numer * &one).abs() << 1u32;
    if miss >= one {
        return Err(Error::ReconstructionFailed { two_k });
    }

    let value = Rational::new(numer, den.clone());
    if value.denom() != &den || FractionalPart::of(&value) != sc_fractional_part(two_k)? {
        return Err(Error::ReconstructionFailed { two_k });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_table;
    use crate::numeric::{fixed_from_rational, parse_rational};
    use num_integer::Integer;

    fn is_squarefree(n: &BigInt) -> bool {
        let mut m = n.abs();
        let mut p = BigInt::from(2);
        while &p * &p <= m {
            if m.is_multiple_of(&p) {
                m /= &p;
                if m.is_multiple_of(&p) {
                    return false;
                }
            }
            p += 1;
        }
        true
    }

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(sc_denominator(2).unwrap(), BigInt::from(6));
        assert_eq!(sc_denominator(16).unwrap(), BigInt::from(510));
        assert_eq!(sc_denominator(12).unwrap(), BigInt::from(2730));
        assert_eq!(staudt_primes(16).unwrap(), vec![2, 3, 5, 17]);
    }

    #[test]
    fn rejects_bad_indices() {
        for bad in [0, 1, 3, 17] {
            assert_eq!(sc_denominator(bad), Err(Error::InvalidEvenIndex(bad)));
            assert_eq!(sc_fractional_part(bad), Err(Error::InvalidEvenIndex(bad)));
        }
        let x = FixedReal::zero(8);
        assert_eq!(
            reconstruct_from_approx(5, &x),
            Err(Error::InvalidEvenIndex(5))
        );
    }

    #[test]
    fn fractional_part_examples() {
        assert_eq!(sc_fractional_part(16).unwrap().value(), &q("463/510"));
        assert_eq!(sc_fractional_part(14).unwrap().value(), &q("1/6"));
        assert_eq!(sc_fractional_part(2).unwrap().value(), &q("1/6"));
    }

    #[test]
    fn one_sixth_chain_for_primes_congruent_one_mod_three() {
        for k in [7u64, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103] {
            assert_eq!(
                sc_fractional_part(2 * k).unwrap().value(),
                &q("1/6"),
                "2k = {}",
                2 * k
            );
        }
    }

    #[test]
    fn matches_exact_values_to_sixty() {
        let t = bernoulli_table(60);
        for two_k in (2..=60u32).step_by(2) {
            let b = &t[two_k];
            let den = sc_denominator(two_k.into()).unwrap();
            assert_eq!(b.denom(), &den, "2k = {two_k}");
            assert!(is_squarefree(&den));
            let frac = sc_fractional_part(two_k.into()).unwrap();
            assert_eq!(frac.value(), &(b - b.floor()));
            assert!(!frac.value().is_negative() && frac.value() < &Rational::one());
        }
    }

    #[test]
    fn reconstruct_examples() {
        // -7.0921568627 carries ten correct digits of -3617/510
        let approx = fixed_from_rational(&q("-70921568627/10000000000"), 64);
        assert_eq!(
            reconstruct_from_approx(16, &approx).unwrap(),
            q("-3617/510")
        );
        let approx = fixed_from_rational(&q("1666666667/10000000000"), 64);
        assert_eq!(reconstruct_from_approx(2, &approx).unwrap(), q("1/6"));
        let approx = fixed_from_rational(&q("11666666667/10000000000"), 64);
        assert_eq!(reconstruct_from_approx(14, &approx).unwrap(), q("7/6"));
    }

    #[test]
    fn reconstruct_round_trips_to_sixty() {
        let t = bernoulli_table(60);
        for two_k in (2..=60u32).step_by(2) {
            let approx = fixed_from_rational(&t[two_k], 128);
            assert_eq!(
                reconstruct_from_approx(two_k.into(), &approx).unwrap(),
                t[two_k]
            );
        }
    }

    #[test]
    fn reconstruct_rejects_coarse_approximations() {
        // one whole unit of 1/D off lands on the wrong residue class
        let off = q("-3617/510") + q("1/510");
        let approx = fixed_from_rational(&off, 64);
        assert_eq!(
            reconstruct_from_approx(16, &approx),
            Err(Error::ReconstructionFailed { two_k: 16 })
        );
        // exactly on the rounding boundary: 1/6 + 1/12 = 1/4
        let approx = fixed_from_rational(&q("1/4"), 16);
        assert_eq!(
            reconstruct_from_approx(2, &approx),
            Err(Error::ReconstructionFailed { two_k: 2 })
        );
        // too few bits to resolve 1/510 at all
        let approx = fixed_from_rational(&q("-3617/510"), 2);
        assert!(reconstruct_from_approx(16, &approx).is_err());
    }
}
