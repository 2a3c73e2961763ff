//! Kummer's criterion: an odd prime `p >= 5` is regular iff it divides none
//! of the numerators of `B_2, B_4, ..., B_{p-3}`.
//!
//! The reference path reduces exact numerators from one shared Bernoulli
//! table. [`is_regular_mod_p`] is an independent fast path that evaluates
//! the double-sum formula for `B_n` entirely modulo `p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::bernoulli::{bernoulli_recurrence, bernoulli_table, BernoulliTable};
use crate::error::{Error, Result};
use crate::numeric::{is_prime, primes_up_to};
use crate::staudt_clausen::sc_denominator;

/// A prime `p` and an even index `2 <= index <= p - 3` with `p | numer(B_index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrregularPair {
    pub p: u64,
    pub index: u32,
}

/// Outcome of the regularity test for one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    pub p: u64,
    /// Every even index `2k <= p - 3` whose numerator `p` divides, increasing.
    pub irregular_indices: Vec<u32>,
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        self.irregular_indices.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = IrregularPair> + '_ {
        self.irregular_indices
            .iter()
            .map(move |&index| IrregularPair { p: self.p, index })
    }
}

/// `p=157 irregular indices=[62,110]`, or `p=31 regular`.
impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_regular() {
            return write!(f, "p={} regular", self.p);
        }
        let list: Vec<String> = self.irregular_indices.iter().map(u32::to_string).collect();
        write!(f, "p={} irregular indices=[{}]", self.p, list.join(","))
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::PrimeTooSmall(p));
    }
    Ok(())
}

fn check_index(two_k: u64, p: u64) -> Result<()> {
    let max = p.saturating_sub(3);
    if two_k < 2 || two_k > max || !two_k.is_multiple_of(2) {
        return Err(Error::IndexOutOfRange {
            index: two_k,
            p,
            max,
        });
    }
    Ok(())
}

/// `numer(B_two_k) mod p`, in `[0, p)`, from the exact rational.
pub fn numerator_mod_p(two_k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_index(two_k, p)?;
    let index = u32::try_from(two_k).map_err(|_| Error::InvalidEvenIndex(two_k))?;
    Ok(residue(bernoulli_recurrence(index).numer(), p))
}

fn residue(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    u64::try_from(r).expect("residue below p")
}

fn regularity_from_table(p: u64, table: &BernoulliTable) -> Regularity {
    let irregular_indices = (2..=(p - 3) as u32)
        .step_by(2)
        .filter(|&i| residue(table[i].numer(), p) == 0)
        .collect();
    Regularity {
        p,
        irregular_indices,
    }
}

/// Kummer regularity of `p` from exact Bernoulli numerators.
pub fn is_regular(p: u64) -> Result<Regularity> {
    check_prime(p)?;
    let table = bernoulli_table((p - 3) as u32);
    Ok(regularity_from_table(p, &table))
}

/// All irregular pairs with `p <= limit`, ordered by `(p, index)`.
///
/// One Bernoulli table up to the largest needed index is shared read-only by
/// all primes, which are checked in parallel.
pub fn irregular_primes_up_to(limit: u64) -> Vec<IrregularPair> {
    irregular_report(limit)
        .into_iter()
        .flat_map(|r| r.pairs().collect::<Vec<_>>())
        .collect()
}

/// Regularity of every prime `5 <= p <= limit`, irregular ones only, by increasing `p`.
pub fn irregular_report(limit: u64) -> Vec<Regularity> {
    let primes: Vec<u64> = primes_up_to(limit)
        .into_iter()
        .filter(|&p| p >= 5)
        .collect();
    let Some(&largest) = primes.last() else {
        return Vec::new();
    };
    let table = bernoulli_table((largest - 3) as u32);
    primes
        .par_iter()
        .map(|&p| regularity_from_table(p, &table))
        .filter(|r| !r.is_regular())
        .collect()
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `B_n mod p` for every even `2 <= n <= p - 3`, from
/// `B_n = sum_{k<=K} 1/(k+1) sum_{r<=k} (-1)^r C(k,r) r^n` with `K = p - 3`.
///
/// The inner sum vanishes for `k > n`, so extending every `n` to the same
/// `K` is harmless, and swapping the sums gives
/// `B_n = sum_r (-1)^r r^n W_r` with `W_r = sum_{k=r}^{K} C(k,r)/(k+1)`.
/// All `k + 1 <= p - 2` are invertible mod `p`.
fn bernoulli_mod_p(p: u64) -> Vec<(u32, u64)> {
    let k_max = (p - 3) as usize;
    let inv: Vec<u64> = (0..=k_max)
        .map(|k| pow_mod(k as u64 + 1, p - 2, p))
        .collect();
    let mut weights = vec![0u64; k_max + 1];
    let mut row = vec![0u64; k_max + 1];
    row[0] = 1;
    for k in 0..=k_max {
        if k > 0 {
            for r in (1..=k).rev() {
                row[r] = (row[r] + row[r - 1]) % p;
            }
        }
        for r in 0..=k {
            weights[r] = (weights[r] + row[r] * inv[k]) % p;
        }
    }
    (2..=k_max as u32)
        .step_by(2)
        .map(|n| {
            let b = (0..=k_max).fold(0u64, |acc, r| {
                let t = pow_mod(r as u64, u64::from(n), p) * weights[r] % p;
                if r % 2 == 0 {
                    (acc + t) % p
                } else {
                    (acc + p - t) % p
                }
            });
            (n, b)
        })
        .collect()
}

/// Kummer regularity of `p` computed entirely in modular arithmetic.
///
/// Since `p` does not divide the denominator of `B_n` for `n <= p - 3`,
/// `p | numer(B_n)` exactly when `B_n = 0 (mod p)`.
pub fn is_regular_mod_p(p: u64) -> Result<Regularity> {
    check_prime(p)?;
    let irregular_indices = bernoulli_mod_p(p)
        .into_iter()
        .filter(|&(_, b)| b == 0)
        .map(|(n, _)| n)
        .collect();
    Ok(Regularity {
        p,
        irregular_indices,
    })
}

/// `numer(B_two_k) mod p` from the modular fast path.
pub fn numerator_mod_p_fast(two_k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    check_index(two_k, p)?;
    let b = bernoulli_mod_p(p)
        .into_iter()
        .find(|&(n, _)| u64::from(n) == two_k)
        .map(|(_, b)| b)
        .expect("index within the computed range");
    let den = residue(&sc_denominator(two_k)?, p);
    Ok(b * den % p)
}
