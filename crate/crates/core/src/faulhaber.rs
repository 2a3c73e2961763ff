//! Power sums `sum_{k=0}^{n-1} k^r` as exact polynomials in `n`, with
//! coefficients `B_j / j! * r! / (r-j+1)!` on `n^(r-j+1)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bernoulli::bernoulli_table;
use crate::error::{Error, Result};
use crate::numeric::{binomial, Rational};

/// Faulhaber polynomial for exponent `r`, without its (zero) constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumPoly {
    exponent: u32,
    /// `coeffs[d - 1]` is the coefficient of `n^d`, for `d = 1..=r+1`.
    coeffs: Vec<Rational>,
}

impl PowerSumPoly {
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn degree(&self) -> u32 {
        self.exponent + 1
    }

    /// Coefficient of `n^degree`; zero for degree 0 or above `r + 1`.
    pub fn coeff(&self, degree: u32) -> Rational {
        if degree == 0 {
            return Rational::zero();
        }
        self.coeffs
            .get(degree as usize - 1)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact value at `n` (rational in general, integral at integers).
    pub fn eval(&self, n: &BigInt) -> Rational {
        // Horner over degrees r+1 down to 1, then one final factor of n
        let n = Rational::from_integer(n.clone());
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * &n + c);
        acc * n
    }

    /// `sum_{k=0}^{n-1} k^r` (with `0^0 = 1`), checked to be integral.
    pub fn eval_integer(&self, n: u64) -> Result<BigInt> {
        let v = self.eval(&BigInt::from(n));
        if !v.denom().is_one() {
            return Err(Error::NonIntegral {
                n,
                r: self.exponent,
            });
        }
        Ok(v.numer().clone())
    }
}

/// Descending-degree terms `coeff·n^d` joined by ` + `, zero terms omitted:
/// `1/3·n^3 + -1/2·n^2 + 1/6·n^1`.
impl fmt::Display for PowerSumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·n^{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The Faulhaber polynomial for exponent `r`.
pub fn power_sum_poly(r: u32) -> PowerSumPoly {
    let table = bernoulli_table(r);
    let r64 = u64::from(r);
    let mut coeffs = vec![Rational::zero(); r as usize + 1];
    for j in 0..=r {
        // B_j/j! * r!/(r-j+1)! = B_j C(r+1, j) / (r+1)
        let b = &table[j];
        if b.is_zero() {
            continue;
        }
        let degree = r - j + 1;
        coeffs[degree as usize - 1] = b * binomial(r64 + 1, u64::from(j)) / BigInt::from(r64 + 1);
    }
    PowerSumPoly {
        exponent: r,
        coeffs,
    }
}

/// Write-once cache of Faulhaber polynomials keyed by exponent.
///
/// Readers never block each other; a polynomial is built at most once per
/// exponent that is inserted, and never replaced afterwards.
#[derive(Debug, Default)]
pub struct PowerSumCache {
    polys: RwLock<HashMap<u32, Arc<PowerSumPoly>>>,
}

impl PowerSumCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, r: u32) -> Arc<PowerSumPoly> {
        if let Some(p) = self.polys.read().expect("cache lock poisoned").get(&r) {
            return Arc::clone(p);
        }
        let built = Arc::new(power_sum_poly(r));
        let mut polys = self.polys.write().expect("cache lock poisoned");
        Arc::clone(polys.entry(r).or_insert(built))
    }

    pub fn len(&self) -> usize {
        self.polys.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn shared_cache() -> &'static PowerSumCache {
    static CACHE: OnceLock<PowerSumCache> = OnceLock::new();
    CACHE.get_or_init(PowerSumCache::new)
}

/// `sum_{k=1}^{n-1} k^r`; zero for `n <= 1`.
///
/// The polynomial counts the `k = 0` term too, which is `0^0 = 1` when
/// `r = 0`; it is removed here.
pub fn power_sum_exclusive(n: u64, r: u32) -> Result<BigInt> {
    if n <= 1 {
        return Ok(BigInt::zero());
    }
    let mut v = shared_cache().get(r).eval_integer(n)?;
    if r == 0 {
        v -= 1;
    }
    debug_assert!(!v.is_negative());
    Ok(v)
}

/// `sum_{k=1}^{n} k^r`.
pub fn power_sum_inclusive(n: u64, r: u32) -> Result<BigInt> {
    let next = n
        .checked_add(1)
        .ok_or_else(|| Error::Parse(format!("n = {n} is too large")))?;
    power_sum_exclusive(next, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn brute(n: u64, r: u32) -> BigInt {
        (1..n).fold(BigInt::zero(), |acc, k| {
            acc + num_traits::pow(BigInt::from(k), r as usize)
        })
    }

    #[test]
    fn polynomial_examples() {
        let p1 = power_sum_poly(1);
        assert_eq!(p1.coeffs(), &[q("-1/2"), q("1/2")]);
        let p2 = power_sum_poly(2);
        assert_eq!(p2.coeffs(), &[q("1/6"), q("-1/2"), q("1/3")]);
        let p5 = power_sum_poly(5);
        assert_eq!(
            p5.coeffs(),
            &[q("0"), q("-1/12"), q("0"), q("5/12"), q("-1/2"), q("1/6")]
        );
        assert_eq!(p2.to_string(), "1/3·n^3 + -1/2·n^2 + 1/6·n^1");
        assert_eq!(p5.to_string(), "1/6·n^6 + -1/2·n^5 + 5/12·n^4 + -1/12·n^2");
        assert_eq!(power_sum_poly(0).to_string(), "1·n^1");
    }

    #[test]
    fn polynomial_invariants() {
        for r in 0..30u32 {
            let p = power_sum_poly(r);
            assert_eq!(
                p.coeff(r + 1),
                Rational::new(BigInt::one(), BigInt::from(r + 1))
            );
            if r >= 1 {
                assert_eq!(p.coeff(r), q("-1/2"));
            }
            assert!(p.coeff(0).is_zero());
            assert!(p.eval(&BigInt::zero()).is_zero());
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(power_sum_exclusive(5, 2).unwrap(), brute(5, 2));
        assert_eq!(power_sum_exclusive(5, 2).unwrap(), BigInt::from(30));
        for r in [0, 3, 9] {
            assert!(power_sum_exclusive(1, r).unwrap().is_zero());
            assert!(power_sum_exclusive(0, r).unwrap().is_zero());
            assert!(power_sum_inclusive(0, r).unwrap().is_zero());
        }
        for n in [1u64, 2, 10, 500] {
            assert_eq!(power_sum_exclusive(n, 0).unwrap(), BigInt::from(n - 1));
        }
        assert_eq!(
            power_sum_inclusive(1000, 10).unwrap(),
            "91409924241424243424241924242500"
                .parse::<BigInt>()
                .unwrap()
        );
        assert_eq!(power_sum_inclusive(4, 4).unwrap(), BigInt::from(354));
        assert_eq!(power_sum_inclusive(4, 4).unwrap(), brute(5, 4));
    }

    #[test]
    fn brute_force_equivalence() {
        for r in 0..=12u32 {
            let mut running = BigInt::zero();
            for n in 0..=200u64 {
                // running = sum_{k<n} k^r
                assert_eq!(
                    power_sum_exclusive(n, r).unwrap(),
                    running,
                    "n = {n}, r = {r}"
                );
                if n >= 1 {
                    running += num_traits::pow(BigInt::from(n), r as usize);
                }
            }
        }
    }

    #[test]
    fn telescoping() {
        for r in 0..=12u32 {
            for n in 1..=150u64 {
                let diff =
                    power_sum_exclusive(n + 1, r).unwrap() - power_sum_exclusive(n, r).unwrap();
                assert_eq!(diff, num_traits::pow(BigInt::from(n), r as usize));
            }
        }
    }

    #[test]
    fn closed_forms() {
        for n in 1..=100u64 {
            let b = BigInt::from(n);
            let sq = &b * (&b + 1) * (2 * &b + 1) / 6;
            assert_eq!(power_sum_inclusive(n, 2).unwrap(), sq);
            let half: BigInt = &b * (&b + 1) / 2;
            assert_eq!(power_sum_inclusive(n, 3).unwrap(), &half * &half);
            let quart = &b * (&b + 1) * (2 * &b + 1) * (3 * &b * &b + 3 * &b - 1) / 30;
            assert_eq!(power_sum_inclusive(n, 4).unwrap(), quart);
            // exclusive form with 3n^2 - 3n - 1
            let quart_ex = &b * (&b - 1) * (2 * &b - 1) * (3 * &b * &b - 3 * &b - 1) / 30;
            assert_eq!(power_sum_exclusive(n, 4).unwrap(), quart_ex);
        }
    }

    #[test]
    fn non_integral_polynomial_is_reported() {
        let mut bad = power_sum_poly(2);
        bad.coeffs[0] = q("1/7");
        assert_eq!(bad.eval_integer(3), Err(Error::NonIntegral { n: 3, r: 2 }));
    }

    #[test]
    fn cache_is_write_once() {
        let cache = PowerSumCache::new();
        let a = cache.get(7);
        let b = cache.get(7);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.len(), 1);
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(*cache.get(9), power_sum_poly(9)));
            }
        });
        assert_eq!(cache.len(), 2);
    }
}
