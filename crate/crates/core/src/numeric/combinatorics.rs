use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `n!`, with `0! = 1`.
pub fn factorial(n: u64) -> BigInt {
    product_range(1, n)
}

// Balanced product of lo..=hi; keeps operand sizes even for large n.
fn product_range(lo: u64, hi: u64) -> BigInt {
    if lo > hi {
        return BigInt::one();
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigInt::one(), |acc, i| acc * i);
    }
    let mid = lo + (hi - lo) / 2;
    product_range(lo, mid) * product_range(mid + 1, hi)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Row `n` of Pascal's triangle: `[C(n,0), ..., C(n,n)]`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial_by_loop(n: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        acc
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(20), factorial_by_loop(20));
        assert_eq!(
            factorial(20),
            "2432902008176640000".parse::<BigInt>().unwrap()
        );
        for n in [0, 1, 17, 33, 100, 257] {
            assert_eq!(factorial(n), factorial_by_loop(n));
        }
    }

    #[test]
    fn binomial_values() {
        // factorial-ratio oracle
        assert_eq!(
            binomial(9, 6),
            factorial_by_loop(9) / (factorial_by_loop(6) * factorial_by_loop(3))
        );
        assert_eq!(binomial(9, 6), BigInt::from(84));
        for n in [0, 1, 5, 40] {
            assert_eq!(binomial(n, 0), BigInt::from(1));
        }
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(0, 1), BigInt::zero());
    }

    #[test]
    fn row_matches_pointwise() {
        for n in 0..30 {
            let row = binomial_row(n);
            assert_eq!(row.len() as u64, n + 1);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, binomial(n, k as u64));
            }
        }
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1u64..=60, k in 1u64..=60) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
