//! Exact Bernoulli numbers by the binomial recurrence and by the explicit
//! double sum, plus the two "6k" binomial identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numeric::{binomial, binomial_row, Rational};

/// `B_0 ..= B_max_index`, built by one triangular pass of the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn get(&self, n: u32) -> Option<&Rational> {
        self.values.get(n as usize)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }
}

impl std::ops::Index<u32> for BernoulliTable {
    type Output = Rational;

    fn index(&self, n: u32) -> &Rational {
        &self.values[n as usize]
    }
}

/// Table of `B_0..=B_max_index`.
///
/// Each entry solves `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `B_n`, reusing the
/// entries already computed. Zero entries are skipped in the sums.
pub fn bernoulli_table(max_index: u32) -> BernoulliTable {
    let mut values: Vec<Rational> = Vec::with_capacity(max_index as usize + 1);
    values.push(Rational::one());
    for n in 1..=u64::from(max_index) {
        let row = binomial_row(n + 1);
        let sum = values
            .iter()
            .zip(&row)
            .filter(|(b, _)| !b.is_zero())
            .fold(Rational::zero(), |acc, (b, c)| acc + b * c);
        values.push(-sum / BigInt::from(n + 1));
    }
    BernoulliTable { values }
}

/// `B_n` from the binomial recurrence (convention `B_1 = -1/2`).
pub fn bernoulli_recurrence(n: u32) -> Rational {
    bernoulli_table(n)
        .values
        .pop()
        .expect("table is never empty")
}

/// `B_n = sum_{k=0}^{n} 1/(k+1) sum_{r=0}^{k} (-1)^r C(k,r) r^n`, with `0^0 = 1`.
pub fn bernoulli_double_sum(n: u32) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=u64::from(n) {
        let row = binomial_row(k);
        let inner = row.iter().enumerate().fold(BigInt::zero(), |acc, (r, c)| {
            let term = c * num_traits::pow(BigInt::from(r), n as usize);
            if r % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        });
        if !inner.is_zero() {
            total += Rational::new(inner, BigInt::from(k + 1));
        }
    }
    total
}

/// Left-hand sides of
/// `sum_{k=0}^{n} C(6n+3, 6k) B_{6k} = 2n+1` and
/// `sum_{k=0}^{n} C(6n+5, 6k+2) B_{6k+2} = (6n+5)/3`.
pub fn check_identity_6k(n: u32) -> (Rational, Rational) {
    let table = bernoulli_table(6 * n + 2);
    identity_6k_with_table(n, &table)
}

pub(crate) fn identity_6k_with_table(n: u32, table: &BernoulliTable) -> (Rational, Rational) {
    let n64 = u64::from(n);
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for k in 0..=n {
        let k64 = u64::from(k);
        first += &table[6 * k] * binomial(6 * n64 + 3, 6 * k64);
        second += &table[6 * k + 2] * binomial(6 * n64 + 5, 6 * k64 + 2);
    }
    (first, second)
}

/// `(-1)^(k-1) sign` helper shared by callers that need the sign of `B_2k`
/// without computing it: positive for odd k, negative for even k.
pub fn even_index_sign(two_k: u64) -> i32 {
    if (two_k / 2) % 2 == 1 {
        1
    } else {
        -1
    }
}
