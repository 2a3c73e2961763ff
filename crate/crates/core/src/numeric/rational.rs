use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
///
/// `Display` produces the interchange text form (`-3617/510`, `1`).
pub type Rational = num_rational::BigRational;

pub fn rational_from_ints(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the `num/den` text form. A bare integer is accepted as `num/1`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational denominator in {s:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}
