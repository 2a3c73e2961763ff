/// All primes `p <= limit` in increasing order (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = usize::try_from(limit).expect("sieve limit exceeds address space");
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect()
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..n)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_limits() {
        assert_eq!(primes_up_to(17), vec![2, 3, 5, 7, 11, 13, 17]);
        assert!(primes_up_to(1).is_empty());
        assert!(primes_up_to(0).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
    }

    #[test]
    fn up_to_300() {
        let ps = primes_up_to(300);
        let oracle: Vec<u64> = (0..=300).filter(|&n| trial_division(n)).collect();
        assert_eq!(ps.len(), 62);
        assert_eq!(*ps.last().unwrap(), 293);
        assert_eq!(ps, oracle);
    }

    #[test]
    fn sieve_agrees_with_trial_division_to_ten_thousand() {
        let ps = primes_up_to(10_000);
        let oracle: Vec<u64> = (0..=10_000).filter(|&n| trial_division(n)).collect();
        assert_eq!(ps, oracle);
        for n in 0..=10_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }
}
