//! Elementary number theory at desk scale: trial-division factorization,
//! the totient, and the K3-association conditions on discriminants.

use crate::error::CountingError;

/// Prime factorization by trial division, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(r: u64) -> u64 {
    assert!(r >= 1);
    factorize(r).into_iter().fold(r, |acc, (p, _)| acc / p * (p - 1))
}

/// Number of distinct primes dividing `d/2`; `d` must be even and positive.
pub fn tau(d: u64) -> Result<u32, CountingError> {
    if d == 0 {
        return Err(CountingError::NonPositive(d));
    }
    if !d.is_multiple_of(2) {
        return Err(CountingError::OddInput(d));
    }
    Ok(factorize(d / 2).len() as u32)
}

/// Condition (**): `d ≡ 2, 4 mod 8` and no prime `p ≡ 3 mod 4` divides `d`.
pub fn satisfies_star_star(d: u64) -> bool {
    if d == 0 || !matches!(d % 8, 2 | 4) {
        return false;
    }
    factorize(d).iter().all(|&(p, _)| p % 4 != 3)
}

/// Spelled-out reason why `d` fails (**), for error messages.
pub fn star_star_failure(d: u64) -> Option<String> {
    if d == 0 {
        return Some("d must be positive".into());
    }
    if !matches!(d % 8, 2 | 4) {
        return Some(format!("d = {} mod 8, need 2 or 4", d % 8));
    }
    factorize(d)
        .iter()
        .find(|&&(p, _)| p % 4 == 3)
        .map(|&(p, _)| format!("the prime {p} = 3 mod 4 divides d"))
}

/// Condition (**'): every prime `p ≡ 3 mod 4` divides `d'` to an even power.
pub fn satisfies_star_star_prime(d_prime: u64) -> bool {
    if d_prime == 0 {
        return false;
    }
    factorize(d_prime).iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_basics() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(9973), vec![(9973, 1)]);
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(26).unwrap(), 1);
        assert_eq!(tau(20).unwrap(), 2);
        assert_eq!(tau(2).unwrap(), 0);
        assert_eq!(tau(7).unwrap_err(), CountingError::OddInput(7));
    }

    #[test]
    fn star_star_examples() {
        assert!(satisfies_star_star(10));
        assert!(!satisfies_star_star(12)); // 3 | 12
        assert!(!satisfies_star_star(16)); // 16 = 0 mod 8
        assert!(satisfies_star_star(20));
        assert!(satisfies_star_star(26));
        assert!(!satisfies_star_star(0));
        assert!(star_star_failure(12).unwrap().contains("prime 3"));
        assert!(star_star_failure(16).unwrap().contains("mod 8"));
        assert!(star_star_failure(10).is_none());
    }

    #[test]
    fn star_star_prime_examples() {
        assert!(satisfies_star_star_prime(36)); // 2^2 * 3^2
        assert!(!satisfies_star_star_prime(12)); // 2^2 * 3
        assert!(satisfies_star_star_prime(18)); // 2 * 3^2
        assert!(satisfies_star_star_prime(1));
        assert!(!satisfies_star_star_prime(0));
    }
}
