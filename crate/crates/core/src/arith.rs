//! Integer arithmetic over character degrees.
//!
//! Factorization uses trial division up to [`TRIAL_DIVISION_LIMIT`] and
//! Brent's variant of Pollard's rho for whatever cofactor remains. Primality
//! is decided by Miller-Rabin with a witness set that is deterministic for
//! every 64-bit input, so no probabilistic answer ever reaches a certificate.

use std::fmt;

use thiserror::Error;

/// Inputs must stay below this bound.
pub const INPUT_LIMIT: u64 = 1 << 63;

/// Trial division runs up to this divisor before switching to Pollard rho.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

// First twelve primes: a deterministic Miller-Rabin witness set for n < 3.3e24.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is outside the supported range [{1}, 2^63)")]
    OutOfRange(u64, u64),
}

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, ascending by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u64 {
        self.factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn check_range(n: u64, min: u64) -> Result<(), ArithError> {
    if n < min || n >= INPUT_LIMIT {
        Err(ArithError::OutOfRange(n, min))
    } else {
        Ok(())
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of an odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    const BATCH: u64 = 128;
    for c in 1..n {
        let step = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let (mut r, mut q, mut g) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot; replay one step at a time
            loop {
                ys = step(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard rho exhausted all increments for {n}")
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let r = n.isqrt();
    if r * r == n {
        split_large(r, out);
        split_large(r, out);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Factors `n` for `1 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Factorization, ArithError> {
    check_range(n, 1)?;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;

    let mut strip = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };

    strip(2, &mut rest);
    let mut p = 3;
    while p <= TRIAL_DIVISION_LIMIT && p * p <= rest {
        strip(p, &mut rest);
        p += 2;
    }

    if rest > 1 {
        if p * p > rest {
            factors.push((rest, 1));
        } else {
            let mut large = Vec::new();
            split_large(rest, &mut large);
            large.sort_unstable();
            for q in large {
                match factors.last_mut() {
                    Some((last, e)) if *last == q => *e += 1,
                    _ => factors.push((q, 1)),
                }
            }
        }
    }

    Ok(Factorization { n, factors })
}

/// The set of distinct primes dividing `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>, ArithError> {
    Ok(factorize(n)?.primes().collect())
}

/// Returns `(u, alpha)` with `u^alpha = n` when `n` is a prime power.
pub fn as_prime_power(n: u64) -> Result<Option<(u64, u32)>, ArithError> {
    check_range(n, 2)?;
    let f = factorize(n)?;
    Ok(match f.factors() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    })
}

/// `u^alpha` when it stays below [`INPUT_LIMIT`].
pub fn checked_prime_power(u: u64, alpha: u32) -> Option<u64> {
    u.checked_pow(alpha).filter(|&v| v < INPUT_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(1092).unwrap().factors(), &[(2, 2), (3, 1), (7, 1), (13, 1)]);
    }

    #[test]
    fn zero_and_huge_are_rejected() {
        assert!(factorize(0).is_err());
        assert!(factorize(1 << 63).is_err());
        assert!(factorize(u64::MAX).is_err());
        assert!(factorize((1 << 63) - 1).is_ok());
    }

    #[test]
    fn prime_divisor_sets() {
        assert_eq!(prime_divisors(1).unwrap(), Vec::<u64>::new());
        assert_eq!(prime_divisors(60).unwrap(), vec![2, 3, 5]);
        assert_eq!(prime_divisors(14).unwrap(), vec![2, 7]);
    }

    #[test]
    fn prime_power_recognition() {
        assert_eq!(as_prime_power(4).unwrap(), Some((2, 2)));
        assert_eq!(as_prime_power(13).unwrap(), Some((13, 1)));
        assert_eq!(as_prime_power(12).unwrap(), None);
        assert!(as_prime_power(1).is_err());
        assert!(as_prime_power(0).is_err());
    }

    #[test]
    fn large_cofactors_go_through_rho() {
        // products of primes above the trial-division limit
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let r = 2_097_143u64;
        assert_eq!(factorize(p * q).unwrap().factors(), &[(p, 1), (q, 1)]);
        assert_eq!(factorize(p * p).unwrap().factors(), &[(p, 2)]);
        assert_eq!(factorize(p * q * r).unwrap().factors(), &[(p, 1), (q, 1), (r, 1)]);
        let big = 1_470_626_929_934_143_021u64;
        assert_eq!(
            factorize(big).unwrap().factors(),
            &[(1_206_429_347, 1), (1_218_991_343, 1)]
        );
        let m61 = (1u64 << 61) - 1;
        assert!(is_prime(m61));
        assert_eq!(factorize(m61).unwrap().factors(), &[(m61, 1)]);
        assert_eq!(factorize(3 * m61).unwrap().product(), 3 * m61);
    }

    #[test]
    fn strong_pseudoprimes_are_composite() {
        // 3215031751 fools bases 2, 3, 5, 7
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(!is_prime(561));
        assert!(is_prime(2));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn display() {
        assert_eq!(factorize(1092).unwrap().to_string(), "2^2 * 3 * 7 * 13");
        assert_eq!(factorize(1).unwrap().to_string(), "1");
    }
}
