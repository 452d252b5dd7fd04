//! Integer building blocks: gcd, deterministic primality, least prime
//! divisors, and twin prime predicates.
//!
//! Everything operates on `u64`. Primality is decided by a deterministic
//! Miller-Rabin pass whose witness set is known to cover the full `u64`
//! range, so no probabilistic answer ever leaks into a verification run.

/// Greatest common divisor by the Euclidean algorithm.
///
/// `gcd(0, x) = x` by convention; several recurrences in this crate
/// evaluate `gcd(n - 2, prev)` at `n = 2` and rely on that convention.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Witnesses that make Miller-Rabin deterministic for every `u64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
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

/// Deterministic primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n is odd and > 37 here; write n - 1 = d * 2^s with d odd.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
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

/// Least prime divisor of `n`, or `None` for `n <= 1`.
pub fn least_prime_divisor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n % 2 == 0 {
        return Some(2);
    }
    if n % 3 == 0 {
        return Some(3);
    }
    // The primality shortcut keeps word-sized primes from triggering a
    // scan to sqrt(n); the widened comparison keeps the scan itself
    // overflow-free near the top of the range.
    if n > (1 << 40) && is_prime(n) {
        return Some(n);
    }
    let mut d: u64 = 5;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            return Some(d);
        }
        if n % (d + 2) == 0 {
            return Some(d + 2);
        }
        d += 6;
    }
    Some(n)
}

/// Least prime divisor of the product `a * b`, computed without forming
/// the product, so the result stays exact even when `a * b` would
/// overflow. Factors `<= 1` contribute nothing; if both factors are
/// `<= 1` there is no prime divisor and the result is `None`.
pub fn least_prime_divisor_of_product(a: u64, b: u64) -> Option<u64> {
    match (least_prime_divisor(a), least_prime_divisor(b)) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, Some(y)) => Some(y),
        (None, None) => None,
    }
}

/// Is `p` the lesser member of a twin prime pair `(p, p + 2)`?
pub fn is_twin_lesser(p: u64) -> bool {
    match p.checked_add(2) {
        Some(q) => is_prime(p) && is_prime(q),
        None => false,
    }
}

/// Is `p` the greater member of a twin prime pair `(p - 2, p)`?
pub fn is_twin_greater(p: u64) -> bool {
    p >= 2 && is_prime(p) && is_prime(p - 2)
}

/// The twin pair `(p, p + 2)` if both members are prime.
pub fn twin_pair(p: u64) -> Option<(u64, u64)> {
    if is_twin_lesser(p) {
        Some((p, p + 2))
    } else {
        None
    }
}

/// Least-prime-factor table for `0..=limit`, built once and read-only
/// afterwards. Used where a scan needs millions of least-prime-divisor
/// lookups, and as an independent cross-check for the trial-division
/// and Miller-Rabin routines.
pub struct LpfSieve {
    lpf: Vec<u32>,
}

impl LpfSieve {
    /// Builds the table. `limit` must fit the `u32` cell type.
    pub fn new(limit: u64) -> Self {
        assert!(limit <= u32::MAX as u64, "sieve limit exceeds cell type");
        let n = limit as usize + 1;
        let mut lpf = vec![0u32; n.max(2)];
        let mut i: usize = 2;
        while i < n {
            if lpf[i] == 0 {
                let mut j = i;
                while j < n {
                    if lpf[j] == 0 {
                        lpf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        LpfSieve { lpf }
    }

    pub fn limit(&self) -> u64 {
        self.lpf.len() as u64 - 1
    }

    /// Least prime factor of `n`, or `None` for `n <= 1`.
    /// Panics if `n` is beyond the table.
    pub fn least_prime_factor(&self, n: u64) -> Option<u64> {
        let v = self.lpf[n as usize];
        if v == 0 {
            None
        } else {
            Some(v as u64)
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.lpf[n as usize] as u64 == n
    }

    /// Ascending primes in `2..=limit`.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit()).filter(|&n| self.is_prime(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_pinned_values() {
        assert_eq!(gcd(86, 129), 43);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(1, 7), 1);
    }

    #[test]
    fn gcd_zero_convention() {
        assert_eq!(gcd(0, 2), 2);
        assert_eq!(gcd(0, 17), 17);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn gcd_exhaustive_small_laws() {
        // Commutativity and "divides both" over the full 1000 x 1000 grid.
        for a in 0..=1000u64 {
            for b in 0..=1000u64 {
                let g = gcd(a, b);
                assert_eq!(g, gcd(b, a));
                if a > 0 || b > 0 {
                    assert!(g > 0);
                    if a > 0 {
                        assert_eq!(a % g, 0);
                    }
                    if b > 0 {
                        assert_eq!(b % g, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn gcd_associative_small() {
        for a in 0..=120u64 {
            for b in 0..=120u64 {
                for c in 0..=120u64 {
                    assert_eq!(gcd(gcd(a, b), c), gcd(a, gcd(b, c)));
                }
            }
        }
    }

    #[test]
    fn primality_pinned_values() {
        assert!(is_prime(2));
        assert!(is_prime(617));
        assert!(is_prime(619));
        assert!(is_prime(3389));
        assert!(is_prime(3391));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(669));
    }

    #[test]
    fn primality_large_inputs() {
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(18_446_744_073_709_551_615)); // u64::MAX = 3 * 5 * 17 * ...
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn least_prime_divisor_pinned_values() {
        assert_eq!(least_prime_divisor(1295), Some(5));
        assert_eq!(least_prime_divisor(2), Some(2));
        assert_eq!(least_prime_divisor(35 * 37), Some(5));
        assert_eq!(least_prime_divisor(97), Some(97));
        assert_eq!(least_prime_divisor(1), None);
        assert_eq!(least_prime_divisor(0), None);
    }

    #[test]
    fn least_prime_divisor_of_product_avoids_overflow() {
        let a = 18_446_744_073_709_551_557; // prime
        let b = 18_446_744_073_709_551_533; // prime
        assert_eq!(least_prime_divisor_of_product(a, b), Some(b));
        assert_eq!(least_prime_divisor_of_product(35, 37), Some(5));
        assert_eq!(least_prime_divisor_of_product(1, 9), Some(3));
        assert_eq!(least_prime_divisor_of_product(0, 1), None);
    }

    #[test]
    fn twin_predicates_pinned_values() {
        assert_eq!(twin_pair(29), Some((29, 31)));
        assert_eq!(twin_pair(11), Some((11, 13)));
        assert_eq!(twin_pair(9), None);
        assert_eq!(twin_pair(23), None);
        assert!(is_twin_greater(5));
        assert!(is_twin_greater(13));
        assert!(is_twin_greater(38569));
        assert!(!is_twin_greater(11)); // 9 is composite
        assert!(!is_twin_greater(2));
        assert!(!is_twin_greater(0));
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieve = LpfSieve::new(10_000);
        for n in 0..=10_000u64 {
            assert_eq!(
                sieve.least_prime_factor(n),
                least_prime_divisor(n),
                "least prime factor disagreement at n = {n}"
            );
            assert_eq!(sieve.is_prime(n), is_prime(n), "primality disagreement at n = {n}");
        }
    }

    #[test]
    fn sieve_prime_iterator() {
        let sieve = LpfSieve::new(30);
        let primes: Vec<u64> = sieve.primes().collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
