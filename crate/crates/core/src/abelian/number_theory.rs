//! Integer helpers: factorization, Ω, p-adic valuation, triangular numbers.

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor 0");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
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

/// Number of prime factors counted with multiplicity.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).iter().map(|&(_, e)| e).sum()
}

/// Multiplicity of the prime `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n > 0 && p > 1);
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// `k(k+1)/2`.
pub fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// `p^e`, panicking on overflow.
pub fn pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(big_omega(12), 3);
        assert_eq!(big_omega(1), 0);
        assert_eq!(valuation(48, 2), 4);
        assert_eq!(valuation(48, 5), 0);
        assert_eq!((0..6).map(triangular).collect::<Vec<_>>(), vec![0, 1, 3, 6, 10, 15]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(n in 1u64..1_000_000) {
            let f = factorize(n);
            prop_assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
            prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
            let brute = (1..=n).filter(|d| n % d == 0).count();
            if n < 5000 {
                prop_assert_eq!(divisors(n).len(), brute);
            }
        }
    }
}
