//! Small number theory over residues, plus the factorial-sized counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `m`, increasing.
pub fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn euler_phi(m: usize) -> usize {
    prime_factors(m).into_iter().fold(m, |acc, p| acc / p * (p - 1))
}

/// Number of distinct prime divisors.
pub fn omega(m: usize) -> usize {
    prime_factors(m).len()
}

pub fn is_prime(m: usize) -> bool {
    m >= 2 && prime_factors(m) == [m]
}

/// Units of Z/m in increasing order; for m = 1 this is {0}.
pub fn units(m: usize) -> Vec<usize> {
    (0..m).filter(|&j| gcd(j, m) == 1).collect()
}

/// Square roots of unity mod m (the set E).
pub fn square_roots_of_unity(m: usize) -> Vec<usize> {
    (0..m).filter(|&j| (j * j) % m == 1 % m).collect()
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(k: usize, r: usize) -> BigInt {
    if r > k {
        return BigInt::default();
    }
    let r = r.min(k - r);
    (0..r).fold(BigInt::one(), |acc, i| acc * (k - i) / (i + 1))
}

/// Involutions of S_k with exactly `l` transpositions: k!/((k-2l)! 2^l l!).
pub fn involutions_with_pairs(k: usize, l: usize) -> BigInt {
    if 2 * l > k {
        return BigInt::default();
    }
    factorial(k) / (factorial(k - 2 * l) * (BigInt::one() << l) * factorial(l))
}

/// Involutions of S_m, identity included.
pub fn involution_count(m: usize) -> BigInt {
    (0..=m / 2).map(|l| involutions_with_pairs(m, l)).sum()
}

pub fn pow(base: usize, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(omega(60), 3);
        assert_eq!(units(1), vec![0]);
        assert_eq!(square_roots_of_unity(6), vec![1, 5]);
        assert_eq!(square_roots_of_unity(8), vec![1, 3, 5, 7]);
        assert_eq!(square_roots_of_unity(1), vec![0]);
        assert_eq!(involution_count(1), BigInt::from(1));
        assert_eq!(involution_count(5), BigInt::from(26));
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }

    #[test]
    fn involution_count_matches_brute_force() {
        use itertools::Itertools;
        for m in 1..=7usize {
            let brute = (0..m).permutations(m).filter(|p| (0..m).all(|i| p[p[i]] == i)).count();
            assert_eq!(involution_count(m), BigInt::from(brute), "m = {m}");
        }
    }
}
