//! Closed-form and recursive counts over the divisor lattice of n.
//!
//! Notation, for t | n and m = n/t:
//!
//! * M_{n/t}: permutations of S_{n-1} with stabilizer exactly ⟨a^t⟩
//! * T_{n/t}: the involutions among them
//! * R_{n/t,r}: members of T_{n/t} with r fixed points (n included)
//! * X_{n/t,r}: members of T_{n/t} whose orbit holds r involutions
//! * O_{n/t,r}: orbits of length t holding r involutions
//! * I: irrep tallies by indicator, counted over pairs (x, i) with x in M_{n/t}
//!
//! Each "stabilized by a^t" count is a product formula over remainder seeds;
//! the exact-stabilizer count subtracts the same quantity at every proper
//! divisor of t.

pub mod ratios;
pub mod tables;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{binomial, divisors, euler_phi, factorial, involutions_with_pairs, pow};
use crate::error::{Error, Result};
use crate::matched_pair::check_divisor;
use tables::{alpha, beta, delta_exists, delta_pc, e_set, k_prime_set, k_set, p_c_set, p_set};

pub use crate::arith::{euler_phi as phi, involution_count, omega};
pub use tables::{helper_tables, HelperParams, HelperTables};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    M(usize),
    T(usize),
    R(usize, usize),
    /// (modulus of the remainder permutation, stabilizer, fixed points, j gate)
    C(usize, usize, usize, Option<usize>),
}

/// Memo for the counts of one n. Not shared between threads.
#[derive(Clone, Debug)]
pub struct CountContext {
    n: usize,
    memo: HashMap<Key, BigInt>,
}

/// Irreps of one dimension split by indicator (pair counting).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorCounts {
    pub plus: BigInt,
    pub minus: BigInt,
    pub zero: BigInt,
}

fn proper_divisors(t: usize) -> impl Iterator<Item = usize> {
    divisors(t).into_iter().filter(move |&d| d < t)
}

impl CountContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(CountContext { n, memo: HashMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, t: usize) -> Result<usize> {
        check_divisor(self.n, t)?;
        Ok(self.n / t)
    }

    fn memo_get(&self, key: Key) -> Option<BigInt> {
        self.memo.get(&key).cloned()
    }

    fn memo_put(&mut self, key: Key, v: BigInt) -> BigInt {
        self.memo.insert(key, v.clone());
        v
    }

    /// |M_{n/t}| = φ(m)·m^{t-1}·(t-1)! − Σ_{s|t, s<t} |M_{n/s}|.
    pub fn count_m(&mut self, t: usize) -> Result<BigInt> {
        let m = self.check(t)?;
        if let Some(v) = self.memo_get(Key::M(t)) {
            return Ok(v);
        }
        let mut v = BigInt::from(euler_phi(m)) * pow(m, t - 1) * factorial(t - 1);
        for s in proper_divisors(t) {
            v -= self.count_m(s)?;
        }
        Ok(self.memo_put(Key::M(t), v))
    }

    /// |T_{n/t}|: involutive seeds (j ∈ E, σ with l transpositions, each
    /// pair contributing m choices and each fixed point α choices), minus
    /// smaller stabilizers.
    pub fn count_t(&mut self, t: usize) -> Result<BigInt> {
        let m = self.check(t)?;
        if let Some(v) = self.memo_get(Key::T(t)) {
            return Ok(v);
        }
        let mut v = BigInt::zero();
        for j in e_set(m) {
            let a = alpha(m, j);
            for l in 0..=(t - 1) / 2 {
                v += pow(a, t - 1 - 2 * l) * pow(m, l) * involutions_with_pairs(t - 1, l);
            }
        }
        for s in proper_divisors(t) {
            v -= self.count_t(s)?;
        }
        Ok(self.memo_put(Key::T(t), v))
    }

    /// |R_{n/t,r}|, with the δ^{P^c} substitution and the δ^l gate.
    pub fn count_r(&mut self, t: usize, r: usize) -> Result<BigInt> {
        let m = self.check(t)?;
        if r == 0 || r > self.n || (self.n - r) % 2 == 1 {
            return Ok(BigInt::zero());
        }
        if let Some(v) = self.memo_get(Key::R(t, r)) {
            return Ok(v);
        }
        let mut v = BigInt::zero();
        for j in e_set(m) {
            if !delta_exists(t, m, j, r) {
                continue;
            }
            let mr = r / beta(m, j);
            if mr == 0 || mr > t {
                continue;
            }
            let pc_empty = p_c_set(m, j).is_empty();
            let p_len = p_set(m, j).len();
            for l in 0..=(t - mr) / 2 {
                // gate: with no P^c choices every non-P fixed point must vanish
                if pc_empty && 2 * l != t - mr {
                    continue;
                }
                v += binomial(t - 1 - 2 * l, mr - 1)
                    * pow(p_len, mr - 1)
                    * pow(delta_pc(m, j), t - 2 * l - mr)
                    * pow(m, l)
                    * involutions_with_pairs(t - 1, l);
            }
        }
        for s in proper_divisors(t) {
            v -= self.count_r(s, r)?;
        }
        Ok(self.memo_put(Key::R(t, r), v))
    }

    /// Involutions stabilized by a^s (not necessarily exactly) whose reduction
    /// mod `big` has r fixed points in 1..=big, where s | big | n. With
    /// `gate = Some(j)` only x with x(big) ≡ j·big are kept.
    fn stabilized_with_fixed(&self, big: usize, s: usize, r: usize, gate: Option<usize>) -> BigInt {
        let n = self.n;
        let (ms, q, mt) = (n / s, big / s, n / big);
        let mut total = BigInt::zero();
        for jp in e_set(ms) {
            if let Some(j) = gate {
                if jp % mt != j % mt {
                    continue;
                }
            }
            let js = jp % q;
            let b = beta(q, js);
            if !r.is_multiple_of(b) || r / b == 0 {
                continue;
            }
            let mm = r / b;
            // split the kernel of (1 + j') mod n/s by whether the reduction
            // mod q lies in P
            let (mut in_p, mut out_p) = (0usize, 0usize);
            for l in (0..ms).filter(|l| l * (1 + jp) % ms == 0) {
                if (l % q) % b == 0 {
                    in_p += 1;
                } else {
                    out_p += 1;
                }
            }
            for l in 0..=(s - 1) / 2 {
                let free = s - 1 - 2 * l;
                if free + 1 < mm {
                    continue;
                }
                total += binomial(free, mm - 1)
                    * pow(in_p, mm - 1)
                    * pow(out_p, free + 1 - mm)
                    * pow(ms, l)
                    * involutions_with_pairs(s - 1, l);
            }
        }
        total
    }

    /// Exact-stabilizer version of [`Self::stabilized_with_fixed`].
    fn exact_with_fixed(&mut self, big: usize, s: usize, r: usize, gate: Option<usize>) -> BigInt {
        let key = Key::C(big, s, r, gate);
        if let Some(v) = self.memo_get(key) {
            return v;
        }
        let mut v = self.stabilized_with_fixed(big, s, r, gate);
        for p in proper_divisors(s) {
            v -= self.exact_with_fixed(big, p, r, gate);
        }
        self.memo_put(key, v)
    }

    fn check_c(&self, t: usize, s: usize) -> Result<()> {
        check_divisor(self.n, t)?;
        check_divisor(t, s)
    }

    /// |X_{n/t,r}|: involutions with stabilizer ⟨a^t⟩ whose orbit holds r
    /// involutions, equivalently whose remainder permutation mod t has r
    /// fixed points in 1..=t.
    pub fn count_x(&mut self, t: usize, r: usize) -> Result<BigInt> {
        self.check(t)?;
        if r == 0 || r > t || (t - r) % 2 == 1 {
            return Ok(BigInt::zero());
        }
        Ok(self.exact_with_fixed(t, t, r, None))
    }

    /// C_{n,t,s,r}: involutions with stabilizer exactly ⟨a^s⟩ whose reduction
    /// mod t has r fixed points in 1..=t.
    pub fn count_c(&mut self, t: usize, s: usize, r: usize) -> Result<BigInt> {
        self.check_c(t, s)?;
        if r == 0 {
            return Ok(BigInt::zero());
        }
        Ok(self.exact_with_fixed(t, s, r, None))
    }

    /// C̃: [`Self::count_c`] restricted to x(t) ≡ j·t.
    pub fn count_c_tilde(&mut self, t: usize, s: usize, r: usize, j: usize) -> Result<BigInt> {
        self.check_c(t, s)?;
        if r == 0 {
            return Ok(BigInt::zero());
        }
        Ok(self.exact_with_fixed(t, s, r, Some(j)))
    }

    /// |O_{n/t,r}|.
    pub fn count_o(&mut self, t: usize, r: usize) -> Result<BigInt> {
        self.check(t)?;
        if r > t {
            return Err(Error::InvalidParameter(format!("an orbit of length {t} cannot hold {r} involutions")));
        }
        if r > 0 {
            let x = self.count_x(t, r)?;
            let (q, rem) = x.div_rem(&BigInt::from(r));
            assert!(rem.is_zero(), "X_{{n/{t},{r}}} = {x} is not divisible by {r}");
            return Ok(q);
        }
        let mut v = self.count_m(t)? / BigInt::from(t);
        for r in 1..=t {
            v -= self.count_o(t, r)?;
        }
        Ok(v)
    }

    /// |O_{n/t,r,j}|: orbits of length t holding r ≥ 1 involutions, with
    /// y(t) = j·t for every member y.
    pub fn count_o_j(&mut self, t: usize, r: usize, j: usize) -> Result<BigInt> {
        let m = self.check(t)?;
        if r == 0 || r > t {
            return Err(Error::InvalidParameter(format!("need 1 <= r <= t, got r = {r}")));
        }
        if !e_set(m).contains(&j) {
            return Err(Error::InvalidParameter(format!("j = {j} is not a square root of 1 mod {m}")));
        }
        if (t - r) % 2 == 1 {
            return Ok(BigInt::zero());
        }
        let x = self.exact_with_fixed(t, t, r, Some(j));
        Ok(x / BigInt::from(r))
    }

    /// (+1, 0) tallies for odd t.
    pub fn count_i_odd(&mut self, t: usize) -> Result<IndicatorCounts> {
        let m = self.check(t)?;
        if t.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("t = {t} is even")));
        }
        let mut plus = BigInt::zero();
        for j in e_set(m) {
            let mut orbits = BigInt::zero();
            for r in (1..=t).filter(|r| (t - r).is_multiple_of(2)) {
                orbits += self.count_o_j(t, r, j)?;
            }
            plus += orbits * alpha(m, j);
        }
        plus *= t;
        let zero = BigInt::from(m) * self.count_m(t)? - &plus;
        Ok(IndicatorCounts { plus, minus: BigInt::zero(), zero })
    }

    /// (+1, −1, 0) tallies for t = 2.
    ///
    /// Involutions (u ∈ K_j) give +1 on all α_j admissible characters.
    /// Non-involutions with x^{-1} in the orbit (u ∈ K'_j) give ±1 on the
    /// characters i ∈ K_j according to whether i(u+1) ≡ 0 mod n/2. Both
    /// families exclude u with j ≡ 2u+1, where the stabilizer is larger.
    pub fn count_i_t2(&mut self) -> Result<IndicatorCounts> {
        let n = self.n;
        if n % 2 == 1 {
            return Err(Error::InvalidParameter(format!("n = {n} is odd")));
        }
        let m = n / 2;
        let (mut plus, mut minus) = (BigInt::zero(), BigInt::zero());
        for j in e_set(m) {
            let kernel = k_set(m, j);
            for u in &kernel {
                if tables::delta_bar(n, j, *u) {
                    plus += alpha(m, j);
                }
            }
            for u in k_prime_set(n, j) {
                if !tables::delta_bar(n, j, u) {
                    continue;
                }
                for &i in &kernel {
                    if tables::delta_zero(n, i, u) {
                        plus += 1;
                    } else {
                        minus += 1;
                    }
                }
            }
        }
        let zero = BigInt::from(m) * self.count_m(2)? - &plus - &minus;
        Ok(IndicatorCounts { plus, minus, zero })
    }
}

/// Orbit count of the prime case: (i_p − 1)/p − 1 orbits of length p hold an involution.
pub fn prime_orbits_with_involution(p: usize) -> BigInt {
    (involution_count(p) - 1) / BigInt::from(p) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn m_at_twelve() {
        let mut ctx = CountContext::new(12).unwrap();
        let got: Vec<BigInt> = divisors(12).into_iter().map(|t| ctx.count_m(t).unwrap()).collect();
        assert_eq!(got, [4, 8, 60, 312, 3768, 39_912_648].map(b));
        assert_eq!(got.iter().sum::<BigInt>(), factorial(11));
    }

    #[test]
    fn small_worked_values() {
        assert_eq!(CountContext::new(6).unwrap().count_t(3).unwrap(), b(4));
        assert_eq!(CountContext::new(8).unwrap().count_r(4, 2).unwrap(), b(5));
        let mut c12 = CountContext::new(12).unwrap();
        assert_eq!(c12.count_x(3, 1).unwrap(), b(6));
        assert_eq!(c12.count_o(3, 1).unwrap(), b(6));
        let i = c12.count_i_t2().unwrap();
        assert_eq!((i.plus, i.minus, i.zero), (b(30), b(2), b(16)));
    }

    #[test]
    fn parameter_errors() {
        assert!(CountContext::new(0).is_err());
        assert!(CountContext::new(35).unwrap().count_i_t2().is_err());
        assert!(CountContext::new(12).unwrap().count_i_odd(2).is_err());
        assert!(CountContext::new(12).unwrap().count_m(5).is_err());
        assert!(CountContext::new(12).unwrap().count_o_j(3, 0, 1).is_err());
    }

    #[test]
    fn prime_bridge() {
        for p in [3usize, 5, 7, 11] {
            let mut ctx = CountContext::new(p).unwrap();
            let total: BigInt =
                (0..=p).map(|r| ctx.count_o(p, r).unwrap()).sum::<BigInt>() - ctx.count_o(p, 0).unwrap();
            assert_eq!(total, prime_orbits_with_involution(p), "p={p}");
        }
    }
}
