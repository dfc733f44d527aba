//! Generation of permutations with a prescribed stabilizer from remainder data.
//!
//! If a^t stabilizes x and x(t) = jt, then x is pinned down by
//! x(i) = u_i·t + σ(i) for 0 < i < t, where σ ∈ S_{t-1} is x reduced mod t,
//! together with x(qt + i) = q·x(t) + x(i).
//!
//! Streams come out in seed order: j ascending, σ in one-line lexicographic
//! order, then u as an odometer with the last digit moving fastest.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::arith::{divisors, euler_phi, gcd, square_roots_of_unity, units};
use crate::error::{Error, Result};
use crate::matched_pair::{check_divisor, is_orbit_min, is_stabilized_by, orbit, orbit_involutions_raw, Orbit};
use crate::perm::{is_involution_raw, Permutation};

pub const DEFAULT_MAX_WORK: u128 = 100_000_000;
pub const MAX_WORK_ENV: &str = "BISMASH_MAX_WORK";

/// Cap on the number of generated candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Workload {
    pub limit: u128,
}

impl Workload {
    pub fn new(limit: u128) -> Self {
        Workload { limit }
    }

    /// `BISMASH_MAX_WORK` when set and parseable, else 10^8.
    pub fn from_env() -> Self {
        let limit = std::env::var(MAX_WORK_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_WORK);
        Workload { limit }
    }

    pub fn unlimited() -> Self {
        Workload { limit: u128::MAX }
    }

    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.limit {
            return Err(Error::WorkloadExceeded { required, limit: self.limit });
        }
        Ok(())
    }
}

impl Default for Workload {
    fn default() -> Self {
        Self::from_env()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RemainderSeed {
    pub n: usize,
    pub t: usize,
    /// x(t) = j·t, a unit mod n/t.
    pub j: usize,
    /// Remainder permutation, of degree t (it fixes t).
    pub sigma: Permutation,
    /// u_1..u_{t-1}, residues mod n/t.
    pub u: Vec<usize>,
}

impl RemainderSeed {
    pub fn new(n: usize, t: usize, j: usize, sigma: Permutation, u: Vec<usize>) -> Result<Self> {
        check_divisor(n, t)?;
        let m = n / t;
        if j >= m || gcd(j, m) != 1 {
            return Err(Error::InvalidParameter(format!("j = {j} is not a unit mod {m}")));
        }
        if sigma.n() != t || !sigma.fixes_n() {
            return Err(Error::InvalidParameter(format!("sigma must lie in S_{} inside S_{t}", t - 1)));
        }
        if u.len() != t - 1 || u.iter().any(|&v| v >= m) {
            return Err(Error::InvalidParameter(format!("u must hold {} residues mod {m}", t - 1)));
        }
        Ok(RemainderSeed { n, t, j, sigma, u })
    }
}

/// Write the permutation with the given remainder data into `buf` (residue storage).
fn fill(n: usize, t: usize, j: usize, sigma: &[usize], u: &[usize], buf: &mut [u16]) {
    buf[0] = 0;
    for i in 1..t {
        buf[i] = (u[i - 1] * t + sigma[i - 1]) as u16;
    }
    let xt = j * t % n;
    for k in t..n {
        buf[k] = ((buf[k - t] as usize + xt) % n) as u16;
    }
}

pub fn build_from_seed(seed: &RemainderSeed) -> Permutation {
    let sigma: Vec<usize> = (1..seed.t).map(|i| seed.sigma.apply(i)).collect();
    let mut buf = vec![0u16; seed.n];
    fill(seed.n, seed.t, seed.j, &sigma, &seed.u, &mut buf);
    Permutation::from_residues_unchecked(buf)
}

/// Recover (j, σ, u) from x, provided a^t stabilizes x.
pub fn extract_seed(x: &Permutation, t: usize) -> Result<RemainderSeed> {
    let n = x.n();
    check_divisor(n, t)?;
    if !x.fixes_n() {
        return Err(Error::DoesNotFixN(n));
    }
    if !is_stabilized_by(x.residues(), t) {
        return Err(Error::InvalidParameter(format!("a^{t} does not stabilize {x}")));
    }
    let m = n / t;
    let mut sigma: Vec<usize> = (1..t).map(|i| x.residue(i) % t).collect();
    sigma.push(t);
    let u = (1..t).map(|i| x.residue(i) / t).collect();
    RemainderSeed::new(n, t, x.residue(t) / t % m, Permutation::from_images(&sigma)?, u)
}

fn saturating_product(factors: impl IntoIterator<Item = u128>) -> u128 {
    factors.into_iter().fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// Number of a^t-stabilized candidates: φ(m)·m^{t-1}·(t-1)!.
pub fn stabilized_candidates(n: usize, t: usize) -> u128 {
    let m = (n / t) as u128;
    saturating_product(
        std::iter::once(euler_phi(n / t) as u128).chain(std::iter::repeat_n(m, t - 1)).chain(1..t as u128),
    )
}

/// Number of involutive seeds generated for (n, t).
pub fn involution_candidates(n: usize, t: usize) -> u128 {
    let m = n / t;
    let mut total = 0u128;
    for j in square_roots_of_unity(m) {
        let alpha = gcd(j + 1, m) as u128;
        for l in 0..=(t - 1) / 2 {
            let sigmas = crate::arith::involutions_with_pairs(t - 1, l);
            let sigmas: u128 = sigmas.try_into().unwrap_or(u128::MAX);
            let term = saturating_product(
                std::iter::once(sigmas)
                    .chain(std::iter::repeat_n(m as u128, l))
                    .chain(std::iter::repeat_n(alpha, t - 1 - 2 * l)),
            );
            total = total.saturating_add(term);
        }
    }
    total
}

fn proper_divisors(t: usize) -> Vec<usize> {
    divisors(t).into_iter().filter(|&d| d < t).collect()
}

#[inline]
fn exact(x: &[u16], proper: &[usize]) -> bool {
    !proper.iter().any(|&d| is_stabilized_by(x, d))
}

/// Visit every a^t-stabilized permutation whose j lies in `js`, in seed order,
/// keeping the values `f` returns. Work is split by (j, σ(1)) and merged in order.
fn scan_stabilized<T, F>(n: usize, t: usize, js: &[usize], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u16]) -> Option<T> + Sync,
{
    let m = n / t;
    let firsts: Vec<Option<usize>> = if t <= 1 { vec![None] } else { (1..t).map(Some).collect() };
    let parts: Vec<(usize, Option<usize>)> = js.iter().flat_map(|&j| firsts.iter().map(move |&s1| (j, s1))).collect();
    let chunks: Vec<Vec<T>> = parts
        .par_iter()
        .map(|&(j, first)| {
            let mut out = Vec::new();
            let mut buf = vec![0u16; n];
            let mut u = vec![0usize; t.saturating_sub(1)];
            let rest: Vec<usize> = (1..t).filter(|&v| Some(v) != first).collect();
            let mut visit_sigma = |sigma: &[usize]| {
                u.iter_mut().for_each(|d| *d = 0);
                loop {
                    fill(n, t, j, sigma, &u, &mut buf);
                    if let Some(v) = f(&buf) {
                        out.push(v);
                    }
                    if !odometer(&mut u, m) {
                        break;
                    }
                }
            };
            match first {
                None => visit_sigma(&[]),
                Some(s1) => {
                    let k = rest.len();
                    for tail in rest.iter().copied().permutations(k) {
                        let mut sigma = Vec::with_capacity(t - 1);
                        sigma.push(s1);
                        sigma.extend(tail);
                        visit_sigma(&sigma);
                    }
                }
            }
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

/// Advance digits base m, last digit fastest; false once it wraps to zero.
fn odometer(digits: &mut [usize], m: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < m {
            return true;
        }
        *d = 0;
    }
    false
}

/// Drive `f` over M_{n/t}, the permutations with stabilizer exactly ⟨a^t⟩.
pub fn scan_exact_stabilizer<T, F>(n: usize, t: usize, work: &Workload, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[u16]) -> Option<T> + Sync,
{
    check_divisor(n, t)?;
    work.check(stabilized_candidates(n, t))?;
    let proper = proper_divisors(t);
    Ok(scan_stabilized(n, t, &units(n / t), |x| if exact(x, &proper) { f(x) } else { None }))
}

/// All of M_{n/t}.
pub fn enumerate_exact_stabilizer(n: usize, t: usize, work: &Workload) -> Result<Vec<Permutation>> {
    scan_exact_stabilizer(n, t, work, |x| Some(Permutation::from_residue_slice(x)))
}

/// Involutions of S_k (fixing nothing in particular) in one-line lexicographic
/// order, as 1-indexed image lists.
fn involutions_of(k: usize) -> Vec<Vec<usize>> {
    fn go(img: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = img.len();
        let Some(i) = (0..k).find(|&i| img[i] == 0) else {
            out.push(img.clone());
            return;
        };
        img[i] = i + 1;
        go(img, out);
        img[i] = 0;
        for p in i + 1..k {
            if img[p] == 0 {
                img[i] = p + 1;
                img[p] = i + 1;
                go(img, out);
                img[i] = 0;
                img[p] = 0;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![0; k], &mut out);
    out
}

/// T_{n/t}: involutions with stabilizer exactly ⟨a^t⟩, from seeds with
/// σ an involution and u_i = −j·u_{σ(i)}.
pub fn enumerate_involutions(n: usize, t: usize, work: &Workload) -> Result<Vec<Permutation>> {
    check_divisor(n, t)?;
    work.check(involution_candidates(n, t))?;
    let m = n / t;
    let proper = proper_divisors(t);
    let mut out = Vec::new();
    let mut buf = vec![0u16; n];
    let sigmas = involutions_of(t - 1);
    for j in square_roots_of_unity(m) {
        let kernel: Vec<usize> = (0..m).filter(|u| u * (j + 1) % m == 0).collect();
        for sigma in &sigmas {
            // free digits: fixed points range over the kernel, the smaller
            // point of each pair over all of Z/m
            let free: Vec<usize> = (0..t - 1).filter(|&i| sigma[i] > i).collect();
            let radix: Vec<usize> = free.iter().map(|&i| if sigma[i] == i + 1 { kernel.len() } else { m }).collect();
            let mut digits = vec![0usize; free.len()];
            let mut u = vec![0usize; t - 1];
            loop {
                for (&i, &d) in free.iter().zip(&digits) {
                    if sigma[i] == i + 1 {
                        u[i] = kernel[d];
                    } else {
                        u[i] = d;
                        u[sigma[i] - 1] = (m - j * d % m) % m;
                    }
                }
                fill(n, t, j, sigma, &u, &mut buf);
                debug_assert!(is_involution_raw(&buf));
                if exact(&buf, &proper) {
                    out.push(Permutation::from_residue_slice(&buf));
                }
                if !mixed_odometer(&mut digits, &radix) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn mixed_odometer(digits: &mut [usize], radix: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radix).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// R_{n/t,r}: members of T_{n/t} with exactly r fixed points (n included).
pub fn enumerate_involutions_fixed(n: usize, t: usize, r: usize, work: &Workload) -> Result<Vec<Permutation>> {
    if r > n || (n - r) % 2 == 1 {
        check_divisor(n, t)?;
        return Ok(Vec::new());
    }
    Ok(enumerate_involutions(n, t, work)?.into_iter().filter(|x| x.fixed_points().len() == r).collect())
}

/// Orbits of length t, optionally only those holding exactly r involutions.
pub fn enumerate_orbit_reps(n: usize, t: usize, r: Option<usize>, work: &Workload) -> Result<Vec<Orbit>> {
    let reps = scan_exact_stabilizer(n, t, work, |x| {
        if !is_orbit_min(x, t) {
            return None;
        }
        if let Some(r) = r {
            let mut buf = vec![0u16; n];
            if orbit_involutions_raw(x, t, &mut buf) != r {
                return None;
            }
        }
        Some(Permutation::from_residue_slice(x))
    })?;
    Ok(reps.iter().map(orbit).collect())
}

/// Histogram: involutions per orbit → number of orbits of length t.
pub fn orbit_census(n: usize, t: usize, work: &Workload) -> Result<BTreeMap<usize, u64>> {
    let counts = scan_exact_stabilizer(n, t, work, |x| {
        if !is_orbit_min(x, t) {
            return None;
        }
        let mut buf = vec![0u16; n];
        Some(orbit_involutions_raw(x, t, &mut buf))
    })?;
    let mut hist = BTreeMap::new();
    for r in counts {
        *hist.entry(r).or_insert(0) += 1;
    }
    Ok(hist)
}
