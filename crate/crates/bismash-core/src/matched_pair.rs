//! The factorization S_n = C_n S_{n-1} and the actions x ◁ a^r, x ▷ a^r.
//!
//! `a` is the n-cycle i ↦ i+1. For x fixing n:
//!
//! * (x ◁ a^r)(u) = x(u + r) − x(r)  (mod n)
//! * x ▷ a^r = a^{x(r)}
//!
//! so that x·a^r = (x ▷ a^r)(x ◁ a^r).

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::cmp::Ordering;

/// Stabilizer ⟨a^t⟩ of x under ◁, with x(t) = j·t.
///
/// `j` is reduced mod n/t, so it is 0 only when t = n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StabilizerInfo {
    pub t: usize,
    pub j: usize,
}

impl StabilizerInfo {
    /// n / t, the order of the stabilizer.
    pub fn index(&self, n: usize) -> usize {
        n / self.t
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// `members[l - 1] = x ◁ a^l` for l = 1..=t; the last one is x.
    pub members: Vec<Permutation>,
    pub representative: Permutation,
    pub stabilizer: StabilizerInfo,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn involution_count(&self) -> usize {
        self.members.iter().filter(|y| y.is_involution()).count()
    }
}

/// Where x^{-1} sits in the orbit of x, and the shifts fed to the indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InversionData {
    pub in_orbit: bool,
    /// Smallest s in 1..=t with x^{-1} = x ◁ a^s.
    pub s: Option<usize>,
    /// x(t) + t = u1·t, mod n/t.
    pub u1: usize,
    /// x(s) + s = u2·t, mod n/t.
    pub u2: Option<usize>,
}

fn require_fixes_n(x: &Permutation) {
    assert!(x.fixes_n(), "{x} does not fix n = {}", x.n());
}

/// x ◁ a^r.
pub fn act_left(x: &Permutation, r: usize) -> Permutation {
    require_fixes_n(x);
    let mut out = vec![0u16; x.n()];
    act_left_into(x.residues(), r, &mut out);
    Permutation::from_residues_unchecked(out)
}

/// Exponent of x ▷ a^r, i.e. x(r) mod n.
pub fn act_right(x: &Permutation, r: usize) -> usize {
    require_fixes_n(x);
    x.residue(r)
}

/// Write λ = a^r x with x fixing n; returns (r, x).
pub fn factorize(lambda: &Permutation) -> (usize, Permutation) {
    let n = lambda.n();
    let r = lambda.residue(0);
    let x: Vec<u16> = lambda.residues().iter().map(|&v| ((v as usize + n - r) % n) as u16).collect();
    (r, Permutation::from_residues_unchecked(x))
}

pub fn stabilizer(x: &Permutation) -> StabilizerInfo {
    require_fixes_n(x);
    let n = x.n();
    let t = stabilizer_t(x.residues(), &divisors(n));
    StabilizerInfo { t, j: x.residue(t) / t % (n / t) }
}

pub fn orbit(x: &Permutation) -> Orbit {
    let stab = stabilizer(x);
    let members: Vec<Permutation> = (1..=stab.t).map(|l| act_left(x, l)).collect();
    let representative = members.iter().min().cloned().expect("orbit is never empty");
    Orbit { members, representative, stabilizer: stab }
}

/// Canonical representative of the orbit of x.
pub fn orbit_representative(x: &Permutation) -> Permutation {
    orbit(x).representative
}

pub fn inversion_data(x: &Permutation) -> InversionData {
    let stab = stabilizer(x);
    let inv = x.inverse();
    inversion_data_raw(x.residues(), inv.residues(), stab.t)
}

/// Exponents r with x^{-1} ◁ a^r = x, where x is the given permutation.
pub fn inv_transporter_set(y: &Permutation) -> Vec<usize> {
    let stab = stabilizer(y);
    let data = inversion_data(y);
    match data.s {
        Some(s) => (0..y.n()).filter(|r| (r + s) % stab.t == 0).collect(),
        None => Vec::new(),
    }
}

/// Validate that t divides n.
pub fn check_divisor(n: usize, t: usize) -> Result<()> {
    if t == 0 || !n.is_multiple_of(t) {
        return Err(Error::NotADivisor { n, t });
    }
    Ok(())
}

// Slice-level kernels shared with the enumeration code. `x` is in residue
// storage and fixes n.

pub(crate) fn act_left_into(x: &[u16], r: usize, out: &mut [u16]) {
    let n = x.len();
    let xr = x[r % n] as usize;
    for (u, slot) in out.iter_mut().enumerate() {
        *slot = ((x[(u + r) % n] as usize + n - xr) % n) as u16;
    }
}

#[inline]
pub(crate) fn is_stabilized_by(x: &[u16], t: usize) -> bool {
    let n = x.len();
    let xt = x[t % n] as usize;
    (0..n).all(|u| x[(u + t) % n] as usize == (x[u] as usize + xt) % n)
}

/// Smallest divisor t (from the sorted list) with a^t stabilizing x.
pub(crate) fn stabilizer_t(x: &[u16], divs: &[usize]) -> usize {
    divs.iter().copied().find(|&d| is_stabilized_by(x, d)).unwrap_or(x.len())
}

/// Compare x ◁ a^l with x in one-line order without building the former.
#[inline]
fn cmp_shift_with(x: &[u16], l: usize) -> Ordering {
    let n = x.len();
    let xl = x[l % n] as usize;
    for k in 1..n {
        let y = (x[(k + l) % n] as usize + n - xl) % n;
        match y.cmp(&(x[k] as usize)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// True when x is the one-line minimum of its orbit (of length t).
pub(crate) fn is_orbit_min(x: &[u16], t: usize) -> bool {
    (1..t).all(|l| cmp_shift_with(x, l) != Ordering::Less)
}

pub(crate) fn orbit_involutions_raw(x: &[u16], t: usize, buf: &mut [u16]) -> usize {
    (1..=t)
        .filter(|&l| {
            act_left_into(x, l, buf);
            crate::perm::is_involution_raw(buf)
        })
        .count()
}

pub(crate) fn inversion_data_raw(x: &[u16], inv: &[u16], t: usize) -> InversionData {
    let n = x.len();
    let m = n / t;
    let u1 = ((x[t % n] as usize + t) % n / t) % m;
    let found = (1..=t).find(|&s| {
        let xs = x[s % n] as usize;
        (0..n).all(|k| (x[(k + s) % n] as usize + n - xs) % n == inv[k] as usize)
    });
    match found {
        Some(s) => {
            let shifted = (x[s % n] as usize + s) % n;
            assert_eq!(shifted % t, 0, "x(s) + s must be a multiple of t");
            InversionData { in_orbit: true, s: Some(s), u1, u2: Some(shifted / t % m) }
        }
        None => InversionData { in_orbit: false, s: None, u1, u2: None },
    }
}
