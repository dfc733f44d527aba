//! The helper sets and values used throughout the counting formulas.
//!
//! Every set is a sorted list of residues in 0..modulus. The modulus-level
//! functions take the modulus directly because the formulas use them at
//! n/t, t/s and n/s alike.

use crate::arith::{gcd, square_roots_of_unity};
use crate::error::{Error, Result};
use crate::matched_pair::check_divisor;

/// E: j with j² ≡ 1.
pub fn e_set(m: usize) -> Vec<usize> {
    square_roots_of_unity(m)
}

/// K_j: u with u(j+1) ≡ 0.
pub fn k_set(m: usize, j: usize) -> Vec<usize> {
    (0..m).filter(|u| (u * (j + 1)).is_multiple_of(m)).collect()
}

/// α_j = gcd(j+1, m) = |K_j|.
pub fn alpha(m: usize, j: usize) -> usize {
    gcd((j + 1) % m, m)
}

/// β_j = gcd(j−1, m).
pub fn beta(m: usize, j: usize) -> usize {
    gcd((j + m - 1) % m, m)
}

/// P_j = {q(1−j)}: the multiples of β_j.
pub fn p_set(m: usize, j: usize) -> Vec<usize> {
    let b = beta(m, j);
    (0..m).step_by(b).collect()
}

/// P^c_j = K_j \ P_j.
pub fn p_c_set(m: usize, j: usize) -> Vec<usize> {
    let b = beta(m, j);
    k_set(m, j).into_iter().filter(|u| u % b != 0).collect()
}

/// |P^c_j|, or 1 when that set is empty.
pub fn delta_pc(m: usize, j: usize) -> usize {
    p_c_set(m, j).len().max(1)
}

/// [β | r and r ≤ tβ].
pub fn delta_exists(t: usize, m: usize, j: usize, r: usize) -> bool {
    let b = beta(m, j);
    r.is_multiple_of(b) && r <= t * b
}

/// r / β when β divides r.
pub fn m_ratio(m: usize, j: usize, r: usize) -> Option<usize> {
    let b = beta(m, j);
    r.is_multiple_of(b).then_some(r / b)
}

/// K̄: u in 0..n/t with (u·t/s + m_i)(1 + j') ≡ 0 mod n/s for some m_i in `lifts`.
fn kbar_from(n: usize, t: usize, s: usize, j_prime: usize, lifts: &[usize]) -> Vec<usize> {
    let (ms, q) = (n / s, t / s);
    (0..n / t).filter(|&u| lifts.iter().any(|&mi| ((u * q + mi) * (1 + j_prime)).is_multiple_of(ms))).collect()
}

pub fn kbar_set(n: usize, t: usize, s: usize, j_sigma: usize, j_prime: usize) -> Vec<usize> {
    kbar_from(n, t, s, j_prime, &p_set(t / s, j_sigma))
}

pub fn kbar_c_set(n: usize, t: usize, s: usize, j_sigma: usize, j_prime: usize) -> Vec<usize> {
    kbar_from(n, t, s, j_prime, &p_c_set(t / s, j_sigma))
}

/// |K̄^c|, or 1 when empty.
pub fn delta_kc(n: usize, t: usize, s: usize, j_sigma: usize, j_prime: usize) -> usize {
    kbar_c_set(n, t, s, j_sigma, j_prime).len().max(1)
}

/// Ē: the lifts j' of j_σ (mod t/s) to residues mod n/s that lie in E_{n/s}.
pub fn ebar_set(n: usize, t: usize, s: usize, j_sigma: usize) -> Vec<usize> {
    let (ms, q) = (n / s, t / s);
    let mut out: Vec<usize> =
        (1..=n / t).map(|mbar| (j_sigma + mbar * q) % ms).filter(|j| (j * j) % ms == 1 % ms).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// K' for t = 2: u mod n/2 with (u+1)(j−1) ≡ 0.
pub fn k_prime_set(n: usize, j: usize) -> Vec<usize> {
    let m = n / 2;
    (0..m).filter(|u| ((u + 1) * ((j + m - 1) % m)).is_multiple_of(m)).collect()
}

/// δ̄: [j ≢ 2u + 1 mod n/2].
pub fn delta_bar(n: usize, j: usize, u: usize) -> bool {
    let m = n / 2;
    j % m != (2 * u + 1) % m
}

/// δ^0: [i(u+1) ≡ 0 mod n/2].
pub fn delta_zero(n: usize, i: usize, u: usize) -> bool {
    (i * (u + 1)).is_multiple_of(n / 2)
}

/// Parameters for [`helper_tables`]; unset entries leave dependent fields empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HelperParams {
    pub n: usize,
    pub t: usize,
    pub s: Option<usize>,
    pub j: Option<usize>,
    pub j_sigma: Option<usize>,
    pub j_prime: Option<usize>,
    pub r: Option<usize>,
    pub u: Option<usize>,
    pub i: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HelperTables {
    pub e_set: Vec<usize>,
    pub k_set: Option<Vec<usize>>,
    pub alpha: Option<usize>,
    pub p_set: Option<Vec<usize>>,
    pub p_c_set: Option<Vec<usize>>,
    pub delta_pc: Option<usize>,
    pub kbar_set: Option<Vec<usize>>,
    pub kbar_c_set: Option<Vec<usize>>,
    pub delta_kc: Option<usize>,
    pub ebar_set: Option<Vec<usize>>,
    pub beta: Option<usize>,
    pub delta_exists: Option<bool>,
    pub m_ratio: Option<usize>,
    pub k_prime_set: Option<Vec<usize>>,
    pub delta_bar: Option<bool>,
    pub delta_zero: Option<bool>,
    pub delta_nonzero: Option<bool>,
}

pub fn helper_tables(p: &HelperParams) -> Result<HelperTables> {
    check_divisor(p.n, p.t)?;
    if let Some(s) = p.s {
        check_divisor(p.t, s)?;
    }
    let m = p.n / p.t;
    let mut out = HelperTables { e_set: e_set(m), ..Default::default() };
    if let Some(j) = p.j {
        if j >= m.max(1) {
            return Err(Error::InvalidParameter(format!("j = {j} must be a residue mod {m}")));
        }
        out.k_set = Some(k_set(m, j));
        out.alpha = Some(alpha(m, j));
        out.p_set = Some(p_set(m, j));
        out.p_c_set = Some(p_c_set(m, j));
        out.delta_pc = Some(delta_pc(m, j));
        out.beta = Some(beta(m, j));
        if let Some(r) = p.r {
            out.delta_exists = Some(delta_exists(p.t, m, j, r));
            out.m_ratio = m_ratio(m, j, r);
        }
        if p.t == 2 {
            out.k_prime_set = Some(k_prime_set(p.n, j));
            if let Some(u) = p.u {
                out.delta_bar = Some(delta_bar(p.n, j, u));
                if let Some(i) = p.i {
                    out.delta_zero = Some(delta_zero(p.n, i, u));
                    out.delta_nonzero = Some(!delta_zero(p.n, i, u));
                }
            }
        }
    }
    if let (Some(s), Some(js)) = (p.s, p.j_sigma) {
        out.ebar_set = Some(ebar_set(p.n, p.t, s, js));
        if let Some(jp) = p.j_prime {
            out.kbar_set = Some(kbar_set(p.n, p.t, s, js, jp));
            out.kbar_c_set = Some(kbar_c_set(p.n, p.t, s, js, jp));
            out.delta_kc = Some(delta_kc(p.n, p.t, s, js, jp));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        assert_eq!(e_set(6), vec![1, 5]);
        assert_eq!(k_set(6, 5), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(beta(2, 1), 2);
        assert_eq!(p_set(2, 1), vec![0]);
        assert_eq!(p_c_set(2, 1), vec![1]);
        assert_eq!(k_set(2, 1), vec![0, 1]);
        assert_eq!(ebar_set(12, 3, 1, 2), vec![5, 11]);
        assert_eq!(e_set(4), vec![1, 3]);
    }

    #[test]
    fn p_and_k_dichotomy() {
        for m in 1..60 {
            for j in e_set(m) {
                let (a, b) = (alpha(m, j), beta(m, j));
                let (p, pc, k) = (p_set(m, j), p_c_set(m, j), k_set(m, j));
                assert!(p.iter().all(|v| k.contains(v)));
                assert_eq!(k.len(), a);
                if a * b == m {
                    assert_eq!(p, k);
                } else {
                    assert_eq!(a * b, 2 * m);
                    assert_eq!(p.len() * 2, k.len());
                    assert_eq!(pc.len(), p.len());
                }
            }
        }
    }

    #[test]
    fn helper_table_assembly() {
        let h = helper_tables(&HelperParams { n: 8, t: 4, j: Some(1), r: Some(2), ..Default::default() }).unwrap();
        assert_eq!(h.beta, Some(2));
        assert_eq!(h.p_set, Some(vec![0]));
        assert_eq!(h.p_c_set, Some(vec![1]));
        assert_eq!(h.delta_exists, Some(true));
        assert_eq!(h.m_ratio, Some(1));
        assert!(helper_tables(&HelperParams { n: 8, t: 3, ..Default::default() }).is_err());
    }
}
