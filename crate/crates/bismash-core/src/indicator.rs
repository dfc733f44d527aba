//! Frobenius–Schur indicators of the irreducible J_n-modules.
//!
//! Irreps are indexed by an orbit O_x (canonical member x, stabilizer ⟨a^t⟩)
//! and a character index i in 0..n/t, with a^t acting by ζ_{n/t}^i. The
//! module has dimension t.
//!
//! Two evaluations are provided: a closed form in modular arithmetic, and a
//! brute-force sum over the orbit with exact cyclotomic arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::divisors;
use crate::construct::{scan_exact_stabilizer, Workload};
use crate::cyclotomic::{CyclotomicAccumulator, Rational};
use crate::error::{Error, Result};
use crate::matched_pair::{act_left_into, check_divisor, inversion_data_raw, is_orbit_min, stabilizer};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indicator {
    Minus,
    Zero,
    Plus,
}

impl Indicator {
    pub fn value(self) -> i8 {
        match self {
            Indicator::Minus => -1,
            Indicator::Zero => 0,
            Indicator::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Indicator::Minus),
            0 => Some(Indicator::Zero),
            1 => Some(Indicator::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indicator::Minus => write!(f, "-1"),
            Indicator::Zero => write!(f, "0"),
            Indicator::Plus => write!(f, "+1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepDescriptor {
    pub t: usize,
    pub orbit_rep: Permutation,
    pub i: usize,
}

impl IrrepDescriptor {
    /// Any member of the orbit may be passed; `t` must be its stabilizer index.
    pub fn new(orbit_rep: Permutation, t: usize, i: usize) -> Result<Self> {
        if !orbit_rep.fixes_n() {
            return Err(Error::DoesNotFixN(orbit_rep.n()));
        }
        let n = orbit_rep.n();
        check_divisor(n, t)?;
        let actual = stabilizer(&orbit_rep).t;
        if actual != t {
            return Err(Error::InvalidParameter(format!("{orbit_rep} has stabilizer index {actual}, not {t}")));
        }
        if i >= n / t {
            return Err(Error::InvalidParameter(format!("character index {i} must be below {}", n / t)));
        }
        Ok(IrrepDescriptor { t, orbit_rep, i })
    }

    pub fn n(&self) -> usize {
        self.orbit_rep.n()
    }

    pub fn dimension(&self) -> usize {
        self.t
    }
}

/// Closed form for every character index of the orbit of x at once.
pub(crate) fn reduced_all(x: &[u16], t: usize) -> Vec<Indicator> {
    let n = x.len();
    let m = n / t;
    let mut inv = vec![0u16; n];
    for (k, &v) in x.iter().enumerate() {
        inv[v as usize] = k as u16;
    }
    let data = inversion_data_raw(x, &inv, t);
    let Some(u2) = data.u2 else {
        return vec![Indicator::Zero; m];
    };
    (0..m)
        .map(|i| {
            if !(i * data.u1).is_multiple_of(m) {
                Indicator::Zero
            } else if m % 2 == 1 {
                Indicator::Plus
            } else {
                let k = i * u2 % m;
                if k == 0 {
                    Indicator::Plus
                } else {
                    assert_eq!(2 * k, m, "i·u2 must be 0 or half of n/t once i·u1 vanishes");
                    Indicator::Minus
                }
            }
        })
        .collect()
}

pub fn indicator_reduced(d: &IrrepDescriptor) -> Indicator {
    reduced_all(d.orbit_rep.residues(), d.t)[d.i]
}

/// Indicators for i = 0..n/t of the orbit through x, by the brute-force sum
/// (1/n) Σ_{y ∈ O_x} Σ_{a^r ∈ F_{y^{-1},y}} χ(a^{y^{-1}(r) + r}).
///
/// Everything here is recomputed by scanning all shifts: the orbit, the
/// stabilizer and each transporter set.
pub fn bruteforce_all(x: &Permutation) -> Vec<Indicator> {
    assert!(x.fixes_n(), "{x} does not fix n");
    let n = x.n();
    let xs = x.residues();
    let mut buf = vec![0u16; n];
    let mut members: Vec<Vec<u16>> = Vec::new();
    let mut t = n;
    for r in 0..n {
        act_left_into(xs, r, &mut buf);
        if r > 0 && t == n && buf == xs {
            t = r;
        }
        if !members.contains(&buf) {
            members.push(buf.clone());
        }
    }
    let m = n / t;
    let mut exponents = Vec::new();
    for y in &members {
        let mut yinv = vec![0u16; n];
        for (k, &v) in y.iter().enumerate() {
            yinv[v as usize] = k as u16;
        }
        for r in 0..n {
            act_left_into(&yinv, r, &mut buf);
            if buf == *y {
                exponents.push((yinv[r] as usize + r) % n);
            }
        }
    }
    (0..m)
        .map(|i| {
            let mut acc = CyclotomicAccumulator::new(m);
            for &e in &exponents {
                if e % t == 0 {
                    acc.add_root(i * (e / t));
                }
            }
            let total = acc.as_rational().expect("an indicator sum is rational");
            let value = total / Rational::from_integer(n as i64);
            assert!(value.is_integer(), "indicator {value} is not an integer");
            Indicator::from_value(value.to_integer()).expect("indicator outside {-1, 0, 1}")
        })
        .collect()
}

pub fn indicator_bruteforce(d: &IrrepDescriptor) -> Indicator {
    bruteforce_all(&d.orbit_rep)[d.i]
}

/// Indicator of the i-th irreducible character of the cyclic group C_n.
pub fn group_indicator_cn(n: usize, i: usize) -> Result<Indicator> {
    if n == 0 || i >= n {
        return Err(Error::InvalidParameter(format!("need 0 <= i < n, got n = {n}, i = {i}")));
    }
    Ok(if (2 * i).is_multiple_of(n) { Indicator::Plus } else { Indicator::Zero })
}

/// Counts of indicator values.
///
/// `pairs` counts (x, i) with x ranging over all of M_{n/t}, so every irrep is
/// counted once per member of its orbit; `irreps` counts each irrep once.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub plus: u64,
    pub minus: u64,
    pub zero: u64,
}

impl Tally {
    pub fn add(&mut self, ind: Indicator, weight: u64) {
        match ind {
            Indicator::Plus => self.plus += weight,
            Indicator::Minus => self.minus += weight,
            Indicator::Zero => self.zero += weight,
        }
    }

    pub fn total(&self) -> u64 {
        self.plus + self.minus + self.zero
    }

    pub fn merge(&mut self, other: &Tally) {
        self.plus += other.plus;
        self.minus += other.minus;
        self.zero += other.zero;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorRow {
    pub irrep: IrrepDescriptor,
    pub indicator: Indicator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorTable {
    pub n: usize,
    /// Sorted by (t, representative, i).
    pub rows: Vec<IndicatorRow>,
}

impl IndicatorTable {
    /// Tally of distinct irreps of dimension t.
    pub fn irreps(&self, t: usize) -> Tally {
        let mut tally = Tally::default();
        self.rows.iter().filter(|r| r.irrep.t == t).for_each(|r| tally.add(r.indicator, 1));
        tally
    }

    /// Tally over (x, i) pairs, x in M_{n/t}: each irrep weighted by t.
    pub fn pairs(&self, t: usize) -> Tally {
        let mut tally = Tally::default();
        self.rows.iter().filter(|r| r.irrep.t == t).for_each(|r| tally.add(r.indicator, t as u64));
        tally
    }

    pub fn dimensions(&self) -> Vec<usize> {
        let mut ts: Vec<usize> = self.rows.iter().map(|r| r.irrep.t).collect();
        ts.dedup();
        ts
    }

    pub fn sum_of_squared_dimensions(&self) -> u128 {
        self.rows.iter().map(|r| (r.irrep.t as u128).pow(2)).sum()
    }
}

fn selected_dimensions(n: usize, filter_t: Option<usize>) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    match filter_t {
        Some(t) => {
            check_divisor(n, t)?;
            Ok(vec![t])
        }
        None => Ok(divisors(n)),
    }
}

fn check_total_work(n: usize, ts: &[usize], work: &Workload) -> Result<()> {
    let total = ts.iter().fold(0u128, |acc, &t| acc.saturating_add(crate::construct::stabilized_candidates(n, t)));
    work.check(total)
}

/// One row per irrep of J_n (optionally only dimension t), via the closed form.
pub fn indicator_table(n: usize, filter_t: Option<usize>, work: &Workload) -> Result<IndicatorTable> {
    let ts = selected_dimensions(n, filter_t)?;
    check_total_work(n, &ts, work)?;
    let mut rows = Vec::new();
    for t in ts {
        let mut reps = scan_exact_stabilizer(n, t, work, |x| {
            is_orbit_min(x, t).then(|| (Permutation::from_residue_slice(x), reduced_all(x, t)))
        })?;
        reps.sort_by(|a, b| a.0.cmp(&b.0));
        for (rep, inds) in reps {
            for (i, ind) in inds.into_iter().enumerate() {
                rows.push(IndicatorRow { irrep: IrrepDescriptor { t, orbit_rep: rep.clone(), i }, indicator: ind });
            }
        }
    }
    Ok(IndicatorTable { n, rows })
}

/// Pair tally for dimension t without materializing rows.
pub fn tally_pairs(n: usize, t: usize, work: &Workload) -> Result<Tally> {
    let per_x = scan_exact_stabilizer(n, t, work, |x| {
        let mut tally = Tally::default();
        reduced_all(x, t).into_iter().for_each(|ind| tally.add(ind, 1));
        Some(tally)
    })?;
    Ok(per_x.iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    }))
}

/// Every irrep of J_n has indicator +1.
pub fn is_totally_orthogonal(n: usize, work: &Workload) -> Result<bool> {
    let table = indicator_table(n, None, work)?;
    Ok(table.rows.iter().all(|r| r.indicator == Indicator::Plus))
}

/// An irrep where the closed form and the brute-force sum disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub irrep: IrrepDescriptor,
    pub reduced: Indicator,
    pub bruteforce: Indicator,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub irreps_checked: u64,
    pub sum_of_squared_dimensions: u128,
    pub mismatches: Vec<Mismatch>,
    /// Closed-form pair tallies per dimension t.
    pub pairs: BTreeMap<usize, Tally>,
}

/// Compare closed form and brute force on every irrep of J_n.
pub fn verify_oracle(n: usize, work: &Workload) -> Result<OracleReport> {
    let ts = selected_dimensions(n, None)?;
    check_total_work(n, &ts, work)?;
    let mut report = OracleReport::default();
    for t in ts {
        let results = scan_exact_stabilizer(n, t, work, |x| {
            if !is_orbit_min(x, t) {
                return None;
            }
            let fast = reduced_all(x, t);
            let rep = Permutation::from_residue_slice(x);
            let slow = bruteforce_all(&rep);
            let bad: Vec<Mismatch> = fast
                .iter()
                .zip(&slow)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(i, (&a, &b))| Mismatch {
                    irrep: IrrepDescriptor { t, orbit_rep: rep.clone(), i },
                    reduced: a,
                    bruteforce: b,
                })
                .collect();
            let mut tally = Tally::default();
            fast.iter().for_each(|&ind| tally.add(ind, t as u64));
            Some((fast.len() as u64, bad, tally))
        })?;
        for (count, bad, tally) in results {
            report.pairs.entry(t).or_default().merge(&tally);
            report.irreps_checked += count;
            report.sum_of_squared_dimensions += count as u128 * (t * t) as u128;
            report.mismatches.extend(bad);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn worked_example_sixteen() {
        let d = IrrepDescriptor::new(cyc(16, "(1 5 9 13)(3 7 11 15)"), 2, 4).unwrap();
        assert_eq!(indicator_reduced(&d), Indicator::Minus);
        assert_eq!(indicator_bruteforce(&d), Indicator::Minus);
    }

    #[test]
    fn worked_example_twelve() {
        let x = cyc(12, "(1 5 9)(3 7 11)");
        let want = [1, 0, 0, -1, 0, 0];
        let got: Vec<i8> = reduced_all(x.residues(), 2).into_iter().map(Indicator::value).collect();
        assert_eq!(got, want);
        let brute: Vec<i8> = bruteforce_all(&x).into_iter().map(Indicator::value).collect();
        assert_eq!(brute, want);
    }

    #[test]
    fn trivial_irrep() {
        let d = IrrepDescriptor::new(Permutation::identity(7), 1, 0).unwrap();
        assert_eq!(indicator_reduced(&d), Indicator::Plus);
    }

    #[test]
    fn cyclic_group() {
        assert_eq!(group_indicator_cn(4, 2).unwrap(), Indicator::Plus);
        assert_eq!(group_indicator_cn(9, 0).unwrap(), Indicator::Plus);
        assert_eq!(group_indicator_cn(5, 1).unwrap(), Indicator::Zero);
        assert!(group_indicator_cn(5, 5).is_err());
    }

    #[test]
    fn descriptor_validation() {
        assert!(IrrepDescriptor::new(cyc(12, "(1 5 9)(3 7 11)"), 4, 0).is_err());
        assert!(IrrepDescriptor::new(cyc(12, "(1 5 9)(3 7 11)"), 2, 6).is_err());
    }

    #[test]
    fn table_twelve_two() {
        let table = indicator_table(12, Some(2), &Workload::unlimited()).unwrap();
        let pairs = table.pairs(2);
        assert_eq!((pairs.plus, pairs.minus, pairs.zero), (30, 2, 16));
        assert_eq!(table.irreps(2).total(), 24);
    }
}
