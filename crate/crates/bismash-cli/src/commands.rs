use std::io::Write;

use num_bigint::BigInt;

use bismash_core::arith::{divisors, factorial};
use bismash_core::bismash::check_all;
use bismash_core::construct::{enumerate_involutions, orbit_census, Workload};
use bismash_core::counting::ratios::{decimal, ratio_report};
use bismash_core::counting::tables::e_set;
use bismash_core::counting::{CountContext, IndicatorCounts};
use bismash_core::indicator::{indicator_table, Tally};
use bismash_core::matched_pair::{check_divisor, orbit};

use crate::output::{Cell, Table};
use crate::{CliError, Quantity};

const INDICATOR_COLUMNS: &[&str] = &["n", "t", "orbit_rep", "i", "indicator"];
const COUNT_COLUMNS: &[&str] = &["quantity", "n", "t", "r", "j", "sign", "value"];
const RATIO_COLUMNS: &[&str] = &[
    "t",
    "m",
    "n",
    "plus_ratio",
    "nonzero_ratio",
    "t_over_m",
    "m_over_involutions",
    "e_size",
    "e_bound",
    "omega",
    "omega_bound",
    "phi",
    "phi_bound",
    "bounds_hold",
];
const VERIFY_COLUMNS: &[&str] = &["check", "n", "t", "compared", "detail", "status"];

const RATIO_DIGITS: usize = 12;
const DEFAULT_M_MAX: usize = 200;
const DEFAULT_RATIO_TS: [usize; 3] = [1, 2, 3];

fn tally_text(t: &Tally) -> String {
    format!("(+1:{}, -1:{}, 0:{})", t.plus, t.minus, t.zero)
}

pub(crate) fn indicators(n: usize, t: Option<usize>, work: &Workload, err: &mut dyn Write) -> Result<Table, CliError> {
    let table = indicator_table(n, t, work)?;
    let mut out = Table::new(INDICATOR_COLUMNS);
    for row in &table.rows {
        out.push(vec![
            n.into(),
            row.irrep.t.into(),
            row.irrep.orbit_rep.to_string().into(),
            row.irrep.i.into(),
            row.indicator.to_string().into(),
        ]);
    }
    for d in table.dimensions() {
        writeln!(
            err,
            "summary n={n} t={d} pairs {} irreps {}",
            tally_text(&table.pairs(d)),
            tally_text(&table.irreps(d))
        )?;
    }
    Ok(out)
}

fn dims(n: usize, t: Option<usize>) -> Result<Vec<usize>, CliError> {
    match t {
        Some(t) => {
            check_divisor(n, t)?;
            Ok(vec![t])
        }
        None => Ok(divisors(n)),
    }
}

fn rs(r: Option<usize>, range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    r.map_or_else(|| range.collect(), |r| vec![r])
}

struct CountRows {
    table: Table,
    quantity: &'static str,
    n: usize,
}

impl CountRows {
    fn push(&mut self, t: usize, r: Option<usize>, j: Option<usize>, sign: Option<&str>, value: BigInt) {
        self.table.push(vec![
            self.quantity.into(),
            self.n.into(),
            t.into(),
            r.into(),
            j.into(),
            sign.map_or(Cell::Empty, Cell::from),
            value.to_string().into(),
        ]);
    }

    fn push_signs(&mut self, t: usize, c: &IndicatorCounts, which: &[&str]) {
        for &sign in which {
            let v = match sign {
                "+1" => c.plus.clone(),
                "-1" => c.minus.clone(),
                _ => c.zero.clone(),
            };
            self.push(t, None, None, Some(sign), v);
        }
    }
}

pub(crate) fn count(
    n: Option<usize>,
    quantity: Quantity,
    t: Option<usize>,
    r: Option<usize>,
    j: Option<usize>,
) -> Result<Table, CliError> {
    if quantity == Quantity::Ratios {
        return ratios(n, t);
    }
    let n = n.ok_or_else(|| CliError::Usage(format!("--n is required for {}", quantity.name())))?;
    let mut ctx = CountContext::new(n)?;
    let mut rows = CountRows { table: Table::new(COUNT_COLUMNS), quantity: quantity.name(), n };
    match quantity {
        Quantity::M => {
            for t in dims(n, t)? {
                rows.push(t, None, None, None, ctx.count_m(t)?);
            }
        }
        Quantity::T => {
            for t in dims(n, t)? {
                rows.push(t, None, None, None, ctx.count_t(t)?);
            }
        }
        Quantity::R => {
            for t in dims(n, t)? {
                for r in rs(r, 1..=n) {
                    rows.push(t, Some(r), None, None, ctx.count_r(t, r)?);
                }
            }
        }
        Quantity::X => {
            for t in dims(n, t)? {
                for r in rs(r, 1..=t) {
                    rows.push(t, Some(r), None, None, ctx.count_x(t, r)?);
                }
            }
        }
        Quantity::O => {
            for t in dims(n, t)? {
                for r in rs(r, 0..=t) {
                    rows.push(t, Some(r), None, None, ctx.count_o(t, r)?);
                }
            }
        }
        Quantity::Oj => {
            for t in dims(n, t)? {
                let js = j.map_or_else(|| e_set(n / t), |j| vec![j]);
                for r in rs(r, 1..=t) {
                    for &j in &js {
                        rows.push(t, Some(r), Some(j), None, ctx.count_o_j(t, r, j)?);
                    }
                }
            }
        }
        Quantity::Iplus | Quantity::Izero => {
            let sign = if quantity == Quantity::Iplus { "+1" } else { "0" };
            let ts: Vec<usize> = match t {
                Some(t) if t % 2 == 0 && t != 2 => {
                    return Err(CliError::Usage(format!("{} needs odd t or t = 2, got t = {t}", quantity.name())))
                }
                Some(_) => dims(n, t)?,
                None => divisors(n).into_iter().filter(|&t| t % 2 == 1 || t == 2).collect(),
            };
            for t in ts {
                let c = if t == 2 { ctx.count_i_t2()? } else { ctx.count_i_odd(t)? };
                rows.push_signs(t, &c, &[sign]);
            }
        }
        Quantity::It2 => {
            let c = ctx.count_i_t2()?;
            rows.push_signs(2, &c, &["+1", "-1", "0"]);
        }
        Quantity::Ratios => unreachable!(),
    }
    Ok(rows.table)
}

fn ratios(m_max: Option<usize>, t: Option<usize>) -> Result<Table, CliError> {
    let m_max = m_max.unwrap_or(DEFAULT_M_MAX);
    if m_max < 2 {
        return Err(CliError::Usage(format!("ratios need m up to at least 2, got {m_max}")));
    }
    let ts = t.map_or_else(|| DEFAULT_RATIO_TS.to_vec(), |t| vec![t]);
    let opt =
        |r: &Option<num_rational::BigRational>| r.as_ref().map_or(Cell::Empty, |v| decimal(v, RATIO_DIGITS).into());
    let mut table = Table::new(RATIO_COLUMNS);
    for t in ts {
        for row in ratio_report(t, 2..=m_max)? {
            table.push(vec![
                row.t.into(),
                row.m.into(),
                row.n.into(),
                opt(&row.plus_ratio),
                opt(&row.nonzero_ratio),
                opt(&row.t_over_m),
                decimal(&row.m_over_involutions, RATIO_DIGITS).into(),
                row.e_size.into(),
                Cell::Int(row.e_bound),
                row.omega.into(),
                row.omega_bound.map_or(Cell::Empty, |b| format!("{b:.6}").into()),
                row.phi.into(),
                format!("{:.6}", row.phi_bound).into(),
                row.bounds_hold().into(),
            ]);
        }
    }
    Ok(table)
}

struct Checks {
    table: Table,
    n: usize,
    failures: usize,
}

impl Checks {
    fn record(&mut self, check: &str, t: Option<usize>, compared: u64, detail: String, ok: bool) {
        if !ok {
            self.failures += 1;
        }
        self.table.push(vec![
            check.into(),
            self.n.into(),
            t.into(),
            Cell::Int(compared),
            detail.into(),
            (if ok { "pass" } else { "FAIL" }).into(),
        ]);
    }
}

fn triple(c: &IndicatorCounts) -> String {
    format!("({},{},{})", c.plus, c.minus, c.zero)
}

fn tally_triple(t: &Tally) -> String {
    format!("({},{},{})", t.plus, t.minus, t.zero)
}

fn counts_match(c: &IndicatorCounts, t: &Tally) -> bool {
    c.plus == BigInt::from(t.plus) && c.minus == BigInt::from(t.minus) && c.zero == BigInt::from(t.zero)
}

/// Every check for one n; returns the report and the number of failures.
pub(crate) fn verify(n: usize, work: &Workload, err: &mut dyn Write) -> Result<(Table, usize), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("verify needs n >= 2, got {n}")));
    }
    let mut checks = Checks { table: Table::new(VERIFY_COLUMNS), n, failures: 0 };

    let report = bismash_core::indicator::verify_oracle(n, work)?;
    for m in &report.mismatches {
        writeln!(
            err,
            "mismatch: x = {} t = {} i = {}: reduced {} brute force {}",
            m.irrep.orbit_rep, m.irrep.t, m.irrep.i, m.reduced, m.bruteforce
        )?;
    }
    checks.record(
        "oracle",
        None,
        report.irreps_checked,
        format!("{} mismatches", report.mismatches.len()),
        report.mismatches.is_empty(),
    );
    let want = factorial(n);
    checks.record(
        "dimensions",
        None,
        report.irreps_checked,
        format!("sum of squares {} vs n! = {want}", report.sum_of_squared_dimensions),
        BigInt::from(report.sum_of_squared_dimensions) == want,
    );

    let mut ctx = CountContext::new(n)?;
    for t in divisors(n) {
        let census = orbit_census(n, t, work)?;
        let orbits: u64 = census.values().sum();
        let m = ctx.count_m(t)?;
        checks.record("M", Some(t), orbits, format!("{m}"), m == BigInt::from(orbits * t as u64));
        let bad_o: Vec<usize> = (0..=t)
            .filter(|r| ctx.count_o(t, *r).ok() != Some(BigInt::from(census.get(r).copied().unwrap_or(0))))
            .collect();
        checks.record("O", Some(t), t as u64 + 1, format!("bad r: {bad_o:?}"), bad_o.is_empty());

        let invs = enumerate_involutions(n, t, work)?;
        let tc = ctx.count_t(t)?;
        checks.record("T", Some(t), invs.len() as u64, format!("{tc}"), tc == BigInt::from(invs.len()));
        let mut bad_r = Vec::new();
        let mut sum_r = BigInt::from(0);
        for r in 1..=n {
            let got = ctx.count_r(t, r)?;
            if got != BigInt::from(invs.iter().filter(|x| x.fixed_points().len() == r).count()) {
                bad_r.push(r);
            }
            sum_r += got;
        }
        checks.record("R", Some(t), n as u64, format!("bad r: {bad_r:?}"), bad_r.is_empty());
        checks.record("sum R = T", Some(t), n as u64, format!("{sum_r}"), sum_r == tc);
        let in_orbit: Vec<usize> = invs.iter().map(|x| orbit(x).involution_count()).collect();
        let bad_x: Vec<usize> = (1..=t)
            .filter(|&r| ctx.count_x(t, r).ok() != Some(BigInt::from(in_orbit.iter().filter(|&&c| c == r).count())))
            .collect();
        checks.record("X", Some(t), t as u64, format!("bad r: {bad_x:?}"), bad_x.is_empty());

        let tally = report.pairs.get(&t).copied().unwrap_or_default();
        if t % 2 == 1 {
            let c = ctx.count_i_odd(t)?;
            checks.record(
                "I_odd",
                Some(t),
                tally.total(),
                format!("I_odd {n}/{t} → {} vs {}", triple(&c), tally_triple(&tally)),
                counts_match(&c, &tally),
            );
        } else if t == 2 {
            let c = ctx.count_i_t2()?;
            checks.record(
                "I_t2",
                Some(2),
                tally.total(),
                format!("I_t2 {n} → {}", triple(&c)),
                counts_match(&c, &tally),
            );
        }
    }

    if n <= 4 {
        for a in check_all(n) {
            let ok = a.passed();
            for f in &a.failures {
                writeln!(err, "hopf {}: {f}", a.name)?;
            }
            checks.record(
                &format!("hopf {}", a.name),
                None,
                a.cases as u64,
                format!("{} failures", a.failures.len()),
                ok,
            );
        }
    }
    writeln!(err, "verify n={n}: {} checks, {} failed", checks.table.rows.len(), checks.failures)?;
    Ok((checks.table, checks.failures))
}
