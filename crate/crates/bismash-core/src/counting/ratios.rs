//! Density of nonzero indicators as n = mt grows with t fixed, next to the
//! elementary bounds used to show those densities vanish.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::tables::e_set;
use super::CountContext;
use crate::arith::{euler_phi, omega};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRow {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    /// I^{(+1)} / (m·|M|); absent for even t > 2 and when |M| = 0.
    pub plus_ratio: Option<BigRational>,
    /// (I^{(+1)} + I^{(-1)}) / (m·|M|), for odd t and t = 2.
    pub nonzero_ratio: Option<BigRational>,
    /// |T| / |M|.
    pub t_over_m: Option<BigRational>,
    /// |M| / i_{n-1}.
    pub m_over_involutions: BigRational,
    pub e_size: usize,
    /// 2^{ω(m)+2}.
    pub e_bound: u64,
    pub omega: usize,
    /// 1.3841·log m / log log m, for m ≥ 3.
    pub omega_bound: Option<f64>,
    pub phi: usize,
    /// √(m/2).
    pub phi_bound: f64,
}

impl RatioRow {
    /// The elementary bounds hold on this row.
    pub fn bounds_hold(&self) -> bool {
        let e_ok = self.e_size as u64 <= self.e_bound;
        let omega_ok = self.omega_bound.is_none_or(|b| self.omega as f64 <= b);
        let phi_ok = self.m < 3 || self.phi as f64 >= self.phi_bound;
        e_ok && omega_ok && phi_ok
    }

    /// Every reported ratio among the densities lies in [0, 1].
    pub fn densities_in_unit_interval(&self) -> bool {
        let unit = |r: &Option<BigRational>| {
            r.as_ref().is_none_or(|v| !v.is_negative() && v <= &BigRational::from_integer(1.into()))
        };
        unit(&self.plus_ratio) && unit(&self.nonzero_ratio) && unit(&self.t_over_m)
    }
}

fn ratio(a: &BigInt, b: &BigInt) -> Option<BigRational> {
    (!b.is_zero()).then(|| BigRational::new(a.clone(), b.clone()))
}

/// Render a ratio as a decimal with `digits` places (truncated toward zero).
pub fn decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (r * BigRational::from_integer(scale.clone())).to_integer();
    let neg = scaled < BigInt::zero();
    let abs = if neg { -scaled } else { scaled };
    let int = &abs / &scale;
    let frac = &abs % &scale;
    let frac = format!("{:0>width$}", frac.to_string(), width = digits);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

pub fn ratio_row(t: usize, m: usize) -> Result<RatioRow> {
    if t == 0 || m < 2 {
        return Err(Error::InvalidParameter(format!("need t >= 1 and m >= 2, got t = {t}, m = {m}")));
    }
    let n = m * t;
    let mut ctx = CountContext::new(n)?;
    let big_m = ctx.count_m(t)?;
    let total = BigInt::from(m) * &big_m;
    let (plus_ratio, nonzero_ratio) = if t % 2 == 1 {
        let i = ctx.count_i_odd(t)?;
        (ratio(&i.plus, &total), ratio(&i.plus, &total))
    } else if t == 2 {
        let i = ctx.count_i_t2()?;
        (ratio(&i.plus, &total), ratio(&(&i.plus + &i.minus), &total))
    } else {
        (None, None)
    };
    let t_count = ctx.count_t(t)?;
    let inv = crate::arith::involution_count(n - 1);
    let omega_bound = (m >= 3).then(|| {
        let lm = (m as f64).ln();
        1.3841 * lm / lm.ln()
    });
    Ok(RatioRow {
        m,
        n,
        t,
        plus_ratio,
        nonzero_ratio,
        t_over_m: ratio(&t_count, &big_m),
        m_over_involutions: BigRational::new(big_m, inv),
        e_size: e_set(m).len(),
        e_bound: 1u64 << (omega(m) + 2),
        omega: omega(m),
        omega_bound,
        phi: euler_phi(m),
        phi_bound: (m as f64 / 2.0).sqrt(),
    })
}

pub fn ratio_report(t: usize, m_range: std::ops::RangeInclusive<usize>) -> Result<Vec<RatioRow>> {
    m_range.map(|m| ratio_row(t, m)).collect()
}

/// Lossy view of an exact ratio, for plotting.
pub fn approx(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
