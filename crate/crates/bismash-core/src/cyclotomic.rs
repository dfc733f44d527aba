//! Exact sums of m-th roots of unity with rational coefficients.
//!
//! A sum Σ c_k ζ_m^k is normalized by reducing the polynomial Σ c_k X^k
//! modulo the cyclotomic polynomial Φ_m, which gives the unique coordinates
//! in the power basis 1, ζ, ..., ζ^{φ(m)-1}. The sum is rational exactly
//! when only the constant coordinate survives.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::arith::divisors;

pub type Rational = Ratio<i64>;

/// Integer coefficients of Φ_m, lowest degree first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1);
    // X^m - 1
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        num = divide_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<usize, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn cached_polynomial(m: usize) -> Rc<Vec<i64>> {
    PHI_CACHE.with(|c| c.borrow_mut().entry(m).or_insert_with(|| Rc::new(cyclotomic_polynomial(m))).clone())
}

/// Quotient of a by the monic polynomial b, which must divide it.
fn divide_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            rem[k + i] -= c * bi;
        }
    }
    debug_assert!(rem.iter().all(|&v| v == 0));
    q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicAccumulator {
    m: usize,
    coeffs: Vec<Rational>,
}

impl CyclotomicAccumulator {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "modulus must be positive");
        CyclotomicAccumulator { m, coeffs: vec![Rational::zero(); m] }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Add c·ζ_m^k.
    pub fn add(&mut self, k: usize, c: Rational) {
        let k = k % self.m;
        self.coeffs[k] += c;
    }

    pub fn add_root(&mut self, k: usize) {
        self.add(k, Rational::one());
    }

    /// Coordinates in the basis 1, ζ, ..., ζ^{φ(m)-1}.
    pub fn reduced(&self) -> Vec<Rational> {
        let phi = cached_polynomial(self.m);
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for k in (deg..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi.iter().enumerate() {
                rem[k - deg + i] -= c * Rational::from_integer(p);
            }
        }
        rem.truncate(deg);
        rem
    }

    /// The value when the sum is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        let r = self.reduced();
        if r.iter().skip(1).all(|c| c.is_zero()) {
            Some(r.first().copied().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }
}
