//! Structure maps of J_n = k^{S_{n-1}} # kC_n on the basis p_x # a^r.
//!
//! * (p_x # a)(p_y # b) = δ_{y, x◁a} p_x # ab
//! * Δ(p_x # a) = Σ_y (p_{xy^{-1}} # (y ▷ a)) ⊗ (p_y # a)
//! * ε(p_x # a) = δ_{x, 1}
//! * S(p_x # a) = p_{(x◁a)^{-1}} # (x ▷ a)^{-1}
//!
//! Elements carry exact rational coefficients. Δ has (n-1)! terms, so these
//! are meant for checking the axioms at small n.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::matched_pair::{act_left, act_right};
use crate::perm::{compose, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub x: Permutation,
    pub r: usize,
}

impl BasisElement {
    pub fn new(x: Permutation, r: usize) -> Result<Self> {
        if !x.fixes_n() {
            return Err(Error::DoesNotFixN(x.n()));
        }
        let r = r % x.n();
        Ok(BasisElement { x, r })
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }
}

/// Linear combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element(BTreeMap<BasisElement, Rational>);

impl Element {
    pub fn zero() -> Self {
        Element(BTreeMap::new())
    }

    pub fn basis(e: BasisElement) -> Self {
        let mut out = Element::zero();
        out.add_term(e, Rational::one());
        out
    }

    /// 1 = Σ_x p_x # a^0.
    pub fn unit(n: usize) -> Self {
        let mut out = Element::zero();
        for x in group_elements(n) {
            out.add_term(BasisElement { x, r: 0 }, Rational::one());
        }
        out
    }

    pub fn add_term(&mut self, e: BasisElement, c: Rational) {
        let slot = self.0.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn scale(mut self, c: Rational) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        self.0.values_mut().for_each(|v| *v *= c);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Rational)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                if let Some(p) = multiply(a, b)? {
                    out.add_term(p, ca * cb);
                }
            }
        }
        Ok(out)
    }
}

/// Σ c · left ⊗ right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSum {
    pub terms: Vec<(Rational, BasisElement, BasisElement)>,
}

impl TensorSum {
    /// Merge duplicate pairs and drop zero coefficients.
    pub fn normalized(self) -> Self {
        let mut map: BTreeMap<(BasisElement, BasisElement), Rational> = BTreeMap::new();
        for (c, l, r) in self.terms {
            *map.entry((l, r)).or_insert_with(Rational::zero) += c;
        }
        TensorSum { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (c, l, r)).collect() }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The elements of S_{n-1}, as permutations of 1..n fixing n, in one-line order.
pub fn group_elements(n: usize) -> Vec<Permutation> {
    (1..n)
        .permutations(n - 1)
        .map(|mut p| {
            p.push(n);
            Permutation::from_images(&p).expect("a permutation")
        })
        .collect()
}

fn same_degree(a: &BasisElement, b: &BasisElement) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DegreeMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

/// Product of two basis elements, `None` for zero.
pub fn multiply(e1: &BasisElement, e2: &BasisElement) -> Result<Option<BasisElement>> {
    same_degree(e1, e2)?;
    if e2.x != act_left(&e1.x, e1.r) {
        return Ok(None);
    }
    Ok(Some(BasisElement { x: e1.x.clone(), r: (e1.r + e2.r) % e1.n() }))
}

pub fn antipode(e: &BasisElement) -> BasisElement {
    let n = e.n();
    let x = act_left(&e.x, e.r).inverse();
    BasisElement { x, r: (n - act_right(&e.x, e.r)) % n }
}

pub fn counit(e: &BasisElement) -> Rational {
    if e.x.is_identity() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn comultiply(e: &BasisElement) -> TensorSum {
    let terms = group_elements(e.n())
        .into_iter()
        .map(|y| {
            let left = BasisElement { x: compose(&e.x, &y.inverse()).expect("same degree"), r: act_right(&y, e.r) };
            (Rational::one(), left, BasisElement { x: y, r: e.r })
        })
        .collect();
    TensorSum { terms }
}

pub fn basis(n: usize) -> Vec<BasisElement> {
    group_elements(n).into_iter().flat_map(|x| (0..n).map(move |r| BasisElement { x: x.clone(), r })).collect()
}

/// Outcome of one exhaustive axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_check(name: &'static str, n: usize, cases: Vec<(String, bool)>) -> AxiomCheck {
    let total = cases.len();
    AxiomCheck { name, n, cases: total, failures: cases.into_iter().filter(|c| !c.1).map(|c| c.0).collect() }
}

/// (ε⊗id)Δ = id = (id⊗ε)Δ on every basis element.
pub fn check_counit(n: usize) -> AxiomCheck {
    let cases = basis(n)
        .into_iter()
        .map(|e| {
            let mut left = Element::zero();
            let mut right = Element::zero();
            for (c, l, r) in comultiply(&e).terms {
                left.add_term(r.clone(), c * counit(&l));
                right.add_term(l, c * counit(&r));
            }
            let want = Element::basis(e.clone());
            (format!("p_{} # a^{}", e.x, e.r), left == want && right == want)
        })
        .collect();
    run_check("counit", n, cases)
}

/// m(S⊗id)Δ = ε·1 = m(id⊗S)Δ on every basis element.
pub fn check_antipode(n: usize) -> AxiomCheck {
    let unit = Element::unit(n);
    let cases = basis(n)
        .into_iter()
        .map(|e| {
            let mut left = Element::zero();
            let mut right = Element::zero();
            for (c, l, r) in comultiply(&e).terms {
                if let Some(p) = multiply(&antipode(&l), &r).expect("same degree") {
                    left.add_term(p, c);
                }
                if let Some(p) = multiply(&l, &antipode(&r)).expect("same degree") {
                    right.add_term(p, c);
                }
            }
            let want = unit.clone().scale(counit(&e));
            (format!("p_{} # a^{}", e.x, e.r), left == want && right == want)
        })
        .collect();
    run_check("antipode", n, cases)
}

/// (ab)c = a(bc) on every basis triple.
pub fn check_associativity(n: usize) -> AxiomCheck {
    let b = basis(n);
    let mut cases = Vec::new();
    for e1 in &b {
        for e2 in &b {
            let e12 = multiply(e1, e2).expect("same degree");
            for e3 in &b {
                let lhs = e12.as_ref().and_then(|p| multiply(p, e3).expect("same degree"));
                let rhs = multiply(e2, e3).expect("same degree").and_then(|p| multiply(e1, &p).expect("same degree"));
                if lhs != rhs {
                    cases.push((format!("{e1:?} {e2:?} {e3:?}"), false));
                } else {
                    cases.push((String::new(), true));
                }
            }
        }
    }
    run_check("associativity", n, cases)
}

/// S∘S = id.
pub fn check_antipode_involutive(n: usize) -> AxiomCheck {
    let cases =
        basis(n).into_iter().map(|e| (format!("p_{} # a^{}", e.x, e.r), antipode(&antipode(&e)) == e)).collect();
    run_check("antipode squared", n, cases)
}

pub fn check_all(n: usize) -> Vec<AxiomCheck> {
    vec![check_counit(n), check_antipode(n), check_associativity(n), check_antipode_involutive(n)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn products() {
        let x = cyc(6, "(1 2)(3 4 5)");
        let e1 = BasisElement::new(x.clone(), 1).unwrap();
        let e2 = BasisElement::new(cyc(6, "(1 5 4)"), 0).unwrap();
        assert_eq!(multiply(&e1, &e2).unwrap(), Some(e1.clone()));
        let e3 = BasisElement::new(x.clone(), 0).unwrap();
        assert_eq!(multiply(&e3, &e3).unwrap(), Some(e3.clone()));
        assert_eq!(multiply(&e1, &e3).unwrap(), None);
    }

    #[test]
    fn antipode_and_counit() {
        let e = BasisElement::new(Permutation::identity(5), 2).unwrap();
        assert_eq!(antipode(&e), BasisElement::new(Permutation::identity(5), 3).unwrap());
        let x = cyc(6, "(1 2)(3 4 5)");
        let e = BasisElement::new(x.clone(), 0).unwrap();
        assert_eq!(antipode(&e), BasisElement::new(x.inverse(), 0).unwrap());
        assert_eq!(counit(&e), Rational::zero());
        assert_eq!(counit(&BasisElement::new(Permutation::identity(6), 3).unwrap()), Rational::one());
    }

    #[test]
    fn comultiply_size() {
        let e = BasisElement::new(cyc(4, "(1 2 3)"), 1).unwrap();
        let d = comultiply(&e);
        assert_eq!(d.len(), 6);
        assert_eq!(d.clone().normalized().len(), 6);
    }

    #[test]
    fn axioms_small() {
        for n in 2..=4 {
            for check in check_all(n) {
                assert!(check.passed(), "{} failed at n = {n}: {:?}", check.name, check.failures);
            }
        }
    }
}
