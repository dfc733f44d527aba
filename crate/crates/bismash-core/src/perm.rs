//! Permutations of {1..n} viewed as bijections of Z/n.
//!
//! Storage is by residue: slot `k` holds `x(k) mod n`, with slot 0 standing
//! for the point `n`. Everything public speaks 1-indexed points.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    res: Vec<u16>,
}

/// Disjoint cycles of length at least two, fixed points omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CycleDecomposition(Vec<Vec<usize>>);

impl CycleDecomposition {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        CycleDecomposition(cycles)
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rotate each cycle to start at its minimum, then sort by that minimum.
    pub fn canonical(mut self) -> Self {
        self.0.retain(|c| c.len() >= 2);
        for c in &mut self.0 {
            let pos = c.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap_or(0);
            c.rotate_left(pos);
        }
        self.0.sort_by_key(|c| c[0]);
        self
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for c in &self.0 {
            write!(f, "(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > u16::MAX as usize {
        return Err(Error::DegreeTooLarge(n));
    }
    Ok(())
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self::shift(n, 0)
    }

    /// The n-cycle a = (1 2 ... n) raised to the power r.
    pub fn shift(n: usize, r: usize) -> Self {
        assert!(n > 0 && n <= u16::MAX as usize, "degree out of range");
        Permutation { res: (0..n).map(|k| ((k + r) % n) as u16).collect() }
    }

    /// Build from residue storage without validation.
    pub(crate) fn from_residues_unchecked(res: Vec<u16>) -> Self {
        debug_assert!(is_bijection(&res));
        Permutation { res }
    }

    pub(crate) fn from_residue_slice(res: &[u16]) -> Self {
        Self::from_residues_unchecked(res.to_vec())
    }

    /// Build from a one-line list `[x(1), ..., x(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut res = vec![0u16; n];
        for (idx, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::NotABijection { n, reason: format!("image {v} out of range") });
            }
            res[(idx + 1) % n] = (v % n) as u16;
        }
        if !is_bijection(&res) {
            return Err(Error::NotABijection { n, reason: "repeated image".into() });
        }
        Ok(Permutation { res })
    }

    pub fn from_cycles(n: usize, cycles: &CycleDecomposition) -> Result<Self> {
        check_degree(n)?;
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for c in cycles.cycles() {
            for (k, &v) in c.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::NotABijection { n, reason: format!("cycle entry {v} out of range") });
                }
                if seen[v] {
                    return Err(Error::NotABijection { n, reason: format!("entry {v} appears twice") });
                }
                seen[v] = true;
                images[v - 1] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn n(&self) -> usize {
        self.res.len()
    }

    /// x(i) for a point i in 1..=n.
    pub fn apply(&self, i: usize) -> usize {
        let n = self.n();
        assert!((1..=n).contains(&i), "point {i} outside 1..={n}");
        point(self.res[i % n] as usize, n)
    }

    /// x(k) mod n for any integer k read mod n.
    #[inline]
    pub fn residue(&self, k: usize) -> usize {
        self.res[k % self.res.len()] as usize
    }

    pub(crate) fn residues(&self) -> &[u16] {
        &self.res
    }

    /// One-line form `[x(1), ..., x(n)]`.
    pub fn images(&self) -> Vec<usize> {
        (1..=self.n()).map(|i| self.apply(i)).collect()
    }

    pub fn fixes_n(&self) -> bool {
        self.res[0] == 0
    }

    pub fn is_identity(&self) -> bool {
        self.res.iter().enumerate().all(|(k, &v)| v as usize == k)
    }

    pub fn inverse(&self) -> Self {
        let mut res = vec![0u16; self.n()];
        for (k, &v) in self.res.iter().enumerate() {
            res[v as usize] = k as u16;
        }
        Permutation { res }
    }

    pub fn to_cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                c.push(p);
                p = self.apply(p);
            }
            cycles.push(c);
        }
        CycleDecomposition(cycles)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    pub fn is_involution(&self) -> bool {
        is_involution_raw(&self.res)
    }

    /// Parse either cycle notation `(1 5 9)(3 7)` or a one-line list `[2,1,3]`.
    /// Cycle notation carries no degree, so `n` is required for it.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let s = text.trim();
        let err = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
        if let Some(body) = s.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or_else(|| err("missing ']'"))?;
            let images = body
                .split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| err("bad integer")))
                .collect::<Result<Vec<_>>>()?;
            let x = Self::from_images(&images)?;
            if let Some(n) = n {
                if n != x.n() {
                    return Err(Error::DegreeMismatch { left: n, right: x.n() });
                }
            }
            return Ok(x);
        }
        let n = n.ok_or_else(|| err("cycle notation needs an explicit degree"))?;
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = open.find(')').ok_or_else(|| err("missing ')'"))?;
            let entries = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| err("bad integer")))
                .collect::<Result<Vec<_>>>()?;
            if entries.len() >= 2 {
                cycles.push(entries);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &CycleDecomposition(cycles))
    }
}

#[inline]
pub(crate) fn point(residue: usize, n: usize) -> usize {
    if residue == 0 {
        n
    } else {
        residue
    }
}

pub(crate) fn is_bijection(res: &[u16]) -> bool {
    let mut seen = vec![false; res.len()];
    for &v in res {
        let v = v as usize;
        if v >= res.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[inline]
pub(crate) fn is_involution_raw(res: &[u16]) -> bool {
    res.iter().enumerate().all(|(k, &v)| res[v as usize] as usize == k)
}

/// (f∘g)(i) = f(g(i)).
pub fn compose(f: &Permutation, g: &Permutation) -> Result<Permutation> {
    if f.n() != g.n() {
        return Err(Error::DegreeMismatch { left: f.n(), right: g.n() });
    }
    Ok(Permutation { res: g.res.iter().map(|&v| f.res[v as usize]).collect() })
}

pub fn inverse(x: &Permutation) -> Permutation {
    x.inverse()
}

impl Ord for Permutation {
    /// Degree first, then one-line form.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n().cmp(&other.n()).then_with(|| cmp_one_line(&self.res, &other.res))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order of one-line forms of two residue vectors of equal degree.
pub(crate) fn cmp_one_line(a: &[u16], b: &[u16]) -> Ordering {
    let n = a.len();
    for k in 1..=n {
        let (x, y) = (point(a[k % n] as usize, n), point(b[k % n] as usize, n));
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_cycles().fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in S_{}", self, self.n())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line form only; cycle notation needs [`Permutation::parse`].
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn one_line_and_cycles() {
        let x = cyc(6, "(1 2)(3 4 5)");
        assert_eq!(x.images(), vec![2, 1, 4, 5, 3, 6]);
        assert_eq!(x.to_string(), "(1 2)(3 4 5)");
        assert_eq!(cyc(4, "").to_string(), "()");
        assert!(cyc(4, "").is_identity());
        assert_eq!(Permutation::parse("[2,1,4,5,3,6]", None).unwrap(), x);
    }

    #[test]
    fn composition_convention() {
        let a = Permutation::shift(3, 1);
        let a_inv = a.inverse();
        assert_eq!(compose(&a_inv, &cyc(3, "(1 3)")).unwrap(), cyc(3, "(1 2)"));
        let x = cyc(6, "(1 2)(3 4 5)");
        let lhs = compose(&Permutation::shift(6, 4), &compose(&x, &Permutation::shift(6, 1)).unwrap()).unwrap();
        assert_eq!(lhs, cyc(6, "(1 5 4)"));
    }

    #[test]
    fn inverse_and_fixed_points() {
        assert_eq!(cyc(6, "(1 2)(3 4 5)").inverse(), cyc(6, "(1 2)(3 5 4)"));
        assert_eq!(cyc(8, "(1 5)(2 6)(3 7)").fixed_points(), vec![4, 8]);
        assert_eq!(cyc(16, "(1 5 9 13)(3 7 11 15)").fixed_points(), vec![2, 4, 6, 8, 10, 12, 14, 16]);
        assert_eq!(Permutation::identity(5).fixed_points(), vec![1, 2, 3, 4, 5]);
        assert!(cyc(8, "(1 3)(2 6)(5 7)").is_involution());
        assert!(!cyc(6, "(1 2)(3 4 5)").is_involution());
        assert!(Permutation::identity(3).is_involution());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse("(1 2)(2 3)", Some(4)).is_err());
        assert!(Permutation::parse("(1 5)", Some(4)).is_err());
        assert!(Permutation::parse("[1,1,3]", None).is_err());
        assert!(Permutation::parse("(1 2)", None).is_err());
        assert!(compose(&Permutation::identity(3), &Permutation::identity(4)).is_err());
    }
}
