//! Exact Frobenius–Schur indicators for the bismash product Hopf algebras
//! J_n = k^{S_{n-1}} # kC_n.
//!
//! The pieces, bottom up:
//!
//! * [`perm`]: permutations of {1..n} in residue storage
//! * [`matched_pair`]: the actions ◁ and ▷ of C_n and S_{n-1} on each other
//! * [`bismash`]: the Hopf structure maps, for checking axioms at small n
//! * [`indicator`]: closed-form and brute-force indicators, tables and tallies
//! * [`construct`]: generation of permutations with a given stabilizer
//! * [`counting`]: the counting formulas over the divisor lattice of n
//!
//! ```
//! use bismash_core::indicator::{indicator_reduced, Indicator, IrrepDescriptor};
//! use bismash_core::perm::Permutation;
//!
//! let x = Permutation::parse("(1 5 9 13)(3 7 11 15)", Some(16))?;
//! let irrep = IrrepDescriptor::new(x, 2, 4)?;
//! assert_eq!(indicator_reduced(&irrep), Indicator::Minus);
//! # Ok::<(), bismash_core::Error>(())
//! ```

pub mod arith;
pub mod bismash;
pub mod construct;
pub mod counting;
pub mod cyclotomic;
pub mod error;
pub mod indicator;
pub mod matched_pair;
pub mod perm;

pub use error::{Error, Result};

/// The book chapters, compiled so their snippets run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    pub mod overview {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    pub mod permutations {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    pub mod orbits {}
    #[doc = include_str!("../../../book/src/indicators.md")]
    pub mod indicators {}
    #[doc = include_str!("../../../book/src/counting.md")]
    pub mod counting {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    pub mod hopf {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
