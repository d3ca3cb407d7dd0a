//! Exact enumeration of Abelian ideals of a Borel subalgebra through
//! minuscule elements of the affine Weyl group.
//!
//! Conventions used throughout the crate:
//!
//! * Roots are integer coefficient vectors in the simple roots; simple root
//!   indices are 0-based (`Root::simple(rank, 0)` is α₁).
//! * Affine letters run over `0..=rank`: letter `0` is the affine
//!   reflection s₀, letter `i ≥ 1` is the simple reflection for index `i − 1`.
//! * A word `[i_ℓ, …, i_1]` denotes `s_{i_ℓ} ⋯ s_{i_1}`; the rightmost letter
//!   acts first.
//! * Inner products are normalized so that short roots have squared length 2.
//!
//! ```
//! use abelian_ideals::{enumerate_ideals, RootSystem, SimpleType};
//!
//! let rs = RootSystem::build("F4".parse::<SimpleType>()?)?;
//! assert_eq!(enumerate_ideals(&rs).len(), 16);
//! # Ok::<(), abelian_ideals::Error>(())
//! ```

pub mod affine;
pub mod cli;
pub mod duality;
pub mod error;
pub mod graded_oracle;
pub mod ideals;
pub mod poset;
pub mod rational;
pub mod rootsys;
pub mod verify;

pub use affine::{AffineRoot, Region, WeylWord};
pub use duality::{verify_duality_bijection, BracketTarget, DualityReport};
pub use error::{Error, Result};
pub use graded_oracle::{gl_count, gl_formula};
pub use ideals::{enumerate_ideals, long_ideals, rootlet, AbelianIdeal};
pub use rootsys::{Family, Root, RootSystem, SimpleType};
pub use verify::{verify_type, TypeVerification};
