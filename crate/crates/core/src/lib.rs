//! Folded Reed–Solomon codes over prime fields, a linear-algebraic list
//! decoder with randomized certificate pruning, and exact verifiers for the
//! known list-size bounds at parameters small enough to brute-force.
//!
//! The crate is organised bottom-up:
//!
//! - [`gf`], [`poly`], [`linalg`], [`rational`]: exact arithmetic.
//! - [`frs`]: the code, its residue view and ball membership.
//! - [`decode`]: interpolation decoder, certificate pruning, brute-force oracle.
//! - [`bounds`]: agreement graphs, slice dimensions, the folded Wronskian and
//!   the bound checks.
//! - [`recovery`]: the list-recovery lower-bound family.
//! - [`suite`]: seeded randomized suites shared by the CLI and the tests.
//! - [`cli`]: the batch front-end behind the `frs-lab` binary.

pub mod bounds;
pub mod cli;
pub mod decode;
pub mod error;
pub mod frs;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod recovery;
pub mod rng;
pub mod suite;

pub use error::{Error, Result};
pub use frs::{AlphaRule, CodeDescriptor, FrsCode, Word};
pub use gf::{Field, FieldElement};
pub use linalg::{AffineSubspace, LinearConstraints, MatrixFq};
pub use poly::Polynomial;
pub use rational::Rational;
