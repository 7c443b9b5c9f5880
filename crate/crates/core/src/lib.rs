//! Numerical laboratory for dark-soliton dynamics of the one-dimensional
//! Gross–Pitaevskii equation.
//!
//! The crate implements, at desk scale, the full computational chain used in
//! the factorization approach to soliton rigidity:
//!
//! * closed-form soliton profiles and their derived quantities ([`soliton`]);
//! * the linearized operators `L+`, `L-`, `S`, `S*`, their Darboux-type
//!   factorization, and the explicit inversion of `S*` ([`operators`]);
//! * Crank–Nicolson time evolution in a co-moving frame ([`evolution`]);
//! * the modulation decomposition around the soliton family ([`modulation`]);
//! * the two changes of variables to the potential-free transformed system
//!   and its forcing terms ([`transform`]);
//! * the virial functionals, their balance law, and the coercivity bound
//!   ([`virial`]).
//!
//! Batch entry points and file formats live in [`config`], [`report`] and the
//! `gpl` binary.

pub mod banded;
pub mod config;
pub mod error;
pub mod evolution;
pub mod grid;
pub mod modulation;
pub mod operators;
pub mod report;
pub mod soliton;
pub mod transform;
pub mod virial;

pub use error::{Error, Result};
