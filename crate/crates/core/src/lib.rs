//! Exact graded commutative algebra over ℚ and prime fields.
//!
//! Everything here is computed degree by degree with exact linear algebra: quotient
//! algebras `S/J` by homogeneous ideals, their finitely generated graded modules,
//! Koszul complexes and graded Betti numbers, homology products on Koszul homology,
//! windowed minimal resolutions over the quotient, and interval-valued audits of
//! inequalities between maximal shifts `t_i`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod audit;
pub mod corpus;
mod error;
pub mod exactla;
mod extint;
pub mod gradedring;
pub mod homprod;
pub mod koszul;
pub mod numtheory;
pub mod resolve;
pub mod template;

pub use error::{Error, Result};
pub use extint::{ExtInt, Interval};
