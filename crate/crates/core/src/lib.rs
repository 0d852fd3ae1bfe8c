//! Exact q-series workbench for k-colored partition congruences modulo powers of 5.
//!
//! - [`series`]: truncated Laurent series over big integers
//! - [`etaq`]: eta products, generalized eta products and the Rogers–Ramanujan quotient
//! - [`qexpr`]: a small expression language for eta quotients and its evaluator
//! - [`dissect`]: the huffing operator and m-dissections
//! - [`matrices`]: the integer matrices `m`, `a`, `b`, `c` and 5-adic valuations
//! - [`congruence`]: colored partition tables and congruence drivers
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod congruence;
pub mod dissect;
pub mod etaq;
pub mod fixtures;
pub mod matrices;
pub mod qexpr;
pub mod series;

pub use congruence::{CongruenceReport, PartitionTable, TheoremId};
pub use dissect::DissectionComponent;
pub use matrices::{Family, Matrices, Valuation};
pub use qexpr::{IdentityReport, QExpression};
pub use series::{LaurentSeries, SeriesError};

pub use num_bigint::BigInt;
