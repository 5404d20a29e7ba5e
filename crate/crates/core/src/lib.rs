//! Exact state calculus for colored MOY graphs and link diagrams.
//!
//! The crate computes, over exact rationals:
//! - symmetric-function values on difference alphabets and their
//!   interpolation through subsets of a fixed root set Σ ([`symkit`],
//!   [`interp`]);
//! - the ring of an m-colored circle with its two Schur bases and the ζ
//!   pairing ([`circlering`]);
//! - states of colored MOY graphs, knotted MOY graphs, and link diagrams,
//!   their homological gradings, idempotent ring decompositions, and state
//!   transport under local moves ([`diagrams`], [`statecalc`]);
//! - colored Rasmussen-type invariants: exact values on braid-positive /
//!   braid-negative classes and unlinks, interval bounds elsewhere, with
//!   the associated symmetry relations and topological certificates
//!   ([`invariants`]).
//!
//! The practical ceiling is N ≤ 16 roots (subsets are bitmasks over root
//! indices); enumeration-heavy operations are intended for small N.

pub mod circlering;
pub mod diagrams;
pub mod fixtures;
pub mod interp;
pub mod invariants;
pub mod linalg;
pub mod rational;
pub mod statecalc;
pub mod symkit;
pub mod verify;

pub use rational::Rational;
pub use symkit::RootSet;
