//! Finite simplicial models of ordered and unordered configuration spaces in which
//! no more than `d` points coincide, and their integral invariants.
//!
//! The pipeline: an ordered complex `X` gives the staircase triangulation of `X^n`
//! ([`product`]); its fat diagonal is removed through one barycentric subdivision
//! and a disjoint-complement retract ([`retract`]); quotients by coordinate
//! permutation model the unordered spaces ([`quotient`]); homology, fundamental-group
//! presentations and connectivity come from [`invariants`].

pub mod action;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod local;
pub mod par;
pub mod product;
pub mod quotient;
pub mod retract;

pub use complex::{SimplicialComplex, Subcomplex, Vertex};
pub use error::{Error, Result, Violation};
