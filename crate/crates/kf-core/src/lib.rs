//! Exact workbench for predimension-constrained graph classes.
//!
//! The crate works over finite simple graphs with a rational predimension
//! `delta(A) = alpha * |A| - |E(A)|` and a control function `f`. It provides:
//!
//! - exact class membership and the closure/dimension calculus ([`predim`]);
//! - free amalgamation, one-point extensions and eventual-closure
//!   enumeration ([`amalgam`]);
//! - independence-theorem diagrams and the discrete supersimplicity checks
//!   ([`itd`]);
//! - symbolic measure variables on isomorphism classes, the amalgamation and
//!   triangle identities, and a triangular eliminator that certifies when the
//!   edge measure is forced to zero ([`measure`]).
//!
//! Everything is computed in exact rational (or exact integer) arithmetic;
//! floating point only appears in optional numeric cross-checks.

pub mod amalgam;
pub mod config;
pub mod error;
pub mod graph;
pub mod itd;
pub mod measure;
pub mod predim;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{
    all_graphs_up_to_iso, are_isomorphic, count_automorphisms_fixing, vset, CanonicalForm, Graph,
    VertexSet,
};
pub use predim::{
    class_violation, closure, dimension, in_class, is_d_closed, is_self_sufficient,
    kf_members_up_to_iso, predimension, realizable_points, GoodFunction, GrowthPoint, Tail,
};
pub use rational::{q, q_ratio, Q};
