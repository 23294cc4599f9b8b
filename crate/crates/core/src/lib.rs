//! Adaptive generalized conditional gradient (A-GCG) method for multiobjective
//! composite optimization, together with a proximal-gradient baseline, the two
//! standard benchmark problems, and a validator suite that checks the method's
//! descent and complexity guarantees on recorded solver traces.
//!
//! The problems have the form `min V(x) = F(x) + G(x)` over a closed convex set,
//! where `F` collects smooth convex components and `G` collects (possibly
//! nonsmooth) convex components such as set indicators.

pub mod agcg;
pub mod error;
pub mod harness;
mod linalg;
pub mod lp;
pub mod pg;
pub mod problem;
pub mod subproblem;

pub use error::{Error, Result};
