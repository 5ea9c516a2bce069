//! Closed-form solvers for quadratic, cubic, and quartic equations, a
//! geometric quartic solver that factors a singular member of a pencil of
//! conics, and exact-arithmetic-free analysis of a pencil of plane cubic
//! curves (critical points of the pencil parameter, base points, curve
//! sampling). A batch-oriented CLI exposes the same operations.
//!
//! Layering, lowest first:
//!
//! * [`poly`] — polynomial and projective primitives.
//! * [`oracle`] — an independent iterative root finder used to cross-check
//!   the closed forms, plus root-multiset matching.
//! * [`closed_form`] — quadratic/cubic/quartic formulas and the resolvent
//!   cubic.
//! * [`conic`] — conics, pencils of conics, degenerate-member splitting,
//!   and the pencil route to the quartic's roots.
//! * [`cubic_pencil`] — the pencil of plane cubics, its rational parameter
//!   map, critical-point search, and base points.

pub mod closed_form;
pub mod conic;
pub mod cubic_pencil;
pub mod error;
pub mod oracle;
pub mod poly;
