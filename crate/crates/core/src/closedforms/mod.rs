//! Explicit coefficient data that the integral pipeline must reproduce.
//!
//! Every polynomial here is an independently recorded closed form. The
//! construction code in `extremality` and `csc` derives the same objects from
//! moment integrals and compares against these tables exactly; a mismatch is a
//! bug in one of the two routes and panics rather than propagating.

pub mod dim5;
pub mod dim7;
pub mod families;
