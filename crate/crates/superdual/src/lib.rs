//! Exact-arithmetic toolkit for the combinatorics of `gl(m|n)` and `osp`
//! representation theory.
//!
//! Everything here is computed over the rationals with no floating point:
//! partitions and hook combinatorics, sparse Laurent polynomials with
//! degree truncation, (hook/skew/symplectic) Schur polynomials, hook
//! tableaux, root data and odd reflections for `gl(m|n)`, the polynomial
//! superalgebra with its dual-pair differential operators, a brute-force
//! tensor-space duality engine, truncated infinite-rank character
//! formulas, and the weight-level super-duality maps.

pub mod cinfty;
pub mod glroots;
pub mod partitions;
pub mod polyring;
pub mod ratmat;
pub mod superduality;
pub mod superweyl;
pub mod symfunc;
pub mod tableaux;
pub mod tensor;
