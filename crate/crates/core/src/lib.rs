//! Exact computation of GIT-fans for torus actions on affine varieties.

pub mod exact;
pub mod face;
pub mod groebner;
pub mod poly;
pub mod cones;
pub mod symmetry;
pub mod gitfan;
