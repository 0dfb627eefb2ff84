//! Exact scalars and small dense linear algebra.

mod matrix;
mod rational;
pub mod vector;

pub use matrix::{kernel, nullspace, rank, rref, Matrix, Rref, SubspaceBasis};
pub use rational::{q, Rational};
pub use vector::Vector3;
