//! Finite abelian groups, exact integer matrices, Smith normal form, and
//! integral homology of finite chain complexes.

mod complex;
mod group;
mod matrix;
mod snf;

pub use complex::PointedChainComplex;
pub use group::{FinAbGroup, PrimePower};
pub use matrix::IntMatrix;
pub use snf::{rank_mod_p, smith_normal_form, SmithForm};
