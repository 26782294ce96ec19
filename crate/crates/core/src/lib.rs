//! Exact computation of the relative K-groups `K_q(A, I)` of the coordinate
//! axes `A = k[x,y]/(xy)`, `I = (x,y)`, over finite fields `k = F_q`.
//!
//! Two independent pipelines produce the same groups:
//!
//! * [`kgroups`] sums big de Rham-Witt groups `W_m Ω^{q-2m}` and evaluates
//!   them through their p-typical decomposition ([`drw`]).
//! * [`trtc`] assembles topological cyclic homology as a product over
//!   `d` prime to `p` of stabilized equivariant TR groups, graded by the
//!   fixed-point dimensions of the representations `λ_i`.
//!
//! [`nerve`] checks the underlying decomposition of the cyclic bar
//! construction of `{0, 1, x, x², …, y, y², …}` (with `xy = 0`) by exact
//! integral homology, and [`witt`] realizes `W_s(F_q)` by brute force.

pub mod abelian;
pub mod arith;
pub mod drw;
pub mod error;
pub mod kgroups;
pub mod nerve;
pub mod selftest;
pub mod trtc;
pub mod witt;

pub use abelian::{FinAbGroup, IntMatrix, PointedChainComplex, PrimePower};
pub use drw::{BaseRing, Evaluation, GradedSum, Symbol};
pub use error::{Error, Result};
