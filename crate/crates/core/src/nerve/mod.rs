//! The cyclic bar construction of the pointed monoids `Π⁰ = {0, 1}`,
//! `Π¹ = {0, 1, z, z², …}` and `Π² = {0, 1, x, x², …, y, y², …}` (with
//! `xy = 0`), its decomposition into components indexed by cyclical words,
//! and integral homology of the normalized chains of each component.

mod component;
mod hochschild;
mod monoid;
mod words;

pub use component::{
    component_complex, component_homology, pi1_component_rank, predicted_homology,
    simplex_counts_by_word, wedge_decomposition_check, Simplex,
};
pub use hochschild::{hochschild_complex, hochschild_homology, nondegenerate_counts};
pub use monoid::{word_of, Pi2Element, PointedMonoid};
pub use words::{
    canonical_cyclic_word, enumerate_cyclic_words, necklace_count, CyclicWord, Letter,
};
