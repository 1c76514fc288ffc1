//! Fixtures shared by the benchmarks.

use hamred_core::generate::{medial, prism};
use hamred_core::PlaneGraph;

/// Medial graph of the k-prism: 4-regular, planar, 3k vertices.
pub fn medial_prism(k: usize) -> PlaneGraph {
    medial(&prism(k).expect("k >= 3")).expect("prisms have medials")
}
