//! 3-Colouring reductions onto Hamiltonian graph classes.
//!
//! Every construction returns its output graph together with a certificate
//! (Hamiltonian cycle or 2-factor) that the independent checks in [`verify`]
//! can confirm. Gadget graphs are shipped as data and re-verified on demand
//! by [`gadgets::verify_gadget`].

pub mod budget;
pub mod error;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod io;
pub mod plane;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use gadgets::{
    builtin_contract, builtin_gadget, verify_gadget, ColorRelation, Gadget, GadgetContract,
    GadgetName, VerificationReport,
};
pub use graph::{identify_vertices, Coloring, CycleCert, Graph, TwoFactorCert};
pub use io::{digest, parse_instance, serialize_instance, Body, Instance};
pub use plane::{mirror_embedding, set_outer_face_containing, Face, PlaneGraph};
pub use reductions::{QCompleteResult, ReductionTrace, TraceStep};
