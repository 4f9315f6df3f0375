//! Arrival paths, finitariness, annihilator sets and the Boolean algebra of
//! finitary hereditary annihilator sets.

mod arrival;
mod lattice;

pub use arrival::{arrival_paths, is_finitary, ArrivalSet};
pub use lattice::{
    annihilator, classify_atom, double_annihilator, finitary_lattice, AtomKind, FinitaryLattice,
    DEFAULT_MAX_VERTICES,
};
