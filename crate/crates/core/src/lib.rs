//! Centers of Leavitt path algebras `L(Γ)` and Cuntz-Krieger algebras
//! `CK(Γ)` of finite directed graphs.
//!
//! The center is computed combinatorially from the Boolean algebra of
//! finitary hereditary annihilator vertex sets and the finitary cycles
//! without exits, then every generator is checked symbolically in `L(Γ)`.

pub mod analysis;
pub mod center;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod leavitt;

pub use analysis::{ArrivalSet, AtomKind, FinitaryLattice};
pub use center::{CenterReport, CrossCheck};
pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Path, SimplicityWitness, VertexSet};
pub use leavitt::{AlgebraElement, Coeff, LeavittAlgebra, Monomial};
