//! Exact symbolic arithmetic in the Leavitt path algebra `L(Γ)`.
//!
//! Elements are rational combinations of monomials `p q*`. Products use the
//! rule that `q* r` vanishes unless one of `q`, `r` continues the other;
//! the relation `v = Σ_{e ∈ s^{-1}(v)} e e*` is applied as a rewrite rule
//! that eliminates one chosen special edge per vertex, which yields a
//! normal form in which equal elements have equal representations.

mod algebra;
mod element;
pub mod linalg;
mod oracle;
mod text;

pub use algebra::{Generator, LeavittAlgebra, SpecialEdgeChoice};
pub use element::{AlgebraElement, Coeff, Monomial};
pub use oracle::{paths_up_to, BoundedCenter, DEFAULT_ORACLE_BOUND};
