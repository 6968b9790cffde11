//! Exact chromatic polynomials for clique-graph families, their complex
//! roots, and the integer root-scaling constructions built on them.
//!
//! The crate has three layers. `poly` and `graph` provide exact polynomial
//! arithmetic and the graph families. `oracle` computes ground-truth
//! chromatic polynomials by deletion-contraction, against which every
//! closed form in `formulas` is validated. `roots` and `nalpha` locate
//! complex chromatic roots, verify the exact scaling identity for
//! clique-theta interesting factors and run the best-effort density search.

pub mod formulas;
pub mod graph;
pub mod nalpha;
pub mod oracle;
pub mod poly;
pub mod roots;

pub use graph::{CliqueThetaSpec, FamilySpec, SimpleGraph};
pub use poly::{IntPoly, RatPoly};
