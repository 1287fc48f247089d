//! Commutation algebra of the generalized Pauli group of a single qudit,
//! realized as the geometry of the projective line over `Z_d`.
//!
//! - [`ring`]: arithmetic in `Z_d` and its CRT decomposition.
//! - [`symplectic`]: the alternating form on `Z_d^2` and perp-sets.
//! - [`projline`]: points of `P1(Z_d)` and the counting formulas.
//! - [`pauli`]: operators `w^a X^b Z^c` and an exact matrix model.
//! - [`oracle`]: exhaustive verification against brute force.
//! - [`graph`]: the neighbour relation as an exportable graph.
//!
//! ```
//! use qudit_line::{perp_set, points_containing, Modulus, Vector2};
//!
//! let m = Modulus::new(6).unwrap();
//! let v = Vector2::new(2, 0);
//! assert_eq!(perp_set(v, &m).len(), 12);
//! assert_eq!(points_containing(v, &m).unwrap().len(), 3);
//! ```

pub mod error;
pub mod graph;
pub mod oracle;
pub mod pauli;
pub mod projline;
pub mod ring;
pub mod symplectic;

pub use error::{Error, Result};
pub use graph::{neighbour_graph, NeighbourGraph};
pub use oracle::{Check, CheckResult, Harness, Status, VerificationReport};
pub use pauli::{
    commutator, commutes, commuting_count, inverse, multiply, to_matrix, GenPermMatrix, PauliOp,
};
pub use projline::{
    enumerate_points, is_admissible, is_distant, perp_as_point_union, perp_size_formula,
    points_containing, Point, ProjectiveLine,
};
pub use ring::Modulus;
pub use symplectic::{form, is_perp, perp_set, PerpSet, Vector2};
