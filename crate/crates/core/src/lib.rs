//! Exact symbolic computation in a Z3-graded quantum group and its
//! relatives: graded planes, the graded matrix bialgebra, its Hopf algebra
//! obtained by localizing at the quantum determinant, and FRT data.
//!
//! All arithmetic is exact over `Q(q)` with `q^2 + q + 1 = 0`.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod comodule;
pub mod error;
pub mod expr;
pub mod frt;
pub mod hopf;
pub mod linalg;
pub mod presets;
pub mod properties;
pub mod report;
pub mod scalars;
pub mod tensor;
pub mod verify;

mod render;

pub use algebra::{GradeOf, Letter, Monomial, Poly, Presentation, Z3};
pub use error::{AlgebraError, Result};
pub use report::{CheckReport, Status};
pub use scalars::CycScalar;
pub use tensor::{Braiding, TensorPoly};
