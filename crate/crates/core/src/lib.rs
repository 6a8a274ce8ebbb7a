//! Exact computations with finite-dimensional superalgebras over `Q` and `F_p`:
//! graded modules, Morita contexts, progenerators and super Azumaya algebras.

pub mod azumaya;
pub mod cli;
pub mod error;
pub mod field;
pub mod io;
pub mod morita;
pub mod report;
pub mod supermodule;
pub mod superring;
pub mod supervec;

pub use error::{Error, Result};
pub use field::{Field, Parity, Scalar};
pub use report::{Check, Report};
pub use supermodule::{ModuleMap, Side, SuperModule};
pub use superring::SuperAlgebra;
pub use supervec::{GradedDim, Matrix, SuperSpace};
