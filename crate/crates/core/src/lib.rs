//! Exact computations with finite-dimensional Hopf algebras over cyclotomic fields:
//! bosonizations, Yetter-Drinfeld structures, and (relative) adjoint algebras of
//! comodule algebras over Taft algebras.

pub mod adjoint;
pub mod braided_adjoint;
pub mod braiding;
pub mod constructions;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod transport;

pub use hopf::{FinDimAlgebra, FinDimCoalgebra, FinDimHopf, HopfError};
pub use linalg::{Matrix, SubspaceBasis, Vector};
pub use report::{ReportEntry, Status, VerificationReport};
pub use scalar::{make_field, zeta_power, Field, FieldContext, Rational, Scalar};
pub use adjoint::{AdjointAlgebra, AdjointProblem, Condition};
pub use braided_adjoint::{GammaConvention, HAdjoint};
pub use braiding::{ComoduleAlgebra, ComoduleRep, ModuleRep, RMatrix, YDModule};
pub use constructions::{BraidedHopf, ComoduleAlgebraK, TaftSetup};
