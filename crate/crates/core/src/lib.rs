//! Exact Leibniz cohomology of finite-dimensional left Leibniz algebras with
//! coefficients in finite-dimensional bimodules, over `Q` and `GF(p)`.
//!
//! Everything is generic over [`Scalar`]; the aliases below name the fields
//! the tests and the command line use most.

pub mod algebra;
pub mod bimodule;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod fitting;
pub mod linalg;
pub mod theorems;

pub use algebra::LeibnizAlgebra;
pub use bimodule::Bimodule;
pub use error::{Error, Result};
pub use field::{FieldSpec, Fp, Rational, RuntimeFp, Scalar};
pub use linalg::{Matrix, Subspace};

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Gf7 = Fp<7>;

pub type AlgebraQ = LeibnizAlgebra<Rational>;
pub type BimoduleQ = Bimodule<Rational>;
