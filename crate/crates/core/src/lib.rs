//! Exact computations with polynomial identities, central polynomials and
//! regular decompositions of finite-dimensional algebras.

pub mod algebra;
pub mod canon;
pub mod coeff;
pub mod error;
pub mod freealg;
pub mod grassmann;
pub mod linalg;
pub mod perm;
pub mod pitest;
pub mod regular;

pub use algebra::{build_algebra, build_algebra_with, tensor, Algebra, Assignment, BuildOptions, Element};
pub use coeff::{Rational, Scalar};
pub use error::{Error, Result};
pub use freealg::{parse_poly, MultiDegree, Poly, Word};
pub use grassmann::{Blade, GrassmannElement};
