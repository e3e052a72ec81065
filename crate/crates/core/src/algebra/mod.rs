//! Exact arithmetic: coefficient fields, polynomials, rational functions,
//! places and the factorization kernels built on them.

pub mod additive;
pub mod factor;
pub mod field;
pub mod laurent;
pub mod linalg;
pub mod place;
pub mod poly;
pub mod ratfunc;
pub mod roots;

pub use factor::{coprime_refinement, factor_irreducible, squarefree_decomposition, DEFAULT_SEED};
pub use field::{ExtensionField, Field, FieldTag, PrimeField, Rationals};
pub use laurent::LaurentPoly;
pub use place::{support, valuation, Place};
pub use poly::{poly_gcd, Poly};
pub use ratfunc::RatFunc;
pub use roots::{constant_root, pth_power_level, ConstantRoot, PthLevel};
