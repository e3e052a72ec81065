//! Elliptic curves over rational function fields `k(T)`: Weierstrass
//! invariants, changes of variables, minimal models on the two affine charts
//! of `P^1`, bad-reduction counts, constancy decisions, Mason's inequality and
//! exhaustive desk-scale searches.

pub mod algebra;
pub mod error;
pub mod height_mason;
pub mod moduli;
pub mod reduction;
pub mod search;
pub mod shard;
pub mod transform;
pub mod weierstrass;

pub use error::{Error, Result};
