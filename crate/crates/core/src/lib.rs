//! Complex special functions, ε-regularized singular integrals, and a
//! harness that checks weak-limit identities numerically.

pub mod complexfn;
pub mod distrib;
pub mod error;
pub mod harness;
pub mod hyper;
pub mod legendre;
pub mod quad;

pub use complexfn::ComplexValue;
pub use error::{Error, Result};
