//! Hypergeometric solutions of the trinomial x^n - x + t = 0, elementary
//! reduction identities for the resulting hypergeometric functions, and the
//! numerical machinery used to check them.

pub mod check;
pub mod cx;
pub mod error;
pub mod identities;
pub mod quad;
pub mod roots;
pub mod specfun;

pub use check::{CheckRecord, ParamValue, Params, Verdict};
pub use error::{Error, Result};
