//! Exact counting, enumeration and verification for restricted integer
//! compositions, inset counts, Chebyshev coefficients and the principal
//! minors of a family of Hessenberg matrices.

pub mod chebyshev;
pub mod compositions;
pub mod error;
pub mod exactmath;
pub mod exec;
pub mod family;
pub mod hessenberg;
pub mod insets;
pub mod limits;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{ExactInt, IntPoly};
pub use exec::Exec;
pub use limits::EnumLimits;
