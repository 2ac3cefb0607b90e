//! Exact characters of finite-dimensional simple modules over finite
//! W-superalgebras of basic type I, with graded-dimension checks of their
//! structure.

pub mod category_o;
pub mod character;
pub mod cli;
pub mod error;
pub mod kl;
pub mod levi;
pub mod linalg;
pub mod nilpotent;
pub mod pipeline;
pub mod scalar;
pub mod structure;
pub mod superalgebra;
pub mod weyl;

pub use error::{Error, Result};
