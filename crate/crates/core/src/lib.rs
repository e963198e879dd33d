//! Exact error distances, covering radii and deep holes of Reed-Solomon,
//! projective Reed-Solomon and other small MDS codes over odd-characteristic
//! finite fields.

pub mod code;
pub mod codefile;
pub mod combin;
pub mod dist;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod poly;
pub mod ssp;
pub mod verify;

pub use code::{default_glynn_w, glynn_code, glynn_rows, is_mds, min_distance, prs_code, rs_code, CodeParams, LinearCode};
pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldDescriptor};
pub use poly::{EvalDomain, Poly, Word};
