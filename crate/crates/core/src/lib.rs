//! Exact Kazhdan-Lusztig-Vogan computations on combinatorial block data,
//! with the comparison machinery for parabolically induced modules.
//!
//! Coefficients live in `Z[v, v^-1]` with `u = v^2`. Every computation is
//! exact; no floating point is used anywhere.

pub mod blockdata;
pub mod correspondence;
pub mod error;
pub mod gauss;
pub mod genericity;
pub mod hecke;
pub mod klv;
pub mod laurent;
pub mod rootdata;
pub mod singular;

pub use blockdata::{BlockData, IndexedBlock, Parameter, Simple, SimpleStatus};
pub use error::{Error, Result};
pub use gauss::GaussRat;
pub use klv::{run_klv, KlvResult};
pub use laurent::LaurentPoly;
pub use rootdata::{InfChar, LeviSelection, RootDatum};
