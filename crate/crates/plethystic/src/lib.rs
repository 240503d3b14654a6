//! Exact symmetric-function kernel for plethystic vertex operators.
//!
//! The ring of symmetric functions is represented in the Schur basis with
//! exact rational coefficients ([`SymFunc`]). On top of it sit plethysm, the
//! plethystic series `M_σ`/`L_σ`, π-Schur functions, the vertex operators
//! `V_π(z)`/`V*_π(z)` with their Clifford modes, an independent
//! polynomial oracle, and verification suites for the operator identities.

pub mod error;
pub mod lr;
mod memo;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod power;
pub mod series;
pub mod symfunc;
pub mod verifier;
pub mod vertex;

pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use plethysm::{plethysm, plethysm_with_budget, DEFAULT_DEGREE_BUDGET};
pub use power::{from_power_basis, to_power_basis, PowerExpr};
pub use series::{Family, SeriesSpec, Shape};
pub use symfunc::{Rational, SymFunc};
