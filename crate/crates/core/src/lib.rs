//! Exact characters of finite-dimensional irreducible osp(3|2m)-modules.
//!
//! Every character is produced as an integer combination of generalized
//! Verma module characters (a [`formulae::VermaExpansion`]) and can be
//! expanded into a [`series::TruncatedSeries`] in the variables
//! `x_i = e^{−δ_i}`, `y = e^{ε}`, truncated by total x-degree.
//!
//! ```
//! use ospchar::{formulae, Weight};
//!
//! let natural = Weight::parse("1;0", Some(1)).unwrap();
//! let expansion = formulae::irreducible_expansion(&natural).unwrap();
//! let series = formulae::expansion_to_series(&expansion, 4).unwrap();
//! assert_eq!(series.render(), "x1^-1 + y^-1 + 1 + y + x1");
//! ```

pub mod block;
pub mod cli;
pub mod error;
pub mod formulae;
pub mod half;
pub mod schur;
pub mod series;
pub mod verify;
pub mod verma;
pub mod weight;
pub mod weyl;

pub use block::{classify, Classification};
pub use error::{Error, Result};
pub use half::HalfInt;
pub use weight::{bilinear_form, rho, Weight};
pub use weyl::SignedPermutation;

/// Largest supported rank m.
pub const MAX_RANK: usize = 8;
