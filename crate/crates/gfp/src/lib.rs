//! Exact generalized Fibonacci polynomials over `Z[x]`.
//!
//! The crate builds sequences `G_n = d(x) G_{n-1} + g(x) G_{n-2}` with
//! arbitrary-precision integer coefficients, evaluates closed forms for
//! `gcd(G_m, G_n)`, and checks every closed form and identity against a
//! brute-force gcd in `Z[x]`.
//!
//! ```
//! use gfp::family::{builtin_family, Sequence};
//! use gfp::theorems::{compare, gcd_lucas_closed};
//!
//! let lucas = Sequence::new(builtin_family("lucas").unwrap());
//! let (closed, tag) = gcd_lucas_closed(&lucas, 3, 9).unwrap();
//! assert_eq!(closed.to_string(), "x^3 + 3x");
//! assert!(compare(&lucas, &lucas, 3, 9, closed, tag).agrees);
//! ```

pub mod error;
pub mod family;
pub mod identities;
pub mod poly;
pub mod random;
pub mod tables;
pub mod theorems;

pub use error::{Error, Result};
pub use family::{Family, Kind, Sequence};
pub use poly::{Poly, PolyError};
