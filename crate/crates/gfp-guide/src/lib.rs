//! The book chapters, compiled so that `cargo test --doc` runs every snippet.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}

#[doc = include_str!("../../../book/src/gcd.md")]
pub mod gcd {}

#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}

#[doc = include_str!("../../../book/src/tables.md")]
pub mod tables {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
