//! Exact arithmetic for quadratic residue codes of prime length `p` over
//! `Z_{2^m}`.
//!
//! Residues live in an unsigned machine word `W` (`u8` through `u64`)
//! masked to `m` bits; the aliases at the crate root fix `W = u64`.
//!
//! ```
//! use zqr::qr::build_family;
//!
//! let family = build_family::<u64>(7, 4).unwrap();
//! assert_eq!(family.q.cardinality_log2(), 12);
//! assert_eq!(family.q_prime.cardinality_log2(), 16);
//! ```

pub mod config;
pub mod error;
pub mod lincode;
pub mod modring;
pub mod padic;
pub mod polyring;
pub mod qr;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;

pub type Modulus64 = modring::Modulus<u64>;
pub type ZPoly64 = polyring::ZPoly<u64>;
pub type DensePoly64 = polyring::DensePoly<u64>;
pub type FactorSet64 = polyring::FactorSet<u64>;
pub type LinearCode64 = lincode::LinearCode<u64>;
pub type QrFamily64 = qr::QrFamily<u64>;
