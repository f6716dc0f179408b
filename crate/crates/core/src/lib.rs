//! Conjugacy machinery for Garside groups of finite type.

pub mod artin;
pub mod bkl;
pub mod circuits;
pub mod element;
pub mod error;
pub mod experiments;
pub mod perm;
pub mod reverse;
pub mod sliding;
pub mod structure;

pub use artin::Artin;
pub use bkl::{Bkl, Ncp};
pub use element::{Element, Letter};
pub use error::{GarsideError, Result};
pub use perm::Perm;
pub use reverse::Rev;
pub use structure::GarsideStructure;
