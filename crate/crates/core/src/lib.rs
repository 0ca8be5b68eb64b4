#![allow(clippy::needless_range_loop)]

pub mod document;
pub mod error;
pub mod families;
pub mod grothendieck;
pub mod linalg;
pub mod modcat;
pub mod oracle;
pub mod pivotalization;
pub mod report;
pub mod scalar;
pub mod spectrum;

pub use error::{Error, Result};
