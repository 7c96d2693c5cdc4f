//! Rotation groups of chiral and directly regular abstract polytopes: mixing,
//! comixing, mirror images, polytopality and chirality groups.

pub mod catalog;
pub mod criteria;
pub mod error;
pub mod fp;
pub mod mixer;
pub mod perm;
pub mod rotation;

pub use error::{Error, Result};
