pub mod charsums;
pub mod code;
pub mod cyclo;
pub mod dual;
pub mod error;
pub mod field;
pub mod report;
pub mod srg;

pub use error::{Error, Result};
pub use field::{build_tower, Elem, Level, Tower};
