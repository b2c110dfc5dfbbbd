//! Finite categories, their fat categories and the double-categorical and
//! monoidal structure built on top, with exhaustive law checkers.
//!
//! Every checker returns a [`ValidationReport`] listing how many instances of
//! each law were examined and a witness for every failure.

pub mod category;
pub mod double;
pub mod fat;
pub mod instances;
pub mod monoidal;
pub mod report;

pub use category::{CategoryBuilder, CategoryError, FiniteCategory, MorId, MorRecord, ObjId};
pub use fat::{FatError, FatMorphism, FatObject, HomMap};
pub use monoidal::{MonoidalError, MonoidalStructure};
pub use report::{LawTally, ValidationReport, Violation};
