//! Inverse Chevalley formulas for semi-infinite flag manifolds of simply-laced type.

pub mod chevalley;
pub mod error;
pub mod heisenberg;
pub mod oracle;
pub mod parse;
pub mod qbg;
pub mod root_system;
pub mod type_a;
pub mod verify;
pub mod walks;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{CartanType, Family, Root, RootSystem, Weight};
pub use weyl::{AffineWeylElt, MinusculeDatum, Sign, WeylElt, WeylTable};
