//! Tilting modules over A and D quivers and the quivers they form.

pub mod combinat;
pub mod error;
pub mod ladkani;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod tilting;
pub mod verify;

pub use error::{Error, Result};

/// Runs the guide's code samples as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/quivers.md")]
    pub struct Quivers;
    #[doc = include_str!("../../../book/src/representations.md")]
    pub struct Representations;
    #[doc = include_str!("../../../book/src/tilting.md")]
    pub struct Tilting;
    #[doc = include_str!("../../../book/src/tilting-quiver.md")]
    pub struct TiltingQuiver;
    #[doc = include_str!("../../../book/src/counting.md")]
    pub struct Counting;
    #[doc = include_str!("../../../book/src/gluing.md")]
    pub struct Gluing;
    #[doc = include_str!("../../../book/src/type-d.md")]
    pub struct TypeD;
    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
}
