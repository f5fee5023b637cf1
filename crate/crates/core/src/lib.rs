//! Exact Lie-theoretic computations inside E8.

pub mod chevalley;
pub mod decomp;
pub mod error;
pub mod linalg;
pub mod reality;
pub mod reps;
pub mod roots;
pub mod sl2;
pub mod toe;
pub mod weyl;

pub use error::{Error, Result};
pub use reps::{IrrepLabel, RepMultiset};
pub use roots::{Family, LatticeVector, ProductType, RootSystem, SimpleType, WeightVector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/chevalley.md")]
    mod chevalley {}
    #[doc = include_str!("../../../book/src/sl2.md")]
    mod sl2 {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/reality.md")]
    mod reality {}
    #[doc = include_str!("../../../book/src/candidates.md")]
    mod candidates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
