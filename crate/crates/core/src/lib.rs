pub mod alcove;
pub mod cartan;
pub mod crystal;
pub mod error;
pub mod experiments;
pub mod kr;
pub mod weyl;

pub use cartan::{build_cartan, CartanData, CartanType, ClassicalWeight, Color, Family, Root};
pub use crystal::{Crystal, CrystalGraph};
pub use error::{Error, Result};
pub use weyl::{
    bruhat_leq, build_qbg, dominantize, qbg, Dominantized, EdgeKind, QbgEdge, QuantumBruhatGraph,
    WeylElement, WeylGroup,
};
