//! Quantum shuffle algebras of type A-infinity with their theta-twisted
//! shuffle modules, PBW and canonical bases, graded characters, and a
//! polynomial-representation audit of orientifold KLR algebras.

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod exactq;
pub mod rootdata;
pub mod words;
pub mod comb;
pub mod linalg;
pub mod shuffle;
pub mod thetamod;
pub mod bases;
pub mod characters;
pub mod identities;
pub mod oklrsym;
pub mod report;
