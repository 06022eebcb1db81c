//! A checker and semi-simplicial scaffolding generator for a two-level type
//! theory with fibrant and strict layers.

pub mod conv;
pub mod delta;
pub mod driver;
pub mod elab;
pub mod parse;
pub mod signature;
pub mod sstgen;
pub mod stdlib;
pub mod syntax;
