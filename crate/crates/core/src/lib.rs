pub mod cli;
pub mod cohomology;
pub mod error;
pub mod multengine;
pub mod multiset;
pub mod pairspec;
pub mod parabolic;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use multiset::WeightMultiset;
pub use rational::{Matrix, Weight, Q};
