//! Exact distinct-volume subsets of rational point sets.
//!
//! Every a-subset of a point set is colored by its squared a-volume. The
//! crate builds this coloring exactly, measures how clustered it is, and
//! extracts large subsets on which all non-zero volumes are distinct.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod combinatorics;
pub mod error;
pub mod finder;
pub mod generators;
pub mod geometry;
pub mod parallel;
pub mod rainbow;
pub mod rational;
pub mod rng;

pub use error::Error;
pub use rational::Rational;
