//! Exact computations on obstacle representations of graphs.
//!
//! The core is generic over a [`Scalar`] type; the aliases below fix it to
//! exact rationals, which every algorithm in this crate assumes by default.

pub mod arrangement;
pub mod bounds;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod minimizer;
pub mod random;
pub mod representation;
pub mod scalar;
pub mod super_order;

pub use error::{Error, Result};
pub use scalar::{Scalar, Sign};

pub type Rational = num_rational::BigRational;
pub type Point = geometry::Point<Rational>;
pub type Polygon = geometry::Polygon<Rational>;
pub type Sextuple = geometry::Sextuple<Rational>;
pub type PointSequence = super_order::PointSequence<Rational>;
pub type Embedding = representation::Embedding<Rational>;
pub type Obstacle = representation::Obstacle<Rational>;
pub type ObstacleSet = representation::ObstacleSet<Rational>;
pub type ObstacleRepresentation = representation::ObstacleRepresentation<Rational>;
pub type Arrangement = arrangement::Arrangement<Rational>;
