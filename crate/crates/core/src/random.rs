//! Seeded sampling of graphs and embeddings.

use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::super_order::{is_simple, perturb_to_simple, PerturbConfig, PointSequence};
use crate::Rational;

/// `n` distinct integer points with coordinates uniform in `[0, range]`.
pub fn random_points<R: Rng + ?Sized>(n: usize, range: i64, rng: &mut R) -> PointSequence<Rational> {
    let mut pts: Vec<Point<Rational>> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::from_ints(rng.gen_range(0..=range), rng.gen_range(0..=range));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSequence::new(pts).expect("distinct points")
}

/// `n⁴`, the default coordinate range for random embeddings.
pub fn default_range(n: usize) -> i64 {
    (n.max(2) as i64).pow(4)
}

/// A random simple embedding: sample integer points, perturb when needed,
/// and resample up to `retries` times if perturbation fails.
pub fn random_simple_points<R: Rng + ?Sized>(
    n: usize,
    range: i64,
    retries: usize,
    rng: &mut R,
) -> Result<PointSequence<Rational>> {
    for _ in 0..retries.max(1) {
        let pts = random_points(n, range, rng);
        if is_simple(&pts) {
            return Ok(pts);
        }
        let cfg = PerturbConfig::with_seed(rng.gen());
        if let Ok(out) = perturb_to_simple(&pts, None, cfg) {
            return Ok(out.points);
        }
    }
    Err(Error::NoSimpleEmbedding)
}
