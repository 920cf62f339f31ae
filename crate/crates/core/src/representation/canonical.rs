use std::collections::BTreeSet;
use std::sync::Arc;

use super::{verify_with, Obstacle, ObstacleRepresentation, ObstacleSet};
use crate::arrangement::{Arrangement, FaceId, Location};
use crate::error::{Error, Result};
use crate::geometry::{dot, segment_crossing_params, Polygon, SegmentHit};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CanonicalOutcome<T> {
    pub representation: ObstacleRepresentation<T>,
    /// Faces met by each input obstacle.
    pub faces_per_obstacle: Vec<Vec<FaceId>>,
    /// Input obstacles that met more than one face.
    pub split: Vec<usize>,
}

/// Replaces every obstacle by the arrangement faces whose interiors it meets.
pub fn canonicalize_representation<T: Scalar>(
    rep: &ObstacleRepresentation<T>,
    arr: &Arc<Arrangement<T>>,
) -> Result<CanonicalOutcome<T>> {
    let set = ObstacleSet::with_arrangement(rep.obstacles.clone(), arr.clone())?;
    let before = verify_with(&rep.graph, &rep.embedding, &set)?;
    if !before.is_valid() {
        return Err(Error::InvalidRepresentation {
            violations: before.violations().count(),
        });
    }
    let mut faces_per_obstacle = Vec::with_capacity(rep.obstacles.len());
    for (i, ob) in rep.obstacles.iter().enumerate() {
        let faces: Vec<FaceId> = match ob {
            Obstacle::Point(p) => match arr.locate(p) {
                Location::Face(f) => vec![f],
                _ => return Err(Error::NoFaceInterior(i)),
            },
            Obstacle::Polygon(poly) => faces_met_by_polygon(arr, poly).into_iter().collect(),
            Obstacle::Face(f) => vec![*f],
            Obstacle::FaceCluster(ids) => {
                let set: BTreeSet<FaceId> = ids.iter().copied().collect();
                set.into_iter().collect()
            }
        };
        if faces.is_empty() {
            return Err(Error::NoFaceInterior(i));
        }
        faces_per_obstacle.push(faces);
    }
    let split = (0..faces_per_obstacle.len())
        .filter(|&i| faces_per_obstacle[i].len() > 1)
        .collect();
    let all: BTreeSet<FaceId> = faces_per_obstacle.iter().flatten().copied().collect();
    let obstacles = all.into_iter().map(Obstacle::Face).collect();
    let representation = ObstacleRepresentation::new(rep.graph.clone(), rep.embedding.clone(), obstacles)?;
    Ok(CanonicalOutcome {
        representation,
        faces_per_obstacle,
        split,
    })
}

fn sorted_params<T: Scalar>(mut ts: Vec<T>) -> Vec<T> {
    ts.push(T::zero());
    ts.push(T::one());
    ts.sort_by(|a, b| a.cmp_total(b));
    ts.dedup();
    ts
}

/// Faces whose interiors meet the open polygon.
///
/// A face F meets the polygon iff some piece of the polygon boundary runs
/// through F (or along an arc with F on the polygon's side), or some piece of
/// an arc bounding F runs through the polygon.
fn faces_met_by_polygon<T: Scalar>(arr: &Arrangement<T>, poly: &Polygon<T>) -> BTreeSet<FaceId> {
    let mut met = BTreeSet::new();
    for (a, b) in poly.edges() {
        let mut ts = Vec::new();
        for arc in 0..arr.arc_count() {
            let (p, q) = arr.arc_points(arc);
            match segment_crossing_params(a, b, p, q) {
                SegmentHit::Disjoint => {}
                SegmentHit::Point(t) => ts.push(t),
                SegmentHit::Overlap(t0, t1) => {
                    ts.push(t0);
                    ts.push(t1);
                }
            }
        }
        for w in sorted_params(ts).windows(2) {
            let mid = a.lerp(b, &(w[0].clone() + w[1].clone()).half());
            match arr.locate(&mid) {
                Location::Face(f) => {
                    met.insert(f);
                }
                Location::Arc(arc) => {
                    // Interior lies left of a→b; pick the half-edge running the same way.
                    let (p, q) = arr.arc_points(arc);
                    let same = dot(&q.sub(p), &b.sub(a)).is_positive();
                    let (left, right) = arr.arc_faces(arc);
                    met.insert(if same { left } else { right });
                }
                Location::Node(_) => {}
            }
        }
    }
    for arc in 0..arr.arc_count() {
        let (p, q) = arr.arc_points(arc);
        let mut ts = Vec::new();
        for (a, b) in poly.edges() {
            match segment_crossing_params(p, q, a, b) {
                SegmentHit::Disjoint => {}
                SegmentHit::Point(t) => ts.push(t),
                SegmentHit::Overlap(t0, t1) => {
                    ts.push(t0);
                    ts.push(t1);
                }
            }
        }
        for w in sorted_params(ts).windows(2) {
            let mid = p.lerp(q, &(w[0].clone() + w[1].clone()).half());
            if poly.contains(&mid) {
                let (left, right) = arr.arc_faces(arc);
                met.insert(left);
                met.insert(right);
            }
        }
    }
    met
}
