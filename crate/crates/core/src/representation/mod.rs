//! Obstacles, visibility and obstacle representations.

mod canonical;

pub use canonical::{canonicalize_representation, CanonicalOutcome};

use std::sync::Arc;

use crate::arrangement::{planarize, Arrangement, FaceId};
use crate::error::{Error, Result};
use crate::geometry::{closed_segment_contains, open_segment_contains, Point, Polygon};
use crate::graph::{all_pairs, Graph};
use crate::scalar::Scalar;
use crate::super_order::PointSequence;

/// The vertex placement `φ`; point `i` is the image of vertex `i`.
pub type Embedding<T> = PointSequence<T>;

/// An obstacle. Polygons and faces are open sets; a point blocks only the
/// segments whose relative interior contains it.
#[derive(Clone, Debug, PartialEq)]
pub enum Obstacle<T> {
    Point(Point<T>),
    Polygon(Polygon<T>),
    /// A face of the arrangement of the drawn graph.
    Face(FaceId),
    /// Faces joined through shared original vertices, which the obstacle
    /// also contains.
    FaceCluster(Vec<FaceId>),
}

impl<T> Obstacle<T> {
    pub fn needs_arrangement(&self) -> bool {
        matches!(self, Obstacle::Face(_) | Obstacle::FaceCluster(_))
    }
}

/// Obstacles plus, when any of them refers to faces, the arrangement those
/// face ids index into.
#[derive(Clone, Debug)]
pub struct ObstacleSet<T> {
    obstacles: Vec<Obstacle<T>>,
    arrangement: Option<Arc<Arrangement<T>>>,
}

impl<T: Scalar> ObstacleSet<T> {
    /// Point and polygon obstacles only.
    pub fn geometric(obstacles: Vec<Obstacle<T>>) -> Result<Self> {
        if obstacles.iter().any(Obstacle::needs_arrangement) {
            return Err(Error::MissingArrangement);
        }
        Ok(ObstacleSet {
            obstacles,
            arrangement: None,
        })
    }

    pub fn with_arrangement(obstacles: Vec<Obstacle<T>>, arrangement: Arc<Arrangement<T>>) -> Result<Self> {
        let faces = arrangement.face_count();
        for ob in &obstacles {
            let ids: &[FaceId] = match ob {
                Obstacle::Face(id) => std::slice::from_ref(id),
                Obstacle::FaceCluster(ids) => ids,
                _ => &[],
            };
            if let Some(&id) = ids.iter().find(|&&id| id >= faces) {
                return Err(Error::InvalidFace { id, faces });
            }
        }
        Ok(ObstacleSet {
            obstacles,
            arrangement: Some(arrangement),
        })
    }

    /// Planarizes `(graph, emb)` only if some obstacle refers to faces.
    pub fn resolve(graph: &Graph, emb: &Embedding<T>, obstacles: Vec<Obstacle<T>>) -> Result<Self> {
        if obstacles.iter().any(Obstacle::needs_arrangement) {
            let arr = Arc::new(planarize(graph, emb)?);
            Self::with_arrangement(obstacles, arr)
        } else {
            Self::geometric(obstacles)
        }
    }

    pub fn obstacles(&self) -> &[Obstacle<T>] {
        &self.obstacles
    }

    pub fn arrangement(&self) -> Option<&Arc<Arrangement<T>>> {
        self.arrangement.as_ref()
    }

    pub fn len(&self) -> usize {
        self.obstacles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.obstacles.is_empty()
    }

    /// The same context restricted to a single obstacle.
    pub fn single(&self, i: usize) -> ObstacleSet<T> {
        ObstacleSet {
            obstacles: vec![self.obstacles[i].clone()],
            arrangement: self.arrangement.clone(),
        }
    }

    fn blocks(&self, ob: &Obstacle<T>, u: usize, w: usize, emb: &Embedding<T>) -> Result<bool> {
        let (a, b) = (emb.point(u), emb.point(w));
        Ok(match ob {
            Obstacle::Point(x) => open_segment_contains(a, b, x),
            Obstacle::Polygon(poly) => poly.open_segment_meets_interior(a, b),
            Obstacle::Face(id) => self.faces_on(u, w)?.contains(id),
            Obstacle::FaceCluster(ids) => {
                let arr = self.arrangement.as_ref().ok_or(Error::MissingArrangement)?;
                let through_vertex = arr
                    .cluster_vertices(ids)
                    .into_iter()
                    .any(|v| open_segment_contains(a, b, emb.point(v)));
                through_vertex || self.faces_on(u, w)?.iter().any(|f| ids.contains(f))
            }
        })
    }

    fn faces_on(&self, u: usize, w: usize) -> Result<Vec<FaceId>> {
        let arr = self.arrangement.as_ref().ok_or(Error::MissingArrangement)?;
        arr.segment_faces(u, w)
    }
}

fn check_pair<T: Scalar>(u: usize, w: usize, emb: &Embedding<T>) -> Result<()> {
    for v in [u, w] {
        if v >= emb.len() {
            return Err(Error::InvalidVertex {
                vertex: v,
                n: emb.len(),
            });
        }
    }
    if u == w {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

/// Indices of the obstacles met by the open segment `φ(u)φ(w)`.
pub fn blocking_obstacles<T: Scalar>(
    u: usize,
    w: usize,
    emb: &Embedding<T>,
    set: &ObstacleSet<T>,
) -> Result<Vec<usize>> {
    check_pair(u, w, emb)?;
    let mut hits = Vec::new();
    for (i, ob) in set.obstacles.iter().enumerate() {
        if set.blocks(ob, u, w, emb)? {
            hits.push(i);
        }
    }
    Ok(hits)
}

pub fn is_blocked<T: Scalar>(u: usize, w: usize, emb: &Embedding<T>, set: &ObstacleSet<T>) -> Result<bool> {
    check_pair(u, w, emb)?;
    for ob in &set.obstacles {
        if set.blocks(ob, u, w, emb)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The graph of unblocked pairs.
pub fn visibility_graph<T: Scalar>(emb: &Embedding<T>, set: &ObstacleSet<T>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (u, w) in all_pairs(emb.len()) {
        if !is_blocked(u, w, emb, set)? {
            edges.push((u, w));
        }
    }
    Graph::new(emb.len(), edges)
}

#[derive(Clone, Debug)]
pub struct ObstacleRepresentation<T> {
    pub graph: Graph,
    pub embedding: Embedding<T>,
    pub obstacles: Vec<Obstacle<T>>,
}

impl<T: Scalar> ObstacleRepresentation<T> {
    pub fn new(graph: Graph, embedding: Embedding<T>, obstacles: Vec<Obstacle<T>>) -> Result<Self> {
        if graph.n() != embedding.len() {
            return Err(Error::SizeMismatch {
                points: embedding.len(),
                vertices: graph.n(),
            });
        }
        Ok(ObstacleRepresentation {
            graph,
            embedding,
            obstacles,
        })
    }

    pub fn obstacle_set(&self) -> Result<ObstacleSet<T>> {
        ObstacleSet::resolve(&self.graph, &self.embedding, self.obstacles.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    EdgeBlocked,
    NonEdgeVisible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStatus {
    pub u: usize,
    pub w: usize,
    pub is_edge: bool,
    pub blocked_by: Vec<usize>,
}

impl PairStatus {
    pub fn blocked(&self) -> bool {
        !self.blocked_by.is_empty()
    }

    pub fn violation(&self) -> Option<ViolationKind> {
        match (self.is_edge, self.blocked()) {
            (true, true) => Some(ViolationKind::EdgeBlocked),
            (false, false) => Some(ViolationKind::NonEdgeVisible),
            _ => None,
        }
    }
}

/// Every vertex pair in `(u, w)` order with its blocking obstacles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub pairs: Vec<PairStatus>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.pairs.iter().all(|p| p.violation().is_none())
    }

    pub fn violations(&self) -> impl Iterator<Item = (&PairStatus, ViolationKind)> {
        self.pairs.iter().filter_map(|p| p.violation().map(|v| (p, v)))
    }
}

/// Checks `uw ∈ E ⟺ φ(u)φ(w) meets no obstacle` for every pair.
///
/// Fails only when face obstacles cannot be resolved (non-simple embedding
/// or unknown face id); invalidity is reported, not returned as an error.
pub fn verify<T: Scalar>(rep: &ObstacleRepresentation<T>) -> Result<VerificationReport> {
    let set = rep.obstacle_set()?;
    verify_with(&rep.graph, &rep.embedding, &set)
}

pub fn verify_with<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
    set: &ObstacleSet<T>,
) -> Result<VerificationReport> {
    let mut pairs = Vec::new();
    for (u, w) in all_pairs(emb.len()) {
        pairs.push(PairStatus {
            u,
            w,
            is_edge: graph.has_edge(u, w),
            blocked_by: blocking_obstacles(u, w, emb, set)?,
        });
    }
    Ok(VerificationReport { pairs })
}

/// One point obstacle at the midpoint of every non-edge.
pub fn midpoint_representation<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
) -> Result<ObstacleRepresentation<T>> {
    if graph.n() != emb.len() {
        return Err(Error::SizeMismatch {
            points: emb.len(),
            vertices: graph.n(),
        });
    }
    let mut obstacles = Vec::new();
    for (u, w) in graph.non_edges() {
        let m = emb.point(u).midpoint(emb.point(w));
        for (x, y) in all_pairs(emb.len()) {
            if (x, y) != (u, w) && closed_segment_contains(emb.point(x), emb.point(y), &m) {
                return Err(Error::GeneralPosition {
                    non_edge: (u, w),
                    segment: (x, y),
                });
            }
        }
        obstacles.push(Obstacle::Point(m));
    }
    ObstacleRepresentation::new(graph.clone(), emb.clone(), obstacles)
}

/// `E_i` = visibility graph of obstacle `i` alone; their intersection is `E`.
pub fn per_obstacle_decomposition<T: Scalar>(rep: &ObstacleRepresentation<T>) -> Result<Vec<Graph>> {
    let set = rep.obstacle_set()?;
    let report = verify_with(&rep.graph, &rep.embedding, &set)?;
    if !report.is_valid() {
        return Err(Error::InvalidRepresentation {
            violations: report.violations().count(),
        });
    }
    if set.is_empty() {
        return Err(Error::InvalidParameter(
            "decomposition needs at least one obstacle".into(),
        ));
    }
    (0..set.len())
        .map(|i| visibility_graph(&rep.embedding, &set.single(i)))
        .collect()
}

#[cfg(test)]
mod tests;
