//! Minimum obstacle counts for fixed embeddings, embedding search and the
//! slab experiment.

pub mod hitting_set;
mod search;
mod slab;

pub use search::{obstacle_number_search, SearchConfig, SearchOutcome};
pub use slab::{slab_report, SlabEntry, SlabReport};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arrangement::{coverage_matrix, planarize, Arrangement, CoverageMatrix, FaceId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representation::{verify_with, Embedding, Obstacle, ObstacleRepresentation, ObstacleSet};
use crate::scalar::Scalar;
use hitting_set::{HittingSet, SolveError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every obstacle is a single face of the arrangement.
    #[default]
    Faces,
    /// Obstacles are unions of faces joined through shared original vertices.
    VertexClusters,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimizeConfig {
    pub mode: Mode,
    /// Branch-and-bound node limit.
    pub node_budget: u64,
}

impl Default for MinimizeConfig {
    fn default() -> Self {
        MinimizeConfig {
            mode: Mode::Faces,
            node_budget: 2_000_000,
        }
    }
}

impl MinimizeConfig {
    pub fn with_mode(mode: Mode) -> Self {
        MinimizeConfig {
            mode,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct MinimizeResult<T> {
    pub mode: Mode,
    pub count: usize,
    /// Faces of each chosen obstacle; singletons in face mode.
    pub faces: Vec<Vec<FaceId>>,
    pub certificate: ObstacleRepresentation<T>,
    pub arrangement: Arc<Arrangement<T>>,
}

impl<T: Scalar> MinimizeResult<T> {
    /// All chosen faces, sorted.
    pub fn face_ids(&self) -> Vec<FaceId> {
        let mut ids: Vec<FaceId> = self.faces.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Candidate obstacles (as face lists) and the rows of non-edges they meet.
fn candidates<T: Scalar>(
    arr: &Arrangement<T>,
    cover: &CoverageMatrix,
    mode: Mode,
) -> (Vec<Vec<FaceId>>, Vec<Vec<usize>>) {
    match mode {
        Mode::Faces => (
            (0..arr.face_count()).map(|f| vec![f]).collect(),
            cover.rows.clone(),
        ),
        Mode::VertexClusters => {
            let groups = arr.vertex_adjacent_groups();
            let mut group_of = vec![0; arr.face_count()];
            for (g, faces) in groups.iter().enumerate() {
                for &f in faces {
                    group_of[f] = g;
                }
            }
            let rows = cover
                .rows
                .iter()
                .map(|row| {
                    let mut r: Vec<usize> = row.iter().map(|&f| group_of[f]).collect();
                    r.sort_unstable();
                    r.dedup();
                    r
                })
                .collect();
            (groups, rows)
        }
    }
}

fn obstacle_of<T>(faces: &[FaceId], mode: Mode) -> Obstacle<T> {
    match mode {
        Mode::Faces => Obstacle::Face(faces[0]),
        Mode::VertexClusters => Obstacle::FaceCluster(faces.to_vec()),
    }
}

fn certify<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
    arr: &Arc<Arrangement<T>>,
    chosen: Vec<Vec<FaceId>>,
    mode: Mode,
) -> Result<MinimizeResult<T>> {
    let obstacles: Vec<Obstacle<T>> = chosen.iter().map(|f| obstacle_of(f, mode)).collect();
    let set = ObstacleSet::with_arrangement(obstacles.clone(), arr.clone())?;
    let report = verify_with(graph, emb, &set)?;
    if !report.is_valid() {
        return Err(Error::InvalidRepresentation {
            violations: report.violations().count(),
        });
    }
    Ok(MinimizeResult {
        mode,
        count: chosen.len(),
        faces: chosen,
        certificate: ObstacleRepresentation::new(graph.clone(), emb.clone(), obstacles)?,
        arrangement: arr.clone(),
    })
}

fn solve_error(e: SolveError) -> Error {
    match e {
        SolveError::Infeasible(_) => Error::NoFaceInterior(0),
        SolveError::Budget(best) => Error::BudgetExceeded {
            best_upper: best.len(),
        },
    }
}

/// Minimum obstacle count for the fixed embedding, with the lexicographically
/// smallest optimal candidate set.
pub fn min_obstacles_fixed<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
    cfg: MinimizeConfig,
) -> Result<MinimizeResult<T>> {
    let arr = Arc::new(planarize(graph, emb)?);
    min_obstacles_on(graph, emb, &arr, cfg)
}

/// As [`min_obstacles_fixed`], reusing an arrangement of `(graph, emb)`.
pub fn min_obstacles_on<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
    arr: &Arc<Arrangement<T>>,
    cfg: MinimizeConfig,
) -> Result<MinimizeResult<T>> {
    let cover = coverage_matrix(arr)?;
    let (cands, rows) = candidates(arr, &cover, cfg.mode);
    let problem = HittingSet::new(cands.len(), &rows);
    let chosen = problem.exact(cfg.node_budget).map_err(solve_error)?;
    certify(
        graph,
        emb,
        arr,
        chosen.into_iter().map(|c| cands[c].clone()).collect(),
        cfg.mode,
    )
}

/// Greedy face cover: most uncovered non-edges first, smallest id on ties.
pub fn greedy_fixed<T: Scalar>(graph: &Graph, emb: &Embedding<T>) -> Result<MinimizeResult<T>> {
    let arr = Arc::new(planarize(graph, emb)?);
    let cover = coverage_matrix(&arr)?;
    let problem = HittingSet::new(arr.face_count(), &cover.rows);
    let chosen = problem.greedy().map_err(solve_error)?;
    certify(
        graph,
        emb,
        &arr,
        chosen.into_iter().map(|f| vec![f]).collect(),
        Mode::Faces,
    )
}

/// Minimum face cover by enumerating face subsets in order of size.
pub fn brute_force_fixed<T: Scalar>(graph: &Graph, emb: &Embedding<T>) -> Result<Vec<FaceId>> {
    let arr = planarize(graph, emb)?;
    let cover = coverage_matrix(&arr)?;
    HittingSet::new(arr.face_count(), &cover.rows)
        .brute_force()
        .map_err(solve_error)
}

#[cfg(test)]
mod tests;
