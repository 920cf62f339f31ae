//! Randomized removal of degenerate sextuples by moving one point at a time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::line_table::LineTable;
use super::{canonical_sequence, is_simple, PointSequence};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::Graph;
use crate::representation::{visibility_graph, Obstacle, ObstacleSet};
use crate::scalar::{Scalar, Sign};

/// A graph and obstacles whose visibility graph must survive the perturbation.
#[derive(Clone, Copy, Debug)]
pub struct PerturbContext<'a, T> {
    pub graph: &'a Graph,
    pub obstacles: &'a [Obstacle<T>],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerturbConfig {
    pub seed: u64,
    /// Number of times the step radius is halved before giving up on a point.
    pub halvings: u32,
    /// Random offsets tried per radius.
    pub attempts: u32,
}

impl Default for PerturbConfig {
    fn default() -> Self {
        PerturbConfig {
            seed: 0,
            halvings: 64,
            attempts: 32,
        }
    }
}

impl PerturbConfig {
    pub fn with_seed(seed: u64) -> Self {
        PerturbConfig {
            seed,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerturbStep {
    pub vertex: usize,
    pub degenerate_before: usize,
    pub degenerate_after: usize,
}

#[derive(Clone, Debug)]
pub struct PerturbOutcome<T> {
    pub points: PointSequence<T>,
    pub steps: Vec<PerturbStep>,
}

const OFFSET_RESOLUTION: i64 = 1 << 20;
const STUCK_LIMIT: u32 = 4;

struct Guard<'a, T> {
    graph: &'a Graph,
    obstacles: ObstacleSet<T>,
    visibility: Graph,
}

fn check_context<'a, T: Scalar>(p: &PointSequence<T>, ctx: PerturbContext<'a, T>) -> Result<Guard<'a, T>> {
    if ctx.graph.n() != p.len() {
        return Err(Error::SizeMismatch {
            points: p.len(),
            vertices: ctx.graph.n(),
        });
    }
    for (i, ob) in ctx.obstacles.iter().enumerate() {
        for (u, w) in ctx.graph.edges() {
            let (a, b) = (p.point(u), p.point(w));
            let touches = match ob {
                Obstacle::Point(x) => crate::geometry::closed_segment_contains(a, b, x),
                Obstacle::Polygon(poly) => poly.touches_closed_segment(a, b),
                Obstacle::Face(_) | Obstacle::FaceCluster(_) => true,
            };
            if touches {
                return Err(Error::ObstacleTouchesEdge {
                    obstacle: i,
                    edge: (u, w),
                });
            }
        }
    }
    let obstacles = ObstacleSet::geometric(ctx.obstacles.to_vec())?;
    let visibility = visibility_graph(p, &obstacles)?;
    if &visibility != ctx.graph {
        let violations = crate::graph::all_pairs(p.len())
            .filter(|&(u, w)| visibility.has_edge(u, w) != ctx.graph.has_edge(u, w))
            .count();
        return Err(Error::InvalidRepresentation { violations });
    }
    Ok(Guard {
        graph: ctx.graph,
        obstacles,
        visibility,
    })
}

fn linf<T: Scalar>(p: &Point<T>, q: &Point<T>) -> T {
    let dx = (p.x.clone() - q.x.clone()).abs();
    let dy = (p.y.clone() - q.y.clone()).abs();
    if dx > dy {
        dx
    } else {
        dy
    }
}

/// Moves points until the sequence is simple.
///
/// Each accepted move strictly lowers the number of degenerate sextuples,
/// keeps every non-zero sextuple type, and (with a context) keeps the
/// visibility graph. Deterministic for a fixed seed.
pub fn perturb_to_simple<T: Scalar>(
    p: &PointSequence<T>,
    context: Option<PerturbContext<'_, T>>,
    cfg: PerturbConfig,
) -> Result<PerturbOutcome<T>> {
    let guard = context.map(|c| check_context(p, c)).transpose()?;
    let n = p.len();
    let seq = canonical_sequence(n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points = p.points().to_vec();
    let mut steps = Vec::new();

    while !is_simple(&PointSequence {
        points: points.clone(),
    }) {
        let table = LineTable::new(&points);
        let types: Vec<Sign> = seq.lines().iter().map(|l| table.sextuple_type(l)).collect();
        let total = types.iter().filter(|s| s.is_zero()).count();
        let first = types
            .iter()
            .position(|s| s.is_zero())
            .expect("non-simple has a zero");
        let mut candidates = Vec::new();
        for v in seq.entries()[first].as_array() {
            if !candidates.contains(&v) {
                candidates.push(v);
            }
        }

        let mut moved = false;
        for v in candidates {
            if let Some((point, after)) = try_move(&points, v, &types, &seq, guard.as_ref(), cfg, &mut rng)? {
                points[v] = point;
                steps.push(PerturbStep {
                    vertex: v,
                    degenerate_before: total,
                    degenerate_after: total - after,
                });
                moved = true;
                break;
            }
        }
        if !moved {
            return Err(Error::PerturbationExhausted { residual: total });
        }
    }
    Ok(PerturbOutcome {
        points: PointSequence::new(points)?,
        steps,
    })
}

/// Returns the accepted new position of `v` and how many degenerate
/// sextuples it removed.
fn try_move<T: Scalar>(
    points: &[Point<T>],
    v: usize,
    types: &[Sign],
    seq: &super::CanonicalSextupleSequence,
    guard: Option<&Guard<'_, T>>,
    cfg: PerturbConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Option<(Point<T>, usize)>> {
    let involved: Vec<usize> = (0..seq.r()).filter(|&l| seq.entries()[l].involves(v)).collect();
    let zeros_before = involved.iter().filter(|&&l| types[l].is_zero()).count();
    if zeros_before == 0 {
        return Ok(None);
    }
    let mut rho: Option<T> = None;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = linf(&points[i], &points[j]);
            if rho.as_ref().is_none_or(|r| d < *r) {
                rho = Some(d);
            }
        }
    }
    let mut rho = rho.expect("at least three points").half();
    let resolution = T::from_i64(OFFSET_RESOLUTION).expect("resolution");

    let mut stuck = 0;
    for _ in 0..cfg.halvings {
        for _ in 0..cfg.attempts {
            let kx = rng.gen_range(-OFFSET_RESOLUTION..=OFFSET_RESOLUTION);
            let ky = rng.gen_range(-OFFSET_RESOLUTION..=OFFSET_RESOLUTION);
            if kx == 0 && ky == 0 {
                continue;
            }
            let step = |k: i64| rho.clone() * T::from_i64(k).expect("offset") / resolution.clone();
            let candidate = Point::new(points[v].x.clone() + step(kx), points[v].y.clone() + step(ky));
            if points.iter().enumerate().any(|(i, q)| i != v && *q == candidate) {
                continue;
            }
            let mut moved = points.to_vec();
            moved[v] = candidate;
            let table = LineTable::new(&moved);
            let mut zeros_after = 0;
            let mut keeps_types = true;
            for &l in &involved {
                let t = table.sextuple_type(&seq.lines()[l]);
                if !types[l].is_zero() && t != types[l] {
                    keeps_types = false;
                    break;
                }
                if t.is_zero() {
                    zeros_after += 1;
                }
            }
            if !keeps_types {
                break;
            }
            if zeros_after >= zeros_before {
                // Small type-preserving moves of `v` leave these zeros alone.
                stuck += 1;
                if stuck >= STUCK_LIMIT {
                    return Ok(None);
                }
                continue;
            }
            if let Some(g) = guard {
                let seq_moved = PointSequence {
                    points: moved.clone(),
                };
                let vis = visibility_graph(&seq_moved, &g.obstacles)?;
                if vis != g.visibility || &vis != g.graph {
                    break;
                }
            }
            let point = moved.swap_remove(v);
            return Ok(Some((point, zeros_before - zeros_after)));
        }
        rho = rho.half();
    }
    Ok(None)
}
