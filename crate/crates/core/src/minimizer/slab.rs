use super::{min_obstacles_fixed, MinimizeConfig, MinimizeResult};
use crate::arrangement::FaceId;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representation::Embedding;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct SlabEntry<T> {
    /// Original vertex indices of the slab, left to right.
    pub vertices: Vec<usize>,
    /// The induced subgraph, renumbered in slab order.
    pub graph: Graph,
    /// Minimum for the induced instance on the restricted embedding.
    pub minimum: MinimizeResult<T>,
    /// Obstacles of the whole-instance certificate lying strictly inside the
    /// slab's x-range.
    pub whole_obstacles_inside: usize,
}

#[derive(Clone, Debug)]
pub struct SlabReport<T> {
    pub k: usize,
    pub m: usize,
    /// All vertices sorted by x-coordinate.
    pub order: Vec<usize>,
    pub slabs: Vec<SlabEntry<T>>,
    pub whole: MinimizeResult<T>,
}

/// Splits the `k·m` leftmost points into `m = ⌊n/k⌋` vertical slabs of `k`
/// points and solves every slab and the whole instance.
///
/// Slab boundaries are the vertical lines halfway between consecutive slabs;
/// the first slab extends to `-∞` and the last to `+∞` when `k` divides `n`.
pub fn slab_report<T: Scalar>(
    graph: &Graph,
    emb: &Embedding<T>,
    k: usize,
    cfg: MinimizeConfig,
) -> Result<SlabReport<T>> {
    let n = emb.len();
    if graph.n() != n {
        return Err(Error::SizeMismatch {
            points: n,
            vertices: graph.n(),
        });
    }
    if k == 0 || k > n {
        return Err(Error::SlabSize { k, n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| emb.point(a).x.cmp_total(&emb.point(b).x).then(a.cmp(&b)));
    if let Some(w) = order.windows(2).find(|w| emb.point(w[0]).x == emb.point(w[1]).x) {
        return Err(Error::DuplicateX {
            first: w[0].min(w[1]),
            second: w[0].max(w[1]),
        });
    }
    let whole = min_obstacles_fixed(graph, emb, cfg)?;
    let m = n / k;
    let x = |i: usize| emb.point(order[i]).x.clone();
    let boundary = |i: usize| -> Option<T> {
        if i == 0 || i >= n {
            None
        } else {
            Some((x(i - 1) + x(i)).half())
        }
    };
    let mut slabs = Vec::with_capacity(m);
    for s in 0..m {
        let vertices: Vec<usize> = order[s * k..(s + 1) * k].to_vec();
        let sub_graph = graph.induced(&vertices);
        let sub_emb = emb.subsequence(&vertices);
        let minimum = min_obstacles_fixed(&sub_graph, &sub_emb, cfg)?;
        let (lo, hi) = (boundary(s * k), boundary((s + 1) * k));
        let inside = |faces: &[FaceId]| {
            faces.iter().all(|&f| {
                let face = whole.arrangement.face(f);
                face.bounded
                    && face.boundary.iter().flatten().all(|&v| {
                        let px = &whole.arrangement.nodes()[v].point.x;
                        lo.as_ref().is_none_or(|l| px > l) && hi.as_ref().is_none_or(|h| px < h)
                    })
            })
        };
        let whole_obstacles_inside = whole.faces.iter().filter(|f| inside(f)).count();
        slabs.push(SlabEntry {
            vertices,
            graph: sub_graph,
            minimum,
            whole_obstacles_inside,
        });
    }
    Ok(SlabReport {
        k,
        m,
        order,
        slabs,
        whole,
    })
}
