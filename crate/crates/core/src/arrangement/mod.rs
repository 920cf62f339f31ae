//! Planarization of a drawn graph, face enumeration and point location.

mod coverage;

pub use coverage::{coverage_matrix, CoverageMatrix};

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, closed_segment_contains, line_intersection, orientation, segment_crossing_params,
    segments_cross_properly, signed_area2, winding_number, DirectedLine, LineIntersection, Point, SegmentHit,
};
use crate::graph::Graph;
use crate::scalar::{Scalar, Sign};
use crate::super_order::{degenerate_count, is_simple, PointSequence};

pub type FaceId = usize;

/// The unbounded face.
pub const OUTER_FACE: FaceId = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// An original vertex.
    Vertex(usize),
    /// The crossing of two drawn edges.
    Crossing((usize, usize), (usize, usize)),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node<T> {
    pub point: Point<T>,
    pub kind: NodeKind,
}

/// A piece of the drawn edge `edge` between consecutive nodes, oriented from
/// the smaller to the larger vertex of the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub edge: (usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Face<T> {
    pub id: FaceId,
    pub bounded: bool,
    /// Closed node walks with the face on their left. For a bounded face the
    /// first walk is the outer boundary; the rest surround holes.
    pub boundary: Vec<Vec<usize>>,
    /// Degree-0 nodes lying inside the face.
    pub isolated: Vec<usize>,
    /// A point strictly inside the face.
    pub witness: Point<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Node(usize),
    Arc(usize),
    Face(FaceId),
}

/// One maximal open piece of a non-edge segment inside a face, with its
/// parameter range along `φ(u) → φ(w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceInterval<T> {
    pub face: FaceId,
    pub start: T,
    pub end: T,
}

#[derive(Clone, Debug)]
pub struct Arrangement<T> {
    graph: Graph,
    points: Vec<Point<T>>,
    nodes: Vec<Node<T>>,
    arcs: Vec<Arc>,
    /// Face to the left of half-edge `h`; `2a` runs `from → to` along arc
    /// `a`, `2a + 1` the other way.
    half_face: Vec<FaceId>,
    faces: Vec<Face<T>>,
    components: usize,
    min_x: T,
}

struct Cycle {
    halves: Vec<usize>,
    area2_positive: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Adds a node at every crossing of two drawn edges and enumerates faces.
pub fn planarize<T: Scalar>(graph: &Graph, emb: &PointSequence<T>) -> Result<Arrangement<T>> {
    if graph.n() != emb.len() {
        return Err(Error::SizeMismatch {
            points: emb.len(),
            vertices: graph.n(),
        });
    }
    if !is_simple(emb) {
        return Err(Error::NotSimple {
            degenerate: degenerate_count(emb),
        });
    }
    let points = emb.points().to_vec();
    let mut nodes: Vec<Node<T>> = points
        .iter()
        .enumerate()
        .map(|(i, p)| Node {
            point: p.clone(),
            kind: NodeKind::Vertex(i),
        })
        .collect();

    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let mut on_edge: Vec<Vec<(T, usize)>> = vec![Vec::new(); edges.len()];
    for i in 0..edges.len() {
        let (a, b) = (&points[edges[i].0], &points[edges[i].1]);
        for j in (i + 1)..edges.len() {
            let (c, d) = (&points[edges[j].0], &points[edges[j].1]);
            if !segments_cross_properly(a, b, c, d) {
                continue;
            }
            let la = DirectedLine::new(a.clone(), b.clone())?;
            let lc = DirectedLine::new(c.clone(), d.clone())?;
            let x = match line_intersection(&la, &lc) {
                LineIntersection::Point(x) => x,
                _ => unreachable!("properly crossing segments meet in one point"),
            };
            let id = nodes.len();
            on_edge[i].push((la.param_of(&x), id));
            on_edge[j].push((lc.param_of(&x), id));
            nodes.push(Node {
                point: x,
                kind: NodeKind::Crossing(edges[i], edges[j]),
            });
        }
    }

    let mut arcs = Vec::new();
    for (k, &(u, w)) in edges.iter().enumerate() {
        let mut seq = std::mem::take(&mut on_edge[k]);
        seq.sort_by(|x, y| x.0.cmp_total(&y.0));
        let chain: Vec<usize> = std::iter::once(u)
            .chain(seq.into_iter().map(|(_, id)| id))
            .chain(std::iter::once(w))
            .collect();
        for pair in chain.windows(2) {
            arcs.push(Arc {
                from: pair[0],
                to: pair[1],
                edge: (u, w),
            });
        }
    }

    let origin = |h: usize| {
        if h.is_multiple_of(2) {
            arcs[h / 2].from
        } else {
            arcs[h / 2].to
        }
    };
    let dest = |h: usize| origin(h ^ 1);
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for h in 0..2 * arcs.len() {
        outgoing[origin(h)].push(h);
    }
    for (v, out) in outgoing.iter_mut().enumerate() {
        let p = &nodes[v].point;
        out.sort_by(|&g, &h| angle_cmp(&nodes[dest(g)].point.sub(p), &nodes[dest(h)].point.sub(p)));
    }
    let mut position = vec![0usize; 2 * arcs.len()];
    for out in &outgoing {
        for (i, &h) in out.iter().enumerate() {
            position[h] = i;
        }
    }
    // Turning as far right as possible keeps the face on the left.
    let next = |h: usize| {
        let v = dest(h);
        let out = &outgoing[v];
        let i = position[h ^ 1];
        out[(i + out.len() - 1) % out.len()]
    };

    let mut cycle_of = vec![usize::MAX; 2 * arcs.len()];
    let mut cycles: Vec<Cycle> = Vec::new();
    for start in 0..2 * arcs.len() {
        if cycle_of[start] != usize::MAX {
            continue;
        }
        let mut halves = Vec::new();
        let mut h = start;
        loop {
            cycle_of[h] = cycles.len();
            halves.push(h);
            h = next(h);
            if h == start {
                break;
            }
        }
        let walk: Vec<Point<T>> = halves.iter().map(|&h| nodes[origin(h)].point.clone()).collect();
        let area2_positive = signed_area2(&walk).is_positive();
        cycles.push(Cycle {
            halves,
            area2_positive,
        });
    }

    let mut uf = UnionFind::new(nodes.len());
    for a in &arcs {
        uf.union(a.from, a.to);
    }
    let roots: BTreeSet<usize> = (0..nodes.len()).map(|v| uf.find(v)).collect();
    let components = roots.len();

    let walk_points =
        |c: &Cycle| -> Vec<Point<T>> { c.halves.iter().map(|&h| nodes[origin(h)].point.clone()).collect() };
    let bounded: Vec<usize> = (0..cycles.len()).filter(|&c| cycles[c].area2_positive).collect();
    let areas: Vec<T> = cycles.iter().map(|c| signed_area2(&walk_points(c))).collect();

    // Innermost bounded cycle of another component containing node `v`.
    let enclosing = |v: usize, uf: &mut UnionFind| -> Option<usize> {
        let root = uf.find(v);
        let mut best: Option<usize> = None;
        for &c in &bounded {
            if uf.find(origin(cycles[c].halves[0])) == root {
                continue;
            }
            if winding_number(&walk_points(&cycles[c]), &nodes[v].point) == 0 {
                continue;
            }
            if best.is_none_or(|b| areas[c] < areas[b]) {
                best = Some(c);
            }
        }
        best
    };

    // Canonical order of bounded faces.
    let rotated = |c: &Cycle| -> Vec<usize> {
        let walk: Vec<usize> = c.halves.iter().map(|&h| origin(h)).collect();
        let lo = (0..walk.len())
            .min_by(|&i, &j| {
                nodes[walk[i]]
                    .point
                    .lex_cmp(&nodes[walk[j]].point)
                    .then(i.cmp(&j))
            })
            .unwrap_or(0);
        walk[lo..].iter().chain(walk[..lo].iter()).copied().collect()
    };
    let mut order: Vec<(usize, Vec<usize>)> = bounded.iter().map(|&c| (c, rotated(&cycles[c]))).collect();
    order.sort_by(|(_, a), (_, b)| {
        nodes[a[0]]
            .point
            .lex_cmp(&nodes[b[0]].point)
            .then(a.len().cmp(&b.len()))
            .then_with(|| {
                for (x, y) in a.iter().zip(b.iter()) {
                    let o = nodes[*x].point.lex_cmp(&nodes[*y].point);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    });
    let mut face_of_cycle = vec![usize::MAX; cycles.len()];
    let mut faces: Vec<Face<T>> = Vec::with_capacity(order.len() + 1);
    let min_x = nodes
        .iter()
        .map(|n| n.point.x.clone())
        .min_by(|a, b| a.cmp_total(b))
        .unwrap_or_else(T::zero);
    faces.push(Face {
        id: OUTER_FACE,
        bounded: false,
        boundary: Vec::new(),
        isolated: Vec::new(),
        witness: Point::new(min_x.clone() - T::one(), T::zero()),
    });
    for (c, walk) in order {
        face_of_cycle[c] = faces.len();
        faces.push(Face {
            id: faces.len(),
            bounded: true,
            boundary: vec![walk],
            isolated: Vec::new(),
            witness: Point::new(T::zero(), T::zero()),
        });
    }

    // Each component's outer walks and isolated nodes go to the enclosing face.
    for c in 0..cycles.len() {
        if cycles[c].area2_positive {
            continue;
        }
        let v = origin(cycles[c].halves[0]);
        let face = enclosing(v, &mut uf).map_or(OUTER_FACE, |e| face_of_cycle[e]);
        face_of_cycle[c] = face;
        faces[face].boundary.push(rotated(&cycles[c]));
    }
    for (v, out) in outgoing.iter().enumerate() {
        if out.is_empty() {
            let face = enclosing(v, &mut uf).map_or(OUTER_FACE, |e| face_of_cycle[e]);
            faces[face].isolated.push(v);
        }
    }
    for f in faces.iter_mut() {
        let skip = f.bounded as usize;
        f.boundary[skip..].sort_by(|a, b| nodes[a[0]].point.lex_cmp(&nodes[b[0]].point));
    }

    let half_face: Vec<FaceId> = (0..2 * arcs.len()).map(|h| face_of_cycle[cycle_of[h]]).collect();
    let mut arr = Arrangement {
        graph: graph.clone(),
        points,
        nodes,
        arcs,
        half_face,
        faces,
        components,
        min_x,
    };
    arr.place_witnesses();
    Ok(arr)
}

impl<T: Scalar> Arrangement<T> {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn nodes(&self) -> &[Node<T>] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn faces(&self) -> &[Face<T>] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face<T> {
        &self.faces[id]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.len() - self.points.len()
    }

    /// Connected components of the planarized drawing, isolated nodes included.
    pub fn components(&self) -> usize {
        self.components
    }

    /// `nodes − arcs + faces = 1 + components`.
    pub fn euler_holds(&self) -> bool {
        self.nodes.len() + self.faces.len() == self.arcs.len() + 1 + self.components
    }

    pub fn arc_points(&self, arc: usize) -> (&Point<T>, &Point<T>) {
        let a = &self.arcs[arc];
        (&self.nodes[a.from].point, &self.nodes[a.to].point)
    }

    /// Faces left of `from → to` and left of `to → from`.
    pub fn arc_faces(&self, arc: usize) -> (FaceId, FaceId) {
        (self.half_face[2 * arc], self.half_face[2 * arc + 1])
    }

    /// The face on `p`'s side of an arc, for `p` off the arc's line.
    fn side_face(&self, arc: usize, p: &Point<T>) -> FaceId {
        let (a, b) = self.arc_points(arc);
        let (left, right) = self.arc_faces(arc);
        if orientation(a, b, p) == Sign::Positive {
            left
        } else {
            right
        }
    }

    /// Exact point location by walking in from a point left of the drawing.
    pub fn locate(&self, p: &Point<T>) -> Location {
        if let Some(v) = self.nodes.iter().position(|n| n.point == *p) {
            return Location::Node(v);
        }
        if let Some(a) = (0..self.arcs.len()).find(|&a| {
            let (x, y) = self.arc_points(a);
            closed_segment_contains(x, y, p)
        }) {
            return Location::Arc(a);
        }
        let start = self.walk_start(p);
        let mut best: Option<(T, usize)> = None;
        for a in 0..self.arcs.len() {
            let (x, y) = self.arc_points(a);
            if let SegmentHit::Point(t) = segment_crossing_params(&start, p, x, y) {
                if best.as_ref().is_none_or(|(bt, _)| t > *bt) {
                    best = Some((t, a));
                }
            }
        }
        Location::Face(best.map_or(OUTER_FACE, |(_, a)| self.side_face(a, p)))
    }

    /// A point left of every node such that the segment to `p` avoids all nodes.
    fn walk_start(&self, p: &Point<T>) -> Point<T> {
        let x = (if p.x < self.min_x {
            p.x.clone()
        } else {
            self.min_x.clone()
        }) - T::one();
        let mut k: i64 = 0;
        loop {
            let dy = T::from_i64((k + 1) / 2 * if k % 2 == 0 { 1 } else { -1 }).unwrap_or_else(T::zero);
            let w = Point::new(x.clone(), p.y.clone() + dy);
            if !self
                .nodes
                .iter()
                .any(|n| closed_segment_contains(&w, p, &n.point))
            {
                return w;
            }
            k += 1;
        }
    }

    fn place_witnesses(&mut self) {
        for id in 1..self.faces.len() {
            let walk = &self.faces[id].boundary[0];
            let (a, b) = (&self.nodes[walk[0]].point, &self.nodes[walk[1]].point);
            let mid = a.midpoint(b);
            let d = b.sub(a);
            let normal = Point::new(-d.y.clone(), d.x.clone());
            let mut scale = T::one();
            let witness = loop {
                let q = mid.add(&normal.scale(&scale));
                if self.locate(&q) == Location::Face(id) {
                    break q;
                }
                scale = scale.half();
            };
            self.faces[id].witness = witness;
        }
    }

    /// Original vertices on the boundary of, or isolated inside, face `f`.
    pub fn face_vertices(&self, f: FaceId) -> Vec<usize> {
        let face = &self.faces[f];
        let mut out: BTreeSet<usize> = BTreeSet::new();
        for &v in face.boundary.iter().flatten().chain(face.isolated.iter()) {
            if let NodeKind::Vertex(i) = self.nodes[v].kind {
                out.insert(i);
            }
        }
        out.into_iter().collect()
    }

    /// Original vertices shared by at least two faces of the cluster.
    pub fn cluster_vertices(&self, ids: &[FaceId]) -> Vec<usize> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut shared: BTreeSet<usize> = BTreeSet::new();
        let distinct: BTreeSet<FaceId> = ids.iter().copied().collect();
        for f in distinct {
            for v in self.face_vertices(f) {
                if !seen.insert(v) {
                    shared.insert(v);
                }
            }
        }
        shared.into_iter().collect()
    }

    /// Faces grouped into maximal clusters connected through shared vertices.
    pub fn vertex_adjacent_groups(&self) -> Vec<Vec<FaceId>> {
        let mut uf = UnionFind::new(self.faces.len());
        let mut owner: Vec<Option<FaceId>> = vec![None; self.points.len()];
        for f in 0..self.faces.len() {
            for v in self.face_vertices(f) {
                match owner[v] {
                    Some(g) => uf.union(g, f),
                    None => owner[v] = Some(f),
                }
            }
        }
        let mut groups: Vec<Vec<FaceId>> = Vec::new();
        let mut index = vec![usize::MAX; self.faces.len()];
        for f in 0..self.faces.len() {
            let r = uf.find(f);
            if index[r] == usize::MAX {
                index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index[r]].push(f);
        }
        groups
    }

    /// Whether faces `f` and `g` share an original vertex.
    pub fn faces_share_vertex(&self, f: FaceId, g: FaceId) -> bool {
        let a = self.face_vertices(f);
        self.face_vertices(g).iter().any(|v| a.contains(v))
    }

    /// Maximal open pieces of `φ(u)φ(w)` inside faces, in order from `u`.
    /// Empty when `uw` is a drawn edge.
    pub fn segment_intervals(&self, u: usize, w: usize) -> Result<Vec<FaceInterval<T>>> {
        for v in [u, w] {
            self.graph.check_vertex(v)?;
        }
        if u == w {
            return Err(Error::SelfLoop(u));
        }
        if self.graph.has_edge(u, w) {
            return Ok(Vec::new());
        }
        let (a, b) = (&self.points[u], &self.points[w]);
        let mut hits: Vec<(T, usize)> = Vec::new();
        for arc in 0..self.arcs.len() {
            let (x, y) = self.arc_points(arc);
            match segment_crossing_params(a, b, x, y) {
                SegmentHit::Disjoint => {}
                SegmentHit::Point(t) => {
                    if !t.is_zero() && t != T::one() {
                        if orientation(x, y, a).is_zero() || orientation(x, y, b).is_zero() {
                            return Err(Error::NotSimple { degenerate: 0 });
                        }
                        hits.push((t, arc));
                    }
                }
                SegmentHit::Overlap(..) => return Err(Error::NotSimple { degenerate: 0 }),
            }
        }
        hits.sort_by(|x, y| x.0.cmp_total(&y.0));
        if hits.windows(2).any(|p| p[0].0 == p[1].0) {
            return Err(Error::NotSimple { degenerate: 0 });
        }
        let first_end = hits.first().map_or(T::one(), |h| h.0.clone());
        let first_mid = a.lerp(b, &first_end.half());
        let mut face = match self.locate(&first_mid) {
            Location::Face(f) => f,
            _ => return Err(Error::NotSimple { degenerate: 0 }),
        };
        let mut out = Vec::with_capacity(hits.len() + 1);
        let mut start = T::zero();
        for (t, arc) in hits {
            out.push(FaceInterval {
                face,
                start: start.clone(),
                end: t.clone(),
            });
            face = self.side_face(arc, b);
            start = t;
        }
        out.push(FaceInterval {
            face,
            start,
            end: T::one(),
        });
        Ok(out)
    }

    /// Faces met by the open segment `φ(u)φ(w)`, in order, consecutive
    /// repeats merged. Empty when `uw` is a drawn edge.
    pub fn segment_faces(&self, u: usize, w: usize) -> Result<Vec<FaceId>> {
        let mut faces: Vec<FaceId> = self
            .segment_intervals(u, w)?
            .into_iter()
            .map(|i| i.face)
            .collect();
        faces.dedup();
        Ok(faces)
    }

    /// Face polygon of a closed node walk.
    pub fn walk_points(&self, walk: &[usize]) -> Vec<Point<T>> {
        walk.iter().map(|&v| self.nodes[v].point.clone()).collect()
    }
}

/// Face sequence of a non-edge.
pub fn non_edge_face_sequence<T: Scalar>(arr: &Arrangement<T>, u: usize, w: usize) -> Result<Vec<FaceId>> {
    if arr.graph.has_edge(u, w) {
        return Err(Error::IsEdge(u.min(w), u.max(w)));
    }
    arr.segment_faces(u, w)
}

#[cfg(test)]
mod tests;
