use super::*;
use crate::random::{default_range, random_simple_points};
use crate::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = Point<Rational>;

fn seq(v: &[(i64, i64)]) -> Embedding<Rational> {
    PointSequence::new(v.iter().map(|&(x, y)| P::from_ints(x, y)).collect()).unwrap()
}

fn convex4() -> Embedding<Rational> {
    seq(&[(0, 0), (10, 1), (9, 11), (-1, 8)])
}

fn set(obstacles: Vec<Obstacle<Rational>>) -> ObstacleSet<Rational> {
    ObstacleSet::geometric(obstacles).unwrap()
}

#[test]
fn blocking_examples() {
    let p = seq(&[(0, 0), (4, 2)]);
    assert!(!is_blocked(0, 1, &p, &set(vec![])).unwrap());
    assert!(is_blocked(0, 1, &p, &set(vec![Obstacle::Point(P::from_ints(2, 1))])).unwrap());
    assert!(!is_blocked(0, 1, &p, &set(vec![Obstacle::Point(P::from_ints(0, 0))])).unwrap());
    assert!(matches!(
        is_blocked(0, 5, &p, &set(vec![])),
        Err(Error::InvalidVertex { .. })
    ));
    assert!(matches!(
        is_blocked(1, 1, &p, &set(vec![])),
        Err(Error::SelfLoop(1))
    ));
}

#[test]
fn polygon_tangency_does_not_block() {
    let p = seq(&[(0, 0), (4, 0)]);
    let touching = Polygon::new(vec![P::from_ints(1, 0), P::from_ints(3, 0), P::from_ints(2, 3)]).unwrap();
    assert!(!is_blocked(0, 1, &p, &set(vec![Obstacle::Polygon(touching)])).unwrap());
    let crossing = Polygon::new(vec![P::from_ints(1, -1), P::from_ints(3, -1), P::from_ints(2, 3)]).unwrap();
    assert!(is_blocked(0, 1, &p, &set(vec![Obstacle::Polygon(crossing)])).unwrap());
}

#[test]
fn visibility_extremes() {
    let p = convex4();
    assert!(visibility_graph(&p, &set(vec![])).unwrap().is_complete());
    let hull = Polygon::new(vec![
        P::from_ints(-10, -10),
        P::from_ints(20, -10),
        P::from_ints(20, 20),
        P::from_ints(-10, 20),
    ])
    .unwrap();
    assert_eq!(
        visibility_graph(&p, &set(vec![Obstacle::Polygon(hull)]))
            .unwrap()
            .edge_count(),
        0
    );
    let mids: Vec<Obstacle<Rational>> = all_pairs(4)
        .map(|(u, w)| Obstacle::Point(p.point(u).midpoint(p.point(w))))
        .collect();
    assert_eq!(visibility_graph(&p, &set(mids)).unwrap().edge_count(), 0);
}

#[test]
fn verification_reports_both_directions() {
    let p = convex4();
    let complete = ObstacleRepresentation::new(Graph::complete(4), p.clone(), vec![]).unwrap();
    assert!(verify(&complete).unwrap().is_valid());
    let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let rep = ObstacleRepresentation::new(path, p.clone(), vec![]).unwrap();
    let report = verify(&rep).unwrap();
    assert_eq!(report.pairs.len(), 6);
    assert!(report
        .violations()
        .all(|(_, k)| k == ViolationKind::NonEdgeVisible));
    assert_eq!(report.violations().count(), 3);
    let blocked = ObstacleRepresentation::new(
        Graph::complete(4),
        p.clone(),
        vec![Obstacle::Point(p.point(0).midpoint(p.point(1)))],
    )
    .unwrap();
    let report = verify(&blocked).unwrap();
    let v: Vec<_> = report.violations().map(|(s, k)| (s.u, s.w, k)).collect();
    assert_eq!(v, vec![(0, 1, ViolationKind::EdgeBlocked)]);
}

#[test]
fn midpoint_construction() {
    let p = convex4();
    let k = midpoint_representation(&Graph::complete(4), &p).unwrap();
    assert!(k.obstacles.is_empty());
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
    let rep = midpoint_representation(&g, &p).unwrap();
    assert_eq!(
        rep.obstacles,
        vec![Obstacle::Point(p.point(0).midpoint(p.point(2)))]
    );
    assert!(verify(&rep).unwrap().is_valid());
    // Parallelogram: both diagonals share their midpoint.
    let square = seq(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
    let err = midpoint_representation(&Graph::cycle(4), &square).unwrap_err();
    assert!(matches!(err, Error::GeneralPosition { .. }));
}

#[test]
fn random_midpoint_representations_decompose() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let p = random_simple_points(6, default_range(6), 16, &mut rng).unwrap();
        let g = Graph::gnp(6, 0.5, &mut rng);
        let rep = midpoint_representation(&g, &p).unwrap();
        assert_eq!(rep.obstacles.len(), 15 - g.edge_count());
        assert!(verify(&rep).unwrap().is_valid());
        if rep.obstacles.is_empty() {
            continue;
        }
        let parts = per_obstacle_decomposition(&rep).unwrap();
        for (part, (u, w)) in parts.iter().zip(g.non_edges()) {
            assert_eq!(part.edge_count(), 14);
            assert!(!part.has_edge(u, w));
        }
        assert_eq!(Graph::intersection(6, &parts), g);
    }
}

#[test]
fn adding_obstacles_never_adds_visibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let p = random_simple_points(6, default_range(6), 16, &mut rng).unwrap();
    let mut obstacles = Vec::new();
    let mut previous = visibility_graph(&p, &set(vec![])).unwrap();
    for _ in 0..6 {
        let x = P::from_ints(rng.gen_range(0..1296), rng.gen_range(0..1296));
        obstacles.push(Obstacle::Point(x));
        let now = visibility_graph(&p, &set(obstacles.clone())).unwrap();
        assert!(now.is_subgraph_of(&previous));
        previous = now;
    }
}

#[test]
fn induced_subgraphs_keep_representations() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let p = random_simple_points(6, default_range(6), 16, &mut rng).unwrap();
    let g = Graph::gnp(6, 0.5, &mut rng);
    let rep = midpoint_representation(&g, &p).unwrap();
    let keep = [0, 2, 3, 5];
    let sub =
        ObstacleRepresentation::new(g.induced(&keep), p.subsequence(&keep), rep.obstacles.clone()).unwrap();
    assert!(verify(&sub).unwrap().is_valid());
}

#[test]
fn face_obstacles_need_an_arrangement() {
    assert!(matches!(
        ObstacleSet::<Rational>::geometric(vec![Obstacle::Face(0)]),
        Err(Error::MissingArrangement)
    ));
    let p = convex4();
    let g = Graph::cycle(4);
    let rep = ObstacleRepresentation::new(g.clone(), p.clone(), vec![Obstacle::Face(9)]).unwrap();
    assert!(matches!(verify(&rep), Err(Error::InvalidFace { id: 9, .. })));
}

#[test]
fn canonicalization_replaces_points_by_faces() {
    use crate::geometry::{line_intersection, DirectedLine, LineIntersection};
    let p = convex4();
    let g = Graph::cycle(4);
    let arr = Arc::new(planarize(&g, &p).unwrap());
    let d1 = DirectedLine::new(p.point(0).clone(), p.point(2).clone()).unwrap();
    let d2 = DirectedLine::new(p.point(1).clone(), p.point(3).clone()).unwrap();
    let LineIntersection::Point(x) = line_intersection(&d1, &d2) else {
        panic!()
    };
    let rep = ObstacleRepresentation::new(g.clone(), p.clone(), vec![Obstacle::Point(x)]).unwrap();
    assert!(verify(&rep).unwrap().is_valid());
    let out = canonicalize_representation(&rep, &arr).unwrap();
    assert_eq!(out.representation.obstacles, vec![Obstacle::Face(1)]);
    assert!(out.split.is_empty());
    assert!(verify(&out.representation).unwrap().is_valid());

    let faces = ObstacleRepresentation::new(g.clone(), p.clone(), vec![Obstacle::Face(1)]).unwrap();
    let same = canonicalize_representation(&faces, &arr).unwrap();
    assert_eq!(same.representation.obstacles, faces.obstacles);

    let square = Polygon::new(vec![
        P::from_ints(3, 3),
        P::from_ints(7, 3),
        P::from_ints(7, 7),
        P::from_ints(3, 7),
    ])
    .unwrap();
    let rep = ObstacleRepresentation::new(g, p, vec![Obstacle::Polygon(square)]).unwrap();
    assert!(verify(&rep).unwrap().is_valid());
    let out = canonicalize_representation(&rep, &arr).unwrap();
    assert_eq!(out.faces_per_obstacle, vec![vec![1]]);
}

#[test]
fn canonicalization_splits_vertex_clusters() {
    let p = convex4();
    let g = Graph::cycle(4);
    let arr = Arc::new(planarize(&g, &p).unwrap());
    assert_eq!(arr.face_count(), 2);
    assert_eq!(arr.cluster_vertices(&[0, 1]), vec![0, 1, 2, 3]);
    let rep =
        ObstacleRepresentation::new(g.clone(), p.clone(), vec![Obstacle::FaceCluster(vec![0, 1])]).unwrap();
    assert!(verify(&rep).unwrap().is_valid());
    let out = canonicalize_representation(&rep, &arr).unwrap();
    assert_eq!(out.split, vec![0]);
    assert_eq!(
        out.representation.obstacles,
        vec![Obstacle::Face(0), Obstacle::Face(1)]
    );
    assert!(verify(&out.representation).unwrap().is_valid());
}

#[test]
fn canonicalization_rejects_obstacles_on_vertices() {
    let p = convex4();
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let arr = Arc::new(planarize(&g, &p).unwrap());
    let rep = ObstacleRepresentation::new(
        g.clone(),
        p.clone(),
        vec![
            Obstacle::Point(p.point(0).midpoint(p.point(2))),
            Obstacle::Point(p.point(1).midpoint(p.point(3))),
            Obstacle::Point(p.point(0).midpoint(p.point(3))),
            Obstacle::Point(p.point(0).clone()),
        ],
    )
    .unwrap();
    assert!(verify(&rep).unwrap().is_valid());
    assert!(matches!(
        canonicalize_representation(&rep, &arr),
        Err(Error::NoFaceInterior(3))
    ));
}
