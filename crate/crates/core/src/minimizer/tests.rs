use super::*;
use crate::random::{default_range, random_simple_points};
use crate::representation::{per_obstacle_decomposition, verify};
use crate::super_order::PointSequence;
use crate::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = crate::geometry::Point<Rational>;

fn seq(v: &[(i64, i64)]) -> PointSequence<Rational> {
    PointSequence::new(v.iter().map(|&(x, y)| P::from_ints(x, y)).collect()).unwrap()
}

fn convex4() -> PointSequence<Rational> {
    seq(&[(0, 0), (10, 1), (9, 11), (-1, 8)])
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> (Graph, Embedding<Rational>) {
    let p = random_simple_points(n, default_range(n), 16, rng).unwrap();
    (Graph::gnp(n, 0.5, rng), p)
}

#[test]
fn complete_graph_needs_nothing() {
    let r = min_obstacles_fixed(&Graph::complete(4), &convex4(), MinimizeConfig::default()).unwrap();
    assert_eq!(r.count, 0);
    assert!(verify(&r.certificate).unwrap().is_valid());
}

#[test]
fn one_missing_edge_needs_one_face() {
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
    let r = min_obstacles_fixed(&g, &convex4(), MinimizeConfig::default()).unwrap();
    assert_eq!(r.count, 1);
    assert!(verify(&r.certificate).unwrap().is_valid());
    let greedy = greedy_fixed(&g, &convex4()).unwrap();
    assert_eq!(greedy.count, 1);
}

#[test]
fn non_simple_embedding_is_rejected() {
    let p = seq(&[(0, 0), (1, 1), (2, 2), (5, 0)]);
    let err = min_obstacles_fixed(&Graph::empty(4), &p, MinimizeConfig::default()).unwrap_err();
    assert!(matches!(err, Error::NotSimple { .. }));
}

#[test]
fn exact_matches_brute_force_and_bounds_greedy() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..12 {
        let n = rng.gen_range(3..=6);
        let (g, p) = random_instance(&mut rng, n);
        let exact = min_obstacles_fixed(&g, &p, MinimizeConfig::default()).unwrap();
        assert_eq!(exact.face_ids(), brute_force_fixed(&g, &p).unwrap());
        let clusters = min_obstacles_fixed(&g, &p, MinimizeConfig::with_mode(Mode::VertexClusters)).unwrap();
        assert!(clusters.count <= exact.count);
        assert!(verify(&clusters.certificate).unwrap().is_valid());
        let greedy = greedy_fixed(&g, &p).unwrap();
        assert!(greedy.count >= exact.count);
        let rows = g.non_edges().len().max(1) as f64;
        assert!(greedy.count as f64 <= exact.count as f64 * (1.0 + rows.ln()) + 1e-9);
        if exact.count > 0 {
            let parts = per_obstacle_decomposition(&exact.certificate).unwrap();
            assert_eq!(Graph::intersection(n, &parts), g);
        }
    }
}

#[test]
fn search_finds_one_obstacle_for_the_four_cycle() {
    let cfg = SearchConfig {
        budget: 200,
        seed: 1,
        ..Default::default()
    };
    let out = obstacle_number_search(&Graph::cycle(4), cfg).unwrap();
    assert_eq!(out.best.count, 1);
    assert!(out.history.windows(2).all(|w| w[1] <= w[0]));
    assert!(verify(&out.best.certificate).unwrap().is_valid());
    let k = obstacle_number_search(&Graph::complete(4), cfg).unwrap();
    assert_eq!((k.best.count, k.samples), (0, 1));
}

#[test]
fn search_is_deterministic() {
    let cfg = SearchConfig {
        budget: 5,
        seed: 9,
        ..Default::default()
    };
    let g = Graph::grid(2, 3);
    let a = obstacle_number_search(&g, cfg).unwrap();
    let b = obstacle_number_search(&g, cfg).unwrap();
    assert_eq!(a.embedding, b.embedding);
    assert_eq!(a.best.faces, b.best.faces);
    assert_eq!(a.history, b.history);
}

#[test]
fn slab_minima_never_exceed_the_whole() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (g, p) = random_instance(&mut rng, 8);
    let report = slab_report(&g, &p, 4, MinimizeConfig::default()).unwrap();
    assert_eq!(report.m, 2);
    for s in &report.slabs {
        assert_eq!(s.vertices.len(), 4);
        assert!(s.minimum.count <= report.whole.count);
    }
    let single = slab_report(&g, &p, 8, MinimizeConfig::default()).unwrap();
    assert_eq!(single.slabs.len(), 1);
    assert_eq!(single.slabs[0].minimum.count, single.whole.count);
    assert!(matches!(
        slab_report(&g, &p, 0, MinimizeConfig::default()),
        Err(Error::SlabSize { .. })
    ));
}

#[test]
fn duplicate_x_is_rejected_by_slabs() {
    let p = seq(&[(0, 0), (3, 1), (3, 7), (9, 4)]);
    let err = slab_report(&Graph::complete(4), &p, 2, MinimizeConfig::default());
    assert!(matches!(err, Err(Error::DuplicateX { first: 1, second: 2 })));
}
