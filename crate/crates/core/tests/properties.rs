use obstacle_core::arrangement::{coverage_matrix, planarize};
use obstacle_core::geometry::{orientation, Point};
use obstacle_core::graph::Graph;
use obstacle_core::minimizer::hitting_set::HittingSet;
use obstacle_core::representation::{visibility_graph, Obstacle, ObstacleSet};
use obstacle_core::super_order::{
    canonical_sequence, is_simple, perturb_to_simple, pstar_sign, super_order_type, PerturbConfig,
    PointSequence,
};
use obstacle_core::{Rational, Sign};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn points(n: std::ops::RangeInclusive<usize>, range: i64) -> impl Strategy<Value = PointSequence<Rational>> {
    btree_set((0..=range, 0..=range), n).prop_map(|set| {
        PointSequence::new(set.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    })
}

fn shuffled(p: &PointSequence<Rational>, seed: u64) -> PointSequence<Rational> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.rotate_left((seed as usize) % p.len().max(1));
    p.subsequence(&idx)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orientation_is_antisymmetric(p in points(3..=3, 20)) {
        let (a, b, c) = (p.point(0), p.point(1), p.point(2));
        prop_assert_eq!(orientation(a, b, c), orientation(b, a, c).flip());
        prop_assert_eq!(orientation(a, b, c), orientation(b, c, a));
    }

    #[test]
    fn simplicity_three_ways(p in points(3..=5, 8)) {
        let sigma = super_order_type(&p);
        prop_assert_eq!(is_simple(&p), sigma.is_simple());
        prop_assert_eq!(pstar_sign(&p) == Sign::Zero, !sigma.is_simple());
    }

    #[test]
    fn translation_and_scaling_keep_sigma(p in points(3..=5, 50), dx in -30i64..30, s in 1i64..5) {
        let q = p.map(|x| Point::new(
            x.x.clone() * Rational::from_integer(s.into()) + Rational::from_integer(dx.into()),
            x.y.clone() * Rational::from_integer(s.into()),
        )).unwrap();
        prop_assert_eq!(super_order_type(&p), super_order_type(&q));
    }

    #[test]
    fn simplicity_is_restriction_consistent(p in points(4..=6, 400), seed in 0u64..10) {
        if is_simple(&p) {
            let q = shuffled(&p, seed);
            let keep: Vec<usize> = (0..q.len() - 1).collect();
            prop_assert!(is_simple(&q.subsequence(&keep)));
        }
    }

    #[test]
    fn perturbation_keeps_nonzero_types(p in points(4..=5, 6), seed in 0u64..1000) {
        let out = perturb_to_simple(&p, None, PerturbConfig::with_seed(seed)).unwrap();
        let (before, after) = (super_order_type(&p), super_order_type(&out.points));
        prop_assert!(after.is_simple());
        for (b, a) in before.values().iter().zip(after.values()) {
            if !b.is_zero() {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn arrangement_invariants(p in points(3..=6, 3000), edges in vec(any::<bool>(), 15)) {
        prop_assume!(is_simple(&p));
        let n = p.len();
        let pairs: Vec<(usize, usize)> = obstacle_core::graph::all_pairs(n).collect();
        let g = Graph::new(n, pairs.iter().zip(&edges).filter(|(_, &e)| e).map(|(&pr, _)| pr)).unwrap();
        let arr = planarize(&g, &p).unwrap();
        prop_assert!(arr.euler_holds());
        let cover = coverage_matrix(&arr).unwrap();
        prop_assert!(cover.rows.iter().all(|r| !r.is_empty()));
        let problem = HittingSet::new(arr.face_count(), &cover.rows);
        let exact = problem.exact(1_000_000).unwrap();
        prop_assert!(problem.is_cover(&exact));
        prop_assert!(exact.len() <= problem.greedy().unwrap().len());
    }

    #[test]
    fn more_obstacles_less_visibility(p in points(4..=6, 100), xs in vec((0i64..100, 0i64..100), 1..5)) {
        let all: Vec<Obstacle<Rational>> = xs.iter().map(|&(x, y)| Obstacle::Point(Point::from_ints(x, y))).collect();
        let fewer = visibility_graph(&p, &ObstacleSet::geometric(all[1..].to_vec()).unwrap()).unwrap();
        let more = visibility_graph(&p, &ObstacleSet::geometric(all).unwrap()).unwrap();
        prop_assert!(more.is_subgraph_of(&fewer));
    }
}

#[test]
fn canonical_sequence_restricts_to_smaller_n() {
    for n in 3..=6 {
        let small = canonical_sequence(n);
        let big = canonical_sequence(n + 1);
        let restricted: Vec<_> = big
            .entries()
            .iter()
            .filter(|e| e.as_array().iter().all(|&v| v < n))
            .cloned()
            .collect();
        assert_eq!(restricted, small.entries());
    }
}
