use super::*;
use crate::random::random_simple_points;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type P = Point<BigRational>;

fn seq(v: &[(i64, i64)]) -> PointSequence<BigRational> {
    PointSequence::new(v.iter().map(|&(x, y)| P::from_ints(x, y)).collect()).unwrap()
}

fn convex4() -> PointSequence<BigRational> {
    seq(&[(0, 0), (10, 1), (9, 11), (-1, 8)])
}

#[test]
fn triangle_has_two_faces() {
    let p = seq(&[(0, 0), (5, 1), (2, 7)]);
    let arr = planarize(&Graph::complete(3), &p).unwrap();
    assert_eq!(arr.nodes().len(), 3);
    assert_eq!(arr.arc_count(), 3);
    assert_eq!(arr.face_count(), 2);
    assert!(arr.euler_holds());
    assert!(arr.face(1).bounded && !arr.face(0).bounded);
    assert_eq!(arr.locate(&P::from_ints(2, 2)), Location::Face(1));
    assert_eq!(arr.locate(&P::from_ints(-3, 2)), Location::Face(OUTER_FACE));
}

#[test]
fn convex_k4_has_one_crossing_and_five_faces() {
    let arr = planarize(&Graph::complete(4), &convex4()).unwrap();
    assert_eq!(arr.crossing_count(), 1);
    assert_eq!(arr.nodes().len(), 5);
    assert_eq!(arr.arc_count(), 8);
    assert_eq!(arr.face_count(), 5);
    assert!(arr.euler_holds());
}

#[test]
fn empty_graph_has_only_the_outer_face() {
    let arr = planarize(&Graph::empty(3), &seq(&[(0, 0), (5, 1), (2, 7)])).unwrap();
    assert_eq!(arr.face_count(), 1);
    assert_eq!(arr.face(0).isolated.len(), 3);
    assert_eq!(arr.components(), 3);
    assert!(arr.euler_holds());
    assert_eq!(non_edge_face_sequence(&arr, 0, 1).unwrap(), vec![OUTER_FACE]);
}

#[test]
fn non_simple_input_is_rejected() {
    let err = planarize(&Graph::complete(3), &seq(&[(0, 0), (1, 1), (2, 2)])).unwrap_err();
    assert!(matches!(err, Error::NotSimple { .. }));
}

#[test]
fn crossing_a_single_edge_gives_two_faces() {
    let p = seq(&[(0, 0), (10, 1), (4, -5), (5, 6)]);
    let g = Graph::new(4, [(2, 3)]).unwrap();
    let arr = planarize(&g, &p).unwrap();
    assert_eq!(arr.face_count(), 1);
    let s = non_edge_face_sequence(&arr, 0, 1).unwrap();
    assert_eq!(s, vec![OUTER_FACE]);
    let intervals = arr.segment_intervals(0, 1).unwrap();
    assert_eq!(intervals.len(), 2);
    assert!(matches!(
        non_edge_face_sequence(&arr, 2, 3),
        Err(Error::IsEdge(2, 3))
    ));
}

#[test]
fn non_edge_through_a_triangle() {
    let p = seq(&[(0, 0), (20, 1), (8, -6), (9, 7), (14, -2)]);
    let g = Graph::new(5, [(2, 3), (3, 4), (2, 4)]).unwrap();
    let arr = planarize(&g, &p).unwrap();
    assert_eq!(arr.face_count(), 2);
    let s = non_edge_face_sequence(&arr, 0, 1).unwrap();
    assert_eq!(s, vec![0, 1, 0]);
}

#[test]
fn isolated_component_inside_a_face_is_a_hole() {
    let rough = seq(&[(0, 0), (20, 1), (9, 21), (8, 7), (10, 8), (9, 10)]);
    let p = crate::super_order::perturb_to_simple(&rough, None, Default::default())
        .unwrap()
        .points;
    let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let arr = planarize(&g, &p).unwrap();
    assert_eq!(arr.face_count(), 3);
    assert!(arr.euler_holds());
    let annulus = arr.locate(&P::from_ints(3, 2));
    let inner = arr.locate(&P::from_ints(9, 8));
    assert!(matches!(annulus, Location::Face(f) if f != OUTER_FACE && arr.face(f).boundary.len() == 2));
    assert!(matches!(inner, Location::Face(f) if f != OUTER_FACE && arr.face(f).boundary.len() == 1));
}

fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> (Graph, PointSequence<BigRational>) {
    let p = random_simple_points(n, 40, 20, rng).unwrap();
    (Graph::gnp(n, 0.5, rng), p)
}

#[test]
fn random_instances_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..25 {
        let n = rng.gen_range(3..=7);
        let (g, p) = random_instance(&mut rng, n);
        let arr = planarize(&g, &p).unwrap();
        assert!(arr.euler_holds());
        for f in arr.faces() {
            assert_eq!(arr.locate(&f.witness), Location::Face(f.id));
        }
        let m = coverage_matrix(&arr).unwrap();
        for (r, &(u, w)) in m.non_edges.iter().enumerate() {
            let intervals = arr.segment_intervals(u, w).unwrap();
            assert_eq!(
                intervals.first().unwrap().start,
                BigRational::from_integer(0.into())
            );
            assert_eq!(intervals.last().unwrap().end, BigRational::from_integer(1.into()));
            for pair in intervals.windows(2) {
                assert_eq!(pair[0].end, pair[1].start);
            }
            for i in &intervals {
                let mid = p
                    .point(u)
                    .lerp(p.point(w), &(i.start.clone() + i.end.clone()).half());
                assert_eq!(arr.locate(&mid), Location::Face(i.face));
            }
            let mut faces: Vec<usize> = intervals.iter().map(|i| i.face).collect();
            faces.sort_unstable();
            faces.dedup();
            assert_eq!(m.rows[r], faces);
            assert!(!m.rows[r].is_empty());
        }
    }
}

#[test]
fn probes_land_in_one_face() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (g, p) = random_instance(&mut rng, 6);
    let arr = planarize(&g, &p).unwrap();
    for _ in 0..200 {
        let q = P::new(
            BigRational::new(rng.gen_range(-100..700).into(), 10.into()),
            BigRational::new(rng.gen_range(-100..700).into(), 10.into()),
        );
        if let Location::Face(f) = arr.locate(&q) {
            let inside: Vec<usize> = arr
                .faces()
                .iter()
                .filter(|face| face.bounded)
                .filter(|face| {
                    let outer = winding_number(&arr.walk_points(&face.boundary[0]), &q) != 0;
                    let in_hole = face.boundary[1..]
                        .iter()
                        .any(|h| winding_number(&arr.walk_points(h), &q) != 0);
                    outer && !in_hole
                })
                .map(|face| face.id)
                .collect();
            if f == OUTER_FACE {
                assert!(inside.is_empty());
            } else {
                assert_eq!(inside, vec![f]);
            }
        }
    }
}

#[test]
fn face_ids_are_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (g, p) = random_instance(&mut rng, 6);
    let a = planarize(&g, &p).unwrap();
    let b = planarize(&g, &p).unwrap();
    assert_eq!(a.faces(), b.faces());
}
