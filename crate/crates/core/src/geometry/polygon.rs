use super::{
    closed_segment_contains, segment_crossing_params, signed_area2, winding_number, Point, SegmentHit,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A simple polygon, stored counter-clockwise. Treated as an open set.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> Polygon<T> {
    /// Validates simplicity exactly; clockwise input is reversed.
    pub fn new(mut vertices: Vec<Point<T>>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::InvalidPolygon(format!("{m} vertices")));
        }
        for i in 0..m {
            for j in (i + 1)..m {
                if vertices[i] == vertices[j] {
                    return Err(Error::InvalidPolygon(format!("repeated vertex {}", i + 1)));
                }
            }
        }
        let edge = |i: usize| (&vertices[i], &vertices[(i + 1) % m]);
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = edge(i);
                let (c, d) = edge(j);
                let hit = segment_crossing_params(a, b, c, d);
                let ok = if j == i + 1 {
                    hit == SegmentHit::Point(T::one())
                } else if i == 0 && j == m - 1 {
                    hit == SegmentHit::Point(T::zero())
                } else {
                    hit == SegmentHit::Disjoint
                };
                if !ok {
                    return Err(Error::InvalidPolygon(format!(
                        "edges {} and {} intersect",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let area = signed_area2(&vertices);
        if area.is_zero() {
            return Err(Error::InvalidPolygon("zero area".into()));
        }
        if area.is_negative() {
            vertices.reverse();
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
        let m = self.vertices.len();
        (0..m).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % m]))
    }

    pub fn on_boundary(&self, p: &Point<T>) -> bool {
        self.edges().any(|(a, b)| closed_segment_contains(a, b, p))
    }

    /// Strictly inside (the polygon is open).
    pub fn contains(&self, p: &Point<T>) -> bool {
        !self.on_boundary(p) && winding_number(&self.vertices, p) != 0
    }

    /// Whether the open segment `ab` meets the open interior.
    pub fn open_segment_meets_interior(&self, a: &Point<T>, b: &Point<T>) -> bool {
        if a == b {
            return false;
        }
        let mut ts = vec![T::zero(), T::one()];
        for (c, d) in self.edges() {
            match segment_crossing_params(a, b, c, d) {
                SegmentHit::Disjoint => {}
                SegmentHit::Point(t) => ts.push(t),
                SegmentHit::Overlap(t0, t1) => {
                    ts.push(t0);
                    ts.push(t1);
                }
            }
        }
        ts.sort_by(|x, y| x.cmp_total(y));
        ts.dedup();
        ts.windows(2).any(|w| {
            let mid = a.lerp(b, &(w[0].clone() + w[1].clone()).half());
            self.contains(&mid)
        })
    }

    /// Whether the closed polygon meets the closed segment `ab`.
    pub fn touches_closed_segment(&self, a: &Point<T>, b: &Point<T>) -> bool {
        self.contains(a)
            || self
                .edges()
                .any(|(c, d)| segment_crossing_params(a, b, c, d) != SegmentHit::Disjoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Signed;

    fn p(x: i64, y: i64) -> Point<BigRational> {
        Point::from_ints(x, y)
    }

    fn square() -> Polygon<BigRational> {
        Polygon::new(vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)]).unwrap()
    }

    #[test]
    fn rejects_non_simple() {
        let bowtie = Polygon::new(vec![p(0, 0), p(2, 2), p(2, 0), p(0, 2)]);
        assert!(matches!(bowtie, Err(Error::InvalidPolygon(_))));
        assert!(Polygon::new(vec![p(0, 0), p(1, 1), p(2, 2)]).is_err());
        assert!(Polygon::new(vec![p(0, 0), p(1, 1)]).is_err());
    }

    #[test]
    fn clockwise_is_normalized() {
        let cw = Polygon::new(vec![p(0, 0), p(0, 4), p(4, 4), p(4, 0)]).unwrap();
        assert!(signed_area2(cw.vertices()).is_positive());
    }

    #[test]
    fn open_interior_semantics() {
        let sq = square();
        assert!(sq.contains(&p(1, 1)));
        assert!(!sq.contains(&p(0, 1)));
        assert!(sq.open_segment_meets_interior(&p(-1, 2), &p(5, 2)));
        // Runs along the boundary only: tangency does not block.
        assert!(!sq.open_segment_meets_interior(&p(-1, 0), &p(5, 0)));
        // Touches a corner only.
        assert!(!sq.open_segment_meets_interior(&p(-1, 1), &p(1, -1)));
        assert!(!sq.open_segment_meets_interior(&p(5, 5), &p(6, 7)));
        assert!(sq.touches_closed_segment(&p(-1, 1), &p(1, -1)));
        assert!(!sq.touches_closed_segment(&p(5, 5), &p(6, 7)));
        assert!(sq.touches_closed_segment(&p(1, 1), &p(2, 2)));
    }
}
