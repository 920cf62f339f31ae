//! Exact planar primitives.

mod polygon;
mod segment;
mod sextuple;

pub use polygon::Polygon;
pub use segment::{
    closed_segment_contains, open_segment_contains, segment_crossing_params, segments_cross_properly,
    SegmentHit,
};
pub use sextuple::{concurrency_poly, is_admissible, is_degenerate, parallel_poly, sextuple_type, Sextuple};
pub(crate) use sextuple::{det3 as det3_of, scaled_row as scaled_row_of};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: T::from_i64(x).expect("integer coordinate"),
            y: T::from_i64(y).expect("integer coordinate"),
        }
    }

    /// Componentwise `self - other`, read as a vector.
    pub fn sub(&self, other: &Self) -> Self {
        Point::new(self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Point::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Point::new(self.x.clone() * s.clone(), self.y.clone() * s.clone())
    }

    /// `self + t * (to - self)`.
    pub fn lerp(&self, to: &Self, t: &T) -> Self {
        self.add(&to.sub(self).scale(t))
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        Point::new(
            (self.x.clone() + other.x.clone()).half(),
            (self.y.clone() + other.y.clone()).half(),
        )
    }

    /// Lexicographic (x, then y) comparison.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.x
            .cmp_total(&other.x)
            .then_with(|| self.y.cmp_total(&other.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64_lossy(), self.y.to_f64_lossy())
    }
}

/// z-component of the cross product of two vectors.
pub fn cross<T: Scalar>(u: &Point<T>, v: &Point<T>) -> T {
    u.x.clone() * v.y.clone() - u.y.clone() * v.x.clone()
}

pub fn dot<T: Scalar>(u: &Point<T>, v: &Point<T>) -> T {
    u.x.clone() * v.x.clone() + u.y.clone() * v.y.clone()
}

/// Sign of `(q - p) x (r - p)`: `Positive` for a counter-clockwise turn.
pub fn orientation<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Sign {
    cross(&q.sub(p), &r.sub(p)).sign()
}

/// Angular order of direction vectors, counter-clockwise starting at the
/// positive x-axis. Zero vectors are not allowed.
pub fn angle_cmp<T: Scalar>(u: &Point<T>, v: &Point<T>) -> Ordering {
    fn upper<T: Scalar>(p: &Point<T>) -> bool {
        p.y.is_positive() || (p.y.is_zero() && p.x.is_positive())
    }
    match (upper(u), upper(v)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => match cross(u, v).sign() {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => Ordering::Equal,
        },
    }
}

/// The carrier line of two points, directed from `p1` towards `p2`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectedLine<T> {
    p1: Point<T>,
    p2: Point<T>,
}

impl<T: Scalar> DirectedLine<T> {
    pub fn new(p1: Point<T>, p2: Point<T>) -> Result<Self> {
        if p1 == p2 {
            return Err(Error::CoincidentPoints);
        }
        Ok(DirectedLine { p1, p2 })
    }

    pub fn p1(&self) -> &Point<T> {
        &self.p1
    }

    pub fn p2(&self) -> &Point<T> {
        &self.p2
    }

    pub fn direction(&self) -> Point<T> {
        self.p2.sub(&self.p1)
    }

    pub fn is_vertical(&self) -> bool {
        self.p1.x == self.p2.x
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        orientation(&self.p1, &self.p2, p).is_zero()
    }

    /// Parameter `t` with `p = p1 + t (p2 - p1)`, for `p` on the line.
    pub fn param_of(&self, p: &Point<T>) -> T {
        let d = self.direction();
        dot(&p.sub(&self.p1), &d) / dot(&d, &d)
    }

    pub fn at(&self, t: &T) -> Point<T> {
        self.p1.lerp(&self.p2, t)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LineIntersection<T> {
    Point(Point<T>),
    Parallel,
    Identical,
}

pub fn line_intersection<T: Scalar>(l1: &DirectedLine<T>, l2: &DirectedLine<T>) -> LineIntersection<T> {
    let d1 = l1.direction();
    let d2 = l2.direction();
    let denom = cross(&d1, &d2);
    let offset = l2.p1.sub(&l1.p1);
    if denom.is_zero() {
        if cross(&d1, &offset).is_zero() {
            LineIntersection::Identical
        } else {
            LineIntersection::Parallel
        }
    } else {
        let t = cross(&offset, &d2) / denom;
        LineIntersection::Point(l1.at(&t))
    }
}

/// Twice the signed area of a closed polygonal walk.
pub fn signed_area2<T: Scalar>(walk: &[Point<T>]) -> T {
    let mut acc = T::zero();
    for (i, p) in walk.iter().enumerate() {
        let q = &walk[(i + 1) % walk.len()];
        acc = acc + cross(p, q);
    }
    acc
}

/// Winding number of a closed walk around `p`; `p` must not lie on the walk.
pub fn winding_number<T: Scalar>(walk: &[Point<T>], p: &Point<T>) -> i64 {
    let mut w = 0;
    for (i, a) in walk.iter().enumerate() {
        let b = &walk[(i + 1) % walk.len()];
        if a.y <= p.y {
            if b.y > p.y && orientation(a, b, p) == Sign::Positive {
                w += 1;
            }
        } else if b.y <= p.y && orientation(a, b, p) == Sign::Negative {
            w -= 1;
        }
    }
    w
}
