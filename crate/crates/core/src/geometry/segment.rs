use super::{cross, dot, orientation, Point};
use crate::scalar::{Scalar, Sign};

/// How the closed segment `ab` meets the closed segment `cd`, in parameters
/// `t` along `ab` (`a + t (b - a)`).
#[derive(Clone, Debug, PartialEq)]
pub enum SegmentHit<T> {
    Disjoint,
    Point(T),
    Overlap(T, T),
}

/// `p` lies strictly between `a` and `b` on the segment.
pub fn open_segment_contains<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    p != a && p != b && closed_segment_contains(a, b, p)
}

pub fn closed_segment_contains<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    if !orientation(a, b, p).is_zero() {
        return false;
    }
    let within = |lo: &T, hi: &T, v: &T| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

/// Interiors of `ab` and `cd` cross at a single point that is interior to both.
pub fn segments_cross_properly<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>, d: &Point<T>) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    o1 != Sign::Zero && o3 != Sign::Zero && o1 == o2.flip() && o3 == o4.flip()
}

/// Intersection of the closed segments `ab` and `cd` (`a != b`).
pub fn segment_crossing_params<T: Scalar>(
    a: &Point<T>,
    b: &Point<T>,
    c: &Point<T>,
    d: &Point<T>,
) -> SegmentHit<T> {
    let r = b.sub(a);
    let s = d.sub(c);
    let ac = c.sub(a);
    let denom = cross(&r, &s);
    let unit = |v: &T| !v.is_negative() && *v <= T::one();
    if !denom.is_zero() {
        let t = cross(&ac, &s) / denom.clone();
        let u = cross(&ac, &r) / denom;
        return if unit(&t) && unit(&u) {
            SegmentHit::Point(t)
        } else {
            SegmentHit::Disjoint
        };
    }
    if !cross(&ac, &r).is_zero() {
        return SegmentHit::Disjoint;
    }
    let rr = dot(&r, &r);
    if c == d {
        let t = dot(&ac, &r) / rr;
        return if unit(&t) {
            SegmentHit::Point(t)
        } else {
            SegmentHit::Disjoint
        };
    }
    let tc = dot(&ac, &r) / rr.clone();
    let td = dot(&d.sub(a), &r) / rr;
    let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
    let lo = if lo.is_negative() { T::zero() } else { lo };
    let hi = if hi > T::one() { T::one() } else { hi };
    if lo > hi {
        SegmentHit::Disjoint
    } else if lo == hi {
        SegmentHit::Point(lo)
    } else {
        SegmentHit::Overlap(lo, hi)
    }
}
