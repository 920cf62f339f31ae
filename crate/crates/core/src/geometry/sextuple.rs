//! Three directed lines named by six points, and the predicates on them.

use super::{line_intersection, DirectedLine, LineIntersection, Point};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Sign};

/// Six points `a1, a2, b1, b2, c1, c2` naming the directed lines A, B, C.
/// Admissibility is checked separately by [`is_admissible`].
#[derive(Clone, Debug, PartialEq)]
pub struct Sextuple<T> {
    pub a1: Point<T>,
    pub a2: Point<T>,
    pub b1: Point<T>,
    pub b2: Point<T>,
    pub c1: Point<T>,
    pub c2: Point<T>,
}

impl<T: Scalar> Sextuple<T> {
    pub fn new(pts: [Point<T>; 6]) -> Self {
        let [a1, a2, b1, b2, c1, c2] = pts;
        Sextuple {
            a1,
            a2,
            b1,
            b2,
            c1,
            c2,
        }
    }

    fn pairs(&self) -> [(&Point<T>, &Point<T>); 3] {
        [(&self.a1, &self.a2), (&self.b1, &self.b2), (&self.c1, &self.c2)]
    }

    /// The directed lines A, B, C. Only valid for admissible sextuples.
    fn lines(&self) -> [DirectedLine<T>; 3] {
        self.pairs()
            .map(|(p, q)| DirectedLine::new(p.clone(), q.clone()).expect("admissible sextuple"))
    }
}

fn same_pair<T: PartialEq>(p: (&T, &T), q: (&T, &T)) -> bool {
    (p.0 == q.0 && p.1 == q.1) || (p.0 == q.1 && p.1 == q.0)
}

pub fn is_admissible<T: Scalar>(t: &Sextuple<T>) -> bool {
    let [a, b, c] = t.pairs();
    if a.0 == a.1 || b.0 == b.1 || c.0 == c.1 {
        return false;
    }
    if same_pair(a, b) || same_pair(b, c) || same_pair(c, a) {
        return false;
    }
    let in_pair = |p: &Point<T>, q: (&Point<T>, &Point<T>)| p == q.0 || p == q.1;
    ![a.0, a.1].into_iter().any(|p| in_pair(p, b) && in_pair(p, c))
}

fn check_admissible<T: Scalar>(t: &Sextuple<T>) -> Result<()> {
    if is_admissible(t) {
        Ok(())
    } else {
        Err(Error::NotAdmissible)
    }
}

/// Whether A, B and C share a point.
fn concurrent<T: Scalar>(a: &DirectedLine<T>, b: &DirectedLine<T>, c: &DirectedLine<T>) -> bool {
    match line_intersection(a, b) {
        LineIntersection::Point(x) => c.contains(&x),
        LineIntersection::Identical => line_intersection(a, c) != LineIntersection::Parallel,
        LineIntersection::Parallel => false,
    }
}

fn parallel<T: Scalar>(l: &DirectedLine<T>, m: &DirectedLine<T>) -> bool {
    !matches!(line_intersection(l, m), LineIntersection::Point(_))
}

/// Degenerate: a vertical line, A parallel to B or to C, or a common point
/// of A, B and C. B parallel to C alone is not degenerate.
pub fn is_degenerate<T: Scalar>(t: &Sextuple<T>) -> Result<bool> {
    check_admissible(t)?;
    let [a, b, c] = t.lines();
    Ok(a.is_vertical()
        || b.is_vertical()
        || c.is_vertical()
        || parallel(&a, &b)
        || parallel(&a, &c)
        || concurrent(&a, &b, &c))
}

/// `-1` if A∩B comes before A∩C along A, `+1` if after, `0` if degenerate.
pub fn sextuple_type<T: Scalar>(t: &Sextuple<T>) -> Result<Sign> {
    if is_degenerate(t)? {
        return Ok(Sign::Zero);
    }
    let [a, b, c] = t.lines();
    let point = |m: &DirectedLine<T>| match line_intersection(&a, m) {
        LineIntersection::Point(x) => x,
        _ => unreachable!("non-degenerate sextuple has no line parallel to A"),
    };
    let tb = a.param_of(&point(&b));
    let tc = a.param_of(&point(&c));
    Ok(tb.cmp_total(&tc).into())
}

fn diff<T: Scalar>(p: &Point<T>, q: &Point<T>) -> (T, T) {
    (p.x.clone() - q.x.clone(), p.y.clone() - q.y.clone())
}

/// `x(a1-a2)·y(b1-b2) - x(b1-b2)·y(a1-a2)`; zero iff the lines are parallel
/// or identical.
pub fn parallel_poly<T: Scalar>(a1: &Point<T>, a2: &Point<T>, b1: &Point<T>, b2: &Point<T>) -> Result<T> {
    if a1 == a2 || b1 == b2 {
        return Err(Error::CoincidentPoints);
    }
    let (ax, ay) = diff(a1, a2);
    let (bx, by) = diff(b1, b2);
    Ok(ax * by - bx * ay)
}

/// Row `[y1·dx - x1·dy, dy, dx]`: the (intercept, slope, 1) row of the line
/// through `p1, p2` multiplied by `dx = x(p1 - p2)`.
pub(crate) fn scaled_row<T: Scalar>(p1: &Point<T>, p2: &Point<T>) -> [T; 3] {
    let (dx, dy) = diff(p1, p2);
    [p1.y.clone() * dx.clone() - p1.x.clone() * dy.clone(), dy, dx]
}

pub(crate) fn det3<T: Scalar>(m: &[[T; 3]; 3]) -> T {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        m[r1][c1].clone() * m[r2][c2].clone() - m[r1][c2].clone() * m[r2][c1].clone()
    };
    m[0][0].clone() * minor(1, 2, 1, 2) - m[0][1].clone() * minor(1, 2, 0, 2)
        + m[0][2].clone() * minor(1, 2, 0, 1)
}

/// The intercept/slope determinant scaled into a polynomial:
/// `x(a1-a2)·x(b1-b2)·x(c1-c2) · det(row-scaled matrix)`.
///
/// Equals `(Πdx)² · det(M)` for non-vertical lines, so its sign is the sign of
/// the unscaled determinant `M`; it vanishes when a line is vertical, when the
/// three lines share a point, and when all three are parallel.
pub fn concurrency_poly<T: Scalar>(t: &Sextuple<T>) -> Result<T> {
    check_admissible(t)?;
    let rows = t.pairs().map(|(p, q)| scaled_row(p, q));
    let dxs = rows[0][2].clone() * rows[1][2].clone() * rows[2][2].clone();
    Ok(dxs * det3(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};

    type P = Point<BigRational>;

    fn p(x: i64, y: i64) -> P {
        Point::from_ints(x, y)
    }

    fn sext(v: [(i64, i64); 6]) -> Sextuple<BigRational> {
        Sextuple::new(v.map(|(x, y)| p(x, y)))
    }

    #[test]
    fn admissibility_examples() {
        let s = sext([(0, 0), (1, 1), (0, 0), (1, 1), (3, 4), (5, 6)]);
        assert!(!is_admissible(&s));
        let s = sext([(0, 0), (0, 0), (1, 1), (2, 2), (3, 4), (5, 6)]);
        assert!(!is_admissible(&s));
        // {p,q},{q,r},{r,p}: pairwise intersections non-empty, triple empty.
        let s = sext([(0, 0), (1, 0), (1, 0), (0, 1), (0, 1), (0, 0)]);
        assert!(is_admissible(&s));
        // Reversed pair is the same unordered pair.
        let s = sext([(0, 0), (1, 1), (1, 1), (0, 0), (3, 4), (5, 6)]);
        assert!(!is_admissible(&s));
        // Three pairs through a common point.
        let s = sext([(0, 0), (1, 0), (0, 0), (0, 1), (0, 0), (1, 1)]);
        assert!(!is_admissible(&s));
    }

    #[test]
    fn degeneracy_examples() {
        let vertical_c = sext([(0, 0), (1, 0), (2, -1), (3, 1), (4, 0), (4, 1)]);
        assert!(is_degenerate(&vertical_c).unwrap());
        let parallel_ab = sext([(0, 0), (1, 0), (0, 1), (1, 1), (2, 5), (3, 7)]);
        assert!(is_degenerate(&parallel_ab).unwrap());
        // x-axis, y = x, y = -x all through the origin (substitution: (0,0)).
        let concurrent = sext([(-1, 0), (1, 0), (-2, -2), (3, 3), (-1, 1), (2, -2)]);
        assert!(is_degenerate(&concurrent).unwrap());
        let generic = sext([(0, 0), (1, 0), (2, -1), (3, 1), (4, 1), (5, -1)]);
        assert!(!is_degenerate(&generic).unwrap());
        // B parallel to C only.
        let bc = sext([(0, 0), (1, 0), (0, 1), (1, 3), (5, 1), (6, 3)]);
        assert!(!is_degenerate(&bc).unwrap());
        let bad = sext([(0, 0), (0, 0), (2, -1), (3, 1), (4, 1), (5, -1)]);
        assert_eq!(is_degenerate(&bad), Err(Error::NotAdmissible));
    }

    #[test]
    fn type_examples() {
        // A∩B at x = 5/2, A∩C at x = 9/2.
        let t = sext([(0, 0), (1, 0), (2, -1), (3, 1), (4, 1), (5, -1)]);
        assert_eq!(sextuple_type(&t).unwrap(), Sign::Negative);
        let swapped = sext([(0, 0), (1, 0), (4, 1), (5, -1), (2, -1), (3, 1)]);
        assert_eq!(sextuple_type(&swapped).unwrap(), Sign::Positive);
        let degenerate = sext([(0, 0), (1, 0), (0, 1), (1, 1), (2, 5), (3, 7)]);
        assert_eq!(sextuple_type(&degenerate).unwrap(), Sign::Zero);
    }

    #[test]
    fn parallel_poly_examples() {
        assert!(parallel_poly(&p(0, 0), &p(1, 0), &p(0, 3), &p(5, 3))
            .unwrap()
            .is_zero());
        // x(a1-a2)·y(b1-b2) - x(b1-b2)·y(a1-a2) = (-1)(-1) - 0·0 = 1.
        assert_eq!(
            parallel_poly(&p(0, 0), &p(1, 0), &p(0, 0), &p(0, 1)).unwrap(),
            int(1)
        );
        assert!(parallel_poly(&p(2, 0), &p(2, 5), &p(7, 1), &p(7, -1))
            .unwrap()
            .is_zero());
        assert_eq!(
            parallel_poly(&p(0, 0), &p(0, 0), &p(0, 3), &p(5, 3)),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn concurrency_poly_examples() {
        let vertical = sext([(0, 0), (1, 0), (2, -1), (3, 1), (4, 0), (4, 1)]);
        assert!(concurrency_poly(&vertical).unwrap().is_zero());
        let origin = sext([(-1, 0), (1, 0), (-2, -2), (3, 3), (-1, 1), (2, -2)]);
        assert!(concurrency_poly(&origin).unwrap().is_zero());
    }

    /// Unscaled determinant with explicit slope/intercept arithmetic.
    fn slope_intercept_det(t: &Sextuple<BigRational>) -> BigRational {
        let row = |p: &P, q: &P| {
            let slope = (p.y.clone() - q.y.clone()) / (p.x.clone() - q.x.clone());
            let intercept = p.y.clone() - p.x.clone() * slope.clone();
            [intercept, slope, BigRational::one()]
        };
        det3(&[row(&t.a1, &t.a2), row(&t.b1, &t.b2), row(&t.c1, &t.c2)])
    }

    #[test]
    fn concurrency_poly_sign_matches_unscaled_determinant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 200 {
            let pts: [P; 6] = std::array::from_fn(|_| {
                Point::new(
                    ratio(rng.gen_range(-500..500), rng.gen_range(1..9)),
                    ratio(rng.gen_range(-500..500), rng.gen_range(1..9)),
                )
            });
            let t = Sextuple::new(pts);
            if !is_admissible(&t) || is_degenerate(&t).unwrap() {
                continue;
            }
            let poly = concurrency_poly(&t).unwrap();
            assert!(!poly.is_zero());
            assert_eq!(poly.sign(), slope_intercept_det(&t).sign());
            checked += 1;
        }
    }
}
