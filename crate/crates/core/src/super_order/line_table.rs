//! Homogeneous line data for every index pair of a point sequence.

use crate::geometry::Point;
use crate::scalar::{Scalar, Sign};

/// For pair lines A, B (directed smaller index to larger), stores the
/// homogeneous intersection `X = L_A x L_B` reduced to the two quantities the
/// sextuple type needs: `proj = d_A · (X1, X2)` and `den = X3`. The position
/// of A∩B along A is `proj / den`, increasing in the direction of A.
pub(crate) struct LineTable<T> {
    pairs: Vec<(usize, usize)>,
    dirs: Vec<(T, T)>,
    homog: Vec<[T; 3]>,
    cells: Vec<(T, T)>,
}

impl<T: Scalar> LineTable<T> {
    pub fn new(points: &[Point<T>]) -> Self {
        let n = points.len();
        let pairs: Vec<(usize, usize)> = crate::graph::all_pairs(n).collect();
        let mut dirs = Vec::with_capacity(pairs.len());
        let mut homog = Vec::with_capacity(pairs.len());
        for &(i, j) in &pairs {
            let (p, q) = (&points[i], &points[j]);
            dirs.push((q.x.clone() - p.x.clone(), q.y.clone() - p.y.clone()));
            homog.push([
                p.y.clone() - q.y.clone(),
                q.x.clone() - p.x.clone(),
                p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone(),
            ]);
        }
        let count = pairs.len();
        let mut cells = Vec::with_capacity(count * count);
        for a in 0..count {
            for b in 0..count {
                cells.push(Self::cell(&dirs[a], &homog[a], &homog[b]));
            }
        }
        LineTable {
            pairs,
            dirs,
            homog,
            cells,
        }
    }

    fn cell(dir: &(T, T), la: &[T; 3], lb: &[T; 3]) -> (T, T) {
        let x1 = la[1].clone() * lb[2].clone() - la[2].clone() * lb[1].clone();
        let x2 = la[2].clone() * lb[0].clone() - la[0].clone() * lb[2].clone();
        let x3 = la[0].clone() * lb[1].clone() - la[1].clone() * lb[0].clone();
        (dir.0.clone() * x1 + dir.1.clone() * x2, x3)
    }

    pub fn line_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_vertical(&self, l: usize) -> bool {
        self.dirs[l].0.is_zero()
    }

    pub fn is_parallel(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.pairs.len() + b].1.is_zero()
    }

    /// Affine intersection of two non-parallel pair lines.
    pub fn intersection(&self, a: usize, b: usize) -> Point<T> {
        let (la, lb) = (&self.homog[a], &self.homog[b]);
        let x1 = la[1].clone() * lb[2].clone() - la[2].clone() * lb[1].clone();
        let x2 = la[2].clone() * lb[0].clone() - la[0].clone() * lb[2].clone();
        let x3 = la[0].clone() * lb[1].clone() - la[1].clone() * lb[0].clone();
        Point::new(x1 / x3.clone(), x2 / x3)
    }

    pub fn sextuple_type(&self, lines: &[u32; 3]) -> Sign {
        let [a, b, c] = lines.map(|l| l as usize);
        if self.is_vertical(a) || self.is_vertical(b) || self.is_vertical(c) {
            return Sign::Zero;
        }
        let count = self.pairs.len();
        let (pb, db) = &self.cells[a * count + b];
        let (pc, dc) = &self.cells[a * count + c];
        if db.is_zero() || dc.is_zero() {
            return Sign::Zero;
        }
        let diff = pb.clone() * dc.clone() - pc.clone() * db.clone();
        diff.sign() * db.sign() * dc.sign()
    }
}
