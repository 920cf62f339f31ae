//! Super-order types of point sequences.
//!
//! Index pairs are oriented smaller-index-first. A canonical sextuple is an
//! ordered triple (A, B, C) of pairwise distinct pairs whose common
//! intersection is empty; the canonical sequence lists them in lexicographic
//! order, which keeps `r < C(n,2)^3`.

mod line_table;
mod perturb;

pub use perturb::{perturb_to_simple, PerturbConfig, PerturbContext, PerturbOutcome, PerturbStep};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{orientation, Point};
use crate::scalar::{Scalar, Sign};
use line_table::LineTable;

/// An ordered list of pairwise distinct points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSequence<T> {
    points: Vec<Point<T>>,
}

impl<T: Scalar> PointSequence<T> {
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoints { first: i, second: j });
                }
            }
        }
        Ok(PointSequence { points })
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point<T> {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point<T>> {
        self.points
    }

    pub fn subsequence(&self, indices: &[usize]) -> PointSequence<T> {
        PointSequence {
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Result<PointSequence<T>> {
        PointSequence::new(self.points.iter().map(f).collect())
    }
}

/// Vertex indices (0-based) of an admissible sextuple: pairs A, B, C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SextupleIndices {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub c: (usize, usize),
}

impl SextupleIndices {
    pub fn as_array(&self) -> [usize; 6] {
        [self.a.0, self.a.1, self.b.0, self.b.1, self.c.0, self.c.1]
    }

    pub fn involves(&self, v: usize) -> bool {
        self.as_array().contains(&v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalSextupleSequence {
    n: usize,
    entries: Vec<SextupleIndices>,
    // (A, B, C) as indices into the lexicographic pair list.
    lines: Vec<[u32; 3]>,
}

impl CanonicalSextupleSequence {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[SextupleIndices] {
        &self.entries
    }

    pub(crate) fn lines(&self) -> &[[u32; 3]] {
        &self.lines
    }
}

pub fn enumerate_admissible(n: usize) -> CanonicalSextupleSequence {
    let pairs: Vec<(usize, usize)> = crate::graph::all_pairs(n).collect();
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    let shares = |p: (usize, usize), v: usize| p.0 == v || p.1 == v;
    for (ia, &a) in pairs.iter().enumerate() {
        for (ib, &b) in pairs.iter().enumerate() {
            if ib == ia {
                continue;
            }
            for (ic, &c) in pairs.iter().enumerate() {
                if ic == ia || ic == ib {
                    continue;
                }
                if [a.0, a.1].into_iter().any(|v| shares(b, v) && shares(c, v)) {
                    continue;
                }
                entries.push(SextupleIndices { a, b, c });
                lines.push([ia as u32, ib as u32, ic as u32]);
            }
        }
    }
    CanonicalSextupleSequence { n, entries, lines }
}

/// Shared, memoized canonical sequence for `n` points.
pub fn canonical_sequence(n: usize) -> Arc<CanonicalSextupleSequence> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CanonicalSextupleSequence>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(seq) = cache.lock().expect("cache lock").get(&n) {
        return seq.clone();
    }
    let seq = Arc::new(enumerate_admissible(n));
    cache.lock().expect("cache lock").insert(n, seq.clone());
    seq
}

/// σ(P): one sign per canonical sextuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperOrderTypeVector {
    n: usize,
    values: Vec<Sign>,
}

impl SuperOrderTypeVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    pub fn zero_count(&self) -> usize {
        self.values.iter().filter(|s| s.is_zero()).count()
    }

    pub fn is_simple(&self) -> bool {
        self.zero_count() == 0
    }

    /// Position of the first entry where the two vectors differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if self.n != other.n {
            return Some(0);
        }
        self.values.iter().zip(&other.values).position(|(a, b)| a != b)
    }

    /// `-`, `0`, `+` per entry.
    pub fn symbols(&self) -> String {
        self.values.iter().map(|s| s.symbol()).collect()
    }
}

/// Classical order type: orientation of every triple `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderTypeVector {
    n: usize,
    values: Vec<Sign>,
}

impl OrderTypeVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    pub fn symbols(&self) -> String {
        self.values.iter().map(|s| s.symbol()).collect()
    }
}

const PARALLEL_THRESHOLD: usize = 20_000;

pub fn super_order_type<T: Scalar>(p: &PointSequence<T>) -> SuperOrderTypeVector {
    let seq = canonical_sequence(p.len());
    let table = LineTable::new(p.points());
    let values = if seq.r() >= PARALLEL_THRESHOLD {
        seq.lines().par_iter().map(|l| table.sextuple_type(l)).collect()
    } else {
        seq.lines().iter().map(|l| table.sextuple_type(l)).collect()
    };
    SuperOrderTypeVector { n: p.len(), values }
}

pub fn degenerate_count<T: Scalar>(p: &PointSequence<T>) -> usize {
    super_order_type(p).zero_count()
}

/// True iff σ(P) has no zero entry.
///
/// Decided structurally in `O(n^4 log n)`: no vertical pair, no two parallel
/// (or identical) pair lines, and no point shared by three pair lines that do
/// not all contain one common vertex.
pub fn is_simple<T: Scalar>(p: &PointSequence<T>) -> bool {
    let n = p.len();
    if n < 3 {
        return true;
    }
    let table = LineTable::new(p.points());
    let count = table.line_count();
    if (0..count).any(|l| table.is_vertical(l)) {
        return false;
    }
    for a in 0..count {
        for b in (a + 1)..count {
            if table.is_parallel(a, b) {
                return false;
            }
        }
    }
    let mut hits: Vec<(Point<T>, usize, usize)> = Vec::with_capacity(count * count / 2);
    for a in 0..count {
        for b in (a + 1)..count {
            hits.push((table.intersection(a, b), a, b));
        }
    }
    hits.sort_by(|x, y| x.0.lex_cmp(&y.0));
    let pairs = table.pairs();
    let mut start = 0;
    while start < hits.len() {
        let mut end = start + 1;
        while end < hits.len() && hits[end].0 == hits[start].0 {
            end += 1;
        }
        if end - start >= 2 {
            let mut lines: Vec<usize> = hits[start..end].iter().flat_map(|h| [h.1, h.2]).collect();
            lines.sort_unstable();
            lines.dedup();
            if lines.len() >= 3 {
                let (u, w) = pairs[lines[0]];
                let common = |v: usize| lines.iter().all(|&l| pairs[l].0 == v || pairs[l].1 == v);
                if !common(u) && !common(w) {
                    return false;
                }
            }
        }
        start = end;
    }
    true
}

/// Sign of P*(P): the product over canonical sextuples of
/// `parallel_poly(A,B) · parallel_poly(A,C) · concurrency_poly`, multiplied
/// as signs.
pub fn pstar_sign<T: Scalar>(p: &PointSequence<T>) -> Sign {
    let n = p.len();
    let seq = canonical_sequence(n);
    let pairs: Vec<(usize, usize)> = crate::graph::all_pairs(n).collect();
    let rows: Vec<[T; 3]> = pairs
        .iter()
        .map(|&(i, j)| crate::geometry::scaled_row_of(p.point(i), p.point(j)))
        .collect();
    let parallel = |a: usize, b: usize| {
        let (ra, rb) = (&rows[a], &rows[b]);
        (ra[2].clone() * rb[1].clone() - rb[2].clone() * ra[1].clone()).sign()
    };
    let factor = |l: &[u32; 3]| -> Sign {
        let [a, b, c] = l.map(|x| x as usize);
        let s = parallel(a, b) * parallel(a, c);
        if s.is_zero() {
            return s;
        }
        let dxs = rows[a][2].clone() * rows[b][2].clone() * rows[c][2].clone();
        let det = crate::geometry::det3_of(&[rows[a].clone(), rows[b].clone(), rows[c].clone()]);
        s * (dxs * det).sign()
    };
    let mut acc = Sign::Positive;
    for l in seq.lines() {
        acc = acc * factor(l);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn order_type<T: Scalar>(p: &PointSequence<T>) -> OrderTypeVector {
    let n = p.len();
    let mut values = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                values.push(orientation(p.point(i), p.point(j), p.point(k)));
            }
        }
    }
    OrderTypeVector { n, values }
}
