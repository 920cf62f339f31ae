use super::{non_edge_face_sequence, Arrangement, FaceId};
use crate::error::Result;
use crate::scalar::Scalar;

/// Rows are non-edges in `(u, w)` order, columns faces; a bit is set when the
/// non-edge's open segment meets the face interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageMatrix {
    pub non_edges: Vec<(usize, usize)>,
    pub faces: usize,
    /// Sorted face ids per row.
    pub rows: Vec<Vec<FaceId>>,
}

impl CoverageMatrix {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, face: FaceId) -> bool {
        self.rows[row].binary_search(&face).is_ok()
    }

    /// Rows each face meets.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.faces];
        for (r, row) in self.rows.iter().enumerate() {
            for &f in row {
                cols[f].push(r);
            }
        }
        cols
    }

    pub fn covers(&self, chosen: &[FaceId]) -> bool {
        self.rows.iter().all(|row| row.iter().any(|f| chosen.contains(f)))
    }
}

pub fn coverage_matrix<T: Scalar>(arr: &Arrangement<T>) -> Result<CoverageMatrix> {
    let non_edges = arr.graph().non_edges();
    let mut rows = Vec::with_capacity(non_edges.len());
    for &(u, w) in &non_edges {
        let mut row = non_edge_face_sequence(arr, u, w)?;
        row.sort_unstable();
        row.dedup();
        rows.push(row);
    }
    Ok(CoverageMatrix {
        non_edges,
        faces: arr.face_count(),
        rows,
    })
}
