//! Sparse exact Gaussian elimination over an arbitrary coefficient field.
//!
//! Matrices are held row-wise as sorted sparse vectors. Pivoting prefers
//! short rows and low-fill columns (a light Markowitz heuristic), which
//! keeps boundary-map elimination tractable without any floating point.

use crate::algebra::{Field, Scalar};
use std::collections::BTreeMap;

/// One sparse row: strictly increasing column indices with nonzero entries.
#[derive(Debug, Clone, Default)]
pub struct SparseRow {
    entries: Vec<(usize, Scalar)>,
}

impl SparseRow {
    pub fn new() -> SparseRow {
        SparseRow { entries: Vec::new() }
    }

    /// Build from arbitrary (column, value) pairs; repeated columns are
    /// summed, zeros dropped.
    pub fn from_entries(field: Field, entries: Vec<(usize, Scalar)>) -> SparseRow {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (col, val) in entries {
            match acc.remove(&col) {
                Some(old) => {
                    let sum = field.add(&old, &val);
                    if !sum.is_zero() {
                        acc.insert(col, sum);
                    }
                }
                None => {
                    if !val.is_zero() {
                        acc.insert(col, val);
                    }
                }
            }
        }
        SparseRow {
            entries: acc.into_iter().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    fn coeff(&self, col: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&col, |&(c, _)| c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// self + factor * other, merged in one pass.
    fn axpy(&self, field: Field, factor: &Scalar, other: &SparseRow) -> SparseRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let next_self = self.entries.get(i).map(|&(c, _)| c);
            let next_other = other.entries.get(j).map(|&(c, _)| c);
            match (next_self, next_other) {
                (Some(a), Some(b)) if a == b => {
                    let v = field.add(&self.entries[i].1, &field.mul(factor, &other.entries[j].1));
                    if !v.is_zero() {
                        out.push((a, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => {
                    out.push(self.entries[i].clone());
                    let _ = a;
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push((b, field.mul(factor, &other.entries[j].1)));
                    j += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[i].clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push((b, field.mul(factor, &other.entries[j].1)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseRow { entries: out }
    }
}

/// A sparse matrix as a bag of rows (order is irrelevant for rank).
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(field: Field, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: SparseRow) {
        debug_assert!(row.entries.iter().all(|&(c, _)| c < self.ncols));
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Exact rank by fraction-free-ish elimination: repeatedly pick the
    /// unprocessed row of minimal length whose leading column has minimal
    /// fill, eliminate it from all other rows, and count pivots.
    pub fn rank(&self) -> usize {
        let field = self.field;
        let mut work: Vec<SparseRow> = self.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
        let mut rank = 0usize;
        let max_rank = self.ncols.min(work.len());

        while !work.is_empty() && rank < max_rank {
            // column fill counts for the current working set
            let mut fill: BTreeMap<usize, usize> = BTreeMap::new();
            for row in &work {
                for &(c, _) in &row.entries {
                    *fill.entry(c).or_insert(0) += 1;
                }
            }
            // choose pivot row: (cost = (len-1)*(fill-1), then shortest)
            let mut best: Option<(usize, usize, usize)> = None; // (cost, len, idx)
            for (idx, row) in work.iter().enumerate() {
                let (pcol, _) = row
                    .entries
                    .iter()
                    .min_by_key(|&&(c, _)| fill[&c])
                    .expect("nonzero row");
                let cost = (row.len() - 1) * (fill[pcol] - 1);
                let key = (cost, row.len(), idx);
                if best.map(|b| key < b).unwrap_or(true) {
                    best = Some(key);
                }
                if cost == 0 && row.len() == 1 {
                    break; // cannot do better than a singleton row
                }
            }
            let (_, _, pivot_idx) = best.expect("nonempty work set");
            let pivot_row = work.swap_remove(pivot_idx);
            let (pivot_col, pivot_val) = pivot_row
                .entries
                .iter()
                .min_by_key(|&&(c, _)| *fill.get(&c).unwrap_or(&1))
                .cloned()
                .expect("nonzero pivot row");
            rank += 1;

            let inv = field.inv(&pivot_val);
            let mut next: Vec<SparseRow> = Vec::with_capacity(work.len());
            for row in work.into_iter() {
                match row.coeff(pivot_col) {
                    None => next.push(row),
                    Some(c) => {
                        let factor = field.neg(&field.mul(c, &inv));
                        let reduced = row.axpy(field, &factor, &pivot_row);
                        if !reduced.is_zero() {
                            next.push(reduced);
                        }
                    }
                }
            }
            work = next;
        }
        rank
    }
}

/// Decide whether `target` lies in the column span of `columns` (each a
/// sparse vector over row indices). Used to certify that a homology cycle
/// is not a boundary: compare rank([columns]) with rank([columns | target]).
pub fn in_column_span(field: Field, nrows: usize, columns: &[SparseRow], target: &SparseRow) -> bool {
    // transpose into row-major matrices over the column index space
    let build = |with_target: bool| -> SparseMatrix {
        let ncols = columns.len() + usize::from(with_target);
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.entries() {
                rows[*i].push((j, v.clone()));
            }
        }
        if with_target {
            for (i, v) in target.entries() {
                rows[*i].push((columns.len(), v.clone()));
            }
        }
        let mut m = SparseMatrix::new(field, ncols);
        for r in rows {
            m.push_row(SparseRow::from_entries(field, r));
        }
        m
    };
    build(false).rank() == build(true).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::FromPrimitive;

    fn q(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_i64(n).unwrap())
    }

    fn row(field: Field, entries: &[(usize, i64)]) -> SparseRow {
        SparseRow::from_entries(
            field,
            entries.iter().map(|&(c, v)| (c, field.from_i64(v))).collect(),
        )
    }

    /// Dense reference rank over the rationals.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_i64(v).unwrap()).collect())
            .collect();
        let ncols = m.first().map(|r| r.len()).unwrap_or(0);
        let mut rank = 0;
        for col in 0..ncols {
            if let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != BigRational::from_i64(0).unwrap()) {
                m.swap(rank, piv);
                let pv = m[rank][col].clone();
                for i in 0..m.len() {
                    if i != rank && m[i][col] != BigRational::from_i64(0).unwrap() {
                        let f = &m[i][col] / &pv;
                        for j in col..ncols {
                            let sub = &f * &m[rank][j];
                            m[i][j] = &m[i][j] - sub;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn rank_small_examples() {
        let f = Field::Rationals;
        let mut m = SparseMatrix::new(f, 3);
        m.push_row(row(f, &[(0, 1), (1, 2), (2, 3)]));
        m.push_row(row(f, &[(0, 2), (1, 4), (2, 6)]));
        m.push_row(row(f, &[(1, 1), (2, 1)]));
        assert_eq!(m.rank(), 2);

        let mut id = SparseMatrix::new(f, 4);
        for i in 0..4 {
            id.push_row(row(f, &[(i, 1)]));
        }
        assert_eq!(id.rank(), 4);

        let empty = SparseMatrix::new(f, 5);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn rank_matches_dense_reference_on_randomish_grid() {
        // deterministic pseudo-random small integer matrices
        let f = Field::Rationals;
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..40 {
            let nrows = 1 + (next() % 6) as usize;
            let ncols = 1 + (next() % 6) as usize;
            let dense: Vec<Vec<i64>> = (0..nrows)
                .map(|_| {
                    (0..ncols)
                        .map(|_| {
                            let v = (next() % 5) as i64 - 2;
                            if next() % 3 == 0 { 0 } else { v }
                        })
                        .collect()
                })
                .collect();
            let mut sparse = SparseMatrix::new(f, ncols);
            for r in &dense {
                let entries: Vec<(usize, i64)> = r
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| v != 0)
                    .map(|(c, &v)| (c, v))
                    .collect();
                sparse.push_row(row(f, &entries));
            }
            assert_eq!(sparse.rank(), dense_rank(&dense), "trial {trial}: {dense:?}");
        }
    }

    #[test]
    fn rank_over_prime_field_sees_characteristic() {
        // [[2]] has rank 1 over Q but rank 0 over GF(2)
        let mut over_q = SparseMatrix::new(Field::Rationals, 1);
        over_q.push_row(row(Field::Rationals, &[(0, 2)]));
        assert_eq!(over_q.rank(), 1);

        let f2 = Field::Prime(2);
        let mut over_f2 = SparseMatrix::new(f2, 1);
        over_f2.push_row(SparseRow::from_entries(f2, vec![(0, f2.from_i64(2))]));
        assert_eq!(over_f2.rank(), 0);
    }

    #[test]
    fn column_span_membership() {
        let f = Field::Rationals;
        // columns (1,0,1) and (0,1,1); target (1,1,2) = sum, (1,0,0) not in span
        let c1 = SparseRow::from_entries(f, vec![(0, q(1)), (2, q(1))]);
        let c2 = SparseRow::from_entries(f, vec![(1, q(1)), (2, q(1))]);
        let yes = SparseRow::from_entries(f, vec![(0, q(1)), (1, q(1)), (2, q(2))]);
        let no = SparseRow::from_entries(f, vec![(0, q(1))]);
        assert!(in_column_span(f, 3, &[c1.clone(), c2.clone()], &yes));
        assert!(!in_column_span(f, 3, &[c1, c2], &no));
    }
}
