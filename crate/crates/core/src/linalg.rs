//! Exact dense linear algebra over [`RadicalScalar`].
//!
//! Everything here is small and exact: matrices of a few dozen rows with
//! entries in the radical field, reduced by Gauss-Jordan elimination. The
//! pivot at each step is chosen among the eligible rows to have the fewest
//! radical terms, which keeps intermediate entries compact. Reduced row
//! echelon form doubles as the canonical-form machine: row spaces, null
//! spaces and solved coordinates all inherit its determinism.
//!
//! [`Solver`] factors a coefficient matrix once (via the reduction of
//! `[A | I]`) and then answers many `A x = b` queries, reporting an exact
//! residual when `b` lies outside the column span. [`charpoly`] computes the
//! characteristic polynomial by the trace-recursion method, which needs no
//! divisions by matrix entries and therefore cannot hit scalar-inversion
//! limits.

use crate::error::Result;
use crate::scalar::{RadicalScalar, Rational};

/// A dense matrix with [`RadicalScalar`] entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RadicalScalar>,
}

impl RadMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RadMatrix {
            rows,
            cols,
            data: vec![RadicalScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RadMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RadicalScalar::one());
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<RadicalScalar>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        RadMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: Vec<Vec<RadicalScalar>>) -> Self {
        let n_cols = cols.len();
        let n_rows = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == n_rows), "ragged columns");
        let mut m = RadMatrix::zeros(n_rows, n_cols);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RadicalScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RadicalScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[RadicalScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<RadicalScalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RadicalScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = RadMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.add(b))
            .collect();
        RadMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        RadMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &RadicalScalar) -> Self {
        RadMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = RadMatrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[RadicalScalar]) -> Vec<RadicalScalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|r| {
                let mut acc = RadicalScalar::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&a.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> RadicalScalar {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = RadicalScalar::zero();
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "row mismatch in hstack");
        let mut out = RadMatrix::zeros(self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.cols {
                out.set(r, self.cols + c, o.get(r, c).clone());
            }
        }
        out
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        RadMatrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Result<Vec<usize>> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // Cheapest nonzero candidate keeps later arithmetic small.
            let pivot_row = (row..self.rows)
                .filter(|&r| !self.get(r, col).is_zero())
                .min_by_key(|&r| self.get(r, col).term_count());
            let Some(p) = pivot_row else { continue };
            self.data.swap_chunks(row, p, self.cols);
            let inv = self.get(row, col).inverse()?;
            for c in col..self.cols {
                let v = self.get(row, c).mul(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c).sub(&factor.mul(self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        Ok(m.rref_in_place()?.len())
    }

    /// The nonzero rows of the reduced row echelon form: a canonical basis of
    /// the row space.
    pub fn row_space_basis(&self) -> Result<Vec<Vec<RadicalScalar>>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place()?;
        Ok((0..pivots.len()).map(|r| m.row(r).to_vec()).collect())
    }

    /// A canonical basis of the right null space (free coordinates set to one
    /// in column order).
    pub fn nullspace(&self) -> Result<Vec<Vec<RadicalScalar>>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place()?;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![RadicalScalar::zero(); self.cols];
            v[free] = RadicalScalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<RadicalScalar> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for k in 0..width {
            self.swap(a * width + k, b * width + k);
        }
    }
}

/// The outcome of one [`Solver::solve`] query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    /// A solution (free coordinates, if any, set to zero).
    Solution(Vec<RadicalScalar>),
    /// No solution; the exact residual `b - A x` at the least-squares-free
    /// pivot candidate is returned.
    Inconsistent { residual: Vec<RadicalScalar> },
}

/// Factors `A` once to answer many `A x = b` queries exactly.
#[derive(Clone, Debug)]
pub struct Solver {
    matrix: RadMatrix,
    trans: RadMatrix,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn new(matrix: RadMatrix) -> Result<Self> {
        let mut aug = matrix.hstack(&RadMatrix::identity(matrix.rows()));
        let pivots: Vec<usize> = aug
            .rref_in_place()?
            .into_iter()
            .filter(|&c| c < matrix.cols())
            .collect();
        let mut trans = RadMatrix::zeros(matrix.rows(), matrix.rows());
        for r in 0..matrix.rows() {
            for c in 0..matrix.rows() {
                trans.set(r, c, aug.get(r, matrix.cols() + c).clone());
            }
        }
        Ok(Solver {
            matrix,
            trans,
            pivots,
        })
    }

    pub fn matrix(&self) -> &RadMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[RadicalScalar]) -> Solve {
        assert_eq!(b.len(), self.matrix.rows(), "right-hand side length");
        let y = self.trans.mul_vec(b);
        let mut x = vec![RadicalScalar::zero(); self.matrix.cols()];
        for (row, &col) in self.pivots.iter().enumerate() {
            // In rref the pivot row may still involve free columns; with free
            // coordinates pinned to zero the pivot coordinate is y[row].
            x[col] = y[row].clone();
        }
        let residual: Vec<RadicalScalar> = self
            .matrix
            .mul_vec(&x)
            .iter()
            .zip(b)
            .map(|(ax, bi)| bi.sub(ax))
            .collect();
        if residual.iter().all(RadicalScalar::is_zero) {
            Solve::Solution(x)
        } else {
            Solve::Inconsistent { residual }
        }
    }
}

/// Coefficients of `det(t I - A)` from `t^0` up to `t^n` (monic), by the
/// trace recursion. Uses only ring operations and division by integers.
pub fn charpoly(a: &RadMatrix) -> Vec<RadicalScalar> {
    assert_eq!(a.rows(), a.cols(), "characteristic polynomial needs square");
    let n = a.rows();
    let mut coeffs = vec![RadicalScalar::zero(); n + 1];
    coeffs[n] = RadicalScalar::one();
    let mut m = RadMatrix::identity(n);
    for k in 1..=n {
        m = a.mul(&m);
        let c = m
            .trace()
            .scale_rational(&Rational::new((-1).into(), (k as i64).into()));
        coeffs[n - k] = c.clone();
        for i in 0..n {
            let v = m.get(i, i).add(&c);
            m.set(i, i, v);
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> RadicalScalar {
        RadicalScalar::from_int(v)
    }

    fn rt(n: u64) -> RadicalScalar {
        RadicalScalar::sqrt_int(n).unwrap()
    }

    #[test]
    fn rref_with_radical_entries() {
        // Second row is (sqrt(2)/2) times the first: rank 1.
        let half_rt2 = rt(2).scale_rational(&Rational::new(1.into(), 2.into()));
        let mut m = RadMatrix::from_rows(vec![
            vec![rt(2), s(1)],
            vec![s(1), half_rt2.clone()],
        ]);
        let pivots = m.rref_in_place().unwrap();
        assert_eq!(pivots, vec![0]);
        assert_eq!(m.row(0), &[s(1), half_rt2][..]);
        assert!(m.row(1).iter().all(RadicalScalar::is_zero));
    }

    #[test]
    fn solver_round_trip() {
        let a = RadMatrix::from_rows(vec![
            vec![s(2), s(1), s(0)],
            vec![s(0), rt(3), s(1)],
            vec![s(1), s(0), s(1)],
        ]);
        let solver = Solver::new(a.clone()).unwrap();
        assert_eq!(solver.rank(), 3);
        let x_true = vec![rt(2), s(-1), s(3)];
        let b = a.mul_vec(&x_true);
        match solver.solve(&b) {
            Solve::Solution(x) => assert_eq!(x, x_true),
            Solve::Inconsistent { .. } => panic!("consistent system reported inconsistent"),
        }
    }

    #[test]
    fn solver_reports_residual() {
        // Column span of [1, 1]^T misses [1, 0]^T; residual is exact.
        let a = RadMatrix::from_columns(vec![vec![s(1), s(1)]]);
        let solver = Solver::new(a).unwrap();
        match solver.solve(&[s(1), s(0)]) {
            Solve::Solution(_) => panic!("inconsistent system reported solved"),
            Solve::Inconsistent { residual } => {
                assert!(residual.iter().any(|r| !r.is_zero()));
            }
        }
    }

    #[test]
    fn nullspace_of_sum_constraint() {
        let a = RadMatrix::from_rows(vec![vec![s(1), s(1), s(1)]]);
        let basis = a.nullspace().unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(a.mul_vec(v).iter().all(RadicalScalar::is_zero));
        }
        // Canonical shape: free coordinates 1 and 2 pinned to one in order.
        assert_eq!(basis[0], vec![s(-1), s(1), s(0)]);
        assert_eq!(basis[1], vec![s(-1), s(0), s(1)]);
    }

    #[test]
    fn row_space_is_canonical() {
        // Same row space presented in two bases reduces identically.
        let a = RadMatrix::from_rows(vec![vec![s(1), s(2), s(0)], vec![s(0), s(1), s(1)]]);
        let b = RadMatrix::from_rows(vec![vec![s(1), s(3), s(1)], vec![s(2), s(5), s(1)]]);
        assert_eq!(a.row_space_basis().unwrap(), b.row_space_basis().unwrap());
    }

    #[test]
    fn charpoly_frozen_cases() {
        let swap = RadMatrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        assert_eq!(charpoly(&swap), vec![s(-1), s(0), s(1)]);
        let diag = RadMatrix::from_rows(vec![
            vec![s(1), s(0), s(0)],
            vec![s(0), s(2), s(0)],
            vec![s(0), s(0), s(3)],
        ]);
        // (t-1)(t-2)(t-3) = t^3 - 6 t^2 + 11 t - 6.
        assert_eq!(charpoly(&diag), vec![s(-6), s(11), s(-6), s(1)]);
        // Nilpotent: pure power.
        let nil = RadMatrix::from_rows(vec![vec![s(0), s(1)], vec![s(0), s(0)]]);
        assert_eq!(charpoly(&nil), vec![s(0), s(0), s(1)]);
    }

    #[test]
    fn charpoly_with_radical_entries() {
        // [[0, sqrt(2)], [sqrt(2), 0]] has eigenvalues +-sqrt(2): t^2 - 2.
        let m = RadMatrix::from_rows(vec![vec![s(0), rt(2)], vec![rt(2), s(0)]]);
        assert_eq!(charpoly(&m), vec![s(-2), s(0), s(1)]);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = RadMatrix> {
            prop::collection::vec(-3i64..=3, 9).prop_map(|v| {
                RadMatrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| s(x)).collect()).collect())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            /// A matrix satisfies its own characteristic polynomial.
            #[test]
            fn cayley_hamilton(a in small_matrix()) {
                let coeffs = charpoly(&a);
                let mut acc = RadMatrix::zeros(3, 3);
                let mut power = RadMatrix::identity(3);
                for c in &coeffs {
                    acc = acc.add(&power.scale(c));
                    power = power.mul(&a);
                }
                prop_assert!(acc.is_zero());
            }

            /// Rank of A equals rank of its transpose.
            #[test]
            fn rank_transpose_invariant(a in small_matrix()) {
                prop_assert_eq!(a.rank().unwrap(), a.transpose().rank().unwrap());
            }

            /// Nullspace dimension complements the rank.
            #[test]
            fn rank_nullity(a in small_matrix()) {
                let rank = a.rank().unwrap();
                let null = a.nullspace().unwrap();
                prop_assert_eq!(rank + null.len(), 3);
                for v in &null {
                    prop_assert!(a.mul_vec(v).iter().all(RadicalScalar::is_zero));
                }
            }
        }
    }
}
