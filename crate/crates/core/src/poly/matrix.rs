//! Fraction-free linear algebra over Z[q].
//!
//! All elimination goes through [`bareiss_forward`], which keeps every entry
//! in Z[q]: the update `(a_ij * a_kk - a_ik * a_kj) / a_{k-1,k-1}` divides
//! exactly by Sylvester's identity. A nonzero remainder there means the
//! arithmetic itself is broken, so it panics rather than returning an error.

use super::polynomial::IntPoly;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// A dense matrix of integer polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<IntPoly>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        let data = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        PolyMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                IntPoly::one()
            } else {
                IntPoly::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.data[i * self.cols + j]
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    fn to_rows(&self) -> Vec<Vec<IntPoly>> {
        self.data
            .chunks(self.cols.max(1))
            .map(<[IntPoly]>::to_vec)
            .take(self.rows)
            .collect()
    }

    /// `[[M, 1], [1^T, 0]]`.
    fn bordered(&self) -> PolyMatrix {
        let n = self.rows;
        Self::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => IntPoly::zero(),
            _ => IntPoly::one(),
        })
    }

    /// Exact determinant by Bareiss elimination.
    pub fn determinant(&self) -> Result<IntPoly> {
        let n = self.require_square()?;
        let mut a = self.to_rows();
        Ok(match bareiss_forward(&mut a, n) {
            None => IntPoly::zero(),
            Some(negated) => signed_last_pivot(&a, n, negated),
        })
    }

    /// `(det M, sum of all entries of adj M)`.
    ///
    /// The adjugate sum comes from one bordered determinant:
    /// `det [[M, 1], [1^T, 0]] = -1^T adj(M) 1`.
    pub fn det_and_adjugate_sum(&self) -> Result<(IntPoly, IntPoly)> {
        self.require_square()?;
        let det = self.determinant()?;
        let adj_sum = -self.bordered().determinant()?;
        Ok((det, adj_sum))
    }

    /// Solution `w` of `M w = 1` by Cramer's rule, i.e. the row sums of
    /// `adj(M) / det(M)`.
    ///
    /// One fraction-free pass over `[M | 1]` followed by fraction-free back
    /// substitution; each `X_i = det * w_i` is a polynomial, so the
    /// back-substitution divisions are exact as well.
    pub fn cramer_row_sums(&self) -> Result<Vec<RationalFunction>> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut a: Vec<Vec<IntPoly>> = self
            .to_rows()
            .into_iter()
            .map(|mut row| {
                row.push(IntPoly::one());
                row
            })
            .collect();
        if bareiss_forward(&mut a, n).is_none() {
            return Err(Error::Singular);
        }
        let det = a[n - 1][n - 1].clone();
        let mut scaled = vec![IntPoly::zero(); n];
        scaled[n - 1] = a[n - 1][n].clone();
        for i in (0..n - 1).rev() {
            let mut acc = &det * &a[i][n];
            for j in i + 1..n {
                acc -= &(&a[i][j] * &scaled[j]);
            }
            scaled[i] = acc
                .exact_div(&a[i][i])
                .expect("fraction-free back substitution must divide exactly");
        }
        scaled
            .into_iter()
            .map(|x| RationalFunction::new(x, det.clone()))
            .collect()
    }
}

fn signed_last_pivot(a: &[Vec<IntPoly>], n: usize, negated: bool) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let d = a[n - 1][n - 1].clone();
    if negated {
        -d
    } else {
        d
    }
}

/// Bareiss forward elimination on the first `n` columns of `a` (which may
/// carry extra right-hand-side columns). Returns `None` if a pivot column is
/// entirely zero, otherwise whether an odd number of row swaps occurred.
///
/// On success `a[n-1][n-1]` is `±det` of the leading `n x n` block.
pub fn bareiss_forward(a: &mut [Vec<IntPoly>], n: usize) -> Option<bool> {
    let width = a.first().map_or(0, Vec::len);
    let mut prev = IntPoly::one();
    let mut negated = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, swap);
            negated = !negated;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut().take(n - k - 1) {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..width {
                let t = if lead.is_zero() {
                    &row[j] * pivot
                } else {
                    &row[j] * pivot - &lead * &pivot_row[j]
                };
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.exact_div(&prev)
                        .expect("Bareiss elimination step must divide exactly")
                };
            }
        }
        prev = a[k][k].clone();
    }
    Some(negated)
}
