//! Dense matrices over GF(p^m) with exact Gaussian elimination.
//!
//! Entries live in a shared field context, so every operation is exact;
//! rank, row spaces, and nullspaces are discrete invariants with no
//! tolerance knobs. Matrices serialize to a plain text format whose first
//! line is `p e c rows cols`, followed by one line of space-separated
//! integer encodings per row.

use std::io::{self, BufRead, Write};
use std::ops::{Index, IndexMut};
use std::sync::Arc;
use thiserror::Error;

use crate::field::{field_new, Fe, FieldCtx, FieldError};

#[derive(Error, Debug)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrices live over different fields")]
    FieldMismatch,
    #[error("bad matrix file: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A rows-by-cols matrix over the field of `ctx`, row-major.
#[derive(Clone, Debug)]
pub struct GfMatrix {
    ctx: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Index<(usize, usize)> for GfMatrix {
    type Output = Fe;
    fn index(&self, (r, c): (usize, usize)) -> &Fe {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for GfMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fe {
        &mut self.data[r * self.cols + c]
    }
}

impl PartialEq for GfMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_field(&other.ctx)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl GfMatrix {
    pub fn zeros(ctx: Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        GfMatrix {
            ctx,
            rows,
            cols,
            data: vec![Fe(0); rows * cols],
        }
    }

    pub fn identity(ctx: Arc<FieldCtx>, n: usize) -> Self {
        let mut m = GfMatrix::zeros(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = Fe(1);
        }
        m
    }

    /// Builds a matrix from row vectors, which must all share one length.
    pub fn from_rows(ctx: Arc<FieldCtx>, rows: Vec<Vec<Fe>>, cols: usize) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    row.len(),
                    cols
                )));
            }
            data.extend(row);
        }
        Ok(GfMatrix {
            ctx,
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == Fe(0))
    }

    /// Exact rank by Gaussian elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref().0
    }

    /// In-place reduced row echelon form. Returns the rank and the pivot
    /// column of each leading row.
    fn rref(&mut self) -> (usize, Vec<usize>) {
        let ctx = self.ctx.clone();
        let mut rank = 0usize;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| self[(r, col)] != Fe(0)) else {
                continue;
            };
            self.swap_rows(rank, pivot_row);
            let inv = ctx.inv(self[(rank, col)]).expect("pivot is nonzero");
            for c in col..self.cols {
                self[(rank, c)] = ctx.mul(self[(rank, c)], inv);
            }
            for r in 0..self.rows {
                if r == rank || self[(r, col)] == Fe(0) {
                    continue;
                }
                let factor = self[(r, col)];
                for c in col..self.cols {
                    let delta = ctx.mul(factor, self[(rank, c)]);
                    self[(r, c)] = ctx.sub(self[(r, c)], delta);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// The product A * B^T; both matrices must have the same column count.
    pub fn mul_transpose(&self, other: &GfMatrix) -> Result<GfMatrix, LinalgError> {
        if !self.ctx.same_field(&other.ctx) {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ctx = &self.ctx;
        let mut out = GfMatrix::zeros(self.ctx.clone(), self.rows, other.rows);
        for r in 0..self.rows {
            for r2 in 0..other.rows {
                let mut acc = Fe(0);
                for c in 0..self.cols {
                    acc = ctx.add(acc, ctx.mul(self[(r, c)], other[(r2, c)]));
                }
                out[(r, r2)] = acc;
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &GfMatrix) -> Result<GfMatrix, LinalgError> {
        if !self.ctx.same_field(&other.ctx) {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GfMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Whether the two row spaces coincide, decided by three exact rank
    /// computations: equal spaces means neither stacking changes the rank.
    pub fn row_space_equal(&self, other: &GfMatrix) -> Result<bool, LinalgError> {
        let ra = self.rank();
        let rb = other.rank();
        if ra != rb {
            return Ok(false);
        }
        Ok(self.stack(other)?.rank() == ra)
    }

    /// A basis of the right nullspace { x : A x = 0 }, one vector per row.
    pub fn nullspace(&self) -> GfMatrix {
        let ctx = self.ctx.clone();
        let mut work = self.clone();
        let (rank, pivots) = work.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = GfMatrix::zeros(ctx.clone(), free.len(), self.cols);
        for (row_idx, &f) in free.iter().enumerate() {
            out[(row_idx, f)] = Fe(1);
            for (lead, &p) in pivots.iter().enumerate().take(rank) {
                out[(row_idx, p)] = ctx.neg(work[(lead, f)]);
            }
        }
        out
    }

    /// Scales column j by weights[j]; the diagonal action on codewords.
    pub fn scale_cols(&self, weights: &[Fe]) -> Result<GfMatrix, LinalgError> {
        if weights.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} weights for {} columns",
                weights.len(),
                self.cols
            )));
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self.ctx.mul(out[(r, c)], weights[c]);
            }
        }
        Ok(out)
    }

    /// Writes the text format: `p e c rows cols`, then one row per line.
    pub fn write_to<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(
            w,
            "{} {} {} {} {}",
            self.ctx.p(),
            self.ctx.e(),
            self.ctx.c(),
            self.rows,
            self.cols
        )?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.0.to_string()).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Parses the text format written by [`GfMatrix::write_to`].
    pub fn read_from<R: BufRead>(r: R) -> Result<GfMatrix, LinalgError> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| LinalgError::Parse("empty input".into()))??;
        let head: Vec<u64> = header
            .split_whitespace()
            .map(|tok| tok.parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|e| LinalgError::Parse(format!("bad header: {e}")))?;
        let [p, e, c, rows, cols] = head[..] else {
            return Err(LinalgError::Parse(
                "header must be `p e c rows cols`".into(),
            ));
        };
        let ctx = Arc::new(field_new(p, e as u32, c as u32)?);
        let mut data = Vec::with_capacity((rows * cols) as usize);
        for _ in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| LinalgError::Parse("missing matrix row".into()))??;
            let mut n = 0usize;
            for tok in line.split_whitespace() {
                let enc: u32 = tok
                    .parse()
                    .map_err(|e| LinalgError::Parse(format!("bad entry: {e}")))?;
                if enc >= ctx.size() {
                    return Err(LinalgError::Parse(format!(
                        "entry {enc} outside field of size {}",
                        ctx.size()
                    )));
                }
                data.push(Fe(enc));
                n += 1;
            }
            if n != cols as usize {
                return Err(LinalgError::Parse(format!(
                    "row has {n} entries, expected {cols}"
                )));
            }
        }
        Ok(GfMatrix {
            ctx,
            rows: rows as usize,
            cols: cols as usize,
            data,
        })
    }
}
