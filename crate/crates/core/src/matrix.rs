//! Dense matrices with polynomial entries.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{PolyError, SnfError};
use crate::par::{self, Exec};
use crate::partition::Cell;
use crate::poly::{Naming, Polynomial};

/// Row-major matrix of polynomials. `origin` records which cell of the
/// extended diagram entry `(0,0)` was read from; transforms use `(1,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    origin: Cell,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            origin: Cell::new(1, 1),
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Polynomial::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut f = f;
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        PolyMatrix { rows, cols, origin: Cell::new(1, 1), entries }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        PolyMatrix { rows: n, cols: m, origin: Cell::new(1, 1), entries: rows.into_iter().flatten().collect() }
    }

    pub fn with_origin(mut self, origin: Cell) -> Self {
        self.origin = origin;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn origin(&self) -> Cell {
        self.origin
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        self.entries.iter().enumerate().map(|(k, p)| ((k / self.cols, k % self.cols), p))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone());
        t.origin = self.origin.transpose();
        t
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            origin: self.origin,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Block `rows x cols` starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
            .with_origin(self.origin.shifted(r0, c0))
    }

    /// `[[self, 0], [0, 1]]`.
    pub fn extend_by_one(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows + 1, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out[(self.rows, self.cols)] = Polynomial::one();
        out
    }

    pub fn try_mul(&self, rhs: &PolyMatrix, exec: Exec) -> Result<PolyMatrix, SnfError> {
        if self.cols != rhs.rows {
            return Err(SnfError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let (n, m, k) = (self.rows, rhs.cols, self.cols);
        let entries = par::map_range(exec, n * m, |idx| {
            let (i, j) = (idx / m, idx % m);
            let mut acc = Polynomial::zero();
            for t in 0..k {
                let (a, b) = (&self[(i, t)], &rhs[(t, j)]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += &a.mul_exec(b, Exec::Sequential);
            }
            acc
        });
        Ok(PolyMatrix { rows: n, cols: m, origin: Cell::new(1, 1), entries })
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs, Exec::default()).expect("dimension mismatch")
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && self.entries().all(|((i, j), p)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => p.is_one(),
                std::cmp::Ordering::Greater => p.is_zero(),
                std::cmp::Ordering::Less => true,
            })
    }

    /// Lower triangular with ones on the diagonal.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// `row[target] += factor * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Polynomial) {
        debug_assert_ne!(target, source);
        for j in 0..self.cols {
            let delta = &self[(source, j)] * factor;
            self[(target, j)] += &delta;
        }
    }

    /// `col[target] += factor * col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Polynomial) {
        debug_assert_ne!(target, source);
        for i in 0..self.rows {
            let delta = &self[(i, source)] * factor;
            self[(i, target)] += &delta;
        }
    }

    pub fn render(&self, naming: &Naming) -> Result<Vec<Vec<String>>, PolyError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.render(naming)).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Polynomial;
    fn index(&self, (i, j): (usize, usize)) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self.render(&Naming::Coords).map_err(|_| fmt::Error)?;
        for row in rendered {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    origin: [usize; 2],
    entries: Vec<Vec<Polynomial>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            origin: [self.origin.row, self.origin.col],
            entries: (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom("entries do not match rows/cols"));
        }
        if raw.origin[0] == 0 || raw.origin[1] == 0 {
            return Err(D::Error::custom("origin is 1-indexed"));
        }
        Ok(PolyMatrix {
            rows: raw.rows,
            cols: raw.cols,
            origin: Cell::new(raw.origin[0], raw.origin[1]),
            entries: raw.entries.into_iter().flatten().collect(),
        })
    }
}
