//! Smith normal form of weight matrices over `Z[x_ij]`.
//!
//! Two constructions are provided, both producing an upper unitriangular `P`
//! and a lower unitriangular `Q` with `P * W * Q` zero except for monomials on
//! the diagonal that ends in the bottom-right corner of `W`:
//!
//! * [`snf_recurrence`] clears the first row of `M(1,1)` with the `tau`
//!   relation, clears the first column with the relation of the conjugate
//!   partition, and continues on the trailing block `M(2,2)`.
//! * [`snf_inductive`] handles any border rectangle `W_F` by induction on
//!   `|lambda|`, removing one corner square per level.
//!
//! Every result is checked by recomputing `P * W * Q` before it is returned.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::SnfError;
use crate::matrix::PolyMatrix;
use crate::par::Exec;
use crate::partition::{Cell, Partition};
use crate::poly::{Monomial, Polynomial};
use crate::recurrence::TauFamily;
use crate::weight::{leading_monomial, rect_weight_matrix_with, square_matrix_with, WeightCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Recurrence,
    Inductive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recurrence => "recurrence",
            Algorithm::Inductive => "inductive",
        }
    }
}

/// Certified transforms `P`, `Q` with `D = P * W * Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult {
    pub p: PolyMatrix,
    pub q: PolyMatrix,
    pub d: PolyMatrix,
    pub diagonal: Vec<Polynomial>,
    pub algorithm: Algorithm,
}

impl SnfResult {
    pub fn rows(&self) -> usize {
        self.p.rows()
    }

    pub fn cols(&self) -> usize {
        self.q.rows()
    }

    /// The diagonal as monomials; `None` if some entry is not a unit-coefficient
    /// monomial.
    pub fn monomial_diagonal(&self) -> Option<Vec<Monomial>> {
        self.diagonal.iter().map(|p| p.as_monomial().cloned()).collect()
    }
}

impl Serialize for SnfResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            diagonal: &'a [Polynomial],
            #[serde(rename = "P")]
            p: &'a PolyMatrix,
            #[serde(rename = "Q")]
            q: &'a PolyMatrix,
            verified: bool,
            algorithm: Algorithm,
        }
        Out { diagonal: &self.diagonal, p: &self.p, q: &self.q, verified: true, algorithm: self.algorithm }
            .serialize(s)
    }
}

/// Positions of the diagonal through the bottom-right corner of a
/// `rows x cols` matrix: `(0 | diag)` when `rows <= cols`, `(0 ; diag)`
/// otherwise.
pub fn diagonal_positions(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let (dr, dc) = (rows.saturating_sub(cols), cols.saturating_sub(rows));
    (0..rows.min(cols)).map(|t| (t + dr, t + dc)).collect()
}

/// The matrix that is zero except for `diagonal` on [`diagonal_positions`].
pub fn normal_form_matrix(rows: usize, cols: usize, diagonal: &[Polynomial]) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(rows, cols);
    for (&(i, j), p) in diagonal_positions(rows, cols).iter().zip(diagonal) {
        out[(i, j)] = p.clone();
    }
    out
}

/// Outcome of [`verify_snf`].
#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub ok: bool,
    pub reason: Option<String>,
    /// `P * W * Q` minus the claimed normal form.
    pub residual: PolyMatrix,
}

/// Checks the shapes of `P` and `Q` and recomputes `P * W * Q`.
pub fn verify_snf(w: &PolyMatrix, r: &SnfResult) -> Result<Verification, SnfError> {
    verify_parts(w, &r.p, &r.q, &r.diagonal)
}

fn verify_parts(
    w: &PolyMatrix,
    p: &PolyMatrix,
    q: &PolyMatrix,
    diagonal: &[Polynomial],
) -> Result<Verification, SnfError> {
    if p.rows() != w.rows() || p.cols() != w.rows() || q.rows() != w.cols() || q.cols() != w.cols() {
        return Err(SnfError::DimensionMismatch(format!(
            "W is {}x{}, P is {}x{}, Q is {}x{}",
            w.rows(),
            w.cols(),
            p.rows(),
            p.cols(),
            q.rows(),
            q.cols()
        )));
    }
    if diagonal.len() != w.rows().min(w.cols()) {
        return Err(SnfError::DimensionMismatch(format!(
            "diagonal has {} entries for a {}x{} matrix",
            diagonal.len(),
            w.rows(),
            w.cols()
        )));
    }
    let pwq = p.try_mul(w, Exec::default())?.try_mul(q, Exec::default())?;
    let expected = normal_form_matrix(w.rows(), w.cols(), diagonal);
    let residual = PolyMatrix::from_fn(w.rows(), w.cols(), |i, j| &pwq[(i, j)] - &expected[(i, j)]);
    let reason = if !p.is_upper_unitriangular() {
        Some("P is not upper unitriangular".to_string())
    } else if !q.is_lower_unitriangular() {
        Some("Q is not lower unitriangular".to_string())
    } else if residual.entries().any(|(_, e)| !e.is_zero()) {
        Some("P*W*Q differs from the normal form".to_string())
    } else {
        None
    };
    Ok(Verification { ok: reason.is_none(), reason, residual })
}

fn certify(w: &PolyMatrix, p: PolyMatrix, q: PolyMatrix, diagonal: Vec<Polynomial>, algorithm: Algorithm) -> Result<SnfResult, SnfError> {
    let v = verify_parts(w, &p, &q, &diagonal)?;
    if let Some(reason) = v.reason {
        return Err(SnfError::VerificationFailed { reason, residual: Some(Box::new(v.residual)) });
    }
    let d = normal_form_matrix(w.rows(), w.cols(), &diagonal);
    Ok(SnfResult { p, q, d, diagonal, algorithm })
}

/// Normal form of `M(1,1)` through the `tau` row relation.
pub fn snf_recurrence(lambda: &Partition) -> Result<SnfResult, SnfError> {
    snf_recurrence_with(&WeightCache::new(), lambda)
}

pub fn snf_recurrence_with(cache: &WeightCache, lambda: &Partition) -> Result<SnfResult, SnfError> {
    let w = square_matrix_with(cache, lambda, Cell::new(1, 1))?;
    let rank = lambda.rank();
    let n = rank + 1;
    let mut m = w.clone();
    let mut p = PolyMatrix::identity(n);
    let mut q = PolyMatrix::identity(n);

    for k in 0..rank {
        // the trailing block is M(k+1,k+1) = M(1,1) of lambda(k+1,k+1)
        let sub = lambda.region(Cell::new(k + 1, k + 1));
        debug_assert_eq!(sub.rank(), rank - k);
        let rows = TauFamily::new(&sub);
        let cols = TauFamily::new(&sub.conjugate());
        for i in 1..=rank - k {
            let f = rows.signed(i).shift(k, k);
            m.add_row_multiple(k, k + i, &f);
            p.add_row_multiple(k, k + i, &f);
        }
        for i in 1..=rank - k {
            let f = cols.signed(i).transpose_vars().shift(k, k);
            m.add_col_multiple(k, k + i, &f);
            q.add_col_multiple(k, k + i, &f);
        }
    }

    let diagonal: Vec<Polynomial> = (0..n).map(|k| m[(k, k)].clone()).collect();
    certify(&w, p, q, diagonal, Algorithm::Recurrence)
}

/// Normal form of the border rectangle `W_F` with corner `(rows, cols)`.
pub fn snf_inductive(lambda: &Partition, rows: usize, cols: usize) -> Result<SnfResult, SnfError> {
    snf_inductive_with(&WeightCache::new(), lambda, rows, cols)
}

pub fn snf_inductive_with(
    cache: &WeightCache,
    lambda: &Partition,
    rows: usize,
    cols: usize,
) -> Result<SnfResult, SnfError> {
    let w = rect_weight_matrix_with(cache, lambda, rows, cols)?;
    let (p, q, diagonal) = induct(cache, lambda, rows, cols)?;
    certify(&w, p, q, diagonal, Algorithm::Inductive)
}

type Transforms = (PolyMatrix, PolyMatrix, Vec<Polynomial>);

fn induct(cache: &WeightCache, lambda: &Partition, d: usize, e: usize) -> Result<Transforms, SnfError> {
    let weight = |c: Cell| cache.weight(lambda, c);

    if d == 1 {
        // subtract multiples of the last column, whose only entry is P_1e = 1
        let mut q = PolyMatrix::identity(e);
        for j in 0..e - 1 {
            q[(e - 1, j)] = -weight(Cell::new(1, j + 1))?;
        }
        return Ok((PolyMatrix::identity(1), q, vec![Polynomial::one()]));
    }
    if e == 1 {
        let mut p = PolyMatrix::identity(d);
        for i in 0..d - 1 {
            p[(i, d - 1)] = -weight(Cell::new(i + 1, 1))?;
        }
        return Ok((p, PolyMatrix::identity(1), vec![Polynomial::one()]));
    }

    let corner = Cell::new(d, e);
    let mut corners = lambda.removable_corners()?;
    corners.reverse();
    let removable = corners.into_iter().find(|&s| lambda.remove_corner(s).in_extended(corner));

    match removable {
        Some(s) => remove_square(cache, lambda, s, d, e),
        None => close_rectangle(cache, lambda, d, e),
    }
}

/// A corner `s = (a,b)` can be removed while keeping the rectangle inside the
/// extended diagram of `lambda \ s`.
fn remove_square(cache: &WeightCache, lambda: &Partition, s: Cell, d: usize, e: usize) -> Result<Transforms, SnfError> {
    let small = lambda.remove_corner(s);
    let (u, v, mut diagonal) = induct(cache, &small, d, e)?;
    let (a, b) = (s.row, s.col);
    let z = Monomial::var(s);
    let diag_cells = diagonal_positions(d, e);

    if a < d && b >= e {
        // Rows 1..=a of W' are z*W + P_{i,b+1} * (row a+1 of W); clear the
        // second summand with row a+1.
        let mut op = PolyMatrix::identity(d);
        for i in 1..=a {
            let c = Cell::new(i, b + 1);
            if !lambda.in_extended(c) {
                return Err(SnfError::Geometry(format!("{c} lies outside the extended diagram of {lambda}")));
            }
            op[(i - 1, a)] = -cache.region_weight(&small, c);
        }
        // U' W1' = diag(z,..,z,1,..,1) U W
        let mut u = u;
        for i in 0..a {
            for j in a..d {
                u[(i, j)] = u[(i, j)].mul_monomial(&z);
            }
        }
        for (t, &(i, _)) in diag_cells.iter().enumerate() {
            if i < a {
                diagonal[t] = diagonal[t].mul_monomial(&z);
            }
        }
        Ok((u.mul(&op), v, diagonal))
    } else if a >= d && b < e {
        // column form of the same step
        let mut op = PolyMatrix::identity(e);
        for j in 1..=b {
            let c = Cell::new(a + 1, j);
            if !lambda.in_extended(c) {
                return Err(SnfError::Geometry(format!("{c} lies outside the extended diagram of {lambda}")));
            }
            op[(b, j - 1)] = -cache.region_weight(&small, c);
        }
        let mut v = v;
        for i in b..e {
            for j in 0..b {
                v[(i, j)] = v[(i, j)].mul_monomial(&z);
            }
        }
        for (t, &(_, j)) in diag_cells.iter().enumerate() {
            if j < b {
                diagonal[t] = diagonal[t].mul_monomial(&z);
            }
        }
        Ok((u, op.mul(&v), diagonal))
    } else {
        Err(SnfError::Geometry(format!(
            "removed square {s} is neither above-right nor below-left of corner ({d},{e})"
        )))
    }
}

/// `lambda` is a `(d-1) x (e-1)` rectangle and the matrix is all of `lambda*`.
fn close_rectangle(cache: &WeightCache, lambda: &Partition, d: usize, e: usize) -> Result<Transforms, SnfError> {
    if *lambda != Partition::rectangle(d - 1, e - 1) {
        return Err(SnfError::Geometry(format!(
            "no corner of {lambda} can be removed and it is not the ({},{}) rectangle",
            d - 1,
            e - 1
        )));
    }
    let s = Cell::new(d - 1, e - 1);
    let small = lambda.remove_corner(s);
    let (u, v, diagonal) = induct(cache, &small, d - 1, e - 1)?;
    let z = Monomial::var(s);

    let mut row_op = PolyMatrix::identity(d);
    for i in 0..d - 1 {
        row_op[(i, d - 1)] = Polynomial::constant(-1);
    }
    let mut col_op = PolyMatrix::identity(e);
    for j in 0..e - 1 {
        col_op[(e - 1, j)] = Polynomial::constant(-1);
    }
    let mut diagonal: Vec<Polynomial> = diagonal.iter().map(|p| p.mul_monomial(&z)).collect();
    diagonal.push(Polynomial::one());
    Ok((u.extend_by_one().mul(&row_op), col_op.mul(&v.extend_by_one()), diagonal))
}

/// The expected diagonal `A_{i,j}` along [`diagonal_positions`].
pub fn expected_diagonal(lambda: &Partition, rows: usize, cols: usize) -> Result<Vec<Polynomial>, SnfError> {
    diagonal_positions(rows, cols)
        .into_iter()
        .map(|(i, j)| Ok(leading_monomial(lambda, Cell::new(i + 1, j + 1))?))
        .collect()
}

/// Largest side accepted by [`determinant`].
pub const MAX_DETERMINANT_SIDE: usize = 8;

/// Exact determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns.
pub fn determinant(w: &PolyMatrix) -> Result<Polynomial, SnfError> {
    if !w.is_square() {
        return Err(SnfError::NotSquare { rows: w.rows(), cols: w.cols() });
    }
    let n = w.rows();
    if n > MAX_DETERMINANT_SIDE {
        return Err(SnfError::TooLarge { side: n, max: MAX_DETERMINANT_SIDE });
    }
    fn minor(w: &PolyMatrix, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        if cols == 0 {
            return Polynomial::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = w.rows() - cols.count_ones() as usize;
        let mut acc = Polynomial::zero();
        let mut sign_negative = false;
        for j in 0..w.cols() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = &w[(row, j)];
            if !entry.is_zero() {
                let term = entry * &minor(w, cols & !(1 << j), memo);
                if sign_negative {
                    acc -= &term;
                } else {
                    acc += &term;
                }
            }
            sign_negative = !sign_negative;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    Ok(minor(w, (1u32 << n) - 1, &mut HashMap::new()))
}
