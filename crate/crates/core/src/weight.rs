//! Weight polynomials `P_rs`, their top monomials `A_rs`, and the weight
//! matrices read off the extended diagram.
//!
//! `P_rs` sums, over every partition `mu` inside `lambda(r,s)`, the product
//! of the variables on the skew cells `lambda(r,s) \ mu`. Variables keep the
//! absolute coordinates of `lambda`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{PartitionError, SnfError};
use crate::matrix::PolyMatrix;
use crate::partition::{Cell, Partition};
use crate::poly::{Monomial, Polynomial};

/// Skew-cell monomial of `outer \ inner`, with `outer`'s cell `(1,1)` placed
/// at `origin`.
fn skew_monomial(outer: &Partition, inner: &Partition, origin: Cell) -> Monomial {
    Monomial::product_of((1..=outer.len()).flat_map(|k| {
        (inner.part(k) + 1..=outer.part(k)).map(move |c| Cell::new(k, c).shifted(origin.row - 1, origin.col - 1))
    }))
}

/// Generating function of the skew diagrams `shape \ mu` in the shape's own
/// coordinates.
pub fn shape_weight(shape: &Partition) -> Polynomial {
    Polynomial::from_terms(
        shape
            .contained_partitions()
            .map(|mu| (skew_monomial(shape, &mu, Cell::new(1, 1)), 1.into())),
    )
}

/// `P_rs` by direct enumeration. Defined on the extended diagram; `1` on
/// the border strip.
pub fn weight_polynomial(lambda: &Partition, c: Cell) -> Result<Polynomial, PartitionError> {
    let shape = lambda.subdiagram(c)?;
    Ok(Polynomial::from_terms(
        shape.contained_partitions().map(|mu| (skew_monomial(&shape, &mu, c), 1.into())),
    ))
}

/// `A_rs`: the product of all variables of `lambda(r,s)`.
pub fn leading_monomial(lambda: &Partition, c: Cell) -> Result<Polynomial, PartitionError> {
    let shape = lambda.subdiagram(c)?;
    Ok(Polynomial::monomial(skew_monomial(&shape, &Partition::empty(), c)))
}

/// Memo of shape weights keyed by the shape `lambda(r,s)`, which repeats
/// heavily across cells and across the partitions met in the inductive SNF.
#[derive(Debug, Default)]
pub struct WeightCache {
    shapes: Mutex<HashMap<Partition, Arc<Polynomial>>>,
}

impl WeightCache {
    pub fn new() -> Self {
        WeightCache::default()
    }

    fn shape(&self, shape: Partition) -> Arc<Polynomial> {
        if let Some(p) = self.shapes.lock().unwrap().get(&shape) {
            return Arc::clone(p);
        }
        // computed outside the lock; a racing insert stores an equal value
        let p = Arc::new(shape_weight(&shape));
        Arc::clone(self.shapes.lock().unwrap().entry(shape).or_insert(p))
    }

    /// Memoized `P_rs`; same contract as [`weight_polynomial`].
    pub fn weight(&self, lambda: &Partition, c: Cell) -> Result<Polynomial, PartitionError> {
        let shape = lambda.subdiagram(c)?;
        Ok(self.shape(shape).shift(c.row - 1, c.col - 1))
    }

    /// Weight of the region `{(u,v) in lambda : u >= r, v >= s}` for any
    /// cell, including cells outside the extended diagram (where the region
    /// is empty and the weight is `1`).
    pub fn region_weight(&self, lambda: &Partition, c: Cell) -> Polynomial {
        let shape = lambda.region(c);
        if shape.is_empty() {
            return Polynomial::one();
        }
        self.shape(shape).shift(c.row - 1, c.col - 1)
    }

    pub fn len(&self) -> usize {
        self.shapes.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `M(i,j)`: the `(rank(lambda(i,j)) + 1)`-square of weights with top-left
/// corner `c`.
pub fn square_matrix(lambda: &Partition, c: Cell) -> Result<PolyMatrix, SnfError> {
    square_matrix_with(&WeightCache::new(), lambda, c)
}

pub fn square_matrix_with(cache: &WeightCache, lambda: &Partition, c: Cell) -> Result<PolyMatrix, SnfError> {
    let m = lambda.subdiagram(c)?.rank() + 1;
    let corner = c.shifted(m - 1, m - 1);
    if !lambda.on_border(corner) {
        return Err(SnfError::Geometry(format!(
            "square at {c} of side {m} ends at {corner}, which is not a border cell of {lambda}"
        )));
    }
    block(cache, lambda, c, m, m)
}

/// `W_F` for the `rows x cols` rectangle anchored at `(1,1)`. The corner
/// `(rows, cols)` must lie on the border strip.
pub fn rect_weight_matrix(lambda: &Partition, rows: usize, cols: usize) -> Result<PolyMatrix, SnfError> {
    rect_weight_matrix_with(&WeightCache::new(), lambda, rows, cols)
}

pub fn rect_weight_matrix_with(
    cache: &WeightCache,
    lambda: &Partition,
    rows: usize,
    cols: usize,
) -> Result<PolyMatrix, SnfError> {
    if rows == 0 || cols == 0 || !lambda.on_border(Cell::new(rows, cols)) {
        return Err(SnfError::InvalidRectangle { rows, cols });
    }
    block(cache, lambda, Cell::new(1, 1), rows, cols)
}

fn block(cache: &WeightCache, lambda: &Partition, origin: Cell, rows: usize, cols: usize) -> Result<PolyMatrix, SnfError> {
    let mut entries = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            row.push(cache.weight(lambda, origin.shifted(i, j))?);
        }
        entries.push(row);
    }
    Ok(PolyMatrix::from_rows(entries).with_origin(origin))
}

/// Every corner `(d,e)` on the border strip, i.e. every rectangle for which
/// `W_F` is defined.
pub fn border_rectangles(lambda: &Partition) -> Vec<(usize, usize)> {
    lambda.extended().border().iter().map(|c| (c.row, c.col)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Naming;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn render(poly: &Polynomial, lambda: &Partition) -> String {
        poly.render(&Naming::letters(lambda).unwrap()).unwrap()
    }

    #[test]
    fn three_two_weights() {
        let lam = p(&[3, 2]);
        let w = |r, c| render(&weight_polynomial(&lam, Cell::new(r, c)).unwrap(), &lam);
        assert_eq!(w(1, 1), "abcde+bcde+bce+cde+ce+de+c+e+1");
        assert_eq!(w(1, 2), "bce+ce+c+e+1");
        assert_eq!(w(1, 3), "c+1");
        assert_eq!(w(2, 1), "de+e+1");
        assert_eq!(w(2, 2), "e+1");
        for c in lam.extended().border() {
            assert_eq!(w(c.row, c.col), "1");
        }
        assert!(weight_polynomial(&lam, Cell::new(4, 1)).is_err());
    }

    #[test]
    fn leading_monomials() {
        let lam = p(&[3, 2]);
        let a = |r, c| render(&leading_monomial(&lam, Cell::new(r, c)).unwrap(), &lam);
        assert_eq!(a(1, 1), "abcde");
        assert_eq!(a(1, 2), "bce");
        assert_eq!(a(1, 3), "c");
        assert_eq!(a(2, 1), "de");
        assert_eq!(a(2, 2), "e");
        assert_eq!(a(3, 3), "1");
    }

    #[test]
    fn square_matrices() {
        let lam = p(&[3, 2]);
        let m = square_matrix(&lam, Cell::new(1, 1)).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        let text = m.render(&Naming::letters(&lam).unwrap()).unwrap();
        assert_eq!(
            text,
            vec![
                vec!["abcde+bcde+bce+cde+ce+de+c+e+1", "bce+ce+c+e+1", "c+1"],
                vec!["de+e+1", "e+1", "1"],
                vec!["1", "1", "1"],
            ]
        );
        let m22 = square_matrix(&lam, Cell::new(2, 2)).unwrap();
        assert_eq!(m22.render(&Naming::letters(&lam).unwrap()).unwrap(), vec![vec!["e+1", "1"], vec!["1", "1"]]);
        assert_eq!(m22.origin(), Cell::new(2, 2));
        let empty = square_matrix(&Partition::empty(), Cell::new(1, 1)).unwrap();
        assert_eq!(empty, PolyMatrix::identity(1));
    }

    #[test]
    fn rectangles() {
        let lam = p(&[3, 2]);
        assert_eq!(rect_weight_matrix(&lam, 3, 3).unwrap(), square_matrix(&lam, Cell::new(1, 1)).unwrap());
        let row = rect_weight_matrix(&lam, 1, 4).unwrap();
        assert!(row[(0, 3)].is_one());
        let r23 = rect_weight_matrix(&lam, 2, 3).unwrap();
        assert_eq!(
            r23.render(&Naming::letters(&lam).unwrap()).unwrap(),
            vec![
                vec!["abcde+bcde+bce+cde+ce+de+c+e+1", "bce+ce+c+e+1", "c+1"],
                vec!["de+e+1", "e+1", "1"],
            ]
        );
        assert_eq!(rect_weight_matrix(&lam, 2, 2), Err(SnfError::InvalidRectangle { rows: 2, cols: 2 }));
        assert_eq!(rect_weight_matrix(&lam, 0, 4), Err(SnfError::InvalidRectangle { rows: 0, cols: 4 }));
    }

    #[test]
    fn weights_are_multilinear_with_unit_coefficients() {
        let cache = WeightCache::new();
        for lam in Partition::all_up_to_size(9) {
            for &c in lam.extended().cells() {
                let direct = weight_polynomial(&lam, c).unwrap();
                assert_eq!(cache.weight(&lam, c).unwrap(), direct);
                let shape = lam.subdiagram(c).unwrap();
                assert_eq!(direct.evaluate_all_ones(), shape.contained_partitions().count().into());
                assert!(direct.terms().all(|(m, k)| *k == 1.into() && m.max_exponent() <= 1));
                let top = direct.top_degree_terms();
                assert_eq!(top.len(), 1);
                assert_eq!(Polynomial::monomial(top[0].0.clone()), leading_monomial(&lam, c).unwrap());
                assert_eq!(top[0].0.degree() as usize, shape.size());
                let m = square_matrix_with(&cache, &lam, c).unwrap();
                assert_eq!(m.rows(), shape.rank() + 1);
            }
        }
    }

    #[test]
    fn region_weight_outside_diagram() {
        let cache = WeightCache::new();
        let lam = p(&[2]);
        assert!(cache.region_weight(&lam, Cell::new(1, 4)).is_one());
        assert_eq!(cache.region_weight(&lam, Cell::new(1, 2)), weight_polynomial(&lam, Cell::new(1, 2)).unwrap());
    }
}
