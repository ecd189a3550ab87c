//! The staircase `(n-1, ..., 1)` with every variable set to `q`. Its weight
//! at `(i,j)` is the q-Catalan polynomial of index `n + 2 - i - j`.

use crate::error::SnfError;
use crate::matrix::PolyMatrix;
use crate::partition::{Cell, Partition};
use crate::poly::UniPoly;
use crate::snf::{snf_inductive_with, snf_recurrence_with, Algorithm};
use crate::weight::{shape_weight, square_matrix_with, WeightCache};

/// The variable used when a univariate entry is embedded in `Z[x_ij]`.
pub const Q_CELL: Cell = Cell { row: 1, col: 1 };

/// `C_n(q)`: the uniform specialization of `P_11` of the staircase
/// `(n-1, ..., 1)`. `C_0 = C_1 = 1`.
pub fn q_catalan(n: usize) -> UniPoly {
    shape_weight(&Partition::staircase(n)).substitute_uniform()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCatalanTable {
    values: Vec<UniPoly>,
}

impl QCatalanTable {
    pub fn new(n_max: usize) -> Self {
        QCatalanTable { values: (0..=n_max).map(q_catalan).collect() }
    }

    pub fn get(&self, n: usize) -> &UniPoly {
        &self.values[n]
    }

    pub fn values(&self) -> &[UniPoly] {
        &self.values
    }
}

/// Side of `M_n`: `floor(n/2) + 1`.
pub fn staircase_side(n: usize) -> usize {
    n / 2 + 1
}

/// `M_n = [C_{n+2-i-j}(q)]` of side `floor(n/2) + 1`, with entries embedded
/// as polynomials in [`Q_CELL`].
pub fn staircase_matrix(n: usize) -> PolyMatrix {
    assert!(n >= 1, "M_n needs n >= 1");
    let side = staircase_side(n);
    let table = QCatalanTable::new(n);
    PolyMatrix::from_fn(side, side, |i, j| table.get(n - i - j).to_polynomial(Q_CELL))
}

/// Exponents of the diagonal of the normal form of `M_n`:
/// `C(n,2), C(n-2,2), ...` down to `0`.
pub fn expected_snf_exponents(n: usize) -> Vec<usize> {
    assert!(n >= 1, "M_n needs n >= 1");
    (0..staircase_side(n)).map(|t| binom2(n - 2 * t)).collect()
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Result of reducing the staircase and specializing to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseCheck {
    pub n: usize,
    pub expected: Vec<usize>,
    /// `Some(k)` where the specialized diagonal entry is `q^k`.
    pub found: Vec<Option<usize>>,
    /// The uniform specialization of `M(1,1)` equals [`staircase_matrix`].
    pub matrix_matches: bool,
}

impl StaircaseCheck {
    pub fn ok(&self) -> bool {
        self.matrix_matches
            && self.found.len() == self.expected.len()
            && self.found.iter().zip(&self.expected).all(|(f, e)| *f == Some(*e))
    }
}

/// Reduces `M(1,1)` of the staircase `(n-1, ..., 1)` with `algorithm` and
/// compares the specialized diagonal with [`expected_snf_exponents`].
pub fn check_staircase(cache: &WeightCache, n: usize, algorithm: Algorithm) -> Result<StaircaseCheck, SnfError> {
    let lambda = Partition::staircase(n);
    let side = lambda.rank() + 1;
    let result = match algorithm {
        Algorithm::Recurrence => snf_recurrence_with(cache, &lambda)?,
        Algorithm::Inductive => snf_inductive_with(cache, &lambda, side, side)?,
    };
    let specialized = square_matrix_with(cache, &lambda, Cell::new(1, 1))?
        .map(|p| p.substitute_uniform().to_polynomial(Q_CELL));
    Ok(StaircaseCheck {
        n,
        expected: expected_snf_exponents(n),
        found: result.diagonal.iter().map(|p| p.substitute_uniform().as_q_power()).collect(),
        matrix_matches: specialized == staircase_matrix(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_catalan(0), UniPoly::one());
        assert_eq!(q_catalan(1), UniPoly::one());
        assert_eq!(q_catalan(2), UniPoly::from_i64(&[1, 1]));
        assert_eq!(q_catalan(3), UniPoly::from_i64(&[1, 2, 1, 1]));
        assert_eq!(q_catalan(4).eval(&1.into()), 14.into());
    }

    #[test]
    fn matrices() {
        assert_eq!(staircase_matrix(1), PolyMatrix::identity(1));
        let m3 = staircase_matrix(3);
        assert_eq!(m3.rows(), 2);
        assert_eq!(m3[(0, 0)], q_catalan(3).to_polynomial(Q_CELL));
        assert_eq!(m3[(0, 1)], q_catalan(2).to_polynomial(Q_CELL));
        assert_eq!(m3[(1, 1)], q_catalan(1).to_polynomial(Q_CELL));
        let m4 = staircase_matrix(4);
        assert_eq!(m4.rows(), 3);
        assert_eq!(m4[(0, 0)], q_catalan(4).to_polynomial(Q_CELL));
        assert_eq!(m4[(2, 2)], q_catalan(0).to_polynomial(Q_CELL));
    }

    #[test]
    fn exponents() {
        assert_eq!(expected_snf_exponents(1), vec![0]);
        assert_eq!(expected_snf_exponents(3), vec![3, 0]);
        assert_eq!(expected_snf_exponents(4), vec![6, 1, 0]);
        assert_eq!(expected_snf_exponents(7), vec![21, 10, 3, 0]);
    }

    #[test]
    fn staircases_up_to_five() {
        let cache = WeightCache::new();
        for n in 1..=5 {
            for alg in [Algorithm::Recurrence, Algorithm::Inductive] {
                let check = check_staircase(&cache, n, alg).unwrap();
                assert!(check.ok(), "{check:?}");
            }
        }
    }
}
