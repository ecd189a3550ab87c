//! The row relation among weight polynomials: for `1 <= j <= rank + 1`,
//!
//! ```text
//! tau_0 P_{1j} - tau_1 P_{2j} + ... + (-1)^rank tau_rank P_{rank+1,j}
//!     = A_11 if j = 1, and 0 otherwise.
//! ```
//!
//! `tau_i = Omega_i * prod(S_i)`, where `Omega_i` enumerates the
//! upper-right-justified staircase fillings of the array `R_i`.

use std::collections::BTreeSet;

use crate::error::RecurrenceError;
use crate::partition::{Cell, Partition};
use crate::poly::{Monomial, Polynomial};
use crate::weight::WeightCache;

fn check_index(lambda: &Partition, i: usize, min: usize) -> Result<(), RecurrenceError> {
    let max = lambda.rank();
    if i < min || i > max {
        return Err(RecurrenceError::IndexOutOfRange { index: i, max });
    }
    Ok(())
}

/// The array `R_i`: row `a` (for `1 <= a <= i`) holds the cells
/// `(a, a+1), ..., (a, lambda_i - i + a)`. It has `lambda_i - i` columns.
pub fn build_r(lambda: &Partition, i: usize) -> Result<Vec<Vec<Cell>>, RecurrenceError> {
    check_index(lambda, i, 1)?;
    let width = lambda.part(i) - i;
    Ok((1..=i).map(|a| (1..=width).map(|k| Cell::new(a, a + k)).collect()).collect())
}

/// `Omega_i`: sum over fillings with row lengths `c_1 >= c_2 >= ... >= c_i`,
/// row `a` taking the last `c_a` cells of row `a` of `R_i`. `Omega_0 = 1`.
pub fn omega(lambda: &Partition, i: usize) -> Result<Polynomial, RecurrenceError> {
    if i == 0 {
        return Ok(Polynomial::one());
    }
    let r = build_r(lambda, i)?;
    let width = lambda.part(i) - i;
    // c_a <= width, weakly decreasing: the partitions inside the i x width box
    let bounding = Partition::rectangle(i, width);
    Ok(Polynomial::from_terms(bounding.contained_partitions().map(|lengths| {
        let cells = (1..=i).flat_map(|a| {
            let row = &r[a - 1];
            row[width - lengths.part(a)..].iter().copied()
        });
        (Monomial::product_of(cells), 1.into())
    })))
}

/// `S_i = {(a,b) in lambda : 1 <= a <= i, lambda_i - i + a < b <= lambda_a}`.
pub fn s_set(lambda: &Partition, i: usize) -> Result<BTreeSet<Cell>, RecurrenceError> {
    check_index(lambda, i, 0)?;
    if i == 0 {
        return Ok(BTreeSet::new());
    }
    let base = lambda.part(i) - i;
    Ok((1..=i)
        .flat_map(|a| (base + a + 1..=lambda.part(a)).map(move |b| Cell::new(a, b)))
        .collect())
}

pub fn tau(lambda: &Partition, i: usize) -> Result<Polynomial, RecurrenceError> {
    let s = s_set(lambda, i)?;
    Ok(omega(lambda, i)?.mul_monomial(&Monomial::product_of(s)))
}

/// `tau_0 .. tau_rank` together with their factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauFamily {
    pub partition: Partition,
    pub omegas: Vec<Polynomial>,
    pub s_sets: Vec<BTreeSet<Cell>>,
    pub taus: Vec<Polynomial>,
}

impl TauFamily {
    pub fn new(lambda: &Partition) -> Self {
        let rank = lambda.rank();
        let omegas: Vec<Polynomial> = (0..=rank).map(|i| omega(lambda, i).unwrap()).collect();
        let s_sets: Vec<BTreeSet<Cell>> = (0..=rank).map(|i| s_set(lambda, i).unwrap()).collect();
        let taus = omegas
            .iter()
            .zip(&s_sets)
            .map(|(o, s)| o.mul_monomial(&Monomial::product_of(s.iter().copied())))
            .collect();
        TauFamily { partition: lambda.clone(), omegas, s_sets, taus }
    }

    pub fn rank(&self) -> usize {
        self.taus.len() - 1
    }

    /// `(-1)^i tau_i`, the multiplier of row `i+1` in the relation.
    pub fn signed(&self, i: usize) -> Polynomial {
        if i.is_multiple_of(2) { self.taus[i].clone() } else { -&self.taus[i] }
    }
}

/// The alternating sum `sum_i (-1)^i tau_i P_{i+1,j}`; equals `A_11` for
/// `j = 1` and zero for `2 <= j <= rank + 1`.
pub fn check_recurrence(lambda: &Partition, j: usize) -> Result<Polynomial, RecurrenceError> {
    check_recurrence_with(&WeightCache::new(), &TauFamily::new(lambda), j)
}

pub fn check_recurrence_with(
    cache: &WeightCache,
    family: &TauFamily,
    j: usize,
) -> Result<Polynomial, RecurrenceError> {
    let rank = family.rank();
    if j == 0 || j > rank + 1 {
        return Err(RecurrenceError::IndexOutOfRange { index: j, max: rank + 1 });
    }
    let mut sum = Polynomial::zero();
    for i in 0..=rank {
        let p = cache
            .weight(&family.partition, Cell::new(i + 1, j))
            .expect("cells of the Durfee square lie in the extended diagram");
        sum += &(&family.signed(i) * &p);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Naming;
    use crate::weight::leading_monomial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn letters(poly: &Polynomial, lambda: &Partition) -> String {
        poly.render(&Naming::letters(lambda).unwrap()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Vec<Cell>> {
        vec![list.iter().map(|&(r, c)| Cell::new(r, c)).collect()]
    }

    #[test]
    fn r_arrays() {
        let lam = p(&[4, 4]);
        let r2 = build_r(&lam, 2).unwrap();
        assert_eq!(
            r2,
            vec![vec![Cell::new(1, 2), Cell::new(1, 3)], vec![Cell::new(2, 3), Cell::new(2, 4)]]
        );
        let lam = p(&[3, 2]);
        assert_eq!(build_r(&lam, 2).unwrap(), vec![Vec::<Cell>::new(), Vec::new()]);
        assert_eq!(build_r(&lam, 1).unwrap(), cells(&[(1, 2), (1, 3)]));
        assert_eq!(build_r(&lam, 3), Err(RecurrenceError::IndexOutOfRange { index: 3, max: 2 }));
        assert!(build_r(&lam, 0).is_err());
    }

    #[test]
    fn omega_two_with_second_part_four() {
        let x = |r, c| Polynomial::var(Cell::new(r, c));
        let expected = [
            Polynomial::one(),
            x(1, 3),
            &x(1, 2) * &x(1, 3),
            &x(1, 3) * &x(2, 4),
            &(&x(1, 2) * &x(1, 3)) * &x(2, 4),
            &(&(&x(1, 2) * &x(1, 3)) * &x(2, 3)) * &x(2, 4),
        ]
        .iter()
        .fold(Polynomial::zero(), |acc, t| &acc + t);
        for lam in [p(&[4, 4]), p(&[5, 4, 1]), p(&[6, 4, 4, 2])] {
            assert_eq!(omega(&lam, 2).unwrap(), expected, "{lam}");
        }
        assert_eq!(omega(&p(&[3, 2]), 0).unwrap(), Polynomial::one());
    }

    #[test]
    fn small_taus() {
        let lam = p(&[3, 2]);
        assert_eq!(letters(&omega(&lam, 1).unwrap(), &lam), "bc+c+1");
        assert_eq!(letters(&tau(&lam, 1).unwrap(), &lam), "bc+c+1");
        assert_eq!(letters(&tau(&lam, 2).unwrap(), &lam), "bc");
        assert!(s_set(&lam, 1).unwrap().is_empty());
        assert_eq!(s_set(&lam, 2).unwrap(), [Cell::new(1, 2), Cell::new(1, 3)].into_iter().collect());

        let lam = p(&[5, 4, 1]);
        assert_eq!(letters(&tau(&lam, 1).unwrap(), &lam), "bcde+cde+de+e+1");
        assert_eq!(s_set(&lam, 2).unwrap(), [Cell::new(1, 4), Cell::new(1, 5)].into_iter().collect());
        // de(1+c+bc+ci+bci+bchi)
        assert_eq!(letters(&tau(&lam, 2).unwrap(), &lam), "bcdehi+bcdei+bcde+cdei+cde+de");
    }

    #[test]
    fn relations_for_small_partitions() {
        let lam = p(&[3, 2]);
        assert_eq!(letters(&check_recurrence(&lam, 1).unwrap(), &lam), "abcde");
        assert!(check_recurrence(&lam, 2).unwrap().is_zero());
        assert!(check_recurrence(&lam, 3).unwrap().is_zero());
        assert!(check_recurrence(&lam, 4).is_err());

        let lam = p(&[5, 4, 1]);
        assert_eq!(letters(&check_recurrence(&lam, 1).unwrap(), &lam), "abcdefghij");
        assert!(check_recurrence(&lam, 2).unwrap().is_zero());
        assert!(check_recurrence(&lam, 3).unwrap().is_zero());
    }

    #[test]
    fn relation_holds_exhaustively() {
        let cache = WeightCache::new();
        for lam in Partition::all_up_to_size(10) {
            let fam = TauFamily::new(&lam);
            assert_eq!(fam.taus[0], Polynomial::one());
            for j in 1..=lam.rank() + 1 {
                let r = check_recurrence_with(&cache, &fam, j).unwrap();
                if j == 1 {
                    assert_eq!(r, leading_monomial(&lam, Cell::new(1, 1)).unwrap(), "{lam}");
                } else {
                    assert!(r.is_zero(), "{lam} j={j}");
                }
            }
        }
    }

    #[test]
    fn square_diagonal_case() {
        // lambda_rank = rank: Omega_rank = 1 and S_rank is everything right of
        // the main diagonal
        for lam in Partition::all_up_to_size(10) {
            let r = lam.rank();
            if r == 0 || lam.part(r) != r {
                continue;
            }
            assert!(omega(&lam, r).unwrap().is_one());
            let right: BTreeSet<Cell> = lam.cells().filter(|c| c.col > c.row).collect();
            assert_eq!(s_set(&lam, r).unwrap(), right, "{lam}");
        }
    }
}
