//! Exhaustive checks over every partition up to a given size, run as a
//! data-parallel batch.

use std::fmt;

use crate::par::{self, Exec};
use crate::partition::{Cell, Partition};
use crate::poly::Polynomial;
use crate::recurrence::{check_recurrence_with, TauFamily};
use crate::snf::{determinant, expected_diagonal, snf_inductive_with, snf_recurrence_with};
use crate::weight::{leading_monomial, square_matrix_with, WeightCache};

/// Largest `M(1,1)` handed to the cofactor determinant during a sweep.
pub const SWEEP_DETERMINANT_SIDE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// The `tau` relation for every column `j`.
    Recurrence,
    /// Both algorithms verify on `M(1,1)` and return the same diagonal.
    Agreement,
    /// Diagonal entry `k` equals `A_kk`.
    Diagonal,
    /// `det M(1,1) = A_11 A_22 ...` (side at most [`SWEEP_DETERMINANT_SIDE`]).
    Determinant,
    /// The inductive algorithm verifies on every border rectangle with
    /// `rows <= cols`.
    Rectangles,
}

impl Check {
    pub const ALL: [Check; 5] =
        [Check::Recurrence, Check::Agreement, Check::Diagonal, Check::Determinant, Check::Rectangles];

    pub fn name(self) -> &'static str {
        match self {
            Check::Recurrence => "recurrence",
            Check::Agreement => "agreement",
            Check::Diagonal => "diagonal",
            Check::Determinant => "determinant",
            Check::Rectangles => "rectangles",
        }
    }
}

/// Outcome of one check on one partition; `None` when the check does not
/// apply (determinants above the size limit).
pub type Outcome = Option<Result<(), String>>;

pub fn check_partition(cache: &WeightCache, lambda: &Partition) -> Vec<(Check, Outcome)> {
    Check::ALL.iter().map(|&c| (c, run_check(cache, lambda, c))).collect()
}

fn run_check(cache: &WeightCache, lambda: &Partition, check: Check) -> Outcome {
    let side = lambda.rank() + 1;
    let durfee_diagonal = || -> Result<Vec<Polynomial>, String> {
        (1..=side)
            .map(|k| leading_monomial(lambda, Cell::new(k, k)).map_err(|e| e.to_string()))
            .collect()
    };
    let outcome = match check {
        Check::Recurrence => (|| {
            let family = TauFamily::new(lambda);
            let a11 = leading_monomial(lambda, Cell::new(1, 1)).map_err(|e| e.to_string())?;
            for j in 1..=side {
                let residual = check_recurrence_with(cache, &family, j).map_err(|e| e.to_string())?;
                let expected = if j == 1 { a11.clone() } else { Polynomial::zero() };
                if residual != expected {
                    return Err(format!("j={j}: residual {residual:?}"));
                }
            }
            Ok(())
        })(),
        Check::Agreement => (|| {
            let a = snf_recurrence_with(cache, lambda).map_err(|e| e.to_string())?;
            let b = snf_inductive_with(cache, lambda, side, side).map_err(|e| e.to_string())?;
            if a.diagonal != b.diagonal {
                return Err("diagonals differ".to_string());
            }
            Ok(())
        })(),
        Check::Diagonal => (|| {
            let a = snf_recurrence_with(cache, lambda).map_err(|e| e.to_string())?;
            if a.diagonal != durfee_diagonal()? {
                return Err("diagonal is not A_11, A_22, ...".to_string());
            }
            Ok(())
        })(),
        Check::Determinant => {
            if side > SWEEP_DETERMINANT_SIDE {
                return None;
            }
            (|| {
                let w = square_matrix_with(cache, lambda, Cell::new(1, 1)).map_err(|e| e.to_string())?;
                let det = determinant(&w).map_err(|e| e.to_string())?;
                let product = durfee_diagonal()?.iter().fold(Polynomial::one(), |acc, a| &acc * a);
                if det != product {
                    return Err("det M(1,1) differs from the diagonal product".to_string());
                }
                Ok(())
            })()
        }
        Check::Rectangles => (|| {
            for c in lambda.extended().border().iter().filter(|c| c.row <= c.col) {
                let r = snf_inductive_with(cache, lambda, c.row, c.col)
                    .map_err(|e| format!("rectangle {c}: {e}"))?;
                let expected = expected_diagonal(lambda, c.row, c.col).map_err(|e| e.to_string())?;
                if r.diagonal != expected {
                    return Err(format!("rectangle {c}: unexpected diagonal"));
                }
            }
            Ok(())
        })(),
    };
    Some(outcome)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// `(partition, message)` for each failure.
    pub failures: Vec<(Partition, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub max_size: usize,
    pub partitions: usize,
    pub tallies: Vec<(Check, Tally)>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.tallies.iter().all(|(_, t)| t.failed == 0)
    }

    pub fn tally(&self, check: Check) -> &Tally {
        &self.tallies.iter().find(|(c, _)| *c == check).expect("every check is tallied").1
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "partitions of size <= {}: {}", self.max_size, self.partitions)?;
        for (check, t) in &self.tallies {
            writeln!(
                f,
                "{:<12} passed {:>5}  failed {:>3}  skipped {:>3}",
                check.name(),
                t.passed,
                t.failed,
                t.skipped
            )?;
            for (lambda, msg) in t.failures.iter().take(5) {
                writeln!(f, "  {lambda}: {msg}")?;
            }
        }
        write!(f, "{}", if self.ok() { "all checks passed" } else { "FAILURES" })
    }
}

/// Runs every [`Check`] on every partition of size at most `max_size`.
pub fn run(max_size: usize, exec: Exec) -> SweepReport {
    run_on(max_size, Partition::all_up_to_size(max_size), exec)
}

pub fn run_on(max_size: usize, partitions: Vec<Partition>, exec: Exec) -> SweepReport {
    let cache = WeightCache::new();
    let results = par::map(exec, &partitions, |lambda| check_partition(&cache, lambda));
    let mut tallies: Vec<(Check, Tally)> = Check::ALL.iter().map(|&c| (c, Tally::default())).collect();
    for (lambda, outcomes) in partitions.iter().zip(results) {
        for (check, outcome) in outcomes {
            let tally = &mut tallies.iter_mut().find(|(c, _)| *c == check).unwrap().1;
            match outcome {
                None => tally.skipped += 1,
                Some(Ok(())) => tally.passed += 1,
                Some(Err(msg)) => {
                    tally.failed += 1;
                    tally.failures.push((lambda.clone(), msg));
                }
            }
        }
    }
    SweepReport { max_size, partitions: partitions.len(), tallies }
}
