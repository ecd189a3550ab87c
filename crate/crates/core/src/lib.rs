//! Weight matrices of integer partitions and their Smith normal form over
//! the polynomial ring `Z[x_ij]`, one variable per cell of the diagram.
//!
//! ```
//! use partition_snf::{snf_recurrence, Naming, Partition};
//!
//! let lambda: Partition = "3,2".parse().unwrap();
//! let snf = snf_recurrence(&lambda).unwrap();
//! let names = Naming::letters(&lambda).unwrap();
//! let diag: Vec<String> = snf.diagonal.iter().map(|p| p.render(&names).unwrap()).collect();
//! assert_eq!(diag, ["abcde", "e", "1"]);
//! ```

pub mod error;
pub mod matrix;
pub mod par;
pub mod partition;
pub mod poly;
pub mod qcatalan;
pub mod recurrence;
pub mod snf;
pub mod sweep;
pub mod weight;

pub use error::{PartitionError, PolyError, RecurrenceError, SnfError};
pub use matrix::PolyMatrix;
pub use par::Exec;
pub use partition::{parse_partition, Cell, ExtendedDiagram, Partition};
pub use poly::{Monomial, Naming, Polynomial, UniPoly};
pub use recurrence::{build_r, check_recurrence, omega, s_set, tau, TauFamily};
pub use snf::{determinant, snf_inductive, snf_recurrence, verify_snf, Algorithm, SnfResult, Verification};
pub use weight::{leading_monomial, rect_weight_matrix, square_matrix, weight_polynomial, WeightCache};
