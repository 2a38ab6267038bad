//! Exact eigenvalues of the transposition graph `T_n`.
//!
//! Every eigenvalue of the Cayley graph of `S_n` generated by all
//! transpositions is `lambda(p) = sum_j n_j (n_j - 2j + 1) / 2` for some
//! partition `p = (n_1, n_2, ...)` of `n`. This crate evaluates that sum,
//! builds explicit partitions for every integer in `[-n, n]` (`n >= 31`) and in
//! a quadratic segment `[y1, y2]` (`n >= 48`), and cross-checks all of it
//! against brute-force enumeration and, for `n <= 6`, a numeric eigensolve.
//!
//! ```
//! use tn_spectrum::{theorem3_witness, Partition};
//!
//! let p = Partition::new(vec![4, 1, 1]).unwrap();
//! assert_eq!(p.eigenvalue().unwrap(), 3);
//!
//! let w = theorem3_witness(31, -15).unwrap();
//! assert!(w.verified);
//! assert_eq!(w.partition.eigenvalue().unwrap(), -15);
//! ```

pub mod cayley;
pub mod cli;
pub mod error;
pub mod families;
pub mod oracle;
pub mod partition;
pub mod segment;
pub mod verify;
pub mod witness;

pub use cayley::cayley_spectrum;
pub use error::{Error, Result};
pub use families::{FamilyGroup, FamilyId};
pub use oracle::{partition_count, partitions, EnumerationConstraints, Oracle, SpectrumSet};
pub use partition::{
    compact_eigenvalue, conjugate, eigenvalue, eigenvalue_via_head, expand, CompactPartition,
    Eigenvalue, Partition,
};
pub use segment::{
    conjecture_scan, theorem3_cover, theorem3_witness, theorem5_bounds, theorem5_cover,
    theorem5_witness, CoverageReport, SegmentBounds,
};
pub use verify::{run_checks, CheckId, Summary, VerificationReport};
pub use witness::{ChainStep, WitnessRecord};
