//! Semirings, complete semirings and the completion of a finite ordered
//! semiring.
//!
//! Finite semirings are tables over an index set ([`FiniteSemiring`]);
//! infinite families are recorded up to bijection as value-to-cardinal maps
//! ([`CardinalFamily`]); a complete semiring is anything implementing
//! [`Complete`]. The [`gallery`] holds the standard examples, [`series`] the
//! polynomials and power series over a semiring alphabet, and [`completion`]
//! the congruence and the induced infinite sum.

pub mod acceptance;
pub mod algebra;
pub mod cardinal;
pub mod complete;
pub mod completion;
pub mod error;
pub mod gallery;
pub mod io;
pub mod report;
pub mod series;

pub use algebra::{
    check_ordered_semiring, check_semiring_axioms, enumerate_semirings, is_orderable,
    is_zero_sum_free, natural_quasiorder, random_semiring, search_compatible_order, Carrier,
    FiniteSemiring, OrderSearch, Orderability, PartialOrder, QuasiOrder, Semiring, SupOutcome,
};
pub use cardinal::{card_arith, CardOp, Cardinal, CardinalFamily, OmegaSequence};
pub use complete::{BatteryConfig, Complete};
pub use error::{Error, Result};
pub use report::{CheckReport, Violation};
pub use series::{Polynomial, TruncatedSeries, Word};
