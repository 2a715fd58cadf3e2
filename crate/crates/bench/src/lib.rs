//! Fixtures shared by the benchmarks.

use semicomp::{enumerate_semirings, is_orderable, FiniteSemiring, PartialOrder};

/// Every orderable size-3 table with its natural order.
pub fn ordered_size3() -> Vec<(FiniteSemiring, PartialOrder)> {
    enumerate_semirings(3)
        .expect("size 3 is enumerable")
        .into_iter()
        .filter_map(|s| {
            let o = is_orderable(&s).expect("consistent").order().cloned()?;
            Some((s, o))
        })
        .collect()
}
