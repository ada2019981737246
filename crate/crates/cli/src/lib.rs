//! Census tables and the verification suite behind the `fullsupport` binary.

pub mod render;
pub mod verify;

use fullsupport::cartan::{admissible_types, CartanType, RootSystem};
use fullsupport::counting::{self, CensusReport, CountingError};
use rayon::prelude::*;

pub const MAX_RANK: u8 = 8;

/// Census reports for every admissible type up to `max_rank`, in table order.
/// Types are evaluated in parallel; the result order does not depend on
/// scheduling.
pub fn census_table(max_rank: usize) -> Vec<(CartanType, Result<CensusReport, CountingError>)> {
    admissible_types(max_rank)
        .into_par_iter()
        .map(|t| (t, counting::full_census(&RootSystem::from_type(t))))
        .collect()
}
