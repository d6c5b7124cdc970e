//! Multi-threaded drivers whose results are identical to the sequential ones
//! in `cvdj-core`, whatever the thread count.

use cvdj_core::amplification::{
    block_count, monte_carlo_block, AmplificationReport, BlockTally, Decision, QueryModel,
};
use cvdj_core::asb::{DominanceGrid, DominanceReport, MAX_DOMINANCE_BITS};
use cvdj_core::bitstrings::{enumerate_balanced_with_cap, BitString};
use cvdj_core::{Error, Result};
use rayon::prelude::*;

/// Strings per work item in [`verify_asb_dominance`].
pub const DOMINANCE_CHUNK: usize = 64;

/// Parallel form of [`cvdj_core::asb::verify_asb_dominance`]. Chunks are
/// merged in enumeration order, so the witness is the first violation.
pub fn verify_asb_dominance(bits: usize, grid: usize) -> Result<DominanceReport> {
    let table = DominanceGrid::new(bits, grid)?;
    let strings: Vec<BitString> = enumerate_balanced_with_cap(bits, MAX_DOMINANCE_BITS)?.collect();
    let reports: Vec<DominanceReport> = strings
        .par_chunks(DOMINANCE_CHUNK)
        .map(|chunk| table.check(chunk.iter().cloned()))
        .collect();
    let mut reports = reports.into_iter();
    let first = reports.next().expect("at least one balanced string");
    Ok(reports.fold(first, DominanceReport::merge))
}

/// Parallel form of [`cvdj_core::amplification::monte_carlo_error`].
pub fn monte_carlo_error(
    model: &QueryModel,
    m: u64,
    runs: u64,
    seed: u64,
) -> Result<(AmplificationReport, AmplificationReport)> {
    if m == 0 {
        return Err(Error::TooSmall {
            name: "query count",
            min: 1,
            value: 0,
        });
    }
    if runs == 0 {
        return Err(Error::TooSmall {
            name: "runs",
            min: 1,
            value: 0,
        });
    }
    let report = |truth| {
        let tally = (0..block_count(runs))
            .into_par_iter()
            .map(|b| monte_carlo_block(model, truth, m, runs, seed, b))
            .reduce(BlockTally::default, |a, b| a + b);
        AmplificationReport::from_tally(model, truth, m, seed, tally)
    };
    Ok((report(Decision::Constant), report(Decision::Balanced)))
}
