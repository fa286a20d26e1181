//! Deterministic multi-worker execution of a search.
//!
//! Chunks are planned ahead of the consumer, evaluated on a worker pool
//! (evaluation is pure), and replayed strictly in enumeration order, so the
//! final state is bit-identical for any worker count or chunk size.

use constrec_core::fp::Precision;
use constrec_core::search::{evaluate_range, SearchDriver};
use rayon::prelude::*;

/// Chunks scheduled per wave, as a multiple of the worker count.
const WAVE_FACTOR: usize = 2;

/// Drives the search to its stop condition using `workers` threads.
pub fn run(driver: &mut SearchDriver, prec: Precision, workers: usize, chunk: u64) {
    let spec = driver.spec().clone();
    if workers <= 1 {
        while let Some((start, len)) = driver.next_chunk(chunk) {
            let entries = evaluate_range(&spec, prec, start, len);
            driver.consume(start, len, &entries);
        }
        return;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("building the worker pool");
    while !driver.finished() {
        let wave = driver.plan_chunks(chunk, workers * WAVE_FACTOR);
        if wave.is_empty() {
            // Nothing left to plan; one more call records the stop reason.
            let leftover = driver.next_chunk(chunk);
            debug_assert!(leftover.is_none());
            break;
        }
        let results: Vec<_> = pool.install(|| {
            wave.par_iter()
                .map(|&(start, len)| evaluate_range(&spec, prec, start, len))
                .collect()
        });
        for (&(start, len), entries) in wave.iter().zip(&results) {
            match driver.next_chunk(chunk) {
                Some(issued) => {
                    assert_eq!(issued, (start, len), "planned chunk diverged");
                    driver.consume(start, len, entries);
                }
                // A stop fired mid-wave; the speculative leftovers are moot.
                None => break,
            }
        }
    }
}
