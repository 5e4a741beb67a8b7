//! Thread-per-chunk execution of the speculative device.
//!
//! The reach phase spawns one worker per chunk; the automaton table and the
//! text are shared read-only, each worker owns its chunk mapping, and
//! joining the workers is the completion barrier before the serial join
//! phase. No locks anywhere.

use std::thread;
use std::time::Instant;

use ridfa_core::{
    chunk_mapping, join_device, recognize_serial, split_chunks, ChunkMapping, MachineRef,
    RecognitionReport, RecognizerError, SymbolId,
};

/// Runs the device over `text` cut into `c` chunks. The verdict and the
/// transition counts are identical to the serial run on the same machine;
/// only the wall-clock changes. The empty text never splits: it is decided
/// from the initial/final sets.
pub fn recognize_parallel(
    machine: MachineRef<'_>,
    text: &[SymbolId],
    c: usize,
) -> Result<RecognitionReport, RecognizerError> {
    if text.is_empty() {
        return Ok(recognize_serial(machine, text));
    }
    let plan = split_chunks(text.len(), c)?;

    let reach_start = Instant::now();
    let mappings: Vec<ChunkMapping> = thread::scope(|scope| {
        let workers: Vec<_> = plan
            .ranges()
            .enumerate()
            .map(|(i, range)| {
                let chunk = &text[range];
                scope.spawn(move || chunk_mapping(machine, i == 0, chunk))
            })
            .collect();
        // Worker panics propagate; the join below never sees partial results.
        workers.into_iter().map(|w| w.join().expect("chunk worker failed")).collect()
    });
    let reach_duration = reach_start.elapsed();

    let join_start = Instant::now();
    let outcome = join_device(machine, &mappings)?;
    let join_duration = join_start.elapsed();

    let per_chunk_transitions: Vec<u64> = mappings.iter().map(|m| m.transitions).collect();
    let total_transitions = per_chunk_transitions.iter().sum();
    Ok(RecognitionReport {
        accepted: outcome.accepted,
        variant: machine.variant(),
        chunk_count: plan.chunk_count(),
        per_chunk_transitions,
        total_transitions,
        reach_duration,
        join_duration,
    })
}

/// The serial run with its single pass measured as the reach phase.
pub fn recognize_serial_timed(machine: MachineRef<'_>, text: &[SymbolId]) -> RecognitionReport {
    let start = Instant::now();
    let mut report = recognize_serial(machine, text);
    report.reach_duration = start.elapsed();
    report
}
