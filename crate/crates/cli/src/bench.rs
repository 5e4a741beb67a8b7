//! The benchmark sweep driver.
//!
//! One sweep takes a single source machine, builds each chunk-automaton
//! variant once, and runs every (text, chunk count, variant) cell. Cells
//! run one at a time so the reach workers of a cell own the machine's
//! parallelism. Transition counts must be identical across repetitions
//! (they are asserted, not averaged); timings take the median. A failing
//! cell is recorded and the sweep continues.

use std::path::PathBuf;
use std::time::Duration;

use thiserror::Error;

use ridfa_core::{build_ridfa, minimize_dfa, powerset_from, MachineRef, Nfa, SymbolId, Variant};

use crate::formats::report::BenchRow;
use crate::formats::text::{load_text, ForeignBytePolicy, TextError};
use crate::gen::{gen_uniform, gen_walk, GenError};
use crate::parallel::recognize_parallel;

/// The chunk counts swept when none are given: 2, 10, 18, ..., 66.
pub const DEFAULT_CHUNK_SWEEP: [usize; 9] = [2, 10, 18, 26, 34, 42, 50, 58, 66];

pub const DEFAULT_REPETITIONS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    Uniform,
    Walk,
}

/// One text source of a sweep.
#[derive(Clone, Debug)]
pub enum TextSpec {
    File(PathBuf),
    Generated { mode: GenMode, len: usize },
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Benchmark label, first CSV column.
    pub label: String,
    pub variants: Vec<Variant>,
    pub chunk_counts: Vec<usize>,
    pub texts: Vec<TextSpec>,
    pub repetitions: usize,
    /// Run the RI-DFA variant on the interface-reduced machine.
    pub reduce_interface: bool,
    /// Base seed for generated texts; text i uses seed + i.
    pub seed: u64,
    pub foreign_bytes: ForeignBytePolicy,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
}

/// Sweep results: CSV rows in deterministic order, plus one message per
/// failed cell or text source.
#[derive(Debug)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    pub failures: Vec<String>,
}

pub fn run_bench(nfa: &Nfa, config: &BenchConfig) -> Result<BenchOutcome, BenchError> {
    if config.variants.is_empty() {
        return Err(BenchError::Config("no variants selected".into()));
    }
    if config.chunk_counts.is_empty() {
        return Err(BenchError::Config("no chunk counts selected".into()));
    }
    if config.texts.is_empty() {
        return Err(BenchError::Config("no text sources given".into()));
    }
    if config.repetitions == 0 {
        return Err(BenchError::Config("repetitions must be at least 1".into()));
    }

    let dfa = minimize_dfa(&powerset_from(nfa, nfa.initials()));
    let ridfa = if config.reduce_interface {
        build_ridfa(nfa).reduce_interface()
    } else {
        build_ridfa(nfa)
    };
    let machine_for = |variant: Variant| -> MachineRef<'_> {
        match variant {
            Variant::Dfa => MachineRef::Dfa(&dfa),
            Variant::Nfa => MachineRef::Nfa(nfa),
            Variant::RiDfa => MachineRef::RiDfa(&ridfa),
        }
    };

    let mut rows = Vec::new();
    let mut failures = Vec::new();

    for (text_index, spec) in config.texts.iter().enumerate() {
        let text: Vec<SymbolId> = match resolve_text(spec, config, &dfa, text_index) {
            Ok(text) => text,
            Err(message) => {
                failures.push(message);
                continue;
            }
        };
        for &chunks in &config.chunk_counts {
            // Raw (variant, total) pairs of this group for the ratio columns.
            let mut group: Vec<(Variant, usize)> = Vec::new();
            for &variant in &config.variants {
                match run_cell(machine_for(variant), &text, chunks, config.repetitions) {
                    Ok(cell) => {
                        group.push((variant, rows.len()));
                        rows.push(BenchRow {
                            benchmark: config.label.clone(),
                            variant: variant.name().to_string(),
                            chunks,
                            text_length: text.len(),
                            transitions_total: cell.transitions_total,
                            transitions_per_chunk: cell.transitions_per_chunk,
                            accepted: cell.accepted,
                            reach_ms: cell.reach.as_secs_f64() * 1e3,
                            join_ms: cell.join.as_secs_f64() * 1e3,
                            ratio_dfa_over_rid: None,
                            ratio_nfa_over_rid: None,
                        });
                    }
                    Err(message) => failures.push(format!(
                        "{} variant={} chunks={chunks} text#{text_index}: {message}",
                        config.label,
                        variant.name()
                    )),
                }
            }
            fill_ratios(&mut rows, &group);
        }
    }

    Ok(BenchOutcome { rows, failures })
}

struct Cell {
    accepted: bool,
    transitions_total: u64,
    transitions_per_chunk: Vec<u64>,
    reach: Duration,
    join: Duration,
}

fn run_cell(
    machine: MachineRef<'_>,
    text: &[SymbolId],
    chunks: usize,
    repetitions: usize,
) -> Result<Cell, String> {
    let mut reach_times = Vec::with_capacity(repetitions);
    let mut join_times = Vec::with_capacity(repetitions);
    let mut reference: Option<(bool, u64, Vec<u64>)> = None;
    for _ in 0..repetitions {
        let report = recognize_parallel(machine, text, chunks).map_err(|e| e.to_string())?;
        let summary =
            (report.accepted, report.total_transitions, report.per_chunk_transitions.clone());
        match &reference {
            None => reference = Some(summary),
            Some(seen) => {
                if *seen != summary {
                    return Err(String::from(
                        "nondeterministic transition counts across repetitions",
                    ));
                }
            }
        }
        reach_times.push(report.reach_duration);
        join_times.push(report.join_duration);
    }
    let (accepted, transitions_total, transitions_per_chunk) =
        reference.expect("at least one repetition ran");
    Ok(Cell {
        accepted,
        transitions_total,
        transitions_per_chunk,
        reach: median(&mut reach_times),
        join: median(&mut join_times),
    })
}

fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    times[times.len() / 2]
}

fn resolve_text(
    spec: &TextSpec,
    config: &BenchConfig,
    dfa: &ridfa_core::Dfa,
    text_index: usize,
) -> Result<Vec<SymbolId>, String> {
    match spec {
        TextSpec::File(path) => load_text(path, dfa.alphabet(), config.foreign_bytes)
            .map_err(|e: TextError| format!("text {}: {e}", path.display())),
        TextSpec::Generated { mode, len } => {
            let seed = config.seed.wrapping_add(text_index as u64);
            match mode {
                GenMode::Uniform => gen_uniform(dfa.alphabet().len(), *len, seed)
                    .map_err(|e: GenError| format!("generated text #{text_index}: {e}")),
                GenMode::Walk => gen_walk(dfa, *len, seed)
                    .map_err(|e| format!("generated text #{text_index}: {e}")),
            }
        }
    }
}

/// Fills the DFA/RID and NFA/RID ratio columns for every row of one
/// (text, chunk-count) group, once all its variants have run.
fn fill_ratios(rows: &mut [BenchRow], group: &[(Variant, usize)]) {
    let total_of = |rows: &[BenchRow], wanted: Variant| -> Option<u64> {
        group
            .iter()
            .find(|(variant, _)| *variant == wanted)
            .map(|&(_, index)| rows[index].transitions_total)
    };
    let Some(rid) = total_of(rows, Variant::RiDfa) else { return };
    if rid == 0 {
        return;
    }
    let dfa = total_of(rows, Variant::Dfa);
    let nfa = total_of(rows, Variant::Nfa);
    for &(_, index) in group {
        rows[index].ratio_dfa_over_rid = dfa.map(|t| t as f64 / rid as f64);
        rows[index].ratio_nfa_over_rid = nfa.map(|t| t as f64 / rid as f64);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ridfa_core::family_nfa;

    fn config(texts: Vec<TextSpec>) -> BenchConfig {
        BenchConfig {
            label: "family-k2".into(),
            variants: vec![Variant::Dfa, Variant::Nfa, Variant::RiDfa],
            chunk_counts: vec![4],
            texts,
            repetitions: 2,
            reduce_interface: false,
            seed: 11,
            foreign_bytes: ForeignBytePolicy::Strict,
        }
    }

    #[test]
    fn sweep_produces_consistent_ratio_columns() {
        let nfa = family_nfa(2);
        let cfg = config(vec![TextSpec::Generated { mode: GenMode::Walk, len: 256 }]);
        let outcome = run_bench(&nfa, &cfg).unwrap();
        assert!(outcome.failures.is_empty(), "{:?}", outcome.failures);
        assert_eq!(outcome.rows.len(), 3);

        let total = |variant: &str| -> u64 {
            outcome.rows.iter().find(|r| r.variant == variant).unwrap().transitions_total
        };
        for row in &outcome.rows {
            // Ratio columns are recomputable from the raw totals.
            assert_eq!(
                row.ratio_dfa_over_rid.unwrap(),
                total("dfa") as f64 / total("ridfa") as f64
            );
            assert_eq!(
                row.ratio_nfa_over_rid.unwrap(),
                total("nfa") as f64 / total("ridfa") as f64
            );
            assert_eq!(row.text_length, 256);
        }
        assert!(total("dfa") >= total("ridfa"));
    }

    #[test]
    fn single_variant_single_text_is_one_row() {
        let nfa = family_nfa(2);
        let mut cfg = config(vec![TextSpec::Generated { mode: GenMode::Uniform, len: 64 }]);
        cfg.variants = vec![Variant::RiDfa];
        let outcome = run_bench(&nfa, &cfg).unwrap();
        assert_eq!(outcome.rows.len(), 1);
        // No DFA/NFA rows in the group: ratio cells stay empty.
        assert!(outcome.rows[0].ratio_dfa_over_rid.is_none());
    }

    #[test]
    fn zero_texts_is_a_config_error() {
        let nfa = family_nfa(2);
        let cfg = config(vec![]);
        assert!(matches!(run_bench(&nfa, &cfg), Err(BenchError::Config(_))));
    }

    #[test]
    fn failing_text_source_is_recorded_and_skipped() {
        let nfa = family_nfa(2);
        let cfg = config(vec![
            TextSpec::File(PathBuf::from("/nonexistent/text.bin")),
            TextSpec::Generated { mode: GenMode::Uniform, len: 32 },
        ]);
        let outcome = run_bench(&nfa, &cfg).unwrap();
        assert_eq!(outcome.failures.len(), 1);
        assert_eq!(outcome.rows.len(), 3);
    }
}
