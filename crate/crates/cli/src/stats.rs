//! Construction statistics: state counts, interface sizes before and after
//! reduction, size ratios against the minimal DFA, and build durations.
//!
//! The ratio columns make it possible to reproduce interface-size
//! distribution studies over any automata collection the loader accepts.

use std::time::{Duration, Instant};

use ridfa_core::{build_ridfa, minimize_dfa, powerset_from, Nfa};

#[derive(Clone, Debug)]
pub struct MachineStats {
    pub name: String,
    pub nfa_states: usize,
    pub nfa_initials: usize,
    pub min_dfa_states: usize,
    pub ridfa_states: usize,
    pub interface_size: usize,
    pub reduced_interface_size: usize,
    /// |Q_N| / |min-DFA|.
    pub nfa_over_dfa: f64,
    /// reduced interface size / |min-DFA|.
    pub interface_over_dfa: f64,
    pub dfa_build: Duration,
    pub ridfa_build: Duration,
}

/// Builds every machine kind from the NFA and measures the constructions.
pub fn machine_stats(name: &str, nfa: &Nfa) -> MachineStats {
    let dfa_start = Instant::now();
    let dfa = minimize_dfa(&powerset_from(nfa, nfa.initials()));
    let dfa_build = dfa_start.elapsed();

    let rid_start = Instant::now();
    let machine = build_ridfa(nfa);
    let reduced = machine.reduce_interface();
    let ridfa_build = rid_start.elapsed();

    let dfa_states = dfa.state_count();
    MachineStats {
        name: name.to_string(),
        nfa_states: nfa.state_count(),
        nfa_initials: nfa.initials().len(),
        min_dfa_states: dfa_states,
        ridfa_states: machine.state_count(),
        interface_size: machine.interface().len(),
        reduced_interface_size: reduced.interface().len(),
        nfa_over_dfa: nfa.state_count() as f64 / dfa_states as f64,
        interface_over_dfa: reduced.interface().len() as f64 / dfa_states as f64,
        dfa_build,
        ridfa_build,
    }
}

pub fn stats_line(stats: &MachineStats) -> String {
    format!(
        "{}: nfa {} states ({} initial); min-dfa {} states; ridfa {} states, interface {} -> {} after reduction; ratios nfa/dfa {:.3}, interface/dfa {:.3}; built dfa {:.3} ms, ridfa {:.3} ms",
        stats.name,
        stats.nfa_states,
        stats.nfa_initials,
        stats.min_dfa_states,
        stats.ridfa_states,
        stats.interface_size,
        stats.reduced_interface_size,
        stats.nfa_over_dfa,
        stats.interface_over_dfa,
        stats.dfa_build.as_secs_f64() * 1e3,
        stats.ridfa_build.as_secs_f64() * 1e3,
    )
}

pub const STATS_CSV_HEADER: &str = "name,nfa_states,nfa_initials,min_dfa_states,ridfa_states,interface,interface_reduced,nfa_over_dfa,interface_over_dfa,dfa_build_ms,ridfa_build_ms";

pub fn stats_csv_row(stats: &MachineStats) -> String {
    format!(
        "{},{},{},{},{},{},{},{:.6},{:.6},{:.3},{:.3}",
        stats.name,
        stats.nfa_states,
        stats.nfa_initials,
        stats.min_dfa_states,
        stats.ridfa_states,
        stats.interface_size,
        stats.reduced_interface_size,
        stats.nfa_over_dfa,
        stats.interface_over_dfa,
        stats.dfa_build.as_secs_f64() * 1e3,
        stats.ridfa_build.as_secs_f64() * 1e3,
    )
}

/// Distribution of the NFA-size and reduced-interface ratios over a
/// collection, in width-0.1 bins — the shape used to compare start-state
/// counts across machine kinds.
pub fn ratio_histogram(collection: &[MachineStats]) -> String {
    const OVERFLOW: usize = 14;
    let mut out = String::from("interval      nfa/dfa   interface/dfa\n");
    let bin_of = |ratio: f64| ((ratio * 10.0).floor() as usize).min(OVERFLOW);
    let mut nfa_bins = [0usize; OVERFLOW + 1];
    let mut interface_bins = [0usize; OVERFLOW + 1];
    for stats in collection {
        nfa_bins[bin_of(stats.nfa_over_dfa)] += 1;
        interface_bins[bin_of(stats.interface_over_dfa)] += 1;
    }
    for (i, (n, r)) in nfa_bins.iter().zip(interface_bins.iter()).enumerate() {
        if *n == 0 && *r == 0 {
            continue;
        }
        let lo = i as f64 / 10.0;
        if i == OVERFLOW {
            out.push_str(&format!("{lo:.1} +       {n:7}   {r:13}\n"));
        } else {
            out.push_str(&format!("{:.1} - {:.1}   {:7}   {:13}\n", lo, lo + 0.1, n, r));
        }
    }
    out.push_str(&format!("machines: {}\n", collection.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ridfa_core::family_nfa;
    use ridfa_testkit::machines;

    #[test]
    fn family_k3_stats() {
        let nfa = family_nfa(3);
        let stats = machine_stats("family-k3", &nfa);
        assert_eq!(stats.nfa_states, 5);
        assert_eq!(stats.min_dfa_states, 16);
        assert_eq!(stats.interface_size, 5);
        assert!(stats.reduced_interface_size <= 5);
        let line = stats_line(&stats);
        assert!(line.contains("min-dfa 16 states"));
    }

    #[test]
    fn twin_machine_interface_shrinks() {
        let nfa = machines::twin4_nfa();
        let stats = machine_stats("twin", &nfa);
        assert_eq!(stats.interface_size, 4);
        assert_eq!(stats.reduced_interface_size, 3);
        assert_eq!(stats.ridfa_states, 8);
    }

    #[test]
    fn histogram_bins_by_tenths() {
        let nfa = family_nfa(3);
        let stats = machine_stats("family-k3", &nfa);
        let hist = ratio_histogram(&[stats]);
        // 5/16 = 0.3125 falls in the 0.3-0.4 bin for both columns.
        assert!(hist.contains("0.3 - 0.4"));
        assert!(hist.contains("machines: 1"));
    }
}
