//! Randomized cross-operation properties on small seeded instances. The
//! large-scale fuzz equivalence run lives in the workspace acceptance
//! suite; these are the fast development-loop versions.

use ridfa_core::{
    build_ridfa, chunk_mapping, join_device, minimize_dfa, nerode_partition, powerset_from,
    recognize_serial, split_chunks, ChunkMapping, MachineRef, StateId, SymbolId,
};
use ridfa_testkit::brute;
use ridfa_testkit::random::{random_nfa, random_text, SplitMix64};

fn run_chunked(machine: MachineRef<'_>, text: &[SymbolId], c: usize) -> (bool, u64) {
    if text.is_empty() {
        let report = recognize_serial(machine, text);
        return (report.accepted, 0);
    }
    let plan = split_chunks(text.len(), c).unwrap();
    let mappings: Vec<ChunkMapping> = plan
        .ranges()
        .enumerate()
        .map(|(i, r)| chunk_mapping(machine, i == 0, &text[r]))
        .collect();
    let outcome = join_device(machine, &mappings).unwrap();
    (outcome.accepted, mappings.iter().map(|m| m.transitions).sum())
}

#[test]
fn powerset_agrees_with_the_source_machine() {
    let mut rng = SplitMix64::new(0x5eed_0001);
    for _ in 0..60 {
        let states = 1 + rng.below(6);
        let syms = 1 + rng.below(3);
        let nfa = random_nfa(&mut rng, states, syms, 30, true);
        let dfa = powerset_from(&nfa, nfa.initials());
        for string in brute::all_strings(syms, if syms == 1 { 8 } else { 6 }) {
            assert_eq!(dfa.accepts(&string), nfa.accepts(&string), "{nfa:?} {string:?}");
        }
    }
}

#[test]
fn minimization_preserves_language_and_nerode_matches_the_pairwise_oracle() {
    let mut rng = SplitMix64::new(0x5eed_0002);
    for _ in 0..50 {
        let states = 2 + rng.below(5);
        let syms = 1 + rng.below(3);
        let nfa = random_nfa(&mut rng, states, syms, 35, false);
        let dfa = powerset_from(&nfa, nfa.initials());

        let partition = nerode_partition(&dfa);
        for a in dfa.states() {
            for b in dfa.states() {
                let equivalent = brute::distinguishing_string(&dfa, a, b).is_none();
                assert_eq!(partition.same_class(a, b), equivalent, "{a:?} {b:?} {dfa:?}");
            }
        }

        let min = minimize_dfa(&dfa);
        assert!(min.state_count() <= dfa.state_count());
        for string in brute::all_strings(syms, if syms == 1 { 8 } else { 6 }) {
            assert_eq!(min.accepts(&string), dfa.accepts(&string));
        }
        // Minimal means pairwise distinguishable and no dead weight.
        let min_partition = nerode_partition(&min);
        assert_eq!(min_partition.classes().len(), min.state_count());
        assert!(min_partition.dead_class().is_none() || min.state_count() == 1);
    }
}

#[test]
fn ridfa_invariants_on_random_machines() {
    let mut rng = SplitMix64::new(0x5eed_0003);
    for round in 0..60 {
        let states = 1 + rng.below(6);
        let syms = 1 + rng.below(3);
        let multi = round % 4 == 0;
        let nfa = random_nfa(&mut rng, states, syms, 35, multi);
        let machine = build_ridfa(&nfa);

        // The unreduced interface is exactly the singleton states, one per
        // NFA state.
        assert_eq!(machine.interface().len(), nfa.state_count());
        for q in 0..nfa.state_count() {
            assert_eq!(machine.content(StateId::new(q)), [StateId::new(q)]);
        }

        // ι image containment, on arbitrary subsets of P.
        for _ in 0..10 {
            let plas: Vec<StateId> =
                machine.states().filter(|_| rng.chance(30)).collect();
            let image = machine.interface_map(&plas);
            assert!(image.iter().all(|p| machine.interface().contains(p)));
        }

        let reduced = machine.reduce_interface();
        assert!(reduced.interface().len() <= machine.interface().len());
        assert_eq!(reduced.table(), machine.table());

        // Delegation pairs are language-equivalent states.
        let partition = nerode_partition(&machine);
        for &(source, delegate) in reduced.delegation() {
            assert!(partition.same_class(source, delegate));
            assert!(!reduced.interface().contains(&source));
            assert!(reduced.interface().contains(&delegate));
        }

        // ι_min image containment on the reduced machine.
        for _ in 0..10 {
            let plas: Vec<StateId> =
                reduced.states().filter(|_| rng.chance(30)).collect();
            let image = reduced.interface_map_min(&plas);
            assert!(image.iter().all(|p| reduced.interface().contains(p)));
        }

        // Single-initial machines: the classic powerset seeded at the
        // initial embeds into the RI-DFA state-for-state.
        if nfa.initials().len() == 1 {
            let dfa = powerset_from(&nfa, nfa.initials());
            for s in dfa.states() {
                let subset = dfa.origin(s).unwrap();
                let p = machine
                    .state_with_content(subset)
                    .expect("every powerset subset is an RI-DFA state");
                for y in 0..syms {
                    let sym = SymbolId::new(y);
                    let dfa_next = dfa.next(s, sym).map(|t| dfa.origin(t).unwrap().to_vec());
                    let rid_next =
                        machine.next(p, sym).map(|t| machine.content(t).to_vec());
                    assert_eq!(dfa_next, rid_next);
                }
            }
            assert!(machine.state_count() >= dfa.state_count());
        }

        // Serial RI-DFA acceptance equals the source machine's verdict,
        // reduced or not.
        for len in 0..8 {
            let text = random_text(&mut rng, syms, len);
            let expected = nfa.accepts(&text);
            assert_eq!(recognize_serial(MachineRef::RiDfa(&machine), &text).accepted, expected);
            assert_eq!(recognize_serial(MachineRef::RiDfa(&reduced), &text).accepted, expected);
        }
    }
}

#[test]
fn all_variants_agree_with_the_source_machine_for_every_chunk_count() {
    let mut rng = SplitMix64::new(0x5eed_0004);
    for round in 0..80 {
        let states = 1 + rng.below(6);
        let syms = 1 + rng.below(3);
        let nfa = random_nfa(&mut rng, states, syms, 35, round % 5 == 0);
        let dfa = powerset_from(&nfa, nfa.initials());
        let machine = build_ridfa(&nfa);
        let reduced = machine.reduce_interface();

        let len = rng.below(11);
        let text = random_text(&mut rng, syms, len);
        let expected = nfa.accepts(&text);

        let mut last_serial = None;
        for c in 1..=len.clamp(1, 8) {
            let (dfa_ok, dfa_total) = run_chunked(MachineRef::Dfa(&dfa), &text, c);
            let (nfa_ok, _) = run_chunked(MachineRef::Nfa(&nfa), &text, c);
            let (rid_ok, rid_total) = run_chunked(MachineRef::RiDfa(&machine), &text, c);
            let (red_ok, red_total) = run_chunked(MachineRef::RiDfa(&reduced), &text, c);
            assert_eq!(dfa_ok, expected, "dfa c={c} {nfa:?} {text:?}");
            assert_eq!(nfa_ok, expected, "nfa c={c} {nfa:?} {text:?}");
            assert_eq!(rid_ok, expected, "rid c={c} {nfa:?} {text:?}");
            assert_eq!(red_ok, expected, "rid-min c={c} {nfa:?} {text:?}");

            // Interface reduction never adds work.
            assert!(red_total <= rid_total);
            // Deterministic speculation is bounded by n per start state.
            assert!(dfa_total <= (len as u64) * dfa.state_count() as u64);
            assert!(rid_total <= (len as u64) * machine.interface().len().max(1) as u64);

            // c = 1 must equal the serial run, counts included, for every
            // variant.
            if c == 1 {
                let serial = recognize_serial(MachineRef::RiDfa(&machine), &text);
                assert_eq!(serial.accepted, rid_ok);
                assert_eq!(serial.total_transitions, rid_total);
                assert_eq!(
                    recognize_serial(MachineRef::Dfa(&dfa), &text).total_transitions,
                    dfa_total
                );
                let (_, nfa_total) = run_chunked(MachineRef::Nfa(&nfa), &text, 1);
                assert_eq!(
                    recognize_serial(MachineRef::Nfa(&nfa), &text).total_transitions,
                    nfa_total
                );
                last_serial = Some(serial);
            }
        }

        // Serial deterministic run does at most n transitions, exactly n
        // when the whole text is consumed.
        let serial_dfa = recognize_serial(MachineRef::Dfa(&dfa), &text);
        assert!(serial_dfa.total_transitions <= len as u64);
        if serial_dfa.accepted {
            assert_eq!(serial_dfa.total_transitions, len as u64);
        }
        assert_eq!(serial_dfa.accepted, expected);

        // Reports are deterministic.
        if let Some(first) = last_serial {
            let again = recognize_serial(MachineRef::RiDfa(&machine), &text);
            assert_eq!(first, again);
        }
    }
}

// After each unreduced RID join step, the NFA states inside PLAS_i are
// exactly the states the source machine reaches on the prefix read so far.
#[test]
fn join_bookkeeping_tracks_the_source_machine() {
    let mut rng = SplitMix64::new(0x5eed_0005);
    for _ in 0..60 {
        let states = 1 + rng.below(6);
        let syms = 1 + rng.below(3);
        let nfa = random_nfa(&mut rng, states, syms, 35, false);
        let machine = build_ridfa(&nfa);
        let len = 1 + rng.below(10);
        let text = random_text(&mut rng, syms, len);
        let c = 1 + rng.below(4);

        let plan = split_chunks(text.len(), c).unwrap();
        let mappings: Vec<ChunkMapping> = plan
            .ranges()
            .enumerate()
            .map(|(i, r)| chunk_mapping(MachineRef::RiDfa(&machine), i == 0, &text[r]))
            .collect();
        let outcome = join_device(MachineRef::RiDfa(&machine), &mappings).unwrap();

        for (i, step) in outcome.steps.iter().enumerate() {
            let prefix_end = plan.range(i).end;
            let reached = nfa.reach(nfa.initials(), &text[..prefix_end]);
            assert_eq!(
                machine.content_union(&step.plas),
                reached,
                "chunk {} of {nfa:?} text {text:?}",
                i + 1
            );
        }
    }
}

// A state-minimal source machine leaves nothing for interface reduction to
// do. Minimality is certified by exhaustive search over all smaller NFAs.
#[test]
fn reduction_is_a_fixpoint_on_minimal_sources() {
    let mut rng = SplitMix64::new(0x5eed_0006);
    let mut minimal_seen = 0;
    for _ in 0..40 {
        let states = 2 + rng.below(2); // 2..=3 states over a binary alphabet
        let nfa = random_nfa(&mut rng, states, 2, 40, false);
        if brute::has_smaller_equivalent_nfa(&nfa) {
            continue;
        }
        minimal_seen += 1;
        let machine = build_ridfa(&nfa);
        let reduced = machine.reduce_interface();
        assert!(reduced.delegation().is_empty(), "minimal source reduced: {nfa:?}");
        assert_eq!(reduced.interface().len(), machine.interface().len());
    }
    // Unary four-state sources keep the smaller-machine search tractable.
    for _ in 0..20 {
        let nfa = random_nfa(&mut rng, 4, 1, 40, false);
        if brute::has_smaller_equivalent_nfa(&nfa) {
            continue;
        }
        minimal_seen += 1;
        let reduced = build_ridfa(&nfa).reduce_interface();
        assert!(reduced.delegation().is_empty(), "minimal source reduced: {nfa:?}");
    }
    assert!(minimal_seen > 5, "too few certified-minimal sources sampled");
}

// Interface reduction cannot beat a state-minimal source: the reduced
// interface is never smaller than the smallest equivalent NFA, whose size
// is determined by exhaustive search.
#[test]
fn reduced_interface_is_bounded_below_by_the_minimal_nfa_size() {
    let mut rng = SplitMix64::new(0x5eed_0007);
    for round in 0..50 {
        let nfa = if round % 2 == 0 {
            let states = 2 + rng.below(2);
            random_nfa(&mut rng, states, 2, 45, false)
        } else {
            let states = 2 + rng.below(3);
            random_nfa(&mut rng, states, 1, 45, false)
        };
        let reduced = build_ridfa(&nfa).reduce_interface();
        let minimal = brute::minimal_nfa_state_count(&nfa);
        assert!(
            reduced.interface().len() >= minimal,
            "interface {} below minimal NFA size {minimal} for {nfa:?}",
            reduced.interface().len()
        );
    }
}
