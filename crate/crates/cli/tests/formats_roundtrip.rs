//! Randomized round-trip checks for the automaton document format, and
//! exhaustive membership checks for word-automaton fixtures.

use ridfa_cli::formats::document::{load_automaton, save_automaton, Automaton};
use ridfa_cli::formats::timbuk::load_timbuk;
use ridfa_core::{build_ridfa, minimize_dfa, powerset_from, StateId, SymbolId};
use ridfa_testkit::brute;
use ridfa_testkit::random::{random_nfa, SplitMix64};

// Loading a saved machine reproduces it exactly — same state ids, same
// everything — for 100 random instances of each machine kind.
#[test]
fn document_round_trip_is_the_identity() {
    let mut rng = SplitMix64::new(0xd0c_0001);
    for round in 0..100 {
        let states = 1 + rng.below(6);
        let syms = 1 + rng.below(3);
        let nfa = random_nfa(&mut rng, states, syms, 35, round % 3 == 0);

        let dfa = powerset_from(&nfa, nfa.initials());
        let dfa = if round % 2 == 0 { minimize_dfa(&dfa) } else { dfa };
        let ridfa = if round % 2 == 0 {
            build_ridfa(&nfa).reduce_interface()
        } else {
            build_ridfa(&nfa)
        };

        for machine in [Automaton::Nfa(nfa), Automaton::Dfa(dfa), Automaton::RiDfa(ridfa)] {
            let saved = save_automaton(&machine);
            let loaded = load_automaton(&saved).unwrap();
            assert_eq!(loaded, machine, "round {round}: {saved}");
            // Round-trip stability: saving again is byte-identical.
            assert_eq!(save_automaton(&loaded), saved);
        }
    }
}

// Word-automaton fixture with its membership table worked out by hand:
// the language is a(ba)* — checked against the loaded machine on every
// string of length <= 4.
#[test]
fn timbuk_fixture_matches_its_membership_table() {
    let doc = "
        Ops go:0 a:1 b:1
        Automaton alternating
        States even odd
        Final States odd
        Transitions
        go -> even
        a(even) -> odd
        b(odd) -> even
    ";
    let (nfa, warnings) = load_timbuk(doc).unwrap();
    assert!(warnings.is_empty());

    let a = nfa.alphabet().lookup("a").unwrap();
    let b = nfa.alphabet().lookup("b").unwrap();
    let accepted_by_table = |string: &[SymbolId]| -> bool {
        // a(ba)*: odd length, 'a' on even positions, 'b' on odd ones.
        string.len() % 2 == 1
            && string.iter().enumerate().all(|(i, &y)| y == if i % 2 == 0 { a } else { b })
    };
    for string in brute::all_strings(nfa.alphabet().len(), 4) {
        assert_eq!(nfa.accepts(&string), accepted_by_table(&string), "string {string:?}");
    }
}

// Same exhaustive check for a fixture with several initial states: the
// language is x | yx (reading from the nullary-marked states).
#[test]
fn multi_initial_fixture_matches_its_membership_table() {
    let doc = "
        Ops c0:0 c1:0 x:1 y:1
        Automaton multi
        States p q r
        Final States r
        Transitions
        c0 -> p
        c1 -> q
        x(p) -> r
        y(q) -> p
    ";
    let (nfa, _) = load_timbuk(doc).unwrap();
    assert_eq!(nfa.initials(), [StateId::new(0), StateId::new(1)]);

    let x = nfa.alphabet().lookup("x").unwrap();
    let y = nfa.alphabet().lookup("y").unwrap();
    for string in brute::all_strings(nfa.alphabet().len(), 4) {
        let expected = string == [x] || string == [y, x];
        assert_eq!(nfa.accepts(&string), expected, "string {string:?}");
    }
}
