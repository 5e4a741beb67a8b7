//! End-to-end tests of the `ridfa` binary: subcommand surfaces, file
//! formats on disk, and exit codes (0 accept, 1 reject, 2 usage, 3
//! internal).

use std::path::Path;
use std::process::{Command, Output};

fn ridfa(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ridfa"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn build_recognize_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = ridfa(
        dir.path(),
        &["build", "--re", "(a|b)*a(a|b)(a|b)", "--name", "pat", "--minimize", "--out", "."],
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let line = stdout(&out);
    assert!(line.contains("min-dfa 8 states"), "{line}");
    for suffix in ["nfa", "dfa", "ridfa"] {
        assert!(dir.path().join(format!("pat.{suffix}.json")).exists());
    }

    // "baab" has an 'a' three positions from the end: accepted.
    std::fs::write(dir.path().join("yes.txt"), "baab").unwrap();
    std::fs::write(dir.path().join("no.txt"), "abbb").unwrap();

    for variant in ["dfa", "nfa", "ridfa"] {
        let doc = format!("pat.{variant}.json");
        let accept = ridfa(
            dir.path(),
            &[
                "recognize",
                "--automaton",
                &doc,
                "--variant",
                variant,
                "--text",
                "yes.txt",
                "--chunks",
                "2",
                "--out",
                "report.json",
            ],
        );
        assert_eq!(accept.status.code(), Some(0), "{}", stderr(&accept));
        assert!(stdout(&accept).contains("verdict:     accept"));

        let reject = ridfa(
            dir.path(),
            &["recognize", "--automaton", &doc, "--variant", variant, "--text", "no.txt"],
        );
        assert_eq!(reject.status.code(), Some(1));
        assert!(stdout(&reject).contains("verdict:     reject"));
        // Counts are still reported on rejection.
        assert!(stdout(&reject).contains("transitions:"));
    }

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["accepted"], true);
    assert_eq!(report["chunk_count"], 2);
}

// End-to-end version of the library golden case: the three-state machine's
// RI-DFA does 9 transitions on the two-chunk sample and 6 on the serial
// run.
#[test]
fn recognize_reports_exact_golden_counts() {
    use ridfa_cli::formats::document::{save_automaton, Automaton};
    use ridfa_core::build_ridfa;
    use ridfa_testkit::machines;

    let dir = tempfile::tempdir().unwrap();
    let machine = build_ridfa(&machines::cyclic3_nfa());
    std::fs::write(
        dir.path().join("m.ridfa.json"),
        save_automaton(&Automaton::RiDfa(machine)),
    )
    .unwrap();
    std::fs::write(dir.path().join("t.txt"), "aabcab").unwrap();

    for (chunks, expected_total) in [("2", 9u64), ("1", 6u64)] {
        let out = ridfa(
            dir.path(),
            &[
                "recognize",
                "--automaton",
                "m.ridfa.json",
                "--variant",
                "ridfa",
                "--text",
                "t.txt",
                "--chunks",
                chunks,
                "--out",
                "report.json",
            ],
        );
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let report: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
                .unwrap();
        assert_eq!(report["total_transitions"], expected_total, "chunks = {chunks}");
        assert_eq!(report["accepted"], true);
    }
}

// Full pipeline: ingest a word automaton from a collection file, build all
// three chunk automata, and reproduce the golden two-chunk transition
// totals 15 / 14 / 9 through the binary.
#[test]
fn timbuk_ingestion_reproduces_the_golden_totals() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("cyclic.txt"),
        "Ops go:0 a:1 b:1 c:1\n\
         Automaton cyclic\n\
         States s0 s1 s2\n\
         Final States s2\n\
         Transitions\n\
         go -> s0\n\
         a(s0) -> s1\n\
         c(s0) -> s1\n\
         a(s1) -> s1\n\
         b(s1) -> s2\n\
         b(s2) -> s1\n\
         a(s1) -> s0\n\
         b(s1) -> s0\n\
         c(s1) -> s0\n",
    )
    .unwrap();
    let built = ridfa(
        dir.path(),
        &["build", "--timbuk", "cyclic.txt", "--minimize", "--name", "cyclic", "--out", "."],
    );
    assert!(built.status.success(), "{}", stderr(&built));
    std::fs::write(dir.path().join("t.txt"), "aabcab").unwrap();

    for (variant, expected_total) in [("dfa", 15u64), ("nfa", 14), ("ridfa", 9)] {
        let out = ridfa(
            dir.path(),
            &[
                "recognize",
                "--automaton",
                &format!("cyclic.{variant}.json"),
                "--variant",
                variant,
                "--text",
                "t.txt",
                "--chunks",
                "2",
                "--out",
                "report.json",
            ],
        );
        assert_eq!(out.status.code(), Some(0), "{variant}: {}", stderr(&out));
        let report: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
                .unwrap();
        assert_eq!(report["total_transitions"], expected_total, "variant {variant}");
        assert_eq!(report["accepted"], true);
    }
}

#[test]
fn build_accepts_a_saved_nfa_document_as_source() {
    let dir = tempfile::tempdir().unwrap();
    let first = ridfa(dir.path(), &["build", "--family", "3", "--out", "."]);
    assert!(first.status.success(), "{}", stderr(&first));
    let second = ridfa(
        dir.path(),
        &["build", "--automaton", "family-k3.nfa.json", "--name", "again", "--out", "."],
    );
    assert!(second.status.success(), "{}", stderr(&second));
    // Same machine, same stats (modulo the name prefix and timings).
    let strip = |s: &str| s.split("; built").next().unwrap().split(": ").nth(1).unwrap().to_string();
    assert_eq!(strip(&stdout(&first)), strip(&stdout(&second)));
    // And the rebuilt NFA document is identical.
    let a = std::fs::read_to_string(dir.path().join("family-k3.nfa.json")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("again.nfa.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();

    // Empty pattern.
    let out = ridfa(dir.path(), &["build", "--re", "", "--out", "."]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("empty pattern"));

    // Unknown flag (clap's own exit code).
    let out = ridfa(dir.path(), &["build", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    // Variant/document kind mismatch.
    let built = ridfa(dir.path(), &["build", "--family", "2", "--out", "."]);
    assert!(built.status.success());
    std::fs::write(dir.path().join("t.txt"), "ab").unwrap();
    let out = ridfa(
        dir.path(),
        &[
            "recognize",
            "--automaton",
            "family-k2.nfa.json",
            "--variant",
            "dfa",
            "--text",
            "t.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("holds a nfa document"));

    // Foreign byte under the strict default policy.
    std::fs::write(dir.path().join("bad.txt"), "azb").unwrap();
    let out = ridfa(
        dir.path(),
        &[
            "recognize",
            "--automaton",
            "family-k2.dfa.json",
            "--variant",
            "dfa",
            "--text",
            "bad.txt",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("offset 1"));
}

#[test]
fn foreign_bytes_can_be_sunk() {
    let dir = tempfile::tempdir().unwrap();
    let built = ridfa(dir.path(), &["build", "--family", "1", "--out", "."]);
    assert!(built.status.success());
    // The foreign byte kills every run; the text is rejected, exit 1.
    std::fs::write(dir.path().join("bad.txt"), "azb").unwrap();
    let out = ridfa(
        dir.path(),
        &[
            "recognize",
            "--automaton",
            "family-k1.ridfa.json",
            "--variant",
            "ridfa",
            "--text",
            "bad.txt",
            "--allow-foreign",
        ],
    );
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(stdout(&out).contains("reject"));
}

#[test]
fn bench_writes_csv_with_ratio_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = ridfa(
        dir.path(),
        &[
            "bench", "--family", "4", "--gen", "walk", "--len", "256,512", "--chunks", "4,8",
            "--reps", "2", "--seed", "5", "--csv", "sweep.csv",
        ],
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("benchmark,variant,chunks,text_length,transitions_total"));
    // 2 texts x 2 chunk counts x 3 variants.
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 12);
    for row in &rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[0], "family-k4");
        // Ratio columns are recomputable from the raw totals of the group.
        let ratio: f64 = cells[9].parse().unwrap();
        assert!(ratio >= 1.0);
    }
    // Each group's dfa/rid ratio really is the dfa total over the rid total.
    let total = |variant: &str, chunks: &str, len: &str| -> f64 {
        rows.iter()
            .map(|row| row.split(',').collect::<Vec<_>>())
            .find(|cells| cells[1] == variant && cells[2] == chunks && cells[3] == len)
            .map(|cells| cells[4].parse().unwrap())
            .unwrap()
    };
    let ratio_cell: f64 = rows
        .iter()
        .map(|row| row.split(',').collect::<Vec<_>>())
        .find(|cells| cells[1] == "ridfa" && cells[2] == "4" && cells[3] == "256")
        .map(|cells| cells[9].parse().unwrap())
        .unwrap();
    // The cell is printed with six decimals; compare at that precision.
    assert!((ratio_cell - total("dfa", "4", "256") / total("ridfa", "4", "256")).abs() < 1e-6);
}

#[test]
fn bench_without_texts_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = ridfa(dir.path(), &["bench", "--family", "2", "--chunks", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no text sources"));
}

#[test]
fn stats_on_a_timbuk_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("word.txt"),
        "Ops go:0 a:1 b:1\nAutomaton w\nStates p q\nFinal States q\nTransitions\ngo -> p\na(p) -> q\nb(q) -> p\n",
    )
    .unwrap();
    let out = ridfa(dir.path(), &["stats", "--timbuk", "word.txt", "--csv", "stats.csv"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("nfa 2 states"));
    let csv = std::fs::read_to_string(dir.path().join("stats.csv")).unwrap();
    assert!(csv.starts_with("name,nfa_states"));
    assert!(csv.contains("word,2,1,"));
}

#[test]
fn build_from_timbuk_reports_warnings() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("noinit.txt"),
        "Ops a:1\nAutomaton w\nStates p\nFinal States p\nTransitions\na(p) -> p\n",
    )
    .unwrap();
    let out = ridfa(dir.path(), &["build", "--timbuk", "noinit.txt", "--out", "."]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("no initial states"));
}
