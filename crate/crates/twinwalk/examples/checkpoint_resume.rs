//! Checkpointed generation: freeze a stream mid-run, resume it from
//! the file, and confirm the stitched event list matches one cold run.

use twinwalk::analysis::StandardClassifier;
use twinwalk::cli::checkpoint::Checkpoint;
use twinwalk::sequences::{generate, EventStream, IncrementEvent, SequenceRule};

fn main() {
    let rule = SequenceRule::ctilde();
    let halfway = 25_000;
    let n_max = 50_000;

    // First half, then capture.
    let mut stream = generate(rule, halfway);
    let mut first_half: Vec<IncrementEvent> = Vec::new();
    for e in stream.by_ref() {
        first_half.push(e);
    }
    let (n, value) = stream.position();
    let classifier = stream.into_classifier();
    let checkpoint = Checkpoint::capture(rule, n, value, 0, classifier.last_fundamental());

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("ctilde.checkpoint.json");
    checkpoint.save(&path).expect("checkpoint saves");
    println!("checkpoint written at n = {n}:\n{}", checkpoint.to_json());

    // Resume from the file and finish the range.
    let loaded = Checkpoint::load(&path).expect("checkpoint loads");
    let resumed_rule = loaded.rule.to_rule().expect("known rule");
    let resumed = EventStream::resume(
        resumed_rule,
        loaded.n,
        loaded.value,
        n_max,
        StandardClassifier::with_state(resumed_rule, loaded.last_fundamental),
    );
    let second_half: Vec<IncrementEvent> = resumed.collect();

    let stitched: Vec<IncrementEvent> = first_half
        .iter()
        .chain(second_half.iter())
        .copied()
        .collect();
    let cold: Vec<IncrementEvent> = generate(rule, n_max).collect();

    assert_eq!(stitched, cold, "resumed run must match the cold run");
    println!(
        "resumed {} events after the checkpoint; stitched run of {} events matches a cold run",
        second_half.len(),
        stitched.len()
    );
}
