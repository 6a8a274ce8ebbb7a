use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: &[&str] = &[
    "field_arithmetic",
    "graded_linear_algebra",
    "superalgebras",
    "modules_and_hom",
    "projective_generator",
    "morita_context",
    "morita_equivalence",
    "super_azumaya",
    "json_io",
];

/// `cargo test` builds examples next to `deps/`.
fn example_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn every_example_runs() {
    let dir = example_dir();
    let listed: Vec<String> = std::fs::read_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/examples"))
        .unwrap()
        .map(|e| e.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    assert_eq!(listed.len(), EXAMPLES.len(), "examples/ and EXAMPLES disagree: {listed:?}");
    for name in EXAMPLES {
        let out = Command::new(dir.join(name)).output().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(out.status.success(), "{name} failed: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
