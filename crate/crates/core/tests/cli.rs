//! The `colorful` binary end to end.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use colorful_tverberg::format;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn colorful(args: &[&str], input: &str, threads: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_colorful"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    match threads {
        Some(t) => cmd.env("COLORFUL_THREADS", t),
        None => cmd.env_remove("COLORFUL_THREADS"),
    };
    let mut child = cmd.spawn().expect("binary builds with the tests");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    Run {
        code: output.status.code().unwrap(),
        out: String::from_utf8(output.stdout).unwrap(),
        err: String::from_utf8(output.stderr).unwrap(),
    }
}

fn run(args: &[&str], input: &str) -> Run {
    colorful(args, input, None)
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("colorful-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

const FIGURE: &str = "1 2 1 4 1 2 4 1 3 2 4 3 2\n";

#[test]
fn word_commands() {
    let r = run(&["word", "delta", "--d", "2"], FIGURE);
    assert_eq!((r.code, r.out.as_str()), (0, "1 2 4\n2 3 4\n"));
    let r = run(&["word", "find", "--d", "2", "--sigma", "1 2 4"], FIGURE);
    assert_eq!((r.code, r.out.as_str()), (0, "1 2 4 | 2 | 1 2 4 5 6 7 8\n"));
    let cert = format::parse_certificate(&r.out).unwrap();
    assert!(cert.is_valid_for(&format::parse_word(FIGURE).unwrap()));
    assert_eq!(run(&["word", "find", "--d", "2", "--sigma", "1 3"], FIGURE).code, 1);
    assert_eq!(run(&["word", "reduce"], "1 1 2 2 1\n").out, "1 2 1\n");
    assert_eq!(run(&["word", "restrict", "--tau", "1 3"], FIGURE).out, "1 1 1 1 3 3\n");
    assert_eq!(run(&["word", "check", "--d", "1"], "1 2 1\n").code, 0);
    assert_eq!(run(&["word", "check", "--d", "1"], "1 2 2\n").code, 1);
}

#[test]
fn complex_and_construct_commands() {
    let k = "1 2\n1 4\n2 3 4\n";
    let file = temp_file("figure.complex", k);
    let r = run(&["construct", "facets", "--file", &file], "");
    assert_eq!(r.code, 0);
    assert!(r.err.contains("dimension: 4"), "{}", r.err);
    let word = r.out.clone();
    let r = run(&["word", "delta", "--d", "4"], &word);
    assert_eq!(r.out, k);
    assert_eq!(format::parse_complex(&r.out).unwrap(), format::parse_complex(k).unwrap());

    let r = run(&["construct", "canonical", "--sigma", "1 2 3", "--d", "2"], "");
    assert_eq!(r.code, 0);
    assert_eq!(run(&["word", "check", "--d", "2"], &r.out).code, 0);

    let r = run(&["construct", "delete", "--i", "3"], "2 1 3 2 1 2 3\n");
    assert_eq!(r.code, 0);
    assert_eq!(run(&["word", "check", "--d", "2"], &r.out).code, 0);

    assert_eq!(run(&["complex", "face", "--sigma", "2 4"], k).code, 0);
    assert_eq!(run(&["complex", "face", "--sigma", "1 2 4"], k).code, 1);
    assert_eq!(run(&["complex", "induced", "--tau", "1 2 3"], k).out, "1 2\n2 3\n");
}

#[test]
fn geometry_commands() {
    let parts = temp_file(
        "diagonals.parts",
        "dim 2\npart\n0 0\n2 2\npart\n0 2\n2 0\n",
    );
    let r = run(&["geom", "intersect", "--parts", &parts], "");
    assert_eq!((r.code, r.out.trim()), (0, "1/1 1/1"));
    let parts = temp_file("apart.parts", "dim 1\npart\n0\npart\n1\n");
    assert_eq!(run(&["geom", "intersect", "--parts", &parts], "").code, 1);

    let r = run(&["geom", "moment", "--n", "4", "--d", "2"], "");
    assert_eq!(r.code, 0);
    assert_eq!(format::render_points(&format::parse_points(&r.out).unwrap()), r.out);
    assert_eq!(run(&["geom", "gp"], &r.out).code, 0);
    assert_eq!(run(&["geom", "sgp"], "dim 2\n0 0\n1 0\n0 1\n1 1\n").code, 1);
}

#[test]
fn tverberg_commands() {
    let points = temp_file("line5.points", "dim 1\n0\n1\n2\n3\n4\n");
    let r = run(&["tverberg", "find", "--points", &points, "--r", "3"], "");
    assert_eq!(r.code, 0);
    let partition_text: String = r.out.lines().filter(|l| !l.starts_with("witness")).map(|l| format!("{l}\n")).collect();
    let partition = format::parse_partition(&partition_text).unwrap();
    assert_eq!(partition.num_parts(), 3);

    let file = temp_file("found.partition", &partition_text);
    let r = run(&["tverberg", "nerve", "--points", &points, "--partition", &file], "");
    assert_eq!((r.code, r.out.as_str()), (0, "1 2 3\n"));
    let r = run(&["tverberg", "part2word", "--points", &points, "--partition", &file], "");
    assert_eq!(r.code, 0);
    let r2 = run(&["tverberg", "word2part", "--points", &points], &r.out);
    assert_eq!(format::parse_partition(&r2.out).unwrap().canonical(), partition.canonical());

    let r = run(&["tverberg", "colorful-check", "--points", &points, "--d", "1", "--rmax", "3"], "");
    assert_eq!(r.code, 0);
    let r = run(&["tverberg", "minimal", "--r", "2"], "dim 1\n0\n1\n2\n");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("1: 1 3\n2: 2\n"));
}

#[test]
fn graph_commands() {
    let r = run(&["graph", "gd", "--n", "2", "--d", "1"], "");
    assert_eq!(r.code, 0);
    let g = format::parse_complex(&r.out).unwrap();
    assert_eq!((g.vertices().len(), g.edges().len()), (6, 4));

    let path = temp_file("path.complex", "1 2\n2 3\n");
    let r = run(&["graph", "search", "--d", "1", "--max-len", "6", "--file", &path], "");
    assert_eq!((r.code, r.out.as_str()), (0, "2 1 3 2\n"));
    let r = run(&["graph", "search", "--d", "1", "--max-len", "3", "--file", &path], "");
    assert_eq!((r.code, r.out.as_str()), (1, "none\n"));
}

#[test]
fn usage_errors_are_one_line() {
    for (args, input) in [
        (&["word", "check", "--d", "1"][..], "1 two\n"),
        (&["geom", "gp"][..], "2 2\n"),
        (&["construct", "facets", "--file", "/nonexistent/file"][..], ""),
        (&["tverberg", "find", "--r", "3"][..], "dim 1\n1/0\n"),
    ] {
        let r = run(args, input);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(r.err.starts_with("error: ") && r.err.lines().count() == 1, "{:?}", r.err);
        assert!(r.out.is_empty());
    }
    assert_eq!(run(&["frobnicate"], "").code, 2);
    let r = run(&["--help"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("tverberg"));
    let r = colorful(&["word", "check", "--d", "1"], "1 2 1\n", Some("zero"));
    assert_eq!(r.code, 2);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let points = run(&["geom", "moment", "--n", "7", "--d", "2"], "").out;
    for args in [
        &["tverberg", "minimal", "--r", "3"][..],
        &["tverberg", "find", "--r", "3"][..],
        &["tverberg", "colorful-check", "--d", "2", "--rmax", "3"][..],
    ] {
        let one = colorful(args, &points, Some("1"));
        let four = colorful(args, &points, Some("4"));
        assert_eq!(one.code, 0, "{args:?}: {}", one.err);
        assert_eq!((one.code, &one.out), (four.code, &four.out), "{args:?}");
    }
    let one = colorful(&["word", "delta", "--d", "2"], FIGURE, Some("1"));
    let four = colorful(&["word", "delta", "--d", "2"], FIGURE, Some("4"));
    assert_eq!(one.out, four.out);
}
