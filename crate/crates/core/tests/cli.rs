use std::path::PathBuf;

use fully_optimal::cli::run_command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> fully_optimal::cli::CommandOutput {
    run_command(std::iter::once("fob").chain(args.iter().copied()))
}

#[test]
fn optimize_trace_matches_golden_file() {
    let golden = include_str!("golden/g_star_trace.txt");
    let out = run(&["alpha", &fixture("g_star.graph"), "--method=optimize", "--trace"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, golden);
}

#[test]
fn alpha_by_each_method() {
    for method in ["brute", "delcon", "optimize"] {
        let out = run(&["alpha", &fixture("g_star.graph"), "--method", method]);
        assert_eq!(out.stdout, "1 4 5 7\n", "{method}");
    }
    let out = run(&["alpha", &fixture("t3.graph"), "--method=brute"]);
    assert_eq!(out.stdout, "1 3\n");
    let out = run(&["alpha", &fixture("g_star.graph"), "--method=delcon", "--formulation=cocycle"]);
    assert_eq!(out.stdout, "1 4 5 7\n");
}

#[test]
fn trace_needs_the_optimizer() {
    let out = run(&["alpha", &fixture("g_star.graph"), "--method=brute", "--trace"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("--trace"));
}

#[test]
fn check_reports_all_characterizations() {
    let out = run(&["check", &fixture("t3.graph")]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout.lines().count(), 3);
    assert!(out.stdout.lines().all(|l| l.ends_with(": bipolar")));
}

#[test]
fn invert_in_both_directions() {
    let fwd = run(&["invert", &fixture("g_star.graph"), "--tree", "1,4,5,8", "--p-direction", "fwd"]);
    assert_eq!(fwd.status, 0, "{}", fwd.stderr);
    assert!(fwd.stdout.contains("edge 8 c a"));
    let rev = run(&["invert", &fixture("g_star.graph"), "--tree", "1 4 5 8", "--p-direction", "rev"]);
    assert!(rev.stdout.contains("edge 1 t s"));
    assert!(rev.stdout.contains("edge 8 a c"));
}

#[test]
fn invert_rejects_a_tree_of_higher_activity() {
    let out = run(&["invert", &fixture("g_star.graph"), "--tree", "1,2,3,6"]);
    assert_ne!(out.status, 0);
    assert!(out.stderr.starts_with("error:"));
}

#[test]
fn bijection_table() {
    let out = run(&["bijection", &fixture("g_star.graph")]);
    assert_eq!(out.status, 0);
    let rows: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(rows[0], "# edges 1 2 3 4 5 6 7 8");
    assert_eq!(rows.len(), 4);
    assert!(rows.contains(&"00000000 -> 1 4 5 7"));
}

#[test]
fn cocycles_through_an_edge() {
    let out = run(&["cocycles", &fixture("g_star.graph"), "--directed-through", "1"]);
    assert_eq!(out.stdout.lines().count(), 5);
    assert!(out.stdout.lines().any(|l| l == "+{1,2,3}/-{}"));
    let all = run(&["cocycles", &fixture("t3.graph")]);
    assert_eq!(all.stdout.lines().count(), 3);
    assert!(all.stdout.lines().all(|l| l.contains(" side=")));
}

#[test]
fn verify_small_exhaustive_corpus() {
    let out = run(&["verify", "--corpus", "exhaustive", "--max-vertices", "3", "--max-edges", "4", "--orderings", "2"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("PASS\n"));
    assert!(out.stdout.contains("failures: 0"));
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = run(&["gen", "--vertices", "5", "--edges", "8", "--seed", "4"]);
    let b = run(&["gen", "--vertices", "5", "--edges", "8", "--seed", "4"]);
    assert_eq!(a, b);
    let g = fully_optimal::io::parse_graph(&a.stdout).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).status, 2);
    assert_eq!(run(&["alpha", &fixture("g_star.graph"), "--method=fast"]).status, 2);
    assert_eq!(run(&["gen", "--vertices", "4", "--edges", "1"]).status, 2);
    let missing = run(&["check", "/nonexistent/graph"]);
    assert_ne!(missing.status, 0);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("fob-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.graph");
    std::fs::write(&path, "vertices: 2\nvertex u\nvertex v\nedge 1 u x\n").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_ne!(out.status, 0);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);
    std::fs::remove_dir_all(dir).unwrap();
}
