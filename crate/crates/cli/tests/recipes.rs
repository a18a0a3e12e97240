//! Runs every recipe under `recipes/` and diffs the output against its
//! golden file. Set `WORDPOLY_BLESS=1` to rewrite the goldens.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use wordpoly::oracle::SolutionSet;
use wordpoly_cli::AnalysisReport;

struct Recipe {
    name: String,
    args: Vec<String>,
    env: Vec<(String, String)>,
    exit: i32,
}

fn recipes_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes")
}

fn parse_recipe(path: &Path) -> Recipe {
    let text = fs::read_to_string(path).unwrap();
    let mut args = None;
    let mut env = Vec::new();
    let mut exit = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let (key, value) = line.split_once(':').unwrap_or_else(|| panic!("{}: bad line {line:?}", path.display()));
        let value = value.trim();
        match key {
            "args" => args = Some(value.split_whitespace().map(String::from).collect()),
            "env" => {
                let (k, v) = value.split_once('=').unwrap();
                env.push((k.into(), v.into()));
            }
            "exit" => exit = value.parse().unwrap(),
            other => panic!("{}: unknown key {other}", path.display()),
        }
    }
    Recipe {
        name: path.file_stem().unwrap().to_string_lossy().into(),
        args: args.unwrap_or_else(|| panic!("{}: no args line", path.display())),
        env,
        exit,
    }
}

fn run(args: &[String], env: &[(String, String)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wordpoly"));
    cmd.args(args).current_dir(recipes_dir()).env_remove(wordpoly_cli::WORKERS_ENV);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn all_recipes() -> Vec<Recipe> {
    let mut paths: Vec<PathBuf> = fs::read_dir(recipes_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "recipe"))
        .collect();
    paths.sort();
    paths.iter().map(|p| parse_recipe(p)).collect()
}

fn first_difference(a: &str, b: &str) -> String {
    for (i, (x, y)) in a.lines().zip(b.lines()).enumerate() {
        if x != y {
            return format!("line {}: expected {x:?}, got {y:?}", i + 1);
        }
    }
    format!("expected {} lines, got {}", a.lines().count(), b.lines().count())
}

#[test]
fn recipes_match_goldens() {
    let bless = std::env::var_os("WORDPOLY_BLESS").is_some();
    let recipes = all_recipes();
    assert!(recipes.len() >= 30, "only {} recipes found", recipes.len());
    let mut failures = Vec::new();
    for r in &recipes {
        let (code, stdout, stderr) = run(&r.args, &r.env);
        let output = format!("{stdout}{stderr}");
        let golden = recipes_dir().join(format!("{}.golden", r.name));
        if code != r.exit {
            failures.push(format!("{}: exit {code}, expected {}\n{output}", r.name, r.exit));
            continue;
        }
        if bless {
            fs::write(&golden, &output).unwrap();
            continue;
        }
        match fs::read_to_string(&golden) {
            Ok(expected) if expected == output => {}
            Ok(expected) => failures.push(format!("{}: {}", r.name, first_difference(&expected, &output))),
            Err(_) => failures.push(format!("{}: missing golden {}", r.name, golden.display())),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn json_goldens_round_trip() {
    let mut checked = 0;
    for r in all_recipes().iter().filter(|r| r.exit == 0 && r.args.iter().any(|a| a == "--json")) {
        let text = fs::read_to_string(recipes_dir().join(format!("{}.golden", r.name))).unwrap();
        let report = AnalysisReport::from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", r.name));
        assert_eq!(report.to_json() + "\n", text, "{} is not in canonical form", r.name);
        assert_eq!(AnalysisReport::from_json(&report.to_json()).unwrap(), report);
        assert!(report.timing_ms.is_none());
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn worker_count_does_not_change_output() {
    let args: Vec<String> = "--json system enumerate inputs/cover_pair.sys --max-total 6"
        .split(' ')
        .map(String::from)
        .collect();
    let (_, serial, _) = run(&args, &[]);
    for w in ["2", "5"] {
        let (code, parallel, _) = run(&args, &[(wordpoly_cli::WORKERS_ENV.into(), w.into())]);
        assert_eq!(code, 0);
        assert_eq!(parallel, serial, "{w} workers");
    }
}

#[test]
fn invalid_worker_count_is_an_input_error() {
    let (code, _, stderr) = run(&["encode".into(), "12".into()], &[(wordpoly_cli::WORKERS_ENV.into(), "0".into())]);
    assert_eq!(code, 1);
    assert!(stderr.contains(wordpoly_cli::WORKERS_ENV));
}

#[test]
fn timing_is_reported_only_on_request() {
    let (code, out, _) = run(&["--json".into(), "--timing".into(), "encode".into(), "1212".into()], &[]);
    assert_eq!(code, 0);
    let report = AnalysisReport::from_json(&out).unwrap();
    assert!(report.timing_ms.is_some_and(|t| t >= 0.0));
    assert_eq!(AnalysisReport::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn export_writes_parseable_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sols.jsonl");
    let args: Vec<String> = vec![
        "--json".into(),
        "system".into(),
        "enumerate".into(),
        "inputs/xyz.eq".into(),
        "--max-total".into(),
        "6".into(),
        "--export".into(),
        target.to_string_lossy().into(),
    ];
    let (code, out, _) = run(&args, &[]);
    assert_eq!(code, 0);
    let report = AnalysisReport::from_json(&out).unwrap();
    let entries = SolutionSet::entries_from_json_lines(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(entries.len() as u64, report.results["count"].as_u64().unwrap());
    assert!(entries.iter().all(|e| e.rank.is_some()));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help".into()], &[]);
    assert_eq!(code, 0);
    assert!(out.contains("encode") && out.contains("powerid"));
}
