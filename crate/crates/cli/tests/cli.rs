use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn demo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/demo")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hdb-bench"))
}

/// Input flags for the files in `dir`; `optional` picks which of
/// nutrients/income/config to pass.
fn input_args(dir: &Path, optional: &[&str]) -> Vec<String> {
    let mut args = Vec::new();
    for (flag, file) in [
        ("items", "items.csv"),
        ("ppp", "ppp.csv"),
        ("fbs", "fbs.csv"),
    ] {
        args.push(format!("--{flag}"));
        args.push(dir.join(file).display().to_string());
    }
    for (flag, file) in [
        ("nutrients", "nutrients.csv"),
        ("income", "income.csv"),
        ("config", "config.toml"),
    ] {
        if optional.contains(&flag) {
            args.push(format!("--{flag}"));
            args.push(dir.join(file).display().to_string());
        }
    }
    args
}

const ALL_OPTIONAL: &[&str] = &["nutrients", "income", "config"];

fn run(cmd: &str, inputs: Vec<String>, extra: &[&str]) -> Output {
    bin().arg(cmd).args(inputs).args(extra).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// The demo data restricted to the countries that are eligible everywhere.
fn clean_fixture() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for f in [
        "ppp.csv",
        "fbs.csv",
        "nutrients.csv",
        "income.csv",
        "config.toml",
    ] {
        fs::copy(demo().join(f), dir.path().join(f)).unwrap();
    }
    let items = fs::read_to_string(demo().join("items.csv")).unwrap();
    let kept: Vec<&str> = items
        .lines()
        .enumerate()
        .filter(|(i, l)| *i == 0 || l.starts_with("KEN,") || l.starts_with("FRA,"))
        .map(|(_, l)| l)
        .filter(|l| !l.contains("sukuma_wiki"))
        .collect();
    fs::write(dir.path().join("items.csv"), kept.join("\n") + "\n").unwrap();
    dir
}

fn read_dir(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

#[test]
fn validate_lists_two_vegetable_country_as_ineligible() {
    let o = run("validate", input_args(&demo(), ALL_OPTIONAL), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(
        out.contains("MWI ineligible for scenario 1: VEG: 2 candidate items, 3 required"),
        "{out}"
    );
    assert!(out
        .lines()
        .any(|l| l.starts_with("KEN") && l.ends_with("ok ok ok ok ok")));
    assert!(out.contains("scenario 1: 3 of 5 countries eligible"));
    assert!(stderr(&o).contains("edible_fraction out of range"));
}

#[test]
fn validate_writes_tables_when_asked() {
    let out = tempfile::tempdir().unwrap();
    let o = run(
        "validate",
        input_args(&demo(), &[]),
        &["--out", out.path().to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    let dropped = fs::read_to_string(out.path().join("dropped_rows.csv")).unwrap();
    assert_eq!(dropped.lines().count(), 4);
    assert!(dropped.contains("ATL/rice,missing_ppp_factor"), "{dropped}");
    assert!(out.path().join("eligibility.csv.meta.json").exists());
}

#[test]
fn missing_ppp_file_is_fatal() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(demo().join("items.csv"), dir.path().join("items.csv")).unwrap();
    fs::copy(demo().join("fbs.csv"), dir.path().join("fbs.csv")).unwrap();
    let o = run("validate", input_args(dir.path(), &[]), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ppp.csv"), "{}", stderr(&o));
}

#[test]
fn malformed_number_is_fatal_with_line() {
    let dir = clean_fixture();
    let items = fs::read_to_string(dir.path().join("items.csv")).unwrap();
    let mut lines: Vec<String> = items.lines().map(String::from).collect();
    let mut fields: Vec<&str> = lines[3].split(',').collect();
    fields[4] = "cheap";
    lines[3] = fields.join(",");
    fs::write(dir.path().join("items.csv"), lines.join("\n")).unwrap();
    let o = run("validate", input_args(dir.path(), &[]), &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("items.csv") && err.contains('4'), "{err}");
}

#[test]
fn bad_scenario_is_rejected() {
    let out = tempfile::tempdir().unwrap();
    let o = run(
        "diets",
        input_args(&demo(), &[]),
        &["--out", out.path().to_str().unwrap(), "--scenario", "4"],
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(
        "simulate",
        input_args(&demo(), &[]),
        &["--out", out.path().to_str().unwrap(), "--scenario", "2"],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diets_match_golden_snapshot() {
    let out = tempfile::tempdir().unwrap();
    let o = run(
        "diets",
        input_args(&demo(), &[]),
        &["--out", out.path().to_str().unwrap()],
    );
    // MWI and ATL are skipped, PER has no diet 3
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("skipped MWI scenario 1"));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for f in ["diets.csv", "metrics.csv"] {
        assert_eq!(
            fs::read_to_string(out.path().join(f)).unwrap(),
            fs::read_to_string(golden.join(f)).unwrap(),
            "{f}"
        );
    }
}

#[test]
fn clean_inputs_exit_zero() {
    let data = clean_fixture();
    for (cmd, extra) in [("diets", &[][..]), ("report", &["--iterations", "50"][..])] {
        let out = tempfile::tempdir().unwrap();
        let mut args = vec!["--out", out.path().to_str().unwrap()];
        args.extend(extra);
        let o = run(cmd, input_args(data.path(), ALL_OPTIONAL), &args);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stderr(&o));
    }
    let out = tempfile::tempdir().unwrap();
    let o = run(
        "simulate",
        input_args(data.path(), &[]),
        &[
            "--out",
            out.path().to_str().unwrap(),
            "--scenario",
            "5",
            "--iterations",
            "100",
            "--draws",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let draws = fs::read_to_string(out.path().join("draws_s5.csv")).unwrap();
    assert_eq!(draws.lines().count(), 1 + 2 * 100);
}

fn column_index(header: &csv::StringRecord, name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

#[test]
fn simulate_is_deterministic_and_ordered() {
    let data = input_args(&demo(), &[]);
    let mut outputs = Vec::new();
    for threads in ["1", "1", "4", "8"] {
        let out = tempfile::tempdir().unwrap();
        let o = run(
            "simulate",
            data.clone(),
            &[
                "--out",
                out.path().to_str().unwrap(),
                "--scenario",
                "4",
                "--iterations",
                "300",
                "--seed",
                "11",
                "--threads",
                threads,
                "--draws",
            ],
        );
        assert_eq!(o.status.code(), Some(1));
        outputs.push(read_dir(out.path()));
    }
    for other in &outputs[1..] {
        assert_eq!(other, &outputs[0]);
    }
    let summary = &outputs[0]["simulation_summary_s4.csv"];
    let mut r = csv::Reader::from_reader(summary.as_slice());
    let h = r.headers().unwrap().clone();
    let mut rows = 0;
    for rec in r.records() {
        let rec = rec.unwrap();
        for m in ["cost", "emissions"] {
            let get =
                |q: &str| -> f64 { rec[column_index(&h, &format!("{m}_{q}"))].parse().unwrap() };
            assert!(get("p2_5") <= get("p50") && get("p50") <= get("p97_5"));
        }
        rows += 1;
    }
    assert_eq!(rows, 3);
    let meta =
        String::from_utf8(outputs[0]["simulation_summary_s4.csv.meta.json"].clone()).unwrap();
    assert!(
        meta.contains("\"seed\": 11") && meta.contains("\"iterations\": 300"),
        "{meta}"
    );
    assert!(meta.contains("\"version\": 1"));
}

#[test]
fn report_is_identical_across_thread_counts() {
    let mut outputs = Vec::new();
    for threads in ["1", "4", "8"] {
        let out = tempfile::tempdir().unwrap();
        run(
            "report",
            input_args(&demo(), ALL_OPTIONAL),
            &[
                "--out",
                out.path().to_str().unwrap(),
                "--iterations",
                "200",
                "--threads",
                threads,
            ],
        );
        outputs.push(read_dir(out.path()));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn report_sections_follow_supplied_inputs() {
    let full = tempfile::tempdir().unwrap();
    let o = run(
        "report",
        input_args(&demo(), ALL_OPTIONAL),
        &[
            "--out",
            full.path().to_str().unwrap(),
            "--iterations",
            "100",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    let no_income = tempfile::tempdir().unwrap();
    let o = run(
        "report",
        input_args(&demo(), &["nutrients", "config"]),
        &[
            "--out",
            no_income.path().to_str().unwrap(),
            "--iterations",
            "100",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("PUA section omitted"));

    let full_files: BTreeSet<String> = read_dir(full.path()).into_keys().collect();
    let partial_files: BTreeSet<String> = read_dir(no_income.path()).into_keys().collect();
    let missing: Vec<&String> = full_files.difference(&partial_files).collect();
    assert_eq!(missing, ["pua.csv", "pua.csv.meta.json"]);
    assert!(partial_files.is_subset(&full_files));
    for f in [
        "diets.csv",
        "summary_cost.csv",
        "adequacy.csv",
        "item_counts.csv",
    ] {
        assert_eq!(
            fs::read(full.path().join(f)).unwrap(),
            fs::read(no_income.path().join(f)).unwrap(),
            "{f}"
        );
    }

    let bare = tempfile::tempdir().unwrap();
    run(
        "report",
        input_args(&demo(), &[]),
        &["--out", bare.path().to_str().unwrap(), "--iterations", "50"],
    );
    assert!(!bare.path().join("adequacy.csv").exists());
    assert!(!bare.path().join("pua.csv").exists());
    assert!(bare.path().join("summary_emissions.csv").exists());
}

#[test]
fn sidecars_hash_their_tables() {
    let out = tempfile::tempdir().unwrap();
    run(
        "diets",
        input_args(&demo(), &[]),
        &["--out", out.path().to_str().unwrap()],
    );
    let meta = fs::read_to_string(out.path().join("diets.csv.meta.json")).unwrap();
    let bytes = fs::read(out.path().join("diets.csv")).unwrap();
    let lines = bytes.iter().filter(|&&b| b == b'\n').count();
    assert!(meta.contains(&format!("\"rows\": {}", lines - 1)));
    assert!(meta.contains("\"name\": \"items.csv\""));
    assert!(!meta.contains(out.path().to_str().unwrap()));
}

/// Items per country and group, tallied straight from items.csv minus the
/// rows the tool reported as dropped.
#[test]
fn item_counts_match_independent_tally() {
    let out = tempfile::tempdir().unwrap();
    run(
        "report",
        input_args(&demo(), ALL_OPTIONAL),
        &["--out", out.path().to_str().unwrap(), "--iterations", "20"],
    );
    let mut dropped_lines = BTreeSet::new();
    let mut r = csv::Reader::from_path(out.path().join("dropped_rows.csv")).unwrap();
    for rec in r.records() {
        let rec = rec.unwrap();
        if &rec[0] == "items.csv" {
            dropped_lines.insert(rec[1].parse::<usize>().unwrap());
        }
    }
    let mut tally: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut items = csv::Reader::from_path(demo().join("items.csv")).unwrap();
    for rec in items.records() {
        let rec = rec.unwrap();
        let line = rec.position().unwrap().line() as usize;
        if dropped_lines.contains(&line) {
            continue;
        }
        *tally
            .entry((rec[0].to_string(), rec[3].to_string()))
            .or_default() += 1;
    }
    let mut r = csv::Reader::from_path(out.path().join("item_counts.csv")).unwrap();
    let h = r.headers().unwrap().clone();
    let mut classes = BTreeMap::new();
    for rec in r.records() {
        let rec = rec.unwrap();
        let country = rec[0].to_string();
        classes.insert(country.clone(), rec[1].to_string());
        let mut total = 0;
        for g in ["ASF", "VEG", "SS", "FRT", "LNS", "OF"] {
            let n: usize = rec[column_index(&h, g)].parse().unwrap();
            let want = tally
                .get(&(country.clone(), g.to_string()))
                .copied()
                .unwrap_or(0);
            assert_eq!(n, want, "{country} {g}");
            total += n;
        }
        assert_eq!(
            rec[column_index(&h, "total")].parse::<usize>().unwrap(),
            total
        );
    }
    assert_eq!(classes["MWI"], "LIC");
    assert_eq!(classes["FRA"], "HIC");
}
