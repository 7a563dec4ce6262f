use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qdeph(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdeph")).args(args).current_dir(dir).output().unwrap()
}

const SMALL: &str = "\
# short correlated sweep
bath.beta = 1.0
bath.s = 1.0
t_grid.t_min = 0
t_grid.t_max = 6
t_grid.n_points = 4
outputs = negativity, discord, fidelity, decoherence_functions
";

#[test]
fn repeated_sweeps_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.cfg"), SMALL).unwrap();
    for out in ["a.csv", "b.csv"] {
        let status = qdeph(&["sweep", "--config", "run.cfg", "--output_path", out], dir.path());
        assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    }
    let a = fs::read(dir.path().join("a.csv")).unwrap();
    let b = fs::read(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(!text.contains('\r'));
}

#[test]
fn uncoupled_sweep_has_perfect_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = qdeph(
        &["sweep", "--bath.coupling", "0", "--t_grid.n_points", "2", "--output_path=zero.csv"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("zero.csv")).unwrap();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        // kappa_re, negativity_paper, discord_closed, fav_closed
        for idx in [4, 6, 8, 10] {
            assert_eq!(cells[idx], "1", "{line}");
        }
    }
}

#[test]
fn only_requested_columns_are_filled() {
    let dir = tempfile::tempdir().unwrap();
    let out = qdeph(&["sweep", "--outputs", "fidelity", "--t_grid.n_points", "2", "--output_path", "f.csv"], dir.path());
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("f.csv")).unwrap();
    let first = text.lines().nth(1).unwrap();
    assert_eq!(first, "0,,,,,,,,,,1,1");
}

#[test]
fn configuration_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.cfg"), "bath.temperature = 3\n").unwrap();
    let cases: [&[&str]; 5] = [
        &["sweep", "--config", "bad.cfg"],
        &["sweep", "--config", "missing.cfg"],
        &["sweep", "--bath.beta", "-1"],
        &["figure", "fig9z"],
        &["launch"],
    ];
    for args in cases {
        let out = qdeph(args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn figure_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = qdeph(&["figure", "fig2b", "--out-dir", "figs", "--t_grid.n_points", "9"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("figs/fig2b.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 4 * 9);
    assert!(csv.starts_with("series,t,gamma_s"));
    let svg = fs::read_to_string(dir.path().join("figs/fig2b.svg")).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 4);
}

#[test]
fn shipped_configs_parse_and_validate() {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs");
    for entry in fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let cfg = qdeph::config::RunConfig::from_file(&path).unwrap();
        cfg.validate().unwrap();
    }
}
