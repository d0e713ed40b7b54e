use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use segre_cli::document::{CheckJson, Document, InputEcho, OptionsEcho};
use segre_cli::{finish, EXIT_BUDGET, EXIT_CONSISTENCY, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION};
use segre_core::pipeline::{compute_body, PipelineOptions};
use segre_core::polyhedra::{VPolyhedron, VPolyhedronJson};
use segre_core::{HomogeneousIdeal, ValuationConfig};

const HYPERSURFACE: &str = "vars: x0 x1 x2\ngens:\nx0*x1\n";
const COMPLETE_INTERSECTION: &str = "vars: x0 x1 x2\ngens:\nx0^2\nx1^3\n";
const LINEAR: &str = "vars: x0 x1\ngens:\nx0 + x1\n";

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Fixture { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn segre(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre")).args(args).arg(file).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[test]
fn zeta_hypersurface() {
    let fx = Fixture::new();
    let out = segre(&["zeta"], &fx.file("h.txt", HYPERSURFACE));
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let doc = json(&out);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["exact"], true);
    assert_eq!(strs(&doc["zeta"]["num"]), s(&["0/1", "2/1"]));
    assert_eq!(strs(&doc["zeta"]["den"]), s(&["1/1", "2/1"]));
    assert_eq!(strs(&doc["sigma"]), s(&["1/1", "-2/1", "4/1"]));
    assert_eq!(doc["crosscheck"]["status"], "pass");
    assert!(doc.get("timings").is_none());
}

#[test]
fn zeta_complete_intersection() {
    let fx = Fixture::new();
    let doc = json(&segre(&["zeta"], &fx.file("ci.txt", COMPLETE_INTERSECTION)));
    assert_eq!(strs(&doc["zeta"]["num"]), s(&["0/1", "0/1", "6/1"]));
    assert_eq!(strs(&doc["zeta"]["den"]), s(&["1/1", "5/1", "6/1"]));
    assert_eq!(strs(&doc["sigma"]), s(&["1/1", "0/1", "-6/1"]));
}

#[test]
fn zeta_linear_form_is_approximate() {
    let fx = Fixture::new();
    let out = segre(&["zeta", "--tmax", "2"], &fx.file("lin.txt", LINEAR));
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let doc = json(&out);
    assert_eq!(doc["exact"], false);
    assert_eq!(doc["body"]["stabilization"]["stabilized"], true);
    assert_eq!(doc["crosscheck"]["status"], "skipped");
    // 1 - 1/(1+t) = t - t^2 + t^3 - ...
    let order = doc["input"]["options"]["series_order"].as_u64().unwrap() as usize;
    let want: Vec<String> = (0..=order).map(|k| if k == 0 { "0/1".into() } else if k % 2 == 1 { "1/1".into() } else { "-1/1".into() }).collect();
    assert_eq!(strs(&doc["zeta"]["series"]), want);
}

#[test]
fn body_and_slice() {
    let fx = Fixture::new();
    let out = segre(&["body", "--level", "5/2"], &fx.file("ci.txt", COMPLETE_INTERSECTION));
    let doc = json(&out);
    let p = &doc["body"]["polyhedron"];
    let verts: Vec<Vec<String>> = p["vertices"].as_array().unwrap().iter().map(strs).collect();
    assert_eq!(verts, vec![s(&["0/1", "3/1", "0/1"]), s(&["2/1", "0/1", "0/1"])]);
    assert_eq!(doc["body"]["ray_count"], 3);
    assert_eq!(doc["slice"]["normalized_volume"], "3/4");
}

#[test]
fn fiber_volume_hypersurface() {
    let fx = Fixture::new();
    let doc = json(&segre(&["fiber-volume"], &fx.file("h.txt", HYPERSURFACE)));
    let fv = &doc["fiber_volume"];
    assert_eq!(strs(&fv["breakpoints"]), s(&["2/1"]));
    // only the unbounded tail, (s-2)^2
    let pieces = fv["pieces"].as_array().unwrap();
    assert_eq!(pieces.len(), 1);
    assert!(pieces[0]["to"].is_null());
    assert_eq!(strs(&fv["tail"]), s(&["4/1", "-4/1", "1/1"]));
    assert!(fv["certificates"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn index_values() {
    let fx = Fixture::new();
    let h = fx.file("h.txt", HYPERSURFACE);
    assert_eq!(json(&segre(&["index", "--s", "4"], &h))["index"]["value"], "4/1");
    let doc = json(&segre(&["index", "--s", "5/2"], &h));
    assert_eq!(doc["index"]["value"], "1/4");
    assert_eq!(doc["index"]["formula"], "1/4");
}

#[test]
fn deterministic_output() {
    let fx = Fixture::new();
    let f = fx.file("mixed.txt", "vars: x y z\ngens:\nx^2 + y*z\nx*y\n");
    for args in [&["zeta", "--tmax", "2"][..], &["zeta", "--plain", "--tmax", "2"][..], &["body"][..]] {
        let a = segre(args, &f);
        let b = segre(args, &f);
        assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn body_round_trip() {
    let fx = Fixture::new();
    let text = "vars: x y z\ngens:\nx^2 + y*z\nx*y\n";
    let doc = json(&segre(&["body", "--tmax", "2"], &fx.file("mixed.txt", text)));
    let j: VPolyhedronJson = serde_json::from_value(doc["body"]["polyhedron"].clone()).unwrap();
    let back = VPolyhedron::try_from(&j).unwrap();

    let x = |i| segre_core::MultiPoly::var(3, i);
    let ideal = HomogeneousIdeal::new(3, vec![&(&x(0) * &x(0)) + &(&x(1) * &x(2)), &x(0) * &x(1)]).unwrap();
    let opts = PipelineOptions { t_max: 2, ..PipelineOptions::default() };
    let body = compute_body(&ideal, &ValuationConfig::standard(3), &opts).unwrap();
    assert_eq!(back, body.body);
}

#[test]
fn timings_only_on_request() {
    let fx = Fixture::new();
    let doc = json(&segre(&["zeta", "--timings"], &fx.file("h.txt", HYPERSURFACE)));
    let stages: Vec<&str> = doc["timings"].as_array().unwrap().iter().map(|t| t["stage"].as_str().unwrap()).collect();
    assert!(stages.contains(&"body") && stages.contains(&"total"));
}

#[test]
fn plot_export() {
    let fx = Fixture::new();
    let csv = fx.dir.path().join("plot.csv");
    let out = segre(&["fiber-volume", "--export-plot", csv.to_str().unwrap()], &fx.file("h.txt", HYPERSURFACE));
    assert!(out.status.success());
    let text = std::fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "level,volume,volume_f64");
    assert!(lines.contains(&"5/2,1/4,0.25"));
    assert!(lines.contains(&"4/1,4/1,4"));
}

#[test]
fn plain_table() {
    let fx = Fixture::new();
    let out = segre(&["zeta", "--plain"], &fx.file("h.txt", HYPERSURFACE));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sigma         1 -2 4"), "{text}");
    assert!(text.contains("crosscheck    pass"));
}

#[test]
fn vars_order_flag() {
    let fx = Fixture::new();
    let f = fx.file("h.txt", HYPERSURFACE);
    let doc = json(&segre(&["body", "--vars-order", "x2,x1"], &f));
    assert_eq!(strs(&doc["input"]["order"]), s(&["x2", "x1"]));
    let out = segre(&["body", "--vars-order", "x2"], &f);
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
}

#[test]
fn parse_errors_exit_2() {
    let fx = Fixture::new();
    for (name, text) in [
        ("syntax.txt", "vars: x y\ngens:\nx * * y\n"),
        ("inhom.txt", "vars: x0 x1 x2\ngens:\nx0 + x1^2\n"),
        ("few.txt", "vars: x\ngens:\nx\n"),
    ] {
        let out = segre(&["zeta"], &fx.file(name, text));
        assert_eq!(out.status.code(), Some(EXIT_PARSE), "{name}");
        assert!(out.stdout.is_empty());
    }
    let stderr = String::from_utf8(segre(&["zeta"], &fx.file("s.txt", "vars: x y\ngens:\nx * * y\n")).stderr).unwrap();
    assert!(stderr.contains("line 3, column 5"), "{stderr}");
    let out = segre(&["index", "--s", "abc"], &fx.file("h.txt", HYPERSURFACE));
    assert_eq!(out.status.code(), Some(EXIT_PARSE));
}

#[test]
fn precondition_exit_3() {
    let fx = Fixture::new();
    let out = segre(&["zeta"], &fx.file("unit.txt", "vars: x y\ngens:\n1\n"));
    assert_eq!(out.status.code(), Some(EXIT_PRECONDITION));
    let out = segre(&["index", "--s", "1"], &fx.file("h.txt", HYPERSURFACE));
    assert_eq!(out.status.code(), Some(EXIT_PRECONDITION));
}

#[test]
fn budget_exit_4() {
    let fx = Fixture::new();
    let out = segre(&["zeta", "--tmax", "3", "--budget", "10"], &fx.file("mixed.txt", "vars: x y z\ngens:\nx^2 + y*z\nx*y\n"));
    assert_eq!(out.status.code(), Some(EXIT_BUDGET));
}

#[test]
fn failed_check_exit_5_still_prints() {
    let input = InputEcho {
        vars: s(&["x", "y"]),
        generators: s(&["x"]),
        degrees: vec![1],
        dehom: "x".into(),
        order: s(&["y"]),
        options: OptionsEcho { tmax: 1, smax: 4, series_order: 4, crosscheck: true },
    };
    let mut doc = Document::new("zeta", input, true);
    doc.checks.push(CheckJson { name: "oracle".into(), passed: false, detail: "mismatch".into() });
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(finish(&doc, false, &mut out, &mut err), EXIT_CONSISTENCY);
    assert!(!out.is_empty());
    assert!(String::from_utf8(err).unwrap().contains("oracle"));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_segre"))
        .args(["index", "--s", "4", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(HYPERSURFACE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["index"]["value"], "4/1");
}
