use fillcurve::cli::{run, EXIT_USAGE, EXIT_VERIFY};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fillcurve").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn json_of(name: &str, args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = invoke(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    let v = schema(name);
    let problems: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(problems.is_empty(), "{name}: {problems:?}");
    doc
}

const Q2_CURVE: &str = "X0^4*Y0^2*Y1 + X0^4*Y0*Y1^2 + X0^3*X1*Y0^3 + X0^2*X1^2*Y0^3 + X0^2*X1^2*Y0^2*Y1 + X0^2*X1^2*Y0*Y1^2 + X0^2*X1^2*Y1^3 + X0*X1^3*Y1^3 + X1^4*Y0^2*Y1 + X1^4*Y0*Y1^2";

#[test]
fn every_command_matches_its_schema() {
    let doc = json_of("construct", &["construct", "--q", "2"]);
    assert_eq!(doc["summary"]["points"], 9);
    assert_eq!(doc["bound"]["attained"], true);
    assert_eq!(doc["polynomial"], Q2_CURVE);

    let doc = json_of(
        "verify",
        &[
            "verify",
            "--q",
            "3",
            "--poly",
            "X0*Y0 + X1*Y1",
            "--oracle",
            "2",
        ],
    );
    assert_eq!(doc["summary"]["smooth"], true);
    assert_eq!(
        doc["singular_points"][1]["points"]
            .as_array()
            .unwrap()
            .len(),
        0
    );

    let doc = json_of("decompose", &["decompose", "--q", "2", "--poly", Q2_CURVE]);
    assert_eq!(doc["verified"], true);

    let doc = json_of("census", &["census", "--q", "2", "--bidegree", "3,3"]);
    assert_eq!(doc["candidates_scanned"], 127);
    assert_eq!(doc["n_irreducible"], 0);

    let doc = json_of("scan", &["scan", "--q", "2", "--max", "3,4"]);
    assert_eq!(doc["cells"].as_array().unwrap().len(), 20);

    let doc = json_of("bound", &["bound", "--q", "2", "--r", "3", "--d", "6"]);
    assert_eq!(doc["quotient"], "90/11");
    assert_eq!(doc["floor"], 8);

    let doc = json_of(
        "count",
        &["count", "--q", "2", "--poly", "X0*Y0 + X1*Y1", "--ext", "2"],
    );
    assert_eq!(doc["points"], 5);

    let doc = json_of(
        "field-info",
        &["field-info", "--field", "p=3,e=2,mod=[1,0,1]"],
    );
    assert_eq!(doc["order"], 9);
}

#[test]
fn json_output_is_reproducible() {
    let args = [
        "--json",
        "census",
        "--q",
        "2",
        "--bidegree",
        "4,3",
        "--jobs",
        "2",
    ];
    let (_, first, _) = invoke(&args);
    let (_, second, _) = invoke(&args);
    assert_eq!(first, second);
    let (_, seeded, _) = invoke(&[
        "--json", "--seed", "7", "bound", "--q", "3", "--r", "3", "--d", "8",
    ]);
    assert!(seeded.contains("\"seed\": 7"));
}

#[test]
fn exit_codes() {
    let (code, out, _) = invoke(&[
        "verify",
        "--q",
        "2",
        "--poly",
        "X0 + X1",
        "--expect-filling",
    ]);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.contains("FAILED: filling"));
    assert_eq!(
        invoke(&["decompose", "--q", "3", "--poly", "X0*Y0"]).0,
        EXIT_VERIFY
    );
    assert_eq!(
        invoke(&["verify", "--q", "2", "--poly", "X0 +"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        invoke(&["verify", "--q", "6", "--poly", "X0"]).0,
        EXIT_USAGE
    );
    assert_eq!(invoke(&["verify", "--poly", "X0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, 0);
    assert_eq!(invoke(&["construct", "--q", "2", "--transposed"]).0, 0);
}

#[test]
fn poly_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.txt");
    std::fs::write(&path, format!("{Q2_CURVE}\n")).unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = invoke(&["count", "--q", "2", "--poly", &arg]);
    assert_eq!((code, out.as_str()), (0, "9\n"));
}
