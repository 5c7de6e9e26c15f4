use std::path::PathBuf;

use freecalc::cli::doc::FunctionalDoc;
use freecalc::cli::run;
use freecalc::functional::{family, MomentFunctional};
use freecalc::series::{int, rat, Poly, Rational};

type P = Poly<Rational>;

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["freecalc"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp_doc(name: &str, doc: &FunctionalDoc) -> String {
    let dir = std::env::temp_dir().join(format!("freecalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, doc.to_json()).unwrap();
    path.to_string_lossy().into_owned()
}

fn lift(m: &MomentFunctional<Rational>) -> MomentFunctional<P> {
    m.map(|c| P::constant(c.clone()))
}

fn moments_of(stdout: &str) -> Vec<P> {
    let doc = FunctionalDoc::from_json(stdout).unwrap();
    doc.to_functional(doc.order()).unwrap().moments().to_vec()
}

#[test]
fn monotone_convolution_example() {
    let b = temp_doc("bern.json", &FunctionalDoc::Family { order: 10, name: "bernoulli".into(), params: vec![] });
    let s = temp_doc("sc.json", &FunctionalDoc::moments(&lift(&family("semicircular", &[int(0), int(1)], 10).unwrap())));
    let (code, out, _) = run_args(&["conv", "--op", "monotone", &b, &s]);
    assert_eq!(code, 0);
    let arcsine = lift(&family("arcsine", &[int(1)], 10).unwrap());
    assert_eq!(moments_of(&out), arcsine.moments());
}

#[test]
fn convert_round_trips_through_jacobi() {
    let m = MomentFunctional::new(vec![rat(1, 2), int(2), rat(-1, 3), int(4), int(1), rat(5, 2), int(0), int(3)]);
    let path = temp_doc("m.json", &FunctionalDoc::moments(&lift(&m)));
    let (code, jac, _) = run_args(&["convert", "--to", "jacobi", &path]);
    assert_eq!(code, 0);
    let jpath = temp_doc("j.json", &FunctionalDoc::from_json(&jac).unwrap());
    let (code, back, _) = run_args(&["convert", "--to", "moments", &jpath, "--order", "8"]);
    assert_eq!(code, 0);
    assert_eq!(moments_of(&back), lift(&m).moments());
}

#[test]
fn output_is_deterministic() {
    let a = run_args(&["verify", "monotone-lemma", "--seed", "7", "--order", "6"]);
    let b = run_args(&["verify", "monotone-lemma", "--seed", "7", "--order", "6"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    let c = run_args(&["verify", "monotone-lemma", "--seed", "8", "--order", "6"]);
    assert_ne!(a.1, c.1);
}

#[test]
fn verify_spec_example() {
    let (code, out, _) = run_args(&["verify", "free-evolution", "--beta", "1/2", "--gamma", "1", "--rho", "bernoulli", "--order", "10"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"verified\": true"));
}

#[test]
fn exit_codes() {
    let delta0 = temp_doc("d0.json", &FunctionalDoc::Family { order: 6, name: "delta".into(), params: vec![freecalc::cli::doc::Value::Rat("0".into())] });
    assert_eq!(run_args(&["map", "--op", "strip", &delta0]).0, 3);
    assert_eq!(run_args(&["verify", "no-such-identity"]).0, 2);
    assert_eq!(run_args(&["verify", "pde", "--nonsense", "1"]).0, 2);
    assert_eq!(run_args(&["verify", "thm-b", "--p", "-1"]).0, 2);
    assert_eq!(run_args(&["frobnicate"]).0, 2);
    assert_eq!(run_args(&["convert", "--to", "jacobi", "/nonexistent/x.json"]).0, 2);
    let bad = std::env::temp_dir().join(format!("freecalc-bad-{}.json", std::process::id()));
    std::fs::write(&bad, r#"{"type":"moments","order":2,"moments":["1","x"]}"#).unwrap();
    assert_eq!(run_args(&["convert", "--to", "jacobi", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn formal_power_in_t() {
    let b = temp_doc("bern_t.json", &FunctionalDoc::Family { order: 6, name: "bernoulli".into(), params: vec![] });
    let (code, out, _) = run_args(&["power", "--op", "free", "--t", "formal", &b]);
    assert_eq!(code, 0);
    let m = moments_of(&out);
    let two = m[3].eval(&int(2));
    // Bernoulli ⊞ Bernoulli is the arcsine law
    assert_eq!(two, int(6));
}

#[test]
fn list_names_every_entry() {
    let (code, out, _) = run_args(&["list"]);
    assert_eq!(code, 0);
    for (name, _) in freecalc::evolution::catalog::CATALOG {
        assert!(out.contains(name), "{name} missing");
    }
}
