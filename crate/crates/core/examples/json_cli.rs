//! The JSON document format and the command line, driven in-process.

use freecalc::cli::{doc::FunctionalDoc, run};
use freecalc::functional::family;
use freecalc::series::{int, Poly};

fn main() {
    let dir = std::env::temp_dir().join("freecalc-example");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, doc: &FunctionalDoc| {
        let p = dir.join(name);
        std::fs::write(&p, doc.to_json()).unwrap();
        p.to_string_lossy().into_owned()
    };
    let b = write("bernoulli.json", &FunctionalDoc::Family { order: 10, name: "bernoulli".into(), params: vec![] });
    let m = family("semicircular", &[Poly::constant(int(0)), Poly::constant(int(1))], 10).unwrap();
    let s = write("semicircle.json", &FunctionalDoc::moments(&m));

    let mut out = Vec::new();
    let code = run(["freecalc", "conv", "--op", "monotone", &b, &s], &mut out, &mut std::io::sink());
    println!("exit {code}\n{}", String::from_utf8(out).unwrap());

    let mut out = Vec::new();
    let code = run(["freecalc", "power", "--op", "free", "--t", "formal", "--format", "text", &b], &mut out, &mut std::io::sink());
    println!("exit {code}\n{}", String::from_utf8(out).unwrap());

    let mut out = Vec::new();
    let code = run(["freecalc", "verify", "pde", "--order", "6", "--format", "text"], &mut out, &mut std::io::sink());
    println!("exit {code}\n{}", String::from_utf8(out).unwrap());
}
