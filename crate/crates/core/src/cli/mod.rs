//! The `freecalc` command line. Exit codes: 0 success or verified, 1 identity
//! violated, 2 usage or parse error, 3 domain error.

pub mod doc;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::convolution::{
    boolean_convolve, boolean_power, free_convolve, free_power, monotone_convolve, two_state_convolve, two_state_power,
};
use crate::error::Error;
use crate::evolution::catalog::{verify, Param, Params, CATALOG};
use crate::evolution::{
    belinschi_nica, bp, bp_inverse, maassen_semigroup, phi2, phi_map, strip, subordination, subordination_inverse,
    two_state_semigroup,
};
use crate::functional::{family, jacobi_all, MomentFunctional};
use crate::multivariate::{
    nc_boolean_convolve, nc_bp, nc_bp_inverse, nc_eta, nc_free_convolve, nc_phi, nc_r, nc_subordination,
    nc_subordination_inverse, nc_verify, NCFunctional, NCSeries, NC_CATALOG,
};
use crate::oracle::{boolean_cumulants_oracle, free_cumulants_oracle};
use crate::report::Report;
use crate::series::{Coeff, Poly, Series};
use crate::transforms::{eta_from_moments, r_from_moments};
use doc::{canonical_family, default_family_params, parse_rational, FunctionalDoc, Value, P, Q};

const DEFAULT_ORDER: usize = 10;
const DEFAULT_NC_ORDER: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "freecalc", version, about = "Exact transforms, convolutions and identity checks for moment functionals")]
struct Cli {
    /// Truncation order (default: the document's order, else 10; 6 for `nc`)
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Seed for randomly drawn parameters
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Time parameter: a rational `p/q` or `formal`
    #[arg(long, global = true)]
    t: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a document to moments, Jacobi parameters or a transform series
    Convert {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Moments)]
        to: Target,
    },
    /// Convolve two functionals (or two pairs for `two-state`)
    Conv {
        #[arg(long, value_enum)]
        op: ConvOp,
        a: PathBuf,
        b: PathBuf,
    },
    /// Convolution power with exponent `--t`
    Power {
        #[arg(long, value_enum)]
        op: PowerOp,
        input: PathBuf,
    },
    /// Apply a map (`bt` and `phi2` take `--t` and a second input respectively)
    Map {
        #[arg(long, value_enum)]
        op: MapOp,
        input: PathBuf,
        second: Option<PathBuf>,
    },
    /// Subordination distribution `a ⊳ b`, or with `--inverse` the `μ` with `μ ⊳ b = a`
    Subord {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        inverse: bool,
    },
    /// Free convolution semigroup of a canonical triple at time `--t`; with
    /// `--relative`, the two-state semigroup pair
    Semigroup {
        triple: PathBuf,
        #[arg(long)]
        relative: Option<PathBuf>,
    },
    /// Verify a catalog identity (`all` runs every entry); extra `--name value`
    /// pairs set parameters
    Verify {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Multivariate operations
    Nc {
        #[command(subcommand)]
        command: NcCommand,
    },
    /// Cumulants by summing over partitions, compared with the series recursion
    Oracle {
        #[arg(long, value_enum)]
        kind: OracleKind,
        input: PathBuf,
    },
    /// List catalog entries
    List,
}

#[derive(Subcommand, Debug)]
enum NcCommand {
    /// Verify a multivariate catalog entry (`all` runs every entry)
    Verify {
        name: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Transform of one multivariate functional
    Map {
        #[arg(long, value_enum)]
        op: NcMapOp,
        input: PathBuf,
    },
    /// Binary operation on two multivariate functionals
    Conv {
        #[arg(long, value_enum)]
        op: NcConvOp,
        a: PathBuf,
        b: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Moments,
    Jacobi,
    R,
    Eta,
    FreeCumulants,
    BooleanCumulants,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvOp {
    Free,
    Boolean,
    Monotone,
    TwoState,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PowerOp {
    Free,
    Boolean,
    TwoState,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapOp {
    Phi,
    Strip,
    Bp,
    BpInverse,
    Bt,
    Phi2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Free,
    Boolean,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NcMapOp {
    R,
    Eta,
    Phi,
    Bp,
    BpInverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum NcConvOp {
    Free,
    Boolean,
    Subord,
    SubordInverse,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadParam(_)
            | Error::UnknownFamily(_)
            | Error::UnknownIdentity(_)
            | Error::MalformedTriple
            | Error::ShapeMismatch
            | Error::OrderCap { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

type Out = std::result::Result<Output, Failure>;

enum Output {
    Doc(FunctionalDoc),
    /// Reports, whether this is a whole-catalog run, and a format override.
    Reports(Vec<Report>, bool, Option<Format>),
    Lines(Vec<String>),
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok(output) => emit(output, format, out),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e @ Error::RouteMismatch(_))) => {
            let _ = writeln!(err, "identity violated: {e}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "domain error: {e}");
            3
        }
    }
}

fn emit(output: Output, format: Format, out: &mut dyn Write) -> i32 {
    let (text, code) = match output {
        Output::Doc(doc) => match format {
            Format::Json => (doc.to_json() + "\n", 0),
            Format::Text => (doc_text(&doc), 0),
        },
        Output::Reports(reports, all, over) => {
            let ok = reports.iter().all(Report::verified);
            let text = match over.unwrap_or(format) {
                Format::Json => {
                    let items: Vec<_> = reports
                        .iter()
                        .map(|r| json!({"name": r.name, "order": r.order, "verified": r.verified(), "checks": r.checks, "notes": r.notes}))
                        .collect();
                    let v = if all { json!({"verified": ok, "reports": items}) } else { items[0].clone() };
                    serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
                }
                Format::Text => {
                    let mut s: String = reports.iter().map(|r| r.to_string()).collect();
                    if all {
                        let failed = reports.iter().filter(|r| !r.verified()).count();
                        s.push_str(&format!("{} entries, {failed} failed\n", reports.len()));
                    }
                    s
                }
            };
            (text, if ok { 0 } else { 1 })
        }
        Output::Lines(lines) => (lines.join("\n") + "\n", 0),
    };
    let _ = out.write_all(text.as_bytes());
    code
}

fn doc_text(doc: &FunctionalDoc) -> String {
    let show = |v: &Value| match v.parse() {
        Ok(p) if p.degree().unwrap_or(0) == 0 => p.coeff(0).to_string(),
        Ok(p) => poly_text(&p),
        Err(_) => "?".into(),
    };
    let list = |prefix: &str, start: usize, vs: &[Value]| -> String {
        vs.iter().enumerate().map(|(k, v)| format!("{prefix}{} = {}\n", k + start, show(v))).collect()
    };
    match doc {
        FunctionalDoc::Moments { moments, .. } => list("m_", 1, moments),
        FunctionalDoc::Jacobi { betas, gammas, tail, .. } => {
            let mut s = list("beta_", 0, betas) + &list("gamma_", 0, gammas);
            s.push_str(&match tail {
                doc::TailDoc::Open => "tail: unknown beyond this depth\n".to_string(),
                doc::TailDoc::Terminated => "tail: terminated\n".to_string(),
                doc::TailDoc::Constant { beta, gamma } => format!("tail: beta = {}, gamma = {}\n", show(beta), show(gamma)),
            });
            s
        }
        FunctionalDoc::Pair { tilde, base, .. } => list("tilde m_", 1, tilde) + &list("m_", 1, base),
        FunctionalDoc::Series { name, coeffs, .. } => list(&format!("{name}["), 0, coeffs).replace(" =", "] ="),
        FunctionalDoc::Nc { moments, .. } => moments.iter().map(|(k, v)| format!("m[{k}] = {}\n", show(v))).collect(),
        FunctionalDoc::NcSeries { name, coeffs, .. } => {
            coeffs.iter().map(|(k, v)| format!("{name}[{k}] = {}\n", show(v))).collect()
        }
        other => other.to_json() + "\n",
    }
}

fn poly_text(p: &P) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("({c}) t"),
            _ => format!("({c}) t^{k}"),
        })
        .collect();
    terms.join(" + ")
}

fn read_doc(path: &Path) -> std::result::Result<FunctionalDoc, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(FunctionalDoc::from_json(&text)?)
}

fn order_for(cli: &Cli, doc: &FunctionalDoc) -> usize {
    cli.order.unwrap_or_else(|| match doc {
        FunctionalDoc::Moments { moments, .. } => moments.len(),
        other if other.order() > 0 => other.order(),
        _ => DEFAULT_ORDER,
    })
}

fn functional(cli: &Cli, path: &Path) -> std::result::Result<MomentFunctional<P>, Failure> {
    let d = read_doc(path)?;
    Ok(d.to_functional(order_for(cli, &d))?)
}

fn time(cli: &Cli, default: Option<&str>) -> std::result::Result<P, Failure> {
    match cli.t.as_deref().or(default) {
        Some("formal") => Ok(P::var()),
        Some(s) => Ok(P::constant(parse_rational(s)?)),
        None => Err(Failure::Usage("--t is required".into())),
    }
}

fn execute(cli: &Cli) -> Out {
    let doc = |m: &MomentFunctional<P>| Ok(Output::Doc(FunctionalDoc::moments(m)));
    match &cli.command {
        Command::Convert { input, to } => {
            let d = read_doc(input)?;
            let m = d.to_functional(order_for(cli, &d))?;
            let series = |name: &str, s: Series<P>| Ok(Output::Doc(FunctionalDoc::series(name, &s)));
            match to {
                Target::Moments => doc(&m),
                Target::Jacobi => Ok(Output::Doc(FunctionalDoc::jacobi(&jacobi_all(&m)?, m.order()))),
                Target::R => series("R", r_from_moments(&m)),
                Target::Eta => series("eta", eta_from_moments(&m)),
                Target::FreeCumulants => series("kappa", r_from_moments(&m)),
                Target::BooleanCumulants => series("b", eta_from_moments(&m)),
            }
        }
        Command::Conv { op, a, b } => {
            if let ConvOp::TwoState = op {
                let (da, db) = (read_doc(a)?, read_doc(b)?);
                let n = order_for(cli, &da).min(order_for(cli, &db));
                return Ok(Output::Doc(FunctionalDoc::pair(&two_state_convolve(&da.to_pair(n)?, &db.to_pair(n)?))));
            }
            let (x, y) = (functional(cli, a)?, functional(cli, b)?);
            doc(&match op {
                ConvOp::Free => free_convolve(&x, &y),
                ConvOp::Boolean => boolean_convolve(&x, &y),
                ConvOp::Monotone => monotone_convolve(&x, &y),
                ConvOp::TwoState => unreachable!(),
            })
        }
        Command::Power { op, input } => {
            let t = time(cli, None)?;
            match op {
                PowerOp::Free => doc(&free_power(&functional(cli, input)?, &t)),
                PowerOp::Boolean => doc(&boolean_power(&functional(cli, input)?, &t)),
                PowerOp::TwoState => {
                    let d = read_doc(input)?;
                    Ok(Output::Doc(FunctionalDoc::pair(&two_state_power(&d.to_pair(order_for(cli, &d))?, &t))))
                }
            }
        }
        Command::Map { op, input, second } => {
            let m = functional(cli, input)?;
            doc(&match op {
                MapOp::Phi => phi_map(&m)?,
                MapOp::Strip => strip(&m)?,
                MapOp::Bp => bp(&m),
                MapOp::BpInverse => bp_inverse(&m),
                MapOp::Bt => belinschi_nica(&m, &time(cli, None)?)?,
                MapOp::Phi2 => {
                    let path = second.as_ref().ok_or_else(|| Failure::Usage("phi2 needs a second input".into()))?;
                    phi2(&m, &functional(cli, path)?)
                }
            })
        }
        Command::Subord { a, b, inverse } => {
            let (x, y) = (functional(cli, a)?, functional(cli, b)?);
            doc(&if *inverse { subordination_inverse(&x, &y) } else { subordination(&x, &y) })
        }
        Command::Semigroup { triple, relative } => {
            let base_doc = read_doc(triple)?;
            let base = base_doc.to_triple()?;
            let t = time(cli, Some("1"))?;
            let n = cli.order.unwrap_or(DEFAULT_ORDER);
            match relative {
                None => doc(&maassen_semigroup(&base, &t, n)),
                Some(path) => {
                    let rel = read_doc(path)?.to_triple()?;
                    Ok(Output::Doc(FunctionalDoc::pair(&two_state_semigroup(&rel, &base, &t, n)?)))
                }
            }
        }
        Command::Verify { name, params } => run_verify(cli, name, params),
        Command::Nc { command } => run_nc(cli, command),
        Command::Oracle { kind, input } => {
            let m = functional(cli, input)?;
            let q = m.moments().iter().map(|c| c.as_rational()).collect::<Option<Vec<Q>>>();
            let q = MomentFunctional::new(q.ok_or_else(|| Failure::Usage("the oracle needs rational moments".into()))?);
            let (name, oracle, recursion) = match kind {
                OracleKind::Free => ("kappa", free_cumulants_oracle(&q)?, r_from_moments(&q)),
                OracleKind::Boolean => ("b", boolean_cumulants_oracle(&q)?, eta_from_moments(&q)),
            };
            let agree = oracle.iter().enumerate().all(|(k, c)| recursion.coeff(k + 1) == c);
            if !agree {
                return Err(Failure::Domain(Error::RouteMismatch("partition sum and series recursion differ")));
            }
            let s = Series::from_tail(oracle).map(|c| Poly::constant(c.clone()));
            Ok(Output::Doc(FunctionalDoc::series(name, &s)))
        }
        Command::List => {
            let mut lines: Vec<String> = CATALOG.iter().map(|(n, d)| format!("{n}: {d}")).collect();
            lines.extend(NC_CATALOG.iter().map(|(n, d, s)| format!("nc {n} (d = {d}): {s}")));
            Ok(Output::Lines(lines))
        }
    }
}

struct VerifyArgs {
    params: Params,
    order: Option<usize>,
    d: Option<usize>,
    format: Option<Format>,
}

fn parse_verify_args(cli: &Cli, raw: &[String], allow_d: bool) -> std::result::Result<VerifyArgs, Failure> {
    let mut params = Params::with_seed(cli.seed);
    let (mut order, mut d, mut format) = (cli.order, None, None);
    let mut it = raw.iter();
    while let Some(tok) = it.next() {
        let Some(key) = tok.strip_prefix("--") else {
            return Err(Failure::Usage(format!("unexpected argument `{tok}`")));
        };
        let (key, value) = match key.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => {
                let v = it.next().ok_or_else(|| Failure::Usage(format!("--{key} needs a value")))?;
                (key.to_string(), v.clone())
            }
        };
        let bad = |what: &str| Failure::Usage(format!("--{key}: {what}"));
        match key.as_str() {
            "order" => order = Some(value.parse().map_err(|_| bad("not an integer"))?),
            "seed" => params.seed = value.parse().map_err(|_| bad("not an integer"))?,
            "d" if allow_d => d = Some(value.parse().map_err(|_| bad("not an integer"))?),
            "format" => format = Some(Format::from_str(&value, true).map_err(|_| bad("expected json or text"))?),
            "t" => return Err(Failure::Usage("--t is not a verification parameter".into())),
            _ => {
                let p = parse_param(&value)?;
                params.values.insert(key.replace('-', "_"), p);
            }
        }
    }
    Ok(VerifyArgs { params, order, d, format })
}

/// A rational, a `.json` document, a family `name` or `name:p1,p2,...`, or a
/// comma-separated moment list `m1,m2,...`.
fn parse_param(value: &str) -> std::result::Result<Param, Failure> {
    if let Ok(q) = parse_rational(value) {
        return Ok(Param::Scalar(q));
    }
    if value.ends_with(".json") {
        let d = read_doc(Path::new(value))?;
        let m = d.to_functional(order_for_param(&d))?;
        let q = m.moments().iter().map(|c| c.as_rational()).collect::<Option<Vec<Q>>>();
        let q = q.ok_or_else(|| Failure::Usage(format!("{value}: parameters must be rational")))?;
        return Ok(Param::Moments(MomentFunctional::new(q)));
    }
    if value.split(',').all(|s| parse_rational(s).is_ok()) {
        let m = value.split(',').map(parse_rational).collect::<crate::Result<Vec<Q>>>()?;
        return Ok(Param::Moments(MomentFunctional::new(m)));
    }
    let (name, args) = value.split_once(':').unwrap_or((value, ""));
    let name = canonical_family(name);
    let params = if args.is_empty() {
        default_family_params(&name)
    } else {
        args.split(',').map(parse_rational).collect::<crate::Result<Vec<Q>>>()?
    };
    family::<Q>(&name, &params, 1)?;
    Ok(Param::Family { name, params })
}

fn order_for_param(d: &FunctionalDoc) -> usize {
    match d {
        FunctionalDoc::Moments { moments, .. } => moments.len(),
        // families and Jacobi documents are materialized generously
        _ => d.order().max(16),
    }
}

fn no_params(args: &VerifyArgs) -> std::result::Result<(), Failure> {
    if args.params.values.is_empty() && args.d.is_none() {
        Ok(())
    } else {
        Err(Failure::Usage("`all` takes only --order, --seed and --format".into()))
    }
}

fn run_verify(cli: &Cli, name: &str, raw: &[String]) -> Out {
    let args = parse_verify_args(cli, raw, false)?;
    let n = args.order.unwrap_or(DEFAULT_ORDER);
    if name == "all" {
        no_params(&args)?;
        let mut reports = Vec::new();
        for (entry, _) in CATALOG {
            reports.push(verify(entry, &args.params, n)?);
        }
        let nc_order = args.order.map_or(DEFAULT_NC_ORDER, |o| o.min(DEFAULT_NC_ORDER));
        for (entry, _, _) in NC_CATALOG {
            reports.push(nc_verify(entry, None, &args.params, nc_order)?);
        }
        return Ok(Output::Reports(reports, true, args.format));
    }
    Ok(Output::Reports(vec![verify(name, &args.params, n)?], false, args.format))
}

fn run_nc(cli: &Cli, command: &NcCommand) -> Out {
    let nc_doc = |f: &NCFunctional<P>| Ok(Output::Doc(FunctionalDoc::nc(f)));
    match command {
        NcCommand::Verify { name, params } => {
            let args = parse_verify_args(cli, params, true)?;
            let n = args.order.unwrap_or(DEFAULT_NC_ORDER);
            if name == "all" {
                no_params(&args)?;
                let mut reports = Vec::new();
                for (entry, _, _) in NC_CATALOG {
                    reports.push(nc_verify(entry, None, &args.params, n)?);
                }
                return Ok(Output::Reports(reports, true, args.format));
            }
            Ok(Output::Reports(vec![nc_verify(name, args.d, &args.params, n)?], false, args.format))
        }
        NcCommand::Map { op, input } => {
            let f = nc_input(cli, input)?;
            let series = |name: &str, s: NCSeries<P>| Ok(Output::Doc(FunctionalDoc::nc_series(name, &s)));
            match op {
                NcMapOp::R => series("R", nc_r(&f)),
                NcMapOp::Eta => series("eta", nc_eta(&f)),
                NcMapOp::Phi => nc_doc(&nc_phi(&f)),
                NcMapOp::Bp => nc_doc(&nc_bp(&f)),
                NcMapOp::BpInverse => nc_doc(&nc_bp_inverse(&f)),
            }
        }
        NcCommand::Conv { op, a, b } => {
            let (x, y) = (nc_input(cli, a)?, nc_input(cli, b)?);
            if x.d() != y.d() {
                return Err(Failure::Usage("alphabet sizes differ".into()));
            }
            nc_doc(&match op {
                NcConvOp::Free => nc_free_convolve(&x, &y),
                NcConvOp::Boolean => nc_boolean_convolve(&x, &y),
                NcConvOp::Subord => nc_subordination(&x, &y),
                NcConvOp::SubordInverse => nc_subordination_inverse(&x, &y),
            })
        }
    }
}

fn nc_input(cli: &Cli, path: &Path) -> std::result::Result<NCFunctional<P>, Failure> {
    let d = read_doc(path)?;
    let f = match &d {
        FunctionalDoc::Nc { .. } => d.to_nc()?,
        other => NCFunctional::from_single(&other.to_functional(order_for(cli, other))?),
    };
    Ok(match cli.order {
        Some(n) if n > f.order() => return Err(Failure::Usage(format!("document has order {}, {n} requested", f.order()))),
        Some(n) => f.truncate(n),
        None => f,
    })
}
