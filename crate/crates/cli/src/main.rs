use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superalt::bimodule::{
    check_alternative_bimodule, is_faithful, is_isomorphic_graded, regular_bimodule, Verdict,
};
use superalt::catalog::{self, Instance};
use superalt::constructions::{self as cons, Params};
use superalt::enveloping::{self, EnvelopeU1};
use superalt::suites::{self, SuiteOptions, SuiteReport};
use superalt::superalgebra::{alternative_identities, check_identity, check_superalternative};
use superalt::{Error, Field, SuperAlgebra, SuperBimodule};

const SCHEMA: &str = "superalt.report/1";

#[derive(Parser)]
#[command(name = "superalt", version, about = "Exact checks for alternative superalgebras and their bimodules")]
struct Cli {
    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Reserved; no command depends on it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Include wall-clock timing in reports (makes them run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a zoo superalgebra and print its interchange JSON.
    Build {
        name: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
        /// Shortcut for lambda=... (f1x).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Run the check battery on an algebra or bimodule.
    Verify {
        kind: Kind,
        /// A JSON file, a zoo name (algebra), a catalog name or reg:<zoo name> (bimodule).
        input: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Classified bimodule families.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// The enveloping algebra of F1+Fx.
    U1 {
        #[command(subcommand)]
        cmd: U1Cmd,
    },
    /// Run an acceptance suite, or all of them.
    Check {
        suite: String,
        /// Corrupt one action entry of the named catalog instance or family.
        #[arg(long)]
        corrupt: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Bimodule,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Build {
        name: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Check one family member, or every battery instance with `all`.
    Check {
        name: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        corrupt: bool,
    },
}

#[derive(Subcommand)]
enum U1Cmd {
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Specialize {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        lambda: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    Ideal {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value = "GF(3)")]
        field: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }
}

/// Named verdicts, sorted by name.
#[derive(Default)]
struct Verdicts {
    verdicts: BTreeMap<String, &'static str>,
    witnesses: BTreeMap<String, String>,
    status: Option<Status>,
}

impl Verdicts {
    fn add(&mut self, name: &str, st: Status, witness: Option<String>) {
        self.verdicts.insert(name.to_string(), st.as_str());
        if let Some(w) = witness {
            self.witnesses.insert(name.to_string(), w);
        }
        self.status = Some(self.status.map_or(st, |s| s.max(st)));
    }

    fn pass(&mut self, name: &str, ok: bool, witness: Option<String>) {
        self.add(name, if ok { Status::Pass } else { Status::Fail }, witness);
    }

    fn result(&mut self, name: &str, r: superalt::Result<(bool, Option<String>)>) {
        match r {
            Ok((ok, w)) => self.pass(name, ok, w),
            Err(Error::Inconclusive(m)) => self.add(name, Status::Inconclusive, Some(m)),
            Err(e) => self.add(name, Status::Fail, Some(e.to_string())),
        }
    }

    fn status(&self) -> Status {
        self.status.unwrap_or(Status::Pass)
    }
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::Inconclusive(_)) { 3 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type Out = Result<(Value, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((mut doc, code)) => {
            if cli.timing {
                if let Value::Object(m) = &mut doc {
                    m.insert("timing_ms".into(), json!(start.elapsed().as_millis() as u64));
                }
            }
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text) {
                        eprintln!("superalt: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("superalt: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Build { name, field, params, lambda } => {
            let mut ps = cons::parse_params(params)?;
            if let Some(l) = lambda {
                ps.insert("lambda".into(), l.clone());
            }
            let e = cons::zoo_entry(name).ok_or_else(|| usage(format!("unknown algebra {name}")))?;
            let f = parse_field(field.as_deref().unwrap_or(e.default_field))?;
            Ok((cons::build_zoo(name, &f, &ps)?.to_json(), 0))
        }
        Cmd::Verify { kind, input, field, params } => verify(*kind, input, field.as_deref(), params),
        Cmd::Catalog { cmd } => catalog_cmd(cmd),
        Cmd::U1 { cmd } => u1_cmd(cmd),
        Cmd::Check { suite, corrupt } => check(suite, corrupt.clone()),
    }
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    s.parse::<Field>().map_err(Failure::from)
}

fn read_json(p: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn zoo_algebra(name: &str, field: Option<&str>, params: &Params) -> Result<SuperAlgebra, Failure> {
    let e = cons::zoo_entry(name).ok_or_else(|| usage(format!("unknown algebra {name}")))?;
    let f = parse_field(field.unwrap_or(e.default_field))?;
    Ok(cons::build_zoo(name, &f, params)?)
}

fn load_algebra(input: &str, field: Option<&str>, params: &Params) -> Result<SuperAlgebra, Failure> {
    let p = Path::new(input);
    if p.exists() {
        Ok(SuperAlgebra::from_json(&read_json(p)?)?)
    } else {
        zoo_algebra(input, field, params)
    }
}

fn load_bimodule(input: &str, field: Option<&str>, params: &Params) -> Result<SuperBimodule, Failure> {
    let p = Path::new(input);
    if p.exists() {
        let dir = p.parent().map(Path::to_path_buf).unwrap_or_default();
        let v = read_json(p)?;
        return Ok(SuperBimodule::from_json_with(&v, |s| {
            let q = dir.join(s);
            if q.exists() {
                let text = std::fs::read_to_string(&q).map_err(|e| Error::Parse(e.to_string()))?;
                SuperAlgebra::from_json_str(&text)
            } else {
                cons::build_zoo(s, &field.unwrap_or("Q").parse()?, &Params::new())
            }
        })?);
    }
    if let Some(name) = input.strip_prefix("reg:") {
        return Ok(regular_bimodule(&zoo_algebra(name, field, params)?));
    }
    let e = catalog::find_entry(input).ok_or_else(|| usage(format!("unknown bimodule {input}")))?;
    let f = parse_field(field.unwrap_or(e.default_field))?;
    Ok(catalog::build_entry(&e, &f, params)?)
}

fn report(command: &str, inputs: Value, v: &Verdicts, extra: Option<(&str, Value)>) -> (Value, u8) {
    let st = v.status();
    let mut doc = json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "status": st.as_str(),
        "verdicts": v.verdicts,
    });
    if !v.witnesses.is_empty() {
        doc["witnesses"] = json!(v.witnesses);
    }
    if let Some((k, x)) = extra {
        doc[k] = x;
    }
    (doc, st.code())
}

fn verify(kind: Kind, input: &str, field: Option<&str>, params: &str) -> Out {
    let ps = cons::parse_params(params)?;
    let mut v = Verdicts::default();
    let inputs = json!({"input": input, "field": field, "params": ps});
    match kind {
        Kind::Algebra => {
            let a = load_algebra(input, field, &ps)?;
            v.pass("graded", true, None);
            v.pass("unital", a.is_unital(), None);
            let law = check_superalternative(&a);
            v.pass(
                "superalternative",
                law.holds,
                law.witness.map(|w| format!("{} at ({}) = {}", w.law, w.names.join(", "), w.value)),
            );
            // the identities are stated for ungraded alternative algebras
            if a.basis_of_parity(1).is_empty() {
                for id in alternative_identities() {
                    v.result(
                        &format!("identity {}", id.name),
                        check_identity(&a, &id).map(|r| (r.holds, r.witness.map(|w| format!("{w:?}")))),
                    );
                }
            }
            eprintln!("{} over {}: dimension {}", input, a.field(), a.dim());
            let info = json!({"field": a.field().to_string(), "dim": a.dim(), "parity": a.parity()});
            Ok(report("verify algebra", inputs, &v, Some(("object", info))))
        }
        Kind::Bimodule => {
            let m = load_bimodule(input, field, &ps)?;
            bimodule_verdicts(&mut v, &m);
            let info = json!({"field": m.field().to_string(), "dim": m.dim(), "algebra_dim": m.algebra().dim()});
            Ok(report("verify bimodule", inputs, &v, Some(("object", info))))
        }
    }
}

fn bimodule_verdicts(v: &mut Verdicts, m: &SuperBimodule) {
    v.result(
        "alternative",
        check_alternative_bimodule(m).map(|r| (r.holds, r.witness.map(|w| format!("{} at ({})", w.law, w.names.join(", "))))),
    );
    v.result(
        "irreducible",
        m.graded_irreducibility().map(|verdict| match verdict {
            Verdict::Irreducible(_) => (true, None),
            Verdict::Reducible(s) => (false, Some(format!("invariant subspace {:?}", s.describe()))),
        }),
    );
    v.pass("faithful", is_faithful(m), None);
}

fn catalog_cmd(cmd: &CatalogCmd) -> Out {
    match cmd {
        CatalogCmd::List => {
            let list: Vec<Value> = catalog::registry()
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "summary": e.summary,
                        "default_field": e.default_field,
                        "params": e.params.iter().map(|(k, d)| json!({"name": k, "default": d})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok((json!({"schema": SCHEMA, "command": "catalog list", "entries": list}), 0))
        }
        CatalogCmd::Build { name, field, params } => {
            let ps = cons::parse_params(params)?;
            let e = catalog::find_entry(name).ok_or_else(|| usage(format!("unknown catalog entry {name}")))?;
            let f = parse_field(field.as_deref().unwrap_or(e.default_field))?;
            Ok((catalog::build_entry(&e, &f, &ps)?.to_json(), 0))
        }
        CatalogCmd::Check { name, field, params, corrupt } => {
            let instances: Vec<Instance> = if name == "all" {
                catalog::battery()
            } else {
                let e = catalog::find_entry(name).ok_or_else(|| usage(format!("unknown catalog entry {name}")))?;
                let f = field.clone().unwrap_or_else(|| e.default_field.to_string());
                parse_field(&f)?;
                let ps = cons::parse_params(params)?;
                let label = format!("{name}[{f}; {}]", ps.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(","));
                vec![Instance { label, entry: e.name, field: f, params: ps, associative: false }]
            };
            let mut rows = Vec::new();
            let mut worst = Status::Pass;
            for inst in &instances {
                let (row, st) = check_instance(inst, *corrupt, name == "all")?;
                if st != Status::Pass {
                    eprintln!("{}: {}", inst.label, st.as_str());
                }
                worst = worst.max(st);
                rows.push(row);
            }
            let doc = json!({
                "schema": SCHEMA,
                "command": "catalog check",
                "inputs": {"name": name, "field": field, "params": params, "corrupt": corrupt},
                "status": worst.as_str(),
                "reports": rows,
            });
            Ok((doc, worst.code()))
        }
    }
}

/// One row {entry, alternative, irreducible, faithful, associative, opposite_class}.
fn check_instance(inst: &Instance, corrupt: bool, expect_assoc: bool) -> Result<(Value, Status), Failure> {
    let mut m = inst.build()?;
    if corrupt {
        m = suites::corrupt_table(&m)?;
    }
    let mut v = Verdicts::default();
    bimodule_verdicts(&mut v, &m);
    let assoc = superalt::bimodule::is_associative_bimodule(&m)?;
    if expect_assoc {
        v.pass("associative as classified", assoc == inst.associative, None);
    }
    let opp = match is_isomorphic_graded(&m, &m.opposite()) {
        Ok(c) => c.as_str().to_string(),
        Err(e) => format!("error: {e}"),
    };
    let status = v.status();
    let row = json!({
        "entry": inst.label,
        "alternative": v.verdicts["alternative"],
        "irreducible": v.verdicts["irreducible"],
        "faithful": v.verdicts["faithful"],
        "associative": assoc,
        "opposite_class": opp,
        "status": status.as_str(),
        "witnesses": v.witnesses,
    });
    Ok((row, status))
}

fn u1_cmd(cmd: &U1Cmd) -> Out {
    match cmd {
        U1Cmd::Mul { lambda, field, x, y } => {
            let f = parse_field(field)?;
            let u = EnvelopeU1::new(&f, &f.parse_scalar(lambda)?);
            let (a, b) = (u.parse(x)?, u.parse(y)?);
            let p = u.mul(&a, &b);
            let doc = json!({
                "schema": SCHEMA,
                "command": "u1 mul",
                "inputs": {"lambda": lambda, "field": field, "x": x, "y": y},
                "x": u.format(&a),
                "y": u.format(&b),
                "product": u.format(&p),
            });
            Ok((doc, 0))
        }
        U1Cmd::Specialize { alpha, lambda, field } => {
            let f = parse_field(field)?;
            let (a, l) = (f.parse_scalar(alpha)?, f.parse_scalar(lambda)?);
            let s = enveloping::u_specialize(&f, &l, &a)?;
            let irr = s.f_irreducible()?;
            let u = s.u_element()?;
            let doc = json!({
                "schema": SCHEMA,
                "command": "u1 specialize",
                "inputs": {"alpha": alpha, "lambda": lambda, "field": field},
                "f": s.f.to_string_in("u"),
                "f_irreducible": irr,
                "u": s.algebra.describe(&u),
                "algebra": s.algebra.to_json(),
            });
            Ok((doc, 0))
        }
        U1Cmd::Ideal { alpha, field } => {
            let f = parse_field(field)?;
            let c = enveloping::u_char3_ideal(&f, &f.parse_scalar(alpha)?)?;
            let alg = &c.specialized.algebra;
            let doc = json!({
                "schema": SCHEMA,
                "command": "u1 ideal",
                "inputs": {"alpha": alpha, "field": field},
                "ideal": c.ideal.basis().iter().map(|x| alg.describe(x)).collect::<Vec<_>>(),
                "square_zero": c.square_zero,
                "quotient": c.quotient.to_json(),
            });
            Ok((doc, 0))
        }
    }
}

fn suite_json(r: &SuiteReport) -> Value {
    let failures: Vec<Value> = r.failures().map(|c| json!({"name": c.name, "detail": c.detail})).collect();
    json!({
        "suite": r.suite,
        "criterion": r.criterion,
        "title": r.title,
        "status": suite_status(r).as_str(),
        "checks": r.checks.len(),
        "failures": failures,
    })
}

fn suite_status(r: &SuiteReport) -> Status {
    if r.pass {
        Status::Pass
    } else if r.inconclusive && r.failures().all(|c| c.detail.as_deref().is_some_and(|d| d.starts_with("inconclusive"))) {
        Status::Inconclusive
    } else {
        Status::Fail
    }
}

fn check(suite: &str, corrupt: Option<String>) -> Out {
    let names: Vec<&str> = if suite == "all" {
        suites::SUITES.iter().map(|s| s.0).collect()
    } else if suites::SUITES.iter().any(|s| s.0 == suite) {
        vec![suite]
    } else {
        return Err(usage(format!("unknown suite {suite}")));
    };
    let opts = SuiteOptions { corrupt: corrupt.clone() };
    let mut v = Verdicts::default();
    let mut details = Vec::new();
    for n in names {
        let r = suites::run_suite(n, &opts)?;
        let st = suite_status(&r);
        eprintln!("criterion {} ({}): {}", r.criterion, r.suite, st.as_str());
        for c in r.failures() {
            eprintln!("  failed: {}", c.name);
        }
        let first = r.failures().next().map(|c| c.name.clone());
        v.add(n, st, first);
        details.push(suite_json(&r));
    }
    let inputs = json!({"suite": suite, "corrupt": corrupt});
    Ok(report("check", inputs, &v, Some(("suites", json!(details)))))
}
