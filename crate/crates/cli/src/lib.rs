//! The `clomul` command line: argument parsing, target resolution and
//! report rendering. `run` is the whole program minus process exit.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use clomul::budget::Caps;
use clomul::closed::{ek_normalize, TabularClosed};
use clomul::correspondence::{build_representing_multicategory, Underlying};
use clomul::instances::registry::{self, dump, dump_functor, find, roundtrip_docs, run_doc, Expect, ENTRIES};
use clomul::interchange::{
    closed_doc_of, closed_from_doc, multi_from_doc, multi_to_doc, parse, print, tabulate_closed_multi, Doc,
    InstanceRef,
};
use clomul::report::Summary;
use clomul::suite::Suite;
use clomul::{Error, Report, Result};

#[derive(Debug, Parser)]
#[command(name = "clomul", version, about = "Check closed categories and closed multicategories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Enumeration limits: a number sets the largest hom-set, or give
    /// `hom=N,objects=N,depth=N,instances=N`.
    #[arg(long, global = true, default_value = "hom=4096,objects=16,depth=4")]
    pub budget: String,
    /// Largest total arity quantified over in multicategory checks.
    #[arg(long = "arity-cap", global = true, default_value_t = 3)]
    pub arity_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Axioms,
    Theorems,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run checker suites; with no targets, over the whole registry.
    Check { targets: Vec<String> },
    /// Build a derived structure and print it as an interchange file.
    Construct {
        #[arg(value_enum)]
        what: Construction,
        target: String,
    },
    /// Round trips through U and lift: `instance:NAME functor:F`, or
    /// `SOURCE [TARGET] FUNCTOR` as files.
    Roundtrip { args: Vec<String> },
    /// Print the representing multicategory of a closed category.
    Represent { target: String },
    /// The instance registry.
    Instance {
        #[command(subcommand)]
        action: InstanceAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// The underlying closed category of a closed multicategory.
    Underlying,
    /// The EK-normalized closed category W.
    Ek,
    /// The representing multicategory, as `represent`.
    Representing,
}

#[derive(Debug, Subcommand)]
pub enum InstanceAction {
    List,
    Dump {
        name: String,
        /// Dump a registered multifunctor instead.
        #[arg(long)]
        functor: Option<String>,
    },
}

/// Program output: the text to write and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

/// Reports of one target.
#[derive(Debug, Clone, Serialize)]
pub struct TargetReport {
    pub target: String,
    pub reports: Vec<Report>,
    pub summary: Summary,
}

/// The document `--format json` prints for `check` and `roundtrip`.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub verb: String,
    pub suite: String,
    pub targets: Vec<TargetReport>,
    pub summary: Summary,
    pub passed: bool,
}

pub fn parse_budget(s: &str) -> Result<Caps> {
    let mut caps = Caps::default();
    if let Ok(n) = s.parse::<usize>() {
        caps.budget.max_hom = n;
        return Ok(caps);
    }
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("budget entry {part:?} is not key=value")))?;
        let n: usize = v
            .parse()
            .map_err(|_| Error::Parse(format!("budget value {v:?} is not a number")))?;
        match k {
            "hom" => caps.budget.max_hom = n,
            "objects" => caps.budget.max_objects = n,
            "depth" => caps.budget.max_depth = n,
            "instances" => caps.max_instances = n,
            _ => return Err(Error::Parse(format!("unknown budget key {k:?}"))),
        }
    }
    Ok(caps)
}

fn caps_of(cli: &Cli) -> Result<Caps> {
    let caps = parse_budget(&cli.budget)?;
    if cli.arity_cap == 0 {
        return Err(Error::Parse("--arity-cap must be at least 1".into()));
    }
    Ok(Caps {
        arity: cli.arity_cap,
        ..caps
    })
}

/// `instance:NAME`, `file:PATH` or a bare path.
pub fn load_target(target: &str) -> Result<Doc> {
    if let Some(name) = target.strip_prefix("instance:") {
        find(name)?;
        return Ok(Doc::Instance(InstanceRef {
            name: name.into(),
            params: Default::default(),
        }));
    }
    let path = target.strip_prefix("file:").unwrap_or(target);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    parse(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn summarize(reports: &[Report]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        s.pass += r.summary.pass;
        s.fail += r.summary.fail;
        s.skipped += r.summary.skipped;
    }
    s
}

fn outcome(verb: &str, suite: Suite, targets: Vec<(String, Vec<Report>)>) -> Outcome {
    let targets: Vec<TargetReport> = targets
        .into_iter()
        .map(|(target, reports)| TargetReport {
            summary: summarize(&reports),
            target,
            reports,
        })
        .collect();
    let mut summary = Summary::default();
    for t in &targets {
        summary.pass += t.summary.pass;
        summary.fail += t.summary.fail;
        summary.skipped += t.summary.skipped;
    }
    Outcome {
        verb: verb.into(),
        suite: format!("{suite:?}").to_lowercase(),
        passed: summary.fail == 0,
        targets,
        summary,
    }
}

pub fn render(o: &Outcome, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(o)?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            for t in &o.targets {
                s.push_str(&format!("# {}\n", t.target));
                for r in &t.reports {
                    s.push_str(&r.to_text());
                }
                s.push('\n');
            }
            s.push_str(&format!(
                "total: {} pass, {} fail, {} skipped: {}\n",
                o.summary.pass,
                o.summary.fail,
                o.summary.skipped,
                if o.passed { "PASS" } else { "FAIL" }
            ));
            Ok(s)
        }
    }
}

fn check(targets: &[String], suite: Suite, caps: &Caps) -> Result<Outcome> {
    let names: Vec<String> = if targets.is_empty() {
        ENTRIES.iter().map(|e| format!("instance:{}", e.name)).collect()
    } else {
        targets.to_vec()
    };
    let mut out = Vec::new();
    for t in names {
        let doc = load_target(&t)?;
        out.push((t, run_doc(&doc, suite, caps)?));
    }
    Ok(outcome("check", suite, out))
}

fn roundtrip(args: &[String], caps: &Caps) -> Result<Outcome> {
    let reports = match args {
        [m, f] if m.starts_with("instance:") && f.starts_with("functor:") => {
            let entry = find(&m["instance:".len()..])?;
            registry::roundtrip(entry, &f["functor:".len()..], caps)?
        }
        [m, f] => {
            let (m, f) = (as_tabular(&load_target(m)?, caps)?, load_target(f)?);
            roundtrip_docs(&m, &m, &f, caps)?
        }
        [s, t, f] => {
            let (s, t) = (as_tabular(&load_target(s)?, caps)?, as_tabular(&load_target(t)?, caps)?);
            roundtrip_docs(&s, &t, &load_target(f)?, caps)?
        }
        _ => {
            return Err(Error::Parse(
                "roundtrip takes instance:NAME functor:F, or SOURCE [TARGET] FUNCTOR".into(),
            ))
        }
    };
    Ok(outcome("roundtrip", Suite::All, vec![(args.join(" "), reports)]))
}

/// Registry references replaced by their tables.
fn as_tabular(doc: &Doc, caps: &Caps) -> Result<Doc> {
    match doc {
        Doc::Instance(r) => dump(find(&r.name)?, &r.params, caps),
        d => Ok(d.clone()),
    }
}

fn tabular_closed(doc: &Doc, caps: &Caps) -> Result<TabularClosed> {
    match as_tabular(doc, caps)? {
        Doc::Closed(d) => closed_from_doc(&d),
        Doc::Instance(r) => Err(Error::Parse(format!(
            "{} is only lazily finite; this verb needs a tabular closed category",
            r.name
        ))),
        _ => Err(Error::Parse("expected a closed category".into())),
    }
}

fn construct(what: Construction, target: &str, caps: &Caps) -> Result<Doc> {
    let doc = load_target(target)?;
    match what {
        Construction::Underlying => {
            let Doc::Multicategory(d) = as_tabular(&doc, caps)? else {
                return Err(Error::Parse("underlying needs a closed multicategory".into()));
            };
            let l = multi_from_doc(&d)?;
            let cm = l
                .closed(*caps)
                .ok_or_else(|| Error::Parse(format!("{} has no closedness witness", d.name)))?;
            let uw = l.unit.clone().ok_or_else(|| Error::Parse(format!("{} has no unit", d.name)))?;
            let u = Underlying::new(&cm, uw);
            Ok(Doc::Closed(closed_doc_of(&u, &format!("und-{}", d.name), &caps.budget)?))
        }
        Construction::Ek => {
            let v = tabular_closed(&doc, caps)?;
            let w = ek_normalize(&v, &caps.budget);
            Ok(Doc::Closed(closed_doc_of(&w, &format!("W-{}", v.cat.name), &caps.budget)?))
        }
        Construction::Representing => represent(&doc, caps),
    }
}

fn represent(doc: &Doc, caps: &Caps) -> Result<Doc> {
    let v = tabular_closed(doc, caps)?;
    let name = format!("mc-{}", v.cat.name);
    // built one arity up, since the table lists one arity above the caps
    let (mut cm, uw) = build_representing_multicategory(&v, &name, caps.with_extra_arity())?;
    cm.caps = *caps;
    let (l, _) = tabulate_closed_multi(&cm, Some(&uw), &name)?;
    Ok(Doc::Multicategory(multi_to_doc(&l)))
}

#[derive(Serialize)]
struct Listed<'a> {
    name: &'a str,
    kind: &'a str,
    about: &'a str,
    expect: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    advertised: Option<&'a str>,
    functors: &'a [&'a str],
}

fn list(format: Format) -> Result<String> {
    let rows: Vec<Listed> = ENTRIES
        .iter()
        .map(|e| Listed {
            name: e.name,
            kind: e.kind.as_str(),
            about: e.about,
            expect: if e.expect == Expect::Pass { "pass" } else { "fail" },
            advertised: match e.expect {
                Expect::Pass => None,
                Expect::Fail { advertised, .. } => Some(advertised),
            },
            functors: e.functors,
        })
        .collect();
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&rows)? + "\n"),
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                let verdict = match r.advertised {
                    Some(a) => format!("fixture, fails {a}"),
                    None => "passes".into(),
                };
                s.push_str(&format!("{:<22} {:<21} {verdict}: {}\n", r.name, r.kind, r.about));
                if !r.functors.is_empty() {
                    s.push_str(&format!("{:<22} functors: {}\n", "", r.functors.join(", ")));
                }
            }
            Ok(s)
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let caps = caps_of(cli)?;
    let suite: Suite = cli.suite.into();
    let report = |o: Outcome| -> Result<Output> {
        Ok(Output {
            code: if o.passed { 0 } else { 1 },
            text: render(&o, cli.format)?,
        })
    };
    let doc = |d: Doc| -> Result<Output> { Ok(Output { text: print(&d)?, code: 0 }) };
    match &cli.command {
        Command::Check { targets } => report(check(targets, suite, &caps)?),
        Command::Roundtrip { args } => report(roundtrip(args, &caps)?),
        Command::Construct { what, target } => doc(construct(*what, target, &caps)?),
        Command::Represent { target } => doc(represent(&load_target(target)?, &caps)?),
        Command::Instance { action } => match action {
            InstanceAction::List => Ok(Output {
                text: list(cli.format)?,
                code: 0,
            }),
            InstanceAction::Dump { name, functor } => {
                let entry = find(name)?;
                match functor {
                    Some(f) => doc(dump_functor(entry, f, &caps)?),
                    None => doc(dump(entry, &Default::default(), &caps)?),
                }
            }
        },
    }
}

/// Runs a parsed command line. Errors become exit status 2.
pub fn run(cli: &Cli) -> Output {
    let out = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            return Output {
                text: format!("error: {e}\n"),
                code: 2,
            }
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.text) {
            return Output {
                text: format!("error: {}: {e}\n", path.display()),
                code: 2,
            };
        }
        return Output {
            text: String::new(),
            code: out.code,
        };
    }
    out
}

/// Parses `args` (without the program name) and runs them.
pub fn run_args<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("clomul")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => Output {
            text: e.to_string(),
            code: if e.use_stderr() { 2 } else { 0 },
        },
    }
}

