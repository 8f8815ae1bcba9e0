use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use sixteen_core::curve::{TorsionClass, TorsionScreen};
use sixteen_core::identities::{self, IdentityDescriptor};
use sixteen_core::oracle::{search_product_eq, search_quartic_sum, SearchConfig};
use sixteen_core::report::{overall, Witness};
use sixteen_core::sectiona::{SectionA, TUPLE6_NAMES};
use sixteen_core::sectionb::{degree16_tuple, TUPLE12_NAMES};
use sixteen_core::{Error, Mode, ParamsA, Report, Status};

const EXIT_FAILED: u8 = 1;
const EXIT_ERRATUM: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "sixteen", version)]
#[command(about = "Exact solutions and identity checks for degree-eight and degree-sixteen Diophantine equations")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Report wall-clock time (separate `timing` field in JSON)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Numeric => Mode::Numeric,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve m(a^4 - b^4) = (c^4 - d^4)(e^4 - f^4) from the multiple kP
    Generate {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        p: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        q: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k: BigInt,
    },
    /// Degree-sixteen tuple from the link parameter k
    Generate16 {
        #[arg(long, allow_negative_numbers = true)]
        k: BigInt,
    },
    /// Check one catalog identity
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(identities::names()))]
        identity: String,
        /// Defaults to every mode the identity supports
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// List every erratum found across the catalog
    Errata,
    /// Brute-force searches
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Curve, point, multiples and torsion screen for (n, p, q)
    Curve {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        p: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        q: BigInt,
        /// Number of multiples to print
        #[arg(long, default_value_t = 6)]
        multiples: usize,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Collisions of a^4 + b^4 + ab(a^2 + ab + b^2) with entries in [-bound, bound]
    QuarticSum {
        #[arg(long)]
        bound: i64,
    },
    /// Primitive solutions of m(a^4 - b^4) = (c^4 - d^4)(e^4 - f^4)
    Product {
        #[arg(long, allow_negative_numbers = true)]
        m: BigInt,
        /// Bound on c, d, e, f
        #[arg(long)]
        bound: i64,
        /// Bound on a, b (defaults to `bound`)
        #[arg(long)]
        lhs_bound: Option<i64>,
    },
}

#[derive(Serialize)]
struct Output {
    command: &'static str,
    inputs: BTreeMap<&'static str, String>,
    status: &'static str,
    witnesses: Vec<Witness>,
    notes: Vec<String>,
    errata: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: String,
}

impl Output {
    fn new(command: &'static str) -> Self {
        Output {
            command,
            inputs: BTreeMap::new(),
            status: Status::Verified.as_str(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            errata: Vec::new(),
            timing: None,
        }
    }

    fn input(mut self, name: &'static str, value: impl Display) -> Self {
        self.inputs.insert(name, value.to_string());
        self
    }

    fn witness(&mut self, name: impl Into<String>, value: impl Display) {
        self.witnesses.push(Witness::new(name, value));
    }
}

/// Command result: the rendered output plus its exit code.
type Outcome = (Output, u8);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let started = Instant::now();
    let (mut out, code) = run(&cli.command);
    if cli.timing {
        out.timing = Some(Timing {
            elapsed_ms: started.elapsed().as_millis().to_string(),
        });
    }
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializable") + "\n",
        Format::Text => render_text(&out),
    };
    // A closed pipe is not an error for a report printer.
    let _ = io::stdout().lock().write_all(rendered.as_bytes());
    if let Some(t) = &out.timing {
        eprintln!("elapsed: {} ms", t.elapsed_ms);
    }
    ExitCode::from(code)
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Generate { n, p, q, k } => {
            let out = Output::new("generate")
                .input("n", n)
                .input("p", p)
                .input("q", q)
                .input("k", k);
            guarded(out, |out| generate(out, n, p, q, k))
        }
        Command::Generate16 { k } => guarded(Output::new("generate16").input("k", k), |out| generate16(out, k)),
        Command::Verify { identity, mode } => {
            let desc = identities::lookup(identity).expect("validated by the parser");
            let mut out = Output::new("verify").input("identity", identity);
            if let Some(m) = mode {
                out = out.input("mode", Mode::from(*m));
            }
            verify(out, desc, mode.map(Mode::from))
        }
        Command::Errata => errata(Output::new("errata")),
        Command::Search { kind } => match kind {
            SearchKind::QuarticSum { bound } => guarded(
                Output::new("search").input("kind", "quartic-sum").input("bound", bound),
                |out| search_sum(out, *bound),
            ),
            SearchKind::Product { m, bound, lhs_bound } => {
                let mut out = Output::new("search")
                    .input("kind", "product")
                    .input("m", m)
                    .input("bound", bound);
                if let Some(l) = lhs_bound {
                    out = out.input("lhs-bound", l);
                }
                guarded(out, |out| search_product(out, m, *bound, *lhs_bound))
            }
        },
        Command::Curve { n, p, q, multiples } => {
            let out = Output::new("curve")
                .input("n", n)
                .input("p", p)
                .input("q", q)
                .input("multiples", multiples);
            guarded(out, |out| curve(out, n, p, q, *multiples))
        }
    }
}

/// Runs `f`, mapping library errors onto the exit-code contract.
fn guarded(mut out: Output, f: impl FnOnce(&mut Output) -> sixteen_core::Result<u8>) -> Outcome {
    match f(&mut out) {
        Ok(code) => (out, code),
        Err(e) => {
            let (status, code) = match &e {
                Error::Degenerate { factor, .. } => {
                    out.witness("vanishing factor", factor);
                    ("degenerate", EXIT_DEGENERATE)
                }
                Error::InvalidArgument(_) => ("usage", EXIT_USAGE),
                _ => (Status::Failed.as_str(), EXIT_FAILED),
            };
            eprintln!("error: {e}");
            out.status = status;
            out.notes.push(e.to_string());
            (out, code)
        }
    }
}

fn generate(out: &mut Output, n: &BigInt, p: &BigInt, q: &BigInt, k: &BigInt) -> sixteen_core::Result<u8> {
    let params = ParamsA::new(n.clone(), p.clone(), q.clone())?;
    let section = SectionA::new(params)?;
    let g = section.generate(k)?;
    let inst = section.instance();
    out.witness("m", &g.tuple.m);
    for (name, v) in TUPLE6_NAMES.iter().zip(g.tuple.entries()) {
        out.witness(*name, v);
    }
    let (lhs, rhs) = g.tuple.sides();
    out.witness("m(a^4 - b^4)", &lhs);
    out.witness("(c^4 - d^4)(e^4 - f^4)", &rhs);
    out.witness("curve", &inst.curve);
    out.witness("P", &inst.point);
    out.witness("kP", &g.point);
    out.witness("U", &g.u);
    if let Some(s) = &inst.screen {
        screen_witnesses(out, s);
    }
    if !section.uses_displayed_curve() {
        out.notes.push("displayed curve could not be reconciled; using the transferred curve".into());
    }
    Ok(status_code(out, lhs == rhs))
}

fn generate16(out: &mut Output, k: &BigInt) -> sixteen_core::Result<u8> {
    let d = degree16_tuple(k)?;
    out.witness("p", &d.link.p);
    out.witness("q", &d.link.q);
    out.witness("r", &d.link.r);
    out.witness("s", &d.link.s);
    for (name, v) in TUPLE12_NAMES.iter().zip(d.tuple.entries()) {
        out.witness(*name, v);
    }
    out.witness("m1 = m2", &d.multiplier);
    let (lhs, rhs) = d.tuple.sides();
    out.witness("lhs", &lhs);
    out.witness("rhs", &rhs);
    out.notes.push("entries are sign-normalized; all exponents are even".into());
    Ok(status_code(out, lhs == rhs && lhs == d.value))
}

fn status_code(out: &mut Output, ok: bool) -> u8 {
    if ok {
        0
    } else {
        out.status = Status::Failed.as_str();
        EXIT_FAILED
    }
}

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Verified => 0,
        Status::ErratumDetected => EXIT_ERRATUM,
        Status::Failed => EXIT_FAILED,
    }
}

fn verify(mut out: Output, desc: &IdentityDescriptor, mode: Option<Mode>) -> Outcome {
    let modes: Vec<Mode> = match mode {
        Some(m) => vec![m],
        None => desc.modes.to_vec(),
    };
    let mut reports = Vec::new();
    for m in modes {
        match desc.run(m) {
            Ok(r) => reports.extend(r),
            Err(e) => {
                eprintln!("error: {e}");
                out.status = "usage";
                out.notes.push(e.to_string());
                return (out, EXIT_USAGE);
            }
        }
    }
    let status = overall(&reports);
    out.status = status.as_str();
    for r in &reports {
        absorb(&mut out, r);
    }
    out.errata = reports
        .into_iter()
        .filter(|r| r.status == Status::ErratumDetected)
        .collect();
    (out, exit_for(status))
}

/// Copies a report's witnesses and findings into the output under its name.
fn absorb(out: &mut Output, r: &Report) {
    out.witness(format!("{} [{}]", r.name, r.mode), r.status);
    for w in &r.witnesses {
        out.witness(format!("{}: {}", r.name, w.name), &w.value);
    }
    for n in &r.notes {
        out.notes.push(format!("{}: {n}", r.name));
    }
    if r.status == Status::Failed {
        for line in &r.residual {
            out.notes.push(format!("{}: {line}", r.name));
        }
    }
}

fn errata(mut out: Output) -> Outcome {
    let mut all = identities::run_all(Mode::Symbolic);
    all.extend(identities::run_all(Mode::Numeric));
    let found = identities::collect_errata(all.iter().cloned());
    let failed: Vec<&Report> = all.iter().filter(|r| r.status == Status::Failed).collect();
    for r in &failed {
        out.notes.push(format!("{} [{}] failed", r.name, r.mode));
    }
    out.witness("errata", found.len());
    out.witness("reports", all.len());
    out.errata = found;
    if failed.is_empty() {
        out.status = overall(&out.errata).as_str();
        (out, 0)
    } else {
        out.status = Status::Failed.as_str();
        (out, EXIT_FAILED)
    }
}

fn search_sum(out: &mut Output, bound: i64) -> sixteen_core::Result<u8> {
    let hits = search_quartic_sum(&SearchConfig::new(bound))?;
    for h in &hits {
        let [a, b, c, d] = h.as_tuple();
        out.witness(format!("g({a}, {b}) = g({c}, {d})"), h.value);
    }
    out.notes.push(format!("{} primitive collisions", hits.len()));
    Ok(0)
}

fn search_product(out: &mut Output, m: &BigInt, bound: i64, lhs_bound: Option<i64>) -> sixteen_core::Result<u8> {
    let mut cfg = SearchConfig::new(bound).with_m(m.clone());
    if let Some(l) = lhs_bound {
        cfg = cfg.with_lhs_bound(l);
    }
    let found = search_product_eq(&cfg)?;
    for t in &found {
        out.witness(t.to_string(), t.sides().0);
    }
    out.notes.push(format!("{} primitive solutions", found.len()));
    Ok(0)
}

fn curve(out: &mut Output, n: &BigInt, p: &BigInt, q: &BigInt, count: usize) -> sixteen_core::Result<u8> {
    let section = SectionA::new(ParamsA::new(n.clone(), p.clone(), q.clone())?)?;
    let inst = section.instance();
    let (curve, point) = section.generator();
    out.witness("curve", &inst.curve);
    out.witness("P", &inst.point);
    out.witness("P on curve", inst.on_curve);
    out.witness("discriminant", curve.discriminant());
    out.witness("j-invariant", curve.j_invariant());
    match &inst.reconciliation {
        Some(iso) if iso.is_identity() => out.witness("reconciliation", "identity"),
        Some(iso) => out.witness("reconciliation", format!("[u, r, s, t] = [{}, {}, {}, {}]", iso.u, iso.r, iso.s, iso.t)),
        None => out.witness("reconciliation", "none"),
    }
    for (i, m) in curve.multiples(point, count).iter().enumerate() {
        out.witness(format!("{}P", i + 1), m);
    }
    if let Some(s) = &inst.screen {
        screen_witnesses(out, s);
    }
    Ok(status_code(out, inst.on_curve))
}

fn screen_witnesses(out: &mut Output, s: &TorsionScreen) {
    let class = match s.class {
        TorsionClass::FiniteOrder(d) => format!("finite order {d}"),
        TorsionClass::LikelyInfinite => "likely infinite".to_string(),
    };
    out.witness("torsion screen", class);
    out.witness("distinct multiples", s.distinct_multiples);
    if let Some(k) = s.nagell_lutz_witness {
        out.witness("non-integral multiple", format!("{k}P"));
    }
}

fn render_text(out: &Output) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", out.command, out.status);
    for (k, v) in &out.inputs {
        let _ = writeln!(s, "  {k} = {v}");
    }
    for w in &out.witnesses {
        let _ = writeln!(s, "{} = {}", w.name, w.value);
    }
    for n in &out.notes {
        let _ = writeln!(s, "note: {n}");
    }
    for r in &out.errata {
        let _ = writeln!(s, "erratum {} [{}]", r.name, r.mode);
        for line in &r.residual {
            let _ = writeln!(s, "    as printed: {line}");
        }
        if let Some(c) = &r.correction {
            let _ = writeln!(s, "    corrected: {c}");
        }
    }
    s
}
