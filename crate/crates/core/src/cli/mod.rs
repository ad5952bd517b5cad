//! The `sepfam` command line.
//!
//! Exit codes: 0 on success, 1 when a requested predicate is false or two
//! methods disagree, 2 for usage, parse, domain and capacity errors.

pub mod document;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::bipartition::FamilyOfBipartitions;
use crate::counting::{self, ceil_log2, CountValue, Counter, StirlingKind, StirlingTable};
use crate::error::Error;
use crate::oracle;
use crate::tree::{self, LabeledGraph, LabeledTree};

use document::{parse_family_input, FamilyDocument, ParsedFamily};

/// Largest grid `verify` will evaluate.
pub const VERIFY_N_CAP: usize = 12;
pub const VERIFY_K_CAP: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "sepfam", version, about = "Separating families of bipartitions: predicates, tree bijection, exact counts")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether a family is separating (and minimal).
    Check(CheckArgs),
    /// Map a maximum-size minimal family to its spanning tree or back.
    Map(MapArgs),
    /// Stream trees or families, one per line.
    Enumerate(EnumerateArgs),
    /// Evaluate one count exactly.
    Count(CountArgs),
    /// Run every identity and oracle check on a grid.
    Verify(VerifyArgs),
    /// Tabulate tau or sigma over a grid.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Doc,
    Compact,
    Edges,
    Prufer,
}

#[derive(Debug, clap::Args)]
struct CheckArgs {
    /// Family document or compact line; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    minimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    FamilyToTree,
    TreeToFamily,
}

#[derive(Debug, clap::Args)]
struct MapArgs {
    direction: Direction,
    /// Family document, or an edge list `i-j,...`; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Vertex count for an edge list (defaults to the largest vertex).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    Trees,
    MinimalMaxFamilies,
    Families,
}

#[derive(Debug, clap::Args)]
struct EnumerateArgs {
    kind: EnumerateKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    proper: bool,
    #[arg(long)]
    minimal: bool,
    /// Print at most this many items; the total still counts every item.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Tau,
    Sigma,
    MinSize,
    MinSizeCount,
    MinGround,
    Stirling1,
    Stirling2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    V1,
    V2,
    Brute,
    All,
}

#[derive(Debug, clap::Args)]
struct CountArgs {
    quantity: Quantity,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "v1")]
    method: Method,
    /// For min-ground: count families of proper bipartitions.
    #[arg(long)]
    proper: bool,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 8)]
    k_max: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add one to the unsigned Stirling entry c(K, I) before verifying.
    #[arg(long, value_name = "K,I", hide = true)]
    perturb_stirling1: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum TableQuantity {
    Tau,
    Sigma,
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    quantity: TableQuantity,
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    k_max: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
enum Failure {
    /// The command ran but a predicate is false or methods disagree.
    Semantic(String),
    /// Bad input, domain, capacity or I/O.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("I/O error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: &Option<PathBuf>) -> Result<String, Failure> {
        match path {
            Some(p) => fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_out = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if to_out { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if to_out { 0 } else { 2 };
        }
    };
    let mut io = Io { stdin, out, err };
    let result = match cli.command {
        Command::Check(a) => cmd_check(&mut io, a),
        Command::Map(a) => cmd_map(&mut io, a),
        Command::Enumerate(a) => cmd_enumerate(&mut io, a),
        Command::Count(a) => cmd_count(&mut io, a),
        Command::Verify(a) => cmd_verify(&mut io, a),
        Command::Table(a) => cmd_table(&mut io, a),
    };
    let _ = io.out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Semantic(msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(io.err, "{msg}");
            }
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
    }
}

fn read_family(io: &mut Io<'_>, path: &Option<PathBuf>) -> Result<ParsedFamily, Failure> {
    let text = io.read_input(path)?;
    let parsed = parse_family_input(&text).map_err(|e| Failure::Usage(format!("parse error: {e}")))?;
    if parsed.relabeled() {
        writeln!(io.err, "labels: {}", parsed.mapping())?;
    }
    Ok(parsed)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(io: &mut Io<'_>, args: CheckArgs) -> CmdResult {
    let parsed = read_family(io, &args.input)?;
    let family = &parsed.family;
    let separating = family.is_separating();
    let mut line = format!("separating: {}", yes_no(separating));
    let mut ok = separating;
    if args.minimal {
        let minimal = family.is_minimal_separating();
        line.push_str(&format!(", minimal: {}", yes_no(minimal)));
        ok &= minimal;
    }
    writeln!(io.out, "{line}")?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Semantic(String::new()))
    }
}

fn cmd_map(io: &mut Io<'_>, args: MapArgs) -> CmdResult {
    match args.direction {
        Direction::FamilyToTree => {
            let format = args.format.unwrap_or(Format::Edges);
            if !matches!(format, Format::Edges | Format::Prufer) {
                return Err(Failure::Usage("family-to-tree prints --format edges or prufer".into()));
            }
            let parsed = read_family(io, &args.input)?;
            let f = &parsed.family;
            let n = f.n();
            if n < 2 || f.len() != n - 1 || !f.is_minimal_separating() {
                return Err(Failure::Semantic(format!(
                    "domain error: need a minimal separating family of size n - 1 = {}, got {} members (minimal separating: {})",
                    n.saturating_sub(1),
                    f.len(),
                    yes_no(f.is_minimal_separating())
                )));
            }
            let t = LabeledTree::new(tree::phi_forward(f))
                .map_err(|e| Failure::Semantic(format!("domain error: {e}")))?;
            match format {
                Format::Prufer => writeln!(io.out, "{}", tree::prufer_encode(&t))?,
                _ => writeln!(io.out, "{t}")?,
            }
            Ok(())
        }
        Direction::TreeToFamily => {
            let format = args.format.unwrap_or(Format::Doc);
            if !matches!(format, Format::Doc | Format::Compact) {
                return Err(Failure::Usage("tree-to-family prints --format doc or compact".into()));
            }
            let text = io.read_input(&args.input)?;
            let graph = LabeledGraph::parse_edge_list(&text, args.n)
                .map_err(|e| Failure::Usage(format!("parse error: {e}")))?;
            if graph.n() < 2 {
                return Err(Failure::Semantic("domain error: trees need n >= 2".into()));
            }
            let t = LabeledTree::new(graph).map_err(|e| Failure::Semantic(format!("domain error: {e}")))?;
            let f = tree::phi_inverse(&t);
            write_family(io, &f, format, true)?;
            Ok(())
        }
    }
}

fn write_family(io: &mut Io<'_>, f: &FamilyOfBipartitions, format: Format, pretty: bool) -> std::io::Result<()> {
    match format {
        Format::Doc => {
            let doc = FamilyDocument::from_family(f);
            let text = if pretty {
                serde_json::to_string_pretty(&doc)
            } else {
                serde_json::to_string(&doc)
            }
            .expect("documents serialize");
            writeln!(io.out, "{text}")
        }
        _ => writeln!(io.out, "{f}"),
    }
}

fn cmd_enumerate(io: &mut Io<'_>, args: EnumerateArgs) -> CmdResult {
    let limit = args.limit.unwrap_or(usize::MAX);
    let mut total: u64 = 0;
    match args.kind {
        EnumerateKind::Trees => {
            let format = args.format.unwrap_or(Format::Edges);
            if !matches!(format, Format::Edges | Format::Prufer) {
                return Err(Failure::Usage("trees print --format edges or prufer".into()));
            }
            for s in tree::prufer_sequences(args.n)? {
                if (total as usize) < limit {
                    match format {
                        Format::Prufer => writeln!(io.out, "{s}")?,
                        _ => writeln!(io.out, "{}", tree::prufer_decode(&s))?,
                    }
                }
                total += 1;
            }
        }
        EnumerateKind::MinimalMaxFamilies => {
            let format = family_format(args.format)?;
            for f in tree::enumerate_minimal_max_families(args.n)? {
                if (total as usize) < limit {
                    write_family(io, &f, format, false)?;
                }
                total += 1;
            }
        }
        EnumerateKind::Families => {
            let format = family_format(args.format)?;
            let mut write_err = None;
            oracle::for_each_separating(args.n, args.size, args.proper, args.minimal, |f| {
                if (total as usize) < limit && write_err.is_none() {
                    if let Err(e) = write_family(io, &f, format, false) {
                        write_err = Some(e);
                    }
                }
                total += 1;
            })?;
            if let Some(e) = write_err {
                return Err(e.into());
            }
        }
    }
    writeln!(io.out, "total: {total}")?;
    Ok(())
}

fn family_format(format: Option<Format>) -> Result<Format, Failure> {
    let format = format.unwrap_or(Format::Compact);
    if !matches!(format, Format::Doc | Format::Compact) {
        return Err(Failure::Usage("families print --format doc or compact".into()));
    }
    Ok(format)
}

fn need(v: Option<usize>, flag: &str, quantity: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{quantity} needs --{flag}")))
}

/// Values produced by each available method, in method order.
type Evaluations = Vec<(&'static str, Result<String, Failure>)>;

fn cmd_count(io: &mut Io<'_>, args: CountArgs) -> CmdResult {
    let evaluations = evaluate(&args)?;
    let wanted: Vec<&str> = match args.method {
        Method::V1 => vec!["v1"],
        Method::V2 => vec!["v2"],
        Method::Brute => vec!["brute"],
        Method::All => vec!["v1", "v2", "brute"],
    };
    let mut shown: Vec<(&str, String)> = Vec::new();
    for (label, value) in evaluations {
        if !wanted.contains(&label) {
            continue;
        }
        match value {
            Ok(v) => shown.push((label, v)),
            // with --method all, skip methods that do not apply here
            Err(e) if args.method == Method::All => {
                let (Failure::Usage(msg) | Failure::Semantic(msg)) = e;
                writeln!(io.err, "{label}: unavailable ({msg})")?;
            }
            Err(e) => return Err(e),
        }
    }
    if shown.is_empty() {
        return Err(Failure::Usage(format!(
            "method {:?} is not available for {:?}",
            args.method, args.quantity
        )));
    }
    if args.method == Method::All {
        let line: Vec<String> = shown.iter().map(|(l, v)| format!("{l}: {v}")).collect();
        writeln!(io.out, "{}", line.join(", "))?;
        if shown.iter().any(|(_, v)| *v != shown[0].1) {
            return Err(Failure::Semantic("mismatch: methods disagree".into()));
        }
    } else {
        writeln!(io.out, "{}", shown[0].1)?;
    }
    Ok(())
}

fn show(r: crate::Result<CountValue>) -> Result<String, Failure> {
    Ok(r?.value.to_string())
}

fn unavailable(label: &'static str, why: &str) -> (&'static str, Result<String, Failure>) {
    (label, Err(Failure::Usage(why.into())))
}

fn evaluate(args: &CountArgs) -> Result<Evaluations, Failure> {
    use Quantity::*;
    let name = format!("{:?}", args.quantity).to_lowercase();
    Ok(match args.quantity {
        Tau | Sigma => {
            let n = need(args.n, "n", &name)?;
            let k = need(args.k, "k", &name)?;
            let proper = args.quantity == Sigma;
            // surface domain errors (n < 2) directly
            let v1 = if proper { counting::sigma_v1(n, k) } else { counting::tau_v1(n, k) }?;
            let v2 = if proper { counting::sigma_v2(n, k) } else { counting::tau_v2(n, k) };
            let brute = oracle::brute_count_separating(n, k, proper);
            vec![("v1", Ok(v1.value.to_string())), ("v2", show(v2)), ("brute", show(brute))]
        }
        MinSize => {
            let n = need(args.n, "n", &name)?;
            if n == 0 {
                return Err(Failure::Usage("min-size needs --n >= 1".into()));
            }
            let brute = (|| {
                for k in 0..=n {
                    if !oracle::brute_count_separating(n, k, false)?.is_zero() {
                        return Ok(k.to_string());
                    }
                }
                Err(Failure::Usage("no separating size found".into()))
            })();
            vec![("v1", Ok(counting::min_separating_size(n).to_string())), unavailable("v2", "no second form"), ("brute", brute)]
        }
        MinSizeCount => {
            let n = need(args.n, "n", &name)?;
            let v1 = counting::count_min_size_families(n)?;
            let m = ceil_log2(n);
            vec![
                ("v1", Ok(v1.value.to_string())),
                ("v2", show(counting::tau_v1(n, m))),
                ("brute", show(oracle::brute_count_separating(n, m, false))),
            ]
        }
        MinGround => {
            let k = need(args.k, "k", &name)?;
            let size = if args.proper {
                counting::min_ground_size_proper(k)?
            } else {
                counting::min_ground_size_arbitrary(k)?
            };
            let count = if args.proper {
                Some(counting::count_min_ground_proper(k)?)
            } else if k >= 2 {
                Some(counting::count_min_ground_arbitrary(k)?)
            } else {
                None
            };
            let render = |size: usize, count: &Option<CountValue>| match count {
                Some(c) => format!("size={size} count={c}"),
                None => format!("size={size}"),
            };
            let v1 = render(size, &count);
            let brute = brute_min_ground(k, args.proper).map(|(s, c)| {
                render(s, &count.as_ref().map(|_| CountValue::exact(BigUint::from(c))))
            });
            vec![("v1", Ok(v1)), unavailable("v2", "no second form"), ("brute", brute)]
        }
        Stirling1 | Stirling2 => {
            let k = need(args.n, "n", &name)?;
            let i = need(args.k, "k", &name)?;
            let (table, brute) = if args.quantity == Stirling1 {
                (counting::stirling1_unsigned(k, i), oracle::brute_stirling1(k, i))
            } else {
                (counting::stirling2(k, i), oracle::brute_stirling2(k, i))
            };
            vec![
                ("v1", Ok(table.to_string())),
                unavailable("v2", "no second form"),
                ("brute", brute.map(|v| v.to_string()).map_err(Failure::from)),
            ]
        }
    })
}

/// Smallest ground set with a separating `k`-family, and how many there are,
/// by subset scans.
fn brute_min_ground(k: usize, proper: bool) -> Result<(usize, u64), Failure> {
    if !proper && k == 1 {
        // the trivial bipartition of a 1-set
        return Ok((1, 1));
    }
    for n in 2..=oracle::MAX_ORACLE_N {
        let c = oracle::brute_count_separating(n, k, proper)?;
        if !c.is_zero() {
            return Ok((n, c.to_u64().expect("small")));
        }
    }
    Err(Failure::Usage(format!(
        "no separating {k}-family on up to {} elements",
        oracle::MAX_ORACLE_N
    )))
}

fn parse_perturbation(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--perturb-stirling1 expects K,I, got {text:?}"));
    let (k, i) = text.split_once(',').ok_or_else(bad)?;
    Ok((k.trim().parse().map_err(|_| bad())?, i.trim().parse().map_err(|_| bad())?))
}

fn cmd_verify(io: &mut Io<'_>, args: VerifyArgs) -> CmdResult {
    let mut n_max = args.n_max;
    let mut k_max = args.k_max;
    if n_max > VERIFY_N_CAP {
        writeln!(io.err, "warning: --n-max {n_max} clamped to {VERIFY_N_CAP}")?;
        n_max = VERIFY_N_CAP;
    }
    if k_max > VERIFY_K_CAP {
        writeln!(io.err, "warning: --k-max {k_max} clamped to {VERIFY_K_CAP}")?;
        k_max = VERIFY_K_CAP;
    }
    if n_max > oracle::MAX_ORACLE_N {
        writeln!(
            io.err,
            "note: oracle comparisons stop at n = {}; larger n is checked formula against formula",
            oracle::MAX_ORACLE_N
        )?;
    }
    let mut counter = Counter::for_grid(n_max, k_max);
    if let Some(text) = &args.perturb_stirling1 {
        let (k, i) = parse_perturbation(text)?;
        let mut first = counter.first_table().clone();
        let old = first.get(k, i)?;
        first.set_entry(k, i, old + 1u32)?;
        counter = Counter::with_tables(first, StirlingTable::new(StirlingKind::Second, counter.bound()))?;
    }
    let report = oracle::cross_validate_with(&counter, n_max, k_max);
    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&report).expect("reports serialize");
        fs::write(path, json + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    writeln!(io.out, "{}", report.summary)?;
    for c in report.failures() {
        let detail = c.detail.as_deref().map(|d| format!(" [{d}]")).unwrap_or_default();
        writeln!(io.out, "FAIL {} ({}): {} != {}{detail}", c.name, c.params, c.left, c.right)?;
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Semantic(report.summary.clone()))
    }
}

#[derive(Debug, Serialize)]
struct TableRow {
    n: usize,
    /// `cells[j]` is the value at `k = j + 1`.
    cells: Vec<Option<String>>,
}

#[derive(Debug, Serialize)]
struct TableDocument {
    quantity: TableQuantity,
    n_max: usize,
    k_max: usize,
    rows: Vec<TableRow>,
}

fn cmd_table(io: &mut Io<'_>, args: TableArgs) -> CmdResult {
    let counter = Counter::for_grid(args.n_max, args.k_max);
    let proper = args.quantity == TableQuantity::Sigma;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for n in 2..=args.n_max {
        let mut cells = Vec::with_capacity(args.k_max);
        for k in 1..=args.k_max {
            let (v1, v2) = if proper {
                (counter.sigma_v1(n, k), counter.sigma_v2(n, k))
            } else {
                (counter.tau_v1(n, k), counter.tau_v2(n, k))
            };
            let cell = match &v1 {
                Ok(c) if c.forced => Some("0 (forced)".to_string()),
                Ok(c) => Some(c.value.to_string()),
                Err(e) => {
                    mismatches.push(format!("n={n}, k={k}: {e}"));
                    None
                }
            };
            if let (Ok(a), Ok(b)) = (&v1, &v2) {
                if a.value != b.value {
                    mismatches.push(format!("n={n}, k={k}: v1 {a} != v2 {b}"));
                }
            }
            if n <= oracle::MAX_ORACLE_N && !v1.as_ref().map_or(true, |c| c.forced) {
                let brute = oracle::brute_count_separating(n, k, proper)?;
                if let Ok(a) = &v1 {
                    if a.value != brute.value {
                        mismatches.push(format!("n={n}, k={k}: v1 {a} != brute {brute}"));
                    }
                }
            }
            cells.push(cell);
        }
        rows.push(TableRow { n, cells });
    }
    let doc = TableDocument {
        quantity: args.quantity,
        n_max: args.n_max,
        k_max: args.k_max,
        rows,
    };
    let json = serde_json::to_string_pretty(&doc).expect("tables serialize") + "\n";
    match &args.out {
        Some(path) => fs::write(path, json)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => io.out.write_all(json.as_bytes())?,
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Semantic(format!("mismatch: {}", mismatches.join("; "))))
    }
}
