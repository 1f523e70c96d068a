use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ptensor::catalog::{family, primitive_root, FamilySpec, Params, RowId, Tables};
use ptensor::invariants::report::{render_csv, render_json, render_text, Figure, TableRow};
use ptensor::invariants::{compute_all, compute_record, InvariantRecord, Status};
use ptensor::oracle::DEFAULT_SEED;
use ptensor::pc_engine::is_prime;
use ptensor::verify::{verify, VerifyOptions, VerifyReport};
use ptensor::Error;

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "ptensor", version, about = "Tensor squares, exterior squares and related invariants of the groups of order p^5")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate a summary table from computed records.
    Table(TableArgs),
    /// Run every check: invariant records, errata coverage, capable set, oracles.
    Verify(VerifyArgs),
    /// Inspect one group.
    Group(GroupArgs),
    /// Print the errata ledger.
    Errata(ErrataArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Fig1,
    Fig2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Elements,
    Invariants,
    Presentation,
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if p <= 3 || !is_prime(p.into()) {
        return Err(format!("{p} is not a prime greater than 3"));
    }
    if p > 251 {
        return Err(format!("{p} is too large; primes up to 251 are supported"));
    }
    Ok(p)
}

#[derive(Args)]
struct DataArg {
    /// Tables file to use in place of the embedded data.
    #[arg(long, value_name = "PATH")]
    data: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: u32,
    #[arg(long, value_enum, default_value = "fig1")]
    which: Which,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print orders as numbers instead of powers of p.
    #[arg(long)]
    numeric: bool,
    #[command(flatten)]
    data: DataArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_prime, default_value = "5")]
    prime: u32,
    /// Restrict the invariant records to one family.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, env = "PTENSOR_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Only print failures and the summary.
    #[arg(long)]
    quiet: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    data: DataArg,
}

#[derive(Args)]
struct GroupArgs {
    /// Family, e.g. 9, G12k, 29a or 11,2.
    #[arg(long)]
    family: String,
    #[arg(long, value_parser = parse_prime)]
    prime: u32,
    /// Parameter as key=value with key k, a or b; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long, value_enum, default_value = "invariants")]
    show: Show,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    data: DataArg,
}

#[derive(Args)]
struct ErrataArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    data: DataArg,
}

fn load_tables(arg: &DataArg) -> Result<Tables, Error> {
    match &arg.data {
        Some(path) => Tables::from_path(path),
        None => Ok(Tables::embedded().clone()),
    }
}

/// `29a` → (29, None); `11,2` → (11, Some(2)).
fn parse_family(s: &str) -> Result<(u8, Option<u8>), Error> {
    if let Ok(row) = s.parse::<RowId>() {
        return Ok((row.family, row.subcase));
    }
    let t = s.trim().trim_start_matches(['G', 'g']).trim_end_matches(['k', 'a', 'b']);
    let n: u8 = t.parse().map_err(|_| Error::UnknownFamily(s.to_string()))?;
    family(n).ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
    Ok((n, None))
}

fn parse_params(raw: &[String], p: u32, subcase: Option<u8>) -> Result<Params, Error> {
    let mut params = Params::default();
    if subcase == Some(2) {
        params.k = i64::from((p - 1) / 2);
    }
    for kv in raw {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("parameter {kv:?} is not key=value")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("parameter {kv:?} has a non-integer value")))?;
        match k.trim() {
            "k" => params.k = v,
            "a" => params.a = v,
            "b" => params.b = v,
            other => return Err(Error::Parse(format!("unknown parameter {other:?}; use k, a or b"))),
        }
    }
    Ok(params)
}

fn cmd_table(args: &TableArgs) -> Result<ExitCode, Error> {
    let tables = load_tables(&args.data)?;
    let which = match args.which {
        Which::Fig1 => Figure::Fig1,
        Which::Fig2 => Figure::Fig2,
    };
    let records = compute_all(&tables, args.prime)?;
    let rows: Vec<TableRow> = records.iter().map(|r| TableRow::from_record(r, which, args.numeric)).collect();
    match args.format {
        Format::Text => print!("{}", render_text(&rows, which)),
        Format::Csv => print!("{}", render_csv(&rows, which)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&render_json(&rows, which, args.prime)).expect("json")
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_record(r: &InvariantRecord, quiet: bool) {
    for v in &r.verdicts {
        if quiet && v.status == Status::Pass {
            continue;
        }
        println!("{} p={} {:<36} {:<7} {}", r.row, r.prime, v.check, v.status.to_string(), v.detail);
        for e in &v.errata {
            println!("    erratum {} [{}]: {}", e.row, e.kind, e.description);
            println!("      resolution: {}", e.resolution);
        }
    }
}

fn print_verify(report: &VerifyReport, quiet: bool) {
    for r in &report.records {
        print_record(r, quiet);
    }
    let checks: usize = report.records.iter().map(|r| r.verdicts.len()).sum();
    let explained = report
        .records
        .iter()
        .flat_map(|r| &r.verdicts)
        .filter(|v| v.status == Status::Explained)
        .count();
    println!(
        "records: {} rows, {checks} checks, {explained} explained by the errata ledger",
        report.records.len()
    );
    println!(
        "errata coverage: {} undocumented conflicts, {} documented conflicts not detected",
        report.unexplained_conflicts.len(),
        report.undetected_errata.len()
    );
    let cap = &report.capability;
    println!(
        "capable rows: {} from the tables, {} from the resolved list, {} unresolved",
        cap.from_tables.len(),
        cap.from_list.len(),
        cap.unresolved.len()
    );
    if let Some(o) = &report.oracle {
        let trials: u64 = o.gamma.iter().map(|g| g.trials).sum();
        println!(
            "oracles (seed {}): tensor {} pairs, {} mismatches; gamma {} models, {trials} triples, {} failing; counting {} trials, {} mismatches",
            report.seed,
            o.tensor_pairs,
            o.tensor_mismatches.len(),
            o.gamma.len(),
            o.gamma_failures().len(),
            o.counting.trials,
            o.counting.mismatches.len()
        );
    }
    let failures = report.failures();
    if failures.is_empty() {
        println!("verify p={}: OK", report.prime);
    } else {
        println!("verify p={}: FAILED ({} problems)", report.prime, failures.len());
        for f in failures {
            println!("  {f}");
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    let tables = load_tables(&args.data)?;
    let family = args.family.as_deref().map(parse_family).transpose()?.map(|(f, _)| f);
    let opts = VerifyOptions {
        prime: args.prime,
        family,
        seed: args.seed,
        ..VerifyOptions::default()
    };
    let report = verify(&tables, &opts)?;
    if args.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    } else {
        print_verify(&report, args.quiet);
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_group(args: &GroupArgs) -> Result<ExitCode, Error> {
    let (number, subcase) = parse_family(&args.family)?;
    let spec: &FamilySpec = family(number).ok_or_else(|| Error::UnknownFamily(args.family.clone()))?;
    let params = parse_params(&args.params, args.prime, subcase)?;
    let pc = spec.build(args.prime, &params)?;
    let row = spec.row(args.prime, &params);
    if let Some(s) = subcase {
        if row.subcase != Some(s) {
            return Err(Error::BadParam {
                name: "k".into(),
                value: params.k,
                domain: format!("k = {} for {number},2 and k < {} for {number},1", (args.prime - 1) / 2, (args.prime - 1) / 2),
            });
        }
    }
    match args.show {
        Show::Presentation => {
            println!("{row} at p={} (w={}, k={}, a={}, b={})", args.prime, primitive_root(args.prime.into()), params.k, params.a, params.b);
            let rels = pc.relations();
            if rels.is_empty() {
                println!("  no non-trivial relations");
            }
            for r in rels {
                println!("  {r}");
            }
        }
        Show::Elements => {
            let all = pc.validate()?;
            println!("{row} at p={}: {} elements", args.prime, all.order());
        }
        Show::Invariants => {
            let tables = load_tables(&args.data)?;
            let record = compute_record(&tables, row, args.prime, &params)?;
            if args.format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&record).expect("json"));
            } else {
                let c = &record.computed;
                println!("{row} at p={} (k={}, a={}, b={})", args.prime, params.k, params.a, params.b);
                println!("  class            {}", c.cl);
                println!("  exponent         p^{}", c.log_exponent);
                println!("  Z(G)             {}", c.center);
                println!("  G'               {}", c.derived);
                println!("  G^ab             {}", c.abelianization);
                println!("  M(G)             {}", record.expected.multiplier);
                println!("  nabla            {}", c.nabla);
                println!("  J2               {}", c.j2);
                let none = || "not computable".to_string();
                println!("  G^G              {}", c.exterior_square.as_ref().map_or_else(none, ToString::to_string));
                println!("  GxG              {}", c.tensor_square.as_ref().map_or_else(none, ToString::to_string));
                println!("  Z^wedge          {}", record.expected.exterior_center);
                println!("  Z^tensor         {}", record.expected.tensor_center);
                println!("  capable          {}", c.capable);
                print_record(&record, true);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_errata(args: &ErrataArgs) -> Result<ExitCode, Error> {
    let tables = load_tables(&args.data)?;
    if args.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(tables.errata()).expect("json"));
        return Ok(ExitCode::SUCCESS);
    }
    for e in tables.errata() {
        let sources: Vec<String> = e.sources.iter().map(ToString::to_string).collect();
        let field = e.field.as_deref().map(|f| format!(" ({f})")).unwrap_or_default();
        println!("{} [{}]{field} {}", e.row, e.kind, sources.join(", "));
        println!("  {}", e.description);
        println!("  resolution: {}", e.resolution);
    }
    let (unexplained, undetected) = tables.errata_coverage();
    println!(
        "{} entries; {} undocumented conflicts, {} documented conflicts not detected",
        tables.errata().len(),
        unexplained.len(),
        undetected.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Group(a) => cmd_group(a),
        Command::Errata(a) => cmd_errata(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
