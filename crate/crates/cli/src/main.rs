use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plgen::poly::MonomialOrder;
use plgen_cli::report::to_text;
use plgen_cli::{golden_diff, parse, prepare, run, ArrangementDocument, Command, FamilySpec, InputError, Options, Outcome};

const EXIT_GOLDEN_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TIME_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "plgen", version, about = "Vanishing ideals of subspace arrangements and pl-generation checks")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Monomial order for Gröbner bases and printing: grevlex, lex or elimK.
    #[arg(long, global = true, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,
    /// Largest degree of the Hilbert function rows.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Seconds before the computation is abandoned; 0 disables the limit.
    #[arg(long, global = true, default_value_t = 300)]
    time_limit: u64,
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Compare the canonical JSON report with this file instead of printing it.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Intersection lattice statistics and the arrangement's antichain.
    Lattice(FileArg),
    /// Blocker and double blocker of the antichain.
    Blocker(FileArg),
    /// The blocker ideal B.
    Bideal(FileArg),
    /// The product ideal F over the enlarged host.
    Fideal(FileArg),
    /// The vanishing ideal I_A.
    Ideal(FileArg),
    /// Decide whether I_A is generated by products of linear forms.
    Plcheck(FileArg),
    /// Instantiate a built-in family, optionally running a command on it.
    Family(FamilyArgs),
}

#[derive(Args)]
struct FileArg {
    /// Arrangement document (TOML); `-` reads standard input.
    file: PathBuf,
}

#[derive(Args)]
struct FamilyArgs {
    /// braid, orbit, blocks, hook, polygraph, coordinate, p2points, twolines or skewlines.
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    r1: Option<usize>,
    #[arg(long)]
    r2: Option<usize>,
    /// Number of blocks, for the `blocks` family.
    #[arg(long)]
    blocks: Option<usize>,
    /// A partition shape such as `3,2,1`; repeat for unions of orbits.
    #[arg(long, value_parser = parse_list::<usize>)]
    shape: Vec<Vec<usize>>,
    /// A named point configuration for `p2points`.
    #[arg(long)]
    preset: Option<String>,
    /// Integer homogeneous coordinates such as `1,2,3`; repeatable.
    #[arg(long, value_parser = parse_list::<i64>, allow_hyphen_values = true)]
    point: Vec<Vec<i64>>,
    /// A facet such as `1,2` of a complex on 1..=n; repeatable.
    #[arg(long, value_parser = parse_list::<usize>)]
    facet: Vec<Vec<usize>>,
    /// Command to run on the instantiated family.
    #[arg(long, value_enum)]
    run: Option<Command>,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        _ => s
            .strip_prefix("elim")
            .and_then(|k| k.parse().ok())
            .map(|block| MonomialOrder::Elimination { block })
            .ok_or_else(|| format!("unknown order `{s}`; use grevlex, lex or elimK")),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("cannot parse `{x}` in `{s}`")))
        .collect()
}

fn read_document(path: &Path) -> Result<ArrangementDocument, InputError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError::Usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError::Usage(format!("{}: {e}", path.display())))?
    };
    parse(&text).map_err(|e| match e {
        InputError::Document { line, message } => InputError::Usage(format!("{}:{line}: {message}", path.display())),
        other => other,
    })
}

fn family_spec(args: FamilyArgs) -> FamilySpec {
    FamilySpec {
        name: args.name,
        n: args.n,
        m: args.m,
        r: args.r,
        r1: args.r1,
        r2: args.r2,
        blocks: args.blocks,
        shape: None,
        shapes: args.shape,
        preset: args.preset,
        points: args.point,
        facets: args.facet,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, doc) = match cli.command {
        Cmd::Lattice(f) => (Some(Command::Lattice), read_document(&f.file)),
        Cmd::Blocker(f) => (Some(Command::Blocker), read_document(&f.file)),
        Cmd::Bideal(f) => (Some(Command::Bideal), read_document(&f.file)),
        Cmd::Fideal(f) => (Some(Command::Fideal), read_document(&f.file)),
        Cmd::Ideal(f) => (Some(Command::Ideal), read_document(&f.file)),
        Cmd::Plcheck(f) => (Some(Command::Plcheck), read_document(&f.file)),
        Cmd::Family(args) => (args.run, Ok(ArrangementDocument::Family(family_spec(args)))),
    };
    let subject = match doc.and_then(|d| prepare(&d)) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let options = Options {
        order: cli.order,
        max_degree: cli.max_degree,
        time_limit: (cli.time_limit > 0).then(|| Duration::from_secs(cli.time_limit)),
    };
    let (report, outcome) = run(command, &subject, &options);
    let json = report.to_json();

    if let Some(path) = &cli.golden {
        if let Err(e) = golden_diff(&json, path) {
            eprintln!("{e}");
            return ExitCode::from(EXIT_GOLDEN_MISMATCH);
        }
    } else {
        match cli.emit {
            Emit::Json => println!("{}", serde_json::to_string_pretty(&json).expect("JSON values serialize")),
            Emit::Text => print!("{}", to_text(&json)),
        }
    }

    match outcome {
        Outcome::Complete => ExitCode::SUCCESS,
        Outcome::TimedOut => {
            eprintln!("error: time limit exceeded; the report is incomplete");
            ExitCode::from(EXIT_TIME_LIMIT)
        }
        Outcome::Failed(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
