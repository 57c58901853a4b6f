//! Command-line front end: enumeration, location, the classical formulas,
//! and the verification suites. All arithmetic lives in the library; this
//! binary only parses flags and renders values.
//!
//! Exit codes: 0 success, 1 verification witness found, 2 usage error,
//! 3 resource-cap breach.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cwforest::forest::{self, ForestError, DEFAULT_DEPTH_CAP};
use cwforest::matrix::FREENESS_MAXLEN_CAP;
use cwforest::verify::{self, VerifyError, HEIGHT_CAP};
use cwforest::{classical, Rational, VerificationReport};

const EXIT_WITNESS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "cwforest", version, about = "Forests of rational-number trees, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Params {
    /// Left-generator parameter u of L_u
    #[arg(long)]
    u: u64,
    /// Right-generator parameter v of R_v
    #[arg(long)]
    v: u64,
}

#[derive(Args)]
struct CapOverride {
    /// Raise a resource cap; values beyond the built-in default also
    /// require --allow-unbounded
    #[arg(long)]
    max_depth: Option<u32>,
    #[arg(long)]
    max_height: Option<u64>,
    #[arg(long)]
    max_wordlen: Option<usize>,
    /// Acknowledge a cap override beyond the built-in defaults
    #[arg(long)]
    allow_unbounded: bool,
}

impl CapOverride {
    fn depth_cap(&self) -> Result<u32, String> {
        let env_cap = std::env::var("CWFOREST_MAX_DEPTH")
            .ok()
            .and_then(|s| s.parse::<u32>().ok());
        let cap = self.max_depth.or(env_cap).unwrap_or(DEFAULT_DEPTH_CAP);
        if cap > DEFAULT_DEPTH_CAP && self.max_depth.is_some() && !self.allow_unbounded {
            return Err(format!(
                "--max-depth {cap} exceeds the default {DEFAULT_DEPTH_CAP}; pass --allow-unbounded to confirm"
            ));
        }
        Ok(cap)
    }

    fn height_cap(&self) -> Result<u64, String> {
        let cap = self.max_height.unwrap_or(HEIGHT_CAP);
        if cap > HEIGHT_CAP && !self.allow_unbounded {
            return Err(format!(
                "--max-height {cap} exceeds the default {HEIGHT_CAP}; pass --allow-unbounded to confirm"
            ));
        }
        Ok(cap)
    }

    fn wordlen_cap(&self) -> Result<usize, String> {
        let cap = self.max_wordlen.unwrap_or(FREENESS_MAXLEN_CAP);
        if cap > FREENESS_MAXLEN_CAP && !self.allow_unbounded {
            return Err(format!(
                "--max-wordlen {cap} exceeds the default {FREENESS_MAXLEN_CAP}; pass --allow-unbounded to confirm"
            ));
        }
        Ok(cap)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print row n of the (u,v) tree rooted at --root, left to right
    Row {
        #[command(flatten)]
        params: Params,
        /// Root of the tree, as "a/b" or "a"
        #[arg(long)]
        root: String,
        /// Row number (row n holds 2^n entries)
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        caps: CapOverride,
    },
    /// Locate a rational: its orphan root, path word, and address
    Locate {
        #[command(flatten)]
        params: Params,
        /// The rational to locate, as "a/b" or "a"
        q: String,
    },
    /// Run a verification suite and emit a JSON report
    Verify {
        #[command(subcommand)]
        claim: VerifyCommand,
    },
    /// Continued fraction of q and its Calkin-Wilf row number
    Cf { q: String },
    /// Newman successor of q in its Calkin-Wilf row
    Successor { q: String },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Mirror products across the (u,v) tree at z and the (v,u) tree at 1/z
    Symmetry {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        root: String,
        /// Check all rows up to this depth
        #[arg(long)]
        depth: u32,
        #[command(flatten)]
        caps: CapOverride,
    },
    /// Decompose-and-replay sweep over all reduced rationals up to a height
    Partition {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        height: u64,
        #[command(flatten)]
        caps: CapOverride,
    },
    /// Pairwise distinctness of all generator words up to a length
    Freeness {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        maxlen: usize,
        #[command(flatten)]
        caps: CapOverride,
    },
    /// Child-range inequalities L_u(w) < 1/u and R_v(w) > v
    Range {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        height: u64,
        #[command(flatten)]
        caps: CapOverride,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("cwforest: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn cap_error(msg: &str) -> ExitCode {
    eprintln!("cwforest: {msg}");
    ExitCode::from(EXIT_CAP)
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    text.parse::<Rational>().map_err(|e| e.to_string())
}

fn render_row(entries: &[Rational], format: Format) -> String {
    match format {
        Format::Text => entries
            .iter()
            .map(Rational::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        Format::Json => {
            let items: Vec<String> = entries
                .iter()
                .map(|q| format!("{{\"n\":{},\"d\":{}}}", q.numer(), q.denom()))
                .collect();
            format!("[{}]", items.join(","))
        }
        Format::Csv => {
            let mut out = String::from("index,numerator,denominator");
            for (i, q) in entries.iter().enumerate() {
                out.push_str(&format!("\n{},{},{}", i + 1, q.numer(), q.denom()));
            }
            out
        }
    }
}

fn run_verify(claim: VerifyCommand) -> ExitCode {
    let outcome: Result<VerificationReport, VerifyError> = match claim {
        VerifyCommand::Symmetry {
            params,
            root,
            depth,
            caps,
        } => {
            let z = match parse_rational(&root) {
                Ok(z) => z,
                Err(e) => return usage_error(&e),
            };
            let cap = match caps.depth_cap() {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            verify::verify_symmetry_capped(params.u, params.v, &z, depth, cap)
        }
        VerifyCommand::Partition {
            params,
            height,
            caps,
        } => match caps.height_cap() {
            Ok(cap) => verify::verify_partition_capped(params.u, params.v, height, cap),
            Err(e) => return usage_error(&e),
        },
        VerifyCommand::Freeness {
            params,
            maxlen,
            caps,
        } => match caps.wordlen_cap() {
            Ok(cap) => verify::verify_freeness_capped(params.u, params.v, maxlen, cap),
            Err(e) => return usage_error(&e),
        },
        VerifyCommand::Range {
            params,
            height,
            caps,
        } => match caps.height_cap() {
            Ok(cap) => verify::verify_range_capped(params.u, params.v, height, cap),
            Err(e) => return usage_error(&e),
        },
    };
    match outcome {
        Ok(report) => {
            println!("{}", serde_json::to_string(&report).unwrap());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_WITNESS)
            }
        }
        Err(VerifyError::HeightCap(bound, cap)) => {
            cap_error(&format!("height bound {bound} exceeds the cap {cap}"))
        }
        Err(VerifyError::Forest(ForestError::DepthCap(n, cap))) => {
            cap_error(&format!("depth {n} exceeds the cap {cap}"))
        }
        Err(VerifyError::Matrix(e)) => cap_error(&e.to_string()),
        Err(e) => usage_error(&e.to_string()),
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Row {
            params,
            root,
            n,
            format,
            caps,
        } => {
            let cfg = match forest::ForestConfig::new(params.u, params.v) {
                Ok(c) => c,
                Err(e) => return usage_error(&e.to_string()),
            };
            let root = match parse_rational(&root) {
                Ok(r) => r,
                Err(e) => return usage_error(&e),
            };
            let cap = match caps.depth_cap() {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            match forest::row_capped(cfg, &root, n, cap) {
                Ok(entries) => {
                    println!("{}", render_row(&entries, format));
                    ExitCode::SUCCESS
                }
                Err(e) => cap_error(&e.to_string()),
            }
        }
        Command::Locate { params, q } => {
            let cfg = match forest::ForestConfig::new(params.u, params.v) {
                Ok(c) => c,
                Err(e) => return usage_error(&e.to_string()),
            };
            let q = match parse_rational(&q) {
                Ok(q) => q,
                Err(e) => return usage_error(&e),
            };
            let (root, word, addr) = forest::decompose(cfg, &q);
            println!(
                "root={root} path={word} row={} index={}",
                addr.row, addr.index
            );
            ExitCode::SUCCESS
        }
        Command::Verify { claim } => run_verify(claim),
        Command::Cf { q } => {
            let q = match parse_rational(&q) {
                Ok(q) => q,
                Err(e) => return usage_error(&e),
            };
            let coeffs = q
                .continued_fraction()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            println!("[{coeffs}] row={}", classical::cw_row_of(&q));
            ExitCode::SUCCESS
        }
        Command::Successor { q } => {
            let q = match parse_rational(&q) {
                Ok(q) => q,
                Err(e) => return usage_error(&e),
            };
            println!("{}", classical::newman_successor(&q));
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
