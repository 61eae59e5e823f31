use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weak_syt::hopf::{verify_interval_isomorphism, verify_product_interval};
use weak_syt::verify::{self, CoverScope, Family, Mode};
use weak_syt::weakorder::{check_monotone_descent, check_monotone_shape};
use weak_syt::{
    build_poset, knuth_class, plactic_product, rsk, Cell, Permutation, SkewTableau,
    SlideDirection, Tableau, VerificationReport,
};

#[derive(Parser)]
#[command(name = "weak-syt", version, about = "Weak order on standard Young tableaux")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for poset builds and sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include elapsed times in verification output.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion and recording tableaux of a permutation.
    Rsk { word: Permutation },
    /// All permutations whose insertion tableau is the given one.
    Class { tableau: Tableau },
    /// The weak order on SYT_n.
    Poset {
        #[arg(long)]
        n: usize,
    },
    /// Run an exhaustive check.
    Verify(VerifyArgs),
    /// Product of two plactic classes, by shuffling.
    Product { left: Tableau, right: Tableau },
    /// The closed interval between two tableaux of the same size.
    Interval { bottom: Tableau, top: Tableau },
    /// Restriction of a tableau to the entries i..=j, rectified and lowered.
    Restrict { tableau: Tableau, i: usize, j: usize },
    /// Evacuation.
    Evac { tableau: Tableau },
    /// Transpose.
    Transpose { tableau: Tableau },
    /// One jeu de taquin slide, or rectification when no hole is given.
    Jdt {
        skew: SkewTableau,
        /// Hole as "row,col".
        #[arg(long)]
        hole: Option<Cell>,
        #[arg(long, default_value = "forward")]
        dir: SlideDirection,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Size, or an inclusive range "a..b".
    #[arg(long)]
    n: Option<Span>,
    /// Inner tableau size for hook-eta; left factor size for interval-iso.
    #[arg(long)]
    k: Option<Span>,
    #[arg(long, default_value = "cover")]
    mode: Mode,
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, default_value = "induced")]
    cover_scope: CoverScope,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    InnerTranslation,
    InnerTranslationFails,
    InnerTranslationScan,
    SpecialCases,
    HookEta,
    Structural,
    Monotone,
    IntervalIso,
    ProductInterval,
    UpperSegmentLemma,
}

/// `a` or `a..b`, inclusive.
#[derive(Clone, Copy, Debug)]
struct Span {
    lo: usize,
    hi: usize,
}

impl Span {
    fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str, at: usize| {
            t.parse::<usize>()
                .map_err(|_| format!("parse error at position {at}: expected a number"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (num(a, 1)?, num(b, a.len() + 3)?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(Span { lo, hi })
            }
            None => num(s, 1).map(|v| Span { lo: v, hi: v }),
        }
    }
}

/// Failure of a command after parsing: exit 2 for bad input, 1 for a
/// failed check.
enum Failure {
    Usage(String),
    Violation(String),
}

impl From<weak_syt::Error> for Failure {
    fn from(e: weak_syt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || execute(&cli);
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run),
            Err(e) => Err(Failure::Usage(format!("cannot start {jobs} workers: {e}"))),
        },
        None => run(),
    };
    let (output, code) = match result {
        Ok(output) => (output, ExitCode::SUCCESS),
        Err(Failure::Violation(output)) => (output, ExitCode::from(1)),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{output}"),
    }
    code
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        Err(Failure::Usage("dot output is only available for poset".into()))
    } else {
        Ok(())
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Rsk { word } => {
            no_dot(cli)?;
            let (i, r) = rsk(word);
            Ok(if json {
                pretty(&json!({"word": word.to_string(), "insertion": i.to_string(), "recording": r.to_string()}))
            } else {
                format!("I = {i}\nR = {r}\n")
            })
        }
        Command::Class { tableau } => {
            no_dot(cli)?;
            let class = knuth_class(tableau);
            let words: Vec<String> = class.words().iter().map(|w| w.to_string()).collect();
            Ok(if json {
                pretty(&json!({"tableau": tableau.to_string(), "words": words}))
            } else {
                let mut out = format!("class of {tableau}: {} words\n", words.len());
                for w in words {
                    let _ = writeln!(out, "{w}");
                }
                out
            })
        }
        Command::Poset { n } => {
            let p = build_poset(*n)?;
            Ok(match cli.format {
                Format::Text => p.to_text(),
                Format::Json => pretty(&p.to_json()),
                Format::Dot => p.to_dot(),
            })
        }
        Command::Verify(args) => {
            no_dot(cli)?;
            let reports = run_check(args)?;
            let passed = reports.iter().all(VerificationReport::passed);
            let output = if json {
                pretty(&Value::Array(
                    reports.iter().map(|r| r.to_json(cli.timing)).collect(),
                ))
            } else {
                reports.iter().map(|r| r.to_text(cli.timing)).collect()
            };
            if passed {
                Ok(output)
            } else {
                Err(Failure::Violation(output))
            }
        }
        Command::Product { left, right } => {
            no_dot(cli)?;
            let sum = plactic_product(left, right)?;
            Ok(if json { pretty(&sum.to_json()) } else { sum.to_string() })
        }
        Command::Interval { bottom, top } => {
            no_dot(cli)?;
            if bottom.n() != top.n() {
                return Err(weak_syt::Error::SizeMismatch {
                    left: bottom.n(),
                    right: top.n(),
                }
                .into());
            }
            let p = build_poset(bottom.n())?;
            let iv = p.interval(bottom, top)?;
            let members: Vec<String> = iv.members.iter().map(|&m| p.node(m).to_string()).collect();
            let covers: Vec<[String; 2]> = iv
                .covers
                .iter()
                .map(|&(a, b)| [p.node(a).to_string(), p.node(b).to_string()])
                .collect();
            Ok(if json {
                pretty(&json!({
                    "bottom": bottom.to_string(),
                    "top": top.to_string(),
                    "members": members,
                    "covers": covers,
                }))
            } else {
                let mut out = format!("[{bottom} ; {top}]: {} members\n", members.len());
                for m in &members {
                    let _ = writeln!(out, "{m}");
                }
                for [a, b] in &covers {
                    let _ = writeln!(out, "{a} < {b}");
                }
                out
            })
        }
        Command::Restrict { tableau, i, j } => {
            no_dot(cli)?;
            single(json, "restriction", &tableau.restrict(*i, *j)?)
        }
        Command::Evac { tableau } => {
            no_dot(cli)?;
            single(json, "evacuation", &tableau.evacuate())
        }
        Command::Transpose { tableau } => {
            no_dot(cli)?;
            single(json, "transpose", &tableau.transpose())
        }
        Command::Jdt { skew, hole, dir } => {
            no_dot(cli)?;
            match hole {
                Some(cell) => {
                    let slid = skew.slide(*cell, *dir)?;
                    Ok(if json {
                        pretty(&json!({"skew": slid.to_string()}))
                    } else {
                        format!("{slid}\n")
                    })
                }
                None => single(json, "rectification", &skew.rectify()),
            }
        }
    }
}

fn single(json: bool, key: &str, t: &Tableau) -> Result<String, Failure> {
    Ok(if json {
        pretty(&json!({ key: t.to_string() }))
    } else {
        format!("{t}\n")
    })
}

fn run_check(args: &VerifyArgs) -> Result<Vec<VerificationReport>, Failure> {
    let n_or = |lo, hi| args.n.unwrap_or(Span { lo, hi });
    let mut reports = Vec::new();
    match args.check {
        Check::InnerTranslation => {
            for n in n_or(2, 7).iter() {
                let p = poset_for_sweep(n, 2, verify::MAX_SWEEP_N)?;
                reports.push(verify::verify_inner_tableau_translation_with(
                    &p,
                    args.mode,
                    args.cover_scope,
                ));
            }
        }
        Check::InnerTranslationFails => reports.push(verify::verify_inner_translation_fails()),
        Check::InnerTranslationScan => {
            for n in n_or(6, 6).iter() {
                reports.push(verify::scan_inner_translation(&build_poset(n)?));
            }
        }
        Check::SpecialCases => {
            let families = match args.family {
                Some(f) => vec![f],
                None => vec![Family::TwoRow, Family::TwoCol, Family::Hook],
            };
            for n in n_or(2, 7).iter() {
                let p = poset_for_sweep(n, 2, 8)?;
                for &f in &families {
                    reports.push(verify::verify_special_cases_with(&p, f, args.cover_scope));
                }
            }
        }
        Check::HookEta => {
            for k in args.k.unwrap_or(Span { lo: 5, hi: 8 }).iter() {
                reports.push(verify::verify_hook_eta(k)?);
            }
        }
        Check::Structural => {
            for n in n_or(5, 5).iter() {
                reports.extend(verify::verify_structural(n)?);
            }
        }
        Check::Monotone => {
            for n in n_or(2, 7).iter() {
                let p = build_poset(n)?;
                reports.push(check_monotone_descent(&p));
                reports.push(check_monotone_shape(&p));
            }
        }
        Check::IntervalIso => {
            for n in n_or(2, 6).iter() {
                let ks: Vec<usize> = match args.k {
                    Some(span) => span.iter().filter(|&k| k >= 1 && k < n).collect(),
                    None => (1..n).collect(),
                };
                for k in ks {
                    reports.push(verify_interval_isomorphism(k, n - k)?);
                }
            }
        }
        Check::ProductInterval => {
            reports.push(verify_product_interval(n_or(7, 7).hi)?);
        }
        Check::UpperSegmentLemma => {
            for n in n_or(6, 6).iter() {
                reports.push(verify::verify_upper_segment_lemma(n)?);
            }
        }
    }
    Ok(reports)
}

fn poset_for_sweep(n: usize, min: usize, max: usize) -> Result<weak_syt::TableauPoset, Failure> {
    if !(min..=max).contains(&n) {
        return Err(weak_syt::Error::SizeOutOfRange { n, min, max }.into());
    }
    Ok(build_poset(n)?)
}
