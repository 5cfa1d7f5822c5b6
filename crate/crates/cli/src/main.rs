//! `loopsmith` command-line interface.
//!
//! Exit codes: 0 on success, 1 when the checked property fails (`mp` reports
//! FAILS, `experiment` has a disagreeing row), 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use loopsmith_core::{
    all_theorem_witnesses, bose_loop, bose_sts, direct_product, io, loop_to_sts, mp_criterion, mp_status_with,
    run_experiment, sts_to_loop, BoseParams, IpWitness, LoopTable, MpKind, PropertyReport, ReportDocument, ReportMode,
    ScanOptions, WitnessOrder,
};

#[derive(Parser)]
#[command(
    name = "loopsmith",
    version,
    about = "Finite loops, Steiner loops and Moufang's theorem"
)]
struct Cli {
    /// Tab-separated output for scripts.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Jobs {
    /// Worker threads for triple scans (default: all cores). 1 forces a deterministic scan.
    #[arg(long, env = "LOOPSMITH_JOBS")]
    jobs: Option<usize>,
}

impl Jobs {
    fn options(self, deterministic: bool) -> ScanOptions {
        if deterministic {
            ScanOptions::sequential()
        } else {
            ScanOptions {
                jobs: self.jobs.map(|j| j.max(1)),
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a valid loop table.
    Validate { file: PathBuf },
    /// Report commutativity, inverse property, exponent 2, Steiner and Moufang.
    Props { file: PathBuf },
    /// Compute the associator (a,b,c).
    Assoc {
        file: PathBuf,
        a: usize,
        b: usize,
        c: usize,
    },
    /// Classify a loop as MOUFANG, MP or FAILS.
    Mp {
        file: PathBuf,
        #[command(flatten)]
        jobs: Jobs,
        /// Print the failing triple and a non-associating triple in the subloop it generates.
        #[arg(long)]
        witness: bool,
        /// Sequential scan; the witness is the lexicographically first.
        #[arg(long)]
        deterministic: bool,
        /// List every failing triple instead of stopping at the first.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Build the Bose-construction Steiner loop (or triple system) for odd n >= 3.
    Bose {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the Steiner triple system instead of the loop table.
        #[arg(long)]
        sts: bool,
    },
    /// Convert between Steiner triple systems and Steiner loops.
    Convert {
        direction: Direction,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct product of two loops.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the brute-force MP classification of Bose loops with gcd(n, 7) = 1.
    ///
    /// One row per odd n in the range; the loop order is always 3n + 1, so
    /// orders are 4 (mod 6). An order such as 79 cannot arise from this
    /// construction.
    Experiment {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 51)]
        max_n: usize,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Sts2loop,
    Loop2sts,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_loop(path: &Path) -> Result<LoopTable> {
    io::parse_loop(&read(path)?).with_context(|| format!("invalid loop table {}", path.display()))
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn subject(path: &Path) -> String {
    path.display().to_string()
}

fn tuple<const N: usize>(t: [usize; N]) -> Vec<usize> {
    t.to_vec()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mode = if cli.machine {
        ReportMode::Machine
    } else {
        ReportMode::Text
    };
    let show = |r: &ReportDocument| print!("{}", io::write_report(r, mode));

    match cli.command {
        Command::Validate { file } => {
            let l = read_loop(&file)?;
            let mut r = ReportDocument::new(subject(&file));
            r.set("valid", true).set("order", l.order());
            show(&r);
        }
        Command::Props { file } => {
            let l = read_loop(&file)?;
            let p = PropertyReport::of(&l);
            let mut r = ReportDocument::new(subject(&file));
            r.set("order", l.order())
                .set("is_commutative", p.is_commutative)
                .set("has_ip", p.has_ip)
                .set("exponent_two", p.exponent_two)
                .set("is_steiner", p.is_steiner)
                .set("is_moufang", p.is_moufang);
            if let Some((a, b)) = p.commutative_witness {
                r.witness("commutative", vec![vec![a, b]]);
            }
            if let Some(w) = p.ip_witness {
                let label = match w {
                    IpWitness::TwoSidedInverse(_) => "two_sided_inverse",
                    IpWitness::LeftInverse(..) => "left_inverse_property",
                    IpWitness::RightInverse(..) => "right_inverse_property",
                };
                r.witness(label, vec![w.elements()]);
            }
            if let Some(x) = p.exponent_two_witness {
                r.witness("exponent_two", vec![vec![x]]);
            }
            if let Some(t) = p.moufang_witness {
                r.witness("moufang", vec![tuple(t)]);
            }
            show(&r);
        }
        Command::Assoc { file, a, b, c } => {
            let l = read_loop(&file)?;
            let u = l.associator(a, b, c)?;
            let mut r = ReportDocument::new(subject(&file));
            r.set("triple", format!("({a},{b},{c})")).set("associator", u);
            show(&r);
        }
        Command::Mp {
            file,
            jobs,
            witness,
            deterministic,
            all_witnesses,
        } => {
            let l = read_loop(&file)?;
            let opts = jobs.options(deterministic);
            let v = mp_status_with(&l, &opts);
            let mut r = ReportDocument::new(subject(&file));
            r.set("order", l.order()).set("mp_status", v.kind);
            if all_witnesses {
                let all = all_theorem_witnesses(&l, &opts);
                r.set("failing_triples", all.len());
                for w in all {
                    r.witness("mp", vec![tuple(w.triple), tuple(w.refuting)]);
                }
            } else if witness {
                if let Some(w) = v.witness {
                    let order = match v.witness_order {
                        WitnessOrder::Lexicographic => "lexicographic",
                        WitnessOrder::Arbitrary => "arbitrary",
                    };
                    r.set("witness_order", order);
                    r.witness("mp", vec![tuple(w.triple), tuple(w.refuting)]);
                }
            }
            show(&r);
            if v.kind == MpKind::Fails {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bose { n, out, sts } => {
            let p = BoseParams::new(n)?;
            let mut r = ReportDocument::new(format!("bose n={n}"));
            r.set("n", n)
                .set("order", p.loop_order())
                .set("criterion", mp_criterion(&p));
            let body = if sts {
                let t = bose_sts(&p);
                r.set("points", t.points()).set("blocks", t.blocks().len());
                io::write_sts(&t)
            } else {
                io::write_loop(&bose_loop(&p))
            };
            match out {
                Some(path) => {
                    emit(Some(&path), &body)?;
                    r.set("out", path.display());
                    show(&r);
                }
                None => {
                    // report as comment lines keeps stdout parseable
                    let header: String = io::write_report(&r, ReportMode::Text)
                        .lines()
                        .map(|l| format!("# {l}\n"))
                        .collect();
                    emit(None, &(header + &body))?;
                }
            }
        }
        Command::Convert { direction, input, out } => {
            let text = read(&input)?;
            let body = match direction {
                Direction::Sts2loop => {
                    let t =
                        io::parse_sts(&text).with_context(|| format!("invalid triple system {}", input.display()))?;
                    io::write_loop(&sts_to_loop(&t))
                }
                Direction::Loop2sts => {
                    let l = io::parse_loop(&text).with_context(|| format!("invalid loop table {}", input.display()))?;
                    io::write_sts(&loop_to_sts(&l)?)
                }
            };
            emit(out.as_deref(), &body)?;
        }
        Command::Product { first, second, out } => {
            let p = direct_product(&read_loop(&first)?, &read_loop(&second)?);
            emit(out.as_deref(), &io::write_loop(&p))?;
        }
        Command::Experiment { min_n, max_n, jobs } => {
            if max_n < 3 || min_n > max_n {
                bail!("empty range: --min-n {min_n} --max-n {max_n} (need odd n >= 3)");
            }
            let rows = run_experiment(min_n, max_n, &jobs.options(false));
            let header = ["n", "order", "criterion", "brute_verdict", "agree"];
            if cli.machine {
                println!("{}", header.join("\t"));
                for row in &rows {
                    println!(
                        "{}\t{}\t{}\t{}\t{}",
                        row.n, row.order, row.criterion, row.brute_verdict, row.agree
                    );
                }
            } else {
                println!(
                    "{:>4} {:>6} {:>9} {:>13} {:>5}",
                    header[0], header[1], header[2], header[3], header[4]
                );
                for row in &rows {
                    println!(
                        "{:>4} {:>6} {:>9} {:>13} {:>5}",
                        row.n, row.order, row.criterion, row.brute_verdict, row.agree
                    );
                }
            }
            if !rows.iter().all(|r| r.agree) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
