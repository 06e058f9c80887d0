//! `rpl`: command-line front end for rpl-core.

mod input;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rpl_core::budget::{env_override, orbit_budget};
use rpl_core::invset::{
    act_word_set, associated_monotone, decompose, enumerate_bounded_sets, enumerate_invariant_sets,
    equivalent, gamma, skeleton,
};
use rpl_core::oracle::{default_grid, run_suite, SuiteParams, SuiteReport, SUITES};
use rpl_core::pak_stanley::{render_table, sp_forward, sp_invert_sorted_with, Variant};
use rpl_core::weyl::{
    act_letter, act_word, enumerate_sommers_windows, find_fixed_point, fundamental_centroid,
    orbit_analysis,
};
use rpl_core::words::{enumerate_dyck_words, enumerate_parking_words, DyckPath};
use rpl_core::{Error, Execution, ParkingWord, WeylPoint};

const USAGE: u8 = 2;
const BUDGET: u8 = 3;

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } | Error::PeriodNotDetected { .. } => BUDGET,
            _ => USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type Run = Result<(String, u8), Failure>;

#[derive(Parser)]
#[command(
    name = "rpl",
    version,
    about = "Rational parking functions and their actions"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Alphabet size / dimension of V^m.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Word length (defaults to the length of --word).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Compact right-to-left digits (m <= 10) or a JSON letter array.
    #[arg(long, global = true, allow_hyphen_values = true)]
    word: Option<String>,
    /// JSON {"min":..,"gaps":[..]} or a gap list for a set with minimum 0.
    #[arg(long, global = true, allow_hyphen_values = true)]
    set: Option<String>,
    /// Iteration budget; overrides RPL_BUDGET.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// All (m,n)-parking words.
    EnumeratePf,
    /// All (m,n)-Dyck words.
    EnumerateDyck,
    /// Exit 0 if --word is a parking word, 1 otherwise.
    CheckPf,
    /// Apply --word once to --point.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Iterate --word from the fundamental centroid until it stops moving.
    Fixpoint,
    /// Preperiod, period and terminal point of the orbit of --point.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Invariant-set operations.
    Invset {
        #[command(subcommand)]
        verb: InvsetCmd,
    },
    /// Pak-Stanley map and its inverse.
    Sp {
        #[command(subcommand)]
        verb: SpCmd,
    },
    /// Windows of the alcoves in the Sommers region.
    Sommers {
        /// Print labels with every entry plus one.
        #[arg(long)]
        one_indexed: bool,
    },
    /// Run an oracle suite (or `all`); exit 0 iff it passes.
    Verify {
        suite: Option<String>,
        /// Grid such as `3x4,4x3`; defaults to the suite's own grid.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        sequential: bool,
        /// List suite names.
        #[arg(long)]
        list: bool,
    },
    /// SVG figures.
    Render {
        #[command(subcommand)]
        what: RenderCmd,
    },
}

#[derive(Subcommand)]
enum InvsetCmd {
    /// Apply --word to --set; prints the result and the removed elements.
    Act,
    /// k-generators (k defaults to --m).
    Generators {
        #[arg(long)]
        k: Option<usize>,
    },
    /// Merged m-generators and n-cogenerators.
    Skeleton,
    /// The monotone word shifting --set by n.
    Monotone,
    /// The Dyck path of --set.
    Gamma,
    /// Exit 0 if --set and --other have the same monotone word.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// 0-normalized invariant sets; non-coprime pairs need --bound.
    Enumerate {
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Split --set into gcd(m,n) scaled coprime parts.
    Decompose,
}

#[derive(Subcommand)]
enum SpCmd {
    /// Parking word of a window.
    Forward {
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Inversions)]
        variant: VariantArg,
    },
    /// Window of --word by the sorted-set algorithm.
    Invert {
        /// Also print the step table.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Inversions,
    Ascents,
}

#[derive(Subcommand)]
enum RenderCmd {
    /// Grid, diagonal and path of a Dyck word.
    Dyck,
    /// Labelled boxes and boundary path of --set.
    Lattice,
    /// Alcove walk of --word from --point (m = 3 only).
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Word applications to draw.
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
}

impl Opts {
    fn m(&self) -> Result<usize, Failure> {
        match self.m {
            Some(0) => Err(Failure::usage("--m must be at least 1")),
            Some(m) => Ok(m),
            None => Err(Failure::usage("--m is required")),
        }
    }

    fn n(&self) -> Result<usize, Failure> {
        match self.n {
            Some(0) => Err(Failure::usage("--n must be at least 1")),
            Some(n) => Ok(n),
            None => match &self.word {
                Some(_) => Ok(self.word()?.n()),
                None => Err(Failure::usage("--n is required")),
            },
        }
    }

    fn word(&self) -> Result<ParkingWord, Failure> {
        let text = self
            .word
            .as_deref()
            .ok_or_else(|| Failure::usage("--word is required"))?;
        let w = input::word(text, self.m()?)?;
        if let Some(n) = self.n {
            if n != w.n() {
                return Err(Failure::usage(format!(
                    "--word has {} letters, --n is {n}",
                    w.n()
                )));
            }
        }
        Ok(w)
    }

    fn set(&self) -> Result<rpl_core::InvariantSet, Failure> {
        input::set(
            self.set
                .as_deref()
                .ok_or_else(|| Failure::usage("--set is required"))?,
        )
    }

    fn budget(&self, m: usize, n: usize) -> usize {
        self.budget
            .or_else(env_override)
            .unwrap_or_else(|| orbit_budget(m, n))
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn ok(s: String) -> Run {
    Ok((s, 0))
}

fn verdict(o: &Opts, value: bool, body: Value) -> Run {
    let text = if o.json() {
        pretty(&body)
    } else {
        format!("{value}\n")
    };
    Ok((text, if value { 0 } else { 1 }))
}

fn run(cli: &Cli) -> Run {
    let o = &cli.opts;
    match &cli.cmd {
        Cmd::EnumeratePf => {
            let words = enumerate_parking_words(o.m()?, o.n()?)?;
            ok(if o.json() {
                pretty(&json!(words))
            } else {
                lines(words.iter().map(|w| w.render()))
            })
        }
        Cmd::EnumerateDyck => {
            let paths = enumerate_dyck_words(o.m()?, o.n()?)?;
            ok(if o.json() {
                pretty(&json!(paths))
            } else {
                lines(paths.iter().map(|p| p.to_string()))
            })
        }
        Cmd::CheckPf => {
            let w = o.word()?;
            let p = w.is_parking();
            verdict(o, p, json!({ "word": w, "parking": p }))
        }
        Cmd::Act { point } => {
            let w = o.word()?;
            let x = input::point(point, o.m()?)?;
            let (y, trace) = act_word(&x, &w)?;
            if o.json() {
                return ok(pretty(&json!({ "point": y, "trace": trace })));
            }
            let mut s = String::new();
            let mut cur = x.clone();
            for &letter in w.letters() {
                let (next, sigma) = act_letter(&cur, letter)?;
                s += &format!("{letter}: {cur} -> {next}  sigma {:?}\n", sigma.images());
                cur = next;
            }
            s += &format!("result {y}\nsigma {:?}\n", trace.sigma.images());
            ok(s)
        }
        Cmd::Fixpoint => {
            let w = o.word()?;
            let r = find_fixed_point(&w, o.budget(w.m(), w.n()));
            let body = json!({
                "point": r.terminal,
                "fixed": r.is_fixed_point(),
                "preperiod": r.preperiod,
                "period": r.period,
                "budget_used": r.budget_used,
            });
            match r.period {
                Some(1) => ok(if o.json() {
                    pretty(&body)
                } else {
                    format!("{}\n", r.terminal)
                }),
                Some(p) => Ok((
                    if o.json() {
                        pretty(&body)
                    } else {
                        format!("no fixed point: the orbit has period {p}\n")
                    },
                    1,
                )),
                None => Err(Failure {
                    code: BUDGET,
                    msg: format!("no fixed point within {} word applications", r.budget_used),
                }),
            }
        }
        Cmd::Orbit { point } => {
            let w = o.word()?;
            let x = match point {
                Some(p) => input::point(p, w.m())?,
                None => fundamental_centroid(w.m()),
            };
            let r = orbit_analysis(&w, &x, o.budget(w.m(), w.n()))?;
            ok(if o.json() {
                pretty(&json!(r))
            } else {
                format!(
                    "preperiod {}\nperiod {}\nterminal {}\n",
                    r.preperiod,
                    r.period.map_or("none".into(), |p| p.to_string()),
                    r.terminal
                )
            })
        }
        Cmd::Invset { verb } => invset(o, verb),
        Cmd::Sp { verb } => sp(o, verb),
        Cmd::Sommers { one_indexed } => {
            let ws = enumerate_sommers_windows(o.m()?, o.n()?)?;
            if o.json() {
                return ok(pretty(&json!(ws)));
            }
            ok(lines(ws.iter().map(|w| {
                if *one_indexed {
                    format!("{:?}", w.to_one_indexed()).replace(' ', "")
                } else {
                    w.to_string()
                }
            })))
        }
        Cmd::Verify {
            suite,
            grid,
            samples,
            sequential,
            list,
        } => {
            if *list {
                return ok(lines(SUITES.iter().map(|(n, d)| format!("{n:<24} {d}"))));
            }
            let name = suite
                .as_deref()
                .ok_or_else(|| Failure::usage("suite name required (see --list)"))?;
            let names: Vec<&str> = if name == "all" {
                SUITES.iter().map(|(n, _)| *n).collect()
            } else {
                vec![name]
            };
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let mut reports = Vec::new();
            for name in names {
                let g = match grid {
                    Some(g) => input::grid(g)?,
                    None => default_grid(name),
                };
                let mut params = SuiteParams::new(g).with_seed(o.seed);
                if let Some(s) = samples {
                    params = params.with_samples(*s);
                }
                reports.push(run_suite(name, &params, exec)?);
            }
            let passed = reports.iter().all(SuiteReport::passed);
            let text = if o.json() {
                let v: Vec<Value> = reports.iter().map(SuiteReport::to_json_timed).collect();
                pretty(&if v.len() == 1 {
                    v[0].clone()
                } else {
                    Value::Array(v)
                })
            } else {
                lines(reports.iter().map(summary))
            };
            Ok((text, if passed { 0 } else { 1 }))
        }
        Cmd::Render { what } => render(o, what),
    }
}

fn summary(r: &SuiteReport) -> String {
    let mut s = format!(
        "{} {}: {} cases, {} failures ({:.2?})",
        if r.passed() { "PASS" } else { "FAIL" },
        r.name,
        r.cases,
        r.failures.len(),
        r.wall_time
    );
    for (k, v) in &r.summary {
        s += &format!("\n  {k}: {v}");
    }
    for f in r.failures.iter().take(5) {
        s += &format!("\n  case {}: {} {}", f.case, f.reason, f.input);
    }
    s
}

fn invset(o: &Opts, verb: &InvsetCmd) -> Run {
    match verb {
        InvsetCmd::Act => {
            let (s, w) = (o.set()?, o.word()?);
            let (out, removed) = act_word_set(&s, &w)?;
            ok(if o.json() {
                pretty(&json!({ "set": out, "removed": removed }))
            } else {
                format!(
                    "{out}\nremoved {removed:?}\nshifted by n: {}\n",
                    out == s.shifted(w.n() as i64)
                )
            })
        }
        InvsetCmd::Generators { k } => {
            let k = match k {
                Some(k) => *k,
                None => o.m()?,
            };
            let g = o.set()?.generators(k)?;
            ok(if o.json() {
                pretty(&json!(g))
            } else {
                format!("{g:?}\n")
            })
        }
        InvsetCmd::Skeleton => {
            let sk = skeleton(&o.set()?, o.m()?, o.n()?)?;
            ok(if o.json() {
                pretty(&json!(sk))
            } else {
                sk.render() + "\n"
            })
        }
        InvsetCmd::Monotone => {
            let w = associated_monotone(&o.set()?, o.m()?, o.n()?)?;
            ok(if o.json() {
                pretty(&json!(w))
            } else {
                format!("{w}\n")
            })
        }
        InvsetCmd::Gamma => {
            let p = gamma(&o.set()?, o.m()?, o.n()?)?;
            ok(if o.json() {
                pretty(&json!(p))
            } else {
                format!("{p}\n")
            })
        }
        InvsetCmd::Equiv { other } => {
            let (a, b) = (o.set()?, input::set(other)?);
            let eq = equivalent(&a, &b, o.m()?, o.n()?)?;
            verdict(o, eq, json!({ "equivalent": eq }))
        }
        InvsetCmd::Enumerate { bound } => {
            let (m, n) = (o.m()?, o.n()?);
            let sets = match bound {
                Some(b) => enumerate_bounded_sets(m, n, *b)?,
                None => enumerate_invariant_sets(m, n)?,
            };
            ok(if o.json() {
                pretty(&json!(sets))
            } else {
                lines(sets.iter().map(|s| s.to_string()))
            })
        }
        InvsetCmd::Decompose => {
            let d = decompose(&o.set()?, o.m()?, o.n()?)?;
            if o.json() {
                return ok(pretty(&json!(d)));
            }
            let mut s = format!("d = {}\n", d.d);
            for (p, x) in d.parts.iter().zip(&d.shifts) {
                s += &format!("{}·({p}) shifted by {x}\n", d.d);
            }
            s += &format!("offset {}\n", d.offset);
            ok(s)
        }
    }
}

fn sp(o: &Opts, verb: &SpCmd) -> Run {
    match verb {
        SpCmd::Forward { window, variant } => {
            let w = input::window(window)?;
            let v = match variant {
                VariantArg::Inversions => Variant::Inversions,
                VariantArg::Ascents => Variant::Ascents,
            };
            let p = sp_forward(&w, o.m()?, v)?;
            ok(if o.json() {
                pretty(&json!(p))
            } else {
                format!("{p}\n")
            })
        }
        SpCmd::Invert { table } => {
            let p = o.word()?;
            let budget = o.budget(p.m(), p.n());
            let inv = sp_invert_sorted_with(&p, budget)?;
            if o.json() {
                return ok(pretty(&json!({
                    "V": inv.v,
                    "N": inv.period_start,
                    "window": inv.window.window(),
                })));
            }
            let mut s = format!("window {}\nN {}\n", inv.window, inv.period_start);
            if *table {
                s += &render_table(&p, &inv);
            }
            ok(s)
        }
    }
}

fn render(o: &Opts, what: &RenderCmd) -> Run {
    if o.format == Format::Json {
        return Err(Failure::usage("render produces SVG only"));
    }
    match what {
        RenderCmd::Dyck => {
            let w = o.word()?;
            let p = DyckPath::from_word(w)?;
            ok(svg::dyck(&p))
        }
        RenderCmd::Lattice => ok(svg::lattice(&o.set()?, o.m()?, o.n()?)?),
        RenderCmd::Orbit { point, steps } => {
            let m = o.m()?;
            if m != 3 {
                return Err(Failure::usage(format!(
                    "orbit rendering needs m = 3 (got {m})"
                )));
            }
            let w = o.word()?;
            let mut x: WeylPoint = match point {
                Some(p) => input::point(p, m)?,
                None => fundamental_centroid(m),
            };
            let mut points = vec![x.clone()];
            for _ in 0..if w.n() == 0 { 0 } else { *steps } {
                for &letter in w.letters() {
                    x = act_letter(&x, letter)?.0;
                    points.push(x.clone());
                }
            }
            ok(svg::orbit(&points, m))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            if let Some(path) = &cli.opts.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("rpl: cannot write {}: {e}", path.display());
                    return ExitCode::from(USAGE);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("rpl: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
