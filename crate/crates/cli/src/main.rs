use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semiorder_core::classify::{classify, critical_pairs, traces};
use semiorder_core::clifford::{
    probe_final_segment_normality, CliffordElement, FinalSegment, ProbeOutcome,
};
use semiorder_core::dimension::{brute_force_dimension, DimensionResult};
use semiorder_core::group::analysis::{
    cover_check, inc0, validate_cone, window_poset, TransferStatus,
};
use semiorder_core::group::parse::parse_window;
use semiorder_core::group::spec::format_element;
use semiorder_core::group::{
    parse_group, pattern_transfer_check, preceq_battery, subgroups_kai, verify_threshold,
    window_subgroups, BatteryVerdict, GroupOrderSpec, Window,
};
use semiorder_core::poset::FinitePoset;
use semiorder_core::represent::{
    integer_keys, interval_representation, realizer_dim3_threshold, threshold_poset,
    unit_representation,
};
use semiorder_core::suite::{run_suite, SuiteConfig};
use semiorder_core::text::{hasse_dot, parse_poset};
use semiorder_core::Rational;
use std::cmp::Ordering;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "semiorder",
    version,
    about = "Interval orders, semiorders and threshold orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec file.
    file: PathBuf,
    /// Window such as `-5..5 x -5..5`; overrides the file.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    /// Distance from the window boundary that counts as interior.
    #[arg(long)]
    margin: Option<i64>,
    /// Write the window's Hasse diagram here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize chains, weak, interval, semi- and threshold orders.
    Classify {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the pred and succ trace relations.
    Traces { file: PathBuf },
    /// List critical pairs.
    Critical { file: PathBuf },
    /// Interval and unit interval representations.
    Represent { file: PathBuf },
    /// Order dimension by exhaustive search.
    Dimension {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Three linear orders realizing `x < y iff y - x >= alpha` on an integer range.
    Realizer3 {
        #[arg(long, default_value_t = 1)]
        alpha: i64,
        /// Key range such as `-4..4`; defaults to `[-4 alpha, 4 alpha]`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Cone, semiorder and threshold checks on a group window.
    GroupCheck(GroupArgs),
    /// Elements of the window incomparable to 0.
    GroupInc0(GroupArgs),
    /// The subgroups K, A and I.
    GroupKai(GroupArgs),
    /// Co-occurrence of 1+n and (q+1)+p in a group window.
    GroupTransfer {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Try to refute `P ⪯ Q` with the witness-group battery.
    Preceq { p: PathBuf, q: PathBuf },
    /// Normal form of a word such as `g(1) g(0)^-1`.
    CliffordReduce { word: String },
    /// Compare two elements.
    CliffordCmp { a: String, b: String },
    /// Search for a conjugate leaving the final segment above a positive bound.
    CliffordProbe {
        bound: String,
        /// Use `x > bound` instead of `x >= bound`.
        #[arg(long)]
        open: bool,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every invariant check.
    CorpusVerify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit 1 when the input refutes a checked property.
struct Refuted(bool);

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_poset(path: &Path) -> Result<FinitePoset> {
    parse_poset(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn write_dot(path: &Option<PathBuf>, p: &FinitePoset, name: &str) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, hasse_dot(p, name))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn load_group(args: &GroupArgs) -> Result<(GroupOrderSpec, Window)> {
    let parsed =
        parse_group(&read(&args.file)?).with_context(|| format!("in {}", args.file.display()))?;
    let window = match &args.window {
        Some(w) => {
            let w = parse_window(w, 0).context("in --window")?;
            parsed.spec.check_window(&w).context("in --window")?;
            w
        }
        None => parsed
            .window
            .unwrap_or_else(|| parsed.spec.default_window(4)),
    };
    Ok((parsed.spec, window))
}

fn labelled_window(spec: &GroupOrderSpec, w: &Window) -> Result<FinitePoset> {
    let wp = window_poset(spec, w)?;
    let labels = wp.elements.iter().map(|x| format_element(x)).collect();
    Ok(wp.poset.with_labels(labels))
}

fn list(xs: &[Vec<i64>]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter()
        .map(|x| format_element(x))
        .collect::<Vec<_>>()
        .join(" ")
}

fn clifford(s: &str) -> Result<CliffordElement> {
    s.parse().with_context(|| format!("in `{s}`"))
}

fn run(cli: Cli) -> Result<Refuted> {
    match cli.command {
        Command::Classify { file, dot } => {
            let p = load_poset(&file)?;
            let c = classify(&p)?;
            println!(
                "chain={} weak={} interval={} semiorder={} threshold={}",
                yn(c.is_chain),
                yn(c.is_weak),
                yn(c.is_interval),
                yn(c.is_semiorder),
                yn(c.is_threshold)
            );
            if let Some((pat, m)) = &c.forbidden_witness {
                let w: Vec<String> = m.witness.iter().flatten().map(|i| i.to_string()).collect();
                println!("contains {} at {}", pat.name(), w.join(" "));
            }
            write_dot(&dot, &p, "poset")?;
            Ok(Refuted(false))
        }
        Command::Traces { file } => {
            let p = load_poset(&file)?;
            let (pred, succ) = traces(&p);
            for (name, q) in [("pred", pred), ("succ", succ)] {
                let rel: Vec<String> = (0..p.n())
                    .flat_map(|x| (0..p.n()).map(move |y| (x, y)))
                    .filter(|&(x, y)| x != y && q.le(x, y))
                    .map(|(x, y)| format!("{x}<={y}"))
                    .collect();
                println!("{name}: {}", rel.join(" "));
                println!("{name} total: {}", yn(q.is_total()));
            }
            Ok(Refuted(false))
        }
        Command::Critical { file } => {
            let p = load_poset(&file)?;
            for (x, y) in critical_pairs(&p) {
                println!("{x} {y}");
            }
            Ok(Refuted(false))
        }
        Command::Represent { file } => {
            let p = load_poset(&file)?;
            let Ok(iv) = interval_representation(&p) else {
                println!("not an interval order");
                return Ok(Refuted(true));
            };
            println!("# element left right");
            for (i, (l, r)) in iv.intervals.iter().enumerate() {
                println!("{i} {l} {r}");
            }
            match unit_representation(&p) {
                Ok(u) => {
                    println!("# element offset (unit length)");
                    for (i, r) in u.offsets.iter().enumerate() {
                        println!("{i} {r}");
                    }
                }
                Err(_) => println!("# not a semiorder: no unit representation"),
            }
            Ok(Refuted(false))
        }
        Command::Dimension { file, max_k } => {
            let p = load_poset(&file)?;
            match brute_force_dimension(&p, max_k) {
                DimensionResult::Exact { k, realizer } => {
                    println!("dimension={k}");
                    for o in &realizer.orders {
                        println!(
                            "{}",
                            o.iter()
                                .map(|e| e.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
                DimensionResult::Exceeded => println!("dimension>{max_k}"),
            }
            Ok(Refuted(false))
        }
        Command::Realizer3 { alpha, window } => {
            if alpha <= 0 {
                bail!("--alpha must be positive");
            }
            let (lo, hi) = match window {
                Some(w) => {
                    let w = parse_window(&w, 0).context("in --window")?;
                    if w.dim() != 1 {
                        bail!("--window must be a single range");
                    }
                    w.bounds()[0]
                }
                None => (-4 * alpha, 4 * alpha),
            };
            let keys = integer_keys(lo..=hi);
            let a = Rational::from_integer(alpha.into());
            let r = realizer_dim3_threshold(&keys, &a)?;
            for o in &r.orders {
                println!(
                    "{}",
                    o.iter()
                        .map(|&e| keys[e].to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            let ok = r.realizes(&threshold_poset(&keys, &a));
            println!("realizes: {}", yn(ok));
            Ok(Refuted(!ok))
        }
        Command::GroupCheck(args) => {
            let (spec, w) = load_group(&args)?;
            let lat = spec.lattice();
            let sym = Window::new(
                w.bounds()
                    .iter()
                    .zip(spec.moduli())
                    .map(|(&(lo, hi), m)| match m {
                        Some(_) => (lo, hi),
                        None => {
                            let r = lo.abs().max(hi.abs());
                            (-r, r)
                        }
                    })
                    .collect(),
            )?;
            let cone = validate_cone(
                &lat,
                |x| x.iter().all(|&v| v == 0) || spec.positive(x),
                &sym,
            );
            println!("window: {w}");
            println!("cone: {}", if cone.ok() { "ok" } else { "invalid" });
            let wp = window_poset(&spec, &w)?;
            let c = classify(&wp.poset)?;
            println!(
                "interval={} semiorder={} weak={}",
                yn(c.is_interval),
                yn(c.is_semiorder),
                yn(c.is_weak)
            );
            let t = verify_threshold(&spec, &w, args.margin)?;
            println!("interior={} margin={}", t.interior, t.margin);
            println!(
                "pred total={} antisymmetric={} pred=succ={}",
                yn(t.pred_total),
                yn(t.pred_antisymmetric),
                yn(t.pred_equals_succ)
            );
            match t.pred_equals_aux {
                Some(b) => println!("pred=total order={}", yn(b)),
                None => println!("pred=total order=n/a"),
            }
            println!("isolated in inc(0): {}", list(&t.isolated_inc0));
            println!("threshold={}", yn(t.is_threshold()));
            let covers = cover_check(&spec, &w, args.margin)?;
            println!(
                "interior covers: {}",
                if covers.ok() { "ok" } else { "missing" }
            );
            if args.dot.is_some() {
                write_dot(&args.dot, &labelled_window(&spec, &w)?, "window")?;
            }
            Ok(Refuted(!cone.ok() || c.is_interval != c.is_semiorder))
        }
        Command::GroupInc0(args) => {
            let (spec, w) = load_group(&args)?;
            let mut xs = inc0(&spec, &w);
            xs.sort();
            println!("inc(0) in {w}: {} elements", xs.len());
            for x in &xs {
                println!("{}", format_element(x));
            }
            if args.dot.is_some() {
                write_dot(&args.dot, &labelled_window(&spec, &w)?, "window")?;
            }
            Ok(Refuted(false))
        }
        Command::GroupKai(args) => {
            let (spec, w) = load_group(&args)?;
            match subgroups_kai(&spec, &w, args.margin) {
                Ok(r) => {
                    println!("K={}", r.k);
                    println!("A={}", r.a);
                    println!("I={}", r.i);
                    let wc = &r.window_check;
                    println!(
                        "window check (margin {}): K={} A={} I={}",
                        wc.margin,
                        yn(wc.k),
                        yn(wc.a),
                        yn(wc.i)
                    );
                    let ok = wc.k && wc.a && wc.i && r.chain_ok() && r.convex_dichotomy();
                    Ok(Refuted(!ok))
                }
                Err(semiorder_core::group::GroupError::UnsupportedCarrier(_)) => {
                    println!("{}", window_subgroups(&spec, &w, args.margin)?);
                    Ok(Refuted(false))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::GroupTransfer { group, max_n } => {
            let (spec, w) = load_group(&group)?;
            let mut violations = 0;
            for n in 2..=max_n {
                let r = pattern_transfer_check(&spec, &w, n, group.margin)?;
                for e in &r.entries {
                    let status = match e.status {
                        TransferStatus::BothPresent => "both present",
                        TransferStatus::BothAbsent => "both absent",
                        TransferStatus::ResolvedAfterGrowth => "both present after growth",
                        TransferStatus::Violation => "VIOLATION",
                    };
                    println!("1+{n} vs {}+{}: {status}", e.q + 1, e.p);
                }
                violations += r.violations();
            }
            println!("violations={violations}");
            Ok(Refuted(violations > 0))
        }
        Command::Preceq { p, q } => {
            let (p, q) = (load_poset(&p)?, load_poset(&q)?);
            match preceq_battery(&p, &q) {
                BatteryVerdict::Refuted { group } => {
                    println!("refuted: {group} embeds Q but not P")
                }
                BatteryVerdict::NotRefuted => println!("not refuted by the battery"),
            }
            Ok(Refuted(false))
        }
        Command::CliffordReduce { word } => {
            println!("{}", clifford(&word)?);
            Ok(Refuted(false))
        }
        Command::CliffordCmp { a, b } => {
            let (a, b) = (clifford(&a)?, clifford(&b)?);
            let s = match a.compare(&b) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            println!("{a} {s} {b}");
            Ok(Refuted(false))
        }
        Command::CliffordProbe {
            bound,
            open,
            trials,
            seed,
        } => {
            let seg = FinalSegment::new(clifford(&bound)?, !open)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match probe_final_segment_normality(&seg, trials, &mut rng) {
                ProbeOutcome::Witness(w) => {
                    println!("f = {}", w.f);
                    println!("u = {}", w.u);
                    println!("-u + f + u = {}", w.conjugate);
                    println!("verified: {}", yn(w.verify(&seg)));
                }
                ProbeOutcome::NoneFound { trials } => println!("no witness in {trials} trials"),
            }
            Ok(Refuted(false))
        }
        Command::CorpusVerify {
            max_n,
            trials,
            seed,
        } => {
            let cfg = SuiteConfig {
                max_n,
                trials,
                seed,
            };
            let checks = run_suite(&cfg, |c| {
                println!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            });
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", checks.len());
            Ok(Refuted(failed > 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Refuted(false)) => ExitCode::SUCCESS,
        Ok(Refuted(true)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
