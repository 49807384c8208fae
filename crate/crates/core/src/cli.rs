//! Command-line front end. [`run`] takes the argument list and an output
//! sink and returns the process exit code, so it can be driven from tests.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::field::Field;
use crate::geometry::{kappa, kappa2, plane_count, small, AffineSpace};
use crate::oracle::{
    exhaustive_equitability, exhaustive_informative, exhaustive_security_sweep, naive_counts, naive_enumerate_planes,
    naive_posterior, SweepConfig, ORACLE_CAP,
};
use crate::search::{
    check_table, min_q_for_epsilon, prime_powers, table, tuples_large_cath, tuples_small_bob, ParameterTuple, Preset,
    DEFAULT_Q_CEILING,
};
use crate::security::{
    avoid_counts, bounds_exact, format_decimal, parse_rational, prior, Classification, Rational, RoundMode,
    Rounding, SecurityReport,
};
use crate::strategy::{bob_decode_checked, deal_random, sample_suitable_map, Hand, Params};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_GOLDEN: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("golden mismatch: {0}")]
    Golden(String),
    #[error("{0}")]
    Failure(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Golden(_) => EXIT_GOLDEN,
            CliError::Failure(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "russian-cards", version, about = "Geometric strategy for the Russian cards problem")]
pub struct Cli {
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Decimal places in rendered bounds
    #[arg(long, global = true, default_value_t = 4)]
    digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest q any search will try
    #[arg(long, global = true, default_value_t = DEFAULT_Q_CEILING)]
    q_ceiling: u64,
    /// half-up, truncate or outward (lower down, upper up)
    #[arg(long, global = true, default_value = "half-up")]
    rounding: Rounding,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Thresholds, bounds and classification for one parameter tuple
    Analyze {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "1/20", value_parser = rational)]
        epsilon: Rational,
    },
    /// Deal, announce, decode and report Cath's posteriors
    Simulate {
        #[command(flatten)]
        params: ParamArgs,
        /// Directory for deal.txt and announcement.txt
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Regenerate a published table
    Table {
        preset: Preset,
        /// Compare against the published rows
        #[arg(long)]
        check: bool,
    },
    /// Brute-force cross-checks for every prime power up to --max-q
    Verify {
        #[arg(long)]
        max_q: u64,
        /// Also enumerate all suitable maps at q=3
        #[arg(long)]
        equitability: bool,
        /// Cath hands drawn when exhaustive enumeration is too large
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Random suitable maps per sweep besides the identity map
        #[arg(long, default_value_t = 3)]
        maps: usize,
    },
    /// Search for parameter tuples
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    alpha: u32,
    #[arg(long)]
    delta: u32,
    #[arg(long)]
    c: u128,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, CliError> {
        Params::new(self.q, self.alpha, self.delta, self.c).map_err(invalid)
    }
}

#[derive(Debug, Subcommand)]
enum SearchCommand {
    /// Least prime power q that is epsilon-strongly secure
    MinQ {
        #[arg(long)]
        c: u128,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long, default_value = "1/20", value_parser = rational)]
        epsilon: Rational,
    },
    /// delta = 2 alpha + 1 and c >= gamma a
    LargeCath {
        #[arg(long, value_parser = rational)]
        gamma: Rational,
        #[arg(long, default_value = "1", value_parser = rational)]
        beta: Rational,
        #[arg(long, default_value = "1/20", value_parser = rational)]
        epsilon: Rational,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// c = floor(a^gamma) with gamma < delta/alpha - 1
    SmallBob {
        #[arg(long, value_parser = rational)]
        gamma: Rational,
        #[arg(long, default_value = "1/20", value_parser = rational)]
        epsilon: Rational,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Restrict to one shape (needs --delta too)
        #[arg(long, requires = "delta")]
        alpha: Option<u32>,
        #[arg(long, requires = "alpha")]
        delta: Option<u32>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not an exact rational such as 1/20"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = Ctx { digits: cli.digits, format: cli.format, rounding: cli.rounding, ceiling: cli.q_ceiling };
    match &cli.command {
        Command::Analyze { params, epsilon } => analyze(&ctx, &params.params()?, epsilon, out),
        Command::Simulate { params, out_dir } => simulate(&ctx, &params.params()?, cli.seed, out_dir.as_deref(), out),
        Command::Table { preset, check } => table_cmd(&ctx, *preset, *check, out),
        Command::Verify { max_q, equitability, samples, maps } => {
            let cfg = SweepConfig { samples: *samples, random_maps: *maps, seed: cli.seed, ..SweepConfig::default() };
            verify(&ctx, *max_q, *equitability, &cfg, out)
        }
        Command::Search(cmd) => search(&ctx, cmd, out),
    }
}

struct Ctx {
    digits: u32,
    format: Format,
    rounding: Rounding,
    ceiling: u64,
}

impl Ctx {
    fn dec(&self, r: &Rational) -> String {
        format_decimal(r, self.digits, RoundMode::HalfUp)
    }
}

fn frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sci(r: &Rational) -> String {
    format!("{:.4e}", r.to_f64().unwrap_or(f64::NAN))
}

fn analyze(ctx: &Ctx, params: &Params, epsilon: &Rational, out: &mut dyn Write) -> Result<(), CliError> {
    let report = SecurityReport::new(params, epsilon);
    if ctx.format == Format::Records {
        let fields = report.fields(ctx.digits, ctx.rounding);
        let names: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
        let values: Vec<String> = fields.into_iter().map(|(_, v)| v).collect();
        writeln!(out, "# {}", names.join("\t"))?;
        writeln!(out, "{}", values.join("\t"))?;
        return Ok(());
    }
    let p = params;
    writeln!(out, "q={} alpha={} delta={}", p.q(), p.alpha(), p.delta())?;
    writeln!(out, "hands: a={} b={} c={} (deck {})", p.a(), p.b(), p.c(), p.deck_size())?;
    writeln!(out, "informative: {} (c < {})", yes(p.c() < p.informative_bound()), p.informative_bound())?;
    writeln!(out, "weak-security threshold: {} (c < {})", yes(p.c() < p.weak_bound()), p.weak_bound())?;
    writeln!(out, "prior: {} = {}", report.prior, ctx.dec(&report.prior))?;
    for (name, pair) in [("exact bounds", &report.exact_bounds), ("simple bounds", &report.simple_bounds)] {
        match pair {
            Some(b) => {
                let (lo, hi) = ctx.rounding.render_pair(b, ctx.digits);
                writeln!(out, "{name}: lower {} = {lo}, upper {} = {hi}", frac(&b.lower), frac(&b.upper))?;
            }
            None => writeln!(out, "{name}: n/a (denominator not positive)")?,
        }
    }
    match &report.epsilon_achieved {
        Some(e) => writeln!(out, "epsilon achieved: {} ~ {}", frac(e), sci(e))?,
        None => writeln!(out, "epsilon achieved: n/a")?,
    }
    match &report.classification {
        Classification::EpsilonStrong(eps) => writeln!(out, "classification: epsilon-strong (epsilon = {eps})")?,
        other => writeln!(out, "classification: {}", other.tag())?,
    }
    Ok(())
}

fn hand_line(h: &Hand) -> String {
    h.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn simulate(
    ctx: &Ctx,
    params: &Params,
    seed: u64,
    out_dir: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let deal = deal_random(params, seed).map_err(invalid)?;
    let map = sample_suitable_map(&deal.alice, params, seed).map_err(invalid)?;
    let ann = map.announcement();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("deal.txt"), deal.to_text())?;
        std::fs::write(dir.join("announcement.txt"), ann.to_text())?;
    }
    let decoded = bob_decode_checked(&map, &deal.bob).map_err(|e| CliError::Verification(format!("Bob cannot decode: {e}")))?;
    if decoded != deal.alice {
        return Err(CliError::Verification("Bob decoded a hand other than Alice's".into()));
    }
    let counts = avoid_counts(ann, &deal.cath).map_err(|e| CliError::Failure(e.to_string()))?;
    let prior = prior(params);
    let bounds = bounds_exact(params.q(), params.alpha(), params.delta(), params.c()).ok();
    let rows: Vec<(u32, u64, Rational)> = (0..params.deck_size() as u32)
        .filter(|x| !deal.cath.contains(x))
        .map(|x| {
            let t = counts.through[x as usize];
            (x, t, Rational::new(t.into(), counts.avoiding.into()) / &prior)
        })
        .collect();
    let min = rows.iter().map(|r| &r.2).min().expect("deck has cards outside C").clone();
    let max = rows.iter().map(|r| &r.2).max().unwrap().clone();
    let within = bounds.as_ref().map(|b| b.contains(&min) && b.contains(&max));

    if ctx.format == Format::Records {
        writeln!(out, "# card\tthrough\tavoiding\tposterior\tratio")?;
        for (x, t, r) in &rows {
            let post = Rational::new((*t).into(), counts.avoiding.into());
            writeln!(out, "{x}\t{t}\t{}\t{}\t{}", counts.avoiding, frac(&post), frac(r))?;
        }
    } else {
        let p = params;
        writeln!(out, "seed {seed}: q={} alpha={} delta={} a={} b={} c={}", p.q(), p.alpha(), p.delta(), p.a(), p.b(), p.c())?;
        write!(out, "{}", deal.to_text())?;
        writeln!(out, "Alice's plane: {}", ann.space().format_plane(map.alice_plane()))?;
        writeln!(out, "announced hands: {}", small(&plane_count(p.q(), p.delta(), p.alpha()).map_err(invalid)?))?;
        writeln!(out, "Bob decodes: {} (matches)", hand_line(&decoded))?;
        writeln!(out, "hands avoiding C: {}", counts.avoiding)?;
        writeln!(out, "prior: {} = {}", prior, ctx.dec(&prior))?;
        writeln!(out, "card\tposterior\tratio")?;
        for (x, t, r) in &rows {
            let post = Rational::new((*t).into(), counts.avoiding.into());
            writeln!(out, "{x}\t{post} = {}\t{} = {}", ctx.dec(&post), r, ctx.dec(r))?;
        }
        writeln!(out, "ratio range: [{}, {}]", ctx.dec(&min), ctx.dec(&max))?;
        match &bounds {
            Some(b) => {
                let (lo, hi) = ctx.rounding.render_pair(b, ctx.digits);
                writeln!(out, "exact bounds: [{lo}, {hi}], observed within: {}", yes(within == Some(true)))?;
            }
            None => writeln!(out, "exact bounds: n/a")?,
        }
    }
    if within == Some(false) {
        return Err(CliError::Verification("observed ratio outside the exact bounds".into()));
    }
    Ok(())
}

fn write_tuples(ctx: &Ctx, tuples: &[ParameterTuple], out: &mut dyn Write) -> Result<(), CliError> {
    if ctx.format == Format::Records {
        writeln!(out, "# a\tb\tc\tq\talpha\tdelta\tlower\tupper\tlower_dec\tupper_dec")?;
        for t in tuples {
            writeln!(out, "{}", t.to_record(ctx.digits, ctx.rounding))?;
        }
        return Ok(());
    }
    let with_gamma = tuples.iter().any(|t| t.gamma.is_some());
    let mut rows = vec![{
        let mut h: Vec<String> = ["a", "b", "c", "q", "alpha", "delta"].map(String::from).to_vec();
        if with_gamma {
            h.push("gamma".into());
        }
        h.extend(["lower".into(), "upper".into()]);
        h
    }];
    for t in tuples {
        let (lo, hi) = t.rendered_bounds(ctx.digits, ctx.rounding);
        let mut r = vec![
            t.a().to_string(),
            t.b().to_string(),
            t.c().to_string(),
            t.q().to_string(),
            t.alpha().to_string(),
            t.delta().to_string(),
        ];
        if with_gamma {
            r.push(t.gamma.as_ref().map_or_else(|| "-".into(), |g| g.to_string()));
        }
        r.extend([lo, hi]);
        rows.push(r);
    }
    let widths: Vec<usize> = (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].len()).max().unwrap()).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", cells.join("  "))?;
    }
    Ok(())
}

fn table_cmd(ctx: &Ctx, preset: Preset, check: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = table(preset, ctx.ceiling).map_err(|e| CliError::Failure(e.to_string()))?;
    write_tuples(ctx, &rows, out)?;
    if !check {
        return Ok(());
    }
    let mismatches = check_table(preset, &rows, ctx.rounding);
    if mismatches.is_empty() {
        writeln!(out, "{preset}: all {} rows match", rows.len())?;
        return Ok(());
    }
    for m in &mismatches {
        writeln!(out, "{preset} {m}")?;
    }
    Err(CliError::Golden(format!("{preset}: {} field(s) differ", mismatches.len())))
}

fn search(ctx: &Ctx, cmd: &SearchCommand, out: &mut dyn Write) -> Result<(), CliError> {
    use crate::search::SearchError;
    let map = |e: SearchError| match e {
        SearchError::NoneFound { .. } => CliError::Failure(e.to_string()),
        other => invalid(other),
    };
    let tuples = match cmd {
        SearchCommand::MinQ { c, alpha, delta, epsilon } => {
            vec![min_q_for_epsilon(*c, *alpha, *delta, epsilon, ctx.ceiling).map_err(map)?]
        }
        SearchCommand::LargeCath { gamma, beta, epsilon, count } => {
            tuples_large_cath(gamma, beta, epsilon, *count, ctx.ceiling).map_err(map)?
        }
        SearchCommand::SmallBob { gamma, epsilon, count, alpha, delta } => {
            let shape = alpha.zip(*delta);
            tuples_small_bob(gamma, epsilon, *count, shape, ctx.ceiling).map_err(map)?
        }
    };
    write_tuples(ctx, &tuples, out)
}

/// One line of the verification report.
struct Tally {
    name: String,
    passed: u64,
    total: u64,
    notes: Vec<String>,
}

impl Tally {
    fn new(name: &str) -> Tally {
        Tally { name: name.into(), passed: 0, total: 0, notes: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.notes.push(what());
        }
    }
}

fn verify(ctx: &Ctx, max_q: u64, equitability: bool, cfg: &SweepConfig, out: &mut dyn Write) -> Result<(), CliError> {
    if max_q < 2 {
        return Err(invalid("--max-q must be at least 2"));
    }
    if max_q * max_q > ORACLE_CAP {
        return Err(invalid(format!("--max-q {max_q} exceeds the oracle cap (q^2 <= {ORACLE_CAP})")));
    }
    let fail = |e: &dyn std::fmt::Display| CliError::Failure(e.to_string());
    let mut counting = Tally::new("plane enumeration and incidence counts");
    let mut posterior = Tally::new("posterior: brute force = counting path");
    let mut informative = Tally::new("informative: Bob decodes uniquely");
    let mut sweep = Tally::new("sandwich, weak security, counting inequalities");
    let mut sharp = Tally::new("decode ambiguity past the informative threshold");
    let mut equit = Tally::new("equitability fibers");
    let mut sampled = Vec::new();

    for pp in prime_powers(max_q) {
        let q = pp.q;
        let field = Field::with_order(q).map_err(|e| fail(&e))?;
        for delta in 2..=3u32 {
            if (q as u128).pow(delta) > ORACLE_CAP as u128 {
                continue;
            }
            let space = AffineSpace::new(field.clone(), delta).map_err(|e| fail(&e))?;
            for alpha in 1..delta {
                let naive = naive_enumerate_planes(&field, delta, alpha).map_err(|e| fail(&e))?;
                let canon: BTreeSet<Vec<u32>> = space
                    .enumerate_planes(alpha)
                    .map_err(|e| fail(&e))?
                    .map(|pl| {
                        let mut v: Vec<u32> = space.plane_point_indices(&pl).into_iter().map(|p| p as u32).collect();
                        v.sort_unstable();
                        v
                    })
                    .collect();
                let k = naive_counts(&field, delta, alpha).map_err(|e| fail(&e))?;
                let ok = naive == canon
                    && k.uniform
                    && k.planes == small(&plane_count(q, delta, alpha).unwrap())
                    && k.through_point == small(&kappa(q, delta, alpha).unwrap())
                    && k.through_pair == small(&kappa2(q, delta, alpha).unwrap());
                counting.record(ok, || format!("q={q} delta={delta} alpha={alpha}"));
            }
        }

        // the α=1, δ=2 strategy at every c below both thresholds
        let Ok(top) = Params::new(q, 1, 2, 1) else { continue };
        let limit = top.informative_bound().min(top.weak_bound());
        for c in 1..limit {
            let params = Params::new(q, 1, 2, c).map_err(invalid)?;
            let inf = exhaustive_informative(&params, cfg).map_err(|e| fail(&e))?;
            if !inf.exhaustive {
                sampled.push(format!("informative q={q} c={c}: {} sampled deals", inf.deals));
            }
            informative.record(inf.informative(), || format!("q={q} c={c}: {} failures", inf.failures));
            let rep = exhaustive_security_sweep(&params, cfg).map_err(|e| fail(&e))?;
            if !rep.exhaustive {
                sampled.push(format!("sweep q={q} c={c}: {} sampled Cath hands x {} maps", rep.cath_hands, rep.maps));
            }
            posterior.record(rep.mismatches.is_empty(), || format!("q={q} c={c}: {:?}", rep.mismatches.first()));
            sweep.record(rep.passed(), || {
                format!(
                    "q={q} c={c}: {} sandwich, {} weak, {} counting violations",
                    rep.sandwich_violations.len(),
                    rep.weak_violations.len(),
                    rep.count_violations.len()
                )
            });
            if c == 1 {
                let one = Rational::from_integer(1.into());
                let exact = rep.min.as_ref().map(|m| &m.0) == Some(&one) && rep.max.as_ref().map(|m| &m.0) == Some(&one);
                sweep.record(exact, || format!("q={q} c=1: ratio not identically 1"));
            }
        }
        // spot-check the materialized posterior against the counting path
        let params = Params::new(q, 1, 2, 1).map_err(invalid)?;
        let deal = deal_random(&params, cfg.seed).map_err(invalid)?;
        let map = sample_suitable_map(&deal.alice, &params, cfg.seed).map_err(invalid)?;
        for x in deal.bob.iter().take(5) {
            let a = naive_posterior(map.announcement(), &deal.cath, *x).map_err(|e| fail(&e))?;
            let b = crate::security::exact_posterior(map.announcement(), &deal.cath, *x).map_err(|e| fail(&e))?;
            posterior.record(a == b, || format!("q={q} card {x}"));
        }
        if q == 3 {
            let params = Params::new(3, 1, 2, 2).map_err(invalid)?;
            let inf = exhaustive_informative(&params, cfg).map_err(|e| fail(&e))?;
            sharp.record(inf.counterexample.is_some(), || "q=3 c=2: no ambiguous deal found".into());
            if let Some(d) = &inf.counterexample {
                sampled.push(format!("ambiguous deal at q=3 c=2: A={{{}}} C={{{}}}", hand_line(&d.alice), hand_line(&d.cath)));
            }
        }
    }
    if equitability {
        let hands: Vec<Hand> = vec![[0, 1, 2].into(), [0, 3, 6].into(), [0, 4, 8].into(), [1, 5, 6].into()];
        let rep = exhaustive_equitability(3, 1, 2, &hands).map_err(|e| fail(&e))?;
        for h in &rep.hands {
            sampled.push(format!(
                "equitability A={{{}}}: {} maps, {} announcements, fiber sizes {:?}",
                hand_line(&h.hand),
                h.maps,
                h.announcements,
                h.fiber_sizes
            ));
        }
        equit.record(rep.equitable(), || "fiber sizes or announcement counts differ".into());
    }

    let tallies = [counting, posterior, informative, sweep, sharp, equit];
    let failed: Vec<&Tally> = tallies.iter().filter(|t| t.passed < t.total).collect();
    match ctx.format {
        Format::Records => {
            writeln!(out, "# suite\tpassed\ttotal")?;
            for t in tallies.iter().filter(|t| t.total > 0) {
                writeln!(out, "{}\t{}\t{}", t.name, t.passed, t.total)?;
            }
        }
        Format::Text => {
            for t in tallies.iter().filter(|t| t.total > 0) {
                let status = if t.passed == t.total { "pass" } else { "FAIL" };
                writeln!(out, "{status} {}: {}/{}", t.name, t.passed, t.total)?;
                for n in &t.notes {
                    writeln!(out, "    {n}")?;
                }
            }
            for s in &sampled {
                writeln!(out, "note: {s}")?;
            }
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.iter().map(|t| t.name.as_str()).collect::<Vec<_>>().join("; ")))
    }
}

