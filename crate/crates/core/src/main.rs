use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;

use divcodes::bounds::{exclude_length, length_closure, moment_lp, theorem3_bound, LpOutcome};
use divcodes::catalog::{self, CatalogEntry, Family};
use divcodes::classify::engine::{classify_2divisible, classify_divisible, TWO_DIVISIBLE_MAX_N};
use divcodes::classify::engine::{DOUBLY_EVEN_MAX_N, TRIPLY_EVEN_MAX_N};
use divcodes::classify::{count_table, render_table, ClassificationRecord, Database};
use divcodes::codes::{dual, dual_min_distance, is_projective, weight_distribution, LinearCode};
use divcodes::geometry::points_to_code;
use divcodes::spreads::{corollary2_spread, hole_code, prop1_check, random_greedy_spread, validate};
use divcodes::textfmt::{format_code, format_matrix, parse_matrix};
use divcodes::Error;

#[derive(Parser)]
#[command(name = "divcodes", version, about = "Projective divisible binary codes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// worker threads, 0 = one per core
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// seed for randomized constructions
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// caps the length handed to the classification engines and the number
    /// of failed draws of the random spread builder
    #[arg(long, global = true)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Report parameters, projectivity and divisibility of a matrix file.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = 2)]
        delta: usize,
    },
    /// Classify divisible codes up to length n and print the count table.
    Classify {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// also store non-projective classes
        #[arg(long)]
        all: bool,
    },
    /// Emit a generator matrix of a catalog family.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a maximum partial spread and its hole code.
    Spread {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        verify: bool,
        /// greedy random spread instead of the maximum one
        #[arg(long)]
        random: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moment LP for a length, for one dimension or all of them.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Realizable, excluded and unknown lengths of projective 2^r-divisible codes.
    Lengths {
        #[arg(long)]
        r: u32,
    },
}

/// Failure that maps to a stable exit code.
enum Failure {
    Verification(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { ref path, delta } => cmd_check(path, delta),
        Command::Classify { delta, n, ref out, all } => cmd_classify(&cli.global, delta, n, out.as_ref(), all),
        Command::Construct { ref family, r, s, k, ref variant, ref out } => {
            cmd_construct(family, r, s, k, variant.as_deref(), out.as_ref())
        }
        Command::Spread { v, r, verify, random, ref out } => cmd_spread(&cli.global, v, r, verify, random, out.as_ref()),
        Command::Bounds { n, delta, k } => cmd_bounds(n, delta, k),
        Command::Lengths { r } => cmd_lengths(r),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_check(path: &PathBuf, delta: usize) -> CmdResult {
    if delta == 0 {
        return Err(Failure::Usage("delta must be positive".into()));
    }
    let text = fs::read_to_string(path)?;
    let parsed = parse_matrix(&text)?;
    let code = match LinearCode::from_generator(&parsed.matrix) {
        Ok(c) => c,
        Err(Error::RankDeficient { rows, rank }) => {
            println!("note: generator has rank {rank} < {rows} rows; using the row space");
            LinearCode::from_spanning_rows(&parsed.matrix)?
        }
        Err(e) => return Err(e.into()),
    };
    let wd = weight_distribution(&code)?;
    let projective = is_projective(&code);
    let divisible = wd.is_divisible(delta);
    println!("n = {}", code.n());
    println!("k = {}", code.k());
    println!("projective: {projective}");
    println!("{delta}-divisible: {divisible}");
    let support: Vec<String> = wd.support().iter().map(|(w, c)| format!("{w}:{c}")).collect();
    println!("weight distribution: {}", support.join(" "));
    match dual_min_distance(&code)? {
        Some(d) => println!("dual distance: {d}"),
        None => println!("dual distance: none (dual is zero)"),
    }
    if code.k() * 2 == code.n() && code.contains_code(&dual(&code)?) {
        println!("self-dual: true");
    }
    if projective && divisible {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "projective = {projective}, {delta}-divisible = {divisible}"
        )))
    }
}

fn cmd_classify(g: &Global, delta: usize, n: usize, out: Option<&PathBuf>, all: bool) -> CmdResult {
    let limit = match delta {
        2 => TWO_DIVISIBLE_MAX_N,
        4 => DOUBLY_EVEN_MAX_N,
        8 => TRIPLY_EVEN_MAX_N,
        _ => return Err(Failure::Usage(format!("delta must be 2, 4 or 8, got {delta}"))),
    };
    let cap = g.budget.unwrap_or(limit).min(limit);
    if n > cap {
        return Err(Failure::Budget(format!("classification at n = {n} exceeds the budget of {cap}")));
    }
    // all-or-nothing: nothing is written unless the whole run succeeds
    let classes = match delta {
        2 => classify_2divisible(n, g.workers)?,
        _ => classify_divisible(delta, n, g.workers)?,
    };
    let title = format!("projective {delta}-divisible classes, n <= {n}");
    print!("{}", render_table(&title, &count_table(&classes, true)));
    if delta != 2 {
        let totals = count_table(classes.iter().filter(|c| c.n == n), false);
        if let Some(row) = totals.get(&n) {
            println!("all full-support classes at n = {n}: {}", row.values().sum::<usize>());
        }
    }
    if let Some(path) = out {
        let mut db = Database::new();
        for c in classes.iter().filter(|c| all || c.projective) {
            db.insert(ClassificationRecord::from_class(c))?;
        }
        db.save(path)?;
        println!("wrote {} records", db.len());
    }
    Ok(())
}

fn cmd_construct(
    name: &str,
    r: Option<usize>,
    s: Option<usize>,
    k: Option<usize>,
    variant: Option<&str>,
    out: Option<&PathBuf>,
) -> CmdResult {
    let text = match name {
        "example2_first" => format_matrix(&catalog::example2_first()),
        "example2_second" => format_matrix(&catalog::example2_second()),
        _ => {
            let fam = Family::from_name(name, s, k, variant)?;
            let entry = CatalogEntry::new(fam, r.unwrap_or(fam.default_r()))?;
            let pts = catalog::family(&entry)?;
            format_code(&points_to_code(&pts)?)
        }
    };
    write_output(out, &text)
}

fn cmd_spread(g: &Global, v: usize, r: usize, verify: bool, random: bool, out: Option<&PathBuf>) -> CmdResult {
    let spread = if random {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(g.seed);
        random_greedy_spread(v, r, &mut rng, g.budget.unwrap_or(1000))?
    } else {
        corollary2_spread(v, r)?
    };
    if !validate(&spread) {
        return Err(Failure::Verification("members are not pairwise disjoint".into()));
    }
    let code = hole_code(&spread)?;
    println!("members: {}", spread.len());
    println!("holes: {}", code.n());
    let delta = 1usize << (r - 1);
    let divisible = weight_distribution(&code)?.is_divisible(delta);
    println!("hole code: [{},{}] {delta}-divisible: {divisible}", code.n(), code.k());
    let mut ok = true;
    if verify {
        let report = prop1_check(&spread)?;
        for (what, passed) in report.assertions() {
            println!("  {what}: {}", if passed { "pass" } else { "FAIL" });
        }
        ok = report.all_pass();
    }
    if let Some(path) = out {
        fs::write(path, format_code(&code))?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification("hole code assertions".into()))
    }
}

fn cmd_bounds(n: usize, delta: usize, k: Option<usize>) -> CmdResult {
    if n == 0 || delta == 0 {
        return Err(Failure::Usage("n and delta must be positive".into()));
    }
    match k {
        Some(k) => {
            if k == 0 || k > n {
                return Err(Failure::Usage(format!("need 1 <= k <= n, got k = {k}")));
            }
            match moment_lp(n, k, delta) {
                LpOutcome::Feasible => println!("[{n},{k}] delta={delta}: Feasible"),
                LpOutcome::Infeasible(cert) => {
                    println!("[{n},{k}] delta={delta}: Infeasible");
                    print!("{cert}");
                }
            }
        }
        None => {
            let excluded = exclude_length(n, delta);
            println!(
                "n={n} delta={delta}: {}",
                if excluded { "excluded (Infeasible for every k)" } else { "not excluded" }
            );
            for k in 1..=n.min(64) {
                let outcome = moment_lp(n, k, delta);
                println!("  k={k}: {}", if outcome.is_feasible() { "Feasible" } else { "Infeasible" });
            }
        }
    }
    Ok(())
}

fn cmd_lengths(r: u32) -> CmdResult {
    let seeds = catalog::length_seeds(r as usize)?;
    let sizes: Vec<usize> = seeds.iter().map(|s| s.n).collect();
    let set = length_closure(r, &sizes)?;
    println!(
        "projective {}-divisible lengths up to {} (bound {} + {})",
        1u64 << r,
        set.bound,
        theorem3_bound(r)?,
        1u64 << (r + 1)
    );
    print!("{set}");
    Ok(())
}
