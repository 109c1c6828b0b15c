use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stripcut::ccb_lattice::{fast_op_failures, filter1, law_failures, random_antichain};
use stripcut::convex_solver::{convex_report, convex_value};
use stripcut::decomposition::{default_root, dump, refine_to_binary, trapezoidalize};
use stripcut::dp_engine::solve;
use stripcut::exact_coords::parse_rational;
use stripcut::oracle_and_generators::{
    gen_comb, gen_delta_gadget, gen_no_greedy, gen_random_convex, gen_random_simple, gen_staircase, oracle_value,
    oracle_value_tree, GeneratedInstance, Expected,
};
use stripcut::polygon_model::{decode_codeword, parse_codeword, parse_region, Codeword, Polygon, Region};
use stripcut::reporting::{check_codeword, eps_for, partition_cells, report};
use stripcut::Rational;

mod bench;
mod svg;

#[derive(Parser)]
#[command(name = "stripcut", version, about = "Minimum unit-width vertical strip partitions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the minimum number of strips.
    Value {
        file: PathBuf,
        /// Use the convex solver (the polygon must be declared convex).
        #[arg(long)]
        convex: bool,
        /// Also dump every node's state.
        #[arg(long)]
        trace: bool,
    },
    /// Print a codeword for one optimal partition.
    Report {
        file: PathBuf,
        #[arg(long)]
        convex: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Expand a codeword into one `topEdge bottomEdge x` line per cut.
    Decode { polygon: PathBuf, codeword: PathBuf },
    /// Check a cut list; exit 1 if it is not a strip partition.
    Validate { polygon: PathBuf, cuts: PathBuf },
    /// Brute-force value of a small polygon.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 22)]
        max_candidates: usize,
        /// Use the slab tree search instead of subset enumeration.
        #[arg(long)]
        tree: bool,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Dump the trapezoids and the refined tree.
    Decompose { file: PathBuf },
    /// Randomized lattice law and fast-path checks.
    LatticeFuzz {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Render a partition as SVG.
    Svg { polygon: PathBuf, codeword: PathBuf, out: PathBuf },
    /// Solve a family of growing instances and print one report line each.
    /// Comb sizes are `2^k` teeth; random sizes are `2^k` vertices (keep k ≤ 6).
    Bench {
        #[arg(long, value_enum, default_value_t = Family::Comb)]
        family: Family,
        #[arg(long, default_value_t = 6)]
        kmin: u32,
        #[arg(long, default_value_t = 14)]
        kmax: u32,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    Staircase {
        /// Comma-separated x coordinates in (0, 2).
        #[arg(long)]
        x: String,
    },
    Nogreedy {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    Delta {
        #[arg(long)]
        x: String,
        #[arg(long)]
        delta: String,
    },
    Comb {
        #[arg(long)]
        k: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        convex: bool,
        #[arg(long, default_value_t = 4)]
        width: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Comb,
    Random,
}

/// A run that completed but whose result failed a check.
#[derive(Debug)]
struct Rejected(String);

impl std::fmt::Display for Rejected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Rejected {}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn region(path: &Path) -> Result<Region> {
    Ok(parse_region(&read(path)?).with_context(|| format!("parsing {}", path.display()))?)
}

fn polygon(path: &Path) -> Result<Polygon> {
    match region(path)? {
        Region::Polygon(p) => Ok(p),
        Region::Gluing(_) => bail!("{} is a gluing model; a polygon is required", path.display()),
    }
}

fn rationals(list: &str) -> Result<Vec<Rational>> {
    list.split(',').map(|s| Ok(parse_rational(s.trim())?)).collect()
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(family: &GenFamily) -> Result<GeneratedInstance> {
    Ok(match family {
        GenFamily::Staircase { x } => gen_staircase(&rationals(x)?)?,
        GenFamily::Nogreedy { a, b } => gen_no_greedy(&rationals(a)?, &parse_rational(b)?)?,
        GenFamily::Delta { x, delta } => gen_delta_gadget(&rationals(x)?, &parse_rational(delta)?)?,
        GenFamily::Comb { k } => gen_comb(*k)?,
        GenFamily::Random { n, seed, convex, width } => {
            let p = if *convex { gen_random_convex(*n, *seed, *width)? } else { gen_random_simple(*n, *seed)? };
            let name = format!("random-{}-{n}-{seed}", p.class);
            GeneratedInstance { name, region: Region::Polygon(p), expected: Expected::Unknown, root_hint: None, spine: None }
        }
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Value { file, convex, trace } => {
            if convex {
                println!("{}", convex_value(&polygon(&file)?));
            } else {
                let sol = solve(&region(&file)?)?;
                println!("{}", sol.opt);
                if trace {
                    print!("{}", sol.trace());
                }
            }
        }
        Cmd::Report { file, convex, output } => {
            let text = if convex {
                convex_report(&polygon(&file)?).to_text()
            } else {
                let r = report(&region(&file)?, None)?;
                if !r.is_exact() {
                    return Err(Rejected(format!(
                        "reconstruction gave {} pieces against an optimum of {} ({:?})",
                        r.validation.pieces, r.solution.opt, r.validation
                    ))
                    .into());
                }
                r.reconstruction.codeword.to_text()
            };
            emit(output.as_deref(), &text)?;
        }
        Cmd::Decode { polygon, codeword } => {
            let reg = region(&polygon)?;
            let cw = parse_codeword(&read(&codeword)?)?;
            let c = trapezoidalize(&reg)?;
            for cut in decode_codeword(&c.boundary, &cw, &eps_for(&c))? {
                println!("{cut}");
            }
        }
        Cmd::Validate { polygon, cuts } => {
            let reg = region(&polygon)?;
            let lits: String = read(&cuts)?
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| format!("lit {l}\n"))
                .collect();
            let cw = parse_codeword(&lits)?;
            let c = trapezoidalize(&reg)?;
            let (_, v) = check_codeword(&reg, &cw, &eps_for(&c))?;
            println!("pieces {}", v.pieces);
            println!("max_width {}", v.max_width);
            println!("stray_cuts {}", v.stray);
            if !v.valid {
                let mut why = Vec::new();
                if v.stray > 0 {
                    why.push(format!("{} cut(s) match no chord", v.stray));
                }
                if v.max_width > Rational::from_integer(1.into()) {
                    why.push(format!("a piece has width {}", v.max_width));
                }
                return Err(Rejected(format!("invalid partition: {}", why.join("; "))).into());
            }
            println!("valid");
        }
        Cmd::Oracle { file, max_candidates, tree } => {
            let p = polygon(&file)?;
            let v = if tree { oracle_value_tree(&p)? } else { oracle_value(&p, max_candidates)? };
            println!("{v}");
        }
        Cmd::Gen { family, output } => {
            let g = generate(&family)?;
            let text = format!("# {}: expected {}\n{}", g.name, g.expected, g.region.to_text());
            emit(output.as_deref(), &text)?;
        }
        Cmd::Decompose { file } => {
            let c = trapezoidalize(&region(&file)?)?;
            let r = refine_to_binary(&c, default_root(&c)?)?;
            print!("{}", dump(&c, &r));
        }
        Cmd::LatticeFuzz { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut laws, mut fast) = (0usize, 0usize);
            for t in 0..trials {
                let a = random_antichain(&mut rng, 32, 12, 8);
                let b = random_antichain(&mut rng, 32, 12, 8);
                let c = random_antichain(&mut rng, 32, 12, 8);
                for name in law_failures(&a, &b, &c) {
                    laws += 1;
                    eprintln!("trial {t}: {name} fails on {a} {b} {c}");
                }
                let a = filter1(&random_antichain(&mut rng, 1032, 8, 16));
                let b = filter1(&random_antichain(&mut rng, 1032, 8, 256));
                for name in fast_op_failures(&a, &b) {
                    fast += 1;
                    eprintln!("trial {t}: {name} disagrees on {a} {b}");
                }
            }
            println!("trials {trials} law_failures {laws} fast_op_failures {fast}");
            if laws + fast > 0 {
                return Err(Rejected("lattice checks failed".into()).into());
            }
        }
        Cmd::Svg { polygon, codeword, out } => {
            let reg = region(&polygon)?;
            let cw: Codeword = parse_codeword(&read(&codeword)?)?;
            let c = trapezoidalize(&reg)?;
            let cuts = decode_codeword(&c.boundary, &cw, &eps_for(&c))?;
            let (_, cells) = partition_cells(&c, &cuts, matches!(reg, Region::Gluing(_)));
            let doc = svg::render(&reg, &c, &cells, &cuts);
            fs::write(&out, doc).with_context(|| format!("writing {}", out.display()))?;
        }
        Cmd::Bench { family, kmin, kmax, reps } => {
            for k in kmin..=kmax {
                for line in bench::run(family, k, reps)? {
                    println!("{line}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Rejected>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
