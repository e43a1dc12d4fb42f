//! Thin command-line front end over the library: one subcommand per
//! pipeline capability. All result content goes to stdout and is
//! byte-deterministic for fixed flags (independent of `--threads`); cache
//! and timing chatter goes to stderr. Exit code 0 means every requested
//! check passed.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use icosapvi::classify::{
    build_table, export, reference_rows, CacheStatus, Classification, ExportFormat,
};
use icosapvi::exact::{format_rational, parse_rational};
use icosapvi::icosa::{hall_count, GroupTable, MTuple, SSet};
use icosapvi::permg::{factorize, format_factored, genus_rh, group_label, group_order, Perm};
use icosapvi::symfield;
use icosapvi::valentiner::run_valentiner;
use icosapvi::weyl::{reduce_to_alcove, wall_count, ThetaVec};

#[derive(Parser)]
#[command(
    name = "icosapvi",
    about = "Exact classification and symbolic verification of the icosahedral solutions of Painlevé VI"
)]
struct Cli {
    /// Census cache file; omitted, the census is enumerated in memory.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Output format for record-shaped results (classify, orbit, enumerate);
    /// diagnostic subcommands always print text.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0 = one per core). Output does not depend on this.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    threads: usize,
    /// Significant decimal digits for the reflection-triple computation
    /// (clamped to at least 60).
    #[arg(long, global = true, default_value_t = 60, value_name = "DIGITS")]
    precision: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build (or load) the census of generating triples and print counts.
    Enumerate,
    /// Compute the 52 solution classes and check them against the embedded
    /// reference table.
    Classify,
    /// Reduce a θ-vector into the fundamental alcove.
    Reduce {
        /// Four comma-separated rationals θ₁,θ₂,θ₃,θ₄, e.g. 1/2,1/2,1/2,2/3.
        #[arg(long, value_name = "a,b,c,d")]
        theta: String,
    },
    /// Locate the solution class of a θ-vector or of a seven-tuple.
    Orbit {
        /// θ-vector to reduce and match by alcove point.
        #[arg(long, value_name = "a,b,c,d")]
        theta: Option<String>,
        /// Seven-tuple in census form: seven golden numbers `a,b` (meaning
        /// a + b√5) joined by `;`.
        #[arg(long, value_name = "TUPLE")]
        mtuple: Option<String>,
    },
    /// Symbolically verify catalog solutions: the PVI residual must be the
    /// exact zero of the function field.
    Verify {
        /// Catalog entry id (e.g. sol33, thmC, dm41).
        #[arg(long, value_name = "ID")]
        entry: Option<String>,
        /// Verify the complete catalog.
        #[arg(long, conflicts_with = "entry")]
        all: bool,
    },
    /// Map the three Valentiner reflection triples to their classification
    /// rows (38, 37, 46).
    Valentiner,
    /// Riemann–Hurwitz genus of a three-point cover given as permutations
    /// in cycle notation, one per line (ρ₀ and ρ₁; a third line, if
    /// present, must equal ρ∞ = (ρ₁ρ₀)⁻¹).
    Genus {
        /// Permutation file; degree = largest point mentioned.
        #[arg(long, value_name = "FILE")]
        perms: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Ignore failure: the global pool can only be configured once.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), String> {
    match &cli.cmd {
        Cmd::Enumerate => enumerate(cli),
        Cmd::Classify => classify(cli),
        Cmd::Reduce { theta } => reduce(theta),
        Cmd::Orbit { theta, mtuple } => orbit(cli, theta.as_deref(), mtuple.as_deref()),
        Cmd::Verify { entry, all } => verify(entry.as_deref(), *all),
        Cmd::Valentiner => valentiner(cli),
        Cmd::Genus { perms } => genus(perms),
    }
}

/// Group table plus census, honoring `--cache`; status goes to stderr so
/// stdout stays deterministic.
fn census(cli: &Cli) -> Result<(GroupTable, SSet), String> {
    let t = GroupTable::build().map_err(|e| e.to_string())?;
    let (s, status) =
        icosapvi::classify::load_or_build(cli.cache.as_deref(), &t).map_err(|e| e.to_string())?;
    match status {
        CacheStatus::Loaded => eprintln!("census: loaded from cache"),
        CacheStatus::Rebuilt => eprintln!("census: enumerated and cache written"),
        CacheStatus::Uncached => eprintln!("census: enumerated in memory"),
    }
    Ok((t, s))
}

fn classification(t: &GroupTable, s: &SSet) -> Result<Classification, String> {
    build_table(t, s).map_err(|e| e.to_string())
}

fn enumerate(cli: &Cli) -> Result<(), String> {
    let (t, s) = census(cli)?;
    let classes = t.conjugacy_classes();
    let center = classes.iter().filter(|c| c.len() == 1).count();
    let expected_triples = hall_count(3);
    let expected_census: usize = reference_rows().iter().map(|r| r.n).sum();

    match cli.format {
        Format::Json => println!(
            "{{\"group_order\":120,\"center\":{},\"conjugacy_classes\":{},\"generating_triples\":{},\"census\":{}}}",
            center,
            classes.len(),
            s.raw_triples(),
            s.len()
        ),
        Format::Csv => {
            println!("group_order,center,conjugacy_classes,generating_triples,census");
            println!("120,{},{},{},{}", center, classes.len(), s.raw_triples(), s.len());
        }
        Format::Text => {
            println!("group order 120, center {}, conjugacy classes {}", center, classes.len());
            println!("ordered generating triples {}", s.raw_triples());
            println!("census seven-tuples {}", s.len());
        }
    }

    if u128::from(s.raw_triples()) != expected_triples {
        return Err(format!(
            "triple scan found {} ordered generating triples, but the subgroup-lattice count is {}",
            s.raw_triples(),
            expected_triples
        ));
    }
    if s.len() != expected_census {
        return Err(format!(
            "census has {} seven-tuples, but the reference table's orbit sizes sum to {}",
            s.len(),
            expected_census
        ));
    }
    Ok(())
}

fn classify(cli: &Cli) -> Result<(), String> {
    let (t, s) = census(cli)?;
    let cls = classification(&t, &s)?;
    let report = cls.match_reference();
    match cli.format {
        Format::Json => emit(&export(cls.classes(), ExportFormat::Json))?,
        Format::Csv => emit(&export(cls.classes(), ExportFormat::Csv))?,
        Format::Text => print!("{}", cls.render_text(&report)),
    }
    if report.all_match() {
        Ok(())
    } else {
        Err(report.summary())
    }
}

fn reduce(theta: &str) -> Result<(), String> {
    let theta = parse_theta(theta)?;
    let (reduced, _word) = reduce_to_alcove(&theta);
    let walls = wall_count(&reduced).map_err(|e| e.to_string())?;
    match reduced.scaled(60) {
        Some([a, b, c, d]) => println!("({a},{b},{c},{d})/60, walls={walls}"),
        None => println!("{}, walls={walls}", render_theta(&reduced)),
    }
    Ok(())
}

fn orbit(cli: &Cli, theta: Option<&str>, mtuple: Option<&str>) -> Result<(), String> {
    let (key_theta, key_tuple) = match (theta, mtuple) {
        (Some(th), None) => (Some(parse_theta(th)?), None),
        (None, Some(mt)) => (None, Some(MTuple::parse(mt).map_err(|e| e.to_string())?)),
        (None, None) => return Err("pass --theta or --mtuple".into()),
        (Some(_), Some(_)) => return Err("--theta and --mtuple are mutually exclusive".into()),
    };
    let (t, s) = census(cli)?;
    let cls = classification(&t, &s)?;
    let class = match (key_theta, key_tuple) {
        (Some(th), None) => {
            let (reduced, _) = reduce_to_alcove(&th);
            cls.classes().iter().find(|c| c.alcove == reduced).ok_or_else(|| {
                format!(
                    "θ reduces to {}, which is not one of the 52 solution alcove points",
                    render_theta(&reduced)
                )
            })?
        }
        (None, Some(m)) => {
            let pos = s
                .position(&m)
                .ok_or("seven-tuple is not in the census of generating triples")?;
            cls.class_of_position(pos)
        }
        _ => unreachable!("validated above"),
    };
    match cli.format {
        Format::Json => emit(&export(&[class.clone()], ExportFormat::Json))?,
        Format::Csv => emit(&export(&[class.clone()], ExportFormat::Csv))?,
        Format::Text => {
            let [a, b, c, d] = class.alcove_x60;
            println!(
                "orbit #{}: degree {}, genus {}, walls {}, type {}",
                class.orbit_id, class.degree, class.genus, class.walls, class.a5_type
            );
            println!("alcove ×60 ({a}, {b}, {c}, {d}), orbit size {}", class.n);
            println!(
                "monodromy group {} (order {}), partitions {}",
                class.group_display(),
                class.group_order,
                class.partitions_printed().join(", ")
            );
            println!("representative θ {}", render_theta(&class.rep_theta));
        }
    }
    Ok(())
}

fn verify(entry: Option<&str>, all: bool) -> Result<(), String> {
    match (entry, all) {
        (Some(id), false) => {
            let started = std::time::Instant::now();
            let rep = symfield::verify_entry(id).map_err(|e| e.to_string())?;
            println!("{}: residual ≡ 0", rep.id);
            for theta in &rep.thetas {
                println!("  θ = {theta}");
            }
            if rep.implicit_checked {
                println!("  implicit model: F(y, t) ≡ 0");
            }
            if let Some(l) = &rep.leading {
                println!("  leading coefficient at the designated branch: {}", format_rational(l));
            }
            if let Some(donor) = &rep.shares_frame_with {
                println!("  shares (t, u, s) frame with {donor}");
            }
            eprintln!("verified in {} ms", started.elapsed().as_millis());
            Ok(())
        }
        (None, true) => {
            let report = symfield::verify_all();
            let mut failed = 0usize;
            for (id, outcome) in &report.rows {
                match outcome {
                    Ok(rep) => {
                        let mut line =
                            format!("{}: residual ≡ 0 for θ = {}", rep.id, rep.thetas.join(", "));
                        if rep.implicit_checked {
                            line.push_str("; implicit model ok");
                        }
                        if let Some(l) = &rep.leading {
                            line.push_str(&format!("; leading coefficient {}", format_rational(l)));
                        }
                        if let Some(donor) = &rep.shares_frame_with {
                            line.push_str(&format!("; frame shared with {donor}"));
                        }
                        println!("{line}");
                    }
                    Err(e) => {
                        failed += 1;
                        println!("{id}: FAILED — {e}");
                    }
                }
            }
            let total = report.rows.len();
            println!("verified {}/{total} catalog entries", total - failed);
            eprintln!("catalog pass took {} ms", report.millis);
            if failed == 0 {
                Ok(())
            } else {
                Err(format!("{failed} of {total} catalog entries failed"))
            }
        }
        (None, false) => Err("pass --entry ID or --all".into()),
        (Some(_), true) => unreachable!("clap conflicts_with"),
    }
}

fn valentiner(cli: &Cli) -> Result<(), String> {
    let (t, s) = census(cli)?;
    let cls = classification(&t, &s)?;
    let started = std::time::Instant::now();
    let report = run_valentiner(&s, &cls, cli.precision).map_err(|e| e.to_string())?;
    print!("{}", report.render_text());
    eprintln!("valentiner matching took {} ms", started.elapsed().as_millis());
    Ok(())
}

fn genus(path: &std::path::Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let degree = lines
        .iter()
        .flat_map(|l| {
            l.split(|c: char| !c.is_ascii_digit())
                .filter(|tok| !tok.is_empty())
                .filter_map(|tok| tok.parse::<usize>().ok())
        })
        .max()
        .ok_or("no permutations in the file")?;
    let perms: Vec<Perm> = lines
        .iter()
        .map(|l| Perm::parse_cycles(degree, l).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let (rho0, rho1, rho_inf) = match perms.as_slice() {
        [r0, r1] => (r0.clone(), r1.clone(), r1.compose(r0).inverse()),
        [r0, r1, rinf] => {
            if *rinf != r1.compose(r0).inverse() {
                return Err("the third permutation does not equal (ρ₁ρ₀)⁻¹".into());
            }
            (r0.clone(), r1.clone(), rinf.clone())
        }
        other => return Err(format!("expected two or three permutations, found {}", other.len())),
    };
    let types = [rho0.cycle_type(), rho1.cycle_type(), rho_inf.cycle_type()];
    let g = genus_rh(degree, &types).map_err(|e| e.to_string())?;
    let order = group_order(&[rho0, rho1]);
    let label = match group_label(degree, &order) {
        Some(l) => format!(" ({l})"),
        None => String::new(),
    };
    println!("degree {degree}");
    println!(
        "cycle types {} | {} | {}",
        types[0].display_compact(),
        types[1].display_compact(),
        types[2].display_compact()
    );
    println!("genus {g}");
    println!("monodromy group order {} = {}{label}", order, format_factored(&factorize(&order)));
    Ok(())
}

fn parse_theta(s: &str) -> Result<ThetaVec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated rationals, got {}", parts.len()));
    }
    let mut vals = Vec::with_capacity(4);
    for p in &parts {
        vals.push(parse_rational(p.trim()).map_err(|e| e.to_string())?);
    }
    Ok(ThetaVec([vals[0].clone(), vals[1].clone(), vals[2].clone(), vals[3].clone()]))
}

fn render_theta(v: &ThetaVec) -> String {
    let parts: Vec<String> = v.0.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn emit(bytes: &[u8]) -> Result<(), String> {
    let mut out = std::io::stdout().lock();
    out.write_all(bytes).and_then(|()| out.flush()).map_err(|e| e.to_string())
}
