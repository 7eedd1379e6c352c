use clap::{Parser, Subcommand};
use ringlab::analysis::Analysis;
use ringlab::construct;
use ringlab::corpus;
use ringlab::error::{Result, RingError};
use ringlab::expr::parse_expression;
use ringlab::ideals;
use ringlab::parse::{parse_endomorphism, parse_nonunital, parse_ring, serialize_ring};
use ringlab::predicates;
use ringlab::ring::{validate_ring, Caps, FiniteRing};
use ringlab::set::{ElementSet, SetKind};
use ringlab::theorems::{run_suite, run_theorem, SuiteConfig, TheoremReport};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Finite-ring toolkit: structure-constant presentations, radicals,
/// ring-class predicates, extensions, and a deterministic verification suite.
#[derive(Parser)]
#[command(name = "ringlab", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Maximum admitted ring order (also env RINGLAB_MAX_ORDER)
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Seed feeding every sampled scan
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for sampled scans
    #[arg(long, global = true, default_value_t = 200)]
    samples: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the ring laws of a RINGSPEC file
    Validate { file: PathBuf },
    /// Order, unit count, radical size, nilpotent count, idempotent count
    Info { file: PathBuf },
    /// Print the Jacobson radical as an element set
    Radical { file: PathBuf },
    /// Evaluate predicates on one ring
    Check {
        file: PathBuf,
        /// Comma-separated predicate names
        #[arg(
            short = 'p',
            long = "predicates",
            value_delimiter = ',',
            required = true
        )]
        predicates: Vec<String>,
        /// Exit nonzero unless every result matches
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Build a ring extension and print its RINGSPEC
    Construct {
        /// One of: matrix:N, tri:N, scalarupper:N, trivext, product,
        /// quotient, corner, powerseries:K, dorroh, localize
        kind: String,
        /// Base ring file
        base: PathBuf,
        /// Second operand file (product: ring file; dorroh: nring file)
        second: Option<PathBuf>,
        /// Ideal generators for `quotient`, e.g. "(0,1) (1,0)"
        #[arg(long)]
        ideal_gens: Option<String>,
        /// Idempotent element for `corner`
        #[arg(long)]
        idem: Option<String>,
        /// Endomorphism file for `powerseries`
        #[arg(long)]
        endo: Option<PathBuf>,
        /// Element set for `localize`
        #[arg(long)]
        set: Option<String>,
        /// Output file (default stdout)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Replay catalogued checks over a corpus
    Verify {
        /// A check id or `all`
        id: String,
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        /// Also write the report to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List corpus rings satisfying a predicate expression
    Search {
        /// Expression over predicate names, e.g. "j-reflexive & !reflexive"
        #[arg(long = "where")]
        expr: String,
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
    },
}

fn caps_for(cli: &Cli) -> Caps {
    let mut caps = Caps::from_env();
    if let Some(m) = cli.max_order {
        caps.max_order = m.max(1);
    }
    caps
}

fn load(file: &Path, caps: &Caps) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(file)?;
    let ring = parse_ring(&text)?;
    caps.check_order(ring.order() as u128)?;
    Ok(ring)
}

fn load_validated(file: &Path, caps: &Caps) -> Result<FiniteRing> {
    let ring = load(file, caps)?;
    let report = validate_ring(&ring);
    if !report.ok() {
        return Err(RingError::InvalidRing(ring.name().to_string()));
    }
    Ok(ring)
}

fn parse_element_list(ring: &FiniteRing, text: &str) -> Result<Vec<ringlab::RingElement>> {
    text.split_whitespace()
        .map(|tok| ring.parse_element(tok))
        .collect()
}

fn run(cli: &Cli) -> Result<i32> {
    let caps = caps_for(cli);
    match &cli.cmd {
        Cmd::Validate { file } => {
            let ring = load(file, &caps)?;
            let report = validate_ring(&ring);
            if report.ok() {
                println!("ok {} order={}", ring.name(), ring.order());
                Ok(0)
            } else {
                for v in &report.violations {
                    let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
                    println!("violation {} witness={}", v.law, idx.join(","));
                }
                Ok(2)
            }
        }
        Cmd::Info { file } => {
            let ring = load_validated(file, &caps)?;
            println!("ring {}", ring.name());
            println!("order {}", ring.order());
            println!("units {}", ideals::units(&ring).len());
            println!("jacobson {}", ideals::jacobson_radical(&ring, &caps)?.len());
            println!("nilpotents {}", ideals::nil_elements(&ring).len());
            println!("idempotents {}", ideals::idempotents(&ring).len());
            Ok(0)
        }
        Cmd::Radical { file } => {
            let ring = load_validated(file, &caps)?;
            print!("{}", ideals::jacobson_radical(&ring, &caps)?.to_text());
            Ok(0)
        }
        Cmd::Check {
            file,
            predicates: names,
            expect,
        } => {
            let ring = load_validated(file, &caps)?;
            let a = Analysis::new(&ring, &caps)?;
            let mut all_match = true;
            for name in names {
                let res = predicates::evaluate(&a, name)?;
                match res.witness_text() {
                    Some(w) => println!("{name}: {} witness={w}", res.holds),
                    None => println!("{name}: {}", res.holds),
                }
                if let Some(e) = expect {
                    if res.holds != *e {
                        all_match = false;
                    }
                }
            }
            Ok(if all_match { 0 } else { 1 })
        }
        Cmd::Construct {
            kind,
            base,
            second,
            ideal_gens,
            idem,
            endo,
            set,
            out,
        } => {
            let ring = load_validated(base, &caps)?;
            let (kind, arg) = match kind.split_once(':') {
                Some((k, a)) => (k, Some(a)),
                None => (kind.as_str(), None),
            };
            let dim = |what: &str| -> Result<usize> {
                arg.ok_or_else(|| RingError::MalformedLine {
                    line: 0,
                    msg: format!("{what} needs a size, e.g. `{what}:2`"),
                })?
                .parse::<usize>()
                .map_err(|_| RingError::MalformedLine {
                    line: 0,
                    msg: format!("bad size for {what}"),
                })
            };
            let mut extra = String::new();
            let built = match kind {
                "matrix" => construct::matrix_ring(&ring, dim("matrix")?, &caps)?,
                "tri" => construct::upper_triangular_ring(&ring, dim("tri")?, &caps)?,
                "scalarupper" => {
                    construct::scalar_plus_strict_upper(&ring, dim("scalarupper")?, &caps)?
                }
                "trivext" => construct::trivial_extension(&ring, &caps)?,
                "product" => {
                    let other = second.as_ref().ok_or_else(|| RingError::MalformedLine {
                        line: 0,
                        msg: "product needs a second ring file".into(),
                    })?;
                    let other = load_validated(other, &caps)?;
                    construct::direct_product(&ring, &other, &caps)?
                }
                "quotient" => {
                    let gens = ideal_gens
                        .as_ref()
                        .ok_or_else(|| RingError::MalformedLine {
                            line: 0,
                            msg: "quotient needs --ideal-gens".into(),
                        })?;
                    let gens =
                        ElementSet::new(&ring, SetKind::Plain, parse_element_list(&ring, gens)?)?;
                    let ideal = ideals::generated(&ring, &gens, SetKind::Ideal, &caps)?;
                    construct::quotient_ring(&ring, &ideal, &caps)?.ring
                }
                "corner" => {
                    let idem = idem.as_ref().ok_or_else(|| RingError::MalformedLine {
                        line: 0,
                        msg: "corner needs --idem".into(),
                    })?;
                    let e = ring.parse_element(idem)?;
                    construct::corner_ring(&ring, &e, &caps)?.ring
                }
                "powerseries" => {
                    let degree = dim("powerseries")?;
                    let f = match endo {
                        Some(path) => {
                            let text = std::fs::read_to_string(path)?;
                            parse_endomorphism(&text)?
                        }
                        None => construct::Endomorphism::identity(&ring),
                    };
                    construct::truncated_skew_power_series(&ring, &f, degree, &caps)?
                }
                "dorroh" => {
                    let sfile = second.as_ref().ok_or_else(|| RingError::MalformedLine {
                        line: 0,
                        msg: "dorroh needs an nring file".into(),
                    })?;
                    let text = std::fs::read_to_string(sfile)?;
                    let s = parse_nonunital(&text)?;
                    construct::dorroh_extension(&ring, &s, &caps)?
                }
                "localize" => {
                    let set = set.as_ref().ok_or_else(|| RingError::MalformedLine {
                        line: 0,
                        msg: "localize needs --set".into(),
                    })?;
                    let m =
                        ElementSet::new(&ring, SetKind::Plain, parse_element_list(&ring, set)?)?;
                    let (loc, cert) = construct::central_regular_localization(&ring, &m, &caps)?;
                    for (m, inv) in cert.members.iter().zip(&cert.inverses) {
                        extra.push_str(&format!("# central-regular {m} inverse {inv}\n"));
                    }
                    loc
                }
                other => {
                    return Err(RingError::MalformedLine {
                        line: 0,
                        msg: format!("unknown construction {other:?}"),
                    })
                }
            };
            let text = format!("{extra}{}", serialize_ring(&built));
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Verify {
            id,
            corpus: dir,
            report,
        } => {
            let corpus = corpus::load_dir(dir, &caps)?;
            let config = SuiteConfig {
                seed: cli.seed,
                samples: cli.samples,
                caps,
            };
            let rendered: TheoremReport = if id == "all" {
                run_suite(&corpus, &config)?
            } else {
                let check = run_theorem(id, &corpus, &config)?;
                TheoremReport {
                    digest: corpus.digest(),
                    config: config.clone(),
                    corpus_size: corpus.entries.len(),
                    checks: vec![check],
                    runtime: std::time::Duration::ZERO,
                }
            };
            let text = rendered.render();
            print!("{text}");
            if let Some(path) = report {
                std::fs::write(path, &text)?;
            }
            Ok(if rendered.failed() { 1 } else { 0 })
        }
        Cmd::Search { expr, corpus: dir } => {
            let corpus = corpus::load_dir(dir, &caps)?;
            let expr = parse_expression(expr)?;
            for entry in &corpus.entries {
                match &entry.ring {
                    Some(ring) => {
                        let a = Analysis::new(ring, &caps)?;
                        if expr.eval(&a)? {
                            println!("{}", entry.name);
                        }
                    }
                    None => eprintln!(
                        "skipping {}: {}",
                        entry.name,
                        entry.issue.as_deref().unwrap_or("invalid")
                    ),
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
