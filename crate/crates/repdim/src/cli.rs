//! Command-line surface: verify runs, single resolutions, diagram rendering,
//! recipe diffs and witness reports.
//!
//! Exit codes are the pass/fail channel: 0 = theorem-checked, 1 = a check
//! failed, 2 = undecided (isomorphism search exhausted or depth cap hit),
//! 3 = input error. Stdout text is informational; certificates are JSON.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::algebra::MonomialAlgebra;
use crate::approx::HomTable;
use crate::error::Error;
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::label::{Label, LabelExpr};
use crate::module::regular_diagram;
use crate::orchestrate::{
    build_mn, build_mn_by_recipe, verify_an, verify_lambda, witness_infinite_type, VerifyOptions,
    VerifyRun,
};

#[derive(Parser, Debug)]
#[command(
    name = "repdim",
    version,
    about = "Representation-dimension-3 certificates for k[x,y]/(x², y^{n+2}) and its socle quotient",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a full verification and emit a certificate
    Verify {
        /// which algebra family: `an` or `lambda`
        #[arg(value_parser = ["an", "lambda"])]
        algebra: String,
        /// family parameter n ≥ 0
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// coefficient field: q, f2 or fp:P
        #[arg(long, default_value = "q")]
        field: String,
        /// resolution depth cap
        #[arg(long, default_value_t = 10)]
        cap: usize,
        /// seed for all randomized searches
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// write the certificate JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// worker thread cap
        #[arg(long)]
        jobs: Option<usize>,
        /// number of infinite-type witnesses to certify
        #[arg(long, default_value_t = 10)]
        witnesses: u32,
    },
    /// Resolve a single simple End(M_n)-module
    Resolve {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "q")]
        field: String,
        /// summand label: U[i], X, A[i,j], DA[i,j] or P
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// also print the resolution as JSON
        #[arg(long)]
        json: bool,
    },
    /// Render the diagram of a named module
    Show {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// summand label, P (projective) or Lambda (regular Λ_n-module)
        #[arg(long)]
        module: String,
    },
    /// Diff the inductive construction of M_n against the closed form
    Recipe {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Certify indecomposable witnesses of unbounded dimension
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        count: u32,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn parse_n(s: &str) -> Result<u32, Error> {
    s.trim()
        .parse::<i64>()
        .ok()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::InvalidInput(format!("n must be a non-negative integer, got `{s}`")))
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    FieldSpec::parse(s).map_err(Error::InvalidInput)
}

fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn dispatch(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Verify {
            algebra,
            n,
            field,
            cap,
            seed,
            out,
            jobs,
            witnesses,
        } => {
            let n = parse_n(&n)?;
            let spec = parse_field(&field)?;
            let opts = VerifyOptions {
                cap,
                seed,
                witness_count: witnesses,
            };
            let started = Instant::now();
            let run_verify = || -> Result<CertSummary, Error> {
                match spec {
                    FieldSpec::Rational => summarize(run_one(&algebra, n, Rationals, &opts)?),
                    FieldSpec::Prime(p) => {
                        summarize(run_one(&algebra, n, PrimeField::new(p), &opts)?)
                    }
                }
            };
            let summary = with_pool(jobs, run_verify)?;
            let elapsed = started.elapsed().as_millis();
            match out {
                Some(path) => {
                    let mut f = std::fs::File::create(&path).map_err(|e| {
                        Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                    })?;
                    f.write_all(summary.json.as_bytes()).map_err(|e| {
                        Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!("{}", summary.text);
                    println!("certificate written to {}", path.display());
                    println!("completed in {elapsed} ms");
                }
                None => {
                    print!("{}", summary.json);
                    eprintln!("{}", summary.text);
                    eprintln!("completed in {elapsed} ms");
                }
            }
            Ok(if summary.theorem_checked { 0 } else { 1 })
        }
        Command::Resolve {
            n,
            field,
            target,
            cap,
            seed,
            json,
        } => {
            let n = parse_n(&n)?;
            let spec = parse_field(&field)?;
            let expr = LabelExpr::parse(&target)?;
            let label = expr.resolve(n);
            match spec {
                FieldSpec::Rational => cmd_resolve(n, Rationals, label, cap, seed, json),
                FieldSpec::Prime(p) => cmd_resolve(n, PrimeField::new(p), label, cap, seed, json),
            }
        }
        Command::Show { n, module } => {
            let n = parse_n(&n)?;
            let expr = LabelExpr::parse(&module)?;
            let label = expr.resolve(n);
            let diagram = match label {
                Label::Lambda => regular_diagram(&MonomialAlgebra::lambda(n)),
                Label::U(i) => {
                    if i > n + 1 {
                        return Err(Error::IndexOutOfRange(format!(
                            "U[{i}] needs i ≤ {}",
                            n + 1
                        )));
                    }
                    crate::module::u_diagram(i)
                }
                Label::X => crate::module::x_diagram(),
                Label::A(i, j) => {
                    if i + j > n {
                        return Err(Error::IndexOutOfRange(format!(
                            "A[{i},{j}] needs i+j ≤ {n}"
                        )));
                    }
                    crate::module::a_diagram(i, j)
                }
                Label::DA(i, j) => {
                    if i + j > n {
                        return Err(Error::IndexOutOfRange(format!(
                            "DA[{i},{j}] needs i+j ≤ {n}"
                        )));
                    }
                    crate::module::da_diagram(i, j)
                }
            };
            println!("{label} over A_{n}:");
            print!("{}", diagram.render());
            Ok(0)
        }
        Command::Recipe { n, field, seed } => {
            let n = parse_n(&n)?;
            if n < 1 {
                return Err(Error::InvalidInput("recipe needs n ≥ 1".to_string()));
            }
            let spec = parse_field(&field)?;
            let (stages, passed) = match spec {
                FieldSpec::Rational => {
                    let r = build_mn_by_recipe(n, Rationals, seed)?;
                    (r.stages, r.passed)
                }
                FieldSpec::Prime(p) => {
                    let r = build_mn_by_recipe(n, PrimeField::new(p), seed)?;
                    (r.stages, r.passed)
                }
            };
            for stage in &stages {
                let fmt = |ls: &[Label]| {
                    ls.iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                println!("stage {}:", stage.n);
                println!("  removed: {}", fmt(&stage.removed));
                println!("  added:   {}", fmt(&stage.added));
                println!("  kept:    {} summands", stage.kept.len());
                println!(
                    "  {}",
                    if stage.matches_formula {
                        "matches the closed form"
                    } else {
                        "MISMATCH against the closed form"
                    }
                );
            }
            println!("verdict: {}", if passed { "PASS" } else { "FAIL" });
            Ok(if passed { 0 } else { 1 })
        }
        Command::Witness {
            n,
            count,
            field,
            seed,
        } => {
            let n = parse_n(&n)?;
            let spec = parse_field(&field)?;
            let alg = MonomialAlgebra::an(n);
            let report = match spec {
                FieldSpec::Rational => witness_infinite_type(&alg, Rationals, count, seed)?,
                FieldSpec::Prime(p) => {
                    witness_infinite_type(&alg, PrimeField::new(p), count, seed)?
                }
            };
            println!(
                "{} certified indecomposable modules over A_{n}, dims {}",
                report.count,
                report
                    .dims
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("witness check: PASS");
            Ok(0)
        }
    }
}

struct CertSummary {
    json: String,
    text: String,
    theorem_checked: bool,
}

fn run_one<K: Field>(
    algebra: &str,
    n: u32,
    field: K,
    opts: &VerifyOptions,
) -> Result<VerifyRun<K>, Error> {
    match algebra {
        "an" => verify_an(n, field, opts),
        "lambda" => verify_lambda(n, field, opts),
        other => Err(Error::InvalidInput(format!("unknown algebra `{other}`"))),
    }
}

fn summarize<K: Field>(run: VerifyRun<K>) -> Result<CertSummary, Error> {
    let cert = &run.certificate;
    let verdict = match cert.verdict {
        crate::orchestrate::Verdict::TheoremChecked => "theorem-checked",
        crate::orchestrate::Verdict::Failed => "failed",
    };
    let attained = cert
        .resolutions
        .iter()
        .find(|r| r.pd == cert.global_dimension)
        .map(|r| format!(" (attained at E_{})", r.target))
        .unwrap_or_default();
    let text = format!(
        "{} n={} over {}: gl.dim End = {}{}, {} summands, verdict {}",
        cert.algebra.kind,
        cert.algebra.n,
        cert.algebra.field,
        cert.global_dimension,
        attained,
        cert.summands.len(),
        verdict
    );
    Ok(CertSummary {
        json: cert.to_json(),
        text,
        theorem_checked: cert.verdict == crate::orchestrate::Verdict::TheoremChecked,
    })
}

fn cmd_resolve<K: Field>(
    n: u32,
    field: K,
    label: Label,
    cap: usize,
    seed: u64,
    json: bool,
) -> Result<i32, Error> {
    let mut set = build_mn(n, field)?;
    set.certify(seed)?;
    let Some(t) = set.index_of(label) else {
        return Err(Error::InvalidInput(format!(
            "{label} is not a summand of M_{n}"
        )));
    };
    let table = HomTable::build(&set)?;
    let resolution = crate::approx::resolve_simple(&set, &table, t, cap)?;
    let mut line = format!("pd {}", resolution.pd);
    for (d, term) in resolution.terms.iter().enumerate() {
        let labels = term
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        line.push_str(&format!("; deg{}: {}", d + 1, labels));
    }
    println!("{line}");
    if json {
        let info = serde_json::json!({
            "target": resolution.target,
            "pd": resolution.pd,
            "terms": resolution.terms,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&info).expect("serializes")
        );
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_inputs_exit_three() {
        assert_eq!(
            run(["repdim", "verify", "an", "--n", "-1", "--field", "q"]),
            3
        );
        assert_eq!(
            run(["repdim", "verify", "an", "--n", "0", "--field", "f3"]),
            3
        );
        assert_eq!(
            run(["repdim", "resolve", "--n", "1", "--target", "B[1]"]),
            3
        );
        assert_eq!(run(["repdim", "show", "--n", "0", "--module", "A[1,0]"]), 3);
        assert_eq!(run(["repdim", "witness", "--n", "0", "--count", "1"]), 3);
    }

    #[test]
    fn show_renders_chain() {
        assert_eq!(run(["repdim", "show", "--n", "2", "--module", "U[2]"]), 0);
    }

    #[test]
    fn resolve_projective_n1() {
        assert_eq!(
            run(["repdim", "resolve", "--n", "1", "--target", "P", "--json"]),
            0
        );
    }
}
