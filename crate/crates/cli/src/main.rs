//! `shufflekron`: batch front end for shuffles, shuffle groups, Kronecker
//! rearrangement and DFT identities.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use shufflekron::dft_factor::{
    check_factorization, fft_plan, naive_dft, prime_factors, radix_identity_sides,
};
use shufflekron::format::{
    int_matrix_json, parse_int_matrix_json, parse_vector_csv, permutation_json, vector_csv,
};
use shufflekron::group_gen::{
    gsh_group, index_in_symmetric, index_lower_bound_check, k_group, totient, DEFAULT_GROUP_LIMIT,
};
use shufflekron::mixed_radix::DEFAULT_SIZE_LIMIT;
use shufflekron::permutation::join_points;
use shufflekron::rearrange::{rearrange_kron, FactorList};
use shufflekron::shuffling::{common_fixed, perfect_shuffle, sh_k, shuffle_perm};
use shufflekron::{parse_cycles, BranchIndices, Permutation, ShuffleSpec};

#[derive(Parser, Debug)]
#[command(name = "shufflekron", version, about)]
struct Cli {
    /// Largest N accepted for a branch-index basis.
    #[arg(long, global = true, env = "SHUFFLEKRON_SIZE_LIMIT", default_value_t = DEFAULT_SIZE_LIMIT)]
    size_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PermFormat {
    /// Record with images, cycles, horizontal listing and fixed points.
    Json,
    /// Canonical cycles, e.g. `(0)(1 4 6)(2 8 9 3)`.
    Cycles,
    /// Images `f(0) f(1) ...`.
    Oneline,
    /// Horizontal listing `f⁻¹(0) f⁻¹(1) ...`.
    Horizontal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The shuffle induced by σ on a branch-index basis.
    Shuffle {
        /// Branch indices, e.g. `2,2,3`.
        #[arg(long)]
        branch: String,
        /// σ in 1-based cycle notation, e.g. `(1 3)`; `()` is the identity.
        #[arg(long)]
        sigma: String,
        #[arg(long, value_enum, default_value_t = PermFormat::Horizontal)]
        format: PermFormat,
    },
    /// The perfect shuffle, σ = (1 2 ... m).
    Perfect {
        #[arg(long)]
        branch: String,
        #[arg(long, value_enum, default_value_t = PermFormat::Horizontal)]
        format: PermFormat,
    },
    /// Sh_k on N points.
    Shk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PermFormat::Horizontal)]
        format: PermFormat,
    },
    /// Fixed points of one shuffle, or of all shuffles when σ is omitted.
    FixedPoints {
        #[arg(long)]
        branch: String,
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Encode a digit word as an integer.
    Encode {
        #[arg(long)]
        branch: String,
        /// Digits, most significant first, e.g. `2,1,1`.
        #[arg(long)]
        digits: String,
    },
    /// Decode an integer into its digit word.
    Decode {
        #[arg(long)]
        branch: String,
        #[arg(long)]
        x: usize,
    },
    /// The group generated by all shuffles of a basis.
    Group {
        #[arg(long)]
        branch: String,
        #[arg(long, env = "SHUFFLEKRON_GROUP_LIMIT", default_value_t = DEFAULT_GROUP_LIMIT)]
        limit: usize,
        /// Write every element as a JSON line of images.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// The group generated by the Sh_k on N points.
    Gsh {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "SHUFFLEKRON_GROUP_LIMIT", default_value_t = DEFAULT_GROUP_LIMIT)]
        limit: usize,
    },
    /// Reorder the factors of a Kronecker product.
    Rearrange {
        /// Integer matrix JSON files, in product order.
        #[arg(long = "factor", required = true)]
        factors: Vec<PathBuf>,
        /// σ on factor positions, 1-based cycles.
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the block factorization of F_N·(P^σ)ᵀ exactly.
    DftCheck {
        #[arg(long)]
        branch: String,
        #[arg(long)]
        sigma: String,
    },
    /// Check the general radix identity for n = r·s exactly.
    RadixCheck {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Mixed-radix FFT of a CSV vector (`re,im` per line).
    Fft {
        #[arg(long)]
        n: usize,
        /// Radices; the prime factorization of N when omitted.
        #[arg(long)]
        factors: Option<String>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also time the naive transform and report the maximum error.
        #[arg(long)]
        bench: bool,
        /// Error budget per point for `--bench`.
        #[arg(long, env = "SHUFFLEKRON_FFT_TOLERANCE", default_value_t = 1e-9)]
        tolerance: f64,
    },
}

/// A command either prints its result or reports a failed verification.
enum Outcome {
    Ok(String),
    Failed(String),
}

type CliResult<T> = std::result::Result<T, String>;

fn lib<T>(r: shufflekron::Result<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

fn parse_list(text: &str, what: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| {
                format!("invalid {what} list {text:?}: {t:?} is not a non-negative integer")
            })
        })
        .collect()
}

fn parse_branch(text: &str, limit: usize) -> CliResult<BranchIndices> {
    lib(BranchIndices::with_limit(
        parse_list(text, "branch")?,
        limit,
    ))
}

fn parse_spec(branch: &str, sigma: &str, limit: usize) -> CliResult<ShuffleSpec> {
    let basis = parse_branch(branch, limit)?;
    let sigma = lib(parse_cycles(sigma, basis.len(), true))?;
    lib(ShuffleSpec::new(basis, sigma))
}

fn render(p: &Permutation, format: PermFormat) -> String {
    match format {
        PermFormat::Json => permutation_json(p),
        PermFormat::Cycles => p.cycles().to_string(),
        PermFormat::Oneline => join_points(p.images()),
        PermFormat::Horizontal => join_points(&p.horizontal()),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let limit = cli.size_limit;
    match cli.command {
        Command::Shuffle {
            branch,
            sigma,
            format,
        } => {
            let spec = parse_spec(&branch, &sigma, limit)?;
            Ok(Outcome::Ok(render(&shuffle_perm(&spec), format)))
        }
        Command::Perfect { branch, format } => {
            let basis = parse_branch(&branch, limit)?;
            Ok(Outcome::Ok(render(&perfect_shuffle(&basis), format)))
        }
        Command::Shk { n, k, format } => Ok(Outcome::Ok(render(&lib(sh_k(n, k))?, format))),
        Command::FixedPoints { branch, sigma } => {
            let points = match sigma {
                Some(sigma) => shuffle_perm(&parse_spec(&branch, &sigma, limit)?).fixed_points(),
                None => lib(common_fixed(&parse_branch(&branch, limit)?))?,
            };
            Ok(Outcome::Ok(join_points(&points)))
        }
        Command::Encode { branch, digits } => {
            let basis = parse_branch(&branch, limit)?;
            let x = lib(basis.encode(&parse_list(&digits, "digit")?))?;
            Ok(Outcome::Ok(x.to_string()))
        }
        Command::Decode { branch, x } => {
            let word = lib(parse_branch(&branch, limit)?.decode(x))?;
            let digits: Vec<String> = word.digits().iter().map(|d| d.to_string()).collect();
            Ok(Outcome::Ok(digits.join(",")))
        }
        Command::Group {
            branch,
            limit: group_limit,
            dump,
        } => {
            let basis = parse_branch(&branch, limit)?;
            let group = lib(k_group(&basis, group_limit))?;
            if let Some(path) = dump {
                let mut text = String::new();
                for e in group.elements() {
                    let line = serde_json::to_string(e.images()).expect("integers serialize");
                    text.push_str(&line);
                    text.push('\n');
                }
                write_file(&path, &text)?;
            }
            let bound = index_lower_bound_check(&group);
            let line = format!(
                "order={} abelian={} generators={} index={} index_bound={}",
                group.order(),
                group.is_abelian(),
                group.generators().len(),
                index_in_symmetric(&group),
                bound
            );
            Ok(if bound {
                Outcome::Ok(line)
            } else {
                Outcome::Failed(line)
            })
        }
        Command::Gsh {
            n,
            limit: group_limit,
        } => {
            let group = lib(gsh_group(n, group_limit))?;
            let phi = totient(n as u64 - 1);
            let line = format!("order={} phi={}", group.order(), phi);
            Ok(if group.order() as u64 == phi {
                Outcome::Ok(line)
            } else {
                Outcome::Failed(line)
            })
        }
        Command::Rearrange {
            factors,
            sigma,
            output,
        } => {
            let matrices = factors
                .iter()
                .map(|path| {
                    parse_int_matrix_json(&read_file(path)?)
                        .map_err(|e| format!("{}: {e}", path.display()))
                })
                .collect::<CliResult<Vec<_>>>()?;
            let list = lib(FactorList::new(matrices))?;
            let sigma = lib(parse_cycles(&sigma, list.len(), true))?;
            let text = int_matrix_json(&lib(rearrange_kron(&list, &sigma))?);
            match output {
                Some(path) => {
                    write_file(&path, &format!("{text}\n"))?;
                    Ok(Outcome::Ok(String::new()))
                }
                None => Ok(Outcome::Ok(text)),
            }
        }
        Command::DftCheck { branch, sigma } => {
            let spec = parse_spec(&branch, &sigma, limit)?;
            let report = lib(check_factorization(&spec))?;
            let mut text = format!(
                "N={} n_m={} block_size={}\n",
                spec.basis().total(),
                report.n_m,
                report.block_size
            );
            for h in 0..report.n_m {
                let row: Vec<&str> = (0..report.n_m)
                    .map(|k| {
                        if report.mismatched_blocks.contains(&(h, k)) {
                            "mismatch"
                        } else {
                            "ok"
                        }
                    })
                    .collect();
                let _ = writeln!(text, "h={h}: {}", row.join(" "));
            }
            if report.holds() {
                text.push_str("result=holds");
                Ok(Outcome::Ok(text))
            } else {
                let _ = write!(
                    text,
                    "result=fails mismatched_entries={}",
                    report.mismatched_entries
                );
                Ok(Outcome::Failed(text))
            }
        }
        Command::RadixCheck { r, s } => {
            let (lhs, rhs) = lib(radix_identity_sides(r, s))?;
            let line = format!("r={r} s={s} n={}", r * s);
            Ok(if lhs == rhs {
                Outcome::Ok(format!("{line} result=holds"))
            } else {
                Outcome::Failed(format!("{line} result=fails"))
            })
        }
        Command::Fft {
            n,
            factors,
            input,
            output,
            bench,
            tolerance,
        } => {
            let factors = match factors {
                Some(text) => parse_list(&text, "factor")?,
                None => prime_factors(n),
            };
            let plan = lib(fft_plan(n, &factors))?;
            let x = lib(parse_vector_csv(&read_file(&input)?))
                .map_err(|e| format!("{}: {e}", input.display()))?;
            let start = Instant::now();
            let (y, count) = lib(plan.fft_counted(&x))?;
            let fft_time = start.elapsed();
            let text = vector_csv(&y);
            let mut out = match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    String::new()
                }
                None => text.trim_end().to_string(),
            };
            if !bench {
                return Ok(Outcome::Ok(out));
            }
            let start = Instant::now();
            let reference = naive_dft(&x);
            let naive_time = start.elapsed();
            let err = max_abs_diff(&y, &reference);
            let budget = tolerance * n as f64;
            let report = format!(
                "fft_ms={:.3} naive_ms={:.3} multiply_adds={} max_error={:.3e} budget={:.3e}",
                fft_time.as_secs_f64() * 1e3,
                naive_time.as_secs_f64() * 1e3,
                count,
                err,
                budget
            );
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&report);
            Ok(if err <= budget {
                Outcome::Ok(out)
            } else {
                Outcome::Failed(out)
            })
        }
    }
}

fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok(text)) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
