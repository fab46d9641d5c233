//! `nullpart`: decide whether integer weights split into two equal-sum
//! halves, and refute it algebraically when they do not.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use nullpart::formats::{
    certificate_from_file, certificate_to_file, matrix_to_file, poly_to_file, to_canonical_json,
    CertificateFile, CheckReport, DetReport, NoCertificateReport, VerifyReport, WitnessFile,
};
use nullpart::input;
use nullpart_core::algebra::partition_polynomial;
use nullpart_core::certificate::{
    brute_force_partition, build_certificate, encode, verify_certificate, PartitionWitness,
    Verification,
};
use nullpart_core::matrix::bareiss_determinant;
use nullpart_core::partition::{PartitionMatrix, DEFAULT_MAX_N};
use nullpart_core::WeightSet;

const EXIT_DISAGREE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_LIMIT: u8 = 65;

/// Partition refutation tool: exact determinants and Nullstellensatz
/// certificates for integer weight sets.
#[derive(Parser)]
#[command(name = "nullpart", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide partitionability two independent ways and report both.
    ///
    /// Exit 0: partitionable. Exit 1: non-partitionable. Exit 2: the
    /// brute-force oracle and the determinant criterion disagree (a bug).
    Check(CommonArgs),
    /// Print the partition matrix with its subset labels.
    Matrix(MatrixArgs),
    /// Compute the determinant twice (elimination and signed-sum product)
    /// and compare; MISMATCH exits 2.
    Det(CommonArgs),
    /// Generate a refutation certificate, verifying it before emitting.
    ///
    /// Exit 1 (with the witness) when the weights are partitionable.
    Certificate(CommonArgs),
    /// Re-verify a certificate file; exit 0 on pass, 1 on fail.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-oriented text.
    Text,
    /// Canonical JSON.
    Json,
    /// Raw matrix entries (matrix subcommand only).
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Weights as integers, e.g. `1 3 5 2`.
    #[arg(allow_negative_numbers = true)]
    weights: Vec<String>,

    /// Read weights from a file instead: one integer per line, `#` comments.
    #[arg(long, conflicts_with = "weights")]
    file: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// Largest accepted weight count n; the matrix side is 2^(n-1), so
    /// raising this above 14 costs real memory.
    #[arg(long, env = "NULLPART_MAX_N", value_parser = clap::value_parser!(u64).range(1..))]
    max_n: Option<u64>,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Run the structural property checks and append the report.
    #[arg(long)]
    verify_properties: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate JSON file, as produced by the certificate subcommand.
    path: PathBuf,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match &cli.command {
        Command::Check(args) => run_check(args),
        Command::Matrix(args) => run_matrix(args),
        Command::Det(args) => run_det(args),
        Command::Certificate(args) => run_certificate(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_weights(args: &CommonArgs) -> Result<WeightSet, Failure> {
    match &args.file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            input::weights_from_file(&text).map_err(usage)
        }
        None => input::weights_from_args(&args.weights).map_err(usage),
    }
}

fn build_matrix(w: &WeightSet, args: &CommonArgs) -> Result<PartitionMatrix, Failure> {
    let max_n = args.max_n.unwrap_or(DEFAULT_MAX_N as u64) as usize;
    PartitionMatrix::build_with_max(w, max_n).map_err(|e| Failure {
        code: EXIT_LIMIT,
        message: e.to_string(),
    })
}

fn emit(dest: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match dest {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn weight_strings(w: &WeightSet) -> Vec<String> {
    w.weights().iter().map(|v| v.to_string()).collect()
}

fn witness_file(w: &PartitionWitness) -> WitnessFile {
    WitnessFile {
        side: w.side().to_string(),
        complement: w.complement().to_string(),
    }
}

fn reject_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(usage("csv output only exists for the matrix subcommand"));
    }
    Ok(())
}

fn run_check(args: &CommonArgs) -> Result<u8, Failure> {
    reject_csv(args.format)?;
    let w = load_weights(args)?;
    let pm = build_matrix(&w, args)?;
    let det = bareiss_determinant(pm.body());
    let witness = brute_force_partition(&w);
    let partitionable = witness.is_some();
    let verdicts_agree = partitionable == det.is_zero();

    let text = match args.format {
        Format::Json => to_canonical_json(&CheckReport {
            n: w.len(),
            weights: weight_strings(&w),
            partitionable,
            witness: witness.as_ref().map(witness_file),
            det: det.to_string(),
            verdicts_agree,
        }),
        _ => {
            if !verdicts_agree {
                format!(
                    "DISAGREEMENT: oracle says partitionable={partitionable}, det = {det}\n"
                )
            } else if let Some(wit) = &witness {
                format!("partitionable: {wit}; det = 0\n")
            } else {
                format!("non-partitionable; det = {det}\n")
            }
        }
    };
    emit(&args.output, &text)?;
    Ok(if !verdicts_agree {
        EXIT_DISAGREE
    } else if partitionable {
        0
    } else {
        1
    })
}

fn run_matrix(args: &MatrixArgs) -> Result<u8, Failure> {
    let w = load_weights(&args.common)?;
    let pm = build_matrix(&w, &args.common)?;
    let report = args.verify_properties.then(|| pm.check_properties());

    let text = match args.common.format {
        Format::Csv => {
            if report.is_some() {
                return Err(usage("--verify-properties makes no sense with csv output"));
            }
            pm.body().to_csv()
        }
        Format::Json => to_canonical_json(&matrix_to_file(&pm, report.as_ref())),
        Format::Text => {
            let mut t = pm.render();
            if let Some(r) = &report {
                t.push('\n');
                for check in &r.checks {
                    let mark = if check.passed { "pass" } else { "FAIL" };
                    t.push_str(&format!("{mark}  {}\n", check.name));
                }
            }
            t
        }
    };
    emit(&args.common.output, &text)?;
    // A failed structural check can only mean a broken build.
    Ok(match &report {
        Some(r) if !r.all_passed() => EXIT_DISAGREE,
        _ => 0,
    })
}

fn run_det(args: &CommonArgs) -> Result<u8, Failure> {
    reject_csv(args.format)?;
    let w = load_weights(args)?;
    let pm = build_matrix(&w, args)?;
    let elimination = bareiss_determinant(pm.body());
    let pp = partition_polynomial(&w);
    let matches = elimination == pp.value;

    let text = match args.format {
        Format::Json => to_canonical_json(&DetReport {
            n: w.len(),
            weights: weight_strings(&w),
            bareiss: elimination.to_string(),
            product: pp.value.to_string(),
            factors: pp.factors.iter().map(|f| f.to_string()).collect(),
            matches,
        }),
        _ => {
            let factors: Vec<String> = pp.factors.iter().map(|f| f.to_string()).collect();
            format!(
                "bareiss = {elimination}\nproduct = {}\nfactors: {}\n{}\n",
                pp.value,
                factors.join(", "),
                if matches { "MATCH" } else { "MISMATCH" }
            )
        }
    };
    emit(&args.output, &text)?;
    Ok(if matches { 0 } else { EXIT_DISAGREE })
}

fn run_certificate(args: &CommonArgs) -> Result<u8, Failure> {
    reject_csv(args.format)?;
    let w = load_weights(args)?;
    let pm = build_matrix(&w, args)?;
    let cert = match build_certificate(&pm) {
        Ok(cert) => cert,
        Err(p) => {
            let text = match args.format {
                Format::Json => to_canonical_json(&NoCertificateReport {
                    partitionable: true,
                    witness: witness_file(&p.witness),
                }),
                _ => format!("partitionable: {}; no certificate exists\n", p.witness),
            };
            // The witness goes to stdout: -o names the certificate file,
            // and no certificate exists to write.
            print!("{text}");
            return Ok(1);
        }
    };

    // Never emit an unverified certificate.
    let sys = encode(&w);
    if let Verification::Fail(residual) = verify_certificate(&cert, &sys) {
        return Err(Failure {
            code: EXIT_DISAGREE,
            message: format!(
                "built certificate failed verification (residual {residual}); refusing to emit"
            ),
        });
    }

    let det = bareiss_determinant(pm.body());
    let json = to_canonical_json(&certificate_to_file(&cert, &det, "solve"));
    match &args.output {
        Some(path) => {
            fs::write(path, &json)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            if args.format == Format::Text {
                println!("verified certificate written to {}", path.display());
            }
        }
        None => print!("{json}"),
    }
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    reject_csv(args.format)?;
    let raw = fs::read_to_string(&args.path)
        .map_err(|e| usage(format!("cannot read {}: {e}", args.path.display())))?;
    let file: CertificateFile =
        serde_json::from_str(&raw).map_err(|e| usage(format!("malformed certificate: {e}")))?;
    let cert = certificate_from_file(&file).map_err(|e| usage(e.to_string()))?;
    let sys = encode(cert.weights());

    let (code, text) = match verify_certificate(&cert, &sys) {
        Verification::Pass => (
            0,
            match args.format {
                Format::Json => to_canonical_json(&VerifyReport {
                    pass: true,
                    residual: None,
                }),
                _ => "PASS\n".to_string(),
            },
        ),
        Verification::Fail(residual) => (
            1,
            match args.format {
                Format::Json => to_canonical_json(&VerifyReport {
                    pass: false,
                    residual: Some(poly_to_file(&residual)),
                }),
                _ => format!("FAIL\nresidual: {residual}\n"),
            },
        ),
    };
    emit(&args.output, &text)?;
    Ok(code)
}
