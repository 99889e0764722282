//! `pi`: batch front end for polynomial identity, central polynomial and
//! regular decomposition computations.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "pi", version)]
#[command(about = "Exact checks of polynomial identities and central polynomials")]
#[command(after_help = "EXAMPLES:
    pi check-central --algebra \"E(6)\" --poly \"[x1,x2]\"
    pi witness --poly \"[x1,x2]\"
    pi primeness-scan --algebra \"Mat(2)\" --deg-f 3 --g \"x4\"
    pi primeness-scan --algebra \"MpqE(1,1,n)\" --deg-f 2 --g \"x3*x4\" --json
    pi regular-verify --decomp \"m11e(4)\"
    pi tensor-regular --decomp \"matk(2)\" --against \"grassmann(4)\"

EXIT STATUS:
    0 holds / success, 1 fails / counterexample, 2 usage or parse error, 3 inconclusive")]
struct Cli {
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: available cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is the polynomial an identity of the algebra?
    CheckIdentity(PolyOnAlgebra),
    /// Identity, proper central or non-central
    CheckCentral(PolyOnAlgebra),
    /// Canonical form modulo [x1,x2,x3]
    Canon(PolyArg),
    /// Substitution into E giving a nonzero central value
    Witness(PolyArg),
    /// ε_σ for a degree sequence and a permutation
    Epsilon(EpsilonArgs),
    /// The f_a transform
    Transform(TransformArgs),
    /// Check P2 (and P1 for a degree sequence) of a decomposition
    RegularVerify(RegularArgs),
    /// Compare the Kronecker matrix with the inferred one on D1 ⊗ D2
    TensorRegular(TensorArgs),
    /// Is {f : f·g central} contained in the central polynomials?
    PrimenessScan(ScanArgs),
    /// Compare multilinear identities of two algebras in one degree
    CompareIdentities(CompareArgs),
}

#[derive(Args, Debug)]
struct Scale {
    /// Generator count substituted for the placeholder `n`
    #[arg(long)]
    n: Option<u32>,

    /// Lift the degree, tuple and dimension caps
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct PolyOnAlgebra {
    /// Algebra descriptor, e.g. "E(6)", "Mat(2)", "MpqE(1,1,n)", "T(E(4),E(4))"
    #[arg(long)]
    algebra: String,

    #[arg(long)]
    poly: String,

    #[command(flatten)]
    scale: Scale,
}

#[derive(Args, Debug)]
struct PolyArg {
    #[arg(long)]
    poly: String,
}

#[derive(Args, Debug)]
struct EpsilonArgs {
    /// Decomposition: grassmann(n), matk(k), m11e(n), tensor(D1,D2)
    #[arg(long)]
    decomp: String,

    /// Component indices, 0-based, e.g. "1 1 0"
    #[arg(long)]
    degrees: String,

    /// Permutation of 1..n in one-line notation, e.g. "2 1 3"
    #[arg(long)]
    perm: String,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(long)]
    decomp: String,

    #[arg(long)]
    poly: String,

    #[arg(long)]
    degrees: String,
}

#[derive(Args, Debug)]
struct RegularArgs {
    #[arg(long)]
    decomp: String,

    /// Degree sequence for a P1 search
    #[arg(long)]
    degrees: Option<String>,
}

#[derive(Args, Debug)]
struct TensorArgs {
    #[arg(long)]
    decomp: String,

    #[arg(long)]
    against: String,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    Central,
    Identity,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    algebra: String,

    /// Degree r of f
    #[arg(long)]
    deg_f: usize,

    /// Multilinear g in variables other than x1..xr
    #[arg(long)]
    g: String,

    #[arg(long, value_enum, default_value = "central")]
    mode: ModeArg,

    #[command(flatten)]
    scale: Scale,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    algebra: String,

    #[arg(long)]
    against: String,

    /// Degree m
    #[arg(long)]
    deg: usize,

    #[command(flatten)]
    scale: Scale,
}

fn emit(command: &str, json: bool, out: &Outcome) {
    if json {
        let mut doc = serde_json::Map::new();
        doc.insert("schema".into(), json!(1));
        doc.insert("command".into(), json!(command));
        doc.insert("exit_code".into(), json!(out.code));
        if let Value::Object(fields) = &out.json {
            doc.extend(fields.clone());
        }
        println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
    } else {
        for line in &out.text {
            println!("{line}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let seed = cli.seed;
    let (name, result) = match &cli.command {
        Command::CheckIdentity(a) => (
            "check-identity",
            commands::check_identity(&a.algebra, &a.poly, a.scale.n, a.scale.allow_large),
        ),
        Command::CheckCentral(a) => (
            "check-central",
            commands::check_central(&a.algebra, &a.poly, a.scale.n, a.scale.allow_large),
        ),
        Command::Canon(a) => ("canon", commands::canon(&a.poly)),
        Command::Witness(a) => ("witness", commands::witness(&a.poly)),
        Command::Epsilon(a) => ("epsilon", commands::epsilon(&a.decomp, &a.degrees, &a.perm)),
        Command::Transform(a) => (
            "transform",
            commands::transform(&a.decomp, &a.poly, &a.degrees),
        ),
        Command::RegularVerify(a) => (
            "regular-verify",
            commands::regular_verify(&a.decomp, a.degrees.as_deref()),
        ),
        Command::TensorRegular(a) => ("tensor-regular", commands::tensor_regular(&a.decomp, &a.against)),
        Command::PrimenessScan(a) => (
            "primeness-scan",
            commands::primeness_scan(
                &a.algebra,
                a.deg_f,
                &a.g,
                match a.mode {
                    ModeArg::Central => pi_core::pitest::ScanMode::Central,
                    ModeArg::Identity => pi_core::pitest::ScanMode::Identity,
                },
                a.scale.n,
                a.scale.allow_large,
                seed,
            ),
        ),
        Command::CompareIdentities(a) => (
            "compare-identities",
            commands::compare_identities(&a.algebra, &a.against, a.deg, a.scale.n, a.scale.allow_large),
        ),
    };
    let out = result.unwrap_or_else(|e| Outcome {
        code: 2,
        text: vec![format!("error: {e}")],
        json: json!({ "error": e.to_string() }),
    });
    if out.code == 2 && !cli.json {
        for line in &out.text {
            eprintln!("{line}");
        }
    } else {
        emit(name, cli.json, &out);
    }
    ExitCode::from(out.code)
}
