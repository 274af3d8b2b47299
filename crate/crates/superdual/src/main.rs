//! Command-line front end: partition utilities, characters, highest-weight
//! vectors, and the verification suites, with deterministic text or JSON
//! output.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails (the first
//! discrepancy is printed), 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;
use superdual::cinfty;
use superdual::glroots::{self, BorelWord, Weight};
use superdual::partitions::{self, HookContext, Partition};
use superdual::polyring::{LaurentSeries, VarSet};
use superdual::superweyl::{self, Dims as WeylDims};
use superdual::symfunc;
use superdual::tableaux;
use superdual::tensor::{self, Dims as TensorDims};

#[derive(Parser)]
#[command(
    name = "superdual",
    version,
    about = "Exact combinatorics of gl(m|n)/osp dualities"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugate (transpose) a partition
    Conjugate { lambda: String },
    /// Modified Frobenius coordinates (p | q) of a partition
    Frobenius { lambda: String },
    /// Is the partition an (m|n)-hook partition?
    HookCheck {
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Hook Schur polynomial hs_lambda(x, y)
    Hs {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Character by hook-tableau enumeration (content-count formula)
    CharTableaux {
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Character of the induced module K(weight)
    KacChar {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Hook partition whose natural label is used as the weight
        #[arg(long, conflicts_with_all = ["delta", "epsilon"])]
        lambda: Option<String>,
        /// Comma-separated integer delta coefficients
        #[arg(long, requires = "epsilon", allow_hyphen_values = true)]
        delta: Option<String>,
        /// Comma-separated integer epsilon coefficients
        #[arg(long, requires = "delta", allow_hyphen_values = true)]
        epsilon: Option<String>,
    },
    /// Typicality and degree of atypicality of a weight
    Typicality {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with_all = ["delta", "epsilon"])]
        lambda: Option<String>,
        #[arg(long, requires = "epsilon", allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long, requires = "delta", allow_hyphen_values = true)]
        epsilon: Option<String>,
    },
    /// Extremal weight of the hook module for a Borel word
    Extremal {
        lambda: String,
        /// Word over {d, e}, e.g. "dee"
        #[arg(long)]
        word: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Natural weight labels (mu^natural, mu^natural_minus)
    OspLabels {
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Joint highest-weight vector in the polynomial superalgebra
    Hwv {
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Tensor-power decomposition report
    Decompose {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Run a verification suite; exits 1 on failure
    Verify {
        /// One of: sergeev, gl-howe, cauchy, sp-osp-comm, hwv, dual-c, sp-osp
        suite: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
    },
    /// Truncated infinite-rank type-C character
    CinfChar {
        lambda: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Truncated orthosymplectic character
    OspChar {
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
        #[arg(long, default_value_t = 3)]
        kmax: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>()
        .map_err(|e| format!("--lambda / partition argument: {e}"))
}

fn parse_int_list(s: &str, flag: &str) -> Result<Vec<i64>, String> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| format!("--{flag}: {e}"))
        })
        .collect()
}

fn weight_from_args(
    ctx: HookContext,
    lambda: &Option<String>,
    delta: &Option<String>,
    epsilon: &Option<String>,
) -> Result<Weight, String> {
    if let Some(l) = lambda {
        let lam = parse_partition(l)?;
        let (nat, _) = partitions::osp_labels(&lam, ctx).map_err(|e| format!("--lambda: {e}"))?;
        Ok(Weight::from_integer_lists(&nat.delta, &nat.epsilon))
    } else if let (Some(ds), Some(es)) = (delta, epsilon) {
        let d = parse_int_list(ds, "delta")?;
        let e = parse_int_list(es, "epsilon")?;
        if d.len() != ctx.m || e.len() != ctx.n {
            return Err(format!(
                "--delta/--epsilon: expected {} and {} coefficients",
                ctx.m, ctx.n
            ));
        }
        Ok(Weight::from_integer_lists(&d, &e))
    } else {
        Err("one of --lambda or --delta/--epsilon is required".into())
    }
}

fn emit_series(s: &LaurentSeries, format: Format) -> String {
    match format {
        Format::Text => s.render(),
        Format::Json => serde_json::to_string(&s.to_json()).unwrap(),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match &cli.command {
        Command::Conjugate { lambda } => {
            let lam = parse_partition(lambda)?;
            let conj = partitions::conjugate(&lam);
            match format {
                Format::Text => println!("{conj}"),
                Format::Json => println!("{}", json!({ "lambda": conj.parts() })),
            }
        }
        Command::Frobenius { lambda } => {
            let lam = parse_partition(lambda)?;
            let fc = partitions::modified_frobenius(&lam);
            let join = |v: &[u32]| {
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            match format {
                Format::Text => println!("p={} q={}", join(&fc.p), join(&fc.q)),
                Format::Json => println!("{}", json!({ "p": fc.p, "q": fc.q })),
            }
        }
        Command::HookCheck { lambda, m, n } => {
            let lam = parse_partition(lambda)?;
            let hook = partitions::is_hook(&lam, HookContext::new(*m, *n));
            match format {
                Format::Text => println!("{hook}"),
                Format::Json => println!("{}", json!({ "hook": hook })),
            }
        }
        Command::Hs { m, n, lambda } => {
            let lam = parse_partition(lambda)?;
            let vars = VarSet::new(&[("x", *m), ("y", *n)]);
            let hs = symfunc::hook_schur(&lam, &vars, 0, 1);
            match format {
                Format::Text => println!("{}", hs.poly.render()),
                Format::Json => println!(
                    "{}",
                    json!({
                        "structurally_zero": hs.structurally_zero,
                        "series": hs.poly.to_json(),
                    })
                ),
            }
        }
        Command::CharTableaux { lambda, m, n } => {
            let lam = parse_partition(lambda)?;
            let ctx = HookContext::new(*m, *n);
            let vars = VarSet::new(&[("x", *m), ("y", *n)]);
            let ch = tableaux::character_via_tableaux(&lam, ctx, &vars, 0, 1)
                .map_err(|e| e.to_string())?;
            println!("{}", emit_series(&ch, format));
        }
        Command::KacChar {
            m,
            n,
            lambda,
            delta,
            epsilon,
        } => {
            let ctx = HookContext::new(*m, *n);
            let w = weight_from_args(ctx, lambda, delta, epsilon)?;
            let vars = VarSet::new(&[("x", *m), ("y", *n)]);
            let ch = glroots::kac_character(&w, ctx, &vars, 0, 1).map_err(|e| e.to_string())?;
            println!("{}", emit_series(&ch, format));
        }
        Command::Typicality {
            m,
            n,
            lambda,
            delta,
            epsilon,
        } => {
            let ctx = HookContext::new(*m, *n);
            let w = weight_from_args(ctx, lambda, delta, epsilon)?;
            let (typ, deg) = glroots::typicality(&w, ctx).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    if typ {
                        println!("typical");
                    } else {
                        println!("atypical degree={deg}");
                    }
                }
                Format::Json => println!("{}", json!({ "typical": typ, "degree": deg })),
            }
        }
        Command::Extremal { lambda, word, m, n } => {
            let ctx = HookContext::new(*m, *n);
            let lam = parse_partition(lambda)?;
            let w = BorelWord::parse(word, ctx).map_err(|e| format!("--word: {e}"))?;
            let ext = glroots::extremal_weight(&lam, &w, ctx).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{ext}"),
                Format::Json => println!("{}", ext.to_json(ctx)),
            }
        }
        Command::OspLabels { lambda, m, n } => {
            let lam = parse_partition(lambda)?;
            let ctx = HookContext::new(*m, *n);
            let (nat, natm) = partitions::osp_labels(&lam, ctx).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("natural: {nat}; minus: {natm}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "natural": { "delta": nat.delta, "epsilon": nat.epsilon },
                        "natural_minus": { "delta": natm.delta, "epsilon": natm.epsilon },
                    })
                ),
            }
        }
        Command::Hwv { lambda, m, n, d } => {
            let lam = parse_partition(lambda)?;
            let dims = WeylDims::new(*m, *n, *d);
            let v = superweyl::highest_weight_vector(&lam, dims).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", v.render()),
                Format::Json => println!("{}", json!({ "vector": v.render() })),
            }
        }
        Command::Decompose { m, n, d } => {
            let rep = tensor::decompose(TensorDims::new(*m, *n, *d)).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!(
                        "dim {}^{} = {}; sum hs*specht = {}; identity {}",
                        m + n,
                        d,
                        rep.total_dim,
                        rep.sum_hs_times_specht,
                        ok_str(rep.dimension_identity_ok)
                    );
                    for l in &rep.lambdas {
                        println!(
                            "lambda={} hook={} hs_dim={} specht={} singular={} {}",
                            l.lambda,
                            l.hook,
                            l.hs_dim,
                            l.specht_dim,
                            l.singular_dim,
                            ok_str(l.multiplicity_ok())
                        );
                    }
                }
                Format::Json => println!("{}", serde_json::to_string(&rep).unwrap()),
            }
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify {
            suite,
            m,
            n,
            d,
            ell,
            cutoff,
            kmax,
        } => {
            return run_verify(suite, *m, *n, *d, *ell, *cutoff, *kmax, format);
        }
        Command::CinfChar {
            lambda,
            d,
            cutoff,
            kmax,
            vars,
        } => {
            let lam = parse_partition(lambda)?;
            let ch = cinfty::cinf_character(&lam, *d, *cutoff, *kmax, *vars)
                .map_err(|e| e.to_string())?;
            println!("{}", emit_series(&ch, format));
        }
        Command::OspChar {
            lambda,
            m,
            n,
            ell,
            cutoff,
            kmax,
        } => {
            let lam = parse_partition(lambda)?;
            let ctx = HookContext::new(*m, *n);
            let ch = cinfty::osp_character(&lam, ctx, *ell, *cutoff, *kmax)
                .map_err(|e| e.to_string())?;
            println!("{}", emit_series(&ch, format));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    suite: &str,
    m: usize,
    n: usize,
    d: usize,
    ell: usize,
    cutoff: i64,
    kmax: u64,
    format: Format,
) -> Result<ExitCode, String> {
    let (status, detail): (bool, serde_json::Value) = match suite {
        "sergeev" => {
            let rep = tensor::decompose(TensorDims::new(m, n, d)).map_err(|e| e.to_string())?;
            let failed: Vec<String> = rep
                .lambdas
                .iter()
                .filter(|l| !l.multiplicity_ok())
                .map(|l| l.lambda.clone())
                .collect();
            (
                rep.passed(),
                json!({
                    "suite": "sergeev", "m": m, "n": n, "d": d,
                    "dimension_identity_ok": rep.dimension_identity_ok,
                    "character_identity_ok": rep.character_identity_ok,
                    "commuting_ok": rep.commuting_ok,
                    "failed_multiplicities": failed,
                }),
            )
        }
        "gl-howe" => {
            let ok = symfunc::verify_gl_howe_identity(m, n, d, cutoff)
                .map_err(|e| e.to_string())?;
            (
                ok,
                json!({ "suite": "gl-howe", "m": m, "n": n, "d": d, "cutoff": cutoff }),
            )
        }
        "cauchy" => {
            let ok = symfunc::verify_cauchy_identity(m, d, cutoff).map_err(|e| e.to_string())?;
            (
                ok,
                json!({ "suite": "cauchy", "m": m, "d": d, "cutoff": cutoff }),
            )
        }
        "sp-osp-comm" => {
            let dims = WeylDims::new(m, n, d);
            let sp = superweyl::dual_pair_generators(superweyl::FamilyKind::SpD, dims)
                .map_err(|e| e.to_string())?;
            let mut osp = superweyl::dual_pair_generators(superweyl::FamilyKind::GlMnShifted, dims)
                .map_err(|e| e.to_string())?;
            osp.extend(
                superweyl::dual_pair_generators(superweyl::FamilyKind::OspExtra, dims)
                    .map_err(|e| e.to_string())?,
            );
            let ok = superweyl::families_supercommute(&sp, &osp, dims, 4)
                .map_err(|e| e.to_string())?;
            (
                ok,
                json!({ "suite": "sp-osp-comm", "m": m, "n": n, "d": d, "degree": 4 }),
            )
        }
        "hwv" => {
            let dims = WeylDims::new(m, n, d);
            let checks =
                superweyl::verify_highest_weight_vectors(dims, 4).map_err(|e| e.to_string())?;
            let failed: Vec<String> = checks
                .iter()
                .filter(|c| !c.passed())
                .map(|c| c.lambda.clone())
                .collect();
            (
                failed.is_empty(),
                json!({ "suite": "hwv", "m": m, "n": n, "d": d, "failed": failed }),
            )
        }
        "dual-c" => {
            let rep = cinfty::verify_dual_c(ell, cutoff, kmax).map_err(|e| e.to_string())?;
            let status = rep.status;
            (status, serde_json::to_value(rep).unwrap())
        }
        "sp-osp" => {
            let rep = cinfty::verify_sp_osp(m, n, ell, cutoff, kmax).map_err(|e| e.to_string())?;
            let status = rep.status;
            (status, serde_json::to_value(rep).unwrap())
        }
        other => {
            return Err(format!(
                "unknown suite {other:?}; expected one of sergeev, gl-howe, cauchy, sp-osp-comm, hwv, dual-c, sp-osp"
            ))
        }
    };
    match format {
        Format::Text => {
            println!("{suite}: {}", if status { "pass" } else { "FAIL" });
            if !status {
                println!("detail: {detail}");
            }
        }
        Format::Json => {
            let mut v = detail;
            v["status"] = json!(status);
            println!("{v}");
        }
    }
    Ok(if status {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
