//! Command-line front end for the `bicomplex` crate.
//!
//! [`run`] parses arguments, dispatches one verb and returns the exit code
//! with the rendered report: 0 on success, 1 when a demo's checks fail, 2 on
//! input errors.

pub mod parse;

use std::collections::BTreeSet;
use std::io::Read;

use bicomplex::algebra::{
    brute_force_maximal_oracle, check_ideal, maximal_ideal_forms_demo, spectrum_unbounded_demo,
    DivisionAlgebraElem, FnAlgebra, IdealSpec, PointwiseAlgebra,
};
use bicomplex::linalg::{
    approx_point_spectrum, invariant_subspace_demo, kernel_bc, point_spectrum,
    sigma_p_not_in_ap_demo, BcMatrix, SpectralConfig, SpectrumSet,
};
use bicomplex::ring::{invertible_inside_ideal_demo, kernel_not_maximal_demo};
use bicomplex::{sample, Bicomplex, Conjugation, Hyperbolic, Report, Side, ToleranceConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub use parse::{eval_expr, parse_bicomplex, SyntaxError};

/// Largest opposite-coordinate leak accepted by the invariant-subspace demo.
pub const INVARIANCE_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "bicomplex", version, about = "Bicomplex arithmetic, ideals and operator spectra")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    /// Seed for every randomized input and check.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Zero-test tolerance.
    #[arg(long, global = true)]
    pub tol_zero: Option<f64>,
    /// Relative eigenvalue matching tolerance.
    #[arg(long, global = true)]
    pub tol_eig: Option<f64>,
    /// Print bicomplex values as [z1; z2] instead of a+bi+cj+dk.
    #[arg(long, global = true)]
    pub idempotent: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct OperatorArgs {
    /// Matrix JSON file ({"n", "entries"}); `-` reads standard input.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Order of a random matrix drawn from the seed when no file is given.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Dimension of the pointwise algebra BC^n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated points of X for C(X, BC).
    #[arg(long, value_delimiter = ',')]
    pub points: Option<Vec<String>>,
    /// Algebra descriptor JSON, {"type": "pointwise", "n": 2} or {"type": "fn", "points": [..]}.
    #[arg(long)]
    pub algebra: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression over + - * / with units i, j, k, e1, e2.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Idempotent components z1 = z - iw, z2 = z + iw.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Conjugations; all three unless --kind is given.
    Conj {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        kind: Option<u8>,
    },
    Inverse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Hyperbolic norm of a number, or operator norm of a matrix.
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// Point spectrum, optionally testing membership of --lambda.
    Spectrum {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Approximate point spectrum, optionally testing membership of --lambda.
    Apspectrum {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Basis of ker(T - lambda I).
    Kernel {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Sample the ideal axioms for --ideal {"Z1": [..], "Z2": [..]}.
    IdealCheck {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// The 2n maximal ideals, compared with the exhaustive oracle when n <= 4.
    MaximalIdeals {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Run a named counterexample or structural check.
    Demo {
        name: DemoName,
        #[command(flatten)]
        op: OperatorArgs,
        /// Input number for invertible-in-ideal and spectrum-unbounded.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Bound to exceed in spectrum-unbounded.
        #[arg(long, default_value_t = 1e9)]
        bound: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    KerNotMaximal,
    InvertibleInIdeal,
    SigmaPNotInAp,
    SpectrumUnbounded,
    InvariantSubspace,
    MaximalIdealForms,
}

impl DemoName {
    pub const ALL: [DemoName; 6] = [
        Self::KerNotMaximal,
        Self::InvertibleInIdeal,
        Self::SigmaPNotInAp,
        Self::SpectrumUnbounded,
        Self::InvariantSubspace,
        Self::MaximalIdealForms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::KerNotMaximal => "ker-not-maximal",
            Self::InvertibleInIdeal => "invertible-in-ideal",
            Self::SigmaPNotInAp => "sigma-p-not-in-ap",
            Self::SpectrumUnbounded => "spectrum-unbounded",
            Self::InvariantSubspace => "invariant-subspace",
            Self::MaximalIdealForms => "maximal-ideal-forms",
        }
    }
}

struct Outcome {
    code: i32,
    json: Value,
    text: String,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self { code: 0, json, text }
    }

    fn report(r: &Report) -> Self {
        Self {
            code: if r.passed() { 0 } else { 1 },
            json: serde_json::to_value(r).unwrap_or(Value::Null),
            text: r.to_text(),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    tol: ToleranceConfig<f64>,
    rng: ChaCha8Rng,
    input: &'a mut dyn Read,
}

type Res<T> = Result<T, String>;

/// Parses `args` (program name first), runs the command and returns the exit
/// code with the text to print. `input` backs `--matrix -`.
pub fn run<I, S>(args: I, input: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    run_cli(&cli, input)
}

pub fn run_cli(cli: &Cli, input: &mut dyn Read) -> (i32, String) {
    let defaults = ToleranceConfig::<f64>::default();
    let tol = match ToleranceConfig::new(
        cli.tol_zero.unwrap_or(defaults.zero),
        cli.tol_eig.unwrap_or(defaults.eig),
        defaults.norm,
    ) {
        Ok(t) => t,
        Err(e) => return (2, format!("error: {e}")),
    };
    let mut ctx = Ctx {
        cli,
        tol,
        rng: ChaCha8Rng::seed_from_u64(cli.seed),
        input,
    };
    match dispatch(&mut ctx) {
        Ok(out) => {
            let body = match cli.output {
                Output::Json => serde_json::to_string_pretty(&out.json).unwrap_or_default(),
                Output::Text => out.text,
            };
            (out.code, body)
        }
        Err(msg) => (2, format!("error: {msg}")),
    }
}

impl Ctx<'_> {
    fn number(&self, text: &str) -> Res<Bicomplex<f64>> {
        eval_expr(text, self.tol.zero).map_err(|e| e.annotate(text))
    }

    fn show(&self, z: &Bicomplex<f64>) -> String {
        if self.cli.idempotent {
            z.to_idempotent_string()
        } else {
            z.to_basis_string()
        }
    }

    fn value(&self, z: &Bicomplex<f64>) -> Value {
        json!({ "value": z, "basis": z.to_basis_string(), "idempotent": z.to_idempotent_string() })
    }

    fn spectral(&self) -> SpectralConfig<f64> {
        SpectralConfig {
            tol: self.tol,
            ..SpectralConfig::default()
        }
    }

    fn operator(&mut self, op: &OperatorArgs, default_n: Option<usize>) -> Res<BcMatrix<f64>> {
        match (&op.matrix, op.n.or(default_n)) {
            (Some(path), _) => {
                let text = if path == "-" {
                    let mut s = String::new();
                    self.input.read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
                    s
                } else {
                    std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
                };
                serde_json::from_str(&text).map_err(|e| format!("invalid matrix file {path}: {e}"))
            }
            (None, Some(0)) => Err("--n must be at least 1".into()),
            (None, Some(n)) => Ok(sample::bc_matrix(&mut self.rng, n)),
            (None, None) => Err("an operator is required: pass --matrix FILE or --n DIM".into()),
        }
    }
}

fn dispatch(ctx: &mut Ctx) -> Res<Outcome> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Eval { expr } => {
            let z = ctx.number(expr)?;
            let mut j = ctx.value(&z);
            j["classification"] = json!(z.classify(ctx.tol.zero));
            Ok(Outcome::ok(j, ctx.show(&z)))
        }
        Command::Decompose { expr } => {
            let z = ctx.number(expr)?;
            let (z1, z2) = z.idempotent();
            let c = bicomplex::number::complex_to_string;
            Ok(Outcome::ok(
                json!({ "z1": z1, "z2": z2, "idempotent": z.to_idempotent_string() }),
                format!("z1 = {}\nz2 = {}\n{}", c(z1), c(z2), z.to_idempotent_string()),
            ))
        }
        Command::Conj { expr, kind } => {
            let z = ctx.number(expr)?;
            let kinds: Vec<Conjugation> = match kind {
                Some(k) => vec![Conjugation::ALL[usize::from(*k) - 1]],
                None => Conjugation::ALL.to_vec(),
            };
            let mut items = Vec::new();
            let mut lines = Vec::new();
            for (k, label) in kinds.iter().map(|k| (*k, conj_label(*k))) {
                let c = z.conj(k);
                let mut v = ctx.value(&c);
                v["kind"] = json!(label);
                items.push(v);
                lines.push(format!("{label}: {}", ctx.show(&c)));
            }
            Ok(Outcome::ok(json!(items), lines.join("\n")))
        }
        Command::Inverse { expr } => {
            let z = ctx.number(expr)?;
            let inv = z.inverse(ctx.tol.zero).map_err(|e| format!("{expr}: {e}"))?;
            Ok(Outcome::ok(ctx.value(&inv), ctx.show(&inv)))
        }
        Command::Norm { expr, op } => match expr {
            Some(expr) => {
                let z = ctx.number(expr)?;
                let n = z.norm_d();
                let mut j = hyperbolic_json(&n);
                j["abs"] = json!(z.abs());
                Ok(Outcome::ok(j, format!("{}\n|Z| = {}", hyperbolic_text(&n), z.abs())))
            }
            None => {
                let t = ctx.operator(op, None)?;
                let n = t.operator_norm_d();
                Ok(Outcome::ok(hyperbolic_json(&n), hyperbolic_text(&n)))
            }
        },
        Command::Spectrum { op, lambda } | Command::Apspectrum { op, lambda } => {
            let t = ctx.operator(op, None)?;
            let cfg = ctx.spectral();
            let s = match cli.command {
                Command::Spectrum { .. } => point_spectrum(&t, &cfg),
                _ => approx_point_spectrum(&t, &cfg),
            }
            .map_err(|e| e.to_string())?;
            let mut j = json!({ "n": t.order(), "spectrum": &s });
            let mut text = spectrum_text(&s);
            if let Some(l) = lambda {
                let l = ctx.number(l)?;
                let member = s.contains(&l, cfg.tol.eig);
                j["lambda"] = serde_json::to_value(l).unwrap_or(Value::Null);
                j["member"] = json!(member);
                text.push_str(&format!("\n{} member: {member}", ctx.show(&l)));
            }
            Ok(Outcome::ok(j, text))
        }
        Command::Kernel { op, lambda } => {
            let t = ctx.operator(op, None)?;
            let l = ctx.number(lambda)?;
            let basis = kernel_bc(&t, &l, &ctx.spectral());
            let text = std::iter::once(format!("dim = {}", basis.len()))
                .chain(basis.iter().map(|v| {
                    let parts: Vec<String> = v.entries().iter().map(|e| ctx.show(e)).collect();
                    format!("({})", parts.join(", "))
                }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(
                json!({ "lambda": l, "dimension": basis.len(), "basis": basis }),
                text,
            ))
        }
        Command::IdealCheck { alg, ideal, samples } => {
            let (pointwise, _) = algebra(alg)?;
            let spec: IdealSpec = serde_json::from_str(ideal).map_err(|e| format!("invalid ideal: {e}"))?;
            let r = check_ideal(&pointwise, &spec, *samples, &mut ctx.rng, ctx.tol.zero).map_err(|e| e.to_string())?;
            Ok(Outcome::report(&r))
        }
        Command::MaximalIdeals { alg } => {
            let (pointwise, points) = algebra(alg)?;
            let list = pointwise.maximal_ideals();
            let label = |i: usize| points.as_ref().map_or_else(|| i.to_string(), |p| p[i - 1].clone());
            let described: Vec<Value> = list
                .iter()
                .map(|m| {
                    let form = match m.full_component() {
                        Some(Side::E1) => format!("e2 component vanishes at {}", label(m.z2.iter().copied().next().unwrap_or(0))),
                        _ => format!("e1 component vanishes at {}", label(m.z1.iter().copied().next().unwrap_or(0))),
                    };
                    json!({ "Z1": m.z1, "Z2": m.z2, "form": form })
                })
                .collect();
            let oracle = (pointwise.n <= 4).then(|| {
                let a: BTreeSet<&IdealSpec> = list.iter().collect();
                brute_force_maximal_oracle(pointwise.n)
                    .map(|o| o.iter().collect::<BTreeSet<_>>() == a)
                    .unwrap_or(false)
            });
            let mut text: Vec<String> = described
                .iter()
                .map(|d| format!("Z1={} Z2={}  ({})", d["Z1"], d["Z2"], d["form"].as_str().unwrap_or("")))
                .collect();
            if let Some(agree) = oracle {
                text.push(format!("exhaustive oracle agrees: {agree}"));
            }
            let code = if oracle == Some(false) { 1 } else { 0 };
            Ok(Outcome {
                code,
                json: json!({ "n": pointwise.n, "maximal_ideals": described, "oracle_agrees": oracle }),
                text: text.join("\n"),
            })
        }
        Command::Demo { name, op, z, bound, samples } => demo(ctx, *name, op, z.as_deref(), *bound, *samples),
    }
}

fn demo(ctx: &mut Ctx, name: DemoName, op: &OperatorArgs, z: Option<&str>, bound: f64, samples: usize) -> Res<Outcome> {
    let tol = ctx.tol;
    let report = match name {
        DemoName::KerNotMaximal => kernel_not_maximal_demo(tol.zero),
        DemoName::InvertibleInIdeal => {
            let z = match z {
                Some(s) => ctx.number(s)?,
                None => Bicomplex::e1_times(sample::nonzero_complex(&mut ctx.rng, 0.1)),
            };
            invertible_inside_ideal_demo(&z, tol.zero).map_err(|e| e.to_string())?.report(tol.zero)
        }
        DemoName::SigmaPNotInAp => {
            let t = ctx.operator(op, Some(3))?;
            sigma_p_not_in_ap_demo(&t, &ctx.spectral()).map_err(|e| e.to_string())?.report()
        }
        DemoName::SpectrumUnbounded => {
            let x = match z {
                Some(s) => {
                    let v = ctx.number(s)?;
                    let small = |c: bicomplex::Complex64| c.norm() <= tol.zero * v.abs().max(1.0);
                    match (small(v.z1()), small(v.z2())) {
                        (false, true) => DivisionAlgebraElem::new(Side::E1, v.z1()),
                        (true, false) => DivisionAlgebraElem::new(Side::E2, v.z2()),
                        _ => return Err(format!("{s} must lie in exactly one of e1 C(i) or e2 C(i)")),
                    }
                }
                None => DivisionAlgebraElem::new(Side::E1, sample::complex(&mut ctx.rng)),
            };
            if !(bound.is_finite() && bound > 0.0) {
                return Err("--bound must be positive and finite".into());
            }
            spectrum_unbounded_demo(&x, bound, tol.eig)
        }
        DemoName::InvariantSubspace => {
            let t = ctx.operator(op, Some(4))?;
            invariant_subspace_demo(&t, samples, &mut ctx.rng, INVARIANCE_TOL).map_err(|e| e.to_string())?
        }
        DemoName::MaximalIdealForms => maximal_ideal_forms_demo(op.n.unwrap_or(3)).map_err(|e| e.to_string())?,
    };
    Ok(Outcome::report(&report))
}

fn algebra(args: &AlgebraArgs) -> Res<(PointwiseAlgebra, Option<Vec<String>>)> {
    let fn_algebra = |points: Vec<String>| -> Res<(PointwiseAlgebra, Option<Vec<String>>)> {
        let x = FnAlgebra::new(points.clone()).map_err(|e| e.to_string())?;
        Ok((x.as_pointwise(), Some(points)))
    };
    match (&args.algebra, &args.points, args.n) {
        (Some(desc), _, _) => {
            let v: Value = serde_json::from_str(desc).map_err(|e| format!("invalid algebra descriptor: {e}"))?;
            match (v["type"].as_str(), v["points"].as_array(), v["n"].as_u64()) {
                (Some("fn"), Some(p), _) => fn_algebra(
                    p.iter()
                        .map(|s| s.as_str().map(str::to_owned).ok_or("points must be strings"))
                        .collect::<Result<_, _>>()?,
                ),
                (Some("pointwise" | "fn"), None, Some(n)) if n > 0 => Ok((PointwiseAlgebra::new(n as usize), None)),
                _ => Err(format!("unsupported algebra descriptor {desc}")),
            }
        }
        (None, Some(points), _) => fn_algebra(points.clone()),
        (None, None, Some(n)) if n > 0 => Ok((PointwiseAlgebra::new(n), None)),
        _ => Err("an algebra is required: pass --n DIM, --points a,b,.. or --algebra JSON".into()),
    }
}

fn conj_label(k: Conjugation) -> &'static str {
    match k {
        Conjugation::Dagger1 => "dagger1",
        Conjugation::Dagger2 => "dagger2",
        Conjugation::Dagger3 => "dagger3",
    }
}

fn hyperbolic_json(h: &Hyperbolic<f64>) -> Value {
    json!({ "x": h.x(), "y": h.y(), "a1": h.a1(), "a2": h.a2() })
}

fn hyperbolic_text(h: &Hyperbolic<f64>) -> String {
    format!("{h}\n= e1 {} + e2 {}", h.a1(), h.a2())
}

fn spectrum_text(s: &SpectrumSet<f64>) -> String {
    let list = |v: &[bicomplex::Complex64]| {
        v.iter().map(|c| bicomplex::number::complex_to_string(*c)).collect::<Vec<_>>().join(", ")
    };
    format!("kind: {:?}\nS1: {{{}}}\nS2: {{{}}}", s.kind, list(&s.s1), list(&s.s2)).to_lowercase()
}
