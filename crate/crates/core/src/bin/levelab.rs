use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use levelab::b3;
use levelab::beta;
use levelab::brown::{self, Enhancement, EnhancementRecord};
use levelab::group_ring;
use levelab::homology::{SpinForm, Z2Class};
use levelab::magnus::{self, AutomorphismRecord, EndoF};
use levelab::reproduce;
use levelab::symplectic::{self, IntVector, MatrixRecord, SympElement};
use levelab::Error;

#[derive(Parser)]
#[command(name = "levelab", version, about = "Level-d congruence, Brown invariant and mod-d Johnson computations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override the number of sampled trials.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit human-readable text.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Symplectic congruence subgroup computations.
    Symp {
        #[command(subcommand)]
        op: SympOp,
    },
    /// Brown invariant of a Z_4 enhancement read from JSON.
    Brown {
        #[arg(long)]
        input: PathBuf,
    },
    /// The Z_8 group-ring quotient.
    Module {
        #[command(subcommand)]
        op: ModuleOp,
    },
    /// The homomorphism beta_sigma on the group ring.
    Beta {
        #[command(subcommand)]
        op: BetaOp,
    },
    /// Boolean polynomial counts.
    B3 {
        #[command(subcommand)]
        op: B3Op,
    },
    /// Mod-d Johnson homomorphism.
    Johnson {
        #[command(subcommand)]
        op: JohnsonOp,
    },
    /// Run the acceptance suite.
    Reproduce {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Subcommand)]
enum SympOp {
    /// Closed-form abelianization of Gamma_g[d].
    Abelianization {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: u64,
    },
    /// Compare both sides of the transvection power identity.
    VerifyLemmaMatrix {
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, allow_hyphen_values = true)]
        b1: i64,
        #[arg(long, allow_hyphen_values = true)]
        a2: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: usize,
    },
    /// T_{x+y} T_{x-y} = T_x^2 T_y^2 for comma-separated integer vectors.
    VerifyLantern {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Level and Igusa membership of a matrix read from JSON.
    Membership {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: u64,
    },
    /// Evaluate m, m1 or m2 on a matrix read from JSON.
    M {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = MKind::M)]
        which: MKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MKind {
    M,
    M1,
    M2,
}

#[derive(Subcommand)]
enum ModuleOp {
    /// Invariant factors of Z_8[H] / L.
    Quotient {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        closed: bool,
    },
    /// Sampled check of the Delta recurrence.
    CheckRecurrence {
        #[arg(long)]
        g: usize,
    },
}

#[derive(Subcommand)]
enum BetaOp {
    /// Values of beta_sigma([C]) on every class.
    Eval {
        #[arg(long)]
        g: usize,
        /// Spin form as "a1..ag|b1..bg" values on the basis.
        #[arg(long = "spin", alias = "sigma")]
        sigma: Option<String>,
        /// The class C as "a1..ag|b1..bg".
        #[arg(long)]
        class: String,
    },
    /// Invariant factors of the images of Psi beta_sigma and beta_sigma.
    Image {
        #[arg(long)]
        g: usize,
        #[arg(long = "spin", alias = "sigma")]
        sigma: Option<String>,
    },
    /// beta_sigma kills L.
    #[command(alias = "check-L")]
    CheckL {
        #[arg(long)]
        g: usize,
        #[arg(long = "spin", alias = "sigma")]
        sigma: Option<String>,
    },
}

#[derive(Subcommand)]
enum B3Op {
    /// Dimensions and the counting identity.
    Dims {
        #[arg(long)]
        g: usize,
    },
}

#[derive(Subcommand)]
enum JohnsonOp {
    /// tau_d of an automorphism read from JSON.
    Tau {
        #[arg(long)]
        input: PathBuf,
        /// Override the level stored in the file.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Odd-level rank formula.
    Rank {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        closed: bool,
    },
    /// Write the built-in automorphism fixtures as JSON files.
    Fixtures {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    parameters: Value,
    results: Value,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
}

impl RunReport {
    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool) -> Check {
    Check {
        name: name.to_string(),
        passed,
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_vector(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Lib(Error::Parse(format!("bad integer {t:?}"))))
        })
        .collect()
}

fn spin(g: usize, s: &Option<String>) -> Result<SpinForm, Failure> {
    match s {
        None => Ok(SpinForm::sigma0(g)),
        Some(s) => {
            let f: SpinForm = s.parse()?;
            if f.genus() != g {
                return Err(Error::GenusMismatch(g, f.genus()).into());
            }
            Ok(f)
        }
    }
}

fn genus_guard(g: usize) -> Result<(), Failure> {
    if g == 0 || g > levelab::homology::MAX_GENUS / 2 {
        return Err(Error::SizeLimit(format!("genus {g} outside 1..={}", levelab::homology::MAX_GENUS / 2)).into());
    }
    Ok(())
}

fn run_symp(op: &SympOp) -> Result<RunReport, Failure> {
    Ok(match op {
        SympOp::Abelianization { g, d } => {
            if *g < 2 || *d < 2 {
                return Err(Error::InvalidLevel(*d as i64).into());
            }
            let f = symplectic::abelianization_formula(*g, *d);
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "d": d}),
                results: json!({"abelianization": f.to_string(), "invariant_factors": f.factors_u64()}),
                checks: vec![],
            }
        }
        SympOp::VerifyLemmaMatrix { a1, b1, a2, d, g } => {
            if *g < 2 {
                return Err(Error::DimensionMismatch { expected: 2, got: *g }.into());
            }
            if *d < 1 {
                return Err(Error::InvalidLevel(*d).into());
            }
            let exact = symplectic::verify_lemma_matrix(*a1, *b1, *a2, *d, *g);
            let mod_d2 = symplectic::verify_lemma_matrix_mod_d2(*a1, *b1, *a2, *d, *g);
            RunReport {
                command: vec![],
                parameters: json!({"a1": a1, "b1": b1, "a2": a2, "d": d, "g": g}),
                results: json!({"exact": exact, "a2_squared_mod_d2": mod_d2}),
                checks: vec![check("exact", exact)],
            }
        }
        SympOp::VerifyLantern { x, y } => {
            let xv = parse_vector(x)?;
            let yv = parse_vector(y)?;
            if xv.len() % 2 != 0 || xv.is_empty() {
                return Err(Error::DimensionMismatch { expected: 2, got: xv.len() }.into());
            }
            let g = xv.len() / 2;
            let xi = IntVector::from_i64(g, &xv)?;
            let yi = IntVector::from_i64(yv.len() / 2, &yv)?;
            let ok = symplectic::verify_lantern(&xi, &yi)?;
            RunReport {
                command: vec![],
                parameters: json!({"x": xv, "y": yv}),
                results: json!({"holds": ok}),
                checks: vec![check("lantern", ok)],
            }
        }
        SympOp::Membership { input, d } => {
            let rec: MatrixRecord = read_json(input)?;
            let a = SympElement::from_record(&rec)?;
            let level = symplectic::in_level(&a, *d);
            let igusa = if d % 2 == 0 {
                json!(symplectic::in_igusa(&a, *d)?)
            } else {
                Value::Null
            };
            RunReport {
                command: vec![],
                parameters: json!({"input": input, "d": d}),
                results: json!({"in_level": level, "in_igusa": igusa}),
                checks: vec![],
            }
        }
        SympOp::M { input, d, which } => {
            let rec: MatrixRecord = read_json(input)?;
            let a = SympElement::from_record(&rec)?;
            let (name, v): (&str, Vec<u64>) = match which {
                MKind::M => ("m", symplectic::m_map(&a, *d)?),
                MKind::M1 => ("m1", symplectic::m1_map(&a, *d)?.into_iter().map(u64::from).collect()),
                MKind::M2 => ("m2", symplectic::m2_map(&a, *d)?.into_iter().map(u64::from).collect()),
            };
            RunReport {
                command: vec![],
                parameters: json!({"input": input, "d": d, "map": name}),
                results: json!({ name: v }),
                checks: vec![],
            }
        }
    })
}

fn run_module(op: &ModuleOp, common: &Common) -> Result<RunReport, Failure> {
    Ok(match op {
        ModuleOp::Quotient { g, closed } => {
            genus_guard(*g)?;
            let f = group_ring::quotient_structure(*g, *closed)?;
            let counts: Vec<Value> = f
                .counts()
                .iter()
                .map(|(order, mult)| json!({"order": order, "multiplicity": mult}))
                .collect();
            let mut checks = vec![];
            if !closed {
                checks.push(check("matches Z_8^2g + Z_4^C(2g,2) + Z_2^C(2g,3)", f == group_ring::expected_open_structure(*g)));
            }
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "closed": closed}),
                results: json!({"structure": f.to_string(), "invariant_factors": counts}),
                checks,
            }
        }
        ModuleOp::CheckRecurrence { g } => {
            genus_guard(*g)?;
            use rand::Rng;
            let mut rng = levelab::rng(common.seed);
            let trials = common.trials.unwrap_or(200);
            let mut bad = 0;
            for _ in 0..trials {
                let sigma = SpinForm::new(*g, rng.gen_range(0..(1u32 << (2 * g))));
                let n = rng.gen_range(2..=6);
                let xs: Vec<Z2Class> = (0..n)
                    .map(|_| Z2Class::new(*g, rng.gen_range(0..(1u32 << (2 * g)))))
                    .collect();
                if !group_ring::delta_recurrence_holds(&sigma, &xs) {
                    bad += 1;
                }
            }
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "seed": common.seed, "trials": trials}),
                results: json!({"failures": bad}),
                checks: vec![check("recurrence", bad == 0)],
            }
        }
    })
}

fn run_beta(op: &BetaOp) -> Result<RunReport, Failure> {
    Ok(match op {
        BetaOp::Eval { g, sigma, class } => {
            genus_guard(*g)?;
            let s = spin(*g, sigma)?;
            let c: Z2Class = class.parse()?;
            if c.genus() != *g {
                return Err(Error::GenusMismatch(*g, c.genus()).into());
            }
            let f = beta::beta_generator(&s, &c)?;
            let values: serde_json::Map<String, Value> = Z2Class::all(*g)
                .map(|x| (x.to_string(), json!(f.at(&x))))
                .collect();
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "sigma": s.to_string(), "class": c.to_string()}),
                results: json!({"values": values}),
                checks: vec![],
            }
        }
        BetaOp::Image { g, sigma } => {
            let s = spin(*g, sigma)?;
            let psi = beta::image_of_psi_beta(&s)?;
            let full = beta::image_of_beta(&s)?;
            let order_log = full.order().map(|o| o.bits() - 1);
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "sigma": s.to_string()}),
                results: json!({"psi_beta_image": psi.to_string(), "beta_image": full.to_string(), "beta_image_log2_order": order_log}),
                checks: vec![check("psi image matches", psi == group_ring::expected_open_structure(*g))],
            }
        }
        BetaOp::CheckL { g, sigma } => {
            let s = spin(*g, sigma)?;
            let ok = beta::kernel_contains_l(&s)?;
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "sigma": s.to_string()}),
                results: json!({"kernel_contains_l": ok}),
                checks: vec![check("kernel contains L", ok)],
            }
        }
    })
}

fn run_b3(op: &B3Op) -> Result<RunReport, Failure> {
    let B3Op::Dims { g } = op;
    if *g == 0 || *g > 10 {
        return Err(Error::SizeLimit(format!("genus {g} outside 1..=10")).into());
    }
    let (full, mod_one) = b3::b3_log_orders(*g);
    let ok = group_ring::counting_identity(*g);
    Ok(RunReport {
        command: vec![],
        parameters: json!({"g": g}),
        results: json!({
            "dim_b3": full,
            "log2_b3_mod_one": mod_one,
            "alpha_rank": b3::alpha_rank(*g),
            "closed_dim_b3": b3::closed_b3_dimension(*g),
        }),
        checks: vec![check("counting identity", ok)],
    })
}

fn johnson_json(v: &magnus::JohnsonValue) -> Value {
    json!(v.mats)
}

fn run_johnson(op: &JohnsonOp) -> Result<RunReport, Failure> {
    Ok(match op {
        JohnsonOp::Tau { input, d } => {
            let rec: AutomorphismRecord = read_json(input)?;
            let mut phi = EndoF::from_record(&rec)?;
            if let Some(d) = d {
                phi = phi.with_level(*d);
            }
            let bp = magnus::boundary_preserved(&phi);
            let t = magnus::tau(&phi)?;
            let lambda3 = if phi.level() % 2 == 1 {
                json!(magnus::in_lambda3(&t)?)
            } else {
                Value::Null
            };
            RunReport {
                command: vec![],
                parameters: json!({"input": input, "g": phi.genus(), "d": phi.level()}),
                results: json!({"tau": johnson_json(&t), "zero": t.is_zero(), "in_lambda3": lambda3, "boundary_preserved": bp}),
                checks: vec![check("boundary preserved", bp)],
            }
        }
        JohnsonOp::Rank { g, d, closed } => {
            let r = magnus::odd_level_rank_formula(*g, *d, *closed)?;
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "d": d, "closed": closed}),
                results: serde_json::to_value(&r).expect("serializable"),
                checks: vec![check("closed form", r.matches())],
            }
        }
        JohnsonOp::Fixtures { g, d, out } => {
            fs::create_dir_all(out).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            let mut list = magnus::fixtures::level_d(*g, *d);
            if *g >= 2 {
                list.push(("bounding_pair", magnus::fixtures::bounding_pair(*g, *d)));
            }
            let mut written = vec![];
            for (name, f) in list {
                let path = out.join(format!("{name}_g{g}_d{d}.json"));
                let text = serde_json::to_string_pretty(&f.to_record()).expect("serializable") + "\n";
                fs::write(&path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                written.push(path);
            }
            RunReport {
                command: vec![],
                parameters: json!({"g": g, "d": d}),
                results: json!({"written": written}),
                checks: vec![],
            }
        }
    })
}

fn run_brown(input: &Path) -> Result<RunReport, Failure> {
    let rec: EnhancementRecord = read_json(input)?;
    let e = Enhancement::from_record(&rec)?;
    let g = e.gauss_sum();
    let b = brown::brown_invariant(&e)?;
    Ok(RunReport {
        command: vec![],
        parameters: json!({"input": input}),
        results: json!({"brown": b, "gauss_sum": {"re": g.re.to_string(), "im": g.im.to_string()}, "value_counts": e.value_counts()}),
        checks: vec![],
    })
}

fn run_reproduce(only: &[u8], common: &Common) -> Result<(RunReport, String), Failure> {
    let cfg = reproduce::Config {
        seed: common.seed,
        trials: common.trials,
    };
    for id in only {
        if !(1..=20).contains(id) {
            return Err(Error::Parse(format!("no criterion {id}")).into());
        }
    }
    let results: Vec<_> = if only.is_empty() {
        reproduce::run_all(&cfg)
    } else {
        only.iter().map(|&id| reproduce::run(id, &cfg)).collect()
    };
    let table = reproduce::format_table(&results);
    let manifest = json!({
        "seed": cfg.seed,
        "trials_override": cfg.trials,
        "defaults": {
            "lantern_pairs": reproduce::LANTERN_PAIRS,
            "commutator_pairs": reproduce::COMMUTATOR_PAIRS,
            "m_samples": reproduce::M_SAMPLES,
            "beta_delta_tuples": reproduce::BETA_DELTA_TUPLES,
            "random_l_generators": reproduce::RANDOM_L_GENERATORS,
            "kernel_words": reproduce::KERNEL_WORDS,
        },
    });
    let report = RunReport {
        command: vec![],
        parameters: manifest,
        results: serde_json::to_value(&results).expect("serializable"),
        checks: results
            .iter()
            .map(|r| check(&format!("{}: {}", r.id, r.name), r.passed))
            .collect(),
    };
    Ok((report, table))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let mut text_override = None;
    let outcome = match &cli.command {
        Command::Symp { op } => run_symp(op),
        Command::Brown { input } => run_brown(input),
        Command::Module { op } => run_module(op, &cli.common),
        Command::Beta { op } => run_beta(op),
        Command::B3 { op } => run_b3(op),
        Command::Johnson { op } => run_johnson(op),
        Command::Reproduce { only } => run_reproduce(only, &cli.common).map(|(r, t)| {
            text_override = Some(t);
            r
        }),
    };
    let mut report = match outcome {
        Ok(r) => r,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    report.command = argv;
    if cli.common.text {
        match text_override {
            Some(t) => print!("{t}"),
            None => {
                println!("{}", serde_json::to_string_pretty(&report.results).expect("serializable"));
                for c in &report.checks {
                    println!("[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                }
            }
        }
        println!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    } else {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
