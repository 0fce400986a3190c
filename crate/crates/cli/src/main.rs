//! Command line driver: file ingestion, subcommands, deterministic
//! configuration, machine-readable output.
//!
//! Exit codes: 0 ok, 2 input error, 3 low confidence (without
//! --allow-low-confidence). Machine mode emits one JSON document on stdout;
//! every number carries a semantics tag: "exact", "upper-bound-whp", or
//! "bounded-exhausted".

use clap::{Args, Parser, Subcommand};
use gvcalc::analytics::{pairing, AnalyticsError};
use gvcalc::calc::{scale_g, ConditionStatus, SampleConfig, Session};
use gvcalc::format::AlgebraFile;
use gvcalc::pres::GVector;
use gvcalc::quiver::{AlgebraSpec, Arrow, Quiver, RelationTerm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gvcalc", about = "g-vector calculus over bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args, Clone)]
struct RunFlags {
    /// Field characteristic (must be prime)
    #[arg(long, global = true, default_value_t = 1_000_000_007)]
    prime: u64,
    /// RNG seed; required in machine mode
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Samples per g-vector
    #[arg(long, global = true, default_value_t = 7)]
    samples: usize,
    /// Bound for searches over the scaling parameter t
    #[arg(long, global = true, default_value_t = 6)]
    tmax: usize,
    /// Consecutive failed splitting rounds before declaring indecomposable
    #[arg(long, global = true, default_value_t = 12)]
    rounds: usize,
    /// Emit one JSON document on stdout
    #[arg(long, global = true)]
    machine: bool,
    /// Exit 0 even when results are low-confidence
    #[arg(long, global = true)]
    allow_low_confidence: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file and print its basic invariants
    AlgebraCheck { file: String },
    /// Generic decomposition of a g-vector
    Gdecomp { file: String, g: String },
    /// Sampled E-invariant e(g,h)
    Einv { file: String, g: String, h: String },
    /// Tameness probe: 2g = g ⊕ g
    Tame { file: String, g: String },
    /// Dimension vector d(g) of a general cokernel
    Dvec { file: String, g: String },
    /// dim Z_g
    Zdim { file: String, g: String },
    /// ⟨g, d(g)⟩, with the Cartan closed form when applicable
    Pairing { file: String, g: String },
    /// Full component report
    Component { file: String, g: String },
    /// Ray / regularity / non-decreasing condition probes
    Conditions { file: String, g: String },
    /// Random search for non-decreasing-condition violations
    Hunt {
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_arrows: usize,
        #[arg(long, default_value_t = 2)]
        max_relations: usize,
        #[arg(long, default_value_t = 3)]
        max_nilpotency: usize,
        #[arg(long, default_value_t = 10)]
        budget: usize,
    },
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_g(s: &str, n: usize) -> Result<GVector, InputError> {
    let g: Result<GVector, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let g = g.map_err(|e| InputError(format!("bad g-vector {s:?}: {e}")))?;
    if g.len() != n {
        return Err(InputError(format!(
            "g-vector has length {}, algebra has {} vertices",
            g.len(),
            n
        )));
    }
    Ok(g)
}

fn load_session(file: &str, flags: &RunFlags) -> Result<Session, InputError> {
    let text = std::fs::read_to_string(file)?;
    let spec = AlgebraFile::parse(&text)?.to_spec()?;
    let cfg = SampleConfig {
        prime: flags.prime,
        seed: flags.seed.unwrap_or(0),
        samples: flags.samples,
        fitting_rounds: flags.rounds,
        ..SampleConfig::default()
    };
    Ok(Session::new(spec, cfg)?)
}

fn tagged(v: impl Into<Value>, semantics: &str) -> Value {
    json!({"value": v.into(), "semantics": semantics})
}

struct Output {
    machine: bool,
    doc: Value,
}

impl Output {
    fn new(machine: bool, command: &str, flags: &RunFlags) -> Self {
        let doc = json!({
            "command": command,
            "prime": flags.prime,
            "seed": flags.seed,
            "samples": flags.samples,
        });
        Output { machine, doc }
    }

    fn set(&mut self, key: &str, v: Value) {
        self.doc[key] = v;
    }

    fn line(&self, text: String) {
        if !self.machine {
            println!("{text}");
        }
    }

    fn finish(self, low_confidence: bool, allow: bool) -> ExitCode {
        if self.machine {
            println!("{}", serde_json::to_string_pretty(&self.doc).unwrap());
        }
        if low_confidence && !allow {
            eprintln!("low confidence: raise --samples or use --allow-low-confidence");
            ExitCode::from(3)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    let flags = cli.run.clone();
    if flags.machine && flags.seed.is_none() {
        return Err(InputError(
            "machine mode requires an explicit --seed for reproducibility".into(),
        ));
    }
    match &cli.command {
        Command::AlgebraCheck { file } => cmd_algebra_check(file, &flags),
        Command::Gdecomp { file, g } => cmd_gdecomp(file, g, &flags),
        Command::Einv { file, g, h } => cmd_einv(file, g, h, &flags),
        Command::Tame { file, g } => cmd_tame(file, g, &flags),
        Command::Dvec { file, g } => cmd_dvec(file, g, &flags),
        Command::Zdim { file, g } => cmd_zdim(file, g, &flags),
        Command::Pairing { file, g } => cmd_pairing(file, g, &flags),
        Command::Component { file, g } => cmd_component(file, g, &flags),
        Command::Conditions { file, g } => cmd_conditions(file, g, &flags),
        Command::Hunt {
            max_vertices,
            max_arrows,
            max_relations,
            max_nilpotency,
            budget,
        } => cmd_hunt(
            *max_vertices,
            *max_arrows,
            *max_relations,
            *max_nilpotency,
            *budget,
            &flags,
        ),
    }
}

fn cmd_algebra_check(file: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let alg = session.algebra();
    let mut out = Output::new(flags.machine, "algebra-check", flags);
    out.set("dim", tagged(alg.dim(), "exact"));
    out.set("cartan", tagged(json!(alg.cartan()), "exact"));
    let pdims: Vec<Vec<usize>> = (0..alg.vertex_count())
        .map(|i| (0..alg.vertex_count()).map(|j| alg.cartan()[j][i]).collect())
        .collect();
    out.set("projective_dims", tagged(json!(pdims), "exact"));
    out.line(format!("dim Λ = {}", alg.dim()));
    out.line(format!("Cartan matrix (C[j][i] = dim e_j Λ e_i): {:?}", alg.cartan()));
    for (i, d) in pdims.iter().enumerate() {
        out.line(format!("dim P_({}) = {:?}", i + 1, d));
    }
    Ok(out.finish(false, true))
}

fn decomposition_json(rep: &gvcalc::calc::GenericDecompositionReport) -> Value {
    json!({
        "summands": rep.summands.iter().map(|s| json!({
            "g": s.g,
            "multiplicity": s.multiplicity,
            "indecomposable": s.indecomposable,
            "tame": s.tame,
        })).collect::<Vec<_>>(),
        "agreement_ratio": rep.agreement_ratio,
        "low_confidence": rep.low_confidence,
    })
}

fn cmd_gdecomp(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let rep = session.generic_decomposition(&g);
    let mut out = Output::new(flags.machine, "gdecomp", flags);
    out.set("g", json!(g));
    out.set("decomposition", tagged(decomposition_json(&rep), "upper-bound-whp"));
    out.line(format!("g = {g:?}"));
    for s in &rep.summands {
        out.line(format!(
            "  {:?} x{}  tame={}  [upper-bound-whp]",
            s.g, s.multiplicity, s.tame
        ));
    }
    out.line(format!("agreement ratio {:.3}", rep.agreement_ratio));
    Ok(out.finish(rep.low_confidence, flags.allow_low_confidence))
}

fn cmd_einv(file: &str, g: &str, h: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let n = session.algebra().vertex_count();
    let g = parse_g(g, n)?;
    let h = parse_g(h, n)?;
    let e = session.e_invariant(&g, &h);
    let mut out = Output::new(flags.machine, "einv", flags);
    out.set("g", json!(g));
    out.set("h", json!(h));
    out.set("e", tagged(e, "upper-bound-whp"));
    out.line(format!("e({g:?}, {h:?}) = {e}  [upper-bound-whp]"));
    Ok(out.finish(false, true))
}

fn cmd_tame(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let tame = session.is_tame(&g);
    let mut out = Output::new(flags.machine, "tame", flags);
    out.set("g", json!(g));
    out.set("tame", tagged(tame, "upper-bound-whp"));
    out.line(format!(
        "{g:?} is {}  [upper-bound-whp]",
        if tame { "tame" } else { "wild" }
    ));
    Ok(out.finish(false, true))
}

fn cmd_dvec(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let (d, low) = session.d_of_g(&g);
    let mut out = Output::new(flags.machine, "dvec", flags);
    out.set("g", json!(g));
    out.set("d", tagged(json!(d), "upper-bound-whp"));
    out.set("low_confidence", json!(low));
    out.line(format!("d({g:?}) = {d:?}  [upper-bound-whp]"));
    Ok(out.finish(low, flags.allow_low_confidence))
}

fn cmd_zdim(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let (z, low) = session.dim_z(&g);
    let mut out = Output::new(flags.machine, "zdim", flags);
    out.set("g", json!(g));
    out.set("dim_z", tagged(z, "upper-bound-whp"));
    out.line(format!("dim Z_g = {z}  [upper-bound-whp]"));
    Ok(out.finish(low, flags.allow_low_confidence))
}

fn cmd_pairing(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let (d, low) = session.d_of_g(&g);
    let p = pairing(&g, &d);
    let mut out = Output::new(flags.machine, "pairing", flags);
    out.set("g", json!(g));
    out.set("d", tagged(json!(d.clone()), "upper-bound-whp"));
    out.set("pairing", tagged(p, "upper-bound-whp"));
    out.line(format!("⟨g, d(g)⟩ = {p}  [upper-bound-whp]"));
    match session.closed_form_pairing(&g) {
        Ok(cf) => {
            out.set("closed_form", tagged(cf, "exact"));
            out.line(format!("closed form = {cf}  [exact]"));
        }
        Err(AnalyticsError::NotGenericallyInjective) => {
            out.set("closed_form", json!({"error": "not generically injective"}));
            out.line("closed form: not applicable (general map not injective)".into());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out.finish(low, flags.allow_low_confidence))
}

fn cmd_component(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let rep = session.component_report(&g);
    let dec = session.generic_decomposition(&g);
    let gs: Vec<GVector> = dec.summands.iter().map(|s| s.g.clone()).collect();
    let e_matrix: Vec<Vec<usize>> = gs
        .iter()
        .map(|a| gs.iter().map(|b| session.e_invariant(a, b)).collect())
        .collect();
    let mut out = Output::new(flags.machine, "component", flags);
    out.set("g", json!(g));
    out.set("d", tagged(json!(rep.d_of_g), "upper-bound-whp"));
    out.set("dim_z", tagged(rep.dim_z, "upper-bound-whp"));
    out.set("component_count", tagged(rep.component_count, "upper-bound-whp"));
    out.set("pairing", tagged(rep.pairing, "upper-bound-whp"));
    out.set(
        "verdict",
        tagged(if rep.tame { "tame" } else { "wild" }, "upper-bound-whp"),
    );
    out.set("e_matrix", tagged(json!(e_matrix), "upper-bound-whp"));
    out.set(
        "negative_summands",
        json!(rep
            .negative_summands
            .iter()
            .map(|(gv, m)| json!({"g": gv, "multiplicity": m}))
            .collect::<Vec<_>>()),
    );
    out.line(format!("g = {:?}", rep.g));
    out.line(format!("d(g) = {:?}", rep.d_of_g));
    out.line(format!("dim Z_g = {}", rep.dim_z));
    out.line(format!("|Z_g| = {}", rep.component_count));
    out.line(format!("⟨g, d(g)⟩ = {}", rep.pairing));
    out.line(format!("verdict: {}", if rep.tame { "tame" } else { "wild" }));
    out.line(format!("e-matrix of summands: {e_matrix:?}"));
    Ok(out.finish(rep.low_confidence || dec.low_confidence, flags.allow_low_confidence))
}

fn status_json(s: &ConditionStatus) -> Value {
    match s {
        ConditionStatus::Pass => json!({"status": "pass", "semantics": "exact"}),
        ConditionStatus::PassExhausted => {
            json!({"status": "pass", "semantics": "bounded-exhausted"})
        }
        ConditionStatus::Fail { summand, t } => {
            json!({"status": "fail", "witness": {"summand": summand, "t": t}, "semantics": "exact"})
        }
    }
}

fn cmd_conditions(file: &str, g: &str, flags: &RunFlags) -> Result<ExitCode, InputError> {
    let session = load_session(file, flags)?;
    let g = parse_g(g, session.algebra().vertex_count())?;
    let rep = session.check_conditions(&g, flags.tmax);
    let mut low = rep.low_confidence;
    // |ind(t·g)| for t ≤ tmax, flagging any strict decrease
    let mut counts = Vec::new();
    for t in 1..=flags.tmax {
        let (c, _, l) = session.count_ind(&scale_g(&g, t as i64));
        low |= l;
        counts.push(c);
    }
    let monotone = counts.windows(2).all(|w| w[0] <= w[1]);
    let mut out = Output::new(flags.machine, "conditions", flags);
    out.set("g", json!(g));
    out.set("tmax", json!(flags.tmax));
    out.set("wild_summands", json!(rep.wild_summands));
    out.set("ray", status_json(&rep.ray));
    out.set("regularity", status_json(&rep.regularity));
    out.set("non_decreasing", status_json(&rep.non_decreasing));
    out.set("implication_chain_ok", json!(rep.implication_chain_ok));
    out.set("ind_counts", tagged(json!(counts), "upper-bound-whp"));
    out.set("ind_counts_monotone", tagged(monotone, "bounded-exhausted"));
    out.line(format!("wild summands: {:?}", rep.wild_summands));
    out.line(format!("ray: {:?}", rep.ray));
    out.line(format!("regularity: {:?}", rep.regularity));
    out.line(format!("non-decreasing: {:?}", rep.non_decreasing));
    out.line(format!("|ind(t·g)| for t = 1..{}: {:?}", flags.tmax, counts));
    if !monotone {
        out.line("warning: |ind(t·g)| strictly decreases somewhere".into());
    }
    Ok(out.finish(low, flags.allow_low_confidence))
}

fn cmd_hunt(
    max_vertices: usize,
    max_arrows: usize,
    max_relations: usize,
    max_nilpotency: usize,
    budget: usize,
    flags: &RunFlags,
) -> Result<ExitCode, InputError> {
    let seed = flags.seed.unwrap_or(0);
    let mut findings = Vec::new();
    let mut probed = 0usize;
    let mut skipped = 0usize;
    for i in 0..budget as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x9e3779b97f4a7c15u64.wrapping_mul(i + 1)));
        let spec = random_spec(
            &mut rng,
            max_vertices,
            max_arrows,
            max_relations,
            max_nilpotency,
        );
        let cfg = SampleConfig {
            prime: flags.prime,
            seed: seed.wrapping_add(i),
            samples: flags.samples,
            fitting_rounds: flags.rounds,
            ..SampleConfig::default()
        };
        let Ok(session) = Session::new(spec.clone(), cfg) else {
            skipped += 1;
            continue;
        };
        let n = session.algebra().vertex_count();
        let g: GVector = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
        if g.iter().all(|&x| x == 0) {
            skipped += 1;
            continue;
        }
        probed += 1;
        let (base, _, low) = session.count_ind(&g);
        for t in 2..=flags.tmax {
            let (ct, _, lt) = session.count_ind(&scale_g(&g, t as i64));
            if base > ct && !low && !lt {
                findings.push(json!({
                    "algebra": describe_spec(&spec),
                    "g": g,
                    "t": t,
                    "ind_g": base,
                    "ind_tg": ct,
                    "probe_index": i,
                    "seed": seed,
                }));
            }
        }
    }
    let mut out = Output::new(flags.machine, "hunt", flags);
    out.set("budget", json!(budget));
    out.set("probed", json!(probed));
    out.set("skipped", json!(skipped));
    out.set("findings", tagged(json!(findings), "bounded-exhausted"));
    out.line(format!(
        "probed {probed} (skipped {skipped}); findings: {}",
        findings.len()
    ));
    for f in &findings {
        out.line(format!("  {f}"));
    }
    // absence of findings is not a proof; always exit 0
    Ok(out.finish(false, true))
}

fn random_spec<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_arrows: usize,
    max_relations: usize,
    max_nilpotency: usize,
) -> AlgebraSpec {
    let n = rng.gen_range(1..=max_vertices);
    let arrow_count = rng.gen_range(0..=max_arrows);
    let arrows: Vec<Arrow> = (0..arrow_count)
        .map(|k| Arrow {
            name: format!("a{}", k + 1),
            source: rng.gen_range(0..n),
            target: rng.gen_range(0..n),
        })
        .collect();
    // monomial relations on composable arrow pairs
    let mut relations = Vec::new();
    let pairs: Vec<Vec<usize>> = arrows
        .iter()
        .enumerate()
        .flat_map(|(k2, b)| {
            arrows
                .iter()
                .enumerate()
                .filter(move |(_, a)| a.target == b.source)
                .map(move |(k1, _)| vec![k2, k1])
        })
        .collect();
    for _ in 0..rng.gen_range(0..=max_relations) {
        if pairs.is_empty() {
            break;
        }
        let w = pairs[rng.gen_range(0..pairs.len())].clone();
        relations.push(vec![RelationTerm { coeff: 1, word: w }]);
    }
    AlgebraSpec {
        quiver: Quiver {
            vertex_count: n,
            arrows,
        },
        relations,
        nilpotency: rng.gen_range(2..=max_nilpotency.max(2)),
    }
}

fn describe_spec(spec: &AlgebraSpec) -> Value {
    json!({
        "vertices": spec.quiver.vertex_count,
        "arrows": spec.quiver.arrows.iter().map(|a| json!({
            "name": a.name, "source": a.source + 1, "target": a.target + 1,
        })).collect::<Vec<_>>(),
        "relations": spec.relations.iter().map(|r| r.iter().map(|t| json!({
            "coeff": t.coeff,
            "path": t.word.iter().map(|&k| spec.quiver.arrows[k].name.clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "nilpotency": spec.nilpotency,
    })
}
