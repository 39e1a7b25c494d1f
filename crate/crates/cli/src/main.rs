use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gproj_core::arquiver::{
    emit_dot, emit_hasse_dot, emit_hasse_json, emit_json, full_graded_ar_window, full_ungraded_ar_quiver,
    graded_ar_ball, graded_ar_window, ungraded_ar_quiver,
};
use gproj_core::oracle::{random_algebras, RandomSpec};
use gproj_core::stable::{classify, graded_stable_hom, ungraded_stable_hom, GradedObject, GradingMode};
use gproj_core::verify::{verify_analysis, CheckResult, CHECKS};
use gproj_core::{parse_algebra, Analysis, MonomialAlgebra, Path, PathOrder};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "gproj",
    version,
    about = "Perfect paths and Gorenstein-projective modules of monomial algebras"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis, perfect paths, sequences, cycle classes and elementary paths.
    Analyze { file: PathBuf },
    /// Hasse quiver of one of the two orders on perfect paths.
    Hasse {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "prec")]
        order: Order,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Graded and ungraded classification of the stable category.
    Classify {
        file: PathBuf,
        /// Use the document's arrow degrees for the multiplicities.
        #[arg(long)]
        weighted: bool,
    },
    /// Stable Hom between two perfect paths.
    Hom {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        from: String,
        #[arg(long, value_name = "PATH")]
        to: String,
        /// Shift of the target relative to the source (graded only).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
        #[arg(long)]
        graded: bool,
    },
    /// Auslander-Reiten quiver, ungraded or a finite graded window.
    ArQuiver {
        file: PathBuf,
        #[arg(long)]
        graded: bool,
        /// Shift window: `W` for 0..=W, or `LO..HI`.
        #[arg(long, value_name = "W", allow_hyphen_values = true)]
        window: Option<String>,
        /// Restrict to one class (1-based, in class order).
        #[arg(long)]
        class: Option<usize>,
        /// Graded ball around this perfect path at shift 0 instead of a window.
        #[arg(long, value_name = "PATH", conflicts_with = "window")]
        around: Option<String>,
        #[arg(long, default_value_t = 1, requires = "around")]
        radius: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run the oracle suite on the file, and optionally on random algebras.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 20261019)]
        seed: u64,
        /// Number of random algebras to check as well.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Prec,
    Leq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Input(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn load(file: &PathBuf) -> Result<Analysis, Failure> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let alg = parse_algebra(&text).with_context(|| format!("parsing {}", file.display()))?;
    for w in alg.warnings() {
        eprintln!("warning: {w}");
    }
    analyse(alg).map_err(|e| Failure::Verification(format!("{}: {e}\n", file.display())))
}

fn analyse(alg: MonomialAlgebra) -> anyhow::Result<Analysis> {
    Analysis::new(alg).map_err(|e| anyhow!(e))
}

fn parse_path(an: &Analysis, flag: &str, text: &str) -> anyhow::Result<Path> {
    an.algebra().parse_path(text).with_context(|| format!("{flag}={text}"))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value")
}

fn analyze(an: &Analysis, as_json: bool) -> String {
    let alg = an.algebra();
    let f = |p: &Path| an.format(p);
    let fs = |ps: &[Path]| ps.iter().map(f).collect::<Vec<_>>();
    let perfect: Vec<String> = an.perfect().paths().map(f).collect();
    let sequences: Vec<Vec<String>> = an.perfect().sequences.iter().map(|s| fs(&s.paths)).collect();
    let el = an.elementary();
    if as_json {
        let classes: Vec<Value> = an
            .decompositions()
            .iter()
            .map(|d| {
                json!({
                    "cycle": f(&d.cycle),
                    "n": d.n(),
                    "length": d.length(),
                    "degree": d.cycle.degree(an.degrees()),
                    "m": d.m,
                    "factors": fs(&d.factors),
                    "elementary": fs(&d.elementary),
                    "coelementary": fs(&d.coelementary),
                })
            })
            .collect();
        return pretty(&json!({
            "vertices": alg.quiver().vertex_count(),
            "arrows": alg.quiver().arrow_count(),
            "relations": fs(alg.relations()),
            "warnings": alg.warnings(),
            "dimension": alg.dimension(),
            "nilpotency_bound": alg.nilpotency_bound(),
            "cm_free": an.is_cm_free(),
            "perfect_paths": perfect,
            "sequences": sequences,
            "classes": classes,
            "elementary": fs(&el.elementary),
            "coelementary": fs(&el.coelementary),
        }));
    }
    let mut out = format!(
        "vertices: {}, arrows: {}, relations: {}\nbasis: {} non-zero paths, longest of length {}\n",
        alg.quiver().vertex_count(),
        alg.quiver().arrow_count(),
        alg.relations().len(),
        alg.dimension(),
        alg.nilpotency_bound() - 1,
    );
    if an.is_cm_free() {
        out.push_str("CM-free: no perfect paths\n");
        return out;
    }
    out += &format!("perfect paths ({}): {}\n", perfect.len(), perfect.join(", "));
    out += &format!("minimal perfect sequences ({}):\n", sequences.len());
    for s in &sequences {
        out += &format!("  ({})\n", s.join(", "));
    }
    out += &format!("cycle classes ({}):\n", an.decompositions().len());
    for (k, d) in an.decompositions().iter().enumerate() {
        out += &format!(
            "  c{} = {}: |c| = {}, l(c) = {}, m_c = {}, factors {}\n",
            k + 1,
            f(&d.cycle),
            d.n(),
            d.length(),
            d.m,
            fs(&d.factors).join(" | ")
        );
    }
    out += &format!("elementary: {}\n", fs(&el.elementary).join(", "));
    out += &format!("co-elementary: {}\n", fs(&el.coelementary).join(", "));
    out
}

fn classify_report(an: &Analysis, weighted: bool, as_json: bool) -> anyhow::Result<String> {
    let mode = if weighted { GradingMode::Weighted } else { GradingMode::Default };
    let r = classify(an, mode)?;
    if as_json {
        return Ok(serde_json::to_string_pretty(&r)?);
    }
    if r.cm_free {
        return Ok("CM-free: no perfect paths\n".into());
    }
    let mut out = String::from("graded:\n");
    for g in &r.graded {
        out += &format!("  {}: A{} x{}\n", g.cycle, g.type_a_size, g.multiplicity);
    }
    out.push_str("ungraded:\n");
    for u in &r.ungraded {
        out += &format!("  Nakayama: vertices {}, rad^{}\n", u.vertices, u.radical_exponent);
    }
    Ok(out)
}

fn hom_report(
    an: &Analysis,
    from: &str,
    to: &str,
    shift: i64,
    graded: bool,
    as_json: bool,
) -> anyhow::Result<String> {
    let p = parse_path(an, "--from", from)?;
    let q = parse_path(an, "--to", to)?;
    let h = if graded {
        graded_stable_hom(an, &GradedObject::new(p.clone(), 0), &GradedObject::new(q.clone(), shift))?
    } else {
        ungraded_stable_hom(an, &p, &q)?
    };
    let witnesses: Vec<Value> =
        h.witnesses.iter().map(|w| json!({"shift": w.shift, "path": an.format(&w.path)})).collect();
    if as_json {
        return Ok(pretty(&json!({
            "from": an.format(&p),
            "to": an.format(&q),
            "graded": graded,
            "shift": if graded { Some(shift) } else { None },
            "dimension": h.dimension,
            "witnesses": witnesses,
        })));
    }
    let target = if graded { format!("{}({shift})", an.format(&q)) } else { an.format(&q) };
    let mut out = format!("dim Hom({}, {target}) = {}\n", an.format(&p), h.dimension);
    for w in &h.witnesses {
        out += &format!("  witness {} at shift {}\n", an.format(&w.path), w.shift);
    }
    Ok(out)
}

fn parse_window(text: &str) -> anyhow::Result<(i64, i64)> {
    let bad = || anyhow!("--window={text}: expected W or LO..HI");
    match text.split_once("..") {
        Some((lo, hi)) => Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?)),
        None => Ok((0, text.trim().parse().map_err(|_| bad())?)),
    }
}

#[allow(clippy::too_many_arguments)]
fn ar_report(
    an: &Analysis,
    graded: bool,
    window: Option<&str>,
    class: Option<usize>,
    around: Option<&str>,
    radius: usize,
    format: Format,
) -> anyhow::Result<String> {
    let class = match class {
        Some(k) if k == 0 || k > an.classes().len() => {
            return Err(anyhow!("--class={k}: there are {} classes", an.classes().len()))
        }
        Some(k) => Some(k - 1),
        None => None,
    };
    let q = if let Some(p) = around {
        let p = parse_path(an, "--around", p)?;
        graded_ar_ball(an, &GradedObject::new(p, 0), radius)?
    } else if graded {
        let (lo, hi) = parse_window(window.unwrap_or("0"))?;
        match class {
            Some(c) => graded_ar_window(an, c, lo, hi)?,
            None => full_graded_ar_window(an, lo, hi)?,
        }
    } else {
        if window.is_some() {
            return Err(anyhow!("--window needs --graded"));
        }
        match class {
            Some(c) => ungraded_ar_quiver(an, c)?,
            None => full_ungraded_ar_quiver(an)?,
        }
    };
    Ok(match format {
        Format::Dot => emit_dot(&q),
        Format::Json => emit_json(&q) + "\n",
    })
}

fn verify_report(an: &Analysis, seed: u64, random: usize, as_json: bool) -> Result<String, Failure> {
    let mut runs: Vec<(String, Vec<CheckResult>)> = vec![("input".into(), verify_analysis(an))];
    for (k, alg) in random_algebras(seed, random, &RandomSpec::default()).into_iter().enumerate() {
        let an = analyse(alg).map_err(|e| Failure::Verification(format!("random #{k}: {e}")))?;
        runs.push((format!("random #{k}"), verify_analysis(&an)));
    }
    let mut total: Vec<(usize, Vec<String>)> = vec![(0, Vec::new()); CHECKS.len()];
    for (name, results) in &runs {
        for (k, r) in results.iter().enumerate() {
            total[k].0 += r.cases;
            total[k].1.extend(r.failures.iter().map(|f| format!("{name}: {f}")));
        }
    }
    let passed = total.iter().all(|(_, f)| f.is_empty());
    let out = if as_json {
        let checks: Vec<Value> = CHECKS
            .iter()
            .zip(&total)
            .map(|(name, (cases, failures))| {
                json!({"name": name, "cases": cases, "passed": failures.is_empty(), "failures": failures})
            })
            .collect();
        pretty(&json!({"seed": seed, "random": random, "passed": passed, "checks": checks})) + "\n"
    } else {
        let mut out = format!("input + {random} random algebras (seed {seed})\n");
        for (name, (cases, failures)) in CHECKS.iter().zip(&total) {
            let status = if failures.is_empty() { "PASS" } else { "FAIL" };
            out += &format!("{status}  {name:<26} {cases:>7} cases\n");
            for f in failures.iter().take(4) {
                out += &format!("      {f}\n");
            }
        }
        out
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let as_json = cli.json;
    let out = match &cli.command {
        Command::Analyze { file } => {
            let an = load(file)?;
            let mut s = analyze(&an, as_json);
            if as_json {
                s.push('\n');
            }
            s
        }
        Command::Hasse { file, order, format } => {
            let an = load(file)?;
            let order = match order {
                Order::Prec => PathOrder::Prec,
                Order::Leq => PathOrder::Leq,
            };
            let h = an.hasse(order);
            if as_json || *format == Format::Json {
                emit_hasse_json(&an, h) + "\n"
            } else {
                emit_hasse_dot(&an, h)
            }
        }
        Command::Classify { file, weighted } => {
            let an = load(file)?;
            let mut s = classify_report(&an, *weighted, as_json)?;
            if as_json {
                s.push('\n');
            }
            s
        }
        Command::Hom { file, from, to, shift, graded } => {
            let an = load(file)?;
            let mut s = hom_report(&an, from, to, *shift, *graded, as_json)?;
            if as_json {
                s.push('\n');
            }
            s
        }
        Command::ArQuiver { file, graded, window, class, around, radius, format } => {
            let an = load(file)?;
            let format = if as_json { Format::Json } else { *format };
            ar_report(&an, *graded, window.as_deref(), *class, around.as_deref(), *radius, format)?
        }
        Command::Verify { file, seed, random } => {
            let an = load(file)?;
            verify_report(&an, *seed, *random, as_json)?
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            let _ = emit(&cli, &report);
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
