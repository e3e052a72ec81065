//! `ecff`: command-line frontend for elliptic curves over `k(T)`.

use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ecff::algebra::DEFAULT_SEED;
use ecff::algebra::{Field, FieldTag, Poly};
use ecff::height_mason::{
    mason_check, root_search, unit_difference_exhaustive, MasonTriple, RootSearchParams,
};
use ecff::moduli::{is_constant, ConstancyOptions, ConstancyResult, DEFAULT_EXTENSION_BOUND};
use ecff::reduction::{global_minimal_seeded, reduction_report_with, Chart, ReportOptions};
use ecff::search::{
    curve_record, lower_bounds, parse_equation, parse_ratfunc, run_examples, verify_bounds_with,
    BoundsSettings, BoundsSummary, SearchConfig, SearchForm,
};
use ecff::shard::Shard;
use ecff::transform::{to_reduced_form, to_short_form};
use ecff::with_field;

/// Environment variable holding the seed for polynomial factorization.
const SEED_VAR: &str = "ECFF_SEED";

#[derive(Parser)]
#[command(
    name = "ecff",
    version,
    about = "Elliptic curves over rational function fields k(T)"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Curve {
    /// `y^2 + ... = x^3 + ...` or `[a1,a2,a3,a4,a6]`.
    equation: String,
    /// `Q`, `GF(p)` or `GF(p^n)` (generator `z`).
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    #[value(name = "0")]
    Zero,
    #[value(name = "inf")]
    Inf,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, bad places over P^1 and the constancy verdict of a curve.
    Analyze {
        #[command(flatten)]
        curve: Curve,
        /// Move to the reduced form (characteristic 2 or 3) or the short form first.
        #[arg(long)]
        reduce: bool,
    },
    /// Global minimal model on one affine chart of P^1.
    Minimize {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, value_enum, default_value = "0")]
        chart: ChartArg,
    },
    /// Mason's inequality for g1 + g2 + g3 = 0 with g3 = -(g1 + g2).
    Mason {
        g1: String,
        g2: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Decide whether a curve is constant.
    Constancy {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, default_value_t = DEFAULT_EXTENSION_BOUND)]
        ext_bound: usize,
    },
    /// Exhaustive oracles for the auxiliary results on additive polynomials and unit differences.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Exhaustive scan checking the lower bounds on bad points.
    Search(SearchArgs),
    /// Re-analyze the six named example curves.
    Examples,
}

#[derive(Subcommand)]
enum Oracle {
    /// Search for polynomial roots of Y^(p^r) - Y^n Q1^m - Q1^(m+1) Q - c.
    RootSearch {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q1: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        c: String,
        /// Largest degree of a candidate root.
        #[arg(long, default_value_t = 6)]
        deg: usize,
        /// Base field, `GF(p)` by default.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value_t = Shard::WHOLE)]
        shard: Shard,
    },
    /// Classify every Laurent pair (A, B) with A^3 - B^2 a unit times a power of T.
    UnitDifferences {
        #[arg(long)]
        field: String,
        /// Degree bound on the unit part.
        #[arg(long)]
        bound: usize,
        /// Bound on |shift|.
        #[arg(long, default_value_t = 2)]
        shift: i64,
        #[arg(long, default_value_t = Shard::WHOLE)]
        shard: Shard,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    field: String,
    /// `general`, `reduced`, `short` or one reduced variant (`char2-j-nonzero`, ...).
    #[arg(long)]
    form: String,
    /// Degree bound per free coefficient.
    #[arg(long, default_value_t = 0)]
    deg: usize,
    /// Degree bound on A for the short form (defaults to --deg).
    #[arg(long)]
    deg_a: Option<usize>,
    /// Degree bound on B for the short form (defaults to --deg).
    #[arg(long)]
    deg_b: Option<usize>,
    #[arg(long, default_value_t = Shard::WHOLE)]
    shard: Shard,
    /// Threads, each scanning a sub-shard; results are merged in index order.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Write one JSON record per curve to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also check idempotence and chart consistency of the minimal models.
    #[arg(long)]
    structural: bool,
    #[arg(long, default_value_t = DEFAULT_EXTENSION_BOUND)]
    ext_bound: usize,
}

fn seed() -> anyhow::Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("{SEED_VAR} must be an unsigned integer")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn report_options() -> anyhow::Result<ReportOptions> {
    Ok(ReportOptions {
        seed: seed()?,
        ..Default::default()
    })
}

fn print(json: bool, value: &Value, text: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        print!("{}", text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Analyze { curve, reduce } => {
            let tag = FieldTag::parse(&curve.field)?;
            with_field!(&tag, |f| analyze(cli.json, &curve.equation, &f, *reduce))
        }
        Command::Minimize { curve, chart } => {
            let tag = FieldTag::parse(&curve.field)?;
            let chart = match chart {
                ChartArg::Zero => Chart::AtZero,
                ChartArg::Inf => Chart::AtInfinity,
            };
            with_field!(&tag, |f| minimize(cli.json, &curve.equation, &f, chart))
        }
        Command::Mason { g1, g2, field } => {
            let tag = FieldTag::parse(field)?;
            with_field!(&tag, |f| mason(cli.json, g1, g2, &f))
        }
        Command::Constancy { curve, ext_bound } => {
            let tag = FieldTag::parse(&curve.field)?;
            with_field!(&tag, |f| constancy(
                cli.json,
                &curve.equation,
                &f,
                *ext_bound
            ))
        }
        Command::Oracle(Oracle::RootSearch {
            p,
            r,
            m,
            n,
            q1,
            q,
            c,
            deg,
            field,
            shard,
        }) => {
            let tag = match field {
                Some(s) => FieldTag::parse(s)?,
                None => FieldTag::Prime(*p),
            };
            with_field!(&tag, |f| {
                let params = RootSearchParams {
                    p: *p,
                    r: *r,
                    m: *m,
                    n: *n,
                    q1: polynomial(q1, &f)?,
                    q: polynomial(q, &f)?,
                    c: parse_ratfunc(c, &f)?
                        .constant_value()
                        .ok_or_else(|| anyhow!("c must be a constant"))?,
                    degree_bound: *deg,
                };
                root_search_cmd(cli.json, &params, *shard)
            })
        }
        Command::Oracle(Oracle::UnitDifferences {
            field,
            bound,
            shift,
            shard,
        }) => {
            let tag = FieldTag::parse(field)?;
            with_field!(&tag, |f| {
                let s = unit_difference_exhaustive(&f, *bound, *shift, *shard)?;
                let value = json!({
                    "field": f.descriptor(),
                    "pairs": s.pairs,
                    "unit_differences": s.unit_differences,
                    "both_powers": s.both_powers,
                    "a_zero": s.a_zero,
                    "b_zero": s.b_zero,
                    "polynomial_constant": s.polynomial_constant,
                });
                print(cli.json, &value, || {
                    format!(
                        "pairs {}\nunit differences {}\n  A = aT^(2n), B = bT^(3n): {}\n  A = 0: {}\n  B = 0: {}\npolynomial pairs with constant difference, all constant: {}\n",
                        s.pairs, s.unit_differences, s.both_powers, s.a_zero, s.b_zero, s.polynomial_constant
                    )
                });
                Ok(0)
            })
        }
        Command::Search(args) => {
            let tag = FieldTag::parse(&args.field)?;
            with_field!(&tag, |f| search(cli.json, args, f))
        }
        Command::Examples => examples(cli.json),
    }
}

fn polynomial<F: Field>(text: &str, field: &F) -> anyhow::Result<Poly<F>> {
    let x = parse_ratfunc(text, field)?;
    if !x.is_polynomial() {
        bail!("{text} is not a polynomial in T");
    }
    Ok(x.num().clone())
}

fn constancy_json<F: Field>(c: &ConstancyResult<F>) -> Value {
    let mut v = json!({ "constant": c.kind(), "constancy_reason": c.reason() });
    if let ConstancyResult::Constant { model, witness } = c {
        v["model"] = json!(model.to_string());
        v["witness"] = json!(witness.to_string());
    }
    v
}

fn analyze<F: Field>(json: bool, text: &str, field: &F, reduce: bool) -> anyhow::Result<u8> {
    let mut w = parse_equation(text, field)?;
    if reduce {
        w = match field.characteristic() {
            2 | 3 => to_reduced_form(&w)?.0.to_equation(),
            _ => to_short_form(&w)?.0,
        };
    }
    let record = curve_record(None, &w, report_options()?, ConstancyOptions::default())?;
    let report = reduction_report_with(&w, report_options()?)?;
    let mut value = serde_json::to_value(&record)?;
    value["equation"] = json!(w.equation_string());
    value["minimal_model_at_zero"] = json!(report.minimal_model_at_zero.to_string());
    value["minimal_model_at_infinity"] = json!(report.minimal_model_at_infinity.to_string());
    print(json, &value, || {
        let places: Vec<String> = record
            .bad_places
            .iter()
            .map(|b| {
                format!(
                    "{} (degree {}, v(delta) = {})",
                    b.generator, b.degree, b.v_delta
                )
            })
            .collect();
        let mut s = format!(
            "curve      {}\nfield      {}\n",
            w.equation_string(),
            record.field
        );
        s += &format!(
            "delta_min  {}\nj          {}\n",
            record.delta_min_factored, record.j
        );
        s += &format!(
            "bad places {}\n",
            if places.is_empty() {
                "none".into()
            } else {
                places.join(", ")
            }
        );
        s += &format!("geometric bad points {}\n", record.geometric_bad_count);
        s += &format!(
            "constancy  {} ({})\n",
            record.constant, record.constancy_reason
        );
        s
    });
    Ok(0)
}

fn minimize<F: Field>(json: bool, text: &str, field: &F, chart: Chart) -> anyhow::Result<u8> {
    let w = parse_equation(text, field)?;
    let (m, tr) = global_minimal_seeded(&w, chart, seed()?)?;
    let value = json!({
        "chart": chart.to_string(),
        "coordinate": chart.coordinate(),
        "model": m.to_string(),
        "coefficients": m.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "discriminant": m.discriminant().to_string(),
        "transform": tr.to_string(),
    });
    print(json, &value, || {
        let mut s = format!(
            "chart {chart}; the variable T below stands for {}\n",
            chart.coordinate()
        );
        s += &format!(
            "model     {m}\ndelta     {}\ntransform {tr}\n",
            m.discriminant()
        );
        if field.characteristic() == 0 {
            s += "over Q only residue characteristic 0 occurs, so every local step is Kraus-Laska scaling\n";
        }
        s
    });
    Ok(0)
}

fn mason<F: Field>(json: bool, g1: &str, g2: &str, field: &F) -> anyhow::Result<u8> {
    let triple = MasonTriple::from_pair(parse_ratfunc(g1, field)?, parse_ratfunc(g2, field)?)?;
    match mason_check(&triple) {
        Ok(v) => {
            let places: Vec<String> = v.places.iter().map(|p| p.to_string()).collect();
            let value = json!({
                "gamma": [triple.gamma1.to_string(), triple.gamma2.to_string(), triple.gamma3.to_string()],
                "exempt": v.exempt.name(),
                "places": places,
                "v_size": v.v_size,
                "height": v.height,
                "slack": v.slack,
            });
            print(json, &value, || {
                format!(
                    "places {{{}}}\n|V| = {}, H(g1/g2) = {}, slack {}\nexemption {}\n",
                    places.join(", "),
                    v.v_size,
                    v.height,
                    v.slack,
                    v.exempt.name()
                )
            });
            Ok(0)
        }
        Err(ecff::Error::Counterexample(msg)) => {
            print(json, &json!({ "counterexample": msg }), || {
                format!("counterexample: {msg}\n")
            });
            Ok(2)
        }
        Err(e) => Err(e.into()),
    }
}

fn constancy<F: Field>(json: bool, text: &str, field: &F, ext_bound: usize) -> anyhow::Result<u8> {
    let w = parse_equation(text, field)?;
    let c = is_constant(
        &w,
        ConstancyOptions {
            extension_bound: ext_bound,
        },
    )?;
    print(json, &constancy_json(&c), || format!("{c}\n"));
    Ok(if c.is_undecided() { 3 } else { 0 })
}

fn root_search_cmd<F: Field>(
    json: bool,
    params: &RootSearchParams<F>,
    shard: Shard,
) -> anyhow::Result<u8> {
    let out = root_search(params, shard)?;
    let root = out
        .root
        .as_ref()
        .map(|(i, y)| json!({ "index": *i as u64, "root": y.to_string() }));
    let value = json!({ "checked": out.checked as u64, "root": root });
    print(json, &value, || match &out.root {
        Some((_, y)) => format!("root found: {y} ({} candidates checked)\n", out.checked),
        None => format!("no root among {} candidates\n", out.checked),
    });
    Ok(if out.root.is_some() { 2 } else { 0 })
}

fn examples(json: bool) -> anyhow::Result<u8> {
    let checks = run_examples()?;
    let ok = checks.iter().all(|c| c.ok());
    print(json, &serde_json::to_value(&checks)?, || {
        let mut s = String::new();
        for c in &checks {
            s += &format!(
                "{:<24} {:<7} delta {:<20} j {:<36} bad {{{}}} {}\n",
                c.id,
                c.field,
                c.delta,
                c.j,
                c.bad_set.join(", "),
                if c.ok() { "ok" } else { "MISMATCH" }
            );
            for m in &c.mismatches {
                s += &format!("    {m}\n");
            }
        }
        s
    });
    Ok(if ok { 0 } else { 2 })
}

fn search<F: Field>(json: bool, args: &SearchArgs, field: F) -> anyhow::Result<u8> {
    let mut form: SearchForm = args.form.parse()?;
    if let SearchForm::Short { .. } = form {
        form = SearchForm::Short {
            deg_a: args.deg_a.unwrap_or(args.deg),
            deg_b: args.deg_b.unwrap_or(args.deg),
        };
    }
    if args.workers == 0 {
        bail!("--workers must be at least 1");
    }
    let settings = BoundsSettings {
        constancy: ConstancyOptions {
            extension_bound: args.ext_bound,
        },
        structural_checks: args.structural,
    };
    let report_opts = report_options()?;
    let base = SearchConfig::new(field, form, args.deg).with_shard(args.shard);
    base.tuple_count()?;
    let workers = args.workers;
    let part_path = |k: usize| -> Option<PathBuf> {
        args.out.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(format!(".part{k}"));
            PathBuf::from(s)
        })
    };
    let run_part = |k: usize| -> anyhow::Result<(BoundsSummary, Vec<u64>)> {
        let cfg = base
            .clone()
            .with_shard(base.shard.refine(k as u64, workers as u64)?);
        let mut writer = match part_path(k) {
            Some(p) => Some(BufWriter::new(
                File::create(&p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => None,
        };
        let mut indices = Vec::new();
        let summary = verify_bounds_with(&cfg, &settings, |a| {
            if let Some(w) = writer.as_mut() {
                let rec =
                    curve_record(Some(a.index), &a.equation, report_opts, settings.constancy)?;
                let line = serde_json::to_string(&rec).expect("records serialize");
                writeln!(w, "{line}")
                    .map_err(|e| ecff::Error::Precondition(format!("writing records: {e}")))?;
                indices.push(a.index as u64);
            }
            Ok(())
        })?;
        if let Some(mut w) = writer {
            w.flush()?;
        }
        Ok((summary, indices))
    };
    let parts: Vec<(BoundsSummary, Vec<u64>)> = if workers == 1 {
        vec![run_part(0)?]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers).map(|k| s.spawn(move || run_part(k))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect::<anyhow::Result<Vec<_>>>()
        })?
    };
    let mut summary = parts[0].0.clone();
    for (s, _) in &parts[1..] {
        summary.merge(s);
    }
    if let Some(out) = &args.out {
        let paths: Vec<PathBuf> = (0..workers).map(|k| part_path(k).unwrap()).collect();
        let indices: Vec<&[u64]> = parts.iter().map(|(_, i)| i.as_slice()).collect();
        merge_parts(out, &paths, &indices)?;
    }
    let code = summary.exit_code();
    print(json, &serde_json::to_value(&summary)?, || {
        summary_table(&summary)
    });
    Ok(code as u8)
}

/// Interleaves the per-worker record files into `out` in index order.
fn merge_parts(out: &Path, paths: &[PathBuf], indices: &[&[u64]]) -> anyhow::Result<()> {
    let mut readers: Vec<_> = paths
        .iter()
        .map(|p| File::open(p).map(|f| BufReader::new(f).lines()))
        .collect::<io::Result<_>>()?;
    let mut pos = vec![0usize; paths.len()];
    let mut w =
        BufWriter::new(File::create(out).with_context(|| format!("creating {}", out.display()))?);
    loop {
        let next = (0..paths.len())
            .filter(|&k| pos[k] < indices[k].len())
            .min_by_key(|&k| indices[k][pos[k]]);
        let Some(k) = next else { break };
        let line = readers[k]
            .next()
            .ok_or_else(|| anyhow!("record file ended early"))??;
        writeln!(w, "{line}")?;
        pos[k] += 1;
    }
    w.flush()?;
    for p in paths {
        fs::remove_file(p)?;
    }
    Ok(())
}

fn summary_table(s: &BoundsSummary) -> String {
    let p = FieldTag::parse(&s.field)
        .map(|t| t.characteristic())
        .unwrap_or(0);
    let (b_nc, b_j) = lower_bounds(p);
    let min = |m: &Option<usize>| m.map_or("-".to_string(), |v| v.to_string());
    let mut out = format!(
        "field {}, form {}, degree bound {}\n",
        s.field, s.form, s.degree_bound
    );
    out += &format!(
        "tuples {:>10}   curves {:>10}   singular {:>10}\n",
        s.tuples, s.curves_scanned, s.singular_skipped
    );
    out += &format!(
        "constant {:>8}   non-constant {:>8}   j non-constant {:>8}   undecided {:>4}\n",
        s.constant, s.nonconstant, s.j_nonconstant, s.undecided
    );
    out += &format!(
        "{:<16} {:>6} {:>8} {:>10}\n",
        "category", "bound", "minimum", "witnesses"
    );
    out += &format!(
        "{:<16} {:>6} {:>8} {:>10}\n",
        "non-constant",
        b_nc,
        min(&s.min_bad_nonconstant.value),
        s.min_bad_nonconstant.witnesses.len()
    );
    out += &format!(
        "{:<16} {:>6} {:>8} {:>10}\n",
        "j non-constant",
        b_j,
        min(&s.min_bad_j_nonconstant.value),
        s.min_bad_j_nonconstant.witnesses.len()
    );
    for (label, m) in [
        ("non-constant", &s.min_bad_nonconstant),
        ("j non-constant", &s.min_bad_j_nonconstant),
    ] {
        if let Some(w) = m.witnesses.first() {
            out += &format!("first {label} witness: #{} {}\n", w.index, w.equation);
        }
    }
    let hist: Vec<String> = s
        .bad_count_histogram
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    out += &format!("bad-point histogram {}\n", hist.join(" "));
    if s.structural_checked > 0 {
        out += &format!(
            "structural checks {} (failures {})\n",
            s.structural_checked,
            s.structural_failures.len()
        );
    }
    for v in &s.violations {
        out += &format!(
            "VIOLATION {}: #{} {}\n",
            v.kind, v.witness.index, v.witness.equation
        );
    }
    out
}
