mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use braidrefine::arrangements::{charpoly_ff_with, ArrangementSpec, FfOptions, Preset, PresetKind};
use braidrefine::numbers::{
    charpoly_a_closed, charpoly_c_closed, regions_a_closed, regions_b_closed,
    regions_delta_closed, regions_gamma_closed, zaslavsky,
};
use braidrefine::partitions::{
    classify_blocks, count_b_regions_enum_with_limit, partition_to_sketch, sketch_to_partition,
    DecoratedPartition, MAX_PARTITION_LETTERS,
};
use braidrefine::paths::{
    compartment_distribution_with_limit, enumerate_decorated_paths_with_limit, path_to_sketch,
    sketch_to_path, unlabeled_census_with_limit, DecoratedDyckPath, MAX_PATH_LETTERS,
};
use braidrefine::poset::{build_poset, charpoly_from_poset, charpoly_linear};
use braidrefine::reference::check_reference_rows;
use braidrefine::sketches::{
    enumerate_sketches_with_limit, point_to_sketch, witness_point, LogPoint, Sketch,
    MAX_SKETCH_LETTERS,
};
use braidrefine::{Error, IntPolynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use output::{Format, Report};

#[derive(Parser)]
#[command(name = "braidrefine", version, about = "Exact counts and bijections for multiplicative braid refinements")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "table")]
    output: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of an arrangement.
    Charpoly {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "ff")]
        method: CharpolyMethod,
        /// Moduli for point counting, overriding the automatic plan.
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<u64>>,
    },
    /// Number of regions of an arrangement.
    Regions {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "ff")]
        method: RegionsMethod,
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<u64>>,
    },
    /// List all sketches, decorated paths or decorated partitions for (n, m).
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        n: usize,
        m: usize,
        /// Override the guard on (m + 1) n.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Apply one of the bijections to a single object.
    Biject {
        #[arg(value_enum)]
        direction: Direction,
        input: String,
        /// Required for point-to-sketch; optional for path-to-sketch.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Statistics over enumerations and posets.
    Stats {
        #[command(subcommand)]
        stat: Stat,
    },
    /// Check stored reference values.
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        /// Same as --output json.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Target {
    /// Preset such as A:3,2, B:n,m, C:n,m, Gamma:n,m or Delta:n,m.
    #[arg(required_unless_present = "spec", conflicts_with = "spec")]
    preset: Option<String>,
    /// JSON arrangement spec.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharpolyMethod {
    Closed,
    Ff,
    Poset,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionsMethod {
    Closed,
    Ff,
    Poset,
    Enum,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Sketches,
    Paths,
    Partitions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    SketchToPath,
    PathToSketch,
    SketchToPartition,
    PartitionToSketch,
    Witness,
    PointToSketch,
}

#[derive(Subcommand)]
enum Stat {
    /// Decorated paths by number of compartments in the second part.
    Compartments {
        n: usize,
        m: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Unlabeled paths by up-steps and by axis points.
    Census {
        n: usize,
        m: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Intersection poset: flats, Möbius values and covers.
    Poset {
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Table1,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(e) => match e {
                Error::InterpolationMismatch { .. }
                | Error::NonIntegerCoefficient(_)
                | Error::NotCharacteristic(_)
                | Error::InfeasibleSystem
                | Error::InconsistentGraph => 1,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(s) => s.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type Outcome = Result<(Report, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut format = cli.output;
    if let Command::Verify { json: true, .. } = cli.command {
        format = Format::Json;
    }
    match run(cli.command) {
        Ok((report, ok)) => {
            print!("{}", report.render(format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Charpoly { target, method, moduli } => charpoly(&target, method, moduli),
        Command::Regions { target, method, moduli } => regions(&target, method, moduli),
        Command::Enumerate { kind, n, m, limit } => enumerate(kind, n, m, limit),
        Command::Biject { direction, input, m } => biject(direction, &input, m),
        Command::Stats { stat } => stats(stat),
        Command::Verify { what: VerifyWhat::Table1, .. } => verify_table1(),
    }
}

/// The preset, if one was named, and the spec to compute with.
fn resolve(target: &Target) -> Result<(Option<Preset>, ArrangementSpec), Failure> {
    match (&target.preset, &target.spec) {
        (Some(p), _) => {
            let preset: Preset = p.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            Ok((Some(preset), preset.spec()))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok((None, ArrangementSpec::from_json(&text)?))
        }
        (None, None) => Err(Failure::Usage("give a preset or --spec".into())),
    }
}

fn target_name(preset: Option<Preset>, target: &Target) -> String {
    match preset {
        Some(p) => p.to_string(),
        None => target.spec.as_ref().map_or(String::new(), |p| p.display().to_string()),
    }
}

fn ff_options(moduli: Option<Vec<u64>>) -> FfOptions {
    FfOptions { moduli, ..FfOptions::default() }
}

fn compute_charpoly(
    preset: Option<Preset>,
    spec: &ArrangementSpec,
    method: CharpolyMethod,
    moduli: Option<Vec<u64>>,
) -> Result<(IntPolynomial, Value), Failure> {
    let poly = match method {
        CharpolyMethod::Closed => match preset {
            Some(Preset { kind: PresetKind::A, n, m }) => charpoly_a_closed(n, m)?,
            Some(Preset { kind: PresetKind::C, n, m }) => charpoly_c_closed(n, m)?,
            _ => {
                return Err(Failure::Usage(
                    "closed-form polynomials exist for the A and C presets only".into(),
                ))
            }
        },
        CharpolyMethod::Ff => {
            let report = charpoly_ff_with(spec, &ff_options(moduli))?;
            let extra = json!({
                "moduli": report.plan.values(),
                "samples": report.samples.iter().map(|(q, c)| json!({"q": q, "count": c})).collect::<Vec<_>>(),
            });
            return Ok((report.polynomial, extra));
        }
        CharpolyMethod::Poset => charpoly_from_poset(&build_poset(spec)?),
        CharpolyMethod::Linear => charpoly_linear(spec)?,
    };
    Ok((poly, json!({})))
}

fn method_name<T: ValueEnum>(method: T) -> String {
    method.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn charpoly(target: &Target, method: CharpolyMethod, moduli: Option<Vec<u64>>) -> Outcome {
    let (preset, spec) = resolve(target)?;
    let (poly, extra) = compute_charpoly(preset, &spec, method, moduli)?;
    let name = target_name(preset, target);
    let mut json = json!({
        "target": name,
        "method": method_name(method),
        "charpoly": poly.to_string(),
        "coefficients": poly.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    if let (Value::Object(obj), Value::Object(more)) = (&mut json, extra) {
        obj.extend(more);
    }
    let mut report = Report::single("charpoly", poly.to_string(), json);
    report.columns = vec!["target", "method", "charpoly"];
    report.rows = vec![vec![name, method_name(method), poly.to_string()]];
    Ok((report, true))
}

fn regions(target: &Target, method: RegionsMethod, moduli: Option<Vec<u64>>) -> Outcome {
    let (preset, spec) = resolve(target)?;
    let n = spec.n();
    let count = match method {
        RegionsMethod::Closed => match preset {
            Some(Preset { kind, n, m }) => match kind {
                PresetKind::A => regions_a_closed(n, m)?,
                PresetKind::B => regions_b_closed(n, m)?,
                PresetKind::C => zaslavsky(&charpoly_c_closed(n, m)?, n)?,
                PresetKind::Gamma => regions_gamma_closed(n, m)?,
                PresetKind::Delta => regions_delta_closed(n, m)?,
            },
            None => return Err(Failure::Usage("closed forms need a preset".into())),
        },
        RegionsMethod::Ff => zaslavsky(&charpoly_ff_with(&spec, &ff_options(moduli))?.polynomial, n)?,
        RegionsMethod::Poset => zaslavsky(&charpoly_from_poset(&build_poset(&spec)?), n)?,
        RegionsMethod::Enum => match preset {
            Some(Preset { kind: PresetKind::A, n, m }) => {
                enumerate_sketches_with_limit(n, m, MAX_SKETCH_LETTERS)?.len().into()
            }
            Some(Preset { kind: PresetKind::B, n, m }) => {
                count_b_regions_enum_with_limit(n, m, MAX_PARTITION_LETTERS)?
            }
            _ => {
                return Err(Failure::Usage(
                    "region enumeration exists for the A and B presets only".into(),
                ))
            }
        },
    };
    let name = target_name(preset, target);
    let json = json!({
        "target": name,
        "method": method_name(method),
        "regions": count.to_string(),
    });
    let mut report = Report::single("regions", count.to_string(), json);
    report.columns = vec!["target", "method", "regions"];
    report.rows = vec![vec![name, method_name(method), count.to_string()]];
    Ok((report, true))
}

fn list_report(column: &'static str, items: Vec<String>, json: Value) -> Report {
    Report {
        columns: vec!["index", column],
        rows: items
            .iter()
            .enumerate()
            .map(|(i, s)| vec![(i + 1).to_string(), s.clone()])
            .collect(),
        plain: Some(items.join("\n")),
        json,
    }
}

fn enumerate(kind: EnumerateKind, n: usize, m: usize, limit: Option<usize>) -> Outcome {
    let report = match kind {
        EnumerateKind::Sketches => {
            let all = enumerate_sketches_with_limit(n, m, limit.unwrap_or(MAX_SKETCH_LETTERS))?;
            let items: Vec<String> = all.iter().map(Sketch::to_string).collect();
            list_report("sketch", items.clone(), json!(items))
        }
        EnumerateKind::Paths => {
            let all = enumerate_decorated_paths_with_limit(n, m, limit.unwrap_or(MAX_PATH_LETTERS))?;
            let items: Vec<String> = all.iter().map(DecoratedDyckPath::to_string).collect();
            let json: Vec<Value> = all
                .iter()
                .map(|d| json!({"path": d.to_string(), "steps": d.to_records()}))
                .collect();
            list_report("path", items, json!(json))
        }
        EnumerateKind::Partitions => {
            let all = enumerate_sketches_with_limit(n, m, limit.unwrap_or(MAX_PARTITION_LETTERS))?;
            let parts = all
                .iter()
                .map(sketch_to_partition)
                .collect::<Result<Vec<_>, _>>()?;
            let items: Vec<String> = parts.iter().map(DecoratedPartition::to_string).collect();
            let json: Vec<Value> = parts
                .iter()
                .map(|d| {
                    json!({
                        "partition": d.to_string(),
                        "canonical": d.is_canonical(),
                        "blocks": classify_blocks(d)
                            .into_iter()
                            .map(|(l, c)| (l.to_string(), json!(c)))
                            .collect::<serde_json::Map<_, _>>(),
                    })
                })
                .collect();
            list_report("partition", items, json!(json))
        }
    };
    Ok((report, true))
}

fn parse_sketch(input: &str) -> Result<Sketch, Failure> {
    Ok(input.parse::<Sketch>()?)
}

fn biject(direction: Direction, input: &str, m: Option<usize>) -> Outcome {
    let (text, json) = match direction {
        Direction::SketchToPath => {
            let d = sketch_to_path(&parse_sketch(input)?)?;
            (d.to_string(), json!({"path": d.to_string(), "steps": d.to_records()}))
        }
        Direction::PathToSketch => {
            let s = path_to_sketch(&DecoratedDyckPath::parse(input, m)?)?;
            (s.to_string(), json!({"sketch": s.to_string()}))
        }
        Direction::SketchToPartition => {
            let d = sketch_to_partition(&parse_sketch(input)?)?;
            (d.to_string(), json!({"partition": d.to_string()}))
        }
        Direction::PartitionToSketch => {
            let s = partition_to_sketch(&input.parse::<DecoratedPartition>()?)?;
            (s.to_string(), json!({"sketch": s.to_string()}))
        }
        Direction::Witness => {
            let p = witness_point(&parse_sketch(input)?)?;
            let text: Vec<String> = p.iter().map(LogPoint::to_string).collect();
            (text.join(" "), json!(p))
        }
        Direction::PointToSketch => {
            let m = m.ok_or_else(|| Failure::Usage("point-to-sketch needs --m".into()))?;
            let p: Vec<LogPoint> = serde_json::from_str(input)
                .map_err(|e| Failure::Usage(format!("bad point: {e}")))?;
            let s = point_to_sketch(&p, m)?;
            (s.to_string(), json!({"sketch": s.to_string()}))
        }
    };
    let mut report = Report::single("result", text.clone(), json);
    report.columns = vec!["direction", "input", "result"];
    report.rows = vec![vec![method_name(direction), input.to_string(), text]];
    Ok((report, true))
}

fn stats(stat: Stat) -> Outcome {
    let report = match stat {
        Stat::Compartments { n, m, limit } => {
            let dist = compartment_distribution_with_limit(n, m, limit.unwrap_or(MAX_PATH_LETTERS))?;
            let counts: Vec<String> = dist.iter().map(|c| c.to_string()).collect();
            Report {
                columns: vec!["compartments", "paths"],
                rows: counts
                    .iter()
                    .enumerate()
                    .map(|(j, c)| vec![j.to_string(), c.clone()])
                    .collect(),
                plain: None,
                json: json!({"n": n, "m": m, "distribution": counts}),
            }
        }
        Stat::Census { n, m, limit } => {
            let c = unlabeled_census_with_limit(n, m, limit.unwrap_or(MAX_PATH_LETTERS))?;
            let ups: Vec<String> = c.by_upsteps.iter().map(|x| x.to_string()).collect();
            let axis: Vec<String> = c.by_axis_points.iter().map(|x| x.to_string()).collect();
            Report {
                columns: vec!["k", "paths_with_k_upsteps", "paths_with_k_plus_1_axis_points"],
                rows: (0..=n)
                    .map(|k| vec![k.to_string(), ups[k].clone(), axis[k].clone()])
                    .collect(),
                plain: None,
                json: json!({"n": n, "m": m, "by_upsteps": ups, "by_axis_points": axis}),
            }
        }
        Stat::Poset { target } => {
            let (_, spec) = resolve(&target)?;
            let poset = build_poset(&spec)?;
            Report {
                columns: vec!["id", "dimension", "mobius", "covers"],
                rows: poset
                    .nodes()
                    .iter()
                    .enumerate()
                    .map(|(id, node)| {
                        let covers: Vec<String> = node.covers.iter().map(usize::to_string).collect();
                        vec![
                            id.to_string(),
                            node.flat.dimension().to_string(),
                            node.mobius.to_string(),
                            covers.join(" "),
                        ]
                    })
                    .collect(),
                plain: None,
                json: poset.to_json(),
            }
        }
    };
    Ok((report, true))
}

fn verify_table1() -> Outcome {
    let checks = check_reference_rows()?;
    let all_ok = checks.iter().all(|c| c.ok);
    let report = Report {
        columns: vec!["n", "m", "closed", "ff", "poset", "regions", "expected", "status"],
        rows: checks
            .iter()
            .map(|c| {
                vec![
                    c.n.to_string(),
                    c.m.to_string(),
                    c.closed.clone(),
                    c.ff.clone(),
                    c.poset.clone(),
                    c.regions.clone(),
                    c.expected_regions.to_string(),
                    if c.ok { "OK" } else { "FAIL" }.to_string(),
                ]
            })
            .collect(),
        plain: None,
        json: json!({"rows": checks, "ok": all_ok}),
    };
    Ok((report, all_ok))
}
