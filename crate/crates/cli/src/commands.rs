use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use vessel_demand::ingest::{filter_calls_with_stages, parse_port_calls_str, write_port_calls, StageCounts};
use vessel_demand::profiles::{build_arrival_profile, daily_arrival_vector, write_profile_csv, Aggregation, HOURS};
use vessel_demand::scenario::{total_demand, DemandCurve, ScenarioFile};
use vessel_demand::synthgen::{generate, SynthSpec};
use vessel_demand::{DailyArrivalVector, FilterConfig, PortCall, TypeFrequencyTable};

use crate::manifest::RunManifest;
use crate::svg;

/// Only this many row errors are echoed; the rest are counted.
const MAX_REPORTED_ROW_ERRORS: usize = 10;

pub enum ScenarioSource {
    File(PathBuf),
    Uniform(f64),
}

impl ScenarioSource {
    pub fn from_args(path: Option<PathBuf>, adoption: Option<f64>) -> Self {
        match (path, adoption) {
            (Some(p), _) => ScenarioSource::File(p),
            (None, Some(f)) => ScenarioSource::Uniform(f),
            (None, None) => ScenarioSource::Uniform(1.0),
        }
    }

    fn load(&self) -> Result<ScenarioFile> {
        match self {
            ScenarioSource::File(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading scenario {}", path.display()))?;
                ScenarioFile::parse(&text).with_context(|| format!("parsing scenario {}", path.display()))
            }
            ScenarioSource::Uniform(f) => {
                if !(0.0..=1.0).contains(f) {
                    bail!("adoption fraction {f} outside [0, 1]");
                }
                Ok(ScenarioFile {
                    default_adoption: Some(*f),
                    ..ScenarioFile::default()
                })
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            ScenarioSource::File(p) => p.display().to_string(),
            ScenarioSource::Uniform(f) => format!("adoption.* = {f}"),
        }
    }
}

struct Dataset {
    raw: Vec<u8>,
    calls: Vec<PortCall>,
    table: TypeFrequencyTable,
    stages: StageCounts,
    row_errors: usize,
}

fn load(input: &Path, filter: &FilterConfig) -> Result<Dataset> {
    filter.validate().context("invalid filter settings")?;
    let raw = fs::read(input).with_context(|| format!("reading {}", input.display()))?;
    let text = std::str::from_utf8(&raw).with_context(|| format!("{} is not UTF-8", input.display()))?;
    let (calls, errors) = parse_port_calls_str(text).with_context(|| format!("parsing {}", input.display()))?;
    for err in errors.iter().take(MAX_REPORTED_ROW_ERRORS) {
        eprintln!("warning: {}: {err}", input.display());
    }
    if errors.len() > MAX_REPORTED_ROW_ERRORS {
        eprintln!(
            "warning: {} more malformed rows skipped",
            errors.len() - MAX_REPORTED_ROW_ERRORS
        );
    }
    let (calls, table, stages) = filter_calls_with_stages(&calls, filter);
    Ok(Dataset {
        raw,
        calls,
        table,
        stages,
        row_errors: errors.len(),
    })
}

fn print_table(table: &TypeFrequencyTable) {
    println!("{:<24} {:>8}", "vessel type", "calls");
    for (class, n) in &table.entries {
        println!("{class:<24} {n:>8}");
    }
}

fn available(table: &TypeFrequencyTable) -> String {
    table.classes().collect::<Vec<_>>().join(", ")
}

pub fn synth(seed: u64, out: &Path, filter: &FilterConfig) -> Result<()> {
    let calls = generate(&SynthSpec::default_2019(seed))?;
    let file = fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
    let mut writer = BufWriter::new(file);
    write_port_calls(&mut writer, &calls)?;
    writer.flush().with_context(|| format!("writing {}", out.display()))?;

    println!("wrote {} calls to {}", calls.len(), out.display());
    let (_, table, _) = filter_calls_with_stages(&calls, filter);
    print_table(&table);
    Ok(())
}

pub fn summary(input: &Path, filter: &FilterConfig) -> Result<()> {
    let data = load(input, filter)?;
    let s = data.stages;
    println!("parsed rows          {}", s.input);
    println!("malformed rows       {}", data.row_errors);
    println!("in window            {}", s.in_window);
    println!("{:<20} {}", format!("under {} m", filter.max_length_m), s.under_length);
    println!("frequent classes     {}", s.frequent_classes);
    println!();
    print_table(&data.table);
    Ok(())
}

pub fn profile(
    input: &Path,
    class: &str,
    aggregation: Aggregation,
    allow_empty: bool,
    out: &Path,
    filter: &FilterConfig,
) -> Result<()> {
    let data = load(input, filter)?;
    if data.table.count(class).is_none() && !allow_empty {
        bail!(
            "unknown vessel class `{class}`; available: {}",
            available(&data.table)
        );
    }
    let profile = build_arrival_profile(&data.calls, class, &filter.window(), true)?;
    let mut buf = Vec::new();
    write_profile_csv(&mut buf, &profile)?;
    fs::write(out, buf).with_context(|| format!("writing {}", out.display()))?;

    let vector = daily_arrival_vector(&profile, aggregation);
    println!("{class}: {} calls, written to {}", profile.total(), out.display());
    println!("mean arrivals per hour ({aggregation}):");
    for (h, m) in vector.mean_arrivals.iter().enumerate() {
        println!("  {h:02}:00  {m:.4}");
    }
    Ok(())
}

pub fn demand(
    input: &Path,
    source: ScenarioSource,
    out_dir: &Path,
    want_svg: bool,
    filter: &FilterConfig,
) -> Result<()> {
    let data = load(input, filter)?;
    let scenario = source.load()?;
    let classes: Vec<&str> = data.table.classes().collect();
    let cfg = scenario.resolve(&classes)?;

    let window = filter.window();
    let mut vectors = BTreeMap::new();
    if data.calls.is_empty() {
        eprintln!("warning: no port calls survive filtering; demand is zero");
        for class in cfg.adoption.keys() {
            vectors.insert(class.clone(), DailyArrivalVector::zeros(class, cfg.aggregation));
        }
    } else {
        for class in cfg.adoption.keys() {
            if data.table.count(class).is_none() {
                bail!(
                    "scenario class `{class}` has no calls in the filtered data; available: {}",
                    available(&data.table)
                );
            }
            let profile = build_arrival_profile(&data.calls, class, &window, false)?;
            vectors.insert(class.clone(), daily_arrival_vector(&profile, cfg.aggregation));
        }
    }
    let curve = total_demand(&cfg, &vectors)?;

    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let mut emitted = Vec::new();

    let csv_path = out_dir.join("demand.csv");
    fs::write(&csv_path, demand_csv(&curve)).with_context(|| format!("writing {}", csv_path.display()))?;
    emitted.push("demand.csv".to_string());

    if want_svg {
        let svg_path = out_dir.join("demand.svg");
        fs::write(&svg_path, svg::render(&curve)).with_context(|| format!("writing {}", svg_path.display()))?;
        emitted.push("demand.svg".to_string());
    }

    emitted.push("manifest.json".to_string());
    let manifest = RunManifest::new(input, &data.raw, filter, source.describe(), out_dir, emitted);
    let manifest_path = out_dir.join("manifest.json");
    fs::write(&manifest_path, manifest.to_json()?)
        .with_context(|| format!("writing {}", manifest_path.display()))?;

    let slots: Vec<String> = curve.peak_slots.iter().map(|h| format!("{h:02}:00")).collect();
    println!(
        "peak demand {:.3} kW ({:.3} MW) at {}",
        curve.peak_kw,
        curve.peak_kw / 1000.0,
        slots.join(", ")
    );
    println!(
        "daily energy {:.3} kWh ({:.3} MWh)",
        curve.daily_energy_kwh(),
        curve.daily_energy_kwh() / 1000.0
    );
    Ok(())
}

/// `hour,<class...>,total_kw` with 24 rows. Values are printed in shortest
/// round-trip form, so the file carries full double precision.
pub fn demand_csv(curve: &DemandCurve) -> String {
    let mut out = String::from("hour");
    for class in curve.per_class.keys() {
        out.push(',');
        out.push_str(class);
    }
    out.push_str(",total_kw\n");
    for h in 0..HOURS {
        out.push_str(&h.to_string());
        for values in curve.per_class.values() {
            out.push_str(&format!(",{}", values[h]));
        }
        out.push_str(&format!(",{}\n", curve.total[h]));
    }
    out
}
