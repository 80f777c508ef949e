//! Command-line front end: parse diagram spec files or inline family
//! parameters, extract curve words, compute wave-surgery meridians, classify
//! exteriors, sweep census boxes, and run the calibrated check suite.
//!
//! Exit codes: 0 success; 1 invalid input (parse errors cite line numbers);
//! 2 internal invariant violation (the offending tuple is named).
//!
//! Diagram spec file grammar (UTF-8 text, `#` starts a comment):
//!
//! ```text
//! family = fig1a | fig1b | fig9 | fig15 | custom
//! # family instances: one `key = integer` line per parameter
//! a = 1
//! n = 2
//! s = 3
//! # custom diagrams: bands as label*weight lists, chords as
//! # <handle><band>.<end>-<handle><band>.<end>*<weight> lists
//! handleA.bands = 3*1, 2*1, 1*1
//! handleB.bands = 2*2, 1*1
//! chords = A0.1-B0.0*1, A1.1-B0.0*1, B0.1-A0.0*1
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rrknot_core::classify::{census, classify_exterior, CensusFamily, CensusRow, KnotClass};
use rrknot_core::diagrams::{
    family_diagram, fig1b_certificate, validate, AnnulusPattern, Band, Chord, FamilyParams,
    Fig1bCert, Handle, RRDiagram, SlotRef,
};
use rrknot_core::homology::abelianize;
use rrknot_core::verify::run_all;
use rrknot_core::waves::{meridian_candidates, Shorter};
use rrknot_core::words::{minimal_length, CyclicWord, Gen};

#[derive(Parser)]
#[command(name = "rrknot", version, about = "R-R diagram words, meridians, and classification")]
struct Cli {
    /// Output format for data streams.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print a version line (to stderr) before the data stream.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
enum Cmd {
    /// Extract the curve words of a diagram.
    Word {
        #[command(flatten)]
        input: DiagramInput,
        /// Also report each curve's bounded minimal length at this search depth.
        #[arg(long, default_value_t = 0)]
        budget: usize,
    },
    /// Compute the meridian pair (M1, M2) by wave surgery, with homology checks.
    Meridians {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Classify the exterior of a family instance.
    Classify {
        #[command(flatten)]
        input: DiagramInput,
    },
    /// Sweep a family's parameter box and stream census rows.
    Census {
        /// Which family to sweep.
        #[arg(long, value_enum)]
        family: CensusWhich,
        /// Per-parameter bound of the sweep box.
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
    /// Run the full calibrated criteria suite and print a pass/fail summary.
    Check,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusWhich {
    Fig1b,
    Fig9,
}

#[derive(Args)]
struct DiagramInput {
    /// Read the diagram from a spec file instead of inline flags.
    #[arg(long, conflicts_with = "family")]
    file: Option<std::path::PathBuf>,
    /// Family name for inline parameters.
    #[arg(long)]
    family: Option<String>,
    #[arg(short)]
    a: Option<i64>,
    #[arg(short)]
    b: Option<i64>,
    #[arg(short)]
    c: Option<i64>,
    #[arg(short)]
    m: Option<i64>,
    #[arg(short)]
    n: Option<i64>,
    #[arg(short)]
    s: Option<i64>,
    #[arg(short)]
    q: Option<i64>,
    #[arg(short)]
    r: Option<i64>,
    #[arg(short)]
    u: Option<i64>,
    #[arg(short)]
    t: Option<i64>,
}

/// A parsed diagram source: a family instance or an explicit custom diagram.
enum Spec {
    Family(FamilyParams),
    Custom(RRDiagram),
}

/// Errors mapped to exit codes.
enum CliError {
    /// Exit 1: bad input (flags or file contents).
    Input(String),
    /// Exit 2: an internal invariant failed; the message names the tuple.
    Internal(String),
}

fn input_err<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Input(msg.into()))
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe (e.g. `head`) closes stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    if cli.verbose {
        eprintln!("rrknot {}", env!("CARGO_PKG_VERSION"));
    }
    let result = match &cli.cmd {
        Cmd::Word { input, budget } => cmd_word(input, *budget, cli.format),
        Cmd::Meridians { input } => cmd_meridians(input, cli.format),
        Cmd::Classify { input } => cmd_classify(input, cli.format),
        Cmd::Census { family, bound } => cmd_census(*family, *bound, cli.format),
        Cmd::Check => cmd_check(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(m)) => {
            eprintln!("internal invariant violation: {m}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// Input assembly
// ---------------------------------------------------------------------------

/// Builds family parameters from a name and `key = value` assignments,
/// requiring exactly the family's parameter set.
fn family_from_values(
    family: &str,
    vals: &BTreeMap<String, i64>,
) -> Result<FamilyParams, String> {
    let keys: &[&str] = match family {
        "fig1a" => &["s"],
        "fig1b" => &["a", "b", "m", "n", "s"],
        "fig9" => &["a", "b", "c", "m", "n", "s"],
        "fig15" => &["a", "b", "c", "q", "r", "u", "t"],
        other => return Err(format!("unknown family `{other}` (expected fig1a, fig1b, fig9, or fig15)")),
    };
    for k in vals.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(format!("parameter `{k}` does not apply to family {family}"));
        }
    }
    let get = |k: &str| -> Result<i64, String> {
        vals.get(k).copied().ok_or_else(|| format!("family {family} requires parameter `{k}`"))
    };
    let get_u32 = |k: &str| -> Result<u32, String> {
        let v = get(k)?;
        u32::try_from(v).map_err(|_| format!("parameter `{k}` must be in 0..={}, got {v}", u32::MAX))
    };
    let p = match family {
        "fig1a" => FamilyParams::Fig1a { s: get("s")? },
        "fig1b" => FamilyParams::Fig1b {
            a: get_u32("a")?,
            b: get_u32("b")?,
            m: get("m")?,
            n: get("n")?,
            s: get("s")?,
        },
        "fig9" => FamilyParams::Fig9 {
            a: get_u32("a")?,
            b: get_u32("b")?,
            c: get_u32("c")?,
            m: get("m")?,
            n: get("n")?,
            s: get("s")?,
        },
        _ => FamilyParams::Fig15 {
            a: get_u32("a")?,
            b: get_u32("b")?,
            c: get_u32("c")?,
            q: get("q")?,
            r: get("r")?,
            u: get("u")?,
            t: get("t")?,
        },
    };
    p.check().map_err(|e| e.to_string())?;
    Ok(p)
}

fn inline_values(input: &DiagramInput) -> BTreeMap<String, i64> {
    let mut vals = BTreeMap::new();
    let pairs: [(&str, Option<i64>); 10] = [
        ("a", input.a),
        ("b", input.b),
        ("c", input.c),
        ("m", input.m),
        ("n", input.n),
        ("s", input.s),
        ("q", input.q),
        ("r", input.r),
        ("u", input.u),
        ("t", input.t),
    ];
    for (k, v) in pairs {
        if let Some(v) = v {
            vals.insert(k.to_string(), v);
        }
    }
    vals
}

fn load_spec(input: &DiagramInput) -> Result<Spec, CliError> {
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return parse_spec_file(&text).map_err(CliError::Input);
    }
    let Some(family) = &input.family else {
        return input_err("provide either --file or --family with parameter flags");
    };
    let p = family_from_values(family, &inline_values(input)).map_err(CliError::Input)?;
    Ok(Spec::Family(p))
}

/// Parses the diagram spec file grammar; errors cite 1-based line numbers.
fn parse_spec_file(text: &str) -> Result<Spec, String> {
    let mut family: Option<(usize, String)> = None;
    let mut vals: BTreeMap<String, i64> = BTreeMap::new();
    let mut handle_a: Option<Vec<Band>> = None;
    let mut handle_b: Option<Vec<Band>> = None;
    let mut chords: Option<Vec<Chord>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {lineno}: expected `key = value`, got `{line}`"));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "family" => {
                if family.is_some() {
                    return Err(format!("line {lineno}: `family` given twice"));
                }
                family = Some((lineno, value.to_string()));
            }
            "handleA.bands" => handle_a = Some(parse_bands(value, lineno)?),
            "handleB.bands" => handle_b = Some(parse_bands(value, lineno)?),
            "chords" => chords = Some(parse_chords(value, lineno)?),
            k if ["a", "b", "c", "m", "n", "s", "q", "r", "u", "t"].contains(&k) => {
                let v: i64 = value
                    .parse()
                    .map_err(|_| format!("line {lineno}: `{value}` is not a 64-bit integer"))?;
                if vals.insert(k.to_string(), v).is_some() {
                    return Err(format!("line {lineno}: parameter `{k}` given twice"));
                }
            }
            other => return Err(format!("line {lineno}: unknown key `{other}`")),
        }
    }
    let Some((fam_line, family)) = family else {
        return Err(String::from("line 1: missing `family = ...` line"));
    };
    if family == "custom" {
        if !vals.is_empty() {
            return Err(format!("line {fam_line}: custom diagrams take band/chord lists, not parameters"));
        }
        let a = handle_a.ok_or(format!("line {fam_line}: custom diagram needs `handleA.bands`"))?;
        let b = handle_b.ok_or(format!("line {fam_line}: custom diagram needs `handleB.bands`"))?;
        let ch = chords.ok_or(format!("line {fam_line}: custom diagram needs `chords`"))?;
        let d = RRDiagram::new(Handle { bands: a }, Handle { bands: b }, AnnulusPattern { chords: ch });
        let violations = validate(&d);
        if !violations.is_empty() {
            let mut msg = format!("line {fam_line}: diagram fails validation:");
            for v in violations {
                let _ = write!(msg, " {v:?};");
            }
            return Err(msg);
        }
        return Ok(Spec::Custom(d));
    }
    if handle_a.is_some() || handle_b.is_some() || chords.is_some() {
        return Err(format!("line {fam_line}: band/chord lists apply only to `family = custom`"));
    }
    family_from_values(&family, &vals)
        .map_err(|e| format!("line {fam_line}: {e}"))
        .map(Spec::Family)
}

/// `label*weight` pairs, comma-separated.
fn parse_bands(value: &str, lineno: usize) -> Result<Vec<Band>, String> {
    let mut out = Vec::new();
    for item in value.split(',') {
        let item = item.trim();
        let Some((label, weight)) = item.split_once('*') else {
            return Err(format!("line {lineno}: band `{item}` is not `label*weight`"));
        };
        let label: i64 = label
            .trim()
            .parse()
            .map_err(|_| format!("line {lineno}: band label `{label}` is not an integer"))?;
        let weight: u32 = weight
            .trim()
            .parse()
            .map_err(|_| format!("line {lineno}: band weight `{weight}` is not a nonnegative integer"))?;
        out.push(Band { label, weight });
    }
    Ok(out)
}

/// `<handle><band>.<end>-<handle><band>.<end>*<weight>` triples, comma-separated.
fn parse_chords(value: &str, lineno: usize) -> Result<Vec<Chord>, String> {
    fn slot(spec: &str, lineno: usize) -> Result<SlotRef, String> {
        let err = || format!("line {lineno}: slot `{spec}` is not like `A0.1`");
        let mut chars = spec.chars();
        let handle = match chars.next() {
            Some('A') => Gen::A,
            Some('B') => Gen::B,
            _ => return Err(err()),
        };
        let rest: String = chars.collect();
        let Some((band, end)) = rest.split_once('.') else {
            return Err(err());
        };
        let band: usize = band.parse().map_err(|_| err())?;
        let end: u8 = end.parse().map_err(|_| err())?;
        if end > 1 {
            return Err(format!("line {lineno}: slot end must be 0 or 1 in `{spec}`"));
        }
        Ok(SlotRef { handle, band, end })
    }
    let mut out = Vec::new();
    for item in value.split(',') {
        let item = item.trim();
        let Some((ends, weight)) = item.rsplit_once('*') else {
            return Err(format!("line {lineno}: chord `{item}` is not `slot-slot*weight`"));
        };
        let Some((from, to)) = ends.split_once('-') else {
            return Err(format!("line {lineno}: chord `{item}` is not `slot-slot*weight`"));
        };
        let weight: u32 = weight
            .trim()
            .parse()
            .map_err(|_| format!("line {lineno}: chord weight `{weight}` is not a nonnegative integer"))?;
        out.push(Chord { from: slot(from.trim(), lineno)?, to: slot(to.trim(), lineno)?, weight });
    }
    Ok(out)
}

fn build_diagram(spec: &Spec) -> Result<RRDiagram, CliError> {
    match spec {
        Spec::Family(p) => family_diagram(p).map_err(|e| CliError::Input(e.to_string())),
        Spec::Custom(d) => Ok(d.clone()),
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_word(input: &DiagramInput, budget: usize, format: Format) -> Result<(), CliError> {
    let spec = load_spec(input)?;
    let d = build_diagram(&spec)?;
    let curves = rrknot_core::diagrams::extract_curves(&d)
        .map_err(|e| CliError::Input(format!("curve extraction failed: {e:?}")))?;
    for (i, w) in curves.iter().enumerate() {
        let min = (budget > 0).then(|| minimal_length(w, budget));
        match format {
            Format::Text => {
                if let Some(min) = &min {
                    let tag = if min.exhausted { "search exhausted" } else { "budget limited" };
                    println!("{w}  (minimal length {} via {}, {tag})", min.length, min.achiever);
                } else {
                    println!("{w}");
                }
            }
            Format::Csv => {
                if i == 0 {
                    if min.is_some() {
                        println!("index,word,min_length,exhausted");
                    } else {
                        println!("index,word");
                    }
                }
                if let Some(min) = &min {
                    println!("{i},{w},{},{}", min.length, min.exhausted);
                } else {
                    println!("{i},{w}");
                }
            }
            Format::Jsonl => {
                let mut obj = serde_json::json!({ "index": i, "word": w.to_string() });
                if let Some(min) = &min {
                    obj["min_length"] = serde_json::json!(min.length);
                    obj["exhausted"] = serde_json::json!(min.exhausted);
                }
                println!("{obj}");
            }
        }
    }
    Ok(())
}

fn cmd_meridians(input: &DiagramInput, format: Format) -> Result<(), CliError> {
    let spec = load_spec(input)?;
    let d = build_diagram(&spec)?;
    let pair = meridian_candidates(&d).map_err(|e| CliError::Input(e.to_string()))?;
    let r = d.marks.r.as_ref().expect("surgery requires a marked relator");
    let len_ok = pair.m1.len() + pair.m2.len() <= r.len();
    let hom_ok = abelianize(&pair.m1).add(abelianize(&pair.m2)) == abelianize(r);
    let shorter = match pair.shorter {
        Shorter::First => "first",
        Shorter::Second => "second",
        Shorter::Tie => "tie",
    };
    match format {
        Format::Text => {
            println!("R  = {r}");
            println!("M1 = {}", pair.m1);
            println!("M2 = {}", pair.m2);
            println!("shorter = {shorter}");
            println!(
                "length check: |M1| + |M2| = {} <= |R| = {}: {}",
                pair.m1.len() + pair.m2.len(),
                r.len(),
                if len_ok { "ok" } else { "VIOLATED" }
            );
            let sum = abelianize(&pair.m1).add(abelianize(&pair.m2));
            println!(
                "homology check: ab(M1) + ab(M2) = ({},{}) = ab(R): {}",
                sum.x,
                sum.y,
                if hom_ok { "ok" } else { "VIOLATED" }
            );
        }
        Format::Csv => {
            println!("r,m1,m2,shorter,length_ok,homology_ok");
            println!("{r},{},{},{shorter},{len_ok},{hom_ok}", pair.m1, pair.m2);
        }
        Format::Jsonl => {
            println!(
                "{}",
                serde_json::json!({
                    "r": r.to_string(),
                    "m1": pair.m1.to_string(),
                    "m2": pair.m2.to_string(),
                    "shorter": shorter,
                    "length_ok": len_ok,
                    "homology_ok": hom_ok,
                })
            );
        }
    }
    if !(len_ok && hom_ok) {
        return Err(CliError::Internal(format!("meridian invariants violated for R = {r}")));
    }
    Ok(())
}

/// The certificate belonging to a two-band instance, when one exists.
fn spec_certificate(p: &FamilyParams) -> Option<Fig1bCert> {
    match *p {
        FamilyParams::Fig1b { a, b, m, n, s } if m >= 1 && n >= 1 => {
            fig1b_certificate(a, b, m, n, s)
        }
        _ => None,
    }
}

fn cmd_classify(input: &DiagramInput, format: Format) -> Result<(), CliError> {
    let spec = load_spec(input)?;
    let Spec::Family(p) = &spec else {
        return input_err("classification applies to family instances, not custom diagrams");
    };
    let class = classify_exterior(p).map_err(|e| CliError::Input(e.to_string()))?;
    let cert = spec_certificate(p);
    match format {
        Format::Text => match &cert {
            Some(c) => println!("{class}, condition {}, u={}, delta={:+}", c.condition, c.u, c.delta),
            None => println!("{class}"),
        },
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let record = match &cert {
                Some(c) => vec![
                    class.to_string(),
                    c.condition.to_string(),
                    c.u.to_string(),
                    format!("{:+}", c.delta),
                ],
                None => vec![class.to_string(), String::new(), String::new(), String::new()],
            };
            write_csv(&mut w, &["knot_class", "condition", "u", "delta"], [record])?;
        }
        Format::Jsonl => {
            let obj = match &cert {
                Some(c) => serde_json::json!({
                    "knot_class": class.to_string(),
                    "condition": c.condition,
                    "u": c.u,
                    "delta": c.delta,
                }),
                None => serde_json::json!({
                    "knot_class": class.to_string(),
                    "condition": serde_json::Value::Null,
                    "u": serde_json::Value::Null,
                    "delta": serde_json::Value::Null,
                }),
            };
            println!("{obj}");
        }
    }
    Ok(())
}

/// Writes a header and records to a CSV stream, mapping I/O failure to an
/// input-side error (closed pipe or full disk, not an invariant violation).
fn write_csv<W: std::io::Write>(
    w: &mut csv::Writer<W>,
    header: &[&str],
    records: impl IntoIterator<Item = Vec<String>>,
) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Input(format!("writing CSV: {e}"));
    w.write_record(header).map_err(io)?;
    for record in records {
        w.write_record(&record).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Input(format!("writing CSV: {e}")))
}

/// The census columns shared by the CSV header and the JSON-lines mirror.
const CENSUS_COLUMNS: [&str; 17] = [
    "family", "a", "b", "c", "m", "n", "s", "u", "delta", "condition", "knot_class", "cable_c1",
    "cable_c2", "comp_p", "comp_q", "m1", "m2",
];

fn census_fields(row: &CensusRow) -> Vec<Option<String>> {
    let family = match row.family {
        CensusFamily::Fig1b => "fig1b",
        CensusFamily::Fig9 => "fig9",
    };
    let cable = match &row.knot_class {
        KnotClass::CableOfTorus { cable, companion } => Some((*cable, *companion)),
        _ => None,
    };
    let word = |w: &Option<CyclicWord>| w.as_ref().map(|w| w.to_string());
    vec![
        Some(family.to_string()),
        Some(row.a.to_string()),
        Some(row.b.to_string()),
        row.c.map(|c| c.to_string()),
        Some(row.m.to_string()),
        Some(row.n.to_string()),
        Some(row.s.to_string()),
        row.cert.as_ref().map(|c| c.u.to_string()),
        row.cert.as_ref().map(|c| format!("{:+}", c.delta)),
        row.cert.as_ref().map(|c| c.condition.to_string()),
        Some(row.knot_class.to_string()),
        cable.map(|((c1, _), _)| c1.to_string()),
        cable.map(|((_, c2), _)| c2.to_string()),
        cable.map(|(_, (p, _))| p.to_string()),
        cable.map(|(_, (_, q))| q.to_string()),
        word(&row.m1),
        word(&row.m2),
    ]
}

fn cmd_census(which: CensusWhich, bound: u32, format: Format) -> Result<(), CliError> {
    let family = match which {
        CensusWhich::Fig1b => CensusFamily::Fig1b,
        CensusWhich::Fig9 => CensusFamily::Fig9,
    };
    let rows = census(family, bound).map_err(CliError::Internal)?;
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        let records = rows.iter().map(|row| {
            census_fields(row).into_iter().map(Option::unwrap_or_default).collect()
        });
        return write_csv(&mut w, &CENSUS_COLUMNS, records);
    }
    for row in &rows {
        let fields = census_fields(row);
        match format {
            Format::Text => {
                let mut line = String::new();
                for (name, value) in CENSUS_COLUMNS.iter().zip(&fields) {
                    if let Some(v) = value {
                        if !line.is_empty() {
                            line.push(' ');
                        }
                        let _ = write!(line, "{name}={v}");
                    }
                }
                println!("{line}");
            }
            Format::Csv => unreachable!("handled above"),
            Format::Jsonl => {
                let mut obj = serde_json::Map::new();
                for (name, value) in CENSUS_COLUMNS.iter().zip(&fields) {
                    let v = match value {
                        Some(v) => serde_json::Value::String(v.clone()),
                        None => serde_json::Value::Null,
                    };
                    obj.insert((*name).to_string(), v);
                }
                println!("{}", serde_json::Value::Object(obj));
            }
        }
    }
    Ok(())
}

fn cmd_check() -> Result<(), CliError> {
    let reports = run_all();
    let mut passed = 0;
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} — {} ({})", r.index, r.name, r.detail);
        if r.passed {
            passed += 1;
        }
    }
    println!("{passed}/{} criteria passed", reports.len());
    if passed != reports.len() {
        return Err(CliError::Internal(format!(
            "{} criteria failed",
            reports.len() - passed
        )));
    }
    Ok(())
}
