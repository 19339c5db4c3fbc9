//! Command-line front end.
//!
//! Exit codes: 0 ok, 2 usage or parse error, 3 cross-check or verification
//! mismatch, 4 I/O failure.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::classify::Report;
use crate::cubic::{classify_cubic, CubicCoeffs};
use crate::error::Error;
use crate::label::ConfigLabel;
use crate::quartic::{classify_quartic, QuarticCoeffs};
use crate::rat::{fmt_rat, int, parse_rat, Rat, Sign};
use crate::verify::{self, check_poly};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "rootconf",
    version,
    about = "Exact root-configuration classifier for monic cubics and quartics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one monic polynomial given by its lower coefficients.
    Classify(ClassifyArgs),
    /// Classify line-delimited coefficient records from stdin.
    Batch(BatchArgs),
    /// Label every point of a rational coefficient grid, as CSV.
    Sample(SampleArgs),
    /// Compare classifier, Sturm counts and oracle on generated inputs.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// x^3 + p x^2 + q x + r
    #[arg(
        long,
        num_args = 3,
        value_names = ["P", "Q", "R"],
        allow_hyphen_values = true,
        conflicts_with = "quartic",
        required_unless_present = "quartic"
    )]
    pub cubic: Option<Vec<String>>,
    /// x^4 + p x^3 + q x^2 + r x + s
    #[arg(long, num_args = 4, value_names = ["P", "Q", "R", "S"], allow_hyphen_values = true)]
    pub quartic: Option<Vec<String>>,
    /// Also run the Sturm engine and the oracle and report agreement.
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    #[arg(long)]
    pub cross_check: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, conflicts_with = "quartic", required_unless_present = "quartic")]
    pub cubic: bool,
    #[arg(long)]
    pub quartic: bool,
    /// Grid axis `AXIS=LO:HI:STEPS`; axes not given are fixed at 0.
    #[arg(long = "box", value_name = "AXIS=LO:HI:STEPS", allow_hyphen_values = true)]
    pub boxes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Constructed,
    Random,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub mode: VerifyMode,
    /// Instances per label (constructed) or per degree (random).
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A flat, ordered output record.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Vec<(String, Field)>);

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Str(String),
    Int(i64),
    Bool(bool),
}

impl Record {
    fn push(&mut self, key: &str, value: Field) {
        self.0.push((key.to_string(), value));
    }

    fn str(&mut self, key: &str, value: impl Into<String>) {
        self.push(key, Field::Str(value.into()));
    }

    fn rat(&mut self, key: &str, value: &Rat) {
        self.str(key, fmt_rat(value));
    }

    fn opt_rat(&mut self, key: &str, value: Option<&Rat>) {
        if let Some(v) = value {
            self.rat(key, v);
        }
    }

    fn witness(&mut self, key: &str, value: &Rat) {
        self.rat(key, value);
        self.push(&format!("{key}_sign"), Field::Int(Sign::of(value).as_i8().into()));
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// `key=value` pairs on one line; values containing spaces are quoted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = match v {
                Field::Str(s) if s.contains(' ') || s.is_empty() => write!(out, "{k}={s:?}"),
                Field::Str(s) => write!(out, "{k}={s}"),
                Field::Int(n) => write!(out, "{k}={n}"),
                Field::Bool(b) => write!(out, "{k}={b}"),
            };
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            match v {
                Field::Str(s) => map.serialize_entry(k, s)?,
                Field::Int(n) => map.serialize_entry(k, n)?,
                Field::Bool(b) => map.serialize_entry(k, b)?,
            }
        }
        map.end()
    }
}

fn parse_coeffs(tokens: &[String]) -> Result<Vec<Rat>, Error> {
    tokens.iter().map(|t| parse_rat(t)).collect()
}

fn classify_coeffs(coeffs: &[Rat]) -> Report {
    match coeffs {
        [p, q, r] => Report::Cubic(classify_cubic(&CubicCoeffs::new(p.clone(), q.clone(), r.clone()))),
        [p, q, r, s] => Report::Quartic(classify_quartic(&QuarticCoeffs::new(
            p.clone(),
            q.clone(),
            r.clone(),
            s.clone(),
        ))),
        _ => unreachable!("callers pass 3 or 4 coefficients"),
    }
}

/// Builds the report record; with `cross_check` also returns whether all
/// three methods agree.
pub fn report_record(coeffs: &[Rat], cross_check: bool) -> (Record, bool) {
    let report = classify_coeffs(coeffs);
    let mut rec = Record::default();
    rec.push("degree", Field::Int(coeffs.len() as i64));
    for (name, c) in ["p", "q", "r", "s"].iter().zip(coeffs) {
        rec.rat(name, c);
    }
    let poly = match &report {
        Report::Cubic(r) => r.coeffs.to_poly(),
        Report::Quartic(r) => r.coeffs.to_poly(),
    };
    rec.str("polynomial", poly.to_string());
    rec.str("label", report.label().as_str());
    rec.str("case", report.label().case());
    rec.str("complex_label", report.complex_label());

    match &report {
        Report::Cubic(r) => {
            let inv = &r.invariants;
            rec.witness("D", &inv.discriminant);
            rec.witness("P", &inv.derivative_disc);
            rec.witness("E", &inv.offset_numer);
            rec.witness("T", &inv.triple_defect);
            rec.opt_rat("double_root", r.double_root.as_ref());
            rec.opt_rat("single_root", r.single_root.as_ref());
            rec.opt_rat("single_offset", r.single_offset.as_ref());
            rec.opt_rat("triple_root", r.triple_root.as_ref());
            if let Some(n) = r.positive_single_count {
                rec.push("positive_single_count", Field::Int(n as i64));
            }
        }
        Report::Quartic(r) => {
            let inv = &r.invariants;
            for (name, v) in [
                ("D", &inv.d),
                ("D1", &inv.d1),
                ("D2", &inv.d2),
                ("D3", &inv.d3),
                ("D4", &inv.d4),
                ("D5", &inv.d5),
                ("G", &inv.g),
                ("H", &inv.h),
                ("K", &inv.k),
            ] {
                rec.witness(name, v);
            }
            rec.opt_rat("double_root", r.double_root.as_ref());
            if let Some(lq) = &r.leftover_quadratic {
                rec.str("leftover_quadratic", lq.to_string());
            }
            rec.opt_rat("triple_root", r.triple_root.as_ref());
            rec.opt_rat("single_root", r.single_root.as_ref());
            rec.opt_rat("quadruple_root", r.quadruple_root.as_ref());
            if let Some(g) = &r.double_pair_quadratic {
                rec.str("double_pair_quadratic", g.to_string());
            }
        }
    }

    let mut agree = true;
    if cross_check {
        match check_poly(&poly, None) {
            Ok(check) => {
                rec.push("sturm_distinct_real_roots", Field::Int(check.sturm_count as i64));
                rec.push("sturm_agrees", Field::Bool(check.sturm_agrees()));
                rec.str(
                    "oracle_label",
                    check.oracle.config().map_or("unrecognized", ConfigLabel::as_str),
                );
                rec.str("oracle_roots", check.oracle.to_string());
                rec.push("oracle_agrees", Field::Bool(check.oracle_agrees()));
                agree = check.passed();
            }
            Err(e) => {
                rec.str("cross_check_error", e.to_string());
                agree = false;
            }
        }
    }
    (rec, agree)
}

fn io_exit(err: &mut dyn Write, e: io::Error) -> u8 {
    let _ = writeln!(err, "error: {e}");
    EXIT_IO
}

pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Classify(args) => cmd_classify(args, out, err),
        Command::Batch(args) => cmd_batch(args, input, out, err),
        Command::Sample(args) => cmd_sample(args, out, err),
        Command::Verify(args) => cmd_verify(args, out, err),
    };
    let code = match result {
        Ok(code) => code,
        Err(e) => return io_exit(err, e),
    };
    match out.flush() {
        Ok(()) => code,
        Err(e) => io_exit(err, e),
    }
}

fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    let tokens = args.cubic.as_ref().or(args.quartic.as_ref()).expect("clap enforces one");
    let coeffs = match parse_coeffs(tokens) {
        Ok(c) => c,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let (rec, agree) = report_record(&coeffs, args.cross_check);
    if args.json {
        writeln!(out, "{}", rec.to_json())?;
    } else {
        for (k, v) in &rec.0 {
            match v {
                Field::Str(s) => writeln!(out, "{k}: {s}")?,
                Field::Int(n) => writeln!(out, "{k}: {n}")?,
                Field::Bool(b) => writeln!(out, "{k}: {b}")?,
            }
        }
    }
    if !agree {
        writeln!(err, "error: cross-check disagreement")?;
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}

/// Splits a batch line into coefficient tokens. Accepts `[a, b, c]`,
/// `a,b,c` or whitespace-separated tokens.
pub fn parse_batch_line(line: &str) -> Result<Vec<Rat>, String> {
    let body = line.trim();
    let body = body.strip_prefix('[').unwrap_or(body);
    let body = body.strip_suffix(']').unwrap_or(body);
    let tokens: Vec<&str> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() != 3 && tokens.len() != 4 {
        return Err(format!("expected 3 or 4 coefficients, got {}", tokens.len()));
    }
    tokens
        .iter()
        .map(|t| parse_rat(t.trim_matches('"')).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_batch(
    args: &BatchArgs,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let mut code = EXIT_OK;
    let mut line = String::new();
    let mut lineno = 0i64;
    loop {
        line.clear();
        if input.read_line(&mut line)? == 0 {
            break;
        }
        lineno += 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut rec = Record::default();
        rec.push("line", Field::Int(lineno));
        match parse_batch_line(&line) {
            Ok(coeffs) => {
                let (body, agree) = report_record(&coeffs, args.cross_check);
                rec.0.extend(body.0);
                if !agree {
                    code = code.max(EXIT_MISMATCH);
                }
            }
            Err(msg) => {
                rec.str("error", msg);
                code = code.max(EXIT_USAGE);
            }
        }
        writeln!(out, "{}", rec.render(args.json))?;
    }
    if code == EXIT_MISMATCH {
        writeln!(err, "error: cross-check disagreement")?;
    }
    Ok(code)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    pub lo: Rat,
    pub hi: Rat,
    pub steps: u32,
}

impl Axis {
    pub fn fixed(x: Rat) -> Axis {
        Axis {
            lo: x.clone(),
            hi: x,
            steps: 1,
        }
    }

    /// Grid values: `lo` alone for one step, else `steps` evenly spaced
    /// values from `lo` to `hi` inclusive.
    pub fn values(&self) -> Vec<Rat> {
        if self.steps == 1 {
            return vec![self.lo.clone()];
        }
        let span = &self.hi - &self.lo;
        let last = int(i64::from(self.steps) - 1);
        (0..self.steps)
            .map(|i| &self.lo + &span * int(i64::from(i)) / &last)
            .collect()
    }
}

/// Parses `AXIS=LO:HI:STEPS` into the axis name and its range.
pub fn parse_box(arg: &str) -> Result<(String, Axis), String> {
    let bad = || format!("malformed box `{arg}`, expected AXIS=LO:HI:STEPS");
    let (name, range) = arg.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = range.split(':').collect();
    let [lo, hi, steps] = parts.as_slice() else {
        return Err(bad());
    };
    let lo = parse_rat(lo).map_err(|e| e.to_string())?;
    let hi = parse_rat(hi).map_err(|e| e.to_string())?;
    let steps: u32 = steps
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("invalid step count `{steps}` in `{arg}`"))?;
    if lo > hi {
        return Err(format!("empty range in `{arg}`"));
    }
    Ok((name.to_string(), Axis { lo, hi, steps }))
}

fn cmd_sample(args: &SampleArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    let names: &[&str] = if args.quartic { &["p", "q", "r", "s"] } else { &["p", "q", "r"] };
    let mut axes: Vec<Option<Axis>> = vec![None; names.len()];
    for arg in &args.boxes {
        let parsed = parse_box(arg).and_then(|(name, axis)| {
            let i = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| format!("unknown axis `{name}`"))?;
            if axes[i].is_some() {
                return Err(format!("axis `{name}` given twice"));
            }
            Ok((i, axis))
        });
        match parsed {
            Ok((i, axis)) => axes[i] = Some(axis),
            Err(msg) => {
                writeln!(err, "error: {msg}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let grids: Vec<Vec<Rat>> = axes
        .into_iter()
        .map(|a| a.unwrap_or_else(|| Axis::fixed(int(0))).values())
        .collect();

    writeln!(out, "{},label", names.join(","))?;
    let mut index = vec![0usize; grids.len()];
    'grid: loop {
        let point: Vec<Rat> = index.iter().zip(&grids).map(|(&i, g)| g[i].clone()).collect();
        let label = classify_coeffs(&point).label();
        let coords: Vec<String> = point.iter().map(fmt_rat).collect();
        writeln!(out, "{},{}", coords.join(","), label)?;

        // Odometer increment, last axis fastest.
        for k in (0..index.len()).rev() {
            index[k] += 1;
            if index[k] < grids[k].len() {
                continue 'grid;
            }
            index[k] = 0;
        }
        break;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    let count = args.count as usize;
    let result = match args.mode {
        VerifyMode::Constructed => verify::verify_constructed(count, args.seed),
        VerifyMode::Random => verify::verify_random(count, args.seed),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_MISMATCH);
        }
    };
    let mode = match args.mode {
        VerifyMode::Constructed => "constructed",
        VerifyMode::Random => "random",
    };
    writeln!(out, "mode: {mode}")?;
    writeln!(out, "count: {count}")?;
    writeln!(out, "seed: {}", args.seed)?;
    let width = report.per_label.keys().map(|l| l.as_str().len()).max().unwrap_or(0);
    for (label, (passed, total)) in &report.per_label {
        writeln!(out, "{:width$}  {passed}/{total}", label.as_str())?;
    }
    writeln!(out, "checks: {}", report.total())?;
    writeln!(out, "mismatches: {}", report.mismatches.len())?;
    for m in &report.mismatches {
        writeln!(out, "counterexample:\n  {}", m.describe())?;
    }
    if report.all_agree() {
        writeln!(out, "result: ok")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "result: MISMATCH")?;
        Ok(EXIT_MISMATCH)
    }
}
