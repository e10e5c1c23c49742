//! Command-line front end. [`run`] parses arguments, dispatches, writes the
//! result and returns the process exit code: 0 on success, 1 for bad input,
//! 2 when an identity that must hold fails.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::braidrep::BraidWord;
use crate::error::{Error, Result};
use crate::exactring::render::{exponent_label, parse_exponent_label, poly_text};
use crate::exactring::{LaurentPoly, LaurentSeries, Variable};
use crate::twistcalc::{closure_scalar, family, formula_table, stabilization_series, torus_oracle, twist_coeffs};
use crate::verify::run_checks;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_IDENTITY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "alextwist", version, about = "Alexander polynomials of braid closures and full-twist families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial of a braid closure
    Alex(BraidArgs),
    /// Δ(L_m) computed directly for a range of twist counts
    Family(RangeArgs),
    /// Δ(L_m) through the twist expansion, checked against direct computation
    Formula(RangeArgs),
    /// The twist coefficients f_{m,j} for j = 0..n
    Coeffs(CoeffArgs),
    /// Stabilization series of the family base · τ^m
    Stabilize(StabilizeArgs),
    /// Closed-form Alexander polynomial of the torus knot or link T(n, l)
    Torus(TorusArgs),
    /// Run the structural identity checks up to a strand bound
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum VarArg {
    Q,
    #[default]
    T,
}

impl From<VarArg> for Variable {
    fn from(v: VarArg) -> Self {
        match v {
            VarArg::Q => Variable::Q,
            VarArg::T => Variable::T,
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t)]
    pub var: VarArg,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(long)]
    pub n: usize,
    /// Signed generator indices separated by spaces or commas
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub braid: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub braid: String,
    #[arg(long, conflicts_with = "m_range")]
    pub m: Option<usize>,
    /// Range `A..B` (end excluded) or `A..=B`
    #[arg(long)]
    pub m_range: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "m_range")]
    pub m: Option<usize>,
    #[arg(long)]
    pub m_range: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StabilizeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub braid: String,
    /// Number of consecutive q-exponents kept in the series
    #[arg(long, default_value_t = 24)]
    pub precision: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TorusArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest strand count exercised
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Parses `A..B` (inclusive) or a single integer.
pub fn parse_m_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("bad m range {text:?}, expected A..B or A..=B"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let range = if let Some((a, b)) = text.split_once("..=") {
        num(a)?..num(b)? + 1
    } else if let Some((a, b)) = text.split_once("..") {
        num(a)?..num(b)?
    } else {
        let m = num(text)?;
        m..m + 1
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range.collect())
}

fn ms_of(m: Option<usize>, range: &Option<String>) -> Result<Vec<usize>> {
    match (m, range) {
        (Some(m), _) => Ok(vec![m]),
        (None, Some(r)) => parse_m_range(r),
        (None, None) => Err(Error::InvalidArgument("one of --m or --m-range is required".into())),
    }
}

/// `{exponent label: decimal coefficient}`.
pub fn poly_to_json(p: &LaurentPoly, var: Variable) -> Value {
    let map: Map<String, Value> = p
        .terms()
        .map(|(e, c)| (exponent_label(e, var), Value::String(c.to_string())))
        .collect();
    Value::Object(map)
}

/// Inverse of [`poly_to_json`].
pub fn poly_from_json(v: &Value, var: Variable) -> Result<LaurentPoly> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidArgument("polynomial must be a JSON object".into()))?;
    let mut p = LaurentPoly::zero();
    for (k, c) in obj {
        let e = parse_exponent_label(k, var)?;
        let s = c
            .as_str()
            .ok_or_else(|| Error::InvalidArgument(format!("coefficient of {k} must be a string")))?;
        let c: num_bigint::BigInt = s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad coefficient {s:?}")))?;
        p += &LaurentPoly::from_terms([(e, c)]);
    }
    Ok(p)
}

/// The polynomial document: `{"n", "braid", "variable", "poly"}`.
pub fn poly_document(n: usize, braid: &BraidWord, p: &LaurentPoly, var: Variable) -> Value {
    json!({
        "n": n,
        "braid": braid.letters(),
        "variable": var.name(),
        "poly": poly_to_json(p, var),
    })
}

fn csv_rows(prefix: &str, p: &LaurentPoly, var: Variable, out: &mut String) {
    for (e, c) in p.terms() {
        out.push_str(&format!("{prefix}{},{c}\n", exponent_label(e, var)));
    }
}

/// Renders one polynomial result in the requested format.
pub fn format_output(n: usize, braid: &BraidWord, p: &LaurentPoly, format: Format, var: Variable) -> String {
    match format {
        Format::Json => format!("{}\n", poly_document(n, braid, p, var)),
        Format::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            csv_rows("", p, var, &mut s);
            s
        }
        Format::Text => format!("{}\n", poly_text(p, var)),
    }
}

fn series_json(s: &LaurentSeries, var: Variable) -> Value {
    let terms: Map<String, Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| (exponent_label(s.lowest() + i as i64, var), Value::String(c.to_string())))
        .collect();
    json!({
        "lowest": exponent_label(s.lowest(), var),
        "horizon": exponent_label(s.horizon(), var),
        "terms": terms,
    })
}

fn dispatch(cmd: &Command) -> Result<(String, i32)> {
    match cmd {
        Command::Alex(a) => {
            let w = BraidWord::parse(&a.braid, a.n)?;
            let v = closure_scalar(&w)?;
            Ok((format_output(a.n, &w, &v.poly, a.out.format, a.out.var.into()), EXIT_OK))
        }
        Command::Family(a) => {
            let w = BraidWord::parse(&a.braid, a.n)?;
            let var = a.out.var.into();
            let rows = family(&w, &ms_of(a.m, &a.m_range)?)?;
            let out = match a.out.format {
                Format::Json => {
                    let rows: Vec<Value> = rows.iter().map(|(m, v)| json!({"m": m, "poly": poly_to_json(&v.poly, var)})).collect();
                    format!("{}\n", json!({"n": a.n, "braid": w.letters(), "variable": var.name(), "rows": rows}))
                }
                Format::Csv => {
                    let mut s = String::from("m,exponent,coefficient\n");
                    for (m, v) in &rows {
                        csv_rows(&format!("{m},"), &v.poly, var, &mut s);
                    }
                    s
                }
                Format::Text => rows.iter().map(|(m, v)| format!("m={m}: {}\n", poly_text(&v.poly, var))).collect(),
            };
            Ok((out, EXIT_OK))
        }
        Command::Formula(a) => {
            let w = BraidWord::parse(&a.braid, a.n)?;
            let var = a.out.var.into();
            let rows = formula_table(&w, &ms_of(a.m, &a.m_range)?)?;
            let all_match = rows.iter().all(|r| r.matches());
            let out = match a.out.format {
                Format::Json => {
                    let json_rows: Vec<Value> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "m": r.m,
                                "poly": poly_to_json(&r.formula, var),
                                "direct": poly_to_json(&r.direct, var),
                                "matches_direct": r.matches(),
                            })
                        })
                        .collect();
                    let mut doc = json!({"n": a.n, "braid": w.letters(), "variable": var.name(), "matches_direct": all_match});
                    if let ([row], Some(m)) = (json_rows.as_slice(), a.m) {
                        doc["m"] = json!(m);
                        doc["poly"] = row["poly"].clone();
                        doc["direct"] = row["direct"].clone();
                    } else {
                        doc["rows"] = Value::Array(json_rows);
                    }
                    format!("{doc}\n")
                }
                Format::Csv => {
                    let mut s = String::from("m,matches_direct,exponent,coefficient\n");
                    for r in &rows {
                        csv_rows(&format!("{},{},", r.m, r.matches()), &r.formula, var, &mut s);
                    }
                    s
                }
                Format::Text => rows
                    .iter()
                    .map(|r| format!("m={}: {}  [{}]\n", r.m, poly_text(&r.formula, var), if r.matches() { "matches direct" } else { "MISMATCH" }))
                    .collect(),
            };
            Ok((out, if all_match { EXIT_OK } else { EXIT_IDENTITY }))
        }
        Command::Coeffs(a) => {
            let var = a.out.var.into();
            let ms = ms_of(a.m, &a.m_range)?;
            let table: Vec<(usize, Vec<LaurentPoly>)> = ms.iter().map(|&m| Ok((m, twist_coeffs(m, a.n)?))).collect::<Result<_>>()?;
            let out = match a.out.format {
                Format::Json => {
                    let rows: Vec<Value> = table
                        .iter()
                        .map(|(m, f)| json!({"m": m, "coeffs": f.iter().map(|p| poly_to_json(p, var)).collect::<Vec<_>>()}))
                        .collect();
                    let mut doc = json!({"n": a.n, "variable": var.name()});
                    if let ([row], Some(m)) = (rows.as_slice(), a.m) {
                        doc["m"] = json!(m);
                        doc["coeffs"] = row["coeffs"].clone();
                    } else {
                        doc["rows"] = Value::Array(rows);
                    }
                    format!("{doc}\n")
                }
                Format::Csv => {
                    let mut s = String::from("m,j,exponent,coefficient\n");
                    for (m, f) in &table {
                        for (j, p) in f.iter().enumerate() {
                            csv_rows(&format!("{m},{j},"), p, var, &mut s);
                        }
                    }
                    s
                }
                Format::Text => table
                    .iter()
                    .flat_map(|(m, f)| f.iter().enumerate().map(move |(j, p)| format!("f[m={m}, j={j}] = {}\n", poly_text(p, var))))
                    .collect(),
            };
            Ok((out, EXIT_OK))
        }
        Command::Stabilize(a) => {
            let w = BraidWord::parse(&a.braid, a.n)?;
            let var = a.out.var.into();
            let res = stabilization_series(&w, a.precision)?;
            let out = match a.out.format {
                Format::Json => {
                    let components: Vec<Value> = res
                        .components
                        .iter()
                        .map(|h| json!({"num": poly_to_json(h.numer(), var), "den": poly_to_json(h.denom(), var)}))
                        .collect();
                    let doc = json!({
                        "n": a.n,
                        "braid": w.letters(),
                        "variable": var.name(),
                        "r": res.r,
                        "shift_per_m": res.shift.map(|s| exponent_label(s.per_m, var)),
                        "h": res.h().map(|h| json!({"num": poly_to_json(h.numer(), var), "den": poly_to_json(h.denom(), var)})),
                        "series": res.series.as_ref().map(|s| series_json(s, var)),
                        "components": components,
                    });
                    format!("{doc}\n")
                }
                Format::Csv => {
                    let mut s = String::from("exponent,coefficient\n");
                    if let Some(series) = &res.series {
                        csv_rows("", &series.truncation(), var, &mut s);
                    }
                    s
                }
                Format::Text => match (&res.r, &res.series, &res.shift) {
                    (Some(r), Some(series), Some(shift)) => format!(
                        "r = {r}\nshift = {}^({} m)\nh = {} + O({}^{})\n",
                        var.name(),
                        exponent_label(shift.per_m, var),
                        poly_text(&series.truncation(), var),
                        var.name(),
                        exponent_label(series.horizon(), var),
                    ),
                    _ => "h vanishes identically; Δ(L_m) = 0 for every m\n".to_string(),
                },
            };
            Ok((out, EXIT_OK))
        }
        Command::Torus(a) => {
            let v = torus_oracle(a.n, a.l)?;
            Ok((format_output(a.n, &v.word, &v.poly, a.out.format, a.out.var.into()), EXIT_OK))
        }
        Command::Verify(a) => {
            if a.depth < 2 {
                return Err(Error::InvalidArgument("depth must be at least 2".into()));
            }
            let checks = run_checks(a.depth);
            let ok = checks.iter().all(|c| c.passed);
            let out = match a.format {
                Format::Json => {
                    let rows: Vec<Value> = checks.iter().map(|c| json!({"check": c.name, "passed": c.passed, "detail": c.detail})).collect();
                    format!("{}\n", json!({"depth": a.depth, "passed": ok, "checks": rows}))
                }
                Format::Csv => {
                    let mut s = String::from("check,passed\n");
                    for c in &checks {
                        s.push_str(&format!("{},{}\n", c.name, c.passed));
                    }
                    s
                }
                Format::Text => checks
                    .iter()
                    .map(|c| {
                        if c.passed {
                            format!("PASS  {}\n", c.name)
                        } else {
                            format!("FAIL  {}: {}\n", c.name, c.detail)
                        }
                    })
                    .collect(),
            };
            Ok((out, if ok { EXIT_OK } else { EXIT_IDENTITY }))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_IDENTITY
            }
        }
    }
}
