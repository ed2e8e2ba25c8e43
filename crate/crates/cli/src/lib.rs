//! Front-end logic for the `vincular` binary: counting, series expansion,
//! the cross-method verification matrix and b-file export.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use vincular::counters::{closed_form, count_by_recurrence, sequence_by_recurrence, CLOSED_FORM_PATTERNS, RECURRENCE_PATTERNS};
use vincular::enumerate::count_avoiders;
use vincular::genfun::{coefficients, iterate_kernel, kernel_recipe, sequence, GENFUN_PATTERNS, KERNEL_PATTERNS};
use vincular::golden::golden;
use vincular::{parse_pattern, Int, QSeries, Rational, VincularPattern};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("pattern {pattern} has no {method} method; applicable: {}", applicable.join(", "))]
    Unsupported { pattern: String, method: Method, applicable: Vec<String> },
    #[error(transparent)]
    Core(#[from] vincular::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} disagreeing cells")]
    Mismatch(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for requests that cannot be served, 1 for failed checks and I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Unsupported { .. } | CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Mismatch(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Oracle,
    Recurrence,
    Closed,
    Genfun,
    Kernel,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Oracle, Method::Recurrence, Method::Closed, Method::Genfun, Method::Kernel];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Genfun => "genfun",
            Method::Kernel => "kernel",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_n: usize,
    pub order: usize,
    pub methods: Vec<Method>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { max_n: 12, order: 24, methods: Method::ALL.to_vec(), format: Format::Text }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.order == 0 {
            return Err(CliError::Usage("max_n and order must be at least 1".into()));
        }
        Ok(())
    }
}

/// One cell of the verification matrix. `values` maps method names (and
/// `golden` for tabulated values) to decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub pattern: String,
    pub n: usize,
    pub values: BTreeMap<String, String>,
    pub agree: bool,
}

impl ReportRow {
    fn new(pattern: &VincularPattern, n: usize, values: BTreeMap<String, String>) -> Self {
        let distinct: BTreeSet<&String> = values.values().collect();
        ReportRow { pattern: pattern.to_string(), n, agree: distinct.len() <= 1, values }
    }
}

pub fn pattern(text: &str) -> Result<VincularPattern> {
    Ok(parse_pattern(text)?)
}

/// The methods that can count `pattern`, fastest first after the oracle.
pub fn applicable(pattern: &VincularPattern) -> Vec<Method> {
    let key = pattern.to_string();
    let mut out = vec![Method::Oracle];
    if RECURRENCE_PATTERNS.contains(&key.as_str()) {
        out.push(Method::Recurrence);
    }
    if CLOSED_FORM_PATTERNS.contains(&key.as_str()) {
        out.push(Method::Closed);
    }
    if GENFUN_PATTERNS.contains(&key.as_str()) {
        out.push(Method::Genfun);
    }
    if KERNEL_PATTERNS.contains(&key.as_str()) {
        out.push(Method::Kernel);
    }
    out
}

fn unsupported(pattern: &VincularPattern, method: Method) -> CliError {
    CliError::Unsupported {
        pattern: pattern.to_string(),
        method,
        applicable: applicable(pattern).iter().map(|m| m.to_string()).collect(),
    }
}

/// `c_1..c_order` by one method.
pub fn sequence_by(pattern: &VincularPattern, order: usize, method: Method) -> Result<Vec<Int>> {
    if !applicable(pattern).contains(&method) {
        return Err(unsupported(pattern, method));
    }
    if order == 0 {
        return Err(CliError::Usage("length must be at least 1".into()));
    }
    Ok(match method {
        Method::Oracle => (1..=order).into_par_iter().map(|n| count_avoiders(n, pattern).map(Int::from)).collect::<vincular::Result<_>>()?,
        Method::Recurrence => sequence_by_recurrence(pattern, order)?,
        Method::Closed => (1..=order).map(|n| closed_form(pattern, n).expect("registered closed form")).collect(),
        Method::Genfun => sequence::<Rational, Int>(pattern, order)?,
        Method::Kernel => {
            let s: QSeries = iterate_kernel(&kernel_recipe(pattern, order)?)?;
            coefficients(&s)?
        }
    })
}

/// `c_n(pattern)` by one method.
pub fn cmd_count(pattern: &VincularPattern, n: usize, method: Method) -> Result<Int> {
    if !applicable(pattern).contains(&method) {
        return Err(unsupported(pattern, method));
    }
    match method {
        Method::Oracle if n >= 1 => Ok(count_avoiders(n, pattern)?.into()),
        Method::Recurrence if n >= 1 => Ok(count_by_recurrence(pattern, n)?),
        Method::Closed if n >= 1 => Ok(closed_form(pattern, n).expect("registered closed form")),
        _ => Ok(sequence_by(pattern, n, method)?.pop().expect("nonempty")),
    }
}

/// The fastest method that counts `pattern` without enumeration.
pub fn fastest(pattern: &VincularPattern) -> Method {
    let a = applicable(pattern);
    [Method::Closed, Method::Recurrence, Method::Genfun].into_iter().find(|m| a.contains(m)).unwrap_or(Method::Oracle)
}

/// Coefficients of `t^1..t^order`, from the generating function when there
/// is one.
pub fn cmd_series(pattern: &VincularPattern, order: usize) -> Result<Vec<Int>> {
    let a = applicable(pattern);
    let method = [Method::Genfun, Method::Recurrence, Method::Closed]
        .into_iter()
        .find(|m| a.contains(m))
        .ok_or_else(|| CliError::Unsupported {
            pattern: pattern.to_string(),
            method: Method::Genfun,
            applicable: a.iter().map(|m| m.to_string()).collect(),
        })?;
    sequence_by(pattern, order, method)
}

/// Every selected, applicable method for every tabulated pattern and
/// `n <= max_n`, plus the tabulated value where there is one. Rows are
/// sorted by (pattern, n).
pub fn cmd_verify(config: &RunConfig) -> Result<Vec<ReportRow>> {
    config.validate()?;
    let patterns: Vec<&VincularPattern> = golden().patterns().collect();
    let per_pattern: Vec<Vec<ReportRow>> = patterns
        .par_iter()
        .map(|&p| -> Result<Vec<ReportRow>> {
            let methods: Vec<Method> = applicable(p).into_iter().filter(|m| config.methods.contains(m)).collect();
            let columns: Vec<(Method, Vec<Int>)> = methods
                .par_iter()
                .map(|&m| {
                    let len = if matches!(m, Method::Genfun | Method::Kernel) { config.order.max(config.max_n) } else { config.max_n };
                    sequence_by(p, len, m).map(|s| (m, s))
                })
                .collect::<Result<_>>()?;
            let tabulated = golden().row(&p.to_string()).map(|r| r.values.clone()).unwrap_or_default();
            Ok((1..=config.max_n)
                .map(|n| {
                    let mut values: BTreeMap<String, String> =
                        columns.iter().map(|(m, s)| (m.to_string(), s[n - 1].to_string())).collect();
                    if let Some(v) = tabulated.get(n - 1) {
                        values.insert("golden".into(), v.to_string());
                    }
                    ReportRow::new(p, n, values)
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<ReportRow> = per_pattern.into_iter().flatten().collect();
    rows.sort_by(|a, b| (&a.pattern, a.n).cmp(&(&b.pattern, b.n)));
    Ok(rows)
}

/// Number of rows whose methods disagree.
pub fn mismatches(rows: &[ReportRow]) -> usize {
    rows.iter().filter(|r| !r.agree).count()
}

pub fn render_rows(rows: &[ReportRow], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(rows)? + "\n",
        Format::Text => rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("{} {} {} {}\n", r.pattern, r.n, cells.join(" "), if r.agree { "ok" } else { "MISMATCH" })
            })
            .collect(),
        Format::Csv => {
            let mut columns: Vec<String> = Method::ALL.iter().map(|m| m.to_string()).collect();
            columns.push("golden".into());
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["pattern".to_string(), "n".to_string()];
            header.extend(columns.iter().cloned());
            header.push("agree".into());
            w.write_record(&header)?;
            for r in rows {
                let mut rec = vec![r.pattern.clone(), r.n.to_string()];
                rec.extend(columns.iter().map(|c| r.values.get(c).cloned().unwrap_or_default()));
                rec.push(r.agree.to_string());
                w.write_record(&rec)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8")
        }
    })
}

pub fn render_sequence(values: &[Int], format: Format) -> Result<String> {
    let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    Ok(match format {
        Format::Json => serde_json::to_string(&strings)? + "\n",
        Format::Text | Format::Csv => strings.join(",") + "\n",
    })
}

/// `n a(n)` lines for `n = 1..=values.len()`.
pub fn bfile_text(values: &[Int]) -> String {
    values.iter().enumerate().map(|(i, v)| format!("{} {v}\n", i + 1)).collect()
}

pub fn parse_bfile(text: &str) -> Result<Vec<(usize, Int)>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let bad = || CliError::Usage(format!("malformed b-file line {l:?}"));
            let mut it = l.split_whitespace();
            let n = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            let v = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            Ok((n, v))
        })
        .collect()
}

/// Writes the b-file of `c_1..c_max_n` using the fastest method.
pub fn cmd_bfile(pattern: &VincularPattern, max_n: usize, path: &Path) -> Result<Vec<Int>> {
    let values = sequence_by(pattern, max_n, fastest(pattern))?;
    fs::write(path, bfile_text(&values))?;
    Ok(values)
}
