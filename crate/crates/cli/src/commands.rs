use std::fmt;

use urn_core::check::{run_checks, CheckOptions, CheckReport};
use urn_core::convergence::convergence_table;
use urn_core::exact::{self, ExactRows, PmfTable};
use urn_core::float::{cdf_float, pmf_float};
use urn_core::sampler::{sample_urn_walk, InverseCdfTable, SamplerState};
use urn_core::{Error, UrnParams};

use crate::output::{Cell, Document};

/// Largest list or table a command will print.
pub const MAX_ROWS: u64 = PmfTable::MAX_SUPPORT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Urn,
    Inverse,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Urn => "urn",
            Method::Inverse => "inverse",
        })
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or parameters; exit 2.
    Usage(String),
    /// Resource guard; exit 3.
    Resource(String),
    /// A verification check failed; exit 4. The summary is still printed.
    CheckFailed { summary: Document, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::CheckFailed { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => f.write_str(m),
            CliError::CheckFailed { message, .. } => f.write_str(message),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::ResourceLimit(_) => CliError::Resource(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

fn urn_params(total: u64, good: u64) -> Result<UrnParams, CliError> {
    Ok(UrnParams::new(total, good)?)
}

fn nk(params: &UrnParams) -> Vec<(&'static str, Cell)> {
    vec![("n", Cell::Int(params.total())), ("k", Cell::Int(params.good()))]
}

pub fn table(total: u64, good: u64) -> Result<Document, CliError> {
    let params = urn_params(total, good)?;
    if params.max_draws() > MAX_ROWS {
        return Err(CliError::Resource(format!(
            "support size {} exceeds the tabulation limit {MAX_ROWS}",
            params.max_draws()
        )));
    }
    let mut doc = Document::new(nk(&params), vec!["n", "pmf_exact", "pmf_float", "cdf_exact", "cdf_float"]);
    for row in ExactRows::new(params) {
        doc.push(vec![
            Cell::Int(row.n),
            Cell::Exact(row.pmf.to_string()),
            Cell::Float(pmf_float(&params, row.n)?),
            Cell::Exact(row.cdf.to_string()),
            Cell::Float(cdf_float(&params, row.n)),
        ]);
    }
    Ok(doc)
}

pub fn stats(total: u64, good: u64) -> Result<Document, CliError> {
    let params = urn_params(total, good)?;
    let mode = exact::mode(&params);
    let mode_len = mode.end() - mode.start() + 1;
    if mode_len > MAX_ROWS {
        return Err(CliError::Resource(format!(
            "mode set has {mode_len} elements, more than the listing limit {MAX_ROWS}"
        )));
    }
    let support = exact::support(&params);
    let mut doc = Document::new(
        nk(&params),
        vec!["mean", "variance", "median", "mode", "support_min", "support_max"],
    );
    doc.push(vec![
        Cell::Exact(exact::mean(&params).to_string()),
        Cell::Exact(exact::variance(&params).to_string()),
        Cell::Int(exact::median(&params)),
        Cell::IntList(mode.collect()),
        Cell::Int(*support.start()),
        Cell::Int(*support.end()),
    ]);
    Ok(doc)
}

pub fn sample(total: u64, good: u64, count: u64, seed: u64, method: Method) -> Result<Document, CliError> {
    let params = urn_params(total, good)?;
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let mut doc = Document::new(
        vec![
            ("n", Cell::Int(total)),
            ("k", Cell::Int(good)),
            ("count", Cell::Int(count)),
            ("seed", Cell::Int(seed)),
            ("method", Cell::Text(method.to_string())),
        ],
        vec!["value"],
    );
    doc.flat = true;
    let mut state = SamplerState::new(seed);
    match method {
        Method::Urn => {
            for _ in 0..count {
                doc.push(vec![Cell::Int(sample_urn_walk(&params, &mut state))]);
            }
        }
        Method::Inverse => {
            if params.max_draws() > MAX_ROWS {
                return Err(CliError::Resource(format!(
                    "inverse sampling tabulates the cdf; support size {} exceeds {MAX_ROWS}",
                    params.max_draws()
                )));
            }
            let table = InverseCdfTable::new(params);
            for _ in 0..count {
                doc.push(vec![Cell::Int(table.sample(&mut state))]);
            }
        }
    }
    Ok(doc)
}

pub fn converge(p_num: u64, p_den: u64, totals: &[u64]) -> Result<Document, CliError> {
    let records = convergence_table(p_num, p_den, totals)?;
    let mut doc = Document::new(
        vec![("p_num", Cell::Int(p_num)), ("p_den", Cell::Int(p_den))],
        vec!["n", "k", "p", "tv_distance", "max_pointwise_error", "at_n"],
    );
    for r in records {
        doc.push(vec![
            Cell::Int(r.total),
            Cell::Int(r.good),
            Cell::Float(r.p),
            Cell::Float(r.tv_distance),
            Cell::Float(r.max_pointwise_error),
            Cell::Int(r.at_n),
        ]);
    }
    Ok(doc)
}

pub fn check(max_n: u64, force: bool) -> Result<Document, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let mut options = CheckOptions::new(max_n);
    if force {
        options.enumeration_limit = max_n;
    }
    summarize(run_checks(options))
}

pub fn summarize(report: CheckReport) -> Result<Document, CliError> {
    let mut doc = Document::new(
        vec![
            ("max_n", Cell::Int(report.options.max_n)),
            ("enumeration_limit", Cell::Int(report.options.enumeration_limit.min(report.options.max_n))),
            ("passed", Cell::Bool(report.passed())),
        ],
        vec!["family", "checked", "failed", "status"],
    );
    for f in &report.families {
        doc.push(vec![
            Cell::Text(f.name.to_string()),
            Cell::Int(f.checked),
            Cell::Int(f.failed),
            Cell::Text(if f.passed() { "pass" } else { "fail" }.to_string()),
        ]);
    }
    match report.first_failure() {
        None => Ok(doc),
        Some((family, ce)) => Err(CliError::CheckFailed {
            message: format!("check failed in {family}: {ce}"),
            summary: doc,
        }),
    }
}
