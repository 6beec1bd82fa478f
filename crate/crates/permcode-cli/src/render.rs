//! Output helpers shared by the subcommands: exact-plus-approximate integer
//! fields, vacuous-bound markers, and the plain key/value table layout.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_traits::Zero;
use permcode::bounds::AlphaBound;
use permcode::combinatorics::log2_of_count;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// An exact count rendered in full decimal, with a scientific approximation
/// for readability (300-digit values are exact but unreadable).
#[derive(Debug, Clone, Serialize)]
pub struct BigField {
    pub exact: String,
    pub approx: String,
}

impl BigField {
    pub fn new(value: &BigUint) -> Self {
        BigField {
            exact: value.to_string(),
            approx: approx_decimal(value),
        }
    }

    pub fn table_cell(&self) -> String {
        if self.exact.len() <= 12 {
            self.exact.clone()
        } else {
            format!("{} (~{})", self.exact, self.approx)
        }
    }
}

/// Scientific approximation `m.mmmmmm eNN` computed through log2, so counts
/// far beyond f64 range render fine.
pub fn approx_decimal(value: &BigUint) -> String {
    if value.is_zero() {
        return "0".into();
    }
    let log10 = log2_of_count(value).expect("nonzero") * std::f64::consts::LOG10_2;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if mantissa >= 9.999_999_5 {
        mantissa = 1.0;
        exponent += 1.0;
    }
    format!("{mantissa:.6}e{exponent}")
}

/// A lower bound that may be vacuous at the given arguments.
#[derive(Debug, Clone, Serialize)]
pub struct BoundValue {
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
}

impl BoundValue {
    pub fn new(bound: &AlphaBound) -> Self {
        match bound.value() {
            None => BoundValue { vacuous: true, exact: None, approx: None },
            Some(v) => BoundValue {
                vacuous: false,
                exact: Some(v.to_string()),
                approx: Some(approx_decimal(v)),
            },
        }
    }

    pub fn csv_cell(&self) -> String {
        self.exact.clone().unwrap_or_else(|| "vacuous".into())
    }

    pub fn table_cell(&self) -> String {
        match (&self.exact, &self.approx) {
            (Some(e), Some(a)) if e.len() > 12 => format!("{e} (~{a})"),
            (Some(e), _) => e.clone(),
            _ => "vacuous".into(),
        }
    }
}

/// Two-column table with aligned keys.
pub fn key_value_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        out.push_str(&format!("{key:width$}  {value}\n"));
    }
    out
}

/// Option<f64> cell: the value or a vacuous marker.
pub fn ratio_cell(value: Option<f64>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "vacuous".into(),
    }
}
