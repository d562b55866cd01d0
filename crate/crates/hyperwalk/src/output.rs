//! Number formatting and the CSV/JSON record types.

use hyperwalk_core::ratio::{format_exact, Number, Rational};
use hyperwalk_core::spectrum::{LineSource, SpectralLine};
use hyperwalk_core::Component;
use num_bigint::BigUint;
use serde::Serialize;

/// `p/q` when exact output is requested and the value is exact, shortest
/// round-trip decimal otherwise.
pub fn number(x: &Number, exact: bool) -> String {
    match x {
        Number::Exact(r) if exact => format_exact(r),
        other => decimal(other.to_f64()),
    }
}

pub fn rational(x: &Rational, exact: bool) -> String {
    number(&Number::Exact(x.clone()), exact)
}

pub fn decimal(x: f64) -> String {
    format!("{x}")
}

pub fn mode_name(mode: hyperwalk_core::exact::Mode) -> &'static str {
    match mode {
        hyperwalk_core::exact::Mode::Exact => "exact",
        hyperwalk_core::exact::Mode::Float => "float",
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumRecord {
    pub num: String,
    pub den: String,
    pub value: f64,
    pub multiplicity: String,
    pub diagram: Option<String>,
    pub component: Option<u8>,
}

impl SpectrumRecord {
    pub fn from_line(line: &SpectralLine) -> Self {
        let (diagram, component) = match &line.source {
            LineSource::Diagram { diagram, component } => (
                Some(diagram.to_string()),
                Some(match component {
                    Component::First => 1,
                    Component::Second => 2,
                }),
            ),
            LineSource::Partition(p) => (Some(p.to_string()), None),
        };
        Self::new(&line.eigenvalue, &line.multiplicity, diagram, component)
    }

    pub fn new(eig: &Rational, mult: &BigUint, diagram: Option<String>, component: Option<u8>) -> Self {
        Self {
            num: eig.numer().to_string(),
            den: eig.denom().to_string(),
            value: hyperwalk_core::ratio::to_f64(eig),
            multiplicity: mult.to_string(),
            diagram,
            component,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumSummary {
    pub walk: String,
    pub n: usize,
    pub lines: usize,
    pub total_multiplicity: String,
}

pub const TV_HEADER: [&str; 5] = ["k", "tv", "mode", "n", "walk_kind"];
pub const BOUNDS_HEADER: [&str; 7] = ["k", "lower", "tv_exact", "ds_upper", "closed_upper", "n", "walk_kind"];
pub const SIM_HEADER: [&str; 7] = ["k", "mean_f", "stderr", "trials", "seed", "walk_kind", "n"];
pub const MIXING_HEADER: [&str; 6] = ["walk_kind", "n", "threshold", "tv_k", "lower_k", "ds_k"];
pub const SPECTRUM_HEADER: [&str; 6] = ["num", "den", "value", "multiplicity", "diagram", "component"];
