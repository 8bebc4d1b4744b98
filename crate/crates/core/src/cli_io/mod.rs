//! File formats for the command line tool: JSON rule files, FFT CSV and SVG node plots.

mod csv;
mod rule_file;
mod svg;

pub use csv::{read_samples, read_spectrum, write_samples, write_spectrum, SAMPLE_HEADER, SPECTRUM_HEADER};
pub use rule_file::{format_decimal, ExactnessRecord, NodeRecord, RuleFileV1, SCHEMA_VERSION};
pub use svg::render_rule;

use std::path::Path;

use crate::cubature_rules::CubatureRule;
use crate::error::Result;

pub fn write_rule_file(rule: &CubatureRule, path: &Path) -> Result<()> {
    std::fs::write(path, RuleFileV1::from_rule(rule).to_json())?;
    Ok(())
}

pub fn read_rule_file(path: &Path) -> Result<CubatureRule> {
    RuleFileV1::from_json(&std::fs::read_to_string(path)?)?.to_rule()
}
