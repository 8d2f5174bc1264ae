use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// Command output: an authoritative JSON value plus a flat CSV table.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::input(format!("csv: {e}"));
                w.write_record(&self.header).map_err(io)?;
                for row in &self.rows {
                    w.write_record(row).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::input(format!("csv: {e}")))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
        }
    }
}
