use std::path::Path;

use crate::CliError;

/// One data row of an `a,b,c` CSV file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    /// 1-based line number in the file (header is line 1).
    pub line: u64,
    pub triple: Result<(u128, u128, u128), String>,
}

pub fn read_triples(path: &Path) -> Result<Vec<Row>, CliError> {
    let file = std::fs::File::open(path)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
    read_from(file)
}

pub fn read_from<R: std::io::Read>(input: R) -> Result<Vec<Row>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(input);
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.eq_ignore_ascii_case(name))
            .ok_or_else(|| CliError::Usage(format!("CSV header has no `{name}` column")))
    };
    let cols = [column("a")?, column("b")?, column("c")?];

    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = record
            .as_ref()
            .ok()
            .and_then(|r| r.position())
            .map_or(i as u64 + 2, |p| p.line());
        let triple = record.map_err(|e| e.to_string()).and_then(|r| {
            let field = |k: usize| -> Result<u128, String> {
                let name = ["a", "b", "c"][k];
                let raw = r.get(cols[k]).ok_or_else(|| format!("missing `{name}`"))?;
                raw.parse().map_err(|e| format!("`{name}` = `{raw}`: {e}"))
            };
            Ok((field(0)?, field(1)?, field(2)?))
        });
        rows.push(Row { line, triple });
    }
    Ok(rows)
}
