//! Matrix files: a JSON document with `[re, im]` pairs, or a CSV of reals.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{NumradError, Result};
use crate::linalg::ComplexMatrix;

/// Wire format: `{"n": 2, "data": [[[re, im], ...], ...], "name": "..."}`, rows first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub data: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &ComplexMatrix, name: Option<&str>) -> Self {
        let n = m.dim();
        let data = (0..n)
            .map(|i| (0..n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        Self {
            n,
            data,
            name: name.map(str::to_string),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.data.len() != self.n {
            return Err(NumradError::DimensionMismatch {
                expected: self.n,
                found: self.data.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.data.iter().enumerate() {
            if row.len() != self.n {
                return Err(NumradError::DimensionMismatch {
                    expected: self.n,
                    found: row.len(),
                });
            }
            for (j, &[re, im]) in row.iter().enumerate() {
                if !(re.is_finite() && im.is_finite()) {
                    return Err(NumradError::InvalidEntry(format!("entry ({i}, {j}) is not finite")));
                }
                entries.push(Complex64::new(re, im));
            }
        }
        ComplexMatrix::new(self.n, entries)
    }
}

/// Parse a JSON document (first non-blank byte `{`) or a real CSV.
pub fn parse_matrix(document: &[u8]) -> Result<ComplexMatrix> {
    let text = std::str::from_utf8(document).map_err(|e| NumradError::Parse {
        line: 1 + document[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count(),
        field: 0,
        message: "input is not valid UTF-8".into(),
    })?;
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_csv(text)
    }
}

pub fn parse_json(text: &str) -> Result<ComplexMatrix> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| NumradError::Parse {
        line: e.line(),
        field: e.column(),
        message: e.to_string(),
    })?;
    doc.to_matrix()
}

pub fn parse_csv(text: &str) -> Result<ComplexMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| NumradError::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            field: 0,
            message: e.to_string(),
        })?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(k, field)| {
                let v: f64 = field.parse().map_err(|_| NumradError::Parse {
                    line,
                    field: k + 1,
                    message: format!("`{field}` is not a number"),
                })?;
                if !v.is_finite() {
                    return Err(NumradError::Parse {
                        line,
                        field: k + 1,
                        message: format!("`{field}` is not finite"),
                    });
                }
                Ok(v)
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(NumradError::Parse {
            line: 1,
            field: 0,
            message: "no rows".into(),
        });
    }
    for row in &rows {
        if row.len() != n {
            return Err(NumradError::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
    }
    ComplexMatrix::from_real(n, &rows.concat())
}

/// Pretty JSON document; parsing it back gives the same bits.
pub fn to_json(m: &ComplexMatrix, name: Option<&str>) -> String {
    serde_json::to_string_pretty(&MatrixDocument::from_matrix(m, name)).expect("finite entries")
}

/// Real CSV; fails when any entry has a nonzero imaginary part.
pub fn to_csv(m: &ComplexMatrix) -> Result<String> {
    let n = m.dim();
    let mut out = String::new();
    for i in 0..n {
        let mut fields = Vec::with_capacity(n);
        for j in 0..n {
            let z = m[(i, j)];
            if z.im != 0.0 {
                return Err(NumradError::InvalidEntry(format!(
                    "entry ({i}, {j}) is complex; use JSON"
                )));
            }
            fields.push(format!("{:?}", z.re));
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| NumradError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&bytes)
}

pub fn write_matrix(path: impl AsRef<Path>, m: &ComplexMatrix, name: Option<&str>) -> Result<()> {
    std::fs::write(path, to_json(m, name))?;
    Ok(())
}
