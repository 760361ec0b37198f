//! Amplitude files: CSV with one `re,im` pair per line, or a JSON array of
//! `[re, im]` pairs.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplitudeFormat {
    Csv,
    Json,
}

impl AmplitudeFormat {
    /// Guess from the file extension; anything but `.json` is CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => Self::Json,
            _ => Self::Csv,
        }
    }
}

pub fn read_amplitudes<R: Read>(reader: R, format: AmplitudeFormat) -> Result<Vec<Complex64>> {
    match format {
        AmplitudeFormat::Csv => {
            let mut rdr = csv::ReaderBuilder::new()
                .has_headers(false)
                .comment(Some(b'#'))
                .trim(csv::Trim::All)
                .from_reader(reader);
            let mut out = Vec::new();
            for (line, rec) in rdr.records().enumerate() {
                let rec = rec?;
                if rec.len() != 2 {
                    return Err(Error::Parse(format!(
                        "record {}: expected `re,im`, got {} fields",
                        line + 1,
                        rec.len()
                    )));
                }
                let parse = |s: &str| {
                    s.parse::<f64>()
                        .map_err(|e| Error::Parse(format!("record {}: {e}", line + 1)))
                };
                out.push(Complex64::new(parse(&rec[0])?, parse(&rec[1])?));
            }
            Ok(out)
        }
        AmplitudeFormat::Json => {
            let pairs: Vec<[f64; 2]> = serde_json::from_reader(reader)?;
            Ok(pairs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect())
        }
    }
}

pub fn write_amplitudes<W: Write>(
    writer: W,
    amplitudes: &[Complex64],
    format: AmplitudeFormat,
) -> Result<()> {
    match format {
        AmplitudeFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(writer);
            for a in amplitudes {
                w.write_record([format!("{:.16e}", a.re), format!("{:.16e}", a.im)])?;
            }
            w.flush()?;
            Ok(())
        }
        AmplitudeFormat::Json => {
            let pairs: Vec<[f64; 2]> = amplitudes.iter().map(|a| [a.re, a.im]).collect();
            serde_json::to_writer(writer, &pairs)?;
            Ok(())
        }
    }
}

pub fn load_amplitudes(path: &Path) -> Result<Vec<Complex64>> {
    let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_amplitudes(std::io::BufReader::new(f), AmplitudeFormat::from_path(path))
}

pub fn save_amplitudes(path: &Path, amplitudes: &[Complex64]) -> Result<()> {
    let f =
        std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    write_amplitudes(
        std::io::BufWriter::new(f),
        amplitudes,
        AmplitudeFormat::from_path(path),
    )
}
