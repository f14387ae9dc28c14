//! Plain CSV for objective-space fronts: header `f1,f2,...`, one point per
//! row, 17 significant digits so files are byte-stable and round-trip.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Scientific notation with 17 significant digits.
pub fn format_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_front_csv<W: Write, P: AsRef<[f64]>>(writer: W, points: &[P]) -> Result<()> {
    let m = points.first().map(|p| p.as_ref().len()).unwrap_or(0);
    let mut w = csv::Writer::from_writer(writer);
    if m > 0 {
        w.write_record((1..=m).map(|k| format!("f{k}")))?;
    }
    for p in points {
        let p = p.as_ref();
        if p.len() != m {
            return Err(Error::invalid_input(
                "front points have mixed dimensionality",
            ));
        }
        w.write_record(p.iter().map(|&v| format_sig17(v)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn save_front_csv<P: AsRef<[f64]>>(path: &Path, points: &[P]) -> Result<()> {
    write_front_csv(File::create(path)?, points)
}

/// Parses a front CSV. The header must be `f1..fm`.
pub fn read_front_csv<R: Read>(reader: R) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = r.headers()?.clone();
    let m = headers.len();
    for (k, h) in headers.iter().enumerate() {
        if h != format!("f{}", k + 1) {
            return Err(Error::invalid_input(format!(
                "unexpected front CSV header column {h:?}"
            )));
        }
    }
    let mut points = Vec::new();
    for (row, record) in r.records().enumerate() {
        let record = record?;
        if record.len() != m {
            return Err(Error::invalid_input(format!(
                "line {}: expected {m} columns, found {}",
                row + 2,
                record.len()
            )));
        }
        let point = record
            .iter()
            .map(|s| {
                s.parse::<f64>().map_err(|_| {
                    Error::invalid_input(format!("line {}: bad number {s:?}", row + 2))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(point);
    }
    Ok(points)
}

pub fn load_front_csv(path: &Path) -> Result<Vec<Vec<f64>>> {
    read_front_csv(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn header_and_precision() {
        let mut buf = Vec::new();
        write_front_csv(&mut buf, &[vec![0.1, 1.0 / 3.0]]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "f1,f2\n1.0000000000000001e-1,3.3333333333333331e-1\n");
    }

    #[test]
    fn rejects_bad_header() {
        assert!(read_front_csv("x,y\n1,2\n".as_bytes()).is_err());
        assert!(read_front_csv("f1,f2\n1,abc\n".as_bytes()).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(points in prop::collection::vec(prop::collection::vec(-1e9f64..1e9, 3), 1..20)) {
            let mut buf = Vec::new();
            write_front_csv(&mut buf, &points).unwrap();
            prop_assert_eq!(read_front_csv(buf.as_slice()).unwrap(), points);
        }
    }
}
