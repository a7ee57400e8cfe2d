//! Vertex list readers and writers (CSV and JSON).
//!
//! CSV holds one `x,y` pair per line; blank lines and lines starting with
//! `#` are skipped. JSON is `{"vertices":[[x,y],...]}`. Both writers print
//! the shortest decimal that parses back to the same `f64`, so
//! write-then-parse is bit-exact.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VertexFile {
    vertices: Vec<[f64; 2]>,
}

pub fn parse_vertices(text: &str, format: Format) -> Result<Vec<Point>> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

fn parse_csv(text: &str) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split(',');
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `x,y`, got {line:?}"),
            });
        };
        let num = |s: &str| -> Result<f64> {
            s.trim().parse::<f64>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("{:?}: {e}", s.trim()),
            })
        };
        let (x, y) = (num(xs)?, num(ys)?);
        out.push(
            Point::try_new(x, y)
                .map_err(|_| Error::NonFinite(format!("line {line_no}: {line}")))?,
        );
    }
    Ok(out)
}

fn parse_json(text: &str) -> Result<Vec<Point>> {
    let file: VertexFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: format!("column {}: {e}", e.column()),
    })?;
    file.vertices
        .into_iter()
        .map(|[x, y]| Point::try_new(x, y))
        .collect()
}

pub fn write_vertices(points: &[Point], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::new();
            for p in points {
                writeln!(s, "{},{}", p.x, p.y).unwrap();
            }
            s
        }
        Format::Json => {
            let file = VertexFile {
                vertices: points.iter().map(|p| [p.x, p.y]).collect(),
            };
            serde_json::to_string(&file).expect("finite coordinates serialize")
        }
    }
}
