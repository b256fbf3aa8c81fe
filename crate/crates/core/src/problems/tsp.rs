//! Symmetric travelling salesman over 2-D coordinates.
//!
//! TSPLIB input is limited to `EDGE_WEIGHT_TYPE: EUC_2D`. Those distances are
//! rounded to the nearest integer as TSPLIB prescribes; instances built from
//! raw coordinates may opt out of rounding.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::genome::{Encoding, Gene};
use crate::rngdet::RngStream;

use super::LineReader;

#[derive(Clone, Debug)]
pub struct TspInstance {
    name: String,
    coords: Vec<(f64, f64)>,
    rounded: bool,
    dist: Vec<f64>,
}

impl PartialEq for TspInstance {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.coords == other.coords && self.rounded == other.rounded
    }
}

impl TspInstance {
    /// `rounded` selects TSPLIB's nearest-integer EUC_2D convention.
    pub fn from_coords(name: impl Into<String>, coords: Vec<(f64, f64)>, rounded: bool) -> Self {
        let n = coords.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let (dx, dy) = (coords[i].0 - coords[j].0, coords[i].1 - coords[j].1);
                let mut d = (dx * dx + dy * dy).sqrt();
                if rounded {
                    d = (d + 0.5).floor();
                }
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Self { name: name.into(), coords, rounded, dist }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_cities(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn is_rounded(&self) -> bool {
        self.rounded
    }

    #[inline]
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.dist[a * self.coords.len() + b]
    }

    pub fn encoding(&self) -> Encoding {
        Encoding::Permutation { symbols: self.num_cities(), repeats: 1 }
    }

    /// Closed-tour length; the caller guarantees a full permutation.
    pub fn tour_length(&self, tour: &[Gene]) -> f64 {
        let Some(&last) = tour.last() else { return 0.0 };
        let mut prev = last as usize;
        let mut total = 0.0;
        for &city in tour {
            total += self.distance(prev, city as usize);
            prev = city as usize;
        }
        total
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = LineReader::new(text);
        let mut name = String::new();
        let mut dimension: Option<usize> = None;
        let mut edge_type: Option<String> = None;
        loop {
            let (line_no, line) =
                lines.next_line().ok_or_else(|| Error::parse(lines.line_count() + 1, "missing NODE_COORD_SECTION"))?;
            let line = line.trim();
            if line == "NODE_COORD_SECTION" {
                let n = dimension.ok_or_else(|| Error::parse(line_no, "NODE_COORD_SECTION before DIMENSION"))?;
                match edge_type.as_deref() {
                    Some("EUC_2D") => {}
                    Some(other) => return Err(Error::UnsupportedEdgeWeightType(other.to_string())),
                    None => return Err(Error::parse(line_no, "missing EDGE_WEIGHT_TYPE")),
                }
                let coords = parse_coords(&mut lines, n)?;
                return Ok(Self::from_coords(name, coords, true));
            }
            let (key, value) = line
                .split_once(':')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::parse(line_no, format!("expected `KEY : VALUE`, found {line:?}")))?;
            match key {
                "NAME" => name = value.to_string(),
                "COMMENT" | "DISPLAY_DATA_TYPE" => {}
                "TYPE" if value == "TSP" => {}
                "TYPE" => return Err(Error::parse(line_no, format!("unsupported TYPE {value:?}"))),
                "DIMENSION" => {
                    let n: usize =
                        value.parse().map_err(|_| Error::parse(line_no, format!("invalid DIMENSION {value:?}")))?;
                    if n == 0 {
                        return Err(Error::parse(line_no, "DIMENSION must be positive"));
                    }
                    dimension = Some(n);
                }
                "EDGE_WEIGHT_TYPE" => {
                    if value != "EUC_2D" {
                        return Err(Error::UnsupportedEdgeWeightType(value.to_string()));
                    }
                    edge_type = Some(value.to_string());
                }
                other => return Err(Error::parse(line_no, format!("unknown keyword {other:?}"))),
            }
        }
    }

    /// TSPLIB text; coordinates print in shortest round-trip form.
    pub fn to_tsplib(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "NAME : {}", self.name);
        out.push_str("TYPE : TSP\n");
        let _ = writeln!(out, "DIMENSION : {}", self.num_cities());
        out.push_str("EDGE_WEIGHT_TYPE : EUC_2D\n");
        out.push_str("NODE_COORD_SECTION\n");
        for (i, (x, y)) in self.coords.iter().enumerate() {
            let _ = writeln!(out, "{} {} {}", i + 1, x, y);
        }
        out.push_str("EOF\n");
        out
    }

    /// Cities at integer coordinates drawn uniformly from `[0, extent]²`.
    pub fn generate(num_cities: usize, extent: u32, rng: &mut RngStream) -> Self {
        let coords = (0..num_cities)
            .map(|_| {
                let x = rng.below(extent as usize + 1) as f64;
                let y = rng.below(extent as usize + 1) as f64;
                (x, y)
            })
            .collect();
        let name = format!("rand{num_cities}");
        Self::from_coords(name, coords, true)
    }
}

fn parse_coords(lines: &mut LineReader<'_>, n: usize) -> Result<Vec<(f64, f64)>> {
    let mut coords: Vec<Option<(f64, f64)>> = vec![None; n];
    for _ in 0..n {
        let (line_no, line) = lines
            .next_line()
            .ok_or_else(|| Error::parse(lines.line_count() + 1, format!("expected {n} coordinate lines")))?;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::parse(line_no, format!("expected `index x y`, found {} fields", tokens.len())));
        }
        let idx: usize =
            tokens[0].parse().map_err(|_| Error::parse(line_no, format!("invalid node index {:?}", tokens[0])))?;
        if idx == 0 || idx > n {
            return Err(Error::parse(line_no, format!("node index {idx} outside 1..={n}")));
        }
        let coord = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::parse(line_no, format!("invalid coordinate {s:?}")))
        };
        let xy = (coord(tokens[1])?, coord(tokens[2])?);
        if coords[idx - 1].replace(xy).is_some() {
            return Err(Error::parse(line_no, format!("node {idx} listed twice")));
        }
    }
    // optional EOF then only blank lines
    if let Some((line_no, line)) = lines.next_line() {
        if line.trim() != "EOF" {
            return Err(Error::parse(line_no, format!("expected EOF, found {:?}", line.trim())));
        }
    }
    lines.expect_only_blank()?;
    Ok(coords.into_iter().map(|c| c.expect("all nodes filled")).collect())
}
