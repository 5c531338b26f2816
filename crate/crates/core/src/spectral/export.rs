//! Spectrum export: CSV rows and JSON records.

use serde::Serialize;

use super::spectrum::{count_interval, Spectrum};
use crate::graph::Graph;
use crate::graph6;
use crate::interval::RealInterval;

/// One CSV row per graph: its graph6 string, then the eigenvalues descending.
pub fn spectra_csv<'a>(rows: impl IntoIterator<Item = (&'a Graph, &'a Spectrum)>) -> String {
    let mut out = String::from("graph6,eigenvalues\n");
    for (g, s) in rows {
        out.push_str(&graph6::encode(g));
        for v in &s.values {
            out.push(',');
            out.push_str(&format_value(*v));
        }
        out.push('\n');
    }
    out
}

/// Clean up `-0.0` and round-off just below zero for display.
fn format_value(v: f64) -> String {
    let v = if v.abs() < 1e-12 { 0.0 } else { v };
    format!("{v:.12}")
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRecord {
    pub graph6: String,
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
    /// How many eigenvalues lie within `tol` of an integer.
    pub near_integer_values: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalRecord {
    pub interval: String,
    pub count: usize,
    pub boundary_warning: bool,
}

pub fn spectrum_record(g: &Graph, s: &Spectrum, interval: Option<&RealInterval>) -> SpectrumRecord {
    SpectrumRecord {
        graph6: graph6::encode(g),
        n: g.order(),
        eigenvalues: s.values.iter().map(|&v| if v.abs() < 1e-12 { 0.0 } else { v }).collect(),
        tol: s.tol,
        near_integer_values: s
            .values
            .iter()
            .filter(|v| (*v - v.round()).abs() <= s.tol)
            .count(),
        interval: interval.map(|i| {
            let c = count_interval(s, i);
            IntervalRecord {
                interval: i.to_string(),
                count: c.count,
                boundary_warning: c.boundary_warning,
            }
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::spectrum;

    #[test]
    fn csv_rows() {
        let g = Graph::complete(3).unwrap();
        let s = spectrum(&g);
        let csv = spectra_csv([(&g, &s)]);
        assert_eq!(
            csv,
            "graph6,eigenvalues\nBw,3.000000000000,3.000000000000,0.000000000000\n"
        );
    }

    #[test]
    fn json_record() {
        let g = Graph::path(3).unwrap();
        let s = spectrum(&g);
        let i = RealInterval::closed(1.0, 3.0).unwrap();
        let r = spectrum_record(&g, &s, Some(&i));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["graph6"], "Bg");
        assert_eq!(v["interval"]["count"], 2);
        assert_eq!(v["interval"]["boundary_warning"], true);
        assert_eq!(v["near_integer_values"], 3);
    }
}
