//! Floating-point Laplacian spectra and tolerance-aware interval counts.

use serde::Serialize;

use super::jacobi::symmetric_eigenvalues;
use crate::graph::Graph;
use crate::interval::RealInterval;
use crate::matrix::{laplacian, RealMatrix};

/// Descending eigenvalues with the tolerance used to classify them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

/// Classification tolerance for an order-`n` spectrum.
pub fn default_tol(n: usize) -> f64 {
    1e-9 * n.max(1) as f64
}

impl Spectrum {
    /// Sorts `values` descending.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tol }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `mu_i`, 1-based: `mu(1)` is the largest.
    pub fn mu(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn count(&self, interval: &RealInterval) -> IntervalCount {
        count_interval(self, interval)
    }

    /// Eigenvalues grouped into clusters separated by gaps above `10 * tol`,
    /// as `(mean value, multiplicity)` pairs in descending order.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=self.values.len() {
            if i == self.values.len() || self.values[i - 1] - self.values[i] > 10.0 * self.tol {
                let cluster = &self.values[start..i];
                out.push((cluster.iter().sum::<f64>() / cluster.len() as f64, cluster.len()));
                start = i;
            }
        }
        out
    }

    /// Multiplicity of the cluster containing `value`, or 0.
    pub fn multiplicity_of(&self, value: f64) -> usize {
        self.multiplicities()
            .into_iter()
            .find(|(v, _)| (v - value).abs() <= 10.0 * self.tol)
            .map_or(0, |(_, m)| m)
    }
}

/// Laplacian spectrum by cyclic Jacobi; `tol = 1e-9 n`.
pub fn spectrum(g: &Graph) -> Spectrum {
    Spectrum::new(
        symmetric_eigenvalues(&laplacian(g).to_real()),
        default_tol(g.order()),
    )
}

/// Spectrum of an arbitrary symmetric matrix, tolerance scaled by its entries.
pub fn matrix_spectrum(m: &RealMatrix) -> Spectrum {
    let tol = default_tol(m.order()) * m.max_abs().max(1.0);
    Spectrum::new(symmetric_eigenvalues(m), tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalCount {
    pub count: usize,
    /// Some eigenvalue sits within `tol` of an endpoint, so the count should
    /// be confirmed exactly.
    pub boundary_warning: bool,
}

/// Counts eigenvalues in `interval`. A closed endpoint admits values within
/// `tol` of it; an open endpoint excludes them.
pub fn count_interval(s: &Spectrum, interval: &RealInterval) -> IntervalCount {
    let tol = s.tol;
    let mut count = 0;
    let mut boundary_warning = false;
    for &x in &s.values {
        let near_lo = (x - interval.lo).abs() <= tol;
        let near_hi = (x - interval.hi).abs() <= tol;
        boundary_warning |= near_lo || near_hi;
        let above_lo = if near_lo {
            interval.lo_closed
        } else {
            x > interval.lo
        };
        let below_hi = if near_hi {
            interval.hi_closed
        } else {
            x < interval.hi
        };
        if above_lo && below_hi {
            count += 1;
        }
    }
    IntervalCount {
        count,
        boundary_warning,
    }
}

/// `mu_j(P_n) = 4 sin^2((n-j) pi / (2n))`, descending.
pub fn path_spectrum_closed_form(n: usize) -> Spectrum {
    let values = (1..=n)
        .map(|j| {
            let s = ((n - j) as f64 * std::f64::consts::PI / (2.0 * n as f64)).sin();
            4.0 * s * s
        })
        .collect();
    Spectrum::new(values, default_tol(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::interval::Interval;

    fn close(a: &[f64], b: &[f64], eps: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= eps)
    }

    #[test]
    fn complete_graph() {
        let s = spectrum(&Graph::complete(4).unwrap());
        assert!(close(&s.values, &[4.0, 4.0, 4.0, 0.0], 1e-12));
        assert_eq!(s.multiplicities().len(), 2);
        assert_eq!(s.multiplicity_of(4.0), 3);
    }

    #[test]
    fn complete_minus_star() {
        let g = make_family(&FamilySpec::complete_minus_star(6, 2)).unwrap();
        let s = spectrum(&g);
        assert!(close(&s.values, &[6.0, 6.0, 6.0, 5.0, 3.0, 0.0], 1e-10));
    }

    #[test]
    fn printed_second_eigenvalues() {
        let ds = make_family(&FamilySpec::double_star(5, 1)).unwrap();
        assert!((spectrum(&ds).mu(2) - 2.311).abs() < 1e-3);

        // u = 4 is the clique vertex; v3 = 2
        let g = make_family(&FamilySpec::gn3(5)).unwrap().remove_edges(&[(2, 4)]).unwrap();
        assert!((spectrum(&g).mu(2) - 2.6889).abs() < 1e-3);
    }

    #[test]
    fn counts() {
        let k5 = spectrum(&Graph::complete(5).unwrap());
        let all = Interval::closed(0.0, 5.0).unwrap();
        assert_eq!(k5.count(&all).count, 5);
        assert!(k5.count(&all).boundary_warning);

        let p4 = spectrum(&Graph::path(4).unwrap());
        let c = p4.count(&Interval::closed(2.0, 4.0).unwrap());
        assert_eq!(c.count, 2);
        assert!(c.boundary_warning);
        assert_eq!(p4.count(&Interval::open(2.0, 4.0).unwrap()).count, 1);
    }

    #[test]
    fn path_closed_form() {
        assert!(close(&path_spectrum_closed_form(2).values, &[2.0, 0.0], 1e-15));
        assert!(close(&path_spectrum_closed_form(3).values, &[3.0, 1.0, 0.0], 1e-14));
        for n in 1..=50 {
            let numeric = spectrum(&Graph::path(n).unwrap());
            let exact = path_spectrum_closed_form(n);
            assert!(close(&numeric.values, &exact.values, 1e-9), "n = {n}");
        }
    }
}
