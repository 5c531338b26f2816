//! Numeric checkers for the classical matrix inequalities used throughout:
//! interlacing, Weyl, complement duality, and a few spectral facts about trees.

use serde_json::json;

use super::jacobi::jacobi;
use super::spectrum::{matrix_spectrum, spectrum, Spectrum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::matrix::{laplacian, RealMatrix};
use crate::paths::diameter;
use crate::report::{TheoremId, TheoremReport};

/// `mu_i(G) = n - mu_{n-i}(complement)` for `i = 1..n-1`, within `2 tol`.
pub fn check_complement_duality(g: &Graph) -> TheoremReport {
    let report = TheoremReport::new(TheoremId::ComplementDuality, graph6::encode(g));
    let n = g.order();
    if n < 2 {
        return report.hypothesis_not_met("needs n >= 2");
    }
    let s = spectrum(g);
    let c = spectrum(&g.complement());
    let mut worst: f64 = 0.0;
    for i in 1..n {
        worst = worst.max((s.mu(i) - (n as f64 - c.mu(n - i))).abs());
    }
    let mut report = report.with_witness(json!({
        "spectrum": s.values,
        "complement_spectrum": c.values,
        "max_deviation": worst,
    }));
    report.conclusion_holds = worst <= 2.0 * s.tol;
    report
}

/// Full chain `mu_i(G) >= mu_i(G-e) >= mu_{i+1}(G)` and `mu_n(G) = mu_n(G-e) = 0`.
pub fn check_edge_interlacing(g: &Graph, e: (usize, usize)) -> Result<TheoremReport> {
    let h = g.remove_edges(&[e])?;
    let s = spectrum(g);
    let t = spectrum(&h);
    let n = g.order();
    let tol = 2.0 * s.tol;
    let mut ok = true;
    for i in 1..=n {
        ok &= s.mu(i) + tol >= t.mu(i);
        if i < n {
            ok &= t.mu(i) + tol >= s.mu(i + 1);
        }
    }
    ok &= s.mu(n).abs() <= tol && t.mu(n).abs() <= tol;
    let mut report = TheoremReport::new(TheoremId::EdgeInterlacing, graph6::encode(g))
        .with_witness(json!({
            "edge": [e.0, e.1],
            "spectrum": s.values,
            "spectrum_minus_edge": t.values,
        }));
    report.conclusion_holds = ok;
    Ok(report)
}

/// `rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M)` for the principal submatrix `B` on `keep`.
pub fn check_cauchy_interlacing(m: &RealMatrix, keep: &[usize]) -> Result<TheoremReport> {
    let n = m.order();
    if keep.is_empty() {
        return Err(Error::Parameter("principal subset must be nonempty".into()));
    }
    let mut seen = vec![false; n];
    for &k in keep {
        if k >= n || std::mem::replace(&mut seen[k], true) {
            return Err(Error::Parameter(format!(
                "principal subset index {k} out of range or repeated"
            )));
        }
    }
    let full = matrix_spectrum(m);
    let sub = matrix_spectrum(&m.principal(keep)?);
    let p = keep.len();
    let tol = 2.0 * full.tol;
    let ok = (1..=p).all(|i| full.mu(n - p + i) <= sub.mu(i) + tol && sub.mu(i) <= full.mu(i) + tol);
    let mut report = TheoremReport::new(TheoremId::CauchyInterlacing, format!("order {n} matrix"))
        .with_witness(json!({
            "keep": keep,
            "spectrum": full.values,
            "sub_spectrum": sub.values,
        }));
    report.conclusion_holds = ok;
    Ok(report)
}

/// `rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B)`. At equality, also tests whether
/// the three eigenspaces share a nonzero vector.
pub fn check_weyl(a: &RealMatrix, b: &RealMatrix, i: usize, j: usize) -> Result<TheoremReport> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::Parameter(format!(
            "Weyl check needs equal orders, got {n} and {}",
            b.order()
        )));
    }
    if i == 0 || j == 0 || i + j - 1 > n {
        return Err(Error::Parameter(format!(
            "indices i={i}, j={j} need 1 <= i, j and i + j - 1 <= {n}"
        )));
    }
    let sum = a + b;
    let (ea, eb, es) = (jacobi(a, false), jacobi(b, false), jacobi(&sum, false));
    let tol = [a, b, &sum]
        .iter()
        .map(|m| matrix_spectrum(m).tol)
        .fold(0.0, f64::max);
    let k = i + j - 1;
    let lhs = es.values[k - 1];
    let rhs = ea.values[i - 1] + eb.values[j - 1];
    let holds = lhs <= rhs + 2.0 * tol;
    let equality = (lhs - rhs).abs() <= tol;
    let mut witness = json!({
        "i": i,
        "j": j,
        "rho_sum": lhs,
        "rho_i_a": ea.values[i - 1],
        "rho_j_b": eb.values[j - 1],
        "equality": equality,
    });
    let mut report = TheoremReport::new(TheoremId::Weyl, format!("order {n} matrices"));
    if equality {
        let common = common_eigenvector_residual(
            &[(a, ea.values[i - 1]), (b, eb.values[j - 1]), (&sum, lhs)],
            tol,
        );
        let consistent = common <= 1e-8 * n as f64;
        witness["common_eigenvector_residual"] = json!(common);
        witness["equality_condition_numerically_consistent"] = json!(consistent);
        report = report.note(if consistent {
            "equality case: a common eigenvector exists numerically (numerically consistent, not proved)"
        } else {
            "equality case: no common eigenvector found numerically"
        });
    }
    report.conclusion_holds = holds;
    Ok(report.with_witness(witness))
}

/// Smallest eigenvalue of `sum_k (I - P_k)` where `P_k` projects onto the
/// eigenspace of `m_k` for `lambda_k`. Zero iff the eigenspaces intersect.
fn common_eigenvector_residual(pairs: &[(&RealMatrix, f64)], tol: f64) -> f64 {
    let n = pairs[0].0.order();
    let mut k = RealMatrix::from_fn(n, |r, c| if r == c { pairs.len() as f64 } else { 0.0 });
    for &(m, lambda) in pairs {
        let e = jacobi(m, true);
        let v = e.vectors.expect("vectors requested");
        for (col, &val) in e.values.iter().enumerate() {
            if (val - lambda).abs() > 10.0 * tol {
                continue;
            }
            for r in 0..n {
                for c in 0..n {
                    k[(r, c)] -= v[(r, col)] * v[(c, col)];
                }
            }
        }
    }
    jacobi(&k, false).values.last().copied().unwrap_or(0.0).max(0.0)
}

/// Multiplicity of 0 equals the number of connected components.
pub fn zero_multiplicity_is_components(g: &Graph) -> TheoremReport {
    let s = spectrum(g);
    let zeros = s.values.iter().filter(|x| x.abs() <= s.tol).count();
    let components = g.component_count();
    let mut report = TheoremReport::new(TheoremId::ZeroMultiplicity, graph6::encode(g))
        .with_witness(json!({"zero_multiplicity": zeros, "components": components}));
    report.conclusion_holds = zeros == components;
    report
}

/// For a tree with diameter `d`: `mu_{n-1} <= 2(1 - cos(pi/(d+1)))`.
pub fn doob_tree_bound(t: &Graph) -> TheoremReport {
    let report = TheoremReport::new(TheoremId::DoobTreeBound, graph6::encode(t));
    let n = t.order();
    if n < 2 || !t.is_tree() {
        return report.hypothesis_not_met("input is not a tree on at least two vertices");
    }
    let d = diameter(t).expect("trees are connected").diameter;
    let s = spectrum(t);
    let bound = 2.0 * (1.0 - (std::f64::consts::PI / (d + 1) as f64).cos());
    let value = s.mu(n - 1);
    let mut report = report.with_witness(json!({
        "diameter": d,
        "mu_n_minus_1": value,
        "bound": bound,
    }));
    report.conclusion_holds = value <= bound + s.tol;
    report
}

/// Double star spectra for `n >= 5`: `mu_2 > 2`, `mu_3 = 1`, and eigenvalue 1
/// with multiplicity at least `n - 4`.
pub fn check_double_star(g: &Graph) -> TheoremReport {
    let report = TheoremReport::new(TheoremId::DoubleStarSpectrum, graph6::encode(g));
    let n = g.order();
    let is_double_star = g.is_tree()
        && n >= 5
        && diameter(g).map(|d| d.diameter == 3).unwrap_or(false);
    if !is_double_star {
        return report.hypothesis_not_met("not a double star on at least 5 vertices");
    }
    let s: Spectrum = spectrum(g);
    let one = s.multiplicity_of(1.0);
    let mut report = report.with_witness(json!({
        "mu_2": s.mu(2),
        "mu_3": s.mu(3),
        "multiplicity_of_1": one,
    }));
    report.conclusion_holds = s.mu(2) > 2.0 + s.tol && (s.mu(3) - 1.0).abs() <= s.tol && one + 4 >= n;
    report
}

/// `L(G)` as a real matrix.
pub fn real_laplacian(g: &Graph) -> RealMatrix {
    laplacian(g).to_real()
}
