//! Vertex partitions, Laplacian quotient matrices, and exact containment of
//! quotient spectra in graph spectra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{char_poly, char_poly_rational, IntPolynomial, RationalPolynomial, RootCounter};
use crate::graph::Graph;
use crate::graph6;
use crate::matrix::{laplacian, IntMatrix, Matrix};
use crate::report::{TheoremId, TheoremReport};

/// Ordered blocks covering `0..n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Parameter("partition blocks must be nonempty".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::Parameter(format!("vertex {v} outside 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Parameter(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Parameter(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        let covered: usize = self.blocks.iter().map(Vec::len).sum();
        if covered != g.order() {
            return Err(Error::Parameter(format!(
                "partition covers {covered} vertices, graph has {}",
                g.order()
            )));
        }
        Ok(())
    }
}

/// Average block row sums of `L(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub entries: Matrix<BigRational>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.entries.order()
    }

    /// Entries as `p/q` or integer strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .rows()
            .into_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Integer entries, if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let n = self.order();
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let e = &self.entries[(i, j)];
                if !e.is_integer() {
                    return None;
                }
                m[(i, j)] = i64::try_from(e.to_integer()).ok()?;
            }
        }
        Some(m)
    }

    /// `det(xI - B)`.
    pub fn char_poly(&self) -> RationalPolynomial {
        char_poly_rational(&self.entries)
    }
}

/// Row sums of block `L_ij`, one per vertex of block `i`.
fn block_row_sums(l: &IntMatrix, rows: &[usize], cols: &[usize]) -> Vec<i64> {
    rows.iter()
        .map(|&u| cols.iter().map(|&v| l[(u, v)]).sum())
        .collect()
}

/// Every Laplacian block has constant row sums.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    p.check_order(g)?;
    let l = laplacian(g);
    Ok(p.blocks.iter().all(|bi| {
        p.blocks.iter().all(|bj| {
            let sums = block_row_sums(&l, bi, bj);
            sums.iter().all(|&s| s == sums[0])
        })
    }))
}

pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    p.check_order(g)?;
    let l = laplacian(g);
    let m = p.len();
    let entries = Matrix::from_fn(m, |i, j| {
        let total: i64 = block_row_sums(&l, &p.blocks[i], &p.blocks[j]).iter().sum();
        BigRational::new(BigInt::from(total), BigInt::from(p.blocks[i].len()))
    });
    Ok(QuotientMatrix {
        entries,
        equitable: is_equitable(g, p)?,
    })
}

/// Checks exactly that `det(xI - B)` divides `det(xI - L(G))`.
pub fn check_quotient_containment(g: &Graph, p: &Partition) -> Result<TheoremReport> {
    let q = quotient_matrix(g, p)?;
    let report = TheoremReport::new(TheoremId::QuotientContainment, graph6::encode(g));
    if !q.equitable {
        return Ok(report.hypothesis_not_met("partition is not equitable"));
    }
    let quotient_poly = q.char_poly();
    let graph_poly = char_poly(&laplacian(g));
    // Clear denominators: B is integral for equitable Laplacian partitions,
    // but divide over Q to stay general.
    let scaled: IntPolynomial = quotient_poly.to_primitive_integer();
    let (cofactor, rem) = graph_poly.to_rational().div_rem(&scaled.to_rational());
    let divides = rem.is_zero();
    let mut assignment = Vec::new();
    if divides {
        let counter = RootCounter::new(&scaled)?;
        for (factor, mult) in counter.factors() {
            assignment.push(json!({
                "factor": factor.to_decimal_strings(),
                "multiplicity_in_quotient": mult,
            }));
        }
    }
    let mut report = report.with_witness(json!({
        "quotient": q.to_strings(),
        "quotient_char_poly": scaled.to_decimal_strings(),
        "graph_char_poly": graph_poly.to_decimal_strings(),
        "cofactor": cofactor.to_primitive_integer().to_decimal_strings(),
        "quotient_spectrum_factors": assignment,
    }));
    report.conclusion_holds = divides;
    report.exact_verified = true;
    Ok(report)
}

/// Row sums of the quotient, which must all vanish for a Laplacian.
pub fn row_sums(q: &QuotientMatrix) -> Vec<BigRational> {
    q.entries
        .rows()
        .into_iter()
        .map(|r| r.into_iter().fold(BigRational::zero(), |a, b| a + b))
        .collect()
}
