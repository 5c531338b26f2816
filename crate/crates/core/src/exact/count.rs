//! Exact eigenvalue counts for graph Laplacians.

use num_rational::BigRational;

use super::charpoly::char_poly;
use super::poly::IntPolynomial;
use super::sturm::RootCounter;
use crate::graph::Graph;
use crate::interval::{rat, RatInterval};
use crate::matrix::laplacian;

/// Characteristic polynomial of `L(G)` plus a reusable root counter.
#[derive(Debug, Clone)]
pub struct ExactSpectrum {
    pub char_poly: IntPolynomial,
    counter: RootCounter,
}

impl ExactSpectrum {
    pub fn of(g: &Graph) -> Self {
        let char_poly = char_poly(&laplacian(g));
        let counter = if g.order() == 0 {
            RootCounter::new(&IntPolynomial::one())
        } else {
            RootCounter::with_integer_candidates(&char_poly, 0..=g.order() as i64)
        }
        .expect("characteristic polynomials are nonzero");
        ExactSpectrum { char_poly, counter }
    }

    /// `m_G I`, with multiplicity.
    pub fn count(&self, interval: &RatInterval) -> usize {
        self.counter.count(interval)
    }

    /// `m_G(lambda)`.
    pub fn multiplicity(&self, lambda: &BigRational) -> usize {
        self.counter.multiplicity(lambda)
    }

    pub fn counter(&self) -> &RootCounter {
        &self.counter
    }

    /// Counts for integer intervals inside `[0, n]`, where every Laplacian
    /// eigenvalue lies.
    pub fn integer_counts(&self) -> IntegerCounts {
        IntegerCounts::new(&self.counter, 0, self.counter.degree() as i64)
    }

    /// Eigenvalues `>= k` for integer `k`: `m_G[k, inf)`.
    pub fn count_at_least(&self, k: i64) -> usize {
        let n = self.counter.degree() as i64;
        self.count(&RatInterval::closed_int(k, k.max(n)))
    }
}

/// Exact root counts at every integer of `lo..=hi` and inside each open
/// unit gap, so any interval with integer endpoints in range is answered
/// without another Sturm evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerCounts {
    lo: i64,
    at: Vec<usize>,
    gaps: Vec<usize>,
}

impl IntegerCounts {
    pub fn new(counter: &RootCounter, lo: i64, hi: i64) -> Self {
        let at = (lo..=hi).map(|k| counter.multiplicity(&rat(k))).collect();
        let gaps = (lo..hi)
            .map(|k| counter.count(&RatInterval::int(k, k + 1, false, false)))
            .collect();
        IntegerCounts { lo, at, gaps }
    }

    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.lo + self.at.len() as i64 - 1)
    }

    /// Multiplicity of the integer `k`.
    pub fn at(&self, k: i64) -> usize {
        self.at[(k - self.lo) as usize]
    }

    /// Count on an interval with integer endpoints inside the range.
    pub fn count(&self, a: i64, b: i64, lo_closed: bool, hi_closed: bool) -> usize {
        let (lo, hi) = self.range();
        assert!(lo <= a && a <= b && b <= hi, "interval [{a},{b}] outside {lo}..={hi}");
        if a == b {
            return if lo_closed && hi_closed { self.at(a) } else { 0 };
        }
        let (i, j) = ((a - lo) as usize, (b - lo) as usize);
        let inner: usize = self.at[i + 1..j].iter().sum::<usize>() + self.gaps[i..j].iter().sum::<usize>();
        inner + if lo_closed { self.at[i] } else { 0 } + if hi_closed { self.at[j] } else { 0 }
    }
}

/// Exact `m_G I`.
pub fn exact_interval_count(g: &Graph, interval: &RatInterval) -> usize {
    ExactSpectrum::of(g).count(interval)
}

/// Exact multiplicity of `lambda` as a Laplacian eigenvalue.
pub fn eigenvalue_multiplicity_exact(g: &Graph, lambda: &BigRational) -> usize {
    ExactSpectrum::of(g).multiplicity(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    #[test]
    fn complete_graph_counts() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(exact_interval_count(&k5, &RatInterval::closed_int(5, 5)), 4);
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(eigenvalue_multiplicity_exact(&k6, &rat(6)), 5);
    }

    #[test]
    fn gn3_top_counts() {
        let g = make_family(&FamilySpec::gn3(8)).unwrap();
        assert_eq!(exact_interval_count(&g, &RatInterval::closed_int(6, 8)), 5);
        let g = make_family(&FamilySpec::gn3(7)).unwrap();
        assert_eq!(exact_interval_count(&g, &RatInterval::closed_int(5, 7)), 4);
    }

    #[test]
    fn gndt_strict() {
        let g = make_family(&FamilySpec::gndt(8, 4, 3)).unwrap();
        assert!(exact_interval_count(&g, &RatInterval::closed_int(5, 8)) >= 5);
    }

    #[test]
    fn double_star_one() {
        let g = make_family(&FamilySpec::double_star(8, 2)).unwrap();
        assert!(eigenvalue_multiplicity_exact(&g, &rat(1)) >= 4);
    }

    #[test]
    fn zero_counts_components() {
        let g = Graph::disjoint_union(&[Graph::path(3).unwrap(), Graph::path(2).unwrap()]).unwrap();
        assert_eq!(eigenvalue_multiplicity_exact(&g, &rat(0)), 2);
    }

    #[test]
    fn whole_range() {
        let g = make_family(&FamilySpec::gndt(9, 4, 3)).unwrap();
        let e = ExactSpectrum::of(&g);
        assert_eq!(e.count(&RatInterval::closed_int(0, 9)), 9);
        assert_eq!(e.counter().count_real(), 9);
        assert_eq!(e.count_at_least(0), 9);
    }

    #[test]
    fn integer_table_matches_direct_counts() {
        let g = make_family(&FamilySpec::gn3_minus_2s(8, 2)).unwrap();
        let e = ExactSpectrum::of(&g);
        let t = e.integer_counts();
        for a in 0..=8 {
            for b in a..=8 {
                for (lc, hc) in [(true, true), (true, false), (false, true), (false, false)] {
                    let direct = e.count(&RatInterval::int(a, b, lc, hc));
                    assert_eq!(t.count(a, b, lc, hc), direct, "{a} {b} {lc} {hc}");
                }
            }
        }
    }
}
