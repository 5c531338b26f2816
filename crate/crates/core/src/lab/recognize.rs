//! Family recognition up to isomorphism, and the equality-case family lists.

use std::collections::HashMap;

use super::canon::canonical_form;
use crate::family::{all_specs, make_family, FamilyKind, FamilySpec};
use crate::graph::Graph;

/// Kinds in the order recognition tries them. Earlier kinds win when two
/// constructions coincide (e.g. `Path(3)` and `CompleteMinusStar(3,1)`).
const PRIORITY: [FamilyKind; 10] = [
    FamilyKind::Complete,
    FamilyKind::Path,
    FamilyKind::CompleteMinusStar,
    FamilyKind::DoubleStar,
    FamilyKind::Gndt,
    FamilyKind::Gn3Minus2s,
    FamilyKind::Gn3Minus4s,
    FamilyKind::GnA,
    FamilyKind::GnAB,
    FamilyKind::PnTplusplus,
];

/// All specs of order `n` in recognition order. Within a kind parameters
/// ascend, except `Gndt` where `t` descends so that `G_{n,3}` is reported
/// as `Gndt(n,3,3)`.
fn candidates(n: usize) -> Vec<FamilySpec> {
    let mut specs = all_specs(n);
    specs.sort_by(|a, b| {
        let rank = |s: &FamilySpec| PRIORITY.iter().position(|&k| k == s.kind).unwrap();
        rank(a).cmp(&rank(b)).then_with(|| {
            if a.kind == FamilyKind::Gndt {
                (a.params[1], b.params[2]).cmp(&(b.params[1], a.params[2]))
            } else {
                a.params.cmp(&b.params)
            }
        })
    });
    specs
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Canonical parameters of the first family member isomorphic to `g`.
///
/// Cheap invariants (size, degree multiset) filter candidates before the
/// canonical-form comparison, so a match is always a certified isomorphism.
pub fn recognize_family(g: &Graph) -> Option<FamilySpec> {
    let n = g.order();
    let degrees = sorted_degrees(g);
    let mut canon = None;
    for spec in candidates(n) {
        let h = make_family(&spec).ok()?;
        if h.size() != g.size() || sorted_degrees(&h) != degrees {
            continue;
        }
        let cg = canon.get_or_insert_with(|| canonical_form(g));
        if canonical_form(&h) == *cg {
            return Some(spec);
        }
    }
    None
}

/// Graphs with diameter two meeting `m[n-1,n] = n-2`: `K_n` minus a star.
pub fn diameter_two_equality_specs(n: usize) -> Vec<FamilySpec> {
    (1..=n.saturating_sub(2))
        .map(|s| FamilySpec::complete_minus_star(n, s))
        .filter(|s| s.validate().is_ok())
        .collect()
}

/// Graphs with diameter three meeting `m[n-2,n] = n-3`: `G_{n,3}`, its two
/// edge-deleted variants, `G^{n,a}` with `a <= n/2 - 2`, and `G^{n,a,b}` with
/// `a <= b`, `a + b <= n-5`.
pub fn diameter_three_equality_specs(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    out.push(FamilySpec::gn3(n));
    for s in 1..=n - 4 {
        out.push(FamilySpec::gn3_minus_2s(n, s));
    }
    for s in 1..=n - 4 {
        out.push(FamilySpec::gn3_minus_4s(n, s));
    }
    for a in 1..=n {
        if 2 * a + 4 <= n && a + 5 <= n {
            out.push(FamilySpec::gna(n, a));
        }
    }
    for a in 1..n {
        for b in a..n {
            if a + b + 5 <= n {
                out.push(FamilySpec::gnab(n, a, b));
            }
        }
    }
    out
}

/// Canonical forms of a spec list, each mapped to the first spec producing it.
#[derive(Debug, Clone, Default)]
pub struct FamilyIndex {
    by_form: HashMap<Graph, FamilySpec>,
}

impl FamilyIndex {
    pub fn new(specs: &[FamilySpec]) -> Self {
        let mut by_form = HashMap::new();
        for spec in specs {
            if let Ok(g) = make_family(spec) {
                by_form.entry(canonical_form(&g)).or_insert_with(|| spec.clone());
            }
        }
        FamilyIndex { by_form }
    }

    /// Looks up a graph already in canonical form.
    pub fn get_canonical(&self, canonical: &Graph) -> Option<&FamilySpec> {
        self.by_form.get(canonical)
    }

    pub fn get(&self, g: &Graph) -> Option<&FamilySpec> {
        self.get_canonical(&canonical_form(g))
    }

    /// Number of distinct isomorphism classes in the list.
    pub fn len(&self) -> usize {
        self.by_form.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_form.is_empty()
    }

    pub fn forms(&self) -> impl Iterator<Item = (&Graph, &FamilySpec)> {
        self.by_form.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_minus_star() {
        let g = Graph::complete(7).unwrap().remove_edges(&[(3, 0), (3, 5), (3, 6)]).unwrap();
        assert_eq!(recognize_family(&g), Some(FamilySpec::complete_minus_star(7, 3)));
    }

    #[test]
    fn gn3_relabelled() {
        let g = make_family(&FamilySpec::gn3(8)).unwrap();
        let h = g.relabel(&[5, 2, 7, 0, 1, 3, 6, 4]).unwrap();
        assert_eq!(recognize_family(&h), Some(FamilySpec::gndt(8, 3, 3)));
    }

    #[test]
    fn none_for_cycle() {
        assert_eq!(recognize_family(&Graph::cycle(5).unwrap()), None);
    }

    #[test]
    fn coincidences_resolve_to_canonical_parameters() {
        let gna = make_family(&FamilySpec::gna(9, 2)).unwrap();
        let gnab = make_family(&FamilySpec::gnab(9, 2, 3)).unwrap();
        assert_eq!(recognize_family(&gna), recognize_family(&gnab));
        assert_eq!(recognize_family(&gna), Some(FamilySpec::gna(9, 2)));
        let g = make_family(&FamilySpec::gndt(8, 2, 2)).unwrap();
        assert_eq!(recognize_family(&g), Some(FamilySpec::complete_minus_star(8, 1)));
    }

    #[test]
    fn equality_lists() {
        assert_eq!(diameter_two_equality_specs(6).len(), 4);
        // n = 9: Gn3, 5 + 5 deletions, a = 1, 2, and (1,1), (1,2), (1,3), (2,2)
        assert_eq!(diameter_three_equality_specs(9).len(), 1 + 5 + 5 + 2 + 4);
        assert_eq!(diameter_three_equality_specs(5).len(), 3);
    }
}
