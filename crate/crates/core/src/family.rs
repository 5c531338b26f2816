//! Parametric graph families.
//!
//! Labelling is fixed so spectra and reports are reproducible: the path
//! `v_1 .. v_{d+1}` occupies vertices `0..=d`, clique vertices follow in
//! ascending order. Where a construction picks "some" clique vertices, the
//! lowest labels go to `v_1` and the highest are the ones whose edges are
//! removed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    Path,
    Complete,
    /// Diameter-3 tree with `a` and `n-2-a` pendant edges at the two centres.
    DoubleStar,
    /// Path `P_{d+1}` plus a clique `K_{n-d-1}` joined to `v_{t-1}, v_t, v_{t+1}`.
    Gndt,
    /// `Gndt(n,3,3)` minus `s` edges between `v_2` and clique vertices.
    Gn3Minus2s,
    /// `Gndt(n,3,3)` minus `s` edges between `v_4` and clique vertices.
    Gn3Minus4s,
    /// `P_4` plus `K_{n-4}` joined to `v_2, v_3`; `a` clique vertices also
    /// meet `v_1`, the other `n-4-a` meet `v_4`.
    GnA,
    /// As `GnA` but only `a` and `b` clique vertices meet `v_1` and `v_4`.
    GnAB,
    /// `P_{n-1}` plus a vertex adjacent to `v_t` and `v_{t+2}`.
    PnTplusplus,
    /// `K_n` minus a star with `s` edges.
    CompleteMinusStar,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Path,
        FamilyKind::Complete,
        FamilyKind::DoubleStar,
        FamilyKind::Gndt,
        FamilyKind::Gn3Minus2s,
        FamilyKind::Gn3Minus4s,
        FamilyKind::GnA,
        FamilyKind::GnAB,
        FamilyKind::PnTplusplus,
        FamilyKind::CompleteMinusStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "Path",
            FamilyKind::Complete => "Complete",
            FamilyKind::DoubleStar => "DoubleStar",
            FamilyKind::Gndt => "Gndt",
            FamilyKind::Gn3Minus2s => "Gn3Minus2s",
            FamilyKind::Gn3Minus4s => "Gn3Minus4s",
            FamilyKind::GnA => "GnA",
            FamilyKind::GnAB => "GnAB",
            FamilyKind::PnTplusplus => "PnTplusplus",
            FamilyKind::CompleteMinusStar => "CompleteMinusStar",
        }
    }

    /// Parameter names after `n`, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Path | FamilyKind::Complete => &["n"],
            FamilyKind::DoubleStar | FamilyKind::GnA => &["n", "a"],
            FamilyKind::Gndt => &["n", "d", "t"],
            FamilyKind::Gn3Minus2s | FamilyKind::Gn3Minus4s | FamilyKind::CompleteMinusStar => {
                &["n", "s"]
            }
            FamilyKind::GnAB => &["n", "a", "b"],
            FamilyKind::PnTplusplus => &["n", "t"],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown family kind {s:?}")))
    }
}

/// A family kind with its integer parameters; `params[0]` is always `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[usize]) -> Self {
        FamilySpec {
            kind,
            params: params.to_vec(),
        }
    }

    pub fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, &[n])
    }
    pub fn complete(n: usize) -> Self {
        Self::new(FamilyKind::Complete, &[n])
    }
    pub fn double_star(n: usize, a: usize) -> Self {
        Self::new(FamilyKind::DoubleStar, &[n, a])
    }
    pub fn gndt(n: usize, d: usize, t: usize) -> Self {
        Self::new(FamilyKind::Gndt, &[n, d, t])
    }
    pub fn gn3(n: usize) -> Self {
        Self::gndt(n, 3, 3)
    }
    pub fn gn3_minus_2s(n: usize, s: usize) -> Self {
        Self::new(FamilyKind::Gn3Minus2s, &[n, s])
    }
    pub fn gn3_minus_4s(n: usize, s: usize) -> Self {
        Self::new(FamilyKind::Gn3Minus4s, &[n, s])
    }
    pub fn gna(n: usize, a: usize) -> Self {
        Self::new(FamilyKind::GnA, &[n, a])
    }
    pub fn gnab(n: usize, a: usize, b: usize) -> Self {
        Self::new(FamilyKind::GnAB, &[n, a, b])
    }
    pub fn pnt_plusplus(n: usize, t: usize) -> Self {
        Self::new(FamilyKind::PnTplusplus, &[n, t])
    }
    pub fn complete_minus_star(n: usize, s: usize) -> Self {
        Self::new(FamilyKind::CompleteMinusStar, &[n, s])
    }

    pub fn order(&self) -> usize {
        self.params.first().copied().unwrap_or(0)
    }

    /// Diameter every member of the family has by construction.
    pub fn declared_diameter(&self) -> usize {
        let n = self.order();
        match self.kind {
            FamilyKind::Path => n.saturating_sub(1),
            FamilyKind::Complete => usize::from(n > 1),
            FamilyKind::Gndt => self.params[1],
            FamilyKind::PnTplusplus => n - 2,
            FamilyKind::CompleteMinusStar => 2,
            FamilyKind::DoubleStar
            | FamilyKind::Gn3Minus2s
            | FamilyKind::Gn3Minus4s
            | FamilyKind::GnA
            | FamilyKind::GnAB => 3,
        }
    }

    /// Checks the parameter ranges, naming the first violated constraint.
    pub fn validate(&self) -> Result<()> {
        let names = self.kind.param_names();
        if self.params.len() != names.len() {
            return Err(self.domain(format!(
                "expected parameters ({}), got {} values",
                names.join(", "),
                self.params.len()
            )));
        }
        let p = &self.params;
        let n = p[0];
        let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(self.domain(what.to_string())) };
        check(n <= crate::graph::MAX_ORDER, "n <= 64")?;
        match self.kind {
            FamilyKind::Path | FamilyKind::Complete => check(n >= 1, "n >= 1"),
            FamilyKind::DoubleStar => {
                check(n >= 4, "n >= 4")?;
                check(p[1] >= 1 && p[1] + 3 <= n, "1 <= a <= n-3")
            }
            FamilyKind::Gndt => {
                let (d, t) = (p[1], p[2]);
                check(d >= 2 && d + 2 <= n, "2 <= d <= n-2")?;
                check(t >= 2 && t <= d, "2 <= t <= d")
            }
            FamilyKind::Gn3Minus2s | FamilyKind::Gn3Minus4s => {
                check(n >= 5, "n >= 5")?;
                check(p[1] >= 1 && p[1] + 4 <= n, "1 <= s <= n-4")
            }
            FamilyKind::GnA => {
                check(n >= 6, "n >= 6")?;
                check(p[1] >= 1 && p[1] + 5 <= n, "1 <= a <= n-5")
            }
            FamilyKind::GnAB => {
                check(p[1] >= 1 && p[2] >= 1, "a, b >= 1")?;
                check(p[1] + p[2] + 4 <= n, "a + b <= n-4")
            }
            FamilyKind::PnTplusplus => {
                check(n >= 4, "n >= 4")?;
                check(p[1] >= 1 && p[1] + 3 <= n, "1 <= t <= n-3")
            }
            FamilyKind::CompleteMinusStar => {
                check(n >= 3, "n >= 3")?;
                check(p[1] >= 1 && p[1] + 2 <= n, "1 <= s <= n-2")
            }
        }
    }

    fn domain(&self, constraint: String) -> Error {
        Error::ParameterDomain {
            family: self.kind.name(),
            constraint,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        make_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.params.iter().map(usize::to_string).collect();
        write!(f, "{}({})", self.kind, args.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `Kind(p1,p2,...)` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            offset: 0,
            message: format!("expected Kind(n,...), found {s:?}"),
        };
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let kind: FamilyKind = s[..open].trim().parse()?;
        let params = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { kind, params })
    }
}

/// Clique on `members`, plus every member joined to each vertex of `hubs`.
fn clique_joined(edges: &mut Vec<(usize, usize)>, members: &[usize], hubs: &[usize]) {
    for (i, &u) in members.iter().enumerate() {
        for &w in &members[i + 1..] {
            edges.push((u, w));
        }
        for &h in hubs {
            edges.push((h, u));
        }
    }
}

fn path_edges(len: usize) -> Vec<(usize, usize)> {
    (1..len).map(|i| (i - 1, i)).collect()
}

/// Builds the graph described by `spec`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    let n = p[0];
    match spec.kind {
        FamilyKind::Path => Graph::path(n),
        FamilyKind::Complete => Graph::complete(n),
        FamilyKind::DoubleStar => {
            // v1 v2 v3 v4 on 0..4; the extra a-1 leaves hang off v2, the rest off v3.
            let a = p[1];
            let mut edges = path_edges(4);
            edges.extend((4..3 + a).map(|x| (1, x)));
            edges.extend((3 + a..n).map(|x| (2, x)));
            Graph::from_edges(n, &edges)
        }
        FamilyKind::Gndt => {
            let (d, t) = (p[1], p[2]);
            let mut edges = path_edges(d + 1);
            let clique: Vec<usize> = (d + 1..n).collect();
            clique_joined(&mut edges, &clique, &[t - 2, t - 1, t]);
            Graph::from_edges(n, &edges)
        }
        FamilyKind::Gn3Minus2s | FamilyKind::Gn3Minus4s => {
            let s = p[1];
            let hub = if spec.kind == FamilyKind::Gn3Minus2s { 1 } else { 3 };
            let base = make_family(&FamilySpec::gn3(n))?;
            let removed: Vec<_> = (n - s..n).map(|u| (hub, u)).collect();
            base.remove_edges(&removed)
        }
        FamilyKind::GnA => gnab_graph(n, p[1], n - 4 - p[1]),
        FamilyKind::GnAB => gnab_graph(n, p[1], p[2]),
        FamilyKind::PnTplusplus => {
            let t = p[1];
            let mut edges = path_edges(n - 1);
            edges.push((t - 1, n - 1));
            edges.push((t + 1, n - 1));
            Graph::from_edges(n, &edges)
        }
        FamilyKind::CompleteMinusStar => {
            // centre 0, removed partners 1..=s
            let s = p[1];
            let removed: Vec<_> = (1..=s).map(|i| (0, i)).collect();
            Graph::complete(n)?.remove_edges(&removed)
        }
    }
}

fn gnab_graph(n: usize, a: usize, b: usize) -> Result<Graph> {
    let mut edges = path_edges(4);
    let clique: Vec<usize> = (4..n).collect();
    clique_joined(&mut edges, &clique, &[1, 2]);
    edges.extend(clique[..a].iter().map(|&u| (0, u)));
    edges.extend(clique[a..a + b].iter().map(|&u| (3, u)));
    Graph::from_edges(n, &edges)
}

/// Every in-range spec of every kind with order exactly `n`.
pub fn all_specs(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for kind in FamilyKind::ALL {
        let arity = kind.param_names().len();
        let mut tuple = vec![1usize; arity - 1];
        if arity == 1 {
            push_if_valid(&mut out, FamilySpec::new(kind, &[n]));
            continue;
        }
        loop {
            let mut params = vec![n];
            params.extend_from_slice(&tuple);
            push_if_valid(&mut out, FamilySpec::new(kind, &params));
            // odometer over 1..=n for each extra parameter
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if tuple[i] <= n {
                    break;
                }
                tuple[i] = 1;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

fn push_if_valid(out: &mut Vec<FamilySpec>, spec: FamilySpec) {
    if spec.validate().is_ok() {
        out.push(spec);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::diameter;

    #[test]
    fn path4_edges() {
        let g = make_family(&FamilySpec::path(4)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn gn3_at_five() {
        // P_4 plus one vertex adjacent to v2, v3, v4: 3 + 3 edges
        let g = make_family(&FamilySpec::gndt(5, 3, 3)).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn gnab_9_1_2() {
        let g = make_family(&FamilySpec::gnab(9, 1, 2)).unwrap();
        assert_eq!(diameter(&g).unwrap().diameter, 3);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(3), 3);
    }

    #[test]
    fn complete_minus_star() {
        let g = make_family(&FamilySpec::complete_minus_star(6, 2)).unwrap();
        let expected = Graph::complete(6)
            .unwrap()
            .remove_edges(&[(0, 1), (0, 2)])
            .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn gndt_9_4_3_diameter() {
        let g = make_family(&FamilySpec::gndt(9, 4, 3)).unwrap();
        assert_eq!(diameter(&g).unwrap().diameter, 4);
    }

    #[test]
    fn out_of_range_names_constraint() {
        let err = make_family(&FamilySpec::gndt(6, 5, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::ParameterDomain {
                family: "Gndt",
                constraint: "2 <= d <= n-2".into()
            }
        );
        let err = make_family(&FamilySpec::gnab(8, 2, 3)).unwrap_err();
        assert!(err.to_string().contains("a + b <= n-4"));
        assert!(make_family(&FamilySpec::gna(5, 1)).is_err());
        assert!(make_family(&FamilySpec::new(FamilyKind::Gndt, &[9, 4])).is_err());
    }

    #[test]
    fn declared_diameters_hold() {
        for n in 1..=11 {
            for spec in all_specs(n) {
                let g = make_family(&spec).unwrap();
                assert_eq!(
                    diameter(&g).unwrap().diameter,
                    spec.declared_diameter(),
                    "{spec}"
                );
            }
        }
    }

    #[test]
    fn gn3_pendant_v1() {
        for n in 5..=20 {
            let g = make_family(&FamilySpec::gn3(n)).unwrap();
            assert_eq!(g.degree(0), 1);
        }
    }

    #[test]
    fn gna_is_gnab_with_complementary_split() {
        let a = make_family(&FamilySpec::gna(9, 2)).unwrap();
        let b = make_family(&FamilySpec::gnab(9, 2, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spec_text_round_trip() {
        let spec = FamilySpec::gndt(9, 4, 3);
        assert_eq!(spec.to_string(), "Gndt(9,4,3)");
        assert_eq!("gndt(9, 4, 3)".parse::<FamilySpec>().unwrap(), spec);
    }
}
