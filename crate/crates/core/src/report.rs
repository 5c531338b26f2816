//! Machine-checkable verdicts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

/// Statements that can be checked. The short codes (`T4`, `P13`, ...) are the
/// identifiers used on the command line and in JSON reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// `m(2,n] >= ceil(d/2)` for connected graphs.
    #[serde(rename = "T1")]
    AboveTwoLowerBound,
    /// `m(n-d+3,n] <= n-d-1` when `d >= 4`.
    #[serde(rename = "T2")]
    HighTailBound,
    /// `m[n-d+2,n] <= n-d` when `2 <= d <= n-2`.
    #[serde(rename = "T3")]
    ShiftTwoBound,
    /// `m[n-d+1,n] <= n-d+1` when `1 <= d <= n-3`.
    #[serde(rename = "T4")]
    ShiftOneBound,
    /// Diameter two: `m[n-1,n] <= n-2`, equality exactly for `K_n` minus a star.
    #[serde(rename = "T6")]
    DiameterTwoEquality,
    /// Diameter three: `m[n-2,n] <= n-3`, equality exactly for five families.
    #[serde(rename = "T8")]
    DiameterThreeEquality,
    /// Two off-path vertices with at most two path neighbours imply class membership.
    #[serde(rename = "T9")]
    SufficientCondition,
    /// `mu_{n-3}(G_{n,4,3}) > n-3`.
    #[serde(rename = "P12")]
    Gn43Strictness,
    /// `mu_{n-d+1}(G_{n,d,t}) > n-d+1`.
    #[serde(rename = "P13")]
    GndtStrictness,
    #[serde(rename = "L1")]
    CauchyInterlacing,
    #[serde(rename = "L2")]
    Weyl,
    #[serde(rename = "L3")]
    EdgeInterlacing,
    #[serde(rename = "L5")]
    ComplementDuality,
    #[serde(rename = "L6")]
    QuotientContainment,
    /// Double stars: `mu_2 > 2`, `mu_3 = 1`.
    #[serde(rename = "L8")]
    DoubleStarSpectrum,
    /// Edge deletions from `G_{n,3}` push `mu_{n-3}` below `n-2`.
    #[serde(rename = "L7")]
    Gn3DeletionDrop,
    /// Parametric quotient polynomial identities and root locations.
    #[serde(rename = "L9")]
    ParametricIdentity,
    /// Edge deletions from `G^{n,a}` push `mu_{n-3}` below `n-2`.
    #[serde(rename = "L10")]
    GnaDeletionDrop,
    #[serde(rename = "DOOB")]
    DoobTreeBound,
    #[serde(rename = "ZERO")]
    ZeroMultiplicity,
    /// Membership in the class with `m[n-d+1,n] <= n-d`.
    #[serde(rename = "CLASS")]
    ClassMembership,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::AboveTwoLowerBound,
        TheoremId::HighTailBound,
        TheoremId::ShiftTwoBound,
        TheoremId::ShiftOneBound,
        TheoremId::DiameterTwoEquality,
        TheoremId::DiameterThreeEquality,
        TheoremId::SufficientCondition,
        TheoremId::Gn43Strictness,
        TheoremId::GndtStrictness,
        TheoremId::CauchyInterlacing,
        TheoremId::Weyl,
        TheoremId::EdgeInterlacing,
        TheoremId::ComplementDuality,
        TheoremId::QuotientContainment,
        TheoremId::DoubleStarSpectrum,
        TheoremId::Gn3DeletionDrop,
        TheoremId::ParametricIdentity,
        TheoremId::GnaDeletionDrop,
        TheoremId::DoobTreeBound,
        TheoremId::ZeroMultiplicity,
        TheoremId::ClassMembership,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::AboveTwoLowerBound => "T1",
            TheoremId::HighTailBound => "T2",
            TheoremId::ShiftTwoBound => "T3",
            TheoremId::ShiftOneBound => "T4",
            TheoremId::DiameterTwoEquality => "T6",
            TheoremId::DiameterThreeEquality => "T8",
            TheoremId::SufficientCondition => "T9",
            TheoremId::Gn43Strictness => "P12",
            TheoremId::GndtStrictness => "P13",
            TheoremId::CauchyInterlacing => "L1",
            TheoremId::Weyl => "L2",
            TheoremId::EdgeInterlacing => "L3",
            TheoremId::ComplementDuality => "L5",
            TheoremId::QuotientContainment => "L6",
            TheoremId::DoubleStarSpectrum => "L8",
            TheoremId::Gn3DeletionDrop => "L7",
            TheoremId::ParametricIdentity => "L9",
            TheoremId::GnaDeletionDrop => "L10",
            TheoremId::DoobTreeBound => "DOOB",
            TheoremId::ZeroMultiplicity => "ZERO",
            TheoremId::ClassMembership => "CLASS",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parameter(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    /// graph6 string or family spec.
    pub instance: String,
    pub hypothesis_met: bool,
    /// Only meaningful when `hypothesis_met`.
    pub conclusion_holds: bool,
    /// The hypothesis could not be decided (e.g. a search cap was hit).
    pub undetermined: bool,
    pub witness: Value,
    /// The verdict was decided by exact arithmetic.
    pub exact_verified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem_id: TheoremId, instance: impl Into<String>) -> Self {
        TheoremReport {
            theorem_id,
            instance: instance.into(),
            hypothesis_met: true,
            conclusion_holds: true,
            undetermined: false,
            witness: Value::Null,
            exact_verified: false,
            notes: Vec::new(),
        }
    }

    pub fn hypothesis_not_met(mut self, reason: impl Into<String>) -> Self {
        self.hypothesis_met = false;
        self.conclusion_holds = false;
        self.notes.push(reason.into());
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The hypothesis held, was decided, and the conclusion failed.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.undetermined && !self.conclusion_holds
    }

    /// The hypothesis held and the conclusion was confirmed.
    pub fn confirmed(&self) -> bool {
        self.hypothesis_met && !self.undetermined && self.conclusion_holds
    }
}
