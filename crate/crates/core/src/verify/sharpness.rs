//! Windmill graphs with minimum degree `h - 1` that avoid `F` and match no
//! exceptional family, showing the degree condition cannot be lowered.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyKind, FamilySpec};
use crate::forest::LinearForest;
use crate::recognize::recognize_exception;

use super::classify::TheoremId;
use super::info::GraphInfo;
use super::report::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SharpnessCase {
    /// `F = 2P(2a)`, `G = L(hq, h-1)` with `h = 2a - 1`.
    EvenEqualPair,
    /// `F = P2 ∪ 2P4`, `G = L(4q, 3)`.
    EvenP2TwoP4,
    /// `F = P(2b) ∪ P(2b+1)`, `G = L(hq, h-1)` with `h = 2b - 1`.
    OneOddBalanced,
    /// `F = P4 ∪ P2 ∪ P3`, `G = L(3q, 2)`.
    OneOddP4P2P3,
}

impl SharpnessCase {
    pub const ALL: [SharpnessCase; 4] = [
        SharpnessCase::EvenEqualPair,
        SharpnessCase::EvenP2TwoP4,
        SharpnessCase::OneOddBalanced,
        SharpnessCase::OneOddP4P2P3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SharpnessCase::EvenEqualPair => "even-equal-pair",
            SharpnessCase::EvenP2TwoP4 => "even-p2-2p4",
            SharpnessCase::OneOddBalanced => "one-odd-balanced",
            SharpnessCase::OneOddP4P2P3 => "one-odd-p4-p2-p3",
        }
    }

    pub fn theorem(self) -> TheoremId {
        match self {
            SharpnessCase::EvenEqualPair | SharpnessCase::EvenP2TwoP4 => TheoremId::Even,
            SharpnessCase::OneOddBalanced | SharpnessCase::OneOddP4P2P3 => TheoremId::OneOdd,
        }
    }

    /// Whether the case takes a path-length parameter (`a` or `b`).
    pub fn has_size_param(self) -> bool {
        matches!(self, SharpnessCase::EvenEqualPair | SharpnessCase::OneOddBalanced)
    }
}

impl fmt::Display for SharpnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SharpnessCase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        SharpnessCase::ALL.into_iter().find(|c| c.name() == key).ok_or_else(|| {
            let names: Vec<&str> = SharpnessCase::ALL.iter().map(|c| c.name()).collect();
            format!("unknown sharpness case {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SharpnessError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// Membership result for one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCheck {
    pub family: FamilyKind,
    pub h: usize,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub schema_version: u32,
    pub case: String,
    pub theorem: TheoremId,
    pub forest: Vec<usize>,
    pub h: usize,
    pub graph: FamilySpec,
    pub n: usize,
    pub order_floor: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub forest_contained: bool,
    pub families: Vec<FamilyCheck>,
    /// Minimum degree `h - 1`, connected, order at least the floor, `F`
    /// absent and no family matched.
    pub certified: bool,
    pub notes: Vec<String>,
}

impl SharpnessReport {
    pub fn to_text(&self) -> String {
        let f = self.forest.iter().map(|o| format!("P{o}")).collect::<Vec<_>>().join("+");
        let mut out =
            format!("{} ({}): F = {f}, h = {}, G = {}, n = {}\n", self.case, self.theorem, self.h, self.graph, self.n);
        out.push_str(&format!(
            "minimum degree {} (h-1 = {}), connected {}, n >= {} {}, F contained {}\n",
            self.min_degree,
            self.h.saturating_sub(1),
            self.connected,
            self.order_floor,
            self.n >= self.order_floor,
            self.forest_contained
        ));
        for fc in &self.families {
            out.push_str(&format!(
                "  {} (h={}): {}\n",
                fc.family,
                fc.h,
                if fc.matched { "matched" } else { "no match" }
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out.push_str(if self.certified { "certified\n" } else { "NOT certified\n" });
        out
    }
}

/// Every family the theorem lists, whatever the condition on `F`.
fn theorem_families(theorem: TheoremId, h: usize) -> Vec<(FamilyKind, usize)> {
    match theorem {
        TheoremId::Even => vec![(FamilyKind::S, h), (FamilyKind::L, h)],
        TheoremId::OneOdd => vec![(FamilyKind::S, h), (FamilyKind::K2match, h), (FamilyKind::L, h)],
        TheoremId::TwoOdd2Conn => {
            vec![(FamilyKind::S, h), (FamilyKind::Splus, h), (FamilyKind::K2match, h), (FamilyKind::K3match, h)]
        }
        TheoremId::TwoOddCut => vec![
            (FamilyKind::H1, h),
            (FamilyKind::H2, h),
            (FamilyKind::L, h),
            (FamilyKind::U3, h),
            (FamilyKind::Lgen, h),
            (FamilyKind::Fglue, h),
            (FamilyKind::Tglue, h),
        ],
    }
}

/// Checks that `graph` witnesses sharpness of `theorem` for `forest`.
pub fn certify_sharpness(
    case: &str,
    theorem: TheoremId,
    forest: &LinearForest,
    graph: FamilySpec,
) -> Result<SharpnessReport, SharpnessError> {
    let g = graph.generate().map_err(|e| SharpnessError::BadParams(e.to_string()))?;
    let info = GraphInfo::new(&g);
    let h = forest.h();
    let families: Vec<FamilyCheck> = theorem_families(theorem, h)
        .into_iter()
        .map(|(family, h)| FamilyCheck { family, h, matched: recognize_exception(&g, family, h).is_some() })
        .collect();
    let forest_contained = info.contains(forest).is_some();
    let order_floor = theorem.order_floor(h);
    let min_degree = info.min_degree();
    let connected = info.connected();
    let certified = h >= 1
        && min_degree + 1 == h
        && connected
        && g.order() >= order_floor
        && !forest_contained
        && families.iter().all(|f| !f.matched);
    Ok(SharpnessReport {
        schema_version: SCHEMA_VERSION,
        case: case.to_string(),
        theorem,
        forest: forest.orders().to_vec(),
        h,
        graph,
        n: g.order(),
        order_floor,
        min_degree,
        connected,
        forest_contained,
        families,
        certified,
        notes: Vec::new(),
    })
}

/// Smallest `q >= 1` whose order `step * q + 1` reaches `floor`.
fn smallest_q(step: usize, floor: usize) -> usize {
    (floor.saturating_sub(1)).div_ceil(step).max(1)
}

/// Runs one construction. `size` is `a` or `b` for the parametrized cases
/// (default 2); `q` scales the order (default: smallest reaching the floor).
pub fn sharpness_demo(
    case: SharpnessCase,
    size: Option<usize>,
    q: Option<usize>,
) -> Result<SharpnessReport, SharpnessError> {
    if size.is_some() && !case.has_size_param() {
        return Err(SharpnessError::BadParams(format!("{case} takes no path-length parameter")));
    }
    if q == Some(0) {
        return Err(SharpnessError::BadParams("q must be positive".into()));
    }
    let s = size.unwrap_or(2);
    let orders = match case {
        SharpnessCase::EvenEqualPair => vec![2 * s, 2 * s],
        SharpnessCase::EvenP2TwoP4 => vec![4, 4, 2],
        SharpnessCase::OneOddBalanced => vec![2 * s + 1, 2 * s],
        SharpnessCase::OneOddP4P2P3 => vec![4, 3, 2],
    };
    let forest = LinearForest::new(orders).map_err(|e| SharpnessError::BadParams(e.to_string()))?;
    let h = forest.h();
    if h < 2 {
        return Err(SharpnessError::BadParams(format!("{case} needs h >= 2 so that h - 1 >= 1; got h = {h}")));
    }
    let theorem = case.theorem();
    // n = h(h-1)q + 1, so G has hq blocks K_h.
    let step = h * (h - 1);
    let q = q.unwrap_or_else(|| smallest_q(step, theorem.order_floor(h)));
    let graph = FamilySpec::L { t: h * q, h: h - 1 };
    graph.validate().map_err(|e| SharpnessError::BadParams(e.to_string()))?;
    let mut report = certify_sharpness(case.name(), theorem, &forest, graph)?;
    report.notes.push(format!("q = {q}, n = h(h-1)q + 1"));
    if case == SharpnessCase::OneOddBalanced {
        report.notes.push(format!(
            "h is computed from F as 2b - 1 = {h}; the construction has minimum degree h - 1 = {}",
            h - 1
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_certify_by_default() {
        for case in SharpnessCase::ALL {
            let r = sharpness_demo(case, None, None).unwrap();
            assert!(r.certified, "{}", r.to_text());
            assert_eq!(r.n, 13, "{case}");
        }
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!("even_p2_2p4".parse::<SharpnessCase>().unwrap(), SharpnessCase::EvenP2TwoP4);
        assert!(sharpness_demo(SharpnessCase::EvenEqualPair, Some(1), None).is_err());
        assert!(sharpness_demo(SharpnessCase::EvenP2TwoP4, Some(3), None).is_err());
        assert!(sharpness_demo(SharpnessCase::EvenP2TwoP4, None, Some(0)).is_err());
    }

    #[test]
    fn smallest_q_reaches_floor() {
        assert_eq!(smallest_q(6, 8), 2);
        assert_eq!(smallest_q(12, 10), 1);
        assert_eq!(smallest_q(6, 9), 2);
    }
}
