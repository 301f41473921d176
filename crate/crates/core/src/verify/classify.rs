use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{validate_certificate, EmbeddingCertificate};
use crate::families::FamilyKind;
use crate::forest::{LinearForest, TheoremClass};
use crate::graph::Graph;
use crate::oracle::naive_contains;
use crate::recognize::{recognize_exception, FamilyMatch};

use super::info::GraphInfo;

/// The four minimum-degree classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    /// Forests of even paths only.
    Even,
    /// Even paths plus one odd path.
    OneOdd,
    /// Two odd paths, 2-connected host.
    #[serde(rename = "TWO_ODD_2CONN")]
    TwoOdd2Conn,
    /// Two odd paths, host with a cut vertex.
    TwoOddCut,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [TheoremId::Even, TheoremId::OneOdd, TheoremId::TwoOdd2Conn, TheoremId::TwoOddCut];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Even => "EVEN",
            TheoremId::OneOdd => "ONE_ODD",
            TheoremId::TwoOdd2Conn => "TWO_ODD_2CONN",
            TheoremId::TwoOddCut => "TWO_ODD_CUT",
        }
    }

    /// Forest class the theorem is about.
    pub fn forest_class(self) -> TheoremClass {
        match self {
            TheoremId::Even => TheoremClass::Even,
            TheoremId::OneOdd => TheoremClass::OneOdd,
            TheoremId::TwoOdd2Conn | TheoremId::TwoOddCut => TheoremClass::TwoOdd,
        }
    }

    /// Smallest order covered by the hypotheses.
    pub fn order_floor(self, h: usize) -> usize {
        match self {
            TheoremId::Even => 2 * h + 2,
            TheoremId::OneOdd => 2 * h + 3,
            TheoremId::TwoOdd2Conn | TheoremId::TwoOddCut => 2 * h + 4,
        }
    }

    /// Order from which the classification is asserted. Below it, a graph
    /// that fits no case is an anomaly rather than a violation.
    pub fn order_threshold(self, h: usize) -> u64 {
        match self {
            TheoremId::TwoOdd2Conn => {
                let p = 2 * h as u64 + 1;
                4u64.saturating_mul(p * p).saturating_mul(binomial(p, h as u64))
            }
            _ => self.order_floor(h) as u64,
        }
    }

    /// Smallest `h` for which the theorem speaks about `f`.
    pub fn min_h(self, f: &LinearForest) -> usize {
        match self {
            TheoremId::Even | TheoremId::OneOdd => 1,
            TheoremId::TwoOdd2Conn => 2,
            TheoremId::TwoOddCut => {
                if f.a().is_empty() {
                    1
                } else {
                    2
                }
            }
        }
    }

    /// Families that may excuse a missing `f`, each with the degree parameter
    /// passed to the recognizer. Only families whose condition on `f` holds
    /// are listed.
    pub fn exceptions(self, f: &LinearForest) -> Vec<(FamilyKind, usize)> {
        let h = f.h();
        let a = f.a();
        let b = f.b();
        let orders = f.orders();
        let mut out = Vec::new();
        match self {
            TheoremId::Even => {
                out.push((FamilyKind::S, h));
                if a.len() == 2 && a[0] == a[1] {
                    out.push((FamilyKind::L, h));
                }
            }
            TheoremId::OneOdd => {
                out.push((FamilyKind::S, h));
                if orders == [6, 3] {
                    out.push((FamilyKind::K2match, h));
                }
                if a.len() == 1 && (a[0] == b[0] || a[0] == b[0] + 1) {
                    out.push((FamilyKind::L, h));
                }
            }
            TheoremId::TwoOdd2Conn => {
                if a.is_empty() {
                    out.push((FamilyKind::Splus, h));
                    if orders == [7, 3] {
                        out.push((FamilyKind::K2match, h));
                    }
                    if orders == [9, 3] {
                        out.push((FamilyKind::K3match, h));
                    }
                } else {
                    out.push((FamilyKind::S, h));
                    if orders == [4, 3, 3] {
                        out.push((FamilyKind::K2match, h));
                    }
                    if orders == [6, 3, 3] {
                        out.push((FamilyKind::K3match, h));
                    }
                }
            }
            TheoremId::TwoOddCut => {
                if a.is_empty() {
                    if orders == [5, 3] {
                        out.push((FamilyKind::H1, h));
                        out.push((FamilyKind::H2, h));
                    }
                    if b[1] + 1 == b[0] {
                        out.push((FamilyKind::L, h));
                    }
                    if b[0] == b[1] {
                        out.push((FamilyKind::U3, h));
                        out.push((FamilyKind::Lgen, h));
                        if h >= 2 {
                            out.push((FamilyKind::Fglue, h));
                            out.push((FamilyKind::Tglue, h));
                        }
                    }
                } else if a == [1] && b[0] == b[1] {
                    out.push((FamilyKind::L, h));
                }
            }
        }
        out
    }

    /// Theorem covering `f` on a host with this connectivity, if any. Two odd
    /// paths with `h = 1` (only `2P3`) go to the cut-vertex case, whose `h = 1`
    /// list holds for every connected host.
    pub fn for_forest(f: &LinearForest, two_connected: bool) -> Result<TheoremId, ClassifyError> {
        match f.params().theorem_class {
            TheoremClass::Even => Ok(TheoremId::Even),
            TheoremClass::OneOdd => Ok(TheoremId::OneOdd),
            TheoremClass::TwoOdd if two_connected && f.h() >= 2 => Ok(TheoremId::TwoOdd2Conn),
            TheoremClass::TwoOdd => Ok(TheoremId::TwoOddCut),
            TheoremClass::OutOfTheoremScope => Err(ClassifyError::OutOfTheoremScope(f.to_string())),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| !matches!(c, '-' | '_' | ' ')).collect::<String>().to_ascii_lowercase();
        match key.as_str() {
            "even" => Ok(TheoremId::Even),
            "oneodd" => Ok(TheoremId::OneOdd),
            "twoodd2conn" | "twoodd2connected" => Ok(TheoremId::TwoOdd2Conn),
            "twooddcut" | "twooddcutvertex" => Ok(TheoremId::TwoOddCut),
            _ => Err(format!("unknown theorem {s:?}")),
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} is outside every theorem's scope (needs at most two odd paths and at least two paths)")]
    OutOfTheoremScope(String),
    #[error("{forest} belongs to {found:?}, not to theorem {theorem}")]
    WrongClass { forest: String, theorem: TheoremId, found: TheoremClass },
}

/// Outcome of checking one graph against one theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Contains {
        certificate: EmbeddingCertificate,
    },
    Exception {
        matched: FamilyMatch,
    },
    /// Hypotheses hold, `F` is absent and no listed family matches.
    Violation {
        /// The naive injection search agrees that `F` is absent.
        confirmed_by_oracle: bool,
        /// The order is below the theorem's stated threshold.
        below_threshold: bool,
    },
    HypothesisNotMet {
        reason: String,
    },
}

/// Picks the theorem from `f`'s class and the connectivity of `g`, then
/// classifies.
pub fn classify(f: &LinearForest, g: &Graph) -> Result<(TheoremId, Verdict), ClassifyError> {
    let info = GraphInfo::new(g);
    let theorem = TheoremId::for_forest(f, info.two_connected())?;
    Ok((theorem, classify_with(theorem, f, &info)?))
}

/// Classifies `g` under a fixed theorem.
pub fn classify_under(theorem: TheoremId, f: &LinearForest, g: &Graph) -> Result<Verdict, ClassifyError> {
    classify_with(theorem, f, &GraphInfo::new(g))
}

/// Hypothesis failure for `theorem`, if any.
pub fn hypothesis_failure(theorem: TheoremId, f: &LinearForest, info: &GraphInfo) -> Option<String> {
    let h = f.h();
    let n = info.n();
    if h < theorem.min_h(f) {
        return Some(format!("theorem {theorem} needs h >= {}, forest has h = {h}", theorem.min_h(f)));
    }
    if !info.connected() {
        return Some("graph is not connected".into());
    }
    match theorem {
        TheoremId::TwoOdd2Conn if !info.two_connected() => return Some("graph is not 2-connected".into()),
        TheoremId::TwoOddCut if h >= 2 && !info.has_cut_vertex() => return Some("graph has no cut vertex".into()),
        _ => {}
    }
    if info.min_degree() < h {
        return Some(format!("minimum degree {} < h = {h}", info.min_degree()));
    }
    let floor = theorem.order_floor(h);
    if n < floor {
        return Some(format!("order {n} < {floor}"));
    }
    None
}

pub(crate) fn classify_with(theorem: TheoremId, f: &LinearForest, info: &GraphInfo) -> Result<Verdict, ClassifyError> {
    let class = f.params().theorem_class;
    if class == TheoremClass::OutOfTheoremScope {
        return Err(ClassifyError::OutOfTheoremScope(f.to_string()));
    }
    if class != theorem.forest_class() {
        return Err(ClassifyError::WrongClass { forest: f.to_string(), theorem, found: class });
    }
    if let Some(reason) = hypothesis_failure(theorem, f, info) {
        return Ok(Verdict::HypothesisNotMet { reason });
    }
    let g = info.graph;
    if let Some(certificate) = info.contains(f) {
        if validate_certificate(g, f, &certificate).is_ok() {
            return Ok(Verdict::Contains { certificate });
        }
    }
    for (kind, h) in theorem.exceptions(f) {
        if let Some(matched) = recognize_exception(g, kind, h) {
            if matched.verify(g).is_ok() {
                return Ok(Verdict::Exception { matched });
            }
        }
    }
    Ok(Verdict::Violation {
        confirmed_by_oracle: !naive_contains(g, f),
        below_threshold: (info.n() as u64) < theorem.order_threshold(f.h()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{complete, cycle, join};
    use crate::families::FamilySpec;
    use crate::forest::parse_forest;

    fn forest(s: &str) -> LinearForest {
        parse_forest(s).unwrap()
    }

    #[test]
    fn star_is_s_exception() {
        let g = FamilySpec::S { n: 6, h: 1 }.generate().unwrap();
        let (t, v) = classify(&forest("2,2"), &g).unwrap();
        assert_eq!(t, TheoremId::Even);
        match v {
            Verdict::Exception { matched } => assert_eq!(matched.spec, FamilySpec::S { n: 6, h: 1 }),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn windmill_is_l_exception() {
        let g = FamilySpec::L { t: 3, h: 3 }.generate().unwrap();
        match classify(&forest("4,4"), &g).unwrap().1 {
            Verdict::Exception { matched } => assert_eq!(matched.family, FamilyKind::L),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matched_join_exception() {
        let matching = crate::build::copies(4, &complete(2).unwrap()).unwrap();
        let g = join(&complete(2).unwrap(), &matching).unwrap();
        let (t, v) = classify(&forest("7,3"), &g).unwrap();
        assert_eq!(t, TheoremId::TwoOdd2Conn);
        match v {
            Verdict::Exception { matched } => assert_eq!(matched.family, FamilyKind::K2match),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_contains_two_p3() {
        let g = cycle(6).unwrap();
        let (t, v) = classify(&forest("3,3"), &g).unwrap();
        assert_eq!(t, TheoremId::TwoOddCut);
        assert!(matches!(v, Verdict::Contains { .. }));
        let v = classify_under(TheoremId::TwoOdd2Conn, &forest("3,3"), &g).unwrap();
        assert!(matches!(v, Verdict::HypothesisNotMet { .. }));
        let v = classify_under(TheoremId::TwoOddCut, &forest("5,3"), &g).unwrap();
        assert!(matches!(v, Verdict::HypothesisNotMet { .. }));
        let v = classify_under(TheoremId::Even, &forest("2,2"), &g).unwrap();
        assert!(matches!(v, Verdict::Contains { .. }));
    }

    #[test]
    fn scope_errors() {
        let g = cycle(6).unwrap();
        assert!(matches!(classify(&forest("3,3,3"), &g), Err(ClassifyError::OutOfTheoremScope(_))));
        assert!(matches!(classify(&forest("5"), &g), Err(ClassifyError::OutOfTheoremScope(_))));
        assert!(matches!(classify_under(TheoremId::Even, &forest("3,2"), &g), Err(ClassifyError::WrongClass { .. })));
    }

    #[test]
    fn thresholds() {
        assert_eq!(TheoremId::TwoOdd2Conn.order_threshold(2), 4 * 25 * 10);
        assert_eq!(TheoremId::TwoOddCut.order_threshold(2), 8);
        assert_eq!(binomial(7, 3), 35);
    }

    #[test]
    fn exception_lists_follow_forest_shape() {
        let kinds = |t: TheoremId, s: &str| t.exceptions(&forest(s)).into_iter().map(|(k, _)| k).collect::<Vec<_>>();
        assert_eq!(kinds(TheoremId::Even, "4,2"), vec![FamilyKind::S]);
        assert_eq!(kinds(TheoremId::OneOdd, "6,3"), vec![FamilyKind::S, FamilyKind::K2match]);
        assert_eq!(kinds(TheoremId::OneOdd, "4,5"), vec![FamilyKind::S, FamilyKind::L]);
        assert_eq!(kinds(TheoremId::TwoOddCut, "3,3"), vec![FamilyKind::U3, FamilyKind::Lgen]);
        assert_eq!(kinds(TheoremId::TwoOddCut, "5,3"), vec![FamilyKind::H1, FamilyKind::H2, FamilyKind::L]);
        assert_eq!(kinds(TheoremId::TwoOddCut, "2,3,3"), vec![FamilyKind::L]);
        assert_eq!(kinds(TheoremId::TwoOddCut, "4,3,3"), Vec::<FamilyKind>::new());
    }

    #[test]
    fn parse_theorem_ids() {
        assert_eq!("two-odd-2conn".parse::<TheoremId>().unwrap(), TheoremId::TwoOdd2Conn);
        assert_eq!("ONE_ODD".parse::<TheoremId>().unwrap(), TheoremId::OneOdd);
        assert!("odd".parse::<TheoremId>().is_err());
    }
}
