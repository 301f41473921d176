use crate::enumerate::Connectivity;

use super::info::GraphInfo;
use super::report::{SweepReport, Tally};
use super::sweep::{GraphCheck, Universe};

/// Longest path order forced by the edge count: the largest `l` with
/// `e > (l - 2) n / 2`, or `None` when no `l >= 2` qualifies.
pub fn forced_path_order(n: usize, e: usize) -> Option<usize> {
    if e == 0 || n == 0 {
        return None;
    }
    Some((2 * e).div_ceil(n) + 1)
}

/// Every graph with `e > (l - 2) n / 2` contains `P_l`, checked against the
/// largest such `l`.
pub struct EdgeBoundCheck;

impl GraphCheck for EdgeBoundCheck {
    fn universe(&self) -> Universe {
        Universe { min_degree: 0, connectivity: Connectivity::Any }
    }

    fn check(&self, info: &GraphInfo, tally: &mut Tally) {
        let g = info.graph;
        match forced_path_order(g.order(), g.edge_count()) {
            None => tally.holds(g.order(), false),
            Some(l) if info.has_path(l) => tally.holds(g.order(), true),
            Some(_) => tally.violation(g),
        }
    }

    fn describe(&self, report: &mut SweepReport) {
        report
            .notes
            .push("each graph is checked at the largest l with e > (l-2)n/2, which implies every smaller l".into());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_orders() {
        assert_eq!(forced_path_order(3, 3), Some(3));
        assert_eq!(forced_path_order(5, 0), None);
        assert_eq!(forced_path_order(4, 1), Some(2));
        assert_eq!(forced_path_order(4, 2), Some(2));
        assert_eq!(forced_path_order(4, 3), Some(3));
        assert_eq!(forced_path_order(6, 15), Some(6));
    }
}
