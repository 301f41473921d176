//! Linear forests and their parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("empty forest")]
    Empty,
    #[error("path order {0} is too small (paths need at least 2 vertices)")]
    OrderTooSmall(usize),
    #[error("cannot parse path order {0:?}")]
    BadToken(String),
}

/// Which minimum-degree theorem applies to a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremClass {
    /// No odd paths, at least two even ones.
    Even,
    /// Exactly one odd path and at least one even one.
    OneOdd,
    /// Exactly two odd paths.
    TwoOdd,
    OutOfTheoremScope,
}

/// Path orders, sorted descending. Every order is at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForest {
    orders: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestParams {
    pub k: usize,
    pub l: usize,
    pub h: usize,
    pub total_order: usize,
    pub theorem_class: TheoremClass,
}

impl LinearForest {
    pub fn new(mut orders: Vec<usize>) -> Result<LinearForest, ForestError> {
        if orders.is_empty() {
            return Err(ForestError::Empty);
        }
        if let Some(&bad) = orders.iter().find(|&&o| o < 2) {
            return Err(ForestError::OrderTooSmall(bad));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForest { orders })
    }

    /// Single path of order `t`.
    pub fn path(t: usize) -> Result<LinearForest, ForestError> {
        LinearForest::new(vec![t])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn total_order(&self) -> usize {
        self.orders.iter().sum()
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Halves of the even orders, descending: `a_1 >= ... >= a_k`.
    pub fn a(&self) -> Vec<usize> {
        self.orders.iter().filter(|o| *o % 2 == 0).map(|o| o / 2).collect()
    }

    /// `b_i` with odd order `2 b_i + 1`, descending.
    pub fn b(&self) -> Vec<usize> {
        self.orders.iter().filter(|o| *o % 2 == 1).map(|o| o / 2).collect()
    }

    pub fn params(&self) -> ForestParams {
        let a = self.a();
        let b = self.b();
        let (k, l) = (a.len(), b.len());
        let h = a.iter().sum::<usize>() + b.iter().sum::<usize>() - 1;
        let total_order = self.total_order();
        debug_assert_eq!(total_order, 2 * h + 2 + l);
        let theorem_class = match l {
            _ if k + l < 2 => TheoremClass::OutOfTheoremScope,
            0 => TheoremClass::Even,
            1 => TheoremClass::OneOdd,
            2 => TheoremClass::TwoOdd,
            _ => TheoremClass::OutOfTheoremScope,
        };
        ForestParams { k, l, h, total_order, theorem_class }
    }

    pub fn h(&self) -> usize {
        self.params().h
    }
}

pub fn parse_forest(text: &str) -> Result<LinearForest, ForestError> {
    text.parse()
}

pub fn forest_params(f: &LinearForest) -> ForestParams {
    f.params()
}

impl FromStr for LinearForest {
    type Err = ForestError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ForestError::Empty);
        }
        let orders = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| ForestError::BadToken(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        LinearForest::new(orders)
    }
}

impl fmt::Display for LinearForest {
    /// Written as `P7+P3`, or `2P3` for repeated orders.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.orders.len() {
            let o = self.orders[i];
            let run = self.orders[i..].iter().take_while(|&&x| x == o).count();
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{run}P{o}")?;
            } else {
                write!(f, "P{o}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        assert_eq!(parse_forest("4,4").unwrap().orders(), &[4, 4]);
        assert_eq!(parse_forest("3,2,3").unwrap().orders(), &[3, 3, 2]);
        assert_eq!(parse_forest("1,4"), Err(ForestError::OrderTooSmall(1)));
        assert_eq!(parse_forest(""), Err(ForestError::Empty));
        assert!(matches!(parse_forest("x"), Err(ForestError::BadToken(_))));
    }

    #[test]
    fn params_examples() {
        let p = parse_forest("4,4").unwrap().params();
        assert_eq!((p.k, p.l, p.h, p.total_order, p.theorem_class), (2, 0, 3, 8, TheoremClass::Even));
        let p = parse_forest("6,3").unwrap().params();
        assert_eq!((p.k, p.l, p.h, p.total_order, p.theorem_class), (1, 1, 3, 9, TheoremClass::OneOdd));
        let p = parse_forest("3,3,3").unwrap().params();
        assert_eq!(p.theorem_class, TheoremClass::OutOfTheoremScope);
        assert_eq!(parse_forest("5").unwrap().params().theorem_class, TheoremClass::OutOfTheoremScope);
        assert_eq!(parse_forest("3,3").unwrap().params().theorem_class, TheoremClass::TwoOdd);
    }

    #[test]
    fn display() {
        assert_eq!(parse_forest("3,7").unwrap().to_string(), "P7+P3");
        assert_eq!(parse_forest("3,3,2").unwrap().to_string(), "2P3+P2");
    }
}
