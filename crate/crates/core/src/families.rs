//! Generators and closed forms for the exceptional graph families.
//!
//! Numbering is deterministic with hubs and centers first:
//!
//! * `S{n,h}`: hubs `0..h` form a clique joined to the independent set `h..n`.
//! * `SPLUS{n,h}`: `S{n,h}` plus the edge `(h, h+1)`.
//! * `L{t,h}`: center `0`, then `t` blocks of `h` vertices; each block with the
//!   center is a `K_{h+1}`.
//! * `LGEN{t1,t2,h}`: center `0`, `t1` blocks of size `h`, then `t2` blocks of
//!   size `h+1`, every block joined to the center. `t1 = 0` or `t2 = 0` is allowed.
//! * `FGLUE` / `TGLUE`: `LGEN` followed by one / two pendant `K_{h+1}` whose first
//!   vertex is joined to the center by a single edge. Requires `h >= 2`;
//!   `t1 = t2 = 0` leaves a bare center whose degree is the number of pendants.
//! * `U3{h}`: triangle `0,1,2`; hub `i` lies in its own `K_{h+1}`.
//! * `H1{n}`: `S{n-2,2}` with hubs `0,1`; a triangle on `0, n-2, n-1`.
//! * `H2{n}`: `S{n-4,2}` with a triangle on `0, n-4, n-3` and one on `1, n-2, n-1`.
//!   Defined from `n = 8`: the order-8 member (both hubs carrying a triangle
//!   over a 4-cycle) is an extremal case of the `P5 ∪ P3` classification.
//! * `K2MATCH{n}` / `K3MATCH{n}`: a `K_2` / `K_3` on the first vertices joined to
//!   a perfect matching on the rest.
//! * `HNLA{n,l,a}`: `K_a` joined to `K_{l-2a}` plus `n-l+a` isolated vertices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::build::{complete, disjoint_union, join};
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameters for {kind}: {reason}")]
    BadParams { kind: FamilyKind, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    S,
    Splus,
    L,
    Lgen,
    Fglue,
    Tglue,
    U3,
    H1,
    H2,
    K2match,
    K3match,
    Hnla,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::S,
        FamilyKind::Splus,
        FamilyKind::L,
        FamilyKind::Lgen,
        FamilyKind::Fglue,
        FamilyKind::Tglue,
        FamilyKind::U3,
        FamilyKind::H1,
        FamilyKind::H2,
        FamilyKind::K2match,
        FamilyKind::K3match,
        FamilyKind::Hnla,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::S => "S",
            FamilyKind::Splus => "SPLUS",
            FamilyKind::L => "L",
            FamilyKind::Lgen => "LGEN",
            FamilyKind::Fglue => "FGLUE",
            FamilyKind::Tglue => "TGLUE",
            FamilyKind::U3 => "U3",
            FamilyKind::H1 => "H1",
            FamilyKind::H2 => "H2",
            FamilyKind::K2match => "K2MATCH",
            FamilyKind::K3match => "K3MATCH",
            FamilyKind::Hnla => "HNLA",
        }
    }

    /// Parameter names accepted by [`FamilySpec::from_params`].
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::S | FamilyKind::Splus => &["n", "h"],
            FamilyKind::L => &["t", "h"],
            FamilyKind::Lgen | FamilyKind::Fglue | FamilyKind::Tglue => &["t1", "t2", "h"],
            FamilyKind::U3 => &["h"],
            FamilyKind::H1 | FamilyKind::H2 | FamilyKind::K2match | FamilyKind::K3match => &["n"],
            FamilyKind::Hnla => &["n", "l", "a"],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String =
            s.to_ascii_uppercase().replace('+', "PLUS").chars().filter(|c| !matches!(c, '_' | '-' | ' ')).collect();
        FamilyKind::ALL.into_iter().find(|k| k.name() == key).ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family member with concrete parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilySpec {
    S { n: usize, h: usize },
    Splus { n: usize, h: usize },
    L { t: usize, h: usize },
    Lgen { t1: usize, t2: usize, h: usize },
    Fglue { t1: usize, t2: usize, h: usize },
    Tglue { t1: usize, t2: usize, h: usize },
    U3 { h: usize },
    H1 { n: usize },
    H2 { n: usize },
    K2match { n: usize },
    K3match { n: usize },
    Hnla { n: usize, l: usize, a: usize },
}

fn c2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::S { .. } => FamilyKind::S,
            FamilySpec::Splus { .. } => FamilyKind::Splus,
            FamilySpec::L { .. } => FamilyKind::L,
            FamilySpec::Lgen { .. } => FamilyKind::Lgen,
            FamilySpec::Fglue { .. } => FamilyKind::Fglue,
            FamilySpec::Tglue { .. } => FamilyKind::Tglue,
            FamilySpec::U3 { .. } => FamilyKind::U3,
            FamilySpec::H1 { .. } => FamilyKind::H1,
            FamilySpec::H2 { .. } => FamilyKind::H2,
            FamilySpec::K2match { .. } => FamilyKind::K2match,
            FamilySpec::K3match { .. } => FamilyKind::K3match,
            FamilySpec::Hnla { .. } => FamilyKind::Hnla,
        }
    }

    /// Builds a spec from named parameters, e.g. `n=7,h=2`.
    pub fn from_params(kind: FamilyKind, params: &BTreeMap<String, usize>) -> Result<FamilySpec, FamilyError> {
        for key in params.keys() {
            if !kind.param_names().contains(&key.as_str()) {
                return Err(bad(kind, format!("unknown parameter {key:?}; expected {:?}", kind.param_names())));
            }
        }
        let get =
            |name: &str| params.get(name).copied().ok_or_else(|| bad(kind, format!("missing parameter {name:?}")));
        let spec = match kind {
            FamilyKind::S => FamilySpec::S { n: get("n")?, h: get("h")? },
            FamilyKind::Splus => FamilySpec::Splus { n: get("n")?, h: get("h")? },
            FamilyKind::L => FamilySpec::L { t: get("t")?, h: get("h")? },
            FamilyKind::Lgen => FamilySpec::Lgen { t1: get("t1")?, t2: get("t2")?, h: get("h")? },
            FamilyKind::Fglue => FamilySpec::Fglue { t1: get("t1")?, t2: get("t2")?, h: get("h")? },
            FamilyKind::Tglue => FamilySpec::Tglue { t1: get("t1")?, t2: get("t2")?, h: get("h")? },
            FamilyKind::U3 => FamilySpec::U3 { h: get("h")? },
            FamilyKind::H1 => FamilySpec::H1 { n: get("n")? },
            FamilyKind::H2 => FamilySpec::H2 { n: get("n")? },
            FamilyKind::K2match => FamilySpec::K2match { n: get("n")? },
            FamilyKind::K3match => FamilySpec::K3match { n: get("n")? },
            FamilyKind::Hnla => FamilySpec::Hnla { n: get("n")?, l: get("l")?, a: get("a")? },
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Named parameters of this spec.
    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        let vals: Vec<usize> = match *self {
            FamilySpec::S { n, h } | FamilySpec::Splus { n, h } => vec![n, h],
            FamilySpec::L { t, h } => vec![t, h],
            FamilySpec::Lgen { t1, t2, h } | FamilySpec::Fglue { t1, t2, h } | FamilySpec::Tglue { t1, t2, h } => {
                vec![t1, t2, h]
            }
            FamilySpec::U3 { h } => vec![h],
            FamilySpec::H1 { n } | FamilySpec::H2 { n } | FamilySpec::K2match { n } | FamilySpec::K3match { n } => {
                vec![n]
            }
            FamilySpec::Hnla { n, l, a } => vec![n, l, a],
        };
        self.kind().param_names().iter().copied().zip(vals).collect()
    }

    /// Checks the parameter domain, naming the violated constraint.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let kind = self.kind();
        let fail = |reason: &str| Err(bad(kind, reason.to_string()));
        match *self {
            FamilySpec::S { n, h } if h > n => return fail("h <= n"),
            FamilySpec::Splus { n, h } if h + 2 > n => return fail("n >= h + 2"),
            FamilySpec::L { t, h } if t == 0 || h == 0 => return fail("t >= 1 and h >= 1"),
            FamilySpec::Lgen { t1, t2, h } if t1 + t2 == 0 || h == 0 => return fail("t1 + t2 >= 1 and h >= 1"),
            FamilySpec::Fglue { h, .. } | FamilySpec::Tglue { h, .. } if h < 2 => return fail("h >= 2"),
            FamilySpec::U3 { h: 0 } => return fail("h >= 1"),
            FamilySpec::H1 { n } if n < 7 => return fail("n >= 7"),
            FamilySpec::H2 { n } if n < 8 => return fail("n >= 8"),
            FamilySpec::K2match { n } if n < 2 || n % 2 != 0 => return fail("n even and n >= 2"),
            FamilySpec::K3match { n } if n < 3 || n % 2 != 1 => return fail("n odd and n >= 3"),
            FamilySpec::Hnla { l, a, .. } if 2 * a > l => return fail("a <= floor(l/2)"),
            FamilySpec::Hnla { n, l, a } if l > n + a => return fail("l <= n + a"),
            _ => {}
        }
        let n = self.order();
        if n > MAX_ORDER {
            return Err(FamilyError::Graph(GraphError::UnsupportedOrder(n)));
        }
        Ok(())
    }

    /// Closed-form order.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::S { n, .. } | FamilySpec::Splus { n, .. } => n,
            FamilySpec::L { t, h } => t * h + 1,
            FamilySpec::Lgen { t1, t2, h } => t1 * h + t2 * (h + 1) + 1,
            FamilySpec::Fglue { t1, t2, h } => t1 * h + (t2 + 1) * (h + 1) + 1,
            FamilySpec::Tglue { t1, t2, h } => t1 * h + (t2 + 2) * (h + 1) + 1,
            FamilySpec::U3 { h } => 3 * h + 3,
            FamilySpec::H1 { n } | FamilySpec::H2 { n } | FamilySpec::K2match { n } | FamilySpec::K3match { n } => n,
            FamilySpec::Hnla { n, .. } => n,
        }
    }

    /// Closed-form edge count.
    pub fn edge_count(&self) -> usize {
        match *self {
            FamilySpec::S { n, h } => c2(h) + h * (n - h),
            FamilySpec::Splus { n, h } => c2(h) + h * (n - h) + 1,
            FamilySpec::L { t, h } => t * c2(h + 1),
            FamilySpec::Lgen { t1, t2, h } => t1 * c2(h + 1) + t2 * c2(h + 2),
            FamilySpec::Fglue { t1, t2, h } => t1 * c2(h + 1) + t2 * c2(h + 2) + c2(h + 1) + 1,
            FamilySpec::Tglue { t1, t2, h } => t1 * c2(h + 1) + t2 * c2(h + 2) + 2 * (c2(h + 1) + 1),
            FamilySpec::U3 { h } => 3 * c2(h + 1) + 3,
            FamilySpec::H1 { n } => 2 * n - 4,
            FamilySpec::H2 { n } => 2 * n - 5,
            FamilySpec::K2match { n } => 1 + 2 * (n - 2) + (n - 2) / 2,
            FamilySpec::K3match { n } => 3 + 3 * (n - 3) + (n - 3) / 2,
            FamilySpec::Hnla { n, l, a } => c2(l - a) + a * (n + a - l),
        }
    }

    /// Closed-form minimum degree.
    pub fn min_degree(&self) -> usize {
        match *self {
            FamilySpec::S { n, h } => {
                if n > h {
                    h
                } else {
                    n.saturating_sub(1)
                }
            }
            FamilySpec::Splus { n, h } => {
                if n >= h + 3 {
                    h
                } else {
                    h + 1
                }
            }
            FamilySpec::L { h, .. } => h,
            FamilySpec::Lgen { t1, h, .. } => {
                if t1 > 0 {
                    h
                } else {
                    h + 1
                }
            }
            // With no blocks the center only sees the pendant cliques.
            FamilySpec::Fglue { t1: 0, t2: 0, h } => h.min(1),
            FamilySpec::Tglue { t1: 0, t2: 0, h } => h.min(2),
            FamilySpec::Fglue { h, .. } | FamilySpec::Tglue { h, .. } | FamilySpec::U3 { h } => h,
            FamilySpec::H1 { .. } | FamilySpec::H2 { .. } => 2,
            FamilySpec::K2match { n } => {
                if n >= 4 {
                    3
                } else {
                    1
                }
            }
            FamilySpec::K3match { n } => {
                if n >= 5 {
                    4
                } else {
                    2
                }
            }
            FamilySpec::Hnla { n, l, a } => {
                let mut d = usize::MAX;
                if a > 0 {
                    d = d.min(n - 1);
                }
                if l > 2 * a {
                    d = d.min(l - a - 1);
                }
                if n + a > l {
                    d = d.min(a);
                }
                if d == usize::MAX {
                    0
                } else {
                    d
                }
            }
        }
    }

    /// Builds the graph.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::S { n, h } => s_graph(n, h)?,
            FamilySpec::Splus { n, h } => {
                let mut g = s_graph(n, h)?;
                g.set_edge(h, h + 1);
                g
            }
            FamilySpec::L { t, h } => centered(&vec![h; t], h, 0)?,
            FamilySpec::Lgen { t1, t2, h } => centered(&blocks(t1, t2, h), h, 0)?,
            FamilySpec::Fglue { t1, t2, h } => centered(&blocks(t1, t2, h), h, 1)?,
            FamilySpec::Tglue { t1, t2, h } => centered(&blocks(t1, t2, h), h, 2)?,
            FamilySpec::U3 { h } => {
                let mut g = Graph::empty(3 * h + 3)?;
                g.set_edge(0, 1);
                g.set_edge(1, 2);
                g.set_edge(0, 2);
                for hub in 0..3 {
                    let members: Vec<usize> = std::iter::once(hub).chain((0..h).map(|j| 3 + hub * h + j)).collect();
                    clique_on(&mut g, &members);
                }
                g
            }
            FamilySpec::H1 { n } => {
                let mut g = s_graph(n - 2, 2)?.resized(n);
                clique_on(&mut g, &[0, n - 2, n - 1]);
                g
            }
            FamilySpec::H2 { n } => {
                let mut g = s_graph(n - 4, 2)?.resized(n);
                clique_on(&mut g, &[0, n - 4, n - 3]);
                clique_on(&mut g, &[1, n - 2, n - 1]);
                g
            }
            FamilySpec::K2match { n } => matched_join(2, n)?,
            FamilySpec::K3match { n } => matched_join(3, n)?,
            FamilySpec::Hnla { n, l, a } => {
                let rest = disjoint_union(&[complete(l - 2 * a)?, Graph::empty(n + a - l)?])?;
                join(&complete(a)?, &rest)?
            }
        };
        debug_assert_eq!(g.order(), self.order());
        Ok(g)
    }

    /// Vertices singled out by the construction: hubs for `S`-like families,
    /// the center for `L`-like ones, the triangle for `U3`.
    pub fn key_vertices(&self) -> Vec<usize> {
        match *self {
            FamilySpec::S { h, .. } | FamilySpec::Splus { h, .. } => (0..h).collect(),
            FamilySpec::L { .. } | FamilySpec::Lgen { .. } | FamilySpec::Fglue { .. } | FamilySpec::Tglue { .. } => {
                vec![0]
            }
            FamilySpec::U3 { .. } => vec![0, 1, 2],
            FamilySpec::H1 { .. } | FamilySpec::H2 { .. } | FamilySpec::K2match { .. } => vec![0, 1],
            FamilySpec::K3match { .. } => vec![0, 1, 2],
            FamilySpec::Hnla { a, .. } => (0..a).collect(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind())?;
        for (i, (k, v)) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

fn bad(kind: FamilyKind, reason: String) -> FamilyError {
    FamilyError::BadParams { kind, reason }
}

fn s_graph(n: usize, h: usize) -> Result<Graph, GraphError> {
    join(&complete(h)?, &Graph::empty(n - h)?)
}

fn blocks(t1: usize, t2: usize, h: usize) -> Vec<usize> {
    let mut sizes = vec![h; t1];
    sizes.extend(std::iter::repeat(h + 1).take(t2));
    sizes
}

fn clique_on(g: &mut Graph, members: &[usize]) {
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            g.set_edge(u, v);
        }
    }
}

/// Center `0` joined to cliques of the given sizes, then `pendant` cliques of
/// size `h+1` hung from the center by one edge each.
fn centered(sizes: &[usize], h: usize, pendant: usize) -> Result<Graph, GraphError> {
    let n = 1 + sizes.iter().sum::<usize>() + pendant * (h + 1);
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for &s in sizes {
        let members: Vec<usize> = std::iter::once(0).chain(next..next + s).collect();
        clique_on(&mut g, &members);
        next += s;
    }
    for _ in 0..pendant {
        let members: Vec<usize> = (next..next + h + 1).collect();
        clique_on(&mut g, &members);
        g.set_edge(0, next);
        next += h + 1;
    }
    Ok(g)
}

fn matched_join(core: usize, n: usize) -> Result<Graph, GraphError> {
    let pairs = (n - core) / 2;
    let matching = Graph::from_edges(2 * pairs, (0..pairs).map(|i| (2 * i, 2 * i + 1)))?;
    join(&complete(core)?, &matching)
}

/// Generates a family member.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.generate()
}

/// Closed-form `(order, edges)`.
pub fn family_size_formulas(spec: &FamilySpec) -> Result<(usize, usize), FamilyError> {
    spec.validate()?;
    Ok((spec.order(), spec.edge_count()))
}

/// Every parameter tuple of `kind` whose member has order `n`, for a given `h`.
/// For `HNLA`, `h` is read as `a` and `l` ranges over its domain. Families
/// without an `h` parameter ignore it.
pub fn instances_with_order(kind: FamilyKind, n: usize, h: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match kind {
        FamilyKind::S => out.push(FamilySpec::S { n, h }),
        FamilyKind::Splus => out.push(FamilySpec::Splus { n, h }),
        FamilyKind::L => {
            if h > 0 && n > 1 && (n - 1) % h == 0 {
                out.push(FamilySpec::L { t: (n - 1) / h, h });
            }
        }
        FamilyKind::Lgen | FamilyKind::Fglue | FamilyKind::Tglue => {
            let extra = match kind {
                FamilyKind::Lgen => 0,
                FamilyKind::Fglue => 1,
                _ => 2,
            };
            if h > 0 {
                let fixed = 1 + extra * (h + 1);
                if n >= fixed {
                    let rest = n - fixed;
                    for t2 in 0..=rest / (h + 1) {
                        let r = rest - t2 * (h + 1);
                        if r % h == 0 {
                            let t1 = r / h;
                            let spec = match kind {
                                FamilyKind::Lgen => FamilySpec::Lgen { t1, t2, h },
                                FamilyKind::Fglue => FamilySpec::Fglue { t1, t2, h },
                                _ => FamilySpec::Tglue { t1, t2, h },
                            };
                            out.push(spec);
                        }
                    }
                }
            }
        }
        FamilyKind::U3 => {
            if h > 0 && n == 3 * h + 3 {
                out.push(FamilySpec::U3 { h });
            }
        }
        FamilyKind::H1 => out.push(FamilySpec::H1 { n }),
        FamilyKind::H2 => out.push(FamilySpec::H2 { n }),
        FamilyKind::K2match => out.push(FamilySpec::K2match { n }),
        FamilyKind::K3match => out.push(FamilySpec::K3match { n }),
        FamilyKind::Hnla => {
            for l in 2 * h..=n + h {
                out.push(FamilySpec::Hnla { n, l, a: h });
            }
        }
    }
    out.retain(|s| s.validate().is_ok());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(FamilySpec::S { n: 7, h: 2 }.generate().unwrap().edge_count(), 11);
        assert_eq!(FamilySpec::Splus { n: 7, h: 2 }.generate().unwrap().edge_count(), 12);
        let net = FamilySpec::U3 { h: 1 }.generate().unwrap();
        assert_eq!((net.order(), net.edge_count()), (6, 6));
        let t = FamilySpec::Tglue { t1: 1, t2: 1, h: 2 }.generate().unwrap();
        assert_eq!((t.order(), t.edge_count()), (12, 17));
        assert_eq!(FamilySpec::Hnla { n: 7, l: 6, a: 2 }.generate().unwrap().edge_count(), 12);
        assert_eq!(family_size_formulas(&FamilySpec::L { t: 3, h: 2 }).unwrap(), (7, 9));
        assert_eq!(family_size_formulas(&FamilySpec::S { n: 4, h: 4 }).unwrap(), (4, 6));
    }

    #[test]
    fn bad_params_name_the_constraint() {
        let e = FamilySpec::H1 { n: 6 }.generate().unwrap_err();
        assert!(e.to_string().contains("n >= 7"), "{e}");
        assert!(FamilySpec::K2match { n: 7 }.generate().is_err());
        assert!(FamilySpec::Fglue { t1: 1, t2: 0, h: 1 }.generate().is_err());
    }

    #[test]
    fn parse_kind_and_params() {
        assert_eq!("s+".parse::<FamilyKind>().unwrap(), FamilyKind::Splus);
        assert!("s!".parse::<FamilyKind>().is_err());
        assert_eq!("splus".parse::<FamilyKind>().unwrap(), FamilyKind::Splus);
        assert_eq!("K2Match".parse::<FamilyKind>().unwrap(), FamilyKind::K2match);
        let params: BTreeMap<String, usize> = [("n".to_string(), 7), ("h".to_string(), 2)].into();
        assert_eq!(FamilySpec::from_params(FamilyKind::S, &params).unwrap(), FamilySpec::S { n: 7, h: 2 });
        assert!(FamilySpec::from_params(FamilyKind::L, &params).is_err());
    }

    #[test]
    fn instances_by_order() {
        assert_eq!(instances_with_order(FamilyKind::L, 7, 2), vec![FamilySpec::L { t: 3, h: 2 }]);
        assert_eq!(instances_with_order(FamilyKind::Lgen, 8, 2), vec![FamilySpec::Lgen { t1: 2, t2: 1, h: 2 }]);
        assert_eq!(
            instances_with_order(FamilyKind::Lgen, 7, 2),
            vec![FamilySpec::Lgen { t1: 3, t2: 0, h: 2 }, FamilySpec::Lgen { t1: 0, t2: 2, h: 2 }]
        );
    }
}
