//! Structural recognition and closed-form bounds: GDP/Gallai trees, the
//! regular and triangle-free lower bounds, the clique-or-dense dichotomy for
//! weak degeneracy at least 3, and minimality checking.

use core::fmt;

use crate::graph::{blocks, has_clique, Graph, VertexSet};
use crate::mad::{max_average_degree, MadError, Rational};
use crate::weak::{is_weakly_f_degenerate, weak_degeneracy_exact, SolverError, SolverLimits};

/// What a cut-vertex-free block is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Complete on its vertex set (single vertices and single edges count).
    Clique,
    Cycle { len: usize },
}

/// Classifies a connected cut-vertex-free graph, or `None` when it is
/// neither a clique nor a cycle.
pub fn block_kind(b: &Graph) -> Option<BlockKind> {
    let n = b.n();
    if b.m() == n * (n - 1) / 2 {
        return Some(BlockKind::Clique);
    }
    if n >= 3 && b.vertices().all(|v| b.degree(v) == 2) && b.is_connected() {
        return Some(BlockKind::Cycle { len: n });
    }
    None
}

/// Verdict of GDP/Gallai-tree recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureVerdict {
    pub is_gdp_tree: bool,
    pub is_gallai_tree: bool,
    /// A block that is neither clique nor cycle, when one exists.
    pub offending_block: Option<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureError {
    Disconnected,
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph must be connected")
    }
}

impl core::error::Error for StructureError {}

/// Is every block a clique or a cycle (GDP tree), resp. a clique or an odd
/// cycle (Gallai tree)?
pub fn is_gdp_tree(g: &Graph) -> Result<StructureVerdict, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let (bl, _) = blocks(g);
    let mut gdp = true;
    let mut gallai = true;
    let mut offending = None;
    for b in &bl {
        let (sub, _) = g.induced(b);
        match block_kind(&sub) {
            Some(BlockKind::Clique) => {}
            Some(BlockKind::Cycle { len }) => {
                if len % 2 == 0 {
                    gallai = false;
                }
            }
            None => {
                gdp = false;
                gallai = false;
                if offending.is_none() {
                    offending = Some(b.clone());
                }
            }
        }
    }
    Ok(StructureVerdict { is_gdp_tree: gdp, is_gallai_tree: gallai, offending_block: offending })
}

/// Lower bound `d - sqrt(2n)` for d-regular graphs on `n >= 2` vertices.
pub fn lower_bound_regular(d: usize, n: usize) -> f64 {
    assert!(n >= 2);
    d as f64 - libm::sqrt(2.0 * n as f64)
}

/// Strict lower bound `d - sqrt(n) - 1` for triangle-free d-regular graphs
/// on `n >= 4` vertices.
pub fn lower_bound_trianglefree(d: usize, n: usize) -> f64 {
    assert!(n >= 4);
    d as f64 - libm::sqrt(n as f64) - 1.0
}

/// Which disjunct of the clique-or-dense dichotomy holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MadTheoremReport {
    /// Weak degeneracy below 3: the statement is vacuous.
    HypothesisNotMet { wd: usize },
    CliquePresent { wd: usize },
    DenseEnough { wd: usize, mad: Rational, threshold: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    Solver(SolverError),
    Mad(MadError),
    /// Neither disjunct held; a genuine counterexample to the dichotomy.
    DichotomyViolated { wd: usize, mad: Rational, threshold: Rational },
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Solver(e) => write!(f, "{e}"),
            CheckError::Mad(e) => write!(f, "{e}"),
            CheckError::DichotomyViolated { wd, mad, threshold } => write!(
                f,
                "dichotomy violated: wd={wd}, mad={mad} below threshold {threshold}"
            ),
        }
    }
}

impl core::error::Error for CheckError {}

impl From<SolverError> for CheckError {
    fn from(e: SolverError) -> Self {
        CheckError::Solver(e)
    }
}

/// Evaluates the dichotomy: a graph of weak degeneracy `d >= 3` contains a
/// (d+1)-clique or has maximum average degree at least
/// `d + (d-2)/(d^2+2d-2)`. `wd_hint`, when given, skips the exact solve.
pub fn mad_theorem_check(
    g: &Graph,
    wd_hint: Option<usize>,
    limits: &SolverLimits,
) -> Result<MadTheoremReport, CheckError> {
    let wd = match wd_hint {
        Some(d) => d,
        None => weak_degeneracy_exact(g, limits)?.0,
    };
    if wd < 3 {
        return Ok(MadTheoremReport::HypothesisNotMet { wd });
    }
    if has_clique(g, wd + 1) {
        return Ok(MadTheoremReport::CliquePresent { wd });
    }
    let d = wd as i64;
    let threshold = Rational::new(d, 1) + Rational::new(d - 2, d * d + 2 * d - 2);
    let mad = max_average_degree(g).map_err(CheckError::Mad)?;
    if mad >= threshold {
        Ok(MadTheoremReport::DenseEnough { wd, mad, threshold })
    } else {
        Err(CheckError::DichotomyViolated { wd, mad, threshold })
    }
}

/// Report of the minimality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub wd: usize,
    pub minimal: bool,
    /// A one-step deletion keeping the weak degeneracy, when not minimal.
    pub witness: Option<SubgraphStep>,
    /// When minimal and wd >= 3: the degree and GDP-component assertions.
    pub min_degree_ok: Option<bool>,
    pub degree_tight_components_gdp: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphStep {
    DeleteVertex(u32),
    DeleteEdge(u32, u32),
}

/// Is `g` minimal of its weak degeneracy (every proper subgraph has smaller
/// weak degeneracy)? One-step deletions suffice: weak degeneracy is monotone
/// under subgraphs, and every proper subgraph sits inside some `G - e` or
/// `G - v`. When minimal with wd >= 3, the minimum-degree and tight-degree
/// component structure are checked as well.
pub fn minimality_check(g: &Graph, limits: &SolverLimits) -> Result<MinimalityReport, SolverError> {
    let (wd, _) = weak_degeneracy_exact(g, limits)?;
    let not_below = |h: &Graph| -> Result<bool, SolverError> {
        if wd == 0 {
            // Every graph is weakly 0-degenerate only when edgeless; a
            // nonempty subgraph of an edgeless graph still has wd 0.
            return Ok(h.n() > 0);
        }
        let f = crate::weak::const_weights(h.n(), wd as i32 - 1);
        Ok(is_weakly_f_degenerate(h, &f, None, limits)?.is_none())
    };

    let mut witness = None;
    for v in g.vertices() {
        let mut rest = VertexSet::full(g.n());
        rest.remove(v);
        let (h, _) = g.induced(&rest);
        if not_below(&h)? {
            witness = Some(SubgraphStep::DeleteVertex(v));
            break;
        }
    }
    if witness.is_none() {
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v);
            if not_below(&h)? {
                witness = Some(SubgraphStep::DeleteEdge(u, v));
                break;
            }
        }
    }
    let minimal = witness.is_none();
    let (mut min_degree_ok, mut tight_gdp) = (None, None);
    if minimal && wd >= 3 {
        min_degree_ok = Some(g.vertices().all(|v| g.degree(v) >= wd));
        let tight = VertexSet::from_iter(g.n(), g.vertices().filter(|&v| g.degree(v) == wd));
        let (sub, _) = g.induced(&tight);
        let ok = sub.components().iter().all(|comp| {
            let (c, _) = sub.induced(comp);
            is_gdp_tree(&c).map(|v| v.is_gdp_tree).unwrap_or(false)
        });
        tight_gdp = Some(ok);
    }
    Ok(MinimalityReport { wd, minimal, witness, min_degree_ok, degree_tight_components_gdp: tight_gdp })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gdp_verdicts() {
        let v = is_gdp_tree(&Graph::cycle(6)).unwrap();
        assert!(v.is_gdp_tree && !v.is_gallai_tree);

        // K4 with a pendant edge: blocks K4 and K2, both cliques.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let v = is_gdp_tree(&g).unwrap();
        assert!(v.is_gdp_tree && v.is_gallai_tree);

        // K4 minus an edge: a single block that is neither.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let v = is_gdp_tree(&g).unwrap();
        assert!(!v.is_gdp_tree && !v.is_gallai_tree);
        assert_eq!(v.offending_block.unwrap().len(), 4);

        assert!(is_gdp_tree(&Graph::empty(1)).unwrap().is_gdp_tree);
        assert_eq!(
            is_gdp_tree(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
            Err(StructureError::Disconnected)
        );
    }

    #[test]
    fn odd_cycles_are_gallai() {
        let v = is_gdp_tree(&Graph::cycle(5)).unwrap();
        assert!(v.is_gdp_tree && v.is_gallai_tree);
    }

    #[test]
    fn bound_arithmetic() {
        assert!((lower_bound_regular(8, 8) - 4.0).abs() < 1e-12);
        assert!((lower_bound_regular(3, 200) - (3.0 - 20.0)).abs() < 1e-12);
        // The K_{d,d} specialization with d = 8, n = 16: 8 - 4 - 1 = 3.
        assert!((lower_bound_trianglefree(8, 16) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn mad_check_k4() {
        let r = mad_theorem_check(&Graph::complete(4), None, &SolverLimits::default()).unwrap();
        assert_eq!(r, MadTheoremReport::CliquePresent { wd: 3 });
    }

    #[test]
    fn mad_check_vacuous_on_c5() {
        let r = mad_theorem_check(&Graph::cycle(5), None, &SolverLimits::default()).unwrap();
        assert_eq!(r, MadTheoremReport::HypothesisNotMet { wd: 2 });
    }

    #[test]
    fn minimality_examples() {
        let limits = SolverLimits::default();
        let r = minimality_check(&Graph::complete(4), &limits).unwrap();
        assert_eq!(r.wd, 3);
        assert!(r.minimal);
        assert_eq!(r.min_degree_ok, Some(true));
        assert_eq!(r.degree_tight_components_gdp, Some(true));

        // Adding an isolated vertex spoils minimality.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = minimality_check(&g, &limits).unwrap();
        assert!(!r.minimal);
        assert_eq!(r.witness, Some(SubgraphStep::DeleteVertex(4)));

        let r = minimality_check(&Graph::cycle(4), &limits).unwrap();
        assert_eq!(r.wd, 2);
        assert!(r.minimal);
    }
}
