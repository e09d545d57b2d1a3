//! DP-coloring (correspondence coloring): cover instances, proper-coloring
//! checks, coloring synthesis by certificate replay, and the brute-force
//! colorability oracle that anchors the small-scale sweeps.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::weak::{verify_certificate, Certificate, Operation, VerifyError};

/// A DP-coloring instance: a color list per vertex and a partial matching
/// per edge. Matchings are stored once per edge, keyed by the lower endpoint,
/// as pairs `(color at key vertex, color at other endpoint)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    lists: Vec<Vec<u32>>,
    matchings: BTreeMap<(u32, u32), Vec<(u32, u32)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    WrongListCount { expected: usize, got: usize },
    MatchingOnNonEdge { u: u32, v: u32 },
    MatchedColorOutsideList { vertex: u32, color: u32 },
    /// A color appears in two pairs of the same matching.
    NotInjective { u: u32, v: u32 },
    ColorOutsideList { vertex: u32, color: u32 },
    WrongColoringLength { expected: usize, got: usize },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::WrongListCount { expected, got } => {
                write!(f, "{got} lists for a graph on {expected} vertices")
            }
            CoverError::MatchingOnNonEdge { u, v } => write!(f, "matching on non-edge ({u},{v})"),
            CoverError::MatchedColorOutsideList { vertex, color } => {
                write!(f, "matched color {color} not in the list of vertex {vertex}")
            }
            CoverError::NotInjective { u, v } => {
                write!(f, "matching on ({u},{v}) is not a partial injection")
            }
            CoverError::ColorOutsideList { vertex, color } => {
                write!(f, "color {color} outside the list of vertex {vertex}")
            }
            CoverError::WrongColoringLength { expected, got } => {
                write!(f, "coloring has {got} entries for {expected} vertices")
            }
        }
    }
}

impl core::error::Error for CoverError {}

impl Cover {
    /// Builds a validated cover. `matchings` maps edges (in either endpoint
    /// order) to pairs `(color at first named endpoint, color at second)`.
    pub fn new(
        g: &Graph,
        lists: Vec<Vec<u32>>,
        matchings: &[((u32, u32), Vec<(u32, u32)>)],
    ) -> Result<Cover, CoverError> {
        if lists.len() != g.n() {
            return Err(CoverError::WrongListCount { expected: g.n(), got: lists.len() });
        }
        let mut lists = lists;
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        let mut canon: BTreeMap<(u32, u32), Vec<(u32, u32)>> = BTreeMap::new();
        for ((a, b), pairs) in matchings {
            let (a, b) = (*a, *b);
            if !g.has_edge(a, b) {
                return Err(CoverError::MatchingOnNonEdge { u: a, v: b });
            }
            let key = (a.min(b), a.max(b));
            let oriented: Vec<(u32, u32)> = if a < b {
                pairs.clone()
            } else {
                pairs.iter().map(|&(x, y)| (y, x)).collect()
            };
            for &(ca, cb) in &oriented {
                if lists[key.0 as usize].binary_search(&ca).is_err() {
                    return Err(CoverError::MatchedColorOutsideList { vertex: key.0, color: ca });
                }
                if lists[key.1 as usize].binary_search(&cb).is_err() {
                    return Err(CoverError::MatchedColorOutsideList { vertex: key.1, color: cb });
                }
            }
            let mut left: Vec<u32> = oriented.iter().map(|p| p.0).collect();
            let mut right: Vec<u32> = oriented.iter().map(|p| p.1).collect();
            left.sort_unstable();
            right.sort_unstable();
            if left.windows(2).any(|w| w[0] == w[1]) || right.windows(2).any(|w| w[0] == w[1]) {
                return Err(CoverError::NotInjective { u: key.0, v: key.1 });
            }
            let mut sorted = oriented;
            sorted.sort_unstable();
            canon.insert(key, sorted);
        }
        Ok(Cover { lists, matchings: canon })
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn matchings(&self) -> &BTreeMap<(u32, u32), Vec<(u32, u32)>> {
        &self.matchings
    }

    /// The color of `v` corresponding to `(u, color_u)` across edge `uv`.
    pub fn correspondent(&self, u: u32, color_u: u32, v: u32) -> Option<u32> {
        let key = (u.min(v), u.max(v));
        let pairs = self.matchings.get(&key)?;
        if u < v {
            pairs.iter().find(|p| p.0 == color_u).map(|p| p.1)
        } else {
            pairs.iter().find(|p| p.1 == color_u).map(|p| p.0)
        }
    }
}

/// The list-coloring cover: identity matchings on list intersections.
pub fn list_cover(g: &Graph, lists: Vec<Vec<u32>>) -> Result<Cover, CoverError> {
    let mut matchings = Vec::new();
    for (u, v) in g.edges() {
        let lu = &lists[u as usize];
        let lv = &lists[v as usize];
        let pairs: Vec<(u32, u32)> =
            lu.iter().filter(|c| lv.contains(c)).map(|&c| (c, c)).collect();
        matchings.push(((u, v), pairs));
    }
    Cover::new(g, lists, &matchings)
}

/// Checks both conditions of a proper cover coloring. A color outside its
/// vertex's list is a structural error, distinct from "improper".
pub fn is_proper(g: &Graph, cover: &Cover, phi: &[u32]) -> Result<bool, CoverError> {
    if phi.len() != g.n() {
        return Err(CoverError::WrongColoringLength { expected: g.n(), got: phi.len() });
    }
    for v in g.vertices() {
        if cover.lists[v as usize].binary_search(&phi[v as usize]).is_err() {
            return Err(CoverError::ColorOutsideList { vertex: v, color: phi[v as usize] });
        }
    }
    for (u, v) in g.edges() {
        if cover.correspondent(u, phi[u as usize], v) == Some(phi[v as usize]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColorSynthesisError {
    InvalidCertificate(VerifyError),
    /// `|L(u)| >= f(u) + 1` fails at `vertex`.
    ListTooSmall { vertex: u32 },
    Cover(CoverError),
    /// The list-size invariant broke during replay; indicates a bug rather
    /// than bad input.
    InvariantViolated { vertex: u32 },
}

impl fmt::Display for ColorSynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorSynthesisError::InvalidCertificate(e) => write!(f, "certificate invalid: {e}"),
            ColorSynthesisError::ListTooSmall { vertex } => {
                write!(f, "list of vertex {vertex} smaller than f + 1")
            }
            ColorSynthesisError::Cover(e) => write!(f, "{e}"),
            ColorSynthesisError::InvariantViolated { vertex } => {
                write!(f, "list-size invariant failed at vertex {vertex}")
            }
        }
    }
}

impl core::error::Error for ColorSynthesisError {}

/// Synthesizes a proper cover coloring by replaying a certificate.
///
/// Deleted vertices take their lowest available color. A saved step whose
/// target's list is already larger than its weight plus one also takes the
/// lowest color; otherwise the remover takes its lowest color with no
/// correspondent in the target's list, which the counting invariant
/// guarantees to exist. After each assignment, corresponding colors are
/// pruned from the lists of uncolored neighbors.
pub fn color_from_certificate(
    g: &Graph,
    cover: &Cover,
    cert: &Certificate,
) -> Result<Vec<u32>, ColorSynthesisError> {
    verify_certificate(g, cert).map_err(ColorSynthesisError::InvalidCertificate)?;
    for v in g.vertices() {
        if (cover.lists[v as usize].len() as i64) < cert.initial_f[v as usize] as i64 + 1 {
            return Err(ColorSynthesisError::ListTooSmall { vertex: v });
        }
    }
    let n = g.n();
    let mut lists = cover.lists.clone();
    let mut weights = cert.initial_f.clone();
    let mut remaining: Vec<bool> = vec![true; n];
    let mut phi = vec![0u32; n];
    for &op in &cert.ops {
        let u = op.removed();
        let alpha = match op {
            Operation::Delete { .. } => lists[u as usize].first().copied(),
            Operation::DelSave { u, w } => {
                if lists[w as usize].len() as i64 > weights[w as usize] as i64 + 1 {
                    lists[u as usize].first().copied()
                } else {
                    lists[u as usize]
                        .iter()
                        .copied()
                        .find(|&c| match cover.correspondent(u, c, w) {
                            Some(cw) => lists[w as usize].binary_search(&cw).is_err(),
                            None => true,
                        })
                }
            }
        };
        let alpha = alpha.ok_or(ColorSynthesisError::InvariantViolated { vertex: u })?;
        phi[u as usize] = alpha;
        remaining[u as usize] = false;
        for &x in g.neighbors(u) {
            if remaining[x as usize] {
                if let Some(cx) = cover.correspondent(u, alpha, x) {
                    if let Ok(pos) = lists[x as usize].binary_search(&cx) {
                        lists[x as usize].remove(pos);
                    }
                }
            }
        }
        // Replay the weights and re-check the counting invariant.
        for &x in g.neighbors(u) {
            if remaining[x as usize] && op.save_target() != Some(x) {
                weights[x as usize] -= 1;
            }
        }
        for x in 0..n {
            if remaining[x] && (lists[x].len() as i64) < weights[x] as i64 + 1 {
                return Err(ColorSynthesisError::InvariantViolated { vertex: x as u32 });
            }
        }
    }
    debug_assert_eq!(is_proper(g, cover, &phi), Ok(true));
    Ok(phi)
}

/// Permutations of `0..k` for `k <= 4`, in lexicographic order.
fn permutations(k: usize) -> Vec<[u8; 4]> {
    assert!((1..=4).contains(&k));
    let mut out = Vec::new();
    let mut items: Vec<u8> = (0..k as u8).collect();
    loop {
        let mut p = [0u8; 4];
        p[..k].copy_from_slice(&items);
        out.push(p);
        // Next lexicographic permutation.
        let Some(i) = (0..k - 1).rev().find(|&i| items[i] < items[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
    out
}

/// The space of uniform-list perfect-matching covers, quotiented by
/// per-vertex color renaming: matchings on a spanning forest are fixed to
/// the identity, the remaining edges range over all `k!` permutations.
/// Renaming the colors in one vertex's list transports proper colorings
/// bijectively, so colorability verdicts over this space agree with the full
/// enumeration.
#[derive(Debug, Clone)]
pub struct PermCoverSpace {
    k: usize,
    edges: Vec<(u32, u32)>,
    free: Vec<usize>,
    perms: Vec<[u8; 4]>,
}

impl PermCoverSpace {
    pub fn new(g: &Graph, k: usize) -> PermCoverSpace {
        let edges: Vec<(u32, u32)> = g.edges().collect();
        // BFS forest; tree edges keep the identity matching.
        let mut seen = vec![false; g.n()];
        let mut tree = vec![false; edges.len()];
        let mut index_of = BTreeMap::new();
        for (i, &e) in edges.iter().enumerate() {
            index_of.insert(e, i);
        }
        for root in 0..g.n() as u32 {
            if seen[root as usize] {
                continue;
            }
            seen[root as usize] = true;
            let mut queue = alloc::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        tree[index_of[&(u.min(v), u.max(v))]] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        let free = (0..edges.len()).filter(|&i| !tree[i]).collect();
        PermCoverSpace { k, edges, free, perms: permutations(k) }
    }

    /// Number of covers in the quotient: `(k!)^(free edges)`.
    pub fn count(&self) -> u128 {
        let kfact = self.perms.len() as u128;
        let mut c = 1u128;
        for _ in &self.free {
            c = c.saturating_mul(kfact);
        }
        c
    }

    /// Permutation choice per edge for the cover at `index` (mixed radix,
    /// identity on tree edges).
    pub fn assignment_at(&self, index: u128) -> Vec<u16> {
        let kfact = self.perms.len() as u128;
        let mut rest = index;
        let mut choice = vec![0u16; self.edges.len()];
        for &e in &self.free {
            choice[e] = (rest % kfact) as u16;
            rest /= kfact;
        }
        choice
    }

    /// Is the cover at `index` properly colorable? Backtracking over
    /// vertices in id order.
    pub fn colorable_at(&self, n: usize, index: u128) -> bool {
        let choice = self.assignment_at(index);
        // Per vertex: earlier neighbors with the edge's permutation and
        // whether that neighbor is the lower endpoint (permutations map
        // lower-endpoint colors to higher-endpoint colors).
        let mut back: Vec<Vec<(u32, [u8; 4], bool)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let p = self.perms[choice[i] as usize];
            // u < v by construction.
            back[v as usize].push((u, p, true));
        }
        self.backtrack(&back, &mut vec![0u8; n], 0)
    }

    fn backtrack(&self, back: &[Vec<(u32, [u8; 4], bool)>], phi: &mut Vec<u8>, v: usize) -> bool {
        if v == back.len() {
            return true;
        }
        'colors: for c in 0..self.k as u8 {
            for &(u, p, other_is_lower) in &back[v] {
                let conflict = if other_is_lower {
                    c == p[phi[u as usize] as usize]
                } else {
                    phi[u as usize] == p[c as usize]
                };
                if conflict {
                    continue 'colors;
                }
            }
            phi[v] = c;
            if self.backtrack(back, phi, v + 1) {
                return true;
            }
        }
        false
    }

    /// Materializes the cover at `index` with uniform lists `0..k`.
    pub fn cover_at(&self, g: &Graph, index: u128) -> Cover {
        let choice = self.assignment_at(index);
        let lists: Vec<Vec<u32>> = vec![(0..self.k as u32).collect(); g.n()];
        let matchings: Vec<((u32, u32), Vec<(u32, u32)>)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let p = self.perms[choice[i] as usize];
                let pairs = (0..self.k).map(|c| (c as u32, p[c] as u32)).collect();
                ((u, v), pairs)
            })
            .collect();
        Cover::new(g, lists, &matchings).expect("generated cover is valid")
    }
}

/// Guards for the brute-force oracle; the binding limit is the cover count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_colors: usize,
    pub max_covers: u128,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: 8, max_colors: 4, max_covers: 200_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooManyVertices { n: usize, limit: usize },
    TooManyColors { k: usize, limit: usize },
    TooManyCovers { count: u128, limit: u128 },
    /// No `k <= max_colors` works.
    ChromaticAboveGuard { limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooManyVertices { n, limit } => {
                write!(f, "oracle capped at {limit} vertices, got {n}")
            }
            OracleError::TooManyColors { k, limit } => {
                write!(f, "oracle capped at {limit} colors, got {k}")
            }
            OracleError::TooManyCovers { count, limit } => {
                write!(f, "cover space of size {count} exceeds the {limit} budget")
            }
            OracleError::ChromaticAboveGuard { limit } => {
                write!(f, "DP-chromatic number exceeds the guard {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Oracle verdict: `true` iff every cover with uniform lists `{0..k}` and a
/// perfect matching per edge admits a proper coloring. On `false`, carries a
/// witness cover (the first uncolorable one in enumeration order).
#[derive(Debug, Clone)]
pub struct OracleVerdict {
    pub colorable: bool,
    pub witness: Option<Cover>,
}

pub fn brute_force_dp_colorable(
    g: &Graph,
    k: usize,
    limits: &OracleLimits,
) -> Result<OracleVerdict, OracleError> {
    if g.n() > limits.max_vertices {
        return Err(OracleError::TooManyVertices { n: g.n(), limit: limits.max_vertices });
    }
    if k > limits.max_colors || k == 0 {
        return Err(OracleError::TooManyColors { k, limit: limits.max_colors });
    }
    let space = PermCoverSpace::new(g, k);
    let count = space.count();
    if count > limits.max_covers {
        return Err(OracleError::TooManyCovers { count, limit: limits.max_covers });
    }
    for index in 0..count {
        if !space.colorable_at(g.n(), index) {
            return Ok(OracleVerdict { colorable: false, witness: Some(space.cover_at(g, index)) });
        }
    }
    Ok(OracleVerdict { colorable: true, witness: None })
}

/// Least `k` such that every perfect-matching cover with `k`-lists is
/// colorable.
pub fn dp_chromatic_exact(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    for k in 1..=limits.max_colors {
        if brute_force_dp_colorable(g, k, limits)?.colorable {
            return Ok(k);
        }
    }
    Err(OracleError::ChromaticAboveGuard { limit: limits.max_colors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::{const_weights, is_weakly_f_degenerate, SolverLimits};

    fn edge() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn is_proper_examples() {
        let g = edge();
        let cover = Cover::new(
            &g,
            vec![vec![1, 2], vec![1, 2]],
            &[((0, 1), vec![(1, 1), (2, 2)])],
        )
        .unwrap();
        assert_eq!(is_proper(&g, &cover, &[1, 2]), Ok(true));
        assert_eq!(is_proper(&g, &cover, &[1, 1]), Ok(false));
        let empty = Cover::new(&g, vec![vec![1], vec![1]], &[((0, 1), vec![])]).unwrap();
        assert_eq!(is_proper(&g, &empty, &[1, 1]), Ok(true));
        assert_eq!(
            is_proper(&g, &cover, &[3, 1]),
            Err(CoverError::ColorOutsideList { vertex: 0, color: 3 })
        );
    }

    #[test]
    fn list_cover_examples() {
        let g = edge();
        let c = list_cover(&g, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(c.matchings()[&(0, 1)], vec![(2, 2)]);
        let c = list_cover(&g, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(c.matchings()[&(0, 1)].is_empty());
        let c = list_cover(&g, vec![vec![1, 2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(c.matchings()[&(0, 1)].len(), 3);
    }

    #[test]
    fn cover_validation() {
        let g = edge();
        assert_eq!(
            Cover::new(&g, vec![vec![1], vec![1]], &[((0, 1), vec![(1, 1), (1, 1)])]),
            Err(CoverError::NotInjective { u: 0, v: 1 })
        );
        assert_eq!(
            Cover::new(&g, vec![vec![1], vec![1]], &[((0, 1), vec![(2, 1)])]),
            Err(CoverError::MatchedColorOutsideList { vertex: 0, color: 2 })
        );
    }

    #[test]
    fn color_c4_from_certificate() {
        let g = Graph::cycle(4);
        let cert = is_weakly_f_degenerate(&g, &const_weights(4, 2), None, &SolverLimits::default())
            .unwrap()
            .unwrap();
        let cover = list_cover(&g, vec![vec![1, 2, 3]; 4]).unwrap();
        let phi = color_from_certificate(&g, &cover, &cert).unwrap();
        assert_eq!(is_proper(&g, &cover, &phi), Ok(true));
    }

    #[test]
    fn color_edgeless_singletons() {
        let g = Graph::empty(3);
        let cert = Certificate {
            initial_f: vec![0, 0, 0],
            ops: (0..3).map(|u| Operation::Delete { u }).collect(),
            safe_set: None,
        };
        let cover = list_cover(&g, vec![vec![7], vec![8], vec![9]]).unwrap();
        let phi = color_from_certificate(&g, &cover, &cert).unwrap();
        assert_eq!(phi, vec![7, 8, 9]);
    }

    #[test]
    fn color_p3_exercises_save_branch() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let cert = Certificate {
            initial_f: vec![1, 1, 1],
            ops: vec![
                Operation::Delete { u: 0 },
                Operation::DelSave { u: 2, w: 1 },
                Operation::Delete { u: 1 },
            ],
            safe_set: None,
        };
        let cover = list_cover(&g, vec![vec![1, 2]; 3]).unwrap();
        let phi = color_from_certificate(&g, &cover, &cert).unwrap();
        assert_eq!(is_proper(&g, &cover, &phi), Ok(true));
    }

    #[test]
    fn list_too_small_rejected() {
        let g = edge();
        let cert = Certificate {
            initial_f: vec![1, 0],
            ops: vec![Operation::Delete { u: 1 }, Operation::Delete { u: 0 }],
            safe_set: None,
        };
        let cover = list_cover(&g, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(
            color_from_certificate(&g, &cover, &cert),
            Err(ColorSynthesisError::ListTooSmall { vertex: 0 })
        );
    }

    #[test]
    fn oracle_cycles() {
        let limits = OracleLimits::default();
        for n in 3..=6 {
            let g = Graph::cycle(n);
            assert!(brute_force_dp_colorable(&g, 3, &limits).unwrap().colorable, "C{n} at k=3");
            let v = brute_force_dp_colorable(&g, 2, &limits).unwrap();
            assert!(!v.colorable, "C{n} at k=2");
            let witness = v.witness.unwrap();
            // The witness really is uncolorable: exhaust all colorings.
            let lists = witness.lists().to_vec();
            let mut found = false;
            let mut phi = vec![0u32; n];
            fn go(
                g: &Graph,
                c: &Cover,
                lists: &[Vec<u32>],
                phi: &mut Vec<u32>,
                v: usize,
                found: &mut bool,
            ) {
                if *found {
                    return;
                }
                if v == g.n() {
                    if is_proper(g, c, phi) == Ok(true) {
                        *found = true;
                    }
                    return;
                }
                for &col in &lists[v] {
                    phi[v] = col;
                    go(g, c, lists, phi, v + 1, found);
                }
            }
            go(&g, &witness, &lists, &mut phi, 0, &mut found);
            assert!(!found, "witness cover for C{n} must be uncolorable");
        }
    }

    #[test]
    fn oracle_cliques() {
        let limits = OracleLimits::default();
        assert!(brute_force_dp_colorable(&Graph::complete(4), 4, &limits).unwrap().colorable);
        assert!(!brute_force_dp_colorable(&Graph::complete(4), 3, &limits).unwrap().colorable);
    }

    #[test]
    fn dp_chromatic_examples() {
        let limits = OracleLimits::default();
        assert_eq!(dp_chromatic_exact(&Graph::cycle(4), &limits).unwrap(), 3);
        assert_eq!(dp_chromatic_exact(&Graph::complete(3), &limits).unwrap(), 3);
        assert_eq!(dp_chromatic_exact(&Graph::empty(4), &limits).unwrap(), 1);
        // K6 trips a guard either way: the k=4 cover space is over budget.
        assert!(dp_chromatic_exact(&Graph::complete(6), &limits).is_err());
        let tight = OracleLimits { max_colors: 2, ..limits };
        assert!(matches!(
            dp_chromatic_exact(&Graph::cycle(5), &tight),
            Err(OracleError::ChromaticAboveGuard { limit: 2 })
        ));
    }

    #[test]
    fn quotient_agrees_with_full_enumeration() {
        // On every graph with n <= 4, enumerating matchings on all edges
        // (not just non-tree ones) gives the same verdict for k = 2.
        let limits = OracleLimits::default();
        for g in crate::catalog::all_graphs(4) {
            let quotient = brute_force_dp_colorable(&g, 2, &limits).unwrap().colorable;
            let space = PermCoverSpace::new(&g, 2);
            let m = g.m() as u32;
            let mut full = true;
            'outer: for mask in 0u32..1 << m {
                // Build an assignment directly: bit i twists edge i.
                let mut phi_space = space.clone();
                phi_space.free = (0..g.m()).collect();
                let idx = (0..m).fold(0u128, |acc, i| acc + (((mask >> i & 1) as u128) << i));
                // Mixed radix with k! = 2 digits equals binary.
                if !phi_space.colorable_at(g.n(), idx) {
                    full = false;
                    break 'outer;
                }
            }
            assert_eq!(quotient, full, "graph {g:?}");
        }
    }

    #[test]
    fn extending_matchings_only_removes_colorings() {
        // Monotonicity behind the perfect-matching restriction: adding pairs
        // to a matching can only shrink the set of proper colorings.
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=5);
            let g = crate::gen::gnp(n, 0.6, &mut rng);
            let k = 2u32;
            let lists: Vec<Vec<u32>> = vec![(0..k).collect(); n];
            // Random partial matchings, then a random extension.
            let mut partial = Vec::new();
            let mut extended = Vec::new();
            for (u, v) in g.edges() {
                let pairs: Vec<(u32, u32)> = if rng.gen_bool(0.5) {
                    vec![]
                } else {
                    let c = rng.gen_range(0..k);
                    let d = rng.gen_range(0..k);
                    vec![(c, d)]
                };
                let mut ext = pairs.clone();
                if ext.is_empty() {
                    let twist = rng.gen_bool(0.5) as u32;
                    ext = (0..k).map(|c| (c, (c + twist) % k)).collect();
                } else {
                    let (c, d) = ext[0];
                    ext.push((1 - c, 1 - d));
                }
                partial.push(((u, v), pairs));
                extended.push(((u, v), ext));
            }
            let cp = Cover::new(&g, lists.clone(), &partial).unwrap();
            let ce = Cover::new(&g, lists.clone(), &extended).unwrap();
            // Every coloring proper for the extension is proper for the
            // partial cover.
            let mut phi = vec![0u32; n];
            loop {
                let proper_ext = is_proper(&g, &ce, &phi).unwrap();
                let proper_part = is_proper(&g, &cp, &phi).unwrap();
                assert!(!proper_ext || proper_part, "extension gained a coloring");
                // Next assignment in base k.
                let mut i = 0;
                while i < n {
                    phi[i] += 1;
                    if phi[i] < k {
                        break;
                    }
                    phi[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }
}
