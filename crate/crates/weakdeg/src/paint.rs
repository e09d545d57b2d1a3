//! The on-line DP-painting game.
//!
//! Each round, Lister reveals per-vertex color lists and per-edge matchings
//! over the uncolored part; Painter irrevocably colors a subset respecting
//! lists and matchings. Lister wins once some uncolored vertex has seen list
//! sizes summing to its budget. Painter's strategy keeps a weak-degeneracy
//! certificate for the running weights `f - (list sizes seen)`: the split
//! `|L| - 1` / `f - |L|` is partitioned off, the first part gets colored via
//! certificate replay, and the second part's certificate carries into the
//! next round.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dp::{is_proper, Cover, CoverError};
use crate::graph::{Graph, VertexSet};
use crate::weak::{verify_certificate, Certificate, PartitionError, VerifyError};

/// Game position at the start of a round.
#[derive(Debug, Clone)]
pub struct GameState {
    /// Uncolored vertices (original ids).
    pub alive: VertexSet,
    /// Sum of list sizes each vertex has seen.
    pub seen: Vec<u32>,
    /// The loss budgets (one above the certified weights).
    pub budget: Vec<i32>,
    pub round: usize,
}

/// One Lister move: lists over alive vertices, matchings over alive edges.
/// Colors are meaningful only within the round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListerMove {
    pub lists: Vec<Vec<u32>>,
    /// Per-edge pairs `((u, v), matched color pairs)` with `u < v`.
    pub matchings: Vec<((u32, u32), Vec<(u32, u32)>)>,
}

/// Painter's answer: the vertices colored this round and their colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PainterResponse {
    pub colored: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    /// The move names a vertex outside the current graph or a non-edge.
    MalformedMove(CoverError),
    InvalidCertificate(VerifyError),
    Partition(PartitionError),
    Synthesis(crate::dp::ColorSynthesisError),
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::MalformedMove(e) => write!(f, "malformed lister move: {e}"),
            GameError::InvalidCertificate(e) => write!(f, "painter certificate invalid: {e}"),
            GameError::Partition(e) => write!(f, "partition step failed: {e}"),
            GameError::Synthesis(e) => write!(f, "coloring synthesis failed: {e}"),
        }
    }
}

impl core::error::Error for GameError {}

/// One round of Painter's certificate-maintaining strategy.
///
/// `cert` must verify on the subgraph induced by `state.alive` (in induced
/// order) with the running weights. Returns the response together with the
/// next certificate, which verifies on the part Painter left uncolored.
pub fn painter_strategy(
    g: &Graph,
    state: &GameState,
    cert: &Certificate,
    mv: &ListerMove,
) -> Result<(PainterResponse, Certificate), GameError> {
    let (sub, to_orig) = g.induced(&state.alive);
    verify_certificate(&sub, cert).map_err(GameError::InvalidCertificate)?;
    let mut local_lists: Vec<Vec<u32>> = vec![Vec::new(); sub.n()];
    for (local, &orig) in to_orig.iter().enumerate() {
        local_lists[local] = mv.lists.get(orig as usize).cloned().unwrap_or_default();
    }
    let mut new_id = vec![u32::MAX; g.n()];
    for (local, &orig) in to_orig.iter().enumerate() {
        new_id[orig as usize] = local as u32;
    }
    let local_matchings: Vec<((u32, u32), Vec<(u32, u32)>)> = mv
        .matchings
        .iter()
        .map(|&((u, v), ref pairs)| ((new_id[u as usize], new_id[v as usize]), pairs.clone()))
        .collect();
    let cover = Cover::new(&sub, local_lists.clone(), &local_matchings)
        .map_err(GameError::MalformedMove)?;

    // Split the weights: the revealed lists pay for the part colored now.
    let f1: Vec<i32> = (0..sub.n()).map(|v| local_lists[v].len() as i32 - 1).collect();
    let f2: Vec<i32> =
        (0..sub.n()).map(|v| cert.initial_f[v] - local_lists[v].len() as i32).collect();
    let out = crate::weak::partition(&sub, cert, &f1, &f2).map_err(GameError::Partition)?;

    // Color the first part through its certificate.
    let (part_graph, part_to_sub) = sub.induced(&out.part1);
    let mut part_lists: Vec<Vec<u32>> = Vec::with_capacity(part_graph.n());
    for &sv in &part_to_sub {
        part_lists.push(local_lists[sv as usize].clone());
    }
    let mut part_matchings: Vec<((u32, u32), Vec<(u32, u32)>)> = Vec::new();
    let mut sub_to_part = vec![u32::MAX; sub.n()];
    for (pi, &sv) in part_to_sub.iter().enumerate() {
        sub_to_part[sv as usize] = pi as u32;
    }
    for &((lu, lv), ref pairs) in &local_matchings {
        if out.part1.contains(lu) && out.part1.contains(lv) {
            part_matchings
                .push(((sub_to_part[lu as usize], sub_to_part[lv as usize]), pairs.clone()));
        }
    }
    let part_cover =
        Cover::new(&part_graph, part_lists, &part_matchings).map_err(GameError::MalformedMove)?;
    let phi = crate::dp::color_from_certificate(&part_graph, &part_cover, &out.cert1)
        .map_err(GameError::Synthesis)?;
    debug_assert_eq!(is_proper(&part_graph, &part_cover, &phi), Ok(true));

    let colored: Vec<(u32, u32)> = part_to_sub
        .iter()
        .enumerate()
        .map(|(pi, &sv)| (to_orig[sv as usize], phi[pi]))
        .collect();
    Ok((PainterResponse { colored }, out.cert2))
}

/// Adversaries produce Lister moves from the public game position.
pub trait ListerAdversary {
    fn next_move(&mut self, g: &Graph, state: &GameState) -> ListerMove;
}

/// Seeded random adversary. `intensity` scales how many colors each round
/// reveals; matchings are random partial injections.
pub struct RandomLister {
    rng: ChaCha8Rng,
    intensity: f64,
}

impl RandomLister {
    pub fn new(seed: u64, intensity: f64) -> Self {
        RandomLister { rng: ChaCha8Rng::seed_from_u64(seed), intensity }
    }
}

impl ListerAdversary for RandomLister {
    fn next_move(&mut self, g: &Graph, state: &GameState) -> ListerMove {
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
        for v in state.alive.iter() {
            let max_new = (state.budget[v as usize] - state.seen[v as usize] as i32).max(0);
            let cap = ((max_new as f64) * self.intensity).ceil() as u32;
            let size = if cap == 0 { 0 } else { self.rng.gen_range(0..=cap.min(4)) };
            lists[v as usize] = (0..size).collect();
        }
        let mut matchings = Vec::new();
        for (u, v) in g.edges() {
            if !(state.alive.contains(u) && state.alive.contains(v)) {
                continue;
            }
            let lu = lists[u as usize].len() as u32;
            let lv = lists[v as usize].len() as u32;
            let mut pairs = Vec::new();
            if lu > 0 && lv > 0 {
                // Random partial injection: pair a shuffled prefix.
                let k = self.rng.gen_range(0..=lu.min(lv));
                let mut cols: Vec<u32> = (0..lv).collect();
                for i in (1..cols.len()).rev() {
                    let j = self.rng.gen_range(0..=i);
                    cols.swap(i, j);
                }
                for c in 0..k {
                    pairs.push((c, cols[c as usize]));
                }
                pairs.sort_unstable();
            }
            matchings.push(((u, v), pairs));
        }
        ListerMove { lists, matchings }
    }
}

/// Plays full k-lists with random perfect matchings on round 0, then nothing:
/// Painter must color everything immediately, reducing the game to one
/// DP-coloring instance.
pub struct FullAssignment {
    k: usize,
    rng: ChaCha8Rng,
    played: bool,
    /// The round-0 cover, recorded for cross-checking.
    pub last_move: Option<ListerMove>,
}

impl FullAssignment {
    pub fn new(k: usize, seed: u64) -> Self {
        FullAssignment { k, rng: ChaCha8Rng::seed_from_u64(seed), played: false, last_move: None }
    }
}

impl ListerAdversary for FullAssignment {
    fn next_move(&mut self, g: &Graph, state: &GameState) -> ListerMove {
        if self.played {
            return ListerMove { lists: vec![Vec::new(); g.n()], matchings: Vec::new() };
        }
        self.played = true;
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
        for v in state.alive.iter() {
            lists[v as usize] = (0..self.k as u32).collect();
        }
        let mut matchings = Vec::new();
        for (u, v) in g.edges() {
            if state.alive.contains(u) && state.alive.contains(v) {
                let mut perm: Vec<u32> = (0..self.k as u32).collect();
                for i in (1..perm.len()).rev() {
                    let j = self.rng.gen_range(0..=i);
                    perm.swap(i, j);
                }
                let pairs: Vec<(u32, u32)> =
                    (0..self.k as u32).map(|c| (c, perm[c as usize])).collect();
                matchings.push(((u, v), pairs));
            }
        }
        let mv = ListerMove { lists, matchings };
        self.last_move = Some(mv.clone());
        mv
    }
}

/// Cycles through fixed vertex sets, giving each chosen alive vertex a
/// singleton list; all pairs on alive edges are matched. Realizes the
/// classical paint-number style of play.
pub struct SingletonStream {
    pub sets: Vec<VertexSet>,
}

impl ListerAdversary for SingletonStream {
    fn next_move(&mut self, g: &Graph, state: &GameState) -> ListerMove {
        let chosen = if self.sets.is_empty() {
            state.alive.clone()
        } else {
            self.sets[state.round % self.sets.len()].intersection(&state.alive)
        };
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
        for v in chosen.iter() {
            lists[v as usize] = vec![0];
        }
        let mut matchings = Vec::new();
        for (u, v) in g.edges() {
            if state.alive.contains(u) && state.alive.contains(v) {
                let pairs = if chosen.contains(u) && chosen.contains(v) {
                    vec![(0, 0)]
                } else {
                    Vec::new()
                };
                matchings.push(((u, v), pairs));
            }
        }
        ListerMove { lists, matchings }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Painter,
    Lister { starved_vertex: u32 },
}

/// Record of one round.
#[derive(Debug, Clone)]
pub struct Round {
    pub mv: ListerMove,
    pub response: PainterResponse,
    pub seen_after: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Transcript {
    pub budget: Vec<i32>,
    pub rounds: Vec<Round>,
    pub winner: Winner,
}

/// Plays the painting game with budgets `cert.initial_f + 1`.
///
/// The default round guard is `sum(budget) + 1`; if Lister has not starved
/// any vertex by then, its budgets are exhausted and Painter is declared the
/// winner even if vertices stay uncolored.
pub fn play_game(
    g: &Graph,
    cert: &Certificate,
    adversary: &mut dyn ListerAdversary,
    max_rounds: Option<usize>,
) -> Result<Transcript, GameError> {
    verify_certificate(g, cert).map_err(GameError::InvalidCertificate)?;
    let budget: Vec<i32> = cert.initial_f.iter().map(|&f| f + 1).collect();
    let guard = max_rounds
        .unwrap_or_else(|| budget.iter().map(|&b| b.max(0) as usize).sum::<usize>() + 1);
    let mut state = GameState {
        alive: VertexSet::full(g.n()),
        seen: vec![0; g.n()],
        budget: budget.clone(),
        round: 0,
    };
    let mut cert = cert.clone();
    let mut rounds = Vec::new();
    let mut winner = Winner::Painter;
    while !state.alive.is_empty() && state.round < guard {
        let mv = adversary.next_move(g, &state);
        let (response, next_cert) = painter_strategy(g, &state, &cert, &mv)?;
        for &(v, _) in &response.colored {
            state.alive.remove(v);
        }
        for v in state.alive.iter() {
            state.seen[v as usize] += mv.lists[v as usize].len() as u32;
        }
        rounds.push(Round { mv, response, seen_after: state.seen.clone() });
        // Loss condition: an uncolored vertex has seen its whole budget.
        if let Some(v) =
            state.alive.iter().find(|&v| state.seen[v as usize] as i32 >= state.budget[v as usize])
        {
            winner = Winner::Lister { starved_vertex: v };
            break;
        }
        cert = next_cert;
        state.round += 1;
    }
    Ok(Transcript { budget, rounds, winner })
}
