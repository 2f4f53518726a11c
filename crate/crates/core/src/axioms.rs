// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Deciding whether a token system is a medium.
//!
//! The decision runs in a fixed order and reports the first failure:
//! reverses, arc uniqueness, connectivity, partial-cube recognition of the
//! graph, and finally alignment of token pairs with Θ-classes (bijection
//! plus a consistent crossing direction for every token). Alignment is what
//! separates media from token systems that merely have a partial-cube graph.
//!
//! [`oracle_m1`] and [`oracle_m2`] check the two axioms by brute force and
//! exist to cross-validate the decision procedure on small inputs.

use std::collections::{BTreeSet, HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::graph::{DistanceTable, EdgeLabel, LabeledGraph};
use crate::pcube::{embed_with, theta_classes, HypercubeEmbedding, NotPartialCube, ThetaPartition};
use crate::token::{is_vacuous, Message, ReversePairing, StateId, TokenId, TokenSystem};

/// First reason a token system fails to be a medium.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingReverse(TokenId),
    SelfReverse(TokenId),
    /// Two distinct tokens both produce `to` from `from`.
    DuplicateArcToken {
        from: StateId,
        to: StateId,
        first: TokenId,
        second: TokenId,
    },
    Disconnected(StateId, StateId),
    NotPartialCube(NotPartialCube),
    /// `token` breaks the pair/Θ-class correspondence on `edge`.
    Misaligned {
        token: TokenId,
        edge: (StateId, StateId),
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::MissingReverse(_) => "MissingReverse",
            Violation::SelfReverse(_) => "SelfReverse",
            Violation::DuplicateArcToken { .. } => "DuplicateArcToken",
            Violation::Disconnected(..) => "Disconnected",
            Violation::NotPartialCube(_) => "NotPartialCube",
            Violation::Misaligned { .. } => "Misaligned",
        }
    }
}

/// Every token's reverse, or the first token (in token order) lacking a
/// proper one.
pub fn find_reverse_pairing(sys: &TokenSystem) -> Result<ReversePairing, Violation> {
    let pairing = ReversePairing::of_system(sys);
    for t in sys.tokens() {
        match pairing.get(t) {
            None => return Err(Violation::MissingReverse(t)),
            Some(r) if r == t => return Err(Violation::SelfReverse(t)),
            Some(_) => {}
        }
    }
    Ok(pairing)
}

/// The graph of a token system: states are vertices, `{S, V}` is an edge
/// when some token moves `S` to `V`, labeled with that token and its reverse.
pub fn build_graph(sys: &TokenSystem, p: &ReversePairing) -> Result<LabeledGraph, Violation> {
    for t in sys.tokens() {
        match p.get(t) {
            None => return Err(Violation::MissingReverse(t)),
            Some(r) if r == t => return Err(Violation::SelfReverse(t)),
            Some(_) => {}
        }
    }
    let mut arc_token: HashMap<(StateId, StateId), TokenId> = HashMap::new();
    for t in sys.tokens() {
        for (from, to) in sys.arcs(t) {
            if let Some(&first) = arc_token.get(&(from, to)) {
                return Err(Violation::DuplicateArcToken {
                    from,
                    to,
                    first,
                    second: t,
                });
            }
            arc_token.insert((from, to), t);
        }
    }
    let mut g =
        LabeledGraph::new(sys.state_names().iter().cloned()).expect("state names are unique");
    let mut arcs: Vec<_> = arc_token.iter().filter(|((a, b), _)| a < b).collect();
    arcs.sort();
    for (&(a, b), &t) in arcs {
        let back = arc_token.get(&(b, a)).copied();
        // reverses are exact, so the backward arc is always realized by p(t)
        let backward = back.or_else(|| p.get(t)).expect("pairing is total");
        g.add_edge(
            a.0,
            b.0,
            Some(EdgeLabel {
                forward: t,
                backward,
            }),
        )
        .expect("fresh edge");
    }
    g.set_token_names(sys.token_names().to_vec());
    Ok(g)
}

/// A verified medium together with its graph and Θ-class certificate.
#[derive(Clone, Debug)]
pub struct Medium {
    system: TokenSystem,
    pairing: ReversePairing,
    graph: LabeledGraph,
    dist: DistanceTable,
    theta: ThetaPartition,
    embedding: HypercubeEmbedding,
    class_of_token: Vec<usize>,
}

impl Medium {
    pub fn system(&self) -> &TokenSystem {
        &self.system
    }

    pub fn pairing(&self) -> &ReversePairing {
        &self.pairing
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.dist
    }

    pub fn theta(&self) -> &ThetaPartition {
        &self.theta
    }

    pub fn embedding(&self) -> &HypercubeEmbedding {
        &self.embedding
    }

    /// Θ-class carried by the edges of `t` (and of its reverse).
    pub fn class_of_token(&self, t: TokenId) -> usize {
        self.class_of_token[t.0]
    }

    /// `τ̃`. Total on a medium.
    pub fn reverse(&self, t: TokenId) -> TokenId {
        self.pairing.get(t).expect("media have total pairings")
    }

    /// `𝒰_τ = {S | Sτ ≠ S}`.
    pub fn effective_states(&self, t: TokenId) -> BTreeSet<StateId> {
        self.system.effective_states(t)
    }

    /// The unique token producing `to` from `from`, if they are adjacent.
    pub fn arc_token(&self, from: StateId, to: StateId) -> Option<TokenId> {
        let e = self.graph.edge_index(from.0, to.0)?;
        let label = self.graph.label(e)?;
        Some(label.token_for(self.graph.edge(e), from.0))
    }

    pub fn state_count(&self) -> usize {
        self.system.state_count()
    }

    pub fn token_count(&self) -> usize {
        self.system.token_count()
    }
}

#[derive(Clone, Debug)]
pub enum MediumVerdict {
    Medium(Box<Medium>),
    NotMedium(Violation),
}

impl MediumVerdict {
    pub fn is_medium(&self) -> bool {
        matches!(self, MediumVerdict::Medium(_))
    }

    pub fn into_medium(self) -> Option<Medium> {
        match self {
            MediumVerdict::Medium(m) => Some(*m),
            MediumVerdict::NotMedium(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            MediumVerdict::Medium(_) => None,
            MediumVerdict::NotMedium(v) => Some(v),
        }
    }
}

pub fn is_medium(sys: &TokenSystem) -> MediumVerdict {
    match verify(sys) {
        Ok(m) => MediumVerdict::Medium(Box::new(m)),
        Err(v) => MediumVerdict::NotMedium(v),
    }
}

fn verify(sys: &TokenSystem) -> Result<Medium, Violation> {
    let pairing = find_reverse_pairing(sys)?;
    let graph = build_graph(sys, &pairing)?;
    let dist = DistanceTable::bfs(&graph);
    if let Some((a, b)) = dist.disconnected_pair() {
        return Err(Violation::Disconnected(StateId(a), StateId(b)));
    }
    let theta = theta_classes(&graph).map_err(Violation::NotPartialCube)?;
    let class_of_token = align(sys, &pairing, &graph, &dist, &theta)?;
    let embedding = embed_with(&graph, &dist, &theta)
        .map_err(|_| Violation::NotPartialCube(NotPartialCube::Empty))?;
    Ok(Medium {
        system: sys.clone(),
        pairing,
        graph,
        dist,
        theta,
        embedding,
        class_of_token,
    })
}

fn align(
    sys: &TokenSystem,
    pairing: &ReversePairing,
    graph: &LabeledGraph,
    dist: &DistanceTable,
    theta: &ThetaPartition,
) -> Result<Vec<usize>, Violation> {
    let edge_states = |e: usize| {
        let (a, b) = graph.edge(e);
        (StateId(a), StateId(b))
    };
    let mut class_of_pair: HashMap<(TokenId, TokenId), usize> = HashMap::new();
    for (c, class) in theta.classes().iter().enumerate() {
        let label = |e: usize| graph.label(e).expect("medium graph is labeled");
        let pair = label(class[0]).unordered();
        for &e in &class[1..] {
            let l = label(e);
            if l.unordered() != pair {
                return Err(Violation::Misaligned {
                    token: l.forward,
                    edge: edge_states(e),
                });
            }
        }
        if class_of_pair.insert(pair, c).is_some() {
            return Err(Violation::Misaligned {
                token: pair.0,
                edge: edge_states(class[0]),
            });
        }
    }
    let mut class_of_token = vec![usize::MAX; sys.token_count()];
    for t in sys.tokens() {
        let r = pairing.get(t).expect("total pairing");
        let key = if t < r { (t, r) } else { (r, t) };
        class_of_token[t.0] = class_of_pair[&key];
        let mut arcs = sys.arcs(t);
        let (s0, t0) = arcs.next().expect("tokens are not the identity");
        for (s, v) in std::iter::once((s0, t0)).chain(arcs) {
            let target_side = dist.dist(v.0, t0.0) < dist.dist(v.0, s0.0);
            let source_side = dist.dist(s.0, s0.0) < dist.dist(s.0, t0.0);
            if !(target_side && source_side) {
                return Err(Violation::Misaligned {
                    token: t,
                    edge: (s, v),
                });
            }
        }
    }
    Ok(class_of_token)
}

/// Checks that every ordered pair of distinct states is joined by a concise
/// message, by exhaustive search over messages with distinct tokens. Uses
/// whatever reverses `p` knows about for the consistency test. Returns the
/// first unreachable pair in state order.
pub fn oracle_m1(sys: &TokenSystem, p: &ReversePairing) -> Result<(), (StateId, StateId)> {
    for s in sys.states() {
        let reached = concise_reach(sys, p, s);
        if let Some(v) = sys.states().find(|v| *v != s && !reached.contains(v.0)) {
            return Err((s, v));
        }
    }
    Ok(())
}

fn concise_reach(sys: &TokenSystem, p: &ReversePairing, source: StateId) -> FixedBitSet {
    let k = sys.token_count();
    let mut reached = FixedBitSet::with_capacity(sys.state_count());
    let mut seen: std::collections::HashSet<(StateId, FixedBitSet)> = Default::default();
    let mut stack = vec![(source, FixedBitSet::with_capacity(k))];
    while let Some((cur, used)) = stack.pop() {
        reached.insert(cur.0);
        if !seen.insert((cur, used.clone())) {
            continue;
        }
        for t in sys.tokens() {
            if used.contains(t.0) {
                continue;
            }
            if let Some(r) = p.get(t) {
                if r == t || used.contains(r.0) {
                    continue;
                }
            }
            let next = sys.step(cur, t);
            if next == cur {
                continue;
            }
            let mut u = used.clone();
            u.insert(t.0);
            stack.push((next, u));
        }
    }
    reached
}

/// Outcome of the bounded closed-message search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum M2Outcome {
    /// No non-vacuous closed message up to the given length.
    NoViolationUpTo(usize),
    /// A shortest non-vacuous message closed for `state`.
    Violation { message: Message, state: StateId },
}

impl M2Outcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, M2Outcome::Violation { .. })
    }
}

/// Default bound for [`oracle_m2`].
pub fn default_maxlen(sys: &TokenSystem) -> usize {
    2 * sys.state_count()
}

/// Searches stepwise-effective closed messages of length at most `maxlen`
/// for one that is not vacuous. Walks are explored breadth-first per start
/// state, merged on (current state, token-count imbalance), so the first hit
/// is a shortest violation. This can refute the closed-implies-vacuous axiom
/// but never certify it.
pub fn oracle_m2(sys: &TokenSystem, p: &ReversePairing, maxlen: usize) -> M2Outcome {
    let mut best: Option<(usize, StateId, Message)> = None;
    for s in sys.states() {
        let limit = best.as_ref().map_or(maxlen, |b| b.0.saturating_sub(1));
        if let Some(m) = shortest_nonvacuous_closed(sys, p, s, limit) {
            debug_assert!(!is_vacuous(&m, p));
            if best.as_ref().is_none_or(|b| m.len() < b.0) {
                best = Some((m.len(), s, m));
            }
        }
    }
    match best {
        Some((_, state, message)) => M2Outcome::Violation { message, state },
        None => M2Outcome::NoViolationUpTo(maxlen),
    }
}

// Per-token slot and weight in the imbalance vector: a pair {τ, τ̃} shares a
// slot with weights +1/−1, a self-reverse token toggles parity, a token with
// no reverse saturates at 1.
#[derive(Clone, Copy)]
enum Slot {
    Pair(usize, i32),
    Parity(usize),
    Orphan(usize),
}

fn shortest_nonvacuous_closed(
    sys: &TokenSystem,
    p: &ReversePairing,
    start: StateId,
    maxlen: usize,
) -> Option<Message> {
    let slots: Vec<Slot> = sys
        .tokens()
        .map(|t| match p.get(t) {
            None => Slot::Orphan(t.0),
            Some(r) if r == t => Slot::Parity(t.0),
            Some(r) if t < r => Slot::Pair(t.0, 1),
            Some(r) => Slot::Pair(r.0, -1),
        })
        .collect();
    let k = sys.token_count();
    // arena of (state, imbalance, parent, token)
    let mut nodes: Vec<(StateId, Vec<i32>, usize, Option<TokenId>)> =
        vec![(start, vec![0; k], usize::MAX, None)];
    let mut seen: HashMap<(StateId, Vec<i32>), usize> = HashMap::new();
    seen.insert((start, vec![0; k]), 0);
    let mut frontier = VecDeque::from([0usize]);
    for _ in 0..maxlen {
        let mut next_frontier = VecDeque::new();
        while let Some(i) = frontier.pop_front() {
            let (cur, vec) = (nodes[i].0, nodes[i].1.clone());
            for t in sys.tokens() {
                let next = sys.step(cur, t);
                if next == cur {
                    continue;
                }
                let mut v = vec.clone();
                match slots[t.0] {
                    Slot::Pair(j, w) => v[j] += w,
                    Slot::Parity(j) => v[j] ^= 1,
                    Slot::Orphan(j) => v[j] = 1,
                }
                if seen.contains_key(&(next, v.clone())) {
                    continue;
                }
                let id = nodes.len();
                let closed_bad = next == start && v.iter().any(|&x| x != 0);
                nodes.push((next, v.clone(), i, Some(t)));
                seen.insert((next, v), id);
                if closed_bad {
                    let mut msg = Vec::new();
                    let mut at = id;
                    while let Some(tok) = nodes[at].3 {
                        msg.push(tok);
                        at = nodes[at].2;
                    }
                    msg.reverse();
                    return Some(Message(msg));
                }
                next_frontier.push_back(id);
            }
        }
        frontier = next_frontier;
        if frontier.is_empty() {
            break;
        }
    }
    None
}
