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

//! Metric graph machinery: bipartiteness, semicubes, Winkler's relation Θ,
//! partial-cube recognition, isometric hypercube embedding, the six-way
//! classification of edge pairs and the arc relation behind mediatic graphs.
//!
//! Partial cubes are recognized two independent ways: Θ-transitivity on a
//! bipartite graph, and convexity of every semicube. [`is_partial_cube`]
//! runs both.

use std::collections::{BTreeSet, HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{DistanceTable, LabeledGraph};

/// Exact distances of a connected graph.
pub fn all_pairs_distances(g: &LabeledGraph) -> Result<DistanceTable> {
    let table = DistanceTable::bfs(g);
    match table.disconnected_pair() {
        Some((u, v)) => Err(Error::Disconnected(g.name(u).into(), g.name(v).into())),
        None => Ok(table),
    }
}

/// An odd cycle `v₀, v₁, …, v_k` (closed by the edge `v_k v₀`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

/// BFS 2-coloring; on failure returns an odd cycle.
pub fn check_bipartite(g: &LabeledGraph) -> std::result::Result<(), OddCycle> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap_or_default();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Err(OddCycle(tree_cycle(u, w, &parent, &depth)));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(())
}

// The cycle closed by the non-tree edge {u, w} in a BFS tree.
fn tree_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn is_bipartite(g: &LabeledGraph) -> bool {
    check_bipartite(g).is_ok()
}

/// Distance criterion for connected graphs: no vertex is equidistant from
/// the two ends of an edge.
pub fn bipartite_by_distances(g: &LabeledGraph, dist: &DistanceTable) -> bool {
    (0..g.vertex_count()).all(|w| {
        g.edges()
            .iter()
            .all(|&(s, v)| dist.dist(w, s) != dist.dist(w, v))
    })
}

/// A connected graph together with its distance table.
#[derive(Clone, Debug)]
pub struct GraphMetric<'g> {
    graph: &'g LabeledGraph,
    dist: DistanceTable,
}

impl<'g> GraphMetric<'g> {
    pub fn new(graph: &'g LabeledGraph) -> Result<Self> {
        Ok(GraphMetric {
            graph,
            dist: all_pairs_distances(graph)?,
        })
    }

    /// Reuses a distance table already computed for `graph`.
    pub fn with_distances(graph: &'g LabeledGraph, dist: DistanceTable) -> Self {
        debug_assert_eq!(dist.len(), graph.vertex_count());
        GraphMetric { graph, dist }
    }

    pub fn graph(&self) -> &'g LabeledGraph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.dist
    }

    #[inline]
    pub fn d(&self, u: usize, v: usize) -> usize {
        self.dist.dist(u, v)
    }

    fn require_edge(&self, u: usize, v: usize) -> Result<()> {
        if self.graph.is_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(
                self.graph.name(u).into(),
                self.graph.name(v).into(),
            ))
        }
    }

    /// `W_ST`: vertices strictly closer to `s` than to `t`.
    pub fn semicube(&self, s: usize, t: usize) -> Result<Vec<usize>> {
        self.require_edge(s, t)?;
        Ok(self.semicube_unchecked(s, t))
    }

    fn semicube_unchecked(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.graph.vertex_count())
            .filter(|&p| self.d(p, s) < self.d(p, t))
            .collect()
    }

    /// Winkler's relation for the edges `{s, t}` and `{p, q}`.
    pub fn theta(&self, (s, t): (usize, usize), (p, q): (usize, usize)) -> Result<bool> {
        self.require_edge(s, t)?;
        self.require_edge(p, q)?;
        Ok(self.theta_unchecked((s, t), (p, q)))
    }

    fn theta_unchecked(&self, (s, t): (usize, usize), (p, q): (usize, usize)) -> bool {
        self.d(s, p) + self.d(t, q) != self.d(s, q) + self.d(t, p)
    }

    /// Which of the six distance configurations two distinct oriented edges
    /// of a connected bipartite graph are in.
    pub fn classify_edge_pair(
        &self,
        (s, t): (usize, usize),
        (p, q): (usize, usize),
    ) -> Result<EdgePairCase> {
        self.require_edge(s, t)?;
        self.require_edge(p, q)?;
        if (s.min(t), s.max(t)) == (p.min(q), p.max(q)) {
            return Err(Error::SameEdge);
        }
        let [sp, tq, tp, sq] =
            [self.d(s, p), self.d(t, q), self.d(t, p), self.d(s, q)].map(|x| x as i64);
        let case = if tp == sq && sq == sp + 1 && sp + 1 == tq - 1 {
            EdgePairCase::Case1
        } else if tp == sq && sq == sp - 1 && sp - 1 == tq + 1 {
            EdgePairCase::Case2
        } else if sp == tq && tq == tp + 1 && tp + 1 == sq - 1 {
            EdgePairCase::Case3
        } else if sp == tq && tq == tp - 1 && tp - 1 == sq + 1 {
            EdgePairCase::Case4
        } else if sp == tq && tq == tp + 1 && tp + 1 == sq + 1 {
            EdgePairCase::Case5
        } else if sp == tq && tq == tp - 1 && tp - 1 == sq - 1 {
            EdgePairCase::Case6
        } else {
            return Err(Error::NotBipartite);
        };
        Ok(case)
    }

    /// The arc relation `(S,T) 𝓛 (P,Q)`:
    /// `δ(S,P) = δ(T,Q) = δ(T,P) − 1 = δ(S,Q) − 1`.
    pub fn arc_related(&self, (s, t): (usize, usize), (p, q): (usize, usize)) -> bool {
        let sp = self.d(s, p);
        sp == self.d(t, q) && sp + 1 == self.d(t, p) && sp + 1 == self.d(s, q)
    }
}

/// The six mutually exclusive edge-pair configurations. Cases 1–4 put both
/// edges on one geodesic; Cases 5 and 6 form a "rectangle".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgePairCase {
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
}

impl EdgePairCase {
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// Cases 5 and 6 are exactly the Θ-related pairs.
    pub fn is_theta(self) -> bool {
        matches!(self, EdgePairCase::Case5 | EdgePairCase::Case6)
    }
}

/// Partition of the edges into Θ-classes, classes ordered by their
/// smallest edge (edges compared by sorted endpoint names).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ThetaPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Why a graph is not a partial cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotPartialCube {
    Disconnected(usize, usize),
    NotBipartite(OddCycle),
    /// `e1 Θ e2`, `e2 Θ e3`, but not `e1 Θ e3` (edge indices).
    ThetaIntransitive(usize, usize, usize),
    /// `u` and `v` lie in the semicube of the oriented edge, `outside` lies
    /// on a shortest `u`–`v` path but not in the semicube.
    NonConvexSemicube {
        edge: (usize, usize),
        u: usize,
        v: usize,
        outside: usize,
    },
    /// The graph has no vertices.
    Empty,
}

fn connected_bipartite(g: &LabeledGraph) -> std::result::Result<DistanceTable, NotPartialCube> {
    if g.vertex_count() == 0 {
        return Err(NotPartialCube::Empty);
    }
    let dist = DistanceTable::bfs(g);
    if let Some((u, v)) = dist.disconnected_pair() {
        return Err(NotPartialCube::Disconnected(u, v));
    }
    check_bipartite(g).map_err(NotPartialCube::NotBipartite)?;
    Ok(dist)
}

// Returns the first transitivity failure of a reflexive, symmetric relation
// given by its rows, scanning in `order`.
fn transitivity_witness(rows: &[FixedBitSet], order: &[usize]) -> Option<(usize, usize, usize)> {
    for &a in order {
        for &b in order {
            if a == b || !rows[a].contains(b) || rows[a] == rows[b] {
                continue;
            }
            if let Some(&c) = order
                .iter()
                .find(|&&c| rows[b].contains(c) && !rows[a].contains(c))
            {
                return Some((a, b, c));
            }
            if let Some(&c) = order
                .iter()
                .find(|&&c| rows[a].contains(c) && !rows[b].contains(c))
            {
                return Some((b, a, c));
            }
        }
    }
    None
}

/// Θ-classes of a connected bipartite graph, or a transitivity witness.
pub fn theta_classes(g: &LabeledGraph) -> std::result::Result<ThetaPartition, NotPartialCube> {
    let dist = connected_bipartite(g)?;
    theta_classes_with(g, dist)
}

fn theta_classes_with(
    g: &LabeledGraph,
    dist: DistanceTable,
) -> std::result::Result<ThetaPartition, NotPartialCube> {
    let metric = GraphMetric { graph: g, dist };
    let m = g.edge_count();
    let rows: Vec<FixedBitSet> = (0..m)
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(m);
            for b in 0..m {
                if metric.theta_unchecked(g.edge(a), g.edge(b)) {
                    row.insert(b);
                }
            }
            row
        })
        .collect();
    let order = g.canonical_edge_order();
    if let Some((a, b, c)) = transitivity_witness(&rows, &order) {
        return Err(NotPartialCube::ThetaIntransitive(a, b, c));
    }
    let mut class_of = vec![usize::MAX; m];
    let mut classes = Vec::new();
    for &e in &order {
        if class_of[e] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&f| rows[e].contains(f))
            .collect();
        for &f in &members {
            class_of[f] = id;
        }
        classes.push(members);
    }
    Ok(ThetaPartition { classes, class_of })
}

/// Secondary recognition: bipartite and every semicube convex.
pub fn check_semicubes_convex(g: &LabeledGraph) -> std::result::Result<(), NotPartialCube> {
    let dist = connected_bipartite(g)?;
    let metric = GraphMetric { graph: g, dist };
    let n = g.vertex_count();
    let mut done: HashSet<FixedBitSet> = HashSet::new();
    for &e in &g.canonical_edge_order() {
        let (a, b) = g.edge(e);
        for (s, t) in [(a, b), (b, a)] {
            let members = metric.semicube_unchecked(s, t);
            let mut set = FixedBitSet::with_capacity(n);
            members.iter().for_each(|&v| set.insert(v));
            if !done.insert(set.clone()) {
                continue;
            }
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    let duv = metric.d(u, v);
                    if let Some(w) =
                        (0..n).find(|&w| !set.contains(w) && metric.d(u, w) + metric.d(w, v) == duv)
                    {
                        return Err(NotPartialCube::NonConvexSemicube {
                            edge: (s, t),
                            u,
                            v,
                            outside: w,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Outcome of both recognition methods.
#[derive(Clone, Debug)]
pub struct PartialCubeReport {
    pub theta: std::result::Result<ThetaPartition, NotPartialCube>,
    pub convexity: std::result::Result<(), NotPartialCube>,
}

impl PartialCubeReport {
    /// Verdict of the primary (Θ-transitivity) method.
    pub fn holds(&self) -> bool {
        self.theta.is_ok()
    }

    pub fn methods_agree(&self) -> bool {
        self.theta.is_ok() == self.convexity.is_ok()
    }
}

pub fn is_partial_cube(g: &LabeledGraph) -> PartialCubeReport {
    PartialCubeReport {
        theta: theta_classes(g),
        convexity: check_semicubes_convex(g),
    }
}

/// Isometric embedding `S ↦ J_S` into the cube on Θ-class indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeEmbedding {
    pub base: usize,
    pub dimension: usize,
    pub sets: Vec<BTreeSet<usize>>,
}

impl HypercubeEmbedding {
    pub fn set(&self, v: usize) -> &BTreeSet<usize> {
        &self.sets[v]
    }
}

/// Labels edges by Θ-class and collects labels along BFS-tree geodesics from
/// the first vertex in name order. The isometry is checked before returning.
pub fn embed_hypercube(g: &LabeledGraph) -> Result<(HypercubeEmbedding, ThetaPartition)> {
    let dist = connected_bipartite(g).map_err(|_| Error::NotPartialCube)?;
    let partition = theta_classes_with(g, dist.clone()).map_err(|_| Error::NotPartialCube)?;
    let embedding = embed_with(g, &dist, &partition)?;
    Ok((embedding, partition))
}

pub(crate) fn embed_with(
    g: &LabeledGraph,
    dist: &DistanceTable,
    partition: &ThetaPartition,
) -> Result<HypercubeEmbedding> {
    let n = g.vertex_count();
    let base = g.canonical_vertex_order()[0];
    let mut sets: Vec<Option<BTreeSet<usize>>> = vec![None; n];
    sets[base] = Some(BTreeSet::new());
    let mut queue = VecDeque::from([base]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if sets[w].is_none() {
                let mut s = sets[u].clone().unwrap_or_default();
                let class = partition.class_of(g.edge_index(u, w).expect("neighbor edge"));
                if !s.insert(class) {
                    return Err(Error::Inconsistent(format!(
                        "class {class} repeats along a geodesic to `{}`",
                        g.name(w)
                    )));
                }
                sets[w] = Some(s);
                queue.push_back(w);
            }
        }
    }
    let sets: Vec<BTreeSet<usize>> = sets.into_iter().map(Option::unwrap_or_default).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if sets[u].symmetric_difference(&sets[v]).count() != dist.dist(u, v) {
                return Err(Error::Inconsistent(format!(
                    "embedding is not isometric at `{}`, `{}`",
                    g.name(u),
                    g.name(v)
                )));
            }
        }
    }
    Ok(HypercubeEmbedding {
        base,
        dimension: partition.class_count(),
        sets,
    })
}

/// Why a graph is not mediatic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMediatic {
    Disconnected(usize, usize),
    NotBipartite(OddCycle),
    Empty,
    /// Arcs `a1 𝓛 a2`, `a2 𝓛 a3`, but not `a1 𝓛 a3`.
    Intransitive((usize, usize), (usize, usize), (usize, usize)),
}

/// Connected, bipartite, and 𝓛 transitive on arcs.
pub fn check_mediatic(g: &LabeledGraph) -> std::result::Result<(), NotMediatic> {
    let dist = connected_bipartite(g).map_err(|e| match e {
        NotPartialCube::Disconnected(u, v) => NotMediatic::Disconnected(u, v),
        NotPartialCube::NotBipartite(c) => NotMediatic::NotBipartite(c),
        _ => NotMediatic::Empty,
    })?;
    let metric = GraphMetric { graph: g, dist };
    let arcs: Vec<(usize, usize)> = g
        .canonical_edge_order()
        .into_iter()
        .flat_map(|e| {
            let (u, v) = g.edge(e);
            let (a, b) = if g.name(u) <= g.name(v) {
                (u, v)
            } else {
                (v, u)
            };
            [(a, b), (b, a)]
        })
        .collect();
    let k = arcs.len();
    let rows: Vec<FixedBitSet> = arcs
        .iter()
        .map(|&a| {
            let mut row = FixedBitSet::with_capacity(k);
            for (j, &b) in arcs.iter().enumerate() {
                if metric.arc_related(a, b) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let order: Vec<usize> = (0..k).collect();
    match transitivity_witness(&rows, &order) {
        Some((a, b, c)) => Err(NotMediatic::Intransitive(arcs[a], arcs[b], arcs[c])),
        None => Ok(()),
    }
}

pub fn is_mediatic(g: &LabeledGraph) -> bool {
    check_mediatic(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::wgfamily::SetFamily;

    fn family_graph(f: &SetFamily) -> LabeledGraph {
        let mut g = LabeledGraph::new((0..f.len()).map(|i| f.member_name(i))).unwrap();
        for i in 0..f.len() {
            for j in (i + 1)..f.len() {
                if crate::wgfamily::hamming(&f.members()[i], &f.members()[j]) == 1 {
                    g.add_edge(i, j, None).unwrap();
                }
            }
        }
        g
    }

    fn v(g: &LabeledGraph, name: &str) -> usize {
        g.vertex(name).unwrap()
    }

    #[test]
    fn distances() {
        let c6 = family_graph(&fixtures::c6_family());
        let d = all_pairs_distances(&c6).unwrap();
        assert_eq!(d.dist(v(&c6, "{}"), v(&c6, "{x,y,z}")), 3);
        let q3 = family_graph(&fixtures::q3_family());
        assert_eq!(all_pairs_distances(&q3).unwrap().diameter(), 3);
        let edge = family_graph(&fixtures::edge_family());
        assert_eq!(all_pairs_distances(&edge).unwrap().dist(0, 1), 1);
        let two = LabeledGraph::new(["a", "b"]).unwrap();
        assert!(matches!(
            all_pairs_distances(&two),
            Err(Error::Disconnected(..))
        ));
    }

    #[test]
    fn bipartite() {
        assert!(is_bipartite(&fixtures::k23_graph()));
        assert!(is_bipartite(&family_graph(&fixtures::c6_family())));
        let tri = fixtures::triangle_graph();
        let OddCycle(cycle) = check_bipartite(&tri).unwrap_err();
        assert_eq!(cycle.len(), 3);
        for i in 0..cycle.len() {
            assert!(tri.is_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn odd_cycle_witness_on_pentagon_with_tail() {
        let g = LabeledGraph::from_edge_names([
            ("t", "a"),
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("d", "e"),
            ("e", "a"),
        ])
        .unwrap();
        let OddCycle(cycle) = check_bipartite(&g).unwrap_err();
        assert_eq!(cycle.len(), 5);
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        assert_eq!(distinct.len(), 5);
        for i in 0..cycle.len() {
            assert!(g.is_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn semicubes() {
        let c4 = family_graph(&fixtures::c4_family());
        let m = GraphMetric::new(&c4).unwrap();
        let w = m.semicube(v(&c4, "{}"), v(&c4, "{x}")).unwrap();
        assert_eq!(w, vec![v(&c4, "{}"), v(&c4, "{y}")]);
        let edge = family_graph(&fixtures::edge_family());
        assert_eq!(
            GraphMetric::new(&edge).unwrap().semicube(0, 1).unwrap(),
            vec![0]
        );
        let c6 = family_graph(&fixtures::c6_family());
        let m6 = GraphMetric::new(&c6).unwrap();
        let w: BTreeSet<&str> = m6
            .semicube(v(&c6, "{}"), v(&c6, "{x}"))
            .unwrap()
            .into_iter()
            .map(|i| c6.name(i))
            .collect();
        assert_eq!(w, BTreeSet::from(["{}", "{z}", "{y,z}"]));
        assert!(matches!(
            m.semicube(v(&c4, "{}"), v(&c4, "{x,y}")),
            Err(Error::NotAnEdge(..))
        ));
    }

    #[test]
    fn theta_relation() {
        let c4 = family_graph(&fixtures::c4_family());
        let m = GraphMetric::new(&c4).unwrap();
        let (e, x, y, xy) = (v(&c4, "{}"), v(&c4, "{x}"), v(&c4, "{y}"), v(&c4, "{x,y}"));
        assert!(m.theta((e, x), (y, xy)).unwrap());
        assert!(!m.theta((e, x), (e, y)).unwrap());
        assert!(m.theta((e, x), (e, x)).unwrap());
        assert!(m.theta((e, x), (xy, y)).unwrap());
    }

    #[test]
    fn theta_partitions() {
        let c6 = family_graph(&fixtures::c6_family());
        let p = theta_classes(&c6).unwrap();
        assert_eq!(p.class_sizes(), vec![2, 2, 2]);
        let q3 = family_graph(&fixtures::q3_family());
        assert_eq!(theta_classes(&q3).unwrap().class_sizes(), vec![4, 4, 4]);
        let k23 = fixtures::k23_graph();
        let Err(NotPartialCube::ThetaIntransitive(a, b, c)) = theta_classes(&k23) else {
            panic!("K2,3 has a transitive Θ");
        };
        let m = GraphMetric::new(&k23).unwrap();
        assert!(m.theta(k23.edge(a), k23.edge(b)).unwrap());
        assert!(m.theta(k23.edge(b), k23.edge(c)).unwrap());
        assert!(!m.theta(k23.edge(a), k23.edge(c)).unwrap());
    }

    #[test]
    fn partial_cube_recognition() {
        let c6 = is_partial_cube(&family_graph(&fixtures::c6_family()));
        assert!(c6.holds() && c6.methods_agree());
        let k23 = is_partial_cube(&fixtures::k23_graph());
        assert!(!k23.holds() && k23.methods_agree());
        assert!(matches!(
            k23.convexity,
            Err(NotPartialCube::NonConvexSemicube { .. })
        ));
        let tri = is_partial_cube(&fixtures::triangle_graph());
        assert!(matches!(tri.theta, Err(NotPartialCube::NotBipartite(_))));
        assert!(tri.methods_agree());
    }

    #[test]
    fn embeddings() {
        for f in [
            fixtures::edge_family(),
            fixtures::c4_family(),
            fixtures::c6_family(),
        ] {
            let g = family_graph(&f);
            let (emb, _) = embed_hypercube(&g).unwrap();
            assert!(emb.set(emb.base).is_empty());
            // same shape as the source family: sizes of sets per dimension
            assert_eq!(emb.dimension, f.moving_elements().len());
            let dist = all_pairs_distances(&g).unwrap();
            for a in 0..g.vertex_count() {
                for b in 0..g.vertex_count() {
                    assert_eq!(
                        emb.sets[a].symmetric_difference(&emb.sets[b]).count(),
                        dist.dist(a, b)
                    );
                }
            }
        }
        let c4 = family_graph(&fixtures::c4_family());
        let (emb, _) = embed_hypercube(&c4).unwrap();
        let got: BTreeSet<Vec<usize>> = emb
            .sets
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        assert_eq!(got, BTreeSet::from([vec![], vec![0], vec![1], vec![0, 1]]));
        assert!(matches!(
            embed_hypercube(&fixtures::k23_graph()),
            Err(Error::NotPartialCube)
        ));
    }

    #[test]
    fn edge_pair_cases() {
        let c4 = family_graph(&fixtures::c4_family());
        let m = GraphMetric::new(&c4).unwrap();
        let (e, x, y, xy) = (v(&c4, "{}"), v(&c4, "{x}"), v(&c4, "{y}"), v(&c4, "{x,y}"));
        assert_eq!(
            m.classify_edge_pair((e, x), (y, xy)).unwrap(),
            EdgePairCase::Case6
        );
        assert_eq!(
            m.classify_edge_pair((e, x), (xy, y)).unwrap(),
            EdgePairCase::Case5
        );
        assert!(matches!(
            m.classify_edge_pair((e, x), (x, e)),
            Err(Error::SameEdge)
        ));

        let p3 = family_graph(&fixtures::p3_family());
        let m3 = GraphMetric::new(&p3).unwrap();
        let (a, b, c) = (v(&p3, "{}"), v(&p3, "{x}"), v(&p3, "{x,y}"));
        let case = m3.classify_edge_pair((a, b), (b, c)).unwrap();
        assert!(!case.is_theta());
        // S=∅,T={x},P={x},Q={x,y}: δ(T,Q)=1 = δ(S,P)=1, δ(S,Q)=2 = δ(T,P)+2
        assert_eq!(case, EdgePairCase::Case3);
    }

    #[test]
    fn mediatic() {
        assert!(is_mediatic(&family_graph(&fixtures::c6_family())));
        assert!(is_mediatic(&family_graph(&fixtures::q3_family())));
        assert!(matches!(
            check_mediatic(&fixtures::k23_graph()),
            Err(NotMediatic::Intransitive(..))
        ));
        assert!(matches!(
            check_mediatic(&fixtures::triangle_graph()),
            Err(NotMediatic::NotBipartite(_))
        ));
    }

    #[test]
    fn bipartite_criteria_agree_on_connected_graphs() {
        for g in [
            fixtures::k23_graph(),
            fixtures::triangle_graph(),
            family_graph(&fixtures::c6_family()),
        ] {
            let d = all_pairs_distances(&g).unwrap();
            assert_eq!(is_bipartite(&g), bipartite_by_distances(&g, &d));
        }
    }
}
