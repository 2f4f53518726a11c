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

//! Simple undirected graphs with optional token-pair edge labels, and
//! breadth-first distance tables.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::token::TokenId;

/// Token pair carried by an edge `{u, v}` (stored with `u < v`):
/// `forward` moves `u` to `v`, `backward` moves `v` to `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabel {
    pub forward: TokenId,
    pub backward: TokenId,
}

impl EdgeLabel {
    /// The token realizing the arc `from → to` of this edge.
    pub fn token_for(&self, edge: (usize, usize), from: usize) -> TokenId {
        if from == edge.0 {
            self.forward
        } else {
            self.backward
        }
    }

    /// The pair with the smaller token first.
    pub fn unordered(&self) -> (TokenId, TokenId) {
        if self.forward <= self.backward {
            (self.forward, self.backward)
        } else {
            (self.backward, self.forward)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_lookup: HashMap<(usize, usize), usize>,
    labels: Vec<Option<EdgeLabel>>,
    token_names: Vec<String>,
}

impl LabeledGraph {
    /// An edgeless graph on the given vertex names.
    pub fn new<I>(names: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateState(n.clone()));
            }
        }
        let adj = vec![Vec::new(); names.len()];
        Ok(LabeledGraph {
            names,
            lookup,
            adj,
            edges: Vec::new(),
            edge_lookup: HashMap::new(),
            labels: Vec::new(),
            token_names: Vec::new(),
        })
    }

    /// Builds a plain graph; vertices appear in first-mention order.
    pub fn from_edge_names<I, A, B>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut g = LabeledGraph::new(Vec::<String>::new())?;
        for (a, b) in edges {
            let u = g.ensure_vertex(a.as_ref());
            let v = g.ensure_vertex(b.as_ref());
            g.add_edge(u, v, None)?;
        }
        Ok(g)
    }

    /// Returns the index of `name`, adding it as an isolated vertex if new.
    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.lookup.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), i);
        self.adj.push(Vec::new());
        i
    }

    /// Adds `{u, v}`. `label`, when given, is oriented `u → v`.
    pub fn add_edge(&mut self, u: usize, v: usize, label: Option<EdgeLabel>) -> Result<usize> {
        let n = self.names.len();
        if u >= n || v >= n {
            return Err(Error::StateOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        let key = (u.min(v), u.max(v));
        if self.edge_lookup.contains_key(&key) {
            return Err(Error::DuplicateEdge(
                self.names[key.0].clone(),
                self.names[key.1].clone(),
            ));
        }
        let label = label.map(|l| {
            if u < v {
                l
            } else {
                EdgeLabel {
                    forward: l.backward,
                    backward: l.forward,
                }
            }
        });
        let id = self.edges.len();
        self.edges.push(key);
        self.edge_lookup.insert(key, id);
        self.labels.push(label);
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].binary_search(&b).unwrap_err();
            self.adj[a].insert(pos, b);
        }
        Ok(id)
    }

    pub fn set_token_names(&mut self, names: Vec<String>) {
        self.token_names = names;
    }

    pub fn token_names(&self) -> &[String] {
        &self.token_names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn label(&self, e: usize) -> Option<EdgeLabel> {
        self.labels[e]
    }

    pub fn is_labeled(&self) -> bool {
        !self.labels.is_empty() && self.labels.iter().all(Option::is_some)
    }

    /// Vertices sorted by name.
    pub fn canonical_vertex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        order
    }

    /// `(smaller name, larger name)` of an edge.
    pub fn edge_key(&self, e: usize) -> (&str, &str) {
        let (u, v) = self.edges[e];
        let (a, b) = (self.names[u].as_str(), self.names[v].as_str());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Edges sorted by their sorted endpoint names.
    pub fn canonical_edge_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edge_key(a).cmp(&self.edge_key(b)));
        order
    }

    /// Connected components as vertex lists, each in BFS order from its
    /// smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Exact shortest-path distances between all vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceTable {
    /// One BFS per source. Unreachable pairs are recorded as such.
    pub fn bfs(g: &LabeledGraph) -> Self {
        let n = g.vertex_count();
        let mut d = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceTable { n, d }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x as usize)
    }

    /// Distance between `u` and `v`. Panics if they are disconnected.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        let x = self.d[u * self.n + v];
        assert!(x != UNREACHABLE, "vertices {u} and {v} are disconnected");
        x as usize
    }

    /// First unreachable pair `(u, v)` with `u < v`, if any.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.d[u * self.n + v] == UNREACHABLE)
    }

    pub fn diameter(&self) -> usize {
        self.d
            .iter()
            .filter(|&&x| x != UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as usize
    }
}
