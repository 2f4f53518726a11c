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

//! Brute-force reference implementations shared by the integration tests.
//! None of these reuse the library's graph machinery.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use media_core::generate::{cycle, hypercube, path, random_wg_family};
use media_core::wgfamily::{ElementSet, SetFamily};
use media_core::{
    fixtures, LabeledGraph, Medium, Message, ReversePairing, StateId, TokenId, TokenSystem,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every concise message from `s` with its end state: distinct tokens, no
/// token together with its reverse, no self-reverse token, every step moves.
pub fn concise_messages(
    sys: &TokenSystem,
    p: &ReversePairing,
    s: StateId,
) -> Vec<(StateId, Message)> {
    let mut out = Vec::new();
    let mut stack = vec![(s, Vec::<TokenId>::new())];
    while let Some((cur, msg)) = stack.pop() {
        out.push((cur, Message(msg.clone())));
        for t in sys.tokens() {
            let clash = msg.iter().any(|&u| u == t || p.get(u) == Some(t));
            if clash || p.get(t) == Some(t) {
                continue;
            }
            let next = sys.step(cur, t);
            if next != cur {
                let mut m = msg.clone();
                m.push(t);
                stack.push((next, m));
            }
        }
    }
    out
}

/// Unweighted distances by repeated relaxation over the edge list.
pub fn floyd(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// All shortest vertex paths from `a` to `b`.
pub fn geodesics(g: &LabeledGraph, d: &[Vec<usize>], a: usize, b: usize) -> Vec<Vec<usize>> {
    if a == b {
        return vec![vec![a]];
    }
    let mut out = Vec::new();
    for &w in g.neighbors(a) {
        if d[w][b] + 1 == d[a][b] {
            for mut rest in geodesics(g, d, w, b) {
                rest.insert(0, a);
                out.push(rest);
            }
        }
    }
    out
}

/// Whether some shortest path visits both edges.
pub fn common_geodesic(
    g: &LabeledGraph,
    d: &[Vec<usize>],
    e1: (usize, usize),
    e2: (usize, usize),
) -> bool {
    let n = g.vertex_count();
    let has = |p: &[usize], (u, v): (usize, usize)| {
        p.windows(2)
            .any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u))
    };
    (0..n).any(|a| {
        (0..n).any(|b| {
            geodesics(g, d, a, b)
                .iter()
                .any(|p| has(p, e1) && has(p, e2))
        })
    })
}

/// Well-gradedness straight from the chain definition: from each member,
/// a search that only ever moves one step closer to the target must reach it.
pub fn wg_by_chains(f: &SetFamily) -> bool {
    let members: BTreeSet<&ElementSet> = f.members().iter().collect();
    f.members().iter().all(|s| {
        f.members().iter().all(|t| {
            let mut seen = BTreeSet::from([s.clone()]);
            let mut queue = VecDeque::from([s.clone()]);
            while let Some(cur) = queue.pop_front() {
                if cur == *t {
                    return true;
                }
                for &x in cur.symmetric_difference(t) {
                    let mut next = cur.clone();
                    if !next.remove(&x) {
                        next.insert(x);
                    }
                    if members.contains(&next) && seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            false
        })
    })
}

/// Whether consecutive members along the chain differ in one element.
pub fn connected_by_chains(f: &SetFamily) -> bool {
    let n = f.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && f.members()[i].symmetric_difference(&f.members()[j]).count() == 1 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// The named fixture media plus generated shapes.
pub fn named_media() -> Vec<(String, Medium)> {
    let mut out: Vec<(String, SetFamily)> = vec![
        ("edge".into(), fixtures::edge_family()),
        ("p3".into(), fixtures::p3_family()),
        ("c4".into(), fixtures::c4_family()),
        ("c6".into(), fixtures::c6_family()),
        ("q3".into(), fixtures::q3_family()),
        ("c8".into(), cycle(8).unwrap()),
        ("p5".into(), path(5).unwrap()),
        ("q4".into(), hypercube(4).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..12 {
        out.push((
            format!("random-wg-{i}"),
            random_wg_family(4, 9, &mut rng).unwrap(),
        ));
    }
    out.into_iter()
        .map(|(n, f)| (n, fixtures::medium(&f)))
        .collect()
}

pub fn small_media() -> Vec<(String, Medium)> {
    named_media()
        .into_iter()
        .filter(|(_, m)| m.state_count() <= 10)
        .collect()
}
