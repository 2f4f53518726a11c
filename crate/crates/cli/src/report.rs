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

//! JSON renderings of verdicts and witnesses. Everything refers to states,
//! tokens and vertices by name.

use media_core::axioms::{build_graph, find_reverse_pairing, M2Outcome, Violation};
use media_core::pcube::{HypercubeEmbedding, NotMediatic, NotPartialCube, ThetaPartition};
use media_core::wgfamily::{GradingViolation, SetFamily};
use media_core::{LabeledGraph, Medium, StateId, TokenSystem};
use serde_json::{json, Value};

pub fn violation(sys: &TokenSystem, v: &Violation) -> Value {
    let st = |s: StateId| sys.state_name(s).to_string();
    let tk = |t| sys.token_name(t).to_string();
    let detail = match v {
        Violation::MissingReverse(t) | Violation::SelfReverse(t) => json!({ "token": tk(*t) }),
        Violation::DuplicateArcToken {
            from,
            to,
            first,
            second,
        } => {
            json!({ "from": st(*from), "to": st(*to), "tokens": [tk(*first), tk(*second)] })
        }
        Violation::Disconnected(a, b) => json!({ "states": [st(*a), st(*b)] }),
        Violation::NotPartialCube(w) => {
            // the verdict only reaches this step once the graph builds
            let p = find_reverse_pairing(sys).expect("pairing found before graph checks");
            let g = build_graph(sys, &p).expect("graph built before graph checks");
            not_partial_cube(&g, w)
        }
        Violation::Misaligned { token, edge } => {
            json!({ "token": tk(*token), "edge": [st(edge.0), st(edge.1)] })
        }
    };
    json!({ "kind": v.kind(), "detail": detail })
}

pub fn not_partial_cube(g: &LabeledGraph, w: &NotPartialCube) -> Value {
    let n = |v: usize| g.name(v).to_string();
    let edge = |e: usize| {
        let (u, v) = g.edge(e);
        let (a, b) = if g.name(u) <= g.name(v) {
            (u, v)
        } else {
            (v, u)
        };
        json!([n(a), n(b)])
    };
    match w {
        NotPartialCube::Disconnected(a, b) => {
            json!({ "kind": "Disconnected", "vertices": [n(*a), n(*b)] })
        }
        NotPartialCube::NotBipartite(c) => {
            json!({ "kind": "NotBipartite", "odd_cycle": c.0.iter().map(|&v| n(v)).collect::<Vec<_>>() })
        }
        NotPartialCube::ThetaIntransitive(a, b, c) => {
            json!({ "kind": "ThetaIntransitive", "edges": [edge(*a), edge(*b), edge(*c)] })
        }
        NotPartialCube::NonConvexSemicube {
            edge,
            u,
            v,
            outside,
        } => json!({
            "kind": "NonConvexSemicube",
            "edge": [n(edge.0), n(edge.1)],
            "members": [n(*u), n(*v)],
            "outside": n(*outside),
        }),
        NotPartialCube::Empty => json!({ "kind": "Empty" }),
    }
}

pub fn not_mediatic(g: &LabeledGraph, w: &NotMediatic) -> Value {
    let n = |v: usize| g.name(v).to_string();
    match w {
        NotMediatic::Disconnected(a, b) => {
            json!({ "kind": "Disconnected", "vertices": [n(*a), n(*b)] })
        }
        NotMediatic::NotBipartite(c) => {
            json!({ "kind": "NotBipartite", "odd_cycle": c.0.iter().map(|&v| n(v)).collect::<Vec<_>>() })
        }
        NotMediatic::Empty => json!({ "kind": "Empty" }),
        NotMediatic::Intransitive(a, b, c) => json!({
            "kind": "ArcRelationIntransitive",
            "arcs": [[n(a.0), n(a.1)], [n(b.0), n(b.1)], [n(c.0), n(c.1)]],
        }),
    }
}

pub fn embedding(g: &LabeledGraph, emb: &HypercubeEmbedding, theta: &ThetaPartition) -> Value {
    let sets: serde_json::Map<String, Value> = (0..g.vertex_count())
        .map(|v| (g.name(v).to_string(), json!(emb.sets[v])))
        .collect();
    let classes: Vec<Value> = theta
        .classes()
        .iter()
        .map(|class| {
            json!(class
                .iter()
                .map(|&e| {
                    let (u, v) = g.edge(e);
                    json!([g.name(u), g.name(v)])
                })
                .collect::<Vec<_>>())
        })
        .collect();
    json!({ "base": g.name(emb.base), "dimension": emb.dimension, "sets": sets, "classes": classes })
}

pub fn medium(m: &Medium) -> Value {
    let sys = m.system();
    let pairs: Vec<Value> = m
        .pairing()
        .pairs()
        .iter()
        .map(|&(t, r)| json!({ "tokens": [sys.token_name(t), sys.token_name(r)], "class": m.class_of_token(t) }))
        .collect();
    json!({
        "verdict": "Medium",
        "states": sys.state_count(),
        "tokens": sys.token_count(),
        "classes": m.theta().class_count(),
        "pairs": pairs,
        "embedding": embedding(m.graph(), m.embedding(), m.theta()),
    })
}

pub fn m2_outcome(sys: &TokenSystem, out: &M2Outcome) -> Value {
    match out {
        M2Outcome::NoViolationUpTo(n) => json!({ "violation": null, "maxlen": n }),
        M2Outcome::Violation { message, state } => json!({
            "violation": {
                "state": sys.state_name(*state),
                "message": message.tokens().iter().map(|&t| sys.token_name(t)).collect::<Vec<_>>(),
            },
        }),
    }
}

pub fn grading(f: &SetFamily, v: &GradingViolation) -> Value {
    json!({
        "members": [f.member_name(v.first), f.member_name(v.second)],
        "hamming": v.hamming,
        "internal": v.internal,
    })
}
