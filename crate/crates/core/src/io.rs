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

//! Text formats: token systems and set families as JSON, plain graphs as
//! edge lists, and DOT export.
//!
//! Token system: `{"states": [..], "tokens": {"t": {"A": "B", ..}, ..}}`,
//! where states missing from a token's map are fixed by it.
//! Family: `{"ground": [..], "sets": [[..], ..]}`.
//! Edge list: one `U V` pair per line, a lone name declares a vertex, `#`
//! starts a comment.

use std::fmt::{self, Write as _};
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::token::TokenSystem;
use crate::wgfamily::SetFamily;

/// A JSON object kept in file order that rejects repeated keys.
#[derive(Clone, Debug, PartialEq, Eq)]
struct OrderedMap<V>(Vec<(String, V)>);

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct MapVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for MapVisitor<V> {
            type Value = OrderedMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut entries: Vec<(String, V)> = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, V>()? {
                    if entries.iter().any(|(e, _)| *e == k) {
                        return Err(serde::de::Error::custom(format!("duplicate key `{k}`")));
                    }
                    entries.push((k, v));
                }
                Ok(OrderedMap(entries))
            }
        }

        deserializer.deserialize_map(MapVisitor(PhantomData))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TokenSystemFile {
    states: Vec<String>,
    tokens: OrderedMap<OrderedMap<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    ground: Vec<String>,
    sets: Vec<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_token_system(text: &str) -> Result<TokenSystem> {
    let file: TokenSystemFile = serde_json::from_str(text).map_err(json_error)?;
    TokenSystem::from_sparse(
        file.states,
        file.tokens.0.into_iter().map(|(name, map)| (name, map.0)),
    )
}

/// Pretty JSON listing only the arcs each token moves.
pub fn serialize_token_system(sys: &TokenSystem) -> String {
    let tokens = sys
        .tokens()
        .map(|t| {
            let arcs = sys
                .arcs(t)
                .map(|(a, b)| (sys.state_name(a).to_string(), sys.state_name(b).to_string()))
                .collect();
            (sys.token_name(t).to_string(), OrderedMap(arcs))
        })
        .collect();
    let file = TokenSystemFile {
        states: sys.state_names().to_vec(),
        tokens: OrderedMap(tokens),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let file: FamilyFile = serde_json::from_str(text).map_err(json_error)?;
    SetFamily::new(file.ground, file.sets)
}

pub fn serialize_family(f: &SetFamily) -> String {
    let file = FamilyFile {
        ground: f.ground().to_vec(),
        sets: f
            .members()
            .iter()
            .map(|m| m.iter().map(|&x| f.ground()[x].clone()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut g = LabeledGraph::new(Vec::<String>::new())?;
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or_default();
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[..] {
            [] => {}
            [v] => {
                g.ensure_vertex(v);
            }
            [a, b] => {
                let (u, v) = (g.ensure_vertex(a), g.ensure_vertex(b));
                g.add_edge(u, v, None)
                    .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `U V` or a single vertex",
                    no + 1
                )))
            }
        }
    }
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g)
}

/// Declares every vertex first so that isolated vertices and vertex order
/// survive a round trip, then lists edges in insertion order.
pub fn serialize_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for name in g.names() {
        writeln!(out, "{name}").expect("writing to a string");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", g.name(u), g.name(v)).expect("writing to a string");
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// GraphViz text with vertices sorted by name and each edge written once
/// from its smaller to its larger endpoint. A labeled edge shows the token
/// for that direction, then its reverse.
pub fn export_dot(g: &LabeledGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in g.canonical_vertex_order() {
        writeln!(out, "  {};", quote(g.name(v))).expect("writing to a string");
    }
    for e in g.canonical_edge_order() {
        let (u, v) = g.edge(e);
        let (a, b) = if g.name(u) <= g.name(v) {
            (u, v)
        } else {
            (v, u)
        };
        write!(out, "  {} -- {}", quote(g.name(a)), quote(g.name(b))).expect("writing to a string");
        if let Some(label) = g.label(e) {
            let names = g.token_names();
            let there = label.token_for((u, v), a);
            let back = label.token_for((u, v), b);
            write!(
                out,
                " [label={}]",
                quote(&format!("{}/{}", names[there.0], names[back.0]))
            )
            .expect("writing to a string");
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}
