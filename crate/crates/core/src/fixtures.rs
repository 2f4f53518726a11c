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

//! Small named systems, families and graphs used throughout the tests and
//! the command-line generators.

use crate::axioms::{is_medium, Medium};
use crate::graph::LabeledGraph;
use crate::token::TokenSystem;
use crate::wgfamily::{representing_token_system, SetFamily};

fn family(ground: &[&str], sets: &[&[&str]]) -> SetFamily {
    SetFamily::new(
        ground.iter().copied(),
        sets.iter().map(|s| s.iter().copied()),
    )
    .expect("fixture family is valid")
}

/// `{∅, {x}}`
pub fn edge_family() -> SetFamily {
    family(&["x"], &[&[], &["x"]])
}

/// `{∅, {x}, {x,y}}`
pub fn p3_family() -> SetFamily {
    family(&["x", "y"], &[&[], &["x"], &["x", "y"]])
}

/// The power set of `{x, y}`.
pub fn c4_family() -> SetFamily {
    family(&["x", "y"], &[&[], &["x"], &["y"], &["x", "y"]])
}

/// The power set of `{x, y, z}`.
pub fn q3_family() -> SetFamily {
    family(
        &["x", "y", "z"],
        &[
            &[],
            &["x"],
            &["y"],
            &["z"],
            &["x", "y"],
            &["x", "z"],
            &["y", "z"],
            &["x", "y", "z"],
        ],
    )
}

/// A six-cycle through `∅, {x}, {x,y}, {x,y,z}, {y,z}, {z}`.
pub fn c6_family() -> SetFamily {
    family(
        &["x", "y", "z"],
        &[
            &[],
            &["x"],
            &["x", "y"],
            &["x", "y", "z"],
            &["y", "z"],
            &["z"],
        ],
    )
}

/// Connected but not well-graded.
pub fn nwg_family() -> SetFamily {
    family(
        &["x", "y", "z"],
        &[&[], &["x"], &["x", "y"], &["x", "y", "z"], &["z"]],
    )
}

/// Disconnected family whose representing system is still a token system.
pub fn disc_family() -> SetFamily {
    family(
        &["a", "b", "c", "d"],
        &[&["a"], &["b"], &["a", "b"], &["c"], &["d"], &["c", "d"]],
    )
}

fn sparse(states: &[&str], tokens: &[(&str, &[(&str, &str)])]) -> TokenSystem {
    TokenSystem::from_sparse(
        states.iter().copied(),
        tokens.iter().map(|(name, map)| {
            (
                name.to_string(),
                map.iter()
                    .map(|(a, b)| (a.to_string(), b.to_string()))
                    .collect::<Vec<_>>(),
            )
        }),
    )
    .expect("fixture system is valid")
}

/// Two states swapped by a single token, which is its own reverse.
pub fn swap_system() -> TokenSystem {
    sparse(&["A", "B"], &[("t", &[("A", "B"), ("B", "A")])])
}

/// One token `A → B` with no reverse.
pub fn norev_system() -> TokenSystem {
    sparse(&["A", "B"], &[("t", &[("A", "B")])])
}

/// Three states on a directed triangle `S → V → W → S`.
pub fn tri_system() -> TokenSystem {
    sparse(
        &["S", "V", "W"],
        &[
            ("t1", &[("S", "V")]),
            ("t2", &[("V", "W")]),
            ("t3", &[("W", "S")]),
        ],
    )
}

/// The power-set system on `{x, y}` with the `x` pair removed from the
/// `{y} — {x,y}` edge. Every token keeps a reverse and the graph is a path
/// (a partial cube), yet the `y` pair spans two Θ-classes.
pub fn misaligned_system() -> TokenSystem {
    sparse(
        &["{}", "{x}", "{y}", "{x,y}"],
        &[
            ("+x", &[("{}", "{x}")]),
            ("-x", &[("{x}", "{}")]),
            ("+y", &[("{}", "{y}"), ("{x}", "{x,y}")]),
            ("-y", &[("{y}", "{}"), ("{x,y}", "{x}")]),
        ],
    )
}

/// Verifies the representing system of a well-graded family. Panics when
/// the family is not well-graded.
pub fn medium(f: &SetFamily) -> Medium {
    let sys = representing_token_system(f).expect("family yields a token system");
    is_medium(&sys)
        .into_medium()
        .expect("family is well-graded")
}

/// `K₂,₃` with parts `{a1, a2}` and `{b1, b2, b3}`.
pub fn k23_graph() -> LabeledGraph {
    let mut edges = Vec::new();
    for a in ["a1", "a2"] {
        for b in ["b1", "b2", "b3"] {
            edges.push((a, b));
        }
    }
    LabeledGraph::from_edge_names(edges).expect("valid graph")
}

pub fn triangle_graph() -> LabeledGraph {
    LabeledGraph::from_edge_names([("a", "b"), ("b", "c"), ("c", "a")]).expect("valid graph")
}
