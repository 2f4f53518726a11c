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

//! Families of subsets of a finite ground set, well-gradedness, and the
//! representing token system built from a family.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::axioms::Medium;
use crate::error::{Error, Result};
use crate::token::{StateId, TokenSystem};

/// A subset of the ground set, as sorted element indices.
pub type ElementSet = BTreeSet<usize>;

/// A family of at least two distinct subsets of a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: Vec<String>,
    members: Vec<ElementSet>,
}

impl SetFamily {
    /// Builds a family from element names.
    pub fn new<G, M, E>(ground: G, members: M) -> Result<Self>
    where
        G: IntoIterator,
        G::Item: Into<String>,
        M: IntoIterator<Item = E>,
        E: IntoIterator,
        E::Item: AsRef<str>,
    {
        let ground: Vec<String> = ground.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::new();
        for (i, g) in ground.iter().enumerate() {
            if lookup.insert(g.clone(), i).is_some() {
                return Err(Error::DuplicateElement(g.clone()));
            }
        }
        let members = members
            .into_iter()
            .map(|set| {
                set.into_iter()
                    .map(|e| {
                        lookup
                            .get(e.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownElement(e.as_ref().to_string()))
                    })
                    .collect::<Result<ElementSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(ground, members)
    }

    pub fn from_indices(ground: Vec<String>, members: Vec<ElementSet>) -> Result<Self> {
        let mut distinct = BTreeSet::new();
        for g in ground.iter() {
            if !distinct.insert(g) {
                return Err(Error::DuplicateElement(g.clone()));
            }
        }
        if members.len() < 2 {
            return Err(Error::TooFewMembers(members.len()));
        }
        let mut seen = BTreeSet::new();
        for m in &members {
            if let Some(&e) = m.iter().find(|&&e| e >= ground.len()) {
                return Err(Error::UnknownElement(format!("#{e}")));
            }
            if !seen.insert(m) {
                return Err(Error::DuplicateMember(render_set(&ground, m)));
            }
        }
        Ok(SetFamily { ground, members })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Display name of member `i`, e.g. `{x,y}`; the empty set is `{}`.
    pub fn member_name(&self, i: usize) -> String {
        render_set(&self.ground, &self.members[i])
    }

    pub fn position(&self, set: &ElementSet) -> Option<usize> {
        self.members.iter().position(|m| m == set)
    }

    /// Elements of `∪F \ ∩F`, in ground order.
    pub fn moving_elements(&self) -> Vec<usize> {
        let union: ElementSet = self.members.iter().flatten().copied().collect();
        (0..self.ground.len())
            .filter(|e| union.contains(e) && !self.members.iter().all(|m| m.contains(e)))
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.members.len();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if hamming(&self.members[i], &self.members[j]) == 1 {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        adj
    }
}

pub fn render_set(ground: &[String], set: &ElementSet) -> String {
    let names: Vec<&str> = set.iter().map(|&e| ground[e].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// `d(S, T) = |S Δ T|`.
pub fn hamming(a: &ElementSet, b: &ElementSet) -> usize {
    a.symmetric_difference(b).count()
}

fn bfs(adj: &[Vec<usize>], source: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut dist = vec![None; adj.len()];
    let mut parent = vec![None; adj.len()];
    let mut queue = VecDeque::from([source]);
    dist[source] = Some(0);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or_default();
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    (dist, parent)
}

/// Members are linked by single-element steps inside the family.
pub fn is_connected_family(f: &SetFamily) -> bool {
    let (dist, _) = bfs(&f.adjacency(), 0);
    dist.iter().all(Option::is_some)
}

/// A pair of members whose distance inside the family differs from their
/// symmetric-difference distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub first: usize,
    pub second: usize,
    pub hamming: usize,
    /// `None` when the two members are not connected inside the family.
    pub internal: Option<usize>,
}

/// Isometry test: the step graph on members must reproduce `|S Δ T|`
/// between every pair. Reports the first violating pair in member order.
pub fn check_well_graded(f: &SetFamily) -> std::result::Result<(), GradingViolation> {
    let adj = f.adjacency();
    for i in 0..f.len() {
        let (dist, _) = bfs(&adj, i);
        for (j, &internal) in dist.iter().enumerate().skip(i + 1) {
            let h = hamming(&f.members[i], &f.members[j]);
            if internal != Some(h) {
                return Err(GradingViolation {
                    first: i,
                    second: j,
                    hamming: h,
                    internal,
                });
            }
        }
    }
    Ok(())
}

pub fn is_well_graded(f: &SetFamily) -> bool {
    check_well_graded(f).is_ok()
}

/// A chain `S₀ = a, …, Sₙ = b` of members with single-element steps and
/// `n = |a Δ b|`, if one exists.
pub fn geodesic_chain(f: &SetFamily, a: usize, b: usize) -> Option<Vec<usize>> {
    let (dist, parent) = bfs(&f.adjacency(), a);
    if dist[b]? != hamming(&f.members[a], &f.members[b]) {
        return None;
    }
    let mut chain = vec![b];
    let mut cur = b;
    while let Some(p) = parent[cur] {
        chain.push(p);
        cur = p;
    }
    chain.reverse();
    Some(chain)
}

/// Token name for adding element `x`.
pub fn add_token_name(x: &str) -> String {
    format!("+{x}")
}

/// Token name for removing element `x`.
pub fn remove_token_name(x: &str) -> String {
    format!("-{x}")
}

/// The token system `(F, G_F)`: states are the members, and for each moving
/// element `x` there is an add token `+x` and a remove token `-x`, each
/// acting only when the result stays in the family.
///
/// Fails with [`Error::IdentityToken`] when some token never acts, which
/// can only happen for disconnected families.
pub fn representing_token_system(f: &SetFamily) -> Result<TokenSystem> {
    let index: HashMap<&ElementSet, usize> =
        f.members.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let states: Vec<String> = (0..f.len()).map(|i| f.member_name(i)).collect();
    let mut tokens = Vec::new();
    for x in f.moving_elements() {
        let mut add = Vec::with_capacity(f.len());
        let mut remove = Vec::with_capacity(f.len());
        for (i, m) in f.members.iter().enumerate() {
            let mut plus = m.clone();
            plus.insert(x);
            let mut minus = m.clone();
            minus.remove(&x);
            add.push(StateId(index.get(&plus).copied().unwrap_or(i)));
            remove.push(StateId(index.get(&minus).copied().unwrap_or(i)));
        }
        tokens.push((add_token_name(&f.ground[x]), add));
        tokens.push((remove_token_name(&f.ground[x]), remove));
    }
    TokenSystem::from_actions(states, tokens)
}

/// For every state and every reverse pair, one of the two tokens acts.
pub fn is_complete_medium(m: &Medium) -> bool {
    let sys = m.system();
    m.pairing().pairs().iter().all(|&(t, r)| {
        sys.states()
            .all(|s| sys.step(s, t) != s || sys.step(s, r) != s)
    })
}
