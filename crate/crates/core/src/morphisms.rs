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

//! Maps between token systems: embeddings, reductions to state subsets,
//! canonical set-family representatives and isomorphism search.

use std::collections::BTreeSet;

use crate::axioms::{is_medium, Medium};
use crate::error::{Error, Result};
use crate::token::{ReversePairing, StateId, TokenId, TokenSystem};
use crate::wgfamily::{representing_token_system, ElementSet, SetFamily};

/// `α` on states and `β` on tokens, indexed by source id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemMap {
    pub states: Vec<StateId>,
    pub tokens: Vec<TokenId>,
}

impl SystemMap {
    pub fn identity(sys: &TokenSystem) -> Self {
        SystemMap {
            states: sys.states().collect(),
            tokens: sys.tokens().collect(),
        }
    }

    /// The inverse of a bijective map.
    pub fn inverse(&self) -> Self {
        let mut states = vec![StateId(0); self.states.len()];
        for (i, s) in self.states.iter().enumerate() {
            states[s.0] = StateId(i);
        }
        let mut tokens = vec![TokenId(0); self.tokens.len()];
        for (i, t) in self.tokens.iter().enumerate() {
            tokens[t.0] = TokenId(i);
        }
        SystemMap { states, tokens }
    }

    fn validate(&self, src: &TokenSystem, dst: &TokenSystem) -> Result<()> {
        let check_len = |what, got, expected| {
            if got == expected {
                Ok(())
            } else {
                Err(Error::PartialMap {
                    what,
                    got,
                    expected,
                })
            }
        };
        check_len("states", self.states.len(), src.state_count())?;
        check_len("tokens", self.tokens.len(), src.token_count())?;
        for &s in &self.states {
            dst.check_state(s)?;
        }
        for &t in &self.tokens {
            dst.check_token(t)?;
        }
        if self.states.iter().collect::<BTreeSet<_>>().len() != self.states.len() {
            return Err(Error::NotInjective("states"));
        }
        if self.tokens.iter().collect::<BTreeSet<_>>().len() != self.tokens.len() {
            return Err(Error::NotInjective("tokens"));
        }
        Ok(())
    }
}

/// Why a map is not an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingFailure {
    /// `α(S)β(τ) ≠ α(Sτ)`.
    Counterexample { state: StateId, token: TokenId },
    /// `β(τ̃) ≠ β(τ)~`.
    ReverseMismatch(TokenId),
}

/// Checks `Sτ = T ⟺ α(S)β(τ) = α(T)` over all states and tokens, and
/// `β(τ̃) = β(τ)~` wherever both reverses exist. With `α` injective it is
/// enough to compare `α(S)β(τ)` against `α(Sτ)`.
pub fn check_embedding(
    src: &TokenSystem,
    dst: &TokenSystem,
    map: &SystemMap,
) -> Result<std::result::Result<(), EmbeddingFailure>> {
    map.validate(src, dst)?;
    for s in src.states() {
        for t in src.tokens() {
            if dst.step(map.states[s.0], map.tokens[t.0]) != map.states[src.step(s, t).0] {
                return Ok(Err(EmbeddingFailure::Counterexample { state: s, token: t }));
            }
        }
    }
    let (ps, pd) = (
        ReversePairing::of_system(src),
        ReversePairing::of_system(dst),
    );
    for t in src.tokens() {
        if let (Some(r), Some(br)) = (ps.get(t), pd.get(map.tokens[t.0])) {
            if map.tokens[r.0] != br {
                return Ok(Err(EmbeddingFailure::ReverseMismatch(t)));
            }
        }
    }
    Ok(Ok(()))
}

/// A token system restricted to a subset of states.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub system: TokenSystem,
    /// Source state of each reduced state.
    pub states: Vec<StateId>,
    /// Source tokens merged into each reduced token.
    pub tokens: Vec<Vec<TokenId>>,
}

/// Restricts every token to `q`: `Sτ_Q = Sτ` when `Sτ ∈ Q`, else `S`.
/// Tokens whose restriction is the identity are dropped, equal restrictions
/// are merged and named after the first source token.
pub fn reduction(sys: &TokenSystem, q: &[StateId]) -> Result<Reduction> {
    for &s in q {
        sys.check_state(s)?;
    }
    let states: Vec<StateId> = q
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if states.len() < 2 {
        return Err(Error::ReductionTooSmall(states.len()));
    }
    let mut local = vec![None; sys.state_count()];
    for (i, s) in states.iter().enumerate() {
        local[s.0] = Some(i);
    }
    let mut actions: Vec<Vec<StateId>> = Vec::new();
    let mut origins: Vec<Vec<TokenId>> = Vec::new();
    for t in sys.tokens() {
        let action: Vec<StateId> = states
            .iter()
            .enumerate()
            .map(|(i, &s)| StateId(local[sys.step(s, t).0].unwrap_or(i)))
            .collect();
        if action.iter().enumerate().all(|(i, s)| s.0 == i) {
            continue;
        }
        match actions.iter().position(|a| *a == action) {
            Some(j) => origins[j].push(t),
            None => {
                actions.push(action);
                origins.push(vec![t]);
            }
        }
    }
    if actions.is_empty() {
        let names: Vec<&str> = states.iter().map(|&s| sys.state_name(s)).collect();
        return Err(Error::EmptyReduction(format!("{{{}}}", names.join(", "))));
    }
    let tokens = origins
        .iter()
        .zip(actions)
        .map(|(o, a)| (sys.token_name(o[0]).to_string(), a))
        .collect();
    let system = TokenSystem::from_actions(
        states.iter().map(|&s| sys.state_name(s).to_string()),
        tokens,
    )?;
    Ok(Reduction {
        system,
        states,
        tokens: origins,
    })
}

/// Whether the reduction to `q` is itself a medium. An empty reduction is
/// not a token system, hence not a submedium.
pub fn is_submedium(m: &Medium, q: &[StateId]) -> Result<bool> {
    match reduction(m.system(), q) {
        Ok(r) => Ok(is_medium(&r.system).is_medium()),
        Err(Error::EmptyReduction(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The well-graded family read off the hypercube embedding, with its
/// representing medium.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Ground `"1"..="k"` for the `k` Θ-classes in canonical order; members
    /// sorted by size, then lexicographically.
    pub family: SetFamily,
    pub medium: Medium,
    /// Member index of each state of the source medium.
    pub state_member: Vec<usize>,
}

pub fn canonical_form(m: &Medium) -> CanonicalForm {
    let emb = m.embedding();
    let ground: Vec<String> = (1..=emb.dimension).map(|i| i.to_string()).collect();
    let mut members: Vec<ElementSet> = emb.sets.clone();
    members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    let state_member = emb
        .sets
        .iter()
        .map(|s| {
            members
                .binary_search_by(|x| x.len().cmp(&s.len()).then_with(|| x.iter().cmp(s.iter())))
                .expect("member present")
        })
        .collect();
    let family = SetFamily::from_indices(ground, members).expect("embedding sets are distinct");
    let sys = representing_token_system(&family).expect("embedding families are connected");
    let medium = is_medium(&sys)
        .into_medium()
        .expect("embedding families are well-graded");
    CanonicalForm {
        family,
        medium,
        state_member,
    }
}

/// Searches for an isomorphism of `a` onto `b`. The returned map has been
/// checked as an embedding in both directions.
pub fn is_isomorphic(a: &Medium, b: &Medium) -> Option<SystemMap> {
    if a.state_count() != b.state_count() || a.token_count() != b.token_count() {
        return None;
    }
    let degrees = |m: &Medium| {
        let mut d: Vec<usize> = (0..m.state_count()).map(|v| m.graph().degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return None;
    }
    let sizes = |m: &Medium| {
        let mut s = m.theta().class_sizes();
        s.sort_unstable();
        s
    };
    if sizes(a) != sizes(b) {
        return None;
    }
    let order = bfs_order(a);
    let mut search = Search {
        a,
        b,
        order: &order,
        alpha: vec![None; a.state_count()],
        alpha_used: vec![false; b.state_count()],
        beta: vec![None; a.token_count()],
        beta_used: vec![false; b.token_count()],
    };
    let root = order[0];
    for r in 0..b.state_count() {
        if b.graph().degree(r) != a.graph().degree(root) {
            continue;
        }
        if let Some(map) = search.place(0, r) {
            return Some(map);
        }
    }
    None
}

fn bfs_order(m: &Medium) -> Vec<usize> {
    let g = m.graph();
    let mut seen = vec![false; g.vertex_count()];
    let mut order = vec![0];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

struct Search<'a> {
    a: &'a Medium,
    b: &'a Medium,
    order: &'a [usize],
    alpha: Vec<Option<usize>>,
    alpha_used: Vec<bool>,
    beta: Vec<Option<TokenId>>,
    beta_used: Vec<bool>,
}

impl Search<'_> {
    /// Maps `order[k]` to `target`, then extends; undoes everything on failure.
    fn place(&mut self, k: usize, target: usize) -> Option<SystemMap> {
        let v = self.order[k];
        if self.alpha_used[target] || self.b.graph().degree(target) != self.a.graph().degree(v) {
            return None;
        }
        let saved_beta = (self.beta.clone(), self.beta_used.clone());
        self.alpha[v] = Some(target);
        self.alpha_used[target] = true;
        if self.consistent_edges(v, target) {
            if let Some(found) = self.extend(k + 1) {
                return Some(found);
            }
        }
        self.alpha[v] = None;
        self.alpha_used[target] = false;
        (self.beta, self.beta_used) = saved_beta;
        None
    }

    fn extend(&mut self, k: usize) -> Option<SystemMap> {
        if k == self.order.len() {
            return self.finish();
        }
        let v = self.order[k];
        // the BFS parent is already placed; candidates are its neighbors' images
        let parent = *self
            .a
            .graph()
            .neighbors(v)
            .iter()
            .find(|&&u| self.alpha[u].is_some())?;
        let pimg = self.alpha[parent].expect("placed");
        let candidates: Vec<usize> = self.b.graph().neighbors(pimg).to_vec();
        for w in candidates {
            if let Some(found) = self.place(k, w) {
                return Some(found);
            }
        }
        None
    }

    fn bind(&mut self, t: TokenId, u: TokenId) -> bool {
        match self.beta[t.0] {
            Some(x) => x == u,
            None if self.beta_used[u.0] => false,
            None => {
                self.beta[t.0] = Some(u);
                self.beta_used[u.0] = true;
                true
            }
        }
    }

    fn consistent_edges(&mut self, v: usize, img: usize) -> bool {
        let neighbors = self.a.graph().neighbors(v).to_vec();
        for x in neighbors {
            let Some(ximg) = self.alpha[x] else { continue };
            let (Some(ta), Some(tb)) = (
                self.a.arc_token(StateId(x), StateId(v)),
                self.b.arc_token(StateId(ximg), StateId(img)),
            ) else {
                return false;
            };
            let (ra, rb) = (self.a.reverse(ta), self.b.reverse(tb));
            if !self.bind(ta, tb) || !self.bind(ra, rb) {
                return false;
            }
        }
        true
    }

    fn finish(&self) -> Option<SystemMap> {
        let map = SystemMap {
            states: self
                .alpha
                .iter()
                .map(|s| StateId(s.expect("all placed")))
                .collect(),
            tokens: self
                .beta
                .iter()
                .map(|t| t.expect("every token labels an edge"))
                .collect(),
        };
        let forward = check_embedding(self.a.system(), self.b.system(), &map).ok()?;
        let backward = check_embedding(self.b.system(), self.a.system(), &map.inverse()).ok()?;
        (forward.is_ok() && backward.is_ok()).then_some(map)
    }
}
