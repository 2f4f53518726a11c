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

//! Token systems and the message algebra.
//!
//! A token system is a finite set of states together with a set of
//! non-identity transformations of it (tokens). Messages are finite token
//! strings acting left to right. Everything here is index-based: states and
//! tokens are addressed by [`StateId`] / [`TokenId`], and names are kept only
//! for lookup and display.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenId(pub usize);

impl StateId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl TokenId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite token system. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenSystem {
    states: Vec<String>,
    tokens: Vec<String>,
    state_lookup: HashMap<String, StateId>,
    token_lookup: HashMap<String, TokenId>,
    // action[token][state]
    action: Vec<Vec<StateId>>,
}

impl TokenSystem {
    /// Builds a system from sparse token actions: states not listed for a
    /// token are fixed points of that token.
    pub fn from_sparse<S, T, M>(states: S, tokens: T) -> Result<Self>
    where
        S: IntoIterator,
        S::Item: Into<String>,
        T: IntoIterator<Item = (String, M)>,
        M: IntoIterator<Item = (String, String)>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        let state_lookup = index_names(&states, Error::DuplicateState, StateId)?;
        let mut names = Vec::new();
        let mut actions = Vec::new();
        for (name, map) in tokens {
            let mut action: Vec<StateId> = (0..states.len()).map(StateId).collect();
            let mut seen = vec![false; states.len()];
            for (from, to) in map {
                let from_id = *state_lookup
                    .get(&from)
                    .ok_or_else(|| Error::UnknownState(from.clone()))?;
                let to_id = *state_lookup
                    .get(&to)
                    .ok_or_else(|| Error::UnknownState(to.clone()))?;
                if std::mem::replace(&mut seen[from_id.0], true) {
                    return Err(Error::DuplicateMapping {
                        token: name,
                        state: from,
                    });
                }
                action[from_id.0] = to_id;
            }
            names.push(name);
            actions.push(action);
        }
        Self::assemble(states, state_lookup, names, actions)
    }

    /// Builds a system from total actions given as target-state vectors.
    pub fn from_actions<S>(states: S, tokens: Vec<(String, Vec<StateId>)>) -> Result<Self>
    where
        S: IntoIterator,
        S::Item: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        let state_lookup = index_names(&states, Error::DuplicateState, StateId)?;
        let mut names = Vec::with_capacity(tokens.len());
        let mut actions = Vec::with_capacity(tokens.len());
        for (name, action) in tokens {
            if action.len() != states.len() {
                return Err(Error::PartialMap {
                    what: "states",
                    got: action.len(),
                    expected: states.len(),
                });
            }
            if let Some(bad) = action.iter().find(|s| s.0 >= states.len()) {
                return Err(Error::StateOutOfRange(bad.0));
            }
            names.push(name);
            actions.push(action);
        }
        Self::assemble(states, state_lookup, names, actions)
    }

    fn assemble(
        states: Vec<String>,
        state_lookup: HashMap<String, StateId>,
        tokens: Vec<String>,
        action: Vec<Vec<StateId>>,
    ) -> Result<Self> {
        if states.len() < 2 {
            return Err(Error::TooFewStates(states.len()));
        }
        if tokens.is_empty() {
            return Err(Error::NoTokens);
        }
        let token_lookup = index_names(&tokens, Error::DuplicateToken, TokenId)?;
        for (name, act) in tokens.iter().zip(&action) {
            if act.iter().enumerate().all(|(s, t)| t.0 == s) {
                return Err(Error::IdentityToken(name.clone()));
            }
        }
        Ok(TokenSystem {
            states,
            tokens,
            state_lookup,
            token_lookup,
            action,
        })
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn states(&self) -> impl ExactSizeIterator<Item = StateId> + Clone {
        (0..self.states.len()).map(StateId)
    }

    pub fn tokens(&self) -> impl ExactSizeIterator<Item = TokenId> + Clone {
        (0..self.tokens.len()).map(TokenId)
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn token_names(&self) -> &[String] {
        &self.tokens
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.states[s.0]
    }

    pub fn token_name(&self, t: TokenId) -> &str {
        &self.tokens[t.0]
    }

    pub fn state(&self, name: &str) -> Result<StateId> {
        self.state_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn token(&self, name: &str) -> Result<TokenId> {
        self.token_lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownToken(name.to_string()))
    }

    /// Parses a message from token names.
    pub fn message<I, N>(&self, names: I) -> Result<Message>
    where
        I: IntoIterator<Item = N>,
        N: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| self.token(n.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Message)
    }

    pub fn check_state(&self, s: StateId) -> Result<StateId> {
        if s.0 < self.states.len() {
            Ok(s)
        } else {
            Err(Error::StateOutOfRange(s.0))
        }
    }

    pub fn check_token(&self, t: TokenId) -> Result<TokenId> {
        if t.0 < self.tokens.len() {
            Ok(t)
        } else {
            Err(Error::TokenOutOfRange(t.0))
        }
    }

    /// `S τ`. Panics on out-of-range ids.
    #[inline]
    pub fn step(&self, s: StateId, t: TokenId) -> StateId {
        self.action[t.0][s.0]
    }

    /// The total action of `t` as a target vector indexed by state.
    pub fn action(&self, t: TokenId) -> &[StateId] {
        &self.action[t.0]
    }

    /// Non-trivial arcs `(S, Sτ)` of a token, in state order.
    pub fn arcs(&self, t: TokenId) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.action[t.0]
            .iter()
            .enumerate()
            .filter(|(s, to)| to.0 != *s)
            .map(|(s, to)| (StateId(s), *to))
    }

    /// `𝒰_τ`: the states a token moves.
    pub fn effective_states(&self, t: TokenId) -> BTreeSet<StateId> {
        self.arcs(t).map(|(s, _)| s).collect()
    }

    pub fn format_message(&self, m: &Message) -> String {
        let names: Vec<&str> = m.0.iter().map(|t| self.token_name(*t)).collect();
        format!("[{}]", names.join(", "))
    }
}

fn index_names<I: Copy>(
    names: &[String],
    dup: impl Fn(String) -> Error,
    wrap: impl Fn(usize) -> I,
) -> Result<HashMap<String, I>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), wrap(i)).is_some() {
            return Err(dup(n.clone()));
        }
    }
    Ok(map)
}

/// A finite token string. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Message(pub Vec<TokenId>);

impl Message {
    pub fn empty() -> Self {
        Message(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tokens(&self) -> &[TokenId] {
        &self.0
    }

    pub fn content(&self) -> BTreeSet<TokenId> {
        content(self)
    }

    /// `m̃ = τ̃ₙ … τ̃₁`, if every reverse exists.
    pub fn reversed(&self, pairing: &ReversePairing) -> Option<Message> {
        self.0
            .iter()
            .rev()
            .map(|t| pairing.get(*t))
            .collect::<Option<Vec<_>>>()
            .map(Message)
    }

    pub fn concat(&self, other: &Message) -> Message {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Message(v)
    }

    pub fn segment(&self, start: usize, len: usize) -> Message {
        Message(self.0[start..start + len].to_vec())
    }

    /// The cyclic rotation starting at position `start`.
    pub fn rotated(&self, start: usize) -> Message {
        let mut v = self.0.clone();
        v.rotate_left(start % self.0.len().max(1));
        Message(v)
    }
}

impl From<Vec<TokenId>> for Message {
    fn from(v: Vec<TokenId>) -> Self {
        Message(v)
    }
}

impl fmt::Display for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.0.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A partial involution on tokens: `τ ↦ τ̃` where a reverse exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversePairing {
    reverse: Vec<Option<TokenId>>,
}

impl ReversePairing {
    /// Computes every reverse that exists in `sys`. Never fails; tokens
    /// without a reverse map to `None`.
    pub fn of_system(sys: &TokenSystem) -> Self {
        let reverse = sys.tokens().map(|t| find_reverse(sys, t)).collect();
        ReversePairing { reverse }
    }

    /// Builds a pairing from explicit entries, checking the involution law.
    pub fn from_entries(reverse: Vec<Option<TokenId>>) -> Result<Self> {
        for (i, r) in reverse.iter().enumerate() {
            if let Some(r) = r {
                match reverse.get(r.0) {
                    Some(Some(back)) if back.0 == i => {}
                    _ => {
                        return Err(Error::Inconsistent(format!(
                            "pairing is not an involution at token {i}"
                        )))
                    }
                }
            }
        }
        Ok(ReversePairing { reverse })
    }

    #[inline]
    pub fn get(&self, t: TokenId) -> Option<TokenId> {
        self.reverse.get(t.0).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.reverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reverse.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.reverse.iter().all(Option::is_some)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.reverse
            .iter()
            .enumerate()
            .all(|(i, r)| r.is_none_or(|r| r.0 != i))
    }

    /// Unordered pairs `{τ, τ̃}` with `τ < τ̃`, in token order.
    pub fn pairs(&self) -> Vec<(TokenId, TokenId)> {
        self.reverse
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.filter(|r| r.0 > i).map(|r| (TokenId(i), r)))
            .collect()
    }
}

fn find_reverse(sys: &TokenSystem, t: TokenId) -> Option<TokenId> {
    sys.tokens().find(|&mu| {
        sys.arcs(t).all(|(s, v)| sys.step(v, mu) == s)
            && sys.arcs(mu).all(|(v, s)| sys.step(s, t) == v)
    })
}

/// Applies `m` to `s`, returning the final state and the full trajectory
/// `S₀ = s, S₁, …, Sₙ`.
pub fn apply(sys: &TokenSystem, s: StateId, m: &Message) -> Result<(StateId, Vec<StateId>)> {
    sys.check_state(s)?;
    let mut trajectory = Vec::with_capacity(m.len() + 1);
    trajectory.push(s);
    let mut cur = s;
    for &t in m.tokens() {
        sys.check_token(t)?;
        cur = sys.step(cur, t);
        trajectory.push(cur);
    }
    Ok((cur, trajectory))
}

/// The unique reverse of `t`, if one exists.
pub fn reverse_of(sys: &TokenSystem, t: TokenId) -> Result<Option<TokenId>> {
    sys.check_token(t)?;
    Ok(find_reverse(sys, t))
}

pub fn content(m: &Message) -> BTreeSet<TokenId> {
    m.tokens().iter().copied().collect()
}

/// No token occurs together with its reverse. A self-reverse token is
/// therefore never allowed.
pub fn is_consistent(m: &Message, p: &ReversePairing) -> bool {
    let c = content(m);
    c.iter().all(|t| p.get(*t).is_none_or(|r| !c.contains(&r)))
}

/// The occurrences split into mutually reverse pairs.
pub fn is_vacuous(m: &Message, p: &ReversePairing) -> bool {
    let mut counts: HashMap<TokenId, usize> = HashMap::new();
    for t in m.tokens() {
        *counts.entry(*t).or_default() += 1;
    }
    counts.iter().all(|(t, &n)| match p.get(*t) {
        None => false,
        Some(r) if r == *t => n % 2 == 0,
        Some(r) => counts.get(&r).copied().unwrap_or(0) == n,
    })
}

pub fn is_stepwise_effective(sys: &TokenSystem, s: StateId, m: &Message) -> bool {
    let mut cur = s;
    for &t in m.tokens() {
        let next = sys.step(cur, t);
        if next == cur {
            return false;
        }
        cur = next;
    }
    true
}

/// Stepwise effective for `s`, consistent, and no token repeated.
pub fn is_concise(sys: &TokenSystem, s: StateId, m: &Message, p: &ReversePairing) -> bool {
    content(m).len() == m.len() && is_consistent(m, p) && is_stepwise_effective(sys, s, m)
}

/// Stepwise effective and ineffective for `s`.
pub fn is_closed(sys: &TokenSystem, s: StateId, m: &Message) -> bool {
    is_stepwise_effective(sys, s, m) && apply(sys, s, m).map(|(end, _)| end == s).unwrap_or(false)
}
