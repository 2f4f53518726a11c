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

use thiserror::Error;

/// Input and precondition errors. Verdicts (not a medium, not a partial cube,
/// ...) are ordinary values and never show up here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("duplicate token `{0}`")]
    DuplicateToken(String),
    #[error("token `{0}` acts as the identity")]
    IdentityToken(String),
    #[error("a token system needs at least two states, got {0}")]
    TooFewStates(usize),
    #[error("a token system needs at least one token")]
    NoTokens,
    #[error("token `{token}` maps state `{state}` twice")]
    DuplicateMapping { token: String, state: String },
    #[error("state index {0} out of range")]
    StateOutOfRange(usize),
    #[error("token index {0} out of range")]
    TokenOutOfRange(usize),
    #[error("vertices `{0}` and `{1}` are not adjacent")]
    NotAnEdge(String, String),
    #[error("`{0}` and `{1}` lie in different components")]
    Disconnected(String, String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("the two edges coincide")]
    SameEdge,
    #[error("a set family needs at least two members, got {0}")]
    TooFewMembers(usize),
    #[error("duplicate member set {0}")]
    DuplicateMember(String),
    #[error("duplicate ground element `{0}`")]
    DuplicateElement(String),
    #[error("element `{0}` is not in the ground set")]
    UnknownElement(String),
    #[error("the reduction to {0} has no tokens")]
    EmptyReduction(String),
    #[error("a reduction needs at least two states, got {0}")]
    ReductionTooSmall(usize),
    #[error("source and target state are equal")]
    EmptyRequest,
    #[error("more than {0} concise messages")]
    TooManyMessages(usize),
    #[error("message length {0} is odd")]
    OddLength(usize),
    #[error("message is empty")]
    EmptyMessage,
    #[error("message is not stepwise effective for `{0}`")]
    NotStepwiseEffective(String),
    #[error("message is not closed for `{0}`")]
    NotClosed(String),
    #[error("states of a quadrilateral must be distinct")]
    StatesNotDistinct,
    #[error("no token produces `{1}` from `{0}`")]
    NotAnArc(String, String),
    #[error("map is not injective on {0}")]
    NotInjective(&'static str),
    #[error("map covers {got} of {expected} {what}")]
    PartialMap {
        what: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
