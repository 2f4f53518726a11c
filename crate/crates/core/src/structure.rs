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

//! Contents, semicubes and closed messages of a verified medium.
//!
//! Contents are computed from the metric characterization of semicubes
//! rather than by enumerating concise messages; enumeration is available
//! separately and is what the tests compare against.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::axioms::Medium;
use crate::error::{Error, Result};
use crate::pcube::{EdgePairCase, GraphMetric};
use crate::token::{apply, content, is_concise, is_stepwise_effective, Message, StateId, TokenId};

/// Default cap on the number of messages [`enumerate_concise`] materializes.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// `𝒲_τ = {V | δ(V, T) < δ(V, S)}` for any arc `Sτ = T`.
pub fn token_semicube(m: &Medium, t: TokenId) -> Result<BTreeSet<StateId>> {
    let sys = m.system();
    sys.check_token(t)?;
    let (s, target) = sys.arcs(t).next().expect("tokens are not the identity");
    let d = m.distances();
    Ok(sys
        .states()
        .filter(|v| d.dist(v.0, target.0) < d.dist(v.0, s.0))
        .collect())
}

/// Semicubes of every token, indexed by token.
pub fn token_semicubes(m: &Medium) -> Vec<BTreeSet<StateId>> {
    m.system()
        .tokens()
        .map(|t| token_semicube(m, t).expect("token of the medium"))
        .collect()
}

/// `Ŝ = {τ | S ∈ 𝒲_τ}`.
pub fn content_of(m: &Medium, s: StateId) -> Result<BTreeSet<TokenId>> {
    m.system().check_state(s)?;
    let semicubes = token_semicubes(m);
    Ok(m.system()
        .tokens()
        .filter(|t| semicubes[t.0].contains(&s))
        .collect())
}

/// Contents of all states, indexed by state.
pub fn contents(m: &Medium) -> Vec<BTreeSet<TokenId>> {
    let semicubes = token_semicubes(m);
    m.system()
        .states()
        .map(|s| {
            m.system()
                .tokens()
                .filter(|t| semicubes[t.0].contains(&s))
                .collect()
        })
        .collect()
}

/// Length of a concise message producing `v` from `s`. Found by a
/// breadth-first search on token actions, independently of the graph.
pub fn delta(m: &Medium, s: StateId, v: StateId) -> Result<usize> {
    let sys = m.system();
    sys.check_state(s)?;
    sys.check_state(v)?;
    let mut dist = vec![usize::MAX; sys.state_count()];
    dist[s.0] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            return Ok(dist[x.0]);
        }
        for t in sys.tokens() {
            let y = sys.step(x, t);
            if dist[y.0] == usize::MAX {
                dist[y.0] = dist[x.0] + 1;
                queue.push_back(y);
            }
        }
    }
    Err(Error::Disconnected(
        sys.state_name(s).into(),
        sys.state_name(v).into(),
    ))
}

/// All concise messages producing `v` from `s`, one per geodesic, in
/// lexicographic token order.
pub fn enumerate_concise(m: &Medium, s: StateId, v: StateId) -> Result<Vec<Message>> {
    enumerate_concise_capped(m, s, v, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_concise_capped(
    m: &Medium,
    s: StateId,
    v: StateId,
    cap: usize,
) -> Result<Vec<Message>> {
    let sys = m.system();
    sys.check_state(s)?;
    sys.check_state(v)?;
    if s == v {
        return Err(Error::EmptyRequest);
    }
    let d = m.distances();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d.dist(s.0, v.0));
    fn walk(
        m: &Medium,
        x: StateId,
        v: StateId,
        prefix: &mut Vec<TokenId>,
        out: &mut Vec<Message>,
        cap: usize,
    ) -> Result<()> {
        if x == v {
            if out.len() == cap {
                return Err(Error::TooManyMessages(cap));
            }
            out.push(Message(prefix.clone()));
            return Ok(());
        }
        let d = m.distances();
        let here = d.dist(x.0, v.0);
        for t in m.system().tokens() {
            let y = m.system().step(x, t);
            if y != x && d.dist(y.0, v.0) + 1 == here {
                prefix.push(t);
                walk(m, y, v, prefix, out, cap)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    walk(m, s, v, &mut prefix, &mut out, cap)?;
    Ok(out)
}

/// The lexicographically first concise message producing `v` from `s`.
/// Empty when `s == v`.
pub fn first_concise(m: &Medium, s: StateId, v: StateId) -> Result<Message> {
    let sys = m.system();
    sys.check_state(s)?;
    sys.check_state(v)?;
    let d = m.distances();
    let mut msg = Vec::new();
    let mut x = s;
    while x != v {
        let here = d.dist(x.0, v.0);
        let t = sys
            .tokens()
            .find(|&t| d.dist(sys.step(x, t).0, v.0) + 1 == here)
            .expect("a connected graph has a step toward every target");
        msg.push(t);
        x = sys.step(x, t);
    }
    Ok(Message(msg))
}

/// Number of concise messages producing `v` from `s`, without materializing
/// them. Zero when `s == v`.
pub fn count_concise(m: &Medium, s: StateId, v: StateId) -> Result<u128> {
    let sys = m.system();
    sys.check_state(s)?;
    sys.check_state(v)?;
    if s == v {
        return Ok(0);
    }
    let d = m.distances();
    // states ordered by distance to v, so every successor is counted first
    let mut order: Vec<StateId> = sys.states().collect();
    order.sort_by_key(|x| d.dist(x.0, v.0));
    let mut count: HashMap<StateId, u128> = HashMap::from([(v, 1)]);
    for &x in order.iter().skip(1) {
        let here = d.dist(x.0, v.0);
        let c = sys
            .tokens()
            .map(|t| sys.step(x, t))
            .filter(|y| d.dist(y.0, v.0) + 1 == here)
            .map(|y| count.get(&y).copied().unwrap_or(0))
            .sum();
        count.insert(x, c);
    }
    Ok(count[&s])
}

/// Properties of an even closed message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitReport {
    /// First half concise for the start, second half concise for the midpoint.
    pub is_two_gon: bool,
    /// Every window of half length starting in the first half is concise for
    /// the state it starts at.
    pub is_regular: bool,
    /// Every rotation is a 2-gon for the state it starts at.
    pub rotations_two_gons: bool,
    /// `τᵢ` and `τᵢ₊ₙ` are mutual reverses for all `i`.
    pub opposite_reversed: bool,
}

pub fn regular_circuit_check(m: &Medium, s: StateId, msg: &Message) -> Result<CircuitReport> {
    let sys = m.system();
    let (end, traj) = apply(sys, s, msg)?;
    if msg.is_empty() {
        return Err(Error::EmptyMessage);
    }
    if msg.len() % 2 == 1 {
        return Err(Error::OddLength(msg.len()));
    }
    if !is_stepwise_effective(sys, s, msg) {
        return Err(Error::NotStepwiseEffective(sys.format_message(msg)));
    }
    if end != s {
        return Err(Error::NotClosed(sys.format_message(msg)));
    }
    let p = m.pairing();
    let len = msg.len();
    let n = len / 2;
    let two_gon_at = |i: usize| {
        let r = msg.rotated(i);
        let start = traj[i];
        is_concise(sys, start, &r.segment(0, n), p)
            && is_concise(sys, traj[(i + n) % len], &r.segment(n, n), p)
    };
    let is_regular = (0..n).all(|i| is_concise(sys, traj[i], &msg.rotated(i).segment(0, n), p));
    let opposite_reversed = (0..n).all(|i| p.get(msg.0[i]) == Some(msg.0[i + n]));
    Ok(CircuitReport {
        is_two_gon: two_gon_at(0),
        is_regular,
        rotations_two_gons: (0..len).all(two_gon_at),
        opposite_reversed,
    })
}

/// A quadrilateral `Sτ = T`, `Pμ = Q` with concise messages
/// `Tm = Sm′ = Q` and `Sn = Tn′ = P`, classified by edge-pair case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrilateral {
    pub case: EdgePairCase,
    pub tau: TokenId,
    pub mu: TokenId,
    pub m: Message,
    pub n: Message,
    pub m_prime: Message,
    pub n_prime: Message,
}

/// Classifies the quadrilateral on `S, T, P, Q` and verifies the message-level
/// facts of its case. A failed fact is reported as [`Error::Inconsistent`];
/// on a verified medium that would be a bug.
pub fn classify_quadrilateral(
    m: &Medium,
    s: StateId,
    t: StateId,
    p: StateId,
    q: StateId,
) -> Result<Quadrilateral> {
    let sys = m.system();
    for x in [s, t, p, q] {
        sys.check_state(x)?;
    }
    let distinct: BTreeSet<StateId> = [s, t, p, q].into_iter().collect();
    if distinct.len() != 4 {
        return Err(Error::StatesNotDistinct);
    }
    let arc = |a: StateId, b: StateId| {
        m.arc_token(a, b)
            .ok_or_else(|| Error::NotAnArc(sys.state_name(a).into(), sys.state_name(b).into()))
    };
    let tau = arc(s, t)?;
    let mu = arc(p, q)?;
    let metric = GraphMetric::with_distances(m.graph(), m.distances().clone());
    let case = metric.classify_edge_pair((s.0, t.0), (p.0, q.0))?;
    let quad = Quadrilateral {
        case,
        tau,
        mu,
        m: first_concise(m, t, q)?,
        n: first_concise(m, s, p)?,
        m_prime: first_concise(m, s, q)?,
        n_prime: first_concise(m, t, p)?,
    };
    verify_quadrilateral(m, &quad, s, t)?;
    Ok(quad)
}

fn verify_quadrilateral(
    medium: &Medium,
    quad: &Quadrilateral,
    s: StateId,
    t: StateId,
) -> Result<()> {
    let sys = medium.system();
    let pairing = medium.pairing();
    let Quadrilateral {
        case,
        tau,
        mu,
        m,
        n,
        m_prime,
        n_prime,
    } = quad;
    let (tau, mu) = (*tau, *mu);
    let rt = medium.reverse(tau);
    let rm = medium.reverse(mu);
    let single = |x: TokenId| Message(vec![x]);
    let cat = |parts: &[&Message]| parts.iter().fold(Message::empty(), |acc, p| acc.concat(p));
    let concise = |at: StateId, msg: &Message| is_concise(sys, at, msg, pairing);
    let (lm, ln, lmp, lnp) = (m.len(), n.len(), m_prime.len(), n_prime.len());
    let (tau_m, mu_m, rt_m, rm_m) = (single(tau), single(mu), single(rt), single(rm));
    let ok = match case {
        EdgePairCase::Case1 | EdgePairCase::Case2 | EdgePairCase::Case3 | EdgePairCase::Case4 => {
            let (at, path, same_as) = match case {
                EdgePairCase::Case1 => (t, cat(&[&rt_m, n, &mu_m]), m),
                EdgePairCase::Case2 => (s, cat(&[&tau_m, m, &rm_m]), n),
                EdgePairCase::Case3 => (s, cat(&[&tau_m, n_prime, &mu_m]), m_prime),
                _ => (t, cat(&[&rt_m, m_prime, &rm_m]), n_prime),
            };
            concise(at, &path)
                && content(&path) == content(same_as)
                && tau != mu
                && tau != rm
                && content(m) != content(n)
                && lm + ln == lmp + lnp
        }
        EdgePairCase::Case5 => {
            let a = cat(&[&tau_m, n_prime]);
            let b = cat(&[n_prime, &mu_m]);
            let c = cat(&[&rt_m, m_prime]);
            let d = cat(&[m_prime, &rm_m]);
            concise(s, &a)
                && concise(t, &b)
                && concise(t, &c)
                && concise(s, &d)
                && content(m) == content(&b)
                && content(m) == content(&c)
                && content(n) == content(&a)
                && content(n) == content(&d)
                && tau == rm
                && content(m_prime) == content(n_prime)
                && lm + ln == lmp + lnp + 2
        }
        EdgePairCase::Case6 => {
            let a = cat(&[&tau_m, m]);
            let b = cat(&[n, &mu_m]);
            let c = cat(&[&rt_m, n]);
            let d = cat(&[m, &rm_m]);
            concise(s, &a)
                && concise(s, &b)
                && concise(t, &c)
                && concise(t, &d)
                && content(m_prime) == content(&a)
                && content(m_prime) == content(&b)
                && content(n_prime) == content(&d)
                && content(n_prime) == content(&c)
                && tau == mu
                && content(m) == content(n)
                && lm + ln + 2 == lmp + lnp
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!(
            "quadrilateral facts fail for case {}",
            case.number()
        )))
    }
}
