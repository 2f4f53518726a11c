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

// Oracles index distance matrices directly.
#![allow(clippy::needless_range_loop)]

mod common;

use media_core::token::{
    apply, content, is_concise, is_consistent, is_stepwise_effective, is_vacuous, reverse_of,
};
use media_core::wgfamily::representing_token_system;
use media_core::{fixtures, Message, ReversePairing, StateId, TokenId, TokenSystem};
use proptest::prelude::*;

fn systems() -> Vec<TokenSystem> {
    let mut out: Vec<TokenSystem> = [
        fixtures::edge_family(),
        fixtures::c4_family(),
        fixtures::c6_family(),
        fixtures::q3_family(),
        fixtures::nwg_family(),
        fixtures::disc_family(),
    ]
    .iter()
    .map(|f| representing_token_system(f).unwrap())
    .collect();
    out.extend([
        fixtures::swap_system(),
        fixtures::norev_system(),
        fixtures::tri_system(),
        fixtures::misaligned_system(),
    ]);
    out
}

fn arb_case() -> impl Strategy<Value = (usize, usize, Vec<usize>)> {
    let n = systems().len();
    (0..n, 0..64usize, prop::collection::vec(0..64usize, 0..10))
}

fn realize(sys: &TokenSystem, state: usize, tokens: &[usize]) -> (StateId, Message) {
    let s = StateId(state % sys.state_count());
    let m = Message(
        tokens
            .iter()
            .map(|t| TokenId(t % sys.token_count()))
            .collect(),
    );
    (s, m)
}

proptest! {
    #[test]
    fn message_laws((which, state, tokens) in arb_case()) {
        let sys = &systems()[which];
        let p = ReversePairing::of_system(sys);
        let (s, m) = realize(sys, state, &tokens);

        let (end, traj) = apply(sys, s, &m).unwrap();
        prop_assert_eq!(traj.len(), m.len() + 1);
        prop_assert_eq!(traj[0], s);
        prop_assert_eq!(*traj.last().unwrap(), end);

        let c = content(&m);
        prop_assert!(c.len() <= m.len());
        if is_concise(sys, s, &m, &p) {
            prop_assert_eq!(c.len(), m.len());
            prop_assert!(is_consistent(&m, &p));
            prop_assert!(is_stepwise_effective(sys, s, &m));
        }
        if is_vacuous(&m, &p) {
            prop_assert_eq!(m.len() % 2, 0);
        }
    }

    #[test]
    fn empty_message_is_identity(which in 0..10usize, state in 0..64usize) {
        let sys = &systems()[which];
        let s = StateId(state % sys.state_count());
        prop_assert_eq!(apply(sys, s, &Message::empty()).unwrap(), (s, vec![s]));
    }
}

#[test]
fn reverse_is_an_involution() {
    for sys in systems() {
        for t in sys.tokens() {
            if let Some(r) = reverse_of(&sys, t).unwrap() {
                assert_eq!(reverse_of(&sys, r).unwrap(), Some(t));
            }
        }
    }
}

#[test]
fn segments_of_concise_messages_are_concise() {
    for sys in systems() {
        let p = ReversePairing::of_system(&sys);
        for s in sys.states() {
            for (_, m) in common::concise_messages(&sys, &p, s) {
                assert!(is_concise(&sys, s, &m, &p));
                let (_, traj) = apply(&sys, s, &m).unwrap();
                for start in 0..m.len() {
                    for len in 0..=(m.len() - start) {
                        assert!(is_concise(&sys, traj[start], &m.segment(start, len), &p));
                    }
                }
            }
        }
    }
}

#[test]
fn documented_examples() {
    let c4 = representing_token_system(&fixtures::c4_family()).unwrap();
    let e = c4.state("{}").unwrap();
    let m = c4.message(["+x", "+y", "-x"]).unwrap();
    let names = |v: Vec<StateId>| {
        v.into_iter()
            .map(|s| c4.state_name(s).to_string())
            .collect::<Vec<_>>()
    };
    let (end, traj) = apply(&c4, e, &m).unwrap();
    assert_eq!(c4.state_name(end), "{y}");
    assert_eq!(names(traj), ["{}", "{x}", "{x,y}", "{y}"]);

    let p = ReversePairing::of_system(&c4);
    assert!(is_stepwise_effective(
        &c4,
        e,
        &c4.message(["+x", "-x"]).unwrap()
    ));
    assert!(!is_stepwise_effective(&c4, e, &c4.message(["-x"]).unwrap()));
    assert!(!is_concise(&c4, e, &m, &p));
    assert!(is_vacuous(
        &c4.message(["+x", "+y", "-x", "-y"]).unwrap(),
        &p
    ));

    let swap = fixtures::swap_system();
    let t = TokenId(0);
    assert_eq!(reverse_of(&swap, t).unwrap(), Some(t));
    assert!(!is_consistent(
        &Message(vec![t]),
        &ReversePairing::of_system(&swap)
    ));
    let norev = fixtures::norev_system();
    assert_eq!(reverse_of(&norev, TokenId(0)).unwrap(), None);

    let tri = fixtures::tri_system();
    let cycle = tri.message(["t1", "t2", "t3"]).unwrap();
    assert!(!is_vacuous(&cycle, &ReversePairing::of_system(&tri)));
}
