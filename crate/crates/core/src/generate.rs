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

//! Seeded generators for set families and embeddings between their media.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::wgfamily::{add_token_name, is_well_graded, remove_token_name, ElementSet, SetFamily};

/// `a`, `b`, … for the first 26 elements, then `e26`, `e27`, ….
pub fn element_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

fn ground(n: usize) -> Vec<String> {
    (0..n).map(element_name).collect()
}

/// All subsets of an `n`-element ground set, by size then lexicographically.
pub fn hypercube(n: usize) -> Result<SetFamily> {
    if n == 0 || n > 16 {
        return Err(Error::Parse(format!(
            "hypercube dimension must be in 1..=16, got {n}"
        )));
    }
    let mut members: Vec<ElementSet> = (0u32..1 << n)
        .map(|bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
        .collect();
    members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    SetFamily::from_indices(ground(n), members)
}

/// The cycle on `len` states: add `k = len/2` elements one by one, then
/// remove them in the same order.
pub fn cycle(len: usize) -> Result<SetFamily> {
    if len < 4 || len % 2 == 1 {
        return Err(Error::Parse(format!(
            "cycle length must be even and at least 4, got {len}"
        )));
    }
    let k = len / 2;
    let members = (0..k)
        .map(|i| (0..i).collect())
        .chain((0..k).map(|i| (i..k).collect()))
        .collect();
    SetFamily::from_indices(ground(k), members)
}

/// The path on `n` states `∅, {a}, {a,b}, …`.
pub fn path(n: usize) -> Result<SetFamily> {
    if n < 2 {
        return Err(Error::TooFewMembers(n));
    }
    SetFamily::from_indices(ground(n - 1), (0..n).map(|i| (0..i).collect()).collect())
}

fn random_subset<R: Rng>(n: usize, rng: &mut R) -> ElementSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

fn flip(set: &ElementSet, x: usize) -> ElementSet {
    let mut s = set.clone();
    if !s.remove(&x) {
        s.insert(x);
    }
    s
}

/// Grows a family from a random subset: with probability `p` a random
/// member gains a Hamming neighbor, otherwise a uniform subset is added.
/// Produces well-graded and non-well-graded families alike. Returns fewer
/// than `size` members only if the ground set is too small.
pub fn random_family<R: Rng>(n: usize, size: usize, p: f64, rng: &mut R) -> Result<SetFamily> {
    let size = size.min(1 << n.min(20));
    if n == 0 || size < 2 {
        return Err(Error::TooFewMembers(size));
    }
    let mut members = vec![random_subset(n, rng)];
    let mut seen: BTreeSet<ElementSet> = members.iter().cloned().collect();
    while members.len() < size {
        let candidate = if rng.gen_bool(p) {
            let base = members.choose(rng).expect("non-empty");
            flip(base, rng.gen_range(0..n))
        } else {
            random_subset(n, rng)
        };
        if seen.insert(candidate.clone()) {
            members.push(candidate);
        }
    }
    SetFamily::from_indices(ground(n), members)
}

/// Grows a well-graded family by Hamming-neighbor steps that keep it
/// well-graded. Stops early when no extension is found in a bounded number
/// of tries, so the result may have fewer than `size` members.
pub fn random_wg_family<R: Rng>(n: usize, size: usize, rng: &mut R) -> Result<SetFamily> {
    let size = size.min(1 << n.min(20));
    if n == 0 || size < 2 {
        return Err(Error::TooFewMembers(size));
    }
    let start = random_subset(n, rng);
    let first = flip(&start, rng.gen_range(0..n));
    let mut family = SetFamily::from_indices(ground(n), vec![start, first])?;
    let mut misses = 0;
    while family.len() < size && misses < 50 * size {
        let base = family.members().choose(rng).expect("non-empty").clone();
        let candidate = flip(&base, rng.gen_range(0..n));
        if family.position(&candidate).is_some() {
            misses += 1;
            continue;
        }
        let mut members = family.members().to_vec();
        members.push(candidate);
        let grown = SetFamily::from_indices(ground(n), members)?;
        if is_well_graded(&grown) {
            family = grown;
        } else {
            misses += 1;
        }
    }
    Ok(family)
}

/// A family embedded into a product family: the target is
/// `{π(S) ∪ D | S ∈ source, D ∈ extra}` over a ground that interleaves the
/// renamed source elements with the extra ones, and each source member `S`
/// maps to `π(S) ∪ base`.
#[derive(Clone, Debug)]
pub struct FamilyEmbedding {
    pub source: SetFamily,
    pub target: SetFamily,
    /// Target member index of each source member.
    pub members: Vec<usize>,
    /// Target ground index of each source ground element.
    pub elements: Vec<usize>,
}

impl FamilyEmbedding {
    /// Target token name for a source token of the representing system.
    pub fn token_image(&self, token: &str) -> Option<String> {
        let (sign, x) = token.split_at(1);
        let i = self.source.ground().iter().position(|g| g == x)?;
        let y = &self.target.ground()[self.elements[i]];
        match sign {
            "+" => Some(add_token_name(y)),
            "-" => Some(remove_token_name(y)),
            _ => None,
        }
    }
}

/// Random product embedding of a random well-graded `source` on `n`
/// elements into a family with `extra` additional elements.
pub fn random_family_embedding<R: Rng>(
    n: usize,
    size: usize,
    extra: usize,
    rng: &mut R,
) -> Result<FamilyEmbedding> {
    let source = random_wg_family(n, size, rng)?;
    let factor: Vec<ElementSet> = if extra == 0 {
        vec![ElementSet::new()]
    } else {
        random_wg_family(extra, 4, rng)?.members().to_vec()
    };
    let total = n + extra;
    let mut slots: Vec<usize> = (0..total).collect();
    slots.shuffle(rng);
    let (elements, extra_slots) = slots.split_at(n);
    let target_ground: Vec<String> = (0..total).map(|i| format!("t{i}")).collect();
    let lift = |s: &ElementSet, d: &ElementSet| -> ElementSet {
        s.iter()
            .map(|&x| elements[x])
            .chain(d.iter().map(|&y| extra_slots[y]))
            .collect()
    };
    let mut target = Vec::new();
    for s in source.members() {
        for d in &factor {
            target.push(lift(s, d));
        }
    }
    let base = factor.choose(rng).expect("non-empty").clone();
    let members = source
        .members()
        .iter()
        .map(|s| (lift(s, &base), s))
        .collect::<Vec<_>>();
    let target = SetFamily::from_indices(target_ground, target)?;
    let members = members
        .iter()
        .map(|(img, _)| target.position(img).expect("lifted member"))
        .collect();
    Ok(FamilyEmbedding {
        source,
        target,
        members,
        elements: elements.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wgfamily::is_connected_family;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixed_shapes() {
        assert_eq!(hypercube(3).unwrap().len(), 8);
        let c6 = cycle(6).unwrap();
        let names: Vec<String> = (0..6).map(|i| c6.member_name(i)).collect();
        assert_eq!(names, ["{}", "{a}", "{a,b}", "{a,b,c}", "{b,c}", "{c}"]);
        assert!(is_well_graded(&c6));
        assert!(is_well_graded(&path(5).unwrap()));
        assert!(cycle(5).is_err());
        assert!(path(1).is_err());
    }

    #[test]
    fn random_families_are_reproducible() {
        let a = random_family(4, 6, 0.5, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_family(4, 6, 0.5, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
    }

    #[test]
    fn random_families_cover_both_outcomes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let wg = (0..200)
            .map(|_| random_family(4, 5, 0.6, &mut rng).unwrap())
            .filter(is_well_graded)
            .count();
        assert!(wg > 10 && wg < 190, "{wg}");
    }

    #[test]
    fn random_wg_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = random_wg_family(5, 10, &mut rng).unwrap();
            assert!(is_well_graded(&f) && is_connected_family(&f));
        }
    }

    #[test]
    fn product_embeddings() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let e = random_family_embedding(3, 5, 2, &mut rng).unwrap();
        assert!(is_well_graded(&e.target));
        assert_eq!(e.members.len(), e.source.len());
        assert_eq!(
            e.token_image("+a").as_deref(),
            Some(add_token_name(&e.target.ground()[e.elements[0]]).as_str())
        );
    }
}
