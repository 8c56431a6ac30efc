//! Ground truth by exhaustion: walk every spanning subgraph of a small regular
//! graph and record which degree profiles occur.
//!
//! Subsets are visited in rank order (bit `i` of the rank selects canonical
//! edge `i`). Moving from rank `r - 1` to `r` toggles the bits of
//! `r ^ (r - 1)`, two on average, so degrees are maintained incrementally.
//! Large ranges are split into contiguous chunks enumerated in parallel; the
//! merge keeps the lowest rank per profile, which makes the result identical
//! to a single sequential pass.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, EdgeSubset, Graph};

pub const DEFAULT_EDGE_CAP: usize = 26;
const PARALLEL_THRESHOLD: usize = 16;
const CHUNK_BITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchievabilityReport {
    pub graph_order: usize,
    pub degree: usize,
    /// First subset in rank order realizing each achievable profile.
    pub witnesses: BTreeMap<DegreeProfile, EdgeSubset>,
    pub min_max_deviation: Ratio<i64>,
}

impl AchievabilityReport {
    pub fn achievable(&self) -> impl Iterator<Item = &DegreeProfile> {
        self.witnesses.keys()
    }

    pub fn contains(&self, p: &DegreeProfile) -> bool {
        self.witnesses.contains_key(p)
    }
}

/// Profile encoding `sum_k count[k] * base^k` with `base = n + 1`.
struct Codec {
    degree: usize,
    base: u64,
    pow: Vec<u64>,
}

impl Codec {
    fn new(n: usize, degree: usize) -> Self {
        let base = n as u64 + 1;
        let pow = (0..=degree as u32 + 1).map(|k| base.pow(k)).collect();
        Codec { degree, base, pow }
    }

    fn table_len(&self) -> usize {
        self.pow[self.degree + 1] as usize
    }

    fn decode(&self, mut key: u64) -> DegreeProfile {
        let mut counts = vec![0; self.degree + 1];
        for k in 0..=self.degree {
            counts[self.degree - k] = (key % self.base) as usize;
            key /= self.base;
        }
        DegreeProfile::new(counts)
    }
}

fn check(g: &Graph, edge_cap: usize) -> Result<usize> {
    let d = match g.order() {
        0 => 0,
        _ => g.regular_degree().ok_or(Error::NotRegular(g.degree(0)))?,
    };
    let m = g.edge_count();
    if m > edge_cap || m >= 64 {
        return Err(Error::CapExceeded { edges: m, cap: edge_cap.min(63) });
    }
    Ok(d)
}

/// Walks ranks `start..end`, calling `visit(rank, key)` for each; stops early
/// when `visit` returns `false`.
fn walk(g: &Graph, codec: &Codec, start: u64, end: u64, mut visit: impl FnMut(u64, u64) -> bool) {
    let mut deg = vec![0usize; g.order()];
    for i in 0..g.edge_count() {
        if start >> i & 1 == 1 {
            let (u, v) = g.edge(i);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut key: u64 = deg.iter().map(|&k| codec.pow[k]).sum();
    let mut rank = start;
    loop {
        if !visit(rank, key) {
            return;
        }
        rank += 1;
        if rank >= end {
            return;
        }
        let mut changed = rank ^ (rank - 1);
        while changed != 0 {
            let i = changed.trailing_zeros() as usize;
            changed &= changed - 1;
            let (u, v) = g.edge(i);
            let add = rank >> i & 1 == 1;
            for w in [u, v] {
                key -= codec.pow[deg[w]];
                if add {
                    deg[w] += 1;
                } else {
                    deg[w] -= 1;
                }
                key += codec.pow[deg[w]];
            }
        }
    }
}

fn chunks(m: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << m;
    if m < PARALLEL_THRESHOLD {
        return vec![(0, total)];
    }
    let size = total >> CHUNK_BITS;
    (0..1u64 << CHUNK_BITS).map(|c| (c * size, (c + 1) * size)).collect()
}

/// Every achievable degree profile of `g`, with witnesses and the exact
/// min-max deviation.
pub fn achievable_profiles(g: &Graph, edge_cap: usize) -> Result<AchievabilityReport> {
    let d = check(g, edge_cap)?;
    let codec = Codec::new(g.order(), d);
    let m = g.edge_count();
    let partials: Vec<Vec<(u64, u64)>> = chunks(m)
        .into_par_iter()
        .map(|(start, end)| {
            let mut first = vec![u64::MAX; codec.table_len()];
            let mut found = Vec::new();
            walk(g, &codec, start, end, |rank, key| {
                let slot = &mut first[key as usize];
                if *slot == u64::MAX {
                    *slot = rank;
                    found.push((key, rank));
                }
                true
            });
            found
        })
        .collect();
    let mut best: BTreeMap<u64, u64> = BTreeMap::new();
    for (key, rank) in partials.into_iter().flatten() {
        best.entry(key).and_modify(|r| *r = (*r).min(rank)).or_insert(rank);
    }
    let witnesses: BTreeMap<DegreeProfile, EdgeSubset> =
        best.into_iter().map(|(key, rank)| (codec.decode(key), EdgeSubset::from_mask(m, rank))).collect();
    let min_max_deviation =
        witnesses.keys().map(DegreeProfile::max_deviation).min().expect("the empty subgraph is always present");
    Ok(AchievabilityReport { graph_order: g.order(), degree: d, witnesses, min_max_deviation })
}

/// Whether some spanning subgraph of `g` has profile `p`; stops at the first
/// witness.
pub fn is_achievable(g: &Graph, p: &DegreeProfile, edge_cap: usize) -> Result<bool> {
    Ok(find_witness(g, p, edge_cap)?.is_some())
}

/// Some subset realizing `p` (not necessarily the lowest rank one when the
/// search runs in parallel).
pub fn find_witness(g: &Graph, p: &DegreeProfile, edge_cap: usize) -> Result<Option<EdgeSubset>> {
    let d = check(g, edge_cap)?;
    if p.counts().len() != d + 1 || p.order() != g.order() {
        return Ok(None);
    }
    let codec = Codec::new(g.order(), d);
    let target: u64 = (0..=d).map(|k| p.count(k) as u64 * codec.pow[k]).sum();
    let m = g.edge_count();
    let stop = AtomicBool::new(false);
    let hit = chunks(m).into_par_iter().find_map_any(|(start, end)| {
        let mut found = None;
        walk(g, &codec, start, end, |rank, key| {
            if key == target {
                found = Some(rank);
                stop.store(true, Ordering::Relaxed);
                return false;
            }
            // poll the shared flag now and then
            rank & 0xfff != 0 || !stop.load(Ordering::Relaxed)
        });
        found
    });
    Ok(hit.map(|rank| EdgeSubset::from_mask(m, rank)))
}

/// `min_H max_k |m(H,k) - n/(d+1)|` over all spanning subgraphs.
pub fn min_max_deviation(g: &Graph, edge_cap: usize) -> Result<Ratio<i64>> {
    Ok(achievable_profiles(g, edge_cap)?.min_max_deviation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{disjoint_union, named};
    use crate::graph::profile_of;

    fn p(c: &[usize]) -> DegreeProfile {
        DegreeProfile::new(c.to_vec())
    }

    /// Plain loop over all masks, recomputing the profile from scratch.
    fn brute_force(g: &Graph) -> BTreeMap<DegreeProfile, u64> {
        let mut out = BTreeMap::new();
        for mask in 0..1u64 << g.edge_count() {
            let s = EdgeSubset::from_mask(g.edge_count(), mask);
            out.entry(profile_of(g, &s).unwrap()).or_insert(mask);
        }
        out
    }

    #[test]
    fn k4_profiles() {
        let g = named("k4").unwrap();
        let r = achievable_profiles(&g, DEFAULT_EDGE_CAP).unwrap();
        // empty, K2, 2K2, P3, P4, triangle, star, C4, paw, diamond, K4
        assert_eq!(r.witnesses.len(), 11);
        assert!(!r.contains(&p(&[1, 1, 1, 1])));
        assert_eq!(r.min_max_deviation, Ratio::from_integer(1));
        for (prof, w) in &r.witnesses {
            assert_eq!(&profile_of(&g, w).unwrap(), prof);
        }
    }

    #[test]
    fn incremental_walk_matches_brute_force() {
        for name in ["k4", "k33", "prism", "cube"] {
            let g = named(name).unwrap();
            let r = achievable_profiles(&g, DEFAULT_EDGE_CAP).unwrap();
            let bf = brute_force(&g);
            let ours: BTreeMap<_, _> =
                r.witnesses.iter().map(|(k, w)| (k.clone(), w.iter().map(|i| 1u64 << i).sum::<u64>())).collect();
            assert_eq!(ours, bf, "{name}");
        }
    }

    #[test]
    fn parallel_split_matches_single_pass() {
        // 18 edges crosses the parallel threshold
        let g = named("pappus").unwrap();
        let small = disjoint_union(&[named("k33").unwrap(), named("k33").unwrap()]);
        let r = achievable_profiles(&small, DEFAULT_EDGE_CAP).unwrap();
        let bf = brute_force(&small);
        assert_eq!(r.witnesses.len(), bf.len());
        for (k, w) in &r.witnesses {
            assert_eq!(EdgeSubset::from_mask(18, bf[k]), *w);
        }
        assert!(matches!(achievable_profiles(&g, DEFAULT_EDGE_CAP), Err(Error::CapExceeded { edges: 27, cap: 26 })));
    }

    #[test]
    fn exception_targets_unachievable() {
        let k4 = named("k4").unwrap();
        let two_k4 = disjoint_union(&[k4.clone(), k4.clone()]);
        assert!(!is_achievable(&two_k4, &p(&[1, 1, 3, 3]), 26).unwrap());
        let k33 = named("k33").unwrap();
        assert!(!is_achievable(&k33, &p(&[1, 2, 1, 2]), 26).unwrap());
        assert!(is_achievable(&named("prism").unwrap(), &p(&[1, 2, 1, 2]), 26).unwrap());
        assert_eq!(min_max_deviation(&k33, 26).unwrap(), Ratio::new(3, 2));
    }

    #[test]
    fn three_k4() {
        let k4 = named("k4").unwrap();
        let g = disjoint_union(&[k4.clone(), k4.clone(), k4]);
        assert!(is_achievable(&g, &p(&[2, 2, 4, 4]), 26).unwrap());
        assert!(!is_achievable(&g, &p(&[3, 3, 3, 3]), 26).unwrap());
        assert_eq!(min_max_deviation(&g, 26).unwrap(), Ratio::from_integer(1));
    }

    #[test]
    fn generic_degree() {
        // K5 is 4-regular; the oracle is not cubic-specific
        let k5 = Graph::new(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        let r = achievable_profiles(&k5, 26).unwrap();
        assert_eq!(r.degree, 4);
        assert!(r.achievable().all(|q| q.satisfies_handshake()));
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(achievable_profiles(&path, 26), Err(Error::NotRegular(1)));
    }
}
