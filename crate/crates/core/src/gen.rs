//! Test-input supply: a catalog of named cubic graphs, seeded random cubic
//! graphs from the configuration model, disjoint unions, and cycle unions.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connected cubic graphs available by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    K4,
    K33,
    Prism,
    Cube,
    Petersen,
    Heawood,
    Pappus,
    Desargues,
    MoebiusKantor,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 9] = [
        NamedGraph::K4,
        NamedGraph::K33,
        NamedGraph::Prism,
        NamedGraph::Cube,
        NamedGraph::Petersen,
        NamedGraph::Heawood,
        NamedGraph::Pappus,
        NamedGraph::Desargues,
        NamedGraph::MoebiusKantor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K4 => "k4",
            NamedGraph::K33 => "k33",
            NamedGraph::Prism => "prism",
            NamedGraph::Cube => "cube",
            NamedGraph::Petersen => "petersen",
            NamedGraph::Heawood => "heawood",
            NamedGraph::Pappus => "pappus",
            NamedGraph::Desargues => "desargues",
            NamedGraph::MoebiusKantor => "moebius_kantor",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        let key = name.to_ascii_lowercase().replace(['-', ' '], "_");
        let key = match key.as_str() {
            "k3,3" | "k3_3" => "k33",
            "mobius_kantor" | "moebiuskantor" => "moebius_kantor",
            "q3" => "cube",
            other => other,
        };
        Self::ALL.into_iter().find(|g| g.name() == key).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn build(self) -> Graph {
        match self {
            NamedGraph::K4 => complete(4),
            NamedGraph::K33 => Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap(),
            NamedGraph::Prism => {
                Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
            }
            NamedGraph::Cube => lcf(8, &[3, -3]),
            NamedGraph::Petersen => {
                let e = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
                Graph::new(10, e).unwrap()
            }
            NamedGraph::Heawood => lcf(14, &[5, -5]),
            NamedGraph::Pappus => lcf(18, &[5, 7, -7, 7, -7, -5]),
            NamedGraph::Desargues => lcf(20, &[5, -5, 9, -9]),
            NamedGraph::MoebiusKantor => lcf(16, &[5, -5]),
        }
    }
}

/// The named graph with the given catalog name.
pub fn named(name: &str) -> Result<Graph> {
    Ok(NamedGraph::from_name(name)?.build())
}

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

/// Hamiltonian cubic graph from LCF notation: a cycle `0..n` plus chords
/// `i -- i + jumps[i mod len]`.
fn lcf(n: usize, jumps: &[i64]) -> Graph {
    let mut edges = HashSet::new();
    for i in 0..n {
        let j = (i + 1) % n;
        edges.insert((i.min(j), i.max(j)));
        let k = (i as i64 + jumps[i % jumps.len()]).rem_euclid(n as i64) as usize;
        edges.insert((i.min(k), i.max(k)));
    }
    Graph::new(n, edges).unwrap()
}

/// SplitMix64. Chosen because it is a few lines in any language, so seeds
/// reproduce outside this crate.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `0..bound` by rejection of the biased tail.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

pub const MAX_RETRIES: usize = 10_000;

/// Random cubic graph on `n` vertices from the configuration model.
///
/// Points `3v, 3v+1, 3v+2` belong to vertex `v`. Each attempt shuffles all
/// points with Fisher-Yates (`for i in (1..3n).rev(): swap(i, below(i+1))`)
/// and pairs consecutive entries; attempts with a loop or a repeated edge are
/// discarded whole.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    if n == 2 {
        return Err(Error::RetriesExhausted(0));
    }
    let mut rng = SplitMix64::new(seed);
    let mut points: Vec<usize> = (0..3 * n).collect();
    let mut seen = HashSet::with_capacity(3 * n / 2);
    'attempt: for _ in 0..MAX_RETRIES {
        points.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        for i in (1..points.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            points.swap(i, j);
        }
        seen.clear();
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0] / 3, pair[1] / 3);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
        }
        return Graph::new(n, seen.iter().copied());
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Disjoint union with labels offset cumulatively in the given order.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.order();
    }
    Graph::new(offset, edges).expect("offset parts stay simple")
}

/// Disjoint union of cycles with the given lengths, each laid out on
/// consecutive labels.
pub fn cycles(lengths: &[usize]) -> Result<Graph> {
    let mut parts = Vec::with_capacity(lengths.len());
    for &len in lengths {
        if len < 3 {
            return Err(Error::PartTooSmall(len));
        }
        parts.push(Graph::new(len, (0..len).map(|i| (i, (i + 1) % len)))?);
    }
    Ok(disjoint_union(&parts))
}
