//! Stored subgraphs of K4 and K3,3 for every degree profile they admit.
//!
//! Masks index the canonical edge order of [`canonical_k4`] and
//! [`canonical_k33`]. Each is the highest-rank subset with its profile,
//! found by exhaustive enumeration and frozen here. Reversed profiles are
//! served by complementing.

use crate::error::{Error, Result};
use crate::gen::NamedGraph;
use crate::graph::{complement_within, DegreeProfile, EdgeSubset, Graph};

/// Edges `01 02 03 12 13 23`.
pub fn canonical_k4() -> Graph {
    NamedGraph::K4.build()
}

/// Parts `{0,1,2}` and `{3,4,5}`; edges `03 04 05 13 14 15 23 24 25`.
pub fn canonical_k33() -> Graph {
    NamedGraph::K33.build()
}

pub const K4_TUPLES: [([usize; 4], u64); 6] = [
    ([0, 0, 0, 4], 0b000000),
    ([0, 0, 2, 2], 0b100000),
    ([0, 0, 4, 0], 0b100001),
    ([0, 1, 2, 1], 0b110000),
    ([0, 2, 2, 0], 0b110010),
    ([0, 3, 0, 1], 0b111000),
];

pub const K33_TUPLES: [([usize; 4], u64); 12] = [
    ([0, 0, 0, 6], 0b000000000),
    ([0, 0, 2, 4], 0b100000000),
    ([0, 0, 4, 2], 0b100010000),
    ([0, 0, 6, 0], 0b100010001),
    ([0, 1, 2, 3], 0b110000000),
    ([0, 1, 4, 1], 0b110001000),
    ([0, 2, 2, 2], 0b110100000),
    ([0, 3, 2, 1], 0b110101000),
    ([0, 4, 0, 2], 0b110110000),
    ([0, 4, 2, 0], 0b110110001),
    ([1, 0, 3, 2], 0b111000000),
    ([1, 1, 3, 1], 0b111100000),
];

fn lookup(base: &Graph, table: &[([usize; 4], u64)], p: &DegreeProfile) -> Result<EdgeSubset> {
    let m = base.edge_count();
    let find = |q: &DegreeProfile| table.iter().find(|(t, _)| t[..] == *q.counts()).map(|e| e.1);
    if let Some(mask) = find(p) {
        return Ok(EdgeSubset::from_mask(m, mask));
    }
    if let Some(mask) = find(&p.reversed()) {
        return complement_within(base, &EdgeSubset::from_mask(m, mask));
    }
    Err(Error::NoSuchTuple(p.counts().to_vec()))
}

/// Subgraph of [`canonical_k4`] with profile `p`.
pub fn k4_table(p: &DegreeProfile) -> Result<EdgeSubset> {
    lookup(&canonical_k4(), &K4_TUPLES, p)
}

/// Subgraph of [`canonical_k33`] with profile `p`.
pub fn k33_table(p: &DegreeProfile) -> Result<EdgeSubset> {
    lookup(&canonical_k33(), &K33_TUPLES, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::profile_of;

    fn p(c: &[usize]) -> DegreeProfile {
        DegreeProfile::new(c.to_vec())
    }

    #[test]
    fn every_entry_and_reversal_reproduces_its_key() {
        for (base, table) in [(canonical_k4(), &K4_TUPLES[..]), (canonical_k33(), &K33_TUPLES[..])] {
            for (key, _) in table {
                let key = p(key);
                for q in [key.clone(), key.reversed()] {
                    let s = lookup(&base, table, &q).unwrap();
                    assert_eq!(profile_of(&base, &s).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn named_entries() {
        let k4 = canonical_k4();
        assert!(k4_table(&p(&[0, 0, 0, 4])).unwrap().is_empty());
        let tri = k4_table(&p(&[0, 3, 0, 1])).unwrap();
        assert_eq!(tri.pairs(&k4), vec![(1, 2), (1, 3), (2, 3)]);
        let star = k4_table(&p(&[1, 0, 3, 0])).unwrap();
        assert_eq!(star.pairs(&k4), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(k4_table(&p(&[1, 1, 1, 1])), Err(Error::NoSuchTuple(vec![1, 1, 1, 1])));

        let k33 = canonical_k33();
        assert!(k33_table(&p(&[0, 0, 0, 6])).unwrap().is_empty());
        let p3 = k33_table(&p(&[0, 1, 2, 3])).unwrap();
        assert_eq!(p3.count(), 2);
        let s = k33_table(&p(&[1, 1, 3, 1])).unwrap();
        assert_eq!(profile_of(&k33, &s).unwrap(), p(&[1, 1, 3, 1]));
    }
}
