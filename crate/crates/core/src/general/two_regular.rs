use num_rational::Ratio;

use super::balanced::{DecompositionResult, StatementLabel};
use crate::error::{Error, ExceptionKind, Result};
use crate::graph::{DegreeProfile, EdgeSubset, Graph};

/// Largest allowed `|m(H,k) - n/3|`: 1 when `n/3` is an odd integer, else 2/3.
pub fn two_regular_bound(n: usize) -> Ratio<i64> {
    if n.is_multiple_of(3) && (n / 3) % 2 == 1 {
        Ratio::from_integer(1)
    } else {
        Ratio::new(2, 3)
    }
}

/// 2C3 and 2C4 have no subgraph within the bound.
pub fn two_regular_exception(lengths: &[usize]) -> Option<ExceptionKind> {
    match lengths {
        [3, 3] => Some(ExceptionKind::TwoC3),
        [4, 4] => Some(ExceptionKind::TwoC4),
        _ => None,
    }
}

/// Cycles of a 2-regular graph as vertex sequences, ordered by lowest label.
fn cycle_walks(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut walks = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        let mut walk = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = g.neighbors(start)[0];
        while cur != start {
            seen[cur] = true;
            walk.push(cur);
            let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        walks.push(walk);
    }
    walks
}

/// Profiles `(n2, n1, n0)` with `n1` even inside the bound, best first.
fn candidates(n: usize) -> Vec<DegreeProfile> {
    let bound = two_regular_bound(n);
    let mut out = Vec::new();
    for n2 in 0..=n {
        for n1 in (0..=n - n2).step_by(2) {
            let p = DegreeProfile::new(vec![n2, n1, n - n2 - n1]);
            if p.max_deviation() <= bound {
                out.push(p);
            }
        }
    }
    out.sort_by_key(|p| (p.max_deviation(), p.counts()[0]));
    out
}

/// Paths around consecutive cycles for the 2-vertices, then isolated edges
/// on untouched arcs for the remaining 1-vertices. A cycle one vertex longer
/// than the remaining need is skipped when a later cycle can finish the path
/// alone; otherwise the path covers it and jumps to the next cycle.
fn build(g: &Graph, walks: &[Vec<usize>], target: &DegreeProfile) -> Option<(EdgeSubset, Vec<String>)> {
    let (n2, n1) = (target.counts()[0], target.counts()[1]);
    let mut s = EdgeSubset::empty(g.edge_count());
    let mut used = vec![false; g.order()];
    let mut trace = Vec::new();
    let mut need = n2;
    let mut ends = 0;
    let take_path = |walk: &[usize], edges: usize, s: &mut EdgeSubset, used: &mut Vec<bool>| {
        let l = walk.len();
        for i in 0..edges {
            s.insert(g.edge_index(walk[i], walk[(i + 1) % l]).unwrap());
        }
        for &v in &walk[..(edges + 1).min(l)] {
            used[v] = true;
        }
    };
    for (i, walk) in walks.iter().enumerate() {
        let l = walk.len();
        if need == 0 {
            break;
        }
        let fits_later = walks[i + 1..].iter().any(|w| w.len() == need || w.len() >= need + 2);
        if need == l - 1 && fits_later {
            trace.push(format!("skip@{}", walk[0]));
            continue;
        }
        if need >= l {
            take_path(walk, l, &mut s, &mut used);
            need -= l;
            trace.push(format!("cycle@{}", walk[0]));
        } else if need <= l - 2 {
            take_path(walk, need + 1, &mut s, &mut used);
            ends += 2;
            trace.push(format!("path{}@{}", need + 1, walk[0]));
            need = 0;
        } else {
            // need = l - 1: cover the cycle with a path and carry one over
            take_path(walk, l - 1, &mut s, &mut used);
            ends += 2;
            trace.push(format!("path{}@{}:jump", l - 1, walk[0]));
            need = 1;
        }
    }
    if need > 0 || ends > n1 {
        return None;
    }
    let mut extra = n1 - ends;
    for walk in walks {
        let l = walk.len();
        let mut i = 0;
        while extra > 0 && i < l {
            let (a, b) = (walk[i], walk[(i + 1) % l]);
            if !used[a] && !used[b] {
                s.insert(g.edge_index(a, b).unwrap());
                used[a] = true;
                used[b] = true;
                extra -= 2;
                i += 2;
            } else {
                i += 1;
            }
        }
    }
    if extra > 0 {
        return None;
    }
    if n1 > ends {
        trace.push(format!("isolated-edges:{}", (n1 - ends) / 2));
    }
    Some((s, trace))
}

/// A spanning subgraph of the 2-regular `g` whose degree counts
/// `(n2, n1, n0)` lie within [`two_regular_bound`] of `n/3`.
pub fn decompose_two_regular(g: &Graph) -> Result<DecompositionResult> {
    if !g.is_regular(2) {
        return Err(Error::NotRegular(2));
    }
    let walks = cycle_walks(g);
    let mut lengths: Vec<usize> = walks.iter().map(Vec::len).collect();
    lengths.sort_unstable();
    if let Some(kind) = two_regular_exception(&lengths) {
        return Err(Error::ExceptionGraph(kind));
    }
    let mut trace = Vec::new();
    for target in candidates(g.order()) {
        if let Some((s, steps)) = build(g, &walks, &target) {
            trace.push(format!("two-regular:{target}"));
            trace.extend(steps);
            return DecompositionResult::build(g, StatementLabel::TwoRegular, None, target, s, trace);
        }
        trace.push(format!("two-regular:{target}:greedy-missed"));
    }
    Err(Error::InternalStuck(format!("no 2-regular target met for cycles {lengths:?}")))
}
