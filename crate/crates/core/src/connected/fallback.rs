use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, EdgeSubset, Graph};

pub const FALLBACK_MAX_ORDER: usize = 16;
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Backtracking over edges in canonical order. A vertex's subgraph degree is
/// final once its last incident edge is decided; the search prunes when the
/// final degrees can no longer match `target`.
///
/// `Ok(None)` means the whole space was exhausted without a match.
pub fn fallback_search(g: &Graph, target: &DegreeProfile, budget: u64) -> Result<Option<EdgeSubset>> {
    let n = g.order();
    if n > FALLBACK_MAX_ORDER {
        return Err(Error::PreconditionViolated(format!("fallback search limited to {FALLBACK_MAX_ORDER} vertices")));
    }
    let d = match n {
        0 => 0,
        _ => g.regular_degree().ok_or(Error::NotRegular(g.degree(0)))?,
    };
    if target.counts().len() != d + 1 || target.order() != n {
        return Ok(None);
    }
    let mut search = Search {
        g,
        want: (0..=d).map(|k| target.count(k)).collect(),
        deg: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        fixed: vec![0; d + 1],
        chosen: EdgeSubset::empty(g.edge_count()),
        nodes: 0,
        budget,
    };
    for v in 0..n {
        if search.open[v] == 0 {
            search.fixed[0] += 1;
        }
    }
    match search.run(0)? {
        true => Ok(Some(search.chosen)),
        false => Ok(None),
    }
}

struct Search<'g> {
    g: &'g Graph,
    /// wanted count per subgraph degree
    want: Vec<usize>,
    deg: Vec<usize>,
    /// undecided incident edges per vertex
    open: Vec<usize>,
    fixed: Vec<usize>,
    chosen: EdgeSubset,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn feasible(&self) -> bool {
        for k in 0..self.want.len() {
            if self.fixed[k] > self.want[k] {
                return false;
            }
            let reachable = (0..self.g.order())
                .filter(|&v| self.open[v] > 0 && self.deg[v] <= k && k <= self.deg[v] + self.open[v])
                .count();
            if self.fixed[k] + reachable < self.want[k] {
                return false;
            }
        }
        true
    }

    fn run(&mut self, e: usize) -> Result<bool> {
        if e == self.g.edge_count() {
            return Ok(self.fixed == self.want);
        }
        let (u, v) = self.g.edge(e);
        for take in [true, false] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.apply(e, u, v, take, true);
            if self.feasible() && self.run(e + 1)? {
                return Ok(true);
            }
            self.apply(e, u, v, take, false);
        }
        Ok(false)
    }

    fn apply(&mut self, e: usize, u: usize, v: usize, take: bool, forward: bool) {
        for w in [u, v] {
            if forward {
                if take {
                    self.deg[w] += 1;
                }
                self.open[w] -= 1;
                if self.open[w] == 0 {
                    self.fixed[self.deg[w]] += 1;
                }
            } else {
                if self.open[w] == 0 {
                    self.fixed[self.deg[w]] -= 1;
                }
                self.open[w] += 1;
                if take {
                    self.deg[w] -= 1;
                }
            }
        }
        if take {
            if forward {
                self.chosen.insert(e);
            } else {
                self.chosen.remove(e);
            }
        }
    }
}
