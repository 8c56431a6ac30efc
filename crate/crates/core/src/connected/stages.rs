use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph};

/// Counters captured while the stages run, for invariant checks by callers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StageReport {
    pub girth: usize,
    pub n3: usize,
    /// Edges inside V3 after Stage 1.
    pub e_v3: usize,
    /// Edges leaving V3 after Stage 1.
    pub out_v3: usize,
    pub v2_after_stage1: usize,
    pub v1_after_stage1: usize,
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub stage3_steps: usize,
    /// Steps at which |V1| and |V3| had different parity. Always zero.
    pub parity_breaks: usize,
    /// Steps at which |V3| or |V2| exceeded its target once Stage 2 began.
    pub overshoots: usize,
}

/// Edge 2-coloring under construction. Color 1 edges form the subgraph;
/// `deg[v]` is the color-1 degree and `sizes[k] = |V_k|`.
#[derive(Debug, Clone)]
pub struct ColoringState<'g> {
    host: &'g Graph,
    colors: EdgeSubset,
    deg: Vec<usize>,
    sizes: [usize; 4],
    /// Target |V_k|, indexed by k.
    targets: [usize; 4],
    on_cycle: Vec<bool>,
    stage2_started: bool,
    pub report: StageReport,
}

impl<'g> ColoringState<'g> {
    /// All edges color 0. `targets` is `(n3, n2, n1, n0)`.
    pub fn new(host: &'g Graph, targets: [usize; 4]) -> Self {
        let n = host.order();
        ColoringState {
            host,
            colors: EdgeSubset::empty(host.edge_count()),
            deg: vec![0; n],
            sizes: [n, 0, 0, 0],
            targets: [targets[3], targets[2], targets[1], targets[0]],
            on_cycle: vec![false; host.edge_count()],
            stage2_started: false,
            report: StageReport::default(),
        }
    }

    pub fn colors(&self) -> &EdgeSubset {
        &self.colors
    }

    pub fn into_colors(self) -> EdgeSubset {
        self.colors
    }

    /// `|V_k|`.
    pub fn size(&self, k: usize) -> usize {
        self.sizes[k]
    }

    pub fn in_set(&self, v: usize, k: usize) -> bool {
        self.deg[v] == k
    }

    /// Vertices currently in `V_k`, ascending.
    pub fn set(&self, k: usize) -> Vec<usize> {
        (0..self.host.order()).filter(|&v| self.deg[v] == k).collect()
    }

    fn color(&mut self, e: usize) {
        debug_assert!(!self.colors.contains(e));
        self.colors.insert(e);
        let (u, v) = self.host.edge(e);
        for w in [u, v] {
            self.sizes[self.deg[w]] -= 1;
            self.deg[w] += 1;
            self.sizes[self.deg[w]] += 1;
        }
        if self.sizes[1] % 2 != self.sizes[3] % 2 {
            self.report.parity_breaks += 1;
        }
        if self.stage2_started && (self.sizes[3] > self.targets[3] || self.sizes[2] > self.targets[2]) {
            self.report.overshoots += 1;
        }
        #[cfg(debug_assertions)]
        self.check_sets();
    }

    #[cfg(debug_assertions)]
    fn check_sets(&self) {
        let deg = self.colors.degrees(self.host).unwrap();
        assert_eq!(deg, self.deg, "color-1 degrees drifted");
        let mut sizes = [0; 4];
        deg.iter().for_each(|&k| sizes[k] += 1);
        assert_eq!(sizes, self.sizes, "V_k sizes drifted");
    }

    fn color_all_at(&mut self, v: usize) {
        for &e in self.host.incident(v) {
            if !self.colors.contains(e) {
                self.color(e);
            }
        }
    }

    fn stuck(&self, what: &str) -> Error {
        Error::InternalStuck(format!("{what}; |V3..V0| = {:?}", self.sizes_desc()))
    }

    /// `(|V3|, |V2|, |V1|, |V0|)`.
    pub fn sizes_desc(&self) -> [usize; 4] {
        [self.sizes[3], self.sizes[2], self.sizes[1], self.sizes[0]]
    }

    /// Edges with both ends in `V_k`.
    pub fn inner_edges(&self, k: usize) -> usize {
        self.host.edges().iter().filter(|&&(u, v)| self.deg[u] == k && self.deg[v] == k).count()
    }

    /// Stage 1: fill V3 along a shortest cycle, then by growing the
    /// connected V3 through neighbors that have no neighbor in V2.
    pub fn stage1_grow_v3(&mut self) -> Result<()> {
        let n3 = self.targets[3];
        let cycle = self.host.shortest_cycle().ok_or_else(|| self.stuck("no cycle"))?;
        for i in 0..cycle.len() {
            let e = self
                .host
                .edge_index(cycle[i], cycle[(i + 1) % cycle.len()])
                .expect("consecutive cycle vertices are adjacent");
            self.on_cycle[e] = true;
        }
        self.report.girth = cycle.len();
        self.report.n3 = n3;
        for &v in &cycle {
            if self.sizes[3] == n3 {
                break;
            }
            let before = self.sizes[3];
            self.color_all_at(v);
            if self.sizes[3] != before + 1 {
                return Err(self.stuck("cycle vertex added more than one 3-vertex"));
            }
        }
        while self.sizes[3] < n3 {
            let host = self.host;
            let pick = (0..host.order()).find(|&v| {
                self.deg[v] != 3
                    && host.neighbors(v).iter().any(|&w| self.deg[w] == 3)
                    && host.neighbors(v).iter().all(|&w| self.deg[w] != 2)
            });
            let v = pick.ok_or_else(|| self.stuck("no vertex to grow V3"))?;
            let before = self.sizes[3];
            self.color_all_at(v);
            if self.sizes[3] != before + 1 {
                return Err(self.stuck("expansion added more than one 3-vertex"));
            }
        }
        let e_v3 = self.inner_edges(3);
        self.report.e_v3 = e_v3;
        self.report.out_v3 = 3 * n3 - 2 * e_v3;
        self.report.v2_after_stage1 = self.sizes[2];
        self.report.v1_after_stage1 = self.sizes[1];
        debug_assert!(e_v3 + 1 >= n3);
        debug_assert!(self.report.out_v3 <= n3 + 2);
        debug_assert_eq!(2 * self.sizes[2] + self.sizes[1], self.report.out_v3);
        Ok(())
    }

    /// Lowest uncolored edge joining two 1-vertices, one of which has its
    /// color-1 neighbor in V2 or V3.
    fn rule1_edge(&self) -> Option<usize> {
        let anchored = |v: usize| {
            self.host
                .incident(v)
                .iter()
                .zip(self.host.neighbors(v))
                .any(|(&e, &w)| self.colors.contains(e) && self.deg[w] >= 2)
        };
        (0..self.host.edge_count()).find(|&e| {
            let (u, v) = self.host.edge(e);
            !self.colors.contains(e) && self.deg[u] == 1 && self.deg[v] == 1 && (anchored(u) || anchored(v))
        })
    }

    /// Lowest edge between V1 and V0, cycle edges first.
    fn rule2_edge(&self) -> Option<usize> {
        let eligible = |e: usize| {
            let (u, v) = self.host.edge(e);
            (self.deg[u] == 1 && self.deg[v] == 0) || (self.deg[u] == 0 && self.deg[v] == 1)
        };
        let m = self.host.edge_count();
        (0..m).find(|&e| self.on_cycle[e] && eligible(e)).or_else(|| (0..m).find(|&e| eligible(e)))
    }

    /// Lowest 0-vertex with two 0-neighbors, with its two lowest such
    /// neighbors' edges.
    fn rule3_edges(&self) -> Option<(usize, usize)> {
        (0..self.host.order()).filter(|&v| self.deg[v] == 0).find_map(|v| {
            let mut zero = self
                .host
                .neighbors(v)
                .iter()
                .zip(self.host.incident(v))
                .filter(|(&w, _)| self.deg[w] == 0)
                .map(|(_, &e)| e);
            Some((zero.next()?, zero.next()?))
        })
    }

    /// Stage 2: raise |V2| to its target with R1 (pair up 1-vertices), R2
    /// (extend a 1-vertex into V0), and R3 (a cherry inside V0). Returns
    /// [`Error::SpecialCaseNeeded`] when none applies.
    pub fn stage2_fill_v2(&mut self) -> Result<()> {
        self.stage2_started = true;
        let [_, n1, n2, _] = self.targets;
        if self.sizes[2] > n2 {
            return Err(self.stuck("Stage 1 overfilled V2"));
        }
        while self.sizes[2] < n2 {
            if self.sizes[2] + 1 < n2 {
                if let Some(e) = self.rule1_edge() {
                    self.color(e);
                    self.report.r1 += 1;
                    continue;
                }
            }
            if let Some(e) = self.rule2_edge() {
                self.color(e);
                self.report.r2 += 1;
                continue;
            }
            if self.sizes[1] < n1 {
                if let Some((a, b)) = self.rule3_edges() {
                    self.color(a);
                    self.color(b);
                    self.report.r3 += 1;
                    continue;
                }
            }
            return Err(Error::SpecialCaseNeeded);
        }
        Ok(())
    }

    /// Stage 3: add isolated edges inside V0 until |V1| hits its target.
    pub fn stage3_fill_v1(&mut self) -> Result<()> {
        let n1 = self.targets[1];
        if self.sizes[1] > n1 || (n1 - self.sizes[1]) % 2 == 1 {
            return Err(self.stuck("Stage 3 entered with |V1| unreachable"));
        }
        while self.sizes[1] < n1 {
            let e = (0..self.host.edge_count())
                .find(|&e| {
                    let (u, v) = self.host.edge(e);
                    self.deg[u] == 0 && self.deg[v] == 0
                })
                .ok_or_else(|| self.stuck("no edge inside V0"))?;
            self.color(e);
            self.report.stage3_steps += 1;
        }
        Ok(())
    }

    pub fn reached_targets(&self) -> bool {
        self.sizes == self.targets
    }
}
