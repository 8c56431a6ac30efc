//! Decompositions of arbitrary cubic graphs and of 2-regular graphs.
//!
//! A graph with a component `H` other than K4 and K3,3 is split into `H` and
//! the rest; each part gets a statement chosen so the profiles add up to the
//! target ([`case1_plan`]). When every component is K4 or K3,3, each
//! component gets a stored tuple: isomorphic pairs use a tuple and its
//! reversal, and a few leftover components use fixed combinations chosen by
//! the parities of the K4 and K3,3 counts.

mod balanced;
mod tables;
mod two_regular;

pub use balanced::{balanced_statement, decompose_balanced, decompose_traced, DecompositionResult, StatementLabel};
pub use tables::{canonical_k33, canonical_k4, k33_table, k4_table, K33_TUPLES, K4_TUPLES};
pub use two_regular::{decompose_two_regular, two_regular_bound, two_regular_exception};

use crate::connected::{decompose_connected_traced, target_profile, StageReport};
use crate::error::{Error, ExceptionKind, Result, Statement};
use crate::gen::disjoint_union;
use crate::graph::{classify_small, complement_within, Component, DegreeProfile, EdgeSubset, Graph, SmallClass};

/// The exception the pair `(g, s)` falls under, if any.
pub fn detect_exception(g: &Graph, s: Statement) -> Result<Option<ExceptionKind>> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    let comps = g.components();
    let classes: Vec<SmallClass> = comps.iter().map(|c| classify_small(&c.graph)).collect::<Result<_>>()?;
    let all = |cls| classes.iter().all(|&c| c == cls);
    Ok(match (s, classes.len()) {
        (Statement::I, 1) if all(SmallClass::K4) => Some(ExceptionKind::K4I),
        (Statement::I, 3) if all(SmallClass::K4) => Some(ExceptionKind::ThreeK4I),
        (Statement::II, 2) if all(SmallClass::K4) => Some(ExceptionKind::TwoK4II),
        (Statement::III, 1) if all(SmallClass::K33) => Some(ExceptionKind::K33III),
        _ => None,
    })
}

/// How one part of a split is solved: by a statement, or by the complement
/// of a statement's subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Direct(Statement),
    Complement(Statement),
}

impl Piece {
    fn label(self) -> String {
        match self {
            Piece::Direct(s) => s.to_string(),
            Piece::Complement(s) => format!("~{s}"),
        }
    }
}

/// `(rest, component)` pieces when `G` splits into a component `H` (not K4,
/// not K3,3) and `R = G - H`. `rest_is_2k4` selects the rows where `R` is
/// 2K4, which has no statement-II subgraph.
pub fn case1_plan(rest_order: usize, s: Statement, rest_is_2k4: bool) -> (Piece, Piece) {
    use Piece::*;
    use Statement::*;
    match (s, rest_order % 4, rest_is_2k4) {
        (I, 0, false) => (Direct(II), Complement(II)),
        (II, 0, false) => (Direct(II), Direct(I)),
        (I, 0, true) => (Direct(I), Direct(I)),
        (II, 0, true) => (Direct(I), Direct(II)),
        (I, _, _) => (Direct(IV), Complement(IV)),
        (II, _, _) => (Direct(IV), Complement(III)),
        (III, 0, false) => (Complement(II), Direct(IV)),
        (IV, 0, false) => (Direct(II), Direct(III)),
        (III, 0, true) => (Direct(I), Direct(III)),
        (IV, 0, true) => (Direct(I), Direct(IV)),
        (III, _, _) => (Direct(IV), Complement(II)),
        (IV, _, _) => (Direct(IV), Direct(I)),
    }
}

/// Internal result of a decomposition with provenance.
#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    pub subset: EdgeSubset,
    pub trace: Vec<String>,
    pub fallback_used: bool,
    pub stages: Vec<StageReport>,
    pub special_pattern: bool,
}

impl Outcome {
    fn new(subset: EdgeSubset, trace: Vec<String>) -> Self {
        Outcome { subset, trace, fallback_used: false, stages: Vec::new(), special_pattern: false }
    }

    fn absorb(&mut self, other: Outcome) {
        self.trace.extend(other.trace);
        self.fallback_used |= other.fallback_used;
        self.stages.extend(other.stages);
        self.special_pattern |= other.special_pattern;
    }
}

/// A subgraph of the cubic graph `g` realizing `target_profile(n, s)`.
pub fn decompose(g: &Graph, s: Statement) -> Result<EdgeSubset> {
    solve(g, s).map(|o| o.subset)
}

pub(crate) fn solve(g: &Graph, s: Statement) -> Result<Outcome> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    target_profile(g.order(), s)?;
    if let Some(kind) = detect_exception(g, s)? {
        return Err(Error::ExceptionGraph(kind));
    }
    let comps = g.components();
    match comps.len() {
        0 => Ok(Outcome::new(EdgeSubset::empty(0), vec!["empty".into()])),
        1 => {
            let c = decompose_connected_traced(g, s)?;
            Ok(Outcome {
                subset: c.subset,
                trace: c.trace,
                fallback_used: c.fallback_used,
                stages: c.stages.into_iter().collect(),
                special_pattern: c.special_pattern,
            })
        }
        _ => {
            let classes: Vec<SmallClass> = comps.iter().map(|c| classify_small(&c.graph)).collect::<Result<_>>()?;
            match classes.iter().position(|&c| !matches!(c, SmallClass::K4 | SmallClass::K33)) {
                Some(h) => split_off_component(g, &comps, h, s),
                None => small_components(g, &comps, &classes, s),
            }
        }
    }
}

fn solve_piece(g: &Graph, piece: Piece) -> Result<Outcome> {
    match piece {
        Piece::Direct(s) => solve(g, s),
        Piece::Complement(s) => {
            let mut o = solve(g, s)?;
            o.subset = complement_within(g, &o.subset)?;
            Ok(o)
        }
    }
}

/// Copies `local` (a subset of the relabeled `part`) into `into` over `host`.
fn lift(host: &Graph, part: &Graph, map: &[usize], local: &EdgeSubset, into: &mut EdgeSubset) {
    for i in local.iter() {
        let (a, b) = part.edge(i);
        let e = host.edge_index(map[a], map[b]).expect("part edges exist in the host");
        into.insert(e);
    }
}

fn split_off_component(g: &Graph, comps: &[Component], h: usize, s: Statement) -> Result<Outcome> {
    let comp = &comps[h];
    let rest_vertices: Vec<usize> = (0..g.order()).filter(|v| comp.vertices.binary_search(v).is_err()).collect();
    let (rest, rest_map) = g.induced(&rest_vertices);
    let rest_is_2k4 =
        rest.order() == 8 && rest.components().iter().all(|c| classify_small(&c.graph) == Ok(SmallClass::K4));
    let (rest_piece, comp_piece) = case1_plan(rest.order(), s, rest_is_2k4);

    let mut out = Outcome::new(
        EdgeSubset::empty(g.edge_count()),
        vec![format!(
            "case1:{s}:rest{}mod4{}:rest={}:component@{}={}",
            rest.order() % 4,
            if rest_is_2k4 { ":2K4" } else { "" },
            rest_piece.label(),
            comp.vertices[0],
            comp_piece.label()
        )],
    );
    let r = solve_piece(&rest, rest_piece)?;
    lift(g, &rest, &rest_map, &r.subset, &mut out.subset);
    out.absorb(r);
    let c = solve_piece(&comp.graph, comp_piece)?;
    lift(g, &comp.graph, &comp.map, &c.subset, &mut out.subset);
    out.absorb(c);
    Ok(out)
}

fn p(c: [usize; 4]) -> DegreeProfile {
    DegreeProfile::new(c.to_vec())
}

/// Tuple pair `(a, reversed a)` with `a + d = b + c` used for isomorphic pairs.
fn balanced_tuple(class: SmallClass) -> DegreeProfile {
    match class {
        SmallClass::K4 => p([0, 0, 2, 2]),
        _ => p([0, 1, 2, 3]),
    }
}

/// Maps canonical K4 / K3,3 labels onto a component's local labels.
fn canonical_embedding(class: SmallClass, part: &Graph) -> Vec<usize> {
    match class {
        SmallClass::K4 => (0..4).collect(),
        _ => {
            // bipartition by adjacency to vertex 0
            let b: Vec<usize> = part.neighbors(0).to_vec();
            let a: Vec<usize> = (0..6).filter(|v| !b.contains(v)).collect();
            a.into_iter().chain(b).collect()
        }
    }
}

/// Places the stored subgraph with profile `tuple` on one K4/K3,3 component.
fn place_tuple(
    g: &Graph,
    comp: &Component,
    class: SmallClass,
    tuple: &DegreeProfile,
    into: &mut EdgeSubset,
) -> Result<()> {
    let (base, local) = match class {
        SmallClass::K4 => (canonical_k4(), k4_table(tuple)?),
        SmallClass::K33 => (canonical_k33(), k33_table(tuple)?),
        _ => return Err(Error::NotIsomorphicPair),
    };
    let emb = canonical_embedding(class, &comp.graph);
    let map: Vec<usize> = emb.iter().map(|&l| comp.map[l]).collect();
    lift(g, &base, &map, &local, into);
    Ok(())
}

/// Subgraph of `h1 ∪ h2` (labels of `h2` shifted by `|h1|`) with profile
/// `(t', t', t', t')`: a tuple on `h1` and its reversal on `h2`.
pub fn pair_perfectly_balanced(h1: &Graph, h2: &Graph) -> Result<EdgeSubset> {
    let c1 = classify_small(h1)?;
    let c2 = classify_small(h2)?;
    if c1 != c2 || !matches!(c1, SmallClass::K4 | SmallClass::K33) {
        return Err(Error::NotIsomorphicPair);
    }
    let union = disjoint_union(&[h1.clone(), h2.clone()]);
    let comps = union.components();
    let tuple = balanced_tuple(c1);
    let mut s = EdgeSubset::empty(union.edge_count());
    place_tuple(&union, &comps[0], c1, &tuple, &mut s)?;
    place_tuple(&union, &comps[1], c2, &tuple.reversed(), &mut s)?;
    Ok(s)
}

/// Every component is K4 or K3,3.
fn small_components(g: &Graph, comps: &[Component], classes: &[SmallClass], s: Statement) -> Result<Outcome> {
    let k4s: Vec<usize> = (0..comps.len()).filter(|&i| classes[i] == SmallClass::K4).collect();
    let k33s: Vec<usize> = (0..comps.len()).filter(|&i| classes[i] == SmallClass::K33).collect();
    let (k, l) = (k4s.len(), k33s.len());
    use Statement::*;
    // tuples for the leading K4s and K3,3s; the rest is paired off
    let (branch, head_k4, head_k33): (&str, Vec<[usize; 4]>, Vec<[usize; 4]>) = match (k % 2, l % 2, s) {
        (0, 0, I) => ("a:pairs", vec![], vec![]),
        (0, 0, II) if l > 0 => ("a:2K33", vec![], vec![[2, 2, 2, 0], [0, 0, 2, 4]]),
        (0, 0, II) => ("a:4K4", vec![[2, 2, 0, 0], [1, 0, 3, 0], [0, 1, 2, 1], [0, 0, 0, 4]], vec![]),
        (1, 1, III) => ("b:K4+K33", vec![[2, 2, 0, 0]], vec![[0, 1, 2, 3]]),
        (1, 1, IV) => ("b:K4+K33", vec![[0, 0, 0, 4]], vec![[1, 2, 3, 0]]),
        (0, 1, IV) => ("c:K33", vec![], vec![[0, 1, 2, 3]]),
        (0, 1, III) if l > 1 => ("c:3K33", vec![], vec![[0, 0, 2, 4], [2, 3, 0, 1], [2, 2, 2, 0]]),
        (0, 1, III) => ("c:2K4+K33", vec![[0, 0, 0, 4], [1, 2, 1, 0]], vec![[2, 2, 2, 0]]),
        (1, 0, II) => ("d:K4", vec![[0, 0, 2, 2]], vec![]),
        (1, 0, I) if l == 0 => {
            ("d:5K4", vec![[0, 0, 0, 4], [0, 1, 2, 1], [1, 0, 3, 0], [2, 2, 0, 0], [2, 2, 0, 0]], vec![])
        }
        (1, 0, I) => ("d:K4+2K33", vec![[0, 0, 0, 4]], vec![[2, 2, 2, 0], [2, 2, 2, 0]]),
        _ => return Err(Error::ParityMismatch { n: g.order(), statement: s }),
    };
    if head_k4.len() > k || head_k33.len() > l {
        return Err(Error::InternalStuck(format!("case 2 split {branch} needs more components")));
    }
    let mut out = Outcome::new(EdgeSubset::empty(g.edge_count()), vec![format!("case2:{s}:{branch}")]);
    let mut assign = |ids: &[usize], head: &[[usize; 4]], class: SmallClass| -> Result<()> {
        let (lead, tail) = ids.split_at(head.len());
        for (&c, &t) in lead.iter().zip(head) {
            place_tuple(g, &comps[c], class, &p(t), &mut out.subset)?;
        }
        let tuple = balanced_tuple(class);
        for pair in tail.chunks(2) {
            place_tuple(g, &comps[pair[0]], class, &tuple, &mut out.subset)?;
            place_tuple(g, &comps[pair[1]], class, &tuple.reversed(), &mut out.subset)?;
        }
        Ok(())
    };
    assign(&k4s, &head_k4, SmallClass::K4)?;
    assign(&k33s, &head_k33, SmallClass::K33)?;
    Ok(out)
}
