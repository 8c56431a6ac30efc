//! Decompositions of connected cubic graphs.
//!
//! For `n = 4t` the targets are `(t,t,t,t)` (statement I, impossible for K4)
//! and `(t-1,t-1,t+1,t+1)` (II); for `n = 4t+2` they are `(t,t+1,t,t+1)`
//! (III, impossible for K3,3) and `(t-1,t,t+1,t+2)` (IV). Orders 4 and 6 use
//! explicit subgraphs. Larger graphs run three stages on an edge 2-coloring:
//! Stage 1 fixes the 3-vertices, Stage 2 the 2-vertices, Stage 3 the
//! 1-vertices. One blocked Stage-2 configuration on 14 vertices needs a
//! dedicated construction.

mod fallback;
mod special;
mod stages;

pub use fallback::{fallback_search, DEFAULT_BUDGET, FALLBACK_MAX_ORDER};
pub use special::{find_pendant_subdivided_k4, is_pendant_subdivided_k4, special_14_construction};
pub use stages::{ColoringState, StageReport};

use crate::error::{Error, ExceptionKind, Result, Statement};
use crate::graph::{classify_small, DegreeProfile, EdgeSubset, Graph, SmallClass};

/// The degree profile `(n3, n2, n1, n0)` that statement `s` asks for on `n`
/// vertices.
pub fn target_profile(n: usize, s: Statement) -> Result<DegreeProfile> {
    if !s.applies_to(n) {
        return Err(Error::ParityMismatch { n, statement: s });
    }
    let t = (n / 4) as i64;
    let counts = match s {
        Statement::I => [t, t, t, t],
        Statement::II => [t - 1, t - 1, t + 1, t + 1],
        Statement::III => [t, t + 1, t, t + 1],
        Statement::IV => [t - 1, t, t + 1, t + 2],
    };
    if counts.iter().any(|&c| c < 0) {
        return Err(Error::InvalidOrder(n));
    }
    Ok(DegreeProfile::new(counts.iter().map(|&c| c as usize).collect()))
}

/// A connected decomposition plus how it was obtained.
#[derive(Debug, Clone)]
pub struct ConnectedOutcome {
    pub subset: EdgeSubset,
    pub trace: Vec<String>,
    pub fallback_used: bool,
    /// Present when the staged construction ran.
    pub stages: Option<StageReport>,
    /// The instance blocked in Stage 2 in the 14-vertex configuration.
    pub special_pattern: bool,
}

/// A subgraph of the connected cubic graph `g` realizing
/// `target_profile(n, s)`.
pub fn decompose_connected(g: &Graph, s: Statement) -> Result<EdgeSubset> {
    decompose_connected_traced(g, s).map(|o| o.subset)
}

pub fn decompose_connected_traced(g: &Graph, s: Statement) -> Result<ConnectedOutcome> {
    let class = classify_small(g)?;
    let target = target_profile(g.order(), s)?;
    let outcome = |subset, trace: &str| ConnectedOutcome {
        subset,
        trace: vec![trace.to_string()],
        fallback_used: false,
        stages: None,
        special_pattern: false,
    };
    match (class, s) {
        (SmallClass::K4, Statement::I) => Err(Error::ExceptionGraph(ExceptionKind::K4I)),
        (SmallClass::K33, Statement::III) => Err(Error::ExceptionGraph(ExceptionKind::K33III)),
        (SmallClass::K4, _) => {
            Ok(outcome(EdgeSubset::from_indices(g.edge_count(), [0]), "connected:base:k4:single-edge"))
        }
        (SmallClass::K33 | SmallClass::Prism, Statement::IV) => {
            // two edges at vertex 0 form a P3
            let s = EdgeSubset::from_indices(g.edge_count(), g.incident(0)[..2].iter().copied());
            Ok(outcome(s, "connected:base:p3"))
        }
        (SmallClass::Prism, _) => {
            let tri = g.shortest_cycle().expect("the prism has triangles");
            let mut s = EdgeSubset::empty(g.edge_count());
            for i in 0..3 {
                s.insert(g.edge_index(tri[i], tri[(i + 1) % 3]).unwrap());
            }
            let pendant = g.neighbors(tri[0]).iter().position(|x| !tri.contains(x)).unwrap();
            s.insert(g.incident(tri[0])[pendant]);
            Ok(outcome(s, "connected:base:triangle+pendant"))
        }
        _ => staged(g, s, &target),
    }
}

fn staged(g: &Graph, s: Statement, target: &DegreeProfile) -> Result<ConnectedOutcome> {
    let c = target.counts();
    let mut st = ColoringState::new(g, [c[0], c[1], c[2], c[3]]);
    let mut trace = vec!["connected:stages".to_string()];
    let run = |st: &mut ColoringState| -> Result<()> {
        st.stage1_grow_v3()?;
        st.stage2_fill_v2()?;
        st.stage3_fill_v1()
    };
    let failure = match run(&mut st) {
        Ok(()) if st.reached_targets() => {
            return Ok(ConnectedOutcome {
                subset: st.colors().clone(),
                trace,
                fallback_used: false,
                stages: Some(st.report),
                special_pattern: false,
            })
        }
        Ok(()) => Error::InternalStuck(format!("stages ended at {:?}", st.sizes_desc())),
        Err(e) => e,
    };

    let zero = st.set(0);
    let special_pattern = matches!(failure, Error::SpecialCaseNeeded)
        && s == Statement::III
        && g.order() == 14
        && st.size(2) + 1 == target.counts()[1]
        && is_pendant_subdivided_k4(g, &zero);
    if special_pattern {
        trace.push("connected:stage2-blocked:special14".into());
        let subset = special::special_14_from(g, &zero)?;
        return Ok(ConnectedOutcome {
            subset,
            trace,
            fallback_used: false,
            stages: Some(st.report),
            special_pattern: true,
        });
    }

    trace.push(format!("connected:fallback:{failure}"));
    let subset = fallback_search(g, target, DEFAULT_BUDGET)?
        .ok_or_else(|| Error::InternalStuck(format!("target {target} unreachable: {failure}")))?;
    Ok(ConnectedOutcome { subset, trace, fallback_used: true, stages: Some(st.report), special_pattern: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::named;
    use crate::graph::profile_of;

    fn counts(g: &Graph, s: &EdgeSubset) -> Vec<usize> {
        profile_of(g, s).unwrap().counts().to_vec()
    }

    #[test]
    fn targets() {
        assert_eq!(target_profile(8, Statement::I).unwrap().counts(), &[2, 2, 2, 2]);
        assert_eq!(target_profile(10, Statement::IV).unwrap().counts(), &[1, 2, 3, 4]);
        assert_eq!(target_profile(12, Statement::II).unwrap().counts(), &[2, 2, 4, 4]);
        assert_eq!(target_profile(14, Statement::III).unwrap().counts(), &[3, 4, 3, 4]);
        assert_eq!(target_profile(8, Statement::III), Err(Error::ParityMismatch { n: 8, statement: Statement::III }));
        assert_eq!(target_profile(2, Statement::IV), Err(Error::InvalidOrder(2)));
    }

    #[test]
    fn base_cases() {
        let k4 = named("k4").unwrap();
        assert_eq!(counts(&k4, &decompose_connected(&k4, Statement::II).unwrap()), [0, 0, 2, 2]);
        assert_eq!(decompose_connected(&k4, Statement::I), Err(Error::ExceptionGraph(ExceptionKind::K4I)));
        let prism = named("prism").unwrap();
        let tri = decompose_connected(&prism, Statement::III).unwrap();
        assert_eq!(counts(&prism, &tri), [1, 2, 1, 2]);
        assert_eq!(tri.count(), 4);
        assert_eq!(counts(&prism, &decompose_connected(&prism, Statement::IV).unwrap()), [0, 1, 2, 3]);
        let k33 = named("k33").unwrap();
        assert_eq!(counts(&k33, &decompose_connected(&k33, Statement::IV).unwrap()), [0, 1, 2, 3]);
        assert_eq!(decompose_connected(&k33, Statement::III), Err(Error::ExceptionGraph(ExceptionKind::K33III)));
    }

    #[test]
    fn precondition_errors() {
        let two = crate::gen::disjoint_union(&[named("k4").unwrap(), named("k4").unwrap()]);
        assert_eq!(decompose_connected(&two, Statement::I), Err(Error::NotConnected));
        let c5 = crate::gen::cycles(&[5]).unwrap();
        assert_eq!(decompose_connected(&c5, Statement::I), Err(Error::NotRegular(3)));
        let p = named("petersen").unwrap();
        assert!(matches!(decompose_connected(&p, Statement::I), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn named_catalog_all_statements() {
        for name in ["cube", "petersen", "heawood", "moebius_kantor", "pappus", "desargues"] {
            let g = named(name).unwrap();
            for &s in Statement::for_order(g.order()) {
                let out = decompose_connected_traced(&g, s).unwrap();
                assert!(!out.fallback_used, "{name} {s}");
                assert_eq!(profile_of(&g, &out.subset).unwrap(), target_profile(g.order(), s).unwrap(), "{name} {s}");
                assert_eq!(out.subset, decompose_connected(&g, s).unwrap());
            }
        }
    }

    #[test]
    fn fallback_search_cases() {
        let k4 = named("k4").unwrap();
        let p = |c: &[usize]| DegreeProfile::new(c.to_vec());
        assert_eq!(fallback_search(&k4, &p(&[1, 1, 1, 1]), 1000).unwrap(), None);
        let one = fallback_search(&k4, &p(&[0, 0, 2, 2]), 1000).unwrap().unwrap();
        assert_eq!(one.count(), 1);
        let prism = named("prism").unwrap();
        let found = fallback_search(&prism, &p(&[1, 2, 1, 2]), 1000).unwrap().unwrap();
        assert_eq!(counts(&prism, &found), [1, 2, 1, 2]);
        let heawood = named("heawood").unwrap();
        assert_eq!(fallback_search(&heawood, &p(&[0, 0, 0, 14]), 0), Err(Error::BudgetExceeded(0)));
        assert!(fallback_search(&named("pappus").unwrap(), &p(&[4, 5, 4, 5]), 10).is_err());
    }
}
