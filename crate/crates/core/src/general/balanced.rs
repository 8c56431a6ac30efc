use std::fmt;

use num_rational::Ratio;

use super::{detect_exception, solve};
use crate::connected::{target_profile, StageReport};
use crate::error::{Error, ExceptionKind, Result, Statement};
use crate::graph::{profile_of, DegreeProfile, EdgeSubset, Graph};
use crate::io::{format_ratio, ResultDocument};

/// What the caller asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementLabel {
    Fixed(Statement),
    Balanced,
    TwoRegular,
}

impl fmt::Display for StatementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementLabel::Fixed(s) => write!(f, "{s}"),
            StatementLabel::Balanced => write!(f, "BALANCED"),
            StatementLabel::TwoRegular => write!(f, "TWO_REGULAR"),
        }
    }
}

/// A finished decomposition with its recomputed profile.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub label: StatementLabel,
    /// The statement actually realized; `None` for 2-regular hosts.
    pub statement: Option<Statement>,
    pub target: DegreeProfile,
    pub subset: EdgeSubset,
    pub profile: DegreeProfile,
    pub max_deviation: Ratio<i64>,
    pub trace: Vec<String>,
    pub fallback_used: bool,
    /// One report per staged connected run, in recursion order.
    pub stages: Vec<StageReport>,
    pub special_pattern: bool,
}

impl DecompositionResult {
    pub(crate) fn build(
        g: &Graph,
        label: StatementLabel,
        statement: Option<Statement>,
        target: DegreeProfile,
        subset: EdgeSubset,
        trace: Vec<String>,
    ) -> Result<Self> {
        let profile = profile_of(g, &subset)?;
        if profile != target {
            return Err(Error::InternalStuck(format!("built {profile}, wanted {target}")));
        }
        Ok(DecompositionResult {
            label,
            statement,
            max_deviation: profile.max_deviation(),
            target,
            subset,
            profile,
            trace,
            fallback_used: false,
            stages: Vec::new(),
            special_pattern: false,
        })
    }

    pub fn to_document(&self, g: &Graph, input_name: &str) -> ResultDocument {
        ResultDocument {
            input_name: input_name.to_string(),
            n: g.order(),
            statement: self.label.to_string(),
            target_profile: self.target.counts().to_vec(),
            achieved_profile: self.profile.counts().to_vec(),
            subgraph_edges: self.subset.pairs(g),
            max_deviation: format_ratio(&self.max_deviation),
            branch_trace: self.trace.clone(),
            fallback_used: self.fallback_used,
        }
    }
}

/// [`super::decompose`] with its trace, packaged as a result.
pub fn decompose_traced(g: &Graph, s: Statement) -> Result<DecompositionResult> {
    run(g, s, StatementLabel::Fixed(s), Vec::new())
}

fn run(g: &Graph, s: Statement, label: StatementLabel, mut trace: Vec<String>) -> Result<DecompositionResult> {
    let target = target_profile(g.order(), s)?;
    let out = solve(g, s)?;
    trace.extend(out.trace);
    let mut r = DecompositionResult::build(g, label, Some(s), target, out.subset, trace)?;
    r.fallback_used = out.fallback_used;
    r.stages = out.stages;
    r.special_pattern = out.special_pattern;
    Ok(r)
}

/// Statement I for `n = 4t`, III for `n = 4t+2`, giving every degree count
/// within 1/2 of `n/4`. K4 and 3K4 fall back to II (deviation 1) and K3,3 to
/// IV (deviation 3/2); the trace records the substitution.
pub fn decompose_balanced(g: &Graph) -> Result<DecompositionResult> {
    let (s, exception) = balanced_statement(g)?;
    let trace = match exception {
        None => vec![format!("balanced:{s}")],
        Some(kind) => vec![format!("balanced:exception:{kind}:using:{s}")],
    };
    run(g, s, StatementLabel::Balanced, trace)
}

/// The statement [`decompose_balanced`] realizes on `g`, and the exception
/// that forced a substitute, if any.
pub fn balanced_statement(g: &Graph) -> Result<(Statement, Option<ExceptionKind>)> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    let s = if g.order().is_multiple_of(4) { Statement::I } else { Statement::III };
    Ok(match detect_exception(g, s)? {
        None => (s, None),
        Some(ExceptionKind::K33III) => (Statement::IV, Some(ExceptionKind::K33III)),
        Some(kind) => (Statement::II, Some(kind)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{disjoint_union, named};

    #[test]
    fn exception_deviations() {
        let dev = |g: &Graph| decompose_balanced(g).unwrap().max_deviation;
        assert_eq!(dev(&named("petersen").unwrap()), Ratio::new(1, 2));
        assert_eq!(dev(&named("k33").unwrap()), Ratio::new(3, 2));
        assert_eq!(dev(&named("k4").unwrap()), Ratio::from_integer(1));
        let k4 = named("k4").unwrap();
        assert_eq!(dev(&disjoint_union(&[k4.clone(), k4.clone(), k4.clone()])), Ratio::from_integer(1));
        assert_eq!(dev(&named("cube").unwrap()), Ratio::from_integer(0));
        let r = decompose_balanced(&k4).unwrap();
        assert_eq!(r.trace[0], "balanced:exception:K4_I:using:II");
        assert_eq!(r.statement, Some(Statement::II));
    }

    #[test]
    fn document_fields() {
        let g = named("prism").unwrap();
        let r = decompose_traced(&g, Statement::III).unwrap();
        let doc = r.to_document(&g, "prism");
        assert_eq!(doc.statement, "III");
        assert_eq!(doc.target_profile, [1, 2, 1, 2]);
        assert_eq!(doc.achieved_profile, doc.target_profile);
        assert_eq!(doc.subgraph_edges.len(), 4);
        assert_eq!(doc.max_deviation, "1/2");
    }
}
