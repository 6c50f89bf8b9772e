use std::time::{Duration, Instant};

use crate::axioms::{build_sigma, SigmaBundle};
use crate::candidates::{candidate_shapes, proxy_name};
use crate::model::{query_vocabulary, Axiom, ConceptExpr, Marking, Query, Shape};
use crate::par;
use crate::reasoner::{Reasoner, ReasonerConfig, ReasonerError};
use crate::syntax::{parse_query, parse_shapes, render_axioms, ParseError};

/// A query together with the shapes its input graphs satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub query: Query,
    pub shapes: Vec<Axiom>,
}

impl Problem {
    pub fn parse(query: &str, shapes: &str) -> Result<Self, ParseError> {
        Ok(Problem {
            query: parse_query(query)?,
            shapes: parse_shapes(shapes)?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeConfig {
    pub reasoner: ReasonerConfig,
    pub parallel: bool,
    /// Wall-clock limit for the whole analysis.
    pub timeout: Option<Duration>,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            reasoner: ReasonerConfig::default(),
            parallel: par::is_available(),
            timeout: None,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Reasoner(#[from] ReasonerError),
}

#[derive(Clone, Debug)]
pub struct Analysis {
    /// Entailed shapes over the result vocabulary, sorted. A shape with
    /// constraint `∀ρ.⊥` says the focus nodes have no `ρ`-edges at all.
    pub shapes: Vec<Axiom>,
    /// Candidates the reasoner could not decide within its budgets.
    pub undecided: Vec<(Shape, ReasonerError)>,
    pub sigma: SigmaBundle,
    pub candidates: usize,
}

impl Analysis {
    pub fn timed_out(&self) -> bool {
        self.undecided.iter().any(|(_, e)| matches!(e, ReasonerError::Deadline(_)))
    }
}

pub fn analyze(query: &str, shapes: &str, cfg: &AnalyzeConfig) -> Result<Analysis, AnalyzeError> {
    let problem = Problem::parse(query, shapes)?;
    Ok(analyze_problem(&problem, cfg)?)
}

/// Keeps every candidate shape whose out-marked copy the axioms entail.
pub fn analyze_problem(problem: &Problem, cfg: &AnalyzeConfig) -> Result<Analysis, ReasonerError> {
    let mut rcfg = cfg.reasoner.clone();
    if let Some(t) = cfg.timeout {
        rcfg.deadline = Some(Instant::now() + t);
    }
    let sigma = build_sigma(&problem.query, &problem.shapes);
    let reasoner = Reasoner::new(&sigma.all(), rcfg)?;
    let candidates = candidate_shapes(&problem.query);
    let verdicts = par::map(&candidates, cfg.parallel, |s| {
        reasoner.entails(&s.with_marking(Marking::Out).to_axiom())
    });

    let proxy = ConceptExpr::Atom(proxy_name(&query_vocabulary(&problem.query)));
    let mut shapes = Vec::new();
    let mut undecided = Vec::new();
    for (s, v) in candidates.iter().zip(verdicts) {
        match v {
            Ok(true) => shapes.push(match s.constraint() {
                ConceptExpr::Forall(r, f) if **f == proxy => {
                    Axiom::sub(s.target().clone(), ConceptExpr::forall(r.clone(), ConceptExpr::Bottom))
                }
                _ => s.to_axiom(),
            }),
            Ok(false) => {}
            Err(e) if e.is_budget() => undecided.push((s.clone(), e)),
            Err(e) => return Err(e),
        }
    }
    shapes.sort();
    Ok(Analysis {
        shapes,
        undecided,
        sigma,
        candidates: candidates.len(),
    })
}

/// The axiom sections, one rendered axiom per line under a header.
pub fn debug_dump(sigma: &SigmaBundle) -> String {
    let vkb: Vec<Axiom> = sigma.una.iter().chain(&sigma.cwa).cloned().collect();
    [
        ("# Σ_in", &sigma.input),
        ("# Σ_vkb", &vkb),
        ("# Σ_map", &sigma.map),
        ("# Σ_prop", &sigma.prop),
    ]
    .into_iter()
    .map(|(h, axioms)| format!("{}\n{}", h, render_axioms(axioms)))
    .collect()
}
