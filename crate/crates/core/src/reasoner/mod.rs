//! Tableau reasoner for ALCHOI.
//!
//! Supports `⊤ ⊥ A ¬C {a} C⊓D C⊔D ∃ρ.C ∀ρ.C` over roles and inverse roles,
//! role inclusions and general concept inclusions. Nodes carrying the same
//! nominal are merged; anonymous nodes use equality anywhere blocking.
//! Disjunctions are explored depth first with chronological backtracking.

mod store;
mod tableau;
mod tbox;

use std::time::{Duration, Instant};

use crate::model::{Assertion, Axiom, ConceptExpr, Individual, KnowledgeBase, Role};

pub use tbox::Tbox;

#[derive(Clone, Debug)]
pub struct ReasonerConfig {
    pub node_budget: u64,
    pub rule_budget: u64,
    pub deadline: Option<Instant>,
    /// Try disjuncts last to first. Answers must not depend on it.
    pub reverse_branches: bool,
}

impl Default for ReasonerConfig {
    fn default() -> Self {
        ReasonerConfig {
            node_budget: 100_000,
            rule_budget: 1_000_000,
            deadline: None,
            reverse_branches: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReasonerError {
    #[error("node budget of {0} exhausted")]
    NodeBudget(u64),
    #[error("rule budget of {0} exhausted")]
    RuleBudget(u64),
    #[error("deadline reached after {0:?}")]
    Deadline(Duration),
    #[error("{0} role names exceed the supported maximum of 64")]
    TooManyRoles(usize),
}

impl ReasonerError {
    pub fn is_budget(&self) -> bool {
        !matches!(self, ReasonerError::TooManyRoles(_))
    }
}

/// A TBox compiled once and queried many times.
#[derive(Clone, Debug)]
pub struct Reasoner {
    tbox: Tbox,
    cfg: ReasonerConfig,
}

fn fresh_individual(tbox: &mut Tbox, stem: &str) -> Individual {
    (0..)
        .map(|k| Individual::new(&format!("{}{}", stem, k)))
        .find(|a| !tbox.store.has_individual(a))
        .expect("unbounded supply of names")
}

impl Reasoner {
    pub fn new(tbox: &[Axiom], cfg: ReasonerConfig) -> Result<Self, ReasonerError> {
        Ok(Reasoner {
            tbox: Tbox::compile(tbox)?,
            cfg,
        })
    }

    pub fn config(&self) -> &ReasonerConfig {
        &self.cfg
    }

    /// Whether the TBox with `abox` has a model.
    pub fn is_consistent(&self, abox: &[Assertion]) -> Result<bool, ReasonerError> {
        let mut t = self.tbox.clone();
        let mut concepts = Vec::new();
        let mut roles = Vec::new();
        for a in abox {
            match a {
                Assertion::Concept(x, c) => {
                    let xi = individual(&mut t, x);
                    concepts.push((xi, t.store.concept(c)));
                }
                Assertion::Role(x, y, p) => {
                    let (xi, yi) = (individual(&mut t, x), individual(&mut t, y));
                    roles.push((xi, yi, t.store.role_id(&Role::new(p.clone()))));
                }
            }
        }
        tableau::satisfiable(&t, &self.cfg, &concepts, &roles)
    }

    /// Whether every model of the TBox satisfies `ax`.
    pub fn entails(&self, ax: &Axiom) -> Result<bool, ReasonerError> {
        let mut t = self.tbox.clone();
        match ax {
            Axiom::Concept(c, d) => {
                if c == d {
                    return Ok(true);
                }
                let o = fresh_individual(&mut t, "_o");
                let counter = ConceptExpr::and(c.clone(), ConceptExpr::not(d.clone()));
                let oi = individual(&mut t, &o);
                let cid = t.store.concept(&counter);
                Ok(!tableau::satisfiable(&t, &self.cfg, &[(oi, cid)], &[])?)
            }
            Axiom::Role(r, s) => {
                let o1 = fresh_individual(&mut t, "_o");
                let o1i = individual(&mut t, &o1);
                let o2 = fresh_individual(&mut t, "_o");
                let o2i = individual(&mut t, &o2);
                let rid = t.store.role_id(r);
                let away = ConceptExpr::forall(s.clone(), ConceptExpr::not(ConceptExpr::Nominal(o2)));
                let cid = t.store.concept(&away);
                Ok(!tableau::satisfiable(&t, &self.cfg, &[(o1i, cid)], &[(o1i, o2i, rid)])?)
            }
        }
    }
}

fn individual(t: &mut Tbox, a: &Individual) -> u32 {
    t.store.concept(&ConceptExpr::Nominal(a.clone()));
    t.store.individual_id(a)
}

pub fn is_consistent(kb: &KnowledgeBase, cfg: &ReasonerConfig) -> Result<bool, ReasonerError> {
    Reasoner::new(&kb.tbox, cfg.clone())?.is_consistent(&kb.abox)
}

pub fn entails(tbox: &[Axiom], ax: &Axiom, cfg: &ReasonerConfig) -> Result<bool, ReasonerError> {
    Reasoner::new(tbox, cfg.clone())?.entails(ax)
}
