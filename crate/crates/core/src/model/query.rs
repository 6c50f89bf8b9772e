use std::collections::BTreeSet;
use std::fmt;

use super::names::{ConceptName, Individual, RoleName, Variable};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(Variable),
    Ind(Individual),
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(Variable::new(name))
    }

    pub fn ind(name: &str) -> Self {
        Term::Ind(Individual::new(name))
    }

    pub fn as_var(&self) -> Option<&Variable> {
        match self {
            Term::Var(v) => Some(v),
            Term::Ind(_) => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => v.fmt(f),
            Term::Ind(a) => a.fmt(f),
        }
    }
}

/// A query atom `u:A` or `(u,v):p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QueryAtom {
    Concept(Term, ConceptName),
    Role(Term, Term, RoleName),
}

impl QueryAtom {
    pub fn concept(t: Term, a: &str) -> Self {
        QueryAtom::Concept(t, ConceptName::new(a))
    }

    pub fn role(s: Term, o: Term, p: &str) -> Self {
        QueryAtom::Role(s, o, RoleName::new(p))
    }

    pub fn terms(&self) -> Vec<&Term> {
        match self {
            QueryAtom::Concept(t, _) => vec![t],
            QueryAtom::Role(s, o, _) => vec![s, o],
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = &Variable> {
        self.terms().into_iter().filter_map(Term::as_var)
    }

    pub fn role_name(&self) -> Option<&RoleName> {
        match self {
            QueryAtom::Role(_, _, p) => Some(p),
            QueryAtom::Concept(..) => None,
        }
    }
}

impl fmt::Display for QueryAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryAtom::Concept(t, a) => write!(f, "{} a {}", t, a),
            QueryAtom::Role(s, o, p) => write!(f, "{} {} {}", s, p, o),
        }
    }
}

pub fn vars_of<'a>(atoms: impl IntoIterator<Item = &'a QueryAtom>) -> BTreeSet<Variable> {
    atoms.into_iter().flat_map(|a| a.vars().cloned().collect::<Vec<_>>()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("template variable {0} does not occur in the pattern")]
pub struct UnboundVariable(pub Variable);

/// A simple CONSTRUCT query `H ← P`. Every template variable occurs in the
/// pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Query {
    template: BTreeSet<QueryAtom>,
    pattern: BTreeSet<QueryAtom>,
}

impl Query {
    pub fn new(
        template: impl IntoIterator<Item = QueryAtom>,
        pattern: impl IntoIterator<Item = QueryAtom>,
    ) -> Result<Self, UnboundVariable> {
        let template: BTreeSet<_> = template.into_iter().collect();
        let pattern: BTreeSet<_> = pattern.into_iter().collect();
        let pvars = vars_of(&pattern);
        if let Some(v) = vars_of(&template).into_iter().find(|v| !pvars.contains(v)) {
            return Err(UnboundVariable(v));
        }
        Ok(Query { template, pattern })
    }

    pub fn template(&self) -> &BTreeSet<QueryAtom> {
        &self.template
    }

    pub fn pattern(&self) -> &BTreeSet<QueryAtom> {
        &self.pattern
    }

    pub fn pattern_vars(&self) -> BTreeSet<Variable> {
        vars_of(&self.pattern)
    }

    pub fn individuals(&self) -> BTreeSet<Individual> {
        self.template
            .iter()
            .chain(&self.pattern)
            .flat_map(|a| a.terms())
            .filter_map(|t| match t {
                Term::Ind(a) => Some(a.clone()),
                Term::Var(_) => None,
            })
            .collect()
    }
}
