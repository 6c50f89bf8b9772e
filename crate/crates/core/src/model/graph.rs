use std::collections::BTreeSet;

use super::concept::ConceptExpr;
use super::names::{ConceptName, Individual, Marking, RoleName};

/// An ABox assertion. Graphs only hold atomic concept assertions; general
/// concepts appear in knowledge bases.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assertion {
    Concept(Individual, ConceptExpr),
    Role(Individual, Individual, RoleName),
}

/// A simple RDF graph: atomic concept assertions and role assertions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    pub concepts: BTreeSet<(Individual, ConceptName)>,
    pub roles: BTreeSet<(Individual, Individual, RoleName)>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_concept(&mut self, a: Individual, c: ConceptName) {
        self.concepts.insert((a, c));
    }

    pub fn add_role(&mut self, a: Individual, b: Individual, p: RoleName) {
        self.roles.insert((a, b, p));
    }

    pub fn len(&self) -> usize {
        self.concepts.len() + self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty() && self.roles.is_empty()
    }

    pub fn union(&mut self, other: &Graph) {
        self.concepts.extend(other.concepts.iter().cloned());
        self.roles.extend(other.roles.iter().cloned());
    }

    pub fn individuals(&self) -> BTreeSet<Individual> {
        let mut out: BTreeSet<Individual> = self.concepts.iter().map(|(a, _)| a.clone()).collect();
        for (a, b, _) in &self.roles {
            out.insert(a.clone());
            out.insert(b.clone());
        }
        out
    }

    pub fn with_marking(&self, m: Marking) -> Graph {
        Graph {
            concepts: self
                .concepts
                .iter()
                .map(|(a, c)| (a.clone(), c.with_marking(m)))
                .collect(),
            roles: self
                .roles
                .iter()
                .map(|(a, b, p)| (a.clone(), b.clone(), p.with_marking(m)))
                .collect(),
        }
    }

    pub fn assertions(&self) -> Vec<Assertion> {
        let mut out: Vec<Assertion> = self
            .concepts
            .iter()
            .map(|(a, c)| Assertion::Concept(a.clone(), ConceptExpr::Atom(c.clone())))
            .collect();
        out.extend(
            self.roles
                .iter()
                .map(|(a, b, p)| Assertion::Role(a.clone(), b.clone(), p.clone())),
        );
        out
    }
}
