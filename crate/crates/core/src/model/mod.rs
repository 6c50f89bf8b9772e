//! Names, concepts, axioms, graphs and queries.

mod axiom;
mod concept;
mod graph;
mod names;
mod query;

use std::collections::BTreeSet;

pub use axiom::{is_simple_shacl, is_target, Axiom, Shape};
pub use concept::ConceptExpr;
pub use graph::{Assertion, Graph};
pub use names::{ConceptName, Individual, Marking, Role, RoleName, Variable};
pub use query::{vars_of, Query, QueryAtom, Term, UnboundVariable};

/// Concept and role names of some artefact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub concepts: BTreeSet<ConceptName>,
    pub roles: BTreeSet<RoleName>,
}

impl Vocabulary {
    pub fn of_atoms<'a>(atoms: impl IntoIterator<Item = &'a QueryAtom>) -> Self {
        let mut voc = Vocabulary::default();
        for atom in atoms {
            match atom {
                QueryAtom::Concept(_, a) => {
                    voc.concepts.insert(a.clone());
                }
                QueryAtom::Role(_, _, p) => {
                    voc.roles.insert(p.clone());
                }
            }
        }
        voc
    }

    pub fn of_axioms<'a>(axioms: impl IntoIterator<Item = &'a Axiom>) -> Self {
        let mut voc = Vocabulary::default();
        for ax in axioms {
            voc.concepts.extend(ax.concept_names());
            voc.roles.extend(ax.role_names());
        }
        voc
    }

    pub fn extend(&mut self, other: &Vocabulary) {
        self.concepts.extend(other.concepts.iter().cloned());
        self.roles.extend(other.roles.iter().cloned());
    }
}

/// A TBox with an ABox.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub tbox: Vec<Axiom>,
    pub abox: Vec<Assertion>,
}

impl KnowledgeBase {
    pub fn individuals(&self) -> BTreeSet<Individual> {
        let mut out: BTreeSet<Individual> = self.tbox.iter().flat_map(|a| a.individuals()).collect();
        for a in &self.abox {
            match a {
                Assertion::Concept(x, c) => {
                    out.insert(x.clone());
                    let mut v = Vec::new();
                    c.individuals(&mut v);
                    out.extend(v);
                }
                Assertion::Role(x, y, _) => {
                    out.insert(x.clone());
                    out.insert(y.clone());
                }
            }
        }
        out
    }

    pub fn vocabulary(&self) -> Vocabulary {
        let mut voc = Vocabulary::of_axioms(&self.tbox);
        for a in &self.abox {
            match a {
                Assertion::Concept(_, c) => {
                    let mut v = Vec::new();
                    c.concept_names(&mut v);
                    voc.concepts.extend(v);
                    let mut r = Vec::new();
                    c.role_names(&mut r);
                    voc.roles.extend(r);
                }
                Assertion::Role(_, _, p) => {
                    voc.roles.insert(p.clone());
                }
            }
        }
        voc
    }
}

/// The vocabulary a query can produce: the names of its template.
pub fn query_vocabulary(q: &Query) -> Vocabulary {
    Vocabulary::of_atoms(q.template())
}
