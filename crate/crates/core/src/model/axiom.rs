use super::concept::ConceptExpr;
use super::names::{ConceptName, Individual, Marking, Role, RoleName};

/// A concept inclusion `C ⊑ D` or a role inclusion `ρ1 ⊑ ρ2`.
/// Equivalences are stored as two inclusions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Concept(ConceptExpr, ConceptExpr),
    Role(Role, Role),
}

impl Axiom {
    pub fn sub(c: ConceptExpr, d: ConceptExpr) -> Self {
        Axiom::Concept(c, d)
    }

    pub fn equiv(c: ConceptExpr, d: ConceptExpr) -> [Axiom; 2] {
        [Axiom::Concept(c.clone(), d.clone()), Axiom::Concept(d, c)]
    }

    pub fn with_marking(&self, m: Marking) -> Axiom {
        match self {
            Axiom::Concept(c, d) => Axiom::Concept(c.with_marking(m), d.with_marking(m)),
            Axiom::Role(r, s) => Axiom::Role(r.with_marking(m), s.with_marking(m)),
        }
    }

    pub fn concept_names(&self) -> Vec<ConceptName> {
        let mut out = Vec::new();
        if let Axiom::Concept(c, d) = self {
            c.concept_names(&mut out);
            d.concept_names(&mut out);
        }
        out
    }

    pub fn role_names(&self) -> Vec<RoleName> {
        let mut out = Vec::new();
        match self {
            Axiom::Concept(c, d) => {
                c.role_names(&mut out);
                d.role_names(&mut out);
            }
            Axiom::Role(r, s) => {
                out.push(r.name.clone());
                out.push(s.name.clone());
            }
        }
        out
    }

    pub fn individuals(&self) -> Vec<Individual> {
        let mut out = Vec::new();
        if let Axiom::Concept(c, d) = self {
            c.individuals(&mut out);
            d.individuals(&mut out);
        }
        out
    }
}

/// A simple SHACL shape `target ⊑ constraint` with
/// `target ::= A | ∃ρ.⊤` and `constraint ::= A | ∃ρ.A | ∀ρ.A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    target: ConceptExpr,
    constraint: ConceptExpr,
}

impl Shape {
    pub fn new(target: ConceptExpr, constraint: ConceptExpr) -> Option<Self> {
        (is_target(&target) && is_constraint(&constraint)).then_some(Shape { target, constraint })
    }

    pub fn target(&self) -> &ConceptExpr {
        &self.target
    }

    pub fn constraint(&self) -> &ConceptExpr {
        &self.constraint
    }

    pub fn to_axiom(&self) -> Axiom {
        Axiom::Concept(self.target.clone(), self.constraint.clone())
    }

    pub fn from_axiom(ax: &Axiom) -> Option<Self> {
        match ax {
            Axiom::Concept(c, d) => Shape::new(c.clone(), d.clone()),
            Axiom::Role(..) => None,
        }
    }

    pub fn with_marking(&self, m: Marking) -> Shape {
        Shape {
            target: self.target.with_marking(m),
            constraint: self.constraint.with_marking(m),
        }
    }
}

pub fn is_target(c: &ConceptExpr) -> bool {
    match c {
        ConceptExpr::Atom(_) => true,
        ConceptExpr::Exists(_, f) => **f == ConceptExpr::Top,
        _ => false,
    }
}

fn is_constraint(c: &ConceptExpr) -> bool {
    match c {
        ConceptExpr::Atom(_) => true,
        ConceptExpr::Exists(_, f) | ConceptExpr::Forall(_, f) => matches!(**f, ConceptExpr::Atom(_)),
        _ => false,
    }
}

pub fn is_simple_shacl(ax: &Axiom) -> bool {
    Shape::from_axiom(ax).is_some()
}
