use super::names::{ConceptName, Individual, Marking, Role, RoleName};

/// ALCHOI concept expressions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConceptExpr {
    Top,
    Bottom,
    Atom(ConceptName),
    Nominal(Individual),
    Not(Box<ConceptExpr>),
    And(Box<ConceptExpr>, Box<ConceptExpr>),
    Or(Box<ConceptExpr>, Box<ConceptExpr>),
    Exists(Role, Box<ConceptExpr>),
    Forall(Role, Box<ConceptExpr>),
}

use ConceptExpr::*;

impl ConceptExpr {
    pub fn atom(name: &str) -> Self {
        Atom(ConceptName::new(name))
    }

    pub fn nominal(name: &str) -> Self {
        Nominal(Individual::new(name))
    }

    pub fn not(c: ConceptExpr) -> Self {
        Not(Box::new(c))
    }

    pub fn and(a: ConceptExpr, b: ConceptExpr) -> Self {
        And(Box::new(a), Box::new(b))
    }

    pub fn or(a: ConceptExpr, b: ConceptExpr) -> Self {
        Or(Box::new(a), Box::new(b))
    }

    pub fn exists(r: Role, c: ConceptExpr) -> Self {
        Exists(r, Box::new(c))
    }

    pub fn forall(r: Role, c: ConceptExpr) -> Self {
        Forall(r, Box::new(c))
    }

    /// Right-nested conjunction; `Top` when empty.
    pub fn and_all<I: IntoIterator<Item = ConceptExpr>>(items: I) -> Self {
        let mut items: Vec<_> = items.into_iter().collect();
        match items.pop() {
            None => Top,
            Some(last) => items.into_iter().rev().fold(last, |acc, c| Self::and(c, acc)),
        }
    }

    /// Right-nested disjunction; `Bottom` when empty.
    pub fn or_all<I: IntoIterator<Item = ConceptExpr>>(items: I) -> Self {
        let mut items: Vec<_> = items.into_iter().collect();
        match items.pop() {
            None => Bottom,
            Some(last) => items.into_iter().rev().fold(last, |acc, c| Self::or(c, acc)),
        }
    }

    /// Negation normal form: `Not` only in front of atoms and nominals.
    pub fn nnf(&self) -> ConceptExpr {
        match self {
            Top | Bottom | Atom(_) | Nominal(_) => self.clone(),
            Not(c) => c.negated_nnf(),
            And(a, b) => Self::and(a.nnf(), b.nnf()),
            Or(a, b) => Self::or(a.nnf(), b.nnf()),
            Exists(r, c) => Self::exists(r.clone(), c.nnf()),
            Forall(r, c) => Self::forall(r.clone(), c.nnf()),
        }
    }

    /// NNF of the complement of `self`.
    pub fn negated_nnf(&self) -> ConceptExpr {
        match self {
            Top => Bottom,
            Bottom => Top,
            Atom(_) | Nominal(_) => Self::not(self.clone()),
            Not(c) => c.nnf(),
            And(a, b) => Self::or(a.negated_nnf(), b.negated_nnf()),
            Or(a, b) => Self::and(a.negated_nnf(), b.negated_nnf()),
            Exists(r, c) => Self::forall(r.clone(), c.negated_nnf()),
            Forall(r, c) => Self::exists(r.clone(), c.negated_nnf()),
        }
    }

    pub fn is_nnf(&self) -> bool {
        match self {
            Top | Bottom | Atom(_) | Nominal(_) => true,
            Not(c) => matches!(**c, Atom(_) | Nominal(_)),
            And(a, b) | Or(a, b) => a.is_nnf() && b.is_nnf(),
            Exists(_, c) | Forall(_, c) => c.is_nnf(),
        }
    }

    pub fn map_names(
        &self,
        fc: &impl Fn(&ConceptName) -> ConceptName,
        fr: &impl Fn(&Role) -> Role,
    ) -> ConceptExpr {
        match self {
            Top | Bottom | Nominal(_) => self.clone(),
            Atom(a) => Atom(fc(a)),
            Not(c) => Self::not(c.map_names(fc, fr)),
            And(a, b) => Self::and(a.map_names(fc, fr), b.map_names(fc, fr)),
            Or(a, b) => Self::or(a.map_names(fc, fr), b.map_names(fc, fr)),
            Exists(r, c) => Self::exists(fr(r), c.map_names(fc, fr)),
            Forall(r, c) => Self::forall(fr(r), c.map_names(fc, fr)),
        }
    }

    pub fn with_marking(&self, m: Marking) -> ConceptExpr {
        self.map_names(&|a| a.with_marking(m), &|r| r.with_marking(m))
    }

    pub fn visit(&self, f: &mut impl FnMut(&ConceptExpr)) {
        f(self);
        match self {
            Top | Bottom | Atom(_) | Nominal(_) => {}
            Not(c) | Exists(_, c) | Forall(_, c) => c.visit(f),
            And(a, b) | Or(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    pub fn concept_names(&self, out: &mut Vec<ConceptName>) {
        self.visit(&mut |c| {
            if let Atom(a) = c {
                out.push(a.clone());
            }
        });
    }

    pub fn role_names(&self, out: &mut Vec<RoleName>) {
        self.visit(&mut |c| {
            if let Exists(r, _) | Forall(r, _) = c {
                out.push(r.name.clone());
            }
        });
    }

    pub fn individuals(&self, out: &mut Vec<Individual>) {
        self.visit(&mut |c| {
            if let Nominal(a) = c {
                out.push(a.clone());
            }
        });
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }
}
