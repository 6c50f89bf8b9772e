use std::collections::HashMap;

use crate::model::{ConceptExpr, ConceptName, Individual, Role, RoleName};

pub type Cid = u32;

/// Interned NNF concepts. Conjunctions and disjunctions are flattened,
/// sorted and deduplicated, so syntactically equal labels compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Top,
    Bottom,
    Atom(u32),
    NegAtom(u32),
    Nom(u32),
    NegNom(u32),
    And(Vec<Cid>),
    Or(Vec<Cid>),
    Some(u32, Cid),
    All(u32, Cid),
}

#[derive(Clone, Debug, Default)]
pub struct Store {
    nodes: Vec<Node>,
    index: HashMap<Node, Cid>,
    neg: Vec<Option<Cid>>,
    concepts: HashMap<ConceptName, u32>,
    individuals: HashMap<Individual, u32>,
    roles: HashMap<RoleName, u32>,
}

pub const TOP: Cid = 0;
pub const BOTTOM: Cid = 1;

impl Store {
    pub fn new() -> Self {
        let mut s = Store::default();
        s.intern(Node::Top);
        s.intern(Node::Bottom);
        s
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, c: Cid) -> &Node {
        &self.nodes[c as usize]
    }

    pub fn individual_count(&self) -> usize {
        self.individuals.len()
    }

    pub fn role_name_count(&self) -> usize {
        self.roles.len()
    }

    pub fn concept_id(&mut self, a: &ConceptName) -> u32 {
        let n = self.concepts.len() as u32;
        *self.concepts.entry(a.clone()).or_insert(n)
    }

    pub fn has_individual(&self, a: &Individual) -> bool {
        self.individuals.contains_key(a)
    }

    pub fn individual_id(&mut self, a: &Individual) -> u32 {
        let n = self.individuals.len() as u32;
        *self.individuals.entry(a.clone()).or_insert(n)
    }

    /// Role ids are `2 * name` for a name and `2 * name + 1` for its inverse.
    pub fn role_id(&mut self, r: &Role) -> u32 {
        let n = self.roles.len() as u32;
        let name = *self.roles.entry(r.name.clone()).or_insert(n);
        2 * name + r.inverse as u32
    }

    pub fn find(&self, n: &Node) -> Option<Cid> {
        self.index.get(n).copied()
    }

    pub fn intern(&mut self, n: Node) -> Cid {
        if let Some(&c) = self.index.get(&n) {
            return c;
        }
        let c = self.nodes.len() as Cid;
        self.nodes.push(n.clone());
        self.neg.push(None);
        self.index.insert(n, c);
        c
    }

    pub fn and(&mut self, parts: impl IntoIterator<Item = Cid>) -> Cid {
        let mut flat = Vec::new();
        for p in parts {
            match self.node(p) {
                Node::Top => {}
                Node::Bottom => return BOTTOM,
                Node::And(cs) => flat.extend(cs.iter().copied()),
                _ => flat.push(p),
            }
        }
        flat.sort_unstable();
        flat.dedup();
        match flat.len() {
            0 => TOP,
            1 => flat[0],
            _ => self.intern(Node::And(flat)),
        }
    }

    pub fn or(&mut self, parts: impl IntoIterator<Item = Cid>) -> Cid {
        let mut flat = Vec::new();
        for p in parts {
            match self.node(p) {
                Node::Bottom => {}
                Node::Top => return TOP,
                Node::Or(cs) => flat.extend(cs.iter().copied()),
                _ => flat.push(p),
            }
        }
        flat.sort_unstable();
        flat.dedup();
        match flat.len() {
            0 => BOTTOM,
            1 => flat[0],
            _ => self.intern(Node::Or(flat)),
        }
    }

    /// Interns the NNF of `c`.
    pub fn concept(&mut self, c: &ConceptExpr) -> Cid {
        use ConceptExpr::*;
        match c {
            Top => TOP,
            Bottom => BOTTOM,
            Atom(a) => {
                let id = self.concept_id(a);
                self.intern(Node::Atom(id))
            }
            Nominal(a) => {
                let id = self.individual_id(a);
                self.intern(Node::Nom(id))
            }
            Not(d) => {
                let inner = self.concept(d);
                self.negate(inner)
            }
            And(a, b) => {
                let (a, b) = (self.concept(a), self.concept(b));
                self.and([a, b])
            }
            Or(a, b) => {
                let (a, b) = (self.concept(a), self.concept(b));
                self.or([a, b])
            }
            Exists(r, d) => {
                let (r, d) = (self.role_id(r), self.concept(d));
                self.some(r, d)
            }
            Forall(r, d) => {
                let (r, d) = (self.role_id(r), self.concept(d));
                self.all(r, d)
            }
        }
    }

    pub fn some(&mut self, r: u32, d: Cid) -> Cid {
        if d == BOTTOM {
            BOTTOM
        } else {
            self.intern(Node::Some(r, d))
        }
    }

    pub fn all(&mut self, r: u32, d: Cid) -> Cid {
        if d == TOP {
            TOP
        } else {
            self.intern(Node::All(r, d))
        }
    }

    /// The NNF of the complement of `c`.
    pub fn negate(&mut self, c: Cid) -> Cid {
        if let Some(n) = self.neg[c as usize] {
            return n;
        }
        let n = match self.node(c).clone() {
            Node::Top => BOTTOM,
            Node::Bottom => TOP,
            Node::Atom(a) => self.intern(Node::NegAtom(a)),
            Node::NegAtom(a) => self.intern(Node::Atom(a)),
            Node::Nom(a) => self.intern(Node::NegNom(a)),
            Node::NegNom(a) => self.intern(Node::Nom(a)),
            Node::And(cs) => {
                let parts: Vec<Cid> = cs.iter().map(|&d| self.negate(d)).collect();
                self.or(parts)
            }
            Node::Or(cs) => {
                let parts: Vec<Cid> = cs.iter().map(|&d| self.negate(d)).collect();
                self.and(parts)
            }
            Node::Some(r, d) => {
                let nd = self.negate(d);
                self.all(r, nd)
            }
            Node::All(r, d) => {
                let nd = self.negate(d);
                self.some(r, nd)
            }
        };
        self.neg[c as usize] = Some(n);
        self.neg[n as usize] = Some(c);
        n
    }

    /// The complement of a literal, if already interned.
    pub fn literal_complement(&self, c: Cid) -> Option<Cid> {
        match self.node(c) {
            Node::Atom(_) | Node::NegAtom(_) | Node::Nom(_) | Node::NegNom(_) => self.neg[c as usize],
            Node::Top => Some(BOTTOM),
            Node::Bottom => Some(TOP),
            _ => None,
        }
    }

    pub fn is_literal(&self, c: Cid) -> bool {
        matches!(self.node(c), Node::Atom(_) | Node::NegAtom(_) | Node::Nom(_) | Node::NegNom(_))
    }
}
