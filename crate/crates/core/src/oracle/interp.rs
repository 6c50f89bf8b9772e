use std::collections::BTreeSet;

use crate::model::{Assertion, Axiom, ConceptExpr, ConceptName, Graph, Individual, Role, RoleName};

/// Largest domain the bitmask evaluator supports.
pub const MAX_DOMAIN: usize = 64;

/// A finite interpretation over at most 64 elements, with concept and role
/// extensions stored as bitmasks.
#[derive(Clone, Debug)]
pub struct Interpretation {
    pub(crate) domain: Vec<Individual>,
    pub(crate) nominals: Vec<(Individual, usize)>,
    pub(crate) concepts: Vec<(ConceptName, u64)>,
    pub(crate) roles: Vec<RoleExt>,
}

#[derive(Clone, Debug)]
pub(crate) struct RoleExt {
    pub(crate) name: RoleName,
    pub(crate) succ: Vec<u64>,
    pub(crate) pred: Vec<u64>,
}

impl Interpretation {
    /// An empty interpretation where each domain element is named by the
    /// individual at its position.
    pub fn new(domain: Vec<Individual>) -> Self {
        assert!(
            domain.len() <= MAX_DOMAIN,
            "interpretation domain limited to {} elements",
            MAX_DOMAIN
        );
        let nominals = domain.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Interpretation {
            domain,
            nominals,
            concepts: Vec::new(),
            roles: Vec::new(),
        }
    }

    /// The canonical interpretation of `g`: every individual of `g` and of
    /// `extra` is its own element, names are interpreted by the assertions.
    pub fn canonical(g: &Graph, extra: impl IntoIterator<Item = Individual>) -> Self {
        let mut inds = g.individuals();
        inds.extend(extra);
        let mut it = Interpretation::new(inds.into_iter().collect());
        for (a, c) in &g.concepts {
            let i = it.index_of(a).expect("graph individual in domain");
            it.add_concept(c, i);
        }
        for (a, b, p) in &g.roles {
            let i = it.index_of(a).expect("graph individual in domain");
            let j = it.index_of(b).expect("graph individual in domain");
            it.add_role(p, i, j);
        }
        it
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    pub fn domain(&self) -> &[Individual] {
        &self.domain
    }

    pub fn full(&self) -> u64 {
        if self.domain.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.domain.len()) - 1
        }
    }

    pub fn index_of(&self, a: &Individual) -> Option<usize> {
        self.nominals.iter().find(|(b, _)| b == a).map(|(_, i)| *i)
    }

    /// Maps the individual `a` to element `i`, replacing any earlier mapping.
    pub fn set_nominal(&mut self, a: Individual, i: usize) {
        match self.nominals.iter_mut().find(|(b, _)| *b == a) {
            Some(slot) => slot.1 = i,
            None => self.nominals.push((a, i)),
        }
    }

    pub fn add_concept(&mut self, c: &ConceptName, i: usize) {
        let slot = self.concept_slot(c);
        self.concepts[slot].1 |= 1 << i;
    }

    pub fn concept_slot(&mut self, c: &ConceptName) -> usize {
        match self.concepts.iter().position(|(d, _)| d == c) {
            Some(s) => s,
            None => {
                self.concepts.push((c.clone(), 0));
                self.concepts.len() - 1
            }
        }
    }

    pub fn role_slot(&mut self, p: &RoleName) -> usize {
        match self.roles.iter().position(|r| r.name == *p) {
            Some(s) => s,
            None => {
                let n = self.domain.len();
                self.roles.push(RoleExt {
                    name: p.clone(),
                    succ: vec![0; n],
                    pred: vec![0; n],
                });
                self.roles.len() - 1
            }
        }
    }

    pub fn add_role(&mut self, p: &RoleName, i: usize, j: usize) {
        let slot = self.role_slot(p);
        self.roles[slot].succ[i] |= 1 << j;
        self.roles[slot].pred[j] |= 1 << i;
    }

    pub fn concept_mask(&self, c: &ConceptName) -> u64 {
        self.concepts.iter().find(|(d, _)| d == c).map_or(0, |(_, m)| *m)
    }

    pub(crate) fn set_concept_mask(&mut self, slot: usize, mask: u64) {
        self.concepts[slot].1 = mask;
    }

    pub(crate) fn clear_role(&mut self, slot: usize) {
        let r = &mut self.roles[slot];
        r.succ.iter_mut().for_each(|m| *m = 0);
        r.pred.iter_mut().for_each(|m| *m = 0);
    }

    /// Successors of element `i` along `r`.
    pub fn successors(&self, r: &Role, i: usize) -> u64 {
        match self.roles.iter().find(|e| e.name == r.name) {
            None => 0,
            Some(e) if r.inverse => e.pred[i],
            Some(e) => e.succ[i],
        }
    }

    fn role_rows(&self, r: &Role) -> Option<&[u64]> {
        self.roles
            .iter()
            .find(|e| e.name == r.name)
            .map(|e| if r.inverse { &e.pred[..] } else { &e.succ[..] })
    }

    /// The extension of `c` as a bitmask over the domain.
    pub fn extension(&self, c: &ConceptExpr) -> u64 {
        use ConceptExpr::*;
        match c {
            Top => self.full(),
            Bottom => 0,
            Atom(a) => self.concept_mask(a),
            Nominal(a) => self.index_of(a).map_or(0, |i| 1 << i),
            Not(d) => self.full() & !self.extension(d),
            And(a, b) => self.extension(a) & self.extension(b),
            Or(a, b) => self.extension(a) | self.extension(b),
            Exists(r, d) => {
                let inner = self.extension(d);
                match self.role_rows(r) {
                    None => 0,
                    Some(rows) => mask_where(rows, |m| m & inner != 0),
                }
            }
            Forall(r, d) => {
                let inner = self.extension(d);
                match self.role_rows(r) {
                    None => self.full(),
                    Some(rows) => mask_where(rows, |m| m & !inner == 0),
                }
            }
        }
    }

    pub fn holds(&self, ax: &Axiom) -> bool {
        match ax {
            Axiom::Concept(c, d) => self.extension(c) & !self.extension(d) == 0,
            Axiom::Role(r, s) => (0..self.len()).all(|i| self.successors(r, i) & !self.successors(s, i) == 0),
        }
    }

    pub fn satisfies(&self, a: &Assertion) -> bool {
        match a {
            Assertion::Concept(x, c) => self.index_of(x).is_some_and(|i| self.extension(c) >> i & 1 == 1),
            Assertion::Role(x, y, p) => match (self.index_of(x), self.index_of(y)) {
                (Some(i), Some(j)) => self.successors(&Role::new(p.clone()), i) >> j & 1 == 1,
                _ => false,
            },
        }
    }

    pub fn individuals_of(&self, mask: u64) -> BTreeSet<Individual> {
        (0..self.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.domain[i].clone())
            .collect()
    }
}

fn mask_where(rows: &[u64], pred: impl Fn(u64) -> bool) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(_, m)| pred(**m))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}
