use std::collections::HashMap;

use super::store::{Cid, Node, Store, BOTTOM, TOP};
use super::ReasonerError;
use crate::model::{Axiom, ConceptExpr, ConceptName};

pub type RoleBits = u128;
pub const MAX_ROLE_IDS: usize = 128;

/// A TBox prepared for the tableau. Inclusions whose left-hand side starts
/// with a name or nominal are applied only to nodes carrying that name;
/// `∃R.C ⊑ D` becomes `C ⊑ ∀R⁻.D`, and an existential inside a conjunction
/// is replaced by a fresh name `X` with `∃R.C ⊑ X`. Whatever is left is
/// added to every node.
#[derive(Clone, Debug)]
pub struct Tbox {
    pub store: Store,
    pub unfold: HashMap<Cid, Vec<Cid>>,
    /// Conjunctions of literals that trigger a concept once all are present.
    pub conj_rules: Vec<(Vec<Cid>, Cid)>,
    pub conj_index: HashMap<Cid, Vec<usize>>,
    pub universal: Vec<Cid>,
    role_incl: Vec<(u32, u32)>,
    supers: Vec<RoleBits>,
    fresh: usize,
}

impl Tbox {
    pub fn compile(axioms: &[Axiom]) -> Result<Self, ReasonerError> {
        let mut t = Tbox {
            store: Store::new(),
            unfold: HashMap::new(),
            conj_rules: Vec::new(),
            conj_index: HashMap::new(),
            universal: Vec::new(),
            role_incl: Vec::new(),
            supers: Vec::new(),
            fresh: 0,
        };
        for ax in axioms {
            match ax {
                Axiom::Concept(c, d) => {
                    let (c, d) = (t.store.concept(c), t.store.concept(d));
                    t.absorb(c, d);
                }
                Axiom::Role(r, s) => {
                    let (r, s) = (t.store.role_id(r), t.store.role_id(s));
                    t.role_incl.push((r, s));
                }
            }
        }
        t.universal.sort_unstable();
        t.universal.dedup();
        t.close_roles()?;
        Ok(t)
    }

    fn absorb(&mut self, c: Cid, d: Cid) {
        if c == BOTTOM || d == TOP || c == d {
            return;
        }
        match self.store.node(c).clone() {
            Node::Top => self.universal.push(d),
            Node::Atom(_) | Node::Nom(_) => self.unfold.entry(c).or_default().push(d),
            Node::Or(cs) => {
                for ci in cs {
                    self.absorb(ci, d);
                }
            }
            Node::Some(r, e) => {
                let body = self.store.all(r ^ 1, d);
                self.absorb(e, body);
            }
            Node::And(cs) => {
                let mut lits = Vec::new();
                let mut rest = Vec::new();
                for x in cs {
                    match self.store.node(x) {
                        Node::Atom(_) | Node::Nom(_) => lits.push(x),
                        Node::Some(..) => {
                            let name = self.fresh_name();
                            self.absorb(x, name);
                            lits.push(name);
                        }
                        _ => rest.push(x),
                    }
                }
                if lits.is_empty() {
                    let nc = self.store.negate(c);
                    let g = self.store.or([nc, d]);
                    self.universal.push(g);
                    return;
                }
                let rhs = if rest.is_empty() { d } else { self.or_not(&rest, d) };
                if lits.len() == 1 {
                    self.unfold.entry(lits[0]).or_default().push(rhs);
                } else {
                    let k = self.conj_rules.len();
                    for &l in &lits {
                        self.conj_index.entry(l).or_default().push(k);
                    }
                    self.conj_rules.push((lits, rhs));
                }
            }
            _ => {
                let nc = self.store.negate(c);
                let g = self.store.or([nc, d]);
                self.universal.push(g);
            }
        }
    }

    /// A concept name no axiom mentions, standing for an existential on a
    /// left-hand side.
    fn fresh_name(&mut self) -> Cid {
        self.fresh += 1;
        let name = ConceptName::new(&format!("#abs{}", self.fresh));
        self.store.concept(&ConceptExpr::Atom(name))
    }

    /// `¬(⊓ rest) ⊔ d`.
    fn or_not(&mut self, rest: &[Cid], d: Cid) -> Cid {
        let conj = self.store.and(rest.iter().copied());
        let n = self.store.negate(conj);
        self.store.or([n, d])
    }

    /// Reflexive-transitive closure of the role hierarchy, closed under
    /// inverses.
    fn close_roles(&mut self) -> Result<(), ReasonerError> {
        let n = 2 * self.store.role_name_count();
        if n > MAX_ROLE_IDS {
            return Err(ReasonerError::TooManyRoles(n / 2));
        }
        let mut sup: Vec<RoleBits> = (0..n).map(|r| 1 << r).collect();
        for &(r, s) in &self.role_incl {
            sup[r as usize] |= 1 << s;
            sup[(r ^ 1) as usize] |= 1 << (s ^ 1);
        }
        loop {
            let mut changed = false;
            for r in 0..n {
                let mut acc = sup[r];
                for s in bits(sup[r]) {
                    acc |= sup[s];
                }
                if acc != sup[r] {
                    sup[r] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.supers = sup;
        Ok(())
    }

    /// Every role that contains one of `roles`.
    pub fn closure(&self, roles: RoleBits) -> RoleBits {
        bits(roles).fold(0, |acc, r| acc | self.supers.get(r).copied().unwrap_or(1 << r))
    }
}

pub fn bits(mut m: RoleBits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

const EVEN: RoleBits = 0x5555_5555_5555_5555_5555_5555_5555_5555;

/// Swaps every role id with its inverse.
pub fn invert(b: RoleBits) -> RoleBits {
    ((b & EVEN) << 1) | ((b >> 1) & EVEN)
}
