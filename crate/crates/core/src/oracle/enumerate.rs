use crate::model::{ConceptName, Graph, Individual, RoleName, Vocabulary};

use super::interp::Interpretation;

enum Slot {
    Concept(usize, usize),
    Role(usize, usize, usize),
}

/// Every simple graph over a vocabulary and a fixed set of individuals.
/// Graph `k` contains the assertions whose slot bits are set in `k`.
pub struct GraphSpace {
    universe: Vec<Individual>,
    concepts: Vec<ConceptName>,
    roles: Vec<RoleName>,
    slots: Vec<Slot>,
}

impl GraphSpace {
    pub fn new(voc: &Vocabulary, universe: &[Individual]) -> Self {
        let concepts: Vec<_> = voc.concepts.iter().cloned().collect();
        let roles: Vec<_> = voc.roles.iter().cloned().collect();
        let n = universe.len();
        let mut slots = Vec::new();
        for c in 0..concepts.len() {
            for i in 0..n {
                slots.push(Slot::Concept(c, i));
            }
        }
        for r in 0..roles.len() {
            for i in 0..n {
                for j in 0..n {
                    slots.push(Slot::Role(r, i, j));
                }
            }
        }
        assert!(slots.len() < 64, "graph space too large to enumerate");
        GraphSpace {
            universe: universe.to_vec(),
            concepts,
            roles,
            slots,
        }
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn len(&self) -> u64 {
        1u64 << self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn universe(&self) -> &[Individual] {
        &self.universe
    }

    pub fn graph(&self, k: u64) -> Graph {
        let mut g = Graph::new();
        for (b, slot) in self.slots.iter().enumerate() {
            if k >> b & 1 == 0 {
                continue;
            }
            match *slot {
                Slot::Concept(c, i) => g.add_concept(self.universe[i].clone(), self.concepts[c].clone()),
                Slot::Role(r, i, j) => g.add_role(self.universe[i].clone(), self.universe[j].clone(), self.roles[r].clone()),
            }
        }
        g
    }

    /// The canonical interpretation of graph `k`, over the whole universe.
    pub fn interpretation(&self, k: u64) -> Interpretation {
        let mut it = Interpretation::new(self.universe.clone());
        for c in &self.concepts {
            it.concept_slot(c);
        }
        for r in &self.roles {
            it.role_slot(r);
        }
        for (b, slot) in self.slots.iter().enumerate() {
            if k >> b & 1 == 0 {
                continue;
            }
            match *slot {
                Slot::Concept(c, i) => it.add_concept(&self.concepts[c], i),
                Slot::Role(r, i, j) => it.add_role(&self.roles[r], i, j),
            }
        }
        it
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        (0..self.len()).map(|k| self.graph(k))
    }
}

/// All graphs over `voc` and `universe`, smallest first by bitmask.
pub fn enumerate_graphs(voc: &Vocabulary, universe: &[Individual]) -> impl Iterator<Item = Graph> {
    let space = GraphSpace::new(voc, universe);
    (0..space.len()).map(move |k| space.graph(k))
}

/// `count` fresh individual names `i1, i2, ...` that avoid `taken`.
pub fn padding(count: usize, taken: &[Individual]) -> Vec<Individual> {
    let mut out = Vec::new();
    let mut k = 1;
    while out.len() < count {
        let a = Individual::new(&format!("i{}", k));
        if !taken.contains(&a) {
            out.push(a);
        }
        k += 1;
    }
    out
}
