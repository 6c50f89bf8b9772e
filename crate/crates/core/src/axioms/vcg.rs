use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::model::{QueryAtom, Variable};

/// The variable-connectedness graph of a set of atoms: atoms are nodes and
/// two atoms are adjacent when they share a variable.
pub struct Vcg {
    pub atoms: Vec<QueryAtom>,
    adj: Vec<BTreeSet<usize>>,
}

impl Vcg {
    pub fn new<'a>(atoms: impl IntoIterator<Item = &'a QueryAtom>) -> Self {
        let atoms: Vec<QueryAtom> = atoms.into_iter().cloned().collect();
        let mut by_var: BTreeMap<Variable, Vec<usize>> = BTreeMap::new();
        for (i, a) in atoms.iter().enumerate() {
            for v in a.vars().collect::<BTreeSet<_>>() {
                by_var.entry(v.clone()).or_default().push(i);
            }
        }
        let mut adj = vec![BTreeSet::new(); atoms.len()];
        for ids in by_var.values() {
            for &i in ids {
                for &j in ids {
                    if i != j {
                        adj[i].insert(j);
                    }
                }
            }
        }
        Vcg { atoms, adj }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    fn distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.atoms.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            for &j in &self.adj[i] {
                if dist[j].is_none() {
                    dist[j] = Some(dist[i].unwrap() + 1);
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// Connected components as sets of atoms, in order of their first atom.
    pub fn components(&self) -> Vec<BTreeSet<QueryAtom>> {
        let mut seen = vec![false; self.atoms.len()];
        let mut out = Vec::new();
        for i in 0..self.atoms.len() {
            if seen[i] {
                continue;
            }
            let comp: BTreeSet<QueryAtom> = self
                .distances(i)
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some())
                .map(|(j, _)| {
                    seen[j] = true;
                    self.atoms[j].clone()
                })
                .collect();
            out.push(comp);
        }
        out
    }

    /// The longest shortest path between two connected atoms.
    pub fn max_diameter(&self) -> usize {
        (0..self.atoms.len())
            .flat_map(|i| self.distances(i).into_iter().flatten())
            .max()
            .unwrap_or(0)
    }
}

pub fn components<'a>(atoms: impl IntoIterator<Item = &'a QueryAtom>) -> Vec<BTreeSet<QueryAtom>> {
    Vcg::new(atoms).components()
}

/// Whether a connected set of atoms has no cycle through atoms and variable
/// occurrences. An atom mentioning the same variable twice is a cycle, and
/// so are two atoms sharing two variables.
pub fn is_acyclic(component: &BTreeSet<QueryAtom>) -> bool {
    let vars: BTreeSet<&Variable> = component.iter().flat_map(|a| a.vars()).collect();
    let incidences: usize = component.iter().map(|a| a.vars().count()).sum();
    incidences + 1 == component.len() + vars.len()
}
