use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::time::Instant;

use super::store::{Cid, Node, BOTTOM, TOP};
use super::tbox::{invert, RoleBits, Tbox, MAX_ROLE_IDS};
use super::{ReasonerConfig, ReasonerError};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Label(Vec<u64>);

impl Label {
    fn new(n: usize) -> Self {
        Label(vec![0; n.div_ceil(64)])
    }

    fn contains(&self, c: Cid) -> bool {
        self.0[c as usize / 64] >> (c % 64) & 1 == 1
    }

    fn insert(&mut self, c: Cid) -> bool {
        let w = &mut self.0[c as usize / 64];
        let bit = 1u64 << (c % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    fn iter(&self) -> impl Iterator<Item = Cid> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let i = w.trailing_zeros();
                    w &= w - 1;
                    Some(k as u32 * 64 + i)
                }
            })
        })
    }
}

#[derive(Clone, Debug)]
struct NodeData {
    label: Label,
    parent: u32,
    blockable: bool,
    alive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Open,
    Blocked,
    Indirect,
}

/// One branch of the completion graph.
#[derive(Clone, Debug)]
struct State {
    nodes: Vec<NodeData>,
    edges: BTreeMap<(u32, u32), RoleBits>,
    adj: Vec<BTreeSet<u32>>,
    nominal: Vec<u32>,
    queue: VecDeque<(u32, Cid)>,
    edge_queue: VecDeque<(u32, u32)>,
    clash: bool,
}

pub struct Counters {
    pub nodes: u64,
    pub firings: u64,
    started: Instant,
}

enum Step {
    Done,
    Clash,
    Branch(u32, Vec<Vec<Cid>>),
}

struct Run<'a> {
    tbox: &'a Tbox,
    cfg: &'a ReasonerConfig,
    width: usize,
    counters: Counters,
}

/// Decides whether the TBox has a model with the given assertions. Every
/// interned individual gets a root node; concept assertions are
/// `(individual, concept)` and role assertions `(from, to, role id)`.
pub fn satisfiable(
    tbox: &Tbox,
    cfg: &ReasonerConfig,
    concepts: &[(u32, Cid)],
    roles: &[(u32, u32, u32)],
) -> Result<bool, ReasonerError> {
    let store = &tbox.store;
    if 2 * store.role_name_count() > MAX_ROLE_IDS {
        return Err(ReasonerError::TooManyRoles(store.role_name_count()));
    }
    let mut run = Run {
        tbox,
        cfg,
        width: store.len(),
        counters: Counters {
            nodes: 0,
            firings: 0,
            started: Instant::now(),
        },
    };
    let mut st = State {
        nodes: Vec::new(),
        edges: BTreeMap::new(),
        adj: Vec::new(),
        nominal: Vec::new(),
        queue: VecDeque::new(),
        edge_queue: VecDeque::new(),
        clash: false,
    };
    // Every individual gets a root node labelled with its nominal.
    for i in 0..store.individual_count() {
        let n = run.new_node(&mut st, NONE, false)?;
        st.nominal.push(n);
        let nom = store.find(&Node::Nom(i as u32)).expect("nominal interned with its individual");
        run.add(&mut st, n, nom)?;
    }
    for &(a, c) in concepts {
        let n = st.nominal[a as usize];
        run.add(&mut st, n, c)?;
    }
    for &(a, b, r) in roles {
        let (x, y) = (st.nominal[a as usize], st.nominal[b as usize]);
        run.add_edge(&mut st, x, y, 1 << r);
    }
    run.search(st)
}

impl<'a> Run<'a> {
    fn tick(&mut self) -> Result<(), ReasonerError> {
        self.counters.firings += 1;
        if self.counters.firings > self.cfg.rule_budget {
            return Err(ReasonerError::RuleBudget(self.cfg.rule_budget));
        }
        if self.counters.firings % 4096 == 0 {
            if let Some(deadline) = self.cfg.deadline {
                if Instant::now() >= deadline {
                    return Err(ReasonerError::Deadline(self.counters.started.elapsed()));
                }
            }
        }
        Ok(())
    }

    fn new_node(&mut self, st: &mut State, parent: u32, blockable: bool) -> Result<u32, ReasonerError> {
        self.counters.nodes += 1;
        if self.counters.nodes > self.cfg.node_budget {
            return Err(ReasonerError::NodeBudget(self.cfg.node_budget));
        }
        let id = st.nodes.len() as u32;
        st.nodes.push(NodeData {
            label: Label::new(self.width),
            parent,
            blockable,
            alive: true,
        });
        st.adj.push(BTreeSet::new());
        st.nodes[id as usize].label.insert(TOP);
        for &u in &self.tbox.universal {
            self.add(st, id, u)?;
        }
        Ok(id)
    }

    fn add(&mut self, st: &mut State, x: u32, c: Cid) -> Result<(), ReasonerError> {
        if !st.nodes[x as usize].label.insert(c) {
            return Ok(());
        }
        self.tick()?;
        if c == BOTTOM {
            st.clash = true;
        } else if let Some(n) = self.tbox.store.literal_complement(c) {
            if st.nodes[x as usize].label.contains(n) {
                st.clash = true;
            }
        }
        st.queue.push_back((x, c));
        Ok(())
    }

    fn roles_between(&self, st: &State, x: u32, y: u32) -> RoleBits {
        st.edges.get(&(x, y)).copied().unwrap_or(0) | invert(st.edges.get(&(y, x)).copied().unwrap_or(0))
    }

    fn add_edge(&mut self, st: &mut State, x: u32, y: u32, roles: RoleBits) {
        if roles == 0 {
            return;
        }
        let e = st.edges.entry((x, y)).or_insert(0);
        if *e | roles != *e {
            *e |= roles;
            st.adj[x as usize].insert(y);
            st.adj[y as usize].insert(x);
            st.edge_queue.push_back((x, y));
        }
    }

    /// Applies the deterministic rules until nothing changes or a clash.
    fn saturate(&mut self, st: &mut State) -> Result<(), ReasonerError> {
        loop {
            if st.clash {
                return Ok(());
            }
            if let Some((x, c)) = st.queue.pop_front() {
                if st.nodes[x as usize].alive {
                    self.process(st, x, c)?;
                }
                continue;
            }
            if let Some((x, y)) = st.edge_queue.pop_front() {
                if st.nodes[x as usize].alive && st.nodes[y as usize].alive {
                    self.propagate_all(st, x, y)?;
                    self.propagate_all(st, y, x)?;
                }
                continue;
            }
            return Ok(());
        }
    }

    fn propagate_all(&mut self, st: &mut State, x: u32, y: u32) -> Result<(), ReasonerError> {
        let tbox: &'a Tbox = self.tbox;
        let roles = self.tbox.closure(self.roles_between(st, x, y));
        if roles == 0 {
            return Ok(());
        }
        let alls: Vec<(u32, Cid)> = st.nodes[x as usize]
            .label
            .iter()
            .filter_map(|c| match tbox.store.node(c) {
                Node::All(r, d) => Some((*r, *d)),
                _ => None,
            })
            .collect();
        for (r, d) in alls {
            if roles >> r & 1 == 1 {
                self.add(st, y, d)?;
            }
        }
        Ok(())
    }

    fn process(&mut self, st: &mut State, x: u32, c: Cid) -> Result<(), ReasonerError> {
        let tbox: &'a Tbox = self.tbox;
        match tbox.store.node(c) {
            Node::And(cs) => {
                for &d in cs {
                    self.add(st, x, d)?;
                }
            }
            Node::All(r, d) => {
                let (r, d) = (*r, *d);
                let neighbours: Vec<u32> = st.adj[x as usize].iter().copied().collect();
                for y in neighbours {
                    if self.tbox.closure(self.roles_between(st, x, y)) >> r & 1 == 1 {
                        self.add(st, y, d)?;
                    }
                }
            }
            Node::Atom(_) | Node::Nom(_) => {
                if let Some(ds) = tbox.unfold.get(&c) {
                    for &d in ds {
                        self.add(st, x, d)?;
                    }
                }
                if let Some(rules) = tbox.conj_index.get(&c) {
                    for &k in rules {
                        let (lits, d) = &tbox.conj_rules[k];
                        if lits.iter().all(|&l| st.nodes[x as usize].label.contains(l)) {
                            self.add(st, x, *d)?;
                        }
                    }
                }
                if let Node::Nom(o) = tbox.store.node(c) {
                    let home = st.nominal[*o as usize];
                    if home != x {
                        if st.nodes[x as usize].blockable {
                            self.merge(st, x, home)?;
                        } else {
                            let (keep, gone) = (home.min(x), home.max(x));
                            self.merge(st, gone, keep)?;
                        }
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Merges node `y` into node `x`. Blockable successors of `y` are pruned;
    /// the rest of its edges move to `x`.
    fn merge(&mut self, st: &mut State, y: u32, x: u32) -> Result<(), ReasonerError> {
        let neighbours: Vec<u32> = st.adj[y as usize].iter().copied().collect();
        for z in neighbours {
            if !st.nodes[z as usize].alive {
                continue;
            }
            if z != y && st.nodes[z as usize].blockable && st.nodes[z as usize].parent == y {
                self.prune(st, z);
                continue;
            }
            let out = st.edges.remove(&(y, z)).unwrap_or(0);
            let inc = if z == y { 0 } else { st.edges.remove(&(z, y)).unwrap_or(0) };
            st.adj[z as usize].remove(&y);
            let z2 = if z == y { x } else { z };
            self.add_edge(st, x, z2, out);
            self.add_edge(st, z2, x, inc);
        }
        st.adj[y as usize].clear();
        st.nodes[y as usize].alive = false;
        for n in st.nominal.iter_mut() {
            if *n == y {
                *n = x;
            }
        }
        let concepts: Vec<Cid> = st.nodes[y as usize].label.iter().collect();
        for c in concepts {
            self.add(st, x, c)?;
        }
        Ok(())
    }

    fn prune(&mut self, st: &mut State, z: u32) {
        let neighbours: Vec<u32> = st.adj[z as usize].iter().copied().collect();
        st.nodes[z as usize].alive = false;
        for w in neighbours {
            if st.nodes[w as usize].alive && st.nodes[w as usize].blockable && st.nodes[w as usize].parent == z {
                self.prune(st, w);
            }
            st.edges.remove(&(z, w));
            st.edges.remove(&(w, z));
            st.adj[w as usize].remove(&z);
        }
        st.adj[z as usize].clear();
    }

    /// Anywhere equality blocking: a blockable node is blocked by an earlier
    /// open node with the same label. A node below a blocked node is
    /// indirectly blocked.
    fn statuses(&self, st: &State) -> Vec<Status> {
        let mut status = vec![Status::Open; st.nodes.len()];
        let mut seen: HashMap<&Label, u32> = HashMap::new();
        for (i, n) in st.nodes.iter().enumerate() {
            if !n.alive {
                continue;
            }
            if !n.blockable {
                seen.entry(&n.label).or_insert(i as u32);
                continue;
            }
            let p = n.parent as usize;
            if st.nodes[p].blockable && status[p] != Status::Open {
                status[i] = Status::Indirect;
                continue;
            }
            if seen.contains_key(&n.label) {
                status[i] = Status::Blocked;
            } else {
                seen.insert(&n.label, i as u32);
            }
        }
        status
    }

    fn satisfied_some(&self, st: &State, x: u32, r: u32, d: Cid) -> bool {
        st.adj[x as usize].iter().any(|&y| {
            st.nodes[y as usize].label.contains(d) && self.tbox.closure(self.roles_between(st, x, y)) >> r & 1 == 1
        })
    }

    /// Saturates, then looks for an open disjunction, then for an unmet
    /// existential on an unblocked node.
    fn step(&mut self, st: &mut State) -> Result<Step, ReasonerError> {
        loop {
            self.saturate(st)?;
            if st.clash {
                return Ok(Step::Clash);
            }
            let status = self.statuses(st);
            let tbox: &'a Tbox = self.tbox;
            let store = &tbox.store;

            let mut forced = Vec::new();
            let mut best: Option<(u32, Vec<Cid>)> = None;
            for (i, n) in st.nodes.iter().enumerate() {
                if !n.alive || status[i] == Status::Indirect {
                    continue;
                }
                for c in n.label.iter() {
                    let Node::Or(ds) = store.node(c) else { continue };
                    if ds.iter().any(|&d| n.label.contains(d)) {
                        continue;
                    }
                    let open: Vec<Cid> = ds
                        .iter()
                        .copied()
                        .filter(|&d| store.literal_complement(d).is_none_or(|nd| !n.label.contains(nd)))
                        .collect();
                    match open.len() {
                        0 => return Ok(Step::Clash),
                        1 => forced.push((i as u32, open[0])),
                        k => {
                            if best.as_ref().is_none_or(|(_, b)| k < b.len()) {
                                best = Some((i as u32, open));
                            }
                        }
                    }
                }
            }
            if !forced.is_empty() {
                for (x, d) in forced {
                    self.add(st, x, d)?;
                }
                continue;
            }
            if let Some((x, mut open)) = best {
                if self.cfg.reverse_branches {
                    open.reverse();
                }
                // Later branches also assume earlier literal choices fail.
                let mut alts = Vec::new();
                let mut negs = Vec::new();
                for &d in &open {
                    let mut alt = negs.clone();
                    alt.push(d);
                    alts.push(alt);
                    if let Some(nd) = store.literal_complement(d) {
                        negs.push(nd);
                    }
                }
                return Ok(Step::Branch(x, alts));
            }

            let mut created = false;
            for i in 0..st.nodes.len() {
                let n = &st.nodes[i];
                if !n.alive || status[i] != Status::Open {
                    continue;
                }
                let somes: Vec<(u32, Cid)> = n
                    .label
                    .iter()
                    .filter_map(|c| match store.node(c) {
                        Node::Some(r, d) => Some((*r, *d)),
                        _ => None,
                    })
                    .collect();
                for (r, d) in somes {
                    if self.satisfied_some(st, i as u32, r, d) {
                        continue;
                    }
                    let y = self.new_node(st, i as u32, true)?;
                    self.add_edge(st, i as u32, y, 1 << r);
                    self.add(st, y, d)?;
                    created = true;
                }
                if created {
                    break;
                }
            }
            if !created {
                return Ok(Step::Done);
            }
        }
    }

    fn search(&mut self, mut st: State) -> Result<bool, ReasonerError> {
        let mut stack: Vec<(State, u32, VecDeque<Vec<Cid>>)> = Vec::new();
        loop {
            match self.step(&mut st)? {
                Step::Done => return Ok(true),
                Step::Branch(x, alts) => {
                    let mut alts: VecDeque<Vec<Cid>> = alts.into();
                    let first = alts.pop_front().expect("at least two alternatives");
                    stack.push((st.clone(), x, alts));
                    for c in first {
                        self.add(&mut st, x, c)?;
                    }
                }
                Step::Clash => loop {
                    let Some((saved, x, alts)) = stack.last_mut() else {
                        return Ok(false);
                    };
                    match alts.pop_front() {
                        Some(alt) => {
                            let x = *x;
                            st = saved.clone();
                            for c in alt {
                                self.add(&mut st, x, c)?;
                            }
                            break;
                        }
                        None => {
                            stack.pop();
                        }
                    }
                },
            }
        }
    }
}
