use std::collections::{BTreeMap, BTreeSet};

use super::interp::Interpretation;
use crate::model::{
    ConceptName, Graph, Individual, Marking, Query, QueryAtom, Role, RoleName, Term, Variable,
};

pub type Valuation = BTreeMap<Variable, Individual>;

#[derive(Clone, Copy, Debug)]
enum Slot {
    Var(usize),
    Elem(usize),
    Missing,
}

enum Compiled {
    Concept(Slot, ConceptName),
    Role(Slot, Slot, RoleName),
}

/// A pattern compiled against one interpretation: variables numbered, atoms
/// ordered so that each atom shares a variable with earlier ones when
/// possible.
struct Matcher<'a> {
    it: &'a Interpretation,
    vars: Vec<Variable>,
    atoms: Vec<Compiled>,
}

impl<'a> Matcher<'a> {
    fn new<'q>(it: &'a Interpretation, pattern: impl IntoIterator<Item = &'q QueryAtom>) -> Self {
        let pattern: Vec<&QueryAtom> = pattern.into_iter().collect();
        let vars: Vec<Variable> = crate::model::vars_of(pattern.iter().copied()).into_iter().collect();
        let slot = |t: &Term| match t {
            Term::Var(v) => Slot::Var(vars.binary_search(v).expect("pattern variable")),
            Term::Ind(a) => it.index_of(a).map_or(Slot::Missing, Slot::Elem),
        };
        let mut pending: Vec<Compiled> = pattern
            .iter()
            .map(|a| match a {
                QueryAtom::Concept(t, c) => Compiled::Concept(slot(t), c.clone()),
                QueryAtom::Role(s, o, p) => Compiled::Role(slot(s), slot(o), p.clone()),
            })
            .collect();
        let mut bound = vec![false; vars.len()];
        let mut atoms = Vec::with_capacity(pending.len());
        while !pending.is_empty() {
            let score = |a: &Compiled| {
                let is_bound = |s: &Slot| match s {
                    Slot::Var(v) => bound[*v],
                    _ => true,
                };
                match a {
                    Compiled::Concept(s, _) => 2 * is_bound(s) as usize + 1,
                    Compiled::Role(s, o, _) => 2 * (is_bound(s) as usize + is_bound(o) as usize),
                }
            };
            let best = (0..pending.len()).max_by_key(|&i| (score(&pending[i]), usize::MAX - i)).unwrap();
            let a = pending.remove(best);
            let mut mark = |s: &Slot| {
                if let Slot::Var(v) = s {
                    bound[*v] = true;
                }
            };
            match &a {
                Compiled::Concept(s, _) => mark(s),
                Compiled::Role(s, o, _) => {
                    mark(s);
                    mark(o);
                }
            }
            atoms.push(a);
        }
        Matcher { it, vars, atoms }
    }

    fn run(&self, f: &mut impl FnMut(&[usize])) {
        let mut asg = vec![usize::MAX; self.vars.len()];
        self.step(0, &mut asg, f);
    }

    fn step(&self, k: usize, asg: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        let Some(atom) = self.atoms.get(k) else {
            f(asg);
            return;
        };
        let get = |asg: &Vec<usize>, s: &Slot| -> Result<Option<usize>, ()> {
            match s {
                Slot::Missing => Err(()),
                Slot::Elem(i) => Ok(Some(*i)),
                Slot::Var(v) if asg[*v] != usize::MAX => Ok(Some(asg[*v])),
                Slot::Var(_) => Ok(None),
            }
        };
        match atom {
            Compiled::Concept(s, c) => {
                let mask = self.it.concept_mask(c);
                match get(asg, s) {
                    Err(()) => {}
                    Ok(Some(i)) => {
                        if mask >> i & 1 == 1 {
                            self.step(k + 1, asg, f)
                        }
                    }
                    Ok(None) => {
                        let Slot::Var(v) = *s else { unreachable!() };
                        for i in bits(mask) {
                            asg[v] = i;
                            self.step(k + 1, asg, f);
                        }
                        asg[v] = usize::MAX;
                    }
                }
            }
            Compiled::Role(s, o, p) => {
                let fwd = Role::new(p.clone());
                let (Ok(si), Ok(oi)) = (get(asg, s), get(asg, o)) else {
                    return;
                };
                match (si, oi) {
                    (Some(i), Some(j)) => {
                        if self.it.successors(&fwd, i) >> j & 1 == 1 {
                            self.step(k + 1, asg, f)
                        }
                    }
                    (Some(i), None) => {
                        let Slot::Var(v) = *o else { unreachable!() };
                        for j in bits(self.it.successors(&fwd, i)) {
                            asg[v] = j;
                            self.step(k + 1, asg, f);
                        }
                        asg[v] = usize::MAX;
                    }
                    (None, Some(j)) => {
                        let Slot::Var(v) = *s else { unreachable!() };
                        for i in bits(self.it.successors(&fwd.inverted(), j)) {
                            asg[v] = i;
                            self.step(k + 1, asg, f);
                        }
                        asg[v] = usize::MAX;
                    }
                    (None, None) => {
                        let (Slot::Var(v), Slot::Var(w)) = (*s, *o) else { unreachable!() };
                        for i in 0..self.it.len() {
                            let succ = self.it.successors(&fwd, i);
                            if v == w {
                                if succ >> i & 1 == 1 {
                                    asg[v] = i;
                                    self.step(k + 1, asg, f);
                                }
                                continue;
                            }
                            for j in bits(succ) {
                                asg[v] = i;
                                asg[w] = j;
                                self.step(k + 1, asg, f);
                            }
                        }
                        asg[v] = usize::MAX;
                        asg[w] = usize::MAX;
                    }
                }
            }
        }
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
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

/// Every valuation of the pattern's variables that maps the pattern into
/// the interpretation, as vectors indexed like `vars_of(pattern)`.
pub(crate) fn index_valuations<'q>(
    it: &Interpretation,
    pattern: impl IntoIterator<Item = &'q QueryAtom>,
) -> Vec<Vec<usize>> {
    let m = Matcher::new(it, pattern);
    let mut out = Vec::new();
    m.run(&mut |asg| out.push(asg.to_vec()));
    out
}

/// All valuations `μ` with `μ(P) ⊆ G`.
pub fn valuations(pattern: &BTreeSet<QueryAtom>, g: &Graph) -> Vec<Valuation> {
    let extra: BTreeSet<Individual> = pattern
        .iter()
        .flat_map(|a| a.terms())
        .filter_map(|t| match t {
            Term::Ind(a) => Some(a.clone()),
            Term::Var(_) => None,
        })
        .collect();
    let it = Interpretation::canonical(g, extra);
    let vars: Vec<Variable> = crate::model::vars_of(pattern).into_iter().collect();
    index_valuations(&it, pattern)
        .into_iter()
        .map(|asg| {
            vars.iter()
                .cloned()
                .zip(asg.into_iter().map(|i| it.domain()[i].clone()))
                .collect()
        })
        .collect()
}

fn instantiate(atoms: &BTreeSet<QueryAtom>, mu: &Valuation, g: &mut Graph) {
    let t = |t: &Term| match t {
        Term::Var(v) => mu[v].clone(),
        Term::Ind(a) => a.clone(),
    };
    for a in atoms {
        match a {
            QueryAtom::Concept(u, c) => g.add_concept(t(u), c.clone()),
            QueryAtom::Role(u, v, p) => g.add_role(t(u), t(v), p.clone()),
        }
    }
}

/// The result of the query: the union of `μ(H)` over all matches `μ`.
pub fn eval_query(q: &Query, g: &Graph) -> Graph {
    let mut out = Graph::new();
    for mu in valuations(q.pattern(), g) {
        instantiate(q.template(), &mu, &mut out);
    }
    out
}

/// The input graph together with marked copies of the pattern matches and
/// the result, plus `a : V_x` for every value `a` a variable `x` takes.
pub fn extended_graph(q: &Query, g: &Graph) -> Graph {
    let mut med = Graph::new();
    let mut out = Graph::new();
    let mut ext = g.clone();
    for mu in valuations(q.pattern(), g) {
        instantiate(q.pattern(), &mu, &mut med);
        instantiate(q.template(), &mu, &mut out);
        for (x, a) in &mu {
            ext.add_concept(a.clone(), ConceptName::var(x));
        }
    }
    ext.union(&med.with_marking(Marking::Med));
    ext.union(&out.with_marking(Marking::Out));
    ext
}

/// The extended interpretation of `q` over `it`, built without going through
/// a graph. Query individuals must already be domain elements. The flag
/// reports whether the query produced any output.
pub fn extended_interpretation(q: &Query, it: &Interpretation) -> (Interpretation, bool) {
    let vars: Vec<Variable> = q.pattern_vars().into_iter().collect();
    let mut ext = it.clone();
    let idx = |t: &Term, asg: &[usize]| match t {
        Term::Var(v) => asg[vars.binary_search(v).unwrap()],
        Term::Ind(a) => it.index_of(a).expect("query individual in domain"),
    };
    let mut produced = false;
    for asg in index_valuations(it, q.pattern()) {
        for (k, x) in vars.iter().enumerate() {
            ext.add_concept(&ConceptName::var(x), asg[k]);
        }
        for (atoms, m) in [(q.pattern(), Marking::Med), (q.template(), Marking::Out)] {
            for a in atoms {
                if m == Marking::Out {
                    produced = true;
                }
                match a {
                    QueryAtom::Concept(u, c) => ext.add_concept(&c.with_marking(m), idx(u, &asg)),
                    QueryAtom::Role(u, v, p) => ext.add_role(&p.with_marking(m), idx(u, &asg), idx(v, &asg)),
                }
            }
        }
    }
    (ext, produced)
}
