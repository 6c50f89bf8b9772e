use crate::model::{Axiom, Graph, Individual, Query, Term, Variable, Vocabulary};
use crate::par;

use super::enumerate::{padding, GraphSpace};
use super::eval::index_valuations;
use super::interp::Interpretation;

/// A valid input graph on which the query result violates a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub output: Graph,
    pub shape: Axiom,
}

/// An extended graph on which an axiom fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub graph: Graph,
    pub axiom: Axiom,
}

/// The individuals that bounded enumeration ranges over: the query's and the
/// shapes' own individuals, padded with fresh names up to `bound`.
pub fn universe(q: &Query, sin: &[Axiom], bound: usize) -> Vec<Individual> {
    let mut named: Vec<Individual> = q.individuals().into_iter().collect();
    for a in sin.iter().flat_map(|a| a.individuals()) {
        if !named.contains(&a) {
            named.push(a);
        }
    }
    let pad = padding(bound.saturating_sub(named.len()), &named);
    named.extend(pad);
    named
}

/// The names an input graph can usefully contain: those of the pattern and
/// of the input shapes.
pub fn input_vocabulary(q: &Query, sin: &[Axiom]) -> Vocabulary {
    let mut voc = Vocabulary::of_atoms(q.pattern());
    voc.extend(&Vocabulary::of_axioms(sin));
    voc
}

fn output_interpretation(q: &Query, it: &Interpretation) -> Interpretation {
    let vars: Vec<Variable> = q.pattern_vars().into_iter().collect();
    let mut out = Interpretation::new(it.domain().to_vec());
    let idx = |t: &Term, asg: &[usize]| match t {
        Term::Var(v) => asg[vars.binary_search(v).unwrap()],
        Term::Ind(a) => it.index_of(a).expect("query individual in universe"),
    };
    for asg in index_valuations(it, q.pattern()) {
        for a in q.template() {
            match a {
                crate::model::QueryAtom::Concept(u, c) => out.add_concept(c, idx(u, &asg)),
                crate::model::QueryAtom::Role(u, v, p) => out.add_role(p, idx(u, &asg), idx(v, &asg)),
            }
        }
    }
    out
}

/// Searches every graph over `bound` individuals that satisfies `sin` for
/// one whose query result violates some shape in `shapes`.
pub fn check_soundness(
    q: &Query,
    sin: &[Axiom],
    shapes: &[Axiom],
    bound: usize,
    parallel: bool,
) -> Result<(), Counterexample> {
    let space = GraphSpace::new(&input_vocabulary(q, sin), &universe(q, sin, bound));
    let found = par::find_map_range(space.len() as usize, parallel, |k| {
        let it = space.interpretation(k as u64);
        if !sin.iter().all(|a| it.holds(a)) {
            return None;
        }
        let out = output_interpretation(q, &it);
        let bad = shapes.iter().find(|s| !out.holds(s))?;
        let graph = space.graph(k as u64);
        Some(Counterexample {
            output: super::eval::eval_query(q, &graph),
            graph,
            shape: bad.clone(),
        })
    });
    match found {
        Some(c) => Err(c),
        None => Ok(()),
    }
}

/// Searches every valid input graph over `bound` individuals for one whose
/// extended graph violates an axiom. With `require_output`, graphs on which
/// the query produces nothing are skipped.
pub fn check_axioms(
    q: &Query,
    sin: &[Axiom],
    axioms: &[Axiom],
    bound: usize,
    require_output: bool,
    parallel: bool,
) -> Result<(), AxiomViolation> {
    let space = GraphSpace::new(&input_vocabulary(q, sin), &universe(q, sin, bound));
    let found = par::find_map_range(space.len() as usize, parallel, |k| {
        let it = space.interpretation(k as u64);
        if !sin.iter().all(|a| it.holds(a)) {
            return None;
        }
        let (ext, produced) = super::eval::extended_interpretation(q, &it);
        if require_output && !produced {
            return None;
        }
        let bad = axioms.iter().find(|a| !ext.holds(a))?;
        Some(AxiomViolation {
            graph: space.graph(k as u64),
            axiom: bad.clone(),
        })
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}
