//! Brute-force semantics used to check the analysis: query evaluation,
//! extended graphs, concept extensions in canonical interpretations, bounded
//! graph enumeration and a bounded model search.

mod bounded;
mod enumerate;
mod eval;
mod interp;
mod soundness;

use std::collections::BTreeSet;

pub use bounded::bounded_model_consistent;
pub use enumerate::{enumerate_graphs, padding, GraphSpace};
pub use eval::{eval_query, extended_graph, extended_interpretation, valuations, Valuation};
pub use interp::{Interpretation, MAX_DOMAIN};
pub use soundness::{check_axioms, check_soundness, input_vocabulary, universe, AxiomViolation, Counterexample};

use crate::model::{Axiom, ConceptExpr, Graph, Individual, KnowledgeBase, Role, Vocabulary};

/// The extension of `c` in the canonical interpretation of `g` whose domain
/// is the individuals of `g` and `domain`.
pub fn extension_of(g: &Graph, c: &ConceptExpr, domain: &[Individual]) -> BTreeSet<Individual> {
    let mut extra: Vec<Individual> = domain.to_vec();
    c.individuals(&mut extra);
    let it = Interpretation::canonical(g, extra);
    it.individuals_of(it.extension(c))
}

/// Whether `ax` holds in the canonical interpretation of `g`.
pub fn holds(g: &Graph, ax: &Axiom) -> bool {
    Interpretation::canonical(g, ax.individuals()).holds(ax)
}

pub fn holds_with_domain(g: &Graph, ax: &Axiom, domain: &[Individual]) -> bool {
    let mut extra = domain.to_vec();
    extra.extend(ax.individuals());
    Interpretation::canonical(g, extra).holds(ax)
}

/// The closed-world knowledge base of `g` over the individuals `domain`
/// and the given vocabulary: domain closure, unique names, and each concept
/// and role pinned to exactly its assertions in `g`.
pub fn validation_kb(g: &Graph, domain: &[Individual], voc: &Vocabulary) -> KnowledgeBase {
    let nom = |a: &Individual| ConceptExpr::Nominal(a.clone());
    let mut tbox = Axiom::equiv(ConceptExpr::Top, ConceptExpr::or_all(domain.iter().map(nom))).to_vec();
    for (i, a) in domain.iter().enumerate() {
        for b in &domain[i + 1..] {
            tbox.extend(Axiom::equiv(ConceptExpr::and(nom(a), nom(b)), ConceptExpr::Bottom));
        }
    }
    for c in &voc.concepts {
        let members = g.concepts.iter().filter(|(_, d)| d == c).map(|(a, _)| nom(a));
        tbox.extend(Axiom::equiv(ConceptExpr::Atom(c.clone()), ConceptExpr::or_all(members)));
    }
    for p in &voc.roles {
        for a in domain {
            let subjects = g.roles.iter().filter(|(_, o, q)| q == p && o == a).map(|(s, _, _)| nom(s));
            let forward = ConceptExpr::exists(Role::new(p.clone()), nom(a));
            tbox.extend(Axiom::equiv(forward, ConceptExpr::or_all(subjects)));
            let objects = g.roles.iter().filter(|(s, _, q)| q == p && s == a).map(|(_, o, _)| nom(o));
            let backward = ConceptExpr::exists(Role::inv(p.clone()), nom(a));
            tbox.extend(Axiom::equiv(backward, ConceptExpr::or_all(objects)));
        }
    }
    KnowledgeBase {
        tbox,
        abox: g.assertions(),
    }
}
