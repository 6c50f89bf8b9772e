//! Seeded generators for small random problems and knowledge bases.
#![allow(dead_code)]

pub mod strategies;

use std::collections::BTreeSet;

use construct_shapes::model::{
    Assertion, Axiom, ConceptExpr, ConceptName, Individual, KnowledgeBase, Query, QueryAtom, Role, RoleName, Term,
};
use rand::Rng;

pub const CONCEPTS: [&str; 2] = ["A", "B"];
pub const ROLE: &str = "p";

pub fn concept(rng: &mut impl Rng) -> ConceptName {
    ConceptName::new(CONCEPTS[rng.gen_range(0..CONCEPTS.len())])
}

pub fn role(rng: &mut impl Rng) -> Role {
    let p = RoleName::new(ROLE);
    if rng.gen_bool(0.5) {
        Role::inv(p)
    } else {
        Role::new(p)
    }
}

/// A query with at most three pattern atoms over `A`, `B`, `p`, variables
/// `?x ?y ?z` and, sometimes, the individual `:c`.
pub fn small_query(rng: &mut impl Rng) -> Query {
    let with_ind = rng.gen_bool(0.25);
    let vars = ["x", "y", "z"];
    let term = |rng: &mut dyn rand::RngCore| {
        if with_ind && rng.gen_bool(0.25) {
            Term::ind("c")
        } else {
            Term::var(vars[rng.gen_range(0..vars.len())])
        }
    };
    let atom = |rng: &mut dyn rand::RngCore, term: &dyn Fn(&mut dyn rand::RngCore) -> Term| {
        if rng.gen_bool(0.4) {
            QueryAtom::role(term(rng), term(rng), ROLE)
        } else {
            QueryAtom::concept(term(rng), CONCEPTS[rng.gen_range(0..2)])
        }
    };
    loop {
        let pattern: BTreeSet<QueryAtom> = (0..rng.gen_range(1..=3)).map(|_| atom(rng, &term)).collect();
        let bound: Vec<Term> = pattern.iter().flat_map(|a| a.terms()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let from_pattern = |rng: &mut dyn rand::RngCore| bound[rng.gen_range(0..bound.len())].clone();
        let template: BTreeSet<QueryAtom> = (0..rng.gen_range(1..=3)).map(|_| atom(rng, &from_pattern)).collect();
        if let Ok(q) = Query::new(template, pattern) {
            return q;
        }
    }
}

/// A Simple SHACL shape over `A`, `B`, `p`.
pub fn simple_shape(rng: &mut impl Rng) -> Axiom {
    let target = if rng.gen_bool(0.5) {
        ConceptExpr::Atom(concept(rng))
    } else {
        ConceptExpr::exists(role(rng), ConceptExpr::Top)
    };
    let a = ConceptExpr::Atom(concept(rng));
    let constraint = match rng.gen_range(0..3) {
        0 => a,
        1 => ConceptExpr::exists(role(rng), a),
        _ => ConceptExpr::forall(role(rng), a),
    };
    Axiom::sub(target, constraint)
}

pub fn simple_shapes(rng: &mut impl Rng, max: usize) -> Vec<Axiom> {
    (0..rng.gen_range(0..=max)).map(|_| simple_shape(rng)).collect()
}

/// A random ALCHOI concept of bounded depth over `A`, `B`, `p` and the
/// given individuals.
pub fn concept_expr(rng: &mut impl Rng, inds: &[Individual], depth: usize) -> ConceptExpr {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        return match rng.gen_range(0..6) {
            0 => ConceptExpr::Top,
            1 => ConceptExpr::Bottom,
            2 if !inds.is_empty() => ConceptExpr::Nominal(inds[rng.gen_range(0..inds.len())].clone()),
            _ => ConceptExpr::Atom(concept(rng)),
        };
    }
    match rng.gen_range(0..5) {
        0 => ConceptExpr::not(concept_expr(rng, inds, depth - 1)),
        1 => ConceptExpr::and(concept_expr(rng, inds, depth - 1), concept_expr(rng, inds, depth - 1)),
        2 => ConceptExpr::or(concept_expr(rng, inds, depth - 1), concept_expr(rng, inds, depth - 1)),
        3 => ConceptExpr::exists(role(rng), concept_expr(rng, inds, depth - 1)),
        _ => ConceptExpr::forall(role(rng), concept_expr(rng, inds, depth - 1)),
    }
}

/// A KB over at most three individuals whose TBox closes the domain to
/// exactly those individuals.
pub fn dca_kb(rng: &mut impl Rng) -> KnowledgeBase {
    let k = rng.gen_range(1..=3);
    let inds: Vec<Individual> = (1..=k).map(|i| Individual::new(&format!("a{}", i))).collect();
    let mut tbox = vec![Axiom::sub(
        ConceptExpr::Top,
        ConceptExpr::or_all(inds.iter().cloned().map(ConceptExpr::Nominal)),
    )];
    for _ in 0..rng.gen_range(0..=3) {
        if rng.gen_bool(0.1) {
            tbox.push(Axiom::Role(role(rng), role(rng)));
        } else {
            tbox.push(Axiom::sub(concept_expr(rng, &inds, 2), concept_expr(rng, &inds, 2)));
        }
    }
    let pick = |rng: &mut dyn rand::RngCore| inds[rng.gen_range(0..inds.len())].clone();
    let abox = (0..rng.gen_range(0..=3))
        .map(|_| {
            if rng.gen_bool(0.3) {
                Assertion::Role(pick(rng), pick(rng), RoleName::new(ROLE))
            } else {
                Assertion::Concept(pick(rng), concept_expr(rng, &inds, 1))
            }
        })
        .collect();
    KnowledgeBase { tbox, abox }
}
