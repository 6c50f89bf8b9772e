//! Candidate shapes over a query's result vocabulary.

use std::collections::BTreeSet;

use crate::model::{query_vocabulary, ConceptExpr, ConceptName, Query, Role, Shape, Vocabulary};

/// A concept name outside `voc`, standing for "any concept the query cannot
/// produce". A shape `ψ ⊑ ∀ρ.F` that is entailed means `ψ ⊑ ∀ρ.⊥`.
pub fn proxy_name(voc: &Vocabulary) -> ConceptName {
    (0..)
        .map(|k| ConceptName::new(&if k == 0 { "F".to_string() } else { format!("F{}", k) }))
        .find(|c| !voc.concepts.contains(c))
        .expect("unbounded supply of names")
}

fn roles(voc: &Vocabulary) -> Vec<Role> {
    voc.roles
        .iter()
        .flat_map(|p| [Role::new(p.clone()), Role::inv(p.clone())])
        .collect()
}

/// Every simple shape over `voc` with `proxy` as the only extra name, minus
/// the trivial `A ⊑ A`, sorted.
pub fn candidates_over(voc: &Vocabulary, proxy: &ConceptName) -> Vec<Shape> {
    let atoms: Vec<ConceptExpr> = voc.concepts.iter().cloned().map(ConceptExpr::Atom).collect();
    let mut targets = atoms.clone();
    targets.extend(roles(voc).into_iter().map(|r| ConceptExpr::exists(r, ConceptExpr::Top)));

    let mut constraints = atoms.clone();
    for r in roles(voc) {
        for a in &atoms {
            constraints.push(ConceptExpr::exists(r.clone(), a.clone()));
            constraints.push(ConceptExpr::forall(r.clone(), a.clone()));
        }
        constraints.push(ConceptExpr::forall(r, ConceptExpr::Atom(proxy.clone())));
    }

    let mut out = BTreeSet::new();
    for t in &targets {
        for c in &constraints {
            if t != c {
                out.insert(Shape::new(t.clone(), c.clone()).expect("well-formed candidate"));
            }
        }
    }
    out.into_iter().collect()
}

/// Candidates over the names in the query template.
pub fn candidate_shapes(q: &Query) -> Vec<Shape> {
    let voc = query_vocabulary(q);
    candidates_over(&voc, &proxy_name(&voc))
}

/// `(n + 2m)(n + 4nm + 2m) − n` for `n` concept and `m` role names.
pub fn candidate_count(n: usize, m: usize) -> usize {
    (n + 2 * m) * (n + 4 * n * m + 2 * m) - n
}
