use std::collections::BTreeSet;

use construct_shapes::candidates::{candidate_count, candidate_shapes, candidates_over, proxy_name};
use construct_shapes::model::{is_simple_shacl, ConceptExpr, ConceptName, RoleName, Vocabulary};
use construct_shapes::syntax::parse_query;

fn vocabulary(n: usize, m: usize) -> Vocabulary {
    Vocabulary {
        concepts: (0..n).map(|i| ConceptName::new(&format!("C{}", i))).collect(),
        roles: (0..m).map(|i| RoleName::new(&format!("r{}", i))).collect(),
    }
}

#[test]
fn running_query_has_46_candidates() {
    let q = parse_query("CONSTRUCT { ?y a :E . ?y :p ?z . ?z a :B } WHERE { ?w :p ?y . ?y a :B . ?x :p ?z . ?z a :E }")
        .unwrap();
    assert_eq!(candidate_shapes(&q).len(), 46);
}

#[test]
fn small_vocabularies() {
    assert!(candidates_over(&vocabulary(0, 0), &ConceptName::new("F")).is_empty());
    assert!(candidates_over(&vocabulary(1, 0), &ConceptName::new("F")).is_empty());
}

#[test]
fn formula_values() {
    assert_eq!(candidate_count(2, 1), 46);
    assert_eq!(candidate_count(0, 0), 0);
    assert_eq!(candidate_count(1, 1), 20);
}

#[test]
fn enumeration_matches_formula() {
    for n in 0..=3 {
        for m in 0..=3 {
            let voc = vocabulary(n, m);
            let shapes = candidates_over(&voc, &proxy_name(&voc));
            assert_eq!(shapes.len(), (n + 2 * m) * (n + 4 * n * m + 2 * m) - n, "n={n} m={m}");
            let distinct: BTreeSet<_> = shapes.iter().collect();
            assert_eq!(distinct.len(), shapes.len());
        }
    }
}

#[test]
fn candidates_stay_in_vocabulary() {
    let voc = vocabulary(2, 2);
    let proxy = proxy_name(&voc);
    for s in candidates_over(&voc, &proxy) {
        let ax = s.to_axiom();
        assert!(is_simple_shacl(&ax), "{ax:?}");
        for c in ax.concept_names() {
            if c == proxy {
                assert!(matches!(s.constraint(), ConceptExpr::Forall(_, f) if **f == ConceptExpr::Atom(proxy.clone())));
            } else {
                assert!(voc.concepts.contains(&c));
            }
        }
        assert!(ax.role_names().iter().all(|r| voc.roles.contains(r)));
        assert_ne!(s.target(), s.constraint());
    }
}

#[test]
fn proxy_avoids_vocabulary() {
    let mut voc = vocabulary(0, 1);
    assert_eq!(proxy_name(&voc), ConceptName::new("F"));
    voc.concepts.insert(ConceptName::new("F"));
    voc.concepts.insert(ConceptName::new("F1"));
    assert_eq!(proxy_name(&voc), ConceptName::new("F2"));
}
