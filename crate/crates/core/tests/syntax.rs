mod common;

use common::strategies::concept;
use construct_shapes::candidates::candidate_shapes;
use construct_shapes::model::{Axiom, ConceptExpr, Role, RoleName};
use construct_shapes::syntax::{
    parse_axioms, parse_concept, parse_query, parse_shapes, render_axiom, render_concept, render_query, render_shape,
    ParseError,
};
use proptest::prelude::*;

const Q1: &str = "CONSTRUCT { ?y a :E . ?y :p ?z . ?z a :B } WHERE { ?w :p ?y . ?y a :B . ?x :p ?z . ?z a :E }";

fn p() -> Role {
    Role::new(RoleName::new("p"))
}

#[test]
fn parses_running_query() {
    let q = parse_query(Q1).unwrap();
    assert_eq!(q.template().len(), 3);
    assert_eq!(q.pattern().len(), 4);
}

#[test]
fn parses_prefixed_query_with_crlf() {
    let text = "PREFIX : <http://example.org/#>\r\nCONSTRUCT { ?x a :A }\r\nWHERE {\r\n  ?x a :A .\r\n}\r\n";
    let q = parse_query(text).unwrap();
    assert_eq!(q.template().len(), 1);
    assert_eq!(q.template(), q.pattern());
}

#[test]
fn duplicate_atoms_collapse() {
    let q = parse_query("CONSTRUCT { ?x a :A . ?x a :A } WHERE { ?x a :A . ?x a :A . }").unwrap();
    assert_eq!(q.pattern().len(), 1);
}

#[test]
fn unbound_template_variable() {
    let err = parse_query("CONSTRUCT { ?x a :A } WHERE { ?y a :A }").unwrap_err();
    assert!(matches!(err, ParseError::UnboundTemplateVariable { ref var, .. } if var == "x"), "{err}");
    assert_eq!(err.location().line, 1);
}

#[test]
fn unsupported_features_are_named() {
    for (text, feature) in [
        ("CONSTRUCT { ?x a :A } WHERE { ?x a :A . OPTIONAL { ?x :p ?y } }", "OPTIONAL"),
        ("CONSTRUCT { ?x a :A } WHERE { ?x a :A . FILTER(?x) }", "FILTER"),
        ("CONSTRUCT { ?x a :A } WHERE { ?x :p/:q ?y . ?x a :A }", "property path `/`"),
        ("CONSTRUCT { ?x a :A } WHERE { ?x a :A ; :p ?y }", "predicate-object list `;`"),
        ("CONSTRUCT { ?x a :A } WHERE { ?x :p _:b . ?x a :A }", "blank node"),
    ] {
        match parse_query(text) {
            Err(ParseError::Unsupported { feature: f, .. }) => assert_eq!(f, feature, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn syntax_error_position() {
    let err = parse_query("CONSTRUCT { ?x a :A }\nWHERE { ?x a }").unwrap_err();
    let at = err.location();
    assert_eq!(at.line, 2);
    assert_eq!(at.column, 14);
    assert!(err.to_string().contains('^'));
}

#[test]
fn parses_running_shapes() {
    let s = parse_shapes(":A <: exists :p . :B\nexists :r . Top <: :B\n# comment\n\n:B ⊑ :E").unwrap();
    assert_eq!(
        s,
        vec![
            Axiom::sub(ConceptExpr::atom("A"), ConceptExpr::exists(p(), ConceptExpr::atom("B"))),
            Axiom::sub(
                ConceptExpr::exists(Role::new(RoleName::new("r")), ConceptExpr::Top),
                ConceptExpr::atom("B")
            ),
            Axiom::sub(ConceptExpr::atom("B"), ConceptExpr::atom("E")),
        ]
    );
}

#[test]
fn parses_general_axiom() {
    let s = parse_shapes(":A <: (:B and not :C) or exists :p- . {:a}").unwrap();
    let want = ConceptExpr::or(
        ConceptExpr::and(ConceptExpr::atom("B"), ConceptExpr::not(ConceptExpr::atom("C"))),
        ConceptExpr::exists(p().inverted(), ConceptExpr::nominal("a")),
    );
    assert_eq!(s, vec![Axiom::sub(ConceptExpr::atom("A"), want)]);
    assert!(!construct_shapes::model::is_simple_shacl(&s[0]));
}

#[test]
fn shape_targets_are_restricted() {
    let err = parse_shapes(":A and :B <: :C").unwrap_err();
    assert!(matches!(err, ParseError::InvalidTarget(_)), "{err}");
    assert!(parse_axioms(":A and :B <: :C").is_ok());
}

#[test]
fn marked_names_only_in_axioms() {
    assert!(parse_shapes(":A'' <: :B").is_err());
    assert!(parse_shapes("V(?x) <: :B").is_err());
    let ax = parse_axioms(":A'' <: V(?x)\nrole :p' <: :p").unwrap();
    assert_eq!(ax.len(), 2);
}

#[test]
fn renders_examples() {
    assert_eq!(render_axiom(&Axiom::sub(ConceptExpr::atom("B"), ConceptExpr::atom("E"))), ":B <: :E");
    let s = Axiom::sub(ConceptExpr::exists(p().inverted(), ConceptExpr::Top), ConceptExpr::atom("B"));
    assert_eq!(render_axiom(&s), "exists :p- . Top <: :B");
}

#[test]
fn query_round_trip() {
    let q = parse_query(Q1).unwrap();
    let text = render_query(&q);
    assert_eq!(parse_query(&text).unwrap(), q);
    assert_eq!(render_query(&parse_query(&text).unwrap()), text);
}

#[test]
fn candidate_round_trip() {
    let q = parse_query(Q1).unwrap();
    for s in candidate_shapes(&q) {
        let text = render_shape(&s);
        assert_eq!(parse_shapes(&text).unwrap(), vec![s.to_axiom()], "{text}");
    }
}

fn token() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "CONSTRUCT", "WHERE", "{", "}", ".", "?x", "?y", ":A", ":p", "a", ";", ",", "OPTIONAL", "(", ")", "<:", "exists",
        "forall", "not", "and", "or", "Top", "Bottom", "-", "{:a}", "'", "PREFIX", "<http://x/>", "\"lit\"", "\n", "#",
        "V(?x)", "⊑", "¬", "_:b", "*", "^", "1",
    ])
}

proptest! {
    #[test]
    fn concept_round_trip(c in concept()) {
        let text = render_concept(&c);
        prop_assert_eq!(parse_concept(&text).unwrap(), c);
    }

    #[test]
    fn parsers_are_total(tokens in prop::collection::vec(token(), 0..24)) {
        let text = tokens.join(" ");
        let lines = text.lines().count().max(1);
        for err in [parse_query(&text).err(), parse_shapes(&text).err(), parse_axioms(&text).err()].into_iter().flatten() {
            let at = err.location();
            prop_assert!(at.line >= 1 && at.line <= lines, "{} in {:?}", at.line, text);
            prop_assert!(at.column >= 1);
        }
        if let Ok(q) = parse_query(&text) {
            let bound = q.pattern_vars();
            prop_assert!(q.template().iter().flat_map(|a| a.vars()).all(|v| bound.contains(v)));
        }
    }
}
