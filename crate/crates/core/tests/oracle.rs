mod common;

use std::collections::BTreeSet;

use common::strategies::{concept, domain, graph};
use construct_shapes::model::{
    Axiom, ConceptExpr, ConceptName, Graph, Individual, KnowledgeBase, Marking, Query, RoleName, Vocabulary,
};
use construct_shapes::oracle::{
    bounded_model_consistent, check_soundness, enumerate_graphs, eval_query, extended_graph, extended_interpretation,
    extension_of, holds, holds_with_domain, validation_kb, Interpretation,
};
use construct_shapes::reasoner::{is_consistent, ReasonerConfig};
use construct_shapes::syntax::{parse_axioms, parse_query, parse_shapes};
use proptest::prelude::*;

const Q1: &str = "CONSTRUCT { ?y a :E . ?y :p ?z . ?z a :B } WHERE { ?w :p ?y . ?y a :B . ?x :p ?z . ?z a :E }";

fn ind(a: &str) -> Individual {
    Individual::new(a)
}

fn graph_of(concepts: &[(&str, &str)], roles: &[(&str, &str, &str)]) -> Graph {
    let mut g = Graph::new();
    for (a, c) in concepts {
        g.add_concept(ind(a), ConceptName::new(c));
    }
    for (a, b, p) in roles {
        g.add_role(ind(a), ind(b), RoleName::new(p));
    }
    g
}

fn g1() -> Graph {
    graph_of(&[("a", "A"), ("b", "B"), ("b", "E")], &[("a", "b", "p"), ("b", "a", "p"), ("b", "a", "r")])
}

fn g2() -> Graph {
    graph_of(&[("a", "A"), ("b", "B"), ("b", "E"), ("e", "E")], &[("a", "b", "p"), ("a", "e", "p")])
}

fn shape(text: &str) -> Axiom {
    parse_shapes(text).unwrap().remove(0)
}

#[test]
fn evaluates_running_query() {
    let q = parse_query(Q1).unwrap();
    assert_eq!(eval_query(&q, &g1()), graph_of(&[("b", "E"), ("b", "B")], &[("b", "b", "p")]));
    assert_eq!(
        eval_query(&q, &g2()),
        graph_of(&[("b", "E"), ("b", "B"), ("e", "B")], &[("b", "b", "p"), ("b", "e", "p")])
    );
    assert!(eval_query(&q, &Graph::new()).is_empty());
}

#[test]
fn extensions() {
    let c = parse_axioms("Top <: exists :p . :B").unwrap();
    let Axiom::Concept(_, some_b) = &c[0] else { unreachable!() };
    let dom = [ind("a"), ind("b")];
    assert_eq!(extension_of(&g1(), some_b, &dom), BTreeSet::from([ind("a")]));
    let pad = [ind("a"), ind("b"), ind("z")];
    assert_eq!(extension_of(&g1(), &ConceptExpr::Top, &pad), pad.iter().cloned().collect());
    let contradiction = ConceptExpr::and(ConceptExpr::not(ConceptExpr::atom("A")), ConceptExpr::atom("A"));
    assert!(extension_of(&g1(), &contradiction, &pad).is_empty());
}

#[test]
fn running_graphs_are_valid() {
    assert!(holds(&g1(), &shape(":A <: exists :p . :B")));
    assert!(holds(&g1(), &shape("exists :r . Top <: :B")));
    assert!(holds(&g2(), &shape("exists :p- . Top <: :E")));
    assert!(holds(&g2(), &shape(":A <: exists :p . :B")));
    assert!(!holds(&g2(), &shape(":A <: forall :p . :B")));
}

#[test]
fn extended_running_graph() {
    let q = parse_query(Q1).unwrap();
    let v = |x: &str| ConceptName::var(&construct_shapes::model::Variable::new(x));
    let c = |n: &str, m: Marking| ConceptName::new(n).with_marking(m);
    let r = |n: &str, m: Marking| RoleName::new(n).with_marking(m);
    let mut want = g1();
    for (a, name) in [
        ("a", v("w")),
        ("a", v("x")),
        ("b", v("y")),
        ("b", v("z")),
        ("b", c("B", Marking::Med)),
        ("b", c("E", Marking::Med)),
        ("b", c("B", Marking::Out)),
        ("b", c("E", Marking::Out)),
    ] {
        want.add_concept(ind(a), name);
    }
    want.add_role(ind("a"), ind("b"), r("p", Marking::Med));
    want.add_role(ind("b"), ind("b"), r("p", Marking::Out));
    assert_eq!(extended_graph(&q, &g1()), want);
    assert!(extended_graph(&q, &Graph::new()).is_empty());
}

#[test]
fn extended_graph_of_copy_query() {
    let q = parse_query("CONSTRUCT { ?x a :A } WHERE { ?x a :A }").unwrap();
    let g = graph_of(&[("a", "A"), ("b", "B")], &[("a", "b", "p")]);
    let ext = extended_graph(&q, &g);
    let mut want = g.clone();
    want.union(&eval_query(&q, &g).with_marking(Marking::Med));
    want.union(&eval_query(&q, &g).with_marking(Marking::Out));
    want.add_concept(ind("a"), ConceptName::var(&construct_shapes::model::Variable::new("x")));
    assert_eq!(ext, want);
}

#[test]
fn graph_enumeration_sizes() {
    let voc = |c: &[&str], r: &[&str]| Vocabulary {
        concepts: c.iter().map(|n| ConceptName::new(n)).collect(),
        roles: r.iter().map(|n| RoleName::new(n)).collect(),
    };
    assert_eq!(enumerate_graphs(&voc(&[], &[]), &[ind("a")]).collect::<Vec<_>>(), vec![Graph::new()]);
    let one: Vec<Graph> = enumerate_graphs(&voc(&["A"], &[]), &[ind("a")]).collect();
    assert_eq!(one, vec![Graph::new(), graph_of(&[("a", "A")], &[])]);
    let all: BTreeSet<Graph> = enumerate_graphs(&voc(&["A"], &["p"]), &[ind("a"), ind("b")]).collect();
    assert_eq!(all.len(), 64);
}

#[test]
fn soundness_check_examples() {
    let q1 = parse_query(Q1).unwrap();
    let s1 = parse_shapes(":A <: exists :p . :B\nexists :r . Top <: :B\n:B <: :E").unwrap();
    let listed = std::fs::read_to_string(format!("{}/tests/fixtures/q1.expected", env!("CARGO_MANIFEST_DIR"))).unwrap();
    assert!(check_soundness(&q1, &s1, &parse_shapes(&listed).unwrap(), 2, true).is_ok());

    let tautology = parse_axioms("Bottom <: Top").unwrap();
    assert!(check_soundness(&q1, &[], &tautology, 2, true).is_ok());

    let copy = parse_query("CONSTRUCT { ?x a :A } WHERE { ?x a :A }").unwrap();
    let bogus = parse_axioms(":A <: Bottom").unwrap();
    let c = check_soundness(&copy, &[], &bogus, 1, false).unwrap_err();
    assert_eq!(c.graph.concepts.len(), 1);
    assert!(c.graph.roles.is_empty());
    assert_eq!(c.shape, bogus[0]);
}

#[test]
fn bounded_model_examples() {
    let kb = KnowledgeBase {
        tbox: parse_axioms("Top <: {:a}\n:A <: Bottom").unwrap(),
        abox: vec![construct_shapes::model::Assertion::Concept(ind("a"), ConceptExpr::atom("A"))],
    };
    assert!(!bounded_model_consistent(&kb, 1));
    let kb = KnowledgeBase {
        tbox: parse_axioms("Top <: {:a} or {:b}").unwrap(),
        abox: vec![],
    };
    assert!(bounded_model_consistent(&kb, 2));
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (any::<u8>(), any::<u8>()).prop_map(|(c, r)| {
        let mut g = Graph::new();
        let i = ["a", "b"];
        for k in 0..2 {
            if c >> k & 1 == 1 {
                g.add_concept(ind(i[k]), ConceptName::new("A"));
            }
        }
        for k in 0..4 {
            if r >> k & 1 == 1 {
                g.add_role(ind(i[k / 2]), ind(i[k % 2]), RoleName::new("p"));
            }
        }
        g
    })
}

fn small_concept() -> impl Strategy<Value = ConceptExpr> {
    concept().prop_map(|c| {
        c.map_names(
            &|n| if n.base() == "B" { ConceptName::new("A") } else { n.clone() },
            &|r| r.clone(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn model_and_proof_validity_agree(g in small_graph(), c in small_concept(), d in small_concept()) {
        let dom = [ind("a"), ind("b")];
        let ax = Axiom::sub(c, d);
        prop_assume!(ax.individuals().iter().all(|a| dom.contains(a)));
        let voc = Vocabulary { concepts: [ConceptName::new("A")].into(), roles: [RoleName::new("p")].into() };
        let mut kb = validation_kb(&g, &dom, &voc);
        kb.tbox.push(ax.clone());
        let model = holds_with_domain(&g, &ax, &dom);
        prop_assert_eq!(bounded_model_consistent(&kb, 2), model);
        prop_assert_eq!(is_consistent(&kb, &ReasonerConfig::default()).unwrap(), model);
    }
}

fn random_query() -> impl Strategy<Value = Query> {
    any::<u64>().prop_map(|seed| {
        use rand::SeedableRng;
        common::small_query(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #[test]
    fn query_evaluation_is_monotone(q in random_query(), g in graph(), h in graph()) {
        let mut big = g.clone();
        big.union(&h);
        let small = eval_query(&q, &g);
        let large = eval_query(&q, &big);
        prop_assert!(small.concepts.is_subset(&large.concepts));
        prop_assert!(small.roles.is_subset(&large.roles));
    }

    #[test]
    fn extended_graph_and_interpretation_agree(q in random_query(), g in graph(), c in concept(), d in concept()) {
        let dom = domain();
        let ext_graph = Interpretation::canonical(&extended_graph(&q, &g), dom.clone());
        let (ext, produced) = extended_interpretation(&q, &Interpretation::canonical(&g, dom));
        prop_assert_eq!(produced, !eval_query(&q, &g).is_empty());
        let vars: Vec<ConceptName> = q.pattern_vars().iter().map(ConceptName::var).collect();
        for m in [Marking::Plain, Marking::Med, Marking::Out] {
            let ax = Axiom::sub(c.clone(), d.clone()).with_marking(m);
            prop_assert_eq!(ext.holds(&ax), ext_graph.holds(&ax));
            for v in &vars {
                let with_v = Axiom::sub(ConceptExpr::Atom(v.clone()), ax_rhs(&ax));
                prop_assert_eq!(ext.holds(&with_v), ext_graph.holds(&with_v));
            }
        }
    }

    #[test]
    fn marked_axioms_hold_on_marked_parts(q in random_query(), g in graph(), c in concept(), d in concept()) {
        let dom = domain();
        let (ext, _) = extended_interpretation(&q, &Interpretation::canonical(&g, dom.clone()));
        let matched = Query::new(q.pattern().clone(), q.pattern().clone()).unwrap();
        let ax = Axiom::sub(c, d);
        for (part, m) in [(g.clone(), Marking::Plain), (eval_query(&matched, &g), Marking::Med), (eval_query(&q, &g), Marking::Out)] {
            prop_assert_eq!(holds_with_domain(&part, &ax, &dom), ext.holds(&ax.with_marking(m)));
        }
    }
}

fn ax_rhs(ax: &Axiom) -> ConceptExpr {
    match ax {
        Axiom::Concept(_, d) => d.clone(),
        Axiom::Role(..) => ConceptExpr::Top,
    }
}
