#![allow(dead_code)]
//! Proptest strategies over a two-concept, one-role vocabulary.

use construct_shapes::model::{ConceptExpr, ConceptName, Graph, Individual, Role, RoleName};
use proptest::prelude::*;

pub const INDIVIDUALS: [&str; 3] = ["a", "b", "c"];

pub fn role() -> impl Strategy<Value = Role> {
    any::<bool>().prop_map(|inv| {
        let p = RoleName::new("p");
        if inv {
            Role::inv(p)
        } else {
            Role::new(p)
        }
    })
}

pub fn concept() -> impl Strategy<Value = ConceptExpr> {
    let leaf = prop_oneof![
        Just(ConceptExpr::Top),
        Just(ConceptExpr::Bottom),
        Just(ConceptExpr::atom("A")),
        Just(ConceptExpr::atom("B")),
        (0..INDIVIDUALS.len()).prop_map(|i| ConceptExpr::nominal(INDIVIDUALS[i])),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ConceptExpr::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConceptExpr::or(a, b)),
            (role(), inner.clone()).prop_map(|(r, c)| ConceptExpr::exists(r, c)),
            (role(), inner).prop_map(|(r, c)| ConceptExpr::forall(r, c)),
        ]
    })
}

/// Graphs over `a`, `b`, `c` with names `A`, `B`, `p`, as bit masks.
pub fn graph() -> impl Strategy<Value = Graph> {
    any::<(u8, u16)>().prop_map(|(cm, rm)| {
        let mut g = Graph::new();
        let ind = |i: usize| Individual::new(INDIVIDUALS[i]);
        for (k, c) in ["A", "B"].iter().enumerate() {
            for i in 0..3 {
                if cm >> (k * 3 + i) & 1 == 1 {
                    g.add_concept(ind(i), ConceptName::new(c));
                }
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                if rm >> (i * 3 + j) & 1 == 1 {
                    g.add_role(ind(i), ind(j), RoleName::new("p"));
                }
            }
        }
        g
    })
}

pub fn domain() -> Vec<Individual> {
    INDIVIDUALS.iter().map(|a| Individual::new(a)).collect()
}
