use crate::model::{Axiom, ConceptExpr, Graph, Query, QueryAtom, Shape};

pub fn render_concept(c: &ConceptExpr) -> String {
    let mut s = String::new();
    write_concept(c, &mut s);
    s
}

fn write_concept(c: &ConceptExpr, s: &mut String) {
    use ConceptExpr::*;
    match c {
        Top => s.push_str("Top"),
        Bottom => s.push_str("Bottom"),
        Atom(a) => s.push_str(&a.to_string()),
        Nominal(a) => {
            s.push('{');
            s.push_str(&a.to_string());
            s.push('}');
        }
        Not(d) => {
            s.push_str("not ");
            write_unary(d, s);
        }
        And(a, b) => {
            write_wrapped(a, matches!(**a, And(..) | Or(..)), s);
            s.push_str(" and ");
            write_wrapped(b, matches!(**b, Or(..)), s);
        }
        Or(a, b) => {
            write_wrapped(a, matches!(**a, Or(..)), s);
            s.push_str(" or ");
            write_concept(b, s);
        }
        Exists(r, d) => {
            s.push_str(&format!("exists {} . ", r));
            write_unary(d, s);
        }
        Forall(r, d) => {
            s.push_str(&format!("forall {} . ", r));
            write_unary(d, s);
        }
    }
}

fn write_unary(c: &ConceptExpr, s: &mut String) {
    write_wrapped(c, matches!(c, ConceptExpr::And(..) | ConceptExpr::Or(..)), s);
}

fn write_wrapped(c: &ConceptExpr, parens: bool, s: &mut String) {
    if parens {
        s.push('(');
        write_concept(c, s);
        s.push(')');
    } else {
        write_concept(c, s);
    }
}

pub fn render_axiom(ax: &Axiom) -> String {
    match ax {
        Axiom::Concept(c, d) => format!("{} <: {}", render_concept(c), render_concept(d)),
        Axiom::Role(r, s) => format!("role {} <: {}", r, s),
    }
}

pub fn render_shape(s: &Shape) -> String {
    render_axiom(&s.to_axiom())
}

pub fn render_axioms(axioms: &[Axiom]) -> String {
    axioms.iter().map(|a| render_axiom(a) + "\n").collect()
}

fn render_atom(a: &QueryAtom) -> String {
    a.to_string()
}

pub fn render_query(q: &Query) -> String {
    let block = |atoms: &std::collections::BTreeSet<QueryAtom>| {
        atoms.iter().map(|a| format!("  {} .\n", render_atom(a))).collect::<String>()
    };
    format!(
        "CONSTRUCT {{\n{}}} WHERE {{\n{}}}\n",
        block(q.template()),
        block(q.pattern())
    )
}

/// Triples in Turtle-like form, one per line.
pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    for (a, c) in &g.concepts {
        out += &format!("{} a {} .\n", a, c);
    }
    for (a, b, p) in &g.roles {
        out += &format!("{} {} {} .\n", a, p, b);
    }
    out
}
