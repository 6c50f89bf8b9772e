use std::collections::{BTreeMap, BTreeSet};

use super::vcg::{components, is_acyclic};
use crate::model::{Axiom, ConceptExpr, ConceptName, Marking, Query, QueryAtom, Role, RoleName, Term};

/// `C_u`: a nominal for an individual, the variable concept for a variable.
pub fn term_concept(t: &Term) -> ConceptExpr {
    match t {
        Term::Var(v) => ConceptExpr::Atom(ConceptName::var(v)),
        Term::Ind(a) => ConceptExpr::Nominal(a.clone()),
    }
}

/// Pairwise disjointness of the query's individuals.
pub fn una(q: &Query) -> Vec<Axiom> {
    let inds: Vec<_> = q.individuals().into_iter().collect();
    let mut out = Vec::new();
    for (i, a) in inds.iter().enumerate() {
        for b in &inds[i + 1..] {
            let both = ConceptExpr::and(ConceptExpr::Nominal(a.clone()), ConceptExpr::Nominal(b.clone()));
            out.extend(Axiom::equiv(both, ConceptExpr::Bottom));
        }
    }
    out
}

fn occurrences(atoms: &BTreeSet<QueryAtom>, t: &Term) -> usize {
    atoms.iter().filter(|a| a.terms().contains(&t)).count()
}

fn disjoint(s: &Term, t: &Term) -> bool {
    matches!((s, t), (Term::Ind(a), Term::Ind(b)) if a != b)
}

/// Role atoms of `atoms` grouped by role name.
fn role_atoms(atoms: &BTreeSet<QueryAtom>) -> BTreeMap<RoleName, Vec<(Term, Term)>> {
    let mut out: BTreeMap<RoleName, Vec<(Term, Term)>> = BTreeMap::new();
    for a in atoms {
        if let QueryAtom::Role(s, o, p) = a {
            out.entry(p.clone()).or_default().push((s.clone(), o.clone()));
        }
    }
    out
}

/// Closed-world axioms for one role's atoms, marked `m`.
///
/// The `∃ρ.C_v ⊑ ⊔ C_u` direction is only emitted when every `ρ`-edge
/// reaching `C_v` must come from an atom ending in `v`: either all atoms end
/// in `v` (or in another individual), or, for pattern atoms, some atom
/// `(u,v)` has a variable `u` that occurs nowhere else, so that any edge into
/// a value of `v` yields a match.
fn role_closure(
    p: &RoleName,
    edges: &[(Term, Term)],
    m: Marking,
    pattern: Option<&BTreeSet<QueryAtom>>,
    out: &mut Vec<Axiom>,
) {
    for inverse in [false, true] {
        let role = Role {
            name: p.with_marking(m),
            inverse,
        };
        let oriented: Vec<(&Term, &Term)> = edges
            .iter()
            .map(|(s, o)| if inverse { (o, s) } else { (s, o) })
            .collect();
        let ends: BTreeSet<&Term> = oriented.iter().map(|(_, o)| *o).collect();
        for v in ends {
            let sources = ConceptExpr::or_all(
                oriented
                    .iter()
                    .filter(|(_, o)| *o == v)
                    .map(|(s, _)| term_concept(s))
                    .collect::<BTreeSet<_>>(),
            );
            let lhs = ConceptExpr::exists(role.clone(), term_concept(v));
            out.push(Axiom::sub(sources.clone(), lhs.clone()));
            let all_end_here = oriented.iter().all(|(_, o)| *o == v || disjoint(o, v));
            let free_source = pattern.is_some_and(|pat| {
                oriented.iter().any(|(s, o)| {
                    *o == v && s != o && matches!(s, Term::Var(_)) && occurrences(pat, s) == 1
                })
            });
            if all_end_here || free_source {
                out.push(Axiom::sub(lhs, sources));
            }
        }
        let domain = ConceptExpr::or_all(
            oriented
                .iter()
                .map(|(s, o)| ConceptExpr::and(term_concept(s), ConceptExpr::exists(role.clone(), term_concept(o))))
                .collect::<BTreeSet<_>>(),
        );
        out.extend(Axiom::equiv(ConceptExpr::exists(role.clone(), ConceptExpr::Top), domain));
    }
}

/// Closed-world axioms tying marked names and variable concepts to the
/// pattern and template.
pub fn cwa(q: &Query) -> Vec<Axiom> {
    let (pat, tpl) = (q.pattern(), q.template());
    let mut out = Vec::new();

    let concept_terms = |atoms: &BTreeSet<QueryAtom>| {
        let mut by: BTreeMap<ConceptName, BTreeSet<ConceptExpr>> = BTreeMap::new();
        for a in atoms {
            if let QueryAtom::Concept(t, c) = a {
                by.entry(c.clone()).or_default().insert(term_concept(t));
            }
        }
        by
    };
    for (c, terms) in concept_terms(pat) {
        let rhs = ConceptExpr::and(ConceptExpr::Atom(c.clone()), ConceptExpr::or_all(terms));
        out.extend(Axiom::equiv(ConceptExpr::Atom(c.with_marking(Marking::Med)), rhs));
    }
    for (c, terms) in concept_terms(tpl) {
        out.extend(Axiom::equiv(ConceptExpr::Atom(c.with_marking(Marking::Out)), ConceptExpr::or_all(terms)));
    }

    let comps = components(pat);
    for x in q.pattern_vars() {
        let xt = Term::Var(x.clone());
        let mut conj = Vec::new();
        let mut var_neighbour = false;
        for a in pat {
            match a {
                QueryAtom::Concept(t, c) if *t == xt => conj.push(ConceptExpr::Atom(c.clone())),
                QueryAtom::Role(s, o, p) => {
                    let role = Role::new(p.clone());
                    if *s == xt {
                        conj.push(ConceptExpr::exists(role.clone(), term_concept(o)));
                        var_neighbour |= matches!(o, Term::Var(_)) && *o != xt;
                    }
                    if *o == xt {
                        conj.push(ConceptExpr::exists(role.inverted(), term_concept(s)));
                        var_neighbour |= matches!(s, Term::Var(_)) && *s != xt;
                    }
                }
                _ => {}
            }
        }
        let vx = ConceptExpr::Atom(ConceptName::var(&x));
        let conj = ConceptExpr::and_all(conj);
        out.push(Axiom::sub(vx.clone(), conj.clone()));
        let comp = comps
            .iter()
            .find(|c| c.iter().any(|a| a.vars().any(|v| *v == x)))
            .expect("variable occurs in the pattern");
        if is_acyclic(comp) && (var_neighbour || comps.len() == 1) {
            out.push(Axiom::sub(conj, vx));
        }
    }

    for (p, edges) in role_atoms(pat) {
        role_closure(&p, &edges, Marking::Med, Some(pat), &mut out);
    }
    for (p, edges) in role_atoms(tpl) {
        role_closure(&p, &edges, Marking::Out, None, &mut out);
    }
    out
}
