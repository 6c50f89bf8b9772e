use std::collections::{BTreeMap, BTreeSet};

use super::closure::term_concept;
use super::vcg::{components, Vcg};
use crate::model::{Axiom, ConceptExpr, Query, QueryAtom, Shape, Term, Variable};

pub type ComponentMap = BTreeMap<Variable, Term>;

/// Every map `h` from the variables of `from` to terms with `h(from) ⊆ to`.
pub fn component_maps(from: &BTreeSet<QueryAtom>, to: &BTreeSet<QueryAtom>) -> Vec<ComponentMap> {
    let atoms: Vec<&QueryAtom> = from.iter().collect();
    let mut out = Vec::new();
    extend_map(&atoms, to, &mut BTreeMap::new(), &mut out);
    out
}

fn bind(h: &mut ComponentMap, t: &Term, image: &Term, trail: &mut Vec<Variable>) -> bool {
    match t {
        Term::Ind(_) => t == image,
        Term::Var(v) => match h.get(v) {
            Some(u) => u == image,
            None => {
                h.insert(v.clone(), image.clone());
                trail.push(v.clone());
                true
            }
        },
    }
}

fn extend_map(atoms: &[&QueryAtom], to: &BTreeSet<QueryAtom>, h: &mut ComponentMap, out: &mut Vec<ComponentMap>) {
    let Some((first, rest)) = atoms.split_first() else {
        out.push(h.clone());
        return;
    };
    for cand in to {
        let mut trail = Vec::new();
        let ok = match (first, cand) {
            (QueryAtom::Concept(t, a), QueryAtom::Concept(u, b)) => a == b && bind(h, t, u, &mut trail),
            (QueryAtom::Role(s, o, p), QueryAtom::Role(s2, o2, r)) => {
                p == r && bind(h, s, s2, &mut trail) && bind(h, o, o2, &mut trail)
            }
            _ => false,
        };
        if ok {
            extend_map(rest, to, h, out);
        }
        for v in trail {
            h.remove(&v);
        }
    }
}

/// Whether `u` is a focus node of the shape target in `atoms`.
fn is_target_of(u: &Term, target: &ConceptExpr, atoms: &BTreeSet<QueryAtom>) -> bool {
    match target {
        ConceptExpr::Atom(a) => atoms.contains(&QueryAtom::Concept(u.clone(), a.clone())),
        ConceptExpr::Exists(r, _) => atoms.iter().any(|at| match at {
            QueryAtom::Role(s, o, p) if *p == r.name => (if r.inverse { o } else { s }) == u,
            _ => false,
        }),
        _ => false,
    }
}

/// The atoms a shape constraint adds for focus node `x`: a concept atom, a
/// fresh successor, or the constraint on every existing successor.
pub fn ext_atoms(
    x: &Term,
    constraint: &ConceptExpr,
    atoms: &BTreeSet<QueryAtom>,
    fresh: &mut impl FnMut() -> Variable,
) -> BTreeSet<QueryAtom> {
    match constraint {
        ConceptExpr::Atom(a) => BTreeSet::from([QueryAtom::Concept(x.clone(), a.clone())]),
        ConceptExpr::Exists(r, f) => {
            let ConceptExpr::Atom(a) = &**f else { return BTreeSet::new() };
            let y = Term::Var(fresh());
            let edge = if r.inverse {
                QueryAtom::Role(y.clone(), x.clone(), r.name.clone())
            } else {
                QueryAtom::Role(x.clone(), y.clone(), r.name.clone())
            };
            BTreeSet::from([edge, QueryAtom::Concept(y, a.clone())])
        }
        ConceptExpr::Forall(r, f) => {
            let ConceptExpr::Atom(a) = &**f else { return BTreeSet::new() };
            atoms
                .iter()
                .filter_map(|at| match at {
                    QueryAtom::Role(s, o, p) if *p == r.name => {
                        let (from, to) = if r.inverse { (o, s) } else { (s, o) };
                        (from == x).then(|| QueryAtom::Concept(to.clone(), a.clone()))
                    }
                    _ => None,
                })
                .collect()
        }
        _ => BTreeSet::new(),
    }
}

/// Upper bound on atoms added per variable, a guard against shape sets that
/// keep adding concept atoms.
const MAX_ADDED: usize = 256;

/// Saturates `part` with the atoms the input shapes force around each of its
/// variables. Fresh variables are introduced at most `depth` steps away from
/// the variable being extended, where `depth` is one more than the largest
/// component diameter in `pattern`; nothing further out can be the image of
/// a pattern component.
pub fn max_ext(part: &BTreeSet<QueryAtom>, pattern: &BTreeSet<QueryAtom>, sin: &[Axiom]) -> BTreeSet<QueryAtom> {
    let shapes: Vec<Shape> = sin.iter().filter_map(Shape::from_axiom).collect();
    let depth_bound = Vcg::new(pattern).max_diameter() + 1;
    let mut result = part.clone();
    let mut counter = 0usize;
    for x in crate::model::vars_of(part) {
        let mut ext = part.clone();
        let mut depth: BTreeMap<Variable, usize> = BTreeMap::from([(x.clone(), 0)]);
        let mut applied: BTreeSet<(Variable, usize)> = BTreeSet::new();
        loop {
            let before = ext.len();
            let focus: Vec<(Variable, usize)> = depth.iter().map(|(v, d)| (v.clone(), *d)).collect();
            for (j, s) in shapes.iter().enumerate() {
                for (u, d) in &focus {
                    let ut = Term::Var(u.clone());
                    if !is_target_of(&ut, s.target(), &ext) {
                        continue;
                    }
                    let creates = matches!(s.constraint(), ConceptExpr::Exists(..));
                    if creates {
                        if *d + 1 > depth_bound || !applied.insert((u.clone(), j)) {
                            continue;
                        }
                    }
                    let mut fresh = || {
                        counter += 1;
                        let v = Variable::new(&format!("{}#{}", x.as_str(), counter));
                        depth.insert(v.clone(), d + 1);
                        v
                    };
                    let added = ext_atoms(&ut, s.constraint(), &ext, &mut fresh);
                    ext.extend(added);
                }
            }
            if ext.len() == before || ext.len() > part.len() + MAX_ADDED {
                break;
            }
        }
        result.extend(ext);
    }
    result
}

/// Inclusions `C_{h(x)} ⊑ V_x` for every map `h` from a pattern component
/// into the saturated extension of a pattern component, where `h(x)` is a
/// variable of the target component.
///
/// Individuals as images are skipped: `{a} ⊑ V_x` fails whenever the
/// pattern has no match.
pub fn ma_sin(q: &Query, sin: &[Axiom]) -> Vec<Axiom> {
    let pat = q.pattern();
    let comps = components(pat);
    let mut out = BTreeSet::new();
    for p2 in &comps {
        let ext = max_ext(p2, pat, sin);
        let p2_vars = crate::model::vars_of(p2);
        for p1 in &comps {
            for h in component_maps(p1, &ext) {
                for (x, u) in &h {
                    match u {
                        Term::Var(v) if p2_vars.contains(v) && v != x => {
                            out.insert(Axiom::sub(term_concept(u), term_concept(&Term::Var(x.clone()))));
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
