use std::collections::BTreeSet;

use crate::model::{Axiom, Marking, Query, QueryAtom, Role, RoleName, Term};

fn atoms_with<'a>(atoms: &'a BTreeSet<QueryAtom>, p: &RoleName) -> Vec<(&'a Term, &'a Term)> {
    atoms
        .iter()
        .filter_map(|a| match a {
            QueryAtom::Role(s, o, r) if r == p => Some((s, o)),
            _ => None,
        })
        .collect()
}

/// Role inclusions between input, pattern-match and result roles.
///
/// `p ⊑ ṗ` needs every `p`-edge of the input to be part of a match. That only
/// holds when the pattern consists of `p`-atoms over pairwise distinct
/// variables: any single edge then matches the whole pattern.
pub fn rs(q: &Query) -> Vec<Axiom> {
    let (pat, tpl) = (q.pattern(), q.template());
    let mut out = BTreeSet::new();
    let pattern_roles: BTreeSet<&RoleName> = pat.iter().filter_map(QueryAtom::role_name).collect();
    for &p in &pattern_roles {
        let med = Role::new(p.with_marking(Marking::Med));
        let plain = Role::new(p.clone());
        out.insert(Axiom::Role(med.clone(), plain.clone()));

        let only_free_p_atoms = pat.iter().all(|a| match a {
            QueryAtom::Role(s @ Term::Var(_), o @ Term::Var(_), r) => {
                r == p && s != o && pat.iter().filter(|b| b.terms().contains(&s) || b.terms().contains(&o)).count() == 1
            }
            _ => false,
        });
        if only_free_p_atoms {
            out.insert(Axiom::Role(plain, med.clone()));
        }

        let p_atoms = atoms_with(pat, p);
        for (s, o) in &p_atoms {
            for r in tpl.iter().filter_map(QueryAtom::role_name).collect::<BTreeSet<_>>() {
                let r_atoms = atoms_with(tpl, r);
                for flipped in [false, true] {
                    let wanted = if flipped { (*o, *s) } else { (*s, *o) };
                    if !r_atoms.contains(&wanted) {
                        continue;
                    }
                    let out_role = Role {
                        name: r.with_marking(Marking::Out),
                        inverse: flipped,
                    };
                    if p_atoms.len() == 1 {
                        out.insert(Axiom::Role(med.clone(), out_role.clone()));
                    }
                    if r_atoms.len() == 1 {
                        out.insert(Axiom::Role(out_role, med.clone()));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
