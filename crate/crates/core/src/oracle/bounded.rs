use crate::model::{Individual, KnowledgeBase};

use super::interp::Interpretation;

/// Whether `kb` has a model with at most `max_domain` elements. For a KB
/// whose TBox contains `⊤ ⊑ {a1} ⊔ ... ⊔ {ak}` over all its individuals and
/// `max_domain >= k`, this decides consistency.
///
/// Individuals are assigned to elements up to renaming, so each partition of
/// the individuals is tried once per domain size.
pub fn bounded_model_consistent(kb: &KnowledgeBase, max_domain: usize) -> bool {
    let inds: Vec<Individual> = kb.individuals().into_iter().collect();
    let voc = kb.vocabulary();
    let concepts: Vec<_> = voc.concepts.into_iter().collect();
    let roles: Vec<_> = voc.roles.into_iter().collect();
    for n in 1..=max_domain.max(1) {
        let bits = concepts.len() * n + roles.len() * n * n;
        assert!(bits < 40, "bounded model search space too large");
        let labels = (0..n).map(|i| Individual::new(&format!("_e{}", i))).collect();
        let mut it = Interpretation::new(labels);
        let cslots: Vec<usize> = concepts.iter().map(|c| it.concept_slot(c)).collect();
        let rslots: Vec<usize> = roles.iter().map(|r| it.role_slot(r)).collect();
        let mut found = false;
        for_each_partition(inds.len(), n, &mut |blocks| {
            if found {
                return;
            }
            for (a, &b) in inds.iter().zip(blocks) {
                it.set_nominal(a.clone(), b);
            }
            for k in 0..1u64 << bits {
                let mut off = 0;
                for &s in &cslots {
                    it.set_concept_mask(s, (k >> off) & ((1 << n) - 1));
                    off += n;
                }
                for (ri, &s) in rslots.iter().enumerate() {
                    it.clear_role(s);
                    for i in 0..n {
                        for j in 0..n {
                            if k >> off & 1 == 1 {
                                it.add_role(&roles[ri], i, j);
                            }
                            off += 1;
                        }
                    }
                }
                if kb.tbox.iter().all(|a| it.holds(a)) && kb.abox.iter().all(|a| it.satisfies(a)) {
                    found = true;
                    return;
                }
            }
        });
        if found {
            return true;
        }
    }
    false
}

/// Calls `f` with every restricted-growth assignment of `k` items to blocks
/// `0..n`.
fn for_each_partition(k: usize, n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(i: usize, k: usize, n: usize, used: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if i == k {
            f(cur);
            return;
        }
        for b in 0..(used + 1).min(n) {
            cur.push(b);
            go(i + 1, k, n, used.max(b + 1), cur, f);
            cur.pop();
        }
    }
    go(0, k, n, 0, &mut Vec::new(), f);
}
