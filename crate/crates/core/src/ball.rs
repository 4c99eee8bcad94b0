use std::collections::BTreeSet;

use crate::family::Family;

/// Deterministic shortlex enumeration of products of at most `radius`
/// generators, in order of first appearance. Includes the identity when the
/// family has one (the empty product).
pub fn shortlex_ball<S: Family>(fam: &S, gens: &[S::Elem], radius: usize) -> Vec<S::Elem> {
    let mut out: Vec<S::Elem> = Vec::new();
    let mut seen: BTreeSet<S::Elem> = BTreeSet::new();
    let mut frontier: Vec<S::Elem> = Vec::new();

    if let Some(one) = fam.identity() {
        seen.insert(one.clone());
        out.push(one.clone());
        frontier.push(one);
    } else {
        for g in gens {
            if seen.insert(g.clone()) {
                out.push(g.clone());
                frontier.push(g.clone());
            }
        }
    }

    let start_len = if fam.has_identity() { 0 } else { 1 };
    for _ in start_len..radius {
        let mut next: Vec<S::Elem> = Vec::new();
        for w in &frontier {
            for g in gens {
                let e = fam.multiply(w, g);
                if seen.insert(e.clone()) {
                    out.push(e.clone());
                }
                // all words of the next length extend some word of this
                // length, so the frontier keeps every product
                next.push(e);
            }
        }
        next.sort();
        next.dedup();
        frontier = next;
    }
    out
}

/// Units reachable as products of at most `depth` unit generators.
/// Starts from the identity; empty when the family has none.
pub fn unit_ball<S: Family>(fam: &S, depth: usize) -> Vec<S::Elem> {
    let Some(one) = fam.identity() else {
        return Vec::new();
    };
    let gens = fam.unit_generators();
    let mut out = vec![one.clone()];
    let mut seen: BTreeSet<S::Elem> = BTreeSet::new();
    seen.insert(one.clone());
    let mut frontier = vec![one];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let e = fam.multiply(w, g);
                debug_assert!(fam.is_unit(&e));
                if seen.insert(e.clone()) {
                    out.push(e.clone());
                    next.push(e);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}
