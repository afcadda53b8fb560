//! Isomorphism of small groups by extending generator images.

use std::collections::VecDeque;

use super::{small_generating_set, Elem, Group};

fn order_profile(g: &Group) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    orders
}

/// Tries to extend `images[i] = φ(gens[i])` to a homomorphism `g → h` along
/// the Cayley graph of `g`. Returns the element map when it is well defined
/// and injective.
fn extend(g: &Group, h: &Group, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let n = g.order();
    let mut phi: Vec<Option<Elem>> = vec![None; n];
    phi[g.identity()] = Some(h.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(u) = queue.pop_front() {
        let pu = phi[u].unwrap();
        for (&s, &img) in gens.iter().zip(images) {
            let v = g.mul(u, s);
            let pv = h.mul(pu, img);
            match phi[v] {
                Some(existing) if existing != pv => return None,
                Some(_) => {}
                None => {
                    phi[v] = Some(pv);
                    queue.push_back(v);
                }
            }
        }
    }
    let map: Vec<Elem> = phi.into_iter().collect::<Option<Vec<_>>>()?;
    let mut hit = vec![false; h.order()];
    for &y in &map {
        if std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    Some(map)
}

/// An isomorphism `g → h` as an element map, if one exists.
pub fn find_group_isomorphism(g: &Group, h: &Group) -> Option<Vec<Elem>> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return None;
    }
    let gens = small_generating_set(g, &g.all());
    if gens.is_empty() {
        return Some(vec![h.identity()]);
    }
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let ord = g.element_order(s);
            (0..h.order())
                .filter(|&y| h.element_order(y) == ord)
                .collect()
        })
        .collect();

    let mut images = vec![0; gens.len()];
    fn search(
        depth: usize,
        g: &Group,
        h: &Group,
        gens: &[Elem],
        candidates: &[Vec<Elem>],
        images: &mut Vec<Elem>,
    ) -> Option<Vec<Elem>> {
        if depth == gens.len() {
            return extend(g, h, gens, images);
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            if let Some(map) = search(depth + 1, g, h, gens, candidates, images) {
                return Some(map);
            }
        }
        None
    }
    search(0, g, h, &gens, &candidates, &mut images)
}

pub fn groups_isomorphic(g: &Group, h: &Group) -> bool {
    find_group_isomorphism(g, h).is_some()
}
