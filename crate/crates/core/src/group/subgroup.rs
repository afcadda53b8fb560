use std::collections::VecDeque;

use super::{Elem, ElementSet, Group, GroupError};

/// Extends `mask` (a subgroup or `{e}`) to the subgroup generated by it and
/// `gens`. Right multiplication by the generators suffices in a finite group.
fn close_under(g: &Group, mask: &mut [bool], gens: &[Elem]) {
    let mut queue: VecDeque<Elem> = (0..g.order()).filter(|&x| mask[x]).collect();
    if queue.is_empty() {
        mask[g.identity()] = true;
        queue.push_back(g.identity());
    }
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push_back(y);
            }
        }
    }
}

/// Smallest subgroup of `g` containing `s`.
pub fn subgroup_generated(g: &Group, s: &ElementSet) -> ElementSet {
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    close_under(g, &mut mask, s.as_slice());
    ElementSet::from_mask(&mask)
}

/// Smallest subgroup containing `s` that is closed under conjugation by each
/// element of `conj_by`.
pub fn normal_closure_under(g: &Group, conj_by: &[Elem], s: &ElementSet) -> ElementSet {
    let mut gens: Vec<Elem> = s.iter().collect();
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    close_under(g, &mut mask, &gens);
    // closing the generators under conjugation by conj_by closes the subgroup
    let mut i = 0;
    while i < gens.len() {
        let h = gens[i];
        for &c in conj_by {
            let hc = g.conjugate(h, c);
            if !mask[hc] {
                gens.push(hc);
                close_under(g, &mut mask, &gens);
            }
        }
        i += 1;
    }
    ElementSet::from_mask(&mask)
}

/// Normal closure `⟨S⟩^G`.
pub fn normal_closure(g: &Group, s: &ElementSet) -> ElementSet {
    normal_closure_under(g, g.generators(), s)
}

/// `[A, B]`, the subgroup generated by all `[a, b]`.
pub fn commutator_subgroup(g: &Group, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let comms: ElementSet = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| g.commutator(x, y)))
        .collect();
    subgroup_generated(g, &comms)
}

/// `G'`, generated by all commutators of `g`.
pub fn derived_subgroup(g: &Group) -> ElementSet {
    let all = g.all();
    commutator_subgroup(g, &all, &all)
}

pub fn is_subgroup(g: &Group, s: &ElementSet) -> bool {
    if !s.contains(g.identity()) {
        return false;
    }
    let mask = s.mask(g.order());
    s.iter().all(|a| s.iter().all(|b| mask[g.mul(a, b)]))
}

/// True when `s` is closed under conjugation by all of `g`.
pub fn is_normal(g: &Group, s: &ElementSet) -> bool {
    let mask = s.mask(g.order());
    s.iter()
        .all(|x| g.generators().iter().all(|&c| mask[g.conjugate(x, c)]))
}

pub fn is_abelian(g: &Group, s: &ElementSet) -> bool {
    s.iter()
        .all(|a| s.iter().all(|b| g.mul(a, b) == g.mul(b, a)))
}

fn require_subgroup(g: &Group, h: &ElementSet) -> Result<(), GroupError> {
    if h.iter().any(|x| x >= g.order()) {
        return Err(GroupError::NotASubgroup("index out of range".into()));
    }
    if !is_subgroup(g, h) {
        return Err(GroupError::NotASubgroup(format!(
            "set of {} elements is not closed under multiplication",
            h.len()
        )));
    }
    Ok(())
}

/// `H = γ₁ ≥ γ₂ = [γ₁, H] ≥ ...` until it stabilises; the last entry is the
/// stable term.
pub fn lower_central_series(g: &Group, h: &ElementSet) -> Result<Vec<ElementSet>, GroupError> {
    require_subgroup(g, h)?;
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, h);
        if &next == last {
            return Ok(series);
        }
        series.push(next);
    }
}

/// `H ≥ H' ≥ H'' ≥ ...` until it stabilises.
pub fn derived_series(g: &Group, h: &ElementSet) -> Result<Vec<ElementSet>, GroupError> {
    require_subgroup(g, h)?;
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if &next == last {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &Group, h: &ElementSet) -> Result<bool, GroupError> {
    let series = lower_central_series(g, h)?;
    Ok(series.last().unwrap().len() == 1)
}

/// `G'' = 1`.
pub fn is_metabelian(g: &Group) -> bool {
    let series = derived_series(g, &g.all()).expect("whole group is a subgroup");
    series.len() <= 3 && series.last().unwrap().len() == 1
}

pub fn centralizer(g: &Group, x: Elem) -> ElementSet {
    (0..g.order())
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .collect()
}

pub fn cyclic_subgroup(g: &Group, x: Elem) -> ElementSet {
    subgroup_generated(g, &ElementSet::singleton(x))
}

pub fn conjugacy_class(g: &Group, x: Elem) -> ElementSet {
    (0..g.order()).map(|y| g.conjugate(x, y)).collect()
}

/// All conjugacy classes, ordered by smallest member.
pub fn conjugacy_classes(g: &Group) -> Vec<ElementSet> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let class = conjugacy_class(g, x);
        for y in class.iter() {
            seen[y] = true;
        }
        classes.push(class);
    }
    classes
}

/// A generating set of the subgroup `h`, chosen greedily from elements of
/// large order.
pub fn small_generating_set(g: &Group, h: &ElementSet) -> Vec<Elem> {
    let mut candidates: Vec<Elem> = h.iter().filter(|&x| x != g.identity()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    for x in candidates {
        if !mask[x] {
            gens.push(x);
            close_under(g, &mut mask, &gens);
            if mask.iter().filter(|&&m| m).count() == h.len() {
                break;
            }
        }
    }
    gens
}

/// The subgroup `h` as a group in its own right.
pub fn subgroup_as_group(
    g: &Group,
    h: &ElementSet,
    name: impl Into<String>,
) -> Result<Group, GroupError> {
    require_subgroup(g, h)?;
    let mut gens: Vec<_> = small_generating_set(g, h)
        .into_iter()
        .map(|x| g.element(x).clone())
        .collect();
    if gens.is_empty() {
        gens.push(g.element(g.identity()).clone());
    }
    Group::closure(&gens, name)
}
