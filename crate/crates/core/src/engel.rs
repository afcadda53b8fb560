//! Iterated commutators, left Engel elements and the Fitting subgroup.
//!
//! For a fixed `x` the map `y ↦ [y, x]` is a function on a finite set with the
//! identity as a fixed point. So `[a,_k x]` either reaches the identity within
//! `|G|` steps or enters a cycle that avoids it forever; every decision here
//! rests on that.

use thiserror::Error;

use crate::group::{
    is_abelian, is_nilpotent, is_normal, is_subgroup, normal_closure_under, Elem, ElementSet, Group,
};
use crate::perm::lcm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngelError {
    #[error("Baer verification failed: {0}")]
    BaerViolation(String),
    #[error("engel adjacency is undefined for a vertex and itself")]
    SameVertex,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// Result of iterating `a ↦ [a, x]`: the smallest `k` with `[a,_k x] = 1`,
/// when there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngelOutcome {
    steps: Option<usize>,
}

impl EngelOutcome {
    pub fn reached(&self) -> bool {
        self.steps.is_some()
    }

    pub fn steps(&self) -> Option<usize> {
        self.steps
    }
}

/// `[a,_k x]`: `a` for `k = 0`, then `[[a,_{k-1} x], x]`.
pub fn iterated_commutator(g: &Group, a: Elem, x: Elem, k: usize) -> Elem {
    (0..k).fold(a, |acc, _| g.commutator(acc, x))
}

/// Iterates `[a,_k x]` for at most `|G|` steps, stopping early if the
/// sequence revisits a value (Brent's cycle detection).
pub fn engel_reaches_identity(g: &Group, a: Elem, x: Elem) -> EngelOutcome {
    let e = g.identity();
    let mut cur = a;
    let mut saved = a;
    let mut power = 1usize;
    let mut lam = 0usize;
    for k in 0..=g.order() {
        if cur == e {
            return EngelOutcome { steps: Some(k) };
        }
        if k == g.order() {
            break;
        }
        cur = g.commutator(cur, x);
        lam += 1;
        if cur == saved {
            break;
        }
        if lam == power {
            saved = cur;
            power *= 2;
            lam = 0;
        }
    }
    EngelOutcome { steps: None }
}

/// For fixed `x`, the Engel step count of every `a ∈ G` at once, by walking
/// the functional graph of `y ↦ [y, x]` with memoisation.
pub fn engel_steps_towards(g: &Group, x: Elem) -> Vec<Option<u32>> {
    let n = g.order();
    let mut steps: Vec<Option<Option<u32>>> = vec![None; n];
    steps[g.identity()] = Some(Some(0));
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        if steps[start].is_some() {
            continue;
        }
        path.clear();
        let mut cur = start;
        let tail = loop {
            if let Some(s) = steps[cur] {
                break s;
            }
            if on_path[cur] {
                break None;
            }
            on_path[cur] = true;
            path.push(cur);
            cur = g.commutator(cur, x);
        };
        let mut t = tail;
        for &p in path.iter().rev() {
            t = t.map(|k| k + 1);
            steps[p] = Some(t);
            on_path[p] = false;
        }
    }
    steps.into_iter().map(|s| s.unwrap()).collect()
}

pub fn is_left_engel(g: &Group, x: Elem) -> bool {
    engel_steps_towards(g, x).iter().all(Option::is_some)
}

/// `[a,_k x] = 1` for every `a`.
pub fn is_left_k_engel(g: &Group, x: Elem, k: usize) -> bool {
    (0..g.order()).all(|a| iterated_commutator(g, a, x, k) == g.identity())
}

/// `L(G)`.
pub fn left_engel_set(g: &Group) -> ElementSet {
    (0..g.order()).filter(|&x| is_left_engel(g, x)).collect()
}

/// Elements that are left `k`-Engel for some `k ≤ |G|`. Applies `y ↦ [y, x]`
/// to the whole group simultaneously, so it does not share code with
/// [`left_engel_set`].
pub fn bounded_left_engel_set(g: &Group) -> ElementSet {
    let e = g.identity();
    (0..g.order())
        .filter(|&x| {
            let mut image: ElementSet = g.all();
            for _ in 0..g.order() {
                if image.len() == 1 && image.contains(e) {
                    return true;
                }
                image = image.iter().map(|y| g.commutator(y, x)).collect();
            }
            image.len() == 1 && image.contains(e)
        })
        .collect()
}

/// `L(G)`, after checking it is a normal nilpotent subgroup.
pub fn fitting_subgroup(g: &Group) -> Result<ElementSet, EngelError> {
    let l = left_engel_set(g);
    if !is_subgroup(g, &l) {
        return Err(EngelError::BaerViolation(format!(
            "L({}) is not a subgroup",
            g.name()
        )));
    }
    if !is_normal(g, &l) {
        return Err(EngelError::BaerViolation(format!(
            "L({}) is not normal",
            g.name()
        )));
    }
    if !is_nilpotent(g, &l).map_err(|e| EngelError::BaerViolation(e.to_string()))? {
        return Err(EngelError::BaerViolation(format!(
            "L({}) is not nilpotent",
            g.name()
        )));
    }
    Ok(l)
}

/// For every `g`, either `[x^g,_k x] = 1` or `[x,_k x^g] = 1` for some `k`.
pub fn is_randomly_engel_conjugates(g: &Group, x: Elem) -> bool {
    (0..g.order()).all(|c| {
        let xc = g.conjugate(x, c);
        engel_reaches_identity(g, xc, x).reached() || engel_reaches_identity(g, x, xc).reached()
    })
}

/// Every ordered pair `(x, y)` of `s` has `[x,_k y] = 1` for some `k`.
pub fn is_engel_set(g: &Group, s: &ElementSet) -> bool {
    s.iter()
        .all(|x| s.iter().all(|y| engel_reaches_identity(g, x, y).reached()))
}

/// Every pair of `s` has a vanishing iterated commutator in some orientation.
pub fn is_randomly_engel_set(g: &Group, s: &ElementSet) -> bool {
    let elems = s.as_slice();
    elems.iter().enumerate().all(|(i, &x)| {
        elems[i..].iter().all(|&y| {
            engel_reaches_identity(g, x, y).reached() || engel_reaches_identity(g, y, x).reached()
        })
    })
}

/// Neither Engel sequence between `x` and `y` ever reaches the identity.
pub fn engel_adjacent(g: &Group, x: Elem, y: Elem) -> Result<bool, EngelError> {
    if x == y {
        return Err(EngelError::SameVertex);
    }
    Ok(!engel_reaches_identity(g, x, y).reached() && !engel_reaches_identity(g, y, x).reached())
}

/// Checks `[a, g^{t₁}, ..., g^{t_k}] = 1 ⟹ [a,_k g^m] = 1` for `m = lcm(tᵢ)`,
/// when the normal closure of `⟨a⟩` in `⟨a, g⟩` is abelian.
///
/// Both hypotheses are verified; a failure is reported as
/// [`EngelError::PreconditionFailed`]. With the hypotheses in place the
/// return value is the conclusion.
pub fn lemma0_check(g: &Group, a: Elem, gen: Elem, ts: &[usize]) -> Result<bool, EngelError> {
    if ts.is_empty() || ts.contains(&0) {
        return Err(EngelError::PreconditionFailed(
            "exponents must be a non-empty list of positive integers".into(),
        ));
    }
    let closure = normal_closure_under(g, &[a, gen], &ElementSet::singleton(a));
    if !is_abelian(g, &closure) {
        return Err(EngelError::PreconditionFailed(
            "normal closure of <a> in <a,g> is not abelian".into(),
        ));
    }
    let lhs = ts
        .iter()
        .fold(a, |acc, &t| g.commutator(acc, g.pow(gen, t as i64)));
    if lhs != g.identity() {
        return Err(EngelError::PreconditionFailed(format!(
            "[a, g^t1, ..., g^tk] != 1 for ts = {ts:?}"
        )));
    }
    let m = ts.iter().fold(1, |acc, &t| lcm(acc, t));
    let gm = g.pow(gen, m as i64);
    Ok(iterated_commutator(g, a, gm, ts.len()) == g.identity())
}
