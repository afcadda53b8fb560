//! Per-group checks of known facts about left Engel elements and Engel graphs.
//!
//! Every failing check carries a counterexample naming the group and the
//! witnessing elements in cycle notation.

use crate::engel::{bounded_left_engel_set, fitting_subgroup, is_randomly_engel_conjugates};
use crate::graph::{
    build_engel_graph, diameter, induced_subgraph, Diameter, GraphMetrics, SimpleGraph,
};
use crate::group::{
    centralizer, conjugacy_class, cyclic_subgroup, derived_subgroup, is_abelian, is_nilpotent,
    normal_closure, subgroup_as_group, subgroup_generated, Elem, ElementSet, Group,
};

use super::CheckOutcome;

/// Order bound for the maximality and finite-collapse checks.
pub const MAXIMALITY_LIMIT: usize = 120;
/// Order bound for the conjugate characterisation of the Fitting subgroup.
pub const CONJUGATE_LIMIT: usize = 60;

pub(crate) fn show(g: &Group, x: Elem) -> String {
    g.element(x).to_string()
}

fn fail(g: &Group, msg: String) -> CheckOutcome {
    CheckOutcome::fail(format!("{}: {msg}", g.name()))
}

/// `L(G)` is a normal nilpotent subgroup.
pub fn baer(g: &Group) -> CheckOutcome {
    match fitting_subgroup(g) {
        Ok(_) => CheckOutcome::pass(),
        Err(e) => fail(g, e.to_string()),
    }
}

/// Adjoining any `y ∉ L` to `L` gives a non-nilpotent normal closure.
pub fn fitting_maximal(g: &Group, l: &ElementSet) -> CheckOutcome {
    let mut covered = l.mask(g.order());
    for y in 0..g.order() {
        if covered[y] {
            continue;
        }
        // the closure depends only on the coset yL
        for x in l.iter() {
            covered[g.mul(y, x)] = true;
        }
        let mut gens = l.clone();
        gens.insert(y);
        let n = normal_closure(g, &gens);
        if is_nilpotent(g, &n).unwrap_or(false) {
            return fail(
                g,
                format!("normal closure of L and {} is nilpotent", show(g, y)),
            );
        }
    }
    CheckOutcome::pass()
}

/// Bounded left Engel elements coincide with left Engel elements.
pub fn bounded_collapse(g: &Group, l: &ElementSet) -> CheckOutcome {
    let b = bounded_left_engel_set(g);
    match (0..g.order()).find(|&x| b.contains(x) != l.contains(x)) {
        None => CheckOutcome::pass(),
        Some(x) => fail(
            g,
            format!("{} separates bounded and unbounded Engel", show(g, x)),
        ),
    }
}

/// `x ∈ L(G)` exactly when every conjugate pair `{x, x^g}` has a vanishing
/// iterated commutator in some orientation.
pub fn randomly_engel_characterization(g: &Group, l: &ElementSet) -> CheckOutcome {
    match (0..g.order()).find(|&x| is_randomly_engel_conjugates(g, x) != l.contains(x)) {
        None => CheckOutcome::pass(),
        Some(x) => fail(
            g,
            format!("{} breaks the conjugate characterisation", show(g, x)),
        ),
    }
}

pub fn clique_at_least_3(g: &Group, m: &GraphMetrics) -> CheckOutcome {
    if m.clique_number >= 3 {
        CheckOutcome::pass()
    } else {
        fail(g, format!("clique number {}", m.clique_number))
    }
}

pub fn no_isolated_vertex(g: &Group, graph: &SimpleGraph) -> CheckOutcome {
    match (0..graph.vertex_count()).find(|&v| graph.degree(v) == 0) {
        None => CheckOutcome::pass(),
        Some(v) => fail(g, format!("{} is isolated", show(g, graph.label(v)))),
    }
}

/// A universal vertex `x` has `x² = 1` and `C_G(x) = ⟨x⟩`, and one exists
/// exactly when the diameter is 1.
pub fn universal_vertex(g: &Group, graph: &SimpleGraph) -> CheckOutcome {
    let n = graph.vertex_count();
    let universal: Vec<usize> = (0..n).filter(|&v| graph.degree(v) + 1 == n).collect();
    for &v in &universal {
        let x = graph.label(v);
        if g.mul(x, x) != g.identity() {
            return fail(
                g,
                format!("universal vertex {} is not an involution", show(g, x)),
            );
        }
        if centralizer(g, x) != cyclic_subgroup(g, x) {
            return fail(
                g,
                format!("universal vertex {} has C_G(x) != <x>", show(g, x)),
            );
        }
    }
    let diameter_one = matches!(diameter(graph), Ok(Diameter::Finite(1)));
    if !universal.is_empty() != diameter_one {
        return fail(
            g,
            "universal vertex exists but diameter is not 1, or vice versa".into(),
        );
    }
    CheckOutcome::pass()
}

/// Why `G` fails the structure forced by a diameter-1 Engel graph, if it does.
pub(crate) fn diameter_one_obstruction(
    g: &Group,
    l: &ElementSet,
    graph: &SimpleGraph,
) -> Option<String> {
    if !is_abelian(g, l) {
        return Some("L(G) is not abelian".into());
    }
    if let Some(a) = l
        .iter()
        .find(|&a| a != g.identity() && g.element_order(a) == 2)
    {
        return Some(format!("L(G) contains the involution {}", show(g, a)));
    }
    for v in 0..graph.vertex_count() {
        let x = graph.label(v);
        if g.mul(x, x) != g.identity() {
            return Some(format!("vertex {} is not an involution", show(g, x)));
        }
        let cx = cyclic_subgroup(g, x);
        let product: ElementSet = l
            .iter()
            .flat_map(|a| cx.iter().map(move |c| (a, c)))
            .map(|(a, c)| g.mul(a, c))
            .collect();
        if product.len() != g.order() || l.len() * cx.len() != g.order() {
            return Some(format!("G is not L(G) ⋊ <{}>", show(g, x)));
        }
        if let Some(a) = l.iter().find(|&a| g.conjugate(a, x) != g.inv(a)) {
            return Some(format!("{} does not invert {}", show(g, x), show(g, a)));
        }
    }
    None
}

/// Diameter 1 holds exactly when `L` is abelian without involutions and
/// every vertex is an involution complementing and inverting `L`.
pub fn diameter_one(g: &Group, l: &ElementSet, graph: &SimpleGraph) -> CheckOutcome {
    let is_one = matches!(diameter(graph), Ok(Diameter::Finite(1)));
    let obstruction = diameter_one_obstruction(g, l, graph);
    match (is_one, obstruction) {
        (true, None) | (false, Some(_)) => CheckOutcome::pass(),
        (true, Some(why)) => fail(g, format!("diameter 1 but {why}")),
        (false, None) => fail(g, "structure holds but diameter is not 1".into()),
    }
}

/// `Some(y)` with `G = ⟨L, y⟩` when `G/L` is cyclic.
pub(crate) fn cyclic_quotient_generator(g: &Group, l: &ElementSet) -> Option<Elem> {
    (0..g.order()).find(|&y| {
        let mut s = l.clone();
        s.insert(y);
        subgroup_generated(g, &s).len() == g.order()
    })
}

/// Nilpotent-by-cyclic groups have connected Engel graphs of diameter ≤ 6.
pub fn nilpotent_by_cyclic_diameter(g: &Group, graph: &SimpleGraph) -> CheckOutcome {
    match diameter(graph) {
        Ok(Diameter::Finite(d)) if d <= 6 => CheckOutcome::pass(),
        Ok(d) => fail(g, format!("G/L(G) is cyclic but the diameter is {d}")),
        Err(e) => fail(g, e.to_string()),
    }
}

/// When `G'` is nilpotent: each conjugacy class of vertices induces a
/// connected subgraph of diameter ≤ 2, and `⟨x⟩^G` is non-Engel with a
/// connected Engel graph of diameter ≤ 6.
pub fn conjugacy_class_subgraph(g: &Group, l: &ElementSet, graph: &SimpleGraph) -> CheckOutcome {
    let mut seen = l.mask(g.order());
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let class = conjugacy_class(g, x);
        for c in class.iter() {
            seen[c] = true;
        }
        let sub =
            induced_subgraph(graph, class.as_slice()).expect("classes outside L are vertices");
        match diameter(&sub) {
            Ok(Diameter::Finite(d)) if d <= 2 => {}
            Ok(d) => return fail(g, format!("class of {} induces diameter {d}", show(g, x))),
            Err(e) => return fail(g, e.to_string()),
        }
        let closure = normal_closure(g, &ElementSet::singleton(x));
        let h = match subgroup_as_group(g, &closure, format!("<{}>^G", show(g, x))) {
            Ok(h) => h,
            Err(e) => return fail(g, e.to_string()),
        };
        match build_engel_graph(&h) {
            Ok(eh) => match diameter(&eh) {
                Ok(Diameter::Finite(d)) if d <= 6 => {}
                Ok(d) => {
                    return fail(
                        g,
                        format!(
                            "Engel graph of the normal closure of {} has diameter {d}",
                            show(g, x)
                        ),
                    )
                }
                Err(e) => return fail(g, e.to_string()),
            },
            Err(_) => {
                return fail(
                    g,
                    format!("normal closure of {} is an Engel group", show(g, x)),
                )
            }
        }
    }
    CheckOutcome::pass()
}

/// `G'` is nilpotent.
pub(crate) fn nilpotent_by_abelian(g: &Group) -> bool {
    is_nilpotent(g, &derived_subgroup(g)).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engel::left_engel_set;
    use crate::group::{make_family, Family};

    fn setup(f: Family) -> (Group, ElementSet, SimpleGraph) {
        let g = make_family(&f).unwrap();
        let l = left_engel_set(&g);
        let graph = build_engel_graph(&g).unwrap();
        (g, l, graph)
    }

    #[test]
    fn s3_has_the_diameter_one_structure() {
        let (g, l, graph) = setup(Family::Symmetric(3));
        assert_eq!(diameter_one_obstruction(&g, &l, &graph), None);
        assert!(diameter_one(&g, &l, &graph).passed);
        assert!(universal_vertex(&g, &graph).passed);
    }

    #[test]
    fn d12_lacks_it() {
        let (g, l, graph) = setup(Family::Dihedral(12));
        assert!(diameter_one_obstruction(&g, &l, &graph).is_some());
        assert!(diameter_one(&g, &l, &graph).passed);
        assert!(cyclic_quotient_generator(&g, &l).is_some());
        assert!(conjugacy_class_subgraph(&g, &l, &graph).passed);
    }

    #[test]
    fn a4_quotient_is_cyclic() {
        let (g, l, graph) = setup(Family::Alternating(4));
        assert!(cyclic_quotient_generator(&g, &l).is_some());
        assert!(nilpotent_by_cyclic_diameter(&g, &graph).passed);
        assert!(fitting_maximal(&g, &l).passed);
        assert!(bounded_collapse(&g, &l).passed);
        assert!(randomly_engel_characterization(&g, &l).passed);
    }

    #[test]
    fn s4_quotient_is_not_cyclic() {
        let (g, l, _) = setup(Family::Symmetric(4));
        assert_eq!(l.len(), 4);
        assert!(cyclic_quotient_generator(&g, &l).is_none());
        assert!(!nilpotent_by_abelian(&g));
    }

    #[test]
    fn failures_name_the_group() {
        let (g, _, _) = setup(Family::Symmetric(3));
        // pretend L is trivial: adjoining an element of A3 stays nilpotent
        let bogus = g.trivial_subgroup();
        let out = fitting_maximal(&g, &bogus);
        assert!(!out.passed);
        assert!(out.counterexample.unwrap().starts_with("S3: "));
    }
}
