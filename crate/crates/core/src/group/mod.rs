//! Finite permutation groups with canonically indexed elements.

mod family;
mod iso;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;

pub use family::{direct_product, direct_product_with, make_family, make_family_with, Family};
pub use iso::{find_group_isomorphism, groups_isomorphic};
pub use subgroup::{
    centralizer, commutator_subgroup, conjugacy_class, conjugacy_classes, cyclic_subgroup,
    derived_series, derived_subgroup, is_abelian, is_metabelian, is_nilpotent, is_normal,
    is_subgroup, lower_central_series, normal_closure, normal_closure_under, small_generating_set,
    subgroup_as_group, subgroup_generated,
};

/// Index of an element inside a specific [`Group`].
pub type Elem = usize;

/// Default order up to which a full multiplication table is stored.
pub const DEFAULT_TABLE_THRESHOLD: usize = 4096;
/// Default cap on the number of elements enumerated by [`Group::closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;
/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CLOSURE_CAP_ENV: &str = "ENGEL_CLOSURE_CAP";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureTooLarge { cap: usize },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureConfig {
    pub table_threshold: usize,
    pub cap: usize,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            table_threshold: DEFAULT_TABLE_THRESHOLD,
            cap: DEFAULT_CLOSURE_CAP,
        }
    }
}

impl ClosureConfig {
    /// Defaults, with the cap taken from `ENGEL_CLOSURE_CAP` when it is set to
    /// a positive integer.
    pub fn from_env() -> Self {
        let mut config = ClosureConfig::default();
        if let Some(cap) = std::env::var(CLOSURE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
        {
            config.cap = cap;
        }
        config
    }
}

/// Sorted, duplicate-free set of element indices of one group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(Vec<Elem>);

impl ElementSet {
    pub fn new(elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut v: Vec<Elem> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn singleton(x: Elem) -> Self {
        ElementSet(vec![x])
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &m)| m.then_some(i))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(self.iter().chain(other.iter()))
    }

    pub fn insert(&mut self, x: Elem) {
        if let Err(pos) = self.0.binary_search(&x) {
            self.0.insert(pos, x);
        }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for x in self.iter() {
            mask[x] = true;
        }
        mask
    }

    /// Elements of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> ElementSet {
        ElementSet((0..n).filter(|&x| !self.contains(x)).collect())
    }
}

impl FromIterator<Elem> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        ElementSet::new(iter)
    }
}

/// A finite permutation group with its elements listed in canonical order.
///
/// Elements are sorted by [`Permutation`]'s ordering, so building the same
/// group twice (from any generating set) yields identical indices. The
/// identity is always index 0. Groups up to the configured threshold carry a
/// full multiplication table; larger ones multiply on demand.
#[derive(Clone)]
pub struct Group {
    name: String,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    generators: Vec<Elem>,
    inverses: Vec<Elem>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order())
            .field("generators", &self.generator_perms().collect::<Vec<_>>())
            .finish()
    }
}

impl Group {
    /// The group generated by `generators`, with default limits.
    pub fn closure(
        generators: &[Permutation],
        name: impl Into<String>,
    ) -> Result<Group, GroupError> {
        Self::closure_with(generators, name, &ClosureConfig::default())
    }

    pub fn closure_with(
        generators: &[Permutation],
        name: impl Into<String>,
        config: &ClosureConfig,
    ) -> Result<Group, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }

        // Breadth-first enumeration by right multiplication; records the
        // Cayley graph so the table can be filled without recomposing.
        let mut found: HashMap<Permutation, usize> = HashMap::new();
        let mut bfs: Vec<Permutation> = Vec::new();
        let mut cayley: Vec<u32> = Vec::new();
        let ngen = generators.len();
        found.insert(Permutation::identity(), 0);
        bfs.push(Permutation::identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let prod = bfs[i].compose(g);
                let next = match found.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = bfs.len();
                        if j >= config.cap {
                            return Err(GroupError::ClosureTooLarge { cap: config.cap });
                        }
                        found.insert(prod.clone(), j);
                        bfs.push(prod);
                        queue.push_back(j);
                        j
                    }
                };
                cayley.push(next as u32);
            }
        }
        drop(found);

        let n = bfs.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| bfs[a].cmp(&bfs[b]));
        let mut canon = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            canon[old] = new;
        }

        let cay = |old: usize, g: usize| cayley[old * ngen + g] as usize;

        // bfs parent words, in BFS (old) indexing: old = parent * generator
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut queue = VecDeque::from([0usize]);
            while let Some(i) = queue.pop_front() {
                for g in 0..ngen {
                    let j = cay(i, g);
                    if !seen[j] {
                        seen[j] = true;
                        parent[j] = Some((i, g));
                        queue.push_back(j);
                    }
                }
            }
        }

        let table = if n <= config.table_threshold {
            // row[a][old j] = a * bfs[j], filled along BFS order of j
            let mut bfs_order: Vec<usize> = Vec::with_capacity(n);
            {
                let mut seen = vec![false; n];
                seen[0] = true;
                bfs_order.push(0);
                let mut head = 0;
                while head < bfs_order.len() {
                    let i = bfs_order[head];
                    head += 1;
                    for g in 0..ngen {
                        let j = cay(i, g);
                        if !seen[j] {
                            seen[j] = true;
                            bfs_order.push(j);
                        }
                    }
                }
            }
            let mut table = vec![0u32; n * n];
            let mut row = vec![0usize; n];
            for a_old in 0..n {
                row[0] = a_old;
                for &j in &bfs_order[1..] {
                    let (p, g) = parent[j].expect("non-root has a parent");
                    row[j] = cay(row[p], g);
                }
                let a_new = canon[a_old];
                for j_old in 0..n {
                    table[a_new * n + canon[j_old]] = canon[row[j_old]] as u32;
                }
            }
            Some(table)
        } else {
            None
        };

        let elements: Vec<Permutation> = order.iter().map(|&old| bfs[old].clone()).collect();
        drop(bfs);
        let index: HashMap<Permutation, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = match &table {
            Some(t) => {
                let mut inv = vec![0; n];
                for a in 0..n {
                    for b in 0..n {
                        if t[a * n + b] == 0 {
                            inv[a] = b;
                            break;
                        }
                    }
                }
                inv
            }
            None => elements.iter().map(|p| index[&p.inverse()]).collect(),
        };
        let generators = generators.iter().map(|g| index[g]).collect();

        Ok(Group {
            name: name.into(),
            elements,
            index,
            generators,
            inverses,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> Elem {
        0
    }

    /// Indices of the generators, in the order they were supplied.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_perms(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.generators.iter().map(move |&g| &self.elements[g])
    }

    pub fn element(&self, x: Elem) -> &Permutation {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    /// Largest point moved by some element.
    pub fn degree(&self) -> usize {
        self.elements
            .iter()
            .map(Permutation::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet((0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::singleton(self.identity())
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        // x⁻¹y⁻¹xy = (yx)⁻¹(xy)
        self.mul(self.inv(yx), xy)
    }

    /// `x^y = y⁻¹ x y`.
    #[inline]
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut cur = x;
        while cur != self.identity() {
            cur = self.mul(cur, x);
            k += 1;
        }
        k
    }

    /// Index of an element given by disjoint cycles; test and example helper.
    pub fn elem_from_cycles<C: AsRef<[usize]>>(&self, cycles: &[C]) -> Option<Elem> {
        Permutation::from_cycles(cycles).and_then(|p| self.index_of(&p))
    }
}
