//! The built-in catalog of groups replayed by surveys.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::group::{ClosureConfig, Family, Group};
use crate::io::{GroupSpec, LoadError};

const C7_C3: &str = include_str!("../../fixtures/c7_c3.txt");
const S3_S3: &str = include_str!("../../fixtures/s3xs3.txt");

/// Which parts of the catalog to include.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySelection {
    pub symmetric: bool,
    pub alternating: bool,
    pub dihedral: bool,
    pub dicyclic: bool,
    /// Direct products of the selected non-nilpotent bases with `C_k`.
    pub products: bool,
    /// The bundled generator-file groups.
    pub fixtures: bool,
    /// Also include nilpotent family members (cyclic groups, 2-power
    /// dihedral and dicyclic groups). Off for surveys.
    pub nilpotent: bool,
}

impl FamilySelection {
    pub fn all() -> Self {
        FamilySelection {
            symmetric: true,
            alternating: true,
            dihedral: true,
            dicyclic: true,
            products: true,
            fixtures: true,
            nilpotent: false,
        }
    }

    pub fn with_nilpotent(mut self) -> Self {
        self.nilpotent = true;
        self
    }
}

impl Default for FamilySelection {
    fn default() -> Self {
        Self::all()
    }
}

/// Comma-separated list of `symmetric`, `alternating`, `dihedral`,
/// `dicyclic`, `products`, `fixtures`, `nilpotent`, or `all`.
impl FromStr for FamilySelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sel = FamilySelection {
            symmetric: false,
            alternating: false,
            dihedral: false,
            dicyclic: false,
            products: false,
            fixtures: false,
            nilpotent: false,
        };
        for word in s.split(',').map(str::trim) {
            match word {
                "all" => {
                    sel = FamilySelection {
                        nilpotent: sel.nilpotent,
                        ..FamilySelection::all()
                    }
                }
                "symmetric" => sel.symmetric = true,
                "alternating" => sel.alternating = true,
                "dihedral" => sel.dihedral = true,
                "dicyclic" => sel.dicyclic = true,
                "products" => sel.products = true,
                "fixtures" => sel.fixtures = true,
                "nilpotent" => sel.nilpotent = true,
                other => return Err(format!("unknown family '{other}'")),
            }
        }
        Ok(sel)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Spec(GroupSpec),
    Fixture {
        name: &'static str,
        order: usize,
        text: &'static str,
    },
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        match self {
            CatalogEntry::Spec(s) => s.to_string(),
            CatalogEntry::Fixture { name, .. } => name.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            CatalogEntry::Spec(s) => s.order_hint().expect("catalog specs are file-free"),
            CatalogEntry::Fixture { order, .. } => *order,
        }
    }

    pub fn build(&self, config: &ClosureConfig) -> Result<Group, LoadError> {
        match self {
            CatalogEntry::Spec(s) => s.build_with(config),
            CatalogEntry::Fixture { name, text, .. } => {
                crate::io::group_from_text(text, Path::new(name), config)
            }
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn is_power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

/// Catalog members of order at most `max_order`, sorted by `(order, name)`.
///
/// Non-nilpotent bases: `S_n` (n ≥ 3), `A_n` (n ≥ 4), dihedral groups of
/// order `m ≥ 10` with `m/2` not a power of two (order 6 is `S3`), and
/// `Dic_n` with `n` not a power of two. Products are `base x C_k`, k ≥ 2.
pub fn catalog(max_order: usize, sel: FamilySelection) -> Vec<CatalogEntry> {
    let mut bases: Vec<Family> = Vec::new();
    let mut nilpotent: Vec<Family> = Vec::new();
    if sel.symmetric {
        bases.extend(
            (3..)
                .map(Family::Symmetric)
                .take_while(|f| f.order().is_some_and(|o| o <= max_order)),
        );
    }
    if sel.alternating {
        bases.extend(
            (4..)
                .map(Family::Alternating)
                .take_while(|f| f.order().is_some_and(|o| o <= max_order)),
        );
    }
    if sel.dihedral {
        for m in (8..=max_order).step_by(2) {
            if is_power_of_two(m / 2) {
                nilpotent.push(Family::Dihedral(m));
            } else if m >= 10 {
                bases.push(Family::Dihedral(m));
            }
        }
    }
    if sel.dicyclic {
        for n in (2..).take_while(|n| 4 * n <= max_order) {
            if is_power_of_two(n) {
                nilpotent.push(Family::Dicyclic(n));
            } else {
                bases.push(Family::Dicyclic(n));
            }
        }
    }
    let mut entries: Vec<CatalogEntry> = bases
        .iter()
        .map(|&f| CatalogEntry::Spec(GroupSpec::Family(f)))
        .collect();
    if sel.products {
        for &b in &bases {
            let o = b.order().unwrap();
            for k in (2..).take_while(|k| o * k <= max_order) {
                entries.push(CatalogEntry::Spec(GroupSpec::product(
                    GroupSpec::Family(b),
                    GroupSpec::Family(Family::Cyclic(k)),
                )));
            }
        }
    }
    if sel.nilpotent {
        entries.extend(
            (1..=max_order).map(|n| CatalogEntry::Spec(GroupSpec::Family(Family::Cyclic(n)))),
        );
        entries.extend(
            nilpotent
                .iter()
                .map(|&f| CatalogEntry::Spec(GroupSpec::Family(f))),
        );
    }
    if sel.fixtures {
        for (name, order, text) in [("C7:C3", 21, C7_C3), ("S3xS3", 36, S3_S3)] {
            if order <= max_order {
                entries.push(CatalogEntry::Fixture { name, order, text });
            }
        }
    }
    entries.sort_by_cached_key(|e| (e.order(), e.name()));
    entries
}
