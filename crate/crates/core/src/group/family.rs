use std::fmt;

use super::{ClosureConfig, Group, GroupError};
use crate::perm::Permutation;

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

/// Constructible group families.
///
/// Dihedral groups are named by their order (`Dihedral(12)` has order 12);
/// `Dicyclic(n)` has order `4n`, so `Dicyclic(3)` is the order-12 group
/// `⟨x, y | x⁶ = 1, y² = x³, x^y = x⁻¹⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
}

impl Family {
    /// Order of the group, or `None` for invalid parameters.
    pub fn order(&self) -> Option<usize> {
        self.validate().ok()?;
        Some(match *self {
            Family::Symmetric(n) => factorial(n)?,
            Family::Alternating(n) => (factorial(n)? / 2).max(1),
            Family::Cyclic(n) => n,
            Family::Dihedral(m) => m,
            Family::Dicyclic(n) => n.checked_mul(4)?,
        })
    }

    pub(crate) fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidParameter(msg));
        match *self {
            Family::Symmetric(0) | Family::Alternating(0) | Family::Cyclic(0) => {
                bad(format!("{self}: degree must be positive"))
            }
            Family::Dihedral(m) if m < 6 || m % 2 != 0 => bad(format!(
                "{self}: dihedral order must be even and at least 6"
            )),
            Family::Dicyclic(n) if n < 2 => bad(format!("{self}: dicyclic order 4n needs n >= 2")),
            _ => Ok(()),
        }
    }

    fn generators(&self) -> Vec<Permutation> {
        let cycle = |pts: Vec<usize>| Permutation::from_cycles(&[pts]).unwrap();
        match *self {
            Family::Symmetric(n) if n >= 2 => {
                vec![cycle(vec![1, 2]), cycle((1..=n).collect())]
            }
            Family::Alternating(n) if n >= 3 => (3..=n).map(|k| cycle(vec![1, 2, k])).collect(),
            Family::Cyclic(n) if n >= 2 => vec![cycle((1..=n).collect())],
            Family::Dihedral(m) => {
                let half = m / 2;
                regular_representation(m, &[1, half], |a, b| metacyclic_mul(a, b, half, None))
            }
            Family::Dicyclic(n) => {
                let half = 2 * n;
                regular_representation(4 * n, &[1, half], |a, b| {
                    metacyclic_mul(a, b, half, Some(n))
                })
            }
            _ => vec![Permutation::identity()],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(m) => write!(f, "D{m}"),
            Family::Dicyclic(n) => write!(f, "Dic{n}"),
        }
    }
}

/// Multiplication of normal forms `x^i y^j` (encoded as `i + j·half`, with
/// `x` of order `half`, `j ∈ {0, 1}`, `y⁻¹xy = x⁻¹`). With `square = None`
/// the relation is `y² = 1` (dihedral); with `Some(k)` it is `y² = x^k`
/// (dicyclic).
fn metacyclic_mul(a: usize, b: usize, half: usize, square: Option<usize>) -> usize {
    let (i, j) = (a % half, a / half);
    let (k, l) = (b % half, b / half);
    // y^j x^k = x^{(-1)^j k} y^j
    let mut exp = if j == 0 { i + k } else { i + half - k };
    let mut ys = j + l;
    if ys == 2 {
        ys = 0;
        if let Some(s) = square {
            exp += s;
        }
    }
    exp % half + ys * half
}

/// Right regular representation: element `e` acts on points `1..=order` by
/// `p ↦ p·e`. `gens` are normal-form codes (`1` is `x`, `half` is `y`).
fn regular_representation(
    order: usize,
    gens: &[usize],
    mul: impl Fn(usize, usize) -> usize,
) -> Vec<Permutation> {
    gens.iter()
        .map(|&g| {
            let images: Vec<usize> = (0..order).map(|p| mul(p, g) + 1).collect();
            Permutation::from_images(&images).expect("regular action is a bijection")
        })
        .collect()
}

/// Builds a family member. Dihedral generators are `[s, r]` (rotation of
/// order m/2, then reflection); dicyclic generators are `[x, y]`.
pub fn make_family(family: &Family) -> Result<Group, GroupError> {
    make_family_with(family, &ClosureConfig::from_env())
}

pub fn make_family_with(family: &Family, config: &ClosureConfig) -> Result<Group, GroupError> {
    family.validate()?;
    Group::closure_with(&family.generators(), family.to_string(), config)
}

/// `A × B` acting on disjoint point sets: `A` on its own points, `B` shifted
/// past the degree of `A`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    direct_product_with(a, b, &ClosureConfig::from_env())
}

pub fn direct_product_with(
    a: &Group,
    b: &Group,
    config: &ClosureConfig,
) -> Result<Group, GroupError> {
    let offset = a.degree();
    let mut gens: Vec<Permutation> = a.generator_perms().cloned().collect();
    gens.extend(b.generator_perms().map(|p| p.shifted(offset)));
    Group::closure_with(&gens, format!("{}x{}", a.name(), b.name()), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        for (fam, order) in [
            (Family::Symmetric(1), 1),
            (Family::Symmetric(4), 24),
            (Family::Symmetric(5), 120),
            (Family::Alternating(2), 1),
            (Family::Alternating(4), 12),
            (Family::Alternating(5), 60),
            (Family::Cyclic(7), 7),
            (Family::Dihedral(6), 6),
            (Family::Dihedral(12), 12),
            (Family::Dicyclic(2), 8),
            (Family::Dicyclic(3), 12),
        ] {
            assert_eq!(make_family(&fam).unwrap().order(), order, "{fam}");
            assert_eq!(fam.order(), Some(order));
        }
    }

    #[test]
    fn invalid_parameters() {
        for fam in [
            Family::Symmetric(0),
            Family::Dihedral(4),
            Family::Dihedral(7),
            Family::Dicyclic(1),
        ] {
            assert!(matches!(
                make_family(&fam),
                Err(GroupError::InvalidParameter(_))
            ));
            assert_eq!(fam.order(), None);
        }
    }

    #[test]
    fn dihedral_relations() {
        // s^6 = r^2 = 1, s^r = s^-1
        let g = make_family(&Family::Dihedral(12)).unwrap();
        let (s, r) = (g.generators()[0], g.generators()[1]);
        assert_eq!(g.element_order(s), 6);
        assert_eq!(g.element_order(r), 2);
        assert_eq!(g.conjugate(s, r), g.inv(s));
    }

    #[test]
    fn dicyclic_relations() {
        // x^6 = 1, y^2 = x^3, x^y = x^-1
        let g = make_family(&Family::Dicyclic(3)).unwrap();
        let (x, y) = (g.generators()[0], g.generators()[1]);
        assert_eq!(g.element_order(x), 6);
        assert_eq!(g.mul(y, y), g.pow(x, 3));
        assert_eq!(g.conjugate(x, y), g.inv(x));
        assert_eq!(g.element_order(y), 4);
    }

    #[test]
    fn direct_product_order() {
        let s3 = make_family(&Family::Symmetric(3)).unwrap();
        let c2 = make_family(&Family::Cyclic(2)).unwrap();
        let p = direct_product(&s3, &c2).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.name(), "S3xC2");
        assert_eq!(p.degree(), 5);
    }
}
