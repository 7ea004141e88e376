//! Ψ*(L), the adversary's best ratio of forced mistakes to cut edges.

use std::fmt;

use num_rational::Ratio;

use crate::components::{upsilon, Components};
use crate::error::{Error, Result};
use crate::structure::zero_fork_closure;
use crate::{NodeSet, Tree};

pub type Rational = Ratio<u64>;

/// Default cap on `|V \ L|` for exact enumeration.
pub const EXACT_CAP: usize = 20;

/// Value of Ψ*. With an empty query set the whole tree has no boundary, so
/// the ratio is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PsiStar {
    Finite(Rational),
    Unbounded,
}

impl PsiStar {
    pub fn scaled(self, by: u64) -> PsiStar {
        match self {
            PsiStar::Finite(r) => PsiStar::Finite(r * by),
            PsiStar::Unbounded => PsiStar::Unbounded,
        }
    }

    pub fn from_count(c: usize) -> PsiStar {
        PsiStar::Finite(Rational::from_integer(c as u64))
    }

    pub fn finite(self) -> Option<Rational> {
        match self {
            PsiStar::Finite(r) => Some(r),
            PsiStar::Unbounded => None,
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            PsiStar::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
            PsiStar::Unbounded => f64::INFINITY,
        }
    }
}

impl fmt::Display for PsiStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiStar::Finite(r) => write!(f, "{r}"),
            PsiStar::Unbounded => f.write_str("inf"),
        }
    }
}

/// Exact Ψ*(l) with the default enumeration cap.
pub fn psi_star_exact(t: &Tree, l: &NodeSet) -> Result<PsiStar> {
    psi_star_exact_with_cap(t, l, EXACT_CAP)
}

/// Exact Ψ*(l): the maximum of `|V'| / Γ(V', V \ V')` over non-empty
/// `V' ⊆ V \ l`.
///
/// Every subset of each component of `T \ l` is enumerated in Gray-code
/// order, updating the boundary count one node flip at a time. A maximizer
/// always sits inside one component, so the per-component maxima suffice.
pub fn psi_star_exact_with_cap(t: &Tree, l: &NodeSet, cap: usize) -> Result<PsiStar> {
    let free = t.n() - l.len();
    if free == 0 {
        return Err(Error::EmptyComplement);
    }
    if free > cap {
        return Err(Error::TooLargeForExact { size: free, cap });
    }
    if l.is_empty() {
        return Ok(PsiStar::Unbounded);
    }
    let mut inside = vec![false; t.n()];
    let mut local = vec![usize::MAX; t.n()];
    // (size, boundary) of the best subset found so far
    let mut best = (0u64, 1u64);
    for nodes in Components::of(t, l).members() {
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let (mut size, mut boundary) = (0u64, 0i64);
        for code in 1u64..(1u64 << nodes.len()) {
            let x = nodes[code.trailing_zeros() as usize];
            for &u in t.neighbors(x) {
                if inside[u] == inside[x] {
                    boundary += 1;
                } else {
                    boundary -= 1;
                }
            }
            inside[x] = !inside[x];
            if inside[x] {
                size += 1;
            } else {
                size -= 1;
            }
            // Gray code never revisits the empty set after code 0.
            let g = boundary as u64;
            if size * best.1 > best.0 * g {
                best = (size, g);
            }
        }
        for &v in &nodes {
            inside[v] = false;
        }
    }
    debug_assert!(best.1 > 0);
    Ok(PsiStar::Finite(Rational::new(best.0, best.1)))
}

/// Cheap bracket around Ψ*(l): `(Υ(l+, 1) / 2, Υ(l, 1))`.
pub fn psi_star_bounds(t: &Tree, l: &NodeSet) -> Result<(Rational, usize)> {
    if l.len() == t.n() {
        return Err(Error::EmptyComplement);
    }
    if l.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    let upper = upsilon(t, l, 1);
    let lower = Rational::new(upsilon(t, &zero_fork_closure(t, l), 1) as u64, 2);
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn set(n: usize, v: &[usize]) -> NodeSet {
        NodeSet::new(n, v.iter().copied()).unwrap()
    }

    fn r(a: u64, b: u64) -> PsiStar {
        PsiStar::Finite(Rational::new(a, b))
    }

    #[test]
    fn exact_examples() {
        assert_eq!(psi_star_exact(&Tree::path(5), &set(5, &[2])).unwrap(), r(2, 1));
        assert_eq!(psi_star_exact(&Tree::star(5), &set(5, &[0])).unwrap(), r(1, 1));
        let bs = gen::binary_star(6, 3);
        assert_eq!(psi_star_exact(&bs, &set(11, &[0, 7])).unwrap(), r(1, 1));
        assert_eq!(psi_star_exact(&Tree::path(5), &set(5, &[0, 4])).unwrap(), r(3, 2));
    }

    #[test]
    fn exact_errors_and_limits() {
        let p5 = Tree::path(5);
        assert!(matches!(psi_star_exact(&p5, &NodeSet::full(5)), Err(Error::EmptyComplement)));
        assert_eq!(psi_star_exact(&p5, &NodeSet::empty(5)).unwrap(), PsiStar::Unbounded);
        assert!(matches!(
            psi_star_exact_with_cap(&p5, &set(5, &[0]), 3),
            Err(Error::TooLargeForExact { size: 4, cap: 3 })
        ));
    }

    #[test]
    fn bounds_examples() {
        let p5 = Tree::path(5);
        assert_eq!(psi_star_bounds(&p5, &set(5, &[2])).unwrap(), (Rational::from_integer(1), 2));
        assert_eq!(psi_star_bounds(&Tree::star(5), &set(5, &[0])).unwrap(), (Rational::new(1, 2), 1));
        assert_eq!(psi_star_bounds(&p5, &set(5, &[0, 4])).unwrap(), (Rational::new(3, 2), 3));
    }

    #[test]
    fn ordering() {
        assert!(r(7, 2) < PsiStar::Unbounded);
        assert!(r(1, 3) < r(1, 2));
        assert_eq!(r(3, 4).scaled(2), r(3, 2));
    }
}
