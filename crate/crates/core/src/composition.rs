//! Compositions and partitions.
//!
//! A composition is a finite sequence of positive integers. Compositions index
//! diagram rows, tableau contents, and the monomial and fundamental bases, so
//! they carry a canonical order (size, then length, then lexicographic) that
//! makes every printed expansion deterministic.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers; the empty composition has size 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition obtained by sorting the parts in weakly decreasing order.
    pub fn to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition { parts })
    }

    /// True when the parts of `coarser`, in order, are consecutive-block sums
    /// of the parts of `self`, in order.
    pub fn refines(&self, coarser: &Composition) -> bool {
        let mut i = 0;
        for &target in &coarser.parts {
            let mut acc: u32 = 0;
            while acc < target {
                if i >= self.parts.len() {
                    return false;
                }
                acc += self.parts[i];
                i += 1;
            }
            if acc != target {
                return false;
            }
        }
        i == self.parts.len()
    }

    /// All compositions that `self` refines, in canonical order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let merges = self.parts.len() - 1;
        let mut out = Vec::with_capacity(1 << merges);
        for mask in 0u64..(1u64 << merges) {
            let mut parts = vec![self.parts[0]];
            for (j, &p) in self.parts[1..].iter().enumerate() {
                if mask & (1 << j) != 0 {
                    *parts.last_mut().unwrap() += p;
                } else {
                    parts.push(p);
                }
            }
            out.push(Composition { parts });
        }
        out.sort();
        out
    }

    /// All compositions refining `self`, in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Composition::empty()];
        for &p in &self.parts {
            let pieces = compositions_of(p);
            out = out
                .iter()
                .flat_map(|prefix| pieces.iter().map(move |c| prefix.concat(c)))
                .collect();
        }
        out.sort();
        out
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Concatenation with the last part of `self` fused to the first part of
    /// `other`; both arguments must be nonempty.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyArgument);
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition { parts })
    }

    /// The composition of `n` whose proper partial sums are exactly the
    /// elements of `set`; `set` must lie inside `{1, ..., n-1}`.
    pub fn from_descents(set: &BTreeSet<u32>, n: u32) -> Result<Composition> {
        if n == 0 {
            return if set.is_empty() {
                Ok(Composition::empty())
            } else {
                Err(Error::OutOfRange("descent set of an empty word".into()))
            };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            if s == 0 || s >= n {
                return Err(Error::OutOfRange(format!("descent {s} not in 1..={}", n - 1)));
            }
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    /// Inverse of [`Composition::from_descents`]: the proper partial sums.
    pub fn descents(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut acc = 0;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }
}

/// All compositions of `n`, in canonical order (`{∅}` for `n = 0`).
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for j in 0..n - 1 {
            if mask & (1 << j) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(Composition { parts });
    }
    out.sort();
    out
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid part {tok:?}")))
            })
            .collect::<Result<_>>()?;
        Composition::new(parts)
    }
}

/// A weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let c = Composition::new(parts)?;
        Self::from_composition(c)
    }

    pub fn from_composition(c: Composition) -> Result<Self> {
        if !c.is_partition() {
            return Err(Error::NotPartition("argument"));
        }
        Ok(Partition(c))
    }

    pub fn empty() -> Self {
        Partition(Composition::empty())
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.size()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn into_composition(self) -> Composition {
        self.0
    }

    /// The transposed partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = self.parts();
        if parts.is_empty() {
            return Partition::empty();
        }
        let width = parts[0] as usize;
        let cols: Vec<u32> = (1..=width as u32)
            .map(|j| parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(Composition { parts: cols })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sorting_to_partition() {
        assert_eq!(c(&[3, 4, 4, 3, 1]).to_partition().parts(), &[4, 4, 3, 3, 1]);
        assert_eq!(Composition::empty().to_partition(), Partition::empty());
        assert_eq!(c(&[1, 5, 2]).to_partition().parts(), &[5, 2, 1]);
    }

    #[test]
    fn refinement() {
        assert!(c(&[3, 2, 2, 4, 3, 1]).refines(&c(&[3, 4, 4, 3, 1])));
        assert!(c(&[2, 1]).refines(&c(&[2, 1])));
        assert!(!c(&[1, 2]).refines(&c(&[2, 1])));
        // every composition refines itself and the one-part composition
        for a in compositions_of(5) {
            assert!(a.refines(&a));
            assert!(a.refines(&c(&[5])));
        }
    }

    #[test]
    fn coarsenings_examples() {
        assert_eq!(c(&[2, 1]).coarsenings(), vec![c(&[3]), c(&[2, 1])]);
        assert_eq!(
            c(&[1, 1, 1]).coarsenings(),
            vec![c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])]
        );
        assert_eq!(c(&[5]).coarsenings(), vec![c(&[5])]);
    }

    #[test]
    fn refinements_examples() {
        assert_eq!(
            c(&[3]).refinements(),
            vec![c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])]
        );
        assert_eq!(c(&[1, 2]).refinements(), vec![c(&[1, 2]), c(&[1, 1, 1])]);
        assert_eq!(c(&[1]).refinements(), vec![c(&[1])]);
    }

    #[test]
    fn refinements_count() {
        // |refinements(a)| = prod 2^(a_i - 1)
        let a = c(&[3, 2, 2]);
        assert_eq!(a.refinements().len(), 4 * 2 * 2);
        assert_eq!(a.coarsenings().len(), 1 << (a.len() - 1));
    }

    #[test]
    fn coarsen_refine_duality() {
        for a in compositions_of(5) {
            for b in a.coarsenings() {
                assert!(a.refines(&b));
                assert!(b.refinements().contains(&a));
            }
        }
    }

    #[test]
    fn compositions_counts() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(compositions_of(3).len(), 4);
        assert_eq!(compositions_of(5).len(), 16);
    }

    #[test]
    fn descent_sets() {
        let set: BTreeSet<u32> = [2, 4, 6, 7].into_iter().collect();
        assert_eq!(Composition::from_descents(&set, 9).unwrap(), c(&[2, 2, 2, 1, 2]));
        let set: BTreeSet<u32> = [5, 8].into_iter().collect();
        assert_eq!(Composition::from_descents(&set, 9).unwrap(), c(&[5, 3, 1]));
        assert_eq!(
            Composition::from_descents(&BTreeSet::new(), 5).unwrap(),
            c(&[5])
        );
        let bad: BTreeSet<u32> = [9].into_iter().collect();
        assert!(Composition::from_descents(&bad, 9).is_err());
        // round trip over all compositions of 6
        for a in compositions_of(6) {
            assert_eq!(Composition::from_descents(&a.descents(), 6).unwrap(), a);
        }
    }

    #[test]
    fn concatenations() {
        assert_eq!(c(&[2, 1]).concat(&c(&[3])), c(&[2, 1, 3]));
        assert_eq!(c(&[2, 1]).near_concat(&c(&[3])).unwrap(), c(&[2, 4]));
        assert_eq!(c(&[1]).near_concat(&c(&[1])).unwrap(), c(&[2]));
        assert!(Composition::empty().near_concat(&c(&[1])).is_err());
        // the two joins always differ
        for (a, b) in [(c(&[2]), c(&[1, 1])), (c(&[1]), c(&[1])), (c(&[3, 1]), c(&[2]))] {
            assert_ne!(a.concat(&b), a.near_concat(&b).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        for a in compositions_of(5) {
            let back: Composition = a.to_string().parse().unwrap();
            assert_eq!(back, a);
        }
        assert_eq!("-".parse::<Composition>().unwrap(), Composition::empty());
        assert!("3,0,1".parse::<Composition>().is_err());
        assert!("3,x".parse::<Composition>().is_err());
    }

    #[test]
    fn conjugate_partition() {
        let p = Partition::new(vec![4, 4, 3, 3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 4, 4, 2]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![c(&[2, 1]), c(&[1, 2]), c(&[3]), c(&[1, 1, 1]), c(&[2])];
        v.sort();
        assert_eq!(v, vec![c(&[2]), c(&[3]), c(&[1, 2]), c(&[2, 1]), c(&[1, 1, 1])]);
    }
}
