//! Antichains in the subset lattice of `{1..n}` for `n <= 8`.
//!
//! Families of subsets are 256-bit sets indexed by subset bitmask, so the "is this
//! subset a superset of something already chosen" test is a single bit lookup.

use std::ops::ControlFlow;

/// Largest `n` whose subset lattice fits in a [`SubsetFamily`].
pub const MAX_LATTICE_VARS: usize = 8;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Debug)]
pub struct SubsetFamily([u64; 4]);

impl SubsetFamily {
    #[inline]
    pub fn contains(&self, mask: u32) -> bool {
        self.0[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, mask: u32) {
        self.0[(mask >> 6) as usize] |= 1 << (mask & 63);
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= *b;
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Members in ascending bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0u32..256).filter(move |&m| self.contains(m))
    }
}

/// Per-subset up- and down-closures for a fixed `n`.
pub struct Lattice {
    n: usize,
    up: Vec<SubsetFamily>,
    down: Vec<SubsetFamily>,
}

impl Lattice {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_LATTICE_VARS, "subset lattice limited to n <= {MAX_LATTICE_VARS}");
        let size = 1u32 << n;
        let mut up = vec![SubsetFamily::default(); size as usize];
        let mut down = vec![SubsetFamily::default(); size as usize];
        for a in 0..size {
            for b in 0..size {
                if a & !b == 0 {
                    up[a as usize].insert(b);
                    down[b as usize].insert(a);
                }
            }
        }
        Self { n, up, down }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All supersets of `mask`, including itself.
    pub fn up(&self, mask: u32) -> &SubsetFamily {
        &self.up[mask as usize]
    }

    /// All subsets of `mask`, including itself.
    pub fn down(&self, mask: u32) -> &SubsetFamily {
        &self.down[mask as usize]
    }

    /// Downward closure of `sets`.
    pub fn down_closure(&self, sets: &[u32]) -> SubsetFamily {
        sets.iter().fold(SubsetFamily::default(), |acc, &s| acc.union(self.down(s)))
    }

    /// Visits every antichain (as a canonically ordered slice of bitmasks), including
    /// the empty one. With `include_empty_set`, `{∅}` is also visited.
    ///
    /// Subsets are offered in canonical order (degree, then value); since a later
    /// subset can never be a proper subset of an earlier one, an antichain only has to
    /// block supersets of what it already holds.
    pub fn for_each_antichain<B>(
        &self,
        include_empty_set: bool,
        mut visit: impl FnMut(&[u32]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut order: Vec<u32> = (0..1u32 << self.n).collect();
        order.sort_by_key(|&m| (m.count_ones(), m));
        if !include_empty_set {
            order.retain(|&m| m != 0);
        }
        let mut chosen = Vec::with_capacity(order.len());
        self.descend(&order, 0, SubsetFamily::default(), &mut chosen, &mut visit)
    }

    fn descend<B>(
        &self,
        order: &[u32],
        start: usize,
        blocked: SubsetFamily,
        chosen: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        visit(chosen)?;
        for (offset, &m) in order[start..].iter().enumerate() {
            if blocked.contains(m) {
                continue;
            }
            chosen.push(m);
            let next_blocked = blocked.union(self.up(m));
            let flow = self.descend(order, start + offset + 1, next_blocked, chosen, visit);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_antichains(n: usize, include_empty_set: bool) -> u64 {
        let lattice = Lattice::new(n);
        let mut count = 0u64;
        let _ = lattice.for_each_antichain::<()>(include_empty_set, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    /// Brute force: all families of subsets of `{1..n}` with no comparable pair.
    fn brute_force_antichains(n: usize) -> u64 {
        let size = 1u32 << n;
        (0u64..(1u64 << size))
            .filter(|&fam| {
                (0..size).all(|a| {
                    fam >> a & 1 == 0
                        || (0..size).all(|b| b == a || fam >> b & 1 == 0 || a & !b != 0)
                })
            })
            .count() as u64
    }

    #[test]
    fn matches_brute_force_and_dedekind_numbers() {
        for n in 0..=4 {
            assert_eq!(count_antichains(n, true), brute_force_antichains(n), "n = {n}");
        }
        // Dedekind numbers count antichains of the full lattice
        let dedekind = [2u64, 3, 6, 20, 168, 7581];
        for (n, &d) in dedekind.iter().enumerate() {
            assert_eq!(count_antichains(n, true), d, "n = {n}");
            // dropping ∅ removes exactly the antichain {∅}
            assert_eq!(count_antichains(n, false), d - 1, "n = {n}");
        }
    }

    #[test]
    fn visited_families_are_antichains_in_canonical_order() {
        let lattice = Lattice::new(4);
        let _ = lattice.for_each_antichain::<()>(false, |chain| {
            for (i, &a) in chain.iter().enumerate() {
                for &b in &chain[i + 1..] {
                    assert!(a & !b != 0 && b & !a != 0);
                    assert!((a.count_ones(), a) < (b.count_ones(), b));
                }
            }
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn early_stop_propagates() {
        let lattice = Lattice::new(5);
        let mut seen = 0;
        let flow = lattice.for_each_antichain(false, |_| {
            seen += 1;
            if seen == 10 {
                ControlFlow::Break(seen)
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(flow, ControlFlow::Break(10));
    }

    #[test]
    fn closures() {
        let lattice = Lattice::new(3);
        assert_eq!(lattice.up(0b001).len(), 4);
        assert_eq!(lattice.down(0b111).len(), 8);
        assert_eq!(lattice.down_closure(&[0b011, 0b100]).len(), 5);
        assert!(lattice.down_closure(&[]).is_empty());
    }
}
