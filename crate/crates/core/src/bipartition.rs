//! Ground sets, canonical bipartitions and the separating predicates.
//!
//! Element `i` of the ground set `{1..n}` is bit `i - 1` of a `u64`. A
//! bipartition is stored as its *coblock*: the block that does not contain
//! element 1. The trivial bipartition `{S}` has an empty coblock, so bit 0 is
//! never set and two bipartitions are equal exactly when their coblocks are.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set representable by the `u64` coblock encoding.
pub const MAX_ELEMENTS: usize = 64;

/// Largest `n` for which [`all_bipartitions`] will materialize `2^(n-1)` items.
pub const MAX_ENUMERATION_N: usize = 24;

/// The ground set `{1..n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::GroundSize(n));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Mask with one bit per element.
    pub fn full_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element == 0 || element > self.n {
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        Ok(())
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A partition of `{1..n}` into at most two blocks, kept in canonical form.
///
/// Ordering is by `n` first and then by the coblock read as an integer, which
/// is the canonical member order of a [`FamilyOfBipartitions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: usize,
    coblock: u64,
}

impl Bipartition {
    /// The one-block partition `{S}`.
    pub fn trivial(n: usize) -> Result<Self> {
        GroundSet::new(n)?;
        Ok(Self { n, coblock: 0 })
    }

    /// Build from the coblock bitmask (bit `i - 1` set means element `i`).
    pub fn from_coblock(n: usize, coblock: u64) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if coblock & 1 != 0 {
            return Err(Error::InvalidBipartition(
                "the coblock must not contain element 1".into(),
            ));
        }
        if coblock & !ground.full_mask() != 0 {
            return Err(Error::InvalidBipartition(format!(
                "coblock {coblock:#b} has elements beyond n = {n}"
            )));
        }
        Ok(Self { n, coblock })
    }

    /// Build from either block. If `block` contains element 1 its complement
    /// becomes the coblock.
    pub fn from_block<I>(n: usize, block: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let ground = GroundSet::new(n)?;
        let mut mask = 0u64;
        for element in block {
            ground.check_element(element)?;
            mask |= 1 << (element - 1);
        }
        if mask & 1 != 0 {
            mask = !mask & ground.full_mask();
        }
        Ok(Self { n, coblock: mask })
    }

    /// Build from an explicit list of one or two blocks that must partition
    /// `{1..n}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if blocks.is_empty() || blocks.len() > 2 {
            return Err(Error::InvalidBipartition(format!(
                "expected 1 or 2 blocks, found {}",
                blocks.len()
            )));
        }
        let mut seen = 0u64;
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidBipartition("empty block".into()));
            }
            for &element in block {
                ground.check_element(element)?;
                let bit = 1u64 << (element - 1);
                if seen & bit != 0 {
                    return Err(Error::InvalidBipartition(format!(
                        "element {element} appears twice"
                    )));
                }
                seen |= bit;
            }
        }
        if seen != ground.full_mask() {
            let missing = !seen & ground.full_mask();
            return Err(Error::InvalidBipartition(format!(
                "blocks do not cover the ground set (missing {:?})",
                mask_elements(missing)
            )));
        }
        Self::from_block(n, blocks[0].iter().copied())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coblock(&self) -> u64 {
        self.coblock
    }

    pub fn is_proper(&self) -> bool {
        self.coblock != 0
    }

    pub fn is_trivial(&self) -> bool {
        self.coblock == 0
    }

    /// Whether `element` lies in the coblock. Element 1 never does.
    #[inline]
    pub fn in_coblock(&self, element: usize) -> bool {
        (self.coblock >> (element - 1)) & 1 == 1
    }

    /// True iff `i` and `j` fall in different blocks.
    pub fn cuts(&self, i: usize, j: usize) -> Result<bool> {
        let ground = GroundSet { n: self.n };
        ground.check_element(i)?;
        ground.check_element(j)?;
        Ok(self.cuts_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn cuts_unchecked(&self, i: usize, j: usize) -> bool {
        self.in_coblock(i) != self.in_coblock(j)
    }

    /// The blocks in display order: the block holding element 1 first, then
    /// the coblock if it is nonempty.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let first = mask_elements(!self.coblock & full_mask(self.n));
        if self.is_trivial() {
            vec![first]
        } else {
            vec![first, mask_elements(self.coblock)]
        }
    }
}

/// Compact form: blocks as comma-separated elements joined by `|`, e.g.
/// `1,2|3,4`. The trivial bipartition prints as a single block.
impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

pub(crate) fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| (mask >> b) & 1 == 1).map(|b| b + 1).collect()
}

/// All bipartitions of `{1..n}` in canonical (coblock) order.
///
/// There are `2^(n-1)` of them, or `2^(n-1) - 1` proper ones.
pub fn all_bipartitions(n: usize, proper_only: bool) -> Result<Vec<Bipartition>> {
    GroundSet::new(n)?;
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            what: "bipartition enumeration",
            n,
            bound: MAX_ENUMERATION_N,
        });
    }
    let start = u64::from(proper_only);
    Ok((start..(1u64 << (n - 1)))
        .map(|half| Bipartition {
            n,
            coblock: half << 1,
        })
        .collect())
}

/// An unordered set of distinct bipartitions over one ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyOfBipartitions {
    n: usize,
    members: Vec<Bipartition>,
}

impl FamilyOfBipartitions {
    /// Collect members into canonical order. Repeated members collapse to one.
    pub fn new<I>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Bipartition>,
    {
        GroundSet::new(n)?;
        let mut members: Vec<Bipartition> = members.into_iter().collect();
        if let Some(p) = members.iter().find(|p| p.n != n) {
            return Err(Error::GroundMismatch {
                expected: n,
                found: p.n,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Bipartition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Bipartition) -> bool {
        self.members.binary_search(p).is_ok()
    }

    /// The family with the member at `index` removed.
    pub fn without(&self, index: usize) -> Self {
        let mut members = self.members.clone();
        members.remove(index);
        Self { n: self.n, members }
    }

    /// The members in canonical order, as a tuple.
    pub fn to_tuple(&self) -> BipartitionTuple {
        BipartitionTuple {
            n: self.n,
            entries: self.members.clone(),
        }
    }

    /// Every pair `i < j` is cut by at least one member. The empty family
    /// separates a one-element set.
    pub fn is_separating(&self) -> bool {
        separates(self.n, &self.members)
    }

    /// Separating, and no member can be dropped without losing that.
    pub fn is_minimal_separating(&self) -> bool {
        if !self.is_separating() {
            return false;
        }
        (0..self.members.len()).all(|skip| {
            let rest: Vec<Bipartition> = self
                .members
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != skip)
                .map(|(_, p)| *p)
                .collect();
            !separates(self.n, &rest)
        })
    }
}

impl fmt::Display for FamilyOfBipartitions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

fn separates(n: usize, members: &[Bipartition]) -> bool {
    for i in 1..=n {
        for j in (i + 1)..=n {
            if !members.iter().any(|p| p.cuts_unchecked(i, j)) {
                return false;
            }
        }
    }
    true
}

/// An ordered list of bipartitions over one ground set; repeats allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartitionTuple {
    n: usize,
    entries: Vec<Bipartition>,
}

impl BipartitionTuple {
    pub fn new(n: usize, entries: Vec<Bipartition>) -> Result<Self> {
        GroundSet::new(n)?;
        if let Some(p) = entries.iter().find(|p| p.n != n) {
            return Err(Error::GroundMismatch {
                expected: n,
                found: p.n,
            });
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Bipartition] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The family of distinct entries.
    pub fn to_family(&self) -> FamilyOfBipartitions {
        let mut members = self.entries.clone();
        members.sort_unstable();
        members.dedup();
        FamilyOfBipartitions { n: self.n, members }
    }
}
