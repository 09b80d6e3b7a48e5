//! Set partitions of `{1, .., n}` under refinement, with the noncrossing
//! restriction as a first-class citizen.
//!
//! Blocks are stored as bitmasks (bit `i` is element `i + 1`), sorted by
//! least element.  `p <= q` means every block of `p` sits inside a block of
//! `q`, so the discrete partition is the bottom and the one-block partition
//! the top.  Both the full lattice and its noncrossing subposet are graded by
//! `n - #blocks`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// Which partition lattice an operation works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// All set partitions of `{1, .., n}`.
    Full,
    /// Only the noncrossing ones.
    Noncrossing,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Full => write!(f, "pi"),
            LatticeKind::Noncrossing => write!(f, "nc"),
        }
    }
}

/// A partition of `{1, .., n}` into disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct Partition {
    n: usize,
    blocks: Vec<u64>,
}

/// Wire format: `{"n": 8, "blocks": [[1,4,5],[2,3],[6,8],[7]]}`.
#[derive(Serialize, Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::from_blocks(raw.n, &raw.blocks)
    }
}

impl From<Partition> for RawPartition {
    fn from(p: Partition) -> Self {
        RawPartition {
            n: p.n,
            blocks: p.blocks_as_elements(),
        }
    }
}

impl Partition {
    /// Builds and validates a partition from explicit blocks.  Every element
    /// of `{1, .., n}` must appear exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "n must be between 1 and 64, got {n}"
            )));
        }
        let mut seen = 0u64;
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let mut mask = 0u64;
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                let bit = 1u64 << (e - 1);
                if seen & bit != 0 {
                    return Err(Error::InvalidPartition(format!("element {e} repeated")));
                }
                seen |= bit;
                mask |= bit;
            }
            masks.push(mask);
        }
        let all = full_mask(n);
        if seen != all {
            let missing = (all & !seen).trailing_zeros() as usize + 1;
            return Err(Error::InvalidPartition(format!("element {missing} missing")));
        }
        Ok(Self::from_masks(n, masks))
    }

    /// Internal constructor; masks must already be disjoint and cover.
    pub(crate) fn from_masks(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable_by_key(|m| m.trailing_zeros());
        debug_assert_eq!(masks.iter().copied().fold(0, |a, m| a | m), full_mask(n));
        debug_assert_eq!(
            masks.iter().map(|m| m.count_ones()).sum::<u32>() as usize,
            n
        );
        Partition { n, blocks: masks }
    }

    /// All-singletons partition, the bottom element.
    pub fn discrete(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "n must be between 1 and 64, got {n}"
            )));
        }
        Ok(Self::from_masks(n, (0..n).map(|i| 1u64 << i).collect()))
    }

    /// One-block partition, the top element.
    pub fn full(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::InvalidPartition(format!(
                "n must be between 1 and 64, got {n}"
            )));
        }
        Ok(Self::from_masks(n, vec![full_mask(n)]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Rank in the graded lattice: `n - #blocks`.
    pub fn height(&self) -> usize {
        self.n - self.blocks.len()
    }

    pub(crate) fn block_masks(&self) -> &[u64] {
        &self.blocks
    }

    /// Blocks as sorted element lists, in canonical (least-element) order.
    pub fn blocks_as_elements(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&m| mask_elements(m)).collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// Index (in canonical block order) of the block containing `element`.
    pub fn block_index_of(&self, element: usize) -> Result<usize> {
        if element == 0 || element > self.n {
            return Err(Error::InvalidPartition(format!(
                "element {element} outside 1..={}",
                self.n
            )));
        }
        let bit = 1u64 << (element - 1);
        Ok(self
            .blocks
            .iter()
            .position(|&m| m & bit != 0)
            .expect("blocks cover the ground set"))
    }

    /// Two blocks cross when, read along `1, .., n`, membership switches
    /// between them at least three times.  A partition is noncrossing when no
    /// pair of its blocks crosses.
    pub fn is_noncrossing(&self) -> bool {
        for (i, &a) in self.blocks.iter().enumerate() {
            if a.count_ones() < 2 {
                continue;
            }
            for &b in &self.blocks[i + 1..] {
                if b.count_ones() < 2 {
                    continue;
                }
                if masks_cross(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Refinement order: every block of `self` lies inside a block of
    /// `other`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        self.same_ground_set(other)?;
        'outer: for &m in &self.blocks {
            let low = m & m.wrapping_neg();
            for &q in &other.blocks {
                if q & low != 0 {
                    if m & !q != 0 {
                        return Ok(false);
                    }
                    continue 'outer;
                }
            }
            unreachable!("blocks cover the ground set");
        }
        Ok(true)
    }

    /// `q` covers `self` exactly when `q` merges two blocks of `self`.
    pub fn is_covered_by(&self, q: &Partition) -> Result<bool> {
        Ok(self.num_blocks() == q.num_blocks() + 1 && self.leq(q)?)
    }

    /// Greatest lower bound: blockwise intersections.  The same operation
    /// serves both lattices (a common refinement of noncrossing partitions is
    /// noncrossing).
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.same_ground_set(other)?;
        let mut masks = Vec::new();
        for &a in &self.blocks {
            for &b in &other.blocks {
                let m = a & b;
                if m != 0 {
                    masks.push(m);
                }
            }
        }
        Ok(Partition::from_masks(self.n, masks))
    }

    /// Least upper bound in the lattice selected by `kind`.
    ///
    /// In the full lattice this is the transitive closure of "same block
    /// somewhere".  In the noncrossing lattice both inputs must be
    /// noncrossing and crossing blocks of the raw join are merged until none
    /// remain; the result is the least noncrossing partition above both.
    pub fn join(&self, other: &Partition, kind: LatticeKind) -> Result<Partition> {
        self.same_ground_set(other)?;
        if kind == LatticeKind::Noncrossing {
            for p in [self, other] {
                if !p.is_noncrossing() {
                    return Err(Error::CrossingInput(p.to_string()));
                }
            }
        }
        let raw = self.raw_join(other);
        match kind {
            LatticeKind::Full => Ok(raw),
            LatticeKind::Noncrossing => Ok(raw.noncrossing_closure()),
        }
    }

    fn raw_join(&self, other: &Partition) -> Partition {
        let mut dsu: Vec<usize> = (0..self.n).collect();
        fn find(dsu: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while dsu[r] != r {
                r = dsu[r];
            }
            let mut c = x;
            while dsu[c] != r {
                let next = dsu[c];
                dsu[c] = r;
                c = next;
            }
            r
        }
        for p in [self, other] {
            for &m in &p.blocks {
                let lead = m.trailing_zeros() as usize;
                let mut rest = m & (m - 1);
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let (a, b) = (find(&mut dsu, lead), find(&mut dsu, e));
                    if a != b {
                        dsu[b] = a;
                    }
                }
            }
        }
        let mut by_root: Vec<u64> = vec![0; self.n];
        for x in 0..self.n {
            let r = find(&mut dsu, x);
            by_root[r] |= 1u64 << x;
        }
        Partition::from_masks(self.n, by_root.into_iter().filter(|&m| m != 0).collect())
    }

    /// Merges crossing block pairs until the result is noncrossing.  The
    /// fixpoint does not depend on merge order, so the first crossing pair in
    /// canonical order is merged each round.
    fn noncrossing_closure(&self) -> Partition {
        let mut masks = self.blocks.clone();
        loop {
            let mut merged = false;
            'scan: for i in 0..masks.len() {
                for j in i + 1..masks.len() {
                    if masks[i].count_ones() >= 2
                        && masks[j].count_ones() >= 2
                        && masks_cross(masks[i], masks[j])
                    {
                        let m = masks[i] | masks[j];
                        masks.remove(j);
                        masks[i] = m;
                        merged = true;
                        break 'scan;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        Partition::from_masks(self.n, masks)
    }

    /// Partitions covering `self` in the lattice selected by `kind`: one per
    /// mergeable block pair, in canonical order.
    pub fn upper_covers(&self, kind: LatticeKind) -> Vec<Partition> {
        let k = self.blocks.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let mut masks = Vec::with_capacity(k - 1);
                for (t, &m) in self.blocks.iter().enumerate() {
                    if t == i {
                        masks.push(self.blocks[i] | self.blocks[j]);
                    } else if t != j {
                        masks.push(m);
                    }
                }
                let q = Partition::from_masks(self.n, masks);
                if kind == LatticeKind::Full || q.is_noncrossing() {
                    out.push(q);
                }
            }
        }
        sort_canonical(&mut out);
        out
    }

    fn same_ground_set(&self, other: &Partition) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn mask_elements(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Membership transitions along the merged support; three or more means the
/// blocks interleave as `a < b < c < d` with `a, c` on one side.
fn masks_cross(a: u64, b: u64) -> bool {
    let mut union = a | b;
    let mut transitions = 0u32;
    let mut last = 0u8;
    while union != 0 {
        let bit = union & union.wrapping_neg();
        union &= union - 1;
        let cur = if a & bit != 0 { 1 } else { 2 };
        if last != 0 && cur != last {
            transitions += 1;
            if transitions >= 3 {
                return true;
            }
        }
        last = cur;
    }
    false
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &m in &self.blocks {
            write!(f, "{{")?;
            let mut first = true;
            for e in mask_elements(m) {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
                first = false;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Lexicographic on the canonical serialization, so sorted output and
    /// sorted internal vectors agree with what the user sees.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

pub(crate) fn sort_canonical(items: &mut [Partition]) {
    items.sort_by_cached_key(|p| p.to_string());
}

/// The `n`-th Catalan number, `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (2 * (n as u128) - i) / (i + 1);
    }
    c / (n as u128 + 1)
}

/// Every partition of `{1, .., n}` of the requested kind, in canonical
/// order.
pub fn enumerate(n: usize, kind: LatticeKind, bounds: &Bounds) -> Result<Vec<Partition>> {
    match kind {
        LatticeKind::Noncrossing => {
            bounds.check("noncrossing partition enumeration", n, bounds.noncrossing_enum)?
        }
        LatticeKind::Full => bounds.check("partition enumeration", n, bounds.full_enum)?,
    }
    if n == 0 || n > 64 {
        return Err(Error::InvalidPartition(format!(
            "n must be between 1 and 64, got {n}"
        )));
    }
    let mut out = match kind {
        LatticeKind::Noncrossing => {
            let elems: Vec<usize> = (1..=n).collect();
            enumerate_noncrossing(&elems)
                .into_iter()
                .map(|masks| Partition::from_masks(n, masks))
                .collect()
        }
        LatticeKind::Full => enumerate_full(n),
    };
    sort_canonical(&mut out);
    Ok(out)
}

/// Noncrossing partitions of a sorted element list.  The block containing
/// the first element splits the rest into independent gaps; recurse on each
/// gap and take products.
fn enumerate_noncrossing(elems: &[usize]) -> Vec<Vec<u64>> {
    if elems.is_empty() {
        return vec![vec![]];
    }
    let rest = &elems[1..];
    let mut out = Vec::new();
    // Subsets of `rest` joining elems[0] in its block.
    for choice in 0u64..(1u64 << rest.len()) {
        let mut block = 1u64 << (elems[0] - 1);
        let mut gaps: Vec<(usize, usize)> = Vec::new();
        let mut gap_start = 0usize;
        for (i, &e) in rest.iter().enumerate() {
            if choice >> i & 1 == 1 {
                block |= 1u64 << (e - 1);
                if i > gap_start {
                    gaps.push((gap_start, i));
                }
                gap_start = i + 1;
            }
        }
        if rest.len() > gap_start {
            gaps.push((gap_start, rest.len()));
        }
        let mut partials: Vec<Vec<u64>> = vec![vec![block]];
        for &(lo, hi) in &gaps {
            let sub = enumerate_noncrossing(&rest[lo..hi]);
            let mut next = Vec::with_capacity(partials.len() * sub.len());
            for p in &partials {
                for s in &sub {
                    let mut v = p.clone();
                    v.extend_from_slice(s);
                    next.push(v);
                }
            }
            partials = next;
        }
        out.append(&mut partials);
    }
    out
}

/// All set partitions via restricted growth strings.
fn enumerate_full(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().copied().unwrap_or(0) + 1;
        let mut masks = vec![0u64; k];
        for (i, &b) in rgs.iter().enumerate() {
            masks[b] |= 1u64 << i;
        }
        out.push(Partition::from_masks(n, masks));
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for slot in rgs[i + 1..].iter_mut() {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// Number of elements at each height, from the bottom up.
pub fn rank_vector(n: usize, kind: LatticeKind, bounds: &Bounds) -> Result<Vec<u64>> {
    let all = enumerate(n, kind, bounds)?;
    let mut hist = vec![0u64; n];
    for p in &all {
        hist[p.height()] += 1;
    }
    Ok(hist)
}
