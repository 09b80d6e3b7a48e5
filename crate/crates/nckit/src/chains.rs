//! Saturated chains in the noncrossing lattice and their two labellings:
//! transpositions from the permutation picture, and the max-below-the-merge
//! statistic whose maximal-chain sequences are exactly the parking
//! functions.
//!
//! Chains can be shifted: a label sequence read off between `p` and `s`
//! determines a unique chain with the same labels starting from any `r <= p`
//! (or ending at any `t >= s`), which is what makes the interval
//! self-duality below computable.

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::partition::{sort_canonical, LatticeKind, Partition};
use crate::perm::{edge_label, partition_to_perm, perm_to_partition, Permutation, Transposition};

/// A saturated chain in the noncrossing lattice together with its cover
/// labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledChain {
    elements: Vec<Partition>,
    labels: Vec<Transposition>,
}

impl LabeledChain {
    /// Validates that `elements` is a saturated chain of noncrossing
    /// partitions and labels each cover.
    pub fn new(elements: Vec<Partition>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidLabels("a chain needs at least one element".into()));
        }
        let mut labels = Vec::with_capacity(elements.len() - 1);
        for w in elements.windows(2) {
            labels.push(edge_label(&w[0], &w[1])?);
        }
        if elements.len() == 1 && !elements[0].is_noncrossing() {
            return Err(Error::CrossingInput(elements[0].to_string()));
        }
        Ok(LabeledChain { elements, labels })
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn labels(&self) -> &[Transposition] {
        &self.labels
    }

    pub fn bottom(&self) -> &Partition {
        self.elements.first().expect("chains are nonempty")
    }

    pub fn top(&self) -> &Partition {
        self.elements.last().expect("chains are nonempty")
    }

    /// Product of the labels, multiplied left to right.
    pub fn label_product(&self) -> Permutation {
        let n = self.bottom().n();
        let mut acc = Permutation::identity(n);
        for t in &self.labels {
            let tp = t.to_permutation(n).expect("labels fit the ground set");
            acc = acc.then(&tp).expect("same n");
        }
        acc
    }

    /// The max-below-the-merge label of every cover, in order.
    pub fn stanley_labels(&self) -> Vec<usize> {
        self.elements
            .windows(2)
            .map(|w| stanley_label(&w[0], &w[1]).expect("validated covers"))
            .collect()
    }
}

/// Every saturated chain from the discrete partition to the one-block
/// partition of the noncrossing lattice, in lexicographic order by element
/// sequence.  There are `n^(n-2)` of them.
pub fn maximal_chains(n: usize, bounds: &Bounds) -> Result<Vec<LabeledChain>> {
    bounds.check("maximal chain enumeration", n, bounds.chains)?;
    let bottom = Partition::discrete(n)?;
    let mut out = Vec::new();
    let mut stack = vec![bottom];
    extend_to_top(&mut stack, &mut out)?;
    Ok(out)
}

fn extend_to_top(stack: &mut Vec<Partition>, out: &mut Vec<LabeledChain>) -> Result<()> {
    let last = stack.last().expect("stack starts nonempty");
    if last.num_blocks() == 1 {
        out.push(LabeledChain::new(stack.clone())?);
        return Ok(());
    }
    for cover in last.upper_covers(LatticeKind::Noncrossing) {
        stack.push(cover);
        extend_to_top(stack, out)?;
        stack.pop();
    }
    Ok(())
}

/// Label of the cover `p < q` as the largest element of the lower merged
/// block that sits below the least element of the upper merged block.
pub fn stanley_label(p: &Partition, q: &Partition) -> Result<usize> {
    for x in [p, q] {
        if !x.is_noncrossing() {
            return Err(Error::CrossingInput(x.to_string()));
        }
    }
    if !p.is_covered_by(q)? {
        return Err(Error::NotACover {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    // The two blocks of p that q merges: they map to the same q-block.
    let mut merged: Option<(u64, u64)> = None;
    let mut assigned: Vec<Option<u64>> = vec![None; q.num_blocks()];
    for &m in p.block_masks() {
        let lead = m.trailing_zeros() as usize + 1;
        let qi = q.block_index_of(lead)?;
        match assigned[qi] {
            None => assigned[qi] = Some(m),
            Some(first) => merged = Some((first, m)),
        }
    }
    let (a, b) = merged.expect("a cover merges exactly two blocks");
    let (lower, upper) = if a.trailing_zeros() < b.trailing_zeros() {
        (a, b)
    } else {
        (b, a)
    };
    let cut = upper.trailing_zeros(); // bits strictly below min of the upper block
    let below = lower & ((1u64 << cut) - 1);
    debug_assert!(below != 0, "the lower block starts below the upper block");
    Ok(64 - below.leading_zeros() as usize)
}

/// Replays a label sequence upward from `r`: the unique saturated chain
/// starting at `r` with these labels.  Returns its top.
pub fn chain_shift_down(labels: &[Transposition], r: &Partition) -> Result<Partition> {
    if !r.is_noncrossing() {
        return Err(Error::CrossingInput(r.to_string()));
    }
    let n = r.n();
    let mut cur = partition_to_perm(r);
    for t in labels {
        let tp = t.to_permutation(n)?;
        let next = cur.then(&tp)?;
        if next.reflection_length() != cur.reflection_length() + 1 {
            return Err(Error::InvalidLabels(format!(
                "label {t} does not extend the chain upward at {}",
                perm_to_partition(&cur)?
            )));
        }
        perm_to_partition(&next)?;
        cur = next;
    }
    perm_to_partition(&cur)
}

/// Replays a label sequence downward from `t`: the unique saturated chain
/// ending at `t` with these labels.  Returns its bottom.
pub fn chain_shift_up(labels: &[Transposition], t: &Partition) -> Result<Partition> {
    if !t.is_noncrossing() {
        return Err(Error::CrossingInput(t.to_string()));
    }
    let n = t.n();
    let mut cur = partition_to_perm(t);
    for lab in labels.iter().rev() {
        let tp = lab.to_permutation(n)?;
        let next = cur.then(&tp)?;
        if next.reflection_length() + 1 != cur.reflection_length() {
            return Err(Error::InvalidLabels(format!(
                "label {lab} does not extend the chain downward at {}",
                perm_to_partition(&cur)?
            )));
        }
        perm_to_partition(&next)?;
        cur = next;
    }
    perm_to_partition(&cur)
}

/// The self-duality of the interval `[bottom, top]`: read the labels of a
/// chain from `bottom` to `x`, then replay them downward from `top`.  The
/// lexicographically least witness chain is used; the result does not depend
/// on that choice.
pub fn dual_map(bottom: &Partition, top: &Partition, x: &Partition) -> Result<Partition> {
    for p in [bottom, top, x] {
        if !p.is_noncrossing() {
            return Err(Error::CrossingInput(p.to_string()));
        }
    }
    if !(bottom.leq(x)? && x.leq(top)?) {
        return Err(Error::OutsideInterval {
            element: x.to_string(),
            lo: bottom.to_string(),
            hi: top.to_string(),
        });
    }
    let mut labels = Vec::new();
    let mut cur = bottom.clone();
    while &cur != x {
        let step = cur
            .upper_covers(LatticeKind::Noncrossing)
            .into_iter()
            .find(|c| c.leq(x).unwrap_or(false))
            .expect("graded interval: some cover stays below x");
        labels.push(edge_label(&cur, &step)?);
        cur = step;
    }
    chain_shift_up(&labels, top)
}

/// All saturated chains from `p` to `q`, in lexicographic order.
pub fn saturated_chains_between(p: &Partition, q: &Partition) -> Result<Vec<Vec<Partition>>> {
    for x in [p, q] {
        if !x.is_noncrossing() {
            return Err(Error::CrossingInput(x.to_string()));
        }
    }
    if !p.leq(q)? {
        return Ok(Vec::new());
    }
    if p == q {
        return Ok(vec![vec![p.clone()]]);
    }
    let mut out = Vec::new();
    for cover in p.upper_covers(LatticeKind::Noncrossing) {
        if cover.leq(q)? {
            for mut tail in saturated_chains_between(&cover, q)? {
                let mut chain = Vec::with_capacity(tail.len() + 1);
                chain.push(p.clone());
                chain.append(&mut tail);
                out.push(chain);
            }
        }
    }
    Ok(out)
}

/// Elements of the interval `[p, q]` in canonical order.
pub fn interval(all: &[Partition], p: &Partition, q: &Partition) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for z in all {
        if p.leq(z)? && z.leq(q)? {
            out.push(z.clone());
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate;
    use crate::perm::minimal_factorizations;

    fn part(n: usize, blocks: &[&[usize]]) -> Partition {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        Partition::from_blocks(n, &blocks).unwrap()
    }

    #[test]
    fn maximal_chain_counts_follow_the_tree_formula() {
        let bounds = Bounds::default();
        for (n, want) in [(1, 1usize), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)] {
            let chains = maximal_chains(n, &bounds).unwrap();
            assert_eq!(chains.len(), want, "n = {n}");
            for c in &chains {
                assert_eq!(c.elements().len(), n);
                assert_eq!(c.bottom(), &Partition::discrete(n).unwrap());
                assert_eq!(c.top(), &Partition::full(n).unwrap());
            }
        }
        assert!(matches!(
            maximal_chains(64, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn chain_labels_multiply_to_the_long_cycle() {
        let bounds = Bounds::default();
        for n in 2..=6 {
            for c in maximal_chains(n, &bounds).unwrap() {
                assert_eq!(c.label_product(), Permutation::long_cycle(n));
            }
        }
    }

    #[test]
    fn chain_labels_biject_with_minimal_factorizations() {
        let bounds = Bounds::default();
        for n in 2..=5 {
            let mut from_chains: Vec<Vec<Transposition>> = maximal_chains(n, &bounds)
                .unwrap()
                .iter()
                .map(|c| c.labels().to_vec())
                .collect();
            from_chains.sort();
            from_chains.dedup();
            let factorizations =
                minimal_factorizations(&Permutation::long_cycle(n), &bounds).unwrap();
            assert_eq!(from_chains, factorizations);
        }
    }

    #[test]
    fn stanley_labels_on_the_three_element_lattice() {
        let bounds = Bounds::default();
        let mut seqs: Vec<Vec<usize>> = maximal_chains(3, &bounds)
            .unwrap()
            .iter()
            .map(LabeledChain::stanley_labels)
            .collect();
        seqs.sort();
        assert_eq!(seqs, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn stanley_label_picks_the_largest_element_below_the_merge() {
        let p = part(6, &[&[1, 2], &[3, 6], &[4], &[5]]);
        let q = part(6, &[&[1, 2], &[3, 4, 6], &[5]]);
        // Merging {3,6} with {4}: largest element of {3,6} below 4 is 3.
        assert_eq!(stanley_label(&p, &q).unwrap(), 3);
        let top = Partition::full(3).unwrap();
        let one_two = part(3, &[&[1, 2], &[3]]);
        assert_eq!(stanley_label(&one_two, &top).unwrap(), 2);
        assert!(matches!(
            stanley_label(&top, &one_two),
            Err(Error::NotACover { .. })
        ));
    }

    #[test]
    fn shifting_a_chain_down_replays_its_labels() {
        let t12 = Transposition::new(1, 2).unwrap();
        let bottom = Partition::discrete(3).unwrap();
        assert_eq!(
            chain_shift_down(&[t12], &bottom).unwrap(),
            part(3, &[&[1, 2], &[3]])
        );
        // Replaying (1,2) twice would have to go down on the second step.
        assert!(matches!(
            chain_shift_down(&[t12, t12], &bottom),
            Err(Error::InvalidLabels(_))
        ));
    }

    #[test]
    fn shifting_a_chain_up_replays_its_labels() {
        let t12 = Transposition::new(1, 2).unwrap();
        let top = Partition::full(3).unwrap();
        assert_eq!(
            chain_shift_up(&[t12], &top).unwrap(),
            part(3, &[&[2, 3], &[1]])
        );
    }

    #[test]
    fn shifted_chains_are_unique_with_those_labels() {
        let bounds = Bounds::default();
        for n in 2..=4 {
            let all = enumerate(n, LatticeKind::Noncrossing, &bounds).unwrap();
            let top = Partition::full(n).unwrap();
            let bottom = Partition::discrete(n).unwrap();
            for chain in saturated_chains_between(&bottom, &top).unwrap() {
                let labeled = LabeledChain::new(chain).unwrap();
                for r in all.iter().filter(|r| r.leq(labeled.bottom()).unwrap()) {
                    let mut cur = r.clone();
                    for t in labeled.labels() {
                        let with_label: Vec<Partition> = cur
                            .upper_covers(LatticeKind::Noncrossing)
                            .into_iter()
                            .filter(|c| edge_label(&cur, c).unwrap() == *t)
                            .collect();
                        assert_eq!(with_label.len(), 1, "label {t} from {cur}");
                        cur = with_label.into_iter().next().unwrap();
                    }
                    assert_eq!(cur, chain_shift_down(labeled.labels(), r).unwrap());
                }
            }
        }
    }

    #[test]
    fn dual_map_on_the_whole_lattice() {
        let bottom = Partition::discrete(3).unwrap();
        let top = Partition::full(3).unwrap();
        let x = part(3, &[&[1, 2], &[3]]);
        assert_eq!(
            dual_map(&bottom, &top, &x).unwrap(),
            part(3, &[&[2, 3], &[1]])
        );
        assert_eq!(dual_map(&bottom, &top, &bottom).unwrap(), top);
        assert_eq!(dual_map(&bottom, &top, &top).unwrap(), bottom);
        let outside = part(3, &[&[1, 3], &[2]]);
        assert!(dual_map(&x, &top, &outside).is_err());
    }

    #[test]
    fn dual_map_is_an_order_reversing_bijection_on_every_interval() {
        let bounds = Bounds::default();
        for n in 2..=4 {
            let all = enumerate(n, LatticeKind::Noncrossing, &bounds).unwrap();
            for lo in &all {
                for hi in &all {
                    if !lo.leq(hi).unwrap() {
                        continue;
                    }
                    let inside = interval(&all, lo, hi).unwrap();
                    let images: Vec<Partition> = inside
                        .iter()
                        .map(|x| dual_map(lo, hi, x).unwrap())
                        .collect();
                    let mut sorted = images.clone();
                    sort_canonical(&mut sorted);
                    assert_eq!(sorted, inside, "dual map permutes [{lo}, {hi}]");
                    for (x, fx) in inside.iter().zip(&images) {
                        for (y, fy) in inside.iter().zip(&images) {
                            if x.leq(y).unwrap() {
                                assert!(fy.leq(fx).unwrap(), "order reversal in [{lo}, {hi}]");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_map_does_not_depend_on_the_witness_chain() {
        let bounds = Bounds::default();
        let n = 4;
        let all = enumerate(n, LatticeKind::Noncrossing, &bounds).unwrap();
        let bottom = Partition::discrete(n).unwrap();
        let top = Partition::full(n).unwrap();
        for x in &all {
            let want = dual_map(&bottom, &top, x).unwrap();
            for chain in saturated_chains_between(&bottom, x).unwrap() {
                let labeled = LabeledChain::new(chain).unwrap();
                assert_eq!(chain_shift_up(labeled.labels(), &top).unwrap(), want);
            }
        }
    }
}
