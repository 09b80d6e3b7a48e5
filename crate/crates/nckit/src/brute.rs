//! Slow reference implementations used to cross-check the real ones.
//!
//! Everything here recomputes a quantity from first principles (scan the
//! whole poset, count by dynamic programming, enumerate raw diagonal sets)
//! so the fast code paths have something independent to agree with.

use std::collections::HashSet;

use crate::bounds::Bounds;
use crate::complex::order_complex;
use crate::partition::{enumerate, LatticeKind, Partition};
use crate::perm::Permutation;

/// Maximum of the common lower bounds, by exhaustive scan.  `None` unless a
/// unique greatest one exists.
pub(crate) fn greatest_lower_bound(
    all: &[Partition],
    p: &Partition,
    q: &Partition,
) -> Option<Partition> {
    let lower: Vec<&Partition> = all
        .iter()
        .filter(|z| z.leq(p).unwrap() && z.leq(q).unwrap())
        .collect();
    let best: Vec<&&Partition> = lower
        .iter()
        .filter(|z| lower.iter().all(|w| w.leq(z).unwrap()))
        .collect();
    match best[..] {
        [only] => Some((*only).clone()),
        _ => None,
    }
}

/// Minimum of the common upper bounds, by exhaustive scan.  `None` unless a
/// unique least one exists.
pub(crate) fn least_upper_bound(
    all: &[Partition],
    p: &Partition,
    q: &Partition,
) -> Option<Partition> {
    let upper: Vec<&Partition> = all
        .iter()
        .filter(|z| p.leq(z).unwrap() && q.leq(z).unwrap())
        .collect();
    let best: Vec<&&Partition> = upper
        .iter()
        .filter(|z| upper.iter().all(|w| z.leq(w).unwrap()))
        .collect();
    match best[..] {
        [only] => Some((*only).clone()),
        _ => None,
    }
}

/// Counts k-element chains avoiding the bottom by dynamic programming over
/// the comparability matrix, prefixed with the single 0-cell.  This recounts
/// the quotient complex's cell counts without building any cells.
pub(crate) fn anchored_chain_counts(n: usize, bounds: &Bounds) -> Vec<usize> {
    let upper: Vec<Partition> = enumerate(n, LatticeKind::Noncrossing, bounds)
        .expect("within bounds")
        .into_iter()
        .filter(|p| p.height() > 0)
        .collect();
    let m = upper.len();
    let mut less = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && upper[i].leq(&upper[j]).unwrap() {
                less[i][j] = true;
            }
        }
    }
    let mut out = vec![1usize];
    // ending_at[x] = number of k-element chains with top x.
    let mut ending_at = vec![1usize; m];
    loop {
        let total: usize = ending_at.iter().sum();
        if total == 0 {
            break;
        }
        out.push(total);
        let mut next = vec![0usize; m];
        for (x, slot) in next.iter_mut().enumerate() {
            *slot = (0..m).filter(|&y| less[y][x]).map(|y| ending_at[y]).sum();
        }
        ending_at = next;
    }
    out
}

/// Counts sets of `n - 1` pairwise noncrossing diagonals of an
/// `(n + 2)`-gon directly, without going through trees.
#[cfg(test)]
pub(crate) fn count_noncrossing_diagonal_sets(n: usize) -> u128 {
    let m = n + 2;
    let mut diagonals = Vec::new();
    for a in 1..=m {
        for b in a + 2..=m {
            if !(a == 1 && b == m) {
                diagonals.push((a, b));
            }
        }
    }
    fn crosses(x: (usize, usize), y: (usize, usize)) -> bool {
        let ((a, b), (c, d)) = (x, y);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
    fn dfs(
        diagonals: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        need: usize,
        count: &mut u128,
    ) {
        if need == 0 {
            *count += 1;
            return;
        }
        for i in start..diagonals.len() {
            if chosen.iter().all(|&c| !crosses(c, diagonals[i])) {
                chosen.push(diagonals[i]);
                dfs(diagonals, i + 1, chosen, need - 1, count);
                chosen.pop();
            }
        }
    }
    let mut count = 0;
    dfs(&diagonals, 0, &mut Vec::new(), n - 1, &mut count);
    count
}

/// Groups order-complex cells by the cumulative products of their labels
/// (the oriented labelled one-skeleton data) and counts the classes in each
/// dimension.  The quotient complex must have exactly one cell per class.
pub(crate) fn label_class_counts(n: usize, bounds: &Bounds) -> Vec<usize> {
    let complex = order_complex(n, bounds).expect("within bounds");
    (0..=complex.dimension())
        .map(|k| {
            let mut classes: HashSet<Vec<String>> = HashSet::new();
            for cell in complex.cells(k) {
                let mut acc = Permutation::identity(n);
                let key = cell
                    .labels
                    .iter()
                    .map(|lab| {
                        acc = acc.then(lab).expect("same n");
                        acc.to_string()
                    })
                    .collect();
                classes.insert(key);
            }
            classes.len()
        })
        .collect()
}
