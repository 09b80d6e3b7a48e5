//! Permutations of `{1, .., n}` with composition read left to right, the
//! reflection-length (absolute) order, and the bridge between noncrossing
//! partitions and the interval below the long cycle `(1, 2, .., n)`.

use std::fmt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Sign of a permutation: even permutations factor into an even number of
/// transpositions, odd ones into an odd number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A permutation of `{1, .., n}`.  `u.then(v)` applies `u` first, so
/// `(1,2)` then `(1,3)` is the 3-cycle `(1,2,3)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the image of `i + 1`, stored 0-based.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The long cycle `(1, 2, .., n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Builds a permutation from 1-based images; must be a bijection.
    pub fn from_images(images_one_based: &[usize]) -> Result<Self> {
        let n = images_one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &y in images_one_based {
            if y == 0 || y > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {y} outside 1..={n}"
                )));
            }
            if seen[y - 1] {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
            seen[y - 1] = true;
            images.push(y - 1);
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from pairwise disjoint cycles on `{1, .., n}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidPermutation("empty cycle".into()));
            }
            for &e in cycle {
                if e == 0 || e > n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {e} outside 1..={n}"
                    )));
                }
                if seen[e - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {e} repeated"
                    )));
                }
                seen[e - 1] = true;
            }
            for w in 0..cycle.len() {
                images[cycle[w] - 1] = cycle[(w + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y] = i;
        }
        Permutation { images }
    }

    /// All orbits, including fixed points, each starting at its least
    /// element, sorted by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x + 1);
                x = self.images[x];
            }
            out.push(orbit);
        }
        out
    }

    /// Orbits of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.orbits().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Minimum number of transpositions multiplying to `self`:
    /// `n` minus the number of orbits.
    pub fn reflection_length(&self) -> usize {
        self.n() - self.orbits().len()
    }

    /// Parity of every factorization into transpositions, read off the
    /// orbit count.
    pub fn parity(&self) -> Parity {
        match self.reflection_length() % 2 {
            0 => Parity::Even,
            _ => Parity::Odd,
        }
    }

    /// Absolute order: `self <= w` when reflection lengths add along the way
    /// from `self` to `w`.
    pub fn absolute_leq(&self, w: &Permutation) -> Result<bool> {
        let gap = self.inverse().then(w)?;
        Ok(self.reflection_length() + gap.reflection_length() == w.reflection_length())
    }

    /// Parses cycle notation such as `(1,4,5)(2,3)` on `{1, .., n}`.
    /// Cycles must be pairwise disjoint; `()` denotes the identity.
    pub fn from_cycle_string(s: &str, n: usize) -> Result<Self> {
        let mut chars = s.chars().peekable();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut saw_empty = false;
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(Error::Parse(format!("expected '(', found {c:?}"))),
            }
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            if chars.peek() == Some(&')') {
                chars.next();
                saw_empty = true;
                continue;
            }
            let mut cycle = Vec::new();
            loop {
                while chars.peek().is_some_and(|c| c.is_whitespace()) {
                    chars.next();
                }
                let mut digits = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    digits.push(chars.next().unwrap());
                }
                if digits.is_empty() {
                    return Err(Error::Parse("expected a point in a cycle".into()));
                }
                let value: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("point {digits} out of range")))?;
                cycle.push(value);
                while chars.peek().is_some_and(|c| c.is_whitespace()) {
                    chars.next();
                }
                match chars.next() {
                    Some(',') => {}
                    Some(')') => break,
                    Some(c) => {
                        return Err(Error::Parse(format!("expected ',' or ')', found {c:?}")))
                    }
                    None => return Err(Error::Parse("unclosed cycle".into())),
                }
            }
            cycles.push(cycle);
        }
        if saw_empty && !cycles.is_empty() {
            return Err(Error::Parse(
                "'()' is only valid as the whole identity permutation".into(),
            ));
        }
        Permutation::from_cycles(n, &cycles).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation; fixed points are omitted and the identity is
    /// `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, e) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A transposition `(i, j)` with `i < j`, the labels on lattice covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidPermutation(format!(
                "({i},{j}) is not a transposition"
            )));
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(Transposition { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if self.j > n {
            return Err(Error::InvalidPermutation(format!(
                "transposition {self} does not fit on {n} points"
            )));
        }
        Permutation::from_cycles(n, &[vec![self.i, self.j]])
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Increasing cycles on the blocks: `{1,4,5}{2,3}` becomes `(1,4,5)(2,3)`.
pub fn partition_to_perm(p: &Partition) -> Permutation {
    let cycles = p.blocks_as_elements();
    Permutation::from_cycles(p.n(), &cycles).expect("blocks are disjoint and in range")
}

/// Orbits as blocks.  Only permutations below the long cycle in absolute
/// order correspond to (noncrossing) partitions; anything else is rejected.
pub fn perm_to_partition(w: &Permutation) -> Result<Partition> {
    let n = w.n();
    if !w.absolute_leq(&Permutation::long_cycle(n))? {
        return Err(Error::NotBelowLongCycle {
            perm: w.to_string(),
            n,
        });
    }
    let p = Partition::from_blocks(n, &w.orbits())?;
    debug_assert!(p.is_noncrossing());
    debug_assert_eq!(partition_to_perm(&p), *w);
    Ok(p)
}

/// Label of the cover `p < q` in the noncrossing lattice: the transposition
/// `perm(p)^-1 * perm(q)`.
pub fn edge_label(p: &Partition, q: &Partition) -> Result<Transposition> {
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
    let t = partition_to_perm(p)
        .inverse()
        .then(&partition_to_perm(q))?;
    let cycles = t.cycles();
    assert!(
        cycles.len() == 1 && cycles[0].len() == 2,
        "a cover label is always a transposition"
    );
    Transposition::new(cycles[0][0], cycles[0][1])
}

/// All shortest transposition words multiplying to `w`, in lexicographic
/// order.
pub fn minimal_factorizations(
    w: &Permutation,
    bounds: &Bounds,
) -> Result<Vec<Vec<Transposition>>> {
    let len = w.reflection_length();
    bounds.check(
        "minimal factorization enumeration",
        len,
        bounds.factorization_length,
    )?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(w, &mut prefix, &mut out);
    Ok(out)
}

fn descend(
    remaining: &Permutation,
    prefix: &mut Vec<Transposition>,
    out: &mut Vec<Vec<Transposition>>,
) {
    if remaining.is_identity() {
        out.push(prefix.clone());
        return;
    }
    let n = remaining.n();
    let len = remaining.reflection_length();
    for i in 1..=n {
        for j in i + 1..=n {
            let t = Transposition { i, j };
            let tp = t.to_permutation(n).expect("in range");
            // Peeling t off the left: the rest must multiply to t^-1 * w.
            let rest = tp.then(remaining).expect("same n");
            if rest.reflection_length() + 1 == len {
                prefix.push(t);
                descend(&rest, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Every permutation of `{1, .., n}`, in lexicographic image order.
pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::new();
    let mut used = vec![false; n];
    build(n, &mut images, &mut used, &mut out);
    out
}

fn build(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
    if images.len() == n {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    for y in 0..n {
        if !used[y] {
            used[y] = true;
            images.push(y);
            build(n, images, used, out);
            images.pop();
            used[y] = false;
        }
    }
}
