//! The associahedron on `n + 1` letters: its face poset as partially
//! bracketed words, an integral vertex realization, and the h-vector read
//! off by sweeping a generic linear functional over the vertices.

pub mod trees;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num::BigRational;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use trees::{all_trees, tree_to_bracketing, BinaryTree};

/// A face of the associahedron: a laminar family of bracket intervals
/// `[a, b]` of length at least two on the letters `1, .., letters`, with the
/// full interval left implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialAssociation {
    letters: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialAssociation {
    pub fn new(letters: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        if letters == 0 {
            return Err(Error::InvalidBracketing("no letters".into()));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidBracketing(format!(
                    "({},{}) repeated",
                    w[0].0, w[0].1
                )));
            }
        }
        for &(a, b) in &pairs {
            if a < 1 || b > letters || b <= a {
                return Err(Error::InvalidBracketing(format!(
                    "[{a},{b}] is not a bracketable interval on {letters} letters"
                )));
            }
            if (a, b) == (1, letters) {
                return Err(Error::InvalidBracketing(
                    "the full interval is implicit".into(),
                ));
            }
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                let nested = (c >= a && d <= b) || (a >= c && b <= d);
                let disjoint = b < c || d < a;
                if !nested && !disjoint {
                    return Err(Error::InvalidBracketing(format!(
                        "[{a},{b}] and [{c},{d}] overlap"
                    )));
                }
            }
        }
        Ok(PartialAssociation { letters, pairs })
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Faces with fewer brackets are higher; the polytope has dimension
    /// `letters - 2`.
    pub fn dimension(&self) -> usize {
        self.letters - 2 - self.pairs.len()
    }

    /// Face order: adding brackets refines, so `self <= other` when `self`
    /// carries every bracket of `other`.
    pub fn leq(&self, other: &PartialAssociation) -> Result<bool> {
        if self.letters != other.letters {
            return Err(Error::GroundSetMismatch {
                left: self.letters,
                right: other.letters,
            });
        }
        Ok(other
            .pairs
            .iter()
            .all(|p| self.pairs.binary_search(p).is_ok()))
    }

    pub fn is_covered_by(&self, other: &PartialAssociation) -> Result<bool> {
        Ok(self.pairs.len() == other.pairs.len() + 1 && self.leq(other)?)
    }
}

impl fmt::Display for PartialAssociation {
    /// `{[1,2]}` on four letters renders as `((1 2) 3 4)`; the empty family
    /// is the bare word `1 2 3 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn render(
            lo: usize,
            hi: usize,
            pairs: &[(usize, usize)],
            out: &mut String,
        ) {
            let mut pos = lo;
            let mut first = true;
            while pos <= hi {
                if !first {
                    out.push(' ');
                }
                first = false;
                // The longest bracket starting here, strictly inside [lo, hi].
                let child = pairs
                    .iter()
                    .filter(|&&(a, b)| a == pos && b <= hi && (a, b) != (lo, hi))
                    .map(|&(_, b)| b)
                    .max();
                match child {
                    Some(b) => {
                        out.push('(');
                        render(pos, b, pairs, out);
                        out.push(')');
                        pos = b + 1;
                    }
                    None => {
                        out.push_str(&pos.to_string());
                        pos += 1;
                    }
                }
            }
        }
        let mut body = String::new();
        render(1, self.letters, &self.pairs, &mut body);
        if self.pairs.is_empty() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})")
        }
    }
}

/// All faces of the associahedron on `n + 1` letters, sorted by dimension
/// and then display string.
#[derive(Debug, Clone)]
pub struct FacePoset {
    letters: usize,
    faces: Vec<PartialAssociation>,
}

impl FacePoset {
    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn faces(&self) -> &[PartialAssociation] {
        &self.faces
    }

    /// Face counts per dimension, from the vertices up.
    pub fn counts_by_dimension(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.letters - 1];
        for face in &self.faces {
            out[face.dimension()] += 1;
        }
        out
    }
}

/// Builds the face poset of the associahedron on `n + 1` letters.
pub fn face_poset(n: usize, bounds: &Bounds) -> Result<FacePoset> {
    bounds.check("face poset construction", n, bounds.face_poset)?;
    if n == 0 {
        return Err(Error::InvalidBracketing("need at least two letters".into()));
    }
    let letters = n + 1;
    let families = segment_families(1, letters);
    let mut faces: Vec<PartialAssociation> = families
        .into_iter()
        .map(|pairs| PartialAssociation::new(letters, pairs).expect("constructed laminar"))
        .collect();
    faces.sort_by_cached_key(|f| (f.dimension(), f.to_string()));
    Ok(FacePoset { letters, faces })
}

/// Bracket families on the letter segment `[lo, hi]` read as a top-level
/// word: split into at least two factors, wrap each multi-letter factor,
/// and recurse inside the wraps.
fn segment_families(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo == hi {
        return vec![vec![]];
    }
    let len = hi - lo + 1;
    let mut out = Vec::new();
    for mask in 1u32..(1 << (len - 1)) {
        let mut parts = Vec::new();
        let mut start = lo;
        for gap in 0..len - 1 {
            if mask >> gap & 1 == 1 {
                parts.push((start, lo + gap));
                start = lo + gap + 1;
            }
        }
        parts.push((start, hi));
        let mut combos: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for &(a, b) in &parts {
            if a == b {
                continue;
            }
            let inner = segment_families(a, b);
            let mut next = Vec::with_capacity(combos.len() * inner.len());
            for base in &combos {
                for fam in &inner {
                    let mut v = base.clone();
                    v.push((a, b));
                    v.extend_from_slice(fam);
                    next.push(v);
                }
            }
            combos = next;
        }
        out.append(&mut combos);
    }
    out
}

/// A vertex of the realized associahedron: its bracketing and its integer
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeVertex {
    pub id: String,
    pub coords: Vec<i64>,
}

/// Vertices with integer coordinates plus the rotation edges between them.
#[derive(Debug, Clone)]
pub struct RealizedPolytope {
    n: usize,
    vertices: Vec<PolytopeVertex>,
    edges: Vec<(usize, usize)>,
}

impl RealizedPolytope {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[PolytopeVertex] {
        &self.vertices
    }

    /// Index pairs into `vertices`, each with the smaller index first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Coordinate of each internal node, in left-to-right order: the product of
/// the leaf counts of its two subtrees.
fn loday_coords(tree: &BinaryTree, n: usize) -> Vec<i64> {
    fn go(tree: &BinaryTree, leaf_cursor: &mut usize, out: &mut Vec<i64>) -> usize {
        match tree {
            BinaryTree::Leaf => {
                *leaf_cursor += 1;
                1
            }
            BinaryTree::Node(l, r) => {
                let a = go(l, leaf_cursor, out);
                let slot = *leaf_cursor - 1;
                let b = go(r, leaf_cursor, out);
                out[slot] = (a as i64) * (b as i64);
                a + b
            }
        }
    }
    let mut out = vec![0; n];
    let mut cursor = 0;
    go(tree, &mut cursor, &mut out);
    out
}

/// Trees one rotation away from `tree`.
fn rotation_neighbors(tree: &BinaryTree) -> Vec<BinaryTree> {
    let mut out = Vec::new();
    if let BinaryTree::Node(l, r) = tree {
        if let BinaryTree::Node(a, b) = &**l {
            out.push(BinaryTree::Node(
                a.clone(),
                Box::new(BinaryTree::Node(b.clone(), r.clone())),
            ));
        }
        if let BinaryTree::Node(b, c) = &**r {
            out.push(BinaryTree::Node(
                Box::new(BinaryTree::Node(l.clone(), b.clone())),
                c.clone(),
            ));
        }
        for l2 in rotation_neighbors(l) {
            out.push(BinaryTree::Node(Box::new(l2), r.clone()));
        }
        for r2 in rotation_neighbors(r) {
            out.push(BinaryTree::Node(l.clone(), Box::new(r2)));
        }
    }
    out
}

/// Realizes the associahedron on `n + 1` letters with integer vertex
/// coordinates and an edge per tree rotation.
pub fn realize(n: usize, bounds: &Bounds) -> Result<RealizedPolytope> {
    bounds.check("polytope realization", n, bounds.realize)?;
    if n == 0 {
        return Err(Error::InvalidBracketing("need at least two letters".into()));
    }
    let trees = all_trees(n, bounds)?;
    let mut keyed: Vec<(String, BinaryTree)> = trees
        .into_iter()
        .map(|t| (tree_to_bracketing(&t), t))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let index: HashMap<String, usize> = keyed
        .iter()
        .enumerate()
        .map(|(i, (id, _))| (id.clone(), i))
        .collect();
    let mut edges = BTreeSet::new();
    for (i, (_, tree)) in keyed.iter().enumerate() {
        for neighbor in rotation_neighbors(tree) {
            let j = index[&tree_to_bracketing(&neighbor)];
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let vertices = keyed
        .into_iter()
        .map(|(id, tree)| PolytopeVertex {
            coords: loday_coords(&tree, n),
            id,
        })
        .collect();
    Ok(RealizedPolytope {
        n,
        vertices,
        edges: edges.into_iter().collect(),
    })
}

/// Integer functional with coefficients drawn uniformly from a wide range;
/// almost always generic, and `h_vector_of` reports the level edge when it
/// is not.
pub fn random_functional(n: usize, rng: &mut impl rand::Rng) -> Vec<BigRational> {
    (0..n)
        .map(|_| BigRational::from_integer(rng.random_range(-1_000_000i64..=1_000_000).into()))
        .collect()
}

/// A deterministic functional that can never be constant on an edge: the
/// powers of 101 dominate any difference of these small integer
/// coordinates.
pub fn default_functional(n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n);
    let mut p = BigRational::from_integer(1.into());
    let base = BigRational::from_integer(101.into());
    for _ in 0..n {
        out.push(p.clone());
        p *= &base;
    }
    out
}

/// Sweeps `functional` over the vertices and histograms the number of
/// descending edges at each vertex.  For any functional that is
/// nonconstant on every edge the result is the same symmetric vector.
pub fn h_vector(n: usize, functional: &[BigRational], bounds: &Bounds) -> Result<Vec<u64>> {
    h_vector_of(&realize(n, bounds)?, functional)
}

/// Same sweep on an already realized polytope.
pub fn h_vector_of(polytope: &RealizedPolytope, functional: &[BigRational]) -> Result<Vec<u64>> {
    let n = polytope.n();
    if functional.len() != n {
        return Err(Error::OrderMismatch {
            left: functional.len(),
            right: n,
        });
    }
    let values: Vec<BigRational> = polytope
        .vertices()
        .iter()
        .map(|v| {
            v.coords
                .iter()
                .zip(functional)
                .map(|(&c, f)| f * BigRational::from_integer(c.into()))
                .sum()
        })
        .collect();
    let mut down_degree = vec![0usize; polytope.vertices().len()];
    for &(u, v) in polytope.edges() {
        match values[u].cmp(&values[v]) {
            std::cmp::Ordering::Equal => {
                return Err(Error::LevelEdge {
                    u: polytope.vertices()[u].id.clone(),
                    v: polytope.vertices()[v].id.clone(),
                })
            }
            std::cmp::Ordering::Greater => down_degree[u] += 1,
            std::cmp::Ordering::Less => down_degree[v] += 1,
        }
    }
    let mut hist = vec![0u64; n];
    for d in down_degree {
        hist[d] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{rank_vector, LatticeKind};

    fn face(letters: usize, pairs: &[(usize, usize)]) -> PartialAssociation {
        PartialAssociation::new(letters, pairs.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_bracketings() {
        assert!(PartialAssociation::new(4, vec![(1, 2), (2, 3)]).is_err());
        assert!(PartialAssociation::new(4, vec![(1, 4)]).is_err());
        assert!(PartialAssociation::new(4, vec![(2, 2)]).is_err());
        assert!(PartialAssociation::new(4, vec![(0, 2)]).is_err());
        assert!(PartialAssociation::new(4, vec![(3, 5)]).is_err());
        assert!(PartialAssociation::new(4, vec![(1, 2), (1, 2)]).is_err());
        assert!(PartialAssociation::new(4, vec![(1, 2), (1, 3)]).is_ok());
    }

    #[test]
    fn display_conventions() {
        assert_eq!(face(4, &[]).to_string(), "1 2 3 4");
        assert_eq!(face(4, &[(1, 2)]).to_string(), "((1 2) 3 4)");
        assert_eq!(face(4, &[(1, 2), (3, 4)]).to_string(), "((1 2) (3 4))");
        assert_eq!(face(4, &[(1, 2), (1, 3)]).to_string(), "(((1 2) 3) 4)");
        assert_eq!(face(4, &[(2, 4), (3, 4)]).to_string(), "(1 (2 (3 4)))");
        assert_eq!(face(2, &[]).to_string(), "1 2");
    }

    #[test]
    fn pentagon_face_counts() {
        let bounds = Bounds::default();
        let poset = face_poset(3, &bounds).unwrap();
        assert_eq!(poset.counts_by_dimension(), vec![5, 5, 1]);
    }

    #[test]
    fn three_dimensional_face_counts() {
        let bounds = Bounds::default();
        let poset = face_poset(4, &bounds).unwrap();
        assert_eq!(poset.counts_by_dimension(), vec![14, 21, 9, 1]);
        // The 2-faces split into squares and pentagons.
        let mut by_vertex_count = std::collections::BTreeMap::new();
        for f in poset.faces().iter().filter(|f| f.dimension() == 2) {
            let vertices = poset
                .faces()
                .iter()
                .filter(|v| v.dimension() == 0 && v.leq(f).unwrap())
                .count();
            *by_vertex_count.entry(vertices).or_insert(0usize) += 1;
        }
        assert_eq!(by_vertex_count, [(4usize, 3usize), (5, 6)].into());
    }

    #[test]
    fn poset_vertices_are_the_complete_bracketings() {
        let bounds = Bounds::default();
        // The one-vertex case degenerates: the lone face is the whole
        // polytope, so it renders bare.
        let point = face_poset(1, &bounds).unwrap();
        assert_eq!(point.counts_by_dimension(), vec![1]);
        assert_eq!(point.faces()[0].to_string(), "1 2");
        for n in 2..=5 {
            let poset = face_poset(n, &bounds).unwrap();
            let vertex_ids: std::collections::BTreeSet<String> = poset
                .faces()
                .iter()
                .filter(|f| f.dimension() == 0)
                .map(|f| f.to_string())
                .collect();
            let tree_ids: std::collections::BTreeSet<String> = all_trees(n, &bounds)
                .unwrap()
                .iter()
                .map(tree_to_bracketing)
                .collect();
            assert_eq!(vertex_ids, tree_ids);
        }
    }

    #[test]
    fn removing_a_bracket_moves_up_one_dimension() {
        let vertex = face(4, &[(1, 2), (1, 3)]);
        let edge = face(4, &[(1, 2)]);
        let other_vertex = face(4, &[(1, 2), (3, 4)]);
        assert!(vertex.leq(&edge).unwrap());
        assert!(vertex.is_covered_by(&edge).unwrap());
        assert!(other_vertex.is_covered_by(&edge).unwrap());
        assert!(!edge.leq(&vertex).unwrap());
        assert_eq!(edge.dimension(), 1);
    }

    #[test]
    fn realization_invariants() {
        let bounds = Bounds::default();
        for n in 1..=5 {
            let polytope = realize(n, &bounds).unwrap();
            let expect: i64 = (n as i64 + 1) * n as i64 / 2;
            let mut degree = vec![0usize; polytope.vertices().len()];
            for v in polytope.vertices() {
                assert_eq!(v.coords.iter().sum::<i64>(), expect);
                assert!(v.coords.iter().all(|&c| c > 0));
            }
            for &(u, v) in polytope.edges() {
                assert!(u < v);
                degree[u] += 1;
                degree[v] += 1;
            }
            assert!(degree.iter().all(|&d| d == n - 1), "simple polytope");
        }
    }

    #[test]
    fn segment_coordinates() {
        let bounds = Bounds::default();
        let polytope = realize(2, &bounds).unwrap();
        let coords: Vec<(&str, &[i64])> = polytope
            .vertices()
            .iter()
            .map(|v| (v.id.as_str(), v.coords.as_slice()))
            .collect();
        assert_eq!(
            coords,
            vec![("((1 2) 3)", &[1, 2][..]), ("(1 (2 3))", &[2, 1][..])]
        );
        assert_eq!(polytope.edges(), &[(0, 1)]);
    }

    #[test]
    fn h_vectors_match_the_lattice_rank_vectors() {
        let bounds = Bounds::default();
        assert_eq!(
            h_vector(3, &default_functional(3), &bounds).unwrap(),
            vec![1, 3, 1]
        );
        assert_eq!(
            h_vector(4, &default_functional(4), &bounds).unwrap(),
            vec![1, 6, 6, 1]
        );
        for n in 1..=6 {
            assert_eq!(
                h_vector(n, &default_functional(n), &bounds).unwrap(),
                rank_vector(n, LatticeKind::Noncrossing, &bounds).unwrap()
            );
        }
    }

    #[test]
    fn degenerate_functionals_are_rejected() {
        let bounds = Bounds::default();
        let ones = vec![BigRational::from_integer(1.into()); 4];
        assert!(matches!(
            h_vector(4, &ones, &bounds),
            Err(Error::LevelEdge { .. })
        ));
        assert!(matches!(
            h_vector(4, &default_functional(3), &bounds),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn alternative_generic_functionals_give_the_same_h_vector() {
        let bounds = Bounds::default();
        for n in 2..=5 {
            let want = h_vector(n, &default_functional(n), &bounds).unwrap();
            let mut reversed = default_functional(n);
            reversed.reverse();
            assert_eq!(h_vector(n, &reversed, &bounds).unwrap(), want);
        }
    }
}
