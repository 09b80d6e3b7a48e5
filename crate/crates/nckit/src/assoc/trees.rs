//! Rooted binary trees and the Catalan families they biject with:
//! bracketings of `n + 1` letters and triangulations of an `(n + 2)`-gon
//! with a fixed base edge.

use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// A rooted binary tree; `n` counts internal nodes, so there are `n + 1`
/// leaves, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn internal_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.internal_nodes() + 1
    }
}

/// All binary trees with `n` internal nodes, split-position order.
pub fn all_trees(n: usize, bounds: &Bounds) -> Result<Vec<BinaryTree>> {
    bounds.check("tree enumeration", n, bounds.catalan_families)?;
    Ok(trees_rec(n))
}

fn trees_rec(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return vec![BinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for left in 0..n {
        for l in trees_rec(left) {
            for r in trees_rec(n - 1 - left) {
                out.push(BinaryTree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

/// Structural form with `*` leaves, e.g. `((**)*)`.
pub fn tree_shape(tree: &BinaryTree) -> String {
    match tree {
        BinaryTree::Leaf => "*".into(),
        BinaryTree::Node(l, r) => format!("({}{})", tree_shape(l), tree_shape(r)),
    }
}

/// Full bracketing of the leaves numbered left to right, e.g. `(1 (2 3))`.
pub fn tree_to_bracketing(tree: &BinaryTree) -> String {
    fn go(tree: &BinaryTree, next: &mut usize, out: &mut String) {
        match tree {
            BinaryTree::Leaf => {
                out.push_str(&next.to_string());
                *next += 1;
            }
            BinaryTree::Node(l, r) => {
                out.push('(');
                go(l, next, out);
                out.push(' ');
                go(r, next, out);
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    let mut next = 1;
    go(tree, &mut next, &mut out);
    out
}

/// Parses a full bracketing such as `((1 2) (3 4))`.  Leaves must read
/// `1, 2, ..` from left to right.  Nesting deeper than 64 is rejected, which
/// keeps the recursive parser's stack use bounded.
pub fn parse_bracketing(s: &str) -> Result<BinaryTree> {
    struct Parser<'a> {
        chars: std::iter::Peekable<std::str::Chars<'a>>,
        next_leaf: usize,
        depth: usize,
    }
    impl Parser<'_> {
        fn skip_ws(&mut self) {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.chars.next();
            }
        }
        fn expr(&mut self) -> Result<BinaryTree> {
            self.skip_ws();
            match self.chars.peek() {
                Some('(') => {
                    self.chars.next();
                    self.depth += 1;
                    if self.depth > 64 {
                        return Err(Error::Parse("brackets nested deeper than 64".into()));
                    }
                    let left = self.expr()?;
                    self.skip_ws();
                    let right = self.expr()?;
                    self.skip_ws();
                    if self.chars.next() != Some(')') {
                        return Err(Error::Parse("expected ')'".into()));
                    }
                    self.depth -= 1;
                    Ok(BinaryTree::Node(Box::new(left), Box::new(right)))
                }
                Some(c) if c.is_ascii_digit() => {
                    let mut digits = String::new();
                    while self.chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                        digits.push(self.chars.next().unwrap());
                    }
                    let value: usize = digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("leaf {digits} out of range")))?;
                    if value != self.next_leaf {
                        return Err(Error::Parse(format!(
                            "leaf {value} out of order, expected {}",
                            self.next_leaf
                        )));
                    }
                    self.next_leaf += 1;
                    Ok(BinaryTree::Leaf)
                }
                Some(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
                None => Err(Error::Parse("unexpected end of input".into())),
            }
        }
    }
    let mut p = Parser {
        chars: s.chars().peekable(),
        next_leaf: 1,
        depth: 0,
    };
    let tree = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.chars.next() {
        return Err(Error::Parse(format!("trailing {c:?}")));
    }
    Ok(tree)
}

/// Diagonals of the `(n + 2)`-gon for the triangulation matching `tree`,
/// with polygon vertices `1, .., n + 2` and base edge `(1, n + 2)`.
///
/// A subtree spanning leaves `lo..hi` corresponds to the chord
/// `(lo, hi + 1)`; every internal non-root subtree yields a diagonal.
pub fn tree_to_triangulation(tree: &BinaryTree) -> Vec<(usize, usize)> {
    fn go(tree: &BinaryTree, lo: usize, diagonals: &mut Vec<(usize, usize)>) -> usize {
        match tree {
            BinaryTree::Leaf => lo,
            BinaryTree::Node(l, r) => {
                let left_hi = go(l, lo, diagonals);
                let hi = go(r, left_hi + 1, diagonals);
                if !matches!(**l, BinaryTree::Leaf) {
                    diagonals.push((lo, left_hi + 1));
                }
                if !matches!(**r, BinaryTree::Leaf) {
                    diagonals.push((left_hi + 1, hi + 1));
                }
                hi
            }
        }
    }
    let mut diagonals = Vec::new();
    go(tree, 1, &mut diagonals);
    diagonals.sort_unstable();
    diagonals
}

/// Rebuilds the tree from a triangulation's diagonal set.
pub fn triangulation_to_tree(n: usize, diagonals: &[(usize, usize)]) -> Result<BinaryTree> {
    let m = n + 2;
    if n == 0 {
        return Err(Error::InvalidTriangulation("need at least one triangle".into()));
    }
    if diagonals.len() != n.saturating_sub(1) {
        return Err(Error::InvalidTriangulation(format!(
            "expected {} diagonals, got {}",
            n - 1,
            diagonals.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in diagonals {
        if a < 1 || b > m || b < a + 2 || (a, b) == (1, m) {
            return Err(Error::InvalidTriangulation(format!(
                "({a},{b}) is not a diagonal of a {m}-gon with base (1,{m})"
            )));
        }
        if !seen.insert((a, b)) {
            return Err(Error::InvalidTriangulation(format!("({a},{b}) repeated")));
        }
    }
    for (i, &(a, b)) in diagonals.iter().enumerate() {
        for &(c, d) in &diagonals[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(Error::InvalidTriangulation(format!(
                    "({a},{b}) crosses ({c},{d})"
                )));
            }
        }
    }
    let chords: std::collections::HashSet<(usize, usize)> = diagonals.iter().copied().collect();
    // A chord (a, b) is usable if it is a polygon side or a diagonal.
    let usable = |a: usize, b: usize| b == a + 1 || chords.contains(&(a, b));
    fn build(
        a: usize,
        b: usize,
        usable: &dyn Fn(usize, usize) -> bool,
    ) -> Result<BinaryTree> {
        if b == a + 1 {
            return Ok(BinaryTree::Leaf);
        }
        let mut split = None;
        for k in a + 1..b {
            if usable(a, k) && usable(k, b) {
                if split.is_some() {
                    return Err(Error::InvalidTriangulation(format!(
                        "chord ({a},{b}) borders more than one triangle below"
                    )));
                }
                split = Some(k);
            }
        }
        let k = split.ok_or_else(|| {
            Error::InvalidTriangulation(format!("no triangle sits on chord ({a},{b})"))
        })?;
        Ok(BinaryTree::Node(
            Box::new(build(a, k, usable)?),
            Box::new(build(k, b, usable)?),
        ))
    }
    build(1, m, &usable)
}

/// Renders a triangulation as its sorted diagonal list, e.g.
/// `[(1,3),(1,4)]`.
pub fn triangulation_string(diagonals: &[(usize, usize)]) -> String {
    let mut out = String::from("[");
    for (k, (a, b)) in diagonals.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!("({a},{b})"));
    }
    out.push(']');
    out
}

/// The three Catalan families this crate exposes as strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanFamily {
    Trees,
    Bracketings,
    Triangulations,
}

/// All members of a family, rendered canonically and sorted.
pub fn catalan_family_strings(
    n: usize,
    family: CatalanFamily,
    bounds: &Bounds,
) -> Result<Vec<String>> {
    let trees = all_trees(n, bounds)?;
    let mut out: Vec<String> = match family {
        CatalanFamily::Trees => trees.iter().map(tree_shape).collect(),
        CatalanFamily::Bracketings => trees.iter().map(tree_to_bracketing).collect(),
        CatalanFamily::Triangulations => trees
            .iter()
            .map(|t| triangulation_string(&tree_to_triangulation(t)))
            .collect(),
    };
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::partition::catalan;

    #[test]
    fn tree_counts_are_catalan() {
        let bounds = Bounds::default();
        for n in 0..=8 {
            let trees = all_trees(n, &bounds).unwrap();
            assert_eq!(trees.len() as u128, catalan(n).max(1));
            let distinct: std::collections::HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
        assert!(all_trees(64, &bounds).is_err());
    }

    #[test]
    fn bracketings_of_five_letters() {
        let bounds = Bounds::default();
        let got = catalan_family_strings(4, CatalanFamily::Bracketings, &bounds).unwrap();
        let mut want = vec![
            "(1 (2 (3 (4 5))))",
            "(1 (2 ((3 4) 5)))",
            "(1 ((2 3) (4 5)))",
            "(1 ((2 (3 4)) 5))",
            "(1 (((2 3) 4) 5))",
            "((1 2) (3 (4 5)))",
            "((1 2) ((3 4) 5))",
            "((1 (2 3)) (4 5))",
            "((1 (2 (3 4))) 5)",
            "((1 ((2 3) 4)) 5)",
            "(((1 2) 3) (4 5))",
            "(((1 2) (3 4)) 5)",
            "(((1 (2 3)) 4) 5)",
            "((((1 2) 3) 4) 5)",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn bracketing_round_trip() {
        let bounds = Bounds::default();
        for n in 0..=6 {
            for tree in all_trees(n, &bounds).unwrap() {
                let s = tree_to_bracketing(&tree);
                assert_eq!(parse_bracketing(&s).unwrap(), tree, "{s}");
            }
        }
    }

    #[test]
    fn bracketing_parser_rejects_malformed_input() {
        for bad in [
            "",
            "(1 2",
            "(2 1)",
            "(1 (2 3)",
            "1 2",
            "(1 2))",
            "((1 2))",
            "(1 2 3)",
            "(x y)",
            "(1 3)",
        ] {
            assert!(parse_bracketing(bad).is_err(), "{bad:?} should not parse");
        }
        assert!(parse_bracketing("1").is_ok());
        let too_deep = "(".repeat(70);
        assert!(matches!(
            parse_bracketing(&too_deep),
            Err(Error::Parse(msg)) if msg.contains("nested")
        ));
    }

    #[test]
    fn triangulation_round_trip() {
        let bounds = Bounds::default();
        for n in 1..=6 {
            let trees = all_trees(n, &bounds).unwrap();
            let mut seen = std::collections::HashSet::new();
            for tree in trees {
                let diagonals = tree_to_triangulation(&tree);
                assert_eq!(diagonals.len(), n - 1);
                assert!(seen.insert(diagonals.clone()), "{diagonals:?} repeated");
                assert_eq!(triangulation_to_tree(n, &diagonals).unwrap(), tree);
            }
        }
    }

    #[test]
    fn triangulation_counts_match_a_direct_diagonal_search() {
        let bounds = Bounds::default();
        for n in 1..=6 {
            assert_eq!(
                catalan_family_strings(n, CatalanFamily::Triangulations, &bounds)
                    .unwrap()
                    .len() as u128,
                brute::count_noncrossing_diagonal_sets(n)
            );
        }
    }

    #[test]
    fn bad_triangulations_are_rejected() {
        assert!(triangulation_to_tree(3, &[(1, 3), (2, 4)]).is_err());
        assert!(triangulation_to_tree(3, &[(1, 3)]).is_err());
        assert!(triangulation_to_tree(3, &[(1, 5), (1, 3)]).is_err());
        assert!(triangulation_to_tree(3, &[(1, 3), (1, 3)]).is_err());
        assert!(triangulation_to_tree(3, &[(1, 3), (1, 4)]).is_ok());
    }

    #[test]
    fn known_triangulation() {
        // The left comb (((1 2) 3) 4): every diagonal touches vertex 1.
        let comb = parse_bracketing("(((1 2) 3) 4)").unwrap();
        assert_eq!(tree_to_triangulation(&comb), vec![(1, 3), (1, 4)]);
        // The right comb (1 (2 (3 4))): fan from the last vertex.
        let comb = parse_bracketing("(1 (2 (3 4)))").unwrap();
        assert_eq!(tree_to_triangulation(&comb), vec![(2, 5), (3, 5)]);
    }

    #[test]
    fn shapes_render_distinctly() {
        let bounds = Bounds::default();
        let shapes = catalan_family_strings(2, CatalanFamily::Trees, &bounds).unwrap();
        assert_eq!(shapes, vec!["((**)*)", "(*(**))"]);
    }
}
