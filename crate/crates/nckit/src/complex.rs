//! Two cell complexes built from chains in the noncrossing lattice.
//!
//! The order complex has one simplex per nonempty chain.  The one-vertex
//! quotient complex glues simplices with identically labelled oriented
//! edges; its k-cells correspond to k-element chains avoiding the bottom,
//! anchored there implicitly.  Cells carry the consecutive quotient
//! permutations of their chain, and cell ids are chosen so a cell can be
//! named by its labels alone.

use std::collections::HashSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::partition::{enumerate, LatticeKind, Partition};
use crate::perm::{partition_to_perm, Permutation};

/// One closed cell: an id unique within its dimension, the quotient labels
/// along the underlying chain, and the ids of its facets with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub labels: Vec<Permutation>,
    pub facets: Vec<String>,
}

/// Cells graded by dimension.  Every facet id resolves one dimension down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Vec<Cell>>,
}

impl CellComplex {
    fn new(mut cells: Vec<Vec<Cell>>) -> Self {
        for dim in &mut cells {
            dim.sort_by(|a, b| a.id.cmp(&b.id));
        }
        let complex = CellComplex { cells };
        complex.assert_facets_resolve();
        complex
    }

    fn assert_facets_resolve(&self) {
        let mut below: HashSet<&str> = HashSet::new();
        for (k, dim) in self.cells.iter().enumerate() {
            for cell in dim {
                if k == 0 {
                    assert!(cell.facets.is_empty(), "vertices have no facets");
                    continue;
                }
                assert_eq!(cell.facets.len(), k + 1, "a k-cell has k + 1 facets");
                for f in &cell.facets {
                    assert!(
                        below.contains(f.as_str()),
                        "facet {f} of {} missing in dimension {}",
                        cell.id,
                        k - 1
                    );
                }
            }
            below = dim.iter().map(|c| c.id.as_str()).collect();
        }
    }

    pub fn dimension(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        &self.cells[dim]
    }

    /// Number of cells in each dimension, from 0 up.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Alternating sum of the cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, dim)| {
                let c = dim.len() as i64;
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }
}

/// Checks that `labels` is a plausible anchored chain labelling: every label
/// moves, lengths add, and the running product stays below the long cycle.
pub fn validate_label_sequence(labels: &[Permutation], n: usize) -> Result<()> {
    let mut acc = Permutation::identity(n);
    let mut total = 0usize;
    for lab in labels {
        if lab.n() != n {
            return Err(Error::GroundSetMismatch {
                left: lab.n(),
                right: n,
            });
        }
        if lab.is_identity() {
            return Err(Error::InvalidLabels("identity label".into()));
        }
        total += lab.reflection_length();
        acc = acc.then(lab)?;
        if acc.reflection_length() != total {
            return Err(Error::InvalidLabels(format!(
                "lengths stop adding at label {lab}"
            )));
        }
    }
    if !acc.absolute_leq(&Permutation::long_cycle(n))? {
        return Err(Error::InvalidLabels(format!(
            "product {acc} is not below the long cycle"
        )));
    }
    Ok(())
}

/// All strict chains of noncrossing partitions of `{1, .., n}`, as sequences
/// of indices into a height-sorted element list.
fn all_chains(elements: &[Partition]) -> Vec<Vec<usize>> {
    let m = elements.len();
    let mut less = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && elements[i].leq(&elements[j]).expect("same ground set") {
                less[i][j] = true;
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..m {
        grow_chain(start, &less, &mut stack, &mut out);
    }
    out
}

fn grow_chain(at: usize, less: &[Vec<bool>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    stack.push(at);
    out.push(stack.clone());
    // Elements are height-sorted, so anything above `at` comes later and
    // comparability with the chain tail is transitive.
    for next in at + 1..less.len() {
        if less[at][next] {
            grow_chain(next, less, stack, out);
        }
    }
    stack.pop();
}

fn height_sorted(n: usize, bounds: &Bounds) -> Result<Vec<Partition>> {
    let mut elements = enumerate(n, LatticeKind::Noncrossing, bounds)?;
    elements.sort_by_cached_key(|p| (p.height(), p.to_string()));
    Ok(elements)
}

/// Consecutive quotients `perm(prev)^-1 * perm(next)` along a chain.
fn quotient_labels(chain: &[&Partition]) -> Vec<Permutation> {
    chain
        .windows(2)
        .map(|w| {
            partition_to_perm(w[0])
                .inverse()
                .then(&partition_to_perm(w[1]))
                .expect("same ground set")
        })
        .collect()
}

/// The order complex of the noncrossing lattice: one k-simplex per
/// (k+1)-element chain.
pub fn order_complex(n: usize, bounds: &Bounds) -> Result<CellComplex> {
    bounds.check("order complex construction", n, bounds.complexes)?;
    let elements = height_sorted(n, bounds)?;
    let chain_id = |chain: &[usize]| -> String {
        chain
            .iter()
            .map(|&i| elements[i].to_string())
            .collect::<Vec<_>>()
            .join(" < ")
    };
    let mut by_dim: Vec<Vec<Cell>> = Vec::new();
    for chain in all_chains(&elements) {
        let dim = chain.len() - 1;
        while by_dim.len() <= dim {
            by_dim.push(Vec::new());
        }
        let parts: Vec<&Partition> = chain.iter().map(|&i| &elements[i]).collect();
        let facets = if dim == 0 {
            Vec::new()
        } else {
            (0..chain.len())
                .map(|skip| {
                    let sub: Vec<usize> = chain
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| *pos != skip)
                        .map(|(_, &i)| i)
                        .collect();
                    chain_id(&sub)
                })
                .collect()
        };
        by_dim[dim].push(Cell {
            id: chain_id(&chain),
            labels: quotient_labels(&parts),
            facets,
        });
    }
    Ok(CellComplex::new(by_dim))
}

/// The one-vertex quotient complex: a k-cell per k-element chain avoiding
/// the bottom, anchored at the bottom implicitly.  Its id is its label
/// sequence, which determines the chain.
pub fn bk_complex(n: usize, bounds: &Bounds) -> Result<CellComplex> {
    bounds.check("quotient complex construction", n, bounds.complexes)?;
    let elements = height_sorted(n, bounds)?;
    let upper: Vec<Partition> = elements.into_iter().filter(|p| p.height() > 0).collect();

    let id_of = |labels: &[Permutation]| -> String {
        if labels.is_empty() {
            "*".to_string()
        } else {
            labels
                .iter()
                .map(Permutation::to_string)
                .collect::<Vec<_>>()
                .join("|")
        }
    };

    let mut by_dim: Vec<Vec<Cell>> = vec![vec![Cell {
        id: "*".into(),
        labels: Vec::new(),
        facets: Vec::new(),
    }]];

    if n == 1 {
        return Ok(CellComplex::new(by_dim));
    }

    let bottom = Partition::discrete(n)?;
    for chain in all_chains(&upper) {
        let dim = chain.len();
        while by_dim.len() <= dim {
            by_dim.push(Vec::new());
        }
        // Anchor at the bottom: the first label is perm(first element).
        let mut parts: Vec<&Partition> = Vec::with_capacity(chain.len() + 1);
        parts.push(&bottom);
        parts.extend(chain.iter().map(|&i| &upper[i]));
        let labels = quotient_labels(&parts);
        debug_assert!(validate_label_sequence(&labels, n).is_ok());

        // Facets delete one chain element (or the anchor); deleting the
        // anchor re-anchors the rest, which drops the first label.
        let mut facets = Vec::with_capacity(dim + 1);
        facets.push(id_of(&labels[1..]));
        for i in 0..dim {
            let mut sub: Vec<Permutation> = Vec::with_capacity(dim - 1);
            sub.extend_from_slice(&labels[..i]);
            if i + 1 < dim {
                sub.push(labels[i].then(&labels[i + 1]).expect("same n"));
                sub.extend_from_slice(&labels[i + 2..]);
            }
            facets.push(id_of(&sub));
        }

        by_dim[dim].push(Cell {
            id: id_of(&labels),
            labels,
            facets,
        });
    }
    Ok(CellComplex::new(by_dim))
}
