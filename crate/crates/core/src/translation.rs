//! Row translation of the adjacency matrix of a labeled oriented crown.
//!
//! The crown `K_{1,n}^l ⊗ g(C_m)^±` with the star center labeled 1 has its
//! vertices named by labels `1..=m(n+1)`; only the first `m` rows of its
//! adjacency matrix are nonzero. Shifting every row down by `r-1` moves each
//! arc `(a,b)` to `(a+r-1, b)`: arc sums all grow by `r-1`, so the result is
//! again super edge-magic, now on `H ⊙ K̄_n` where `H` is the 1-regular core
//! induced by `{r, …, r-1+m}`.
//!
//! [`translated_labeling`] shifts arcs directly; [`BlockMatrix`] keeps the
//! literal matrix form for cross-checking.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::graph::{crown_shape, Digraph, Graph, Sign};
use crate::labeling::{extend_sem, TotalLabeling, VertexLabeling};
use crate::product::{induced_product_labeling, ArcAssignment, FamilyMember, LabeledDigraph};

/// Dense 0/1 adjacency matrix of a (translated) labeled crown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    m: usize,
    n: usize,
    sign: Sign,
    shift: usize,
    order: usize,
    entries: Vec<u8>,
}

impl BlockMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The translation index `r` this matrix corresponds to.
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[(i - 1) * self.order + (j - 1)]
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (1..=self.order).map(|j| self.get(i, j) as usize).sum()
    }

    pub fn ones(&self) -> usize {
        self.entries.iter().map(|&e| e as usize).sum()
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut arcs = Vec::with_capacity(self.ones());
        for i in 1..=self.order {
            for j in 1..=self.order {
                if self.get(i, j) == 1 {
                    arcs.push((i, j));
                }
            }
        }
        Digraph::new(self.order, arcs).expect("matrix entries are in range")
    }
}

fn check_cycle_member(g: &FamilyMember) -> Result<usize> {
    let m = g.order();
    if m < 3 || m % 2 == 0 {
        return invalid(format!("translation needs an odd cycle, got order {m}"));
    }
    if !g.digraph().is_one_regular() || !g.digraph().underlying().is_cycle() {
        return invalid("translation needs a labeled oriented cycle");
    }
    Ok(m)
}

/// The labeled oriented crown `K_{1,n}^l ⊗ g^sign` with the star center labeled 1.
pub fn base_crown(g: &FamilyMember, n: usize, sign: Sign) -> Result<LabeledDigraph> {
    check_cycle_member(g)?;
    let star = FamilyMember::star_loop(n, 1)?.as_labeled();
    let h = ArcAssignment::constant(g.oriented(sign), star.digraph().arc_count());
    induced_product_labeling(&star, &h)
}

/// Adjacency matrix of [`base_crown`].
pub fn base_matrix(g: &FamilyMember, n: usize, sign: Sign) -> Result<BlockMatrix> {
    let crown = base_crown(g, n, sign)?;
    let order = crown.digraph().vertex_count();
    let mut entries = vec![0; order * order];
    for &(a, b) in crown.digraph().arcs() {
        entries[(a - 1) * order + (b - 1)] = 1;
    }
    Ok(BlockMatrix {
        m: g.order(),
        n,
        sign,
        shift: 1,
        order,
        entries,
    })
}

/// Entry `(i,j)` of the result is entry `(i-r+1, j)` of `matrix` for `i ≥ r`, else 0.
pub fn translate(matrix: &BlockMatrix, r: usize) -> Result<BlockMatrix> {
    let top = matrix.m * matrix.n + 1;
    let total = matrix.shift + r - 1;
    if r < 1 || total > top {
        return invalid(format!("translation index {r} leaves 1..={top}"));
    }
    let order = matrix.order;
    let mut entries = vec![0; order * order];
    for i in r..=order {
        for j in 1..=order {
            entries[(i - 1) * order + (j - 1)] = matrix.get(i - r + 1, j);
        }
    }
    Ok(BlockMatrix {
        shift: total,
        entries,
        ..matrix.clone()
    })
}

/// A translated super edge-magic labeling of `H ⊙ K̄_n`.
#[derive(Debug, Clone)]
pub struct TranslationResult {
    pub labeling: TotalLabeling,
    pub digraph: Digraph,
    /// `H`, with core vertex `r + i - 1` renamed `i`.
    pub core_graph: Graph,
    pub r: usize,
    pub sign: Sign,
    pub single_cycle: bool,
    /// Component sizes of `H`, ascending.
    pub cycle_lengths: Vec<usize>,
}

/// Shifts every arc of the base crown `(a,b) ↦ (a+r-1, b)` and labels the
/// result by vertex names. Valence is `val(g_1) + r - 1`.
pub fn translated_labeling(
    g: &FamilyMember,
    n: usize,
    sign: Sign,
    r: usize,
) -> Result<TranslationResult> {
    let m = check_cycle_member(g)?;
    if r < 1 || r > m * n + 1 {
        return invalid(format!("translation index {r} outside 1..={}", m * n + 1));
    }
    let base = base_crown(g, n, sign)?;
    let t = r - 1;
    let arcs: Vec<(usize, usize)> = base
        .digraph()
        .arcs()
        .iter()
        .map(|&(a, b)| (a + t, b))
        .collect();
    let digraph = Digraph::new(base.digraph().vertex_count(), arcs)?;
    let und = digraph.underlying();
    if und.size() != digraph.arc_count() {
        return Err(Error::Construction(format!(
            "core at r = {r} contains a 2-cycle"
        )));
    }
    let labeling = extend_sem(&VertexLabeling::identity(und))?;
    let expected = base.labeling().valence() + t;
    if labeling.valence() != expected {
        return Err(Error::Construction(format!(
            "translated valence {} differs from {expected}",
            labeling.valence()
        )));
    }
    let shape = crown_shape(labeling.graph())?;
    let core: BTreeSet<usize> = (r..r + m).collect();
    if shape.core.iter().copied().collect::<BTreeSet<_>>() != core || shape.n != n {
        return Err(Error::Construction(format!(
            "core of the translated crown is not {{{r},…,{}}}",
            r + m - 1
        )));
    }
    Ok(TranslationResult {
        labeling,
        digraph,
        core_graph: shape.core_graph,
        r,
        sign,
        single_cycle: shape.single_cycle,
        cycle_lengths: shape.cycle_lengths,
    })
}

/// Step of the circulant core for the canonical labeling:
/// `(m±1)/2 - (r-1) mod m`.
pub fn canonical_core_step(m: usize, sign: Sign, r: usize) -> usize {
    let half = match sign {
        Sign::Plus => (m + 1) / 2,
        Sign::Minus => (m - 1) / 2,
    };
    ((half as i64 - (r as i64 - 1)).rem_euclid(m as i64)) as usize
}
