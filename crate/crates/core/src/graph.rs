//! Digraphs and graphs with loops, and the graph families used throughout the
//! crate: oriented odd cycles, looped stars and oriented crowns.
//!
//! Vertices are always named `1..=vertex_count`. For labeled constructions the
//! name of a vertex is its label, so no separate name/label map is kept.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{invalid, Error, Result};

/// Orientation of a strongly oriented cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn reversed(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+"),
            Sign::Minus => f.write_str("-"),
        }
    }
}

/// A directed graph on `1..=vertex_count`. Loops are allowed, parallel arcs are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return invalid("a digraph needs at least one vertex");
        }
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(u, v) in &arcs {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return invalid(format!(
                    "arc ({u},{v}) has an endpoint outside 1..={vertex_count}"
                ));
            }
            if !seen.insert((u, v)) {
                return invalid(format!("arc ({u},{v}) appears twice"));
            }
        }
        Ok(Digraph { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count + 1];
        for &(_, v) in &self.arcs {
            deg[v] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count + 1];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    /// Every vertex has in- and out-degree exactly one.
    pub fn is_one_regular(&self) -> bool {
        let ins = self.in_degrees();
        let outs = self.out_degrees();
        (1..=self.vertex_count).all(|v| ins[v] == 1 && outs[v] == 1)
    }

    /// Lengths of the cycles of a 1-regular digraph, sorted ascending.
    /// Returns `None` when the digraph is not 1-regular.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        if !self.is_one_regular() {
            return None;
        }
        let mut succ = vec![0; self.vertex_count + 1];
        for &(u, v) in &self.arcs {
            succ[u] = v;
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut lengths = Vec::new();
        for start in 1..=self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = succ[v];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        Some(lengths)
    }

    /// Strong connectivity via forward and backward reachability from vertex 1.
    pub fn is_strongly_connected(&self) -> bool {
        let mut fwd = vec![Vec::new(); self.vertex_count + 1];
        let mut bwd = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in &self.arcs {
            fwd[u].push(v);
            bwd[v].push(u);
        }
        reach_all(&fwd, self.vertex_count) && reach_all(&bwd, self.vertex_count)
    }

    /// The same digraph with every arc reversed.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Forgets orientation. A loop arc becomes a loop edge and a pair of
    /// opposite arcs collapses into a single edge.
    pub fn underlying(&self) -> Graph {
        let mut seen = HashSet::with_capacity(self.arcs.len());
        let mut edges = Vec::with_capacity(self.arcs.len());
        for &(u, v) in &self.arcs {
            let e = normalize(u, v);
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }
}

fn reach_all(adj: &[Vec<usize>], n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected graph on `1..=vertex_count` whose edges are unordered pairs,
/// loops allowed. A loop contributes 2 to the degree of its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are stored normalized as `(min, max)` in the given order.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return invalid("a graph needs at least one vertex");
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return invalid(format!(
                    "edge {{{u},{v}}} has an endpoint outside 1..={vertex_count}"
                ));
            }
            let e = normalize(u, v);
            if !seen.insert(e) {
                return invalid(format!("edge {{{u},{v}}} appears twice"));
            }
            normalized.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
        })
    }

    /// The order `p`.
    pub fn order(&self) -> usize {
        self.vertex_count
    }

    /// The size `q`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = normalize(u, v);
        self.edges.iter().position(|&x| x == e)
    }

    /// Normalized edge to its index.
    pub fn edge_lookup(&self) -> HashMap<(usize, usize), usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect()
    }

    /// Degrees indexed by vertex (index 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count + 1];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Neighbor lists indexed by vertex; a loop lists the vertex once.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    /// Same edge set, compared as sets.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self.edges.iter().collect::<BTreeSet<_>>()
                == other.edges.iter().collect::<BTreeSet<_>>()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut comps = Vec::new();
        for s in 1..=self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// A single cycle through every vertex (order at least 3).
    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.size() == self.vertex_count
            && self.edges.iter().all(|&(u, v)| u != v)
            && self.degrees()[1..].iter().all(|&d| d == 2)
            && self.components().len() == 1
    }

    /// Vertices of a cycle in walking order, starting at vertex 1 and moving
    /// to its smaller neighbor first.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if !self.is_cycle() {
            return None;
        }
        let adj = self.adjacency();
        walk_cycle(&adj, 1, self.vertex_count)
    }
}

/// Walks a 2-regular connected vertex set starting at `start`.
fn walk_cycle(adj: &[Vec<usize>], start: usize, len: usize) -> Option<Vec<usize>> {
    let mut order = Vec::with_capacity(len);
    let mut prev = 0;
    let mut cur = start;
    for _ in 0..len {
        order.push(cur);
        let mut nbrs: Vec<usize> = adj[cur].iter().copied().filter(|&v| v != prev).collect();
        nbrs.sort_unstable();
        let next = *nbrs.first()?;
        prev = cur;
        cur = next;
    }
    (cur == start).then_some(order)
}

/// Parameters of the crown `C_m ⊙ K̄_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrownSpec {
    pub m: usize,
    pub n: usize,
}

impl CrownSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 {
            return invalid(format!("crown cycle length must be at least 3, got {m}"));
        }
        if n < 1 {
            return invalid("crown needs at least one leaf per core vertex");
        }
        Ok(CrownSpec { m, n })
    }

    /// Order, which equals the size: `m(n+1)`.
    pub fn order(&self) -> usize {
        self.m * (self.n + 1)
    }
}

fn require_odd_cycle(m: usize) -> Result<()> {
    if m < 3 || m % 2 == 0 {
        return invalid(format!("cycle length must be odd and at least 3, got {m}"));
    }
    Ok(())
}

/// The strong orientation of the canonically labeled odd cycle: arcs `(a,b)` with
/// `b - a ≡ (m+1)/2 (mod m)` for [`Sign::Plus`] and `(m-1)/2` for [`Sign::Minus`].
/// Vertex names are the canonical labels.
pub fn directed_cycle(m: usize, sign: Sign) -> Result<Digraph> {
    require_odd_cycle(m)?;
    let step = match sign {
        Sign::Plus => (m + 1) / 2,
        Sign::Minus => (m - 1) / 2,
    };
    let mut arcs = Vec::with_capacity(m);
    let mut a = 1;
    for _ in 0..m {
        let b = (a - 1 + step) % m + 1;
        arcs.push((a, b));
        a = b;
    }
    Digraph::new(m, arcs)
}

/// `K_{1,n}` with a loop at the center, center = vertex 1, leaves `2..=n+1`,
/// every leaf entered by an arc from the center.
pub fn star_loop(n: usize) -> Result<Digraph> {
    if n < 1 {
        return invalid("a looped star needs at least one leaf");
    }
    let mut arcs = vec![(1, 1)];
    arcs.extend((2..=n + 1).map(|leaf| (1, leaf)));
    Digraph::new(n + 1, arcs)
}

/// Oriented crown: core `1..=m` oriented `i → i+1` (reversed for
/// [`Sign::Minus`]), and core vertex `i` sends an arc to each of its leaves
/// `m + (i-1)n + 1 ..= m + i n`.
pub fn build_crown(spec: CrownSpec, sign: Sign) -> Result<Digraph> {
    let CrownSpec { m, n } = CrownSpec::new(spec.m, spec.n)?;
    let mut arcs = Vec::with_capacity(spec.order());
    for i in 1..=m {
        let j = i % m + 1;
        arcs.push(match sign {
            Sign::Plus => (i, j),
            Sign::Minus => (j, i),
        });
    }
    for i in 1..=m {
        for j in 1..=n {
            arcs.push((i, m + (i - 1) * n + j));
        }
    }
    Digraph::new(m * (n + 1), arcs)
}

/// Decomposition of a graph of the form `H ⊙ K̄_n` with `H` 2-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrownShape {
    /// Core vertices, ascending.
    pub core: Vec<usize>,
    /// `leaves[i]` are the pendant vertices of `core[i]`, ascending.
    pub leaves: Vec<Vec<usize>>,
    pub n: usize,
    /// `H` is a single cycle of length at least 3.
    pub single_cycle: bool,
    /// Sizes of the components of `H`, ascending.
    pub cycle_lengths: Vec<usize>,
    /// `H` with `core[i]` renamed `i + 1`.
    pub core_graph: Graph,
}

impl CrownShape {
    /// Core vertices in cycle order starting from the smallest one, when `H`
    /// is a single cycle.
    pub fn core_cycle_order(&self) -> Option<Vec<usize>> {
        let order = self.core_graph.cycle_order()?;
        Some(order.into_iter().map(|i| self.core[i - 1]).collect())
    }

    pub fn leaves_of(&self, core_vertex: usize) -> Option<&[usize]> {
        let i = self.core.binary_search(&core_vertex).ok()?;
        Some(&self.leaves[i])
    }
}

/// Recognizes `H ⊙ K̄_n` for a 2-regular `H` (loops count as 1-cycles).
pub fn crown_shape(g: &Graph) -> Result<CrownShape> {
    let not = |msg: String| Err(Error::NotACrownShape(msg));
    let deg = g.degrees();
    let p = g.order();
    let is_leaf: Vec<bool> = (0..=p).map(|v| v > 0 && deg[v] == 1).collect();
    let core: Vec<usize> = (1..=p).filter(|&v| !is_leaf[v]).collect();
    if core.is_empty() {
        return not("no core vertices".into());
    }
    let mut index = vec![usize::MAX; p + 1];
    for (i, &v) in core.iter().enumerate() {
        index[v] = i;
    }
    let mut leaves = vec![Vec::new(); core.len()];
    let mut core_edges = Vec::new();
    for &(u, v) in g.edges() {
        match (is_leaf[u], is_leaf[v]) {
            (true, true) => return not(format!("edge {{{u},{v}}} joins two leaves")),
            (true, false) => leaves[index[v]].push(u),
            (false, true) => leaves[index[u]].push(v),
            (false, false) => core_edges.push((index[u] + 1, index[v] + 1)),
        }
    }
    let n = leaves[0].len();
    if n == 0 {
        return not("core vertices carry no pendant leaves".into());
    }
    if let Some((i, l)) = leaves.iter().enumerate().find(|(_, l)| l.len() != n) {
        return not(format!(
            "uneven leaf counts: vertex {} has {} leaves, vertex {} has {}",
            core[0],
            n,
            core[i],
            l.len()
        ));
    }
    for l in &mut leaves {
        l.sort_unstable();
    }
    let core_graph = Graph::new(core.len(), core_edges)?;
    if let Some(v) = core_graph.degrees()[1..].iter().position(|&d| d != 2) {
        return not(format!(
            "core vertex {} does not have core degree 2",
            core[v]
        ));
    }
    let comps = core_graph.components();
    let mut cycle_lengths: Vec<usize> = comps.iter().map(Vec::len).collect();
    cycle_lengths.sort_unstable();
    let single_cycle = comps.len() == 1 && core.len() >= 3;
    Ok(CrownShape {
        core,
        leaves,
        n,
        single_cycle,
        cycle_lengths,
        core_graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_cycle_five_plus() {
        let d = directed_cycle(5, Sign::Plus).unwrap();
        let arcs: BTreeSet<_> = d.arcs().iter().copied().collect();
        let expected: BTreeSet<_> = [(1, 4), (4, 2), (2, 5), (5, 3), (3, 1)]
            .into_iter()
            .collect();
        assert_eq!(arcs, expected);
    }

    #[test]
    fn directed_cycle_minus_reverses_plus() {
        for m in (3..30).step_by(2) {
            let plus = directed_cycle(m, Sign::Plus).unwrap();
            let minus = directed_cycle(m, Sign::Minus).unwrap();
            let rev: BTreeSet<_> = plus.reversed().arcs().iter().copied().collect();
            let got: BTreeSet<_> = minus.arcs().iter().copied().collect();
            assert_eq!(rev, got);
            assert!(plus.is_one_regular() && plus.is_strongly_connected());
            assert!(minus.is_one_regular() && minus.is_strongly_connected());
        }
    }

    #[test]
    fn directed_cycle_matches_congruence_enumeration() {
        for m in (3..20).step_by(2) {
            let d = directed_cycle(m, Sign::Plus).unwrap();
            let mut brute = BTreeSet::new();
            for a in 1..=m {
                for b in 1..=m {
                    if (b + m - a) % m == (m + 1) / 2 {
                        brute.insert((a, b));
                    }
                }
            }
            assert_eq!(d.arcs().iter().copied().collect::<BTreeSet<_>>(), brute);
        }
    }

    #[test]
    fn directed_cycle_rejects_even_or_small() {
        assert!(directed_cycle(4, Sign::Plus).is_err());
        assert!(directed_cycle(1, Sign::Minus).is_err());
    }

    #[test]
    fn star_loop_shapes() {
        let s1 = star_loop(1).unwrap();
        assert_eq!(s1.vertex_count(), 2);
        assert_eq!(s1.arcs(), &[(1, 1), (1, 2)]);
        let s3 = star_loop(3).unwrap();
        assert_eq!(s3.vertex_count(), 4);
        assert_eq!(s3.arc_count(), 4);
        let ins = s3.in_degrees();
        assert!((2..=4).all(|v| ins[v] == 1));
        assert!(star_loop(0).is_err());
    }

    #[test]
    fn crown_counts_and_degrees() {
        let d = build_crown(CrownSpec::new(3, 1).unwrap(), Sign::Plus).unwrap();
        assert_eq!((d.vertex_count(), d.arc_count()), (6, 6));
        let big = build_crown(CrownSpec::new(15, 2).unwrap(), Sign::Plus).unwrap();
        assert_eq!((big.vertex_count(), big.arc_count()), (45, 45));
        let g = build_crown(CrownSpec::new(5, 1).unwrap(), Sign::Plus)
            .unwrap()
            .underlying();
        let mut degs = g.degrees()[1..].to_vec();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn crown_core_is_strongly_connected() {
        let d = build_crown(CrownSpec::new(3, 1).unwrap(), Sign::Minus).unwrap();
        let core = Digraph::new(3, d.arcs()[..3].to_vec()).unwrap();
        assert!(core.is_strongly_connected());
    }

    #[test]
    fn underlying_collapses_opposite_arcs_and_keeps_loops() {
        let d = Digraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(d.underlying().edges(), &[(1, 2)]);
        let s = star_loop(3).unwrap().underlying();
        assert_eq!(s.edges(), &[(1, 1), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(s.degree(1), 5);
        assert!(directed_cycle(5, Sign::Plus)
            .unwrap()
            .underlying()
            .is_cycle());
    }

    #[test]
    fn degree_sum_counts_loops_twice() {
        let g = Graph::new(3, vec![(1, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn rejects_parallel_and_out_of_range() {
        assert!(Digraph::new(2, vec![(1, 2), (1, 2)]).is_err());
        assert!(Digraph::new(2, vec![(1, 3)]).is_err());
        assert!(Graph::new(2, vec![(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn crown_shape_round_trip() {
        let g = build_crown(CrownSpec::new(15, 1).unwrap(), Sign::Plus)
            .unwrap()
            .underlying();
        let shape = crown_shape(&g).unwrap();
        assert_eq!(shape.core.len(), 15);
        assert_eq!(shape.n, 1);
        assert!(shape.single_cycle);
        assert_eq!(shape.core_cycle_order().unwrap().len(), 15);
    }

    #[test]
    fn crown_shape_rejects_uneven_pendants() {
        let mut edges: Vec<_> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
        edges.push((1, 6));
        let g = Graph::new(6, edges).unwrap();
        assert!(matches!(crown_shape(&g), Err(Error::NotACrownShape(_))));
    }

    #[test]
    fn crown_shape_two_disjoint_cycles() {
        let mut edges = Vec::new();
        for base in [0, 5] {
            for i in 0..5 {
                edges.push((base + i + 1, base + (i + 1) % 5 + 1));
            }
        }
        for v in 1..=10 {
            edges.push((v, 10 + v));
        }
        let g = Graph::new(20, edges).unwrap();
        let shape = crown_shape(&g).unwrap();
        assert!(!shape.single_cycle);
        assert_eq!(shape.cycle_lengths, vec![5, 5]);
        assert!(shape.core_cycle_order().is_none());
    }
}
