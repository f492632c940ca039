//! Total labelings, the (super) edge-magic check, and the standard transforms:
//! consecutive-sum extension, the canonical odd-cycle labeling, the two
//! complements, odd/even doubling and the looped-star labelings.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    EdgeMagic,
    SuperEdgeMagic,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::EdgeMagic => "edge-magic",
            Kind::SuperEdgeMagic => "super-edge-magic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Unchecked labels: `vertices[v - 1]` is the label of vertex `v`, `edges[i]`
/// the label of `graph.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawLabels {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A bijection from the vertices of a graph onto `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    graph: Graph,
    labels: Vec<usize>,
}

impl VertexLabeling {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<Self> {
        let p = graph.order();
        if labels.len() != p {
            return invalid(format!("expected {p} vertex labels, got {}", labels.len()));
        }
        let mut seen = vec![false; p + 1];
        for (i, &l) in labels.iter().enumerate() {
            if l == 0 || l > p || seen[l] {
                return Err(Error::NotBijective {
                    expected_max: p,
                    detail: format!("vertex {} has label {l}", i + 1),
                });
            }
            seen[l] = true;
        }
        Ok(VertexLabeling { graph, labels })
    }

    /// Every vertex labeled by its own name.
    pub fn identity(graph: Graph) -> Self {
        let labels = (1..=graph.order()).collect();
        VertexLabeling { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    /// Label sums over the edges, in edge order; a loop contributes `2g(u)`.
    pub fn edge_sums(&self) -> Vec<usize> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| self.label(u) + self.label(v))
            .collect()
    }
}

/// A validated (super) edge-magic total labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    graph: Graph,
    vertex_labels: Vec<usize>,
    edge_labels: Vec<usize>,
    kind: Kind,
    valence: usize,
}

impl TotalLabeling {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_labels(&self) -> &[usize] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[usize] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: usize) -> usize {
        self.vertex_labels[v - 1]
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn valence(&self) -> usize {
        self.valence
    }

    pub fn is_super(&self) -> bool {
        self.kind == Kind::SuperEdgeMagic
    }

    /// `(p, q)`.
    pub fn order_size(&self) -> (usize, usize) {
        (self.graph.order(), self.graph.size())
    }

    pub fn raw(&self) -> RawLabels {
        RawLabels {
            vertices: self.vertex_labels.clone(),
            edges: self.edge_labels.clone(),
        }
    }

    /// The vertex part of a super edge-magic labeling.
    pub fn vertex_labeling(&self) -> Result<VertexLabeling> {
        VertexLabeling::new(self.graph.clone(), self.vertex_labels.clone())
    }
}

fn describe_edge((u, v): (usize, usize)) -> String {
    format!("edge {{{u},{v}}}")
}

/// Checks bijectivity onto `1..=p+q` and constant edge sums, and classifies the
/// labeling. A loop at `x` sums to `2f(x) + f(xx)`.
pub fn verify(graph: &Graph, candidate: &RawLabels) -> Result<TotalLabeling> {
    let (p, q) = (graph.order(), graph.size());
    if q == 0 {
        return invalid("graph has no edges");
    }
    if candidate.vertices.len() != p || candidate.edges.len() != q {
        return invalid(format!(
            "expected {p} vertex and {q} edge labels, got {} and {}",
            candidate.vertices.len(),
            candidate.edges.len()
        ));
    }
    let total = p + q;
    let mut owner: Vec<Option<String>> = vec![None; total + 1];
    let items = candidate
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, format!("vertex {}", i + 1)))
        .chain(
            candidate
                .edges
                .iter()
                .zip(graph.edges())
                .map(|(&l, &e)| (l, describe_edge(e))),
        );
    for (label, who) in items {
        if label == 0 || label > total {
            return Err(Error::NotBijective {
                expected_max: total,
                detail: format!("{who} has label {label}"),
            });
        }
        if let Some(prev) = &owner[label] {
            return Err(Error::NotBijective {
                expected_max: total,
                detail: format!("label {label} is used by {prev} and {who}"),
            });
        }
        owner[label] = Some(who);
    }

    let sum = |i: usize| {
        let (u, v) = graph.edges()[i];
        candidate.vertices[u - 1] + candidate.edges[i] + candidate.vertices[v - 1]
    };
    let valence = sum(0);
    if let Some(i) = (1..q).find(|&i| sum(i) != valence) {
        return Err(Error::NonConstantValence {
            first: graph.edges()[0],
            first_sum: valence,
            second: graph.edges()[i],
            second_sum: sum(i),
        });
    }
    let kind = if candidate.vertices.iter().all(|&l| l <= p) {
        Kind::SuperEdgeMagic
    } else {
        Kind::EdgeMagic
    };
    Ok(TotalLabeling {
        graph: graph.clone(),
        vertex_labels: candidate.vertices.clone(),
        edge_labels: candidate.edges.clone(),
        kind,
        valence,
    })
}

/// Checks that `sums` are `len` distinct consecutive integers, returning the minimum.
pub(crate) fn consecutive_min(sums: &[usize]) -> Result<usize> {
    let mut sorted = sums.to_vec();
    sorted.sort_unstable();
    let fail = |detail: String| {
        Err(Error::NotConsecutiveSums {
            sums: sorted.clone(),
            detail,
        })
    };
    let Some(&min) = sorted.first() else {
        return fail("no edges".into());
    };
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return fail(format!("sum {} occurs twice", w[0]));
        }
        if w[1] != w[0] + 1 {
            return fail(format!("gap between {} and {}", w[0], w[1]));
        }
    }
    Ok(min)
}

/// Extends a vertex labeling with consecutive edge sums to a super edge-magic
/// labeling of valence `p + q + min S`; the edge with sum `s` gets `valence - s`.
pub fn extend_sem(g: &VertexLabeling) -> Result<TotalLabeling> {
    let sums = g.edge_sums();
    let min = consecutive_min(&sums)?;
    let (p, q) = (g.graph.order(), g.graph.size());
    let valence = p + q + min;
    let raw = RawLabels {
        vertices: g.labels.clone(),
        edges: sums.iter().map(|s| valence - s).collect(),
    };
    let f = verify(&g.graph, &raw)?;
    debug_assert!(f.is_super());
    Ok(f)
}

/// The cycle `v_1 v_2 … v_m v_1` with edges listed as `v_i v_{i+1}` then `v_m v_1`.
pub fn cycle_graph(m: usize) -> Result<Graph> {
    if m < 3 {
        return invalid(format!("cycle length must be at least 3, got {m}"));
    }
    Graph::new(m, (1..=m).map(|i| (i, i % m + 1)).collect())
}

/// Canonical labeling of an odd cycle: `(i+1)/2` for odd `i`, `(i+1+m)/2` for even `i`.
pub fn canonical_cycle(m: usize) -> Result<VertexLabeling> {
    if m < 3 || m % 2 == 0 {
        return invalid(format!(
            "canonical labeling needs an odd cycle, got length {m}"
        ));
    }
    let labels = (1..=m)
        .map(|i| {
            if i % 2 == 1 {
                (i + 1) / 2
            } else {
                (i + 1 + m) / 2
            }
        })
        .collect();
    VertexLabeling::new(cycle_graph(m)?, labels)
}

/// `x ↦ p + q + 1 - f(x)` on every element; valence becomes `3(p+q+1) - val(f)`.
pub fn em_complement(f: &TotalLabeling) -> TotalLabeling {
    let (p, q) = f.order_size();
    let top = p + q + 1;
    let raw = RawLabels {
        vertices: f.vertex_labels.iter().map(|&l| top - l).collect(),
        edges: f.edge_labels.iter().map(|&l| top - l).collect(),
    };
    verify(&f.graph, &raw).expect("complement of an edge-magic labeling is edge-magic")
}

/// Vertex labels `x ↦ p + 1 - f(x)` with edges re-derived; valence becomes
/// `4p + q + 3 - val(f)`.
pub fn sem_complement(f: &TotalLabeling) -> Result<TotalLabeling> {
    if !f.is_super() {
        return invalid("super edge-magic complement needs a super edge-magic labeling");
    }
    let p = f.graph.order();
    let labels = f.vertex_labels.iter().map(|&l| p + 1 - l).collect();
    extend_sem(&VertexLabeling::new(f.graph.clone(), labels)?)
}

/// Odd (`2f(x) - 1`) or even (`2f(x)`) doubling of a super edge-magic labeling
/// of a graph with equal order and size.
pub fn odd_even(f: &TotalLabeling, parity: Parity) -> Result<TotalLabeling> {
    if !f.is_super() {
        return invalid("odd/even labelings need a super edge-magic labeling");
    }
    let (p, q) = f.order_size();
    if p != q {
        return invalid(format!(
            "odd/even labelings need order = size, got {p} and {q}"
        ));
    }
    let (shift, target) = match parity {
        Parity::Odd => (1, 2 * f.valence - 2 * p - 2),
        Parity::Even => (0, 2 * f.valence - 2 * p - 1),
    };
    let vertices: Vec<usize> = f.vertex_labels.iter().map(|&l| 2 * l - shift).collect();
    let edges = f
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let s = vertices[u - 1] + vertices[v - 1];
            target.checked_sub(s).ok_or_else(|| {
                Error::Construction(format!("negative edge label at {}", describe_edge((u, v))))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    verify(&f.graph, &RawLabels { vertices, edges })
}

/// Graph of `K_{1,n}` plus a loop whose center is vertex `r`; the loop is
/// listed first, then the center–leaf edges by ascending leaf.
pub fn star_loop_graph(n: usize, r: usize) -> Result<Graph> {
    if n < 1 {
        return invalid("a looped star needs at least one leaf");
    }
    if r < 1 || r > n + 1 {
        return invalid(format!("center label {r} outside 1..={}", n + 1));
    }
    let mut edges = vec![(r, r)];
    edges.extend((1..=n + 1).filter(|&v| v != r).map(|v| (r, v)));
    Graph::new(n + 1, edges)
}

/// The super edge-magic labeling of `K_{1,n}^l` with center label `r` and the
/// leaves labeled in ascending order; valence `r + 2n + 3`.
pub fn star_loop_labeling(n: usize, r: usize) -> Result<TotalLabeling> {
    extend_sem(&VertexLabeling::identity(star_loop_graph(n, r)?))
}
