//! Exhaustive valence spectra of small graphs by backtracking.
//!
//! Vertices are labeled in breadth-first order; an edge is checked as soon as
//! both ends carry labels. For edge-magic search the edge labels are forced by
//! the target valence, so only vertex assignments are enumerated. Labels are
//! tried in ascending order, making the first witness per valence the
//! lexicographically smallest one.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::coverage::{em_interval, Mode};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::labeling::{extend_sem, verify, RawLabels, TotalLabeling, VertexLabeling};

/// Ceiling on the number of candidate assignments a search may face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub limit: u128,
}

impl Guard {
    /// `10!` vertex bijections.
    pub const SEM_DEFAULT: Guard = Guard { limit: 3_628_800 };
    pub const EM_DEFAULT: Guard = Guard {
        limit: 1_000_000_000,
    };

    pub fn new(limit: u128) -> Guard {
        Guard { limit }
    }

    pub fn unlimited() -> Guard {
        Guard { limit: u128::MAX }
    }

    pub fn default_for(mode: Mode) -> Guard {
        match mode {
            Mode::Sem => Guard::SEM_DEFAULT,
            Mode::Em => Guard::EM_DEFAULT,
        }
    }

    fn check(&self, estimated: u128) -> Result<()> {
        if estimated > self.limit {
            return Err(Error::GuardExceeded {
                estimated,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// `a · (a-1) ⋯ (b+1)`, saturating.
fn falling(a: usize, b: usize) -> u128 {
    (b + 1..=a).fold(1u128, |acc, i| acc.saturating_mul(i as u128))
}

/// Vertex assignments per valence: `p!` for super edge-magic search,
/// `(p+q)!/q!` for edge-magic search.
pub fn search_space(g: &Graph, mode: Mode) -> u128 {
    let (p, q) = (g.order(), g.size());
    match mode {
        Mode::Sem => falling(p, 0),
        Mode::Em => falling(p + q, q),
    }
}

/// Result of an exhaustive spectrum computation.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub graph: Graph,
    pub mode: Mode,
    /// Valences admitting a labeling, ascending.
    pub spectrum: Vec<usize>,
    pub witnesses: BTreeMap<usize, TotalLabeling>,
    /// Candidate vertex assignments per valence, see [`search_space`].
    pub search_space_size: u128,
    pub exhaustive: bool,
}

struct Plan {
    /// Vertices in search order.
    order: Vec<usize>,
    /// `closing[i]`: edges whose later endpoint in `order` is `order[i]`.
    closing: Vec<Vec<(usize, usize)>>,
}

fn plan(g: &Graph) -> Plan {
    let p = g.order();
    let adj = g.adjacency();
    let mut pos = vec![usize::MAX; p + 1];
    let mut order = Vec::with_capacity(p);
    for start in 1..=p {
        if pos[start] != usize::MAX {
            continue;
        }
        pos[start] = order.len();
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &adj[v] {
                if pos[w] == usize::MAX {
                    pos[w] = order.len();
                    order.push(w);
                }
            }
        }
    }
    let mut closing = vec![Vec::new(); p];
    for &(u, v) in g.edges() {
        closing[pos[u].max(pos[v])].push((u, v));
    }
    Plan { order, closing }
}

struct SemSearch<'a> {
    plan: &'a Plan,
    q: usize,
    labels: Vec<usize>,
    used: Vec<bool>,
    sum_used: Vec<bool>,
    sums: Vec<usize>,
    found: BTreeMap<usize, Vec<usize>>,
}

impl SemSearch<'_> {
    fn window_ok(&self) -> bool {
        match (self.sums.iter().min(), self.sums.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo < self.q,
            _ => true,
        }
    }

    fn place(&mut self, depth: usize) -> bool {
        let mut added = 0;
        let mut ok = true;
        for &(u, v) in &self.plan.closing[depth] {
            let s = self.labels[u] + self.labels[v];
            if self.sum_used[s] {
                ok = false;
                break;
            }
            self.sum_used[s] = true;
            self.sums.push(s);
            added += 1;
        }
        if ok && self.window_ok() {
            return true;
        }
        self.unplace(added);
        false
    }

    fn unplace(&mut self, count: usize) {
        for _ in 0..count {
            let s = self.sums.pop().expect("pushed before");
            self.sum_used[s] = false;
        }
    }

    fn run(&mut self, depth: usize) {
        let p = self.plan.order.len();
        if depth == p {
            let k = p + self.q + self.sums.iter().min().expect("graph has edges");
            self.found
                .entry(k)
                .or_insert_with(|| self.labels[1..].to_vec());
            return;
        }
        let v = self.plan.order[depth];
        for l in 1..=p {
            if self.used[l] {
                continue;
            }
            self.used[l] = true;
            self.labels[v] = l;
            if self.place(depth) {
                self.run(depth + 1);
                self.unplace(self.plan.closing[depth].len());
            }
            self.labels[v] = 0;
            self.used[l] = false;
        }
    }
}

/// All super edge-magic valences of `g`, by enumerating vertex bijections
/// onto `1..=p` whose edge sums are `q` consecutive integers.
pub fn brute_sem_spectrum(g: &Graph, guard: Guard) -> Result<SpectrumReport> {
    let (p, q) = (g.order(), g.size());
    if q == 0 {
        return invalid("graph has no edges");
    }
    let space = search_space(g, Mode::Sem);
    guard.check(space)?;
    let plan = plan(g);
    let first = plan.order[0];
    let branches: Vec<BTreeMap<usize, Vec<usize>>> = (1..=p)
        .into_par_iter()
        .map(|l| {
            let mut s = SemSearch {
                plan: &plan,
                q,
                labels: vec![0; p + 1],
                used: vec![false; p + 1],
                sum_used: vec![false; 2 * p + 1],
                sums: Vec::with_capacity(q),
                found: BTreeMap::new(),
            };
            s.used[l] = true;
            s.labels[first] = l;
            if s.place(0) {
                s.run(1);
            }
            s.found
        })
        .collect();
    let mut merged = BTreeMap::new();
    for branch in branches {
        for (k, labels) in branch {
            merged.entry(k).or_insert(labels);
        }
    }
    let witnesses = merged
        .into_iter()
        .map(|(k, labels)| {
            let f = extend_sem(&VertexLabeling::new(g.clone(), labels)?)?;
            debug_assert_eq!(f.valence(), k);
            Ok((k, f))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(SpectrumReport {
        graph: g.clone(),
        mode: Mode::Sem,
        spectrum: witnesses.keys().copied().collect(),
        witnesses,
        search_space_size: space,
        exhaustive: true,
    })
}

struct EmSearch<'a> {
    plan: &'a Plan,
    k: usize,
    top: usize,
    vertex: Vec<usize>,
    edge: Vec<(usize, usize, usize)>,
    used: Vec<bool>,
}

impl EmSearch<'_> {
    fn place(&mut self, depth: usize) -> bool {
        let start = self.edge.len();
        for &(u, v) in &self.plan.closing[depth] {
            let e = self.k.checked_sub(self.vertex[u] + self.vertex[v]);
            match e {
                Some(e) if e >= 1 && e <= self.top && !self.used[e] => {
                    self.used[e] = true;
                    self.edge.push((u, v, e));
                }
                _ => {
                    self.unplace(start);
                    return false;
                }
            }
        }
        true
    }

    fn unplace(&mut self, keep: usize) {
        while self.edge.len() > keep {
            let (_, _, e) = self.edge.pop().expect("len checked");
            self.used[e] = false;
        }
    }

    /// Visits solutions until `visit` returns false; returns false if stopped.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&Self) -> bool) -> bool {
        if depth == self.plan.order.len() {
            return visit(self);
        }
        let v = self.plan.order[depth];
        for l in 1..=self.top {
            if self.used[l] {
                continue;
            }
            self.used[l] = true;
            self.vertex[v] = l;
            let keep = self.edge.len();
            if self.place(depth) {
                let go_on = self.run(depth + 1, visit);
                self.unplace(keep);
                if !go_on {
                    self.vertex[v] = 0;
                    self.used[l] = false;
                    return false;
                }
            }
            self.vertex[v] = 0;
            self.used[l] = false;
        }
        true
    }

    fn labeling(&self, g: &Graph) -> Result<TotalLabeling> {
        let labels: std::collections::HashMap<(usize, usize), usize> =
            self.edge.iter().map(|&(u, v, e)| ((u, v), e)).collect();
        let raw = RawLabels {
            vertices: self.vertex[1..].to_vec(),
            edges: g.edges().iter().map(|e| labels[e]).collect(),
        };
        verify(g, &raw)
    }
}

fn em_search<'a>(g: &Graph, plan: &'a Plan, k: usize) -> EmSearch<'a> {
    let top = g.order() + g.size();
    EmSearch {
        plan,
        k,
        top,
        vertex: vec![0; g.order() + 1],
        edge: Vec::with_capacity(g.size()),
        used: vec![false; top + 1],
    }
}

/// Up to `limit` edge-magic labelings of `g` with valence `k`, in
/// lexicographic order of the vertex labels along the search order.
pub fn brute_em_labelings(
    g: &Graph,
    k: usize,
    limit: usize,
    guard: Guard,
) -> Result<Vec<TotalLabeling>> {
    if g.size() == 0 {
        return invalid("graph has no edges");
    }
    guard.check(search_space(g, Mode::Em))?;
    let plan = plan(g);
    let mut search = em_search(g, &plan, k);
    let mut out = Vec::new();
    let mut failure = None;
    if limit > 0 {
        search.run(0, &mut |s| match s.labeling(g) {
            Ok(f) => {
                out.push(f);
                out.len() < limit
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        });
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// All edge-magic valences of `g`: every `k` of the magic interval is
/// searched independently, in parallel.
pub fn brute_em_spectrum(g: &Graph, guard: Guard) -> Result<SpectrumReport> {
    let interval = em_interval(g)?;
    let space = search_space(g, Mode::Em);
    guard.check(space)?;
    let found: Vec<(usize, Vec<TotalLabeling>)> = interval
        .iter()
        .into_par_iter()
        .map(|k| brute_em_labelings(g, k, 1, guard).map(|w| (k, w)))
        .collect::<Result<_>>()?;
    let witnesses: BTreeMap<usize, TotalLabeling> = found
        .into_iter()
        .filter_map(|(k, mut w)| w.pop().map(|f| (k, f)))
        .collect();
    Ok(SpectrumReport {
        graph: g.clone(),
        mode: Mode::Em,
        spectrum: witnesses.keys().copied().collect(),
        witnesses,
        search_space_size: space,
        exhaustive: true,
    })
}

pub fn brute_spectrum(g: &Graph, mode: Mode, guard: Guard) -> Result<SpectrumReport> {
    match mode {
        Mode::Sem => brute_sem_spectrum(g, guard),
        Mode::Em => brute_em_spectrum(g, guard),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_crown, CrownSpec, Sign};
    use crate::labeling::{canonical_cycle, cycle_graph, star_loop_graph};

    fn crown(m: usize, n: usize) -> Graph {
        build_crown(CrownSpec::new(m, n).unwrap(), Sign::Plus)
            .unwrap()
            .underlying()
    }

    #[test]
    fn sem_spectra() {
        let r = brute_sem_spectrum(&crown(3, 1), Guard::SEM_DEFAULT).unwrap();
        assert_eq!(r.spectrum, vec![15, 16, 17, 18]);
        assert_eq!(r.search_space_size, 720);
        let r = brute_sem_spectrum(&star_loop_graph(2, 1).unwrap(), Guard::SEM_DEFAULT).unwrap();
        assert_eq!(r.spectrum, vec![8, 9, 10]);
        for (k, f) in &r.witnesses {
            assert_eq!(f.valence(), *k);
            assert!(f.is_super());
        }
    }

    #[test]
    fn em_spectra() {
        let r = brute_em_spectrum(&cycle_graph(3).unwrap(), Guard::EM_DEFAULT).unwrap();
        assert_eq!(r.spectrum, vec![9, 10, 11, 12]);
        let r = brute_em_spectrum(&star_loop_graph(3, 1).unwrap(), Guard::EM_DEFAULT).unwrap();
        assert_eq!(r.spectrum, (10..=17).collect::<Vec<_>>());
    }

    #[test]
    fn em_labelings() {
        let c4 = cycle_graph(4).unwrap();
        let found = brute_em_labelings(&c4, 12, 3, Guard::EM_DEFAULT).unwrap();
        assert!(!found.is_empty() && found.len() <= 3);
        assert!(found.iter().all(|f| f.valence() == 12));
        assert!(
            brute_em_labelings(&cycle_graph(3).unwrap(), 8, 5, Guard::EM_DEFAULT)
                .unwrap()
                .is_empty()
        );
        let c5 = cycle_graph(5).unwrap();
        let all = brute_em_labelings(&c5, 14, usize::MAX, Guard::EM_DEFAULT).unwrap();
        let canon = canonical_cycle(5).unwrap();
        assert!(all.iter().any(|f| f.vertex_labels() == canon.labels()));
    }

    #[test]
    fn guard_trips() {
        let big = crown(11, 1);
        match brute_sem_spectrum(&big, Guard::SEM_DEFAULT) {
            Err(Error::GuardExceeded { estimated, limit }) => {
                assert_eq!(limit, 3_628_800);
                assert!(estimated > limit);
            }
            other => panic!("expected guard error, got {other:?}"),
        }
        assert!(brute_em_spectrum(&crown(5, 1), Guard::new(10)).is_err());
    }
}
