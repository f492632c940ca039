//! The `⊗_h` digraph product and the labeling it induces.
//!
//! Family members are digraphs on `{1..p}` whose vertex names are the labels
//! of a super edge-magic labeling, so the induced labels are pure arithmetic:
//! vertex `(a,i)` gets `p(f(a)-1)+i` and the arc `((a,i),(b,j))` lying over an
//! outer arc labeled `e` gets `p(e-1)+(k+p)-(i+j)`.

use std::collections::HashMap;

use crate::arithmetic::{gcd, is_prime};
use crate::error::{invalid, Error, Result};
use crate::graph::{directed_cycle, Digraph, Sign};
use crate::labeling::{
    consecutive_min, extend_sem, star_loop_graph, RawLabels, TotalLabeling, VertexLabeling,
};

/// A super edge-magic digraph with `|V| = |E| = p`, vertices named by their
/// labels, whose arc sums are `p` consecutive integers starting at `min_sum`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    digraph: Digraph,
    min_sum: usize,
}

impl FamilyMember {
    pub fn new(digraph: Digraph) -> Result<Self> {
        let p = digraph.vertex_count();
        if digraph.arc_count() != p {
            return invalid(format!(
                "family member needs as many arcs as vertices, got {p} vertices and {} arcs",
                digraph.arc_count()
            ));
        }
        if digraph.underlying().size() != p {
            return invalid("family member has a pair of opposite arcs");
        }
        let sums: Vec<usize> = digraph.arcs().iter().map(|&(i, j)| i + j).collect();
        let min_sum = consecutive_min(&sums)?;
        Ok(FamilyMember { digraph, min_sum })
    }

    /// `f(C_m)^±`, the canonically labeled odd cycle with a strong orientation.
    pub fn canonical_cycle(m: usize, sign: Sign) -> Result<Self> {
        FamilyMember::new(directed_cycle(m, sign)?)
    }

    /// `K_{1,n}^l` with center label `r`, loop at the center and every leaf
    /// entered from the center.
    pub fn star_loop(n: usize, r: usize) -> Result<Self> {
        let g = star_loop_graph(n, r)?;
        let arcs = g
            .edges()
            .iter()
            .map(|&(u, v)| if u == r { (u, v) } else { (v, u) })
            .collect();
        FamilyMember::new(Digraph::new(n + 1, arcs)?)
    }

    pub fn order(&self) -> usize {
        self.digraph.vertex_count()
    }

    pub fn min_sum(&self) -> usize {
        self.min_sum
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn reversed(&self) -> FamilyMember {
        FamilyMember {
            digraph: self.digraph.reversed(),
            min_sum: self.min_sum,
        }
    }

    pub fn oriented(&self, sign: Sign) -> FamilyMember {
        match sign {
            Sign::Plus => self.clone(),
            Sign::Minus => self.reversed(),
        }
    }

    /// The super edge-magic labeling of the underlying graph, edges in arc order.
    pub fn labeling(&self) -> TotalLabeling {
        extend_sem(&VertexLabeling::identity(self.digraph.underlying()))
            .expect("family member sums are consecutive")
    }

    pub fn as_labeled(&self) -> LabeledDigraph {
        LabeledDigraph::new(self.digraph.clone(), self.labeling())
            .expect("family member labeling matches its digraph")
    }
}

/// A digraph together with a (super) edge-magic labeling of its underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    digraph: Digraph,
    labeling: TotalLabeling,
    arc_labels: Vec<usize>,
}

impl LabeledDigraph {
    pub fn new(digraph: Digraph, labeling: TotalLabeling) -> Result<Self> {
        let und = digraph.underlying();
        if und.size() != digraph.arc_count() {
            return invalid("digraph has a pair of opposite arcs");
        }
        if !und.same_edges(labeling.graph()) {
            return invalid("labeling is not on the underlying graph of the digraph");
        }
        let index = labeling.graph().edge_lookup();
        let arc_labels = digraph
            .arcs()
            .iter()
            .map(|&(u, v)| {
                let i = index[&(u.min(v), u.max(v))];
                labeling.edge_labels()[i]
            })
            .collect();
        Ok(LabeledDigraph {
            digraph,
            labeling,
            arc_labels,
        })
    }

    /// Orients a labeled cycle along its walking order.
    pub fn orient_cycle(labeling: TotalLabeling) -> Result<Self> {
        let order = labeling
            .graph()
            .cycle_order()
            .ok_or_else(|| Error::InvalidInput("labeling is not on a cycle".into()))?;
        let m = order.len();
        let arcs = (0..m).map(|i| (order[i], order[(i + 1) % m])).collect();
        LabeledDigraph::new(Digraph::new(m, arcs)?, labeling)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn labeling(&self) -> &TotalLabeling {
        &self.labeling
    }

    pub fn into_labeling(self) -> TotalLabeling {
        self.labeling
    }

    /// Label of the i-th arc.
    pub fn arc_label(&self, i: usize) -> usize {
        self.arc_labels[i]
    }
}

/// Assignment of a family member to each arc of an outer digraph; all members
/// share the vertex set `{1..p}`.
#[derive(Debug, Clone)]
pub struct ArcAssignment {
    family: Vec<FamilyMember>,
    choice: Vec<usize>,
}

impl ArcAssignment {
    /// `choice[i]` indexes the member assigned to arc `i`.
    pub fn new(family: Vec<FamilyMember>, choice: Vec<usize>) -> Result<Self> {
        let Some(first) = family.first() else {
            return invalid("empty family");
        };
        let p = first.order();
        if family.iter().any(|f| f.order() != p) {
            return invalid("family members have different vertex sets");
        }
        if let Some(&c) = choice.iter().find(|&&c| c >= family.len()) {
            return invalid(format!("member index {c} out of range"));
        }
        Ok(ArcAssignment { family, choice })
    }

    pub fn constant(member: FamilyMember, arc_count: usize) -> Self {
        ArcAssignment {
            family: vec![member],
            choice: vec![0; arc_count],
        }
    }

    pub fn order(&self) -> usize {
        self.family[0].order()
    }

    pub fn len(&self) -> usize {
        self.choice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choice.is_empty()
    }

    pub fn member(&self, arc: usize) -> &FamilyMember {
        &self.family[self.choice[arc]]
    }

    /// Common minimum sum of the used members, if they agree.
    fn common_min_sum(&self) -> Option<usize> {
        let k = self.member(0).min_sum();
        (0..self.len())
            .all(|i| self.member(i).min_sum() == k)
            .then_some(k)
    }
}

/// `D ⊗_h Γ`: vertex `(a,i)` is renamed `p(a-1)+i`, and `((a,i),(b,j))` is an arc
/// iff `(a,b) ∈ E(D)` and `(i,j) ∈ E(h(a,b))`.
pub fn h_product(d: &Digraph, h: &ArcAssignment) -> Result<Digraph> {
    if h.len() != d.arc_count() {
        return invalid(format!(
            "assignment covers {} arcs but the digraph has {}",
            h.len(),
            d.arc_count()
        ));
    }
    let p = h.order();
    let mut arcs = Vec::new();
    for (idx, &(a, b)) in d.arcs().iter().enumerate() {
        for &(i, j) in h.member(idx).digraph().arcs() {
            arcs.push((p * (a - 1) + i, p * (b - 1) + j));
        }
    }
    Digraph::new(p * d.vertex_count(), arcs)
}

/// Labeling of `D ⊗_h S_p^k` induced by a labeling of `D`. The result has
/// valence `p(val(f) - 3) + k + p` and keeps the kind of `f`.
pub fn induced_product_labeling(d: &LabeledDigraph, h: &ArcAssignment) -> Result<LabeledDigraph> {
    let k = h
        .common_min_sum()
        .ok_or_else(|| Error::InvalidInput("family members have different minimum sums".into()))?;
    let product = h_product(&d.digraph, h)?;
    let p = h.order();
    let f = &d.labeling;

    let mut vertices = vec![0; product.vertex_count()];
    for a in 1..=d.digraph.vertex_count() {
        for i in 1..=p {
            vertices[p * (a - 1) + i - 1] = p * (f.vertex_label(a) - 1) + i;
        }
    }
    let mut arc_labels = HashMap::with_capacity(product.arc_count());
    for (idx, &(a, b)) in d.digraph.arcs().iter().enumerate() {
        let e = d.arc_labels[idx];
        for &(i, j) in h.member(idx).digraph().arcs() {
            let label = p * (e - 1) + (k + p) - (i + j);
            arc_labels.insert((p * (a - 1) + i, p * (b - 1) + j), label);
        }
    }
    let und = product.underlying();
    if und.size() != product.arc_count() {
        return Err(Error::Construction(
            "product has a pair of opposite arcs".into(),
        ));
    }
    let edges = product.arcs().iter().map(|arc| arc_labels[arc]).collect();
    let labeling = crate::labeling::verify(&und, &RawLabels { vertices, edges })?;
    let expected = p * (f.valence() - 3) + k + p;
    if labeling.valence() != expected || labeling.kind() != f.kind() {
        return Err(Error::Construction(format!(
            "induced labeling has valence {} ({}), expected {expected} ({})",
            labeling.valence(),
            labeling.kind(),
            f.kind()
        )));
    }
    LabeledDigraph::new(product, labeling)
}

/// Labeled oriented cycle `f(C_outer)^± ⊗ f(C_inner)^±` for coprime odd lengths.
pub fn product_cycle(
    outer: usize,
    outer_sign: Sign,
    inner: usize,
    inner_sign: Sign,
) -> Result<FamilyMember> {
    if gcd(outer as u64, inner as u64) != 1 {
        return invalid(format!("cycle lengths {outer} and {inner} are not coprime"));
    }
    let outer_member = FamilyMember::canonical_cycle(outer, outer_sign)?.as_labeled();
    let inner_member = FamilyMember::canonical_cycle(inner, inner_sign)?;
    let h = ArcAssignment::constant(inner_member, outer_member.digraph().arc_count());
    let product = induced_product_labeling(&outer_member, &h)?;
    let member = FamilyMember::new(product.digraph)?;
    if member.digraph().cycle_lengths() != Some(vec![outer * inner]) {
        return Err(Error::Construction(format!(
            "product of C_{outer} and C_{inner} is not a single cycle"
        )));
    }
    Ok(member)
}

/// The super edge-magic labeling of `C_{pq}` induced by `f(C_q)^+ ⊗ f(C_p)^-`,
/// returned as an oriented labeled cycle. The outer cycle has length `q`.
pub fn product_cycle_sem(q: usize, p: usize) -> Result<FamilyMember> {
    if p == q || p == 2 || q == 2 || !is_prime(p as u64) || !is_prime(q as u64) {
        return invalid(format!("need two distinct odd primes, got {q} and {p}"));
    }
    product_cycle(q, Sign::Plus, p, Sign::Minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_crown, crown_shape, star_loop, CrownSpec};
    use crate::labeling::{canonical_cycle, star_loop_labeling};

    #[test]
    fn loop_times_cycle_is_the_cycle() {
        let d = Digraph::new(1, vec![(1, 1)]).unwrap();
        let c3 = FamilyMember::canonical_cycle(3, Sign::Minus).unwrap();
        let prod = h_product(&d, &ArcAssignment::constant(c3.clone(), 1)).unwrap();
        assert_eq!(&prod, c3.digraph());
    }

    #[test]
    fn coprime_cycles_give_a_single_cycle() {
        let d = directed_cycle(5, Sign::Plus).unwrap();
        let c3 = FamilyMember::canonical_cycle(3, Sign::Minus).unwrap();
        let prod = h_product(&d, &ArcAssignment::constant(c3, 5)).unwrap();
        assert_eq!(prod.vertex_count(), 15);
        assert_eq!(prod.cycle_lengths(), Some(vec![15]));
        assert!(prod.underlying().is_cycle());
    }

    #[test]
    fn star_times_cycle_is_a_crown() {
        for (m, n) in [(3, 1), (5, 2), (7, 3)] {
            let cm = FamilyMember::canonical_cycle(m, Sign::Plus).unwrap();
            let d = star_loop(n).unwrap();
            let prod = h_product(&d, &ArcAssignment::constant(cm, n + 1)).unwrap();
            let shape = crown_shape(&prod.underlying()).unwrap();
            let expected = crown_shape(
                &build_crown(CrownSpec::new(m, n).unwrap(), Sign::Plus)
                    .unwrap()
                    .underlying(),
            )
            .unwrap();
            assert_eq!(shape.n, expected.n);
            assert_eq!(shape.cycle_lengths, expected.cycle_lengths);
            assert!(shape.single_cycle);
            // every leaf is entered by an arc from the core
            let ins = prod.in_degrees();
            assert!((1..=prod.vertex_count()).all(|v| ins[v] == 1));
        }
    }

    #[test]
    fn induced_valence_c5_times_c3() {
        let c5 = FamilyMember::canonical_cycle(5, Sign::Plus)
            .unwrap()
            .as_labeled();
        assert_eq!(c5.labeling().valence(), 14);
        let c3 = FamilyMember::canonical_cycle(3, Sign::Minus).unwrap();
        assert_eq!(c3.min_sum(), 3);
        let prod = induced_product_labeling(&c5, &ArcAssignment::constant(c3, 5)).unwrap();
        assert_eq!(prod.labeling().valence(), 3 * (14 - 3) + 3 + 3);
        assert!(prod.labeling().is_super());
    }

    #[test]
    fn induced_valence_star_times_c3_is_smallest_crown() {
        let star = FamilyMember::star_loop(1, 1).unwrap().as_labeled();
        assert_eq!(star.labeling().valence(), 6);
        let c3 = FamilyMember::canonical_cycle(3, Sign::Minus).unwrap();
        let prod = induced_product_labeling(&star, &ArcAssignment::constant(c3, 2)).unwrap();
        assert_eq!(prod.labeling().valence(), 15);
        assert_eq!(prod.labeling().valence(), (5 * 3 + 3) / 2 + 2 * 3);
        assert!(crown_shape(prod.labeling().graph()).unwrap().single_cycle);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let c3 = FamilyMember::canonical_cycle(3, Sign::Plus).unwrap();
        let c5 = FamilyMember::canonical_cycle(5, Sign::Plus).unwrap();
        assert!(ArcAssignment::new(vec![c3, c5], vec![0, 1]).is_err());
    }

    #[test]
    fn mismatched_min_sums_rejected() {
        // same order 2, different minimum sums
        let a = FamilyMember::star_loop(1, 1).unwrap();
        let b = FamilyMember::star_loop(1, 2).unwrap();
        assert_ne!(a.min_sum(), b.min_sum());
        let d = FamilyMember::canonical_cycle(3, Sign::Plus)
            .unwrap()
            .as_labeled();
        let h = ArcAssignment::new(vec![a, b], vec![0, 1, 0]).unwrap();
        assert!(induced_product_labeling(&d, &h).is_err());
    }

    #[test]
    fn product_cycle_sem_both_roles() {
        let a = product_cycle_sem(5, 3).unwrap();
        let b = product_cycle_sem(3, 5).unwrap();
        assert_eq!(a.labeling().valence(), 39);
        assert_eq!(b.labeling().valence(), 39);
        assert_eq!(a.min_sum(), (15 + 3) / 2);
        assert_ne!(a.digraph(), b.digraph());
        assert!(product_cycle_sem(3, 3).is_err());
        assert!(product_cycle_sem(9, 5).is_err());
    }

    #[test]
    fn member_labeling_matches_canonical_cycle() {
        let m = FamilyMember::canonical_cycle(7, Sign::Plus).unwrap();
        let direct = extend_sem(&canonical_cycle(7).unwrap()).unwrap();
        assert_eq!(m.labeling().valence(), direct.valence());
    }

    #[test]
    fn star_member_matches_star_labeling() {
        for n in 1..5 {
            for r in 1..=n + 1 {
                let m = FamilyMember::star_loop(n, r).unwrap();
                assert_eq!(m.min_sum(), r + 1);
                assert_eq!(m.labeling(), star_loop_labeling(n, r).unwrap());
            }
        }
    }
}
