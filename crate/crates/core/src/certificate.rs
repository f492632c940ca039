//! Self-contained certificates: a labeling stored against a named graph family
//! with stable vertex ids, re-checkable without trusting the producer.
//!
//! Ids: crown core vertices `c0..c{m-1}` in cycle order, leaf `j` of core `i`
//! is `l{i}_{j}` (`j` from 1); cycle vertices `v1..vm`; looped-star center `c`
//! and leaves `l1..ln`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coverage::{em_interval, sem_interval, Mode, ValenceCover};
use crate::error::{invalid, Error, Result};
use crate::graph::{crown_shape, Graph, Sign};
use crate::labeling::{verify, Kind, RawLabels, TotalLabeling};
use crate::oracle::SpectrumReport;

/// Graph families a certificate can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphSpec", into = "GraphSpec")]
pub enum Family {
    Crown { m: usize, n: usize },
    Cycle { m: usize },
    StarLoop { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum FamilyName {
    Crown,
    Cycle,
    StarLoop,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphSpec {
    family: FamilyName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

impl TryFrom<GraphSpec> for Family {
    type Error = Error;

    fn try_from(spec: GraphSpec) -> Result<Family> {
        let family = match (spec.family, spec.m, spec.n) {
            (FamilyName::Crown, Some(m), Some(n)) => Family::Crown { m, n },
            (FamilyName::Cycle, Some(m), None) => Family::Cycle { m },
            (FamilyName::StarLoop, None, Some(n)) => Family::StarLoop { n },
            (name, m, n) => {
                return invalid(format!("bad parameters for {name:?}: m = {m:?}, n = {n:?}"))
            }
        };
        family.validate()?;
        Ok(family)
    }
}

impl From<Family> for GraphSpec {
    fn from(f: Family) -> GraphSpec {
        let (family, m, n) = match f {
            Family::Crown { m, n } => (FamilyName::Crown, Some(m), Some(n)),
            Family::Cycle { m } => (FamilyName::Cycle, Some(m), None),
            Family::StarLoop { n } => (FamilyName::StarLoop, None, Some(n)),
        };
        GraphSpec { family, m, n }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Crown { m, n } => write!(f, "C_{m} ⊙ K̄_{n}"),
            Family::Cycle { m } => write!(f, "C_{m}"),
            Family::StarLoop { n } => write!(f, "K_{{1,{n}}}^l"),
        }
    }
}

struct Layout {
    ids: Vec<String>,
    /// 0-based endpoints.
    edges: Vec<(usize, usize)>,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Crown { m, n } if m < 3 || n < 1 => {
                invalid(format!("crown needs m ≥ 3 and n ≥ 1, got m = {m}, n = {n}"))
            }
            Family::Cycle { m } if m < 3 => invalid(format!("cycle needs m ≥ 3, got {m}")),
            Family::StarLoop { n } if n < 1 => invalid("looped star needs n ≥ 1"),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Crown { m, n } => m * (n + 1),
            Family::Cycle { m } => m,
            Family::StarLoop { n } => n + 1,
        }
    }

    fn layout(&self) -> Layout {
        let mut ids = Vec::with_capacity(self.order());
        let mut edges = Vec::new();
        match *self {
            Family::Crown { m, n } => {
                ids.extend((0..m).map(|i| format!("c{i}")));
                for i in 0..m {
                    ids.extend((1..=n).map(|j| format!("l{i}_{j}")));
                }
                edges.extend((0..m).map(|i| (i, (i + 1) % m)));
                for i in 0..m {
                    edges.extend((0..n).map(|j| (i, m + i * n + j)));
                }
            }
            Family::Cycle { m } => {
                ids.extend((1..=m).map(|i| format!("v{i}")));
                edges.extend((0..m).map(|i| (i, (i + 1) % m)));
            }
            Family::StarLoop { n } => {
                ids.push("c".into());
                ids.extend((1..=n).map(|j| format!("l{j}")));
                edges.push((0, 0));
                edges.extend((1..=n).map(|j| (0, j)));
            }
        }
        Layout { ids, edges }
    }

    /// The family graph with vertex `i + 1` carrying the `i`-th id.
    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        let l = self.layout();
        Graph::new(
            l.ids.len(),
            l.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        )
    }

    /// Vertex ids in canonical order.
    pub fn vertex_ids(&self) -> Vec<String> {
        self.layout().ids
    }

    /// `map[i]` is the vertex of `g` playing the role of canonical vertex `i`.
    fn identify(&self, g: &Graph) -> Result<Vec<usize>> {
        self.validate()?;
        let mismatch = |why: &str| invalid(format!("graph is not {self}: {why}"));
        if g.order() != self.order() {
            return mismatch("wrong order");
        }
        let map: Vec<usize> = match *self {
            Family::Crown { m, n } => {
                let shape = crown_shape(g)?;
                if !shape.single_cycle || shape.core.len() != m || shape.n != n {
                    return mismatch("core is not a single m-cycle with n leaves per vertex");
                }
                let order = shape.core_cycle_order().expect("single cycle");
                let mut map = order.clone();
                for &c in &order {
                    map.extend_from_slice(shape.leaves_of(c).expect("core vertex"));
                }
                map
            }
            Family::Cycle { m } => match g.cycle_order() {
                Some(order) if order.len() == m => order,
                _ => return mismatch("not a cycle"),
            },
            Family::StarLoop { .. } => {
                let centers: Vec<usize> = g
                    .edges()
                    .iter()
                    .filter(|e| e.0 == e.1)
                    .map(|e| e.0)
                    .collect();
                let [center] = centers[..] else {
                    return mismatch("needs exactly one loop");
                };
                std::iter::once(center)
                    .chain((1..=g.order()).filter(|&v| v != center))
                    .collect()
            }
        };
        let l = self.layout();
        let mapped = Graph::new(
            g.order(),
            l.edges.iter().map(|&(a, b)| (map[a], map[b])).collect(),
        )?;
        if !mapped.same_edges(g) {
            return mismatch("edge sets differ");
        }
        Ok(map)
    }
}

/// How a certificate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Translation of the canonical odd-cycle labeling.
    Canonical {
        r: usize,
        sign: Sign,
    },
    /// Translation of the product cycle `f(C_outer)^± ⊗ f(C_inner)^±`.
    Rescue {
        outer: usize,
        outer_sign: Sign,
        inner: usize,
        inner_sign: Sign,
        r: usize,
        sign: Sign,
    },
    SemComplement {
        of: usize,
    },
    EmComplement {
        of: usize,
    },
    Odd {
        of: usize,
    },
    Even {
        of: usize,
    },
    StarProduct {
        cycle_valence: usize,
        r: usize,
    },
    Oracle,
    Imported,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Source::Canonical { r, sign } => write!(f, "canonical cycle{sign}, r = {r}"),
            Source::Rescue {
                outer,
                outer_sign,
                inner,
                inner_sign,
                r,
                sign,
            } => write!(
                f,
                "product f(C_{outer}){outer_sign} ⊗ f(C_{inner}){inner_sign} oriented {sign}, r = {r}"
            ),
            Source::SemComplement { of } => write!(f, "super complement of valence {of}"),
            Source::EmComplement { of } => write!(f, "complement of valence {of}"),
            Source::Odd { of } => write!(f, "odd labeling from valence {of}"),
            Source::Even { of } => write!(f, "even labeling from valence {of}"),
            Source::StarProduct { cycle_valence, r } => {
                write!(f, "star product of cycle valence {cycle_valence}, r = {r}")
            }
            Source::Oracle => f.write_str("exhaustive search"),
            Source::Imported => f.write_str("imported"),
        }
    }
}

/// A verified labeling of a family graph.
#[derive(Debug, Clone)]
pub struct Certificate {
    family: Family,
    labeling: TotalLabeling,
    /// `map[i]` is the labeling vertex carrying canonical id `i`.
    map: Vec<usize>,
    source: Source,
}

impl Certificate {
    pub fn new(family: Family, labeling: TotalLabeling, source: Source) -> Result<Self> {
        let map = family.identify(labeling.graph())?;
        Ok(Certificate {
            family,
            labeling,
            map,
            source,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn labeling(&self) -> &TotalLabeling {
        &self.labeling
    }

    pub fn valence(&self) -> usize {
        self.labeling.valence()
    }

    pub fn kind(&self) -> Kind {
        self.labeling.kind()
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn to_document(&self) -> CertificateDoc {
        let layout = self.family.layout();
        let f = &self.labeling;
        let vertices = layout
            .ids
            .iter()
            .zip(&self.map)
            .map(|(id, &v)| VertexEntry {
                id: id.clone(),
                label: f.vertex_label(v),
            })
            .collect();
        let index = f.graph().edge_lookup();
        let edges = layout
            .edges
            .iter()
            .map(|&(a, b)| {
                let (u, v) = (self.map[a], self.map[b]);
                let i = index[&(u.min(v), u.max(v))];
                EdgeEntry {
                    u: layout.ids[a].clone(),
                    v: layout.ids[b].clone(),
                    label: f.edge_labels()[i],
                }
            })
            .collect();
        CertificateDoc {
            graph: self.family,
            kind: f.kind().to_string(),
            valence: f.valence(),
            vertices,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_document())
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        let doc: CertificateDoc = serde_json::from_str(text)
            .map_err(|e| Error::InvalidCertificate(format!("malformed certificate: {e}")))?;
        doc.verify()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: String,
    pub v: String,
    pub label: usize,
}

/// Serialized certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub graph: Family,
    pub kind: String,
    pub valence: usize,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

fn bad<T>(msg: String) -> Result<T> {
    Err(Error::InvalidCertificate(msg))
}

impl CertificateDoc {
    /// Checks the graph against its family exactly, then the labeling.
    pub fn verify(&self) -> Result<Certificate> {
        let family = self.graph;
        family.validate()?;
        let layout = family.layout();
        let index: HashMap<&str, usize> = layout
            .ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let lookup = |id: &str| -> Result<usize> {
            match index.get(id) {
                Some(&i) => Ok(i),
                None => bad(format!("unknown vertex id {id:?} for {family}")),
            }
        };

        let mut vertex_labels = vec![0; layout.ids.len()];
        let mut seen = vec![false; layout.ids.len()];
        for entry in &self.vertices {
            let i = lookup(&entry.id)?;
            if std::mem::replace(&mut seen[i], true) {
                return bad(format!("vertex {} listed twice", entry.id));
            }
            vertex_labels[i] = entry.label;
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return bad(format!("vertex {} is missing", layout.ids[i]));
        }

        let wanted: HashSet<(usize, usize)> = layout
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut listed = HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_labels = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let (a, b) = (lookup(&e.u)?, lookup(&e.v)?);
            let key = (a.min(b), a.max(b));
            if !wanted.contains(&key) {
                return bad(format!(
                    "edge {{{},{}}} is not an edge of {family}",
                    e.u, e.v
                ));
            }
            if !listed.insert(key) {
                return bad(format!("edge {{{},{}}} listed twice", e.u, e.v));
            }
            edges.push((a + 1, b + 1));
            edge_labels.push(e.label);
        }
        if listed.len() != wanted.len() {
            let &(a, b) = layout
                .edges
                .iter()
                .find(|&&(a, b)| !listed.contains(&(a.min(b), a.max(b))))
                .expect("some edge is missing");
            return bad(format!(
                "edge {{{},{}}} is missing",
                layout.ids[a], layout.ids[b]
            ));
        }

        for (e, &(a, b)) in self.edges.iter().zip(&edges) {
            let sum = vertex_labels[a - 1] + e.label + vertex_labels[b - 1];
            if sum != self.valence {
                return bad(format!(
                    "edge {{{},{}}} sums to {sum}, declared valence is {}",
                    e.u, e.v, self.valence
                ));
            }
        }
        let top = vertex_labels.len() + edges.len();
        let mut owner: Vec<Option<String>> = vec![None; top + 1];
        let items = layout
            .ids
            .iter()
            .zip(&vertex_labels)
            .map(|(id, &l)| (format!("vertex {id}"), l))
            .chain(
                self.edges
                    .iter()
                    .map(|e| (format!("edge {{{},{}}}", e.u, e.v), e.label)),
            );
        for (name, l) in items {
            if l == 0 || l > top {
                return bad(format!("{name} has label {l} outside 1..={top}"));
            }
            if let Some(prev) = &owner[l] {
                return bad(format!("{prev} and {name} share label {l}"));
            }
            owner[l] = Some(name);
        }

        let graph = Graph::new(layout.ids.len(), edges)?;
        let labeling = verify(
            &graph,
            &RawLabels {
                vertices: vertex_labels,
                edges: edge_labels,
            },
        )
        .map_err(|e| Error::InvalidCertificate(e.to_string()))?;
        if labeling.kind().to_string() != self.kind {
            return bad(format!(
                "declared kind {:?} but the labeling is {}",
                self.kind,
                labeling.kind()
            ));
        }
        Certificate::new(family, labeling, Source::Imported)
    }
}

/// Serialized [`ValenceCover`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverReportDoc {
    pub graph: Family,
    pub mode: Mode,
    pub interval: [usize; 2],
    pub achieved: Vec<usize>,
    pub missing: Vec<usize>,
    pub certificates: Vec<CertificateDoc>,
}

impl CoverReportDoc {
    pub fn from_cover(cover: &ValenceCover) -> Self {
        CoverReportDoc {
            graph: cover.family,
            mode: cover.interval.mode,
            interval: [cover.interval.lo, cover.interval.hi],
            achieved: cover.achieved.keys().copied().collect(),
            missing: cover.missing.clone(),
            certificates: cover
                .achieved
                .values()
                .map(Certificate::to_document)
                .collect(),
        }
    }

    /// Re-verifies every certificate and the bookkeeping around them.
    pub fn verify(&self) -> Result<Vec<Certificate>> {
        let graph = self.graph.graph()?;
        let interval = match self.mode {
            Mode::Sem => sem_interval(&graph)?,
            Mode::Em => em_interval(&graph)?,
        };
        if [interval.lo, interval.hi] != self.interval {
            return bad(format!(
                "declared interval {:?} differs from {interval}",
                self.interval
            ));
        }
        let certs = self
            .certificates
            .iter()
            .map(|doc| {
                let c = doc.verify()?;
                if c.family() != self.graph {
                    return bad(format!(
                        "certificate for {} in a report on {}",
                        c.family(),
                        self.graph
                    ));
                }
                if self.mode == Mode::Sem && !c.labeling().is_super() {
                    return bad(format!(
                        "valence {} certificate is not super edge-magic",
                        c.valence()
                    ));
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut valences: Vec<usize> = certs.iter().map(Certificate::valence).collect();
        valences.sort_unstable();
        if valences != self.achieved {
            return bad("achieved list does not match the certificates".into());
        }
        let mut all: Vec<usize> = self.achieved.iter().chain(&self.missing).copied().collect();
        all.sort_unstable();
        if all != interval.iter().collect::<Vec<_>>() {
            return bad("achieved and missing do not partition the interval".into());
        }
        Ok(certs)
    }
}

/// Serialized [`SpectrumReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumReportDoc {
    pub graph: Family,
    pub mode: Mode,
    pub spectrum: Vec<usize>,
    pub witnesses: Vec<CertificateDoc>,
    pub search_space_size: u128,
    pub exhaustive: bool,
}

impl SpectrumReportDoc {
    pub fn from_report(family: Family, report: &SpectrumReport) -> Result<Self> {
        let witnesses = report
            .witnesses
            .values()
            .map(|f| Certificate::new(family, f.clone(), Source::Oracle).map(|c| c.to_document()))
            .collect::<Result<_>>()?;
        Ok(SpectrumReportDoc {
            graph: family,
            mode: report.mode,
            spectrum: report.spectrum.clone(),
            witnesses,
            search_space_size: report.search_space_size,
            exhaustive: report.exhaustive,
        })
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable document");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}
