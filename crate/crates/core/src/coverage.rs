//! Magic intervals, perfect covers of crowns `C_m ⊙ K̄_n` and valence counts
//! from star products.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::{bounded_bezout, factorize, gcd, gcd_exception, is_prime};
use crate::certificate::{Certificate, Family, Source};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Sign};
use crate::labeling::{em_complement, odd_even, sem_complement, Parity, TotalLabeling};
use crate::product::{
    induced_product_labeling, product_cycle, ArcAssignment, FamilyMember, LabeledDigraph,
};
use crate::translation::{canonical_core_step, translated_labeling, TranslationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sem,
    Em,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Sem => "sem",
            Mode::Em => "em",
        })
    }
}

/// Integer interval of valences not excluded by counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MagicInterval {
    pub lo: usize,
    pub hi: usize,
    pub mode: Mode,
}

impl MagicInterval {
    pub fn contains(&self, k: usize) -> bool {
        (self.lo..=self.hi).contains(&k)
    }

    pub fn len(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for MagicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `Σ w_i l_i` over sorted weights, pairing heavy weights with small labels
/// (`smallest`) or with large ones.
fn rearrangement(
    weights: &mut [usize],
    labels: impl Iterator<Item = usize>,
    smallest: bool,
) -> usize {
    if smallest {
        weights.sort_unstable_by(|a, b| b.cmp(a));
    } else {
        weights.sort_unstable();
    }
    weights.iter().zip(labels).map(|(w, l)| w * l).sum()
}

fn interval_from_sums(lo_sum: usize, hi_sum: usize, q: usize, mode: Mode) -> MagicInterval {
    MagicInterval {
        lo: lo_sum.div_ceil(q),
        hi: hi_sum / q,
        mode,
    }
}

/// `I_G`: the range of `(Σ deg(u) f(u) + Σ_{i=p+1}^{p+q} i) / q` over vertex
/// bijections onto `1..=p`, rounded inwards.
pub fn sem_interval(g: &Graph) -> Result<MagicInterval> {
    let (p, q) = (g.order(), g.size());
    if q == 0 {
        return invalid("graph has no edges");
    }
    let edge_part: usize = (p + 1..=p + q).sum();
    let degrees = &g.degrees()[1..];
    let lo = rearrangement(&mut degrees.to_vec(), 1..=p, true) + edge_part;
    let hi = rearrangement(&mut degrees.to_vec(), 1..=p, false) + edge_part;
    Ok(interval_from_sums(lo, hi, q, Mode::Sem))
}

/// `J_G`: as [`sem_interval`] but labels `1..=p+q` range over vertices
/// (weight = degree) and edges (weight 1).
pub fn em_interval(g: &Graph) -> Result<MagicInterval> {
    let (p, q) = (g.order(), g.size());
    if q == 0 {
        return invalid("graph has no edges");
    }
    let mut weights: Vec<usize> = g.degrees()[1..].to_vec();
    weights.extend(std::iter::repeat_n(1, q));
    let lo = rearrangement(&mut weights.clone(), 1..=p + q, true);
    let hi = rearrangement(&mut weights, 1..=p + q, false);
    Ok(interval_from_sums(lo, hi, q, Mode::Em))
}

fn check_odd_crown(m: usize, n: usize) -> Result<()> {
    if m < 3 || m % 2 == 0 || n < 1 {
        return invalid(format!("need odd m ≥ 3 and n ≥ 1, got m = {m}, n = {n}"));
    }
    Ok(())
}

/// `[(3+5m)/2 + 2mn, (3+5m)/2 + 3mn]` for odd `m`.
pub fn crown_sem_interval(m: usize, n: usize) -> Result<MagicInterval> {
    check_odd_crown(m, n)?;
    let base = (3 + 5 * m) / 2;
    Ok(MagicInterval {
        lo: base + 2 * m * n,
        hi: base + 3 * m * n,
        mode: Mode::Sem,
    })
}

/// `[(3+5m)/2 + 2mn, (3+7m)/2 + 4mn]` for odd `m`.
pub fn crown_em_interval(m: usize, n: usize) -> Result<MagicInterval> {
    check_odd_crown(m, n)?;
    Ok(MagicInterval {
        lo: (3 + 5 * m) / 2 + 2 * m * n,
        hi: (3 + 7 * m) / 2 + 4 * m * n,
        mode: Mode::Em,
    })
}

/// Certificates for every valence of an interval that could be realized.
#[derive(Debug, Clone)]
pub struct ValenceCover {
    pub family: Family,
    pub interval: MagicInterval,
    pub achieved: BTreeMap<usize, Certificate>,
    pub missing: Vec<usize>,
}

impl ValenceCover {
    pub fn is_perfect(&self) -> bool {
        self.missing.is_empty()
    }
}

#[derive(Debug, Clone)]
struct Candidate {
    member: FamilyMember,
    outer: usize,
    outer_sign: Sign,
    inner: usize,
    inner_sign: Sign,
}

impl Candidate {
    fn source(&self, r: usize, sign: Sign) -> Source {
        Source::Rescue {
            outer: self.outer,
            outer_sign: self.outer_sign,
            inner: self.inner,
            inner_sign: self.inner_sign,
            r,
            sign,
        }
    }
}

#[derive(Debug, Clone)]
enum Strategy {
    /// `m = pq`: one rescue member used with sign `+` at shifts `≡ t0 (mod m)`.
    PrimePair { rescue: Candidate, t0: usize },
    /// Any odd `m`: every product of two coprime cycle factors is tried.
    Search { candidates: Vec<Candidate> },
}

/// Builds super edge-magic and edge-magic labelings of `C_m ⊙ K̄_n` by
/// translating labeled oriented cycles.
#[derive(Debug, Clone)]
pub struct CrownConstructor {
    m: usize,
    n: usize,
    canonical: FamilyMember,
    strategy: Strategy,
}

impl CrownConstructor {
    /// The construction for `m = pq`, which realizes every valence of `I_G`
    /// and `J_G`; a failure is an error.
    pub fn prime_pair(p: usize, q: usize, n: usize) -> Result<Self> {
        let b = bounded_bezout(p as u64, q as u64)?;
        let m = p * q;
        check_odd_crown(m, n)?;
        let (inner, outer) = b.normalized_primes();
        let (inner, outer) = (inner as usize, outer as usize);
        let rescue = Candidate {
            member: product_cycle(outer, Sign::Plus, inner, Sign::Minus)?,
            outer,
            outer_sign: Sign::Plus,
            inner,
            inner_sign: Sign::Minus,
        };
        Ok(CrownConstructor {
            m,
            n,
            canonical: FamilyMember::canonical_cycle(m, Sign::Plus)?,
            strategy: Strategy::PrimePair {
                rescue,
                t0: b.base_shift() as usize,
            },
        })
    }

    /// Best-effort construction for any odd `m`; valences it cannot reach
    /// are reported missing.
    pub fn search(m: usize, n: usize) -> Result<Self> {
        check_odd_crown(m, n)?;
        let mut candidates = Vec::new();
        for a in (3..m).step_by(2) {
            let b = m / a;
            if m % a != 0 || b < 3 || gcd(a as u64, b as u64) != 1 {
                continue;
            }
            for outer_sign in [Sign::Plus, Sign::Minus] {
                for inner_sign in [Sign::Plus, Sign::Minus] {
                    let member = product_cycle(a, outer_sign, b, inner_sign)?;
                    if candidates.iter().any(|c: &Candidate| c.member == member) {
                        continue;
                    }
                    candidates.push(Candidate {
                        member,
                        outer: a,
                        outer_sign,
                        inner: b,
                        inner_sign,
                    });
                }
            }
        }
        Ok(CrownConstructor {
            m,
            n,
            canonical: FamilyMember::canonical_cycle(m, Sign::Plus)?,
            strategy: Strategy::Search { candidates },
        })
    }

    /// [`prime_pair`](Self::prime_pair) when `m` is a product of two distinct
    /// odd primes, [`search`](Self::search) otherwise.
    pub fn for_crown(m: usize, n: usize) -> Result<Self> {
        check_odd_crown(m, n)?;
        match factorize(m as u64)[..] {
            [(p, 1), (q, 1)] if p != 2 => Self::prime_pair(p as usize, q as usize, n),
            _ => Self::search(m, n),
        }
    }

    pub fn family(&self) -> Family {
        Family::Crown {
            m: self.m,
            n: self.n,
        }
    }

    pub fn is_prime_pair(&self) -> bool {
        matches!(self.strategy, Strategy::PrimePair { .. })
    }

    pub fn sem_interval(&self) -> MagicInterval {
        crown_sem_interval(self.m, self.n).expect("checked at construction")
    }

    pub fn em_interval(&self) -> MagicInterval {
        crown_em_interval(self.m, self.n).expect("checked at construction")
    }

    fn order(&self) -> usize {
        self.m * (self.n + 1)
    }

    fn certify(&self, labeling: TotalLabeling, source: Source) -> Result<Certificate> {
        Certificate::new(self.family(), labeling, source)
    }

    fn try_member(
        &self,
        member: &FamilyMember,
        sign: Sign,
        r: usize,
    ) -> Result<Option<TranslationResult>> {
        match translated_labeling(member, self.n, sign, r) {
            Ok(res) if res.single_cycle => Ok(Some(res)),
            Ok(_) | Err(Error::Construction(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// A labeling at shift `t` built by translation alone.
    fn direct(&self, t: usize) -> Result<Option<Certificate>> {
        let (m, r) = (self.m, t + 1);
        if !gcd_exception(m as u64, r as u64) {
            let plus_step = canonical_core_step(m, Sign::Plus, r);
            let sign = if gcd(plus_step as u64, m as u64) == 1 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            let res = translated_labeling(&self.canonical, self.n, sign, r)?;
            if !res.single_cycle {
                return Err(Error::Construction(format!(
                    "canonical translation at r = {r} splits into cycles {:?}",
                    res.cycle_lengths
                )));
            }
            return self
                .certify(res.labeling, Source::Canonical { r, sign })
                .map(Some);
        }
        match &self.strategy {
            Strategy::PrimePair { rescue, t0 } if t % m == *t0 => {
                let res = translated_labeling(&rescue.member, self.n, Sign::Plus, r)?;
                if !res.single_cycle {
                    return Err(Error::Construction(format!(
                        "rescue labeling at r = {r} splits into cycles {:?}",
                        res.cycle_lengths
                    )));
                }
                self.certify(res.labeling, rescue.source(r, Sign::Plus))
                    .map(Some)
            }
            Strategy::PrimePair { .. } => Ok(None),
            Strategy::Search { candidates } => {
                for c in candidates {
                    for sign in [Sign::Plus, Sign::Minus] {
                        if let Some(res) = self.try_member(&c.member, sign, r)? {
                            return self.certify(res.labeling, c.source(r, sign)).map(Some);
                        }
                    }
                }
                Ok(None)
            }
        }
    }

    /// A super edge-magic labeling of valence `val(f_1) + t`, `0 ≤ t ≤ mn`.
    pub fn sem_at_shift(&self, t: usize) -> Result<Option<Certificate>> {
        let top = self.m * self.n;
        if t > top {
            return invalid(format!("shift {t} outside 0..={top}"));
        }
        if let Some(c) = self.direct(t)? {
            return Ok(Some(c));
        }
        if let Some(c) = self.direct(top - t)? {
            let f = sem_complement(c.labeling())?;
            return self
                .certify(f, Source::SemComplement { of: c.valence() })
                .map(Some);
        }
        if self.is_prime_pair() {
            return Err(Error::Construction(format!(
                "no labeling at shift {t} for m = {}",
                self.m
            )));
        }
        Ok(None)
    }

    /// A super edge-magic labeling of valence `k`, if constructible.
    pub fn sem_labeling(&self, k: usize) -> Result<Option<Certificate>> {
        let i = self.sem_interval();
        if !i.contains(k) {
            return Ok(None);
        }
        let c = self.sem_at_shift(k - i.lo)?;
        check_valence(c, k)
    }

    /// An edge-magic labeling of valence `k`, from odd/even doubling, a super
    /// edge-magic labeling, or the complement of one, in that order.
    pub fn em_labeling(&self, k: usize) -> Result<Option<Certificate>> {
        self.em_from(k, &|v| self.sem_labeling(v))
    }

    fn em_from(
        &self,
        k: usize,
        sem: &dyn Fn(usize) -> Result<Option<Certificate>>,
    ) -> Result<Option<Certificate>> {
        if !self.em_interval().contains(k) {
            return Ok(None);
        }
        let p = self.order();
        for (parity, extra) in [(Parity::Odd, 2), (Parity::Even, 1)] {
            if (k + extra) % 2 != 0 {
                continue;
            }
            let v = (k + 2 * p + extra) / 2;
            if let Some(c) = sem(v)? {
                let f = odd_even(c.labeling(), parity)?;
                let source = match parity {
                    Parity::Odd => Source::Odd { of: v },
                    Parity::Even => Source::Even { of: v },
                };
                return check_valence(Some(self.certify(f, source)?), k);
            }
        }
        if let Some(c) = sem(k)? {
            return Ok(Some(c));
        }
        if let Some(v) = (3 * (2 * p + 1)).checked_sub(k) {
            if let Some(c) = sem(v)? {
                let f = em_complement(c.labeling());
                return check_valence(Some(self.certify(f, Source::EmComplement { of: v })?), k);
            }
        }
        Ok(None)
    }

    pub fn labeling(&self, k: usize, mode: Mode) -> Result<Option<Certificate>> {
        match mode {
            Mode::Sem => self.sem_labeling(k),
            Mode::Em => self.em_labeling(k),
        }
    }

    /// Attempts every valence of `I_G` or `J_G` in parallel; edge-magic
    /// labelings are derived from one pass over `I_G`.
    pub fn cover(&self, mode: Mode) -> Result<ValenceCover> {
        let sem_interval = self.sem_interval();
        let sem: BTreeMap<usize, Certificate> = sem_interval
            .iter()
            .into_par_iter()
            .map(|k| self.sem_labeling(k).map(|c| c.map(|c| (k, c))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let (interval, results) = match mode {
            Mode::Sem => {
                let results = sem_interval
                    .iter()
                    .map(|k| (k, sem.get(&k).cloned()))
                    .collect();
                (sem_interval, results)
            }
            Mode::Em => {
                let lookup = |v: usize| Ok(sem.get(&v).cloned());
                let interval = self.em_interval();
                let results: Vec<(usize, Option<Certificate>)> = interval
                    .iter()
                    .into_par_iter()
                    .map(|k| self.em_from(k, &lookup).map(|c| (k, c)))
                    .collect::<Result<_>>()?;
                (interval, results)
            }
        };
        let mut achieved = BTreeMap::new();
        let mut missing = Vec::new();
        for (k, c) in results {
            match c {
                Some(c) => {
                    achieved.insert(k, c);
                }
                None => missing.push(k),
            }
        }
        Ok(ValenceCover {
            family: self.family(),
            interval,
            achieved,
            missing,
        })
    }
}

fn check_valence(c: Option<Certificate>, k: usize) -> Result<Option<Certificate>> {
    match c {
        Some(c) if c.valence() != k => Err(Error::Construction(format!(
            "built valence {} instead of {k}",
            c.valence()
        ))),
        c => Ok(c),
    }
}

/// Every valence of `I_G` for `G = C_{pq} ⊙ K̄_n`.
pub fn perfect_sem_cover(p: usize, q: usize, n: usize) -> Result<ValenceCover> {
    CrownConstructor::prime_pair(p, q, n)?.cover(Mode::Sem)
}

/// Every valence of `J_G` for `G = C_{pq} ⊙ K̄_n`.
pub fn perfect_em_cover(p: usize, q: usize, n: usize) -> Result<ValenceCover> {
    CrownConstructor::prime_pair(p, q, n)?.cover(Mode::Em)
}

/// Cover attempt for `C_m ⊙ K̄_n` with `m = p^k q`; unreached valences are
/// reported, not treated as errors.
pub fn prime_power_cover(p: usize, k: u32, q: usize, n: usize, mode: Mode) -> Result<ValenceCover> {
    if p == q || p % 2 == 0 || q % 2 == 0 || !is_prime(p as u64) || !is_prime(q as u64) || k < 1 {
        return invalid(format!(
            "need distinct odd primes and k ≥ 1, got p = {p}, k = {k}, q = {q}"
        ));
    }
    let m = p
        .checked_pow(k)
        .and_then(|pk| pk.checked_mul(q))
        .ok_or_else(|| Error::InvalidInput("modulus overflows".into()))?;
    CrownConstructor::for_crown(m, n)?.cover(mode)
}

/// Crown labelings from star products over edge-magic cycle labelings.
#[derive(Debug, Clone)]
pub struct StarProducts {
    /// Distinct valences, ascending.
    pub valences: Vec<usize>,
    /// One certificate per valence, same order.
    pub certificates: Vec<Certificate>,
}

/// For each cycle labeling `g` and `r = 1..=n+1`, the crown labeling induced by
/// `C_m^+ ⊗ K_{1,n}^l(r)`, of valence `(n+1)(val(g) - 2) + r + 1`.
pub fn star_product_valences(cycle_labelings: &[TotalLabeling], n: usize) -> Result<StarProducts> {
    if n < 1 {
        return invalid("star products need n ≥ 1");
    }
    let mut m = None;
    for g in cycle_labelings {
        if !g.graph().is_cycle() {
            return invalid("star products need labelings of cycles");
        }
        let len = g.graph().order();
        if *m.get_or_insert(len) != len {
            return invalid(format!("mixed cycle lengths {} and {len}", m.unwrap()));
        }
    }
    let members: Vec<FamilyMember> = (1..=n + 1)
        .map(|r| FamilyMember::star_loop(n, r))
        .collect::<Result<_>>()?;
    let mut by_valence = BTreeMap::new();
    for g in cycle_labelings {
        let d = LabeledDigraph::orient_cycle(g.clone())?;
        let m = g.graph().order();
        for (r, member) in (1..=n + 1).zip(&members) {
            let h = ArcAssignment::constant(member.clone(), m);
            let product = induced_product_labeling(&d, &h)?.into_labeling();
            let expected = (n + 1) * (g.valence() - 2) + r + 1;
            if product.valence() != expected {
                return Err(Error::Construction(format!(
                    "star product valence {} differs from {expected}",
                    product.valence()
                )));
            }
            if by_valence.contains_key(&expected) {
                continue;
            }
            let source = Source::StarProduct {
                cycle_valence: g.valence(),
                r,
            };
            let cert = Certificate::new(Family::Crown { m, n }, product, source)?;
            by_valence.insert(expected, cert);
        }
    }
    Ok(StarProducts {
        valences: by_valence.keys().copied().collect(),
        certificates: by_valence.into_values().collect(),
    })
}

/// `(2-adic exponent, sum of odd prime exponents)`.
fn exponent_split(m: usize) -> (u32, u32) {
    factorize(m as u64).into_iter().fold(
        (0, 0),
        |(two, odd), (p, e)| {
            if p == 2 {
                (e, odd)
            } else {
                (two, odd + e)
            }
        },
    )
}

/// Guaranteed number of distinct edge-magic valences of `C_m ⊙ K̄_n`.
pub fn crown_valence_lower_bound(m: usize, n: usize) -> Result<usize> {
    if m < 3 || n < 1 {
        return invalid(format!("need m ≥ 3 and n ≥ 1, got m = {m}, n = {n}"));
    }
    Ok(cycle_valence_lower_bound(m)? * (n + 1))
}

/// Guaranteed number of distinct edge-magic valences of `C_m`.
pub fn cycle_valence_lower_bound(m: usize) -> Result<usize> {
    if m < 3 {
        return invalid(format!("need m ≥ 3, got {m}"));
    }
    let (two, odd) = exponent_split(m);
    let extra = match two {
        1 => 0,
        _ => 1,
    };
    Ok((odd + extra) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_crown;
    use crate::graph::CrownSpec;
    use crate::labeling::{canonical_cycle, cycle_graph, extend_sem, star_loop_graph, verify};

    fn crown(m: usize, n: usize) -> Graph {
        build_crown(CrownSpec::new(m, n).unwrap(), Sign::Plus)
            .unwrap()
            .underlying()
    }

    #[test]
    fn interval_examples() {
        let g = crown(15, 1);
        assert_eq!(sem_interval(&g).unwrap().to_string(), "[69, 84]");
        assert_eq!(em_interval(&g).unwrap().to_string(), "[69, 114]");
        assert_eq!(sem_interval(&crown(3, 1)).unwrap().to_string(), "[15, 18]");
        let star = star_loop_graph(3, 1).unwrap();
        assert_eq!(sem_interval(&star).unwrap().to_string(), "[10, 13]");
        assert_eq!(em_interval(&star).unwrap().to_string(), "[10, 17]");
        assert_eq!(
            em_interval(&cycle_graph(5).unwrap()).unwrap().to_string(),
            "[14, 19]"
        );
    }

    #[test]
    fn intervals_match_closed_forms() {
        for m in (3..=45).step_by(2) {
            for n in 1..=4 {
                let g = crown(m, n);
                assert_eq!(sem_interval(&g).unwrap(), crown_sem_interval(m, n).unwrap());
                assert_eq!(em_interval(&g).unwrap(), crown_em_interval(m, n).unwrap());
            }
        }
    }

    #[test]
    fn sem_cover_3_5_1() {
        let cover = perfect_sem_cover(3, 5, 1).unwrap();
        assert!(cover.is_perfect());
        assert_eq!(
            cover.achieved.keys().copied().collect::<Vec<_>>(),
            (69..=84).collect::<Vec<_>>()
        );
        let c71 = &cover.achieved[&71];
        assert!(matches!(
            c71.source(),
            Source::Rescue {
                outer: 5,
                inner: 3,
                r: 3,
                sign: Sign::Plus,
                ..
            }
        ));
        assert_eq!(
            cover.achieved[&82].source(),
            Source::SemComplement { of: 71 }
        );
    }

    #[test]
    fn em_cover_3_5_1() {
        let cover = perfect_em_cover(3, 5, 1).unwrap();
        assert!(cover.is_perfect());
        assert_eq!(cover.achieved.len(), 46);
        assert_eq!(cover.achieved[&76].source(), Source::Odd { of: 69 });
        assert_eq!(
            cover.achieved[&114].source(),
            Source::EmComplement { of: 69 }
        );
        for (&k, c) in &cover.achieved {
            let again = verify(c.labeling().graph(), &c.labeling().raw()).unwrap();
            assert_eq!(again.valence(), k);
        }
    }

    #[test]
    fn rescue_swaps_roles_when_beta_side_is_positive() {
        // 3·(-2) + 7·1 = 1: x = 7, so 7 is the inner cycle.
        let cover = perfect_sem_cover(3, 7, 1).unwrap();
        assert!(cover.is_perfect());
        let k = crown_sem_interval(21, 1).unwrap().lo + 4;
        assert!(matches!(
            cover.achieved[&k].source(),
            Source::Rescue {
                outer: 3,
                inner: 7,
                ..
            }
        ));
    }

    #[test]
    fn prime_modulus_needs_no_rescue() {
        let c = CrownConstructor::for_crown(7, 2).unwrap();
        assert!(!c.is_prime_pair());
        let cover = c.cover(Mode::Sem).unwrap();
        assert!(cover.is_perfect());
        assert!(cover
            .achieved
            .values()
            .all(|c| matches!(c.source(), Source::Canonical { .. })));
    }

    #[test]
    fn star_product_examples() {
        let f = extend_sem(&canonical_cycle(5).unwrap()).unwrap();
        assert_eq!(f.valence(), 14);
        let out = star_product_valences(std::slice::from_ref(&f), 2).unwrap();
        assert_eq!(out.valences, vec![38, 39, 40]);
        let f15 = em_complement(&f);
        assert_eq!(f15.valence(), 19);
        let out = star_product_valences(&[f.clone(), f15], 1).unwrap();
        assert_eq!(out.valences, vec![26, 27, 36, 37]);
        assert!(star_product_valences(std::slice::from_ref(&f), 0).is_err());
        let f3 = extend_sem(&canonical_cycle(3).unwrap()).unwrap();
        assert!(star_product_valences(&[f, f3], 1).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(crown_valence_lower_bound(15, 2).unwrap(), 9);
        assert_eq!(crown_valence_lower_bound(12, 1).unwrap(), 4);
        assert_eq!(crown_valence_lower_bound(6, 1).unwrap(), 2);
        assert_eq!(cycle_valence_lower_bound(45).unwrap(), 4);
        assert_eq!(cycle_valence_lower_bound(8).unwrap(), 1);
        assert_eq!(cycle_valence_lower_bound(10).unwrap(), 1);
        assert!(crown_valence_lower_bound(2, 1).is_err());
    }
}
