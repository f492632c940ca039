//! Acceptance checks, one line per criterion. Runs without the libtest harness
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use magic_crowns::arithmetic::{conflict_pair, conflict_values, exceptional_r, gcd, is_prime};
use magic_crowns::certificate::Source;
use magic_crowns::coverage::{
    crown_em_interval, crown_sem_interval, crown_valence_lower_bound, cycle_valence_lower_bound,
    em_interval, perfect_em_cover, perfect_sem_cover, sem_interval, star_product_valences,
    CrownConstructor, Mode, ValenceCover,
};
use magic_crowns::graph::{build_crown, crown_shape, CrownSpec, Graph, Sign};
use magic_crowns::labeling::{
    cycle_graph, em_complement, odd_even, sem_complement, star_loop_graph, Parity,
};
use magic_crowns::oracle::{brute_em_labelings, brute_em_spectrum, brute_sem_spectrum, Guard};
use magic_crowns::product::{induced_product_labeling, ArcAssignment, FamilyMember};
use magic_crowns::translation::{canonical_core_step, translated_labeling};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const COVER_TIME_LIMIT: Duration = Duration::from_secs(10);
const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(120);
const RANDOM_CASES: usize = 1200;
const SEED: u64 = 0x5eed_c0de;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn crown(m: usize, n: usize) -> Graph {
    build_crown(CrownSpec::new(m, n).unwrap(), Sign::Plus)
        .unwrap()
        .underlying()
}

fn grid() -> Vec<(usize, usize, usize)> {
    let primes = [3, 5, 7, 11];
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q <= 143 {
                out.extend((1..=3).map(|n| (p, q, n)));
            }
        }
    }
    out
}

fn check_cover(
    cover: &ValenceCover,
    expected: (usize, usize),
    mode: Mode,
) -> Result<usize, String> {
    ensure(cover.missing.is_empty(), || {
        format!("{}: missing {:?}", cover.family, cover.missing)
    })?;
    ensure((cover.interval.lo, cover.interval.hi) == expected, || {
        format!(
            "{}: interval {} differs from the closed form",
            cover.family, cover.interval
        )
    })?;
    for (&k, cert) in &cover.achieved {
        let back = cert
            .to_document()
            .verify()
            .map_err(|e| format!("{}: {e}", cover.family))?;
        ensure(back.valence() == k, || {
            format!(
                "{}: certificate {k} re-verifies as {}",
                cover.family,
                back.valence()
            )
        })?;
        if mode == Mode::Sem {
            ensure(back.labeling().is_super(), || {
                format!("{}: {k} is not super", cover.family)
            })?;
        }
    }
    Ok(cover.achieved.len())
}

fn perfect_super_coverage() -> Check {
    let start = Instant::now();
    let mut certs = 0;
    for (p, q, n) in grid() {
        let cover = perfect_sem_cover(p, q, n).map_err(|e| e.to_string())?;
        let i = crown_sem_interval(p * q, n).unwrap();
        certs += check_cover(&cover, (i.lo, i.hi), Mode::Sem)?;
        ensure(
            i.lo == (3 + 5 * p * q) / 2 + 2 * p * q * n && i.hi == i.lo + p * q * n,
            || "closed form".into(),
        )?;
    }
    let reference = perfect_sem_cover(3, 5, 1).map_err(|e| e.to_string())?;
    let keys: Vec<usize> = reference.achieved.keys().copied().collect();
    ensure(keys == (69..=84).collect::<Vec<_>>(), || {
        format!("(3,5,1) gave {keys:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < COVER_TIME_LIMIT, || format!("took {elapsed:.2?}"))?;
    Ok(format!(
        "{} instances, {certs} certificates re-verified, (3,5,1) = 69..84, {elapsed:.2?}",
        grid().len()
    ))
}

fn perfect_edge_magic_coverage() -> Check {
    let start = Instant::now();
    let mut certs = 0;
    for (p, q, n) in grid() {
        let cover = perfect_em_cover(p, q, n).map_err(|e| e.to_string())?;
        let j = crown_em_interval(p * q, n).unwrap();
        certs += check_cover(&cover, (j.lo, j.hi), Mode::Em)?;
    }
    let reference = perfect_em_cover(3, 5, 1).map_err(|e| e.to_string())?;
    let keys: Vec<usize> = reference.achieved.keys().copied().collect();
    ensure(keys == (69..=114).collect::<Vec<_>>(), || {
        format!("(3,5,1) gave {keys:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < COVER_TIME_LIMIT, || format!("took {elapsed:.2?}"))?;
    Ok(format!(
        "{} instances, {certs} certificates re-verified, (3,5,1) = 46 valences, {elapsed:.2?}",
        grid().len()
    ))
}

fn constructive(m: usize, n: usize, mode: Mode) -> Result<BTreeSet<usize>, String> {
    let c = CrownConstructor::for_crown(m, n).map_err(|e| e.to_string())?;
    let cover = c.cover(mode).map_err(|e| e.to_string())?;
    Ok(cover.achieved.keys().copied().collect())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let sem3: BTreeSet<usize> = brute_sem_spectrum(&crown(3, 1), Guard::SEM_DEFAULT)
        .map_err(|e| e.to_string())?
        .spectrum
        .into_iter()
        .collect();
    ensure(sem3 == (15..=18).collect(), || {
        format!("C3⊙K1 sem spectrum {sem3:?}")
    })?;
    ensure(constructive(3, 1, Mode::Sem)? == sem3, || {
        "C3⊙K1 sem mismatch".into()
    })?;

    let em3: BTreeSet<usize> = brute_em_spectrum(&crown(3, 1), Guard::EM_DEFAULT)
        .map_err(|e| e.to_string())?
        .spectrum
        .into_iter()
        .collect();
    ensure(em3 == (15..=24).collect(), || {
        format!("C3⊙K1 em spectrum {em3:?}")
    })?;
    ensure(constructive(3, 1, Mode::Em)? == em3, || {
        "C3⊙K1 em mismatch".into()
    })?;

    let report = brute_sem_spectrum(&crown(5, 1), Guard::SEM_DEFAULT).map_err(|e| e.to_string())?;
    ensure(
        report.search_space_size == 3_628_800 && report.exhaustive,
        || "C5⊙K1 not exhaustive over 10!".into(),
    )?;
    let sem5: BTreeSet<usize> = report.spectrum.into_iter().collect();
    ensure(constructive(5, 1, Mode::Sem)? == sem5, || {
        format!("C5⊙K1 sem spectrum {sem5:?}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_TIME_LIMIT, || {
        format!("took {elapsed:.2?}")
    })?;
    Ok(format!(
        "C3⊙K1 sem {{15..18}}, em [15,24], C5⊙K1 sem {sem5:?}, {elapsed:.2?}"
    ))
}

fn looped_stars() -> Check {
    for n in 1..=5 {
        let g = star_loop_graph(n, 1).unwrap();
        let sem = brute_sem_spectrum(&g, Guard::SEM_DEFAULT)
            .map_err(|e| e.to_string())?
            .spectrum;
        let em = brute_em_spectrum(&g, Guard::EM_DEFAULT)
            .map_err(|e| e.to_string())?
            .spectrum;
        let i = sem_interval(&g).unwrap();
        let j = em_interval(&g).unwrap();
        ensure(
            sem == (2 * n + 4..=3 * n + 4).collect::<Vec<_>>() && sem.len() == n + 1,
            || format!("n = {n}: σ = {sem:?}"),
        )?;
        ensure((i.lo, i.hi) == (2 * n + 4, 3 * n + 4), || {
            format!("n = {n}: I = {i}")
        })?;
        ensure(
            em == (2 * n + 4..=4 * n + 5).collect::<Vec<_>>() && em.len() == 2 * n + 2,
            || format!("n = {n}: τ = {em:?}"),
        )?;
        ensure((j.lo, j.hi) == (2 * n + 4, 4 * n + 5), || {
            format!("n = {n}: J = {j}")
        })?;
    }
    Ok("σ = I and τ = J = [2n+4, 4n+5] for n = 1..5".into())
}

fn formula_invariants() -> Check {
    let mut rng = StdRng::seed_from_u64(SEED);
    let odd = |rng: &mut StdRng, lo: usize, hi: usize| 2 * rng.gen_range(lo / 2..=hi / 2) + 1;
    let sign = |rng: &mut StdRng| {
        if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    for case in 0..RANDOM_CASES {
        let outer = odd(&mut rng, 3, 15);
        let inner = odd(&mut rng, 3, 11);
        let d = FamilyMember::canonical_cycle(outer, sign(&mut rng))
            .unwrap()
            .as_labeled();
        let family = vec![
            FamilyMember::canonical_cycle(inner, Sign::Plus).unwrap(),
            FamilyMember::canonical_cycle(inner, Sign::Minus).unwrap(),
        ];
        let choice = (0..outer).map(|_| rng.gen_range(0..2)).collect();
        let h = ArcAssignment::new(family, choice).unwrap();
        let prod = induced_product_labeling(&d, &h).map_err(|e| format!("case {case}: {e}"))?;
        let k = (inner + 3) / 2;
        ensure(
            prod.labeling().valence() == inner * (d.labeling().valence() - 3) + k + inner,
            || format!("case {case}: product valence"),
        )?;

        let m = odd(&mut rng, 3, 31);
        let n = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=m * n + 1);
        let s = sign(&mut rng);
        let g = FamilyMember::canonical_cycle(m, Sign::Plus).unwrap();
        let base = translated_labeling(&g, n, s, 1).unwrap().labeling;
        let f = translated_labeling(&g, n, s, r).unwrap().labeling;
        ensure(f.valence() - base.valence() == r - 1, || {
            format!("case {case}: shift law")
        })?;

        let (p, q) = f.order_size();
        ensure(
            f.valence() + em_complement(&f).valence() == 3 * (p + q + 1),
            || format!("case {case}: complement"),
        )?;
        let c = sem_complement(&f).map_err(|e| e.to_string())?;
        ensure(f.valence() + c.valence() == 4 * p + q + 3, || {
            format!("case {case}: super complement")
        })?;
        let o = odd_even(&f, Parity::Odd).map_err(|e| e.to_string())?;
        let e = odd_even(&f, Parity::Even).map_err(|e| e.to_string())?;
        ensure(
            o.valence() == 2 * f.valence() - 2 * p - 2
                && e.valence() == 2 * f.valence() - 2 * p - 1,
            || format!("case {case}: odd/even"),
        )?;
    }
    Ok(format!(
        "{RANDOM_CASES} random cases, 5 identities each, seed {SEED:#x}"
    ))
}

fn prime_pairs(limit: u64) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = (3..limit).filter(|&p| is_prime(p)).collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p * q <= limit {
                out.push((p, q));
            }
        }
    }
    out
}

fn exceptional_hamiltonicity() -> Check {
    let mut checked = 0;
    for (p, q) in prime_pairs(143) {
        let m = (p * q) as usize;
        for n in 1..=2 {
            let c = CrownConstructor::prime_pair(p as usize, q as usize, n)
                .map_err(|e| e.to_string())?;
            for r in exceptional_r(p, q, n as u64).map_err(|e| e.to_string())? {
                let t = r as usize - 1;
                let cert = c
                    .sem_at_shift(t)
                    .map_err(|e| format!("({p},{q},{n}) r = {r}: {e}"))?
                    .ok_or_else(|| format!("({p},{q},{n}) r = {r}: nothing built"))?;
                ensure(
                    matches!(
                        cert.source(),
                        Source::Rescue { .. } | Source::SemComplement { .. }
                    ),
                    || format!("({p},{q},{n}) r = {r}: built from {}", cert.source()),
                )?;
                let shape = crown_shape(cert.labeling().graph()).map_err(|e| e.to_string())?;
                ensure(shape.single_cycle && shape.cycle_lengths == vec![m], || {
                    format!("({p},{q},{n}) r = {r}: cycles {:?}", shape.cycle_lengths)
                })?;
                checked += 1;
            }
        }
    }
    let mut predicted = 0;
    for m in (3..=45).step_by(2) {
        let g = FamilyMember::canonical_cycle(m, Sign::Plus).unwrap();
        for s in [Sign::Plus, Sign::Minus] {
            for r in 1..=2 * m + 1 {
                let res = translated_labeling(&g, 2, s, r).map_err(|e| e.to_string())?;
                let step = canonical_core_step(m, s, r);
                ensure(
                    res.single_cycle == (gcd(step as u64, m as u64) == 1),
                    || format!("m = {m}, r = {r}, {s}: gcd criterion"),
                )?;
                predicted += 1;
            }
        }
    }
    Ok(format!(
        "{checked} exceptional shifts Hamiltonian, gcd criterion exact on {predicted} translations"
    ))
}

fn arithmetic_kernel() -> Check {
    let scan = |m: u64| -> Vec<u64> {
        (2..m)
            .filter(|&y| gcd(y, m) != 1 && gcd(y - 1, m) != 1)
            .collect()
    };
    let pairs = prime_pairs(200);
    for &(p, q) in &pairs {
        let (x, y) = conflict_pair(p, q).map_err(|e| e.to_string())?;
        ensure(scan(p * q) == vec![x, y], || {
            format!("({p},{q}): {:?} vs ({x},{y})", scan(p * q))
        })?;
    }
    let mut lifts = 0;
    for (p, q) in prime_pairs(500)
        .into_iter()
        .flat_map(|(a, b)| [(a, b), (b, a)])
    {
        let mut k = 1;
        while p.pow(k) * q <= 500 {
            let values = conflict_values(p, k, q).map_err(|e| e.to_string())?;
            ensure(values.len() as u64 == 2 * p.pow(k - 1), || {
                format!("({p},{k},{q}) length")
            })?;
            ensure(values == scan(p.pow(k) * q), || {
                format!("({p},{k},{q}) scan")
            })?;
            lifts += 1;
            k += 1;
        }
    }
    Ok(format!(
        "{} conflict pairs match the scan, {lifts} p^k q lengths equal 2p^(k-1)",
        pairs.len()
    ))
}

fn section_four_counts() -> Check {
    let mut lines = Vec::new();
    for m in [6, 10, 12, 14] {
        let g = cycle_graph(m).unwrap();
        let needed = cycle_valence_lower_bound(m).unwrap();
        let j = em_interval(&g).unwrap();
        let mut inputs = Vec::new();
        for k in j.iter() {
            if inputs.len() > needed {
                break;
            }
            inputs.extend(
                brute_em_labelings(&g, k, 1, Guard::unlimited()).map_err(|e| e.to_string())?,
            );
        }
        for n in 1..=2 {
            let out = star_product_valences(&inputs, n).map_err(|e| e.to_string())?;
            for (c, &k) in out.certificates.iter().zip(&out.valences) {
                let back = c.to_document().verify().map_err(|e| e.to_string())?;
                ensure(back.valence() == k, || format!("m = {m}: certificate {k}"))?;
            }
            let bound = crown_valence_lower_bound(m, n).unwrap();
            ensure(out.valences.len() >= bound, || {
                format!(
                    "m = {m}, n = {n}: {} valences < bound {bound}",
                    out.valences.len()
                )
            })?;
            lines.push(format!("({m},{n}) {}≥{bound}", out.valences.len()));
        }
    }
    Ok(lines.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("perfect super edge-magic coverage", perfect_super_coverage),
        ("perfect edge-magic coverage", perfect_edge_magic_coverage),
        ("oracle equivalence", oracle_equivalence),
        ("looped-star spectra", looped_stars),
        ("formula invariants", formula_invariants),
        ("exceptional-shift Hamiltonicity", exceptional_hamiltonicity),
        ("arithmetic kernel", arithmetic_kernel),
        ("star-product valence counts", section_four_counts),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
