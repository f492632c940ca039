//! Number-theoretic kernel: bounded Bézout coefficients, the conflict pair
//! `(x, x')` of a product of two odd primes, its lift to `p^k q`, and the
//! translation shifts at which neither orientation of the canonical cycle
//! closes into a single cycle.

use serde::Serialize;

use crate::error::{invalid, Result};

/// Largest modulus accepted by the kernel; keeps every intermediate within `i64`.
pub const MAX_MODULUS: u64 = 1 << 40;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn gcd_i(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Extended Euclid: `(g, s, t)` with `s a + t b = g`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    (old_r, old_s, old_t)
}

fn check_prime_pair(p: u64, q: u64) -> Result<()> {
    if p == q || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q) {
        return invalid(format!("need two distinct odd primes, got {p} and {q}"));
    }
    match p.checked_mul(q) {
        Some(m) if m <= MAX_MODULUS => Ok(()),
        _ => invalid(format!(
            "{p}·{q} exceeds the supported modulus {MAX_MODULUS}"
        )),
    }
}

/// Bézout data for a pair of distinct odd primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BezoutData {
    pub p: u64,
    pub q: u64,
    pub alpha: i64,
    pub beta: i64,
    /// The positive one of `αp`, `βq`.
    pub x: u64,
    /// `pq - x + 1`.
    pub x_prime: u64,
    /// `(Q+1)/2 - A` where `x = A·P`, `P` the prime dividing `x` and `Q` the other.
    pub alpha_prime: i64,
    /// `(P+3)/2`.
    pub beta_prime: u64,
}

impl BezoutData {
    /// The prime dividing `x` and the other prime, in that order.
    pub fn normalized_primes(&self) -> (u64, u64) {
        if self.alpha > 0 {
            (self.p, self.q)
        } else {
            (self.q, self.p)
        }
    }

    /// The shift `(pq+1)/2 - x`, equal to `P(α'-1) + β' - 1`.
    pub fn base_shift(&self) -> u64 {
        (self.p * self.q + 1) / 2 - self.x
    }
}

/// `αp + βq = 1` with `max(|αp|, |βq|) ≤ (pq+1)/2`.
pub fn bounded_bezout(p: u64, q: u64) -> Result<BezoutData> {
    check_prime_pair(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let (g, s, _) = extended_gcd(pi, qi);
    debug_assert_eq!(g, 1);
    let bound = (pi * qi + 1) / 2;
    let mut alpha = s.rem_euclid(qi);
    if alpha * pi > bound {
        alpha -= qi;
    }
    let beta = (1 - alpha * pi) / qi;
    debug_assert_eq!(alpha * pi + beta * qi, 1);
    debug_assert!((alpha * pi).abs().max((beta * qi).abs()) <= bound);

    let (x, coef, other, divisor) = if alpha * pi > 0 {
        (alpha * pi, alpha, qi, pi)
    } else {
        (beta * qi, beta, pi, qi)
    };
    let x = x as u64;
    Ok(BezoutData {
        p,
        q,
        alpha,
        beta,
        x,
        x_prime: p * q - x + 1,
        alpha_prime: (other + 1) / 2 - coef,
        beta_prime: ((divisor + 3) / 2) as u64,
    })
}

/// The two integers `1 < y < pq` with `gcd(y,pq) ≠ 1` and `gcd(y-1,pq) ≠ 1`,
/// smaller first.
pub fn conflict_pair(p: u64, q: u64) -> Result<(u64, u64)> {
    let b = bounded_bezout(p, q)?;
    Ok((b.x.min(b.x_prime), b.x.max(b.x_prime)))
}

/// All `1 < y < p^k q` with `gcd(y, p^k q) ≠ 1` and `gcd(y-1, p^k q) ≠ 1`,
/// ascending: the values `x + λpq`, `x' + λpq` for `λ < p^{k-1}`.
pub fn conflict_values(p: u64, k: u32, q: u64) -> Result<Vec<u64>> {
    if k < 1 {
        return invalid("exponent must be at least 1");
    }
    let (x, x_prime) = conflict_pair(p, q)?;
    let lifts = p
        .checked_pow(k - 1)
        .filter(|&l| l.checked_mul(p * q).is_some_and(|m| m <= MAX_MODULUS))
        .ok_or_else(|| crate::Error::InvalidInput("modulus too large".into()))?;
    let pq = p * q;
    let mut out: Vec<u64> = (0..lifts)
        .flat_map(|l| [x + l * pq, x_prime + l * pq])
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Both `gcd((m+1)/2 - (r-1), m)` and `gcd((m-1)/2 - (r-1), m)` differ from 1.
pub fn gcd_exception(m: u64, r: u64) -> bool {
    let (mi, t) = (m as i64, r as i64 - 1);
    gcd_i((mi + 1) / 2 - t, mi) != 1 && gcd_i((mi - 1) / 2 - t, mi) != 1
}

/// Translation indices `r ∈ [1, mn+1]` (with `m = pq`) where
/// [`gcd_exception`] holds: `r - 1 ≡ (m+1)/2 - x` or `(m+1)/2 - x' (mod m)`.
pub fn exceptional_r(p: u64, q: u64, n: u64) -> Result<Vec<u64>> {
    if n < 1 {
        return invalid("n must be at least 1");
    }
    let b = bounded_bezout(p, q)?;
    let m = p * q;
    let t0 = b.base_shift();
    let t1 = (m - t0) % m;
    let top = m * n;
    let mut out: Vec<u64> = [t0, t1]
        .into_iter()
        .flat_map(|t| (0..=n).map(move |l| t + l * m))
        .filter(|&t| t <= top)
        .map(|t| t + 1)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
