//! The five-parameter triangle engine and its three public faces.
//!
//! One recurrence shape drives two families.  The *generalized Bessel*
//! triangle satisfies
//!
//! ```text
//! T[n][k] = c T[n-1][k-1] + (ab(n-1) - bk + abd + c*lam) T[n-1][k]
//!                         - b*lam*(k+1) T[n-1][k+1]
//! ```
//!
//! with `T[0][0] = 1`, and is the exponential Riordan pair
//! `((1-abt)^{-d} e^{lam*f}, f)` for `f = (c/b)(1 - (1-abt)^{1/a})`.  The
//! *generalized Lah* triangle is the same object under the substitution
//! `(a, b) -> (-a, -b)` (which flips the two sign-carrying terms and turns
//! `f` into `(c/b)((1-abt)^{-1/a} - 1)`), so every Lah-side routine here
//! simply delegates with negated arguments — including the `a = 0`
//! degeneration, where the inner power becomes an exponential and the Lah
//! triangle at `(0, 1, 1, d, 0)` is the Stirling pair `(1, e^t - 1)`.
//! Classical specializations of the Lah side at `lam = 0, c = 1` include the
//! Stirling numbers of the second kind (`a = 0`), the signless Lah numbers
//! (`a = b = 1, d = 0`), and the degenerate/weighted Stirling and
//! associated-Lah variants obtained by letting `a, b, d` range over other
//! rational bindings; none of those carry frozen values here beyond what the
//! cross-route tests pin down.
//!
//! Independently, the *small-block partition* triangle counts set partitions
//! of `[n]` into `k` blocks of size at most three, weighting each block by
//! `a`, `2b`, `6c` according to its size; it is the cubic Riordan pair
//! `(1, at + bt^2 + ct^3)` and has a closed form and an exhaustive oracle.
//!
//! Every routine takes polynomial parameters (constants embed via the empty
//! variable set); symbolic parameters must share one variable set.  Riordan
//! constructions additionally need `a` and `d` rational, since they sit in
//! the exponent of `(1 - abt)`.

use std::collections::HashMap;

use crate::arith::{factorial, rat, Poly, Rational, Ring};
use crate::matrix::RingMatrix;
use crate::riordan::ExpRiordan;
use crate::series::Series;
use crate::{Error, Result};

/// Generalized Bessel triangle via its two-term recurrence.
pub fn gen_bessel_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_recurrence(a, b, c, d, lam, n, false)
}

/// `k!`-scaled generalized Bessel triangle: same recurrence with weights
/// `ck` and `b*lam` replacing `c` and `b*lam*(k+1)`.
pub fn gen_bessel_scaled_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_recurrence(a, b, c, d, lam, n, true)
}

/// Reciprocal generalized Bessel triangle `T*[n][k] = T[n][n-k]`, built by
/// its own recurrence rather than by reversing rows.
pub fn gen_bessel_reciprocal_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_reciprocal(a, b, c, d, lam, n)
}

/// Generalized Bessel triangle by the expanded closed form
/// `T[n][k] = (1/k!) sum_{j,i} (-1)^{n-i} C(k+j,i) (lam^j/j!) c^{k+j}
/// b^{n-k-j} prod_{s<n} (i - ad - as)`.
pub fn gen_bessel_closed(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_closed(a, b, c, d, lam, n)
}

/// The Riordan pair `((1-abt)^{-d} e^{lam*f}, f)` with
/// `f = (c/b)(1 - (1-abt)^{1/a})`; at `a = 0` the inner power degenerates to
/// `e^{-bt}`.  `b` must be nonzero (each coefficient of `1 - (1-abt)^{1/a}`
/// is structurally divisible by `b`, which is how the quotient stays
/// polynomial).
pub fn gen_bessel_pair(
    a: &Rational,
    d: &Rational,
    b: &Poly,
    c: &Poly,
    lam: &Poly,
    order: usize,
) -> Result<ExpRiordan<Poly>> {
    if b.is_zero() {
        return Err(Error::ParameterDomain(
            "b must be nonzero for the Riordan construction".into(),
        ));
    }
    let one = Poly::one();
    let inner = if Ring::is_zero(a) {
        // (1-abt)^{1/a} -> e^{-bt}
        let mut co = vec![Poly::zero(); order + 1];
        co[1] = b.neg();
        Series::from_coeffs(co).exp()?
    } else {
        let mut co = vec![Poly::zero(); order + 1];
        co[0] = one.clone();
        co[1] = b.scale(a).neg();
        Series::from_coeffs(co).pow_rational(&a.recip())?
    };
    let f_times_b = Series::constant(one.clone(), order).sub(&inner);
    let f_over_b: Vec<Poly> = f_times_b
        .coeffs()
        .iter()
        .map(|coef| {
            coef.exact_div(b).ok_or_else(|| {
                Error::Domain("series coefficient not divisible by b".into())
            })
        })
        .collect::<Result<_>>()?;
    let f = Series::from_coeffs(f_over_b).scale(c);
    let g_base = if Ring::is_zero(a) {
        Series::constant(one, order)
    } else {
        let mut co = vec![Poly::zero(); order + 1];
        co[0] = one;
        co[1] = b.scale(a).neg();
        Series::from_coeffs(co).pow_rational(&-d)?
    };
    let g = g_base.mul(&f.scale(lam).exp()?);
    ExpRiordan::new(g, f)
}

/// Generalized Lah triangle: the Bessel recurrence at `(-a, -b)`, i.e.
/// `T[n][k] = c T[n-1][k-1] + (ab(n-1) + bk + abd + c*lam) T[n-1][k]
/// + b*lam*(k+1) T[n-1][k+1]`.
pub fn gen_lah_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_recurrence(&a.neg(), &b.neg(), c, d, lam, n, false)
}

/// `k!`-scaled generalized Lah triangle.
pub fn gen_lah_scaled_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_recurrence(&a.neg(), &b.neg(), c, d, lam, n, true)
}

/// Reciprocal generalized Lah triangle via its stated recurrence
/// `T*[n][k] = c T*[n-1][k] + (ab(n-1) + b(n-k) + abd + c*lam) T*[n-1][k-1]
/// + b*lam*(n-k+1) T*[n-1][k-2]`.
pub fn gen_lah_reciprocal_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_reciprocal(&a.neg(), &b.neg(), c, d, lam, n)
}

/// Generalized Lah triangle by closed form (the Bessel closed form at
/// `(-a, -b)`).
pub fn gen_lah_closed(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    five_param_closed(&a.neg(), &b.neg(), c, d, lam, n)
}

/// The Riordan pair `((1-abt)^{-d} e^{lam*f}, f)` with
/// `f = (c/b)((1-abt)^{-1/a} - 1)`; at `a = 0` this is
/// `(e^{lam*f}, c(e^{bt} - 1)/b)`.
pub fn gen_lah_pair(
    a: &Rational,
    d: &Rational,
    b: &Poly,
    c: &Poly,
    lam: &Poly,
    order: usize,
) -> Result<ExpRiordan<Poly>> {
    gen_bessel_pair(&-a, d, &b.neg(), c, lam, order)
}

/// Checks the total-positivity hypotheses under which the five-parameter
/// propositions are stated: `a` a positive integer (or zero on the Lah
/// side), `ad` a nonnegative integer, `c > 0`, `b != 0`.  Construction
/// routines deliberately do not call this — it guards *claims*, not
/// arithmetic.
pub fn five_param_domain_ok(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    allow_zero_a: bool,
) -> Result<()> {
    let fail = |msg: String| Err(Error::ParameterDomain(msg));
    if !a.is_integer() || (Ring::is_zero(a) && !allow_zero_a) || a < &rat(0) {
        let kind = if allow_zero_a { "nonnegative" } else { "positive" };
        return fail(format!("a must be a {kind} integer, got {a}"));
    }
    let ad = a * d;
    if !ad.is_integer() || ad < rat(0) {
        return fail(format!("ad must be a nonnegative integer, got {ad}"));
    }
    if c <= &rat(0) {
        return fail(format!("c must be positive, got {c}"));
    }
    if Ring::is_zero(b) {
        return fail("b must be nonzero".into());
    }
    Ok(())
}

fn five_param_recurrence(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
    scaled: bool,
) -> RingMatrix<Poly> {
    let ab = a.mul(b);
    let abd = ab.mul(d);
    let clam = c.mul(lam);
    let blam = b.mul(lam);
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, Poly::one());
    for r in 1..=n {
        for k in 0..=r {
            let mut acc = Poly::zero();
            if k >= 1 {
                let w = if scaled { c.scale(&rat(k as i64)) } else { c.clone() };
                acc = acc.add(&w.mul(m.get(r - 1, k - 1)));
            }
            let mid = ab
                .scale(&rat((r - 1) as i64))
                .sub(&b.scale(&rat(k as i64)))
                .add(&abd)
                .add(&clam);
            acc = acc.add(&mid.mul(m.get(r - 1, k)));
            if k + 1 <= n {
                let w = if scaled { blam.clone() } else { blam.scale(&rat((k + 1) as i64)) };
                acc = acc.sub(&w.mul(m.get(r - 1, k + 1)));
            }
            m.set(r, k, acc);
        }
    }
    m
}

fn five_param_reciprocal(
    a: &Poly,
    b: &Poly,
    c: &Poly,
    d: &Poly,
    lam: &Poly,
    n: usize,
) -> RingMatrix<Poly> {
    let ab = a.mul(b);
    let abd = ab.mul(d);
    let clam = c.mul(lam);
    let blam = b.mul(lam);
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, Poly::one());
    for r in 1..=n {
        for k in 0..=r {
            let mut acc = c.mul(m.get(r - 1, k));
            if k >= 1 {
                let mid = ab
                    .scale(&rat((r - 1) as i64))
                    .sub(&b.scale(&rat((r - k) as i64)))
                    .add(&abd)
                    .add(&clam);
                acc = acc.add(&mid.mul(m.get(r - 1, k - 1)));
            }
            if k >= 2 {
                let w = blam.scale(&rat((r - k + 1) as i64));
                acc = acc.sub(&w.mul(m.get(r - 1, k - 2)));
            }
            m.set(r, k, acc);
        }
    }
    m
}

fn five_param_closed(a: &Poly, b: &Poly, c: &Poly, d: &Poly, lam: &Poly, n: usize) -> RingMatrix<Poly> {
    let ad = a.mul(d);
    let b_pow = powers(b, n);
    let c_pow = powers(c, n);
    let lam_pow = powers(lam, n);
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    for r in 0..=n {
        // prods[i] = prod_{s=0}^{r-1} (i - ad - a s)
        let mut prods = Vec::with_capacity(r + 1);
        for i in 0..=r as i64 {
            let mut p = Poly::one();
            for s in 0..r as i64 {
                let factor = Poly::from_rational(&rat(i)).sub(&ad).sub(&a.scale(&rat(s)));
                p = p.mul(&factor);
            }
            prods.push(p);
        }
        for k in 0..=r {
            let mut acc = Poly::zero();
            for j in 0..=r - k {
                for i in 0..=k + j {
                    let mut coef = Rational::new(
                        crate::arith::binomial((k + j) as i64, i as i64),
                        factorial(k) * factorial(j),
                    );
                    if (r + i) % 2 == 1 {
                        coef = -coef;
                    }
                    let term = b_pow[r - k - j]
                        .mul(&c_pow[k + j])
                        .mul(&lam_pow[j])
                        .mul(&prods[i])
                        .scale(&coef);
                    acc = acc.add(&term);
                }
            }
            m.set(r, k, acc);
        }
    }
    m
}

fn powers(p: &Poly, n: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Poly::one());
    for e in 1..=n {
        let prev: &Poly = &out[e - 1];
        out.push(prev.mul(p));
    }
    out
}

/// Small-block partition triangle by recurrence: classify the block holding
/// the last element as a singleton, a pair (`n-1` partners), or a triple
/// (`(n-1)(n-2)` ordered partner choices).
pub fn blocks3_recurrence(a: &Poly, b: &Poly, c: &Poly, n: usize) -> RingMatrix<Poly> {
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, Poly::one());
    for r in 1..=n {
        for k in 1..=r {
            let mut acc = a.mul(m.get(r - 1, k - 1));
            if r >= 2 {
                let w = b.scale(&rat(2 * (r as i64 - 1)));
                acc = acc.add(&w.mul(m.get(r - 2, k - 1)));
            }
            if r >= 3 {
                let w = c.scale(&rat(3 * (r as i64 - 1) * (r as i64 - 2)));
                acc = acc.add(&w.mul(m.get(r - 3, k - 1)));
            }
            m.set(r, k, acc);
        }
    }
    m
}

/// Small-block partition triangle by closed form
/// `(n!/k!) sum_i C(k,i) C(i, n-k-i) a^{k-i} c^{n-k-i} b^{2i-n+k}`.
pub fn blocks3_closed(a: &Poly, b: &Poly, c: &Poly, n: usize) -> RingMatrix<Poly> {
    let a_pow = powers(a, n);
    let b_pow = powers(b, n);
    let c_pow = powers(c, n);
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    for r in 0..=n {
        for k in 0..=r {
            let mut acc = Poly::zero();
            for i in 0..=k {
                if r < k + i || r > k + 2 * i {
                    continue; // needs 0 <= r-k-i <= i
                }
                let coef = Rational::new(
                    crate::arith::binomial(k as i64, i as i64)
                        * crate::arith::binomial(i as i64, (r - k - i) as i64)
                        * factorial(r),
                    factorial(k),
                );
                let term = a_pow[k - i]
                    .mul(&c_pow[r - k - i])
                    .mul(&b_pow[2 * i + k - r])
                    .scale(&coef);
                acc = acc.add(&term);
            }
            m.set(r, k, acc);
        }
    }
    m
}

/// The cubic Riordan pair `(1, at + bt^2 + ct^3)`.
pub fn blocks3_pair(a: &Poly, b: &Poly, c: &Poly, order: usize) -> Result<ExpRiordan<Poly>> {
    let mut co = vec![Poly::zero(); order + 1];
    if order >= 1 {
        co[1] = a.clone();
    }
    if order >= 2 {
        co[2] = b.clone();
    }
    if order >= 3 {
        co[3] = c.clone();
    }
    ExpRiordan::new(Series::constant(Poly::one(), order), Series::from_coeffs(co))
}

/// Exhaustive oracle: enumerates every set partition of `[n]` with block
/// sizes at most three and accumulates the weight `a`/`2b`/`6c` per block by
/// size, bucketed by block count.  Capped at `n <= 10`.
pub fn blocks3_oracle(a: &Poly, b: &Poly, c: &Poly, n: usize) -> Result<RingMatrix<Poly>> {
    if n > 10 {
        return Err(Error::Domain(format!(
            "oracle enumeration capped at 10 elements, asked for {n}"
        )));
    }
    let w1 = a.clone();
    let w2 = b.scale(&rat(2));
    let w3 = c.scale(&rat(6));
    let mut memo: HashMap<u32, Vec<Poly>> = HashMap::new();
    let mut m = RingMatrix::zeros(n + 1, n + 1);
    m.set(0, 0, Poly::one());
    for r in 1..=n {
        let counts = weighted_partitions(((1u32 << r) - 1) as u32, &w1, &w2, &w3, &mut memo);
        for (k, weight) in counts.iter().enumerate() {
            if k <= n {
                m.set(r, k, weight.clone());
            }
        }
    }
    Ok(m)
}

/// Weighted counts by block count for partitions of the element set `mask`;
/// entry `k` of the result is the total weight over partitions into `k`
/// blocks.
fn weighted_partitions(
    mask: u32,
    w1: &Poly,
    w2: &Poly,
    w3: &Poly,
    memo: &mut HashMap<u32, Vec<Poly>>,
) -> Vec<Poly> {
    if mask == 0 {
        return vec![Poly::one()];
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let anchor = mask.trailing_zeros();
    let rest = mask & !(1 << anchor);
    let others: Vec<u32> = (0..32).filter(|i| rest & (1 << i) != 0).collect();
    let mut out: Vec<Poly> = Vec::new();
    let absorb = |sub_mask: u32, weight: &Poly, out: &mut Vec<Poly>, memo: &mut HashMap<u32, Vec<Poly>>| {
        let inner = weighted_partitions(sub_mask, w1, w2, w3, memo);
        for (k, v) in inner.iter().enumerate() {
            let idx = k + 1;
            if out.len() <= idx {
                out.resize(idx + 1, Poly::zero());
            }
            out[idx] = out[idx].add(&v.mul(weight));
        }
    };
    absorb(rest, w1, &mut out, memo);
    for (pos, &i) in others.iter().enumerate() {
        absorb(rest & !(1 << i), w2, &mut out, memo);
        for &j in &others[pos + 1..] {
            absorb(rest & !(1 << i) & !(1 << j), w3, &mut out, memo);
        }
    }
    memo.insert(mask, out.clone());
    out
}
