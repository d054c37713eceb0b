//! Arithmetic in GF(p^m) behind an explicit field context.
//!
//! An element is stored as the integer encoding of its residue polynomial:
//! the residue `d_0 + d_1 X + ... + d_{m-1} X^{m-1}` over F_p is encoded as
//! `d_0 + d_1 p + ... + d_{m-1} p^{m-1}`. All arithmetic goes through a
//! [`FieldCtx`], which fixes the reduction modulus and lookup tables once.
//!
//! The modulus is always the monic irreducible polynomial of degree m whose
//! encoding is smallest, found by scanning encodings upward and testing
//! irreducibility by trial division. This makes every context, and hence
//! every downstream artifact, reproducible from `(p, e, c)` alone.

use std::fmt;
use thiserror::Error;

/// Hard cap on the extension degree m = e*c.
pub const MAX_DEGREE: u32 = 16;

/// Default upper bound on the field size p^m. Raise it with the
/// `GHCODE_MAX_FIELD` environment variable.
pub const DEFAULT_MAX_FIELD: u64 = 1 << 20;

/// Fields up to this size get exp/log tables for multiplication.
const MUL_TABLE_MAX: u64 = 1 << 20;

/// Fields up to this size get a dense addition table.
const ADD_TABLE_MAX: u64 = 1 << 10;

/// Element of GF(p^m), stored as its integer encoding in [0, p^m).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Fe(pub u32);

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degrees must be positive")]
    ZeroDegree,
    #[error("extension degree m = {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(u32),
    #[error("field size {size} exceeds the limit {limit}; set GHCODE_MAX_FIELD to raise it")]
    TooLarge { size: u128, limit: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("integer {n} is divisible by the characteristic {p}")]
    NotCoprime { n: u64, p: u64 },
}

/// Context for GF(p^m) with m = e*c. The split of m into e and c is kept
/// because the curve layer works with q = p^e and the degree-c extension
/// GF(q^c) on top of it.
pub struct FieldCtx {
    p: u64,
    e: u32,
    c: u32,
    m: u32,
    q: u64,
    size: u32,
    modulus: Vec<u32>,
    /// Discrete logs base the stored generator; log[0] is unused.
    log: Vec<u32>,
    /// Generator powers, doubled in length so `exp[log a + log b]` needs no
    /// reduction. Empty when the field is too large for tables.
    exp: Vec<u32>,
    /// Dense addition table for small fields, indexed by a*size + b.
    add_tbl: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("c", &self.c)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Builds GF(p^(e*c)) with the size limit taken from `GHCODE_MAX_FIELD`
/// (default 2^20).
pub fn field_new(p: u64, e: u32, c: u32) -> Result<FieldCtx, FieldError> {
    let limit = std::env::var("GHCODE_MAX_FIELD")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .unwrap_or(DEFAULT_MAX_FIELD);
    FieldCtx::with_limit(p, e, c, limit)
}

impl FieldCtx {
    pub(crate) fn with_limit(p: u64, e: u32, c: u32, limit: u64) -> Result<Self, FieldError> {
        if e == 0 || c == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let m = e * c;
        if m > MAX_DEGREE {
            return Err(FieldError::DegreeTooLarge(m));
        }
        let size_wide = (0..m).try_fold(1u128, |acc, _| {
            let next = acc * p as u128;
            if next > u32::MAX as u128 {
                None
            } else {
                Some(next)
            }
        });
        let size_wide = match size_wide {
            Some(s) if s <= limit as u128 => s,
            _ => {
                let size = (0..m).fold(1u128, |acc, _| acc.saturating_mul(p as u128));
                return Err(FieldError::TooLarge {
                    size,
                    limit: limit.min(u32::MAX as u64),
                });
            }
        };
        let size = size_wide as u32;
        let q = (0..e).fold(1u64, |acc, _| acc * p);

        let modulus = smallest_irreducible(p, m);
        let mut ctx = FieldCtx {
            p,
            e,
            c,
            m,
            q,
            size,
            modulus,
            log: Vec::new(),
            exp: Vec::new(),
            add_tbl: Vec::new(),
        };
        if (size as u64) <= MUL_TABLE_MAX {
            ctx.build_mul_tables();
        }
        if (size as u64) <= ADD_TABLE_MAX {
            ctx.build_add_table();
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The intermediate field order q = p^e.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The field order p^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// The reduction modulus, little-endian coefficients, degree m, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// All field elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size).map(Fe)
    }

    /// True when `other` describes the same field in the same presentation.
    pub fn same_field(&self, other: &FieldCtx) -> bool {
        self.p == other.p && self.e == other.e && self.c == other.c
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.size && b.0 < self.size);
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if !self.add_tbl.is_empty() {
            return Fe(self.add_tbl[(a.0 as usize) * (self.size as usize) + b.0 as usize]);
        }
        self.add_digitwise(a, b)
    }

    fn add_digitwise(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u32;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            if x == 0 && y == 0 {
                break;
            }
            place *= p;
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u32;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.m {
            let d = (p - x % p) % p;
            out += d * place;
            x /= p;
            if x == 0 {
                break;
            }
            place *= p;
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        if !self.log.is_empty() {
            let idx = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
            return Fe(self.exp[idx]);
        }
        self.mul_poly(a, b)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        if !self.log.is_empty() {
            let ord = self.size as usize - 1;
            return Ok(Fe(self.exp[ord - self.log[a.0 as usize] as usize]));
        }
        Ok(self.pow(a, self.size as u64 - 2))
    }

    pub fn pow(&self, x: Fe, n: u64) -> Fe {
        if x.0 == 0 {
            return if n == 0 { Fe(1) } else { Fe(0) };
        }
        let ord = self.size as u64 - 1;
        if ord == 0 {
            return Fe(1);
        }
        let n = n % ord;
        if !self.log.is_empty() {
            let idx = (self.log[x.0 as usize] as u64 * n) % ord;
            return Fe(self.exp[idx as usize]);
        }
        let mut base = x;
        let mut acc = Fe(1);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Power with a signed exponent. Zero cannot be raised to a negative
    /// power.
    pub fn pow_signed(&self, x: Fe, n: i64) -> Result<Fe, FieldError> {
        if x.0 == 0 && n < 0 {
            return Err(FieldError::ZeroInverse);
        }
        if x.0 == 0 {
            return Ok(if n == 0 { Fe(1) } else { Fe(0) });
        }
        let ord = (self.size - 1) as i64;
        if ord == 0 {
            return Ok(Fe(1));
        }
        Ok(self.pow(x, n.rem_euclid(ord) as u64))
    }

    /// The q-power Frobenius iterated k times: x -> x^(q^k).
    pub fn frobenius_q(&self, x: Fe, k: u32) -> Fe {
        let k = k % self.c;
        let exp = (0..k).fold(1u64, |acc, _| acc * self.q);
        self.pow(x, exp)
    }

    /// Partial trace along q-power Frobenius orbits:
    /// `x + x^q + x^(q^2) + ... + x^(q^(k-1))`.
    pub fn tr_partial(&self, x: Fe, k: u32) -> Fe {
        let mut acc = Fe(0);
        let mut cur = x;
        for i in 0..k {
            if i > 0 {
                cur = self.frobenius_q(cur, 1);
            }
            acc = self.add(acc, cur);
        }
        acc
    }

    /// The inverse of the integer n, taken in the prime subfield. Errors
    /// when the characteristic divides n.
    pub fn int_inverse_embedded(&self, n: u64) -> Result<Fe, FieldError> {
        let r = n % self.p;
        if r == 0 {
            return Err(FieldError::NotCoprime { n, p: self.p });
        }
        let inv = pow_mod(r, self.p - 2, self.p);
        Ok(Fe(inv as u32))
    }

    fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        let da = self.enc_digits(a.0);
        let db = self.enc_digits(b.0);
        let p = self.p;
        let m = self.m as usize;
        let mut prod = [0u64; 2 * MAX_DEGREE as usize + 1];
        for (i, &x) in da.iter().enumerate().take(m) {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate().take(m) {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let d = prod[i];
            if d == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &mc) in self.modulus.iter().enumerate().take(m) {
                let pos = i - m + k;
                prod[pos] = (prod[pos] + d * (p - mc as u64)) % p;
            }
        }
        let mut out = 0u32;
        for i in (0..m).rev() {
            out = out * self.p as u32 + prod[i] as u32;
        }
        Fe(out)
    }

    fn enc_digits(&self, mut x: u32) -> [u32; MAX_DEGREE as usize] {
        let mut d = [0u32; MAX_DEGREE as usize];
        let p = self.p as u32;
        for slot in d.iter_mut().take(self.m as usize) {
            *slot = x % p;
            x /= p;
            if x == 0 {
                break;
            }
        }
        d
    }

    fn build_mul_tables(&mut self) {
        let size = self.size as usize;
        if size == 2 {
            self.exp = vec![1, 1];
            self.log = vec![0, 0];
            return;
        }
        let ord = size as u64 - 1;
        let factors = prime_factors(ord);
        let gen = (2..self.size)
            .map(Fe)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&f| self.pow_raw(g, ord / f) != Fe(1))
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * (size - 1)];
        let mut log = vec![0u32; size];
        let mut cur = Fe(1);
        for (i, slot) in exp.iter_mut().take(size - 1).enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_poly(cur, gen);
        }
        debug_assert_eq!(cur, Fe(1));
        for i in size - 1..2 * (size - 1) {
            exp[i] = exp[i - (size - 1)];
        }
        self.exp = exp;
        self.log = log;
    }

    /// Table-free power used while the tables are under construction.
    fn pow_raw(&self, x: Fe, mut n: u64) -> Fe {
        let mut base = x;
        let mut acc = Fe(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            n >>= 1;
        }
        acc
    }

    fn build_add_table(&mut self) {
        let size = self.size as usize;
        let mut tbl = vec![0u32; size * size];
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                tbl[(a as usize) * size + b as usize] =
                    self.add_digitwise(Fe(a), Fe(b)).0;
            }
        }
        self.add_tbl = tbl;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// The monic irreducible polynomial of degree m over F_p with the smallest
/// integer encoding of its low coefficients. Little-endian, length m + 1.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u32> {
    let m = m as usize;
    let mut low = vec![0u32; m];
    loop {
        let mut cand = low.clone();
        cand.push(1);
        if poly_is_irreducible(&cand, p) {
            return cand;
        }
        if !increment_base_p(&mut low, p as u32) {
            unreachable!("irreducible polynomials exist in every degree");
        }
    }
}

/// Adds one to a little-endian base-p digit vector. Returns false on wrap.
fn increment_base_p(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Trial division: f (monic) is irreducible when no monic polynomial of
/// degree 1..=deg(f)/2 divides it.
fn poly_is_irreducible(f: &[u32], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let mut low = vec![0u32; d];
        loop {
            let mut g = low.clone();
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
            if !increment_base_p(&mut low, p as u32) {
                break;
            }
        }
    }
    true
}

/// True when the monic divisor g divides f over F_p.
fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u64) -> bool {
    let dg = g.len() - 1;
    let mut rem: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    for i in (dg..rem.len()).rev() {
        let coef = rem[i];
        if coef == 0 {
            continue;
        }
        rem[i] = 0;
        for (k, &gc) in g.iter().enumerate().take(dg) {
            rem[i - dg + k] = (rem[i - dg + k] + coef * (p - gc as u64)) % p;
        }
    }
    rem.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldCtx {
        field_new(2, 1, 3).unwrap()
    }

    fn gf27() -> FieldCtx {
        field_new(3, 1, 3).unwrap()
    }

    fn gf32() -> FieldCtx {
        field_new(2, 1, 5).unwrap()
    }

    /// Independent irreducibility check over F_2 on bit-packed polynomials,
    /// written without the library's polynomial helpers.
    fn gf2_poly_irreducible(f: u64) -> bool {
        let deg = 63 - f.leading_zeros();
        for g in 2..(1u64 << (deg / 2 + 1)) {
            let dg = 63 - g.leading_zeros();
            if dg == 0 {
                continue;
            }
            let mut r = f;
            while r != 0 {
                let dr = 63 - r.leading_zeros();
                if dr < dg {
                    break;
                }
                r ^= g << (dr - dg);
            }
            if r == 0 {
                return false;
            }
        }
        true
    }

    fn enc_to_poly_bits(coeffs: &[u32]) -> u64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (c as u64) << i)
            .sum()
    }

    #[test]
    fn modulus_gf8_matches_independent_scan() {
        let ctx = gf8();
        let first = (8u64..16).find(|&f| gf2_poly_irreducible(f)).unwrap();
        assert_eq!(enc_to_poly_bits(ctx.modulus()), first);
        assert_eq!(ctx.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn modulus_gf32_matches_independent_scan() {
        let ctx = gf32();
        let first = (32u64..64).find(|&f| gf2_poly_irreducible(f)).unwrap();
        assert_eq!(enc_to_poly_bits(ctx.modulus()), first);
        assert_eq!(ctx.modulus(), &[1, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn modulus_gf27_is_frozen_scan_result() {
        // x^3 + 2x + 1: values below its encoding are reducible, checked by
        // the roots-plus-quadratic argument for cubic polynomials over F_3.
        let ctx = gf27();
        assert_eq!(ctx.modulus(), &[1, 2, 0, 1]);
        let eval = |coeffs: &[u32], x: u64| -> u64 {
            coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x + c as u64) % 3)
        };
        // A cubic over F_3 is irreducible iff it has no root.
        for low in 0..(3u32 * 3 * 3 * 3) {
            let cand = [low % 3, (low / 3) % 3, (low / 9) % 3, 1];
            let enc_low = cand[0] + 3 * cand[1] + 9 * cand[2];
            let has_root = (0..3).any(|x| eval(&cand, x) == 0);
            if enc_low < 2 * 3 + 1 {
                assert!(has_root, "scan would have stopped before x^3+2x+1");
            } else {
                break;
            }
        }
    }

    #[test]
    fn gf8_frozen_products_and_inverses() {
        let ctx = gf8();
        assert_eq!(ctx.mul(Fe(2), Fe(2)), Fe(4));
        assert_eq!(ctx.inv(Fe(2)).unwrap(), Fe(5));
        assert_eq!(ctx.inv(Fe(0)), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for ctx in [gf8(), gf27(), gf32()] {
            let els: Vec<Fe> = ctx.elements().collect();
            for &x in &els {
                assert_eq!(ctx.add(x, Fe(0)), x);
                assert_eq!(ctx.mul(x, Fe(1)), x);
                assert_eq!(ctx.add(x, ctx.neg(x)), Fe(0));
                if x != Fe(0) {
                    let ix = ctx.inv(x).unwrap();
                    assert_eq!(ctx.mul(x, ix), Fe(1));
                }
                for &y in &els {
                    assert_eq!(ctx.add(x, y), ctx.add(y, x));
                    assert_eq!(ctx.mul(x, y), ctx.mul(y, x));
                    assert_eq!(ctx.sub(ctx.add(x, y), y), x);
                }
            }
            for &x in &els {
                for &y in &els {
                    for &z in &els {
                        assert_eq!(
                            ctx.add(ctx.add(x, y), z),
                            ctx.add(x, ctx.add(y, z))
                        );
                        assert_eq!(
                            ctx.mul(ctx.mul(x, y), z),
                            ctx.mul(x, ctx.mul(y, z))
                        );
                        assert_eq!(
                            ctx.mul(x, ctx.add(y, z)),
                            ctx.add(ctx.mul(x, y), ctx.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_cycles() {
        for ctx in [gf32(), gf27()] {
            let c = ctx.c();
            for x in ctx.elements() {
                assert_eq!(ctx.frobenius_q(x, c), x);
                assert_eq!(ctx.frobenius_q(x, 1), ctx.pow(x, ctx.q()));
                for y in ctx.elements() {
                    assert_eq!(
                        ctx.frobenius_q(ctx.add(x, y), 1),
                        ctx.add(ctx.frobenius_q(x, 1), ctx.frobenius_q(y, 1))
                    );
                }
            }
            let fixed = ctx
                .elements()
                .filter(|&x| ctx.frobenius_q(x, 1) == x)
                .count() as u64;
            assert_eq!(fixed, ctx.q());
        }
    }

    #[test]
    fn partial_trace_matches_power_sum() {
        for ctx in [gf32(), gf27()] {
            for x in ctx.elements() {
                for k in 0..=ctx.c() + 1 {
                    let mut expect = Fe(0);
                    for i in 0..k {
                        let exp = (0..i).fold(1u64, |acc, _| acc * ctx.q());
                        expect = ctx.add(expect, ctx.pow(x, exp));
                    }
                    assert_eq!(ctx.tr_partial(x, k), expect);
                }
            }
        }
    }

    #[test]
    fn full_trace_lands_in_base_field() {
        for ctx in [gf32(), gf27()] {
            for x in ctx.elements() {
                let tr = ctx.tr_partial(x, ctx.c());
                assert_eq!(ctx.frobenius_q(tr, 1), tr);
            }
        }
    }

    #[test]
    fn int_inverse_embedded_examples() {
        assert_eq!(gf27().int_inverse_embedded(2).unwrap(), Fe(2));
        assert_eq!(gf8().int_inverse_embedded(3).unwrap(), Fe(1));
        assert_eq!(
            gf8().int_inverse_embedded(2),
            Err(FieldError::NotCoprime { n: 2, p: 2 })
        );
    }

    #[test]
    fn pow_signed_agrees_with_inverse() {
        for ctx in [gf8(), gf27()] {
            for x in ctx.elements().skip(1) {
                assert_eq!(ctx.pow_signed(x, -1).unwrap(), ctx.inv(x).unwrap());
                assert_eq!(
                    ctx.pow_signed(x, -3).unwrap(),
                    ctx.inv(ctx.pow(x, 3)).unwrap()
                );
                assert_eq!(ctx.pow_signed(x, 5).unwrap(), ctx.pow(x, 5));
            }
            assert_eq!(
                ctx.pow_signed(Fe(0), -1),
                Err(FieldError::ZeroInverse)
            );
        }
    }

    #[test]
    fn construction_guards() {
        assert_eq!(field_new(4, 1, 3).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(
            field_new(2, 1, 17).unwrap_err(),
            FieldError::DegreeTooLarge(17)
        );
        assert_eq!(field_new(2, 0, 3).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(
            FieldCtx::with_limit(2, 1, 5, 16).unwrap_err(),
            FieldError::TooLarge { size: 32, .. }
        ));
    }

    #[test]
    fn large_field_without_tables_is_consistent() {
        // 3^13 lies above the table threshold, forcing the polynomial
        // multiplication path.
        let ctx = FieldCtx::with_limit(3, 13, 1, u64::MAX).unwrap();
        assert!(ctx.size() as u64 > 1 << 20);
        for enc in [1u32, 2, 3, 1000, 54321, 1594322] {
            let x = Fe(enc);
            let ix = ctx.inv(x).unwrap();
            assert_eq!(ctx.mul(x, ix), Fe(1));
            assert_eq!(ctx.pow(x, 3), ctx.mul(ctx.mul(x, x), x));
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = field_new(2, 1, 5).unwrap();
        let b = field_new(2, 1, 5).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.exp, b.exp);
        assert_eq!(a.log, b.log);
    }
}
