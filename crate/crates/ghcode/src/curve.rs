//! The generalized Hermitian curve over GF(q^c) and its affine point set.
//!
//! For an odd c >= 3 write c = a + b with a = (c+1)/2 and b = a - 1. The
//! curve is cut out by
//!
//! ```text
//! Tr_b(y^(q^a)/x) + Tr_a(y/x^(q^b)) = 1
//! ```
//!
//! where Tr_k is the partial trace x + x^q + ... + x^(q^(k-1)). The code
//! evaluation points are the affine points with both coordinates nonzero;
//! there are exactly n = q^(c-1) (q^c - 1) of them, q^(c-1) for each nonzero
//! x-coordinate. The construction requires the characteristic p to not
//! divide a, so that 1/a exists in the prime field and the degree-one place
//! P_1 over x = 1/a splits off the pole divisor of x.

use std::sync::Arc;
use thiserror::Error;

use crate::field::{field_new, Fe, FieldCtx, FieldError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("c = {0} must be an odd integer >= 3")]
    InvalidC(u32),
    #[error(
        "unsupported parameters: the characteristic {p} divides a = (c+1)/2 = {a}, \
         so 1/a does not exist and the degree-one place P_1 is missing"
    )]
    CharacteristicDividesA { p: u64, a: u32 },
    #[error("curve points have nonzero coordinates; got a zero input")]
    ZeroCoordinate,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// An affine point with nonzero coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Point {
    pub alpha: Fe,
    pub beta: Fe,
}

/// A curve instance: the underlying field, the derived integer invariants,
/// and the full evaluation point set, enumerated once at construction in
/// increasing (alpha, beta) encoding order.
#[derive(Debug)]
pub struct CurveParams {
    ctx: Arc<FieldCtx>,
    q: u64,
    c: u32,
    a: u32,
    b: u32,
    genus: i64,
    n: usize,
    points: Vec<Point>,
}

/// Builds the curve over GF(q^c) and enumerates its points.
pub fn curve_new(q: u64, c: u32) -> Result<CurveParams, CurveError> {
    let (p, e) = prime_power_split(q).ok_or(CurveError::NotPrimePower(q))?;
    if c < 3 || c.is_multiple_of(2) {
        return Err(CurveError::InvalidC(c));
    }
    #[allow(clippy::manual_div_ceil)]
    let a = (c + 1) / 2;
    let b = a - 1;
    if (a as u64).is_multiple_of(p) {
        return Err(CurveError::CharacteristicDividesA { p, a });
    }
    let ctx = Arc::new(field_new(p, e, c)?);

    let qc = ctx.size() as i64;
    let qa1 = pow_i64(q as i64, a - 1);
    let qb1 = pow_i64(q as i64, b - 1);
    let genus_num = (qc - 2) * (qa1 + qb1 - 2) + (qc - q as i64);
    debug_assert_eq!(genus_num % 2, 0);
    let genus = genus_num / 2;
    let n = (pow_i64(q as i64, c - 1) * (qc - 1)) as usize;

    let mut cp = CurveParams {
        ctx,
        q,
        c,
        a,
        b,
        genus,
        n,
        points: Vec::with_capacity(n),
    };
    for alpha in cp.ctx.elements().skip(1) {
        for beta in cp.ctx.elements().skip(1) {
            if cp.eq_holds_nonzero(alpha, beta) {
                cp.points.push(Point { alpha, beta });
            }
        }
    }
    assert_eq!(cp.points.len(), n, "point census must equal q^(c-1)(q^c-1)");
    Ok(cp)
}

impl CurveParams {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Code length: the number of evaluation points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// q^k as a signed integer.
    pub fn qpow(&self, k: u32) -> i64 {
        pow_i64(self.q as i64, k)
    }

    /// The q-bracket N_k = (q^k - 1)/(q - 1) = 1 + q + ... + q^(k-1).
    pub fn nk(&self, k: u32) -> i64 {
        (0..k).map(|i| self.qpow(i)).sum()
    }

    /// q^c - 1, the order of the multiplicative group of GF(q^c).
    pub fn qc1(&self) -> i64 {
        self.qpow(self.c) - 1
    }

    /// Degree of the place P_0, namely q^(a-1) - 1.
    pub fn deg_p0(&self) -> i64 {
        self.qpow(self.a - 1) - 1
    }

    /// Degree of the place Q, namely q^(b-1).
    pub fn deg_q(&self) -> i64 {
        self.qpow(self.b - 1)
    }

    /// Degree of the place V, namely q - 1.
    pub fn deg_v(&self) -> i64 {
        self.q as i64 - 1
    }

    /// Threshold on the reduced P_1 coefficient above which the lattice
    /// count is exactly Riemann-Roch: v0 = (q^c - 1)(q^b + q^(b-1) - 1).
    pub fn v0(&self) -> i64 {
        self.qc1() * (self.qpow(self.b) + self.qpow(self.b - 1) - 1)
    }

    /// Dual parameter shift for s: A = q^(c+a) + q^c - q^a - 2.
    pub fn dual_s_shift(&self) -> i64 {
        self.qpow(self.c) * self.qpow(self.a) + self.qpow(self.c) - self.qpow(self.a) - 2
    }

    /// Dual parameter shift for t: B = (q^(a-1) - 1) N_c - 1.
    pub fn dual_t_shift(&self) -> i64 {
        (self.qpow(self.a - 1) - 1) * self.nk(self.c) - 1
    }

    /// Degree bound R = n + 2g - 2; divisors of larger degree give the full
    /// space GF(q^c)^n.
    pub fn r_bound(&self) -> i64 {
        self.n as i64 + 2 * self.genus - 2
    }

    /// Evaluation points in increasing (alpha, beta) encoding order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Whether (alpha, beta) satisfies the defining equation. Both
    /// coordinates must be nonzero.
    pub fn curve_eq_holds(&self, alpha: Fe, beta: Fe) -> Result<bool, CurveError> {
        if alpha == Fe(0) || beta == Fe(0) {
            return Err(CurveError::ZeroCoordinate);
        }
        Ok(self.eq_holds_nonzero(alpha, beta))
    }

    fn eq_holds_nonzero(&self, alpha: Fe, beta: Fe) -> bool {
        let ctx = &self.ctx;
        let inv_alpha = ctx.inv(alpha).expect("alpha is nonzero");
        let lhs1 = ctx.mul(ctx.frobenius_q(beta, self.a), inv_alpha);
        let alpha_qb = ctx.frobenius_q(alpha, self.b);
        let lhs2 = ctx.mul(beta, ctx.inv(alpha_qb).expect("alpha is nonzero"));
        let sum = ctx.add(
            ctx.tr_partial(lhs1, self.b),
            ctx.tr_partial(lhs2, self.a),
        );
        sum == Fe(1)
    }

    /// The distinguished places of the function field that the divisor
    /// family is supported on.
    pub fn special_places(&self) -> SpecialPlaces {
        let p = self.p();
        let p1_exists = !(self.a as u64).is_multiple_of(p);
        let gamma = if p1_exists {
            Some(
                self.ctx
                    .int_inverse_embedded(self.a as u64)
                    .expect("p does not divide a"),
            )
        } else {
            None
        };
        SpecialPlaces {
            p1_exists,
            gamma,
            q1_exists: !(self.b as u64).is_multiple_of(p),
            v_rational_count: if p == 2 { self.q - 1 } else { 0 },
        }
    }
}

/// Existence report for the distinguished places. P_1 (degree one, over
/// x = gamma = 1/a) exists iff p does not divide a; the analogous Q_1 need
/// p to not divide b; the q - 1 places V_mu are rational iff p = 2, when
/// mu^(q-1) = -1 has solutions in GF(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecialPlaces {
    pub p1_exists: bool,
    pub gamma: Option<Fe>,
    pub q1_exists: bool,
    pub v_rational_count: u64,
}

fn pow_i64(base: i64, exp: u32) -> i64 {
    base.pow(exp)
}

/// Writes q = p^e with p prime, or None when q is not a prime power.
fn prime_power_split(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Some((p, e))
    } else {
        None
    }
}
