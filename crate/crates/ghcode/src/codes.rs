//! Linear codes evaluated on the curve's affine point set.
//!
//! A divisor spec (v, r, s, t) yields the code whose words are evaluations
//! of the Riemann-Roch space at all n affine points with nonzero
//! coordinates. Generator rows are monomials x^i y^j u^k with exponents
//! drawn from the transformed lattice set; the auxiliary functions
//!
//! ```text
//! u = 1/a - y^(q^a)/x - y^q/x^(q^a)
//! z = y/x^(q^b)
//! w = y^(q^a)/(x u)
//! ```
//!
//! never vanish on evaluation points, so negative exponents are fine.
//! Codes whose divisor degree lands in [n, n + 2g - 2] are built as the
//! nullspace of the dual's generator; degrees outside [0, n + 2g - 2] give
//! the zero code or the full space.

use std::sync::Arc;
use thiserror::Error;

use crate::curve::{CurveParams, Point};
use crate::field::{Fe, FieldError};
use crate::lattice::{
    omega_enumerate, omega_prime_transform, omega_reduce, DivisorSpec, Reduction, Triple,
};
use crate::linalg::{GfMatrix, LinalgError};

/// Default cap on the number of codewords a distance sweep may visit.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 22;

#[derive(Error, Debug)]
pub enum CodesError {
    #[error("u vanished at (alpha={alpha}, beta={beta}); not a valid evaluation point")]
    UnexpectedZeroU { alpha: u32, beta: u32 },
    #[error("the zero code has no minimum distance")]
    EmptyCode,
    #[error("distance sweep needs {needed} codewords, over the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// How a generator matrix was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeKind {
    /// Degree < 0: the zero code.
    Zero,
    /// 0 <= degree < n: monomial evaluation rows.
    Evaluation,
    /// n <= degree <= n + 2g - 2: nullspace of the dual's generator.
    DualNullspace,
    /// Degree > n + 2g - 2: all of GF(q^c)^n.
    Full,
}

/// A constructed code with its generator matrix and derived parameters.
#[derive(Debug)]
pub struct LinearCode {
    spec: DivisorSpec,
    degree: i64,
    kind: CodeKind,
    gen: GfMatrix,
    dim: usize,
    n: usize,
}

impl LinearCode {
    pub fn spec(&self) -> DivisorSpec {
        self.spec
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    /// Generator matrix with exactly `dim` independent rows.
    pub fn generator(&self) -> &GfMatrix {
        &self.gen
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The designed distance n - deg(G). Vacuous (nonpositive) once the
    /// degree reaches n.
    pub fn goppa_lower_bound(&self) -> i64 {
        self.n as i64 - self.degree
    }
}

/// Evaluates u at a curve point. A zero value means the input pair does not
/// satisfy the curve equation.
pub fn eval_u(cp: &CurveParams, pt: Point) -> Result<Fe, CodesError> {
    let ctx = cp.ctx();
    let gamma = ctx.int_inverse_embedded(cp.a() as u64)?;
    let inv_alpha = ctx.inv(pt.alpha)?;
    let term1 = ctx.mul(ctx.frobenius_q(pt.beta, cp.a()), inv_alpha);
    let inv_alpha_qa = ctx.inv(ctx.frobenius_q(pt.alpha, cp.a()))?;
    let term2 = ctx.mul(ctx.frobenius_q(pt.beta, 1), inv_alpha_qa);
    let u = ctx.sub(ctx.sub(gamma, term1), term2);
    if u == Fe(0) {
        return Err(CodesError::UnexpectedZeroU {
            alpha: pt.alpha.0,
            beta: pt.beta.0,
        });
    }
    Ok(u)
}

/// The generator row alpha^i beta^j u^k over the given points.
pub fn eval_row(
    cp: &CurveParams,
    (i, j, k): Triple,
    points: &[Point],
) -> Result<Vec<Fe>, CodesError> {
    let ctx = cp.ctx();
    let mut out = Vec::with_capacity(points.len());
    for &pt in points {
        let u = eval_u(cp, pt)?;
        let val = ctx.mul(
            ctx.mul(ctx.pow_signed(pt.alpha, i)?, ctx.pow_signed(pt.beta, j)?),
            ctx.pow_signed(u, k)?,
        );
        out.push(val);
    }
    Ok(out)
}

/// The row x^i z^j w^k over the given points; equal to the [`eval_row`] of
/// the transformed exponents, which the tests exploit.
pub fn eval_row_xzw(
    cp: &CurveParams,
    (i, j, k): Triple,
    points: &[Point],
) -> Result<Vec<Fe>, CodesError> {
    let ctx = cp.ctx();
    let mut out = Vec::with_capacity(points.len());
    for &pt in points {
        let (x, z, w) = point_xzw(cp, pt)?;
        let val = ctx.mul(
            ctx.mul(ctx.pow_signed(x, i)?, ctx.pow_signed(z, j)?),
            ctx.pow_signed(w, k)?,
        );
        out.push(val);
    }
    Ok(out)
}

fn point_xzw(cp: &CurveParams, pt: Point) -> Result<(Fe, Fe, Fe), CodesError> {
    let ctx = cp.ctx();
    let u = eval_u(cp, pt)?;
    let z = ctx.mul(pt.beta, ctx.inv(ctx.frobenius_q(pt.alpha, cp.b()))?);
    let w = ctx.mul(
        ctx.frobenius_q(pt.beta, cp.a()),
        ctx.inv(ctx.mul(pt.alpha, u))?,
    );
    Ok((pt.alpha, z, w))
}

/// The dual spec (-1-v, -1-r, A-s, B-t).
pub fn dual_spec(cp: &CurveParams, spec: DivisorSpec) -> DivisorSpec {
    DivisorSpec::new(
        -1 - spec.v,
        -1 - spec.r,
        cp.dual_s_shift() - spec.s,
        cp.dual_t_shift() - spec.t,
    )
}

/// Builds the code of a divisor spec.
pub fn build_code(cp: &CurveParams, spec: DivisorSpec) -> Result<LinearCode, CodesError> {
    let ctx: Arc<_> = cp.ctx().clone();
    let n = cp.n();
    let degree = spec.degree(cp);
    if degree < 0 {
        return Ok(LinearCode {
            spec,
            degree,
            kind: CodeKind::Zero,
            gen: GfMatrix::zeros(ctx, 0, n),
            dim: 0,
            n,
        });
    }
    if degree > cp.r_bound() {
        return Ok(LinearCode {
            spec,
            degree,
            kind: CodeKind::Full,
            gen: GfMatrix::identity(ctx, n),
            dim: n,
            n,
        });
    }
    if degree < n as i64 {
        let gen = evaluation_generator(cp, spec)?;
        let dim = gen.rows();
        debug_assert_eq!(gen.rank(), dim, "evaluation rows must be independent");
        return Ok(LinearCode {
            spec,
            degree,
            kind: CodeKind::Evaluation,
            gen,
            dim,
            n,
        });
    }
    let dual = dual_spec(cp, spec);
    debug_assert_eq!(dual.degree(cp), cp.r_bound() - degree);
    let dual_gen = evaluation_generator(cp, dual)?;
    let gen = dual_gen.nullspace();
    let dim = gen.rows();
    debug_assert_eq!(dim, n - dual_gen.rows());
    Ok(LinearCode {
        spec,
        degree,
        kind: CodeKind::DualNullspace,
        gen,
        dim,
        n,
    })
}

/// Monomial generator rows for a spec with degree below n.
fn evaluation_generator(cp: &CurveParams, spec: DivisorSpec) -> Result<GfMatrix, CodesError> {
    let omega = omega_enumerate(cp, spec);
    let prime = omega_prime_transform(cp, &omega);
    let points = cp.points();
    let mut rows = Vec::with_capacity(prime.len());
    for &tr in &prime {
        rows.push(eval_row(cp, tr, points)?);
    }
    Ok(GfMatrix::from_rows(cp.ctx().clone(), rows, points.len())?)
}

/// Coordinate weights carrying the code of `spec` onto the code of its
/// canonical reduction: scaling column j of the original generator by
/// `weights[j]` yields a generator of the reduced code.
#[derive(Debug)]
pub struct EquivalenceWitness {
    pub weights: Vec<Fe>,
    pub reduction: Reduction,
}

/// Computes the diagonal equivalence between a code and its canonical
/// reduction. The weights are the evaluations of a function whose divisor
/// is the difference of the two divisors, inverted so that they map
/// original codewords to reduced codewords.
pub fn equivalence_witness(
    cp: &CurveParams,
    spec: DivisorSpec,
) -> Result<EquivalenceWitness, CodesError> {
    let ctx = cp.ctx();
    let reduction = omega_reduce(cp, spec);
    let (sigma, lambda) = (reduction.sigma, reduction.lambda);
    let e_x = spec.r - cp.qc1() * lambda;
    let e_z = sigma - cp.qpow(cp.a()) * lambda;
    let e_w = lambda;
    let mut weights = Vec::with_capacity(cp.n());
    for &pt in cp.points() {
        let (x, z, w) = point_xzw(cp, pt)?;
        let val = ctx.mul(
            ctx.mul(ctx.pow_signed(x, e_x)?, ctx.pow_signed(z, e_z)?),
            ctx.pow_signed(w, e_w)?,
        );
        weights.push(val);
    }
    Ok(EquivalenceWitness { weights, reduction })
}

/// True minimum distance by exhaustive message sweep. Scalar multiples of a
/// codeword share its weight, so only messages whose leading nonzero digit
/// is 1 are generated, one codeword per scalar class; an odometer over the
/// remaining digits makes each codeword cost one row addition. The budget
/// still caps the full message count q^(ck).
pub fn min_distance_bruteforce(code: &LinearCode, budget: u64) -> Result<usize, CodesError> {
    let k = code.dim();
    if k == 0 {
        return Err(CodesError::EmptyCode);
    }
    let ctx = code.generator().ctx().clone();
    let size = ctx.size() as usize;
    let needed = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(size as u128));
    match needed {
        Some(needed) if needed <= budget as u128 => {}
        _ => {
            return Err(CodesError::BudgetExceeded {
                needed: needed.unwrap_or(u128::MAX),
                budget,
            });
        }
    }
    let n = code.n();
    let gen = code.generator();
    // scaled[d][e] is generator row d multiplied by the element encoded e.
    let scaled: Vec<Vec<Vec<Fe>>> = (0..k)
        .map(|d| {
            (0..size as u32)
                .map(|e| gen.row(d).iter().map(|&x| ctx.mul(x, Fe(e))).collect())
                .collect()
        })
        .collect();
    let mut best = n + 1;
    // partial[d] is the codeword of the first d digits; partial[0] is zero.
    let mut partial: Vec<Vec<Fe>> = vec![vec![Fe(0); n]; k + 1];
    let weigh = |partial: &mut Vec<Vec<Fe>>, digits: &[usize], from: usize, lead: usize| {
        for d in from..k {
            let (head, tail) = partial.split_at_mut(d + 1);
            let prev = &head[d];
            let row = &scaled[d][digits[d - lead]];
            let cur = &mut tail[0];
            for idx in 0..n {
                cur[idx] = ctx.add(prev[idx], row[idx]);
            }
        }
        partial[k].iter().filter(|&&x| x != Fe(0)).count()
    };
    for lead in 0..k {
        for x in partial[lead].iter_mut() {
            *x = Fe(0);
        }
        // digits[0] is the fixed leading 1 in position `lead`; the rest
        // enumerate positions lead+1..k.
        let mut digits = vec![0usize; k - lead];
        digits[0] = 1;
        best = best.min(weigh(&mut partial, &digits, lead, lead));
        loop {
            let mut pos = digits.len();
            while pos > 1 && digits[pos - 1] == size - 1 {
                digits[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 1 {
                break;
            }
            digits[pos - 1] += 1;
            best = best.min(weigh(&mut partial, &digits, lead + pos - 1, lead));
        }
    }
    Ok(best)
}

/// One row of the Gilbert-Varshamov comparison table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GvRow {
    pub spec: DivisorSpec,
    pub degree: i64,
    pub dim: i64,
    pub goppa_lb: i64,
    /// Relative designed distance (n - deg)/n.
    pub delta: f64,
    pub rate: f64,
    /// Asymptotic GV rate 1 - H_l(delta), clamped to 1 below the domain and
    /// 0 above it.
    pub gv_rate: f64,
    /// Set only when delta lies strictly inside (0, 1 - 1/l); codes whose
    /// delta falls outside the entropy domain are never flagged.
    pub beats_gv: bool,
}

/// The q-ary entropy function H_l on (0, 1 - 1/l).
pub fn gv_entropy(l: f64, delta: f64) -> f64 {
    let log_l = |x: f64| x.ln() / l.ln();
    delta * log_l(l - 1.0) - delta * log_l(delta) - (1.0 - delta) * log_l(1.0 - delta)
}

/// Compares each spec's rate against the asymptotic GV bound at its
/// designed relative distance. Dimensions come from the lattice counts, so
/// no generator matrices are built.
pub fn gv_compare(cp: &CurveParams, specs: &[DivisorSpec]) -> Vec<GvRow> {
    let n = cp.n() as i64;
    let l = (cp.qpow(cp.c())) as f64;
    specs
        .iter()
        .map(|&spec| {
            let degree = spec.degree(cp);
            let dim = code_dimension(cp, spec);
            let goppa_lb = n - degree;
            let delta = goppa_lb as f64 / n as f64;
            let rate = dim as f64 / n as f64;
            let in_domain = delta > 0.0 && delta < 1.0 - 1.0 / l;
            let gv_rate = if delta <= 0.0 {
                1.0
            } else if !in_domain {
                0.0
            } else {
                1.0 - gv_entropy(l, delta)
            };
            GvRow {
                spec,
                degree,
                dim,
                goppa_lb,
                delta,
                rate,
                gv_rate,
                beats_gv: in_domain && rate > gv_rate,
            }
        })
        .collect()
}

/// Dimension from the lattice counts alone, covering all degree regimes.
pub fn code_dimension(cp: &CurveParams, spec: DivisorSpec) -> i64 {
    let n = cp.n() as i64;
    let degree = spec.degree(cp);
    if degree < 0 {
        0
    } else if degree > cp.r_bound() {
        n
    } else if degree < n {
        omega_enumerate(cp, spec).len() as i64
    } else {
        n - omega_enumerate(cp, dual_spec(cp, spec)).len() as i64
    }
}
