//! Lattice point sets behind the Riemann-Roch space bases.
//!
//! A divisor in the family is described by four integers (v, r, s, t), the
//! coefficients of the places P_1, P_0, Q, V. The monomials x^i z^j w^k
//! lying in the associated space correspond to integer triples (i, j, k)
//! subject to four linear inequalities; for each admissible i both j and k
//! are forced, so the whole set is a function of a bounded range of i.
//!
//! Every closed-form count in this module has a brute-force twin that works
//! directly from the defining inequalities. The twins are part of the
//! public API so the verification battery can replay them.

use thiserror::Error;

use crate::curve::CurveParams;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("count formula requires reduced v >= v0; got reduced v = {v_hat}, v0 = {v0}")]
    BelowThreshold { v_hat: i64, v0: i64 },
    #[error("psi parameters out of range: need 0 <= m < q^(b-1) and s, t >= 0")]
    PsiOutOfRange,
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(&'static str),
}

/// Divisor coefficients (v, r, s, t) for v P_1 + r P_0 + s Q + t V.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct DivisorSpec {
    pub v: i64,
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl DivisorSpec {
    pub fn new(v: i64, r: i64, s: i64, t: i64) -> Self {
        DivisorSpec { v, r, s, t }
    }

    /// Divisor degree v + (q^(a-1) - 1) r + q^(b-1) s + (q - 1) t.
    pub fn degree(&self, cp: &CurveParams) -> i64 {
        self.v + cp.deg_p0() * self.r + cp.deg_q() * self.s + cp.deg_v() * self.t
    }

    /// True when r = 0, 0 <= s < q^c - 1 and 0 <= t < N_c.
    pub fn is_canonical(&self, cp: &CurveParams) -> bool {
        self.r == 0
            && 0 <= self.s
            && self.s < cp.qc1()
            && 0 <= self.t
            && self.t < cp.nk(cp.c())
    }
}

/// A monomial exponent triple.
pub type Triple = (i64, i64, i64);

/// Floor division for a positive divisor.
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a < 0 {
        q - 1
    } else {
        q
    }
}

/// Ceiling division for a positive divisor.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    let q = a / b;
    if a % b != 0 && a > 0 {
        q + 1
    } else {
        q
    }
}

/// Raw membership test for the lattice set: the four defining inequalities
/// on (i, j, k), with no closed-form shortcuts.
pub fn omega_contains(cp: &CurveParams, spec: DivisorSpec, tr: Triple) -> bool {
    let (i, j, k) = tr;
    let qc1 = cp.qc1();
    let f2 = i + qc1 * k;
    let f3 = -cp.qpow(cp.a()) * i + qc1 * j;
    let f4 = cp.qpow(cp.a() - 1) * cp.nk(cp.b()) * i
        - cp.qpow(cp.b() - 1) * cp.nk(cp.c()) * j
        - (cp.qpow(cp.a() - 1) - 1) * cp.nk(cp.c()) * k;
    i >= -spec.v
        && -spec.r <= f2
        && f2 < qc1 - spec.r
        && -spec.s <= f3
        && f3 < qc1 - spec.s
        && f4 + spec.t >= 0
}

/// Upper bound on the i coordinate of any member triple, with slack. The
/// true maximum never exceeds (q^(a-1) - 1) r + q^(b-1) s + (q - 1) t.
pub fn omega_i_max(cp: &CurveParams, spec: DivisorSpec) -> i64 {
    let qc = cp.qpow(cp.c());
    cp.deg_v() * spec.t
        + cp.deg_q() * spec.s.abs()
        + cp.deg_p0() * (spec.r.abs() + qc)
        + qc
}

/// All member triples in increasing i order. For each i >= -v up to
/// [`omega_i_max`], j and k are forced by their two-sided inequalities and
/// only the final inequality remains to check.
pub fn omega_enumerate(cp: &CurveParams, spec: DivisorSpec) -> Vec<Triple> {
    let qc1 = cp.qc1();
    let qa = cp.qpow(cp.a());
    let c_i = cp.qpow(cp.a() - 1) * cp.nk(cp.b());
    let c_j = cp.qpow(cp.b() - 1) * cp.nk(cp.c());
    let c_k = (cp.qpow(cp.a() - 1) - 1) * cp.nk(cp.c());
    let mut out = Vec::new();
    for i in -spec.v..=omega_i_max(cp, spec) {
        let j = div_ceil(qa * i - spec.s, qc1);
        let k = div_ceil(-i - spec.r, qc1);
        if c_i * i - c_j * j - c_k * k + spec.t >= 0 {
            out.push((i, j, k));
        }
    }
    out
}

/// Brute-force twin of [`omega_enumerate`]: sweeps a padded i range and a
/// window of candidate j and k around the floor quotients, filtering with
/// the raw inequalities only.
pub fn omega_enumerate_brute(cp: &CurveParams, spec: DivisorSpec) -> Vec<Triple> {
    let qc1 = cp.qc1();
    let qa = cp.qpow(cp.a());
    let pad = cp.qpow(cp.c());
    let mut out = Vec::new();
    for i in (-spec.v - pad)..=(omega_i_max(cp, spec) + pad) {
        let jc = div_floor(qa * i - spec.s, qc1);
        let kc = div_floor(-i - spec.r, qc1);
        for j in jc - 2..=jc + 2 {
            for k in kc - 2..=kc + 2 {
                if omega_contains(cp, spec, (i, j, k)) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Change of basis from x^i z^j w^k exponents to x^i y^j u^k exponents:
/// (i, j, k) -> (i - q^b j - k, j + q^a k, -k).
pub fn omega_prime_transform(cp: &CurveParams, triples: &[Triple]) -> Vec<Triple> {
    let qa = cp.qpow(cp.a());
    let qb = cp.qpow(cp.b());
    triples
        .iter()
        .map(|&(i, j, k)| (i - qb * j - k, j + qa * k, -k))
        .collect()
}

/// Inverse of [`omega_prime_transform`].
pub fn omega_prime_inverse(cp: &CurveParams, triples: &[Triple]) -> Vec<Triple> {
    let qa = cp.qpow(cp.a());
    let qb = cp.qpow(cp.b());
    let qc1 = cp.qc1();
    triples
        .iter()
        .map(|&(i, j, k)| (i + qb * j + qc1 * k, j + qa * k, -k))
        .collect()
}

/// Raw membership test for the transformed exponent set.
pub fn omega_prime_contains(cp: &CurveParams, spec: DivisorSpec, tr: Triple) -> bool {
    let (i, j, k) = tr;
    let qc1 = cp.qc1();
    let f1 = i + cp.qpow(cp.b()) * j + qc1 * k;
    let f2 = i + cp.qpow(cp.b()) * j;
    let f3 = -cp.qpow(cp.a()) * i - j;
    let f4 = cp.qpow(cp.a() - 1) * cp.nk(cp.b()) * i
        - cp.qpow(cp.b() - 1) * cp.nk(cp.a()) * j
        - cp.nk(cp.c()) * k;
    f1 >= -spec.v
        && -spec.r <= f2
        && f2 < qc1 - spec.r
        && -spec.s <= f3
        && f3 < qc1 - spec.s
        && f4 + spec.t >= 0
}

/// Outcome of [`omega_reduce`]: the canonical spec plus the two Euclidean
/// quotients that witness the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: DivisorSpec,
    pub sigma: i64,
    pub lambda: i64,
}

/// Reduces a spec to the canonical form r = 0, 0 <= s < q^c - 1,
/// 0 <= t < N_c describing a linearly equivalent divisor. The member count
/// of the lattice set is invariant under this reduction, and so is the
/// divisor degree.
pub fn omega_reduce(cp: &CurveParams, spec: DivisorSpec) -> Reduction {
    let qc1 = cp.qc1();
    let nc = cp.nk(cp.c());
    let s_shifted = spec.s + cp.qpow(cp.a()) * spec.r;
    let sigma = div_floor(s_shifted, qc1);
    let s_hat = s_shifted - sigma * qc1;
    let t_prime = spec.t - spec.r * cp.qpow(cp.a() - 1) * cp.nk(cp.b())
        + sigma * cp.qpow(cp.b() - 1) * nc;
    let lambda = div_floor(t_prime, nc);
    let t_hat = t_prime - lambda * nc;
    let v_hat = spec.v + qc1 * lambda - spec.r;
    Reduction {
        reduced: DivisorSpec::new(v_hat, 0, s_hat, t_hat),
        sigma,
        lambda,
    }
}

/// Closed-form member count 1 - g + deg, valid once the reduced spec has
/// v >= v0. Below the threshold the closed form does not apply.
pub fn omega_count_formula(cp: &CurveParams, spec: DivisorSpec) -> Result<i64, LatticeError> {
    let red = omega_reduce(cp, spec);
    let v0 = cp.v0();
    if red.reduced.v < v0 {
        return Err(LatticeError::BelowThreshold {
            v_hat: red.reduced.v,
            v0,
        });
    }
    Ok(1 - cp.genus() + spec.degree(cp))
}

/// The three families of lattice lines used to count diagonal strips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    /// Solutions of q^(a-1) N_b i - q^(b-1) N_c j = -alpha, 0 <= i < q^c - 1.
    L1,
    /// Solutions of -q^a i + (q^c - 1) j = -(q^c - 1) q - alpha, same i range.
    L2,
    /// Solutions of q^(b-1) l - N_c m = alpha, 0 <= m < q^(b-1).
    L3,
}

/// Closed-form segment count: q - 1 or 0 for L1 depending on whether
/// q^(b-1) divides alpha, and exactly 1 for L2 and L3.
pub fn segment_count(cp: &CurveParams, kind: SegmentKind, alpha: i64) -> i64 {
    match kind {
        SegmentKind::L1 => {
            if alpha.rem_euclid(cp.deg_q()) == 0 {
                cp.q() as i64 - 1
            } else {
                0
            }
        }
        SegmentKind::L2 | SegmentKind::L3 => 1,
    }
}

/// Brute-force twin of [`segment_count`]: scans the bounded coordinate and
/// tests divisibility for the unbounded one.
pub fn segment_count_brute(cp: &CurveParams, kind: SegmentKind, alpha: i64) -> i64 {
    let qc1 = cp.qc1();
    match kind {
        SegmentKind::L1 => {
            let ci = cp.qpow(cp.a() - 1) * cp.nk(cp.b());
            let cj = cp.qpow(cp.b() - 1) * cp.nk(cp.c());
            (0..qc1)
                .filter(|&i| (ci * i + alpha).rem_euclid(cj) == 0)
                .count() as i64
        }
        SegmentKind::L2 => {
            let qa = cp.qpow(cp.a());
            (0..qc1)
                .filter(|&i| (qa * i - qc1 * cp.q() as i64 - alpha).rem_euclid(qc1) == 0)
                .count() as i64
        }
        SegmentKind::L3 => {
            let nc = cp.nk(cp.c());
            (0..cp.deg_q())
                .filter(|&m| (alpha + nc * m).rem_euclid(cp.deg_q()) == 0)
                .count() as i64
        }
    }
}

/// Closed-form count of the half-open strip
/// `{ (i, j) : 0 <= i < q^c - 1,
///    q^(a-1) N_b i - q^(b-1) N_c j + N_c m >= -t,
///    -q^a i + (q^c - 1) j >= -s - (q^c - 1) q }`
/// for 0 <= m < q^(b-1) and s, t >= 0.
pub fn psi_count(cp: &CurveParams, m: i64, s: i64, t: i64) -> Result<i64, LatticeError> {
    if m < 0 || m >= cp.deg_q() || s < 0 || t < 0 {
        return Err(LatticeError::PsiOutOfRange);
    }
    let q = cp.q() as i64;
    let qc = cp.qpow(cp.c());
    Ok((qc + 1) * q / 2 + div_floor(t + cp.nk(cp.c()) * m, cp.deg_q()) * (q - 1) + s)
}

/// Brute-force twin of [`psi_count`]: for each i, counts the j interval cut
/// out by the two defining inequalities.
pub fn psi_count_brute(cp: &CurveParams, m: i64, s: i64, t: i64) -> Result<i64, LatticeError> {
    if m < 0 || m >= cp.deg_q() || s < 0 || t < 0 {
        return Err(LatticeError::PsiOutOfRange);
    }
    let qc1 = cp.qc1();
    let qa = cp.qpow(cp.a());
    let ci = cp.qpow(cp.a() - 1) * cp.nk(cp.b());
    let cj = cp.qpow(cp.b() - 1) * cp.nk(cp.c());
    let nc = cp.nk(cp.c());
    let mut count = 0i64;
    for i in 0..qc1 {
        let j_hi = div_floor(ci * i + nc * m + t, cj);
        let j_lo = div_ceil(qa * i - s - qc1 * cp.q() as i64, qc1);
        count += (j_hi - j_lo + 1).max(0);
    }
    Ok(count)
}

/// The floor sum over one residue period,
/// `sum_{m=0}^{q^(b-1)-1} floor((t + N_c m)/q^(b-1))`.
pub fn phi_floor_sum(cp: &CurveParams, t: i64) -> i64 {
    (0..cp.deg_q())
        .map(|m| div_floor(t + cp.nk(cp.c()) * m, cp.deg_q()))
        .sum()
}

/// Closed form of [`phi_floor_sum`]: (N_c - 1)(q^(b-1) - 1)/2 + t.
pub fn phi_closed_form(cp: &CurveParams, t: i64) -> i64 {
    (cp.nk(cp.c()) - 1) * (cp.deg_q() - 1) / 2 + t
}

/// Lattice point censuses of a simple polygon: twice the area, the
/// boundary count, and the interior count implied by Pick's identity
/// `area2 = 2*interior + boundary - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PickCounts {
    pub area2: i64,
    pub boundary: i64,
    pub interior: i64,
}

/// Shoelace area and gcd boundary count of a simple lattice polygon given
/// by its vertices in order. The interior count comes from Pick's
/// identity. Degenerate inputs (fewer than three vertices, repeated
/// vertices, zero area) are rejected.
pub fn pick_count(vertices: &[(i64, i64)]) -> Result<PickCounts, LatticeError> {
    if vertices.len() < 3 {
        return Err(LatticeError::DegeneratePolygon("fewer than three vertices"));
    }
    for (idx, a) in vertices.iter().enumerate() {
        for b in &vertices[idx + 1..] {
            if a == b {
                return Err(LatticeError::DegeneratePolygon("repeated vertex"));
            }
        }
    }
    let mut twice_area = 0i64;
    let mut boundary = 0i64;
    for (idx, &(x1, y1)) in vertices.iter().enumerate() {
        let (x2, y2) = vertices[(idx + 1) % vertices.len()];
        twice_area += x1 * y2 - x2 * y1;
        boundary += gcd((x2 - x1).abs(), (y2 - y1).abs());
    }
    let area2 = twice_area.abs();
    if area2 == 0 {
        return Err(LatticeError::DegeneratePolygon("zero area"));
    }
    let num = area2 - boundary + 2;
    if num % 2 != 0 {
        return Err(LatticeError::DegeneratePolygon(
            "area and boundary parity rule out a simple polygon",
        ));
    }
    Ok(PickCounts {
        area2,
        boundary,
        interior: num / 2,
    })
}

/// Brute-force lattice census of a simple polygon over its bounding box:
/// (interior, boundary), by exact segment tests and ray casting.
pub fn polygon_census_brute(vertices: &[(i64, i64)]) -> (i64, i64) {
    let xs: Vec<i64> = vertices.iter().map(|p| p.0).collect();
    let ys: Vec<i64> = vertices.iter().map(|p| p.1).collect();
    let (x_lo, x_hi) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y_lo, y_hi) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let mut interior = 0i64;
    let mut boundary = 0i64;
    for px in x_lo..=x_hi {
        for py in y_lo..=y_hi {
            if on_any_edge(vertices, (px, py)) {
                boundary += 1;
            } else if ray_cast_inside(vertices, (px, py)) {
                interior += 1;
            }
        }
    }
    (interior, boundary)
}

fn on_any_edge(vertices: &[(i64, i64)], p: (i64, i64)) -> bool {
    let n = vertices.len();
    (0..n).any(|idx| {
        let a = vertices[idx];
        let b = vertices[(idx + 1) % n];
        let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
        cross == 0
            && p.0 >= a.0.min(b.0)
            && p.0 <= a.0.max(b.0)
            && p.1 >= a.1.min(b.1)
            && p.1 <= a.1.max(b.1)
    })
}

/// Exact parity ray cast for a point known to be off the boundary.
fn ray_cast_inside(vertices: &[(i64, i64)], p: (i64, i64)) -> bool {
    let n = vertices.len();
    let (px, py) = p;
    let mut crossings = 0u32;
    for idx in 0..n {
        let (x1, y1) = vertices[idx];
        let (x2, y2) = vertices[(idx + 1) % n];
        if (y1 > py) == (y2 > py) {
            continue;
        }
        // The edge crosses the horizontal line through p; compare px with
        // the crossing abscissa using exact integer arithmetic.
        let lhs = (px - x1) * (y2 - y1);
        let rhs = (py - y1) * (x2 - x1);
        let crosses_right = if y2 > y1 { lhs < rhs } else { lhs > rhs };
        if crosses_right {
            crossings += 1;
        }
    }
    crossings % 2 == 1
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::curve_new;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c25() -> CurveParams {
        curve_new(2, 5).unwrap()
    }

    fn c33() -> CurveParams {
        curve_new(3, 3).unwrap()
    }

    #[test]
    fn div_floor_and_ceil_against_euclid() {
        for a in -50i64..=50 {
            for b in 1i64..=7 {
                assert_eq!(div_floor(a, b), a.div_euclid(b));
                assert_eq!(div_ceil(a, b), -((-a).div_euclid(b)));
            }
        }
    }

    #[test]
    fn omega_origin_only_for_zero_spec() {
        let cp = c33();
        assert_eq!(
            omega_enumerate(&cp, DivisorSpec::new(0, 0, 0, 0)),
            vec![(0, 0, 0)]
        );
        assert!(omega_enumerate(&cp, DivisorSpec::new(-1, 0, 0, 0)).is_empty());
    }

    #[test]
    fn omega_flagship_count_and_shape() {
        let cp = c25();
        let spec = DivisorSpec::new(324, 0, 0, 0);
        let triples = omega_enumerate(&cp, spec);
        assert_eq!(triples.len(), 250);
        for w in triples.windows(2) {
            assert!(w[0].0 < w[1].0, "i coordinates must be strictly increasing");
        }
        for &tr in &triples {
            assert!(omega_contains(&cp, spec, tr));
        }
        assert_eq!(triples, omega_enumerate_brute(&cp, spec));
    }

    #[test]
    fn omega_matches_brute_on_random_specs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for cp in [c25(), c33()] {
            for _ in 0..40 {
                let spec = DivisorSpec::new(
                    rng.gen_range(-40..=60),
                    rng.gen_range(-15..=15),
                    rng.gen_range(-40..=40),
                    rng.gen_range(-40..=40),
                );
                assert_eq!(
                    omega_enumerate(&cp, spec),
                    omega_enumerate_brute(&cp, spec),
                    "spec {spec:?}"
                );
            }
        }
    }

    #[test]
    fn omega_guard_zone_past_i_max_is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for cp in [c25(), c33()] {
            let qc1 = cp.qc1();
            let qa = cp.qpow(cp.a());
            for _ in 0..20 {
                let spec = DivisorSpec::new(
                    rng.gen_range(-40..=60),
                    rng.gen_range(-15..=15),
                    rng.gen_range(-40..=40),
                    rng.gen_range(-40..=40),
                );
                let hi = omega_i_max(&cp, spec);
                for i in hi + 1..=hi + cp.qpow(cp.c()) {
                    let j = div_ceil(qa * i - spec.s, qc1);
                    let k = div_ceil(-i - spec.r, qc1);
                    assert!(!omega_contains(&cp, spec, (i, j, k)));
                }
            }
        }
    }

    #[test]
    fn prime_transform_round_trips_and_lands_in_prime_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for cp in [c25(), c33()] {
            for _ in 0..25 {
                let spec = DivisorSpec::new(
                    rng.gen_range(-20..=60),
                    rng.gen_range(-10..=10),
                    rng.gen_range(-30..=30),
                    rng.gen_range(-30..=30),
                );
                let omega = omega_enumerate(&cp, spec);
                let prime = omega_prime_transform(&cp, &omega);
                assert_eq!(prime.len(), omega.len());
                for &tr in &prime {
                    assert!(omega_prime_contains(&cp, spec, tr));
                }
                assert_eq!(omega_prime_inverse(&cp, &prime), omega);
            }
        }
        assert_eq!(omega_prime_transform(&c33(), &[(0, 0, 0)]), vec![(0, 0, 0)]);
    }

    #[test]
    fn reduce_worked_example() {
        let cp = c33();
        let red = omega_reduce(&cp, DivisorSpec::new(10, 1, 30, 5));
        assert_eq!(red.reduced, DivisorSpec::new(35, 0, 13, 2));
        assert_eq!(red.sigma, 1);
        assert_eq!(red.lambda, 1);
    }

    #[test]
    fn reduce_fixes_canonical_specs_and_preserves_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for cp in [c25(), c33()] {
            for _ in 0..200 {
                let spec = DivisorSpec::new(
                    rng.gen_range(-300..=300),
                    rng.gen_range(-100..=100),
                    rng.gen_range(-300..=300),
                    rng.gen_range(-300..=300),
                );
                let red = omega_reduce(&cp, spec);
                assert!(red.reduced.is_canonical(&cp));
                assert_eq!(red.reduced.degree(&cp), spec.degree(&cp));
                let again = omega_reduce(&cp, red.reduced);
                assert_eq!(again.reduced, red.reduced);
                assert_eq!((again.sigma, again.lambda), (0, 0));
            }
        }
    }

    #[test]
    fn reduction_preserves_member_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for cp in [c25(), c33()] {
            for _ in 0..30 {
                let spec = DivisorSpec::new(
                    rng.gen_range(-30..=50),
                    rng.gen_range(-10..=10),
                    rng.gen_range(-30..=30),
                    rng.gen_range(-30..=30),
                );
                let red = omega_reduce(&cp, spec).reduced;
                assert_eq!(
                    omega_enumerate(&cp, spec).len(),
                    omega_enumerate(&cp, red).len(),
                    "spec {spec:?} -> {red:?}"
                );
            }
        }
    }

    #[test]
    fn count_formula_frozen_values() {
        let cp = c25();
        assert_eq!(
            omega_count_formula(&cp, DivisorSpec::new(324, 0, 0, 0)),
            Ok(250)
        );
        assert_eq!(
            omega_count_formula(&cp, DivisorSpec::new(155, 0, 0, 0)),
            Ok(81)
        );
        assert_eq!(
            omega_count_formula(&cp, DivisorSpec::new(154, 0, 0, 0)),
            Err(LatticeError::BelowThreshold { v_hat: 154, v0: 155 })
        );
        let cp = c33();
        assert_eq!(
            omega_count_formula(&cp, DivisorSpec::new(100, 0, 0, 0)),
            Ok(64)
        );
    }

    #[test]
    fn count_formula_matches_enumeration_above_threshold() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for cp in [c25(), c33()] {
            for _ in 0..25 {
                let mut spec = DivisorSpec::new(
                    0,
                    rng.gen_range(-10..=10),
                    rng.gen_range(-30..=30),
                    rng.gen_range(-30..=30),
                );
                spec.v = rng.gen_range(0..=60);
                let red = omega_reduce(&cp, spec).reduced;
                spec.v += (cp.v0() - red.v).max(0);
                let count = omega_count_formula(&cp, spec).unwrap();
                assert_eq!(count, omega_enumerate(&cp, spec).len() as i64);
            }
        }
    }

    #[test]
    fn psi_frozen_values_and_brute_agreement() {
        let cp = c25();
        assert_eq!(psi_count(&cp, 0, 0, 0), Ok(33));
        assert_eq!(psi_count(&cp, 1, 0, 0), Ok(48));
        let total: i64 = (0..cp.deg_q())
            .map(|m| psi_count(&cp, m, 0, 0).unwrap())
            .sum();
        assert_eq!(total, 81);
        assert_eq!(psi_count(&cp, -1, 0, 0), Err(LatticeError::PsiOutOfRange));
        assert_eq!(psi_count(&cp, 2, 0, 0), Err(LatticeError::PsiOutOfRange));
        assert_eq!(psi_count(&cp, 0, -1, 0), Err(LatticeError::PsiOutOfRange));
        assert_eq!(psi_count(&cp, 0, 0, -1), Err(LatticeError::PsiOutOfRange));
        for cp in [c25(), c33()] {
            for m in 0..cp.deg_q() {
                for s in [0i64, 1, 2, 7] {
                    for t in [0i64, 1, 3, 11] {
                        assert_eq!(
                            psi_count(&cp, m, s, t),
                            psi_count_brute(&cp, m, s, t),
                            "m={m} s={s} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn segment_counts_match_brute_force() {
        for cp in [c25(), c33()] {
            for kind in [SegmentKind::L1, SegmentKind::L2, SegmentKind::L3] {
                for alpha in -60..=60 {
                    assert_eq!(
                        segment_count(&cp, kind, alpha),
                        segment_count_brute(&cp, kind, alpha),
                        "kind {kind:?} alpha {alpha}"
                    );
                }
            }
        }
        let cp = c25();
        assert_eq!(segment_count(&cp, SegmentKind::L1, 2), 1);
        assert_eq!(segment_count(&cp, SegmentKind::L1, 1), 0);
        assert_eq!(segment_count(&cp, SegmentKind::L2, 7), 1);
        assert_eq!(segment_count(&cp, SegmentKind::L3, -3), 1);
    }

    #[test]
    fn phi_identity_exhaustive() {
        for cp in [c25(), c33()] {
            for t in 0..cp.nk(cp.c()) {
                assert_eq!(phi_floor_sum(&cp, t), phi_closed_form(&cp, t));
            }
        }
    }

    #[test]
    fn pick_small_frozen_polygons() {
        assert_eq!(
            pick_count(&[(0, 0), (1, 0), (0, 1)]).unwrap(),
            PickCounts { area2: 1, boundary: 3, interior: 0 }
        );
        assert_eq!(
            pick_count(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap(),
            PickCounts { area2: 8, boundary: 8, interior: 1 }
        );
    }

    #[test]
    fn pick_matches_brute_census_on_strip_triangle() {
        // The triangle used to count the base strip for q = 2, c = 5: twice
        // the area is q(q^c - 1) = 62 and the boundary count is 2q = 4.
        let tri = [(0i64, 0i64), (0, -2), (31, 6)];
        let counts = pick_count(&tri).unwrap();
        assert_eq!(counts.area2, 62);
        assert_eq!(counts.boundary, 4);
        let (interior, boundary) = polygon_census_brute(&tri);
        assert_eq!(boundary, counts.boundary);
        assert_eq!(interior, counts.interior);
        assert_eq!(counts.interior, 30);
    }

    #[test]
    fn pick_rejects_degenerate_inputs() {
        assert!(matches!(
            pick_count(&[(0, 0), (1, 1)]),
            Err(LatticeError::DegeneratePolygon(_))
        ));
        assert!(matches!(
            pick_count(&[(0, 0), (1, 1), (2, 2)]),
            Err(LatticeError::DegeneratePolygon(_))
        ));
        assert!(matches!(
            pick_count(&[(0, 0), (1, 0), (1, 0)]),
            Err(LatticeError::DegeneratePolygon(_))
        ));
    }
}

