//! Randomized and exhaustive cross-checks over a whole curve, used by the
//! `verify` command and the acceptance suite. Each section compares a
//! closed form or a constructed object against an independent brute-force
//! recount and reports one pass/fail line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{
    build_code, dual_spec, equivalence_witness, gv_compare, min_distance_bruteforce, CodeKind,
    DEFAULT_DISTANCE_BUDGET,
};
use crate::curve::{CurveParams, Point};
use crate::field::Fe;
use crate::lattice::{
    omega_count_formula, omega_enumerate, omega_enumerate_brute, omega_reduce, phi_closed_form,
    phi_floor_sum, pick_count, polygon_census_brute, psi_count, psi_count_brute, segment_count,
    segment_count_brute, DivisorSpec, SegmentKind,
};

/// Outcome of one battery section.
#[derive(Debug)]
pub struct SectionReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SectionReport {
    fn from_problems(name: &'static str, problems: Vec<String>, ok_detail: String) -> Self {
        match problems.first() {
            None => SectionReport {
                name,
                passed: true,
                detail: ok_detail,
            },
            Some(first) => SectionReport {
                name,
                passed: false,
                detail: format!("{} problems, first: {}", problems.len(), first),
            },
        }
    }
}

/// All section outcomes for one curve.
#[derive(Debug)]
pub struct BatteryReport {
    pub sections: Vec<SectionReport>,
}

impl BatteryReport {
    pub fn all_passed(&self) -> bool {
        self.sections.iter().all(|s| s.passed)
    }
}

/// Runs every section that applies to the given curve. Sections tied to a
/// single curve (the flagship code and the GV gap live on q=2, c=5; the
/// witness and distance sweeps on q=3, c=3) are skipped elsewhere.
pub fn run_battery(cp: &CurveParams, seed: u64) -> BatteryReport {
    let mut sections = vec![check_census(cp)];
    if (cp.q(), cp.c()) == (2, 5) {
        sections.push(check_flagship(cp));
    }
    sections.push(check_counting(cp, seed));
    sections.push(check_dimension(cp, seed));
    sections.push(check_duality(cp, seed));
    sections.push(check_support_counts(cp, seed));
    if (cp.q(), cp.c()) == (3, 3) {
        sections.push(check_witness(cp, seed));
        sections.push(check_distance(cp));
    }
    if (cp.q(), cp.c()) == (2, 5) {
        sections.push(check_gv_gap(cp));
    }
    BatteryReport { sections }
}

fn section_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn sample_spec(
    rng: &mut ChaCha8Rng,
    v: std::ops::RangeInclusive<i64>,
    r: std::ops::RangeInclusive<i64>,
    s: std::ops::RangeInclusive<i64>,
    t: std::ops::RangeInclusive<i64>,
) -> DivisorSpec {
    DivisorSpec::new(
        rng.gen_range(v),
        rng.gen_range(r),
        rng.gen_range(s),
        rng.gen_range(t),
    )
}

/// Recounts the affine point set against the full-trace membership
/// criterion and checks the per-alpha count.
pub fn check_census(cp: &CurveParams) -> SectionReport {
    let ctx = cp.ctx();
    let mut problems = Vec::new();
    let mut oracle = Vec::with_capacity(cp.n());
    for alpha in ctx.elements().skip(1) {
        let denom = ctx
            .inv(ctx.frobenius_q(alpha, cp.b()))
            .expect("nonzero alpha");
        for beta in ctx.elements().skip(1) {
            if ctx.tr_partial(ctx.mul(beta, denom), cp.c()) == Fe(1) {
                oracle.push(Point { alpha, beta });
            }
        }
    }
    if oracle != cp.points() {
        problems.push("trace recount disagrees with the stored point set".into());
    }
    if oracle.len() != cp.n() {
        problems.push(format!("census {} != n {}", oracle.len(), cp.n()));
    }
    let per_alpha = cp.qpow(cp.c() - 1);
    for chunk in oracle.chunks(per_alpha as usize) {
        if chunk.len() != per_alpha as usize || chunk.iter().any(|p| p.alpha != chunk[0].alpha) {
            problems.push(format!("some alpha misses {per_alpha} points"));
            break;
        }
    }
    let ok = format!("{} points, {} per alpha, trace recount agrees", cp.n(), per_alpha);
    SectionReport::from_problems("census", problems, ok)
}

/// Builds the [496, 250, >=172] code over GF(32) and pins its parameters.
pub fn check_flagship(cp: &CurveParams) -> SectionReport {
    let mut problems = Vec::new();
    if (cp.q(), cp.c()) != (2, 5) {
        problems.push("flagship code lives on q=2, c=5".into());
        return SectionReport::from_problems("flagship", problems, String::new());
    }
    match build_code(cp, DivisorSpec::new(324, 0, 0, 0)) {
        Err(err) => problems.push(format!("build failed: {err}")),
        Ok(code) => {
            let rank = code.generator().rank();
            if code.n() != 496 || code.dim() != 250 || rank != 250 {
                problems.push(format!(
                    "got n={} k={} rank={}, want 496/250/250",
                    code.n(),
                    code.dim(),
                    rank
                ));
            }
            if code.goppa_lower_bound() != 172 {
                problems.push(format!("Goppa bound {} != 172", code.goppa_lower_bound()));
            }
        }
    }
    SectionReport::from_problems(
        "flagship",
        problems,
        "n=496 k=250 designed distance 172".into(),
    )
}

/// Counting formula against enumeration above the threshold, invariance of
/// the count under canonical reduction, and closed-form enumeration against
/// the padded brute-force scan.
pub fn check_counting(cp: &CurveParams, seed: u64) -> SectionReport {
    let mut rng = section_rng(seed, 3);
    let mut problems = Vec::new();
    let mut above = 0usize;
    let mut invariance = 0usize;
    let mut attempts = 0usize;
    while (above < 200 || invariance < 200) && attempts < 20_000 && problems.len() < 5 {
        attempts += 1;
        let spec = sample_spec(&mut rng, -50..=500, -10..=10, -40..=40, -40..=40);
        let red = omega_reduce(cp, spec);
        let count = omega_enumerate(cp, spec).len() as i64;
        let count_red = omega_enumerate(cp, red.reduced).len() as i64;
        if count != count_red {
            problems.push(format!(
                "count changed under reduction: {spec:?} gives {count}, reduced gives {count_red}"
            ));
        }
        invariance += 1;
        if red.reduced.v >= cp.v0() {
            match omega_count_formula(cp, spec) {
                Ok(formula) if formula == count => {}
                Ok(formula) => problems.push(format!(
                    "formula {formula} != enumeration {count} for {spec:?}"
                )),
                Err(err) => problems.push(format!("formula refused {spec:?}: {err}")),
            }
            above += 1;
        }
    }
    if above < 200 || invariance < 200 {
        problems.push(format!(
            "only {above} above-threshold and {invariance} invariance samples"
        ));
    }
    let mut brute = 0usize;
    for _ in 0..40 {
        let spec = sample_spec(&mut rng, -30..=120, -5..=5, -20..=20, -20..=20);
        if omega_enumerate(cp, spec) != omega_enumerate_brute(cp, spec) {
            problems.push(format!("closed enumeration != brute scan for {spec:?}"));
        }
        brute += 1;
    }
    let ok = format!(
        "{above} above-threshold counts, {invariance} reduction invariances, {brute} brute scans"
    );
    SectionReport::from_problems("counting", problems, ok)
}

/// Generator rank equals the lattice count below length, and equals
/// n minus the dual count in the window [n, n + 2g - 2].
pub fn check_dimension(cp: &CurveParams, seed: u64) -> SectionReport {
    let mut rng = section_rng(seed, 4);
    let mut problems = Vec::new();
    let n = cp.n() as i64;
    let mut low = 0usize;
    let mut attempts = 0usize;
    while low < 50 && attempts < 20_000 && problems.len() < 5 {
        attempts += 1;
        let spec = sample_spec(&mut rng, -20..=n - 30, -5..=5, -20..=20, -20..=20);
        let deg = spec.degree(cp);
        if !(0..n).contains(&deg) {
            continue;
        }
        let omega = omega_enumerate(cp, spec).len();
        match build_code(cp, spec) {
            Err(err) => problems.push(format!("build failed for {spec:?}: {err}")),
            Ok(code) => {
                let rank = code.generator().rank();
                if code.kind() != CodeKind::Evaluation || rank != omega || code.dim() != omega {
                    problems.push(format!(
                        "low branch: rank {rank} vs count {omega} for {spec:?}"
                    ));
                }
            }
        }
        low += 1;
    }
    let mut high = 0usize;
    if (cp.q(), cp.c()) == (3, 3) {
        attempts = 0;
        while high < 20 && attempts < 20_000 && problems.len() < 5 {
            attempts += 1;
            let spec = sample_spec(&mut rng, 150..=320, -5..=5, -20..=20, -20..=20);
            let deg = spec.degree(cp);
            if !(n..=cp.r_bound()).contains(&deg) {
                continue;
            }
            let dual_count = omega_enumerate(cp, dual_spec(cp, spec)).len() as i64;
            match build_code(cp, spec) {
                Err(err) => problems.push(format!("build failed for {spec:?}: {err}")),
                Ok(code) => {
                    let rank = code.generator().rank() as i64;
                    if code.kind() != CodeKind::DualNullspace
                        || rank != n - dual_count
                        || code.dim() as i64 != n - dual_count
                    {
                        problems.push(format!(
                            "high branch: rank {rank} vs n - dual count {} for {spec:?}",
                            n - dual_count
                        ));
                    }
                }
            }
            high += 1;
        }
    }
    if low < 50 || ((cp.q(), cp.c()) == (3, 3) && high < 20) {
        problems.push(format!("only {low} low-degree and {high} high-degree samples"));
    }
    let ok = format!("{low} codes below length, {high} in the nullspace window");
    SectionReport::from_problems("dimension", problems, ok)
}

/// Dual pairs annihilate each other and their ranks fill the whole space;
/// the dual map is an involution.
pub fn check_duality(cp: &CurveParams, seed: u64) -> SectionReport {
    let mut rng = section_rng(seed, 5);
    let mut problems = Vec::new();
    let n = cp.n() as i64;
    let strip = (2 * cp.genus() - 2, n);
    let mut pairs = 0usize;
    let mut attempts = 0usize;
    while pairs < 50 && attempts < 20_000 && problems.len() < 5 {
        attempts += 1;
        let spec = sample_spec(
            &mut rng,
            strip.0 - 60..=strip.1 + 20,
            -5..=5,
            -20..=20,
            -20..=20,
        );
        let deg = spec.degree(cp);
        if deg <= strip.0 || deg >= strip.1 {
            continue;
        }
        let dual = dual_spec(cp, spec);
        if dual_spec(cp, dual) != spec {
            problems.push(format!("dual map not an involution at {spec:?}"));
        }
        let (code, dual_code) = match (build_code(cp, spec), build_code(cp, dual)) {
            (Ok(a), Ok(b)) => (a, b),
            (a, b) => {
                problems.push(format!(
                    "build failed for pair {spec:?}: {:?} {:?}",
                    a.err().map(|e| e.to_string()),
                    b.err().map(|e| e.to_string())
                ));
                continue;
            }
        };
        if code.dim() + dual_code.dim() != cp.n() {
            problems.push(format!(
                "ranks {} + {} != {} for {spec:?}",
                code.dim(),
                dual_code.dim(),
                cp.n()
            ));
        }
        match code.generator().mul_transpose(dual_code.generator()) {
            Ok(prod) if prod.is_zero() => {}
            Ok(_) => problems.push(format!("nonzero inner products for {spec:?}")),
            Err(err) => problems.push(format!("product failed for {spec:?}: {err}")),
        }
        pairs += 1;
    }
    if pairs < 50 {
        problems.push(format!("only {pairs} dual pairs sampled"));
    }
    let ok = format!("{pairs} annihilating pairs with complementary ranks");
    SectionReport::from_problems("duality", problems, ok)
}

/// Closed-form segment, strip and floor-sum counts against brute-force
/// recounts, plus the lattice-polygon census identity on random polygons.
pub fn check_support_counts(cp: &CurveParams, seed: u64) -> SectionReport {
    let mut rng = section_rng(seed, 6);
    let mut problems = Vec::new();
    let mut psi_checked = 0usize;
    'psi: for m in 0..cp.qpow(cp.b() - 1) {
        for s in 0..=40 {
            for t in 0..=40 {
                let closed = psi_count(cp, m, s, t);
                let brute = psi_count_brute(cp, m, s, t);
                match (closed, brute) {
                    (Ok(x), Ok(y)) if x == y => psi_checked += 1,
                    (x, y) => {
                        problems.push(format!("strip count at m={m} s={s} t={t}: {x:?} vs {y:?}"));
                        break 'psi;
                    }
                }
            }
        }
    }
    let mut seg_checked = 0usize;
    for kind in [SegmentKind::L1, SegmentKind::L2, SegmentKind::L3] {
        for alpha in -200..=200 {
            if segment_count(cp, kind, alpha) != segment_count_brute(cp, kind, alpha) {
                problems.push(format!("segment count {kind:?} at alpha={alpha}"));
            } else {
                seg_checked += 1;
            }
        }
    }
    let mut polygons = 0usize;
    while polygons < 100 && problems.len() < 5 {
        let poly = random_simple_polygon(&mut rng);
        match pick_count(&poly) {
            Err(err) => problems.push(format!("census rejected {poly:?}: {err}")),
            Ok(counts) => {
                let (interior, boundary) = polygon_census_brute(&poly);
                if counts.boundary != boundary || counts.interior != interior {
                    problems.push(format!(
                        "polygon census ({}, {}) vs brute ({boundary}, {interior}) on {poly:?}",
                        counts.boundary, counts.interior
                    ));
                }
                if counts.area2 != 2 * interior + boundary - 2 {
                    problems.push(format!("area identity fails on {poly:?}"));
                }
            }
        }
        polygons += 1;
    }
    let mut phi_checked = 0usize;
    for t in 0..cp.nk(cp.c()) {
        if phi_floor_sum(cp, t) != phi_closed_form(cp, t) {
            problems.push(format!("floor sum at t={t}"));
        } else {
            phi_checked += 1;
        }
    }
    let ok = format!(
        "{psi_checked} strip counts, {seg_checked} segments, {polygons} polygons, {phi_checked} floor sums"
    );
    SectionReport::from_problems("support_counts", problems, ok)
}

/// A random simple lattice polygon: distinct points sorted by angle around
/// the lowest point, with the final collinear run reversed so the closing
/// edge does not overlap earlier ones.
fn random_simple_polygon(rng: &mut ChaCha8Rng) -> Vec<(i64, i64)> {
    loop {
        let count = rng.gen_range(3..=9);
        let mut pts: Vec<(i64, i64)> = (0..count)
            .map(|_| (rng.gen_range(-12..=12), rng.gen_range(-12..=12)))
            .collect();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            continue;
        }
        let pivot = *pts
            .iter()
            .min_by_key(|&&(x, y)| (y, x))
            .expect("nonempty");
        pts.retain(|&p| p != pivot);
        let cross = |p: (i64, i64), q: (i64, i64)| {
            (p.0 - pivot.0) * (q.1 - pivot.1) - (p.1 - pivot.1) * (q.0 - pivot.0)
        };
        let dist2 = |p: (i64, i64)| {
            (p.0 - pivot.0) * (p.0 - pivot.0) + (p.1 - pivot.1) * (p.1 - pivot.1)
        };
        pts.sort_by(|&p, &q| {
            let c = cross(p, q);
            c.cmp(&0).reverse().then(dist2(p).cmp(&dist2(q)))
        });
        let mut run_start = pts.len();
        while run_start > 1 && cross(pts[run_start - 2], pts[pts.len() - 1]) == 0 {
            run_start -= 1;
        }
        pts[run_start - 1..].reverse();
        let mut poly = vec![pivot];
        poly.extend(pts);
        if pick_count(&poly).is_ok() {
            return poly;
        }
    }
}

/// Scaling the coordinates by the equivalence witness carries each code
/// onto the code of its canonical reduction.
pub fn check_witness(cp: &CurveParams, seed: u64) -> SectionReport {
    let mut rng = section_rng(seed, 7);
    let mut problems = Vec::new();
    let n = cp.n() as i64;
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 50 && attempts < 20_000 && problems.len() < 5 {
        attempts += 1;
        let spec = sample_spec(&mut rng, -20..=n - 30, -6..=6, -25..=25, -25..=25);
        if spec.is_canonical(cp) || !(0..n).contains(&spec.degree(cp)) {
            continue;
        }
        let wit = match equivalence_witness(cp, spec) {
            Ok(w) => w,
            Err(err) => {
                problems.push(format!("witness failed for {spec:?}: {err}"));
                continue;
            }
        };
        if wit.weights.contains(&Fe(0)) {
            problems.push(format!("zero weight for {spec:?}"));
        }
        let original = match build_code(cp, spec) {
            Ok(c) => c,
            Err(err) => {
                problems.push(format!("build failed for {spec:?}: {err}"));
                continue;
            }
        };
        let reduced = match build_code(cp, wit.reduction.reduced) {
            Ok(c) => c,
            Err(err) => {
                problems.push(format!("reduced build failed for {spec:?}: {err}"));
                continue;
            }
        };
        let scaled = original
            .generator()
            .scale_cols(&wit.weights)
            .expect("weights cover every coordinate");
        match scaled.row_space_equal(reduced.generator()) {
            Ok(true) => {}
            Ok(false) => problems.push(format!("scaled code differs from reduced for {spec:?}")),
            Err(err) => problems.push(format!("comparison failed for {spec:?}: {err}")),
        }
        checked += 1;
    }
    if checked < 50 {
        problems.push(format!("only {checked} non-canonical specs sampled"));
    }
    let ok = format!("{checked} diagonal equivalences verified");
    SectionReport::from_problems("witness", problems, ok)
}

/// Exhaustive minimum distances over a deterministic family of small codes
/// all satisfy the designed-distance bound, and the all-ones code attains
/// the full length.
pub fn check_distance(cp: &CurveParams) -> SectionReport {
    let mut problems = Vec::new();
    let n = cp.n() as i64;
    let mut swept = 0usize;
    let mut repetition_ok = false;
    'sweep: for v in -6..=30i64 {
        for s in -5..=5i64 {
            for t in -5..=5i64 {
                let spec = DivisorSpec::new(v, 0, s, t);
                let deg = spec.degree(cp);
                if !(0..n).contains(&deg) {
                    continue;
                }
                let k = omega_enumerate(cp, spec).len();
                if !(1..=4).contains(&k) {
                    continue;
                }
                let code = match build_code(cp, spec) {
                    Ok(c) => c,
                    Err(err) => {
                        problems.push(format!("build failed for {spec:?}: {err}"));
                        continue;
                    }
                };
                let dist = match min_distance_bruteforce(&code, DEFAULT_DISTANCE_BUDGET) {
                    Ok(d) => d,
                    Err(err) => {
                        problems.push(format!("sweep failed for {spec:?}: {err}"));
                        continue;
                    }
                };
                if (dist as i64) < code.goppa_lower_bound() {
                    problems.push(format!(
                        "distance {dist} below designed {} for {spec:?}",
                        code.goppa_lower_bound()
                    ));
                }
                if spec == DivisorSpec::new(0, 0, 0, 0) {
                    repetition_ok = dist == cp.n();
                }
                swept += 1;
                if problems.len() >= 5 {
                    break 'sweep;
                }
            }
        }
    }
    if !repetition_ok {
        problems.push("all-ones code does not attain the full length".into());
    }
    let ok = format!("{swept} codes with k <= 4 swept, all meet the designed distance");
    SectionReport::from_problems("min_distance", problems, ok)
}

/// The flagship rate exceeds the asymptotic GV rate at its designed
/// relative distance by more than 0.03.
pub fn check_gv_gap(cp: &CurveParams) -> SectionReport {
    let mut problems = Vec::new();
    if (cp.q(), cp.c()) != (2, 5) {
        problems.push("GV reference point lives on q=2, c=5".into());
        return SectionReport::from_problems("gv_gap", problems, String::new());
    }
    let rows = gv_compare(cp, &[DivisorSpec::new(324, 0, 0, 0)]);
    let row = &rows[0];
    let gap = row.rate - row.gv_rate;
    if !row.beats_gv || gap <= 0.03 {
        problems.push(format!(
            "rate {:.6} vs GV {:.6}, gap {gap:.6}",
            row.rate, row.gv_rate
        ));
    }
    let ok = format!(
        "rate {:.6} exceeds GV {:.6} by {:.6}",
        row.rate, row.gv_rate, gap
    );
    SectionReport::from_problems("gv_gap", problems, ok)
}
