//! The Teichmueller space of the right hexagon and its compactification.
//!
//! A marked right hexagon is determined by the lengths of any arc triple, so
//! the space of hexagons is an open cell parameterized 14 different ways. Two
//! functionals tie it to the foliation sphere:
//!
//! - the length vector `(a, b, c, A, B, C)` embeds hexagons into the strictly
//!   positive orthant of projective 6-space;
//! - the intersection vector does the same for foliation classes, always
//!   with at least one vanishing entry, so the two images are disjoint.
//!
//! Around a triple whose three lengths are large (a *thick part*), the map
//! `h -> (projective class of q(h), exp(-(l1+l2+l3)))` is a chart of the
//! compactified space: the projection `q` reads the triple lengths as
//! transverse measures, and the collar coordinate tends to 0 exactly when
//! the hexagon degenerates. Degenerating families are described symbolically
//! by per-arc expressions `k1 e^n + k2 n + k3 + k4/n` and their projective
//! limits computed numerically.

use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::arcs::{compatible_triples, ArcClass, ArcTriple, TripleCase};
use crate::foliation::{ChartCoords, FoliationClass, PMFPoint, Rational};
use crate::hexagon::{arc_lengths9, HexagonLengths};
use crate::{Error, Result};

/// A point of Teichmueller space: a validated right hexagon.
#[derive(Debug, Clone, PartialEq)]
pub struct TeichPoint {
    hexagon: HexagonLengths,
}

/// Corner arc classes in the order `(a, b, c, A, B, C)` of the 6-vector.
const SIDE_ORDER: [ArcClass; 6] = [
    ArcClass::A,
    ArcClass::B,
    ArcClass::C,
    ArcClass::OppA,
    ArcClass::OppB,
    ArcClass::OppC,
];

impl TeichPoint {
    pub fn new(hexagon: HexagonLengths) -> Result<TeichPoint> {
        hexagon.validate()?;
        Ok(TeichPoint { hexagon })
    }

    /// The hexagon whose arc lengths along `t` (canonical class order) are
    /// `lengths`; bijective onto hexagons for each fixed triple.
    pub fn from_triple(t: &ArcTriple, lengths: [f64; 3]) -> Result<TeichPoint> {
        Ok(TeichPoint { hexagon: HexagonLengths::solve_from_triple(t, lengths)? })
    }

    pub const fn hexagon(&self) -> &HexagonLengths {
        &self.hexagon
    }

    /// Side lengths in the order `(a, b, c, A, B, C)`.
    pub const fn length_vector6(&self) -> [f64; 6] {
        self.hexagon.sides6()
    }

    /// The projective class of the length vector. Every entry is strictly
    /// positive, which is what separates hexagons from foliation classes in
    /// projective space.
    pub fn projective_embed(&self) -> ProjectivePoint6 {
        ProjectivePoint6::new(self.length_vector6())
            .expect("hexagon side lengths are positive and finite")
    }

    /// Whether all three arc lengths along `t` exceed `epsilon`.
    pub fn in_thick_part(&self, t: &ArcTriple, epsilon: f64) -> bool {
        epsilon > 0.0 && self.hexagon.triple_lengths(t).into_iter().all(|l| l > epsilon)
    }

    /// The measured foliation whose transverse measure on each arc of `t`
    /// equals that arc's length, exactly (as the dyadic rationals of the
    /// double-precision lengths). Injective on each thick part.
    pub fn q_projection(&self, t: &ArcTriple) -> Result<FoliationClass> {
        let coords = self.hexagon.triple_lengths(t).map(Rational::from_float);
        let [x, y, z] = coords;
        let coords = [
            x.ok_or(Error::Inconsistent("length is not finite"))?,
            y.ok_or(Error::Inconsistent("length is not finite"))?,
            z.ok_or(Error::Inconsistent("length is not finite"))?,
        ];
        ChartCoords::new(*t, coords)?.to_foliation()
    }

    /// Boundary lengths `(2a, 2b, 2c)` of the pair of pants obtained by
    /// doubling the hexagon along its `A`, `B`, `C` sides.
    pub const fn pants_double(&self) -> [f64; 3] {
        [2.0 * self.hexagon.a, 2.0 * self.hexagon.b, 2.0 * self.hexagon.c]
    }
}

/// The projective class of the intersection vector
/// `(i(F,a), ..., i(F,C))` of a nonzero foliation class. At least one entry
/// is always zero.
pub fn projective_embed_foliation(f: &FoliationClass) -> Result<ProjectivePoint6> {
    if f.is_zero() {
        return Err(Error::ZeroFoliation);
    }
    let v = SIDE_ORDER.map(|c| {
        f.intersection_number(c).to_f64().expect("rational intersection number fits in f64")
    });
    ProjectivePoint6::new(v)
}

/// A point of the projective orthant: six nonnegative reals summing to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint6 {
    values: [f64; 6],
}

impl ProjectivePoint6 {
    pub fn new(raw: [f64; 6]) -> Result<ProjectivePoint6> {
        if raw.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::NegativeMeasure);
        }
        let sum: f64 = raw.iter().sum();
        if sum <= 0.0 {
            return Err(Error::ZeroCoords);
        }
        Ok(ProjectivePoint6 { values: raw.map(|x| x / sum) })
    }

    /// Entries in the order `(a, b, c, A, B, C)`, summing to 1.
    pub const fn values(&self) -> [f64; 6] {
        self.values
    }

    pub fn min_entry(&self) -> f64 {
        self.values.into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn sup_distance(&self, other: &ProjectivePoint6) -> f64 {
        self.values
            .iter()
            .zip(other.values)
            .map(|(x, y)| libm::fabs(x - y))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for ProjectivePoint6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:.6}, {:.6}, {:.6}, {:.6}, {:.6}, {:.6})",
            self.values[0], self.values[1], self.values[2], self.values[3], self.values[4],
            self.values[5]
        )
    }
}

/// A point of the compactified space: a hexagon or a projective foliation
/// class on the boundary sphere.
#[derive(Debug, Clone, PartialEq)]
pub enum CompactifiedPoint {
    Hyperbolic(TeichPoint),
    Boundary(PMFPoint),
}

/// The chart of the compactified space around the thick part of `t`.
///
/// A hexagon maps to the projective class of its `q`-projection together
/// with the collar coordinate `exp(-(l1+l2+l3))`; a boundary point in the
/// open chart of `t` maps to itself with collar 0.
pub fn boundary_chart(x: &CompactifiedPoint, t: &ArcTriple) -> Result<(PMFPoint, f64)> {
    match x {
        CompactifiedPoint::Hyperbolic(p) => {
            let q = p.q_projection(t)?;
            let total: f64 = p.hexagon().triple_lengths(t).into_iter().sum();
            Ok((q.projectivize()?, libm::exp(-total)))
        }
        CompactifiedPoint::Boundary(pt) => {
            let f = pt.section()?;
            let positive = f
                .triple_intersections(t)
                .iter()
                .all(num_traits::Signed::is_positive);
            if !positive || !f.in_good_position(t) {
                return Err(Error::NotInChart);
            }
            Ok((pt.clone(), 0.0))
        }
    }
}

/// Inverts [`boundary_chart`] for interior points: scales the section of the
/// projective class so the measures on `t` sum to `-ln(collar)`, then reads
/// those measures back as the triple's lengths.
pub fn boundary_chart_inverse(
    pmf: &PMFPoint,
    collar: f64,
    t: &ArcTriple,
) -> Result<TeichPoint> {
    if !(collar > 0.0 && collar < 1.0) {
        return Err(Error::NotInChart);
    }
    let section = pmf.section()?;
    let measures = section.triple_intersections(t);
    let total: f64 = measures
        .iter()
        .map(|m| m.to_f64().expect("intersection number fits in f64"))
        .sum();
    if total <= 0.0 {
        return Err(Error::NotInChart);
    }
    let scale = -libm::log(collar) / total;
    let lengths = measures.map(|m| scale * m.to_f64().expect("fits in f64"));
    TeichPoint::from_triple(t, lengths)
}

// ---------------------------------------------------------------------------
// Degenerating length families
// ---------------------------------------------------------------------------

/// One arc-length expression `k1 e^n + k2 n + k3 + k4 / n`, coefficients
/// nonnegative and not all zero, so values are positive for every `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeqExpr {
    pub exp: f64,
    pub linear: f64,
    pub constant: f64,
    pub inverse: f64,
}

/// Limit class of a single expression as `n` grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Asym {
    Zero,
    Bounded,
    Infinite,
}

impl SeqExpr {
    pub fn constant(value: f64) -> SeqExpr {
        SeqExpr { exp: 0.0, linear: 0.0, constant: value, inverse: 0.0 }
    }

    fn validate(&self) -> Result<()> {
        let ks = [self.exp, self.linear, self.constant, self.inverse];
        if ks.iter().any(|k| !k.is_finite() || *k < 0.0) {
            return Err(Error::UnsupportedSpec("coefficients must be nonnegative and finite"));
        }
        if ks.iter().all(|k| *k == 0.0) {
            return Err(Error::UnsupportedSpec("expression is identically zero"));
        }
        Ok(())
    }

    pub fn eval(&self, n: u32) -> Result<f64> {
        let n = f64::from(n.max(1));
        let mut value = self.constant + self.inverse / n;
        if self.linear > 0.0 {
            value += self.linear * n;
        }
        // Guarded so a zero coefficient never multiplies an overflowed exp.
        if self.exp > 0.0 {
            value += self.exp * libm::exp(n);
        }
        if !value.is_finite() {
            return Err(Error::UnsupportedSpec("expression overflows at this n"));
        }
        Ok(value)
    }

    fn asym(&self) -> Asym {
        if self.exp > 0.0 || self.linear > 0.0 {
            Asym::Infinite
        } else if self.constant > 0.0 {
            Asym::Bounded
        } else {
            Asym::Zero
        }
    }
}

impl fmt::Display for SeqExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, suffix) in [(self.exp, "exp(n)"), (self.linear, "n")] {
            if k > 0.0 {
                if wrote {
                    f.write_str("+")?;
                }
                if k != 1.0 {
                    write!(f, "{k}*")?;
                }
                f.write_str(suffix)?;
                wrote = true;
            }
        }
        if self.constant > 0.0 {
            if wrote {
                f.write_str("+")?;
            }
            write!(f, "{}", self.constant)?;
            wrote = true;
        }
        if self.inverse > 0.0 {
            if wrote {
                f.write_str("+")?;
            }
            write!(f, "{}/n", self.inverse)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A one-parameter family of hexagons: expressions for the three arc lengths
/// of a fixed triple, in canonical class order.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSpec {
    triple: ArcTriple,
    exprs: [SeqExpr; 3],
}

impl SequenceSpec {
    pub fn new(triple: ArcTriple, exprs: [SeqExpr; 3]) -> Result<SequenceSpec> {
        for e in &exprs {
            e.validate()?;
        }
        Ok(SequenceSpec { triple, exprs })
    }

    pub const fn triple(&self) -> &ArcTriple {
        &self.triple
    }

    pub const fn exprs(&self) -> &[SeqExpr; 3] {
        &self.exprs
    }

    pub fn lengths_at(&self, n: u32) -> Result<[f64; 3]> {
        Ok([self.exprs[0].eval(n)?, self.exprs[1].eval(n)?, self.exprs[2].eval(n)?])
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = self.triple.classes();
        for (i, (c, e)) in classes.iter().zip(self.exprs.iter()).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}={}", c.name(), e)?;
        }
        Ok(())
    }
}

/// Outcome of the divergence classification of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divergence {
    /// All arc lengths stay in a compact region.
    Bounded,
    /// Some arc length leaves every compact set; `witness` is a triple whose
    /// three lengths all tend to infinity.
    ToInfinity { witness: ArcTriple },
}

/// Classifies a family with default fallback parameters (`n_max` 40,
/// witness threshold 3).
pub fn diverges(spec: &SequenceSpec) -> Result<Divergence> {
    diverges_with(spec, 40, 3.0)
}

/// Classifies whether the family leaves every compact set of hexagons, and
/// if so exhibits a triple all of whose lengths tend to infinity.
///
/// Classification is symbolic first: each expression's limit class is read
/// off its coefficients, and for alternating-side triples the witness comes
/// from a five-case table (rotating labels to normalize slot positions).
/// Patterns outside the table fall back to sampling: the triple maximizing
/// its minimal arc length at `n_max` must exceed `threshold` and still be
/// growing, otherwise the family is refused as unclassifiable.
pub fn diverges_with(spec: &SequenceSpec, n_max: u32, threshold: f64) -> Result<Divergence> {
    let asym = [spec.exprs[0].asym(), spec.exprs[1].asym(), spec.exprs[2].asym()];
    let count = |k: Asym| asym.iter().filter(|&&a| a == k).count();
    let (zeros, boundeds, infs) = (count(Asym::Zero), count(Asym::Bounded), count(Asym::Infinite));
    let classes = spec.triple.classes();

    if infs == 3 {
        // Nothing is needed: the defining triple is its own witness.
        return Ok(Divergence::ToInfinity { witness: spec.triple });
    }
    if boundeds == 3 {
        return Ok(Divergence::Bounded);
    }

    if spec.triple.case() == TripleCase::One {
        // The witness case table for an alternating triple, slots normalized
        // by the label rotation. `prev` is the rotation inverse.
        let prev = |c: ArcClass| c.rotate().rotate();
        let spanning = |c: ArcClass| c.spanning_partner().expect("corner class");
        let opposite = |c: ArcClass| c.opposite().expect("corner class");

        if zeros == 3 {
            // {0,0,0}: all three opposite lengths blow up.
            return witness_of([opposite(classes[0]), opposite(classes[1]), opposite(classes[2])]);
        }
        if infs == 2 && boundeds == 1 {
            // {inf,inf,K}: keep the two infinite sides, add the spanning arc
            // of the bounded one.
            let bounded = classes[asym.iter().position(|&a| a == Asym::Bounded).unwrap()];
            let rest: Vec<ArcClass> =
                classes.into_iter().filter(|&c| c != bounded).collect();
            return witness_of([rest[0], rest[1], spanning(bounded)]);
        }
        if infs == 1 && boundeds == 2 {
            // {inf,K,K}: the infinite side, its opposite, and the spanning
            // arc of the rotation-predecessor.
            let infinite = classes[asym.iter().position(|&a| a == Asym::Infinite).unwrap()];
            return witness_of([infinite, opposite(infinite), spanning(prev(infinite))]);
        }
        if zeros == 1 && boundeds == 2 {
            // {K,K,0}: both opposites of the bounded sides blow up, as does
            // the spanning arc of the vanishing one.
            let zero = classes[asym.iter().position(|&a| a == Asym::Zero).unwrap()];
            let rest: Vec<ArcClass> = classes.into_iter().filter(|&c| c != zero).collect();
            return witness_of([opposite(rest[0]), opposite(rest[1]), spanning(zero)]);
        }
    }

    numeric_witness(spec, n_max, threshold)
}

fn witness_of(classes: [ArcClass; 3]) -> Result<Divergence> {
    Ok(Divergence::ToInfinity { witness: ArcTriple::new(classes)? })
}

/// Sampling fallback for patterns outside the case table: evaluates the
/// family at three scales and certifies the triple whose minimal arc length
/// is largest at `n_max`, growing, and above `threshold`.
fn numeric_witness(spec: &SequenceSpec, n_max: u32, threshold: f64) -> Result<Divergence> {
    let samples = [n_max.max(8) / 4, n_max.max(8) / 2, n_max.max(8)];
    let census = compatible_triples();
    let mut min_lengths = [[0.0f64; 14]; 3];
    for (row, &n) in samples.iter().enumerate() {
        let nine = arc_lengths9(&spec.triple, spec.lengths_at(n)?)?;
        for (col, t) in census.iter().enumerate() {
            let m = t
                .classes()
                .into_iter()
                .map(|c| nine[arc_index(c)])
                .fold(f64::INFINITY, f64::min);
            min_lengths[row][col] = m;
        }
    }
    let best = (0..14)
        .max_by(|&i, &j| {
            min_lengths[2][i]
                .partial_cmp(&min_lengths[2][j])
                .expect("arc lengths are not NaN")
        })
        .expect("census is nonempty");
    let growing = min_lengths[0][best] < min_lengths[1][best]
        && min_lengths[1][best] < min_lengths[2][best];
    if growing && min_lengths[2][best] > threshold {
        return Ok(Divergence::ToInfinity { witness: census[best] });
    }
    Err(Error::UnsupportedSpec("no triple certifiably tends to infinity at this n_max"))
}

/// Index of an arc class in the nine-length vector
/// `(a, b, c, A, B, C, alpha, beta, gamma)`.
const fn arc_index(c: ArcClass) -> usize {
    match c {
        ArcClass::A => 0,
        ArcClass::B => 1,
        ArcClass::C => 2,
        ArcClass::OppA => 3,
        ArcClass::OppB => 4,
        ArcClass::OppC => 5,
        ArcClass::Alpha => 6,
        ArcClass::Beta => 7,
        ArcClass::Gamma => 8,
    }
}

/// One evaluation step of a boundary limit.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitStep {
    pub n: u32,
    /// The nine arc lengths `(a, b, c, A, B, C, alpha, beta, gamma)`;
    /// perpendiculars report 0 when below double precision.
    pub lengths: [f64; 9],
    /// Normalized side vector `(a, ..., C) / sum`.
    pub normalized: [f64; 6],
}

/// Result of a boundary-limit computation.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub limit: ProjectivePoint6,
    /// A chart of the boundary sphere containing the limit.
    pub chart: ArcTriple,
    /// The divergence witness used to anchor the chart search.
    pub witness: ArcTriple,
    /// Collar coordinate `exp(-(sum of witness lengths))` at `n_max`.
    pub collar_at_nmax: f64,
    pub steps: Vec<LimitStep>,
}

/// Numerically follows a diverging family to its boundary point.
///
/// Evaluates the normalized side vector for `n = 1..n_max`, Richardson
/// extrapolates in `1/n`, and requires the extrapolants at `n_max - 1` and
/// `n_max` to agree within `tol` (sup norm). The limit is located in a chart
/// by fitting a band support to its six entries; the divergence witness is
/// preferred when it contains the limit.
pub fn boundary_limit(spec: &SequenceSpec, n_max: u32, tol: f64) -> Result<LimitReport> {
    if n_max < 2 {
        return Err(Error::UnsupportedSpec("n_max must be at least 2"));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::UnsupportedSpec("tolerance must be positive"));
    }
    let witness = match diverges(spec)? {
        Divergence::ToInfinity { witness } => witness,
        Divergence::Bounded => {
            return Err(Error::UnsupportedSpec("family stays bounded; no boundary limit"))
        }
    };

    let mut steps: Vec<LimitStep> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let nine = arc_lengths9(&spec.triple, spec.lengths_at(n)?)?;
        let sides: [f64; 6] = core::array::from_fn(|i| nine[i]);
        let sum: f64 = sides.iter().sum();
        steps.push(LimitStep {
            n,
            lengths: nine,
            normalized: sides.map(|x| x / sum),
        });
    }

    // Richardson extrapolation in 1/n from the last three steps.
    let extrapolate = |later: &LimitStep, earlier: &LimitStep| -> [f64; 6] {
        let n = f64::from(later.n);
        core::array::from_fn(|i| n * later.normalized[i] - (n - 1.0) * earlier.normalized[i])
    };
    let m = steps.len();
    let r_last = extrapolate(&steps[m - 1], &steps[m - 2]);
    // With only two steps, compare the extrapolant to the raw vector.
    let r_prev = if m >= 3 {
        extrapolate(&steps[m - 2], &steps[m - 3])
    } else {
        steps[m - 1].normalized
    };
    let residual = r_last
        .iter()
        .zip(r_prev)
        .map(|(x, y)| libm::fabs(x - y))
        .fold(0.0, f64::max);
    if residual > tol {
        return Err(Error::NotConverged { residual, tol });
    }
    let limit = ProjectivePoint6::new(r_last.map(|x| x.max(0.0)))?;

    let chart = locate_chart(&limit, &witness, tol)?;
    let last = &steps[m - 1];
    let witness_sum: f64 =
        witness.classes().into_iter().map(|c| last.lengths[arc_index(c)]).sum();

    Ok(LimitReport { limit, chart, witness, collar_at_nmax: libm::exp(-witness_sum), steps })
}

/// Finds a chart of the boundary sphere containing a limit vector: fits a
/// band support to the six entries, rebuilds the foliation class, and picks
/// the preferred (or first) containing chart.
///
/// Families with logarithmic decay can pass the Cauchy test while the
/// extrapolant is still far from the sphere; a vector fitting no support is
/// therefore reported as not-converged, with the best fit residual.
fn locate_chart(limit: &ProjectivePoint6, preferred: &ArcTriple, tol: f64) -> Result<ArcTriple> {
    let fit_tol = 10.0 * tol + 1e-9;
    let mut best_residual = f64::INFINITY;
    let v = limit.values();
    for support in compatible_triples() {
        let classes = support.classes();
        // Least squares over the 6x3 crossing matrix of this support.
        let column = |k: usize| SIDE_ORDER.map(|s| f64::from(classes[k].crosses(s)));
        let cols = [column(0), column(1), column(2)];
        let mut gram = [[0.0f64; 3]; 3];
        let mut rhs = [0.0f64; 3];
        for j in 0..3 {
            for k in 0..3 {
                gram[j][k] = dot6(&cols[j], &cols[k]);
            }
            rhs[j] = dot6(&cols[j], &v);
        }
        let Some(weights) = solve3f(&gram, &rhs) else { continue };
        if weights.iter().any(|w| *w < -fit_tol) {
            continue;
        }
        let clamped = weights.map(|w| w.max(0.0));
        let fitted: [f64; 6] = core::array::from_fn(|i| {
            (0..3).map(|k| cols[k][i] * clamped[k]).sum::<f64>()
        });
        let residual =
            fitted.iter().zip(v).map(|(x, y)| libm::fabs(x - y)).fold(0.0, f64::max);
        if residual > fit_tol {
            best_residual = best_residual.min(residual);
            continue;
        }
        let foliation = FoliationClass::new(classes.into_iter().zip(clamped).filter_map(
            |(c, w)| {
                if w > fit_tol {
                    Some((c, Rational::from_float(w).expect("finite weight")))
                } else {
                    None
                }
            },
        ))?;
        if foliation.is_zero() {
            continue;
        }
        if foliation.in_good_position(preferred) {
            return Ok(*preferred);
        }
        let charts = foliation.charts_containing()?;
        return charts
            .first()
            .copied()
            .ok_or(Error::Inconsistent("limit foliation lies in no chart"));
    }
    Err(Error::NotConverged { residual: best_residual, tol: fit_tol })
}

fn dot6(x: &[f64; 6], y: &[f64; 6]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Cramer solve of a float 3x3 system; `None` when (numerically) singular.
fn solve3f(m: &[[f64; 3]; 3], rhs: &[f64; 3]) -> Option<[f64; 3]> {
    let det3 = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let det = det3(m);
    if libm::fabs(det) < 1e-12 {
        return None;
    }
    let mut out = [0.0f64; 3];
    for k in 0..3 {
        let mut replaced = *m;
        for j in 0..3 {
            replaced[j][k] = rhs[j];
        }
        out[k] = det3(&replaced) / det;
    }
    Some(out)
}
