//! Measured foliation classes on the hexagon, in weight coordinates.
//!
//! A class is described by nonnegative transverse-measure weights on a
//! pairwise disjoint set of arc classes (its banded normal form). The
//! intersection number with an arc class is linear in the weights, with
//! 0/1 coefficients given by the crossing relation.
//!
//! Each of the 14 arc triples indexes a triangular chart: a foliation in
//! *good position* with respect to the triple (positive total measure on it,
//! no weight on its classes) is pinned down by its three intersection
//! numbers. Chart changes are piecewise linear, and to keep the transition
//! coherence exact this whole layer computes in arbitrary-precision
//! rationals; real-valued lengths enter only in [`crate::teichmueller`].
//!
//! Projectivizing (scaling weights to make chart coordinates sum to 1)
//! collapses the charts onto a sphere carrying a natural cell decomposition:
//! 9 vertices (the classes), 21 edges (disjoint pairs), 14 triangles (the
//! triples).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arcs::{compatible_triples, ArcClass, ArcTriple, TripleCase};
use crate::{Error, Result};

/// Exact scalar of the piecewise-linear layer.
pub type Rational = num_rational::BigRational;

pub(crate) fn rational_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
pub(crate) fn rational_ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// A measured foliation class: strictly positive weights on a pairwise
/// disjoint set of arc classes. The empty map is the zero foliation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationClass {
    weights: BTreeMap<ArcClass, Rational>,
}

impl FoliationClass {
    /// The zero foliation.
    pub fn empty() -> FoliationClass {
        FoliationClass { weights: BTreeMap::new() }
    }

    /// Builds a class from weights. Zero weights are dropped, negative ones
    /// rejected, and the support must be pairwise non-crossing (in
    /// particular, it carries at most one spanning arc).
    pub fn new(weights: impl IntoIterator<Item = (ArcClass, Rational)>) -> Result<FoliationClass> {
        let mut map = BTreeMap::new();
        for (class, w) in weights {
            if w.is_negative() {
                return Err(Error::NegativeMeasure);
            }
            if !w.is_zero() {
                *map.entry(class).or_insert_with(Rational::zero) += w;
            }
        }
        let support: Vec<ArcClass> = map.keys().copied().collect();
        for (i, &x) in support.iter().enumerate() {
            for &y in &support[i + 1..] {
                if x.crosses(y) != 0 {
                    return Err(Error::CrossingSupport(x, y));
                }
            }
        }
        Ok(FoliationClass { weights: map })
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight of one class (zero when absent from the support).
    pub fn weight(&self, class: ArcClass) -> Rational {
        self.weights.get(&class).cloned().unwrap_or_else(Rational::zero)
    }

    /// Support classes with their weights, in canonical class order.
    pub fn weights(&self) -> impl Iterator<Item = (ArcClass, &Rational)> {
        self.weights.iter().map(|(c, w)| (*c, w))
    }

    pub fn support(&self) -> impl Iterator<Item = ArcClass> + '_ {
        self.weights.keys().copied()
    }

    /// Geometric intersection number with an arc class: the weighted crossing
    /// count over the support. Linear in the weights, zero on the support.
    pub fn intersection_number(&self, class: ArcClass) -> Rational {
        let mut total = Rational::zero();
        for (s, w) in &self.weights {
            if s.crosses(class) == 1 {
                total += w;
            }
        }
        total
    }

    /// Intersection numbers with a triple, in canonical class order.
    pub fn triple_intersections(&self, t: &ArcTriple) -> [Rational; 3] {
        let [x, y, z] = t.classes();
        [
            self.intersection_number(x),
            self.intersection_number(y),
            self.intersection_number(z),
        ]
    }

    /// Good position with respect to a triple: positive total measure on the
    /// triple and no weight on any of its classes (no band of leaves parallel
    /// to a triple arc).
    pub fn in_good_position(&self, t: &ArcTriple) -> bool {
        let total: Rational = self.triple_intersections(t).into_iter().sum();
        total.is_positive() && t.classes().iter().all(|&c| self.weight(c).is_zero())
    }

    /// Chart coordinates with respect to `t`.
    pub fn to_chart(&self, t: &ArcTriple) -> Result<ChartCoords> {
        if !self.in_good_position(t) {
            return Err(Error::NotInGoodPosition);
        }
        ChartCoords::new(*t, self.triple_intersections(t))
    }

    /// All triples with respect to which this class is in good position, in
    /// canonical triple order. Nonempty for every nonzero class.
    pub fn charts_containing(&self) -> Result<Vec<ArcTriple>> {
        if self.is_zero() {
            return Err(Error::ZeroFoliation);
        }
        Ok(compatible_triples().into_iter().filter(|t| self.in_good_position(t)).collect())
    }

    /// The projective class: coordinates in the first containing chart,
    /// scaled to sum 1.
    pub fn projectivize(&self) -> Result<PMFPoint> {
        let charts = self.charts_containing()?;
        let first = charts.first().ok_or(Error::Inconsistent("nonzero class with no chart"))?;
        PMFPoint::new(self.to_chart(first)?)
    }

    /// Scales every weight by a positive rational.
    pub fn scale(&self, factor: &Rational) -> Result<FoliationClass> {
        if !factor.is_positive() {
            return Err(Error::NegativeMeasure);
        }
        Ok(FoliationClass {
            weights: self.weights.iter().map(|(c, w)| (*c, w * factor)).collect(),
        })
    }

    /// Weightwise sum; fails when the union of supports crosses.
    pub fn try_add(&self, other: &FoliationClass) -> Result<FoliationClass> {
        FoliationClass::new(
            self.weights()
                .chain(other.weights())
                .map(|(c, w)| (c, w.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for FoliationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (c, w)) in self.weights().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}*{c}")?;
        }
        Ok(())
    }
}

/// Subdivision of a chart that a coordinate point falls in.
///
/// Case-1 charts split into the central triangle (triangle inequality) and
/// three dominant corners; case-2/3 charts are tagged by the band support
/// realizing the point. Points on a boundary satisfy several regions'
/// inequalities; the tag is the first match in a fixed order, and the linear
/// formulas agree there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Each coordinate at most the sum of the other two.
    Central,
    /// The named triple class's coordinate is at least the sum of the others.
    Dominant(ArcClass),
    /// The maximal disjoint support carrying the foliation's bands.
    Bands(ArcTriple),
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Central => f.write_str("CENTRAL"),
            Region::Dominant(c) => write!(f, "{}-DOMINANT", c.name()),
            Region::Bands(t) => write!(f, "BANDS[{t}]"),
        }
    }
}

/// A point of a chart: nonnegative intersection numbers with the triple's
/// classes (canonical order), not all zero, with its region tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartCoords {
    triple: ArcTriple,
    coords: [Rational; 3],
    region: Region,
}

impl ChartCoords {
    pub fn new(triple: ArcTriple, coords: [Rational; 3]) -> Result<ChartCoords> {
        let (region, _) = solve_in_chart(&triple, &coords)?;
        Ok(ChartCoords { triple, coords, region })
    }

    pub const fn triple(&self) -> &ArcTriple {
        &self.triple
    }

    pub const fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    pub const fn region(&self) -> &Region {
        &self.region
    }

    pub fn coords_sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    /// The unique foliation class in good position realizing these
    /// coordinates.
    ///
    /// Enumerates the maximal disjoint supports avoiding the triple, solves
    /// the 3x3 intersection system over each, and keeps the nonnegative
    /// solution; region-boundary points give the same class through several
    /// supports.
    pub fn to_foliation(&self) -> Result<FoliationClass> {
        let (_, foliation) = solve_in_chart(&self.triple, &self.coords)?;
        Ok(foliation)
    }

    /// Piecewise-linear coordinate change into another chart.
    pub fn transition(&self, target: &ArcTriple) -> Result<ChartCoords> {
        self.to_foliation()?.to_chart(target)
    }

    /// Coordinates scaled by a positive rational (same region).
    pub fn scale(&self, factor: &Rational) -> Result<ChartCoords> {
        if !factor.is_positive() {
            return Err(Error::NegativeMeasure);
        }
        ChartCoords::new(self.triple, self.coords.clone().map(|x| x * factor))
    }
}

impl fmt::Display for ChartCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}: ({}, {}, {}) [{}]",
            self.triple, self.coords[0], self.coords[1], self.coords[2], self.region
        )
    }
}

/// Supports available to a chart: the census triples sharing no class with
/// the chart triple, in canonical order. Every disjoint compatible support
/// extends to one of these, so scanning them finds every normal form.
fn candidate_supports(t: &ArcTriple) -> Vec<ArcTriple> {
    compatible_triples()
        .into_iter()
        .filter(|s| s.classes().iter().all(|c| !t.contains(*c)))
        .collect()
}

/// Solves the chart system: the region tag (from the first fitting support in
/// canonical order) and the unique nonnegative weight solution.
fn solve_in_chart(t: &ArcTriple, coords: &[Rational; 3]) -> Result<(Region, FoliationClass)> {
    if coords.iter().any(Signed::is_negative) {
        return Err(Error::NegativeMeasure);
    }
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::ZeroCoords);
    }
    let t_classes = t.classes();
    let mut hits: Vec<(ArcTriple, FoliationClass)> = Vec::new();
    for support in candidate_supports(t) {
        let s_classes = support.classes();
        // matrix[row j][col k] = crossing of support class k with triple class j
        let matrix: [[Rational; 3]; 3] = core::array::from_fn(|j| {
            core::array::from_fn(|k| rational_int(i64::from(s_classes[k].crosses(t_classes[j]))))
        });
        let Some(weights) = solve3(&matrix, coords) else { continue };
        if weights.iter().any(Signed::is_negative) {
            continue;
        }
        let foliation = FoliationClass::new(s_classes.into_iter().zip(weights))
            .map_err(|_| Error::Inconsistent("support candidate not disjoint"))?;
        hits.push((support, foliation));
    }
    let Some((first_support, first)) = hits.first().cloned() else {
        return Err(Error::Infeasible("no nonnegative support solution for these coordinates"));
    };
    if hits.iter().any(|(_, f)| *f != first) {
        return Err(Error::Inconsistent("chart coordinates admit two distinct foliations"));
    }
    Ok((region_tag(t, coords, &first_support), first))
}

/// Region tag of a chart point.
///
/// Case-1 charts use the coordinate inequalities directly: CENTRAL exactly
/// when every coordinate is at most the sum of the other two (so wall points
/// count as central), DOMINANT otherwise. Mixed charts are tagged by the
/// first-fitting band support.
fn region_tag(t: &ArcTriple, coords: &[Rational; 3], support: &ArcTriple) -> Region {
    if t.case() == TripleCase::One {
        let sum: Rational = coords.iter().sum();
        let dominant = (0..3).find(|&i| {
            let doubled = &coords[i] + &coords[i];
            doubled > sum
        });
        match dominant {
            None => Region::Central,
            Some(i) => Region::Dominant(t.classes()[i]),
        }
    } else {
        Region::Bands(*support)
    }
}

/// Cramer solve of a rational 3x3 system; `None` when singular.
fn solve3(m: &[[Rational; 3]; 3], rhs: &[Rational; 3]) -> Option<[Rational; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return None;
    }
    let mut out: [Rational; 3] = core::array::from_fn(|_| Rational::zero());
    for (k, slot) in out.iter_mut().enumerate() {
        let mut replaced = m.clone();
        for j in 0..3 {
            replaced[j][k] = rhs[j].clone();
        }
        *slot = det3(&replaced) / &det;
    }
    Some(out)
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

/// A projective measured foliation class: chart coordinates scaled to sum 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMFPoint {
    coords: ChartCoords,
}

impl PMFPoint {
    /// Normalizes chart coordinates to sum 1.
    pub fn new(cc: ChartCoords) -> Result<PMFPoint> {
        let sum = cc.coords_sum();
        if !sum.is_positive() {
            return Err(Error::ZeroCoords);
        }
        Ok(PMFPoint { coords: cc.scale(&(Rational::one() / sum))? })
    }

    pub const fn coords(&self) -> &ChartCoords {
        &self.coords
    }

    pub const fn chart(&self) -> &ArcTriple {
        self.coords.triple()
    }

    /// The normalized representative foliation (chart coordinates sum to 1).
    pub fn section(&self) -> Result<FoliationClass> {
        self.coords.to_foliation()
    }

    /// Re-expresses the point in another chart it belongs to.
    pub fn transition(&self, target: &ArcTriple) -> Result<PMFPoint> {
        PMFPoint::new(self.coords.transition(target)?)
    }
}

impl fmt::Display for PMFPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords)
    }
}

// ---------------------------------------------------------------------------
// Tabulated transition formula families
// ---------------------------------------------------------------------------

/// The five coordinate-change formula families as standalone tabulated
/// maps. The generic [`ChartCoords::transition`] subsumes them all; these
/// exist so tests can pin the production path against the closed forms
/// exactly, domain by domain.
pub mod formulas {
    use super::*;
    use ArcClass::{Alpha, Beta, OppA, OppB, OppC, A, B, C};

    fn chart(classes: [ArcClass; 3], coords: [Rational; 3]) -> Result<ChartCoords> {
        ChartCoords::new(ArcTriple::new(classes)?, coords)
    }

    /// Boundary family `{a,b,c} -> {alpha,B,C}` on the face `a = 0`: for
    /// `b >= c` maps to `(alpha, B, C) = (b, b - c, 0)`, mirrored otherwise.
    pub fn phi1(b: &Rational, c: &Rational) -> Result<ChartCoords> {
        let coords = if b >= c {
            [b.clone(), b - c, Rational::zero()]
        } else {
            [c.clone(), Rational::zero(), c - b]
        };
        chart([Alpha, OppB, OppC], coords)
    }

    /// Interior family `{a,b,c} -> {alpha,b,c}` away from the a-dominant
    /// corner: `alpha = (b + c - a)/2` centrally, `b - a` and `c - a` in the
    /// b- and c-dominant corners; `b` and `c` are carried along.
    pub fn phi2(a: &Rational, b: &Rational, c: &Rational) -> Result<ChartCoords> {
        let alpha = if b >= &(a + c) {
            b - a
        } else if c >= &(a + b) {
            c - a
        } else if a <= &(b + c) {
            (b + c - a) / rational_int(2)
        } else {
            // a-dominant: the image chart would meet the alpha band.
            return Err(Error::NotInGoodPosition);
        };
        chart([Alpha, B, C], [alpha, b.clone(), c.clone()])
    }

    /// Dominant-corner family `{a,b,c} -> {a,beta,A}` on `a >= b + c`:
    /// `beta = a - b`, `A = a - b - c`.
    pub fn phi3(a: &Rational, b: &Rational, c: &Rational) -> Result<ChartCoords> {
        if a < &(b + c) {
            return Err(Error::NotInGoodPosition);
        }
        chart([A, Beta, OppA], [a.clone(), a - b, a - b - c])
    }

    /// Family `{alpha,b,c} -> {alpha,b,B}` on `alpha >= c`: `B = alpha - c`.
    pub fn phi4(alpha: &Rational, b: &Rational, c: &Rational) -> Result<ChartCoords> {
        if alpha < c {
            return Err(Error::NotInGoodPosition);
        }
        chart([Alpha, B, OppB], [alpha.clone(), b.clone(), alpha - c])
    }

    /// Boundary family `{A,B,C} -> {alpha,b,c}` on the face `A = 0`: for
    /// `C >= B` maps to `(alpha, b, c) = (C, 0, C - B)`, mirrored otherwise.
    pub fn phi5(a_opp: &Rational, b_opp: &Rational, c_opp: &Rational) -> Result<ChartCoords> {
        if !a_opp.is_zero() {
            return Err(Error::NotInGoodPosition);
        }
        let coords = if c_opp >= b_opp {
            [c_opp.clone(), Rational::zero(), c_opp - b_opp]
        } else {
            [b_opp.clone(), b_opp - c_opp, Rational::zero()]
        };
        chart([Alpha, B, C], coords)
    }
}

// ---------------------------------------------------------------------------
// The cell decomposition of the projective sphere
// ---------------------------------------------------------------------------

/// The natural cell decomposition of the sphere of projective classes:
/// vertices are the arc classes, edges the disjoint pairs, faces the triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMFCellComplex {
    pub vertices: Vec<ArcClass>,
    pub edges: Vec<(ArcClass, ArcClass)>,
    pub faces: Vec<ArcTriple>,
}

/// One named structural check of a complex, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Builds the canonical cell complex from the crossing relation.
pub fn pmf_cell_complex() -> PMFCellComplex {
    let vertices: Vec<ArcClass> = ArcClass::ALL.into();
    let mut edges = Vec::new();
    for (i, &x) in ArcClass::ALL.iter().enumerate() {
        for &y in &ArcClass::ALL[i + 1..] {
            if x.crosses(y) == 0 {
                edges.push((x, y));
            }
        }
    }
    PMFCellComplex { vertices, edges, faces: compatible_triples() }
}

impl PMFCellComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    fn faces_with_edge(&self, e: (ArcClass, ArcClass)) -> usize {
        self.faces.iter().filter(|f| f.contains(e.0) && f.contains(e.1)).count()
    }

    /// Runs every structural check and reports them by name.
    ///
    /// Together these verify the computable content of the sphere statement:
    /// the (9, 21, 14) face vector, Euler characteristic 2, each edge on two
    /// faces, each vertex link a single cycle, connectivity, and agreement of
    /// the edge and face lists with the crossing relation.
    pub fn check(&self) -> Vec<ComplexCheck> {
        let mut out = Vec::new();
        let mut push = |name: &'static str, passed: bool, detail: String| {
            out.push(ComplexCheck { name, passed, detail });
        };

        let (v, e, f) = (self.vertices.len(), self.edges.len(), self.faces.len());
        push("counts", (v, e, f) == (9, 21, 14), format!("(V,E,F) = ({v},{e},{f})"));
        let chi = self.euler_characteristic();
        push("euler-characteristic", chi == 2, format!("chi = {chi}"));

        let canonical = pmf_cell_complex();
        push(
            "edges-match-crossings",
            self.edges == canonical.edges && self.vertices == canonical.vertices,
            String::from("vertex and edge lists against the crossing relation"),
        );
        push(
            "faces-match-census",
            self.faces == canonical.faces,
            String::from("face list against the triple census"),
        );

        let bad_edges = self.edges.iter().filter(|&&e| self.faces_with_edge(e) != 2).count();
        push(
            "edge-face-incidence",
            bad_edges == 0,
            format!("{bad_edges} edges not on exactly 2 faces"),
        );

        let bad_links =
            self.vertices.iter().filter(|&&v| !self.link_is_single_cycle(v)).count();
        push(
            "vertex-links",
            bad_links == 0,
            format!("{bad_links} vertex links are not a single cycle"),
        );

        push("connected", self.is_connected(), String::from("1-skeleton connectivity"));
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.check().iter().all(|c| c.passed) {
            Ok(())
        } else {
            Err(Error::Inconsistent("cell complex structural check failed"))
        }
    }

    /// Link of a vertex: the graph on its face-neighbours with one edge per
    /// incident face. A closed surface needs a single cycle here.
    fn link_is_single_cycle(&self, v: ArcClass) -> bool {
        let mut link_edges: Vec<(ArcClass, ArcClass)> = Vec::new();
        for face in &self.faces {
            if face.contains(v) {
                let others: Vec<ArcClass> =
                    face.classes().into_iter().filter(|&c| c != v).collect();
                link_edges.push((others[0], others[1]));
            }
        }
        if link_edges.is_empty() {
            return false;
        }
        let mut nodes: Vec<ArcClass> = Vec::new();
        for &(x, y) in &link_edges {
            if !nodes.contains(&x) {
                nodes.push(x);
            }
            if !nodes.contains(&y) {
                nodes.push(y);
            }
        }
        // Every node has degree 2 and the link is one connected cycle.
        for &n in &nodes {
            let deg = link_edges.iter().filter(|&&(x, y)| x == n || y == n).count();
            if deg != 2 {
                return false;
            }
        }
        if nodes.len() != link_edges.len() {
            return false;
        }
        let mut seen = alloc::vec![nodes[0]];
        let mut frontier = alloc::vec![nodes[0]];
        while let Some(cur) = frontier.pop() {
            for &(x, y) in &link_edges {
                let next = if x == cur {
                    y
                } else if y == cur {
                    x
                } else {
                    continue;
                };
                if !seen.contains(&next) {
                    seen.push(next);
                    frontier.push(next);
                }
            }
        }
        seen.len() == nodes.len()
    }

    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = alloc::vec![self.vertices[0]];
        let mut frontier = alloc::vec![self.vertices[0]];
        while let Some(cur) = frontier.pop() {
            for &(x, y) in &self.edges {
                let next = if x == cur {
                    y
                } else if y == cur {
                    x
                } else {
                    continue;
                };
                if !seen.contains(&next) {
                    seen.push(next);
                    frontier.push(next);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}
