//! Hyperbolic trigonometry of right-angled hexagons and pentagons.
//!
//! A right hexagon has geodesic sides and six right angles. Its boundary
//! edges are labelled cyclically `a, C, b, A, c, B`; each pair of opposite
//! sides carries a unique common perpendicular (`alpha` between `a` and `A`,
//! and so on), which is also the geodesic representative of the spanning arc
//! of the same name. Together the six sides and three perpendiculars are the
//! lengths of the nine arc classes.
//!
//! Governing identities, with `C` between `a` and `b` (opposite `c`):
//!
//! ```text
//! cosh C = (cosh c + cosh a cosh b) / (sinh a sinh b)
//! sinh A / sinh a = sinh B / sinh b = sinh C / sinh c
//! cosh alpha = sinh b sinh C = sinh c sinh B          (cyclically for beta, gamma)
//! ```
//!
//! Cutting along a perpendicular yields two all-right pentagons, whose
//! consecutive sides `s_0..s_4` satisfy both relation families
//!
//! ```text
//! cosh s_i = coth s_{i-1} coth s_{i+1} = sinh s_{i+2} sinh s_{i+3}   (mod 5)
//! ```
//!
//! The pentagon pair is what lets a hexagon be solved from any of the 14 arc
//! triples, not just from three alternating sides.

use crate::arcs::{ArcClass, ArcTriple, EdgeId, TripleCase};
use crate::numeric::{
    acosh1p, asinh_of_exp, coth, coth_m1, ln_cosh, ln_coth, ln_sinh,
    log_add_exp, valid_length,
};
use crate::{Error, Result};

/// Per-invariant numeric tolerances. The defaults are the ones the public
/// constructors enforce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative agreement of each side with the value recomputed from the
    /// opposite-side formula.
    pub side_relation: f64,
    /// Log-scale residual of the law of sines.
    pub law_of_sines: f64,
    /// Relative agreement of each perpendicular with both sinh-product routes.
    pub perp_product: f64,
    /// Residual of the two coth-product identities for perpendicular feet.
    pub feet: f64,
    /// Residual of the pentagon relation families.
    pub pentagon: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            side_relation: 1e-10,
            law_of_sines: 1e-10,
            perp_product: 1e-10,
            feet: 1e-9,
            pentagon: 1e-10,
        }
    }
}

fn rel_err(x: f64, y: f64) -> f64 {
    let scale = libm::fabs(x).max(libm::fabs(y)).max(1e-300);
    libm::fabs(x - y) / scale
}

/// Input lengths must clear the degeneration floor.
fn check_length(x: f64) -> Result<f64> {
    if valid_length(x) {
        Ok(x)
    } else {
        Err(Error::NonPositiveLength(x))
    }
}

/// Derived lengths only need to be positive: a solved hexagon in a
/// degenerating regime can have sides far below the input floor.
fn check_positive(x: f64) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::NonPositiveLength(x))
    }
}

/// The side of the hexagon between adjacent sides `u` and `v`, whose opposite
/// side has length `w`.
///
/// Evaluates `acosh((cosh w + cosh u cosh v) / (sinh u sinh v))` on the log
/// scale, so it stays accurate when the result is near zero (arguments near 1)
/// and does not overflow for lengths up to ~1e17. Symmetric in `(u, v)`.
pub fn opposite_side(u: f64, v: f64, w: f64) -> Result<f64> {
    check_length(u)?;
    check_length(v)?;
    check_length(w)?;
    Ok(opposite_side_raw(u, v, w))
}

/// `opposite_side` without the input floor, for re-deriving sides of already
/// constructed hexagons whose lengths may sit below it.
fn opposite_side_raw(u: f64, v: f64, w: f64) -> f64 {
    let ln_ratio = ln_cosh(w) - ln_sinh(u) - ln_sinh(v);
    let ln_coth_prod = ln_coth(u) + ln_coth(v);
    crate::numeric::acosh_of_exp(log_add_exp(ln_ratio, ln_coth_prod))
}

/// Perpendicular between the alternating side `u` and its opposite, given the
/// other two alternating sides `v`, `w`:
///
/// ```text
/// sinh(perp)^2 = (cosh^2 v + cosh^2 w + 2 cosh u cosh v cosh w) / sinh^2 u
/// ```
///
/// This closed form (eliminate the opposite side from
/// `cosh perp = sinh v sinh(opp)`) is a sum of positive terms, so unlike the
/// sinh-product route it has no cancellation when the perpendicular is tiny.
/// It underflows to exactly 0 only when the true value is below double
/// precision altogether.
fn perp_from_alternating(u: f64, v: f64, w: f64) -> f64 {
    let t1 = 2.0 * ln_cosh(v);
    let t2 = 2.0 * ln_cosh(w);
    let t3 = core::f64::consts::LN_2 + ln_cosh(u) + ln_cosh(v) + ln_cosh(w);
    let ln_num = log_add_exp(log_add_exp(t1, t2), t3);
    asinh_of_exp(0.5 * ln_num - ln_sinh(u))
}

/// `opposite_side` applied to the triple scaled by `t`.
pub fn scaled_opposite(u: f64, v: f64, w: f64, t: f64) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::NonPositiveLength(t));
    }
    opposite_side(t * u, t * v, t * w)
}

/// Sign kernel of the scaling derivative: the derivative of
/// `t -> cosh(tc) / (sinh(ta) sinh(tb))` has the sign of
///
/// ```text
/// u(t) = c sinh(tc) sinh(ta) sinh(tb)
///        - a cosh(ta) cosh(tc) sinh(tb) - b cosh(tb) cosh(tc) sinh(ta)
/// ```
///
/// For `a >= b >= c > 0` this is strictly negative for every `t > 0`, which
/// is why the side opposite the smallest alternating side shrinks when the
/// alternating triple is scaled up, and why no two distinct right hexagons
/// are homothetic. Evaluated directly; arguments `t * max(a,b,c)` must stay
/// below ~230 to avoid overflow of the triple product.
pub fn monotonicity_kernel(a: f64, b: f64, c: f64, t: f64) -> f64 {
    let (sa, ca) = (libm::sinh(t * a), libm::cosh(t * a));
    let (sb, cb) = (libm::sinh(t * b), libm::cosh(t * b));
    let (sc, cc) = (libm::sinh(t * c), libm::cosh(t * c));
    c * sc * sa * sb - a * ca * cc * sb - b * cb * cc * sa
}

/// The nine lengths of a right hexagon: six sides and three perpendiculars.
///
/// `opp_a` is the side opposite `a` (usually written `A`); `alpha` is the
/// common perpendicular of `a` and `opp_a`. All values are positive and
/// mutually consistent under the trig relations in the module docs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexagonLengths {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub opp_a: f64,
    pub opp_b: f64,
    pub opp_c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl HexagonLengths {
    /// Builds the hexagon with alternating sides `a, b, c`; the remaining
    /// sides and the perpendiculars are derived.
    pub fn solve_from_alternating(a: f64, b: f64, c: f64) -> Result<HexagonLengths> {
        let opp_a = opposite_side(b, c, a)?;
        let opp_b = opposite_side(c, a, b)?;
        let opp_c = opposite_side(a, b, c)?;
        Self::from_sides(a, b, c, opp_a, opp_b, opp_c)
    }

    /// Builds the hexagon from all six sides, deriving the perpendiculars.
    /// The sides must already satisfy the hexagon relations; this is checked.
    pub fn from_sides(
        a: f64,
        b: f64,
        c: f64,
        opp_a: f64,
        opp_b: f64,
        opp_c: f64,
    ) -> Result<HexagonLengths> {
        for s in [a, b, c, opp_a, opp_b, opp_c] {
            check_positive(s)?;
        }
        // Closed form from the alternating triple; both sinh-product routes
        // are cross-checked in validate().
        let perp = |u: f64, v: f64, w: f64| -> Result<f64> {
            check_positive(perp_from_alternating(u, v, w))
                .map_err(|_| Error::Infeasible("perpendicular below double precision"))
        };
        let alpha = perp(a, b, c)?;
        let beta = perp(b, c, a)?;
        let gamma = perp(c, a, b)?;
        let h = HexagonLengths { a, b, c, opp_a, opp_b, opp_c, alpha, beta, gamma };
        h.validate()?;
        Ok(h)
    }

    /// Solves the hexagon whose three arc lengths along `t` (in the triple's
    /// canonical class order) are `lengths`.
    ///
    /// Case-1 triples go through the opposite-side formulas; case-2 and
    /// case-3 triples are split along their spanning arc into two right
    /// pentagons, each determined by the spanning length and one corner.
    pub fn solve_from_triple(t: &ArcTriple, lengths: [f64; 3]) -> Result<HexagonLengths> {
        for l in lengths {
            check_length(l)?;
        }
        let classes = t.classes();
        match t.case() {
            TripleCase::One => {
                if classes[0] == ArcClass::A {
                    // (a, b, c)
                    Self::solve_from_alternating(lengths[0], lengths[1], lengths[2])
                } else {
                    // (A, B, C): recover the alternating triple first.
                    let (la, lb, lc) = (lengths[0], lengths[1], lengths[2]);
                    let a = opposite_side(lb, lc, la)?;
                    let b = opposite_side(la, lc, lb)?;
                    let c = opposite_side(la, lb, lc)?;
                    Self::from_sides(a, b, c, la, lb, lc)
                }
            }
            TripleCase::Two | TripleCase::Three => {
                let spanning = t.spanning().expect("case 2/3 triples have a spanning arc");
                let g = lengths[t.position(spanning).unwrap()];
                let corners: alloc::vec::Vec<(ArcClass, f64)> = classes
                    .iter()
                    .zip(lengths)
                    .filter(|(cl, _)| !cl.is_spanning())
                    .map(|(cl, l)| (*cl, l))
                    .collect();
                Self::solve_split(spanning, g, corners[0], corners[1])
            }
        }
    }

    /// Solves the hexagon cut along the spanning arc `spanning` of length `g`,
    /// given one corner-arc length on each side of the cut.
    fn solve_split(
        spanning: ArcClass,
        g: f64,
        first: (ArcClass, f64),
        second: (ArcClass, f64),
    ) -> Result<HexagonLengths> {
        let sides = split_sides(spanning, g, first, second)?;
        // Edge order is (a, C, b, A, c, B).
        let h = Self::from_sides(sides[0], sides[2], sides[4], sides[3], sides[5], sides[1])?;
        // The given spanning length must be reproduced by the assembly.
        if rel_err(h.arc_length(spanning), g) > 1e-8 {
            return Err(Error::Inconsistent("reassembled perpendicular deviates from input"));
        }
        Ok(h)
    }

    /// Side lengths in the order `(a, b, c, A, B, C)`.
    pub const fn sides6(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.opp_a, self.opp_b, self.opp_c]
    }
}

/// Sides of the hexagon split along `spanning` (length `g`), one corner-arc
/// length known on each side of the cut. Returned indexed by boundary edge.
fn split_sides(
    spanning: ArcClass,
    g: f64,
    first: (ArcClass, f64),
    second: (ArcClass, f64),
) -> Result<[f64; 6]> {
    // The spanning arc joins side p to its opposite P. Cutting along it
    // leaves two pentagons (g, p-part, side_{e_p+1}, side_{e_p+2}, P-part)
    // and (g, P-part, side_{e_P+1}, side_{e_P+2}, p-part).
    let (e_p, e_q) = spanning.edge_pair();
    let mut sides = [f64::NAN; 6];
    let mut p_part = [f64::NAN; 2]; // contributions to side p from each pentagon
    let mut q_part = [f64::NAN; 2];

    for (corner, v) in [first, second] {
        let e = side_edge(corner).ok_or(Error::InvalidTriple)?;
        // Locate the corner inside its pentagon: offset 1 means adjacent
        // to the near part of the cut side, offset 2 adjacent to the far.
        let (pent, near_is_p, off) = if e == e_p.next() {
            (0usize, true, 1)
        } else if e == e_p.next().next() {
            (0, true, 2)
        } else if e == e_q.next() {
            (1, false, 1)
        } else if e == e_q.next().next() {
            (1, false, 2)
        } else {
            return Err(Error::Inconsistent("corner side touches the cut"));
        };

        // Pentagon relations around the cut of length g:
        //   part adjacent to the corner: acosh(coth g coth v)
        //   remaining full side:         asinh(cosh g / sinh v)
        //   part away from the corner:   asinh(cosh v / sinh g)
        let eg = coth_m1(g);
        let ev = coth_m1(v);
        let adjacent_part = acosh1p(eg + ev + eg * ev);
        let other_side = asinh_of_exp(ln_cosh(g) - ln_sinh(v));
        let far_part = asinh_of_exp(ln_cosh(v) - ln_sinh(g));

        let other_edge = if off == 1 { e.next() } else { EdgeId::new(e.index() + 5) };
        sides[e.index() as usize] = v;
        sides[other_edge.index() as usize] = other_side;
        let (near, far) = if off == 1 { (adjacent_part, far_part) } else { (far_part, adjacent_part) };
        if near_is_p {
            p_part[pent] = near;
            q_part[pent] = far;
        } else {
            q_part[pent] = near;
            p_part[pent] = far;
        }
    }

    if p_part.iter().chain(&q_part).any(|v| v.is_nan()) {
        return Err(Error::Inconsistent("corner lengths must lie on both sides of the cut"));
    }
    sides[e_p.index() as usize] = p_part[0] + p_part[1];
    sides[e_q.index() as usize] = q_part[0] + q_part[1];
    Ok(sides)
}

/// All nine arc lengths of the hexagon realizing `lengths` on the triple `t`,
/// ordered `(a, b, c, A, B, C, alpha, beta, gamma)`.
///
/// Unlike [`HexagonLengths::solve_from_triple`] this tolerates perpendiculars
/// that underflow double precision (they come back as 0), which happens only
/// in deep degeneration regimes such as `exp(n)` length families. The six
/// sides are always positive.
pub(crate) fn arc_lengths9(t: &ArcTriple, lengths: [f64; 3]) -> Result<[f64; 9]> {
    for l in lengths {
        check_length(l)?;
    }
    let classes = t.classes();
    let by_edge: [f64; 6] = match t.case() {
        TripleCase::One => {
            let (sa, sb, sc, oa, ob, oc);
            if classes[0] == ArcClass::A {
                [sa, sb, sc] = lengths;
                oa = opposite_side_raw(sb, sc, sa);
                ob = opposite_side_raw(sc, sa, sb);
                oc = opposite_side_raw(sa, sb, sc);
            } else {
                [oa, ob, oc] = lengths;
                sa = opposite_side_raw(ob, oc, oa);
                sb = opposite_side_raw(oc, oa, ob);
                sc = opposite_side_raw(oa, ob, oc);
            }
            [sa, oc, sb, oa, sc, ob]
        }
        TripleCase::Two | TripleCase::Three => {
            let spanning = t.spanning().expect("case 2/3 triples have a spanning arc");
            let g = lengths[t.position(spanning).unwrap()];
            let corners: alloc::vec::Vec<(ArcClass, f64)> = classes
                .iter()
                .zip(lengths)
                .filter(|(cl, _)| !cl.is_spanning())
                .map(|(cl, l)| (*cl, l))
                .collect();
            split_sides(spanning, g, corners[0], corners[1])?
        }
    };
    let [sa, oc, sb, oa, sc, ob] = by_edge;
    for s in by_edge {
        check_positive(s)?;
    }
    let alpha = perp_from_alternating(sa, sb, sc);
    let beta = perp_from_alternating(sb, sc, sa);
    let gamma = perp_from_alternating(sc, sa, sb);
    Ok([sa, sb, sc, oa, ob, oc, alpha, beta, gamma])
}

impl HexagonLengths {
    /// Length of the geodesic representative of an arc class: the named side
    /// for a corner arc, the common perpendicular for a spanning arc.
    pub const fn arc_length(&self, class: ArcClass) -> f64 {
        match class {
            ArcClass::A => self.a,
            ArcClass::B => self.b,
            ArcClass::C => self.c,
            ArcClass::OppA => self.opp_a,
            ArcClass::OppB => self.opp_b,
            ArcClass::OppC => self.opp_c,
            ArcClass::Alpha => self.alpha,
            ArcClass::Beta => self.beta,
            ArcClass::Gamma => self.gamma,
        }
    }

    /// Lengths of the three arcs of a triple, in canonical class order.
    pub fn triple_lengths(&self, t: &ArcTriple) -> [f64; 3] {
        let [x, y, z] = t.classes();
        [self.arc_length(x), self.arc_length(y), self.arc_length(z)]
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(&Tolerances::default())
    }

    /// Checks every trig invariant at the given tolerances.
    ///
    /// Log-scale residuals are allowed extra slack proportional to the ULP of
    /// the largest side: past ~1e16 the additive constants in `ln sinh` fall
    /// below double resolution, so only the relative checks stay meaningful
    /// there.
    pub fn validate_with(&self, tol: &Tolerances) -> Result<()> {
        let Self { a, b, c, opp_a, opp_b, opp_c, alpha, beta, gamma } = *self;
        for l in [a, b, c, opp_a, opp_b, opp_c, alpha, beta, gamma] {
            check_positive(l)?;
        }
        let max_side = [a, b, c, opp_a, opp_b, opp_c].into_iter().fold(1.0f64, f64::max);
        let ulp_slack = 4.0 * f64::EPSILON * max_side;

        // Opposite-side relations, compared on the length scale.
        let relations = [
            (opp_a, opposite_side_raw(b, c, a)),
            (opp_b, opposite_side_raw(c, a, b)),
            (opp_c, opposite_side_raw(a, b, c)),
        ];
        for (stored, recomputed) in relations {
            if rel_err(stored, recomputed) > tol.side_relation {
                return Err(Error::Inconsistent("opposite-side relation violated"));
            }
        }

        // Law of sines on the log scale.
        let d1 = ln_sinh(opp_a) - ln_sinh(a);
        let d2 = ln_sinh(opp_b) - ln_sinh(b);
        let d3 = ln_sinh(opp_c) - ln_sinh(c);
        let allowed = tol.law_of_sines + ulp_slack;
        if libm::fabs(d1 - d2) > allowed || libm::fabs(d1 - d3) > allowed {
            return Err(Error::Inconsistent("law of sines violated"));
        }

        // Each perpendicular against the closed form (relative, on the
        // length scale) and against both sinh-product routes. The products
        // are compared as logs of cosh, where their error is additive ULP
        // noise instead of catastrophic cancellation for small
        // perpendiculars.
        let products = [
            (alpha, (a, b, c), (b, opp_c), (c, opp_b)),
            (beta, (b, c, a), (c, opp_a), (a, opp_c)),
            (gamma, (c, a, b), (a, opp_b), (b, opp_a)),
        ];
        for (stored, (u, v, w), route1, route2) in products {
            if rel_err(stored, perp_from_alternating(u, v, w)) > tol.perp_product {
                return Err(Error::Inconsistent("perpendicular closed form violated"));
            }
            let lhs = ln_cosh(stored);
            for (p, q) in [route1, route2] {
                let rhs = ln_sinh(p) + ln_sinh(q);
                let allowed = tol.perp_product + 4.0 * f64::EPSILON * (p + q).max(1.0);
                if libm::fabs(lhs - rhs) > allowed {
                    return Err(Error::Inconsistent("perpendicular product violated"));
                }
            }
        }
        Ok(())
    }

    /// Feet of a perpendicular on its two opposite sides.
    ///
    /// For `alpha`: `x` is measured along side `a` from the vertex shared
    /// with side `C`, `y` along side `A` from the vertex shared with side
    /// `b`; `beta` and `gamma` follow by rotating all labels. Both pentagon
    /// routes are computed and must agree, and the returned feet satisfy
    /// `cosh(perp) = coth x coth y = coth(p - x) coth(P - y)`.
    pub fn perpendicular_feet(&self, which: ArcClass) -> Result<FeetSolution> {
        let tol = Tolerances::default();
        // (perp, p, P, near cosh source, far cosh source); sinh x = cosh(near)/sinh(perp)
        // from the pentagon holding the near vertex, and x = p - asinh(cosh(far)/sinh(perp))
        // from the other pentagon.
        let (g, p, q, near_x, near_y, far_x, far_y) = match which {
            ArcClass::Alpha => (self.alpha, self.a, self.opp_a, self.b, self.opp_c, self.c, self.opp_b),
            ArcClass::Beta => (self.beta, self.b, self.opp_b, self.c, self.opp_a, self.a, self.opp_c),
            ArcClass::Gamma => (self.gamma, self.c, self.opp_c, self.a, self.opp_b, self.b, self.opp_a),
            _ => return Err(Error::InvalidTriple),
        };
        let x = asinh_of_exp(ln_cosh(near_x) - ln_sinh(g));
        let y = asinh_of_exp(ln_cosh(near_y) - ln_sinh(g));
        let x_other = p - asinh_of_exp(ln_cosh(far_x) - ln_sinh(g));
        let y_other = q - asinh_of_exp(ln_cosh(far_y) - ln_sinh(g));
        if rel_err(x, x_other) > tol.feet || rel_err(y, y_other) > tol.feet {
            return Err(Error::Inconsistent("pentagon routes for feet disagree"));
        }
        if !(x > 0.0 && x < p && y > 0.0 && y < q) {
            return Err(Error::Inconsistent("perpendicular foot outside its side"));
        }
        let feet = FeetSolution { x, y };
        if g < 300.0 {
            // cosh overflows past this point; the two-route agreement above
            // already pins the feet there.
            let r1 = libm::fabs(coth(x) * coth(y) - libm::cosh(g));
            let r2 = libm::fabs(coth(p - x) * coth(q - y) - libm::cosh(g));
            let scale = libm::cosh(g).max(1.0);
            if r1 / scale > tol.feet || r2 / scale > tol.feet {
                return Err(Error::Inconsistent("feet product identity violated"));
            }
        }
        Ok(feet)
    }
}

/// Where a perpendicular meets its two opposite sides; see
/// [`HexagonLengths::perpendicular_feet`] for the measuring convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeetSolution {
    pub x: f64,
    pub y: f64,
}

/// Boundary edge on which a corner arc's named side lies.
const fn side_edge(corner: ArcClass) -> Option<EdgeId> {
    let idx = match corner {
        ArcClass::A => 0,
        ArcClass::OppC => 1,
        ArcClass::B => 2,
        ArcClass::OppA => 3,
        ArcClass::C => 4,
        ArcClass::OppB => 5,
        _ => return None,
    };
    Some(EdgeId::new(idx))
}

/// Consecutive sides of an all-right hyperbolic pentagon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentagonLengths {
    pub sides: [f64; 5],
}

impl PentagonLengths {
    /// Checks both pentagon relation families at every index.
    pub fn validate_with(&self, tol: f64) -> Result<()> {
        for s in self.sides {
            check_positive(s)?;
        }
        let max_side = self.sides.into_iter().fold(1.0f64, f64::max);
        let allowed = tol + 4.0 * f64::EPSILON * max_side;
        for i in 0..5 {
            let s = |k: usize| self.sides[(i + k) % 5];
            let lhs = ln_cosh(s(0));
            let sinh_form = ln_sinh(s(2)) + ln_sinh(s(3));
            let coth_form = ln_coth(s(4)) + ln_coth(s(1));
            if libm::fabs(lhs - sinh_form) > allowed || libm::fabs(lhs - coth_form) > allowed {
                return Err(Error::Inconsistent("pentagon relation violated"));
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_with(Tolerances::default().pentagon)
    }
}

/// The side between two non-adjacent pentagon sides `u`, `v`:
/// `cosh t = coth u coth v`. Symmetric, total on positive lengths.
pub fn pentagon_between(u: f64, v: f64) -> Result<f64> {
    check_length(u)?;
    check_length(v)?;
    let (eu, ev) = (coth_m1(u), coth_m1(v));
    Ok(acosh1p(eu + ev + eu * ev))
}

/// Completes an all-right pentagon from two non-adjacent sides at positions
/// `i` and `j` (cyclic distance 2 apart).
pub fn complete_pentagon(i: usize, si: f64, j: usize, sj: f64) -> Result<PentagonLengths> {
    check_length(si)?;
    check_length(sj)?;
    let (i, j, si, sj) = if (i + 2) % 5 == j % 5 {
        (i % 5, j % 5, si, sj)
    } else if (j + 2) % 5 == i % 5 {
        (j % 5, i % 5, sj, si)
    } else {
        return Err(Error::Infeasible("given pentagon sides must be non-adjacent"));
    };
    let mut sides = [f64::NAN; 5];
    sides[i] = si;
    sides[j] = sj;
    sides[(i + 1) % 5] = pentagon_between(si, sj)?;
    // cosh s_i = sinh s_{i+2} sinh s_{i+3} and cosh s_j = sinh s_{j+2} sinh s_{j+3}.
    sides[(i + 3) % 5] = asinh_of_exp(ln_cosh(si) - ln_sinh(sj));
    sides[(i + 4) % 5] = asinh_of_exp(ln_cosh(sj) - ln_sinh(si));
    let pentagon = PentagonLengths { sides };
    pentagon.validate()?;
    Ok(pentagon)
}
