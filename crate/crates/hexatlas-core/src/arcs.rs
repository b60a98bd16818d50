//! Arc classes on the hexagon and the census of admissible arc triples.
//!
//! The hexagon's boundary edges are labelled in cyclic order `a, C, b, A, c, B`
//! (side `a` opposite side `A`, and so on). An essential arc joins two
//! non-adjacent edges; up to homotopy there are nine classes:
//!
//! - six *corner* arcs, one per side, each cutting off its named side (the arc
//!   `a` runs between the two edges adjacent to side `a`, namely `B` and `C`);
//! - three *spanning* arcs `alpha`, `beta`, `gamma` joining the opposite pairs
//!   `a`–`A`, `b`–`B`, `c`–`C`.
//!
//! Two classes have geometric intersection number 1 exactly when their chords
//! strictly interleave on the boundary circle; chords sharing an endpoint edge
//! can always be pushed apart along that edge, so they do not cross.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// One of the six boundary edges, indexed `0..6` in the cyclic order
/// `a, C, b, A, c, B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u8);

impl EdgeId {
    /// Edge labels in cyclic order.
    pub const LABELS: [&'static str; 6] = ["a", "C", "b", "A", "c", "B"];

    /// Wraps the index modulo 6.
    pub const fn new(index: u8) -> Self {
        EdgeId(index % 6)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub const fn label(self) -> &'static str {
        Self::LABELS[self.0 as usize]
    }

    /// The next edge counterclockwise.
    pub const fn next(self) -> Self {
        EdgeId((self.0 + 1) % 6)
    }

    /// True when the two edges share a vertex of the hexagon.
    pub const fn is_adjacent(self, other: EdgeId) -> bool {
        let d = (self.0 + 6 - other.0) % 6;
        d == 1 || d == 5
    }
}

/// One of the nine arc classes.
///
/// Variant names follow the edge labels: `A` is the corner arc cutting off
/// side `a`, `OppA` the one cutting off the opposite side `A`, and `Alpha`
/// the spanning arc joining those two sides. The declaration order is the
/// canonical order used everywhere for sorting and serialization:
/// `a < alpha < b < beta < c < gamma < A < B < C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcClass {
    /// Corner arc retracting onto side `a` (serialized `"a"`).
    A,
    /// Spanning arc joining sides `a` and `A` (serialized `"alpha"`).
    Alpha,
    /// Corner arc retracting onto side `b` (serialized `"b"`).
    B,
    /// Spanning arc joining sides `b` and `B` (serialized `"beta"`).
    Beta,
    /// Corner arc retracting onto side `c` (serialized `"c"`).
    C,
    /// Spanning arc joining sides `c` and `C` (serialized `"gamma"`).
    Gamma,
    /// Corner arc retracting onto side `A` (serialized `"A"`).
    OppA,
    /// Corner arc retracting onto side `B` (serialized `"B"`).
    OppB,
    /// Corner arc retracting onto side `C` (serialized `"C"`).
    OppC,
}

use ArcClass::*;

impl ArcClass {
    /// All nine classes in canonical order.
    pub const ALL: [ArcClass; 9] = [A, Alpha, B, Beta, C, Gamma, OppA, OppB, OppC];

    /// ASCII serialization name.
    pub const fn name(self) -> &'static str {
        match self {
            A => "a",
            B => "b",
            C => "c",
            OppA => "A",
            OppB => "B",
            OppC => "C",
            Alpha => "alpha",
            Beta => "beta",
            Gamma => "gamma",
        }
    }

    /// Parses a serialization name.
    pub fn from_name(name: &str) -> Option<ArcClass> {
        ArcClass::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// True for `alpha`, `beta`, `gamma`.
    pub const fn is_spanning(self) -> bool {
        matches!(self, Alpha | Beta | Gamma)
    }

    /// The pair of non-adjacent boundary edges holding the arc's endpoints.
    ///
    /// A corner arc ends on the two edges adjacent to its named side; a
    /// spanning arc ends on its two named opposite sides.
    pub const fn edge_pair(self) -> (EdgeId, EdgeId) {
        // Edge indices: 0:a, 1:C, 2:b, 3:A, 4:c, 5:B.
        let (i, j) = match self {
            A => (5, 1),
            B => (1, 3),
            C => (3, 5),
            OppA => (2, 4),
            OppB => (4, 0),
            OppC => (0, 2),
            Alpha => (0, 3),
            Beta => (2, 5),
            Gamma => (4, 1),
        };
        (EdgeId::new(i), EdgeId::new(j))
    }

    /// Geometric intersection number with another class, in `{0, 1}`.
    ///
    /// Chord rule on the disk with six marked boundary edges: two chords
    /// cross exactly when their endpoint edge pairs strictly interleave on
    /// the cycle; pairs sharing an edge never interleave.
    pub fn crosses(self, other: ArcClass) -> u8 {
        let (p1, p2) = self.edge_pair();
        let (q1, q2) = other.edge_pair();
        if p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2 {
            return 0;
        }
        // Walk the cycle strictly between p1 and p2; the chords interleave
        // when exactly one of q1, q2 lies on that side.
        let inside = |e: EdgeId| -> bool {
            let span = (p2.index() + 6 - p1.index()) % 6;
            let off = (e.index() + 6 - p1.index()) % 6;
            off > 0 && off < span
        };
        u8::from(inside(q1) != inside(q2))
    }

    /// For a corner arc, the corner arc of the opposite side (`a <-> A`).
    pub const fn opposite(self) -> Option<ArcClass> {
        match self {
            A => Some(OppA),
            B => Some(OppB),
            C => Some(OppC),
            OppA => Some(A),
            OppB => Some(B),
            OppC => Some(C),
            _ => None,
        }
    }

    /// For a corner arc, the spanning arc joining its side to the opposite one.
    pub const fn spanning_partner(self) -> Option<ArcClass> {
        match self {
            A | OppA => Some(Alpha),
            B | OppB => Some(Beta),
            C | OppC => Some(Gamma),
            _ => None,
        }
    }

    /// Image under the order-three rotation of the hexagon by two edges:
    /// `a -> b -> c -> a`, `A -> B -> C -> A`, `alpha -> beta -> gamma -> alpha`.
    pub const fn rotate(self) -> ArcClass {
        match self {
            A => B,
            B => C,
            C => A,
            OppA => OppB,
            OppB => OppC,
            OppC => OppA,
            Alpha => Beta,
            Beta => Gamma,
            Gamma => Alpha,
        }
    }

    /// Image under the half-turn swapping each side with its opposite
    /// (`a <-> A`); the spanning arcs are fixed.
    pub const fn swap_opposite(self) -> ArcClass {
        match self {
            A => OppA,
            B => OppB,
            C => OppC,
            OppA => A,
            OppB => B,
            OppC => C,
            s => s,
        }
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three combinatorial kinds of arc triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleCase {
    /// Three corner arcs of the same parity: `{a,b,c}` or `{A,B,C}`.
    One,
    /// One spanning arc and two corner arcs of one parity, e.g. `{alpha,b,c}`.
    Two,
    /// One spanning arc and the remaining opposite corner pair, e.g. `{a,A,beta}`.
    Three,
}

impl TripleCase {
    pub const fn number(self) -> u8 {
        match self {
            TripleCase::One => 1,
            TripleCase::Two => 2,
            TripleCase::Three => 3,
        }
    }
}

/// One of the 14 admissible arc triples: three distinct, pairwise disjoint
/// arc classes, stored in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcTriple {
    classes: [ArcClass; 3],
    case: TripleCase,
}

impl ArcTriple {
    /// Builds a triple from three classes, rejecting repeats and crossings.
    pub fn new(mut classes: [ArcClass; 3]) -> Result<ArcTriple> {
        classes.sort_unstable();
        if classes[0] == classes[1] || classes[1] == classes[2] {
            return Err(Error::InvalidTriple);
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if classes[i].crosses(classes[j]) != 0 {
                    return Err(Error::InvalidTriple);
                }
            }
        }
        let case = Self::classify(&classes);
        Ok(ArcTriple { classes, case })
    }

    fn classify(classes: &[ArcClass; 3]) -> TripleCase {
        let spanning = classes.iter().filter(|c| c.is_spanning()).count();
        match spanning {
            0 => TripleCase::One,
            1 => {
                let corners: Vec<ArcClass> =
                    classes.iter().copied().filter(|c| !c.is_spanning()).collect();
                if corners[0].opposite() == Some(corners[1]) {
                    TripleCase::Three
                } else {
                    TripleCase::Two
                }
            }
            // Spanning arcs pairwise cross, so this is unreachable for
            // admissible triples.
            _ => unreachable!("spanning arcs pairwise cross"),
        }
    }

    /// The classes in canonical order.
    pub const fn classes(&self) -> [ArcClass; 3] {
        self.classes
    }

    /// The case number of this triple.
    pub const fn case(&self) -> TripleCase {
        self.case
    }

    pub fn contains(&self, c: ArcClass) -> bool {
        self.classes.contains(&c)
    }

    /// Position of a class inside the canonical ordering, if present.
    pub fn position(&self, c: ArcClass) -> Option<usize> {
        self.classes.iter().position(|&x| x == c)
    }

    /// The spanning arc of a case-2/3 triple.
    pub fn spanning(&self) -> Option<ArcClass> {
        self.classes.iter().copied().find(|c| c.is_spanning())
    }

    /// Classwise image under a relabelling of the hexagon.
    pub fn map(&self, f: impl Fn(ArcClass) -> ArcClass) -> ArcTriple {
        ArcTriple::new([f(self.classes[0]), f(self.classes[1]), f(self.classes[2])])
            .expect("relabelling preserves admissibility")
    }
}

impl fmt::Display for ArcTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.classes[0], self.classes[1], self.classes[2])
    }
}

/// Enumerates the 14 admissible arc triples in canonical order.
///
/// Brute force over all 3-subsets of the nine classes, keeping the pairwise
/// disjoint ones.
pub fn compatible_triples() -> Vec<ArcTriple> {
    let mut out = Vec::with_capacity(14);
    let all = ArcClass::ALL;
    for i in 0..9 {
        for j in i + 1..9 {
            if all[i].crosses(all[j]) != 0 {
                continue;
            }
            for k in j + 1..9 {
                if all[i].crosses(all[k]) == 0 && all[j].crosses(all[k]) == 0 {
                    out.push(
                        ArcTriple::new([all[i], all[j], all[k]])
                            .expect("pairwise disjoint by construction"),
                    );
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Looks up the admissible triple on the given classes.
pub fn triple(x: ArcClass, y: ArcClass, z: ArcClass) -> Result<ArcTriple> {
    ArcTriple::new([x, y, z])
}
