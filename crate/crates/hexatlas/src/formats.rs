//! JSON-facing data transfer types and their conversions.
//!
//! The convention throughout: side and perpendicular lengths are decimal
//! numbers, transverse measures and chart coordinates are exact rationals
//! serialized as strings `"p/q"` (or `"p"`), and arc classes go by their
//! ASCII names `a, b, c, A, B, C, alpha, beta, gamma`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use hexatlas_core::{
    ArcClass, ArcTriple, ChartCoords, ComplexCheck, Divergence, FoliationClass, HexagonLengths,
    LimitReport, PMFCellComplex, Rational,
};

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(num).map_err(|_| format!("bad rational numerator: {num:?}"))?;
    let q = BigInt::from_str(den).map_err(|_| format!("bad rational denominator: {den:?}"))?;
    if q == BigInt::from(0) {
        return Err(String::from("rational with zero denominator"));
    }
    Ok(Rational::new(p, q))
}

pub fn parse_arc_class(name: &str) -> Result<ArcClass, String> {
    ArcClass::from_name(name.trim()).ok_or_else(|| format!("unknown arc class {name:?}"))
}

/// Parses a comma-separated list of three arc names into a triple, returning
/// the triple and the parsed classes in the user's order.
pub fn parse_triple(spec: &str) -> Result<(ArcTriple, [ArcClass; 3]), String> {
    let names: Vec<&str> = spec.split(',').collect();
    if names.len() != 3 {
        return Err(format!("expected three comma-separated arc names, got {spec:?}"));
    }
    let classes = [
        parse_arc_class(names[0])?,
        parse_arc_class(names[1])?,
        parse_arc_class(names[2])?,
    ];
    let triple = ArcTriple::new(classes)
        .map_err(|_| format!("{spec:?} is not an admissible arc triple"))?;
    Ok((triple, classes))
}

/// Reorders values given in the user's class order into canonical order.
pub fn reorder_to_canonical<T: Clone>(
    triple: &ArcTriple,
    user_classes: &[ArcClass; 3],
    values: &[T; 3],
) -> [T; 3] {
    let canonical = triple.classes();
    std::array::from_fn(|i| {
        let pos = user_classes
            .iter()
            .position(|c| *c == canonical[i])
            .expect("user classes are a permutation of the triple");
        values[pos].clone()
    })
}

fn triple_names(t: &ArcTriple) -> [String; 3] {
    t.classes().map(|c| c.name().to_string())
}

// ---------------------------------------------------------------------------
// Hexagons
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SidesDto {
    pub a: f64,
    #[serde(rename = "C")]
    pub opp_c: f64,
    pub b: f64,
    #[serde(rename = "A")]
    pub opp_a: f64,
    pub c: f64,
    #[serde(rename = "B")]
    pub opp_b: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerpDto {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HexagonDto {
    pub sides: SidesDto,
    pub perp: PerpDto,
}

impl From<&HexagonLengths> for HexagonDto {
    fn from(h: &HexagonLengths) -> Self {
        HexagonDto {
            sides: SidesDto {
                a: h.a,
                opp_c: h.opp_c,
                b: h.b,
                opp_a: h.opp_a,
                c: h.c,
                opp_b: h.opp_b,
            },
            perp: PerpDto { alpha: h.alpha, beta: h.beta, gamma: h.gamma },
        }
    }
}

// ---------------------------------------------------------------------------
// Foliations and charts
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoliationDto {
    pub weights: BTreeMap<String, String>,
}

impl From<&FoliationClass> for FoliationDto {
    fn from(f: &FoliationClass) -> Self {
        FoliationDto {
            weights: f
                .weights()
                .map(|(c, w)| (c.name().to_string(), w.to_string()))
                .collect(),
        }
    }
}

impl FoliationDto {
    pub fn to_foliation(&self) -> Result<FoliationClass, String> {
        let mut pairs = Vec::new();
        for (name, value) in &self.weights {
            pairs.push((parse_arc_class(name)?, parse_rational(value)?));
        }
        FoliationClass::new(pairs).map_err(|e| e.to_string())
    }
}

/// Parses `a=1,beta=1/2` style weight lists.
pub fn parse_weights(spec: &str) -> Result<FoliationClass, String> {
    let mut pairs = Vec::new();
    for item in spec.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("expected name=value in weight list, got {item:?}"))?;
        pairs.push((parse_arc_class(name)?, parse_rational(value)?));
    }
    FoliationClass::new(pairs).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChartDto {
    pub triple: [String; 3],
    pub coords: [String; 3],
    pub region: String,
}

impl From<&ChartCoords> for ChartDto {
    fn from(cc: &ChartCoords) -> Self {
        ChartDto {
            triple: triple_names(cc.triple()),
            coords: std::array::from_fn(|i| cc.coords()[i].to_string()),
            region: cc.region().to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// The cell complex
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDto {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub faces: Vec<[String; 3]>,
}

impl From<&PMFCellComplex> for ComplexDto {
    fn from(c: &PMFCellComplex) -> Self {
        ComplexDto {
            vertices: c.vertices.iter().map(|v| v.name().to_string()).collect(),
            edges: c
                .edges
                .iter()
                .map(|(x, y)| [x.name().to_string(), y.name().to_string()])
                .collect(),
            faces: c.faces.iter().map(triple_names).collect(),
        }
    }
}

impl ComplexDto {
    pub fn to_complex(&self) -> Result<PMFCellComplex, String> {
        let vertices = self
            .vertices
            .iter()
            .map(|n| parse_arc_class(n))
            .collect::<Result<Vec<_>, _>>()?;
        let edges = self
            .edges
            .iter()
            .map(|[x, y]| Ok((parse_arc_class(x)?, parse_arc_class(y)?)))
            .collect::<Result<Vec<_>, String>>()?;
        let faces = self
            .faces
            .iter()
            .map(|[x, y, z]| {
                ArcTriple::new([parse_arc_class(x)?, parse_arc_class(y)?, parse_arc_class(z)?])
                    .map_err(|_| format!("face [{x},{y},{z}] is not an admissible triple"))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(PMFCellComplex { vertices, edges, faces })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReportDto {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&ComplexCheck> for CheckReportDto {
    fn from(c: &ComplexCheck) -> Self {
        CheckReportDto { name: c.name.to_string(), passed: c.passed, detail: c.detail.clone() }
    }
}

// ---------------------------------------------------------------------------
// Boundary limits
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct LimitDto {
    pub classification: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<[f64; 6]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collar_at_nmax: Option<f64>,
}

impl LimitDto {
    pub fn bounded() -> Self {
        LimitDto {
            classification: String::from("bounded"),
            witness: None,
            limit: None,
            chart: None,
            collar_at_nmax: None,
        }
    }

    pub fn from_report(report: &LimitReport) -> Self {
        LimitDto {
            classification: String::from("diverges"),
            witness: Some(triple_names(&report.witness)),
            limit: Some(report.limit.values()),
            chart: Some(triple_names(&report.chart)),
            collar_at_nmax: Some(report.collar_at_nmax),
        }
    }

    pub fn from_divergence(d: &Divergence) -> Self {
        match d {
            Divergence::Bounded => Self::bounded(),
            Divergence::ToInfinity { witness } => LimitDto {
                classification: String::from("diverges"),
                witness: Some(triple_names(witness)),
                limit: None,
                chart: None,
                collar_at_nmax: None,
            },
        }
    }
}

/// CSV rows of a limit trace: `n`, the nine lengths, the six normalized
/// coordinates.
pub fn trace_csv(report: &LimitReport) -> String {
    let mut out = String::from(
        "n,a,b,c,A,B,C,alpha,beta,gamma,na,nb,nc,nA,nB,nC\n",
    );
    for step in &report.steps {
        out.push_str(&step.n.to_string());
        for v in step.lengths.iter().chain(step.normalized.iter()) {
            out.push(',');
            out.push_str(&format_f64(*v));
        }
        out.push('\n');
    }
    out
}

/// Shortest round-trip decimal form, matching the JSON encoder.
pub fn format_f64(v: f64) -> String {
    serde_json::to_string(&v).expect("finite float serializes")
}
