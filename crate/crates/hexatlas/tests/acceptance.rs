//! Acceptance suite: one test per release criterion, each printing a single
//! PASS line with its measured detail (run with `--nocapture` to see them).
//! Tolerances and sample counts are pinned here, not configurable.

use std::time::Instant;

use hexatlas_core::foliation::formulas;
use hexatlas_core::hexagon::{monotonicity_kernel, opposite_side, scaled_opposite};
use hexatlas_core::{
    boundary_chart, boundary_chart_inverse, boundary_limit, compatible_triples, diverges,
    pmf_cell_complex, projective_embed_foliation, ArcClass, ArcTriple, ChartCoords,
    CompactifiedPoint, Divergence, FoliationClass, HexagonLengths, Rational, SeqExpr,
    SequenceSpec, TeichPoint, TripleCase,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ArcClass::{Alpha, Beta, Gamma, OppA, OppB, OppC, A, B, C};

fn pass(number: u32, name: &str, detail: String) {
    println!("criterion {number:2} ({name}): PASS - {detail}");
}

fn triple(classes: [ArcClass; 3]) -> ArcTriple {
    ArcTriple::new(classes).expect("admissible triple")
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / x.abs().max(y.abs()).max(1e-300)
}

fn rat(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(0i64..=96).into(), rng.random_range(1i64..=16).into())
}

fn pos_rat(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.random_range(1i64..=96).into(), rng.random_range(1i64..=16).into())
}

fn random_lengths(rng: &mut ChaCha8Rng) -> [f64; 3] {
    [rng.random_range(0.2..4.0), rng.random_range(0.2..4.0), rng.random_range(0.2..4.0)]
}

#[test]
fn criterion_01_triple_census() {
    let started = Instant::now();
    let census = compatible_triples();
    assert_eq!(census.len(), 14, "census size");

    let case1 = [triple([A, B, C]), triple([OppA, OppB, OppC])];
    let case2 = [
        triple([Alpha, B, C]),
        triple([A, Beta, C]),
        triple([A, B, Gamma]),
        triple([Alpha, OppB, OppC]),
        triple([OppA, Beta, OppC]),
        triple([OppA, OppB, Gamma]),
    ];
    let case3 = [
        triple([A, OppA, Beta]),
        triple([B, OppB, Alpha]),
        triple([C, OppC, Alpha]),
        triple([A, OppA, Gamma]),
        triple([B, OppB, Gamma]),
        triple([C, OppC, Beta]),
    ];
    for t in &case1 {
        assert_eq!(t.case(), TripleCase::One, "{t}");
        assert!(census.contains(t), "{t} missing");
    }
    for t in &case2 {
        assert_eq!(t.case(), TripleCase::Two, "{t}");
        assert!(census.contains(t), "{t} missing");
    }
    for t in &case3 {
        assert_eq!(t.case(), TripleCase::Three, "{t}");
        assert!(census.contains(t), "{t} missing");
    }
    assert_eq!(case1.len() + case2.len() + case3.len(), census.len());

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "census took {elapsed:?}");
    pass(1, "triple census", format!("14 triples, case lists match, {elapsed:?}"));
}

#[test]
fn criterion_02_pmf_sphere() {
    let complex = pmf_cell_complex();
    assert_eq!(
        (complex.vertices.len(), complex.edges.len(), complex.faces.len()),
        (9, 21, 14)
    );
    assert_eq!(complex.euler_characteristic(), 2);
    let report = complex.check();
    for check in &report {
        assert!(check.passed, "{}: {}", check.name, check.detail);
    }
    pass(2, "PMF sphere", "(V,E,F) = (9,21,14), chi = 2, closed-surface checks pass".into());
}

#[test]
fn criterion_03_pl_formula_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 1000;
    let abc = triple([A, B, C]);
    let opp = triple([OppA, OppB, OppC]);
    let alpha_bc = triple([Alpha, B, C]);
    let to_alpha_upp = triple([Alpha, OppB, OppC]);
    let to_a_beta = triple([A, Beta, OppA]);
    let to_alpha_b_upp = triple([Alpha, B, OppB]);
    let zero = Rational::from_integer(0.into());
    let mut samples = 0usize;

    // phi1, both branches of the a = 0 face.
    for flip in [false, true] {
        for _ in 0..n {
            let (hi, lo) = (pos_rat(&mut rng), rat(&mut rng));
            let (b, c) = if (lo <= hi) != flip { (hi, lo) } else { (lo, hi) };
            let cc = ChartCoords::new(abc, [zero.clone(), b.clone(), c.clone()]).unwrap();
            assert_eq!(
                cc.transition(&to_alpha_upp).unwrap(),
                formulas::phi1(&b, &c).unwrap()
            );
            samples += 1;
        }
    }

    // phi2: central plus the two printed dominant regions.
    for _ in 0..n {
        let (x, y, z) = (rat(&mut rng), rat(&mut rng), pos_rat(&mut rng));
        let (a, b, c) = (&y + &z, &x + &z, &x + &y);
        let cc = ChartCoords::new(abc, [a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(cc.transition(&alpha_bc).unwrap(), formulas::phi2(&a, &b, &c).unwrap());
        samples += 1;
    }
    for swap in [false, true] {
        for _ in 0..n {
            let (a, other, pad) = (rat(&mut rng), rat(&mut rng), pos_rat(&mut rng));
            let dominant = &(&a + &other) + &pad;
            let (b, c) = if swap { (other.clone(), dominant) } else { (dominant, other.clone()) };
            let cc = ChartCoords::new(abc, [a.clone(), b.clone(), c.clone()]).unwrap();
            assert_eq!(cc.transition(&alpha_bc).unwrap(), formulas::phi2(&a, &b, &c).unwrap());
            samples += 1;
        }
    }

    // phi3 on the a-dominant corner.
    for _ in 0..n {
        let (b, c, pad) = (rat(&mut rng), rat(&mut rng), pos_rat(&mut rng));
        let a = &(&b + &c) + &pad;
        let cc = ChartCoords::new(abc, [a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(cc.transition(&to_a_beta).unwrap(), formulas::phi3(&a, &b, &c).unwrap());
        samples += 1;
    }

    // phi4 on alpha >= c.
    for _ in 0..n {
        let (c, pad, b) = (rat(&mut rng), pos_rat(&mut rng), rat(&mut rng));
        let alpha = &c + &pad;
        let cc = ChartCoords::new(alpha_bc, [alpha.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(
            cc.transition(&to_alpha_b_upp).unwrap(),
            formulas::phi4(&alpha, &b, &c).unwrap()
        );
        samples += 1;
    }

    // phi5, both branches of the A = 0 face.
    for flip in [false, true] {
        for _ in 0..n {
            let (hi, lo) = (pos_rat(&mut rng), rat(&mut rng));
            let (b_upp, c_upp) = if flip { (hi, lo) } else { (lo, hi) };
            let cc = ChartCoords::new(opp, [zero.clone(), b_upp.clone(), c_upp.clone()]).unwrap();
            assert_eq!(
                cc.transition(&alpha_bc).unwrap(),
                formulas::phi5(&zero, &b_upp, &c_upp).unwrap()
            );
            samples += 1;
        }
    }

    pass(3, "PL formula agreement", format!("{samples} exact samples across phi1..phi5, zero error"));
}

#[test]
fn criterion_04_round_trip_and_cocycle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let census = compatible_triples();
    let n = 1000;

    for _ in 0..n {
        let t = census[rng.random_range(0..14)];
        let coords = [rat(&mut rng), rat(&mut rng), pos_rat(&mut rng)];
        let cc = ChartCoords::new(t, coords).unwrap();
        let f = cc.to_foliation().unwrap();
        assert_eq!(f.to_chart(&t).unwrap(), cc, "round trip in {t}");
    }

    let mut compositions = 0usize;
    for _ in 0..n {
        let support = census[rng.random_range(0..14)];
        let [c1, c2, c3] = support.classes();
        let f = FoliationClass::new([
            (c1, rat(&mut rng)),
            (c2, rat(&mut rng)),
            (c3, pos_rat(&mut rng)),
        ])
        .unwrap();
        let charts = f.charts_containing().unwrap();
        let pick = |rng: &mut ChaCha8Rng| charts[rng.random_range(0..charts.len())];
        let (t1, t2, t3) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let cc = f.to_chart(&t1).unwrap();
        let via = cc.transition(&t2).unwrap().transition(&t3).unwrap();
        let direct = cc.transition(&t3).unwrap();
        assert_eq!(via, direct, "cocycle {t1} -> {t2} -> {t3}");
        compositions += 1;
    }

    pass(4, "chart round-trip and cocycle", format!("{n} exact round-trips, {compositions} exact compositions"));
}

#[test]
fn criterion_05_hexagon_master_round_trip() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let census = compatible_triples();
    let n = 1000;
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let [a, b, c] = random_lengths(&mut rng);
        let h = HexagonLengths::solve_from_alternating(a, b, c).unwrap();
        for t in &census {
            let again = HexagonLengths::solve_from_triple(t, h.triple_lengths(t)).unwrap();
            for class in ArcClass::ALL {
                let e = rel(h.arc_length(class), again.arc_length(class));
                worst = worst.max(e);
                assert!(e < 1e-8, "{t} {class} ({a},{b},{c}): rel err {e:e}");
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "round trips took {elapsed:?}");
    pass(5, "hexagon master round-trip", format!("{n} hexagons x 14 triples, worst rel err {worst:.2e}, {elapsed:?}"));
}

#[test]
fn criterion_06_trig_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let n = 1000;
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let [a, b, c] = random_lengths(&mut rng);
        let h = HexagonLengths::solve_from_alternating(a, b, c).unwrap();
        let ratio = h.opp_a.sinh() / h.a.sinh();
        let r1 = (h.opp_b.sinh() / h.b.sinh() - ratio).abs() / ratio;
        let r2 = (h.opp_c.sinh() / h.c.sinh() - ratio).abs() / ratio;
        let ca = h.alpha.cosh();
        let p1 = (h.b.sinh() * h.opp_c.sinh() - ca).abs() / ca;
        let p2 = (h.c.sinh() * h.opp_b.sinh() - ca).abs() / ca;
        for r in [r1, r2, p1, p2] {
            worst = worst.max(r);
            assert!(r < 1e-10, "residual {r:e} at ({a},{b},{c})");
        }
    }

    // The regular fixed point: all sides acosh 2, all perpendiculars acosh 3.
    let s = 2.0f64.acosh();
    let h = HexagonLengths::solve_from_alternating(s, s, s).unwrap();
    let p = 3.0f64.acosh();
    for side in h.sides6() {
        assert!((side - s).abs() < 1e-12);
    }
    for perp in [h.alpha, h.beta, h.gamma] {
        assert!((perp - p).abs() < 1e-12);
    }
    pass(6, "trig identities", format!("law of sines and perp products < 1e-10 ({n} samples, worst {worst:.2e}); regular fixed point to 1e-12"));
}

#[test]
fn criterion_07_monotonicity_no_homothety() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    for _ in 0..100 {
        let mut l = random_lengths(&mut rng);
        l.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let [a, b, c] = l;
        let mut prev = f64::INFINITY;
        for k in 0..20 {
            let t = 0.25 + 0.25 * k as f64;
            let cur = scaled_opposite(a, b, c, t).unwrap();
            assert!(cur < prev, "C(t) not strictly decreasing at t={t}");
            assert!(monotonicity_kernel(a, b, c, t) < 0.0, "u(t) >= 0 at t={t}");
            prev = cur;
            checked += 1;
        }
    }
    pass(7, "scaling monotonicity", format!("C(t) strictly decreasing and u(t) < 0 at {checked} grid points"));
}

#[test]
fn criterion_08_asymptotics() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // a -> 0 sends the perpendicular alpha to infinity, any b, c.
    for _ in 0..100 {
        let [_, b, c] = random_lengths(&mut rng);
        let h = HexagonLengths::solve_from_alternating(1e-3, b, c).unwrap();
        assert!(h.alpha > 5.0, "alpha = {} at (1e-3, {b}, {c})", h.alpha);
    }
    // a -> 0 with b bounded sends the adjacent side C to infinity.
    for _ in 0..100 {
        let b = rng.random_range(0.05..1.0);
        let c = rng.random_range(0.2..4.0);
        let big_c = opposite_side(1e-3, b, c).unwrap();
        assert!(big_c > 5.0, "C = {big_c} at (1e-3, {b}, {c})");
    }
    // a large with b large and c bounded sends C to zero. (For C -> 0 the
    // partner side must grow too: at fixed moderate b, C tends to the
    // positive constant arccosh(coth b) instead.)
    let c_small = opposite_side(20.0, 20.0, 1.0).unwrap();
    assert!(c_small > 0.0 && c_small < 1e-3, "C = {c_small}");
    let c_floor = opposite_side(20.0, 0.5, 1.0).unwrap();
    assert!((c_floor - (1.0f64 / 0.5f64.tanh()).acosh()).abs() < 1e-6);
    pass(8, "asymptotic regimes", format!("alpha, C blow up as a -> 0; C(20,20,1) = {c_small:.3e} < 1e-3"));
}

#[test]
fn criterion_09_divergence_table() {
    let one = SeqExpr::constant(1.0);
    let n = SeqExpr { exp: 0.0, linear: 1.0, constant: 0.0, inverse: 0.0 };
    let inv = SeqExpr { exp: 0.0, linear: 0.0, constant: 0.0, inverse: 1.0 };
    let abc = triple([A, B, C]);

    let cases = [
        ([n, n, n], Some(triple([A, B, C])), "{inf,inf,inf} -> itself"),
        ([inv, inv, inv], Some(triple([OppA, OppB, OppC])), "{0,0,0} -> {A,B,C}"),
        ([n, n, one], Some(triple([A, B, Gamma])), "{inf,inf,K} -> {a,b,gamma}"),
        ([n, one, one], Some(triple([A, OppA, Gamma])), "{inf,K,K} -> {a,A,gamma}"),
        ([one, one, inv], Some(triple([OppA, OppB, Gamma])), "{K,K,0} -> {A,B,gamma}"),
        ([one, one, one], None, "bounded"),
    ];
    for (exprs, expected, label) in cases {
        let spec = SequenceSpec::new(abc, exprs).unwrap();
        let got = diverges(&spec).unwrap();
        match expected {
            Some(witness) => assert_eq!(got, Divergence::ToInfinity { witness }, "{label}"),
            None => assert_eq!(got, Divergence::Bounded, "{label}"),
        }
    }
    pass(9, "divergence witness table", "all five asymptotic cases plus bounded reproduce their witnesses".into());
}

#[test]
fn criterion_10_boundary_limits() {
    let n = SeqExpr { exp: 0.0, linear: 1.0, constant: 0.0, inverse: 0.0 };
    let inv = SeqExpr { exp: 0.0, linear: 0.0, constant: 0.0, inverse: 1.0 };
    let en = SeqExpr { exp: 1.0, linear: 0.0, constant: 0.0, inverse: 0.0 };
    let abc = triple([A, B, C]);
    let third = 1.0 / 3.0;

    let cases: [([SeqExpr; 3], [f64; 6], &str); 3] = [
        ([n, n, n], [third, third, third, 0.0, 0.0, 0.0], "(n,n,n)"),
        ([inv, inv, inv], [0.0, 0.0, 0.0, third, third, third], "(1/n,1/n,1/n)"),
        ([en, n, n], [0.5, 0.0, 0.0, 0.5, 0.0, 0.0], "(e^n,n,n)"),
    ];
    let mut details = Vec::new();
    for (exprs, expected, label) in cases {
        let started = Instant::now();
        let spec = SequenceSpec::new(abc, exprs).unwrap();
        let report = boundary_limit(&spec, 40, 1e-3).unwrap();
        let elapsed = started.elapsed();
        let mut worst: f64 = 0.0;
        for (got, want) in report.limit.values().iter().zip(expected) {
            worst = worst.max((got - want).abs());
            assert!((got - want).abs() < 1e-3, "{label}: {got} vs {want}");
        }
        assert!(elapsed.as_secs_f64() < 1.0, "{label} took {elapsed:?}");
        details.push(format!("{label} off by {worst:.1e} in {elapsed:?}"));
    }
    pass(10, "boundary limits", details.join("; "));
}

#[test]
fn criterion_11_compactification_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let census = compatible_triples();
    let mut worst: f64 = 0.0;
    let mut trips = 0usize;
    for _ in 0..200 {
        let lengths = random_lengths(&mut rng);
        let t = census[rng.random_range(0..14)];
        let p = TeichPoint::from_triple(&census[2], lengths).unwrap();
        // q reads the triple lengths as exact transverse measures.
        let q = p.q_projection(&t).unwrap();
        for class in t.classes() {
            assert_eq!(
                q.intersection_number(class),
                Rational::from_float(p.hexagon().arc_length(class)).unwrap(),
                "q postcondition on {class}"
            );
        }
        // Chart and reconstruct.
        let (pmf, collar) =
            boundary_chart(&CompactifiedPoint::Hyperbolic(p.clone()), &t).unwrap();
        let back = boundary_chart_inverse(&pmf, collar, &t).unwrap();
        for (x, y) in p.length_vector6().iter().zip(back.length_vector6()) {
            let e = rel(*x, y);
            worst = worst.max(e);
            assert!(e < 1e-8, "reconstruction error {e:e}");
        }
        trips += 1;
    }
    pass(11, "compactification round-trip", format!("{trips} thick-part charts inverted, worst rel err {worst:.2e}"));
}

#[test]
fn criterion_12_embedding_separation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let census = compatible_triples();
    let n = 1000;
    for _ in 0..n {
        let p = TeichPoint::from_triple(&census[2], random_lengths(&mut rng)).unwrap();
        assert!(p.projective_embed().min_entry() > 0.0, "hexagon image touches the boundary");
    }
    for _ in 0..n {
        let support = census[rng.random_range(0..14)];
        let [c1, c2, c3] = support.classes();
        let f = FoliationClass::new([
            (c1, rat(&mut rng)),
            (c2, rat(&mut rng)),
            (c3, pos_rat(&mut rng)),
        ])
        .unwrap();
        let v = projective_embed_foliation(&f).unwrap();
        assert!(v.min_entry() == 0.0, "foliation image has no zero entry: {v}");
    }
    pass(12, "embedding separation", format!("{n} hexagons strictly positive, {n} foliations with a zero entry"));
}
