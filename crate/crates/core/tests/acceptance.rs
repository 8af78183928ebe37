//! The ten acceptance criteria, each reported on one line.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use odd_e6::coset_enum::todd_coxeter;
use odd_e6::e6;
use odd_e6::eisenstein::{hermitian, hexaflection, hexaflection_order_on, standard_basis};
use odd_e6::gosset::{self, WallPair};
use odd_e6::isometry::{self, Modulus, DEFAULT_CLOSURE_BUDGET};
use odd_e6::lattice::{LatticeVector, Root};
use odd_e6::presentation::{self, DiagramKind};
use odd_e6::suites::{braid_identity_trials, curated_norm_one_vectors, BRAID_TRIALS};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= limit, || {
        format!("{what} took {spent:?}, limit {limit:?}")
    })
}

fn presented_orders() -> Outcome {
    let start = Instant::now();
    let mut found = Vec::new();
    for (kind, expected) in [
        (DiagramKind::A3, 24),
        (DiagramKind::AffineA5, 720),
        (DiagramKind::Petersen, 51840),
    ] {
        let p = presentation::build_presentation(kind);
        let t = todd_coxeter(&p, &[], 200_000).map_err(|e| e.to_string())?;
        ensure(t.index() == Some(expected), || {
            format!("{kind}: {:?}", t.index())
        })?;
        ensure(t.satisfies(p.relators()).unwrap_or(false), || {
            format!("{kind}: relator replay failed")
        })?;
        found.push(expected);
    }
    within(start, Duration::from_secs(60), "enumeration")?;
    Ok(format!("{found:?} in {:.1?}", start.elapsed()))
}

fn matrix_orders() -> Outcome {
    let start = Instant::now();
    let mut found = Vec::new();
    for (n, expected) in [(2, 24), (3, 720), (4, 51840)] {
        let g = isometry::closure(&isometry::mod3_generators(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let order = isometry::projective_order(&g);
        ensure(order == expected, || {
            format!("n={n}: projective order {order}")
        })?;
        let kind = DiagramKind::for_dimension(n).map_err(|e| e.to_string())?;
        let t = todd_coxeter(&presentation::build_presentation(kind), &[], 200_000)
            .map_err(|e| e.to_string())?;
        ensure(t.index() == Some(order), || {
            format!("n={n}: enumeration {:?} vs matrices {order}", t.index())
        })?;
        found.push(order);
    }
    within(start, Duration::from_secs(60), "closure")?;
    Ok(format!("{found:?}, equal to the enumerated orders"))
}

fn undeflated_control() -> Outcome {
    let p = presentation::build_presentation(DiagramKind::AffineA5);
    let t = todd_coxeter(&p.coxeter_part(), &[], 100_000).map_err(|e| e.to_string())?;
    ensure(t.index().is_none(), || format!("closed at {:?}", t.index()))?;
    let walls = gosset::gosset_walls(3).map_err(|e| e.to_string())?;
    let assignment: HashMap<_, _> = walls
        .labels()
        .iter()
        .cloned()
        .zip(walls.reflections())
        .collect();
    let w = p.deflation_relators()[0].clone();
    let m = presentation::evaluate_word(&w, &assignment).map_err(|e| e.to_string())?;
    ensure(!m.is_identity(), || {
        "deflation word is the identity over Z".into()
    })?;
    ensure(
        isometry::reduce_mod(&m, Modulus::Three).is_identity(),
        || "deflation word not ≡ I mod 3".into(),
    )?;
    Ok(format!(
        "no closure within 100000 cosets; {w} is a nontrivial element of Γ(3)"
    ))
}

fn tessellation_counts() -> Outcome {
    let mut found = Vec::new();
    for (n, tiles, slots) in [(2, 12, 3), (3, 60, 6), (4, 432, 10)] {
        let t = gosset::build_tessellation(n).map_err(|e| e.to_string())?;
        ensure(t.tile_count() == tiles, || {
            format!("n={n}: {} tiles", t.tile_count())
        })?;
        ensure(t.is_connected(), || format!("n={n}: disconnected"))?;
        ensure(t.wall_slots() == slots, || {
            format!("n={n}: {} wall slots", t.wall_slots())
        })?;
        found.push(t.tile_count());
    }
    Ok(format!("{found:?}, connected"))
}

fn stabilizer_congruence() -> Outcome {
    let expected = [2, 12, 120, 1920, 51840, 2_903_040];
    let mut found = Vec::new();
    for n in 2..=7 {
        let start = Instant::now();
        let r = isometry::stabilizer_congruence_check(n, DEFAULT_CLOSURE_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure(r.order == expected[n - 2], || {
            format!("n={n}: |Γ₀| = {}", r.order)
        })?;
        ensure(r.passes(), || {
            format!("n={n}: kernels {} / {}", r.kernel_mod2, r.kernel_mod3)
        })?;
        if n == 7 {
            within(start, Duration::from_secs(600), "n=7")?;
        }
        found.push(r.order);
    }
    Ok(format!("|Γ₀| = {found:?}, trivial mod 2 and mod 3"))
}

fn diagram_identities() -> Outcome {
    for (n, kind, aut) in [
        (2, DiagramKind::A3, 2),
        (3, DiagramKind::AffineA5, 12),
        (4, DiagramKind::Petersen, 120),
    ] {
        let walls = gosset::gosset_walls(n).map_err(|e| e.to_string())?;
        let from_gram = presentation::diagram_from_gram(&walls).map_err(|e| e.to_string())?;
        let reference = presentation::diagram_graph(kind);
        ensure(from_gram == reference, || {
            format!("n={n}: wall diagram differs from {kind}")
        })?;
        let a = presentation::diagram_automorphism_order(&reference);
        ensure(a == aut, || format!("{kind}: automorphism order {a}"))?;
    }
    let p = presentation::diagram_graph(DiagramKind::Petersen);
    ensure(p.regular_degree() == Some(3), || {
        "Petersen not 3-regular".into()
    })?;
    ensure(p.girth() == Some(5), || {
        format!("Petersen girth {:?}", p.girth())
    })?;
    let h = presentation::free_hexagons(&p).len();
    ensure(h == 10, || format!("{h} free hexagons"))?;
    Ok("A3, hexagon and Petersen reproduced; Aut orders 2/12/120; girth 5; 10 hexagons".into())
}

fn braid_identity() -> Outcome {
    let mut cases = 0;
    for n in [3, 4] {
        let (checked, failures) =
            braid_identity_trials(n, 0, BRAID_TRIALS).map_err(|e| e.to_string())?;
        ensure(failures.is_empty(), || failures.join("; "))?;
        cases += checked;
    }
    let v = |c: &[i64]| LatticeVector::new(c.to_vec()).unwrap();
    let alpha = Root::new(v(&[0, 1, 0, 0])).unwrap();
    let beta = Root::new(v(&[1, -1, -1, 0])).unwrap();
    let (lhs, rhs) = presentation::braid_identity_sides(&alpha, &beta, &v(&[1, 0, 0, 0]))
        .map_err(|e| e.to_string())?;
    ensure(lhs == v(&[6, -6, -6, 0]) && rhs == lhs, || {
        format!("worked example gives {lhs} and {rhs}")
    })?;
    let (lhs, rhs) = presentation::braid_identity_sides(&alpha, &beta, &v(&[1, 0, -1, 5]))
        .map_err(|e| e.to_string())?;
    ensure(lhs.is_zero() && rhs.is_zero(), || {
        "orthogonal λ gives nonzero sides".into()
    })?;
    Ok(format!("{cases} wall-pair cases plus worked examples"))
}

fn e6_configuration() -> Outcome {
    let system = e6::build_e6();
    ensure(system.len() == 72, || format!("{} roots", system.len()))?;
    let betas = e6::beta_configuration();
    let missing = e6::non_roots(&system, &betas);
    ensure(missing.is_empty(), || format!("not roots: {missing:?}"))?;
    ensure(e6::verify_petersen_gram(&betas).unwrap_or(false), || {
        "Gram is not the Petersen incidence".into()
    })?;
    let failing = e6::failing_hexagons(&betas).map_err(|e| e.to_string())?;
    ensure(failing.is_empty(), || format!("nonzero sums: {failing:?}"))?;
    let order = e6::verify_generation(&system, &betas, e6::DEFAULT_PERMUTATION_BUDGET)
        .map_err(|e| e.to_string())?;
    ensure(order == 51840, || format!("reflection group order {order}"))?;
    Ok("10 roots, Petersen Gram, 10 zero hexagon sums, group order 51840".into())
}

fn gosset_combinatorics() -> Outcome {
    for n in 2..=4 {
        let c = gosset::wall_pair_classification(n).map_err(|e| e.to_string())?;
        ensure(
            c.inner_products.iter().all(|ip| [0, -1].contains(ip)),
            || format!("n={n}: inner products {:?}", c.inner_products),
        )?;
    }
    let r = gosset::vertex_orbits(4).map_err(|e| e.to_string())?;
    ensure(r.actual_vertices == 5 && r.ideal_vertices == 5, || {
        format!("orbits {} and {}", r.actual_vertices, r.ideal_vertices)
    })?;
    ensure(r.center_fixed, || "v4 not fixed by Γ₀".into())?;
    let c = gosset::wall_pair_classification(2).map_err(|e| e.to_string())?;
    ensure(
        c.count(WallPair::Orthogonal) == 1 && c.count(WallPair::Parallel) == 2,
        || "triangle pairs are not one orthogonal, two parallel".into(),
    )?;
    Ok(
        "inner products in {0,-1}; orbits 5 and 5; v4 fixed; triangle 1 right angle, 2 parallel"
            .into(),
    )
}

fn hexaflections() -> Outcome {
    let basis = standard_basis();
    let vectors = curated_norm_one_vectors();
    for e in &vectors {
        let order = hexaflection_order_on(e, &basis, 1, 12).map_err(|x| x.to_string())?;
        ensure(order == Some(6), || format!("{e:?}: order {order:?}"))?;
        let sq = hexaflection_order_on(e, &basis, 2, 12).map_err(|x| x.to_string())?;
        ensure(sq == Some(3), || format!("{e:?}: square order {sq:?}"))?;
        for u in &basis {
            for v in &basis {
                let (hu, hv) = (hexaflection(e, u).unwrap(), hexaflection(e, v).unwrap());
                ensure(hermitian(&hu, &hv) == hermitian(u, v), || {
                    format!("{e:?}: form not preserved")
                })?;
            }
        }
    }
    Ok(format!(
        "{} norm-one vectors: order 6, square order 3, form preserved",
        vectors.len()
    ))
}

fn main() -> std::process::ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "presented group orders by coset enumeration",
            presented_orders,
        ),
        ("mod-3 projective orders match enumeration", matrix_orders),
        ("undeflated affine A5 does not close", undeflated_control),
        ("tessellation tile counts", tessellation_counts),
        (
            "stabilizer meets Γ(2) and Γ(3) trivially",
            stabilizer_congruence,
        ),
        ("diagram identities", diagram_identities),
        ("braid identity", braid_identity),
        ("E6 Petersen configuration", e6_configuration),
        ("Gosset combinatorics", gosset_combinatorics),
        ("hexaflections", hexaflections),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
