//! Named verification suites behind the `verify` command.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coset_enum::{self, todd_coxeter, EnumerationStatus, DEFAULT_COSET_BUDGET};
use crate::e6;
use crate::eisenstein::{self, EisensteinVector};
use crate::error::{Error, Result};
use crate::gosset::{self, WallPair};
use crate::isometry::{self, Modulus, DEFAULT_CLOSURE_BUDGET};
use crate::lattice::{self, LatticeVector, Root};
use crate::presentation::{self, DiagramKind, Presentation, Word};
use crate::report::{CheckReport, Checks, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lattice,
    Diagrams,
    Presentation,
    Enumeration,
    Tessellation,
    E6,
    Eisenstein,
    All,
}

impl Suite {
    /// The individual suites run by [`Suite::All`], in order.
    pub const EACH: [Suite; 7] = [
        Suite::Lattice,
        Suite::Diagrams,
        Suite::Presentation,
        Suite::Enumeration,
        Suite::Tessellation,
        Suite::E6,
        Suite::Eisenstein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Diagrams => "diagrams",
            Suite::Presentation => "presentation",
            Suite::Enumeration => "enumeration",
            Suite::Tessellation => "tessellation",
            Suite::E6 => "e6",
            Suite::Eisenstein => "eisenstein",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restrict to one dimension.
    pub n: Option<usize>,
    /// Upper end of the Γ₀ congruence checks.
    pub max_n: usize,
    /// Coset budget for enumerations.
    pub budget: usize,
    /// Seed for the random vectors of the braid-identity trials.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            n: None,
            max_n: 6,
            budget: DEFAULT_COSET_BUDGET,
            seed: 0,
        }
    }
}

impl SuiteOptions {
    fn dims(&self, lo: usize, hi: usize) -> Vec<usize> {
        match self.n {
            Some(n) if (lo..=hi).contains(&n) => vec![n],
            Some(_) => vec![],
            None => (lo..=hi).collect(),
        }
    }
}

pub const BRAID_TRIALS: usize = 100;

/// |Γ₀| for n = 2..=7.
pub const GAMMA0_ORDERS: [usize; 6] = [2, 12, 120, 1920, 51840, 2_903_040];

const DIAGRAM_ORDERS: [usize; 3] = [24, 720, 51840];
const TILE_COUNTS: [usize; 3] = [12, 60, 432];
const AUTOMORPHISM_ORDERS: [usize; 3] = [2, 12, 120];
const HEXAGON_COUNTS: [usize; 3] = [0, 1, 10];

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let mut checks = Checks::default();
    match suite {
        Suite::Lattice => lattice_suite(&mut checks, opts),
        Suite::Diagrams => diagrams_suite(&mut checks, opts),
        Suite::Presentation => presentation_suite(&mut checks, opts),
        Suite::Enumeration => enumeration_suite(&mut checks, opts),
        Suite::Tessellation => tessellation_suite(&mut checks, opts),
        Suite::E6 => e6_suite(&mut checks),
        Suite::Eisenstein => eisenstein_suite(&mut checks),
        Suite::All => {
            for s in Suite::EACH {
                let sub = run_suite(s, opts);
                checks.out.extend(sub.checks);
            }
        }
    }
    SuiteReport::new(suite.name(), checks.out)
}

/// DOT files `(file name, contents)` produced by a suite.
pub fn dot_exports(suite: Suite, opts: &SuiteOptions) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    for n in opts.dims(2, 4) {
        if wants(Suite::Diagrams) || wants(Suite::Presentation) {
            let g = presentation::diagram_from_gram(&gosset::gosset_walls(n)?)?;
            let kind = DiagramKind::for_dimension(n)?;
            for s in [Suite::Diagrams, Suite::Presentation] {
                if wants(s) {
                    out.push((format!("{}_{n}.dot", s.name()), g.to_dot(kind.name())));
                }
            }
        }
        if wants(Suite::Tessellation) {
            out.push((
                format!("tessellation_{n}.dot"),
                gosset::build_tessellation(n)?.to_dot(),
            ));
        }
    }
    Ok(out)
}

fn lattice_suite(c: &mut Checks, opts: &SuiteOptions) {
    for n in opts.dims(lattice::MIN_DIM, lattice::MAX_DIM) {
        let mut norms = vec![if n == 2 { 1 } else { 2 }];
        norms.extend(std::iter::repeat_n(2, n - 1));
        norms.push(1);
        c.run("simple_root_norms", Some(n), norms, || {
            let roots = lattice::simple_roots(n)?;
            let listed = roots
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            Ok((roots.iter().map(Root::norm).collect::<Vec<_>>(), listed))
        });
        c.run("chamber_antidual", Some(n), true, || {
            let roots = lattice::simple_roots(n)?;
            let verts = lattice::chamber_vertices(n)?;
            let mut ok = true;
            for (i, v) in verts.iter().enumerate() {
                for (j, a) in roots.iter().enumerate() {
                    let ip = lattice::inner(v, a.vector())?;
                    ok &= if i == j { ip < 0 } else { ip == 0 };
                }
            }
            Ok((ok, "(v_i, α_j) = 0 for i ≠ j and < 0 for i = j".to_string()))
        });
        c.run("ideal_vertices", Some(n), vec![1], || {
            let verts = lattice::chamber_vertices(n)?;
            let ideal: Vec<usize> = (0..verts.len()).filter(|&i| verts[i].norm() == 0).collect();
            let norms: Vec<i64> = verts.iter().map(LatticeVector::norm).collect();
            Ok((ideal, format!("vertex norms {norms:?}")))
        });
        c.run("simple_reflections_isometric", Some(n), true, || {
            let ok = isometry::simple_reflections(n)?.iter().all(|m| {
                m.preserves_form()
                    && m.is_forward()
                    && m.mul(m).is_identity()
                    && m.determinant() == -1
            });
            Ok((ok, "form, forward cone, involution, det −1".to_string()))
        });
        c.run("short_reflections_trivial_mod2", Some(n), true, || {
            let roots = lattice::simple_roots(n)?;
            let ok = roots.iter().all(|r| {
                let m = isometry::reduce_mod(&isometry::reflection_matrix(r), Modulus::Two);
                m.is_identity() == r.is_short()
            });
            Ok((
                ok,
                "norm-1 reflections ≡ I mod 2, norm-2 reflections not".to_string(),
            ))
        });
    }
    let stabilizer_dims: Vec<usize> = match opts.n {
        Some(n) if (2..=7).contains(&n) => vec![n],
        Some(_) => vec![],
        None => (2..=opts.max_n.clamp(2, 7)).collect(),
    };
    for n in stabilizer_dims {
        let start = Instant::now();
        let outcome = isometry::stabilizer_congruence_check(n, DEFAULT_CLOSURE_BUDGET);
        let ms = start.elapsed().as_millis() as u64;
        let expected_order = GAMMA0_ORDERS[n - 2];
        match outcome {
            Ok(r) => {
                c.push(
                    CheckReport::compare(
                        "gamma0_order",
                        Some(n),
                        json!(expected_order),
                        json!(r.order),
                        "exhaustive closure of the norm-2 simple reflections",
                    ),
                    ms,
                );
                c.push(
                    CheckReport::compare(
                        "gamma0_cap_gamma2",
                        Some(n),
                        json!(1),
                        json!(r.kernel_mod2),
                        "elements of Γ₀ congruent to I mod 2",
                    ),
                    0,
                );
                c.push(
                    CheckReport::compare(
                        "gamma0_cap_gamma3",
                        Some(n),
                        json!(1),
                        json!(r.kernel_mod3),
                        "elements of Γ₀ congruent to I mod 3",
                    ),
                    0,
                );
            }
            Err(e) => c.push(
                CheckReport::error(
                    "gamma0_order",
                    Some(n),
                    json!(expected_order),
                    e.to_string(),
                ),
                ms,
            ),
        }
    }
}

fn edge_labels(g: &presentation::DiagramGraph) -> BTreeSet<(String, String)> {
    g.edges()
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (g.nodes()[i].clone(), g.nodes()[j].clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// `i ↦ {i, 5}`, `jk ↦ {1..4} ∖ {j, k}`: adjacency must become disjointness.
fn kneser_bijection_holds(g: &presentation::DiagramGraph) -> bool {
    let image = |label: &str| -> BTreeSet<u8> {
        let d = presentation::label_digits(label);
        if d.len() == 1 {
            d.into_iter().chain([5]).collect()
        } else {
            (1..=4).filter(|x| !d.contains(x)).collect()
        }
    };
    let images: Vec<BTreeSet<u8>> = g.nodes().iter().map(|l| image(l)).collect();
    let distinct: BTreeSet<&BTreeSet<u8>> = images.iter().collect();
    distinct.len() == 10
        && (0..10).all(|i| {
            (0..10).all(|j| i == j || g.adjacent(i, j) == images[i].is_disjoint(&images[j]))
        })
}

fn diagrams_suite(c: &mut Checks, opts: &SuiteOptions) {
    for n in opts.dims(2, 4) {
        let k = n - 2;
        let Ok(kind) = DiagramKind::for_dimension(n) else {
            continue;
        };
        let reference = presentation::diagram_graph(kind);
        c.run(
            "wall_gram_diagram",
            Some(n),
            edge_labels(&reference),
            || {
                let g = presentation::diagram_from_gram(&gosset::gosset_walls(n)?)?;
                Ok((
                    edge_labels(&g),
                    format!("{} against wall Gram matrix", kind.name()),
                ))
            },
        );
        c.run(
            "automorphism_order",
            Some(n),
            AUTOMORPHISM_ORDERS[k],
            || {
                Ok((
                    presentation::diagram_automorphism_order(&reference),
                    String::new(),
                ))
            },
        );
        c.run("free_hexagon_count", Some(n), HEXAGON_COUNTS[k], || {
            let hexagons = presentation::free_hexagons(&reference);
            let listed = hexagons
                .iter()
                .map(|h| h.join("-"))
                .collect::<Vec<_>>()
                .join(" ");
            Ok((hexagons.len(), listed))
        });
        if n == 4 {
            c.run("petersen_regular_degree", Some(n), Some(3), || {
                Ok((reference.regular_degree(), String::new()))
            });
            c.run("petersen_girth", Some(n), Some(5), || {
                Ok((reference.girth(), String::new()))
            });
            c.run("kneser_bijection", Some(n), true, || {
                Ok((
                    kneser_bijection_holds(&reference),
                    "i ↦ {i,5}, jk ↦ {1..4}∖{j,k}".into(),
                ))
            });
        }
        c.run("wall_inner_products", Some(n), [-1, 0], || {
            let cls = gosset::wall_pair_classification(n)?;
            let details = format!(
                "{} orthogonal, {} parallel pairs",
                cls.count(WallPair::Orthogonal),
                cls.count(WallPair::Parallel)
            );
            Ok((cls.inner_products, details))
        });
        if n == 2 {
            c.run(
                "triangle_wall_pairs",
                Some(n),
                json!({"orthogonal": 1, "parallel": 2}),
                || {
                    let cls = gosset::wall_pair_classification(n)?;
                    Ok((
                        json!({
                            "orthogonal": cls.count(WallPair::Orthogonal),
                            "parallel": cls.count(WallPair::Parallel),
                        }),
                        String::new(),
                    ))
                },
            );
        }
        c.run("generator_words", Some(n), true, || {
            let r = gosset::verify_generator_words(n)?;
            let failed: Vec<String> = r
                .failures()
                .iter()
                .map(|w| format!("{} ≠ {}", w.word, w.wall))
                .collect();
            let details = if failed.is_empty() {
                r.words
                    .iter()
                    .map(|w| format!("r{} = {}", w.wall, w.word))
                    .collect::<Vec<_>>()
                    .join("; ")
            } else {
                failed.join("; ")
            };
            Ok((r.passes(), details))
        });
        if n == 4 {
            c.run(
                "wall_conjugates",
                Some(n),
                json!({"count": 10, "equal_walls": true}),
                || {
                    let r = gosset::verify_generator_words(n)?;
                    Ok((
                        json!({"count": r.conjugates, "equal_walls": r.conjugates_are_walls}),
                        "{w s4 w⁻¹ : w ∈ Γ₀}".to_string(),
                    ))
                },
            );
            c.run(
                "vertex_orbits",
                Some(n),
                json!({"actual": 5, "ideal": 5, "center_fixed": true}),
                || {
                    let r = gosset::vertex_orbits(n)?;
                    Ok((
                        json!({"actual": r.actual_vertices, "ideal": r.ideal_vertices, "center_fixed": r.center_fixed}),
                        String::new(),
                    ))
                },
            );
        }
        if n == 3 {
            c.run(
                "tetrahedron_vertices",
                Some(n),
                ["e0", "e0-e1", "e0-e2", "e0-e3"],
                || {
                    let r = gosset::vertex_orbits(n)?;
                    let verts: Vec<String> = r
                        .tetrahedron
                        .unwrap_or_default()
                        .iter()
                        .map(ToString::to_string)
                        .collect();
                    Ok((verts, "{v0, v1, s1 v1, s2 s1 v1}".to_string()))
                },
            );
        }
    }
}

fn mod3_assignment(n: usize) -> Result<HashMap<String, isometry::ModularMatrix>> {
    let walls = gosset::gosset_walls(n)?;
    Ok(walls
        .labels()
        .iter()
        .cloned()
        .zip(walls.mod3_reflections())
        .collect())
}

fn integer_assignment(n: usize) -> Result<HashMap<String, isometry::LatticeIsometry>> {
    let walls = gosset::gosset_walls(n)?;
    Ok(walls
        .labels()
        .iter()
        .cloned()
        .zip(walls.reflections())
        .collect())
}

/// Runs the braid identity on every ordered adjacent wall pair, for the fixed
/// vectors (basis and chamber vertices) and `trials` seeded random vectors.
pub fn braid_identity_trials(n: usize, seed: u64, trials: usize) -> Result<(usize, Vec<String>)> {
    let walls = gosset::gosset_walls(n)?;
    let g = presentation::diagram_from_gram(&walls)?;
    let mut lambdas: Vec<LatticeVector> = (0..=n)
        .map(|i| LatticeVector::basis(n, i))
        .collect::<Result<_>>()?;
    lambdas.extend(lattice::chamber_vertices(n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        lambdas.push(LatticeVector::new(
            (0..=n).map(|_| rng.gen_range(-20..=20)).collect(),
        )?);
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, j) in g.edges() {
        for (a, b) in [(i, j), (j, i)] {
            let (alpha, beta) = (&walls.walls()[a], &walls.walls()[b]);
            for l in &lambdas {
                checked += 1;
                if !presentation::braid_identity_check(alpha, beta, l)? {
                    failures.push(format!("α={alpha}, β={beta}, λ={l}"));
                }
            }
        }
    }
    Ok((checked, failures))
}

fn presentation_suite(c: &mut Checks, opts: &SuiteOptions) {
    for n in opts.dims(2, 4) {
        let Ok(kind) = DiagramKind::for_dimension(n) else {
            continue;
        };
        let p = presentation::build_presentation(kind);
        let expected_counts = match kind {
            DiagramKind::A3 => [3, 1, 2, 0],
            DiagramKind::AffineA5 => [6, 9, 6, 1],
            DiagramKind::Petersen => [10, 30, 15, 10],
        };
        c.run("relator_counts", Some(n), expected_counts, || {
            let k = p.counts();
            Ok((
                [k.involution, k.commuting, k.braid, k.deflation],
                "involution, commuting, braid, deflation".to_string(),
            ))
        });
        c.run("relators_trivial_mod3", Some(n), true, || {
            let assignment = mod3_assignment(n)?;
            let mut bad = Vec::new();
            for r in p.relators() {
                if !presentation::evaluate_word(r, &assignment)?.is_identity() {
                    bad.push(r.to_string());
                }
            }
            Ok((bad.is_empty(), bad.join(" ")))
        });
        if n == 3 {
            c.run(
                "deflation_integer_nontrivial",
                Some(n),
                json!({"integer_identity": false, "mod3_identity": true}),
                || {
                    let w = &p.deflation_relators()[0];
                    let m = presentation::evaluate_word(w, &integer_assignment(n)?)?;
                    let r = isometry::reduce_mod(&m, Modulus::Three);
                    Ok((
                        json!({"integer_identity": m.is_identity(), "mod3_identity": r.is_identity()}),
                        format!("{w} evaluates to {:?}", m.entries()),
                    ))
                },
            );
        }
        c.run("relator_text_roundtrip", Some(n), true, || {
            let parsed = Presentation::parse_relator_text(&p.to_relator_text())?;
            Ok((parsed == p, String::new()))
        });
        if n >= 3 {
            c.run(
                "braid_identity_walls",
                Some(n),
                Vec::<String>::new(),
                || {
                    let (checked, failures) = braid_identity_trials(n, opts.seed, BRAID_TRIALS)?;
                    Ok((failures, format!("{checked} cases, seed {}", opts.seed)))
                },
            );
        }
        if n == 3 {
            c.run(
                "braid_identity_example",
                Some(n),
                ["6e0-6e1-6e2", "6e0-6e1-6e2"],
                || {
                    let alpha = Root::new(LatticeVector::basis(3, 1)?)?;
                    let beta = Root::new(LatticeVector::cone_vector(3, 1, &[1, 2])?)?;
                    let (lhs, rhs) = presentation::braid_identity_sides(
                        &alpha,
                        &beta,
                        &LatticeVector::basis(3, 0)?,
                    )?;
                    Ok((
                        [lhs.to_string(), rhs.to_string()],
                        "α=e1, β=e0-e1-e2, λ=e0".to_string(),
                    ))
                },
            );
        }
    }
}

fn order_check_id(kind: DiagramKind) -> &'static str {
    match kind {
        DiagramKind::A3 => "a3_order",
        DiagramKind::AffineA5 => "affine_a5_deflated_order",
        DiagramKind::Petersen => "petersen_deflated_order",
    }
}

fn status_name(s: EnumerationStatus) -> &'static str {
    match s {
        EnumerationStatus::InProgress => "in_progress",
        EnumerationStatus::Closed => "closed",
        EnumerationStatus::BudgetExceeded => "budget_exceeded",
    }
}

/// The Ã5 Coxeter group is infinite: this enumeration must not close.
pub const UNDEFLATED_BUDGET: usize = 100_000;

/// Number of canonical Petersen deflations kept in the partial-deflation control.
pub const PARTIAL_DEFLATIONS: usize = 4;

fn enumeration_suite(c: &mut Checks, opts: &SuiteOptions) {
    for n in opts.dims(2, 4) {
        let Ok(kind) = DiagramKind::for_dimension(n) else {
            continue;
        };
        let k = n - 2;
        let p = presentation::build_presentation(kind);
        let start = Instant::now();
        let table = todd_coxeter(&p, &[], opts.budget);
        let ms = start.elapsed().as_millis() as u64;
        let table = match table {
            Ok(t) => t,
            Err(e) => {
                c.push(
                    CheckReport::error(
                        order_check_id(kind),
                        Some(n),
                        json!(DIAGRAM_ORDERS[k]),
                        e.to_string(),
                    ),
                    ms,
                );
                continue;
            }
        };
        c.push(
            CheckReport::compare(
                order_check_id(kind),
                Some(n),
                json!(DIAGRAM_ORDERS[k]),
                json!(table.index()),
                format!(
                    "{} with {} cosets defined, budget {}",
                    status_name(table.status()),
                    table.cosets_defined(),
                    opts.budget
                ),
            ),
            ms,
        );
        c.run("relators_replayed", Some(n), true, || {
            Ok((
                table.satisfies(p.relators())? && table.is_involutive() && table.is_transitive(),
                format!("{} relators on every coset", p.relators().len()),
            ))
        });
        c.run(
            "matrix_projective_order",
            Some(n),
            DIAGRAM_ORDERS[k],
            || {
                let g = isometry::closure(&isometry::mod3_generators(n)?)?;
                let order = isometry::projective_order(&g);
                Ok((
                    order,
                    format!(
                        "linear order {}, -I present: {}",
                        g.order(),
                        g.contains_minus_identity()
                    ),
                ))
            },
        );
        c.run(
            "matrix_cross_check",
            Some(n),
            json!({"cosets": DIAGRAM_ORDERS[k], "matrix_order": DIAGRAM_ORDERS[k], "well_defined": true, "injective": true}),
            || {
                let check = coset_enum::verify_action_against_matrices(&table, &mod3_assignment(n)?)?;
                Ok((check, "coset ↦ projective mod-3 product of wall reflections".to_string()))
            },
        );
        if kind == DiagramKind::AffineA5 {
            c.run("affine_a5_undeflated", Some(n), "budget_exceeded", || {
                let t = todd_coxeter(&p.coxeter_part(), &[], UNDEFLATED_BUDGET)?;
                Ok((
                    status_name(t.status()),
                    format!("budget {UNDEFLATED_BUDGET}"),
                ))
            });
        }
        if kind == DiagramKind::Petersen {
            c.run("petersen_undeflated", Some(n), "budget_exceeded", || {
                let t = todd_coxeter(&p.coxeter_part(), &[], opts.budget)?;
                Ok((status_name(t.status()), format!("budget {}", opts.budget)))
            });
            c.run(
                "petersen_partial_deflation",
                Some(n),
                "budget_exceeded",
                || {
                    let kept: Vec<Word> = p
                        .deflation_relators()
                        .into_iter()
                        .take(PARTIAL_DEFLATIONS)
                        .cloned()
                        .collect();
                    let q = Presentation::from_diagram(p.diagram().clone(), kept);
                    let t = todd_coxeter(&q, &[], opts.budget)?;
                    Ok((
                        status_name(t.status()),
                        format!(
                            "first {PARTIAL_DEFLATIONS} canonical deflations, budget {}",
                            opts.budget
                        ),
                    ))
                },
            );
            c.run(
                "petersen_single_deflation_redundant",
                Some(n),
                vec![Some(51840usize); 10],
                || {
                    let first = p.relators().len() - p.counts().deflation;
                    let mut orders = Vec::new();
                    for i in first..p.relators().len() {
                        orders.push(todd_coxeter(&p.without_relator(i), &[], opts.budget)?.index());
                    }
                    Ok((
                        orders,
                        "order after dropping each deflation relator in turn".to_string(),
                    ))
                },
            );
        }
    }
}

fn tessellation_suite(c: &mut Checks, opts: &SuiteOptions) {
    for n in opts.dims(2, 4) {
        let k = n - 2;
        let start = Instant::now();
        let built = gosset::build_tessellation(n);
        let ms = start.elapsed().as_millis() as u64;
        let t = match built {
            Ok(t) => t,
            Err(e) => {
                c.push(
                    CheckReport::error("tile_count", Some(n), json!(TILE_COUNTS[k]), e.to_string()),
                    ms,
                );
                continue;
            }
        };
        let distinct = t.distinct_neighbor_counts();
        c.push(
            CheckReport::compare(
                "tile_count",
                Some(n),
                json!(TILE_COUNTS[k]),
                json!(t.tile_count()),
                format!(
                    "self-loops {}, distinct neighbours per tile {:?}",
                    t.self_loops(),
                    distinct.iter().collect::<BTreeSet<_>>()
                ),
            ),
            ms,
        );
        c.run("tile_graph_connected", Some(n), true, || {
            Ok((t.is_connected(), String::new()))
        });
        c.run("wall_slots", Some(n), [3, 6, 10][k], || {
            Ok((t.wall_slots(), String::new()))
        });
        c.run("edge_set_symmetric", Some(n), true, || {
            Ok((t.is_symmetric(), String::new()))
        });
        c.run("distinct_neighbors_constant", Some(n), true, || {
            Ok((distinct.windows(2).all(|w| w[0] == w[1]), String::new()))
        });
        c.run("lagrange", Some(n), t.group_order(), || {
            Ok((
                t.tile_count() * t.stabilizer_order(),
                format!(
                    "{} tiles × {} = {}",
                    t.tile_count(),
                    t.stabilizer_order(),
                    t.group_order()
                ),
            ))
        });
    }
}

fn e6_suite(c: &mut Checks) {
    let system = e6::build_e6();
    let betas = e6::beta_configuration();
    c.run("root_count", None, 72, || Ok((system.len(), String::new())));
    c.run("highest_root_present", None, true, || {
        Ok((
            system.contains(&[1, 2, 3, 2, 1, 2]),
            "α1+2α2+3α3+2α4+α5+2α6".to_string(),
        ))
    });
    c.run("betas_are_roots", None, Vec::<String>::new(), || {
        Ok((
            e6::non_roots(&system, &betas),
            "labels whose β is not a root".to_string(),
        ))
    });
    c.run(
        "petersen_gram",
        None,
        Vec::<e6::GramMismatch>::new(),
        || {
            let g = presentation::diagram_graph(DiagramKind::Petersen);
            Ok((
                e6::petersen_gram_mismatches(&betas, &g)?,
                "2 on the diagonal, 1 on edges, 0 otherwise".to_string(),
            ))
        },
    );
    c.run("hexagon_sums", None, Vec::<Vec<String>>::new(), || {
        Ok((
            e6::failing_hexagons(&betas)?,
            "hexagons with nonzero alternating sum".to_string(),
        ))
    });
    c.run("hexagon_traversals", None, 12, || {
        let g = presentation::diagram_graph(DiagramKind::Petersen);
        let h = presentation::free_hexagons(&g)
            .into_iter()
            .next()
            .ok_or(Error::NoGenerators)?;
        let mut zero = 0;
        for t in e6::traversals(&h) {
            zero += (e6::alternating_sum(&betas, &t)? == [0; e6::RANK]) as usize;
        }
        Ok((zero, h.join("-")))
    });
    c.run("sign_flip_control", None, true, || {
        let labels: Vec<String> = betas.labels().map(String::from).collect();
        let mut all_break = true;
        for l in &labels {
            all_break &= !e6::failing_hexagons(&betas.with_sign_flipped(l))?.is_empty();
        }
        Ok((
            all_break,
            "negating any single β breaks a hexagon sum".to_string(),
        ))
    });
    c.run("reflection_group_order", None, 51840, || {
        Ok((
            e6::verify_generation(&system, &betas, e6::DEFAULT_PERMUTATION_BUDGET)?,
            "permutation closure on the 72 roots".to_string(),
        ))
    });
}

/// Norm-one vectors used by the hexaflection checks.
pub fn curated_norm_one_vectors() -> Vec<EisensteinVector> {
    [
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 1)],
        [(1, 0), (1, 0), (1, 0), (0, 0)],
        [(1, 0), (0, 1), (1, 1), (0, 0)],
        [(2, 0), (1, 0), (1, 0), (1, 2)],
    ]
    .into_iter()
    .map(EisensteinVector::from_pairs)
    .collect()
}

fn eisenstein_suite(c: &mut Checks) {
    let basis = eisenstein::standard_basis();
    for (i, e) in curated_norm_one_vectors().iter().enumerate() {
        let tag = format!("e{i}={:?}", e.0.map(|z| (z.a, z.b)));
        c.run(&format!("hexaflection_order/e{i}"), None, Some(6), || {
            Ok((
                eisenstein::hexaflection_order_on(e, &basis, 1, 12)?,
                tag.clone(),
            ))
        });
        c.run(
            &format!("hexaflection_square_order/e{i}"),
            None,
            Some(3),
            || {
                Ok((
                    eisenstein::hexaflection_order_on(e, &basis, 2, 12)?,
                    tag.clone(),
                ))
            },
        );
        c.run(
            &format!("hexaflection_preserves_form/e{i}"),
            None,
            true,
            || {
                let mut ok = true;
                for u in &basis {
                    for v in basis.iter().chain([e]) {
                        let (hu, hv) = (
                            eisenstein::hexaflection(e, u)?,
                            eisenstein::hexaflection(e, v)?,
                        );
                        ok &= eisenstein::hermitian(&hu, &hv) == eisenstein::hermitian(u, v);
                    }
                }
                Ok((ok, tag.clone()))
            },
        );
        c.run(
            &format!("hexaflection_on_mirror_vector/e{i}"),
            None,
            true,
            || {
                let w = eisenstein::EisensteinInteger::OMEGA;
                let image = eisenstein::hexaflection(e, e)?;
                Ok((image == e.scale(-(w * w)), format!("{tag}: h_e(e) = -ω² e")))
            },
        );
    }
}

/// Tabulated orders for quick lookups by diagram.
pub fn expected_order(kind: DiagramKind) -> usize {
    DIAGRAM_ORDERS[kind.dimension() - 2]
}

/// Tabulated tile counts for n = 2, 3, 4.
pub fn expected_tile_count(n: usize) -> Option<usize> {
    (2..=4).contains(&n).then(|| TILE_COUNTS[n - 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions {
            n: Some(2),
            ..SuiteOptions::default()
        };
        for s in [
            Suite::Lattice,
            Suite::Diagrams,
            Suite::Presentation,
            Suite::Tessellation,
        ] {
            let r = run_suite(s, &opts);
            assert!(r.all_passed(), "{}", r.to_json());
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn curated_vectors_have_norm_one() {
        assert!(curated_norm_one_vectors().iter().all(|e| e.norm() == 1));
    }

    #[test]
    fn report_passes_only_on_equality() {
        let r = CheckReport::compare("x", None, json!(1), json!(2), "");
        assert!(!r.passed());
    }
}
