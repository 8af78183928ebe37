//! The E6 root system in simple-root coordinates and the ten roots whose Gram
//! matrix is the Petersen incidence matrix.

use std::collections::{BTreeMap, HashMap, VecDeque};

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{diagram_graph, free_hexagons, DiagramGraph, DiagramKind};

pub const RANK: usize = 6;

/// A vector `Σ cᵢ αᵢ` in the simple-root basis.
pub type RootCoords = [i32; RANK];

/// Chain 1–2–3–4–5 with node 6 attached to node 3 (0-based below).
const EDGES: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];

pub fn cartan_matrix() -> [[i32; RANK]; RANK] {
    let mut c = [[0; RANK]; RANK];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in &EDGES {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    c
}

pub fn form(u: &RootCoords, v: &RootCoords) -> i32 {
    let c = cartan_matrix();
    (0..RANK)
        .map(|i| (0..RANK).map(|j| u[i] * c[i][j] * v[j]).sum::<i32>())
        .sum()
}

pub fn simple_root(i: usize) -> RootCoords {
    let mut r = [0; RANK];
    r[i] = 1;
    r
}

/// `s_β(v) = v − (v,β)β` for a norm-2 root `β`.
pub fn reflect(beta: &RootCoords, v: &RootCoords) -> RootCoords {
    let k = form(v, beta);
    std::array::from_fn(|i| v[i] - k * beta[i])
}

fn negate(v: &RootCoords) -> RootCoords {
    v.map(|x| -x)
}

#[derive(Debug, Clone)]
pub struct E6RootSystem {
    roots: IndexSet<RootCoords>,
}

impl E6RootSystem {
    pub fn roots(&self) -> impl ExactSizeIterator<Item = &RootCoords> {
        self.roots.iter()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &RootCoords) -> bool {
        self.roots.contains(v)
    }

    pub fn index_of(&self, v: &RootCoords) -> Option<usize> {
        self.roots.get_index_of(v)
    }

    pub fn root(&self, i: usize) -> &RootCoords {
        &self.roots[i]
    }

    /// The reflection in `beta` as a permutation of root indices.
    pub fn reflection_permutation(&self, beta: &RootCoords) -> Result<Vec<u8>> {
        self.roots
            .iter()
            .map(|r| {
                self.index_of(&reflect(beta, r))
                    .map(|i| i as u8)
                    .ok_or(Error::NotARoot(i64::from(form(r, r))))
            })
            .collect()
    }
}

/// Orbit of the simple roots under the simple reflections.
pub fn build_e6() -> E6RootSystem {
    let simple: Vec<RootCoords> = (0..RANK).map(simple_root).collect();
    let mut roots: IndexSet<RootCoords> = simple.iter().copied().collect();
    let mut queue: VecDeque<RootCoords> = simple.iter().copied().collect();
    while let Some(r) = queue.pop_front() {
        for s in &simple {
            let image = reflect(s, &r);
            if roots.insert(image) {
                queue.push_back(image);
            }
        }
    }
    E6RootSystem { roots }
}

/// The ten roots indexed by the Petersen labels `i` and `jk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaConfiguration {
    betas: BTreeMap<String, RootCoords>,
}

impl BetaConfiguration {
    pub fn from_map(betas: BTreeMap<String, RootCoords>) -> Self {
        Self { betas }
    }

    pub fn get(&self, label: &str) -> Option<&RootCoords> {
        self.betas.get(label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.betas.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &RootCoords)> {
        self.betas.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    /// Copy with `β_label` replaced by its negative.
    pub fn with_sign_flipped(&self, label: &str) -> Self {
        let mut out = self.clone();
        if let Some(b) = out.betas.get_mut(label) {
            *b = negate(b);
        }
        out
    }

    fn require(&self, label: &str) -> Result<&RootCoords> {
        self.betas
            .get(label)
            .ok_or_else(|| Error::UnknownLetter(label.to_string()))
    }

    pub fn gram(&self, a: &str, b: &str) -> Result<i32> {
        Ok(form(self.require(a)?, self.require(b)?))
    }
}

/// The six roots read off the simple roots, plus the four derived sums.
pub fn beta_configuration() -> BetaConfiguration {
    let table: [(&str, RootCoords); 10] = [
        ("13", [-1, 0, 0, 0, 0, 0]),
        ("1", [0, 1, 0, 0, 0, 0]),
        ("14", [0, 0, -1, 0, 0, 0]),
        ("4", [0, 0, 0, 1, 0, 0]),
        ("34", [0, 0, 0, 0, -1, 0]),
        ("23", [0, 0, 0, 0, 0, 1]),
        ("3", [-1, -1, -1, -1, -1, 0]),
        ("24", [0, 1, 2, 2, 1, 1]),
        ("2", [1, 2, 3, 2, 1, 2]),
        ("12", [1, 2, 2, 1, 0, 1]),
    ];
    BetaConfiguration {
        betas: table.into_iter().map(|(l, v)| (l.to_string(), v)).collect(),
    }
}

/// Labels whose β is not in the root system.
pub fn non_roots(system: &E6RootSystem, c: &BetaConfiguration) -> Vec<String> {
    c.iter()
        .filter(|(_, b)| !system.contains(b))
        .map(|(l, _)| l.to_string())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramMismatch {
    pub left: String,
    pub right: String,
    pub expected: i32,
    pub actual: i32,
}

/// Compares every Gram entry with 2 on the diagonal, 1 on edges of `graph`
/// and 0 elsewhere. Returns the mismatching pairs.
pub fn petersen_gram_mismatches(
    c: &BetaConfiguration,
    graph: &DiagramGraph,
) -> Result<Vec<GramMismatch>> {
    let nodes = graph.nodes();
    let mut out = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate().skip(i) {
            let expected = if i == j {
                2
            } else if graph.adjacent(i, j) {
                1
            } else {
                0
            };
            let actual = c.gram(a, b)?;
            if actual != expected {
                out.push(GramMismatch {
                    left: a.clone(),
                    right: b.clone(),
                    expected,
                    actual,
                });
            }
        }
    }
    Ok(out)
}

pub fn verify_petersen_gram(c: &BetaConfiguration) -> Result<bool> {
    Ok(petersen_gram_mismatches(c, &diagram_graph(DiagramKind::Petersen))?.is_empty())
}

/// `β_a − β_b + β_c − β_d + β_e − β_f` around the given 6-cycle.
pub fn alternating_sum(c: &BetaConfiguration, hexagon: &[String]) -> Result<RootCoords> {
    if hexagon.len() != 6 {
        return Err(Error::NotAHexagon(hexagon.to_vec()));
    }
    let mut sum = [0; RANK];
    for (k, label) in hexagon.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let b = c.require(label)?;
        for i in 0..RANK {
            sum[i] += sign * b[i];
        }
    }
    Ok(sum)
}

/// Hexagons of the Petersen diagram whose alternating sum is nonzero.
pub fn failing_hexagons(c: &BetaConfiguration) -> Result<Vec<Vec<String>>> {
    let g = diagram_graph(DiagramKind::Petersen);
    let mut out = Vec::new();
    for h in free_hexagons(&g) {
        if alternating_sum(c, &h)? != [0; RANK] {
            out.push(h);
        }
    }
    Ok(out)
}

pub fn verify_hexagon_sums(c: &BetaConfiguration) -> Result<bool> {
    Ok(failing_hexagons(c)?.is_empty())
}

/// All 12 starting points and directions of a cyclic node list.
pub fn traversals(hexagon: &[String]) -> Vec<Vec<String>> {
    let n = hexagon.len();
    let mut out = Vec::with_capacity(2 * n);
    for start in 0..n {
        out.push((0..n).map(|k| hexagon[(start + k) % n].clone()).collect());
        out.push(
            (0..n)
                .map(|k| hexagon[(start + n - k) % n].clone())
                .collect(),
        );
    }
    out
}

pub const DEFAULT_PERMUTATION_BUDGET: usize = 1_000_000;

/// Order of the permutation group generated by the reflections in the βs,
/// acting on the 72 roots.
pub fn verify_generation(
    system: &E6RootSystem,
    c: &BetaConfiguration,
    budget: usize,
) -> Result<usize> {
    let gens: Vec<Vec<u8>> = c
        .iter()
        .map(|(_, b)| system.reflection_permutation(b))
        .collect::<Result<_>>()?;
    permutation_group_order(&gens, budget)
}

/// Breadth-first closure of a set of permutations of `0..len`.
pub fn permutation_group_order(gens: &[Vec<u8>], budget: usize) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Err(Error::NoGenerators);
    };
    let identity: Vec<u8> = (0..first.len() as u8).collect();
    let mut seen: IndexSet<Vec<u8>> = IndexSet::from([identity]);
    let mut k = 0;
    while k < seen.len() {
        for g in gens {
            let p = &seen[k];
            let composed: Vec<u8> = p.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(composed) && seen.len() > budget {
                return Err(Error::BudgetExceeded(budget));
            }
        }
        k += 1;
    }
    Ok(seen.len())
}

/// Roots fixed by the reflection in `beta`, as root indices.
pub fn fixed_roots(system: &E6RootSystem, beta: &RootCoords) -> Result<Vec<usize>> {
    let perm = system.reflection_permutation(beta)?;
    Ok(perm
        .iter()
        .enumerate()
        .filter(|(i, &p)| *i == p as usize)
        .map(|(i, _)| i)
        .collect())
}

/// Gram matrix in diagram node order, for reports.
pub fn gram_matrix(c: &BetaConfiguration) -> Result<HashMap<String, Vec<i32>>> {
    let g = diagram_graph(DiagramKind::Petersen);
    g.nodes()
        .iter()
        .map(|a| {
            let row = g
                .nodes()
                .iter()
                .map(|b| c.gram(a, b))
                .collect::<Result<_>>()?;
            Ok((a.clone(), row))
        })
        .collect()
}
