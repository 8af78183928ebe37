//! The Gosset polytope `P` for n = 2, 3, 4: its wall roots, the words
//! expressing wall reflections through the simple reflections, its vertex
//! orbits, and the tessellation of the level-3 quotient by copies of `P`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isometry::{
    self, coset_space, finite_group_elements, projective_closure, reduce_mod, reflection_matrix,
    CosetSpace, GroupClosure, LatticeIsometry, ModularMatrix, Modulus, DEFAULT_CLOSURE_BUDGET,
};
use crate::lattice::{self, LatticeVector, Root};

fn check_small_dim(n: usize) -> Result<()> {
    if (2..=4).contains(&n) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(n, "2..=4"))
    }
}

/// Norm-one wall roots of `P`, one per diagram node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GossetWallSystem {
    n: usize,
    walls: Vec<Root>,
    labels: Vec<String>,
}

impl GossetWallSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn walls(&self) -> &[Root] {
        &self.walls
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn wall(&self, label: &str) -> Option<&Root> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.walls[i])
    }

    pub fn reflections(&self) -> Vec<LatticeIsometry> {
        self.walls.iter().map(reflection_matrix).collect()
    }

    pub fn mod3_reflections(&self) -> Vec<ModularMatrix> {
        self.reflections()
            .iter()
            .map(|m| reduce_mod(m, Modulus::Three))
            .collect()
    }
}

/// Wall roots labelled as the nodes of the A3, Ã5 and Petersen diagrams.
pub fn gosset_walls(n: usize) -> Result<GossetWallSystem> {
    check_small_dim(n)?;
    let e = |i| LatticeVector::basis(n, i);
    let cone = |j, k| LatticeVector::cone_vector(n, 1, &[j, k]);
    let entries: Vec<(String, LatticeVector)> = match n {
        2 => vec![
            ("1".into(), e(1)?),
            ("2".into(), e(2)?),
            ("3".into(), cone(1, 2)?),
        ],
        3 => vec![
            ("1".into(), e(1)?),
            ("2".into(), e(2)?),
            ("3".into(), e(3)?),
            ("4".into(), cone(1, 2)?),
            ("5".into(), cone(2, 3)?),
            ("6".into(), cone(1, 3)?),
        ],
        _ => {
            let mut v: Vec<(String, LatticeVector)> = (1..=4)
                .map(|i| Ok((i.to_string(), e(i)?)))
                .collect::<Result<_>>()?;
            for j in 1..=4 {
                for k in j + 1..=4 {
                    v.push((format!("{j}{k}"), cone(j, k)?));
                }
            }
            v
        }
    };
    let (labels, vectors): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    Ok(GossetWallSystem {
        n,
        walls: vectors.into_iter().map(Root::new).collect::<Result<_>>()?,
        labels,
    })
}

/// A product of simple reflections `s_{i_1} s_{i_2} ...`.
fn simple_word(n: usize, indices: &[usize]) -> Result<LatticeIsometry> {
    let s = isometry::simple_reflections(n)?;
    Ok(indices
        .iter()
        .fold(LatticeIsometry::identity(n), |acc, &i| acc.mul(&s[i])))
}

fn format_word(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordCheck {
    pub wall: String,
    pub word: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorWordReport {
    pub n: usize,
    pub words: Vec<WordCheck>,
    /// For n = 4: number of distinct conjugates `w s_4 w⁻¹`, `w ∈ Γ₀`.
    pub conjugates: Option<usize>,
    /// For n = 4: whether the conjugates are exactly the wall reflections.
    pub conjugates_are_walls: Option<bool>,
}

impl GeneratorWordReport {
    pub fn passes(&self) -> bool {
        self.words.iter().all(|w| w.matches)
            && self.conjugates.is_none_or(|c| c == 10)
            && self.conjugates_are_walls.unwrap_or(true)
    }

    pub fn failures(&self) -> Vec<&WordCheck> {
        self.words.iter().filter(|w| !w.matches).collect()
    }
}

/// Checks the simple-reflection words for the wall reflections.
pub fn verify_generator_words(n: usize) -> Result<GeneratorWordReport> {
    check_small_dim(n)?;
    let walls = gosset_walls(n)?;
    let words: Vec<(&str, Vec<usize>)> = match n {
        2 => vec![("1", vec![1, 2, 1]), ("2", vec![2]), ("3", vec![0])],
        3 => vec![
            ("1", vec![1, 2, 3, 2, 1]),
            ("2", vec![2, 3, 2]),
            ("3", vec![3]),
            ("4", vec![0, 3, 0]),
            ("5", vec![0, 1, 2, 3, 2, 1, 0]),
            ("6", vec![0, 2, 3, 2, 0]),
        ],
        _ => vec![("3", vec![3, 4, 3]), ("12", vec![0, 3, 4, 3, 0])],
    };
    let mut checks = Vec::new();
    for (label, word) in words {
        let target = reflection_matrix(walls.wall(label).expect("label exists"));
        checks.push(WordCheck {
            wall: label.to_string(),
            word: format_word(&word),
            matches: simple_word(n, &word)? == target,
        });
    }
    let (mut conjugates, mut conjugates_are_walls) = (None, None);
    if n == 4 {
        let s4 = &isometry::simple_reflections(4)?[4];
        let g0 = finite_group_elements(&isometry::face_stabilizer_generators(4)?, 1000)?;
        let class: BTreeSet<LatticeIsometry> = g0
            .iter()
            .map(|w| w.mul(s4).mul(&w.isometry_inverse()))
            .collect();
        let wall_set: BTreeSet<LatticeIsometry> = walls.reflections().into_iter().collect();
        conjugates = Some(class.len());
        conjugates_are_walls = Some(class == wall_set);
    }
    Ok(GeneratorWordReport {
        n,
        words: checks,
        conjugates,
        conjugates_are_walls,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WallPair {
    Orthogonal,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallPairClassification {
    pub n: usize,
    /// `(label_i, label_j, kind)` for `i < j` in wall order.
    pub pairs: Vec<(String, String, WallPair)>,
    /// Distinct inner products observed between distinct walls.
    pub inner_products: BTreeSet<i64>,
}

impl WallPairClassification {
    pub fn count(&self, kind: WallPair) -> usize {
        self.pairs.iter().filter(|p| p.2 == kind).count()
    }
}

/// Orthogonal (inner product 0) or parallel (±1) for every pair of walls.
pub fn wall_pair_classification(n: usize) -> Result<WallPairClassification> {
    let walls = gosset_walls(n)?;
    let mut pairs = Vec::new();
    let mut inner_products = BTreeSet::new();
    for i in 0..walls.len() {
        for j in i + 1..walls.len() {
            let ip = lattice::inner(walls.walls[i].vector(), walls.walls[j].vector())?;
            inner_products.insert(ip);
            let kind = match ip {
                0 => WallPair::Orthogonal,
                1 | -1 => WallPair::Parallel,
                value => {
                    return Err(Error::BadGramEntry {
                        left: walls.labels[i].clone(),
                        right: walls.labels[j].clone(),
                        value,
                    })
                }
            };
            pairs.push((walls.labels[i].clone(), walls.labels[j].clone(), kind));
        }
    }
    Ok(WallPairClassification {
        n,
        pairs,
        inner_products,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexOrbitReport {
    pub n: usize,
    /// `|Γ₀ · v₀|`, the actual vertices.
    pub actual_vertices: usize,
    /// `|Γ₀ · v₁|`, the ideal vertices.
    pub ideal_vertices: usize,
    /// `v_n` is fixed by every element of Γ₀.
    pub center_fixed: bool,
    /// For n = 3: `{v₀, v₁, s₁v₁, s₂s₁v₁}`, the vertices of the tetrahedron T.
    pub tetrahedron: Option<Vec<LatticeVector>>,
}

pub fn vertex_orbits(n: usize) -> Result<VertexOrbitReport> {
    if !(3..=4).contains(&n) {
        return Err(Error::DimensionOutOfRange(n, "3..=4"));
    }
    let verts = lattice::chamber_vertices(n)?;
    let g0 = finite_group_elements(&isometry::face_stabilizer_generators(n)?, 1000)?;
    let orbit = |v: &LatticeVector| -> Result<usize> {
        let set: BTreeSet<LatticeVector> = g0.iter().map(|w| w.apply(v)).collect::<Result<_>>()?;
        Ok(set.len())
    };
    let center = &verts[n];
    let center_fixed = g0.iter().all(|w| w.apply(center).as_ref() == Ok(center));
    let tetrahedron = if n == 3 {
        let s = isometry::simple_reflections(3)?;
        let v1 = &verts[1];
        let s1v1 = s[1].apply(v1)?;
        let s2s1v1 = s[2].apply(&s1v1)?;
        Some(vec![verts[0].clone(), v1.clone(), s1v1, s2s1v1])
    } else {
        None
    };
    Ok(VertexOrbitReport {
        n,
        actual_vertices: orbit(&verts[0])?,
        ideal_vertices: orbit(&verts[1])?,
        center_fixed,
        tetrahedron,
    })
}

/// Copies `γP` of the Gosset polytope, `γ ∈ Γ/Γ(3)Γ₀`, glued along walls.
///
/// Tile `k` is the coset `g_k H` of the image `H` of Γ₀ in the projective
/// mod-3 group; across wall `i` it meets the tile containing `g_k t_i`.
#[derive(Debug, Clone, Serialize)]
pub struct TileGraph {
    n: usize,
    labels: Vec<String>,
    /// `neighbors[tile][wall]`.
    neighbors: Vec<Vec<u32>>,
    group_order: usize,
    stabilizer_order: usize,
}

impl TileGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tile_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn wall_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn neighbor(&self, tile: usize, wall: usize) -> usize {
        self.neighbors[tile][wall] as usize
    }

    /// Order of the projective mod-3 group Γ/Γ(3).
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Order of the image of Γ₀ in Γ/Γ(3).
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer_order
    }

    /// Number of wall slots on each tile.
    pub fn wall_slots(&self) -> usize {
        self.labels.len()
    }

    /// `(tile, wall label, tile)` for every tile and wall.
    pub fn edges(&self) -> impl Iterator<Item = (usize, &str, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(move |(t, row)| {
            row.iter()
                .enumerate()
                .map(move |(w, &u)| (t, self.labels[w].as_str(), u as usize))
        })
    }

    /// Tile `a` has as many walls facing `b` as `b` has facing `a`.
    ///
    /// Wall labels are only defined up to the stabilizer, so the comparison
    /// is on edge multiplicities.
    pub fn is_symmetric(&self) -> bool {
        let mut balance: BTreeMap<(usize, usize), isize> = BTreeMap::new();
        for (a, _, b) in self.edges().filter(|(a, _, b)| a != b) {
            *balance.entry((a.min(b), a.max(b))).or_default() += if a < b { 1 } else { -1 };
        }
        balance.values().all(|&m| m == 0)
    }

    pub fn self_loops(&self) -> usize {
        self.edges().filter(|(a, _, b)| a == b).count()
    }

    /// Number of distinct neighbouring tiles, per tile.
    pub fn distinct_neighbor_counts(&self) -> Vec<usize> {
        self.neighbors
            .iter()
            .map(|row| row.iter().collect::<BTreeSet<_>>().len())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.neighbors.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.tile_count()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &u in &self.neighbors[t] {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    reached += 1;
                    queue.push_back(u as usize);
                }
            }
        }
        reached == self.tile_count()
    }

    /// Undirected DOT rendering, one edge per glued wall pair, tiles in coset order.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph tessellation_{} {{\n", self.n);
        for t in 0..self.tile_count() {
            out.push_str(&format!("  t{t};\n"));
        }
        for (a, label, b) in self.edges() {
            if a <= b {
                out.push_str(&format!("  t{a} -- t{b} [label=\"{label}\"];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Projective mod-3 image of Γ and the coset space of the image of Γ₀.
pub fn tessellation_cosets(n: usize) -> Result<(GroupClosure, CosetSpace)> {
    check_small_dim(n)?;
    let group = projective_closure(&isometry::mod3_generators(n)?, DEFAULT_CLOSURE_BUDGET)?;
    let h_gens: Vec<ModularMatrix> = isometry::face_stabilizer_generators(n)?
        .iter()
        .map(|m| reduce_mod(m, Modulus::Three))
        .collect();
    let cosets = coset_space(&group, &h_gens)?;
    Ok((group, cosets))
}

pub fn build_tessellation(n: usize) -> Result<TileGraph> {
    let (group, cosets) = tessellation_cosets(n)?;
    let walls = gosset_walls(n)?;
    let t: Vec<ModularMatrix> = walls
        .mod3_reflections()
        .iter()
        .map(|m| group.canonical(m))
        .collect();
    let tile_of = |m: &ModularMatrix| -> Result<u32> {
        let idx = group.index_of(m).ok_or(Error::NotASubgroup)?;
        Ok(cosets.coset_of_index(idx) as u32)
    };
    let mut neighbors = Vec::with_capacity(cosets.count());
    for k in 0..cosets.count() {
        let g = group.element(cosets.representative(k));
        let row = t
            .iter()
            .map(|ti| tile_of(&group.mul(g, ti)))
            .collect::<Result<Vec<u32>>>()?;
        // the neighbour multiset must not depend on the representative
        let mut expected: BTreeMap<u32, usize> = BTreeMap::new();
        row.iter()
            .for_each(|&u| *expected.entry(u).or_default() += 1);
        for h in cosets.subgroup().elements() {
            let gh = group.mul(g, h);
            let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
            for ti in &t {
                *seen.entry(tile_of(&group.mul(&gh, ti))?).or_default() += 1;
            }
            if seen != expected {
                return Err(Error::RepresentativeDependent(k));
            }
        }
        neighbors.push(row);
    }
    Ok(TileGraph {
        n,
        labels: walls.labels().to_vec(),
        neighbors,
        group_order: group.order(),
        stabilizer_order: cosets.subgroup().order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_examples() {
        let w = gosset_walls(4).unwrap();
        assert_eq!(w.len(), 10);
        let ip = |a, b| {
            lattice::inner(w.wall(a).unwrap().vector(), w.wall(b).unwrap().vector()).unwrap()
        };
        assert_eq!(ip("1", "12"), -1);
        assert_eq!(ip("1", "23"), 0);
        assert!(w.walls().iter().all(Root::is_short));
        assert!(gosset_walls(5).is_err());
    }

    #[test]
    fn generator_words_hold() {
        for n in 2..=4 {
            let r = verify_generator_words(n).unwrap();
            assert!(r.passes(), "n={n}: {:?}", r.failures());
        }
        assert_eq!(verify_generator_words(4).unwrap().conjugates, Some(10));
    }

    #[test]
    fn a_wrong_word_is_caught() {
        let walls = gosset_walls(3).unwrap();
        let wrong = simple_word(3, &[0, 1, 0]).unwrap();
        assert_ne!(wrong, reflection_matrix(walls.wall("4").unwrap()));
    }

    #[test]
    fn pair_classification() {
        let c4 = wall_pair_classification(4).unwrap();
        let kind = |a: &str, b: &str| c4.pairs.iter().find(|p| p.0 == a && p.1 == b).unwrap().2;
        assert_eq!(kind("1", "2"), WallPair::Orthogonal);
        assert_eq!(kind("12", "34"), WallPair::Parallel);
        let c2 = wall_pair_classification(2).unwrap();
        assert_eq!(c2.count(WallPair::Parallel), 2);
        assert_eq!(c2.count(WallPair::Orthogonal), 1);
    }

    #[test]
    fn orbits() {
        let r = vertex_orbits(4).unwrap();
        assert_eq!((r.actual_vertices, r.ideal_vertices), (5, 5));
        assert!(r.center_fixed);
        let r3 = vertex_orbits(3).unwrap();
        assert!(r3.center_fixed);
        let tet = r3.tetrahedron.unwrap();
        let n = 3;
        assert_eq!(
            tet,
            vec![
                LatticeVector::basis(n, 0).unwrap(),
                LatticeVector::cone_vector(n, 1, &[1]).unwrap(),
                LatticeVector::cone_vector(n, 1, &[2]).unwrap(),
                LatticeVector::cone_vector(n, 1, &[3]).unwrap(),
            ]
        );
        assert!(vertex_orbits(2).is_err());
    }

    #[test]
    fn small_tessellations() {
        let t2 = build_tessellation(2).unwrap();
        assert_eq!(t2.tile_count(), 12);
        assert!(t2.is_symmetric() && t2.is_connected());
        let t3 = build_tessellation(3).unwrap();
        assert_eq!(t3.tile_count(), 60);
        assert_eq!(t3.wall_slots(), 6);
        assert_eq!(t3.tile_count() * t3.stabilizer_order(), t3.group_order());
    }

    #[test]
    fn dot_output_is_stable() {
        let t2 = build_tessellation(2).unwrap();
        let dot = t2.to_dot();
        assert!(dot.starts_with("graph tessellation_2 {\n  t0;\n"));
        assert_eq!(dot, build_tessellation(2).unwrap().to_dot());
    }
}
