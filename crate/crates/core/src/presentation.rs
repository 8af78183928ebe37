//! Simply laced Coxeter diagrams of the wall systems, their braid and
//! deflation relators, and evaluation of words in matrix groups.
//!
//! The Petersen diagram appears under two names in the literature (I₁₀ and
//! P₁₀); here it is always [`DiagramKind::Petersen`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gosset::GossetWallSystem;
use crate::isometry::{LatticeIsometry, ModularMatrix};
use crate::lattice::{self, LatticeVector, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    A3,
    AffineA5,
    Petersen,
}

impl DiagramKind {
    pub const ALL: [DiagramKind; 3] = [
        DiagramKind::A3,
        DiagramKind::AffineA5,
        DiagramKind::Petersen,
    ];

    /// The diagram of the wall system of Z^{n,1}, n ∈ {2, 3, 4}.
    pub fn for_dimension(n: usize) -> Result<Self> {
        match n {
            2 => Ok(DiagramKind::A3),
            3 => Ok(DiagramKind::AffineA5),
            4 => Ok(DiagramKind::Petersen),
            _ => Err(Error::DimensionOutOfRange(n, "2..=4")),
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            DiagramKind::A3 => 2,
            DiagramKind::AffineA5 => 3,
            DiagramKind::Petersen => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagramKind::A3 => "a3",
            DiagramKind::AffineA5 => "affine_a5",
            DiagramKind::Petersen => "petersen",
        }
    }
}

impl FromStr for DiagramKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a3" => Ok(DiagramKind::A3),
            "affine_a5" | "affine-a5" | "a5~" => Ok(DiagramKind::AffineA5),
            "petersen" | "p10" | "i10" => Ok(DiagramKind::Petersen),
            _ => Err(Error::Parse {
                line: 0,
                message: format!("unknown diagram `{s}`"),
            }),
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A simple graph with labelled nodes.
#[derive(Debug, Clone)]
pub struct DiagramGraph {
    nodes: Vec<String>,
    adjacency: Vec<Vec<bool>>,
}

impl DiagramGraph {
    pub fn new(nodes: Vec<String>) -> Self {
        let k = nodes.len();
        Self {
            nodes,
            adjacency: vec![vec![false; k]; k],
        }
    }

    /// Adds the edge `a -- b`; loops are refused.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        if i == j {
            return Err(Error::UnknownLetter(format!("{a}-{a} loop")));
        }
        self.adjacency[i][j] = true;
        self.adjacency[j][i] = true;
        Ok(())
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownLetter(label.to_string()))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn adjacent_labels(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.adjacency[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&x| x).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter_map(|(j, &a)| a.then_some(j))
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacency[i][j])
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    fn labelled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (self.nodes[i].clone(), self.nodes[j].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Degree of every node if they all agree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.len()).all(|i| self.degree(i) == d).then_some(d)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let k = self.len();
        let mut best: Option<usize> = None;
        for s in 0..k {
            let mut dist = vec![usize::MAX; k];
            let mut parent = vec![usize::MAX; k];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for node in &self.nodes {
            out.push_str(&format!("  \"{node}\";\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                self.nodes[i], self.nodes[j]
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Labelled-graph equality: same node labels, same labelled edges.
impl PartialEq for DiagramGraph {
    fn eq(&self, other: &Self) -> bool {
        let a: BTreeSet<_> = self.nodes.iter().collect();
        let b: BTreeSet<_> = other.nodes.iter().collect();
        a == b && self.labelled_edges() == other.labelled_edges()
    }
}

impl Eq for DiagramGraph {}

fn petersen_labels() -> Vec<String> {
    ["1", "2", "3", "4", "12", "13", "14", "23", "24", "34"]
        .map(String::from)
        .to_vec()
}

/// Digits of a Petersen node label: `"3"` → {3}, `"24"` → {2, 4}.
pub(crate) fn label_digits(label: &str) -> BTreeSet<u8> {
    label.bytes().map(|b| b - b'0').collect()
}

pub fn diagram_graph(kind: DiagramKind) -> DiagramGraph {
    match kind {
        DiagramKind::A3 => {
            let mut g = DiagramGraph::new(["1", "2", "3"].map(String::from).to_vec());
            g.add_edge("1", "3").unwrap();
            g.add_edge("3", "2").unwrap();
            g
        }
        DiagramKind::AffineA5 => {
            let mut g = DiagramGraph::new((1..=6).map(|i| i.to_string()).collect());
            let cycle = ["1", "4", "2", "5", "3", "6"];
            for k in 0..6 {
                g.add_edge(cycle[k], cycle[(k + 1) % 6]).unwrap();
            }
            g
        }
        DiagramKind::Petersen => {
            let labels = petersen_labels();
            let mut g = DiagramGraph::new(labels.clone());
            for a in &labels {
                for b in &labels {
                    if a >= b {
                        continue;
                    }
                    let (da, db) = (label_digits(a), label_digits(b));
                    let adjacent = match (da.len(), db.len()) {
                        (1, 2) => db.is_superset(&da),
                        (2, 1) => da.is_superset(&db),
                        (2, 2) => da.is_disjoint(&db),
                        _ => false,
                    };
                    if adjacent {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            g
        }
    }
}

/// Edge `i -- j` iff the wall roots have inner product −1.
pub fn diagram_from_gram(walls: &GossetWallSystem) -> Result<DiagramGraph> {
    let mut g = DiagramGraph::new(walls.labels().to_vec());
    let k = walls.len();
    for i in 0..k {
        for j in i + 1..k {
            let ip = lattice::inner(walls.walls()[i].vector(), walls.walls()[j].vector())?;
            match ip {
                0 => {}
                -1 => g.add_edge(&walls.labels()[i], &walls.labels()[j])?,
                value => {
                    return Err(Error::BadGramEntry {
                        left: walls.labels()[i].clone(),
                        right: walls.labels()[j].clone(),
                        value,
                    })
                }
            }
        }
    }
    Ok(g)
}

/// Order of the automorphism group, by backtracking over degree-compatible images.
pub fn diagram_automorphism_order(g: &DiagramGraph) -> usize {
    fn extend(g: &DiagramGraph, image: &mut Vec<usize>, used: &mut [bool]) -> usize {
        let i = image.len();
        if i == g.len() {
            return 1;
        }
        let mut count = 0;
        for cand in 0..g.len() {
            if used[cand] || g.degree(cand) != g.degree(i) {
                continue;
            }
            if (0..i).any(|p| g.adjacent(p, i) != g.adjacent(image[p], cand)) {
                continue;
            }
            used[cand] = true;
            image.push(cand);
            count += extend(g, image, used);
            image.pop();
            used[cand] = false;
        }
        count
    }
    extend(
        g,
        &mut Vec::with_capacity(g.len()),
        &mut vec![false; g.len()],
    )
}

/// Lexicographically least rotation or reflection of a cyclic index sequence.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..k {
        for dir in [1isize, -1] {
            let seq: Vec<usize> = (0..k as isize)
                .map(|t| cycle[(start as isize + dir * t).rem_euclid(k as isize) as usize])
                .collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

fn is_induced_cycle(g: &DiagramGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    (0..k).all(|a| {
        (a + 1..k).all(|b| {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            g.adjacent(cycle[a], cycle[b]) == consecutive
        })
    })
}

/// All induced 6-cycles, each once, as canonical cyclic label lists.
pub fn free_hexagons(g: &DiagramGraph) -> Vec<Vec<String>> {
    fn walk(g: &DiagramGraph, path: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == 6 {
            if g.adjacent(last, path[0]) && is_induced_cycle(g, path) {
                found.insert(canonical_cycle(path));
            }
            return;
        }
        for next in g.neighbors(last) {
            if next > path[0] && !path.contains(&next) {
                path.push(next);
                walk(g, path, found);
                path.pop();
            }
        }
    }
    let mut found = BTreeSet::new();
    for s in 0..g.len() {
        walk(g, &mut vec![s], &mut found);
    }
    found
        .into_iter()
        .map(|c| c.into_iter().map(|i| g.nodes[i].clone()).collect())
        .collect()
}

/// A word in the involutive generators, letters being node labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<String>,
}

impl Word {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Self {
        Self {
            letters: letters.into_iter().map(Into::into).collect(),
        }
    }

    pub fn empty() -> Self {
        Self { letters: vec![] }
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(ab)^k`.
    pub fn alternating(a: &str, b: &str, k: usize) -> Self {
        Self::new((0..2 * k).map(|i| if i % 2 == 0 { a } else { b }))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters.join("."))
    }
}

/// The word `a·b·c·d·e·f·e·d·c·b` for the hexagon `(a, b, c, d, e, f)`.
pub fn deflation_relator(g: &DiagramGraph, hexagon: &[String]) -> Result<Word> {
    let not_hex = || Error::NotAHexagon(hexagon.to_vec());
    if hexagon.len() != 6 {
        return Err(not_hex());
    }
    let idx: Vec<usize> = hexagon
        .iter()
        .map(|l| g.index_of(l))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<_> = idx.iter().collect();
    if distinct.len() != 6 || !(0..6).all(|k| g.adjacent(idx[k], idx[(k + 1) % 6])) {
        return Err(not_hex());
    }
    let order = [0, 1, 2, 3, 4, 5, 4, 3, 2, 1];
    Ok(Word::new(order.iter().map(|&k| hexagon[k].clone())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelatorCounts {
    pub involution: usize,
    pub commuting: usize,
    pub braid: usize,
    pub deflation: usize,
}

/// Involutive generators on the nodes of a diagram, with relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    diagram: DiagramGraph,
    relators: Vec<Word>,
    counts: RelatorCounts,
}

impl Presentation {
    /// Coxeter relators of the simply laced diagram, plus the given deflations.
    pub fn from_diagram(diagram: DiagramGraph, deflations: Vec<Word>) -> Self {
        let k = diagram.len();
        let nodes = diagram.nodes().to_vec();
        let mut relators: Vec<Word> = nodes.iter().map(|a| Word::new([a, a])).collect();
        let mut commuting = 0;
        for i in 0..k {
            for j in i + 1..k {
                if !diagram.adjacent(i, j) {
                    relators.push(Word::alternating(&nodes[i], &nodes[j], 2));
                    commuting += 1;
                }
            }
        }
        let edges = diagram.edges();
        for &(i, j) in &edges {
            relators.push(Word::alternating(&nodes[i], &nodes[j], 3));
        }
        let counts = RelatorCounts {
            involution: k,
            commuting,
            braid: edges.len(),
            deflation: deflations.len(),
        };
        relators.extend(deflations);
        Self {
            diagram,
            relators,
            counts,
        }
    }

    pub fn diagram(&self) -> &DiagramGraph {
        &self.diagram
    }

    pub fn generators(&self) -> &[String] {
        self.diagram.nodes()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn counts(&self) -> RelatorCounts {
        self.counts
    }

    /// Braid and commuting relators only (the Coxeter group of the diagram).
    pub fn coxeter_part(&self) -> Presentation {
        Presentation::from_diagram(self.diagram.clone(), vec![])
    }

    /// Relators that are not involution, commuting or braid relators.
    pub fn deflation_relators(&self) -> Vec<&Word> {
        self.relators
            .iter()
            .filter(|w| classify(w) == RelatorKind::Other)
            .collect()
    }

    /// Same relators in a different order.
    pub fn with_relator_order(&self, order: &[usize]) -> Presentation {
        assert_eq!(order.len(), self.relators.len());
        Presentation {
            relators: order.iter().map(|&i| self.relators[i].clone()).collect(),
            ..self.clone()
        }
    }

    /// Copy with the relator at `index` removed.
    pub fn without_relator(&self, index: usize) -> Presentation {
        let mut out = self.clone();
        let removed = out.relators.remove(index);
        match classify(&removed) {
            RelatorKind::Involution => out.counts.involution -= 1,
            RelatorKind::Commuting => out.counts.commuting -= 1,
            RelatorKind::Braid => out.counts.braid -= 1,
            RelatorKind::Other => out.counts.deflation -= 1,
        }
        out
    }

    /// Plain-text interchange form: a generator header then one relator per line.
    pub fn to_relator_text(&self) -> String {
        let mut out = format!("# generators: {}\n", self.generators().join(" "));
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses [`Presentation::to_relator_text`] output.
    ///
    /// Lines starting with `#` are comments, except the optional
    /// `# generators:` header fixing the alphabet and its order (otherwise the
    /// order of first appearance is used). Relators are kept verbatim and in
    /// file order; the diagram is read off the `(ab)^3` relators.
    pub fn parse_relator_text(text: &str) -> Result<Presentation> {
        let mut generators: Option<Vec<String>> = None;
        let mut words = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(list) = comment.trim().strip_prefix("generators:") {
                    if generators.is_some() {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            message: "duplicate generators header".into(),
                        });
                    }
                    generators = Some(list.split_whitespace().map(String::from).collect());
                }
                continue;
            }
            let letters: Vec<&str> = line.split('.').map(str::trim).collect();
            if letters.iter().any(|l| l.is_empty()) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("empty letter in `{line}`"),
                });
            }
            words.push((lineno + 1, Word::new(letters)));
        }
        let generators = generators.unwrap_or_else(|| {
            let mut seen: Vec<String> = Vec::new();
            for (_, w) in &words {
                for l in w.letters() {
                    if !seen.contains(l) {
                        seen.push(l.clone());
                    }
                }
            }
            seen
        });
        let mut diagram = DiagramGraph::new(generators);
        for (line, w) in &words {
            for l in w.letters() {
                diagram.index_of(l).map_err(|_| Error::Parse {
                    line: *line,
                    message: format!("letter `{l}` not among the generators"),
                })?;
            }
            if let Some((a, b)) = as_alternating(w, 3) {
                diagram.add_edge(a, b)?;
            }
        }
        let relators: Vec<Word> = words.into_iter().map(|(_, w)| w).collect();
        let mut counts = RelatorCounts {
            involution: 0,
            commuting: 0,
            braid: 0,
            deflation: 0,
        };
        for w in &relators {
            match classify(w) {
                RelatorKind::Involution => counts.involution += 1,
                RelatorKind::Commuting => counts.commuting += 1,
                RelatorKind::Braid => counts.braid += 1,
                RelatorKind::Other => counts.deflation += 1,
            }
        }
        Ok(Presentation {
            diagram,
            relators,
            counts,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RelatorKind {
    Involution,
    Commuting,
    Braid,
    Other,
}

fn classify(w: &Word) -> RelatorKind {
    let l = w.letters();
    if l.len() == 2 && l[0] == l[1] {
        RelatorKind::Involution
    } else if as_alternating(w, 2).is_some() {
        RelatorKind::Commuting
    } else if as_alternating(w, 3).is_some() {
        RelatorKind::Braid
    } else {
        RelatorKind::Other
    }
}

/// `Some((a, b))` if `w = (ab)^k` with `a ≠ b`.
fn as_alternating(w: &Word, k: usize) -> Option<(&str, &str)> {
    let l = w.letters();
    if l.len() != 2 * k || l[0] == l[1] {
        return None;
    }
    l.iter()
        .enumerate()
        .all(|(i, x)| *x == l[i % 2])
        .then(|| (l[0].as_str(), l[1].as_str()))
}

/// Coxeter relators plus one deflation relator per free hexagon (at its
/// canonical representative).
pub fn build_presentation(kind: DiagramKind) -> Presentation {
    let diagram = diagram_graph(kind);
    let deflations = free_hexagons(&diagram)
        .iter()
        .map(|h| deflation_relator(&diagram, h).expect("free hexagons are 6-cycles"))
        .collect();
    Presentation::from_diagram(diagram, deflations)
}

/// Values that words can be evaluated into.
pub trait WordValue: Clone {
    fn identity_like(&self) -> Self;
    fn compose(&self, rhs: &Self) -> Self;
}

impl WordValue for LatticeIsometry {
    fn identity_like(&self) -> Self {
        LatticeIsometry::identity(self.n())
    }
    fn compose(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

impl WordValue for ModularMatrix {
    fn identity_like(&self) -> Self {
        ModularMatrix::identity(self.dim(), self.modulus())
    }
    fn compose(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
}

/// Left-to-right product of the assigned values of the letters.
pub fn evaluate_word<M: WordValue>(word: &Word, assignment: &HashMap<String, M>) -> Result<M> {
    let lookup = |l: &String| {
        assignment
            .get(l)
            .ok_or_else(|| Error::UnassignedLetter(l.clone()))
    };
    let mut acc = match word.letters().first() {
        Some(first) => lookup(first)?.identity_like(),
        None => assignment
            .values()
            .next()
            .ok_or_else(|| Error::UnassignedLetter(String::new()))?
            .identity_like(),
    };
    for l in word.letters() {
        acc = acc.compose(lookup(l)?);
    }
    Ok(acc)
}

/// Both sides of `(s_β s_α s_β − s_α s_β s_α)λ = 6(λ,α)α − 6(λ,β)β`.
pub fn braid_identity_sides(
    alpha: &Root,
    beta: &Root,
    lambda: &LatticeVector,
) -> Result<(LatticeVector, LatticeVector)> {
    if alpha.norm() != 1 || beta.norm() != 1 {
        return Err(Error::BraidPrecondition("roots must have norm 1".into()));
    }
    let ab = lattice::inner(alpha.vector(), beta.vector())?;
    if ab != -1 {
        return Err(Error::BraidPrecondition(format!(
            "(α, β) = {ab}, expected -1"
        )));
    }
    let s = |r: &Root, v: &LatticeVector| lattice::reflect(r, v);
    let bab = s(beta, &s(alpha, &s(beta, lambda)?)?)?;
    let aba = s(alpha, &s(beta, &s(alpha, lambda)?)?)?;
    let lhs = &bab - &aba;
    let la = lattice::inner(lambda, alpha.vector())?;
    let lb = lattice::inner(lambda, beta.vector())?;
    let rhs = &alpha.vector().scale(6 * la) - &beta.vector().scale(6 * lb);
    Ok((lhs, rhs))
}

pub fn braid_identity_check(alpha: &Root, beta: &Root, lambda: &LatticeVector) -> Result<bool> {
    let (lhs, rhs) = braid_identity_sides(alpha, beta, lambda)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let g = diagram_graph(DiagramKind::Petersen);
        assert_eq!(g.len(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn affine_a5_edges() {
        let g = diagram_graph(DiagramKind::AffineA5);
        let mut expected = DiagramGraph::new((1..=6).map(|i| i.to_string()).collect());
        for (a, b) in [
            ("1", "4"),
            ("4", "2"),
            ("2", "5"),
            ("5", "3"),
            ("3", "6"),
            ("6", "1"),
        ] {
            expected.add_edge(a, b).unwrap();
        }
        assert_eq!(g, expected);
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn a3_is_path_1_3_2() {
        let g = diagram_graph(DiagramKind::A3);
        assert!(g.adjacent_labels("1", "3").unwrap());
        assert!(g.adjacent_labels("3", "2").unwrap());
        assert!(!g.adjacent_labels("1", "2").unwrap());
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn automorphism_orders() {
        let orders: Vec<_> = DiagramKind::ALL
            .iter()
            .map(|&k| diagram_automorphism_order(&diagram_graph(k)))
            .collect();
        assert_eq!(orders, [2, 12, 120]);
    }

    #[test]
    fn hexagon_examples() {
        assert!(free_hexagons(&diagram_graph(DiagramKind::A3)).is_empty());
        let hex = free_hexagons(&diagram_graph(DiagramKind::AffineA5));
        assert_eq!(
            hex,
            [["1", "4", "2", "5", "3", "6"].map(String::from).to_vec()]
        );
        assert_eq!(
            free_hexagons(&diagram_graph(DiagramKind::Petersen)).len(),
            10
        );
    }

    #[test]
    fn chorded_cycles_are_not_free() {
        let mut g = DiagramGraph::new((0..6).map(|i| i.to_string()).collect());
        for k in 0..6 {
            g.add_edge(&k.to_string(), &((k + 1) % 6).to_string())
                .unwrap();
        }
        assert_eq!(free_hexagons(&g).len(), 1);
        g.add_edge("0", "3").unwrap();
        assert!(free_hexagons(&g).is_empty());
    }

    #[test]
    fn deflation_word() {
        let g = diagram_graph(DiagramKind::AffineA5);
        let hex = ["1", "4", "2", "5", "3", "6"].map(String::from);
        let w = deflation_relator(&g, &hex).unwrap();
        assert_eq!(w.to_string(), "1.4.2.5.3.6.3.5.2.4");
        assert_eq!(w.len(), 10);
        let bad = ["1", "2", "4", "5", "3", "6"].map(String::from);
        assert!(matches!(
            deflation_relator(&g, &bad),
            Err(Error::NotAHexagon(_))
        ));
        assert!(deflation_relator(&g, &hex[..5]).is_err());
    }

    #[test]
    fn relator_counts() {
        let c = |k| build_presentation(k).counts();
        assert_eq!(
            c(DiagramKind::A3),
            RelatorCounts {
                involution: 3,
                commuting: 1,
                braid: 2,
                deflation: 0
            }
        );
        assert_eq!(
            c(DiagramKind::AffineA5),
            RelatorCounts {
                involution: 6,
                commuting: 9,
                braid: 6,
                deflation: 1
            }
        );
        assert_eq!(
            c(DiagramKind::Petersen),
            RelatorCounts {
                involution: 10,
                commuting: 30,
                braid: 15,
                deflation: 10
            }
        );
        assert_eq!(
            build_presentation(DiagramKind::Petersen).relators().len(),
            65
        );
    }

    #[test]
    fn relator_text_round_trip() {
        for kind in DiagramKind::ALL {
            let p = build_presentation(kind);
            let text = p.to_relator_text();
            assert_eq!(Presentation::parse_relator_text(&text).unwrap(), p);
        }
    }

    #[test]
    fn relator_text_without_header() {
        let p = Presentation::parse_relator_text("a.a\nb.b\na.b.a.b.a.b\n").unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        assert!(p.diagram().adjacent(0, 1));
        assert_eq!(p.counts().deflation, 0);
    }

    #[test]
    fn relator_text_errors() {
        let err = Presentation::parse_relator_text("# generators: a b\na.c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Presentation::parse_relator_text("a..b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn evaluate_word_basics() {
        let m = crate::isometry::simple_reflections(2).unwrap();
        let assignment: HashMap<String, LatticeIsometry> = [
            ("a".to_string(), m[0].clone()),
            ("b".to_string(), m[1].clone()),
        ]
        .into();
        assert!(evaluate_word(&Word::empty(), &assignment)
            .unwrap()
            .is_identity());
        assert_eq!(
            evaluate_word(&Word::new(["a", "b"]), &assignment).unwrap(),
            m[0].mul(&m[1])
        );
        assert_eq!(
            evaluate_word(&Word::new(["a", "z"]), &assignment).unwrap_err(),
            Error::UnassignedLetter("z".into())
        );
    }

    #[test]
    fn braid_identity_worked_example() {
        let n = 3;
        let alpha = Root::new(LatticeVector::basis(n, 1).unwrap()).unwrap();
        let beta = Root::new(LatticeVector::cone_vector(n, 1, &[1, 2]).unwrap()).unwrap();
        let lambda = LatticeVector::basis(n, 0).unwrap();
        let (lhs, rhs) = braid_identity_sides(&alpha, &beta, &lambda).unwrap();
        let expected = LatticeVector::cone_vector(n, 1, &[1, 2]).unwrap().scale(6);
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);

        let fixed = LatticeVector::basis(n, 3).unwrap();
        let (lhs, rhs) = braid_identity_sides(&alpha, &beta, &fixed).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
    }

    #[test]
    fn braid_identity_preconditions() {
        let n = 3;
        let e1 = Root::new(LatticeVector::basis(n, 1).unwrap()).unwrap();
        let e2 = Root::new(LatticeVector::basis(n, 2).unwrap()).unwrap();
        let lambda = LatticeVector::basis(n, 0).unwrap();
        assert!(braid_identity_check(&e1, &e2, &lambda).is_err());
        let long =
            Root::new(&LatticeVector::basis(n, 1).unwrap() - &LatticeVector::basis(n, 2).unwrap())
                .unwrap();
        assert!(braid_identity_check(&long, &e2, &lambda).is_err());
    }
}
