//! Todd–Coxeter coset enumeration for presentations on involutive generators.
//!
//! Deduction-driven (Felsch) filling: every new table entry is pushed on a
//! deduction stack, and every cyclic rotation of every relator that passes
//! through that entry is rescanned, deducing single missing entries and
//! detecting coincidences. Coincidences are resolved with a union-find over
//! coset numbers. New cosets are only defined at the first undefined entry of
//! the table, which keeps the table small for relators of moderate length.
//!
//! Generators are involutions, so `c·x = d` always implies `d·x = c` and the
//! inverse of a word is its reverse.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::isometry::{projective_closure, ModularMatrix, DEFAULT_CLOSURE_BUDGET};
use crate::presentation::{Presentation, Word};

pub const DEFAULT_COSET_BUDGET: usize = 200_000;

const UNDEF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationStatus {
    InProgress,
    Closed,
    BudgetExceeded,
}

/// Result of an enumeration. Closed tables are standardized: cosets are
/// renumbered breadth-first from the subgroup coset, in generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    /// Row-major `coset × generator`; `u32::MAX` marks undefined entries.
    table: Vec<u32>,
    n_live: usize,
    defined: usize,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_closed(&self) -> bool {
        self.status == EnumerationStatus::Closed
    }

    /// Live cosets; the subgroup index once closed.
    pub fn n_live(&self) -> usize {
        self.n_live
    }

    /// Closed-table index, `None` otherwise.
    pub fn index(&self) -> Option<usize> {
        self.is_closed().then_some(self.n_live)
    }

    /// Total number of cosets defined during the run, dead ones included.
    pub fn cosets_defined(&self) -> usize {
        self.defined
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// `coset · generator`, for a closed table.
    pub fn image(&self, coset: usize, generator: usize) -> usize {
        self.table[coset * self.generators.len() + generator] as usize
    }

    fn letter_indices(&self, w: &Word) -> Result<Vec<usize>> {
        w.letters()
            .iter()
            .map(|l| {
                self.generators
                    .iter()
                    .position(|g| g == l)
                    .ok_or_else(|| Error::UnknownLetter(l.clone()))
            })
            .collect()
    }

    /// Every generator acts as an involution on the live cosets.
    pub fn is_involutive(&self) -> bool {
        self.is_closed()
            && (0..self.n_live)
                .all(|c| (0..self.generators.len()).all(|g| self.image(self.image(c, g), g) == c))
    }

    pub fn is_transitive(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let mut seen = vec![false; self.n_live];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for g in 0..self.generators.len() {
                let d = self.image(c, g);
                if !seen[d] {
                    seen[d] = true;
                    reached += 1;
                    queue.push_back(d);
                }
            }
        }
        reached == self.n_live
    }

    /// Replays every relator from every coset of a closed table.
    pub fn satisfies(&self, relators: &[Word]) -> Result<bool> {
        if !self.is_closed() {
            return Ok(false);
        }
        for r in relators {
            let letters = self.letter_indices(r)?;
            for c in 0..self.n_live {
                let end = letters.iter().fold(c, |x, &g| self.image(x, g));
                if end != c {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Line-oriented dump: a header, then `coset: images...` per coset, 1-based.
    pub fn dump(&self) -> String {
        let mut out = format!(
            "# status: {:?}\n# cosets: {}\n# generators: {}\n",
            self.status,
            self.n_live,
            self.generators.join(" ")
        );
        if !self.is_closed() {
            return out;
        }
        for c in 0..self.n_live {
            let _ = write!(out, "{}:", c + 1);
            for g in 0..self.generators.len() {
                let _ = write!(out, " {}", self.image(c, g) + 1);
            }
            out.push('\n');
        }
        out
    }
}

struct Enumerator {
    ngens: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    /// `rotations[x]`: distinct cyclic rotations of relators that start with `x`.
    rotations: Vec<Vec<Vec<u16>>>,
    deductions: Vec<(u32, u16)>,
    dead_queue: VecDeque<u32>,
    live: usize,
    budget: usize,
}

impl Enumerator {
    fn new(ngens: usize, relators: &[Vec<u16>], budget: usize) -> Self {
        let mut per_gen: Vec<BTreeSet<Vec<u16>>> = vec![BTreeSet::new(); ngens];
        for r in relators {
            for p in 0..r.len() {
                let rot: Vec<u16> = r[p..].iter().chain(&r[..p]).copied().collect();
                per_gen[rot[0] as usize].insert(rot);
            }
        }
        let mut e = Self {
            ngens,
            table: Vec::new(),
            parent: Vec::new(),
            rotations: per_gen
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
            deductions: Vec::new(),
            dead_queue: VecDeque::new(),
            live: 0,
            budget,
        };
        e.new_coset();
        e
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: u16) -> u32 {
        self.table[c as usize * self.ngens + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u16, d: u32) {
        self.table[c as usize * self.ngens + x as usize] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.rows() as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.ngens));
        self.parent.push(c);
        self.live += 1;
        c
    }

    /// Defines `c·x` as a fresh coset, unless the budget is spent.
    fn define(&mut self, c: u32, x: u16) -> bool {
        if self.rows() >= self.budget {
            return false;
        }
        let d = self.new_coset();
        self.assign(c, x, d);
        true
    }

    fn assign(&mut self, c: u32, x: u16, d: u32) {
        self.set(c, x, d);
        self.set(d, x, c);
        self.deductions.push((c, x));
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.dead_queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.dead_queue.pop_front() {
            for x in 0..self.ngens as u16 {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                self.set(f, x, UNDEF);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let e1x = self.get(e1, x);
                let f1x = self.get(f1, x);
                if e1x != UNDEF {
                    self.merge(f1, e1x);
                } else if f1x != UNDEF {
                    self.merge(e1, f1x);
                } else {
                    self.assign(e1, x, f1);
                }
            }
        }
    }

    /// Scans the cyclic word `w` at coset `c`, deducing a single missing entry
    /// or resolving a coincidence, but never defining new cosets.
    fn scan(&mut self, c: u32, w: &[u16]) {
        let n = w.len();
        let (mut f, mut i) = (c, 0);
        while i < n {
            let next = self.get(f, w[i]);
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let (mut b, mut j) = (c, n);
        while j > i {
            let next = self.get(b, w[j - 1]);
            if next == UNDEF {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            self.assign(f, w[i], b);
        }
    }

    /// Like [`Self::scan`], but defines cosets until the word closes at `c`.
    fn scan_and_define(&mut self, c: u32, w: &[u16]) -> bool {
        let n = w.len();
        loop {
            let (mut f, mut i) = (c, 0);
            while i < n && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == n {
                if f != c {
                    self.coincidence(f, c);
                }
                return true;
            }
            let (mut b, mut j) = (c, n);
            while j > i && self.get(b, w[j - 1]) != UNDEF {
                b = self.get(b, w[j - 1]);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            if j == i + 1 {
                self.assign(f, w[i], b);
                return true;
            }
            if !self.define(f, w[i]) {
                return false;
            }
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == UNDEF {
                continue;
            }
            for start in [c, d] {
                for k in 0..self.rotations[x as usize].len() {
                    if !self.alive(start) {
                        break;
                    }
                    let rot = std::mem::take(&mut self.rotations[x as usize][k]);
                    self.scan(start, &rot);
                    self.rotations[x as usize][k] = rot;
                }
                if start == d {
                    break;
                }
            }
        }
    }

    /// First `(coset, generator)` at or after `from` with an undefined entry.
    fn next_gap(&self, from: usize) -> Option<(u32, u16)> {
        (from..self.rows()).find_map(|c| {
            if !self.alive(c as u32) {
                return None;
            }
            (0..self.ngens as u16)
                .find(|&x| self.get(c as u32, x) == UNDEF)
                .map(|x| (c as u32, x))
        })
    }

    fn run(&mut self, subgroup: &[Vec<u16>]) -> EnumerationStatus {
        for w in subgroup {
            if !self.scan_and_define(0, w) {
                return EnumerationStatus::BudgetExceeded;
            }
            self.process_deductions();
        }
        let mut cursor = 0;
        loop {
            self.process_deductions();
            let gap = self.next_gap(cursor).or_else(|| self.next_gap(0));
            let Some((c, x)) = gap else {
                return EnumerationStatus::Closed;
            };
            cursor = c as usize;
            if !self.define(c, x) {
                return EnumerationStatus::BudgetExceeded;
            }
        }
    }

    /// Breadth-first renumbering of the live cosets, starting from coset 0.
    fn standardize(&self) -> Vec<u32> {
        let mut new_id = vec![UNDEF; self.rows()];
        let mut order = vec![0u32];
        new_id[0] = 0;
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for x in 0..self.ngens as u16 {
                let d = self.get(c, x);
                if new_id[d as usize] == UNDEF {
                    new_id[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            k += 1;
        }
        let mut out = Vec::with_capacity(order.len() * self.ngens);
        for &c in &order {
            for x in 0..self.ngens as u16 {
                out.push(new_id[self.get(c, x) as usize]);
            }
        }
        out
    }
}

fn compile(generators: &[String], w: &Word) -> Result<Vec<u16>> {
    w.letters()
        .iter()
        .map(|l| {
            generators
                .iter()
                .position(|g| g == l)
                .map(|i| i as u16)
                .ok_or_else(|| Error::UnknownLetter(l.clone()))
        })
        .collect()
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words`.
///
/// With no subgroup words the index is the order of the presented group. If
/// more than `budget` cosets would have to be defined the run stops with
/// [`EnumerationStatus::BudgetExceeded`]; no order is reported then.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    budget: usize,
) -> Result<CosetTable> {
    let generators = p.generators().to_vec();
    let relators: Vec<Vec<u16>> = p
        .relators()
        .iter()
        .map(|r| compile(&generators, r))
        .collect::<Result<_>>()?;
    let subgroup: Vec<Vec<u16>> = subgroup_words
        .iter()
        .map(|w| compile(&generators, w))
        .collect::<Result<_>>()?;
    if relators.is_empty() || budget == 0 || generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    let relators: Vec<Vec<u16>> = relators.into_iter().filter(|r| !r.is_empty()).collect();
    let subgroup: Vec<Vec<u16>> = subgroup.into_iter().filter(|w| !w.is_empty()).collect();

    let mut e = Enumerator::new(generators.len(), &relators, budget);
    let status = e.run(&subgroup);
    let defined = e.rows();
    let (table, n_live) = match status {
        EnumerationStatus::Closed => {
            let t = e.standardize();
            let live = t.len() / generators.len();
            debug_assert_eq!(live, e.live);
            (t, live)
        }
        _ => (Vec::new(), e.live),
    };
    Ok(CosetTable {
        generators,
        table,
        n_live,
        defined,
        status,
    })
}

/// Comparison of a closed regular coset table with a matrix realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionCheck {
    pub cosets: usize,
    /// Projective order of the group generated by the assigned matrices.
    pub matrix_order: usize,
    /// `coset ↦ matrix class` is compatible with every generator move.
    pub well_defined: bool,
    /// Distinct cosets map to distinct matrix classes.
    pub injective: bool,
}

impl ActionCheck {
    pub fn passes(&self) -> bool {
        self.well_defined && self.injective && self.cosets == self.matrix_order
    }
}

/// Maps each coset of a closed table with trivial subgroup to the projective
/// class of the matrix product along a path from the base coset, and checks
/// that this map is a well-defined bijection onto the matrix group.
pub fn verify_action_against_matrices(
    t: &CosetTable,
    assignment: &HashMap<String, ModularMatrix>,
) -> Result<ActionCheck> {
    let mats: Vec<ModularMatrix> = t
        .generators()
        .iter()
        .map(|g| {
            assignment
                .get(g)
                .map(ModularMatrix::projective_normal)
                .ok_or_else(|| Error::UnassignedLetter(g.clone()))
        })
        .collect::<Result<_>>()?;
    let group = projective_closure(&mats, DEFAULT_CLOSURE_BUDGET)?;
    if !t.is_closed() {
        return Ok(ActionCheck {
            cosets: t.n_live(),
            matrix_order: group.order(),
            well_defined: false,
            injective: false,
        });
    }
    let mut image: Vec<Option<ModularMatrix>> = vec![None; t.n_live()];
    image[0] = Some(ModularMatrix::identity(mats[0].dim(), mats[0].modulus()).projective_normal());
    let mut queue = VecDeque::from([0usize]);
    let mut well_defined = true;
    while let Some(c) = queue.pop_front() {
        let current = image[c].clone().expect("queued cosets are mapped");
        for (g, m) in mats.iter().enumerate() {
            let d = t.image(c, g);
            let moved = current.mul(m).projective_normal();
            match &image[d] {
                Some(existing) => well_defined &= *existing == moved,
                None => {
                    image[d] = Some(moved);
                    queue.push_back(d);
                }
            }
        }
    }
    let distinct: BTreeSet<&ModularMatrix> = image.iter().flatten().collect();
    Ok(ActionCheck {
        cosets: t.n_live(),
        matrix_order: group.order(),
        well_defined,
        injective: distinct.len() == t.n_live(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{build_presentation, diagram_graph, DiagramKind};

    fn dihedral(m: usize) -> Presentation {
        Presentation::parse_relator_text(&format!(
            "# generators: a b\na.a\nb.b\n{}\n",
            Word::alternating("a", "b", m)
        ))
        .unwrap()
    }

    #[test]
    fn dihedral_orders() {
        for m in 2..8 {
            let t = todd_coxeter(&dihedral(m), &[], 1000).unwrap();
            assert_eq!(t.index(), Some(2 * m), "m={m}");
            assert!(t.is_involutive() && t.is_transitive());
        }
    }

    #[test]
    fn subgroup_index() {
        let t = todd_coxeter(&dihedral(5), &[Word::new(["a"])], 1000).unwrap();
        assert_eq!(t.index(), Some(5));
        let t = todd_coxeter(&dihedral(6), &[Word::new(["a", "b"])], 1000).unwrap();
        assert_eq!(t.index(), Some(2));
    }

    #[test]
    fn collapse_to_trivial_group() {
        let p = Presentation::parse_relator_text("# generators: a b\na.a\nb.b\na.b.a.b.a.b\na\n")
            .unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(t.index(), Some(1));
    }

    #[test]
    fn a3_gives_s4() {
        let p = build_presentation(DiagramKind::A3);
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t.index(), Some(24));
        assert!(t.satisfies(p.relators()).unwrap());
    }

    #[test]
    fn infinite_group_hits_budget() {
        let p = build_presentation(DiagramKind::AffineA5).coxeter_part();
        let t = todd_coxeter(&p, &[], 5000).unwrap();
        assert_eq!(t.status(), EnumerationStatus::BudgetExceeded);
        assert_eq!(t.index(), None);
    }

    #[test]
    fn unknown_letters_are_rejected() {
        let p = build_presentation(DiagramKind::A3);
        let err = todd_coxeter(&p, &[Word::new(["9"])], 100).unwrap_err();
        assert_eq!(err, Error::UnknownLetter("9".into()));
    }

    #[test]
    fn dump_format() {
        let t = todd_coxeter(&dihedral(2), &[], 100).unwrap();
        let dump = t.dump();
        assert!(dump.starts_with("# status: Closed\n# cosets: 4\n# generators: a b\n1: 2 3\n"));
        assert_eq!(dump.lines().count(), 3 + 4);
    }

    #[test]
    fn action_check_on_a3() {
        let p = build_presentation(DiagramKind::A3);
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        let walls = crate::gosset::gosset_walls(2).unwrap();
        let assignment: HashMap<_, _> = walls
            .labels()
            .iter()
            .cloned()
            .zip(walls.mod3_reflections())
            .collect();
        let check = verify_action_against_matrices(&t, &assignment).unwrap();
        assert!(check.passes(), "{check:?}");
        assert_eq!(check.cosets, 24);
        let _ = diagram_graph(DiagramKind::A3);
    }
}
