//! Non-crossing trees, non-crossing partitions and polygon dissections.
//!
//! Points on the circle are never given coordinates; "non-crossing" is the
//! cyclic-order predicate on labels. Every type has a validator that names
//! the first violated invariant together with a witness, and a brute-force
//! enumerator used as an oracle for the bijections.
//!
//! Labels:
//! * trees: vertices `1..=n`, clockwise, `1` at the top;
//! * partitions: points `1..=n`; for even partitions `a_i ↦ 2i-1`,
//!   `b_i ↦ 2i`;
//! * dissections: vertex `α` is `0` and polygon label `j` is `j + 1`, so a
//!   `(k+2)`-gon has vertices `0..=k+1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{self, TPath};

/// First violated invariant of a structure, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EdgeCount {
        expected: usize,
        found: usize,
    },
    EdgeOutOfRange((usize, usize)),
    DuplicateEdge((usize, usize)),
    Crossing((usize, usize), (usize, usize)),
    Cycle((usize, usize)),
    InDegree {
        vertex: usize,
        degree: usize,
    },
    EmptyBlock,
    PointOutOfRange(usize),
    RepeatedPoint(usize),
    MissingPoint(usize),
    BlockCrossing {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    OddBlock(Vec<usize>),
    BlockTooLarge {
        block: Vec<usize>,
        limit: usize,
    },
    SideAsDiagonal((usize, usize)),
    CellTooLarge {
        cell: Vec<usize>,
        limit: usize,
    },
    /// Structure is well formed but not in the image of the decoder.
    Unreachable(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            Violation::EdgeOutOfRange((a, b)) => write!(f, "edge ({a},{b}) is out of range"),
            Violation::DuplicateEdge((a, b)) => write!(f, "edge ({a},{b}) appears twice"),
            Violation::Crossing((a, b), (c, d)) => write!(f, "({a},{b}) crosses ({c},{d})"),
            Violation::Cycle((a, b)) => write!(f, "edge ({a},{b}) closes a cycle"),
            Violation::InDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has in-degree {degree}")
            }
            Violation::EmptyBlock => write!(f, "empty block"),
            Violation::PointOutOfRange(p) => write!(f, "point {p} is out of range"),
            Violation::RepeatedPoint(p) => write!(f, "point {p} occurs in two blocks"),
            Violation::MissingPoint(p) => write!(f, "point {p} is not covered"),
            Violation::BlockCrossing { first, second } => {
                write!(f, "blocks {first:?} and {second:?} cross")
            }
            Violation::OddBlock(b) => write!(f, "block {b:?} has odd size"),
            Violation::BlockTooLarge { block, limit } => {
                write!(f, "block {block:?} exceeds size {limit}")
            }
            Violation::SideAsDiagonal((a, b)) => write!(f, "({a},{b}) is a polygon side"),
            Violation::CellTooLarge { cell, limit } => {
                write!(f, "cell {cell:?} has more than {limit} vertices")
            }
            Violation::Unreachable(why) => write!(f, "{why}"),
        }
    }
}

/// True when chords `(a,b)` and `(c,d)` (each with smaller end first)
/// cross in the interior of the circle.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn canonical_edge(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Labelled tree on circle points `1..=vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcTree {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl NcTree {
    /// Canonicalises the edge list (smaller end first, sorted) without
    /// validating it.
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| canonical_edge(a, b))
            .collect();
        edges.sort_unstable();
        NcTree { vertices, edges }
    }

    pub fn single_vertex() -> Self {
        NcTree {
            vertices: 1,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Labels `b` with `(v, b)` an edge, ascending.
    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.0 == v)
            .map(|e| e.1)
            .collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.vertices;
        let expected = n.saturating_sub(1);
        if self.edges.len() != expected || n == 0 {
            return Err(Violation::EdgeCount {
                expected,
                found: self.edges.len(),
            });
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e.0 < 1 || e.1 > n || e.0 == e.1 {
                return Err(Violation::EdgeOutOfRange(e));
            }
            if i > 0 && self.edges[i - 1] == e {
                return Err(Violation::DuplicateEdge(e));
            }
        }
        for (i, &e) in self.edges.iter().enumerate() {
            for &g in &self.edges[i + 1..] {
                if chords_cross(e, g) {
                    return Err(Violation::Crossing(e, g));
                }
            }
        }
        // n - 1 edges and no cycle means connected.
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Violation::Cycle((a, b)));
            }
            parent[ra] = rb;
        }
        Ok(())
    }

    /// NC-tree invariants plus in-degree one at every non-root vertex.
    pub fn validate_nco(&self) -> Result<(), Violation> {
        self.validate()?;
        for v in 2..=self.vertices {
            let degree = self.in_degree(v);
            if degree != 1 {
                return Err(Violation::InDegree { vertex: v, degree });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TreeJson {
            n: self.vertices,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("tree serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: TreeJson = parse_json(text)?;
        Ok(NcTree::new(
            wire.n,
            wire.edges.into_iter().map(|[a, b]| (a, b)),
        ))
    }
}

impl fmt::Display for NcTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// A non-crossing tree in which every vertex other than `1` has exactly
/// one neighbour with a smaller label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcoTree(NcTree);

impl NcoTree {
    pub fn new(tree: NcTree) -> Result<Self> {
        tree.validate_nco().map_err(Error::NotAnNCOTree)?;
        Ok(NcoTree(tree))
    }

    pub(crate) fn new_unchecked(tree: NcTree) -> Self {
        debug_assert!(tree.validate_nco().is_ok());
        NcoTree(tree)
    }

    pub fn as_tree(&self) -> &NcTree {
        &self.0
    }

    pub fn into_tree(self) -> NcTree {
        self.0
    }
}

/// Set partition of circle points `1..=points`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    points: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartition {
    /// Sorts each block and the block list; the number of points is the
    /// total block size. No validation.
    pub fn new(blocks: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        let points = blocks.iter().map(Vec::len).sum();
        NonCrossingPartition { points, blocks }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `block_of[p]` for `p` in `1..=points`; index 0 is unused.
    pub fn block_index(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.points + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                if p <= self.points {
                    out[p] = i;
                }
            }
        }
        out
    }

    fn validate_cover(&self) -> Result<(), Violation> {
        let mut seen = vec![false; self.points + 1];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Violation::EmptyBlock);
            }
            for &p in b {
                if p == 0 || p > self.points {
                    return Err(Violation::PointOutOfRange(p));
                }
                if seen[p] {
                    return Err(Violation::RepeatedPoint(p));
                }
                seen[p] = true;
            }
        }
        match (1..=self.points).find(|&p| !seen[p]) {
            Some(p) => Err(Violation::MissingPoint(p)),
            None => Ok(()),
        }
    }

    /// A crossing quadruple `a < b < c < d` with `a, c` in one block and
    /// `b, d` in another, if any.
    pub fn crossing_witness(&self) -> Option<(usize, usize)> {
        let idx = self.block_index();
        let n = self.points;
        for a in 1..=n {
            for b in a + 1..=n {
                if idx[a] == idx[b] {
                    continue;
                }
                for c in b + 1..=n {
                    if idx[c] != idx[a] {
                        continue;
                    }
                    for d in c + 1..=n {
                        if idx[d] == idx[b] {
                            return Some((idx[a], idx[b]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<(), Violation> {
        self.validate_cover()?;
        if let Some((x, y)) = self.crossing_witness() {
            return Err(Violation::BlockCrossing {
                first: self.blocks[x].clone(),
                second: self.blocks[y].clone(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PartitionJson {
            blocks: self.blocks.clone(),
        })
        .expect("partition serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PartitionJson = parse_json(text)?;
        Ok(NonCrossingPartition::new(wire.blocks))
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Non-crossing partition of `2n` points into even blocks of size at
/// most `2m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenPartition {
    partition: NonCrossingPartition,
    bound: usize,
}

impl EvenPartition {
    pub fn new(partition: NonCrossingPartition, bound: usize) -> Result<Self> {
        validate_even(&partition, bound).map_err(Error::InvalidPartition)?;
        Ok(EvenPartition { partition, bound })
    }

    pub fn partition(&self) -> &NonCrossingPartition {
        &self.partition
    }

    pub fn into_partition(self) -> NonCrossingPartition {
        self.partition
    }

    /// The `m` of "blocks of size at most `2m`".
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Number of `(a_i, b_i)` pairs.
    pub fn pairs(&self) -> usize {
        self.partition.points / 2
    }
}

/// Checks the even-partition invariants with block sizes at most `2m`.
pub fn validate_even(partition: &NonCrossingPartition, m: usize) -> Result<(), Violation> {
    partition.validate()?;
    for b in &partition.blocks {
        if b.len() % 2 == 1 {
            return Err(Violation::OddBlock(b.clone()));
        }
        if b.len() > 2 * m {
            return Err(Violation::BlockTooLarge {
                block: b.clone(),
                limit: 2 * m,
            });
        }
    }
    Ok(())
}

/// Diagonal dissection of the convex `(k+2)`-gon `α, 0, 1, …, k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    k: usize,
    diagonals: Vec<(usize, usize)>,
}

impl Dissection {
    /// Canonicalises without validating. Vertex indices use `α = 0` and
    /// label `j ↦ j + 1`.
    pub fn new(k: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut diagonals: Vec<_> = diagonals
            .into_iter()
            .map(|(a, b)| canonical_edge(a, b))
            .collect();
        diagonals.sort_unstable();
        Dissection { k, diagonals }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.k + 2
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    fn is_side(&self, (a, b): (usize, usize)) -> bool {
        let last = self.k + 1;
        b == a + 1 || (a == 0 && b == last)
    }

    fn validate_diagonals(&self) -> Result<(), Violation> {
        let last = self.k + 1;
        for (i, &d) in self.diagonals.iter().enumerate() {
            if d.1 > last || d.0 == d.1 {
                return Err(Violation::EdgeOutOfRange(d));
            }
            if self.is_side(d) {
                return Err(Violation::SideAsDiagonal(d));
            }
            if i > 0 && self.diagonals[i - 1] == d {
                return Err(Violation::DuplicateEdge(d));
            }
        }
        for (i, &d) in self.diagonals.iter().enumerate() {
            for &e in &self.diagonals[i + 1..] {
                if chords_cross(d, e) {
                    return Err(Violation::Crossing(d, e));
                }
            }
        }
        Ok(())
    }

    /// Checks the diagonals and, when `max_cell` is given, that every cell
    /// has at most that many vertices.
    pub fn validate(&self, max_cell: Option<usize>) -> Result<(), Violation> {
        self.validate_diagonals()?;
        if let Some(limit) = max_cell {
            if let Some(cell) = self.cells().into_iter().find(|c| c.len() > limit) {
                return Err(Violation::CellTooLarge { cell, limit });
            }
        }
        Ok(())
    }

    /// Cells as ascending vertex lists, found by walking the faces of the
    /// plane graph formed by sides and diagonals. Assumes valid diagonals.
    ///
    /// At vertex `v` reached from `u`, the face continues to the neighbour
    /// of `v` just before `u` in clockwise order around `v`.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let count = self.vertex_count();
        if self.k == 0 {
            return Vec::new();
        }
        let offset = |v: usize, w: usize| (w + count - v) % count;
        let mut neighbours: Vec<Vec<usize>> = (0..count)
            .map(|v| vec![(v + 1) % count, (v + count - 1) % count])
            .collect();
        for &(a, b) in &self.diagonals {
            neighbours[a].push(b);
            neighbours[b].push(a);
        }
        for (v, list) in neighbours.iter_mut().enumerate() {
            list.sort_unstable_by_key(|&w| offset(v, w));
            list.dedup();
        }
        let mut used = std::collections::HashSet::new();
        let mut cells = Vec::new();
        let mut directed: Vec<(usize, usize)> = (0..count).map(|v| (v, (v + 1) % count)).collect();
        for &(a, b) in &self.diagonals {
            directed.push((a, b));
            directed.push((b, a));
        }
        for start in directed {
            if used.contains(&start) {
                continue;
            }
            let mut cell = Vec::new();
            let (mut u, mut v) = start;
            loop {
                used.insert((u, v));
                cell.push(u);
                let list = &neighbours[v];
                let pos = list.iter().position(|&w| w == u).expect("u adjacent to v");
                let w = list[(pos + list.len() - 1) % list.len()];
                u = v;
                v = w;
                if (u, v) == start {
                    break;
                }
            }
            cell.sort_unstable();
            cells.push(cell);
        }
        cells.sort();
        cells
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DissectionJson {
            k: self.k,
            diagonals: self.diagonals.iter().map(|&(a, b)| [a, b]).collect(),
        })
        .expect("dissection serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: DissectionJson = parse_json(text)?;
        Ok(Dissection::new(
            wire.k,
            wire.diagonals.into_iter().map(|[a, b]| (a, b)),
        ))
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionJson {
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DissectionJson {
    k: usize,
    diagonals: Vec<[usize; 2]>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Size guardrails for the brute-force oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_tree_vertices: usize,
    pub max_partition_points: usize,
    pub max_polygon_vertices: usize,
    pub max_t_semilength: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_tree_vertices: 7,
            max_partition_points: 12,
            max_polygon_vertices: 9,
            max_t_semilength: 6,
        }
    }
}

impl OracleLimits {
    pub fn unlimited() -> Self {
        OracleLimits {
            max_tree_vertices: usize::MAX,
            max_partition_points: usize::MAX,
            max_polygon_vertices: usize::MAX,
            max_t_semilength: usize::MAX,
        }
    }

    fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::SizeTooLarge { what, size, limit })
        } else {
            Ok(())
        }
    }

    pub fn check_tree(&self, vertices: usize) -> Result<()> {
        Self::guard("tree", vertices, self.max_tree_vertices)
    }

    pub fn check_partition(&self, points: usize) -> Result<()> {
        Self::guard("partition", points, self.max_partition_points)
    }

    pub fn check_polygon(&self, vertices: usize) -> Result<()> {
        Self::guard("polygon", vertices, self.max_polygon_vertices)
    }

    pub fn check_t_path(&self, n: usize) -> Result<()> {
        Self::guard("T-path", n, self.max_t_semilength)
    }
}

/// Every NC tree on `vertices` points, by filtering edge subsets.
pub fn nc_trees(vertices: usize, limits: &OracleLimits) -> Result<Vec<NcTree>> {
    limits.check_tree(vertices)?;
    if vertices == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (1..=vertices)
        .flat_map(|a| (a + 1..=vertices).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn pick(
        pairs: &[(usize, usize)],
        from: usize,
        need: usize,
        chosen: &mut Vec<(usize, usize)>,
        vertices: usize,
        out: &mut Vec<NcTree>,
    ) {
        if need == 0 {
            let t = NcTree::new(vertices, chosen.iter().copied());
            if t.validate().is_ok() {
                out.push(t);
            }
            return;
        }
        for i in from..pairs.len() {
            if pairs.len() - i < need {
                break;
            }
            if chosen.iter().any(|&e| chords_cross(e, pairs[i])) {
                continue;
            }
            chosen.push(pairs[i]);
            pick(pairs, i + 1, need - 1, chosen, vertices, out);
            chosen.pop();
        }
    }
    pick(&pairs, 0, vertices - 1, &mut chosen, vertices, &mut out);
    out.sort();
    Ok(out)
}

pub fn nco_trees(vertices: usize, limits: &OracleLimits) -> Result<Vec<NcoTree>> {
    Ok(nc_trees(vertices, limits)?
        .into_iter()
        .filter(|t| t.validate_nco().is_ok())
        .map(NcoTree)
        .collect())
}

/// Every non-crossing partition of `1..=points`, grown point by point and
/// pruned as soon as the newest point creates a crossing.
pub fn nc_partitions(points: usize, limits: &OracleLimits) -> Result<Vec<NonCrossingPartition>> {
    nc_partitions_bounded(points, usize::MAX, limits)
}

/// As [`nc_partitions`], keeping only blocks of at most `max_block` points.
fn nc_partitions_bounded(
    points: usize,
    max_block: usize,
    limits: &OracleLimits,
) -> Result<Vec<NonCrossingPartition>> {
    limits.check_partition(points)?;
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn grow(
        p: usize,
        points: usize,
        max_block: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<NonCrossingPartition>,
    ) {
        if p > points {
            out.push(NonCrossingPartition::new(blocks.clone()));
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].len() >= max_block {
                continue;
            }
            // the prefix is non-crossing, so joining p to block i crosses iff
            // another block has points on both sides of last(i) below p
            let last = *blocks[i].last().expect("nonempty");
            let crosses = blocks.iter().enumerate().any(|(j, other)| {
                j != i && other.iter().any(|&q| q > last) && other.iter().any(|&q| q < last)
            });
            if crosses {
                continue;
            }
            blocks[i].push(p);
            grow(p + 1, points, max_block, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![p]);
        grow(p + 1, points, max_block, blocks, out);
        blocks.pop();
    }
    grow(1, points, max_block, &mut blocks, &mut out);
    out.sort();
    Ok(out)
}

/// Non-crossing partitions of `2 * pairs` points into even blocks of size
/// at most `2m`.
pub fn even_partitions(
    pairs: usize,
    m: usize,
    limits: &OracleLimits,
) -> Result<Vec<EvenPartition>> {
    if m == 0 {
        return Err(Error::InvalidBound(0));
    }
    Ok(nc_partitions_bounded(2 * pairs, 2 * m, limits)?
        .into_iter()
        .filter(|p| p.blocks.iter().all(|b| b.len() % 2 == 0))
        .filter(|p| validate_even(p, m).is_ok())
        .map(|partition| EvenPartition {
            partition,
            bound: m,
        })
        .collect())
}

/// Every dissection of the `(k+2)`-gon whose cells have at most
/// `max_cell` vertices (all dissections when `None`).
pub fn dissections(
    k: usize,
    max_cell: Option<usize>,
    limits: &OracleLimits,
) -> Result<Vec<Dissection>> {
    limits.check_polygon(k + 2)?;
    let count = k + 2;
    let probe = Dissection::new(k, []);
    let candidates: Vec<(usize, usize)> = (0..count)
        .flat_map(|a| (a + 1..count).map(move |b| (a, b)))
        .filter(|&d| !probe.is_side(d))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn choose(
        candidates: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        k: usize,
        max_cell: Option<usize>,
        out: &mut Vec<Dissection>,
    ) {
        let d = Dissection::new(k, chosen.iter().copied());
        if d.validate(max_cell).is_ok() {
            out.push(d);
        }
        for i in from..candidates.len() {
            if chosen.iter().any(|&e| chords_cross(e, candidates[i])) {
                continue;
            }
            chosen.push(candidates[i]);
            choose(candidates, i + 1, chosen, k, max_cell, out);
            chosen.pop();
        }
    }
    choose(&candidates, 0, &mut chosen, k, max_cell, &mut out);
    out.sort();
    Ok(out)
}

/// T-paths to `(3n, 0)`, guarded like the other oracles.
pub fn t_path_oracle(n: usize, limits: &OracleLimits) -> Result<Vec<TPath>> {
    limits.check_t_path(n)?;
    Ok(paths::t_paths(n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn pruned_partitions_equal_filtered_ones() {
        let limits = OracleLimits::default();
        let all = nc_partitions(9, &limits).unwrap();
        for max_block in 1..=9 {
            let filtered: Vec<_> = all
                .iter()
                .filter(|p| p.blocks().iter().all(|b| b.len() <= max_block))
                .cloned()
                .collect();
            assert_eq!(
                nc_partitions_bounded(9, max_block, &limits).unwrap(),
                filtered
            );
        }
    }

    #[test]
    fn validator_examples() {
        assert_eq!(NcTree::new(3, [(1, 2), (1, 3)]).validate(), Ok(()));
        assert_eq!(
            NcTree::new(4, [(1, 3), (2, 4), (1, 2)]).validate(),
            Err(Violation::Crossing((1, 3), (2, 4)))
        );
        let p = NonCrossingPartition::new(vec![vec![1, 3], vec![2, 4]]);
        assert!(matches!(p.validate(), Err(Violation::BlockCrossing { .. })));
        assert!(matches!(
            NcTree::new(3, [(1, 2)]).validate(),
            Err(Violation::EdgeCount { .. })
        ));
        assert!(matches!(
            NcTree::new(4, [(1, 2), (2, 3), (1, 3)]).validate(),
            Err(Violation::Cycle(_))
        ));
        assert_eq!(
            NcTree::new(3, [(1, 3), (2, 3)]).validate_nco(),
            Err(Violation::InDegree {
                vertex: 2,
                degree: 0
            })
        );
        assert_eq!(
            NonCrossingPartition::new(vec![vec![1, 2], vec![2]]).validate(),
            Err(Violation::RepeatedPoint(2))
        );
        assert_eq!(
            validate_even(&NonCrossingPartition::new(vec![vec![1, 2, 3], vec![4]]), 3),
            Err(Violation::OddBlock(vec![1, 2, 3]))
        );
        assert!(matches!(
            validate_even(&NonCrossingPartition::new(vec![vec![1, 2, 3, 4]]), 1),
            Err(Violation::BlockTooLarge { .. })
        ));
        assert_eq!(
            Dissection::new(3, [(0, 4)]).validate(None),
            Err(Violation::SideAsDiagonal((0, 4)))
        );
        assert_eq!(
            Dissection::new(3, [(0, 2), (1, 3)]).validate(None),
            Err(Violation::Crossing((0, 2), (1, 3)))
        );
        assert!(matches!(
            Dissection::new(3, []).validate(Some(4)),
            Err(Violation::CellTooLarge { .. })
        ));
    }

    #[test]
    fn oracle_count_examples() {
        let lim = OracleLimits::default();
        assert_eq!(nc_trees(3, &lim).unwrap().len(), 3);
        assert_eq!(nco_trees(3, &lim).unwrap().len(), 2);
        assert_eq!(even_partitions(2, 1, &lim).unwrap().len(), 2);
        assert_eq!(dissections(3, Some(3), &lim).unwrap().len(), 5);
        assert!(matches!(
            dissections(8, None, &lim),
            Err(Error::SizeTooLarge { .. })
        ));
        assert!(matches!(nc_trees(8, &lim), Err(Error::SizeTooLarge { .. })));
        assert!(dissections(8, None, &OracleLimits::unlimited()).is_ok());
    }

    #[test]
    fn tree_counts() {
        let lim = OracleLimits::default();
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 0..=5u64 {
            let expected = binom(3 * n, n) / (2 * n + 1);
            assert_eq!(
                nc_trees(n as usize + 1, &lim).unwrap().len() as u64,
                expected
            );
        }
        for (n, &c) in catalan.iter().enumerate().take(7) {
            assert_eq!(nco_trees(n + 1, &lim).unwrap().len(), c);
        }
    }

    /// Second crossing predicate: two blocks have disjoint hulls iff,
    /// reading the circle, the points of one form a single cyclic run
    /// relative to the other.
    fn hulls_disjoint(p: &NonCrossingPartition) -> bool {
        let idx = p.block_index();
        for x in 0..p.blocks().len() {
            for y in x + 1..p.blocks().len() {
                let labels: Vec<usize> = (1..=p.points())
                    .map(|q| idx[q])
                    .filter(|&b| b == x || b == y)
                    .collect();
                let changes = (0..labels.len())
                    .filter(|&i| labels[i] != labels[(i + 1) % labels.len()])
                    .count();
                if changes > 2 {
                    return false;
                }
            }
        }
        true
    }

    fn all_set_partitions(n: usize) -> Vec<NonCrossingPartition> {
        // restricted growth strings
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<NonCrossingPartition>) {
            let n = rgs.len();
            if i == n {
                let blocks = (0..=max.min(n))
                    .map(|b| (1..=n).filter(|&p| rgs[p - 1] == b).collect::<Vec<_>>())
                    .filter(|b| !b.is_empty())
                    .collect::<Vec<_>>();
                out.push(NonCrossingPartition::new(blocks));
                return;
            }
            for v in 0..=max + 1 {
                rgs[i] = v;
                rec(i + 1, max.max(v), rgs, out);
            }
        }
        if n == 0 {
            return vec![NonCrossingPartition::new(vec![])];
        }
        rec(1, 0, &mut rgs, &mut out);
        out
    }

    #[test]
    fn crossing_predicates_agree() {
        let lim = OracleLimits::default();
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &expected) in catalan.iter().enumerate() {
            let all = all_set_partitions(n);
            let mut nc = 0;
            for p in &all {
                let pattern = p.crossing_witness().is_none();
                assert_eq!(pattern, hulls_disjoint(p), "{p}");
                if pattern {
                    nc += 1;
                }
            }
            assert_eq!(nc, expected);
            assert_eq!(nc_partitions(n, &lim).unwrap().len(), expected);
        }
    }

    #[test]
    fn dissection_cells_cover_the_polygon() {
        let lim = OracleLimits::default();
        // little Schroeder numbers count all dissections of the (k+2)-gon
        let little = [1usize, 1, 3, 11, 45, 197, 903];
        for (k, &expected) in little.iter().enumerate() {
            let all = dissections(k, None, &lim).unwrap();
            assert_eq!(all.len(), expected);
            for d in &all {
                let cells = d.cells();
                assert_eq!(cells.len(), d.diagonals().len() + usize::from(k > 0));
                assert_eq!(cells.iter().map(|c| c.len() - 2).sum::<usize>(), k, "{d}");
                assert!(cells.iter().all(|c| c.len() >= 3));
            }
        }
        let d = Dissection::new(3, [(0, 2)]);
        assert_eq!(d.cells(), vec![vec![0, 1, 2], vec![0, 2, 3, 4]]);
    }

    #[test]
    fn json_forms() {
        let t = NcTree::new(3, [(1, 3), (2, 1)]);
        assert_eq!(t.to_json(), r#"{"n":3,"edges":[[1,2],[1,3]]}"#);
        assert_eq!(NcTree::from_json(&t.to_json()).unwrap(), t);
        let p = NonCrossingPartition::new(vec![vec![3, 1], vec![2]]);
        assert_eq!(p.to_json(), r#"{"blocks":[[1,3],[2]]}"#);
        assert_eq!(NonCrossingPartition::from_json(&p.to_json()).unwrap(), p);
        let d = Dissection::new(3, [(2, 0)]);
        assert_eq!(d.to_json(), r#"{"k":3,"diagonals":[[0,2]]}"#);
        assert_eq!(Dissection::from_json(&d.to_json()).unwrap(), d);
        assert!(matches!(NcTree::from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            NcTree::from_json(r#"{"n":2,"edges":[],"x":1}"#),
            Err(Error::Parse(_))
        ));
    }
}
