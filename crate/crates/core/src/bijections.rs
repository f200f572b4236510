//! The seven bijections and their inverses.
//!
//! | map | domain | codomain |
//! |-----|--------|----------|
//! | [`theta`] | Dyck paths of semilength `n` | NCO trees on `n+1` points |
//! | [`phi`] | Catalan-coloured paths | non-crossing trees on `n+1` points |
//! | [`psi`] | Dyck paths of semilength `n` | non-crossing partitions of `n` points |
//! | [`rho`] | paths coloured by ascents `≤ m` | even partitions of `2n` points, blocks `≤ 2m` |
//! | [`sigma`] | paths coloured by pyramids `≤ m` | dissections of the `(n+2)`-gon, cells `≤ m+2` |
//! | [`fib_to_ls`] | paths coloured by pyramid concatenations | little Schröder paths of span `2n` |
//! | [`schroeder_to_t`] | Schröder-coloured paths | T-paths to `(3n, 0)` |
//!
//! Every inverse re-applies the forward map to its answer and rejects the
//! input when the two disagree, so an inverse never returns a preimage
//! that is not one.

use crate::colours::{Colour, ColourSystem, ColouredDyckPath};
use crate::error::{Error, Result};
use crate::paths::{
    DyckPath, DyckStep, LittleSchroederPath, SchroederPath, SchroederStep, TPath, TStep,
};
use crate::structures::{
    validate_even, Dissection, EvenPartition, NcTree, NcoTree, NonCrossingPartition, Violation,
};

fn unreachable(what: &str) -> Violation {
    Violation::Unreachable(what.to_string())
}

fn dyck_colour(colour: &Colour) -> DyckPath {
    colour
        .to_dyck()
        .expect("colour checked against a Dyck system")
}

// ---------------------------------------------------------------- theta

/// Reads the path left to right from point 1: `U` opens an edge at the
/// current point, `D` creates the next point clockwise, closes the most
/// recently opened edge there and moves to it.
pub fn theta(path: &DyckPath) -> NcoTree {
    let mut stack = Vec::new();
    let mut edges = Vec::with_capacity(path.semilength());
    let mut current = 1;
    for &step in path.steps() {
        match step {
            DyckStep::U => stack.push(current),
            DyckStep::D => {
                current += 1;
                let anchor = stack.pop().expect("valid Dyck path");
                edges.push((anchor, current));
            }
        }
    }
    NcoTree::new_unchecked(NcTree::new(current, edges))
}

/// Scans points clockwise from 1, writing `D` for the in-edge of each
/// point after the first and then `U` for each of its out-edges.
pub fn theta_inv(tree: &NcTree) -> Result<DyckPath> {
    tree.validate_nco().map_err(Error::NotAnNCOTree)?;
    let mut steps = Vec::with_capacity(2 * tree.edges().len());
    for v in 1..=tree.vertices() {
        if v > 1 {
            steps.push(DyckStep::D);
        }
        steps.extend(std::iter::repeat_n(DyckStep::U, tree.out_degree(v)));
    }
    let path = DyckPath::new(steps).map_err(|_| Error::NotAnNCOTree(unreachable("word")))?;
    if theta(&path).as_tree() != tree {
        return Err(Error::NotAnNCOTree(unreachable("tree")));
    }
    Ok(path)
}

// ---------------------------------------------------------------- phi

/// `φ(Λ^k⟨C⟩) = θ(C)`; the tree of the `i`-th appended part is hung from
/// base point `i+1` with its other points placed just before it.
pub fn phi(path: &ColouredDyckPath) -> Result<NcTree> {
    path.require_system(&ColourSystem::Catalan)?;
    Ok(phi_rec(path))
}

fn phi_rec(path: &ColouredDyckPath) -> NcTree {
    let Ok((colour, parts)) = path.primary_decompose() else {
        return NcTree::single_vertex();
    };
    let base = theta(&dyck_colour(colour)).into_tree();
    let k = parts.len();
    // parts are listed [P_k, …, P_1]; subs[i-1] is the tree of P_i
    let subs: Vec<NcTree> = parts.iter().rev().map(phi_rec).collect();
    let mut base_label = vec![0; k + 2];
    let mut sub_labels: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut next = 1;
    base_label[1] = next;
    for (i, sub) in subs.iter().enumerate() {
        let mut labels = vec![0; sub.vertices() + 1];
        for label in labels.iter_mut().skip(2) {
            next += 1;
            *label = next;
        }
        next += 1;
        base_label[i + 2] = next;
        labels[1] = next;
        sub_labels.push(labels);
    }
    let mut edges: Vec<(usize, usize)> = base
        .edges()
        .iter()
        .map(|&(a, b)| (base_label[a], base_label[b]))
        .collect();
    for (sub, labels) in subs.iter().zip(&sub_labels) {
        edges.extend(sub.edges().iter().map(|&(a, b)| (labels[a], labels[b])));
    }
    NcTree::new(next, edges)
}

/// Peels the subtree reachable from point 1 along out-edges as the base
/// colour, then recurses on the arcs between consecutive base points.
pub fn phi_inv(tree: &NcTree) -> Result<ColouredDyckPath> {
    tree.validate().map_err(Error::NotAnNCTree)?;
    let path = phi_inv_rec(tree)?;
    if phi_rec(&path) != *tree {
        return Err(Error::NotAnNCTree(unreachable("tree")));
    }
    Ok(path)
}

fn phi_inv_rec(tree: &NcTree) -> Result<ColouredDyckPath> {
    let n = tree.vertices();
    if n <= 1 {
        return Ok(ColouredDyckPath::empty());
    }
    let mut in_base = vec![false; n + 1];
    in_base[1] = true;
    for &(a, b) in tree.edges() {
        // edges are sorted by smaller end, so one pass follows out-edges
        if in_base[a] {
            in_base[b] = true;
        }
    }
    let base_points: Vec<usize> = (1..=n).filter(|&v| in_base[v]).collect();
    let k = base_points.len() - 1;
    let mut rank = vec![0; n + 1];
    for (i, &v) in base_points.iter().enumerate() {
        rank[v] = i + 1;
    }
    // group[v] = i for v in the arc (v_i, v_{i+1}] with i ≥ 1
    let mut group = vec![0; n + 1];
    let mut current = 0;
    for v in 1..=n {
        if in_base[v] {
            current += 1;
            if current > 1 {
                group[v] = current - 1;
            }
        } else {
            group[v] = current;
        }
    }
    if base_points.last() != Some(&n) {
        return Err(Error::NotAnNCTree(unreachable(
            "points after the last base point",
        )));
    }
    let mut base_edges = Vec::with_capacity(k);
    let mut sub_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k + 1];
    for &(a, b) in tree.edges() {
        if in_base[a] {
            base_edges.push((rank[a], rank[b]));
        } else if group[a] != group[b] {
            return Err(Error::NotAnNCTree(unreachable("edge between arcs")));
        } else {
            sub_edges[group[a]].push((a, b));
        }
    }
    let colour = theta_inv(&NcTree::new(k + 1, base_edges))
        .map_err(|_| Error::NotAnNCTree(unreachable("base tree")))?;
    let mut parts = Vec::with_capacity(k);
    for i in 1..=k {
        let (lo, root) = (base_points[i - 1], base_points[i]);
        // the root becomes point 1, the arc (lo, root) becomes 2..
        let relabel = |v: usize| if v == root { 1 } else { v - lo + 1 };
        let edges = sub_edges[i].iter().map(|&(a, b)| (relabel(a), relabel(b)));
        parts.push(phi_inv_rec(&NcTree::new(root - lo, edges))?);
    }
    parts.reverse();
    ColouredDyckPath::from_primary(SchroederPath::from(colour), parts)
}

// ---------------------------------------------------------------- psi

/// Each `U^k D` starts a block of size `k` at the next point; every other
/// `D` adds the next point to the innermost unfinished block.
pub fn psi(path: &DyckPath) -> NonCrossingPartition {
    let mut done = Vec::new();
    let mut open: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut run = 0;
    let mut point = 0;
    for &step in path.steps() {
        match step {
            DyckStep::U => run += 1,
            DyckStep::D => {
                point += 1;
                if run > 0 {
                    open.push((Vec::with_capacity(run), run));
                    run = 0;
                }
                let (block, size) = open.last_mut().expect("valid Dyck path");
                block.push(point);
                if block.len() == *size {
                    done.push(open.pop().expect("nonempty").0);
                }
            }
        }
    }
    NonCrossingPartition::new(done)
}

/// Each point that opens a block of size `k` reads `U^k D`, every other
/// point reads `D`.
pub fn psi_inv(partition: &NonCrossingPartition) -> Result<DyckPath> {
    partition.validate().map_err(Error::InvalidPartition)?;
    let mut opener = vec![0; partition.points() + 1];
    for block in partition.blocks() {
        opener[block[0]] = block.len();
    }
    let mut steps = Vec::with_capacity(2 * partition.points());
    for &size in &opener[1..] {
        steps.extend(std::iter::repeat_n(DyckStep::U, size));
        steps.push(DyckStep::D);
    }
    let path = DyckPath::new(steps).map_err(|_| Error::InvalidPartition(unreachable("word")))?;
    if psi(&path) != *partition {
        return Err(Error::InvalidPartition(unreachable("partition")));
    }
    Ok(path)
}

// ---------------------------------------------------------------- rho

/// Points `a_1, b_1, …, a_n, b_n` are `1, 2, …, 2n`. A coloured pyramid
/// `Λ^k⟨C⟩` doubles `ψ(C)`; the partition of the `i`-th appended part is
/// inserted between `a_i` and `b_i`.
pub fn rho(path: &ColouredDyckPath, m: usize) -> Result<EvenPartition> {
    if m == 0 {
        return Err(Error::InvalidBound(0));
    }
    path.require_system(&ColourSystem::BoundedAscent(m))?;
    let mut blocks = Vec::new();
    rho_rec(path, 0, &mut blocks);
    EvenPartition::new(NonCrossingPartition::new(blocks), m)
}

/// Appends the blocks of `path` on points `offset+1 ..` and returns the
/// number of points used.
fn rho_rec(path: &ColouredDyckPath, offset: usize, blocks: &mut Vec<Vec<usize>>) -> usize {
    let Ok((colour, parts)) = path.primary_decompose() else {
        return 0;
    };
    let k = parts.len();
    let (mut a, mut b) = (vec![0; k + 1], vec![0; k + 1]);
    let mut pos = offset;
    for (i, part) in parts.iter().rev().enumerate() {
        pos += 1;
        a[i + 1] = pos;
        pos += rho_rec(part, pos, blocks);
        pos += 1;
        b[i + 1] = pos;
    }
    for block in psi(&dyck_colour(colour)).blocks() {
        blocks.push(block.iter().flat_map(|&x| [a[x], b[x]]).collect());
    }
    pos - offset
}

/// Walks from `a_1` along its block to `b_1`, steps to `a_2 = b_1 + 1`,
/// and so on; the arcs strictly between `a_i` and `b_i` are the parts.
pub fn rho_inv(partition: &NonCrossingPartition, m: usize) -> Result<ColouredDyckPath> {
    if m == 0 {
        return Err(Error::InvalidBound(0));
    }
    validate_even(partition, m).map_err(Error::InvalidPartition)?;
    let index = partition.block_index();
    let path = rho_inv_rec(partition, &index, 1, partition.points())?;
    let image = rho(&path, m).map_err(|_| Error::InvalidPartition(unreachable("colour")))?;
    if image.partition() != partition {
        return Err(Error::InvalidPartition(unreachable("partition")));
    }
    Ok(path)
}

fn rho_inv_rec(
    partition: &NonCrossingPartition,
    index: &[usize],
    lo: usize,
    hi: usize,
) -> Result<ColouredDyckPath> {
    if lo > hi {
        return Ok(ColouredDyckPath::empty());
    }
    let bad = || Error::InvalidPartition(unreachable("pair walk"));
    let mut pairs = Vec::new();
    let mut a = lo;
    loop {
        let block = &partition.blocks()[index[a]];
        let b = *block.iter().find(|&&q| q > a).ok_or_else(bad)?;
        if b > hi {
            return Err(bad());
        }
        pairs.push((a, b));
        if b == hi {
            break;
        }
        a = b + 1;
    }
    let mut ids: Vec<usize> = pairs.iter().map(|&(a, _)| index[a]).collect();
    ids.sort_unstable();
    ids.dedup();
    let base = NonCrossingPartition::new(ids.iter().map(|&id| {
        (1..=pairs.len())
            .filter(|&i| index[pairs[i - 1].0] == id)
            .collect::<Vec<_>>()
    }));
    let colour = psi_inv(&base).map_err(|_| bad())?;
    let mut parts = pairs
        .iter()
        .map(|&(a, b)| rho_inv_rec(partition, index, a + 1, b - 1))
        .collect::<Result<Vec<_>>>()?;
    parts.reverse();
    ColouredDyckPath::from_primary(SchroederPath::from(colour), parts)
}

// ---------------------------------------------------------------- sigma

fn fibonacci_system(m: Option<usize>) -> Result<ColourSystem> {
    match m {
        Some(0) => Err(Error::InvalidBound(0)),
        Some(m) => Ok(ColourSystem::Fibonacci(m)),
        None => Ok(ColourSystem::FibonacciFree),
    }
}

/// Vertex `α` is index 0 and polygon label `j` is index `j + 1`.
///
/// `Λ^k⟨F⟩` gives the `(k+2)`-gon with a diagonal `(α, j)` for each touch
/// of `F` on the axis at `x = 2j`, `0 < j < k`. The dissection of the
/// `i`-th appended part is glued with its `α` on label `i-1` and its last
/// vertex on label `i`; its other vertices are new points between them.
/// `m = None` allows pyramids of any size.
pub fn sigma(path: &ColouredDyckPath, m: Option<usize>) -> Result<Dissection> {
    path.require_system(&fibonacci_system(m)?)?;
    let mut diagonals = Vec::new();
    let k = sigma_rec(path, &mut |a, b| diagonals.push((a, b)), &|v| v);
    Ok(Dissection::new(k, diagonals))
}

/// Emits the diagonals of `path` through `place` (local index to final
/// index) and returns the polygon's `k`.
fn sigma_rec(
    path: &ColouredDyckPath,
    emit: &mut dyn FnMut(usize, usize),
    place: &dyn Fn(usize) -> usize,
) -> usize {
    let Ok((colour, parts)) = path.primary_decompose() else {
        return 0;
    };
    let k = parts.len();
    let bits = dyck_colour(colour)
        .fibonacci_touch_bits()
        .expect("colour checked against a Fibonacci system");
    // local index of base label j, after the earlier parts' new points
    let mut base_index = vec![1; k + 1];
    for (i, part) in parts.iter().rev().enumerate() {
        base_index[i + 1] = base_index[i] + part.semilength() + 1;
    }
    for (j, &touch) in bits.iter().enumerate() {
        if touch {
            emit(place(0), place(base_index[j + 1]));
        }
    }
    for (i, part) in parts.iter().rev().enumerate() {
        let s = part.semilength();
        if s == 0 {
            continue;
        }
        let (left, right) = (base_index[i], base_index[i + 1]);
        emit(place(left), place(right));
        // sub index 0 is its α, 1..=s its new points, s+1 its last vertex
        let nested = |v: usize| place(left + v);
        sigma_rec(part, emit, &nested);
    }
    base_index[k] - 1
}

/// Takes the cells at `α` as the base pyramid and recurses on the
/// polygons cut off by the chords between consecutive base vertices.
pub fn sigma_inv(dissection: &Dissection, m: Option<usize>) -> Result<ColouredDyckPath> {
    let system = fibonacci_system(m)?;
    dissection
        .validate(m.map(|m| m + 2))
        .map_err(Error::InvalidDissection)?;
    let path = sigma_inv_rec(dissection)?;
    if !path.in_system(&system) {
        return Err(Error::InvalidDissection(unreachable("colour")));
    }
    if sigma(&path, m)? != *dissection {
        return Err(Error::InvalidDissection(unreachable("dissection")));
    }
    Ok(path)
}

fn sigma_inv_rec(dissection: &Dissection) -> Result<ColouredDyckPath> {
    if dissection.k() == 0 {
        return Ok(ColouredDyckPath::empty());
    }
    let bad = || Error::InvalidDissection(unreachable("cells at alpha"));
    let mut base: Vec<usize> = dissection
        .cells()
        .into_iter()
        .filter(|c| c[0] == 0)
        .flatten()
        .filter(|&v| v != 0)
        .collect();
    base.sort_unstable();
    base.dedup();
    let k = base
        .len()
        .checked_sub(1)
        .filter(|&k| k > 0)
        .ok_or_else(bad)?;
    let bits: Vec<bool> = base[1..k]
        .iter()
        .map(|&w| dissection.diagonals().contains(&(0, w)))
        .collect();
    let colour = DyckPath::from_touch_bits(&bits);
    let mut parts = Vec::with_capacity(k);
    for pair in base.windows(2) {
        let (left, right) = (pair[0], pair[1]);
        let inner = dissection
            .diagonals()
            .iter()
            .filter(|&&(a, b)| left <= a && b <= right && (a, b) != (left, right))
            .map(|&(a, b)| (a - left, b - left));
        parts.push(sigma_inv_rec(&Dissection::new(right - left - 1, inner))?);
    }
    parts.reverse();
    ColouredDyckPath::from_primary(SchroederPath::from(colour), parts)
}

// ---------------------------------------------------------------- fib_to_ls

/// `Λ^k⟨x_1…x_{k-1}⟩ * [P_k, …, P_1]` with `β` ones among the bits becomes
/// `U^{β+1} A_{k-1} T(P_k) A_{k-2} T(P_{k-1}) … A_1 T(P_2) D T(P_1)`, where
/// `A_i` is `D` if `x_i = 1` and `L` otherwise.
pub fn fib_to_ls(path: &ColouredDyckPath) -> Result<LittleSchroederPath> {
    path.require_system(&ColourSystem::FibonacciFree)?;
    let mut steps = Vec::with_capacity(2 * path.semilength());
    fib_to_ls_rec(path, &mut steps);
    Ok(LittleSchroederPath::from_steps_unchecked(steps))
}

fn fib_to_ls_rec(path: &ColouredDyckPath, out: &mut Vec<SchroederStep>) {
    let Ok((colour, parts)) = path.primary_decompose() else {
        return;
    };
    let bits = dyck_colour(colour)
        .fibonacci_touch_bits()
        .expect("colour checked against a Fibonacci system");
    let beta = bits.iter().filter(|&&b| b).count();
    out.extend(std::iter::repeat_n(SchroederStep::U, beta + 1));
    let skeleton = bits
        .iter()
        .rev()
        .map(|&b| {
            if b {
                SchroederStep::D
            } else {
                SchroederStep::L
            }
        })
        .chain(std::iter::once(SchroederStep::D));
    for (letter, part) in skeleton.zip(parts.iter()) {
        out.push(letter);
        fib_to_ls_rec(part, out);
    }
}

/// Reads `U^ℓ X_k P_k X_{k-1} P_{k-1} … X_2 P_2 D P_1` with each `X_i` a
/// `D` or `L` at the current base height and each `P_i` a (possibly empty)
/// run of excursions above it.
pub fn ls_to_fib(path: &LittleSchroederPath) -> Result<ColouredDyckPath> {
    let steps = path.steps();
    let mut pos = 0;
    let result = ls_to_fib_rec(steps, &mut pos, steps.len())
        .map_err(|_| Error::NotALittleSchroederPath(path.to_string()))?;
    if fib_to_ls(&result)?.steps() != steps {
        return Err(Error::NotALittleSchroederPath(path.to_string()));
    }
    Ok(result)
}

/// Parses `steps[*pos..end]` as the image of one coloured path.
fn ls_to_fib_rec(steps: &[SchroederStep], pos: &mut usize, end: usize) -> Result<ColouredDyckPath> {
    if *pos == end {
        return Ok(ColouredDyckPath::empty());
    }
    let bad = || Error::Parse("little Schroeder word".to_string());
    let mut height = 0;
    while *pos < end && steps[*pos] == SchroederStep::U {
        height += 1;
        *pos += 1;
    }
    if height == 0 {
        return Err(bad());
    }
    let mut skeleton = Vec::new();
    let mut part_ranges = Vec::new();
    loop {
        match steps.get(*pos).filter(|_| *pos < end) {
            Some(SchroederStep::D) => height -= 1,
            Some(SchroederStep::L) => {}
            _ => return Err(bad()),
        }
        skeleton.push(steps[*pos]);
        *pos += 1;
        let start = *pos;
        if height == 0 {
            *pos = end;
        } else {
            skip_excursions(steps, pos, end);
        }
        part_ranges.push(start..*pos);
        if height == 0 {
            break;
        }
    }
    // skeleton is A_{k-1} … A_1 D; bits x_1 … x_{k-1}
    let bits: Vec<bool> = skeleton[..skeleton.len() - 1]
        .iter()
        .rev()
        .map(|&s| s == SchroederStep::D)
        .collect();
    let colour = DyckPath::from_touch_bits(&bits);
    let parts = part_ranges
        .into_iter()
        .map(|r| {
            let mut p = r.start;
            let part = ls_to_fib_rec(steps, &mut p, r.end)?;
            if p != r.end {
                return Err(bad());
            }
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    ColouredDyckPath::from_primary(SchroederPath::from(colour), parts)
}

/// Advances past consecutive excursions that start with `U` at the
/// current height and return to it.
fn skip_excursions(steps: &[SchroederStep], pos: &mut usize, end: usize) {
    while *pos < end && steps[*pos] == SchroederStep::U {
        let mut depth = 0i64;
        loop {
            match steps[*pos] {
                SchroederStep::U => depth += 1,
                SchroederStep::D => depth -= 1,
                SchroederStep::L => {}
            }
            *pos += 1;
            if depth == 0 || *pos == end {
                break;
            }
        }
    }
}

// ---------------------------------------------------------------- schroeder_to_t

/// Each ascent is replaced by its colour with `U ↦ H`, `L ↦ G`,
/// `D ↦ D`; base descents stay `D`.
pub fn schroeder_to_t(path: &ColouredDyckPath) -> Result<TPath> {
    path.require_system(&ColourSystem::Schroeder)?;
    let mut steps = Vec::with_capacity(3 * path.semilength());
    let mut colours = path.colours().iter();
    let mut previous = DyckStep::D;
    for &step in path.base().steps() {
        match step {
            DyckStep::U if previous == DyckStep::D => {
                let colour = colours.next().expect("one colour per ascent");
                steps.extend(colour.steps().iter().map(|s| match s {
                    SchroederStep::U => TStep::H,
                    SchroederStep::L => TStep::G,
                    SchroederStep::D => TStep::D,
                }));
            }
            DyckStep::U => {}
            DyckStep::D => steps.push(TStep::D),
        }
        previous = step;
    }
    Ok(TPath::from_steps_unchecked(steps))
}

/// Pairs each `H` with its match: the nearest `D` to its right with as
/// many `H` as `D` strictly between them. Returns `(h, d)` index pairs in
/// order of `d`.
pub fn match_h_steps(steps: &[TStep]) -> Result<Vec<(usize, usize)>> {
    let mut pending = Vec::new();
    let mut pairs = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        match s {
            TStep::H => pending.push(i),
            TStep::D => {
                if let Some(h) = pending.pop() {
                    pairs.push((h, i));
                }
            }
            TStep::G => {}
        }
    }
    match pending.first() {
        Some(&position) => Err(Error::UnmatchedH { position }),
        None => Ok(pairs),
    }
}

/// Matched `D` steps belong to colours, unmatched ones are base descents;
/// each maximal run of colour letters is the colour of one ascent.
pub fn t_to_schroeder(path: &TPath) -> Result<ColouredDyckPath> {
    let steps = path.steps();
    let mut matched = vec![false; steps.len()];
    for (_, d) in match_h_steps(steps)? {
        matched[d] = true;
    }
    let mut base = Vec::with_capacity(2 * path.semilength());
    let mut colours = Vec::new();
    let mut run: Vec<SchroederStep> = Vec::new();
    let flush =
        |run: &mut Vec<SchroederStep>, base: &mut Vec<DyckStep>, colours: &mut Vec<Colour>| {
            if run.is_empty() {
                return;
            }
            let colour = SchroederPath::from_steps_unchecked(std::mem::take(run));
            base.extend(std::iter::repeat_n(DyckStep::U, colour.semilength()));
            colours.push(colour);
        };
    for (i, &s) in steps.iter().enumerate() {
        match s {
            TStep::H => run.push(SchroederStep::U),
            TStep::G => run.push(SchroederStep::L),
            TStep::D if matched[i] => run.push(SchroederStep::D),
            TStep::D => {
                flush(&mut run, &mut base, &mut colours);
                base.push(DyckStep::D);
            }
        }
    }
    flush(&mut run, &mut base, &mut colours);
    let bad = || Error::NotATPath(path.to_string());
    let base = DyckPath::new(base).map_err(|_| bad())?;
    let result = ColouredDyckPath::new(base, colours).map_err(|_| bad())?;
    if schroeder_to_t(&result)?.steps() != steps {
        return Err(bad());
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colours::enumerate_coloured;
    use crate::paths::dyck_paths;

    fn cp(text: &str) -> ColouredDyckPath {
        ColouredDyckPath::parse(text).unwrap()
    }

    fn dyck(text: &str) -> DyckPath {
        DyckPath::parse(text).unwrap()
    }

    #[test]
    fn theta_examples() {
        let edges = |w: &str| theta(&dyck(w)).as_tree().edges().to_vec();
        assert_eq!(edges("UD"), vec![(1, 2)]);
        assert_eq!(edges("UUDD"), vec![(1, 2), (1, 3)]);
        assert_eq!(edges("UDUD"), vec![(1, 2), (2, 3)]);
        assert_eq!(
            theta(&DyckPath::empty()).as_tree(),
            &NcTree::single_vertex()
        );
        let tree = NcTree::new(3, [(1, 2), (2, 3)]);
        assert_eq!(theta_inv(&tree).unwrap(), dyck("UDUD"));
        let not_nco = NcTree::new(3, [(1, 3), (2, 3)]);
        assert!(matches!(theta_inv(&not_nco), Err(Error::NotAnNCOTree(_))));
    }

    #[test]
    fn phi_examples() {
        let edges = |t: &str| phi(&cp(t)).unwrap().edges().to_vec();
        assert_eq!(edges("UUDD;UUDD"), vec![(1, 2), (1, 3)]);
        assert_eq!(edges("UUDD;UDUD"), vec![(1, 2), (2, 3)]);
        assert_eq!(edges("UDUD;UD,UD"), vec![(1, 3), (2, 3)]);
        assert!(matches!(
            phi(&cp("UD;L")),
            Err(Error::WrongColourSystem { .. })
        ));
        let crossing = NcTree::new(4, [(1, 3), (2, 4), (1, 2)]);
        assert!(matches!(phi_inv(&crossing), Err(Error::NotAnNCTree(_))));
    }

    #[test]
    fn psi_examples() {
        let blocks = |w: &str| psi(&dyck(w)).blocks().to_vec();
        assert_eq!(blocks("UD"), vec![vec![1]]);
        assert_eq!(blocks("UUDDUD"), vec![vec![1, 2], vec![3]]);
        assert_eq!(blocks("UUDUDD"), vec![vec![1, 3], vec![2]]);
        let crossing = NonCrossingPartition::new([vec![1, 3], vec![2, 4]]);
        assert!(matches!(
            psi_inv(&crossing),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn rho_examples() {
        let blocks = |t: &str, m| rho(&cp(t), m).unwrap().partition().blocks().to_vec();
        assert_eq!(blocks("UD;UD", 1), vec![vec![1, 2]]);
        assert_eq!(blocks("UUDD;UDUD", 1), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(blocks("UUDD;UUDD", 2), vec![vec![1, 2, 3, 4]]);
        // the appended part sits between a_1 and b_1
        assert_eq!(blocks("UDUD;UD,UD", 1), vec![vec![1, 4], vec![2, 3]]);
        assert!(matches!(
            rho(&cp("UUDD;UUDD"), 1),
            Err(Error::WrongColourSystem { .. })
        ));
        assert_eq!(rho(&cp("UD;UD"), 0), Err(Error::InvalidBound(0)));
    }

    #[test]
    fn sigma_examples() {
        let d = sigma(&cp("UD;UD"), Some(1)).unwrap();
        assert_eq!((d.k(), d.diagonals().len()), (1, 0));
        let d = sigma(&cp("UUUDDD;UDUUDD"), Some(2)).unwrap();
        assert_eq!(d.to_json(), r#"{"k":3,"diagonals":[[0,2]]}"#);
        let sizes: Vec<usize> = d.cells().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        let d = sigma(&cp("UUDD;UUDD"), None).unwrap();
        assert_eq!((d.k(), d.diagonals().len()), (2, 0));
        assert!(matches!(
            sigma(&cp("UUDD;UUDD"), Some(1)),
            Err(Error::WrongColourSystem { .. })
        ));
        // an appended part adds the chord between consecutive base labels
        let d = sigma(&cp("UDUD;UD,UD"), Some(1)).unwrap();
        assert_eq!(d.to_json(), r#"{"k":2,"diagonals":[[1,3]]}"#);
    }

    #[test]
    fn fib_to_ls_examples() {
        let image = |t: &str| fib_to_ls(&cp(t)).unwrap().to_string();
        assert_eq!(image("UUDD;UUDD"), "ULD");
        assert_eq!(image("UUDD;UDUD"), "UUDD");
        assert_eq!(image("UUUDDD;UDUUDD"), "UULDD");
        assert_eq!(image("UDUD;UD,UD"), "UDUD");
        let back = ls_to_fib(&LittleSchroederPath::parse("UULDD").unwrap()).unwrap();
        assert_eq!(back, cp("UUUDDD;UDUUDD"));
    }

    #[test]
    fn schroeder_to_t_examples() {
        let image = |t: &str| schroeder_to_t(&cp(t)).unwrap().to_string();
        assert_eq!(image("UD;L"), "GD");
        assert_eq!(image("UD;UD"), "HDD");
        assert_eq!(image("UUDD;LL"), "GGDD");
        assert_eq!(
            t_to_schroeder(&TPath::parse("GGDD").unwrap()).unwrap(),
            cp("UUDD;LL")
        );
        assert_eq!(
            match_h_steps(&[TStep::H, TStep::D, TStep::H]),
            Err(Error::UnmatchedH { position: 2 })
        );
        assert_eq!(
            match_h_steps(TPath::parse("HHDDDD").unwrap().steps()).unwrap(),
            vec![(1, 2), (0, 3)]
        );
    }

    #[test]
    fn small_roundtrips() {
        for n in 0..=5 {
            for p in dyck_paths(n) {
                assert_eq!(theta_inv(theta(&p).as_tree()).unwrap(), p);
                assert_eq!(psi_inv(&psi(&p)).unwrap(), p);
            }
            for p in enumerate_coloured(n, &ColourSystem::Catalan).unwrap() {
                assert_eq!(phi_inv(&phi(&p).unwrap()).unwrap(), p, "{p}");
            }
            for p in enumerate_coloured(n, &ColourSystem::BoundedAscent(2)).unwrap() {
                let image = rho(&p, 2).unwrap();
                assert_eq!(rho_inv(image.partition(), 2).unwrap(), p, "{p}");
            }
            for p in enumerate_coloured(n, &ColourSystem::FibonacciFree).unwrap() {
                assert_eq!(
                    sigma_inv(&sigma(&p, None).unwrap(), None).unwrap(),
                    p,
                    "{p}"
                );
                assert_eq!(ls_to_fib(&fib_to_ls(&p).unwrap()).unwrap(), p, "{p}");
            }
            for p in enumerate_coloured(n, &ColourSystem::Schroeder).unwrap() {
                assert_eq!(
                    t_to_schroeder(&schroeder_to_t(&p).unwrap()).unwrap(),
                    p,
                    "{p}"
                );
            }
        }
    }
}
