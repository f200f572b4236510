//! Lattice paths: Dyck, Schröder, little Schröder and T-paths.
//!
//! Paths are stored as step sequences only. Heights are recomputed when
//! needed, so a value can never disagree with its own profile.
//!
//! Exhaustive enumeration is driven by one small automaton per family
//! (see [`Family`]); the same automaton is also run as a counting
//! dynamic programme in [`count_family`].

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DyckStep {
    U,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchroederStep {
    U,
    D,
    /// Flat step `(2, 0)`.
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TStep {
    /// `(1, 2)`
    H,
    /// `(2, 1)`
    G,
    /// `(1, -1)`
    D,
}

impl DyckStep {
    pub fn letter(self) -> char {
        match self {
            DyckStep::U => 'U',
            DyckStep::D => 'D',
        }
    }
}

impl SchroederStep {
    pub fn letter(self) -> char {
        match self {
            SchroederStep::U => 'U',
            SchroederStep::D => 'D',
            SchroederStep::L => 'L',
        }
    }
}

impl TStep {
    pub fn letter(self) -> char {
        match self {
            TStep::H => 'H',
            TStep::G => 'G',
            TStep::D => 'D',
        }
    }
}

impl From<DyckStep> for SchroederStep {
    fn from(step: DyckStep) -> Self {
        match step {
            DyckStep::U => SchroederStep::U,
            DyckStep::D => SchroederStep::D,
        }
    }
}

/// A letter of any of the supported alphabets; used by the shared
/// validation and enumeration machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Letter {
    U,
    D,
    L,
    H,
    G,
}

impl Letter {
    fn dx(self) -> usize {
        match self {
            Letter::L | Letter::G => 2,
            _ => 1,
        }
    }

    fn dy(self) -> i64 {
        match self {
            Letter::U | Letter::G => 1,
            Letter::H => 2,
            Letter::D => -1,
            Letter::L => 0,
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'U' => Letter::U,
            'D' => Letter::D,
            'L' => Letter::L,
            'H' => Letter::H,
            'G' => Letter::G,
            _ => return None,
        })
    }

    fn dyck(self) -> DyckStep {
        match self {
            Letter::U => DyckStep::U,
            Letter::D => DyckStep::D,
            other => unreachable!("{other:?} in a Dyck word"),
        }
    }

    fn schroeder(self) -> SchroederStep {
        match self {
            Letter::U => SchroederStep::U,
            Letter::D => SchroederStep::D,
            Letter::L => SchroederStep::L,
            other => unreachable!("{other:?} in a Schroeder word"),
        }
    }

    fn t(self) -> TStep {
        match self {
            Letter::H => TStep::H,
            Letter::G => TStep::G,
            Letter::D => TStep::D,
            other => unreachable!("{other:?} in a T word"),
        }
    }
}

const DYCK_ALPHABET: &[Letter] = &[Letter::U, Letter::D];
const SCHROEDER_ALPHABET: &[Letter] = &[Letter::U, Letter::D, Letter::L];
const T_ALPHABET: &[Letter] = &[Letter::H, Letter::G, Letter::D];

fn read_letters(word: &str, alphabet: &[Letter]) -> Result<Vec<Letter>> {
    word.chars()
        .enumerate()
        .map(|(position, c)| match Letter::from_char(c) {
            Some(l) if alphabet.contains(&l) => Ok(l),
            _ => Err(Error::UnknownLetter {
                letter: c,
                position,
            }),
        })
        .collect()
}

/// Checks the height constraint and returns the total x-span.
/// `flat_on_axis` controls whether an `L` may start at height 0.
fn check_heights(word: &str, letters: &[Letter], flat_on_axis: bool) -> Result<usize> {
    let unbalanced = |reason: String| Error::UnbalancedWord {
        word: word.to_string(),
        reason,
    };
    let mut height = 0i64;
    let mut span = 0usize;
    for (i, &l) in letters.iter().enumerate() {
        if l == Letter::L && height == 0 && !flat_on_axis {
            return Err(unbalanced(format!("L step on the axis at position {i}")));
        }
        height += l.dy();
        span += l.dx();
        if height < 0 {
            return Err(unbalanced(format!("falls below the axis at position {i}")));
        }
    }
    if height != 0 {
        return Err(unbalanced(format!("ends at height {height}")));
    }
    Ok(span)
}

/// A maximal run of consecutive up steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ascent {
    /// 0-based index of the first `U`.
    pub start: usize,
    pub length: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<DyckStep>,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// The pyramid `U^k D^k`.
    pub fn pyramid(k: usize) -> Self {
        let mut steps = vec![DyckStep::U; k];
        steps.extend(std::iter::repeat_n(DyckStep::D, k));
        DyckPath { steps }
    }

    pub fn new(steps: Vec<DyckStep>) -> Result<Self> {
        let word: String = steps.iter().map(|s| s.letter()).collect();
        let letters: Vec<Letter> = steps
            .iter()
            .map(|s| match s {
                DyckStep::U => Letter::U,
                DyckStep::D => Letter::D,
            })
            .collect();
        check_heights(&word, &letters, true)?;
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<DyckStep>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    pub fn parse(word: &str) -> Result<Self> {
        let letters = read_letters(word, DYCK_ALPHABET)?;
        check_heights(word, &letters, true)?;
        Ok(DyckPath {
            steps: letters.into_iter().map(Letter::dyck).collect(),
        })
    }

    pub fn steps(&self) -> &[DyckStep] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights at x = 0, 1, …, 2n.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                DyckStep::U => h += 1,
                DyckStep::D => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn ascents(&self) -> Vec<Ascent> {
        ascent_runs(&self.steps)
    }

    pub fn ascent_lengths(&self) -> Vec<usize> {
        self.ascents().iter().map(|a| a.length).collect()
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    /// Splits `P = U^k D P_k D P_{k-1} … D P_1`; parts are returned in
    /// the order `[P_k, …, P_1]`.
    pub fn primary_decompose(&self) -> Result<(usize, Vec<DyckPath>)> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let (k, ranges) = primary_ranges(&self.steps);
        let parts = ranges
            .into_iter()
            .map(|r| DyckPath {
                steps: self.steps[r].to_vec(),
            })
            .collect();
        Ok((k, parts))
    }

    /// Inverse of [`DyckPath::primary_decompose`]. `parts` is `[P_k, …, P_1]`.
    pub fn from_primary(parts: &[DyckPath]) -> DyckPath {
        let k = parts.len();
        let mut steps = vec![DyckStep::U; k];
        for part in parts {
            steps.push(DyckStep::D);
            steps.extend_from_slice(&part.steps);
        }
        DyckPath { steps }
    }

    pub fn complete_decompose(&self) -> PyramidTree {
        match self.primary_decompose() {
            Err(_) => PyramidTree::Empty,
            Ok((size, parts)) => PyramidTree::Pyramid {
                size,
                children: parts.iter().map(DyckPath::complete_decompose).collect(),
            },
        }
    }

    /// Sizes of the pyramids when the path is a concatenation of
    /// pyramids, `None` otherwise.
    pub fn pyramid_sizes(&self) -> Option<Vec<usize>> {
        let mut sizes = Vec::new();
        let mut i = 0;
        while i < self.steps.len() {
            let up = self.steps[i..]
                .iter()
                .take_while(|&&s| s == DyckStep::U)
                .count();
            let down = self.steps[i + up..]
                .iter()
                .take_while(|&&s| s == DyckStep::D)
                .count();
            if up != down {
                return None;
            }
            sizes.push(up);
            i += 2 * up;
        }
        Some(sizes)
    }

    /// Bits `x_1 … x_{k-1}` with `x_i = 1` iff the path touches the axis
    /// at x-coordinate `2i`. Only defined for pyramid concatenations.
    pub fn fibonacci_touch_bits(&self) -> Result<Vec<bool>> {
        if self.pyramid_sizes().is_none() {
            return Err(Error::NotAFibonacciPath(self.to_string()));
        }
        let k = self.semilength();
        if k == 0 {
            return Ok(Vec::new());
        }
        let heights = self.heights();
        Ok((1..k).map(|i| heights[2 * i] == 0).collect())
    }

    /// Inverse of [`DyckPath::fibonacci_touch_bits`]: the pyramid
    /// concatenation of semilength `bits.len() + 1`.
    pub fn from_touch_bits(bits: &[bool]) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * bits.len() + 2);
        let mut run = 1;
        for &b in bits.iter().chain(std::iter::once(&true)) {
            if b {
                steps.extend(std::iter::repeat_n(DyckStep::U, run));
                steps.extend(std::iter::repeat_n(DyckStep::D, run));
                run = 1;
            } else {
                run += 1;
            }
        }
        DyckPath { steps }
    }
}

pub(crate) fn ascent_runs(steps: &[DyckStep]) -> Vec<Ascent> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        if steps[i] == DyckStep::U {
            let start = i;
            while i < steps.len() && steps[i] == DyckStep::U {
                i += 1;
            }
            out.push(Ascent {
                start,
                length: i - start,
            });
        } else {
            i += 1;
        }
    }
    out
}

/// Step ranges of `[P_k, …, P_1]` in a nonempty Dyck word.
pub(crate) fn primary_ranges(steps: &[DyckStep]) -> (usize, Vec<Range<usize>>) {
    let k = steps.iter().take_while(|&&s| s == DyckStep::U).count();
    let mut pos = k;
    let mut parts = Vec::with_capacity(k);
    for _ in 0..k {
        debug_assert_eq!(steps[pos], DyckStep::D);
        pos += 1;
        let start = pos;
        while pos < steps.len() && steps[pos] == DyckStep::U {
            let mut depth = 0i64;
            loop {
                depth += if steps[pos] == DyckStep::U { 1 } else { -1 };
                pos += 1;
                if depth == 0 {
                    break;
                }
            }
        }
        parts.push(start..pos);
    }
    (k, parts)
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

/// The complete decomposition of a Dyck path into pyramids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PyramidTree {
    Empty,
    /// A pyramid of `size` with exactly `size` appended subtrees, listed
    /// in the order `[P_k, …, P_1]`.
    Pyramid {
        size: usize,
        children: Vec<PyramidTree>,
    },
}

impl PyramidTree {
    pub fn recompose(&self) -> DyckPath {
        match self {
            PyramidTree::Empty => DyckPath::empty(),
            PyramidTree::Pyramid { children, .. } => {
                let parts: Vec<DyckPath> = children.iter().map(PyramidTree::recompose).collect();
                DyckPath::from_primary(&parts)
            }
        }
    }

    /// Multiset of node sizes, in pre-order.
    pub fn node_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_sizes(&mut out);
        out
    }

    fn collect_sizes(&self, out: &mut Vec<usize>) {
        if let PyramidTree::Pyramid { size, children } = self {
            out.push(*size);
            for c in children {
                c.collect_sizes(out);
            }
        }
    }
}

impl fmt::Display for PyramidTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PyramidTree::Empty => write!(f, "ε"),
            PyramidTree::Pyramid { size, children } => {
                write!(f, "Λ{size}")?;
                if children.iter().all(|c| *c == PyramidTree::Empty) {
                    return Ok(());
                }
                write!(f, "*[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroederPath {
    steps: Vec<SchroederStep>,
}

impl SchroederPath {
    pub fn empty() -> Self {
        SchroederPath { steps: Vec::new() }
    }

    pub fn parse(word: &str) -> Result<Self> {
        let letters = read_letters(word, SCHROEDER_ALPHABET)?;
        check_heights(word, &letters, true)?;
        Ok(SchroederPath {
            steps: letters.into_iter().map(Letter::schroeder).collect(),
        })
    }

    pub fn new(steps: Vec<SchroederStep>) -> Result<Self> {
        let word: String = steps.iter().map(|s| s.letter()).collect();
        SchroederPath::parse(&word)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<SchroederStep>) -> Self {
        SchroederPath { steps }
    }

    pub fn steps(&self) -> &[SchroederStep] {
        &self.steps
    }

    /// x-span.
    pub fn span(&self) -> usize {
        self.steps
            .iter()
            .map(|s| if *s == SchroederStep::L { 2 } else { 1 })
            .sum()
    }

    pub fn semilength(&self) -> usize {
        self.span() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// True when no `L` step lies on the axis.
    pub fn is_little(&self) -> bool {
        let mut h = 0i64;
        for s in &self.steps {
            match s {
                SchroederStep::U => h += 1,
                SchroederStep::D => h -= 1,
                SchroederStep::L if h == 0 => return false,
                SchroederStep::L => {}
            }
        }
        true
    }

    /// The same word as a Dyck path, if it has no flat steps.
    pub fn to_dyck(&self) -> Option<DyckPath> {
        self.steps
            .iter()
            .map(|s| match s {
                SchroederStep::U => Some(DyckStep::U),
                SchroederStep::D => Some(DyckStep::D),
                SchroederStep::L => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(DyckPath::from_steps_unchecked)
    }
}

impl From<DyckPath> for SchroederPath {
    fn from(p: DyckPath) -> Self {
        SchroederPath {
            steps: p.steps.into_iter().map(SchroederStep::from).collect(),
        }
    }
}

impl From<&DyckPath> for SchroederPath {
    fn from(p: &DyckPath) -> Self {
        SchroederPath::from(p.clone())
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for SchroederPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchroederPath::parse(s)
    }
}

/// A Schröder path with no flat step on the axis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LittleSchroederPath(SchroederPath);

impl LittleSchroederPath {
    pub fn parse(word: &str) -> Result<Self> {
        let letters = read_letters(word, SCHROEDER_ALPHABET)?;
        check_heights(word, &letters, false)?;
        Ok(LittleSchroederPath(SchroederPath {
            steps: letters.into_iter().map(Letter::schroeder).collect(),
        }))
    }

    pub fn new(path: SchroederPath) -> Result<Self> {
        if path.is_little() {
            Ok(LittleSchroederPath(path))
        } else {
            Err(Error::UnbalancedWord {
                word: path.to_string(),
                reason: "L step on the axis".into(),
            })
        }
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<SchroederStep>) -> Self {
        LittleSchroederPath(SchroederPath { steps })
    }

    pub fn as_schroeder(&self) -> &SchroederPath {
        &self.0
    }

    pub fn steps(&self) -> &[SchroederStep] {
        &self.0.steps
    }

    pub fn semilength(&self) -> usize {
        self.0.semilength()
    }
}

impl fmt::Display for LittleSchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for LittleSchroederPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LittleSchroederPath::parse(s)
    }
}

/// Path with steps `H=(1,2)`, `G=(2,1)`, `D=(1,-1)` from the origin to
/// `(3n, 0)`, never below the axis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPath {
    steps: Vec<TStep>,
}

impl TPath {
    pub fn parse(word: &str) -> Result<Self> {
        let letters = read_letters(word, T_ALPHABET)?;
        let span = check_heights(word, &letters, true)?;
        if span % 3 != 0 {
            return Err(Error::UnbalancedWord {
                word: word.to_string(),
                reason: format!("span {span} is not a multiple of 3"),
            });
        }
        Ok(TPath {
            steps: letters.into_iter().map(Letter::t).collect(),
        })
    }

    pub fn new(steps: Vec<TStep>) -> Result<Self> {
        let word: String = steps.iter().map(|s| s.letter()).collect();
        TPath::parse(&word)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<TStep>) -> Self {
        TPath { steps }
    }

    pub fn steps(&self) -> &[TStep] {
        &self.steps
    }

    pub fn span(&self) -> usize {
        self.steps
            .iter()
            .map(|s| if *s == TStep::G { 2 } else { 1 })
            .sum()
    }

    /// `n` such that the path ends at `(3n, 0)`.
    pub fn semilength(&self) -> usize {
        self.span() / 3
    }
}

impl fmt::Display for TPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for TPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TPath::parse(s)
    }
}

/// Path families that can be parsed and enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Dyck,
    /// Dyck paths whose ascents all have length at most `m`.
    BoundedAscent(usize),
    /// Concatenations of pyramids of size at most `m`.
    Fibonacci(usize),
    /// Concatenations of pyramids of any size.
    FibonacciFree,
    Schroeder,
    LittleSchroeder,
    TPath,
}

impl Family {
    pub fn check(self) -> Result<Self> {
        match self {
            Family::BoundedAscent(0) | Family::Fibonacci(0) => Err(Error::InvalidBound(0)),
            f => Ok(f),
        }
    }

    fn alphabet(self) -> &'static [Letter] {
        match self {
            Family::Schroeder | Family::LittleSchroeder => SCHROEDER_ALPHABET,
            Family::TPath => T_ALPHABET,
            _ => DYCK_ALPHABET,
        }
    }

    fn span(self, n: usize) -> usize {
        match self {
            Family::TPath => 3 * n,
            _ => 2 * n,
        }
    }

    fn pyramid_bound(self) -> Option<Option<usize>> {
        match self {
            Family::Fibonacci(m) => Some(Some(m)),
            Family::FibonacciFree => Some(None),
            _ => None,
        }
    }

    fn step(self, target: usize, st: WalkState, l: Letter) -> Option<WalkState> {
        let x = st.x + l.dx();
        let h = st.h as i64 + l.dy();
        if x > target || h < 0 || h as usize > target - x {
            return None;
        }
        let mut next = WalkState {
            x,
            h: h as usize,
            run: if l == Letter::U { st.run + 1 } else { 0 },
            falling: st.falling,
        };
        match self {
            Family::BoundedAscent(m) if l == Letter::U && st.run >= m => return None,
            Family::LittleSchroeder if l == Letter::L && st.h == 0 => return None,
            _ => {}
        }
        if let Some(bound) = self.pyramid_bound() {
            match l {
                Letter::U if st.falling => return None,
                Letter::U if bound.is_some_and(|m| st.run >= m) => return None,
                Letter::D => next.falling = next.h > 0,
                _ => {}
            }
        }
        Some(next)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct WalkState {
    x: usize,
    h: usize,
    run: usize,
    falling: bool,
}

const ORIGIN: WalkState = WalkState {
    x: 0,
    h: 0,
    run: 0,
    falling: false,
};

/// Depth-first lexicographic walk over the words of one family.
struct Walker {
    family: Family,
    target: usize,
    stack: Vec<(WalkState, usize)>,
    word: Vec<Letter>,
}

impl Walker {
    fn new(family: Family, n: usize) -> Self {
        Walker {
            family,
            target: family.span(n),
            stack: vec![(ORIGIN, 0)],
            word: Vec::new(),
        }
    }
}

impl Iterator for Walker {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        let alphabet = self.family.alphabet();
        loop {
            let (state, idx) = self.stack.last_mut()?;
            if state.x == self.target && *idx == 0 {
                *idx = alphabet.len();
                return Some(self.word.clone());
            }
            if *idx >= alphabet.len() {
                self.stack.pop();
                self.word.pop();
                continue;
            }
            let letter = alphabet[*idx];
            *idx += 1;
            if let Some(next) = self.family.step(self.target, *state, letter) {
                self.stack.push((next, 0));
                self.word.push(letter);
            }
        }
    }
}

/// A path of any family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyPath {
    Dyck(DyckPath),
    Schroeder(SchroederPath),
    LittleSchroeder(LittleSchroederPath),
    T(TPath),
}

impl fmt::Display for AnyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyPath::Dyck(p) => p.fmt(f),
            AnyPath::Schroeder(p) => p.fmt(f),
            AnyPath::LittleSchroeder(p) => p.fmt(f),
            AnyPath::T(p) => p.fmt(f),
        }
    }
}

fn wrap(family: Family, letters: Vec<Letter>) -> AnyPath {
    match family {
        Family::Schroeder => AnyPath::Schroeder(SchroederPath::from_steps_unchecked(
            letters.into_iter().map(Letter::schroeder).collect(),
        )),
        Family::LittleSchroeder => {
            AnyPath::LittleSchroeder(LittleSchroederPath::from_steps_unchecked(
                letters.into_iter().map(Letter::schroeder).collect(),
            ))
        }
        Family::TPath => AnyPath::T(TPath::from_steps_unchecked(
            letters.into_iter().map(Letter::t).collect(),
        )),
        _ => AnyPath::Dyck(DyckPath::from_steps_unchecked(
            letters.into_iter().map(Letter::dyck).collect(),
        )),
    }
}

/// Parses `word` and checks membership in `family`.
pub fn parse_path(word: &str, family: Family) -> Result<AnyPath> {
    let family = family.check()?;
    let letters = read_letters(word, family.alphabet())?;
    check_heights(word, &letters, family != Family::LittleSchroeder)?;
    if family == Family::TPath {
        return TPath::parse(word).map(AnyPath::T);
    }
    let path = wrap(family, letters);
    if let AnyPath::Dyck(p) = &path {
        match family {
            Family::BoundedAscent(m) if p.ascents().iter().any(|a| a.length > m) => {
                return Err(Error::UnbalancedWord {
                    word: word.to_string(),
                    reason: format!("has an ascent longer than {m}"),
                });
            }
            Family::Fibonacci(_) | Family::FibonacciFree => {
                let sizes = p
                    .pyramid_sizes()
                    .ok_or_else(|| Error::NotAFibonacciPath(word.to_string()))?;
                if let Family::Fibonacci(m) = family {
                    if sizes.iter().any(|&s| s > m) {
                        return Err(Error::NotAFibonacciPath(word.to_string()));
                    }
                }
            }
            _ => {}
        }
    }
    Ok(path)
}

/// Every member of `family` with semilength `n` (T-paths: endpoint
/// `(3n, 0)`), once each, in lexicographic order.
pub fn enumerate_family(n: usize, family: Family) -> Result<impl Iterator<Item = AnyPath>> {
    let family = family.check()?;
    Ok(Walker::new(family, n).map(move |w| wrap(family, w)))
}

/// Number of members of `family` of semilength `n`, by dynamic
/// programming over the same automaton [`enumerate_family`] walks.
pub fn count_family(n: usize, family: Family) -> Result<BigUint> {
    let family = family.check()?;
    let target = family.span(n);
    let mut memo = HashMap::new();
    Ok(completions(family, target, ORIGIN, &mut memo))
}

fn completions(
    family: Family,
    target: usize,
    st: WalkState,
    memo: &mut HashMap<WalkState, BigUint>,
) -> BigUint {
    if st.x == target {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&st) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for &l in family.alphabet() {
        if let Some(next) = family.step(target, st, l) {
            total += completions(family, target, next, memo);
        }
    }
    memo.insert(st, total.clone());
    total
}

pub fn dyck_paths(n: usize) -> impl Iterator<Item = DyckPath> {
    Walker::new(Family::Dyck, n)
        .map(|w| DyckPath::from_steps_unchecked(w.into_iter().map(Letter::dyck).collect()))
}

/// Dyck paths in a Dyck-shaped family (`Dyck`, `BoundedAscent`,
/// `Fibonacci`, `FibonacciFree`).
pub fn dyck_family_paths(n: usize, family: Family) -> Result<impl Iterator<Item = DyckPath>> {
    let family = family.check()?;
    if family.alphabet() != DYCK_ALPHABET {
        return Err(Error::Parse(format!(
            "{family:?} is not a Dyck-shaped family"
        )));
    }
    Ok(Walker::new(family, n)
        .map(|w| DyckPath::from_steps_unchecked(w.into_iter().map(Letter::dyck).collect())))
}

pub fn schroeder_paths(n: usize) -> impl Iterator<Item = SchroederPath> {
    Walker::new(Family::Schroeder, n).map(|w| {
        SchroederPath::from_steps_unchecked(w.into_iter().map(Letter::schroeder).collect())
    })
}

pub fn little_schroeder_paths(n: usize) -> impl Iterator<Item = LittleSchroederPath> {
    Walker::new(Family::LittleSchroeder, n).map(|w| {
        LittleSchroederPath::from_steps_unchecked(w.into_iter().map(Letter::schroeder).collect())
    })
}

pub fn t_paths(n: usize) -> impl Iterator<Item = TPath> {
    Walker::new(Family::TPath, n)
        .map(|w| TPath::from_steps_unchecked(w.into_iter().map(Letter::t).collect()))
}
