//! Colour systems over ascents and Dyck paths with coloured ascents.
//!
//! A colour of a `k`-ascent is a lattice path of semilength `k`. All
//! colours are stored as [`SchroederPath`] words; the Dyck-valued systems
//! simply never use the flat step.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{self, primary_ranges, DyckPath, DyckStep, Family, SchroederPath};

pub type Colour = SchroederPath;

/// A family of colour sets `L_0, L_1, …` indexed by ascent length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ColourSystem {
    /// `L_k` = Dyck paths of semilength `k`.
    Catalan,
    /// Dyck paths with all ascents at most `m`.
    BoundedAscent(usize),
    /// Pyramid concatenations with pyramids at most `m`.
    Fibonacci(usize),
    /// All pyramid concatenations.
    FibonacciFree,
    /// Schröder paths of semilength `k`.
    Schroeder,
    /// One colour per length: the path `(UD)^k`.
    Trivial,
    /// Counts `a_0, a_1, …` only; missing entries are zero.
    Custom(Vec<BigUint>),
}

impl ColourSystem {
    pub fn is_structural(&self) -> bool {
        !matches!(self, ColourSystem::Custom(_))
    }

    fn family(&self) -> Option<Family> {
        match self {
            ColourSystem::Catalan => Some(Family::Dyck),
            ColourSystem::BoundedAscent(m) => Some(Family::BoundedAscent(*m)),
            ColourSystem::Fibonacci(m) => Some(Family::Fibonacci(*m)),
            ColourSystem::FibonacciFree => Some(Family::FibonacciFree),
            ColourSystem::Schroeder => Some(Family::Schroeder),
            ColourSystem::Trivial | ColourSystem::Custom(_) => None,
        }
    }

    fn check_bound(&self) -> Result<()> {
        match self {
            ColourSystem::BoundedAscent(0) | ColourSystem::Fibonacci(0) => {
                Err(Error::InvalidBound(0))
            }
            _ => Ok(()),
        }
    }

    /// Every colour available to a `k`-ascent, in lexicographic order.
    pub fn colours_of(&self, k: usize) -> Result<Vec<Colour>> {
        self.check_bound()?;
        match self {
            ColourSystem::Custom(_) => Err(Error::CountOnlySystem(self.to_string())),
            ColourSystem::Trivial => Ok(vec![trivial_colour(k)]),
            ColourSystem::Schroeder => Ok(paths::schroeder_paths(k).collect()),
            other => {
                let family = other.family().expect("structural");
                Ok(paths::dyck_family_paths(k, family)?
                    .map(SchroederPath::from)
                    .collect())
            }
        }
    }

    /// `a_k = |L_k|`.
    pub fn colour_count(&self, k: usize) -> Result<BigUint> {
        self.check_bound()?;
        Ok(match self {
            ColourSystem::Custom(weights) => weights.get(k).cloned().unwrap_or_default(),
            ColourSystem::Trivial => BigUint::one(),
            other => paths::count_family(k, other.family().expect("structural"))?,
        })
    }

    /// `[a_0, …, a_order]`.
    pub fn weights(&self, order: usize) -> Result<Vec<BigUint>> {
        (0..=order).map(|k| self.colour_count(k)).collect()
    }

    /// Whether `colour` belongs to `L_k` for its own semilength `k`.
    pub fn contains(&self, colour: &Colour) -> bool {
        let k = colour.semilength();
        match self {
            ColourSystem::Custom(_) => false,
            ColourSystem::Schroeder => true,
            ColourSystem::Trivial => *colour == trivial_colour(k),
            ColourSystem::Catalan => colour.to_dyck().is_some(),
            ColourSystem::BoundedAscent(m) => colour
                .to_dyck()
                .is_some_and(|d| d.ascents().iter().all(|a| a.length <= *m)),
            ColourSystem::Fibonacci(m) => colour
                .to_dyck()
                .and_then(|d| d.pyramid_sizes())
                .is_some_and(|s| s.iter().all(|p| p <= m)),
            ColourSystem::FibonacciFree => {
                colour.to_dyck().and_then(|d| d.pyramid_sizes()).is_some()
            }
        }
    }

    /// Parses `catalan`, `bounded-ascent:M`, `fibonacci:M`,
    /// `fibonacci-free`, `schroeder`, `trivial` or `custom:a0,a1,…`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, arg) = match text.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (text, None),
        };
        let bound = |arg: Option<&str>| -> Result<usize> {
            let m: usize = arg
                .ok_or_else(|| Error::Parse(format!("{name} needs a bound, e.g. {name}:2")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad bound in {text:?}")))?;
            if m == 0 {
                return Err(Error::InvalidBound(0));
            }
            Ok(m)
        };
        Ok(match name {
            "catalan" => ColourSystem::Catalan,
            "bounded-ascent" => ColourSystem::BoundedAscent(bound(arg)?),
            "fibonacci" => ColourSystem::Fibonacci(bound(arg)?),
            "fibonacci-free" => ColourSystem::FibonacciFree,
            "schroeder" => ColourSystem::Schroeder,
            "trivial" => ColourSystem::Trivial,
            "custom" => ColourSystem::Custom(parse_weights(arg.unwrap_or(""))?),
            _ => return Err(Error::Parse(format!("unknown colour system {text:?}"))),
        })
    }
}

/// Comma-separated nonnegative integers.
pub fn parse_weights(text: &str) -> Result<Vec<BigUint>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("bad weight {s:?}")))
        })
        .collect()
}

impl fmt::Display for ColourSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColourSystem::Catalan => write!(f, "catalan"),
            ColourSystem::BoundedAscent(m) => write!(f, "bounded-ascent:{m}"),
            ColourSystem::Fibonacci(m) => write!(f, "fibonacci:{m}"),
            ColourSystem::FibonacciFree => write!(f, "fibonacci-free"),
            ColourSystem::Schroeder => write!(f, "schroeder"),
            ColourSystem::Trivial => write!(f, "trivial"),
            ColourSystem::Custom(w) => {
                write!(f, "custom:")?;
                for (i, a) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for ColourSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColourSystem::parse(s)
    }
}

fn trivial_colour(k: usize) -> Colour {
    let mut steps = Vec::with_capacity(2 * k);
    for _ in 0..k {
        steps.push(DyckStep::U);
        steps.push(DyckStep::D);
    }
    SchroederPath::from(DyckPath::from_steps_unchecked(steps))
}

/// A Dyck path with one colour per ascent, in ascent order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredDyckPath {
    base: DyckPath,
    colours: Vec<Colour>,
}

impl ColouredDyckPath {
    /// Checks that there is one colour per ascent and that each colour has
    /// the semilength of its ascent.
    pub fn new(base: DyckPath, colours: Vec<Colour>) -> Result<Self> {
        let ascents = base.ascents();
        if ascents.len() != colours.len() {
            return Err(Error::InvalidColouring(format!(
                "{base} has {} ascents but {} colours were given",
                ascents.len(),
                colours.len()
            )));
        }
        for (a, c) in ascents.iter().zip(&colours) {
            if c.semilength() != a.length || c.span() % 2 != 0 {
                return Err(Error::InvalidColouring(format!(
                    "colour {c} does not fit an ascent of length {}",
                    a.length
                )));
            }
        }
        Ok(ColouredDyckPath { base, colours })
    }

    pub fn empty() -> Self {
        ColouredDyckPath::default()
    }

    /// `Λ^k⟨colour⟩` with `k` the colour's semilength.
    pub fn pyramid(colour: Colour) -> Self {
        ColouredDyckPath {
            base: DyckPath::pyramid(colour.semilength()),
            colours: vec![colour],
        }
    }

    pub fn base(&self) -> &DyckPath {
        &self.base
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn semilength(&self) -> usize {
        self.base.semilength()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn in_system(&self, system: &ColourSystem) -> bool {
        self.colours.iter().all(|c| system.contains(c))
    }

    /// Returns the first colour outside `system` as an error.
    pub fn require_system(&self, system: &ColourSystem) -> Result<()> {
        match self.colours.iter().find(|c| !system.contains(c)) {
            None => Ok(()),
            Some(c) => Err(Error::WrongColourSystem {
                colour: c.to_string(),
                system: system.to_string(),
            }),
        }
    }

    /// `P̂ = Λ^k⟨C⟩ * [P̂_k, …, P̂_1]`: the base colour and the appended
    /// coloured parts in the order `[P̂_k, …, P̂_1]`.
    pub fn primary_decompose(&self) -> Result<(&Colour, Vec<ColouredDyckPath>)> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let steps = self.base.steps();
        let (_, ranges) = primary_ranges(steps);
        let mut next_colour = 1;
        let parts = ranges
            .into_iter()
            .map(|r| {
                let base = DyckPath::from_steps_unchecked(steps[r].to_vec());
                let count = base.ascents().len();
                let colours = self.colours[next_colour..next_colour + count].to_vec();
                next_colour += count;
                ColouredDyckPath { base, colours }
            })
            .collect();
        Ok((&self.colours[0], parts))
    }

    /// Inverse of [`ColouredDyckPath::primary_decompose`].
    /// `parts.len()` must equal the colour's semilength.
    pub fn from_primary(colour: Colour, parts: Vec<ColouredDyckPath>) -> Result<Self> {
        if parts.len() != colour.semilength() {
            return Err(Error::InvalidColouring(format!(
                "base colour {colour} needs {} parts, got {}",
                colour.semilength(),
                parts.len()
            )));
        }
        let bases: Vec<DyckPath> = parts.iter().map(|p| p.base.clone()).collect();
        let mut colours = vec![colour];
        for p in parts {
            colours.extend(p.colours);
        }
        Ok(ColouredDyckPath {
            base: DyckPath::from_primary(&bases),
            colours,
        })
    }

    /// Parses `base;c1,c2,…`. A bare word with no `;` is accepted only if
    /// it has no ascents.
    pub fn parse(text: &str) -> Result<Self> {
        let (base, colours) = text.split_once(';').unwrap_or((text, ""));
        let base = DyckPath::parse(base)?;
        let colours = colours
            .split(',')
            .filter(|c| !c.is_empty())
            .map(SchroederPath::parse)
            .collect::<Result<Vec<_>>>()?;
        ColouredDyckPath::new(base, colours)
    }
}

impl fmt::Display for ColouredDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.base)?;
        for (i, c) in self.colours.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ColouredDyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColouredDyckPath::parse(s)
    }
}

/// Every Dyck path of semilength `n` coloured by `system`: base paths in
/// lexicographic order, then colour tuples with the first ascent's colour
/// varying slowest.
pub fn enumerate_coloured(
    n: usize,
    system: &ColourSystem,
) -> Result<impl Iterator<Item = ColouredDyckPath>> {
    if !system.is_structural() {
        return Err(Error::CountOnlySystem(system.to_string()));
    }
    let mut palette: HashMap<usize, Vec<Colour>> = HashMap::new();
    for k in 1..=n {
        palette.insert(k, system.colours_of(k)?);
    }
    Ok(paths::dyck_paths(n).flat_map(move |base| {
        let choices: Vec<Vec<Colour>> = base
            .ascents()
            .iter()
            .map(|a| palette[&a.length].clone())
            .collect();
        Odometer::new(choices).map(move |colours| ColouredDyckPath {
            base: base.clone(),
            colours,
        })
    }))
}

/// Cartesian product of the choice lists, last position varying fastest.
struct Odometer {
    choices: Vec<Vec<Colour>>,
    index: Vec<usize>,
    done: bool,
}

impl Odometer {
    fn new(choices: Vec<Vec<Colour>>) -> Self {
        let done = choices.iter().any(Vec::is_empty);
        let index = vec![0; choices.len()];
        Odometer {
            choices,
            index,
            done,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<Colour>;

    fn next(&mut self) -> Option<Vec<Colour>> {
        if self.done {
            return None;
        }
        let item = self
            .index
            .iter()
            .zip(&self.choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let mut pos = self.index.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.index[pos] += 1;
            if self.index[pos] < self.choices[pos].len() {
                break;
            }
            self.index[pos] = 0;
        }
        Some(item)
    }
}

/// `Σ_{P ∈ D(n)} Π a_{k_i}` over the ascent lengths `k_i` of `P`, by
/// scanning every Dyck path of semilength `n`.
pub fn count_coloured_bruteforce(n: usize, system: &ColourSystem) -> Result<BigUint> {
    let weights = system.weights(n)?;
    let mut total = BigUint::zero();
    for p in paths::dyck_paths(n) {
        let mut product = BigUint::one();
        for a in p.ascents() {
            product *= &weights[a.length];
            if product.is_zero() {
                break;
            }
        }
        total += product;
    }
    Ok(total)
}
