#![allow(dead_code)]

use coloured_dyck::colours::Colour;
use coloured_dyck::paths::{DyckStep, SchroederStep};
use coloured_dyck::{ColourSystem, ColouredDyckPath, DyckPath, SchroederPath};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform Dyck path by the cycle lemma: shuffle `n` ups and `n+1` downs,
/// rotate to start at the first minimum, drop the final down.
pub fn uniform_dyck(rng: &mut StdRng, n: usize) -> DyckPath {
    let mut word: Vec<DyckStep> = std::iter::repeat_n(DyckStep::U, n)
        .chain(std::iter::repeat_n(DyckStep::D, n + 1))
        .collect();
    word.shuffle(rng);
    let (mut height, mut low, mut at) = (0i64, 0i64, 0);
    for (i, s) in word.iter().enumerate() {
        height += if *s == DyckStep::U { 1 } else { -1 };
        if height < low {
            low = height;
            at = i + 1;
        }
    }
    word.rotate_left(at);
    word.pop();
    DyckPath::new(word).expect("cycle lemma gives a Dyck path")
}

/// Dyck path with every ascent at most `m`, built by random primary
/// decompositions.
pub fn bounded_dyck(rng: &mut StdRng, n: usize, m: usize) -> DyckPath {
    if n == 0 {
        return DyckPath::empty();
    }
    let k = rng.random_range(1..=m.min(n));
    let mut sizes = vec![0; k];
    for _ in 0..n - k {
        let i = rng.random_range(0..k);
        sizes[i] += 1;
    }
    let parts: Vec<DyckPath> = sizes.into_iter().map(|s| bounded_dyck(rng, s, m)).collect();
    DyckPath::from_primary(&parts)
}

/// Pyramid concatenation of semilength `n` with pyramids at most `m`.
pub fn fibonacci_dyck(rng: &mut StdRng, n: usize, m: usize) -> DyckPath {
    let mut bits = Vec::new();
    let mut run = 1;
    for _ in 1..n {
        let cut = run >= m || rng.random_bool(0.5);
        bits.push(cut);
        run = if cut { 1 } else { run + 1 };
    }
    if n == 0 {
        return DyckPath::empty();
    }
    DyckPath::from_touch_bits(&bits)
}

/// Schröder path of semilength `n`: a random Dyck path with some `UD`
/// peaks flattened to `L`.
pub fn schroeder(rng: &mut StdRng, n: usize) -> SchroederPath {
    let dyck = uniform_dyck(rng, n);
    let steps = dyck.steps();
    let mut out = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        if steps[i] == DyckStep::U && steps.get(i + 1) == Some(&DyckStep::D) && rng.random_bool(0.5)
        {
            out.push(SchroederStep::L);
            i += 2;
        } else {
            out.push(steps[i].into());
            i += 1;
        }
    }
    SchroederPath::new(out).expect("flattening peaks keeps heights")
}

pub fn colour(rng: &mut StdRng, k: usize, system: &ColourSystem) -> Colour {
    match system {
        ColourSystem::Catalan => uniform_dyck(rng, k).into(),
        ColourSystem::BoundedAscent(m) => bounded_dyck(rng, k, *m).into(),
        ColourSystem::Fibonacci(m) => fibonacci_dyck(rng, k, *m).into(),
        ColourSystem::FibonacciFree => fibonacci_dyck(rng, k, k.max(1)).into(),
        ColourSystem::Schroeder => schroeder(rng, k),
        ColourSystem::Trivial => bounded_dyck(rng, k, 1).into(),
        ColourSystem::Custom(_) => panic!("count-only system"),
    }
}

pub fn coloured(rng: &mut StdRng, n: usize, system: &ColourSystem) -> ColouredDyckPath {
    let base = uniform_dyck(rng, n);
    let colours = base
        .ascents()
        .iter()
        .map(|a| colour(rng, a.length, system))
        .collect();
    ColouredDyckPath::new(base, colours).expect("one colour per ascent")
}
