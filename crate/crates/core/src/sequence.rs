//! Index sets `Λ ⊂ Z` and binary bi-sequences seen through finite windows.
//!
//! A two-sided sequence `b ∈ {0,1}^Z` is only ever materialized on a window
//! `[lo, hi]`. Generators are window-independent: the members produced on a
//! larger window restrict to the members produced on a smaller one.

use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default gap budget for syndeticity verdicts and piecewise detection.
pub const DEFAULT_GAP_BUDGET: u64 = 10;

/// Finite window `[lo, hi]` of the integers with `lo <= 0 <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > 0 || hi < 0 {
            return Err(Error::BadDescriptor(format!(
                "window [{lo}, {hi}] must contain 0"
            )));
        }
        Ok(Window { lo, hi })
    }

    /// `[-r, r]`.
    pub fn symmetric(radius: i64) -> Self {
        let r = radius.abs();
        Window { lo: -r, hi: r }
    }

    /// `F_n = {0, …, n-1}`.
    pub fn initial(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadDescriptor("F_n needs n >= 1".into()));
        }
        Ok(Window {
            lo: 0,
            hi: n as i64 - 1,
        })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }

    pub fn contains_window(&self, other: &Window) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// Window widened by `pad` on each side.
    pub fn padded(&self, pad: i64) -> Window {
        Window {
            lo: self.lo - pad,
            hi: self.hi + pad,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Substitution on `{0, 1}`; Thue-Morse is `0 → 01, 1 → 10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubstitutionRule {
    image_of_0: Vec<u8>,
    image_of_1: Vec<u8>,
}

impl SubstitutionRule {
    pub fn new(image_of_0: Vec<u8>, image_of_1: Vec<u8>) -> Result<Self> {
        if image_of_0.is_empty() || image_of_1.is_empty() {
            return Err(Error::BadDescriptor("substitution images must be nonempty".into()));
        }
        if image_of_0.iter().chain(&image_of_1).any(|&b| b > 1) {
            return Err(Error::BadDescriptor("substitution images must be binary".into()));
        }
        Ok(SubstitutionRule {
            image_of_0,
            image_of_1,
        })
    }

    pub fn thue_morse() -> Self {
        SubstitutionRule {
            image_of_0: vec![0, 1],
            image_of_1: vec![1, 0],
        }
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        if letter == 0 {
            &self.image_of_0
        } else {
            &self.image_of_1
        }
    }

    pub fn apply(&self, word: &[u8]) -> Vec<u8> {
        word.iter().flat_map(|&b| self.image(b).iter().copied()).collect()
    }

    pub fn is_thue_morse(&self) -> bool {
        *self == Self::thue_morse()
    }

    /// Prefix of length `n` of the one-sided fixed point grown from `seed`.
    pub fn fixed_point_prefix(&self, seed: u8, n: usize) -> Result<Vec<u8>> {
        let img = self.image(seed);
        if img.len() < 2 || img[0] != seed {
            return Err(Error::BadDescriptor(format!(
                "substitution has no fixed point grown from {seed}: image is {}",
                bits_to_string(img)
            )));
        }
        let mut word = vec![seed];
        while word.len() < n {
            word = self.apply(&word);
        }
        word.truncate(n);
        Ok(word)
    }
}

/// Local rule `c: {0,1}^{2m-1} → {0,1}` read on positions `-m+1..=m-1`.
///
/// Patterns are indexed most-significant-bit first: position `-m+1` is the
/// leading bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockCode {
    radius: usize,
    table: Vec<u8>,
}

impl BlockCode {
    pub fn new(radius: usize, table: Vec<u8>) -> Result<Self> {
        if radius == 0 || radius > 8 {
            return Err(Error::BadDescriptor(format!(
                "block code radius must be in 1..=8, got {radius}"
            )));
        }
        let size = 1usize << (2 * radius - 1);
        if table.len() != size || table.iter().any(|&b| b > 1) {
            return Err(Error::BadDescriptor(format!(
                "block code of radius {radius} needs a binary table of {size} entries"
            )));
        }
        Ok(BlockCode { radius, table })
    }

    pub fn from_fn(radius: usize, f: impl Fn(&[u8]) -> u8) -> Result<Self> {
        let width = 2 * radius - 1;
        let table = (0..1usize << width)
            .map(|idx| {
                let word: Vec<u8> = (0..width)
                    .map(|i| ((idx >> (width - 1 - i)) & 1) as u8)
                    .collect();
                f(&word) & 1
            })
            .collect();
        BlockCode::new(radius, table)
    }

    pub fn identity() -> Self {
        BlockCode {
            radius: 1,
            table: vec![0, 1],
        }
    }

    pub fn constant(bit: u8) -> Self {
        BlockCode {
            radius: 1,
            table: vec![bit & 1; 2],
        }
    }

    /// `c = b(0) xor b(1)` with radius 2.
    pub fn xor_right() -> Self {
        BlockCode::from_fn(2, |w| w[1] ^ w[2]).expect("radius 2 table")
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn eval(&self, word: &[u8]) -> u8 {
        let idx = word.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.table[idx]
    }
}

/// How an index set was produced. Doubles as the sequence descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Generator {
    Explicit(Vec<i64>),
    /// `nZ + m`.
    Periodic { period: u64, offset: i64 },
    /// `{k : dist(kα, Z) < δ}`.
    Bohr { alpha: f64, delta: f64 },
    /// Two-sided fixed point, mirrored to negative indices via `b(k) = t(-k-1)`.
    Substitution { rule: SubstitutionRule, seed: u8 },
    BlockCode { base: Box<Generator>, code: BlockCode },
    /// Independent Bernoulli(p) membership, keyed on the index so it does not
    /// depend on the window.
    Random { p: f64, seed: u64 },
}

impl Generator {
    pub fn thue_morse() -> Self {
        Generator::Substitution {
            rule: SubstitutionRule::thue_morse(),
            seed: 0,
        }
    }

    pub fn periodic(period: u64, offset: i64) -> Self {
        Generator::Periodic { period, offset }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Generator::Periodic { period, .. } if *period == 0 => {
                Err(Error::BadDescriptor("periodic needs n >= 1".into()))
            }
            Generator::Bohr { alpha, delta } => {
                if !alpha.is_finite() {
                    return Err(Error::BadDescriptor(format!("bohr alpha {alpha} not finite")));
                }
                if !(*delta > 0.0 && *delta <= 0.5) {
                    return Err(Error::BadDescriptor(format!(
                        "bohr delta {delta} outside (0, 1/2]"
                    )));
                }
                Ok(())
            }
            Generator::Random { p, .. } if !(0.0..=1.0).contains(p) => {
                Err(Error::BadDescriptor(format!("random p {p} outside [0, 1]")))
            }
            Generator::Substitution { seed, .. } if *seed > 1 => {
                Err(Error::BadDescriptor("substitution seed must be 0 or 1".into()))
            }
            Generator::BlockCode { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }
}

fn random_member(p: f64, seed: u64, k: i64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Two 32-bit words per index; offset so negative k maps to a valid position.
    let pos = ((k as i128) - (i64::MIN as i128)) as u128 * 2;
    rng.set_word_pos(pos);
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    u < p
}

fn bohr_member(alpha: f64, delta: f64, k: i64) -> bool {
    let x = (k as f64 * alpha).rem_euclid(1.0);
    x.min(1.0 - x) < delta
}

/// Indicator of a generator on `window`, one byte per position.
fn generate_bits(generator: &Generator, window: Window) -> Result<Vec<u8>> {
    let n = window.len() as usize;
    let bits = match generator {
        Generator::Explicit(list) => {
            let mut v = vec![0u8; n];
            for &k in list {
                if window.contains(k) {
                    v[(k - window.lo) as usize] = 1;
                }
            }
            v
        }
        Generator::Periodic { period, offset } => {
            let p = *period as i64;
            window
                .iter()
                .map(|k| ((k - offset).rem_euclid(p) == 0) as u8)
                .collect()
        }
        Generator::Bohr { alpha, delta } => window
            .iter()
            .map(|k| bohr_member(*alpha, *delta, k) as u8)
            .collect(),
        Generator::Substitution { rule, seed } => {
            let need = (window.hi + 1).max(-window.lo).max(1) as usize;
            let t = rule.fixed_point_prefix(*seed, need)?;
            window
                .iter()
                .map(|k| if k >= 0 { t[k as usize] } else { t[(-k - 1) as usize] })
                .collect()
        }
        Generator::BlockCode { base, code } => {
            let pad = code.radius as i64 - 1;
            let wide = window.padded(pad);
            let b = generate_bits(base, wide)?;
            let width = 2 * code.radius - 1;
            (0..n).map(|i| code.eval(&b[i..i + width])).collect()
        }
        Generator::Random { p, seed } => window
            .iter()
            .map(|k| random_member(*p, *seed, k) as u8)
            .collect(),
    };
    Ok(bits)
}

/// Finite window of `Λ`: sorted members plus the generator that produced them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexSet {
    window: Window,
    members: Vec<i64>,
    generator: Generator,
}

/// `Λ ∩ window` for the given generator.
pub fn generate(generator: &Generator, window: Window) -> Result<IndexSet> {
    generator.validate()?;
    let bits = generate_bits(generator, window)?;
    Ok(IndexSet::from_bits(window, &bits, generator.clone()))
}

impl IndexSet {
    fn from_bits(window: Window, bits: &[u8], generator: Generator) -> Self {
        let members = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| window.lo + i as i64)
            .collect();
        IndexSet {
            window,
            members,
            generator,
        }
    }

    /// Explicit set; members outside the window are dropped.
    pub fn explicit(window: Window, members: impl IntoIterator<Item = i64>) -> Self {
        let mut list: Vec<i64> = members.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        let inside: Vec<i64> = list.iter().copied().filter(|k| window.contains(*k)).collect();
        IndexSet {
            window,
            members: inside,
            generator: Generator::Explicit(list),
        }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: i64) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    /// Characteristic sequence on the window.
    pub fn bits(&self) -> Vec<u8> {
        let mut v = vec![0u8; self.window.len() as usize];
        for &k in &self.members {
            v[(k - self.window.lo) as usize] = 1;
        }
        v
    }

    /// Render as a 0/1 string with a `.` before index 0 when the window
    /// extends to negative indices.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.window.len() as usize + 1);
        for (i, b) in self.bits().iter().enumerate() {
            let k = self.window.lo + i as i64;
            if k == 0 && self.window.lo < 0 {
                s.push('.');
            }
            s.push(if *b == 1 { '1' } else { '0' });
        }
        s
    }

    /// `Λ + k` on the window `window + k`.
    pub fn shift(&self, k: i64) -> Result<IndexSet> {
        let window = Window::new(self.window.lo + k, self.window.hi + k)?;
        Ok(IndexSet::explicit(window, self.members.iter().map(|m| m + k)))
    }

    /// Window positions not in `Λ`.
    pub fn complement_in_window(&self) -> IndexSet {
        let bits: Vec<u8> = self.bits().iter().map(|b| 1 - b).collect();
        let mut out = IndexSet::from_bits(self.window, &bits, Generator::Explicit(Vec::new()));
        out.generator = Generator::Explicit(out.members.clone());
        out
    }

    /// Same generator, smaller window.
    pub fn restrict(&self, window: Window) -> IndexSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|k| window.contains(*k))
            .collect();
        IndexSet {
            window,
            members,
            generator: self.generator.clone(),
        }
    }
}

/// Windowed Beurling and asymptotic density estimates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub beurling_lo: f64,
    pub beurling_hi: f64,
    pub asymptotic_lo: f64,
    pub asymptotic_hi: f64,
    pub separation: Option<u64>,
    /// Sliding interval length used for the Beurling estimates.
    pub beurling_k: u64,
    /// Centre and range of half-widths used for the asymptotic estimates.
    pub asymptotic_center: i64,
    pub asymptotic_k: (u64, u64),
}

/// Minimal gap `Δ(Λ)` between distinct members.
pub fn separation(set: &IndexSet) -> Result<u64> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints(set.len()));
    }
    Ok(set
        .members
        .windows(2)
        .map(|w| (w[1] - w[0]) as u64)
        .min()
        .expect("at least two members"))
}

/// Fixed-scale density estimates.
///
/// Beurling: extremes of `|Λ ∩ [a, a+k)| / k` over all placements inside the
/// window with `k = ⌊len/4⌋`. Asymptotic: extremes of `|Λ ∩ [c-j, c+j)| / 2j`
/// for `j ∈ [⌊H/4⌋, ⌊H/2⌋]`, centred at `c = 0` when the window has room on
/// both sides (`H = min(hi, -lo)`), otherwise at the window midpoint. The
/// Beurling pair is widened to bracket the asymptotic pair.
pub fn densities(set: &IndexSet) -> Result<DensityReport> {
    let w = set.window;
    let len = w.len();
    if len < 16 {
        return Err(Error::WindowTooSmall(format!(
            "density estimates need at least 16 positions, window {w} has {len}"
        )));
    }
    let bits = set.bits();
    let mut prefix = vec![0u64; bits.len() + 1];
    for (i, b) in bits.iter().enumerate() {
        prefix[i + 1] = prefix[i] + *b as u64;
    }
    let count = |from: i64, to_excl: i64| -> u64 {
        let a = (from - w.lo) as usize;
        let b = (to_excl - w.lo) as usize;
        prefix[b] - prefix[a]
    };

    let k = len / 4;
    let (mut bmin, mut bmax) = (u64::MAX, 0u64);
    for a in w.lo..=(w.hi + 1 - k as i64) {
        let c = count(a, a + k as i64);
        bmin = bmin.min(c);
        bmax = bmax.max(c);
    }
    let mut beurling_lo = bmin as f64 / k as f64;
    let mut beurling_hi = bmax as f64 / k as f64;

    let room = w.hi.min(-w.lo);
    let (center, half) = if room >= 8 {
        (0, room)
    } else {
        let c = w.lo + (len as i64) / 2;
        (c, (c - w.lo).min(w.hi + 1 - c))
    };
    let j_lo = ((half / 4).max(1)) as u64;
    let j_hi = ((half / 2).max(1)) as u64;
    let (mut amin, mut amax) = (f64::INFINITY, f64::NEG_INFINITY);
    for j in j_lo..=j_hi {
        let d = count(center - j as i64, center + j as i64) as f64 / (2 * j) as f64;
        amin = amin.min(d);
        amax = amax.max(d);
    }
    beurling_lo = beurling_lo.min(amin);
    beurling_hi = beurling_hi.max(amax);

    Ok(DensityReport {
        beurling_lo,
        beurling_hi,
        asymptotic_lo: amin,
        asymptotic_hi: amax,
        separation: separation(set).ok(),
        beurling_k: k,
        asymptotic_center: center,
        asymptotic_k: (j_lo, j_hi),
    })
}

/// Windowed gap bound: every subinterval of this length meets the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gap {
    Bounded(u64),
    /// No certificate: the set is empty, a singleton, or its largest hole
    /// covers more than half the window.
    Unbounded,
}

impl Gap {
    pub fn bound(&self) -> Option<u64> {
        match self {
            Gap::Bounded(n) => Some(*n),
            Gap::Unbounded => None,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Bounded(n) => write!(f, "{n}"),
            Gap::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// Smallest `n` such that every length-`n` subinterval of the window meets
/// the set, with the unbounded rule described on [`Gap`].
pub fn max_gap(set: &IndexSet) -> Gap {
    let w = set.window;
    let m = &set.members;
    if m.len() < 2 {
        return Gap::Unbounded;
    }
    let mut hole = (m[0] - w.lo).max(w.hi - m[m.len() - 1]);
    for pair in m.windows(2) {
        hole = hole.max(pair[1] - pair[0] - 1);
    }
    let n = hole as u64 + 1;
    if 2 * n > w.len() {
        Gap::Unbounded
    } else {
        Gap::Bounded(n)
    }
}

/// A stretch of the window on which the set has bounded gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseRun {
    pub gap_bound: u64,
    pub start: i64,
    pub end: i64,
}

impl PiecewiseRun {
    pub fn extent(&self) -> u64 {
        (self.end - self.start + 1) as u64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SyndeticReport {
    pub max_gap: Gap,
    pub gap_budget: u64,
    /// `max_gap <= gap_budget`.
    pub syndetic: bool,
    /// Longest block of consecutive members.
    pub thick_run: u64,
    pub piecewise: Option<PiecewiseRun>,
}

/// Longest chain of members whose consecutive differences are at most `n`.
fn longest_chain(members: &[i64], n: u64) -> Option<(i64, i64)> {
    let first = *members.first()?;
    let mut best = (first, first);
    let mut start = first;
    for pair in members.windows(2) {
        if (pair[1] - pair[0]) as u64 > n {
            start = pair[1];
        }
        if pair[1] - start > best.1 - best.0 {
            best = (start, pair[1]);
        }
    }
    Some(best)
}

/// Syndetic, thick and piecewise-syndetic structure on the window.
///
/// The piecewise run is the smallest `n <= gap_budget` for which some chain
/// with internal gaps at most `n` spans at least an eighth of the window.
pub fn syndetic_report(set: &IndexSet, gap_budget: u64) -> SyndeticReport {
    let gap = max_gap(set);
    let mut thick = 0u64;
    let mut run = 0u64;
    let mut prev: Option<i64> = None;
    for &k in &set.members {
        run = if prev == Some(k - 1) { run + 1 } else { 1 };
        thick = thick.max(run);
        prev = Some(k);
    }

    let need = set.window.len().div_ceil(8);
    let piecewise = (1..=gap_budget).find_map(|n| {
        let (s, e) = longest_chain(&set.members, n)?;
        ((e - s + 1) as u64 >= need).then_some(PiecewiseRun {
            gap_bound: n,
            start: s,
            end: e,
        })
    });

    SyndeticReport {
        max_gap: gap,
        gap_budget,
        syndetic: gap.bound().is_some_and(|n| n <= gap_budget),
        thick_run: thick,
        piecewise,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlmostPeriodicReport {
    /// `{k : σ^k(b) agrees with b on -m+1..=m-1}` over the admissible shifts.
    pub return_set: IndexSet,
    pub gap: Gap,
    pub radius: usize,
}

/// Return times of the central word of radius `m`.
///
/// With `σ(b)(j) = b(j-1)`, shift `k` returns when `b(j-k) = b(j)` for all
/// `|j| < m`. Only shifts keeping every compared position inside the window
/// are tested.
pub fn almost_periodic_check(b: &IndexSet, m: usize) -> Result<AlmostPeriodicReport> {
    if m == 0 {
        return Err(Error::BadDescriptor("almost-periodic radius must be >= 1".into()));
    }
    let w = b.window;
    let r = m as i64 - 1;
    if (2 * m as u64 - 1) * 4 > w.len() || w.lo > -r || w.hi < r {
        return Err(Error::WindowTooSmall(format!(
            "radius {m} needs the window to contain [-{r}, {r}] and 4·(2m-1) <= {}",
            w.len()
        )));
    }
    let bits = b.bits();
    let at = |k: i64| bits[(k - w.lo) as usize];
    let shifts = Window::new(r - w.hi, -w.lo - r)?;
    let returns = shifts
        .iter()
        .filter(|&k| (-r..=r).all(|j| at(j - k) == at(j)));
    let return_set = IndexSet::explicit(shifts, returns);
    let gap = max_gap(&return_set);
    Ok(AlmostPeriodicReport {
        return_set,
        gap,
        radius: m,
    })
}

/// Apply a sliding block code; the output window shrinks by `m-1` per side.
pub fn sliding_block_code(b: &IndexSet, code: &BlockCode) -> Result<IndexSet> {
    let pad = code.radius as i64 - 1;
    let w = b.window;
    let out = Window::new(w.lo + pad, w.hi - pad).map_err(|_| {
        Error::WindowTooSmall(format!(
            "block code of radius {} shrinks window {w} past 0",
            code.radius
        ))
    })?;
    let bits = b.bits();
    let width = 2 * code.radius - 1;
    let coded: Vec<u8> = (0..out.len() as usize)
        .map(|i| code.eval(&bits[i..i + width]))
        .collect();
    let mut set = IndexSet::from_bits(out, &coded, Generator::Explicit(Vec::new()));
    set.generator = Generator::BlockCode {
        base: Box::new(b.generator.clone()),
        code: code.clone(),
    };
    Ok(set)
}

/// Recentre the longest gap-bounded run as a candidate syndetic pattern.
///
/// Returns `None` when no piecewise run exists within the gap budget.
pub fn syndetic_refine(set: &IndexSet, gap_budget: u64) -> Option<IndexSet> {
    let run = syndetic_report(set, gap_budget).piecewise?;
    let center = run.start + (run.end - run.start) / 2;
    let window = Window::new(run.start - center, run.end - center).ok()?;
    let members = set
        .members
        .iter()
        .filter(|&&k| run.start <= k && k <= run.end)
        .map(|k| k - center);
    Some(IndexSet::explicit(window, members))
}

pub(crate) fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
}
