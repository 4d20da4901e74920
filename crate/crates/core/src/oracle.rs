//! Word-level brute force for the abelian notions: minimum abelian periods,
//! abelian powers, abelian repetitions. Everything here is a reference
//! implementation driven by prefix Parikh sums; the closed forms elsewhere in
//! the crate are tested against these scans and share no code with them.

use crate::scan;
use crate::words::Letter;
use crate::{Error, Result};

/// Letter counts of a finite binary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    pub count_a: u64,
    pub count_b: u64,
}

impl ParikhVector {
    pub fn of(word: &[Letter]) -> Self {
        let count_a = word.iter().filter(|l| **l == Letter::A).count() as u64;
        ParikhVector {
            count_a,
            count_b: word.len() as u64 - count_a,
        }
    }

    /// Total letter count.
    pub fn norm(&self) -> u64 {
        self.count_a + self.count_b
    }

    /// Strict containment: componentwise `≤` with strictly smaller norm.
    pub fn is_contained_in(&self, other: &ParikhVector) -> bool {
        self.norm() < other.norm() && self.count_a <= other.count_a && self.count_b <= other.count_b
    }
}

/// Prefix sums of `a`-counts, giving the Parikh vector of any slice in O(1).
#[derive(Debug, Clone)]
pub struct PrefixCounts {
    a: Vec<u32>,
}

impl PrefixCounts {
    pub fn new(word: &[Letter]) -> Self {
        let mut a = Vec::with_capacity(word.len() + 1);
        a.push(0u32);
        let mut acc = 0u32;
        for l in word {
            acc += (*l == Letter::A) as u32;
            a.push(acc);
        }
        PrefixCounts { a }
    }

    pub fn len(&self) -> usize {
        self.a.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exponent of the longest abelian power of period `m` at `pos`,
    /// against the word these counts were built from.
    pub fn max_power_at(&self, pos: usize, m: u64) -> u64 {
        let m = m as usize;
        if m == 0 || pos + m > self.len() {
            return 0;
        }
        max_power_at_counts(self, self.len(), pos, m)
    }

    /// Parikh vector of `word[i..j)`.
    pub fn slice(&self, i: usize, j: usize) -> ParikhVector {
        debug_assert!(i <= j && j < self.a.len());
        let count_a = (self.a[j] - self.a[i]) as u64;
        ParikhVector {
            count_a,
            count_b: (j - i) as u64 - count_a,
        }
    }
}

/// Whether `m` is an abelian period of `word`: some decomposition
/// `head · block^q · tail` with all blocks of length `m` sharing one Parikh
/// vector, `q ≥ 1`, and head/tail Parikh vectors strictly contained in it.
/// Head and tail are shorter than `m` by containment.
pub fn is_abelian_period(word: &[Letter], m: u64) -> bool {
    has_decomposition(&PrefixCounts::new(word), word.len(), m as usize)
}

fn has_decomposition(counts: &PrefixCounts, n: usize, m: usize) -> bool {
    if m == 0 || n == 0 {
        return false;
    }
    'head: for h in 0..m.min(n + 1) {
        let q = (n - h) / m;
        if q < 1 {
            continue;
        }
        let block = counts.slice(h, h + m);
        for b in 1..q {
            if counts.slice(h + b * m, h + (b + 1) * m) != block {
                continue 'head;
            }
        }
        if counts.slice(0, h).is_contained_in(&block)
            && counts.slice(h + q * m, n).is_contained_in(&block)
        {
            return true;
        }
    }
    false
}

/// Smallest abelian period of a nonempty word. At most `|word|`, since the
/// whole word is a single block with empty head and tail.
///
/// ```
/// use sturmian_abelian::oracle::min_abelian_period;
/// use sturmian_abelian::words::parse_word;
///
/// // a·ba·ab·ab·a: blocks of Parikh vector (1,1)
/// let w = parse_word("abaababa")?;
/// assert_eq!(min_abelian_period(&w), Ok(2));
/// # Ok::<(), sturmian_abelian::Error>(())
/// ```
pub fn min_abelian_period(word: &[Letter]) -> Result<u64> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let counts = PrefixCounts::new(word);
    let n = word.len();
    for m in 1..=n {
        if has_decomposition(&counts, n, m) {
            return Ok(m as u64);
        }
    }
    unreachable!("m = |word| always yields a decomposition")
}

/// Exponent of the longest abelian power of period `m` starting at `pos`:
/// the number of consecutive length-`m` blocks with equal Parikh vectors.
/// Zero when not even one block fits; one is the degenerated power.
pub fn max_power_at(word: &[Letter], pos: usize, m: u64) -> u64 {
    PrefixCounts::new(word).max_power_at(pos, m)
}

fn max_power_at_counts(counts: &PrefixCounts, n: usize, pos: usize, m: usize) -> u64 {
    let block = counts.slice(pos, pos + m);
    let mut k = 1u64;
    while pos + (k as usize + 1) * m <= n
        && counts.slice(pos + k as usize * m, pos + (k as usize + 1) * m) == block
    {
        k += 1;
    }
    k
}

/// Maximum over all positions of [`max_power_at`].
pub fn max_power_exponent(word: &[Letter], m: u64) -> u64 {
    let n = word.len();
    let mu = m as usize;
    if mu == 0 || n < mu {
        return 0;
    }
    let counts = PrefixCounts::new(word);
    scan::max_over(0..n - mu + 1, |pos| {
        max_power_at_counts(&counts, n, pos, mu)
    })
    .unwrap_or(0)
}

/// Shape of an abelian repetition: `head · block^count · tail` with
/// `count ≥ 2` full blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Repetition {
    pub period: u64,
    pub head_len: u64,
    pub block_count: u64,
    pub tail_len: u64,
}

impl Repetition {
    pub fn len(&self) -> u64 {
        self.head_len + self.block_count * self.period + self.tail_len
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Longest prefix of `word` that is an abelian repetition of period `m`
/// (head of length `< m`, at least two full blocks, tail of length `< m`).
pub fn longest_prefix_repetition(word: &[Letter], m: u64) -> Option<Repetition> {
    longest_repetition_from(&PrefixCounts::new(word), word.len(), 0, m as usize)
}

/// Longest abelian repetition of period `m` starting anywhere in `word`,
/// returned with its start position; ties resolved towards the leftmost.
pub fn longest_repetition(word: &[Letter], m: u64) -> Option<(usize, Repetition)> {
    let counts = PrefixCounts::new(word);
    let n = word.len();
    let mut best: Option<(usize, Repetition)> = None;
    for start in 0..n {
        if let Some(rep) = longest_repetition_from(&counts, n, start, m as usize) {
            if best.as_ref().is_none_or(|(_, b)| rep.len() > b.len()) {
                best = Some((start, rep));
            }
        }
    }
    best
}

/// Longest repetition of period `m` whose decomposition starts at `start`.
fn longest_repetition_from(
    counts: &PrefixCounts,
    n: usize,
    start: usize,
    m: usize,
) -> Option<Repetition> {
    if m == 0 || start >= n {
        return None;
    }
    let mut best: Option<Repetition> = None;
    for h in 0..m.min(n - start) {
        let first = start + h;
        if first + 2 * m > n {
            break;
        }
        let block = counts.slice(first, first + m);
        if !counts.slice(start, first).is_contained_in(&block) {
            continue;
        }
        let mut q = 1u64;
        while first + (q as usize + 1) * m <= n
            && counts.slice(first + q as usize * m, first + (q as usize + 1) * m) == block
        {
            q += 1;
        }
        if q < 2 {
            continue;
        }
        // Tail: the longest extension (< m) whose Parikh vector stays inside
        // the block's; containment is monotone in the tail length.
        let after = first + q as usize * m;
        let mut t = 0usize;
        while t + 1 < m
            && after + t < n
            && counts.slice(after, after + t + 1).is_contained_in(&block)
        {
            t += 1;
        }
        let rep = Repetition {
            period: m as u64,
            head_len: h as u64,
            block_count: q,
            tail_len: t as u64,
        };
        if best.as_ref().is_none_or(|b| rep.len() > b.len()) {
            best = Some(rep);
        }
    }
    best
}

/// Checks one specific decomposition shape against the word.
pub fn is_repetition_at(word: &[Letter], start: usize, rep: &Repetition) -> bool {
    let n = word.len();
    let m = rep.period as usize;
    let end = start + rep.len() as usize;
    if m == 0
        || rep.block_count < 2
        || end > n
        || rep.head_len >= rep.period
        || rep.tail_len >= rep.period
    {
        return false;
    }
    let counts = PrefixCounts::new(word);
    let first = start + rep.head_len as usize;
    let block = counts.slice(first, first + m);
    for b in 1..rep.block_count as usize {
        if counts.slice(first + b * m, first + (b + 1) * m) != block {
            return false;
        }
    }
    counts.slice(start, first).is_contained_in(&block)
        && counts
            .slice(first + rep.block_count as usize * m, end)
            .is_contained_in(&block)
}
