//! Permutations of `{0..r-1}` in one-line form.
//!
//! Internally everything is 0-indexed. Cycle notation, both printed and parsed,
//! is 1-indexed with fixed points written out: `(1 4 5 3)(2)(6 7)`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Cycle type of a permutation: cycle lengths sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleProfile {
    lengths: Vec<usize>,
}

impl CycleProfile {
    pub fn cycle_count(&self) -> usize {
        self.lengths.len()
    }

    /// Cycle lengths, largest first.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of points moved or fixed, i.e. the sum of the lengths.
    pub fn degree(&self) -> usize {
        self.lengths.iter().sum()
    }
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r).collect(),
        }
    }

    /// The full cycle `i -> i+1 (mod r)`, written `(1 2 ... r)`.
    pub fn full_cycle(r: usize) -> Self {
        Permutation {
            images: (0..r).map(|i| (i + 1) % r).collect(),
        }
    }

    /// Product of disjoint consecutive cycles with the given lengths:
    /// `(0..a-1)(a..a+b-1)...`
    pub fn consecutive_cycles(lengths: &[usize]) -> Self {
        let mut images = Vec::with_capacity(lengths.iter().sum());
        let mut offset = 0;
        for &len in lengths {
            images.extend((0..len).map(|i| offset + (i + 1) % len));
            offset += len;
        }
        Permutation { images }
    }

    /// Validates a one-line form.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{}",
                    images.len()
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{0..r-1}` from 0-indexed cycles; unlisted points are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], r: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..r).collect();
        let mut used = vec![false; r];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= r || used[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "element {} repeated or out of range 1..={r}",
                        x + 1
                    )));
                }
                used[x] = true;
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation such as `(1 4 5 3)(2)(6 7)`.
    ///
    /// Elements may be separated by spaces or commas; when `r <= 9` the compact
    /// form `(1453)(2)(67)` is also accepted.
    pub fn parse_cycles(text: &str, r: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let inner = body[..close].trim();
            let tokens: Vec<&str> = if inner.contains([' ', ',']) {
                inner.split([' ', ',']).filter(|t| !t.is_empty()).collect()
            } else if r <= 9 {
                inner
                    .char_indices()
                    .map(|(i, c)| &inner[i..i + c.len_utf8()])
                    .collect()
            } else {
                vec![inner]
            };
            if tokens.is_empty() {
                return Err(Error::Parse("empty cycle".into()));
            }
            let cycle = tokens
                .iter()
                .map(|t| match t.parse::<usize>() {
                    Ok(x) if x >= 1 => Ok(x - 1),
                    _ => Err(Error::Parse(format!("bad element {t:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles, r)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ q)(i) = self(q(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.len() != q.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: q.len(),
            });
        }
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `tau ∘ self ∘ tau⁻¹`
    pub fn conjugate_by(&self, tau: &Permutation) -> Result<Permutation> {
        tau.compose(self)?.compose(&tau.inverse())
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_profile(&self) -> CycleProfile {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleProfile { lengths }
    }

    pub fn cycle_count(&self) -> usize {
        count_cycles(&self.images, &mut vec![false; self.len()]) as usize
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Number of cycles of the one-line form `images`. `seen` must have the same
/// length and is left dirty.
#[inline]
pub(crate) fn count_cycles(images: &[usize], seen: &mut [bool]) -> u32 {
    seen.fill(false);
    let mut count = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = images[j];
        }
    }
    count
}

/// Number of cycles of `i -> outer[inner[i]]`.
#[inline]
pub(crate) fn count_cycles_composed(outer: &[usize], inner: &[usize], seen: &mut [bool]) -> u32 {
    seen.fill(false);
    let mut count = 0;
    for start in 0..inner.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = outer[inner[j]];
        }
    }
    count
}

/// [`count_cycles`] for `images.len() <= 64`, tracking visited points in a bitmask.
#[inline]
pub(crate) fn count_cycles_mask(images: &[usize]) -> u32 {
    let full = full_mask(images.len());
    let mut seen = 0u64;
    let mut count = 0;
    while seen != full {
        let start = (!seen).trailing_zeros() as usize;
        count += 1;
        let mut j = start;
        loop {
            seen |= 1 << j;
            j = images[j];
            if j == start {
                break;
            }
        }
    }
    count
}

/// [`count_cycles_composed`] for `inner.len() <= 64`.
#[inline]
pub(crate) fn count_cycles_composed_mask(outer: &[usize], inner: &[usize]) -> u32 {
    let full = full_mask(inner.len());
    let mut seen = 0u64;
    let mut count = 0;
    while seen != full {
        let start = (!seen).trailing_zeros() as usize;
        count += 1;
        let mut j = start;
        loop {
            seen |= 1 << j;
            j = outer[inner[j]];
            if j == start {
                break;
            }
        }
    }
    count
}

#[inline]
fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Whether the orbit of 0 under the group generated by `gens` covers `0..r`.
/// `seen` and `stack` are scratch buffers.
pub(crate) fn orbit_is_full(
    gens: &[&[usize]],
    r: usize,
    seen: &mut Vec<bool>,
    stack: &mut Vec<usize>,
) -> bool {
    if r == 0 {
        return true;
    }
    seen.clear();
    seen.resize(r, false);
    stack.clear();
    seen[0] = true;
    stack.push(0);
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        // Finite group: closing under the generators alone reaches the full orbit.
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == r
}

/// True iff the group generated by `gens` acts transitively on `{0..r-1}`.
pub fn is_transitive(gens: &[Permutation], r: usize) -> Result<bool> {
    for g in gens {
        if g.len() != r {
            return Err(Error::LengthMismatch {
                left: g.len(),
                right: r,
            });
        }
    }
    let slices: Vec<&[usize]> = gens.iter().map(|g| g.images()).collect();
    Ok(orbit_is_full(&slices, r, &mut Vec::new(), &mut Vec::new()))
}

/// Heap's algorithm over `buf[start..]`, calling `visit` with the whole buffer
/// for each of the `(len - start)!` arrangements. `buf[..start]` is untouched.
pub fn heap_visit<T, F: FnMut(&[T])>(buf: &mut [T], start: usize, mut visit: F) {
    let n = buf.len().saturating_sub(start);
    visit(buf);
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i.is_multiple_of(2) { 0 } else { counters[i] };
            buf.swap(start + j, start + i);
            visit(buf);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// Stream of all `r!` permutations of `{0..r-1}` in Heap's order, starting from
/// the identity.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Vec<usize>,
    counters: Vec<usize>,
    index: usize,
    started: bool,
}

pub fn permutations(r: usize) -> Permutations {
    Permutations {
        current: (0..r).collect(),
        counters: vec![0; r],
        index: 1,
        started: false,
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if !self.started {
            self.started = true;
            return Some(Permutation {
                images: self.current.clone(),
            });
        }
        let n = self.current.len();
        while self.index < n {
            let i = self.index;
            if self.counters[i] < i {
                let j = if i.is_multiple_of(2) {
                    0
                } else {
                    self.counters[i]
                };
                self.current.swap(j, i);
                self.counters[i] += 1;
                self.index = 1;
                return Some(Permutation {
                    images: self.current.clone(),
                });
            }
            self.counters[i] = 0;
            self.index += 1;
        }
        None
    }
}
