//! Brute-force generating polynomials: sum `m^cycles(σ) · n^cycles(ξσ)` over
//! every `σ ∈ Sym_r`.
//!
//! This is the ground truth the polynomial-time methods are checked against.
//! Work is `O(r · r!)`, so requests are guarded by a configurable ceiling.
//! `Sym_r` is split into `r` shards by the image of element 0; shards run in
//! parallel on a rayon pool and are merged by exact addition, so the result
//! does not depend on the thread count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{
    count_cycles, count_cycles_composed, count_cycles_composed_mask, count_cycles_mask, heap_visit,
    orbit_is_full, Permutation,
};
use crate::poly::BivarPoly;
use crate::scalar::Coefficient;
use crate::table::CoeffTable;

/// Largest `r` enumerated without `force`.
pub const DEFAULT_CEILING: usize = 13;

/// Controls for the brute-force enumerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub ceiling: usize,
    /// Enumerate beyond the ceiling anyway.
    pub force: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            ceiling: DEFAULT_CEILING,
            force: false,
            threads: None,
        }
    }
}

impl EnumOptions {
    pub fn with_threads(threads: usize) -> Self {
        EnumOptions {
            threads: Some(threads),
            ..Self::default()
        }
    }

    pub fn check(&self, r: usize) -> Result<()> {
        if r > self.ceiling && !self.force {
            return Err(Error::limit(r, self.ceiling));
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(job()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
                Ok(pool.install(job))
            }
        }
    }
}

/// Face lengths of the fixed permutation `ξ`: `[r]` for one face, `[a, b]` for two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceShape {
    cycle_lengths: Vec<usize>,
}

impl FaceShape {
    pub fn new(cycle_lengths: Vec<usize>) -> Result<Self> {
        if cycle_lengths.is_empty() || cycle_lengths.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "face lengths must be a nonempty list of positive integers, got {cycle_lengths:?}"
            )));
        }
        Ok(FaceShape { cycle_lengths })
    }

    pub fn one_face(r: usize) -> Result<Self> {
        Self::new(vec![r])
    }

    pub fn two_face(a: usize, b: usize) -> Result<Self> {
        Self::new(vec![a, b])
    }

    pub fn darts(&self) -> usize {
        self.cycle_lengths.iter().sum()
    }

    pub fn faces(&self) -> usize {
        self.cycle_lengths.len()
    }

    pub fn cycle_lengths(&self) -> &[usize] {
        &self.cycle_lengths
    }

    /// The canonical `ξ`: consecutive disjoint cycles `(0..a-1)(a..a+b-1)...`.
    pub fn xi(&self) -> Permutation {
        Permutation::consecutive_cycles(&self.cycle_lengths)
    }
}

/// Dense `(e, v)` histogram with machine-word counts; `(r-1)!` per shard fits
/// in `u64` for every feasible `r`.
#[derive(Clone, Debug)]
pub(crate) struct Histogram {
    side: usize,
    counts: Vec<u64>,
}

impl Histogram {
    fn new(r: usize) -> Self {
        let side = r + 1;
        Histogram {
            side,
            counts: vec![0; side * side],
        }
    }

    #[inline]
    fn bump(&mut self, e: u32, v: u32) {
        self.counts[e as usize * self.side + v as usize] += 1;
    }

    fn merge(mut self, other: Histogram) -> Histogram {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    pub(crate) fn into_poly<C: Coefficient>(self) -> BivarPoly<C> {
        let side = self.side;
        BivarPoly::from_terms(
            self.counts
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c > 0)
                .map(|(idx, c)| {
                    (
                        (idx / side) as u32,
                        (idx % side) as u32,
                        C::from_u64_exact(c),
                    )
                }),
        )
    }
}

/// Which permutations to include.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Selection {
    All,
    /// Only `σ` for which `⟨ξ, σ⟩` acts transitively.
    Transitive,
}

/// Shard `first` of `Sym_r`: all `σ` with `σ(0) = first`.
fn enumerate_shard(xi: &[usize], first: usize, selection: Selection) -> Histogram {
    let r = xi.len();
    let mut hist = Histogram::new(r);
    let mut sigma = Vec::with_capacity(r);
    sigma.push(first);
    sigma.extend((0..r).filter(|&x| x != first));
    let mut seen = vec![false; r];
    let mut orbit_seen = Vec::with_capacity(r);
    let mut stack = Vec::with_capacity(r);
    let small = r <= 64;
    heap_visit(&mut sigma, 1, |s| {
        if selection == Selection::Transitive
            && !orbit_is_full(&[xi, s], r, &mut orbit_seen, &mut stack)
        {
            return;
        }
        let (edges, vertices) = if small {
            (count_cycles_mask(s), count_cycles_composed_mask(xi, s))
        } else {
            (
                count_cycles(s, &mut seen),
                count_cycles_composed(xi, s, &mut seen),
            )
        };
        hist.bump(edges, vertices);
    });
    hist
}

pub(crate) fn enumerate_histogram(
    shape: &FaceShape,
    selection: Selection,
    opts: &EnumOptions,
) -> Result<Histogram> {
    let r = shape.darts();
    opts.check(r)?;
    let xi = shape.xi();
    let xi = xi.images();
    opts.run(|| {
        (0..r)
            .into_par_iter()
            .map(|first| enumerate_shard(xi, first, selection))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Histogram::new(r), Histogram::merge)
    })
}

/// `P_r(m, n)` by exhaustive enumeration with `ξ = (1 2 ... r)`.
pub fn enumerate_p<C: Coefficient>(r: usize, opts: &EnumOptions) -> Result<BivarPoly<C>> {
    enumerate_p_multi(&FaceShape::one_face(r)?, opts)
}

/// The generating polynomial over all of `Sym_r` (connected or not) for a
/// `ξ` with the given face lengths.
pub fn enumerate_p_multi<C: Coefficient>(
    shape: &FaceShape,
    opts: &EnumOptions,
) -> Result<BivarPoly<C>> {
    Ok(enumerate_histogram(shape, Selection::All, opts)?.into_poly())
}

/// Coefficient table of the one-face (`faces = 1`) or two-face (`faces = 2`)
/// generating polynomial, both read off brute-force enumeration.
pub fn coefficient_table(r: usize, faces: usize, opts: &EnumOptions) -> Result<CoeffTable> {
    let poly = match faces {
        1 => enumerate_p::<BigInt>(r, opts)?,
        2 => crate::two_face::connected_two_face_oracle::<BigInt>(r, opts)?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "faces must be 1 or 2, got {faces}"
            )))
        }
    };
    Ok(CoeffTable::from_poly(r, &poly))
}

/// Hypermap counts grouped by genus `g = (r + 2 - e - v - faces) / 2`.
pub fn genus_tabulate(r: usize, faces: usize, opts: &EnumOptions) -> Result<BTreeMap<u32, BigInt>> {
    let table = coefficient_table(r, faces, opts)?;
    genus_from_table(&table, faces)
}

/// Groups a coefficient table by genus, rejecting any row that breaks Euler's relation.
pub fn genus_from_table(table: &CoeffTable, faces: usize) -> Result<BTreeMap<u32, BigInt>> {
    let mut out = BTreeMap::new();
    for row in table.rows() {
        let cells = row.e as i64 + row.v as i64 + faces as i64;
        let twice_genus = row.r as i64 + 2 - cells;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(Error::EulerViolation {
                r: row.r,
                e: row.e,
                v: row.v,
                faces,
            });
        }
        *out.entry((twice_genus / 2) as u32)
            .or_insert_with(|| BigInt::from(0)) += &row.count;
    }
    Ok(out)
}
