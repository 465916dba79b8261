//! Fans of bounded Dyck paths: the zig-zag network whose glued powers count
//! them, brute-force enumeration, plane-partition and alternating-sequence
//! encodings, and the product formula for the unbounded case.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::network::{Edge, NetworkSpec, PlanarNetwork, ORACLE_CAPACITY};
use crate::partition::{Partition, SkewShape};
use crate::rational::{int, Rational};
use crate::reciprocity::Engine;
use crate::subset::SubsetIndex;

/// Height bound `r` for Dyck paths, or no bound at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeightBound {
    Bounded(usize),
    Unbounded,
}

impl HeightBound {
    pub fn allows(self, height: usize) -> bool {
        match self {
            HeightBound::Bounded(r) => height <= r,
            HeightBound::Unbounded => true,
        }
    }
}

impl fmt::Display for HeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightBound::Bounded(r) => write!(f, "{r}"),
            HeightBound::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// A path of `+1` / `-1` steps from height 0 back to height 0 that never
/// goes below 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    /// Heights at `x = 0, ..., 2n`.
    heights: Vec<usize>,
}

impl DyckPath {
    pub fn from_steps(steps: &[i8]) -> Result<Self> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        heights.push(0usize);
        let mut h: i64 = 0;
        for (x, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidFan(format!(
                    "step {x} is {s}, expected +1 or -1"
                )));
            }
            h += i64::from(s);
            if h < 0 {
                return Err(Error::InvalidFan(format!(
                    "path goes below zero after step {x}"
                )));
            }
            heights.push(h as usize);
        }
        if h != 0 {
            return Err(Error::InvalidFan(
                "path does not return to height zero".into(),
            ));
        }
        Ok(DyckPath { heights })
    }

    pub fn from_heights(heights: &[usize]) -> Result<Self> {
        if heights.first() != Some(&0) || heights.last() != Some(&0) {
            return Err(Error::InvalidFan(
                "heights must start and end at zero".into(),
            ));
        }
        if heights.windows(2).any(|w| w[0].abs_diff(w[1]) != 1) {
            return Err(Error::InvalidFan(
                "consecutive heights must differ by one".into(),
            ));
        }
        Ok(DyckPath {
            heights: heights.to_vec(),
        })
    }

    /// `UDUD...UD`, the lowest path of semilength `n`.
    pub fn lowest(n: usize) -> Self {
        DyckPath {
            heights: (0..=2 * n).map(|x| x % 2).collect(),
        }
    }

    pub fn semilength(&self) -> usize {
        self.heights.len() / 2
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn height_at(&self, x: usize) -> usize {
        self.heights[x]
    }

    pub fn steps(&self) -> Vec<i8> {
        self.heights
            .windows(2)
            .map(|w| if w[1] > w[0] { 1 } else { -1 })
            .collect()
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn is_bounded(&self, bound: HeightBound) -> bool {
        bound.allows(self.max_height())
    }

    /// Pointwise `self <= other`.
    pub fn is_below(&self, other: &DyckPath) -> bool {
        self.heights.len() == other.heights.len()
            && self.heights.iter().zip(&other.heights).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            write!(f, "{}", if s == 1 { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

/// `D_1 <= D_2 <= ... <= D_m`, all of one semilength.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckFan {
    semilength: usize,
    paths: Vec<DyckPath>,
}

impl DyckFan {
    pub fn new(semilength: usize, paths: Vec<DyckPath>) -> Result<Self> {
        if let Some(bad) = paths.iter().position(|p| p.semilength() != semilength) {
            return Err(Error::InvalidFan(format!(
                "path {} does not have semilength {semilength}",
                bad + 1
            )));
        }
        if let Some(bad) = paths.windows(2).position(|w| !w[0].is_below(&w[1])) {
            return Err(Error::InvalidFan(format!(
                "path {} is not below path {}",
                bad + 1,
                bad + 2
            )));
        }
        Ok(DyckFan { semilength, paths })
    }

    pub fn from_height_rows(rows: &[&[usize]]) -> Result<Self> {
        let paths = rows
            .iter()
            .map(|h| DyckPath::from_heights(h))
            .collect::<Result<Vec<_>>>()?;
        let semilength = paths.first().map_or(0, DyckPath::semilength);
        Self::new(semilength, paths)
    }

    pub fn semilength(&self) -> usize {
        self.semilength
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn is_bounded(&self, bound: HeightBound) -> bool {
        self.paths.iter().all(|p| p.is_bounded(bound))
    }
}

/// Sources `s1..`, middle vertices `v1..` and sinks `t1..`, `m + k` of each;
/// `s_i -> v_{i-1}, v_i` and `v_i -> t_i, t_{i+1}` where those exist; all
/// weights one.
pub fn build_dyck_network(m: usize, k: usize) -> Result<PlanarNetwork> {
    let size = m + k;
    if size == 0 {
        return Err(Error::InvalidShape(
            "the Dyck network needs m + k >= 1".into(),
        ));
    }
    let name = |prefix: &str, i: usize| format!("{prefix}{i}");
    let mut vertices = Vec::with_capacity(3 * size);
    for prefix in ["s", "v", "t"] {
        vertices.extend((1..=size).map(|i| name(prefix, i)));
    }
    let mut edges = Vec::new();
    for i in 1..=size {
        if i > 1 {
            edges.push(Edge::new(name("s", i), name("v", i - 1), Rational::one()));
        }
        edges.push(Edge::new(name("s", i), name("v", i), Rational::one()));
    }
    for i in 1..=size {
        edges.push(Edge::new(name("v", i), name("t", i), Rational::one()));
        if i < size {
            edges.push(Edge::new(name("v", i), name("t", i + 1), Rational::one()));
        }
    }
    NetworkSpec {
        vertices,
        edges,
        sources: (1..=size).map(|i| name("s", i)).collect(),
        sinks: (1..=size).map(|i| name("t", i)).collect(),
    }
    .build()
}

fn dyck_engine(m: usize, k: usize) -> Result<(Engine, SubsetIndex)> {
    let net = build_dyck_network(m, k)?;
    let engine = Engine::new(&net).named(format!("dyck(m={m},k={k})"));
    let first = SubsetIndex::initial(m, m + k)?;
    Ok((engine, first))
}

/// `d(m, k; n)`: the number of m-fans of `(2k+1)`-bounded Dyck paths of
/// semilength `n`, extended to negative `n`.
///
/// The network needs `m + k >= 1`; `m = k = 0` is the constant 1.
pub fn d_value(m: usize, k: usize, n: i64) -> Result<Rational> {
    if m + k == 0 {
        return Ok(Rational::one());
    }
    let (engine, first) = dyck_engine(m, k)?;
    engine.f_at(&first, &first, n)
}

/// All Dyck paths of semilength `n` within the bound, sorted by height
/// sequence.
pub fn enumerate_dyck_paths(n: usize, bound: HeightBound) -> Vec<DyckPath> {
    fn go(n: usize, bound: HeightBound, heights: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        let x = heights.len() - 1;
        let h = heights[x];
        if x == 2 * n {
            if h == 0 {
                out.push(DyckPath {
                    heights: heights.clone(),
                });
            }
            return;
        }
        let remaining = 2 * n - x;
        if h > 0 {
            heights.push(h - 1);
            go(n, bound, heights, out);
            heights.pop();
        }
        if h < remaining && bound.allows(h + 1) {
            heights.push(h + 1);
            go(n, bound, heights, out);
            heights.pop();
        }
    }
    let mut out = Vec::new();
    go(n, bound, &mut vec![0], &mut out);
    out
}

fn multichoose_u128(n: usize, k: usize) -> u128 {
    // C(n + k - 1, k), saturating
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = match acc.checked_mul(n as u128 + i - 1) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// All m-fans of `bound`-bounded Dyck paths of semilength `n`.
pub fn enumerate_fans(m: usize, bound: HeightBound, n: usize) -> Result<Vec<DyckFan>> {
    let paths = enumerate_dyck_paths(n, bound);
    let candidates = multichoose_u128(paths.len(), m);
    if candidates > ORACLE_CAPACITY {
        return Err(Error::CapacityExceeded {
            requested: candidates,
            limit: ORACLE_CAPACITY,
        });
    }
    let below: Vec<Vec<bool>> = paths
        .iter()
        .map(|a| paths.iter().map(|b| a.is_below(b)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn go(
        m: usize,
        n: usize,
        paths: &[DyckPath],
        below: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<DyckFan>,
    ) {
        if chosen.len() == m {
            out.push(DyckFan {
                semilength: n,
                paths: chosen.iter().map(|&i| paths[i].clone()).collect(),
            });
            return;
        }
        let start = chosen.last().copied().unwrap_or(0);
        for next in start..paths.len() {
            if chosen.last().is_none_or(|&prev| below[prev][next]) {
                chosen.push(next);
                go(m, n, paths, below, chosen, out);
                chosen.pop();
            }
        }
    }
    go(m, n, &paths, &below, &mut chosen, &mut out);
    Ok(out)
}

/// A filling of a (skew) shape, weakly decreasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    shape: SkewShape,
    /// One row per row of the outer shape, covering columns
    /// `inner_i + 1 ..= outer_i`.
    rows: Vec<Vec<u64>>,
}

impl PlanePartition {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u64>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len() {
            return Err(Error::InvalidShape(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 1;
            if row.len() != outer.part(i) - inner.part(i) {
                return Err(Error::InvalidShape(format!(
                    "row {i} has {} entries for shape {shape}",
                    row.len()
                )));
            }
        }
        let pp = PlanePartition { shape, rows };
        for (i, j) in pp.shape.cells() {
            let v = pp.entry(i, j).expect("cell in shape");
            let right = pp.entry(i, j + 1);
            let down = pp.entry(i + 1, j);
            if right.is_some_and(|r| r > v) || down.is_some_and(|d| d > v) {
                return Err(Error::InvalidShape(format!(
                    "entries increase away from cell ({i},{j})"
                )));
            }
        }
        Ok(pp)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry at 1-based `(row, col)`, if that cell is in the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<u64> {
        let row = self.rows.get(i.checked_sub(1)?)?;
        let start = self.shape.inner().part(i) + 1;
        if j < start {
            return None;
        }
        row.get(j - start).copied()
    }

    /// Entries read in order of increasing `x = n + j - i`, then increasing
    /// height `y = n - i - j`, where `n - 1` is the length of the first row.
    pub fn reading_word(&self) -> Vec<u64> {
        let n = self.shape.outer().part(1) + 1;
        let mut cells: Vec<(usize, usize, u64)> = self
            .shape
            .cells()
            .into_iter()
            .map(|(i, j)| {
                (
                    n + j - i,
                    n - i - j,
                    self.entry(i, j).expect("cell in shape"),
                )
            })
            .collect();
        cells.sort_by_key(|&(x, y, _)| (x, y));
        cells.into_iter().map(|(_, _, v)| v).collect()
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (idx, row) in self.rows.iter().enumerate() {
            let indent = self.shape.inner().part(idx + 1) * (width + 1);
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}{}", " ".repeat(indent), cells.join(" "))?;
        }
        Ok(())
    }
}

/// `δ_n`, or `δ_n / δ_{n-r+1}` under a height bound `r`.
pub fn fan_shape(n: usize, bound: HeightBound) -> Result<SkewShape> {
    let outer = Partition::staircase(n);
    match bound {
        HeightBound::Unbounded => Ok(SkewShape::straight(outer)),
        HeightBound::Bounded(0) if n > 0 => Err(Error::InvalidFan(
            "no Dyck path of positive semilength has height 0".into(),
        )),
        HeightBound::Bounded(r) => {
            let inner = Partition::staircase((n + 1).saturating_sub(r));
            SkewShape::new(outer, inner)
        }
    }
}

/// The cell `(i, j)` of `δ_n` sits above lattice point
/// `(x, y) = (n + j - i, n - i - j)`; its entry counts the fan paths passing
/// at or below that point.
pub fn fan_to_plane_partition(fan: &DyckFan, bound: HeightBound) -> Result<PlanePartition> {
    if !fan.is_bounded(bound) {
        return Err(Error::InvalidFan(format!(
            "fan exceeds the height bound {bound}"
        )));
    }
    let n = fan.semilength();
    let shape = fan_shape(n, bound)?;
    let outer = shape.outer().clone();
    let inner = shape.inner().clone();
    let rows = (1..=outer.len())
        .map(|i| {
            ((inner.part(i) + 1)..=outer.part(i))
                .map(|j| {
                    let (x, y) = (n + j - i, n - i - j);
                    fan.paths().iter().filter(|p| p.height_at(x) <= y).count() as u64
                })
                .collect()
        })
        .collect();
    PlanePartition::new(shape, rows)
}

/// Inverse of [`fan_to_plane_partition`] for an `m`-fan.
pub fn plane_partition_to_fan(pp: &PlanePartition, m: usize) -> Result<DyckFan> {
    let n = pp.shape().outer().part(1) + 1;
    if pp.rows().iter().flatten().any(|&v| v > m as u64) {
        return Err(Error::InvalidFan(format!(
            "entries exceed the fan size {m}"
        )));
    }
    let n = if pp.shape().outer().is_empty() && pp.shape().inner().is_empty() {
        n.min(1)
    } else {
        n
    };
    let mut below_counts = vec![vec![0usize; m + 1]; 2 * n + 1];
    for (i, j) in pp.shape().cells() {
        let v = pp.entry(i, j).expect("cell in shape") as usize;
        let x = n + j - i;
        // the cell counts towards every path index p > v
        for count in below_counts[x].iter_mut().skip(v + 1) {
            *count += 1;
        }
    }
    let paths = (1..=m)
        .map(|p| {
            let heights: Vec<usize> = (0..=2 * n)
                .map(|x| x % 2 + 2 * below_counts[x][p])
                .collect();
            DyckPath::from_heights(&heights)
        })
        .collect::<Result<Vec<_>>>()?;
    DyckFan::new(n, paths)
}

/// `∏_{1 <= i < j <= n} (2m + i + j - 1) / (i + j - 1)`.
pub fn proctor_count(n: usize, m: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=n {
        for j in (i + 1)..=n {
            acc *= Rational::new(
                ((2 * m + i + j - 1) as i64).into(),
                ((i + j - 1) as i64).into(),
            );
        }
    }
    acc
}

/// Number of sequences `a_1 <= a_2 >= a_3 <= ... ` of length `2n - 3` with
/// entries in `0..=m`, by explicit enumeration.
pub fn alternating_sequence_count(m: usize, n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidShape(
            "alternating sequences need n >= 2".into(),
        ));
    }
    let len = 2 * n - 3;
    let requested = (m as u128 + 1).checked_pow(len as u32).unwrap_or(u128::MAX);
    if requested > ORACLE_CAPACITY {
        return Err(Error::CapacityExceeded {
            requested,
            limit: ORACLE_CAPACITY,
        });
    }
    let mut count: u64 = 0;
    let mut seq = vec![0usize; len];
    loop {
        let ok = seq.windows(2).enumerate().all(|(t, w)| {
            if t % 2 == 0 {
                w[0] <= w[1]
            } else {
                w[0] >= w[1]
            }
        });
        if ok {
            count += 1;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(int(count as i64));
            }
            if seq[pos] < m {
                seq[pos] += 1;
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckRecord {
    pub n: u64,
    /// `d(m, k; -n)` by running the recurrence backwards.
    pub backward: Rational,
    /// `d(m, k; -n)` by powers of the inverse compound matrix.
    pub inverse_power: Rational,
    /// `d(k, m; n + 1)` by compound powers on the swapped network.
    pub swapped: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckReport {
    pub m: usize,
    pub k: usize,
    pub records: Vec<DyckRecord>,
}

impl DyckReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}

impl fmt::Display for DyckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_rational;
        writeln!(
            f,
            "d(m,k;-n) = d(k,m;n+1) with m = {}, k = {}",
            self.m, self.k
        )?;
        let rows: Vec<[String; 4]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    format_rational(&r.backward),
                    format_rational(&r.swapped),
                    if r.pass { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let header = ["n", "d(m,k;-n)", "d(k,m;n+1)", "status"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        for row in std::iter::once(&header).chain(rows.iter()) {
            let line: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Compares `d(m, k; -n)` with `d(k, m; n + 1)` for `n = 1..=n_max`.
pub fn check_dyck_reciprocity(m: usize, k: usize, n_max: u64) -> Result<DyckReport> {
    let (engine, first) = dyck_engine(m, k)?;
    let recurrence = engine.f_recurrence(&first, &first)?;
    let backward = recurrence.backward_terms(n_max as usize)?;
    let (swapped_engine, swapped_first) = dyck_engine(k, m)?;
    let mut records = Vec::with_capacity(n_max as usize);
    for (n, backward) in (1..=n_max).zip(backward) {
        let inverse_power = engine.f_negative(&first, &first, n)?;
        let swapped = swapped_engine.f_value(&swapped_first, &swapped_first, n + 1)?;
        records.push(DyckRecord {
            n,
            pass: backward == swapped && inverse_power == swapped,
            backward,
            inverse_power,
            swapped,
        });
    }
    Ok(DyckReport { m, k, records })
}
