//! Skew Schur functions evaluated at repeated variable blocks `z^n` through
//! the grid network, their negative extension, and related symmetric
//! function checks.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::network::{Edge, NetworkSpec, PlanarNetwork, ORACLE_CAPACITY};
use crate::partition::{Partition, SkewShape};
use crate::rational::{format_rational, int, pow_i64, sign_power, Rational};
use crate::reciprocity::Engine;
use crate::subset::SubsetIndex;

/// `z = (z_1, ..., z_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EvalPoint {
    values: Vec<Rational>,
}

impl EvalPoint {
    pub fn new(values: Vec<Rational>) -> Self {
        EvalPoint { values }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        EvalPoint {
            values: values.iter().map(|&v| int(v)).collect(),
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `z_rev = (z_k, ..., z_1)`.
    pub fn rev(&self) -> EvalPoint {
        EvalPoint {
            values: self.values.iter().rev().cloned().collect(),
        }
    }

    /// `z^n`: the block `z_1, ..., z_k` written `n` times.
    pub fn repeated(&self, n: usize) -> EvalPoint {
        EvalPoint {
            values: (0..n).flat_map(|_| self.values.iter().cloned()).collect(),
        }
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", values.join(","))
    }
}

/// Weight of a grid edge before instantiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightTag {
    One,
    /// `z_c` for column `c` (1-based).
    Column(usize),
}

/// `λ_1 + ℓ(λ)` horizontal tracks crossing `k` columns; in column `c` each
/// track may climb to the next one along an edge tagged `z_c`.
///
/// Track `r` runs `s{r} -> g{r}_1 -> ... -> g{r}_k -> t{r}`; the climbing
/// edges are `g{r}_c -> g{r+1}_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurGrid {
    tracks: usize,
    columns: usize,
    vertices: Vec<String>,
    edges: Vec<(String, String, WeightTag)>,
}

impl SchurGrid {
    pub fn tracks(&self) -> usize {
        self.tracks
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn tagged_edges(&self) -> &[(String, String, WeightTag)] {
        &self.edges
    }

    pub fn instantiate(&self, z: &EvalPoint) -> Result<PlanarNetwork> {
        if z.len() != self.columns {
            return Err(Error::DimensionMismatch(format!(
                "grid has {} columns but z has {} values",
                self.columns,
                z.len()
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|(from, to, tag)| {
                let weight = match tag {
                    WeightTag::One => Rational::one(),
                    WeightTag::Column(c) => z.values()[c - 1].clone(),
                };
                Edge::new(from.clone(), to.clone(), weight)
            })
            .collect();
        NetworkSpec {
            vertices: self.vertices.clone(),
            edges,
            sources: (1..=self.tracks).map(|r| format!("s{r}")).collect(),
            sinks: (1..=self.tracks).map(|r| format!("t{r}")).collect(),
        }
        .build()
    }
}

/// Tracks needed for shapes inside `λ`: `λ_1 + ℓ(λ)`, at least one.
pub fn schur_tracks(lambda: &Partition) -> usize {
    (lambda.part(1) + lambda.len()).max(1)
}

pub fn build_schur_network(lambda: &Partition, k: usize) -> Result<SchurGrid> {
    if k == 0 {
        return Err(Error::InvalidShape(
            "the grid needs at least one column".into(),
        ));
    }
    let tracks = schur_tracks(lambda);
    let g = |r: usize, c: usize| format!("g{r}_{c}");
    let mut vertices = Vec::with_capacity(tracks * (k + 2));
    let mut edges = Vec::new();
    for r in 1..=tracks {
        vertices.push(format!("s{r}"));
        vertices.extend((1..=k).map(|c| g(r, c)));
        vertices.push(format!("t{r}"));
        edges.push((format!("s{r}"), g(r, 1), WeightTag::One));
        for c in 1..k {
            edges.push((g(r, c), g(r, c + 1), WeightTag::One));
        }
        edges.push((g(r, k), format!("t{r}"), WeightTag::One));
    }
    for c in 1..=k {
        for r in 1..tracks {
            edges.push((g(r, c), g(r + 1, c), WeightTag::Column(c)));
        }
    }
    Ok(SchurGrid {
        tracks,
        columns: k,
        vertices,
        edges,
    })
}

/// `I = {μ_ℓ + 1, μ_{ℓ-1} + 2, ..., μ_1 + ℓ}` and
/// `J = {λ_ℓ + 1, ..., λ_1 + ℓ}` inside `[λ_1 + ℓ]`, with `ℓ = ℓ(λ)`.
pub fn schur_boundary_subsets(shape: &SkewShape) -> (SubsetIndex, SubsetIndex) {
    let lambda = shape.outer();
    let mu = shape.inner();
    let l = lambda.len();
    let ambient = schur_tracks(lambda);
    let build = |p: &Partition| {
        let elements = (1..=l).map(|a| p.part(l + 1 - a) + a).collect();
        SubsetIndex::new(elements, ambient)
            .expect("weakly decreasing parts give increasing indices")
    };
    (build(mu), build(lambda))
}

/// Evaluates `s_{λ/μ}(z^n)` for one shape and point at any integer `n`.
#[derive(Debug)]
pub struct SchurEvaluator {
    engine: Option<Engine>,
    i: SubsetIndex,
    j: SubsetIndex,
}

impl SchurEvaluator {
    pub fn new(shape: &SkewShape, z: &EvalPoint) -> Result<Self> {
        let (i, j) = schur_boundary_subsets(shape);
        let engine = if z.is_empty() {
            // no variables: the path matrix is the identity
            None
        } else {
            let net = build_schur_network(shape.outer(), z.len())?.instantiate(z)?;
            Some(Engine::new(&net).named(format!("schur{shape} at z={z}")))
        };
        Ok(SchurEvaluator { engine, i, j })
    }

    pub fn subsets(&self) -> (&SubsetIndex, &SubsetIndex) {
        (&self.i, &self.j)
    }

    pub fn engine(&self) -> Option<&Engine> {
        self.engine.as_ref()
    }

    pub fn at(&self, n: i64) -> Result<Rational> {
        match &self.engine {
            Some(engine) => engine.f_at(&self.i, &self.j, n),
            None => Ok(if self.i == self.j {
                Rational::one()
            } else {
                Rational::zero()
            }),
        }
    }

    /// `s(z^{-1}), ..., s(z^{-len})` from the characteristic-polynomial
    /// recurrence.
    pub fn backward_terms(&self, len: usize) -> Result<Vec<Rational>> {
        match &self.engine {
            Some(engine) => engine.f_recurrence(&self.i, &self.j)?.backward_terms(len),
            None => Ok(vec![self.at(0)?; len]),
        }
    }
}

/// `s_{λ/μ}(z^n)` for any integer `n`.
pub fn schur_eval(shape: &SkewShape, z: &EvalPoint, n: i64) -> Result<Rational> {
    SchurEvaluator::new(shape, z)?.at(n)
}

/// A filling of a skew shape, weakly increasing along rows and strictly
/// increasing down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    /// Row `i` covers columns `μ_i + 1 ..= λ_i`.
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.outer().len() {
            return Err(Error::InvalidShape(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            let i = idx + 1;
            if row.len() != shape.outer().part(i) - shape.inner().part(i) {
                return Err(Error::InvalidShape(format!(
                    "row {i} has the wrong length for {shape}"
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidShape(
                    "tableau entries must be positive".into(),
                ));
            }
        }
        let t = Tableau { shape, rows };
        for (i, j) in t.shape.cells() {
            let v = t.entry(i, j).expect("cell in shape");
            if t.entry(i, j + 1).is_some_and(|r| r < v) {
                return Err(Error::InvalidShape(format!(
                    "row {i} decreases after column {j}"
                )));
            }
            if t.entry(i + 1, j).is_some_and(|d| d <= v) {
                return Err(Error::InvalidShape(format!(
                    "column {j} does not strictly increase below row {i}"
                )));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        let row = self.rows.get(i.checked_sub(1)?)?;
        let start = self.shape.inner().part(i) + 1;
        if j < start {
            return None;
        }
        row.get(j - start).copied()
    }

    /// `∏ x_{T(c)}` with `x_i = values[i - 1]`.
    pub fn weight(&self, values: &[Rational]) -> Rational {
        self.rows
            .iter()
            .flatten()
            .map(|&e| values[e - 1].clone())
            .product()
    }
}

fn ssyt_bound(shape: &SkewShape, max_entry: usize) -> u128 {
    // product over rows of the number of weakly increasing rows
    let mut acc: u128 = 1;
    for i in 1..=shape.outer().len() {
        let len = shape.outer().part(i) - shape.inner().part(i);
        let mut rows: u128 = 1;
        for t in 1..=len as u128 {
            rows = match rows.checked_mul(max_entry as u128 + t - 1) {
                Some(v) => v / t,
                None => return u128::MAX,
            };
        }
        acc = acc.saturating_mul(rows);
    }
    acc
}

/// All SSYT of the shape with entries in `1..=max_entry`, cells filled in
/// row-major order with smaller entries tried first.
pub fn ssyt_enumerate(shape: &SkewShape, max_entry: usize) -> Result<Vec<Tableau>> {
    let requested = ssyt_bound(shape, max_entry);
    if requested > ORACLE_CAPACITY {
        return Err(Error::CapacityExceeded {
            requested,
            limit: ORACLE_CAPACITY,
        });
    }
    let cells = shape.cells();
    let outer = shape.outer().clone();
    let inner = shape.inner().clone();
    let mut grid: Vec<Vec<usize>> = (1..=outer.len()).map(|i| vec![0; outer.part(i)]).collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        max_entry: usize,
        grid: &mut Vec<Vec<usize>>,
        shape: &SkewShape,
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            let rows = grid
                .iter()
                .enumerate()
                .map(|(idx, row)| row[inner.part(idx + 1)..].to_vec())
                .collect();
            out.push(Tableau {
                shape: shape.clone(),
                rows,
            });
            return;
        }
        let (i, j) = cells[pos];
        let left = if j > inner.part(i) + 1 {
            grid[i - 1][j - 2]
        } else {
            1
        };
        let above = if i > 1 && j > inner.part(i - 1) {
            grid[i - 2][j - 1] + 1
        } else {
            1
        };
        for v in left.max(above)..=max_entry {
            grid[i - 1][j - 1] = v;
            go(pos + 1, cells, inner, max_entry, grid, shape, out);
        }
        grid[i - 1][j - 1] = 0;
    }
    go(0, &cells, &inner, max_entry, &mut grid, shape, &mut out);
    Ok(out)
}

/// `s_{λ/μ}(x_1, ..., x_N)` as a sum over SSYT.
pub fn ssyt_weighted_sum(shape: &SkewShape, values: &[Rational]) -> Result<Rational> {
    Ok(ssyt_enumerate(shape, values.len())?
        .iter()
        .map(|t| t.weight(values))
        .sum())
}

/// `e_m(z^n) = s_{1^m}(z^n)`.
pub fn elementary_eval(m: usize, z: &EvalPoint, n: i64) -> Result<Rational> {
    schur_eval(&SkewShape::straight(Partition::single_column(m)), z, n)
}

/// `h_m(z^n) = s_{(m)}(z^n)`.
pub fn homogeneous_eval(m: usize, z: &EvalPoint, n: i64) -> Result<Rational> {
    schur_eval(&SkewShape::straight(Partition::single_row(m)), z, n)
}

/// `p_m(x) = Σ x_j^m`.
pub fn power_sum(m: usize, values: &[Rational]) -> Rational {
    values
        .iter()
        .map(|v| pow_i64(v, m as i64).expect("nonnegative exponent"))
        .sum()
}

/// `p_λ(x) = ∏ p_{λ_i}(x)` summed directly over the given values.
pub fn power_sum_direct(lambda: &Partition, values: &[Rational]) -> Rational {
    lambda
        .parts()
        .iter()
        .map(|&m| power_sum(m, values))
        .product()
}

/// `p_λ(z^n) = n^{ℓ(λ)} p_λ(z)`, used for every integer `n`.
pub fn power_sum_eval(lambda: &Partition, z: &EvalPoint, n: i64) -> Rational {
    pow_i64(&int(n), lambda.len() as i64).expect("nonnegative exponent")
        * power_sum_direct(lambda, z.values())
}

/// `ω p_λ = (-1)^{|λ| - ℓ(λ)} p_λ`.
pub fn omega_power_sum_sign(lambda: &Partition) -> Rational {
    sign_power(lambda.size() - lambda.len())
}

/// `∏_{cells} (n + content) / hook`.
pub fn hook_content(lambda: &Partition, n: i64) -> Rational {
    let transpose = lambda.transpose();
    let mut acc = Rational::one();
    for (i, j) in SkewShape::straight(lambda.clone()).cells() {
        let content = j as i64 - i as i64;
        let hook = (lambda.part(i) - j) + (transpose.part(j) - i) + 1;
        acc *= Rational::new((n + content).into(), (hook as i64).into());
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurRecord {
    pub n: u64,
    /// `s_{λ/μ}(z^{-n})` by inverse-compound powers.
    pub lhs: Rational,
    /// The same value by running the recurrence backwards.
    pub lhs_backward: Rational,
    /// `(-1)^{|λ/μ|}`.
    pub sign: Rational,
    /// `s_{λ^t/μ^t}(z_rev^n)`.
    pub transposed: Rational,
    /// `s_{λ^t/μ^t}(z^n)`, equal to the above by symmetry.
    pub transposed_unreversed: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurReport {
    pub shape: SkewShape,
    pub z: EvalPoint,
    pub records: Vec<SchurRecord>,
}

impl SchurReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }
}

impl fmt::Display for SchurReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "shape {}  transpose {}  z = {}",
            self.shape,
            self.shape.transpose(),
            self.z
        )?;
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    format_rational(&r.lhs),
                    format_rational(&r.sign),
                    format_rational(&r.transposed),
                    if r.pass { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let header = ["n", "s(z^-n)", "sign", "s_t(z_rev^n)", "status"].map(String::from);
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

/// Compares `s_{λ/μ}(z^{-n})` with `(-1)^{|λ/μ|} s_{λ^t/μ^t}(z_rev^n)` for
/// `n = 1..=n_max`.
pub fn check_schur_reciprocity(
    shape: &SkewShape,
    z: &EvalPoint,
    n_max: u64,
) -> Result<SchurReport> {
    let direct = SchurEvaluator::new(shape, z)?;
    let transpose = shape.transpose();
    let reversed = SchurEvaluator::new(&transpose, &z.rev())?;
    let unreversed = SchurEvaluator::new(&transpose, z)?;
    let sign = sign_power(shape.size());
    let backward = direct.backward_terms(n_max as usize)?;
    let mut records = Vec::with_capacity(n_max as usize);
    for (n, lhs_backward) in (1..=n_max).zip(backward) {
        let lhs = direct.at(-(n as i64))?;
        let transposed = reversed.at(n as i64)?;
        let transposed_unreversed = unreversed.at(n as i64)?;
        let rhs = &sign * &transposed;
        let pass = lhs == rhs && lhs_backward == rhs && transposed_unreversed == transposed;
        records.push(SchurRecord {
            n,
            lhs,
            lhs_backward,
            sign: sign.clone(),
            transposed,
            transposed_unreversed,
            pass,
        });
    }
    Ok(SchurReport {
        shape: shape.clone(),
        z: z.clone(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExactMatrix;
    use crate::network::oracle_nonintersecting_sum;
    use crate::poly::RationalPolynomial;
    use crate::rational::frac;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn grid_path_matrix() {
        let grid = build_schur_network(&p(&[1]), 1).unwrap();
        assert_eq!(grid.tracks(), 2);
        let net = grid.instantiate(&EvalPoint::new(vec![frac(2, 3)])).unwrap();
        let expected =
            ExactMatrix::from_rows(vec![vec![int(1), frac(2, 3)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(net.path_matrix(), expected);
        assert!(build_schur_network(&p(&[1]), 0).is_err());
        assert!(grid.instantiate(&EvalPoint::from_i64(&[1, 2])).is_err());
        assert_eq!(
            build_schur_network(&Partition::empty(), 2)
                .unwrap()
                .tracks(),
            1
        );
    }

    #[test]
    fn grid_entries_are_complete_homogeneous() {
        let z = EvalPoint::new(vec![int(2), frac(1, 3)]);
        let net = build_schur_network(&p(&[2, 1]), 2)
            .unwrap()
            .instantiate(&z)
            .unwrap();
        let pm = net.path_matrix();
        assert_eq!(pm.det().unwrap(), int(1));
        for i in 0..4 {
            for j in 0..4 {
                let expected = if j < i {
                    int(0)
                } else {
                    homogeneous_eval(j - i, &z, 1).unwrap()
                };
                assert_eq!(pm[(i, j)], expected);
            }
        }
        assert_eq!(pm[(0, 2)], int(4) + frac(2, 3) + frac(1, 9));
        let full = SubsetIndex::full(4);
        assert_eq!(
            oracle_nonintersecting_sum(&net, &full, &full).unwrap(),
            int(1)
        );
    }

    #[test]
    fn boundary_subsets() {
        let (i, j) = schur_boundary_subsets(&skew(&[1], &[]));
        assert_eq!((i.elements(), j.elements()), (&[1][..], &[2][..]));
        let (i, j) = schur_boundary_subsets(&skew(&[3, 3, 2], &[1, 1]));
        assert_eq!(
            (i.elements(), j.elements()),
            (&[1, 3, 4][..], &[3, 5, 6][..])
        );
        assert_eq!(i.ambient(), 6);
        let (i, j) = schur_boundary_subsets(&skew(&[3, 2, 2], &[1, 1]));
        assert_eq!(j.elements(), &[3, 4, 6]);
        assert_eq!(i.elements(), &[1, 3, 4]);
        let (i, j) = schur_boundary_subsets(&skew(&[2, 1], &[2, 1]));
        assert_eq!(i, j);
    }

    #[test]
    fn evaluations() {
        let z = EvalPoint::new(vec![int(2), frac(1, 2), int(-1)]);
        assert_eq!(schur_eval(&skew(&[1], &[]), &z, 1).unwrap(), frac(3, 2));
        assert_eq!(
            schur_eval(&skew(&[2, 1], &[]), &EvalPoint::from_i64(&[1]), 3).unwrap(),
            int(8)
        );
        assert_eq!(schur_eval(&skew(&[3, 1], &[3, 1]), &z, -4).unwrap(), int(1));
        assert_eq!(
            schur_eval(&skew(&[2], &[]), &EvalPoint::default(), 3).unwrap(),
            int(0)
        );
        assert_eq!(schur_eval(&skew(&[1], &[]), &z, 0).unwrap(), int(0));
    }

    #[test]
    fn tableaux() {
        assert_eq!(ssyt_enumerate(&skew(&[1], &[]), 3).unwrap().len(), 3);
        assert_eq!(ssyt_enumerate(&skew(&[2, 1], &[]), 3).unwrap().len(), 8);
        assert_eq!(ssyt_enumerate(&skew(&[1, 1], &[]), 1).unwrap().len(), 0);
        assert_eq!(ssyt_enumerate(&skew(&[2, 1], &[1]), 2).unwrap().len(), 4);
        for t in ssyt_enumerate(&skew(&[3, 2, 1], &[1]), 3).unwrap() {
            assert!(Tableau::new(t.shape().clone(), t.rows().to_vec()).is_ok());
        }
        assert!(Tableau::new(skew(&[2, 1], &[]), vec![vec![2, 1], vec![3]]).is_err());
        assert!(Tableau::new(skew(&[2, 1], &[]), vec![vec![1, 1], vec![1]]).is_err());
        assert!(matches!(
            ssyt_enumerate(&skew(&[5, 5, 5], &[]), 20),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn network_matches_tableaux() {
        let z = EvalPoint::new(vec![int(2), frac(-1, 3)]);
        for shape in SkewShape::all_up_to(4) {
            for n in 0..=2 {
                let oracle = ssyt_weighted_sum(&shape, z.repeated(n).values()).unwrap();
                assert_eq!(
                    schur_eval(&shape, &z, n as i64).unwrap(),
                    oracle,
                    "{shape} n={n}"
                );
            }
        }
    }

    #[test]
    fn elementary_and_homogeneous() {
        let ones = EvalPoint::from_i64(&[1, 1, 1]);
        assert_eq!(elementary_eval(2, &ones, 1).unwrap(), int(3));
        assert_eq!(homogeneous_eval(2, &ones, 1).unwrap(), int(6));
        assert_eq!(elementary_eval(3, &ones, 0).unwrap(), int(0));
        assert_eq!(elementary_eval(0, &ones, -2).unwrap(), int(1));
        assert_eq!(
            elementary_eval(2, &EvalPoint::from_i64(&[1]), -3).unwrap(),
            int(6)
        );
    }

    #[test]
    fn power_sums() {
        assert_eq!(
            power_sum_eval(&p(&[2]), &EvalPoint::from_i64(&[1, 2]), 1),
            int(5)
        );
        assert_eq!(
            power_sum_eval(&p(&[1, 1]), &EvalPoint::from_i64(&[1]), 7),
            int(49)
        );
        let z = EvalPoint::new(vec![frac(1, 2), int(3)]);
        let lambda = p(&[3, 1, 1]);
        for n in 0..=4 {
            let direct = power_sum_direct(&lambda, z.repeated(n as usize).values());
            assert_eq!(power_sum_eval(&lambda, &z, n), direct);
            assert_eq!(power_sum_eval(&lambda, &z, -n), sign_power(3) * direct);
        }
        assert_eq!(omega_power_sum_sign(&p(&[2, 1])), int(-1));
        assert_eq!(omega_power_sum_sign(&p(&[1, 1])), int(1));
    }

    #[test]
    fn hook_content_values() {
        assert_eq!(hook_content(&p(&[2, 1]), 3), int(8));
        assert_eq!(hook_content(&p(&[1]), 11), int(11));
        assert_eq!(hook_content(&p(&[3]), 4), int(20));
        let one = EvalPoint::from_i64(&[1]);
        for lambda in Partition::all_of_size(4) {
            for n in 0..=5 {
                assert_eq!(
                    hook_content(&lambda, n),
                    schur_eval(&SkewShape::straight(lambda.clone()), &one, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn reciprocity() {
        let z = EvalPoint::new(vec![int(2), frac(1, 2), int(3)]);
        let report = check_schur_reciprocity(&skew(&[1], &[]), &z, 4).unwrap();
        assert!(report.passed());
        assert_eq!(report.records[1].lhs, frac(-11, 1));
        let report = check_schur_reciprocity(&skew(&[3, 2, 1], &[1, 1]), &z, 3).unwrap();
        assert!(report.passed(), "{report}");
        assert!(check_schur_reciprocity(&skew(&[2], &[2]), &z, 2)
            .unwrap()
            .passed());
        assert!(
            check_schur_reciprocity(&skew(&[2, 1], &[]), &EvalPoint::default(), 2)
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn symmetric_in_z() {
        let shape = skew(&[3, 1], &[1]);
        let a = EvalPoint::new(vec![int(2), frac(1, 2), int(-3)]);
        let b = EvalPoint::new(vec![int(-3), int(2), frac(1, 2)]);
        for n in -2..=2 {
            assert_eq!(
                schur_eval(&shape, &a, n).unwrap(),
                schur_eval(&shape, &b, n).unwrap()
            );
        }
    }

    #[test]
    fn polynomial_in_n() {
        let shape = skew(&[2, 2], &[1]);
        let z = EvalPoint::new(vec![frac(1, 2), int(1)]);
        let d = shape.size();
        let points: Vec<(Rational, Rational)> = (0..=d as i64)
            .map(|n| (int(n), schur_eval(&shape, &z, n).unwrap()))
            .collect();
        let poly = RationalPolynomial::interpolate(&points).unwrap();
        for n in [-3, -1, d as i64 + 1, d as i64 + 2] {
            assert_eq!(poly.eval(&int(n)), schur_eval(&shape, &z, n).unwrap());
        }
    }
}
