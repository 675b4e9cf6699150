//! Presentations of modules over `Z[t, t^-1]` and their order.
//!
//! A presentation is an `r x s` matrix: rows are relators, columns are
//! generators, and the module is the cokernel. The order is the gcd of the
//! `s x s` minors, normalized up to the units `±t^i`.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::laurent::{det_laurent, LaurentMatrix, LaurentPoly};

/// Default cap on the number of maximal minors `order` will enumerate.
pub const DEFAULT_MAX_MINORS: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaPresentation {
    matrix: LaurentMatrix,
}

impl LambdaPresentation {
    pub fn new(matrix: LaurentMatrix) -> Self {
        LambdaPresentation { matrix }
    }

    /// Builds an `r x s` presentation, checking that `rows` has `r` rows of
    /// length `s` each.
    pub fn from_rows(
        relators: usize,
        generators: usize,
        rows: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self> {
        if rows.len() != relators || rows.iter().any(|r| r.len() != generators) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {relators}x{generators} matrix"
            )));
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(Self::new(LaurentMatrix::from_vec(relators, generators, entries)?))
    }

    /// The presentation of the zero module on no generators.
    pub fn empty() -> Self {
        Self::new(LaurentMatrix::zeros(0, 0))
    }

    pub fn relators(&self) -> usize {
        self.matrix.rows()
    }

    pub fn generators(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> LaurentMatrix {
        self.matrix
    }

    pub fn is_square(&self) -> bool {
        self.matrix.is_square()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderOptions {
    pub max_minors: u64,
}

impl Default for OrderOptions {
    fn default() -> Self {
        OrderOptions {
            max_minors: DEFAULT_MAX_MINORS,
        }
    }
}

/// Order of the presented module with the default minor cap.
pub fn order(p: &LambdaPresentation) -> Result<LaurentPoly> {
    order_with(p, OrderOptions::default())
}

pub fn order_with(p: &LambdaPresentation, opts: OrderOptions) -> Result<LaurentPoly> {
    let mut m = p.matrix.clone();
    drop_zero_rows(&mut m);
    eliminate_unit_pivots(&mut m);

    let (r, s) = (m.rows(), m.cols());
    if s == 0 {
        return Ok(LaurentPoly::one());
    }
    if r < s || (0..s).any(|j| (0..r).all(|i| m[(i, j)].is_zero())) {
        // fewer relators than generators, or a generator in no relator
        return Ok(LaurentPoly::zero());
    }

    let count = binomial(r, s);
    if count > BigUint::from(opts.max_minors) {
        return Err(Error::TooManyMinors {
            rows: r,
            cols: s,
            count: count.to_string(),
            cap: opts.max_minors,
        });
    }

    let cols: Vec<usize> = (0..s).collect();
    let mut acc = LaurentPoly::zero();
    for rows in Combinations::new(r, s) {
        let minor = det_laurent(&m.select(&rows, &cols))?;
        acc = acc.gcd(&minor);
        if acc.is_one() {
            break;
        }
    }
    Ok(acc.normalize_unit())
}

fn drop_zero_rows(m: &mut LaurentMatrix) {
    let mut i = 0;
    while i < m.rows() {
        if m.row(i).iter().all(LaurentPoly::is_zero) {
            m.remove_row(i);
        } else {
            i += 1;
        }
    }
}

/// Removes a row and a column at every unit entry `±t^k` after clearing
/// the rest of its column. This leaves the ideal of maximal minors intact.
fn eliminate_unit_pivots(m: &mut LaurentMatrix) {
    while let Some((pi, pj)) = find_unit(m) {
        let inv = unit_inverse(&m[(pi, pj)]);
        for i in 0..m.rows() {
            if i == pi || m[(i, pj)].is_zero() {
                continue;
            }
            let k = -(&m[(i, pj)] * &inv);
            m.add_row_multiple(i, pi, &k);
        }
        m.remove_row(pi);
        m.remove_col(pj);
        drop_zero_rows(m);
    }
}

fn find_unit(m: &LaurentMatrix) -> Option<(usize, usize)> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| m[(i, j)].is_unit())
}

fn unit_inverse(u: &LaurentPoly) -> LaurentPoly {
    let (e, c) = u.terms().next().expect("unit is nonzero");
    LaurentPoly::monomial(c.clone(), -e)
}

fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// A presentation rewritten so that no entry involves negative powers of
/// `t` and every generator's lowest power is `t^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftNormalization {
    pub presentation: LambdaPresentation,
    /// Highest power of `t` in each generator's column.
    pub nu: Vec<usize>,
    /// Exponent `k` with column `i` multiplied by `t^k`.
    pub generator_shifts: Vec<i64>,
    /// Exponent applied to each kept relator row.
    pub relator_shifts: Vec<i64>,
    /// Indices of input rows that were identically zero and dropped.
    pub dropped_relators: Vec<usize>,
    /// Generators appearing in no relator.
    pub free_generators: Vec<usize>,
}

pub fn shift_normalize(p: &LambdaPresentation) -> ShiftNormalization {
    let src = &p.matrix;
    let s = src.cols();
    let mut kept = Vec::new();
    let mut dropped_relators = Vec::new();
    for i in 0..src.rows() {
        if src.row(i).iter().all(LaurentPoly::is_zero) {
            dropped_relators.push(i);
        } else {
            kept.push(i);
        }
    }
    let all_cols: Vec<usize> = (0..s).collect();
    let mut m = src.select(&kept, &all_cols);

    let mut relator_shifts = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let low = m
            .row(i)
            .iter()
            .filter_map(LaurentPoly::ord)
            .min()
            .expect("zero rows were dropped");
        relator_shifts.push(-low);
        if low != 0 {
            m.scale_row(i, &LaurentPoly::monomial(1, -low));
        }
    }

    let mut generator_shifts = Vec::with_capacity(s);
    let mut free_generators = Vec::new();
    let mut nu = Vec::with_capacity(s);
    for j in 0..s {
        let low = (0..m.rows()).filter_map(|i| m[(i, j)].ord()).min();
        let Some(low) = low else {
            free_generators.push(j);
            generator_shifts.push(0);
            nu.push(0);
            continue;
        };
        generator_shifts.push(-low);
        if low != 0 {
            m.scale_col(j, &LaurentPoly::monomial(1, -low));
        }
        let high = (0..m.rows())
            .filter_map(|i| m[(i, j)].deg())
            .max()
            .expect("column is nonzero");
        nu.push(high as usize);
    }

    ShiftNormalization {
        presentation: LambdaPresentation::new(m),
        nu,
        generator_shifts,
        relator_shifts,
        dropped_relators,
        free_generators,
    }
}

/// Block-diagonal presentation of the direct sum.
pub fn direct_sum(a: &LambdaPresentation, b: &LambdaPresentation) -> LambdaPresentation {
    let coupling = LaurentMatrix::zeros(a.relators(), b.generators());
    block_triangular(a, b, &coupling).expect("coupling has matching shape")
}

/// `[[A, C], [0, B]]`: an extension of the module presented by `a` by the
/// module presented by `b`.
pub fn block_triangular(
    a: &LambdaPresentation,
    b: &LambdaPresentation,
    coupling: &LaurentMatrix,
) -> Result<LambdaPresentation> {
    let (ra, sa) = (a.relators(), a.generators());
    let (rb, sb) = (b.relators(), b.generators());
    if coupling.rows() != ra || coupling.cols() != sb {
        return Err(Error::DimensionMismatch(format!(
            "coupling block is {}x{}, expected {ra}x{sb}",
            coupling.rows(),
            coupling.cols()
        )));
    }
    let mut m = LaurentMatrix::zeros(ra + rb, sa + sb);
    for i in 0..ra {
        for j in 0..sa {
            m[(i, j)] = a.matrix[(i, j)].clone();
        }
        for j in 0..sb {
            m[(i, sa + j)] = coupling[(i, j)].clone();
        }
    }
    for i in 0..rb {
        for j in 0..sb {
            m[(ra + i, sa + j)] = b.matrix[(i, j)].clone();
        }
    }
    Ok(LambdaPresentation::new(m))
}

/// Elementary operations over `Z[t, t^-1]` that preserve the presented
/// module (rows) or change only the choice of generators (columns).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScrambleOp {
    SwapRows(usize, usize),
    NegateRow(usize),
    /// Multiply a row by `t^exp`.
    ShiftRow { row: usize, exp: i64 },
    /// `row[dst] += t^exp * row[src]`, `dst != src`.
    AddRow { dst: usize, src: usize, exp: i64 },
    SwapCols(usize, usize),
    NegateCol(usize),
    ShiftCol { col: usize, exp: i64 },
    AddCol { dst: usize, src: usize, exp: i64 },
}

pub fn apply_ops(p: &LambdaPresentation, ops: &[ScrambleOp]) -> Result<LambdaPresentation> {
    let mut m = p.matrix.clone();
    let (r, s) = (m.rows(), m.cols());
    let bad = |what: &str| Err(Error::DimensionMismatch(format!("{what} out of range for {r}x{s}")));
    for &op in ops {
        match op {
            ScrambleOp::SwapRows(a, b) if a < r && b < r => m.swap_rows(a, b),
            ScrambleOp::NegateRow(i) if i < r => m.scale_row(i, &LaurentPoly::constant(-1)),
            ScrambleOp::ShiftRow { row, exp } if row < r => {
                m.scale_row(row, &LaurentPoly::monomial(1, exp))
            }
            ScrambleOp::AddRow { dst, src, exp } if dst < r && src < r && dst != src => {
                m.add_row_multiple(dst, src, &LaurentPoly::monomial(1, exp))
            }
            ScrambleOp::SwapCols(a, b) if a < s && b < s => m.swap_cols(a, b),
            ScrambleOp::NegateCol(j) if j < s => m.scale_col(j, &LaurentPoly::constant(-1)),
            ScrambleOp::ShiftCol { col, exp } if col < s => {
                m.scale_col(col, &LaurentPoly::monomial(1, exp))
            }
            ScrambleOp::AddCol { dst, src, exp } if dst < s && src < s && dst != src => {
                m.add_col_multiple(dst, src, &LaurentPoly::monomial(1, exp))
            }
            other => return bad(&format!("{other:?}")),
        }
    }
    Ok(LambdaPresentation::new(m))
}

/// A reproducible random sequence of [`ScrambleOp`]s for an `r x s` matrix.
pub fn random_ops(relators: usize, generators: usize, seed: u64) -> Vec<ScrambleOp> {
    const OPS_PER_SIDE: usize = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ops = Vec::new();
    if relators > 0 {
        ops.extend((0..OPS_PER_SIDE).map(|_| random_op(&mut rng, relators, true)));
    }
    if generators > 0 {
        ops.extend((0..OPS_PER_SIDE).map(|_| random_op(&mut rng, generators, false)));
    }
    ops
}

fn random_op(rng: &mut ChaCha8Rng, n: usize, rows: bool) -> ScrambleOp {
    let a = rng.gen_range(0..n);
    let exp = rng.gen_range(-2..=2);
    let kind = if n < 2 { rng.gen_range(0..2) } else { rng.gen_range(0..4) };
    let b = if n < 2 { a } else { (a + rng.gen_range(1..n)) % n };
    match (kind, rows) {
        (0, true) => ScrambleOp::NegateRow(a),
        (1, true) => ScrambleOp::ShiftRow { row: a, exp },
        (2, true) => ScrambleOp::SwapRows(a, b),
        (_, true) => ScrambleOp::AddRow { dst: a, src: b, exp },
        (0, false) => ScrambleOp::NegateCol(a),
        (1, false) => ScrambleOp::ShiftCol { col: a, exp },
        (2, false) => ScrambleOp::SwapCols(a, b),
        (_, false) => ScrambleOp::AddCol { dst: a, src: b, exp },
    }
}

/// Applies [`random_ops`] for `seed`; the presented module is unchanged up
/// to isomorphism.
pub fn unimodular_scramble(p: &LambdaPresentation, seed: u64) -> LambdaPresentation {
    let ops = random_ops(p.relators(), p.generators(), seed);
    apply_ops(p, &ops).expect("generated ops are in range")
}
