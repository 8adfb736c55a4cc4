//! Finitely generated abelian groups, their homomorphisms as integer
//! matrices, and Smith normal form as the decision procedure for
//! injectivity, surjectivity and isomorphism.
//!
//! A group `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` has `r + k` generators, free ones first
//! and then the torsion generators in the order given. A homomorphism is a
//! matrix with one column per source generator and one row per target
//! generator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_big;

/// Dense integer matrix, row-major, exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_big_rows(rows: usize, cols: usize, data: Vec<Vec<BigInt>>) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("expected a {rows}x{cols} row array")));
        }
        Ok(IntMatrix { rows, cols, data: data.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integers; panics on ragged rows.
    pub fn from_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
        IntMatrix { rows: rows.len(), cols: C, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += x * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::ShapeMismatch("hstack needs equal row counts".into()));
        }
        let cols = self.cols + rhs.cols;
        let mut out = IntMatrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let delta = factor * self.get(src, c);
            self.data[dst * self.cols + c] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * self.get(r, src);
            self.data[r * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let idx = i * self.cols + c;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Display for IntMatrix {
    /// `[3 2; 40 27]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal in
/// divisibility-chain form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1 | d_2 | …`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|k| self.d.get(k, k).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks `U·M·V = D`, `det U, det V = ±1`, that `D` is diagonal with
    /// nonnegative entries, and the divisibility chain.
    pub fn is_valid_for(&self, m: &IntMatrix) -> bool {
        let reconstructs = self.u.mul(m).and_then(|um| um.mul(&self.v)).is_ok_and(|x| x == self.d);
        let unimodular = |x: &IntMatrix| x.det().is_ok_and(|d| d.abs().is_one());
        let diagonal = (0..self.d.rows)
            .all(|i| (0..self.d.cols).all(|j| i == j || self.d.get(i, j).is_zero()));
        let chain = self.diagonal().windows(2).all(|w| {
            !w[0].is_negative()
                && !w[1].is_negative()
                && if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() }
        });
        let first_nonneg = self.diagonal().first().is_none_or(|x| !x.is_negative());
        reconstructs && unimodular(&self.u) && unimodular(&self.v) && diagonal && chain && first_nonneg
    }
}

fn find_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..d.rows {
        for j in k..d.cols {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form with exact arithmetic.
///
/// Pivot: the smallest nonzero absolute value in the active block, ties to
/// the lowest row and then the lowest column.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    'diag: for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, k) else { break 'diag };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(d.get(i, k) / d.get(k, k));
                d.add_row(i, k, &q);
                u.add_row(i, k, &q);
                clean &= d.get(i, k).is_zero();
            }
            for j in k + 1..cols {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(d.get(k, j) / d.get(k, k));
                d.add_col(j, k, &q);
                v.add_col(j, k, &q);
                clean &= d.get(k, j).is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = d.get(k, k).clone();
            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !(d.get(i, j) % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(k, i, &one);
                    u.add_row(k, i, &one);
                }
                None => break,
            }
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithDecomposition { u, d, v }
}

/// `Z^rank ⊕ Z/torsion[0] ⊕ …`
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgabGroup {
    pub rank: usize,
    #[serde(with = "serde_big::vec")]
    pub torsion: Vec<BigInt>,
}

impl FgabGroup {
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|d| **d < BigInt::from(2)) {
            return Err(Error::InvalidParameter(format!("torsion order {bad} < 2")));
        }
        Ok(FgabGroup { rank, torsion })
    }

    pub fn trivial() -> Self {
        FgabGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FgabGroup { rank, torsion: Vec::new() }
    }

    /// `Z/d`, or the trivial group when `d = 1`.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        let d = d.into();
        if d.is_one() {
            Self::trivial()
        } else {
            FgabGroup { rank: 0, torsion: vec![d] }
        }
    }

    /// `Z^rank ⊕ Z/d` for each `d > 1`, dropping order-1 summands.
    pub fn with_cyclic(rank: usize, orders: &[BigInt]) -> Self {
        let torsion = orders.iter().filter(|d| !d.is_one()).cloned().collect();
        FgabGroup { rank, torsion }
    }

    pub fn num_generators(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of generator `k`; `None` for a free generator.
    pub fn generator_order(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(self.rank).map(|t| &self.torsion[t])
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Relation matrix: one column per torsion generator.
    pub fn relations(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.num_generators(), self.torsion.len());
        for (t, d) in self.torsion.iter().enumerate() {
            r.set(self.rank + t, t, d.clone());
        }
        r
    }

    /// Direct sum plus the positions of each summand's generators in it.
    pub fn direct_sum(&self, other: &FgabGroup) -> (FgabGroup, Vec<usize>, Vec<usize>) {
        let sum = FgabGroup {
            rank: self.rank + other.rank,
            torsion: self.torsion.iter().chain(&other.torsion).cloned().collect(),
        };
        let free = sum.rank;
        let left = (0..self.rank)
            .chain((0..self.torsion.len()).map(|t| free + t))
            .collect();
        let right = (0..other.rank)
            .map(|k| self.rank + k)
            .chain((0..other.torsion.len()).map(|t| free + self.torsion.len() + t))
            .collect();
        (sum, left, right)
    }

    /// Invariant-factor form `d_1 | d_2 | …` of the torsion part.
    pub fn canonicalize(&self) -> FgabGroup {
        let k = self.torsion.len();
        let mut diag = IntMatrix::zeros(k, k);
        for (i, d) in self.torsion.iter().enumerate() {
            diag.set(i, i, d.clone());
        }
        let invariants = smith_normal_form(&diag).diagonal();
        FgabGroup::with_cyclic(self.rank, &invariants)
    }

    pub fn is_isomorphic_to(&self, other: &FgabGroup) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Reduces an element's torsion coordinates into `[0, d)`.
    pub fn reduce(&self, element: &mut [BigInt]) {
        for (t, d) in self.torsion.iter().enumerate() {
            let x = &mut element[self.rank + t];
            *x = x.mod_floor(d);
        }
    }
}

impl fmt::Display for FgabGroup {
    /// `Z^2 ⊕ Z/2 ⊕ Z/3`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// A well-defined homomorphism `source → target`.
///
/// Serializes as `{"source", "target", "matrix"}` with the matrix as an array
/// of rows; deserialization re-runs the well-definedness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FgabMapRepr", try_from = "FgabMapRepr")]
pub struct FgabMap {
    source: FgabGroup,
    target: FgabGroup,
    matrix: IntMatrix,
}

impl FgabMap {
    /// Validates shape and well-definedness, then reduces torsion rows into
    /// `[0, d)` so that equal homomorphisms have equal matrices.
    pub fn new(source: FgabGroup, target: FgabGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows != target.num_generators() || matrix.cols != source.num_generators() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{} but {} → {} needs {}x{}",
                matrix.rows,
                matrix.cols,
                source,
                target,
                target.num_generators(),
                source.num_generators()
            )));
        }
        let mut matrix = matrix;
        for col in 0..matrix.cols {
            let Some(d) = source.generator_order(col) else { continue };
            for row in 0..matrix.rows {
                let x = matrix.get(row, col);
                let ok = match target.generator_order(row) {
                    None => x.is_zero(),
                    Some(e) => (d * x).is_multiple_of(e),
                };
                if !ok {
                    return Err(Error::IllFormedMap(format!(
                        "generator {col} has order {d} but its image coordinate {row} is {x}"
                    )));
                }
            }
        }
        for row in target.rank..matrix.rows {
            let e = &target.torsion[row - target.rank];
            for col in 0..matrix.cols {
                let x = matrix.get(row, col).mod_floor(e);
                matrix.set(row, col, x);
            }
        }
        Ok(FgabMap { source, target, matrix })
    }

    pub fn identity(group: &FgabGroup) -> Self {
        let n = group.num_generators();
        FgabMap::new(group.clone(), group.clone(), IntMatrix::identity(n))
            .expect("identity is well defined")
    }

    pub fn zero(source: &FgabGroup, target: &FgabGroup) -> Self {
        let matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
        FgabMap { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn source(&self) -> &FgabGroup {
        &self.source
    }

    pub fn target(&self) -> &FgabGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Image of an element given in source generator coordinates.
    pub fn apply(&self, element: &[BigInt]) -> Result<Vec<BigInt>> {
        if element.len() != self.source.num_generators() {
            return Err(Error::ShapeMismatch("element has wrong number of coordinates".into()));
        }
        let mut out: Vec<BigInt> = (0..self.matrix.rows)
            .map(|i| (0..self.matrix.cols).map(|j| self.matrix.get(i, j) * &element[j]).sum())
            .collect();
        self.target.reduce(&mut out);
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct FgabMapRepr {
    source: FgabGroup,
    target: FgabGroup,
    #[serde(with = "serde_big::rows")]
    matrix: Vec<Vec<BigInt>>,
}

impl From<FgabMap> for FgabMapRepr {
    fn from(f: FgabMap) -> Self {
        FgabMapRepr { matrix: f.matrix.row_vecs(), source: f.source, target: f.target }
    }
}

impl TryFrom<FgabMapRepr> for FgabMap {
    type Error = Error;

    fn try_from(r: FgabMapRepr) -> Result<Self> {
        let matrix = IntMatrix::from_big_rows(r.target.num_generators(), r.source.num_generators(), r.matrix)?;
        FgabMap::new(r.source, r.target, matrix)
    }
}

impl fmt::Display for FgabMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} → {}", self.matrix, self.source, self.target)
    }
}

/// `f ∘ g`; requires `g.target == f.source`.
pub fn compose(f: &FgabMap, g: &FgabMap) -> Result<FgabMap> {
    if g.target != f.source {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose: {} is not {}",
            g.target, f.source
        )));
    }
    FgabMap::new(g.source.clone(), f.target.clone(), f.matrix.mul(&g.matrix)?)
}

/// `f ⊕ g : f.source ⊕ g.source → f.target ⊕ g.target`.
pub fn direct_sum(f: &FgabMap, g: &FgabMap) -> FgabMap {
    let (source, src_l, src_r) = f.source.direct_sum(&g.source);
    let (target, tgt_l, tgt_r) = f.target.direct_sum(&g.target);
    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    for (part, src_pos, tgt_pos) in [(f, &src_l, &tgt_l), (g, &src_r, &tgt_r)] {
        for (i, &ti) in tgt_pos.iter().enumerate() {
            for (j, &sj) in src_pos.iter().enumerate() {
                matrix.set(ti, sj, part.matrix.get(i, j).clone());
            }
        }
    }
    FgabMap { source, target, matrix }
}

/// Group presented by generators modulo the columns of `relations`.
fn presented_group(relations: &IntMatrix) -> FgabGroup {
    let snf = smith_normal_form(relations);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|x| !x.is_zero()).count();
    let torsion: Vec<BigInt> = diag.into_iter().filter(|x| !x.is_zero()).collect();
    FgabGroup::with_cyclic(relations.rows - nonzero, &torsion)
}

/// Outcome of an isomorphism test, with kernel and cokernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub is_isomorphism: bool,
    pub kernel: FgabGroup,
    pub cokernel: FgabGroup,
}

impl IsoReport {
    pub fn injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn surjective(&self) -> bool {
        self.cokernel.is_trivial()
    }
}

/// Decides bijectivity of `f` and describes its kernel and cokernel.
///
/// With `P = [M | R_target]`, the cokernel is `Z^b / im P`. The kernel is the
/// lattice `K = {x : Mx ∈ im R_target}` (the projection of `ker P` onto the
/// source coordinates) modulo the source relations.
pub fn is_isomorphism(f: &FgabMap) -> IsoReport {
    let a = f.source.num_generators();
    let stacked = f.matrix.hstack(&f.target.relations()).expect("row counts agree");
    let cokernel = presented_group(&stacked);

    let snf = smith_normal_form(&stacked);
    let rank = snf.rank();
    let kernel_gens: Vec<usize> = (rank..stacked.cols).collect();
    let mut lattice = IntMatrix::zeros(a, kernel_gens.len());
    for (c, &k) in kernel_gens.iter().enumerate() {
        for i in 0..a {
            lattice.set(i, c, snf.v.get(i, k).clone());
        }
    }

    let lat = smith_normal_form(&lattice);
    let lat_diag = lat.diagonal();
    let lat_rank = lat.rank();
    let src_rel = f.source.relations();
    let coords = lat.u.mul(&src_rel).expect("shapes agree");
    let mut rel_in_basis = IntMatrix::zeros(lat_rank, src_rel.cols);
    for (i, d) in lat_diag.iter().enumerate().take(lat_rank) {
        for j in 0..src_rel.cols {
            let (q, r) = coords.get(i, j).div_rem(d);
            debug_assert!(r.is_zero(), "source relations lie in the kernel lattice");
            rel_in_basis.set(i, j, q);
        }
    }
    let kernel = presented_group(&rel_in_basis);

    IsoReport { is_isomorphism: kernel.is_trivial() && cokernel.is_trivial(), kernel, cokernel }
}

/// A random finite group of order at most `max_order`, built from cyclic
/// factors in random order (not canonical).
pub fn random_finite_group<R: Rng + ?Sized>(rng: &mut R, max_order: u64) -> FgabGroup {
    let mut torsion = Vec::new();
    let mut order = 1u64;
    let factors = rng.random_range(0..=3);
    for _ in 0..factors {
        let room = max_order / order;
        if room < 2 {
            break;
        }
        let d = rng.random_range(2..=room.min(24));
        order *= d;
        torsion.push(BigInt::from(d));
    }
    FgabGroup { rank: 0, torsion }
}

/// A random well-defined map. Free target rows take entries in
/// `[-bound, bound]`; torsion rows take any admissible residue.
pub fn random_map<R: Rng + ?Sized>(
    rng: &mut R,
    source: &FgabGroup,
    target: &FgabGroup,
    bound: i64,
) -> FgabMap {
    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    for col in 0..source.num_generators() {
        let d = source.generator_order(col);
        for row in 0..target.num_generators() {
            let x = match (d, target.generator_order(row)) {
                (None, None) => BigInt::from(rng.random_range(-bound..=bound)),
                (Some(_), None) => BigInt::zero(),
                (None, Some(e)) => {
                    let e = u64::try_from(e).unwrap_or(u64::MAX);
                    BigInt::from(rng.random_range(0..e))
                }
                (Some(d), Some(e)) => {
                    let step = e / d.gcd(e);
                    let steps = u64::try_from(e / &step).unwrap_or(1);
                    step * rng.random_range(0..steps)
                }
            };
            matrix.set(row, col, x);
        }
    }
    FgabMap::new(source.clone(), target.clone(), matrix).expect("sampled map is well defined")
}

/// Brute-force bijectivity test for maps between finite groups, by
/// enumerating every source element.
pub fn is_bijective_exhaustive(f: &FgabMap) -> Option<bool> {
    let src_orders: Vec<u64> = f.source.torsion.iter().map(|d| u64::try_from(d).ok()).collect::<Option<_>>()?;
    if !f.source.is_finite() || !f.target.is_finite() {
        return None;
    }
    let src_order = f.source.order()?;
    if src_order != f.target.order()? {
        return Some(false);
    }
    let total: u64 = src_orders.iter().product();
    let mut seen = std::collections::HashSet::with_capacity(total as usize);
    let mut element = vec![0u64; src_orders.len()];
    for _ in 0..total {
        let coords: Vec<BigInt> = element.iter().map(|&x| BigInt::from(x)).collect();
        if !seen.insert(f.apply(&coords).ok()?) {
            return Some(false);
        }
        for (x, d) in element.iter_mut().zip(&src_orders) {
            *x += 1;
            if *x < *d {
                break;
            }
            *x = 0;
        }
    }
    Some(true)
}
