//! Concrete unitary matrices: direct sums, Kronecker products, the perfect
//! shuffle that commutes a Kronecker product, geodesic paths through the
//! unitary group, and the block-diagonal homomorphism `Tr`.
//!
//! Identity checks use the tolerance `1e-9 · dim` on Frobenius norms.

use std::f64::consts::{PI, TAU};
use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::arith::BezoutWitness;
use crate::error::{Error, Result};

/// Default ceiling on the dimension of any constructed matrix.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// Eigen-angles within this distance of `-π` are moved to `+π`.
const BRANCH_EPS: f64 = 1e-12;

/// Identity-check tolerance for `dim × dim` matrices.
pub fn tolerance(dim: usize) -> f64 {
    1e-9 * dim as f64
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: data.len() });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParameter("matrix entries must be finite".into()));
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Complex64::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Complex64::one())
    }

    pub fn scalar(dim: usize, z: Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = z;
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let data = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        ComplexMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: rhs.dim });
        }
        let d = self.dim;
        let mut out = vec![Complex64::zero(); d * d];
        for i in 0..d {
            let row = &mut out[i * d..(i + 1) * d];
            for k in 0..d {
                let x = self.data[i * d + k];
                if x.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.data[k * d..(k + 1) * d];
                for (o, r) in row.iter_mut().zip(rhs_row) {
                    *o += x * r;
                }
            }
        }
        Ok(ComplexMatrix { dim: d, data: out })
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self − other‖_F`.
    pub fn distance(&self, other: &ComplexMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt())
    }

    /// `‖A*A − I‖_F`.
    pub fn unitary_deviation(&self) -> f64 {
        let d = self.dim;
        let mut sum = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut z = Complex64::zero();
                for k in 0..d {
                    z += self.data[k * d + i].conj() * self.data[k * d + j];
                }
                if i == j {
                    z -= 1.0;
                }
                sum += z.norm_sqr();
            }
        }
        sum.sqrt()
    }

    pub fn is_unitary(&self) -> bool {
        is_unitary(self)
    }

    fn require_unitary(&self) -> Result<()> {
        let deviation = self.unitary_deviation();
        let tol = tolerance(self.dim);
        if deviation > tol {
            return Err(Error::NotUnitary { deviation, tolerance: tol });
        }
        Ok(())
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.data)
    }

    fn from_nalgebra(m: &DMatrix<Complex64>) -> ComplexMatrix {
        ComplexMatrix::from_fn(m.nrows(), |i, j| m[(i, j)])
    }

    /// Plain-text form: a `dim` line, then `dim` lines of `re,im` pairs.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.dim);
        for i in 0..self.dim {
            let row: Vec<String> =
                (0..self.dim).map(|j| format!("{},{}", self.get(i, j).re, self.get(i, j).im)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<ComplexMatrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dim: usize = header.parse().map_err(|_| Error::Parse(format!("bad dimension line {header:?}")))?;
        let mut data = Vec::with_capacity(dim * dim);
        for row in 0..dim {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {row}")))?;
            let before = data.len();
            for token in line.split_whitespace() {
                let (re, im) = token
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("entry {token:?} is not re,im")))?;
                let parse = |s: &str| s.parse::<f64>().map_err(|_| Error::Parse(format!("bad number {s:?}")));
                data.push(Complex64::new(parse(re)?, parse(im)?));
            }
            if data.len() - before != dim {
                return Err(Error::Parse(format!("row {row} has {} entries, expected {dim}", data.len() - before)));
            }
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing rows after matrix".into()));
        }
        ComplexMatrix::new(dim, data)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `‖A*A − I‖_F ≤ 1e-9 · dim`.
pub fn is_unitary(a: &ComplexMatrix) -> bool {
    a.unitary_deviation() <= tolerance(a.dim)
}

fn capped(dim: Option<u128>, cap: usize) -> Result<usize> {
    match dim {
        Some(d) if d <= cap as u128 => Ok(d as usize),
        Some(d) => Err(Error::DimensionOverflow { dim: d.to_string(), cap }),
        None => Err(Error::DimensionOverflow { dim: "overflow".into(), cap }),
    }
}

fn dsum_capped(a: &ComplexMatrix, b: &ComplexMatrix, cap: usize) -> Result<ComplexMatrix> {
    let d = capped((a.dim as u128).checked_add(b.dim as u128), cap)?;
    let mut out = ComplexMatrix::zeros(d);
    for (m, offset) in [(a, 0), (b, a.dim)] {
        for i in 0..m.dim {
            let dst = (offset + i) * d + offset;
            out.data[dst..dst + m.dim].copy_from_slice(&m.data[i * m.dim..(i + 1) * m.dim]);
        }
    }
    Ok(out)
}

fn ksum_capped(a: &ComplexMatrix, r: usize, cap: usize) -> Result<ComplexMatrix> {
    if r == 0 {
        return Err(Error::InvalidParameter("block count must be positive".into()));
    }
    let d = capped((a.dim as u128).checked_mul(r as u128), cap)?;
    let mut out = ComplexMatrix::zeros(d);
    for block in 0..r {
        let offset = block * a.dim;
        for i in 0..a.dim {
            let dst = (offset + i) * d + offset;
            out.data[dst..dst + a.dim].copy_from_slice(&a.data[i * a.dim..(i + 1) * a.dim]);
        }
    }
    Ok(out)
}

fn tensor_capped(a: &ComplexMatrix, b: &ComplexMatrix, cap: usize) -> Result<ComplexMatrix> {
    let d = capped((a.dim as u128).checked_mul(b.dim as u128), cap)?;
    let p = b.dim;
    let mut out = ComplexMatrix::zeros(d);
    for i in 0..a.dim {
        for j in 0..a.dim {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..p {
                for l in 0..p {
                    out.data[(i * p + k) * d + j * p + l] = x * b.get(k, l);
                }
            }
        }
    }
    Ok(out)
}

fn ktensor_capped(a: &ComplexMatrix, r: usize, cap: usize) -> Result<ComplexMatrix> {
    if r == 0 {
        return Err(Error::InvalidParameter("tensor power must be positive".into()));
    }
    let total = u32::try_from(r).ok().and_then(|r| (a.dim as u128).checked_pow(r));
    capped(total, cap)?;
    let mut out = a.clone();
    for _ in 1..r {
        out = tensor_capped(&out, a, cap)?;
    }
    Ok(out)
}

/// `A ⊕ B`.
pub fn dsum(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    dsum_capped(a, b, DEFAULT_DIM_CAP)
}

/// `A^{⊕r}`.
pub fn ksum(a: &ComplexMatrix, r: usize) -> Result<ComplexMatrix> {
    ksum_capped(a, r, DEFAULT_DIM_CAP)
}

/// Kronecker product with blocks `a_ij · B`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    tensor_capped(a, b, DEFAULT_DIM_CAP)
}

/// `A^{⊗r}`.
pub fn ktensor(a: &ComplexMatrix, r: usize) -> Result<ComplexMatrix> {
    ktensor_capped(a, r, DEFAULT_DIM_CAP)
}

/// `diag(A, I_n)`.
pub fn stab(a: &ComplexMatrix, n: usize) -> Result<ComplexMatrix> {
    if n == 0 {
        return Ok(a.clone());
    }
    dsum(a, &ComplexMatrix::identity(n))
}

/// `diag(I, …, A, …, I)` with `A` in block `j` of `r` (1-based).
pub fn sj_embed(a: &ComplexMatrix, r: usize, j: usize) -> Result<ComplexMatrix> {
    if j == 0 || j > r {
        return Err(Error::BadIndex { index: j, count: r });
    }
    let d = capped((a.dim as u128).checked_mul(r as u128), DEFAULT_DIM_CAP)?;
    let mut out = ComplexMatrix::identity(d);
    let offset = (j - 1) * a.dim;
    for i in 0..a.dim {
        let dst = (offset + i) * d + offset;
        out.data[dst..dst + a.dim].copy_from_slice(&a.data[i * a.dim..(i + 1) * a.dim]);
    }
    Ok(out)
}

/// A permutation of `{0, …, size−1}` stored as an index map.
///
/// Its matrix `P` has `P[k, images[k]] = 1`, so conjugation
/// `P X Pᵀ` sends entry `(images[a], images[b])` of `X` to `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationIndexMap {
    images: Vec<usize>,
}

impl PermutationIndexMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &k in &images {
            if k >= images.len() || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidParameter("images do not form a permutation".into()));
            }
        }
        Ok(PermutationIndexMap { images })
    }

    pub fn identity(size: usize) -> Self {
        PermutationIndexMap { images: (0..size).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> PermutationIndexMap {
        let mut inv = vec![0; self.images.len()];
        for (k, &img) in self.images.iter().enumerate() {
            inv[img] = k;
        }
        PermutationIndexMap { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// `P X Pᵀ`, in `O(dim²)`.
    pub fn conjugate(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.dim != self.size() {
            return Err(Error::DimensionMismatch { expected: self.size(), got: x.dim });
        }
        Ok(ComplexMatrix::from_fn(x.dim, |a, b| x.get(self.images[a], self.images[b])))
    }

    /// Dense permutation matrix `P`.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.size());
        for (k, &img) in self.images.iter().enumerate() {
            m.data[k * self.size() + img] = Complex64::one();
        }
        m
    }

    /// Disjoint cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for PermutationIndexMap {
    /// Cycle notation, fixed points included: `(0)(1 2)(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The perfect shuffle `(i·n + j) ↦ (j·m + i)` with
/// `A ⊗ I_n = P (I_n ⊗ A) Pᵀ` for every `m × m` matrix `A`.
pub fn commutation_permutation(m: usize, n: usize) -> Result<PermutationIndexMap> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    let mut images = vec![0; m * n];
    for i in 0..m {
        for j in 0..n {
            images[i * n + j] = j * m + i;
        }
    }
    Ok(PermutationIndexMap { images })
}

/// Swaps blocks `j` and `j+1` (1-based) of `r` blocks of size `block`, so
/// that `sj_embed(A, r, j+1) = P sj_embed(A, r, j) Pᵀ`.
pub fn block_swap_permutation(block: usize, r: usize, j: usize) -> Result<PermutationIndexMap> {
    if j == 0 || j >= r {
        return Err(Error::BadIndex { index: j, count: r.saturating_sub(1) });
    }
    let mut images: Vec<usize> = (0..block * r).collect();
    let (lo, hi) = ((j - 1) * block, j * block);
    for k in 0..block {
        images.swap(lo + k, hi + k);
    }
    Ok(PermutationIndexMap { images })
}

/// The scalar `e^{2πi·exponent/order} · I_dim`, with `exponent` kept
/// reduced modulo `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CentralElement {
    order: u64,
    exponent: u64,
    dim: u64,
}

impl CentralElement {
    pub fn new(order: u64, exponent: u64, dim: u64) -> Result<Self> {
        if order == 0 || dim == 0 {
            return Err(Error::InvalidParameter("order and dim must be positive".into()));
        }
        Ok(CentralElement { order, exponent: exponent % order, dim })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    /// `(ζ I_k)^{⊗r} = ζ^r I_{k^r}`, tracked exactly.
    pub fn tensor_power(&self, r: u32) -> Result<CentralElement> {
        let dim = self
            .dim
            .checked_pow(r)
            .ok_or_else(|| Error::DimensionOverflow { dim: format!("{}^{r}", self.dim), cap: usize::MAX })?;
        let exponent = (self.exponent as u128 * r as u128 % self.order as u128) as u64;
        Ok(CentralElement { order: self.order, exponent, dim })
    }

    /// `(ζ I_k)^{⊕r} = ζ I_{rk}`.
    pub fn block_sum(&self, r: u64) -> Result<CentralElement> {
        let dim = self
            .dim
            .checked_mul(r)
            .ok_or_else(|| Error::DimensionOverflow { dim: format!("{}·{r}", self.dim), cap: usize::MAX })?;
        Ok(CentralElement { dim, ..*self })
    }

    /// The root of unity itself. Multiples of a quarter turn are exact.
    pub fn root(&self) -> Complex64 {
        let (e, m) = (self.exponent as u128, self.order as u128);
        if (4 * e) % m == 0 {
            return match 4 * e / m {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        Complex64::from_polar(1.0, TAU * self.exponent as f64 / self.order as f64)
    }
}

pub fn central_scalar(c: &CentralElement) -> ComplexMatrix {
    ComplexMatrix::scalar(c.dim as usize, c.root())
}

/// Haar-distributed unitary from a seeded complex Gaussian matrix: QR, then
/// the phases of `R`'s diagonal are pushed into `Q`.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::<Complex64>::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        Complex64::new(re, im)
    });
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::one() };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    ComplexMatrix::from_nalgebra(&q)
}

/// Geodesic `t ↦ V diag(e^{itθ_k}) V*` from `I` to a unitary `U = V Λ V*`,
/// with eigen-angles `θ_k ∈ (−π, π]`.
#[derive(Debug, Clone)]
pub struct UnitaryPath {
    basis: ComplexMatrix,
    basis_adj: ComplexMatrix,
    angles: Vec<f64>,
}

impl UnitaryPath {
    pub fn new(u: &ComplexMatrix) -> Result<Self> {
        u.require_unitary()?;
        // Francis QR stalls on some highly symmetric inputs (the 36x36 shuffle,
        // for one), so bound the iterations and loosen the threshold stepwise.
        let max_iter = 200 * u.dim.max(1);
        let schur = [f64::EPSILON, 1e-14, 1e-13, 1e-12]
            .iter()
            .find_map(|&eps| nalgebra::Schur::try_new(u.to_nalgebra(), eps, max_iter))
            .ok_or(Error::NoConvergence { dim: u.dim })?;
        let (q, t) = schur.unpack();
        let angles = (0..u.dim).map(|k| principal_angle(t[(k, k)].arg())).collect();
        let basis = ComplexMatrix::from_nalgebra(&q);
        let path = UnitaryPath { basis_adj: basis.adjoint(), basis, angles };
        // a loose threshold must still reproduce U
        if path.at(1.0).distance(u)? > tolerance(u.dim) {
            return Err(Error::NoConvergence { dim: u.dim });
        }
        Ok(path)
    }

    /// Exact path to a permutation matrix. Each cycle `c_0 → c_1 → … → c_{L-1}`
    /// carries the Fourier vectors `x_{c_j} = ω^{js}/√L`, eigenvalue `ω^s`,
    /// `ω = e^{2πi/L}`, so no iterative solver is involved.
    pub fn from_permutation(perm: &PermutationIndexMap) -> Self {
        let d = perm.size();
        let mut basis = ComplexMatrix::zeros(d);
        let mut angles = Vec::with_capacity(d);
        let mut col = 0;
        for cycle in perm.cycles() {
            let len = cycle.len();
            let norm = 1.0 / (len as f64).sqrt();
            for s in 0..len {
                for (j, &c) in cycle.iter().enumerate() {
                    let phase = TAU * ((j * s) % len) as f64 / len as f64;
                    basis.data[c * d + col] = Complex64::from_polar(norm, phase);
                }
                angles.push(principal_angle(TAU * s as f64 / len as f64));
                col += 1;
            }
        }
        UnitaryPath { basis_adj: basis.adjoint(), basis, angles }
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn at(&self, t: f64) -> ComplexMatrix {
        let d = self.basis.dim;
        // V · diag(e^{itθ}) scales columns, then multiply by V*
        let phases: Vec<Complex64> = self.angles.iter().map(|&th| Complex64::from_polar(1.0, t * th)).collect();
        let scaled = ComplexMatrix::from_fn(d, |i, j| self.basis.get(i, j) * phases[j]);
        scaled.mul(&self.basis_adj).expect("square of equal size")
    }
}

/// Maps an argument into `(−π, π]`, sending values at (or numerically just
/// above) `−π` to `π`.
fn principal_angle(theta: f64) -> f64 {
    let theta = if theta > PI { theta - TAU } else { theta };
    if theta <= -PI + BRANCH_EPS {
        PI
    } else {
        theta
    }
}

pub fn unitary_path(u: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Ok(UnitaryPath::new(u)?.at(t))
}

/// Homotopy `H(A, t) = α_R(t) (I_n ⊗ A) α_C(t)` from `I_n ⊗ A` to `A ⊗ I_n`,
/// where `α_R`, `α_C` are geodesics to the shuffle `P` and to `Pᵀ`.
#[derive(Debug, Clone)]
pub struct ShuffleHomotopy {
    m: usize,
    n: usize,
    path_r: UnitaryPath,
    path_c: UnitaryPath,
}

impl ShuffleHomotopy {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let p = commutation_permutation(m, n)?;
        Ok(ShuffleHomotopy {
            m,
            n,
            path_r: UnitaryPath::from_permutation(&p),
            path_c: UnitaryPath::from_permutation(&p.inverse()),
        })
    }

    pub fn at(&self, a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        if a.dim != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, got: a.dim });
        }
        a.require_unitary()?;
        let middle = tensor_capped(&ComplexMatrix::identity(self.n), a, usize::MAX)?;
        self.path_r.at(t).mul(&middle)?.mul(&self.path_c.at(t))
    }
}

pub fn homotopy_st(a: &ComplexMatrix, n: usize, t: f64) -> Result<ComplexMatrix> {
    ShuffleHomotopy::new(a.dim, n)?.at(a, t)
}

/// Parameters of `Tr : U_{am} × U_{bn} → U_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrParams {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
}

impl TrParams {
    pub fn am(&self) -> u64 {
        self.a * self.m
    }

    pub fn bn(&self) -> u64 {
        self.b * self.n
    }

    /// `(am)^m`, `(bn)^n` and `N = u(am)^m + v(bn)^n`.
    pub fn dims(&self, w: &BezoutWitness) -> (BigInt, BigInt, BigInt) {
        let left = num_traits::pow(BigInt::from(self.am()), self.m as usize);
        let right = num_traits::pow(BigInt::from(self.bn()), self.n as usize);
        let total = &w.u * &left + &w.v * &right;
        (left, right, total)
    }
}

fn big_to_cap(x: &BigInt, cap: usize) -> Result<usize> {
    x.to_usize().filter(|&d| d <= cap).ok_or_else(|| Error::DimensionOverflow { dim: x.to_string(), cap })
}

/// `Tr(A, B)` kept in block form: `L^{⊕u} ⊕ R^{⊕v}` with `L = A^{⊗m}`,
/// `R = B^{⊗n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrImage {
    pub left: ComplexMatrix,
    pub left_reps: usize,
    pub right: ComplexMatrix,
    pub right_reps: usize,
}

impl TrImage {
    pub fn dim(&self) -> usize {
        self.left.dim * self.left_reps + self.right.dim * self.right_reps
    }

    pub fn mul(&self, other: &TrImage) -> Result<TrImage> {
        Ok(TrImage {
            left: self.left.mul(&other.left)?,
            left_reps: self.left_reps,
            right: self.right.mul(&other.right)?,
            right_reps: self.right_reps,
        })
    }

    /// Frobenius distance of the full `N × N` matrices, computed blockwise.
    pub fn distance(&self, other: &TrImage) -> Result<f64> {
        let l = self.left.distance(&other.left)?;
        let r = self.right.distance(&other.right)?;
        Ok((self.left_reps as f64 * l * l + self.right_reps as f64 * r * r).sqrt())
    }

    pub fn identity_deviation(&self) -> f64 {
        let l = self.left.distance(&ComplexMatrix::identity(self.left.dim)).unwrap_or(f64::INFINITY);
        let r = self.right.distance(&ComplexMatrix::identity(self.right.dim)).unwrap_or(f64::INFINITY);
        (self.left_reps as f64 * l * l + self.right_reps as f64 * r * r).sqrt()
    }

    pub fn to_dense(&self, cap: usize) -> Result<ComplexMatrix> {
        dsum_capped(
            &ksum_capped(&self.left, self.left_reps, cap)?,
            &ksum_capped(&self.right, self.right_reps, cap)?,
            cap,
        )
    }
}

fn check_tr_inputs(a: &ComplexMatrix, b: &ComplexMatrix, p: TrParams) -> Result<()> {
    if a.dim as u64 != p.am() {
        return Err(Error::DimensionMismatch { expected: p.am() as usize, got: a.dim });
    }
    if b.dim as u64 != p.bn() {
        return Err(Error::DimensionMismatch { expected: p.bn() as usize, got: b.dim });
    }
    Ok(())
}

/// Block form of `Tr(A, B)`; fails with `DimensionOverflow` when `N > cap`.
pub fn tr_blocks(a: &ComplexMatrix, b: &ComplexMatrix, w: &BezoutWitness, p: TrParams, cap: usize) -> Result<TrImage> {
    check_tr_inputs(a, b, p)?;
    let (_, _, total) = p.dims(w);
    big_to_cap(&total, cap)?;
    Ok(TrImage {
        left: ktensor_capped(a, p.m as usize, cap)?,
        left_reps: big_to_cap(&w.u, cap)?,
        right: ktensor_capped(b, p.n as usize, cap)?,
        right_reps: big_to_cap(&w.v, cap)?,
    })
}

/// `Tr(A, B) = (A^{⊗m})^{⊕u} ⊕ (B^{⊗n})^{⊕v}` as a dense `N × N` matrix.
pub fn tr_apply(a: &ComplexMatrix, b: &ComplexMatrix, w: &BezoutWitness, p: TrParams, cap: usize) -> Result<ComplexMatrix> {
    check_tr_inputs(a, b, p)?;
    let (_, _, total) = p.dims(w);
    big_to_cap(&total, cap)?;
    let left = ksum_capped(&ktensor_capped(a, p.m as usize, cap)?, big_to_cap(&w.u, cap)?, cap)?;
    let right = ksum_capped(&ktensor_capped(b, p.n as usize, cap)?, big_to_cap(&w.v, cap)?, cap)?;
    dsum_capped(&left, &right, cap)
}

/// Exact image of `(αI_{am}, βI_{bn})` under `Tr`: the two diagonal scalars
/// `(α^m I_{(am)^m})^{⊕u}` and `(β^n I_{(bn)^n})^{⊕v}`.
pub fn tr_central(
    alpha: &CentralElement,
    beta: &CentralElement,
    w: &BezoutWitness,
    p: TrParams,
) -> Result<(CentralElement, CentralElement)> {
    if alpha.dim != p.am() || beta.dim != p.bn() {
        return Err(Error::DimensionMismatch { expected: p.am() as usize, got: alpha.dim as usize });
    }
    let reps = |x: &BigInt| x.to_u64().ok_or_else(|| Error::DimensionOverflow { dim: x.to_string(), cap: usize::MAX });
    let left = alpha.tensor_power(p.m as u32)?.block_sum(reps(&w.u)?)?;
    let right = beta.tensor_power(p.n as u32)?.block_sum(reps(&w.v)?)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bezout_uv;

    fn close(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
        a.distance(b).unwrap() <= tolerance(a.dim())
    }

    #[test]
    fn sums_and_products_of_identities() {
        assert_eq!(dsum(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3)).unwrap(), ComplexMatrix::identity(5));
        let a = random_unitary(3, 1);
        assert_eq!(ktensor(&a, 1).unwrap(), a);
        assert_eq!(ksum(&a, 1).unwrap(), a);
        let b = random_unitary(4, 2);
        assert_eq!(tensor(&ComplexMatrix::identity(3), &b).unwrap(), ksum(&b, 3).unwrap());
    }

    #[test]
    fn kronecker_block_layout() {
        let a = ComplexMatrix::from_fn(2, |i, j| Complex64::new((2 * i + j) as f64, 0.0));
        let b = ComplexMatrix::from_fn(2, |i, j| Complex64::new(0.0, (10 * i + j) as f64));
        let k = tensor(&a, &b).unwrap();
        // block (1, 0) is a_10 · B = 2B
        assert_eq!(k.get(2, 1), Complex64::new(0.0, 2.0));
        assert_eq!(k.get(3, 0), Complex64::new(0.0, 20.0));
    }

    #[test]
    fn dimension_cap() {
        let a = ComplexMatrix::identity(65);
        assert!(matches!(tensor(&a, &a), Err(Error::DimensionOverflow { .. })));
        assert!(matches!(ktensor(&ComplexMatrix::identity(2), 13), Err(Error::DimensionOverflow { .. })));
    }

    #[test]
    fn stab_and_block_embeddings() {
        let a = random_unitary(3, 5);
        assert_eq!(stab(&a, 0).unwrap(), a);
        assert_eq!(sj_embed(&a, 4, 1).unwrap(), stab(&a, 9).unwrap());
        let product = (1..=4).try_fold(ComplexMatrix::identity(12), |acc, j| acc.mul(&sj_embed(&a, 4, j)?)).unwrap();
        assert!(close(&product, &ksum(&a, 4).unwrap()));
        assert_eq!(sj_embed(&a, 4, 5).unwrap_err(), Error::BadIndex { index: 5, count: 4 });
        assert!(sj_embed(&a, 4, 0).is_err());
    }

    #[test]
    fn adjacent_block_embeddings_are_conjugate() {
        let a = random_unitary(3, 9);
        for j in 1..4 {
            let p = block_swap_permutation(3, 4, j).unwrap();
            let moved = p.conjugate(&sj_embed(&a, 4, j).unwrap()).unwrap();
            assert_eq!(moved, sj_embed(&a, 4, j + 1).unwrap());
        }
    }

    #[test]
    fn shuffle_small_cases() {
        assert!(commutation_permutation(5, 1).unwrap().is_identity());
        let p = commutation_permutation(2, 2).unwrap();
        assert_eq!(p.to_string(), "(0)(1 2)(3)");
    }

    /// Brute force over all 24 permutations of 4 indices. For a generic `A`
    /// the solutions are the shuffle composed with the two block
    /// permutations that commute with `I_2 ⊗ A`.
    #[test]
    fn shuffle_2x2_by_brute_force() {
        let a = random_unitary(2, 3);
        let lhs = tensor(&a, &ComplexMatrix::identity(2)).unwrap();
        let rhs = tensor(&ComplexMatrix::identity(2), &a).unwrap();
        let mut solutions = Vec::new();
        let mut perm = [0usize, 1, 2, 3];
        permute_all(&mut perm, 0, &mut |p| {
            let sigma = PermutationIndexMap::new(p.to_vec()).unwrap();
            if close(&sigma.conjugate(&rhs).unwrap(), &lhs) {
                solutions.push(p.to_vec());
            }
        });
        let shuffle = commutation_permutation(2, 2).unwrap().images().to_vec();
        let swapped: Vec<usize> = shuffle.iter().map(|&k| [2, 3, 0, 1][k]).collect();
        solutions.sort();
        let mut want = vec![shuffle, swapped];
        want.sort();
        assert_eq!(solutions, want);
    }

    fn permute_all(p: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn shuffle_identity_via_dense_multiplication() {
        let p = commutation_permutation(2, 3).unwrap();
        let dense = p.to_matrix();
        for seed in 0..100 {
            let a = random_unitary(2, seed);
            let lhs = tensor(&a, &ComplexMatrix::identity(3)).unwrap();
            let rhs = dense.mul(&tensor(&ComplexMatrix::identity(3), &a).unwrap()).unwrap().mul(&dense.transpose()).unwrap();
            assert!(close(&lhs, &rhs));
        }
    }

    #[test]
    fn central_scalars() {
        let c = CentralElement::new(2, 1, 3).unwrap();
        assert_eq!(central_scalar(&c), ComplexMatrix::scalar(3, Complex64::new(-1.0, 0.0)));
        assert_eq!(central_scalar(&CentralElement::new(7, 0, 4).unwrap()), ComplexMatrix::identity(4));
        let w = CentralElement::new(3, 1, 1).unwrap().root();
        assert!((w - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn random_unitaries_are_unitary_and_reproducible() {
        for seed in 0..20 {
            let u = random_unitary(8, seed);
            assert!(is_unitary(&u));
            assert_eq!(u, random_unitary(8, seed));
        }
        assert_ne!(random_unitary(4, 1), random_unitary(4, 2));
    }

    #[test]
    fn path_of_identity_is_constant() {
        let path = UnitaryPath::new(&ComplexMatrix::identity(3)).unwrap();
        for t in [0.0, 0.3, 1.0] {
            assert!(close(&path.at(t), &ComplexMatrix::identity(3)));
        }
    }

    #[test]
    fn path_of_minus_identity_uses_pi_branch() {
        let u = ComplexMatrix::scalar(2, Complex64::new(-1.0, 0.0));
        let path = UnitaryPath::new(&u).unwrap();
        assert!(path.angles().iter().all(|&th| th == PI));
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let want = ComplexMatrix::scalar(2, Complex64::from_polar(1.0, PI * t));
            assert!(close(&path.at(t), &want), "t = {t}");
        }
    }

    #[test]
    fn path_to_shuffle_permutation() {
        let p = commutation_permutation(2, 2).unwrap().to_matrix();
        let path = UnitaryPath::new(&p).unwrap();
        assert!(close(&path.at(0.0), &ComplexMatrix::identity(4)));
        assert!(close(&path.at(1.0), &p));
        for t in [0.25, 0.5, 0.75] {
            assert!(is_unitary(&path.at(t)));
        }
    }

    #[test]
    fn permutation_path_agrees_with_schur_path() {
        // the principal-branch path is a spectral function of U, so the
        // eigenbasis chosen by either route cannot matter
        for (m, n) in [(2, 2), (2, 3), (3, 4), (4, 4), (5, 3)] {
            let perm = commutation_permutation(m, n).unwrap();
            let exact = UnitaryPath::from_permutation(&perm);
            let schur = UnitaryPath::new(&perm.to_matrix()).unwrap();
            for t in [0.0, 0.3, 0.5, 0.9, 1.0] {
                assert!(close(&exact.at(t), &schur.at(t)), "({m},{n}) t={t}");
            }
        }
    }

    #[test]
    fn permutation_path_on_stubborn_shuffles() {
        for (m, n) in [(6, 6), (8, 8), (7, 5)] {
            let perm = commutation_permutation(m, n).unwrap();
            let p = perm.to_matrix();
            let path = UnitaryPath::from_permutation(&perm);
            assert!(close(&path.at(0.0), &ComplexMatrix::identity(m * n)));
            assert!(close(&path.at(1.0), &p));
            assert!(is_unitary(&path.at(0.37)));
            assert!(path.angles().iter().all(|&th| th > -PI && th <= PI));
        }
    }

    #[test]
    fn path_rejects_non_unitary() {
        let m = ComplexMatrix::scalar(2, Complex64::new(2.0, 0.0));
        assert!(matches!(UnitaryPath::new(&m), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn shuffle_homotopy_endpoints() {
        let a = random_unitary(3, 4);
        let h = ShuffleHomotopy::new(3, 2).unwrap();
        let i2 = ComplexMatrix::identity(2);
        assert!(close(&h.at(&a, 0.0).unwrap(), &tensor(&i2, &a).unwrap()));
        assert!(close(&h.at(&a, 1.0).unwrap(), &tensor(&a, &i2).unwrap()));
        assert!(is_unitary(&h.at(&a, 0.4).unwrap()));

        let constant = ShuffleHomotopy::new(3, 1).unwrap();
        for t in [0.0, 0.5, 1.0] {
            assert!(close(&constant.at(&a, t).unwrap(), &a));
        }
    }

    #[test]
    fn tr_on_identities_and_central_pairs() {
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let p = TrParams { a: 1, b: 1, m: 2, n: 3 };
        let id = tr_apply(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3), &w, p, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(id, ComplexMatrix::identity(67));
        for alpha in 0..2 {
            for beta in 0..3 {
                let ca = CentralElement::new(2, alpha, 2).unwrap();
                let cb = CentralElement::new(3, beta, 3).unwrap();
                let image = tr_apply(&central_scalar(&ca), &central_scalar(&cb), &w, p, DEFAULT_DIM_CAP).unwrap();
                assert!(close(&image, &ComplexMatrix::identity(67)));
                let (l, r) = tr_central(&ca, &cb, &w, p).unwrap();
                assert!(l.is_identity() && r.is_identity());
                assert_eq!((l.dim(), r.dim()), (40, 27));
            }
        }
    }

    #[test]
    fn tr_blocks_match_dense() {
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let p = TrParams { a: 1, b: 1, m: 2, n: 3 };
        let (a, b) = (random_unitary(2, 1), random_unitary(3, 2));
        let blocks = tr_blocks(&a, &b, &w, p, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(blocks.dim(), 67);
        assert_eq!(blocks.to_dense(DEFAULT_DIM_CAP).unwrap(), tr_apply(&a, &b, &w, p, DEFAULT_DIM_CAP).unwrap());
    }

    #[test]
    fn tr_errors() {
        let w = bezout_uv(1, 1, 2, 5).unwrap();
        let p = TrParams { a: 1, b: 1, m: 2, n: 5 };
        let (a, b) = (ComplexMatrix::identity(2), ComplexMatrix::identity(5));
        match tr_apply(&a, &b, &w, p, DEFAULT_DIM_CAP) {
            Err(Error::DimensionOverflow { dim, cap }) => assert_eq!((dim.as_str(), cap), ("10937", 4096)),
            other => panic!("expected overflow, got {other:?}"),
        }
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let p = TrParams { a: 1, b: 1, m: 2, n: 3 };
        assert!(matches!(tr_apply(&a, &b, &w, p, DEFAULT_DIM_CAP), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn text_format_round_trip() {
        let u = random_unitary(3, 8);
        let text = u.to_text();
        assert!(text.starts_with("3\n"));
        assert_eq!(ComplexMatrix::parse_text(&text).unwrap(), u);
        assert!(ComplexMatrix::parse_text("2\n1,0 0,0\n0,0\n").is_err());
        assert!(ComplexMatrix::parse_text("1\n1;0\n").is_err());
        assert!(ComplexMatrix::parse_text("1\nNaN,0\n").is_err());
    }
}
