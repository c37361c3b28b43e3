//! Exact linear algebra over arbitrary-precision rationals.
//!
//! All geometry in this crate lives in a fixed ambient Q^n, so the only
//! primitives needed are dense vectors, row-reduction, kernels, and exact
//! linear solves. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type QVector = Vec<Rat>;

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from(BigInt::from(num))
}

pub fn zero_vec(n: usize) -> QVector {
    vec![Rat::zero(); n]
}

pub fn dot(u: &[Rat], v: &[Rat]) -> Rat {
    assert_eq!(u.len(), v.len(), "dot product dimension mismatch");
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn vec_add(u: &[Rat], v: &[Rat]) -> QVector {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Rat], v: &[Rat]) -> QVector {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(c: &Rat, v: &[Rat]) -> QVector {
    v.iter().map(|a| c * a).collect()
}

pub fn vec_neg(v: &[Rat]) -> QVector {
    v.iter().map(|a| -a).collect()
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|a| a.is_zero())
}

/// u + c*v, the workhorse of every elimination loop below.
pub fn vec_axpy(u: &[Rat], c: &Rat, v: &[Rat]) -> QVector {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a + c * b).collect()
}

/// Component of `v` orthogonal to `phi` under the standard inner product.
/// Requires `phi` nonzero.
pub fn project_orthogonal(v: &[Rat], phi: &[Rat]) -> QVector {
    let denom = dot(phi, phi);
    assert!(!denom.is_zero(), "projection direction is zero");
    let c = dot(v, phi) / denom;
    vec_sub(v, &vec_scale(&c, phi))
}

/// Orthogonal projection of `v` onto the span of `basis`, via the normal
/// equations (always consistent, even for a dependent basis).
pub fn project_onto_span(v: &[Rat], basis: &[QVector]) -> QVector {
    if basis.is_empty() {
        return zero_vec(v.len());
    }
    let gram: Vec<QVector> = basis
        .iter()
        .map(|bi| basis.iter().map(|bj| dot(bi, bj)).collect())
        .collect();
    let rhs: QVector = basis.iter().map(|bi| dot(bi, v)).collect();
    let c = QMatrix::from_rows(gram)
        .solve(&rhs)
        .expect("normal equations are consistent");
    let mut out = zero_vec(v.len());
    for (ci, bi) in c.iter().zip(basis) {
        out = vec_axpy(&out, ci, bi);
    }
    out
}

/// Returns Some(c) with u = c*v when u and v are parallel and v != 0.
pub fn parallel_ratio(u: &[Rat], v: &[Rat]) -> Option<Rat> {
    assert_eq!(u.len(), v.len());
    let k = v.iter().position(|a| !a.is_zero())?;
    let c = &u[k] / &v[k];
    for i in 0..u.len() {
        if u[i] != &c * &v[i] {
            return None;
        }
    }
    Some(c)
}

/// Dense rational matrix, stored row-major. `ncols` is tracked separately so
/// row-free matrices (rank 0 maps) keep a well-defined domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: Vec<QVector>,
    pub ncols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<QVector>, ncols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ncols, "row length mismatch");
        }
        QMatrix { rows, ncols }
    }

    pub fn from_rows(rows: Vec<QVector>) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::new(rows, ncols)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = zero_vec(n);
                r[i] = Rat::one();
                r
            })
            .collect();
        QMatrix { rows, ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut rows = vec![zero_vec(self.nrows()); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                rows[j][i] = a.clone();
            }
        }
        QMatrix { rows, ncols: self.nrows() }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> QVector {
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    pub fn mul_mat(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols, other.nrows(), "matrix product dimension mismatch");
        let ot = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| ot.rows.iter().map(|c| dot(r, c)).collect())
            .collect();
        QMatrix { rows, ncols: other.ncols }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols, other.ncols);
        assert_eq!(self.nrows(), other.nrows());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| vec_sub(a, b))
            .collect();
        QMatrix { rows, ncols: self.ncols }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.ncols {
            let Some(pr) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(lead, pr);
            let inv = rows[lead][col].recip();
            rows[lead] = vec_scale(&inv, &rows[lead]);
            for r in 0..rows.len() {
                if r != lead && !rows[r][col].is_zero() {
                    let c = -rows[r][col].clone();
                    rows[r] = vec_axpy(&rows[r], &c, &rows[lead]);
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == rows.len() {
                break;
            }
        }
        (QMatrix { rows, ncols: self.ncols }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of { x : A x = 0 }, one vector per free column.
    pub fn kernel(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut m = vec![None; self.ncols];
            for (row, &col) in pivots.iter().enumerate() {
                m[col] = Some(row);
            }
            m
        };
        for free in 0..self.ncols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = zero_vec(self.ncols);
            v[free] = Rat::one();
            for (col, p) in pivot_of_col.iter().enumerate() {
                if let Some(row) = p {
                    v[col] = -r.rows[*row][free].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of A x = b, or None when inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<QVector> {
        assert_eq!(b.len(), self.nrows(), "rhs length mismatch");
        let mut aug_rows: Vec<QVector> = Vec::with_capacity(self.nrows());
        for (r, bi) in self.rows.iter().zip(b) {
            let mut row = r.clone();
            row.push(bi.clone());
            aug_rows.push(row);
        }
        let aug = QMatrix { rows: aug_rows, ncols: self.ncols + 1 };
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return None; // pivot in the rhs column: inconsistent
        }
        let mut x = zero_vec(self.ncols);
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red.rows[row][self.ncols].clone();
        }
        Some(x)
    }

    /// Coefficients expressing `b` in the row span, or None when outside it.
    pub fn in_row_span(&self, b: &[Rat]) -> Option<QVector> {
        self.transpose().solve(b)
    }
}

/// Span dimension of a list of vectors.
pub fn span_rank(vectors: &[QVector], ambient: usize) -> usize {
    QMatrix::new(vectors.to_vec(), ambient).rank()
}

/// Least common multiple of the coordinate denominators; scaling by it clears
/// all fractions. Useful for stable display of direction vectors.
pub fn common_denominator(v: &[Rat]) -> BigInt {
    let mut l = BigInt::one();
    for a in v {
        let d = a.denom().abs();
        let g = gcd_big(&l, &d);
        l = l / g * d;
    }
    l
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    if a.is_zero() {
        BigInt::one()
    } else {
        a
    }
}

/// Canonical integer representative of the line through `v`: fractions
/// cleared, coordinates coprime, first nonzero coordinate positive.
pub fn primitive_direction(v: &[Rat]) -> QVector {
    assert!(!vec_is_zero(v), "primitive direction of zero vector");
    let l = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|a| a.numer() * (&l / a.denom())).collect();
    let mut g = BigInt::zero();
    for a in &ints {
        g = gcd_big(&g, a);
    }
    let mut out: Vec<BigInt> = ints.iter().map(|a| a / &g).collect();
    if let Some(first) = out.iter().find(|a| !a.is_zero()) {
        if first.is_negative() {
            for a in &mut out {
                *a = -a.clone();
            }
        }
    }
    out.into_iter().map(Rat::from).collect()
}
