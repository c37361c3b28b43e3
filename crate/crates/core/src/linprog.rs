//! Rational linear feasibility via Fourier-Motzkin elimination.
//!
//! The classification engines reduce "does a dominant weight with this
//! vanishing/positivity pattern exist" to systems of linear equalities and
//! (possibly strict) inequalities over Q. Equalities are substituted away by
//! Gaussian elimination first; Fourier-Motzkin then runs on the residual
//! parameters, which keeps the product step small even when callers pile on
//! many equations. Every constraint produced by the callers is positively
//! homogeneous or has a positive right-hand side, so rational feasibility and
//! lattice-point feasibility agree after clearing denominators; the callers
//! rely on that.

use crate::qlinalg::{common_denominator, dot, vec_is_zero, QMatrix, QVector, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// A single inequality `coeffs . x >= rhs` (or `>` when strict).
#[derive(Debug, Clone, PartialEq, Eq)]
struct Ineq {
    coeffs: QVector,
    rhs: Rat,
    strict: bool,
}

impl Ineq {
    /// Positive rescale to primitive integer coefficients, so that duplicate
    /// constraints collide in the dedup map.
    fn normalized(&self) -> Ineq {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        let l = common_denominator(&all);
        let ints: Vec<BigInt> = all.iter().map(|a| a.numer() * (&l / a.denom())).collect();
        let mut g = BigInt::zero();
        for a in &ints {
            g = gcd_big(&g, a);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let scaled: Vec<Rat> = ints.iter().map(|a| Rat::from(a / &g)).collect();
        let (coeffs, rhs) = {
            let mut c = scaled;
            let r = c.pop().unwrap();
            (c, r)
        };
        Ineq { coeffs, rhs, strict: self.strict }
    }
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// A conjunction of linear constraints over `nvars` rational unknowns.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    pub nvars: usize,
    eqs: Vec<(QVector, Rat)>,
    ineqs: Vec<Ineq>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem { nvars, eqs: Vec::new(), ineqs: Vec::new() }
    }

    fn push(&mut self, coeffs: QVector, rhs: Rat, strict: bool) {
        assert_eq!(coeffs.len(), self.nvars, "constraint arity mismatch");
        self.ineqs.push(Ineq { coeffs, rhs, strict });
    }

    /// coeffs . x >= rhs
    pub fn ge(&mut self, coeffs: QVector, rhs: Rat) {
        self.push(coeffs, rhs, false);
    }

    /// coeffs . x > rhs
    pub fn gt(&mut self, coeffs: QVector, rhs: Rat) {
        self.push(coeffs, rhs, true);
    }

    /// coeffs . x <= rhs
    pub fn le(&mut self, coeffs: QVector, rhs: Rat) {
        let neg: QVector = coeffs.iter().map(|a| -a).collect();
        self.push(neg, -rhs, false);
    }

    /// coeffs . x < rhs
    pub fn lt(&mut self, coeffs: QVector, rhs: Rat) {
        let neg: QVector = coeffs.iter().map(|a| -a).collect();
        self.push(neg, -rhs, true);
    }

    /// coeffs . x == rhs
    pub fn eq(&mut self, coeffs: QVector, rhs: Rat) {
        assert_eq!(coeffs.len(), self.nvars, "constraint arity mismatch");
        self.eqs.push((coeffs, rhs));
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// Returns a rational point satisfying every constraint, or None when the
    /// feasible set is empty.
    pub fn solve(&self) -> Option<QVector> {
        if self.eqs.is_empty() {
            return fourier_motzkin(self.nvars, self.ineqs.iter().map(Ineq::normalized));
        }
        // Affine solution space of the equality part: x = x0 + K t.
        let a = QMatrix::new(self.eqs.iter().map(|(c, _)| c.clone()).collect(), self.nvars);
        let b: QVector = self.eqs.iter().map(|(_, r)| r.clone()).collect();
        let x0 = a.solve(&b)?;
        let kernel = a.kernel();
        let d = kernel.len();
        // Substitute into the inequalities: rows over the parameters t.
        let reduced = self.ineqs.iter().map(|q| {
            let coeffs: QVector = kernel.iter().map(|k| dot(&q.coeffs, k)).collect();
            let rhs = q.rhs.clone() - dot(&q.coeffs, &x0);
            Ineq { coeffs, rhs, strict: q.strict }.normalized()
        });
        let t = fourier_motzkin(d, reduced)?;
        let mut x = x0;
        for (k, ti) in kernel.iter().zip(&t) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += ti * ki;
            }
        }
        Some(x)
    }
}

/// Fourier-Motzkin elimination with back substitution over strict and
/// non-strict inequalities.
fn fourier_motzkin(nvars: usize, ineqs: impl Iterator<Item = Ineq>) -> Option<QVector> {
    let mut active = dedup(ineqs)?;
    let mut remaining: Vec<usize> = (0..nvars).collect();
    // Stack of (var, lower-bound rows, upper-bound rows) for reconstruction.
    let mut stack: Vec<(usize, Vec<Ineq>, Vec<Ineq>)> = Vec::new();

    while !remaining.is_empty() {
        // Greedy order: eliminate the variable creating fewest products.
        let (pick_idx, _) = remaining
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let pos = active.iter().filter(|q| q.coeffs[j].is_positive()).count();
                let neg = active.iter().filter(|q| q.coeffs[j].is_negative()).count();
                (i, pos * neg + pos + neg)
            })
            .min_by_key(|&(_, cost)| cost)
            .unwrap();
        let j = remaining.swap_remove(pick_idx);

        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for q in active {
            if q.coeffs[j].is_positive() {
                lowers.push(q);
            } else if q.coeffs[j].is_negative() {
                uppers.push(q);
            } else {
                rest.push(q);
            }
        }
        for lo in &lowers {
            for hi in &uppers {
                // Scale so the x_j terms cancel; both factors positive.
                let a = lo.coeffs[j].clone();
                let b = -hi.coeffs[j].clone();
                let coeffs: QVector = lo
                    .coeffs
                    .iter()
                    .zip(&hi.coeffs)
                    .map(|(p, q)| &b * p + &a * q)
                    .collect();
                let rhs = &b * &lo.rhs + &a * &hi.rhs;
                rest.push(Ineq { coeffs, rhs, strict: lo.strict || hi.strict }.normalized());
            }
        }
        stack.push((j, lowers, uppers));
        active = dedup(rest.into_iter())?;
    }

    // All variables eliminated: survivors were constant rows, already
    // validated by dedup. Back-substitute.
    let mut x = vec![Rat::zero(); nvars];
    for (j, lowers, uppers) in stack.into_iter().rev() {
        let bound = |q: &Ineq| {
            // q.coeffs . x_other + c_j * x_j >= rhs, solved for x_j.
            let mut rest = Rat::zero();
            for (i, c) in q.coeffs.iter().enumerate() {
                if i != j {
                    rest += c * &x[i];
                }
            }
            (q.rhs.clone() - rest) / q.coeffs[j].clone()
        };
        let lo = lowers
            .iter()
            .map(|q| (bound(q), q.strict))
            .max_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let hi = uppers
            .iter()
            .map(|q| (bound(q), q.strict))
            .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        x[j] = match (lo, hi) {
            (None, None) => Rat::zero(),
            (Some((l, _)), None) => l + Rat::one(),
            (None, Some((h, _))) => h - Rat::one(),
            (Some((l, ls)), Some((h, hs))) => {
                debug_assert!(l < h || (l == h && !ls && !hs), "projection violated");
                if l < h {
                    (l + h) / Rat::from(BigInt::from(2))
                } else {
                    l
                }
            }
        };
    }
    Some(x)
}

/// Keeps, for each coefficient vector, only the strongest bound. Returns None
/// when a constant row is violated.
fn dedup(ineqs: impl Iterator<Item = Ineq>) -> Option<Vec<Ineq>> {
    let mut best: HashMap<QVector, (Rat, bool)> = HashMap::new();
    for q in ineqs {
        if vec_is_zero(&q.coeffs) {
            let ok = if q.strict { Rat::zero() > q.rhs } else { Rat::zero() >= q.rhs };
            if !ok {
                return None;
            }
            continue;
        }
        match best.get_mut(&q.coeffs) {
            None => {
                best.insert(q.coeffs, (q.rhs, q.strict));
            }
            Some(cur) => {
                if q.rhs > cur.0 || (q.rhs == cur.0 && q.strict && !cur.1) {
                    *cur = (q.rhs, q.strict);
                }
            }
        }
    }
    let mut rows: Vec<Ineq> = best
        .into_iter()
        .map(|(coeffs, (rhs, strict))| Ineq { coeffs, rhs, strict })
        .collect();
    rows.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(a.rhs.cmp(&b.rhs)));
    Some(rows)
}

/// Convenience: dense coefficient row with the given sparse entries.
pub fn sparse_row(nvars: usize, entries: &[(usize, Rat)]) -> QVector {
    let mut row = vec![Rat::zero(); nvars];
    for (i, c) in entries {
        row[*i] += c.clone();
    }
    row
}
