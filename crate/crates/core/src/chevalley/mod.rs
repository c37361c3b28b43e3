//! Chevalley basis of the simple Lie algebra attached to a root system, with
//! exact integer structure constants.
//!
//! Basis: coroots h_i spanning the Cartan subalgebra, plus one vector e_rho
//! per root. Brackets:
//!   [h, e_rho]        = (rho, h) e_rho
//!   [e_rho, e_-rho]   = rho_vee (as a Cartan vector)
//!   [e_rho, e_sigma]  = N(rho, sigma) e_{rho+sigma}   when rho+sigma is a root
//!
//! The sign table N is fixed by choosing +(p+1) on extraspecial pairs (the
//! height-least decomposition of each positive root) and propagating every
//! other constant through Jacobi identities; an exhaustive Jacobi check over
//! all basis triples validates the table.

mod analysis;
mod complete;
mod spec;

pub use analysis::{
    check_closure, check_regular_torus, identify_type, solve_mixed_coefficients,
    subalgebra_rank, ClosureReport, CoeffSolution, RankReport, TypeId,
};
pub use complete::{complete_stabilizer, Completion};
pub use spec::{
    resolve, to_rats, toral_kernel_basis, unresolve, MixedTerm, RatS, ResolvedSpec, SpecError,
    SubalgebraSpec, ToralSpec,
};

use std::collections::HashMap;

use num_traits::Zero;

use crate::qlinalg::{dot, rat_int, vec_axpy, vec_is_zero, zero_vec, QVector, Rat};
use crate::roots::{RootSystem, RootSystemType};

pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// n[i][j] = N(root_i, root_j); 0 when the sum is not a root.
    n: Vec<Vec<i64>>,
}

/// Longest root string in the supported systems has p+1 <= 3 (type G2).
fn string_down_length(rs: &RootSystem, rho: usize, sigma: usize) -> i64 {
    let mut p = 0i64;
    let mut v = rs.root(sigma).clone();
    loop {
        v = crate::qlinalg::vec_sub(&v, rs.root(rho));
        if rs.is_root(&v) {
            p += 1;
        } else {
            return p;
        }
    }
}

struct NBuilder<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, usize), i64>,
    /// extra[xi] = (rho, sigma): the extraspecial decomposition of positive
    /// root xi, i.e. the one with rho least in the (height, lex) root order.
    extra: Vec<Option<(usize, usize)>>,
}

impl<'a> NBuilder<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let npos = rs.num_positive();
        let mut extra = vec![None; npos];
        for xi in 0..npos {
            for rho in 0..xi {
                if let Some(sigma) = rs
                    .root_index(&crate::qlinalg::vec_sub(rs.root(xi), rs.root(rho)))
                {
                    if rs.is_positive(sigma) {
                        extra[xi] = Some((rho, sigma));
                        break;
                    }
                }
            }
        }
        NBuilder {
            rs,
            memo: HashMap::new(),
            extra,
        }
    }

    fn n(&mut self, i: usize, j: usize) -> Rat {
        if self.rs.sum_root(i, j).is_none() {
            return Rat::zero();
        }
        if let Some(&v) = self.memo.get(&(i, j)) {
            return rat_int(v);
        }
        let val = self.compute(i, j);
        assert!(val.is_integer(), "structure constant must be integral");
        let as_int = i64::try_from(val.to_integer()).expect("constant in i64 range");
        assert!(as_int != 0, "structure constant of a root sum is nonzero");
        self.memo.insert((i, j), as_int);
        val
    }

    fn compute(&mut self, i: usize, j: usize) -> Rat {
        let rs = self.rs;
        let (ip, jp) = (rs.is_positive(i), rs.is_positive(j));
        if !ip && !jp {
            // Chevalley involution: N(-rho, -sigma) = -N(rho, sigma).
            return -self.n(rs.neg(i), rs.neg(j));
        }
        if !ip && jp {
            return -self.n(j, i);
        }
        if ip && jp {
            let xi = rs.sum_root(i, j).expect("sum is a root");
            let (r1, s1) = self.extra[xi].expect("positive root has a decomposition");
            if (i, j) == (r1, s1) {
                return rat_int(string_down_length(rs, i, j) + 1);
            }
            if (j, i) == (r1, s1) {
                return rat_int(-(string_down_length(rs, j, i) + 1));
            }
            // Jacobi on (e_i, e_j, e_{-s1}); the e_{r1} component reads
            //   N(i,j) N(xi,-s1) + N(j,-s1) N(j-s1, i) + N(-s1,i) N(i-s1, j) = 0.
            let ns1 = rs.neg(s1);
            let mut t = Rat::zero();
            if let Some(d) = rs.sum_root(j, ns1) {
                t += self.n(j, ns1) * self.n(d, i);
            }
            if let Some(d) = rs.sum_root(ns1, i) {
                t += self.n(ns1, i) * self.n(d, j);
            }
            let denom = self.n(xi, ns1);
            return -t / denom;
        }
        // i positive, j negative: N(gamma, -beta) with gamma = root_i,
        // beta = -root_j, gamma - beta a root.
        let gamma = i;
        let beta = rs.neg(j);
        let alpha = rs.sum_root(i, j).expect("sum is a root");
        if !rs.is_positive(alpha) {
            // N(gamma, -beta) = N(beta, -gamma), and beta - gamma > 0.
            return self.n(beta, rs.neg(gamma));
        }
        // Jacobi on (e_alpha, e_beta, e_-beta); the e_alpha component reads
        //   N(alpha,beta) N(gamma,-beta) + (alpha, beta_vee)
        //     + N(-beta,alpha) N(alpha-beta, beta) = 0.
        let nb = rs.neg(beta);
        let mut t = rs.pairing(rs.root(alpha), beta);
        if let Some(d) = rs.sum_root(nb, alpha) {
            t += self.n(nb, alpha) * self.n(d, beta);
        }
        let denom = self.n(alpha, beta);
        -t / denom
    }
}

/// A Lie algebra element in the Chevalley basis: a Cartan vector (ambient
/// coordinates, constrained to the coroot span) plus one coefficient per root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub h: QVector,
    pub e: Vec<Rat>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.h) && self.e.iter().all(|c| c.is_zero())
    }

    /// Flat coordinates (ambient Cartan coords, then root coefficients) for
    /// span arithmetic.
    pub fn flat(&self) -> QVector {
        let mut v = self.h.clone();
        v.extend(self.e.iter().cloned());
        v
    }
}

pub(crate) fn fmt_vec(v: &[Rat]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl ChevalleyAlgebra {
    pub fn new(rst: RootSystemType) -> Self {
        ChevalleyAlgebra::from_root_system(RootSystem::new(rst))
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        let total = rs.num_roots();
        let mut b = NBuilder::new(&rs);
        let mut n = vec![vec![0i64; total]; total];
        for i in 0..total {
            for j in 0..total {
                if rs.sum_root(i, j).is_some() {
                    let v = b.n(i, j);
                    n[i][j] = i64::try_from(v.to_integer()).expect("fits i64");
                }
            }
        }
        ChevalleyAlgebra { rs, n }
    }

    /// Structure constant N(root_i, root_j); zero when the sum is not a root.
    pub fn n_const(&self, i: usize, j: usize) -> i64 {
        self.n[i][j]
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    pub fn zero(&self) -> Element {
        Element {
            h: zero_vec(self.rs.ambient),
            e: vec![Rat::zero(); self.rs.num_roots()],
        }
    }

    /// The Cartan element with ambient coordinate vector `v` (must lie in the
    /// coroot span; asserted).
    pub fn cartan(&self, v: &QVector) -> Element {
        let coroots: Vec<QVector> = (0..self.rs.num_roots())
            .map(|i| self.rs.coroot(i).clone())
            .collect();
        let m = crate::qlinalg::QMatrix::new(coroots, self.rs.ambient);
        assert!(
            m.in_row_span(v).is_some(),
            "cartan vector outside the coroot span"
        );
        let mut x = self.zero();
        x.h = v.clone();
        x
    }

    pub fn root_vector(&self, i: usize) -> Element {
        let mut x = self.zero();
        x.e[i] = rat_int(1);
        x
    }

    pub fn scale(&self, c: &Rat, x: &Element) -> Element {
        Element {
            h: crate::qlinalg::vec_scale(c, &x.h),
            e: x.e.iter().map(|a| c * a).collect(),
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element {
            h: crate::qlinalg::vec_add(&x.h, &y.h),
            e: x.e.iter().zip(&y.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let rs = &self.rs;
        let mut out = self.zero();
        let xs: Vec<usize> = (0..x.e.len()).filter(|&i| !x.e[i].is_zero()).collect();
        let ys: Vec<usize> = (0..y.e.len()).filter(|&i| !y.e[i].is_zero()).collect();
        let xh = !vec_is_zero(&x.h);
        let yh = !vec_is_zero(&y.h);
        if xh {
            for &j in &ys {
                let c = dot(rs.root(j), &x.h) * &y.e[j];
                out.e[j] += c;
            }
        }
        if yh {
            for &i in &xs {
                let c = dot(rs.root(i), &y.h) * &x.e[i];
                out.e[i] -= c;
            }
        }
        for &i in &xs {
            for &j in &ys {
                let c = &x.e[i] * &y.e[j];
                if j == rs.neg(i) {
                    out.h = vec_axpy(&out.h, &c, rs.coroot(i));
                } else if let Some(k) = rs.sum_root(i, j) {
                    if self.n[i][j] != 0 {
                        out.e[k] += c * rat_int(self.n[i][j]);
                    }
                }
            }
        }
        out
    }

    /// Pretty-print an element with root coordinates resolved.
    pub fn describe(&self, x: &Element) -> String {
        let mut parts = Vec::new();
        if !vec_is_zero(&x.h) {
            parts.push(format!("h[{}]", fmt_vec(&x.h)));
        }
        for (i, c) in x.e.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if c == &rat_int(1) {
                String::new()
            } else if c == &rat_int(-1) {
                "-".to_string()
            } else {
                format!("{c} ")
            };
            parts.push(format!("{coef}e[{}]", fmt_vec(self.rs.root(i))));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Number of ordered basis triples violating the Jacobi identity. The
    /// basis is all coroots of simple roots plus all root vectors.
    pub fn jacobi_violations(&self) -> usize {
        let basis = self.basis();
        let mut bad = 0;
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let t1 = self.bracket(x, &self.bracket(y, z));
                    let t2 = self.bracket(y, &self.bracket(z, x));
                    let t3 = self.bracket(z, &self.bracket(x, y));
                    let s = self.add(&self.add(&t1, &t2), &t3);
                    if !s.is_zero() {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    pub fn basis(&self) -> Vec<Element> {
        let mut basis: Vec<Element> = (0..self.rs.rank())
            .map(|s| self.cartan(&self.rs.coroot(self.rs.simple_root(s)).clone()))
            .collect();
        basis.extend((0..self.rs.num_roots()).map(|i| self.root_vector(i)));
        basis
    }
}
