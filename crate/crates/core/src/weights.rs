//! Weights of an irreducible highest-weight module, with exact
//! multiplicities by Freudenthal's recursion.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Signed;

use crate::qlinalg::{dot, rat_int, vec_add, vec_scale, vec_sub, QMatrix, QVector, Rat};
use crate::roots::RootSystem;

/// Multiplicity table of the module with highest weight lambda. Entries are
/// stored on dominant weights; lookups reduce to the dominant chamber first.
pub struct WeightTable {
    lambda: QVector,
    /// Every weight of the module, all chambers.
    weights: HashSet<QVector>,
    mults: HashMap<QVector, u64>,
}

impl WeightTable {
    pub fn multiplicity(&self, rs: &RootSystem, mu: &QVector) -> u64 {
        *self
            .mults
            .get(&rs.dominant_representative(mu))
            .unwrap_or(&0)
    }

    pub fn is_extreme(&self, mu: &QVector) -> bool {
        dot(mu, mu) == dot(&self.lambda, &self.lambda) && self.weights.contains(mu)
    }

    pub fn dim(&self, rs: &RootSystem) -> u64 {
        self.weights.iter().map(|w| self.multiplicity(rs, w)).sum()
    }

    pub fn weights(&self) -> impl Iterator<Item = &QVector> {
        self.weights.iter()
    }
}

/// Expand v in the simple-root basis; None when v is outside their span or
/// the coefficients are not all nonnegative integers.
fn nonneg_integer_simple_coords(rs: &RootSystem, v: &QVector) -> Option<Vec<u64>> {
    let m = QMatrix::from_rows(
        rs.simple_indices()
            .iter()
            .map(|&i| rs.root(i).clone())
            .collect(),
    );
    let coeffs = m.in_row_span(v)?;
    let mut out = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        if !c.is_integer() || c.is_negative() {
            return None;
        }
        out.push(c.to_integer().try_into().ok()?);
    }
    Some(out)
}

/// True when mu is a weight of the module with highest weight lambda: its
/// dominant conjugate must sit below lambda in the root lattice.
fn is_weight(rs: &RootSystem, lambda: &QVector, mu: &QVector) -> bool {
    let dom = rs.dominant_representative(mu);
    nonneg_integer_simple_coords(rs, &vec_sub(lambda, &dom)).is_some()
}

/// All weights with exact multiplicities, for a dominant integral lambda.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &QVector) -> WeightTable {
    assert!(rs.is_dominant(lambda), "highest weight must be dominant");
    // Walk the weight set: from any weight other than the lowest, some
    // further simple-root subtraction stays inside, so a breadth-first walk
    // from lambda reaches everything.
    let mut weights: HashSet<QVector> = HashSet::new();
    let mut queue = VecDeque::new();
    weights.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for &s in rs.simple_indices() {
            let next = vec_sub(&mu, rs.root(s));
            if !weights.contains(&next) && is_weight(rs, lambda, &next) {
                weights.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    // Dominant weights by increasing depth below lambda.
    let mut doms: Vec<(u64, QVector)> = weights
        .iter()
        .filter(|w| rs.is_dominant(w))
        .map(|w| {
            let depth: u64 = nonneg_integer_simple_coords(rs, &vec_sub(lambda, w))
                .expect("weights sit below lambda")
                .iter()
                .sum();
            (depth, w.clone())
        })
        .collect();
    doms.sort();

    let rho = {
        let mut acc = vec![Rat::from_integer(0.into()); rs.ambient];
        for p in 0..rs.num_positive() {
            acc = vec_add(&acc, rs.root(p));
        }
        vec_scale(&crate::qlinalg::rat(1, 2), &acc)
    };
    let norm2 = |v: &QVector| dot(v, v);

    let mut mults: HashMap<QVector, u64> = HashMap::new();
    for (depth, mu) in doms {
        if depth == 0 {
            mults.insert(mu, 1);
            continue;
        }
        // Freudenthal: (|lambda+rho|^2 - |mu+rho|^2) m(mu)
        //   = 2 sum over positive gamma, k >= 1 of (mu + k gamma, gamma) m(mu + k gamma).
        let mut rhs = Rat::from_integer(0.into());
        for p in 0..rs.num_positive() {
            let gamma = rs.root(p);
            let mut k = 1i64;
            loop {
                let shifted = vec_add(&mu, &vec_scale(&rat_int(k), gamma));
                if !weights.contains(&shifted) && !is_weight(rs, lambda, &shifted) {
                    break;
                }
                let m = *mults
                    .get(&rs.dominant_representative(&shifted))
                    .expect("shallower weights are already computed");
                rhs += dot(&shifted, gamma) * rat_int(m as i64);
                k += 1;
            }
        }
        rhs *= rat_int(2);
        let factor = norm2(&vec_add(lambda, &rho)) - norm2(&vec_add(&mu, &rho));
        assert!(factor.is_positive(), "Freudenthal factor must be positive");
        let m = rhs / factor;
        assert!(
            m.is_integer() && m.is_positive(),
            "multiplicity must be a positive integer"
        );
        mults.insert(mu, m.to_integer().try_into().expect("small multiplicity"));
    }

    WeightTable {
        lambda: lambda.clone(),
        weights,
        mults,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystemType;

    fn fw(rs: &RootSystem, coeffs: &[i64]) -> QVector {
        let fws = rs.fundamental_weights();
        let mut acc = vec![Rat::from_integer(0.into()); rs.ambient];
        for (i, &c) in coeffs.iter().enumerate() {
            acc = vec_add(&acc, &vec_scale(&rat_int(c), &fws[i]));
        }
        acc
    }

    fn total_dim(rs: &RootSystem, table: &WeightTable) -> u64 {
        table.dim(rs)
    }

    #[test]
    fn adjoint_of_a2_has_dimension_eight() {
        let rs = RootSystem::new(RootSystemType::A(2));
        let theta = rs.root(rs.highest_root()).clone();
        let t = weight_multiplicities(&rs, &theta);
        assert_eq!(total_dim(&rs, &t), 8);
        let zero = vec![Rat::from_integer(0.into()); rs.ambient];
        assert_eq!(t.multiplicity(&rs, &zero), 2);
    }

    #[test]
    fn b3_spin_representation_is_extreme_everywhere() {
        let rs = RootSystem::new(RootSystemType::B(3));
        let t = weight_multiplicities(&rs, &fw(&rs, &[0, 0, 1]));
        assert_eq!(total_dim(&rs, &t), 8);
        for w in &t.weights {
            assert!(t.is_extreme(w));
        }
    }

    #[test]
    fn c3_second_fundamental_has_a_double_zero_weight() {
        let rs = RootSystem::new(RootSystemType::C(3));
        let t = weight_multiplicities(&rs, &fw(&rs, &[0, 1, 0]));
        assert_eq!(total_dim(&rs, &t), 14);
        let zero = vec![Rat::from_integer(0.into()); rs.ambient];
        assert_eq!(t.multiplicity(&rs, &zero), 2);
    }

    #[test]
    fn f4_smallest_module_has_dimension_26() {
        let rs = RootSystem::new(RootSystemType::F4);
        let t = weight_multiplicities(&rs, &fw(&rs, &[0, 0, 0, 1]));
        assert_eq!(total_dim(&rs, &t), 26);
        let zero = vec![Rat::from_integer(0.into()); rs.ambient];
        assert_eq!(t.multiplicity(&rs, &zero), 2);
    }

    #[test]
    fn g2_bifundamental_dimension_and_near_extreme_multiplicities() {
        let rs = RootSystem::new(RootSystemType::G2);
        let lam = fw(&rs, &[1, 1]);
        let t = weight_multiplicities(&rs, &lam);
        assert_eq!(total_dim(&rs, &t), 64);
        // A weight one simple step below the highest has multiplicity 1.
        let below = vec_sub(&lam, rs.root(rs.simple_root(0)));
        assert_eq!(t.multiplicity(&rs, &below), 1);
    }
}
