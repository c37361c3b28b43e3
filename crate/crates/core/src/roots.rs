//! Root systems of types A-D (bounded rank), F4, G2, and the product A1xA1,
//! realized in their standard orthonormal coordinates with the plain dot
//! product as invariant form.
//!
//! Roots are indexed: positives first, sorted by (height, coordinates), then
//! the negatives in matching order. All downstream combinatorics (planes,
//! Weyl permutations, structure constants) works on these indices; the
//! coordinate vectors themselves are exact rationals.

use crate::qlinalg::{
    dot, rat, rat_int, vec_neg, vec_scale, vec_sub, zero_vec, QMatrix, QVector, Rat,
};
use num_traits::Signed;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

/// Maximum classical rank the builders accept. Keeps sweeps and Weyl orbit
/// searches within sane bounds.
pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSystemType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    F4,
    G2,
    /// Product of two A1 factors, realized in R^4.
    A1xA1,
}

impl RootSystemType {
    pub fn rank(&self) -> usize {
        match self {
            RootSystemType::A(n)
            | RootSystemType::B(n)
            | RootSystemType::C(n)
            | RootSystemType::D(n) => *n,
            RootSystemType::F4 => 4,
            RootSystemType::G2 | RootSystemType::A1xA1 => 2,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            RootSystemType::A(n) => n + 1,
            RootSystemType::B(n) | RootSystemType::C(n) | RootSystemType::D(n) => *n,
            RootSystemType::F4 | RootSystemType::A1xA1 => 4,
            RootSystemType::G2 => 3,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !matches!(self, RootSystemType::A1xA1)
    }

    fn validate(&self) {
        match self {
            RootSystemType::A(n) => assert!((1..=MAX_RANK).contains(n), "type A rank {n} unsupported"),
            RootSystemType::B(n) => assert!((2..=MAX_RANK).contains(n), "type B rank {n} unsupported"),
            RootSystemType::C(n) => assert!((2..=MAX_RANK).contains(n), "type C rank {n} unsupported"),
            RootSystemType::D(n) => assert!((3..=MAX_RANK).contains(n), "type D rank {n} unsupported"),
            _ => {}
        }
    }

    /// Canonical sweep of parent systems up to a rank bound, one entry per
    /// isomorphism class: C starts at 3 (C2 = B2) and D at 4 (D3 = A3).
    pub fn sweep(max_rank: usize) -> Vec<RootSystemType> {
        let m = max_rank.min(MAX_RANK);
        let mut out = Vec::new();
        out.push(RootSystemType::A1xA1);
        for n in 1..=m {
            out.push(RootSystemType::A(n));
        }
        for n in 2..=m {
            out.push(RootSystemType::B(n));
        }
        for n in 3..=m {
            out.push(RootSystemType::C(n));
        }
        for n in 4..=m {
            out.push(RootSystemType::D(n));
        }
        if m >= 4 {
            out.push(RootSystemType::F4);
        }
        out.push(RootSystemType::G2);
        out
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemType::A(n) => write!(f, "A{n}"),
            RootSystemType::B(n) => write!(f, "B{n}"),
            RootSystemType::C(n) => write!(f, "C{n}"),
            RootSystemType::D(n) => write!(f, "D{n}"),
            RootSystemType::F4 => write!(f, "F4"),
            RootSystemType::G2 => write!(f, "G2"),
            RootSystemType::A1xA1 => write!(f, "A1xA1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unrecognized root system label {0:?}")]
pub struct ParseTypeError(String);

impl FromStr for RootSystemType {
    type Err = ParseTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "A1xA1" {
            return Ok(RootSystemType::A1xA1);
        }
        if s == "F4" {
            return Ok(RootSystemType::F4);
        }
        if s == "G2" {
            return Ok(RootSystemType::G2);
        }
        let err = || ParseTypeError(s.to_string());
        if !s.is_ascii() || s.len() < 2 {
            return Err(err());
        }
        let (head, tail) = s.split_at(1);
        let n: usize = tail.parse().map_err(|_| err())?;
        let t = match head {
            "A" => RootSystemType::A(n),
            "B" => RootSystemType::B(n),
            "C" => RootSystemType::C(n),
            "D" => RootSystemType::D(n),
            _ => return Err(err()),
        };
        let ok = match t {
            RootSystemType::A(n) => (1..=MAX_RANK).contains(&n),
            RootSystemType::B(n) | RootSystemType::C(n) => (2..=MAX_RANK).contains(&n),
            RootSystemType::D(n) => (3..=MAX_RANK).contains(&n),
            _ => true,
        };
        if ok {
            Ok(t)
        } else {
            Err(err())
        }
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RootSystemType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Isomorphism class of a rank-2 subsystem spanned by two roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneKind {
    A1xA1,
    A2,
    B2,
    G2,
}

/// A rank-2 subsystem: all roots lying in the span of two independent roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    /// Sorted root indices of every root in the plane.
    pub roots: Vec<usize>,
    pub kind: PlaneKind,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub rst: RootSystemType,
    pub ambient: usize,
    roots: Vec<QVector>,
    npos: usize,
    /// Indices of the simple roots, in the standard numbering.
    simple: Vec<usize>,
    /// Integer coordinates of each root in the simple-root basis.
    simple_coords: Vec<Vec<i64>>,
    /// Bitmask over simple indices with nonzero coefficient.
    support_masks: Vec<u32>,
    index: HashMap<QVector, usize>,
    coroots: Vec<QVector>,
    /// simple_reflection_perms[s][i] = index of s_{alpha_s}(root_i).
    simple_reflection_perms: Vec<Vec<usize>>,
}

fn basis_vec(ambient: usize, i: usize, c: Rat) -> QVector {
    let mut v = zero_vec(ambient);
    v[i] = c;
    v
}

fn eps_diff(ambient: usize, i: usize, j: usize) -> QVector {
    let mut v = zero_vec(ambient);
    v[i] = rat_int(1);
    v[j] = rat_int(-1);
    v
}

fn eps_sum(ambient: usize, i: usize, j: usize) -> QVector {
    let mut v = zero_vec(ambient);
    v[i] = rat_int(1);
    v[j] = rat_int(1);
    v
}

fn positive_roots_of(rst: RootSystemType) -> Vec<QVector> {
    let d = rst.ambient_dim();
    let mut out = Vec::new();
    match rst {
        RootSystemType::A(n) => {
            for i in 0..=n {
                for j in (i + 1)..=n {
                    out.push(eps_diff(d, i, j));
                }
            }
        }
        RootSystemType::B(n) => {
            for i in 0..n {
                out.push(basis_vec(d, i, rat_int(1)));
                for j in (i + 1)..n {
                    out.push(eps_diff(d, i, j));
                    out.push(eps_sum(d, i, j));
                }
            }
        }
        RootSystemType::C(n) => {
            for i in 0..n {
                out.push(basis_vec(d, i, rat_int(2)));
                for j in (i + 1)..n {
                    out.push(eps_diff(d, i, j));
                    out.push(eps_sum(d, i, j));
                }
            }
        }
        RootSystemType::D(n) => {
            for i in 0..n {
                for j in (i + 1)..n {
                    out.push(eps_diff(d, i, j));
                    out.push(eps_sum(d, i, j));
                }
            }
        }
        RootSystemType::F4 => {
            for i in 0..4 {
                out.push(basis_vec(d, i, rat_int(1)));
                for j in (i + 1)..4 {
                    out.push(eps_diff(d, i, j));
                    out.push(eps_sum(d, i, j));
                }
            }
            // (e1 +- e2 +- e3 +- e4)/2, positive: coefficient of e1 is +1/2.
            for s2 in [1i64, -1] {
                for s3 in [1i64, -1] {
                    for s4 in [1i64, -1] {
                        out.push(vec![rat(1, 2), rat(s2, 2), rat(s3, 2), rat(s4, 2)]);
                    }
                }
            }
        }
        RootSystemType::G2 => {
            // Simple roots a1 = e1 - e2, a2 = -2e1 + e2 + e3.
            let combos: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];
            let a1 = vec![rat_int(1), rat_int(-1), rat_int(0)];
            let a2 = vec![rat_int(-2), rat_int(1), rat_int(1)];
            for (p, q) in combos {
                let v = vec![
                    &a1[0] * rat_int(p) + &a2[0] * rat_int(q),
                    &a1[1] * rat_int(p) + &a2[1] * rat_int(q),
                    &a1[2] * rat_int(p) + &a2[2] * rat_int(q),
                ];
                out.push(v);
            }
        }
        RootSystemType::A1xA1 => {
            out.push(eps_diff(d, 0, 1));
            out.push(eps_diff(d, 2, 3));
        }
    }
    out
}

fn simple_roots_of(rst: RootSystemType) -> Vec<QVector> {
    let d = rst.ambient_dim();
    match rst {
        RootSystemType::A(n) => (0..n).map(|i| eps_diff(d, i, i + 1)).collect(),
        RootSystemType::B(n) => {
            let mut s: Vec<QVector> = (0..n - 1).map(|i| eps_diff(d, i, i + 1)).collect();
            s.push(basis_vec(d, n - 1, rat_int(1)));
            s
        }
        RootSystemType::C(n) => {
            let mut s: Vec<QVector> = (0..n - 1).map(|i| eps_diff(d, i, i + 1)).collect();
            s.push(basis_vec(d, n - 1, rat_int(2)));
            s
        }
        RootSystemType::D(n) => {
            let mut s: Vec<QVector> = (0..n - 1).map(|i| eps_diff(d, i, i + 1)).collect();
            s.push(eps_sum(d, n - 2, n - 1));
            s
        }
        RootSystemType::F4 => vec![
            eps_diff(d, 1, 2),
            eps_diff(d, 2, 3),
            basis_vec(d, 3, rat_int(1)),
            vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)],
        ],
        RootSystemType::G2 => vec![
            vec![rat_int(1), rat_int(-1), rat_int(0)],
            vec![rat_int(-2), rat_int(1), rat_int(1)],
        ],
        RootSystemType::A1xA1 => vec![eps_diff(d, 0, 1), eps_diff(d, 2, 3)],
    }
}

impl RootSystem {
    pub fn new(rst: RootSystemType) -> Self {
        rst.validate();
        let ambient = rst.ambient_dim();
        let simple_vecs = simple_roots_of(rst);
        let rank = simple_vecs.len();

        // Simple-root coordinates of a vector, via one exact solve.
        let simple_mat = QMatrix::new(simple_vecs.clone(), ambient).transpose();
        let coords_of = |v: &QVector| -> Vec<i64> {
            let c = simple_mat.solve(v).expect("root outside simple-root span");
            c.iter()
                .map(|x| {
                    assert!(x.is_integer(), "non-integral simple-root coordinate");
                    let i = x.to_integer();
                    i64::try_from(i).expect("coordinate overflow")
                })
                .collect()
        };

        let mut positives = positive_roots_of(rst);
        positives.sort_by(|a, b| {
            let ha: i64 = coords_of(a).iter().sum();
            let hb: i64 = coords_of(b).iter().sum();
            ha.cmp(&hb).then(a.cmp(b))
        });
        let npos = positives.len();

        let mut roots = positives;
        for i in 0..npos {
            let n = vec_neg(&roots[i]);
            roots.push(n);
        }

        let mut index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.clone(), i);
        }

        let simple_coords: Vec<Vec<i64>> = roots.iter().map(coords_of).collect();
        let support_masks: Vec<u32> = simple_coords
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();

        let simple: Vec<usize> = simple_vecs.iter().map(|v| index[v]).collect();
        let coroots: Vec<QVector> = roots
            .iter()
            .map(|r| {
                let n = dot(r, r);
                vec_scale(&(rat_int(2) / n), r)
            })
            .collect();

        let mut rs = RootSystem {
            rst,
            ambient,
            roots,
            npos,
            simple,
            simple_coords,
            support_masks,
            index,
            coroots,
            simple_reflection_perms: Vec::new(),
        };
        rs.simple_reflection_perms = (0..rank)
            .map(|s| {
                let si = rs.simple[s];
                (0..rs.roots.len())
                    .map(|i| {
                        let v = rs.reflect_vec(si, rs.root(i));
                        rs.index[&v]
                    })
                    .collect()
            })
            .collect();
        rs
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &QVector {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &QVector {
        &self.coroots[i]
    }

    pub fn root_index(&self, v: &QVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &QVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// Index of the s-th simple root (standard numbering, 0-based).
    pub fn simple_root(&self, s: usize) -> usize {
        self.simple[s]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    /// (v, root_i^vee)
    pub fn pairing(&self, v: &QVector, i: usize) -> Rat {
        dot(v, &self.coroots[i])
    }

    pub fn height(&self, i: usize) -> i64 {
        self.simple_coords[i].iter().sum()
    }

    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.simple_coords[i]
    }

    /// Simple indices appearing in root i.
    pub fn support(&self, i: usize) -> Vec<usize> {
        (0..self.rank()).filter(|s| self.simple_coords[i][*s] != 0).collect()
    }

    pub fn support_mask(&self, i: usize) -> u32 {
        self.support_masks[i]
    }

    pub fn has_full_support(&self, i: usize) -> bool {
        self.support_masks[i] == (1u32 << self.rank()) - 1
    }

    pub fn reflect_vec(&self, i: usize, v: &QVector) -> QVector {
        let c = self.pairing(v, i);
        vec_sub(v, &vec_scale(&c, self.root(i)))
    }

    pub fn reflect_root(&self, i: usize, j: usize) -> usize {
        let v = self.reflect_vec(i, self.root(j));
        self.index[&v]
    }

    /// Root-index permutation induced by the s-th simple reflection.
    pub fn simple_reflection_perm(&self, s: usize) -> &[usize] {
        &self.simple_reflection_perms[s]
    }

    /// Index of root_i + root_j when the sum is again a root.
    pub fn sum_root(&self, i: usize, j: usize) -> Option<usize> {
        let mut v = self.roots[i].clone();
        for (a, b) in v.iter_mut().zip(&self.roots[j]) {
            *a += b;
        }
        self.root_index(&v)
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        let c = self.pairing(self.root(self.simple[i]), self.simple[j]);
        assert!(c.is_integer());
        i64::try_from(c.to_integer()).unwrap()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    pub fn is_dominant(&self, v: &QVector) -> bool {
        self.simple.iter().all(|&s| !self.pairing(v, s).is_negative())
    }

    /// The dominant Weyl chamber representative of v.
    pub fn dominant_representative(&self, v: &QVector) -> QVector {
        let mut w = v.clone();
        loop {
            match self.simple.iter().find(|&&s| self.pairing(&w, s).is_negative()) {
                Some(&s) => w = self.reflect_vec(s, &w),
                None => return w,
            }
        }
    }

    /// Fundamental weights inside the span of the simple roots.
    pub fn fundamental_weights(&self) -> Vec<QVector> {
        let r = self.rank();
        let cartan_t = QMatrix::new(
            (0..r)
                .map(|j| (0..r).map(|i| rat_int(self.cartan_entry(i, j))).collect())
                .collect(),
            r,
        );
        (0..r)
            .map(|i| {
                let mut e = zero_vec(r);
                e[i] = rat_int(1);
                // omega_i = sum_j x_j alpha_j with (omega_i, alpha_k^vee) = delta_ik.
                let x = cartan_t.solve(&e).expect("Cartan matrix is invertible");
                let mut w = zero_vec(self.ambient);
                for (j, c) in x.iter().enumerate() {
                    for (wi, ai) in w.iter_mut().zip(self.root(self.simple[j])) {
                        *wi += c * ai;
                    }
                }
                w
            })
            .collect()
    }

    /// The positive root of maximal height. Unique for irreducible types.
    pub fn highest_root(&self) -> usize {
        assert!(self.rst.is_irreducible(), "highest root of a reducible system");
        self.npos - 1
    }

    /// Orbit of a vector under the Weyl group, BFS over simple reflections.
    pub fn weyl_orbit_vec(&self, v: &QVector) -> Vec<QVector> {
        let mut seen: HashSet<QVector> = HashSet::new();
        let mut queue = vec![v.clone()];
        seen.insert(v.clone());
        while let Some(u) = queue.pop() {
            for &s in &self.simple {
                let w = self.reflect_vec(s, &u);
                if seen.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        let mut out: Vec<QVector> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// All elements of the Weyl group as ambient matrices. Only for small
    /// groups (rank-2 types and F4); asserts on anything larger.
    pub fn weyl_group_matrices(&self) -> Vec<QMatrix> {
        let gens: Vec<QMatrix> = (0..self.rank())
            .map(|s| {
                let si = self.simple[s];
                let cols: Vec<QVector> = (0..self.ambient)
                    .map(|j| {
                        let e = basis_vec(self.ambient, j, rat_int(1));
                        self.reflect_vec(si, &e)
                    })
                    .collect();
                QMatrix::new(cols, self.ambient).transpose()
            })
            .collect();
        let id = QMatrix::identity(self.ambient);
        let key = |m: &QMatrix| -> Vec<Rat> { m.rows.iter().flatten().cloned().collect() };
        let mut seen: HashSet<Vec<Rat>> = HashSet::new();
        seen.insert(key(&id));
        let mut out = vec![id.clone()];
        let mut queue = vec![id];
        while let Some(m) = queue.pop() {
            for g in &gens {
                let next = g.mul_mat(&m);
                if seen.insert(key(&next)) {
                    assert!(out.len() < 4000, "Weyl group too large to enumerate");
                    out.push(next.clone());
                    queue.push(next);
                }
            }
        }
        out
    }

    /// The rank-2 subsystem spanned by two non-proportional roots.
    pub fn plane_through(&self, i: usize, j: usize) -> Plane {
        let m = QMatrix::from_rows(vec![self.roots[i].clone(), self.roots[j].clone()]);
        assert!(m.rank() == 2, "plane requires independent roots");
        let mut members: Vec<usize> = (0..self.num_roots())
            .filter(|&k| m.in_row_span(&self.roots[k]).is_some())
            .collect();
        members.sort_unstable();
        let kind = match members.len() {
            4 => PlaneKind::A1xA1,
            6 => PlaneKind::A2,
            8 => PlaneKind::B2,
            12 => PlaneKind::G2,
            n => unreachable!("rank-2 subsystem with {n} roots"),
        };
        Plane { roots: members, kind }
    }

    /// The planes through a fixed root partition the remaining roots: each
    /// root outside {±beta} lies in exactly one returned plane.
    pub fn planes_through_root(&self, beta: usize) -> Vec<Plane> {
        let nb = self.neg(beta);
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.num_roots() {
            if g == beta || g == nb {
                continue;
            }
            if !seen.is_empty() && seen.iter().any(|p| p.binary_search(&g).is_ok()) {
                continue;
            }
            let plane = self.plane_through(beta, g);
            if seen.insert(plane.roots.clone()) {
                out.push(plane);
            }
        }
        out.sort_by(|a, b| a.roots.cmp(&b.roots));
        out
    }

    /// Positive members of a plane, in global index order.
    pub fn plane_positives(&self, plane: &Plane) -> Vec<usize> {
        plane.roots.iter().copied().filter(|&k| self.is_positive(k)).collect()
    }

    /// The two plane members forming a base: positive in the plane's own
    /// ordering induced by the global positives, and not a sum of two such.
    pub fn plane_base(&self, plane: &Plane) -> (usize, usize) {
        let pos = self.plane_positives(plane);
        let sums: HashSet<usize> = pos
            .iter()
            .flat_map(|&x| pos.iter().filter_map(move |&y| self.sum_root(x, y)))
            .collect();
        let base: Vec<usize> = pos.iter().copied().filter(|k| !sums.contains(k)).collect();
        assert_eq!(base.len(), 2, "rank-2 subsystem must have a 2-element base");
        (base[0], base[1])
    }

    /// True when {i, j} is a base of the plane it spans: every plane root is
    /// a like-signed integer combination of the two.
    pub fn is_plane_base(&self, i: usize, j: usize) -> bool {
        let m = QMatrix::from_rows(vec![self.roots[i].clone(), self.roots[j].clone()]);
        if m.rank() != 2 {
            return false;
        }
        let plane = self.plane_through(i, j);
        plane.roots.iter().all(|&k| {
            let c = m.in_row_span(&self.roots[k]).unwrap();
            (!c[0].is_negative() && !c[1].is_negative())
                || (!c[0].is_positive() && !c[1].is_positive())
        })
    }

    /// Whether some proper subset S of the simple roots sandwiches the root
    /// set: all positives outside the S-span belong to psi, and every
    /// negative in psi lies in the S-span. Such sets are parabolically
    /// induced, hence discarded by the classification.
    pub fn parabolic_sandwich_exists(&self, psi: &[usize]) -> bool {
        let full: u32 = (1 << self.rank()) - 1;
        let in_psi: HashSet<usize> = psi.iter().copied().collect();
        'subsets: for s_mask in 0..full {
            for p in 0..self.npos {
                let outside = self.support_masks[p] & !s_mask != 0;
                if outside && !in_psi.contains(&p) {
                    continue 'subsets;
                }
            }
            for &g in psi {
                if !self.is_positive(g) && self.support_masks[g] & !s_mask != 0 {
                    continue 'subsets;
                }
            }
            return true;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use std::collections::BTreeSet;

    fn rs(t: RootSystemType) -> RootSystem {
        RootSystem::new(t)
    }

    fn vq(xs: &[i64]) -> QVector {
        xs.iter().map(|&x| rat_int(x)).collect()
    }

    /// Independent generation: orbit of the simple roots under simple
    /// reflections. Agrees with the explicit coordinate lists.
    fn reflection_closure(simples: &[QVector]) -> BTreeSet<QVector> {
        let reflect = |root: &QVector, v: &QVector| -> QVector {
            let c = rat_int(2) * dot(v, root) / dot(root, root);
            vec_sub(v, &vec_scale(&c, root))
        };
        let mut set: BTreeSet<QVector> = simples.iter().cloned().collect();
        loop {
            let mut next = set.clone();
            for s in simples {
                for v in &set {
                    next.insert(reflect(s, v));
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn builders_match_reflection_closure() {
        let types = [
            RootSystemType::A(1),
            RootSystemType::A(4),
            RootSystemType::B(2),
            RootSystemType::B(5),
            RootSystemType::C(3),
            RootSystemType::D(4),
            RootSystemType::D(5),
            RootSystemType::F4,
            RootSystemType::G2,
            RootSystemType::A1xA1,
            RootSystemType::B(8),
        ];
        for t in types {
            let r = rs(t);
            let built: BTreeSet<QVector> = (0..r.num_roots()).map(|i| r.root(i).clone()).collect();
            let simples: Vec<QVector> =
                r.simple_indices().iter().map(|&s| r.root(s).clone()).collect();
            assert_eq!(built, reflection_closure(&simples), "mismatch for {t}");
        }
    }

    #[test]
    fn positive_counts() {
        assert_eq!(rs(RootSystemType::A(7)).num_positive(), 28);
        assert_eq!(rs(RootSystemType::B(4)).num_positive(), 16);
        assert_eq!(rs(RootSystemType::C(4)).num_positive(), 16);
        assert_eq!(rs(RootSystemType::D(6)).num_positive(), 30);
        assert_eq!(rs(RootSystemType::F4).num_positive(), 24);
        assert_eq!(rs(RootSystemType::G2).num_positive(), 6);
        assert_eq!(rs(RootSystemType::A1xA1).num_positive(), 2);
    }

    #[test]
    fn cartan_matrices_are_standard() {
        assert_eq!(
            rs(RootSystemType::A(3)).cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        );
        // Entry convention: c_ij = (alpha_i, alpha_j^vee).
        assert_eq!(
            rs(RootSystemType::B(3)).cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        );
        assert_eq!(
            rs(RootSystemType::C(3)).cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
        );
        assert_eq!(
            rs(RootSystemType::D(4)).cartan_matrix(),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
        );
        assert_eq!(
            rs(RootSystemType::F4).cartan_matrix(),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
        );
        assert_eq!(rs(RootSystemType::G2).cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs(RootSystemType::A1xA1).cartan_matrix(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn norms_follow_convention() {
        let g2 = rs(RootSystemType::G2);
        let a1 = g2.root(g2.simple_root(0));
        let a2 = g2.root(g2.simple_root(1));
        assert_eq!(dot(a1, a1), rat_int(2));
        assert_eq!(dot(a2, a2), rat_int(6));

        let c3 = rs(RootSystemType::C(3));
        let long = c3.root_index(&vq(&[2, 0, 0])).unwrap();
        assert_eq!(c3.coroot(long), &vec![rat_int(1), rat_int(0), rat_int(0)]);

        let f4 = rs(RootSystemType::F4);
        let short = f4.root_index(&vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)]).unwrap();
        assert_eq!(dot(f4.root(short), f4.root(short)), rat_int(1));
    }

    #[test]
    fn highest_roots_and_heights() {
        let cases: [(RootSystemType, &[i64], i64); 5] = [
            (RootSystemType::A(4), &[1, 0, 0, 0, -1], 4),
            (RootSystemType::B(4), &[1, 1, 0, 0], 7),
            (RootSystemType::C(4), &[2, 0, 0, 0], 7),
            (RootSystemType::D(5), &[1, 1, 0, 0, 0], 7),
            (RootSystemType::G2, &[-1, -1, 2], 5),
        ];
        for (t, coords, h) in cases {
            let r = rs(t);
            let theta = r.highest_root();
            assert_eq!(r.root(theta), &vq(coords), "highest root of {t}");
            assert_eq!(r.height(theta), h, "height of highest root of {t}");
        }
        let f4 = rs(RootSystemType::F4);
        assert_eq!(f4.root(f4.highest_root()), &vq(&[1, 1, 0, 0]));
        assert_eq!(f4.height(f4.highest_root()), 11);
    }

    #[test]
    fn roots_have_like_signed_integer_coordinates() {
        for t in RootSystemType::sweep(6) {
            let r = rs(t);
            for i in 0..r.num_roots() {
                let c = r.simple_coords(i);
                let pos = c.iter().any(|&x| x > 0);
                let neg = c.iter().any(|&x| x < 0);
                assert!(!(pos && neg), "mixed-sign coordinates in {t}");
                assert_eq!(r.is_positive(i), pos, "positivity mismatch in {t}");
            }
        }
    }

    #[test]
    fn reflection_permutes_roots() {
        let f4 = rs(RootSystemType::F4);
        // s_{a4} applied to (e1+e2+e3+e4)/2 gives (e1+e2+e3-e4)/2 + ...
        let v = vec![rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)];
        let i = f4.root_index(&v).unwrap();
        let s4 = f4.simple_root(3);
        let j = f4.reflect_root(s4, i);
        // Simple coordinates shift by one copy of a4.
        assert_eq!(f4.simple_coords(i), &[1, 2, 3, 1]);
        assert_eq!(f4.simple_coords(j), &[1, 2, 3, 2]);
        let k = f4.root_index(&vq(&[0, 1, 0, 1])).unwrap();
        assert_eq!(f4.simple_coords(k), &[1, 1, 2, 0]);
    }

    #[test]
    fn plane_kinds_by_size() {
        let f4 = rs(RootSystemType::F4);
        let idx = |v: QVector| f4.root_index(&v).unwrap();
        let a1 = idx(vq(&[0, 1, -1, 0]));
        let short2 = idx(vq(&[0, 0, 1, 0]));
        // Orthogonal long pairs in F4 span B2 planes (the half-roots fill
        // in), so the A1xA1 example pairs a long with an orthogonal short.
        let a1a1_partner = idx(vq(&[1, 0, 0, 0]));
        let a2_partner = idx(vq(&[0, 0, 1, -1]));
        assert_eq!(f4.plane_through(a1, short2).kind, PlaneKind::B2);
        assert_eq!(f4.plane_through(a1, a2_partner).kind, PlaneKind::A2);
        assert_eq!(f4.plane_through(a1, a1a1_partner).kind, PlaneKind::A1xA1);

        let g2 = rs(RootSystemType::G2);
        let p = g2.plane_through(g2.simple_root(0), g2.simple_root(1));
        assert_eq!(p.kind, PlaneKind::G2);
        assert_eq!(p.roots.len(), 12);
    }

    #[test]
    fn planes_partition_complement_of_axis() {
        for t in [RootSystemType::B(3), RootSystemType::F4, RootSystemType::A(3)] {
            let r = rs(t);
            let beta = r.highest_root();
            let planes = r.planes_through_root(beta);
            let mut seen: Vec<usize> = Vec::new();
            for p in &planes {
                assert!(p.roots.contains(&beta));
                for &g in &p.roots {
                    if g != beta && g != r.neg(beta) {
                        seen.push(g);
                    }
                }
            }
            seen.sort_unstable();
            let expect: Vec<usize> =
                (0..r.num_roots()).filter(|&g| g != beta && g != r.neg(beta)).collect();
            assert_eq!(seen, expect, "planes through the highest root of {t}");
        }
    }

    #[test]
    fn plane_base_recovers_simple_pair() {
        let b2 = rs(RootSystemType::B(2));
        let p = b2.plane_through(b2.simple_root(0), b2.simple_root(1));
        let (x, y) = b2.plane_base(&p);
        let mut base = [x, y];
        base.sort_unstable();
        let mut expect = [b2.simple_root(0), b2.simple_root(1)];
        expect.sort_unstable();
        assert_eq!(base, expect);

        let a3 = rs(RootSystemType::A(3));
        let i = a3.root_index(&vq(&[1, -1, 0, 0])).unwrap();
        let j = a3.root_index(&vq(&[0, 0, 1, -1])).unwrap();
        assert!(a3.is_plane_base(i, j));
        let theta = a3.highest_root();
        assert!(!a3.is_plane_base(i, theta));
    }

    #[test]
    fn dominant_representative_is_orbit_invariant() {
        let b3 = rs(RootSystemType::B(3));
        let v = vq(&[-2, 5, 1]);
        let rep = b3.dominant_representative(&v);
        assert!(b3.is_dominant(&rep));
        assert_eq!(rep, vq(&[5, 2, 1]));
        for &s in b3.simple_indices() {
            let w = b3.reflect_vec(s, &v);
            assert_eq!(b3.dominant_representative(&w), rep);
        }
    }

    #[test]
    fn fundamental_weights_pair_with_coroots() {
        for t in [RootSystemType::A(3), RootSystemType::C(3), RootSystemType::F4, RootSystemType::G2] {
            let r = rs(t);
            let fw = r.fundamental_weights();
            for (i, w) in fw.iter().enumerate() {
                for j in 0..r.rank() {
                    let expect = if i == j { rat_int(1) } else { rat_int(0) };
                    assert_eq!(r.pairing(w, r.simple_root(j)), expect, "{t} omega_{i}");
                }
            }
        }
        // Spin weight of B3: omega_3 = (e1+e2+e3)/2.
        let b3 = rs(RootSystemType::B(3));
        assert_eq!(b3.fundamental_weights()[2], vec![rat(1, 2), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(rs(RootSystemType::A1xA1).weyl_group_matrices().len(), 4);
        assert_eq!(rs(RootSystemType::B(2)).weyl_group_matrices().len(), 8);
        assert_eq!(rs(RootSystemType::G2).weyl_group_matrices().len(), 12);
        assert_eq!(rs(RootSystemType::F4).weyl_group_matrices().len(), 1152);
    }

    #[test]
    fn weyl_orbit_of_short_root_in_g2() {
        let g2 = rs(RootSystemType::G2);
        let orbit = g2.weyl_orbit_vec(g2.root(g2.simple_root(0)));
        assert_eq!(orbit.len(), 6);
        for v in &orbit {
            assert_eq!(dot(v, v), rat_int(2));
        }
    }

    #[test]
    fn sandwich_detects_borel_and_parabolic_shapes() {
        let a2 = rs(RootSystemType::A(2));
        let all_pos: Vec<usize> = (0..a2.num_positive()).collect();
        assert!(a2.parabolic_sandwich_exists(&all_pos));

        // Positives outside the span of {alpha_2}: a nilradical, sandwiched.
        let theta = a2.highest_root();
        let a1 = a2.simple_root(0);
        assert!(a2.parabolic_sandwich_exists(&[a1, theta]));

        // {±alpha_1} alone is not sandwiched: theta is missing.
        assert!(!a2.parabolic_sandwich_exists(&[a1, a2.neg(a1)]));

        // Everything not touching e1, both signs: the gl shape, not sandwiched.
        let a3 = rs(RootSystemType::A(3));
        let psi: Vec<usize> = (0..a3.num_roots())
            .filter(|&i| a3.root(i)[0].is_zero())
            .collect();
        assert!(!a3.parabolic_sandwich_exists(&psi));
    }

    #[test]
    fn labels_round_trip() {
        for t in RootSystemType::sweep(8) {
            let s = t.to_string();
            assert_eq!(s.parse::<RootSystemType>().unwrap(), t);
        }
        assert!("E6".parse::<RootSystemType>().is_err());
        assert!("A0".parse::<RootSystemType>().is_err());
        assert!("A9".parse::<RootSystemType>().is_err());
        assert!("B1".parse::<RootSystemType>().is_err());
        assert!("".parse::<RootSystemType>().is_err());
    }

    #[test]
    fn sweep_is_one_entry_per_isomorphism_class() {
        let s = RootSystemType::sweep(4);
        assert_eq!(
            s,
            vec![
                RootSystemType::A1xA1,
                RootSystemType::A(1),
                RootSystemType::A(2),
                RootSystemType::A(3),
                RootSystemType::A(4),
                RootSystemType::B(2),
                RootSystemType::B(3),
                RootSystemType::B(4),
                RootSystemType::C(3),
                RootSystemType::C(4),
                RootSystemType::D(4),
                RootSystemType::F4,
                RootSystemType::G2,
            ],
        );
    }
}
