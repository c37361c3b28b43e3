//! Weyl-group utilities on top of [`RootSystem`]: canonical forms of root
//! index sets (and richer subalgebra shapes) under the simple-reflection
//! action, plus symbolic branch generation for equations of the form
//! `target = w(source)` with `w` ranging over the Weyl group.
//!
//! Canonicalization works on orbits of the *set* (not the full group), so it
//! stays cheap for the small orbits that actual classification output has.
//! Membership branches for classical groups are reduced to signed
//! permutations acting only on the coordinate slots touched by the data;
//! small exceptional systems fall back to the explicit matrix list.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};

use crate::qlinalg::{primitive_direction, QMatrix, QVector, Rat};
use crate::roots::{RootSystem, RootSystemType};

/// Hard cap on canonicalization orbit size: real classification orbits are
/// tiny (at most a few thousand states); blowing past this indicates junk.
pub const ORBIT_CAP: usize = 200_000;

/// A sorted, deduplicated set of root indices.
pub type RootSet = Vec<usize>;

pub fn sorted_set(mut v: Vec<usize>) -> RootSet {
    v.sort_unstable();
    v.dedup();
    v
}

fn apply_perm_to_set(perm: &[usize], set: &[usize]) -> RootSet {
    sorted_set(set.iter().map(|&i| perm[i]).collect())
}

/// Lexicographically least Weyl conjugate of a root index set, with a word in
/// the simple reflections mapping the input set to the canonical one.
pub fn canonicalize_root_set(rs: &RootSystem, set: &[usize]) -> (RootSet, Vec<usize>) {
    let start = sorted_set(set.to_vec());
    let mut seen: BTreeMap<RootSet, Vec<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), Vec::new());
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        let word = seen[&state].clone();
        for i in 0..rs.rank() {
            let next = apply_perm_to_set(rs.simple_reflection_perm(i), &state);
            if !seen.contains_key(&next) {
                let mut w = word.clone();
                w.push(i);
                assert!(seen.len() < ORBIT_CAP, "root-set orbit exceeded cap");
                seen.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    let (best, word) = seen.into_iter().next().expect("orbit nonempty");
    (best, word)
}

/// True iff `a` and `b` are in the same Weyl orbit as sets.
pub fn sets_conjugate(rs: &RootSystem, a: &[usize], b: &[usize]) -> bool {
    canonicalize_root_set(rs, a).0 == canonicalize_root_set(rs, b).0
}

/// Sign-normalize a primitive direction: first nonzero entry positive.
pub fn normalize_direction(v: &QVector) -> Vec<Rat> {
    let prim = primitive_direction(v);
    match prim.iter().find(|c| !c.is_zero()) {
        Some(c) if c < &Rat::zero() => prim.iter().map(|x| -x.clone()).collect(),
        _ => prim,
    }
}

/// The shape of a subalgebra as seen by Weyl conjugation: full root spaces,
/// mixed-line supports (each line a set of root indices), and an optional
/// direction vector normal to the toral part.
///
/// Coefficients on mixed lines are deliberately not part of the shape: they
/// rescale under torus conjugation, so two stabilizers match iff their shapes
/// are Weyl conjugate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SubalgebraShape {
    pub full: RootSet,
    pub lines: Vec<RootSet>,
    pub normal: Option<Vec<Rat>>,
}

impl SubalgebraShape {
    pub fn new(full: Vec<usize>, lines: Vec<Vec<usize>>, normal: Option<&QVector>) -> Self {
        let mut lines: Vec<RootSet> = lines.into_iter().map(sorted_set).collect();
        lines.sort();
        SubalgebraShape {
            full: sorted_set(full),
            lines,
            normal: normal.map(normalize_direction),
        }
    }

    fn apply(&self, rs: &RootSystem, simple: usize) -> Self {
        let perm = rs.simple_reflection_perm(simple);
        let mut lines: Vec<RootSet> = self
            .lines
            .iter()
            .map(|l| apply_perm_to_set(perm, l))
            .collect();
        lines.sort();
        SubalgebraShape {
            full: apply_perm_to_set(perm, &self.full),
            lines,
            normal: self.normal.as_ref().map(|n| {
                let refl = rs.reflect_vec(rs.simple_root(simple), n);
                normalize_direction(&refl)
            }),
        }
    }
}

/// Lex-least Weyl conjugate of a subalgebra shape, with witness word.
pub fn canonicalize_shape(
    rs: &RootSystem,
    shape: &SubalgebraShape,
) -> (SubalgebraShape, Vec<usize>) {
    let mut seen: BTreeMap<SubalgebraShape, Vec<usize>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(shape.clone(), Vec::new());
    queue.push_back(shape.clone());
    while let Some(state) = queue.pop_front() {
        let word = seen[&state].clone();
        for i in 0..rs.rank() {
            let next = state.apply(rs, i);
            if !seen.contains_key(&next) {
                let mut w = word.clone();
                w.push(i);
                assert!(seen.len() < ORBIT_CAP, "shape orbit exceeded cap");
                seen.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    let (best, word) = seen.into_iter().next().expect("orbit nonempty");
    (best, word)
}

/// One admissible Weyl action for a symbolic orbit-membership equation
/// `target = w(source)`: the matrix of `w`, plus an optional slot that the
/// source vector must vanish on (used to absorb an odd sign flip in type D).
#[derive(Clone, Debug)]
pub struct WBranch {
    pub matrix: QMatrix,
    pub zero_slot: Option<usize>,
}

fn perm_sign_matrix(dim: usize, slots: &[usize], perm: &[usize], signs: u32) -> QMatrix {
    let mut m = QMatrix::identity(dim);
    for (pos, &s) in slots.iter().enumerate() {
        for r in 0..dim {
            m.rows[r][s] = Rat::zero();
        }
        let img = slots[perm[pos]];
        let sign = if signs >> pos & 1 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        m.rows[img][s] = sign;
    }
    m
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..k {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out
}

/// Branches covering `target = w(source)` for all `w` in the Weyl group, under
/// the assumption that source and target agree (as linear expressions) on
/// every ambient slot outside `touched`.
///
/// For classical families this is the signed-permutation reduction: any
/// witness `w` can be rewritten to act only on the touched slots, except that
/// in type D removing sign flips needs a zero coordinate, hence the extra
/// `zero_slot` branches for odd flip patterns. Exceptional and reducible
/// systems return the explicit matrix list.
pub fn membership_branches(rs: &RootSystem, touched: &BTreeSet<usize>) -> Vec<WBranch> {
    let d = rs.ambient;
    let slots: Vec<usize> = touched.iter().copied().collect();
    let k = slots.len();
    match rs.rst {
        RootSystemType::A(_) => permutations(k)
            .into_iter()
            .map(|p| WBranch {
                matrix: perm_sign_matrix(d, &slots, &p, 0),
                zero_slot: None,
            })
            .collect(),
        RootSystemType::B(_) | RootSystemType::C(_) => {
            let mut out = Vec::new();
            for p in permutations(k) {
                for signs in 0..1u32 << k {
                    out.push(WBranch {
                        matrix: perm_sign_matrix(d, &slots, &p, signs),
                        zero_slot: None,
                    });
                }
            }
            out
        }
        RootSystemType::D(_) => {
            let mut out = Vec::new();
            let outside: Vec<usize> = (0..d).filter(|s| !touched.contains(s)).collect();
            for p in permutations(k) {
                for signs in 0..1u32 << k {
                    let m = perm_sign_matrix(d, &slots, &p, signs);
                    if signs.count_ones() % 2 == 0 {
                        out.push(WBranch {
                            matrix: m,
                            zero_slot: None,
                        });
                    } else {
                        // The leftover flip must land on a slot whose source
                        // coordinate vanishes.
                        for &s in &outside {
                            out.push(WBranch {
                                matrix: m.clone(),
                                zero_slot: Some(s),
                            });
                        }
                    }
                }
            }
            out
        }
        RootSystemType::F4 | RootSystemType::G2 | RootSystemType::A1xA1 => rs
            .weyl_group_matrices()
            .into_iter()
            .map(|m| WBranch {
                matrix: m,
                zero_slot: None,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::rat_int;
    use crate::roots::RootSystemType as T;

    fn idx_of(rs: &RootSystem, v: &[i64]) -> usize {
        let q: QVector = v.iter().map(|&c| rat_int(c)).collect();
        rs.root_index(&q).expect("root present")
    }

    #[test]
    fn canonical_set_is_orbit_invariant() {
        let rs = RootSystem::new(T::B(3));
        let a = vec![idx_of(&rs, &[1, -1, 0]), idx_of(&rs, &[-1, 1, 0])];
        let b = vec![idx_of(&rs, &[0, 1, -1]), idx_of(&rs, &[0, -1, 1])];
        assert!(sets_conjugate(&rs, &a, &b));
        let c = vec![idx_of(&rs, &[1, 0, 0]), idx_of(&rs, &[0, 1, 0])];
        assert!(!sets_conjugate(&rs, &a, &c));
    }

    #[test]
    fn witness_word_maps_input_to_canonical() {
        let rs = RootSystem::new(T::C(3));
        let set = vec![idx_of(&rs, &[0, 0, 2]), idx_of(&rs, &[1, -1, 0])];
        let (canon, word) = canonicalize_root_set(&rs, &set);
        let mut img = sorted_set(set);
        for &i in &word {
            img = apply_perm_to_set(rs.simple_reflection_perm(i), &img);
        }
        assert_eq!(img, canon);
    }

    #[test]
    fn b2_stabilizer_root_sets_fall_into_distinct_orbits() {
        // {ε2, ε1+ε2}, {±(ε1−ε2), ε1+ε2}, {±(ε1−ε2), ±(ε1+ε2)} are pairwise
        // non-conjugate; the long-root analogue {ε1−ε2, ε1} matches the first.
        let rs = RootSystem::new(T::B(2));
        let e2 = idx_of(&rs, &[0, 1]);
        let d = idx_of(&rs, &[1, -1]);
        let s = idx_of(&rs, &[1, 1]);
        let p1 = vec![e2, s];
        let p3 = vec![d, rs.neg(d), s];
        let p4 = vec![d, rs.neg(d), s, rs.neg(s)];
        assert!(!sets_conjugate(&rs, &p1, &p3));
        assert!(!sets_conjugate(&rs, &p3, &p4));
        let e1 = idx_of(&rs, &[1, 0]);
        assert!(sets_conjugate(&rs, &p1, &[d, e1]));
    }

    #[test]
    fn shape_canonicalization_handles_lines_and_normal() {
        let rs = RootSystem::new(T::A(2));
        let a1 = idx_of(&rs, &[1, -1, 0]);
        let a2 = idx_of(&rs, &[0, 1, -1]);
        let theta = idx_of(&rs, &[1, 0, -1]);
        let na1 = rs.neg(a1);
        let diff: QVector = vec![rat_int(1), rat_int(-2), rat_int(1)];
        let shape1 = SubalgebraShape::new(vec![theta], vec![vec![a1, a2]], Some(&diff));
        // Image under s_{α1}: line {−α1, θ}, full space α2, normal reflected.
        let refl = rs.reflect_vec(a1, &diff);
        let shape2 = SubalgebraShape::new(vec![a2], vec![vec![na1, theta]], Some(&refl));
        let (c1, _) = canonicalize_shape(&rs, &shape1);
        let (c2, _) = canonicalize_shape(&rs, &shape2);
        assert_eq!(c1, c2);
        // A different toral normal must distinguish the shapes.
        let other: QVector = vec![rat_int(1), rat_int(0), rat_int(-1)];
        let shape3 = SubalgebraShape::new(vec![theta], vec![vec![a1, a2]], Some(&other));
        let (c3, _) = canonicalize_shape(&rs, &shape3);
        assert_ne!(c1, c3);
    }

    #[test]
    fn membership_branches_cover_signed_permutations() {
        let rs = RootSystem::new(T::B(4));
        let touched: BTreeSet<usize> = [0usize, 1].into_iter().collect();
        let branches = membership_branches(&rs, &touched);
        // 2! permutations × 2² sign patterns.
        assert_eq!(branches.len(), 8);
        for b in &branches {
            for s in 2..4 {
                assert_eq!(b.matrix.rows[s][s], rat_int(1));
            }
        }
    }

    #[test]
    fn d_type_odd_flips_need_zero_slots() {
        let rs = RootSystem::new(T::D(4));
        let touched: BTreeSet<usize> = [0usize].into_iter().collect();
        let branches = membership_branches(&rs, &touched);
        // Identity (even flip count) plus one flip × 3 outside slots.
        assert_eq!(branches.len(), 1 + 3);
        assert!(branches.iter().any(|b| b.zero_slot.is_some()));
    }

    #[test]
    fn exceptional_branches_are_whole_group() {
        let rs = RootSystem::new(T::G2);
        let touched: BTreeSet<usize> = [0usize, 1, 2].into_iter().collect();
        assert_eq!(membership_branches(&rs, &touched).len(), 12);
    }
}
