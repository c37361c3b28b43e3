//! Rank-2 containment constraints on a candidate stabilizer root set.
//!
//! Fix a full-support positive root beta and another root gamma. The plane
//! they span meets the candidate set Psi in one of a short list of patterns,
//! determined by the plane's type and by how beta sits inside it. Two
//! encodings are provided. `Reading::Literal` is the four case shapes exactly
//! as classically stated, with beta in the distinguished position:
//!
//!   (i)   A1xA1:              +-gamma in Psi;
//!   (ii)  A2:                 +-gamma in Psi, or +-s_gamma(beta) in Psi;
//!   (iii) B2, beta long:      Psi meets the plane exactly in {d, (beta+d)/2}
//!                             with d the other positive long root;
//!   (iv)  B2, beta short:     Psi contains {beta+s, +-(beta-s)} or meets the
//!                             plane exactly in {beta+s, s}, with s the other
//!                             positive short root.
//!
//! `Reading::Calibrated` replaces each case by the exact footprint menu that
//! the classification actually realizes. The differences: positivity pins the
//! orientation of every pattern; only the positive half of case (i) is
//! mandatory; the A2 alternatives become exact footprints, with three options
//! when beta is a base root of the plane; case (iv) closes the first branch
//! to a full so4 footprint and gains, when beta is the lower of the two
//! positive shorts, the all-positive pattern {s, beta+s, s-beta} (while the
//! stated (iv) shapes assume beta is the upper short and do not apply).
//! `type1::enumerate_type1` consumes the calibrated menus; the literal ones
//! exist so tests can document where the two readings part ways.

use crate::qlinalg::{dot, rat, vec_add, vec_scale, vec_sub};
use crate::roots::{Plane, PlaneKind, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    Literal,
    Calibrated,
}

/// One admissible intersection pattern inside a plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alternative {
    /// Root indices that must belong to Psi.
    pub must_contain: Vec<usize>,
    /// When set, Psi's intersection with the plane minus {beta, -beta} must
    /// equal this set exactly.
    pub must_equal_within_plane: Option<Vec<usize>>,
}

impl Alternative {
    fn exact(mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        Alternative {
            must_contain: set.clone(),
            must_equal_within_plane: Some(set),
        }
    }

    fn at_least(mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        Alternative {
            must_contain: set,
            must_equal_within_plane: None,
        }
    }
}

/// The disjunction of admissible patterns for one plane through beta.
#[derive(Debug, Clone)]
pub struct PlaneConstraint {
    pub plane: Plane,
    pub alternatives: Vec<Alternative>,
}

/// Constraint on Psi within the plane spanned by beta and gamma.
pub fn reformul_constraint(
    rs: &RootSystem,
    beta: usize,
    gamma: usize,
    reading: Reading,
) -> Result<PlaneConstraint, String> {
    if !rs.is_positive(beta) {
        return Err("beta must be a positive root".into());
    }
    if gamma == beta || gamma == rs.neg(beta) {
        return Err("gamma must be independent of beta".into());
    }
    let plane = rs.plane_through(beta, gamma);
    let alternatives = match plane.kind {
        PlaneKind::A1xA1 => {
            let gpos = *plane
                .roots
                .iter()
                .find(|&&r| r != beta && r != rs.neg(beta) && rs.is_positive(r))
                .expect("A1xA1 plane has a positive root besides beta");
            match reading {
                Reading::Literal => vec![Alternative::at_least(vec![gpos, rs.neg(gpos)])],
                Reading::Calibrated => vec![Alternative::at_least(vec![gpos])],
            }
        }
        PlaneKind::A2 => match reading {
            Reading::Literal => {
                let sg = rs.reflect_root(gamma, beta);
                vec![
                    Alternative::at_least(vec![gamma, rs.neg(gamma)]),
                    Alternative::at_least(vec![sg, rs.neg(sg)]),
                ]
            }
            Reading::Calibrated => {
                let (b1, b2) = rs.plane_base(&plane);
                if beta == b1 || beta == b2 {
                    let g1 = if beta == b1 { b2 } else { b1 };
                    let top = rs.sum_root(g1, beta).expect("A2 base roots sum to a root");
                    vec![
                        Alternative::exact(vec![g1, top]),
                        Alternative::exact(vec![g1, rs.neg(g1)]),
                        Alternative::exact(vec![top, rs.neg(top)]),
                    ]
                } else {
                    vec![
                        Alternative::exact(vec![b1, rs.neg(b1)]),
                        Alternative::exact(vec![b2, rs.neg(b2)]),
                    ]
                }
            }
        },
        PlaneKind::B2 => {
            let pos = rs.plane_positives(&plane);
            assert_eq!(pos.len(), 4, "B2 plane has four positive roots");
            let nbeta = dot(rs.root(beta), rs.root(beta));
            let longest = pos
                .iter()
                .map(|&r| dot(rs.root(r), rs.root(r)))
                .max()
                .unwrap();
            let beta_long = nbeta == longest;
            let mate = *pos
                .iter()
                .find(|&&r| r != beta && dot(rs.root(r), rs.root(r)) == nbeta)
                .expect("B2 plane has two positive roots of each length");
            if beta_long {
                // Cases (iii): both readings agree once positivity fixes the
                // orientation.
                let m1 = rs
                    .root_index(&vec_scale(
                        &rat(1, 2),
                        &vec_add(rs.root(beta), rs.root(mate)),
                    ))
                    .expect("half-sum of the two plane longs is a root");
                vec![Alternative::exact(vec![mate, m1])]
            } else {
                let l_plus = rs
                    .root_index(&vec_add(rs.root(beta), rs.root(mate)))
                    .expect("sum of the two plane shorts is a root");
                let d = rs
                    .root_index(&vec_sub(rs.root(beta), rs.root(mate)))
                    .expect("difference of the two plane shorts is a root");
                match reading {
                    Reading::Literal => vec![
                        Alternative::at_least(vec![l_plus, d, rs.neg(d)]),
                        Alternative::exact(vec![l_plus, mate]),
                    ],
                    Reading::Calibrated => {
                        let so4 = Alternative::exact(vec![l_plus, rs.neg(l_plus), d, rs.neg(d)]);
                        if rs.is_positive(d) {
                            vec![
                                so4,
                                Alternative::exact(vec![l_plus, d, rs.neg(d)]),
                                Alternative::exact(vec![l_plus, mate]),
                            ]
                        } else {
                            vec![so4, Alternative::exact(vec![mate, l_plus, rs.neg(d)])]
                        }
                    }
                }
            }
        }
        PlaneKind::G2 => {
            return Err(
                "G2-type planes are matched against fixed patterns, not case shapes".into(),
            )
        }
    };
    Ok(PlaneConstraint {
        plane,
        alternatives,
    })
}
