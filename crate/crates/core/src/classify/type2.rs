//! Search for stabilizers of a point on a line spanned by two extreme
//! weight vectors: x = [v + v'] where v has dominant weight lambda, v' has
//! weight w(lambda), and w = s_alpha s_beta for a simple root alpha and a
//! positive root beta spanning a rank-2 subsystem with {alpha, beta} as a
//! base.
//!
//! The admissible (alpha, beta, lambda) are pinned by a chain of linear
//! programs over the fundamental-weight coordinates of lambda:
//!
//!   * lambda dominant, pairing equally (and positively) with alpha and
//!     beta, and moved off its line by s_alpha;
//!   * for every simple delta with (beta, delta) > 0, the root
//!     gamma = s_alpha(delta) must pair nonpositively with w(lambda);
//!   * whenever the rank-3 span of {alpha, beta, gamma} has the property
//!     that deleting the gamma-component of any of its roots lands on a
//!     root line again, the nonpositive pairing tightens to an equality.
//!
//! Candidates whose feasible region survives as a single ray are then put
//! through one more scan: a simple root sigma pairing negatively with
//! w(lambda) must itself sit in a rank-2 subsystem containing the direction
//! lambda - w(lambda), or the candidate is inconsistent and is dropped.
//!
//! For the survivors the stabilizer pattern is assembled directly: the
//! torus annihilated by lambda - w(lambda), every root space that lowers
//! neither extreme vector, and a line for each exchanged pair of root
//! spaces whose landing weight is extreme or has multiplicity one.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::chevalley::{
    check_closure, check_regular_torus, identify_type, resolve, solve_mixed_coefficients,
    subalgebra_rank, to_rats, unresolve, ChevalleyAlgebra, MixedTerm, RatS, ResolvedSpec,
    SubalgebraSpec, ToralSpec,
};
use crate::linprog::LinearSystem;
use crate::qlinalg::{
    dot, parallel_ratio, primitive_direction, rat_int, vec_add, vec_is_zero, vec_scale, vec_sub,
    QMatrix, QVector, Rat,
};
use crate::roots::{PlaneKind, RootSystem};
use crate::weights::weight_multiplicities;
use crate::weyl::{canonicalize_shape, SubalgebraShape};

/// One (alpha, beta) trial for w = s_alpha s_beta, with the verdicts of the
/// staged feasibility checks on the dominant weight.
#[derive(Debug, Clone)]
pub struct Type2Candidate {
    /// Position of alpha among the simple roots.
    pub alpha_pos: usize,
    /// Root index of alpha.
    pub alpha: usize,
    /// Root index of beta; always positive.
    pub beta: usize,
    /// Qualifying simple positions delta ((beta, delta) > 0, delta distinct
    /// from alpha), with the sign of (alpha, delta): -1 or 0.
    pub deltas: Vec<(usize, i32)>,
    /// Some lambda satisfies the sign constraints.
    pub weak_feasible: bool,
    /// Still feasible with the equalities licensed at orthogonal deltas.
    pub ortho_feasible: bool,
    /// Still feasible with every licensed equality imposed.
    pub plan_feasible: bool,
    /// Roots gamma = s_alpha(delta) whose constraint became an equality.
    pub equalities: Vec<usize>,
    /// Primitive dominant generator of the feasible ray, when the region
    /// collapses to one.
    pub lambda: Option<QVector>,
    /// Simple position sigma witnessing inconsistency: w(lambda) pairs
    /// negatively with sigma, yet no rank-2 subsystem through sigma
    /// contains lambda - w(lambda).
    pub eliminated_by: Option<usize>,
}

impl Type2Candidate {
    pub fn survives(&self) -> bool {
        self.plan_feasible && self.eliminated_by.is_none() && self.lambda.is_some()
    }
}

/// A verified stabilizer family: the base point data, the solved pattern,
/// and its Weyl-canonical shape for deduplication.
#[derive(Debug, Clone)]
pub struct Type2Pair {
    pub alpha: usize,
    pub beta: usize,
    pub lambda: QVector,
    pub spec: SubalgebraSpec,
    pub dim: usize,
    /// Reductive type of the pattern when it is one.
    pub label: Option<String>,
    /// Line coefficients that the closure equations forced away from the
    /// free normalization, as (line, term, value).
    pub pinned: Vec<(usize, usize, Rat)>,
    pub canonical: SubalgebraShape,
}

/// Rank-3 span property: every root in the span of {a, b, c} must stay on a
/// root line (or vanish) after deleting its c-component in the {a, b, c}
/// coordinates. False when the three roots are not independent.
pub(crate) fn remark_property(rs: &RootSystem, a: usize, b: usize, c: usize) -> bool {
    let m = QMatrix::from_rows(vec![
        rs.root(a).clone(),
        rs.root(b).clone(),
        rs.root(c).clone(),
    ]);
    if m.rank() != 3 {
        return false;
    }
    for r in 0..rs.num_roots() {
        let Some(coeffs) = m.in_row_span(rs.root(r)) else {
            continue;
        };
        let resid = vec_sub(rs.root(r), &vec_scale(&coeffs[2], rs.root(c)));
        if vec_is_zero(&resid) {
            continue;
        }
        if !(0..rs.num_roots()).any(|s| parallel_ratio(&resid, rs.root(s)).is_some()) {
            return false;
        }
    }
    true
}

/// Linear data for one (alpha, beta) trial: rows express pairings of lambda
/// or w(lambda) against a fixed vector, over the fundamental-weight
/// coordinates of lambda.
struct Trial<'a> {
    rs: &'a RootSystem,
    alpha_pos: usize,
    alpha: usize,
    beta: usize,
    fws: Vec<QVector>,
    wfws: Vec<QVector>,
}

impl<'a> Trial<'a> {
    fn new(rs: &'a RootSystem, alpha_pos: usize, beta: usize) -> Self {
        let alpha = rs.simple_root(alpha_pos);
        let fws = rs.fundamental_weights();
        let wfws = fws
            .iter()
            .map(|f| rs.reflect_vec(alpha, &rs.reflect_vec(beta, f)))
            .collect();
        Trial {
            rs,
            alpha_pos,
            alpha,
            beta,
            fws,
            wfws,
        }
    }

    fn pairing_row(&self, v: &QVector) -> QVector {
        self.fws.iter().map(|f| dot(f, v)).collect()
    }

    fn w_pairing_row(&self, v: &QVector) -> QVector {
        self.wfws.iter().map(|f| dot(f, v)).collect()
    }

    fn lambda_from(&self, x: &QVector) -> QVector {
        let mut acc = vec![Rat::zero(); self.rs.ambient];
        for (i, c) in x.iter().enumerate() {
            acc = vec_add(&acc, &vec_scale(c, &self.fws[i]));
        }
        acc
    }

    /// Dominance, equal positive pairing with both base roots, and the
    /// strict drop on the reflected side of alpha.
    fn base_system(&self) -> LinearSystem {
        let rank = self.rs.rank();
        let mut sys = LinearSystem::new(rank);
        for i in 0..rank {
            let mut row = vec![Rat::zero(); rank];
            row[i] = rat_int(1);
            sys.ge(row, Rat::zero());
        }
        let mut norm = vec![Rat::zero(); rank];
        norm[self.alpha_pos] = rat_int(1);
        sys.ge(norm, rat_int(1));
        let mut equal = self.pairing_row(self.rs.coroot(self.beta));
        equal[self.alpha_pos] -= rat_int(1);
        sys.eq(equal, Rat::zero());
        sys.le(self.w_pairing_row(self.rs.coroot(self.alpha)), Rat::zero());
        sys
    }

    fn qualifying_deltas(&self) -> Vec<(usize, i32)> {
        let mut out = Vec::new();
        for d in 0..self.rs.rank() {
            if d == self.alpha_pos {
                continue;
            }
            let droot = self.rs.simple_root(d);
            if dot(self.rs.root(self.beta), self.rs.root(droot)).is_positive() {
                let s = dot(self.rs.root(self.alpha), self.rs.root(droot));
                out.push((d, if s.is_zero() { 0 } else { -1 }));
            }
        }
        out
    }

    fn gamma_of(&self, delta_pos: usize) -> usize {
        self.rs
            .reflect_root(self.alpha, self.rs.simple_root(delta_pos))
    }
}

/// Enumerate every (alpha, beta) base pair with full joint support and
/// classify its feasibility stages.
pub fn type2_candidate_triples(rs: &RootSystem) -> Vec<Type2Candidate> {
    let rank = rs.rank();
    let full_mask: u32 = (1u32 << rank) - 1;
    let mut out = Vec::new();
    for alpha_pos in 0..rank {
        let alpha = rs.simple_root(alpha_pos);
        for beta in 0..rs.num_positive() {
            if rs.support_mask(beta) | (1u32 << alpha_pos) != full_mask {
                continue;
            }
            if !rs.is_plane_base(alpha, beta) {
                continue;
            }
            out.push(stage_candidate(&Trial::new(rs, alpha_pos, beta)));
        }
    }
    out
}

fn stage_candidate(trial: &Trial) -> Type2Candidate {
    let rs = trial.rs;
    let deltas = trial.qualifying_deltas();

    let mut weak = trial.base_system();
    for &(d, _) in &deltas {
        let gamma = trial.gamma_of(d);
        weak.le(trial.w_pairing_row(rs.coroot(gamma)), Rat::zero());
    }
    let weak_feasible = weak.is_feasible();

    // Equalities licensed by the span property, keyed by delta.
    let licensed: Vec<(usize, i32, usize, bool)> = deltas
        .iter()
        .map(|&(d, sign)| {
            let gamma = trial.gamma_of(d);
            (d, sign, gamma, remark_property(rs, trial.alpha, trial.beta, gamma))
        })
        .collect();

    let build = |use_negative_deltas: bool| {
        let mut sys = trial.base_system();
        for &(_, sign, gamma, lic) in &licensed {
            let row = trial.w_pairing_row(rs.coroot(gamma));
            if lic && (sign == 0 || use_negative_deltas) {
                sys.eq(row, Rat::zero());
            } else {
                sys.le(row, Rat::zero());
            }
        }
        sys
    };

    let ortho_feasible = weak_feasible && build(false).is_feasible();
    let plan_feasible = ortho_feasible && build(true).is_feasible();
    let equalities: Vec<usize> = licensed
        .iter()
        .filter(|&&(_, _, _, lic)| lic)
        .map(|&(_, _, gamma, _)| gamma)
        .collect();

    let mut lambda = None;
    let mut eliminated_by = None;
    if plan_feasible {
        lambda = feasible_ray(trial, &licensed);
        if let Some(lam) = &lambda {
            let wl = rs.reflect_vec(trial.alpha, &rs.reflect_vec(trial.beta, lam));
            eliminated_by = elimination_scan(rs, trial.alpha_pos, lam, &wl);
        }
    }

    Type2Candidate {
        alpha_pos: trial.alpha_pos,
        alpha: trial.alpha,
        beta: trial.beta,
        deltas,
        weak_feasible,
        ortho_feasible,
        plan_feasible,
        equalities,
        lambda,
        eliminated_by,
    }
}

/// The feasible cone of the fully tightened system, reduced by its implicit
/// equalities; Some(lambda) when what remains is a single ray.
fn feasible_ray(trial: &Trial, licensed: &[(usize, i32, usize, bool)]) -> Option<QVector> {
    let rs = trial.rs;
    let rank = rs.rank();
    let mut eq_rows: Vec<QVector> = Vec::new();
    let mut ineq_rows: Vec<QVector> = Vec::new();

    let mut equal = trial.pairing_row(rs.coroot(trial.beta));
    equal[trial.alpha_pos] -= rat_int(1);
    eq_rows.push(equal);

    for i in 0..rank {
        let mut row = vec![Rat::zero(); rank];
        row[i] = rat_int(1);
        ineq_rows.push(row);
    }
    // Rows are normalized as "value >= 0".
    ineq_rows.push(
        trial
            .w_pairing_row(rs.coroot(trial.alpha))
            .iter()
            .map(|c| -c)
            .collect(),
    );
    for &(_, _, gamma, lic) in licensed {
        let row: QVector = trial
            .w_pairing_row(rs.coroot(gamma))
            .iter()
            .map(|c| -c)
            .collect();
        if lic {
            eq_rows.push(row);
        } else {
            ineq_rows.push(row);
        }
    }

    // An inequality that can never be strict inside the cone is an equality.
    let mut implicit: Vec<QVector> = Vec::new();
    for probe in &ineq_rows {
        let mut sys = LinearSystem::new(rank);
        for e in &eq_rows {
            sys.eq(e.clone(), Rat::zero());
        }
        for r in &ineq_rows {
            sys.ge(r.clone(), Rat::zero());
        }
        sys.ge(probe.clone(), rat_int(1));
        if !sys.is_feasible() {
            implicit.push(probe.clone());
        }
    }
    eq_rows.extend(implicit);

    let kernel = QMatrix::from_rows(eq_rows).kernel();
    if kernel.len() != 1 {
        return None;
    }
    let mut gen = kernel.into_iter().next().unwrap();
    if gen.iter().any(|c| c.is_negative()) {
        gen = gen.iter().map(|c| -c).collect();
    }
    if gen.iter().any(|c| c.is_negative()) {
        return None;
    }
    Some(trial.lambda_from(&primitive_direction(&gen)))
}

/// A simple root pairing negatively with w(lambda) needs a rank-2 subsystem
/// through it containing lambda - w(lambda); report the first one without.
fn elimination_scan(
    rs: &RootSystem,
    alpha_pos: usize,
    lambda: &QVector,
    wlambda: &QVector,
) -> Option<usize> {
    let d = vec_sub(lambda, wlambda);
    for sigma_pos in 0..rs.rank() {
        if sigma_pos == alpha_pos {
            continue;
        }
        let sigma = rs.simple_root(sigma_pos);
        if !dot(wlambda, rs.root(sigma)).is_negative() {
            continue;
        }
        if parallel_ratio(&d, rs.root(sigma)).is_some() {
            continue;
        }
        let m = QMatrix::from_rows(vec![rs.root(sigma).clone(), d.clone()]);
        let rescued = (0..rs.num_roots()).any(|r| {
            parallel_ratio(rs.root(r), rs.root(sigma)).is_none()
                && m.in_row_span(rs.root(r)).is_some()
        });
        if !rescued {
            return Some(sigma_pos);
        }
    }
    None
}

/// Stabilizer pattern of x = [v + v']: kernel torus of lambda - w(lambda),
/// root spaces lowering neither extreme vector, and one line per exchanged
/// pair whose landing weight cannot mix with independent vectors.
fn extreme_pair_spec(rs: &RootSystem, lambda: &QVector, wlambda: &QVector) -> SubalgebraSpec {
    let table = weight_multiplicities(rs, lambda);
    let d = vec_sub(lambda, wlambda);
    let mut fulls: Vec<Vec<RatS>> = Vec::new();
    let mut lines: Vec<Vec<MixedTerm>> = Vec::new();
    for g in 0..rs.num_roots() {
        let lg = dot(lambda, rs.root(g));
        let wg = dot(wlambda, rs.root(g));
        if !lg.is_negative() && !wg.is_negative() {
            fulls.push(to_rats(rs.root(g)));
            continue;
        }
        if lg.is_negative() && !wg.is_negative() {
            // g lowers v; a partner raising v' by the same difference can
            // cancel the loss on the sum.
            let Some(p) = rs.root_index(&vec_add(rs.root(g), &d)) else {
                continue;
            };
            if !dot(wlambda, rs.root(p)).is_negative() || dot(lambda, rs.root(p)).is_negative() {
                continue;
            }
            let nu = vec_add(lambda, rs.root(g));
            if table.is_extreme(&nu) || table.multiplicity(rs, &nu) == 1 {
                lines.push(vec![
                    MixedTerm {
                        root: to_rats(rs.root(g)),
                        coeff: None,
                    },
                    MixedTerm {
                        root: to_rats(rs.root(p)),
                        coeff: None,
                    },
                ]);
            }
        }
    }
    SubalgebraSpec {
        toral: ToralSpec::kernel(vec![d]),
        root_spaces: fulls,
        mixed: lines,
    }
}

/// The rank-2 stabilizer pattern at a base pair (alpha, beta), stated
/// directly: the torus killing alpha + s_alpha(beta), the exchange line on
/// (-alpha, s_alpha(beta)), and, outside the doubled-plane case, every
/// other positive root space of the plane. Line coefficients are left open
/// for the closure solver to pin.
pub fn type2_stabilizer_levi(rs: &RootSystem, alpha: usize, beta: usize) -> SubalgebraSpec {
    let plane = rs.plane_through(alpha, beta);
    let sab = rs.reflect_root(alpha, beta);
    let toral = ToralSpec::kernel(vec![vec_add(rs.root(alpha), rs.root(sab))]);
    let open = |g: usize| MixedTerm {
        root: to_rats(rs.root(g)),
        coeff: None,
    };
    if plane.kind == PlaneKind::A1xA1 {
        return SubalgebraSpec {
            toral,
            root_spaces: Vec::new(),
            mixed: vec![
                vec![open(rs.neg(alpha)), open(beta)],
                vec![open(alpha), open(rs.neg(beta))],
            ],
        };
    }
    let mut fulls = Vec::new();
    for g in rs.plane_positives(&plane) {
        if g != alpha && g != sab {
            fulls.push(to_rats(rs.root(g)));
        }
    }
    SubalgebraSpec {
        toral,
        root_spaces: fulls,
        mixed: vec![vec![open(rs.neg(alpha)), open(sab)]],
    }
}

/// For a base pair spanning a rank-2 subsystem of type G2, the squared
/// rotation (s_alpha s_beta)^2 admits no compatible weight: both pairings
/// (lambda, alpha) and (lambda, beta) are forced strictly positive, so the
/// fraction of the full turn spent on the alpha side is strictly between 0
/// and 1 and cannot be integral. Returns true when both forcing programs
/// are indeed infeasible.
pub fn g2_integrality_obstruction(rs: &RootSystem, alpha_pos: usize, beta: usize) -> bool {
    let trial = Trial::new(rs, alpha_pos, beta);
    let mut nonpos_alpha = trial.base_system();
    nonpos_alpha.le(trial.pairing_row(rs.root(trial.alpha)), Rat::zero());
    let mut nonpos_beta = trial.base_system();
    nonpos_beta.le(trial.pairing_row(rs.root(beta)), Rat::zero());
    !nonpos_alpha.is_feasible() && !nonpos_beta.is_feasible()
}

/// Full enumeration: stage every candidate, model the survivors, verify
/// closure and rank, and merge Weyl-conjugate results.
pub fn enumerate_type2(rs: &RootSystem) -> Result<Vec<Type2Pair>, String> {
    let alg = ChevalleyAlgebra::from_root_system(rs.clone());
    let mut families: BTreeMap<SubalgebraShape, Type2Pair> = BTreeMap::new();
    for cand in type2_candidate_triples(rs) {
        if !cand.survives() {
            continue;
        }
        let lam = cand.lambda.clone().unwrap();
        let wl = rs.reflect_vec(cand.alpha, &rs.reflect_vec(cand.beta, &lam));
        let spec = extreme_pair_spec(rs, &lam, &wl);
        let resolved = resolve(rs, &spec).map_err(|e| format!("resolve failed: {e}"))?;
        let sols = solve_mixed_coefficients(&alg, &resolved)?;
        let sol = sols
            .first()
            .ok_or_else(|| "no coefficient solution for a surviving candidate".to_string())?;
        let solved = ResolvedSpec {
            toral_basis: resolved.toral_basis.clone(),
            root_spaces: resolved.root_spaces.clone(),
            mixed: resolved
                .mixed
                .iter()
                .enumerate()
                .map(|(l, terms)| {
                    terms
                        .iter()
                        .enumerate()
                        .map(|(t, &(g, _))| (g, Some(sol.coeffs[l][t].clone())))
                        .collect()
                })
                .collect(),
        };
        let closure = check_closure(&alg, &solved);
        if !closure.closed {
            return Err(format!(
                "surviving candidate produced a non-closed pattern: {:?}",
                closure.witness
            ));
        }
        let rank_report = subalgebra_rank(&alg, &solved);
        if rank_report.rank != rs.rank() - 1 {
            continue;
        }
        if !check_regular_torus(&alg, &solved).is_empty() {
            continue;
        }
        let label = identify_type(&alg, &solved)
            .ok()
            .map(|t| t.components.join("+"));
        let shape = SubalgebraShape::new(
            solved.root_spaces.clone(),
            solved.mixed.iter().map(|l| l.iter().map(|&(g, _)| g).collect()).collect(),
            Some(&vec_sub(&lam, &wl)),
        );
        let (canonical, _) = canonicalize_shape(rs, &shape);
        let dim = solved.dim();
        families.entry(canonical.clone()).or_insert(Type2Pair {
            alpha: cand.alpha,
            beta: cand.beta,
            lambda: lam,
            spec: unresolve(rs, spec.toral.clone(), &solved),
            dim,
            label,
            pinned: sol.pinned.clone(),
            canonical,
        });
    }
    Ok(families.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystemType;

    fn coords(v: &[i64]) -> QVector {
        v.iter().map(|&c| rat_int(c)).collect()
    }

    fn half_coords(v: &[i64]) -> QVector {
        v.iter().map(|&c| crate::qlinalg::rat(c, 2)).collect()
    }

    #[test]
    fn span_property_separates_the_two_a_family_cases() {
        // In A4 the span of {alpha2, theta, alpha4} keeps the property, so
        // the orthogonal-delta equality applies and kills the trial.
        let a4 = RootSystem::new(RootSystemType::A(4));
        let alpha2 = a4.simple_root(1);
        let theta = a4.highest_root();
        let alpha4 = a4.simple_root(3);
        assert!(remark_property(&a4, alpha2, theta, alpha4));

        // In A3 the span of {alpha2, theta, s_2(alpha1)} is the whole
        // system, where the property fails.
        let a3 = RootSystem::new(RootSystemType::A(3));
        let alpha2 = a3.simple_root(1);
        let theta = a3.highest_root();
        let gamma = a3.reflect_root(alpha2, a3.simple_root(0));
        assert!(!remark_property(&a3, alpha2, theta, gamma));
    }

    fn candidate<'a>(
        cands: &'a [Type2Candidate],
        rs: &RootSystem,
        alpha_pos: usize,
        beta_coords: &QVector,
    ) -> &'a Type2Candidate {
        let beta = rs.root_index(beta_coords).expect("beta is a root");
        cands
            .iter()
            .find(|c| c.alpha_pos == alpha_pos && c.beta == beta)
            .expect("candidate enumerated")
    }

    #[test]
    fn c3_staging_keeps_one_survivor_and_eliminates_the_doubled_ray() {
        let rs = RootSystem::new(RootSystemType::C(3));
        let cands = type2_candidate_triples(&rs);

        let survivor = candidate(&cands, &rs, 1, &coords(&[1, 0, 1]));
        assert!(survivor.survives());
        let lam = survivor.lambda.clone().unwrap();
        assert_eq!(lam, coords(&[1, 1, 0]));

        let doubled = candidate(&cands, &rs, 1, &coords(&[2, 0, 0]));
        assert!(doubled.plan_feasible);
        assert_eq!(doubled.eliminated_by, Some(0));

        let low = candidate(&cands, &rs, 0, &coords(&[0, 2, 0]));
        assert!(low.weak_feasible && !low.plan_feasible);

        assert_eq!(cands.iter().filter(|c| c.survives()).count(), 1);
    }

    #[test]
    fn b3_survivor_rides_the_spin_ray() {
        let rs = RootSystem::new(RootSystemType::B(3));
        let cands = type2_candidate_triples(&rs);
        let survivor = candidate(&cands, &rs, 2, &coords(&[1, 1, 0]));
        assert!(survivor.survives());
        assert_eq!(survivor.lambda.clone().unwrap(), half_coords(&[1, 1, 1]));
        assert_eq!(cands.iter().filter(|c| c.survives()).count(), 1);
    }

    #[test]
    fn d4_survivor_is_the_vector_ray() {
        let rs = RootSystem::new(RootSystemType::D(4));
        let cands = type2_candidate_triples(&rs);
        let survivor = candidate(&cands, &rs, 0, &coords(&[1, 1, 0, 0]));
        assert!(survivor.survives());
        assert_eq!(survivor.lambda.clone().unwrap(), coords(&[1, 0, 0, 0]));
        assert_eq!(cands.iter().filter(|c| c.survives()).count(), 1);
    }

    #[test]
    fn f4_survivor_rides_the_short_fundamental_ray() {
        let rs = RootSystem::new(RootSystemType::F4);
        let cands = type2_candidate_triples(&rs);
        let survivors: Vec<_> = cands.iter().filter(|c| c.survives()).collect();
        assert_eq!(survivors.len(), 1);
        let s = survivors[0];
        assert_eq!(s.alpha_pos, 3);
        assert_eq!(s.lambda.clone().unwrap(), coords(&[1, 0, 0, 0]));
    }

    #[test]
    fn b3_stabilizer_is_the_fourteen_dimensional_exceptional_algebra() {
        let rs = RootSystem::new(RootSystemType::B(3));
        let fams = enumerate_type2(&rs).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].dim, 14);
        assert_eq!(fams[0].label.as_deref(), Some("G2"));
    }

    #[test]
    fn c3_stabilizer_has_dimension_ten_with_two_derived_lines() {
        let rs = RootSystem::new(RootSystemType::C(3));
        let fams = enumerate_type2(&rs).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].dim, 10);
        assert_eq!(fams[0].spec.mixed.len(), 3);
        assert!(fams[0].label.is_none());
    }

    #[test]
    fn d_family_stabilizers_are_odd_orthogonal() {
        for n in 4..=5usize {
            let rs = RootSystem::new(RootSystemType::D(n));
            let fams = enumerate_type2(&rs).unwrap();
            assert_eq!(fams.len(), 1, "D({n})");
            assert_eq!(fams[0].dim, (n - 1) * (2 * n - 1), "D({n})");
            assert_eq!(fams[0].label.as_deref(), Some(format!("B{}", n - 1).as_str()));
        }
    }

    #[test]
    fn rank_two_bases_reproduce_the_stated_levi_patterns() {
        for (rst, dim) in [
            (RootSystemType::A1xA1, 3usize),
            (RootSystemType::A(2), 3),
            (RootSystemType::B(2), 4),
            (RootSystemType::G2, 6),
        ] {
            let rs = RootSystem::new(rst);
            let fams = enumerate_type2(&rs).unwrap();
            assert_eq!(fams.len(), 1, "{rst:?}");
            assert_eq!(fams[0].dim, dim, "{rst:?}");

            // The directly stated rank-2 pattern must be the same family.
            let alpha = rs.simple_root(0);
            let beta = rs.simple_root(1);
            let stated = type2_stabilizer_levi(&rs, alpha, beta);
            let resolved = resolve(&rs, &stated).unwrap();
            let shape = SubalgebraShape::new(
                resolved.root_spaces.clone(),
                resolved
                    .mixed
                    .iter()
                    .map(|l| l.iter().map(|&(g, _)| g).collect())
                    .collect(),
                Some(&vec_add(
                    rs.root(alpha),
                    rs.root(rs.reflect_root(alpha, beta)),
                )),
            );
            let (canon, _) = canonicalize_shape(&rs, &shape);
            assert_eq!(canon, fams[0].canonical, "{rst:?}");
        }
    }

    #[test]
    fn f4_stabilizer_has_dimension_twenty_four() {
        let rs = RootSystem::new(RootSystemType::F4);
        let fams = enumerate_type2(&rs).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].dim, 24);
        assert_eq!(fams[0].spec.mixed.len(), 7);
        assert_eq!(fams[0].spec.root_spaces.len(), 14);
    }

    #[test]
    fn squared_rotation_is_obstructed_on_a_doubled_plane() {
        let rs = RootSystem::new(RootSystemType::G2);
        assert!(g2_integrality_obstruction(&rs, 0, rs.simple_root(1)));
        assert!(g2_integrality_obstruction(&rs, 1, rs.simple_root(0)));
    }

    #[test]
    fn higher_b_and_c_ranks_have_no_families() {
        for n in 4..=5usize {
            let b = RootSystem::new(RootSystemType::B(n));
            assert!(enumerate_type2(&b).unwrap().is_empty(), "B({n})");
            let c = RootSystem::new(RootSystemType::C(n));
            assert!(enumerate_type2(&c).unwrap().is_empty(), "C({n})");
        }
    }
}
