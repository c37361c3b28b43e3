//! Verification passes over a resolved subalgebra: bracket closure (with
//! witnesses), solving unknown mixed-line coefficients, rank and torus
//! regularity checks, and identification of reductive types from restricted
//! weights.

use num_traits::Zero;

use crate::qlinalg::{
    dot, project_onto_span, rat_int, span_rank, vec_is_zero, vec_neg, QMatrix, QVector, Rat,
};
use crate::roots::{RootSystem, RootSystemType};

use super::{ChevalleyAlgebra, Element, ResolvedSpec};

#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub closed: bool,
    /// (left generator, right generator, offending bracket), human-readable.
    pub witness: Option<(String, String, String)>,
}

fn generators(alg: &ChevalleyAlgebra, r: &ResolvedSpec) -> Vec<(Element, String)> {
    let mut gens = Vec::new();
    for h in &r.toral_basis {
        gens.push((alg.cartan(h), format!("h[{}]", super::fmt_vec(h))));
    }
    for &i in &r.root_spaces {
        gens.push((
            alg.root_vector(i),
            format!("e[{}]", super::fmt_vec(alg.rs.root(i))),
        ));
    }
    for line in &r.mixed {
        let mut x = alg.zero();
        for (i, c) in line {
            let c = c
                .clone()
                .expect("mixed coefficients must be known; solve them first");
            x = alg.add(&x, &alg.scale(&c, &alg.root_vector(*i)));
        }
        let desc = alg.describe(&x);
        gens.push((x, desc));
    }
    gens
}

/// Exact bracket-closure check over all generator pairs. The first failing
/// pair (in the canonical generator order) is reported as a witness.
pub fn check_closure(alg: &ChevalleyAlgebra, r: &ResolvedSpec) -> ClosureReport {
    let gens = generators(alg, r);
    let span = QMatrix::from_rows(gens.iter().map(|(g, _)| g.flat()).collect());
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let b = alg.bracket(&gens[i].0, &gens[j].0);
            if b.is_zero() {
                continue;
            }
            if span.in_row_span(&b.flat()).is_none() {
                return ClosureReport {
                    closed: false,
                    witness: Some((
                        gens[i].1.clone(),
                        gens[j].1.clone(),
                        alg.describe(&b),
                    )),
                };
            }
        }
    }
    ClosureReport {
        closed: true,
        witness: None,
    }
}

#[derive(Debug, Clone)]
pub struct RankReport {
    /// Dimension of the toral part: the rank of the subalgebra provided the
    /// zero-weight checks below come back empty.
    pub rank: usize,
    /// Root spaces whose root vanishes on the whole toral part.
    pub zero_weight_root_spaces: Vec<usize>,
    /// Mixed lines of restricted weight zero.
    pub zero_weight_lines: Vec<usize>,
}

pub fn subalgebra_rank(alg: &ChevalleyAlgebra, r: &ResolvedSpec) -> RankReport {
    let rank = span_rank(&r.toral_basis, alg.rs.ambient);
    let vanishes = |root: &QVector| r.toral_basis.iter().all(|h| dot(root, h).is_zero());
    let zero_weight_root_spaces = r
        .root_spaces
        .iter()
        .copied()
        .filter(|&i| vanishes(alg.rs.root(i)))
        .collect();
    let zero_weight_lines = (0..r.mixed.len())
        .filter(|&l| vanishes(alg.rs.root(r.mixed[l][0].0)))
        .collect();
    RankReport {
        rank,
        zero_weight_root_spaces,
        zero_weight_lines,
    }
}

/// Indices of ambient roots that vanish on the toral part. Empty result means
/// the toral part is a regular torus (of its dimension) in the ambient group.
pub fn check_regular_torus(alg: &ChevalleyAlgebra, r: &ResolvedSpec) -> Vec<usize> {
    (0..alg.rs.num_roots())
        .filter(|&i| {
            r.toral_basis
                .iter()
                .all(|h| dot(alg.rs.root(i), h).is_zero())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSolution {
    /// Solved coefficient per mixed-line member, same shape as the input.
    pub coeffs: Vec<Vec<Rat>>,
    /// (line, member) coordinates that stayed free; any nonzero value works
    /// (verified), 1 is reported.
    pub free: Vec<(usize, usize)>,
    /// (line, member) coordinates pinned to a value other than the 1 used to
    /// normalize each line; these are the nontrivial solved constants.
    pub pinned: Vec<(usize, usize, Rat)>,
}

/// Restriction of a root to the toral part, as the pairing vector against the
/// toral basis.
fn weight_of(r: &ResolvedSpec, root: &QVector) -> QVector {
    r.toral_basis.iter().map(|h| dot(root, h)).collect()
}

/// Solve the unknown mixed coefficients of `r` so the spec closes under the
/// bracket. Returns the solutions up to independent rescaling of each line
/// (at most one arises from the deterministic propagation below; none when
/// closure is impossible). Structural preconditions: mixed lines have
/// pairwise distinct restricted weights, all distinct from every root-space
/// weight.
pub fn solve_mixed_coefficients(
    alg: &ChevalleyAlgebra,
    r: &ResolvedSpec,
) -> Result<Vec<CoeffSolution>, String> {
    let rs = &alg.rs;
    let nlines = r.mixed.len();
    let mut weights: Vec<QVector> = Vec::new();
    for line in &r.mixed {
        weights.push(weight_of(r, rs.root(line[0].0)));
    }
    for i in 0..nlines {
        for j in (i + 1)..nlines {
            if weights[i] == weights[j] {
                return Err("two mixed lines share a restricted weight".into());
            }
        }
        for &sp in &r.root_spaces {
            if weights[i] == weight_of(r, rs.root(sp)) {
                return Err("a mixed line and a root space share a restricted weight".into());
            }
        }
    }

    // member_line[root index] = (line, member) when the root supports a line.
    let mut member_line = vec![None; rs.num_roots()];
    for (l, line) in r.mixed.iter().enumerate() {
        for (m, (idx, _)) in line.iter().enumerate() {
            if member_line[*idx].is_some() {
                return Err("two mixed lines share a support root".into());
            }
            member_line[*idx] = Some((l, m));
        }
    }
    let in_root_spaces = |i: usize| r.root_spaces.contains(&i);

    let mut coeffs: Vec<Vec<Option<Rat>>> = r
        .mixed
        .iter()
        .map(|line| line.iter().map(|(_, c)| c.clone()).collect())
        .collect();
    // Normalize fully-unknown lines: first member 1 (the line's own scale).
    for line in coeffs.iter_mut() {
        if line.iter().all(|c| c.is_none()) {
            line[0] = Some(rat_int(1));
        }
    }
    for line in &coeffs {
        if line.iter().flatten().any(|c| c.is_zero()) {
            return Err("mixed-line coefficients must be nonzero".into());
        }
    }

    let toral_span = QMatrix::new(r.toral_basis.clone(), rs.ambient);

    // Propagation: brackets of fully-known generators pin unknown lines.
    let mut pinned: Vec<(usize, usize, Rat)> = Vec::new();
    loop {
        let mut progress = false;
        let known_line =
            |l: usize, cs: &Vec<Vec<Option<Rat>>>| cs[l].iter().all(|c| c.is_some());
        // Assemble current fully-known generators.
        let mut gens: Vec<Element> = Vec::new();
        for h in &r.toral_basis {
            gens.push(alg.cartan(h));
        }
        for &i in &r.root_spaces {
            gens.push(alg.root_vector(i));
        }
        for (l, line) in r.mixed.iter().enumerate() {
            if known_line(l, &coeffs) {
                let mut x = alg.zero();
                for (m, (idx, _)) in line.iter().enumerate() {
                    let c = coeffs[l][m].clone().unwrap();
                    x = alg.add(&x, &alg.scale(&c, &alg.root_vector(*idx)));
                }
                gens.push(x);
            }
        }
        'pairs: for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let b = alg.bracket(&gens[i], &gens[j]);
                if b.is_zero() {
                    continue;
                }
                if !vec_is_zero(&b.h) && toral_span.in_row_span(&b.h).is_none() {
                    return Ok(Vec::new()); // toral escape: no assignment helps
                }
                // Per-line restrictions of the e-part.
                let mut line_hit = vec![false; nlines];
                for (idx, c) in b.e.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    match member_line[idx] {
                        Some((l, _)) => line_hit[l] = true,
                        None => {
                            if !in_root_spaces(idx) {
                                return Ok(Vec::new()); // lands outside the spec
                            }
                        }
                    }
                }
                for l in 0..nlines {
                    if !line_hit[l] || known_line(l, &coeffs) {
                        continue;
                    }
                    // b restricted to line l must be t * (line l vector).
                    let bl: Vec<Rat> = r.mixed[l]
                        .iter()
                        .map(|(idx, _)| b.e[*idx].clone())
                        .collect();
                    let t = match (0..bl.len())
                        .find(|&m| coeffs[l][m].is_some() && !bl[m].is_zero())
                    {
                        Some(m) => &bl[m] / coeffs[l][m].as_ref().unwrap(),
                        None => {
                            // A known member got restriction 0 while the line
                            // is hit elsewhere: t = 0 forced, contradiction.
                            if (0..bl.len()).any(|m| coeffs[l][m].is_some()) {
                                return Ok(Vec::new());
                            }
                            // Entirely unknown line cannot happen: first
                            // member was normalized to 1.
                            unreachable!("line has a normalized member");
                        }
                    };
                    for m in 0..bl.len() {
                        let want = &bl[m] / &t;
                        match &coeffs[l][m] {
                            Some(c) if *c != want => return Ok(Vec::new()),
                            Some(_) => {}
                            None => {
                                if want.is_zero() {
                                    return Ok(Vec::new()); // degenerate line
                                }
                                pinned.push((l, m, want.clone()));
                                coeffs[l][m] = Some(want);
                                progress = true;
                            }
                        }
                    }
                    if progress {
                        break 'pairs; // re-assemble generators and rescan
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }

    // Leftover unknowns are free: default them to 1 and verify.
    let mut free = Vec::new();
    for (l, line) in coeffs.iter_mut().enumerate() {
        for (m, c) in line.iter_mut().enumerate() {
            if c.is_none() {
                *c = Some(rat_int(1));
                free.push((l, m));
            }
        }
    }

    let assemble = |coeffs: &Vec<Vec<Option<Rat>>>| -> ResolvedSpec {
        ResolvedSpec {
            toral_basis: r.toral_basis.clone(),
            root_spaces: r.root_spaces.clone(),
            mixed: r
                .mixed
                .iter()
                .enumerate()
                .map(|(l, line)| {
                    line.iter()
                        .enumerate()
                        .map(|(m, (idx, _))| (*idx, coeffs[l][m].clone()))
                        .collect()
                })
                .collect(),
        }
    };

    let candidate = assemble(&coeffs);
    if !check_closure(alg, &candidate).closed {
        return Ok(Vec::new());
    }
    // Confirm the free coordinates really are free: a second value must also
    // close. A failure here means the coordinate was constrained after all;
    // report it as pinned-at-1 rather than free.
    let mut confirmed_free = Vec::new();
    for &(l, m) in &free {
        let mut alt = coeffs.clone();
        alt[l][m] = Some(rat_int(2));
        if check_closure(alg, &assemble(&alt)).closed {
            confirmed_free.push((l, m));
        }
    }

    Ok(vec![CoeffSolution {
        coeffs: coeffs
            .into_iter()
            .map(|line| line.into_iter().map(Option::unwrap).collect())
            .collect(),
        free: confirmed_free,
        pinned,
    }])
}

/// Identified reductive type: simple components plus central toral dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeId {
    /// Component labels like "G2", "B3", sorted descending by (rank, label).
    pub components: Vec<String>,
    pub center_dim: usize,
    pub dim: usize,
}

impl std::fmt::Display for TypeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.components.is_empty() {
            write!(f, "torus")?;
        } else {
            write!(f, "{}", self.components.join(" x "))?;
        }
        if self.center_dim > 0 {
            write!(f, " + center {}", self.center_dim)?;
        }
        write!(f, " (dim {})", self.dim)
    }
}

fn cartan_matrices_equal_up_to_perm(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = a.len();
    if b.len() != k {
        return false;
    }
    // Backtracking assignment of rows of a to rows of b.
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], img: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let pos = img.len();
        if pos == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] {
                continue;
            }
            if a[pos][pos] != b[cand][cand] {
                continue;
            }
            let ok = (0..pos).all(|prev| {
                a[pos][prev] == b[cand][img[prev]] && a[prev][pos] == b[img[prev]][cand]
            });
            if !ok {
                continue;
            }
            img.push(cand);
            used[cand] = true;
            if go(a, b, img, used) {
                return true;
            }
            img.pop();
            used[cand] = false;
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; k])
}

fn candidate_types(rank: usize) -> Vec<RootSystemType> {
    let mut out = vec![RootSystemType::A(rank)];
    if rank >= 2 {
        out.push(RootSystemType::B(rank));
    }
    if rank >= 3 {
        out.push(RootSystemType::C(rank));
    }
    if rank >= 4 {
        out.push(RootSystemType::D(rank));
    }
    if rank == 4 {
        out.push(RootSystemType::F4);
    }
    if rank == 2 {
        out.push(RootSystemType::G2);
    }
    out
}

/// Identify the reductive type of a closed subalgebra from its restricted
/// weights. Errors (with a datum) when the structure is visibly not of the
/// expected multiplicity-one reductive shape.
pub fn identify_type(alg: &ChevalleyAlgebra, r: &ResolvedSpec) -> Result<TypeId, String> {
    let rs = &alg.rs;
    let toral_dim = span_rank(&r.toral_basis, rs.ambient);
    let dim = r.dim();

    // Restricted weights as orthogonal projections onto the toral span.
    let mut weights: Vec<QVector> = Vec::new();
    for &i in &r.root_spaces {
        weights.push(project_onto_span(rs.root(i), &r.toral_basis));
    }
    for line in &r.mixed {
        weights.push(project_onto_span(rs.root(line[0].0), &r.toral_basis));
    }
    if weights.iter().any(|w| vec_is_zero(w)) {
        return Err("zero restricted weight outside the toral part".into());
    }
    for i in 0..weights.len() {
        for j in (i + 1)..weights.len() {
            if weights[i] == weights[j] {
                return Err(format!(
                    "restricted weight [{}] has multiplicity > 1",
                    super::fmt_vec(&weights[i])
                ));
            }
        }
    }
    for w in &weights {
        if !weights.contains(&vec_neg(w)) {
            return Err(format!(
                "restricted weight [{}] has no negative",
                super::fmt_vec(w)
            ));
        }
    }

    let center_dim = toral_dim - span_rank(&weights, rs.ambient);

    if weights.is_empty() {
        return Ok(TypeId {
            components: Vec::new(),
            center_dim,
            dim,
        });
    }

    // Positive system by lex sign; simples are the indecomposable positives.
    let positives: Vec<QVector> = weights
        .iter()
        .filter(|w| {
            w.iter()
                .find(|c| !c.is_zero())
                .map(|c| c > &Rat::zero())
                .unwrap_or(false)
        })
        .cloned()
        .collect();
    let is_weight = |v: &QVector| positives.contains(v);
    let simples: Vec<QVector> = positives
        .iter()
        .filter(|w| {
            !positives.iter().any(|u| {
                if u == *w {
                    return false;
                }
                let v = crate::qlinalg::vec_sub(w, u);
                is_weight(&v)
            })
        })
        .cloned()
        .collect();

    // Cartan matrix of the simples.
    let k = simples.len();
    let mut cartan = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let num = rat_int(2) * dot(&simples[i], &simples[j]);
            let den = dot(&simples[j], &simples[j]);
            let c = num / den;
            if !c.is_integer() {
                return Err("non-integral Cartan pairing between extracted simples".into());
            }
            cartan[i][j] = i64::try_from(c.to_integer()).map_err(|_| "Cartan entry overflow")?;
        }
    }

    // Split into connected components.
    let mut comp = vec![usize::MAX; k];
    let mut ncomp = 0;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(v) = stack.pop() {
            for u in 0..k {
                if comp[u] == usize::MAX && cartan[v][u] != 0 {
                    comp[u] = ncomp;
                    stack.push(u);
                }
            }
        }
        ncomp += 1;
    }

    let mut labels = Vec::new();
    let mut expected_roots = 0usize;
    for c in 0..ncomp {
        let idxs: Vec<usize> = (0..k).filter(|&i| comp[i] == c).collect();
        let sub: Vec<Vec<i64>> = idxs
            .iter()
            .map(|&i| idxs.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let mut found = None;
        for cand in candidate_types(idxs.len()) {
            let cand_rs = RootSystem::new(cand);
            let cm: Vec<Vec<i64>> = (0..cand_rs.rank())
                .map(|i| (0..cand_rs.rank()).map(|j| cand_rs.cartan_entry(i, j)).collect())
                .collect();
            if cartan_matrices_equal_up_to_perm(&sub, &cm) {
                found = Some((cand, cand_rs.num_roots()));
                break;
            }
        }
        let (t, nroots) = found.ok_or("component matches no known Dynkin type")?;
        expected_roots += nroots;
        labels.push(t.to_string());
    }
    if expected_roots != weights.len() {
        return Err(format!(
            "weight count {} does not match identified type ({} roots)",
            weights.len(),
            expected_roots
        ));
    }
    let label_rank = |s: &String| s[1..].parse::<usize>().unwrap_or(0);
    labels.sort_by(|a, b| label_rank(b).cmp(&label_rank(a)).then(a.cmp(b)));
    Ok(TypeId {
        components: labels,
        center_dim,
        dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::spec::{resolve, MixedTerm, RatS, SubalgebraSpec, ToralSpec};
    use crate::chevalley::spec::to_rats;
    use crate::qlinalg::rat_int;
    use crate::roots::RootSystemType as T;

    fn qv(v: &[i64]) -> QVector {
        v.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn b2_cartan_plus_two_positive_spaces_is_closed() {
        // t + g_{α2} + g_{α1+2α2}: the two roots sum outside the root system,
        // so closure holds with the full Cartan.
        let alg = ChevalleyAlgebra::new(T::B(2));
        let spec = SubalgebraSpec {
            toral: ToralSpec::full(),
            root_spaces: vec![to_rats(&qv(&[0, 1])), to_rats(&qv(&[1, 1]))],
            mixed: vec![],
        };
        let r = resolve(&alg.rs, &spec).unwrap();
        let report = check_closure(&alg, &r);
        assert!(report.closed, "witness: {:?}", report.witness);
        let rank = subalgebra_rank(&alg, &r);
        assert_eq!(rank.rank, 2);
        assert!(rank.zero_weight_root_spaces.is_empty());
    }

    #[test]
    fn a2_mixed_line_with_highest_root_space_is_not_closed() {
        // ker(α1+α2) + C(Y_{-α2} + Y_{α1}) + g_{α1+α2} fails: bracketing the
        // line with e_theta lands on a bare e_{α1} outside the span.
        let alg = ChevalleyAlgebra::new(T::A(2));
        let theta = qv(&[1, 0, -1]);
        let sum_functional = qv(&[1, 0, -1]); // α1+α2 in ambient coords
        let spec = SubalgebraSpec {
            toral: ToralSpec::kernel(vec![sum_functional]),
            root_spaces: vec![to_rats(&theta)],
            mixed: vec![vec![
                MixedTerm {
                    root: to_rats(&qv(&[0, -1, 1])),
                    coeff: Some(RatS(rat_int(1))),
                },
                MixedTerm {
                    root: to_rats(&qv(&[1, -1, 0])),
                    coeff: Some(RatS(rat_int(1))),
                },
            ]],
        };
        let r = resolve(&alg.rs, &spec).unwrap();
        let report = check_closure(&alg, &r);
        assert!(!report.closed);
        let (_, _, b) = report.witness.unwrap();
        assert!(b.contains("e["), "witness bracket should be a root vector: {b}");
        // And no coefficient assignment rescues it.
        let unsolved = SubalgebraSpec {
            mixed: vec![vec![
                MixedTerm {
                    root: to_rats(&qv(&[0, -1, 1])),
                    coeff: None,
                },
                MixedTerm {
                    root: to_rats(&qv(&[1, -1, 0])),
                    coeff: None,
                },
            ]],
            ..spec
        };
        let r2 = resolve(&alg.rs, &unsolved).unwrap();
        assert_eq!(solve_mixed_coefficients(&alg, &r2).unwrap(), Vec::new());
    }

    #[test]
    fn a2_nilpotent_pair_stabilizer_solves_with_free_coefficient() {
        // ker(α1−α2) + C(Y_{α1} + c Y_{α2}) + g_theta closes for every
        // nonzero c: the solver reports the second coefficient as free.
        let alg = ChevalleyAlgebra::new(T::A(2));
        let spec = SubalgebraSpec {
            toral: ToralSpec::kernel(vec![qv(&[1, -2, 1])]),
            root_spaces: vec![to_rats(&qv(&[1, 0, -1]))],
            mixed: vec![vec![
                MixedTerm {
                    root: to_rats(&qv(&[1, -1, 0])),
                    coeff: None,
                },
                MixedTerm {
                    root: to_rats(&qv(&[0, 1, -1])),
                    coeff: None,
                },
            ]],
        };
        let r = resolve(&alg.rs, &spec).unwrap();
        let sols = solve_mixed_coefficients(&alg, &r).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].coeffs[0][0], rat_int(1));
        assert_eq!(sols[0].free, vec![(0, 1)]);
        // Verify rank: toral dim 1, no zero weights.
        let solved = ResolvedSpec {
            mixed: vec![r.mixed[0]
                .iter()
                .enumerate()
                .map(|(m, (i, _))| (*i, Some(sols[0].coeffs[0][m].clone())))
                .collect()],
            ..r
        };
        assert_eq!(subalgebra_rank(&alg, &solved).rank, 1);
        assert!(check_closure(&alg, &solved).closed);
    }

    #[test]
    fn regular_torus_detects_vanishing_roots() {
        let alg = ChevalleyAlgebra::new(T::B(2));
        // ker(ε2): the roots ±ε1 pair to zero with... ε1 pairs by (ε1, h);
        // h spans ker(ε2) = {(x, 0)}: the vanishing roots are ±ε2.
        let r = ResolvedSpec {
            toral_basis: vec![qv(&[1, 0])],
            root_spaces: vec![],
            mixed: vec![],
        };
        let vanishing = check_regular_torus(&alg, &r);
        let coords: Vec<&QVector> = vanishing.iter().map(|&i| alg.rs.root(i)).collect();
        assert_eq!(coords.len(), 2);
        for v in coords {
            assert!(v[0].is_zero());
        }
    }

    #[test]
    fn identify_gl_subalgebra_inside_a3() {
        // Full Cartan + A2 on {ε2, ε3, ε4}: components [A2], center 1... the
        // toral part is the whole rank-3 Cartan, the A2 weights span rank 2.
        let alg = ChevalleyAlgebra::new(T::A(3));
        let rs = &alg.rs;
        let mut spaces = Vec::new();
        for (i, j) in [(1usize, 2usize), (1, 3), (2, 3)] {
            let mut v = crate::qlinalg::zero_vec(4);
            v[i] = rat_int(1);
            v[j] = rat_int(-1);
            let idx = rs.root_index(&v).unwrap();
            spaces.push(idx);
            spaces.push(rs.neg(idx));
        }
        let r = ResolvedSpec {
            toral_basis: crate::chevalley::spec::cartan_basis(rs),
            root_spaces: spaces,
            mixed: vec![],
        };
        let t = identify_type(&alg, &r).unwrap();
        assert_eq!(t.components, vec!["A2".to_string()]);
        assert_eq!(t.center_dim, 1);
        assert_eq!(t.dim, 9);
    }

    #[test]
    fn identify_rejects_non_reductive_shape() {
        let alg = ChevalleyAlgebra::new(T::B(2));
        let rs = &alg.rs;
        let e2 = rs.root_index(&qv(&[0, 1])).unwrap();
        let r = ResolvedSpec {
            toral_basis: crate::chevalley::spec::cartan_basis(rs),
            root_spaces: vec![e2],
            mixed: vec![],
        };
        assert!(identify_type(&alg, &r).is_err());
    }
}
