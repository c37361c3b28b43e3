//! Completion of a seeded corank-one stabilizer: find the inclusion-maximal
//! bracket-closed subalgebras L with a prescribed toral part t' and
//! prescribed seed generators.
//!
//! Every candidate is t'-homogeneous, so it decomposes along the classes of
//! roots with equal restriction to t'. Per class the possible pieces (atoms)
//! are: the full root space of a member, the whole class sum, or a line
//! mixing all members with nonzero coefficients. The search walks down from
//! "everything" resolving closure violations by shrinking one participating
//! atom, and solves the mixed-line coefficients exactly from the bracket
//! equations along the way.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;

use crate::qlinalg::{dot, rat_int, QMatrix, QVector, Rat};

use super::analysis::check_closure;
use super::{ChevalleyAlgebra, ResolvedSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    Full(usize),
    Line(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct St {
    fulls: BTreeSet<usize>,
    lines: BTreeSet<usize>,
}

/// One maximal completion. Line coefficients are normalized so each line's
/// first member has coefficient 1; `pinned` lists the coefficients forced by
/// closure, `free` the ones left undetermined (reported at value 1; they are
/// parameters of the solution family, e.g. torus rescalings).
#[derive(Debug, Clone)]
pub struct Completion {
    pub resolved: ResolvedSpec,
    /// (line position in `resolved.mixed`, member) forced by closure.
    pub pinned: Vec<(usize, usize, Rat)>,
    pub free: Vec<(usize, usize)>,
    /// Weights are multiplicity-free, negation-closed, and opposite-weight
    /// generators pair nontrivially. The reductive rows of the tables satisfy
    /// this; parasitic maximal completions generally do not.
    pub reductive_shape: bool,
}

type Unk = (usize, usize); // (class id, member index >= 1)

#[derive(Debug, Clone)]
struct Equation {
    /// Sum over monomials: coefficient times a product of distinct unknowns.
    monos: Vec<(Rat, Vec<Unk>)>,
    src: (Atom, Atom),
}

struct Ctx<'a> {
    alg: &'a ChevalleyAlgebra,
    toral: Vec<QVector>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// Functionals cutting out the span of the toral part: the bracket's
    /// Cartan component must vanish against all of them.
    fbasis: Vec<QVector>,
    required_fulls: BTreeSet<usize>,
    required_lines: BTreeSet<usize>,
    cap: usize,
}

fn combine(monos: Vec<(Rat, Vec<Unk>)>) -> Vec<(Rat, Vec<Unk>)> {
    let mut acc: BTreeMap<Vec<Unk>, Rat> = BTreeMap::new();
    for (c, mut us) in monos {
        us.sort_unstable();
        *acc.entry(us).or_insert_with(Rat::zero) += c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(us, c)| (c, us))
        .collect()
}

/// The members of an atom with their coefficient unknowns (None = constant 1).
fn atom_members(ctx: &Ctx, a: Atom) -> Vec<(usize, Option<Unk>)> {
    match a {
        Atom::Full(r) => vec![(r, None)],
        Atom::Line(c) => ctx.classes[c]
            .iter()
            .enumerate()
            .map(|(m, &r)| (r, if m == 0 { None } else { Some((c, m)) }))
            .collect(),
    }
}

fn state_atoms(st: &St) -> Vec<Atom> {
    st.fulls
        .iter()
        .map(|&r| Atom::Full(r))
        .chain(st.lines.iter().map(|&c| Atom::Line(c)))
        .collect()
}

/// All closure conditions of `st` as polynomial equations in the line
/// coefficients. Constant conditions that fail appear as equations with no
/// satisfiable monomial set and are caught by the definiteness test.
fn build_equations(ctx: &Ctx, st: &St) -> Vec<Equation> {
    let rs = &ctx.alg.rs;
    let atoms = state_atoms(st);
    let mut eqs = Vec::new();
    for ai in 0..atoms.len() {
        for bi in (ai + 1)..atoms.len() {
            let src = (atoms[ai], atoms[bi]);
            let mut toral: Vec<Vec<(Rat, Vec<Unk>)>> = vec![Vec::new(); ctx.fbasis.len()];
            let mut coords: BTreeMap<usize, Vec<(Rat, Vec<Unk>)>> = BTreeMap::new();
            for (rho, fa) in atom_members(ctx, atoms[ai]) {
                for (sigma, fb) in atom_members(ctx, atoms[bi]) {
                    let factors: Vec<Unk> = [fa, fb].into_iter().flatten().collect();
                    if sigma == rs.neg(rho) {
                        for (fi, f) in ctx.fbasis.iter().enumerate() {
                            let k = dot(rs.coroot(rho), f);
                            if !k.is_zero() {
                                toral[fi].push((k, factors.clone()));
                            }
                        }
                    } else if let Some(tau) = rs.sum_root(rho, sigma) {
                        let n = ctx.alg.n_const(rho, sigma);
                        if n != 0 {
                            coords
                                .entry(tau)
                                .or_default()
                                .push((rat_int(n), factors.clone()));
                        }
                    }
                }
            }
            for monos in toral {
                let monos = combine(monos);
                if !monos.is_empty() {
                    eqs.push(Equation { monos, src });
                }
            }
            // Group coordinate conditions by class and compare with the
            // class's atom in the state.
            let mut by_class: BTreeMap<usize, BTreeMap<usize, Vec<(Rat, Vec<Unk>)>>> =
                BTreeMap::new();
            for (tau, monos) in coords {
                by_class
                    .entry(ctx.class_of[tau])
                    .or_default()
                    .insert(tau, monos);
            }
            for (c, per_root) in by_class {
                let members = &ctx.classes[c];
                if st.lines.contains(&c) {
                    // Proportionality to the line vector (1, x_{c,1}, ...):
                    // v_m * 1 == v_0 * x_{c,m} for every member m >= 1.
                    let v0 = per_root.get(&members[0]).cloned().unwrap_or_default();
                    for (m, root) in members.iter().enumerate().skip(1) {
                        let vm = per_root.get(root).cloned().unwrap_or_default();
                        let mut monos = vm;
                        for (cof, mut us) in v0.clone() {
                            us.push((c, m));
                            monos.push((-cof, us));
                        }
                        let monos = combine(monos);
                        if !monos.is_empty() {
                            eqs.push(Equation { monos, src });
                        }
                    }
                } else {
                    for (m, root) in members.iter().enumerate() {
                        let _ = m;
                        if !st.fulls.contains(root) {
                            if let Some(monos) = per_root.get(root) {
                                let monos = combine(monos.clone());
                                if !monos.is_empty() {
                                    eqs.push(Equation { monos, src });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    eqs
}

/// An equation no coefficient assignment can satisfy: a lone monomial (all
/// unknowns are nonzero by the line invariant) or a nonzero constant.
fn is_definite(eq: &Equation) -> bool {
    eq.monos.len() == 1
}

enum SolveOutcome {
    Solved {
        assignment: BTreeMap<Unk, Rat>,
        pinned: Vec<(Unk, Rat)>,
        free: Vec<Unk>,
    },
    Contradiction((Atom, Atom)),
}

fn substitute(eq: &Equation, assignment: &BTreeMap<Unk, Rat>) -> Vec<(Rat, Vec<Unk>)> {
    let monos = eq
        .monos
        .iter()
        .map(|(c, us)| {
            let mut c = c.clone();
            let rest: Vec<Unk> = us
                .iter()
                .filter(|u| {
                    if let Some(v) = assignment.get(*u) {
                        c *= v;
                        false
                    } else {
                        true
                    }
                })
                .copied()
                .collect();
            (c, rest)
        })
        .collect();
    combine(monos)
}

fn solve(ctx: &Ctx, st: &St, eqs: &[Equation]) -> SolveOutcome {
    let mut unknowns: BTreeSet<Unk> = BTreeSet::new();
    for &c in &st.lines {
        for m in 1..ctx.classes[c].len() {
            unknowns.insert((c, m));
        }
    }
    let mut assignment: BTreeMap<Unk, Rat> = BTreeMap::new();
    let mut pinned = Vec::new();
    let mut free = Vec::new();
    loop {
        let mut remaining: Vec<(Vec<(Rat, Vec<Unk>)>, (Atom, Atom))> = Vec::new();
        for eq in eqs {
            let monos = substitute(eq, &assignment);
            if monos.is_empty() {
                continue;
            }
            let has_unknowns = monos.iter().any(|(_, us)| !us.is_empty());
            if !has_unknowns || monos.len() == 1 {
                // Constant nonzero, or a single unkillable monomial.
                return SolveOutcome::Contradiction(eq.src);
            }
            remaining.push((monos, eq.src));
        }
        if remaining.is_empty() {
            break;
        }
        // Pin from an equation with a single distinct unknown: A*u + B = 0.
        let mut progressed = false;
        for (monos, src) in &remaining {
            let mut us: BTreeSet<Unk> = BTreeSet::new();
            for (_, m) in monos {
                us.extend(m.iter().copied());
            }
            if us.len() != 1 {
                continue;
            }
            let u = *us.iter().next().unwrap();
            let mut a = Rat::zero();
            let mut b = Rat::zero();
            for (c, m) in monos {
                if m.is_empty() {
                    b += c;
                } else {
                    a += c; // m == [u]: factors are distinct unknowns
                }
            }
            if a.is_zero() {
                return SolveOutcome::Contradiction(*src);
            }
            let val = -b / a;
            if val.is_zero() {
                return SolveOutcome::Contradiction(*src); // degenerate line
            }
            pinned.push((u, val.clone()));
            assignment.insert(u, val);
            progressed = true;
            break;
        }
        if !progressed {
            // Stuck: normalize the least constrained unknown. It is a
            // parameter of the solution family.
            let u = *remaining
                .iter()
                .flat_map(|(monos, _)| monos.iter().flat_map(|(_, m)| m.iter()))
                .min()
                .unwrap();
            free.push(u);
            assignment.insert(u, rat_int(1));
        }
    }
    for u in unknowns {
        if !assignment.contains_key(&u) {
            free.push(u);
            assignment.insert(u, rat_int(1));
        }
    }
    SolveOutcome::Solved {
        assignment,
        pinned,
        free,
    }
}

/// Downward moves destroying `victim` (losing none of the seed).
fn destroy_moves(ctx: &Ctx, st: &St, victim: Atom) -> Vec<St> {
    let mut out = Vec::new();
    match victim {
        Atom::Full(r) => {
            let c = ctx.class_of[r];
            if !ctx.required_fulls.contains(&r) && !ctx.required_lines.contains(&c) {
                let mut s = st.clone();
                s.fulls.remove(&r);
                out.push(s);
            }
            let members = &ctx.classes[c];
            if members.len() >= 2
                && members.iter().all(|m| st.fulls.contains(m))
                && members.iter().all(|m| !ctx.required_fulls.contains(m))
            {
                let mut s = st.clone();
                for m in members {
                    s.fulls.remove(m);
                }
                s.lines.insert(c);
                out.push(s);
            }
        }
        Atom::Line(c) => {
            if !ctx.required_lines.contains(&c) {
                for &m in &ctx.classes[c] {
                    let mut s = st.clone();
                    s.lines.remove(&c);
                    s.fulls.insert(m);
                    out.push(s);
                }
            }
        }
    }
    out
}

fn branch_children(ctx: &Ctx, st: &St, src: (Atom, Atom)) -> Vec<St> {
    let mut out = destroy_moves(ctx, st, src.0);
    out.extend(destroy_moves(ctx, st, src.1));
    out.sort();
    out.dedup();
    out
}

fn build_resolved(ctx: &Ctx, st: &St, assignment: &BTreeMap<Unk, Rat>) -> ResolvedSpec {
    let mixed = st
        .lines
        .iter()
        .map(|&c| {
            ctx.classes[c]
                .iter()
                .enumerate()
                .map(|(m, &r)| {
                    let v = if m == 0 {
                        rat_int(1)
                    } else {
                        assignment[&(c, m)].clone()
                    };
                    (r, Some(v))
                })
                .collect()
        })
        .collect();
    ResolvedSpec {
        toral_basis: ctx.toral.clone(),
        root_spaces: st.fulls.iter().copied().collect(),
        mixed,
    }
}

fn reductive_shape(ctx: &Ctx, resolved: &ResolvedSpec) -> bool {
    let alg = ctx.alg;
    let mut gens: Vec<(QVector, super::Element)> = Vec::new();
    let weight = |r: usize| -> QVector {
        ctx.toral.iter().map(|h| dot(alg.rs.root(r), h)).collect()
    };
    for &r in &resolved.root_spaces {
        gens.push((weight(r), alg.root_vector(r)));
    }
    for line in &resolved.mixed {
        let mut x = alg.zero();
        for (r, cf) in line {
            x = alg.add(&x, &alg.scale(cf.as_ref().unwrap(), &alg.root_vector(*r)));
        }
        gens.push((weight(line[0].0), x));
    }
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            if gens[i].0 == gens[j].0 {
                return false; // repeated weight
            }
        }
    }
    for i in 0..gens.len() {
        let negw = crate::qlinalg::vec_neg(&gens[i].0);
        match gens.iter().find(|(w, _)| *w == negw) {
            None => return false,
            Some((_, opp)) => {
                if alg.bracket(&gens[i].1, opp).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn search(
    ctx: &Ctx,
    st: St,
    visited: &mut HashSet<St>,
    nodes: &mut usize,
    results: &mut Vec<(St, Completion)>,
) -> Result<(), String> {
    if !visited.insert(st.clone()) {
        return Ok(());
    }
    *nodes += 1;
    if *nodes > ctx.cap {
        return Err(format!("completion search exceeded {} states", ctx.cap));
    }
    let eqs = build_equations(ctx, &st);
    let definite: Vec<&Equation> = eqs.iter().filter(|e| is_definite(e)).collect();
    if !definite.is_empty() {
        // Resolve the violation with the fewest children first; required
        // atoms admit no moves, so their violations are the most forced.
        let pick = definite
            .iter()
            .min_by_key(|e| branch_children(ctx, &st, e.src).len())
            .unwrap();
        for child in branch_children(ctx, &st, pick.src) {
            search(ctx, child, visited, nodes, results)?;
        }
        return Ok(());
    }
    match solve(ctx, &st, &eqs) {
        SolveOutcome::Contradiction(src) => {
            for child in branch_children(ctx, &st, src) {
                search(ctx, child, visited, nodes, results)?;
            }
            Ok(())
        }
        SolveOutcome::Solved {
            assignment,
            pinned,
            free,
        } => {
            let resolved = build_resolved(ctx, &st, &assignment);
            if !check_closure(ctx.alg, &resolved).closed {
                return Err(
                    "internal: coefficient equations missed a closure constraint".into(),
                );
            }
            let line_pos: BTreeMap<usize, usize> = st
                .lines
                .iter()
                .enumerate()
                .map(|(pos, &c)| (c, pos))
                .collect();
            let completion = Completion {
                reductive_shape: reductive_shape(ctx, &resolved),
                resolved,
                pinned: pinned
                    .into_iter()
                    .map(|((c, m), v)| (line_pos[&c], m, v))
                    .collect(),
                free: free.into_iter().map(|(c, m)| (line_pos[&c], m)).collect(),
            };
            results.push((st, completion));
            Ok(())
        }
    }
}

fn state_le(ctx: &Ctx, a: &St, b: &St) -> bool {
    a.fulls.iter().all(|r| b.fulls.contains(r))
        && a.lines.iter().all(|c| {
            b.lines.contains(c) || ctx.classes[*c].iter().all(|m| b.fulls.contains(m))
        })
}

/// Find every inclusion-maximal bracket-closed subalgebra with toral part
/// spanned by `toral_basis` that contains the given seed root spaces and seed
/// lines (each line given as the exact root set it mixes; the coefficients
/// are solved, not prescribed). `cap` bounds the number of search states.
pub fn complete_stabilizer(
    alg: &ChevalleyAlgebra,
    toral_basis: &[QVector],
    seed_root_spaces: &[usize],
    seed_lines: &[Vec<usize>],
    cap: usize,
) -> Result<Vec<Completion>, String> {
    let rs = &alg.rs;
    // Classes: roots with equal restriction to the toral part.
    let mut key_to_class: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0usize; rs.num_roots()];
    for i in 0..rs.num_roots() {
        let key: Vec<Rat> = toral_basis.iter().map(|h| dot(rs.root(i), h)).collect();
        let c = *key_to_class.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
        class_of[i] = c;
    }
    for members in &classes {
        for (x, &a) in members.iter().enumerate() {
            for &b in members.iter().skip(x + 1) {
                let d = crate::qlinalg::vec_sub(rs.root(a), rs.root(b));
                if rs.is_root(&d) {
                    return Err("unsupported: two roots of one restriction class \
                         differ by a root"
                        .into());
                }
            }
        }
    }

    let required_fulls: BTreeSet<usize> = seed_root_spaces.iter().copied().collect();
    let mut required_lines = BTreeSet::new();
    for line in seed_lines {
        if line.len() < 2 {
            return Err("seed line needs at least two roots".into());
        }
        let mut sorted = line.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let c = class_of[sorted[0]];
        if classes[c] != sorted {
            return Err(format!(
                "seed line {:?} is not a full restriction class",
                line
            ));
        }
        if !required_lines.insert(c) {
            return Err("two seed lines share a restriction class".into());
        }
        if sorted.iter().any(|r| required_fulls.contains(r)) {
            return Err("a seed root space lies inside a seed line's class".into());
        }
    }

    let fbasis = QMatrix::new(toral_basis.to_vec(), rs.ambient).kernel();
    let ctx = Ctx {
        alg,
        toral: toral_basis.to_vec(),
        classes,
        class_of,
        fbasis,
        required_fulls,
        required_lines,
        cap,
    };

    // Seeded classes are locked to their line from the start: the intended
    // subalgebra meets such a weight class in exactly that line, so the
    // two-dimensional class space (which would absorb the line and lift the
    // constraint it carries) is not a legal cover.
    let top = St {
        fulls: (0..rs.num_roots())
            .filter(|r| !ctx.required_lines.contains(&ctx.class_of[*r]))
            .collect(),
        lines: ctx.required_lines.clone(),
    };
    let mut visited = HashSet::new();
    let mut nodes = 0usize;
    let mut results: Vec<(St, Completion)> = Vec::new();
    search(&ctx, top, &mut visited, &mut nodes, &mut results)?;

    // Keep only the inclusion-maximal states.
    let mut keep = vec![true; results.len()];
    for i in 0..results.len() {
        for j in 0..results.len() {
            if i != j
                && keep[i]
                && state_le(&ctx, &results[i].0, &results[j].0)
                && results[i].0 != results[j].0
            {
                keep[i] = false;
            }
        }
    }
    let mut kept: Vec<(St, Completion)> = results
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(r, _)| r)
        .collect();
    kept.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(kept.into_iter().map(|(_, c)| c).collect())
}
