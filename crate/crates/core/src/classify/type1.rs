//! Enumeration of stabilizer root sets over a full Cartan subalgebra.
//!
//! For each full-support positive root beta, the planes through beta
//! partition the remaining roots, and the calibrated constraint menus of
//! `reformul` say exactly how a candidate set Psi may meet each plane. The
//! search walks the product of the menus, closing under root addition as it
//! goes and discarding every branch whose closure either reaches +-beta or
//! overfills an already-decided plane (both conditions persist under growth,
//! so pruning is sound). A surviving selection is then completed downward:
//! the optional negatives from A1xA1 planes are added greedily as a whole
//! and, when that overshoots, by a memoized search emitting the maximal valid
//! extensions. Parabolically sandwiched sets are dropped, and the survivors
//! are merged across betas up to Weyl conjugacy.
//!
//! G2 as a base is the one case with a G2-type plane, where no menu applies;
//! its four known patterns are instead verified directly (closure, beta
//! avoidance, sandwich) under each admissible beta.

use std::collections::{BTreeMap, HashSet};

use crate::roots::{PlaneKind, RootSystem, RootSystemType};
use crate::weyl::{canonicalize_root_set, RootSet};

use super::reformul::{reformul_constraint, Reading};

/// A root set Psi found by the search; the subalgebra it stands for is the
/// full Cartan plus the root spaces over Psi.
#[derive(Debug, Clone)]
pub struct Type1Pair {
    /// Full-support positive roots whose sweep produced the family, in sweep
    /// order. Conjugate finds under later betas are merged into one entry.
    pub betas: Vec<usize>,
    /// Representative root set, from the first beta that produced it.
    pub psi: RootSet,
    /// Lex-least Weyl conjugate of `psi`, the family's identity.
    pub canonical: RootSet,
}

/// Root sets are bitmasks; every supported system has at most 128 roots.
type Mask = u128;

struct SumTable {
    n: usize,
    /// sums[i * n + j] = index of root_i + root_j, or usize::MAX.
    sums: Vec<usize>,
}

impl SumTable {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.num_roots();
        assert!(n <= 128, "root systems beyond 128 roots are not supported");
        let mut sums = vec![usize::MAX; n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = rs.sum_root(i, j) {
                    sums[i * n + j] = k;
                }
            }
        }
        SumTable { n, sums }
    }

    /// Close `set` under root addition, starting from the bits in `fresh`
    /// (which must be a subset of `set` covering everything not yet known to
    /// be closed against the rest).
    fn close(&self, mut set: Mask, fresh: Mask) -> Mask {
        let mut work: Vec<usize> = bits(fresh).collect();
        while let Some(i) = work.pop() {
            for j in bits(set) {
                let k = self.sums[i * self.n + j];
                if k != usize::MAX && set & (1 << k) == 0 {
                    set |= 1 << k;
                    work.push(k);
                }
            }
        }
        set
    }
}

fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

fn to_mask(set: &[usize]) -> Mask {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

struct Menu {
    /// Plane roots minus {beta, -beta}.
    members: Mask,
    /// Exact footprints allowed inside `members`.
    alts: Vec<Mask>,
}

struct Search<'a> {
    tab: &'a SumTable,
    forbidden: Mask,
    menus: Vec<Menu>,
    optional: Vec<usize>,
    budget: usize,
    out: Vec<Mask>,
}

impl Search<'_> {
    /// Validity of a closed set against the first `decided` menus.
    fn valid(&self, set: Mask, decided: usize, choice: &[usize]) -> bool {
        if set & self.forbidden != 0 {
            return false;
        }
        self.menus[..decided]
            .iter()
            .zip(choice)
            .all(|(m, &c)| set & m.members == m.alts[c])
    }

    fn select(&mut self, closed: Mask, depth: usize, choice: &mut Vec<usize>) {
        if depth == self.menus.len() {
            self.complete(closed, choice);
            return;
        }
        for c in 0..self.menus[depth].alts.len() {
            let alt = self.menus[depth].alts[c];
            let next = self.tab.close(closed | alt, alt & !closed);
            choice.push(c);
            if self.valid(next, depth + 1, choice) {
                self.select(next, depth + 1, choice);
            }
            choice.pop();
        }
    }

    /// Add optional negatives maximally on top of a fully decided selection.
    fn complete(&mut self, closed: Mask, choice: &[usize]) {
        let rest: Mask = to_mask(&self.optional) & !closed;
        let all = self.tab.close(closed | rest, rest);
        if self.valid(all, self.menus.len(), choice) {
            self.out.push(all);
            return;
        }
        let mut seen = HashSet::new();
        self.extend_max(closed, choice, &mut seen);
    }

    fn extend_max(&mut self, closed: Mask, choice: &[usize], seen: &mut HashSet<Mask>) {
        if !seen.insert(closed) {
            return;
        }
        assert!(self.budget > 0, "type1 completion search exceeded its budget");
        self.budget -= 1;
        let mut extended = false;
        for o in 0..self.optional.len() {
            let bit = 1 << self.optional[o];
            if closed & bit != 0 {
                continue;
            }
            let next = self.tab.close(closed | bit, bit);
            if self.valid(next, self.menus.len(), choice) {
                extended = true;
                self.extend_max(next, choice, seen);
            }
        }
        if !extended {
            self.out.push(closed);
        }
    }
}

fn candidates_under(rs: &RootSystem, tab: &SumTable, beta: usize) -> Vec<Mask> {
    let nbeta = rs.neg(beta);
    let mut required: Mask = 0;
    let mut optional = Vec::new();
    let mut menus = Vec::new();
    for plane in rs.planes_through_root(beta) {
        let members: Vec<usize> = plane
            .roots
            .iter()
            .copied()
            .filter(|&r| r != beta && r != nbeta)
            .collect();
        if plane.kind == PlaneKind::A1xA1 {
            let pos = *members.iter().find(|&&r| rs.is_positive(r)).unwrap();
            required |= 1 << pos;
            optional.push(rs.neg(pos));
        } else {
            let pc = reformul_constraint(rs, beta, members[0], Reading::Calibrated)
                .expect("no G2 planes outside a G2 base");
            menus.push(Menu {
                members: to_mask(&members),
                alts: pc
                    .alternatives
                    .iter()
                    .map(|a| {
                        to_mask(
                            a.must_equal_within_plane
                                .as_ref()
                                .expect("calibrated non-A1xA1 alternatives are exact"),
                        )
                    })
                    .collect(),
            });
        }
    }
    let mut search = Search {
        tab,
        forbidden: (1 << beta) | (1 << nbeta),
        menus,
        optional,
        budget: 200_000,
        out: Vec::new(),
    };
    let start = tab.close(required, required);
    let mut choice = Vec::new();
    if search.valid(start, 0, &choice) {
        search.select(start, 0, &mut choice);
    }
    search.out
}

fn root_by_coords(rs: &RootSystem, coords: &[i64]) -> usize {
    (0..rs.num_roots())
        .find(|&i| rs.simple_coords(i) == coords)
        .expect("root with the given simple coordinates")
}

/// The four G2 patterns, verified rather than derived: the short-root web,
/// the mixed web, its extension by the opposite long simple, and the long
/// subsystem.
fn g2_candidates(rs: &RootSystem, tab: &SumTable, beta: usize) -> Vec<Mask> {
    let pats: [&[[i64; 2]]; 4] = [
        &[[1, 0], [2, 1], [3, 1], [3, 2]],
        &[[0, 1], [2, 1], [3, 1], [3, 2]],
        &[[0, 1], [0, -1], [2, 1], [3, 1], [3, 2]],
        &[[0, 1], [0, -1], [3, 1], [-3, -1], [3, 2], [-3, -2]],
    ];
    let forbidden: Mask = (1 << beta) | (1 << rs.neg(beta));
    pats.iter()
        .map(|p| to_mask(&p.iter().map(|c| root_by_coords(rs, c)).collect::<Vec<_>>()))
        .filter(|&m| {
            assert_eq!(tab.close(m, m), m, "G2 patterns are closed");
            m & forbidden == 0
        })
        .collect()
}

/// All stabilizer root-set families over a full Cartan, merged across betas
/// up to Weyl conjugacy and ordered by canonical form.
pub fn enumerate_type1(rs: &RootSystem) -> Vec<Type1Pair> {
    let tab = SumTable::new(rs);
    let mut families: BTreeMap<RootSet, Type1Pair> = BTreeMap::new();
    for beta in (0..rs.num_positive()).filter(|&b| rs.has_full_support(b)) {
        let masks = if rs.rst == RootSystemType::G2 {
            g2_candidates(rs, &tab, beta)
        } else {
            candidates_under(rs, &tab, beta)
        };
        for mask in masks {
            let psi: RootSet = bits(mask).collect();
            if rs.parabolic_sandwich_exists(&psi) {
                continue;
            }
            let (canonical, _) = canonicalize_root_set(rs, &psi);
            families
                .entry(canonical.clone())
                .and_modify(|p| {
                    if !p.betas.contains(&beta) {
                        p.betas.push(beta);
                    }
                })
                .or_insert(Type1Pair {
                    betas: vec![beta],
                    psi,
                    canonical,
                });
        }
    }
    families.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(rs: &RootSystem) -> Vec<RootSet> {
        enumerate_type1(rs).into_iter().map(|p| p.psi).collect()
    }

    fn coords_set(rs: &RootSystem, psi: &[usize]) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = psi.iter().map(|&i| rs.simple_coords(i).to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn a2_base_yields_one_rank_one_family() {
        let rs = RootSystem::new(RootSystemType::A(2));
        let found = sets(&rs);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 2);
        // A single opposite pair of roots: gl2 inside sl3.
        assert_eq!(found[0][1], rs.neg(found[0][0]));
    }

    #[test]
    fn an_bases_yield_exactly_gl() {
        for n in 3..=6 {
            let rs = RootSystem::new(RootSystemType::A(n));
            let found = sets(&rs);
            assert_eq!(found.len(), 1, "A{n} has one family");
            // gl_n: all roots among n of the n+1 coordinates.
            assert_eq!(found[0].len(), n * (n - 1));
        }
    }

    #[test]
    fn b2_base_realizes_the_three_shapes() {
        let rs = RootSystem::new(RootSystemType::B(2));
        let pairs = enumerate_type1(&rs);
        let mut shapes: Vec<Vec<Vec<i64>>> =
            pairs.iter().map(|p| coords_set(&rs, &p.psi)).collect();
        shapes.sort();
        let mut expected = vec![
            // so4: both signs of both longs
            vec![vec![-1, -2], vec![-1, 0], vec![1, 0], vec![1, 2]],
            // one-sided long, full pair on the other
            vec![vec![-1, 0], vec![1, 0], vec![1, 2]],
            // short plus long
            vec![vec![0, 1], vec![1, 2]],
        ];
        expected.sort();
        assert_eq!(shapes, expected);
        // The long-beta sweep contributes only the conjugate of the last
        // shape; the short beta realizes all three.
        let short_beta = pairs
            .iter()
            .filter(|p| p.betas.iter().any(|&b| rs.simple_coords(b) == [1, 1]))
            .count();
        assert_eq!(short_beta, 3);
        let long_beta: Vec<_> = pairs
            .iter()
            .filter(|p| p.betas.iter().any(|&b| rs.simple_coords(b) == [1, 2]))
            .collect();
        assert_eq!(long_beta.len(), 1);
        assert_eq!(long_beta[0].psi.len(), 2);
    }

    #[test]
    fn bn_bases_yield_three_families() {
        for n in 3..=5 {
            let rs = RootSystem::new(RootSystemType::B(n));
            let mut lens: Vec<usize> = sets(&rs).iter().map(|s| s.len()).collect();
            lens.sort_unstable();
            // so_{2n-2}-web (one-sided sums), mixed web, so_{2n}.
            let so2n = 2 * n * (n - 1);
            let row3 = n * (n - 1) + n * (n - 1) / 2;
            let row4 = (n - 1) * (n - 2) + (n - 1) + (n - 1) * (n - 2) / 2 + (n - 1);
            let mut expect = vec![so2n, row3, row4];
            expect.sort_unstable();
            assert_eq!(lens, expect, "B{n}");
        }
    }

    #[test]
    fn cn_bases_yield_three_families() {
        for n in 3..=5 {
            let rs = RootSystem::new(RootSystemType::C(n));
            let mut lens: Vec<usize> = sets(&rs).iter().map(|s| s.len()).collect();
            lens.sort_unstable();
            let block = 2 * (n - 1) * (n - 1); // C_{n-1} block, both signs
            let sp2xsp = block + 2;
            let row6 = block + 1;
            let row4 = (n - 1) * (n - 2) + (n - 1) * n / 2 + (n - 1);
            let mut expect = vec![sp2xsp, row6, row4];
            expect.sort_unstable();
            assert_eq!(lens, expect, "C{n}");
        }
    }

    #[test]
    fn dn_bases_yield_nothing() {
        for n in 4..=6 {
            let rs = RootSystem::new(RootSystemType::D(n));
            assert!(sets(&rs).is_empty(), "D{n} must produce no type-1 family");
        }
    }

    #[test]
    fn f4_base_yields_spin9_and_the_26_dimensional_web() {
        let rs = RootSystem::new(RootSystemType::F4);
        let found = enumerate_type1(&rs);
        let mut lens: Vec<usize> = found.iter().map(|p| p.psi.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![22, 32]);
        let spin9 = found.iter().find(|p| p.psi.len() == 32).unwrap();
        // All integer roots: the long roots plus the short integer vectors.
        for &r in &spin9.psi {
            let half = rs.root(r).iter().any(|c| !c.is_integer());
            assert!(!half, "spin9 contains only integer-vector roots");
        }
        let web = found.iter().find(|p| p.psi.len() == 22).unwrap();
        // The web is one-sided except for the two full pairs +-a2, +-a4.
        let neg_count = web.psi.iter().filter(|&&r| !rs.is_positive(r)).count();
        assert_eq!(neg_count, 2);
    }

    #[test]
    fn g2_base_yields_four_families() {
        let rs = RootSystem::new(RootSystemType::G2);
        let found = sets(&rs);
        let mut lens: Vec<usize> = found.iter().map(|s| s.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![4, 4, 5, 6]);
    }

    #[test]
    fn a1xa1_base_yields_nothing() {
        let rs = RootSystem::new(RootSystemType::A1xA1);
        assert!(sets(&rs).is_empty());
    }
}
