use two_orbit_core::classify::type2_candidate_triples;
use two_orbit_core::roots::{RootSystem, RootSystemType};

#[test]
fn probe() {
    for rst in [
        RootSystemType::B(3),
        RootSystemType::D(4),
        RootSystemType::F4,
    ] {
        let rs = RootSystem::new(rst);
        println!("== {rst:?}");
        for c in type2_candidate_triples(&rs) {
            if c.survives() {
                println!(
                    "  alpha_pos={} beta={:?} lambda={:?} deltas={:?} eqs={:?}",
                    c.alpha_pos,
                    rs.root(c.beta),
                    c.lambda.as_ref().unwrap(),
                    c.deltas,
                    c.equalities
                );
            }
        }
    }
}
