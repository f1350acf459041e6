mod support;

use gitfan_core::cones::Cone;
use gitfan_core::exact::IntVector;
use gitfan_core::gitfan::{compute_gitfan, GitFanOptions, GitProblem};
use support::oracle::{brute_force_chambers, forms_fan_over, orbit_cones_by_definition, random_instance};

#[test]
fn traversal_matches_brute_force() {
    let mut compared = 0;
    for seed in 0..60 {
        let inst = random_instance(seed);
        let p = GitProblem::from_rows(inst.ideal.clone(), inst.rows.clone(), None).unwrap();
        let k = p.grading().k();
        let cols: Vec<IntVector> = p.grading().columns();
        let gamma = Cone::from_rays(&cols, k).unwrap();
        let omega = orbit_cones_by_definition(p.ideal(), p.grading());
        let expected = brute_force_chambers(&omega, k);
        if !forms_fan_over(&expected, &gamma) {
            println!("seed {seed}: GIT-cones do not form a fan over cone(Q), skipped");
            continue;
        }
        let result = compute_gitfan(&p, &GitFanOptions { threads: 2, ..GitFanOptions::default() })
            .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(result.maximal_cones(), expected.as_slice(), "seed {seed}");
        compared += 1;
        println!("seed {seed}: k={k} r={} chambers={}", p.ideal().nvars(), expected.len());
    }
    assert!(compared >= 20, "only {compared} instances compared");
}
