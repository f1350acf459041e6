//! The Grassmannian G(2,5) under its natural 5-torus action.

use gitfan_core::cones::Fan;
use gitfan_core::exact::int_vector;
use gitfan_core::face::Face;
use gitfan_core::gitfan::{compute_gitfan, covers_support, enumerate_afaces, GitFanOptions, GitProblem};
use gitfan_core::groebner::Ideal;
use gitfan_core::poly::{parse_polynomial, Ring};
use gitfan_core::symmetry::{PermGroup, Permutation, DEFAULT_MAX_ORDER};

fn pairs() -> Vec<(usize, usize)> {
    (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()
}

fn problem(with_group: bool) -> GitProblem {
    let names: Vec<String> = pairs().iter().map(|(i, j)| format!("p{}{}", i + 1, j + 1)).collect();
    let ring = Ring::new(names).unwrap();
    let relations = [
        "p12*p34 - p13*p24 + p14*p23",
        "p12*p35 - p13*p25 + p15*p23",
        "p12*p45 - p14*p25 + p15*p24",
        "p13*p45 - p14*p35 + p15*p34",
        "p23*p45 - p24*p35 + p25*p34",
    ];
    let gens = relations.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
    let ideal = Ideal::new(ring, gens).unwrap();
    let mut rows = vec![vec![0i64; 10]; 5];
    for (c, &(i, j)) in pairs().iter().enumerate() {
        rows[i][c] = 1;
        rows[j][c] = 1;
    }
    let group = with_group.then(|| {
        let gens = ["(2 5)(3 6)(4 7)", "(1 5 8 10 4)(2 6 9 3 7)"]
            .iter()
            .map(|s| Permutation::parse_cycles(s, 10).unwrap())
            .collect();
        PermGroup::generate(10, gens, DEFAULT_MAX_ORDER).unwrap()
    });
    GitProblem::from_rows(ideal, rows.iter().map(|r| int_vector(r)).collect(), group).unwrap()
}

#[test]
fn afaces_without_symmetry() {
    let p = problem(false);
    let found = enumerate_afaces(p.ideal(), None, 8);
    assert_eq!(found.tests, 1024);
    assert_eq!(found.faces.len(), 172);
    assert!(found.faces.contains(&Face::full(10)));
}

#[test]
fn afaces_modulo_s5() {
    let p = problem(true);
    let found = enumerate_afaces(p.ideal(), Some(p.symmetry().unwrap().group()), 8);
    assert_eq!(found.tests, 34);
    assert_eq!(found.orbits.as_ref().unwrap().len(), 14);
    assert_eq!(found.faces.len(), 172);
}

#[test]
fn gitfan_modulo_s5() {
    let p = problem(true);
    let opts = GitFanOptions { threads: 8, ..GitFanOptions::default() };
    let result = compute_gitfan(&p, &opts).unwrap();
    assert_eq!(result.stats.cones, 76);
    assert_eq!(result.orbits.as_ref().unwrap().len(), 6);
    assert!(covers_support(result.maximal_cones(), &result.gamma));
    let fan: &Fan = &result.fan;
    assert!(fan.facets_properly_shared(&result.gamma));
}

#[test]
fn gitfan_without_symmetry_matches() {
    let opts = GitFanOptions { threads: 8, ..GitFanOptions::default() };
    let plain = compute_gitfan(&problem(false), &opts).unwrap();
    let reduced = compute_gitfan(&problem(true), &opts).unwrap();
    assert_eq!(plain.maximal_cones(), reduced.maximal_cones());
    assert_eq!(plain.adjacency, reduced.adjacency);
}
