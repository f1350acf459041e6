use super::*;
use crate::exact::{int_vector, rat};
use crate::poly::{parse_polynomial, Ring};
use crate::symmetry::Permutation;

fn iv(v: &[i64]) -> IntVector {
    int_vector(v)
}

fn cone(rays: &[&[i64]]) -> Cone {
    let rays: Vec<IntVector> = rays.iter().map(|r| iv(r)).collect();
    Cone::from_rays(&rays, rays[0].len()).unwrap()
}

fn problem(names: &[&str], gens: &[&str], q: &[&[i64]]) -> Result<GitProblem, GitFanError> {
    let ring = Ring::new(names.iter().copied()).unwrap();
    let gens = gens.iter().map(|g| parse_polynomial(g, &ring).unwrap()).collect();
    let ideal = Ideal::new(ring, gens).unwrap();
    GitProblem::from_rows(ideal, q.iter().map(|r| iv(r)).collect(), None)
}

fn opts(threads: usize) -> GitFanOptions {
    GitFanOptions {
        threads,
        ..GitFanOptions::default()
    }
}

#[test]
fn scalar_action_on_the_plane() {
    let p = problem(&["x", "y"], &[], &[&[1, 1]]).unwrap();
    let afaces = enumerate_afaces(p.ideal(), None, 1);
    assert_eq!(afaces.faces.len(), 4);
    let omega = orbit_cones(p.grading(), &afaces.faces).unwrap();
    assert_eq!(omega.cones(), &[Cone::zero(1), cone(&[&[1]])]);
    assert_eq!(omega.provenance()[1].len(), 3);

    assert_eq!(gitcone(&omega, &[rat(1, 1)]).unwrap(), cone(&[&[1]]));
    assert_eq!(gitcone(&omega, &[rat(0, 1)]).unwrap(), Cone::zero(1));
    assert_eq!(gitcone(&omega, &[rat(-1, 1)]), Err(GitFanError::PointOutsideSupport));

    let (w, lambda) = initial_cone(&omega, 0, 10).unwrap();
    assert!(w[0] > rat(0, 1));
    assert_eq!(lambda, cone(&[&[1]]));
    assert!(interior_facets(&lambda, omega.gamma()).is_empty());

    let result = compute_gitfan(&p, &opts(1)).unwrap();
    assert_eq!(result.maximal_cones(), &[cone(&[&[1]])]);
    assert_eq!(result.fan.rays(), &[iv(&[1])]);
    assert_eq!(result.fan.maximal_cones(), &[vec![0]]);
    assert!(result.adjacency.is_empty());
}

fn two_chambers() -> OrbitConeSet {
    let quadrant = cone(&[&[1, 0], &[0, 1]]);
    OrbitConeSet::from_cones(
        vec![quadrant.clone(), cone(&[&[1, 0], &[1, 1]]), cone(&[&[1, 1], &[0, 1]])],
        quadrant,
    )
}

#[test]
fn two_chamber_traversal() {
    let omega = two_chambers();
    let (_, lambda0) = initial_cone(&omega, 3, 100).unwrap();
    for threads in [1, 2, 8] {
        let cones = traverse(&omega, lambda0.clone(), threads, 64).unwrap();
        assert_eq!(cones, vec![cone(&[&[0, 1], &[1, 1]]), cone(&[&[1, 0], &[1, 1]])]);
        assert!(covers_support(&cones, omega.gamma()));
        let fan = Fan::from_cones(cones, 2).unwrap();
        assert_eq!(fan.adjacency(), vec![(0, 1)]);
    }
}

#[test]
fn gitcone_of_relative_interior_point_is_the_minimal_cone() {
    let omega = two_chambers();
    let w = [rat(2, 1), rat(1, 1)];
    assert_eq!(gitcone(&omega, &w).unwrap(), cone(&[&[1, 0], &[1, 1]]));
    let diagonal = [rat(1, 1), rat(1, 1)];
    assert_eq!(gitcone(&omega, &diagonal).unwrap(), cone(&[&[1, 1]]));
}

#[test]
fn adjacent_point_crosses_into_the_neighbour() {
    let quadrants = vec![
        cone(&[&[1, 0], &[0, 1]]),
        cone(&[&[1, 0], &[0, -1]]),
        cone(&[&[-1, 0], &[0, 1]]),
        cone(&[&[-1, 0], &[0, -1]]),
    ];
    let omega = OrbitConeSet::from_cones(quadrants.clone(), Cone::full_space(2));
    let (w, neighbor) = adjacent_point(&omega, &quadrants[0], &cone(&[&[1, 0]]), 64).unwrap();
    assert!(w[1] < rat(0, 1));
    assert_eq!(neighbor, quadrants[1]);
    assert_eq!(
        adjacent_point(&omega, &quadrants[0], &cone(&[&[1, 1]]), 64),
        Err(GitFanError::NotAFacet)
    );
}

#[test]
fn thin_neighbour_needs_halving() {
    // between (1,0) and (1,1) sits a sliver cone{(8,1),(1,0)}; overshooting
    // from the upper chamber at ε = 1 lands past it
    let gamma = cone(&[&[1, 0], &[0, 1]]);
    let omega = OrbitConeSet::from_cones(
        vec![
            gamma.clone(),
            cone(&[&[1, 0], &[8, 1]]),
            cone(&[&[8, 1], &[0, 1]]),
            cone(&[&[1, 1], &[0, 1]]),
            cone(&[&[1, 0], &[1, 1]]),
        ],
        gamma,
    );
    let upper = cone(&[&[1, 1], &[0, 1]]);
    let (_, middle) = adjacent_point(&omega, &upper, &cone(&[&[1, 1]]), 64).unwrap();
    assert_eq!(middle, cone(&[&[1, 1], &[8, 1]]));
    let (_, sliver) = adjacent_point(&omega, &middle, &cone(&[&[8, 1]]), 64).unwrap();
    assert_eq!(sliver, cone(&[&[1, 0], &[8, 1]]));
    let cones = traverse(&omega, upper, 4, 64).unwrap();
    assert_eq!(cones.len(), 3);
}

#[test]
fn invalid_input_is_reported() {
    let err = problem(&["x", "y"], &["x + y^2"], &[&[1, 1]]).unwrap_err();
    assert!(matches!(&err, GitFanError::InvalidInput(m) if m.contains("x + y^2") || m.contains("y^2 + x")), "{err}");
    let err = problem(&["x", "y"], &[], &[&[1, 1], &[2, 2]]).unwrap_err();
    assert!(matches!(&err, GitFanError::InvalidInput(m) if m.contains("rank")));
    let err = problem(&["x", "y"], &[], &[&[1, 1], &[2]]).unwrap_err();
    assert!(matches!(&err, GitFanError::InvalidInput(m) if m.contains("row 2")));
}

#[test]
fn symmetric_and_plain_runs_agree() {
    // x0*x1 - x2*x3 with the Klein four-group, graded by a 2x4 matrix
    let ring = Ring::new(["a", "b", "c", "d"]).unwrap();
    let g = parse_polynomial("a*b - c*d", &ring).unwrap();
    let ideal = Ideal::new(ring, vec![g]).unwrap();
    let q = vec![iv(&[1, 1, 1, 1]), iv(&[1, -1, 0, 0])];
    let group = PermGroup::generate(
        4,
        vec![Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap()],
        10,
    )
    .unwrap();
    let p = GitProblem::from_rows(ideal, q, Some(group)).unwrap();
    let with = compute_gitfan(&p, &opts(2)).unwrap();
    let without = compute_gitfan(&p.without_symmetry(), &opts(2)).unwrap();
    assert_eq!(with.maximal_cones(), without.maximal_cones());
    assert!(with.stats.aface_tests < without.stats.aface_tests);
    assert_eq!(with.afaces.faces, without.afaces.faces);
    let orbits = with.orbits.as_ref().unwrap();
    let covered: usize = orbits.iter().map(|o| o.members.len()).sum();
    assert_eq!(covered, with.maximal_cones().len());
}

#[test]
fn parallel_map_preserves_order() {
    let items: Vec<u64> = (0..200).collect();
    for threads in [1, 3, 16] {
        assert_eq!(parallel_map(&items, threads, |x| x * x), items.iter().map(|x| x * x).collect::<Vec<_>>());
    }
    assert!(parallel_map(&Vec::<u8>::new(), 4, |x| *x).is_empty());
}

#[test]
fn support_must_be_an_orbit_cone() {
    // x*y = 0 misses the big torus; its orbit cones are the two axes
    let p = problem(&["x", "y"], &["x*y"], &[&[1, 0], &[0, 1]]).unwrap();
    assert_eq!(compute_gitfan(&p, &opts(1)).unwrap_err(), GitFanError::SupportNotCovered);
}
