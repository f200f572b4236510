//! Exhaustive roundtrip, surjectivity and size-law checks for every
//! bijection, against the brute-force structure oracles.

use std::collections::BTreeSet;

use coloured_dyck::bijections::*;
use coloured_dyck::colours::enumerate_coloured;
use coloured_dyck::paths::{dyck_paths, little_schroeder_paths, SchroederStep, TStep};
use coloured_dyck::structures::{
    dissections, even_partitions, nc_partitions, nc_trees, nco_trees, t_path_oracle, OracleLimits,
};
use coloured_dyck::{ColourSystem, Error, NcTree, NonCrossingPartition};

fn limits() -> OracleLimits {
    OracleLimits::default()
}

#[test]
fn theta_is_a_bijection_onto_nco_trees() {
    for n in 0..=6 {
        let mut image = BTreeSet::new();
        for p in dyck_paths(n) {
            let tree = theta(&p).into_tree();
            assert_eq!(tree.vertices(), n + 1);
            assert!(tree.validate_nco().is_ok(), "{p}");
            assert_eq!(theta_inv(&tree).unwrap(), p);
            image.insert(tree);
        }
        let oracle: BTreeSet<NcTree> = nco_trees(n + 1, &limits())
            .unwrap()
            .into_iter()
            .map(|t| t.into_tree())
            .collect();
        assert_eq!(image, oracle, "n={n}");
    }
}

#[test]
fn phi_is_a_bijection_onto_nc_trees() {
    for n in 0..=5 {
        let mut image = BTreeSet::new();
        let mut domain = 0;
        for p in enumerate_coloured(n, &ColourSystem::Catalan).unwrap() {
            let tree = phi(&p).unwrap();
            assert_eq!(tree.vertices(), n + 1);
            assert!(tree.validate().is_ok(), "{p}");
            assert_eq!(phi_inv(&tree).unwrap(), p);
            image.insert(tree);
            domain += 1;
        }
        assert_eq!(image.len(), domain);
        if n <= 4 {
            let oracle: BTreeSet<NcTree> =
                nc_trees(n + 1, &limits()).unwrap().into_iter().collect();
            assert_eq!(image, oracle, "n={n}");
        }
    }
}

#[test]
fn phi_of_a_pyramid_is_theta_of_its_colour() {
    for k in 1..=6 {
        for c in dyck_paths(k) {
            let path = coloured_dyck::ColouredDyckPath::pyramid(c.clone().into());
            assert_eq!(phi(&path).unwrap(), theta(&c).into_tree());
        }
    }
}

#[test]
fn psi_is_a_bijection_onto_nc_partitions() {
    for n in 0..=6 {
        let mut image = BTreeSet::new();
        for p in dyck_paths(n) {
            let part = psi(&p);
            assert_eq!(part.points(), n);
            assert!(part.validate().is_ok());
            assert_eq!(psi_inv(&part).unwrap(), p);
            image.insert(part);
        }
        let oracle: BTreeSet<NonCrossingPartition> =
            nc_partitions(n, &limits()).unwrap().into_iter().collect();
        assert_eq!(image, oracle, "n={n}");
    }
}

#[test]
fn rho_is_a_bijection_onto_even_partitions() {
    for m in 1..=3 {
        for n in 0..=5 {
            let mut image = BTreeSet::new();
            for p in enumerate_coloured(n, &ColourSystem::BoundedAscent(m)).unwrap() {
                let even = rho(&p, m).unwrap();
                assert_eq!(even.pairs(), n);
                // every k-ascent owns blocks totalling 2k points
                let total: usize = even.partition().blocks().iter().map(Vec::len).sum();
                assert_eq!(total, 2 * n);
                assert_eq!(rho_inv(even.partition(), m).unwrap(), p, "{p}");
                image.insert(even.into_partition());
            }
            if n <= 4 {
                let oracle: BTreeSet<NonCrossingPartition> = even_partitions(n, m, &limits())
                    .unwrap()
                    .into_iter()
                    .map(|e| e.into_partition())
                    .collect();
                assert_eq!(image, oracle, "n={n} m={m}");
            }
        }
    }
}

#[test]
fn rho_blocks_follow_the_colours() {
    // a single pyramid's blocks are the doubled blocks of psi(colour)
    for k in 1..=5 {
        for c in dyck_paths(k) {
            let path = coloured_dyck::ColouredDyckPath::pyramid(c.clone().into());
            let doubled: Vec<Vec<usize>> = psi(&c)
                .blocks()
                .iter()
                .map(|b| b.iter().flat_map(|&x| [2 * x - 1, 2 * x]).collect())
                .collect();
            let image = rho(&path, k).unwrap();
            assert_eq!(image.partition(), &NonCrossingPartition::new(doubled));
        }
    }
}

#[test]
fn sigma_is_a_bijection_onto_dissections() {
    for m in [Some(1), Some(2), Some(3), None] {
        let system = match m {
            Some(m) => ColourSystem::Fibonacci(m),
            None => ColourSystem::FibonacciFree,
        };
        for n in 0..=5 {
            let mut image = BTreeSet::new();
            for p in enumerate_coloured(n, &system).unwrap() {
                let d = sigma(&p, m).unwrap();
                assert_eq!(d.k(), n);
                assert!(d.validate(m.map(|m| m + 2)).is_ok(), "{p}");
                assert_eq!(sigma_inv(&d, m).unwrap(), p, "{p}");
                image.insert(d);
            }
            if n <= 4 {
                let oracle: BTreeSet<_> = dissections(n, m.map(|m| m + 2), &limits())
                    .unwrap()
                    .into_iter()
                    .collect();
                assert_eq!(image, oracle, "n={n} m={m:?}");
            }
        }
    }
}

#[test]
fn sigma_cells_at_alpha_follow_the_pyramids() {
    for k in 1..=6 {
        for colour in
            coloured_dyck::paths::dyck_family_paths(k, coloured_dyck::Family::FibonacciFree)
                .unwrap()
        {
            let path = coloured_dyck::ColouredDyckPath::pyramid(colour.clone().into());
            let d = sigma(&path, None).unwrap();
            let mut cells: Vec<usize> = d.cells().iter().map(Vec::len).collect();
            let mut expected: Vec<usize> = colour
                .pyramid_sizes()
                .unwrap()
                .iter()
                .map(|j| j + 2)
                .collect();
            cells.sort_unstable();
            expected.sort_unstable();
            assert_eq!(cells, expected, "{colour}");
        }
    }
}

#[test]
fn fib_to_ls_is_a_bijection_onto_little_schroeder_paths() {
    for n in 0..=6 {
        let mut image = BTreeSet::new();
        for p in enumerate_coloured(n, &ColourSystem::FibonacciFree).unwrap() {
            let ls = fib_to_ls(&p).unwrap();
            assert_eq!(ls.as_schroeder().span(), 2 * n);
            assert!(ls.as_schroeder().is_little());
            assert_eq!(ls_to_fib(&ls).unwrap(), p, "{p}");
            image.insert(ls.to_string());
        }
        let oracle: BTreeSet<String> = little_schroeder_paths(n).map(|p| p.to_string()).collect();
        assert_eq!(image, oracle, "n={n}");
    }
}

#[test]
fn schroeder_to_t_is_a_bijection_onto_t_paths() {
    for n in 0..=4 {
        let mut image = BTreeSet::new();
        for p in enumerate_coloured(n, &ColourSystem::Schroeder).unwrap() {
            let t = schroeder_to_t(&p).unwrap();
            assert_eq!(t.span(), 3 * n);
            assert_eq!(t_to_schroeder(&t).unwrap(), p, "{p}");
            // colours without flat steps never produce G
            let flat_free = p
                .colours()
                .iter()
                .all(|c| !c.steps().contains(&SchroederStep::L));
            if flat_free {
                assert!(!t.steps().contains(&TStep::G), "{p}");
            }
            image.insert(t.to_string());
        }
        let oracle: BTreeSet<String> = t_path_oracle(n, &limits())
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(image, oracle, "n={n}");
    }
}

#[test]
fn maps_reject_foreign_colours() {
    let schroeder = coloured_dyck::ColouredDyckPath::parse("UUDD;ULD").unwrap();
    assert!(matches!(
        phi(&schroeder),
        Err(Error::WrongColourSystem { .. })
    ));
    assert!(matches!(
        rho(&schroeder, 2),
        Err(Error::WrongColourSystem { .. })
    ));
    assert!(matches!(
        sigma(&schroeder, None),
        Err(Error::WrongColourSystem { .. })
    ));
    assert!(matches!(
        fib_to_ls(&schroeder),
        Err(Error::WrongColourSystem { .. })
    ));
    let catalan = coloured_dyck::ColouredDyckPath::parse("UUUDDD;UUDUDD").unwrap();
    assert!(matches!(
        sigma(&catalan, None),
        Err(Error::WrongColourSystem { .. })
    ));
    assert!(matches!(
        rho(&catalan, 1),
        Err(Error::WrongColourSystem { .. })
    ));
    assert!(schroeder_to_t(&catalan).is_ok());
}

#[test]
fn inverses_reject_invalid_structures() {
    let crossing_tree = NcTree::new(4, [(1, 3), (2, 4), (3, 4)]);
    assert!(matches!(
        theta_inv(&crossing_tree),
        Err(Error::NotAnNCOTree(_))
    ));
    assert!(matches!(
        phi_inv(&crossing_tree),
        Err(Error::NotAnNCTree(_))
    ));
    let cycle = NcTree::new(3, [(1, 2), (2, 3), (1, 3)]);
    assert!(matches!(phi_inv(&cycle), Err(Error::NotAnNCTree(_))));

    let odd = NonCrossingPartition::new([vec![1, 2, 3], vec![4]]);
    assert!(matches!(rho_inv(&odd, 2), Err(Error::InvalidPartition(_))));
    let big = NonCrossingPartition::new([vec![1, 2, 3, 4]]);
    assert!(matches!(rho_inv(&big, 1), Err(Error::InvalidPartition(_))));
    assert!(rho_inv(&big, 2).is_ok());

    let fan = coloured_dyck::Dissection::new(3, [(0, 2), (0, 3)]);
    assert!(sigma_inv(&fan, Some(1)).is_ok());
    let square_cell = coloured_dyck::Dissection::new(3, [(0, 2)]);
    assert!(matches!(
        sigma_inv(&square_cell, Some(1)),
        Err(Error::InvalidDissection(_))
    ));
    let crossing = coloured_dyck::Dissection::new(3, [(0, 2), (1, 3)]);
    assert!(matches!(
        sigma_inv(&crossing, None),
        Err(Error::InvalidDissection(_))
    ));
}
