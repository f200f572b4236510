//! Property tests on random inputs well beyond the exhaustive range.

mod common;

use coloured_dyck::bijections::*;
use coloured_dyck::{
    ColourSystem, ColouredDyckPath, Dissection, DyckPath, NcTree, NonCrossingPartition,
};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = ColourSystem> {
    prop_oneof![
        Just(ColourSystem::Catalan),
        (1usize..4).prop_map(ColourSystem::BoundedAscent),
        (1usize..4).prop_map(ColourSystem::Fibonacci),
        Just(ColourSystem::FibonacciFree),
        Just(ColourSystem::Schroeder),
        Just(ColourSystem::Trivial),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dyck_text_and_decompositions_roundtrip(seed: u64, n in 0usize..40) {
        let p = common::uniform_dyck(&mut common::rng(seed), n);
        prop_assert_eq!(DyckPath::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(p.ascent_lengths().iter().sum::<usize>(), n);
        prop_assert_eq!(p.complete_decompose().recompose(), p.clone());
        let mut sizes = p.complete_decompose().node_sizes();
        let mut lengths = p.ascent_lengths();
        sizes.sort_unstable();
        lengths.sort_unstable();
        prop_assert_eq!(sizes, lengths);
        if n > 0 {
            let (k, parts) = p.primary_decompose().unwrap();
            prop_assert_eq!(k, p.ascent_lengths()[0]);
            prop_assert_eq!(parts.iter().map(DyckPath::semilength).sum::<usize>(), n - k);
            prop_assert_eq!(DyckPath::from_primary(&parts), p);
        }
    }

    #[test]
    fn coloured_text_and_decomposition_roundtrip(seed: u64, n in 0usize..25, s in system()) {
        let p = common::coloured(&mut common::rng(seed), n, &s);
        prop_assert!(p.in_system(&s));
        prop_assert_eq!(ColouredDyckPath::parse(&p.to_string()).unwrap(), p.clone());
        if n > 0 {
            let (colour, parts) = p.primary_decompose().unwrap();
            prop_assert_eq!(ColouredDyckPath::from_primary(colour.clone(), parts).unwrap(), p);
        }
    }

    #[test]
    fn theta_and_psi_roundtrip(seed: u64, n in 0usize..40) {
        let p = common::uniform_dyck(&mut common::rng(seed), n);
        let tree = theta(&p).into_tree();
        prop_assert!(tree.validate_nco().is_ok());
        prop_assert_eq!(NcTree::from_json(&tree.to_json()).unwrap(), tree.clone());
        prop_assert_eq!(theta_inv(&tree).unwrap(), p.clone());
        let part = psi(&p);
        prop_assert!(part.validate().is_ok());
        prop_assert_eq!(NonCrossingPartition::from_json(&part.to_json()).unwrap(), part.clone());
        prop_assert_eq!(psi_inv(&part).unwrap(), p);
    }

    #[test]
    fn phi_roundtrips(seed: u64, n in 0usize..25) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::Catalan);
        let tree = phi(&p).unwrap();
        prop_assert_eq!(tree.vertices(), n + 1);
        prop_assert!(tree.validate().is_ok());
        prop_assert_eq!(phi_inv(&tree).unwrap(), p);
    }

    #[test]
    fn rho_roundtrips(seed: u64, n in 0usize..25, m in 1usize..5) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::BoundedAscent(m));
        let even = rho(&p, m).unwrap();
        prop_assert_eq!(even.pairs(), n);
        prop_assert_eq!(rho_inv(even.partition(), m).unwrap(), p);
    }

    #[test]
    fn sigma_roundtrips(seed: u64, n in 0usize..25, m in 1usize..5) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::Fibonacci(m));
        let d = sigma(&p, Some(m)).unwrap();
        prop_assert_eq!(d.k(), n);
        prop_assert!(d.validate(Some(m + 2)).is_ok());
        if n > 0 {
            let cells = d.cells();
            prop_assert_eq!(cells.iter().map(|c| c.len() - 2).sum::<usize>(), n);
            prop_assert!(cells.iter().all(|c| (3..=m + 2).contains(&c.len())));
        }
        prop_assert_eq!(Dissection::from_json(&d.to_json()).unwrap(), d.clone());
        prop_assert_eq!(sigma_inv(&d, Some(m)).unwrap(), p);
    }

    #[test]
    fn fib_to_ls_roundtrips(seed: u64, n in 0usize..30) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::FibonacciFree);
        let ls = fib_to_ls(&p).unwrap();
        prop_assert!(ls.as_schroeder().is_little());
        prop_assert_eq!(ls.as_schroeder().span(), 2 * n);
        prop_assert_eq!(ls_to_fib(&ls).unwrap(), p);
    }

    #[test]
    fn schroeder_to_t_roundtrips(seed: u64, n in 0usize..30) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::Schroeder);
        let t = schroeder_to_t(&p).unwrap();
        prop_assert_eq!(t.span(), 3 * n);
        prop_assert_eq!(coloured_dyck::TPath::parse(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(t_to_schroeder(&t).unwrap(), p);
    }

    #[test]
    fn trivial_colours_feed_every_dyck_map(seed: u64, n in 0usize..20) {
        let p = common::coloured(&mut common::rng(seed), n, &ColourSystem::Trivial);
        prop_assert!(phi(&p).is_ok());
        prop_assert!(rho(&p, 1).is_ok());
        prop_assert!(sigma(&p, Some(1)).is_ok());
        prop_assert!(fib_to_ls(&p).is_ok());
        prop_assert!(schroeder_to_t(&p).is_ok());
    }
}
