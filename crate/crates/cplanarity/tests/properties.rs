//! Randomized invariants. Each case derives its instance from a proptest
//! seed so shrinking reports a single reproducing u64.

use cplanarity::corpus::{random_clustered_graph, random_cyclic_cycle, random_embedded_instance};
use cplanarity::cycles::{CyclicClusteredCycle, Reduced};
use cplanarity::drawing::{dfs_circle_order, initial_parity_vector};
use cplanarity::format::{parse_instance, serialize_graph, serialize_map, Instance};
use cplanarity::switch::{apply_switches, build_system, WitnessSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn serialized_graphs_reparse_to_the_same_bytes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_clustered_graph(&mut rng, 10);
        let text = serialize_graph(&g);
        let Instance::Abstract(back) = parse_instance(&text).unwrap() else {
            panic!("graph text parsed as an embedded instance");
        };
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn serialized_maps_reparse_to_the_same_bytes(
        seed in any::<u64>(),
        n in 2usize..=9,
        clusters in 1usize..=3,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_embedded_instance(&mut rng, n, clusters.min(n), seed % 2 == 0);
        let text = serialize_map(&m);
        let Instance::Embedded(back) = parse_instance(&text).unwrap() else {
            panic!("map text parsed as an abstract instance");
        };
        prop_assert_eq!(serialize_map(&back), text);
    }

    #[test]
    fn rotating_a_cycle_preserves_its_winding_number(
        seed in any::<u64>(),
        k in 3usize..=5,
        n in 3usize..=20,
        by in 0usize..20,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_cyclic_cycle(&mut rng, k, n);
        let mut phi = c.phi().to_vec();
        let by = by % phi.len();
        phi.rotate_left(by);
        let rotated = CyclicClusteredCycle::new(k, phi).unwrap();
        prop_assert_eq!(rotated.winding_number(), c.winding_number());
    }

    #[test]
    fn reducing_a_reduced_cycle_changes_nothing(
        seed in any::<u64>(),
        k in 3usize..=5,
        n in 3usize..=20,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_cyclic_cycle(&mut rng, k, n);
        match c.monotone_reduce().outcome {
            Reduced::Monotone(m) => {
                prop_assert!(m.is_monotone());
                let again = m.monotone_reduce();
                prop_assert!(again.steps.is_empty());
                prop_assert_eq!(again.outcome, Reduced::Monotone(m));
            }
            Reduced::Trivial => prop_assert_eq!(c.winding_number(), 0),
        }
    }

    #[test]
    fn applying_a_switch_set_twice_restores_the_drawing(
        seed in any::<u64>(),
        mask in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_clustered_graph(&mut rng, 8);
        let ord = dfs_circle_order(&g);
        let v0 = initial_parity_vector(&g, &ord);
        let sys = build_system(&g, v0.clone());
        let picked = WitnessSet::new(
            sys.switches()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, &s)| s),
        );
        let once = apply_switches(&v0, &picked, &sys).unwrap();
        let twice = apply_switches(&once, &picked, &sys).unwrap();
        prop_assert_eq!(twice, v0);
    }
}
