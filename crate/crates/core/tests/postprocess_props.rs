mod common;

use common::{brute_force_optimum, random_graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rlsa_core::{
    gap_trajectory, generate_er, greedy_decode, primal_gap, run_rlsa, summarize, EnergyModel,
    Problem, SamplerConfig, Solution,
};

#[test]
fn decode_is_feasible_idempotent_and_never_worse() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..25 {
        let g = random_graph(&mut rng, 12);
        let n = g.num_nodes();
        for problem in [Problem::Mis, Problem::Mcl, Problem::Mcut] {
            let m = EnergyModel::new(problem, g.clone(), 1.02).unwrap();
            for mask in 0..(1u64 << n) {
                let x = Solution::from_mask(mask, n);
                let y = greedy_decode(&m, &x).unwrap();
                assert_eq!(m.violation(&y).unwrap(), 0);
                assert!(m.energy(&y).unwrap() <= m.energy(&x).unwrap());
                assert!(m.delta(&y).unwrap().iter().all(|&d| d <= 0.0));
                assert_eq!(greedy_decode(&m, &y).unwrap(), y);
            }
        }
    }
}

#[test]
fn gap_curve_of_converged_run_ends_at_zero() {
    let mut results = Vec::new();
    let mut refs = Vec::new();
    for seed in 0..5 {
        let g = generate_er(14, 0.3, 300 + seed).unwrap();
        let opt = brute_force_optimum(Problem::Mis, &g) as f64;
        let m = EnergyModel::mis(g, 1.02).unwrap();
        let res = run_rlsa(&m, &SamplerConfig::new(0.01, 3, 200, 32, seed), None).unwrap();
        let gaps = gap_trajectory(&res, -opt);
        for w in gaps.windows(2) {
            assert!(w[1].gap <= w[0].gap);
        }
        assert_eq!(gaps.last().unwrap().gap, 0.0);
        results.push(res);
        refs.push(Some(-opt));
    }
    let summary = summarize(&results, Some(&refs)).unwrap();
    assert_eq!(summary.instances, 5);
    assert_eq!(summary.mean_primal_gap, Some(0.0));
    assert!((summary.mean_best_energy + summary.mean_objective.unwrap()).abs() < 1e-12);
}

proptest! {
    #[test]
    fn gap_is_a_unit_interval_distance(h in -1e6f64..1e6, h_star in -1e6f64..1e6) {
        let g = primal_gap(h, h_star);
        prop_assert!((0.0..=1.0).contains(&g));
        if h != 0.0 {
            prop_assert_eq!(primal_gap(h, h), 0.0);
        }
    }

    #[test]
    fn gap_agrees_in_f32(h in -100.0f32..0.0, h_star in -100.0f32..-1.0) {
        let a = primal_gap(h, h_star) as f64;
        let b = primal_gap(h as f64, h_star as f64);
        prop_assert!((a - b).abs() < 1e-5);
    }
}
