use dualpivot::experiments::{run_trial_range, run_trials, TrialAggregate, TrialPlan};
use dualpivot::random::SeededSource;
use dualpivot::sort::{dual_pivot_quicksort_observed, generate_permutation, quicksort, CostCounters};
use dualpivot::Algorithm;
use proptest::prelude::*;

fn algorithm() -> impl Strategy<Value = Algorithm> {
    prop_oneof![Just(Algorithm::Dual), Just(Algorithm::Classic)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sorts_and_preserves_keys(n in 0usize..=1000, seed: u64, alg in algorithm()) {
        let mut src = SeededSource::new(seed);
        let input = generate_permutation(n, &mut src).into_vec();
        let mut keys = input.clone();
        quicksort(alg, &mut keys, &mut src);
        let mut expected = input;
        expected.sort_unstable();
        prop_assert_eq!(keys, expected);
    }

    #[test]
    fn sorts_arbitrary_distinct_values(mut keys in proptest::collection::btree_set(any::<i64>(), 0..300)
        .prop_map(|s| s.into_iter().collect::<Vec<_>>())
        .prop_shuffle(), seed: u64, alg in algorithm())
    {
        let mut expected = keys.clone();
        expected.sort_unstable();
        quicksort(alg, &mut keys, &mut SeededSource::new(seed));
        prop_assert_eq!(keys, expected);
    }

    #[test]
    fn every_stage_pays_its_toll(n in 2usize..400, seed: u64) {
        let mut src = SeededSource::new(seed);
        let mut keys = generate_permutation(n, &mut src).into_vec();
        let mut stages = Vec::new();
        let total = dual_pivot_quicksort_observed(&mut keys, &mut src, |o| stages.push(*o));
        let mut sum = CostCounters::default();
        for o in &stages {
            let (i, j, len) = (o.small_pivot_rank, o.large_pivot_rank, o.segment_len());
            prop_assert!(1 <= i && i < j && j <= len);
            prop_assert_eq!(o.left_size, i - 1);
            prop_assert_eq!(o.middle_size, j - i - 1);
            prop_assert_eq!(o.right_size, len - j);
            prop_assert_eq!(o.counter_delta.comparisons as usize, 1 + (i - 1) + 2 * (j - i - 1) + 2 * (len - j));
            prop_assert_eq!(o.counter_delta.exchanges as usize, (i - 1) + (len - j) + 2);
            prop_assert_eq!(o.counter_delta.stages, 1);
            sum += o.counter_delta;
        }
        prop_assert_eq!(sum, total);
    }

    #[test]
    fn same_seed_same_run(n in 0usize..500, seed: u64, alg in algorithm()) {
        let run = || {
            let mut src = SeededSource::new(seed);
            let mut keys = generate_permutation(n, &mut src).into_vec();
            let c = quicksort(alg, &mut keys, &mut src);
            (keys, c)
        };
        prop_assert_eq!(run(), run());
    }

    #[test]
    fn aggregate_merge_ignores_split_and_order(
        cuts in proptest::collection::vec(0u64..=300, 0..6),
        seed: u64,
        alg in algorithm(),
    ) {
        let plan = TrialPlan::new(alg, 40, 300, seed).unwrap();
        let mut bounds = cuts;
        bounds.push(0);
        bounds.push(plan.trials);
        bounds.sort_unstable();
        let parts: Vec<TrialAggregate> = bounds.windows(2).map(|w| run_trial_range(&plan, w[0]..w[1])).collect();

        let forward = parts.iter().fold(TrialAggregate::empty(plan), |a, b| a.merge(b).unwrap());
        let backward = parts.iter().rev().fold(TrialAggregate::empty(plan), |a, b| a.merge(b).unwrap());
        // (p0 + p1) + rest versus p0 + (p1 + rest)
        let nested = if parts.len() >= 2 {
            let tail = parts[1..].iter().fold(TrialAggregate::empty(plan), |a, b| a.merge(b).unwrap());
            parts[0].clone().merge(&tail).unwrap()
        } else {
            forward.clone()
        };
        prop_assert_eq!(&forward, &backward);
        prop_assert_eq!(&forward, &nested);
        prop_assert_eq!(&forward, &run_trials(&plan));
        prop_assert!(forward.is_complete());
        for sums in [&forward.comparisons, &forward.exchanges, &forward.stages] {
            let k = num_bigint::BigUint::from(sums.count);
            prop_assert!(&sums.sum_sq * k >= &sums.sum * &sums.sum);
        }
    }
}
