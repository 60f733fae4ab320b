use gf2_codes::{BitWord, LinearCode};
use proptest::prelude::*;
use rate_regions::{BinaryAdderParams, RatePoint};
use twr_sim::rng::{stream_rng, Phase, Role};
use twr_sim::{
    adder_uplink, bsc_apply, monte_carlo, node1_df_decode, node2_df_decode, relay_df_transcode,
    MessagePair, ProtocolConfig, SimScheme,
};

#[test]
fn df_index_round_trip_is_exhaustive() {
    // M12 = 1024, M21 = 64
    let (b12, b21) = (10u32, 6u32);
    for w12 in 0..1u32 << b12 {
        for w21 in 0..1u32 << b21 {
            let pair = MessagePair::new(w12, w21, b12, b21).unwrap();
            let idx = relay_df_transcode(&pair);
            assert_eq!(node1_df_decode(&idx, w12, b21).unwrap(), w21);
            assert_eq!(node2_df_decode(&idx, w21, b12, b21).unwrap(), w12);
        }
    }
}

#[test]
fn relay_sum_decoding_matches_point_to_point() {
    // with matched noise streams the phase-2 reception equals a single
    // codeword of the shared code through BSC(eps_r), because
    // enc(a) ^ enc(b) = enc(a ^ b)
    let code = LinearCode::random(16, 8, 5).unwrap();
    let eps_r = 0.1;
    for trial in 0..2_000u64 {
        let mut msg_rng = stream_rng(9, trial, Phase::Messages, Role::Source);
        use rand::Rng;
        let lo: u32 = msg_rng.random_range(0..1 << 8);
        let w21: u32 = msg_rng.random_range(0..1 << 8);
        let s = lo ^ w21;

        let x12 = BitWord::from_bits(16, code.encode_bits(lo)).unwrap();
        let x21 = BitWord::from_bits(16, code.encode_bits(w21)).unwrap();
        let mut rng_a = stream_rng(9, trial, Phase::Uplink2, Role::Relay);
        let y_sum = adder_uplink(&x12, &x21, eps_r, &mut rng_a).unwrap();

        let xs = BitWord::from_bits(16, code.encode_bits(s)).unwrap();
        let mut rng_b = stream_rng(9, trial, Phase::Uplink2, Role::Relay);
        let y_p2p = bsc_apply(&xs, eps_r, &mut rng_b).unwrap();

        assert_eq!(y_sum, y_p2p);
        let err_sum = code.ml_decode_bits(y_sum.bits()).0 != s;
        let err_p2p = code.ml_decode_bits(y_p2p.bits()).0 != s;
        assert_eq!(err_sum, err_p2p, "trial {trial}");
    }
}

fn sample_cfg() -> ProtocolConfig {
    ProtocolConfig {
        n: 16,
        alpha: 0.5,
        rates: RatePoint {
            r12: 0.45,
            r21: 0.2,
        },
        channel: BinaryAdderParams::new(0.1, 0.05, 0.08).unwrap(),
        seed: 77,
        trials: 500,
        eps_typ: 0.12,
        hash_budget: None,
    }
}

#[test]
fn report_is_thread_count_invariant() {
    let cfg = sample_cfg();
    let baseline = monte_carlo(&cfg, SimScheme::Pnc).unwrap();
    #[cfg(feature = "parallel")]
    {
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let sequential = single.install(|| monte_carlo(&cfg, SimScheme::Pnc).unwrap());
        assert_eq!(baseline.errors_relay, sequential.errors_relay);
        assert_eq!(baseline.errors_node1, sequential.errors_node1);
        assert_eq!(baseline.errors_node2, sequential.errors_node2);
    }
    let again = monte_carlo(&cfg, SimScheme::Pnc).unwrap();
    assert_eq!(baseline.errors_node1, again.errors_node1);
    assert_eq!(baseline.errors_node2, again.errors_node2);
}

#[test]
fn relay_errors_decrease_with_block_length() {
    // symmetric rate at 80% of the eps_r = 0.1 uplink capacity
    let rate = 0.8 * 0.5310044064107188;
    let mut blers = Vec::new();
    for n in [8usize, 16] {
        let cfg = ProtocolConfig {
            n,
            alpha: 1.0,
            rates: RatePoint {
                r12: rate,
                r21: rate,
            },
            channel: BinaryAdderParams::new(0.1, 0.0, 0.0).unwrap(),
            seed: 4,
            trials: 4_000,
            eps_typ: 0.12,
            hash_budget: None,
        };
        let report = monte_carlo(&cfg, SimScheme::Pnc).unwrap();
        blers.push(report.errors_relay as f64 / report.trials as f64);
    }
    assert!(
        blers[1] <= blers[0],
        "relay bler should not grow with n: {blers:?}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn df_transcode_inverts_for_random_budgets(
        b12 in 1u32..=10,
        extra in 0u32..=4,
        w12_raw in 0u32..1 << 14,
        w21_raw in 0u32..1 << 10,
    ) {
        let b12 = b12 + extra;
        let b21 = b12 - extra;
        let w12 = w12_raw & ((1 << b12) - 1);
        let w21 = w21_raw & ((1 << b21) - 1);
        let pair = MessagePair::new(w12, w21, b12, b21).unwrap();
        let idx = relay_df_transcode(&pair);
        prop_assert_eq!(node1_df_decode(&idx, w12, b21).unwrap(), w21);
        prop_assert_eq!(node2_df_decode(&idx, w21, b12, b21).unwrap(), w12);
    }

    #[test]
    fn uplink_is_commutative(bits_a in 0u32..1 << 12, bits_b in 0u32..1 << 12, seed in 0u64..1000) {
        let a = BitWord::from_bits(12, bits_a).unwrap();
        let b = BitWord::from_bits(12, bits_b).unwrap();
        let mut r1 = stream_rng(seed, 0, Phase::Uplink2, Role::Relay);
        let mut r2 = stream_rng(seed, 0, Phase::Uplink2, Role::Relay);
        let y_ab = adder_uplink(&a, &b, 0.2, &mut r1).unwrap();
        let y_ba = adder_uplink(&b, &a, 0.2, &mut r2).unwrap();
        prop_assert_eq!(y_ab, y_ba);
    }
}
