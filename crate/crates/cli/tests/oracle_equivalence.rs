mod oracle;

use pcmkit_core::reference_matrices as refm;
use pcmkit_core::{IndexId, Pcm, RngSeed, Sampler};

const REL: f64 = 1e-12;

fn oracle_value(id: IndexId, a: &oracle::Raw) -> Option<f64> {
    Some(match id {
        IndexId::K => oracle::k(a),
        IndexId::Ai => oracle::ai(a),
        IndexId::AiStar => oracle::ai_star(a),
        IndexId::CiH => oracle::ci_h(a),
        IndexId::Cci => oracle::cci(a),
        IndexId::Re => return oracle::re(a),
        IndexId::ReStar => oracle::re_star(a),
        IndexId::IStar => oracle::i_star(a),
        IndexId::INot6 => oracle::i_not6(a),
    })
}

fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= REL * a.abs().max(b.abs())
}

fn assert_matches(m: &Pcm, label: &str) {
    let raw = m.to_rows();
    for id in IndexId::ALL {
        let lib = id.evaluate(m).ok();
        let ora = oracle_value(id, &raw);
        match (lib, ora) {
            (Some(x), Some(y)) => assert!(close(x, y), "{label} {id}: library {x:e}, oracle {y:e}"),
            (None, None) => {}
            _ => panic!("{label} {id}: library {lib:?}, oracle {ora:?}"),
        }
    }
}

#[test]
fn random_matrices_of_order_3_and_4() {
    for n in [3, 4] {
        let mut s = Sampler::new(RngSeed(0xACE8).derive(n as u64));
        for t in 0..50 {
            let m = s.pcm(n).unwrap();
            assert_matches(&m, &format!("n={n} t={t}"));
        }
    }
}

#[test]
fn larger_orders() {
    let mut s = Sampler::new(RngSeed(17));
    for n in 5..=7 {
        for t in 0..10 {
            assert_matches(&s.pcm(n).unwrap(), &format!("n={n} t={t}"));
        }
    }
}

#[test]
fn reference_matrices() {
    for (label, m) in [
        ("transpose pair", refm::transpose_pair()),
        ("transpose pair^T", refm::transpose_pair().transpose()),
        ("ambiguity", refm::ambiguity_counterexample()),
        ("cosine", refm::cosine_counterexample()),
        ("4x4", refm::ambiguity_worked_example()),
        ("ones", Pcm::ones(4).unwrap()),
    ] {
        assert_matches(&m, label);
    }
}

#[test]
fn oracle_agrees_with_hand_values() {
    let pair = refm::transpose_pair().to_rows();
    assert!((oracle::k(&pair) - 1.0 / 3.0).abs() < 1e-15);
    assert!((oracle::i_star(&pair) - 1.0 / 6.0).abs() < 1e-15);
    assert!((oracle::i_not6(&pair) - 0.5).abs() < 1e-15);
    let pair_t = refm::transpose_pair().transpose().to_rows();
    assert!((oracle::i_not6(&pair_t) - 1.0 / 3.0).abs() < 1e-15);
    let ambiguity = refm::ambiguity_counterexample().to_rows();
    assert!((oracle::k(&ambiguity) - 0.5).abs() < 1e-15);
    assert!((oracle::ai_star(&ambiguity) - 1.4375).abs() < 1e-12);
    let mut indirect = oracle::indirect(&refm::ambiguity_worked_example().to_rows(), 0, 3);
    indirect.sort_by(f64::total_cmp);
    indirect.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    assert_eq!(indirect.len(), 3);
    assert!(
        (indirect[0] - 0.5).abs() < 1e-15
            && (indirect[1] - 2.0 / 3.0).abs() < 1e-15
            && (indirect[2] - 6.0).abs() < 1e-15
    );
    assert_eq!(oracle::re(&Pcm::ones(3).unwrap().to_rows()), None);
    let squared: Vec<f64> = [2.0f64, 8.0, 2.0].iter().map(|v| v * v).collect();
    let a2 = oracle::from_upper(3, &squared);
    assert!((oracle::ai(&a2) - 0.108597285068).abs() < 1e-11);
}
