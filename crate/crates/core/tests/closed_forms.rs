mod common;

use common::NaiveSg;
use lctr_core::{
    make_family, oracle_sg_downright, oracle_sg_lctr, sg_downright, sg_gamma, sg_lctr, sg_one_row, sg_rectangle,
    sg_three_row, sg_two_row, FamilySpec, Partition, ProbeCounter, Rules, SgValue,
};

fn fam(spec: FamilySpec) -> Partition {
    make_family(spec).unwrap()
}

fn sgv(v: u8) -> SgValue {
    SgValue::new(v).unwrap()
}

#[test]
fn staircases() {
    let probes = ProbeCounter::new();
    for r in 1..=60u64 {
        let p = fam(FamilySpec::Staircase { r });
        let lctr = sgv((r % 2) as u8);
        let dr = sgv(((r - 1) % 2) as u8);
        assert_eq!(sg_lctr(p.view(), &probes), lctr, "r={r}");
        assert_eq!(sg_downright(p.view(), &probes), Ok(dr), "r={r}");
        assert_eq!(oracle_sg_lctr(&p).unwrap().origin(), lctr, "r={r}");
        assert_eq!(oracle_sg_downright(&p).unwrap().origin(), dr, "r={r}");
    }
}

/// Gamma values read off the two formulas for hooks.
fn gamma_table(rules: Rules, r: u64, c: u64) -> u8 {
    match rules {
        Rules::Lctr if c > 1 && r > 1 => 0,
        Rules::Lctr if (r == 1 && c % 2 == 1) || (c == 1 && r % 2 == 1) => 1,
        Rules::Lctr => 2,
        Rules::Downright if c % 2 == 1 && r % 2 == 1 => 0,
        Rules::Downright if c % 2 != r % 2 && c > 1 && r > 1 => 2,
        Rules::Downright => 1,
    }
}

#[test]
fn gammas() {
    let probes = ProbeCounter::new();
    for r in 1..=40u64 {
        for c in 1..=40u64 {
            let p = fam(FamilySpec::Gamma { r, c });
            for rules in [Rules::Lctr, Rules::Downright] {
                let want = sgv(gamma_table(rules, r, c));
                assert_eq!(sg_gamma(rules, r, c), want, "{rules:?} r={r} c={c}");
                let (fast, grid) = match rules {
                    Rules::Lctr => (sg_lctr(p.view(), &probes), oracle_sg_lctr(&p).unwrap()),
                    Rules::Downright => (sg_downright(p.view(), &probes).unwrap(), oracle_sg_downright(&p).unwrap()),
                };
                assert_eq!(fast, want, "{rules:?} r={r} c={c}");
                assert_eq!(grid.origin(), want, "{rules:?} r={r} c={c}");
            }
        }
    }
}

#[test]
fn rectangles() {
    let probes = ProbeCounter::new();
    for r in 1..=40u64 {
        for c in 1..=40u64 {
            let want = if c > 1 && r > 1 && (c + r) % 2 == 0 {
                0
            } else if (c <= 2 || r <= 2) && (c + r) % 2 == 1 {
                2
            } else {
                1
            };
            let p = fam(FamilySpec::Rectangle { r, c });
            assert_eq!(sg_rectangle(r, c), sgv(want), "r={r} c={c}");
            assert_eq!(sg_lctr(p.view(), &probes), sgv(want), "r={r} c={c}");
            assert_eq!(oracle_sg_lctr(&p).unwrap().origin(), sgv(want), "r={r} c={c}");
        }
    }
}

#[test]
fn spec_examples() {
    assert_eq!(sg_two_row(4u64, 4), Ok(sgv(0)));
    assert_eq!(sg_two_row(7u64, 3), Ok(sgv(0)));
    assert_eq!(sg_two_row(7u64, 4), Ok(sgv(1)));
    assert!(sg_two_row(3u64, 4).is_err());
    assert_eq!(sg_three_row(2u64, 2, 2), Ok(sgv(2)));
    assert_eq!(sg_three_row(5u64, 2, 2), Ok(sgv(1)));
    assert_eq!(sg_three_row(5u64, 4, 1), Ok(sgv(1)));
    assert_eq!(sg_three_row(6u64, 4, 2), Ok(sgv(0)));
    assert!(sg_three_row(6u64, 2, 4).is_err());
    assert_eq!(sg_gamma(Rules::Lctr, 3u64, 4), sgv(0));
    assert_eq!(sg_gamma(Rules::Downright, 3u64, 5), sgv(0));
    assert_eq!(sg_gamma(Rules::Downright, 2u64, 5), sgv(2));
    assert_eq!(sg_gamma(Rules::Downright, 2u64, 2), sgv(1));
    assert_eq!(sg_rectangle(3u64, 5), sgv(0));
    assert_eq!(sg_rectangle(2u64, 5), sgv(2));
    assert_eq!(sg_rectangle(3u64, 4), sgv(1));
}

#[test]
fn short_games_up_to_fifty() {
    let probes = ProbeCounter::new();
    let mut naive = NaiveSg::new(Rules::Lctr);
    let check = |parts: Vec<u64>, dispatched: SgValue, naive: &mut NaiveSg| {
        let p = Partition::new(parts.clone()).unwrap();
        let want = naive.sg(&parts);
        assert_eq!(dispatched, want, "{p}");
        assert_eq!(sg_lctr(p.view(), &probes), want, "{p}");
        assert_eq!(oracle_sg_lctr(&p).unwrap().origin(), want, "{p}");
    };
    check(vec![], sg_one_row(0u64), &mut naive);
    for a in 1..=50u64 {
        check(vec![a], sg_one_row(a), &mut naive);
        for b in 1..=a {
            check(vec![a, b], sg_two_row(a, b).unwrap(), &mut naive);
            for c in 1..=b {
                check(vec![a, b, c], sg_three_row(a, b, c).unwrap(), &mut naive);
            }
        }
    }
}
