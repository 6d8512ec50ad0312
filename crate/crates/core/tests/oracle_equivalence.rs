mod common;

use std::collections::HashMap;

use common::{cut, offsets, partitions_of, partitions_up_to, NaiveSg};
use lctr_core::{
    oracle_misere_pn, oracle_sg_downright, oracle_sg_lctr, outcome, sg_downright, sg_lctr, Game, Outcome, Partition,
    ProbeCounter, Rules, SgValue, SolveError,
};

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=18).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts[..8], [1, 1, 2, 3, 5, 7, 11, 15]);
    assert_eq!(counts[18], 385);
}

#[test]
fn fast_matches_oracle_at_every_offset() {
    let probes = ProbeCounter::new();
    for p in partitions_up_to(18) {
        let lctr = oracle_sg_lctr(&p).unwrap();
        let dr = oracle_sg_downright(&p).ok();
        let pn = oracle_misere_pn(&p).unwrap();
        for (i, j) in offsets(&p) {
            let v = p.at(i, j);
            let ju = j as usize;
            assert_eq!(sg_lctr(v, &probes), lctr.value(i, ju), "lctr {p} at ({i},{j})");
            match dr.as_ref().and_then(|g| g.get(i, ju)) {
                Some(want) => assert_eq!(sg_downright(v, &probes), Ok(want), "downright {p} at ({i},{j})"),
                None => assert_eq!(sg_downright(v, &probes), Err(SolveError::EmptyBoard)),
            }
            assert_eq!(outcome(Game::LctrMisere, v, &probes), Ok(pn.value(i, ju)), "misere {p} at ({i},{j})");
        }
    }
}

#[test]
fn grid_oracle_matches_memoized_recursion() {
    let mut lctr = NaiveSg::new(Rules::Lctr);
    let mut dr = NaiveSg::new(Rules::Downright);
    let mut misere = HashMap::new();
    for p in partitions_up_to(12) {
        let g = oracle_sg_lctr(&p).unwrap();
        let pn = oracle_misere_pn(&p).unwrap();
        assert_eq!(pn.empty(), Outcome::N);
        let d = oracle_sg_downright(&p).ok();
        for (i, row) in g.rows().iter().enumerate() {
            for j in 0..row.len() {
                let sub = cut(p.parts(), i, j as u64);
                assert_eq!(g.value(i, j), lctr.sg(&sub));
                assert_eq!(d.as_ref().unwrap().value(i, j), dr.sg(&sub));
                let want = if common::naive_misere_is_p(&sub, &mut misere) { Outcome::P } else { Outcome::N };
                assert_eq!(pn.value(i, j), want);
            }
        }
    }
}

#[test]
fn values_stay_in_range() {
    for p in partitions_up_to(18) {
        for g in [oracle_sg_lctr(&p).ok(), oracle_sg_downright(&p).ok()].into_iter().flatten() {
            assert!(g.rows().iter().flatten().all(|v| v.get() <= 2));
        }
    }
}

#[test]
fn adjacent_positions_differ() {
    for p in partitions_up_to(18) {
        let lens: Vec<usize> = p.parts().iter().map(|&x| x as usize).collect();
        let g = oracle_sg_lctr(&p).unwrap();
        for (i, &len) in lens.iter().enumerate() {
            for j in 0..len {
                // off-diagram moves land on the empty board, value 0
                assert_ne!(g.value(i, j), g.value(i + 1, j), "{p} ({i},{j}) down");
                assert_ne!(g.value(i, j), g.value(i, j + 1), "{p} ({i},{j}) right");
            }
        }
        if let Ok(d) = oracle_sg_downright(&p) {
            for (i, &len) in lens.iter().enumerate() {
                for j in 0..len {
                    for child in [d.get(i + 1, j), d.get(i, j + 1)].into_iter().flatten() {
                        assert_ne!(d.value(i, j), child, "{p} ({i},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn worked_examples() {
    let probes = ProbeCounter::new();
    for text in ["8,7,6,5,5,2,1", "12,11,9,7,6,5,3,1", "6,4,4,2,1,1", "6,4,3,3,1,1"] {
        let p: Partition = text.parse().unwrap();
        let mut naive = NaiveSg::new(Rules::Lctr);
        assert_eq!(sg_lctr(p.view(), &probes), naive.sg(p.parts()), "{text}");
        let mut naive = NaiveSg::new(Rules::Downright);
        assert_eq!(sg_downright(p.view(), &probes).unwrap(), naive.sg(p.parts()), "{text}");
    }
    let empty: Partition = Partition::empty();
    assert_eq!(sg_lctr(empty.view(), &probes), SgValue::ZERO);
    assert_eq!(outcome(Game::LctrMisere, empty.view(), &probes), Ok(Outcome::N));
    let one: Partition = "1".parse().unwrap();
    assert_eq!(outcome(Game::LctrMisere, one.view(), &probes), Ok(Outcome::P));
}
