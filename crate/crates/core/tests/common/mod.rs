#![allow(dead_code)]

use std::collections::HashMap;

use lctr_core::{Partition, Rules, SgValue};

/// Every partition of `n`, parts in non-increasing order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(rest: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            acc.push(part);
            go(rest - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition with `0 <= size <= n`.
pub fn partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Offsets `(i, j)` naming every box plus one step past each row end and
/// below each column, so empty subpositions are covered too.
pub fn offsets(p: &Partition) -> Vec<(usize, u64)> {
    let rows = p.len();
    let cols = p.parts().first().copied().unwrap_or(0);
    let mut out = Vec::new();
    for i in 0..=rows {
        for j in 0..=cols {
            out.push((i, j));
        }
    }
    out
}

/// Boxes `(i, j)` of the diagram.
pub fn boxes(p: &Partition) -> Vec<(usize, usize)> {
    p.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect()
}

/// Deletes `i` top rows and `j` left columns of an explicit part list.
pub fn cut(parts: &[u64], i: usize, j: u64) -> Vec<u64> {
    parts.iter().skip(i).filter(|&&x| x > j).map(|&x| x - j).collect()
}

/// Sprague-Grundy value by memoized recursion over explicit part lists,
/// independent of the grid oracle and the fast solvers.
pub struct NaiveSg {
    rules: Rules,
    memo: HashMap<Vec<u64>, u8>,
}

impl NaiveSg {
    pub fn new(rules: Rules) -> Self {
        NaiveSg { rules, memo: HashMap::new() }
    }

    pub fn children(rules: Rules, parts: &[u64]) -> Vec<Vec<u64>> {
        if parts.is_empty() {
            return Vec::new();
        }
        match rules {
            Rules::Lctr => vec![cut(parts, 1, 0), cut(parts, 0, 1)],
            Rules::Downright => {
                let mut out = Vec::new();
                if parts.len() > 1 {
                    out.push(cut(parts, 1, 0));
                }
                if parts[0] > 1 {
                    out.push(cut(parts, 0, 1));
                }
                out
            }
        }
    }

    pub fn value(&mut self, parts: &[u64]) -> u8 {
        if let Some(&v) = self.memo.get(parts) {
            return v;
        }
        let kids: Vec<u8> = Self::children(self.rules, parts).iter().map(|c| self.value(c)).collect();
        let v = (0..).find(|x| !kids.contains(x)).unwrap();
        self.memo.insert(parts.to_vec(), v);
        v
    }

    pub fn sg(&mut self, parts: &[u64]) -> SgValue {
        SgValue::new(self.value(parts)).unwrap()
    }
}

/// Misère outcome (`true` for `P`) by memoized recursion over part lists.
pub fn naive_misere_is_p(parts: &[u64], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if let Some(&v) = memo.get(parts) {
        return v;
    }
    let kids = NaiveSg::children(Rules::Lctr, parts);
    // the empty board is terminal and thus N under misère play
    let v = !kids.is_empty() && kids.iter().all(|c| !naive_misere_is_p(c, memo));
    memo.insert(parts.to_vec(), v);
    v
}

/// Largest `l` with `parts[l - 1] >= l`, by linear scan.
pub fn scan_durfee(parts: &[u64]) -> usize {
    (1..=parts.len()).filter(|&l| parts[l - 1] >= l as u64).max().unwrap_or(0)
}

/// Conjugate by counting boxes per column.
pub fn scan_conjugate(parts: &[u64]) -> Vec<u64> {
    let cols = parts.first().copied().unwrap_or(0);
    (1..=cols).map(|c| parts.iter().filter(|&&x| x >= c).count() as u64).collect()
}
