//! Minimum hitting set: choose candidates so that every row contains one.

use std::cmp::Reverse;

/// A fixed-width bit set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        Bits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b))
    }
}

/// Rows as sorted candidate lists over `candidates` columns.
#[derive(Clone, Debug)]
pub struct HittingSet {
    candidates: usize,
    row_sets: Vec<Bits>,
    col_sets: Vec<Bits>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// A row has no candidate at all.
    Infeasible(usize),
    /// The node budget ran out; carries the best cover found so far.
    Budget(Vec<usize>),
}

struct Search<'a> {
    problem: &'a HittingSet,
    nodes: u64,
    budget: u64,
}

impl HittingSet {
    pub fn new(candidates: usize, rows: &[Vec<usize>]) -> Self {
        let mut row_sets = Vec::with_capacity(rows.len());
        let mut col_sets = vec![Bits::new(rows.len()); candidates];
        for (r, row) in rows.iter().enumerate() {
            let mut b = Bits::new(candidates);
            for &c in row {
                b.insert(c);
                col_sets[c].insert(r);
            }
            row_sets.push(b);
        }
        HittingSet {
            candidates,
            row_sets,
            col_sets,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_sets.len()
    }

    pub fn candidates(&self) -> usize {
        self.candidates
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        self.row_sets
            .iter()
            .all(|r| chosen.iter().any(|&c| r.contains(c)))
    }

    fn check_feasible(&self) -> Result<(), SolveError> {
        match self.row_sets.iter().position(Bits::is_empty) {
            Some(r) => Err(SolveError::Infeasible(r)),
            None => Ok(()),
        }
    }

    /// Repeatedly takes the candidate meeting the most uncovered rows,
    /// smallest index on ties. Returned sorted.
    pub fn greedy(&self) -> Result<Vec<usize>, SolveError> {
        self.check_feasible()?;
        let mut uncovered = Bits::full(self.rows());
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let best = (0..self.candidates)
                .max_by_key(|&c| (self.col_sets[c].and_count(&uncovered), Reverse(c)))
                .expect("feasible rows have candidates");
            chosen.push(best);
            uncovered = uncovered.and_not(&self.col_sets[best]);
        }
        chosen.sort_unstable();
        Ok(chosen)
    }

    /// Lexicographically smallest minimum cover, by branch and bound.
    pub fn exact(&self, budget: u64) -> Result<Vec<usize>, SolveError> {
        let greedy = self.greedy()?;
        let mut search = Search {
            problem: self,
            nodes: 0,
            budget,
        };
        let all_rows = Bits::full(self.rows());
        let all_cands = Bits::full(self.candidates);
        let exhausted = |_| SolveError::Budget(greedy.clone());
        let lower = search.packing_bound(&all_rows, &all_cands);
        let mut k = lower;
        while k < greedy.len() {
            if search.feasible(&all_rows, &all_cands, k).map_err(exhausted)? {
                break;
            }
            k += 1;
        }
        // Fix the smallest possible candidate at each position in turn.
        let mut chosen = Vec::with_capacity(k);
        let mut uncovered = all_rows;
        let mut allowed = all_cands;
        while chosen.len() < k {
            let left = k - chosen.len() - 1;
            let mut picked = None;
            for c in allowed.iter().collect::<Vec<_>>() {
                allowed.remove(c);
                let rest = uncovered.and_not(&self.col_sets[c]);
                if search.feasible(&rest, &allowed, left).map_err(exhausted)? {
                    picked = Some((c, rest));
                    break;
                }
            }
            let (c, rest) = picked.expect("a cover of size k exists");
            chosen.push(c);
            uncovered = rest;
        }
        Ok(chosen)
    }

    /// Minimum cover by trying all subsets in order of size, then
    /// lexicographically. Exponential; a reference for small instances.
    pub fn brute_force(&self) -> Result<Vec<usize>, SolveError> {
        self.check_feasible()?;
        for size in 0..=self.candidates {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                if self.is_cover(&combo) {
                    return Ok(combo);
                }
                match (0..size).rev().find(|&i| combo[i] < self.candidates - size + i) {
                    None => break,
                    Some(i) => {
                        combo[i] += 1;
                        for j in (i + 1)..size {
                            combo[j] = combo[j - 1] + 1;
                        }
                    }
                }
            }
        }
        unreachable!("all candidates together cover every feasible row")
    }
}

impl Search<'_> {
    /// Rows with pairwise disjoint candidate sets need one pick each.
    fn packing_bound(&self, uncovered: &Bits, allowed: &Bits) -> usize {
        let mut rows: Vec<(usize, usize)> = uncovered
            .iter()
            .map(|r| (self.problem.row_sets[r].and_count(allowed), r))
            .collect();
        rows.sort_unstable();
        let mut used = Bits::new(self.problem.candidates);
        let mut count = 0;
        for (_, r) in rows {
            let mut cands = self.problem.row_sets[r].clone();
            cands
                .words
                .iter_mut()
                .zip(&allowed.words)
                .for_each(|(a, b)| *a &= b);
            if !cands.intersects(&used) {
                used.or_assign(&cands);
                count += 1;
            }
        }
        count
    }

    /// Whether at most `k` allowed candidates cover the `uncovered` rows.
    fn feasible(&mut self, uncovered: &Bits, allowed: &Bits, k: usize) -> Result<bool, ()> {
        if uncovered.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if self.packing_bound(uncovered, allowed) > k {
            return Ok(false);
        }
        let row = uncovered
            .iter()
            .min_by_key(|&r| (self.problem.row_sets[r].and_count(allowed), r))
            .expect("non-empty");
        let mut cands: Vec<usize> = self.problem.row_sets[row]
            .iter()
            .filter(|&c| allowed.contains(c))
            .collect();
        if cands.is_empty() {
            return Ok(false);
        }
        cands.sort_by_key(|&c| (Reverse(self.problem.col_sets[c].and_count(uncovered)), c));
        let mut allowed = allowed.clone();
        for c in cands {
            allowed.remove(c);
            let rest = uncovered.and_not(&self.problem.col_sets[c]);
            if self.feasible(&rest, &allowed, k - 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_examples() {
        let p = HittingSet::new(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(p.exact(1000).unwrap(), vec![0, 2]);
        assert_eq!(p.brute_force().unwrap(), vec![0, 2]);
        assert_eq!(p.greedy().unwrap().len(), 2);
        let empty = HittingSet::new(3, &[]);
        assert_eq!(empty.exact(10).unwrap(), Vec::<usize>::new());
        assert_eq!(empty.brute_force().unwrap(), Vec::<usize>::new());
        let bad = HittingSet::new(2, &[vec![0], vec![]]);
        assert_eq!(bad.exact(10), Err(SolveError::Infeasible(1)));
    }

    #[test]
    fn exact_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let cands = rng.gen_range(1..10);
            let rows: Vec<Vec<usize>> = (0..rng.gen_range(0..12))
                .map(|_| {
                    let mut r: Vec<usize> = (0..cands).filter(|_| rng.gen_bool(0.3)).collect();
                    if r.is_empty() {
                        r.push(rng.gen_range(0..cands));
                    }
                    r
                })
                .collect();
            let p = HittingSet::new(cands, &rows);
            let exact = p.exact(1_000_000).unwrap();
            assert_eq!(exact, p.brute_force().unwrap(), "{rows:?}");
            assert!(p.greedy().unwrap().len() >= exact.len());
        }
    }

    #[test]
    fn budget_is_reported() {
        let rows: Vec<Vec<usize>> = (0..30).map(|i| vec![i, (i + 1) % 30, (i + 7) % 30]).collect();
        let p = HittingSet::new(30, &rows);
        match p.exact(3) {
            Err(SolveError::Budget(best)) => assert!(p.is_cover(&best)),
            other => panic!("{other:?}"),
        }
    }
}
