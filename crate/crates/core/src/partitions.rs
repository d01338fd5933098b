//! Partition types `lambda` in `Lambda_{l, m+1}` and the combinatorics built on
//! them.
//!
//! Parts are stored weakly increasing, `1 <= lambda_1 <= ... <= lambda_l <= cap`,
//! which is the order the jet-membership and dimension formulas index by.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    parts: Vec<u32>,
    cap: u32,
}

impl Partition {
    /// Sorts `parts` and checks `1 <= part <= cap`.
    pub fn new(mut parts: Vec<u32>, cap: u32) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Instance("partition cap must be at least 1".into()));
        }
        parts.sort_unstable();
        if let Some(&bad) = parts.iter().find(|&&x| x == 0 || x > cap) {
            return Err(Error::Instance(format!(
                "part {bad} outside [1, {cap}]"
            )));
        }
        Ok(Partition { parts, cap })
    }

    pub fn empty(cap: u32) -> Self {
        Partition {
            parts: Vec::new(),
            cap,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// The length `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// Largest part `lambda_l`, 0 when empty.
    pub fn largest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// `n_i`: number of parts `>= i`.
    pub fn n(&self, i: u32) -> usize {
        debug_assert!(i >= 1);
        self.parts.len() - self.parts.partition_point(|&x| x < i)
    }

    /// `r_i`: number of parts equal to `i`.
    pub fn r(&self, i: u32) -> usize {
        self.n(i) - self.n(i + 1)
    }

    /// `lambda-bar` with parts `min(lambda_k, i)` and cap `i`.
    pub fn truncate(&self, i: u32) -> Result<Partition> {
        if i == 0 {
            return Err(Error::Range("truncation level must be at least 1".into()));
        }
        Ok(Partition {
            parts: self.parts.iter().map(|&x| x.min(i)).collect(),
            cap: i,
        })
    }

    fn check_cap(&self, m: u32) -> Result<()> {
        if self.cap != m + 1 {
            return Err(Error::Instance(format!(
                "partition cap {} does not match jet level m = {m}",
                self.cap
            )));
        }
        Ok(())
    }

    /// Membership of an m-jet of this type in the theta divisor's jet scheme:
    /// `sum lambda_i >= m + 1`.
    pub fn theta_jet_criterion(&self, m: u32) -> Result<bool> {
        self.check_cap(m)?;
        let target = m as u64 + 1;
        let direct = self.sum() >= target;
        let by_r: u64 = (1..=self.cap).map(|j| self.r(j) as u64 * j as u64).sum();
        let by_n: u64 = (1..=self.cap).map(|k| self.n(k) as u64).sum();
        assert_eq!(self.sum(), by_r, "sum lambda_i != sum j*r_j on {self}");
        assert_eq!(self.sum(), by_n, "sum lambda_i != sum n_k on {self}");
        Ok(direct)
    }

    /// Membership in the jet scheme of `W^r_d`: the `l - r` smallest parts
    /// sum to at least `m + 1`.
    pub fn wrd_jet_criterion(&self, m: u32, r: usize) -> Result<bool> {
        self.check_cap(m)?;
        let l = self.len();
        if r > l {
            return Err(Error::Instance(format!("r = {r} exceeds length {l}")));
        }
        let target = m as u64 + 1;
        let head = &self.parts[..l - r];
        let direct: u64 = head.iter().map(|&x| x as u64).sum();
        // Telescoped form with lambda_0 = 0.
        let mut prev = 0u64;
        let mut telescoped = 0u64;
        for (idx, &x) in head.iter().enumerate() {
            let i = idx + 1;
            telescoped += (l - i - r + 1) as u64 * (x as u64 - prev);
            prev = x as u64;
        }
        assert_eq!(direct, telescoped, "criterion forms disagree on {self}, r = {r}");
        Ok(direct >= target)
    }

    /// `h^0` at level `j`: `sum_{k=1}^{j+1} n_k`.
    pub fn h0_at(&self, j: u32) -> Result<u64> {
        if j >= self.cap {
            return Err(Error::Range(format!(
                "level {j} outside [0, {}]",
                self.cap - 1
            )));
        }
        Ok((1..=j + 1).map(|k| self.n(k) as u64).sum())
    }

    /// Weak-flag signature `kappa_j = n_{j+1}` for `1 <= j <= cap - 1`.
    pub fn signature(&self) -> Signature {
        Signature((1..self.cap).map(|j| self.n(j + 1)).collect())
    }

    /// Both sides of `sum_{i<=lambda_l} n_i^2 = sum_i (l-i+1)^2 (lambda_i - lambda_{i-1})`.
    pub fn square_identity(&self) -> (u64, u64) {
        let l = self.len() as u64;
        let lhs = (1..=self.largest())
            .map(|i| (self.n(i) as u64).pow(2))
            .sum();
        let mut prev = 0u64;
        let mut rhs = 0u64;
        for (idx, &x) in self.parts.iter().enumerate() {
            rhs += (l - idx as u64).pow(2) * (x as u64 - prev);
            prev = x as u64;
        }
        (lhs, rhs)
    }
}

impl fmt::Display for Partition {
    /// Literal form `(a,b,c)@cap`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")@{}", self.cap)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{msg} in partition literal {s:?}"),
        };
        let s = s.trim();
        let (body, cap) = s.split_once('@').ok_or_else(|| bad("missing '@cap'"))?;
        let cap: u32 = cap.trim().parse().map_err(|_| bad("bad cap"))?;
        let body = body
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let parts = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad("bad part")))
                .collect::<Result<Vec<_>>>()?
        };
        Partition::new(parts, cap)
    }
}

/// A weakly decreasing sequence `kappa_1 >= kappa_2 >= ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Instance(format!(
                "signature {values:?} is not weakly decreasing"
            )));
        }
        Ok(Signature(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `kappa_j` (1-based); zero past the end.
    pub fn get(&self, j: usize) -> usize {
        j.checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Checks `kappa_j <= n_{j+1}(lambda)` for every stored entry.
    pub fn bounded_by(&self, lambda: &Partition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &k)| k <= lambda.n(i as u32 + 2))
    }
}

/// Every partition of length `l` with parts in `[1, cap]`, lexicographic.
pub fn all_partitions(l: usize, cap: u32) -> PartitionIter {
    PartitionIter {
        cap,
        current: if cap == 0 && l > 0 {
            None
        } else {
            Some(vec![1; l])
        },
    }
}

/// Restartable lexicographic walk over weakly increasing sequences.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    cap: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition {
            parts: cur.clone(),
            cap: self.cap,
        };
        // Advance: bump the rightmost part below cap, reset the tail to it.
        let mut next = cur;
        if let Some(pos) = next.iter().rposition(|&x| x < self.cap) {
            let v = next[pos] + 1;
            for x in &mut next[pos..] {
                *x = v;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// The types in `Lambda_{l, m+1}` whose jets lie in `W^r_d`, lexicographic.
pub fn enumerate_admissible(
    l: usize,
    r: usize,
    m: u32,
) -> Result<impl Iterator<Item = Partition>> {
    if r >= l {
        return Err(Error::Instance(format!("need r < l, got r = {r}, l = {l}")));
    }
    Ok(all_partitions(l, m + 1).filter(move |p| {
        p.wrd_jet_criterion(m, r)
            .expect("cap matches by construction")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32], cap: u32) -> Partition {
        Partition::new(parts.to_vec(), cap).unwrap()
    }

    #[test]
    fn n_and_r_counts() {
        let p = part(&[1, 1, 2], 3);
        assert_eq!(p.n(1), 3);
        assert_eq!(p.n(2), 1);
        assert_eq!(part(&[1, 2, 2], 3).n(3), 0);
        assert_eq!(p.r(1), 2);
        assert_eq!(p.r(2), 1);
        assert_eq!(p.r(4), 0);
        assert_eq!(p.r(17), 0);
    }

    #[test]
    fn truncation() {
        assert_eq!(part(&[1, 3, 3], 3).truncate(2).unwrap(), part(&[1, 2, 2], 2));
        let p = part(&[1, 2, 4], 4);
        assert_eq!(p.truncate(4).unwrap(), p);
        assert_eq!(part(&[2], 2).truncate(1).unwrap(), part(&[1], 1));
    }

    #[test]
    fn theta_criterion() {
        assert!(part(&[1, 1], 2).theta_jet_criterion(1).unwrap());
        assert!(!Partition::empty(5).theta_jet_criterion(4).unwrap());
        assert!(!part(&[1], 2).theta_jet_criterion(1).unwrap());
        assert!(matches!(
            part(&[1], 2).theta_jet_criterion(2),
            Err(Error::Instance(_))
        ));
    }

    #[test]
    fn wrd_criterion() {
        assert!(part(&[1, 2, 2], 3).wrd_jet_criterion(2, 1).unwrap());
        assert!(!part(&[1, 1, 3], 5).wrd_jet_criterion(4, 1).unwrap());
        for p in all_partitions(3, 4) {
            assert_eq!(
                p.wrd_jet_criterion(3, 0).unwrap(),
                p.theta_jet_criterion(3).unwrap()
            );
        }
        assert!(matches!(
            part(&[1], 2).wrd_jet_criterion(1, 2),
            Err(Error::Instance(_))
        ));
    }

    #[test]
    fn h0_levels() {
        assert_eq!(part(&[1, 1, 2], 3).h0_at(0).unwrap(), 3);
        assert_eq!(part(&[2], 2).h0_at(1).unwrap(), 2);
        let e = Partition::empty(4);
        for j in 0..4 {
            assert_eq!(e.h0_at(j).unwrap(), 0);
        }
        assert!(e.h0_at(4).is_err());
    }

    #[test]
    fn signatures() {
        assert_eq!(part(&[1, 2, 2], 3).signature().values(), &[2, 0]);
        assert_eq!(part(&[1, 1, 1], 4).signature().values(), &[0, 0, 0]);
        assert_eq!(part(&[3, 3], 3).signature().values(), &[2, 2]);
        assert!(Signature::new(vec![1, 2]).is_err());
    }

    #[test]
    fn square_identity_examples() {
        assert_eq!(part(&[1, 2, 2], 3).square_identity(), (13, 13));
        assert_eq!(part(&[1], 1).square_identity(), (1, 1));
        for k in 1..10 {
            assert_eq!(part(&[k], k).square_identity(), (k as u64, k as u64));
        }
    }

    #[test]
    fn admissible_enumeration() {
        let got: Vec<_> = enumerate_admissible(1, 0, 1).unwrap().collect();
        assert_eq!(got, vec![part(&[2], 2)]);
        let got: Vec<_> = enumerate_admissible(2, 0, 1).unwrap().collect();
        assert_eq!(
            got,
            vec![part(&[1, 1], 2), part(&[1, 2], 2), part(&[2, 2], 2)]
        );
        let got: Vec<_> = enumerate_admissible(1, 0, 0).unwrap().collect();
        assert_eq!(got, vec![part(&[1], 1)]);
        assert!(enumerate_admissible(2, 2, 3).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        for l in 1..=4usize {
            for m in 0..=4u32 {
                for r in 0..l {
                    // Independent brute force over all l-tuples in [1, m+1]^l.
                    let cap = m + 1;
                    let mut expected = Vec::new();
                    let total = (cap as usize).pow(l as u32);
                    for code in 0..total {
                        let mut c = code;
                        let mut v = Vec::with_capacity(l);
                        for _ in 0..l {
                            v.push((c % cap as usize) as u32 + 1);
                            c /= cap as usize;
                        }
                        if v.windows(2).any(|w| w[0] > w[1]) {
                            continue;
                        }
                        let head: u32 = v[..l - r].iter().sum();
                        if head >= cap {
                            expected.push(v);
                        }
                    }
                    expected.sort();
                    let got: Vec<Vec<u32>> = enumerate_admissible(l, r, m)
                        .unwrap()
                        .map(|p| p.parts().to_vec())
                        .collect();
                    assert_eq!(got, expected, "l={l} r={r} m={m}");
                }
            }
        }
    }

    #[test]
    fn literal_round_trip() {
        for s in ["(1,2,2)@3", "()@4", "(5)@5"] {
            assert_eq!(s.parse::<Partition>().unwrap().to_string(), s);
        }
        assert!("(0,1)@2".parse::<Partition>().is_err());
        assert!("(1,2)".parse::<Partition>().is_err());
    }
}
