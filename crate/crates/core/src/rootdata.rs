//! The A-infinity alphabet of odd integers with the involution k -> -k,
//! its Cartan pairing, dimension vectors, roots, and the theta-Kostant
//! partition function.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("letter {0} is not an odd integer")]
    EvenLetter(i64),
    #[error("cannot parse {input:?} at position {pos}: {msg}")]
    Parse { input: String, pos: usize, msg: String },
}

/// A simple root alpha_k, identified with the odd integer k.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(k: i64) -> Result<Self, RootError> {
        if k.rem_euclid(2) != 1 || k.abs() > i32::MAX as i64 {
            return Err(RootError::EvenLetter(k));
        }
        Ok(Letter(k as i32))
    }

    /// Panics on even input; for literals in code and tests.
    pub fn of(k: i32) -> Self {
        assert!(k.rem_euclid(2) == 1, "letter {k} is not odd");
        Letter(k)
    }

    pub fn k(self) -> i32 {
        self.0
    }

    pub fn theta(self) -> Self {
        Letter(-self.0)
    }

    /// Letters with |k| <= bound, ascending.
    pub fn window(bound: i32) -> Vec<Letter> {
        let b = if bound % 2 == 0 { bound - 1 } else { bound };
        (-b..=b).step_by(2).map(Letter).collect()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

pub fn theta(i: Letter) -> Letter {
    i.theta()
}

/// The symmetric A-infinity Cartan matrix: 2 on the diagonal, -1 for
/// neighbours k, k +- 2, and 0 otherwise.
pub fn cartan(i: Letter, j: Letter) -> i64 {
    match (i.0 as i64 - j.0 as i64).abs() {
        0 => 2,
        2 => -1,
        _ => 0,
    }
}

/// A finitely supported vector in N[J].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DimVector {
    mult: BTreeMap<Letter, u32>,
}

impl DimVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Letter, u32)>>(pairs: I) -> Self {
        let mut v = Self::zero();
        for (l, m) in pairs {
            v.add_letter(l, m);
        }
        v
    }

    pub fn letter(i: Letter) -> Self {
        Self::from_pairs([(i, 1)])
    }

    pub fn add_letter(&mut self, i: Letter, m: u32) {
        if m > 0 {
            *self.mult.entry(i).or_insert(0) += m;
        }
    }

    pub fn get(&self, i: Letter) -> u32 {
        self.mult.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, u32)> + '_ {
        self.mult.iter().map(|(l, m)| (*l, *m))
    }

    pub fn support(&self) -> Vec<Letter> {
        self.mult.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// |beta| = total multiplicity.
    pub fn height(&self) -> u32 {
        self.mult.values().sum()
    }

    /// |beta|_theta = |beta| / 2 for a self-dual vector.
    pub fn theta_height(&self) -> u32 {
        self.height() / 2
    }

    pub fn theta_vec(&self) -> Self {
        Self::from_pairs(self.iter().map(|(l, m)| (l.theta(), m)))
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.theta_vec()
    }

    /// beta + theta(beta).
    pub fn symmetrize(&self) -> Self {
        self + &self.theta_vec()
    }

    pub fn dot(&self, other: &Self) -> i64 {
        let mut s = 0;
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                s += cartan(i, j) * a as i64 * b as i64;
            }
        }
        s
    }

    pub fn dot_letter(&self, j: Letter) -> i64 {
        self.iter().map(|(i, a)| cartan(i, j) * a as i64).sum()
    }

    /// Componentwise `self - other`, or `None` if negative somewhere.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (l, m) in other.iter() {
            let have = out.get(l);
            if have < m {
                return None;
            }
            if have == m {
                out.mult.remove(&l);
            } else {
                out.mult.insert(l, have - m);
            }
        }
        Some(out)
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.iter().all(|(l, m)| self.get(l) >= m)
    }
}

impl std::ops::Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        let mut out = self.clone();
        for (l, m) in rhs.iter() {
            out.add_letter(l, m);
        }
        out
    }
}

/// N(beta) = (beta . beta - sum_i c_i (i . i)) / 2.
pub fn n_of(beta: &DimVector) -> i64 {
    let diag: i64 = beta.iter().map(|(_, m)| 2 * m as i64).sum();
    (beta.dot(beta) - diag) / 2
}

impl fmt::Display for DimVector {
    /// Text form `k:m,...`, letters descending by value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .mult
            .iter()
            .rev()
            .map(|(l, m)| format!("{}:{}", l.0, m))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses a signed integer starting at byte `start`; returns value and end.
pub(crate) fn parse_int(s: &str, start: usize) -> Option<(i64, usize)> {
    let b = s.as_bytes();
    let mut i = start;
    if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
        i += 1;
    }
    let ds = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    if i == ds {
        return None;
    }
    s[start..i].parse().ok().map(|v| (v, i))
}

impl FromStr for DimVector {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |pos: usize, msg: &str| RootError::Parse {
            input: s.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let mut v = DimVector::zero();
        let t = s.trim_end();
        if t.trim().is_empty() || t.trim() == "0" {
            return Ok(v);
        }
        let mut i = 0;
        let b = t.as_bytes();
        loop {
            while i < b.len() && b[i] == b' ' {
                i += 1;
            }
            let (k, e) = parse_int(t, i).ok_or_else(|| err(i, "expected letter"))?;
            let letter = Letter::new(k).map_err(|_| err(i, "letter must be odd"))?;
            i = e;
            if i >= b.len() || b[i] != b':' {
                return Err(err(i, "expected ':'"));
            }
            i += 1;
            let (m, e) = parse_int(t, i).ok_or_else(|| err(i, "expected multiplicity"))?;
            if m < 0 || m > u32::MAX as i64 {
                return Err(err(i, "multiplicity must be nonnegative"));
            }
            v.add_letter(letter, m as u32);
            i = e;
            if i == b.len() {
                return Ok(v);
            }
            if b[i] != b',' {
                return Err(err(i, "expected ','"));
            }
            i += 1;
        }
    }
}

impl Serialize for DimVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DimVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Positive root beta_{lo,hi} = alpha_lo + alpha_{lo+2} + ... + alpha_hi of A-infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootA {
    pub lo: Letter,
    pub hi: Letter,
}

impl RootA {
    pub fn new(lo: Letter, hi: Letter) -> Self {
        assert!(lo <= hi);
        RootA { lo, hi }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (self.lo.0..=self.hi.0).step_by(2).map(Letter)
    }

    pub fn weight(&self) -> DimVector {
        DimVector::from_pairs(self.letters().map(|l| (l, 1)))
    }

    pub fn len(&self) -> usize {
        ((self.hi.0 - self.lo.0) / 2 + 1) as usize
    }

    /// theta(beta_{lo,hi}) = beta_{-hi,-lo}.
    pub fn theta(&self) -> Self {
        RootA::new(self.hi.theta(), self.lo.theta())
    }

    pub fn is_symmetric(&self) -> bool {
        self.lo.0 + self.hi.0 == 0
    }
}

/// All A-roots whose support lies in `letters`.
pub fn roots_a_in(letters: &[Letter]) -> Vec<RootA> {
    let set: std::collections::BTreeSet<Letter> = letters.iter().copied().collect();
    let mut out = Vec::new();
    for &lo in &set {
        let mut hi = lo;
        while set.contains(&hi) {
            out.push(RootA::new(lo, hi));
            hi = Letter(hi.0 + 2);
        }
    }
    out
}

/// A positive root of type BC-infinity, stored through the A-root
/// representative with lo + hi >= 0 (the weight of the matching
/// theta-Lyndon word). Its weight is the symmetrization of the A-root.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootBC {
    pub rep: RootA,
}

impl RootBC {
    pub fn weight(&self) -> DimVector {
        self.rep.weight().symmetrize()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rep.is_symmetric()
    }
}

/// BC roots whose weight fits inside `beta`.
pub fn roots_bc_below(beta: &DimVector) -> Vec<RootBC> {
    roots_a_in(&beta.support())
        .into_iter()
        .filter(|r| r.lo.0 + r.hi.0 >= 0)
        .map(|rep| RootBC { rep })
        .filter(|r| beta.contains(&r.weight()))
        .collect()
}

/// Number of ways to write beta as a multiset sum of BC roots.
pub fn tkpf(beta: &DimVector) -> u64 {
    let roots: Vec<DimVector> = roots_bc_below(beta).iter().map(|r| r.weight()).collect();
    let mut memo = HashMap::new();
    count_partitions(beta, &roots, 0, &mut memo)
}

fn count_partitions(
    rest: &DimVector,
    roots: &[DimVector],
    from: usize,
    memo: &mut HashMap<(DimVector, usize), u64>,
) -> u64 {
    if rest.is_zero() {
        return 1;
    }
    if from == roots.len() {
        return 0;
    }
    let key = (rest.clone(), from);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = count_partitions(rest, roots, from + 1, memo);
    let mut cur = rest.clone();
    while let Some(next) = cur.checked_sub(&roots[from]) {
        total += count_partitions(&next, roots, from + 1, memo);
        cur = next;
    }
    memo.insert(key, total);
    total
}

/// Every self-dual vector with |beta|_theta <= max over the letters 1, 3, ..., bound.
pub fn self_dual_weights(bound: i32, max: u32) -> Vec<DimVector> {
    let pos: Vec<Letter> = Letter::window(bound).into_iter().filter(|l| l.0 > 0).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; pos.len()];
    fn rec(i: usize, left: u32, pos: &[Letter], cur: &mut Vec<u32>, out: &mut Vec<DimVector>) {
        if i == pos.len() {
            out.push(DimVector::from_pairs(
                pos.iter()
                    .zip(cur.iter())
                    .flat_map(|(l, m)| [(*l, *m), (l.theta(), *m)]),
            ));
            return;
        }
        for m in 0..=left {
            cur[i] = m;
            rec(i + 1, left - m, pos, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max, &pos, &mut cur, &mut out);
    out.sort_by_key(|b| (b.theta_height(), b.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: i32) -> Letter {
        Letter::of(k)
    }

    fn dv(s: &str) -> DimVector {
        s.parse().unwrap()
    }

    #[test]
    fn involution() {
        assert_eq!(l(3).theta(), l(-3));
        assert_eq!(dv("1:1,-1:1").theta_vec(), dv("1:1,-1:1"));
        assert_eq!(dv("1:1,3:2").theta_vec(), dv("-1:1,-3:2"));
    }

    #[test]
    fn pairing() {
        assert_eq!(cartan(l(1), l(1)), 2);
        assert_eq!(cartan(l(1), l(3)), -1);
        assert_eq!(cartan(l(-1), l(1)), -1);
        assert_eq!(cartan(l(-1), l(5)), 0);
        for &i in &Letter::window(9) {
            for &j in &Letter::window(9) {
                assert_eq!(cartan(i, j), cartan(j, i));
                assert_eq!(cartan(i.theta(), j.theta()), cartan(i, j));
            }
        }
    }

    #[test]
    fn n_values() {
        assert_eq!(n_of(&dv("1:1")), 0);
        assert_eq!(n_of(&dv("1:1,3:1")), -1);
        assert_eq!(n_of(&dv("1:2")), 2);
    }

    #[test]
    fn tkpf_values() {
        assert_eq!(tkpf(&DimVector::zero()), 1);
        assert_eq!(tkpf(&dv("1:1,-1:1")), 1);
        assert_eq!(tkpf(&dv("1:2,-1:2")), 2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            "1:2,2:1".parse::<DimVector>(),
            Err(RootError::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "1:2;3:1".parse::<DimVector>(),
            Err(RootError::Parse { pos: 3, .. })
        ));
        assert_eq!(dv("1:2,-1:2").to_string(), "1:2,-1:2");
    }
}
