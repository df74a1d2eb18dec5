//! Words in the letters alpha_k, the anti-lexicographic and primed orders,
//! signed permutations, Lyndon factorizations, good and theta-good words.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rootdata::{parse_int, roots_a_in, roots_bc_below, DimVector, Letter, RootA, RootError};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ks(ks: &[i32]) -> Self {
        Word(ks.iter().map(|&k| Letter::of(k)).collect())
    }

    pub fn letter(i: Letter) -> Self {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, i: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(i);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn weight(&self) -> DimVector {
        DimVector::from_pairs(self.0.iter().map(|&l| (l, 1)))
    }

    /// Sum of alpha + theta(alpha) over the letters.
    pub fn theta_weight(&self) -> DimVector {
        self.weight().symmetrize()
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "({self})")
        }
    }
}

impl FromStr for Word {
    type Err = RootError;

    /// Comma-separated odd integers; the empty string and `()` give the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Word::empty());
        }
        let err = |pos: usize, msg: &str| RootError::Parse {
            input: s.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let b = s.as_bytes();
        let mut i = 0;
        let mut out = Vec::new();
        loop {
            while i < b.len() && b[i] == b' ' {
                i += 1;
            }
            let (k, e) = parse_int(s, i).ok_or_else(|| err(i, "expected letter"))?;
            out.push(Letter::new(k).map_err(|_| err(i, "letter must be odd"))?);
            i = e;
            while i < b.len() && b[i] == b' ' {
                i += 1;
            }
            if i == b.len() {
                return Ok(Word(out));
            }
            if b[i] != b',' {
                return Err(err(i, "expected ','"));
            }
            i += 1;
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// Right-to-left scan, smaller letter wins, a shorter tail is smaller.
    AntiLex,
    /// Left-to-right scan with the reversed letter order, a prefix is smaller.
    LexPrime,
}

impl Order {
    pub fn tag(self) -> &'static str {
        match self {
            Order::AntiLex => "antilex-r2l-v1",
            Order::LexPrime => "lexprime-l2r-v1",
        }
    }
}

pub fn compare(order: Order, a: &Word, b: &Word) -> Ordering {
    match order {
        Order::AntiLex => antilex_cmp(a, b),
        Order::LexPrime => lexprime_cmp(a, b),
    }
}

pub fn antilex_cmp(a: &Word, b: &Word) -> Ordering {
    for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn lexprime_cmp(a: &Word, b: &Word) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        antilex_cmp(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Signed permutation of {+-1, ..., +-n}; `images[p - 1] = w(p)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedPerm {
    pub images: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn new(images: Vec<i32>) -> Self {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x != 0 && x.abs() <= n && !seen[(x.abs() - 1) as usize]);
            seen[(x.abs() - 1) as usize] = true;
        }
        SignedPerm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(p) for nonzero p in [-n, n].
    pub fn at(&self, p: i32) -> i32 {
        if p > 0 {
            self.images[(p - 1) as usize]
        } else {
            -self.images[(-p - 1) as usize]
        }
    }

    /// Simple reflection s_k: s_0 negates 1, s_k swaps k and k+1.
    pub fn simple(n: usize, k: usize) -> Self {
        let mut w = Self::identity(n);
        if k == 0 {
            w.images[0] = -1;
        } else {
            w.images.swap(k - 1, k);
        }
        w
    }

    /// The longest element, p -> -p.
    pub fn longest(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).map(|p| -p).collect(),
        }
    }

    /// theta_w: l -> -(n - l + 1).
    pub fn theta_w(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i32).map(|l| -(n as i32 - l + 1)).collect(),
        }
    }

    /// (self * other)(p) = self(other(p)).
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm {
            images: other.images.iter().map(|&p| self.at(p)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            let p = i as i32 + 1;
            inv[(x.abs() - 1) as usize] = if x > 0 { p } else { -p };
        }
        SignedPerm { images: inv }
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// Coxeter length in type B: inversions + negatives + negative-sum pairs.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut l = w.iter().filter(|&&x| x < 0).count();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
                if w[i] + w[j] < 0 {
                    l += 1;
                }
            }
        }
        l
    }

    /// Lexicographically least reduced word, as generator indices
    /// k_1 ... k_l with self = s_{k_1} ... s_{k_l}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut out = Vec::new();
        while w.length() > 0 {
            let k = (0..n)
                .find(|&k| Self::simple(n, k).compose(&w).length() < w.length())
                .expect("non-identity element has a left descent");
            out.push(k);
            w = Self::simple(n, k).compose(&w);
        }
        out
    }

    /// All 2^n n! elements.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u32 << n) {
                out.push(SignedPerm {
                    images: perm
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| if mask >> i & 1 == 1 { -(p as i32) } else { p as i32 })
                        .collect(),
                });
            }
        }
        out
    }
}

/// All permutations of 1..=n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// (w . nu)_l = nu_{w^-1(l)} with nu_{-k} = theta(nu_k).
pub fn weyl_act(w: &SignedPerm, nu: &Word) -> Word {
    assert_eq!(w.n(), nu.len());
    let mut out = vec![Letter::of(1); nu.len()];
    for (p, &letter) in nu.0.iter().enumerate() {
        let t = w.images[p];
        out[(t.abs() - 1) as usize] = if t > 0 { letter } else { letter.theta() };
    }
    Word(out)
}

/// theta(nu_n) ... theta(nu_1).
pub fn theta_reverse(nu: &Word) -> Word {
    Word(nu.0.iter().rev().map(|l| l.theta()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetKind {
    Sym,
    Hyperoct,
}

/// Shortest left coset representatives of S_m x S_k in S_{m+k}
/// (kind `Sym`) or of W_m x S_k in W_{m+k} (kind `Hyperoct`).
/// Such a representative keeps the first block positive and increasing,
/// and is increasing as a signed sequence on the second block.
pub fn coset_reps(kind: CosetKind, m: usize, k: usize) -> Vec<SignedPerm> {
    let n = m + k;
    let mut out = Vec::new();
    for first in combinations(n, m) {
        let rest: Vec<i32> = (1..=n as i32).filter(|p| !first.contains(&(*p as usize))).collect();
        let masks = match kind {
            CosetKind::Sym => 1u32,
            CosetKind::Hyperoct => 1u32 << k,
        };
        for mask in 0..masks {
            let mut second: Vec<i32> = rest
                .iter()
                .enumerate()
                .map(|(i, &p)| if mask >> i & 1 == 1 { -p } else { p })
                .collect();
            second.sort_unstable();
            let mut images: Vec<i32> = first.iter().map(|&p| p as i32).collect();
            images.extend(second);
            out.push(SignedPerm { images });
        }
    }
    out
}

/// Increasing m-subsets of 1..=n in lexicographic order.
pub fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for p in start..=n {
            if n - p + 1 < m - cur.len() {
                break;
            }
            cur.push(p);
            rec(p + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(1, n, m, &mut cur, &mut out);
    out
}

/// Smaller than each of its proper nonempty left factors.
pub fn is_lyndon(nu: &Word) -> bool {
    !nu.is_empty() && (1..nu.len()).all(|i| *nu < nu.prefix(i))
}

/// Lyndon factorization, factors listed left to right as they occur in
/// the word. They weakly increase, so the last entry is the largest
/// factor nu<1>.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization {
    pub factors: Vec<Word>,
}

impl LyndonFactorization {
    /// nu<i>, counting from the right starting at 1.
    pub fn indexed(&self, i: usize) -> &Word {
        &self.factors[self.factors.len() - i]
    }

    /// Runs of equal factors as (factor, multiplicity), left to right.
    pub fn runs(&self) -> Vec<(Word, usize)> {
        let mut out: Vec<(Word, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((w, c)) if w == f => *c += 1,
                _ => out.push((f.clone(), 1)),
            }
        }
        out
    }
}

/// Duval's algorithm run on the reversed word.
pub fn lyndon_factorize(nu: &Word) -> LyndonFactorization {
    let s: Vec<Letter> = nu.0.iter().rev().copied().collect();
    let n = s.len();
    let mut rev_factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            rev_factors.push(Word(s[i..i + j - k].iter().rev().copied().collect()));
            i += j - k;
        }
    }
    rev_factors.reverse();
    LyndonFactorization { factors: rev_factors }
}

/// (nu_(1), nu_(2)) with nu = nu_(1) nu_(2) and nu_(2) the longest proper
/// Lyndon right factor. `None` for words of length < 2.
pub fn standard_factorize(nu: &Word) -> Option<(Word, Word)> {
    (1..nu.len())
        .find(|&i| is_lyndon(&nu.suffix_from(i)))
        .map(|i| (nu.prefix(i), nu.suffix_from(i)))
}

/// The descending word alpha_hi alpha_{hi-2} ... alpha_lo.
pub fn good_lyndon_of(root: &RootA) -> Word {
    Word(root.letters().collect::<Vec<_>>().into_iter().rev().collect())
}

pub fn is_good_lyndon(nu: &Word) -> bool {
    !nu.is_empty() && nu.0.windows(2).all(|w| w[0].k() - w[1].k() == 2)
}

/// Root of a good Lyndon word.
pub fn root_of_good_lyndon(nu: &Word) -> Option<RootA> {
    is_good_lyndon(nu).then(|| RootA::new(nu.last().unwrap(), nu.first().unwrap()))
}

pub fn good_lyndon_words(beta: &DimVector) -> Vec<Word> {
    let mut out: Vec<Word> = roots_a_in(&beta.support())
        .into_iter()
        .filter(|r| r.weight() == *beta)
        .map(|r| good_lyndon_of(&r))
        .collect();
    out.sort();
    out
}

pub fn is_good(nu: &Word) -> bool {
    lyndon_factorize(nu).factors.iter().all(is_good_lyndon)
}

/// All multisets (as weakly increasing index lists) of the given weights summing to `beta`.
fn multisets(beta: &DimVector, parts: &[DimVector]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        rest: &DimVector,
        from: usize,
        parts: &[DimVector],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        for i in from..parts.len() {
            if let Some(next) = rest.checked_sub(&parts[i]) {
                cur.push(i);
                rec(&next, i, parts, cur, out);
                cur.pop();
            }
        }
    }
    rec(beta, 0, parts, &mut cur, &mut out);
    out
}

/// Concatenate factors so that they increase left to right.
fn assemble(mut factors: Vec<Word>) -> Word {
    factors.sort();
    factors.iter().fold(Word::empty(), |acc, f| acc.concat(f))
}

/// Good words of weight beta: products of good Lyndon words.
pub fn good_words(beta: &DimVector) -> Vec<Word> {
    let roots = roots_a_in(&beta.support());
    let weights: Vec<DimVector> = roots.iter().map(|r| r.weight()).collect();
    let mut out: Vec<Word> = multisets(beta, &weights)
        .into_iter()
        .map(|ms| assemble(ms.iter().map(|&i| good_lyndon_of(&roots[i])).collect()))
        .collect();
    out.sort();
    out
}

pub fn is_theta_lyndon(nu: &Word) -> bool {
    is_good_lyndon(nu) && *nu >= theta_reverse(nu)
}

/// Theta-Lyndon words of theta-weight beta (at most one).
pub fn theta_lyndon_words(beta: &DimVector) -> Vec<Word> {
    roots_bc_below(beta)
        .into_iter()
        .filter(|r| r.weight() == *beta)
        .map(|r| good_lyndon_of(&r.rep))
        .collect()
}

/// Theta-good words of theta-weight beta at zero framing: products of
/// theta-Lyndon words.
pub fn theta_good_words(beta: &DimVector) -> Vec<Word> {
    let roots = roots_bc_below(beta);
    let weights: Vec<DimVector> = roots.iter().map(|r| r.weight()).collect();
    let mut out: Vec<Word> = multisets(beta, &weights)
        .into_iter()
        .map(|ms| assemble(ms.iter().map(|&i| good_lyndon_of(&roots[i].rep)).collect()))
        .collect();
    out.sort();
    out
}

pub fn is_symmetric_lyndon(nu: &Word) -> bool {
    is_theta_lyndon(nu) && theta_reverse(nu) == *nu
}

/// (nu^theta, nu_theta): the symmetric Lyndon factors and the others,
/// each kept in their original order.
pub fn split_symmetric(nu: &Word) -> (Word, Word) {
    let mut sym = Word::empty();
    let mut non = Word::empty();
    for f in lyndon_factorize(nu).factors {
        if is_symmetric_lyndon(&f) {
            sym = sym.concat(&f);
        } else {
            non = non.concat(&f);
        }
    }
    (sym, non)
}

/// A theta-good word is symmetric when all of its Lyndon factors are.
pub fn is_symmetric_word(nu: &Word) -> bool {
    split_symmetric(nu).1.is_empty()
}

/// xi_k = alpha_{2k-1} alpha_{2k-3} ... alpha_{1-2k}.
pub fn xi(k: u32) -> Word {
    let top = 2 * k as i32 - 1;
    Word((0..2 * k as i32).map(|j| Letter::of(top - 2 * j)).collect())
}

/// Every word over `alphabet` of length exactly `n`, in lexicographic index order.
pub fn all_words(alphabet: &[Letter], n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| alphabet.iter().map(move |&l| w.push(l)))
            .collect();
    }
    out
}

/// Words of ordinary weight beta (all rearrangements).
pub fn words_of_weight(beta: &DimVector) -> Vec<Word> {
    let mut out = Vec::new();
    let mut rest = beta.clone();
    fn rec(rest: &mut DimVector, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if rest.is_zero() {
            out.push(Word(cur.clone()));
            return;
        }
        for l in rest.support() {
            let one = DimVector::letter(l);
            let saved = rest.clone();
            *rest = rest.checked_sub(&one).unwrap();
            cur.push(l);
            rec(rest, cur, out);
            cur.pop();
            *rest = saved;
        }
    }
    rec(&mut rest, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Words of theta-weight beta: each position carries alpha or theta(alpha).
pub fn words_of_theta_weight(beta: &DimVector) -> Vec<Word> {
    let pos: Vec<(Letter, u32)> = beta
        .iter()
        .filter(|(l, _)| l.k() > 0)
        .collect();
    let half = DimVector::from_pairs(pos.iter().copied());
    let mut out = Vec::new();
    for base in words_of_weight(&half) {
        for mask in 0..(1u32 << base.len()) {
            out.push(Word(
                base.0
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| if mask >> i & 1 == 1 { l.theta() } else { l })
                    .collect(),
            ));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ks: &[i32]) -> Word {
        Word::from_ks(ks)
    }

    #[test]
    fn order_examples() {
        assert_eq!(antilex_cmp(&w(&[3, 1]), &w(&[1, 3])), Ordering::Less);
        assert_eq!(antilex_cmp(&w(&[3, 1]), &w(&[3])), Ordering::Less);
        assert_eq!(antilex_cmp(&w(&[5, 3]), &w(&[5, 3])), Ordering::Equal);
        assert_eq!(lexprime_cmp(&w(&[3]), &w(&[1])), Ordering::Less);
        assert_eq!(lexprime_cmp(&w(&[1]), &w(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn actions() {
        assert_eq!(theta_reverse(&w(&[1, -1])), w(&[1, -1]));
        assert_eq!(weyl_act(&SignedPerm::simple(2, 0), &w(&[1, 3])), w(&[-1, 3]));
        assert_eq!(theta_reverse(&w(&[3, 1])), w(&[-1, -3]));
        assert_eq!(weyl_act(&SignedPerm::theta_w(2), &w(&[3, 1])), w(&[-1, -3]));
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&w(&[3, 1])));
        assert!(!is_lyndon(&w(&[1, 3])));
        assert_eq!(lyndon_factorize(&w(&[1, 3])).factors, vec![w(&[1]), w(&[3])]);
        assert_eq!(lyndon_factorize(&w(&[5])).factors, vec![w(&[5])]);
        assert_eq!(standard_factorize(&w(&[5, 3, 1])), Some((w(&[5]), w(&[3, 1]))));
    }

    #[test]
    fn good_examples() {
        let b: DimVector = "1:1,3:1".parse().unwrap();
        assert_eq!(good_lyndon_words(&b), vec![w(&[3, 1])]);
        assert_eq!(good_words(&b), vec![w(&[3, 1]), w(&[1, 3])]);
        assert_eq!(good_words(&DimVector::zero()), vec![Word::empty()]);
        assert!(good_words(&"1:1,5:1".parse().unwrap()) == vec![w(&[1, 5])]);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(xi(1), w(&[1, -1]));
        assert_eq!(xi(2), w(&[3, 1, -1, -3]));
        let b: DimVector = "1:2,-1:2".parse().unwrap();
        assert_eq!(theta_good_words(&b), vec![w(&[1, -1]), w(&[1, 1])]);
        assert!(!is_theta_lyndon(&w(&[-1])));
        assert!(is_theta_lyndon(&w(&[1])));
        assert_eq!(split_symmetric(&w(&[1, -1, 3])), (w(&[1, -1]), w(&[3])));
    }

    #[test]
    fn coset_counts() {
        assert_eq!(coset_reps(CosetKind::Sym, 1, 1).len(), 2);
        assert_eq!(coset_reps(CosetKind::Hyperoct, 0, 1).len(), 2);
        assert_eq!(coset_reps(CosetKind::Hyperoct, 2, 2).len(), 24);
    }

    #[test]
    fn parse_word() {
        assert_eq!("3,1,-1".parse::<Word>().unwrap(), w(&[3, 1, -1]));
        assert!(matches!("3,2".parse::<Word>(), Err(RootError::Parse { pos: 2, .. })));
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
    }

    #[test]
    fn reduced_words_have_right_length() {
        for g in SignedPerm::all(3) {
            let rw = g.reduced_word();
            assert_eq!(rw.len(), g.length());
            let prod = rw
                .iter()
                .fold(SignedPerm::identity(3), |acc, &k| acc.compose(&SignedPerm::simple(3, k)));
            assert_eq!(prod, g);
        }
    }
}
