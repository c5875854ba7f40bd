//! Integer partitions and compositions, with the index operations used by
//! raising operators and vertex iteration.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::tpoly::TPoly;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts parts in any order; zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True iff all parts are distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let len = self.first() as usize;
        let mut conj = Vec::with_capacity(len);
        for i in 1..=len {
            conj.push(self.parts.iter().filter(|&&p| p as usize >= i).count() as u32);
        }
        Partition { parts: conj }
    }

    /// The statistic sum over columns of C(column, 2).
    pub fn epsilon(&self) -> i64 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| {
                let c = c as i64;
                c * (c - 1) / 2
            })
            .sum()
    }

    /// Product over part multiplicities k of (1-t)(1-t^2)...(1-t^k).
    pub fn c_poly(&self) -> TPoly {
        let mut out = TPoly::one();
        for k in self.multiplicities().map(|(_, k)| k) {
            for j in 1..=k {
                out = out * TPoly::one_minus_t_pow(j);
            }
        }
        out
    }

    /// Iterate over `(part value, multiplicity)` in decreasing part order.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        MultIter {
            parts: &self.parts,
            idx: 0,
        }
    }

    /// Multiplicity of a given part value.
    pub fn multiplicity(&self, value: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == value).count() as u32
    }

    /// Multiset containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .multiplicities()
            .all(|(v, k)| self.multiplicity(v) >= k)
    }

    /// Multiset difference; `None` if `other` is not contained in `self`.
    pub fn remove(&self, other: &Partition) -> Option<Partition> {
        if !self.contains(other) {
            return None;
        }
        let mut parts = self.parts.clone();
        for &v in other.parts() {
            let pos = parts.iter().position(|&p| p == v).unwrap();
            parts.remove(pos);
        }
        Some(Partition { parts })
    }

    /// Multiset union, re-sorted.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(other.parts());
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn to_composition(&self) -> Composition {
        Composition::new(self.parts.iter().map(|&p| p as i64).collect::<Vec<_>>())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.parts)
    }
}

struct MultIter<'a> {
    parts: &'a [u32],
    idx: usize,
}

impl Iterator for MultIter<'_> {
    type Item = (u32, u32);
    fn next(&mut self) -> Option<(u32, u32)> {
        if self.idx >= self.parts.len() {
            return None;
        }
        let v = self.parts[self.idx];
        let mut k = 0;
        while self.idx < self.parts.len() && self.parts[self.idx] == v {
            k += 1;
            self.idx += 1;
        }
        Some((v, k))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, self.parts.iter())
    }
}

fn fmt_parts<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    parts: impl Iterator<Item = &'a T>,
) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in parts.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

/// A finite sequence of integers; negative parts are allowed. Two
/// compositions that differ only by trailing zeros compare equal, but the
/// stored form is kept raw so raising-operator chains stay positional.
#[derive(Debug, Clone)]
pub struct Composition {
    parts: Vec<i64>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<i64>>) -> Self {
        Composition {
            parts: parts.into(),
        }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical_slice().is_empty()
    }

    fn canonical_slice(&self) -> &[i64] {
        let mut end = self.parts.len();
        while end > 0 && self.parts[end - 1] == 0 {
            end -= 1;
        }
        &self.parts[..end]
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Sum of the positive parts.
    pub fn positive_weight(&self) -> i64 {
        self.parts.iter().filter(|&&p| p > 0).sum()
    }

    /// `(n, self)`.
    pub fn prepend(&self, n: i64) -> Composition {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.parts);
        Composition { parts }
    }

    /// Raising operator on indices: add 1 at `i`, subtract 1 at `j`
    /// (0-based, `i < j < len`).
    pub fn raising(&self, i: usize, j: usize) -> Result<Composition> {
        if i >= j || j >= self.parts.len() {
            return Err(Error::IndexRange {
                i,
                j,
                len: self.parts.len(),
            });
        }
        let mut parts = self.parts.clone();
        parts[i] += 1;
        parts[j] -= 1;
        Ok(Composition { parts })
    }

    /// The partition with the same parts, if the canonical form is weakly
    /// decreasing and nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        let s = self.canonical_slice();
        if s.iter().any(|&p| p < 0) {
            return None;
        }
        if s.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(
            s.iter().map(|&p| p as u32).collect::<Vec<_>>(),
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.parts)
    }

    /// Parse a JSON integer array such as `[3,1]`.
    pub fn from_json(v: &serde_json::Value) -> Result<Composition> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidArgument("expected integer array".into()))?;
        let mut parts = Vec::with_capacity(arr.len());
        for x in arr {
            parts.push(
                x.as_i64()
                    .ok_or_else(|| Error::InvalidArgument("expected integer array".into()))?,
            );
        }
        Ok(Composition { parts })
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_slice() == other.canonical_slice()
    }
}

impl Eq for Composition {}

impl Hash for Composition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_slice().hash(state);
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Composition {
        p.to_composition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, self.parts.iter())
    }
}

/// All partitions of `n` in reverse-lexicographic order, so
/// `enumerate_partitions(3)` is `[(3), (2,1), (1,1,1)]`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of weight 0 through `n`, each block in reverse-lex order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tpoly::TPoly;

    /// Transpose oracle: mark the Young diagram cells and count columns.
    fn conjugate_by_diagram(parts: &[u32]) -> Vec<u32> {
        let width = parts.iter().copied().max().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &row in parts {
            for col in cols.iter_mut().take(row as usize) {
                *col += 1;
            }
        }
        cols
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::new([3]).conjugate(), Partition::new([1, 1, 1]));
        assert_eq!(Partition::new([2, 1]).conjugate(), Partition::new([2, 1]));
        // oracle value for (3,1)
        assert_eq!(conjugate_by_diagram(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(
            Partition::new([3, 1]).conjugate(),
            Partition::new([2, 1, 1])
        );
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(
                    p.conjugate().parts(),
                    conjugate_by_diagram(p.parts()).as_slice()
                );
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(Partition::new([1]).epsilon(), 0);
        // conjugate of (1,1) is (2): C(2,2) = 1
        assert_eq!(Partition::new([1, 1]).epsilon(), 1);
        // epsilon((m,1)) = 1 for every m >= 1
        for m in 1..=6 {
            assert_eq!(Partition::new([m, 1]).epsilon(), 1);
        }
    }

    #[test]
    fn epsilon_prepend_identity() {
        // epsilon((m, lambda)) = |lambda| + epsilon(lambda) for m >= lambda_1
        for n in 0..=8u32 {
            for p in enumerate_partitions(n) {
                for m in p.first().max(1)..=p.first() + 3 {
                    let mut parts = vec![m];
                    parts.extend_from_slice(p.parts());
                    let big = Partition::new(parts);
                    assert_eq!(big.epsilon(), n as i64 + p.epsilon());
                }
            }
        }
    }

    #[test]
    fn c_poly_examples() {
        let one_minus_t = TPoly::from_i64_coeffs(&[1, -1]);
        assert_eq!(Partition::new([1]).c_poly(), one_minus_t);
        assert_eq!(
            Partition::new([1, 1]).c_poly(),
            &one_minus_t * &TPoly::from_i64_coeffs(&[1, 0, -1])
        );
        assert_eq!(Partition::new([2, 1]).c_poly(), &one_minus_t * &one_minus_t);
    }

    #[test]
    fn c_poly_prepend_fresh_part() {
        // a strictly larger new part has multiplicity 1
        for n in 0..=8u32 {
            for p in enumerate_partitions(n) {
                let m = p.first() + 1;
                let mut parts = vec![m];
                parts.extend_from_slice(p.parts());
                let big = Partition::new(parts);
                assert_eq!(
                    big.c_poly(),
                    &TPoly::from_i64_coeffs(&[1, -1]) * &p.c_poly()
                );
            }
        }
    }

    #[test]
    fn composition_identity_modulo_trailing_zeros() {
        assert_eq!(Composition::new([3, 1, 0, 0]), Composition::new([3, 1]));
        assert_ne!(Composition::new([3, 0, 1]), Composition::new([3, 1]));
        assert_eq!(Composition::new([0, 0]), Composition::empty());
    }

    #[test]
    fn prepend_examples() {
        assert_eq!(Composition::new([1]).prepend(3), Composition::new([3, 1]));
        assert_eq!(Composition::empty().prepend(0), Composition::empty());
        assert_eq!(Composition::new([2]).prepend(-1), Composition::new([-1, 2]));
    }

    #[test]
    fn raising_examples() {
        let r = |v: &[i64], i, j| Composition::new(v).raising(i, j).unwrap();
        assert_eq!(r(&[1, 1], 0, 1), Composition::new([2, 0]));
        assert_eq!(r(&[2, 0], 0, 1), Composition::new([3, -1]));
        assert_eq!(r(&[2, 2, 2], 0, 2), Composition::new([3, 2, 1]));
        assert!(Composition::new([1, 1]).raising(1, 1).is_err());
        assert!(Composition::new([1, 1]).raising(0, 2).is_err());
    }

    /// Euler's pentagonal-number recurrence for p(n), independent of the
    /// enumerator.
    fn partition_count(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m && g2 as usize > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 as usize <= m {
                    total += sign * p[m - g1 as usize];
                }
                if g2 as usize <= m {
                    total += sign * p[m - g2 as usize];
                }
                k += 1;
            }
            p[m] = total;
        }
        p[n]
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3),
            vec![
                Partition::new([3]),
                Partition::new([2, 1]),
                Partition::new([1, 1, 1])
            ]
        );
        assert_eq!(enumerate_partitions(6).len(), 11);
        for n in 0..=20 {
            assert_eq!(
                enumerate_partitions(n).len() as i64,
                partition_count(n as usize),
                "p({n})"
            );
        }
    }

    #[test]
    fn reverse_lex_order_is_decreasing() {
        for n in 0..=10 {
            let list = enumerate_partitions(n);
            for w in list.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
        }
    }
}
