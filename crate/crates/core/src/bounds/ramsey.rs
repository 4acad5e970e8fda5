//! Small Ramsey numbers: a table of known values, standard bounds, and a
//! brute-force oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::search::canon::canonical_key;
use crate::{Error, Graph, Result};

/// Known exact values `R(s, t)` with `3 ≤ s ≤ t`.
pub const KNOWN_RAMSEY: &[(u32, u32, u128)] = &[
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (3, 7, 23),
    (3, 8, 28),
    (3, 9, 36),
    (4, 4, 18),
    (4, 5, 25),
];

/// An integer known to lie in `[lower, upper]`; `upper = None` means no
/// finite upper bound is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntInterval {
    pub lower: u128,
    pub upper: Option<u128>,
}

impl IntInterval {
    pub fn exact(v: u128) -> Self {
        IntInterval {
            lower: v,
            upper: Some(v),
        }
    }

    pub fn at_least(v: u128) -> Self {
        IntInterval { lower: v, upper: None }
    }

    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    pub fn contains(&self, v: u128) -> bool {
        v >= self.lower && self.upper.is_none_or(|u| v <= u)
    }

    pub fn map(self, f: impl Fn(u128) -> u128) -> Self {
        IntInterval {
            lower: f(self.lower),
            upper: self.upper.map(f),
        }
    }

    pub fn max_with(self, v: u128) -> Self {
        IntInterval {
            lower: self.lower.max(v),
            upper: self.upper.map(|u| u.max(v)),
        }
    }
}

impl std::fmt::Display for IntInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.upper {
            Some(u) if u == self.lower => write!(f, "{u}"),
            Some(u) => write!(f, "[{}, {u}]", self.lower),
            None => write!(f, "[{}, ∞)", self.lower),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RamseyValue {
    Exact { value: u128 },
    Bounds { lower: u128, upper: u128 },
}

impl RamseyValue {
    pub fn interval(&self) -> IntInterval {
        match *self {
            RamseyValue::Exact { value } => IntInterval::exact(value),
            RamseyValue::Bounds { lower, upper } => IntInterval {
                lower,
                upper: Some(upper),
            },
        }
    }
}

impl std::fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.interval().fmt(f)
    }
}

fn table(s: u32, t: u32) -> Option<u128> {
    let (s, t) = (s.min(t), s.max(t));
    match s {
        1 => Some(1),
        2 => Some(t as u128),
        _ => KNOWN_RAMSEY
            .iter()
            .find(|&&(a, b, _)| a == s && b == t)
            .map(|&(_, _, v)| v),
    }
}

/// `R(s, t)`: exact from the table when known, otherwise bounds from
/// `R(s, t) ≤ R(s−1, t) + R(s, t−1)` and the lower bounds
/// `(s−1)(t−1) + 1`, `R(s−1, t) + 1`, `R(s, t−1) + 1`, all seeded with the
/// table values of smaller arguments.
pub fn ramsey_lookup(s: u32, t: u32) -> Result<RamseyValue> {
    if s == 0 || t == 0 {
        return Err(Error::invalid("Ramsey arguments must be at least 1"));
    }
    if let Some(v) = table(s, t) {
        return Ok(RamseyValue::Exact { value: v });
    }
    let (lower, upper) = bounds(s, t, true, &mut BTreeMap::new());
    Ok(RamseyValue::Bounds { lower, upper })
}

/// Bounds from the base cases `R(1, t) = 1`, `R(2, t) = t` and the
/// recurrences alone, ignoring the table.
pub fn standard_bounds(s: u32, t: u32) -> Result<IntInterval> {
    if s == 0 || t == 0 {
        return Err(Error::invalid("Ramsey arguments must be at least 1"));
    }
    let (lower, upper) = bounds(s, t, false, &mut BTreeMap::new());
    Ok(IntInterval {
        lower,
        upper: Some(upper),
    })
}

fn bounds(s: u32, t: u32, use_table: bool, memo: &mut BTreeMap<(u32, u32), (u128, u128)>) -> (u128, u128) {
    let (s, t) = (s.min(t), s.max(t));
    if s <= 2 {
        let v = if s == 1 { 1 } else { t as u128 };
        return (v, v);
    }
    if use_table {
        if let Some(v) = table(s, t) {
            return (v, v);
        }
    }
    if let Some(&b) = memo.get(&(s, t)) {
        return b;
    }
    let (l1, u1) = bounds(s - 1, t, use_table, memo);
    let (l2, u2) = bounds(s, t - 1, use_table, memo);
    let lower = ((s as u128 - 1) * (t as u128 - 1) + 1).max(l1 + 1).max(l2 + 1);
    let upper = u1.saturating_add(u2);
    memo.insert((s, t), (lower, upper));
    (lower, upper)
}

fn has_clique(adj: &[u64], set: u64, size: u32) -> bool {
    if size == 0 {
        return true;
    }
    if set.count_ones() < size {
        return false;
    }
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], size - 1) {
            return true;
        }
    }
    false
}

/// Exhaustive value of `R(s, t)` if it is at most `max_order`.
///
/// Graphs with no `K_s` and no independent `t`-set are grown one vertex at a
/// time (the property is hereditary, so every such graph on `n + 1`
/// vertices extends one on `n`), deduplicated by canonical form. `R(s, t)`
/// is the first order at which none survive.
pub fn ramsey_brute_force(s: u32, t: u32, max_order: usize) -> Result<Option<usize>> {
    if s == 0 || t == 0 {
        return Err(Error::invalid("Ramsey arguments must be at least 1"));
    }
    if max_order > 64 {
        return Err(Error::UnsupportedSize {
            what: "Ramsey brute-force order",
            actual: max_order,
            cap: 64,
        });
    }
    if s == 1 || t == 1 {
        return Ok((max_order >= 1).then_some(1));
    }
    let mut good = vec![Graph::empty(1)];
    for n in 1..max_order {
        let next: Vec<(Vec<u64>, Graph)> = good
            .par_iter()
            .flat_map_iter(|g| extensions(g, s, t))
            .map(|h| canonical_key(&h).map(|k| (k, h)))
            .collect::<Result<_>>()?;
        let mut level: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for (k, h) in next {
            level.entry(k).or_insert(h);
        }
        if level.is_empty() {
            return Ok(Some(n + 1));
        }
        good = level.into_values().collect();
    }
    Ok(None)
}

fn extensions(g: &Graph, s: u32, t: u32) -> Vec<Graph> {
    let n = g.order();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let co: Vec<u64> = adj.iter().enumerate().map(|(v, r)| !r & full & !(1 << v)).collect();
    let mut out = Vec::new();
    for nb in 0..=full {
        if has_clique(&adj, nb, s - 1) || has_clique(&co, full & !nb, t - 1) {
            continue;
        }
        let mut h = Graph::empty(n + 1);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        for u in 0..n {
            if nb >> u & 1 == 1 {
                h.add_edge(u, n);
            }
        }
        out.push(h);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(ramsey_lookup(2, 5).unwrap(), RamseyValue::Exact { value: 5 });
        assert_eq!(ramsey_lookup(5, 2).unwrap(), RamseyValue::Exact { value: 5 });
        assert_eq!(ramsey_lookup(4, 3).unwrap(), RamseyValue::Exact { value: 9 });
        assert_eq!(ramsey_lookup(1, 7).unwrap(), RamseyValue::Exact { value: 1 });
        assert!(ramsey_lookup(0, 3).is_err());
    }

    #[test]
    fn unknown_values_are_bounded() {
        // R(5,5) is famously open: 43 ≤ R(5,5) ≤ 46
        let v = ramsey_lookup(5, 5).unwrap().interval();
        assert!(!v.is_exact());
        assert!(v.lower <= 43 && v.upper.unwrap() >= 46);
        let huge = ramsey_lookup(60, 60).unwrap().interval();
        assert!(huge.lower > 1 && huge.upper.unwrap() >= huge.lower);
    }

    #[test]
    fn brute_force_small() {
        for t in 1..=6 {
            assert_eq!(ramsey_brute_force(2, t, 10).unwrap(), Some(t as usize));
        }
        assert_eq!(ramsey_brute_force(3, 3, 10).unwrap(), Some(6));
        assert_eq!(ramsey_brute_force(3, 3, 5).unwrap(), None);
    }

    #[test]
    fn c5_witnesses_r33_lower_bound() {
        let c5 = crate::graph::cycle(5).unwrap();
        let adj: Vec<u64> = (0..5).map(|v| c5.row(v)[0]).collect();
        let co: Vec<u64> = (0..5).map(|v| c5.complement().row(v)[0]).collect();
        assert!(!has_clique(&adj, 0b11111, 3));
        assert!(!has_clique(&co, 0b11111, 3));
    }

    #[test]
    fn interval_display() {
        assert_eq!(IntInterval::exact(8).to_string(), "8");
        assert_eq!(IntInterval::at_least(8).to_string(), "[8, ∞)");
        assert_eq!((IntInterval { lower: 2, upper: Some(5) }).to_string(), "[2, 5]");
    }

    proptest! {
        #[test]
        fn standard_bounds_contain_table(idx in 0..KNOWN_RAMSEY.len()) {
            let (s, t, v) = KNOWN_RAMSEY[idx];
            prop_assert!(standard_bounds(s, t).unwrap().contains(v));
            prop_assert!(standard_bounds(t, s).unwrap().contains(v));
        }

        #[test]
        fn lookup_is_symmetric_and_consistent(s in 1u32..12, t in 1u32..12) {
            let a = ramsey_lookup(s, t).unwrap();
            prop_assert_eq!(a, ramsey_lookup(t, s).unwrap());
            let i = a.interval();
            prop_assert!(i.upper.unwrap() >= i.lower);
            let std = standard_bounds(s, t).unwrap();
            prop_assert!(i.lower >= std.lower && i.upper.unwrap() <= std.upper.unwrap());
        }
    }
}
