use serde::Serialize;

use super::Lambda;
use crate::{Error, Result};

/// What is known about `v(k, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KnownV {
    Exact { value: u64, note: String },
    Interval { lower: u64, upper: Option<u64>, note: String },
    Infinite { note: String },
    /// No connected `k`-regular graph has `λ₂ ≤ λ`.
    None { note: String },
}

impl KnownV {
    /// Whether an attained order `v` is consistent with this value.
    pub fn admits(&self, v: u64) -> bool {
        match self {
            KnownV::Exact { value, .. } => v <= *value,
            KnownV::Interval { upper, .. } => upper.is_none_or(|u| v <= u),
            KnownV::Infinite { .. } => true,
            KnownV::None { .. } => false,
        }
    }

    /// Whether `v` could be the exact value.
    pub fn contains(&self, v: u64) -> bool {
        match self {
            KnownV::Exact { value, .. } => v == *value,
            KnownV::Interval { lower, upper, .. } => v >= *lower && upper.is_none_or(|u| v <= u),
            KnownV::Infinite { .. } | KnownV::None { .. } => false,
        }
    }

    pub fn note(&self) -> &str {
        match self {
            KnownV::Exact { note, .. }
            | KnownV::Interval { note, .. }
            | KnownV::Infinite { note }
            | KnownV::None { note } => note,
        }
    }
}

impl std::fmt::Display for KnownV {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KnownV::Exact { value, .. } => write!(f, "{value}"),
            KnownV::Interval { lower, upper: Some(u), .. } => write!(f, "[{lower}, {u}]"),
            KnownV::Interval { lower, upper: None, .. } => write!(f, "[{lower}, ∞)"),
            KnownV::Infinite { .. } => write!(f, "∞"),
            KnownV::None { .. } => write!(f, "none"),
        }
    }
}

/// Known values and bounds for `v(k, λ)`.
///
/// * `λ < −1`: no graph (a connected graph on at least two vertices has
///   `λ₂ ≥ −1`);
/// * `k = 1`: `K₂`, so 2;
/// * `λ ≥ 2√(k−1)`: infinite;
/// * `−1 ≤ λ < 0`: `k + 1`; `λ = 0`: `2k`;
/// * `0 < λ < 1`: between `v(k, 0)` and `v(k, 1)`;
/// * `λ = 1`: `2k + 2` for `k ≥ 11`, otherwise `[2k+2, 2k+6]`;
/// * `λ > 1`: at least `2k + 2`, and `2k + 2λ` when `λ` is an integer with
///   `k = λa`, `a ≥ 2`; no explicit upper bound.
pub fn known_v(k: u64, lambda: &Lambda) -> Result<KnownV> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let two_k = 2 * k;
    if lambda.cmp_integer(-1).is_lt() {
        return Ok(KnownV::None {
            note: "every connected graph on at least two vertices has λ₂ ≥ −1".into(),
        });
    }
    if k == 1 {
        return Ok(KnownV::Exact {
            value: 2,
            note: "K₂ is the only connected 1-regular graph".into(),
        });
    }
    if !lambda.is_negative() && lambda.squared().cmp_integer(4 * (k as i64 - 1)).is_ge() {
        return Ok(KnownV::Infinite {
            note: "λ ≥ 2√(k−1)".into(),
        });
    }
    if lambda.is_negative() {
        return Ok(KnownV::Exact {
            value: k + 1,
            note: "attained only by K_{k+1}".into(),
        });
    }
    if lambda.is_zero() {
        return Ok(KnownV::Exact {
            value: two_k,
            note: "attained only by K_{k,k}".into(),
        });
    }
    let v1_upper = if k >= 11 { two_k + 2 } else { two_k + 6 };
    if lambda.cmp_integer(1).is_lt() {
        return Ok(KnownV::Interval {
            lower: two_k,
            upper: Some(v1_upper),
            note: "v(k, 0) ≤ v(k, λ) ≤ v(k, 1)".into(),
        });
    }
    if lambda.is_one() {
        return Ok(if k >= 11 {
            KnownV::Exact {
                value: two_k + 2,
                note: "k ≥ 11".into(),
            }
        } else {
            KnownV::Interval {
                lower: two_k + 2,
                upper: Some(two_k + 6),
                note: "2k+2 ≤ v(k, 1) ≤ 2k+6 for all k".into(),
            }
        });
    }
    let mut lower = two_k + 2;
    let mut note = "upper bound 2k + C₁(λ) holds for large k but C₁(λ) is not explicit".to_string();
    if let Some(l) = lambda.as_integer() {
        let l = l as u64;
        if k.is_multiple_of(l) && k / l >= 2 && two_k + 2 * l > lower {
            lower = two_k + 2 * l;
            note.push_str("; lower bound from the λ-coclique extension construction");
        }
    }
    Ok(KnownV::Interval {
        lower,
        upper: None,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(k: u64, l: &str) -> KnownV {
        known_v(k, &l.parse().unwrap()).unwrap()
    }

    #[test]
    fn stated_values() {
        assert_eq!(kv(5, "-1").to_string(), "6");
        assert_eq!(kv(4, "0").to_string(), "8");
        assert_eq!(kv(11, "1").to_string(), "24");
        assert_eq!(kv(3, "1").to_string(), "[8, 12]");
        assert_eq!(kv(3, "-1/2").to_string(), "4");
    }

    #[test]
    fn extended_cases() {
        assert_eq!(kv(3, "-2").to_string(), "none");
        assert_eq!(kv(1, "5").to_string(), "2");
        assert_eq!(kv(2, "2").to_string(), "∞");
        assert_eq!(kv(5, "4").to_string(), "∞");
        assert_eq!(kv(5, "3.99").to_string(), "[12, ∞)");
        assert_eq!(kv(6, "2").to_string(), "[16, ∞)");
        assert_eq!(kv(7, "2").to_string(), "[16, ∞)");
        assert_eq!(kv(3, "1/2").to_string(), "[6, 12]");
        assert!(known_v(0, &Lambda::from_integer(1)).is_err());
    }

    #[test]
    fn membership() {
        assert!(kv(2, "1").contains(6));
        assert!(!kv(2, "1").contains(5));
        assert!(kv(6, "2").admits(1000));
        assert!(!kv(4, "0").admits(9));
        assert!(!kv(3, "-2").admits(4));
    }
}
