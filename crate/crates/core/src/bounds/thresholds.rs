use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{Lambda, EIGEN_TOL};
use crate::graph::{complete_bipartite, k_tilde};
use crate::spectra::exact::matrix_eigenvalues_below;
use crate::spectra::lambda_min;
use crate::{Error, Result};

/// Largest graph order for which the thresholds are also eigensolved on the
/// full graphs.
const FULL_EIGENSOLVE_MAX_ORDER: usize = 401;
const MAX_M_PRIME: u64 = 1_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct Thresholds {
    pub lambda: Lambda,
    /// Least `t` with `λ_min(K₂,ₜ) < −λ`.
    pub t_prime: u64,
    /// Least `m` with `λ_min(K̃₂ₘ) < −λ`.
    pub m_prime: u64,
    /// `⌊λ⌋·⌊λ²⌋`.
    pub gamma2_cap: u64,
    /// `⌊λ²⌋ + 1`.
    pub isolated_cap: u64,
    /// `λ_min(K₂,ₜ′)` and `λ_min(K₂,ₜ′₋₁)` by eigensolve, when small enough.
    pub lambda_min_k2t: Option<f64>,
    pub lambda_min_k2t_previous: Option<f64>,
    /// `λ_min(K̃₂ₘ′)` and `λ_min(K̃₂₍ₘ′₋₁₎)` by eigensolve, when small enough.
    pub lambda_min_ktilde: Option<f64>,
    pub lambda_min_ktilde_previous: Option<f64>,
}

fn to_u64(v: BigInt, what: &str) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Overflow(format!("{what} does not fit in 64 bits")))
}

/// Quotient matrix of `K̃₂ₘ` for the parts (clique vertices not adjacent to
/// the apex, clique vertices adjacent to it, apex). The remaining
/// eigenvalues of `K̃₂ₘ` are all `−1`.
pub(crate) fn ktilde_quotient(m: u64) -> Vec<Vec<BigInt>> {
    let m = BigInt::from(m);
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    vec![
        vec![&m - &one, m.clone(), zero.clone()],
        vec![m.clone(), &m - &one, one],
        vec![zero.clone(), m, zero],
    ]
}

/// `t′` from `λ_min(K₂,ₜ) = −√(2t) < −λ ⇔ t > λ²/2`, and `m′` by increasing
/// `m` until `λ_min(K̃₂ₘ) < −λ`, decided exactly on the quotient matrix
/// (`λ ≥ 1` so the eigenvalue `−1` never qualifies). Both are re-derived by
/// eigensolving the full graphs when their order is at most 401.
pub fn thresholds(lambda: &Lambda) -> Result<Thresholds> {
    if lambda.cmp_integer(1).is_lt() {
        return Err(Error::invalid(format!("thresholds need λ ≥ 1, got {lambda}")));
    }
    let lam = lambda.to_f64();
    let lam_sq = lambda.squared();
    let half = BigRational::new(1.into(), 2.into());
    let t_prime = to_u64((lam_sq.as_rational() * &half).floor().to_integer() + 1, "t′")?;
    let neg = -lambda.as_rational();

    let mut m_prime = 1;
    while matrix_eigenvalues_below(&ktilde_quotient(m_prime), &neg) == 0 {
        m_prime += 1;
        if m_prime > MAX_M_PRIME {
            return Err(Error::Overflow(format!("m′ exceeds {MAX_M_PRIME}")));
        }
    }

    let small = |order: u64| order as usize <= FULL_EIGENSOLVE_MAX_ORDER;
    let k2t = |t: u64| -> Result<Option<f64>> {
        if t == 0 || !small(t + 2) {
            return Ok(None);
        }
        let v = lambda_min(&complete_bipartite(2, t as usize)?);
        let closed = -((2 * t) as f64).sqrt();
        if (v - closed).abs() > EIGEN_TOL * (1.0 + closed.abs()) {
            return Err(Error::Consistency(format!(
                "λ_min(K₂,{t}) = {v} disagrees with −√{} = {closed}",
                2 * t
            )));
        }
        Ok(Some(v))
    };
    let kt = |m: u64| -> Result<Option<f64>> {
        if m == 0 || !small(2 * m + 1) {
            return Ok(None);
        }
        Ok(Some(lambda_min(&k_tilde(m as usize)?)))
    };
    let out = Thresholds {
        lambda: lambda.clone(),
        t_prime,
        m_prime,
        gamma2_cap: to_u64(lambda.floor() * lambda.floor_sq(), "⌊λ⌋⌊λ²⌋")?,
        isolated_cap: to_u64(lambda.floor_sq() + 1, "⌊λ²⌋+1")?,
        lambda_min_k2t: k2t(t_prime)?,
        lambda_min_k2t_previous: k2t(t_prime - 1)?,
        lambda_min_ktilde: kt(m_prime)?,
        lambda_min_ktilde_previous: kt(m_prime - 1)?,
    };
    let strict_ok = |v: Option<f64>| v.is_none_or(|v| v < -lam + EIGEN_TOL);
    let minimal_ok = |v: Option<f64>| v.is_none_or(|v| v >= -lam - EIGEN_TOL);
    if !strict_ok(out.lambda_min_k2t)
        || !minimal_ok(out.lambda_min_k2t_previous)
        || !strict_ok(out.lambda_min_ktilde)
        || !minimal_ok(out.lambda_min_ktilde_previous)
    {
        return Err(Error::Consistency(format!(
            "eigensolved thresholds disagree with the exact ones at λ = {lambda}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::eig_general;
    use proptest::prelude::*;

    fn lam(s: &str) -> Lambda {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_one() {
        let t = thresholds(&lam("1")).unwrap();
        assert_eq!(t.t_prime, 1);
        assert_eq!(t.m_prime, 1);
        let sqrt2 = 2f64.sqrt();
        assert!((t.lambda_min_k2t.unwrap() + sqrt2).abs() < 1e-12);
        assert!((t.lambda_min_ktilde.unwrap() + sqrt2).abs() < 1e-12);
        assert_eq!(t.lambda_min_k2t_previous, None);
        assert_eq!(t.isolated_cap, 2);
        assert_eq!(t.gamma2_cap, 1);
    }

    #[test]
    fn lambda_two_boundary() {
        let t = thresholds(&lam("2")).unwrap();
        // −√4 = −2 is not < −2, −√6 is
        assert_eq!(t.t_prime, 3);
        assert!((t.lambda_min_k2t_previous.unwrap() + 2.0).abs() < 1e-12);
        assert_eq!(t.gamma2_cap, 8);
        assert_eq!(t.isolated_cap, 5);
    }

    #[test]
    fn t_prime_closed_form() {
        for (s, want) in [("1", 1), ("1.5", 2), ("2", 3), ("2.5", 4), ("3", 5)] {
            assert_eq!(thresholds(&lam(s)).unwrap().t_prime, want, "λ = {s}");
        }
    }

    #[test]
    fn rejects_small_lambda() {
        assert!(thresholds(&lam("0.99")).is_err());
    }

    #[test]
    fn quotient_matches_full_graph() {
        for m in 1..=6u64 {
            let q: Vec<Vec<f64>> = ktilde_quotient(m)
                .iter()
                .map(|r| r.iter().map(|x| x.to_f64().unwrap()).collect())
                .collect();
            let qmin = eig_general(&q).iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
            let full = lambda_min(&k_tilde(m as usize).unwrap());
            assert!((qmin - full).abs() < 1e-8, "m = {m}: {qmin} vs {full}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn minimality(num in 100u32..500) {
            let l = Lambda::from_ratio(num as i64, 100).unwrap();
            let t = thresholds(&l).unwrap();
            let lamf = l.to_f64();
            prop_assert!(t.lambda_min_k2t.unwrap() < -lamf + 1e-9);
            if t.t_prime > 1 {
                prop_assert!(t.lambda_min_k2t_previous.unwrap() >= -lamf - 1e-9);
            }
            prop_assert!(t.lambda_min_ktilde.unwrap() < -lamf + 1e-9);
            if t.m_prime > 1 {
                prop_assert!(t.lambda_min_ktilde_previous.unwrap() >= -lamf - 1e-9);
            }
        }
    }
}
