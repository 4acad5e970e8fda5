//! The constants `M(λ)`, `C₁(λ)`, `C₂(λ)`, `C₃(λ)` as intervals.
//!
//! `M(λ) = max{R(n′, t′), ⌊λ³ + 1⌋}` where `n′` is only known to satisfy
//! `n′ ≥ (m′+1)²`, so only lower bounds are available (Ramsey numbers grow
//! in both arguments).

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ramsey::{ramsey_lookup, IntInterval};
use super::thresholds::thresholds;
use super::{verifiers::mu_bound, Lambda};
use crate::{Error, Result};

pub fn m_constant(lambda: &Lambda) -> Result<IntInterval> {
    let th = thresholds(lambda)?;
    let n_min = (th.m_prime + 1).pow(2);
    let ramsey = match (u32::try_from(n_min), u32::try_from(th.t_prime)) {
        (Ok(s), Ok(t)) => ramsey_lookup(s, t)?.interval().lower,
        _ => return Err(Error::Overflow("Ramsey arguments exceed 32 bits".into())),
    };
    let cube = (lambda.cubed().floor() + BigInt::from(1))
        .to_u128()
        .ok_or_else(|| Error::Overflow("⌊λ³+1⌋ does not fit".into()))?;
    Ok(IntInterval::at_least(ramsey.max(cube)))
}

/// `C₁(λ) = M(λ+1) − 1`.
pub fn c1_constant(lambda: &Lambda) -> Result<IntInterval> {
    Ok(m_constant(&lambda.add_integer(1))?.map(|v| v - 1))
}

/// `C₂(2) = 8` is known exactly; otherwise the lower bound `M(λ) − 1` on the
/// value the existence argument produces.
pub fn c2_constant(lambda: &Lambda) -> Result<IntInterval> {
    if lambda.cmp_integer(2).is_eq() {
        return Ok(IntInterval::exact(8));
    }
    Ok(m_constant(lambda)?.map(|v| v - 1))
}

/// `C₃(λ) = max{M(λ) − 1, λ³(2λ − 3)}` for integers `λ ≥ 2`.
pub fn c3_constant(lambda: u64) -> Result<IntInterval> {
    let mu = mu_bound(lambda)? as u128;
    let l = i64::try_from(lambda).map_err(|_| Error::Overflow("λ too large".into()))?;
    Ok(m_constant(&Lambda::from_integer(l))?
        .map(|v| v - 1)
        .max_with(mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bounds_grow_with_lambda() {
        let m1 = m_constant(&Lambda::from_integer(1)).unwrap();
        let m2 = m_constant(&Lambda::from_integer(2)).unwrap();
        let m3 = m_constant(&Lambda::from_integer(3)).unwrap();
        assert!(m1.upper.is_none());
        // t′(1) = 1, so the Ramsey term is 1 and ⌊1 + 1⌋ = 2 dominates
        assert_eq!(m1.lower, 2);
        assert!(m2.lower >= 9 && m3.lower >= 28);
        assert!(m1.lower <= m2.lower && m2.lower <= m3.lower);
    }

    #[test]
    fn c_constants() {
        assert_eq!(c2_constant(&Lambda::from_integer(2)).unwrap(), IntInterval::exact(8));
        let c1 = c1_constant(&Lambda::from_integer(1)).unwrap();
        assert_eq!(c1.lower, m_constant(&Lambda::from_integer(2)).unwrap().lower - 1);
        let c3 = c3_constant(2).unwrap();
        assert!(c3.lower >= 8 && c3.upper.is_none());
        assert!(c3_constant(1).is_err());
    }
}
