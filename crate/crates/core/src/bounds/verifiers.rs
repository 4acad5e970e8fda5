use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::constants::{c2_constant, c3_constant, m_constant};
use super::{BoundCertificate, Lambda, EIGEN_TOL, EXACT_MAX_ORDER, SPECTRUM_TOL};
use crate::graph::{coclique_extension, complete_bipartite, distance_layers, line_graph};
use crate::hoffman::attach_universal_fat;
use crate::spectra::exact::matrix_eigenvalues_below;
use crate::spectra::{lambda_min, spectrum};
use crate::{Error, Graph, Result};

/// Checks the isolated-vertex bound on `H`: if `|V(H)| > ⌊λ²⌋ + 1` then
/// `λ_min(𝔮(H)) < −λ`. Smaller graphs are recorded as vacuous.
pub fn isolated_vertex_bound_check(lambda: &Lambda, h: &Graph) -> Result<BoundCertificate> {
    if !(0..h.order()).any(|v| h.degree(v) == 0) {
        return Err(Error::invalid("H must have an isolated vertex"));
    }
    let q = attach_universal_fat(h);
    let s = q.special_matrix()?;
    let lmin = q.lambda_min()?;
    let cap = lambda.floor_sq() + 1;
    let applicable = BigInt::from(h.order()) > cap;
    let mut cert = BoundCertificate::new("isolated_vertex_bound", EIGEN_TOL)
        .param("lambda", lambda)
        .param("order", h.order())
        .param("edges", h.edge_count())
        .evidence("order_cap", cap.to_string())
        .evidence("lambda_min_q", lmin)
        .evidence("applicable", applicable);
    if applicable {
        let below = if s.dim() <= EXACT_MAX_ORDER {
            let m: Vec<Vec<BigInt>> = s
                .rows()
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x.round() as i64)).collect())
                .collect();
            cert = cert.evidence("decided_exactly", true);
            matrix_eigenvalues_below(&m, &-lambda.as_rational()) > 0
        } else {
            cert = cert.evidence("decided_exactly", false);
            lmin < -lambda.to_f64() - EIGEN_TOL
        };
        cert = cert.check("lambda_min_below_minus_lambda", below);
    }
    Ok(cert)
}

/// Instance check of the diameter / `|Γ₂|` proposition.
///
/// Premises: (i) every distance-2 pair has at least `m` common neighbours,
/// (ii) `λ_min(G) ≥ −λ`. The proposition only speaks about connected graphs
/// and `m ≥ M(λ)`; as `M(λ)` is known only from below, an instance is
/// *applicable* when it is connected, satisfies (i) and (ii), and `m` is at
/// least the lower bound of `M(λ)`. Conclusions: diameter at most 2 and
/// `|Γ₂(x)| ≤ ⌊λ⌋⌊λ²⌋` for every `x`. The certificate is verified unless an
/// applicable instance violates a conclusion.
pub fn prop13_verifier(g: &Graph, lambda: &Lambda, m: u64) -> Result<BoundCertificate> {
    let n = g.order();
    let mut min_common: Option<usize> = None;
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                let c = g.common_neighbors(u, v);
                if c > 0 {
                    min_common = Some(min_common.map_or(c, |x| x.min(c)));
                }
            }
        }
    }
    let premise_i = min_common.is_none_or(|c| c as u64 >= m);
    let lmin = lambda_min(g);
    let premise_ii = lmin >= -lambda.to_f64() - EIGEN_TOL;
    let connected = g.is_connected();
    let m_lower = if lambda.cmp_integer(1).is_ge() {
        Some(m_constant(lambda)?.lower)
    } else {
        None
    };
    let in_scope = m_lower.is_some_and(|lo| m as u128 >= lo);
    let gamma2_cap = lambda.floor() * lambda.floor_sq();
    let max_gamma2 = (0..n)
        .map(|x| distance_layers(g, x).layer(2).len())
        .max()
        .unwrap_or(0);
    let diameter = g.diameter();
    let diameter_ok = diameter.is_some_and(|d| d <= 2);
    let gamma2_ok = BigInt::from(max_gamma2) <= gamma2_cap;
    let applicable = connected && premise_i && premise_ii && in_scope;
    let cert = BoundCertificate::new("diameter_gamma2_bound", EIGEN_TOL)
        .param("lambda", lambda)
        .param("m", m)
        .param("order", n)
        .evidence("connected", connected)
        .evidence("min_distance2_common", min_common)
        .evidence("lambda_min", lmin)
        .evidence("premise_common_neighbors", premise_i)
        .evidence("premise_lambda_min", premise_ii)
        .evidence("m_lambda_lower_bound", m_lower.map(|v| v.to_string()))
        .evidence("m_in_scope", in_scope)
        .evidence("applicable", applicable)
        .evidence("diameter", diameter)
        .evidence("max_gamma2", max_gamma2)
        .evidence("gamma2_cap", gamma2_cap.to_string())
        .evidence("conclusion_diameter", diameter_ok)
        .evidence("conclusion_gamma2", gamma2_ok);
    Ok(cert.check("implication", !applicable || (diameter_ok && gamma2_ok)))
}

/// The `λ`-coclique extension of the complement of `L(K₂,ₐ₊₁)`, with a
/// certificate of its degree `λa`, order `2λa + 2λ` and spectrum
/// `{[λa]¹, [λ]ᵃ, [−λ]ᵃ, [−λa]¹, [0]^((λ−1)(2a+2))}`.
pub fn lower_bound_graph(lambda: u64, a: u64) -> Result<(Graph, BoundCertificate)> {
    if lambda < 1 || a < 2 {
        return Err(Error::invalid(format!(
            "lower-bound graph needs λ ≥ 1 and a ≥ 2, got λ = {lambda}, a = {a}"
        )));
    }
    let (l, au) = (lambda as usize, a as usize);
    let base = line_graph(&complete_bipartite(2, au + 1)?)?.complement();
    let g = coclique_extension(&base, l)?.with_name(format!("lower_bound_graph(λ={lambda}, a={a})"));
    let k = l * au;
    let degree_ok = g.regular_degree() == Some(k);
    let order_ok = g.order() == 2 * k + 2 * l;
    let (lf, af) = (lambda as f64, a as f64);
    let mut expected = vec![lf * af, -lf * af];
    expected.extend(std::iter::repeat_n(lf, au));
    expected.extend(std::iter::repeat_n(-lf, au));
    expected.extend(std::iter::repeat_n(0.0, (l - 1) * (2 * au + 2)));
    expected.sort_by(|x, y| y.total_cmp(x));
    let spec = spectrum(&g);
    let got = spec.expanded();
    let deviation = if got.len() == expected.len() {
        got.iter().zip(&expected).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let lambda2 = spec.second_largest().unwrap_or(f64::NAN);
    let cert = BoundCertificate::new("lower_bound_graph", SPECTRUM_TOL)
        .param("lambda", lambda)
        .param("a", a)
        .evidence("order", g.order())
        .evidence("degree", g.regular_degree())
        .evidence("lambda2", lambda2)
        .evidence("max_spectrum_deviation", deviation)
        .evidence("spectrum", spec.to_string())
        .evidence("implied_v_lower_bound", 2 * k + 2 * l)
        .check("regular_of_degree_lambda_a", degree_ok)
        .check("order_is_2k_plus_2lambda", order_ok)
        .check("spectrum_matches", deviation <= SPECTRUM_TOL)
        .check("lambda2_equals_lambda", (lambda2 - lf).abs() <= SPECTRUM_TOL);
    Ok((g, cert))
}

/// Co-edge-regular bound: for a connected co-edge-regular graph with
/// `λ_min ≥ −λ`, `c₂ > C₂(λ)` forces `v − k − 1 ≤ (λ−1)²/4 + 1`. The
/// implication is only testable where `C₂(λ)` is known (`λ = 2`); complete
/// graphs are vacuous.
pub fn co_edge_bound_check(g: &Graph, lambda: &Lambda) -> Result<BoundCertificate> {
    let params = g.regularity_params();
    if !g.is_connected() || !params.co_edge_regular {
        return Err(Error::invalid("graph must be connected and co-edge-regular"));
    }
    let v = g.order();
    let k = params.degree.expect("co-edge-regular graphs are regular");
    let lmin = lambda_min(g);
    let cert = BoundCertificate::new("co_edge_bound", EIGEN_TOL)
        .param("lambda", lambda)
        .evidence("v", v)
        .evidence("k", k)
        .evidence("c2", params.c2_nonadjacent)
        .evidence("lambda_min", lmin);
    let Some(c2) = params.c2_nonadjacent else {
        return Ok(cert.evidence("vacuous", "complete graph: no non-adjacent pairs"));
    };
    let l = v - k - 1;
    let lm1 = lambda.add_integer(-1);
    let bound = lm1.squared().as_rational() / BigRational::from_integer(4.into())
        + BigRational::from_integer(1.into());
    let within = BigRational::from_integer(l.into()) <= bound;
    let premise = lmin >= -lambda.to_f64() - EIGEN_TOL;
    let c2_const = c2_constant(lambda).ok().filter(|c| c.is_exact());
    let mut cert = cert
        .evidence("v_minus_k_minus_1", l)
        .evidence("bound", bound.to_f64())
        .evidence("within_bound", within)
        .evidence("lambda_min_premise", premise)
        .evidence("c2_constant", c2_const.map(|c| c.lower.to_string()));
    if let Some(c) = c2_const {
        let exceeds = c2 as u128 > c.lower;
        cert = cert
            .evidence("c2_exceeds_constant", exceeds)
            .check("implication", !(premise && exceeds) || within);
    } else {
        cert = cert.evidence("implication_testable", false);
    }
    Ok(cert)
}

/// `λ³(2λ − 3)` for integers `λ ≥ 2`.
pub fn mu_bound(lambda: u64) -> Result<u64> {
    if lambda < 2 {
        return Err(Error::invalid(format!("μ-bound needs λ ≥ 2, got {lambda}")));
    }
    lambda
        .checked_pow(3)
        .and_then(|c| c.checked_mul(2 * lambda - 3))
        .ok_or_else(|| Error::Overflow(format!("λ³(2λ−3) overflows at λ = {lambda}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub a1: u64,
    pub c2: u64,
}

/// `c₂ ≤ λ³(2λ − 3)`.
pub fn srg_mu_check(params: SrgParams, lambda: u64) -> Result<bool> {
    Ok(params.c2 <= mu_bound(lambda)?)
}

/// Amply regular dichotomy: with `λ_min ≥ −λ`, either `c₂ ≤ C₃(λ)` or the
/// graph is complete multipartite. Since `C₃(λ)` is only known from below,
/// `c₂` above that lower bound on a non-multipartite graph is undetermined
/// and the certificate is not verified.
pub fn amply_regular_check(g: &Graph, lambda: u64) -> Result<BoundCertificate> {
    let params = g.regularity_params();
    if !params.amply_regular {
        return Err(Error::invalid("graph must be amply regular"));
    }
    let c3 = c3_constant(lambda)?;
    let lmin = lambda_min(g);
    let premise = lmin >= -(lambda as f64) - EIGEN_TOL;
    let multipartite = g.is_complete_multipartite();
    let c2_small = params.c2.is_none_or(|c| c as u128 <= c3.lower);
    let status = if !premise {
        "vacuous"
    } else if multipartite {
        "complete_multipartite"
    } else if c2_small {
        "c2_within_bound"
    } else {
        "undetermined"
    };
    Ok(BoundCertificate::new("amply_regular", EIGEN_TOL)
        .param("lambda", lambda)
        .evidence("v", g.order())
        .evidence("k", params.degree)
        .evidence("a1", params.a1)
        .evidence("c2", params.c2)
        .evidence("lambda_min", lmin)
        .evidence("lambda_min_premise", premise)
        .evidence("complete_multipartite", multipartite)
        .evidence("mu_bound", mu_bound(lambda)?)
        .evidence("c3_interval", c3.to_string())
        .evidence("status", status)
        .check("dichotomy", status != "undetermined"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, edgeless, petersen};

    fn lam(s: &str) -> Lambda {
        s.parse().unwrap()
    }

    fn ev<'a>(c: &'a BoundCertificate, key: &str) -> &'a serde_json::Value {
        &c.evidence[key]
    }

    #[test]
    fn isolated_vertex_examples() {
        // order 2 = ⌊1⌋ + 1: nothing is claimed; λ_min(𝔮(E₂)) = −2
        let c = isolated_vertex_bound_check(&lam("1"), &edgeless(2)).unwrap();
        assert!(c.verified);
        assert_eq!(ev(&c, "applicable"), false);
        assert!((ev(&c, "lambda_min_q").as_f64().unwrap() + 2.0).abs() < 1e-9);
        // ⌊λ²⌋ + 2 vertices with an isolated vertex
        let mut h = Graph::empty(6);
        h.add_edge(1, 2);
        h.add_edge(3, 4);
        let c = isolated_vertex_bound_check(&lam("2"), &h).unwrap();
        assert!(c.verified && ev(&c, "applicable") == true);
        assert!(isolated_vertex_bound_check(&lam("2"), &complete(3)).is_err());
    }

    #[test]
    fn diameter_bound_examples() {
        // K_{k,k}: λ_min = −k < −1, so not applicable
        let c = prop13_verifier(&complete_bipartite(4, 4).unwrap(), &lam("1"), 4).unwrap();
        assert_eq!(ev(&c, "premise_lambda_min"), false);
        assert_eq!(ev(&c, "applicable"), false);
        assert!(c.verified);
        // K_{3,3,3} with λ = 3, M = 6
        let c = prop13_verifier(&complete_multipartite(&[3, 3, 3]).unwrap(), &lam("3"), 6).unwrap();
        assert_eq!(ev(&c, "premise_common_neighbors"), true);
        assert_eq!(ev(&c, "premise_lambda_min"), true);
        assert_eq!(ev(&c, "max_gamma2"), 2);
        assert_eq!(ev(&c, "conclusion_diameter"), true);
        assert_eq!(ev(&c, "conclusion_gamma2"), true);
        // Petersen, λ = 2, M = 1
        let c = prop13_verifier(&petersen(), &lam("2"), 1).unwrap();
        assert_eq!(ev(&c, "premise_common_neighbors"), true);
        assert_eq!(ev(&c, "premise_lambda_min"), true);
        assert_eq!(ev(&c, "max_gamma2"), 6);
        assert_eq!(ev(&c, "gamma2_cap"), "8");
        assert_eq!(ev(&c, "m_in_scope"), false);
    }

    #[test]
    fn diameter_bound_out_of_scope_counterexample_is_not_flagged() {
        // C₈ satisfies both premises with M = 1 but has diameter 4
        let c = prop13_verifier(&cycle(8).unwrap(), &lam("2"), 1).unwrap();
        assert_eq!(ev(&c, "conclusion_diameter"), false);
        assert_eq!(ev(&c, "applicable"), false);
        assert!(c.verified);
    }

    #[test]
    fn diameter_bound_applicable_instance() {
        // cocktail party graph K_{s×2}: λ_min = −2, distance-2 pairs share 2s − 2
        let m = m_constant(&lam("2")).unwrap().lower as u64;
        let g = complete_multipartite(&vec![2; m as usize / 2 + 1]).unwrap();
        let c = prop13_verifier(&g, &lam("2"), m).unwrap();
        assert_eq!(ev(&c, "applicable"), true, "{}", c.to_json());
        assert!(c.verified);
    }

    #[test]
    fn lower_bound_graph_examples() {
        let (g, c) = lower_bound_graph(1, 3).unwrap();
        assert!(c.verified, "{}", c.to_json());
        assert_eq!((g.order(), g.regular_degree()), (8, Some(3)));
        let (g, c) = lower_bound_graph(2, 3).unwrap();
        assert!(c.verified);
        assert_eq!((g.order(), g.regular_degree()), (16, Some(6)));
        assert!((ev(&c, "lambda2").as_f64().unwrap() - 2.0).abs() < 1e-8);
        for a in 2..8 {
            let (g, _) = lower_bound_graph(1, a).unwrap();
            assert_eq!(g.order() - 2 * g.regular_degree().unwrap(), 2);
        }
        assert!(lower_bound_graph(0, 3).is_err());
        assert!(lower_bound_graph(2, 1).is_err());
    }

    #[test]
    fn co_edge_examples() {
        let c = co_edge_bound_check(&complete_bipartite(4, 4).unwrap(), &lam("2")).unwrap();
        assert_eq!((ev(&c, "v"), ev(&c, "k"), ev(&c, "c2")), (&8.into(), &4.into(), &4.into()));
        assert_eq!(ev(&c, "v_minus_k_minus_1"), 3);
        let c = co_edge_bound_check(&petersen(), &lam("2")).unwrap();
        assert!(c.verified);
        assert_eq!(ev(&c, "c2"), 1);
        assert_eq!(ev(&c, "v_minus_k_minus_1"), 6);
        assert_eq!(ev(&c, "within_bound"), false);
        assert_eq!(ev(&c, "c2_exceeds_constant"), false);
        assert!((ev(&c, "bound").as_f64().unwrap() - 1.25).abs() < 1e-12);
        // complement of Petersen is T(5) = L(K₅): (10, 6, 4) by direct count
        let c = co_edge_bound_check(&petersen().complement(), &lam("2")).unwrap();
        assert_eq!((ev(&c, "k"), ev(&c, "c2")), (&6.into(), &4.into()));
        assert!(c.verified);
        let c = co_edge_bound_check(&complete(5), &lam("2")).unwrap();
        assert!(c.evidence.contains_key("vacuous"));
        assert!(co_edge_bound_check(&cycle(6).unwrap(), &lam("2")).is_err());
    }

    #[test]
    fn mu_bound_values() {
        assert_eq!(mu_bound(2).unwrap(), 8);
        assert_eq!(mu_bound(3).unwrap(), 81);
        assert!(mu_bound(1).is_err());
        let petersen = SrgParams { v: 10, k: 3, a1: 0, c2: 1 };
        assert!(srg_mu_check(petersen, 2).unwrap());
        assert!(!srg_mu_check(SrgParams { c2: 9, ..petersen }, 2).unwrap());
    }

    #[test]
    fn amply_regular_examples() {
        let c = amply_regular_check(&complete_multipartite(&[3, 3, 3]).unwrap(), 3).unwrap();
        assert_eq!(ev(&c, "complete_multipartite"), true);
        assert_eq!(ev(&c, "status"), "complete_multipartite");
        let c = amply_regular_check(&petersen(), 2).unwrap();
        assert_eq!(ev(&c, "status"), "c2_within_bound");
        assert!(c.verified);
        let c = amply_regular_check(&cycle(6).unwrap(), 2).unwrap();
        assert_eq!(ev(&c, "c2"), 1);
        assert!(c.verified);
        assert!(amply_regular_check(&crate::graph::path(4), 2).is_err());
    }
}
