//! Fourier–Mukai partner counting: the untwisted closed formula and the
//! twisted lower bounds over all square decompositions.

use crate::arith::{euler_phi, satisfies_star_star, star_star_failure, satisfies_star_star_prime, tau};
use crate::error::CountingError;

/// Counting data for an untwisted discriminant `d` satisfying (**).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub d: u64,
    pub satisfies_star_star: bool,
    pub tau: u32,
    /// Fourier–Mukai partners of the associated degree-d K3: `2^(tau-1)`.
    pub m: u64,
    /// Period-map fibers carrying partners: `m` when d ≡ 4 mod 8, `2m` when
    /// d ≡ 2 mod 8.
    pub fiber_count: u64,
    /// Degree of the rational map to the K3 moduli space by residue:
    /// 1 (birational) when d ≡ 4 mod 8, 2 (two-to-one) when d ≡ 2 mod 8.
    pub multiplicity_factor: u8,
}

pub fn untwisted_counts(d: u64) -> Result<CountReport, CountingError> {
    if let Some(reason) = star_star_failure(d) {
        return Err(CountingError::StarStarViolated { d, reason });
    }
    if d <= 8 {
        return Err(CountingError::DiscriminantTooSmall { d });
    }
    let t = tau(d)?;
    debug_assert!(t >= 1, "d > 8 satisfying (**) has a prime dividing d/2");
    let m = 1u64 << (t - 1);
    let (fiber_count, multiplicity_factor) = match d % 8 {
        4 => (m, 1),
        2 => (2 * m, 2),
        _ => unreachable!("(**) forces d = 2, 4 mod 8"),
    };
    Ok(CountReport { d, satisfies_star_star: true, tau: t, m, fiber_count, multiplicity_factor })
}

/// All decompositions `d' = d · r²` with `d` satisfying (**), sorted by `r`
/// ascending. `r = 1` is excluded unless `include_r1` (order-r Brauer
/// classes have r ≥ 2; the untwisted case is the r = 1 slot).
pub fn twisted_decompositions(d_prime: u64, include_r1: bool) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    if d_prime == 0 {
        return out;
    }
    let start = if include_r1 { 1 } else { 2 };
    let mut r = start;
    while r * r <= d_prime {
        if d_prime.is_multiple_of(r * r) && satisfies_star_star(d_prime / (r * r)) {
            out.push((d_prime / (r * r), r));
        }
        r += 1;
    }
    out
}

/// Counting data for one twisted decomposition `d' = d r²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedCounts {
    /// Order-r Fourier–Mukai partners of the twisted K3:
    /// `phi(r) · 2^(tau(d)-1)` when `r = 2` or `d > 2`, else `phi(r)/2`.
    pub m_prime: u64,
    /// At least this many fibers: `m'` when d' ≡ 0 mod 4, `2m'` when
    /// d' ≡ 2 mod 8.
    pub fiber_lower_bound: u64,
}

pub fn twisted_counts(d: u64, r: u64) -> Result<TwistedCounts, CountingError> {
    if let Some(reason) = star_star_failure(d) {
        return Err(CountingError::StarStarViolated { d, reason });
    }
    if r < 2 {
        return Err(CountingError::OrderTooSmall(r));
    }
    if d == 2 && r == 2 {
        return Err(CountingError::DegenerateTwoTwo);
    }
    let m_prime = if r == 2 || d > 2 {
        // With (2,2) refused above, this branch has d > 2, so tau(d) >= 1.
        euler_phi(r) * (1u64 << (tau(d)? - 1))
    } else {
        // r > 2 and d = 2: phi(r) is even there.
        euler_phi(r) / 2
    };
    let d_prime = d * r * r;
    let fiber_lower_bound = match (d_prime % 4, d_prime % 8) {
        (0, _) => m_prime,
        (_, 2) => 2 * m_prime,
        _ => unreachable!("d r^2 with d = 2, 4 mod 8 is 0 mod 4 or 2 mod 8"),
    };
    Ok(TwistedCounts { m_prime, fiber_lower_bound })
}

/// One decomposition's slot in a [`TwistedReport`]: the counts, or the
/// documented refusal when the formula degenerates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCounts {
    pub d: u64,
    pub r: u64,
    pub counts: Option<TwistedCounts>,
    pub note: Option<String>,
}

/// Everything the twisted side knows about a discriminant `d'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedReport {
    pub d_prime: u64,
    pub satisfies_star_star_prime: bool,
    pub decompositions: Vec<DecompositionCounts>,
}

pub fn twisted_report(d_prime: u64, include_r1: bool) -> TwistedReport {
    let decompositions = twisted_decompositions(d_prime, include_r1)
        .into_iter()
        .map(|(d, r)| {
            if r == 1 {
                return DecompositionCounts {
                    d,
                    r,
                    counts: None,
                    note: Some("untwisted slot (r = 1); see the untwisted count".into()),
                };
            }
            match twisted_counts(d, r) {
                Ok(counts) => DecompositionCounts { d, r, counts: Some(counts), note: None },
                Err(e) => DecompositionCounts { d, r, counts: None, note: Some(e.to_string()) },
            }
        })
        .collect();
    TwistedReport {
        d_prime,
        satisfies_star_star_prime: satisfies_star_star_prime(d_prime),
        decompositions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn untwisted_spot_table() {
        let r = untwisted_counts(26).unwrap();
        assert_eq!((r.m, r.fiber_count, r.multiplicity_factor), (1, 2, 2));
        let r = untwisted_counts(20).unwrap();
        assert_eq!((r.m, r.fiber_count, r.multiplicity_factor), (2, 2, 1));
        let r = untwisted_counts(10).unwrap();
        assert_eq!((r.m, r.fiber_count), (1, 2));
        let r = untwisted_counts(52).unwrap();
        assert_eq!((r.m, r.fiber_count), (2, 2));
    }

    #[test]
    fn untwisted_hypotheses_named() {
        assert!(matches!(
            untwisted_counts(12),
            Err(CountingError::StarStarViolated { d: 12, .. })
        ));
        assert_eq!(untwisted_counts(4).unwrap_err(), CountingError::DiscriminantTooSmall { d: 4 });
    }

    #[test]
    fn decomposition_tables() {
        assert_eq!(twisted_decompositions(16, false), vec![(4, 2)]);
        assert_eq!(twisted_decompositions(18, false), vec![(2, 3)]);
        assert_eq!(twisted_decompositions(40, false), vec![(10, 2)]);
        assert_eq!(twisted_decompositions(36, false), vec![(4, 3)]);
        assert_eq!(twisted_decompositions(12, false), vec![]);
        // r = 1 slot behind the flag
        assert_eq!(twisted_decompositions(10, true), vec![(10, 1)]);
        assert_eq!(twisted_decompositions(10, false), vec![]);
    }

    #[test]
    fn twisted_count_examples() {
        // (2, 3): second branch, phi(3)/2 = 1; d' = 18 = 2 mod 8 -> 2.
        let c = twisted_counts(2, 3).unwrap();
        assert_eq!((c.m_prime, c.fiber_lower_bound), (1, 2));
        // (4, 3): first branch, phi(3) * 2^(tau(4)-1) = 2; d' = 36 = 0 mod 4.
        let c = twisted_counts(4, 3).unwrap();
        assert_eq!((c.m_prime, c.fiber_lower_bound), (2, 2));
        // (10, 2): phi(2) * 2^(tau(10)-1) = 1; d' = 40 = 0 mod 4.
        let c = twisted_counts(10, 2).unwrap();
        assert_eq!((c.m_prime, c.fiber_lower_bound), (1, 1));
        // (4, 2) for d' = 16.
        let c = twisted_counts(4, 2).unwrap();
        assert_eq!(c.m_prime, 1);
    }

    #[test]
    fn two_two_is_refused() {
        assert_eq!(twisted_counts(2, 2).unwrap_err(), CountingError::DegenerateTwoTwo);
        // ... and surfaces as a note in the report for d' = 8.
        let rep = twisted_report(8, false);
        assert_eq!(rep.decompositions.len(), 1);
        assert!(rep.decompositions[0].counts.is_none());
        assert!(rep.decompositions[0].note.as_ref().unwrap().contains("refused"));
    }

    #[test]
    fn twisted_report_shape() {
        let rep = twisted_report(36, false);
        assert!(rep.satisfies_star_star_prime);
        assert_eq!(rep.decompositions.len(), 1);
        assert_eq!(rep.decompositions[0].counts.as_ref().unwrap().m_prime, 2);
        let rep = twisted_report(12, false);
        assert!(!rep.satisfies_star_star_prime);
        assert!(rep.decompositions.is_empty());
    }
}
