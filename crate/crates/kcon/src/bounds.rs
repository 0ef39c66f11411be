//! Exact-rational edge thresholds, raw and normalized (gamma = n/k).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive};
use thiserror::Error;

pub type Rational = BigRational;

/// Shorthand for a reduced rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Render as `p/q` with a 6-place decimal approximation.
pub fn render_rational(r: &Rational) -> String {
    let approx = r.to_f64().map(|f| format!(" (~{f:.6})")).unwrap_or_default();
    if r.denom().is_one() {
        format!("{}{approx}", r.numer())
    } else {
        format!("{}/{}{approx}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bounds require k >= 2, got k = {0}")]
    KTooSmall(usize),
    #[error("bounds require n >= k+1, got n = {n}, k = {k}")]
    NTooSmall { n: usize, k: usize },
    #[error("{0:?} is not a forcing bound")]
    NotForcing(BoundKind),
    #[error("{0:?} has no normalized form")]
    NotNormalized(BoundKind),
    #[error("normalized thresholds require gamma > 1")]
    GammaTooSmall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum BoundKind {
    /// Attainable maximum 3/2 (k - 1/3)(n - k) of the extremal construction.
    MaderConjecture,
    /// Forcing bound 193/120 k(n-k), valid for n >= 9k/4.
    YusterThm,
    /// Forcing bound 19/12 k(n-k), valid for n >= 5k/2.
    NewThm,
    /// Forcing bound C(n,2) - (1/3)((n-k)^2 - 1), valid for n >= k+1.
    MatulaLemma,
    /// Normalized Matula bound (1/6)(gamma^2 + 4 gamma - 2).
    MatulaNormalized,
    /// Normalized conjecture value 3/2 (gamma - 1) (attainable maximum).
    ConjectureNormalized,
    /// Normalized new bound 19/12 (gamma - 1).
    NewNormalized,
}

/// How a threshold is to be read: a forcing bound guarantees a
/// (k+1)-connected subgraph above it; a conjecture/construction bound is the
/// attainable maximum of subgraph-free graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Reading {
    Forcing,
    AttainableMax,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub kind: BoundKind,
    pub value: Rational,
    pub reading: Reading,
    /// Whether (n, k) lies in the kind's stated validity domain. Reported,
    /// never enforced.
    pub in_domain: bool,
}

impl BoundKind {
    pub fn reading(self) -> Reading {
        match self {
            BoundKind::MaderConjecture | BoundKind::ConjectureNormalized => Reading::AttainableMax,
            _ => Reading::Forcing,
        }
    }

    pub fn is_forcing(self) -> bool {
        self.reading() == Reading::Forcing
    }

    /// The stated validity domain in (n, k).
    pub fn in_domain(self, n: usize, k: usize) -> bool {
        match self {
            BoundKind::YusterThm => 4 * n >= 9 * k,
            BoundKind::NewThm | BoundKind::NewNormalized | BoundKind::ConjectureNormalized => {
                2 * n >= 5 * k
            }
            BoundKind::MatulaLemma | BoundKind::MatulaNormalized => n >= k + 1,
            BoundKind::MaderConjecture => true,
        }
    }
}

/// Normalized threshold at gamma (> 1) for the normalized kinds.
pub fn normalized(gamma: &Rational, kind: BoundKind) -> Result<Rational, BoundsError> {
    if gamma <= &Rational::one() {
        return Err(BoundsError::GammaTooSmall);
    }
    let g = gamma.clone();
    match kind {
        BoundKind::MatulaNormalized => {
            Ok((g.clone() * &g + rat_int(4) * &g - rat_int(2)) * rat(1, 6))
        }
        BoundKind::ConjectureNormalized => Ok(rat(3, 2) * (g - Rational::one())),
        BoundKind::NewNormalized => Ok(rat(19, 12) * (g - Rational::one())),
        other => Err(BoundsError::NotNormalized(other)),
    }
}

/// Exact edge threshold at (n, k). Forcing kinds read "|E| > B implies a
/// (k+1)-connected subgraph exists"; conjecture kinds return the attainable
/// maximum instead.
pub fn threshold(kind: BoundKind, n: usize, k: usize) -> Result<Threshold, BoundsError> {
    if k < 2 {
        return Err(BoundsError::KTooSmall(k));
    }
    if n < k + 1 {
        return Err(BoundsError::NTooSmall { n, k });
    }
    let (ni, ki) = (rat_int(n as i64), rat_int(k as i64));
    let value = match kind {
        BoundKind::MaderConjecture => rat(3, 2) * (ki.clone() - rat(1, 3)) * (ni - ki),
        BoundKind::YusterThm => rat(193, 120) * ki.clone() * (ni - ki),
        BoundKind::NewThm => rat(19, 12) * ki.clone() * (ni - ki),
        BoundKind::MatulaLemma => {
            let choose2 = ni.clone() * (ni.clone() - Rational::one()) / rat_int(2);
            let d = ni - ki;
            choose2 - rat(1, 3) * (d.clone() * d - Rational::one())
        }
        BoundKind::MatulaNormalized | BoundKind::ConjectureNormalized | BoundKind::NewNormalized => {
            let gamma = Rational::new(BigInt::from(n), BigInt::from(k));
            normalized(&gamma, kind)? * ki.clone() * ki
        }
    };
    Ok(Threshold { kind, value, reading: kind.reading(), in_domain: kind.in_domain(n, k) })
}

/// Smallest integer edge count strictly exceeding the forcing threshold.
pub fn min_forcing_edge_count(kind: BoundKind, n: usize, k: usize) -> Result<usize, BoundsError> {
    if !kind.is_forcing() {
        return Err(BoundsError::NotForcing(kind));
    }
    let t = threshold(kind, n, k)?;
    debug_assert!(!t.value.is_negative());
    // floor(B) + 1 covers both readings: B integer gives B + 1
    let m: BigInt = t.value.floor().to_integer() + 1;
    debug_assert!(Rational::from_integer(m.clone()) > t.value);
    Ok(m.to_usize().expect("threshold fits usize"))
}

/// Exact bound of the construction, 3/2 (k - 1/3)(n - k), for the grid
/// checks. Equality with the construction's edge count holds iff k | n.
pub fn construction_upper_bound(n: usize, k: usize) -> Rational {
    rat(3, 2) * (rat_int(k as i64) - rat(1, 3)) * rat_int((n - k) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold(BoundKind::NewThm, 6, 2).unwrap().value, rat(38, 3));
        assert_eq!(threshold(BoundKind::MatulaLemma, 5, 2).unwrap().value, rat(22, 3));
        let t = threshold(BoundKind::MaderConjecture, 6, 2).unwrap();
        assert_eq!(t.value, rat_int(10));
        assert_eq!(t.reading, Reading::AttainableMax);
    }

    #[test]
    fn min_forcing_examples() {
        assert_eq!(min_forcing_edge_count(BoundKind::NewThm, 6, 2).unwrap(), 13);
        assert_eq!(min_forcing_edge_count(BoundKind::MatulaLemma, 5, 2).unwrap(), 8);
        assert_eq!(min_forcing_edge_count(BoundKind::NewThm, 5, 2).unwrap(), 10);
        // integer threshold bumps by one
        assert_eq!(threshold(BoundKind::MatulaLemma, 6, 2).unwrap().value, rat_int(10));
        assert_eq!(min_forcing_edge_count(BoundKind::MatulaLemma, 6, 2).unwrap(), 11);
        assert_eq!(
            min_forcing_edge_count(BoundKind::MaderConjecture, 6, 2).unwrap_err(),
            BoundsError::NotForcing(BoundKind::MaderConjecture)
        );
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized(&rat_int(3), BoundKind::NewNormalized).unwrap(), rat(19, 6));
        assert_eq!(normalized(&rat(5, 2), BoundKind::MatulaNormalized).unwrap(), rat(19, 8));
        assert_eq!(normalized(&rat_int(2), BoundKind::ConjectureNormalized).unwrap(), rat(3, 2));
        assert!(normalized(&rat_int(1), BoundKind::NewNormalized).is_err());
        assert!(normalized(&rat_int(3), BoundKind::NewThm).is_err());
    }

    #[test]
    fn scale_identity() {
        for k in 2..=10usize {
            for n in k + 1..=40usize {
                let raw = threshold(BoundKind::NewThm, n, k).unwrap().value;
                let gamma = Rational::new(n.into(), k.into());
                let norm = normalized(&gamma, BoundKind::NewNormalized).unwrap();
                assert_eq!(raw, norm * rat_int((k * k) as i64));
            }
        }
    }

    #[test]
    fn ordering_on_common_domain() {
        for k in 2..=10usize {
            for n in (5 * k).div_ceil(2)..=40usize {
                let mader = threshold(BoundKind::MaderConjecture, n, k).unwrap().value;
                let new = threshold(BoundKind::NewThm, n, k).unwrap().value;
                let yuster = threshold(BoundKind::YusterThm, n, k).unwrap().value;
                assert!(mader <= new && new <= yuster, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn min_forcing_brackets_threshold() {
        for kind in [BoundKind::NewThm, BoundKind::YusterThm, BoundKind::MatulaLemma] {
            for k in 2..=5usize {
                for n in k + 1..=20usize {
                    let t = threshold(kind, n, k).unwrap().value;
                    let m = min_forcing_edge_count(kind, n, k).unwrap();
                    let m = rat_int(m as i64);
                    assert!(m > t && t >= m - rat_int(1));
                }
            }
        }
    }

    #[test]
    fn domain_reporting() {
        assert!(!threshold(BoundKind::NewThm, 4, 2).unwrap().in_domain);
        assert!(threshold(BoundKind::NewThm, 5, 2).unwrap().in_domain);
        assert!(!threshold(BoundKind::YusterThm, 4, 2).unwrap().in_domain);
        assert!(threshold(BoundKind::YusterThm, 5, 2).unwrap().in_domain);
    }

    #[test]
    fn rendering() {
        assert_eq!(render_rational(&rat(38, 3)), "38/3 (~12.666667)");
        assert_eq!(render_rational(&rat_int(10)), "10 (~10.000000)");
        assert!(render_rational(&Rational::zero()).starts_with('0'));
    }
}
