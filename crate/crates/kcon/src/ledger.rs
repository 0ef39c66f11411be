//! Exact verification of the algebraic facts the connectivity bound rests
//! on: polynomial identities, corner evaluations, convexity and
//! monotonicity facts, and discriminant signs. Everything is decided in
//! exact rational arithmetic with zero tolerance.

use crate::bounds::{construction_upper_bound, rat, rat_int, Rational};
use crate::constructions::mader_edge_count;
use crate::poly::{Poly, Var};
use num::{Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LedgerError {
    #[error("expected a quadratic in {var}, found degree {degree}")]
    NotQuadratic { var: &'static str, degree: u8 },
    #[error("coefficient of {var}^{power} is not constant")]
    NonConstantCoeff { var: &'static str, power: u8 },
    #[error("box does not assign every variable of the polynomial")]
    IncompleteBox,
    #[error("polynomial is not separately convex in the box variables")]
    NotConvex,
}

/// Structural polynomial equality after expansion to canonical form.
pub fn poly_equal(p: &Poly, q: &Poly) -> bool {
    (p - q).is_zero()
}

/// True iff the (constant) coefficient of v^2 is nonnegative for each
/// listed variable. For quadratics this certifies convexity along each
/// axis, so box maxima are attained at box vertices.
pub fn separately_convex(p: &Poly, vars: &[Var]) -> bool {
    vars.iter().all(|&v| {
        p.coeff_of(v, 2)
            .as_constant()
            .is_some_and(|c| !c.is_negative())
    })
}

/// Exact maximum of a separately convex quadratic over the vertices of a
/// closed box, with the attaining vertex. Vertices are scanned in
/// lexicographic order (low endpoint first per variable, in the given
/// variable order); ties keep the first vertex.
pub fn box_vertex_max(
    p: &Poly,
    bounds: &[(Var, Rational, Rational)],
) -> Result<(Rational, Vec<(Var, Rational)>), LedgerError> {
    let boxed: Vec<Var> = bounds.iter().map(|b| b.0).collect();
    if p.vars().iter().any(|v| !boxed.contains(v)) {
        return Err(LedgerError::IncompleteBox);
    }
    if !separately_convex(p, &boxed) {
        return Err(LedgerError::NotConvex);
    }
    let d = bounds.len();
    let mut best: Option<(Rational, Vec<(Var, Rational)>)> = None;
    for mask in 0..1usize << d {
        let vertex: Vec<(Var, Rational)> = bounds
            .iter()
            .enumerate()
            .map(|(i, (v, lo, hi))| {
                (*v, if mask >> (d - 1 - i) & 1 == 0 { lo.clone() } else { hi.clone() })
            })
            .collect();
        let val = p.eval(&vertex).expect("box assigns all variables");
        if best.as_ref().is_none_or(|(bv, _)| val > *bv) {
            best = Some((val, vertex));
        }
    }
    Ok(best.expect("box has at least one vertex"))
}

/// True iff the partial derivative in `var` (linear, since `p` is quadratic
/// in `var`) is <= 0 at both interval endpoints, hence on the whole
/// interval. The derivative must reduce to a constant at each endpoint.
pub fn monotone_decreasing_on(
    p: &Poly,
    var: Var,
    lo: &Rational,
    hi: &Rational,
) -> Result<bool, LedgerError> {
    let degree = p.degree_in(var);
    if degree > 2 {
        return Err(LedgerError::NotQuadratic { var: var.name(), degree });
    }
    let deriv = p.partial(var);
    for endpoint in [lo, hi] {
        let at = deriv.substitute(var, &Poly::constant(endpoint.clone()));
        let c = at
            .as_constant()
            .ok_or(LedgerError::NonConstantCoeff { var: var.name(), power: 1 })?;
        if c.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sign and exact value of b^2 - 4ac for a univariate quadratic in `var`.
pub fn discriminant_sign(p: &Poly, var: Var) -> Result<(Sign, Rational), LedgerError> {
    let degree = p.degree_in(var);
    if degree != 2 {
        return Err(LedgerError::NotQuadratic { var: var.name(), degree });
    }
    let coeff = |power: u8| {
        p.coeff_of(var, power)
            .as_constant()
            .ok_or(LedgerError::NonConstantCoeff { var: var.name(), power })
    };
    let (a, b, c) = (coeff(2)?, coeff(1)?, coeff(0)?);
    let disc = b.clone() * b - rat_int(4) * a * c;
    Ok((Sign::of(&disc), disc))
}

// ---------------------------------------------------------------------------
// Check table
// ---------------------------------------------------------------------------

/// Whether a box-vertex maximum must stay strictly below zero or merely at
/// or below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxRequirement {
    StrictlyNegative,
    NonPositive,
}

/// One verifiable sub-claim. A check passes iff all its steps do.
#[derive(Clone, Debug)]
pub enum Step {
    Identity {
        lhs: Poly,
        rhs: Poly,
    },
    Eval {
        poly: Poly,
        point: Vec<(Var, Rational)>,
        expected: Rational,
    },
    SeparatelyConvex {
        poly: Poly,
        vars: Vec<Var>,
    },
    BoxVertexMax {
        poly: Poly,
        bounds: Vec<(Var, Rational, Rational)>,
        expected_max: Rational,
        requirement: MaxRequirement,
    },
    MonotoneDecreasing {
        poly: Poly,
        var: Var,
        lo: Rational,
        hi: Rational,
    },
    DiscriminantSign {
        poly: Poly,
        var: Var,
        expected_sign: Sign,
        expected_value: Rational,
    },
    /// A quadratic in one variable that is <= 0 for every real value:
    /// nonpositive leading coefficient and nonpositive discriminant.
    GloballyNonpositive {
        poly: Poly,
        var: Var,
    },
    /// Grid check of the construction against its closed-form upper bound,
    /// with equality exactly at multiples of k.
    ConstructionBound {
        k_range: (usize, usize),
        n_max: usize,
    },
}

impl Step {
    fn run(&self) -> Result<(), String> {
        match self {
            Step::Identity { lhs, rhs } => {
                if poly_equal(lhs, rhs) {
                    Ok(())
                } else {
                    Err(format!("identity failed: ({lhs}) != ({rhs}), difference {}", lhs - rhs))
                }
            }
            Step::Eval { poly, point, expected } => {
                let actual = poly.eval(point).map_err(|e| e.to_string())?;
                if actual == *expected {
                    Ok(())
                } else {
                    Err(format!(
                        "evaluation of {poly} at {} gave {actual}, expected {expected}",
                        point_str(point)
                    ))
                }
            }
            Step::SeparatelyConvex { poly, vars } => {
                if separately_convex(poly, vars) {
                    Ok(())
                } else {
                    Err(format!("{poly} is not separately convex in the listed variables"))
                }
            }
            Step::BoxVertexMax { poly, bounds, expected_max, requirement } => {
                let (max, vertex) = box_vertex_max(poly, bounds).map_err(|e| e.to_string())?;
                if max != *expected_max {
                    return Err(format!(
                        "box maximum of {poly} is {max} at {}, expected {expected_max}",
                        point_str(&vertex)
                    ));
                }
                let ok = match requirement {
                    MaxRequirement::StrictlyNegative => max.is_negative(),
                    MaxRequirement::NonPositive => !max.is_positive(),
                };
                if ok {
                    Ok(())
                } else {
                    Err(format!("box maximum {max} violates the sign requirement"))
                }
            }
            Step::MonotoneDecreasing { poly, var, lo, hi } => {
                match monotone_decreasing_on(poly, *var, lo, hi) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err(format!(
                        "{poly} is not monotone decreasing in {} on [{lo}, {hi}]",
                        var.name()
                    )),
                    Err(e) => Err(e.to_string()),
                }
            }
            Step::DiscriminantSign { poly, var, expected_sign, expected_value } => {
                let (sign, value) = discriminant_sign(poly, *var).map_err(|e| e.to_string())?;
                if sign == *expected_sign && value == *expected_value {
                    Ok(())
                } else {
                    Err(format!(
                        "discriminant of {poly} is {value} ({sign:?}), expected {expected_value} ({expected_sign:?})"
                    ))
                }
            }
            Step::GloballyNonpositive { poly, var } => {
                let a = poly
                    .coeff_of(*var, 2)
                    .as_constant()
                    .ok_or_else(|| format!("leading coefficient of {poly} is not constant"))?;
                if a.is_positive() {
                    return Err(format!("{poly} has positive leading coefficient {a}"));
                }
                if a.is_zero() {
                    let b = poly.coeff_of(*var, 1).as_constant();
                    let c = poly.coeff_of(*var, 0).as_constant();
                    return match (b, c) {
                        (Some(b), Some(c)) if b.is_zero() && !c.is_positive() => Ok(()),
                        _ => Err(format!("{poly} is not globally nonpositive")),
                    };
                }
                let (sign, value) = discriminant_sign(poly, *var).map_err(|e| e.to_string())?;
                if sign == Sign::Positive {
                    Err(format!("{poly} has positive discriminant {value}"))
                } else {
                    Ok(())
                }
            }
            Step::ConstructionBound { k_range, n_max } => {
                for k in k_range.0..=k_range.1 {
                    for n in k + 1..=*n_max {
                        let count = rat_int(mader_edge_count(n, k).map_err(|e| e.to_string())?
                            as i64);
                        let bound = construction_upper_bound(n, k);
                        if count > bound {
                            return Err(format!(
                                "construction at n={n} k={k} has {count} edges above bound {bound}"
                            ));
                        }
                        let divides = n % k == 0;
                        if (count == bound) != divides {
                            return Err(format!(
                                "equality at n={n} k={k} is {} but k | n is {divides}",
                                count == bound
                            ));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

fn point_str(point: &[(Var, Rational)]) -> String {
    let parts: Vec<String> =
        point.iter().map(|(v, r)| format!("{}={r}", v.name())).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug)]
pub struct LedgerCheck {
    pub id: &'static str,
    pub claim: &'static str,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail { step: usize, detail: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub claim: String,
    #[serde(flatten)]
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct LedgerReport {
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

/// Execute a check table. Results are sorted by check id, so a run is
/// deterministic regardless of table order.
pub fn run_checks(table: &[LedgerCheck]) -> LedgerReport {
    let mut checks: Vec<CheckResult> = table
        .iter()
        .map(|check| {
            let status = check
                .steps
                .iter()
                .enumerate()
                .find_map(|(i, step)| {
                    step.run().err().map(|detail| CheckStatus::Fail { step: i, detail })
                })
                .unwrap_or(CheckStatus::Pass);
            CheckResult { id: check.id.to_string(), claim: check.claim.to_string(), status }
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
    let failed = checks.len() - passed;
    LedgerReport { passed, failed, all_passed: failed == 0, checks }
}

/// Run the full standard check table.
pub fn run_all_checks() -> LedgerReport {
    run_checks(&standard_checks())
}

// -- polynomial building blocks --------------------------------------------

fn alpha() -> Poly {
    Poly::var(Var::Alpha)
}
fn beta() -> Poly {
    Poly::var(Var::Beta)
}
fn gamma() -> Poly {
    Poly::var(Var::Gamma)
}
fn sigma() -> Poly {
    Poly::var(Var::Sigma)
}
fn mu() -> Poly {
    Poly::var(Var::Mu)
}

fn c(num: i64, den: i64) -> Poly {
    Poly::constant(rat(num, den))
}

/// The normalized edge threshold (1/6)(x^2 + 4x - 2) as a polynomial in x.
fn matula_norm(x: &Poly) -> Poly {
    (x * x + x.scale(&rat_int(4)) - Poly::int(2)).scale(&rat(1, 6))
}

/// 2 gamma^2 - 11 gamma + 15: slack of the normalized threshold against
/// 19/12 (gamma - 1), scaled by 12.
fn g_base() -> Poly {
    gamma().pow(2).scale(&rat_int(2)) - gamma().scale(&rat_int(11)) + Poly::int(15)
}

/// 6 alpha^2 - 7 alpha + 1.
fn g1() -> Poly {
    alpha().pow(2).scale(&rat_int(6)) - alpha().scale(&rat_int(7)) + Poly::int(1)
}

/// Edge-increment bound shared by the small-side cases:
/// (1/2)(a+1)s + a(1-s) + a^2/2 - (7/6 - 2s)(a + s - 7/6).
fn small_side_bound() -> Poly {
    let half_join = (alpha() + Poly::int(1)).scale(&rat(1, 2)) * sigma();
    let cross = alpha() * (Poly::int(1) - sigma());
    let inside = alpha().pow(2).scale(&rat(1, 2));
    let product = (c(7, 6) - sigma().scale(&rat_int(2)))
        * (alpha() + sigma() - c(7, 6));
    half_join + cross + inside - product
}

fn nineteen_twelfths(p: Poly) -> Poly {
    p.scale(&rat(19, 12))
}

/// (1/36)(18a^2 + 54as - 63a + 6b^2 - 21b + 72s^2 - 108s + 67).
fn case21_canonical() -> Poly {
    (alpha().pow(2).scale(&rat_int(18))
        + (alpha() * sigma()).scale(&rat_int(54))
        - alpha().scale(&rat_int(63))
        + beta().pow(2).scale(&rat_int(6))
        - beta().scale(&rat_int(21))
        + sigma().pow(2).scale(&rat_int(72))
        - sigma().scale(&rat_int(108))
        + Poly::int(67))
    .scale(&rat(1, 36))
}

/// (1/36)(24a^2 + 54as - 84a + 72s^2 - 108s + 67).
fn phi1() -> Poly {
    (alpha().pow(2).scale(&rat_int(24))
        + (alpha() * sigma()).scale(&rat_int(54))
        - alpha().scale(&rat_int(84))
        + sigma().pow(2).scale(&rat_int(72))
        - sigma().scale(&rat_int(108))
        + Poly::int(67))
    .scale(&rat(1, 36))
}

fn phi2() -> Poly {
    small_side_bound() - nineteen_twelfths(alpha())
}

/// (1/6)(a^2 + as + 6a + s^2 - 3s + 3).
fn smaller_side_bound() -> Poly {
    (alpha().pow(2)
        + alpha() * sigma()
        + alpha().scale(&rat_int(6))
        + sigma().pow(2)
        - sigma().scale(&rat_int(3))
        + Poly::int(3))
    .scale(&rat(1, 6))
}

/// (1/6)(2a^2 + as - 7a + s^2 - 3s + 6).
fn phi3() -> Poly {
    (alpha().pow(2).scale(&rat_int(2))
        + alpha() * sigma()
        - alpha().scale(&rat_int(7))
        + sigma().pow(2)
        - sigma().scale(&rat_int(3))
        + Poly::int(6))
    .scale(&rat(1, 6))
}

/// (1/12)(2a^2 + 2as - 7a + 2s^2 - 6s + 6).
fn phi4() -> Poly {
    (alpha().pow(2).scale(&rat_int(2))
        + (alpha() * sigma()).scale(&rat_int(2))
        - alpha().scale(&rat_int(7))
        + sigma().pow(2).scale(&rat_int(2))
        - sigma().scale(&rat_int(6))
        + Poly::int(6))
    .scale(&rat(1, 12))
}

/// (1/6)(-3a^2 + 17a - 5): edge-increment bound when the padded subset of
/// the separator is used.
fn greater_side_bound() -> Poly {
    (alpha().pow(2).scale(&rat_int(-3)) + alpha().scale(&rat_int(17)) - Poly::int(5))
        .scale(&rat(1, 6))
}

fn corner_evals(
    p: &Poly,
    alphas: (Rational, Rational),
    sigmas: (Rational, Rational),
    expected: [Rational; 4],
) -> Vec<Step> {
    let corners = [
        (alphas.0.clone(), sigmas.0.clone()),
        (alphas.0, sigmas.1.clone()),
        (alphas.1.clone(), sigmas.0),
        (alphas.1, sigmas.1),
    ];
    corners
        .into_iter()
        .zip(expected)
        .map(|((a, s), e)| Step::Eval {
            poly: p.clone(),
            point: vec![(Var::Alpha, a), (Var::Sigma, s)],
            expected: e,
        })
        .collect()
}

/// The full standard table. Each check names the fact it decides; a check
/// passes iff every step passes under exact arithmetic.
pub fn standard_checks() -> Vec<LedgerCheck> {
    let mut table = Vec::new();

    table.push(LedgerCheck {
        id: "L-GAMMA3",
        claim: "2g^2-11g+15 vanishes at 5/2 and 3, is convex, and is nonpositive on [5/2, 3]",
        steps: vec![
            Step::Eval {
                poly: g_base(),
                point: vec![(Var::Gamma, rat(5, 2))],
                expected: rat_int(0),
            },
            Step::Eval { poly: g_base(), point: vec![(Var::Gamma, rat_int(3))], expected: rat_int(0) },
            Step::SeparatelyConvex { poly: g_base(), vars: vec![Var::Gamma] },
            Step::BoxVertexMax {
                poly: g_base(),
                bounds: vec![(Var::Gamma, rat(5, 2), rat_int(3))],
                expected_max: rat_int(0),
                requirement: MaxRequirement::NonPositive,
            },
        ],
    });

    // The normalized threshold exceeds the raw one by exactly gk/2 - 1/3.
    let gk = gamma() * Poly::var(Var::K);
    let choose2 = (&gk * &(&gk - &Poly::int(1))).scale(&rat(1, 2));
    let shrink = &gk - &Poly::var(Var::K);
    let raw = &choose2 - &(&(&(&shrink * &shrink) - &Poly::int(1)) * &c(1, 3));
    table.push(LedgerCheck {
        id: "L-MATULA-IDENT",
        claim: "k^2/6 (g^2+4g-2) equals C(gk,2) - (1/3)((gk-k)^2 - 1) + gk/2 - 1/3 identically",
        steps: vec![Step::Identity {
            lhs: matula_norm(&gamma()) * Poly::var(Var::K).pow(2),
            rhs: &raw + &(&gk.scale(&rat(1, 2)) - &c(1, 3)),
        }],
    });

    table.push(LedgerCheck {
        id: "L-ALPHA-SPLIT",
        claim: "19/12 a + 19/12 b = 19/12 (a+b)",
        steps: vec![Step::Identity {
            lhs: nineteen_twelfths(alpha()) + nineteen_twelfths(beta()),
            rhs: nineteen_twelfths(alpha() + beta()),
        }],
    });

    table.push(LedgerCheck {
        id: "L-A1-SMALLCASE",
        claim: "a^2/2 + a <= 3a/2 on [0,1], and 3/2 a + 19/12 b falls short of 19/12 (a+b) by a/12",
        steps: vec![
            Step::Identity {
                lhs: alpha().pow(2).scale(&rat(1, 2)) + alpha() - alpha().scale(&rat(3, 2)),
                rhs: (alpha().pow(2) - alpha()).scale(&rat(1, 2)),
            },
            Step::SeparatelyConvex {
                poly: (alpha().pow(2) - alpha()).scale(&rat(1, 2)),
                vars: vec![Var::Alpha],
            },
            Step::BoxVertexMax {
                poly: (alpha().pow(2) - alpha()).scale(&rat(1, 2)),
                bounds: vec![(Var::Alpha, rat_int(0), rat_int(1))],
                expected_max: rat_int(0),
                requirement: MaxRequirement::NonPositive,
            },
            Step::Identity {
                lhs: alpha().scale(&rat(3, 2)) + nineteen_twelfths(beta())
                    - nineteen_twelfths(alpha() + beta()),
                rhs: alpha().scale(&rat(-1, 12)),
            },
            Step::BoxVertexMax {
                poly: alpha().scale(&rat(-1, 12)),
                bounds: vec![(Var::Alpha, rat(1, 2), rat_int(1))],
                expected_max: rat(-1, 24),
                requirement: MaxRequirement::StrictlyNegative,
            },
        ],
    });

    // a^2/2 + a + Matula'(b+1) <= 19/12 (a+b), scaled by 12
    let aissmall = alpha().pow(2).scale(&rat_int(6)) + beta().pow(2).scale(&rat_int(2))
        - alpha().scale(&rat_int(7))
        - beta().scale(&rat_int(7))
        + Poly::int(6);
    table.push(LedgerCheck {
        id: "L-A1-EQUIV",
        claim: "the small-side reduction is 6a^2 + 2b^2 - 7a - 7b + 6 <= 0 after scaling by 12",
        steps: vec![Step::Identity {
            lhs: (alpha().pow(2).scale(&rat(1, 2)) + alpha()
                + matula_norm(&(beta() + Poly::int(1)))
                - nineteen_twelfths(alpha() + beta()))
            .scale(&rat_int(12)),
            rhs: aissmall.clone(),
        }],
    });

    table.push(LedgerCheck {
        id: "L-A1-MONO",
        claim: "both beta-quadratics are monotone decreasing in b below 7/4",
        steps: vec![
            Step::MonotoneDecreasing {
                poly: aissmall.clone(),
                var: Var::Beta,
                lo: rat_int(1),
                hi: rat(7, 4),
            },
            Step::MonotoneDecreasing {
                poly: case21_canonical(),
                var: Var::Beta,
                lo: rat_int(1),
                hi: rat(3, 2),
            },
        ],
    });

    table.push(LedgerCheck {
        id: "L-G1",
        claim: "g1 = 6a^2 - 7a + 1 has g1(1/2) = -1, g1(1) = 0, is convex, max 0 on [1/2, 1]",
        steps: vec![
            Step::Eval { poly: g1(), point: vec![(Var::Alpha, rat(1, 2))], expected: rat_int(-1) },
            Step::Eval { poly: g1(), point: vec![(Var::Alpha, rat_int(1))], expected: rat_int(0) },
            Step::SeparatelyConvex { poly: g1(), vars: vec![Var::Alpha] },
            Step::BoxVertexMax {
                poly: g1(),
                bounds: vec![(Var::Alpha, rat(1, 2), rat_int(1))],
                expected_max: rat_int(0),
                requirement: MaxRequirement::NonPositive,
            },
        ],
    });

    table.push(LedgerCheck {
        id: "L-MU-LB",
        claim: "m^2/2 + m(1+s) - 19m/12 factors as (m/2)(m - (7/6 - 2s))",
        steps: vec![Step::Identity {
            lhs: mu().pow(2).scale(&rat(1, 2)) + mu() * (Poly::int(1) + sigma())
                - nineteen_twelfths(mu()),
            rhs: mu().scale(&rat(1, 2)) * (mu() - (c(7, 6) - sigma().scale(&rat_int(2)))),
        }],
    });

    table.push(LedgerCheck {
        id: "L-CASE1",
        claim: "(a-1)/2 > 7/6 - 2s rearranges to a > 10/3 - 4s, which is 2 at s = 1/3",
        steps: vec![
            Step::Identity {
                lhs: ((alpha() - Poly::int(1)).scale(&rat(1, 2))
                    - (c(7, 6) - sigma().scale(&rat_int(2))))
                .scale(&rat_int(2)),
                rhs: alpha() - (c(10, 3) - sigma().scale(&rat_int(4))),
            },
            Step::Eval {
                poly: c(10, 3) - sigma().scale(&rat_int(4)),
                point: vec![(Var::Sigma, rat(1, 3))],
                expected: rat_int(2),
            },
        ],
    });

    table.push(LedgerCheck {
        id: "L-SIGMA-LB",
        claim: "7/9 - a/3 equals 5/18 at a = 3/2",
        steps: vec![Step::Eval {
            poly: c(7, 9) - alpha().scale(&rat(1, 3)),
            point: vec![(Var::Alpha, rat(3, 2))],
            expected: rat(5, 18),
        }],
    });

    table.push(LedgerCheck {
        id: "L-CASE21-IDENT",
        claim: "the small-side bound plus the Matula term minus 19/12 (a+b) expands as stated",
        steps: vec![Step::Identity {
            lhs: small_side_bound() + matula_norm(&(beta() + Poly::int(1)))
                - nineteen_twelfths(alpha() + beta()),
            rhs: case21_canonical(),
        }],
    });

    table.push(LedgerCheck {
        id: "L-PHI1",
        claim: "phi1 is the b = a slice, convex in a and s, negative at all four box corners",
        steps: {
            let mut steps = vec![
                Step::Identity {
                    lhs: case21_canonical().substitute(Var::Beta, &alpha()),
                    rhs: phi1(),
                },
                Step::SeparatelyConvex { poly: phi1(), vars: vec![Var::Alpha, Var::Sigma] },
            ];
            steps.extend(corner_evals(
                &phi1(),
                (rat_int(1), rat(3, 2)),
                (rat(5, 18), rat(1, 3)),
                [rat(-11, 162), rat(-1, 12), rat(-125, 648), rat(-1, 6)],
            ));
            steps.push(Step::BoxVertexMax {
                poly: phi1(),
                bounds: vec![
                    (Var::Alpha, rat_int(1), rat(3, 2)),
                    (Var::Sigma, rat(5, 18), rat(1, 3)),
                ],
                expected_max: rat(-11, 162),
                requirement: MaxRequirement::StrictlyNegative,
            });
            steps
        },
    });

    table.push(LedgerCheck {
        id: "L-PHI2",
        claim: "phi2 is convex in a and s and negative at all four box corners",
        steps: {
            let mut steps =
                vec![Step::SeparatelyConvex { poly: phi2(), vars: vec![Var::Alpha, Var::Sigma] }];
            steps.extend(corner_evals(
                &phi2(),
                (rat_int(1), rat(3, 2)),
                (rat(5, 18), rat(1, 3)),
                [rat(-49, 324), rat(-1, 6), rat(-125, 648), rat(-1, 6)],
            ));
            steps.push(Step::BoxVertexMax {
                poly: phi2(),
                bounds: vec![
                    (Var::Alpha, rat_int(1), rat(3, 2)),
                    (Var::Sigma, rat(5, 18), rat(1, 3)),
                ],
                expected_max: rat(-49, 324),
                requirement: MaxRequirement::StrictlyNegative,
            });
            steps
        },
    });

    table.push(LedgerCheck {
        id: "L-SMALLER-IDENT",
        claim: "Matula'(a+1-s) + (a+1)s/2 expands to (1/6)(a^2 + as + 6a + s^2 - 3s + 3)",
        steps: vec![Step::Identity {
            lhs: matula_norm(&(alpha() + Poly::int(1) - sigma()))
                + (alpha() + Poly::int(1)).scale(&rat(1, 2)) * sigma(),
            rhs: smaller_side_bound(),
        }],
    });

    table.push(LedgerCheck {
        id: "L-PHI3",
        claim: "phi3 is the b = a slice of the larger-side estimate, convex, negative at corners",
        steps: {
            let full = smaller_side_bound() + matula_norm(&(beta() + Poly::int(1)))
                - nineteen_twelfths(alpha() + beta());
            let canonical = (alpha().pow(2).scale(&rat_int(2))
                + (alpha() * sigma()).scale(&rat_int(2))
                - alpha().scale(&rat_int(7))
                + beta().pow(2).scale(&rat_int(2))
                - beta().scale(&rat_int(7))
                + sigma().pow(2).scale(&rat_int(2))
                - sigma().scale(&rat_int(6))
                + Poly::int(12))
            .scale(&rat(1, 12));
            let mut steps = vec![
                Step::Identity { lhs: full, rhs: canonical.clone() },
                Step::Identity { lhs: canonical.substitute(Var::Beta, &alpha()), rhs: phi3() },
                Step::SeparatelyConvex { poly: phi3(), vars: vec![Var::Alpha, Var::Sigma] },
            ];
            steps.extend(corner_evals(
                &phi3(),
                (rat(4, 3), rat(3, 2)),
                (rat(1, 3), rat_int(1)),
                [rat(-1, 27), rat(-2, 27), rat(-7, 108), rat(-1, 12)],
            ));
            steps.push(Step::BoxVertexMax {
                poly: phi3(),
                bounds: vec![
                    (Var::Alpha, rat(4, 3), rat(3, 2)),
                    (Var::Sigma, rat(1, 3), rat_int(1)),
                ],
                expected_max: rat(-1, 27),
                requirement: MaxRequirement::StrictlyNegative,
            });
            steps
        },
    });

    table.push(LedgerCheck {
        id: "L-PHI4",
        claim: "phi4 = (1/12)(2a^2 + 2as - 7a + 2s^2 - 6s + 6), convex, negative at corners",
        steps: {
            let mut steps = vec![
                Step::Identity {
                    lhs: smaller_side_bound() - nineteen_twelfths(alpha()),
                    rhs: phi4(),
                },
                Step::SeparatelyConvex { poly: phi4(), vars: vec![Var::Alpha, Var::Sigma] },
            ];
            steps.extend(corner_evals(
                &phi4(),
                (rat(4, 3), rat(3, 2)),
                (rat(1, 3), rat_int(1)),
                [rat(-1, 18), rat(-5, 54), rat(-7, 108), rat(-1, 12)],
            ));
            steps.push(Step::BoxVertexMax {
                poly: phi4(),
                bounds: vec![
                    (Var::Alpha, rat(4, 3), rat(3, 2)),
                    (Var::Sigma, rat(1, 3), rat_int(1)),
                ],
                expected_max: rat(-1, 18),
                requirement: MaxRequirement::StrictlyNegative,
            });
            steps
        },
    });

    table.push(LedgerCheck {
        id: "L-GREATER-SETUP",
        claim: "1 - 2(a-1) is 1/3 at a = 4/3 and decreasing, hence >= 1/3 for a <= 4/3",
        steps: vec![
            Step::Eval {
                poly: Poly::int(1) - (alpha() - Poly::int(1)).scale(&rat_int(2)),
                point: vec![(Var::Alpha, rat(4, 3))],
                expected: rat(1, 3),
            },
            Step::MonotoneDecreasing {
                poly: Poly::int(1) - (alpha() - Poly::int(1)).scale(&rat_int(2)),
                var: Var::Alpha,
                lo: rat_int(1),
                hi: rat(4, 3),
            },
        ],
    });

    table.push(LedgerCheck {
        id: "L-GREATER-IDENT",
        claim: "Matula'(3a-2) + a(3-2a) - (a-1)/6 expands to (1/6)(-3a^2 + 17a - 5)",
        steps: vec![Step::Identity {
            lhs: matula_norm(&(alpha().scale(&rat_int(3)) - Poly::int(2)))
                + alpha() * (Poly::int(3) - alpha().scale(&rat_int(2)))
                - (alpha() - Poly::int(1)).scale(&rat(1, 6)),
            rhs: greater_side_bound(),
        }],
    });

    table.push(LedgerCheck {
        id: "L-GREATER-C1",
        claim: "the beta <= 3/2 case expands as stated and the b = a slice is -(1/3)(a-1)^2 <= 0",
        steps: {
            let full = greater_side_bound() + matula_norm(&(beta() + Poly::int(1)))
                - nineteen_twelfths(alpha() + beta());
            let canonical = (alpha().pow(2).scale(&rat_int(-6))
                + alpha().scale(&rat_int(15))
                + beta().pow(2).scale(&rat_int(2))
                - beta().scale(&rat_int(7))
                - Poly::int(4))
            .scale(&rat(1, 12));
            let slice = (alpha() - Poly::int(1)).pow(2).scale(&rat(-1, 3));
            vec![
                Step::Identity { lhs: full, rhs: canonical.clone() },
                Step::Identity {
                    lhs: canonical.substitute(Var::Beta, &alpha()),
                    rhs: slice.clone(),
                },
                Step::GloballyNonpositive { poly: slice, var: Var::Alpha },
            ]
        },
    });

    table.push(LedgerCheck {
        id: "L-GREATER-DISC",
        claim: "6a^2 - 15a + 10 has discriminant -15, so -(1/12)(6a^2 - 15a + 10) <= 0 for all a",
        steps: {
            let quad = alpha().pow(2).scale(&rat_int(6)) - alpha().scale(&rat_int(15))
                + Poly::int(10);
            vec![
                Step::Identity {
                    lhs: greater_side_bound() - nineteen_twelfths(alpha()),
                    rhs: quad.scale(&rat(-1, 12)),
                },
                Step::DiscriminantSign {
                    poly: quad.clone(),
                    var: Var::Alpha,
                    expected_sign: Sign::Negative,
                    expected_value: rat_int(-15),
                },
                Step::GloballyNonpositive { poly: quad.scale(&rat(-1, 12)), var: Var::Alpha },
            ]
        },
    });

    table.push(LedgerCheck {
        id: "L-CONSTR-BOUND",
        claim: "the construction never exceeds 3/2 (k - 1/3)(n - k) edges; equality iff k | n",
        steps: vec![Step::ConstructionBound { k_range: (2, 6), n_max: 40 }],
    });

    table
}
