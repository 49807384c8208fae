//! Cath's exact posteriors and the analytic bounds on her posterior/prior
//! ratio, all in exact rational arithmetic.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::geometry::GeometryError;
use crate::strategy::{is_informative, is_weakly_secure, Announcement, Card, Hand, HandTable, Params, StrategyError};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SecurityError {
    #[error("Cath's hand is empty")]
    EmptyCath,
    #[error("card {0} is in Cath's hand")]
    CardInCath(Card),
    #[error("card {0} is outside the deck")]
    CardOutOfRange(Card),
    #[error("no announced hand avoids Cath's cards")]
    AnnouncementInconsistent,
    #[error("bound denominator is not positive for q={q}, alpha={alpha}, delta={delta}, c={c}")]
    DenominatorNonPositive { q: u64, alpha: u32, delta: u32, c: u128 },
    #[error("need 0 < alpha < delta (alpha={alpha}, delta={delta})")]
    BadDimensions { alpha: u32, delta: u32 },
    #[error("xi must lie strictly between 0 and delta - alpha, got {0}")]
    BadXi(Rational),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

pub type Result<T> = std::result::Result<T, SecurityError>;

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Parses `n/d` or a plain integer into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    (!d.is_zero()).then(|| Rational::new(n, d))
}

/// `P(x ∈ A | C) = a / (a + b)`.
pub fn prior(params: &Params) -> Rational {
    ratio(params.a(), params.a() + params.b())
}

/// Tallies for a fixed Cath hand: the number of announced hands avoiding
/// it and, for each card, how many of those hold it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidCounts {
    pub avoiding: u64,
    pub through: Vec<u64>,
}

/// One pass over a precomputed hand table; counts are indexed by card.
pub fn avoid_counts_in(table: &HandTable, cath: &Hand) -> Result<AvoidCounts> {
    if cath.is_empty() {
        return Err(SecurityError::EmptyCath);
    }
    if let Some(&card) = cath.iter().find(|&&c| c as usize >= table.deck_size()) {
        return Err(SecurityError::CardOutOfRange(card));
    }
    let held = table.mask(cath)?;
    let mut counts = AvoidCounts { avoiding: 0, through: vec![0; table.deck_size()] };
    for h in table.hands() {
        if h.iter().any(|&c| held[c as usize]) {
            continue;
        }
        counts.avoiding += 1;
        for &c in h {
            counts.through[c as usize] += 1;
        }
    }
    Ok(counts)
}

pub fn avoid_counts(ann: &Announcement, cath: &Hand) -> Result<AvoidCounts> {
    avoid_counts_in(&HandTable::new(ann)?, cath)
}

/// `|𝒜 ∖ C|`.
pub fn count_hands_avoiding(ann: &Announcement, cath: &Hand) -> Result<BigUint> {
    Ok(avoid_counts(ann, cath)?.avoiding.into())
}

fn check_outside(ann: &Announcement, x: Card, cath: &Hand) -> Result<()> {
    if cath.contains(&x) {
        return Err(SecurityError::CardInCath(x));
    }
    if x as usize >= ann.deck_size() {
        return Err(SecurityError::CardOutOfRange(x));
    }
    Ok(())
}

/// `|𝒜_x ∖ C|`: announced hands holding `x` and avoiding `C`.
pub fn count_hands_through_avoiding(ann: &Announcement, x: Card, cath: &Hand) -> Result<BigUint> {
    check_outside(ann, x, cath)?;
    let counts = avoid_counts(ann, cath)?;
    Ok(counts.through[x as usize].into())
}

/// `P(x ∈ A | C, 𝒜) = |𝒜_x ∖ C| / |𝒜 ∖ C|`.
pub fn exact_posterior(ann: &Announcement, cath: &Hand, x: Card) -> Result<Rational> {
    check_outside(ann, x, cath)?;
    let counts = avoid_counts(ann, cath)?;
    if counts.avoiding == 0 {
        return Err(SecurityError::AnnouncementInconsistent);
    }
    Ok(ratio(counts.through[x as usize], counts.avoiding))
}

pub fn posterior_ratio(params: &Params, ann: &Announcement, cath: &Hand, x: Card) -> Result<Rational> {
    Ok(exact_posterior(ann, cath, x)? / prior(params))
}

/// Lower and upper bound on the posterior/prior ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: Rational,
    pub upper: Rational,
}

impl BoundPair {
    /// `max(1 - lower, upper - 1)`.
    pub fn epsilon(&self) -> Rational {
        let one = Rational::one();
        let below = &one - &self.lower;
        let above = &self.upper - &one;
        below.max(above)
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lower <= r && r <= &self.upper
    }
}

struct Powers {
    q: BigInt,
    c: BigInt,
    qd: BigInt,
    qa: BigInt,
}

fn powers(q: u64, alpha: u32, delta: u32, c: u128) -> Result<Powers> {
    if alpha == 0 || alpha >= delta {
        return Err(SecurityError::BadDimensions { alpha, delta });
    }
    let qb = BigInt::from(q);
    Ok(Powers { qd: Pow::pow(&qb, delta), qa: Pow::pow(&qb, alpha), q: qb, c: BigInt::from(c) })
}

fn checked_ratio(num: BigInt, den: BigInt, q: u64, alpha: u32, delta: u32, c: u128) -> Result<Rational> {
    if !den.is_positive() {
        return Err(SecurityError::DenominatorNonPositive { q, alpha, delta, c });
    }
    Ok(ratio(num, den))
}

/// Closed-form bounds on the posterior/prior ratio for any Cath hand of
/// size `c` and any card she does not hold.
pub fn bounds_exact(q: u64, alpha: u32, delta: u32, c: u128) -> Result<BoundPair> {
    let Powers { c: cc, qd, qa, .. } = powers(q, alpha, delta, c)?;
    let q2d = &qd * &qd;
    let qda = &qd * &qa;
    let lower_num = &q2d - &cc * &qda - &qd + &cc * &cc * (&qa - 1) + &cc;
    let lower_den = &q2d - &qd - &qda + &qa;
    let upper_num = &q2d - &cc * &qd - &qda + &cc * &qa;
    let upper_den = &q2d - &cc * &qda - &qd + &cc * &qa;
    Ok(BoundPair {
        lower: checked_ratio(lower_num, lower_den, q, alpha, delta, c)?,
        upper: checked_ratio(upper_num, upper_den, q, alpha, delta, c)?,
    })
}

/// Looser bounds with simpler closed forms.
pub fn bounds_simple(q: u64, alpha: u32, delta: u32, c: u128) -> Result<BoundPair> {
    let Powers { q: qb, c: cc, qd, qa } = powers(q, alpha, delta, c)?;
    let qda = Pow::pow(&qb, delta - alpha);
    let lower_den = &qd - 1;
    let upper_den = &qd * &qda - &cc * &qd - &qda;
    let lower = Rational::one() - checked_ratio(&cc * &qa, lower_den, q, alpha, delta, c)?;
    let upper = Rational::one() + checked_ratio(&cc * (&qd + 1) + &qda, upper_den, q, alpha, delta, c)?;
    Ok(BoundPair { lower, upper })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Uninformative,
    InformativeOnly,
    Weak,
    EpsilonStrong(Rational),
    Perfect,
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Uninformative => "uninformative",
            Classification::InformativeOnly => "informative-only",
            Classification::Weak => "weak",
            Classification::EpsilonStrong(_) => "epsilon-strong",
            Classification::Perfect => "perfect",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::EpsilonStrong(eps) => write!(f, "epsilon-strong({eps})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Classifies from the thresholds and the exact bounds only; never from
/// sampled posteriors.
pub fn classify(params: &Params, epsilon: &Rational) -> Classification {
    if params.c() == 1 {
        return Classification::Perfect;
    }
    let informative = is_informative(params);
    if informative && is_weakly_secure(params) {
        let strong = bounds_exact(params.q(), params.alpha(), params.delta(), params.c())
            .is_ok_and(|b| &b.epsilon() < epsilon);
        return if strong { Classification::EpsilonStrong(epsilon.clone()) } else { Classification::Weak };
    }
    if informative {
        Classification::InformativeOnly
    } else {
        Classification::Uninformative
    }
}

#[derive(Clone, Debug)]
pub struct SecurityReport {
    pub params: Params,
    pub prior: Rational,
    /// `None` when the bound denominators are not positive.
    pub exact_bounds: Option<BoundPair>,
    pub simple_bounds: Option<BoundPair>,
    pub classification: Classification,
    pub epsilon_achieved: Option<Rational>,
}

impl SecurityReport {
    pub fn new(params: &Params, epsilon: &Rational) -> SecurityReport {
        let (q, al, de, c) = (params.q(), params.alpha(), params.delta(), params.c());
        let exact = bounds_exact(q, al, de, c).ok();
        SecurityReport {
            params: params.clone(),
            prior: prior(params),
            epsilon_achieved: exact.as_ref().map(BoundPair::epsilon),
            simple_bounds: bounds_simple(q, al, de, c).ok(),
            exact_bounds: exact,
            classification: classify(params, epsilon),
        }
    }

    /// `key=value` pairs in a fixed order, for flat serialization.
    pub fn fields(&self, digits: u32, rounding: Rounding) -> Vec<(&'static str, String)> {
        let p = &self.params;
        let mut out = vec![
            ("a", p.a().to_string()),
            ("b", p.b().to_string()),
            ("c", p.c().to_string()),
            ("q", p.q().to_string()),
            ("alpha", p.alpha().to_string()),
            ("delta", p.delta().to_string()),
            ("prior", self.prior.to_string()),
        ];
        let na = || "n/a".to_string();
        for (name, pair) in [("exact", &self.exact_bounds), ("simple", &self.simple_bounds)] {
            let keys: [&'static str; 4] = if name == "exact" {
                ["exact_lower", "exact_upper", "exact_lower_dec", "exact_upper_dec"]
            } else {
                ["simple_lower", "simple_upper", "simple_lower_dec", "simple_upper_dec"]
            };
            match pair {
                Some(b) => {
                    let (lo, hi) = rounding.render_pair(b, digits);
                    out.extend([(keys[0], b.lower.to_string()), (keys[1], b.upper.to_string()), (keys[2], lo), (keys[3], hi)]);
                }
                None => out.extend(keys.map(|k| (k, na()))),
            }
        }
        out.push(("classification", self.classification.tag().to_string()));
        if let Classification::EpsilonStrong(eps) = &self.classification {
            out.push(("epsilon", eps.to_string()));
        }
        out.push(("epsilon_achieved", self.epsilon_achieved.as_ref().map_or_else(na, |e| e.to_string())));
        out
    }
}

/// Direction of rounding at the last kept digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundMode {
    HalfUp,
    Down,
    Up,
}

/// Decimal rendering with exactly `digits` places.
pub fn format_decimal(x: &Rational, digits: u32, mode: RoundMode) -> String {
    let scale = int(Pow::pow(BigInt::from(10u32), digits));
    let scaled = x * &scale;
    let n = match mode {
        RoundMode::HalfUp => (scaled + ratio(1, 2)).floor(),
        RoundMode::Down => scaled.floor(),
        RoundMode::Up => scaled.ceil(),
    }
    .to_integer();
    let neg = n.is_negative();
    let digits_str = n.abs().to_string();
    let d = digits as usize;
    let padded = format!("{digits_str:0>width$}", width = d + 1);
    let (whole, frac) = padded.split_at(padded.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

/// How a bound pair is turned into decimals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Rounding {
    #[default]
    HalfUp,
    Truncate,
    /// Lower bound down, upper bound up.
    Outward,
}

impl Rounding {
    pub fn render_pair(self, b: &BoundPair, digits: u32) -> (String, String) {
        let (lo, hi) = match self {
            Rounding::HalfUp => (RoundMode::HalfUp, RoundMode::HalfUp),
            Rounding::Truncate => (RoundMode::Down, RoundMode::Down),
            Rounding::Outward => (RoundMode::Down, RoundMode::Up),
        };
        (format_decimal(&b.lower, digits, lo), format_decimal(&b.upper, digits, hi))
    }
}

impl std::str::FromStr for Rounding {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "half-up" => Ok(Rounding::HalfUp),
            "truncate" => Ok(Rounding::Truncate),
            "outward" => Ok(Rounding::Outward),
            _ => Err(format!("unknown rounding `{s}` (half-up, truncate, outward)")),
        }
    }
}

/// One point of the convergence check.
#[derive(Clone, Debug)]
pub struct ConvergencePoint {
    pub q: u64,
    pub c: u128,
    /// `max(1 - lower, upper - 1)` of the simple bounds.
    pub deviation: Rational,
    /// `q^ξ · deviation`, rounded to `f64` for display.
    pub scaled: f64,
}

/// Exact test of `q1^ξ·d1 <= k · q2^ξ·d2` for `ξ = n/d`, by raising both
/// sides to the power `d`.
pub fn scaled_at_most(xi: &Rational, left: &ConvergencePoint, k: &Rational, right: &ConvergencePoint) -> bool {
    let n = xi.numer().to_u32().expect("small xi numerator");
    let d = xi.denom().to_u32().expect("small xi denominator");
    let lhs = int(Pow::pow(BigInt::from(left.q), n)) * Pow::pow(&left.deviation, d);
    let rhs = Pow::pow(k, d) * int(Pow::pow(BigInt::from(right.q), n)) * Pow::pow(&right.deviation, d);
    lhs <= rhs
}

/// For each `q`, `c = floor(q^(δ-α-ξ))` and the simple-bound deviation.
pub fn convergence_rate_check(alpha: u32, delta: u32, xi: &Rational, qs: &[u64]) -> Result<Vec<ConvergencePoint>> {
    if alpha == 0 || alpha >= delta {
        return Err(SecurityError::BadDimensions { alpha, delta });
    }
    let gap = int(delta - alpha) - xi;
    if !xi.is_positive() || !gap.is_positive() || xi.numer().to_u32().is_none() || xi.denom().to_u32().is_none() {
        return Err(SecurityError::BadXi(xi.clone()));
    }
    let (r, s) = (gap.numer().to_u32().unwrap(), gap.denom().to_u32().unwrap());
    qs.iter()
        .map(|&q| {
            let c = Pow::pow(BigUint::from(q), r).nth_root(s);
            let c = c.to_u128().expect("c fits");
            let deviation = bounds_simple(q, alpha, delta, c)?.epsilon();
            let scaled = (q as f64).powf(xi.to_f64().unwrap()) * deviation.to_f64().unwrap_or(f64::NAN);
            Ok(ConvergencePoint { q, c, deviation, scaled })
        })
        .collect()
}
