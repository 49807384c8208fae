//! Parameter searches over prime powers and the three preset tables.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, ToPrimitive};
use thiserror::Error;

use crate::security::{bounds_exact, classify, BoundPair, Classification, Rational, Rounding, SecurityError};
use crate::strategy::{Params, StrategyError};

pub const DEFAULT_Q_CEILING: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search input: {0}")]
    BadInput(String),
    #[error("no qualifying prime power q <= {ceiling}")]
    NoneFound { ceiling: u64 },
    #[error("preset row {row} fails its constraints: {reason}")]
    PresetInvalid { row: usize, reason: String },
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Security(#[from] SecurityError),
}

pub type Result<T> = std::result::Result<T, SearchError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub n: u32,
}

/// All prime powers `q <= limit`, ascending.
pub fn prime_powers(limit: u64) -> Vec<PrimePower> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit as usize + 1];
    let mut out = Vec::new();
    for p in 2..=limit {
        if composite[p as usize] {
            continue;
        }
        let mut m = p * p;
        while m <= limit {
            composite[m as usize] = true;
            m += p;
        }
        let (mut q, mut n) = (p, 1);
        loop {
            out.push(PrimePower { q, p, n });
            match q.checked_mul(p) {
                Some(next) if next <= limit => (q, n) = (next, n + 1),
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// A fully evaluated `(a, b, c, q, α, δ)` tuple with its exact bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterTuple {
    pub params: Params,
    pub bounds: BoundPair,
    /// Cath-fraction or exponent used by the generator, if any.
    pub gamma: Option<Rational>,
}

impl ParameterTuple {
    pub fn new(params: Params, gamma: Option<Rational>) -> Result<ParameterTuple> {
        let bounds = bounds_exact(params.q(), params.alpha(), params.delta(), params.c())?;
        Ok(ParameterTuple { params, bounds, gamma })
    }

    pub fn a(&self) -> u128 {
        self.params.a()
    }
    pub fn b(&self) -> u128 {
        self.params.b()
    }
    pub fn c(&self) -> u128 {
        self.params.c()
    }
    pub fn q(&self) -> u64 {
        self.params.q()
    }
    pub fn alpha(&self) -> u32 {
        self.params.alpha()
    }
    pub fn delta(&self) -> u32 {
        self.params.delta()
    }

    pub fn rendered_bounds(&self, digits: u32, rounding: Rounding) -> (String, String) {
        rounding.render_pair(&self.bounds, digits)
    }

    /// Tab-separated: a, b, c, q, alpha, delta, lower, upper (as `num/den`),
    /// then both bounds as decimals.
    pub fn to_record(&self, digits: u32, rounding: Rounding) -> String {
        let (lo, hi) = self.rendered_bounds(digits, rounding);
        let frac = |r: &Rational| format!("{}/{}", r.numer(), r.denom());
        [
            self.a().to_string(),
            self.b().to_string(),
            self.c().to_string(),
            self.q().to_string(),
            self.alpha().to_string(),
            self.delta().to_string(),
            frac(&self.bounds.lower),
            frac(&self.bounds.upper),
            lo,
            hi,
        ]
        .join("\t")
    }
}

fn strong(params: &Params, epsilon: &Rational) -> bool {
    matches!(classify(params, epsilon), Classification::EpsilonStrong(_) | Classification::Perfect)
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(SearchError::BadInput(format!("epsilon must be positive, got {epsilon}")));
    }
    Ok(())
}

/// The least prime power `q <= ceiling` at which `(q, α, δ, c)` is
/// ε-strongly secure. Scans linearly; no monotonicity is assumed.
pub fn min_q_for_epsilon(c: u128, alpha: u32, delta: u32, epsilon: &Rational, ceiling: u64) -> Result<ParameterTuple> {
    if c < 2 {
        return Err(SearchError::BadInput("c must be at least 2 (c = 1 is perfectly secure for every q)".into()));
    }
    if alpha == 0 || alpha >= delta {
        return Err(StrategyError::BadDimensions { alpha, delta }.into());
    }
    check_epsilon(epsilon)?;
    for pp in prime_powers(ceiling) {
        let Ok(params) = Params::new(pp.q, alpha, delta, c) else { continue };
        if matches!(classify(&params, epsilon), Classification::EpsilonStrong(_)) {
            return ParameterTuple::new(params, None);
        }
    }
    Err(SearchError::NoneFound { ceiling })
}

fn ceil_rational(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Tuples with δ = 2α+1, α = ⌈1/β⌉ and, for each prime power q in turn,
/// the largest ε-strongly secure c; a tuple is emitted when c >= γa.
pub fn tuples_large_cath(
    gamma: &Rational,
    beta: &Rational,
    epsilon: &Rational,
    count: usize,
    ceiling: u64,
) -> Result<Vec<ParameterTuple>> {
    if !gamma.is_positive() || gamma >= &Rational::one() {
        return Err(SearchError::BadInput(format!("gamma must lie in (0,1), got {gamma}")));
    }
    if !beta.is_positive() {
        return Err(SearchError::BadInput(format!("beta must be positive, got {beta}")));
    }
    check_epsilon(epsilon)?;
    let alpha = ceil_rational(&beta.recip())
        .to_u32()
        .ok_or_else(|| SearchError::BadInput("beta too small".into()))?;
    let delta = 2 * alpha + 1;
    let mut out = Vec::new();
    for pp in prime_powers(ceiling) {
        if out.len() >= count {
            break;
        }
        let Ok(probe) = Params::new(pp.q, alpha, delta, 1) else { continue };
        let a = probe.a();
        let least = ceil_rational(&(gamma * Rational::from_integer(a.into()))).to_u128().unwrap_or(u128::MAX).max(1);
        let top = probe.informative_bound().min(probe.weak_bound()).saturating_sub(1);
        let mut c = top;
        while c >= least {
            let params = Params::new(pp.q, alpha, delta, c)?;
            if strong(&params, epsilon) {
                if below_power(params.b(), a, 2, beta) {
                    out.push(ParameterTuple::new(params, Some(gamma.clone()))?);
                }
                break;
            }
            c -= 1;
        }
    }
    if out.is_empty() {
        return Err(SearchError::NoneFound { ceiling });
    }
    Ok(out)
}

/// `b < a^(k + r)` for rational `r = n/d`, i.e. `b^d < a^(kd + n)`.
fn below_power(b: u128, a: u128, k: u32, r: &Rational) -> bool {
    let n = r.numer().to_u32().expect("small exponent");
    let d = r.denom().to_u32().expect("small exponent");
    Pow::pow(BigUint::from(b), d) < Pow::pow(BigUint::from(a), k * d + n)
}

/// `floor(a^γ)` for rational `γ = n/d`, computed as an integer root.
pub fn floor_power(a: u128, gamma: &Rational) -> u128 {
    let n = gamma.numer().to_u32().expect("small exponent");
    let d = gamma.denom().to_u32().expect("small exponent");
    Pow::pow(BigUint::from(a), n).nth_root(d).to_u128().expect("fits")
}

/// Shapes `(α, δ)` with `α <= 4`, `δ <= 3α` and `γ < δ/α - 1`.
pub fn small_bob_shapes(gamma: &Rational) -> Vec<(u32, u32)> {
    (1..=4u32)
        .flat_map(|alpha| (alpha + 1..=3 * alpha).map(move |delta| (alpha, delta)))
        .filter(|&(alpha, delta)| small_bob_shape_ok(gamma, alpha, delta))
        .collect()
}

/// Qualifying tuples of one shape, ascending in q.
struct ShapeStream<'a> {
    alpha: u32,
    delta: u32,
    gamma: &'a Rational,
    epsilon: &'a Rational,
    qs: std::slice::Iter<'a, PrimePower>,
}

impl Iterator for ShapeStream<'_> {
    type Item = Result<ParameterTuple>;

    fn next(&mut self) -> Option<Self::Item> {
        for pp in self.qs.by_ref() {
            let a = (pp.q as u128).checked_pow(self.alpha)?;
            let c = floor_power(a, self.gamma);
            if c < 2 {
                continue;
            }
            let params = match Params::new(pp.q, self.alpha, self.delta, c) {
                Ok(p) => p,
                Err(StrategyError::Overflow) => return None,
                Err(_) => continue,
            };
            if strong(&params, self.epsilon) {
                return Some(ParameterTuple::new(params, Some(self.gamma.clone())));
            }
        }
        None
    }
}

/// Tuples with `c = floor(a^γ) >= 2` over all admissible shapes (or the one
/// given), merged in order of deck size, then `a`, then shape.
pub fn tuples_small_bob(
    gamma: &Rational,
    epsilon: &Rational,
    count: usize,
    shape: Option<(u32, u32)>,
    ceiling: u64,
) -> Result<Vec<ParameterTuple>> {
    if !gamma.is_positive() || gamma >= &Rational::one() {
        return Err(SearchError::BadInput(format!("gamma must lie in (0,1), got {gamma}")));
    }
    check_epsilon(epsilon)?;
    let shapes = match shape {
        Some((alpha, delta)) => {
            if !small_bob_shape_ok(gamma, alpha, delta) {
                return Err(SearchError::BadInput(format!("shape alpha={alpha}, delta={delta} needs gamma < delta/alpha - 1")));
            }
            vec![(alpha, delta)]
        }
        None => small_bob_shapes(gamma),
    };
    let qs = prime_powers(ceiling);
    let mut streams: Vec<_> = shapes
        .iter()
        .map(|&(alpha, delta)| ShapeStream { alpha, delta, gamma, epsilon, qs: qs.iter() })
        .collect();
    let mut heads = streams.iter_mut().map(|s| s.next().transpose()).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    while out.len() < count {
        let key = |t: &ParameterTuple| (t.params.deck_size(), t.a());
        let Some(i) = (0..heads.len()).filter(|&i| heads[i].is_some()).min_by_key(|&i| key(heads[i].as_ref().unwrap()))
        else {
            break;
        };
        out.push(heads[i].take().unwrap());
        heads[i] = streams[i].next().transpose()?;
    }
    if out.is_empty() {
        return Err(SearchError::NoneFound { ceiling });
    }
    Ok(out)
}

fn small_bob_shape_ok(gamma: &Rational, alpha: u32, delta: u32) -> bool {
    alpha > 0 && delta > alpha && gamma * Rational::from_integer(alpha.into()) < Rational::from_integer((delta - alpha).into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Fig3,
    Fig4,
    Fig5,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Fig3, Preset::Fig4, Preset::Fig5];

    pub fn goldens(self) -> &'static [GoldenRow] {
        match self {
            Preset::Fig3 => FIG3,
            Preset::Fig4 => FIG4,
            Preset::Fig5 => FIG5,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
        })
    }
}

impl std::str::FromStr for Preset {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Preset::ALL.into_iter().find(|p| p.to_string() == s).ok_or_else(|| format!("unknown preset `{s}` (fig3, fig4, fig5)"))
    }
}

/// A published table row. `gamma` is `(numerator, denominator)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    pub q: u64,
    pub alpha: u32,
    pub delta: u32,
    pub gamma: Option<(u32, u32)>,
    pub lower: &'static str,
    pub upper: &'static str,
}

#[allow(clippy::too_many_arguments)]
const fn row(a: u128, b: u128, c: u128, q: u64, alpha: u32, delta: u32, gamma: Option<(u32, u32)>, lower: &'static str, upper: &'static str) -> GoldenRow {
    GoldenRow { a, b, c, q, alpha, delta, gamma, lower, upper }
}

const FIG3: &[GoldenRow] = &[
    row(23, 504, 2, 23, 1, 2, None, "0.9547", "1.0456"),
    row(43, 1803, 3, 43, 1, 2, None, "0.9524", "1.0488"),
    row(64, 4028, 4, 64, 1, 2, None, "0.9524", "1.0492"),
    row(529, 11636, 2, 23, 2, 3, None, "0.9545", "1.0475"),
    row(1849, 77655, 3, 43, 2, 3, None, "0.9523", "1.0499"),
    row(4096, 258044, 4, 64, 2, 3, None, "0.9523", "1.0499"),
    row(12167, 267672, 2, 23, 3, 4, None, "0.9545", "1.0476"),
    row(79507, 3339291, 3, 43, 3, 4, None, "0.9523", "1.0499"),
    row(262144, 16515068, 4, 64, 3, 4, None, "0.9523", "1.0499"),
];

// Row 2 is printed with q = 3^3, but a = 9 and alpha = 1 force q = 9.
const FIG4: &[GoldenRow] = &[
    row(8, 500, 4, 8, 1, 3, Some((1, 2)), "0.9527", "1.0438"),
    row(9, 715, 5, 9, 1, 3, Some((1, 2)), "0.9503", "1.0468"),
    row(11, 1316, 4, 11, 1, 3, Some((3, 10)), "0.9750", "1.0233"),
    row(13, 2180, 4, 13, 1, 3, Some((3, 10)), "0.9821", "1.0167"),
    row(17, 4881, 15, 17, 1, 3, Some((4, 5)), "0.9515", "1.0480"),
    row(19, 6836, 4, 19, 1, 3, Some((1, 5)), "0.9916", "1.0079"),
    row(49, 16743, 15, 7, 2, 5, Some((3, 10)), "0.9591", "1.0418"),
    row(125, 77974, 26, 5, 3, 7, Some((1, 5)), "0.9599", "1.0414"),
];

const FIG5: &[GoldenRow] = &[
    row(16, 1004, 4, 4, 2, 5, Some((1, 2)), "0.9525", "1.0470"),
    row(25, 3095, 5, 5, 2, 5, Some((1, 2)), "0.9677", "1.0321"),
    row(27, 6524, 10, 3, 3, 8, Some((7, 10)), "0.9628", "1.0373"),
    row(107, 11336, 6, 107, 1, 2, Some((2, 5)), "0.9528", "1.0490"),
    row(529, 11636, 2, 23, 2, 3, Some((3, 20)), "0.9545", "1.0475"),
    row(529, 279289, 23, 23, 2, 4, Some((1, 2)), "0.9583", "1.0433"),
    row(11449, 1213588, 6, 107, 2, 3, Some((1, 5)), "0.9528", "1.0495"),
    row(6561, 4776375, 33, 9, 4, 7, Some((2, 5)), "0.9560", "1.0459"),
];

/// The target ε used by all three tables.
pub fn table_epsilon() -> Rational {
    Rational::new(1.into(), 20.into())
}

fn gamma_of(g: (u32, u32)) -> Rational {
    Rational::new(g.0.into(), g.1.into())
}

/// Regenerates a table. Figure 3 rows come from the least-q search; the
/// other two pin each row's `(q, α, δ, γ)` (and for Figure 4 also `c`) and
/// validate the generator's constraints.
pub fn table(preset: Preset, ceiling: u64) -> Result<Vec<ParameterTuple>> {
    let eps = table_epsilon();
    match preset {
        Preset::Fig3 => {
            let mut out = Vec::new();
            for alpha in 1..=3 {
                for c in 2..=4 {
                    out.push(min_q_for_epsilon(c, alpha, alpha + 1, &eps, ceiling)?);
                }
            }
            Ok(out)
        }
        Preset::Fig4 => FIG4
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let gamma = gamma_of(g.gamma.unwrap());
                let params = Params::new(g.q, g.alpha, 2 * g.alpha + 1, g.c)?;
                let invalid = |reason: String| SearchError::PresetInvalid { row: i + 1, reason };
                if Rational::from_integer(params.c().into()) < &gamma * Rational::from_integer(params.a().into()) {
                    return Err(invalid(format!("c={} below gamma*a", params.c())));
                }
                if !matches!(classify(&params, &eps), Classification::EpsilonStrong(_)) {
                    return Err(invalid("not epsilon-strong".into()));
                }
                ParameterTuple::new(params, Some(gamma))
            })
            .collect(),
        Preset::Fig5 => FIG5
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let gamma = gamma_of(g.gamma.unwrap());
                let invalid = |reason: String| SearchError::PresetInvalid { row: i + 1, reason };
                if !small_bob_shape_ok(&gamma, g.alpha, g.delta) {
                    return Err(invalid("gamma >= delta/alpha - 1".into()));
                }
                let a = (g.q as u128).pow(g.alpha);
                let params = Params::new(g.q, g.alpha, g.delta, floor_power(a, &gamma))?;
                if !matches!(classify(&params, &eps), Classification::EpsilonStrong(_)) {
                    return Err(invalid("not epsilon-strong".into()));
                }
                ParameterTuple::new(params, Some(gamma))
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// 1-based row number; 0 for a row-count mismatch.
    pub row: usize,
    pub field: &'static str,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} {}: expected {}, got {}", self.row, self.field, self.expected, self.found)
    }
}

/// Compares regenerated rows with the published ones at 4 decimals.
pub fn check_table(preset: Preset, rows: &[ParameterTuple], rounding: Rounding) -> Vec<Mismatch> {
    let goldens = preset.goldens();
    let mut out = Vec::new();
    if rows.len() != goldens.len() {
        out.push(Mismatch { row: 0, field: "rows", expected: goldens.len().to_string(), found: rows.len().to_string() });
    }
    for (i, (t, g)) in rows.iter().zip(goldens).enumerate() {
        let (lo, hi) = t.rendered_bounds(4, rounding);
        let fields: [(&'static str, String, String); 8] = [
            ("a", g.a.to_string(), t.a().to_string()),
            ("b", g.b.to_string(), t.b().to_string()),
            ("c", g.c.to_string(), t.c().to_string()),
            ("q", g.q.to_string(), t.q().to_string()),
            ("alpha", g.alpha.to_string(), t.alpha().to_string()),
            ("delta", g.delta.to_string(), t.delta().to_string()),
            ("lower", g.lower.to_string(), lo),
            ("upper", g.upper.to_string(), hi),
        ];
        for (field, expected, found) in fields {
            if expected != found {
                out.push(Mismatch { row: i + 1, field, expected, found });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::security::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn abc(t: &ParameterTuple) -> (u128, u128, u128) {
        (t.a(), t.b(), t.c())
    }

    #[test]
    fn prime_power_lists() {
        let qs: Vec<u64> = prime_powers(10).iter().map(|p| p.q).collect();
        assert_eq!(qs, vec![2, 3, 4, 5, 7, 8, 9]);
        let qs: Vec<u64> = prime_powers(64).iter().map(|p| p.q).collect();
        assert!(qs.contains(&64) && !qs.contains(&6) && !qs.contains(&10) && !qs.contains(&12));
        let pp = prime_powers(23);
        assert!(pp.contains(&PrimePower { q: 16, p: 2, n: 4 }));
        assert_eq!(pp.last().unwrap().q, 23);
        assert!(prime_powers(1).is_empty());
        for p in prime_powers(5000) {
            assert_eq!(crate::field::prime_power_decomposition(p.q), Some((p.p, p.n)));
        }
        let count = (2..=5000).filter(|&q| crate::field::prime_power_decomposition(q).is_some()).count();
        assert_eq!(prime_powers(5000).len(), count);
    }

    #[test]
    fn least_q() {
        let eps = r("1/20");
        for (c, q, b) in [(2, 23, 504), (3, 43, 1803), (4, 64, 4028)] {
            let t = min_q_for_epsilon(c, 1, 2, &eps, DEFAULT_Q_CEILING).unwrap();
            assert_eq!((t.q(), t.b()), (q, b));
            // the previous prime power fails
            let prev = prime_powers(q - 1).last().unwrap().q;
            let p = Params::new(prev, 1, 2, c).unwrap();
            assert!(!matches!(classify(&p, &eps), Classification::EpsilonStrong(_)));
        }
        assert!(matches!(min_q_for_epsilon(1, 1, 2, &eps, 100), Err(SearchError::BadInput(_))));
        assert_eq!(min_q_for_epsilon(4, 1, 2, &eps, 50), Err(SearchError::NoneFound { ceiling: 50 }));
    }

    #[test]
    fn large_cath_tuples() {
        let half = tuples_large_cath(&r("1/2"), &r("1"), &r("1/20"), 2, DEFAULT_Q_CEILING).unwrap();
        assert_eq!(half.iter().map(abc).collect::<Vec<_>>(), vec![(8, 500, 4), (9, 715, 5)]);
        let (lo, hi) = half[0].rendered_bounds(4, Rounding::HalfUp);
        assert_eq!((lo.as_str(), hi.as_str()), ("0.9527", "1.0438"));
        let big = tuples_large_cath(&r("4/5"), &r("1"), &r("1/20"), 3, DEFAULT_Q_CEILING).unwrap();
        assert!(big.iter().any(|t| abc(t) == (17, 4881, 15)));
        for t in half.iter().chain(&big) {
            assert!(t.c() < t.params.informative_bound());
            assert!(Rational::from_integer(t.c().into()) >= t.gamma.clone().unwrap() * Rational::from_integer(t.a().into()));
        }
        let wide = tuples_large_cath(&r("1/2"), &r("1/2"), &r("1/20"), 1, 200).unwrap();
        assert_eq!((wide[0].alpha(), wide[0].delta()), (2, 5));
    }

    #[test]
    fn small_bob_tuples() {
        let t = tuples_small_bob(&r("1/2"), &r("1/20"), 8, None, DEFAULT_Q_CEILING).unwrap();
        let got: Vec<_> = t.iter().map(|x| (abc(x), x.q(), x.alpha(), x.delta())).collect();
        assert_eq!(got[0], ((5, 118, 2), 5, 1, 3));
        assert_eq!(got[7], ((16, 1004, 4), 4, 2, 5));
        let t = tuples_small_bob(&r("1/2"), &r("1/20"), 1, Some((2, 5)), DEFAULT_Q_CEILING).unwrap();
        assert_eq!(abc(&t[0]), (16, 1004, 4));
        let t = tuples_small_bob(&r("2/5"), &r("1/20"), 1, Some((1, 2)), DEFAULT_Q_CEILING).unwrap();
        assert_eq!(abc(&t[0]), (107, 11336, 6));
        let t = tuples_small_bob(&r("2/5"), &r("1/20"), 20, None, 5000).unwrap();
        for w in t.windows(2) {
            assert!(w[0].params.deck_size() <= w[1].params.deck_size());
        }
        for x in &t {
            assert!(x.c() == floor_power(x.a(), &r("2/5")) && x.c() >= 2);
        }
        assert!(tuples_small_bob(&r("1/2"), &r("1/20"), 1, Some((2, 3)), 100).is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(floor_power(27, &r("7/10")), 10);
        assert_eq!(floor_power(6561, &r("2/5")), 33);
        assert_eq!(floor_power(16, &r("1/2")), 4);
        assert_eq!(floor_power(15, &r("1/2")), 3);
        assert!(small_bob_shapes(&r("1/2")).contains(&(2, 5)));
        assert!(!small_bob_shapes(&r("1/2")).contains(&(2, 3)));
        assert!(small_bob_shapes(&r("7/10")).contains(&(3, 8)));
    }

    #[test]
    fn tables_regenerate_structure() {
        for preset in Preset::ALL {
            let rows = table(preset, DEFAULT_Q_CEILING).unwrap();
            let structural: Vec<_> = check_table(preset, &rows, Rounding::Truncate)
                .into_iter()
                .filter(|m| !matches!(m.field, "lower" | "upper"))
                .collect();
            assert!(structural.is_empty(), "{preset}: {structural:?}");
        }
    }

    #[test]
    fn truncated_decimals() {
        // Figures 3 and 4 are printed truncated; Figure 5 rounds three upper bounds up
        for preset in [Preset::Fig3, Preset::Fig4] {
            let rows = table(preset, DEFAULT_Q_CEILING).unwrap();
            assert!(check_table(preset, &rows, Rounding::Truncate).is_empty());
        }
        let rows = table(Preset::Fig5, DEFAULT_Q_CEILING).unwrap();
        let bad: Vec<(usize, &str)> = check_table(Preset::Fig5, &rows, Rounding::Truncate).iter().map(|m| (m.row, m.field)).collect();
        assert_eq!(bad, vec![(1, "upper"), (2, "upper"), (3, "upper")]);
    }

    #[test]
    fn record_format() {
        let t = min_q_for_epsilon(2, 1, 2, &r("1/20"), 100).unwrap();
        assert_eq!(
            t.to_record(4, Rounding::HalfUp),
            "23\t504\t2\t23\t1\t2\t527/552\t527/504\t0.9547\t1.0456"
        );
    }
}
