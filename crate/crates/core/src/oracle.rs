//! Brute-force cross-checks at small scale.
//!
//! Nothing here uses the geometry module's enumeration, echelon forms or
//! point indexing: planes are built as raw point sets by spanning every
//! independent tuple of direction vectors and translating by every point,
//! using only field arithmetic. Caps are fixed and deliberately small.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::security::{avoid_counts_in, bounds_exact, prior, BoundPair, Rational, SecurityError};
use crate::strategy::{
    deal_random, is_informative, is_weakly_secure, sample_suitable_map, Announcement, Card, Hand, HandTable,
    Params, StrategyError,
};

/// Largest deck the oracle will touch.
pub const ORACLE_CAP: u64 = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{points} points exceed the oracle cap of {ORACLE_CAP}")]
    TooLarge { points: u128 },
    #[error("need 0 < alpha < delta (alpha={alpha}, delta={delta})")]
    BadDimensions { alpha: u32, delta: u32 },
    #[error("card {0} is in Cath's hand")]
    CardInCath(Card),
    #[error("no announced hand avoids Cath's cards")]
    NoSurvivingHand,
    #[error("equitability enumeration only runs for q=3, alpha=1, delta=2")]
    EquitabilityScope,
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Security(#[from] SecurityError),
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// Raw α-planes as sorted point-index sets (index = base-q digits, first
/// coordinate most significant).
pub type NaivePlaneSet = BTreeSet<Vec<u32>>;

fn check_cap(q: u64, delta: u32) -> Result<usize> {
    let points = (q as u128).checked_pow(delta).unwrap_or(u128::MAX);
    if points > ORACLE_CAP as u128 {
        return Err(OracleError::TooLarge { points });
    }
    Ok(points as usize)
}

struct Vectors {
    field: Field,
    delta: usize,
    all: Vec<Vec<FieldElement>>,
}

impl Vectors {
    fn new(field: &Field, delta: u32, n: usize) -> Vectors {
        let q = field.order() as usize;
        let all = (0..n)
            .map(|mut i| {
                let mut v = vec![field.zero(); delta as usize];
                for slot in v.iter_mut().rev() {
                    *slot = field.element((i % q) as u64).unwrap();
                    i /= q;
                }
                v
            })
            .collect();
        Vectors { field: field.clone(), delta: delta as usize, all }
    }

    fn index(&self, v: &[FieldElement]) -> u32 {
        let q = self.field.order();
        v.iter().fold(0, |acc, e| acc * q + e.value())
    }

    /// Every linear combination of `dirs`, as point indices.
    fn span(&self, dirs: &[&Vec<FieldElement>]) -> BTreeSet<u32> {
        let f = &self.field;
        let mut out = BTreeSet::new();
        let scalars = f.enumerate_elements();
        for coeffs in (0..dirs.len()).map(|_| scalars.iter().copied()).multi_cartesian_product() {
            let mut v = vec![f.zero(); self.delta];
            for (k, d) in coeffs.iter().zip(dirs) {
                for (slot, &x) in v.iter_mut().zip(d.iter()) {
                    *slot = f.add(*slot, f.mul(*k, x).unwrap()).unwrap();
                }
            }
            out.insert(self.index(&v));
        }
        out
    }

    fn translate(&self, set: &BTreeSet<u32>, offset: usize) -> Vec<u32> {
        let f = &self.field;
        let o = &self.all[offset];
        let mut pts: Vec<u32> = set
            .iter()
            .map(|&p| {
                let v: Vec<_> = self.all[p as usize].iter().zip(o).map(|(&a, &b)| f.add(a, b).unwrap()).collect();
                self.index(&v)
            })
            .collect();
        pts.sort_unstable();
        pts
    }
}

/// All α-planes of F_q^δ, deduplicated as point sets.
pub fn naive_enumerate_planes(field: &Field, delta: u32, alpha: u32) -> Result<NaivePlaneSet> {
    if alpha == 0 || alpha >= delta {
        return Err(OracleError::BadDimensions { alpha, delta });
    }
    let n = check_cap(field.order() as u64, delta)?;
    let vecs = Vectors::new(field, delta, n);
    let size = (field.order() as usize).pow(alpha);
    let mut spaces: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    // direction order never changes a span, so increasing tuples suffice
    for dirs in vecs.all[1..].iter().combinations(alpha as usize) {
        let span = vecs.span(&dirs);
        if span.len() == size {
            spaces.insert(span);
        }
    }
    let mut planes = NaivePlaneSet::new();
    for s in &spaces {
        for offset in 0..n {
            planes.insert(vecs.translate(s, offset));
        }
    }
    Ok(planes)
}

/// Plane count, planes through one point and planes through two points,
/// all by direct tally. Every point and pair is checked to agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveCounts {
    pub planes: u64,
    pub through_point: u64,
    pub through_pair: u64,
    pub uniform: bool,
}

pub fn naive_counts(field: &Field, delta: u32, alpha: u32) -> Result<NaiveCounts> {
    let planes = naive_enumerate_planes(field, delta, alpha)?;
    let n = check_cap(field.order() as u64, delta)?;
    let mut per_point = vec![0u64; n];
    let mut per_pair: HashMap<(u32, u32), u64> = HashMap::new();
    for pl in &planes {
        for &p in pl {
            per_point[p as usize] += 1;
        }
        for (&x, &y) in pl.iter().tuple_combinations() {
            *per_pair.entry((x, y)).or_default() += 1;
        }
    }
    let through_point = per_point[0];
    let through_pair = per_pair.get(&(0, 1)).copied().unwrap_or(0);
    let pairs = n * (n - 1) / 2;
    let uniform = per_point.iter().all(|&k| k == through_point)
        && per_pair.len() == pairs
        && per_pair.values().all(|&k| k == through_pair);
    Ok(NaiveCounts { planes: planes.len() as u64, through_point, through_pair, uniform })
}

/// The announced hands `f⁻¹[U]` as sorted card lists.
fn naive_hands(ann: &Announcement) -> Result<Vec<Vec<Card>>> {
    let space = ann.space();
    let planes = naive_enumerate_planes(space.field(), space.delta(), ann.alpha())?;
    Ok(planes
        .iter()
        .map(|pl| pl.iter().map(|&p| ann.card_at(p)).sorted_unstable().collect())
        .collect())
}

fn tally(hands: &[Vec<Card>], cath: &[bool]) -> (u64, Vec<u64>) {
    let mut through = vec![0u64; cath.len()];
    let mut avoiding = 0;
    for h in hands {
        if h.iter().any(|&c| cath[c as usize]) {
            continue;
        }
        avoiding += 1;
        for &c in h {
            through[c as usize] += 1;
        }
    }
    (avoiding, through)
}

fn mask(n: usize, cards: impl IntoIterator<Item = Card>) -> Vec<bool> {
    let mut m = vec![false; n];
    for c in cards {
        m[c as usize] = true;
    }
    m
}

/// `|𝒜_x ∖ C| / |𝒜 ∖ C|` from the materialized announcement.
pub fn naive_posterior(ann: &Announcement, cath: &Hand, x: Card) -> Result<Rational> {
    if cath.contains(&x) {
        return Err(OracleError::CardInCath(x));
    }
    let hands = naive_hands(ann)?;
    let (avoiding, through) = tally(&hands, &mask(ann.deck_size(), cath.iter().copied()));
    if avoiding == 0 {
        return Err(OracleError::NoSurvivingHand);
    }
    Ok(Rational::new(through[x as usize].into(), avoiding.into()))
}

/// Controls how much of a sweep is exhaustive.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Enumerate every Cath hand when there are at most this many.
    pub exhaustive_limit: u64,
    /// Otherwise draw this many Cath hands.
    pub samples: usize,
    /// Seeded random suitable maps swept in addition to the identity map.
    pub random_maps: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { exhaustive_limit: 20_000, samples: 10_000, random_maps: 3, seed: 0 }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128).min(u64::MAX as u128) as u64
}

/// Cath hands drawn from `pool`: all of them, or a seeded sample.
fn cath_hands(pool: &[Card], c: usize, cfg: &SweepConfig, salt: u64) -> (Vec<Vec<Card>>, bool) {
    if binomial(pool.len() as u64, c as u64) <= cfg.exhaustive_limit {
        return (pool.iter().copied().combinations(c).collect(), true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let hands = (0..cfg.samples)
        .map(|_| sample(&mut rng, pool.len(), c).into_iter().map(|i| pool[i]).sorted_unstable().collect())
        .collect();
    (hands, false)
}

/// Identity map plus `random_maps` seeded suitable maps, each tagged with
/// its seed.
fn sweep_maps(params: &Params, cfg: &SweepConfig) -> Result<Vec<(Option<u64>, Announcement)>> {
    let space = params.space()?;
    let mut maps = vec![(None, Announcement::identity(space, params.alpha())?)];
    for i in 0..cfg.random_maps as u64 {
        let seed = cfg.seed.wrapping_add(i);
        let deal = deal_random(params, seed)?;
        let m = sample_suitable_map(&deal.alice, params, seed)?;
        maps.push((Some(seed), m.announcement().clone()));
    }
    Ok(maps)
}

/// Where an extreme or a violation was observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// `None` for the identity assignment.
    pub map_seed: Option<u64>,
    pub cath: Vec<Card>,
    pub card: Card,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub params: Params,
    pub bounds: Option<BoundPair>,
    pub maps: usize,
    pub cath_hands: u64,
    pub cases: u64,
    pub exhaustive: bool,
    pub min: Option<(Rational, Witness)>,
    pub max: Option<(Rational, Witness)>,
    pub sandwich_violations: Vec<Witness>,
    pub weak_violations: Vec<Witness>,
    pub count_violations: Vec<Witness>,
    /// Cases where the main counting path disagrees with the brute force.
    pub mismatches: Vec<Witness>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.sandwich_violations.is_empty()
            && self.weak_violations.is_empty()
            && self.count_violations.is_empty()
            && self.mismatches.is_empty()
    }
}

/// Posterior ratios over Cath hands, cards and maps, checked against the
/// exact bounds, weak security and the per-card count inequalities.
///
/// Posteriors depend only on where `C` and `x` land, so the identity map
/// over all Cath hands already covers every map; the random maps exercise
/// the assignment layer.
pub fn exhaustive_security_sweep(params: &Params, cfg: &SweepConfig) -> Result<SweepReport> {
    let space = params.space()?;
    let n = check_cap(space.q(), space.delta())?;
    let bounds = bounds_exact(params.q(), params.alpha(), params.delta(), params.c()).ok();
    let prior = prior(params);
    let geo = naive_counts(space.field(), space.delta(), params.alpha())?;
    let (kappa, kappa2) = (geo.through_point as u128, geo.through_pair as u128);
    let c = params.c();
    let cosets = params.weak_bound();
    let weak = is_informative(params) && is_weakly_secure(params);

    let maps = sweep_maps(params, cfg)?;
    let pool: Vec<Card> = (0..n as Card).collect();
    let (caths, exhaustive) = cath_hands(&pool, c as usize, cfg, 1);
    let mut report = SweepReport {
        params: params.clone(),
        bounds: bounds.clone(),
        maps: maps.len(),
        cath_hands: caths.len() as u64,
        cases: 0,
        exhaustive,
        min: None,
        max: None,
        sandwich_violations: Vec::new(),
        weak_violations: Vec::new(),
        count_violations: Vec::new(),
        mismatches: Vec::new(),
    };
    for (map_seed, ann) in &maps {
        let hands = naive_hands(ann)?;
        let table = HandTable::new(ann)?;
        for cath in &caths {
            let (avoiding, through) = tally(&hands, &mask(n, cath.iter().copied()));
            let witness = |card| Witness { map_seed: *map_seed, cath: cath.clone(), card };
            let main = avoid_counts_in(&table, &cath.iter().copied().collect())?;
            if main.avoiding != avoiding || main.through != through {
                report.mismatches.push(witness(cath[0]));
            }
            let a_lo = kappa * cosets.saturating_sub(c);
            let a_hi = kappa * (cosets - 1);
            let avoid_ok = (avoiding as u128) >= a_lo && (avoiding as u128) <= a_hi;
            if !avoid_ok || (c == 1 && avoiding as u128 != a_hi) {
                report.count_violations.push(witness(cath[0]));
            }
            if avoiding == 0 {
                continue;
            }
            for x in (0..n as Card).filter(|x| cath.binary_search(x).is_err()) {
                report.cases += 1;
                let t = through[x as usize];
                let x_lo = kappa.saturating_sub(c * kappa2);
                let x_hi = kappa - kappa2;
                if (t as u128) < x_lo || t as u128 > x_hi || (c == 1 && t as u128 != x_hi) {
                    report.count_violations.push(witness(x));
                }
                if weak && !(0 < t && t < avoiding) {
                    report.weak_violations.push(witness(x));
                }
                let ratio = Rational::new(t.into(), avoiding.into()) / &prior;
                if let Some(b) = &bounds {
                    if weak && !b.contains(&ratio) {
                        report.sandwich_violations.push(witness(x));
                    }
                }
                if report.min.as_ref().is_none_or(|(m, _)| &ratio < m) {
                    report.min = Some((ratio.clone(), witness(x)));
                }
                if report.max.as_ref().is_none_or(|(m, _)| &ratio > m) {
                    report.max = Some((ratio, witness(x)));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct InformativeReport {
    pub params: Params,
    pub deals: u64,
    pub exhaustive: bool,
    pub failures: u64,
    /// First deal on which Bob cannot single out Alice's hand.
    pub counterexample: Option<crate::strategy::Deal>,
}

impl InformativeReport {
    pub fn informative(&self) -> bool {
        self.failures == 0
    }
}

/// Runs Bob's decoding on every deal (or a seeded sample) in which Alice's
/// hand is a plane under the identity map, plus deals under random maps.
/// Each outcome is also checked against a brute-force count of announced
/// hands disjoint from Bob's.
pub fn exhaustive_informative(params: &Params, cfg: &SweepConfig) -> Result<InformativeReport> {
    let space = params.space()?;
    let n = check_cap(space.q(), space.delta())?;
    let c = params.c() as usize;
    let mut report =
        InformativeReport { params: params.clone(), deals: 0, exhaustive: true, failures: 0, counterexample: None };
    for (salt, (_, ann)) in sweep_maps(params, cfg)?.into_iter().enumerate() {
        let hands = naive_hands(&ann)?;
        let table = HandTable::new(&ann)?;
        // when sampling, spread the sample budget over Alice's hands
        let per_hand = SweepConfig { samples: (cfg.samples / hands.len()).max(1), ..cfg.clone() };
        for (i, alice) in hands.iter().enumerate() {
            let pool: Vec<Card> = (0..n as Card).filter(|x| alice.binary_search(x).is_err()).collect();
            let (caths, exhaustive) = cath_hands(&pool, c, &per_hand, ((salt as u64) << 32) + i as u64 + 2);
            report.exhaustive &= exhaustive;
            for cath in caths {
                report.deals += 1;
                let cath: Hand = cath.into_iter().collect();
                let bob: Hand = pool.iter().copied().filter(|x| !cath.contains(x)).collect();
                let bob_mask = mask(n, bob.iter().copied());
                let disjoint = hands.iter().filter(|h| h.iter().all(|&x| !bob_mask[x as usize])).count();
                let decoded = table.decode(&bob);
                let alice_hand: Hand = alice.iter().copied().collect();
                let ok = decoded.as_ref() == Ok(&alice_hand);
                if ok != (disjoint == 1) {
                    return Err(OracleError::Strategy(StrategyError::InvalidMap(format!(
                        "decoder and brute force disagree on Bob's hand {bob:?}"
                    ))));
                }
                if !ok {
                    report.failures += 1;
                    report.counterexample.get_or_insert(crate::strategy::Deal { alice: alice_hand, bob, cath });
                }
            }
        }
    }
    Ok(report)
}

/// Per-hand result of enumerating every suitable map.
#[derive(Clone, Debug)]
pub struct HandFibers {
    pub hand: Hand,
    pub maps: u64,
    pub announcements: u64,
    pub fiber_sizes: BTreeSet<u64>,
}

#[derive(Clone, Debug)]
pub struct EquitabilityReport {
    pub hands: Vec<HandFibers>,
    /// Relabelling cards by a permutation taking the first hand to each
    /// other hand carries announcement sets onto each other.
    pub permutation_ok: bool,
}

impl EquitabilityReport {
    pub fn equitable(&self) -> bool {
        let first = &self.hands[0];
        self.permutation_ok
            && self.hands.iter().all(|h| {
                h.fiber_sizes.len() == 1 && h.fiber_sizes == first.fiber_sizes && h.announcements == first.announcements
            })
    }
}

/// An announcement as the sorted list of its hands' card bitmasks.
type AnnouncementKey = Vec<u16>;

fn announcements_for(hand: &Hand, lines: &NaivePlaneSet, n: usize) -> (u64, HashMap<AnnouncementKey, u64>) {
    let others: Vec<Card> = (0..n as Card).filter(|c| !hand.contains(c)).collect();
    let own: Vec<Card> = hand.iter().copied().collect();
    let own_perms: Vec<Vec<Card>> = own.iter().copied().permutations(own.len()).collect();
    let mut fibers: HashMap<AnnouncementKey, u64> = HashMap::new();
    let mut maps = 0;
    let mut point_to_card = vec![0 as Card; n];
    for line in lines {
        let rest: Vec<u32> = (0..n as u32).filter(|p| line.binary_search(p).is_err()).collect();
        for perm in &own_perms {
            for (&p, &card) in line.iter().zip(perm) {
                point_to_card[p as usize] = card;
            }
            for other in others.iter().copied().permutations(others.len()) {
                for (&p, card) in rest.iter().zip(other) {
                    point_to_card[p as usize] = card;
                }
                maps += 1;
                let key: AnnouncementKey = lines
                    .iter()
                    .map(|l| l.iter().fold(0u16, |m, &p| m | 1 << point_to_card[p as usize]))
                    .sorted_unstable()
                    .collect();
                *fibers.entry(key).or_default() += 1;
            }
        }
    }
    (maps, fibers)
}

/// A card permutation with `σ[from] = to`, identity-like elsewhere.
fn carrying(from: &Hand, to: &Hand, n: usize) -> Vec<Card> {
    let mut sigma: Vec<Card> = vec![Card::MAX; n];
    for (&x, &y) in from.iter().zip(to) {
        sigma[x as usize] = y;
    }
    let rest_from = (0..n as Card).filter(|c| !from.contains(c));
    let rest_to = (0..n as Card).filter(|c| !to.contains(c));
    for (x, y) in rest_from.zip(rest_to) {
        sigma[x as usize] = y;
    }
    sigma
}

/// Enumerates every suitable map for each hand at `q=3, α=1, δ=2`, groups
/// them by announced hand set and compares fiber sizes across hands.
pub fn exhaustive_equitability(q: u64, alpha: u32, delta: u32, hands: &[Hand]) -> Result<EquitabilityReport> {
    if (q, alpha, delta) != (3, 1, 2) || hands.is_empty() {
        return Err(OracleError::EquitabilityScope);
    }
    let field = Field::with_order(q).map_err(|e| OracleError::Strategy(e.into()))?;
    let lines = naive_enumerate_planes(&field, delta, alpha)?;
    let n = 9;
    let mut out = Vec::new();
    let mut sets = Vec::new();
    for hand in hands {
        if hand.len() != 3 || hand.iter().any(|&c| c as usize >= n) {
            return Err(OracleError::Strategy(StrategyError::BadHandSize { expected: 3, found: hand.len() }));
        }
        let (maps, fibers) = announcements_for(hand, &lines, n);
        out.push(HandFibers {
            hand: hand.clone(),
            maps,
            announcements: fibers.len() as u64,
            fiber_sizes: fibers.values().copied().collect(),
        });
        sets.push(fibers.into_keys().collect::<BTreeSet<_>>());
    }
    let relabel = |key: &AnnouncementKey, sigma: &[Card]| -> AnnouncementKey {
        key.iter()
            .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).fold(0u16, |acc, i| acc | 1 << sigma[i]))
            .sorted_unstable()
            .collect()
    };
    let permutation_ok = hands.iter().zip(&sets).skip(1).all(|(h, set)| {
        let sigma = carrying(&hands[0], h, n);
        sets[0].iter().map(|k| relabel(k, &sigma)).collect::<BTreeSet<_>>() == *set
    });
    Ok(EquitabilityReport { hands: out, permutation_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn naive_plane_counts() {
        let lines = naive_enumerate_planes(&field(3), 2, 1).unwrap();
        assert_eq!(lines.len(), 12);
        assert!(lines.iter().all(|l| l.len() == 3));
        assert_eq!(naive_enumerate_planes(&field(7), 2, 1).unwrap().len(), 56);
        let planes = naive_enumerate_planes(&field(2), 3, 2).unwrap();
        assert_eq!(planes.len(), 14);
        assert!(planes.iter().all(|p| p.len() == 4));
        assert!(matches!(naive_enumerate_planes(&field(2), 12, 1), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn naive_incidences() {
        let k = naive_counts(&field(7), 2, 1).unwrap();
        assert_eq!((k.planes, k.through_point, k.through_pair, k.uniform), (56, 8, 1, true));
        let k = naive_counts(&field(3), 3, 2).unwrap();
        assert_eq!((k.planes, k.through_point, k.through_pair, k.uniform), (39, 13, 4, true));
    }

    #[test]
    fn naive_posterior_example() {
        let space = Params::new(7, 1, 2, 5).unwrap().space().unwrap();
        let ann = Announcement::identity(space, 1).unwrap();
        let cath: Hand = (0..5).collect();
        assert_eq!(naive_posterior(&ann, &cath, 5).unwrap(), Rational::new(7.into(), 20.into()));
        assert_eq!(naive_posterior(&ann, &cath, 24).unwrap(), Rational::new(3.into(), 20.into()));
        assert_eq!(naive_posterior(&ann, &cath, 0), Err(OracleError::CardInCath(0)));
    }

    #[test]
    fn informative_small() {
        let cfg = SweepConfig { random_maps: 2, ..SweepConfig::default() };
        let r = exhaustive_informative(&Params::new(3, 1, 2, 1).unwrap(), &cfg).unwrap();
        assert!(r.informative() && r.exhaustive);
        let r = exhaustive_informative(&Params::new(3, 1, 2, 2).unwrap(), &cfg).unwrap();
        assert!(!r.informative());
        let deal = r.counterexample.unwrap();
        assert_eq!((deal.alice.len(), deal.bob.len(), deal.cath.len()), (3, 4, 2));
    }

    #[test]
    fn sweep_small() {
        let cfg = SweepConfig { random_maps: 2, ..SweepConfig::default() };
        let r = exhaustive_security_sweep(&Params::new(4, 1, 2, 2).unwrap(), &cfg).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.exhaustive);
        let r = exhaustive_security_sweep(&Params::new(3, 1, 2, 1).unwrap(), &cfg).unwrap();
        assert!(r.passed());
        let one = Rational::from_integer(1.into());
        assert_eq!((r.min.unwrap().0, r.max.unwrap().0), (one.clone(), one));
    }

    #[test]
    fn sampled_cath_hands_are_seeded() {
        let cfg = SweepConfig { exhaustive_limit: 10, samples: 5, random_maps: 0, seed: 3 };
        let pool: Vec<Card> = (0..20).collect();
        let (a, ex) = cath_hands(&pool, 3, &cfg, 1);
        let (b, _) = cath_hands(&pool, 3, &cfg, 1);
        assert!(!ex);
        assert_eq!(a, b);
        assert!(a.iter().all(|h| h.len() == 3 && h.windows(2).all(|w| w[0] < w[1])));
    }
}
