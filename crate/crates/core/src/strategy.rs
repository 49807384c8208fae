//! Deals, suitable maps and announcements of the geometric strategy.
//!
//! Cards are dense integers `0..q^δ`. A suitable map is a bijection from
//! cards to points of F_q^δ carrying Alice's hand onto an α-plane; its
//! public part, the [`Announcement`], determines the announced hand set
//! `{ f⁻¹[U] : U an α-plane }` without it ever being stored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{prime_power_decomposition, Field, FieldError};
use crate::geometry::{rref, AffinePlane, AffineSpace, GeometryError};

pub type Card = u32;
pub type Hand = BTreeSet<Card>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("need 0 < alpha < delta (alpha={alpha}, delta={delta})")]
    BadDimensions { alpha: u32, delta: u32 },
    #[error("Cath's hand size {c} must lie in 1..={max}")]
    HandTooLarge { c: u128, max: u128 },
    #[error("parameters overflow 128-bit arithmetic")]
    Overflow,
    #[error("hand has {found} cards, expected {expected}")]
    BadHandSize { expected: u128, found: usize },
    #[error("more than one announced hand avoids Bob's cards")]
    NotUnique,
    #[error("no announced hand avoids Bob's cards")]
    NoCandidate,
    #[error("invalid card assignment: {0}")]
    InvalidMap(String),
    #[error("invalid deal: {0}")]
    InvalidDeal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type Result<T> = std::result::Result<T, StrategyError>;

/// Hand sizes and thresholds of the geometric strategy for `(q, α, δ, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    q: u64,
    alpha: u32,
    delta: u32,
    a: u128,
    b: u128,
    c: u128,
    deck: u128,
    informative_bound: u128,
    weak_bound: u128,
}

impl Params {
    pub fn new(q: u64, alpha: u32, delta: u32, c: u128) -> Result<Params> {
        if prime_power_decomposition(q).is_none() {
            return Err(StrategyError::NotPrimePower(q));
        }
        if alpha == 0 || alpha >= delta {
            return Err(StrategyError::BadDimensions { alpha, delta });
        }
        let qq = q as u128;
        let pow = |e: u32| qq.checked_pow(e).ok_or(StrategyError::Overflow);
        let deck = pow(delta)?;
        let a = pow(alpha)?;
        let max = deck - a - 1;
        if c == 0 || c > max {
            return Err(StrategyError::HandTooLarge { c, max });
        }
        Ok(Params {
            q,
            alpha,
            delta,
            a,
            b: deck - a - c,
            c,
            deck,
            informative_bound: a - pow(alpha - 1)?,
            weak_bound: pow(delta - alpha)?,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn alpha(&self) -> u32 {
        self.alpha
    }
    pub fn delta(&self) -> u32 {
        self.delta
    }
    pub fn a(&self) -> u128 {
        self.a
    }
    pub fn b(&self) -> u128 {
        self.b
    }
    pub fn c(&self) -> u128 {
        self.c
    }
    pub fn deck_size(&self) -> u128 {
        self.deck
    }
    /// `q^α - q^(α-1)`: Bob decodes uniquely whenever `c` is below it.
    pub fn informative_bound(&self) -> u128 {
        self.informative_bound
    }
    /// `q^(δ-α)`: weak security holds whenever `c` is below it.
    pub fn weak_bound(&self) -> u128 {
        self.weak_bound
    }

    pub fn space(&self) -> Result<AffineSpace> {
        Ok(AffineSpace::new(Field::with_order(self.q)?, self.delta)?)
    }

    /// Deck size as `usize`, failing when it exceeds the point cap.
    fn enumerable_deck(&self) -> Result<usize> {
        Ok(self.space()?.ensure_enumerable()?)
    }
}

pub fn is_informative(params: &Params) -> bool {
    params.c < params.informative_bound
}

pub fn is_weakly_secure(params: &Params) -> bool {
    // q^(δ-α) < (q^δ - 1)/(q^α - 1), so the AC2 condition is implied
    debug_assert!(params.weak_bound * (params.a - 1) < params.deck - 1);
    params.c < params.weak_bound
}

/// Every `(q, α=1, δ=2, c)` with `1 <= c <= q-2`.
pub fn weak_tuples_line(q: u64) -> Result<Vec<Params>> {
    if prime_power_decomposition(q).is_none() {
        return Err(StrategyError::NotPrimePower(q));
    }
    (1..=(q as u128).saturating_sub(2)).map(|c| Params::new(q, 1, 2, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deal {
    pub alice: Hand,
    pub bob: Hand,
    pub cath: Hand,
}

impl Deal {
    /// Checks that the three hands partition `0..deck` with the given sizes.
    pub fn validate(&self, params: &Params) -> Result<()> {
        let sizes = [(params.a, &self.alice), (params.b, &self.bob), (params.c, &self.cath)];
        for (expected, hand) in sizes {
            if hand.len() as u128 != expected {
                return Err(StrategyError::BadHandSize { expected, found: hand.len() });
            }
        }
        let all: BTreeSet<Card> = self.alice.iter().chain(&self.bob).chain(&self.cath).copied().collect();
        if all.len() as u128 != params.deck || all.iter().any(|&x| x as u128 >= params.deck) {
            return Err(StrategyError::InvalidDeal("hands do not partition the deck".into()));
        }
        Ok(())
    }

    /// Three lines `A: ...`, `B: ...`, `C: ...` with sorted card ids.
    pub fn to_text(&self) -> String {
        let line = |tag: &str, h: &Hand| {
            let ids: Vec<String> = h.iter().map(|c| c.to_string()).collect();
            if ids.is_empty() {
                format!("{tag}:\n")
            } else {
                format!("{tag}: {}\n", ids.join(" "))
            }
        };
        [line("A", &self.alice), line("B", &self.bob), line("C", &self.cath)].concat()
    }

    pub fn from_text(text: &str) -> Result<Deal> {
        let mut hands: [Option<Hand>; 3] = [None, None, None];
        for raw in text.lines().filter(|l| !l.trim().is_empty()) {
            let (tag, rest) = raw.split_once(':').ok_or_else(|| StrategyError::Parse(raw.to_string()))?;
            let slot = match tag.trim() {
                "A" => 0,
                "B" => 1,
                "C" => 2,
                _ => return Err(StrategyError::Parse(raw.to_string())),
            };
            let hand = rest
                .split_whitespace()
                .map(|t| t.parse::<Card>().map_err(|_| StrategyError::Parse(raw.to_string())))
                .collect::<Result<Hand>>()?;
            if hands[slot].replace(hand).is_some() {
                return Err(StrategyError::Parse(format!("duplicate line {tag}")));
            }
        }
        let [Some(alice), Some(bob), Some(cath)] = hands else {
            return Err(StrategyError::Parse("expected lines A, B and C".into()));
        };
        Ok(Deal { alice, bob, cath })
    }
}

/// A uniformly random deal, deterministic per seed.
pub fn deal_random(params: &Params, seed: u64) -> Result<Deal> {
    let deck = params.enumerable_deck()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cards: Vec<Card> = (0..deck as Card).collect();
    cards.shuffle(&mut rng);
    let (a, c) = (params.a as usize, params.c as usize);
    Ok(Deal {
        alice: cards[..a].iter().copied().collect(),
        cath: cards[a..a + c].iter().copied().collect(),
        bob: cards[a + c..].iter().copied().collect(),
    })
}

/// The public part of a suitable map: the card-to-point bijection.
#[derive(Clone, Debug)]
pub struct Announcement {
    space: AffineSpace,
    alpha: u32,
    card_to_point: Vec<u32>,
    point_to_card: Vec<Card>,
}

impl PartialEq for Announcement {
    fn eq(&self, other: &Self) -> bool {
        self.space.q() == other.space.q()
            && self.space.delta() == other.space.delta()
            && self.alpha == other.alpha
            && self.card_to_point == other.card_to_point
    }
}

impl Eq for Announcement {}

impl Announcement {
    /// `card_to_point[card]` is the index of the point assigned to `card`.
    pub fn new(space: AffineSpace, alpha: u32, card_to_point: Vec<u32>) -> Result<Announcement> {
        let n = space.ensure_enumerable()?;
        if alpha == 0 || alpha >= space.delta() {
            return Err(StrategyError::BadDimensions { alpha, delta: space.delta() });
        }
        if card_to_point.len() != n {
            return Err(StrategyError::InvalidMap(format!("{} cards for {n} points", card_to_point.len())));
        }
        let mut point_to_card = vec![Card::MAX; n];
        for (card, &pt) in card_to_point.iter().enumerate() {
            let slot = point_to_card
                .get_mut(pt as usize)
                .ok_or_else(|| StrategyError::InvalidMap(format!("point {pt} out of range")))?;
            if *slot != Card::MAX {
                return Err(StrategyError::InvalidMap(format!("point {pt} assigned twice")));
            }
            *slot = card as Card;
        }
        Ok(Announcement { space, alpha, card_to_point, point_to_card })
    }

    /// Identity assignment: card `i` sits on point `i`.
    pub fn identity(space: AffineSpace, alpha: u32) -> Result<Announcement> {
        let n = space.ensure_enumerable()?;
        Announcement::new(space, alpha, (0..n as u32).collect())
    }

    pub fn space(&self) -> &AffineSpace {
        &self.space
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn deck_size(&self) -> usize {
        self.card_to_point.len()
    }

    pub fn point_of(&self, card: Card) -> u32 {
        self.card_to_point[card as usize]
    }

    pub fn card_at(&self, point: u32) -> Card {
        self.point_to_card[point as usize]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.card_to_point
    }

    /// The hand `f⁻¹[U]`.
    pub fn hand_of(&self, plane: &AffinePlane) -> Hand {
        self.space.plane_point_indices(plane).into_iter().map(|p| self.point_to_card[p as usize]).collect()
    }

    /// The announced hand set, one hand per α-plane in enumeration order.
    pub fn hands(&self) -> Result<Vec<Hand>> {
        Ok(self.space.enumerate_planes(self.alpha)?.map(|pl| self.hand_of(&pl)).collect())
    }

    /// Header `q alpha delta`, then one `card point-index` line per card.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.space.q(), self.alpha, self.space.delta());
        for (card, pt) in self.card_to_point.iter().enumerate() {
            writeln!(s, "{card} {pt}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Announcement> {
        let bad = |m: &str| StrategyError::Parse(m.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<u64> = lines
            .next()
            .ok_or_else(|| bad("missing header"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad header")))
            .collect::<Result<_>>()?;
        let [q, alpha, delta] = header[..] else { return Err(bad("header must be `q alpha delta`")) };
        let space = AffineSpace::new(Field::with_order(q)?, delta as u32)?;
        let n = space.ensure_enumerable()?;
        let mut assignment = vec![None; n];
        for line in lines {
            let mut it = line.split_whitespace().map(|t| t.parse::<u32>());
            let (Some(Ok(card)), Some(Ok(pt)), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(line));
            };
            let slot = assignment.get_mut(card as usize).ok_or_else(|| bad(line))?;
            if slot.replace(pt).is_some() {
                return Err(bad(&format!("card {card} listed twice")));
            }
        }
        let assignment = assignment.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| bad("missing cards"))?;
        Announcement::new(space, alpha as u32, assignment)
    }
}

/// A suitable map for Alice's hand: the announcement plus the α-plane her
/// hand is mapped onto.
#[derive(Clone, Debug)]
pub struct SuitableMap {
    params: Params,
    announcement: Announcement,
    alice_plane: AffinePlane,
}

impl SuitableMap {
    /// Fails unless the image of `alice` is an α-plane.
    pub fn new(params: Params, announcement: Announcement, alice: &Hand) -> Result<SuitableMap> {
        if alice.len() as u128 != params.a {
            return Err(StrategyError::BadHandSize { expected: params.a, found: alice.len() });
        }
        let space = announcement.space();
        if space.q() != params.q || space.delta() != params.delta || announcement.alpha != params.alpha {
            return Err(StrategyError::InvalidMap("announcement does not match parameters".into()));
        }
        let points: Vec<_> = alice.iter().map(|&c| space.point(announcement.point_of(c) as u64)).collect();
        let plane = space
            .plane_through(&points, params.alpha)?
            .ok_or_else(|| StrategyError::InvalidMap("Alice's hand is not an alpha-plane".into()))?;
        // the span is α-dimensional and has q^α = |A| points, so f[A] is the plane itself
        Ok(SuitableMap { params, announcement, alice_plane: plane })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn announcement(&self) -> &Announcement {
        &self.announcement
    }

    pub fn alice_plane(&self) -> &AffinePlane {
        &self.alice_plane
    }

    pub fn hands(&self) -> Result<Vec<Hand>> {
        self.announcement.hands()
    }
}

/// Uniformly random α-plane: a uniform α-space (all ordered bases are
/// equally likely) plus a uniform coset.
fn random_plane(space: &AffineSpace, alpha: u32, rng: &mut impl Rng) -> AffinePlane {
    let q = space.q() as u32;
    let d = space.delta() as usize;
    loop {
        let rows: Vec<Vec<u32>> = (0..alpha).map(|_| (0..d).map(|_| rng.gen_range(0..q)).collect()).collect();
        if rref(space.field(), rows.clone()).0.len() != alpha as usize {
            continue;
        }
        let f = space.field();
        let wrap = |r: &Vec<u32>| r.iter().map(|&c| f.element(c as u64).unwrap()).collect::<Vec<_>>();
        let rows: Vec<_> = rows.iter().map(wrap).collect();
        let offset = space.point(rng.gen_range(0..space.point_count() as u64));
        return space.plane_from_basis(&rows, &offset, alpha).unwrap().unwrap();
    }
}

/// Samples a suitable map for `alice`: a uniform α-plane, a uniform
/// bijection from her hand onto it and a uniform bijection of the rest.
pub fn sample_suitable_map(alice: &Hand, params: &Params, seed: u64) -> Result<SuitableMap> {
    if alice.len() as u128 != params.a {
        return Err(StrategyError::BadHandSize { expected: params.a, found: alice.len() });
    }
    let space = params.space()?;
    let n = space.ensure_enumerable()?;
    if alice.iter().any(|&c| c as usize >= n) {
        return Err(StrategyError::InvalidDeal("card outside the deck".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plane = random_plane(&space, params.alpha, &mut rng);
    let plane_pts = space.plane_point_indices(&plane);
    let on_plane: BTreeSet<u64> = plane_pts.iter().copied().collect();
    let mut other_pts: Vec<u64> = (0..n as u64).filter(|p| !on_plane.contains(p)).collect();

    let mut hand: Vec<Card> = alice.iter().copied().collect();
    hand.shuffle(&mut rng);
    other_pts.shuffle(&mut rng);
    let mut assignment = vec![0u32; n];
    for (&card, &pt) in hand.iter().zip(&plane_pts) {
        assignment[card as usize] = pt as u32;
    }
    let rest = (0..n as Card).filter(|c| !alice.contains(c));
    for (card, &pt) in rest.zip(&other_pts) {
        assignment[card as usize] = pt as u32;
    }
    let announcement = Announcement::new(space, params.alpha, assignment)?;
    Ok(SuitableMap { params: params.clone(), announcement, alice_plane: plane })
}

/// The announced hands of an announcement, materialized once as sorted
/// card lists in plane enumeration order.
#[derive(Clone, Debug)]
pub struct HandTable {
    deck: usize,
    hands: Vec<Vec<Card>>,
}

impl HandTable {
    pub fn new(ann: &Announcement) -> Result<HandTable> {
        let space = ann.space();
        let hands = space
            .enumerate_planes(ann.alpha)?
            .map(|pl| {
                let mut h: Vec<Card> = space.plane_point_indices(&pl).into_iter().map(|p| ann.card_at(p as u32)).collect();
                h.sort_unstable();
                h
            })
            .collect();
        Ok(HandTable { deck: ann.deck_size(), hands })
    }

    pub fn deck_size(&self) -> usize {
        self.deck
    }

    pub fn hands(&self) -> &[Vec<Card>] {
        &self.hands
    }

    /// Indicator vector of `cards` over the deck.
    pub fn mask(&self, cards: &Hand) -> Result<Vec<bool>> {
        let mut m = vec![false; self.deck];
        for &card in cards {
            *m.get_mut(card as usize)
                .ok_or_else(|| StrategyError::InvalidDeal(format!("card {card} outside the deck")))? = true;
        }
        Ok(m)
    }

    /// See [`bob_decode`].
    pub fn decode(&self, bob: &Hand) -> Result<Hand> {
        let held = self.mask(bob)?;
        let mut found = None;
        for h in &self.hands {
            if h.iter().any(|&c| held[c as usize]) {
                continue;
            }
            if found.is_some() {
                return Err(StrategyError::NotUnique);
            }
            found = Some(h);
        }
        found.map(|h| h.iter().copied().collect()).ok_or(StrategyError::NoCandidate)
    }
}

/// The unique announced hand disjoint from Bob's cards.
///
/// Hands are scanned in plane enumeration order; a second disjoint hand
/// aborts with `NotUnique`.
pub fn bob_decode(ann: &Announcement, bob: &Hand) -> Result<Hand> {
    HandTable::new(ann)?.decode(bob)
}

/// Bob's decode with the hand-size precondition checked against `params`.
pub fn bob_decode_checked(map: &SuitableMap, bob: &Hand) -> Result<Hand> {
    if bob.len() as u128 != map.params.b {
        return Err(StrategyError::BadHandSize { expected: map.params.b, found: bob.len() });
    }
    bob_decode(&map.announcement, bob)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{plane_count, small};

    #[test]
    fn params_examples() {
        let p = Params::new(7, 1, 2, 5).unwrap();
        assert_eq!((p.a(), p.b(), p.c()), (7, 37, 5));
        let p = Params::new(23, 1, 2, 2).unwrap();
        assert_eq!((p.a(), p.b(), p.c()), (23, 504, 2));
        assert!(matches!(Params::new(2, 1, 2, 4), Err(StrategyError::HandTooLarge { .. })));
        assert!(matches!(Params::new(6, 1, 2, 1), Err(StrategyError::NotPrimePower(6))));
        assert!(matches!(Params::new(7, 2, 2, 1), Err(StrategyError::BadDimensions { .. })));
        assert!(matches!(Params::new(7, 1, 2, 0), Err(StrategyError::HandTooLarge { .. })));
    }

    #[test]
    fn thresholds() {
        let p = |q, a, d, c| Params::new(q, a, d, c).unwrap();
        assert!(is_informative(&p(7, 1, 2, 5)));
        assert!(!is_informative(&p(7, 1, 2, 6)));
        assert!(is_informative(&p(23, 1, 2, 2)));
        assert!(is_weakly_secure(&p(7, 1, 2, 5)));
        assert!(!is_weakly_secure(&p(7, 1, 2, 7)));
        assert!(is_weakly_secure(&p(23, 2, 3, 2)));
    }

    #[test]
    fn weak_line_tuples() {
        let cs: Vec<u128> = weak_tuples_line(7).unwrap().iter().map(|p| p.c()).collect();
        assert_eq!(cs, vec![1, 2, 3, 4, 5]);
        let cs: Vec<u128> = weak_tuples_line(3).unwrap().iter().map(|p| p.c()).collect();
        assert_eq!(cs, vec![1]);
        for q in [3, 4, 5, 7, 8, 9] {
            assert!(weak_tuples_line(q).unwrap().iter().all(|p| is_informative(p) && is_weakly_secure(p)));
        }
    }

    #[test]
    fn random_deals() {
        let p = Params::new(7, 1, 2, 5).unwrap();
        let d = deal_random(&p, 42).unwrap();
        assert_eq!((d.alice.len(), d.bob.len(), d.cath.len()), (7, 37, 5));
        d.validate(&p).unwrap();
        assert_eq!(d, deal_random(&p, 42).unwrap());
        let other = deal_random(&p, 43).unwrap();
        assert_eq!((other.alice.len(), other.bob.len(), other.cath.len()), (7, 37, 5));
    }

    #[test]
    fn deal_text_round_trip() {
        let p = Params::new(5, 1, 2, 3).unwrap();
        let d = deal_random(&p, 7).unwrap();
        let text = d.to_text();
        assert!(text.starts_with("A: "));
        assert_eq!(Deal::from_text(&text).unwrap(), d);
        assert!(Deal::from_text("A: 1\nB: 2\n").is_err());
    }

    #[test]
    fn sampled_maps_are_suitable() {
        for (q, alpha, delta, c) in [(3, 1, 2, 1), (7, 1, 2, 5), (4, 2, 3, 3), (2, 1, 3, 1)] {
            let p = Params::new(q, alpha, delta, c).unwrap();
            for seed in 0..5 {
                let deal = deal_random(&p, seed).unwrap();
                let m = sample_suitable_map(&deal.alice, &p, seed + 100).unwrap();
                let space = m.announcement().space();
                for &card in &deal.alice {
                    let x = space.point(m.announcement().point_of(card) as u64);
                    assert!(space.contains(m.alice_plane(), &x).unwrap());
                }
                let mut seen = vec![false; p.deck_size() as usize];
                for &pt in m.announcement().assignment() {
                    assert!(!std::mem::replace(&mut seen[pt as usize], true));
                }
                // rebuilding from the public part recovers the same plane
                let again = SuitableMap::new(p.clone(), m.announcement().clone(), &deal.alice).unwrap();
                assert_eq!(again.alice_plane(), m.alice_plane());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let p = Params::new(5, 1, 2, 2).unwrap();
        let deal = deal_random(&p, 1).unwrap();
        let m1 = sample_suitable_map(&deal.alice, &p, 9).unwrap();
        let m2 = sample_suitable_map(&deal.alice, &p, 9).unwrap();
        assert_eq!(m1.announcement(), m2.announcement());
        assert!(matches!(
            sample_suitable_map(&Hand::from([0, 1]), &p, 0),
            Err(StrategyError::BadHandSize { .. })
        ));
    }

    #[test]
    fn announcement_hands_contain_alice() {
        for (q, expected) in [(7u64, 56usize), (3, 12)] {
            let p = Params::new(q, 1, 2, 1).unwrap();
            let deal = deal_random(&p, 3).unwrap();
            let m = sample_suitable_map(&deal.alice, &p, 4).unwrap();
            let hands = m.hands().unwrap();
            assert_eq!(hands.len(), expected);
            assert_eq!(hands.len() as u64, small(&plane_count(q, 2, 1).unwrap()));
            assert!(hands.iter().all(|h| h.len() as u64 == q));
            assert!(hands.contains(&deal.alice));
        }
    }

    #[test]
    fn bob_decodes_alice() {
        let p = Params::new(7, 1, 2, 5).unwrap();
        for seed in 0..10 {
            let deal = deal_random(&p, seed).unwrap();
            let m = sample_suitable_map(&deal.alice, &p, seed).unwrap();
            assert_eq!(bob_decode_checked(&m, &deal.bob).unwrap(), deal.alice);
        }
    }

    #[test]
    fn decode_ambiguity_when_cath_is_large() {
        // q=3: Alice holds the line y=0, Cath holds (1,1) and (2,2); the line
        // through (0,0),(1,1),(2,2) also avoids Bob.
        let p = Params::new(3, 1, 2, 2).unwrap();
        let space = p.space().unwrap();
        let ann = Announcement::identity(space.clone(), 1).unwrap();
        let idx = |x: u32, y: u32| x * 3 + y;
        let alice: Hand = [idx(0, 0), idx(1, 0), idx(2, 0)].into();
        let cath: Hand = [idx(1, 1), idx(2, 2)].into();
        let bob: Hand = (0..9).filter(|c| !alice.contains(c) && !cath.contains(c)).collect();
        assert_eq!(bob_decode(&ann, &bob), Err(StrategyError::NotUnique));
        assert_eq!(bob_decode(&ann, &(0..9).collect()), Err(StrategyError::NoCandidate));
    }

    #[test]
    fn announcement_text_round_trip() {
        let p = Params::new(4, 1, 2, 2).unwrap();
        let deal = deal_random(&p, 5).unwrap();
        let m = sample_suitable_map(&deal.alice, &p, 6).unwrap();
        let text = m.announcement().to_text();
        assert!(text.starts_with("4 1 2\n"));
        assert_eq!(text.lines().count(), 17);
        assert_eq!(&Announcement::from_text(&text).unwrap(), m.announcement());
        assert!(Announcement::from_text("4 1 2\n0 0\n1 0\n").is_err());
    }

    #[test]
    fn rejects_non_plane_hand() {
        let p = Params::new(3, 1, 2, 1).unwrap();
        let ann = Announcement::identity(p.space().unwrap(), 1).unwrap();
        // (0,0), (0,1), (1,0) are not collinear
        assert!(matches!(SuitableMap::new(p, ann, &[0, 1, 3].into()), Err(StrategyError::InvalidMap(_))));
    }
}
