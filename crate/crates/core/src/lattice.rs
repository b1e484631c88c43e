//! Boolean-lattice primitives.
//!
//! An [`ElementSet`] is a subset of the ground set `S = {s1, ..., sn}` packed
//! into one machine word, so `n` is capped at 64. Its textual form is the
//! characteristic vector with `s1` as the leftmost character.
//!
//! A [`RestrictionSet`] is an antichain of elements that removes intervals
//! from the search space: a lower restriction `L` removes `[∅, L]`, an upper
//! restriction `U` removes `[U, S]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest supported ground-set size.
pub const MAX_DEGREE: usize = 64;

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the ground set, stored as a fixed-width bit vector.
///
/// Bit `i` is set iff feature `s_{i+1}` belongs to the subset.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: u64,
    width: u8,
}

impl ElementSet {
    /// The empty subset of a ground set with `n` features.
    pub fn empty(n: usize) -> Self {
        Self::from_bits(0, n)
    }

    /// The whole ground set `S`.
    pub fn full(n: usize) -> Self {
        Self::from_bits(full_mask(n), n)
    }

    /// Builds an element from raw bits. Panics when `n` is out of range or a
    /// bit at index `>= n` is set.
    pub fn from_bits(bits: u64, n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} outside 1..={MAX_DEGREE}");
        assert!(bits & !full_mask(n) == 0, "bits {bits:#x} exceed width {n}");
        Self { bits, width: n as u8 }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, n: usize) -> Self {
        let bits = indices.into_iter().fold(0u64, |acc, i| {
            assert!(i < n, "index {i} out of range for width {n}");
            acc | (1 << i)
        });
        Self::from_bits(bits, n)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn width(self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.width())
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < self.width() && self.bits >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < self.width());
        Self {
            bits: self.bits | 1 << i,
            ..self
        }
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        debug_assert!(i < self.width());
        Self {
            bits: self.bits & !(1 << i),
            ..self
        }
    }

    #[inline]
    pub fn toggled(self, i: usize) -> Self {
        debug_assert!(i < self.width());
        Self {
            bits: self.bits ^ 1 << i,
            ..self
        }
    }

    #[inline]
    pub fn complement(self) -> Self {
        Self {
            bits: !self.bits & full_mask(self.width()),
            ..self
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        self.check_width(other);
        Self {
            bits: self.bits | other.bits,
            ..self
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        self.check_width(other);
        Self {
            bits: self.bits & other.bits,
            ..self
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        self.check_width(other);
        Self {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    /// Lowest feature index in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Feature indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// `true` when the two elements differ in exactly one feature.
    #[inline]
    pub fn is_adjacent(self, other: Self) -> bool {
        self.check_width(other);
        (self.bits ^ other.bits).count_ones() == 1
    }

    #[inline]
    pub(crate) fn check_width(self, other: Self) {
        assert_eq!(
            self.width, other.width,
            "element width mismatch ({} vs {})",
            self.width, other.width
        );
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by width, then lexicographically by characteristic vector.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.width())
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        f.pad(&s)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementSet({self})")
    }
}

impl FromStr for ElementSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let n = s.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidElement(format!(
                "{s:?}: length must be in 1..={MAX_DEGREE}"
            )));
        }
        let mut bits = 0u64;
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => bits |= 1 << i,
                _ => {
                    return Err(Error::InvalidElement(format!(
                        "{s:?}: unexpected character at position {i}"
                    )))
                }
            }
        }
        Ok(Self::from_bits(bits, n))
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All elements at Hamming distance one from `x`, by ascending feature index.
pub fn adjacent_elements(x: ElementSet) -> Vec<ElementSet> {
    (0..x.width()).map(|i| x.toggled(i)).collect()
}

/// Which interval a restriction removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Removes `[∅, R]`.
    Lower,
    /// Removes `[R, S]`.
    Upper,
}

/// An antichain of restrictions sharing one orientation.
///
/// Every update keeps the antichain property: no member contains another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionSet {
    orientation: Orientation,
    width: u8,
    members: Vec<u64>,
}

impl RestrictionSet {
    pub fn new(orientation: Orientation, n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n));
        Self {
            orientation,
            width: n as u8,
            members: Vec::new(),
        }
    }

    pub fn lower(n: usize) -> Self {
        Self::new(Orientation::Lower, n)
    }

    pub fn upper(n: usize) -> Self {
        Self::new(Orientation::Upper, n)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = ElementSet> + '_ {
        let n = self.width();
        self.members.iter().map(move |&b| ElementSet::from_bits(b, n))
    }

    /// Whether some member's interval contains `x`.
    pub fn covers(&self, x: ElementSet) -> bool {
        assert_eq!(x.width(), self.width(), "element width mismatch");
        let x = x.bits();
        match self.orientation {
            Orientation::Lower => self.members.iter().any(|&r| x & !r == 0),
            Orientation::Upper => self.members.iter().any(|&r| r & !x == 0),
        }
    }

    /// Inserts `x` unless it is already covered, dropping every member that
    /// `x` now dominates. Returns whether the set changed.
    pub fn update(&mut self, x: ElementSet) -> bool {
        if self.covers(x) {
            return false;
        }
        let x = x.bits();
        // x is not covered, so every member it dominates is a proper one.
        match self.orientation {
            Orientation::Lower => self.members.retain(|&r| r & !x != 0),
            Orientation::Upper => self.members.retain(|&r| x & !r != 0),
        }
        self.members.push(x);
        true
    }
}

/// A minimal element of `P(S)` minus the intervals removed by `lower`, or
/// `None` when nothing remains.
///
/// Starts at `S` and clears bits in ascending index order whenever the
/// smaller element stays uncovered. Lower coverage is downward closed, so a
/// single pass reaches a fixpoint whose lower neighbours are all covered.
pub fn minimal_element(lower: &RestrictionSet) -> Option<ElementSet> {
    assert_eq!(lower.orientation(), Orientation::Lower);
    let mut x = ElementSet::full(lower.width());
    if lower.covers(x) {
        return None;
    }
    for i in 0..lower.width() {
        let y = x.without(i);
        if !lower.covers(y) {
            x = y;
        }
    }
    Some(x)
}

/// Dual of [`minimal_element`]: a maximal element of `P(S)` minus the
/// intervals removed by `upper`.
pub fn maximal_element(upper: &RestrictionSet) -> Option<ElementSet> {
    assert_eq!(upper.orientation(), Orientation::Upper);
    let mut x = ElementSet::empty(upper.width());
    if upper.covers(x) {
        return None;
    }
    for i in 0..upper.width() {
        let y = x.with(i);
        if !upper.covers(y) {
            x = y;
        }
    }
    Some(x)
}

/// Membership in the current search space `X(lower, upper)`.
pub fn in_current_space(lower: &RestrictionSet, upper: &RestrictionSet, x: ElementSet) -> bool {
    !lower.covers(x) && !upper.covers(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> ElementSet {
        s.parse().unwrap()
    }

    fn restr(o: Orientation, items: &[&str]) -> RestrictionSet {
        let n = items.first().map_or(2, |s| s.len());
        let mut r = RestrictionSet::new(o, n);
        for s in items {
            r.update(e(s));
        }
        r
    }

    #[test]
    fn text_form_is_leftmost_first() {
        let x = e("0110");
        assert_eq!(x.bits(), 0b0110);
        assert!(x.contains(1) && x.contains(2));
        assert_eq!(e("1000").bits(), 1);
        assert_eq!(x.to_string(), "0110");
        assert!("01a".parse::<ElementSet>().is_err());
        assert!("".parse::<ElementSet>().is_err());
    }

    #[test]
    fn ordering_follows_characteristic_vector() {
        let mut v = [e("110"), e("001"), e("100"), e("000")];
        v.sort();
        let s: Vec<_> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["000", "001", "100", "110"]);
    }

    #[test]
    fn covers_examples() {
        let l = restr(Orientation::Lower, &["1110"]);
        assert!(l.covers(e("0110")));
        assert!(!l.covers(e("0001")));
        let u = restr(Orientation::Upper, &["01000"]);
        assert!(u.covers(e("01100")));
    }

    #[test]
    #[should_panic(expected = "width mismatch")]
    fn covers_rejects_width_mismatch() {
        restr(Orientation::Lower, &["1110"]).covers(e("011"));
    }

    #[test]
    fn update_examples() {
        let mut l = restr(Orientation::Lower, &["0110"]);
        assert!(l.update(e("0111")));
        assert_eq!(l.members().collect::<Vec<_>>(), [e("0111")]);

        let mut l = restr(Orientation::Lower, &["1110"]);
        assert!(!l.update(e("0110")));
        assert_eq!(l.members().collect::<Vec<_>>(), [e("1110")]);

        let l = restr(Orientation::Lower, &["1000", "0100", "0011"]);
        let mut m: Vec<_> = l.members().collect();
        m.sort();
        assert_eq!(m, [e("0011"), e("0100"), e("1000")]);

        let mut u = restr(Orientation::Upper, &["0110"]);
        assert!(u.update(e("0100")));
        assert_eq!(u.members().collect::<Vec<_>>(), [e("0100")]);
    }

    #[test]
    fn minimal_element_examples() {
        assert_eq!(minimal_element(&RestrictionSet::lower(2)), Some(e("00")));
        assert_eq!(minimal_element(&restr(Orientation::Lower, &["11"])), None);
        assert_eq!(
            minimal_element(&restr(Orientation::Lower, &["10", "01"])),
            Some(e("11"))
        );
    }

    #[test]
    fn maximal_element_examples() {
        assert_eq!(maximal_element(&RestrictionSet::upper(2)), Some(e("11")));
        assert_eq!(maximal_element(&restr(Orientation::Upper, &["00"])), None);
        assert_eq!(
            maximal_element(&restr(Orientation::Upper, &["10", "01"])),
            Some(e("00"))
        );
    }

    #[test]
    fn current_space_examples() {
        let l = restr(Orientation::Lower, &["10"]);
        let u = restr(Orientation::Upper, &["01"]);
        assert!(!in_current_space(&l, &u, e("11")));
        assert!(in_current_space(&l, &RestrictionSet::upper(2), e("01")));
        assert!(!in_current_space(&l, &u, e("00")));
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(adjacent_elements(e("00")), [e("10"), e("01")]);
        assert_eq!(adjacent_elements(e("111")), [e("011"), e("101"), e("110")]);
    }

    #[test]
    fn width_64_is_supported() {
        let s = ElementSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
        assert_eq!(s.to_string().parse::<ElementSet>().unwrap(), s);
    }
}
